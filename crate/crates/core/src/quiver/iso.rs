//! Isomorphism of bound quivers by backtracking search.

use std::collections::{BTreeMap, BTreeSet};

use super::BoundQuiverPresentation;

/// Index maps from the first presentation to the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertices: Vec<usize>,
    pub arrows: Vec<usize>,
}

fn signature(p: &BoundQuiverPresentation, v: usize) -> (usize, usize, usize) {
    let q = p.quiver();
    (
        q.arrows_from(v).count(),
        q.arrows_into(v).count(),
        q.arrows_from(v).filter(|&a| q.arrow(a).target == v).count(),
    )
}

fn arrows_between(p: &BoundQuiverPresentation) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut m: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, a) in p.quiver().arrows().iter().enumerate() {
        m.entry((a.source, a.target)).or_default().push(i);
    }
    m
}

struct Search<'a> {
    p: &'a BoundQuiverPresentation,
    q: &'a BoundQuiverPresentation,
    p_edges: BTreeMap<(usize, usize), Vec<usize>>,
    q_edges: BTreeMap<(usize, usize), Vec<usize>>,
    q_relations: BTreeSet<Vec<usize>>,
    order: Vec<usize>,
}

impl Search<'_> {
    fn count(edges: &BTreeMap<(usize, usize), Vec<usize>>, s: usize, t: usize) -> usize {
        edges.get(&(s, t)).map_or(0, Vec::len)
    }

    fn vertices(&self, depth: usize, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> Option<Isomorphism> {
        if depth == self.order.len() {
            let vmap: Vec<usize> = map.iter().map(|x| x.expect("complete")).collect();
            return self.arrows(&vmap);
        }
        let v = self.order[depth];
        let sig = signature(self.p, v);
        for w in 0..self.q.vertex_count() {
            if used[w] || signature(self.q, w) != sig {
                continue;
            }
            let consistent = (0..self.p.vertex_count()).all(|u| match map[u] {
                Some(u2) => {
                    Self::count(&self.p_edges, u, v) == Self::count(&self.q_edges, u2, w)
                        && Self::count(&self.p_edges, v, u) == Self::count(&self.q_edges, w, u2)
                }
                None => true,
            });
            if !consistent {
                continue;
            }
            map[v] = Some(w);
            used[w] = true;
            if let Some(iso) = self.vertices(depth + 1, map, used) {
                return Some(iso);
            }
            map[v] = None;
            used[w] = false;
        }
        None
    }

    fn arrows(&self, vmap: &[usize]) -> Option<Isomorphism> {
        let groups: Vec<(&Vec<usize>, &Vec<usize>)> = self
            .p_edges
            .iter()
            .map(|(&(s, t), arrows)| (arrows, &self.q_edges[&(vmap[s], vmap[t])]))
            .collect();
        let mut amap = vec![usize::MAX; self.p.arrow_count()];
        self.assign(&groups, 0, &mut amap).map(|arrows| Isomorphism {
            vertices: vmap.to_vec(),
            arrows,
        })
    }

    fn assign(&self, groups: &[(&Vec<usize>, &Vec<usize>)], g: usize, amap: &mut Vec<usize>) -> Option<Vec<usize>> {
        if g == groups.len() {
            let ok = self.p.relations().len() == self.q_relations.len()
                && self
                    .p
                    .relations()
                    .iter()
                    .all(|r| self.q_relations.contains(&r.iter().map(|&a| amap[a]).collect::<Vec<_>>()));
            return ok.then(|| amap.clone());
        }
        let (src, dst) = groups[g];
        let mut perm: Vec<usize> = (0..dst.len()).collect();
        loop {
            for (i, &a) in src.iter().enumerate() {
                amap[a] = dst[perm[i]];
            }
            if let Some(found) = self.assign(groups, g + 1, amap) {
                return Some(found);
            }
            if !next_permutation(&mut perm) {
                return None;
            }
        }
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let Some(i) = (0..xs.len() - 1).rev().find(|&i| xs[i] < xs[i + 1]) else {
        return false;
    };
    let j = (i + 1..xs.len()).rev().find(|&j| xs[j] > xs[i]).expect("exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// Finds an isomorphism of bound quivers (vertex and arrow bijections that
/// carry arrows to arrows and relations onto relations).
pub fn find_isomorphism(p: &BoundQuiverPresentation, q: &BoundQuiverPresentation) -> Option<Isomorphism> {
    if p.vertex_count() != q.vertex_count()
        || p.arrow_count() != q.arrow_count()
        || p.relations().len() != q.relations().len()
    {
        return None;
    }
    let mut p_sigs: Vec<_> = (0..p.vertex_count()).map(|v| signature(p, v)).collect();
    let mut q_sigs: Vec<_> = (0..q.vertex_count()).map(|v| signature(q, v)).collect();
    p_sigs.sort();
    q_sigs.sort();
    if p_sigs != q_sigs {
        return None;
    }
    // visit vertices adjacent to already-placed ones first, for early pruning
    let n = p.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let q = p.quiver();
                let touching = q
                    .arrows()
                    .iter()
                    .filter(|a| (a.source == v && placed[a.target]) || (a.target == v && placed[a.source]))
                    .count();
                (touching, std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    let search = Search {
        p,
        q,
        p_edges: arrows_between(p),
        q_edges: arrows_between(q),
        q_relations: q.relations().iter().cloned().collect(),
        order,
    };
    search.vertices(0, &mut vec![None; n], &mut vec![false; n])
}

pub fn is_isomorphic(p: &BoundQuiverPresentation, q: &BoundQuiverPresentation) -> bool {
    find_isomorphism(p, q).is_some()
}

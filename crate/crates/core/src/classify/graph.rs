//! Underlying-graph combinatorics: Betti number, the unique cycle, Dynkin type.

use std::collections::BTreeSet;

use crate::quiver::{component_vertex_sets, BoundQuiverPresentation, DynkinType};

/// First Betti number of the underlying undirected multigraph.
pub fn cycle_count(p: &BoundQuiverPresentation) -> usize {
    let components = component_vertex_sets(p).len();
    p.arrow_count() + components - p.vertex_count()
}

/// One step of a walk around the underlying cycle: an arrow and whether the
/// walk follows its orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Step {
    pub arrow: usize,
    pub forward: bool,
}

/// Arrows on cycles of the underlying graph, after repeatedly pruning leaves.
fn cyclic_core(p: &BoundQuiverPresentation) -> BTreeSet<usize> {
    let q = p.quiver();
    let mut alive: BTreeSet<usize> = (0..q.arrow_count()).collect();
    loop {
        let mut degree = vec![0usize; q.vertex_count()];
        for &a in &alive {
            degree[q.arrow(a).source] += 1;
            degree[q.arrow(a).target] += 1;
        }
        let before = alive.len();
        alive.retain(|&a| degree[q.arrow(a).source] > 1 && degree[q.arrow(a).target] > 1);
        if alive.len() == before {
            return alive;
        }
    }
}

/// Walk of the unique cycle, starting at its smallest vertex along its
/// smallest incident arrow. `None` unless the Betti number is exactly one.
pub(crate) fn unique_cycle(p: &BoundQuiverPresentation) -> Option<Vec<Step>> {
    if cycle_count(p) != 1 {
        return None;
    }
    let q = p.quiver();
    let core = cyclic_core(p);
    let start = core
        .iter()
        .map(|&a| q.arrow(a).source.min(q.arrow(a).target))
        .min()?;
    let mut unused = core.clone();
    let mut at = start;
    let mut walk = Vec::with_capacity(core.len());
    while let Some(&a) = unused
        .iter()
        .find(|&&a| q.arrow(a).source == at || q.arrow(a).target == at)
    {
        unused.remove(&a);
        let ar = q.arrow(a);
        let forward = ar.source == at;
        walk.push(Step { arrow: a, forward });
        at = if forward { ar.target } else { ar.source };
    }
    debug_assert!(unused.is_empty() && at == start);
    Some(walk)
}

/// Dynkin type of a connected underlying graph, if it is simply-laced ADE.
pub fn dynkin_type(p: &BoundQuiverPresentation) -> Option<DynkinType> {
    let n = p.vertex_count();
    if n == 0 || component_vertex_sets(p).len() != 1 || cycle_count(p) != 0 {
        return None;
    }
    let q = p.quiver();
    let mut adj = vec![Vec::new(); n];
    for a in q.arrows() {
        adj[a.source].push(a.target);
        adj[a.target].push(a.source);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() > 2).collect();
    match branch.as_slice() {
        [] => Some(DynkinType::A(n)),
        [c] if adj[*c].len() == 3 => {
            let mut arms: Vec<usize> = adj[*c]
                .iter()
                .map(|&first| {
                    let (mut prev, mut cur, mut len) = (*c, first, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, k] => Some(DynkinType::D(k + 3)),
                [1, 2, 2] => Some(DynkinType::E(6)),
                [1, 2, 3] => Some(DynkinType::E(7)),
                [1, 2, 4] => Some(DynkinType::E(8)),
                _ => None,
            }
        }
        _ => None,
    }
}

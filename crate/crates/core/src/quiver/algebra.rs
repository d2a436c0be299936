//! Path bases of monomial algebras.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use super::{BoundQuiverPresentation, Path, QuiverError};

/// Automaton state: the last few arrows of a relation-free path.
type State = Vec<usize>;
/// DFS frame: state, arrow used to enter it, successors still to visit.
type Frame = (State, usize, Vec<(usize, State)>);

struct PathAutomaton<'a> {
    p: &'a BoundQuiverPresentation,
    window: usize,
}

impl<'a> PathAutomaton<'a> {
    fn new(p: &'a BoundQuiverPresentation) -> Self {
        PathAutomaton {
            p,
            window: p.max_relation_len().saturating_sub(1).max(1),
        }
    }

    fn successors(&self, state: &State) -> Vec<(usize, State)> {
        let q = self.p.quiver();
        let end = q.arrow(*state.last().expect("states are nonempty")).target;
        q.arrows_from(end)
            .filter_map(|b| {
                let mut ext = state.clone();
                ext.push(b);
                let suffix_is_relation = self
                    .p
                    .relations()
                    .iter()
                    .any(|r| r.len() <= ext.len() && ext[ext.len() - r.len()..] == r[..]);
                if suffix_is_relation {
                    return None;
                }
                let keep = ext.len().min(self.window);
                Some((b, ext[ext.len() - keep..].to_vec()))
            })
            .collect()
    }

    /// A relation-free cycle, as the arrows traversed, if one exists.
    fn find_cycle(&self) -> Option<Vec<usize>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Open,
            Done,
        }
        let mut marks: HashMap<State, Mark> = HashMap::new();
        for a in 0..self.p.arrow_count() {
            let start = vec![a];
            if marks.contains_key(&start) {
                continue;
            }
            let mut stack: Vec<Frame> =
                vec![(start.clone(), a, self.successors(&start))];
            marks.insert(start, Mark::Open);
            while let Some(top) = stack.last_mut() {
                if let Some((arrow, next)) = top.2.pop() {
                    match marks.get(&next) {
                        Some(Mark::Open) => {
                            let pos = stack.iter().position(|f| f.0 == next).expect("open state on stack");
                            let mut cycle: Vec<usize> = stack[pos + 1..].iter().map(|f| f.1).collect();
                            cycle.push(arrow);
                            return Some(cycle);
                        }
                        Some(Mark::Done) => {}
                        None => {
                            marks.insert(next.clone(), Mark::Open);
                            let succ = self.successors(&next);
                            stack.push((next, arrow, succ));
                        }
                    }
                } else {
                    let (state, _, _) = stack.pop().expect("nonempty");
                    marks.insert(state, Mark::Done);
                }
            }
        }
        None
    }
}

/// All paths containing no relation as a contiguous subpath, ordered by
/// source vertex, then length, then arrows.
pub fn path_basis(p: &BoundQuiverPresentation) -> Result<Vec<Path>, QuiverError> {
    let automaton = PathAutomaton::new(p);
    if let Some(cycle) = automaton.find_cycle() {
        let rendered = p.render_path(&Path {
            source: p.quiver().arrow(cycle[0]).source,
            target: p.quiver().arrow(*cycle.last().expect("nonempty")).target,
            arrows: cycle,
        });
        return Err(QuiverError::InfiniteDimensional(rendered));
    }
    let q = p.quiver();
    let mut basis: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    let mut frontier: Vec<Path> = (0..q.arrow_count())
        .map(|a| Path {
            source: q.arrow(a).source,
            target: q.arrow(a).target,
            arrows: vec![a],
        })
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for path in &frontier {
            for b in q.arrows_from(path.target) {
                let mut arrows = path.arrows.clone();
                arrows.push(b);
                let longest = p.max_relation_len().min(arrows.len());
                let tail = &arrows[arrows.len() - longest..];
                if !p.contains_relation(tail) {
                    next.push(Path {
                        source: path.source,
                        target: q.arrow(b).target,
                        arrows,
                    });
                }
            }
        }
        basis.append(&mut frontier);
        frontier = next;
    }
    basis.sort_by(|x, y| (x.source, x.len(), &x.arrows).cmp(&(y.source, y.len(), &y.arrows)));
    Ok(basis)
}

/// Entry `(a, b)` counts basis paths from `a` to `b`.
pub fn cartan_matrix(p: &BoundQuiverPresentation) -> Result<Vec<Vec<usize>>, QuiverError> {
    let n = p.vertex_count();
    let mut c = vec![vec![0; n]; n];
    for path in path_basis(p)? {
        c[path.source][path.target] += 1;
    }
    Ok(c)
}

/// A finite-dimensional monomial algebra with its path basis and
/// multiplication. Products concatenate left to right.
#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    presentation: BoundQuiverPresentation,
    basis: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
    between: Vec<Vec<Vec<usize>>>,
    fingerprint: u64,
}

impl FiniteAlgebra {
    pub fn new(p: &BoundQuiverPresentation) -> Result<Self, QuiverError> {
        let basis = path_basis(p)?;
        let n = p.vertex_count();
        let mut between = vec![vec![Vec::new(); n]; n];
        let mut index = HashMap::new();
        for (i, path) in basis.iter().enumerate() {
            between[path.source][path.target].push(i);
            index.insert((path.source, path.arrows.clone()), i);
        }
        let mut h = DefaultHasher::new();
        super::serialize_presentation(p).hash(&mut h);
        Ok(FiniteAlgebra {
            presentation: p.clone(),
            basis,
            index,
            between,
            fingerprint: h.finish(),
        })
    }

    pub fn presentation(&self) -> &BoundQuiverPresentation {
        &self.presentation
    }

    pub fn vertex_count(&self) -> usize {
        self.presentation.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    /// Basis paths from `v` to `w`, i.e. a basis of `e_v A e_w`.
    pub fn paths_between(&self, v: usize, w: usize) -> &[usize] {
        &self.between[v][w]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.index[&(v, Vec::new())]
    }

    pub fn index_of(&self, path: &Path) -> Option<usize> {
        self.index.get(&(path.source, path.arrows.clone())).copied()
    }

    /// Basis element of a single arrow.
    pub fn arrow_element(&self, a: usize) -> usize {
        let ar = self.presentation.quiver().arrow(a);
        self.index[&(ar.source, vec![a])]
    }

    /// Product `i · j` (traverse `i`, then `j`); `None` when it vanishes.
    pub fn mul(&self, i: usize, j: usize) -> Option<usize> {
        let (x, y) = (&self.basis[i], &self.basis[j]);
        if x.target != y.source {
            return None;
        }
        if x.is_trivial() {
            return Some(j);
        }
        if y.is_trivial() {
            return Some(i);
        }
        let mut arrows = x.arrows.clone();
        arrows.extend_from_slice(&y.arrows);
        self.index.get(&(x.source, arrows)).copied()
    }

    /// Identifies the algebra; complexes and modules carry it to detect mixing.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn render(&self, i: usize) -> String {
        self.presentation.render_path(&self.basis[i])
    }
}

//! Quivers, paths, monomial relations and the Λ(r,s,t) family.
//!
//! Paths are written left to right in traversal order: the path `p q`
//! traverses `p` first and then `q`. A relation `a b` therefore says that
//! going along `a` and then immediately along `b` is zero.

mod algebra;
mod ids;
mod iso;
mod text;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use algebra::{cartan_matrix, path_basis, FiniteAlgebra};
pub use ids::natural_cmp;
pub use iso::{find_isomorphism, is_isomorphic, Isomorphism};
pub use text::{parse_presentation, serialize_presentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid id `{0}`")]
    InvalidId(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation `{0}` has length < 2")]
    RelationTooShort(String),
    #[error("relation `{path}` is not composable: `{first}` ends at `{end}` but `{second}` starts at `{start}`")]
    NotComposable {
        path: String,
        first: String,
        end: String,
        second: String,
        start: String,
    },
    #[error("line {line}, column {column}: {error}")]
    Located {
        line: usize,
        column: usize,
        error: Box<QuiverError>,
    },
    #[error("algebra is infinite-dimensional: relation-free cycle `{0}`")]
    InfiniteDimensional(String),
    #[error("invalid Λ descriptor (r={r}, s={s}, t={t}): need 1 <= r <= s")]
    InvalidDescriptor { r: usize, s: usize, t: usize },
    #[error("invalid Dynkin type {0}")]
    InvalidDynkin(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Loops and parallel arrows are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn has_loop_at(&self, v: usize) -> bool {
        self.arrows.iter().any(|a| a.source == v && a.target == v)
    }
}

/// A path in a quiver, as indices into its vertex and arrow lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    /// Same as [`Path::is_trivial`]: a path of length zero.
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Vertex ids, `(arrow, source, target)` triples and relations as arrow ids.
type RawParts = (Vec<String>, Vec<(String, String, String)>, Vec<Vec<String>>);

/// A quiver with monomial relations.
///
/// Always stored in canonical order (vertices, arrows and relations sorted
/// by natural id order), so structural equality is equality of presentations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BoundQuiverPresentation {
    quiver: Quiver,
    relations: Vec<Vec<usize>>,
}

impl BoundQuiverPresentation {
    /// Validates and canonicalizes a presentation given by ids.
    pub fn new<V, A, R>(vertices: V, arrows: A, relations: R) -> Result<Self, QuiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
        R: IntoIterator<Item = Vec<String>>,
    {
        let mut vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        for v in &vertices {
            if !ids::is_valid_id(v) {
                return Err(QuiverError::InvalidId(v.clone()));
            }
        }
        vertices.sort_by(|a, b| natural_cmp(a, b));
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(QuiverError::DuplicateVertex(w[0].clone()));
        }
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();

        let mut raw_arrows = arrows.into_iter().collect::<Vec<_>>();
        raw_arrows.sort_by(|a, b| natural_cmp(&a.0, &b.0));
        let mut arrow_list = Vec::with_capacity(raw_arrows.len());
        for (id, s, t) in raw_arrows {
            if !ids::is_valid_id(&id) {
                return Err(QuiverError::InvalidId(id));
            }
            if arrow_list.last().is_some_and(|a: &Arrow| a.id == id) {
                return Err(QuiverError::DuplicateArrow(id));
            }
            let source = *index.get(s.as_str()).ok_or(QuiverError::UnknownVertex(s.clone()))?;
            let target = *index.get(t.as_str()).ok_or(QuiverError::UnknownVertex(t.clone()))?;
            arrow_list.push(Arrow { id, source, target });
        }
        let quiver = Quiver {
            vertices,
            arrows: arrow_list,
        };

        let mut rels = BTreeSet::new();
        for rel in relations {
            let joined = rel.join(" ");
            if rel.len() < 2 {
                return Err(QuiverError::RelationTooShort(joined));
            }
            let mut idx = Vec::with_capacity(rel.len());
            for a in &rel {
                idx.push(
                    quiver
                        .arrow_index(a)
                        .ok_or_else(|| QuiverError::UnknownArrow(a.clone()))?,
                );
            }
            for w in idx.windows(2) {
                let (x, y) = (quiver.arrow(w[0]), quiver.arrow(w[1]));
                if x.target != y.source {
                    return Err(QuiverError::NotComposable {
                        path: joined,
                        first: x.id.clone(),
                        end: quiver.vertex_id(x.target).to_string(),
                        second: y.id.clone(),
                        start: quiver.vertex_id(y.source).to_string(),
                    });
                }
            }
            rels.insert(idx);
        }
        Ok(BoundQuiverPresentation {
            quiver,
            relations: rels.into_iter().collect(),
        })
    }

    /// Convenience constructor from string slices.
    pub fn from_parts(
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[&[&str]],
    ) -> Result<Self, QuiverError> {
        Self::new(
            vertices.iter().map(|v| v.to_string()),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
            relations
                .iter()
                .map(|r| r.iter().map(|a| a.to_string()).collect()),
        )
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrow_count()
    }

    pub fn is_relation(&self, arrows: &[usize]) -> bool {
        self.relations.iter().any(|r| r == arrows)
    }

    /// True if `arrows` contains some relation as a contiguous subpath.
    pub fn contains_relation(&self, arrows: &[usize]) -> bool {
        self.relations
            .iter()
            .any(|r| r.len() <= arrows.len() && arrows.windows(r.len()).any(|w| w == r.as_slice()))
    }

    pub fn max_relation_len(&self) -> usize {
        self.relations.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_hereditary(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn render_path(&self, path: &Path) -> String {
        if path.is_trivial() {
            format!("e_{}", self.quiver.vertex_id(path.source))
        } else {
            path.arrows
                .iter()
                .map(|&a| self.quiver.arrow(a).id.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    fn raw_parts(&self) -> RawParts {
        let q = &self.quiver;
        (
            q.vertices.clone(),
            q.arrows
                .iter()
                .map(|a| {
                    (
                        a.id.clone(),
                        q.vertex_id(a.source).to_string(),
                        q.vertex_id(a.target).to_string(),
                    )
                })
                .collect(),
            self.relations
                .iter()
                .map(|r| r.iter().map(|&a| q.arrow(a).id.clone()).collect())
                .collect(),
        )
    }

    /// Renames every vertex and arrow; the maps must be injective.
    pub fn relabel(
        &self,
        vertex: impl Fn(&str) -> String,
        arrow: impl Fn(&str) -> String,
    ) -> Result<Self, QuiverError> {
        let (vs, arrs, rels) = self.raw_parts();
        Self::new(
            vs.iter().map(|v| vertex(v)),
            arrs.into_iter()
                .map(|(a, s, t)| (arrow(&a), vertex(&s), vertex(&t))),
            rels.into_iter()
                .map(|r| r.iter().map(|a| arrow(a)).collect()),
        )
    }

    /// Full subquiver on `keep` with the relations that avoid dropped arrows.
    pub fn restrict_to(&self, keep: &BTreeSet<usize>) -> Self {
        let q = &self.quiver;
        let arrows: Vec<usize> = (0..q.arrow_count())
            .filter(|&a| keep.contains(&q.arrow(a).source) && keep.contains(&q.arrow(a).target))
            .collect();
        let kept_arrow: BTreeSet<usize> = arrows.iter().copied().collect();
        Self::new(
            keep.iter().map(|&v| q.vertex_id(v).to_string()),
            arrows.iter().map(|&a| {
                let ar = q.arrow(a);
                (
                    ar.id.clone(),
                    q.vertex_id(ar.source).to_string(),
                    q.vertex_id(ar.target).to_string(),
                )
            }),
            self.relations
                .iter()
                .filter(|r| r.iter().all(|a| kept_arrow.contains(a)))
                .map(|r| r.iter().map(|&a| q.arrow(a).id.clone()).collect()),
        )
        .expect("restriction of a valid presentation is valid")
    }
}

impl fmt::Display for BoundQuiverPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_presentation(self))
    }
}

/// Rank of the Grothendieck group: the number of simple modules.
pub fn grothendieck_rank(p: &BoundQuiverPresentation) -> usize {
    p.vertex_count()
}

/// Connected components of the underlying graph, ordered by their smallest vertex.
pub fn connected_components(p: &BoundQuiverPresentation) -> Vec<BoundQuiverPresentation> {
    component_vertex_sets(p)
        .iter()
        .map(|c| p.restrict_to(c))
        .collect()
}

pub(crate) fn component_vertex_sets(p: &BoundQuiverPresentation) -> Vec<BTreeSet<usize>> {
    let n = p.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for a in p.quiver().arrows() {
        let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
        if x != y {
            parent[x.max(y)] = x.min(y);
        }
    }
    let mut groups: Vec<BTreeSet<usize>> = Vec::new();
    let mut root_slot: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        let slot = *root_slot.entry(r).or_insert_with(|| {
            groups.push(BTreeSet::new());
            groups.len() - 1
        });
        groups[slot].insert(v);
    }
    groups
}

/// Disjoint union. Ids are kept when they do not collide; otherwise every id
/// of summand `i` is prefixed with `i.`.
pub fn direct_sum(ps: &[BoundQuiverPresentation]) -> BoundQuiverPresentation {
    let mut seen_v = BTreeSet::new();
    let mut seen_a = BTreeSet::new();
    let clash = ps.iter().any(|p| {
        p.quiver.vertices.iter().any(|v| !seen_v.insert(v.clone()))
            || p.quiver.arrows.iter().any(|a| !seen_a.insert(a.id.clone()))
    });
    let mut vs = Vec::new();
    let mut arrs = Vec::new();
    let mut rels = Vec::new();
    for (i, p) in ps.iter().enumerate() {
        let rename = |x: &str| {
            if clash {
                format!("{i}.{x}")
            } else {
                x.to_string()
            }
        };
        let (v, a, r) = p.raw_parts();
        vs.extend(v.iter().map(|x| rename(x)));
        arrs.extend(a.iter().map(|(a, s, t)| (rename(a), rename(s), rename(t))));
        rels.extend(r.iter().map(|r| r.iter().map(|x| rename(x)).collect::<Vec<_>>()));
    }
    BoundQuiverPresentation::new(vs, arrs, rels).expect("disjoint union of valid presentations")
}

/// Parameters of the normal-form algebra Λ(r,s,t): an oriented `s`-cycle
/// with `r` consecutive zero relations and a linear tail of `t` arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambdaDescriptor {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl LambdaDescriptor {
    pub fn new(r: usize, s: usize, t: usize) -> Result<Self, QuiverError> {
        if r < 1 || r > s {
            return Err(QuiverError::InvalidDescriptor { r, s, t });
        }
        Ok(LambdaDescriptor { r, s, t })
    }

    /// Λ(s,s,t): every consecutive pair on the cycle is a relation.
    pub fn is_full_cycle(&self) -> bool {
        self.r == self.s
    }

    pub fn rank(&self) -> usize {
        self.s + self.t
    }
}

impl fmt::Display for LambdaDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ({},{},{})", self.r, self.s, self.t)
    }
}

/// Builds Λ(r,s,t) with the integer labels `-t, …, s-1` for vertices and
/// `a<q>` for the arrow leaving vertex `q`.
pub fn build_lambda(d: LambdaDescriptor) -> Result<BoundQuiverPresentation, QuiverError> {
    let LambdaDescriptor { r, s, t } = LambdaDescriptor::new(d.r, d.s, d.t)?;
    let (s_i, t_i) = (s as i64, t as i64);
    let vertices = (-t_i..s_i).map(|v| v.to_string());
    let arrow = |q: i64| format!("a{q}");
    let tail = (-t_i..0).map(|q| (arrow(q), q.to_string(), (q + 1).to_string()));
    let cycle = (0..s_i).map(|p| (arrow(p), p.to_string(), ((p + 1) % s_i).to_string()));
    let relations = (1..=r as i64).map(|j| vec![arrow(s_i - j), arrow((s_i - j + 1) % s_i)]);
    BoundQuiverPresentation::new(vertices, tail.chain(cycle).collect::<Vec<_>>(), relations)
}

/// Simply-laced Dynkin diagrams. Serialized as their names, e.g. `"D5"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    pub fn validate(&self) -> Result<(), QuiverError> {
        let ok = match *self {
            DynkinType::A(n) => n >= 1,
            DynkinType::D(n) => n >= 4,
            DynkinType::E(n) => (6..=8).contains(&n),
        };
        if ok {
            Ok(())
        } else {
            Err(QuiverError::InvalidDynkin(self.to_string()))
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl std::str::FromStr for DynkinType {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || QuiverError::InvalidDynkin(s.to_string());
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(bad)?;
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ty = match family {
            'A' => DynkinType::A(n),
            'D' => DynkinType::D(n),
            'E' => DynkinType::E(n),
            _ => return Err(bad()),
        };
        ty.validate()?;
        Ok(ty)
    }
}

impl Serialize for DynkinType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DynkinType {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Path algebra of a Dynkin quiver with vertices `1..=n`.
///
/// A_n is linearly oriented; D_n and E_n have their branch point at vertex
/// `n-2` resp. `3`, every arrow pointing towards the branch point's arm ends.
pub fn build_dynkin(ty: DynkinType) -> Result<BoundQuiverPresentation, QuiverError> {
    ty.validate()?;
    let n = ty.rank();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match ty {
        DynkinType::A(_) => edges.extend((1..n).map(|i| (i, i + 1))),
        DynkinType::D(_) => {
            edges.extend((1..n - 2).map(|i| (i, i + 1)));
            edges.push((n - 2, n - 1));
            edges.push((n - 2, n));
        }
        DynkinType::E(_) => {
            // 1 - 2 - 3 - 4 - ... - (n-1), with n attached to 3
            edges.extend((1..n - 1).map(|i| (i, i + 1)));
            edges.push((3, n));
        }
    }
    BoundQuiverPresentation::new(
        (1..=n).map(|v| v.to_string()),
        edges
            .iter()
            .enumerate()
            .map(|(k, (s, t))| (format!("b{}", k + 1), s.to_string(), t.to_string()))
            .collect::<Vec<_>>(),
        Vec::<Vec<String>>::new(),
    )
}

/// The Kronecker quiver: two vertices and two parallel arrows, no relations.
pub fn kronecker() -> BoundQuiverPresentation {
    BoundQuiverPresentation::from_parts(&["1", "2"], &[("x", "1", "2"), ("y", "1", "2")], &[])
        .expect("valid")
}

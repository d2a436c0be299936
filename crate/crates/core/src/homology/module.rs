//! Right modules as quiver representations.
//!
//! `M_v = M e_v`; an arrow `α: v → w` acts `M_v → M_w` by `m ↦ mα` and is
//! stored as a `dim M_w × dim M_v` matrix acting on column vectors. A path
//! `α β` therefore acts by the product `M_β M_α`.

use serde::Serialize;

use crate::field::Field;
use crate::linalg::{unit_vector, EchelonBasis, Matrix};
use crate::quiver::FiniteAlgebra;

use super::HomologyError;

#[derive(Debug, Clone, PartialEq)]
pub struct RepModule<F> {
    algebra: u64,
    dims: Vec<usize>,
    ends: Vec<(usize, usize)>,
    maps: Vec<Matrix<F>>,
}

/// Dimension vector keyed by vertex id, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimVector(pub Vec<(String, usize)>);

/// A homomorphism of right modules, one matrix per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleMap<F> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> ModuleMap<F> {
    pub fn zero(from: &RepModule<F>, to: &RepModule<F>) -> Self {
        ModuleMap {
            blocks: from
                .dims
                .iter()
                .zip(&to.dims)
                .map(|(&m, &n)| Matrix::zeros(n, m))
                .collect(),
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap<F>) -> ModuleMap<F> {
        ModuleMap {
            blocks: self.blocks.iter().zip(&first.blocks).map(|(g, f)| g.mul(f)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }
}

impl<F: Field> RepModule<F> {
    /// Validates shapes and that every relation acts as zero.
    pub fn new(alg: &FiniteAlgebra, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self, HomologyError> {
        let q = alg.presentation().quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrow_count() {
            return Err(HomologyError::InvalidModule("wrong number of vertices or arrows".into()));
        }
        for (a, m) in maps.iter().enumerate() {
            let ar = q.arrow(a);
            if m.rows() != dims[ar.target] || m.cols() != dims[ar.source] {
                return Err(HomologyError::InvalidModule(format!("arrow {} has a map of the wrong shape", ar.id)));
            }
        }
        let module = Self::unchecked(alg, dims, maps);
        for r in alg.presentation().relations() {
            if !module.arrows_action(r).is_zero() {
                let ids: Vec<&str> = r.iter().map(|&a| q.arrow(a).id.as_str()).collect();
                return Err(HomologyError::InvalidModule(format!("relation {} does not act as zero", ids.join(" "))));
            }
        }
        Ok(module)
    }

    fn unchecked(alg: &FiniteAlgebra, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Self {
        RepModule {
            algebra: alg.fingerprint(),
            dims,
            ends: alg.presentation().quiver().arrows().iter().map(|a| (a.source, a.target)).collect(),
            maps,
        }
    }

    pub fn zero(alg: &FiniteAlgebra) -> Self {
        let q = alg.presentation().quiver();
        Self::unchecked(alg, vec![0; q.vertex_count()], vec![Matrix::zeros(0, 0); q.arrow_count()])
    }

    pub fn algebra(&self) -> u64 {
        self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn dim_vector(&self, alg: &FiniteAlgebra) -> DimVector {
        let q = alg.presentation().quiver();
        DimVector(self.dims.iter().enumerate().map(|(v, &d)| (q.vertex_id(v).to_string(), d)).collect())
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix<F> {
        &self.maps[a]
    }

    pub(crate) fn check_algebra(&self, alg: &FiniteAlgebra) -> Result<(), HomologyError> {
        if self.algebra != alg.fingerprint() {
            return Err(HomologyError::AlgebraMismatch);
        }
        Ok(())
    }

    fn arrows_action(&self, arrows: &[usize]) -> Matrix<F> {
        let mut acc = self.maps[arrows[0]].clone();
        for &a in &arrows[1..] {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// Matrix of the right action of basis path `p`.
    pub fn path_action(&self, alg: &FiniteAlgebra, p: usize) -> Matrix<F> {
        let path = alg.path(p);
        if path.is_trivial() {
            Matrix::identity(self.dims[path.source])
        } else {
            self.arrows_action(&path.arrows)
        }
    }

    /// `x · p` for `x ∈ M_{source(p)}`.
    pub fn act(&self, alg: &FiniteAlgebra, x: &[F], p: usize) -> Vec<F> {
        let mut v = x.to_vec();
        for &a in &alg.path(p).arrows {
            v = self.maps[a].apply(&v);
        }
        v
    }

    /// Radical `M · rad A`, at each vertex the span of images of incoming arrows.
    pub fn radical(&self) -> Vec<Vec<Vec<F>>> {
        let mut rad = vec![Vec::new(); self.dims.len()];
        for (a, m) in self.maps.iter().enumerate() {
            let t = self.ends[a].1;
            rad[t].extend((0..m.cols()).map(|j| m.column(j)));
        }
        rad
    }

    /// Quotient by the submodule spanned, at each vertex, by the given
    /// vectors; returns the quotient and the projection onto it.
    pub fn quotient(&self, sub: &[Vec<Vec<F>>]) -> Result<(RepModule<F>, ModuleMap<F>), HomologyError> {
        let n = self.dims.len();
        let mut projections = Vec::with_capacity(n);
        let mut lifts = Vec::with_capacity(n);
        let mut spans = Vec::with_capacity(n);
        for (v, &d) in self.dims.iter().enumerate() {
            let mut span = EchelonBasis::new(d);
            let mut columns: Vec<Vec<F>> = sub[v].iter().filter(|x| span.insert(x)).cloned().collect();
            let k = columns.len();
            let complement: Vec<Vec<F>> = (0..d)
                .map(|i| unit_vector::<F>(d, i))
                .filter(|e| span.insert(e))
                .collect();
            columns.extend(complement.iter().cloned());
            let inv = Matrix::from_columns(d, &columns).inverse().expect("basis");
            let mut proj = Matrix::zeros(d - k, d);
            for i in 0..d - k {
                for j in 0..d {
                    proj.set(i, j, inv.get(k + i, j).clone());
                }
            }
            projections.push(proj);
            lifts.push(Matrix::from_columns(d, &complement));
            spans.push(columns[..k].to_vec());
        }
        let mut maps = Vec::with_capacity(self.maps.len());
        for (a, m) in self.maps.iter().enumerate() {
            let (s, t) = self.ends[a];
            for x in &spans[s] {
                if !projections[t].apply(&m.apply(x)).iter().all(|c| c.is_zero()) {
                    return Err(HomologyError::InvalidModule("quotient by a non-submodule".into()));
                }
            }
            maps.push(projections[t].mul(m).mul(&lifts[s]));
        }
        let quotient = RepModule {
            algebra: self.algebra,
            dims: projections.iter().map(Matrix::rows).collect(),
            ends: self.ends.clone(),
            maps,
        };
        Ok((quotient, ModuleMap { blocks: projections }))
    }

    /// Kernel of a map out of this module, with its inclusion.
    pub fn kernel(&self, f: &ModuleMap<F>) -> (RepModule<F>, ModuleMap<F>) {
        let spaces: Vec<_> = f.blocks.iter().map(Matrix::nullspace).collect();
        let inclusions: Vec<Matrix<F>> = spaces
            .iter()
            .zip(&self.dims)
            .map(|(ns, &d)| Matrix::from_columns(d, &ns.basis))
            .collect();
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(a, m)| {
                let (s, t) = self.ends[a];
                let columns: Vec<Vec<F>> = spaces[s]
                    .basis
                    .iter()
                    .map(|x| spaces[t].coords(&m.apply(x)))
                    .collect();
                Matrix::from_columns(spaces[t].dim(), &columns)
            })
            .collect();
        let kernel = RepModule {
            algebra: self.algebra,
            dims: spaces.iter().map(|ns| ns.dim()).collect(),
            ends: self.ends.clone(),
            maps,
        };
        (kernel, ModuleMap { blocks: inclusions })
    }
}

/// One-dimensional at `v`, zero elsewhere.
pub fn simple_module<F: Field>(alg: &FiniteAlgebra, v: usize) -> Result<RepModule<F>, HomologyError> {
    let q = alg.presentation().quiver();
    if v >= q.vertex_count() {
        return Err(HomologyError::UnknownVertex(v.to_string()));
    }
    let dims: Vec<usize> = (0..q.vertex_count()).map(|w| usize::from(w == v)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
        .collect();
    Ok(RepModule::unchecked(alg, dims, maps))
}

/// A direct sum of indecomposable projectives `⊕ P_{v_k}` as a representation.
///
/// The basis at vertex `w` is all pairs `(k, p)` with `p` a basis path from
/// `v_k` to `w`; arrows act by right concatenation.
#[derive(Debug, Clone)]
pub struct RealizedProjective<F> {
    pub module: RepModule<F>,
    /// Per vertex `w`, the `(summand, path)` pairs in basis order.
    pub basis: Vec<Vec<(usize, usize)>>,
}

impl<F: Field> RealizedProjective<F> {
    pub fn new(alg: &FiniteAlgebra, summands: &[usize]) -> Self {
        let q = alg.presentation().quiver();
        let n = q.vertex_count();
        let mut basis = vec![Vec::new(); n];
        for (k, &v) in summands.iter().enumerate() {
            for (w, b) in basis.iter_mut().enumerate() {
                b.extend(alg.paths_between(v, w).iter().map(|&p| (k, p)));
            }
        }
        let maps = (0..q.arrow_count())
            .map(|a| {
                let ar = q.arrow(a);
                let arrow = alg.arrow_element(a);
                let mut m = Matrix::zeros(basis[ar.target].len(), basis[ar.source].len());
                for (j, &(k, p)) in basis[ar.source].iter().enumerate() {
                    if let Some(pa) = alg.mul(p, arrow) {
                        let i = basis[ar.target].iter().position(|&x| x == (k, pa)).expect("basis path");
                        m.set(i, j, F::one());
                    }
                }
                m
            })
            .collect();
        let dims = basis.iter().map(Vec::len).collect();
        RealizedProjective {
            module: RepModule::unchecked(alg, dims, maps),
            basis,
        }
    }

    /// Coordinate of the basis element `(k, p)` at the target vertex of `p`.
    pub fn position(&self, alg: &FiniteAlgebra, k: usize, p: usize) -> usize {
        let w = alg.path(p).target;
        self.basis[w].iter().position(|&x| x == (k, p)).expect("basis element")
    }
}

/// `P_v = e_v A` with basis the paths starting at `v`.
pub fn indec_projective<F: Field>(alg: &FiniteAlgebra, v: usize) -> Result<RepModule<F>, HomologyError> {
    if v >= alg.vertex_count() {
        return Err(HomologyError::UnknownVertex(v.to_string()));
    }
    Ok(RealizedProjective::new(alg, &[v]).module)
}

/// `dim Hom_A(M, N)`, by solving `N_α f_v = f_w M_α` for every arrow `α: v → w`.
pub fn hom_dim<F: Field>(alg: &FiniteAlgebra, m: &RepModule<F>, n: &RepModule<F>) -> Result<usize, HomologyError> {
    m.check_algebra(alg)?;
    n.check_algebra(alg)?;
    let system = HomSystem::new(m, n);
    Ok(system.equations(m, n).nullspace().dim())
}

/// Unknowns of a module homomorphism `f = (f_v)`, laid out vertex by vertex,
/// each `f_v` row-major.
pub(crate) struct HomSystem {
    pub offsets: Vec<usize>,
    pub total: usize,
}

impl HomSystem {
    pub fn new<F: Field>(m: &RepModule<F>, n: &RepModule<F>) -> Self {
        let mut offsets = Vec::with_capacity(m.dims.len());
        let mut total = 0;
        for (dm, dn) in m.dims.iter().zip(&n.dims) {
            offsets.push(total);
            total += dm * dn;
        }
        HomSystem { offsets, total }
    }

    pub fn var<F>(&self, m: &RepModule<F>, v: usize, row: usize, col: usize) -> usize {
        self.offsets[v] + row * m.dims[v] + col
    }

    pub fn equations<F: Field>(&self, m: &RepModule<F>, n: &RepModule<F>) -> Matrix<F> {
        let mut rows: Vec<Vec<F>> = Vec::new();
        for (a, (s, t)) in m.ends.iter().copied().enumerate() {
            let (ma, na) = (&m.maps[a], &n.maps[a]);
            // entry (i, j) of N_α f_s - f_t M_α, i < dim N_t, j < dim M_s
            for i in 0..n.dims[t] {
                for j in 0..m.dims[s] {
                    let mut row = vec![F::zero(); self.total];
                    for k in 0..n.dims[s] {
                        let c = na.get(i, k);
                        if !c.is_zero() {
                            let x = self.var(m, s, k, j);
                            row[x] = row[x].clone() + c.clone();
                        }
                    }
                    for k in 0..m.dims[t] {
                        let c = ma.get(k, j);
                        if !c.is_zero() {
                            let x = self.var(m, t, i, k);
                            row[x] = row[x].clone() - c.clone();
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let mut eq = Matrix::zeros(rows.len(), self.total);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                if !x.is_zero() {
                    eq.set(i, j, x);
                }
            }
        }
        eq
    }
}

//! Bounded complexes of projectives and of modules.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::field::Field;
use crate::linalg::Matrix;
use crate::quiver::FiniteAlgebra;

use super::module::{ModuleMap, RealizedProjective, RepModule};
use super::HomologyError;

/// A linear combination of basis paths, keyed by basis index.
pub type PathComb<F> = BTreeMap<usize, F>;

/// A map `⊕_k P_{b_k} → ⊕_j P_{a_j}`: entry `(j, k)` lies in `e_{a_j} A e_{b_k}`
/// and acts by left multiplication.
#[derive(Debug, Clone, PartialEq)]
pub struct PathMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<PathComb<F>>,
}

impl<F: Field> PathMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PathMatrix {
            rows,
            cols,
            entries: vec![BTreeMap::new(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, j: usize, k: usize) -> &PathComb<F> {
        &self.entries[j * self.cols + k]
    }

    pub fn add_to(&mut self, j: usize, k: usize, path: usize, c: F) {
        let cell = &mut self.entries[j * self.cols + k];
        let x = cell.remove(&path).unwrap_or_else(F::zero) + c;
        if !x.is_zero() {
            cell.insert(path, x);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BTreeMap::is_empty)
    }

    /// `self ∘ first`: left multiplication by `first` then by `self`, so
    /// the path of `self` is traversed before the path of `first`.
    pub fn compose(&self, alg: &FiniteAlgebra, first: &PathMatrix<F>) -> PathMatrix<F> {
        assert_eq!(self.cols, first.rows);
        let mut out = PathMatrix::zeros(self.rows, first.cols);
        for c in 0..self.rows {
            for b in 0..first.cols {
                for a in 0..self.cols {
                    for (&w, x) in self.entry(c, a) {
                        for (&u, y) in first.entry(a, b) {
                            if let Some(wu) = alg.mul(w, u) {
                                out.add_to(c, b, wu, x.clone() * y.clone());
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Whether any entry has a nonzero trivial-path coefficient.
    pub fn has_unit_entries(&self, alg: &FiniteAlgebra) -> bool {
        self.entries.iter().any(|cell| cell.keys().any(|&p| alg.path(p).is_trivial()))
    }

    pub fn render(&self, alg: &FiniteAlgebra) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|j| (0..self.cols).map(|k| render_comb(alg, self.entry(j, k))).collect())
            .collect()
    }
}

pub fn render_comb<F: Field>(alg: &FiniteAlgebra, comb: &PathComb<F>) -> String {
    if comb.is_empty() {
        return "0".into();
    }
    let one = F::one();
    let terms: Vec<String> = comb
        .iter()
        .map(|(&p, c)| {
            if *c == one {
                alg.render(p)
            } else {
                format!("{c}*{}", alg.render(p))
            }
        })
        .collect();
    terms.join(" + ")
}

/// A bounded complex of projectives with cohomological grading: the
/// differential raises degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjComplex<F> {
    algebra: u64,
    lo: i64,
    terms: Vec<Vec<usize>>,
    diffs: Vec<PathMatrix<F>>,
}

impl<F: Field> ProjComplex<F> {
    /// `terms[i]` sits in degree `lo + i`; `diffs[i]` maps it to the next term.
    pub fn new(
        alg: &FiniteAlgebra,
        lo: i64,
        terms: Vec<Vec<usize>>,
        diffs: Vec<PathMatrix<F>>,
    ) -> Result<Self, HomologyError> {
        if terms.is_empty() || diffs.len() + 1 != terms.len() {
            return Err(HomologyError::InvalidComplex("need one differential between consecutive terms".into()));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.cols != terms[i].len() || d.rows != terms[i + 1].len() {
                return Err(HomologyError::InvalidComplex(format!("differential out of degree {} has the wrong shape", lo + i as i64)));
            }
            for j in 0..d.rows {
                for k in 0..d.cols {
                    for &p in d.entry(j, k).keys() {
                        let path = alg.path(p);
                        if path.source != terms[i + 1][j] || path.target != terms[i][k] {
                            return Err(HomologyError::InvalidComplex(format!(
                                "entry ({j}, {k}) out of degree {} has a path with the wrong endpoints",
                                lo + i as i64
                            )));
                        }
                    }
                }
            }
        }
        let c = ProjComplex {
            algebra: alg.fingerprint(),
            lo,
            terms,
            diffs,
        };
        if !c.is_complex(alg) {
            return Err(HomologyError::InvalidComplex("d∘d ≠ 0".into()));
        }
        Ok(c)
    }

    pub(crate) fn from_parts(algebra: u64, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<PathMatrix<F>>) -> Self {
        ProjComplex {
            algebra,
            lo,
            terms,
            diffs,
        }
    }

    /// A single projective sum in degree `degree`.
    pub fn concentrated(alg: &FiniteAlgebra, degree: i64, summands: Vec<usize>) -> Self {
        Self::from_parts(alg.fingerprint(), degree, vec![summands], Vec::new())
    }

    pub fn algebra(&self) -> u64 {
        self.algebra
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn term(&self, degree: i64) -> &[usize] {
        if degree < self.lo || degree > self.hi() {
            return &[];
        }
        &self.terms[(degree - self.lo) as usize]
    }

    /// Differential out of `degree`, if both ends lie in range.
    pub fn differential(&self, degree: i64) -> Option<&PathMatrix<F>> {
        if degree < self.lo || degree >= self.hi() {
            return None;
        }
        Some(&self.diffs[(degree - self.lo) as usize])
    }

    pub fn is_complex(&self, alg: &FiniteAlgebra) -> bool {
        self.diffs.windows(2).all(|w| w[1].compose(alg, &w[0]).is_zero())
    }

    /// Brutal truncation keeping degrees `>= lo`.
    pub fn truncate_below(&self, lo: i64) -> Self {
        if lo <= self.lo {
            return self.clone();
        }
        let skip = ((lo - self.lo) as usize).min(self.terms.len() - 1);
        Self::from_parts(
            self.algebra,
            self.lo + skip as i64,
            self.terms[skip..].to_vec(),
            self.diffs[skip..].to_vec(),
        )
    }

    /// The underlying complex of representations.
    pub fn realize(&self, alg: &FiniteAlgebra) -> ModComplex<F> {
        let realized: Vec<RealizedProjective<F>> =
            self.terms.iter().map(|t| RealizedProjective::new(alg, t)).collect();
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let (src, dst) = (&realized[i], &realized[i + 1]);
                let blocks = (0..alg.vertex_count())
                    .map(|w| {
                        let mut m = Matrix::zeros(dst.basis[w].len(), src.basis[w].len());
                        for (col, &(k, p)) in src.basis[w].iter().enumerate() {
                            for j in 0..d.rows {
                                for (&u, c) in d.entry(j, k) {
                                    if let Some(up) = alg.mul(u, p) {
                                        m.add_to(dst.position(alg, j, up), col, c.clone());
                                    }
                                }
                            }
                        }
                        m
                    })
                    .collect();
                ModuleMap { blocks }
            })
            .collect();
        ModComplex {
            lo: self.lo,
            terms: realized.into_iter().map(|r| r.module).collect(),
            diffs,
        }
    }

    /// Vertex ids of the summands in each degree, for reports.
    pub fn describe(&self, alg: &FiniteAlgebra) -> Vec<ComplexTerm> {
        let q = alg.presentation().quiver();
        (0..self.terms.len())
            .map(|i| ComplexTerm {
                degree: self.lo + i as i64,
                summands: self.terms[i].iter().map(|&v| format!("P_{}", q.vertex_id(v))).collect(),
                differential: self.diffs.get(i).map(|d| d.render(alg)),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexTerm {
    pub degree: i64,
    pub summands: Vec<String>,
    /// Matrix of the differential leaving this degree, rows indexed by the
    /// next term's summands.
    pub differential: Option<Vec<Vec<String>>>,
}

/// A bounded complex of modules.
#[derive(Debug, Clone, PartialEq)]
pub struct ModComplex<F> {
    lo: i64,
    terms: Vec<RepModule<F>>,
    diffs: Vec<ModuleMap<F>>,
}

impl<F: Field> ModComplex<F> {
    pub fn new(lo: i64, terms: Vec<RepModule<F>>, diffs: Vec<ModuleMap<F>>) -> Result<Self, HomologyError> {
        if terms.is_empty() || diffs.len() + 1 != terms.len() {
            return Err(HomologyError::InvalidComplex("need one differential between consecutive terms".into()));
        }
        if terms.iter().any(|t| t.algebra() != terms[0].algebra()) {
            return Err(HomologyError::AlgebraMismatch);
        }
        if diffs.windows(2).any(|w| !w[1].compose(&w[0]).is_zero()) {
            return Err(HomologyError::InvalidComplex("d∘d ≠ 0".into()));
        }
        Ok(ModComplex { lo, terms, diffs })
    }

    /// A module placed in a single degree.
    pub fn module(m: RepModule<F>, degree: i64) -> Self {
        ModComplex {
            lo: degree,
            terms: vec![m],
            diffs: Vec::new(),
        }
    }

    pub fn algebra(&self) -> u64 {
        self.terms[0].algebra()
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn term(&self, degree: i64) -> Option<&RepModule<F>> {
        if degree < self.lo || degree > self.hi() {
            return None;
        }
        Some(&self.terms[(degree - self.lo) as usize])
    }

    pub fn differential(&self, degree: i64) -> Option<&ModuleMap<F>> {
        if degree < self.lo || degree >= self.hi() {
            return None;
        }
        Some(&self.diffs[(degree - self.lo) as usize])
    }

    /// `dim H^i` for every degree with nonzero cohomology.
    pub fn cohomology_dims(&self) -> CohomDimVector {
        let ranks: Vec<usize> = self.diffs.iter().map(ModuleMap::rank).collect();
        let mut out = BTreeMap::new();
        for (i, t) in self.terms.iter().enumerate() {
            let incoming = if i > 0 { ranks[i - 1] } else { 0 };
            let outgoing = ranks.get(i).copied().unwrap_or(0);
            let h = t.dim() - incoming - outgoing;
            if h > 0 {
                out.insert(self.lo + i as i64, h);
            }
        }
        CohomDimVector(out)
    }
}

/// Degree → `dim H^degree`, listing only nonzero degrees.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CohomDimVector(pub BTreeMap<i64, usize>);

impl CohomDimVector {
    pub fn get(&self, degree: i64) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }
}

pub fn cohomology_dim_vector<F: Field>(alg: &FiniteAlgebra, c: &ProjComplex<F>) -> Result<CohomDimVector, HomologyError> {
    if c.algebra != alg.fingerprint() {
        return Err(HomologyError::AlgebraMismatch);
    }
    Ok(c.realize(alg).cohomology_dims())
}

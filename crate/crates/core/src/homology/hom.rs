//! Morphism spaces in the derived category.
//!
//! For a bounded-above complex of projectives `C` and any bounded complex
//! `D`, `Hom_D(C, D[n]) = H^n Hom^•(C, D)`, with
//! `Hom^n(C, D) = Π_i Hom_A(C^i, D^{i+n})` and `Hom_A(P_v, M) = M_v`.

use crate::field::Field;
use crate::linalg::Matrix;
use crate::quiver::FiniteAlgebra;

use super::complex::{ModComplex, ProjComplex};
use super::module::{hom_dim, HomSystem, RepModule};
use super::resolve::{resolve, syzygies};
use super::HomologyError;

/// Coordinates of `Hom^n(C, D)`: a block `D^{i+n}_{v}` per summand `P_v` of `C^i`.
struct Blocks {
    /// `(degree i, summand k, offset, length)`
    blocks: Vec<(i64, usize, usize, usize)>,
    total: usize,
}

impl Blocks {
    fn new<F: Field>(c: &ProjComplex<F>, d: &ModComplex<F>, n: i64) -> Self {
        let mut blocks = Vec::new();
        let mut total = 0;
        for i in c.lo()..=c.hi() {
            let Some(target) = d.term(i + n) else { continue };
            for (k, &v) in c.term(i).iter().enumerate() {
                let len = target.dims()[v];
                blocks.push((i, k, total, len));
                total += len;
            }
        }
        Blocks { blocks, total }
    }

    fn find(&self, i: i64, k: usize) -> Option<(usize, usize)> {
        self.blocks
            .iter()
            .find(|b| b.0 == i && b.1 == k)
            .map(|b| (b.2, b.3))
    }
}

/// Matrix of `δf = d_D f − (−1)^n f d_C` from `Hom^n` to `Hom^{n+1}`.
fn differential<F: Field>(alg: &FiniteAlgebra, c: &ProjComplex<F>, d: &ModComplex<F>, n: i64) -> Matrix<F> {
    let src = Blocks::new(c, d, n);
    let dst = Blocks::new(c, d, n + 1);
    let mut m = Matrix::zeros(dst.total, src.total);
    let sign = if n % 2 == 0 { F::one() } else { -F::one() };
    for &(i, k, row0, len) in &dst.blocks {
        let v = c.term(i)[k];
        // d_D ∘ f_{i,k}
        if let (Some(dd), Some((col0, clen))) = (d.differential(i + n), src.find(i, k)) {
            let block = &dd.blocks[v];
            for r in 0..len {
                for s in 0..clen {
                    let x = block.get(r, s);
                    if !x.is_zero() {
                        m.add_to(row0 + r, col0 + s, x.clone());
                    }
                }
            }
        }
        // f_{i+1} ∘ d_C restricted to summand k: Σ_j f_{i+1,j} · u_{j,k}
        if let Some(dc) = c.differential(i) {
            let target = d.term(i + n + 1).expect("block exists");
            for j in 0..dc.rows() {
                let Some((col0, clen)) = src.find(i + 1, j) else { continue };
                for (&u, coeff) in dc.entry(j, k) {
                    let action = target.path_action(alg, u);
                    for r in 0..len {
                        for s in 0..clen {
                            let x = action.get(r, s);
                            if !x.is_zero() {
                                m.add_to(row0 + r, col0 + s, -(sign.clone() * coeff.clone() * x.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    m
}

/// `dim Hom_{D(A)}(C, D[h])` for `C` a complex of projectives, computed as
/// chain maps modulo null-homotopic ones.
pub fn hom_shift_dim<F: Field>(
    alg: &FiniteAlgebra,
    c: &ProjComplex<F>,
    d: &ModComplex<F>,
    h: i64,
) -> Result<usize, HomologyError> {
    if c.algebra() != alg.fingerprint() || d.algebra() != alg.fingerprint() {
        return Err(HomologyError::AlgebraMismatch);
    }
    let dim = Blocks::new(c, d, h).total;
    let out = differential(alg, c, d, h).rank();
    let inc = differential(alg, c, d, h - 1).rank();
    Ok(dim - out - inc)
}

/// `dim Ext^h_A(M, N)` by dimension shifting: `Ext^0 = Hom(M, N)` and for
/// `h ≥ 1`, `Ext^h(M, N)` is the cokernel of restriction
/// `Hom(P_{h−1}, N) → Hom(Ω^h M, N)` along `Ω^h M ⊂ P_{h−1}`.
///
/// This route shares only covers and kernels with [`hom_shift_dim`], so the
/// two serve as cross-checks of each other.
pub fn ext_dim<F: Field>(alg: &FiniteAlgebra, m: &RepModule<F>, n: &RepModule<F>, h: usize) -> Result<usize, HomologyError> {
    m.check_algebra(alg)?;
    n.check_algebra(alg)?;
    if h == 0 {
        return hom_dim(alg, m, n);
    }
    if m.dim() == 0 {
        return Ok(0);
    }
    let steps = syzygies(alg, m, h)?;
    if steps.len() < h {
        return Ok(0);
    }
    let step = &steps[h - 1];
    let omega = &step.syzygy;
    if omega.dim() == 0 {
        return Ok(0);
    }
    let system = HomSystem::new(omega, n);
    let hom = system.equations(omega, n).nullspace().dim();
    // a map P → N is a choice of x_k ∈ N_{v_k} per summand; restricted to Ω
    // at vertex w it sends basis vector e of Ω_w to Σ c·(x_k · p) over the
    // terms c·(k, p) of ι(e)
    let mut images: Vec<Vec<F>> = Vec::new();
    for (k, &v) in step.cover.summands.iter().enumerate() {
        for coord in 0..n.dims()[v] {
            let x = crate::linalg::unit_vector::<F>(n.dims()[v], coord);
            let mut f = vec![F::zero(); system.total];
            for w in 0..alg.vertex_count() {
                let incl = &step.inclusion.blocks[w];
                for col in 0..omega.dims()[w] {
                    for (pos, &(kk, p)) in step.cover.realized.basis[w].iter().enumerate() {
                        let c = incl.get(pos, col);
                        if kk != k || c.is_zero() {
                            continue;
                        }
                        let y = n.act(alg, &x, p);
                        for (row, val) in y.iter().enumerate() {
                            if !val.is_zero() {
                                let var = system.var(omega, w, row, col);
                                f[var] = f[var].clone() + c.clone() * val.clone();
                            }
                        }
                    }
                }
            }
            images.push(f);
        }
    }
    let restricted = Matrix::from_columns(system.total, &images).rank();
    Ok(hom - restricted)
}

/// Margin policy for truncated resolutions: start, step, and how many
/// increases are tried before giving up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarginPolicy {
    pub start: usize,
    pub step: usize,
    pub max_rounds: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HomTable {
    /// `dims[h] = dim Hom(X, Y[h])` for `0 ≤ h ≤ hmax`.
    pub dims: Vec<usize>,
    /// Margin at which two consecutive runs first agreed.
    pub margin: usize,
}

/// `dim Hom_{D(A)}(X, Y[h])` for modules `X`, `Y` and `0 ≤ h ≤ hmax`, using
/// resolutions of `X` truncated at depth `hmax + margin` and growing the
/// margin until two consecutive runs agree.
pub fn hom_table<F: Field>(
    alg: &FiniteAlgebra,
    x: &RepModule<F>,
    y: &RepModule<F>,
    hmax: usize,
    policy: MarginPolicy,
) -> Result<HomTable, HomologyError> {
    let target = ModComplex::module(y.clone(), 0);
    let run = |margin: usize| -> Result<Vec<usize>, HomologyError> {
        let c = resolve(alg, x, hmax + margin)?;
        (0..=hmax as i64).map(|h| hom_shift_dim(alg, &c, &target, h)).collect()
    };
    let mut margin = policy.start;
    let mut previous = run(margin)?;
    let mut history = vec![(margin, previous.clone())];
    for _ in 0..policy.max_rounds {
        let next_margin = margin + policy.step;
        let next = run(next_margin)?;
        if next == previous {
            return Ok(HomTable { dims: previous, margin });
        }
        history.push((next_margin, next.clone()));
        margin = next_margin;
        previous = next;
    }
    Err(HomologyError::NonStabilizing { hmax, history })
}

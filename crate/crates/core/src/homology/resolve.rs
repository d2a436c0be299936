//! Projective covers and minimal projective resolutions.

use crate::field::Field;
use crate::linalg::{EchelonBasis, Matrix};
use crate::quiver::FiniteAlgebra;

use super::complex::{PathMatrix, ProjComplex};
use super::module::{ModuleMap, RealizedProjective, RepModule};
use super::HomologyError;

/// Minimal projective cover `⊕ P_{v_k} → M`.
#[derive(Debug, Clone)]
pub struct ProjectiveCover<F> {
    /// Vertex of each summand.
    pub summands: Vec<usize>,
    /// Image of `e_{v_k}` in `M_{v_k}`: a lift of a basis of the top.
    pub generators: Vec<Vec<F>>,
    pub realized: RealizedProjective<F>,
    pub epimorphism: ModuleMap<F>,
}

pub fn projective_cover<F: Field>(alg: &FiniteAlgebra, m: &RepModule<F>) -> Result<ProjectiveCover<F>, HomologyError> {
    m.check_algebra(alg)?;
    if m.dim() == 0 {
        return Err(HomologyError::ZeroModule);
    }
    let rad = m.radical();
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    for (v, &d) in m.dims().iter().enumerate() {
        let mut span = EchelonBasis::new(d);
        for x in &rad[v] {
            span.insert(x);
        }
        for i in 0..d {
            let e = crate::linalg::unit_vector::<F>(d, i);
            if span.insert(&e) {
                summands.push(v);
                generators.push(e);
            }
        }
    }
    let realized = RealizedProjective::new(alg, &summands);
    let blocks = (0..alg.vertex_count())
        .map(|w| {
            let columns: Vec<Vec<F>> = realized.basis[w]
                .iter()
                .map(|&(k, p)| m.act(alg, &generators[k], p))
                .collect();
            Matrix::from_columns(m.dims()[w], &columns)
        })
        .collect();
    Ok(ProjectiveCover {
        summands,
        generators,
        realized,
        epimorphism: ModuleMap { blocks },
    })
}

/// One step of a resolution: `0 → Ω → P → M`, with `Ω` embedded in `P`.
pub(crate) struct SyzygyStep<F> {
    pub cover: ProjectiveCover<F>,
    pub syzygy: RepModule<F>,
    pub inclusion: ModuleMap<F>,
}

pub(crate) fn syzygy_step<F: Field>(alg: &FiniteAlgebra, m: &RepModule<F>) -> Result<SyzygyStep<F>, HomologyError> {
    let cover = projective_cover(alg, m)?;
    let (syzygy, inclusion) = cover.realized.module.kernel(&cover.epimorphism);
    Ok(SyzygyStep {
        cover,
        syzygy,
        inclusion,
    })
}

/// Path matrix of `P' → P` sending the generators of the cover of
/// `Ω ⊂ P` to their images, read as path combinations.
fn connecting_matrix<F: Field>(
    previous: &RealizedProjective<F>,
    previous_len: usize,
    next: &ProjectiveCover<F>,
    inclusion: &ModuleMap<F>,
) -> PathMatrix<F> {
    let mut d = PathMatrix::zeros(previous_len, next.summands.len());
    for (k, (&w, g)) in next.summands.iter().zip(&next.generators).enumerate() {
        let image = inclusion.blocks[w].apply(g);
        for (pos, c) in image.iter().enumerate() {
            if !c.is_zero() {
                let (j, p) = previous.basis[w][pos];
                d.add_to(j, k, p, c.clone());
            }
        }
    }
    d
}

/// Minimal projective resolution in degrees `[-depth, 0]`; shorter when the
/// module has smaller projective dimension.
pub fn resolve<F: Field>(alg: &FiniteAlgebra, m: &RepModule<F>, depth: usize) -> Result<ProjComplex<F>, HomologyError> {
    let first = syzygy_step(alg, m)?;
    let mut terms = vec![first.cover.summands.clone()];
    let mut diffs: Vec<PathMatrix<F>> = Vec::new();
    let mut current = first;
    for _ in 0..depth {
        if current.syzygy.dim() == 0 {
            break;
        }
        let next = syzygy_step(alg, &current.syzygy)?;
        diffs.push(connecting_matrix(
            &current.cover.realized,
            current.cover.summands.len(),
            &next.cover,
            &current.inclusion,
        ));
        terms.push(next.cover.summands.clone());
        current = next;
    }
    terms.reverse();
    diffs.reverse();
    let lo = -(terms.len() as i64 - 1);
    Ok(ProjComplex::from_parts(alg.fingerprint(), lo, terms, diffs))
}

/// The syzygies `Ω^1 M, …, Ω^depth M` with their embeddings into the
/// resolution terms `P_0, …, P_{depth-1}`.
pub(crate) fn syzygies<F: Field>(
    alg: &FiniteAlgebra,
    m: &RepModule<F>,
    depth: usize,
) -> Result<Vec<SyzygyStep<F>>, HomologyError> {
    let mut steps = vec![syzygy_step(alg, m)?];
    while steps.len() < depth {
        let last = &steps[steps.len() - 1].syzygy;
        if last.dim() == 0 {
            break;
        }
        let next = syzygy_step(alg, last)?;
        steps.push(next);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::module::{indec_projective, simple_module};
    use crate::quiver::{build_lambda, LambdaDescriptor};
    use crate::Rational;

    fn lambda(r: usize, s: usize, t: usize) -> FiniteAlgebra {
        FiniteAlgebra::new(&build_lambda(LambdaDescriptor::new(r, s, t).unwrap()).unwrap()).unwrap()
    }

    fn ids(alg: &FiniteAlgebra, c: &ProjComplex<Rational>) -> Vec<Vec<String>> {
        let q = alg.presentation().quiver();
        (c.lo()..=c.hi())
            .map(|d| c.term(d).iter().map(|&v| q.vertex_id(v).to_string()).collect())
            .collect()
    }

    #[test]
    fn covers() {
        let a = lambda(2, 2, 0);
        let v0 = a.presentation().quiver().vertex_index("0").unwrap();
        let s0 = simple_module::<Rational>(&a, v0).unwrap();
        assert_eq!(projective_cover(&a, &s0).unwrap().summands, vec![v0]);
        let p0 = indec_projective::<Rational>(&a, v0).unwrap();
        let cover = projective_cover(&a, &p0).unwrap();
        assert_eq!(cover.summands, vec![v0]);
        assert_eq!(cover.epimorphism.rank(), p0.dim());
        assert!(matches!(
            projective_cover(&a, &RepModule::<Rational>::zero(&a)),
            Err(HomologyError::ZeroModule)
        ));
    }

    #[test]
    fn periodic_resolution_of_a_simple() {
        let a = lambda(2, 2, 0);
        let v0 = a.presentation().quiver().vertex_index("0").unwrap();
        let s0 = simple_module::<Rational>(&a, v0).unwrap();
        let c = resolve(&a, &s0, 4).unwrap();
        assert_eq!((c.lo(), c.hi()), (-4, 0));
        let expected: Vec<Vec<String>> = ["0", "1", "0", "1", "0"].iter().map(|v| vec![v.to_string()]).collect();
        assert_eq!(ids(&a, &c), expected);
        assert!(c.is_complex(&a));
    }

    #[test]
    fn projectives_resolve_trivially() {
        let a = lambda(1, 3, 1);
        for v in 0..a.vertex_count() {
            let p = indec_projective::<Rational>(&a, v).unwrap();
            let c = resolve(&a, &p, 3).unwrap();
            assert_eq!((c.lo(), c.hi()), (0, 0));
        }
    }
}

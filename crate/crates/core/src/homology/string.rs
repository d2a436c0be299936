//! The string objects `X_p`, `Y_q` of Λ(s,s,t) and global dimension.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classify::{is_gentle, Verdict};
use crate::field::Field;
use crate::linalg::unit_vector;
use crate::quiver::{build_lambda, path_basis, BoundQuiverPresentation, FiniteAlgebra, LambdaDescriptor};

use super::hom::{hom_table, HomTable, MarginPolicy};
use super::module::{simple_module, RealizedProjective, RepModule};
use super::resolve::resolve;
use super::HomologyError;

/// `X(p)` is the simple at cycle vertex `p`; `Y(q)` is `P_q` modulo its
/// socle, for a tail vertex `q < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StringObject {
    X(i64),
    Y(i64),
}

impl fmt::Display for StringObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StringObject::X(p) => write!(f, "X{p}"),
            StringObject::Y(q) => write!(f, "Y{q}"),
        }
    }
}

impl Serialize for StringObject {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for StringObject {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HomologyError::InvalidObject(s.to_string());
        let index: i64 = s.get(1..).ok_or_else(bad)?.parse().map_err(|_| bad())?;
        match s.chars().next() {
            Some('X') => Ok(StringObject::X(index)),
            Some('Y') => Ok(StringObject::Y(index)),
            _ => Err(bad()),
        }
    }
}

/// All string objects of Λ(s,s,t), the `X` before the `Y`.
pub fn string_objects(d: LambdaDescriptor) -> Vec<StringObject> {
    let xs = (0..d.s as i64).map(StringObject::X);
    let ys = (-(d.t as i64)..0).map(StringObject::Y);
    xs.chain(ys).collect()
}

fn vertex(alg: &FiniteAlgebra, id: i64) -> usize {
    alg.presentation().quiver().vertex_index(&id.to_string()).expect("Λ vertex")
}

/// Builds `X_p` or `Y_q` over `alg`, which must be the algebra of `build_lambda(d)`
/// with `d = (s, s, t)`.
pub fn build_string_object<F: Field>(
    alg: &FiniteAlgebra,
    d: LambdaDescriptor,
    obj: StringObject,
) -> Result<RepModule<F>, HomologyError> {
    if !d.is_full_cycle() {
        return Err(HomologyError::InvalidObject(format!("{obj} is only defined over Λ(s,s,t), not {d}")));
    }
    let expected = build_lambda(d).map_err(|e| HomologyError::InvalidObject(e.to_string()))?;
    if *alg.presentation() != expected {
        return Err(HomologyError::AlgebraMismatch);
    }
    let (s, t) = (d.s as i64, d.t as i64);
    match obj {
        StringObject::X(p) if (0..s).contains(&p) => simple_module(alg, vertex(alg, p)),
        StringObject::Y(q) if (-t..0).contains(&q) => {
            let socle_vertex = vertex(alg, if s == 1 { 0 } else { 1 });
            let pq = RealizedProjective::<F>::new(alg, &[vertex(alg, q)]);
            // the socle is spanned by the longest path out of q: q → … → 0 → socle vertex
            let longest = pq.basis[socle_vertex]
                .iter()
                .enumerate()
                .max_by_key(|(_, &(_, p))| alg.path(p).len())
                .map(|(i, _)| i)
                .expect("P_q reaches the socle vertex");
            let mut sub = vec![Vec::new(); alg.vertex_count()];
            sub[socle_vertex].push(unit_vector::<F>(pq.basis[socle_vertex].len(), longest));
            Ok(pq.module.quotient(&sub)?.0)
        }
        _ => Err(HomologyError::InvalidObject(format!("{obj} is out of range for {d}"))),
    }
}

/// Default margins for Λ(s,s,t): start at `s + 2`, grow by `s`.
pub fn lambda_margin_policy(d: LambdaDescriptor, max_rounds: usize) -> MarginPolicy {
    MarginPolicy {
        start: d.s + 2,
        step: d.s,
        max_rounds,
    }
}

/// `dim Hom(X, Y[h])` for string objects of Λ(s,s,t), `0 ≤ h ≤ hmax`.
pub fn lambda_hom_table<F: Field>(
    d: LambdaDescriptor,
    x: StringObject,
    y: StringObject,
    hmax: usize,
    max_rounds: usize,
) -> Result<HomTable, HomologyError> {
    let p = build_lambda(d).map_err(|e| HomologyError::InvalidObject(e.to_string()))?;
    let alg = FiniteAlgebra::new(&p)?;
    let mx = build_string_object::<F>(&alg, d, x)?;
    let my = build_string_object::<F>(&alg, d, y)?;
    hom_table(&alg, &mx, &my, hmax, lambda_margin_policy(d, max_rounds))
}

/// Whether the global dimension is infinite.
///
/// For gentle algebras this holds exactly when some cyclic sequence of
/// arrows has every consecutive pair a relation. Otherwise the simples are
/// resolved to a fixed depth; `No` if all resolutions stop, `Unknown` if not.
pub fn infinite_gldim_check(p: &BoundQuiverPresentation) -> Verdict {
    if path_basis(p).is_err() {
        return Verdict::Unknown;
    }
    if is_gentle(p).is_gentle() {
        let q = p.quiver();
        // gentle: each arrow has at most one relation successor
        let succ: Vec<Option<usize>> = (0..q.arrow_count())
            .map(|a| q.arrows_from(q.arrow(a).target).find(|&b| p.is_relation(&[a, b])))
            .collect();
        let cyclic = (0..q.arrow_count()).any(|a0| {
            let mut a = a0;
            for _ in 0..q.arrow_count() {
                match succ[a] {
                    Some(b) if b == a0 => return true,
                    Some(b) => a = b,
                    None => return false,
                }
            }
            false
        });
        return if cyclic { Verdict::Yes } else { Verdict::No };
    }
    let alg = FiniteAlgebra::new(p).expect("finite");
    let cutoff = 2 * alg.dim() + 2;
    for v in 0..alg.vertex_count() {
        let s = simple_module::<crate::Gf32003>(&alg, v).expect("vertex");
        let c = resolve(&alg, &s, cutoff).expect("nonzero");
        if (c.hi() - c.lo()) as usize >= cutoff {
            return Verdict::Unknown;
        }
    }
    Verdict::No
}

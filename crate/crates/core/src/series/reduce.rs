//! Algebra reductions: one-point (co)extensions and radical-projective corners.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::homology::{projective_cover, RealizedProjective};
use crate::linalg::Matrix;
use crate::quiver::{BoundQuiverPresentation, FiniteAlgebra, Path};
use crate::Gf32003;

use super::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalProjectivity {
    pub vertex: String,
    pub projective: bool,
    /// Vertices of the indecomposable projectives in the cover of `rad P_v`.
    pub cover: Vec<String>,
    pub radical_dim: usize,
    pub cover_dim: usize,
}

/// Whether `rad P_v` is projective, i.e. its projective cover is an isomorphism.
pub fn is_radical_projective(p: &BoundQuiverPresentation, v: usize) -> Result<RadicalProjectivity, SeriesError> {
    let alg = FiniteAlgebra::new(p)?;
    let q = p.quiver();
    if v >= q.vertex_count() {
        return Err(SeriesError::UnknownVertex(v.to_string()));
    }
    let pv = RealizedProjective::<Gf32003>::new(&alg, &[v]);
    // rad P_v is the kernel of P_v → S_v, which reads off the coefficient of e_v
    let top_coord = pv.position(&alg, 0, alg.idempotent(v));
    let blocks = (0..q.vertex_count())
        .map(|w| {
            let mut m = Matrix::zeros(usize::from(w == v), pv.basis[w].len());
            if w == v {
                m.set(0, top_coord, num_traits::One::one());
            }
            m
        })
        .collect();
    let (rad, _) = pv.module.kernel(&crate::homology::ModuleMap { blocks });
    let vertex = q.vertex_id(v).to_string();
    if rad.dim() == 0 {
        return Ok(RadicalProjectivity {
            vertex,
            projective: true,
            cover: Vec::new(),
            radical_dim: 0,
            cover_dim: 0,
        });
    }
    let cover = projective_cover(&alg, &rad).expect("nonzero module over its own algebra");
    let cover_dim = cover.realized.module.dim();
    Ok(RadicalProjectivity {
        vertex,
        projective: cover_dim == rad.dim(),
        cover: cover.summands.iter().map(|&w| q.vertex_id(w).to_string()).collect(),
        radical_dim: rad.dim(),
        cover_dim,
    })
}

/// Why a single vertex may be removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DropShape {
    Source,
    Sink,
    RadicalProjective,
}

pub(crate) fn drop_shape(p: &BoundQuiverPresentation, v: usize) -> Result<Option<DropShape>, SeriesError> {
    let q = p.quiver();
    if q.arrows_into(v).next().is_none() {
        return Ok(Some(DropShape::Source));
    }
    if q.arrows_from(v).next().is_none() {
        return Ok(Some(DropShape::Sink));
    }
    if is_radical_projective(p, v)?.projective {
        return Ok(Some(DropShape::RadicalProjective));
    }
    Ok(None)
}

/// Presentation of `ēAē` where `ē` is the sum of the idempotents in `keep`.
///
/// Only a single dropped vertex that is a source, a sink or has projective
/// radical is supported. Arrows of the result are the nonzero paths between
/// kept vertices whose interior avoids kept vertices; relations are the
/// minimal products of those that vanish in `A`.
pub fn idempotent_subalgebra(
    p: &BoundQuiverPresentation,
    keep: &BTreeSet<usize>,
) -> Result<BoundQuiverPresentation, SeriesError> {
    let q = p.quiver();
    let dropped: Vec<usize> = (0..q.vertex_count()).filter(|v| !keep.contains(v)).collect();
    let [v] = dropped.as_slice() else {
        return Err(SeriesError::UnsupportedDrop(format!(
            "exactly one vertex must be dropped, got {}",
            dropped.len()
        )));
    };
    if keep.iter().any(|&w| w >= q.vertex_count()) {
        return Err(SeriesError::UnknownVertex(format!("{:?}", keep)));
    }
    if drop_shape(p, *v)?.is_none() {
        return Err(SeriesError::UnsupportedDrop(format!(
            "vertex {} is neither a source, a sink nor radical-projective",
            q.vertex_id(*v)
        )));
    }
    let alg = FiniteAlgebra::new(p)?;

    // segments: nonzero paths between kept vertices through dropped ones only
    let mut segments: Vec<Path> = Vec::new();
    for &u in keep {
        let mut stack: Vec<Path> = q
            .arrows_from(u)
            .map(|a| Path {
                source: u,
                target: q.arrow(a).target,
                arrows: vec![a],
            })
            .collect();
        while let Some(path) = stack.pop() {
            if alg.index_of(&path).is_none() {
                continue;
            }
            if keep.contains(&path.target) {
                segments.push(path);
                continue;
            }
            for a in q.arrows_from(path.target) {
                let mut next = path.clone();
                next.arrows.push(a);
                next.target = q.arrow(a).target;
                stack.push(next);
            }
        }
    }
    segments.sort_by(|x, y| (x.arrows.len(), &x.arrows).cmp(&(y.arrows.len(), &y.arrows)));

    let mut used: BTreeSet<String> = q.arrows().iter().map(|a| a.id.clone()).collect();
    let names: Vec<String> = segments
        .iter()
        .map(|s| {
            if s.arrows.len() == 1 {
                return q.arrow(s.arrows[0]).id.clone();
            }
            let mut name = s.arrows.iter().map(|&a| q.arrow(a).id.as_str()).collect::<Vec<_>>().join(".");
            while used.contains(&name) {
                name.push('\'');
            }
            used.insert(name.clone());
            name
        })
        .collect();

    let concat = |seq: &[usize]| -> Path {
        let first = &segments[seq[0]];
        let mut path = first.clone();
        for &i in &seq[1..] {
            path.arrows.extend_from_slice(&segments[i].arrows);
            path.target = segments[i].target;
        }
        path
    };
    let is_nonzero = |seq: &[usize]| alg.index_of(&concat(seq)).is_some();

    // minimal vanishing products: extend nonzero sequences one segment at a time
    let mut relations: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..segments.len()).map(|i| vec![i]).collect();
    while let Some(seq) = frontier.pop() {
        let end = segments[*seq.last().expect("nonempty")].target;
        for (j, s) in segments.iter().enumerate() {
            if s.source != end {
                continue;
            }
            let mut next = seq.clone();
            next.push(j);
            if is_nonzero(&next) {
                frontier.push(next);
            } else if is_nonzero(&next[1..]) {
                relations.push(next);
            }
        }
    }

    let result = BoundQuiverPresentation::new(
        keep.iter().map(|&w| q.vertex_id(w).to_string()),
        segments
            .iter()
            .zip(&names)
            .map(|(s, n)| (n.clone(), q.vertex_id(s.source).to_string(), q.vertex_id(s.target).to_string()))
            .collect::<Vec<_>>(),
        relations
            .iter()
            .map(|r| r.iter().map(|&i| names[i].clone()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    )?;
    let expected: usize = keep
        .iter()
        .flat_map(|&a| keep.iter().map(move |&b| (a, b)))
        .map(|(a, b)| alg.paths_between(a, b).len())
        .sum();
    let got = FiniteAlgebra::new(&result)?.dim();
    if got != expected {
        return Err(SeriesError::UnsupportedDrop(format!(
            "corner algebra has dimension {expected} but the presentation found has {got}"
        )));
    }
    Ok(result)
}

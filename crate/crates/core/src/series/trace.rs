//! Composition-series traces: construction by greedy reduction and replay.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::classify::{is_derived_discrete, lambda_normal_form, Verdict};
use crate::quiver::{
    build_lambda, component_vertex_sets, grothendieck_rank, is_isomorphic, serialize_presentation,
    BoundQuiverPresentation, LambdaDescriptor,
};

use super::factors::{composition_factors, FactorClass, FactorMultiset};
use super::reduce::{idempotent_subalgebra, is_radical_projective};
use super::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum SeriesStep {
    /// Split the current piece into its connected components.
    SplitComponents { components: Vec<Vec<String>> },
    /// Remove a source: the piece is a one-point extension.
    StripExtensionVertex { vertex: String, out_arrows: Vec<String> },
    /// Remove a sink: the piece is a one-point coextension.
    StripCoextensionVertex { vertex: String, in_arrows: Vec<String> },
    /// Remove a vertex whose radical is projective, `rad P_v ≅ ⊕ P_w`.
    DropProjRadicalVertex { vertex: String, radical_cover: Vec<String> },
    /// The piece is itself a factor.
    Terminal { factor: FactorClass, witness: String },
}

impl SeriesStep {
    fn emitted(&self) -> Option<FactorClass> {
        match self {
            SeriesStep::SplitComponents { .. } => None,
            SeriesStep::Terminal { factor, .. } => Some(*factor),
            _ => Some(FactorClass::K),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesTrace {
    pub initial: String,
    pub steps: Vec<SeriesStep>,
    pub factors: Vec<FactorClass>,
    pub length: usize,
}

/// The factor a piece is, if it is a terminal piece.
fn terminal_class(p: &BoundQuiverPresentation) -> Option<(FactorClass, String)> {
    let n = p.vertex_count();
    if n == 1 && p.arrow_count() == 0 {
        return Some((FactorClass::K, "single vertex without arrows".into()));
    }
    if n >= 1 && p.arrow_count() == n && p.relations().len() == n {
        let d = LambdaDescriptor { r: n, s: n, t: 0 };
        if is_isomorphic(p, &build_lambda(d).expect("valid")) {
            return Some((FactorClass::TwoTruncatedCycle(n), format!("isomorphic to {d}")));
        }
    }
    None
}

fn ids(p: &BoundQuiverPresentation, arrows: impl Iterator<Item = usize>) -> Vec<String> {
    arrows.map(|a| p.quiver().arrow(a).id.clone()).collect()
}

fn without(p: &BoundQuiverPresentation, v: usize) -> BTreeSet<usize> {
    (0..p.vertex_count()).filter(|&w| w != v).collect()
}

fn split(p: &BoundQuiverPresentation) -> (Vec<Vec<String>>, Vec<BoundQuiverPresentation>) {
    let sets = component_vertex_sets(p);
    let names = sets
        .iter()
        .map(|c| c.iter().map(|&v| p.quiver().vertex_id(v).to_string()).collect())
        .collect();
    (names, sets.iter().map(|c| p.restrict_to(c)).collect())
}

/// Next step for a connected piece, smallest vertex first within each rule.
fn next_step(p: &BoundQuiverPresentation) -> Result<(SeriesStep, Option<BoundQuiverPresentation>), SeriesError> {
    if let Some((factor, witness)) = terminal_class(p) {
        return Ok((SeriesStep::Terminal { factor, witness }, None));
    }
    let q = p.quiver();
    let n = q.vertex_count();
    if let Some(v) = (0..n).find(|&v| q.arrows_into(v).next().is_none()) {
        let step = SeriesStep::StripExtensionVertex {
            vertex: q.vertex_id(v).to_string(),
            out_arrows: ids(p, q.arrows_from(v)),
        };
        return Ok((step, Some(idempotent_subalgebra(p, &without(p, v))?)));
    }
    if let Some(v) = (0..n).find(|&v| q.arrows_from(v).next().is_none()) {
        let step = SeriesStep::StripCoextensionVertex {
            vertex: q.vertex_id(v).to_string(),
            in_arrows: ids(p, q.arrows_into(v)),
        };
        return Ok((step, Some(idempotent_subalgebra(p, &without(p, v))?)));
    }
    for v in 0..n {
        let witness = is_radical_projective(p, v)?;
        if witness.projective {
            let step = SeriesStep::DropProjRadicalVertex {
                vertex: witness.vertex,
                radical_cover: witness.cover,
            };
            return Ok((step, Some(idempotent_subalgebra(p, &without(p, v))?)));
        }
    }
    Err(SeriesError::Stuck {
        residual: serialize_presentation(p),
    })
}

/// Deterministic greedy composition series of a derived discrete algebra.
pub fn strip_series(p: &BoundQuiverPresentation) -> Result<SeriesTrace, SeriesError> {
    let verdict = is_derived_discrete(p).verdict;
    if verdict != Verdict::Yes {
        return Err(SeriesError::NotDerivedDiscrete(verdict));
    }
    let mut steps = Vec::new();
    let (components, pieces) = split(p);
    steps.push(SeriesStep::SplitComponents { components });
    let mut work: VecDeque<BoundQuiverPresentation> = pieces.into();
    while let Some(piece) = work.pop_front() {
        if component_vertex_sets(&piece).len() > 1 {
            let (components, pieces) = split(&piece);
            steps.push(SeriesStep::SplitComponents { components });
            for c in pieces.into_iter().rev() {
                work.push_front(c);
            }
            continue;
        }
        let (step, residual) = next_step(&piece)?;
        steps.push(step);
        if let Some(r) = residual.filter(|r| r.vertex_count() > 0) {
            work.push_front(r);
        }
    }
    let factors: Vec<FactorClass> = steps.iter().filter_map(SeriesStep::emitted).collect();
    Ok(SeriesTrace {
        initial: serialize_presentation(p),
        length: factors.len(),
        steps,
        factors,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum FactorCheck {
    /// Emitted factors equal the closed form from the normal form.
    Matched,
    /// The normal form is not available (tree-gentle components).
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceVerification {
    pub steps_checked: usize,
    pub factors: FactorMultiset,
    pub factor_check: FactorCheck,
    pub length: usize,
    pub rank: usize,
}

fn precondition(index: usize, reason: impl Into<String>) -> SeriesError {
    SeriesError::StepPrecondition {
        index,
        reason: reason.into(),
    }
}

/// Replays a trace against `p`, rechecking every step, the emitted factors
/// and the length bound.
pub fn verify_trace(p: &BoundQuiverPresentation, trace: &SeriesTrace) -> Result<TraceVerification, SeriesError> {
    if trace.initial != serialize_presentation(p) {
        return Err(SeriesError::InitialMismatch);
    }
    let mut work: VecDeque<BoundQuiverPresentation> = VecDeque::from([p.clone()]);
    let mut emitted = Vec::new();
    for (index, step) in trace.steps.iter().enumerate() {
        let piece = work
            .pop_front()
            .ok_or_else(|| precondition(index, "no piece left to reduce"))?;
        if let SeriesStep::SplitComponents { components } = step {
            let (names, pieces) = split(&piece);
            if &names != components {
                return Err(precondition(index, format!("components are {names:?}")));
            }
            for c in pieces.into_iter().rev() {
                work.push_front(c);
            }
            continue;
        }
        if component_vertex_sets(&piece).len() > 1 {
            return Err(precondition(index, "piece is disconnected"));
        }
        let q = piece.quiver();
        let find = |id: &str| {
            q.vertex_index(id)
                .ok_or_else(|| precondition(index, format!("vertex {id} is not in the current piece")))
        };
        let residual_without = |v: usize| {
            idempotent_subalgebra(&piece, &without(&piece, v)).map_err(|e| precondition(index, e.to_string()))
        };
        let residual = match step {
            SeriesStep::SplitComponents { .. } => unreachable!("handled above"),
            SeriesStep::StripExtensionVertex { vertex, .. } => {
                let v = find(vertex)?;
                if q.arrows_into(v).next().is_some() {
                    return Err(precondition(index, format!("{vertex} is not a loop-free source")));
                }
                Some(residual_without(v)?)
            }
            SeriesStep::StripCoextensionVertex { vertex, .. } => {
                let v = find(vertex)?;
                if q.arrows_from(v).next().is_some() {
                    return Err(precondition(index, format!("{vertex} is not a loop-free sink")));
                }
                Some(residual_without(v)?)
            }
            SeriesStep::DropProjRadicalVertex { vertex, .. } => {
                let v = find(vertex)?;
                let witness = is_radical_projective(&piece, v)?;
                if !witness.projective {
                    return Err(precondition(
                        index,
                        format!(
                            "rad P_{vertex} is not projective (dimension {}, cover dimension {})",
                            witness.radical_dim, witness.cover_dim
                        ),
                    ));
                }
                Some(residual_without(v)?)
            }
            SeriesStep::Terminal { factor, .. } => {
                let (actual, _) = terminal_class(&piece)
                    .ok_or_else(|| precondition(index, "piece is neither k nor a 2-truncated cycle algebra"))?;
                if actual != *factor {
                    return Err(SeriesError::FactorMismatch {
                        expected: actual.to_string(),
                        found: factor.to_string(),
                    });
                }
                None
            }
        };
        emitted.push(step.emitted().expect("non-split step emits"));
        if let Some(r) = residual.filter(|r| r.vertex_count() > 0) {
            work.push_front(r);
        }
    }
    if !work.is_empty() {
        return Err(precondition(trace.steps.len(), format!("{} pieces left unreduced", work.len())));
    }
    if emitted != trace.factors {
        return Err(SeriesError::FactorMismatch {
            expected: format!("{emitted:?}"),
            found: format!("{:?}", trace.factors),
        });
    }
    let rank = grothendieck_rank(p);
    if trace.length != emitted.len() || emitted.len() > rank {
        return Err(SeriesError::LengthViolation {
            length: trace.length,
            emitted: emitted.len(),
            rank,
        });
    }
    let factors: FactorMultiset = emitted.iter().copied().collect();
    let factor_check = match composition_factors(&lambda_normal_form(p)) {
        Ok(expected) if expected == factors => FactorCheck::Matched,
        Ok(expected) => {
            return Err(SeriesError::FactorMismatch {
                expected: expected.to_string(),
                found: factors.to_string(),
            })
        }
        Err(e) => FactorCheck::Skipped(e.to_string()),
    };
    Ok(TraceVerification {
        steps_checked: trace.steps.len(),
        factors,
        factor_check,
        length: emitted.len(),
        rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{build_dynkin, direct_sum, kronecker, DynkinType};

    fn lambda(r: usize, s: usize, t: usize) -> BoundQuiverPresentation {
        build_lambda(LambdaDescriptor::new(r, s, t).unwrap()).unwrap()
    }

    fn vertex_of(step: &SeriesStep) -> Option<&str> {
        match step {
            SeriesStep::StripExtensionVertex { vertex, .. }
            | SeriesStep::StripCoextensionVertex { vertex, .. }
            | SeriesStep::DropProjRadicalVertex { vertex, .. } => Some(vertex),
            _ => None,
        }
    }

    #[test]
    fn lambda_121() {
        let trace = strip_series(&lambda(1, 2, 1)).unwrap();
        assert_eq!(trace.steps.len(), 4);
        assert!(matches!(trace.steps[0], SeriesStep::SplitComponents { .. }));
        assert!(matches!(&trace.steps[1], SeriesStep::StripExtensionVertex { vertex, .. } if vertex == "-1"));
        assert!(matches!(&trace.steps[2], SeriesStep::DropProjRadicalVertex { vertex, .. } if vertex == "0"));
        assert!(matches!(trace.steps[3], SeriesStep::Terminal { factor: FactorClass::K, .. }));
        assert_eq!(trace.factors, vec![FactorClass::K; 3]);
    }

    #[test]
    fn lambda_222() {
        let trace = strip_series(&lambda(2, 2, 2)).unwrap();
        let strips: Vec<_> = trace.steps.iter().filter_map(vertex_of).collect();
        assert_eq!(strips, vec!["-2", "-1"]);
        let factors: FactorMultiset = trace.factors.iter().copied().collect();
        assert_eq!(factors.to_string(), "{K: 2, TwoTruncatedCycle(2): 1}");
        verify_trace(&lambda(2, 2, 2), &trace).unwrap();
    }

    #[test]
    fn hereditary_a3() {
        let p = build_dynkin(DynkinType::A(3)).unwrap();
        let trace = strip_series(&p).unwrap();
        assert_eq!(trace.factors, vec![FactorClass::K; 3]);
        assert_eq!(verify_trace(&p, &trace).unwrap().factor_check, FactorCheck::Matched);
    }

    #[test]
    fn disconnecting_strip_emits_a_split() {
        // a source with two arms: removing it leaves two components
        let p = BoundQuiverPresentation::from_parts(&["0", "1", "2"], &[("a", "0", "1"), ("b", "0", "2")], &[]).unwrap();
        let trace = strip_series(&p).unwrap();
        let splits = trace
            .steps
            .iter()
            .filter(|s| matches!(s, SeriesStep::SplitComponents { .. }))
            .count();
        assert_eq!(splits, 2);
        verify_trace(&p, &trace).unwrap();
    }

    #[test]
    fn refuses_non_discrete() {
        assert!(matches!(
            strip_series(&kronecker()),
            Err(SeriesError::NotDerivedDiscrete(Verdict::No))
        ));
    }

    #[test]
    fn forged_radical_drop_fails() {
        let p = lambda(2, 2, 0);
        let forged = SeriesTrace {
            initial: serialize_presentation(&p),
            steps: vec![
                SeriesStep::SplitComponents {
                    components: vec![vec!["0".into(), "1".into()]],
                },
                SeriesStep::DropProjRadicalVertex {
                    vertex: "0".into(),
                    radical_cover: vec!["1".into()],
                },
                SeriesStep::Terminal {
                    factor: FactorClass::K,
                    witness: String::new(),
                },
            ],
            factors: vec![FactorClass::K, FactorClass::K],
            length: 2,
        };
        assert!(matches!(
            verify_trace(&p, &forged),
            Err(SeriesError::StepPrecondition { index: 1, .. })
        ));
    }

    #[test]
    fn wrong_terminal_class_is_a_factor_mismatch() {
        let p = lambda(2, 2, 1);
        let mut trace = strip_series(&p).unwrap();
        let last = trace.steps.len() - 1;
        trace.steps[last] = SeriesStep::Terminal {
            factor: FactorClass::TwoTruncatedCycle(3),
            witness: String::new(),
        };
        assert!(matches!(verify_trace(&p, &trace), Err(SeriesError::FactorMismatch { .. })));
    }

    #[test]
    fn length_is_checked() {
        let p = lambda(1, 2, 0);
        let mut trace = strip_series(&p).unwrap();
        trace.length += 1;
        assert!(matches!(verify_trace(&p, &trace), Err(SeriesError::LengthViolation { .. })));
    }

    #[test]
    fn direct_sum_series() {
        let p = direct_sum(&[lambda(2, 2, 1), build_dynkin(DynkinType::A(3)).unwrap()]);
        let trace = strip_series(&p).unwrap();
        let v = verify_trace(&p, &trace).unwrap();
        assert_eq!(v.factors.to_string(), "{K: 4, TwoTruncatedCycle(2): 1}");
        assert_eq!(v.factor_check, FactorCheck::Matched);
    }
}

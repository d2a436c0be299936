use std::fmt;

use serde::Serialize;

use crate::quiver::BoundQuiverPresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum GentleCondition {
    /// At most two arrows start and at most two arrows end at each vertex.
    G1,
    /// Every relation has length two.
    G2,
    /// Each arrow has at most one relation partner on each side.
    G3,
    /// Each arrow has at most one nonzero continuation on each side.
    G4,
}

impl fmt::Display for GentleCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GentleViolation {
    pub condition: GentleCondition,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GentleCertificate {
    pub verdict: bool,
    pub violations: Vec<GentleViolation>,
}

impl GentleCertificate {
    pub fn is_gentle(&self) -> bool {
        self.verdict
    }
}

pub fn is_gentle(p: &BoundQuiverPresentation) -> GentleCertificate {
    let q = p.quiver();
    let mut violations = Vec::new();
    let mut push = |condition, witness: String| violations.push(GentleViolation { condition, witness });

    for v in 0..q.vertex_count() {
        let (out, inc) = (q.arrows_from(v).count(), q.arrows_into(v).count());
        if out > 2 || inc > 2 {
            push(
                GentleCondition::G1,
                format!("vertex {} has {inc} incoming and {out} outgoing arrows", q.vertex_id(v)),
            );
        }
    }
    for r in p.relations() {
        if r.len() != 2 {
            let ids: Vec<&str> = r.iter().map(|&a| q.arrow(a).id.as_str()).collect();
            push(GentleCondition::G2, format!("relation {} has length {}", ids.join(" "), r.len()));
        }
    }
    for b in 0..q.arrow_count() {
        let beta = q.arrow(b);
        let before: Vec<usize> = q.arrows_into(beta.source).collect();
        let after: Vec<usize> = q.arrows_from(beta.target).collect();
        let rel_before = before.iter().filter(|&&a| p.is_relation(&[a, b])).count();
        let rel_after = after.iter().filter(|&&c| p.is_relation(&[b, c])).count();
        if rel_before > 1 || rel_after > 1 {
            push(
                GentleCondition::G3,
                format!("arrow {} has {rel_before} relation partners before and {rel_after} after", beta.id),
            );
        }
        let free_before = before.len() - rel_before;
        let free_after = after.len() - rel_after;
        if free_before > 1 || free_after > 1 {
            push(
                GentleCondition::G4,
                format!(
                    "arrow {} has {free_before} nonzero composites before and {free_after} after",
                    beta.id
                ),
            );
        }
    }
    GentleCertificate {
        verdict: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{build_lambda, LambdaDescriptor};

    #[test]
    fn lambda_family_is_gentle() {
        for s in 1..=5 {
            for r in 1..=s {
                for t in 0..=3 {
                    let p = build_lambda(LambdaDescriptor::new(r, s, t).unwrap()).unwrap();
                    assert!(is_gentle(&p).is_gentle(), "Λ({r},{s},{t})");
                }
            }
        }
    }

    #[test]
    fn three_outgoing_arrows() {
        let p = BoundQuiverPresentation::from_parts(
            &["0", "1", "2", "3"],
            &[("a", "0", "1"), ("b", "0", "2"), ("c", "0", "3")],
            &[],
        )
        .unwrap();
        let cert = is_gentle(&p);
        assert!(!cert.verdict);
        assert!(cert.violations.iter().any(|v| v.condition == GentleCondition::G1));
    }

    #[test]
    fn branching_nonzero_continuations() {
        let p = BoundQuiverPresentation::from_parts(
            &["0", "1", "2", "3"],
            &[("a", "0", "1"), ("b", "1", "2"), ("c", "1", "3")],
            &[],
        )
        .unwrap();
        let cert = is_gentle(&p);
        assert_eq!(cert.violations.len(), 1);
        assert_eq!(cert.violations[0].condition, GentleCondition::G4);
        assert!(cert.violations[0].witness.contains("arrow a"));
    }

    #[test]
    fn double_relation_and_long_relation() {
        let p = BoundQuiverPresentation::from_parts(
            &["0", "1", "2", "3"],
            &[("a", "0", "1"), ("b", "1", "2"), ("c", "1", "3")],
            &[&["a", "b"], &["a", "c"]],
        )
        .unwrap();
        assert!(is_gentle(&p).violations.iter().any(|v| v.condition == GentleCondition::G3));
        let q = BoundQuiverPresentation::from_parts(
            &["0", "1", "2", "3"],
            &[("a", "0", "1"), ("b", "1", "2"), ("c", "2", "3")],
            &[&["a", "b", "c"]],
        )
        .unwrap();
        assert!(is_gentle(&q).violations.iter().any(|v| v.condition == GentleCondition::G2));
    }
}

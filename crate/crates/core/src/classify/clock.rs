use serde::Serialize;

use super::gentle::is_gentle;
use super::graph::{cycle_count, unique_cycle, Step};
use super::ClassifyError;
use crate::quiver::BoundQuiverPresentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStep {
    pub arrow: String,
    /// Whether the traversal follows the arrow's orientation.
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClockReport {
    pub cycle: Vec<CycleStep>,
    pub m_with: usize,
    pub m_against: usize,
    pub satisfied: bool,
}

/// Counts zero relations between consecutive arrows of the unique cycle,
/// split by whether the relation runs with or against the traversal.
///
/// The traversal direction is chosen so that `m_with >= m_against`; ties
/// keep the walk starting from the smallest vertex.
pub fn clock_condition(p: &BoundQuiverPresentation) -> Result<ClockReport, ClassifyError> {
    let betti = cycle_count(p);
    if betti != 1 {
        return Err(ClassifyError::NotOneCycle(betti));
    }
    if !is_gentle(p).is_gentle() {
        return Err(ClassifyError::NotGentle);
    }
    let mut walk = unique_cycle(p).expect("one cycle");
    let (mut m_with, mut m_against) = count(p, &walk);
    if m_with < m_against {
        walk.reverse();
        for step in &mut walk {
            step.forward = !step.forward;
        }
        std::mem::swap(&mut m_with, &mut m_against);
    }
    let q = p.quiver();
    Ok(ClockReport {
        cycle: walk
            .iter()
            .map(|s| CycleStep {
                arrow: q.arrow(s.arrow).id.clone(),
                forward: s.forward,
            })
            .collect(),
        m_with,
        m_against,
        satisfied: m_with == m_against,
    })
}

fn count(p: &BoundQuiverPresentation, walk: &[Step]) -> (usize, usize) {
    let (mut with, mut against) = (0, 0);
    for (i, x) in walk.iter().enumerate() {
        let y = walk[(i + 1) % walk.len()];
        match (x.forward, y.forward) {
            (true, true) if p.is_relation(&[x.arrow, y.arrow]) => with += 1,
            (false, false) if p.is_relation(&[y.arrow, x.arrow]) => against += 1,
            _ => {}
        }
    }
    (with, against)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{build_dynkin, build_lambda, kronecker, DynkinType, LambdaDescriptor};

    fn lambda(r: usize, s: usize, t: usize) -> BoundQuiverPresentation {
        build_lambda(LambdaDescriptor::new(r, s, t).unwrap()).unwrap()
    }

    #[test]
    fn lambda_fails_clock() {
        let c = clock_condition(&lambda(1, 2, 0)).unwrap();
        assert_eq!((c.m_with, c.m_against, c.satisfied), (1, 0, false));
        let c = clock_condition(&lambda(3, 3, 0)).unwrap();
        assert_eq!((c.m_with, c.m_against), (3, 0));
        let c = clock_condition(&lambda(1, 1, 2)).unwrap();
        assert_eq!((c.m_with, c.m_against), (1, 0));
    }

    #[test]
    fn kronecker_satisfies_clock() {
        let c = clock_condition(&kronecker()).unwrap();
        assert_eq!((c.m_with, c.m_against, c.satisfied), (0, 0, true));
    }

    #[test]
    fn reversed_relation_is_canonicalized() {
        // cycle 0 -> 1 -> 2 <- 0 with the relation on 0 -> 1 -> 2; whichever
        // way the walk starts, the report has m_with >= m_against
        let p = BoundQuiverPresentation::from_parts(
            &["0", "1", "2"],
            &[("a", "0", "1"), ("b", "1", "2"), ("c", "0", "2")],
            &[&["a", "b"]],
        )
        .unwrap();
        let c = clock_condition(&p).unwrap();
        assert_eq!((c.m_with, c.m_against), (1, 0));
        let ab = c.cycle.iter().position(|s| s.arrow == "a").unwrap();
        assert!(c.cycle[ab].forward);
    }

    #[test]
    fn balanced_cycle() {
        // two relations, one on each side of a non-oriented 4-cycle
        let p = BoundQuiverPresentation::from_parts(
            &["0", "1", "2", "3"],
            &[("a", "0", "1"), ("b", "1", "2"), ("c", "0", "3"), ("d", "3", "2")],
            &[&["a", "b"], &["c", "d"]],
        )
        .unwrap();
        assert!(clock_condition(&p).unwrap().satisfied);
    }

    #[test]
    fn preconditions() {
        let a3 = build_dynkin(DynkinType::A(3)).unwrap();
        assert_eq!(clock_condition(&a3), Err(ClassifyError::NotOneCycle(0)));
    }
}

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::classify::{ComponentClass, DerivedEquivClass};

use super::SeriesError;

/// A composition factor: the base field or a 2-truncated cycle algebra Λ(s,s,0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorClass {
    K,
    TwoTruncatedCycle(usize),
}

impl FactorClass {
    /// Number of simples of the factor.
    pub fn size(&self) -> usize {
        match *self {
            FactorClass::K => 1,
            FactorClass::TwoTruncatedCycle(s) => s,
        }
    }
}

impl fmt::Display for FactorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorClass::K => f.write_str("K"),
            FactorClass::TwoTruncatedCycle(s) => write!(f, "TwoTruncatedCycle({s})"),
        }
    }
}

impl Serialize for FactorClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Factor classes with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FactorMultiset(pub BTreeMap<FactorClass, usize>);

impl FactorMultiset {
    pub fn add(&mut self, class: FactorClass, times: usize) {
        if times > 0 {
            *self.0.entry(class).or_insert(0) += times;
        }
    }

    pub fn multiplicity(&self, class: FactorClass) -> usize {
        self.0.get(&class).copied().unwrap_or(0)
    }

    /// Total number of simples, `Σ multiplicity × size`.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|(c, m)| c.size() * m).sum()
    }

    pub fn count(&self) -> usize {
        self.0.values().sum()
    }

    pub fn union(&self, other: &FactorMultiset) -> FactorMultiset {
        let mut out = self.clone();
        for (&c, &m) in &other.0 {
            out.add(c, m);
        }
        out
    }
}

impl FromIterator<FactorClass> for FactorMultiset {
    fn from_iter<I: IntoIterator<Item = FactorClass>>(iter: I) -> Self {
        let mut m = FactorMultiset::default();
        for c in iter {
            m.add(c, 1);
        }
        m
    }
}

impl fmt::Display for FactorMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(c, m)| format!("{c}: {m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn known_components(cls: &DerivedEquivClass) -> Result<(), SeriesError> {
    for (index, c) in cls.components.iter().enumerate() {
        if let ComponentClass::Unknown(reason) = c {
            return Err(SeriesError::UnknownComponent {
                index,
                reason: reason.clone(),
            });
        }
    }
    Ok(())
}

/// One 2-truncated cycle per component Λ(s,s,t); every other simple
/// contributes a copy of `K`.
pub fn composition_factors(cls: &DerivedEquivClass) -> Result<FactorMultiset, SeriesError> {
    known_components(cls)?;
    let mut out = FactorMultiset::default();
    for c in &cls.components {
        match c {
            ComponentClass::Lambda(d) if d.is_full_cycle() => {
                out.add(FactorClass::TwoTruncatedCycle(d.s), 1);
                out.add(FactorClass::K, d.t);
            }
            ComponentClass::Lambda(d) => out.add(FactorClass::K, d.rank()),
            ComponentClass::DynkinHereditary(ty) => out.add(FactorClass::K, ty.rank()),
            ComponentClass::Unknown(_) => unreachable!("checked above"),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityVerdict {
    pub simple: bool,
    /// The normal form when simple, otherwise the reduction that splits it.
    pub witness: String,
    pub n_independent: bool,
}

/// Simple exactly for `k` and the 2-truncated cycle algebras; the answer
/// does not depend on `n`.
pub fn is_n_derived_simple(cls: &DerivedEquivClass, n: usize) -> Result<SimplicityVerdict, SeriesError> {
    if n == 0 {
        return Err(SeriesError::InvalidN);
    }
    known_components(cls)?;
    let (simple, witness) = match cls.components.as_slice() {
        [] => (false, "zero algebra".to_string()),
        [ComponentClass::Lambda(d)] if d.is_full_cycle() && d.t == 0 => (true, d.to_string()),
        [ComponentClass::Lambda(d)] if d.is_full_cycle() => (
            false,
            format!("{d} is a one-point extension of Λ({},{},{})", d.r, d.s, d.t - 1),
        ),
        [ComponentClass::Lambda(d)] => (false, format!("{d} has {} composition factors K", d.rank())),
        [ComponentClass::DynkinHereditary(ty)] if ty.rank() == 1 => (true, "k".to_string()),
        [ComponentClass::DynkinHereditary(ty)] => (false, format!("hereditary {ty} has {} simples, each a factor K", ty.rank())),
        many => (false, format!("decomposes into {} components", many.len())),
    };
    Ok(SimplicityVerdict {
        simple,
        witness,
        n_independent: true,
    })
}

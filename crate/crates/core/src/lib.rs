//! Exact computations for derived discrete bound quiver algebras.
//!
//! ```
//! use ddisc::classify::{is_derived_discrete, lambda_normal_form};
//! use ddisc::quiver::{build_lambda, LambdaDescriptor};
//! use ddisc::series::{composition_factors, strip_series, verify_trace};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! let p = build_lambda(LambdaDescriptor::new(2, 2, 1)?)?;
//! assert_eq!(is_derived_discrete(&p).verdict.to_string(), "yes");
//! let factors = composition_factors(&lambda_normal_form(&p))?;
//! assert_eq!(factors.to_string(), "{K: 1, TwoTruncatedCycle(2): 1}");
//! let trace = strip_series(&p)?;
//! verify_trace(&p, &trace)?;
//! # Ok(())
//! # }
//! ```

pub mod classify;
pub mod field;
pub mod homology;
pub mod linalg;
pub mod quiver;
pub mod series;

pub type Rational = num_rational::BigRational;
pub type Gf32003 = field::Fp<32003>;

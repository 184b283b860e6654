//! Exact scalar and ring arithmetic.

pub mod crt;
pub mod cyclotomic;
pub(crate) mod display;
pub mod linalg;
pub mod poly;
pub mod quotient;
pub mod rational;
pub mod series;

pub use crt::{crt_idempotents, LocalSummand};
pub use cyclotomic::{Cyclotomic, CyclotomicField};
pub use poly::Poly;
pub use quotient::{QuotientElement, QuotientRing};
pub use rational::Rational;
pub use series::TruncatedSeries;

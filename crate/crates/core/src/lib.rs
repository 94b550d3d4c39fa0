//! Bounds on the higher topological complexity `TC_k` of lens spaces
//! `L^{2n+1}_m`.
//!
//! * [`modarith`]: factorization, base-p digits, valuations of binomials.
//! * [`graded_ring`]: sparse tensor powers of `H*(L^{2n+1}_m; ℤ/m)`.
//! * [`certificates`]: zero-divisor products and the lower-bound search.
//! * [`bounds`]: closed-form upper bounds.
//! * [`report`]: reconciled lower/upper bounds and exactness rules.

pub mod bounds;
pub mod certificates;
pub mod error;
pub mod graded_ring;
pub mod modarith;
pub mod report;

pub use certificates::{
    build_certificate, certificate_product, lower_bound, xbar, ybar, zbar, Branch, Certificate,
    LowerBound, Verification, VerifyMode,
};
pub use error::{Error, Result};
pub use graded_ring::{Degree, Factor, Generator, Monomial, RingSpec, TensorElement};
pub use modarith::{alpha_p, divides_binomial_power, factorize, vp_binomial, PrimeFactorization};
pub use report::{report, table, BoundReport, ExactnessRule, ReportOptions};

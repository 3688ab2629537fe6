//! Exact, mechanical verification of the rooted-forest / set-partition identity
//!
//! ```text
//! Σ_{P ∈ Π(Ω)} Π_{T ∈ P} u (Σ_{x∈T} x)^{|T|-1}  =  u (u + Σ_{x∈Ω} x)^{m-1}
//! ```
//!
//! and its fixed-block-count specialization
//!
//! ```text
//! Σ_{P ∈ Π_p(Ω)} Π_{T ∈ P} (Σ_{x∈T} x)^{|T|-1}  =  C(m-1, p-1) (Σ_{x∈Ω} x)^{m-p}
//! ```
//!
//! Both sides are expanded symbolically ([`identity`]) and compared against a
//! brute-force generating function over all rooted labeled forests on
//! `{1..m}` ([`forest`]), which are themselves produced from Prüfer codes
//! ([`prufer`]) through the root-deletion bijection. The [`words`] module
//! counts occurrences of a word on both sides when the variables do not
//! commute, where the identity breaks down.
//!
//! Polynomials are generic over their coefficient ring ([`Coefficient`]);
//! [`Poly`] (arbitrary precision) is what everything defaults to.

pub mod coeff;
pub mod error;
pub mod forest;
pub mod identity;
pub mod poly;
pub mod prufer;
pub mod selftest;
pub mod setpart;
pub mod words;

pub use coeff::{binomial, Coefficient};
pub use error::{Error, Result};
pub use forest::{RootedForest, RootedTreeOnBlock};
pub use identity::{IdentityReport, RouteCheck, Witness};
pub use poly::{ExponentVector, Polynomial};
pub use prufer::{LabeledTree, PruferCode};
pub use setpart::SetPartition;
pub use words::WordQuery;

use num_bigint::BigInt;

/// Arbitrary-precision integer polynomial in `u, x1..xm`.
pub type Poly = Polynomial<BigInt>;

/// Fixed-width polynomial. Fine for the default bounds (the largest
/// coefficient at m = 8 is 5040) and much faster than [`Poly`].
pub type Poly128 = Polynomial<i128>;

pub type PolyReport = IdentityReport<BigInt>;

/// Size limits for the exhaustive routes.
///
/// Every enumerating operation has a plain form that uses
/// [`Limits::default()`] and a `_with` form that takes explicit limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `m` for the symbolic sides of both equations.
    pub symbolic_m: usize,
    /// Largest `m` for which `verify_eq2` also runs the forest route.
    pub threeway_m: usize,
    /// Largest `m` accepted by forest enumeration.
    pub forest_m: usize,
    /// Largest vertex count accepted by Prüfer tree enumeration.
    pub tree_n: usize,
    /// Largest block accepted by rooted-tree-on-block enumeration.
    pub block_size: usize,
    /// Largest `m` for the Bell/Stirling recurrences.
    pub count_m: usize,
    /// Largest `m` for the brute-force word oracle.
    pub word_oracle_m: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            symbolic_m: 8,
            threeway_m: 6,
            forest_m: 7,
            tree_n: 8,
            block_size: 8,
            count_m: 20,
            word_oracle_m: 8,
        }
    }
}

pub(crate) fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        return Err(Error::Range {
            what,
            value,
            min,
            max,
        });
    }
    Ok(())
}

//! Exact calculator for normal affine surfaces with a `C*`-action given by
//! DPD data on the affine line.
//!
//! A hyperbolic surface is `Spec A₀[D₊, D₋]` for a pair of Q-divisors with
//! `D₊ + D₋ ≤ 0` on `A¹ = Spec C[t]`; a parabolic one is `Spec A₀[D]`.
//! Points are rational, so all arithmetic is exact.

pub mod abelian;
pub mod crosscheck;
pub mod divisor;
pub mod error;
pub mod hyperbolic;
pub mod parabolic;
pub mod report;
pub(crate) mod serde_big;
pub mod toric;

pub use abelian::{
    group_from_presentation, smith_normal_form, FgAbelianGroup, IntMatrix, SmithForm,
};
pub use divisor::{
    canonical_pair, contains, function_from_divisor, pairs_equivalent, parse_rat, rat, DpdPair,
    FactoredPoly, FactoredRatFn, Point, QDivisor, Rat,
};
pub use error::{Error, Result};
pub use toric::{
    hilbert_basis, normalize_type, quotient_action, semigroup_contains, type_of_lattice_cone,
    types_isomorphic, ConeParams, LatticeCone, QuotSingType, QuotientAction,
};

//! Parabolic surfaces `V = Spec A₀[D]` over `A¹`, where
//! `A₀[D] = ⊕_{n≥0} H⁰(A¹, O(⌊nD⌋))·uⁿ`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::divisor::{FactoredPoly, FactoredRatFn, Point, QDivisor, Rat};
use crate::error::{Error, Result};
use crate::toric::{normalize_type, QuotSingType};

/// The normal form `(d, P)`: `A₀[D]` is the normalization of `u^d - P(t)v`.
///
/// Either `d = 1` and `P = 1`, or `d ≥ 2`, every multiplicity `rᵢ` of `P`
/// lies in `(0, d)` and `gcd(d, r₁, …, rₙ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DpPair {
    #[serde(with = "crate::serde_big")]
    d: BigInt,
    p: FactoredPoly,
}

impl DpPair {
    pub fn new(d: BigInt, p: FactoredPoly) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::NonPositiveDegree(d));
        }
        if d.is_one() {
            if !p.is_one() {
                return Err(Error::Parse("d = 1 requires P = 1".into()));
            }
        } else {
            let mut g = d.clone();
            for (pt, r) in p.roots() {
                if r >= &d {
                    return Err(Error::Parse(format!(
                        "multiplicity {r} at {pt} is not below d = {d}"
                    )));
                }
                g = g.gcd(r);
            }
            if !g.is_one() {
                return Err(Error::Parse(format!("gcd(d, multiplicities) = {g} != 1")));
            }
        }
        Ok(DpPair { d, p })
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn p(&self) -> &FactoredPoly {
        &self.p
    }
}

impl fmt::Display for DpPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d = {}, P = {})", self.d, self.p)
    }
}

/// Monic generator `gₙ` of `Aₙ = gₙ·uⁿ·C[t]`, i.e. `div gₙ = -⌊nD⌋`.
pub fn graded_piece(divisor: &QDivisor, n: u64) -> FactoredRatFn {
    let floor = divisor.scale_int(&BigInt::from(n)).floor();
    FactoredRatFn::from_divisor(&-&floor).expect("floor is integral")
}

/// Least `d` with `A_{md} = (A_d)^m`, equal to the denominator of `D`.
pub fn veronese_degree(divisor: &QDivisor) -> BigInt {
    divisor.denominator()
}

pub fn canonical_dp(divisor: &QDivisor) -> DpPair {
    let frac = divisor.frac();
    let d = frac.denominator();
    let p =
        FactoredPoly::from_divisor(&frac.scale_int(&d)).expect("d·{D} is integral and effective");
    DpPair { d, p }
}

/// `D(d, P) = div(P)/d`.
pub fn parabolic_from_equation(d: &BigInt, p: &FactoredPoly) -> Result<QDivisor> {
    if !d.is_positive() {
        return Err(Error::NonPositiveDegree(d.clone()));
    }
    Ok(p.divisor().scale(&Rat::new(BigInt::one(), d.clone())))
}

/// Singular points of `Spec A₀[D]`: at `a` with `D(a) = -e/d` in lowest
/// terms and `d > 1`, a cyclic quotient singularity of type `(d, e mod d)`.
pub fn parabolic_singularities(divisor: &QDivisor) -> Vec<(Point, QuotSingType)> {
    divisor
        .iter()
        .filter(|(_, c)| !c.is_integer())
        .map(|(p, c)| {
            let d = c.denom().clone();
            let e = -c.numer();
            (
                p.clone(),
                normalize_type(&d, &e).expect("lowest terms are coprime"),
            )
        })
        .collect()
}

/// `D = -min div(fᵢ)/mᵢ` for `A₀[f₁u^{m₁}, …, fₙu^{mₙ}]`.
pub fn dpd_from_generators_parabolic(gens: &[(FactoredRatFn, u64)]) -> Result<QDivisor> {
    Ok(-&min_over_generators(gens)?)
}

pub(crate) fn min_over_generators(gens: &[(FactoredRatFn, u64)]) -> Result<QDivisor> {
    let mut acc: Option<QDivisor> = None;
    for (f, m) in gens {
        if *m == 0 {
            return Err(Error::NonPositiveDegree(BigInt::zero()));
        }
        let term = f
            .divisor()
            .scale(&Rat::new(BigInt::one(), BigInt::from(*m)));
        acc = Some(match acc {
            None => term,
            Some(prev) => prev.pointwise_min(&term),
        });
    }
    acc.ok_or(Error::EmptyGenerators)
}

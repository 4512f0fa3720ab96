use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::has_positive_degree_unit;
use crate::divisor::{DpdPair, FactoredPoly, FactoredRatFn, QDivisor, Rat};
use crate::error::{Error, Result};
use crate::parabolic::min_over_generators;
use crate::toric::mod_inverse;

/// Homogeneous element `f·u^{±n}` as `(f, n)`.
pub type Generator = (FactoredRatFn, u64);

/// Generators and relations of `A = A₀[D₊, D₋]` with `u₊ = u`, `u₋ = Q·u⁻¹`,
/// `v₊ = u^{d₊}/P₊` and `v₋ = u₋^{d₋}/P₋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationData {
    #[serde(with = "crate::serde_big")]
    pub d_plus: BigInt,
    #[serde(with = "crate::serde_big")]
    pub d_minus: BigInt,
    #[serde(with = "crate::serde_big")]
    pub k: BigInt,
    #[serde(with = "crate::serde_big")]
    pub d_plus_reduced: BigInt,
    #[serde(with = "crate::serde_big")]
    pub d_minus_reduced: BigInt,
    pub p_plus: FactoredPoly,
    pub p_minus: FactoredPoly,
    pub q: FactoredPoly,
    pub p: FactoredPoly,
    pub q_plus: FactoredPoly,
    /// `true` when the three relations reduce to `v₊^{d₋}v₋^{d₊} = P`.
    pub single_equation: bool,
    pub has_units: bool,
    pub equations: Vec<String>,
}

fn power(var: &str, exp: &BigInt) -> String {
    if exp.is_one() {
        var.to_string()
    } else {
        format!("{var}^{exp}")
    }
}

fn times(poly: &FactoredPoly, var: &str) -> String {
    if poly.is_one() {
        var.to_string()
    } else {
        format!("{}*{var}", poly.render("t"))
    }
}

fn small(n: &BigInt) -> u64 {
    n.to_u64().expect("degree fits in u64")
}

impl EquationData {
    /// `P₊^{d′₋}·P₋^{d′₊}·P = Q^{k·d′₊·d′₋}`.
    pub fn identity_holds(&self) -> bool {
        let lhs = self
            .p_plus
            .pow(small(&self.d_minus_reduced))
            .mul(&self.p_minus.pow(small(&self.d_plus_reduced)))
            .mul(&self.p);
        let rhs = self.q.pow(small(
            &(&self.k * &self.d_plus_reduced * &self.d_minus_reduced),
        ));
        lhs == rhs
    }

    /// Homogeneous generators `(f, n)` standing for `f·u^{∓n}`:
    /// negative side `u₋, v₋`, positive side `u₊, v₊`.
    pub fn generators(&self) -> (Vec<Generator>, Vec<Generator>) {
        let q = self.q.as_ratfn();
        let neg = vec![
            (q.clone(), 1),
            (
                q.pow(&self.d_minus).div(self.p_minus.as_ratfn()),
                small(&self.d_minus),
            ),
        ];
        let pos = vec![
            (FactoredRatFn::one(), 1),
            (self.p_plus.as_ratfn().inverse(), small(&self.d_plus)),
        ];
        (neg, pos)
    }
}

/// Defining equations, computed on the canonical representative.
pub fn defining_equations(pair: &DpdPair) -> EquationData {
    let canon = pair.canonical();
    let (dp, dm) = (canon.d_plus(), canon.d_minus());
    let d_plus = dp.denominator();
    let d_minus = dm.denominator();
    let poly = |x: &QDivisor| FactoredPoly::from_divisor(x).expect("effective integral divisor");
    let p_plus = poly(&dp.frac().scale_int(&d_plus));
    let p_minus = poly(&dm.frac().scale_int(&d_minus));
    let q = poly(&-&(&dp.floor() + &dm.floor()));
    let k = d_plus.gcd(&d_minus);
    let d_plus_reduced = &d_plus / &k;
    let d_minus_reduced = &d_minus / &k;
    let lcm = &k * &d_plus_reduced * &d_minus_reduced;
    let p_rat = q
        .as_ratfn()
        .pow(&lcm)
        .div(&p_plus.as_ratfn().pow(&d_minus_reduced))
        .div(&p_minus.as_ratfn().pow(&d_plus_reduced));
    let p = FactoredPoly::try_from(p_rat).expect("-lcm·(D+ + D-) is effective");
    let q_plus = FactoredPoly::try_from(q.as_ratfn().pow(&d_plus).div(p_plus.as_ratfn()))
        .expect("-d+(D+ + floor D-) is effective");

    let has_units = has_positive_degree_unit(&canon);
    let single_equation = k.is_one() && !has_units;
    let equations = if single_equation {
        vec![format!(
            "{}*{} = {}",
            power("v_+", &d_minus),
            power("v_-", &d_plus),
            p.render("t")
        )]
    } else {
        vec![
            format!("{} = {}", power("u_-", &d_minus), times(&p_minus, "v_-")),
            format!(
                "{}*{} = {}",
                power("v_+", &d_minus_reduced),
                power("v_-", &d_plus_reduced),
                p.render("t")
            ),
            format!("v_+*{} = {}", power("u_-", &d_plus), q_plus.render("t")),
        ]
    };
    EquationData {
        d_plus,
        d_minus,
        k,
        d_plus_reduced,
        d_minus_reduced,
        p_plus,
        p_minus,
        q,
        p,
        q_plus,
        single_equation,
        has_units,
        equations,
    }
}

/// The hypersurface `u^d·v = P(t)`, whose normalization is `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceData {
    #[serde(with = "crate::serde_big")]
    pub d: BigInt,
    pub p: FactoredPoly,
}

/// When `D₊` is integral: `d` = denominator of `D₊ + D₋` and
/// `div P = -d·(D₊ + D₋)`.
pub fn hypersurface_case(pair: &DpdPair) -> Option<HypersurfaceData> {
    if !pair.d_plus().is_integral() {
        return None;
    }
    let sum = pair.sum();
    let d = sum.denominator();
    let p = FactoredPoly::from_divisor(&-&sum.scale_int(&d)).expect("sum is non-positive");
    Some(HypersurfaceData { d, p })
}

/// The pair `(0, -div P/d)` of `u^d·v = P(t)`.
pub fn hypersurface_pair(d: &BigInt, p: &FactoredPoly) -> Result<DpdPair> {
    if !d.is_positive() {
        return Err(Error::NonPositiveDegree(d.clone()));
    }
    let minus = -&p.divisor().scale(&Rat::new(BigInt::one(), d.clone()));
    DpdPair::new(QDivisor::zero(), minus)
}

/// `D₋ = -min div hᵢ/nᵢ` and `D₊ = -min div fⱼ/mⱼ` for
/// `A = A₀[h₁u^{-n₁}, …, f₁u^{m₁}, …]`.
pub fn dpd_from_generators(
    neg: &[(FactoredRatFn, u64)],
    pos: &[(FactoredRatFn, u64)],
) -> Result<DpdPair> {
    let d_minus = -&min_over_generators(neg)?;
    let d_plus = -&min_over_generators(pos)?;
    DpdPair::new(d_plus, d_minus)
}

/// Pair of the normalization of `v₊^{d₋}v₋^{d₊} = P` for coprime degrees,
/// using the Bézout solution `d₊q - d₋p = 1` with minimal `|q|`.
pub fn dpd_from_coprime_hypersurface(
    d_plus: &BigInt,
    d_minus: &BigInt,
    p: &FactoredPoly,
) -> Result<DpdPair> {
    check_degrees(d_plus, d_minus)?;
    let q0 = mod_inverse(d_plus, d_minus).expect("coprime");
    let q = if &q0 * 2 <= *d_minus {
        q0
    } else {
        q0 - d_minus
    };
    let bp = (d_plus * &q - 1) / d_minus;
    dpd_from_coprime_hypersurface_with(d_plus, d_minus, p, (&bp, &q))
}

/// Same as [`dpd_from_coprime_hypersurface`] with an explicit Bézout pair.
pub fn dpd_from_coprime_hypersurface_with(
    d_plus: &BigInt,
    d_minus: &BigInt,
    p: &FactoredPoly,
    bezout: (&BigInt, &BigInt),
) -> Result<DpdPair> {
    check_degrees(d_plus, d_minus)?;
    let (bp, bq) = bezout;
    if !(d_plus * bq - d_minus * bp).is_one() {
        return Err(Error::Parse(format!(
            "({bp}, {bq}) does not satisfy {d_plus}*q - {d_minus}*p = 1"
        )));
    }
    let div = p.divisor();
    let plus = div.scale(&Rat::new(bp.clone(), d_plus.clone()));
    let minus = -&div.scale(&Rat::new(bq.clone(), d_minus.clone()));
    DpdPair::new(plus, minus)
}

fn check_degrees(d_plus: &BigInt, d_minus: &BigInt) -> Result<()> {
    for d in [d_plus, d_minus] {
        if !d.is_positive() {
            return Err(Error::NonPositiveDegree(d.clone()));
        }
    }
    if !d_plus.gcd(d_minus).is_one() {
        return Err(Error::DegreesNotCoprime {
            d_plus: d_plus.clone(),
            d_minus: d_minus.clone(),
        });
    }
    Ok(())
}

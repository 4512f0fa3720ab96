use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::divisor::{DpdPair, FactoredPoly, Point, QDivisor, Rat};
use crate::error::{Error, Result};
use crate::hyperbolic::hypersurface_pair;
use crate::toric::mod_inverse;

/// Normalization of `A` in `A[ᵈ√(t·u^b)]`, over the `s`-line with `s^k = t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverResult {
    #[serde(with = "crate::serde_big")]
    pub b: BigInt,
    #[serde(with = "crate::serde_big")]
    pub d: BigInt,
    /// Degree `k = gcd(b, d)` of the base change `s ↦ s^k`.
    #[serde(with = "crate::serde_big")]
    pub k: BigInt,
    #[serde(with = "crate::serde_big")]
    pub beta: BigInt,
    /// `D±′ = (k/d)(p*D± ± β[0])` before normalization.
    pub raw_pair: DpdPair,
    /// Canonical form of `raw_pair`.
    pub new_pair: DpdPair,
    pub coordinate: String,
}

/// Cyclic cover with `β` the least non-negative solution of `βb ≡ k mod d`.
pub fn cyclic_cover(pair: &DpdPair, b: u64, d: u64) -> Result<CoverResult> {
    let (bb, dd) = (BigInt::from(b), BigInt::from(d));
    if d == 0 {
        return Err(Error::NonPositiveDegree(dd));
    }
    let k = bb.gcd(&dd);
    let beta = if b == 0 {
        BigInt::zero()
    } else {
        // βb ≡ k mod d  ⇔  β(b/k) ≡ 1 mod d/k
        mod_inverse(&(&bb / &k), &(&dd / &k)).expect("b/k and d/k are coprime")
    };
    cyclic_cover_with_beta(pair, b, d, &beta)
}

/// Cyclic cover with an explicit `β` satisfying `βb ≡ k mod d`.
pub fn cyclic_cover_with_beta(
    pair: &DpdPair,
    b: u64,
    d: u64,
    beta: &BigInt,
) -> Result<CoverResult> {
    let (bb, dd) = (BigInt::from(b), BigInt::from(d));
    if d == 0 {
        return Err(Error::NonPositiveDegree(dd));
    }
    let k = bb.gcd(&dd);
    if !(beta * &bb - &k).mod_floor(&dd).is_zero() {
        return Err(Error::Parse(format!(
            "beta = {beta} does not satisfy beta*{b} = {k} mod {d}"
        )));
    }
    if !k.is_one() {
        if let Some(point) = pair.support().into_iter().find(|p| !p.is_origin()) {
            return Err(Error::UnsupportedCoverSupport {
                k: k.clone(),
                point,
            });
        }
    }
    // on divisors supported in {0}, pulling back along s ↦ s^k multiplies by k
    let pull = |x: &QDivisor| x.scale_int(&k);
    let factor = Rat::new(k.clone(), dd.clone());
    let shift = QDivisor::single(Point::origin(), Rat::from_integer(beta.clone()));
    let plus = (&pull(pair.d_plus()) + &shift).scale(&factor);
    let minus = (&pull(pair.d_minus()) - &shift).scale(&factor);
    let raw_pair = DpdPair::new(plus, minus)?;
    let new_pair = raw_pair.canonical();
    let coordinate = if k.is_one() {
        "s = t".to_string()
    } else {
        format!("s^{k} = t")
    };
    Ok(CoverResult {
        b: bb,
        d: dd,
        k,
        beta: beta.clone(),
        raw_pair,
        new_pair,
        coordinate,
    })
}

/// `P(s) = base(s^d)·s^{s_power}` where `base` has no root at `0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PulledBackPoly {
    pub base: FactoredPoly,
    #[serde(with = "crate::serde_big")]
    pub d: BigInt,
    #[serde(with = "crate::serde_big")]
    pub s_power: BigInt,
}

impl PulledBackPoly {
    pub fn degree(&self) -> BigInt {
        self.base.degree() * &self.d + &self.s_power
    }

    /// The factored form, available when every root of `P` is rational.
    pub fn factored(&self) -> Option<FactoredPoly> {
        let mono = FactoredPoly::from_roots(
            [(Point::origin(), self.s_power.clone())]
                .into_iter()
                .filter(|(_, r)| !r.is_zero()),
        )
        .expect("positive exponent");
        if self.d.is_one() {
            Some(self.base.mul(&mono))
        } else if self.base.is_one() {
            Some(mono)
        } else {
            None
        }
    }

    /// Dense coefficients in ascending order of `s`.
    pub fn coefficients(&self) -> Option<Vec<Rat>> {
        let base = self.base.coefficients()?;
        let d = self.d.to_usize()?;
        let shift = self.s_power.to_usize()?;
        let len = (base.len() - 1).checked_mul(d)?.checked_add(shift + 1)?;
        if len > 1 << 16 {
            return None;
        }
        let mut out = vec![Rat::zero(); len];
        for (i, c) in base.into_iter().enumerate() {
            out[i * d + shift] = c;
        }
        Some(out)
    }

    pub fn render(&self) -> String {
        if let Some(f) = self.factored() {
            return f.render("s");
        }
        let base = self.base.render(&format!("s^{}", self.d));
        if self.s_power.is_zero() {
            base
        } else if self.s_power.is_one() {
            format!("{base}*s")
        } else {
            format!("{base}*s^{}", self.s_power)
        }
    }
}

/// `A ≅ (A_{k,P})^{Z_d}` with `ζ·s = ζs`, `ζ·ũ = ζᵉũ`, `ζ·v = v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientPresentation {
    /// Point moved to `0` by the translation.
    pub translated_from: Point,
    /// Representative with `D₊ = -(e/d)[0]` used for the construction.
    pub shifted_pair: DpdPair,
    #[serde(with = "crate::serde_big")]
    pub k: BigInt,
    pub p: PulledBackPoly,
    #[serde(with = "crate::serde_big")]
    pub d: BigInt,
    #[serde(with = "crate::serde_big")]
    pub e: BigInt,
    pub action: String,
}

impl QuotientPresentation {
    /// The pair `(0, -div P/k)` of `A_{k,P}` over the `s`-line.
    pub fn cover_pair(&self) -> Option<DpdPair> {
        let p = self.p.factored()?;
        Some(hypersurface_pair(&self.k, &p).expect("k >= 1"))
    }
}

/// Applies when `{-D₊}` is supported in at most one point.
pub fn quotient_presentation(pair: &DpdPair) -> Option<QuotientPresentation> {
    let frac = (-pair.d_plus()).frac();
    if frac.len() > 1 {
        return None;
    }
    let (origin, d, e) = match frac.iter().next() {
        Some((p, c)) => (p.clone(), c.denom().clone(), c.numer().clone()),
        None => (Point::origin(), BigInt::one(), BigInt::zero()),
    };
    let moved = pair.translated(origin.coordinate());
    let shift = -&moved.d_plus().ceil();
    let shifted = moved.shifted(&shift).expect("integral shift");
    let minus = shifted.d_minus();
    let k = minus.denominator();
    let q_div = -&minus.scale_int(&k);
    let ord0 = q_div.value_at(&Point::origin()).to_integer();
    let base_div = QDivisor::from_entries(
        q_div
            .iter()
            .filter(|(p, _)| !p.is_origin())
            .map(|(p, c)| (p.clone(), c.clone())),
    );
    let base = FactoredPoly::from_divisor(&base_div).expect("D- <= 0 away from 0");
    let s_power = &d * ord0 + &k * &e;
    assert!(!s_power.is_negative(), "D+ + D- <= 0 at 0");
    let action = if d.is_one() {
        "trivial group".to_string()
    } else {
        format!("Z/{d} acting by s -> z*s, u -> z^{e}*u, v -> v")
    };
    Some(QuotientPresentation {
        translated_from: origin,
        shifted_pair: shifted,
        k,
        p: PulledBackPoly {
            base,
            d: d.clone(),
            s_power,
        },
        d,
        e,
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(plus: &[(i64, i64, i64)], minus: &[(i64, i64, i64)]) -> DpdPair {
        DpdPair::new(QDivisor::from_ints(plus), QDivisor::from_ints(minus)).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn cover_examples() {
        let c = cyclic_cover(&pair(&[(0, -1, 2)], &[(0, -1, 2)]), 0, 2).unwrap();
        assert_eq!(c.k, big(2));
        assert!(c.new_pair.equivalent(&pair(&[], &[(0, -2, 1)])));
        assert_eq!(c.new_pair, pair(&[], &[(0, -2, 1)]));

        let s = pair(&[(0, -1, 2)], &[(1, -1, 3)]);
        let c = cyclic_cover(&s, 0, 1).unwrap();
        assert_eq!(c.raw_pair, s);

        let c = cyclic_cover(&pair(&[], &[(0, -1, 2)]), 0, 2).unwrap();
        assert_eq!(c.new_pair, pair(&[], &[(0, -1, 1)]));
    }

    #[test]
    fn cover_with_coprime_b() {
        // k = 1, β·3 ≡ 1 mod 5 gives β = 2
        let s = pair(&[(1, -1, 2)], &[(1, -1, 2), (2, -1, 1)]);
        let c = cyclic_cover(&s, 3, 5).unwrap();
        assert_eq!(c.k, big(1));
        assert_eq!(c.beta, big(2));
        let expected_plus = QDivisor::from_ints(&[(0, 2, 5), (1, -1, 10)]);
        assert_eq!(c.raw_pair.d_plus(), &expected_plus);
    }

    #[test]
    fn cover_rejects_support_away_from_origin() {
        let s = pair(&[], &[(1, -1, 2)]);
        assert_eq!(
            cyclic_cover(&s, 2, 4),
            Err(Error::UnsupportedCoverSupport {
                k: big(2),
                point: Point::from_int(1),
            })
        );
        assert!(cyclic_cover(&s, 1, 4).is_ok());
        assert!(cyclic_cover(&s, 0, 0).is_err());
    }

    #[test]
    fn beta_choice_is_irrelevant() {
        let s = pair(&[(0, -1, 3)], &[(0, -2, 5)]);
        let base = cyclic_cover(&s, 4, 6).unwrap();
        assert_eq!(base.beta, big(2));
        for beta in [-4, -1, 5, 8, 11] {
            let c = cyclic_cover_with_beta(&s, 4, 6, &big(beta)).unwrap();
            assert_eq!(c.new_pair, base.new_pair);
        }
        assert!(cyclic_cover_with_beta(&s, 4, 6, &big(1)).is_err());
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_presentation(&pair(&[(0, -1, 2)], &[(0, -1, 2)])).unwrap();
        assert_eq!(
            (q.k.clone(), q.d.clone(), q.e.clone()),
            (big(2), big(2), big(1))
        );
        assert_eq!(q.p.factored(), Some(FactoredPoly::from_ints(&[(0, 4)])));
        assert_eq!(q.p.render(), "s^4");

        let q = quotient_presentation(&pair(&[], &[(0, -1, 2)])).unwrap();
        assert_eq!(
            (q.k.clone(), q.d.clone(), q.e.clone()),
            (big(2), big(1), big(0))
        );
        // u² = s·v: the quotient by the trivial group is the surface itself
        assert_eq!(q.p.factored(), Some(FactoredPoly::from_ints(&[(0, 1)])));
        assert_eq!(q.action, "trivial group");

        assert!(
            quotient_presentation(&pair(&[(0, -1, 2), (1, -1, 3)], &[(0, -1, 2), (1, -1, 1)]))
                .is_none()
        );
    }

    #[test]
    fn quotient_translates_and_pulls_back() {
        let s = pair(&[(3, -2, 3)], &[(3, -1, 3), (5, -1, 1)]);
        let q = quotient_presentation(&s).unwrap();
        assert_eq!(q.translated_from, Point::from_int(3));
        assert_eq!(
            (q.d.clone(), q.e.clone(), q.k.clone()),
            (big(3), big(2), big(3))
        );
        // Q = t·(t - 2)³, P(s) = (s³ - 2)³·s^{3 + 6}
        assert_eq!(q.p.base, FactoredPoly::from_ints(&[(2, 3)]));
        assert_eq!(q.p.s_power, big(9));
        assert_eq!(q.p.factored(), None);
        assert_eq!(q.p.render(), "(s^3 - 2)^3*s^9");
        assert_eq!(q.p.degree(), big(18));
        let coeffs = q.p.coefficients().unwrap();
        assert_eq!(coeffs.len(), 19);
        assert_eq!(coeffs[9], Rat::from_integer(big(-8)));
        assert_eq!(coeffs[18], Rat::one());
    }

    #[test]
    fn quotient_matches_cover() {
        let s = pair(&[(0, -2, 5)], &[(0, -3, 4)]);
        let q = quotient_presentation(&s).unwrap();
        let c = cyclic_cover(&s, 0, 5).unwrap();
        assert!(c.new_pair.equivalent(&q.cover_pair().unwrap()));
    }
}

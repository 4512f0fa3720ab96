//! Affine toric surfaces `V_{d,e} = Spec A_{d,e}` and cyclic quotient
//! singularity types.
//!
//! `A_{d,e}` is spanned by the monomials `xᵃyᵇ` with `b ≥ 0` and
//! `ad - be ≥ 0`, i.e. the lattice points of the cone `C((1,0), (e,d))`.
//! It is the ring of invariants of `Z_d` acting on `C[u,v]` with weights
//! `(1, e)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters `(d, e)` of the semigroup cone, `0 ≤ e < d`, `gcd(e, d) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConeParams {
    d: i64,
    e: i64,
}

impl ConeParams {
    pub fn new(d: i64, e: i64) -> Result<Self> {
        if d < 1 || e < 0 || e >= d || e.gcd(&d) != 1 {
            return Err(Error::NotCoprime {
                d: BigInt::from(d),
                e: BigInt::from(e),
            });
        }
        Ok(ConeParams { d, e })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn e(&self) -> i64 {
        self.e
    }
}

impl TryFrom<&QuotSingType> for ConeParams {
    type Error = Error;

    fn try_from(t: &QuotSingType) -> Result<Self> {
        match (t.d.to_i64(), t.e.to_i64()) {
            (Some(d), Some(e)) => ConeParams::new(d, e),
            _ => Err(Error::InvalidCone(format!(
                "type {t} too large for enumeration"
            ))),
        }
    }
}

/// Cyclic quotient singularity type `(d, e)`, normalized to `0 ≤ e < d`.
/// `d = 1` is a smooth point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuotSingType {
    #[serde(with = "crate::serde_big")]
    d: BigInt,
    #[serde(with = "crate::serde_big")]
    e: BigInt,
}

impl QuotSingType {
    pub fn smooth() -> Self {
        QuotSingType {
            d: BigInt::one(),
            e: BigInt::zero(),
        }
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn e(&self) -> &BigInt {
        &self.e
    }

    pub fn is_smooth(&self) -> bool {
        self.d.is_one()
    }

    /// The other representative `(d, e')` with `ee' ≡ 1 mod d`.
    pub fn dual(&self) -> QuotSingType {
        if self.is_smooth() {
            return self.clone();
        }
        let inv = mod_inverse(&self.e, &self.d).expect("normalized type has invertible e");
        QuotSingType {
            d: self.d.clone(),
            e: inv,
        }
    }

    /// `A_{d,e}` notation.
    pub fn algebra_name(&self) -> String {
        format!("A_{{{},{}}}", self.d, self.e)
    }

    /// `1/d(1,e)` notation.
    pub fn weights_name(&self) -> String {
        format!("1/{}(1,{})", self.d, self.e)
    }
}

impl fmt::Display for QuotSingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d, self.e)
    }
}

/// Inverse of `a` modulo `m` in `[0, m)`.
pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let g = a.extended_gcd(m);
    if !g.gcd.abs().is_one() {
        return None;
    }
    Some((g.x * g.gcd.signum()).mod_floor(m))
}

/// Reduces `e` into `[0, d)`; fails when `gcd(e, d) ≠ 1`.
pub fn normalize_type(d: &BigInt, e: &BigInt) -> Result<QuotSingType> {
    if !d.is_positive() {
        return Err(Error::NotCoprime {
            d: d.clone(),
            e: e.clone(),
        });
    }
    let reduced = e.mod_floor(d);
    if !reduced.gcd(d).is_one() {
        return Err(Error::NotCoprime {
            d: d.clone(),
            e: e.clone(),
        });
    }
    Ok(QuotSingType {
        d: d.clone(),
        e: reduced,
    })
}

pub fn normalize_type_i64(d: i64, e: i64) -> Result<QuotSingType> {
    normalize_type(&BigInt::from(d), &BigInt::from(e))
}

/// `V_{d,e} ≅ V_{d',e'}` iff `d = d'` and `e = e'` or `ee' ≡ 1 mod d`.
pub fn types_isomorphic(a: &QuotSingType, b: &QuotSingType) -> bool {
    if a.d != b.d {
        return false;
    }
    a.e == b.e || (&a.e * &b.e).mod_floor(&a.d).is_one() || a.d.is_one()
}

/// `(a, b) ∈ σ∨ ∩ Z²`: `b ≥ 0` and `ad - be ≥ 0`.
pub fn semigroup_contains(point: (i64, i64), cone: ConeParams) -> bool {
    let (a, b) = point;
    b >= 0 && a * cone.d - b * cone.e >= 0
}

/// Minimal generating set of `σ∨ ∩ Z²`, sorted lexicographically.
///
/// Every indecomposable element lies in the parallelogram spanned by the
/// extremal generators `(1,0)` and `(e,d)`, so only the box
/// `[0, 1+e] × [0, d]` is enumerated.
pub fn hilbert_basis(cone: ConeParams) -> Vec<(i64, i64)> {
    let (d, e) = (cone.d, cone.e);
    let mut members = Vec::new();
    for a in 0..=1 + e {
        for b in 0..=d {
            if (a, b) != (0, 0) && semigroup_contains((a, b), cone) {
                members.push((a, b));
            }
        }
    }
    let mut basis: Vec<(i64, i64)> = members
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !members.iter().any(|&(x, y)| {
                (x, y) != (a, b)
                    && semigroup_contains((a - x, b - y), cone)
                    && (a - x, b - y) != (0, 0)
            })
        })
        .collect();
    basis.sort();
    basis
}

/// Hirzebruch–Jung continued fraction `num/den = b₁ - 1/(b₂ - …)`, all `bᵢ ≥ 2`.
/// Requires `num > den > 0`; returns the empty list when `num = den`.
pub fn hirzebruch_jung(num: i64, den: i64) -> Vec<i64> {
    assert!(
        num >= den && den > 0,
        "hirzebruch_jung needs num >= den > 0"
    );
    let (mut p, mut q) = (num, den);
    let mut out = Vec::new();
    while q != 0 && p != q {
        // b = ceil(p/q); p/q = b - q'/q with q' = bq - p
        let b = (p + q - 1) / q;
        out.push(b);
        let r = b * q - p;
        p = q;
        q = r;
    }
    out
}

/// Number of minimal generators of `A_{d,e}` predicted by the continued
/// fraction of `d/(d-e)`.
pub fn hilbert_basis_size_hj(cone: ConeParams) -> usize {
    if cone.d == 1 {
        return 2;
    }
    hirzebruch_jung(cone.d, cone.d - cone.e).len() + 2
}

/// `A_{d,e} = C[u,v]^{Z_d}` with `ζ.u = ζu`, `ζ.v = ζᵉv`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientAction {
    #[serde(with = "crate::serde_big")]
    pub order: BigInt,
    #[serde(with = "crate::serde_big::list")]
    pub weights: Vec<BigInt>,
}

impl QuotientAction {
    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }
}

impl fmt::Display for QuotientAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial group");
        }
        let w: Vec<String> = self.weights.iter().map(|x| x.to_string()).collect();
        write!(f, "Z/{} acting with weights ({})", self.order, w.join(","))
    }
}

pub fn quotient_action(cone: ConeParams) -> QuotientAction {
    QuotientAction {
        order: BigInt::from(cone.d),
        weights: vec![BigInt::one(), BigInt::from(cone.e)],
    }
}

/// Two-dimensional cone `C(ray1, ray2)` in `Z²` with primitive, independent rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCone {
    ray1: (BigInt, BigInt),
    ray2: (BigInt, BigInt),
}

impl LatticeCone {
    pub fn new(ray1: (BigInt, BigInt), ray2: (BigInt, BigInt)) -> Result<Self> {
        for r in [&ray1, &ray2] {
            if !r.0.gcd(&r.1).is_one() {
                return Err(Error::InvalidCone(format!(
                    "ray ({}, {}) is not primitive",
                    r.0, r.1
                )));
            }
        }
        if det(&ray1, &ray2).is_zero() {
            return Err(Error::InvalidCone("rays are linearly dependent".into()));
        }
        Ok(LatticeCone { ray1, ray2 })
    }

    pub fn from_i64(ray1: (i64, i64), ray2: (i64, i64)) -> Result<Self> {
        Self::new(
            (BigInt::from(ray1.0), BigInt::from(ray1.1)),
            (BigInt::from(ray2.0), BigInt::from(ray2.1)),
        )
    }

    pub fn ray1(&self) -> &(BigInt, BigInt) {
        &self.ray1
    }

    pub fn ray2(&self) -> &(BigInt, BigInt) {
        &self.ray2
    }

    pub fn swapped(&self) -> LatticeCone {
        LatticeCone {
            ray1: self.ray2.clone(),
            ray2: self.ray1.clone(),
        }
    }

    /// `|det(ray1, ray2)|`.
    pub fn multiplicity(&self) -> BigInt {
        det(&self.ray1, &self.ray2).abs()
    }
}

fn det(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> BigInt {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// A vector `(p, q)` with `det(ray, (p, q)) = sign`, choosing the
/// representative with minimal `|q|` (ties towards smaller `q`).
pub(crate) fn complement(ray: &(BigInt, BigInt), sign: &BigInt) -> (BigInt, BigInt) {
    let (x, y) = ray;
    if x.is_zero() {
        // y = ±1: -y·p = sign
        return (-(sign * y), BigInt::zero());
    }
    let g = x.extended_gcd(y);
    // g.x·x + g.y·y = ±1
    let unit = &g.gcd;
    let q0 = sign * &g.x * unit;
    let p0 = -(sign * &g.y * unit);
    // general solution: (p0 + n·x, q0 + n·y)... shift along the ray
    let candidates = |n: &BigInt| (&p0 + n * x, &q0 + n * y);
    if y.is_zero() {
        return candidates(&BigInt::zero());
    }
    let center = (-&q0).div_floor(y);
    let mut best = candidates(&center);
    for delta in [-1i64, 1, 2] {
        let c = candidates(&(&center + delta));
        if c.1.abs() < best.1.abs() || (c.1.abs() == best.1.abs() && c.1 < best.1) {
            best = c;
        }
    }
    best
}

/// Type of the toric singularity `Spec C[cone ∩ Z²]`.
///
/// Changes basis so that `ray1` becomes `(1, 0)`; then `ray2` becomes
/// `(e', Δ)` with `Δ = |det|` and the type is `(Δ, e' mod Δ)`.
pub fn type_of_lattice_cone(cone: &LatticeCone) -> QuotSingType {
    let dt = det(&cone.ray1, &cone.ray2);
    let sign = dt.signum();
    let (p, q) = complement(&cone.ray1, &sign);
    // ray2 = x·ray1 + |dt|·(p,q);  x = det(ray2, (p,q)) / det(ray1, (p,q))
    let x = (&cone.ray2.0 * &q - &cone.ray2.1 * &p) * &sign;
    normalize_type(&dt.abs(), &x).expect("primitive rays give a coprime type")
}

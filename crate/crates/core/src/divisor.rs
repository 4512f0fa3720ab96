//! Points, Q-divisors and factored rational functions on the affine line
//! `A¹ = Spec Q[t]`, together with DPD pairs `(D₊, D₋)`.
//!
//! Every value here is exact. Divisors are kept in sparse normal form (no
//! zero coefficients), so derived `PartialEq` is mathematical equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let trimmed = s.trim();
    let bad = || Error::Parse(format!("invalid rational number {s:?}"));
    match trimmed.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(
            BigInt::from_str(trimmed).map_err(|_| bad())?,
        )),
    }
}

/// A rational point `a` of the affine line.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Rat);

impl Point {
    pub fn new(coordinate: Rat) -> Self {
        Point(coordinate)
    }

    pub fn from_int(a: i64) -> Self {
        Point(int(a))
    }

    pub fn origin() -> Self {
        Point(Rat::zero())
    }

    pub fn coordinate(&self) -> &Rat {
        &self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.is_zero()
    }

    /// Image under the translation `t ↦ t - shift`.
    pub fn translated(&self, shift: &Rat) -> Point {
        Point(&self.0 - shift)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rat(s).map(Point)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(D::Error::custom)
    }
}

/// A Q-divisor `Σ cₐ [a]` on the affine line.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QDivisor {
    entries: BTreeMap<Point, Rat>,
}

impl QDivisor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c·[a]`.
    pub fn single(point: Point, coeff: Rat) -> Self {
        let mut d = Self::zero();
        d.add_at(point, coeff);
        d
    }

    /// Builds a divisor from `(point, coefficient)` entries; repeated points
    /// are summed and zero totals dropped.
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (Point, Rat)>,
    {
        let mut d = Self::zero();
        for (p, c) in entries {
            d.add_at(p, c);
        }
        d
    }

    /// Shorthand for tests and examples: `[(point, numer, denom)]`.
    pub fn from_ints(entries: &[(i64, i64, i64)]) -> Self {
        Self::from_entries(
            entries
                .iter()
                .map(|&(a, n, d)| (Point::from_int(a), rat(n, d))),
        )
    }

    fn add_at(&mut self, point: Point, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.entries.entry(point).or_insert_with(Rat::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.entries.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coefficient at `point` (zero off the support).
    pub fn value_at(&self, point: &Point) -> Rat {
        self.entries.get(point).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn support(&self) -> Vec<Point> {
        self.entries.keys().cloned().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &Rat)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn map_coeffs(&self, f: impl Fn(&Rat) -> Rat) -> Self {
        Self::from_entries(self.entries.iter().map(|(p, c)| (p.clone(), f(c))))
    }

    pub fn floor(&self) -> Self {
        self.map_coeffs(|c| c.floor())
    }

    pub fn ceil(&self) -> Self {
        self.map_coeffs(|c| c.ceil())
    }

    /// Fractional part `{D} = D - ⌊D⌋`, coefficients in `[0, 1)`.
    pub fn frac(&self) -> Self {
        self.map_coeffs(|c| c - c.floor())
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(|c| c.is_integer())
    }

    pub fn is_effective(&self) -> bool {
        self.entries.values().all(|c| !c.is_negative())
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &QDivisor) -> bool {
        (other - self).is_effective()
    }

    /// Least `d ≥ 1` with `d·D` integral.
    pub fn denominator(&self) -> BigInt {
        self.entries
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        self.map_coeffs(|c| c * factor)
    }

    pub fn scale_int(&self, factor: &BigInt) -> Self {
        self.scale(&Rat::from_integer(factor.clone()))
    }

    /// Pointwise minimum over the union of supports, absent points read as 0.
    pub fn pointwise_min(&self, other: &QDivisor) -> Self {
        self.combine(other, |a, b| a.min(b))
    }

    pub fn pointwise_max(&self, other: &QDivisor) -> Self {
        self.combine(other, |a, b| a.max(b))
    }

    fn combine(&self, other: &QDivisor, f: impl Fn(Rat, Rat) -> Rat) -> Self {
        let points: std::collections::BTreeSet<&Point> =
            self.entries.keys().chain(other.entries.keys()).collect();
        Self::from_entries(
            points
                .into_iter()
                .map(|p| (p.clone(), f(self.value_at(p), other.value_at(p)))),
        )
    }

    /// Pushes the divisor along `t ↦ t - shift`.
    pub fn translated(&self, shift: &Rat) -> Self {
        Self::from_entries(
            self.entries
                .iter()
                .map(|(p, c)| (p.translated(shift), c.clone())),
        )
    }
}

impl Add for &QDivisor {
    type Output = QDivisor;

    fn add(self, rhs: &QDivisor) -> QDivisor {
        let mut out = self.clone();
        for (p, c) in &rhs.entries {
            out.add_at(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &QDivisor {
    type Output = QDivisor;

    fn sub(self, rhs: &QDivisor) -> QDivisor {
        self + &(-rhs)
    }
}

impl Neg for &QDivisor {
    type Output = QDivisor;

    fn neg(self) -> QDivisor {
        self.map_coeffs(|c| -c)
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_integer() {
                write!(f, "{c}[{p}]")?;
            } else {
                write!(f, "({c})[{p}]")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct DivisorEntry {
    point: String,
    coeff: String,
}

impl Serialize for QDivisor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<DivisorEntry> = self
            .entries
            .iter()
            .map(|(p, c)| DivisorEntry {
                point: p.to_string(),
                coeff: c.to_string(),
            })
            .collect();
        entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QDivisor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<DivisorEntry>::deserialize(deserializer)?;
        let mut entries = BTreeMap::new();
        for entry in raw {
            let point: Point = entry.point.parse().map_err(D::Error::custom)?;
            let coeff = parse_rat(&entry.coeff).map_err(D::Error::custom)?;
            if coeff.is_zero() {
                return Err(D::Error::custom(format!(
                    "zero coefficient at point {point}"
                )));
            }
            if entries.insert(point.clone(), coeff).is_some() {
                return Err(D::Error::custom(format!("point {point} listed twice")));
            }
        }
        Ok(QDivisor { entries })
    }
}

/// Monic rational function `∏ (t - a)^{rₐ}` with nonzero integer exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredRatFn {
    roots: BTreeMap<Point, BigInt>,
}

impl FactoredRatFn {
    pub fn one() -> Self {
        Self::default()
    }

    /// The coordinate function `t - a`.
    pub fn linear(a: Point) -> Self {
        let mut roots = BTreeMap::new();
        roots.insert(a, BigInt::one());
        FactoredRatFn { roots }
    }

    pub fn from_roots<I>(roots: I) -> Self
    where
        I: IntoIterator<Item = (Point, BigInt)>,
    {
        let mut out = BTreeMap::new();
        for (p, r) in roots {
            let slot = out.entry(p).or_insert_with(BigInt::zero);
            *slot += r;
        }
        out.retain(|_, r: &mut BigInt| !r.is_zero());
        FactoredRatFn { roots: out }
    }

    /// Shorthand: `[(point, exponent)]` with integer points.
    pub fn from_ints(roots: &[(i64, i64)]) -> Self {
        Self::from_roots(
            roots
                .iter()
                .map(|&(a, r)| (Point::from_int(a), BigInt::from(r))),
        )
    }

    /// The function `f` with `div f = E`; fails unless `E` is integral.
    pub fn from_divisor(divisor: &QDivisor) -> Result<Self> {
        let mut roots = BTreeMap::new();
        for (p, c) in divisor.iter() {
            if !c.is_integer() {
                return Err(Error::NonIntegralDivisor {
                    point: p.clone(),
                    coeff: Box::new(c.clone()),
                });
            }
            roots.insert(p.clone(), c.to_integer());
        }
        Ok(FactoredRatFn { roots })
    }

    pub fn divisor(&self) -> QDivisor {
        QDivisor::from_entries(
            self.roots
                .iter()
                .map(|(p, r)| (p.clone(), Rat::from_integer(r.clone()))),
        )
    }

    pub fn roots(&self) -> impl Iterator<Item = (&Point, &BigInt)> {
        self.roots.iter()
    }

    pub fn order_at(&self, point: &Point) -> BigInt {
        self.roots.get(point).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.roots.values().all(|r| r.is_positive())
    }

    pub fn mul(&self, other: &FactoredRatFn) -> Self {
        Self::from_roots(
            self.roots
                .iter()
                .chain(other.roots.iter())
                .map(|(p, r)| (p.clone(), r.clone())),
        )
    }

    pub fn div(&self, other: &FactoredRatFn) -> Self {
        self.mul(&other.inverse())
    }

    pub fn inverse(&self) -> Self {
        FactoredRatFn {
            roots: self.roots.iter().map(|(p, r)| (p.clone(), -r)).collect(),
        }
    }

    pub fn pow(&self, exp: &BigInt) -> Self {
        Self::from_roots(self.roots.iter().map(|(p, r)| (p.clone(), r * exp)))
    }

    /// Splits into numerator and denominator polynomials.
    pub fn numerator_denominator(&self) -> (FactoredPoly, FactoredPoly) {
        let num = self.roots.iter().filter(|(_, r)| r.is_positive());
        let den = self.roots.iter().filter(|(_, r)| r.is_negative());
        (
            FactoredPoly(Self::from_roots(num.map(|(p, r)| (p.clone(), r.clone())))),
            FactoredPoly(Self::from_roots(den.map(|(p, r)| (p.clone(), -r)))),
        )
    }

    /// Renders as a product of linear factors in the variable `var`.
    pub fn render(&self, var: &str) -> String {
        let (num, den) = self.numerator_denominator();
        let top = render_product(&num.0, var);
        if den.is_one() {
            top
        } else {
            let bottom = render_product(&den.0, var);
            if den.0.roots.len() == 1 && den.0.roots.values().all(|r| r.is_one()) {
                format!("{top}/{bottom}")
            } else {
                format!("{top}/({bottom})")
            }
        }
    }
}

fn render_factor(point: &Point, var: &str) -> String {
    let a = point.coordinate();
    if a.is_zero() {
        var.to_string()
    } else if a.is_positive() {
        format!("({var} - {a})")
    } else {
        format!("({var} + {})", -a)
    }
}

fn render_product(f: &FactoredRatFn, var: &str) -> String {
    if f.roots.is_empty() {
        return "1".to_string();
    }
    f.roots
        .iter()
        .map(|(p, r)| {
            let base = render_factor(p, var);
            if r.is_one() {
                base
            } else {
                format!("{base}^{r}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for FactoredRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t"))
    }
}

/// Monic polynomial `∏ (t - a)^{rₐ}` with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredPoly(FactoredRatFn);

impl FactoredPoly {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_ints(roots: &[(i64, u64)]) -> Self {
        FactoredPoly(FactoredRatFn::from_roots(
            roots
                .iter()
                .map(|&(a, r)| (Point::from_int(a), BigInt::from(r))),
        ))
    }

    pub fn from_roots<I>(roots: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Point, BigInt)>,
    {
        Self::try_from(FactoredRatFn::from_roots(roots))
    }

    /// The polynomial `P` with `div P = E`; `E` must be integral and effective.
    pub fn from_divisor(divisor: &QDivisor) -> Result<Self> {
        Self::try_from(FactoredRatFn::from_divisor(divisor)?)
    }

    pub fn as_ratfn(&self) -> &FactoredRatFn {
        &self.0
    }

    pub fn divisor(&self) -> QDivisor {
        self.0.divisor()
    }

    pub fn roots(&self) -> impl Iterator<Item = (&Point, &BigInt)> {
        self.0.roots()
    }

    pub fn multiplicity(&self, point: &Point) -> BigInt {
        self.0.order_at(point)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn degree(&self) -> BigInt {
        self.0.roots.values().sum()
    }

    pub fn mul(&self, other: &FactoredPoly) -> Self {
        FactoredPoly(self.0.mul(&other.0))
    }

    pub fn pow(&self, exp: u64) -> Self {
        FactoredPoly(self.0.pow(&BigInt::from(exp)))
    }

    /// Dense coefficients, constant term first. `None` when the degree is
    /// too large to expand.
    pub fn coefficients(&self) -> Option<Vec<Rat>> {
        let degree = self.degree().to_usize()?;
        if degree > 4096 {
            return None;
        }
        let mut coeffs = vec![Rat::one()];
        for (p, r) in self.0.roots.iter() {
            let a = p.coordinate();
            for _ in 0..r.to_usize()? {
                // multiply by (t - a)
                let mut next = vec![Rat::zero(); coeffs.len() + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * a;
                }
                coeffs = next;
            }
        }
        Some(coeffs)
    }

    /// Expanded form such as `t^3 - 2*t + 1/2`.
    pub fn expanded(&self, var: &str) -> Option<String> {
        let coeffs = self.coefficients()?;
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if terms.is_empty() {
                terms.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                terms.push(format!("{sign} {body}"));
            }
        }
        Some(terms.join(" "))
    }

    pub fn render(&self, var: &str) -> String {
        self.0.render(var)
    }
}

impl TryFrom<FactoredRatFn> for FactoredPoly {
    type Error = Error;

    fn try_from(f: FactoredRatFn) -> Result<Self> {
        if let Some((p, r)) = f.roots.iter().find(|(_, r)| r.is_negative()) {
            return Err(Error::NotAPolynomial {
                point: p.clone(),
                multiplicity: r.clone(),
            });
        }
        Ok(FactoredPoly(f))
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Serialized as a root list `[["0", 3], ["1", 4]]` meaning `t³(t-1)⁴`.
impl Serialize for FactoredRatFn {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let roots: Vec<(String, i64)> = self
            .roots
            .iter()
            .map(|(p, r)| (p.to_string(), r.to_i64().unwrap_or(i64::MAX)))
            .collect();
        roots.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FactoredRatFn {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<(String, i64)>::deserialize(deserializer)?;
        let mut roots = Vec::with_capacity(raw.len());
        for (p, r) in raw {
            roots.push((
                p.parse::<Point>().map_err(D::Error::custom)?,
                BigInt::from(r),
            ));
        }
        Ok(FactoredRatFn::from_roots(roots))
    }
}

impl Serialize for FactoredPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FactoredPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let f = FactoredRatFn::deserialize(deserializer)?;
        FactoredPoly::try_from(f).map_err(D::Error::custom)
    }
}

/// Membership test `f·uⁿ ∈ A₀[D]`, i.e. `div f + n·D ≥ 0`.
pub fn contains(divisor: &QDivisor, f: &FactoredRatFn, n: u64) -> bool {
    (&f.divisor() + &divisor.scale_int(&BigInt::from(n))).is_effective()
}

/// The datum of a hyperbolic surface `Spec A₀[D₊, D₋]`, with `D₊ + D₋ ≤ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DpdPair {
    d_plus: QDivisor,
    d_minus: QDivisor,
}

impl DpdPair {
    pub fn new(d_plus: QDivisor, d_minus: QDivisor) -> Result<Self> {
        let sum = &d_plus + &d_minus;
        if let Some((p, c)) = sum.iter().find(|(_, c)| c.is_positive()) {
            return Err(Error::SumConditionViolated {
                point: p.clone(),
                value: Box::new(c.clone()),
            });
        }
        Ok(DpdPair { d_plus, d_minus })
    }

    pub fn trivial() -> Self {
        DpdPair {
            d_plus: QDivisor::zero(),
            d_minus: QDivisor::zero(),
        }
    }

    pub fn d_plus(&self) -> &QDivisor {
        &self.d_plus
    }

    pub fn d_minus(&self) -> &QDivisor {
        &self.d_minus
    }

    pub fn sum(&self) -> QDivisor {
        &self.d_plus + &self.d_minus
    }

    /// `|D₊| ∪ |D₋|`, sorted.
    pub fn support(&self) -> Vec<Point> {
        let mut pts: Vec<Point> = self
            .d_plus
            .support()
            .into_iter()
            .chain(self.d_minus.support())
            .collect();
        pts.sort();
        pts.dedup();
        pts
    }

    /// `(D₊ + div φ, D₋ - div φ)` for the function `φ` with divisor `shift`.
    pub fn shifted(&self, shift: &QDivisor) -> Result<Self> {
        if !shift.is_integral() {
            let (p, c) = shift
                .iter()
                .find(|(_, c)| !c.is_integer())
                .expect("non-integral entry");
            return Err(Error::NonIntegralDivisor {
                point: p.clone(),
                coeff: Box::new(c.clone()),
            });
        }
        Ok(DpdPair {
            d_plus: &self.d_plus + shift,
            d_minus: &self.d_minus - shift,
        })
    }

    pub fn translated(&self, shift: &Rat) -> Self {
        DpdPair {
            d_plus: self.d_plus.translated(shift),
            d_minus: self.d_minus.translated(shift),
        }
    }

    /// The unique equivalent pair with `D₊ = {D₊}`.
    pub fn canonical(&self) -> Self {
        let floor = self.d_plus.floor();
        DpdPair {
            d_plus: self.d_plus.frac(),
            d_minus: &self.d_minus + &floor,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.d_plus.frac() == self.d_plus
    }

    /// Isomorphism of the graded algebras: `D₊` agree modulo integral
    /// divisors and the sums agree.
    pub fn equivalent(&self, other: &DpdPair) -> bool {
        self.canonical() == other.canonical()
    }
}

impl<'de> Deserialize<'de> for DpdPair {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            d_plus: QDivisor,
            d_minus: QDivisor,
        }
        let raw = Raw::deserialize(deserializer)?;
        DpdPair::new(raw.d_plus, raw.d_minus).map_err(D::Error::custom)
    }
}

impl fmt::Display for DpdPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(D+ = {}, D- = {})", self.d_plus, self.d_minus)
    }
}

pub fn canonical_pair(pair: &DpdPair) -> DpdPair {
    pair.canonical()
}

pub fn pairs_equivalent(a: &DpdPair, b: &DpdPair) -> bool {
    a.equivalent(b)
}

pub fn function_from_divisor(divisor: &QDivisor) -> Result<FactoredRatFn> {
    FactoredRatFn::from_divisor(divisor)
}

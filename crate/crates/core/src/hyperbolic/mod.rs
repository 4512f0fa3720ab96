//! Hyperbolic surfaces `V = Spec A₀[D₊, D₋]` over `A¹`.
//!
//! Local conventions at a point `a`: `D₊(a) = -e₊/m₊` and `D₋(a) = e₋/m₋`
//! in lowest terms with `m₊ > 0 > m₋`, and `(e, m) = (0, ±1)` where the
//! divisor vanishes. Fixed points lie over `{a : D₊(a) + D₋(a) < 0}`.

mod cover;
mod equations;
mod groups;
mod modification;

pub use cover::{
    cyclic_cover, cyclic_cover_with_beta, quotient_presentation, CoverResult, PulledBackPoly,
    QuotientPresentation,
};
pub use equations::{
    defining_equations, dpd_from_coprime_hypersurface, dpd_from_coprime_hypersurface_with,
    dpd_from_generators, hypersurface_case, hypersurface_pair, EquationData, Generator,
    HypersurfaceData,
};
pub use groups::{
    canonical_divisor, class_group, class_group_order_formula, exceptional_fibers, is_factorial,
    picard_group, picard_trivial_criterion, CanonicalDivisor, ClassGroup, DivisorTerm,
    ExceptionalFibers, PicardGroup,
};
pub use modification::{modification_report, ModificationMap, ModificationReport};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::divisor::{DpdPair, Point};
use crate::error::{Error, Result};
use crate::toric::{mod_inverse, normalize_type, LatticeCone, QuotSingType};

/// The integers `(e₊, m₊, e₋, m₋)` describing `D±` at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalData {
    pub point: Point,
    #[serde(with = "crate::serde_big")]
    pub e_plus: BigInt,
    #[serde(with = "crate::serde_big")]
    pub m_plus: BigInt,
    #[serde(with = "crate::serde_big")]
    pub e_minus: BigInt,
    #[serde(with = "crate::serde_big")]
    pub m_minus: BigInt,
}

impl LocalData {
    /// `Δ = -det[[e₊, e₋], [m₊, m₋]] = m₊m₋·(D₊(a) + D₋(a)) ≥ 0`.
    pub fn delta(&self) -> BigInt {
        -(&self.e_plus * &self.m_minus - &self.e_minus * &self.m_plus)
    }

    /// `0 ≤ q₊ < m₊` with `q₊e₊ ≡ -1 mod m₊`.
    pub fn q_plus(&self) -> BigInt {
        let inv = mod_inverse(&self.e_plus, &self.m_plus).expect("gcd(e+, m+) = 1");
        (-inv).mod_floor(&self.m_plus)
    }

    /// `0 ≤ q₋ < -m₋` with `q₋e₋ ≡ 1 mod m₋`.
    pub fn q_minus(&self) -> BigInt {
        mod_inverse(&self.e_minus, &(-&self.m_minus)).expect("gcd(e-, m-) = 1")
    }

    /// The toric cone `C((e₊, m₊), (e₋, m₋))` of the local ring at the fixed point.
    pub fn cone(&self) -> Result<LatticeCone> {
        LatticeCone::new(
            (self.e_plus.clone(), self.m_plus.clone()),
            (self.e_minus.clone(), self.m_minus.clone()),
        )
    }
}

pub fn local_data(pair: &DpdPair, point: &Point) -> LocalData {
    let plus = pair.d_plus().value_at(point);
    let minus = pair.d_minus().value_at(point);
    let data = LocalData {
        point: point.clone(),
        e_plus: -plus.numer(),
        m_plus: plus.denom().clone(),
        e_minus: -minus.numer(),
        m_minus: -minus.denom(),
    };
    assert!(
        !data.delta().is_negative(),
        "D+ + D- <= 0 forces delta >= 0"
    );
    data
}

/// Points over which the fiber contains a fixed point, sorted.
pub fn fixed_points(pair: &DpdPair) -> Vec<Point> {
    pair.sum()
        .iter()
        .filter(|(_, c)| c.is_negative())
        .map(|(p, _)| p.clone())
        .collect()
}

pub fn is_fixed_point(pair: &DpdPair, point: &Point) -> bool {
    pair.sum().value_at(point).is_negative()
}

/// Type `(Δ, e)` of the quotient singularity at the fixed point over `a`,
/// `e ≡ p·m₋ - q·e₋ mod Δ` for `p·m₊ - q·e₊ = 1`.
pub fn singularity_at(pair: &DpdPair, point: &Point) -> Result<QuotSingType> {
    if !is_fixed_point(pair, point) {
        return Err(Error::NotAFixedPoint {
            point: point.clone(),
        });
    }
    let ld = local_data(pair, point);
    let q = ld.q_plus();
    let p = (BigInt::one() + &q * &ld.e_plus) / &ld.m_plus;
    let e = &p * &ld.m_minus - &q * &ld.e_minus;
    normalize_type(&ld.delta(), &e)
}

/// Fixed points with `Δ ≠ 1`, with their types.
pub fn singular_points(pair: &DpdPair) -> Vec<(Point, QuotSingType)> {
    fixed_points(pair)
        .into_iter()
        .filter_map(|p| {
            let t = singularity_at(pair, &p).expect("fixed point");
            (!t.is_smooth()).then_some((p, t))
        })
        .collect()
}

/// Orbit type `(d, q)`: stabilizer of order `d` acting with weight `q`
/// on the normal direction. `d = 1` is principal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitType {
    #[serde(with = "crate::serde_big")]
    pub d: BigInt,
    #[serde(with = "crate::serde_big")]
    pub q: BigInt,
}

impl OrbitType {
    pub fn is_principal(&self) -> bool {
        self.d.is_one()
    }
}

impl fmt::Display for OrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d, self.q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiberKind {
    Principal,
    OneOrbit,
    TwoOrbitsWithFixedPoint,
}

impl fmt::Display for FiberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiberKind::Principal => "principal",
            FiberKind::OneOrbit => "one orbit",
            FiberKind::TwoOrbitsWithFixedPoint => "two orbits through a fixed point",
        })
    }
}

/// One orbit closure in a fiber `π*(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitInfo {
    pub label: String,
    pub orbit_type: OrbitType,
    /// Multiplicity in `π*(a)`.
    #[serde(with = "crate::serde_big")]
    pub multiplicity: BigInt,
    /// Coefficient in `div u`.
    #[serde(with = "crate::serde_big")]
    pub div_u_coeff: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberStructure {
    pub point: Point,
    pub kind: FiberKind,
    pub orbits: Vec<OrbitInfo>,
}

pub(crate) fn label_one(point: &Point) -> String {
    format!("O({point})")
}

pub(crate) fn label_plus(point: &Point) -> String {
    format!("O+({point})")
}

pub(crate) fn label_minus(point: &Point) -> String {
    format!("O-({point})")
}

pub fn orbit_types(pair: &DpdPair, point: &Point) -> FiberStructure {
    let ld = local_data(pair, point);
    let plus = pair.d_plus().value_at(point);
    let minus = pair.d_minus().value_at(point);
    let plus_orbit = |label: String| OrbitInfo {
        label,
        orbit_type: OrbitType {
            d: ld.m_plus.clone(),
            q: ld.q_plus(),
        },
        multiplicity: ld.m_plus.clone(),
        div_u_coeff: -&ld.e_plus,
    };
    if plus.is_zero() && minus.is_zero() {
        FiberStructure {
            point: point.clone(),
            kind: FiberKind::Principal,
            orbits: vec![plus_orbit(label_one(point))],
        }
    } else if (&plus + &minus).is_zero() {
        FiberStructure {
            point: point.clone(),
            kind: FiberKind::OneOrbit,
            orbits: vec![plus_orbit(label_one(point))],
        }
    } else {
        let minus_orbit = OrbitInfo {
            label: label_minus(point),
            orbit_type: OrbitType {
                d: -&ld.m_minus,
                q: ld.q_minus(),
            },
            multiplicity: -&ld.m_minus,
            div_u_coeff: ld.e_minus.clone(),
        };
        FiberStructure {
            point: point.clone(),
            kind: FiberKind::TwoOrbitsWithFixedPoint,
            orbits: vec![plus_orbit(label_plus(point)), minus_orbit],
        }
    }
}

/// Fiber structures over every point of `|D₊| ∪ |D₋|`.
pub fn orbit_table(pair: &DpdPair) -> Vec<FiberStructure> {
    pair.support()
        .iter()
        .map(|p| orbit_types(pair, p))
        .collect()
}

/// Whether `A` has a unit of positive degree, i.e. `D₋ = -D₊`.
pub fn has_positive_degree_unit(pair: &DpdPair) -> bool {
    pair.sum().is_zero()
}

/// Least positive degree of a unit, when units exist: the denominator of `D₊`.
pub fn unit_degree(pair: &DpdPair) -> Option<BigInt> {
    has_positive_degree_unit(pair).then(|| pair.d_plus().denominator())
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{label_minus, label_one, label_plus, local_data, LocalData};
use crate::abelian::{group_from_presentation, FgAbelianGroup, IntMatrix};
use crate::divisor::DpdPair;

/// Special fibers of the canonical pair: points where `D₊ = -D₋ ≠ 0`
/// (one non-principal orbit) and points where `D₊ + D₋ < 0`
/// (two orbits through a fixed point), each sorted by point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalFibers {
    pub one_orbit: Vec<LocalData>,
    pub fixed: Vec<LocalData>,
}

pub fn exceptional_fibers(pair: &DpdPair) -> ExceptionalFibers {
    let canon = pair.canonical();
    let sum = canon.sum();
    let mut one_orbit = Vec::new();
    let mut fixed = Vec::new();
    for p in canon.support() {
        let s = sum.value_at(&p);
        if s.is_negative() {
            fixed.push(local_data(&canon, &p));
        } else if !canon.d_plus().value_at(&p).is_zero() {
            one_orbit.push(local_data(&canon, &p));
        }
    }
    ExceptionalFibers { one_orbit, fixed }
}

/// `Cl(V)` with its presentation: generators are orbit closures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroup {
    pub group: FgAbelianGroup,
    pub generators: Vec<String>,
    pub relations: IntMatrix,
}

pub fn class_group(pair: &DpdPair) -> ClassGroup {
    let fib = exceptional_fibers(pair);
    let mut generators = Vec::new();
    for ld in &fib.one_orbit {
        generators.push(label_one(&ld.point));
    }
    for ld in &fib.fixed {
        generators.push(label_plus(&ld.point));
        generators.push(label_minus(&ld.point));
    }
    let n = generators.len();
    let k = fib.one_orbit.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut last = vec![BigInt::zero(); n];
    for (i, ld) in fib.one_orbit.iter().enumerate() {
        let mut row = vec![BigInt::zero(); n];
        row[i] = ld.m_plus.clone();
        rows.push(row);
        last[i] = ld.e_plus.clone();
    }
    for (j, ld) in fib.fixed.iter().enumerate() {
        let (cp, cm) = (k + 2 * j, k + 2 * j + 1);
        let mut row = vec![BigInt::zero(); n];
        row[cp] = ld.m_plus.clone();
        row[cm] = -&ld.m_minus;
        rows.push(row);
        last[cp] = ld.e_plus.clone();
        last[cm] = -&ld.e_minus;
    }
    rows.push(last);
    let relations = matrix(n, rows);
    let group = group_from_presentation(n, &relations).expect("dimensions agree");
    ClassGroup {
        group,
        generators,
        relations,
    }
}

fn matrix(cols: usize, rows: Vec<Vec<BigInt>>) -> IntMatrix {
    let r = rows.len();
    IntMatrix::new(r, cols, rows.into_iter().flatten().collect()).expect("rectangular")
}

/// `Pic(V)` with generators `[Oᵢ]` and `gⱼ = e₊ⱼ[Ō⁺ⱼ] - e₋ⱼ[Ō⁻ⱼ]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardGroup {
    pub group: FgAbelianGroup,
    pub generators: Vec<String>,
}

pub fn picard_group(pair: &DpdPair) -> PicardGroup {
    let fib = exceptional_fibers(pair);
    let mut generators: Vec<String> = fib
        .one_orbit
        .iter()
        .map(|ld| label_one(&ld.point))
        .collect();
    for ld in &fib.fixed {
        generators.push(format!(
            "{}*[{}] - {}*[{}]",
            ld.e_plus,
            label_plus(&ld.point),
            ld.e_minus,
            label_minus(&ld.point)
        ));
    }
    let n = generators.len();
    let k = fib.one_orbit.len();
    let mut rows = Vec::new();
    let mut last = vec![BigInt::zero(); n];
    for (i, ld) in fib.one_orbit.iter().enumerate() {
        let mut row = vec![BigInt::zero(); n];
        row[i] = ld.m_plus.clone();
        rows.push(row);
        last[i] = ld.e_plus.clone();
    }
    for entry in last.iter_mut().skip(k) {
        *entry = BigInt::one();
    }
    rows.push(last);
    let group = group_from_presentation(n, &matrix(n, rows)).expect("dimensions agree");
    PicardGroup { group, generators }
}

fn pairwise_coprime(values: &[BigInt]) -> bool {
    values
        .iter()
        .enumerate()
        .all(|(i, a)| values[i + 1..].iter().all(|b| a.gcd(b).is_one()))
}

/// `Pic(V) = 0` iff either there is no fixed point and the `mᵢ` are pairwise
/// coprime, or there is exactly one fixed point and all `mᵢ = 1`.
pub fn picard_trivial_criterion(pair: &DpdPair) -> bool {
    let fib = exceptional_fibers(pair);
    let ms: Vec<BigInt> = fib.one_orbit.iter().map(|ld| ld.m_plus.clone()).collect();
    match fib.fixed.len() {
        0 => pairwise_coprime(&ms),
        1 => ms.iter().all(|m| m.is_one()),
        _ => false,
    }
}

/// Factoriality by the closed-form criterion; agrees with `Cl(V) = 0`.
pub fn is_factorial(pair: &DpdPair) -> bool {
    let fib = exceptional_fibers(pair);
    let ms: Vec<BigInt> = fib.one_orbit.iter().map(|ld| ld.m_plus.clone()).collect();
    match fib.fixed.as_slice() {
        [] => pairwise_coprime(&ms),
        [ld] => ms.iter().all(|m| m.is_one()) && ld.delta().is_one(),
        _ => false,
    }
}

/// `|Cl(V)| = |e⁺m⁻ - e⁻m⁺|·∏ mᵢ` when there is exactly one fixed point.
pub fn class_group_order_formula(pair: &DpdPair) -> Option<BigInt> {
    let fib = exceptional_fibers(pair);
    match fib.fixed.as_slice() {
        [ld] => Some(
            fib.one_orbit
                .iter()
                .fold(ld.delta(), |acc, o| acc * &o.m_plus),
        ),
        _ => None,
    }
}

/// One term `coeff·[orbit]` of the canonical divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorTerm {
    pub orbit: String,
    #[serde(with = "crate::serde_big")]
    pub coeff: BigInt,
}

/// `K_V = Σ(mᵢ-1)Oᵢ + Σ(m₊ⱼ-1)Ō⁺ⱼ + Σ(-m₋ⱼ-1)Ō⁻ⱼ`, zero terms included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalDivisor {
    pub terms: Vec<DivisorTerm>,
}

impl CanonicalDivisor {
    pub fn coefficient(&self, orbit: &str) -> Option<&BigInt> {
        self.terms
            .iter()
            .find(|t| t.orbit == orbit)
            .map(|t| &t.coeff)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .filter(|t| !t.coeff.is_zero())
            .map(|t| {
                if t.coeff.is_one() {
                    t.orbit.clone()
                } else {
                    format!("{}*{}", t.coeff, t.orbit)
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

pub fn canonical_divisor(pair: &DpdPair) -> CanonicalDivisor {
    let fib = exceptional_fibers(pair);
    let term = |orbit: String, coeff: BigInt| DivisorTerm { orbit, coeff };
    let mut terms = Vec::new();
    for ld in &fib.one_orbit {
        terms.push(term(label_one(&ld.point), &ld.m_plus - 1));
    }
    for ld in &fib.fixed {
        terms.push(term(label_plus(&ld.point), &ld.m_plus - 1));
        terms.push(term(label_minus(&ld.point), -&ld.m_minus - 1));
    }
    CanonicalDivisor { terms }
}

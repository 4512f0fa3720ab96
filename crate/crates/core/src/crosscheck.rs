//! Runtime agreement checks between independent routes to the same invariant.

use serde::{Deserialize, Serialize};

use crate::divisor::{DpdPair, QDivisor};
use crate::hyperbolic::{
    class_group, class_group_order_formula, defining_equations, dpd_from_generators, fixed_points,
    is_factorial, local_data, picard_group, picard_trivial_criterion, singularity_at,
};
use crate::parabolic::{canonical_dp, parabolic_from_equation, parabolic_singularities};
use crate::toric::{
    hilbert_basis, hilbert_basis_size_hj, normalize_type, semigroup_contains, type_of_lattice_cone,
    ConeParams, LatticeCone,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

pub fn all_passed(checks: &[CheckOutcome]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn check_hyperbolic(pair: &DpdPair) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for p in fixed_points(pair) {
        let direct = singularity_at(pair, &p).expect("fixed point");
        let ld = local_data(pair, &p);
        let via_cone = ld.cone().map(|c| type_of_lattice_cone(&c));
        let passed = via_cone.as_ref() == Ok(&direct);
        let detail = match via_cone {
            Ok(t) => format!("local formula {direct}, cone route {t}"),
            Err(e) => format!("local formula {direct}, cone route failed: {e}"),
        };
        out.push(CheckOutcome::new(
            format!("singularity type at {p}"),
            passed,
            detail,
        ));
    }

    let cl = class_group(pair);
    let factorial = is_factorial(pair);
    out.push(CheckOutcome::new(
        "factoriality criterion vs class group",
        factorial == cl.group.is_trivial(),
        format!("criterion {factorial}, Cl = {}", cl.group),
    ));

    let pic = picard_group(pair);
    let criterion = picard_trivial_criterion(pair);
    out.push(CheckOutcome::new(
        "Picard criterion vs Picard group",
        criterion == pic.group.is_trivial(),
        format!("criterion {criterion}, Pic = {}", pic.group),
    ));

    if let Some(order) = class_group_order_formula(pair) {
        let snf = cl.group.order();
        out.push(CheckOutcome::new(
            "class group order formula",
            snf.as_ref() == Some(&order),
            format!("formula {order}, Smith form {}", cl.group),
        ));
    }

    let eq = defining_equations(pair);
    out.push(CheckOutcome::new(
        "equation identity",
        eq.identity_holds(),
        format!(
            "P+ = {}, P- = {}, P = {}, Q = {}",
            eq.p_plus, eq.p_minus, eq.p, eq.q
        ),
    ));
    let (neg, pos) = eq.generators();
    let back = dpd_from_generators(&neg, &pos);
    let passed = back.as_ref().map(|b| b.equivalent(pair)).unwrap_or(false);
    let detail = match back {
        Ok(b) => format!("recovered {b}"),
        Err(e) => format!("recovery failed: {e}"),
    };
    out.push(CheckOutcome::new("generator round trip", passed, detail));
    out
}

pub fn check_parabolic(divisor: &QDivisor) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let dp = canonical_dp(divisor);
    let back = parabolic_from_equation(dp.d(), dp.p()).expect("d >= 1");
    out.push(CheckOutcome::new(
        "normal form round trip",
        back == divisor.frac(),
        format!("(d, P) = {dp}, recovered {back}"),
    ));
    for (p, t) in parabolic_singularities(divisor) {
        // locally the degree-n piece is t^{⌈ne/d⌉}·C[t] for D(p) = -e/d,
        // so the exponent semigroup is the lattice points of C((1,0),(e,d))
        let c = divisor.value_at(&p);
        let (d, e) = (c.denom().clone(), -c.numer());
        let cone = LatticeCone::new((1.into(), 0.into()), (e, d)).map(|c| type_of_lattice_cone(&c));
        out.push(CheckOutcome::new(
            format!("singularity type at {p}"),
            cone.as_ref() == Ok(&t),
            format!("reported {t}, cone route {cone:?}"),
        ));
    }
    out
}

pub fn check_toric(cone: ConeParams) -> Vec<CheckOutcome> {
    let basis = hilbert_basis(cone);
    let predicted = hilbert_basis_size_hj(cone);
    let mut out = vec![CheckOutcome::new(
        "Hilbert basis size vs continued fraction",
        basis.len() == predicted,
        format!("enumerated {}, continued fraction {predicted}", basis.len()),
    )];
    out.push(CheckOutcome::new(
        "Hilbert basis lies in the semigroup",
        basis.iter().all(|&p| semigroup_contains(p, cone)),
        format!("{basis:?}"),
    ));
    // the semigroup cone C((1,0),(e,d)) moved by [[2,1],[1,1]] ∈ SL₂(Z)
    let (d, e) = (cone.d(), cone.e());
    let moved = LatticeCone::from_i64((2, 1), (2 * e + d, e + d)).map(|c| type_of_lattice_cone(&c));
    let expected = normalize_type(&d.into(), &e.into()).expect("validated cone");
    out.push(CheckOutcome::new(
        "lattice cone type",
        moved.as_ref() == Ok(&expected),
        format!("{moved:?} vs {expected}"),
    ));
    out
}

//! Aggregated analysis reports with JSON and Markdown renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::crosscheck::{check_hyperbolic, check_parabolic, check_toric, CheckOutcome};
use crate::divisor::{DpdPair, Point, QDivisor};
use crate::hyperbolic::{
    canonical_divisor, class_group, defining_equations, fixed_points, hypersurface_case,
    is_factorial, modification_report, orbit_table, picard_group, quotient_presentation,
    singularity_at, unit_degree, CanonicalDivisor, ClassGroup, EquationData, FiberStructure,
    HypersurfaceData, ModificationReport, PicardGroup, QuotientPresentation,
};
use crate::parabolic::{canonical_dp, parabolic_singularities, veronese_degree, DpPair};
use crate::toric::{
    hilbert_basis, hilbert_basis_size_hj, hirzebruch_jung, normalize_type, quotient_action,
    ConeParams, QuotSingType,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityEntry {
    pub point: Point,
    #[serde(rename = "type")]
    pub sing_type: QuotSingType,
    /// The equivalent type `(d, e')` with `ee' ≡ 1 mod d`.
    pub equivalent_type: QuotSingType,
}

impl SingularityEntry {
    fn new(point: Point, sing_type: QuotSingType) -> Self {
        SingularityEntry {
            point,
            equivalent_type: sing_type.dual(),
            sing_type,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicReport {
    pub classification: String,
    pub input_pair: DpdPair,
    pub canonical_pair: DpdPair,
    /// Integral divisor added to `D₊` (and subtracted from `D₋`) to reach the canonical pair.
    pub shift: QDivisor,
    pub exceptional_locus: Vec<Point>,
    pub fixed_points: Vec<Point>,
    pub singularities: Vec<SingularityEntry>,
    pub smooth: bool,
    pub orbits: Vec<FiberStructure>,
    pub class_group: ClassGroup,
    pub picard_group: PicardGroup,
    pub canonical_divisor: CanonicalDivisor,
    pub equations: EquationData,
    pub factorial: bool,
    pub units: Option<String>,
    pub hypersurface: Option<HypersurfaceData>,
    pub quotient: Option<QuotientPresentation>,
    pub modifications: ModificationReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckOutcome>>,
}

pub fn analyze_hyperbolic(pair: &DpdPair, oracle: bool) -> HyperbolicReport {
    let canonical = pair.canonical();
    let fixed = fixed_points(pair);
    let singularities: Vec<SingularityEntry> = fixed
        .iter()
        .map(|p| SingularityEntry::new(p.clone(), singularity_at(pair, p).expect("fixed point")))
        .filter(|s| !s.sing_type.is_smooth())
        .collect();
    HyperbolicReport {
        classification: "hyperbolic".into(),
        input_pair: pair.clone(),
        shift: -&pair.d_plus().floor(),
        exceptional_locus: pair.support(),
        smooth: singularities.is_empty(),
        singularities,
        fixed_points: fixed,
        orbits: orbit_table(pair),
        class_group: class_group(pair),
        picard_group: picard_group(pair),
        canonical_divisor: canonical_divisor(pair),
        equations: defining_equations(pair),
        factorial: is_factorial(pair),
        units: unit_degree(pair).map(|d| format!("units exist in degrees divisible by {d}")),
        hypersurface: hypersurface_case(pair),
        quotient: quotient_presentation(pair),
        modifications: modification_report(pair),
        checks: oracle.then(|| check_hyperbolic(pair)),
        canonical_pair: canonical,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicReport {
    pub classification: String,
    pub divisor: QDivisor,
    pub normal_form: DpPair,
    #[serde(with = "crate::serde_big")]
    pub veronese_degree: BigInt,
    pub singularities: Vec<SingularityEntry>,
    pub smooth: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckOutcome>>,
}

pub fn analyze_parabolic(divisor: &QDivisor, oracle: bool) -> ParabolicReport {
    let singularities: Vec<SingularityEntry> = parabolic_singularities(divisor)
        .into_iter()
        .map(|(p, t)| SingularityEntry::new(p, t))
        .collect();
    ParabolicReport {
        classification: "parabolic".into(),
        divisor: divisor.clone(),
        normal_form: canonical_dp(divisor),
        veronese_degree: veronese_degree(divisor),
        smooth: singularities.is_empty(),
        singularities,
        checks: oracle.then(|| check_parabolic(divisor)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricReport {
    pub d: i64,
    pub e: i64,
    pub algebra: String,
    #[serde(rename = "type")]
    pub sing_type: QuotSingType,
    pub equivalent_type: QuotSingType,
    pub action: String,
    pub hilbert_basis: Vec<(i64, i64)>,
    pub hilbert_basis_size: usize,
    pub continued_fraction: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckOutcome>>,
}

pub fn analyze_toric(cone: ConeParams, oracle: bool) -> ToricReport {
    let sing_type = normalize_type(&cone.d().into(), &cone.e().into()).expect("validated cone");
    let basis = hilbert_basis(cone);
    debug_assert_eq!(basis.len(), hilbert_basis_size_hj(cone));
    ToricReport {
        d: cone.d(),
        e: cone.e(),
        algebra: sing_type.algebra_name(),
        equivalent_type: sing_type.dual(),
        sing_type,
        action: quotient_action(cone).to_string(),
        hilbert_basis_size: basis.len(),
        hilbert_basis: basis,
        continued_fraction: if cone.d() == 1 {
            Vec::new()
        } else {
            hirzebruch_jung(cone.d(), cone.d() - cone.e())
        },
        checks: oracle.then(|| check_toric(cone)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AnalysisReport {
    Hyperbolic(Box<HyperbolicReport>),
    Parabolic(ParabolicReport),
    Toric(ToricReport),
}

impl AnalysisReport {
    pub fn checks(&self) -> Option<&[CheckOutcome]> {
        match self {
            AnalysisReport::Hyperbolic(r) => r.checks.as_deref(),
            AnalysisReport::Parabolic(r) => r.checks.as_deref(),
            AnalysisReport::Toric(r) => r.checks.as_deref(),
        }
    }

    pub fn to_markdown(&self) -> String {
        match self {
            AnalysisReport::Hyperbolic(r) => hyperbolic_markdown(r),
            AnalysisReport::Parabolic(r) => parabolic_markdown(r),
            AnalysisReport::Toric(r) => toric_markdown(r),
        }
    }
}

fn list<T: ToString>(items: &[T]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items
            .iter()
            .map(T::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn singularity_lines(out: &mut String, sings: &[SingularityEntry]) {
    if sings.is_empty() {
        out.push_str("- smooth\n");
    }
    for s in sings {
        let _ = writeln!(
            out,
            "- over {}: cyclic quotient singularity of type {} ~ {} ({})",
            s.point,
            s.sing_type,
            s.equivalent_type,
            s.sing_type.algebra_name()
        );
    }
}

fn checks_section(out: &mut String, checks: &Option<Vec<CheckOutcome>>) {
    if let Some(checks) = checks {
        out.push_str("\n## Oracle checks\n\n");
        for c in checks {
            let verdict = if c.passed { "agree" } else { "DISAGREE" };
            let _ = writeln!(out, "- {}: {} ({})", c.name, verdict, c.detail);
        }
    }
}

fn hyperbolic_markdown(r: &HyperbolicReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Hyperbolic surface\n");
    let _ = writeln!(out, "- input pair: {}", r.input_pair);
    let _ = writeln!(out, "- canonical pair: {}", r.canonical_pair);
    let _ = writeln!(out, "- shift to canonical form: {}", r.shift);
    let _ = writeln!(out, "- exceptional locus: {}", list(&r.exceptional_locus));
    let _ = writeln!(out, "- fixed points: {}", list(&r.fixed_points));
    let _ = writeln!(
        out,
        "- units: {}",
        r.units.as_deref().unwrap_or("none of positive degree")
    );

    out.push_str("\n## Singularities\n\n");
    singularity_lines(&mut out, &r.singularities);

    out.push_str("\n## Orbits\n\n");
    if r.orbits.is_empty() {
        out.push_str("- all fibers principal\n");
    }
    for f in &r.orbits {
        let orbits: Vec<String> = f
            .orbits
            .iter()
            .map(|o| {
                format!(
                    "{} of type {}, multiplicity {}, div u coefficient {}",
                    o.label, o.orbit_type, o.multiplicity, o.div_u_coeff
                )
            })
            .collect();
        let _ = writeln!(
            out,
            "- over {} ({}): {}",
            f.point,
            f.kind,
            orbits.join("; ")
        );
    }

    out.push_str("\n## Groups\n\n");
    let _ = writeln!(
        out,
        "- Cl = {} (generators: {})",
        r.class_group.group,
        list(&r.class_group.generators)
    );
    let _ = writeln!(out, "- Pic = {}", r.picard_group.group);
    let _ = writeln!(
        out,
        "- factorial: {}",
        if r.factorial { "yes" } else { "no" }
    );
    let _ = writeln!(out, "- K_V = {}", r.canonical_divisor.render());

    out.push_str("\n## Equations\n\n");
    let e = &r.equations;
    let _ = writeln!(
        out,
        "- d+ = {}, d- = {}, k = {}; P+ = {}, P- = {}, Q = {}, P = {}, Q+ = {}",
        e.d_plus, e.d_minus, e.k, e.p_plus, e.p_minus, e.q, e.p, e.q_plus
    );
    for eq in &e.equations {
        let _ = writeln!(out, "- {eq}");
    }
    if let Some(h) = &r.hypersurface {
        let _ = writeln!(out, "- normalization of u^{}*v = {}", h.d, h.p);
    }
    if let Some(q) = &r.quotient {
        let _ = writeln!(
            out,
            "- quotient of u^{}*v = {} (after moving {} to 0) by {}",
            q.k,
            q.p.render(),
            q.translated_from,
            q.action
        );
    }

    out.push_str("\n## Modifications\n\n");
    for m in [&r.modifications.sigma_plus, &r.modifications.sigma_minus] {
        if m.open_embedding {
            let _ = writeln!(out, "- {} to {}: open embedding", m.name, m.target);
        } else {
            let _ = writeln!(
                out,
                "- {} to {}: blows up points over {}; exceptional orbits {}",
                m.name,
                m.target,
                list(&m.blown_up_points),
                list(&m.exceptional_orbits)
            );
        }
    }
    checks_section(&mut out, &r.checks);
    out
}

fn parabolic_markdown(r: &ParabolicReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Parabolic surface\n");
    let _ = writeln!(out, "- divisor: {}", r.divisor);
    let _ = writeln!(out, "- normal form: {}", r.normal_form);
    let _ = writeln!(out, "- Veronese degree: {}", r.veronese_degree);
    out.push_str("\n## Singularities\n\n");
    singularity_lines(&mut out, &r.singularities);
    checks_section(&mut out, &r.checks);
    out
}

fn toric_markdown(r: &ToricReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Toric surface {}\n", r.algebra);
    let _ = writeln!(out, "- type: {} ~ {}", r.sing_type, r.equivalent_type);
    let _ = writeln!(out, "- action: {}", r.action);
    let basis: Vec<String> = r
        .hilbert_basis
        .iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect();
    let _ = writeln!(
        out,
        "- Hilbert basis ({} elements): {}",
        r.hilbert_basis_size,
        basis.join(", ")
    );
    let cf: Vec<String> = r.continued_fraction.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(out, "- continued fraction of d/(d-e): [{}]", cf.join(", "));
    checks_section(&mut out, &r.checks);
    out
}

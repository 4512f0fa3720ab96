use serde::{Deserialize, Serialize};

use super::{fixed_points, label_minus, label_plus};
use crate::divisor::{DpdPair, Point};

/// One of the equivariant modifications `σ± : V → V± = Spec A₀[D±]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModificationMap {
    pub name: String,
    pub target: String,
    pub blown_up_points: Vec<Point>,
    pub exceptional_orbits: Vec<String>,
    pub open_embedding: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModificationReport {
    pub sigma_plus: ModificationMap,
    pub sigma_minus: ModificationMap,
}

/// `σ±` blows up a graded ideal supported at the fixed points; its
/// exceptional set is the union of the orbits `O∓` through them.
pub fn modification_report(pair: &DpdPair) -> ModificationReport {
    let points = fixed_points(pair);
    let open = points.is_empty();
    let build = |name: &str, target: &str, label: fn(&Point) -> String| ModificationMap {
        name: name.to_string(),
        target: target.to_string(),
        blown_up_points: points.clone(),
        exceptional_orbits: points.iter().map(label).collect(),
        open_embedding: open,
    };
    ModificationReport {
        sigma_plus: build("sigma+", "Spec A0[D+]", label_minus),
        sigma_minus: build("sigma-", "Spec A0[D-]", label_plus),
    }
}

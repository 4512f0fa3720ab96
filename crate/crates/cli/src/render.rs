use std::fmt::Write as _;

use cstar_core::hyperbolic::{CoverResult, EquationData};
use cstar_core::DpdPair;

pub fn pair(pair: &DpdPair) -> String {
    format!("- pair: {pair}\n- canonical pair: {}\n", pair.canonical())
}

pub fn equations(pair: &DpdPair, eq: &EquationData) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Equations of {pair}\n");
    let _ = writeln!(
        out,
        "- d+ = {}, d- = {}, k = {}",
        eq.d_plus, eq.d_minus, eq.k
    );
    let _ = writeln!(out, "- P+ = {}, P- = {}", eq.p_plus, eq.p_minus);
    let _ = writeln!(out, "- Q = {}, P = {}, Q+ = {}", eq.q, eq.p, eq.q_plus);
    let shape = if eq.single_equation {
        "single hypersurface equation"
    } else {
        "three relations"
    };
    let _ = writeln!(out, "- {shape}:");
    for e in &eq.equations {
        let _ = writeln!(out, "  - {e}");
    }
    out
}

pub fn cover(pair: &DpdPair, c: &CoverResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Cyclic cover of degree {} with b = {}\n", c.d, c.b);
    let _ = writeln!(out, "- base pair: {pair}");
    let _ = writeln!(out, "- k = {}, beta = {}", c.k, c.beta);
    let _ = writeln!(out, "- coordinate: {}", c.coordinate);
    let _ = writeln!(out, "- pulled-back pair: {}", c.raw_pair);
    let _ = writeln!(out, "- cover pair: {}", c.new_pair);
    out
}

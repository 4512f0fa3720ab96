//! Reading surface descriptions from TOML or JSON files.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use cstar_core::hyperbolic::hypersurface_pair;
use cstar_core::{ConeParams, DpdPair, FactoredPoly, FactoredRatFn, QDivisor};
use num_bigint::BigInt;
use serde::de::DeserializeOwned;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SurfaceInput {
    Hyperbolic {
        #[serde(default)]
        d_plus: QDivisor,
        #[serde(default)]
        d_minus: QDivisor,
    },
    Parabolic {
        divisor: QDivisor,
    },
    Toric {
        d: i64,
        e: i64,
    },
    /// `u^d·v = P(t)` with `P` given by its roots.
    Hypersurface {
        d: u64,
        p: FactoredPoly,
    },
}

pub enum Surface {
    Hyperbolic(DpdPair),
    Parabolic(QDivisor),
    Toric(ConeParams),
}

impl SurfaceInput {
    pub fn into_surface(self) -> cstar_core::Result<Surface> {
        Ok(match self {
            SurfaceInput::Hyperbolic { d_plus, d_minus } => {
                Surface::Hyperbolic(DpdPair::new(d_plus, d_minus)?)
            }
            SurfaceInput::Parabolic { divisor } => Surface::Parabolic(divisor),
            SurfaceInput::Toric { d, e } => Surface::Toric(ConeParams::new(d, e)?),
            SurfaceInput::Hypersurface { d, p } => {
                Surface::Hyperbolic(hypersurface_pair(&BigInt::from(d), &p)?)
            }
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Generator {
    pub roots: FactoredRatFn,
    pub degree: u64,
}

/// Homogeneous generators `f·u^{±n}`: `neg` and `pos` for a hyperbolic
/// algebra, or `generators` alone for a parabolic one.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorInput {
    #[serde(default)]
    pub neg: Vec<Generator>,
    #[serde(default)]
    pub pos: Vec<Generator>,
    #[serde(default)]
    pub generators: Vec<Generator>,
}

pub fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

/// JSON for `.json` files or text starting with `{`, TOML otherwise.
pub fn parse<T: DeserializeOwned>(path: &str, text: &str) -> Result<T, String> {
    let is_json = match Path::new(path).extension().and_then(|e| e.to_str()) {
        Some("json") => true,
        Some("toml") => false,
        _ => text.trim_start().starts_with('{'),
    };
    let name = if path == "-" { "stdin" } else { path };
    if is_json {
        serde_json::from_str(text).map_err(|e| format!("{name}: {e}"))
    } else {
        toml::from_str(text).map_err(|e| format!("{name}: {}", e.to_string().trim_end()))
    }
}

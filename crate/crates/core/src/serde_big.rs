//! Serde helpers writing integers as JSON numbers when they fit in `i64`
//! and as decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Num {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for Num {
    fn from(x: &BigInt) -> Self {
        match x.to_i64() {
            Some(v) => Num::Small(v),
            None => Num::Big(x.to_string()),
        }
    }
}

impl Num {
    fn into_big<E: serde::de::Error>(self) -> Result<BigInt, E> {
        match self {
            Num::Small(v) => Ok(BigInt::from(v)),
            Num::Big(s) => s.parse().map_err(E::custom),
        }
    }
}

pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    Num::from(x).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    Num::deserialize(d)?.into_big()
}

pub mod list {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        xs.iter().map(Num::from).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Num>::deserialize(d)?
            .into_iter()
            .map(|n| n.into_big::<D::Error>())
            .collect()
    }
}

//! Coefficient rings: the integers and their quotients `Z/kZ`.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    Integers,
    IntegersMod { k: u64 },
}

impl RingSpec {
    pub fn integers() -> Self {
        RingSpec::Integers
    }

    pub fn integers_mod(k: u64) -> crate::Result<Self> {
        if k < 2 {
            return Err(crate::Error::BadParameter(format!(
                "modulus must be at least 2, got {k}"
            )));
        }
        Ok(RingSpec::IntegersMod { k })
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            RingSpec::Integers => None,
            RingSpec::IntegersMod { k } => Some(*k),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod { k } => write!(f, "Z/{k}"),
        }
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The hidden variable λ: orientation of the bivector frame, exactly ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Orientation {
    /// λ = −1, left-handed.
    Negative,
    /// λ = +1, right-handed.
    Positive,
}

impl Orientation {
    pub const BOTH: [Orientation; 2] = [Orientation::Positive, Orientation::Negative];

    pub fn new(lambda: i64) -> Result<Self> {
        match lambda {
            1 => Ok(Orientation::Positive),
            -1 => Ok(Orientation::Negative),
            other => Err(Error::InvalidOrientation(other)),
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn sign(self) -> f64 {
        self.value() as f64
    }

    pub fn flipped(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

impl TryFrom<i64> for Orientation {
    type Error = Error;

    fn try_from(lambda: i64) -> Result<Self> {
        Orientation::new(lambda)
    }
}

impl From<Orientation> for i64 {
    fn from(o: Orientation) -> i64 {
        o.value()
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

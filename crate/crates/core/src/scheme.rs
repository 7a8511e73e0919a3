use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Selects one of the three pairing functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Cantor's ordered pairing on ℕ × ℕ.
    Cantor,
    /// Symmetric pairing on ℕ⁺ × ℕ⁺ onto ℕ⁺.
    F,
    /// Symmetric pairing on ℕ × ℕ onto ℕ.
    G,
}

impl Scheme {
    pub const ALL: [Scheme; 3] = [Scheme::Cantor, Scheme::F, Scheme::G];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Cantor => "cantor",
            Scheme::F => "f",
            Scheme::G => "g",
        }
    }

    /// Smallest coordinate accepted by the scheme.
    pub fn origin(self) -> u64 {
        match self {
            Scheme::F => 1,
            Scheme::Cantor | Scheme::G => 0,
        }
    }

    pub fn is_symmetric(self) -> bool {
        !matches!(self, Scheme::Cantor)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cantor" | "c" => Ok(Scheme::Cantor),
            "f" => Ok(Scheme::F),
            "g" => Ok(Scheme::G),
            _ => Err(Error::UnknownScheme(s.to_owned())),
        }
    }
}

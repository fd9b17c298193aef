use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::AlternatingClass;

/// The four distribution families: class crossed with length parity.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlternatingFamily {
    /// Up-down, even length.
    A,
    /// Up-down, odd length.
    B,
    /// Down-up, even length.
    C,
    /// Down-up, odd length.
    D,
}

/// The two refined families where `σ_1 = n` contributes an extra `x`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BarredFamily {
    /// Down-up, odd length.
    DBar,
    /// Down-up, even length.
    CBar,
}

impl AlternatingFamily {
    pub const ALL: [AlternatingFamily; 4] = [Self::A, Self::B, Self::C, Self::D];

    pub fn class(self) -> AlternatingClass {
        match self {
            Self::A | Self::B => AlternatingClass::UpDown,
            Self::C | Self::D => AlternatingClass::DownUp,
        }
    }

    pub fn is_even(self) -> bool {
        matches!(self, Self::A | Self::C)
    }

    pub fn of(class: AlternatingClass, len: usize) -> Self {
        match (class, len.is_multiple_of(2)) {
            (AlternatingClass::UpDown, true) => Self::A,
            (AlternatingClass::UpDown, false) => Self::B,
            (AlternatingClass::DownUp, true) => Self::C,
            (AlternatingClass::DownUp, false) => Self::D,
        }
    }

    /// Length of the table row `n`: `2n` for A and C, `2n + 1` for B and D.
    pub fn row_len(self, n: usize) -> usize {
        if self.is_even() { 2 * n } else { 2 * n + 1 }
    }

    pub fn check_len(self, len: usize) -> Result<()> {
        if len.is_multiple_of(2) != self.is_even() {
            return Err(Error::ParityMismatch { family: self.to_string(), len });
        }
        Ok(())
    }
}

impl BarredFamily {
    pub fn is_even(self) -> bool {
        self == Self::CBar
    }

    pub fn row_len(self, n: usize) -> usize {
        if self.is_even() { 2 * n } else { 2 * n + 1 }
    }

    pub fn check_len(self, len: usize) -> Result<()> {
        if len.is_multiple_of(2) != self.is_even() {
            return Err(Error::ParityMismatch { family: self.to_string(), len });
        }
        Ok(())
    }
}

impl fmt::Display for AlternatingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl fmt::Display for BarredFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::DBar => "Dbar",
            Self::CBar => "Cbar",
        })
    }
}

/// Either kind of family, as accepted on the command line.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnyFamily {
    Plain(AlternatingFamily),
    Barred(BarredFamily),
}

impl AnyFamily {
    pub fn row_len(self, n: usize) -> usize {
        match self {
            AnyFamily::Plain(f) => f.row_len(n),
            AnyFamily::Barred(b) => b.row_len(n),
        }
    }
}

impl fmt::Display for AnyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyFamily::Plain(p) => p.fmt(f),
            AnyFamily::Barred(b) => b.fmt(f),
        }
    }
}

impl FromStr for AnyFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use AlternatingFamily::*;
        Ok(match s {
            "A" => AnyFamily::Plain(A),
            "B" => AnyFamily::Plain(B),
            "C" => AnyFamily::Plain(C),
            "D" => AnyFamily::Plain(D),
            "Dbar" => AnyFamily::Barred(BarredFamily::DBar),
            "Cbar" => AnyFamily::Barred(BarredFamily::CBar),
            _ => {
                return Err(Error::Precondition(format!(
                    "unknown family {s:?}, expected one of A, B, C, D, Dbar, Cbar"
                )))
            }
        })
    }
}

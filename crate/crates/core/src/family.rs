use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Cartan-Killing family of an irreducible Weyl group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub const CLASSICAL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];
    pub const EXCEPTIONAL: [Family; 5] =
        [Family::E6, Family::E7, Family::E8, Family::F4, Family::G2];

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    /// Rank of an exceptional family; `None` for the infinite families.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            "F4" => Family::F4,
            "G2" => Family::G2,
            _ => return Err(Error::Input(format!("unknown family {s:?}"))),
        })
    }
}

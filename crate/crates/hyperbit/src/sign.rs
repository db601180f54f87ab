//! Dichotomic ±1 values.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

/// A dichotomic ±1 value: measurement outcomes, shared random bits, helix
/// branches and discard signs all live here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Sign {
    /// Both outcomes, `+1` first.
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// The value as a real number, `+1.0` or `-1.0`.
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    /// The opposite sign.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Sign of a real number; zero maps to `Plus` (the `sign(c)` convention).
    pub fn of(v: f64) -> Sign {
        if v < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// Canonical text form, `"+1"` or `"-1"`.
    pub fn label(self) -> &'static str {
        match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        }
    }

    /// Parse `"+1"`, `"-1"`, `"+"`, `"-"` or `"1"`.
    pub fn parse(s: &str) -> Option<Sign> {
        match s.trim() {
            "+1" | "+" | "1" => Some(Sign::Plus),
            "-1" | "-" => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_arithmetic() {
        assert_eq!(Sign::Plus.value(), 1.0);
        assert_eq!(Sign::Minus.value(), -1.0);
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::of(0.0), Sign::Plus);
        assert_eq!(Sign::of(-3.2), Sign::Minus);
    }

    #[test]
    fn sign_parsing() {
        assert_eq!(Sign::parse("+1"), Some(Sign::Plus));
        assert_eq!(Sign::parse("-1"), Some(Sign::Minus));
        assert_eq!(Sign::parse("x"), None);
    }
}

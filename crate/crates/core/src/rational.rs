//! A thin exact-rational wrapper used for bound values that are not whole
//! numbers. Comparisons stay in integer arithmetic; nothing here touches
//! floating point.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(Ratio<i128>);

impl Rational {
    /// Reduced fraction `num / den`; `den` must be nonzero.
    pub fn new(num: i128, den: i128) -> Self {
        Rational(Ratio::new(num, den))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn cmp_u64(&self, value: u64) -> Ordering {
        self.0.cmp(&Ratio::from_integer(value as i128))
    }
}

impl From<u64> for Rational {
    fn from(value: u64) -> Self {
        Rational(Ratio::from_integer(value as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exact rational numbers with arbitrary-precision parts, always reduced.
pub type Rational = num_rational::BigRational;

/// Renders a rational as `p` or `p/q`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Builds `num/den` as a [`Rational`].
#[cfg(test)]
pub(crate) fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// A multiple of one half, stored as twice its value.
///
/// ```
/// use polykern::graph::HalfInteger;
/// let d = HalfInteger::from_twice(3);
/// assert_eq!(d.to_string(), "3/2");
/// assert_eq!(HalfInteger::from_int(1).to_string(), "1");
/// assert!(HalfInteger::from_twice(1) < HalfInteger::from_int(1));
/// ```
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    /// Zero.
    pub const ZERO: HalfInteger = HalfInteger { twice: 0 };
    /// One half.
    pub const HALF: HalfInteger = HalfInteger { twice: 1 };
    /// One.
    pub const ONE: HalfInteger = HalfInteger { twice: 2 };

    /// The value `twice / 2`.
    pub fn from_twice(twice: i64) -> HalfInteger {
        HalfInteger { twice }
    }

    /// The integer `v`.
    pub fn from_int(v: i64) -> HalfInteger {
        HalfInteger { twice: 2 * v }
    }

    /// Twice the value.
    pub fn twice(self) -> i64 {
        self.twice
    }

    /// Largest integer not above the value.
    pub fn floor(self) -> i64 {
        self.twice.div_euclid(2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl std::str::FromStr for HalfInteger {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(num) = s.strip_suffix("/2") {
            let t: i64 = num.parse().map_err(|_| format!("bad half-integer {s:?}"))?;
            Ok(HalfInteger::from_twice(t))
        } else {
            let v: i64 = s.parse().map_err(|_| format!("bad half-integer {s:?}"))?;
            Ok(HalfInteger::from_int(v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_integer_round_trip() {
        for t in 0..7 {
            let h = HalfInteger::from_twice(t);
            assert_eq!(h.to_string().parse::<HalfInteger>().unwrap(), h);
        }
        assert_eq!(HalfInteger::from_twice(5).floor(), 2);
    }

    #[test]
    fn rationals_render_reduced() {
        assert_eq!(rational_to_string(&ratio(2, 4)), "1/2");
        assert_eq!(rational_to_string(&ratio(6, 2)), "3");
        assert_eq!(rational_to_string(&Rational::from_integer(0.into())), "0");
    }
}

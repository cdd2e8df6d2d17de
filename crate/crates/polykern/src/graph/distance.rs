use serde::{Deserialize, Serialize};
use std::fmt;

/// A hop count, or [`Distance::Unreachable`].
///
/// `Unreachable` compares greater than every finite value and absorbs
/// addition, so DP update rules never overflow silently.
///
/// ```
/// use polykern::graph::Distance;
/// assert!(Distance::Finite(7) < Distance::Unreachable);
/// assert_eq!(Distance::Unreachable + 3, Distance::Unreachable);
/// assert_eq!(Distance::Finite(2) + Distance::Finite(3), Distance::Finite(5));
/// ```
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
pub enum Distance {
    /// A finite hop count.
    Finite(u32),
    /// No path exists (or, for girth, no cycle exists).
    #[default]
    Unreachable,
}

impl Distance {
    /// Distance zero.
    pub const ZERO: Distance = Distance::Finite(0);

    /// The finite value, if any.
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    /// True for finite values.
    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// Converts a raw BFS value where `u32::MAX` means unreachable.
    pub(crate) fn from_raw(d: u32) -> Distance {
        if d == u32::MAX {
            Distance::Unreachable
        } else {
            Distance::Finite(d)
        }
    }
}

impl std::ops::Add<u32> for Distance {
    type Output = Distance;
    fn add(self, k: u32) -> Distance {
        match self {
            Distance::Finite(d) => match d.checked_add(k) {
                Some(s) if s != u32::MAX => Distance::Finite(s),
                _ => Distance::Unreachable,
            },
            Distance::Unreachable => Distance::Unreachable,
        }
    }
}

impl std::ops::Add for Distance {
    type Output = Distance;
    fn add(self, other: Distance) -> Distance {
        match other {
            Distance::Finite(k) => self + k,
            Distance::Unreachable => Distance::Unreachable,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_saturation() {
        assert!(Distance::Finite(u32::MAX - 1) < Distance::Unreachable);
        assert_eq!(Distance::Finite(u32::MAX - 2) + 5, Distance::Unreachable);
        assert_eq!(Distance::Finite(1) + Distance::Unreachable, Distance::Unreachable);
        assert_eq!(Distance::Finite(3).min(Distance::Unreachable), Distance::Finite(3));
        assert_eq!(Distance::Unreachable.to_string(), "inf");
    }
}

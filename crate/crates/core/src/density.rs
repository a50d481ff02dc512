use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Flow density `value / size` kept as an exact fraction.
///
/// Comparison is by cross-multiplication, so `2/4 == 1/2`; the stored
/// numerator and denominator are left unreduced so that they still read as
/// "flow value" and "number of terminals".
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Density {
    pub num: u64,
    pub den: u64,
}

impl Density {
    /// # Panics
    /// If `den` is zero.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "density denominator must be positive");
        Density { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `3 * self >= other`, exactly.
    pub fn within_factor_of(&self, factor: u64, other: &Density) -> bool {
        (factor as u128) * (self.num as u128) * (other.den as u128) >= (other.num as u128) * (self.den as u128)
    }
}

impl PartialEq for Density {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Density {}

impl PartialOrd for Density {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Density {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn compares_exactly() {
        assert!(Density::new(16, 5) > Density::new(3, 1));
        assert_eq!(Density::new(2, 4), Density::new(1, 2));
        assert!(Density::new(0, 3) < Density::new(1, 1000));
        assert!(Density::new(u64::MAX, 1) > Density::new(u64::MAX - 1, 1));
    }

    #[test]
    fn factor_check() {
        assert!(Density::new(1, 1).within_factor_of(3, &Density::new(3, 1)));
        assert!(!Density::new(1, 1).within_factor_of(3, &Density::new(31, 10)));
    }

    proptest! {
        #[test]
        fn agrees_with_rational_order(a in 0u64..1000, b in 1u64..1000, c in 0u64..1000, d in 1u64..1000) {
            let x = Density::new(a, b);
            let y = Density::new(c, d);
            prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
        }
    }
}

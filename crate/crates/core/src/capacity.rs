use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

/// Edge capacity: a finite 64-bit integer or `+∞`.
///
/// Infinite capacities only appear on edges introduced by transformation
/// (vertical edges) or super-terminal construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Capacity {
    Finite(u64),
    Infinite,
}

impl Capacity {
    pub const ZERO: Capacity = Capacity::Finite(0);

    pub fn is_infinite(self) -> bool {
        matches!(self, Capacity::Infinite)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Capacity::Finite(c) => Some(c),
            Capacity::Infinite => None,
        }
    }

    /// `None` when two finite values overflow.
    pub fn checked_add(self, rhs: Capacity) -> Option<Capacity> {
        match (self, rhs) {
            (Capacity::Finite(a), Capacity::Finite(b)) => a.checked_add(b).map(Capacity::Finite),
            _ => Some(Capacity::Infinite),
        }
    }

    /// Finite overflow clamps to `Infinite`. Only used when merging parallel
    /// edges, where a clamped value still dominates every finite cut.
    pub fn saturating_add(self, rhs: Capacity) -> Capacity {
        self.checked_add(rhs).unwrap_or(Capacity::Infinite)
    }

    /// `Infinite - x = Infinite`; finite subtraction requires `self >= rhs`.
    pub fn checked_sub(self, rhs: u64) -> Option<Capacity> {
        match self {
            Capacity::Infinite => Some(Capacity::Infinite),
            Capacity::Finite(a) => a.checked_sub(rhs).map(Capacity::Finite),
        }
    }
}

impl Add for Capacity {
    type Output = Capacity;

    /// Panics on finite overflow; use [`Capacity::checked_add`] on untrusted input.
    fn add(self, rhs: Capacity) -> Capacity {
        self.checked_add(rhs).expect("capacity overflow")
    }
}

impl PartialOrd for Capacity {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Capacity {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (self, other) {
            (Capacity::Finite(a), Capacity::Finite(b)) => a.cmp(b),
            (Capacity::Finite(_), Capacity::Infinite) => Less,
            (Capacity::Infinite, Capacity::Finite(_)) => Greater,
            (Capacity::Infinite, Capacity::Infinite) => Equal,
        }
    }
}

impl From<u64> for Capacity {
    fn from(c: u64) -> Self {
        Capacity::Finite(c)
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Capacity::Finite(c) => write!(f, "{c}"),
            Capacity::Infinite => f.write_str("inf"),
        }
    }
}

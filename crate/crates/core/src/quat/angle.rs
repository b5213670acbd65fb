use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;

/// A unit complex number `exp(2πi·t)` stored as `t ∈ [0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Ratio<i64>);

impl Angle {
    pub const ZERO: Angle = Angle(Ratio::new_raw(0, 1));
    pub const HALF: Angle = Angle(Ratio::new_raw(1, 2));

    pub fn new(num: i64, den: i64) -> Self {
        Self::from_ratio(Ratio::new(num, den))
    }

    pub fn from_ratio(t: Ratio<i64>) -> Self {
        let (n, d) = (*t.numer(), *t.denom());
        Angle(Ratio::new(n.mod_floor(&d), d))
    }

    pub fn value(&self) -> Ratio<i64> {
        self.0
    }

    /// Half of the representative in `[0,1)`; one of the two square roots.
    pub fn half(&self) -> Angle {
        Angle::from_ratio(self.0 / 2)
    }

    /// Multiplicative order of `exp(2πi·t)`, the reduced denominator of `t`.
    pub fn order(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        *self.0.numer() == 0
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, o: Angle) -> Angle {
        Angle::from_ratio(self.0 + o.0)
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, o: Angle) -> Angle {
        Angle::from_ratio(self.0 - o.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle::from_ratio(-self.0)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

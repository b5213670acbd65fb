use std::fmt;

use super::angle::Angle;

/// An element of `D_S = S¹ ⊔ S¹j ⊂ S³`: `exp(2πit)` or `exp(2πit)·j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DSElem {
    pub t: Angle,
    pub jflag: bool,
}

impl DSElem {
    pub const ONE: DSElem = DSElem { t: Angle::ZERO, jflag: false };
    pub const MINUS_ONE: DSElem = DSElem { t: Angle::HALF, jflag: false };
    pub const J: DSElem = DSElem { t: Angle::ZERO, jflag: true };

    pub fn circle(t: Angle) -> Self {
        DSElem { t, jflag: false }
    }

    pub fn circle_j(t: Angle) -> Self {
        DSElem { t, jflag: true }
    }

    pub fn i() -> Self {
        DSElem::circle(Angle::new(1, 4))
    }

    /// Uses `j z = z̄ j` and `j² = -1`.
    pub fn mul(&self, o: &DSElem) -> DSElem {
        match (self.jflag, o.jflag) {
            (false, false) => DSElem::circle(self.t + o.t),
            (false, true) => DSElem::circle_j(self.t + o.t),
            (true, false) => DSElem::circle_j(self.t - o.t),
            (true, true) => DSElem::circle(self.t - o.t + Angle::HALF),
        }
    }

    pub fn inv(&self) -> DSElem {
        if self.jflag {
            // (e^{2πit} j)⁻¹ = -j e^{-2πit} = -e^{2πit} j
            DSElem::circle_j(self.t + Angle::HALF)
        } else {
            DSElem::circle(-self.t)
        }
    }

    pub fn neg(&self) -> DSElem {
        DSElem { t: self.t + Angle::HALF, jflag: self.jflag }
    }

    pub fn is_one(&self) -> bool {
        !self.jflag && self.t.is_zero()
    }
}

impl fmt::Display for DSElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", self.t)?;
        if self.jflag {
            write!(f, "j")?;
        }
        Ok(())
    }
}

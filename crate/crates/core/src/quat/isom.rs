use std::fmt;

use num_rational::Ratio;

use super::angle::Angle;
use super::ds::DSElem;
use crate::group::GroupElement;

/// `φ(g₁, g₂) ∈ Isom⁺(S³)`, the map `q ↦ g₁ q g₂⁻¹`, for `g₁, g₂ ∈ D_S`.
///
/// Stored modulo `Ker φ = ⟨(-1,-1)⟩`: of the two lifts, the one whose first
/// angle lies in `[0, ½)` is kept, so equality is structural.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Isom3 {
    g1: DSElem,
    g2: DSElem,
}

impl Isom3 {
    pub fn phi(g1: DSElem, g2: DSElem) -> Self {
        if g1.t.value() < Ratio::new(1, 2) {
            Isom3 { g1, g2 }
        } else {
            Isom3 { g1: g1.neg(), g2: g2.neg() }
        }
    }

    pub fn identity() -> Self {
        Self::phi(DSElem::ONE, DSElem::ONE)
    }

    /// `L(t₁, t₂)(z₁, z₂) = (e^{2πit₁} z₁, e^{2πit₂} z₂)`.
    pub fn l(t1: Angle, t2: Angle) -> Self {
        let (a, b) = (t1.value(), t2.value());
        let eta1 = Angle::from_ratio((a + b) / 2);
        let eta2 = Angle::from_ratio((b - a) / 2);
        Self::phi(DSElem::circle(eta1), DSElem::circle(eta2))
    }

    pub fn l_frac(n1: i64, d1: i64, n2: i64, d2: i64) -> Self {
        Self::l(Angle::new(n1, d1), Angle::new(n2, d2))
    }

    /// `J = φ(j, j)`, `(z₁, z₂) ↦ (z̄₁, z̄₂)`.
    pub fn j() -> Self {
        Self::phi(DSElem::J, DSElem::J)
    }

    /// `J₁ = φ(1, j)`.
    pub fn j1() -> Self {
        Self::phi(DSElem::ONE, DSElem::J)
    }

    /// `J₂ = φ(j, 1)`.
    pub fn j2() -> Self {
        Self::phi(DSElem::J, DSElem::ONE)
    }

    pub fn components(&self) -> (DSElem, DSElem) {
        (self.g1, self.g2)
    }

    /// `(t₁, t₂, has_J)` when the element lies in `⟨L(S¹×S¹), J⟩`, i.e. it is
    /// `L(t₁,t₂)` or `L(t₁,t₂)·J`.
    pub fn as_l_form(&self) -> Option<(Angle, Angle, bool)> {
        if self.g1.jflag != self.g2.jflag {
            return None;
        }
        // φ(η₁,η₂) = L(η₁η̄₂, η₁η₂); φ(η₁j, η₂j) = L(η₁η̄₂, η₁η₂)·J
        let (a, b) = (self.g1.t, self.g2.t);
        Some((a - b, a + b, self.g1.jflag))
    }

    pub fn order(&self) -> usize {
        let bound = match self.as_l_form() {
            Some((t1, t2, _)) => 2 * num_integer::lcm(t1.order(), t2.order()) as usize,
            None => 4 * num_integer::lcm(self.g1.t.order(), self.g2.t.order()) as usize,
        };
        self.order_bounded(bound.max(2)).expect("rational angles give finite order")
    }
}

impl GroupElement for Isom3 {
    fn mul(&self, o: &Self) -> Self {
        Isom3::phi(self.g1.mul(&o.g1), self.g2.mul(&o.g2))
    }

    fn inv(&self) -> Self {
        Isom3::phi(self.g1.inv(), self.g2.inv())
    }

    fn is_identity(&self) -> bool {
        self.g1.is_one() && self.g2.is_one()
    }
}

impl fmt::Display for Isom3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_l_form() {
            Some((t1, t2, false)) => write!(f, "L({t1}, {t2})"),
            Some((t1, t2, true)) => write!(f, "L({t1}, {t2})·J"),
            None => write!(f, "phi({}, {})", self.g1, self.g2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: i64, d: i64) -> Angle {
        Angle::new(n, d)
    }

    #[test]
    fn l_examples() {
        assert!(Isom3::l(a(0, 1), a(0, 1)).is_identity());
        let x = Isom3::l(a(1, 2), a(0, 1));
        assert!(x.mul(&x).is_identity());
        assert_eq!(x.order(), 2);
        assert_eq!(Isom3::j().order(), 2);
        assert_eq!(Isom3::l(a(1, 6), a(1, 2)).order(), 6);
        assert_eq!(Isom3::l(a(1, 6), a(1, 3)).order(), 6);
    }

    #[test]
    fn l_is_a_homomorphism_and_prints() {
        let x = Isom3::l(a(1, 6), a(3, 8));
        let y = Isom3::l(a(5, 12), a(1, 8));
        assert_eq!(x.mul(&y), Isom3::l(a(7, 12), a(1, 2)));
        assert_eq!(x.to_string(), "L(1/6, 3/8)");
        assert_eq!(x.mul(&Isom3::j()).to_string(), "L(1/6, 3/8)·J");
    }

    #[test]
    fn kernel_is_minus_one_pair() {
        let g = Isom3::phi(DSElem::circle(a(3, 5)), DSElem::circle_j(a(1, 7)));
        let h = Isom3::phi(DSElem::circle(a(3, 5)).neg(), DSElem::circle_j(a(1, 7)).neg());
        assert_eq!(g, h);
        assert!(Isom3::phi(DSElem::MINUS_ONE, DSElem::MINUS_ONE).is_identity());
        assert!(!Isom3::phi(DSElem::MINUS_ONE, DSElem::ONE).is_identity());
    }

    #[test]
    fn j_relations() {
        let (j, j1, j2) = (Isom3::j(), Isom3::j1(), Isom3::j2());
        assert_eq!(j1.mul(&j2), j);
        assert_eq!(j.mul(&j1), j1.mul(&j));
        // ⟨J, J₁⟩ is Z₂ × Z₂ only modulo L(S¹×S¹): J₁² = -id = L(½, ½)
        assert_eq!(j.order(), 2);
        assert_eq!(j1.order(), 4);
        assert_eq!(j1.mul(&j1), Isom3::l_frac(1, 2, 1, 2));
        for x in [j, j1, j.mul(&j1)] {
            assert!(x.as_l_form().is_none_or(|(_, _, has_j)| has_j));
        }
        let l = Isom3::l(a(2, 9), a(5, 11));
        assert_eq!(l.conj_by(&j), Isom3::l(a(-2, 9), a(-5, 11)));
        assert_eq!(l.conj_by(&j1), Isom3::l(a(5, 11), a(2, 9)));
    }
}

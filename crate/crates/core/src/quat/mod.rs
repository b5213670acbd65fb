//! Exact arithmetic in `D_S = S¹ ⊔ S¹j ⊂ S³` and the model
//! `φ: S³ × S³ → Isom⁺(S³)`, `φ(q₁,q₂)(q) = q₁ q q₂⁻¹`.
//!
//! Angles are rationals mod 1, so everything built from `L(t₁,t₂)`, `J`,
//! `J₁`, `J₂` is exact. The binary octahedral group needs `√2`
//! coordinates and lives in [`ext`].

mod angle;
mod ds;
pub mod ext;
mod isom;

pub use angle::Angle;
pub use ds::DSElem;
pub use ext::{IsomExt, QSqrt2, QuatExt, QuatPair};
pub use isom::Isom3;

use num_rational::Ratio;

use crate::group::{FinGroup, GroupError, GroupType};

pub fn close(gens: &[Isom3], bound: usize) -> Result<FinGroup<Isom3>, GroupError> {
    FinGroup::close(gens, Isom3::identity(), bound)
}

/// Isomorphism type of a closed group; `|G| ≤ 10⁴` keeps the table small.
pub fn recognize<T: crate::group::GroupElement>(g: &FinGroup<T>) -> GroupType {
    g.cayley_table().recognize()
}

/// `O* = ψ⁻¹(O)`, generated by `(1+i)/√2` and `(1+i+j+k)/2`.
pub fn binary_octahedral() -> FinGroup<QuatExt> {
    let h = QSqrt2::new(Ratio::from_integer(0), Ratio::new(1, 2));
    let half = QSqrt2::rational(Ratio::new(1, 2));
    let zero = QSqrt2::zero();
    let r = QuatExt([h, h, zero, zero]);
    let s = QuatExt([half; 4]);
    FinGroup::close(&[r, s], QuatExt::one(), 48).expect("binary octahedral group has order 48")
}

/// `D₂* = {±1, ±i, ±j, ±k}`.
pub fn quaternion_group() -> FinGroup<QuatExt> {
    FinGroup::close(&[QuatExt::i(), QuatExt::j()], QuatExt::one(), 8).expect("Q8 has order 8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupElement;

    #[test]
    fn small_closures() {
        assert_eq!(close(&[Isom3::j()], 10).unwrap().order(), 2);
        let g = close(&[Isom3::l_frac(1, 2, 1, 2), Isom3::j()], 10).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(recognize(&g), GroupType::ElementaryAbelian2(2));
        let d6 = close(&[Isom3::l_frac(1, 6, 1, 2), Isom3::j()], 100).unwrap();
        assert_eq!(d6.order(), 12);
        assert_eq!(recognize(&d6), GroupType::Dihedral(6));
    }

    #[test]
    fn closure_overflow_is_reported() {
        let err = close(&[Isom3::l_frac(1, 7, 0, 1)], 5).unwrap_err();
        assert_eq!(err, GroupError::Overflow { bound: 5 });
    }

    #[test]
    fn binary_octahedral_group() {
        let o = binary_octahedral();
        assert_eq!(o.order(), 48);
        assert!(o.elements().iter().all(|q| q.is_unit()));
        let h = QSqrt2::new(Ratio::from_integer(0), Ratio::new(1, 2));
        let r = QuatExt([h, h, QSqrt2::zero(), QSqrt2::zero()]);
        assert!(o.contains(&r));
        assert_eq!(o.element_order(&r), 8);
        let q8 = quaternion_group();
        assert_eq!(q8.order(), 8);
        assert!(q8.is_subgroup_of(&o));
        assert!(o.elements().iter().all(|g| q8.is_normalized_by(g)));
        // O*/{±1} is the octahedral rotation group S4: 9 involutions
        let minus = QuatExt::one().neg();
        let z2 = FinGroup::close(&[minus], QuatExt::one(), 2).unwrap();
        let (octa, _) = o.quotient(&z2).unwrap();
        assert_eq!(octa.order(), 24);
        assert_eq!((0..24).filter(|&a| octa.element_order(a) == 2).count(), 9);
        assert!(minus.mul(&minus).is_identity());
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;

use super::ds::DSElem;
use crate::group::GroupElement;

type Q = Ratio<i64>;

/// `a + b√2` with rational `a`, `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QSqrt2 {
    pub a: Q,
    pub b: Q,
}

impl QSqrt2 {
    pub fn new(a: Q, b: Q) -> Self {
        Self { a, b }
    }

    pub fn rational(a: Q) -> Self {
        Self { a, b: Q::from_integer(0) }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Q::from_integer(1))
    }

    pub fn is_zero(&self) -> bool {
        self.a == Q::from_integer(0) && self.b == Q::from_integer(0)
    }
}

impl Add for QSqrt2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for QSqrt2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for QSqrt2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for QSqrt2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.a * o.a + Q::from_integer(2) * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = Q::from_integer(0);
        match (self.a == zero, self.b == zero) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) => write!(f, "({}+{}√2)", self.a, self.b),
        }
    }
}

/// A quaternion `w + xi + yj + zk` with coordinates in `Q(√2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuatExt(pub [QSqrt2; 4]);

impl QuatExt {
    pub fn one() -> Self {
        let z = QSqrt2::zero();
        QuatExt([QSqrt2::one(), z, z, z])
    }

    pub fn basis(k: usize) -> Self {
        let mut c = [QSqrt2::zero(); 4];
        c[k] = QSqrt2::one();
        QuatExt(c)
    }

    pub fn i() -> Self {
        Self::basis(1)
    }

    pub fn j() -> Self {
        Self::basis(2)
    }

    pub fn k() -> Self {
        Self::basis(3)
    }

    pub fn neg(&self) -> Self {
        QuatExt(self.0.map(|c| -c))
    }

    pub fn conj(&self) -> Self {
        let [w, x, y, z] = self.0;
        QuatExt([w, -x, -y, -z])
    }

    pub fn norm2(&self) -> QSqrt2 {
        self.0.iter().fold(QSqrt2::zero(), |acc, &c| acc + c * c)
    }

    pub fn is_unit(&self) -> bool {
        self.norm2() == QSqrt2::one()
    }

    pub fn scale(&self, s: QSqrt2) -> Self {
        QuatExt(self.0.map(|c| c * s))
    }

    /// Exact image of a `D_S` element whose angle has denominator dividing 8.
    pub fn from_ds(g: &DSElem) -> Option<Self> {
        let t = g.t.value();
        if 8 % t.denom() != 0 {
            return None;
        }
        let eighth = (t * 8).to_integer();
        let h = QSqrt2::new(Q::from_integer(0), Q::new(1, 2));
        let (one, zero) = (QSqrt2::one(), QSqrt2::zero());
        // (cos, sin) of 2π·eighth/8
        let (c, s) = match eighth {
            0 => (one, zero),
            1 => (h, h),
            2 => (zero, one),
            3 => (-h, h),
            4 => (-one, zero),
            5 => (-h, -h),
            6 => (zero, -one),
            7 => (h, -h),
            _ => unreachable!(),
        };
        // (c + s i) j = c j + s k
        Some(if g.jflag {
            QuatExt([zero, zero, c, s])
        } else {
            QuatExt([c, s, zero, zero])
        })
    }
}

impl GroupElement for QuatExt {
    fn mul(&self, o: &Self) -> Self {
        let [a1, b1, c1, d1] = self.0;
        let [a2, b2, c2, d2] = o.0;
        QuatExt([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }

    /// Inverse of a unit quaternion is its conjugate.
    fn inv(&self) -> Self {
        debug_assert!(self.is_unit());
        self.conj()
    }

    fn is_identity(&self) -> bool {
        *self == QuatExt::one()
    }
}

impl fmt::Display for QuatExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [w, x, y, z] = self.0;
        write!(f, "{w} + {x}i + {y}j + {z}k")
    }
}

/// An element of `S³ × S³` with `Q(√2)` coordinates (no ± identification).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuatPair(pub QuatExt, pub QuatExt);

impl QuatPair {
    pub fn diagonal(q: QuatExt) -> Self {
        QuatPair(q, q)
    }

    pub fn from_ds(g1: &DSElem, g2: &DSElem) -> Option<Self> {
        Some(QuatPair(QuatExt::from_ds(g1)?, QuatExt::from_ds(g2)?))
    }

    pub fn neg(&self) -> Self {
        QuatPair(self.0.neg(), self.1.neg())
    }

    /// The image in `Isom⁺(S³)`, i.e. the class modulo `(-1,-1)`.
    pub fn to_isom(&self) -> IsomExt {
        IsomExt::phi(self.0, self.1)
    }
}

impl GroupElement for QuatPair {
    fn mul(&self, o: &Self) -> Self {
        QuatPair(self.0.mul(&o.0), self.1.mul(&o.1))
    }

    fn inv(&self) -> Self {
        QuatPair(self.0.inv(), self.1.inv())
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity() && self.1.is_identity()
    }
}

/// `φ(q₁, q₂)` for `Q(√2)` quaternions, canonicalized as the smaller of the two lifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsomExt(QuatExt, QuatExt);

impl IsomExt {
    pub fn phi(q1: QuatExt, q2: QuatExt) -> Self {
        let a = (q1, q2);
        let b = (q1.neg(), q2.neg());
        let (x, y) = a.min(b);
        IsomExt(x, y)
    }
}

impl GroupElement for IsomExt {
    fn mul(&self, o: &Self) -> Self {
        IsomExt::phi(self.0.mul(&o.0), self.1.mul(&o.1))
    }

    fn inv(&self) -> Self {
        IsomExt::phi(self.0.inv(), self.1.inv())
    }

    fn is_identity(&self) -> bool {
        let minus = QuatExt::one().neg();
        (self.0.is_identity() && self.1.is_identity()) || (self.0 == minus && self.1 == minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::angle::Angle;

    #[test]
    fn quaternion_units() {
        let (i, j, k) = (QuatExt::i(), QuatExt::j(), QuatExt::k());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(i.mul(&i), QuatExt::one().neg());
        let h = QSqrt2::new(Q::from_integer(0), Q::new(1, 2));
        let r = QuatExt([h, h, QSqrt2::zero(), QSqrt2::zero()]);
        assert!(r.is_unit());
        assert_eq!(r.order_bounded(16), Some(8));
    }

    #[test]
    fn ds_embedding_is_multiplicative() {
        let samples: Vec<DSElem> = (0..8)
            .flat_map(|n| [DSElem::circle(Angle::new(n, 8)), DSElem::circle_j(Angle::new(n, 8))])
            .collect();
        for x in &samples {
            for y in &samples {
                let lhs = QuatExt::from_ds(&x.mul(y)).unwrap();
                let rhs = QuatExt::from_ds(x).unwrap().mul(&QuatExt::from_ds(y).unwrap());
                assert_eq!(lhs, rhs, "{x} * {y}");
            }
        }
        assert!(QuatExt::from_ds(&DSElem::circle(Angle::new(1, 3))).is_none());
    }
}

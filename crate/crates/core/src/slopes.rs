//! Rational slopes `q/p` of 2-bridge links.
//!
//! A slope is kept reduced with a nonnegative denominator; `∞` is stored as
//! `1/0`. The link `K(q/p)` has one or two components according to the
//! parity of `p`, and two slopes name the same link up to orientation
//! preserving homeomorphism exactly when `p = p'` and `q ≡ q'` or
//! `qq' ≡ 1 (mod p)` (Schubert).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SlopeError {
    #[error("0/0 is not a slope")]
    ZeroOverZero,
    #[error("operation needs a finite slope, got inf")]
    Infinite,
    #[error("cannot parse slope {0:?}: expected \"q/p\" or \"inf\"")]
    Parse(String),
    #[error("continued fraction {0:?} does not evaluate to a slope")]
    BadContinuedFraction(Vec<i64>),
}

/// A reduced slope `q/p` with `p ≥ 0`; `p = 0` forces `q = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    q: i64,
    p: i64,
}

impl Slope {
    /// Reduces `q/p`, absorbing the sign into the numerator.
    pub fn new(q: i64, p: i64) -> Result<Self, SlopeError> {
        if q == 0 && p == 0 {
            return Err(SlopeError::ZeroOverZero);
        }
        if p == 0 {
            return Ok(Self::INFINITY);
        }
        let g = q.gcd(&p);
        let (mut q, mut p) = (q / g, p / g);
        if p < 0 {
            q = -q;
            p = -p;
        }
        Ok(Slope { q, p })
    }

    pub const INFINITY: Slope = Slope { q: 1, p: 0 };

    pub fn numerator(&self) -> i64 {
        self.q
    }

    pub fn denominator(&self) -> i64 {
        self.p
    }

    pub fn is_infinite(&self) -> bool {
        self.p == 0
    }

    fn finite(&self) -> Result<(i64, i64), SlopeError> {
        if self.is_infinite() {
            Err(SlopeError::Infinite)
        } else {
            Ok((self.q, self.p))
        }
    }

    /// Number of components of `K(r)`: 1 for odd `p`, 2 for even `p` and for `∞`.
    pub fn components(&self) -> u8 {
        if self.p % 2 == 1 {
            1
        } else {
            2
        }
    }

    /// `K(q/p)` is hyperbolic iff `q ≢ ±1 (mod p)`.
    pub fn is_hyperbolic(&self) -> Result<bool, SlopeError> {
        let (q, p) = self.finite()?;
        let r = q.mod_floor(&p);
        Ok(r != 1 % p && r != (p - 1) % p)
    }

    /// Expansion `r = [a₁,…,aₙ] = 1/(a₁ + 1/(a₂ + … + 1/aₙ))` with nonzero terms.
    ///
    /// For `0 < r < 1` every term is positive. Zero maps to the empty
    /// expansion.
    pub fn continued_fraction(&self) -> Result<ContinuedFraction, SlopeError> {
        let (q, p) = self.finite()?;
        let mut terms = Vec::new();
        // current value is num/den; next term comes from den/num
        let (mut num, mut den) = (q, p);
        while num != 0 {
            let (x_num, x_den) = if num < 0 { (-den, -num) } else { (den, num) };
            let mut a = Integer::div_floor(&x_num, &x_den);
            if a == 0 {
                a = 1;
            }
            terms.push(a);
            // remainder x - a = (x_num - a x_den) / x_den
            num = x_num - a * x_den;
            den = x_den;
        }
        Ok(ContinuedFraction { terms })
    }

    /// The slope `r̂` used to index half-integral Heckoid orbifolds.
    ///
    /// `q` is first normalized into `[0, 2p)`.
    pub fn hat(&self) -> Result<Slope, SlopeError> {
        let (q, p) = self.finite()?;
        let q = q.mod_floor(&(2 * p));
        if p % 2 == 1 {
            if q % 2 == 0 {
                Slope::new(q / 2, p)
            } else {
                Slope::new((p + q) / 2, p)
            }
        } else {
            Slope::new(q, p / 2)
        }
    }

    /// Canonical representative of the orientation-preserving class:
    /// the least of `q mod p` and `q⁻¹ mod p` in `[1, p-1]`, and `0/1` when `p = 1`.
    pub fn preserving_canonical(&self) -> Slope {
        if self.is_infinite() {
            return *self;
        }
        let p = self.p;
        if p == 1 {
            return Slope { q: 0, p: 1 };
        }
        let a = self.q.mod_floor(&p);
        let b = mod_inverse(a, p).expect("reduced slope has invertible numerator");
        Slope { q: a.min(b), p }
    }
}

/// Inverse of `a` modulo `m ≥ 1`, or `None` when `gcd(a, m) ≠ 1`.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    if m == 1 {
        return Some(0);
    }
    let e = a.mod_floor(&m).extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.mod_floor(&m))
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.q, self.p)
        }
    }
}

impl FromStr for Slope {
    type Err = SlopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "inf" {
            return Ok(Slope::INFINITY);
        }
        let (a, b) = t.split_once('/').ok_or_else(|| SlopeError::Parse(s.to_string()))?;
        let q: i64 = a.trim().parse().map_err(|_| SlopeError::Parse(s.to_string()))?;
        let p: i64 = b.trim().parse().map_err(|_| SlopeError::Parse(s.to_string()))?;
        Slope::new(q, p)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Terms `[a₁,…,aₙ]` of the tower `1/(a₁ + 1/(a₂ + …))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuedFraction {
    pub terms: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<i64>) -> Self {
        Self { terms }
    }

    pub fn eval(&self) -> Result<Slope, SlopeError> {
        let bad = || SlopeError::BadContinuedFraction(self.terms.clone());
        if self.terms.contains(&0) {
            return Err(bad());
        }
        // tail value num/den, starting from 0 = 0/1
        let (mut num, mut den) = (0i64, 1i64);
        for &a in self.terms.iter().rev() {
            // 1 / (a + num/den) = den / (a den + num)
            let d = a.checked_mul(den).and_then(|x| x.checked_add(num)).ok_or_else(bad)?;
            if d == 0 {
                return Err(bad());
            }
            (num, den) = (den, d);
        }
        Slope::new(num, den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InvolutionClass {
    VerticalPreserved,
    PlanarSwapped,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceVerdict {
    pub preserving: bool,
    pub reversing: bool,
    pub bridge_swap: bool,
    pub involution_class: InvolutionClass,
}

/// Schubert's classification applied to a pair of finite slopes.
pub fn equivalence(r: Slope, s: Slope) -> Result<EquivalenceVerdict, SlopeError> {
    let (q, p) = r.finite()?;
    let (q2, p2) = s.finite()?;
    if p != p2 {
        return Ok(EquivalenceVerdict {
            preserving: false,
            reversing: false,
            bridge_swap: false,
            involution_class: InvolutionClass::NotApplicable,
        });
    }
    let congruent = (q - q2).mod_floor(&p) == 0;
    let inverse = (q * q2 - 1).mod_floor(&p) == 0;
    let neg = (q + q2).mod_floor(&p) == 0;
    let neg_inverse = (q * q2 + 1).mod_floor(&p) == 0;
    let involution_class = if congruent {
        if (q2 - q).mod_floor(&(2 * p)) == 0 {
            InvolutionClass::VerticalPreserved
        } else {
            InvolutionClass::PlanarSwapped
        }
    } else {
        InvolutionClass::NotApplicable
    };
    Ok(EquivalenceVerdict {
        preserving: congruent || inverse,
        reversing: neg || neg_inverse,
        bridge_swap: inverse && !congruent,
        involution_class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(q: i64, p: i64) -> Slope {
        Slope::new(q, p).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(s(6, 10), s(3, 5));
        assert_eq!(s(6, 10).numerator(), 3);
        assert_eq!(s(-1, 0), Slope::INFINITY);
        assert_eq!(s(8, 3).to_string(), "8/3");
        assert_eq!(s(3, -5).to_string(), "-3/5");
        assert_eq!(Slope::new(0, 0), Err(SlopeError::ZeroOverZero));
    }

    #[test]
    fn parse_roundtrip() {
        for t in ["3/8", "inf", "-2/7", "0/1"] {
            assert_eq!(t.parse::<Slope>().unwrap().to_string(), t);
        }
        assert!("0.375".parse::<Slope>().is_err());
        assert!("3".parse::<Slope>().is_err());
    }

    #[test]
    fn components_and_hyperbolicity() {
        assert_eq!(s(3, 8).components(), 2);
        assert_eq!(s(2, 5).components(), 1);
        assert_eq!(Slope::INFINITY.components(), 2);
        assert!(!s(1, 3).is_hyperbolic().unwrap());
        assert!(s(3, 8).is_hyperbolic().unwrap());
        assert!(!s(0, 1).is_hyperbolic().unwrap());
        assert!(!s(4, 5).is_hyperbolic().unwrap());
        assert!(s(2, 5).is_hyperbolic().unwrap());
        assert_eq!(Slope::INFINITY.is_hyperbolic(), Err(SlopeError::Infinite));
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(ContinuedFraction::new(vec![2, 2]).eval().unwrap(), s(2, 5));
        assert_eq!(ContinuedFraction::new(vec![3]).eval().unwrap(), s(1, 3));
        let cf = s(2, 5).continued_fraction().unwrap();
        assert_eq!(cf.terms, vec![2, 2]);
        assert_eq!(cf.eval().unwrap(), s(2, 5));
        assert!(s(0, 1).continued_fraction().unwrap().terms.is_empty());
        for (q, p) in [(3, 2), (-5, 7), (-9, 4), (13, 1)] {
            let cf = s(q, p).continued_fraction().unwrap();
            assert!(cf.terms.iter().all(|&a| a != 0));
            assert_eq!(cf.eval().unwrap(), s(q, p));
        }
        assert!(ContinuedFraction::new(vec![1, -1]).eval().is_err());
    }

    #[test]
    fn equivalence_examples() {
        let v = equivalence(s(2, 7), s(4, 7)).unwrap();
        assert!(v.preserving && v.bridge_swap);
        let v = equivalence(s(1, 3), s(1, 3)).unwrap();
        assert!(v.preserving && !v.bridge_swap);
        assert_eq!(v.involution_class, InvolutionClass::VerticalPreserved);
        let v = equivalence(s(1, 3), s(2, 3)).unwrap();
        assert!(v.reversing);
        let v = equivalence(s(1, 3), s(4, 3)).unwrap();
        assert_eq!(v.involution_class, InvolutionClass::PlanarSwapped);
        let v = equivalence(s(1, 3), s(1, 5)).unwrap();
        assert!(!v.preserving && !v.reversing);
    }

    #[test]
    fn hat_examples() {
        assert_eq!(s(2, 5).hat().unwrap(), s(1, 5));
        assert_eq!(s(3, 5).hat().unwrap(), s(4, 5));
        assert_eq!(s(3, 8).hat().unwrap(), s(3, 4));
        // negative numerators are normalized mod 2p first
        assert_eq!(s(-2, 5).hat().unwrap(), s(4, 5));
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(s(4, 7).preserving_canonical(), s(2, 7));
        assert_eq!(s(9, 7).preserving_canonical(), s(2, 7));
        assert_eq!(s(5, 1).preserving_canonical(), s(0, 1));
        assert_eq!(mod_inverse(3, 8), Some(3));
        assert_eq!(mod_inverse(2, 8), None);
    }
}

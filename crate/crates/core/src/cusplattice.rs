//! Translation lattices of the rigid cusps `S²(2,4,4)` and `S²(2,3,6)`.
//!
//! The cusp group acts on the horosphere `ℂ` through isometries
//! `z ↦ ζᵏ z + t` with `ζ = e^{iπ/6}` and `t ∈ Q(ζ)·ℓ`. The scale `ℓ` stays
//! symbolic: translations are stored as elements of `Q(ζ)` and lengths as
//! `coef2 = |γ|²/ℓ²`, an integer.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::word::{Word, WordError};

type Q = Ratio<i64>;

/// An element `c₀ + c₁ζ + c₂ζ² + c₃ζ³` of `Q(ζ₁₂)`, reduced by `ζ⁴ = ζ² − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Cyclo12(pub [Q; 4]);

impl Cyclo12 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn integer(n: i64) -> Self {
        Cyclo12([Q::from_integer(n), Q::from_integer(0), Q::from_integer(0), Q::from_integer(0)])
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Cyclo12(c.map(Q::from_integer))
    }

    /// `ζᵏ` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(12);
        let (sign, k) = if k >= 6 { (-1, k - 6) } else { (1, k) };
        let base = match k {
            0 => [1, 0, 0, 0],
            1 => [0, 1, 0, 0],
            2 => [0, 0, 1, 0],
            3 => [0, 0, 0, 1],
            // ζ⁴ = ζ² − 1, ζ⁵ = ζ³ − ζ
            4 => [-1, 0, 1, 0],
            _ => [0, -1, 0, 1],
        };
        Cyclo12::from_ints(base.map(|x| sign * x))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == Q::from_integer(0))
    }

    pub fn coords(&self) -> [Q; 4] {
        self.0
    }
}

impl Add for Cyclo12 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Cyclo12(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Sub for Cyclo12 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Cyclo12(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl Neg for Cyclo12 {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclo12(self.0.map(|c| -c))
    }
}

impl Mul for Cyclo12 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut acc = Cyclo12::zero();
        for i in 0..4 {
            for j in 0..4 {
                let c = self.0[i] * o.0[j];
                if c != Q::from_integer(0) {
                    let z = Cyclo12::zeta_pow((i + j) as i64);
                    acc = acc + Cyclo12(z.0.map(|x| x * c));
                }
            }
        }
        acc
    }
}

impl fmt::Display for Cyclo12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Q::from_integer(0))
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}z"),
                _ => format!("{c}z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `z ↦ ζ^rotation · z + translation·ℓ`, with `ζ = e^{iπ/6}`.
///
/// Rotations in these cusp groups are multiples of `π/6`, so the exponent
/// lives in `Z/12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EucIsometry {
    pub rotation: u8,
    pub translation: Cyclo12,
}

impl EucIsometry {
    pub fn identity() -> Self {
        EucIsometry { rotation: 0, translation: Cyclo12::zero() }
    }

    /// Rotation by `k·π/6` about `center`.
    pub fn rotation_about(k: i64, center: Cyclo12) -> Self {
        let u = Cyclo12::zeta_pow(k);
        EucIsometry { rotation: k.rem_euclid(12) as u8, translation: (Cyclo12::integer(1) - u) * center }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let u = Cyclo12::zeta_pow(self.rotation as i64);
        EucIsometry {
            rotation: (self.rotation + other.rotation) % 12,
            translation: u * other.translation + self.translation,
        }
    }

    pub fn inverse(&self) -> Self {
        let k = (12 - self.rotation as i64) % 12;
        EucIsometry { rotation: k as u8, translation: -(Cyclo12::zeta_pow(k) * self.translation) }
    }

    pub fn apply(&self, z: Cyclo12) -> Cyclo12 {
        Cyclo12::zeta_pow(self.rotation as i64) * z + self.translation
    }

    pub fn is_identity(&self) -> bool {
        self.rotation == 0 && self.translation.is_zero()
    }

    pub fn is_translation(&self) -> bool {
        self.rotation == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LatticeKind {
    #[serde(rename = "244")]
    T244,
    #[serde(rename = "236")]
    T236,
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeKind::T244 => "244",
            LatticeKind::T236 => "236",
        })
    }
}

impl std::str::FromStr for LatticeKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().trim_start_matches('T').replace(['(', ')', ',', ' '], "").as_str() {
            "244" => Ok(LatticeKind::T244),
            "236" => Ok(LatticeKind::T236),
            _ => Err(format!("unknown cusp type {s:?}: expected 244 or 236")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticeVector {
    pub m: i64,
    pub n: i64,
    pub coef2: i64,
}

impl LatticeKind {
    /// `|m u + n v|² / ℓ²`.
    pub fn form(&self, m: i64, n: i64) -> i64 {
        match self {
            LatticeKind::T244 => 4 * (m * m + n * n),
            LatticeKind::T236 => 12 * (m * m + m * n + n * n),
        }
    }

    pub fn vector(&self, m: i64, n: i64) -> LatticeVector {
        LatticeVector { m, n, coef2: self.form(m, n) }
    }

    /// Order of the point group, `C₄` or `C₆`.
    pub fn point_group_order(&self) -> usize {
        match self {
            LatticeKind::T244 => 4,
            LatticeKind::T236 => 6,
        }
    }

    /// The generating rotation: multiplication by `i` or by `e^{iπ/3}`.
    pub fn rotate(&self, (m, n): (i64, i64)) -> (i64, i64) {
        match self {
            LatticeKind::T244 => (-n, m),
            LatticeKind::T236 => (-n, m + n),
        }
    }

    /// `m u + n v` in `Q(ζ)`: `u = 2, v = 2i` or `u = 2√3, v = 2√3 e^{iπ/3}`.
    pub fn embed(&self, m: i64, n: i64) -> Cyclo12 {
        match self {
            LatticeKind::T244 => Cyclo12::from_ints([2 * m, 0, 0, 2 * n]),
            // √3 = 2ζ − ζ³, √3 ζ² = ζ + ζ³
            LatticeKind::T236 => Cyclo12::from_ints([0, 4 * m + 2 * n, 0, 2 * n - 2 * m]),
        }
    }

    /// Inverse of [`embed`](Self::embed), when `t` is a lattice point.
    pub fn coordinates(&self, t: Cyclo12) -> Option<(i64, i64)> {
        let [c0, c1, c2, c3] = t.0;
        let zero = Q::from_integer(0);
        let int = |x: Q| x.is_integer().then(|| x.to_integer());
        let (m, n) = match self {
            LatticeKind::T244 => {
                if c1 != zero || c2 != zero {
                    return None;
                }
                (int(c0 / 2)?, int(c3 / 2)?)
            }
            LatticeKind::T236 => {
                if c0 != zero || c2 != zero {
                    return None;
                }
                (int((c1 - c3) / 6)?, int((c1 + c3 * 2) / 6)?)
            }
        };
        (self.embed(m, n) == t).then_some((m, n))
    }

    /// The generators `a, b, c` acting on `ℂ`, with `abc = 1`.
    pub fn generators(&self) -> [EucIsometry; 3] {
        let zero = Cyclo12::zero();
        match self {
            LatticeKind::T244 => [
                EucIsometry::rotation_about(6, zero),
                EucIsometry::rotation_about(3, Cyclo12::integer(1)),
                EucIsometry::rotation_about(3, Cyclo12::zeta_pow(3)),
            ],
            LatticeKind::T236 => [
                EucIsometry::rotation_about(6, Cyclo12::from_ints([0, 2, 0, -1])),
                // 2ℓe^{iπ/6} = √3ℓ + ℓi
                EucIsometry::rotation_about(4, Cyclo12::from_ints([0, 2, 0, 0])),
                EucIsometry::rotation_about(2, zero),
            ],
        }
    }

    /// Relator exponents of `a, b, c`.
    pub fn signature(&self) -> (u32, u32, u32) {
        match self {
            LatticeKind::T244 => (2, 4, 4),
            LatticeKind::T236 => (2, 3, 6),
        }
    }

    /// Representative words for the three shortest lengths.
    pub fn named_words(&self) -> [&'static str; 3] {
        match self {
            LatticeKind::T244 => ["b²a", "b²ac²a", "(b²a)²"],
            LatticeKind::T236 => ["ac³", "ac⁴ac²", "(ac³)²"],
        }
    }

    /// Least `R` such that every vector with `max(|m|,|n|) > R` has form `> target`.
    ///
    /// `m²+n² ≥ max²` and `m²+mn+n² ≥ ¾ max²`.
    pub fn radius(&self, target: i64) -> i64 {
        let k = match self {
            LatticeKind::T244 => 4,
            LatticeKind::T236 => 9,
        };
        let mut r = 0;
        while k * (r + 1) * (r + 1) <= target {
            r += 1;
        }
        r
    }
}

pub fn evaluate_word(kind: LatticeKind, word: &Word) -> EucIsometry {
    let gens = kind.generators();
    word.letters().iter().fold(EucIsometry::identity(), |acc, &x| {
        let g = gens[x.unsigned_abs() as usize - 1];
        acc.compose(&if x > 0 { g } else { g.inverse() })
    })
}

pub fn evaluate_str(kind: LatticeKind, word: &str) -> Result<EucIsometry, WordError> {
    Ok(evaluate_word(kind, &Word::parse(word, 3)?))
}

/// The lattice vector of a translation word.
pub fn translation_vector(kind: LatticeKind, g: &EucIsometry) -> Option<LatticeVector> {
    if !g.is_translation() {
        return None;
    }
    let (m, n) = kind.coordinates(g.translation)?;
    Some(kind.vector(m, n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointGroupOrbit {
    pub representative: LatticeVector,
    pub members: Vec<(i64, i64)>,
    pub word: Option<String>,
}

/// All nonzero vectors with `form ≤ target`.
fn vectors_up_to(kind: LatticeKind, target: i64) -> Vec<LatticeVector> {
    let r = kind.radius(target);
    let mut out = Vec::new();
    for m in -r..=r {
        for n in -r..=r {
            let c = kind.form(m, n);
            if c > 0 && c <= target {
                out.push(kind.vector(m, n));
            }
        }
    }
    out
}

fn orbit_of(kind: LatticeKind, v: (i64, i64)) -> Vec<(i64, i64)> {
    let mut out = vec![v];
    let mut x = kind.rotate(v);
    while x != v {
        out.push(x);
        x = kind.rotate(x);
    }
    out.sort();
    out
}

fn orbits(kind: LatticeKind, vectors: &[LatticeVector]) -> Vec<PointGroupOrbit> {
    let words: Vec<(String, LatticeVector)> = kind
        .named_words()
        .iter()
        .filter_map(|w| {
            let g = evaluate_str(kind, w).ok()?;
            Some((w.to_string(), translation_vector(kind, &g)?))
        })
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for v in vectors {
        if seen.contains(&(v.m, v.n)) {
            continue;
        }
        let members = orbit_of(kind, (v.m, v.n));
        seen.extend(members.iter().copied());
        // the sector m > 0, n ≥ 0 meets each orbit exactly once
        let &(m, n) = members.iter().find(|(m, n)| *m > 0 && *n >= 0).expect("fundamental sector");
        let word = words.iter().find(|(_, w)| members.contains(&(w.m, w.n))).map(|(s, _)| s.clone());
        out.push(PointGroupOrbit { representative: kind.vector(m, n), members, word });
    }
    out.sort_by_key(|o| (o.representative.coef2, o.representative.m, o.representative.n));
    out
}

/// Point-group orbits of the vectors of squared length `coef2`.
pub fn attaining_orbits(kind: LatticeKind, coef2: i64) -> Vec<PointGroupOrbit> {
    let vs: Vec<LatticeVector> = vectors_up_to(kind, coef2).into_iter().filter(|v| v.coef2 == coef2).collect();
    orbits(kind, &vs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub coef2: i64,
    pub multiplicity: usize,
    pub orbits: Vec<PointGroupOrbit>,
}

/// The `count` smallest values of `L_n(Λ)²/ℓ²` with their orbits.
pub fn spectrum(kind: LatticeKind, count: usize) -> Vec<SpectrumEntry> {
    let mut target = kind.form(1, 0);
    loop {
        let mut by_len: BTreeMap<i64, Vec<LatticeVector>> = BTreeMap::new();
        for v in vectors_up_to(kind, target) {
            by_len.entry(v.coef2).or_default().push(v);
        }
        if by_len.len() >= count {
            return by_len
                .into_iter()
                .take(count)
                .map(|(coef2, vs)| SpectrumEntry { coef2, multiplicity: vs.len(), orbits: orbits(kind, &vs) })
                .collect();
        }
        target *= 2;
    }
}

/// Orbits with `|γ| < 2 L₁(Λ)`, i.e. `coef2 < 4 · min coef2`.
pub fn brenner_candidates(kind: LatticeKind) -> Vec<PointGroupOrbit> {
    let c1 = kind.form(1, 0);
    let vs: Vec<LatticeVector> = vectors_up_to(kind, 4 * c1 - 1);
    orbits(kind, &vs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_arithmetic() {
        let z = Cyclo12::zeta_pow(1);
        let mut p = Cyclo12::integer(1);
        for k in 0..24 {
            assert_eq!(p, Cyclo12::zeta_pow(k));
            p = p * z;
        }
        // √3² = 3 and i² = -1
        let s3 = Cyclo12::from_ints([0, 2, 0, -1]);
        assert_eq!(s3 * s3, Cyclo12::integer(3));
        assert_eq!(Cyclo12::zeta_pow(3) * Cyclo12::zeta_pow(3), Cyclo12::integer(-1));
    }

    #[test]
    fn generators_satisfy_relators() {
        for kind in [LatticeKind::T244, LatticeKind::T236] {
            let [a, b, c] = kind.generators();
            let (p, q, r) = kind.signature();
            let pow = |g: EucIsometry, n: u32| (0..n).fold(EucIsometry::identity(), |x, _| x.compose(&g));
            assert!(pow(a, p).is_identity());
            assert!(pow(b, q).is_identity());
            assert!(pow(c, r).is_identity());
            assert!(a.compose(&b).compose(&c).is_identity(), "{kind}");
            assert!(!pow(b, q - 1).is_identity());
        }
    }

    #[test]
    fn word_translations() {
        let t = |k, w| translation_vector(k, &evaluate_str(k, w).unwrap()).unwrap();
        let k = LatticeKind::T244;
        assert_eq!(t(k, "b²a"), k.vector(1, 0));
        assert_eq!(t(k, "c²a"), k.vector(0, 1));
        assert_eq!(t(k, "b²ac²a").coef2, 8);
        assert_eq!(t(k, "(b²a)²").coef2, 16);
        let k = LatticeKind::T236;
        assert_eq!(t(k, "ac³"), k.vector(1, 0));
        assert_eq!(t(k, "cac²"), k.vector(0, 1));
        assert_eq!(t(k, "ac⁴ac²").coef2, 36);
        assert_eq!(t(k, "(ac³)²").coef2, 48);
        assert!(translation_vector(k, &evaluate_str(k, "c").unwrap()).is_none());
    }

    #[test]
    fn spectra() {
        let c: Vec<i64> = spectrum(LatticeKind::T244, 3).iter().map(|e| e.coef2).collect();
        assert_eq!(c, vec![4, 8, 16]);
        let c: Vec<i64> = spectrum(LatticeKind::T236, 3).iter().map(|e| e.coef2).collect();
        assert_eq!(c, vec![12, 36, 48]);
        let first = &spectrum(LatticeKind::T244, 1)[0];
        assert_eq!(first.orbits.len(), 1);
        assert_eq!(first.orbits[0].members, vec![(-1, 0), (0, -1), (0, 1), (1, 0)]);
    }

    #[test]
    fn attaining() {
        let o = attaining_orbits(LatticeKind::T244, 8);
        assert_eq!(o.len(), 1);
        assert_eq!((o[0].representative.m, o[0].representative.n), (1, 1));
        assert_eq!(o[0].word.as_deref(), Some("b²ac²a"));
        let o = attaining_orbits(LatticeKind::T236, 36);
        assert_eq!(o.len(), 1);
        assert_eq!((o[0].representative.m, o[0].representative.n), (1, 1));
        assert_eq!(o[0].word.as_deref(), Some("ac⁴ac²"));
        assert!(attaining_orbits(LatticeKind::T244, 3).is_empty());
        // 100 = 4·25 = 4(5² + 0²) = 4(3² + 4²)
        assert_eq!(attaining_orbits(LatticeKind::T244, 100).len(), 3);
    }

    #[test]
    fn brenner() {
        let words = |k| brenner_candidates(k).into_iter().map(|o| o.word.unwrap()).collect::<Vec<_>>();
        assert_eq!(words(LatticeKind::T244), vec!["b²a", "b²ac²a"]);
        assert_eq!(words(LatticeKind::T236), vec!["ac³", "ac⁴ac²"]);
    }
}

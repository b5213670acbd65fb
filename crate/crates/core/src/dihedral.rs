//! Spherical dihedral orbifolds `O(q/p; d₁, d₂) = S³/Γ` with
//! `Γ = ⟨L(k₁/pd₂, k₂/pd₁), J⟩ ≅ D_{pd₁d₂}`, their normalizers and
//! orientation preserving isometry groups.

use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::group::{CayleyTable, FinGroup, GroupElement, GroupError, GroupType, QuotientError};
use crate::quat::{self, Angle, Isom3, QuatExt, QuatPair};
use crate::slopes::Slope;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DihedralError {
    #[error("dihedral orbifolds need a finite slope")]
    InfiniteSlope,
    #[error("d1 = {0} and d2 = {1} must be positive and coprime")]
    BadIndices(i64, i64),
    #[error("(k1, k2) = ({0}, {1}) violates the gcd/congruence condition")]
    BadK(i64, i64),
    #[error("the normalizer formula excludes {0}")]
    Excluded(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// `(q/p, d₁, d₂, k₁, k₂)` with `gcd(d₁,d₂) = gcd(pd₂,k₁) = gcd(pd₁,k₂) = 1`
/// and `k₂ ≡ q k₁ (mod p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DihedralParams {
    pub r: Slope,
    pub d1: i64,
    pub d2: i64,
    pub k1: i64,
    pub k2: i64,
}

fn check_indices(r: Slope, d1: i64, d2: i64) -> Result<(), DihedralError> {
    if r.is_infinite() {
        return Err(DihedralError::InfiniteSlope);
    }
    if d1 < 1 || d2 < 1 || d1.gcd(&d2) != 1 {
        return Err(DihedralError::BadIndices(d1, d2));
    }
    Ok(())
}

fn k_valid(q: i64, p: i64, d1: i64, d2: i64, k1: i64, k2: i64) -> bool {
    (p * d2).gcd(&k1) == 1 && (p * d1).gcd(&k2) == 1 && (k2 - q * k1).rem_euclid(p) == 0
}

impl DihedralParams {
    pub fn new(r: Slope, d1: i64, d2: i64, k1: i64, k2: i64) -> Result<Self, DihedralError> {
        check_indices(r, d1, d2)?;
        if !k_valid(r.numerator(), r.denominator(), d1, d2, k1, k2) {
            return Err(DihedralError::BadK(k1, k2));
        }
        Ok(DihedralParams { r, d1, d2, k1, k2 })
    }

    /// Parameters with the `(k₁, k₂)` chosen by [`solve_k`].
    pub fn from_slope(r: Slope, d1: i64, d2: i64) -> Result<Self, DihedralError> {
        let (k1, k2) = solve_k(r, d1, d2)?;
        Self::new(r, d1, d2, k1, k2)
    }

    pub fn p(&self) -> i64 {
        self.r.denominator()
    }

    pub fn q(&self) -> i64 {
        self.r.numerator().rem_euclid(self.p())
    }

    /// `n = pd₁d₂`, so that `Γ ≅ D_n`.
    pub fn n(&self) -> i64 {
        self.p() * self.d1 * self.d2
    }

    /// `p = 1` and `{d₁,d₂} = {1,2}`.
    pub fn is_trivial_theta(&self) -> bool {
        is_trivial_theta(self.r, self.d1, self.d2)
    }

    /// `f = L(k₁/pd₂, k₂/pd₁)`.
    pub fn f(&self) -> Isom3 {
        let p = self.p();
        Isom3::l(Angle::new(self.k1, p * self.d2), Angle::new(self.k2, p * self.d1))
    }
}

fn is_trivial_theta(r: Slope, d1: i64, d2: i64) -> bool {
    r.denominator() == 1 && d1.min(d2) == 1 && d1.max(d2) == 2
}

/// Least `(k₁, k₂)` in lexicographic order with `k₁ ∈ [1, pd₂]`,
/// `k₂ ∈ [1, p²d₁]` satisfying the gcd/congruence condition.
pub fn solve_k(r: Slope, d1: i64, d2: i64) -> Result<(i64, i64), DihedralError> {
    check_indices(r, d1, d2)?;
    let (p, q) = (r.denominator(), r.numerator());
    for k1 in 1..=p * d2 {
        if (p * d2).gcd(&k1) != 1 {
            continue;
        }
        // k₂ runs through the class of q·k₁ mod p
        let start = (q * k1).rem_euclid(p);
        let start = if start == 0 { p } else { start };
        let mut k2 = start;
        while k2 <= p * p * d1 {
            if (p * d1).gcd(&k2) == 1 {
                return Ok((k1, k2));
            }
            k2 += p;
        }
    }
    Err(DihedralError::Inconsistent(format!("no (k1, k2) for ({r}, {d1}, {d2})")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaCertificate {
    pub order: usize,
    pub f_order: usize,
    pub j_order: usize,
    /// `J g J⁻¹ = g⁻¹` for every `g ∈ ⟨f⟩`.
    pub inverts_rotations: bool,
}

impl GammaCertificate {
    pub fn holds_for(&self, n: i64) -> bool {
        let n = n as usize;
        self.order == 2 * n && self.f_order == n && self.j_order == 2 && self.inverts_rotations
    }
}

#[derive(Debug, Clone)]
pub struct Gamma {
    pub params: DihedralParams,
    pub group: FinGroup<Isom3>,
    pub certificate: GammaCertificate,
}

impl Gamma {
    pub fn recognize(&self) -> GroupType {
        quat::recognize(&self.group)
    }
}

pub fn gamma(params: &DihedralParams) -> Result<Gamma, DihedralError> {
    let n = params.n() as usize;
    let f = params.f();
    let j = Isom3::j();
    let group = quat::close(&[f, j], 4 * n)?;
    let f_order = f.order();
    let cyclic = quat::close(&[f], 4 * n)?;
    let inverts_rotations = cyclic.elements().iter().all(|g| g.conj_by(&j) == g.inv());
    let certificate = GammaCertificate { order: group.order(), f_order, j_order: j.order(), inverts_rotations };
    Ok(Gamma { params: *params, group, certificate })
}

/// `N(Γ) = ⟨L(k₁/2pd₂, k₂/2pd₁), L(½,0), L(0,½), J⟩`.
pub fn normalizer_generators(params: &DihedralParams) -> Result<[Isom3; 4], DihedralError> {
    if params.d1 == 1 && params.d2 == 1 {
        return Err(DihedralError::Excluded("(d1, d2) = (1, 1)".into()));
    }
    if params.is_trivial_theta() {
        return Err(DihedralError::Excluded("the trivial theta-orbifold".into()));
    }
    let p = params.p();
    Ok([
        Isom3::l(Angle::new(params.k1, 2 * p * params.d2), Angle::new(params.k2, 2 * p * params.d1)),
        Isom3::l_frac(1, 2, 0, 1),
        Isom3::l_frac(0, 1, 1, 2),
        Isom3::j(),
    ])
}

pub fn normalizer(params: &DihedralParams) -> Result<FinGroup<Isom3>, DihedralError> {
    let gens = normalizer_generators(params)?;
    let g = gamma(params)?;
    if let Some(bad) = gens.iter().find(|x| !g.group.is_normalized_by(x)) {
        return Err(DihedralError::Inconsistent(format!("{bad} does not normalize Gamma")));
    }
    Ok(quat::close(&gens, 16 * params.n() as usize)?)
}

/// `N(Γ)/Γ` as a coset table.
pub fn normalizer_quotient(params: &DihedralParams) -> Result<CayleyTable, DihedralError> {
    let g = gamma(params)?;
    let n = normalizer(params)?;
    Ok(n.quotient(&g.group)?.0)
}

/// Isomorphism types of `Isom⁺(O(q/p; d₁, d₂))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsomGroupType {
    Z2Squared,
    D4,
    Z2Cubed,
    D3xZ2,
    CircleByZ2,
    CircleByZ2Squared,
    TorusByZ2,
    TorusByZ2Squared,
}

impl IsomGroupType {
    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            IsomGroupType::Z2Squared => Some(4),
            IsomGroupType::D4 => Some(8),
            IsomGroupType::Z2Cubed => Some(8),
            IsomGroupType::D3xZ2 => Some(12),
            _ => None,
        }
    }

    /// The matching abstract type for the finite cases.
    pub fn group_type(&self) -> Option<GroupType> {
        match self {
            IsomGroupType::Z2Squared => Some(GroupType::ElementaryAbelian2(2)),
            IsomGroupType::D4 => Some(GroupType::Dihedral(4)),
            IsomGroupType::Z2Cubed => Some(GroupType::ElementaryAbelian2(3)),
            IsomGroupType::D3xZ2 => Some(GroupType::D3xZ2),
            _ => None,
        }
    }
}

impl fmt::Display for IsomGroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsomGroupType::Z2Squared => "(Z2)^2",
            IsomGroupType::D4 => "D_4",
            IsomGroupType::Z2Cubed => "(Z2)^3",
            IsomGroupType::D3xZ2 => "D3xZ2",
            IsomGroupType::CircleByZ2 => "S1:Z2",
            IsomGroupType::CircleByZ2Squared => "S1:(Z2)^2",
            IsomGroupType::TorusByZ2 => "(S1xS1):Z2",
            IsomGroupType::TorusByZ2Squared => "(S1xS1):(Z2)^2",
        })
    }
}

impl Serialize for IsomGroupType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone)]
pub struct IsomPlus {
    pub tag: IsomGroupType,
    /// The explicit quotient, when it was computed.
    pub quotient: Option<CayleyTable>,
}

/// `Isom⁺` of the `π`-orbifold `O(q/p; 1, 1)` by congruences on `q`.
pub fn isom_plus_pi_orbifold(r: Slope) -> Result<IsomGroupType, DihedralError> {
    if r.is_infinite() {
        return Err(DihedralError::InfiniteSlope);
    }
    let p = r.denominator();
    let q = r.numerator().rem_euclid(p);
    let pm_one = (q - 1).rem_euclid(p) == 0 || (q + 1).rem_euclid(p) == 0;
    Ok(if !pm_one {
        if (q * q - 1).rem_euclid(p) != 0 {
            IsomGroupType::Z2Squared
        } else if p % 2 == 1 {
            IsomGroupType::D4
        } else if (q * q).rem_euclid(2 * p) == 1 {
            IsomGroupType::Z2Cubed
        } else {
            debug_assert_eq!((q * q).rem_euclid(2 * p), p + 1);
            IsomGroupType::D4
        }
    } else {
        match p {
            1 => IsomGroupType::TorusByZ2,
            2 => IsomGroupType::TorusByZ2Squared,
            _ if p % 2 == 1 => IsomGroupType::CircleByZ2,
            _ => IsomGroupType::CircleByZ2Squared,
        }
    })
}

/// `Isom⁺(O(q/p; d₁, d₂))`. For `(d₁,d₂) ≠ (1,1)` the answer is cross-checked
/// against the explicit quotient `N(Γ)/Γ` (or its exceptional counterpart).
pub fn isom_plus(r: Slope, d1: i64, d2: i64) -> Result<IsomPlus, DihedralError> {
    check_indices(r, d1, d2)?;
    if d1 == 1 && d2 == 1 {
        return Ok(IsomPlus { tag: isom_plus_pi_orbifold(r)?, quotient: None });
    }
    if is_trivial_theta(r, d1, d2) {
        let ex = exceptional_isom()?;
        return Ok(IsomPlus { tag: IsomGroupType::D3xZ2, quotient: Some(ex.quotient) });
    }
    let params = DihedralParams::from_slope(r, d1, d2)?;
    let table = normalizer_quotient(&params)?;
    let found = table.recognize();
    if !found.is_isomorphic_to(&GroupType::ElementaryAbelian2(2)) {
        return Err(DihedralError::Inconsistent(format!("N(Gamma)/Gamma is {found}, expected (Z2)^2")));
    }
    Ok(IsomPlus { tag: IsomGroupType::Z2Squared, quotient: Some(table) })
}

/// The trivial θ-orbifold computed in `S³ × S³`.
#[derive(Debug, Clone)]
pub struct ExceptionalIsom {
    /// `|Γ̃| = 8` and its image in `Isom⁺(S³)`.
    pub gamma_tilde_order: usize,
    pub gamma_image_order: usize,
    /// `N(Γ̃) = {(q, ±q) : q ∈ O*}`.
    pub normalizer_order: usize,
    pub normalizer_image_order: usize,
    /// Number of pairs in `O* × O*` normalizing `Γ̃`, found by brute force.
    pub brute_force_order: usize,
    /// Whether `J₁ = (1, j)` normalizes `Γ̃`.
    pub j1_normalizes: bool,
    pub quotient: CayleyTable,
    pub recognized: GroupType,
    pub is_d3_times_z2: bool,
}

/// Pairs `(a, b) ∈ O* × O*` with `(a,b) Γ̃ (a,b)⁻¹ = Γ̃`.
///
/// Each projection of `N(Γ̃)` normalizes `pr(Γ̃) = Q₈`, whose normalizer in
/// `S³` is `O*`, so this is all of `N(Γ̃)`.
pub fn exceptional_normalizer_brute_force(gamma_tilde: &FinGroup<QuatPair>) -> Vec<QuatPair> {
    let o = quat::binary_octahedral();
    let elems = o.elements();
    elems
        .par_iter()
        .flat_map_iter(|a| {
            elems
                .iter()
                .map(move |b| QuatPair(*a, *b))
                .filter(|x| gamma_tilde.is_normalized_by(x))
        })
        .collect()
}

pub fn exceptional_isom() -> Result<ExceptionalIsom, DihedralError> {
    let one = QuatPair::diagonal(QuatExt::one());
    let gamma_tilde = FinGroup::close(
        &[QuatPair::diagonal(QuatExt::i()), QuatPair::diagonal(QuatExt::j())],
        one,
        8,
    )?;
    let o = quat::binary_octahedral();
    let mut gens: Vec<QuatPair> = o.elements().iter().map(|q| QuatPair::diagonal(*q)).collect();
    gens.push(QuatPair(QuatExt::one(), QuatExt::one().neg()));
    let n = FinGroup::close(&gens, one, 96)?;
    if let Some(bad) = n.elements().iter().find(|x| !gamma_tilde.is_normalized_by(x)) {
        return Err(DihedralError::Inconsistent(format!("{:?} does not normalize the lift", bad)));
    }
    let brute = exceptional_normalizer_brute_force(&gamma_tilde);
    if brute.len() != n.order() || !brute.iter().all(|x| n.contains(x)) {
        return Err(DihedralError::Inconsistent(format!(
            "brute-force normalizer has {} elements, closure has {}",
            brute.len(),
            n.order()
        )));
    }
    let j1 = QuatPair(QuatExt::one(), QuatExt::j());
    let image = |g: &FinGroup<QuatPair>| {
        FinGroup::from_elements(g.elements().iter().map(|x| x.to_isom()).collect()).order()
    };
    let (quotient, _) = n.quotient(&gamma_tilde)?;
    let recognized = quotient.recognize();
    let is_d3_times_z2 = quotient.is_d3_times_z2();
    Ok(ExceptionalIsom {
        gamma_tilde_order: gamma_tilde.order(),
        gamma_image_order: image(&gamma_tilde),
        normalizer_order: n.order(),
        normalizer_image_order: image(&n),
        brute_force_order: brute.len(),
        j1_normalizes: gamma_tilde.is_normalized_by(&j1),
        quotient,
        recognized,
        is_d3_times_z2,
    })
}

/// Whether `O(a)` and `O(b)` are isomorphic as oriented orbifolds.
pub fn same_oriented(a: &DihedralParams, b: &DihedralParams) -> bool {
    let p = a.p();
    if p != b.p() || a.n() != b.n() {
        return false;
    }
    if a.n() == 2 {
        // D₂ has three index-2 cyclic subgroups
        let theta = |x: &DihedralParams| (x.d1.min(x.d2), x.d1.max(x.d2)) == (1, 2);
        let unit = |x: &DihedralParams| x.d1 == 1 && x.d2 == 1;
        return (p == 1 && theta(a) && theta(b)) || (p == 2 && unit(a) && unit(b));
    }
    let (q, q2) = (a.q(), b.q());
    let same = (q - q2).rem_euclid(p) == 0 && (a.d1, a.d2) == (b.d1, b.d2);
    let inverse = (q * q2 - 1).rem_euclid(p) == 0 && (a.d1, a.d2) == (b.d2, b.d1);
    same || inverse
}

/// One parameter point of the exhaustive sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepPoint {
    pub params: DihedralParams,
    pub certificate: GammaCertificate,
    pub gamma_type: GroupType,
    pub normalizer_order: Option<usize>,
    pub quotient_type: Option<GroupType>,
    /// Every nonidentity coset squares to the identity coset.
    pub quotient_involutive: Option<bool>,
}

impl SweepPoint {
    pub fn ok(&self) -> bool {
        let n = self.params.n();
        let gamma_ok = self.certificate.holds_for(n)
            && self.gamma_type.is_isomorphic_to(&GroupType::Dihedral(n as usize));
        let quotient_ok = match (self.normalizer_order, self.quotient_type, self.quotient_involutive) {
            (None, None, None) => true,
            (Some(no), Some(t), Some(inv)) => {
                no == 8 * n as usize && t.is_isomorphic_to(&GroupType::ElementaryAbelian2(2)) && inv
            }
            _ => false,
        };
        gamma_ok && quotient_ok
    }
}

/// Slopes `q/p` with `p ≤ max_p`, `0 ≤ q < p`, and coprime `d₁, d₂ ≤ max_d`.
pub fn sweep_domain(max_p: i64, max_d: i64) -> Vec<(Slope, i64, i64)> {
    let mut out = Vec::new();
    for p in 1..=max_p {
        for q in 0..p {
            if q.gcd(&p) != 1 {
                continue;
            }
            let r = Slope::new(q, p).expect("p ≥ 1");
            for d1 in 1..=max_d {
                for d2 in 1..=max_d {
                    if d1.gcd(&d2) == 1 {
                        out.push((r, d1, d2));
                    }
                }
            }
        }
    }
    out
}

pub fn sweep_point(r: Slope, d1: i64, d2: i64) -> Result<SweepPoint, DihedralError> {
    let params = DihedralParams::from_slope(r, d1, d2)?;
    let g = gamma(&params)?;
    let gamma_type = g.recognize();
    let (normalizer_order, quotient_type, quotient_involutive) = match normalizer(&params) {
        Ok(n) => {
            let (t, _) = n.quotient(&g.group)?;
            let inv = (0..t.order()).all(|x| t.mul(x, x) == t.identity());
            (Some(n.order()), Some(t.recognize()), Some(inv))
        }
        Err(DihedralError::Excluded(_)) => (None, None, None),
        Err(e) => return Err(e),
    };
    Ok(SweepPoint { params, certificate: g.certificate, gamma_type, normalizer_order, quotient_type, quotient_involutive })
}

pub fn sweep(max_p: i64, max_d: i64) -> Result<Vec<SweepPoint>, DihedralError> {
    sweep_domain(max_p, max_d).into_par_iter().map(|(r, d1, d2)| sweep_point(r, d1, d2)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(q: i64, p: i64) -> Slope {
        Slope::new(q, p).unwrap()
    }

    #[test]
    fn solve_k_examples() {
        assert_eq!(solve_k(s(1, 2), 1, 1).unwrap(), (1, 1));
        assert_eq!(solve_k(s(1, 3), 1, 2).unwrap(), (1, 1));
        assert_eq!(solve_k(s(2, 5), 2, 3).unwrap(), (1, 7));
        assert_eq!(solve_k(s(0, 1), 1, 2).unwrap(), (1, 1));
        assert!(matches!(solve_k(s(1, 3), 2, 4), Err(DihedralError::BadIndices(2, 4))));
        assert!(matches!(solve_k(Slope::INFINITY, 1, 1), Err(DihedralError::InfiniteSlope)));
    }

    #[test]
    fn gamma_examples() {
        let g = gamma(&DihedralParams::from_slope(s(1, 2), 1, 1).unwrap()).unwrap();
        assert_eq!(g.group.order(), 4);
        assert_eq!(g.recognize(), GroupType::ElementaryAbelian2(2));
        let g = gamma(&DihedralParams::new(s(1, 3), 1, 2, 1, 1).unwrap()).unwrap();
        assert_eq!(g.group.order(), 12);
        assert!(g.certificate.holds_for(6));
        assert_eq!(g.recognize(), GroupType::Dihedral(6));
        let g = gamma(&DihedralParams::new(s(0, 1), 1, 2, 1, 1).unwrap()).unwrap();
        assert_eq!(g.group.order(), 4);
    }

    #[test]
    fn bad_k_is_rejected() {
        assert_eq!(DihedralParams::new(s(1, 3), 1, 2, 1, 2), Err(DihedralError::BadK(1, 2)));
        assert_eq!(DihedralParams::new(s(1, 3), 1, 2, 3, 1), Err(DihedralError::BadK(3, 1)));
    }

    #[test]
    fn normalizer_examples() {
        let params = DihedralParams::new(s(1, 3), 1, 2, 1, 1).unwrap();
        assert_eq!(normalizer(&params).unwrap().order(), 48);
        assert_eq!(normalizer_quotient(&params).unwrap().order(), 4);
        let params = DihedralParams::new(s(0, 1), 1, 3, 1, 1).unwrap();
        assert_eq!(normalizer_quotient(&params).unwrap().order(), 4);
        let theta = DihedralParams::from_slope(s(0, 1), 2, 1).unwrap();
        assert!(matches!(normalizer(&theta), Err(DihedralError::Excluded(_))));
        let pi = DihedralParams::from_slope(s(2, 7), 1, 1).unwrap();
        assert!(matches!(normalizer(&pi), Err(DihedralError::Excluded(_))));
    }

    #[test]
    fn isom_plus_examples() {
        let x = isom_plus(s(2, 7), 1, 3).unwrap();
        assert_eq!(x.tag, IsomGroupType::Z2Squared);
        assert_eq!(x.quotient.unwrap().order(), 4);
        assert_eq!(isom_plus(s(2, 7), 1, 1).unwrap().tag, IsomGroupType::Z2Squared);
        assert!(isom_plus(s(2, 7), 1, 1).unwrap().quotient.is_none());
        let x = isom_plus(s(0, 1), 1, 2).unwrap();
        assert_eq!(x.tag, IsomGroupType::D3xZ2);
        assert_eq!(x.quotient.unwrap().order(), 12);
    }

    #[test]
    fn pi_orbifold_cases() {
        use IsomGroupType::*;
        // q² ≡ 1 (mod p) with q ≢ ±1
        assert_eq!(isom_plus_pi_orbifold(s(4, 15)).unwrap(), D4);
        // p = 8, q = 3: 9 ≡ 9 = p + 1 (mod 16)
        assert_eq!(isom_plus_pi_orbifold(s(3, 8)).unwrap(), D4);
        // p = 12, q = 5: 25 ≡ 1 (mod 24)
        assert_eq!(isom_plus_pi_orbifold(s(5, 12)).unwrap(), Z2Cubed);
        assert_eq!(isom_plus_pi_orbifold(s(1, 5)).unwrap(), CircleByZ2);
        assert_eq!(isom_plus_pi_orbifold(s(3, 4)).unwrap(), CircleByZ2Squared);
        assert_eq!(isom_plus_pi_orbifold(s(1, 2)).unwrap(), TorusByZ2Squared);
        assert_eq!(isom_plus_pi_orbifold(s(0, 1)).unwrap(), TorusByZ2);
        assert_eq!(TorusByZ2.to_string(), "(S1xS1):Z2");
        assert!(!CircleByZ2.is_finite());
    }

    #[test]
    fn exceptional() {
        let ex = exceptional_isom().unwrap();
        assert_eq!(ex.gamma_tilde_order, 8);
        assert_eq!(ex.gamma_image_order, 4);
        assert_eq!(ex.normalizer_order, 96);
        assert_eq!(ex.normalizer_image_order, 48);
        assert_eq!(ex.brute_force_order, 96);
        assert!(!ex.j1_normalizes);
        assert_eq!(ex.quotient.order(), 12);
        assert!(ex.is_d3_times_z2);
        assert!(ex.recognized.is_isomorphic_to(&GroupType::D3xZ2));
    }

    #[test]
    fn same_oriented_examples() {
        let a = DihedralParams::from_slope(s(2, 7), 2, 3).unwrap();
        let b = DihedralParams::from_slope(s(4, 7), 3, 2).unwrap();
        let c = DihedralParams::from_slope(s(2, 7), 3, 2).unwrap();
        assert!(same_oriented(&a, &b));
        assert!(!same_oriented(&a, &c));
        assert!(same_oriented(&a, &a));
        let t1 = DihedralParams::from_slope(s(0, 1), 1, 2).unwrap();
        let t2 = DihedralParams::from_slope(s(0, 1), 2, 1).unwrap();
        assert!(same_oriented(&t1, &t2));
    }
}

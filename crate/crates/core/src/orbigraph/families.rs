use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Ambient, Edge, GraphError, Vertex, Weight, WeightedGraphOrbifold};
use crate::slopes::{mod_inverse, Slope, SlopeError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error(transparent)]
    Slope(#[from] SlopeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("Heckoid index n = {0} must satisfy 2n >= 3")]
    IndexTooSmall(HeckoidIndex),
    #[error("cannot parse Heckoid index {0:?}: expected an integer or m/2")]
    BadIndex(String),
    #[error("d+ = {0} and d- = {1} must be positive and coprime")]
    NotCoprime(u32, u32),
    #[error("custom graphs have no canonical key")]
    Custom,
}

/// The orbifold families named in the classification.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Family {
    /// The link exterior `E(K(r))`, all of `K(r)` parabolic.
    #[serde(rename = "E")]
    Exterior { r: Slope },
    M0 { r: Slope, n: u32 },
    M1 { r: Slope, m: u32 },
    M2 { r: Slope, m: u32 },
    #[serde(rename = "O")]
    Dihedral { r: Slope, d_plus: u32, d_minus: u32 },
    #[serde(rename = "O(inf)")]
    OInfinity,
    #[serde(rename = "O(RP3,O)")]
    ORp3,
    #[serde(rename = "D2(2,2)xI")]
    PillowTimesI,
    #[serde(rename = "custom")]
    #[default]
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParedOrbifoldDescriptor {
    #[serde(flatten)]
    pub graph: WeightedGraphOrbifold,
    #[serde(default)]
    pub family: Family,
    #[serde(default)]
    pub parabolic_edges: Vec<String>,
}

impl ParedOrbifoldDescriptor {
    pub fn new(graph: WeightedGraphOrbifold, family: Family) -> Self {
        let parabolic_edges = graph.parabolic_edges();
        ParedOrbifoldDescriptor { graph, family, parabolic_edges }
    }
}

/// A Heckoid index `n ∈ ½ℕ`, stored as `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HeckoidIndex {
    pub twice: u32,
}

impl HeckoidIndex {
    pub fn integer(n: u32) -> Self {
        HeckoidIndex { twice: 2 * n }
    }

    pub fn half(m: u32) -> Self {
        HeckoidIndex { twice: m }
    }
}

impl fmt::Display for HeckoidIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HeckoidIndex {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::BadIndex(s.to_string());
        let t = s.trim();
        if let Some(m) = t.strip_suffix("/2") {
            return m.trim().parse().map(HeckoidIndex::half).map_err(|_| bad());
        }
        if let Some((a, b)) = t.split_once('.') {
            let n: u32 = a.parse().map_err(|_| bad())?;
            return match b {
                "5" => Ok(HeckoidIndex::half(2 * n + 1)),
                "0" => Ok(HeckoidIndex::integer(n)),
                _ => Err(bad()),
            };
        }
        t.parse().map(HeckoidIndex::integer).map_err(|_| bad())
    }
}

impl Serialize for HeckoidIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HeckoidIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// `K(r) ∪ τ₊ ∪ τ₋` with `τ₊ = u1u2`, `τ₋ = l1l2` and the four arcs of
/// `K(r)` named by the corners `SW, NW, SE, NE`.
///
/// `p` odd, `q` even: SW = u1l1, NW = u1l2, SE = u2l1, NE = u2l2.
/// `p` odd, `q` odd: SE and NE trade lower ends.
/// `p` even: SW, NW join u1 to l1 and SE, NE join u2 to l2 (one per component).
fn two_bridge_graph(r: Slope, corners: [Weight; 4], tau_plus: Weight, tau_minus: Weight) -> Result<WeightedGraphOrbifold, FamilyError> {
    if r.is_infinite() {
        return Err(SlopeError::Infinite.into());
    }
    let (q, p) = (r.numerator(), r.denominator());
    let ends: [(&str, &str); 4] = if p % 2 == 0 {
        [("u1", "l1"), ("u1", "l1"), ("u2", "l2"), ("u2", "l2")]
    } else if q.is_even() {
        [("u1", "l1"), ("u1", "l2"), ("u2", "l1"), ("u2", "l2")]
    } else {
        [("u1", "l1"), ("u1", "l2"), ("u2", "l2"), ("u2", "l1")]
    };
    let mut edges: Vec<Edge> = ["SW", "NW", "SE", "NE"]
        .iter()
        .zip(ends)
        .zip(corners)
        .map(|((id, (a, b)), w)| Edge::new(id, a, b, w))
        .collect();
    edges.push(Edge::new("tau+", "u1", "u2", tau_plus));
    edges.push(Edge::new("tau-", "l1", "l2", tau_minus));
    let vertices = ["u1", "u2", "l1", "l2"].iter().map(|v| Vertex::interior(v)).collect();
    Ok(WeightedGraphOrbifold::new(Ambient::S3, vertices, edges).elide()?)
}

const ONE: Weight = Weight::Finite(1);
const TWO: Weight = Weight::TWO;
const INF: Weight = Weight::Infinite;

/// `E(K(r))`: every edge of `K(r)` has weight `∞`.
pub fn make_link_exterior(r: Slope) -> Result<ParedOrbifoldDescriptor, FamilyError> {
    let graph = if r.is_infinite() {
        circles(Ambient::S3, 2, INF)
    } else {
        two_bridge_graph(r, [INF; 4], ONE, ONE)?
    };
    Ok(ParedOrbifoldDescriptor::new(graph, Family::Exterior { r }))
}

/// The Heckoid orbifold `S(r; n)` as `M₀(r;n)`, `M₁(r̂;m)` or `M₂(r̂;m)`.
pub fn make_heckoid(r: Slope, n: HeckoidIndex) -> Result<ParedOrbifoldDescriptor, FamilyError> {
    if n.twice < 3 {
        return Err(FamilyError::IndexTooSmall(n));
    }
    if r.is_infinite() {
        return Err(SlopeError::Infinite.into());
    }
    let w = |k: u32| Weight::Finite(k);
    if n.twice.is_multiple_of(2) {
        let k = n.twice / 2;
        let graph = two_bridge_graph(r, [INF; 4], ONE, w(k))?;
        return Ok(ParedOrbifoldDescriptor::new(graph, Family::M0 { r, n: k }));
    }
    let m = n.twice;
    let rh = r.hat()?;
    if r.denominator() % 2 == 1 {
        // J₁ = SW ∪ NW and J₂ = SE ∪ NE, the arcs cut off by τ₋
        let graph = two_bridge_graph(rh, [INF, INF, TWO, TWO], ONE, w(m))?;
        return Ok(ParedOrbifoldDescriptor::new(graph, Family::M1 { r: rh, m }));
    }
    let (q, p) = (rh.numerator(), rh.denominator());
    let corners = if p % 2 == 0 {
        // J₁ = SW ∪ SE, J₂ = NW ∪ NE, each preserved by the vertical involution
        [INF, TWO, INF, TWO]
    } else if q.is_even() {
        // J₁ = SW ∪ NE, J₂ = NW ∪ SE
        [INF, TWO, TWO, INF]
    } else {
        // J₁ = SW ∪ SE, J₂ = NW ∪ NE
        [INF, TWO, INF, TWO]
    };
    let graph = two_bridge_graph(rh, corners, TWO, w(m))?;
    Ok(ParedOrbifoldDescriptor::new(graph, Family::M2 { r: rh, m }))
}

/// `O(r; d₊, d₋)`: `K(r)` of weight 2, `τ±` of weight `d±`.
pub fn make_dihedral(r: Slope, d_plus: u32, d_minus: u32) -> Result<ParedOrbifoldDescriptor, FamilyError> {
    if d_plus == 0 || d_minus == 0 || d_plus.gcd(&d_minus) != 1 {
        return Err(FamilyError::NotCoprime(d_plus, d_minus));
    }
    let graph = two_bridge_graph(r, [TWO; 4], Weight::Finite(d_plus), Weight::Finite(d_minus))?;
    Ok(ParedOrbifoldDescriptor::new(graph, Family::Dihedral { r, d_plus, d_minus }))
}

fn circles(ambient: Ambient, k: usize, w: Weight) -> WeightedGraphOrbifold {
    let vertices = (1..=k).map(|i| Vertex::interior(&format!("c{i}"))).collect();
    let edges = (1..=k)
        .map(|i| {
            let c = format!("c{i}");
            Edge::new(&format!("K{i}"), &c, &c, w)
        })
        .collect();
    WeightedGraphOrbifold::new(ambient, vertices, edges)
}

/// `O(∞)`, `O(RP³, O)` and `D²(2,2) × I`.
pub fn templates() -> Vec<ParedOrbifoldDescriptor> {
    let pillow = WeightedGraphOrbifold::new(
        Ambient::BallPair,
        (1..=4).map(|i| Vertex::puncture(&format!("b{i}"), 0)).collect(),
        vec![Edge::new("s1", "b1", "b2", TWO), Edge::new("s2", "b3", "b4", TWO)],
    );
    vec![
        ParedOrbifoldDescriptor::new(circles(Ambient::S3, 2, TWO), Family::OInfinity),
        ParedOrbifoldDescriptor::new(circles(Ambient::RP3, 1, TWO), Family::ORp3),
        ParedOrbifoldDescriptor::new(pillow, Family::PillowTimesI),
    ]
}

fn residue(r: Slope) -> Result<(i64, i64), FamilyError> {
    if r.is_infinite() {
        return Err(SlopeError::Infinite.into());
    }
    let p = r.denominator();
    Ok((r.numerator().mod_floor(&p), p))
}

/// A key constant on the identification moves of each family:
/// `q ↦ q + p` everywhere (so `M₂(q/p) ≡ M₂((p+q)/p)`), and for `O(q/p; d₊, d₋)`
/// also `(q, d₊, d₋) ↦ (q⁻¹, d₋, d₊)`.
pub fn canonical_key(d: &ParedOrbifoldDescriptor) -> Result<String, FamilyError> {
    Ok(match &d.family {
        Family::Exterior { r } => format!("E({})", r.preserving_canonical()),
        Family::M0 { r, n } => {
            let (q, p) = residue(*r)?;
            format!("M0({q}/{p};{n})")
        }
        Family::M1 { r, m } => {
            let (q, p) = residue(*r)?;
            format!("M1({q}/{p};{m})")
        }
        Family::M2 { r, m } => {
            let (q, p) = residue(*r)?;
            format!("M2({q}/{p};{m})")
        }
        Family::Dihedral { r, d_plus, d_minus } => {
            let (q, p) = residue(*r)?;
            let qi = mod_inverse(q, p).expect("reduced slope");
            let (q, a, b) = (q, *d_plus, *d_minus).min((qi, *d_minus, *d_plus));
            format!("O({q}/{p};{a},{b})")
        }
        Family::OInfinity => "O(inf)".to_string(),
        Family::ORp3 => "O(RP3,O)".to_string(),
        Family::PillowTimesI => "D2(2,2)xI".to_string(),
        Family::Custom => return Err(FamilyError::Custom),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbigraph::{check_sc, is_isomorphic};

    fn s(q: i64, p: i64) -> Slope {
        Slope::new(q, p).unwrap()
    }

    #[test]
    fn heckoid_dispatch() {
        let d = make_heckoid(s(3, 5), "5/2".parse().unwrap()).unwrap();
        assert_eq!(d.family, Family::M1 { r: s(4, 5), m: 5 });
        let d = make_heckoid(s(3, 5), "3".parse().unwrap()).unwrap();
        assert_eq!(d.family, Family::M0 { r: s(3, 5), n: 3 });
        let d = make_heckoid(s(3, 8), HeckoidIndex::half(5)).unwrap();
        assert_eq!(d.family, Family::M2 { r: s(3, 4), m: 5 });
        assert!(matches!(make_heckoid(s(3, 5), HeckoidIndex::integer(1)), Err(FamilyError::IndexTooSmall(_))));
        assert_eq!("2.5".parse::<HeckoidIndex>().unwrap(), HeckoidIndex::half(5));
        assert!("7/3".parse::<HeckoidIndex>().is_err());
    }

    #[test]
    fn m1_shape() {
        // J₁ and J₂ each smooth to one arc between the ends of τ₋
        let d = make_heckoid(s(3, 5), HeckoidIndex::half(5)).unwrap();
        let g = &d.graph;
        assert_eq!(g.vertices.len(), 2);
        let mut ws: Vec<Weight> = g.edges.iter().map(|e| e.weight).collect();
        ws.sort();
        assert_eq!(ws, vec![TWO, Weight::Finite(5), INF]);
        assert_eq!(d.parabolic_edges.len(), 1);
    }

    #[test]
    fn m2_shape() {
        for r in [s(3, 4), s(1, 3), s(5, 3), s(1, 1)] {
            let d = make_heckoid(Slope::new(r.numerator(), 2 * r.denominator()).unwrap(), HeckoidIndex::half(3));
            let g = &d.unwrap().graph;
            assert_eq!(g.vertices.len(), 4);
            // every vertex meets one ∞ arc and one weight-2 arc
            for v in &g.vertices {
                let mut germs = g.germs(&v.id);
                germs.sort();
                assert!(germs.contains(&INF) && germs.iter().filter(|w| **w == TWO).count() >= 1);
            }
        }
    }

    #[test]
    fn dihedral_shapes() {
        let pi = make_dihedral(s(3, 5), 1, 1).unwrap().graph;
        assert_eq!(pi.edges.len(), 1);
        assert!(pi.edges[0].is_loop());
        let theta = make_dihedral(s(0, 1), 1, 2).unwrap().graph;
        assert_eq!((theta.vertices.len(), theta.edges.len()), (2, 3));
        assert!(theta.edges.iter().all(|e| e.weight == TWO));
        let full = make_dihedral(s(1, 3), 2, 3).unwrap().graph;
        assert_eq!(full.edges.len(), 6);
        assert_eq!(full.edges.iter().filter(|e| e.weight == TWO).count(), 5);
        assert!(matches!(make_dihedral(s(1, 3), 2, 4), Err(FamilyError::NotCoprime(2, 4))));
    }

    #[test]
    fn keys() {
        let k = |d: Result<ParedOrbifoldDescriptor, FamilyError>| canonical_key(&d.unwrap()).unwrap();
        let m2 = |r| Ok(ParedOrbifoldDescriptor::new(make_link_exterior(r).unwrap().graph, Family::M2 { r, m: 5 }));
        assert_eq!(k(m2(s(3, 4))), k(m2(s(7, 4))));
        assert_eq!(k(m2(s(3, 4))), "M2(3/4;5)");
        assert_eq!(k(make_dihedral(s(2, 7), 2, 3)), k(make_dihedral(s(4, 7), 3, 2)));
        assert_ne!(k(make_dihedral(s(2, 7), 2, 3)), k(make_dihedral(s(2, 7), 3, 2)));
        assert_eq!(k(make_heckoid(s(3, 5), HeckoidIndex::integer(3))), "M0(3/5;3)");
        assert_eq!(k(make_link_exterior(s(3, 5))), "E(2/5)");
        let custom = ParedOrbifoldDescriptor::new(make_link_exterior(s(1, 3)).unwrap().graph, Family::Custom);
        assert_eq!(canonical_key(&custom), Err(FamilyError::Custom));
    }

    #[test]
    fn templates_pass_sc() {
        let ts = templates();
        assert_eq!(ts.len(), 3);
        for t in &ts {
            assert!(check_sc(&t.graph).unwrap().is_empty());
            assert!(canonical_key(t).is_ok());
        }
        assert_eq!(ts[1].graph.ambient, Ambient::RP3);
        assert!(!is_isomorphic(&ts[0].graph, &ts[1].graph));
    }

    #[test]
    fn descriptor_json() {
        let d = make_dihedral(s(1, 3), 2, 3).unwrap();
        let text = serde_json::to_string(&d).unwrap();
        assert!(text.contains("\"kind\":\"O\""));
        let back: ParedOrbifoldDescriptor = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
        let bare = r#"{"ambient":"S3","vertices":[],"edges":[]}"#;
        let d: ParedOrbifoldDescriptor = serde_json::from_str(bare).unwrap();
        assert_eq!(d.family, Family::Custom);
    }
}

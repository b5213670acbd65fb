//! Orbifolds given by weighted graphs `(W, Σ, w)`.
//!
//! A graph lives in an ambient 3-manifold; boundary vertices are punctures of
//! boundary spheres (grouped by a sphere number), interior vertices are
//! trivalent, or 4-valent with all germs of weight 2. A vertex whose only
//! edge is a loop marks a circle component of `Σ`.

mod analysis;
mod families;
mod iso;

pub use analysis::{
    check_sc, h1_z2, surger, vertex_geometry, H1Z2Report, ScClause, ScViolation, VertexGeometry,
};
pub use families::{
    canonical_key, make_dihedral, make_heckoid, make_link_exterior, templates, Family,
    HeckoidIndex, ParedOrbifoldDescriptor,
};
pub use iso::is_isomorphic;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("edge {edge:?} ends at unknown vertex {vertex:?}")]
    UnknownVertex { edge: String, vertex: String },
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("unknown vertex {0:?}")]
    NoSuchVertex(String),
    #[error("bad weight {0:?}: expected a positive integer or \"inf\"")]
    BadWeight(String),
    #[error("vertex {vertex:?} has invalid degree {degree}")]
    BadDegree { vertex: String, degree: usize },
    #[error("4-valent vertex {0:?} has a germ of weight other than 2")]
    BadDegreeFour(String),
    #[error("edges {0:?} and {1:?} meet at a 2-valent vertex with different weights")]
    WeightMismatch(String, String),
    #[error("boundary vertex {0:?} cannot carry a loop")]
    BoundaryLoop(String),
    #[error("vertex {0:?} is not an interior trivalent vertex")]
    NotTrivalent(String),
    #[error("4-valent vertex {0:?} is a parabolic locus, not a classified vertex")]
    DegreeFour(String),
    #[error("ambient {0} is not S3")]
    NotS3(Ambient),
    #[error("sphere {sphere} has {count} punctures and cannot be capped")]
    NotCappable { sphere: u32, count: usize },
    #[error("surgery result still violates SC on sphere {0}")]
    StillViolates(u32),
}

/// An edge index `w(e) ∈ {1, 2, …} ∪ {∞}`; serialized as `"2"` or `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Finite(u32),
    Infinite,
}

impl Weight {
    pub const TWO: Weight = Weight::Finite(2);

    pub fn is_one(&self) -> bool {
        *self == Weight::Finite(1)
    }

    /// Odd finite weights; `∞` counts as even.
    pub fn is_odd(&self) -> bool {
        matches!(self, Weight::Finite(n) if n % 2 == 1)
    }

    /// `1/w` with `1/∞ = 0`.
    pub fn reciprocal(&self) -> num_rational::Ratio<i64> {
        match *self {
            Weight::Finite(n) => num_rational::Ratio::new(1, n as i64),
            Weight::Infinite => num_rational::Ratio::from_integer(0),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(n) => write!(f, "{n}"),
            Weight::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Weight {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "inf" || t == "∞" {
            return Ok(Weight::Infinite);
        }
        match t.parse::<u32>() {
            Ok(n) if n >= 1 => Ok(Weight::Finite(n)),
            _ => Err(GraphError::BadWeight(s.to_string())),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    S3,
    RP3,
    #[serde(rename = "ball-pair")]
    BallPair,
    #[serde(rename = "abstract")]
    Abstract,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::S3 => "S3",
            Ambient::RP3 => "RP3",
            Ambient::BallPair => "ball-pair",
            Ambient::Abstract => "abstract",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    #[serde(default)]
    pub boundary: bool,
    /// Boundary sphere of a puncture; absent means sphere 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sphere: Option<u32>,
}

impl Vertex {
    pub fn interior(id: &str) -> Self {
        Vertex { id: id.to_string(), boundary: false, sphere: None }
    }

    pub fn puncture(id: &str, sphere: u32) -> Self {
        Vertex { id: id.to_string(), boundary: true, sphere: Some(sphere) }
    }

    pub fn sphere_id(&self) -> Option<u32> {
        self.boundary.then(|| self.sphere.unwrap_or(0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: String,
    pub ends: [String; 2],
    pub weight: Weight,
}

impl Edge {
    pub fn new(id: &str, a: &str, b: &str, weight: Weight) -> Self {
        Edge { id: id.to_string(), ends: [a.to_string(), b.to_string()], weight }
    }

    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }

    pub fn other_end(&self, v: &str) -> &str {
        if self.ends[0] == v {
            &self.ends[1]
        } else {
            &self.ends[0]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGraphOrbifold {
    pub ambient: Ambient,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl WeightedGraphOrbifold {
    pub fn new(ambient: Ambient, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Self {
        WeightedGraphOrbifold { ambient, vertices, edges }
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    /// Weights of the germs at `v`; a loop contributes two germs.
    pub fn germs(&self, v: &str) -> Vec<Weight> {
        let mut out = Vec::new();
        for e in &self.edges {
            for end in &e.ends {
                if end == v {
                    out.push(e.weight);
                }
            }
        }
        out
    }

    pub fn degree(&self, v: &str) -> usize {
        self.germs(v).len()
    }

    fn loops_at(&self, v: &str) -> usize {
        self.edges.iter().filter(|e| e.is_loop() && e.ends[0] == v).count()
    }

    /// Punctures of each boundary sphere, keyed by sphere number.
    pub fn spheres(&self) -> BTreeMap<u32, Vec<&Vertex>> {
        let mut out: BTreeMap<u32, Vec<&Vertex>> = BTreeMap::new();
        for v in &self.vertices {
            if let Some(s) = v.sphere_id() {
                out.entry(s).or_default().push(v);
            }
        }
        out
    }

    /// Ids, endpoints, and the degree rule (2-valent vertices are allowed as
    /// loop markers or as subdivision points between equal weights).
    pub fn validate(&self) -> Result<(), GraphError> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &self.vertices {
            if !seen.insert(format!("v:{}", v.id)) {
                return Err(GraphError::DuplicateId(v.id.clone()));
            }
        }
        for e in &self.edges {
            if !seen.insert(format!("e:{}", e.id)) {
                return Err(GraphError::DuplicateId(e.id.clone()));
            }
            for end in &e.ends {
                if self.vertex(end).is_none() {
                    return Err(GraphError::UnknownVertex { edge: e.id.clone(), vertex: end.clone() });
                }
            }
        }
        for v in &self.vertices {
            let germs = self.germs(&v.id);
            let bad = || GraphError::BadDegree { vertex: v.id.clone(), degree: germs.len() };
            if v.boundary {
                if self.loops_at(&v.id) > 0 {
                    return Err(GraphError::BoundaryLoop(v.id.clone()));
                }
                if germs.len() != 1 {
                    return Err(bad());
                }
                continue;
            }
            match germs.len() {
                2 => {
                    if self.loops_at(&v.id) == 0 && germs[0] != germs[1] {
                        let ids: Vec<&Edge> = self.edges.iter().filter(|e| e.ends.contains(&v.id)).collect();
                        return Err(GraphError::WeightMismatch(ids[0].id.clone(), ids[1].id.clone()));
                    }
                }
                3 => {}
                4 => {
                    if germs.iter().any(|w| *w != Weight::TWO) {
                        return Err(GraphError::BadDegreeFour(v.id.clone()));
                    }
                }
                _ => return Err(bad()),
            }
        }
        Ok(())
    }

    /// Removes weight-1 edges and smooths 2-valent vertices.
    ///
    /// Punctures that lose their edge disappear; an interior vertex left with
    /// a single germ is an error.
    pub fn elide(&self) -> Result<WeightedGraphOrbifold, GraphError> {
        self.validate()?;
        let mut g = self.clone();
        g.edges.retain(|e| !e.weight.is_one());
        let isolated: Vec<String> =
            g.vertices.iter().filter(|v| g.degree(&v.id) == 0).map(|v| v.id.clone()).collect();
        g.vertices.retain(|v| !isolated.contains(&v.id));
        loop {
            let smooth = g.vertices.iter().position(|v| {
                !v.boundary && g.degree(&v.id) == 2 && g.loops_at(&v.id) == 0
            });
            let Some(i) = smooth else { break };
            let v = g.vertices[i].id.clone();
            let mut incident: Vec<Edge> = g.edges.iter().filter(|e| e.ends.contains(&v)).cloned().collect();
            incident.sort_by(|a, b| a.id.cmp(&b.id));
            let (a, b) = (&incident[0], &incident[1]);
            if a.weight != b.weight {
                return Err(GraphError::WeightMismatch(a.id.clone(), b.id.clone()));
            }
            let merged = Edge::new(&format!("{}+{}", a.id, b.id), a.other_end(&v), b.other_end(&v), a.weight);
            g.edges.retain(|e| e.id != a.id && e.id != b.id);
            g.edges.push(merged);
            g.vertices.remove(i);
        }
        for v in &g.vertices {
            let d = g.degree(&v.id);
            if !v.boundary && d < 2 {
                return Err(GraphError::BadDegree { vertex: v.id.clone(), degree: d });
            }
        }
        g.validate()?;
        Ok(g)
    }

    /// Ids of the `∞`-weight edges, whose meridian annuli form the parabolic locus.
    pub fn parabolic_edges(&self) -> Vec<String> {
        self.edges.iter().filter(|e| e.weight == Weight::Infinite).map(|e| e.id.clone()).collect()
    }
}

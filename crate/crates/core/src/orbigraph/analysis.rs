use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use super::{Ambient, Edge, GraphError, Vertex, Weight, WeightedGraphOrbifold};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexGeometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl VertexGeometry {
    /// Trichotomy of `Σ 1/wᵢ` against 1.
    pub fn of(weights: &[Weight]) -> VertexGeometry {
        let s: Ratio<i64> = weights.iter().map(Weight::reciprocal).sum();
        match s.cmp(&Ratio::from_integer(1)) {
            std::cmp::Ordering::Greater => VertexGeometry::Spherical,
            std::cmp::Ordering::Equal => VertexGeometry::Euclidean,
            std::cmp::Ordering::Less => VertexGeometry::Hyperbolic,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "kebab-case")]
pub enum ScClause {
    /// `|S ∩ Σ| < 3`.
    TooFewPunctures { count: usize },
    /// Three punctures with `Σ 1/wᵢ > 1`.
    SphericalTriple { weights: Vec<Weight> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScViolation {
    pub sphere: u32,
    #[serde(flatten)]
    pub clause: ScClause,
}

/// Puncture weights of each boundary sphere; weight-1 strands do not puncture.
fn puncture_weights(g: &WeightedGraphOrbifold) -> BTreeMap<u32, Vec<Weight>> {
    let mut out: BTreeMap<u32, Vec<Weight>> = BTreeMap::new();
    for (s, vs) in g.spheres() {
        let ws = vs
            .iter()
            .flat_map(|v| g.germs(&v.id))
            .filter(|w| !w.is_one())
            .collect();
        out.insert(s, ws);
    }
    out
}

/// Condition (SC) on every boundary sphere. An empty list means the graph passes.
pub fn check_sc(g: &WeightedGraphOrbifold) -> Result<Vec<ScViolation>, GraphError> {
    g.validate()?;
    let mut out = Vec::new();
    for (sphere, mut ws) in puncture_weights(g) {
        ws.sort();
        if ws.len() < 3 {
            out.push(ScViolation { sphere, clause: ScClause::TooFewPunctures { count: ws.len() } });
        } else if ws.len() == 3 && VertexGeometry::of(&ws) == VertexGeometry::Spherical {
            out.push(ScViolation { sphere, clause: ScClause::SphericalTriple { weights: ws } });
        }
    }
    Ok(out)
}

pub fn vertex_geometry(g: &WeightedGraphOrbifold, v: &str) -> Result<VertexGeometry, GraphError> {
    let vert = g.vertex(v).ok_or_else(|| GraphError::NoSuchVertex(v.to_string()))?;
    let germs = g.germs(v);
    if germs.len() == 4 {
        return Err(GraphError::DegreeFour(v.to_string()));
    }
    if vert.boundary || germs.len() != 3 {
        return Err(GraphError::NotTrivalent(v.to_string()));
    }
    Ok(VertexGeometry::of(&germs))
}

/// Orbifold surgery: reweight, cap every spherical 3-punctured boundary
/// sphere with a cone vertex, then elide weight-1 edges.
pub fn surger(
    g: &WeightedGraphOrbifold,
    reweight: &BTreeMap<String, Weight>,
) -> Result<WeightedGraphOrbifold, GraphError> {
    g.validate()?;
    let mut h = g.clone();
    for (id, w) in reweight {
        let e = h.edges.iter_mut().find(|e| &e.id == id).ok_or_else(|| GraphError::UnknownEdge(id.clone()))?;
        e.weight = *w;
    }
    for (sphere, ws) in puncture_weights(&h) {
        if ws.len() < 3 {
            return Err(GraphError::NotCappable { sphere, count: ws.len() });
        }
        if ws.len() > 3 || VertexGeometry::of(&ws) != VertexGeometry::Spherical {
            continue;
        }
        let cap = fresh_id(&h, &format!("cap{sphere}"));
        let members: Vec<String> = h
            .vertices
            .iter()
            .filter(|v| v.sphere_id() == Some(sphere))
            .map(|v| v.id.clone())
            .collect();
        // punctures of weight-1 strands are dropped; the rest become the cone point
        for e in h.edges.iter_mut() {
            for end in e.ends.iter_mut() {
                if members.contains(end) && !e.weight.is_one() {
                    *end = cap.clone();
                }
            }
        }
        h.edges.retain(|e| !(e.weight.is_one() && e.ends.iter().any(|x| members.contains(x))));
        h.vertices.retain(|v| !members.contains(&v.id));
        h.vertices.push(Vertex::interior(&cap));
    }
    let out = h.elide()?;
    if let Some(v) = check_sc(&out)?.first() {
        return Err(GraphError::StillViolates(v.sphere));
    }
    Ok(out)
}

fn fresh_id(g: &WeightedGraphOrbifold, base: &str) -> String {
    let mut id = base.to_string();
    while g.vertex(&id).is_some() {
        id.push('\'');
    }
    id
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct H1Z2Report {
    pub dimension: usize,
    /// Coordinates of each meridian in the basis of free meridians.
    pub meridian_class: BTreeMap<String, Vec<u8>>,
    /// Edge ids whose meridians form the basis.
    pub basis: Vec<String>,
}

/// The GF(2) relation matrix: columns are edges in the given order, rows are
/// `m_e = 0` for odd finite weights and the vertex sums at interior vertices.
pub fn h1_z2_relations(g: &WeightedGraphOrbifold) -> Vec<Vec<u8>> {
    let col = |e: &Edge| g.edges.iter().position(|x| x.id == e.id).expect("own edge");
    let n = g.edges.len();
    let mut rows = Vec::new();
    for e in &g.edges {
        if e.weight.is_odd() {
            let mut r = vec![0u8; n];
            r[col(e)] = 1;
            rows.push(r);
        }
    }
    for v in g.vertices.iter().filter(|v| !v.boundary) {
        let mut r = vec![0u8; n];
        for e in &g.edges {
            for end in &e.ends {
                if *end == v.id {
                    r[col(e)] ^= 1;
                }
            }
        }
        if r.iter().any(|&x| x != 0) {
            rows.push(r);
        }
    }
    rows
}

/// Reduced row echelon form over GF(2); returns the pivot columns.
fn rref(rows: &mut Vec<Vec<u8>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] == 1 {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// `H₁(O; Z₂) ≅ H₁(S³ − Σ_even; Z₂)`, generated by edge meridians.
pub fn h1_z2(g: &WeightedGraphOrbifold) -> Result<H1Z2Report, GraphError> {
    if g.ambient != Ambient::S3 {
        return Err(GraphError::NotS3(g.ambient));
    }
    g.validate()?;
    let n = g.edges.len();
    let mut rows = h1_z2_relations(g);
    let pivots = rref(&mut rows, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut meridian_class = BTreeMap::new();
    for (c, e) in g.edges.iter().enumerate() {
        let v: Vec<u8> = match pivots.iter().position(|&p| p == c) {
            // m_c + Σ a_f m_f = 0
            Some(row) => free.iter().map(|&f| rows[row][f]).collect(),
            None => free.iter().map(|&f| u8::from(f == c)).collect(),
        };
        meridian_class.insert(e.id.clone(), v);
    }
    Ok(H1Z2Report {
        dimension: free.len(),
        meridian_class,
        basis: free.iter().map(|&f| g.edges[f].id.clone()).collect(),
    })
}

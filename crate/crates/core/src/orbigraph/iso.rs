use std::collections::BTreeMap;

use super::{Weight, WeightedGraphOrbifold};

struct Indexed {
    sig: Vec<(bool, Vec<Weight>, usize)>,
    sphere: Vec<Option<u32>>,
    between: BTreeMap<(usize, usize), Vec<Weight>>,
}

fn index(g: &WeightedGraphOrbifold) -> Indexed {
    let pos = |id: &str| g.vertices.iter().position(|v| v.id == id).expect("validated graph");
    let mut between: BTreeMap<(usize, usize), Vec<Weight>> = BTreeMap::new();
    for e in &g.edges {
        let (a, b) = (pos(&e.ends[0]), pos(&e.ends[1]));
        between.entry((a.min(b), a.max(b))).or_default().push(e.weight);
    }
    for ws in between.values_mut() {
        ws.sort();
    }
    let sig = g
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut germs = g.germs(&v.id);
            germs.sort();
            let loops = between.get(&(i, i)).map_or(0, Vec::len);
            (v.boundary, germs, loops)
        })
        .collect();
    let sphere = g.vertices.iter().map(|v| v.sphere_id()).collect();
    Indexed { sig, sphere, between }
}

/// Exhaustive matching of vertices preserving boundary spheres, weights and
/// edge multiplicities. Meant for the small graphs of the named families.
pub fn is_isomorphic(a: &WeightedGraphOrbifold, b: &WeightedGraphOrbifold) -> bool {
    if a.ambient != b.ambient || a.vertices.len() != b.vertices.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let (x, y) = (index(a), index(b));
    let mut xs = x.sig.clone();
    let mut ys = y.sig.clone();
    xs.sort();
    ys.sort();
    if xs != ys {
        return false;
    }
    let mut map = vec![usize::MAX; x.sig.len()];
    let mut used = vec![false; x.sig.len()];
    extend(&x, &y, 0, &mut map, &mut used, &mut BTreeMap::new())
}

fn extend(
    x: &Indexed,
    y: &Indexed,
    i: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    spheres: &mut BTreeMap<u32, u32>,
) -> bool {
    if i == map.len() {
        return true;
    }
    for j in 0..map.len() {
        if used[j] || x.sig[i] != y.sig[j] {
            continue;
        }
        let mut added_sphere = None;
        if let (Some(s), Some(t)) = (x.sphere[i], y.sphere[j]) {
            match spheres.get(&s) {
                Some(&t2) if t2 != t => continue,
                Some(_) => {}
                None => {
                    if spheres.values().any(|&v| v == t) {
                        continue;
                    }
                    spheres.insert(s, t);
                    added_sphere = Some(s);
                }
            }
        }
        map[i] = j;
        used[j] = true;
        let consistent = (0..=i).all(|k| {
            let (u, v) = (k.min(i), k.max(i));
            let (mu, mv) = (map[u].min(map[v]), map[u].max(map[v]));
            x.between.get(&(u, v)) == y.between.get(&(mu, mv))
        });
        if consistent && extend(x, y, i + 1, map, used, spheres) {
            return true;
        }
        map[i] = usize::MAX;
        used[j] = false;
        if let Some(s) = added_sphere {
            spheres.remove(&s);
        }
    }
    false
}

//! Replays the mechanized lemmas and reports one entry per check.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cosetenum::{image_order, is_spherical, triangle_group};
use crate::cusplattice::{brenner_candidates, evaluate_str, spectrum, translation_vector, LatticeKind};
use crate::dihedral::{exceptional_isom, gamma, normalizer_generators, sweep, sweep_domain, DihedralError, DihedralParams};
use crate::orbigraph::{
    canonical_key, h1_z2, make_dihedral, make_heckoid, Family, HeckoidIndex, ParedOrbifoldDescriptor,
};
use crate::slopes::{mod_inverse, Slope};
use crate::word::Word;

pub const CHECK_IDS: [&str; 12] = [
    "dihedral-order",
    "isom-groups",
    "theta-isom",
    "normalizer-soundness",
    "cusp-244",
    "cusp-236",
    "brenner",
    "triangle-orders",
    "triangle-images",
    "homology-cases",
    "heckoid-classification",
    "no-float",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub criterion: u8,
    pub anchor: String,
    pub status: CheckStatus,
    pub witness: Value,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown check id {0:?}")]
pub struct UnknownCheck(pub String);

/// Runs the selected checks in parallel; the report is ordered by check id.
pub fn verify(selector: &[&str]) -> Result<VerifyReport, UnknownCheck> {
    let ids: Vec<&str> = if selector.is_empty() || selector.contains(&"all") {
        CHECK_IDS.to_vec()
    } else {
        for s in selector {
            if !CHECK_IDS.contains(s) {
                return Err(UnknownCheck(s.to_string()));
            }
        }
        selector.to_vec()
    };
    let mut checks: Vec<CheckResult> =
        ids.par_iter().map(|id| run_check(id).expect("known id")).collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    checks.dedup_by(|a, b| a.id == b.id);
    Ok(VerifyReport { checks })
}

pub fn verify_all() -> VerifyReport {
    verify(&["all"]).expect("all is a valid selector")
}

pub fn run_check(id: &str) -> Option<CheckResult> {
    let (criterion, anchor, outcome) = match id {
        "dihedral-order" => (1, "|Γ(q/p;d₁,d₂)| = 2pd₁d₂ and Γ is dihedral", dihedral_order()),
        "isom-groups" => (2, "N(Γ)/Γ ≅ (Z₂)² away from the trivial θ-orbifold", isom_groups()),
        "theta-isom" => (2, "Isom⁺ of the trivial θ-orbifold is D₃×Z₂", theta_isom()),
        "normalizer-soundness" => (3, "each normalizer generator conjugates Γ onto Γ", normalizer_soundness()),
        "cusp-244" => (4, "L₁,L₂,L₃ of S²(2,4,4) are 2ℓ, 2√2ℓ, 4ℓ", cusp(LatticeKind::T244, [4, 8, 16])),
        "cusp-236" => (4, "L₁,L₂,L₃ of S²(2,3,6) are 2√3ℓ, 6ℓ, 4√3ℓ", cusp(LatticeKind::T236, [12, 36, 48])),
        "brenner" => (5, "α is conjugate to b²a or b²ac²a (resp. ac³ or ac⁴ac²)", brenner()),
        "triangle-orders" => (6, "|π₁(S²(p,q,r))| = 2/(1/p+1/q+1/r−1)", triangle_orders()),
        "triangle-images" => (6, "images of b²a, b²ac²a, ac⁴ac² under the natural epimorphisms", triangle_images()),
        "homology-cases" => (7, "H₁(O(r;d₊,d₋);Z₂) case analysis", homology_cases()),
        "heckoid-classification" => (8, "S(r;n) ≅ M₀(r;n), M₁(r̂;m) or M₂(r̂;m)", heckoid_classification()),
        "no-float" => (9, "all numeric data are integers, rationals or exact field elements", no_float()),
        _ => return None,
    };
    let (status, witness) = match outcome {
        Ok(w) => (CheckStatus::Pass, w),
        Err(w) => (CheckStatus::Fail, w),
    };
    Some(CheckResult { id: id.to_string(), criterion, anchor: anchor.to_string(), status, witness })
}

type Outcome = Result<Value, Value>;
type Signature = (u32, u32, u32);

fn error(e: impl std::fmt::Display) -> Value {
    json!({ "error": e.to_string() })
}

fn dihedral_order() -> Outcome {
    let pts = sweep(8, 4).map_err(error)?;
    for pt in &pts {
        let n = pt.params.n();
        let dihedral = pt.gamma_type.is_isomorphic_to(&crate::group::GroupType::Dihedral(n as usize));
        if pt.certificate.order as i64 != 2 * n || !pt.certificate.holds_for(n) || !dihedral {
            return Err(json!({ "counterexample": pt }));
        }
    }
    Ok(json!({ "points": pts.len(), "max_p": 8, "max_d": 4 }))
}

fn isom_groups() -> Outcome {
    let pts = sweep(8, 4).map_err(error)?;
    let mut checked = 0;
    for pt in &pts {
        let p = &pt.params;
        let excluded = (p.d1, p.d2) == (1, 1) || p.is_trivial_theta();
        match pt.normalizer_order {
            None if excluded => {}
            Some(_) if !excluded => {
                let ok = pt.ok() && pt.quotient_type.map(|t| t.order()) == Some(4);
                if !ok {
                    return Err(json!({ "counterexample": pt }));
                }
                checked += 1;
            }
            _ => return Err(json!({ "unexpected_exclusion": pt })),
        }
    }
    Ok(json!({ "points": checked, "quotient": "(Z2)^2" }))
}

fn theta_isom() -> Outcome {
    let x = exceptional_isom().map_err(error)?;
    let w = json!({
        "order": x.quotient.order(),
        "group": x.recognized.to_string(),
        "is_d3_times_z2": x.is_d3_times_z2,
        "normalizer_order": x.normalizer_order,
        "brute_force_order": x.brute_force_order,
    });
    if x.quotient.order() == 12 && x.is_d3_times_z2 && x.normalizer_order == x.brute_force_order {
        Ok(w)
    } else {
        Err(w)
    }
}

fn normalizer_soundness() -> Outcome {
    let domain = sweep_domain(8, 4);
    let results: Vec<Result<usize, Value>> = domain
        .par_iter()
        .map(|&(r, d1, d2)| {
            let params = DihedralParams::from_slope(r, d1, d2).map_err(error)?;
            let gens = match normalizer_generators(&params) {
                Ok(g) => g,
                Err(DihedralError::Excluded(_)) => return Ok(0),
                Err(e) => return Err(error(e)),
            };
            let g = gamma(&params).map_err(error)?;
            for (i, x) in gens.iter().enumerate() {
                if !g.group.is_normalized_by(x) {
                    return Err(json!({ "params": params, "generator": i }));
                }
            }
            Ok(gens.len())
        })
        .collect();
    let mut total = 0;
    for r in results {
        total += r?;
    }
    Ok(json!({ "conjugations_checked": total }))
}

fn cusp(kind: LatticeKind, expected: [i64; 3]) -> Outcome {
    let levels = spectrum(kind, 3);
    let coef2: Vec<i64> = levels.iter().map(|e| e.coef2).collect();
    let mut words = Vec::new();
    let mut ok = coef2 == expected;
    for (entry, word) in levels.iter().zip(kind.named_words()) {
        ok &= entry.orbits.len() == 1;
        let v = evaluate_str(kind, word).ok().and_then(|g| translation_vector(kind, &g));
        let in_orbit = v.is_some_and(|v| entry.orbits.iter().any(|o| o.members.contains(&(v.m, v.n))));
        ok &= in_orbit;
        words.push(json!({ "word": word, "vector": v, "coef2": entry.coef2, "in_orbit": in_orbit }));
    }
    let w = json!({ "coef2": coef2, "words": words });
    if ok {
        Ok(w)
    } else {
        Err(w)
    }
}

fn brenner() -> Outcome {
    let mut out = serde_json::Map::new();
    let mut ok = true;
    for (kind, expected) in [(LatticeKind::T244, ["b²a", "b²ac²a"]), (LatticeKind::T236, ["ac³", "ac⁴ac²"])] {
        let words: Vec<Option<String>> = brenner_candidates(kind).into_iter().map(|o| o.word).collect();
        ok &= words == expected.map(|s| Some(s.to_string()));
        out.insert(kind.to_string(), json!(words));
    }
    if ok {
        Ok(Value::Object(out))
    } else {
        Err(Value::Object(out))
    }
}

fn triangle_orders() -> Outcome {
    let mut rows = Vec::new();
    for p in 2..=6u32 {
        for q in 2..=6u32 {
            for r in 2..=6u32 {
                if !is_spherical(p, q, r) {
                    continue;
                }
                let den = q * r + p * r + p * q - p * q * r;
                let expected = 2 * p * q * r / den;
                let got = triangle_group(p, q, r).map_err(error)?.order();
                if got != expected as usize || (2 * p * q * r) % den != 0 {
                    return Err(json!({ "triple": [p, q, r], "order": got, "expected": expected }));
                }
                rows.push(json!([p, q, r, got]));
            }
        }
    }
    Ok(json!({ "triples": rows }))
}

fn triangle_images() -> Outcome {
    let w = |s: &str| Word::parse(s, 3).expect("fixed word");
    let cases: [(&str, Signature, Signature, usize); 8] = [
        ("b²a", (2, 4, 4), (2, 2, 2), 2),
        ("b²a", (2, 4, 4), (2, 2, 4), 2),
        ("b²a", (2, 4, 4), (2, 4, 2), 2),
        ("b²ac²a", (2, 4, 4), (2, 2, 2), 1),
        ("b²ac²a", (2, 4, 4), (2, 2, 4), 2),
        ("b²ac²a", (2, 4, 4), (2, 4, 2), 2),
        ("ac³", (2, 3, 6), (2, 3, 3), 2),
        ("ac⁴ac²", (2, 3, 6), (2, 3, 3), 2),
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    for (word, src, tgt, expected) in cases {
        let got = image_order(&w(word), src, tgt).map_err(error)?;
        ok &= got == expected;
        rows.push(json!({ "word": word, "target": [tgt.0, tgt.1, tgt.2], "order": got }));
    }
    let g = triangle_group(2, 3, 3).map_err(error)?;
    let conj_a = g.are_conjugate(&g.evaluate(&w("ac⁴ac²")), &g.evaluate(&w("a")));
    let g = triangle_group(2, 2, 4).map_err(error)?;
    let conj_b2a = g.are_conjugate(&g.evaluate(&w("c²a")), &g.evaluate(&w("b²a")));
    ok &= conj_a && conj_b2a;
    let out = json!({ "images": rows, "ac4ac2_conjugate_to_a": conj_a, "c2a_conjugate_to_b2a": conj_b2a });
    if ok {
        Ok(out)
    } else {
        Err(out)
    }
}

fn homology_cases() -> Outcome {
    let mut counts = [0usize; 3];
    for p in 1..=12i64 {
        for q in 0..p {
            if q.gcd(&p) != 1 {
                continue;
            }
            let r = Slope::new(q, p).map_err(error)?;
            for dp in 1..=5u32 {
                for dm in 1..=5u32 {
                    if dp.gcd(&dm) != 1 {
                        continue;
                    }
                    let g = make_dihedral(r, dp, dm).map_err(error)?.graph;
                    let h = h1_z2(&g).map_err(error)?;
                    let fail = || json!({ "r": r, "d_plus": dp, "d_minus": dm, "dimension": h.dimension });
                    let zero = |e: &str| h.meridian_class.get(e).is_none_or(|c| c.iter().all(|&x| x == 0));
                    if dp == 1 && dm % 2 == 1 {
                        if p % 2 == 0 {
                            if h.dimension != 2 || !zero("tau-") {
                                return Err(fail());
                            }
                            counts[0] += 1;
                        } else {
                            let arcs: Vec<&Vec<u8>> = h
                                .meridian_class
                                .iter()
                                .filter(|(k, _)| k.as_str() != "tau-" && k.as_str() != "tau+")
                                .map(|(_, v)| v)
                                .collect();
                            if h.dimension != 1 || arcs.windows(2).any(|w| w[0] != w[1]) {
                                return Err(fail());
                            }
                            counts[1] += 1;
                        }
                    } else if (dp % 2 == 0) != (dm % 2 == 0) {
                        if h.dimension != 2 {
                            return Err(fail());
                        }
                        counts[2] += 1;
                    }
                }
            }
        }
    }
    Ok(json!({ "two_components": counts[0], "knot": counts[1], "one_even_index": counts[2] }))
}

/// `r̂` written out case by case.
fn hat_oracle(q: i64, p: i64) -> (i64, i64) {
    match (p % 2, q.rem_euclid(2)) {
        (1, 0) => (q / 2, p),
        (1, _) => ((p + q) / 2, p),
        _ => (q, p / 2),
    }
}

fn heckoid_classification() -> Outcome {
    let mut points = 0;
    for p in 1..=10i64 {
        for q in 0..p {
            if q.gcd(&p) != 1 {
                continue;
            }
            let r = Slope::new(q, p).map_err(error)?;
            for twice in 3..=9u32 {
                let d = make_heckoid(r, HeckoidIndex::half(twice)).map_err(error)?;
                let ok = match (&d.family, twice % 2) {
                    (Family::M0 { r: r0, n }, 0) => *r0 == r && 2 * n == twice,
                    (Family::M1 { r: rh, m }, 1) if p % 2 == 1 => {
                        let (hq, hp) = hat_oracle(q, p);
                        *rh == Slope::new(hq, hp).map_err(error)? && *m == twice
                    }
                    (Family::M2 { r: rh, m }, 1) if p % 2 == 0 => {
                        let (hq, hp) = hat_oracle(q, p);
                        *rh == Slope::new(hq, hp).map_err(error)? && *m == twice
                    }
                    _ => false,
                };
                if !ok {
                    return Err(json!({ "r": r, "n": HeckoidIndex::half(twice), "family": d.family }));
                }
                points += 1;
            }
        }
    }
    let mut identifications = 0;
    for p in 1..=12i64 {
        for q in 0..p {
            if q.gcd(&p) != 1 {
                continue;
            }
            let r = Slope::new(q, p).map_err(error)?;
            let graph = make_dihedral(r, 1, 1).map_err(error)?.graph;
            let m2 = |s: Slope| ParedOrbifoldDescriptor::new(graph.clone(), Family::M2 { r: s, m: 5 });
            let shifted = Slope::new(p + q, p).map_err(error)?;
            if canonical_key(&m2(r)).map_err(error)? != canonical_key(&m2(shifted)).map_err(error)? {
                return Err(json!({ "m2": r }));
            }
            let qi = mod_inverse(q, p).unwrap_or(0);
            let ri = Slope::new(qi, p).map_err(error)?;
            for (a, b) in [(1, 2), (2, 3), (1, 5), (4, 3), (5, 2)] {
                let x = canonical_key(&make_dihedral(r, a, b).map_err(error)?).map_err(error)?;
                let y = canonical_key(&make_dihedral(ri, b, a).map_err(error)?).map_err(error)?;
                if x != y {
                    return Err(json!({ "dihedral": r, "d_plus": a, "d_minus": b }));
                }
            }
            identifications += 6;
        }
    }
    Ok(json!({ "points": points, "identifications": identifications }))
}

const SOURCES: [(&str, &str); 18] = [
    ("lib.rs", include_str!("lib.rs")),
    ("slopes.rs", include_str!("slopes.rs")),
    ("group.rs", include_str!("group.rs")),
    ("word.rs", include_str!("word.rs")),
    ("dihedral.rs", include_str!("dihedral.rs")),
    ("cusplattice.rs", include_str!("cusplattice.rs")),
    ("cosetenum.rs", include_str!("cosetenum.rs")),
    ("verify.rs", include_str!("verify.rs")),
    ("orbigraph/mod.rs", include_str!("orbigraph/mod.rs")),
    ("orbigraph/analysis.rs", include_str!("orbigraph/analysis.rs")),
    ("orbigraph/iso.rs", include_str!("orbigraph/iso.rs")),
    ("orbigraph/families.rs", include_str!("orbigraph/families.rs")),
    ("quat/mod.rs", include_str!("quat/mod.rs")),
    ("quat/angle.rs", include_str!("quat/angle.rs")),
    ("quat/ds.rs", include_str!("quat/ds.rs")),
    ("quat/ext.rs", include_str!("quat/ext.rs")),
    ("quat/isom.rs", include_str!("quat/isom.rs")),
    ("../Cargo.toml", include_str!("../Cargo.toml")),
];

/// Lines of `src` mentioning a floating-point type as an identifier.
pub fn float_mentions(src: &str) -> Vec<usize> {
    let banned = [format!("f{}", 32), format!("f{}", 64)];
    src.lines()
        .enumerate()
        .filter(|(_, line)| {
            line.split(|c: char| !(c.is_alphanumeric() || c == '_')).any(|tok| banned.iter().any(|b| b == tok))
        })
        .map(|(i, _)| i + 1)
        .collect()
}

fn no_float() -> Outcome {
    let hits: Vec<String> = SOURCES
        .iter()
        .flat_map(|(name, src)| float_mentions(src).into_iter().map(move |l| format!("{name}:{l}")))
        .collect();
    if hits.is_empty() {
        Ok(json!({ "files_scanned": SOURCES.len() }))
    } else {
        Err(json!({ "hits": hits }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_scanner_sees_identifiers_only() {
        let bad = format!("let x: f{} = 1;\nlet buf64 = 2;\n", 64);
        assert_eq!(float_mentions(&bad), vec![1]);
        assert!(float_mentions("fn f(x: i64) -> u32 { 0 }").is_empty());
    }

    #[test]
    fn selector_validation() {
        assert!(verify(&["nope"]).is_err());
        let r = verify(&["cusp-236", "brenner"]).unwrap();
        assert_eq!(r.checks.iter().map(|c| c.id.as_str()).collect::<Vec<_>>(), ["brenner", "cusp-236"]);
        assert!(r.all_passed());
    }
}

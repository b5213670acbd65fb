use std::collections::BTreeMap;
use std::error::Error;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pa_core::cosetenum::{image_order, triangle_group};
use pa_core::cusplattice::{brenner_candidates, spectrum, LatticeKind};
use pa_core::dihedral::{gamma, isom_plus, DihedralParams};
use pa_core::group::GroupType;
use pa_core::orbigraph::{
    canonical_key, check_sc, h1_z2, make_heckoid, surger, Family, HeckoidIndex, ParedOrbifoldDescriptor, Weight,
};
use pa_core::slopes::{equivalence, Slope};
use pa_core::verify::{verify, CHECK_IDS};
use pa_core::word::Word;
use serde_json::{json, Map, Value};

const SCHEMA: &str = "pa/1";

#[derive(Parser)]
#[command(name = "pa", version, about = "Exact computations with 2-bridge links, Heckoid orbifolds and their cusps")]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// 2-bridge link slopes
    Link {
        #[command(subcommand)]
        action: LinkAction,
    },
    /// Classify the Heckoid orbifold S(r; n)
    Heckoid {
        /// Slope q/p
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
        /// Index: an integer n >= 2 or m/2 with m odd >= 3
        index: HeckoidIndex,
    },
    /// The dihedral group of O(q/p; d1, d2) and its isometries
    Dihedral {
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
        d1: i64,
        d2: i64,
    },
    /// Length spectrum of a rigid cusp lattice
    Cusp {
        /// 244 or 236
        kind: LatticeKind,
        #[arg(long, default_value_t = 3)]
        count: usize,
        /// Report the orbits short enough to be parabolic generators
        #[arg(long)]
        brenner: bool,
    },
    /// Finite triangle groups
    Triangle {
        #[command(subcommand)]
        action: TriangleAction,
    },
    /// Z2-homology and the SC condition of a weighted graph file
    Homology {
        path: std::path::PathBuf,
        /// Reweight an edge before computing, as EDGE=WEIGHT
        #[arg(long = "reweight", value_name = "EDGE=WEIGHT")]
        reweight: Vec<String>,
    },
    /// Replay the mechanized checks
    Verify {
        /// Run every check
        #[arg(long)]
        all: bool,
        /// Check ids to run
        ids: Vec<String>,
    },
}

#[derive(Subcommand)]
enum LinkAction {
    /// Components, hyperbolicity and continued fraction of K(r)
    Classify {
        #[arg(allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Compare K(r) and K(s)
    Equiv {
        #[arg(allow_hyphen_values = true)]
        r: Slope,
        #[arg(allow_hyphen_values = true)]
        s: Slope,
    },
}

#[derive(Subcommand)]
enum TriangleAction {
    /// Order of a word in the triangle group "p q r"
    Order { signature: String, word: String },
    /// Order of a word's image under "p q r -> p' q' r'"
    Image { map: String, word: String },
}

type Outcome = Result<Map<String, Value>, Box<dyn Error>>;

/// Errors that exit with the usage status.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl Error for Usage {}

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("payloads are objects"),
    }
}

fn triple(s: &str) -> Result<(u32, u32, u32), String> {
    let parts: Vec<u32> = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad signature entry {t:?}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [p, q, r] => Ok((p, q, r)),
        _ => Err(format!("expected three integers, got {s:?}")),
    }
}

fn link(action: LinkAction) -> Outcome {
    Ok(match action {
        LinkAction::Classify { slope } => {
            let mut out = json!({ "slope": slope, "components": slope.components() });
            if !slope.is_infinite() {
                out["hyperbolic"] = json!(slope.is_hyperbolic()?);
                out["continued_fraction"] = json!(slope.continued_fraction()?.terms);
                out["canonical"] = json!(slope.preserving_canonical());
            } else {
                out["hyperbolic"] = json!(false);
            }
            obj(out)
        }
        LinkAction::Equiv { r, s } => obj(json!({ "r": r, "s": s, "verdict": equivalence(r, s)? })),
    })
}

fn heckoid(slope: Slope, index: HeckoidIndex) -> Outcome {
    let d = make_heckoid(slope, index)?;
    let (family, r, m) = match &d.family {
        Family::M0 { r, n } => ("M0", *r, *n),
        Family::M1 { r, m } => ("M1", *r, *m),
        Family::M2 { r, m } => ("M2", *r, *m),
        _ => unreachable!("make_heckoid returns a Heckoid family"),
    };
    let index_key = if family == "M0" { "n" } else { "m" };
    let mut out = json!({
        "input": { "slope": slope, "n": index },
        "family": family,
        "slope": r,
        "canonical_key": canonical_key(&d)?,
        "parabolic_edges": d.parabolic_edges,
        "graph": d.graph,
    });
    out[index_key] = json!(m);
    Ok(obj(out))
}

fn dihedral(slope: Slope, d1: i64, d2: i64) -> Outcome {
    let params = DihedralParams::from_slope(slope, d1, d2)?;
    let n = params.n();
    let g = gamma(&params)?;
    let recognized = g.recognize();
    let group = if recognized.is_isomorphic_to(&GroupType::Dihedral(n as usize)) {
        format!("D_{n}")
    } else {
        recognized.to_string()
    };
    let isom = isom_plus(slope, d1, d2)?;
    let normalizer_order = isom.quotient.as_ref().map(|q| q.order() * g.group.order());
    Ok(obj(json!({
        "slope": slope,
        "d1": d1,
        "d2": d2,
        "k1": params.k1,
        "k2": params.k2,
        "n": n,
        "order": g.group.order(),
        "group": group,
        "certificate": g.certificate,
        "isom": isom.tag,
        "isom_finite": isom.tag.is_finite(),
        "normalizer_order": normalizer_order,
        "quotient_order": isom.quotient.as_ref().map(|q| q.order()),
    })))
}

fn cusp(kind: LatticeKind, count: usize, brenner: bool) -> Outcome {
    if count == 0 {
        return Err("--count must be at least 1".into());
    }
    let mut out = json!({ "kind": kind, "spectrum": spectrum(kind, count) });
    if brenner {
        out["brenner"] = json!(brenner_candidates(kind));
    }
    Ok(obj(out))
}

fn triangle(action: TriangleAction) -> Outcome {
    Ok(match action {
        TriangleAction::Order { signature, word } => {
            let (p, q, r) = triple(&signature)?;
            let g = triangle_group(p, q, r)?;
            let w = Word::parse(&word, 3)?;
            let x = g.evaluate(&w);
            obj(json!({
                "signature": [p, q, r],
                "group_order": g.order(),
                "word": w.to_string(),
                "order": g.element_order(&x),
            }))
        }
        TriangleAction::Image { map, word } => {
            let (src, tgt) = map.split_once("->").ok_or("expected \"p q r -> p' q' r'\"")?;
            let (src, tgt) = (triple(src)?, triple(tgt)?);
            let w = Word::parse(&word, 3)?;
            let order = image_order(&w, src, tgt)?;
            obj(json!({
                "source": [src.0, src.1, src.2],
                "target": [tgt.0, tgt.1, tgt.2],
                "word": w.to_string(),
                "order": order,
            }))
        }
    })
}

fn homology(path: &std::path::Path, reweight: &[String]) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let d: ParedOrbifoldDescriptor = serde_json::from_str(&text)?;
    d.graph.validate()?;
    let mut changes = BTreeMap::new();
    for r in reweight {
        let (e, w) = r.split_once('=').ok_or_else(|| format!("expected EDGE=WEIGHT, got {r:?}"))?;
        changes.insert(e.to_string(), w.parse::<Weight>()?);
    }
    let graph = if changes.is_empty() { d.graph.clone() } else { surger(&d.graph, &changes)? };
    let key = if d.family == Family::Custom { None } else { canonical_key(&d).ok() };
    Ok(obj(json!({
        "family": d.family,
        "canonical_key": key,
        "sc_violations": check_sc(&graph)?,
        "h1_z2": h1_z2(&graph)?,
        "graph": if changes.is_empty() { Value::Null } else { json!(graph) },
    })))
}

fn render_text(m: &Map<String, Value>) -> String {
    let mut out = String::new();
    for (k, v) in m {
        if k == "schema" || v.is_null() {
            continue;
        }
        let shown = match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{k}: {shown}\n"));
    }
    out
}

fn run(cli: Cli) -> Result<(Map<String, Value>, bool), Box<dyn Error>> {
    let (name, body) = match cli.command {
        Command::Link { action } => ("link", link(action)?),
        Command::Heckoid { slope, index } => ("heckoid", heckoid(slope, index)?),
        Command::Dihedral { slope, d1, d2 } => ("dihedral", dihedral(slope, d1, d2)?),
        Command::Cusp { kind, count, brenner } => ("cusp", cusp(kind, count, brenner)?),
        Command::Triangle { action } => ("triangle", triangle(action)?),
        Command::Homology { path, reweight } => ("homology", homology(&path, &reweight)?),
        Command::Verify { all, ids } => {
            if !all && ids.is_empty() {
                return Err(Usage(format!("verify needs --all or check ids: {}", CHECK_IDS.join(", "))).into());
            }
            let selector: Vec<&str> = if all { vec!["all"] } else { ids.iter().map(String::as_str).collect() };
            let report = verify(&selector).map_err(|e| Usage(e.to_string()))?;
            let ok = report.all_passed();
            let mut m = Map::new();
            m.insert("schema".into(), json!(SCHEMA));
            m.insert("command".into(), json!("verify"));
            m.insert("all_passed".into(), json!(ok));
            m.insert("checks".into(), json!(report.checks));
            return Ok((m, ok));
        }
    };
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(name));
    m.extend(body);
    Ok((m, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let json_out = cli.json;
    match run(cli) {
        Ok((m, ok)) => {
            if json_out {
                println!("{}", serde_json::to_string_pretty(&Value::Object(m)).expect("serializable"));
            } else if let Some(Value::Array(checks)) = m.get("checks") {
                for c in checks {
                    let status = c["status"].as_str().unwrap_or("?").to_uppercase();
                    println!("{status} {} ({})", c["id"].as_str().unwrap_or("?"), c["anchor"].as_str().unwrap_or(""));
                    if status != "PASS" {
                        println!("  witness: {}", c["witness"]);
                    }
                }
            } else {
                print!("{}", render_text(&m));
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if json_out {
                println!("{}", json!({ "schema": SCHEMA, "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(if e.is::<Usage>() { 2 } else { 1 })
        }
    }
}

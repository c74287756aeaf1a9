use std::fs;
use std::io::Write;
use std::path::Path;

use evcyc_core::certificate::CertificateFile;
use evcyc_core::decompose::decompose_realized;
use evcyc_core::graph::GraphFile;
use evcyc_core::oracle::{oracle_decompose, oracle_is_strongly_ecd, OracleBounds, Verdict};
use evcyc_core::recipe::{random_even_signature, random_recipe, realize, Realized};
use evcyc_core::subdivision::{lift_certificate, subdivide, SubdivisionProfile};
use evcyc_core::{validate_certificate, CycleDecomposition, Error, Recipe, SignedMultigraph};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::{Cli, Command};

pub const OK: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const PRECONDITION: u8 = 2;
pub const PARSE: u8 = 3;
pub const INTERNAL: u8 = 4;
pub const BOUNDS: u8 = 5;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: PARSE,
            message: message.into(),
        }
    }
}

/// Library errors on already parsed input.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Precondition(_) | Error::OddSignature | Error::EvenSignature | Error::NotEulerian | Error::BadLength(_) => PRECONDITION,
            Error::BoundExceeded { .. } => BOUNDS,
            Error::Internal(_) | Error::InvalidCertificate(_) => INTERNAL,
            _ => PARSE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<SignedMultigraph, Failure> {
    let f: GraphFile = read_json(path)?;
    SignedMultigraph::try_from(&f).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure {
        code: INTERNAL,
        message: format!("write failed: {e}"),
    };
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(io),
        None => writeln!(std::io::stdout().lock(), "{text}").map_err(io),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let bounds = OracleBounds {
        max_edges: cli.max_edges as usize,
        max_dim: cli.max_dim as usize,
    };
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Decompose {
            recipe,
            signature,
            graph_out,
        } => decompose(out, cli.seed, recipe, signature.as_deref(), graph_out.as_deref()),
        Command::Verify { graph, certificate } => verify(out, graph, certificate),
        Command::Oracle { graph } => oracle(out, &bounds, graph),
        Command::Classify { graph } => classify(out, &bounds, cli.jobs as usize, graph),
        Command::Fuzz {
            count,
            budget,
            signatures,
            oracle_edges,
        } => fuzz(
            out,
            &bounds,
            cli.jobs as usize,
            FuzzPlan {
                seed: cli.seed,
                count: *count,
                budget: *budget,
                signatures: *signatures,
                oracle_edges: *oracle_edges,
            },
        ),
        Command::Subdivide {
            graph,
            profile,
            certificate,
        } => subdivide_cmd(out, graph, profile, certificate.as_deref()),
    }
}

fn signature_from_ids(g: &SignedMultigraph, ids: &[String]) -> Result<Vec<bool>, Failure> {
    let mut odd = vec![false; g.edge_count()];
    for id in ids {
        let e = g.edge_by_id(id).map_err(|e| Failure::parse(e.to_string()))?;
        odd[e] = true;
    }
    Ok(odd)
}

fn decompose(out: Option<&Path>, seed: u64, recipe: &Path, signature: Option<&Path>, graph_out: Option<&Path>) -> Outcome {
    let text = read(recipe)?;
    let r = Recipe::from_json(&text).map_err(|e| Failure::parse(format!("{}: {e}", recipe.display())))?;
    let re = realize(&r)?;
    let odd = match signature {
        Some(p) => signature_from_ids(&re.graph, &read_json::<Vec<String>>(p)?)?,
        None => random_even_signature(seed, re.graph.edge_count()),
    };
    let g = re.graph.with_signature(&odd)?;
    let (d, _) = decompose_realized(&re, &odd)?;
    if let Some(p) = graph_out {
        write_to(Some(p), &g.to_json())?;
    }
    write_to(out, &d.to_json(&g))?;
    eprintln!("{} cycles, longest {}", d.cycles.len(), d.max_cycle_len());
    Ok(OK)
}

fn verify(out: Option<&Path>, graph: &Path, certificate: &Path) -> Outcome {
    let g = read_graph(graph)?;
    let f: CertificateFile = read_json(certificate)?;
    // Unknown edge ids are a violation of the pair, not a parse error.
    let known = f.cycles.iter().flatten().find(|id| g.edge_by_id(id).is_err());
    let report = match known {
        Some(id) => Err(json!({
            "cycle": f.cycles.iter().position(|c| c.contains(id)),
            "kind": "unknown-edge",
            "reason": "unknown edge",
            "detail": format!("edge id `{id}` is not in the graph"),
        })),
        None => {
            let d = CycleDecomposition::from_file(&g, &f)?;
            validate_certificate(&g, &d).map_err(|v| serde_json::to_value(v).expect("violation serializes"))
        }
    };
    match report {
        Ok(()) => {
            write_to(out, &pretty(&json!({ "valid": true })))?;
            Ok(OK)
        }
        Err(v) => {
            write_to(out, &pretty(&json!({ "valid": false, "violation": v })))?;
            Ok(NEGATIVE)
        }
    }
}

fn oracle(out: Option<&Path>, bounds: &OracleBounds, graph: &Path) -> Outcome {
    let g = read_graph(graph)?;
    match oracle_decompose(&g, bounds)? {
        Some(d) => {
            write_to(out, &d.to_json(&g))?;
            Ok(OK)
        }
        None => {
            write_to(out, "null")?;
            Ok(NEGATIVE)
        }
    }
}

fn classify(out: Option<&Path>, bounds: &OracleBounds, jobs: usize, graph: &Path) -> Outcome {
    let g = read_graph(graph)?;
    let report = oracle_is_strongly_ecd(&g, bounds, jobs)?;
    write_to(out, &pretty(&report))?;
    Ok(if report.verdict == Verdict::StronglyDecomposable { OK } else { NEGATIVE })
}

struct FuzzPlan {
    seed: u64,
    count: u64,
    budget: usize,
    signatures: u64,
    oracle_edges: usize,
}

#[derive(Serialize)]
struct FuzzCase {
    case: u64,
    recipe: String,
    edges: usize,
    signature_seed: u64,
    status: &'static str,
    oracle: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct FuzzSummary {
    seed: u64,
    count: u64,
    budget: usize,
    passed: usize,
    failed: usize,
    cases: Vec<FuzzCase>,
}

/// Case `i` uses recipe seed `seed + i`; its `j`-th signature uses seed
/// `(seed + i) * signatures + j`.
fn fuzz_case(bounds: &OracleBounds, plan: &FuzzPlan, case: u64, re: &Realized, j: u64) -> FuzzCase {
    let rs = plan.seed.wrapping_add(case);
    let ss = rs.wrapping_mul(plan.signatures).wrapping_add(j);
    let m = re.graph.edge_count();
    let odd = random_even_signature(ss, m);
    let mut fc = FuzzCase {
        case,
        recipe: re.recipe.name().to_string(),
        edges: m,
        signature_seed: ss,
        status: "pass",
        oracle: "skipped",
        detail: None,
    };
    let outcome = decompose_realized(re, &odd);
    if let Err(e) = &outcome {
        fc.status = "fail";
        fc.detail = Some(e.to_string());
    }
    if m <= plan.oracle_edges {
        let g = re.graph.with_signature(&odd).expect("signature fits");
        match oracle_decompose(&g, bounds) {
            Ok(Some(_)) if outcome.is_ok() => fc.oracle = "agree",
            Ok(Some(_)) => fc.oracle = "disagree",
            Ok(None) => {
                fc.oracle = "disagree";
                fc.status = "fail";
                fc.detail = Some("oracle finds no decomposition".into());
            }
            Err(e) => {
                fc.oracle = "error";
                fc.status = "fail";
                fc.detail = Some(e.to_string());
            }
        }
    }
    fc
}

fn fuzz(out: Option<&Path>, bounds: &OracleBounds, jobs: usize, plan: FuzzPlan) -> Outcome {
    let recipes = (0..plan.count)
        .map(|i| {
            let r = random_recipe(plan.seed.wrapping_add(i), plan.budget)?;
            realize(&r)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let jobs_list: Vec<(u64, u64)> = (0..plan.count).flat_map(|i| (0..plan.signatures).map(move |j| (i, j))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure {
            code: INTERNAL,
            message: e.to_string(),
        })?;
    let cases: Vec<FuzzCase> = pool.install(|| {
        jobs_list
            .par_iter()
            .map(|&(i, j)| fuzz_case(bounds, &plan, i, &recipes[i as usize], j))
            .collect()
    });
    let failed = cases.iter().filter(|c| c.status != "pass").count();
    let summary = FuzzSummary {
        seed: plan.seed,
        count: plan.count,
        budget: plan.budget,
        passed: cases.len() - failed,
        failed,
        cases,
    };
    write_to(out, &pretty(&summary))?;
    Ok(if failed == 0 { OK } else { NEGATIVE })
}

fn subdivide_cmd(out: Option<&Path>, graph: &Path, profile: &Path, certificate: Option<&Path>) -> Outcome {
    let g = read_graph(graph)?;
    let p: SubdivisionProfile = read_json(profile)?;
    let sub = subdivide(&g, &p)?;
    let mut report = json!({
        "subdivided": GraphFile::from(&sub.h),
        "induced": GraphFile::from(&sub.induced),
    });
    if let Some(c) = certificate {
        let f: CertificateFile = read_json(c)?;
        let d = CycleDecomposition::from_file(&sub.induced, &f).map_err(|e| Failure::parse(e.to_string()))?;
        let lifted = lift_certificate(&g, &p, &d).map_err(|e| match e {
            Error::InvalidCertificate(v) => Failure {
                code: NEGATIVE,
                message: format!("certificate does not validate on the induced graph: {v}"),
            },
            e => e.into(),
        })?;
        report["certificate"] = serde_json::to_value(lifted.to_file(&sub.h)).expect("certificate serializes");
    }
    write_to(out, &pretty(&report))?;
    Ok(OK)
}

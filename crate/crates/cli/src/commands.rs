use std::fmt::Write as _;
use std::fs;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sombor_core::decomposition::ReplayRow;
use sombor_core::oracle::random_tree_with_degrees;
use sombor_core::swap::SwapStep;
use sombor_core::{
    build_greedy_tree, decompose, enumerate_trees, local_search, prufer_encode, sweep, tree_count, verify_minimality,
    DegreeIndex, DegreeSequence, OracleError, SearchConfig, Strategy, Tree, VerificationReport, VerifyOptions,
};

use crate::args::{Cli, Command, Format};
use crate::error::{CliError, EXIT_BUDGET, EXIT_VERIFICATION};

/// Rendered output plus the exit code it should end with.
pub struct Outcome {
    pub body: String,
    pub exit: u8,
}

impl Outcome {
    fn ok(body: String) -> Outcome {
        Outcome { body, exit: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Greedy => greedy(cli),
        Command::Index => index(cli),
        Command::Optimize => optimize(cli),
        Command::Enumerate => enumerate(cli),
        Command::Verify => verify(cli),
        Command::Sweep => sweep_cmd(cli),
        Command::Decompose => decompose_cmd(cli),
    }
}

fn num(x: f64) -> String {
    format!("{x:.9}")
}

/// JSON numbers carry the same nine decimals as the text output.
fn r9(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

fn tree_json(tree: &Tree) -> Value {
    json!({ "n": tree.vertex_count(), "edges": tree.edges() })
}

fn json_body(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    out.push('\n');
    out
}

fn unsupported(cli: &Cli) -> CliError {
    CliError::Usage(format!("format {:?} is not available for {}", cli.format, cli.command.name()))
}

fn degrees(cli: &Cli) -> Result<Option<DegreeSequence>, CliError> {
    cli.degrees.as_deref().map(|s| s.parse::<DegreeSequence>().map_err(CliError::from)).transpose()
}

fn require_degrees(cli: &Cli) -> Result<DegreeSequence, CliError> {
    degrees(cli)?.ok_or_else(|| CliError::Usage(format!("{} needs -d/--degrees", cli.command.name())))
}

fn read_tree(cli: &Cli) -> Result<Option<Tree>, CliError> {
    let Some(path) = &cli.input else { return Ok(None) };
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })?;
    let tree =
        if text.trim_start().starts_with('{') { serde_json::from_str(&text)? } else { Tree::parse_edge_list(&text)? };
    Ok(Some(tree))
}

/// The tree from `--input`, or the greedy tree for `-d`.
fn input_or_greedy(cli: &Cli) -> Result<Tree, CliError> {
    if let Some(tree) = read_tree(cli)? {
        return Ok(tree);
    }
    match degrees(cli)? {
        Some(d) => Ok(build_greedy_tree(&d).into_tree()),
        None => Err(CliError::Usage(format!("{} needs --input or -d/--degrees", cli.command.name()))),
    }
}

fn edge_list_with_header(tree: &Tree, header: &[String]) -> String {
    let mut out = String::new();
    for line in header {
        let _ = writeln!(out, "# {line}");
    }
    out.push_str(&tree.to_edge_list());
    out
}

fn edge_csv(tree: &Tree) -> String {
    let mut out = String::from("u,v,deg_u,deg_v,weight\n");
    for &(u, v) in tree.edges() {
        let (du, dv) = (tree.degree(u), tree.degree(v));
        let w = ((du * du + dv * dv) as f64).sqrt();
        let _ = writeln!(out, "{u},{v},{du},{dv},{}", num(w));
    }
    out
}

fn greedy(cli: &Cli) -> Result<Outcome, CliError> {
    let d = require_degrees(cli)?;
    let rooted = build_greedy_tree(&d);
    let tree = rooted.tree();
    let so = tree.sombor();
    let body = match cli.format {
        Format::Text => edge_list_with_header(
            tree,
            &[
                format!("greedy tree for {d}, {} vertices, root {}", tree.vertex_count(), rooted.root()),
                format!("SO = {}", num(so)),
            ],
        ),
        Format::Json => json_body(&json!({
            "command": "greedy",
            "degree_sequence": d,
            "root": rooted.root(),
            "tree": tree_json(tree),
            "sombor": r9(so),
        })),
        Format::Dot => tree.to_dot("greedy"),
        Format::Csv => edge_csv(tree),
    };
    Ok(Outcome::ok(body))
}

fn index(cli: &Cli) -> Result<Outcome, CliError> {
    let tree = input_or_greedy(cli)?;
    let values: Vec<(&str, f64)> = DegreeIndex::ALL.iter().map(|&i| (i.name(), tree.index(&i))).collect();
    let body = match cli.format {
        Format::Text => {
            let mut out =
                format!("vertices = {}\ndegree sequence = {}\n", tree.vertex_count(), tree.internal_degree_sequence());
            for (name, v) in &values {
                let _ = writeln!(out, "{name} = {}", num(*v));
            }
            out
        }
        Format::Json => {
            let indices: serde_json::Map<String, Value> =
                values.iter().map(|(name, v)| (name.to_string(), json!(r9(*v)))).collect();
            json_body(&json!({
                "command": "index",
                "degree_sequence": tree.internal_degree_sequence(),
                "tree": tree_json(&tree),
                "indices": indices,
            }))
        }
        Format::Csv => {
            let mut out = String::from("index,value\n");
            for (name, v) in &values {
                let _ = writeln!(out, "{name},{}", num(*v));
            }
            out
        }
        Format::Dot => return Err(unsupported(cli)),
    };
    Ok(Outcome::ok(body))
}

fn step_json(i: usize, step: &SwapStep) -> Value {
    json!({
        "step": i + 1,
        "removed": step.swap.removed,
        "added": step.swap.added,
        "predicted_delta": r9(step.swap.predicted_delta),
        "sombor": r9(step.sombor),
    })
}

fn optimize(cli: &Cli) -> Result<Outcome, CliError> {
    let start = match read_tree(cli)? {
        Some(tree) => tree,
        None => {
            let d = degrees(cli)?.ok_or_else(|| CliError::Usage("optimize needs --input or -d/--degrees".into()))?;
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            random_tree_with_degrees(&d, &mut rng)
        }
    };
    let strategy = if cli.best { Strategy::BestImprovement } else { Strategy::FirstImprovement };
    let out = local_search(&start, SearchConfig { strategy, step_limit: None })?;
    let greedy_value = build_greedy_tree(&out.tree.internal_degree_sequence()).tree().sombor();

    let body = match cli.format {
        Format::Text => {
            let mut header = vec![
                format!("swaps = {}", out.steps),
                format!("initial SO = {}", num(out.initial_sombor)),
                format!("final SO = {}", num(out.final_sombor)),
                format!("greedy SO = {}", num(greedy_value)),
            ];
            if cli.trace {
                for (i, s) in out.trace.iter().enumerate() {
                    let [(a, b), (c, e)] = s.swap.removed;
                    let [(f, g), (h, k)] = s.swap.added;
                    header.push(format!(
                        "step {}: -{a}-{b} -{c}-{e} +{f}-{g} +{h}-{k} delta = {} SO = {}",
                        i + 1,
                        num(s.swap.predicted_delta),
                        num(s.sombor)
                    ));
                }
            }
            edge_list_with_header(&out.tree, &header)
        }
        Format::Json => {
            let mut value = json!({
                "command": "optimize",
                "degree_sequence": out.tree.internal_degree_sequence(),
                "swaps": out.steps,
                "initial_sombor": r9(out.initial_sombor),
                "final_sombor": r9(out.final_sombor),
                "greedy_sombor": r9(greedy_value),
                "initial_tree": tree_json(&start),
                "tree": tree_json(&out.tree),
            });
            if cli.trace {
                value["trace"] = out.trace.iter().enumerate().map(|(i, s)| step_json(i, s)).collect();
            }
            json_body(&value)
        }
        Format::Csv => {
            let mut csv = String::from("step,removed_1,removed_2,added_1,added_2,predicted_delta,sombor\n");
            let _ = writeln!(csv, "0,,,,,,{}", num(out.initial_sombor));
            for (i, s) in out.trace.iter().enumerate() {
                let [(a, b), (c, e)] = s.swap.removed;
                let [(f, g), (h, k)] = s.swap.added;
                let _ = writeln!(
                    csv,
                    "{},{a}-{b},{c}-{e},{f}-{g},{h}-{k},{},{}",
                    i + 1,
                    num(s.swap.predicted_delta),
                    num(s.sombor)
                );
            }
            csv
        }
        Format::Dot => out.tree.to_dot("optimized"),
    };
    Ok(Outcome::ok(body))
}

fn code_string(tree: &Tree) -> String {
    let code = prufer_encode(tree);
    code.as_slice().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn enumerate(cli: &Cli) -> Result<Outcome, CliError> {
    let d = require_degrees(cli)?;
    let expected = tree_count(&d).unwrap_or(u128::MAX);
    let trees = enumerate_trees(&d, cli.budget)?;

    if cli.format == Format::Csv {
        let mut out = String::from("index,prufer,sombor\n");
        for (i, t) in trees.enumerate() {
            let _ = writeln!(out, "{i},{},{}", code_string(&t), num(t.sombor()));
        }
        return Ok(Outcome::ok(out));
    }

    let mut count: u64 = 0;
    let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut classes = std::collections::HashSet::new();
    let mut minimizers = std::collections::HashSet::new();
    let mut min_tree = None;
    for t in trees {
        count += 1;
        let so = t.sombor();
        let form = t.canonical_form();
        if so < min - 1e-9 {
            min = so;
            minimizers.clear();
            min_tree = Some(t.clone());
        }
        if (so - min).abs() <= 1e-9 {
            minimizers.insert(form.clone());
        }
        max = max.max(so);
        classes.insert(form);
    }
    let min_tree = min_tree.expect("every valid sequence has a tree");
    let body = match cli.format {
        Format::Text => format!(
            "degree sequence = {d}\nvertices = {}\nlabeled trees = {count}\nexpected count = {expected}\nisomorphism classes = {}\nmin SO = {}\nmax SO = {}\nminimizing classes = {}\n",
            d.total_vertices(),
            classes.len(),
            num(min),
            num(max),
            minimizers.len()
        ),
        Format::Json => json_body(&json!({
            "command": "enumerate",
            "degree_sequence": d,
            "vertices": d.total_vertices(),
            "labeled_count": count,
            "expected_count": expected as u64,
            "isomorphism_classes": classes.len(),
            "min_sombor": r9(min),
            "max_sombor": r9(max),
            "minimizing_classes": minimizers.len(),
            "argmin": tree_json(&min_tree),
        })),
        Format::Dot => min_tree.to_dot("argmin"),
        Format::Csv => unreachable!("handled above"),
    };
    Ok(Outcome::ok(body))
}

fn verify_options(cli: &Cli) -> VerifyOptions {
    VerifyOptions { budget: cli.budget, count_classes: !cli.no_classes, tolerance: cli.tol }
}

fn report_json(r: &VerificationReport) -> Value {
    json!({
        "degree_sequence": r.degree_sequence,
        "vertices": r.vertices,
        "greedy_sombor": r9(r.greedy_value),
        "oracle_min": r9(r.oracle_min),
        "labeled_count": r.labeled_count,
        "isomorphism_classes": r.isomorphism_classes,
        "argmin": tree_json(&r.argmin),
        "pass": r.pass,
    })
}

fn verify(cli: &Cli) -> Result<Outcome, CliError> {
    let d = require_degrees(cli)?;
    let r = verify_minimality(&d, verify_options(cli))?;
    let exit = if r.pass { 0 } else { EXIT_VERIFICATION };
    let classes = r.isomorphism_classes.map_or_else(|| "-".to_string(), |c| c.to_string());
    let body = match cli.format {
        Format::Text => format!(
            "degree sequence = {}\nvertices = {}\ngreedy SO = {}\noracle min = {}\nlabeled trees = {}\nisomorphism classes = {classes}\nresult = {}\n",
            r.degree_sequence,
            r.vertices,
            num(r.greedy_value),
            num(r.oracle_min),
            r.labeled_count,
            if r.pass { "pass" } else { "FAIL" }
        ),
        Format::Json => {
            let mut value = serde_json::Map::new();
            value.insert("command".into(), json!("verify"));
            if let Value::Object(fields) = report_json(&r) {
                value.extend(fields);
            }
            json_body(&Value::Object(value))
        }
        Format::Csv => format!("{SWEEP_HEADER}\n{}\n", sweep_row(&r.degree_sequence, Ok(&r))),
        Format::Dot => r.argmin.to_dot("argmin"),
    };
    Ok(Outcome { body, exit })
}

const SWEEP_HEADER: &str = "degree_sequence,vertices,labeled_count,isomorphism_classes,greedy_sombor,oracle_min,status";

fn sweep_row(d: &DegreeSequence, outcome: Result<&VerificationReport, &OracleError>) -> String {
    let seq = d.as_slice().iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    match outcome {
        Ok(r) => format!(
            "{seq},{},{},{},{},{},{}",
            r.vertices,
            r.labeled_count,
            r.isomorphism_classes.map_or_else(String::new, |c| c.to_string()),
            num(r.greedy_value),
            num(r.oracle_min),
            if r.pass { "pass" } else { "fail" }
        ),
        Err(OracleError::BudgetExceeded { count, .. }) => {
            format!("{seq},{},{count},,,,skipped", d.total_vertices())
        }
        Err(e) => format!("{seq},{},,,,,error: {e}", d.total_vertices()),
    }
}

fn sweep_cmd(cli: &Cli) -> Result<Outcome, CliError> {
    let entries = sweep(cli.max_n, verify_options(cli));
    let mut failed = 0;
    let mut skipped = 0;
    for e in &entries {
        match &e.outcome {
            Ok(r) if r.pass => {}
            Ok(_) | Err(OracleError::CountMismatch { .. }) | Err(OracleError::InvalidCode(..)) => failed += 1,
            Err(OracleError::BudgetExceeded { .. }) => skipped += 1,
        }
    }
    let passed = entries.len() - failed - skipped;
    let exit = if failed > 0 {
        EXIT_VERIFICATION
    } else if skipped > 0 {
        EXIT_BUDGET
    } else {
        0
    };

    let body = match cli.format {
        Format::Text | Format::Csv => {
            let mut out = format!("{SWEEP_HEADER}\n");
            for e in &entries {
                let _ = writeln!(out, "{}", sweep_row(&e.degree_sequence, e.outcome.as_ref()));
            }
            if cli.format == Format::Text {
                let _ = writeln!(
                    out,
                    "# {} sequences up to {} vertices: {passed} passed, {failed} failed, {skipped} skipped",
                    entries.len(),
                    cli.max_n
                );
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = entries
                .iter()
                .map(|e| match &e.outcome {
                    Ok(r) => {
                        let mut v = report_json(r);
                        v["status"] = json!(if r.pass { "pass" } else { "fail" });
                        v
                    }
                    Err(err) => json!({
                        "degree_sequence": e.degree_sequence,
                        "vertices": e.degree_sequence.total_vertices(),
                        "status": if matches!(err, OracleError::BudgetExceeded { .. }) { "skipped" } else { "error" },
                        "message": err.to_string(),
                    }),
                })
                .collect();
            json_body(&json!({
                "command": "sweep",
                "max_n": cli.max_n,
                "budget": cli.budget,
                "passed": passed,
                "failed": failed,
                "skipped": skipped,
                "results": rows,
            }))
        }
        Format::Dot => return Err(unsupported(cli)),
    };
    Ok(Outcome { body, exit })
}

fn replay_json(row: &ReplayRow) -> Value {
    json!({
        "t": row.t,
        "d_t": row.d_t,
        "d_p": row.d_p,
        "delta": r9(row.delta),
        "running_total": r9(row.running_total),
    })
}

fn decompose_cmd(cli: &Cli) -> Result<Outcome, CliError> {
    let tree = input_or_greedy(cli)?;
    let dec = decompose(&tree)?;
    let rows = dec.replay();
    let direct = tree.sombor();
    let replayed = dec.replayed_value();
    let body = match cli.format {
        Format::Text => {
            let mut out = format!(
                "degree sequence = {}\nbase = star with {} leaves, SO = {}\n",
                tree.internal_degree_sequence(),
                dec.base.vertex_count() - 1,
                num(dec.base_value)
            );
            for r in &rows {
                let _ = writeln!(
                    out,
                    "t = {}: d_t = {}, d_p = {}, delta = {}, SO = {}",
                    r.t,
                    r.d_t,
                    r.d_p,
                    num(r.delta),
                    num(r.running_total)
                );
            }
            let _ = writeln!(out, "replayed SO = {}\ndirect SO = {}", num(replayed), num(direct));
            out
        }
        Format::Json => json_body(&json!({
            "command": "decompose",
            "degree_sequence": tree.internal_degree_sequence(),
            "base": tree_json(&dec.base),
            "base_sombor": r9(dec.base_value),
            "steps": rows.iter().map(replay_json).collect::<Vec<_>>(),
            "replayed_sombor": r9(replayed),
            "direct_sombor": r9(direct),
        })),
        Format::Csv => {
            let mut out = String::from("t,d_t,d_p,delta,running_total\n");
            let _ = writeln!(out, "1,{},,,{}", dec.base.vertex_count() - 1, num(dec.base_value));
            for r in &rows {
                let _ = writeln!(out, "{},{},{},{},{}", r.t, r.d_t, r.d_p, num(r.delta), num(r.running_total));
            }
            out
        }
        Format::Dot => dec.base.to_dot("base"),
    };
    Ok(Outcome::ok(body))
}

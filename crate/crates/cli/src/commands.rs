use std::fmt::Write as _;
use std::fs;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use partlab_core::arith::{
    coprime_prefix, eventually_strictly_increasing, frobenius_threshold, gcd_of_set, gcd_slice,
    is_eventually_positive, FiniteCoprimeSet,
};
use partlab_core::setspec::anchors_to_text;
use partlab_core::{
    construct_sparse_set, count_partitions, count_table, parse_set_spec, BigCount, BoundEntry,
    BoundId, BoundReport, BoundValue, EpsilonTable, IntegerSetSpec, SetKind, Verdict,
};

use crate::config::{AnalyzeArgs, CountArgs, ExploreArgs, Format, SetArgs, SparseArgs, TableArgs, VerifyArgs};
use crate::error::CliError;
use crate::suites::{run_suite, SuiteContext, SuiteResult, SUITES};

/// Largest `n` accepted for tables, to keep memory bounded.
pub const MAX_N: u64 = 100_000_000;

/// Rendered output and the exit code to finish with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, exit: 0 }
    }
}

type CmdResult = Result<Outcome, CliError>;

fn parse_sets(args: &SetArgs) -> Result<(IntegerSetSpec, IntegerSetSpec), CliError> {
    let parts = parse_set_spec(&args.parts, SetKind::Parts)?;
    let mults = parse_set_spec(&args.mults, SetKind::Multiplicities)?;
    Ok((parts, mults))
}

fn check_size(n: u64) -> Result<(), CliError> {
    if n > MAX_N {
        return Err(CliError::Usage(format!("n = {n} exceeds the limit {MAX_N}")));
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn count(args: &CountArgs) -> CmdResult {
    let (parts, mults) = parse_sets(&args.sets)?;
    check_size(args.n)?;
    let c: BigCount = count_partitions(args.n, &parts, &mults)?;
    let text = match args.output.format {
        Format::Table => format!("{c}\n"),
        Format::Csv => format!("n,count\n{},{c}\n", args.n),
        Format::Json => pretty(&json!({
            "n": args.n, "parts": parts.to_string(), "mults": mults.to_string(), "count": c.to_string(),
        })),
    };
    Ok(Outcome::ok(text))
}

fn parse_bound_ids(names: &[String]) -> Result<Vec<BoundId>, CliError> {
    let mut ids = Vec::new();
    for name in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        if name == "all" {
            ids.extend(BoundId::ALL);
            continue;
        }
        let id = BoundId::parse(name).ok_or_else(|| {
            let known: Vec<&str> = BoundId::ALL.iter().map(|b| b.as_str()).collect();
            CliError::Usage(format!("unknown bound {name:?}; known: {}", known.join(",")))
        })?;
        ids.push(id);
    }
    ids.dedup();
    Ok(ids)
}

fn value_cell(entry: &BoundEntry, digits: u32) -> String {
    match &entry.value {
        Some(BoundValue::Count(c)) => c.to_string(),
        Some(BoundValue::Exact(r)) => r.to_string(),
        Some(v @ BoundValue::Real(_)) => v.render(digits as usize),
        None => String::new(),
    }
}

fn entry_json(entry: &BoundEntry, digits: u32) -> Value {
    let mut m = Map::new();
    m.insert("applicable".into(), Value::from(entry.applicable));
    m.insert("direction".into(), Value::from(entry.direction.as_str()));
    if let Some(v) = &entry.value {
        let kind = match v {
            BoundValue::Count(_) => "count",
            BoundValue::Exact(_) => "exact",
            BoundValue::Real(_) => "real",
        };
        m.insert("kind".into(), Value::from(kind));
        m.insert("value".into(), Value::from(value_cell(entry, digits)));
        if let BoundValue::Real(r) = v {
            m.insert("precision".into(), Value::from(r.digits()));
        }
    }
    if let Some(verdict) = entry.verdict {
        m.insert("verdict".into(), Value::from(verdict.as_str()));
        m.insert("satisfied".into(), Value::from(verdict == Verdict::Satisfied));
    }
    if let Some(r) = entry.ratio {
        m.insert("ratio".into(), Value::from(format!("{r:.12}")));
    }
    Value::Object(m)
}

fn align(rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn table(args: &TableArgs) -> CmdResult {
    let (parts, mults) = parse_sets(&args.sets)?;
    check_size(args.upto)?;
    let ids = parse_bound_ids(&args.bounds)?;
    let digits = args.output.precision;
    let t = count_table::<BigCount>(args.upto, &parts, &mults)?;
    let reports = (0..=args.upto)
        .map(|n| BoundReport::evaluate(n, &t, &ids, digits))
        .collect::<Result<Vec<_>, _>>()?;

    let text = match args.output.format {
        Format::Json => {
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let bounds: Map<String, Value> = r
                        .entries
                        .iter()
                        .map(|e| (e.id.to_string(), entry_json(e, digits)))
                        .collect();
                    json!({ "n": r.n, "count": r.exact.to_string(), "bounds": bounds })
                })
                .collect();
            pretty(&json!({
                "parts": parts.to_string(), "mults": mults.to_string(), "precision": digits, "rows": rows,
            }))
        }
        format => {
            let mut rows = vec![["n", "count"]
                .into_iter()
                .map(String::from)
                .chain(ids.iter().map(|b| b.to_string()))
                .collect::<Vec<_>>()];
            for r in &reports {
                let mut row = vec![r.n.to_string(), r.exact.to_string()];
                for e in &r.entries {
                    let mut cell = value_cell(e, digits);
                    if format == Format::Table {
                        match e.verdict {
                            Some(Verdict::Violated) => cell.push_str(" (violated)"),
                            Some(Verdict::Undecided) => cell.push_str(" (undecided)"),
                            _ => {}
                        }
                    }
                    row.push(cell);
                }
                rows.push(row);
            }
            if format == Format::Csv {
                rows.iter().map(|r| r.join(",") + "\n").collect()
            } else {
                align(&rows)
            }
        }
    };
    Ok(Outcome::ok(text))
}

/// Elements whose removal leaves a non-coprime rest, with that gcd.
fn obstructions(set: &FiniteCoprimeSet) -> Vec<(u64, u64)> {
    let a = set.elements();
    (0..a.len())
        .filter_map(|i| {
            let rest: Vec<u64> = a.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
            let g = gcd_slice(&rest);
            (g != 1).then_some((a[i], g))
        })
        .collect()
}

pub fn analyze(args: &AnalyzeArgs) -> CmdResult {
    let (parts, mults) = parse_sets(&args.sets)?;
    let g = gcd_of_set(&parts);
    let mut m = Map::new();
    m.insert("parts".into(), Value::from(parts.to_string()));
    m.insert("mults".into(), Value::from(mults.to_string()));
    m.insert("gcd".into(), Value::from(g));
    m.insert("eventually_positive".into(), Value::from(is_eventually_positive(&parts)));
    let (prefix, trace) = match coprime_prefix(&parts) {
        Ok((p, t)) => (Value::from(p.elements().to_vec()), Value::from(t.gcds)),
        Err(_) => (Value::Null, Value::Null),
    };
    m.insert("coprime_prefix".into(), prefix.clone());
    m.insert("prefix_length".into(), prefix.as_array().map_or(Value::Null, |a| Value::from(a.len())));
    m.insert("prefix_gcds".into(), trace);
    let finite = FiniteCoprimeSet::try_from(&parts).ok();
    let criterion_inputs = finite.as_ref().filter(|_| mults.is_nat());
    m.insert("frobenius_threshold".into(), finite.as_ref().map_or(Value::Null, |s| Value::from(frobenius_threshold(s))));
    m.insert(
        "strictly_increasing".into(),
        criterion_inputs.map_or(Value::Null, |s| Value::from(eventually_strictly_increasing(s))),
    );
    m.insert(
        "obstructions".into(),
        criterion_inputs.map_or(Value::Null, |s| {
            Value::from(
                obstructions(s)
                    .into_iter()
                    .map(|(removed, gcd)| json!({ "removed": removed, "gcd_of_rest": gcd }))
                    .collect::<Vec<_>>(),
            )
        }),
    );
    let report = Value::Object(m);
    let text = match args.output.format {
        Format::Json => pretty(&report),
        Format::Csv => {
            let obj = report.as_object().expect("object");
            let header: Vec<&str> = obj.keys().map(String::as_str).collect();
            let row: Vec<String> = obj.values().map(csv_cell).collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
        Format::Table => key_values(report.as_object().expect("object")),
    };
    Ok(Outcome::ok(text))
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "n/a".into(),
        other => other.to_string(),
    }
}

fn csv_cell(v: &Value) -> String {
    let s = plain(v);
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn key_values(m: &Map<String, Value>) -> String {
    let width = m.keys().map(String::len).max().unwrap_or(0);
    m.iter().fold(String::new(), |mut out, (k, v)| {
        let _ = writeln!(out, "{k:<width$}  {}", plain(v));
        out
    })
}

/// Natural log of a positive big integer, in f64.
fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits < 1000 {
        return v.to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    (v >> shift).to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
}

/// Least-squares slope of `ln p` against `ln n` over the upper half of the range.
fn growth_slope(values: &[BigCount]) -> Option<f64> {
    let upto = values.len() as u64 - 1;
    let points: Vec<(f64, f64)> = ((upto / 2).max(2)..=upto)
        .filter(|&n| !values[n as usize].is_zero())
        .map(|n| ((n as f64).ln(), ln_big(&values[n as usize])))
        .collect();
    if points.len() < 2 {
        return None;
    }
    let k = points.len() as f64;
    let (sx, sy) = points.iter().fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / k, sy / k);
    let (num, den) = points
        .iter()
        .fold((0.0, 0.0), |(n, d), &(x, y)| (n + (x - mx) * (y - my), d + (x - mx) * (x - mx)));
    (den > 0.0).then(|| num / den)
}

pub fn explore(args: &ExploreArgs) -> CmdResult {
    let (parts, mults) = parse_sets(&args.sets)?;
    check_size(args.upto)?;
    let t = count_table::<BigCount>(args.upto, &parts, &mults)?;
    let v = t.values();
    let zeros: Vec<u64> = (0..=args.upto).filter(|&n| v[n as usize].is_zero()).collect();
    let (argmax, max) = v.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).expect("nonempty");
    let odd_zero = (1..=args.upto).step_by(2).all(|n| v[n as usize].is_zero());
    let slope = growth_slope(v);

    let text = match args.output.format {
        Format::Json => pretty(&json!({
            "parts": parts.to_string(),
            "mults": mults.to_string(),
            "upto": args.upto,
            "zeros": zeros,
            "zero_count": zeros.len(),
            "nonzero_count": v.len() - zeros.len(),
            "all_odd_zero": odd_zero,
            "max_count": max.to_string(),
            "max_at": argmax,
            "loglog_slope": slope.map(|s| format!("{s:.6}")),
        })),
        Format::Csv => {
            let mut out = String::from("n,count,zero\n");
            for (n, c) in v.iter().enumerate() {
                let _ = writeln!(out, "{n},{c},{}", u8::from(c.is_zero()));
            }
            out
        }
        Format::Table => {
            let shown: Vec<String> = zeros.iter().take(40).map(u64::to_string).collect();
            let more = if zeros.len() > 40 { format!(" ... ({} total)", zeros.len()) } else { String::new() };
            let mut m = Map::new();
            m.insert("parts".into(), Value::from(parts.to_string()));
            m.insert("mults".into(), Value::from(mults.to_string()));
            m.insert("zeros".into(), Value::from(format!("{}{more}", shown.join(" "))));
            m.insert("zero_count".into(), Value::from(zeros.len()));
            m.insert("all_odd_zero".into(), Value::from(odd_zero));
            m.insert("max_count".into(), Value::from(format!("{max} at n = {argmax}")));
            m.insert("loglog_slope".into(), slope.map_or(Value::Null, |s| Value::from(format!("{s:.6}"))));
            key_values(&m)
        }
    };
    Ok(Outcome::ok(text))
}

pub fn sparse(args: &SparseArgs) -> CmdResult {
    let text = fs::read_to_string(&args.eps)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", args.eps.display())))?;
    let eps = EpsilonTable::parse(&text)?;
    let set = construct_sparse_set(&eps)?;
    let anchors: Vec<u64> = set.iter().collect();
    let text = match args.output.format {
        Format::Json => pretty(&json!({ "anchors": anchors, "range_end": eps.end(), "spec": set.to_string() })),
        Format::Csv => std::iter::once("anchor\n".to_string()).chain(anchors.iter().map(|a| format!("{a}\n"))).collect(),
        Format::Table => anchors_to_text(&anchors),
    };
    Ok(Outcome::ok(text))
}

fn suite_json(r: &SuiteResult, timing: bool) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| json!({ "inputs": f.inputs, "expected": f.expected, "got": f.got }))
        .collect();
    let mut m = Map::new();
    m.insert("suite".into(), Value::from(r.suite.clone()));
    m.insert("cases".into(), Value::from(r.cases));
    m.insert("failures".into(), Value::from(failures));
    m.insert("onsets".into(), json!(r.onsets));
    m.insert("metrics".into(), Value::Object(r.metrics.clone().into_iter().collect()));
    if !r.suites.is_empty() {
        m.insert("suites".into(), Value::from(r.suites.iter().map(|s| suite_json(s, timing)).collect::<Vec<_>>()));
    }
    if timing {
        m.insert("elapsed_ms".into(), Value::from(r.elapsed_ms.unwrap_or(0) as u64));
    }
    Value::Object(m)
}

fn suite_text(r: &SuiteResult, timing: bool, out: &mut String) {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    let _ = write!(out, "{status} {}: {} cases, {} failures", r.suite, r.cases, r.failures.len());
    if timing {
        let _ = write!(out, ", {} ms", r.elapsed_ms.unwrap_or(0));
    }
    out.push('\n');
    if r.suites.is_empty() {
        for (k, v) in &r.onsets {
            let _ = writeln!(out, "  onset {k}: {v}");
        }
        for (k, v) in &r.metrics {
            let _ = writeln!(out, "  {k}: {}", plain(v));
        }
        for f in &r.failures {
            let _ = writeln!(out, "  failure {}: expected {}, got {}", f.inputs, f.expected, f.got);
        }
    }
    for s in &r.suites {
        suite_text(s, timing, out);
    }
}

pub fn verify(args: &VerifyArgs) -> CmdResult {
    if args.list {
        let width = SUITES.iter().map(|s| s.name.len()).max().unwrap_or(0);
        let mut text: String = SUITES.iter().map(|s| format!("{:<width$}  {}\n", s.name, s.parameters)).collect();
        let _ = writeln!(text, "{:<width$}  every suite above, in order", "all");
        return Ok(Outcome::ok(text));
    }
    let name = args.suite.as_deref().expect("clap requires --suite without --list");
    let ctx = SuiteContext { digits: args.output.precision };
    let r = run_suite(name, &ctx).ok_or_else(|| {
        CliError::Usage(format!("unknown suite {name:?}; see `partlab verify --list`"))
    })?;
    let text = match args.output.format {
        Format::Json => pretty(&suite_json(&r, args.timing)),
        Format::Csv => {
            let rows = if r.suites.is_empty() { vec![&r] } else { r.suites.iter().chain([&r]).collect() };
            let mut out = String::from("suite,cases,failures\n");
            for s in rows {
                let _ = writeln!(out, "{},{},{}", s.suite, s.cases, s.failures.len());
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            suite_text(&r, args.timing, &mut out);
            out
        }
    };
    Ok(Outcome { text, exit: if r.passed() { 0 } else { 3 } })
}

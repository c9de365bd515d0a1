//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the per-criterion lines always appear in the output.

use std::process::{Command, ExitCode};

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use partlab::suites::{run_suite, SuiteContext, SuiteResult};
use partlab_core::arith::{eventually_strictly_increasing, frobenius_threshold, FiniteCoprimeSet};
use partlab_core::bounds::{
    debruijn_leading_term, hrr_leading_term, schur_asymptotic, Direction, Verdict,
};
use partlab_core::corpus::corpus;
use partlab_core::{
    brute_force_count, count_table, pentagonal_partition_numbers, BigCount, CountTable,
    ExactRational, HighPrecisionReal, IntegerSetSpec,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const CTX: SuiteContext = SuiteContext { digits: 50 };

fn suite(name: &str) -> SuiteResult {
    run_suite(name, &CTX).expect("known suite")
}

fn suite_clean(r: &SuiteResult) -> Outcome {
    match r.failures.first() {
        None => Ok(format!("{} cases, 0 failures", r.cases)),
        Some(f) => Err(format!(
            "{} failures of {} cases; first {}: expected {}, got {}",
            r.failures.len(),
            r.cases,
            f.inputs,
            f.expected,
            f.got
        )),
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fcs(v: &[u64]) -> FiniteCoprimeSet {
    FiniteCoprimeSet::new(v.iter().copied()).unwrap()
}

fn nat_table(n: u64, parts: &IntegerSetSpec) -> CountTable {
    count_table(n, parts, &IntegerSetSpec::nat()).unwrap()
}

fn as_q(v: &BigUint) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v.clone()))
}

fn c01_oracle() -> Outcome {
    let pairs = corpus();
    ensure(pairs.len() >= 12, "corpus smaller than 12 pairs")?;
    let dexp = IntegerSetSpec::DoublyExponential(2);
    ensure(
        pairs.iter().any(|p| p.parts == dexp && p.mults == IntegerSetSpec::with_zero(dexp.clone())),
        "corpus lacks dexp:2 / zero|dexp:2",
    )?;
    let mut checked = 0;
    for p in &pairs {
        let t = count_table::<BigCount>(30, &p.parts, &p.mults).map_err(|e| e.to_string())?;
        for n in 0..=30 {
            let b = brute_force_count(n, &p.parts, &p.mults).map_err(|e| e.to_string())?;
            ensure(t.at(n) == &b, format!("{} n={n}: dp {} brute {b}", p.label(), t.at(n)))?;
            checked += 1;
        }
    }
    Ok(format!("{} pairs, {checked} values agree", pairs.len()))
}

fn c02_pentagonal() -> Outcome {
    let t = nat_table(500, &IntegerSetSpec::all());
    let pent = pentagonal_partition_numbers(500);
    ensure(t.values() == pent.as_slice(), "DP and pentagonal recurrence differ")?;
    let p100 = BigUint::from(190_569_292u64);
    ensure(t.at(100) == &p100 && pent[100] == p100, "p(100) != 190569292")?;
    Ok("n <= 500 agree, p(100) = 190569292".into())
}

fn c03_product_upper() -> Outcome {
    suite_clean(&suite("eq4"))
}

fn c04_existence() -> Outcome {
    suite_clean(&suite("eq5"))
}

fn c05_schur() -> Outcome {
    let s = fcs(&[1, 2, 3]);
    let t = nat_table(2000, &s.to_spec());
    let scaled = (as_q(t.at(2000)) * ExactRational::from_integer(12.into())
        / ExactRational::from_integer(4_000_000.into()))
    .to_f64()
    .unwrap();
    ensure((scaled - 1.0).abs() <= 0.01, format!("{{1,2,3}}: 12 p / n^2 = {scaled}"))?;
    let s = fcs(&[3, 5, 7]);
    let t = nat_table(5000, &s.to_spec());
    let b: ExactRational = schur_asymptotic(5000, &s);
    let q = (as_q(t.at(5000)) / b).to_f64().unwrap();
    ensure((0.9..=1.1).contains(&q), format!("{{3,5,7}}: ratio {q}"))?;
    Ok(format!("{{1,2,3}} 12p/n^2 = {scaled:.6}, {{3,5,7}} ratio = {q:.6}"))
}

fn c06_hrr() -> Outcome {
    let t = nat_table(500, &IntegerSetSpec::all());
    let mut prev = 0.0;
    let mut shown = Vec::new();
    for n in [200u64, 300, 500] {
        let lead = hrr_leading_term(n, 50).to_rational();
        let q = (as_q(t.at(n)) / lead).to_f64().unwrap();
        ensure((0.90..=1.00).contains(&q), format!("n={n}: ratio {q}"))?;
        ensure(q > prev, format!("n={n}: ratio {q} not above {prev}"))?;
        prev = q;
        shown.push(format!("{n}: {q:.5}"));
    }
    Ok(shown.join(", "))
}

fn c07_debruijn() -> Outcome {
    let r = suite("debruijn");
    suite_clean(&r)?;
    let top = 1u64 << 16;
    let t = nat_table(2 * top, &IntegerSetSpec::Powers(2));
    let lp = HighPrecisionReal::ln_count(t.at(2 * top), 50).to_rational();
    let lead = debruijn_leading_term(top, 50).map_err(|e| e.to_string())?.to_rational();
    let q = (lp / lead).to_f64().unwrap();
    ensure((0.3..=1.5).contains(&q), format!("ratio {q} at n = 2^16"))?;
    Ok(format!("{} upper-bound cases hold; ratio at 2^16 = {q:.4}", r.cases - 1))
}

fn c08_harmonic_chain() -> Outcome {
    suite_clean(&suite("harmonic-chain"))
}

fn c09_sparse() -> Outcome {
    let r = suite("sparse-construction");
    suite_clean(&r)?;
    let anchors = r.metrics.get("anchors").cloned().unwrap_or_default();
    Ok(format!("anchors {anchors}, {} cases, 0 failures", r.cases))
}

fn c10_slow_growth() -> Outcome {
    let r = suite("slow-growth");
    suite_clean(&r)?;
    let slack = r.metrics.get("min_sufficient_slack").cloned().unwrap_or_default();
    let max = r.metrics.get("max_count").cloned().unwrap_or_default();
    Ok(format!("max p = {max}, minimal sufficient slack = {slack}"))
}

fn c11_frobenius() -> Outcome {
    ensure(frobenius_threshold(&fcs(&[3, 5])) == 8, "{3,5} != 8")?;
    ensure(frobenius_threshold(&fcs(&[6, 10, 15])) == 30, "{6,10,15} != 30")?;
    let mut pairs = 0;
    for a in 1..=30u64 {
        for b in (a + 1)..=30 {
            let Ok(s) = FiniteCoprimeSet::new([a, b]) else { continue };
            let expected = a * b + 1 - a - b;
            ensure(frobenius_threshold(&s) == expected, format!("{{{a},{b}}}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{{3,5}} = 8, {{6,10,15}} = 30, {pairs} coprime pairs match ab - a - b + 1"))
}

fn c12_monotonicity() -> Outcome {
    let r = suite("monotonicity-criterion");
    suite_clean(&r)?;
    ensure(!eventually_strictly_increasing(&fcs(&[2, 3])), "{2,3} criterion true")?;
    let t = nat_table(7, &IntegerSetSpec::finite([2, 3]));
    ensure(t.at(6) == &BigUint::from(2u32) && t.at(7) == &BigUint::from(1u32), "p(6), p(7) for {2,3}")?;
    ensure(eventually_strictly_increasing(&fcs(&[3, 4, 5])), "{3,4,5} criterion false")?;
    let sets = r.metrics.get("sets").cloned().unwrap_or_default();
    let counter = r.metrics.get("counterexample_2_3").cloned().unwrap_or_default();
    Ok(format!("{sets} sets agree; {{2,3}} counterexample {counter}; {{3,4,5}} clean"))
}

fn c13_padberg() -> Outcome {
    suite_clean(&suite("padberg"))
}

fn c14_record_and_refined() -> Outcome {
    for name in ["eq10", "refined"] {
        suite_clean(&suite(name)).map_err(|e| format!("{name}: {e}"))?;
    }
    let r = suite("sqrt-lower");
    suite_clean(&r).map_err(|e| format!("sqrt-lower: {e}"))?;
    let onset = |k: &str| r.onsets.get(k).copied();
    ensure(onset("sqrt_lower").is_some_and(|n| n <= 100), "sqrt_lower onset above 100")?;
    ensure(onset("classical_refined").is_some_and(|n| n <= 100), "classical_refined onset above 100")?;
    // spot check one verdict through the public verdict helper
    let t = nat_table(100, &IntegerSetSpec::all());
    let (_, v) = partlab_core::bounds::check_real(t.at(100), Direction::Lower, 50, |d| {
        partlab_core::bounds::classical_sqrt_lower(100, d)
    });
    ensure(v == Verdict::Satisfied, "e^10/100 <= p(100) not confirmed")?;
    Ok(format!(
        "record-index and refined bounds clean; onsets e^sqrt(n)/n = {}, e^(2 sqrt n)/(2 pi n^2) = {}",
        onset("sqrt_lower").unwrap(),
        onset("classical_refined").unwrap()
    ))
}

fn c15_determinism() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_partlab"))
            .args(["verify", "--suite", "all", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), format!("exit {:?}", out.status.code()))?;
        Ok::<_, String>(out.stdout)
    };
    let a = run()?;
    let b = run()?;
    ensure(!a.is_empty(), "empty report")?;
    ensure(a == b, "reports differ")?;
    let v: serde_json::Value = serde_json::from_slice(&a).map_err(|e| e.to_string())?;
    ensure(v["failures"].as_array().is_some_and(|f| f.is_empty()), "failures present")?;
    Ok(format!("two runs, {} identical bytes", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 15] = [
        ("oracle equivalence", c01_oracle),
        ("pentagonal cross-check", c02_pentagonal),
        ("product upper bound", c03_product_upper),
        ("existence lower bound", c04_existence),
        ("schur asymptotic", c05_schur),
        ("hardy-ramanujan ratio", c06_hrr),
        ("binary partitions", c07_debruijn),
        ("harmonic chain", c08_harmonic_chain),
        ("sparse construction", c09_sparse),
        ("slow growth", c10_slow_growth),
        ("frobenius threshold", c11_frobenius),
        ("monotonicity criterion", c12_monotonicity),
        ("padberg cumulative bound", c13_padberg),
        ("record-index and refined bounds", c14_record_and_refined),
        ("determinism", c15_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

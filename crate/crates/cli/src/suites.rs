//! Named verification suites. Each runs at fixed, documented parameters and
//! collects every failing case with the inputs needed to reproduce it.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use partlab_core::arith::{eventually_strictly_increasing, frobenius_threshold, FiniteCoprimeSet};
use partlab_core::bounds::{
    check_exact, check_log_real, check_real, classical_refined_comparison, classical_sqrt_lower,
    debruijn_leading_term, debruijn_upper_bound, existence_witness_in, harmonic_chain_bound,
    hrr_leading_term, monotone_lower_bound, padberg_lower, product_upper_bound,
    refined_lower_bound, schur_asymptotic, schur_style_point_lower, slow_growth_closed_form,
};
use partlab_core::corpus::{corpus, CorpusPair};
use partlab_core::counting::{brute_force_count, cumulative_sums};
use partlab_core::{
    construct_sparse_set, count_table, gcd_of_set, pentagonal_partition_numbers,
    CountTable, Direction, EpsilonTable, ExactRational, HighPrecisionReal, IntegerSetSpec, Verdict,
};

/// One failing case.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub inputs: Value,
    pub expected: String,
    pub got: String,
}

/// Outcome of one suite, or of `all` with the individual suites nested.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub onsets: BTreeMap<String, u64>,
    pub metrics: BTreeMap<String, Value>,
    pub elapsed_ms: Option<u128>,
    pub suites: Vec<SuiteResult>,
}

impl SuiteResult {
    fn new(suite: &str) -> Self {
        SuiteResult {
            suite: suite.to_string(),
            cases: 0,
            failures: Vec::new(),
            onsets: BTreeMap::new(),
            metrics: BTreeMap::new(),
            elapsed_ms: None,
            suites: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, inputs: Value, expected: impl ToString, got: impl ToString) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                inputs,
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn verdict(&mut self, v: Verdict, inputs: Value, expected: impl ToString, got: impl ToString) {
        self.check(v.is_satisfied(), inputs, expected, format!("{} ({})", got.to_string(), v.as_str()));
    }

    fn metric(&mut self, key: &str, value: impl Into<Value>) {
        self.metrics.insert(key.to_string(), value.into());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Settings shared by every suite.
#[derive(Debug, Clone, Copy)]
pub struct SuiteContext {
    pub digits: u32,
}

pub struct SuiteDef {
    pub name: &'static str,
    pub parameters: &'static str,
    run: fn(&SuiteContext) -> SuiteResult,
}

pub const SUITES: &[SuiteDef] = &[
    SuiteDef { name: "oracle", parameters: "DP vs brute force, corpus pairs, n <= 30", run: oracle },
    SuiteDef { name: "pentagonal", parameters: "parts all: DP vs pentagonal recurrence, n <= 500", run: pentagonal },
    SuiteDef { name: "frobenius", parameters: "{3,5}, {6,10,15}, coprime pairs a < b <= 30, corpus zero/positivity pattern", run: frobenius },
    SuiteDef { name: "eq4", parameters: "p <= prod M(n/a), corpus pairs, n <= 200", run: product_upper },
    SuiteDef { name: "eq5", parameters: "witness r <= n^2 with p(r) >= prod/(n^2+1), corpus pairs, 1 <= n <= 30", run: existence },
    SuiteDef { name: "monotone-lb", parameters: "corpus pairs nondecreasing on [0,200]: p >= monotone bound, 1 <= n <= 200", run: monotone_lb },
    SuiteDef { name: "schur", parameters: "{1,2,3} at n=2000 within 1%; {3,5,7} at n=5000 within 10%; {1,2,3} error shrinking over 500,1000,2000", run: schur },
    SuiteDef { name: "hrr", parameters: "p(n)/leading term in [0.90,1.00] and increasing for n in {200,300,500}", run: hrr },
    SuiteDef { name: "debruijn", parameters: "parts pow:2: log p(2n) <= log(2n+1) log2(2n) for n <= 4096; leading-term ratio in [0.3,1.5] at n=65536", run: debruijn },
    SuiteDef { name: "harmonic-chain", parameters: "p <= n^A(n) e^H_n, corpus part sets with nat, 1 <= n <= 200", run: harmonic_chain },
    SuiteDef { name: "padberg", parameters: "cumulative count >= (n+1)^k/(k! prod a), finite coprime corpus sets, n <= 500; equality for {1}", run: padberg },
    SuiteDef { name: "eq10", parameters: "p >= (n+1)^(k-1)/(k! prod a) at record indices n <= 500, finite coprime corpus sets", run: record_point },
    SuiteDef { name: "refined", parameters: "parts all: p >= refined bound for 10 <= n <= 2000; other coprime corpus sets reported", run: refined },
    SuiteDef { name: "sqrt-lower", parameters: "parts all: onsets of e^sqrt(n)/n and e^(2 sqrt n)/(2 pi n^2) over [1,2000]; both hold on [100,2000]", run: sqrt_lower },
    SuiteDef { name: "slow-growth", parameters: "dexp:2 / zero|dexp:2: p <= 4 lg n (lg lg n)^(lg lg n) for 16 <= n <= 2^20; p = 0 at odd n", run: slow_growth },
    SuiteDef { name: "monotonicity-criterion", parameters: "coprime sets, elements <= 12, k <= 4: criterion vs strict increase on [max(F + max^2, 1800), 2000]", run: monotonicity_criterion },
    SuiteDef { name: "sparse-construction", parameters: "eps = floor(lg lg x) on [2, 2^16]: A(n)+1 <= eps(n), p <= n^eps(n) and p <= n^A(n) e^H_n on [a_1, 2^16]", run: sparse_construction },
];

pub fn find_suite(name: &str) -> Option<&'static SuiteDef> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).chain(["all"]).collect()
}

/// Runs one named suite or `all`; `None` for an unknown name.
pub fn run_suite(name: &str, ctx: &SuiteContext) -> Option<SuiteResult> {
    if name == "all" {
        let mut all = SuiteResult::new("all");
        let start = Instant::now();
        for def in SUITES {
            let r = run_def(def, ctx);
            all.cases += r.cases;
            for f in &r.failures {
                let mut f = f.clone();
                if let Value::Object(map) = &mut f.inputs {
                    map.insert("suite".into(), Value::from(def.name));
                }
                all.failures.push(f);
            }
            for (k, v) in &r.onsets {
                all.onsets.insert(format!("{}.{k}", def.name), *v);
            }
            all.suites.push(r);
        }
        all.elapsed_ms = Some(start.elapsed().as_millis());
        return Some(all);
    }
    find_suite(name).map(|def| run_def(def, ctx))
}

fn run_def(def: &SuiteDef, ctx: &SuiteContext) -> SuiteResult {
    let start = Instant::now();
    let mut r = (def.run)(ctx);
    r.elapsed_ms = Some(start.elapsed().as_millis());
    r
}

fn pair_inputs(pair: &CorpusPair, n: u64) -> Value {
    json!({ "parts": pair.parts.to_string(), "mults": pair.mults.to_string(), "n": n })
}

fn set_inputs(parts: &IntegerSetSpec, n: u64) -> Value {
    json!({ "parts": parts.to_string(), "mults": "nat", "n": n })
}

fn table(n_max: u64, parts: &IntegerSetSpec, mults: &IntegerSetSpec) -> CountTable {
    count_table(n_max, parts, mults).expect("suite sets are valid")
}

fn big(v: &BigUint) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v.clone()))
}

fn ratio(a: &ExactRational, b: &ExactRational) -> f64 {
    (a / b).to_f64().unwrap_or(f64::NAN)
}

fn fixed(x: f64) -> String {
    format!("{x:.6}")
}

fn real(r: &HighPrecisionReal) -> String {
    r.to_scientific(20)
}

fn rational(r: &ExactRational) -> String {
    format!("{r} (~{})", partlab_core::real::format_scientific(r, 12))
}

/// Smallest tested `n` from which every later tested `n` holds; `None` when
/// the last tested value fails.
fn onset(results: &[(u64, bool)]) -> Option<u64> {
    let last_fail = results.iter().rposition(|&(_, ok)| !ok);
    match last_fail {
        None => results.first().map(|&(n, _)| n),
        Some(i) => results.get(i + 1).map(|&(n, _)| n),
    }
}

/// Finite coprime corpus sets with unrestricted multiplicities, deduplicated.
fn finite_coprime_sets() -> Vec<FiniteCoprimeSet> {
    let mut seen = BTreeSet::new();
    corpus()
        .into_iter()
        .filter(|p| p.mults.is_nat())
        .filter_map(|p| FiniteCoprimeSet::try_from(&p.parts).ok())
        .filter(|s| seen.insert(s.elements().to_vec()))
        .collect()
}

fn oracle(_: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("oracle");
    let pairs = corpus();
    for pair in &pairs {
        let t = table(30, &pair.parts, &pair.mults);
        for n in 0..=30 {
            let brute = brute_force_count(n, &pair.parts, &pair.mults).expect("n within cap");
            r.check(t.at(n) == &brute, pair_inputs(pair, n), &brute, t.at(n));
        }
    }
    r.metric("pairs", pairs.len());
    r
}

fn pentagonal(_: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("pentagonal");
    let t = table(500, &IntegerSetSpec::all(), &IntegerSetSpec::nat());
    let pent = pentagonal_partition_numbers(500);
    for n in 0..=500u64 {
        let expected = &pent[n as usize];
        r.check(t.at(n) == expected, set_inputs(&IntegerSetSpec::all(), n), expected, t.at(n));
    }
    let p100 = BigUint::from(190_569_292u64);
    r.check(pent[100] == p100 && t.at(100) == &p100, set_inputs(&IntegerSetSpec::all(), 100), &p100, t.at(100));
    r.metric("p100", t.at(100).to_string());
    r
}

fn frobenius(_: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("frobenius");
    let inputs = |s: &FiniteCoprimeSet| json!({ "parts": s.to_spec().to_string() });
    for (set, expected) in [(vec![3u64, 5], 8u64), (vec![6, 10, 15], 30)] {
        let s = FiniteCoprimeSet::new(set).expect("coprime");
        let got = frobenius_threshold(&s);
        r.check(got == expected, inputs(&s), expected, got);
    }
    let mut pairs = 0u64;
    for a in 1..=30u64 {
        for b in (a + 1)..=30 {
            let Ok(s) = FiniteCoprimeSet::new([a, b]) else { continue };
            let expected = a * b + 1 - a - b;
            let got = frobenius_threshold(&s);
            r.check(got == expected, inputs(&s), expected, got);
            pairs += 1;
        }
    }
    r.metric("coprime_pairs", pairs);
    for s in finite_coprime_sets() {
        let f = frobenius_threshold(&s);
        let top = f + 2 * s.max() + 100;
        let t = table(top, &s.to_spec(), &IntegerSetSpec::nat());
        if f > 0 {
            r.check(t.at(f - 1).is_zero(), set_inputs(&s.to_spec(), f - 1), 0, t.at(f - 1));
        }
        for n in f..=top {
            r.check(!t.at(n).is_zero(), set_inputs(&s.to_spec(), n), "> 0", t.at(n));
        }
    }
    r
}

fn product_upper(_: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("eq4");
    for pair in corpus() {
        let t = table(200, &pair.parts, &pair.mults);
        for n in 0..=200 {
            let b = product_upper_bound(n, &pair.parts, &pair.mults);
            r.check(t.at(n) <= &b, pair_inputs(&pair, n), format!("<= {b}"), t.at(n));
        }
    }
    r
}

fn existence(_: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("eq5");
    let mut max_witness = 0u64;
    for pair in corpus() {
        let t = table(900, &pair.parts, &pair.mults);
        for n in 1..=30 {
            let check = existence_witness_in(n, &t).expect("table covers n^2");
            let got = match &check.witness {
                Some((w, v)) => {
                    max_witness = max_witness.max(*w);
                    format!("r = {w}, p(r) = {v}")
                }
                None => "no witness".to_string(),
            };
            r.check(check.witness.is_some(), pair_inputs(&pair, n), format!("r <= {} with p(r) >= {}", n * n, check.threshold), got);
        }
    }
    r.metric("max_witness", max_witness);
    r
}

fn monotone_lb(_: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("monotone-lb");
    let mut qualifying = Vec::new();
    for pair in corpus() {
        let t = table(200, &pair.parts, &pair.mults);
        if !t.is_nondecreasing() {
            continue;
        }
        qualifying.push(Value::from(pair.label()));
        for n in 1..=200 {
            let b: ExactRational = monotone_lower_bound(n, &pair.parts, &pair.mults);
            let v = check_exact(t.at(n), Direction::Lower, &b);
            r.verdict(v, pair_inputs(&pair, n), format!(">= {}", rational(&b)), t.at(n));
        }
    }
    r.metric("qualifying_pairs", qualifying);
    r
}

fn schur(_: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("schur");
    let s123 = FiniteCoprimeSet::new([1, 2, 3]).expect("coprime");
    let s357 = FiniteCoprimeSet::new([3, 5, 7]).expect("coprime");
    let t123 = table(2000, &s123.to_spec(), &IntegerSetSpec::nat());
    let t357 = table(5000, &s357.to_spec(), &IntegerSetSpec::nat());

    let at = |t: &CountTable, s: &FiniteCoprimeSet, n: u64| {
        let b: ExactRational = schur_asymptotic(n, s);
        ratio(&big(t.at(n)), &b)
    };
    let mut errors = Vec::new();
    for n in [500u64, 1000, 2000] {
        let q = at(&t123, &s123, n);
        r.metric(&format!("ratio_1_2_3_at_{n}"), fixed(q));
        errors.push((n, (q - 1.0).abs()));
    }
    let q = at(&t123, &s123, 2000);
    r.check((q - 1.0).abs() <= 0.01, set_inputs(&s123.to_spec(), 2000), "ratio in [0.99, 1.01]", fixed(q));
    for w in errors.windows(2) {
        r.check(w[1].1 <= w[0].1, set_inputs(&s123.to_spec(), w[1].0), format!("|ratio - 1| <= {}", fixed(w[0].1)), fixed(w[1].1));
    }
    let q = at(&t357, &s357, 5000);
    r.metric("ratio_3_5_7_at_5000", fixed(q));
    r.check((0.9..=1.1).contains(&q), set_inputs(&s357.to_spec(), 5000), "ratio in [0.9, 1.1]", fixed(q));
    r
}

fn hrr(ctx: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("hrr");
    let t = table(500, &IntegerSetSpec::all(), &IntegerSetSpec::nat());
    let ratio_at = |n: u64| ratio(&big(t.at(n)), &hrr_leading_term(n, ctx.digits).to_rational());
    for n in [1u64, 100] {
        r.metric(&format!("ratio_at_{n}"), fixed(ratio_at(n)));
    }
    let mut prev: Option<f64> = None;
    for n in [200u64, 300, 500] {
        let q = ratio_at(n);
        r.metric(&format!("ratio_at_{n}"), fixed(q));
        let inputs = set_inputs(&IntegerSetSpec::all(), n);
        r.check((0.9..=1.0).contains(&q), inputs.clone(), "ratio in [0.90, 1.00]", fixed(q));
        if let Some(p) = prev {
            r.check(q > p, inputs, format!("ratio > {}", fixed(p)), fixed(q));
        }
        prev = Some(q);
    }
    r
}

fn debruijn(ctx: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("debruijn");
    let parts = IntegerSetSpec::Powers(2);
    let top = 1u64 << 16;
    let t = table(2 * top, &parts, &IntegerSetSpec::nat());
    for n in 1..=(1u64 << 12) {
        let (b, v) = check_log_real(t.at(2 * n), Direction::Upper, ctx.digits, |d| debruijn_upper_bound(n, d));
        let got = real(&HighPrecisionReal::ln_count(t.at(2 * n), ctx.digits));
        r.verdict(v, set_inputs(&parts, 2 * n), format!("log p <= {}", real(&b)), got);
    }
    for n in [1u64 << 10, 1 << 12] {
        let lead = debruijn_leading_term(n, ctx.digits).expect("n >= 3");
        let lp = HighPrecisionReal::ln_count(t.at(2 * n), ctx.digits);
        r.metric(&format!("lead_ratio_at_{n}"), fixed(ratio(&lp.to_rational(), &lead.to_rational())));
    }
    let lead = debruijn_leading_term(top, ctx.digits).expect("n >= 3");
    let lp = HighPrecisionReal::ln_count(t.at(2 * top), ctx.digits);
    let q = ratio(&lp.to_rational(), &lead.to_rational());
    r.metric(&format!("lead_ratio_at_{top}"), fixed(q));
    r.metric(&format!("leading_term_at_{top}"), real(&lead));
    r.check((0.3..=1.5).contains(&q), set_inputs(&parts, 2 * top), "ratio in [0.3, 1.5]", fixed(q));
    r
}

fn harmonic_chain(ctx: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("harmonic-chain");
    let mut seen = BTreeSet::new();
    for pair in corpus().into_iter().filter(|p| p.mults.is_nat()) {
        if !seen.insert(pair.parts.to_string()) {
            continue;
        }
        let t = table(200, &pair.parts, &pair.mults);
        for n in 1..=200 {
            let (b, v) = check_real(t.at(n), Direction::Upper, ctx.digits, |d| harmonic_chain_bound(n, &pair.parts, d));
            r.verdict(v, pair_inputs(&pair, n), format!("<= {}", real(&b)), t.at(n));
        }
    }
    r.metric("part_sets", seen.len());
    r
}

fn padberg(_: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("padberg");
    for s in finite_coprime_sets() {
        let t = table(500, &s.to_spec(), &IntegerSetSpec::nat());
        let cumulative = cumulative_sums(&t);
        let equality = s.elements() == [1];
        for n in 0..=500u64 {
            let b: ExactRational = padberg_lower(n, &s);
            let c = &cumulative[n as usize];
            let inputs = set_inputs(&s.to_spec(), n);
            if equality {
                r.check(big(c) == b, inputs, format!("= {}", rational(&b)), c);
            } else {
                let v = check_exact(c, Direction::Lower, &b);
                r.verdict(v, inputs, format!(">= {}", rational(&b)), c);
            }
        }
    }
    r
}

fn record_point(_: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("eq10");
    let mut records = 0usize;
    for s in finite_coprime_sets() {
        let t = table(500, &s.to_spec(), &IntegerSetSpec::nat());
        for n in t.record_indices() {
            let b: ExactRational = schur_style_point_lower(n, &s);
            let v = check_exact(t.at(n), Direction::Lower, &b);
            r.verdict(v, set_inputs(&s.to_spec(), n), format!(">= {}", rational(&b)), t.at(n));
            records += 1;
        }
    }
    r.metric("record_indices", records);
    r
}

fn refined(ctx: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("refined");
    let all = IntegerSetSpec::all();
    let t = table(2000, &all, &IntegerSetSpec::nat());
    let mut outcomes = Vec::new();
    for n in 1..=2000u64 {
        let b: ExactRational = refined_lower_bound(n, &all).expect("parts all is coprime");
        let v = check_exact(t.at(n), Direction::Lower, &b);
        outcomes.push((n, v.is_satisfied()));
        if n >= 10 {
            r.verdict(v, set_inputs(&all, n), format!(">= {}", rational(&b)), t.at(n));
        }
    }
    if let Some(n0) = onset(&outcomes) {
        r.onsets.insert("refined".into(), n0);
    }
    for n in [10u64, 100, 2000] {
        let b: ExactRational = refined_lower_bound(n, &all).expect("coprime");
        let c = classical_refined_comparison(n, ctx.digits);
        r.metric(&format!("refined_over_classical_at_{n}"), fixed(ratio(&b, &c.to_rational())));
    }

    // other coprime part sets: reported, not asserted
    let mut others = serde_json::Map::new();
    let mut seen = BTreeSet::new();
    for pair in corpus().into_iter().filter(|p| p.mults.is_nat() && !p.parts.is_all()) {
        if gcd_of_set(&pair.parts) != 1 || !seen.insert(pair.parts.to_string()) {
            continue;
        }
        let t = table(2000, &pair.parts, &pair.mults);
        let mut res = Vec::new();
        for n in 1..=2000u64 {
            match refined_lower_bound::<BigInt>(n, &pair.parts) {
                Ok(b) => res.push((n, check_exact(t.at(n), Direction::Lower, &b).is_satisfied())),
                Err(_) => break,
            }
        }
        let violations = res.iter().filter(|&&(_, ok)| !ok).count();
        others.insert(
            pair.parts.to_string(),
            json!({ "tested_upto": res.last().map_or(0, |&(n, _)| n), "violations": violations, "onset": onset(&res) }),
        );
    }
    r.metric("other_coprime_sets", Value::Object(others));
    r
}

fn sqrt_lower(ctx: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("sqrt-lower");
    let all = IntegerSetSpec::all();
    let t = table(2000, &all, &IntegerSetSpec::nat());
    type Eval = fn(u64, u32) -> HighPrecisionReal;
    let bounds: [(&str, Eval); 2] = [("sqrt_lower", classical_sqrt_lower), ("classical_refined", classical_refined_comparison)];
    for (id, eval) in bounds {
        let mut outcomes = Vec::new();
        for n in 1..=2000u64 {
            let (b, v) = check_real(t.at(n), Direction::Lower, ctx.digits, |d| eval(n, d));
            outcomes.push((n, v.is_satisfied()));
            if n >= 100 {
                let mut inputs = set_inputs(&all, n);
                inputs["bound"] = Value::from(id);
                r.verdict(v, inputs, format!(">= {}", real(&b)), t.at(n));
            }
        }
        if let Some(n0) = onset(&outcomes) {
            r.onsets.insert(id.into(), n0);
        }
        let fails = outcomes.iter().filter(|&&(_, ok)| !ok).map(|&(n, _)| n).collect::<Vec<_>>();
        r.metric(&format!("{id}_violations"), fails);
    }
    r
}

/// `lg n (lg lg n)^(lg lg n)` from `lg n`, in f64 for reporting.
fn closed_form_f64(n: u64) -> f64 {
    let lg = (n as f64).log2();
    lg * lg.log2().powf(lg.log2())
}

fn slow_growth(ctx: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("slow-growth");
    let parts = IntegerSetSpec::DoublyExponential(2);
    let mults = IntegerSetSpec::with_zero(IntegerSetSpec::DoublyExponential(2));
    let top = 1u64 << 20;
    let t: CountTable<u64> = count_table(top, &parts, &mults).expect("fits in u64");
    let inputs = |n: u64| json!({ "parts": parts.to_string(), "mults": mults.to_string(), "n": n });
    let slack = ExactRational::from_integer(BigInt::from(4u32));

    let mut max_count = 0u64;
    let mut min_slack = (0.0f64, 16u64);
    for k in 4..=20u32 {
        let lo = 1u64 << k;
        let hi = (lo << 1).min(top + 1);
        // the closed form increases, so its value at 2^k bounds the block from below
        let block_floor = slow_growth_closed_form(lo, ctx.digits).expect("n >= 16");
        let block_max = (lo..hi).map(|n| *t.at(n)).max().unwrap_or(0);
        let fits = block_floor
            .compare_rational(&(ExactRational::from_integer(BigInt::from(block_max)) / &slack))
            .is_some_and(|o| o.is_ge());
        for n in lo..hi {
            let p = *t.at(n);
            max_count = max_count.max(p);
            let s = p as f64 / closed_form_f64(n);
            if s > min_slack.0 {
                min_slack = (s, n);
            }
            if n % 2 == 1 {
                r.check(p == 0, inputs(n), 0, p);
            }
            if fits {
                r.cases += 1;
                continue;
            }
            let (b, v) = check_real(&BigUint::from(p), Direction::Upper, ctx.digits, |d| {
                let f = slow_growth_closed_form(n, d).expect("n >= 16");
                HighPrecisionReal::from_rational(&(f.to_rational() * &slack), d)
            });
            r.verdict(v, inputs(n), format!("<= {}", real(&b)), p);
        }
    }
    r.metric("max_count", max_count);
    r.metric("min_sufficient_slack", fixed(min_slack.0));
    r.metric("min_sufficient_slack_at", min_slack.1);
    r
}

fn monotonicity_criterion(_: &SuiteContext) -> SuiteResult {
    const END: u64 = 2000;
    const WINDOW_FLOOR: u64 = 1800;
    let mut r = SuiteResult::new("monotonicity-criterion");
    let mut sets = 0u64;
    let mut true_sets = 0u64;
    let mut latest = (0u64, String::new());
    let mut short_window_disagreements = 0u64;

    for mask in 1u32..(1 << 12) {
        if mask.count_ones() > 4 {
            continue;
        }
        let elements: Vec<u64> = (0..12).filter(|i| mask >> i & 1 == 1).map(|i| i as u64 + 1).collect();
        let Ok(s) = FiniteCoprimeSet::new(elements) else { continue };
        sets += 1;
        let t: CountTable<u64> = count_table(END, &s.to_spec(), &IntegerSetSpec::nat()).expect("fits in u64");
        let v = t.values();
        let f = frobenius_threshold(&s);
        let short = f + s.max() * s.max();
        let w = short.max(WINDOW_FLOOR);
        let increasing_from = |start: u64| (start.max(1)..=END).all(|n| v[n as usize] > v[n as usize - 1]);
        let empirical = increasing_from(w);
        let criterion = eventually_strictly_increasing(&s);
        if criterion {
            true_sets += 1;
            let settle = (1..=END).rev().find(|&n| v[n as usize] <= v[n as usize - 1]).map_or(1, |n| n + 1);
            if settle > latest.0 {
                latest = (settle, s.to_spec().to_string());
            }
        }
        if criterion != increasing_from(short) {
            short_window_disagreements += 1;
        }
        let inputs = json!({ "parts": s.to_spec().to_string(), "window_start": w, "window_end": END });
        r.check(criterion == empirical, inputs, format!("criterion {criterion}"), format!("empirical {empirical}"));
    }

    let s23 = FiniteCoprimeSet::new([2, 3]).expect("coprime");
    let t = table(END, &s23.to_spec(), &IntegerSetSpec::nat());
    let f = frobenius_threshold(&s23);
    let drop = (f.max(1)..=END).find(|&n| t.at(n) < t.at(n - 1));
    let got = drop.map_or("none".to_string(), |n| format!("p({})={} > p({n})={}", n - 1, t.at(n - 1), t.at(n)));
    r.check(!eventually_strictly_increasing(&s23) && drop == Some(7), json!({ "parts": "finite:2,3" }), "p(6)=2 > p(7)=1", &got);
    r.metric("counterexample_2_3", got);

    let s345 = FiniteCoprimeSet::new([3, 4, 5]).expect("coprime");
    let t = table(END, &s345.to_spec(), &IntegerSetSpec::nat());
    let w = (frobenius_threshold(&s345) + 25).max(WINDOW_FLOOR);
    let violation = (w..=END).find(|&n| t.at(n) <= t.at(n - 1));
    r.check(eventually_strictly_increasing(&s345) && violation.is_none(), json!({ "parts": "finite:3,4,5", "window_start": w }), "no violation", format!("{violation:?}"));

    r.metric("sets", sets);
    r.metric("criterion_true", true_sets);
    r.metric("latest_stabilization", latest.0);
    r.metric("latest_stabilization_set", latest.1);
    r.metric("disagreements_with_window_from_frobenius_plus_max_squared", short_window_disagreements);
    r
}

fn sparse_construction(ctx: &SuiteContext) -> SuiteResult {
    let mut r = SuiteResult::new("sparse-construction");
    let top = 1u64 << 16;
    let eps_of = |x: u64| u64::from(x.ilog2().ilog2());
    let eps = EpsilonTable::from_fn(2, top, eps_of).expect("valid table");
    let s = construct_sparse_set(&eps).expect("nonempty construction");
    let anchors: Vec<u64> = s.iter().collect();
    r.metric("anchors", anchors.clone());
    let a1 = anchors[0];
    let t: CountTable<u64> = count_table(top, &s, &IntegerSetSpec::nat()).expect("fits in u64");
    let inputs = |n: u64| json!({ "parts": format!("sparse from floor(lg lg x) on [2, {top}]"), "n": n });
    let mut max_count = 0u64;
    for n in a1..=top {
        let a = s.count_upto(n);
        let e = eps_of(n);
        r.check(a < e, inputs(n), format!("A(n) + 1 <= {e}"), format!("A(n) = {a}"));

        let p = *t.at(n);
        max_count = max_count.max(p);
        let pointwise = num_traits::pow(BigUint::from(n), e as usize);
        r.check(BigUint::from(p) <= pointwise, inputs(n), format!("<= n^{e}"), p);

        // exact n^A(n) >= p settles the chain bound since e^H_n > 1
        let chain_floor = num_traits::pow(BigUint::from(n), a as usize);
        if BigUint::from(p) <= chain_floor {
            r.cases += 1;
        } else {
            let (b, v) = check_real(&BigUint::from(p), Direction::Upper, ctx.digits, |d| harmonic_chain_bound(n, &s, d));
            r.verdict(v, inputs(n), format!("<= {}", real(&b)), p);
        }
    }
    r.metric("max_count", max_count);
    r
}

//! Evaluators for the upper bounds, lower bounds and asymptotic leading terms
//! of partition counts, and the machinery that compares them with exact
//! values.
//!
//! Polynomial and factorial expressions are exact rationals, generic over the
//! integer type. Transcendental expressions are [`HighPrecisionReal`]s and
//! are compared through their enclosures, so a verdict never flips when the
//! working precision is raised.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{gcd_of_set, FiniteCoprimeSet};
use crate::counting::CountTable;
use crate::error::{Error, Result};
use crate::real::{HighPrecisionReal, RealContext};
use crate::setspec::{IntegerSetSpec, RationalThreshold};
use crate::BigCount;

/// Integer types usable as the scalar of an exact rational bound.
pub trait ExactInteger: Integer + Clone + From<u64> {}

impl<T> ExactInteger for T where T: Integer + Clone + From<u64> {}

fn power<T: ExactInteger>(base: u64, exp: usize) -> T {
    num_traits::pow(T::from(base), exp)
}

fn factorial<T: ExactInteger>(k: u64) -> T {
    (1..=k).fold(T::one(), |acc, i| acc * T::from(i))
}

fn product_of<T: ExactInteger>(values: &[u64]) -> T {
    values.iter().fold(T::one(), |acc, &a| acc * T::from(a))
}

/// `prod_{a in S} M(n/a)`, stopping once `a > n / min_positive(M)` where every
/// further factor is 1.
pub fn product_upper_bound(n: u64, parts: &IntegerSetSpec, mults: &IntegerSetSpec) -> BigCount {
    let Ok(step) = mults.min_positive() else {
        return BigUint::one();
    };
    parts
        .iter()
        .take_while(|&a| a <= n / step)
        .map(|a| {
            let x = RationalThreshold::new(n, a).expect("parts are positive");
            BigUint::from(mults.count_leq(x))
        })
        .product()
}

/// Outcome of searching for `r <= n^2` with `p(r) >= prod M(n/a) / (n^2 + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceCheck {
    pub n: u64,
    pub threshold: BigRational,
    /// Smallest qualifying `r` and `p(r)`, if any.
    pub witness: Option<(u64, BigCount)>,
}

/// Searches a table that covers `[0, n^2]`.
pub fn existence_witness_in(n: u64, table: &CountTable) -> Result<ExistenceCheck> {
    let top = n * n;
    if table.max_n() < top {
        return Err(Error::Domain(format!("table ends before n^2 = {top}")));
    }
    let product = product_upper_bound(n, table.parts(), table.mults());
    let threshold = BigRational::new(BigInt::from(product), BigInt::from(top + 1));
    let witness = (0..=top).find_map(|r| {
        let v = table.at(r);
        (BigRational::from_integer(BigInt::from(v.clone())) >= threshold).then(|| (r, v.clone()))
    });
    Ok(ExistenceCheck {
        n,
        threshold,
        witness,
    })
}

/// Builds the table to `n^2` and searches it.
pub fn check_existence_lower_bound(
    n: u64,
    parts: &IntegerSetSpec,
    mults: &IntegerSetSpec,
) -> Result<ExistenceCheck> {
    let table = crate::counting::count_table(n * n, parts, mults)?;
    existence_witness_in(n, &table)
}

/// `(1/(n+1)) prod_{a} |{mu in M : mu a <= sqrt(n)}|`.
///
/// `mu a <= sqrt(n)` is decided as `mu a <= isqrt(n)`, exact for integers.
pub fn monotone_lower_bound<T: ExactInteger>(
    n: u64,
    parts: &IntegerSetSpec,
    mults: &IntegerSetSpec,
) -> Ratio<T> {
    let root = n.sqrt();
    let product = match mults.min_positive() {
        Ok(step) => parts
            .iter()
            .take_while(|&a| a <= root / step)
            .fold(T::one(), |acc, a| acc * T::from(mults.count_upto(root / a))),
        Err(_) => T::one(),
    };
    Ratio::new(product, T::from(n + 1))
}

/// `exp(pi sqrt(2n/3)) / (4 n sqrt 3)`.
pub fn hrr_leading_term(n: u64, digits: u32) -> HighPrecisionReal {
    let mut c = RealContext::new(digits);
    let pi = c.pi();
    let two_n_over_3 = c.div(&c.int(2 * n), &c.int(3));
    let arg = c.mul(&pi, &c.sqrt(&two_n_over_3));
    let numer = c.exp(&arg);
    let denom = c.mul(&c.int(4 * n), &c.sqrt(&c.int(3)));
    let v = c.div(&numer, &denom);
    c.finish(v)
}

/// `(log(n / log n))^2 / (2 log 2)`, natural logarithms; needs `n >= 3`.
pub fn debruijn_leading_term(n: u64, digits: u32) -> Result<HighPrecisionReal> {
    if n < 3 {
        return Err(Error::Domain(format!("de Bruijn term needs n >= 3, got {n}")));
    }
    let mut c = RealContext::new(digits);
    let x = c.int(n);
    let ln_n = c.ln(&x);
    let ratio = c.div(&x, &ln_n);
    let l = c.ln(&ratio);
    let sq = c.mul(&l, &l);
    let ln2 = c.ln(&c.int(2));
    let v = c.div(&sq, &c.mul(&c.int(2), &ln2));
    Ok(c.finish(v))
}

/// `log(2n + 1) * log2(2n)`, an upper bound for `log p(2n)` with parts the
/// powers of 2.
pub fn debruijn_upper_bound(n: u64, digits: u32) -> HighPrecisionReal {
    let mut c = RealContext::new(digits);
    let a = c.ln(&c.int(2 * n + 1));
    let b = c.log2(&c.int(2 * n));
    let v = c.mul(&a, &b);
    c.finish(v)
}

/// `n^(k-1) / ((k-1)! a_1 ... a_k)`.
pub fn schur_asymptotic<T: ExactInteger>(n: u64, parts: &FiniteCoprimeSet) -> Ratio<T> {
    let k = parts.len();
    Ratio::new(
        power(n, k - 1),
        factorial::<T>(k as u64 - 1) * product_of::<T>(parts.elements()),
    )
}

/// `H_n = 1 + 1/2 + ... + 1/n` exactly.
pub fn harmonic_number(n: u64) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, j| {
        acc + BigRational::new(BigInt::one(), BigInt::from(j))
    })
}

/// `n^A(n) e^(H_n)` with `A(n) = |{a in S : a <= n}|`.
pub fn harmonic_chain_bound(n: u64, parts: &IntegerSetSpec, digits: u32) -> HighPrecisionReal {
    let a = parts.count_upto(n);
    let mut c = RealContext::new(digits);
    // n rounded terms perturb H_n by at most n ulps, well inside the guard bits
    let mut h = c.int(0);
    for j in 1..=n {
        let term = c.div(&c.int(1), &c.int(j));
        h = c.add(&h, &term);
    }
    let e_h = c.exp(&h);
    let n_pow = c.big(&num_traits::pow(BigUint::from(n), a as usize));
    let v = c.mul(&n_pow, &e_h);
    c.finish(v)
}

/// `e^sqrt(n) / n`.
pub fn classical_sqrt_lower(n: u64, digits: u32) -> HighPrecisionReal {
    let mut c = RealContext::new(digits);
    let root = c.sqrt(&c.int(n));
    let e = c.exp(&root);
    let v = c.div(&e, &c.int(n));
    c.finish(v)
}

/// `(n+1)^k / (k! a_1 ... a_k)`, a lower bound for `sum_{j <= n} p(j; A)`.
pub fn padberg_lower<T: ExactInteger>(n: u64, parts: &FiniteCoprimeSet) -> Ratio<T> {
    let k = parts.len();
    Ratio::new(
        power(n + 1, k),
        factorial::<T>(k as u64) * product_of::<T>(parts.elements()),
    )
}

/// `(n+1)^(k-1) / (k! a_1 ... a_k)`, valid where `p(n; A)` is a running maximum.
pub fn schur_style_point_lower<T: ExactInteger>(n: u64, parts: &FiniteCoprimeSet) -> Ratio<T> {
    let k = parts.len();
    Ratio::new(
        power(n + 1, k - 1),
        factorial::<T>(k as u64) * product_of::<T>(parts.elements()),
    )
}

/// Least `j >= 1` with `j * a_j >= n`.
pub fn j_of_n(n: u64, parts: &IntegerSetSpec) -> Result<u64> {
    parts
        .iter()
        .zip(1u64..)
        .find(|&(a, j)| u128::from(j) * u128::from(a) >= u128::from(n))
        .map(|(_, j)| j)
        .ok_or(Error::SetExhausted(n))
}

/// `(n+1)^(j-1) / (j! a_1 ... a_j)` with `j = j_of_n(n)`, for coprime `S` and
/// unrestricted multiplicities.
pub fn refined_lower_bound<T: ExactInteger>(n: u64, parts: &IntegerSetSpec) -> Result<Ratio<T>> {
    let g = gcd_of_set(parts);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    let j = j_of_n(n, parts)?;
    let prefix: Vec<u64> = parts.iter().take(j as usize).collect();
    Ok(Ratio::new(
        power(n + 1, j as usize - 1),
        factorial::<T>(j) * product_of::<T>(&prefix),
    ))
}

/// `e^(2 sqrt n) / (2 pi n^2)`.
pub fn classical_refined_comparison(n: u64, digits: u32) -> HighPrecisionReal {
    let mut c = RealContext::new(digits);
    let root = c.sqrt(&c.int(n));
    let e = c.exp(&c.mul(&c.int(2), &root));
    let pi = c.pi();
    let denom = c.mul(&c.mul(&c.int(2), &pi), &c.int(n * n));
    let v = c.div(&e, &denom);
    c.finish(v)
}

/// `lg n * (lg lg n)^(lg lg n)`, base-2 logarithms; needs `n >= 16`.
pub fn slow_growth_closed_form(n: u64, digits: u32) -> Result<HighPrecisionReal> {
    if n < 16 {
        return Err(Error::Domain(format!("closed form needs n >= 16, got {n}")));
    }
    let mut c = RealContext::new(digits);
    let lg = c.log2(&c.int(n));
    let lglg = c.log2(&lg);
    let p = c.pow(&lglg, &lglg);
    let v = c.mul(&lg, &p);
    Ok(c.finish(v))
}

/// Whether a bound sits above or below the exact value, or only approximates it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Upper,
    Lower,
    Asymptotic,
}

impl Direction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::Upper => "upper",
            Direction::Lower => "lower",
            Direction::Asymptotic => "asymptotic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Satisfied,
    Violated,
    /// The enclosure straddles the exact value even after raising precision.
    Undecided,
}

impl Verdict {
    /// From the ordering of the exact value relative to the bound.
    pub fn from_ordering(direction: Direction, exact_vs_bound: Option<Ordering>) -> Verdict {
        match (direction, exact_vs_bound) {
            (_, None) | (Direction::Asymptotic, _) => Verdict::Undecided,
            (Direction::Upper, Some(Ordering::Greater)) => Verdict::Violated,
            (Direction::Lower, Some(Ordering::Less)) => Verdict::Violated,
            _ => Verdict::Satisfied,
        }
    }

    pub fn is_satisfied(&self) -> bool {
        *self == Verdict::Satisfied
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Satisfied => "satisfied",
            Verdict::Violated => "violated",
            Verdict::Undecided => "undecided",
        }
    }
}

/// Number of precision doublings tried before giving up on a comparison.
pub const MAX_REFINEMENTS: u32 = 3;

/// Exact count against an exact rational bound.
pub fn check_exact(exact: &BigUint, direction: Direction, bound: &BigRational) -> Verdict {
    let e = BigRational::from_integer(BigInt::from(exact.clone()));
    Verdict::from_ordering(direction, Some(e.cmp(bound)))
}

/// Exact count against a real bound, raising precision while undecided.
pub fn check_real(
    exact: &BigUint,
    direction: Direction,
    digits: u32,
    eval: impl Fn(u32) -> HighPrecisionReal,
) -> (HighPrecisionReal, Verdict) {
    refine(digits, |d| {
        let bound = eval(d);
        let ord = bound.compare_count(exact).map(Ordering::reverse);
        (bound, ord)
    }, direction)
}

/// `ln(exact)` against a real bound on the logarithm.
pub fn check_log_real(
    exact: &BigUint,
    direction: Direction,
    digits: u32,
    eval: impl Fn(u32) -> HighPrecisionReal,
) -> (HighPrecisionReal, Verdict) {
    refine(digits, |d| {
        let bound = eval(d);
        let ord = HighPrecisionReal::ln_count(exact, d).compare(&bound);
        (bound, ord)
    }, direction)
}

fn refine(
    digits: u32,
    attempt: impl Fn(u32) -> (HighPrecisionReal, Option<Ordering>),
    direction: Direction,
) -> (HighPrecisionReal, Verdict) {
    let mut d = digits;
    let (mut bound, mut ord) = attempt(d);
    for _ in 0..MAX_REFINEMENTS {
        if ord.is_some() {
            break;
        }
        d *= 2;
        (bound, ord) = attempt(d);
    }
    (bound, Verdict::from_ordering(direction, ord))
}

/// Identifiers of every bound a [`BoundReport`] can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    ProductUpper,
    MonotoneLower,
    Hrr,
    DebruijnLead,
    DebruijnUpper,
    Schur,
    HarmonicChain,
    SqrtLower,
    Padberg,
    RecordPointLower,
    Refined,
    ClassicalRefined,
    SlowGrowth,
}

impl BoundId {
    pub const ALL: [BoundId; 13] = [
        BoundId::ProductUpper,
        BoundId::MonotoneLower,
        BoundId::Hrr,
        BoundId::DebruijnLead,
        BoundId::DebruijnUpper,
        BoundId::Schur,
        BoundId::HarmonicChain,
        BoundId::SqrtLower,
        BoundId::Padberg,
        BoundId::RecordPointLower,
        BoundId::Refined,
        BoundId::ClassicalRefined,
        BoundId::SlowGrowth,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundId::ProductUpper => "eq4",
            BoundId::MonotoneLower => "monotone_lb",
            BoundId::Hrr => "hrr",
            BoundId::DebruijnLead => "debruijn_lead",
            BoundId::DebruijnUpper => "debruijn_upper",
            BoundId::Schur => "schur",
            BoundId::HarmonicChain => "harmonic_chain",
            BoundId::SqrtLower => "sqrt_lower",
            BoundId::Padberg => "padberg",
            BoundId::RecordPointLower => "eq10",
            BoundId::Refined => "refined",
            BoundId::ClassicalRefined => "classical_refined",
            BoundId::SlowGrowth => "slow_growth",
        }
    }

    pub fn parse(s: &str) -> Option<BoundId> {
        BoundId::ALL.into_iter().find(|b| b.as_str() == s)
    }

    pub fn direction(&self) -> Direction {
        match self {
            BoundId::ProductUpper
            | BoundId::DebruijnUpper
            | BoundId::HarmonicChain
            | BoundId::SlowGrowth => Direction::Upper,
            BoundId::Hrr | BoundId::DebruijnLead | BoundId::Schur => Direction::Asymptotic,
            _ => Direction::Lower,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub enum BoundValue {
    Count(BigCount),
    Exact(BigRational),
    Real(HighPrecisionReal),
}

impl BoundValue {
    pub fn to_rational(&self) -> BigRational {
        match self {
            BoundValue::Count(c) => BigRational::from_integer(BigInt::from(c.clone())),
            BoundValue::Exact(r) => r.clone(),
            BoundValue::Real(r) => r.to_rational(),
        }
    }

    /// Fixed-width decimal rendering.
    pub fn render(&self, significant: usize) -> String {
        match self {
            BoundValue::Count(c) => c.to_string(),
            other => crate::real::format_scientific(&other.to_rational(), significant),
        }
    }
}

/// One bound evaluated at one `n`.
#[derive(Debug, Clone)]
pub struct BoundEntry {
    pub id: BoundId,
    pub direction: Direction,
    pub applicable: bool,
    pub value: Option<BoundValue>,
    /// `None` for inapplicable and asymptotic entries.
    pub verdict: Option<Verdict>,
    /// Exact-to-bound ratio for asymptotic entries.
    pub ratio: Option<f64>,
}

/// Exact count at one `n` with every requested bound.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: u64,
    pub exact: BigCount,
    pub entries: Vec<BoundEntry>,
}

fn ratio_f64(a: &BigRational, b: &BigRational) -> Option<f64> {
    if b.is_zero() {
        return None;
    }
    (a / b).to_f64()
}

impl BoundReport {
    /// Evaluates `ids` at `n` against a table covering `n`.
    pub fn evaluate(n: u64, table: &CountTable, ids: &[BoundId], digits: u32) -> Result<BoundReport> {
        let exact = table
            .get(n)
            .ok_or_else(|| Error::Domain(format!("table ends before n = {n}")))?
            .clone();
        let entries = ids
            .iter()
            .map(|&id| evaluate_entry(id, n, &exact, table, digits))
            .collect::<Result<Vec<_>>>()?;
        Ok(BoundReport { n, exact, entries })
    }

    pub fn entry(&self, id: BoundId) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn inapplicable(id: BoundId) -> BoundEntry {
    BoundEntry {
        id,
        direction: id.direction(),
        applicable: false,
        value: None,
        verdict: None,
        ratio: None,
    }
}

fn evaluate_entry(
    id: BoundId,
    n: u64,
    exact: &BigCount,
    table: &CountTable,
    digits: u32,
) -> Result<BoundEntry> {
    let parts = table.parts();
    let mults = table.mults();
    let nat = mults.is_nat();
    let classical = parts.is_all() && nat;
    let finite = FiniteCoprimeSet::try_from(parts).ok().filter(|_| nat);
    let direction = id.direction();
    let exact_q = BigRational::from_integer(BigInt::from(exact.clone()));

    let done = |value: BoundValue, verdict: Verdict| BoundEntry {
        id,
        direction,
        applicable: true,
        value: Some(value),
        verdict: Some(verdict),
        ratio: None,
    };
    let asymptotic = |value: BoundValue, observed: &BigRational| BoundEntry {
        id,
        direction,
        applicable: true,
        ratio: ratio_f64(observed, &value.to_rational()),
        value: Some(value),
        verdict: None,
    };

    let entry = match id {
        BoundId::ProductUpper => {
            let b = product_upper_bound(n, parts, mults);
            let v = Verdict::from_ordering(direction, Some(exact.cmp(&b)));
            done(BoundValue::Count(b), v)
        }
        BoundId::MonotoneLower if n >= 1 && table.is_nondecreasing() => {
            let b: BigRational = monotone_lower_bound(n, parts, mults);
            done(BoundValue::Exact(b.clone()), check_exact(exact, direction, &b))
        }
        BoundId::Hrr if n >= 1 && classical => {
            asymptotic(BoundValue::Real(hrr_leading_term(n, digits)), &exact_q)
        }
        BoundId::DebruijnLead
            if n.is_multiple_of(2) && n / 2 >= 3 && nat && *parts == IntegerSetSpec::Powers(2) =>
        {
            let lead = debruijn_leading_term(n / 2, digits)?;
            let log_p = HighPrecisionReal::ln_count(exact, digits).to_rational();
            asymptotic(BoundValue::Real(lead), &log_p)
        }
        BoundId::DebruijnUpper
            if n.is_multiple_of(2) && n >= 2 && nat && *parts == IntegerSetSpec::Powers(2) =>
        {
            let (b, v) = check_log_real(exact, direction, digits, |d| debruijn_upper_bound(n / 2, d));
            done(BoundValue::Real(b), v)
        }
        BoundId::Schur if n >= 1 && finite.is_some() => {
            let b: BigRational = schur_asymptotic(n, finite.as_ref().unwrap());
            asymptotic(BoundValue::Exact(b), &exact_q)
        }
        BoundId::HarmonicChain if n >= 1 && nat => {
            let (b, v) = check_real(exact, direction, digits, |d| harmonic_chain_bound(n, parts, d));
            done(BoundValue::Real(b), v)
        }
        BoundId::SqrtLower if n >= 1 && classical => {
            let (b, v) = check_real(exact, direction, digits, |d| classical_sqrt_lower(n, d));
            done(BoundValue::Real(b), v)
        }
        BoundId::Padberg if finite.is_some() => {
            let b: BigRational = padberg_lower(n, finite.as_ref().unwrap());
            let cumulative: BigUint = table.values()[..=n as usize].iter().sum();
            done(BoundValue::Exact(b.clone()), check_exact(&cumulative, direction, &b))
        }
        BoundId::RecordPointLower if finite.is_some() && table.is_record(n) => {
            let b: BigRational = schur_style_point_lower(n, finite.as_ref().unwrap());
            done(BoundValue::Exact(b.clone()), check_exact(exact, direction, &b))
        }
        BoundId::Refined if n >= 1 && nat && gcd_of_set(parts) == 1 => {
            match refined_lower_bound::<BigInt>(n, parts) {
                Ok(b) => done(BoundValue::Exact(b.clone()), check_exact(exact, direction, &b)),
                Err(Error::SetExhausted(_)) => inapplicable(id),
                Err(e) => return Err(e),
            }
        }
        BoundId::ClassicalRefined if n >= 1 && classical => {
            let (b, v) = check_real(exact, direction, digits, |d| classical_refined_comparison(n, d));
            done(BoundValue::Real(b), v)
        }
        BoundId::SlowGrowth
            if n >= 16
                && *parts == IntegerSetSpec::DoublyExponential(2)
                && *mults == IntegerSetSpec::with_zero(IntegerSetSpec::DoublyExponential(2)) =>
        {
            let (b, v) = check_real(exact, direction, digits, |d| {
                slow_growth_closed_form(n, d).expect("n >= 16")
            });
            done(BoundValue::Real(b), v)
        }
        _ => inapplicable(id),
    };
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_table;
    use crate::{parse_set_spec, SetKind};

    fn parts(s: &str) -> IntegerSetSpec {
        parse_set_spec(s, SetKind::Parts).unwrap()
    }

    fn mults(s: &str) -> IntegerSetSpec {
        parse_set_spec(s, SetKind::Multiplicities).unwrap()
    }

    fn fcs(v: &[u64]) -> FiniteCoprimeSet {
        FiniteCoprimeSet::new(v.iter().copied()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn contains(r: &HighPrecisionReal, x: &BigRational) -> bool {
        let (lo, hi) = r.enclosure();
        lo <= *x && *x <= hi
    }

    #[test]
    fn product_upper_examples() {
        let all = IntegerSetSpec::all();
        let nat = IntegerSetSpec::nat();
        assert_eq!(product_upper_bound(4, &all, &nat), BigUint::from(60u32));
        assert_eq!(product_upper_bound(0, &all, &nat), BigUint::one());
        assert_eq!(product_upper_bound(0, &parts("dexp:2"), &mults("zero|dexp:2")), BigUint::one());
        assert_eq!(product_upper_bound(8, &parts("dexp:2"), &mults("zero|dexp:2")), BigUint::from(6u32));
        assert_eq!(product_upper_bound(9, &all, &mults("finite:0")), BigUint::one());
    }

    #[test]
    fn product_upper_matches_untruncated_product() {
        // independent route: multiply M(n/a) over every part a <= n
        for (p, m) in [("all", "nat"), ("finite:2,3", "nat"), ("dexp:2", "zero|dexp:2"), ("all", "finite:0,1"), ("pow:3", "zero|ap:2,3")] {
            let (p, m) = (parts(p), mults(m));
            for n in 0..=60u64 {
                let full: BigUint = p
                    .elements_upto(n)
                    .into_iter()
                    .map(|a| BigUint::from(m.elements_upto(n).into_iter().filter(|&mu| mu * a <= n).count()))
                    .product();
                assert_eq!(product_upper_bound(n, &p, &m), full, "{p} {m} n={n}");
            }
        }
    }

    #[test]
    fn existence_examples() {
        let all = IntegerSetSpec::all();
        let nat = IntegerSetSpec::nat();
        let c = check_existence_lower_bound(4, &all, &nat).unwrap();
        assert_eq!(c.threshold, q(60, 17));
        assert_eq!(c.witness, Some((4, BigUint::from(5u32))));
        let c = check_existence_lower_bound(1, &all, &nat).unwrap();
        assert_eq!(c.threshold, q(1, 1));
        assert_eq!(c.witness, Some((0, BigUint::one())));
        let c = check_existence_lower_bound(3, &parts("finite:2,3"), &nat).unwrap();
        assert_eq!(c.threshold, q(4, 10));
        assert_eq!(c.witness.unwrap().0, 0);
        let short = count_table(10, &all, &nat).unwrap();
        assert!(existence_witness_in(4, &short).is_err());
    }

    #[test]
    fn monotone_lower_examples() {
        let all = IntegerSetSpec::all();
        let nat = IntegerSetSpec::nat();
        // factors 1 + floor(10/a) for a = 1..10: 11*6*4*3*3*2*2*2*2*2 = 76032
        let direct: u64 = (1..=10u64).map(|a| 1 + 10 / a).product();
        assert_eq!(direct, 76032);
        let b: Ratio<BigInt> = monotone_lower_bound(100, &all, &nat);
        assert_eq!(b, q(76032, 101));
        let b: Ratio<u128> = monotone_lower_bound(1, &all, &nat);
        assert_eq!(b, Ratio::from_integer(1));
        let b: Ratio<u64> = monotone_lower_bound(16, &parts("dexp:2"), &mults("zero|dexp:2"));
        assert_eq!(b, Ratio::new(2, 17));
    }

    #[test]
    fn hrr_examples() {
        let v = hrr_leading_term(100, 50);
        // p(100) / leading term
        let ratio = 190_569_292.0 / v.to_f64();
        assert!((ratio - 0.95628).abs() < 1e-4, "{ratio}");
        assert!((v.to_f64() - 1.99281e8).abs() < 1e4, "{}", v.to_f64());
        let v1 = hrr_leading_term(1, 50);
        assert!((v1.to_f64() - 1.8767).abs() < 1e-3, "{}", v1.to_f64());
    }

    #[test]
    fn precision_invariance() {
        for n in [1u64, 100, 500] {
            let a = hrr_leading_term(n, 50);
            let b = hrr_leading_term(n, 100);
            assert_eq!(a.to_scientific(40), b.to_scientific(40), "n = {n}");
            assert!(a.compare(&b).is_none());
        }
    }

    #[test]
    fn debruijn_examples() {
        assert!(debruijn_leading_term(2, 30).is_err());
        let v = debruijn_leading_term(1024, 30).unwrap();
        assert!((v.to_f64() - 18.000_518_645).abs() < 1e-8, "{}", v.to_f64());
        // n = e^(e+1): log(n / log n) = e^(e+1)... composed directly
        let lead = debruijn_leading_term(20, 40).unwrap().to_f64();
        let direct = (20f64 / 20f64.ln()).ln().powi(2) / (2.0 * 2f64.ln());
        assert!((lead - direct).abs() < 1e-12);

        let u = debruijn_upper_bound(8, 30);
        assert!((u.to_f64() - 4.0 * 17f64.ln()).abs() < 1e-12);
        assert_eq!(u.compare_count(&BigUint::from(36u32)), Some(Ordering::Less));
        let u1 = debruijn_upper_bound(1, 30);
        assert!((u1.to_f64() - 3f64.ln()).abs() < 1e-12);
        let mut prev = debruijn_upper_bound(1, 20);
        for n in 2..50 {
            let cur = debruijn_upper_bound(n, 20);
            assert_eq!(cur.compare(&prev), Some(Ordering::Greater));
            prev = cur;
        }
    }

    #[test]
    fn schur_examples() {
        let b: Ratio<BigInt> = schur_asymptotic(1000, &fcs(&[1, 2, 3]));
        assert_eq!(b, q(1_000_000, 12));
        for n in [1u64, 7, 1000] {
            let b: Ratio<u64> = schur_asymptotic(n, &fcs(&[1]));
            assert_eq!(b, Ratio::from_integer(1));
        }
        let s = fcs(&[1, 2, 3]);
        let t = count_table::<BigCount>(2000, &s.to_spec(), &IntegerSetSpec::nat()).unwrap();
        let b: Ratio<BigInt> = schur_asymptotic(2000, &s);
        let r = ratio_f64(&BigRational::from_integer(BigInt::from(t.at(2000).clone())), &b).unwrap();
        assert!((0.99..=1.01).contains(&r), "{r}");
    }

    #[test]
    fn harmonic_chain_examples() {
        assert_eq!(harmonic_number(4), q(25, 12));
        let v = harmonic_chain_bound(4, &IntegerSetSpec::all(), 40);
        let expected = 256.0 * (25.0f64 / 12.0).exp();
        assert!((v.to_f64() - expected).abs() < 1e-9 * expected);
        assert!((v.to_f64() - 2056.0).abs() < 1.0);
        let e = harmonic_chain_bound(1, &IntegerSetSpec::all(), 40);
        assert!((e.to_f64() - std::f64::consts::E).abs() < 1e-15);
        let b = harmonic_chain_bound(16, &parts("pow:2"), 40);
        assert_eq!(b.compare_count(&BigUint::from(36u32)), Some(Ordering::Greater));
        assert!(b.to_f64() > 16f64.powi(5));
    }

    #[test]
    fn harmonic_sum_matches_exact_rational() {
        // exp(H_n) from the exact rational route versus the summed route
        for n in [1u64, 10, 200] {
            let mut c = RealContext::new(40);
            let h = c.rational(&harmonic_number(n));
            let e = c.exp(&h);
            let exact_route = c.finish(e);
            let summed = harmonic_chain_bound(n, &parts("finite:1000000"), 40);
            assert_eq!(exact_route.to_scientific(35), summed.to_scientific(35), "n = {n}");
        }
    }

    #[test]
    fn sqrt_lower_examples() {
        let v = classical_sqrt_lower(100, 40);
        assert!((v.to_f64() - 10f64.exp() / 100.0).abs() < 1e-9);
        assert_eq!(check_real(&BigUint::from(190_569_292u32), Direction::Lower, 40, |d| classical_sqrt_lower(100, d)).1, Verdict::Satisfied);
        assert_eq!(check_real(&BigUint::one(), Direction::Lower, 40, |d| classical_sqrt_lower(1, d)).1, Verdict::Violated);
        let v = classical_sqrt_lower(400, 40);
        assert!((v.to_f64() - 1.21291e6).abs() < 10.0, "{}", v.to_f64());
    }

    #[test]
    fn padberg_examples() {
        let s23 = fcs(&[2, 3]);
        let b: Ratio<BigInt> = padberg_lower(10, &s23);
        assert_eq!(b, q(121, 12));
        assert_eq!(check_exact(&BigUint::from(14u32), Direction::Lower, &b), Verdict::Satisfied);
        let b: Ratio<u64> = padberg_lower(9, &fcs(&[1]));
        assert_eq!(b, Ratio::from_integer(10));
        let b: Ratio<u64> = padberg_lower(0, &fcs(&[3, 5]));
        assert_eq!(b, Ratio::new(1, 30));
    }

    #[test]
    fn point_lower_examples() {
        let b: Ratio<BigInt> = schur_style_point_lower(10, &fcs(&[2, 3]));
        assert_eq!(b, q(11, 12));
        let b: Ratio<u64> = schur_style_point_lower(17, &fcs(&[1]));
        assert_eq!(b, Ratio::from_integer(1));
    }

    #[test]
    fn j_of_n_examples() {
        assert_eq!(j_of_n(100, &IntegerSetSpec::all()), Ok(10));
        assert_eq!(j_of_n(5, &parts("dexp:2")), Ok(2));
        assert_eq!(j_of_n(1, &parts("finite:9")), Ok(1));
        assert_eq!(j_of_n(1, &parts("pow:5")), Ok(1));
        assert_eq!(j_of_n(20, &parts("finite:2,3")), Err(Error::SetExhausted(20)));
    }

    #[test]
    fn refined_examples() {
        let all = IntegerSetSpec::all();
        let b: Ratio<BigInt> = refined_lower_bound(100, &all).unwrap();
        let fact10: BigInt = (1..=10u32).map(BigInt::from).product();
        assert_eq!(b, BigRational::new(BigInt::from(101u32).pow(9), &fact10 * &fact10));
        assert!((b.to_f64().unwrap() - 83055.0986).abs() < 1e-3);
        let b: Ratio<u64> = refined_lower_bound(4, &all).unwrap();
        assert_eq!(b, Ratio::new(5, 4));
        let b: Ratio<u64> = refined_lower_bound(1, &all).unwrap();
        assert_eq!(b, Ratio::from_integer(1));
        assert_eq!(refined_lower_bound::<BigInt>(10, &parts("ap:4,6")), Err(Error::NotCoprime(2)));
    }

    #[test]
    fn classical_refined_examples() {
        let v = classical_refined_comparison(100, 40);
        let expected = 20f64.exp() / (2.0 * std::f64::consts::PI * 1e4);
        assert!((v.to_f64() - expected).abs() < 1e-9 * expected);
        assert!((v.to_f64() - 7721.6439).abs() < 1e-3, "{}", v.to_f64());
        let v1 = classical_refined_comparison(1, 40);
        assert!((v1.to_f64() - 1.17602).abs() < 1e-4, "{}", v1.to_f64());
    }

    #[test]
    fn slow_growth_examples() {
        assert!(slow_growth_closed_form(15, 30).is_err());
        let v = slow_growth_closed_form(1 << 16, 40).unwrap();
        assert!(contains(&v, &q(4096, 1)), "{v}");
        let fits_u64 = slow_growth_closed_form(u64::MAX, 40).unwrap();
        assert!((fits_u64.to_f64() / (64.0 * 6f64.powi(6)) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn slow_growth_power_of_two_256() {
        // lg n = 256 exceeds u64, so evaluate the closed form from lg n directly
        let mut c = RealContext::new(40);
        let lg = c.int(256);
        let lglg = c.log2(&lg);
        let p = c.pow(&lglg, &lglg);
        let v = c.mul(&lg, &p);
        let v = c.finish(v);
        assert!(contains(&v, &q(256 * 16_777_216, 1)), "{v}");
    }

    #[test]
    fn verdicts() {
        assert_eq!(Verdict::from_ordering(Direction::Upper, Some(Ordering::Equal)), Verdict::Satisfied);
        assert_eq!(Verdict::from_ordering(Direction::Upper, Some(Ordering::Greater)), Verdict::Violated);
        assert_eq!(Verdict::from_ordering(Direction::Lower, Some(Ordering::Less)), Verdict::Violated);
        assert_eq!(Verdict::from_ordering(Direction::Lower, None), Verdict::Undecided);
    }

    #[test]
    fn report_applicability() {
        let t = count_table(100, &IntegerSetSpec::all(), &IntegerSetSpec::nat()).unwrap();
        let r = BoundReport::evaluate(100, &t, &BoundId::ALL, 30).unwrap();
        for id in [BoundId::ProductUpper, BoundId::MonotoneLower, BoundId::HarmonicChain, BoundId::SqrtLower, BoundId::Refined, BoundId::ClassicalRefined] {
            let e = r.entry(id).unwrap();
            assert!(e.applicable, "{id}");
            assert_eq!(e.verdict, Some(Verdict::Satisfied), "{id}");
        }
        let hrr = r.entry(BoundId::Hrr).unwrap();
        assert!((hrr.ratio.unwrap() - 0.95628).abs() < 1e-4);
        for id in [BoundId::DebruijnUpper, BoundId::Schur, BoundId::Padberg, BoundId::SlowGrowth] {
            assert!(!r.entry(id).unwrap().applicable, "{id}");
        }

        let t = count_table(16, &parts("pow:2"), &IntegerSetSpec::nat()).unwrap();
        let r = BoundReport::evaluate(16, &t, &[BoundId::DebruijnUpper, BoundId::DebruijnLead], 30).unwrap();
        assert_eq!(r.exact, BigUint::from(36u32));
        assert_eq!(r.entries[0].verdict, Some(Verdict::Satisfied));
        let r = BoundReport::evaluate(15, &t, &[BoundId::DebruijnUpper], 30).unwrap();
        assert!(!r.entries[0].applicable);

        let t = count_table(10, &parts("finite:2,3"), &IntegerSetSpec::nat()).unwrap();
        let r = BoundReport::evaluate(10, &t, &[BoundId::Padberg, BoundId::RecordPointLower, BoundId::Schur], 30).unwrap();
        assert!(r.entries.iter().all(|e| e.applicable));
        let r = BoundReport::evaluate(7, &t, &[BoundId::RecordPointLower], 30).unwrap();
        assert!(!r.entries[0].applicable);
        assert!(BoundReport::evaluate(11, &t, &[BoundId::ProductUpper], 30).is_err());
    }

    #[test]
    fn bound_ids_round_trip() {
        for id in BoundId::ALL {
            assert_eq!(BoundId::parse(id.as_str()), Some(id));
        }
        assert_eq!(BoundId::parse("nope"), None);
    }
}

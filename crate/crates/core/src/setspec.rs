//! Structured descriptions of integer sets used as parts and multiplicities.
//!
//! Every set enumerates lazily in strictly increasing order, so infinite sets
//! are never materialized. Counting functions take exact rational thresholds.
//!
//! The textual form accepted by [`parse_set_spec`] is:
//!
//! ```text
//! spec := "all" | "all-from:" INT | "finite:" INT ("," INT)* | "ap:" INT "," INT
//!       | "pow:" INT | "dexp:" INT | "nat" | "zero|" spec
//!       | "sparse:@" FILEPATH | "sparse:" INT ("," INT)*
//! ```

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, SetSpecError};

/// Which validation rules a set must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    /// Positive integers only.
    Parts,
    /// Nonnegative integers, 0 required.
    Multiplicities,
}

/// A lazily enumerable integer set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IntegerSetSpec {
    /// Sorted, distinct, nonempty list.
    Finite(Vec<u64>),
    /// `{start, start + 1, ...}`.
    AllFrom(u64),
    /// `{first, first + step, ...}`.
    ArithmeticProgression { first: u64, step: u64 },
    /// `{base^j : j >= 0}`, starting at 1.
    Powers(u64),
    /// `{base^(base^j) : j >= 0}`, starting at `base`.
    DoublyExponential(u64),
    /// `{0}` together with a set of positive integers.
    WithZero(Box<IntegerSetSpec>),
    /// Anchors produced by [`construct_sparse_set`], optionally loaded from a file.
    SparseConstructed {
        anchors: Vec<u64>,
        source: Option<PathBuf>,
    },
}

impl IntegerSetSpec {
    /// All positive integers.
    pub fn all() -> Self {
        IntegerSetSpec::AllFrom(1)
    }

    /// All nonnegative integers, the unrestricted multiplicity set.
    pub fn nat() -> Self {
        IntegerSetSpec::WithZero(Box::new(IntegerSetSpec::AllFrom(1)))
    }

    pub fn with_zero(inner: IntegerSetSpec) -> Self {
        IntegerSetSpec::WithZero(Box::new(inner))
    }

    /// A finite set from arbitrary integers; sorts and removes duplicates.
    pub fn finite(elements: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = elements.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IntegerSetSpec::Finite(v)
    }

    pub fn sparse(anchors: Vec<u64>) -> Self {
        IntegerSetSpec::SparseConstructed {
            anchors,
            source: None,
        }
    }

    pub fn is_nat(&self) -> bool {
        matches!(self, IntegerSetSpec::WithZero(inner) if **inner == IntegerSetSpec::AllFrom(1))
    }

    pub fn is_all(&self) -> bool {
        *self == IntegerSetSpec::AllFrom(1)
    }

    /// Elements of a finite set, `None` for infinite variants.
    pub fn finite_elements(&self) -> Option<&[u64]> {
        match self {
            IntegerSetSpec::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            IntegerSetSpec::Finite(_) | IntegerSetSpec::SparseConstructed { .. } => true,
            IntegerSetSpec::WithZero(inner) => inner.is_finite(),
            _ => false,
        }
    }

    pub fn contains_zero(&self) -> bool {
        match self {
            IntegerSetSpec::Finite(v) => v.first() == Some(&0),
            IntegerSetSpec::WithZero(_) => true,
            _ => false,
        }
    }

    /// Checks structural invariants and the rules for `kind`.
    pub fn validate(&self, kind: SetKind) -> Result<(), SetSpecError> {
        self.validate_structure()?;
        match kind {
            SetKind::Parts if self.contains_zero() => Err(SetSpecError::ZeroInPartSet),
            SetKind::Multiplicities if !self.contains_zero() => {
                Err(SetSpecError::ZeroMissingFromMultiplicities)
            }
            _ => Ok(()),
        }
    }

    fn validate_structure(&self) -> Result<(), SetSpecError> {
        match self {
            IntegerSetSpec::Finite(v) => check_increasing(v),
            IntegerSetSpec::AllFrom(start) => positive(*start, "all-from start"),
            IntegerSetSpec::ArithmeticProgression { first, step } => {
                positive(*first, "progression start")?;
                positive(*step, "progression step")
            }
            IntegerSetSpec::Powers(b) | IntegerSetSpec::DoublyExponential(b) => {
                if *b < 2 {
                    Err(SetSpecError::BaseTooSmall(*b))
                } else {
                    Ok(())
                }
            }
            IntegerSetSpec::WithZero(inner) => inner.validate(SetKind::Parts),
            IntegerSetSpec::SparseConstructed { anchors, .. } => {
                check_increasing(anchors)?;
                positive(anchors[0], "sparse anchor")
            }
        }
    }

    /// Ascending enumeration of the members. Infinite variants stop at the
    /// first element that would overflow `u64`.
    pub fn iter(&self) -> Elements<'_> {
        let state = match self {
            IntegerSetSpec::Finite(v) => State::Slice(v.iter()),
            IntegerSetSpec::SparseConstructed { anchors, .. } => State::Slice(anchors.iter()),
            IntegerSetSpec::AllFrom(start) => State::Linear {
                next: Some(*start),
                step: 1,
            },
            IntegerSetSpec::ArithmeticProgression { first, step } => State::Linear {
                next: Some(*first),
                step: *step,
            },
            IntegerSetSpec::Powers(base) => State::Powers {
                next: Some(1),
                base: *base,
            },
            IntegerSetSpec::DoublyExponential(base) => State::DoublyExponential {
                exponent: Some(1),
                base: *base,
            },
            IntegerSetSpec::WithZero(inner) => State::Zero {
                zero_pending: true,
                inner: Box::new(inner.iter()),
            },
        };
        Elements { state }
    }

    /// `|{s in set : s <= bound}|` for an integer bound.
    pub fn count_upto(&self, bound: u64) -> u64 {
        match self {
            IntegerSetSpec::Finite(v) | IntegerSetSpec::SparseConstructed { anchors: v, .. } => {
                v.partition_point(|&s| s <= bound) as u64
            }
            IntegerSetSpec::AllFrom(start) => {
                if bound < *start {
                    0
                } else {
                    bound - start + 1
                }
            }
            IntegerSetSpec::ArithmeticProgression { first, step } => {
                if bound < *first {
                    0
                } else {
                    (bound - first) / step + 1
                }
            }
            IntegerSetSpec::WithZero(inner) => 1 + inner.count_upto(bound),
            IntegerSetSpec::Powers(_) | IntegerSetSpec::DoublyExponential(_) => {
                self.iter().take_while(|&s| s <= bound).count() as u64
            }
        }
    }

    /// The counting function `|{s in set : s <= x}|` at an exact rational `x`.
    pub fn count_leq(&self, x: RationalThreshold) -> u64 {
        // s <= num/den  <=>  s <= floor(num/den) for integral s
        self.count_upto(x.floor())
    }

    /// Members `<= bound`, ascending.
    pub fn elements_upto(&self, bound: u64) -> Vec<u64> {
        self.iter().take_while(|&s| s <= bound).collect()
    }

    /// The `j`-th smallest element, 1-based.
    pub fn nth_element(&self, j: usize) -> Option<u64> {
        if j == 0 {
            return None;
        }
        self.iter().nth(j - 1)
    }

    /// Smallest positive member.
    pub fn min_positive(&self) -> Result<u64, Error> {
        self.iter()
            .find(|&s| s > 0)
            .ok_or(Error::NoPositiveElement)
    }
}

fn check_increasing(v: &[u64]) -> Result<(), SetSpecError> {
    if v.is_empty() {
        return Err(SetSpecError::EmptyFinite);
    }
    if v.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SetSpecError::NotStrictlyIncreasing);
    }
    Ok(())
}

fn positive(x: u64, what: &'static str) -> Result<(), SetSpecError> {
    if x == 0 {
        Err(SetSpecError::NotPositive(what))
    } else {
        Ok(())
    }
}

/// Iterator over the members of an [`IntegerSetSpec`].
pub struct Elements<'a> {
    state: State<'a>,
}

enum State<'a> {
    Slice(std::slice::Iter<'a, u64>),
    Linear { next: Option<u64>, step: u64 },
    Powers { next: Option<u64>, base: u64 },
    DoublyExponential { exponent: Option<u64>, base: u64 },
    Zero { zero_pending: bool, inner: Box<Elements<'a>> },
}

impl Iterator for Elements<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        match &mut self.state {
            State::Slice(it) => it.next().copied(),
            State::Linear { next, step } => {
                let cur = (*next)?;
                *next = cur.checked_add(*step);
                Some(cur)
            }
            State::Powers { next, base } => {
                let cur = (*next)?;
                *next = cur.checked_mul(*base);
                Some(cur)
            }
            State::DoublyExponential { exponent, base } => {
                let e = (*exponent)?;
                let value = u32::try_from(e).ok().and_then(|e| base.checked_pow(e));
                *exponent = if value.is_some() { e.checked_mul(*base) } else { None };
                value
            }
            State::Zero { zero_pending, inner } => {
                if *zero_pending {
                    *zero_pending = false;
                    Some(0)
                } else {
                    inner.next()
                }
            }
        }
    }
}

/// An exact nonnegative rational `numerator / denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalThreshold {
    numerator: u64,
    denominator: u64,
}

impl RationalThreshold {
    pub fn new(numerator: u64, denominator: u64) -> Result<Self, SetSpecError> {
        if denominator == 0 {
            return Err(SetSpecError::NotPositive("denominator"));
        }
        Ok(RationalThreshold {
            numerator,
            denominator,
        })
    }

    pub fn integer(value: u64) -> Self {
        RationalThreshold {
            numerator: value,
            denominator: 1,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn floor(&self) -> u64 {
        self.numerator / self.denominator
    }
}

impl fmt::Display for IntegerSetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntegerSetSpec::Finite(v) => write!(f, "finite:{}", join(v)),
            IntegerSetSpec::AllFrom(1) => f.write_str("all"),
            IntegerSetSpec::AllFrom(k) => write!(f, "all-from:{k}"),
            IntegerSetSpec::ArithmeticProgression { first, step } => write!(f, "ap:{first},{step}"),
            IntegerSetSpec::Powers(b) => write!(f, "pow:{b}"),
            IntegerSetSpec::DoublyExponential(b) => write!(f, "dexp:{b}"),
            s @ IntegerSetSpec::WithZero(_) if s.is_nat() => f.write_str("nat"),
            IntegerSetSpec::WithZero(inner) => write!(f, "zero|{inner}"),
            IntegerSetSpec::SparseConstructed {
                source: Some(path), ..
            } => write!(f, "sparse:@{}", path.display()),
            IntegerSetSpec::SparseConstructed { anchors, .. } => {
                write!(f, "sparse:{}", join(anchors))
            }
        }
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// Parses the set-spec mini-language and validates it for `kind`.
pub fn parse_set_spec(text: &str, kind: SetKind) -> Result<IntegerSetSpec, SetSpecError> {
    let mut parser = Parser { text, pos: 0 };
    let spec = parser.spec()?;
    if parser.pos != text.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    spec.validate(kind)?;
    Ok(spec)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, prefix: &str) -> bool {
        if self.rest().starts_with(prefix) {
            self.pos += prefix.len();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> SetSpecError {
        SetSpecError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn spec(&mut self) -> Result<IntegerSetSpec, SetSpecError> {
        if self.eat("zero|") {
            return Ok(IntegerSetSpec::with_zero(self.spec()?));
        }
        if self.eat("all-from:") {
            return Ok(IntegerSetSpec::AllFrom(self.int()?));
        }
        if self.eat("finite:") {
            return Ok(IntegerSetSpec::finite(self.int_list()?));
        }
        if self.eat("ap:") {
            let first = self.int()?;
            if !self.eat(",") {
                return Err(self.error("expected ','"));
            }
            let step = self.int()?;
            return Ok(IntegerSetSpec::ArithmeticProgression { first, step });
        }
        if self.eat("pow:") {
            return Ok(IntegerSetSpec::Powers(self.int()?));
        }
        if self.eat("dexp:") {
            return Ok(IntegerSetSpec::DoublyExponential(self.int()?));
        }
        if self.eat("sparse:@") {
            let path = self.rest().to_string();
            if path.is_empty() {
                return Err(self.error("expected a file path"));
            }
            self.pos = self.text.len();
            let anchors = load_anchors(Path::new(&path))?;
            return Ok(IntegerSetSpec::SparseConstructed {
                anchors,
                source: Some(PathBuf::from(path)),
            });
        }
        if self.eat("sparse:") {
            return Ok(IntegerSetSpec::sparse(self.int_list()?));
        }
        if self.eat("all") {
            return Ok(IntegerSetSpec::all());
        }
        if self.eat("nat") {
            return Ok(IntegerSetSpec::nat());
        }
        Err(self.error("expected a set spec"))
    }

    fn int(&mut self) -> Result<u64, SetSpecError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let value = self.rest()[..digits]
            .parse::<u64>()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn int_list(&mut self) -> Result<Vec<u64>, SetSpecError> {
        let mut out = vec![self.int()?];
        while self.eat(",") {
            out.push(self.int()?);
        }
        Ok(out)
    }
}

/// Reads an anchors file: one integer per line, blank lines ignored.
pub fn load_anchors(path: &Path) -> Result<Vec<u64>, SetSpecError> {
    let io_err = |message: String| SetSpecError::Io {
        path: path.display().to_string(),
        message,
    };
    let text = fs::read_to_string(path).map_err(|e| io_err(e.to_string()))?;
    let mut anchors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let value = line
            .parse::<u64>()
            .map_err(|_| io_err(format!("line {}: not an integer: {line:?}", i + 1)))?;
        anchors.push(value);
    }
    Ok(anchors)
}

/// Renders anchors in the format read by [`load_anchors`].
pub fn anchors_to_text(anchors: &[u64]) -> String {
    anchors.iter().map(|a| format!("{a}\n")).collect()
}

/// A nondecreasing integer step function `eps(x)` tabulated on
/// `[first threshold, end]`.
///
/// `eps(x)` is the value of the last step whose threshold is `<= x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonTable {
    steps: Vec<(u64, u64)>,
    end: u64,
}

impl EpsilonTable {
    pub fn new(steps: Vec<(u64, u64)>, end: u64) -> Result<Self, SetSpecError> {
        let invalid = |m: &str| SetSpecError::InvalidEpsilon(m.to_string());
        let Some(&(last, _)) = steps.last() else {
            return Err(invalid("no steps"));
        };
        if steps.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(invalid("thresholds must be strictly increasing"));
        }
        if steps.windows(2).any(|w| w[0].1 > w[1].1) {
            return Err(invalid("values must be nondecreasing"));
        }
        if end < last {
            return Err(invalid("range end precedes the last threshold"));
        }
        Ok(EpsilonTable { steps, end })
    }

    /// Tabulates `f` on `[start, end]`, recording a step wherever the value changes.
    pub fn from_fn(start: u64, end: u64, f: impl Fn(u64) -> u64) -> Result<Self, SetSpecError> {
        let mut steps: Vec<(u64, u64)> = Vec::new();
        for x in start..=end {
            let v = f(x);
            if steps.last().is_none_or(|&(_, prev)| prev != v) {
                steps.push((x, v));
            }
        }
        EpsilonTable::new(steps, end)
    }

    /// Parses lines `threshold value`; the covered range ends at the last threshold.
    pub fn parse(text: &str) -> Result<Self, SetSpecError> {
        let mut steps = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace().map(str::parse::<u64>);
            match (fields.next(), fields.next(), fields.next()) {
                (Some(Ok(t)), Some(Ok(v)), None) => steps.push((t, v)),
                _ => {
                    return Err(SetSpecError::InvalidEpsilon(format!(
                        "line {}: expected `threshold value`",
                        i + 1
                    )))
                }
            }
        }
        let end = steps.last().map_or(0, |s| s.0);
        EpsilonTable::new(steps, end)
    }

    pub fn to_text(&self) -> String {
        self.steps.iter().map(|(t, v)| format!("{t} {v}\n")).collect()
    }

    pub fn steps(&self) -> &[(u64, u64)] {
        &self.steps
    }

    pub fn start(&self) -> u64 {
        self.steps[0].0
    }

    pub fn end(&self) -> u64 {
        self.end
    }

    /// `None` outside the tabulated range.
    pub fn value_at(&self, x: u64) -> Option<u64> {
        if x > self.end {
            return None;
        }
        let idx = self.steps.partition_point(|&(t, _)| t <= x);
        idx.checked_sub(1).map(|i| self.steps[i].1)
    }
}

/// Builds anchors `a_1 < a_2 < ...` with `a_i` the least `x > a_(i-1)` where
/// `eps(x) >= i + 1`, so that `|{a_i <= n}| + 1 <= eps(n)` for every `n >= a_1`
/// in the tabulated range.
pub fn construct_sparse_set(eps: &EpsilonTable) -> Result<IntegerSetSpec, SetSpecError> {
    let mut anchors: Vec<u64> = Vec::new();
    loop {
        let needed = anchors.len() as u64 + 2;
        // eps is nondecreasing, so {x : eps(x) >= needed} is a suffix of the range
        let Some(&(threshold, _)) = eps.steps.iter().find(|&&(_, v)| v >= needed) else {
            break;
        };
        let candidate = match anchors.last() {
            Some(&prev) => threshold.max(prev + 1),
            None => threshold.max(1),
        };
        if candidate > eps.end {
            break;
        }
        anchors.push(candidate);
    }
    if anchors.is_empty() {
        return Err(SetSpecError::EpsilonTooShort);
    }
    Ok(IntegerSetSpec::sparse(anchors))
}

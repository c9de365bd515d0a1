//! Number-theoretic procedures on part sets: gcds, coprime prefixes,
//! eventual positivity, Frobenius thresholds and the eventual strict
//! monotonicity criterion.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::setspec::IntegerSetSpec;

/// gcd of a slice; the empty slice has gcd 0.
pub fn gcd_slice(values: &[u64]) -> u64 {
    values.iter().fold(0, |g, &v| g.gcd(&v))
}

/// A finite sorted set of distinct positive integers with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteCoprimeSet {
    elements: Vec<u64>,
}

impl FiniteCoprimeSet {
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let spec = IntegerSetSpec::finite(elements);
        spec.validate(crate::SetKind::Parts)?;
        let IntegerSetSpec::Finite(elements) = spec else {
            unreachable!()
        };
        match gcd_slice(&elements) {
            1 => Ok(FiniteCoprimeSet { elements }),
            g => Err(Error::NotCoprime(g)),
        }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> u64 {
        *self.elements.last().expect("nonempty")
    }

    pub fn min(&self) -> u64 {
        self.elements[0]
    }

    /// `a_1 * a_2 * ... * a_k`.
    pub fn product(&self) -> BigUint {
        self.elements.iter().map(|&a| BigUint::from(a)).product()
    }

    pub fn to_spec(&self) -> IntegerSetSpec {
        IntegerSetSpec::Finite(self.elements.clone())
    }
}

impl TryFrom<&IntegerSetSpec> for FiniteCoprimeSet {
    type Error = Error;

    fn try_from(spec: &IntegerSetSpec) -> Result<Self> {
        match spec.finite_elements() {
            Some(v) => FiniteCoprimeSet::new(v.iter().copied()),
            None => Err(Error::Domain(format!("{spec} is not a finite list"))),
        }
    }
}

/// Prefix gcds `g_1 >= g_2 >= ... >= g_(i0) = 1` of an ascending set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixGcdTrace {
    pub gcds: Vec<u64>,
}

impl PrefixGcdTrace {
    pub fn prefix_length(&self) -> usize {
        self.gcds.len()
    }
}

/// gcd of every element of a set, computed per variant.
pub fn gcd_of_set(set: &IntegerSetSpec) -> u64 {
    match set {
        IntegerSetSpec::Finite(v) | IntegerSetSpec::SparseConstructed { anchors: v, .. } => {
            gcd_slice(v)
        }
        IntegerSetSpec::AllFrom(_) | IntegerSetSpec::Powers(_) => 1,
        IntegerSetSpec::ArithmeticProgression { first, step } => first.gcd(step),
        // every element is a power of b, the first being b itself
        IntegerSetSpec::DoublyExponential(b) => *b,
        IntegerSetSpec::WithZero(inner) => gcd_of_set(inner),
    }
}

/// Shortest coprime prefix `{a_1, ..., a_(i0)}` and its gcd trace.
pub fn coprime_prefix(set: &IntegerSetSpec) -> Result<(FiniteCoprimeSet, PrefixGcdTrace)> {
    let g = gcd_of_set(set);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    let mut prefix = Vec::new();
    let mut gcds = Vec::new();
    let mut running = 0u64;
    for a in set.iter().filter(|&a| a > 0) {
        running = running.gcd(&a);
        prefix.push(a);
        gcds.push(running);
        if running == 1 {
            let trace = PrefixGcdTrace { gcds };
            return Ok((FiniteCoprimeSet { elements: prefix }, trace));
        }
    }
    // gcd_of_set is exact, so the loop always reaches 1
    unreachable!("set with gcd 1 has no coprime prefix")
}

/// `p_S(n) > 0` for all large `n` exactly when `gcd(S) = 1`.
pub fn is_eventually_positive(set: &IntegerSetSpec) -> bool {
    gcd_of_set(set) == 1
}

/// Least `N` with every `n >= N` a nonnegative combination of the elements.
///
/// Scans representability upward until `a_1` consecutive representable
/// integers appear; adding `a_1` then covers everything beyond.
pub fn frobenius_threshold(set: &FiniteCoprimeSet) -> u64 {
    let a1 = set.min() as usize;
    let mut reachable = vec![true];
    let mut run = 1usize;
    let mut n = 0usize;
    while run < a1 {
        n += 1;
        let hit = set
            .elements()
            .iter()
            .any(|&a| a as usize <= n && reachable[n - a as usize]);
        reachable.push(hit);
        run = if hit { run + 1 } else { 0 };
    }
    (n + 1 - a1) as u64
}

/// True iff removing any single element leaves a coprime set, i.e. no prime
/// divides all but one element. Always false for `k = 1`.
pub fn eventually_strictly_increasing(set: &FiniteCoprimeSet) -> bool {
    let a = set.elements();
    (0..a.len()).all(|skip| {
        let rest: Vec<u64> = a
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect();
        gcd_slice(&rest) == 1
    })
}

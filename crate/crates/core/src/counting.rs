//! Exact values of `p(n; S, M)`, the number of partitions of `n` with parts
//! in `S` and every multiplicity in `M`.
//!
//! The dynamic program is generic over the count scalar. [`crate::BigCount`]
//! never overflows; fixed-width integers report [`Error::Overflow`] instead of
//! wrapping.

use num_bigint::{BigInt, BigUint};
use num_traits::{CheckedAdd, One, Zero};

use crate::arith::FiniteCoprimeSet;
use crate::error::{Error, Result};
use crate::setspec::{IntegerSetSpec, SetKind};
use crate::BigCount;

/// Scalars a partition count can be accumulated in.
pub trait Count: Clone + Zero + One + CheckedAdd + Ord {}

impl<T> Count for T where T: Clone + Zero + One + CheckedAdd + Ord {}

/// `p(0..=N; S, M)` for one pair of sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable<C = BigCount> {
    parts: IntegerSetSpec,
    mults: IntegerSetSpec,
    values: Vec<C>,
}

impl<C: Count> CountTable<C> {
    pub fn parts(&self) -> &IntegerSetSpec {
        &self.parts
    }

    pub fn mults(&self) -> &IntegerSetSpec {
        &self.mults
    }

    pub fn values(&self) -> &[C] {
        &self.values
    }

    pub fn into_values(self) -> Vec<C> {
        self.values
    }

    /// Largest `n` covered.
    pub fn max_n(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Option<&C> {
        self.values.get(usize::try_from(n).ok()?)
    }

    /// `p(n)`; panics past the end of the table.
    pub fn at(&self, n: u64) -> &C {
        &self.values[n as usize]
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }

    /// Indices `n` where `p(n) = max_{j <= n} p(j)`.
    pub fn record_indices(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut best: Option<&C> = None;
        for (n, v) in self.values.iter().enumerate() {
            if best.is_none_or(|b| v >= b) {
                best = Some(v);
                out.push(n as u64);
            }
        }
        out
    }

    pub fn is_record(&self, n: u64) -> bool {
        let v = self.at(n);
        self.values[..n as usize].iter().all(|w| w <= v)
    }
}

fn validate_pair(parts: &IntegerSetSpec, mults: &IntegerSetSpec) -> Result<()> {
    parts.validate(SetKind::Parts)?;
    mults.validate(SetKind::Multiplicities)?;
    Ok(())
}

/// `p(v; parts, mults)` for every `0 <= v <= n_max`, in one pass.
pub fn count_table<C: Count>(
    n_max: u64,
    parts: &IntegerSetSpec,
    mults: &IntegerSetSpec,
) -> Result<CountTable<C>> {
    validate_pair(parts, mults)?;
    let len = usize::try_from(n_max)
        .ok()
        .and_then(|n| n.checked_add(1))
        .ok_or_else(|| Error::Domain(format!("table size {n_max} too large")))?;
    let mut values = vec![C::zero(); len];
    values[0] = C::one();
    let unrestricted = mults.is_nat();

    for a in parts.iter().take_while(|&a| a <= n_max) {
        let a = a as usize;
        if unrestricted {
            // in place, ascending: values[v - a] already includes part a
            for v in a..len {
                let sum = values[v]
                    .checked_add(&values[v - a])
                    .ok_or(Error::Overflow(v as u64))?;
                values[v] = sum;
            }
        } else {
            let steps: Vec<usize> = mults
                .iter()
                .filter(|&m| m > 0)
                .take_while(|&m| m.saturating_mul(a as u64) <= n_max)
                .map(|m| m as usize * a)
                .collect();
            if steps.is_empty() {
                continue;
            }
            // in place, descending: values[v - step] still holds the previous layer
            for v in (steps[0]..len).rev() {
                let mut sum = values[v].clone();
                for &step in steps.iter().take_while(|&&s| s <= v) {
                    sum = sum
                        .checked_add(&values[v - step])
                        .ok_or(Error::Overflow(v as u64))?;
                }
                values[v] = sum;
            }
        }
    }

    Ok(CountTable {
        parts: parts.clone(),
        mults: mults.clone(),
        values,
    })
}

/// Exact `p(n; parts, mults)`.
pub fn count_partitions<C: Count>(
    n: u64,
    parts: &IntegerSetSpec,
    mults: &IntegerSetSpec,
) -> Result<C> {
    let table = count_table::<C>(n, parts, mults)?;
    Ok(table.into_values().pop().expect("table has n + 1 entries"))
}

/// Largest `n` accepted by [`brute_force_count`].
pub const BRUTE_FORCE_CAP: u64 = 40;

/// Counts partitions by explicit recursive enumeration of multiplicity
/// vectors. Independent of the dynamic program; capped at
/// [`BRUTE_FORCE_CAP`].
pub fn brute_force_count(n: u64, parts: &IntegerSetSpec, mults: &IntegerSetSpec) -> Result<BigCount> {
    if n > BRUTE_FORCE_CAP {
        return Err(Error::BruteForceCap {
            n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    validate_pair(parts, mults)?;
    let candidates = parts.elements_upto(n);
    let allowed = mults.elements_upto(n);

    fn walk(remaining: u64, parts: &[u64], allowed: &[u64]) -> u64 {
        let Some((&a, rest)) = parts.split_first() else {
            return u64::from(remaining == 0);
        };
        allowed
            .iter()
            .take_while(|&&m| m * a <= remaining)
            .map(|&m| walk(remaining - m * a, rest, allowed))
            .sum()
    }

    Ok(BigUint::from(walk(n, &candidates, &allowed)))
}

/// `sum_{j <= n} p(j; parts)` with unrestricted multiplicities.
pub fn cumulative_count<C: Count>(n: u64, parts: &FiniteCoprimeSet) -> Result<C> {
    let table = count_table::<C>(n, &parts.to_spec(), &IntegerSetSpec::nat())?;
    table
        .values()
        .iter()
        .try_fold(C::zero(), |acc, v| acc.checked_add(v))
        .ok_or(Error::Overflow(n))
}

/// Running sums `r'(0..=N)` of a table.
pub fn cumulative_sums(table: &CountTable) -> Vec<BigCount> {
    let mut acc = BigUint::zero();
    table
        .values()
        .iter()
        .map(|v| {
            acc += v;
            acc.clone()
        })
        .collect()
}

/// Unrestricted partition numbers `p(0..=n_max)` from Euler's pentagonal
/// number recurrence, an oracle independent of [`count_table`].
pub fn pentagonal_partition_numbers(n_max: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    p.push(BigInt::one());
    for i in 1..=n_max {
        let mut sum = BigInt::zero();
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[i - g1].clone();
            if g2 <= i {
                term += &p[i - g2];
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        p.push(sum);
    }
    p.into_iter()
        .map(|v| v.to_biguint().expect("partition numbers are nonnegative"))
        .collect()
}

//! Fixed `(parts, multiplicities)` pairs exercised by the verification suites.
//! Together they cover every set variant on both sides.

use crate::setspec::{construct_sparse_set, parse_set_spec, EpsilonTable, IntegerSetSpec, SetKind};

/// Textual pairs; the sparse squares pair is appended by [`corpus`].
pub const PAIRS: &[(&str, &str)] = &[
    ("all", "nat"),
    ("finite:1", "nat"),
    ("finite:2,3", "nat"),
    ("finite:3,5", "nat"),
    ("finite:1,2,3", "nat"),
    ("finite:3,5,7", "nat"),
    ("finite:2,4,5", "nat"),
    ("finite:6,10,15", "nat"),
    ("all", "finite:0,1"),
    ("all-from:3", "nat"),
    ("ap:4,6", "nat"),
    ("ap:1,3", "finite:0,1,2"),
    ("pow:2", "nat"),
    ("pow:3", "zero|ap:1,2"),
    ("dexp:2", "zero|dexp:2"),
    ("finite:3,5,7", "zero|pow:2"),
    ("all", "zero|all-from:2"),
];

/// Squares, built from `eps(x) = 1 + floor(sqrt x)` tabulated on `[1, 1024]`.
pub fn sparse_squares() -> IntegerSetSpec {
    let eps = EpsilonTable::from_fn(1, 1024, |x| 1 + x.isqrt()).expect("valid table");
    construct_sparse_set(&eps).expect("nonempty construction")
}

/// One corpus entry.
#[derive(Debug, Clone)]
pub struct CorpusPair {
    pub parts: IntegerSetSpec,
    pub mults: IntegerSetSpec,
}

impl CorpusPair {
    pub fn label(&self) -> String {
        format!("{} / {}", self.parts, self.mults)
    }
}

pub fn corpus() -> Vec<CorpusPair> {
    let mut out: Vec<CorpusPair> = PAIRS
        .iter()
        .map(|&(p, m)| CorpusPair {
            parts: parse_set_spec(p, SetKind::Parts).expect("corpus parts"),
            mults: parse_set_spec(m, SetKind::Multiplicities).expect("corpus mults"),
        })
        .collect();
    out.push(CorpusPair {
        parts: sparse_squares(),
        mults: IntegerSetSpec::nat(),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_every_variant() {
        let c = corpus();
        assert!(c.len() >= 12);
        let tag = |s: &IntegerSetSpec| std::mem::discriminant(s);
        let mut seen = std::collections::HashSet::new();
        for pair in &c {
            seen.insert(tag(&pair.parts));
            seen.insert(tag(&pair.mults));
        }
        for probe in ["finite:1", "all-from:2", "ap:1,2", "pow:2", "dexp:2", "sparse:1,2"] {
            assert!(seen.contains(&tag(&parse_set_spec(probe, SetKind::Parts).unwrap())), "{probe}");
        }
        assert!(seen.contains(&tag(&IntegerSetSpec::nat())));
    }

    #[test]
    fn squares_anchor_set() {
        let s = sparse_squares();
        let expected: Vec<u64> = (1..=32).map(|i| i * i).collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), expected);
    }
}

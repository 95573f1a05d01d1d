use std::collections::HashMap;

use serde::Serialize;

use crate::ribbon::{format_partition, RibbonInvariants};
use crate::stability::StabilityVerdict;

/// Locus of generalized line bundles with a fixed local index sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Stratum {
    pub indices: Vec<i64>,
    pub dim: i64,
    pub stability: StabilityVerdict,
}

impl Stratum {
    pub fn index(&self) -> i64 {
        self.indices.iter().sum()
    }

    pub fn is_line_bundle_locus(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn label(&self) -> String {
        format!("({})", format_partition(&self.indices))
    }
}

/// `g - Σ (b_i - 1)`.
pub fn stratum_dim(g: i64, indices: &[i64]) -> i64 {
    g - indices.iter().map(|b| b - 1).sum::<i64>()
}

/// Partitions of `n` as weakly decreasing vectors, in ascending lexicographic order.
pub fn partitions_of(n: i64) -> Vec<Vec<i64>> {
    fn go(remaining: i64, max_part: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in 1..=remaining.min(max_part) {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Strata of stable generalized line bundles of degree `d`, optionally
/// followed by the strictly semistable ones, sorted by `(sum, partition)`.
pub fn enumerate_strata(
    ribbon: &RibbonInvariants,
    d: i64,
    include_semistable: bool,
) -> Vec<Stratum> {
    let mut strata = Vec::new();
    let parity_ok = |sum: i64| (d - sum).rem_euclid(2) == 0;
    for sum in 0..=ribbon.max_stable_index() {
        if !parity_ok(sum) {
            continue;
        }
        strata.extend(partitions_of(sum).into_iter().map(|indices| Stratum {
            dim: stratum_dim(ribbon.g(), &indices),
            indices,
            stability: StabilityVerdict::Stable,
        }));
    }
    let semistable = ribbon.semistable_index();
    if include_semistable && semistable >= 0 && parity_ok(semistable) {
        strata.extend(
            partitions_of(semistable)
                .into_iter()
                .map(|indices| Stratum {
                    dim: stratum_dim(ribbon.g(), &indices),
                    indices,
                    stability: StabilityVerdict::StrictlySemistable,
                }),
        );
    }
    strata
}

/// The two elementary degenerations of a local index sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Move {
    /// An index `b0` (possibly 0, i.e. a fresh point) becomes `b0 + 2`.
    Raise { b0: i64 },
    /// Entries `(1, b1)` at two points collide into `b1 + 1`.
    Merge { b1: i64 },
}

impl Move {
    /// Drop in stratum dimension along the move.
    pub fn dim_drop(self) -> i64 {
        match self {
            Move::Raise { b0: 0 } => 1,
            Move::Raise { .. } => 2,
            Move::Merge { .. } => 1,
        }
    }
}

fn canonical(mut parts: Vec<i64>) -> Vec<i64> {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

fn distinct(parts: &[i64]) -> Vec<i64> {
    let mut values = parts.to_vec();
    values.dedup();
    values
}

/// All index sequences reachable from `parts` by one move, each with the
/// move that produces it.
pub fn specializations_of(parts: &[i64]) -> Vec<(Vec<i64>, Move)> {
    let mut out = Vec::new();
    for b0 in distinct(parts) {
        let pos = parts.iter().position(|&b| b == b0).unwrap();
        let mut next = parts.to_vec();
        next[pos] += 2;
        out.push((canonical(next), Move::Raise { b0 }));
    }
    let mut fresh = parts.to_vec();
    fresh.push(2);
    out.push((canonical(fresh), Move::Raise { b0: 0 }));

    if let Some(one) = parts.iter().position(|&b| b == 1) {
        let mut rest = parts.to_vec();
        rest.remove(one);
        for b1 in distinct(&rest) {
            let pos = rest.iter().position(|&b| b == b1).unwrap();
            let mut next = rest.clone();
            next[pos] += 1;
            out.push((canonical(next), Move::Merge { b1 }));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Directed edge from a generic stratum to a stratum in its closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpecializationEdge {
    pub generic: usize,
    pub special: usize,
    pub kind: Move,
}

/// Specialization edges among `strata`, as indices into the slice.
pub fn specialization_edges(strata: &[Stratum]) -> Vec<SpecializationEdge> {
    let position: HashMap<&[i64], usize> = strata
        .iter()
        .enumerate()
        .map(|(i, s)| (s.indices.as_slice(), i))
        .collect();
    let mut edges: Vec<SpecializationEdge> = strata
        .iter()
        .enumerate()
        .flat_map(|(generic, s)| {
            let position = &position;
            specializations_of(&s.indices)
                .into_iter()
                .filter_map(move |(target, kind)| {
                    position
                        .get(target.as_slice())
                        .map(|&special| SpecializationEdge {
                            generic,
                            special,
                            kind,
                        })
                })
        })
        .collect();
    edges.sort();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ribbon(g: i64, gbar: i64) -> RibbonInvariants {
        RibbonInvariants::new(g, gbar).unwrap()
    }

    fn summary(strata: &[Stratum]) -> Vec<(Vec<i64>, i64)> {
        strata.iter().map(|s| (s.indices.clone(), s.dim)).collect()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert!(partitions_of(-1).is_empty());
    }

    #[test]
    fn rational_genus_four_even() {
        let strata = enumerate_strata(&ribbon(4, 0), 0, false);
        assert_eq!(
            summary(&strata),
            vec![
                (vec![], 4),
                (vec![1, 1], 4),
                (vec![2], 3),
                (vec![1, 1, 1, 1], 4),
                (vec![2, 1, 1], 3),
                (vec![2, 2], 2),
                (vec![3, 1], 2),
                (vec![4], 1),
            ]
        );
    }

    #[test]
    fn rational_genus_four_odd() {
        let strata = enumerate_strata(&ribbon(4, 0), 1, false);
        assert_eq!(
            summary(&strata),
            vec![
                (vec![1], 4),
                (vec![1, 1, 1], 4),
                (vec![2, 1], 3),
                (vec![3], 2)
            ]
        );
    }

    #[test]
    fn elliptic_boundary_case() {
        let r = ribbon(1, 1);
        assert!(enumerate_strata(&r, 0, false).is_empty());
        let with_ss = enumerate_strata(&r, 0, true);
        assert_eq!(with_ss.len(), 1);
        assert!(with_ss[0].is_line_bundle_locus());
        assert_eq!(with_ss[0].stability, StabilityVerdict::StrictlySemistable);
    }

    #[test]
    fn moves() {
        let sp = specializations_of(&[1, 1]);
        assert!(sp.contains(&(vec![3, 1], Move::Raise { b0: 1 })));
        assert!(sp.contains(&(vec![2, 1, 1], Move::Raise { b0: 0 })));
        assert!(sp.contains(&(vec![2], Move::Merge { b1: 1 })));
        assert_eq!(sp.len(), 3);

        let sp = specializations_of(&[2, 1]);
        assert!(sp.contains(&(vec![3], Move::Merge { b1: 2 })));

        assert_eq!(
            specializations_of(&[]),
            vec![(vec![2], Move::Raise { b0: 0 })]
        );
    }

    #[test]
    fn edges_drop_dimension() {
        let strata = enumerate_strata(&ribbon(6, 0), 0, true);
        let edges = specialization_edges(&strata);
        assert!(!edges.is_empty());
        for e in &edges {
            let (a, b) = (&strata[e.generic], &strata[e.special]);
            assert_eq!(a.dim - b.dim, e.kind.dim_drop(), "{a:?} -> {b:?}");
            assert!(b.index() >= a.index());
        }
    }
}

//! Partition combinatorics: enumeration in lexicographic order, Kostka
//! coefficients via direct semistandard-tableau counting, and irreducible
//! symmetric-group dimensions via the hook-length formula.

use crate::freealg::MultiDegree;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and positive: {0:?}")]
    InvalidParts(Vec<u32>),
    #[error("shape has weight {0} but content has weight {1}")]
    WeightMismatch(u32, u32),
}

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = !parts.is_empty()
            && parts.windows(2).all(|w| w[0] >= w[1])
            && *parts.last().unwrap() >= 1;
        if ok {
            Ok(Partition(parts))
        } else {
            Err(PartitionError::InvalidParts(parts))
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.0.len()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The multidegree vector (lambda_1, ..., lambda_r).
    pub fn as_multidegree(&self) -> MultiDegree {
        MultiDegree::new(self.0.clone())
    }

    /// True when self >= other in dominance order (prefix sums weakly
    /// larger); both must partition the same n.
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.n(), other.n());
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }
}

/// Lexicographic comparison padding the shorter partition with zeros, so
/// e.g. (3) > (2,1) > (1,1,1).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.0.len().max(other.0.len());
        for i in 0..len {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of n with at most `max_parts` parts, in strictly
/// decreasing lexicographic order.
pub fn partitions_of(n: u32, max_parts: usize) -> Vec<Partition> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    fn rec(
        remaining: u32,
        max_part: u32,
        slots: usize,
        stack: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(stack.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = remaining.min(max_part);
        for p in (1..=hi).rev() {
            stack.push(p);
            rec(remaining - p, p, slots - 1, stack, out);
            stack.pop();
        }
    }
    rec(n, n, max_parts, &mut stack, &mut out);
    out
}

/// Number of semistandard Young tableaux of the given shape and content:
/// the coefficient of t^content in the Schur polynomial of the shape.
/// Computed by direct backtracking over fillings; exact for the small
/// weights used here.
pub fn kostka(shape: &Partition, content: &MultiDegree) -> Result<u64, PartitionError> {
    if shape.n() != content.total() {
        return Err(PartitionError::WeightMismatch(shape.n(), content.total()));
    }
    let rows = shape.num_parts();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0u32; shape.part(r) as usize])
        .collect();
    let mut remaining: Vec<u32> = content.0.clone();
    let mut count = 0u64;
    fill(shape, &mut grid, &mut remaining, 0, 0, &mut count);
    Ok(count)
}

fn fill(
    shape: &Partition,
    grid: &mut Vec<Vec<u32>>,
    remaining: &mut Vec<u32>,
    row: usize,
    col: usize,
    count: &mut u64,
) {
    if row == shape.num_parts() {
        *count += 1;
        return;
    }
    let (next_row, next_col) = if col + 1 < shape.part(row) as usize {
        (row, col + 1)
    } else {
        (row + 1, 0)
    };
    let min_left = if col > 0 { grid[row][col - 1] } else { 1 };
    let min_above = if row > 0 && col < shape.part(row - 1) as usize {
        grid[row - 1][col] + 1
    } else {
        1
    };
    let lo = min_left.max(min_above);
    for value in lo..=remaining.len() as u32 {
        let idx = (value - 1) as usize;
        if remaining[idx] == 0 {
            continue;
        }
        remaining[idx] -= 1;
        grid[row][col] = value;
        fill(shape, grid, remaining, next_row, next_col, count);
        remaining[idx] += 1;
    }
}

/// Memo for Kostka coefficients keyed by (shape, content).
#[derive(Debug, Default)]
pub struct KostkaTable {
    cache: HashMap<(Partition, MultiDegree), u64>,
}

impl KostkaTable {
    pub fn new() -> Self {
        KostkaTable::default()
    }

    pub fn get(&mut self, shape: &Partition, content: &MultiDegree) -> Result<u64, PartitionError> {
        let key = (shape.clone(), content.clone());
        if let Some(&v) = self.cache.get(&key) {
            return Ok(v);
        }
        let v = kostka(shape, content)?;
        self.cache.insert(key, v);
        Ok(v)
    }
}

/// Number of standard Young tableaux of the given shape, by the
/// hook-length formula: n! / prod of hook lengths.
pub fn hook_dim(shape: &Partition) -> u64 {
    let conjugate_len = |col: usize| -> u32 {
        shape
            .parts()
            .iter()
            .take_while(|&&p| p as usize > col)
            .count() as u32
    };
    let mut numerator: u128 = 1;
    for i in 2..=shape.n() as u128 {
        numerator *= i;
    }
    let mut denominator: u128 = 1;
    for (r, &p) in shape.parts().iter().enumerate() {
        for c in 0..p as usize {
            let arm = p - c as u32 - 1;
            let leg = conjugate_len(c) - r as u32 - 1;
            denominator *= (arm + leg + 1) as u128;
        }
    }
    (numerator / denominator) as u64
}

/// n! as u64 (n <= 20).
pub fn factorial(n: u32) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }
    fn md(parts: &[u32]) -> MultiDegree {
        MultiDegree::new(parts.to_vec())
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
    }

    #[test]
    fn enumeration_order() {
        let all = partitions_of(3, 3);
        assert_eq!(all, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let bounded = partitions_of(4, 2);
        assert_eq!(bounded, vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(partitions_of(5, 5).len(), 7);
        assert_eq!(partitions_of(6, 6).len(), 11);
        // strictly decreasing lexicographically
        let six = partitions_of(6, 6);
        for pair in six.windows(2) {
            assert!(pair[0] > pair[1]);
        }
    }

    #[test]
    fn lex_order_pads_with_zeros() {
        assert!(p(&[3]) > p(&[2, 1]));
        assert!(p(&[2, 2]) > p(&[2, 1, 1]));
        // the longer partition wins once the shorter is zero-padded
        assert!(p(&[2, 2, 1]) > p(&[2, 2]));
    }

    #[test]
    fn kostka_golden_values() {
        // correctly printed table entries
        assert_eq!(kostka(&p(&[4]), &md(&[3, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[3, 1]), &md(&[2, 2])).unwrap(), 1);
        assert_eq!(kostka(&p(&[4]), &md(&[2, 1, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 2]), &md(&[2, 1, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[3, 1]), &md(&[2, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[3, 2]), &md(&[3, 1, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 2, 1]), &md(&[2, 1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[3, 2]), &md(&[2, 1, 1, 1])).unwrap(), 3);
        assert_eq!(kostka(&p(&[3, 1, 1]), &md(&[2, 1, 1, 1])).unwrap(), 3);
        // the two entries whose printed values are crossed in the source:
        // direct tableau counts give these
        assert_eq!(kostka(&p(&[3, 2]), &md(&[2, 2, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[3, 1, 1]), &md(&[2, 2, 1])).unwrap(), 1);
    }

    #[test]
    fn kostka_weight_mismatch() {
        assert_eq!(
            kostka(&p(&[3, 1]), &md(&[1, 1, 1])),
            Err(PartitionError::WeightMismatch(4, 3))
        );
    }

    #[test]
    fn kostka_unitriangular_and_dominance() {
        for n in 2..=6u32 {
            let all = partitions_of(n, n as usize);
            for shape in &all {
                assert_eq!(kostka(shape, &shape.as_multidegree()).unwrap(), 1);
                for mu in &all {
                    let k = kostka(shape, &mu.as_multidegree()).unwrap();
                    if !shape.dominates(mu) {
                        assert_eq!(k, 0, "K({shape},{mu}) should vanish");
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_content_permutation_invariant() {
        let shape = p(&[3, 2, 1]);
        let k0 = kostka(&shape, &md(&[3, 2, 1])).unwrap();
        assert_eq!(kostka(&shape, &md(&[1, 2, 3])).unwrap(), k0);
        assert_eq!(kostka(&shape, &md(&[2, 3, 1])).unwrap(), k0);
        let shape = p(&[3, 1, 1]);
        let k0 = kostka(&shape, &md(&[2, 2, 1])).unwrap();
        assert_eq!(kostka(&shape, &md(&[1, 2, 2])).unwrap(), k0);
        assert_eq!(kostka(&shape, &md(&[2, 1, 2])).unwrap(), k0);
    }

    #[test]
    fn kostka_at_multilinear_content_is_hook_dim() {
        for n in 1..=7u32 {
            for shape in partitions_of(n, n as usize) {
                let content = MultiDegree::new(vec![1; n as usize]);
                assert_eq!(
                    kostka(&shape, &content).unwrap(),
                    hook_dim(&shape),
                    "shape {shape}"
                );
            }
        }
    }

    #[test]
    fn hook_dims() {
        assert_eq!(hook_dim(&p(&[5])), 1);
        assert_eq!(hook_dim(&p(&[2, 1])), 2);
        assert_eq!(hook_dim(&p(&[3, 1])), 3);
        assert_eq!(hook_dim(&p(&[2, 2])), 2);
        assert_eq!(hook_dim(&p(&[2, 1, 1])), 3);
        // regular representation of S_3: 1 + 2*2 + 1 = 6
        let total: u64 = partitions_of(3, 3)
            .iter()
            .map(|q| hook_dim(q) * hook_dim(q))
            .sum();
        assert_eq!(total, 6);
        // decomposition M(3,1)+M(2^2)+2M(2,1^2)+M(1^4) has dimension 12
        assert_eq!(
            hook_dim(&p(&[3, 1]))
                + hook_dim(&p(&[2, 2]))
                + 2 * hook_dim(&p(&[2, 1, 1]))
                + hook_dim(&p(&[1, 1, 1, 1])),
            12
        );
        // M(3,2)+M(3,1^2)+M(2,1^3) has dimension 15
        assert_eq!(
            hook_dim(&p(&[3, 2])) + hook_dim(&p(&[3, 1, 1])) + hook_dim(&p(&[2, 1, 1, 1])),
            15
        );
    }

    #[test]
    fn memo_agrees_with_direct_count() {
        let mut table = KostkaTable::new();
        let shape = p(&[3, 2]);
        let content = md(&[2, 2, 1]);
        let v1 = table.get(&shape, &content).unwrap();
        let v2 = table.get(&shape, &content).unwrap();
        assert_eq!(v1, v2);
        assert_eq!(v1, kostka(&shape, &content).unwrap());
    }
}

//! Sparse fraction-free Gaussian elimination over the integers.
//!
//! Rows are kept primitive (content 1, positive leading coefficient) so
//! entries stay small; no rational arithmetic happens until the final
//! conversion to reduced echelon form. Arithmetic runs on i64 with
//! checked operations and falls back to arbitrary precision on the first
//! overflow, so results are exact either way. The reduced echelon form of
//! a span is unique, so the output does not depend on the order rows were
//! offered in.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Sorted sparse integer row: (column, coefficient) with columns strictly
/// increasing and no zero coefficients.
pub type SparseIntRow = Vec<(u32, BigInt)>;

/// Sorted sparse rational row.
pub type SparseRatRow = Vec<(u32, BigRational)>;

type SmallRow = Vec<(u32, i64)>;

/// Divides by the content and flips the sign so the leading coefficient
/// is positive. No-op on the empty row.
pub fn normalize(row: &mut SparseIntRow) {
    if row.is_empty() {
        return;
    }
    let mut content = BigInt::zero();
    for (_, c) in row.iter() {
        content = content.gcd(c);
    }
    if row[0].1.is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for (_, c) in row.iter_mut() {
            *c = &*c / &content;
        }
    }
}

fn normalize_small(row: &mut SmallRow) {
    if row.is_empty() {
        return;
    }
    let mut content: i64 = 0;
    for (_, c) in row.iter() {
        content = content.gcd(c);
    }
    if row[0].1 < 0 {
        content = -content;
    }
    if content != 1 {
        for (_, c) in row.iter_mut() {
            *c /= content;
        }
    }
}

/// a*r + b*p with sorted-merge of the columns.
fn axpy(a: &BigInt, r: &SparseIntRow, b: &BigInt, p: &SparseIntRow) -> SparseIntRow {
    let mut out = SparseIntRow::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take_r = j >= p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i >= r.len() || (j < p.len() && p[j].0 < r[i].0);
        if take_r {
            out.push((r[i].0, a * &r[i].1));
            i += 1;
        } else if take_p {
            out.push((p[j].0, b * &p[j].1));
            j += 1;
        } else {
            let c = a * &r[i].1 + b * &p[j].1;
            if !c.is_zero() {
                out.push((r[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Checked i64 variant; None signals overflow.
fn axpy_small(a: i64, r: &SmallRow, b: i64, p: &SmallRow) -> Option<SmallRow> {
    let mut out = SmallRow::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let take_r = j >= p.len() || (i < r.len() && r[i].0 < p[j].0);
        let take_p = i >= r.len() || (j < p.len() && p[j].0 < r[i].0);
        if take_r {
            out.push((r[i].0, a.checked_mul(r[i].1)?));
            i += 1;
        } else if take_p {
            out.push((p[j].0, b.checked_mul(p[j].1)?));
            j += 1;
        } else {
            let c = a.checked_mul(r[i].1)?.checked_add(b.checked_mul(p[j].1)?)?;
            if c != 0 {
                out.push((r[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    // i64::MIN has no negation, which the normalization step needs
    if out.iter().any(|&(_, c)| c == i64::MIN) {
        return None;
    }
    Some(out)
}

/// Eliminates `row`'s entry at `pivot`'s leading column; both inputs are
/// assumed primitive with positive lead, output is re-normalized.
fn eliminate_at(row: &SparseIntRow, at: usize, pivot: &SparseIntRow) -> SparseIntRow {
    let a = &row[at].1;
    let b = &pivot[0].1;
    let g = a.gcd(b);
    let mut out = axpy(&(b / &g), row, &(-a / &g), pivot);
    normalize(&mut out);
    out
}

fn eliminate_small(row: &SmallRow, pivot: &SmallRow) -> Option<SmallRow> {
    let a = row[0].1;
    let b = pivot[0].1;
    let g = a.gcd(&b);
    let mut out = axpy_small(b / g, row, -(a / g), pivot)?;
    normalize_small(&mut out);
    Some(out)
}

fn widen(row: &SmallRow) -> SparseIntRow {
    row.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()
}

fn shrink(row: &SparseIntRow) -> Option<SmallRow> {
    row.iter()
        .map(|(c, v)| v.to_i64().filter(|&v| v != i64::MIN).map(|v| (*c, v)))
        .collect()
}

/// Incremental row-echelon accumulator with an i64 fast path.
#[derive(Debug, Default)]
pub struct RowReducer {
    small: BTreeMap<u32, SmallRow>,
    big: BTreeMap<u32, SparseIntRow>,
    overflowed: bool,
    columns: Option<usize>,
}

impl RowReducer {
    pub fn new() -> Self {
        RowReducer::default()
    }

    /// Knowing the ambient dimension lets a full span short-circuit:
    /// once rank equals the column count every further row is dependent.
    pub fn with_columns(columns: usize) -> Self {
        RowReducer {
            columns: Some(columns),
            ..RowReducer::default()
        }
    }

    pub fn rank(&self) -> usize {
        if self.overflowed {
            self.big.len()
        } else {
            self.small.len()
        }
    }

    fn is_full(&self) -> bool {
        self.columns.is_some_and(|n| self.rank() >= n)
    }

    fn switch_to_big(&mut self) {
        if !self.overflowed {
            self.big = std::mem::take(&mut self.small)
                .into_iter()
                .map(|(col, row)| (col, widen(&row)))
                .collect();
            self.overflowed = true;
        }
    }

    fn offer_big(&mut self, mut row: SparseIntRow) -> bool {
        normalize(&mut row);
        while let Some((col, _)) = row.first() {
            match self.big.get(col) {
                Some(pivot) => row = eliminate_at(&row, 0, pivot),
                None => break,
            }
        }
        match row.first() {
            None => false,
            Some((col, _)) => {
                self.big.insert(*col, row);
                true
            }
        }
    }

    fn offer_small(&mut self, mut row: SmallRow) -> Result<bool, SmallRow> {
        normalize_small(&mut row);
        while let Some((col, _)) = row.first() {
            match self.small.get(col) {
                Some(pivot) => match eliminate_small(&row, pivot) {
                    Some(reduced) => row = reduced,
                    None => return Err(row),
                },
                None => break,
            }
        }
        match row.first() {
            None => Ok(false),
            Some((col, _)) => {
                self.small.insert(*col, row);
                Ok(true)
            }
        }
    }

    /// Offers a row to the span; returns true when it was independent of
    /// the rows seen so far.
    pub fn offer(&mut self, row: SparseIntRow) -> bool {
        if self.is_full() {
            return false;
        }
        if !self.overflowed {
            match shrink(&row) {
                Some(small) => match self.offer_small(small) {
                    Ok(independent) => return independent,
                    Err(partially_reduced) => {
                        // the partial reduction is still a valid row of
                        // the same span, so resume from it in wide mode
                        self.switch_to_big();
                        return self.offer_big(widen(&partially_reduced));
                    }
                },
                None => self.switch_to_big(),
            }
        }
        self.offer_big(row)
    }

    /// Finishes into reduced echelon form: every pivot column occurs in
    /// exactly one row, leading coefficients are 1, rows sorted by pivot
    /// column.
    pub fn into_rref(mut self) -> Vec<SparseRatRow> {
        self.switch_to_big();
        let pivot_cols: Vec<u32> = self.big.keys().copied().collect();
        let mut reduced: BTreeMap<u32, SparseIntRow> = BTreeMap::new();
        for &col in pivot_cols.iter().rev() {
            let mut row = self.big[&col].clone();
            loop {
                let hit = row
                    .iter()
                    .enumerate()
                    .skip(1)
                    .find(|(_, (c, _))| reduced.contains_key(c))
                    .map(|(i, (c, _))| (i, *c));
                match hit {
                    Some((i, c)) => row = eliminate_at(&row, i, &reduced[&c]),
                    None => break,
                }
            }
            reduced.insert(col, row);
        }
        reduced
            .into_values()
            .map(|row| {
                let lead = BigRational::from_integer(row[0].1.clone());
                row.into_iter()
                    .map(|(c, v)| (c, BigRational::from_integer(v) / &lead))
                    .collect()
            })
            .collect()
    }
}

/// Clears denominators of a rational row and normalizes: the result spans
/// the same line.
pub fn to_primitive_int_row(row: &SparseRatRow) -> SparseIntRow {
    let mut lcm = BigInt::from(1);
    for (_, c) in row {
        lcm = lcm.lcm(c.denom());
    }
    let mut out: SparseIntRow = row
        .iter()
        .map(|(col, c)| {
            (
                *col,
                (c * BigRational::from_integer(lcm.clone())).to_integer(),
            )
        })
        .filter(|(_, c)| !c.is_zero())
        .collect();
    normalize(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(u32, i64)]) -> SparseIntRow {
        entries.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()
    }

    #[test]
    fn rank_of_simple_span() {
        // row1 - row2 = (0,1),(2,-1), so that difference is dependent
        let mut reducer = RowReducer::new();
        assert!(reducer.offer(row(&[(0, 1), (1, 1)])));
        assert!(reducer.offer(row(&[(1, 1), (2, 1)])));
        assert!(!reducer.offer(row(&[(0, 1), (2, -1)])));
        assert_eq!(reducer.rank(), 2);
        // while the sum is independent
        assert!(reducer.offer(row(&[(0, 1), (2, 1)])));
        assert_eq!(reducer.rank(), 3);
    }

    #[test]
    fn normalization_makes_rows_primitive() {
        let mut r = row(&[(0, -4), (3, 6)]);
        normalize(&mut r);
        assert_eq!(r, row(&[(0, 2), (3, -3)]));
    }

    #[test]
    fn rref_is_reduced_and_unit_leading() {
        let mut reducer = RowReducer::new();
        reducer.offer(row(&[(0, 2), (1, 2), (2, 2)]));
        reducer.offer(row(&[(1, 3), (2, 6)]));
        let rref = reducer.into_rref();
        assert_eq!(rref.len(), 2);
        // first row must not contain the second pivot column
        assert_eq!(
            rref[0].iter().map(|(c, _)| *c).collect::<Vec<_>>(),
            vec![0, 2]
        );
        assert_eq!(
            rref[1].iter().map(|(c, _)| *c).collect::<Vec<_>>(),
            vec![1, 2]
        );
        for r in &rref {
            assert_eq!(r[0].1, BigRational::from_integer(BigInt::from(1)));
        }
    }

    #[test]
    fn rref_does_not_depend_on_insertion_order() {
        let rows = [
            row(&[(0, 1), (1, 2), (3, 1)]),
            row(&[(1, 1), (2, 1)]),
            row(&[(0, 3), (2, -1), (3, 3)]),
            row(&[(2, 5), (3, 7)]),
        ];
        let mut forward = RowReducer::new();
        for r in rows.iter() {
            forward.offer(r.clone());
        }
        let mut backward = RowReducer::new();
        for r in rows.iter().rev() {
            backward.offer(r.clone());
        }
        assert_eq!(forward.into_rref(), backward.into_rref());
    }

    #[test]
    fn overflow_falls_back_to_exact_arithmetic() {
        let huge = i64::MAX / 2;
        let mut reducer = RowReducer::new();
        assert!(reducer.offer(row(&[(0, huge), (1, 3)])));
        assert!(reducer.offer(row(&[(0, 7), (1, huge), (2, 1)])));
        assert!(reducer.offer(row(&[(1, 1), (2, huge)])));
        assert_eq!(reducer.rank(), 3);
        // the same span offered in exact arithmetic from the start
        let mut exact = RowReducer::new();
        let scale = BigInt::from(huge);
        exact.offer(vec![(0, scale.clone()), (1, BigInt::from(3))]);
        exact.offer(vec![
            (0, BigInt::from(7)),
            (1, scale.clone()),
            (2, BigInt::from(1)),
        ]);
        exact.offer(vec![(1, BigInt::from(1)), (2, scale)]);
        assert_eq!(reducer.into_rref(), exact.into_rref());
    }

    #[test]
    fn full_span_short_circuits() {
        let mut reducer = RowReducer::with_columns(2);
        assert!(reducer.offer(row(&[(0, 1)])));
        assert!(reducer.offer(row(&[(1, 1)])));
        assert!(!reducer.offer(row(&[(0, 5), (1, -7)])));
        assert_eq!(reducer.rank(), 2);
        let rref = reducer.into_rref();
        assert_eq!(rref.len(), 2);
    }

    #[test]
    fn clears_denominators() {
        let rat: SparseRatRow = vec![
            (0, BigRational::new(BigInt::from(1), BigInt::from(2))),
            (2, BigRational::new(BigInt::from(-2), BigInt::from(3))),
        ];
        assert_eq!(to_primitive_int_row(&rat), row(&[(0, 3), (2, -4)]));
    }
}

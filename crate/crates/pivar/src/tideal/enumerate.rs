//! Enumeration of T-ideal consequence rows in a fixed multidegree.
//!
//! In characteristic 0 a T-ideal equals the T-ideal generated by the full
//! linearizations of its generators, and for a multilinear generator f a
//! general substitution expands multilinearly into substitutions by
//! words. The multidegree-k component of the ideal is therefore spanned
//! by the finitely many elements u * f(w_1,...,w_d) * v where f runs over
//! the linearized generators, the w_i over non-empty words, and u, v over
//! optional words (the algebra has no unit, so an absent multiplier is
//! not the empty word). This routine enumerates exactly those elements.

use super::elim::{normalize, SparseIntRow};
use crate::freealg::{monomial_basis, MultiDegree, Word};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap, HashSet};

/// A linearized generator with denominators cleared: each term is a
/// permutation of the argument indices 0..arity with an integer
/// coefficient.
#[derive(Debug, Clone)]
pub struct LinearGenerator {
    pub arity: usize,
    pub terms: Vec<(Vec<usize>, BigInt)>,
}

/// Words for every sub-multidegree get enumerated repeatedly; memoize.
struct WordCache {
    m: usize,
    cache: HashMap<MultiDegree, Vec<Word>>,
}

impl WordCache {
    fn words(&mut self, k: &MultiDegree) -> &[Word] {
        let m = self.m;
        self.cache
            .entry(k.clone())
            .or_insert_with(|| monomial_basis(m, k))
    }
}

/// All sub-multidegrees s with 0 <= s <= rem componentwise and
/// total(s) >= min_total, leaving at least `reserve` total degree behind.
fn sub_multidegrees(rem: &[u32], min_total: u32, reserve: u32) -> Vec<Vec<u32>> {
    let available = rem.iter().sum::<u32>();
    if available < reserve + min_total {
        return Vec::new();
    }
    let max_total = available - reserve;
    let mut out = Vec::new();
    let mut current = vec![0u32; rem.len()];
    fn rec(
        rem: &[u32],
        idx: usize,
        total: u32,
        min_total: u32,
        max_total: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == rem.len() {
            if total >= min_total {
                out.push(current.clone());
            }
            return;
        }
        for take in 0..=rem[idx].min(max_total - total) {
            current[idx] = take;
            rec(
                rem,
                idx + 1,
                total + take,
                min_total,
                max_total,
                current,
                out,
            );
        }
        current[idx] = 0;
    }
    rec(rem, 0, 0, min_total, max_total, &mut current, &mut out);
    out
}

/// Streams the deduplicated, primitive coefficient rows of all
/// consequences u * f(w_1,...,w_d) * v of multidegree k, expressed over
/// the canonical monomial basis (`column_of` must cover every word of
/// multidegree k). The sink returns false to stop the enumeration early
/// (e.g. once the accumulated span is already full).
pub fn feed_consequence_rows(
    generators: &[LinearGenerator],
    m: usize,
    k: &MultiDegree,
    column_of: &HashMap<Word, u32>,
    sink: &mut impl FnMut(SparseIntRow) -> bool,
) {
    let mut seen: HashSet<SparseIntRow> = HashSet::new();
    let mut cache = WordCache {
        m,
        cache: HashMap::new(),
    };
    for generator in generators {
        if generator.arity as u32 > k.total() {
            continue;
        }
        let mut slots: Vec<Option<Word>> = vec![None; generator.arity + 2];
        let keep_going = emit_tuples(
            generator,
            k.0.clone(),
            0,
            &mut slots,
            &mut cache,
            column_of,
            &mut |row| {
                if seen.insert(row.clone()) {
                    sink(row)
                } else {
                    true
                }
            },
        );
        if !keep_going {
            return;
        }
    }
}

/// Collects every row; used by tests.
#[cfg(test)]
pub fn consequence_rows(
    generators: &[LinearGenerator],
    m: usize,
    k: &MultiDegree,
    column_of: &HashMap<Word, u32>,
) -> Vec<SparseIntRow> {
    let mut rows = Vec::new();
    feed_consequence_rows(generators, m, k, column_of, &mut |row| {
        rows.push(row);
        true
    });
    rows
}

fn emit_tuples(
    generator: &LinearGenerator,
    remaining: Vec<u32>,
    slot: usize,
    slots: &mut Vec<Option<Word>>,
    cache: &mut WordCache,
    column_of: &HashMap<Word, u32>,
    emit: &mut impl FnMut(SparseIntRow) -> bool,
) -> bool {
    let d = generator.arity;
    // last slot: the right multiplier absorbs whatever remains
    if slot == d + 1 {
        let rem_total: u32 = remaining.iter().sum();
        let mut keep_going = true;
        if rem_total == 0 {
            slots[slot] = None;
            keep_going = build_row(generator, slots, column_of, emit);
        } else {
            let k = MultiDegree::new(remaining);
            for w in cache.words(&k).to_vec() {
                slots[slot] = Some(w);
                keep_going = build_row(generator, slots, column_of, emit);
                if !keep_going {
                    break;
                }
            }
        }
        slots[slot] = None;
        return keep_going;
    }
    // middle slots (1..=d) take a non-empty word; slot 0 is the optional
    // left multiplier. Reserve one unit of degree per unfilled middle slot.
    let middles_left = if slot == 0 {
        d as u32
    } else {
        (d - slot) as u32
    };
    let min_total = if slot == 0 { 0 } else { 1 };
    for s in sub_multidegrees(&remaining, min_total, middles_left) {
        let total: u32 = s.iter().sum();
        let next_remaining: Vec<u32> = remaining.iter().zip(&s).map(|(r, t)| r - t).collect();
        let mut keep_going = true;
        if total == 0 {
            slots[slot] = None;
            keep_going = emit_tuples(
                generator,
                next_remaining,
                slot + 1,
                slots,
                cache,
                column_of,
                emit,
            );
        } else {
            let k = MultiDegree::new(s);
            for w in cache.words(&k).to_vec() {
                slots[slot] = Some(w);
                keep_going = emit_tuples(
                    generator,
                    next_remaining.clone(),
                    slot + 1,
                    slots,
                    cache,
                    column_of,
                    emit,
                );
                if !keep_going {
                    break;
                }
            }
        }
        slots[slot] = None;
        if !keep_going {
            return false;
        }
    }
    true
}

fn build_row(
    generator: &LinearGenerator,
    slots: &[Option<Word>],
    column_of: &HashMap<Word, u32>,
    emit: &mut impl FnMut(SparseIntRow) -> bool,
) -> bool {
    let d = generator.arity;
    let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
    for (arg_order, coefficient) in &generator.terms {
        let mut letters: Vec<u32> = Vec::new();
        if let Some(u) = &slots[0] {
            letters.extend_from_slice(u.letters());
        }
        for &arg in arg_order {
            let w = slots[arg + 1]
                .as_ref()
                .expect("middle slots are always filled");
            letters.extend_from_slice(w.letters());
        }
        if let Some(v) = &slots[d + 1] {
            letters.extend_from_slice(v.letters());
        }
        let word = Word::new(letters).expect("concatenation of non-empty words");
        let column = *column_of
            .get(&word)
            .expect("substituted word stays in the selected multidegree");
        let entry = acc.entry(column).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            acc.remove(&column);
        }
    }
    if acc.is_empty() {
        return true;
    }
    let mut row: SparseIntRow = acc.into_iter().collect();
    normalize(&mut row);
    emit(row)
}

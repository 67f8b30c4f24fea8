//! T-ideal consequence spans in fixed multidegree, exact ranks,
//! membership decisions, and cocharacter multiplicities.
//!
//! The key reduction: in characteristic 0 the T-ideal of a set of
//! identities equals the T-ideal of their full linearizations, and for
//! multilinear generators every substitution instance expands into
//! monomial substitutions. Consequence enumeration therefore only ever
//! substitutes words and multiplies by optional outer words, which is
//! finite per multidegree (see `enumerate`).

mod elim;
mod enumerate;

pub use elim::{RowReducer, SparseIntRow, SparseRatRow};

use crate::freealg::{monomial_basis, MultiDegree, Polynomial, Word};
use crate::partitions::{factorial, hook_dim, partitions_of, KostkaTable, Partition};
use enumerate::{feed_consequence_rows, LinearGenerator};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TidealError {
    #[error("degree cap exceeded: {0}")]
    DegreeCapExceeded(String),
    #[error("too many generators after decomposition: {count} > {max}")]
    TooManyGenerators { count: usize, max: usize },
    #[error(
        "negative multiplicity {value} computed for {partition}: the span or Kostka layer is inconsistent"
    )]
    NegativeMultiplicity { partition: Partition, value: i128 },
    #[error("highest-weight check requires a multihomogeneous input whose multidegree is a partition, got {0}")]
    NotAPartitionDegree(MultiDegree),
}

/// Resource bounds for consequence enumeration.
#[derive(Debug, Clone)]
pub struct DegreeCap {
    pub total_degree: u32,
    pub max_ambient: usize,
    pub max_generators: usize,
}

impl Default for DegreeCap {
    fn default() -> Self {
        DegreeCap {
            total_degree: 7,
            max_ambient: 2000,
            max_generators: 8,
        }
    }
}

impl DegreeCap {
    pub fn with_total_degree(total_degree: u32) -> Self {
        DegreeCap {
            total_degree,
            ..DegreeCap::default()
        }
    }

    fn check_multidegree(&self, k: &MultiDegree) -> Result<(), TidealError> {
        if k.total() > self.total_degree {
            return Err(TidealError::DegreeCapExceeded(format!(
                "multidegree {k} has total degree {} > cap {}",
                k.total(),
                self.total_degree
            )));
        }
        let ambient = k.word_count();
        if ambient > self.max_ambient as u128 {
            return Err(TidealError::DegreeCapExceeded(format!(
                "ambient dimension {ambient} at {k} > cap {}",
                self.max_ambient
            )));
        }
        Ok(())
    }
}

/// A set of identities closed for computation: every stored generator is
/// multihomogeneous and non-zero (inputs are decomposed into
/// multihomogeneous components on ingestion, which generates the same
/// T-ideal in characteristic 0), and the integerized full linearizations
/// are cached.
#[derive(Debug, Clone)]
pub struct IdealPresentation {
    generators: Vec<Polynomial>,
    linearized: Vec<LinearGenerator>,
}

impl IdealPresentation {
    pub fn new(polys: &[Polynomial], cap: &DegreeCap) -> Result<Self, TidealError> {
        let mut generators = Vec::new();
        for poly in polys {
            for (_, component) in poly.multidegree_components() {
                if !component.is_zero() {
                    generators.push(component);
                }
            }
        }
        if generators.len() > cap.max_generators {
            return Err(TidealError::TooManyGenerators {
                count: generators.len(),
                max: cap.max_generators,
            });
        }
        let linearized = generators.iter().map(integerized_linearization).collect();
        Ok(IdealPresentation {
            generators,
            linearized,
        })
    }

    pub fn empty() -> Self {
        IdealPresentation {
            generators: Vec::new(),
            linearized: Vec::new(),
        }
    }

    /// The ideal generated by these generators plus `extra`.
    pub fn extended(&self, extra: &[Polynomial], cap: &DegreeCap) -> Result<Self, TidealError> {
        let mut polys = self.generators.clone();
        polys.extend_from_slice(extra);
        IdealPresentation::new(&polys, cap)
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

fn integerized_linearization(generator: &Polynomial) -> LinearGenerator {
    let lin = generator
        .multilinearize()
        .expect("stored generators are multihomogeneous");
    let mut denominator_lcm = BigInt::from(1);
    for (_, c) in lin.terms() {
        denominator_lcm = num_integer::lcm(denominator_lcm, c.denom().clone());
    }
    let arity = lin.max_var() as usize;
    let terms = lin
        .terms()
        .map(|(w, c)| {
            let coefficient = (c * BigRational::from_integer(denominator_lcm.clone())).to_integer();
            let order: Vec<usize> = w.letters().iter().map(|&v| (v - 1) as usize).collect();
            (order, coefficient)
        })
        .collect();
    LinearGenerator { arity, terms }
}

/// Row-reduced exact basis of a consequence span T intersected with one
/// multidegree component. Rows are in reduced echelon form with respect
/// to the canonical monomial order, so the basis is unique for the span.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    multidegree: MultiDegree,
    words: Vec<Word>,
    rows: Vec<SparseRatRow>,
}

impl SpanBasis {
    pub fn multidegree(&self) -> &MultiDegree {
        &self.multidegree
    }

    pub fn ambient_dim(&self) -> usize {
        self.words.len()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn rows(&self) -> &[SparseRatRow] {
        &self.rows
    }

    /// The basis rows as polynomials, in canonical order.
    pub fn row_polynomials(&self) -> Vec<Polynomial> {
        self.rows
            .iter()
            .map(|row| {
                Polynomial::from_terms(
                    row.iter()
                        .map(|(col, c)| (self.words[*col as usize].clone(), c.clone())),
                )
            })
            .collect()
    }

    fn column_of(&self, w: &Word) -> Option<u32> {
        self.words.binary_search(w).ok().map(|i| i as u32)
    }

    fn to_sparse_row(&self, f: &Polynomial) -> Option<SparseRatRow> {
        let mut row: SparseRatRow = Vec::with_capacity(f.num_terms());
        for (w, c) in f.terms() {
            row.push((self.column_of(w)?, c.clone()));
        }
        row.sort_by_key(|(col, _)| *col);
        Some(row)
    }

    /// Normal form of f modulo the span; words outside the component are
    /// untouched by the span, so f is reduced term-exactly.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let Some(mut row) = self.to_sparse_row(f) else {
            // a word outside this multidegree can never be reduced
            return f.clone();
        };
        for pivot in &self.rows {
            let pivot_col = pivot[0].0;
            let coefficient = row
                .iter()
                .find(|(c, _)| *c == pivot_col)
                .map(|(_, v)| v.clone());
            if let Some(coefficient) = coefficient {
                row = sub_scaled(&row, &coefficient, pivot);
            }
        }
        Polynomial::from_terms(
            row.into_iter()
                .map(|(col, c)| (self.words[col as usize].clone(), c)),
        )
    }

    /// Whether f (homogeneous of this multidegree) lies in the span.
    pub fn contains_poly(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        self.reduce(f).is_zero()
    }

    /// JSON per the wire schema: numerators and denominators as strings
    /// so arbitrary-precision values survive.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "multidegree": self.multidegree.0,
            "ambient_dim": self.ambient_dim(),
            "rank": self.rank(),
            "rows": self.rows.iter().map(|row| {
                row.iter().map(|(col, c)| {
                    json!([
                        crate::exprio::print_word(&self.words[*col as usize]),
                        c.numer().to_string(),
                        c.denom().to_string(),
                    ])
                }).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

fn sub_scaled(row: &SparseRatRow, coefficient: &BigRational, pivot: &SparseRatRow) -> SparseRatRow {
    let mut out = SparseRatRow::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, -(coefficient * &pivot[j].1)));
            j += 1;
        } else {
            let c = &row[i].1 - coefficient * &pivot[j].1;
            if !c.is_zero() {
                out.push((row[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// The exact row-reduced basis of the multidegree-k component of the
/// T-ideal, over generators 1..=m.
pub fn consequence_basis(
    ideal: &IdealPresentation,
    m: usize,
    k: &MultiDegree,
    cap: &DegreeCap,
) -> Result<SpanBasis, TidealError> {
    assert_eq!(k.len(), m, "multidegree length must match the universe");
    assert!(k.total() >= 1, "component selector must be non-trivial");
    cap.check_multidegree(k)?;
    let words = monomial_basis(m, k);
    let column_of: HashMap<Word, u32> = words
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i as u32))
        .collect();
    let ambient = words.len();
    let mut reducer = RowReducer::with_columns(ambient);
    // sparser rows first keeps pivots sparse and reduces fill-in
    let mut buffered: Vec<SparseIntRow> = Vec::new();
    feed_consequence_rows(&ideal.linearized, m, k, &column_of, &mut |row| {
        buffered.push(row);
        true
    });
    buffered.sort_by_key(SparseIntRow::len);
    for row in buffered {
        if reducer.rank() >= ambient {
            break;
        }
        reducer.offer(row);
    }
    Ok(SpanBasis {
        multidegree: k.clone(),
        words,
        rows: reducer.into_rref(),
    })
}

/// Whether every multihomogeneous component of g lies in the T-ideal.
/// Exact within the degree cap: no false positives or negatives.
pub fn contains(
    ideal: &IdealPresentation,
    g: &Polynomial,
    cap: &DegreeCap,
) -> Result<bool, TidealError> {
    if g.is_zero() {
        return Ok(true);
    }
    let m = g.max_var() as usize;
    for (k, component) in g.multidegree_components() {
        let span = consequence_basis(ideal, m, &k, cap)?;
        if !span.contains_poly(&component) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cocharacter multiplicities of P_n modulo the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocharTable {
    pub n: u32,
    entries: Vec<(Partition, u64)>,
}

impl CocharTable {
    pub fn entries(&self) -> &[(Partition, u64)] {
        &self.entries
    }

    pub fn multiplicity(&self, shape: &Partition) -> u64 {
        self.entries
            .iter()
            .find(|(p, _)| p == shape)
            .map(|(_, k)| *k)
            .unwrap_or(0)
    }

    /// Non-zero entries only, for compact comparisons.
    pub fn nonzero(&self) -> Vec<(Partition, u64)> {
        self.entries
            .iter()
            .filter(|(_, k)| *k > 0)
            .cloned()
            .collect()
    }

    /// Sum of multiplicity times irreducible dimension: dim P_n(ideal).
    pub fn total_dimension(&self) -> u64 {
        self.entries.iter().map(|(p, k)| k * hook_dim(p)).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "entries": self.entries.iter().map(|(p, k)| {
                json!([p.parts(), k])
            }).collect::<Vec<_>>(),
        })
    }
}

/// Multiplicities by the unitriangular recursion: partitions of n are
/// walked in strictly decreasing lexicographic order and
/// kappa = dim A_r^(lambda) - rank(span at lambda) - sum over mu > lambda
/// of kappa_mu * kostka(mu, lambda), with r the number of parts. A
/// negative intermediate value aborts: it means the span or the Kostka
/// layer is wrong, and clamping would hide that.
pub fn cocharacter(
    ideal: &IdealPresentation,
    n: u32,
    max_parts: usize,
    cap: &DegreeCap,
) -> Result<CocharTable, TidealError> {
    let mut kostka = KostkaTable::new();
    let mut entries: Vec<(Partition, u64)> = Vec::new();
    for shape in partitions_of(n, max_parts) {
        let r = shape.num_parts();
        let degree = shape.as_multidegree();
        let ambient = degree.word_count() as i128;
        let span = consequence_basis(ideal, r, &degree, cap)?;
        let mut value = ambient - span.rank() as i128;
        for (mu, multiplicity) in &entries {
            let correction = kostka
                .get(mu, &degree)
                .expect("weights match by construction");
            value -= (*multiplicity as i128) * correction as i128;
        }
        if value < 0 {
            return Err(TidealError::NegativeMultiplicity {
                partition: shape,
                value,
            });
        }
        entries.push((shape, value as u64));
    }
    Ok(CocharTable { n, entries })
}

/// dim P_n modulo the ideal: n! minus the rank of the multilinear span.
pub fn pn_dim(ideal: &IdealPresentation, n: u32, cap: &DegreeCap) -> Result<u64, TidealError> {
    let k = MultiDegree::new(vec![1; n as usize]);
    let span = consequence_basis(ideal, n as usize, &k, cap)?;
    Ok(factorial(n) - span.rank() as u64)
}

/// Dimensions of the relatively free algebra's multigraded components,
/// for all multidegrees over m generators up to the given total degree.
pub fn hilbert_dims(
    ideal: &IdealPresentation,
    m: usize,
    total_degree_cap: u32,
    cap: &DegreeCap,
) -> Result<BTreeMap<MultiDegree, u64>, TidealError> {
    let mut out = BTreeMap::new();
    let mut current = vec![0u32; m];
    let mut stack: Vec<Vec<u32>> = Vec::new();
    fn rec(m: usize, idx: usize, left: u32, current: &mut Vec<u32>, acc: &mut Vec<Vec<u32>>) {
        if idx == m {
            if current.iter().any(|&k| k > 0) {
                acc.push(current.clone());
            }
            return;
        }
        for take in 0..=left {
            current[idx] = take;
            rec(m, idx + 1, left - take, current, acc);
        }
        current[idx] = 0;
    }
    rec(m, 0, total_degree_cap, &mut current, &mut stack);
    for k in stack {
        let k = MultiDegree::new(k);
        let span = consequence_basis(ideal, m, &k, cap)?;
        out.insert(k.clone(), span.ambient_dim() as u64 - span.rank() as u64);
    }
    Ok(out)
}

/// Whether f generates a highest-weight line modulo the ideal: f is
/// non-zero modulo the span at its multidegree and every raising
/// polarization x_j -> x_i (i < j) lands in the span at the shifted
/// multidegree.
pub fn highest_weight_check(
    ideal: &IdealPresentation,
    f: &Polynomial,
    cap: &DegreeCap,
) -> Result<bool, TidealError> {
    let degree = f
        .multidegree()
        .map_err(|_| TidealError::NotAPartitionDegree(MultiDegree::new(vec![])))?;
    if !degree.is_partition() {
        return Err(TidealError::NotAPartitionDegree(degree));
    }
    let r = degree.len();
    let span = consequence_basis(ideal, r, &degree, cap)?;
    if span.contains_poly(f) {
        return Ok(false);
    }
    for j in 2..=r as u32 {
        for i in 1..j {
            let raised = f.polarization(j, i);
            if raised.is_zero() {
                continue;
            }
            let mut shifted = degree.0.clone();
            shifted[(i - 1) as usize] += 1;
            shifted[(j - 1) as usize] -= 1;
            let shifted = MultiDegree::new(shifted);
            let span = consequence_basis(ideal, r, &shifted, cap)?;
            if !span.contains_poly(&raised) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rank of the span together with extra rows; used for linear
/// independence checks modulo the ideal.
pub fn rank_with_extra(span: &SpanBasis, extra: &[Polynomial]) -> usize {
    let mut reducer = RowReducer::with_columns(span.ambient_dim());
    for row in span.rows() {
        reducer.offer(elim::to_primitive_int_row(row));
    }
    for f in extra {
        let row = span
            .to_sparse_row(f)
            .expect("extra polynomials live in the span's component");
        reducer.offer(elim::to_primitive_int_row(&row));
    }
    reducer.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprio::parse;

    fn cap() -> DegreeCap {
        DegreeCap::default()
    }

    fn ideal(sources: &[&str]) -> IdealPresentation {
        let polys: Vec<Polynomial> = sources.iter().map(|s| parse(s).unwrap()).collect();
        IdealPresentation::new(&polys, &cap()).unwrap()
    }

    fn md(parts: &[u32]) -> MultiDegree {
        MultiDegree::new(parts.to_vec())
    }

    fn partition(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cube_rank_ladder_small() {
        let cube = ideal(&["x^3"]);
        let span = consequence_basis(&cube, 2, &md(&[3, 1]), &cap()).unwrap();
        assert_eq!(span.ambient_dim(), 4);
        assert_eq!(span.rank(), 3);
        // the span is exactly <x^3y, yx^3, x^2yx + xyx^2>
        for member in ["x^3y", "yx^3", "x^2yx + xyx^2"] {
            assert!(span.contains_poly(&parse(member).unwrap()), "{member}");
        }
        assert!(!span.contains_poly(&parse("x^2yx - xyx^2").unwrap()));
        assert!(!span.contains_poly(&parse("x^2yx").unwrap()));

        let span22 = consequence_basis(&cube, 2, &md(&[2, 2]), &cap()).unwrap();
        assert_eq!(span22.ambient_dim(), 6);
        assert_eq!(span22.rank(), 4);

        let span211 = consequence_basis(&cube, 3, &md(&[2, 1, 1]), &cap()).unwrap();
        assert_eq!(span211.ambient_dim(), 12);
        assert_eq!(span211.rank(), 7);
    }

    #[test]
    fn square_commutator_rank_at_2_2() {
        let alg = ideal(&["[x^2,y]"]);
        let span = consequence_basis(&alg, 2, &md(&[2, 2]), &cap()).unwrap();
        assert_eq!(span.rank(), 4);
    }

    #[test]
    fn memberships_from_the_literature() {
        let c = cap();
        assert!(contains(
            &ideal(&["S3(x,y,z)", "x^3"]),
            &parse("[x,y]^2").unwrap(),
            &c
        )
        .unwrap());
        assert!(contains(&ideal(&["x^3"]), &parse("yx^2zt + tyx^2z").unwrap(), &c).unwrap());
        assert!(contains(&ideal(&["[x,y,z]"]), &parse("[x,y]z - z[x,y]").unwrap(), &c).unwrap());
        assert!(!contains(&ideal(&["S4(x,y,z,t)"]), &parse("x^2y^2x").unwrap(), &c).unwrap());
        assert!(!contains(
            &ideal(&["S3(x,y,z)", "[x,y]x^2"]),
            &parse("x^3[x,y]").unwrap(),
            &c
        )
        .unwrap());
    }

    #[test]
    fn free_algebra_cocharacter_is_regular_representation() {
        let free = IdealPresentation::empty();
        for n in 1..=5u32 {
            let table = cocharacter(&free, n, n as usize, &cap()).unwrap();
            for (shape, multiplicity) in table.entries() {
                assert_eq!(*multiplicity, hook_dim(shape), "free algebra at {shape}");
            }
            assert_eq!(table.total_dimension(), factorial(n));
        }
    }

    #[test]
    fn cube_cocharacters_degree_4() {
        let cube = ideal(&["x^3"]);
        let table = cocharacter(&cube, 4, 4, &cap()).unwrap();
        assert_eq!(table.multiplicity(&partition(&[4])), 0);
        assert_eq!(table.multiplicity(&partition(&[3, 1])), 1);
        assert_eq!(table.multiplicity(&partition(&[2, 2])), 1);
        assert_eq!(table.multiplicity(&partition(&[2, 1, 1])), 2);
        assert_eq!(table.multiplicity(&partition(&[1, 1, 1, 1])), 1);
        assert_eq!(pn_dim(&cube, 4, &cap()).unwrap(), 12);
    }

    #[test]
    fn pn_dims_of_free_algebra() {
        let free = IdealPresentation::empty();
        assert_eq!(pn_dim(&free, 4, &cap()).unwrap(), 24);
    }

    #[test]
    fn hilbert_dims_free_algebra_are_multinomials() {
        let free = IdealPresentation::empty();
        let dims = hilbert_dims(&free, 2, 4, &cap()).unwrap();
        assert_eq!(dims[&md(&[3, 1])], 4);
        assert_eq!(dims[&md(&[2, 2])], 6);
        assert_eq!(dims[&md(&[0, 2])], 1);
    }

    #[test]
    fn highest_weight_examples() {
        let cube = ideal(&["x^3"]);
        assert!(highest_weight_check(&cube, &parse("xy^2x").unwrap(), &cap()).unwrap());
        assert!(highest_weight_check(&cube, &parse("x^2yx").unwrap(), &cap()).unwrap());
        // x^3 itself is zero modulo the ideal
        assert!(!highest_weight_check(&cube, &parse("x^3").unwrap(), &cap()).unwrap());
        // xy^2x shifted to a non-partition multidegree is rejected
        let err = highest_weight_check(&cube, &parse("xy^2").unwrap(), &cap());
        assert!(matches!(err, Err(TidealError::NotAPartitionDegree(_))));
    }

    #[test]
    fn rank_monotone_under_extra_generators() {
        let small = ideal(&["[x^2,y]"]);
        let large = ideal(&["[x^2,y]", "x^3"]);
        for k in [md(&[2, 2]), md(&[3, 1]), md(&[2, 1])] {
            let a = consequence_basis(&small, 2, &k, &cap()).unwrap().rank();
            let b = consequence_basis(&large, 2, &k, &cap()).unwrap().rank();
            assert!(a <= b, "rank dropped at {k}");
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let cube = ideal(&["x^3"]);
        let tight = DegreeCap::with_total_degree(3);
        let err = consequence_basis(&cube, 2, &md(&[3, 1]), &tight);
        assert!(matches!(err, Err(TidealError::DegreeCapExceeded(_))));
    }

    #[test]
    fn span_json_shape() {
        let cube = ideal(&["x^3"]);
        let span = consequence_basis(&cube, 2, &md(&[3, 1]), &cap()).unwrap();
        let value = span.to_json();
        assert_eq!(value["rank"], 3);
        assert_eq!(value["ambient_dim"], 4);
        assert_eq!(value["rows"].as_array().unwrap().len(), 3);
    }
}

//! Exact arithmetic in the free non-unitary associative algebra over the
//! rationals, with multigrading, substitution, linearization and
//! polarization operators.
//!
//! Generators are indexed from 1. Words (monomials) are non-empty letter
//! sequences; the empty word is not representable because the algebra has
//! no unit. Polynomials are kept in canonical form: a sorted term map with
//! no zero coefficients, ordered degree-lexicographically.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// 1-based generator index.
pub type Var = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FreeAlgError {
    #[error("word must be a non-empty sequence of generator indices >= 1")]
    InvalidWord,
    #[error("polynomial is not multihomogeneous: found multidegrees {0:?} and {1:?}")]
    NotMultihomogeneous(MultiDegree, MultiDegree),
    #[error("variable x{0} occurs in the polynomial but has no image under the substitution")]
    UnmappedVariable(Var),
}

/// A monomial of the free non-unitary algebra: a non-empty sequence of
/// generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<Var>);

impl Word {
    pub fn new(letters: Vec<Var>) -> Result<Self, FreeAlgError> {
        if letters.is_empty() || letters.contains(&0) {
            return Err(FreeAlgError::InvalidWord);
        }
        Ok(Word(letters))
    }

    /// Single-letter word.
    pub fn var(v: Var) -> Self {
        assert!(v >= 1, "generator indices start at 1");
        Word(vec![v])
    }

    pub fn letters(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // words are non-empty by construction
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn max_var(&self) -> Var {
        *self.0.iter().max().expect("non-empty")
    }

    /// Occurrence counts per generator, as a vector of length `m`.
    pub fn multidegree(&self, m: usize) -> MultiDegree {
        let mut deg = vec![0u32; m];
        for &v in &self.0 {
            let i = (v - 1) as usize;
            assert!(i < m, "letter x{v} outside universe of {m} generators");
            deg[i] += 1;
        }
        MultiDegree(deg)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree-lexicographic order: shorter words first, ties broken by the
/// letter sequence with 1 < 2 < ...; this is the canonical term order used
/// by every printed polynomial and every rank computation.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::exprio::print_word(self))
    }
}

/// Per-generator degree vector (k_1, ..., k_m).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<u32>);

impl MultiDegree {
    pub fn new(degrees: Vec<u32>) -> Self {
        MultiDegree(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    /// True when the entries are weakly decreasing and positive, i.e. the
    /// vector is a partition written with no trailing zeros.
    pub fn is_partition(&self) -> bool {
        !self.0.is_empty()
            && self.0.windows(2).all(|w| w[0] >= w[1])
            && *self.0.last().unwrap() >= 1
    }

    /// Number of words of this multidegree: (sum k_i)! / prod k_i!.
    pub fn word_count(&self) -> u128 {
        let mut count: u128 = 1;
        let mut placed: u128 = 0;
        for &k in &self.0 {
            for j in 1..=k as u128 {
                placed += 1;
                count = count * placed / j;
            }
        }
        count
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Element of the free algebra: a finite rational combination of words in
/// canonical form (sorted, no zero coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Word, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The generator x_v as a polynomial.
    pub fn var(v: Var) -> Self {
        Polynomial::from_word(Word::var(v))
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigRational::one());
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, BigRational)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest generator index occurring in any term, or 0 for the zero
    /// polynomial.
    pub fn max_var(&self) -> Var {
        self.terms.keys().map(Word::max_var).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Polynomial {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Product: word concatenation extended bilinearly.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Commutator fg - gf.
    pub fn commutator(&self, other: &Polynomial) -> Polynomial {
        self.mul(other).sub(&other.mul(self))
    }

    /// Left-normed commutator [[..[p_1,p_2],..],p_k].
    pub fn commutator_chain(polys: &[Polynomial]) -> Polynomial {
        assert!(polys.len() >= 2, "commutator needs at least two arguments");
        let mut acc = polys[0].commutator(&polys[1]);
        for p in &polys[2..] {
            acc = acc.commutator(p);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        assert!(e >= 1, "no unit: exponents start at 1");
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Sum of the terms whose word has exactly k_i occurrences of
    /// generator i.
    pub fn multidegree_component(&self, k: &MultiDegree) -> Polynomial {
        let m = k.len();
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.max_var() as usize <= m && w.multidegree(m) == *k)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits into multihomogeneous components, keyed by multidegree over
    /// the universe 1..=m where m is the largest occurring generator.
    pub fn multidegree_components(&self) -> BTreeMap<MultiDegree, Polynomial> {
        let m = self.max_var() as usize;
        let mut out: BTreeMap<MultiDegree, Polynomial> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.multidegree(m))
                .or_default()
                .add_term(w.clone(), c.clone());
        }
        out
    }

    /// The common multidegree when the polynomial is multihomogeneous.
    pub fn multidegree(&self) -> Result<MultiDegree, FreeAlgError> {
        let m = self.max_var() as usize;
        let mut found: Option<MultiDegree> = None;
        for w in self.terms.keys() {
            let d = w.multidegree(m);
            match &found {
                None => found = Some(d),
                Some(prev) if *prev != d => {
                    return Err(FreeAlgError::NotMultihomogeneous(prev.clone(), d))
                }
                _ => {}
            }
        }
        found.ok_or(FreeAlgError::NotMultihomogeneous(
            MultiDegree(vec![]),
            MultiDegree(vec![]),
        ))
    }

    /// Applies the algebra endomorphism sending x_v to `map(v)`. Every
    /// variable occurring in the polynomial must be mapped; images may be
    /// arbitrary polynomials (words of a zero image simply vanish).
    pub fn substitute(&self, map: &BTreeMap<Var, Polynomial>) -> Result<Polynomial, FreeAlgError> {
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            let mut image: Option<Polynomial> = None;
            for &v in w.letters() {
                let img = map.get(&v).ok_or(FreeAlgError::UnmappedVariable(v))?;
                image = Some(match image {
                    None => img.clone(),
                    Some(acc) => acc.mul(img),
                });
            }
            if let Some(p) = image {
                out = out.add(&p.scale(c));
            }
        }
        Ok(out)
    }

    /// Renames variables: x_v -> x_{map(v)}, identity where unmapped.
    pub fn rename(&self, map: &BTreeMap<Var, Var>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            let letters = w
                .letters()
                .iter()
                .map(|v| *map.get(v).unwrap_or(v))
                .collect();
            out.add_term(Word(letters), c.clone());
        }
        out
    }

    /// Full multilinearization of a multihomogeneous polynomial of
    /// multidegree (d_1, ..., d_m): each x_i is replaced by a sum of d_i
    /// fresh variables and the multilinear component is extracted. Fresh
    /// variables are numbered in blocks, increasing with the original
    /// variable: x_1's block first, then x_2's, and so on. The result is
    /// multilinear in n = sum d_i variables.
    pub fn multilinearize(&self) -> Result<Polynomial, FreeAlgError> {
        let degree = self.multidegree()?;
        let mut offset = vec![0u32; degree.len() + 1];
        for i in 0..degree.len() {
            offset[i + 1] = offset[i] + degree.0[i];
        }
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            // positions of each variable inside the word
            let mut occurrences: BTreeMap<Var, Vec<usize>> = BTreeMap::new();
            for (pos, &v) in w.letters().iter().enumerate() {
                occurrences.entry(v).or_default().push(pos);
            }
            let per_var: Vec<(Var, Vec<usize>)> = occurrences.into_iter().collect();
            let mut letters = vec![0u32; w.len()];
            distribute_blocks(&per_var, 0, &offset, &mut letters, &mut |assigned| {
                out.add_term(Word(assigned.to_vec()), c.clone());
            });
        }
        Ok(out)
    }

    /// Identifies the variables of each group to a single variable: the
    /// inverse of linearization up to the factor prod d_i!. Variables
    /// without a group label are left unchanged.
    pub fn symmetrize_identify(&self, grouping: &BTreeMap<Var, Var>) -> Polynomial {
        self.rename(grouping)
    }

    /// The derivation-style raising operator: replaces one occurrence of
    /// `from` by `to` in each word, summed over occurrences.
    pub fn polarization(&self, from: Var, to: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            for (pos, &v) in w.letters().iter().enumerate() {
                if v == from {
                    let mut letters = w.letters().to_vec();
                    letters[pos] = to;
                    out.add_term(Word(letters), c.clone());
                }
            }
        }
        out
    }
}

/// Assigns fresh block indices to the occurrence positions of each
/// variable, in all possible ways.
fn distribute_blocks(
    per_var: &[(Var, Vec<usize>)],
    idx: usize,
    offset: &[u32],
    letters: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    if idx == per_var.len() {
        emit(letters);
        return;
    }
    let (v, positions) = &per_var[idx];
    let base = offset[(*v - 1) as usize];
    let mut perm: Vec<u32> = (1..=positions.len() as u32).collect();
    permute_all(&mut perm, 0, &mut |p| {
        for (slot, &pos) in positions.iter().enumerate() {
            letters[pos] = base + p[slot];
        }
        distribute_blocks(per_var, idx + 1, offset, letters, emit);
    });
}

fn permute_all(items: &mut Vec<u32>, from: usize, visit: &mut impl FnMut(&[u32])) {
    if from == items.len() {
        visit(items);
        return;
    }
    for i in from..items.len() {
        items.swap(from, i);
        permute_all(items, from + 1, visit);
        items.swap(from, i);
    }
}

/// All words of multidegree k over generators 1..=m, in canonical
/// (degree-lexicographic) order. The length equals the multinomial
/// coefficient (sum k)! / prod k_i!.
pub fn monomial_basis(m: usize, k: &MultiDegree) -> Vec<Word> {
    assert_eq!(
        k.len(),
        m,
        "multidegree length must equal the universe size"
    );
    assert!(
        k.total() >= 1,
        "component selector must have total degree >= 1"
    );
    let mut remaining: Vec<u32> = k.0.clone();
    let mut current: Vec<Var> = Vec::with_capacity(k.total() as usize);
    let mut out = Vec::new();
    fn rec(remaining: &mut Vec<u32>, current: &mut Vec<Var>, out: &mut Vec<Word>) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(Word(current.clone()));
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                current.push(i as Var + 1);
                rec(remaining, current, out);
                current.pop();
                remaining[i] += 1;
            }
        }
    }
    rec(&mut remaining, &mut current, &mut out);
    out
}

/// Signature of a permutation given as a slice of distinct values.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut sign = 1i64;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn for_each_permutation(n: usize, visit: &mut impl FnMut(&[usize], i64)) {
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(items: &mut Vec<usize>, from: usize, visit: &mut impl FnMut(&[usize], i64)) {
        if from == items.len() {
            let sign = permutation_sign(items);
            visit(items, sign);
            return;
        }
        for i in from..items.len() {
            items.swap(from, i);
            rec(items, from + 1, visit);
            items.swap(from, i);
        }
    }
    rec(&mut items, 0, visit);
}

/// Standard polynomial S_n(p_1,...,p_n) = sum over permutations of
/// sgn(s) p_{s(1)} ... p_{s(n)}.
pub fn standard_polynomial(args: &[Polynomial]) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_permutation(args.len(), &mut |perm, sign| {
        let mut prod = args[perm[0]].clone();
        for &i in &perm[1..] {
            prod = prod.mul(&args[i]);
        }
        out = out.add(&prod.scale_int(sign));
    });
    out
}

/// Full symmetrization h_n(p_1,...,p_n) = sum over permutations of
/// p_{s(1)} ... p_{s(n)}; h_n(x,...,x) = n! x^n.
pub fn symmetric_polynomial(args: &[Polynomial]) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_permutation(args.len(), &mut |perm, _| {
        let mut prod = args[perm[0]].clone();
        for &i in &perm[1..] {
            prod = prod.mul(&args[i]);
        }
        out = out.add(&prod);
    });
    out
}

/// Capelli-style alternating sum with interleaved slots:
/// sum over s in S_3 of sgn(s) a_{s(1)} m_1 a_{s(2)} m_2 a_{s(3)},
/// where either interleaved slot may be absent (the non-unitary analogue
/// of substituting 1).
pub fn capelli_d3(
    args: &[Polynomial; 3],
    mid1: Option<&Polynomial>,
    mid2: Option<&Polynomial>,
) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_permutation(3, &mut |perm, sign| {
        let mut prod = args[perm[0]].clone();
        if let Some(m) = mid1 {
            prod = prod.mul(m);
        }
        prod = prod.mul(&args[perm[1]]);
        if let Some(m) = mid2 {
            prod = prod.mul(m);
        }
        prod = prod.mul(&args[perm[2]]);
        out = out.add(&prod.scale_int(sign));
    });
    out
}

/// d_3(a_1,a_2,a_3; m, 1): the second interleaved slot left empty.
pub fn capelli_d3_with_tail(args: &[Polynomial; 3], mid: &Polynomial) -> Polynomial {
    capelli_d3(args, Some(mid), None)
}

/// Rational p/q from machine integers.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Integer rational.
pub fn int(p: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(p))
}

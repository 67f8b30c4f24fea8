//! Finite-dimensional structure-constant algebras used as witnesses:
//! identity checking by full linearization over basis tuples, evaluation
//! at concrete assignments, and exhaustive search for non-vanishing
//! witnesses.

use crate::freealg::{Polynomial, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("unknown algebra name '{0}' (builtins: A1, B1, B2, kx:N)")]
    UnknownName(String),
    #[error("structure constant table has the wrong shape")]
    BadTable,
    #[error("multiplication is not associative: (b{i} b{j}) b{k} != b{i} (b{j} b{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("variable x{0} has no assigned value")]
    UnassignedVariable(Var),
    #[error("'{0}' is not a basis element label of this algebra")]
    UnknownBasisLabel(String),
    #[error("malformed assignment '{0}': expected var=basis_label pairs separated by commas")]
    BadAssignment(String),
    #[error("invalid JSON algebra: {0}")]
    Json(#[from] serde_json::Error),
}

/// Coordinate vector over the algebra basis.
pub type Element = Vec<BigRational>;

/// An associative algebra given by structure constants:
/// table[i][j] is the coordinate vector of basis_i * basis_j.
/// Associativity is checked at construction.
#[derive(Debug, Clone)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    table: Vec<Vec<Element>>,
}

impl Algebra {
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        table: Vec<Vec<Element>>,
    ) -> Result<Self, ModelError> {
        let dim = basis.len();
        let shape_ok = table.len() == dim
            && table
                .iter()
                .all(|row| row.len() == dim && row.iter().all(|e| e.len() == dim));
        if dim == 0 || !shape_ok {
            return Err(ModelError::BadTable);
        }
        let algebra = Algebra {
            name: name.into(),
            basis,
            table,
        };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let left = algebra.multiply(&algebra.table[i][j], &algebra.basis_element(k));
                    let right = algebra.multiply(&algebra.basis_element(i), &algebra.table[j][k]);
                    if left != right {
                        return Err(ModelError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(algebra)
    }

    /// Builtin witnesses. `kx:N` is the non-unitary truncated polynomial
    /// algebra K[x]/(x^N), N >= 2, with basis x, x^2, ..., x^{N-1}.
    pub fn builtin(name: &str) -> Result<Self, ModelError> {
        let one = BigRational::one;
        let zero = BigRational::zero;
        let e = |coords: [i64; 2]| -> Element {
            coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect()
        };
        match name {
            // a^2 = a, ab = 0, ba = b, b^2 = 0; isomorphic to the span of
            // the matrix units e11, e21
            "A1" => Algebra::new(
                "A1",
                vec!["a".into(), "b".into()],
                vec![vec![e([1, 0]), e([0, 0])], vec![e([0, 1]), e([0, 0])]],
            ),
            "B1" => Algebra::new(
                "B1",
                vec!["e11".into(), "e21".into()],
                vec![vec![e([1, 0]), e([0, 0])], vec![e([0, 1]), e([0, 0])]],
            ),
            "B2" => Algebra::new(
                "B2",
                vec!["e11".into(), "e12".into()],
                vec![vec![e([1, 0]), e([0, 1])], vec![e([0, 0]), e([0, 0])]],
            ),
            other => {
                let truncated = other.strip_prefix("kx:").or_else(|| {
                    other
                        .strip_prefix("KxTrunc(")
                        .and_then(|r| r.strip_suffix(')'))
                });
                if let Some(n_text) = truncated {
                    let n: usize = n_text
                        .parse()
                        .map_err(|_| ModelError::UnknownName(other.into()))?;
                    if n < 2 {
                        return Err(ModelError::UnknownName(other.into()));
                    }
                    let dim = n - 1;
                    let basis: Vec<String> = (1..=dim)
                        .map(|i| if i == 1 { "x".into() } else { format!("x^{i}") })
                        .collect();
                    let table: Vec<Vec<Element>> = (1..=dim)
                        .map(|i| {
                            (1..=dim)
                                .map(|j| {
                                    let mut coords = vec![zero(); dim];
                                    if i + j <= dim {
                                        coords[i + j - 1] = one();
                                    }
                                    coords
                                })
                                .collect()
                        })
                        .collect();
                    Algebra::new(format!("kx:{n}"), basis, table)
                } else {
                    Err(ModelError::UnknownName(other.into()))
                }
            }
        }
    }

    /// Loads {dim, basis, table} from JSON; coordinates are [num, den]
    /// pairs.
    pub fn from_json(name: impl Into<String>, text: &str) -> Result<Self, ModelError> {
        #[derive(Deserialize)]
        struct Raw {
            dim: usize,
            basis: Vec<String>,
            table: Vec<Vec<Vec<(i64, i64)>>>,
        }
        let raw: Raw = serde_json::from_str(text)?;
        if raw.basis.len() != raw.dim {
            return Err(ModelError::BadTable);
        }
        let table = raw
            .table
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|coords| {
                        coords
                            .into_iter()
                            .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Algebra::new(name, raw.basis, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn zero(&self) -> Element {
        vec![BigRational::zero(); self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = self.zero();
        e[i] = BigRational::one();
        e
    }

    pub fn element_by_label(&self, label: &str) -> Result<Element, ModelError> {
        self.basis
            .iter()
            .position(|b| b == label)
            .map(|i| self.basis_element(i))
            .ok_or_else(|| ModelError::UnknownBasisLabel(label.into()))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut out = self.zero();
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let scale = ca * cb;
                for (slot, coord) in out.iter_mut().zip(&self.table[i][j]) {
                    *slot += &scale * coord;
                }
            }
        }
        out
    }

    pub fn is_zero_element(&self, e: &Element) -> bool {
        e.iter().all(|c| c.is_zero())
    }

    /// Human-readable rendering: "0", "-b", "e11 + 2*e12".
    pub fn format_element(&self, e: &Element) -> String {
        let mut out = String::new();
        for (i, c) in e.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &BigRational::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !magnitude.is_one() {
                out.push_str(&crate::exprio::print_coefficient(&magnitude));
                out.push('*');
            }
            out.push_str(&self.basis[i]);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

/// Values for the variables of a polynomial.
#[derive(Debug, Clone, Default)]
pub struct Assignment(pub BTreeMap<Var, Element>);

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn set(&mut self, v: Var, e: Element) {
        self.0.insert(v, e);
    }

    /// Parses "x=a,y=b" against the algebra's basis labels.
    pub fn parse(algebra: &Algebra, text: &str) -> Result<Self, ModelError> {
        let mut out = Assignment::new();
        for pair in text.split(',') {
            let pair = pair.trim();
            if pair.is_empty() {
                continue;
            }
            let (var_text, label) = pair
                .split_once('=')
                .ok_or_else(|| ModelError::BadAssignment(pair.into()))?;
            let var = crate::exprio::var_index(var_text.trim())
                .ok_or_else(|| ModelError::BadAssignment(pair.into()))?;
            out.set(var, algebra.element_by_label(label.trim())?);
        }
        Ok(out)
    }

    pub fn describe(&self, algebra: &Algebra) -> String {
        self.0
            .iter()
            .map(|(v, e)| {
                format!(
                    "{}={}",
                    crate::exprio::var_name(*v),
                    algebra.format_element(e)
                )
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Image of f under the evaluation homomorphism.
pub fn evaluate(
    f: &Polynomial,
    algebra: &Algebra,
    assignment: &Assignment,
) -> Result<Element, ModelError> {
    let mut out = algebra.zero();
    for (word, coefficient) in f.terms() {
        let mut product: Option<Element> = None;
        for &v in word.letters() {
            let value = assignment
                .0
                .get(&v)
                .ok_or(ModelError::UnassignedVariable(v))?;
            product = Some(match product {
                None => value.clone(),
                Some(acc) => algebra.multiply(&acc, value),
            });
        }
        let product = product.expect("words are non-empty");
        for (slot, coord) in out.iter_mut().zip(&product) {
            *slot += coefficient * coord;
        }
    }
    Ok(out)
}

fn vars_of(f: &Polynomial) -> Vec<Var> {
    let mut vars: Vec<Var> = Vec::new();
    for (w, _) in f.terms() {
        for &v in w.letters() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    vars.sort_unstable();
    vars
}

/// Evaluates a multilinear polynomial on every tuple of basis elements;
/// returns true when all evaluations vanish. Complete for identity
/// checking in characteristic 0.
fn vanishes_on_basis_tuples(algebra: &Algebra, multilinear: &Polynomial) -> bool {
    let vars = vars_of(multilinear);
    let dim = algebra.dim();
    let mut tuple = vec![0usize; vars.len()];
    loop {
        let mut assignment = Assignment::new();
        for (slot, &v) in vars.iter().enumerate() {
            assignment.set(v, algebra.basis_element(tuple[slot]));
        }
        let value = evaluate(multilinear, algebra, &assignment).expect("all variables assigned");
        if !algebra.is_zero_element(&value) {
            return false;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == tuple.len() {
                return true;
            }
            tuple[i] += 1;
            if tuple[i] < dim {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// Whether f vanishes identically on the algebra. Decided by fully
/// linearizing each multihomogeneous component and checking all basis
/// tuples; a handful of pseudo-random rational assignments cross-check
/// the verdict.
pub fn satisfies(algebra: &Algebra, f: &Polynomial) -> bool {
    let identity = f.multidegree_components().values().all(|component| {
        let linearized = component
            .multilinearize()
            .expect("components are multihomogeneous");
        vanishes_on_basis_tuples(algebra, &linearized)
    });
    if identity {
        let mut rng = ChaCha8Rng::seed_from_u64(0x9d_1ea1);
        let vars = vars_of(f);
        for _ in 0..8 {
            let mut assignment = Assignment::new();
            for &v in &vars {
                let coords: Element = (0..algebra.dim())
                    .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3))))
                    .collect();
                assignment.set(v, coords);
            }
            let value = evaluate(f, algebra, &assignment).expect("all variables assigned");
            assert!(
                algebra.is_zero_element(&value),
                "linearization claims an identity but a random assignment does not vanish"
            );
        }
    }
    identity
}

/// Searches for an assignment with a non-zero value: first pure basis
/// assignments, then (when the linearizations show f is not an identity)
/// small integer coordinate grids, which must contain a witness because
/// the per-variable degrees bound the grid needed to separate a non-zero
/// polynomial from zero.
pub fn witness_nonzero(algebra: &Algebra, f: &Polynomial) -> Option<Assignment> {
    if f.is_zero() {
        return None;
    }
    let vars = vars_of(f);
    let dim = algebra.dim();
    // pure basis assignments, in lexicographic order
    let mut tuple = vec![0usize; vars.len()];
    'outer: loop {
        let mut assignment = Assignment::new();
        for (slot, &v) in vars.iter().enumerate() {
            assignment.set(v, algebra.basis_element(tuple[slot]));
        }
        let value = evaluate(f, algebra, &assignment).expect("all variables assigned");
        if !algebra.is_zero_element(&value) {
            return Some(assignment);
        }
        let mut i = 0;
        loop {
            if i == tuple.len() {
                break 'outer;
            }
            tuple[i] += 1;
            if tuple[i] < dim {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
    if satisfies(algebra, f) {
        return None;
    }
    // grid of integer coordinates 0..=deg_v per (variable, basis) slot
    let mut max_degree: BTreeMap<Var, u32> = BTreeMap::new();
    for (w, _) in f.terms() {
        for &v in w.letters() {
            let d = w.letters().iter().filter(|&&u| u == v).count() as u32;
            let slot = max_degree.entry(v).or_insert(0);
            *slot = (*slot).max(d);
        }
    }
    let radix: Vec<u32> = vars
        .iter()
        .flat_map(|v| std::iter::repeat_n(max_degree[v] + 1, dim))
        .collect();
    let mut digits = vec![0u32; radix.len()];
    loop {
        let mut assignment = Assignment::new();
        for (slot, &v) in vars.iter().enumerate() {
            let coords: Element = (0..dim)
                .map(|i| BigRational::from_integer(BigInt::from(digits[slot * dim + i])))
                .collect();
            assignment.set(v, coords);
        }
        let value = evaluate(f, algebra, &assignment).expect("all variables assigned");
        if !algebra.is_zero_element(&value) {
            return Some(assignment);
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                unreachable!("grid search must find a witness for a non-identity");
            }
            digits[i] += 1;
            if digits[i] < radix[i] {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

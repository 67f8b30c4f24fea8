//! Quantified invariants: ring axioms on randomized polynomials, the
//! linearization/identification inverse pair, parser round trips, span
//! monotonicity and symmetry, and the Schur-expansion consistency of the
//! multiplicity recursion.

use num_bigint::BigInt;
use num_rational::BigRational;
use pivar::exprio::{parse, print};
use pivar::freealg::{monomial_basis, MultiDegree, Polynomial, Word};
use pivar::models::{self, Algebra, Assignment};
use pivar::partitions::KostkaTable;
use pivar::tideal::{
    cocharacter, consequence_basis, contains, hilbert_dims, DegreeCap, IdealPresentation,
};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn cap() -> DegreeCap {
    DegreeCap::default()
}

fn scenario_ideals() -> Vec<(&'static str, IdealPresentation)> {
    let sources: &[(&str, &[&str])] = &[
        ("case-2.1", &["[x,y]x + 2x[x,y]"]),
        ("case-2.2", &["x[x,y]"]),
        ("case-2.3", &["[x^2,y]"]),
        ("case-2.4", &["[x,y,z]"]),
        ("case-3", &["S3(x,y,z)"]),
        ("case-4", &["x^3"]),
    ];
    sources
        .iter()
        .map(|(name, gens)| {
            let polys: Vec<Polynomial> = gens.iter().map(|s| parse(s).unwrap()).collect();
            (*name, IdealPresentation::new(&polys, &cap()).unwrap())
        })
        .collect()
}

/// Small random polynomials over up to 3 generators, degree <= 4.
fn arb_poly() -> impl Strategy<Value = Polynomial> {
    let word = prop::collection::vec(1u32..=3, 1..=4);
    let term = (word, -3i64..=3).prop_map(|(letters, coefficient)| {
        (
            Word::new(letters).unwrap(),
            BigRational::from_integer(BigInt::from(coefficient)),
        )
    });
    prop::collection::vec(term, 0..=4).prop_map(Polynomial::from_terms)
}

/// Multihomogeneous polynomials: a handful of words of one shape.
fn arb_homogeneous() -> impl Strategy<Value = Polynomial> {
    (1u32..=2, 0u32..=2, 0u32..=1).prop_flat_map(|(dx, dy, dz)| {
        let degree = MultiDegree::new(vec![dx, dy, dz]);
        let words = monomial_basis(3, &degree);
        let count = words.len();
        prop::collection::vec((0..count, -3i64..=3), 1..=3).prop_map(move |choices| {
            Polynomial::from_terms(
                choices
                    .into_iter()
                    .map(|(i, c)| (words[i].clone(), BigRational::from_integer(BigInt::from(c)))),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.sub(&f), Polynomial::zero());
    }

    #[test]
    fn components_reconstitute(f in arb_poly()) {
        let mut sum = Polynomial::zero();
        for (_, component) in f.multidegree_components() {
            sum = sum.add(&component);
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn identification_inverts_linearization(f in arb_homogeneous()) {
        prop_assume!(!f.is_zero());
        let degree = f.multidegree().unwrap();
        let linearized = f.multilinearize().unwrap();
        // identify each fresh block back to one variable
        let mut grouping = BTreeMap::new();
        let mut fresh = 1u32;
        let mut factor = 1i64;
        for (i, &d) in degree.0.iter().enumerate() {
            for _ in 0..d {
                grouping.insert(fresh, i as u32 + 1);
                fresh += 1;
            }
            for j in 1..=d as i64 {
                factor *= j;
            }
        }
        let collapsed = linearized.symmetrize_identify(&grouping);
        prop_assert_eq!(collapsed, f.scale_int(factor));
    }

    #[test]
    fn substitution_is_a_homomorphism(f in arb_poly(), g in arb_poly()) {
        let mut map = BTreeMap::new();
        map.insert(1, parse("xy").unwrap());
        map.insert(2, parse("y + z").unwrap());
        map.insert(3, parse("x").unwrap());
        let fg = f.mul(&g).substitute(&map).unwrap();
        let f_img = f.substitute(&map).unwrap();
        let g_img = g.substitute(&map).unwrap();
        prop_assert_eq!(fg, f_img.mul(&g_img));
        let sum_img = f.add(&g).substitute(&map).unwrap();
        prop_assert_eq!(sum_img, f_img.add(&g_img));
    }

    #[test]
    fn print_parse_round_trip(f in arb_poly()) {
        let printed = print(&f);
        let reparsed = parse(&printed).unwrap();
        prop_assert_eq!(&reparsed, &f);
        prop_assert_eq!(print(&reparsed), printed);
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in arb_poly(), g in arb_poly()) {
        let algebra = Algebra::builtin("A1").unwrap();
        let mut assignment = Assignment::new();
        assignment.set(1, algebra.basis_element(0));
        assignment.set(2, algebra.basis_element(1));
        let sum: Vec<BigRational> = algebra
            .basis_element(0)
            .iter()
            .zip(&algebra.basis_element(1))
            .map(|(a, b)| a + b)
            .collect();
        assignment.set(3, sum);
        let left = models::evaluate(&f.mul(&g), &algebra, &assignment).unwrap();
        let right = algebra.multiply(
            &models::evaluate(&f, &algebra, &assignment).unwrap(),
            &models::evaluate(&g, &algebra, &assignment).unwrap(),
        );
        prop_assert_eq!(left, right);
    }
}

#[test]
fn monomial_basis_counts_match_multinomials() {
    fn multinomial(parts: &[u32]) -> u128 {
        let mut value: u128 = 1;
        let mut placed: u128 = 0;
        for &p in parts {
            for j in 1..=p as u128 {
                placed += 1;
                value = value * placed / j;
            }
        }
        value
    }
    for m in 1..=4usize {
        // all multidegrees over m generators with total degree <= 8
        let mut stack = vec![vec![]];
        for _ in 0..m {
            let mut next = Vec::new();
            for prefix in &stack {
                let used: u32 = prefix.iter().sum();
                for d in 0..=(8 - used) {
                    let mut extended: Vec<u32> = prefix.clone();
                    extended.push(d);
                    next.push(extended);
                }
            }
            stack = next;
        }
        for parts in stack {
            if parts.iter().sum::<u32>() == 0 {
                continue;
            }
            let k = MultiDegree::new(parts.clone());
            assert_eq!(
                monomial_basis(m, &k).len() as u128,
                multinomial(&parts),
                "count at {k}"
            );
        }
    }
}

#[test]
fn span_rank_is_monotone_in_generators() {
    let c = cap();
    let smaller = IdealPresentation::new(&[parse("[x^2,y]").unwrap()], &c).unwrap();
    let larger = IdealPresentation::new(
        &[
            parse("[x^2,y]").unwrap(),
            parse("x^3").unwrap(),
            parse("S3(x,y,z)").unwrap(),
        ],
        &c,
    )
    .unwrap();
    for k in [vec![2u32, 2], vec![3, 1], vec![2, 1, 1], vec![1, 1, 1, 1]] {
        let a = consequence_basis(&smaller, k.len(), &MultiDegree::new(k.clone()), &c)
            .unwrap()
            .rank();
        let b = consequence_basis(&larger, k.len(), &MultiDegree::new(k.clone()), &c)
            .unwrap()
            .rank();
        assert!(a <= b, "rank dropped after adding generators");
    }
}

#[test]
fn multilinear_spans_are_symmetric_group_stable() {
    let c = cap();
    for (name, presentation) in scenario_ideals() {
        let n = 4usize;
        let k = MultiDegree::new(vec![1; n]);
        let span = consequence_basis(&presentation, n, &k, &c).unwrap();
        // apply every transposition of adjacent variables to every basis
        // row; the result must stay inside the span
        for swap in 1..n as u32 {
            let mut renaming = BTreeMap::new();
            renaming.insert(swap, swap + 1);
            renaming.insert(swap + 1, swap);
            for row in span.row_polynomials() {
                let permuted = row.rename(&renaming);
                assert!(
                    span.contains_poly(&permuted),
                    "{name}: span not stable under swapping x{swap}, x{}",
                    swap + 1
                );
            }
        }
    }
}

#[test]
fn multiplicity_recursion_matches_hilbert_dimensions() {
    // dim F^{(k)} computed from spans equals the Schur expansion
    // sum over shapes of multiplicity * kostka(shape, k), for every
    // partition content of weight <= 6 (both sides are symmetric in the
    // content, so partition contents cover all multidegrees)
    let c = cap();
    let mut kostka_table = KostkaTable::new();
    for (name, presentation) in scenario_ideals() {
        for n in 1..=6u32 {
            let table = cocharacter(&presentation, n, n as usize, &c).unwrap();
            for content in pivar::partitions::partitions_of(n, n as usize) {
                let degree = content.as_multidegree();
                let span = consequence_basis(&presentation, degree.len(), &degree, &c).unwrap();
                let hilbert = span.ambient_dim() as u64 - span.rank() as u64;
                let schur: u64 = table
                    .entries()
                    .iter()
                    .map(|(shape, multiplicity)| {
                        multiplicity * kostka_table.get(shape, &degree).unwrap()
                    })
                    .sum();
                assert_eq!(
                    hilbert, schur,
                    "{name}: Hilbert/Schur mismatch at content {degree} (n={n})"
                );
            }
        }
    }
}

#[test]
fn hilbert_dims_agree_with_schur_expansion_componentwise() {
    // the same consistency through the hilbert_dims entry point, on a
    // full (non-partition) multidegree sweep for one ideal
    let c = cap();
    let presentation = IdealPresentation::new(&[parse("[x^2,y]").unwrap()], &c).unwrap();
    let dims = hilbert_dims(&presentation, 2, 5, &c).unwrap();
    let mut kostka_table = KostkaTable::new();
    for (k, dim) in &dims {
        let n = k.total();
        let table = cocharacter(&presentation, n, n as usize, &c).unwrap();
        let schur: u64 = table
            .entries()
            .iter()
            .map(|(shape, multiplicity)| multiplicity * kostka_table.get(shape, k).unwrap())
            .sum();
        assert_eq!(*dim, schur, "mismatch at {k}");
    }
}

#[test]
fn membership_is_reflexive_and_substitution_closed() {
    let c = cap();
    let substitutions: Vec<BTreeMap<u32, Polynomial>> = vec![
        BTreeMap::from([
            (1, parse("xy").unwrap()),
            (2, parse("z").unwrap()),
            (3, parse("x").unwrap()),
        ]),
        BTreeMap::from([
            (1, parse("y").unwrap()),
            (2, parse("zx").unwrap()),
            (3, parse("t").unwrap()),
        ]),
        BTreeMap::from([
            (1, parse("x").unwrap()),
            (2, parse("yz").unwrap()),
            (3, parse("ty").unwrap()),
        ]),
    ];
    for (name, presentation) in scenario_ideals() {
        for generator in presentation.generators() {
            assert!(
                contains(&presentation, generator, &c).unwrap(),
                "{name}: generator not contained in its own ideal"
            );
            for map in &substitutions {
                let image = generator.substitute(map).unwrap();
                if image
                    .multidegree_components()
                    .keys()
                    .any(|k| k.total() > c.total_degree)
                {
                    continue;
                }
                assert!(
                    contains(&presentation, &image, &c).unwrap(),
                    "{name}: substitution instance escaped the ideal"
                );
            }
        }
    }
}

#[test]
fn satisfies_iff_no_witness() {
    let algebras = [
        Algebra::builtin("A1").unwrap(),
        Algebra::builtin("B2").unwrap(),
        Algebra::builtin("kx:4").unwrap(),
    ];
    let candidates = [
        "x[x,y]",
        "[x,y]x^2",
        "x^3",
        "x^2",
        "[x,y]^2",
        "S3(x,y,z)",
        "xy - yx",
        "x^2y^2x",
    ];
    for algebra in &algebras {
        for source in candidates {
            let f = parse(source).unwrap();
            let vanishes = models::satisfies(algebra, &f);
            let witness = models::witness_nonzero(algebra, &f);
            assert_eq!(
                vanishes,
                witness.is_none(),
                "{}: satisfies/witness disagree on {source}",
                algebra.name()
            );
            if let Some(assignment) = witness {
                let value = models::evaluate(&f, algebra, &assignment).unwrap();
                assert!(!algebra.is_zero_element(&value));
            }
        }
    }
}

#[test]
fn alternating_and_symmetric_expansions() {
    // swapping two arguments negates a standard polynomial and fixes a
    // full symmetrization
    let s = parse("S4(x,y,z,t)").unwrap();
    let s_swapped = parse("S4(x,z,y,t)").unwrap();
    assert_eq!(s, s_swapped.neg());
    let h = parse("h3(x,y,z)").unwrap();
    let h_swapped = parse("h3(z,y,x)").unwrap();
    assert_eq!(h, h_swapped);
}

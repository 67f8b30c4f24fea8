//! Acceptance suite: one test per criterion, each with its stated
//! tolerance (all values are exact integers, so tolerances are zero) and
//! runtime bound.

use pivar::exprio::parse;
use pivar::freealg::{MultiDegree, Polynomial};
use pivar::models::{self, Algebra, Assignment};
use pivar::partitions::{factorial, hook_dim, kostka, partitions_of, Partition};
use pivar::scenarios::{self, CaseId, ClaimStatus};
use pivar::tideal::{
    cocharacter, consequence_basis, contains, highest_weight_check, pn_dim, rank_with_extra,
    DegreeCap, IdealPresentation,
};
use std::str::FromStr;
use std::time::{Duration, Instant};

fn cap() -> DegreeCap {
    DegreeCap::default()
}

fn ideal(sources: &[&str]) -> IdealPresentation {
    let polys: Vec<Polynomial> = sources.iter().map(|s| parse(s).unwrap()).collect();
    IdealPresentation::new(&polys, &cap()).unwrap()
}

fn p(source: &str) -> Polynomial {
    parse(source).unwrap()
}

fn shape(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn md(parts: &[u32]) -> MultiDegree {
    MultiDegree::new(parts.to_vec())
}

fn rank_at(ideal: &IdealPresentation, k: &[u32]) -> usize {
    consequence_basis(ideal, k.len(), &md(k), &cap())
        .unwrap()
        .rank()
}

fn assert_cochar(ideal: &IdealPresentation, n: u32, expected: &[(&[u32], u64)]) {
    let table = cocharacter(ideal, n, n as usize, &cap()).unwrap();
    for partition in partitions_of(n, n as usize) {
        let want = expected
            .iter()
            .find(|(parts, _)| shape(parts) == partition)
            .map(|(_, k)| *k)
            .unwrap_or(0);
        assert_eq!(
            table.multiplicity(&partition),
            want,
            "multiplicity at {partition} for n={n}"
        );
    }
}

#[test]
fn criterion_01_kostka_golden_table() {
    let started = Instant::now();
    let table: &[(&[u32], &[u32], u64)] = &[
        (&[4], &[3, 1], 1),
        (&[3, 1], &[2, 2], 1),
        (&[4], &[2, 1, 1], 1),
        (&[2, 2], &[2, 1, 1], 1),
        (&[3, 1], &[2, 1, 1], 2),
        (&[3, 2], &[3, 1, 1], 1),
        (&[2, 2, 1], &[2, 1, 1, 1], 2),
        (&[3, 2], &[2, 1, 1, 1], 3),
        (&[3, 1, 1], &[2, 1, 1, 1], 3),
        // the crossed pair, at its tableau-count values
        (&[3, 2], &[2, 2, 1], 2),
        (&[3, 1, 1], &[2, 2, 1], 1),
    ];
    for (s, c, expected) in table {
        assert_eq!(kostka(&shape(s), &md(c)).unwrap(), *expected);
    }
    assert!(started.elapsed() < Duration::from_secs(1), "runtime bound");
    println!(
        "criterion 1: pass (Kostka golden table, {:?})",
        started.elapsed()
    );
}

#[test]
fn criterion_02_free_algebra_oracle() {
    let started = Instant::now();
    let free = IdealPresentation::empty();
    for n in 1..=6u32 {
        let table = cocharacter(&free, n, n as usize, &cap()).unwrap();
        for (partition, multiplicity) in table.entries() {
            assert_eq!(*multiplicity, hook_dim(partition), "at {partition}, n={n}");
        }
        assert_eq!(table.total_dimension(), factorial(n), "n={n}");
    }
    assert!(started.elapsed() < Duration::from_secs(5), "runtime bound");
    println!(
        "criterion 2: pass (free-algebra oracle, {:?})",
        started.elapsed()
    );
}

#[test]
fn criterion_03_rank_ladder() {
    let started = Instant::now();
    let cube = ideal(&["x^3"]);
    assert_eq!(rank_at(&cube, &[3, 1]), 3);
    assert_eq!(rank_at(&cube, &[2, 2]), 4);
    assert_eq!(rank_at(&cube, &[2, 1, 1]), 7);
    assert_eq!(rank_at(&cube, &[3, 1, 1]), 18);
    assert_eq!(rank_at(&cube, &[2, 2, 1]), 27);
    assert_eq!(rank_at(&cube, &[2, 1, 1, 1]), 53);
    assert!(started.elapsed() < Duration::from_secs(60), "runtime bound");
    println!("criterion 3: pass (rank ladder, {:?})", started.elapsed());
}

#[test]
fn criterion_04_cube_cocharacters() {
    let cube = ideal(&["x^3"]);
    assert_cochar(
        &cube,
        4,
        &[
            (&[3, 1], 1),
            (&[2, 2], 1),
            (&[2, 1, 1], 2),
            (&[1, 1, 1, 1], 1),
        ],
    );
    assert_cochar(
        &cube,
        5,
        &[(&[3, 2], 1), (&[3, 1, 1], 1), (&[2, 1, 1, 1], 1)],
    );
    assert_eq!(pn_dim(&cube, 4, &cap()).unwrap(), 12);
    assert_eq!(pn_dim(&cube, 5, &cap()).unwrap(), 15);
    println!("criterion 4: pass (degree 4 and 5 module structure)");
}

#[test]
fn criterion_05_nilpotency_at_degree_6() {
    let started = Instant::now();
    let cube = ideal(&["x^3"]);
    let span = consequence_basis(&cube, 6, &md(&[1, 1, 1, 1, 1, 1]), &cap()).unwrap();
    assert_eq!(span.ambient_dim(), 720);
    assert_eq!(span.rank(), 720);
    assert_eq!(pn_dim(&cube, 6, &cap()).unwrap(), 0);
    assert!(
        started.elapsed() < Duration::from_secs(300),
        "runtime bound"
    );
    println!(
        "criterion 5: pass (multilinear span full at n=6, {:?})",
        started.elapsed()
    );
}

#[test]
fn criterion_06_square_commutator_case() {
    let alg = ideal(&["[x^2,y]"]);
    assert_cochar(&alg, 4, &[(&[4], 1), (&[2, 2], 1)]);
    assert_eq!(rank_at(&alg, &[2, 2]), 4);
    assert_cochar(&alg, 5, &[(&[5], 1)]);
    assert_cochar(&alg, 6, &[(&[6], 1)]);
    println!("criterion 6: pass (square-commutator case)");
}

#[test]
fn criterion_07_metabelian_hooks() {
    let alg = ideal(&["[x,y,z]"]);
    for n in 4..=6u32 {
        let hooks: Vec<(Vec<u32>, u64)> = (0..n)
            .map(|k| {
                let mut parts = vec![n - k];
                parts.extend(std::iter::repeat_n(1, k as usize));
                (parts, 1)
            })
            .collect();
        let hooks_ref: Vec<(&[u32], u64)> = hooks
            .iter()
            .map(|(parts, k)| (parts.as_slice(), *k))
            .collect();
        assert_cochar(&alg, n, &hooks_ref);
    }
    println!("criterion 7: pass (hook decomposition for the triple commutator)");
}

#[test]
fn criterion_08_standard_identity_case() {
    let alg = ideal(&["S3(x,y,z)"]);
    assert_cochar(&alg, 4, &[(&[4], 1), (&[3, 1], 2), (&[2, 2], 1)]);
    assert_cochar(&alg, 5, &[(&[5], 1), (&[4, 1], 2)]);
    println!("criterion 8: pass (standard-identity case)");
}

#[test]
fn criterion_09_membership_verdicts() {
    let c = cap();
    assert!(contains(&ideal(&["S3(x,y,z)", "x^3"]), &p("[x,y]^2"), &c).unwrap());
    assert!(contains(&ideal(&["x^3"]), &p("yx^2zt + tyx^2z"), &c).unwrap());
    assert!(!contains(&ideal(&["S4(x,y,z,t)"]), &p("x^2y^2x"), &c).unwrap());
    assert!(contains(&ideal(&["[x,y,z]"]), &p("[x,y]z - z[x,y]"), &c).unwrap());
    println!("criterion 9: pass (membership verdicts)");
}

#[test]
fn criterion_10_witness_algebra_suite() {
    let a1 = Algebra::builtin("A1").unwrap();
    let b1 = Algebra::builtin("B1").unwrap();
    let b2 = Algebra::builtin("B2").unwrap();

    assert!(models::satisfies(&a1, &p("x[x,y]")));
    let assignment = Assignment::parse(&a1, "x=a,y=b").unwrap();
    let value = models::evaluate(&p("[x,y]x^2"), &a1, &assignment).unwrap();
    assert_eq!(a1.format_element(&value), "-b");

    assert!(models::satisfies(&b2, &p("[x,y]x^2")));
    assert!(models::witness_nonzero(&b2, &p("x^3[x,y]")).is_some());
    assert!(models::satisfies(&b1, &p("[x,y]^2")));
    assert!(models::satisfies(&b2, &p("[x,y]^2")));

    // soundness bridge on every (algebra, ideal, target) triple the
    // suites rely on
    let bridges: &[(&Algebra, &[&str], &str)] = &[
        (&a1, &["x[x,y]"], "[x,y]x^2"),
        (&a1, &["x[x,y]", "S3(x,y,z)"], "x^4"),
        (&a1, &["x[x,y]", "S3(x,y,z)"], "[x,y]x^2"),
        (&b2, &["S3(x,y,z)", "[x,y]x^2"], "x^3[x,y]"),
        (&b1, &["S3(x,y,z)", "x^2[x,y]"], "[x,y]x^3"),
        (&b1, &["S3(x,y,z)", "[x,y]^2"], "x^5"),
        (&b2, &["S3(x,y,z)", "[x,y]^2"], "x^3[x,y]"),
    ];
    for (algebra, generators, target) in bridges {
        let presentation = ideal(generators);
        for g in presentation.generators() {
            assert!(models::satisfies(algebra, g), "{} |= {g:?}", algebra.name());
        }
        let target = p(target);
        assert!(
            models::witness_nonzero(algebra, &target).is_some(),
            "witness for {target:?} on {}",
            algebra.name()
        );
        assert!(
            !contains(&presentation, &target, &cap()).unwrap(),
            "bridge violated for {target:?}"
        );
    }
    let kx_bridges: &[(&str, &[&str], &str)] = &[
        ("kx:7", &["[x,y]x + 2x[x,y]"], "x^6"),
        ("kx:6", &["[x^2,y]"], "x^5"),
        ("kx:6", &["[x,y,z]", "[x,y]x^2"], "x^5"),
    ];
    for (name, generators, target) in kx_bridges {
        let algebra = Algebra::builtin(name).unwrap();
        let presentation = ideal(generators);
        for g in presentation.generators() {
            assert!(models::satisfies(&algebra, g));
        }
        let target = p(target);
        assert!(models::witness_nonzero(&algebra, &target).is_some());
        assert!(!contains(&presentation, &target, &cap()).unwrap());
    }

    // fault injection: zeroing one structure constant (the associative
    // corruption b*a = 0) breaks the witness value
    let corrupted = Algebra::new(
        "A1-corrupted",
        vec!["a".into(), "b".into()],
        vec![
            vec![a1.basis_element(0), a1.zero()],
            vec![a1.zero(), a1.zero()],
        ],
    )
    .unwrap();
    let value = models::evaluate(&p("[x,y]x^2"), &corrupted, &assignment).unwrap();
    assert_ne!(corrupted.format_element(&value), "-b");
    println!("criterion 10: pass (witness algebras and soundness bridges)");
}

#[test]
fn criterion_11_highest_weight_suite() {
    let cube = ideal(&["x^3"]);
    let c = cap();
    let e = scenarios::catalog("e").unwrap();
    let f1 = scenarios::catalog("f1").unwrap();
    let f2 = scenarios::catalog("f2").unwrap();
    for generator in [
        p("xy^2x"),
        p("x^2yx"),
        p("x[y,z]x^2"),
        p("x^2y^2x"),
        e,
        f1.clone(),
        f2.clone(),
    ] {
        assert!(
            highest_weight_check(&cube, &generator, &c).unwrap(),
            "highest-weight check failed for {generator:?}"
        );
    }
    // f1, f2 span a 2-dimensional space modulo the ideal
    let span = consequence_basis(&cube, 3, &md(&[2, 1, 1]), &c).unwrap();
    assert_eq!(rank_with_extra(&span, &[f1, f2]), span.rank() + 2);
    println!("criterion 11: pass (highest-weight generators)");
}

#[test]
fn criterion_12_implication_graphs() {
    let c = cap();
    for case in CaseId::ALL {
        let n_max = 5;
        let (graph, claims) = scenarios::implication_graph(case, n_max, &c).unwrap();
        // byte stability: a fresh computation renders identically
        let (again, _) = scenarios::implication_graph(case, n_max, &c).unwrap();
        assert_eq!(graph.to_dot(), again.to_dot(), "case {case} DOT not stable");
        // every certification claim holds
        for claim in &claims {
            assert_ne!(
                claim.status,
                ClaimStatus::Fail,
                "case {case}: {} failed ({} vs {})",
                claim.id,
                claim.expected,
                claim.computed
            );
        }
        // every edge is re-checkable by an independent membership call
        let spec = scenarios::variety(case, None).unwrap();
        let base = IdealPresentation::new(&spec.generators, &c).unwrap();
        for &(src, dst) in &graph.edges {
            let with_source = base
                .extended(std::slice::from_ref(&graph.nodes[src].poly), &c)
                .unwrap();
            assert!(
                contains(&with_source, &graph.nodes[dst].poly, &c).unwrap(),
                "case {case}: edge {} -> {} does not re-verify",
                graph.nodes[src].display(),
                graph.nodes[dst].display()
            );
            assert!(
                !contains(&base, &graph.nodes[dst].poly, &c).unwrap(),
                "case {case}: edge target already in the base ideal"
            );
        }
        assert!(!graph.nodes.is_empty());

        // spot-check the named arrows and non-arrows of each figure
        let node_index = |expr: &str| {
            let poly = p(expr);
            graph
                .nodes
                .iter()
                .position(|n| n.poly == poly)
                .unwrap_or_else(|| panic!("case {case}: node {expr} missing"))
        };
        let has_edge =
            |src: &str, dst: &str| graph.edges.contains(&(node_index(src), node_index(dst)));
        let no_outgoing = |src: &str| {
            let i = node_index(src);
            graph.edges.iter().all(|&(s, _)| s != i)
        };
        match case {
            CaseId::C21 => {
                assert!(has_edge("x^3", "x^4"));
                assert!(no_outgoing("[x,y]x"));
                assert!(no_outgoing("S3(x,y,z)"));
            }
            CaseId::C22 => {
                assert!(has_edge("x^3", "x^4"));
                assert!(has_edge("x^4", "x^5"));
                assert!(has_edge("[x,y]x^2", "[x,y]x^3"));
                assert!(no_outgoing("S3(x,y,z)"));
            }
            CaseId::C23 => {
                assert!(has_edge("S3(x,y,z)", "x[x,y]y"));
                assert!(has_edge("[x,y]x", "x[x,y]y"));
                assert!(no_outgoing("x[x,y]y"));
            }
            CaseId::C24 => {
                assert!(has_edge("[x,y]x", "S3(x,y,z)x"));
                assert!(has_edge("[x,y]x", "[x,y]x^2"));
            }
            CaseId::C3 => {
                assert!(no_outgoing("[x,y]^2"));
                assert!(has_edge("[x,y]x^2", "[x,y]x^3"));
            }
            CaseId::C4 => {
                let e = scenarios::catalog("e").unwrap();
                let e_index = graph
                    .nodes
                    .iter()
                    .position(|n| n.poly == e)
                    .expect("e node");
                let g_index = node_index("x^2[y,z] - [y,z]x^2");
                let m22_index = node_index("xy^2x");
                assert!(graph.edges.contains(&(g_index, e_index)));
                assert!(has_edge("xy^2x", "x^2y^2x"));
                // the two non-arrows: one asserted by the source text,
                // one contradicting it (the flagged step-3 claim)
                assert!(!has_edge("S4(x,y,z,t)", "x^2y^2x"));
                assert!(!graph.edges.contains(&(m22_index, e_index)));
            }
        }
        println!(
            "criterion 12: case {case}: {} nodes, {} edges verified",
            graph.nodes.len(),
            graph.edges.len()
        );
    }
    println!("criterion 12: pass (implication graphs emitted and certified)");
}

#[test]
fn criterion_13_flagged_discrepancy() {
    let cube = ideal(&["x^3"]);
    // the computed rank is 9, consistent with multiplicity 1 = 10 - 9
    assert_eq!(rank_at(&cube, &[3, 2]), 9);
    let table = cocharacter(&cube, 5, 5, &cap()).unwrap();
    assert_eq!(table.multiplicity(&shape(&[3, 2])), 1);
    // and the report marks the printed value as a discrepancy instead of
    // silently passing
    let report =
        scenarios::verify_paper(Some(CaseId::from_str("4").unwrap()), Some(5), &cap(), false)
            .unwrap();
    let flagged = report
        .claims
        .iter()
        .find(|claim| claim.id == "case-4/rank-32-printed")
        .expect("discrepancy claim present");
    assert_eq!(flagged.status, ClaimStatus::Flagged);
    assert_eq!(flagged.computed, "9");
    assert!(report.passed());
    println!("criterion 13: pass (printed dimension flagged, computed rank 9)");
}

#[test]
fn criterion_14_full_verification_run() {
    let started = Instant::now();
    let report = scenarios::verify_paper(None, None, &cap(), false).unwrap();
    let elapsed = started.elapsed();
    let (pass, fail, flagged) = report.counts();
    assert!(
        report.passed(),
        "verification failed: {fail} failing claims"
    );
    assert_eq!(fail, 0);
    // exactly the documented discrepancies are flagged: the crossed
    // Kostka pair, one basis sign, one printed dimension, and one
    // printed consequence claim
    assert_eq!(flagged, 5, "unexpected flag count");
    assert!(pass > 250, "suite unexpectedly small: {pass}");
    assert!(
        elapsed < Duration::from_secs(600),
        "runtime bound exceeded: {elapsed:?}"
    );
    println!(
        "criterion 14: pass ({pass} claims, {flagged} flagged, {:.1}s)",
        elapsed.as_secs_f64()
    );
}

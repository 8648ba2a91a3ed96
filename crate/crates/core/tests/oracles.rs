//! The library against independent brute-force computations.

mod common;

use lipman::classify::{arithmetic_genus, is_rational_artin, structural_rationality};
use lipman::conditions::{all_pairs, check_star, star_witness};
use lipman::cone::{fundamental_cycle, neg_inverse, strict_interior_divisor, Divisor};
use lipman::enumerate::{enumerate_graphs, EnumerationBounds};
use lipman::graph::is_negative_definite;
use lipman::vanishing::{adjoint_criterion_satisfied, laufer_criterion_satisfied, min_adjoint_multiplier};
use lipman::ResolutionGraph;
use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_corpus() -> Vec<ResolutionGraph> {
    enumerate_graphs(EnumerationBounds {
        max_vertices: 4,
        min_weight: -3,
        max_genus: 1,
        max_mult: 2,
    })
    .unwrap()
    .collect()
}

fn ints(d: &Divisor) -> Vec<i64> {
    d.to_i64s().expect("coefficients fit in i64")
}

#[test]
fn negative_definiteness_matches_quadratic_form_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..600 {
        let n = rng.gen_range(1..=3);
        let weights: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=-1)).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = rng.gen_range(0..=3);
                if m > 0 {
                    edges.push((i, j, m));
                }
            }
        }
        let g = ResolutionGraph::new(weights, vec![0; n], &edges).unwrap();
        let nd = is_negative_definite(&g.intersection_matrix());
        // Entries are small, so a failing vector shows up inside the box.
        let brute = common::brute_force_negative_definite(&common::matrix(&g), 6);
        assert_eq!(nd, brute, "{}", g.to_graph_text());
        if nd {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 50 && no > 50, "{yes} definite, {no} not");
}

#[test]
fn fundamental_cycle_is_the_minimal_anti_nef_cycle() {
    for g in small_corpus() {
        let z = ints(&fundamental_cycle(&g).unwrap());
        assert!(common::is_minimal_anti_nef(&common::matrix(&g), &z), "Z = {z:?} for\n{}", g.to_graph_text());
    }
}

#[test]
fn neg_inverse_is_entrywise_positive_on_connected_graphs() {
    for g in small_corpus() {
        let c = neg_inverse(&g.intersection_matrix()).unwrap();
        for row in c.rows() {
            assert!(row.iter().all(Signed::is_positive), "{}", g.to_graph_text());
        }
    }
}

#[test]
fn arithmetic_genus_of_a_single_component_is_its_genus() {
    for g in small_corpus() {
        for i in 0..g.n() {
            let mut e = vec![0; g.n()];
            e[i] = 1;
            let pa = arithmetic_genus(&g, &Divisor::from_ints(&e)).unwrap();
            assert_eq!(pa, BigInt::from(g.genera()[i]));
        }
    }
}

#[test]
fn artin_rational_graphs_are_rational_trees() {
    let mut rational = 0;
    for g in small_corpus() {
        if is_rational_artin(&g).unwrap() {
            rational += 1;
            let s = structural_rationality(&g);
            assert!(s.tree && s.all_genus_zero, "{}", g.to_graph_text());
        }
    }
    assert!(rational > 0);
}

#[test]
fn criteria_match_direct_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for g in common::random_graphs(13, 80, 4) {
        let m = common::matrix(&g);
        let k: Vec<i64> = (0..g.n())
            .map(|l| 2 * i64::from(g.genera()[l]) - 2 - g.weights()[l])
            .collect();
        for _ in 0..5 {
            let d: Vec<i64> = (0..g.n()).map(|_| rng.gen_range(0..=12)).collect();
            if d.iter().all(|&a| a == 0) {
                continue;
            }
            let div = Divisor::from_ints(&d);
            let adj = adjoint_criterion_satisfied(&g, &div).unwrap();
            assert_eq!(adj.satisfied, common::adjoint_holds(&g, &d), "D = {d:?} on\n{}", g.to_graph_text());
            let md = common::mat_vec(&m, &d);
            let laufer = (0..g.n()).all(|i| md[i] + 2 * k[i] <= 0);
            assert_eq!(laufer_criterion_satisfied(&g, &div).unwrap().satisfied, laufer);
        }
    }
}

#[test]
fn minimal_multiplier_matches_iteration() {
    let mut checked = 0;
    for g in common::random_graphs(14, 40, 4) {
        let m = common::matrix(&g);
        let mut points = Vec::new();
        common::for_each_strict_point(&m, 6, |d| {
            points.push(d.to_vec());
            points.len() < 3
        });
        points.push(ints(&strict_interior_divisor(&g).unwrap()));
        for d in points {
            let closed = min_adjoint_multiplier(&g, &Divisor::from_ints(&d)).unwrap();
            let naive = common::naive_multiplier(&g, &d, 100_000).expect("some multiple works");
            assert_eq!(closed, BigInt::from(naive), "D = {d:?} on\n{}", g.to_graph_text());
            checked += 1;
        }
    }
    assert!(checked >= 100, "{checked}");
}

#[test]
fn failing_pairs_have_no_bounded_witness() {
    for g in common::random_graphs(15, 120, 5) {
        let cert = check_star(&g).unwrap();
        let found = common::brute_force_coverage(&common::matrix(&g), 20);
        for pair in &cert.failing_pairs {
            assert!(!found.contains(pair), "{pair:?} has a witness on\n{}", g.to_graph_text());
        }
    }
}

#[test]
fn reported_witnesses_hold_under_plain_integer_arithmetic() {
    for g in common::random_graphs(16, 120, 5) {
        let m = common::matrix(&g);
        for (i, j) in all_pairs(g.n()) {
            if let Some(w) = star_witness(&g, i, j).unwrap() {
                let w = ints(&w);
                assert!(common::mat_vec(&m, &w).iter().all(|&v| v < 0));
                assert!(w[i] < w[j]);
            }
        }
    }
}

#[test]
fn bounded_witnesses_imply_positive_decisions() {
    for g in small_corpus().into_iter().filter(|g| g.n() <= 3) {
        let found = common::brute_force_coverage(&common::matrix(&g), 20);
        let cert = check_star(&g).unwrap();
        for pair in found {
            assert!(cert.witnesses.contains_key(&pair), "{pair:?} on\n{}", g.to_graph_text());
        }
    }
}

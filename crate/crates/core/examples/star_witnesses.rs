//! Witness divisors for condition (*) on A_n and D_n, and the pairs that
//! fail on D_n.

use lipman::conditions::{check_star, verify_witness};
use lipman::family::{make_family, Family};

fn main() {
    for family in [Family::An(4), Family::Dn(5)] {
        let g = make_family(&family).unwrap();
        let m = g.intersection_matrix();
        let cert = check_star(&g).unwrap();
        println!("{family}: (*) {}", if cert.holds { "holds" } else { "fails" });
        for (&(i, j), w) in &cert.witnesses {
            assert!(verify_witness(&m, &w.divisor, i, j));
            println!(
                "  {} < {}  D = {}  n = {}",
                g.vertex_name(i),
                g.vertex_name(j),
                w.divisor,
                w.multiplier
            );
        }
        for &(i, j) in &cert.failing_pairs {
            println!("  {} < {}  no divisor in the cone", g.vertex_name(i), g.vertex_name(j));
        }
    }

    // Two divisors cover every half-space on a chain.
    let (d1, d2) = lipman::classify::an_witness_divisors(6).unwrap();
    println!("A_6 covering pair: {d1} and {d2}");
}

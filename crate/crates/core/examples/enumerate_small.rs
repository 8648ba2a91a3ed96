//! Enumerates small graphs up to isomorphism and tallies the verdicts.
//!
//! cargo run --release --example enumerate_small -- [max_vertices] [min_weight]

use std::collections::BTreeMap;
use std::env;

use lipman::enumerate::{enumerate_graphs, EnumerationBounds};
use lipman::nash_verdict;

fn main() {
    let mut args = env::args().skip(1);
    let max_vertices = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let min_weight = args.next().and_then(|a| a.parse().ok()).unwrap_or(-4);
    let bounds = EnumerationBounds {
        max_vertices,
        min_weight,
        max_genus: 1,
        max_mult: 2,
    };

    let mut tally: BTreeMap<(&str, bool), usize> = BTreeMap::new();
    let mut total = 0;
    for g in enumerate_graphs(bounds).unwrap() {
        let r = nash_verdict(&g).unwrap();
        *tally.entry((r.nash_verdict.as_str(), r.artin_rational)).or_default() += 1;
        total += 1;
    }
    println!("{total} graphs with at most {max_vertices} vertices, weights ≥ {min_weight}");
    for ((verdict, rational), count) in tally {
        println!("  {verdict:<20} rational={rational:<5} {count}");
    }
}

//! Builds family members and prints them in both file formats.

use lipman::family::{make_family, Family};
use lipman::parse_graph;

fn main() {
    for family in [Family::Dn(4), Family::Claw(5), Family::Cycle { length: 3, weight: -4 }] {
        let g = make_family(&family).unwrap();
        let text = g.to_graph_text();
        assert_eq!(parse_graph(&text).unwrap(), g);
        println!("# {family}\n{text}{}\n", g.to_json());
    }

    match make_family(&Family::Claw(4)) {
        Ok(_) => unreachable!(),
        Err(e) => println!("claw(4) rejected: {e}"),
    }
}

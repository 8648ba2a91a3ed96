//! Fundamental cycle, arithmetic genus and the structural test for
//! rationality on a few families.

use lipman::classify::{arithmetic_genus, structural_rationality};
use lipman::cone::fundamental_cycle;
use lipman::family::{make_family, Family};

fn main() {
    let families = [
        Family::An(4),
        Family::Dn(6),
        Family::Claw(6),
        Family::Vertex { genus: 1, weight: -2 },
        Family::Cycle { length: 5, weight: -3 },
    ];
    println!("{:<14} {:<20} {:>4}  tree  genus0  iii", "graph", "Z", "p_a");
    for family in families {
        let g = make_family(&family).unwrap();
        let z = fundamental_cycle(&g).unwrap();
        let pa = arithmetic_genus(&g, &z).unwrap();
        let s = structural_rationality(&g);
        println!(
            "{:<14} {:<20} {:>4}  {:<5} {:<7} {}",
            family.to_string(),
            z.to_string(),
            pa,
            s.tree,
            s.all_genus_zero,
            s.iii_holds
        );
    }
}

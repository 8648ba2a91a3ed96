//! The adjoint and Laufer vanishing criteria, and the smallest multiple of
//! a cone divisor that passes the adjoint one.

use lipman::cone::{strict_interior_divisor, Divisor};
use lipman::family::{make_family, Family};
use lipman::vanishing::{adjoint_criterion_satisfied, laufer_criterion_satisfied, min_adjoint_multiplier};

fn main() {
    let g = make_family(&Family::Vertex { genus: 2, weight: -1 }).unwrap();
    let d = Divisor::from_ints(&[4]);
    let adjoint = adjoint_criterion_satisfied(&g, &d).unwrap();
    let laufer = laufer_criterion_satisfied(&g, &d).unwrap();
    println!("genus 2, E² = −1, D = 4E");
    println!("  adjoint: {} {:?}", adjoint.satisfied, adjoint.values);
    println!("  laufer:  {} {:?}", laufer.satisfied, laufer.values);

    for family in [Family::Cycle { length: 4, weight: -3 }, Family::Claw(5), Family::An(5)] {
        let g = make_family(&family).unwrap();
        let d = strict_interior_divisor(&g).unwrap();
        let n = min_adjoint_multiplier(&g, &d).unwrap();
        let nd = d.scaled(&n);
        assert!(adjoint_criterion_satisfied(&g, &nd).unwrap().satisfied);
        println!("{family}: D = {d}, smallest n = {n}, nD = {nd}");
    }
}

//! Rationality, the Nash verdict, and the closed-form A_n witnesses.
//!
//! Rationality is decided by Artin's criterion `p_a(Z) = 0` on the
//! fundamental cycle. Under (**) it must agree with the structural test
//! "tree, all genera zero, `|E_i²| > γ(E_i)`", which is recomputed
//! independently from the graph.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cone::{fundamental_cycle, lipman_status, pair, ConeStatus, Divisor};
use crate::conditions::{check_star, check_star_star, StarCertificate, StarStarReport};
use crate::error::{Error, Result};
use crate::family::{make_family, Family};
use crate::graph::{canonical_intersections, require_analyzable, validate, ResolutionGraph, ValidationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NashVerdict {
    BijectiveByStarStar,
    BijectiveByStar,
    /// Condition (*) fails. The criterion is only sufficient, so nothing is
    /// claimed.
    Inconclusive,
}

impl NashVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            NashVerdict::BijectiveByStarStar => "BijectiveByStarStar",
            NashVerdict::BijectiveByStar => "BijectiveByStar",
            NashVerdict::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralRationality {
    pub tree: bool,
    pub all_genus_zero: bool,
    /// `|E_i²| > γ(E_i)` at every vertex.
    pub iii_holds: bool,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub graph: ResolutionGraph,
    pub validation: ValidationReport,
    pub star_star: StarStarReport,
    pub star: StarCertificate,
    pub fundamental_cycle: Divisor,
    pub pa_fundamental: BigInt,
    pub artin_rational: bool,
    pub structural: StructuralRationality,
    pub nash_verdict: NashVerdict,
    pub notes: Vec<String>,
}

/// `p_a(D) = 1 + (D·D + K·D) / 2`.
pub fn arithmetic_genus(g: &ResolutionGraph, d: &Divisor) -> Result<BigInt> {
    if d.len() != g.n() {
        return Err(Error::DimensionMismatch {
            what: "divisor",
            expected: g.n(),
            found: d.len(),
        });
    }
    if d.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if !d.is_effective() {
        return Err(Error::NotEffective);
    }
    let dd = pair(d, d, &g.intersection_matrix())?;
    let kd: BigInt = canonical_intersections(g)
        .into_iter()
        .zip(d.coeffs())
        .map(|(k, a)| a * k)
        .sum();
    let (half, rem) = (dd + kd).div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Internal(format!("D^2 + K.D is odd for D = {d}")));
    }
    Ok(BigInt::one() + half)
}

pub fn is_rational_artin(g: &ResolutionGraph) -> Result<bool> {
    let z = fundamental_cycle(g)?;
    Ok(arithmetic_genus(g, &z)?.is_zero())
}

/// `γ(E_i)`: edge-ends at `E_i`, from off-diagonal multiplicities only.
pub fn gamma(g: &ResolutionGraph, i: usize) -> u64 {
    g.degree(i)
}

pub fn structural_rationality(g: &ResolutionGraph) -> StructuralRationality {
    let n = g.n();
    let edges = g.edges();
    let simple = edges.iter().all(|&(_, _, m)| m == 1);
    let tree = simple && edges.len() + 1 == n && g.is_connected();
    let all_genus_zero = g.genera().iter().all(|&p| p == 0);
    let iii_holds = (0..n).all(|i| g.weights()[i].unsigned_abs() > gamma(g, i));
    StructuralRationality {
        tree,
        all_genus_zero,
        iii_holds,
        verdict: tree && all_genus_zero && iii_holds,
    }
}

/// Runs every check and assembles the report. The verdict prefers (**),
/// then (*), and is otherwise `Inconclusive`.
pub fn nash_verdict(g: &ResolutionGraph) -> Result<ClassificationReport> {
    let validation = validate(g);
    require_analyzable(g)?;
    let star_star = check_star_star(g);
    let star = check_star(g)?;
    let z = fundamental_cycle(g)?;
    let pa = arithmetic_genus(g, &z)?;
    let artin_rational = pa.is_zero();
    let structural = structural_rationality(g);

    if star_star.holds && !star.holds {
        return Err(Error::Internal("(**) holds but (*) fails".into()));
    }
    if structural.iii_holds != star_star.holds {
        return Err(Error::Internal("|E_i^2| > gamma(E_i) disagrees with (**)".into()));
    }

    let mut notes = Vec::new();
    if !validation.minimal {
        notes.push(
            "graph contains a smooth rational (-1)-curve; the criteria are stated for minimal resolutions".to_owned(),
        );
    }
    let nash_verdict = if star_star.holds {
        NashVerdict::BijectiveByStarStar
    } else if star.holds {
        NashVerdict::BijectiveByStar
    } else {
        notes.push("condition (*) fails; the sufficient criterion is silent".to_owned());
        NashVerdict::Inconclusive
    };
    if star_star.holds {
        if structural.all_genus_zero {
            notes.push("components of arithmetic genus 0 are taken to be smooth rational curves".to_owned());
        }
        if artin_rational != (structural.tree && structural.all_genus_zero) {
            return Err(Error::Internal(
                "structural rationality disagrees with the fundamental-cycle criterion under (**)".into(),
            ));
        }
    }

    Ok(ClassificationReport {
        graph: g.clone(),
        validation,
        star_star,
        star,
        fundamental_cycle: z,
        pa_fundamental: pa,
        artin_rational,
        structural,
        nash_verdict,
        notes,
    })
}

/// `α_k = n·k − k(k−1)/2` on the A_n chain, and its reversal. Both are
/// strictly anti-nef and together they separate every ordered pair.
pub fn an_witness_divisors(n: usize) -> Result<(Divisor, Divisor)> {
    let an = make_family(&Family::An(n))?;
    let n_big = BigInt::from(n);
    let alpha: Vec<BigInt> = (1..=n)
        .map(|k| {
            let k = BigInt::from(k);
            &n_big * &k - (&k - 1u32) * &k / 2u32
        })
        .collect();
    let mut reversed = alpha.clone();
    reversed.reverse();
    let (d, d_rev) = (Divisor::new(alpha), Divisor::new(reversed));
    let m = an.intersection_matrix();
    for w in [&d, &d_rev] {
        if lipman_status(w, &m) != ConeStatus::StrictLipman {
            return Err(Error::Internal(format!("{w} is not strictly anti-nef on A_{n}")));
        }
    }
    Ok((d, d_rev))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: Family) -> ResolutionGraph {
        make_family(&f).unwrap()
    }

    fn genus2() -> ResolutionGraph {
        fam(Family::Vertex { genus: 2, weight: -1 })
    }

    #[test]
    fn arithmetic_genus_examples() {
        let a2 = fam(Family::An(2));
        assert_eq!(arithmetic_genus(&a2, &Divisor::from_ints(&[1, 1])).unwrap(), BigInt::zero());
        assert_eq!(arithmetic_genus(&genus2(), &Divisor::from_ints(&[1])).unwrap(), BigInt::from(2));
        let claw = fam(Family::Claw(5));
        assert_eq!(
            arithmetic_genus(&claw, &Divisor::from_ints(&[1, 1, 1, 2])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(arithmetic_genus(&a2, &Divisor::zero(2)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn artin_examples() {
        assert!(is_rational_artin(&fam(Family::An(2))).unwrap());
        assert!(!is_rational_artin(&genus2()).unwrap());
        assert!(is_rational_artin(&fam(Family::Claw(5))).unwrap());
        // Elliptic: a single smooth genus-1 curve.
        assert!(!is_rational_artin(&fam(Family::Vertex { genus: 1, weight: -1 })).unwrap());
    }

    #[test]
    fn structural_examples() {
        let s = structural_rationality(&fam(Family::An(2)));
        assert!(s.tree && s.all_genus_zero && s.iii_holds && s.verdict);

        let s = structural_rationality(&genus2());
        assert!(!s.all_genus_zero && !s.verdict);

        let s = structural_rationality(&fam(Family::Claw(5)));
        assert!(s.tree && s.all_genus_zero && !s.iii_holds && !s.verdict);

        let s = structural_rationality(&fam(Family::Cycle { length: 3, weight: -3 }));
        assert!(!s.tree && s.iii_holds);

        let double = ResolutionGraph::new(vec![-4, -4], vec![0, 0], &[(0, 1, 2)]).unwrap();
        assert!(!structural_rationality(&double).tree);
    }

    #[test]
    fn verdict_examples() {
        let r = nash_verdict(&genus2()).unwrap();
        assert_eq!(r.nash_verdict, NashVerdict::BijectiveByStarStar);
        assert!(!r.artin_rational);

        let r = nash_verdict(&fam(Family::An(3))).unwrap();
        assert_eq!(r.nash_verdict, NashVerdict::BijectiveByStar);
        assert!(r.notes.is_empty());

        let r = nash_verdict(&fam(Family::Dn(4))).unwrap();
        assert_eq!(r.nash_verdict, NashVerdict::Inconclusive);
        assert!(r.notes.iter().any(|n| n.contains("condition (*) fails")));
    }

    #[test]
    fn verdict_flags_non_minimal_graphs() {
        let r = nash_verdict(&fam(Family::Vertex { genus: 0, weight: -1 })).unwrap();
        assert_eq!(r.nash_verdict, NashVerdict::BijectiveByStarStar);
        assert!(r.artin_rational);
        assert!(r.notes[0].contains("(-1)-curve"));
    }

    #[test]
    fn verdict_refuses_unanalyzable_graphs() {
        let split = ResolutionGraph::new(vec![-2, -2], vec![0, 0], &[]).unwrap();
        assert!(matches!(nash_verdict(&split), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn an_witness_examples() {
        let (d, r) = an_witness_divisors(3).unwrap();
        assert_eq!((d, r), (Divisor::from_ints(&[3, 5, 6]), Divisor::from_ints(&[6, 5, 3])));
        let (d, r) = an_witness_divisors(1).unwrap();
        assert_eq!((d, r), (Divisor::from_ints(&[1]), Divisor::from_ints(&[1])));
        let (d, r) = an_witness_divisors(4).unwrap();
        assert_eq!((d.clone(), r), (Divisor::from_ints(&[4, 7, 9, 10]), Divisor::from_ints(&[10, 9, 7, 4])));
        let md = fam(Family::An(4)).intersection_matrix().apply(&d);
        assert_eq!(md, [-1, -1, -1, -11].iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        assert!(an_witness_divisors(0).is_err());
    }
}

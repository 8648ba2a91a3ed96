//! Named families of dual graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::ResolutionGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Chain of `n` smooth rational (−2)-curves.
    An(usize),
    /// Chain `E_1 … E_{n−2}` with two (−2)-curves attached to `E_{n−2}`.
    Dn(usize),
    /// Three rational (−n)-curves each meeting a central (−2)-curve once,
    /// `n ≥ 5`. Rational and satisfies (*) but not (**).
    Claw(i64),
    /// A single component of the given genus and self-intersection.
    Vertex { genus: u32, weight: i64 },
    /// A cycle of `length` rational curves of self-intersection `weight`.
    /// Satisfies (**) whenever `weight ≤ −3`, yet is never rational.
    Cycle { length: usize, weight: i64 },
}

impl Family {
    pub fn kind(&self) -> &'static str {
        match self {
            Family::An(_) => "an",
            Family::Dn(_) => "dn",
            Family::Claw(_) => "claw",
            Family::Vertex { .. } => "vertex",
            Family::Cycle { .. } => "cycle",
        }
    }

    /// Parses a family from its kind and positional parameters, e.g.
    /// `("cycle", ["3", "-3"])`.
    pub fn parse(kind: &str, params: &[String]) -> Result<Family> {
        fn num<T: FromStr>(params: &[String], idx: usize, what: &str) -> Result<T> {
            let raw = params
                .get(idx)
                .ok_or_else(|| Error::FamilyParameter(format!("missing parameter {what}")))?;
            raw.parse()
                .map_err(|_| Error::FamilyParameter(format!("{what} = {raw:?} is not a valid integer")))
        }
        let expect = |count: usize| -> Result<()> {
            if params.len() == count {
                Ok(())
            } else {
                Err(Error::FamilyParameter(format!(
                    "family {kind} takes {count} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let family = match kind {
            "an" => {
                expect(1)?;
                Family::An(num(params, 0, "n")?)
            }
            "dn" => {
                expect(1)?;
                Family::Dn(num(params, 0, "n")?)
            }
            "claw" => {
                expect(1)?;
                Family::Claw(num(params, 0, "n")?)
            }
            "vertex" => {
                expect(2)?;
                Family::Vertex {
                    genus: num(params, 0, "genus")?,
                    weight: num(params, 1, "weight")?,
                }
            }
            "cycle" => {
                expect(2)?;
                Family::Cycle {
                    length: num(params, 0, "length")?,
                    weight: num(params, 1, "weight")?,
                }
            }
            other => {
                return Err(Error::FamilyParameter(format!(
                    "unknown family {other:?} (expected an, dn, claw, vertex or cycle)"
                )))
            }
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::An(n) | Family::Dn(n) => write!(f, "{} {n}", self.kind()),
            Family::Claw(n) => write!(f, "claw {n}"),
            Family::Vertex { genus, weight } => write!(f, "vertex {genus} {weight}"),
            Family::Cycle { length, weight } => write!(f, "cycle {length} {weight}"),
        }
    }
}

pub fn make_family(family: &Family) -> Result<ResolutionGraph> {
    let bad = |msg: String| Err(Error::FamilyParameter(msg));
    match *family {
        Family::An(n) => {
            if n < 1 {
                return bad("an needs n >= 1".into());
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 1)).collect();
            ResolutionGraph::new(vec![-2; n], vec![0; n], &edges)
        }
        Family::Dn(n) => {
            if n < 4 {
                return bad("dn needs n >= 4".into());
            }
            let mut edges: Vec<_> = (1..n - 2).map(|i| (i - 1, i, 1)).collect();
            edges.push((n - 3, n - 2, 1));
            edges.push((n - 3, n - 1, 1));
            ResolutionGraph::new(vec![-2; n], vec![0; n], &edges)
        }
        Family::Claw(n) => {
            if n < 5 {
                return bad("claw needs n >= 5".into());
            }
            ResolutionGraph::new(vec![-n, -n, -n, -2], vec![0; 4], &[(0, 3, 1), (1, 3, 1), (2, 3, 1)])
        }
        Family::Vertex { genus, weight } => {
            if weight > -1 {
                return bad("vertex needs weight <= -1".into());
            }
            ResolutionGraph::new(vec![weight], vec![genus], &[])
        }
        Family::Cycle { length, weight } => {
            if length < 3 {
                return bad("cycle needs length >= 3".into());
            }
            if weight > -3 {
                return bad("cycle needs weight <= -3".into());
            }
            let edges: Vec<_> = (0..length).map(|i| (i, (i + 1) % length, 1)).collect();
            ResolutionGraph::new(vec![weight; length], vec![0; length], &edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, validate};

    #[test]
    fn claw_matches_file_form() {
        let g = make_family(&Family::Claw(5)).unwrap();
        let f = parse_graph("vertices:4\nweights:-5 -5 -5 -2\ngenera:0 0 0 0\nedges:1-4:1 2-4:1 3-4:1\n").unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn dn_shape() {
        let g = make_family(&Family::Dn(5)).unwrap();
        assert_eq!(g.degree(2), 3);
        assert_eq!(g.edges().len(), 4);
        assert!(validate(&g).is_analyzable());
    }

    #[test]
    fn cycle_and_vertex() {
        let c = make_family(&Family::Cycle { length: 3, weight: -3 }).unwrap();
        assert_eq!(c.intersection_matrix().row_sums(), vec![-1, -1, -1]);
        assert!(validate(&c).is_analyzable());
        let v = make_family(&Family::Vertex { genus: 2, weight: -1 }).unwrap();
        assert_eq!((v.weights(), v.genera()), (&[-1][..], &[2][..]));
    }

    #[test]
    fn parameter_ranges() {
        assert!(make_family(&Family::Claw(4)).is_err());
        assert!(make_family(&Family::An(0)).is_err());
        assert!(make_family(&Family::Dn(3)).is_err());
        assert!(make_family(&Family::Cycle { length: 2, weight: -3 }).is_err());
        assert!(make_family(&Family::Cycle { length: 4, weight: -2 }).is_err());
        assert!(make_family(&Family::Vertex { genus: 0, weight: 0 }).is_err());
    }

    #[test]
    fn parse_from_words() {
        let p = |k: &str, a: &[&str]| Family::parse(k, &a.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        assert_eq!(p("cycle", &["3", "-3"]).unwrap(), Family::Cycle { length: 3, weight: -3 });
        assert_eq!(p("vertex", &["2", "-1"]).unwrap(), Family::Vertex { genus: 2, weight: -1 });
        assert_eq!(p("claw", &["7"]).unwrap(), Family::Claw(7));
        assert!(p("claw", &[]).is_err());
        assert!(p("an", &["x"]).is_err());
        assert!(p("e8", &["1"]).is_err());
    }
}

//! Lipman cone computations on the weighted dual graph of the minimal
//! resolution of a normal surface singularity.
//!
//! Given the intersection matrix `M = (E_i·E_j)` and the arithmetic genera
//! of the exceptional components, the crate decides two sufficient
//! conditions for bijectivity of the Nash map:
//!
//! * **(\*\*)**: the reduced cycle `E` satisfies `E·E_i < 0` for every `i`;
//! * **(\*)**: for every ordered pair `i ≠ j` some divisor `D` with
//!   `D·E_k < 0` for all `k` has `D[i] < D[j]`.
//!
//! (\*\*) implies (\*). Every positive answer to (\*) comes with an integral
//! witness divisor that has been re-verified, together with the multiplier
//! `n` for which `n·D` passes the adjoint vanishing criterion.
//!
//! The crate also decides rationality through Artin's fundamental cycle,
//! cross-checks it against the structural characterization available
//! under (\*\*), and enumerates small graphs up to isomorphism.
//!
//! All arithmetic is exact.
//!
//! ```
//! use lipman::{classify::nash_verdict, family::{make_family, Family}};
//!
//! let a3 = make_family(&Family::An(3)).unwrap();
//! let report = nash_verdict(&a3).unwrap();
//! assert!(report.star.holds && !report.star_star.holds);
//! ```

pub mod classify;
pub mod cli;
pub mod conditions;
pub mod cone;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod linalg;
pub mod report;
pub mod vanishing;

pub use classify::{nash_verdict, ClassificationReport, NashVerdict};
pub use conditions::{check_star, check_star_star, star_witness, StarCertificate, StarStarReport};
pub use cone::{ConeStatus, Divisor};
pub use error::{Error, Result};
pub use graph::{parse_graph, validate, IntersectionMatrix, ResolutionGraph, ValidationReport};

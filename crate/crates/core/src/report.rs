//! Text and JSON renderings of analysis results. Vertex indices are
//! 1-based in both formats; the text format also shows vertex names.

use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{ClassificationReport, StructuralRationality};
use crate::cone::{Divisor, JsonInt};
use crate::graph::{GraphJson, ResolutionGraph, ValidationReport};
use crate::vanishing::CriterionResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    graph: GraphJson,
    validation: &'a ValidationReport,
    star_star: StarStarJson,
    star: StarJson<'a>,
    fundamental_cycle: &'a Divisor,
    pa_fundamental: JsonInt<'a>,
    artin_rational: bool,
    structural: &'a StructuralRationality,
    nash_verdict: &'static str,
    notes: &'a [String],
}

#[derive(Serialize)]
struct StarStarJson {
    holds: bool,
    violations: Vec<usize>,
}

#[derive(Serialize)]
struct StarJson<'a> {
    holds: bool,
    witnesses: Vec<WitnessJson<'a>>,
    failing_pairs: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct WitnessJson<'a> {
    pair: [usize; 2],
    divisor: &'a Divisor,
    multiplier: JsonInt<'a>,
    valuations: &'a Divisor,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn to_wire(r: &ClassificationReport) -> ReportJson<'_> {
    ReportJson {
        graph: r.graph.to_json_value(),
        validation: &r.validation,
        star_star: StarStarJson {
            holds: r.star_star.holds,
            violations: one_based(&r.star_star.violations),
        },
        star: StarJson {
            holds: r.star.holds,
            witnesses: r
                .star
                .witnesses
                .iter()
                .map(|(&(i, j), w)| WitnessJson {
                    pair: [i + 1, j + 1],
                    divisor: &w.divisor,
                    multiplier: JsonInt(&w.multiplier),
                    valuations: &w.valuations,
                })
                .collect(),
            failing_pairs: r.star.failing_pairs.iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
        },
        fundamental_cycle: &r.fundamental_cycle,
        pa_fundamental: JsonInt(&r.pa_fundamental),
        artin_rational: r.artin_rational,
        structural: &r.structural,
        nash_verdict: r.nash_verdict.as_str(),
        notes: &r.notes,
    }
}

/// Renders a report; the output is a pure function of the report.
pub fn emit_report(r: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(&to_wire(r)).expect("report json is always serializable"),
        Format::Text => report_text(r),
    }
}

fn names(g: &ResolutionGraph, idx: &[usize]) -> String {
    if idx.is_empty() {
        return "none".to_owned();
    }
    idx.iter().map(|&i| g.vertex_name(i)).collect::<Vec<_>>().join(" ")
}

fn report_text(r: &ClassificationReport) -> String {
    let g = &r.graph;
    let mut s = String::new();
    let v = &r.validation;
    let _ = writeln!(s, "graph:");
    for line in g.to_graph_text().lines() {
        let _ = writeln!(s, "  {line}");
    }
    let _ = writeln!(
        s,
        "validation: negative_definite={} connected={} minimal={}",
        v.negative_definite, v.connected, v.minimal
    );
    for m in &v.messages {
        let _ = writeln!(s, "  {m}");
    }
    let _ = writeln!(
        s,
        "star_star: holds={} violations={}",
        r.star_star.holds,
        names(g, &r.star_star.violations)
    );
    let _ = writeln!(s, "star: holds={}", r.star.holds);
    for (&(i, j), w) in &r.star.witnesses {
        let _ = writeln!(
            s,
            "  witness {} < {}: divisor {} multiplier {} valuations {}",
            g.vertex_name(i),
            g.vertex_name(j),
            w.divisor,
            w.multiplier,
            w.valuations
        );
    }
    if r.star.failing_pairs.is_empty() {
        let _ = writeln!(s, "  failing_pairs: none");
    } else {
        let pairs: Vec<String> = r
            .star
            .failing_pairs
            .iter()
            .map(|&(i, j)| format!("{} < {}", g.vertex_name(i), g.vertex_name(j)))
            .collect();
        let _ = writeln!(s, "  failing_pairs: {}", pairs.join(", "));
    }
    let _ = writeln!(s, "fundamental_cycle: {}", r.fundamental_cycle);
    let _ = writeln!(s, "pa_fundamental: {}", r.pa_fundamental);
    let _ = writeln!(s, "artin_rational: {}", r.artin_rational);
    let st = &r.structural;
    let _ = writeln!(
        s,
        "structural: tree={} all_genus_zero={} iii_holds={} verdict={}",
        st.tree, st.all_genus_zero, st.iii_holds, st.verdict
    );
    let _ = writeln!(s, "nash_verdict: {}", r.nash_verdict.as_str());
    if r.notes.is_empty() {
        let _ = writeln!(s, "notes: none");
    } else {
        let _ = writeln!(s, "notes:");
        for n in &r.notes {
            let _ = writeln!(s, "  {n}");
        }
    }
    s
}

/// Index types of criterion results, rendered 1-based.
pub trait CriterionIndex: Ord + Copy {
    fn one_based(&self) -> Vec<usize>;
}

impl CriterionIndex for usize {
    fn one_based(&self) -> Vec<usize> {
        vec![self + 1]
    }
}

impl CriterionIndex for (usize, usize) {
    fn one_based(&self) -> Vec<usize> {
        vec![self.0 + 1, self.1 + 1]
    }
}

#[derive(Serialize)]
struct CriterionJson<'a> {
    criterion: &'a str,
    satisfied: bool,
    violations: Vec<Vec<usize>>,
    values: Vec<ValueJson<'a>>,
}

#[derive(Serialize)]
struct ValueJson<'a> {
    index: Vec<usize>,
    value: JsonInt<'a>,
}

fn label(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(ToString::to_string).collect();
    format!("value({})", parts.join(","))
}

/// Renders a criterion evaluation. The first text line is the verdict
/// followed by each violated value, e.g. `not satisfied, value(1) = 2`.
pub fn emit_criterion<K: CriterionIndex>(name: &str, r: &CriterionResult<K>, format: Format) -> String {
    match format {
        Format::Json => {
            let wire = CriterionJson {
                criterion: name,
                satisfied: r.satisfied,
                violations: r.violating.iter().map(CriterionIndex::one_based).collect(),
                values: r
                    .values
                    .iter()
                    .map(|(k, v)| ValueJson {
                        index: k.one_based(),
                        value: JsonInt(v),
                    })
                    .collect(),
            };
            serde_json::to_string(&wire).expect("criterion json is always serializable")
        }
        Format::Text => {
            let mut s = String::new();
            if r.satisfied {
                s.push_str("satisfied");
            } else {
                s.push_str("not satisfied");
                for k in &r.violating {
                    let _ = write!(s, ", {} = {}", label(&k.one_based()), r.values[k]);
                }
            }
            s.push('\n');
            for (k, v) in &r.values {
                let _ = writeln!(s, "  {} = {}", label(&k.one_based()), v);
            }
            s
        }
    }
}

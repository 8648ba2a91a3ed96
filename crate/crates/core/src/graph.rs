//! Weighted dual graphs of resolutions, their intersection matrices, and the
//! line-oriented graph file format.
//!
//! ```text
//! # A_2
//! vertices: 2
//! weights: -2 -2
//! genera: 0 0
//! edges: 1-2:1
//! labels: a b          (optional)
//! ```
//!
//! Vertices are 1-based in files and 0-based in the API.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cone::Divisor;
use crate::error::{Error, Result};
use crate::linalg;

/// The dual graph of the exceptional divisor: one vertex per component
/// `E_i`, weighted by `E_i²` and the arithmetic genus `p_a(E_i)`, with
/// `E_i·E_j` edges between distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResolutionGraph {
    weights: Vec<i64>,
    genera: Vec<u32>,
    mult: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
}

impl ResolutionGraph {
    /// Builds a graph from 0-based edges `(i, j, multiplicity)`.
    ///
    /// Repeated pairs are rejected rather than summed.
    pub fn new(weights: Vec<i64>, genera: Vec<u32>, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let n = weights.len();
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if genera.len() != n {
            return Err(Error::DimensionMismatch {
                what: "genera",
                expected: n,
                found: genera.len(),
            });
        }
        if let Some((v, &w)) = weights.iter().enumerate().find(|(_, &w)| w >= 0) {
            return Err(Error::NonNegativeWeight { vertex: v + 1, weight: w });
        }
        let mut mult = vec![vec![0u32; n]; n];
        for &(i, j, m) in edges {
            let (lo, hi) = (i.min(j), i.max(j));
            if hi >= n {
                return Err(Error::VertexOutOfRange { index: hi + 1, n });
            }
            if lo == hi {
                return Err(Error::InvalidEdge {
                    i: i + 1,
                    j: j + 1,
                    reason: "loops are not encoded; fold them into the genus".into(),
                });
            }
            if m == 0 {
                return Err(Error::InvalidEdge {
                    i: i + 1,
                    j: j + 1,
                    reason: "multiplicity must be at least 1".into(),
                });
            }
            if mult[lo][hi] != 0 {
                return Err(Error::InvalidEdge {
                    i: lo + 1,
                    j: hi + 1,
                    reason: "pair listed twice".into(),
                });
            }
            mult[lo][hi] = m;
            mult[hi][lo] = m;
        }
        Ok(ResolutionGraph {
            weights,
            genera,
            mult,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::DimensionMismatch {
                what: "labels",
                expected: self.n(),
                found: labels.len(),
            });
        }
        if let Some(bad) = labels.iter().find(|l| l.is_empty() || l.chars().any(|c| c.is_whitespace() || c == '#')) {
            return Err(Error::InvalidGraph(format!("label {bad:?} must be a non-empty word")));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn genera(&self) -> &[u32] {
        &self.genera
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `E_i·E_j` for `i ≠ j`; zero on the diagonal.
    pub fn mult(&self, i: usize, j: usize) -> u32 {
        self.mult[i][j]
    }

    /// 0-based edges `(i, j, m)` with `i < j`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.mult[i][j] > 0 {
                    out.push((i, j, self.mult[i][j]));
                }
            }
        }
        out
    }

    /// Number of edge-ends at vertex `i`, counted with multiplicity.
    pub fn degree(&self, i: usize) -> u64 {
        self.mult[i].iter().map(|&m| u64::from(m)).sum()
    }

    /// Display name: the label if present, else `E<i+1>`.
    pub fn vertex_name(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("E{}", i + 1),
        }
    }

    pub fn intersection_matrix(&self) -> IntersectionMatrix {
        let n = self.n();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { self.weights[i] } else { i64::from(self.mult[i][j]) })
                    .collect()
            })
            .collect();
        IntersectionMatrix { entries }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in 0..n {
                if self.mult[v][w] > 0 && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    /// Vertices with genus 0 and weight −1, which could be blown down.
    pub fn contractible_vertices(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.genera[i] == 0 && self.weights[i] == -1)
            .collect()
    }

    /// Applies a vertex permutation: vertex `i` of `self` becomes vertex
    /// `perm[i]` of the result. Labels move with their vertices.
    pub fn permuted(&self, perm: &[usize]) -> ResolutionGraph {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut weights = vec![0; n];
        let mut genera = vec![0; n];
        let mut mult = vec![vec![0; n]; n];
        for i in 0..n {
            weights[perm[i]] = self.weights[i];
            genera[perm[i]] = self.genera[i];
            for j in 0..n {
                mult[perm[i]][perm[j]] = self.mult[i][j];
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for i in 0..n {
                out[perm[i]] = l[i].clone();
            }
            out
        });
        ResolutionGraph {
            weights,
            genera,
            mult,
            labels,
        }
    }

    /// Serializes to the line-oriented graph format.
    pub fn to_graph_text(&self) -> String {
        let join = |v: Vec<String>| v.join(" ");
        let mut s = String::new();
        let _ = writeln!(s, "vertices: {}", self.n());
        let _ = writeln!(s, "weights: {}", join(self.weights.iter().map(|w| w.to_string()).collect()));
        let _ = writeln!(s, "genera: {}", join(self.genera.iter().map(|g| g.to_string()).collect()));
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(i, j, m)| format!("{}-{}:{}", i + 1, j + 1, m))
            .collect();
        if edges.is_empty() {
            s.push_str("edges:\n");
        } else {
            let _ = writeln!(s, "edges: {}", join(edges));
        }
        if let Some(labels) = &self.labels {
            let _ = writeln!(s, "labels: {}", labels.join(" "));
        }
        s
    }

    pub fn to_json_value(&self) -> GraphJson {
        GraphJson {
            vertices: self.n(),
            weights: self.weights.clone(),
            genera: self.genera.iter().map(|&g| i64::from(g)).collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(i, j, m)| [i as i64 + 1, j as i64 + 1, i64::from(m)])
                .collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("graph json is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)?;
        raw.into_graph()
    }
}

/// JSON mirror of the graph file format. Edges are 1-based `[i, j, m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub weights: Vec<i64>,
    pub genera: Vec<i64>,
    pub edges: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<ResolutionGraph> {
        let n = self.vertices;
        let weights = check_len("weights", n, self.weights)?;
        let genera = to_genera(check_len("genera", n, self.genera)?)?;
        let mut edges = Vec::with_capacity(self.edges.len());
        for [i, j, m] in self.edges {
            edges.push(to_edge(i, j, m, n)?);
        }
        let g = ResolutionGraph::new(weights, genera, &edges)?;
        match self.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

fn check_len<T>(what: &'static str, n: usize, v: Vec<T>) -> Result<Vec<T>> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            what,
            expected: n,
            found: v.len(),
        });
    }
    Ok(v)
}

fn to_genera(v: Vec<i64>) -> Result<Vec<u32>> {
    v.into_iter()
        .enumerate()
        .map(|(i, g)| {
            u32::try_from(g).map_err(|_| Error::NegativeGenus { vertex: i + 1, genus: g })
        })
        .collect()
}

fn to_edge(i: i64, j: i64, m: i64, n: usize) -> Result<(usize, usize, u32)> {
    if m < 0 {
        return Err(Error::NegativeMultiplicity {
            i: i.max(0) as usize,
            j: j.max(0) as usize,
            mult: m,
        });
    }
    let idx = |x: i64| -> Result<usize> {
        if x < 1 || x as usize > n {
            Err(Error::VertexOutOfRange {
                index: x.max(0) as usize,
                n,
            })
        } else {
            Ok(x as usize - 1)
        }
    };
    let (a, b) = (idx(i)?, idx(j)?);
    if a >= b {
        return Err(Error::InvalidEdge {
            i: a + 1,
            j: b + 1,
            reason: "endpoints must satisfy i < j".into(),
        });
    }
    let m = u32::try_from(m).map_err(|_| Error::InvalidEdge {
        i: a + 1,
        j: b + 1,
        reason: "multiplicity too large".into(),
    })?;
    Ok((a, b, m))
}

/// Parses a graph file. Content starting with `{` is read as the JSON
/// mirror; anything else as the line format.
pub fn parse_graph(text: &str) -> Result<ResolutionGraph> {
    if text.trim_start().starts_with('{') {
        return ResolutionGraph::from_json(text);
    }
    let mut fields: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::syntax(line_no, format!("expected `key: values`, found {line:?}")))?;
        let key = key.trim();
        if !matches!(key, "vertices" | "weights" | "genera" | "edges" | "labels") {
            return Err(Error::syntax(line_no, format!("unknown key {key:?}")));
        }
        if fields.insert(key, (line_no, rest.trim())).is_some() {
            return Err(Error::syntax(line_no, format!("duplicate key {key:?}")));
        }
    }
    let last_line = text.lines().count().max(1);
    let get = |key: &str| {
        fields
            .get(key)
            .copied()
            .ok_or_else(|| Error::syntax(last_line, format!("missing `{key}:` line")))
    };

    let (line, v) = get("vertices")?;
    let n: usize = v
        .parse()
        .map_err(|_| Error::syntax(line, format!("vertex count {v:?} is not a non-negative integer")))?;
    if n == 0 {
        return Err(Error::syntax(line, "vertex count must be positive"));
    }

    let (line, w) = get("weights")?;
    let weights: Vec<i64> = parse_ints(line, w)?;
    let weights = check_len("weights", n, weights)?;

    let (line, g) = get("genera")?;
    let genera = to_genera(check_len("genera", n, parse_ints(line, g)?)?)?;

    let (line, e) = get("edges")?;
    let mut edges = Vec::new();
    for tok in e.split_whitespace() {
        let bad = || Error::syntax(line, format!("edge {tok:?} is not of the form i-j:m"));
        let (ends, m) = tok.split_once(':').ok_or_else(bad)?;
        let (i, j) = ends.split_once('-').ok_or_else(bad)?;
        let i: i64 = i.parse().map_err(|_| bad())?;
        let j: i64 = j.parse().map_err(|_| bad())?;
        let m: i64 = m.parse().map_err(|_| bad())?;
        edges.push(to_edge(i, j, m, n)?);
    }
    let graph = ResolutionGraph::new(weights, genera, &edges)?;

    match fields.get("labels") {
        Some(&(_, l)) => graph.with_labels(l.split_whitespace().map(str::to_owned).collect()),
        None => Ok(graph),
    }
}

fn parse_ints(line: usize, s: &str) -> Result<Vec<i64>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::syntax(line, format!("{t:?} is not an integer")))
        })
        .collect()
}

/// Symmetric integer matrix `(E_i·E_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionMatrix {
    entries: Vec<Vec<i64>>,
}

impl IntersectionMatrix {
    /// Accepts any symmetric square matrix; negative definiteness is a
    /// separate test.
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    what: "matrix row",
                    expected: n,
                    found: row.len(),
                });
            }
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::InvalidGraph(format!(
                        "matrix is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(IntersectionMatrix { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `M·D`, i.e. the vector `(D·E_i)_i`.
    pub fn apply(&self, d: &Divisor) -> Vec<BigInt> {
        assert_eq!(d.len(), self.n(), "divisor length must match the matrix");
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(d.coeffs())
                    .filter(|(&m, _)| m != 0)
                    .map(|(&m, a)| a * m)
                    .sum()
            })
            .collect()
    }

    /// `(M·1)_i = E·E_i` for the reduced cycle `E`.
    pub fn row_sums(&self) -> Vec<i64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }
}

/// Exact negative-definiteness test: `(−1)^k d_k > 0` for every leading
/// principal minor `d_k`, checked as positive definiteness of `−M`.
pub fn is_negative_definite(m: &IntersectionMatrix) -> bool {
    let neg: Vec<Vec<BigInt>> = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(-x)).collect())
        .collect();
    linalg::is_positive_definite(&neg)
}

/// `K·E_i = 2·p_a(E_i) − 2 − E_i²` by adjunction.
pub fn canonical_intersections(g: &ResolutionGraph) -> Vec<i64> {
    g.weights
        .iter()
        .zip(&g.genera)
        .map(|(&w, &p)| 2 * i64::from(p) - 2 - w)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub negative_definite: bool,
    pub connected: bool,
    /// False when some vertex has genus 0 and weight −1. Only a warning.
    pub minimal: bool,
    pub messages: Vec<String>,
}

impl ValidationReport {
    /// Whether the cone and rationality computations may run.
    pub fn is_analyzable(&self) -> bool {
        self.negative_definite && self.connected
    }
}

pub fn validate(g: &ResolutionGraph) -> ValidationReport {
    let negative_definite = is_negative_definite(&g.intersection_matrix());
    let connected = g.is_connected();
    let contractible = g.contractible_vertices();
    let mut messages = Vec::new();
    if !negative_definite {
        messages.push("error: intersection matrix is not negative definite".to_owned());
    }
    if !connected {
        messages.push("error: dual graph is disconnected".to_owned());
    }
    for &i in &contractible {
        messages.push(format!(
            "warning: {} is a smooth rational (-1)-curve; the graph is not a minimal resolution",
            g.vertex_name(i)
        ));
    }
    ValidationReport {
        negative_definite,
        connected,
        minimal: contractible.is_empty(),
        messages,
    }
}

/// Fails with [`Error::InvalidGraph`] unless the graph is negative definite
/// and connected.
pub(crate) fn require_analyzable(g: &ResolutionGraph) -> Result<()> {
    let report = validate(g);
    if report.is_analyzable() {
        Ok(())
    } else {
        let errors: Vec<&str> = report
            .messages
            .iter()
            .filter_map(|m| m.strip_prefix("error: "))
            .collect();
        Err(Error::InvalidGraph(errors.join("; ")))
    }
}

//! Graph constructions: projective-plane incidence graphs, their chained
//! extremal family, and a few classic baselines.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cycles::girth;
use crate::distance::distances_from;
use crate::error::{Error, Result};
use crate::field::make_field;
use crate::graph::Graph;

/// A graph with per-vertex labels and a map of named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
    pub designated: BTreeMap<String, usize>,
    pub info: ConstructionInfo,
}

/// Parameters recorded by a generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionInfo {
    pub construction: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub modulus: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ell: Option<usize>,
    /// True when the chain was built with the default (incidence graph) head.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub default_head: bool,
}

/// JSON sidecar written next to generated graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorMetadata {
    #[serde(flatten)]
    pub info: ConstructionInfo,
    pub n: usize,
    pub m: usize,
    pub designated: BTreeMap<String, usize>,
}

impl LabeledGraph {
    /// Wraps a plain graph, naming vertices `v0, v1, ...`.
    pub fn unlabeled(graph: Graph, construction: &str) -> Self {
        let labels = (0..graph.n()).map(|i| format!("v{i}")).collect();
        Self {
            graph,
            labels,
            designated: BTreeMap::new(),
            info: ConstructionInfo {
                construction: construction.to_string(),
                ..Default::default()
            },
        }
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.designated.get(name).copied()
    }

    pub fn metadata(&self) -> GeneratorMetadata {
        GeneratorMetadata {
            info: self.info.clone(),
            n: self.graph.n(),
            m: self.graph.m(),
            designated: self.designated.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicKind {
    Path,
    Cycle,
    Star,
    Complete,
}

/// Path, cycle, star (centre 0) or complete graph on `n` vertices.
pub fn classic(kind: ClassicKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let edges: Vec<(usize, usize)> = match kind {
        ClassicKind::Path => (1..n).map(|i| (i - 1, i)).collect(),
        ClassicKind::Cycle => {
            if n < 3 {
                return Err(Error::InvalidArgument("cycle needs at least 3 vertices".into()));
            }
            (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]).collect()
        }
        ClassicKind::Star => (1..n).map(|i| (0, i)).collect(),
        ClassicKind::Complete => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect(),
    };
    Graph::new(n, edges)
}

// Nonzero triples over GF(q) whose leftmost nonzero coordinate is 1, in
// lexicographic order of element indices.
fn normalized_triples(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let lead = [a, b, c].into_iter().find(|&x| x != 0);
                if lead == Some(1) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn triple_label(t: &[usize; 3]) -> String {
    format!("{},{},{}", t[0], t[1], t[2])
}

/// Point-line incidence graph of the projective plane over GF(q).
///
/// Points (1-dimensional subspaces of GF(q)^3) come first, then lines
/// (2-dimensional subspaces, represented by normal covectors); a point lies
/// on a line iff their dot product vanishes. Designated `u`, `v` are the
/// endpoints of the lexicographically smallest edge.
pub fn reiman(q: u64) -> Result<LabeledGraph> {
    let field = make_field(q)?;
    let (add, mul) = field.tables();
    let q = q as usize;
    let triples = normalized_triples(q);
    let half = triples.len();
    let mut edges = Vec::with_capacity(half * (q + 1));
    for (i, pt) in triples.iter().enumerate() {
        for (j, ln) in triples.iter().enumerate() {
            let dot = (0..3).fold(0, |acc, k| add[acc][mul[pt[k]][ln[k]]]);
            if dot == 0 {
                edges.push((i, half + j));
            }
        }
    }
    let graph = Graph::new(2 * half, edges)?;
    let labels = triples
        .iter()
        .map(|t| format!("P({})", triple_label(t)))
        .chain(triples.iter().map(|t| format!("L({})", triple_label(t))))
        .collect();
    let (u, v) = graph.edges()[0];
    Ok(LabeledGraph {
        graph,
        labels,
        designated: BTreeMap::from([("u".to_string(), u), ("v".to_string(), v)]),
        info: ConstructionInfo {
            construction: "reiman".into(),
            q: Some(q as u64),
            modulus: Some(field.modulus_string()),
            ..Default::default()
        },
    })
}

/// Parameters of a chained graph.
#[derive(Debug, Clone)]
pub struct ChainSpec {
    pub delta: usize,
    pub ell: usize,
    /// Replacement for the first copy; must designate adjacent `u` and `v`.
    pub head: Option<LabeledGraph>,
}

impl ChainSpec {
    pub fn new(delta: usize, ell: usize) -> Self {
        Self {
            delta,
            ell,
            head: None,
        }
    }

    pub fn with_head(mut self, head: LabeledGraph) -> Self {
        self.head = Some(head);
        self
    }

    fn validate(&self) -> Result<(u64, Option<(usize, usize)>)> {
        let bad = |msg: String| Err(Error::InvalidChainSpec(msg));
        if self.delta < 3 {
            return bad(format!("delta = {} must be at least 3", self.delta));
        }
        if self.ell < 2 || !self.ell.is_multiple_of(2) {
            return bad(format!("ell = {} must be even and at least 2", self.ell));
        }
        let q = (self.delta - 1) as u64;
        if crate::field::prime_power(q).is_none() {
            return bad(format!("delta - 1 = {q} is not a prime power"));
        }
        let Some(head) = &self.head else {
            return Ok((q, None));
        };
        let (Some(u), Some(v)) = (head.vertex("u"), head.vertex("v")) else {
            return bad("head must designate vertices u and v".into());
        };
        let g = &head.graph;
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return bad(format!("head vertices u = {u}, v = {v} are not adjacent"));
        }
        if g.min_degree() < self.delta {
            return bad(format!(
                "head minimum degree {} is below delta = {}",
                g.min_degree(),
                self.delta
            ));
        }
        if !girth(g).at_least(6) {
            return bad(format!("head girth {} is below 6", girth(g)));
        }
        if !g.is_connected() {
            return bad("head is disconnected".into());
        }
        Ok((q, Some((u, v))))
    }
}

// Smallest vertex of `block` (global ids offset..offset+len) at distance
// exactly 3 from `from` inside the block's own graph.
fn distance_three_witness(block: &Graph, offset: usize, from: usize) -> Option<usize> {
    let d = distances_from(block, &[from - offset]).ok()?;
    (0..block.n()).find(|&x| d.get(x) == Some(3)).map(|x| x + offset)
}

/// Chains `ell` copies of the incidence graph `H_q` (`q = delta - 1`).
///
/// The first and last copies are complete `H_q` (the first may be replaced by
/// a head graph), the middle copies are `H_q - uv`, and the bridge edges join
/// `v` of copy `t` to `u` of copy `t + 1`. Vertices are laid out copy by copy.
pub fn chain(spec: &ChainSpec) -> Result<LabeledGraph> {
    let (q, head_edge) = spec.validate()?;
    let base = reiman(q)?;
    let (bu, bv) = (base.designated["u"], base.designated["v"]);
    let middle = base.graph.with_edges(&[], &[(bu, bv)])?;

    let ell = spec.ell;
    let mut blocks: Vec<(&Graph, &[String], (usize, usize))> = Vec::with_capacity(ell);
    for t in 1..=ell {
        let block = match (&spec.head, t) {
            (Some(h), 1) => (&h.graph, h.labels.as_slice(), head_edge.unwrap()),
            (_, t) if t == 1 || t == ell => (&base.graph, base.labels.as_slice(), (bu, bv)),
            _ => (&middle, base.labels.as_slice(), (bu, bv)),
        };
        blocks.push(block);
    }

    let mut graph = Graph::empty(0);
    let mut labels = Vec::new();
    let mut designated = BTreeMap::new();
    let mut offsets = Vec::with_capacity(ell);
    for (t, (g, names, (u, v))) in blocks.iter().enumerate() {
        let off = graph.n();
        offsets.push(off);
        graph = graph.disjoint_union(g);
        labels.extend(names.iter().map(|s| format!("H^{}:{s}", t + 1)));
        designated.insert(format!("u^{}", t + 1), off + u);
        designated.insert(format!("v^{}", t + 1), off + v);
    }
    let bridges: Vec<(usize, usize)> = (1..ell)
        .map(|t| (designated[&format!("v^{t}")], designated[&format!("u^{}", t + 1)]))
        .collect();
    let graph = graph.with_edges(&bridges, &[])?;

    if let Some(w) = distance_three_witness(blocks[0].0, offsets[0], designated["v^1"]) {
        designated.insert("u*".into(), w);
    }
    let last = ell - 1;
    if let Some(w) =
        distance_three_witness(blocks[last].0, offsets[last], designated[&format!("u^{ell}")])
    {
        designated.insert("v*".into(), w);
    }

    Ok(LabeledGraph {
        graph,
        labels,
        designated,
        info: ConstructionInfo {
            construction: "chain".into(),
            q: Some(q),
            modulus: base.info.modulus.clone(),
            delta: Some(spec.delta),
            ell: Some(ell),
            default_head: spec.head.is_none(),
        },
    })
}

/// Order of the incidence graph over GF(q): `2(q^2 + q + 1)`.
pub fn reiman_order(q: u64) -> u64 {
    2 * (q * q + q + 1)
}

//! Breadth-first distances, eccentricities and neighbourhood balls.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::Rational;

/// Distances from a source set. Unreachable vertices hold `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    sources: Vec<usize>,
    dist: Vec<Option<u32>>,
}

impl DistanceVector {
    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.dist[v]
    }

    pub fn as_slice(&self) -> &[Option<u32>] {
        &self.dist
    }

    pub fn into_vec(self) -> Vec<Option<u32>> {
        self.dist
    }

    /// Largest finite distance, `None` if some vertex is unreachable.
    pub fn max_if_all_reachable(&self) -> Option<u32> {
        self.dist.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }
}

/// Multi-source BFS truncated at `limit` (vertices beyond are left `None`).
pub(crate) fn bfs_limited(g: &Graph, sources: &[usize], limit: Option<u32>) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    for &s in sources {
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        let dx = dist[x].unwrap();
        if limit.is_some_and(|l| dx >= l) {
            continue;
        }
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Shortest-path distance from every vertex to the nearest vertex of `sources`.
pub fn distances_from(g: &Graph, sources: &[usize]) -> Result<DistanceVector> {
    if sources.is_empty() {
        return Err(Error::InvalidArgument("empty source set".into()));
    }
    for &s in sources {
        g.check_vertex(s)?;
    }
    let mut sorted = sources.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let dist = bfs_limited(g, &sorted, None);
    Ok(DistanceVector {
        sources: sorted,
        dist,
    })
}

/// Eccentricity of `v`, or `None` when the graph is disconnected.
pub fn eccentricity(g: &Graph, v: usize) -> Option<u32> {
    let d = bfs_limited(g, &[v], None);
    d.iter().try_fold(0, |acc, x| x.map(|x| acc.max(x)))
}

/// Full distance matrix; entry `[u][v]` is `None` across components.
pub fn all_pairs(g: &Graph) -> Vec<Vec<Option<u32>>> {
    (0..g.n())
        .into_par_iter()
        .map(|s| bfs_limited(g, &[s], None))
        .collect()
}

/// Per-vertex eccentricities together with the derived statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub ex_total: u64,
    #[serde(serialize_with = "crate::io::serialize_rational")]
    pub avec: Rational,
    pub diameter: u32,
    pub radius: u32,
}

pub fn eccentricity_profile(g: &Graph) -> Result<EccentricityProfile> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let ecc: Vec<u32> = (0..g.n())
        .into_par_iter()
        .map(|v| eccentricity(g, v).expect("connected"))
        .collect();
    let ex_total: u64 = ecc.iter().map(|&e| u64::from(e)).sum();
    let avec = Rational::new(ex_total as i64, g.n() as i64);
    Ok(EccentricityProfile {
        diameter: ecc.iter().copied().max().unwrap(),
        radius: ecc.iter().copied().min().unwrap(),
        ecc,
        ex_total,
        avec,
    })
}

pub fn avec(g: &Graph) -> Result<Rational> {
    eccentricity_profile(g).map(|p| p.avec)
}

pub fn diameter(g: &Graph) -> Result<u32> {
    eccentricity_profile(g).map(|p| p.diameter)
}

/// Weighted average eccentricity `sum c(v) e(v) / sum c(v)`.
///
/// Generic over the weight scalar so the same routine serves exact
/// rationals and floats.
pub fn weighted_avec<S: Scalar>(g: &Graph, weights: &[S]) -> Result<S> {
    if weights.len() != g.n() {
        return Err(Error::InvalidWeights(format!(
            "{} weights for {} vertices",
            weights.len(),
            g.n()
        )));
    }
    if weights.iter().any(Scalar::is_negative) {
        return Err(Error::InvalidWeights("negative weight".into()));
    }
    let total = weights.iter().cloned().fold(S::zero(), |a, b| a + b);
    if total <= S::zero() {
        return Err(Error::InvalidWeights("zero total weight".into()));
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let support: Vec<usize> = (0..g.n()).filter(|&v| !weights[v].is_zero()).collect();
    let ecc: Vec<u32> = support
        .par_iter()
        .map(|&v| eccentricity(g, v).expect("connected"))
        .collect();
    let ex = support
        .iter()
        .zip(&ecc)
        .fold(S::zero(), |acc, (&v, &e)| {
            acc + weights[v].clone() * S::from_count(u64::from(e))
        });
    Ok(ex / total)
}

/// All vertices within distance `k` of some vertex of `set`, ascending.
pub fn ball(g: &Graph, set: &[usize], k: u32) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Err(Error::InvalidArgument("empty vertex set".into()));
    }
    for &s in set {
        g.check_vertex(s)?;
    }
    let d = bfs_limited(g, set, Some(k));
    Ok((0..g.n()).filter(|&v| d[v].is_some()).collect())
}

/// Edge distance: the minimum vertex distance between an endpoint of `e`
/// and an endpoint of `f`. `None` if the edges lie in different components.
pub fn edge_distance(g: &Graph, e: (usize, usize), f: (usize, usize)) -> Result<Option<u32>> {
    for (a, b) in [e, f] {
        if !g.has_edge(a, b) {
            return Err(Error::InvalidEdge(a, b));
        }
    }
    let d = bfs_limited(g, &[e.0, e.1], None);
    Ok(match (d[f.0], d[f.1]) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    })
}

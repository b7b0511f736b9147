//! Weight transfer from tree vertices to matching edges.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;

use super::matching::Matching;
use super::tree::AnchoredTree;
use super::Variant;

/// Integer weights `c` on tree vertices and `cbar` on line-graph vertices,
/// plus the normalized weights on matching edges in scalar type `S`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightSystem<S> {
    /// Number of vertices assigned to each vertex.
    pub c: Vec<u64>,
    /// Indexed like the tree's edge list; nonzero only on matching edges.
    pub cbar: Vec<u64>,
    /// `cbar` of each matching edge, in matching order.
    pub cbar_matching: Vec<u64>,
    /// Normalized weight of each matching edge, in matching order.
    pub cprime: Vec<S>,
    /// Total of `cprime`.
    pub total: S,
}

/// Weights without the lemma checks; used by the replay so failures become
/// diagnostics instead of errors.
pub(crate) fn weights_unchecked<S: Scalar>(
    tree: &Graph,
    assignment: &[usize],
    m: &Matching,
    delta_star: u64,
    first_threshold: Option<S>,
) -> WeightSystem<S> {
    let mut c = vec![0u64; tree.n()];
    for &x in assignment {
        c[x] += 1;
    }
    let mut cbar = vec![0u64; tree.m()];
    let mut cbar_matching = Vec::with_capacity(m.len());
    for &(a, b) in &m.edges {
        let w = c[a] + c[b];
        cbar[tree.edge_index(a, b).expect("matching edge in tree")] = w;
        cbar_matching.push(w);
    }
    let ds = S::from_count(delta_star);
    let cprime: Vec<S> = cbar_matching
        .iter()
        .enumerate()
        .map(|(i, &w)| {
            let w = S::from_count(w);
            match (&first_threshold, i) {
                (Some(big), 0) => (w - big.clone() + ds.clone()) / ds.clone(),
                _ => w / ds.clone(),
            }
        })
        .collect();
    let total = cprime.iter().cloned().fold(S::zero(), |a, b| a + b);
    WeightSystem {
        c,
        cbar,
        cbar_matching,
        cprime,
        total,
    }
}

/// Computes `c`, `cbar` and `cprime`.
///
/// In the maxdeg variant `max_star` must be given; the first matching edge
/// is shifted to `(cbar(e_1) - max_star + delta_star) / delta_star`.
/// Fails with [`Error::LemmaBoundViolated`] if some `cbar(e)` is below
/// `delta_star` (or `cbar(e_1)` below `max_star`).
pub fn compute_weights<S: Scalar>(
    t: &AnchoredTree,
    m: &Matching,
    delta_star: u64,
    max_star: Option<S>,
) -> Result<WeightSystem<S>> {
    let shift = match m.variant {
        Variant::Girth6 => None,
        Variant::Maxdeg => Some(max_star.ok_or_else(|| {
            Error::MissingParameter("maxdeg weights need the maximum-degree constant".into())
        })?),
    };
    let w = weights_unchecked(&t.tree, &t.assignment, m, delta_star, shift.clone());
    for (i, &cb) in w.cbar_matching.iter().enumerate() {
        let skip_first = shift.is_some() && i == 0;
        if !skip_first && cb < delta_star {
            return Err(Error::LemmaBoundViolated(format!(
                "cbar(e_{}) = {cb} < {delta_star}",
                i + 1
            )));
        }
    }
    if let Some(big) = shift {
        if S::from_count(w.cbar_matching[0]) < big {
            return Err(Error::LemmaBoundViolated(format!(
                "cbar(e_1) = {} below the maximum-degree ball bound {big:?}",
                w.cbar_matching[0]
            )));
        }
    }
    Ok(w)
}

//! Line graphs, graph powers and induced subgraphs.

use rayon::prelude::*;

use crate::distance::bfs_limited;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Line graph; vertex `i` is the `i`-th edge of `g.edges()`.
///
/// Returns the line graph and the edge each new vertex stands for.
pub fn line_graph(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut edges = Vec::new();
    for inc in &incident {
        for (a, &i) in inc.iter().enumerate() {
            for &j in &inc[a + 1..] {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    // simple graphs: two edges share at most one endpoint, so no duplicates
    edges.sort_unstable();
    (Graph::from_canonical(g.m(), edges), g.edges().to_vec())
}

/// `k`-th power: `u ~ v` iff `1 <= d(u, v) <= k`.
pub fn power_graph(g: &Graph, k: u32) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    let rows: Vec<Vec<(usize, usize)>> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            let d = bfs_limited(g, &[u], Some(k));
            (u + 1..g.n())
                .filter(|&v| d[v].is_some())
                .map(|v| (u, v))
                .collect()
        })
        .collect();
    Ok(Graph::from_canonical(g.n(), rows.concat()))
}

/// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
///
/// The returned map sends each new index to its original vertex.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        g.check_vertex(v)?;
        if index[v] != usize::MAX {
            return Err(Error::InvalidArgument(format!("vertex {v} listed twice")));
        }
        index[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
        .map(|&(u, v)| (index[u], index[v]));
    let sub = Graph::new(vertices.len(), edges)?;
    Ok((sub, vertices.to_vec()))
}

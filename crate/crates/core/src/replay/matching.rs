//! Greedy matchings whose edges are spread at prescribed distances.

use serde::Serialize;

use crate::cycles::girth;
use crate::distance::bfs_limited;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::Variant;

/// Vertex-disjoint edges `e_1, ..., e_k` in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
    pub variant: Variant,
    /// Maximum-degree vertex incident with `e_1` (maxdeg variant only).
    pub anchor: Option<usize>,
    /// `pairwise_distances[i][j]` is the edge distance `d(e_i, e_j)`.
    pub pairwise_distances: Vec<Vec<u32>>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }

    /// Radius of the ball owned by the `i`-th edge.
    pub fn ball_radius(&self, i: usize) -> u32 {
        match (self.variant, i) {
            (Variant::Maxdeg, 0) => 3,
            _ => 2,
        }
    }
}

// Edge distance from every edge of `g` to the edge set whose endpoints have
// the given vertex distances.
fn edge_distances(g: &Graph, vertex_dist: &[Option<u32>]) -> Vec<u32> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let a = vertex_dist[u].unwrap_or(u32::MAX);
            let b = vertex_dist[v].unwrap_or(u32::MAX);
            a.min(b)
        })
        .collect()
}

fn endpoints(edges: &[(usize, usize)]) -> Vec<usize> {
    edges.iter().flat_map(|&(u, v)| [u, v]).collect()
}

fn check_input(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    if g.min_degree() < 3 {
        return Err(Error::OutOfRange(format!(
            "minimum degree {} < 3",
            g.min_degree()
        )));
    }
    if !girth(g).at_least(6) {
        return Err(Error::NotGirthSix);
    }
    Ok(())
}

/// Builds the matching for the chosen variant.
///
/// `girth6`: start with the smallest edge and repeatedly add the smallest
/// edge at distance exactly 5 from the matching until every edge is within
/// distance 4. `maxdeg`: start with the smallest edge at the anchor and add
/// the smallest edge `f` with `d(f, e_1) >= 6`, `d(f, e_j) >= 5` for `j >= 2`,
/// and equality in at least one of the two, until no such edge remains.
pub fn build_matching(g: &Graph, variant: Variant, anchor: Option<usize>) -> Result<Matching> {
    check_input(g)?;
    let edges = match variant {
        Variant::Girth6 => grow_girth6(g)?,
        Variant::Maxdeg => {
            let a = anchor.ok_or_else(|| {
                Error::MissingParameter("maxdeg matching needs a maximum-degree anchor".into())
            })?;
            g.check_vertex(a)?;
            if g.degree(a) != g.max_degree() {
                return Err(Error::InvalidArgument(format!(
                    "anchor {a} has degree {} but the maximum degree is {}",
                    g.degree(a),
                    g.max_degree()
                )));
            }
            grow_maxdeg(g, a)?
        }
    };
    let pairwise_distances = edges
        .iter()
        .map(|&(u, v)| {
            let d = bfs_limited(g, &[u, v], None);
            edges
                .iter()
                .map(|&(x, y)| d[x].unwrap().min(d[y].unwrap()))
                .collect()
        })
        .collect();
    let m = Matching {
        edges,
        variant,
        anchor: if variant == Variant::Maxdeg { anchor } else { None },
        pairwise_distances,
    };
    verify_matching(g, &m)?;
    Ok(m)
}

fn grow_girth6(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let mut edges = vec![g.edges()[0]];
    loop {
        let vd = bfs_limited(g, &endpoints(&edges), None);
        let ed = edge_distances(g, &vd);
        if ed.iter().all(|&d| d <= 4) {
            return Ok(edges);
        }
        let next = ed.iter().position(|&d| d == 5).ok_or_else(|| {
            Error::ConstructionInvariantViolated(
                "an edge is at distance > 4 from the matching but none is at distance 5".into(),
            )
        })?;
        edges.push(g.edges()[next]);
    }
}

fn grow_maxdeg(g: &Graph, anchor: usize) -> Result<Vec<(usize, usize)>> {
    let first = g
        .neighbors(anchor)
        .iter()
        .map(|&w| (anchor.min(w), anchor.max(w)))
        .min()
        .expect("anchor has neighbours");
    let from_first = edge_distances(g, &bfs_limited(g, &[first.0, first.1], None));
    let mut edges = vec![first];
    loop {
        let from_rest = if edges.len() > 1 {
            edge_distances(g, &bfs_limited(g, &endpoints(&edges[1..]), None))
        } else {
            vec![u32::MAX; g.m()]
        };
        let next = (0..g.m()).find(|&i| {
            let (a, b) = (from_first[i], from_rest[i]);
            a >= 6 && b >= 5 && (a == 6 || b == 5)
        });
        match next {
            Some(i) => edges.push(g.edges()[i]),
            None => {
                let uncovered = (0..g.m()).find(|&i| from_first[i] > 5 && from_rest[i] > 4);
                if let Some(i) = uncovered {
                    return Err(Error::ConstructionInvariantViolated(format!(
                        "edge {:?} is uncovered but no candidate edge exists",
                        g.edges()[i]
                    )));
                }
                return Ok(edges);
            }
        }
    }
}

/// Checks disjointness, the pairwise distance rules, coverage, and that the
/// owned balls are pairwise disjoint.
pub fn verify_matching(g: &Graph, m: &Matching) -> Result<()> {
    let fail = |msg: String| Err(Error::ConstructionInvariantViolated(msg));
    let vs = m.vertices();
    if vs.windows(2).any(|w| w[0] == w[1]) {
        return fail("matching edges share a vertex".into());
    }
    for &(u, v) in &m.edges {
        if !g.has_edge(u, v) {
            return fail(format!("({u}, {v}) is not an edge"));
        }
    }
    let k = m.len();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let d = m.pairwise_distances[i][j];
            let need = match (m.variant, i.min(j)) {
                (Variant::Maxdeg, 0) => 6,
                _ => 5,
            };
            if d < need {
                return fail(format!("d(e_{}, e_{}) = {d} < {need}", i + 1, j + 1));
            }
        }
    }
    match m.variant {
        Variant::Girth6 => {
            let ed = edge_distances(g, &bfs_limited(g, &vs, None));
            if let Some(i) = ed.iter().position(|&d| d > 4) {
                return fail(format!("edge {:?} is farther than 4 from M", g.edges()[i]));
            }
        }
        Variant::Maxdeg => {
            let (a, b) = m.edges[0];
            let first = edge_distances(g, &bfs_limited(g, &[a, b], None));
            let rest = if k > 1 {
                edge_distances(g, &bfs_limited(g, &endpoints(&m.edges[1..]), None))
            } else {
                vec![u32::MAX; g.m()]
            };
            for i in 0..g.m() {
                if first[i] > 5 && rest[i] > 4 && !m.edges.contains(&g.edges()[i]) {
                    return fail(format!("edge {:?} is not covered", g.edges()[i]));
                }
            }
        }
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, &(a, b)) in m.edges.iter().enumerate() {
        let d = bfs_limited(g, &[a, b], Some(m.ball_radius(i)));
        for x in (0..g.n()).filter(|&x| d[x].is_some()) {
            if owner[x] != usize::MAX {
                return fail(format!(
                    "vertex {x} lies in the balls of e_{} and e_{}",
                    owner[x] + 1,
                    i + 1
                ));
            }
            owner[x] = i;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::edge_distance;
    use crate::generators::{chain, classic, reiman, ChainSpec, ClassicKind};

    #[test]
    fn heawood_needs_one_edge() {
        let g = reiman(2).unwrap().graph;
        let m = build_matching(&g, Variant::Girth6, None).unwrap();
        assert_eq!(m.edges, vec![g.edges()[0]]);
    }

    fn assert_girth6_invariants(g: &Graph, m: &Matching) {
        for i in 0..m.len() {
            for j in 0..i {
                let d = edge_distance(g, m.edges[i], m.edges[j]).unwrap().unwrap();
                assert!(d >= 5);
            }
        }
        for &f in g.edges() {
            let near = m
                .edges
                .iter()
                .map(|&e| edge_distance(g, e, f).unwrap().unwrap())
                .min()
                .unwrap();
            assert!(near <= 4);
        }
    }

    #[test]
    fn short_chain_girth6() {
        // e_1 = u^1 v^1 sits on the bridge, so one edge already covers both copies
        let g = chain(&ChainSpec::new(3, 2)).unwrap().graph;
        let m = build_matching(&g, Variant::Girth6, None).unwrap();
        assert_eq!(m.len(), 1);
        assert_girth6_invariants(&g, &m);
    }

    #[test]
    fn longer_chain_girth6() {
        let g = chain(&ChainSpec::new(3, 4)).unwrap().graph;
        let m = build_matching(&g, Variant::Girth6, None).unwrap();
        assert!(m.len() >= 2);
        assert_eq!(edge_distance(&g, m.edges[0], m.edges[1]).unwrap(), Some(5));
        assert_girth6_invariants(&g, &m);
    }

    #[test]
    fn long_chain_maxdeg() {
        let c = chain(&ChainSpec::new(3, 6)).unwrap();
        let g = &c.graph;
        let anchor = (0..14).find(|&v| g.degree(v) == g.max_degree()).unwrap();
        let m = build_matching(g, Variant::Maxdeg, Some(anchor)).unwrap();
        assert!(m.edges[0].0 == anchor || m.edges[0].1 == anchor);
        for i in 1..m.len() {
            let d = edge_distance(g, m.edges[0], m.edges[i]).unwrap().unwrap();
            assert!(d >= 6);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let c6 = classic(ClassicKind::Cycle, 6).unwrap();
        assert!(matches!(
            build_matching(&c6, Variant::Girth6, None),
            Err(Error::OutOfRange(_))
        ));
        let k4 = classic(ClassicKind::Complete, 4).unwrap();
        assert_eq!(build_matching(&k4, Variant::Girth6, None), Err(Error::NotGirthSix));
        let h = reiman(2).unwrap().graph;
        assert!(matches!(
            build_matching(&h, Variant::Maxdeg, None),
            Err(Error::MissingParameter(_))
        ));
        let c = chain(&ChainSpec::new(3, 2)).unwrap().graph;
        let low = (0..c.n()).find(|&v| c.degree(v) < c.max_degree()).unwrap();
        assert!(matches!(
            build_matching(&c, Variant::Maxdeg, Some(low)),
            Err(Error::InvalidArgument(_))
        ));
    }
}

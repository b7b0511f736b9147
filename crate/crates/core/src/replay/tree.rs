//! Spanning trees that preserve every vertex's distance to the matching.

use serde::Serialize;

use crate::distance::bfs_limited;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::matching::Matching;
use super::Variant;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnchoredTree {
    #[serde(serialize_with = "serialize_edges")]
    pub tree: Graph,
    /// Nearest matched vertex `x_M` for every vertex `x`.
    pub assignment: Vec<usize>,
    /// Edges of the local tree `T(e_i)` around each matching edge.
    pub subtrees: Vec<Vec<(usize, usize)>>,
    /// Connector `f_i` joining `T(e_i)` to an earlier local tree, `i >= 2`.
    pub connectors: Vec<(usize, usize)>,
    /// `d_G(x, V(M))`.
    pub depth: Vec<u32>,
    /// Index of the matching edge whose ball contains `x`, if any.
    pub owner: Vec<Option<usize>>,
}

fn serialize_edges<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(g.edges().iter())
}

fn violated(msg: String) -> Error {
    Error::ConstructionInvariantViolated(msg)
}

/// Builds the anchored spanning tree for `m`.
///
/// Local trees are BFS trees of the owned balls grown from both endpoints of
/// each matching edge, joined by the smallest connecting edge to an earlier
/// local tree. Remaining vertices are attached in order of their distance to
/// `V(M)`, each to its smallest neighbour one step closer. All invariants are
/// checked afterwards.
pub fn build_tree(g: &Graph, m: &Matching) -> Result<AnchoredTree> {
    let n = g.n();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut tree_edges: Vec<(usize, usize)> = Vec::with_capacity(n.saturating_sub(1));
    let mut subtrees = Vec::with_capacity(m.len());

    for (i, &(a, b)) in m.edges.iter().enumerate() {
        let d = bfs_limited(g, &[a, b], Some(m.ball_radius(i)));
        let mut local = vec![(a, b)];
        for x in 0..n {
            let Some(dx) = d[x] else { continue };
            if let Some(j) = owner[x] {
                return Err(violated(format!(
                    "vertex {x} lies in the balls of e_{} and e_{}",
                    j + 1,
                    i + 1
                )));
            }
            owner[x] = Some(i);
            if dx > 0 {
                let p = *g
                    .neighbors(x)
                    .iter()
                    .find(|&&y| d[y] == Some(dx - 1))
                    .expect("BFS predecessor exists");
                local.push((x.min(p), x.max(p)));
            }
        }
        local.sort_unstable();
        tree_edges.extend_from_slice(&local);
        subtrees.push(local);
    }

    let mut connectors = Vec::new();
    for i in 1..m.len() {
        let f = g
            .edges()
            .iter()
            .copied()
            .find(|&(x, y)| match (owner[x], owner[y]) {
                (Some(a), Some(b)) => (a == i && b < i) || (b == i && a < i),
                _ => false,
            })
            .ok_or_else(|| violated(format!("no edge joins T(e_{}) to an earlier tree", i + 1)))?;
        connectors.push(f);
        tree_edges.push(f);
    }

    let matched = m.vertices();
    let depth: Vec<u32> = bfs_limited(g, &matched, None)
        .into_iter()
        .map(|d| d.expect("connected graph"))
        .collect();
    let mut in_tree: Vec<bool> = owner.iter().map(Option::is_some).collect();
    let mut rest: Vec<usize> = (0..n).filter(|&x| !in_tree[x]).collect();
    rest.sort_by_key(|&x| (depth[x], x));
    for x in rest {
        let p = g
            .neighbors(x)
            .iter()
            .copied()
            .find(|&y| depth[y] + 1 == depth[x] && in_tree[y])
            .ok_or_else(|| violated(format!("vertex {x} has no parent closer to V(M)")))?;
        in_tree[x] = true;
        tree_edges.push((x.min(p), x.max(p)));
    }

    let tree = Graph::new(n, tree_edges)?;
    if tree.m() + 1 != n || !tree.is_connected() {
        return Err(violated(format!(
            "{} edges on {n} vertices do not form a spanning tree",
            tree.m()
        )));
    }

    let assignment = assign_nearest(&tree, m, &matched, &owner);
    let t = AnchoredTree {
        tree,
        assignment,
        subtrees,
        connectors,
        depth,
        owner,
    };
    verify_tree(g, m, &t)?;
    Ok(t)
}

// Nearest matched vertex in the tree, ties to the smaller index. In the
// maxdeg variant vertices of T(e_i) are pinned to an endpoint of e_i.
fn assign_nearest(
    tree: &Graph,
    m: &Matching,
    matched: &[usize],
    owner: &[Option<usize>],
) -> Vec<usize> {
    let n = tree.n();
    let from: Vec<Vec<u32>> = matched
        .iter()
        .map(|&s| bfs_limited(tree, &[s], None).into_iter().map(Option::unwrap).collect())
        .collect();
    let dist_to = |s: usize, x: usize| {
        let k = matched.binary_search(&s).unwrap();
        from[k][x]
    };
    (0..n)
        .map(|x| {
            let pinned = match (m.variant, owner[x]) {
                (Variant::Maxdeg, Some(i)) => {
                    let (a, b) = m.edges[i];
                    vec![a.min(b), a.max(b)]
                }
                _ => matched.to_vec(),
            };
            pinned
                .into_iter()
                .min_by_key(|&s| (dist_to(s, x), s))
                .unwrap()
        })
        .collect()
}

/// Post-hoc checks: spanning, contains the local trees, distance to the
/// assigned matched vertex equals the graph distance to `V(M)`, and that
/// distance is within the variant's radius.
pub fn verify_tree(g: &Graph, m: &Matching, t: &AnchoredTree) -> Result<()> {
    let n = g.n();
    if t.tree.n() != n || t.tree.m() + 1 != n || !t.tree.is_connected() {
        return Err(violated("not a spanning tree".into()));
    }
    if let Some(&(x, y)) = t.tree.edges().iter().find(|&&(x, y)| !g.has_edge(x, y)) {
        return Err(violated(format!("tree edge ({x}, {y}) is not in the graph")));
    }
    for &(a, b) in t.subtrees.iter().flatten().chain(&m.edges) {
        if !t.tree.has_edge(a, b) {
            return Err(violated(format!("tree is missing ({a}, {b})")));
        }
    }
    let limit = match m.variant {
        Variant::Girth6 => 5,
        Variant::Maxdeg => 6,
    };
    let matched = m.vertices();
    let from: Vec<Vec<Option<u32>>> = matched
        .iter()
        .map(|&s| bfs_limited(&t.tree, &[s], None))
        .collect();
    for x in 0..n {
        let s = t.assignment[x];
        let k = matched
            .binary_search(&s)
            .map_err(|_| violated(format!("vertex {x} assigned to unmatched vertex {s}")))?;
        let dt = from[k][x].unwrap();
        let nearest = from.iter().map(|d| d[x].unwrap()).min().unwrap();
        if dt != t.depth[x] || nearest != t.depth[x] {
            return Err(violated(format!(
                "vertex {x}: d_T(x, x_M) = {dt}, d_T(x, V(M)) = {nearest}, d_G(x, V(M)) = {}",
                t.depth[x]
            )));
        }
        if dt > limit {
            return Err(violated(format!("vertex {x} is {dt} > {limit} from V(M)")));
        }
        if m.variant == Variant::Maxdeg {
            if let Some(i) = t.owner[x] {
                let (a, b) = m.edges[i];
                if s != a && s != b {
                    return Err(violated(format!(
                        "vertex {x} of T(e_{}) assigned outside e_{}",
                        i + 1,
                        i + 1
                    )));
                }
            }
        }
    }
    Ok(())
}

//! Girth and short-cycle detection.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::graph::Graph;

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: u32) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u32(*g),
            Girth::Infinite => s.serialize_none(),
        }
    }
}

/// Shortest cycle length via one BFS per root.
///
/// A non-tree edge `xy` seen from root `r` closes a closed walk of length
/// `d(x) + d(y) + 1` through `r`; the global minimum over roots is the girth.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = u32::MAX;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for root in 0..n {
        for &v in &touched {
            dist[v] = u32::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            if 2 * dist[x] + 1 >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == u32::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    if best == u32::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Presence of 3-, 4- and 5-cycles as (not necessarily induced) subgraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CycleScan {
    pub has_c3: bool,
    pub has_c4: bool,
    pub has_c5: bool,
    pub class_girth6: bool,
    pub class_c4c5free: bool,
}

/// Soft limit on the edge count for the exhaustive 5-cycle search.
pub const C5_SCAN_SOFT_LIMIT: usize = 20_000;

fn has_triangle(g: &Graph) -> bool {
    g.edges().iter().any(|&(u, v)| common_count(g.neighbors(u), g.neighbors(v), 1) >= 1)
}

fn has_four_cycle(g: &Graph) -> bool {
    // Two vertices with two common neighbours span a 4-cycle.
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    for x in 0..g.n() {
        let nb = g.neighbors(x);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if seen.insert((a, b), ()).is_some() {
                    return true;
                }
            }
        }
    }
    false
}

fn has_five_cycle(g: &Graph) -> bool {
    // Cycle a-b-c-x-d-a: for every oriented edge (a, b), pick c ~ b and
    // d ~ a, then look for a common neighbour x of c and d outside {a, b}.
    for &(u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            for &c in g.neighbors(b) {
                if c == a {
                    continue;
                }
                for &d in g.neighbors(a) {
                    if d == b || d == c {
                        continue;
                    }
                    if common_excluding(g.neighbors(c), g.neighbors(d), a, b) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

// Number of common entries in two sorted lists, stopping once `cap` is hit.
fn common_count(xs: &[usize], ys: &[usize], cap: usize) -> usize {
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < xs.len() && j < ys.len() && k < cap {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                k += 1;
                i += 1;
                j += 1;
            }
        }
    }
    k
}

fn common_excluding(xs: &[usize], ys: &[usize], a: usize, b: usize) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if xs[i] != a && xs[i] != b {
                    return true;
                }
                i += 1;
                j += 1;
            }
        }
    }
    false
}

/// Classifies a graph by its short cycles.
///
/// Triangles and 4-cycles are found by common-neighbourhood counting; 5-cycles
/// by an exhaustive search that is intended for graphs up to
/// [`C5_SCAN_SOFT_LIMIT`] edges.
pub fn forbidden_cycle_scan(g: &Graph) -> CycleScan {
    let has_c3 = has_triangle(g);
    let has_c4 = has_four_cycle(g);
    let has_c5 = has_five_cycle(g);
    CycleScan {
        has_c3,
        has_c4,
        has_c5,
        class_girth6: !(has_c3 || has_c4 || has_c5),
        class_c4c5free: !(has_c4 || has_c5),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{classic, reiman, ClassicKind};

    fn cycle(n: usize) -> Graph {
        classic(ClassicKind::Cycle, n).unwrap()
    }

    // Girth oracle: shortest u-v path avoiding edge uv, plus one.
    fn girth_by_edge_removal(g: &Graph) -> Girth {
        let mut best = None;
        for &(u, v) in g.edges() {
            let h = g.with_edges(&[], &[(u, v)]).unwrap();
            if let Some(d) = crate::distance::distances_from(&h, &[u]).unwrap().get(v) {
                best = Some(best.map_or(d + 1, |b: u32| b.min(d + 1)));
            }
        }
        best.map_or(Girth::Infinite, Girth::Finite)
    }

    // k-cycle oracle: enumerate simple paths of k vertices closing into a cycle.
    fn has_cycle_brute(g: &Graph, k: usize) -> bool {
        fn extend(g: &Graph, path: &mut Vec<usize>, k: usize) -> bool {
            let last = *path.last().unwrap();
            if path.len() == k {
                return g.has_edge(last, path[0]);
            }
            for &y in g.neighbors(last) {
                if y > path[0] && !path.contains(&y) {
                    path.push(y);
                    if extend(g, path, k) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        (0..g.n()).any(|s| extend(g, &mut vec![s], k))
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(5)), Girth::Finite(5));
        assert_eq!(girth(&classic(ClassicKind::Path, 4).unwrap()), Girth::Infinite);
        assert_eq!(girth(&reiman(2).unwrap().graph), Girth::Finite(6));
        assert_eq!(girth(&classic(ClassicKind::Complete, 4).unwrap()), Girth::Finite(3));
    }

    #[test]
    fn girth_matches_edge_removal_oracle() {
        let graphs = [
            cycle(7),
            reiman(3).unwrap().graph,
            Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 1)]).unwrap(),
            Graph::new(6, [(0, 1), (1, 2), (3, 4)]).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(girth(g), girth_by_edge_removal(g));
        }
    }

    #[test]
    fn scan_examples() {
        let k3 = classic(ClassicKind::Complete, 3).unwrap();
        let s = forbidden_cycle_scan(&k3);
        assert!(s.has_c3 && !s.class_girth6 && s.class_c4c5free);
        let s = forbidden_cycle_scan(&cycle(4));
        assert!(s.has_c4 && !s.class_girth6 && !s.class_c4c5free);
        let s = forbidden_cycle_scan(&cycle(5));
        assert!(!s.has_c3 && !s.has_c4 && s.has_c5);
        let s = forbidden_cycle_scan(&reiman(2).unwrap().graph);
        assert!(!s.has_c3 && !s.has_c4 && !s.has_c5);
        assert!(s.class_girth6 && s.class_c4c5free);
    }

    #[test]
    fn scan_matches_brute_force() {
        let graphs = [
            classic(ClassicKind::Complete, 5).unwrap(),
            classic(ClassicKind::Complete, 4).unwrap(),
            cycle(6),
            // triangle with a pendant path closing a 5-cycle through two triangle vertices
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 5), (5, 2)]).unwrap(),
            Graph::new(7, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 6)]).unwrap(),
            reiman(2).unwrap().graph,
        ];
        for g in &graphs {
            let s = forbidden_cycle_scan(g);
            assert_eq!(s.has_c3, has_cycle_brute(g, 3));
            assert_eq!(s.has_c4, has_cycle_brute(g, 4));
            assert_eq!(s.has_c5, has_cycle_brute(g, 5));
        }
    }
}

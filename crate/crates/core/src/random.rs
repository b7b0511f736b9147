//! Seedable random graph generators for property tests and sweeps.
//!
//! Every generator takes the RNG explicitly; callers seed it.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Uniform random labelled tree on `n` vertices (via a Pruefer sequence).
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    if n == 2 {
        return Graph::new(2, [(0, 1)]).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

/// Random connected graph: a random tree plus each remaining pair with
/// probability `p`, vertices shuffled.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let tree = random_tree(rng, n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u], perm[v]))
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..40 {
            let t = random_tree(&mut rng, n);
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
        }
    }

    #[test]
    fn connected_graphs_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..40 {
            assert!(random_connected_graph(&mut rng, n, 0.1).is_connected());
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let a = random_connected_graph(&mut ChaCha8Rng::seed_from_u64(3), 30, 0.2);
        let b = random_connected_graph(&mut ChaCha8Rng::seed_from_u64(3), 30, 0.2);
        assert_eq!(a, b);
    }
}

//! Brute-force oracles shared by the integration tests. None of them touch
//! the packing solvers they are used to check.

#![allow(dead_code)]

use clique_decomp::colouring::EdgeColouring;
use clique_decomp::graph::{Edge, Graph};
use rand::Rng;

/// Fewest parts in a partition of the coloured edges into single edges and
/// monochromatic triangles, by exhaustive recursion: the first uncovered
/// edge is either a single part or lies in some monochromatic triangle whose
/// other two edges are also uncovered.
pub fn brute_force_phi_triangles(c: &EdgeColouring) -> usize {
    let edges: Vec<Edge> = c.edges().to_vec();
    let mut covered = vec![false; edges.len()];
    let index = |u: usize, v: usize| edges.iter().position(|&e| e == (u.min(v), u.max(v)));
    let mut triangles_through: Vec<Vec<(usize, usize)>> = vec![Vec::new(); edges.len()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        let col = c.colour(u, v).unwrap();
        for w in 0..c.graph().n() {
            if w == u || w == v {
                continue;
            }
            if c.colour(u, w) == Some(col) && c.colour(v, w) == Some(col) {
                triangles_through[i].push((index(u, w).unwrap(), index(v, w).unwrap()));
            }
        }
    }
    fn go(first: usize, covered: &mut [bool], tri: &[Vec<(usize, usize)>]) -> usize {
        let Some(i) = (first..covered.len()).find(|&i| !covered[i]) else { return 0 };
        covered[i] = true;
        let mut best = 1 + go(i + 1, covered, tri);
        for &(a, b) in &tri[i] {
            if !covered[a] && !covered[b] {
                covered[a] = true;
                covered[b] = true;
                best = best.min(1 + go(i + 1, covered, tri));
                covered[a] = false;
                covered[b] = false;
            }
        }
        covered[i] = false;
        best
    }
    go(0, &mut covered, &triangles_through)
}

/// A random graph on `n` vertices with exactly `m` edges and colours drawn
/// uniformly from `1..=k`.
pub fn random_coloured(rng: &mut impl Rng, n: usize, m: usize, k: usize) -> EdgeColouring {
    let mut pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut g = Graph::empty(n).unwrap();
    for _ in 0..m {
        let i = rng.random_range(0..pairs.len());
        let (u, v) = pairs.swap_remove(i);
        g.add_edge(u, v).unwrap();
    }
    let colours = (0..m).map(|_| rng.random_range(1..=k)).collect();
    EdgeColouring::new(g, k, colours).unwrap()
}

/// Same partition oracle for an arbitrary profile: colour `i` may use
/// monochromatic cliques on `sizes[i - 1]` vertices. Cliques are found by
/// trying every vertex subset through the first uncovered edge.
pub fn brute_force_phi(c: &EdgeColouring, sizes: &[usize]) -> usize {
    let n = c.graph().n();
    let edges: Vec<Edge> = c.edges().to_vec();
    let index = |u: usize, v: usize| edges.iter().position(|&e| e == (u.min(v), u.max(v)));
    let mut through: Vec<Vec<Vec<usize>>> = vec![Vec::new(); edges.len()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        let col = c.colour(u, v).unwrap();
        let r = sizes[col - 1];
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != r || mask & (1 << u) == 0 || mask & (1 << v) == 0 {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&w| mask >> w & 1 == 1).collect();
            let mut ids = Vec::new();
            let mut ok = true;
            'pairs: for (a, &x) in vs.iter().enumerate() {
                for &y in &vs[a + 1..] {
                    if c.colour(x, y) != Some(col) {
                        ok = false;
                        break 'pairs;
                    }
                    if (x, y) != (u, v) {
                        ids.push(index(x, y).unwrap());
                    }
                }
            }
            if ok {
                through[i].push(ids);
            }
        }
    }
    fn go(first: usize, covered: &mut [bool], through: &[Vec<Vec<usize>>]) -> usize {
        let Some(i) = (first..covered.len()).find(|&i| !covered[i]) else { return 0 };
        covered[i] = true;
        let mut best = 1 + go(i + 1, covered, through);
        for ids in &through[i] {
            if ids.iter().all(|&j| !covered[j]) {
                ids.iter().for_each(|&j| covered[j] = true);
                best = best.min(1 + go(i + 1, covered, through));
                ids.iter().for_each(|&j| covered[j] = false);
            }
        }
        covered[i] = false;
        best
    }
    let mut covered = vec![false; edges.len()];
    go(0, &mut covered, &through)
}

//! Fixed-size clique enumeration.

use crate::error::{Error, Result};
use crate::graph::{bits, low_bits, pair_count, Edge, Graph};

/// Largest clique list the exact and fractional solvers accept.
pub const MAX_CLIQUES: usize = 50_000;

/// An `r`-clique of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique {
    vertices: Vec<usize>,
}

impl Clique {
    /// Builds a clique from its vertex set; the vertices are sorted and must
    /// be distinct.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("repeated vertex in clique {vertices:?}")));
        }
        Ok(Clique { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn r(&self) -> usize {
        self.vertices.len()
    }

    /// The `C(r,2)` pairs of the clique in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(pair_count(self.r()));
        for (i, &u) in self.vertices.iter().enumerate() {
            for &v in &self.vertices[i + 1..] {
                out.push((u, v));
            }
        }
        out
    }

    /// True when the vertices are pairwise adjacent in `g`.
    pub fn is_clique_of(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.n())
            && self.edges().iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// Every `r`-clique of `g`, each once, in lexicographic order of sorted
/// vertex tuples. `r = 2` yields the edges, `r = 1` the vertices.
pub fn enumerate_cliques(g: &Graph, r: usize) -> Vec<Clique> {
    let mut out = Vec::new();
    for_each_clique(g, r, |set| {
        out.push(Clique { vertices: bits(set).collect() });
        true
    });
    out
}

/// As [`enumerate_cliques`], but fails once more than `cap` cliques exist.
pub fn enumerate_cliques_capped(g: &Graph, r: usize, cap: usize) -> Result<Vec<Clique>> {
    let mut out = Vec::new();
    let finished = for_each_clique(g, r, |set| {
        if out.len() == cap {
            return false;
        }
        out.push(Clique { vertices: bits(set).collect() });
        true
    });
    if finished {
        Ok(out)
    } else {
        Err(Error::TooLarge(format!(
            "graph has more than {cap} cliques of size {r}"
        )))
    }
}

/// Number of `r`-cliques.
pub fn count_cliques(g: &Graph, r: usize) -> usize {
    let mut count = 0;
    for_each_clique(g, r, |_| {
        count += 1;
        true
    });
    count
}

/// True iff `g` has no clique on `r` vertices. Stops at the first one found.
pub fn is_kr_free(g: &Graph, r: usize) -> bool {
    for_each_clique(g, r, |_| false)
}

/// Some `r`-clique of `g`, if one exists.
pub fn find_clique(g: &Graph, r: usize) -> Option<Clique> {
    let mut found = None;
    for_each_clique(g, r, |set| {
        found = Some(Clique { vertices: bits(set).collect() });
        false
    });
    found
}

/// Calls `visit` with the vertex bitset of every `r`-clique in lexicographic
/// order. `visit` returns `false` to stop early; the function returns whether
/// the enumeration ran to completion.
pub fn for_each_clique(g: &Graph, r: usize, mut visit: impl FnMut(u64) -> bool) -> bool {
    if r == 0 {
        return visit(0);
    }
    extend(g, 0, g.vertex_mask(), r, &mut visit)
}

fn extend(g: &Graph, current: u64, candidates: u64, left: usize, visit: &mut impl FnMut(u64) -> bool) -> bool {
    if left == 0 {
        return visit(current);
    }
    let mut cand = candidates;
    while cand.count_ones() as usize >= left {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        // Only vertices after v keep the tuple sorted.
        let next = candidates & g.neighbours(v) & !low_bits(v + 1);
        if next.count_ones() as usize + 1 < left {
            continue;
        }
        if !extend(g, current | 1 << v, next, left - 1, visit) {
            return false;
        }
    }
    true
}

/// The `r`-cliques of a graph together with an edge/clique incidence index.
///
/// Edges are numbered in the host's lexicographic order; only edges lying in
/// at least one clique matter to packings and covers, but all are indexed.
#[derive(Clone, Debug)]
pub struct CliqueSystem {
    pub r: usize,
    pub edges: Vec<Edge>,
    pub cliques: Vec<Clique>,
    /// Edge indices of each clique, ascending.
    pub clique_edges: Vec<Vec<usize>>,
    /// Clique indices through each edge, ascending.
    pub edge_cliques: Vec<Vec<usize>>,
}

impl CliqueSystem {
    pub fn new(g: &Graph, r: usize) -> Result<Self> {
        Self::with_cap(g, r, MAX_CLIQUES)
    }

    pub fn with_cap(g: &Graph, r: usize, cap: usize) -> Result<Self> {
        let cliques = enumerate_cliques_capped(g, r, cap)?;
        let edges = g.edges();
        let n = g.n();
        let mut index = vec![usize::MAX; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            index[u * n + v] = i;
        }
        let mut edge_cliques = vec![Vec::new(); edges.len()];
        let clique_edges: Vec<Vec<usize>> = cliques
            .iter()
            .enumerate()
            .map(|(c, k)| {
                k.edges()
                    .into_iter()
                    .map(|(u, v)| {
                        let e = index[u * n + v];
                        edge_cliques[e].push(c);
                        e
                    })
                    .collect()
            })
            .collect();
        Ok(CliqueSystem { r, edges, cliques, clique_edges, edge_cliques })
    }

    pub fn edges_per_clique(&self) -> usize {
        pair_count(self.r)
    }

    /// Indices of edges lying in at least one clique.
    pub fn active_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| !self.edge_cliques[e].is_empty()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_graph, turan_graph, turan_class_sizes};
    use crate::graph6::parse_graph6;

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    /// Checks every r-subset of vertices directly.
    fn brute_force_cliques(g: &Graph, r: usize) -> Vec<Vec<usize>> {
        let n = g.n();
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != r {
                continue;
            }
            let vs: Vec<usize> = bits(mask).collect();
            let ok = vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if ok {
                out.push(vs);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn examples() {
        assert_eq!(enumerate_cliques(&complete_graph(4).unwrap(), 3).len(), 4);
        assert!(enumerate_cliques(&turan_graph(6, 2).unwrap(), 3).is_empty());
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert!(brute_force_cliques(&petersen, 3).is_empty());
        assert!(enumerate_cliques(&petersen, 3).is_empty());
        assert!(is_kr_free(&turan_graph(10, 5).unwrap(), 6));
        assert!(!is_kr_free(&complete_graph(6).unwrap(), 6));
        let c5 = parse_graph6("Dhc").unwrap();
        assert!(is_kr_free(&c5, 3));
    }

    #[test]
    fn complete_graph_counts() {
        for n in 2..=10 {
            let g = complete_graph(n).unwrap();
            for r in 2..=n {
                assert_eq!(enumerate_cliques(&g, r).len(), binomial(n, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn order_is_lexicographic_and_members_valid() {
        let g = parse_graph6("IheA@GUAo").unwrap();
        let mut h = g.clone();
        for (u, v) in [(0, 2), (0, 3), (2, 3), (1, 3), (5, 6)] {
            let _ = h.add_edge(u, v);
        }
        for r in 2..=4 {
            let got: Vec<Vec<usize>> = enumerate_cliques(&h, r).into_iter().map(|c| c.vertices).collect();
            assert_eq!(got, brute_force_cliques(&h, r));
        }
        for c in enumerate_cliques(&h, 3) {
            assert!(c.is_clique_of(&h));
            assert_eq!(c.edges().len(), 3);
        }
    }

    #[test]
    fn turan_clique_counts() {
        for n in 0..=12 {
            for p in 1..=5 {
                let g = turan_graph(n, p).unwrap();
                assert!(is_kr_free(&g, p + 1));
                let expected: usize = turan_class_sizes(n, p).unwrap().iter().product();
                assert_eq!(count_cliques(&g, p), expected, "n={n} p={p}");
                if n <= 10 {
                    assert_eq!(brute_force_cliques(&g, p).len(), expected);
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = complete_graph(10).unwrap();
        assert!(enumerate_cliques_capped(&g, 3, 120).is_ok());
        assert!(matches!(enumerate_cliques_capped(&g, 3, 119), Err(Error::TooLarge(_))));
    }

    #[test]
    fn system_incidence() {
        let sys = CliqueSystem::new(&complete_graph(4).unwrap(), 3).unwrap();
        assert_eq!(sys.cliques.len(), 4);
        assert!(sys.edge_cliques.iter().all(|c| c.len() == 2));
        assert_eq!(sys.clique_edges[0], vec![0, 1, 3]);
    }
}

//! Simple undirected graphs on at most [`MAX_VERTICES`] labelled vertices.
//!
//! Adjacency is stored as one `u64` neighbour bitset per vertex, so every
//! set operation on neighbourhoods (common neighbours, clique extension) is a
//! single word operation. Edges are always reported in lexicographic order
//! `(u, v)` with `u < v`; every module that indexes edges relies on that order.

use std::fmt;

use crate::error::{Error, Result};

/// Soft cap on the vertex count. Larger inputs are rejected, never truncated.
pub const MAX_VERTICES: usize = 64;

/// An edge `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{n} vertices exceeds the cap of {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the set bits of `mask`, bit `i`
    /// standing for the `i`-th pair in lexicographic order.
    ///
    /// Used to walk all labelled graphs on `n` vertices.
    pub fn from_edge_mask(n: usize, mask: u128) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let pairs = pair_count(n);
        if pairs < 128 && mask >> pairs != 0 {
            return Err(Error::InvalidInput(format!(
                "edge mask has bits beyond the {pairs} pairs of {n} vertices"
            )));
        }
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                if idx < 128 && mask >> idx & 1 == 1 {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitset of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidInput(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbour bitset of `v`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !low_bits(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// True when every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == pair_count(self.n)
    }

    /// Copy of the graph with the given edges deleted. Pairs that are not
    /// edges are ignored.
    pub fn without_edges<'a, I>(&self, edges: I) -> Graph
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for &(u, v) in edges {
            if u < self.n && v < self.n && u != v {
                g.adj[u] &= !(1 << v);
                g.adj[v] &= !(1 << u);
            }
        }
        g
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Checks the structural invariants: symmetric adjacency, no loops and no
    /// bits beyond the vertex count.
    pub fn check_invariants(&self) -> Result<()> {
        let mask = self.vertex_mask();
        for u in 0..self.n {
            if self.adj[u] & !mask != 0 {
                return Err(Error::Internal(format!("vertex {u} has out-of-range neighbours")));
            }
            if self.adj[u] >> u & 1 == 1 {
                return Err(Error::Internal(format!("loop at vertex {u}")));
            }
            let mut nb = self.adj[u];
            while nb != 0 {
                let v = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if self.adj[v] >> u & 1 == 0 {
                    return Err(Error::Internal(format!("asymmetric adjacency {u}-{v}")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// `C(n, 2)`.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `(u, v)`, `u < v`, in the lexicographic order of all
/// pairs of `n` vertices.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

#[inline]
pub(crate) const fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterates over the members of a vertex bitset in increasing order.
pub fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Every labelled graph on `n` vertices, in edge-mask order.
///
/// There are `2^C(n,2)` of them, so this only makes sense for `n <= 7` or so;
/// `n` above 11 is rejected because the mask would not fit.
pub fn labelled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    let pairs = pair_count(n);
    if pairs > 64 {
        return Err(Error::TooLarge(format!(
            "cannot enumerate labelled graphs on {n} vertices"
        )));
    }
    let total: u128 = 1u128 << pairs;
    Ok((0..total).map(move |mask| Graph::from_edge_mask(n, mask).expect("mask in range")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_matches_edge_order() {
        for n in 0..9 {
            let g = Graph::from_edge_mask(n, (1u128 << pair_count(n)) - 1).unwrap();
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                assert_eq!(pair_index(n, u, v), i);
            }
        }
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        let mut g = Graph::empty(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let degrees: usize = (0..5).map(|v| g.degree(v)).sum();
        assert_eq!(degrees, 2 * g.edge_count());
        g.check_invariants().unwrap();
    }

    #[test]
    fn labelled_graph_count() {
        assert_eq!(labelled_graphs(4).unwrap().count(), 64);
        assert!(labelled_graphs(12).is_err());
    }

    #[test]
    fn without_edges_ignores_non_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let h = g.without_edges(&[(0, 1), (0, 2)]);
        assert_eq!(h.edges(), vec![(1, 2)]);
    }
}

//! Exact `K_r`-packings and `K_r`-covers by branch and bound, plus the greedy
//! cover made of a maximal packing's edges.

use serde::{Deserialize, Serialize};

use crate::cliques::{is_kr_free, Clique, CliqueSystem};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Search-node limit for the exact solvers.
pub const MAX_SEARCH_NODES: u64 = 50_000_000;

/// Pairwise edge-disjoint `r`-cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub r: usize,
    pub members: Vec<Clique>,
}

impl Packing {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Checks that every member is an `r`-clique of `g` and that no edge is
    /// used twice.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let mut used = Graph::empty(g.n())?;
        for c in &self.members {
            if c.r() != self.r || !c.is_clique_of(g) {
                return Err(Error::InvalidInput(format!(
                    "{:?} is not a {}-clique of the graph",
                    c.vertices(),
                    self.r
                )));
            }
            for (u, v) in c.edges() {
                if used.has_edge(u, v) {
                    return Err(Error::InvalidInput(format!("edge ({u}, {v}) used by two members")));
                }
                used.add_edge(u, v)?;
            }
        }
        Ok(())
    }
}

/// An edge set meeting every `r`-clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub r: usize,
    pub edges: Vec<Edge>,
}

impl Cover {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Checks that the edges belong to `g`, are distinct, and that deleting
    /// them leaves no `r`-clique.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let mut seen = Graph::empty(g.n())?;
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidInput(format!("({u}, {v}) is not an edge")));
            }
            if seen.has_edge(u, v) {
                return Err(Error::InvalidInput(format!("edge ({u}, {v}) listed twice")));
            }
            seen.add_edge(u, v)?;
        }
        if !is_kr_free(&g.without_edges(&self.edges), self.r) {
            return Err(Error::InvalidInput(format!(
                "deleting the cover leaves a {}-clique",
                self.r
            )));
        }
        Ok(())
    }
}

fn check_r(r: usize) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidInput(format!("clique size {r} must be at least 3")));
    }
    Ok(())
}

/// Maximal packing built by scanning the cliques in lexicographic order and
/// keeping each one that is edge-disjoint from those kept so far.
pub fn greedy_packing(sys: &CliqueSystem) -> Vec<usize> {
    let mut used = vec![false; sys.edges.len()];
    let mut chosen = Vec::new();
    for (c, edges) in sys.clique_edges.iter().enumerate() {
        if edges.iter().all(|&e| !used[e]) {
            edges.iter().for_each(|&e| used[e] = true);
            chosen.push(c);
        }
    }
    chosen
}

/// Maximum packing, i.e. one of size `nu_r(g)`.
pub fn max_packing_exact(g: &Graph, r: usize) -> Result<Packing> {
    Ok(max_packing_exact_with_stats(g, r)?.0)
}

/// As [`max_packing_exact`], also returning the number of search nodes.
pub fn max_packing_exact_with_stats(g: &Graph, r: usize) -> Result<(Packing, u64)> {
    check_r(r)?;
    let sys = CliqueSystem::new(g, r)?;
    let (chosen, nodes) = max_packing_indices(&sys)?;
    let members = chosen.into_iter().map(|c| sys.cliques[c].clone()).collect();
    Ok((Packing { r, members }, nodes))
}

/// Include/exclude branch and bound over the clique list. Returns clique
/// indices of a maximum packing.
pub fn max_packing_indices(sys: &CliqueSystem) -> Result<(Vec<usize>, u64)> {
    let mut search = PackingSearch {
        sys,
        per_clique: sys.edges_per_clique(),
        used: vec![false; sys.edges.len()],
        stamp: vec![0; sys.edges.len()],
        epoch: 0,
        current: Vec::new(),
        best: greedy_packing(sys),
        nodes: 0,
    };
    search.run(0)?;
    let nodes = search.nodes;
    Ok((search.best, nodes))
}

struct PackingSearch<'a> {
    sys: &'a CliqueSystem,
    per_clique: usize,
    used: Vec<bool>,
    stamp: Vec<u32>,
    epoch: u32,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
}

impl PackingSearch<'_> {
    fn available(&self, c: usize) -> bool {
        self.sys.clique_edges[c].iter().all(|&e| !self.used[e])
    }

    /// Cliques from `from` on that are still available, and the number of
    /// distinct edges they span, bound how many more can be packed.
    fn bound(&mut self, from: usize) -> usize {
        self.epoch += 1;
        let (mut count, mut distinct) = (0, 0);
        for c in from..self.sys.cliques.len() {
            if !self.available(c) {
                continue;
            }
            count += 1;
            for &e in &self.sys.clique_edges[c] {
                if self.stamp[e] != self.epoch {
                    self.stamp[e] = self.epoch;
                    distinct += 1;
                }
            }
        }
        count.min(distinct / self.per_clique)
    }

    fn run(&mut self, from: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > MAX_SEARCH_NODES {
            return Err(Error::Budget(format!(
                "packing search exceeded {MAX_SEARCH_NODES} nodes"
            )));
        }
        let Some(c) = (from..self.sys.cliques.len()).find(|&c| self.available(c)) else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        };
        if self.current.len() + self.bound(c) <= self.best.len() {
            return Ok(());
        }
        for &e in &self.sys.clique_edges[c] {
            self.used[e] = true;
        }
        self.current.push(c);
        self.run(c + 1)?;
        self.current.pop();
        for &e in &self.sys.clique_edges[c] {
            self.used[e] = false;
        }
        self.run(c + 1)
    }
}

/// Minimum cover, i.e. one of size `tau_r(g)`.
pub fn min_cover_exact(g: &Graph, r: usize) -> Result<Cover> {
    Ok(min_cover_exact_with_stats(g, r)?.0)
}

pub fn min_cover_exact_with_stats(g: &Graph, r: usize) -> Result<(Cover, u64)> {
    check_r(r)?;
    let sys = CliqueSystem::new(g, r)?;
    let (chosen, nodes) = min_cover_indices(&sys)?;
    let edges = chosen.into_iter().map(|e| sys.edges[e]).collect();
    Ok((Cover { r, edges }, nodes))
}

/// Hitting-set branch and bound on the edges that lie in some clique.
///
/// At each node the unhit clique with the fewest undecided edges is chosen
/// and the search branches on which of its edges is the first one taken
/// (earlier ones excluded). The lower bound is a greedy set of unhit cliques
/// that pairwise share no undecided edge. Returns sorted edge indices.
pub fn min_cover_indices(sys: &CliqueSystem) -> Result<(Vec<usize>, u64)> {
    let initial = greedy_hitting_set(sys);
    let mut search = CoverSearch {
        sys,
        state: vec![EdgeState::Open; sys.edges.len()],
        hits: vec![0; sys.cliques.len()],
        chosen: Vec::new(),
        best: initial,
        stamp: vec![0; sys.edges.len()],
        epoch: 0,
        nodes: 0,
    };
    search.run()?;
    let nodes = search.nodes;
    let mut best = search.best;
    best.sort_unstable();
    Ok((best, nodes))
}

/// Repeatedly takes the edge lying in the most unhit cliques (lowest index
/// on ties).
fn greedy_hitting_set(sys: &CliqueSystem) -> Vec<usize> {
    let mut hit = vec![false; sys.cliques.len()];
    let mut chosen = Vec::new();
    loop {
        let best = (0..sys.edges.len())
            .map(|e| (sys.edge_cliques[e].iter().filter(|&&c| !hit[c]).count(), e))
            .filter(|&(count, _)| count > 0)
            .max_by_key(|&(count, e)| (count, std::cmp::Reverse(e)));
        let Some((_, e)) = best else { break };
        chosen.push(e);
        for &c in &sys.edge_cliques[e] {
            hit[c] = true;
        }
    }
    chosen
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Open,
    Taken,
    Excluded,
}

struct CoverSearch<'a> {
    sys: &'a CliqueSystem,
    state: Vec<EdgeState>,
    /// Number of taken edges in each clique.
    hits: Vec<u32>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
    nodes: u64,
}

impl CoverSearch<'_> {
    fn take(&mut self, e: usize) {
        self.state[e] = EdgeState::Taken;
        self.chosen.push(e);
        for &c in &self.sys.edge_cliques[e] {
            self.hits[c] += 1;
        }
    }

    fn untake(&mut self, e: usize) {
        self.state[e] = EdgeState::Open;
        self.chosen.pop();
        for &c in &self.sys.edge_cliques[e] {
            self.hits[c] -= 1;
        }
    }

    fn run(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > MAX_SEARCH_NODES {
            return Err(Error::Budget(format!(
                "cover search exceeded {MAX_SEARCH_NODES} nodes"
            )));
        }

        // Pick the most constrained unhit clique; build the lower bound.
        self.epoch += 1;
        let mut branch: Option<(usize, usize)> = None;
        let mut lower = 0;
        for c in 0..self.sys.cliques.len() {
            if self.hits[c] > 0 {
                continue;
            }
            let edges = &self.sys.clique_edges[c];
            let open = edges.iter().filter(|&&e| self.state[e] == EdgeState::Open).count();
            if open == 0 {
                return Ok(());
            }
            if branch.is_none_or(|(_, best_open)| open < best_open) {
                branch = Some((c, open));
            }
            let disjoint = edges
                .iter()
                .all(|&e| self.state[e] != EdgeState::Open || self.stamp[e] != self.epoch);
            if disjoint {
                lower += 1;
                for &e in edges {
                    self.stamp[e] = self.epoch;
                }
            }
        }
        let Some((c, _)) = branch else {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        };
        if self.chosen.len() + lower >= self.best.len() {
            return Ok(());
        }

        let open: Vec<usize> = self.sys.clique_edges[c]
            .iter()
            .copied()
            .filter(|&e| self.state[e] == EdgeState::Open)
            .collect();
        for (i, &e) in open.iter().enumerate() {
            self.take(e);
            let result = self.run();
            self.untake(e);
            result?;
            self.state[e] = EdgeState::Excluded;
            if i + 1 == open.len() {
                break;
            }
        }
        for &e in &open {
            self.state[e] = EdgeState::Open;
        }
        Ok(())
    }
}

/// Union of the edges of a greedy maximal packing. Every `r`-clique shares
/// an edge with some member (otherwise the packing was not maximal), so this
/// is a cover of size at most `C(r,2) nu_r(g)`.
pub fn packing_edges_cover(g: &Graph, r: usize) -> Result<Cover> {
    check_r(r)?;
    let sys = CliqueSystem::new(g, r)?;
    let mut edges: Vec<Edge> = greedy_packing(&sys)
        .into_iter()
        .flat_map(|c| sys.clique_edges[c].iter().map(|&e| sys.edges[e]))
        .collect();
    edges.sort_unstable();
    Ok(Cover { r, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_graph, turan_graph};

    /// Largest set of pairwise edge-disjoint cliques, by trying every subset.
    fn brute_force_packing(g: &Graph, r: usize) -> usize {
        let sys = CliqueSystem::new(g, r).unwrap();
        let m = sys.cliques.len();
        assert!(m <= 22);
        (0u32..1 << m)
            .filter(|mask| {
                let mut used = vec![false; sys.edges.len()];
                (0..m).filter(|c| mask >> c & 1 == 1).all(|c| {
                    sys.clique_edges[c].iter().all(|&e| !std::mem::replace(&mut used[e], true))
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Smallest edge set hitting every clique, by trying every edge subset.
    fn brute_force_cover(g: &Graph, r: usize) -> usize {
        let edges = g.edges();
        assert!(edges.len() <= 20);
        (0u32..1 << edges.len())
            .filter(|mask| {
                let removed: Vec<Edge> =
                    (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                is_kr_free(&g.without_edges(&removed), r)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn packing_examples() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(max_packing_exact(&k4, 3).unwrap().size(), 1);
        // 20 triangles in K_6: brute force over all 2^20 subsets.
        let k6 = complete_graph(6).unwrap();
        assert_eq!(brute_force_packing(&k6, 3), 4);
        let p = max_packing_exact(&k6, 3).unwrap();
        assert_eq!(p.size(), 4);
        p.verify(&k6).unwrap();
        let k7 = complete_graph(7).unwrap();
        let p = max_packing_exact(&k7, 3).unwrap();
        assert_eq!(p.size(), 7);
        p.verify(&k7).unwrap();
    }

    #[test]
    fn cover_examples() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(brute_force_cover(&k4, 3), 2);
        let c = min_cover_exact(&k4, 3).unwrap();
        assert_eq!(c.size(), 2);
        c.verify(&k4).unwrap();
        assert_eq!(min_cover_exact(&complete_graph(3).unwrap(), 3).unwrap().size(), 1);
        assert_eq!(min_cover_exact(&turan_graph(6, 2).unwrap(), 3).unwrap().size(), 0);
    }

    #[test]
    fn exact_solvers_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.random_range(4..=7);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.6) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            if g.edge_count() > 20 {
                continue;
            }
            for r in [3, 4] {
                if CliqueSystem::new(&g, r).unwrap().cliques.len() <= 22 {
                    assert_eq!(max_packing_exact(&g, r).unwrap().size(), brute_force_packing(&g, r));
                }
                let cover = min_cover_exact(&g, r).unwrap();
                cover.verify(&g).unwrap();
                assert_eq!(cover.size(), brute_force_cover(&g, r), "{g:?} r={r}");
            }
        }
    }

    #[test]
    fn greedy_cover_examples() {
        assert!(packing_edges_cover(&turan_graph(6, 2).unwrap(), 3).unwrap().edges.is_empty());
        let k4 = complete_graph(4).unwrap();
        let c = packing_edges_cover(&k4, 3).unwrap();
        assert_eq!(c.edges, vec![(0, 1), (0, 2), (1, 2)]);
        c.verify(&k4).unwrap();
        let k6 = complete_graph(6).unwrap();
        let c = packing_edges_cover(&k6, 3).unwrap();
        assert!(c.size() <= 12);
        c.verify(&k6).unwrap();
    }

    #[test]
    fn verification_rejects_bad_certificates() {
        let k4 = complete_graph(4).unwrap();
        let bad = Packing {
            r: 3,
            members: vec![Clique::new(vec![0, 1, 2]).unwrap(), Clique::new(vec![0, 1, 3]).unwrap()],
        };
        assert!(bad.verify(&k4).is_err());
        let bad = Cover { r: 3, edges: vec![(0, 1)] };
        assert!(bad.verify(&k4).is_err());
        let dup = Cover { r: 3, edges: vec![(0, 1), (0, 1), (2, 3)] };
        assert!(dup.verify(&k4).is_err());
        assert!(max_packing_exact(&k4, 2).is_err());
    }
}

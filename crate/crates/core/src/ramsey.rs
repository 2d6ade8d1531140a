//! Ramsey numbers: the tabulated small values, verification that a colouring
//! of `K_s` avoids the monochromatic cliques of a profile, and exhaustive
//! backtracking for avoiding colourings.

use crate::cliques::{find_clique, Clique};
use crate::colouring::{CliqueProfile, EdgeColouring};
use crate::construct::complete_graph;
use crate::error::{Error, Result};
use crate::graph::{bits, low_bits, pair_count, pair_index, Graph};

/// Known exact values `R(r_1, ..., r_k)`, profiles sorted ascending.
const KNOWN: &[(&[usize], u64)] = &[
    (&[3, 3], 6),
    (&[3, 4], 9),
    (&[3, 5], 14),
    (&[3, 6], 18),
    (&[3, 7], 23),
    (&[3, 8], 28),
    (&[3, 9], 36),
    (&[4, 4], 18),
    (&[4, 5], 25),
    (&[3, 3, 3], 17),
];

/// The tabulated Ramsey number of a profile, in any order of its entries.
pub fn ramsey_known(profile: &[usize]) -> Option<u64> {
    let mut key = profile.to_vec();
    key.sort_unstable();
    KNOWN.iter().find(|(p, _)| *p == key.as_slice()).map(|&(_, r)| r)
}

/// All tabulated entries.
pub fn ramsey_table() -> impl Iterator<Item = (&'static [usize], u64)> {
    KNOWN.iter().copied()
}

/// A monochromatic clique of colour `colour` on `profile[colour - 1]` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub colour: usize,
    pub clique: Clique,
}

/// Checks that colour class `i` of a colouring of a complete graph contains
/// no `K_{r_i}`. Returns the first violation found, colour by colour.
pub fn verify_colouring_avoids(c: &EdgeColouring, profile: &CliqueProfile) -> Result<Option<Violation>> {
    if !c.graph().is_complete() {
        return Err(Error::InvalidInput("Ramsey colourings must be of a complete graph".into()));
    }
    if c.k() != profile.k() {
        return Err(Error::InvalidInput(format!(
            "colouring uses {} colours but the profile has {}",
            c.k(),
            profile.k()
        )));
    }
    for (i, class) in c.colour_classes().iter().enumerate() {
        if let Some(clique) = find_clique(class, profile.size_for(i + 1)) {
            return Ok(Some(Violation { colour: i + 1, clique }));
        }
    }
    Ok(None)
}

/// The 2-colouring of `K_5` with colour 1 on the cycle `0-1-2-3-4-0` and
/// colour 2 on the complementary pentagram.
pub fn c5_base_colouring() -> EdgeColouring {
    let k5 = complete_graph(5).expect("5 vertices");
    EdgeColouring::from_fn(k5, 2, |u, v| if matches!(v - u, 1 | 4) { 1 } else { 2 })
        .expect("two colours")
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of edge-colour assignments tried before giving up.
    pub node_budget: u64,
    /// Try, for each edge, the colour currently least used at its lower
    /// endpoint first. Changes which witness is found (the first one is then
    /// no longer lexicographically least) but never whether one exists.
    pub degree_ordering: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { node_budget: 200_000_000, degree_ordering: false }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

/// Backtracking search for a `k`-colouring of `K_s` with no colour-`i`
/// `K_{r_i}`. Edges are coloured in lexicographic order, colours tried in
/// increasing order, so the first witness is the lexicographically least
/// colour vector. After each assignment the uncoloured edges at its
/// endpoints are forward-checked for a remaining colour. `None` certifies
/// that no avoiding colouring exists.
pub fn ramsey_witness_search(profile: &CliqueProfile, s: usize) -> Result<Option<EdgeColouring>> {
    Ok(ramsey_witness_search_with(profile, s, &SearchOptions::default())?.0)
}

pub fn ramsey_witness_search_with(
    profile: &CliqueProfile,
    s: usize,
    options: &SearchOptions,
) -> Result<(Option<EdgeColouring>, SearchStats)> {
    let mut found = None;
    let stats = search(profile, s, options, |colouring| {
        found = Some(colouring);
        false
    })?;
    Ok((found, stats))
}

/// Every avoiding colouring of `K_s`, in lexicographic order, up to `limit`.
pub fn all_ramsey_witnesses(profile: &CliqueProfile, s: usize, limit: usize) -> Result<Vec<EdgeColouring>> {
    let mut out = Vec::new();
    search(profile, s, &SearchOptions::default(), |colouring| {
        out.push(colouring);
        out.len() < limit
    })?;
    Ok(out)
}

struct Search<'a> {
    n: usize,
    sizes: &'a [usize],
    edges: Vec<(usize, usize)>,
    /// `adj[colour][v]`: neighbours of `v` in that colour so far.
    adj: Vec<Vec<u64>>,
    colours: Vec<usize>,
    nodes: u64,
    budget: u64,
    degree_ordering: bool,
}

impl Search<'_> {
    /// True when colouring `uv` with `colour` completes a monochromatic
    /// clique of the forbidden size through `uv`.
    fn closes_clique(&self, u: usize, v: usize, colour: usize) -> bool {
        let r = self.sizes[colour];
        let adj = &self.adj[colour];
        let common = adj[u] & adj[v];
        has_clique_within(adj, common, r - 2)
    }

    /// Forward check after colouring edge `depth`: every later edge at `u`
    /// or `v` must still admit some colour. Pruning only, so witnesses are
    /// still produced in lexicographic order.
    fn later_edges_colourable(&self, depth: usize, u: usize, v: usize) -> bool {
        let n = self.n;
        let k = self.sizes.len();
        for a in [u, v] {
            for w in 0..n {
                if w == u || w == v {
                    continue;
                }
                let (x, y) = (a.min(w), a.max(w));
                if pair_index(n, x, y) > depth && (0..k).all(|c| self.closes_clique(x, y, c)) {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize, emit: &mut dyn FnMut(&[usize]) -> bool) -> Result<bool> {
        if depth == self.edges.len() {
            return Ok(emit(&self.colours));
        }
        let (u, v) = self.edges[depth];
        let k = self.sizes.len();
        let mut order: Vec<usize> = (0..k).collect();
        if self.degree_ordering {
            order.sort_by_key(|&c| (self.adj[c][u].count_ones(), c));
        }
        for colour in order {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Budget(format!(
                    "Ramsey search exceeded {} nodes",
                    self.budget
                )));
            }
            if self.closes_clique(u, v, colour) {
                continue;
            }
            self.adj[colour][u] |= 1 << v;
            self.adj[colour][v] |= 1 << u;
            self.colours[depth] = colour + 1;
            let keep_going = if self.later_edges_colourable(depth, u, v) { self.run(depth + 1, emit)? } else { true };
            self.adj[colour][u] &= !(1 << v);
            self.adj[colour][v] &= !(1 << u);
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// True if the vertices in `within` contain a clique of size `need` in the
/// graph given by `adj`.
fn has_clique_within(adj: &[u64], within: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (within.count_ones() as usize) < need {
        return false;
    }
    for v in bits(within) {
        let rest = within & adj[v] & !low_bits(v + 1);
        if has_clique_within(adj, rest, need - 1) {
            return true;
        }
    }
    false
}

fn search(
    profile: &CliqueProfile,
    s: usize,
    options: &SearchOptions,
    mut on_witness: impl FnMut(EdgeColouring) -> bool,
) -> Result<SearchStats> {
    let ks = complete_graph(s)?;
    let mut state = Search {
        n: s,
        sizes: profile.sizes(),
        edges: ks.edges(),
        adj: vec![vec![0; s]; profile.k()],
        colours: vec![0; pair_count(s)],
        nodes: 0,
        budget: options.node_budget,
        degree_ordering: options.degree_ordering,
    };
    let mut emit = |colours: &[usize]| {
        let c = EdgeColouring::new(ks.clone(), profile.k(), colours.to_vec()).expect("valid colours");
        on_witness(c)
    };
    state.run(0, &mut emit)?;
    Ok(SearchStats { nodes: state.nodes })
}

/// True if `g` is a single cycle through all of its `n >= 3` vertices.
pub fn is_hamiltonian_cycle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || g.edge_count() != n || (0..n).any(|v| g.degree(v) != 2) {
        return false;
    }
    let (mut prev, mut cur, mut seen) = (0usize, bits(g.neighbours(0)).next().unwrap(), 1usize);
    while cur != 0 {
        let next = bits(g.neighbours(cur) & !(1 << prev)).next().unwrap();
        prev = cur;
        cur = next;
        seen += 1;
    }
    seen == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::blow_up;

    fn profile(s: &[usize]) -> CliqueProfile {
        CliqueProfile::new(s.to_vec()).unwrap()
    }

    #[test]
    fn table_values() {
        assert_eq!(ramsey_known(&[3, 3]), Some(6));
        assert_eq!(ramsey_known(&[3, 3, 3]), Some(17));
        assert_eq!(ramsey_known(&[5, 5]), None);
        assert_eq!(ramsey_known(&[4, 3]), ramsey_known(&[3, 4]));
        assert_eq!(ramsey_known(&[5, 4]), Some(25));
        let r3: Vec<u64> = (3..=9).map(|r| ramsey_known(&[3, r]).unwrap()).collect();
        assert_eq!(r3, vec![6, 9, 14, 18, 23, 28, 36]);
        assert_eq!(ramsey_table().count(), 10);
    }

    #[test]
    fn c5_colouring_is_avoiding() {
        let c = c5_base_colouring();
        assert_eq!(verify_colouring_avoids(&c, &profile(&[3, 3])).unwrap(), None);
        for i in 1..=2 {
            let class = c.colour_class(i).unwrap();
            assert_eq!(class.edge_count(), 5);
            assert!(is_hamiltonian_cycle(&class));
        }
        let b = blow_up(&c, &[2; 5]).unwrap();
        for i in 1..=2 {
            assert!(crate::cliques::is_kr_free(&b.colour_class(i).unwrap(), 3));
        }
    }

    #[test]
    fn violations_and_guards() {
        let k6 = EdgeColouring::uniform(complete_graph(6).unwrap(), 2, 1).unwrap();
        let v = verify_colouring_avoids(&k6, &profile(&[3, 3])).unwrap().unwrap();
        assert_eq!(v.colour, 1);
        assert_eq!(v.clique.vertices(), &[0, 1, 2]);

        let b = blow_up(&c5_base_colouring(), &[2; 5]).unwrap();
        assert!(verify_colouring_avoids(&b, &profile(&[3, 3])).is_err());
        assert!(verify_colouring_avoids(&c5_base_colouring(), &profile(&[3, 3, 3])).is_err());
    }

    #[test]
    fn search_matches_r33() {
        let p = profile(&[3, 3]);
        let w = ramsey_witness_search(&p, 5).unwrap().unwrap();
        assert_eq!(verify_colouring_avoids(&w, &p).unwrap(), None);
        assert!(ramsey_witness_search(&p, 6).unwrap().is_none());

        let all = all_ramsey_witnesses(&p, 5, usize::MAX).unwrap();
        // 12 labelled 5-cycles on 5 vertices, each with its complement.
        assert_eq!(all.len(), 12);
        assert_eq!(all[0], w);
        for c in &all {
            assert!(is_hamiltonian_cycle(&c.colour_class(1).unwrap()));
            assert!(is_hamiltonian_cycle(&c.colour_class(2).unwrap()));
        }
    }

    #[test]
    fn degree_ordering_keeps_the_answer() {
        let p = profile(&[3, 3]);
        let opts = SearchOptions { degree_ordering: true, ..Default::default() };
        for s in 3..=6 {
            let plain = ramsey_witness_search(&p, s).unwrap().is_some();
            let (w, _) = ramsey_witness_search_with(&p, s, &opts).unwrap();
            assert_eq!(plain, w.is_some(), "s={s}");
            if let Some(w) = w {
                assert_eq!(verify_colouring_avoids(&w, &p).unwrap(), None);
            }
        }
    }

    #[test]
    fn three_colours_and_budget() {
        let p = profile(&[3, 3, 3]);
        let w = ramsey_witness_search(&p, 5).unwrap().unwrap();
        assert_eq!(verify_colouring_avoids(&w, &p).unwrap(), None);
        let tiny = SearchOptions { node_budget: 3, ..Default::default() };
        assert!(matches!(
            ramsey_witness_search_with(&profile(&[3, 3]), 6, &tiny),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn hamiltonian_cycle_check() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert!(is_hamiltonian_cycle(&c5));
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_hamiltonian_cycle(&two_triangles));
    }
}

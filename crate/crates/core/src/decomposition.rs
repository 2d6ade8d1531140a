//! Clique decompositions of graphs and of edge-coloured graphs.
//!
//! A decomposition partitions the edges into single edges and cliques. For a
//! single graph and clique size `r`, the fewest parts is
//! `e(G) - nu_r(G) (C(r,2) - 1)`: each clique part replaces `C(r,2)` single
//! edges. Colour classes are edge-disjoint, so for a colouring the same
//! count is taken class by class with `r_i` for colour `i`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cliques::Clique;
use crate::colouring::{CliqueProfile, EdgeColouring};
use crate::error::{Error, Result};
use crate::graph::{pair_count, Edge, Graph};
use crate::packing::max_packing_exact;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Edge(Edge),
    Clique { colour: usize, vertices: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Decomposition {
    pub parts: Vec<Part>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Checks that the parts partition the coloured edges exactly and that
    /// every clique part is a monochromatic `K_{r_i}` in its colour `i`.
    pub fn verify(&self, c: &EdgeColouring, profile: &CliqueProfile) -> Result<()> {
        if c.k() != profile.k() {
            return Err(Error::InvalidInput(format!(
                "colouring has {} colours, profile has {}",
                c.k(),
                profile.k()
            )));
        }
        let g = c.graph();
        let mut covered = Graph::empty(g.n())?;
        let mut claim = |(u, v): Edge| -> Result<()> {
            if !g.has_edge(u, v) {
                return Err(Error::InvalidInput(format!("({u}, {v}) is not an edge")));
            }
            if covered.has_edge(u, v) {
                return Err(Error::InvalidInput(format!("edge ({u}, {v}) lies in two parts")));
            }
            covered.add_edge(u, v)
        };
        for part in &self.parts {
            match part {
                Part::Edge((u, v)) => claim((*u.min(v), *u.max(v)))?,
                Part::Clique { colour, vertices } => {
                    if *colour == 0 || *colour > c.k() {
                        return Err(Error::InvalidInput(format!("colour {colour} out of range")));
                    }
                    let clique = Clique::new(vertices.clone())?;
                    if clique.r() != profile.size_for(*colour) {
                        return Err(Error::InvalidInput(format!(
                            "clique {vertices:?} has {} vertices, colour {colour} needs {}",
                            clique.r(),
                            profile.size_for(*colour)
                        )));
                    }
                    for (u, v) in clique.edges() {
                        if c.colour(u, v) != Some(*colour) {
                            return Err(Error::InvalidInput(format!(
                                "clique {vertices:?} is not monochromatic in colour {colour}"
                            )));
                        }
                        claim((u, v))?;
                    }
                }
            }
        }
        if covered.edge_count() != g.edge_count() {
            return Err(Error::InvalidInput(format!(
                "parts cover {} of {} edges",
                covered.edge_count(),
                g.edge_count()
            )));
        }
        Ok(())
    }
}

/// Fewest parts in a decomposition of `g` into edges and `K_r`'s, with a
/// witness built from a maximum packing.
pub fn phi_single(g: &Graph, r: usize) -> Result<(usize, Decomposition)> {
    let packing = max_packing_exact(g, r)?;
    let count = g.edge_count() - packing.size() * (pair_count(r) - 1);
    let mut in_clique = Graph::empty(g.n())?;
    let mut parts = Vec::with_capacity(count);
    for c in &packing.members {
        for (u, v) in c.edges() {
            in_clique.add_edge(u, v)?;
        }
        parts.push(Part::Clique { colour: 1, vertices: c.vertices().to_vec() });
    }
    parts.extend(
        g.edges()
            .into_iter()
            .filter(|&(u, v)| !in_clique.has_edge(u, v))
            .map(Part::Edge),
    );
    debug_assert_eq!(parts.len(), count);
    Ok((count, Decomposition { parts }))
}

/// Fewest parts in a monochromatic decomposition of a fixed colouring, with
/// a witness assembled from maximum packings of each colour class.
pub fn phi_coloured(c: &EdgeColouring, profile: &CliqueProfile) -> Result<(usize, Decomposition)> {
    Ok((phi_coloured_count(c, profile)?, phi_coloured_witness(c, profile)?))
}

fn check_profile(c: &EdgeColouring, profile: &CliqueProfile) -> Result<()> {
    if c.k() != profile.k() {
        return Err(Error::InvalidInput(format!(
            "colouring has {} colours, profile has {}",
            c.k(),
            profile.k()
        )));
    }
    Ok(())
}

/// The count alone: `e(G) - sum_i (C(r_i,2) - 1) nu_{r_i}(G_i)`.
pub fn phi_coloured_count(c: &EdgeColouring, profile: &CliqueProfile) -> Result<usize> {
    check_profile(c, profile)?;
    let mut count = c.graph().edge_count();
    for (i, class) in c.colour_classes().iter().enumerate() {
        let r = profile.size_for(i + 1);
        if class.edge_count() < pair_count(r) {
            continue;
        }
        count -= max_packing_exact(class, r)?.size() * (pair_count(r) - 1);
    }
    Ok(count)
}

fn phi_coloured_witness(c: &EdgeColouring, profile: &CliqueProfile) -> Result<Decomposition> {
    check_profile(c, profile)?;
    let mut parts = Vec::new();
    for (i, class) in c.colour_classes().iter().enumerate() {
        let (_, d) = phi_single(class, profile.size_for(i + 1))?;
        parts.extend(d.parts.into_iter().map(|p| match p {
            Part::Clique { vertices, .. } => Part::Clique { colour: i + 1, vertices },
            edge => edge,
        }));
    }
    Ok(Decomposition { parts })
}

/// Default cap on the number of colourings `phi_k_graph` may enumerate.
pub const DEFAULT_COLOURING_BUDGET: u128 = 1 << 16;

#[derive(Clone, Debug)]
pub struct PhiOptions {
    /// Maximum number of colourings to enumerate.
    pub budget: u128,
    /// When all clique sizes are equal, fix the first edge to colour 1.
    /// Off by default.
    pub symmetry_pruning: bool,
}

impl Default for PhiOptions {
    fn default() -> Self {
        PhiOptions { budget: DEFAULT_COLOURING_BUDGET, symmetry_pruning: false }
    }
}

#[derive(Clone, Debug)]
pub struct PhiKResult {
    pub value: usize,
    /// Index of the worst colouring in base-`k` counter order.
    pub worst_index: u128,
    pub worst: EdgeColouring,
    pub decomposition: Decomposition,
    pub colourings_checked: u128,
}

/// Colouring number `index` of the base-`k` counter over the edge list: the
/// first edge is the most significant digit, so index order is
/// lexicographic order of colour vectors.
pub fn colouring_from_index(g: &Graph, k: usize, index: u128) -> Result<EdgeColouring> {
    let m = g.edge_count();
    let mut colours = vec![1; m];
    let mut t = index;
    for slot in colours.iter_mut().rev() {
        *slot = (t % k as u128) as usize + 1;
        t /= k as u128;
    }
    if t != 0 {
        return Err(Error::InvalidInput(format!("colouring index {index} out of range")));
    }
    EdgeColouring::new(g.clone(), k, colours)
}

/// Worst case of [`phi_coloured`] over every `k`-colouring of `g`. Ties go to
/// the smallest colouring index regardless of how the work is scheduled.
pub fn phi_k_graph(g: &Graph, profile: &CliqueProfile, options: &PhiOptions) -> Result<PhiKResult> {
    let k = profile.k();
    let m = g.edge_count();
    let overflow = || Error::Budget(format!("{k}^{m} colourings exceed the budget of {}", options.budget));
    let total = (k as u128).checked_pow(m as u32).ok_or_else(overflow)?;
    if total > options.budget {
        return Err(overflow());
    }
    let all_equal = profile.sizes().windows(2).all(|w| w[0] == w[1]);
    let limit = if options.symmetry_pruning && all_equal && m > 0 { total / k as u128 } else { total };

    const CHUNK: u128 = 256;
    let chunks = limit.div_ceil(CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|chunk| -> Result<Option<(usize, u128)>> {
            let mut best: Option<(usize, u128)> = None;
            for index in chunk * CHUNK..((chunk + 1) * CHUNK).min(limit) {
                let c = colouring_from_index(g, k, index)?;
                let value = phi_coloured_count(&c, profile)?;
                if best.is_none_or(|(v, _)| value > v) {
                    best = Some((value, index));
                }
            }
            Ok(best)
        })
        .try_reduce(
            || None,
            |a, b| {
                Ok(match (a, b) {
                    (None, x) | (x, None) => x,
                    (Some(x), Some(y)) => Some(if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x }),
                })
            },
        )?;
    let (value, worst_index) = best.ok_or_else(|| Error::Internal("no colouring enumerated".into()))?;
    let worst = colouring_from_index(g, k, worst_index)?;
    let (check, decomposition) = phi_coloured(&worst, profile)?;
    debug_assert_eq!(check, value);
    Ok(PhiKResult { value, worst_index, worst, decomposition, colourings_checked: limit })
}

#[derive(Clone, Debug)]
pub struct PhiNResult {
    pub value: usize,
    /// Position in the stream of the first graph attaining the maximum.
    pub argmax_index: usize,
    pub argmax: Graph,
    pub worst: EdgeColouring,
    pub decomposition: Decomposition,
    /// Positions of every graph attaining the maximum.
    pub argmaxes: Vec<usize>,
    pub graphs_processed: usize,
}

/// Maximum of [`phi_k_graph`] over a stream of graphs sharing one order.
pub fn phi_n_over_stream<I>(graphs: I, profile: &CliqueProfile, options: &PhiOptions) -> Result<PhiNResult>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut order = None;
    let mut best: Option<(PhiKResult, usize, Graph)> = None;
    let mut argmaxes = Vec::new();
    let mut processed = 0;
    for (i, g) in graphs.into_iter().enumerate() {
        let g = g?;
        match order {
            None => order = Some(g.n()),
            Some(n) if n != g.n() => {
                return Err(Error::InvalidInput(format!(
                    "graph {} has {} vertices, earlier graphs have {n}",
                    i + 1,
                    g.n()
                )))
            }
            _ => {}
        }
        let res = phi_k_graph(&g, profile, options)?;
        processed += 1;
        match &best {
            Some((b, _, _)) if res.value < b.value => {}
            Some((b, _, _)) if res.value == b.value => argmaxes.push(i),
            _ => {
                argmaxes = vec![i];
                best = Some((res, i, g));
            }
        }
    }
    let (res, argmax_index, argmax) = best.ok_or_else(|| Error::InvalidInput("empty graph stream".into()))?;
    Ok(PhiNResult {
        value: res.value,
        argmax_index,
        argmax,
        worst: res.worst,
        decomposition: res.decomposition,
        argmaxes,
        graphs_processed: processed,
    })
}

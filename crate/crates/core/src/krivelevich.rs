//! Triangle covers of size at most twice the fractional covering number.
//!
//! The loop repeatedly solves the minimum fractional triangle cover of the
//! remaining graph `H`. If some edge `xy` lying in a triangle has weight
//! exactly zero, every triangle `xyz` forces `f(xz) + f(yz) >= 1`, so moving
//! all pairs `xz`, `yz` into the cover costs `2l` edges while lowering the
//! fractional covering number by at least `l`. Otherwise every edge has
//! positive weight, complementary slackness gives `tau*(H) = e(H)/3`, and the
//! non-cut edges of a locally maximal cut (at most `e(H)/2`) finish the job.

use num_traits::{One, Zero};

use crate::cliques::{enumerate_cliques_capped, is_kr_free, CliqueSystem, MAX_CLIQUES};
use crate::error::{Error, Result};
use crate::fractional::fractional_cover_of;
use crate::graph::{bits, Edge, Graph};
use crate::lp::Rational;
use crate::packing::Cover;

/// One pass of the loop.
#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    /// A zero-weight triangle edge `xy`; the pairs `xz`, `yz` over common
    /// neighbours `z` were added to the cover.
    ParentEdge { edge: Edge, swept: Vec<Edge>, tau_star: Rational },
    /// All weights positive; the remaining graph was finished with a
    /// bipartite-complement cover.
    Bipartite { edges: Vec<Edge>, tau_star: Rational, remaining_edges: usize },
}

#[derive(Clone, Debug)]
pub struct KrivelevichCover {
    pub cover: Cover,
    /// Fractional triangle covering number of the input graph.
    pub tau_star: Rational,
    pub steps: Vec<Step>,
    pub lp_pivots: usize,
}

/// Builds a triangle cover `F` of `g` with `|F| <= 2 tau_3*(g)`, verifying
/// both the cover property and the bound before returning.
pub fn krivelevich_cover(g: &Graph) -> Result<KrivelevichCover> {
    let initial = CliqueSystem::new(g, 3)?;
    let first = fractional_cover_of(&initial);
    let tau_star = first.value.clone();
    let mut lp_pivots = first.pivots;

    let mut h = g.clone();
    let mut cover: Vec<Edge> = Vec::new();
    let mut steps = Vec::new();
    let mut pending = Some(first);

    loop {
        h = triangle_edges_only(&h)?;
        if h.edge_count() == 0 {
            break;
        }
        let f = match pending.take() {
            // The first solution was computed on `g`; it is reused only if
            // discarding non-triangle edges changed nothing.
            Some(f) if f.edges == h.edges() => f,
            _ => {
                let f = fractional_cover_of(&CliqueSystem::new(&h, 3)?);
                lp_pivots += f.pivots;
                f
            }
        };
        let zero = f
            .edges
            .iter()
            .zip(&f.weights)
            .find(|(_, w)| w.is_zero())
            .map(|(&e, _)| e);
        match zero {
            Some((x, y)) => {
                let mut swept = Vec::new();
                for z in bits(h.neighbours(x) & h.neighbours(y)) {
                    swept.push((x.min(z), x.max(z)));
                    swept.push((y.min(z), y.max(z)));
                }
                h = h.without_edges(&swept);
                cover.extend_from_slice(&swept);
                steps.push(Step::ParentEdge { edge: (x, y), swept, tau_star: f.value });
            }
            None => {
                let three = Rational::from_integer(3.into());
                if &f.value * &three != Rational::from_integer(h.edge_count().into()) {
                    return Err(Error::Internal(format!(
                        "all weights positive but tau* = {} differs from e(H)/3 = {}/3",
                        f.value,
                        h.edge_count()
                    )));
                }
                let b = bipartite_half_cover(&h);
                cover.extend_from_slice(&b.edges);
                steps.push(Step::Bipartite {
                    edges: b.edges,
                    tau_star: f.value,
                    remaining_edges: h.edge_count(),
                });
                break;
            }
        }
    }

    cover.sort_unstable();
    let cover = Cover { r: 3, edges: cover };
    cover
        .verify(g)
        .map_err(|e| Error::Internal(format!("cover check failed: {e}")))?;
    let size = Rational::from_integer(cover.size().into());
    if size > &tau_star * (Rational::one() + Rational::one()) {
        return Err(Error::Internal(format!(
            "cover of size {} exceeds 2 tau* = 2 * {tau_star}",
            cover.size()
        )));
    }
    Ok(KrivelevichCover { cover, tau_star, steps, lp_pivots })
}

/// `g` without the edges that lie in no triangle.
fn triangle_edges_only(g: &Graph) -> Result<Graph> {
    let triangles = enumerate_cliques_capped(g, 3, MAX_CLIQUES)?;
    let mut h = Graph::empty(g.n())?;
    for t in &triangles {
        for (u, v) in t.edges() {
            h.add_edge(u, v)?;
        }
    }
    Ok(h)
}

/// Non-cut edges of a locally maximal cut.
///
/// Starts from the bipartition by label parity and, scanning vertices in
/// label order, moves the first vertex whose switch enlarges the cut, until
/// no single move helps. At that point every vertex has at least half its
/// edges across the cut, so at most `e(g)/2` edges remain, and they form a
/// triangle cover because the cut edges are bipartite.
pub fn bipartite_half_cover(g: &Graph) -> Cover {
    let n = g.n();
    let mut side: u64 = (0..n).filter(|v| v % 2 == 1).fold(0, |m, v| m | 1 << v);
    'improve: loop {
        for v in 0..n {
            let same_mask = if side >> v & 1 == 1 { side } else { !side };
            let same = (g.neighbours(v) & same_mask).count_ones();
            let across = g.degree(v) as u32 - same;
            if same > across {
                side ^= 1 << v;
                continue 'improve;
            }
        }
        break;
    }
    let edges = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| (side >> u & 1) == (side >> v & 1))
        .collect();
    let cover = Cover { r: 3, edges };
    debug_assert!(2 * cover.size() <= g.edge_count());
    debug_assert!(is_kr_free(&g.without_edges(&cover.edges), 3));
    cover
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{complete_graph, turan_graph};
    use crate::fractional::fractional_cover;

    #[test]
    fn half_cover_examples() {
        assert!(bipartite_half_cover(&turan_graph(6, 2).unwrap()).edges.is_empty());
        let k3 = complete_graph(3).unwrap();
        assert_eq!(bipartite_half_cover(&k3).size(), 1);
        let k4 = complete_graph(4).unwrap();
        let c = bipartite_half_cover(&k4);
        assert!(c.size() <= 3);
        c.verify(&k4).unwrap();
    }

    #[test]
    fn half_cover_bound_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.random_range(1..=20);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let c = bipartite_half_cover(&g);
            assert!(2 * c.size() <= g.edge_count());
            c.verify(&g).unwrap();
        }
    }

    #[test]
    fn triangle_free_input_gives_empty_cover() {
        let k = krivelevich_cover(&turan_graph(8, 2).unwrap()).unwrap();
        assert!(k.cover.edges.is_empty());
        assert!(k.steps.is_empty());
        assert!(k.tau_star.is_zero());
    }

    #[test]
    fn complete_graphs_within_twice_tau_star() {
        for n in 3..=7 {
            let g = complete_graph(n).unwrap();
            let k = krivelevich_cover(&g).unwrap();
            let tau = fractional_cover(&g, 3).unwrap().value;
            assert_eq!(k.tau_star, tau);
            assert!(Rational::from_integer(k.cover.size().into()) <= tau * Rational::from_integer(2.into()));
            assert!(is_kr_free(&g.without_edges(&k.cover.edges), 3));
        }
    }

    #[test]
    fn k4_bound() {
        let k = krivelevich_cover(&complete_graph(4).unwrap()).unwrap();
        assert!(k.cover.size() <= 4);
    }
}

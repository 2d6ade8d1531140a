//! Fractional `K_r`-covers and `K_r`-packings.
//!
//! The two linear programs are solved independently by the exact simplex in
//! [`crate::lp`]; each solution carries the dual multipliers the solver found
//! as its optimality certificate, and [`duality_certificate`] compares the
//! two optimal values.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cliques::{Clique, CliqueSystem};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::lp::{LinearProgram, LpOutcome, Rational, Sense};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FractionalKind {
    /// Weights on edges; every clique has total weight at least 1.
    Cover,
    /// Weights on cliques; every edge carries total weight at most 1.
    Packing,
}

impl fmt::Display for FractionalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FractionalKind::Cover => "cover",
            FractionalKind::Packing => "packing",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FractionalSolution {
    pub kind: FractionalKind,
    pub r: usize,
    /// All edges of the host, lexicographic.
    pub edges: Vec<Edge>,
    /// All `r`-cliques of the host, lexicographic.
    pub cliques: Vec<Clique>,
    /// Aligned with `edges` for a cover, with `cliques` for a packing.
    pub weights: Vec<Rational>,
    pub value: Rational,
    /// Optimal solution of the dual program (a packing for a cover and vice
    /// versa), aligned the other way round.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

impl FractionalSolution {
    /// Weight of edge `(u, v)` in a cover solution.
    pub fn edge_weight(&self, e: Edge) -> Option<&Rational> {
        debug_assert_eq!(self.kind, FractionalKind::Cover);
        self.edges.binary_search(&e).ok().map(|i| &self.weights[i])
    }

    fn cover_weights(&self) -> &[Rational] {
        match self.kind {
            FractionalKind::Cover => &self.weights,
            FractionalKind::Packing => &self.dual,
        }
    }

    fn packing_weights(&self) -> &[Rational] {
        match self.kind {
            FractionalKind::Cover => &self.dual,
            FractionalKind::Packing => &self.weights,
        }
    }

    /// Checks the solution's own constraints and objective value.
    pub fn check_feasible(&self) -> Result<()> {
        let sys = self.system();
        match self.kind {
            FractionalKind::Cover => check_cover_weights(&sys, &self.weights)?,
            FractionalKind::Packing => check_packing_weights(&sys, &self.weights)?,
        }
        let total: Rational = self.weights.iter().sum();
        if total != self.value {
            return Err(Error::InvalidInput(format!(
                "weights sum to {total}, reported value is {}",
                self.value
            )));
        }
        Ok(())
    }

    /// Checks that the carried dual solution is feasible for the dual
    /// program with the same objective value, which proves optimality.
    pub fn check_certificate(&self) -> Result<()> {
        self.check_feasible()?;
        let sys = self.system();
        match self.kind {
            FractionalKind::Cover => check_packing_weights(&sys, &self.dual)?,
            FractionalKind::Packing => check_cover_weights(&sys, &self.dual)?,
        }
        let dual_total: Rational = self.dual.iter().sum();
        if dual_total != self.value {
            return Err(Error::InvalidInput(format!(
                "dual value {dual_total} differs from primal value {}",
                self.value
            )));
        }
        Ok(())
    }

    fn system(&self) -> CliqueSystem {
        let index = |e: &Edge| self.edges.binary_search(e).expect("clique edge in edge list");
        let clique_edges: Vec<Vec<usize>> =
            self.cliques.iter().map(|c| c.edges().iter().map(index).collect()).collect();
        let mut edge_cliques = vec![Vec::new(); self.edges.len()];
        for (c, es) in clique_edges.iter().enumerate() {
            for &e in es {
                edge_cliques[e].push(c);
            }
        }
        CliqueSystem {
            r: self.r,
            edges: self.edges.clone(),
            cliques: self.cliques.clone(),
            clique_edges,
            edge_cliques,
        }
    }
}

fn check_cover_weights(sys: &CliqueSystem, w: &[Rational]) -> Result<()> {
    if w.len() != sys.edges.len() || w.iter().any(Signed::is_negative) {
        return Err(Error::InvalidInput("cover weights must be one nonnegative value per edge".into()));
    }
    for (c, es) in sys.clique_edges.iter().enumerate() {
        let s: Rational = es.iter().map(|&e| &w[e]).sum();
        if s < Rational::one() {
            return Err(Error::InvalidInput(format!(
                "clique {:?} has cover weight {s} < 1",
                sys.cliques[c].vertices()
            )));
        }
    }
    Ok(())
}

fn check_packing_weights(sys: &CliqueSystem, p: &[Rational]) -> Result<()> {
    if p.len() != sys.cliques.len() || p.iter().any(Signed::is_negative) {
        return Err(Error::InvalidInput("packing weights must be one nonnegative value per clique".into()));
    }
    for (e, cs) in sys.edge_cliques.iter().enumerate() {
        let s: Rational = cs.iter().map(|&c| &p[c]).sum();
        if s > Rational::one() {
            let (u, v) = sys.edges[e];
            return Err(Error::InvalidInput(format!(
                "edge ({u}, {v}) carries packing weight {s} > 1"
            )));
        }
    }
    Ok(())
}

fn solve(lp: &LinearProgram) -> Result<crate::lp::LpSolution> {
    match lp.solve()? {
        (LpOutcome::Optimal, Some(sol)) => Ok(sol),
        (outcome, _) => Err(Error::Internal(format!(
            "clique program reported {outcome:?}; both programs are always feasible and bounded"
        ))),
    }
}

/// Minimum fractional `K_r`-cover: minimize the total edge weight subject to
/// every `r`-clique having weight at least 1. Edges in no clique get 0.
pub fn fractional_cover(g: &Graph, r: usize) -> Result<FractionalSolution> {
    let sys = CliqueSystem::new(g, r)?;
    Ok(fractional_cover_of(&sys))
}

pub(crate) fn fractional_cover_of(sys: &CliqueSystem) -> FractionalSolution {
    let active = sys.active_edges();
    let mut column = vec![usize::MAX; sys.edges.len()];
    for (j, &e) in active.iter().enumerate() {
        column[e] = j;
    }
    let mut lp = LinearProgram::new(active.len(), vec![-Rational::one(); active.len()]);
    for es in &sys.clique_edges {
        let coeffs = es.iter().map(|&e| (column[e], Rational::one())).collect();
        lp.add_row(coeffs, Sense::Ge, Rational::one());
    }
    let sol = solve(&lp).expect("covering program is feasible and bounded");
    let mut weights = vec![Rational::zero(); sys.edges.len()];
    for (j, &e) in active.iter().enumerate() {
        weights[e] = sol.primal[j].clone();
    }
    FractionalSolution {
        kind: FractionalKind::Cover,
        r: sys.r,
        edges: sys.edges.clone(),
        cliques: sys.cliques.clone(),
        weights,
        value: -sol.value,
        dual: sol.dual.iter().map(|y| -y).collect(),
        pivots: sol.pivots,
    }
}

/// Maximum fractional `K_r`-packing: maximize the total clique weight
/// subject to every edge carrying weight at most 1.
pub fn fractional_packing(g: &Graph, r: usize) -> Result<FractionalSolution> {
    let sys = CliqueSystem::new(g, r)?;
    let active = sys.active_edges();
    let mut lp = LinearProgram::new(sys.cliques.len(), vec![Rational::one(); sys.cliques.len()]);
    for &e in &active {
        let coeffs = sys.edge_cliques[e].iter().map(|&c| (c, Rational::one())).collect();
        lp.add_row(coeffs, Sense::Le, Rational::one());
    }
    let sol = solve(&lp)?;
    let mut dual = vec![Rational::zero(); sys.edges.len()];
    for (i, &e) in active.iter().enumerate() {
        dual[e] = sol.dual[i].clone();
    }
    Ok(FractionalSolution {
        kind: FractionalKind::Packing,
        r,
        edges: sys.edges,
        cliques: sys.cliques,
        weights: sol.primal,
        value: sol.value,
        dual,
        pivots: sol.pivots,
    })
}

#[derive(Clone, Debug)]
pub struct DualityCertificate {
    pub cover: FractionalSolution,
    pub packing: FractionalSolution,
    pub equal: bool,
}

impl DualityCertificate {
    pub fn tau_star(&self) -> &Rational {
        &self.cover.value
    }

    pub fn nu_star(&self) -> &Rational {
        &self.packing.value
    }
}

/// Solves both programs separately and checks that their optima coincide.
/// Any disagreement, or a solution failing its own certificate, is reported
/// as an internal error: it can only come from a solver defect.
pub fn duality_certificate(g: &Graph, r: usize) -> Result<DualityCertificate> {
    let cover = fractional_cover(g, r)?;
    let packing = fractional_packing(g, r)?;
    for sol in [&cover, &packing] {
        sol.check_certificate()
            .map_err(|e| Error::Internal(format!("fractional {} certificate: {e}", sol.kind)))?;
    }
    if cover.value != packing.value {
        return Err(Error::Internal(format!(
            "fractional cover value {} differs from fractional packing value {}",
            cover.value, packing.value
        )));
    }
    Ok(DualityCertificate { cover, packing, equal: true })
}

/// Complementary slackness for a cover `f` and packing `p` of equal value:
/// every edge with `f(e) > 0` is saturated by `p`, and every clique with
/// `p(K) > 0` has cover weight exactly 1.
pub fn complementary_slackness_check(
    g: &Graph,
    r: usize,
    f: &FractionalSolution,
    p: &FractionalSolution,
) -> Result<bool> {
    if f.kind != FractionalKind::Cover || p.kind != FractionalKind::Packing {
        return Err(Error::InvalidInput("expected a fractional cover and a fractional packing".into()));
    }
    let sys = CliqueSystem::new(g, r)?;
    if f.r != r || p.r != r || f.edges != sys.edges || p.cliques != sys.cliques {
        return Err(Error::InvalidInput("solutions do not belong to this graph and clique size".into()));
    }
    f.check_feasible()?;
    p.check_feasible()?;
    if f.value != p.value {
        return Err(Error::InvalidInput(format!(
            "cover value {} and packing value {} differ; the pair is not optimal",
            f.value, p.value
        )));
    }
    let fw = f.cover_weights();
    let pw = p.packing_weights();
    let edges_tight = (0..sys.edges.len()).all(|e| {
        !fw[e].is_positive() || sys.edge_cliques[e].iter().map(|&c| &pw[c]).sum::<Rational>() == Rational::one()
    });
    let cliques_tight = (0..sys.cliques.len()).all(|c| {
        !pw[c].is_positive() || sys.clique_edges[c].iter().map(|&e| &fw[e]).sum::<Rational>() == Rational::one()
    });
    Ok(edges_tight && cliques_tight)
}

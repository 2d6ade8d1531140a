//! Run reports: every command produces a [`RunReport`] whose numeric claims
//! come with certificates (packings, covers, LP weights, colourings) that
//! [`verify_report`] re-checks without repeating any search.
//!
//! Reports are deterministic: struct fields serialize in declaration order,
//! JSON objects in sorted key order, and nothing time-dependent is recorded.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cliques::{count_cliques, enumerate_cliques, Clique, CliqueSystem};
use crate::colouring::{CliqueProfile, EdgeColouring};
use crate::construct::{blow_up, turan_class_sizes, turan_graph, turan_number};
use crate::decomposition::{phi_coloured, phi_k_graph, phi_n_over_stream, phi_single, Decomposition, PhiOptions};
use crate::error::{Error, Result};
use crate::fractional::{duality_certificate, fractional_cover, fractional_packing, FractionalSolution};
use crate::graph::{labelled_graphs, Edge, Graph};
use crate::graph6::{parse_graph6, write_graph6};
use crate::krivelevich::{bipartite_half_cover, krivelevich_cover};
use crate::lp::{parse_rational, Rational};
use crate::packing::{
    greedy_packing, max_packing_exact_with_stats, min_cover_exact_with_stats, packing_edges_cover, Cover, Packing,
};
use crate::ramsey::{ramsey_known, ramsey_witness_search_with, verify_colouring_avoids, SearchOptions};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub resources: Value,
    pub status: String,
}

impl RunReport {
    fn ok(command: &str, inputs: Value, results: Value, resources: Value) -> Self {
        RunReport {
            command: command.to_string(),
            inputs,
            results,
            resources,
            status: "ok".to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))
    }

    /// Plain-text rendering: the command, then one `key: value` line per
    /// input and result. Multi-line strings (colourings) are indented.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (section, value) in [("input", &self.inputs), ("result", &self.results)] {
            if let Value::Object(map) = value {
                for (k, v) in map {
                    match v {
                        Value::String(s) if s.contains('\n') => {
                            out.push_str(&format!("{section}.{k}:\n"));
                            for line in s.lines() {
                                out.push_str(&format!("  {line}\n"));
                            }
                        }
                        Value::String(s) => out.push_str(&format!("{section}.{k}: {s}\n")),
                        other => out.push_str(&format!("{section}.{k}: {other}\n")),
                    }
                }
            }
        }
        out
    }
}

fn rational_str(q: &Rational) -> String {
    q.to_string()
}

fn edge_json(edges: &[Edge]) -> Value {
    json!(edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

fn cliques_json(cliques: &[Clique]) -> Value {
    json!(cliques.iter().map(|c| c.vertices().to_vec()).collect::<Vec<_>>())
}

fn fractional_json(sol: &FractionalSolution) -> Value {
    let weights: Vec<String> = sol.weights.iter().map(rational_str).collect();
    let dual: Vec<String> = sol.dual.iter().map(rational_str).collect();
    json!({
        "kind": sol.kind.to_string(),
        "value": rational_str(&sol.value),
        "edges": edge_json(&sol.edges),
        "cliques": cliques_json(&sol.cliques),
        "weights": weights,
        "dual": dual,
    })
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

pub fn turan(n: usize, p: usize) -> Result<RunReport> {
    let g = turan_graph(n, p)?;
    let edges = turan_number(n, p)?;
    Ok(RunReport::ok(
        "turan",
        json!({ "n": n, "p": p }),
        json!({ "edges": edges, "graph6": write_graph6(&g), "class_sizes": turan_class_sizes(n, p)? }),
        json!({}),
    ))
}

pub fn blowup(base: &EdgeColouring, sizes: &[usize]) -> Result<RunReport> {
    let b = blow_up(base, sizes)?;
    Ok(RunReport::ok(
        "blowup",
        json!({ "base": base.to_text(), "sizes": sizes }),
        json!({ "edges": b.graph().edge_count(), "graph6": write_graph6(b.graph()), "colouring": b.to_text() }),
        json!({}),
    ))
}

pub fn cliques(g: &Graph, r: usize) -> Result<RunReport> {
    let list = enumerate_cliques(g, r);
    Ok(RunReport::ok(
        "cliques",
        json!({ "graph6": write_graph6(g), "r": r }),
        json!({ "count": list.len(), "cliques": cliques_json(&list) }),
        json!({}),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exact,
    Fractional,
    Krivelevich,
    Greedy,
    Bipartite,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Fractional => "fractional",
            Method::Krivelevich => "krivelevich",
            Method::Greedy => "greedy",
            Method::Bipartite => "bipartite",
        }
    }
}

pub fn packing(g: &Graph, r: usize, method: Method) -> Result<RunReport> {
    let inputs = json!({ "graph6": write_graph6(g), "r": r, "method": method.name() });
    let (results, resources) = match method {
        Method::Exact => {
            let (p, nodes) = max_packing_exact_with_stats(g, r)?;
            (json!({ "size": p.size(), "members": cliques_json(&p.members) }), json!({ "search_nodes": nodes }))
        }
        Method::Greedy => {
            if r < 3 {
                return Err(Error::InvalidInput(format!("clique size {r} must be at least 3")));
            }
            let sys = CliqueSystem::new(g, r)?;
            let members: Vec<Clique> = greedy_packing(&sys).into_iter().map(|c| sys.cliques[c].clone()).collect();
            (json!({ "size": members.len(), "members": cliques_json(&members) }), json!({}))
        }
        Method::Fractional => {
            let sol = fractional_packing(g, r)?;
            (json!({ "value": rational_str(&sol.value), "solution": fractional_json(&sol) }), json!({ "lp_pivots": sol.pivots }))
        }
        Method::Krivelevich | Method::Bipartite => {
            return Err(Error::InvalidInput(format!("method {} applies to covers only", method.name())))
        }
    };
    Ok(RunReport::ok("packing", inputs, results, resources))
}

pub fn cover(g: &Graph, r: usize, method: Method) -> Result<RunReport> {
    let inputs = json!({ "graph6": write_graph6(g), "r": r, "method": method.name() });
    let need_triangles = || {
        if r != 3 {
            Err(Error::InvalidInput(format!("method {} needs r = 3", method.name())))
        } else {
            Ok(())
        }
    };
    let cover_json = |c: &Cover| json!({ "size": c.size(), "edges": edge_json(&c.edges) });
    let (results, resources) = match method {
        Method::Exact => {
            let (c, nodes) = min_cover_exact_with_stats(g, r)?;
            (cover_json(&c), json!({ "search_nodes": nodes }))
        }
        Method::Greedy => (cover_json(&packing_edges_cover(g, r)?), json!({})),
        Method::Bipartite => {
            need_triangles()?;
            (cover_json(&bipartite_half_cover(g)), json!({}))
        }
        Method::Krivelevich => {
            need_triangles()?;
            let k = krivelevich_cover(g)?;
            let mut res = cover_json(&k.cover);
            res["tau_star"] = json!(rational_str(&k.tau_star));
            res["rounds"] = json!(k.steps.len());
            (res, json!({ "lp_pivots": k.lp_pivots }))
        }
        Method::Fractional => {
            let sol = fractional_cover(g, r)?;
            (json!({ "value": rational_str(&sol.value), "solution": fractional_json(&sol) }), json!({ "lp_pivots": sol.pivots }))
        }
    };
    Ok(RunReport::ok("cover", inputs, results, resources))
}

pub fn duality(g: &Graph, r: usize) -> Result<RunReport> {
    let d = duality_certificate(g, r)?;
    Ok(RunReport::ok(
        "duality",
        json!({ "graph6": write_graph6(g), "r": r }),
        json!({
            "tau_star": rational_str(d.tau_star()),
            "nu_star": rational_str(d.nu_star()),
            "equal": d.equal,
            "cover": fractional_json(&d.cover),
            "packing": fractional_json(&d.packing),
        }),
        json!({ "lp_pivots": d.cover.pivots + d.packing.pivots }),
    ))
}

pub fn phi(g: &Graph, r: usize) -> Result<RunReport> {
    let (value, d) = phi_single(g, r)?;
    Ok(RunReport::ok(
        "phi",
        json!({ "graph6": write_graph6(g), "r": r }),
        json!({ "value": value, "decomposition": d }),
        json!({}),
    ))
}

pub fn phi_coloured_report(c: &EdgeColouring, profile: &CliqueProfile) -> Result<RunReport> {
    let (value, d) = phi_coloured(c, profile)?;
    Ok(RunReport::ok(
        "phi-coloured",
        json!({ "colouring": c.to_text(), "profile": profile.to_string() }),
        json!({ "value": value, "decomposition": d }),
        json!({}),
    ))
}

pub fn phi_k(g: &Graph, profile: &CliqueProfile, options: &PhiOptions) -> Result<RunReport> {
    let res = phi_k_graph(g, profile, options)?;
    Ok(RunReport::ok(
        "phi-k",
        json!({ "graph6": write_graph6(g), "profile": profile.to_string(), "budget": options.budget.to_string() }),
        json!({
            "value": res.value,
            "worst_index": res.worst_index.to_string(),
            "worst_colouring": res.worst.to_text(),
            "decomposition": res.decomposition,
        }),
        json!({ "colourings": res.colourings_checked.to_string() }),
    ))
}

pub fn phi_n<I>(graphs: I, profile: &CliqueProfile, options: &PhiOptions) -> Result<RunReport>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let res = phi_n_over_stream(graphs, profile, options)?;
    Ok(RunReport::ok(
        "phi-n",
        json!({ "profile": profile.to_string(), "budget": options.budget.to_string() }),
        json!({
            "value": res.value,
            "argmax_index": res.argmax_index,
            "argmax_graph6": write_graph6(&res.argmax),
            "argmaxes": res.argmaxes,
            "worst_colouring": res.worst.to_text(),
            "decomposition": res.decomposition,
        }),
        json!({ "graphs": res.graphs_processed }),
    ))
}

pub fn ramsey_known_report(sizes: &[usize]) -> Result<RunReport> {
    Ok(RunReport::ok(
        "ramsey-known",
        json!({ "profile": sizes }),
        json!({ "value": ramsey_known(sizes) }),
        json!({}),
    ))
}

pub fn ramsey_search(profile: &CliqueProfile, s: usize, options: &SearchOptions) -> Result<RunReport> {
    let (w, stats) = ramsey_witness_search_with(profile, s, options)?;
    Ok(RunReport::ok(
        "ramsey-search",
        json!({ "profile": profile.to_string(), "s": s }),
        json!({ "found": w.is_some(), "witness": w.map(|c| c.to_text()) }),
        json!({ "search_nodes": stats.nodes }),
    ))
}

/// Which graphs a Tuza sweep covers.
#[derive(Clone, Debug)]
pub enum SweepSource {
    /// Every labelled graph on `n` vertices.
    AllLabelled(usize),
    /// `count` graphs `G(n, p)` from a seeded generator.
    Random { count: usize, n: usize, p: f64, seed: u64 },
}

/// Seeded `G(n, p)`: pairs in lexicographic order, each kept with
/// probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

pub fn sweep_graphs(source: &SweepSource) -> Result<Box<dyn Iterator<Item = Graph>>> {
    match *source {
        SweepSource::AllLabelled(n) => Ok(Box::new(labelled_graphs(n)?)),
        SweepSource::Random { count, n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidInput(format!("edge probability {p} outside [0, 1]")));
            }
            Graph::empty(n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok(Box::new((0..count).map(move |_| random_graph(&mut rng, n, p).expect("n checked"))))
        }
    }
}

/// Exact `tau_3` and `nu_3` for every graph of the source; any graph with
/// `tau_3 > 2 nu_3` is reported as a violation. The report's certificate is
/// the graph with the largest ratio (ties: first seen).
pub fn tuza_sweep(source: &SweepSource) -> Result<RunReport> {
    use rayon::prelude::*;
    let graphs: Vec<Graph> = sweep_graphs(source)?.collect();
    let rows: Vec<(usize, usize)> = graphs
        .par_iter()
        .map(|g| -> Result<(usize, usize)> {
            let nu = max_packing_exact_with_stats(g, 3)?.0.size();
            let tau = min_cover_exact_with_stats(g, 3)?.0.size();
            Ok((tau, nu))
        })
        .collect::<Result<_>>()?;
    let violations: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].0 > 2 * rows[i].1).collect();
    // Largest tau/nu, compared by cross-multiplication; nu = 0 forces tau = 0.
    let tightest = (0..rows.len())
        .filter(|&i| rows[i].1 > 0)
        .fold(None::<usize>, |best, i| match best {
            Some(b) if rows[i].0 * rows[b].1 <= rows[b].0 * rows[i].1 => Some(b),
            _ => Some(i),
        });
    let inputs = match source {
        SweepSource::AllLabelled(n) => json!({ "mode": "all", "n": n }),
        SweepSource::Random { count, n, p, seed } => json!({ "mode": "random", "count": count, "n": n, "p": p, "seed": seed }),
    };
    let mut results = json!({
        "graphs": graphs.len(),
        "violations": violations.iter().map(|&i| write_graph6(&graphs[i])).collect::<Vec<_>>(),
    });
    if let Some(i) = tightest {
        let g = &graphs[i];
        let p = max_packing_exact_with_stats(g, 3)?.0;
        let c = min_cover_exact_with_stats(g, 3)?.0;
        results["tightest"] = json!({
            "graph6": write_graph6(g),
            "tau": c.size(),
            "nu": p.size(),
            "cover": edge_json(&c.edges),
            "packing": cliques_json(&p.members),
        });
    }
    Ok(RunReport::ok("tuza-sweep", inputs, results, json!({})))
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Outcome of re-checking one report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Verification {
    /// Claims confirmed from their certificates.
    pub checked: Vec<String>,
    /// Claims that carry no polynomially checkable certificate (optimality
    /// of exact searches, nonexistence of Ramsey witnesses).
    pub uncertified: Vec<String>,
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::InvalidInput(format!("report lacks field {key:?}")))
}

fn as_usize(v: &Value, key: &str) -> Result<usize> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::InvalidInput(format!("field {key:?} is not a nonnegative integer")))
}

fn as_str<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key)?
        .as_str()
        .ok_or_else(|| Error::InvalidInput(format!("field {key:?} is not a string")))
}

fn de<T: for<'de> Deserialize<'de>>(v: &Value, key: &str) -> Result<T> {
    serde_json::from_value(field(v, key)?.clone())
        .map_err(|e| Error::InvalidInput(format!("field {key:?}: {e}")))
}

fn mismatch(what: &str, claimed: impl std::fmt::Display, actual: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("{what}: report claims {claimed}, certificate gives {actual}"))
}

fn cliques_from(v: &Value, key: &str) -> Result<Vec<Clique>> {
    de::<Vec<Vec<usize>>>(v, key)?.into_iter().map(Clique::new).collect()
}

fn fractional_from(v: &Value, kind: crate::fractional::FractionalKind, r: usize) -> Result<FractionalSolution> {
    let parse_all = |key: &str| -> Result<Vec<Rational>> {
        de::<Vec<String>>(v, key)?.iter().map(|s| parse_rational(s)).collect()
    };
    Ok(FractionalSolution {
        kind,
        r,
        edges: de::<Vec<Edge>>(v, "edges")?,
        cliques: cliques_from(v, "cliques")?,
        weights: parse_all("weights")?,
        value: parse_rational(as_str(v, "value")?)?,
        dual: parse_all("dual")?,
        pivots: 0,
    })
}

/// Checks that a serialized fractional solution belongs to `g` and is
/// certified optimal by its dual.
fn verify_fractional(
    g: &Graph,
    r: usize,
    v: &Value,
    kind: crate::fractional::FractionalKind,
) -> Result<FractionalSolution> {
    let sol = fractional_from(v, kind, r)?;
    let sys = CliqueSystem::new(g, r)?;
    if sol.edges != sys.edges || sol.cliques != sys.cliques {
        return Err(Error::InvalidInput("fractional solution lists the wrong edges or cliques".into()));
    }
    sol.check_certificate()?;
    Ok(sol)
}

pub fn verify_report(report: &RunReport) -> Result<Verification> {
    use crate::fractional::FractionalKind;
    let mut out = Verification::default();
    let inp = &report.inputs;
    let res = &report.results;
    let graph = || parse_graph6(as_str(inp, "graph6")?);

    match report.command.as_str() {
        "turan" => {
            let (n, p) = (as_usize(inp, "n")?, as_usize(inp, "p")?);
            let g = parse_graph6(as_str(res, "graph6")?)?;
            if g != turan_graph(n, p)? {
                return Err(Error::InvalidInput("graph is not the Turán graph".into()));
            }
            let claimed = as_usize(res, "edges")?;
            if claimed != g.edge_count() {
                return Err(mismatch("edge count", claimed, g.edge_count()));
            }
            out.checked.push(format!("T_{p}({n}) has {claimed} edges"));
        }
        "blowup" => {
            let base: EdgeColouring = as_str(inp, "base")?.parse()?;
            let sizes: Vec<usize> = de(inp, "sizes")?;
            let claimed: EdgeColouring = as_str(res, "colouring")?.parse()?;
            if claimed != blow_up(&base, &sizes)? {
                return Err(Error::InvalidInput("colouring is not the blow-up of the base".into()));
            }
            out.checked.push("blow-up colouring".into());
        }
        "cliques" => {
            let g = graph()?;
            let r = as_usize(inp, "r")?;
            let list = cliques_from(res, "cliques")?;
            if list.iter().any(|c| c.r() != r || !c.is_clique_of(&g)) {
                return Err(Error::InvalidInput("listed set is not an r-clique".into()));
            }
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidInput("cliques not strictly increasing".into()));
            }
            let total = count_cliques(&g, r);
            if list.len() != as_usize(res, "count")? || list.len() != total {
                return Err(mismatch("clique count", list.len(), total));
            }
            out.checked.push(format!("{total} cliques of size {r}"));
        }
        "packing" => {
            let g = graph()?;
            let r = as_usize(inp, "r")?;
            let method = as_str(inp, "method")?;
            if method == "fractional" {
                let sol = verify_fractional(&g, r, field(res, "solution")?, FractionalKind::Packing)?;
                if as_str(res, "value")? != rational_str(&sol.value) {
                    return Err(mismatch("value", as_str(res, "value")?, &sol.value));
                }
                out.checked.push(format!("fractional packing value {} with dual certificate", sol.value));
            } else {
                let p = Packing { r, members: cliques_from(res, "members")? };
                p.verify(&g)?;
                let claimed = as_usize(res, "size")?;
                if claimed != p.size() {
                    return Err(mismatch("packing size", claimed, p.size()));
                }
                out.checked.push(format!("packing of size {claimed}"));
                if method == "exact" {
                    out.uncertified.push("maximality of the packing".into());
                }
            }
        }
        "cover" => {
            let g = graph()?;
            let r = as_usize(inp, "r")?;
            let method = as_str(inp, "method")?;
            if method == "fractional" {
                let sol = verify_fractional(&g, r, field(res, "solution")?, FractionalKind::Cover)?;
                if as_str(res, "value")? != rational_str(&sol.value) {
                    return Err(mismatch("value", as_str(res, "value")?, &sol.value));
                }
                out.checked.push(format!("fractional cover value {} with dual certificate", sol.value));
            } else {
                let c = Cover { r, edges: de(res, "edges")? };
                c.verify(&g)?;
                let claimed = as_usize(res, "size")?;
                if claimed != c.size() {
                    return Err(mismatch("cover size", claimed, c.size()));
                }
                out.checked.push(format!("cover of size {claimed}"));
                match method {
                    "exact" => out.uncertified.push("minimality of the cover".into()),
                    "krivelevich" => {
                        let tau = parse_rational(as_str(res, "tau_star")?)?;
                        let lp = fractional_cover(&g, r)?;
                        if lp.value != tau {
                            return Err(mismatch("tau_star", &tau, &lp.value));
                        }
                        if Rational::from_integer(c.size().into()) > &tau * Rational::from_integer(2.into()) {
                            return Err(Error::InvalidInput(format!("cover exceeds 2 tau* = 2 * {tau}")));
                        }
                        out.checked.push(format!("cover size at most 2 * {tau}"));
                    }
                    "bipartite" => {
                        if 2 * c.size() > g.edge_count() {
                            return Err(Error::InvalidInput("bipartite cover exceeds e/2".into()));
                        }
                        out.checked.push("cover size at most e/2".into());
                    }
                    _ => {}
                }
            }
        }
        "duality" => {
            let g = graph()?;
            let r = as_usize(inp, "r")?;
            let f = verify_fractional(&g, r, field(res, "cover")?, FractionalKind::Cover)?;
            let p = verify_fractional(&g, r, field(res, "packing")?, FractionalKind::Packing)?;
            if f.value != p.value {
                return Err(mismatch("duality", &f.value, &p.value));
            }
            if as_str(res, "tau_star")? != rational_str(&f.value) || as_str(res, "nu_star")? != rational_str(&p.value) {
                return Err(Error::InvalidInput("reported values differ from the solutions".into()));
            }
            out.checked.push(format!("tau* = nu* = {}", f.value));
        }
        "phi" => {
            let g = graph()?;
            let r = as_usize(inp, "r")?;
            let c = EdgeColouring::uniform(g, 1, 1)?;
            let profile = CliqueProfile::new(vec![r])?;
            verify_decomposition(&c, &profile, res, &mut out)?;
            out.uncertified.push("minimality of the decomposition".into());
        }
        "phi-coloured" => {
            let c: EdgeColouring = as_str(inp, "colouring")?.parse()?;
            let profile: CliqueProfile = as_str(inp, "profile")?.parse()?;
            verify_decomposition(&c, &profile, res, &mut out)?;
            out.uncertified.push("minimality of the decomposition".into());
        }
        "phi-k" | "phi-n" => {
            let c: EdgeColouring = as_str(res, "worst_colouring")?.parse()?;
            let profile: CliqueProfile = as_str(inp, "profile")?.parse()?;
            if report.command == "phi-k" && &graph()? != c.graph() {
                return Err(Error::InvalidInput("worst colouring is not of the input graph".into()));
            }
            if report.command == "phi-n" && &parse_graph6(as_str(res, "argmax_graph6")?)? != c.graph() {
                return Err(Error::InvalidInput("worst colouring is not of the argmax graph".into()));
            }
            verify_decomposition(&c, &profile, res, &mut out)?;
            out.uncertified.push("maximality over colourings (exhaustive search)".into());
        }
        "ramsey-known" => {
            let sizes: Vec<usize> = de(inp, "profile")?;
            let claimed: Option<u64> = de(res, "value")?;
            if claimed != ramsey_known(&sizes) {
                return Err(mismatch("Ramsey value", format!("{claimed:?}"), format!("{:?}", ramsey_known(&sizes))));
            }
            out.checked.push("table lookup".into());
        }
        "ramsey-search" => {
            let profile: CliqueProfile = as_str(inp, "profile")?.parse()?;
            let s = as_usize(inp, "s")?;
            match field(res, "witness")? {
                Value::Null => out.uncertified.push(format!("no avoiding colouring of K_{s} (exhaustive search)")),
                w => {
                    let c: EdgeColouring = w
                        .as_str()
                        .ok_or_else(|| Error::InvalidInput("witness is not a string".into()))?
                        .parse()?;
                    if c.graph().n() != s {
                        return Err(mismatch("witness order", s, c.graph().n()));
                    }
                    if let Some(v) = verify_colouring_avoids(&c, &profile)? {
                        return Err(Error::InvalidInput(format!(
                            "witness has a colour-{} clique {:?}",
                            v.colour,
                            v.clique.vertices()
                        )));
                    }
                    out.checked.push(format!("avoiding colouring of K_{s}"));
                }
            }
        }
        "tuza-sweep" => {
            let violations: Vec<String> = de(res, "violations")?;
            for v in &violations {
                out.uncertified.push(format!("violation claimed for {v}"));
            }
            if let Some(t) = res.get("tightest") {
                let g = parse_graph6(as_str(t, "graph6")?)?;
                let p = Packing { r: 3, members: cliques_from(t, "packing")? };
                p.verify(&g)?;
                let c = Cover { r: 3, edges: de(t, "cover")? };
                c.verify(&g)?;
                if p.size() != as_usize(t, "nu")? || c.size() != as_usize(t, "tau")? {
                    return Err(Error::InvalidInput("tightest graph sizes differ from certificates".into()));
                }
                out.checked.push(format!("tightest graph: packing {} and cover {}", p.size(), c.size()));
            }
        }
        other => return Err(Error::InvalidInput(format!("unknown report command {other:?}"))),
    }
    Ok(out)
}

fn verify_decomposition(c: &EdgeColouring, profile: &CliqueProfile, res: &Value, out: &mut Verification) -> Result<()> {
    let d: Decomposition = de(res, "decomposition")?;
    d.verify(c, profile)?;
    let claimed = as_usize(res, "value")?;
    if claimed != d.len() {
        return Err(mismatch("decomposition size", claimed, d.len()));
    }
    out.checked.push(format!("decomposition into {claimed} parts"));
    Ok(())
}

/// Summary of a verification as a JSON value.
pub fn verification_json(v: &Verification) -> Value {
    let mut map = BTreeMap::new();
    map.insert("checked", json!(v.checked));
    map.insert("uncertified", json!(v.uncertified));
    json!(map)
}

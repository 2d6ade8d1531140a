//! Lists the r-cliques of a graph given in graph6.
//!
//!     cargo run --example clique_enumeration -- 'F~~~w' 4

use clique_decomp::cliques::{count_cliques, enumerate_cliques, CliqueSystem};
use clique_decomp::graph6::parse_graph6;

fn main() -> clique_decomp::Result<()> {
    let mut args = std::env::args().skip(1);
    let g6 = args.next().unwrap_or_else(|| "D~{".to_string());
    let r: usize = args.next().map_or(3, |s| s.parse().expect("r must be an integer"));

    let g = parse_graph6(&g6)?;
    println!("{} vertices, {} edges", g.n(), g.edge_count());
    for s in 2..=g.n().min(6) {
        println!("  K_{s} count: {}", count_cliques(&g, s));
    }

    let cliques = enumerate_cliques(&g, r);
    println!("{} cliques of size {r}:", cliques.len());
    for c in &cliques {
        println!("  {:?}", c.vertices());
    }

    // The incidence structure the packing and covering solvers work on.
    let sys = CliqueSystem::new(&g, r)?;
    let active = sys.active_edges();
    println!("{} of {} edges lie in some K_{r}", active.len(), sys.edges.len());
    Ok(())
}

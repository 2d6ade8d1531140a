//! Exact K_r-packings and K_r-covers, with the chain nu <= tau <= C(r,2) nu.
//!
//!     cargo run --release --example packing_covering -- 'F~~~w' 3

use clique_decomp::graph::pair_count;
use clique_decomp::graph6::parse_graph6;
use clique_decomp::packing::{max_packing_exact_with_stats, min_cover_exact_with_stats, packing_edges_cover};

fn main() -> clique_decomp::Result<()> {
    let mut args = std::env::args().skip(1);
    let g = parse_graph6(&args.next().unwrap_or_else(|| "F~~~w".to_string()))?;
    let r: usize = args.next().map_or(3, |s| s.parse().expect("r must be an integer"));

    let (packing, packing_nodes) = max_packing_exact_with_stats(&g, r)?;
    packing.verify(&g)?;
    println!("nu_{r} = {} ({packing_nodes} search nodes)", packing.size());
    for c in &packing.members {
        println!("  {:?}", c.vertices());
    }

    let (cover, cover_nodes) = min_cover_exact_with_stats(&g, r)?;
    cover.verify(&g)?;
    println!("tau_{r} = {} ({cover_nodes} search nodes): {:?}", cover.size(), cover.edges);

    let all_edges = packing_edges_cover(&g, r)?;
    println!("edges of a maximal packing cover too: {} edges", all_edges.size());

    let (nu, tau) = (packing.size(), cover.size());
    assert!(nu <= tau && tau <= pair_count(r) * nu);
    println!("{nu} <= {tau} <= {}", pair_count(r) * nu);
    Ok(())
}

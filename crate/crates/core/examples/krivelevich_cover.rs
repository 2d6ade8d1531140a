//! Rounds a fractional triangle cover to an integral one of at most twice
//! its value, printing each step of the loop.
//!
//!     cargo run --release --example krivelevich_cover -- 12 0.6 7

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use clique_decomp::graph6::write_graph6;
use clique_decomp::krivelevich::{krivelevich_cover, Step};
use clique_decomp::packing::min_cover_exact;
use clique_decomp::report::random_graph;

fn main() -> clique_decomp::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let n: usize = arg(0, "10").parse().expect("n");
    let p: f64 = arg(1, "0.6").parse().expect("p");
    let seed: u64 = arg(2, "1").parse().expect("seed");

    let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, p)?;
    println!("G = {} ({} edges)", write_graph6(&g), g.edge_count());

    let k = krivelevich_cover(&g)?;
    for step in &k.steps {
        match step {
            Step::ParentEdge { edge, swept, tau_star } => {
                println!("zero-weight edge {edge:?} (tau* = {tau_star}): swept {swept:?}")
            }
            Step::Bipartite { edges, tau_star, remaining_edges } => println!(
                "all weights positive (tau* = {tau_star} = {remaining_edges}/3): {} non-cut edges",
                edges.len()
            ),
        }
    }
    let exact = min_cover_exact(&g, 3)?;
    println!(
        "cover of size {} <= 2 tau* = {}; optimum {}; {} LP pivots",
        k.cover.size(),
        &k.tau_star * num_rational::BigRational::from_integer(2.into()),
        exact.size(),
        k.lp_pivots
    );
    Ok(())
}

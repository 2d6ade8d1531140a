//! Fractional cover and fractional packing solved as two separate exact
//! linear programs, then checked against each other.
//!
//!     cargo run --release --example lp_duality -- 'F~~~w' 4

use clique_decomp::fractional::{complementary_slackness_check, duality_certificate};
use clique_decomp::graph6::parse_graph6;

fn main() -> clique_decomp::Result<()> {
    let mut args = std::env::args().skip(1);
    let g = parse_graph6(&args.next().unwrap_or_else(|| "D~{".to_string()))?;
    let r: usize = args.next().map_or(3, |s| s.parse().expect("r must be an integer"));

    let d = duality_certificate(&g, r)?;
    println!("tau*_{r} = {}  ({} pivots)", d.tau_star(), d.cover.pivots);
    println!("nu*_{r}  = {}  ({} pivots)", d.nu_star(), d.packing.pivots);

    println!("cover weights:");
    for (e, w) in d.cover.edges.iter().zip(&d.cover.weights) {
        println!("  {e:?}: {w}");
    }
    println!("packing weights:");
    for (c, w) in d.packing.cliques.iter().zip(&d.packing.weights) {
        println!("  {:?}: {w}", c.vertices());
    }

    d.cover.check_certificate()?;
    d.packing.check_certificate()?;
    println!("complementary slackness: {}", complementary_slackness_check(&g, r, &d.cover, &d.packing)?);
    Ok(())
}

//! Turán graphs and blow-ups of an edge-coloured K_5.
//!
//!     cargo run --example turan_blowup -- 15

use clique_decomp::cliques::is_kr_free;
use clique_decomp::construct::{turan_blow_up, turan_class_sizes, turan_graph, turan_number};
use clique_decomp::graph6::write_graph6;
use clique_decomp::ramsey::c5_base_colouring;

fn main() -> clique_decomp::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(10), |s| s.parse()).expect("n must be an integer");

    for p in 2..=5 {
        let g = turan_graph(n, p)?;
        println!(
            "T_{p}({n}): classes {:?}, {} edges (t_{p}({n}) = {}), graph6 {}",
            turan_class_sizes(n, p)?,
            g.edge_count(),
            turan_number(n, p)?,
            write_graph6(&g)
        );
    }

    // Each colour of the base is a 5-cycle, so neither colour class of the
    // blow-up has a triangle.
    let blown = turan_blow_up(&c5_base_colouring(), n)?;
    for i in 1..=2 {
        let class = blown.colour_class(i)?;
        println!("colour {i}: {} edges, triangle-free: {}", class.edge_count(), is_kr_free(&class, 3));
    }
    println!("\n{}", blown.to_text());
    Ok(())
}

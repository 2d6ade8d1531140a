//! Monochromatic clique decompositions: for one colouring, and the worst
//! case over every colouring of a small graph.
//!
//!     cargo run --release --example decomposition -- 'D~{' 3,3

use clique_decomp::colouring::CliqueProfile;
use clique_decomp::decomposition::{phi_coloured, phi_k_graph, phi_single, Part, PhiOptions};
use clique_decomp::graph6::parse_graph6;
use clique_decomp::ramsey::c5_base_colouring;

fn main() -> clique_decomp::Result<()> {
    let mut args = std::env::args().skip(1);
    let g = parse_graph6(&args.next().unwrap_or_else(|| "D~{".to_string()))?;
    let profile: CliqueProfile = args.next().unwrap_or_else(|| "3,3".to_string()).parse()?;

    let (single, _) = phi_single(&g, profile.sizes()[0])?;
    println!("uncoloured, K_{}: {single} parts", profile.sizes()[0]);

    let (c5, d) = phi_coloured(&c5_base_colouring(), &CliqueProfile::new(vec![3, 3])?)?;
    println!("the C5/C5 colouring of K_5 needs {c5} parts (no monochromatic triangle)");
    assert_eq!(d.len(), c5);

    let res = phi_k_graph(&g, &profile, &PhiOptions::default())?;
    println!(
        "worst of {} colourings for profile {profile}: {} parts (colouring #{})",
        res.colourings_checked, res.value, res.worst_index
    );
    res.decomposition.verify(&res.worst, &profile)?;
    for part in &res.decomposition.parts {
        match part {
            Part::Edge((u, v)) => println!("  edge {u}-{v} (colour {})", res.worst.colour(*u, *v).unwrap()),
            Part::Clique { colour, vertices } => println!("  colour-{colour} clique {vertices:?}"),
        }
    }
    Ok(())
}

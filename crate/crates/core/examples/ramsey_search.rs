//! Ramsey table lookups and witness colourings.
//!
//!     cargo run --release --example ramsey_search -- 3,4 8

use clique_decomp::colouring::CliqueProfile;
use clique_decomp::ramsey::{ramsey_table, ramsey_witness_search_with, verify_colouring_avoids, SearchOptions};

fn main() -> clique_decomp::Result<()> {
    for (profile, value) in ramsey_table() {
        println!("R{profile:?} = {value}");
    }

    let mut args = std::env::args().skip(1);
    let profile: CliqueProfile = args.next().unwrap_or_else(|| "3,3".to_string()).parse()?;
    let s: usize = args.next().map_or(5, |a| a.parse().expect("s must be an integer"));

    let (found, stats) = ramsey_witness_search_with(&profile, s, &SearchOptions::default())?;
    match found {
        Some(c) => {
            assert!(verify_colouring_avoids(&c, &profile)?.is_none());
            println!("\nK_{s} has a colouring avoiding {profile} ({} nodes):\n{}", stats.nodes, c.to_text());
        }
        None => println!("\nevery colouring of K_{s} contains a forbidden clique ({} nodes)", stats.nodes),
    }
    Ok(())
}

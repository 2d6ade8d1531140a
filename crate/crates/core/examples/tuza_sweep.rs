//! Checks tau_3 <= 2 nu_3 over every labelled graph of a given order, or
//! over seeded random graphs.
//!
//!     cargo run --release --example tuza_sweep -- 6
//!     cargo run --release --example tuza_sweep -- 200 10 0.5 42

use clique_decomp::report::{tuza_sweep, SweepSource};

fn main() -> clique_decomp::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let source = match args.as_slice() {
        [count, n, p, seed] => SweepSource::Random {
            count: count.parse().expect("count"),
            n: n.parse().expect("n"),
            p: p.parse().expect("p"),
            seed: seed.parse().expect("seed"),
        },
        [n] => SweepSource::AllLabelled(n.parse().expect("n")),
        _ => SweepSource::AllLabelled(5),
    };
    print!("{}", tuza_sweep(&source)?.to_text());
    Ok(())
}

//! Acceptance criteria. Runs as a plain binary (`harness = false`) so that
//! each criterion prints exactly one PASS/FAIL line; any failure makes the
//! process exit nonzero.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clique_decomp::cliques::is_kr_free;
use clique_decomp::colouring::CliqueProfile;
use clique_decomp::construct::{complete_graph, turan_blow_up, turan_number};
use clique_decomp::decomposition::{phi_coloured, phi_n_over_stream, phi_single, PhiOptions};
use clique_decomp::fractional::duality_certificate;
use clique_decomp::graph::labelled_graphs;
use clique_decomp::krivelevich::krivelevich_cover;
use clique_decomp::lp::Rational;
use clique_decomp::packing::{max_packing_exact, min_cover_exact};
use clique_decomp::ramsey::{all_ramsey_witnesses, is_hamiltonian_cycle, ramsey_witness_search, verify_colouring_avoids};
use clique_decomp::report::random_graph;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn profile(s: &[usize]) -> CliqueProfile {
    CliqueProfile::new(s.to_vec()).unwrap()
}

/// Maximum of phi(G, K_r) over all labelled graphs on n vertices.
fn max_phi_over_labelled(n: usize, r: usize) -> usize {
    labelled_graphs(n)
        .unwrap()
        .map(|g| phi_single(&g, r).unwrap().0)
        .max()
        .unwrap()
}

fn extremal_phi(r: usize, ns: &[usize]) -> Outcome {
    let mut values = Vec::new();
    for &n in ns {
        let got = max_phi_over_labelled(n, r);
        let want = turan_number(n, r - 1).unwrap();
        values.push(format!("n={n}: {got}"));
        ensure(got == want, || format!("n={n}: max phi = {got}, t_{}({n}) = {want}", r - 1))?;
    }
    Ok(values.join(", "))
}

fn criterion_1() -> Outcome {
    extremal_phi(3, &[3, 4, 5, 6])
}

fn criterion_2() -> Outcome {
    extremal_phi(4, &[4, 5, 6])
}

fn criterion_3() -> Outcome {
    let p = profile(&[3, 3]);
    let w = ramsey_witness_search(&p, 5).unwrap().ok_or("no witness on K_5")?;
    ensure(verify_colouring_avoids(&w, &p).unwrap().is_none(), || "K_5 witness has a monochromatic triangle".into())?;
    ensure(ramsey_witness_search(&p, 6).unwrap().is_none(), || "found an avoiding colouring of K_6".into())?;
    let all = all_ramsey_witnesses(&p, 5, usize::MAX).unwrap();
    for c in &all {
        for i in 1..=2 {
            ensure(is_hamiltonian_cycle(&c.colour_class(i).unwrap()), || {
                format!("colour {i} of {c:?} is not a 5-cycle")
            })?;
        }
    }
    Ok(format!("{} witnesses on K_5, all C5/C5; none on K_6", all.len()))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for n in 0..=5 {
        for g in labelled_graphs(n).unwrap() {
            let d = duality_certificate(&g, 3).map_err(|e| e.to_string())?;
            ensure(d.equal && d.tau_star() == d.nu_star(), || format!("{g:?}"))?;
            checked += 1;
        }
    }
    let mut values = Vec::new();
    for n in 4..=7 {
        for r in [3, 4] {
            let d = duality_certificate(&complete_graph(n).unwrap(), r).map_err(|e| e.to_string())?;
            ensure(d.tau_star() == d.nu_star(), || format!("K_{n}, r={r}"))?;
            values.push(format!("K{n}/r{r}={}", d.tau_star()));
            checked += 1;
        }
    }
    Ok(format!("{checked} program pairs equal; {}", values.join(" ")))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = Rational::zero();
    let mut count = 0;
    for &p in &[0.3, 0.5, 0.7] {
        for _ in 0..200 {
            let g = random_graph(&mut rng, 12, p).unwrap();
            let k = krivelevich_cover(&g).map_err(|e| e.to_string())?;
            let size = Rational::from_integer(k.cover.size().into());
            ensure(size <= &k.tau_star * Rational::from_integer(2.into()), || {
                format!("|F| = {} > 2 tau* = 2 * {}", k.cover.size(), k.tau_star)
            })?;
            ensure(is_kr_free(&g.without_edges(&k.cover.edges), 3), || "cover leaves a triangle".into())?;
            if !k.tau_star.is_zero() {
                let ratio = size / &k.tau_star;
                if ratio > worst {
                    worst = ratio;
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} graphs, largest |F|/tau* = {worst}"))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    let mut tight = 0;
    for n in 0..=6 {
        for g in labelled_graphs(n).unwrap() {
            let nu = max_packing_exact(&g, 3).unwrap().size();
            let tau = min_cover_exact(&g, 3).unwrap().size();
            ensure(tau <= 2 * nu, || format!("violation: {g:?} tau={tau} nu={nu}"))?;
            if nu > 0 && tau == 2 * nu {
                tight += 1;
            }
            count += 1;
        }
    }
    Ok(format!("{count} graphs, {tight} with tau_3 = 2 nu_3"))
}

fn criterion_7() -> Outcome {
    let p = profile(&[3, 3]);
    let base = clique_decomp::ramsey::c5_base_colouring();
    let mut values = Vec::new();
    for n in [5, 10, 15] {
        let b = turan_blow_up(&base, n).unwrap();
        for i in 1..=2 {
            ensure(is_kr_free(&b.colour_class(i).unwrap(), 3), || format!("n={n}: colour {i} has a triangle"))?;
        }
        let (value, d) = phi_coloured(&b, &p).unwrap();
        d.verify(&b, &p).map_err(|e| e.to_string())?;
        let want = turan_number(n, 5).unwrap();
        ensure(value == want, || format!("n={n}: phi = {value}, t_5 = {want}"))?;
        values.push(format!("n={n}: {value}"));
    }
    Ok(values.join(", "))
}

fn criterion_8() -> Outcome {
    let p = profile(&[3, 3]);
    let options = PhiOptions { budget: 1 << 10, ..Default::default() };
    let graphs = labelled_graphs(5).unwrap().map(Ok);
    let res = phi_n_over_stream(graphs, &p, &options).map_err(|e| e.to_string())?;
    let want = turan_number(5, 5).unwrap();
    ensure(res.value == want, || format!("phi_2(5) = {}, t_5(5) = {want}", res.value))?;
    let k5 = complete_graph(5).unwrap();
    let k5_index = labelled_graphs(5).unwrap().position(|g| g == k5).unwrap();
    ensure(res.argmaxes.contains(&k5_index), || "K_5 is not an argmax".into())?;
    Ok(format!(
        "value {} over {} graphs, {} argmaxes including K_5",
        res.value,
        res.graphs_processed,
        res.argmaxes.len()
    ))
}

fn criterion_9() -> Outcome {
    let p = profile(&[3, 3]);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for trial in 0..100 {
        let n = rng.random_range(3..=6);
        let m = rng.random_range(0..=9.min(n * (n - 1) / 2));
        let c = common::random_coloured(&mut rng, n, m, 2);
        let (value, d) = phi_coloured(&c, &p).unwrap();
        d.verify(&c, &p).map_err(|e| e.to_string())?;
        let oracle = common::brute_force_phi_triangles(&c);
        ensure(value == oracle, || format!("trial {trial}: phi_coloured = {value}, oracle = {oracle}, {c:?}"))?;
    }
    Ok("100 coloured graphs agree with the partition oracle".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "phi(n, K3) = t_2(n) for n = 3..6", criterion_1, 120),
        (2, "phi(n, K4) = t_3(n) for n = 4..6", criterion_2, 300),
        (3, "R(3,3) = 6 by exhaustion; K5 witnesses are C5/C5", criterion_3, 60),
        (4, "fractional cover = fractional packing", criterion_4, 300),
        (5, "cover rounding within 2 tau_3* on G(12, p)", criterion_5, 300),
        (6, "tau_3 <= 2 nu_3 on all graphs with n <= 6", criterion_6, 600),
        (7, "blow-up of C5/C5 attains t_5(n)", criterion_7, 60),
        (8, "phi_2(5, (K3, K3)) = t_5(5) with K5 an argmax", criterion_8, 600),
        (9, "phi_coloured matches the partition oracle", criterion_9, 120),
    ];
    let mut failures = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("{detail}; took {elapsed:.1?}, limit {limit}s"))
            } else {
                Ok(detail)
            }
        });
        match outcome {
            Ok(detail) => println!("criterion {id}: PASS  {name} [{detail}] ({elapsed:.2?})"),
            Err(why) => {
                failures += 1;
                println!("criterion {id}: FAIL  {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all 9 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}

//! One line per acceptance criterion; exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use gauss_quad::GaussLegendre;
use harmonia_cli::{defaults, run, CATALOG};

/// `‖D_n‖_1` on the normalized torus, integrated lobe by lobe between the
/// zeros of `sin((n + 1/2)t)`.
fn dirichlet_l1_quadrature(n: usize) -> f64 {
    let rule = GaussLegendre::new(24).expect("degree is valid");
    let w = n as f64 + 0.5;
    let lobe = PI / w;
    let d = |t: f64| ((w * t).sin() / (t / 2.0).sin()).abs();
    // |D_n| is even; integrate over (0, π]
    let mut total = 0.0;
    let mut a = 0.0;
    while a < PI {
        let b = (a + lobe).min(PI);
        total += rule.integrate(a, b, d);
        a = b;
    }
    total / PI
}

/// Increment of the quadrature norm per doubling at large `n`.
fn oracle_constant() -> f64 {
    dirichlet_l1_quadrature(1 << 15) - dirichlet_l1_quadrature(1 << 14)
}

struct Outcome {
    ok: bool,
    note: String,
}

fn table_outcome(name: &str) -> Outcome {
    let cfg = defaults(name).expect("catalog entry");
    match run(&cfg) {
        Ok(t) => {
            let pass = t.column("pass").unwrap_or_default();
            let fails = pass.iter().filter(|&&v| v != 1.0).count();
            Outcome {
                ok: !pass.is_empty() && fails == 0,
                note: format!("{name}: {} rows, {fails} failing", pass.len()),
            }
        }
        Err(e) => Outcome { ok: false, note: format!("{name}: error {e}") },
    }
}

fn criterion_three(base: Outcome) -> Outcome {
    let cfg = defaults("dirichlet_l1").expect("catalog entry");
    let table = run(&cfg).expect("dirichlet_l1 runs");
    let measured = *table.column("increment").unwrap().last().unwrap();
    let oracle = oracle_constant();
    let rel = (measured / oracle - 1.0).abs();
    Outcome {
        ok: base.ok && rel <= 0.05,
        note: format!("{}; last increment {measured:.5} vs quadrature {oracle:.5} (rel {rel:.3})", base.note),
    }
}

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for c in 1..=17u8 {
        let Some(e) = CATALOG.iter().find(|e| e.criterion == Some(c)) else {
            println!("criterion {c:>2}: FAIL (no experiment)");
            failed.push(c);
            continue;
        };
        let start = Instant::now();
        let mut out = table_outcome(e.name);
        if c == 3 {
            out = criterion_three(out);
        }
        let secs = start.elapsed().as_secs_f64();
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        println!("criterion {c:>2}: {verdict}  {} [{secs:.2}s]", out.note);
        if !out.ok {
            failed.push(c);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 17 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}

//! Renyi entropies across orders, including the special points (alpha = 0,
//! 1, infinity) and the momentum-space convergence threshold below which
//! the entropy stops existing.
//!
//! Run with: cargo run --release --example renyi_scan

use hyperdot::measures::{renyi, thresholds, EvalOpts, RenyiStatus};
use hyperdot::systems::{QuantumNumbers, Space, SystemSpec};

fn main() {
    let opts = EvalOpts { rel_tol: 1e-9 };
    let ground = QuantumNumbers { n: 1, l: 0 };
    let spec = SystemSpec::dirichlet(3);

    println!("hard wall, d = 3, ground state");
    println!("{:>8} {:>16} {:>16}", "alpha", "R_rho", "R_gamma");
    for alpha in [0.0, 0.25, 0.5, 1.0, 2.0, 4.0, f64::INFINITY] {
        let rho = renyi(&spec, ground, Space::Position, alpha, &opts).unwrap();
        let gamma = renyi(&spec, ground, Space::Momentum, alpha, &opts).unwrap();
        let show = |pt: &hyperdot::measures::RenyiPoint| match pt.status {
            RenyiStatus::Finite => format!("{:>16.10}", pt.value),
            RenyiStatus::Diverged => format!("{:>16}", "diverged"),
            RenyiStatus::BelowThreshold => format!("{:>16}", "no value"),
        };
        println!("{alpha:>8.3} {} {}", show(&rho), show(&gamma));
    }

    // alpha = 0 counts the support volume, alpha = infinity tracks the
    // density supremum, and the momentum series only converges for orders
    // above d/(d+3) (hard wall) or d/(d+1) (reflecting wall)
    for spec in [
        SystemSpec::dirichlet(3),
        SystemSpec::neumann(3),
        SystemSpec::dirichlet(7),
        SystemSpec::hydrogen(3),
    ] {
        let (edge, window_end) = thresholds(&spec, 0);
        println!(
            "{} d={}: momentum orders must exceed {:.6}{}",
            spec.label(),
            spec.d,
            edge,
            match window_end {
                Some(a) => format!(" (conjugate window ends at alpha = {a:.6})"),
                None => String::from(" (conjugate window never closes)"),
            }
        );
    }

    // just above the threshold the value is finite but enormous; right at
    // it the evaluator reports the divergence instead of spinning forever
    let spec = SystemSpec::neumann(3);
    let edge = thresholds(&spec, 0).0;
    let near = renyi(&spec, ground, Space::Momentum, edge * 1.02, &EvalOpts { rel_tol: 1e-6 })
        .unwrap();
    let at = renyi(&spec, ground, Space::Momentum, edge, &opts).unwrap();
    println!();
    println!("reflecting wall d=3 threshold {edge:.4}:");
    println!("  R_gamma({:.4}) = {:.4}", edge * 1.02, near.value);
    println!("  R_gamma({edge:.4}) -> {:?}", at.status);
}

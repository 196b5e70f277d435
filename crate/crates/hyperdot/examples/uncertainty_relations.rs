//! The entropic uncertainty relations at work: conjugate Renyi sums against
//! their order-dependent bound, saturation by ground states at alpha = 1/2,
//! and the Tsallis-side identity at both ends of its window.
//!
//! Run with: cargo run --release --example uncertainty_relations

use hyperdot::measures::EvalOpts;
use hyperdot::systems::{QuantumNumbers, SystemSpec};
use hyperdot::uncertainty::{renyi_sum, shannon_check, tsallis_sides, RelationCheck};

fn show(c: &RelationCheck) {
    println!(
        "  {:>9} d={} n={} alpha={:<6.4} left {:>12.6} right {:>12.6} slack {:>10.3e}  [{}]",
        c.kind.label(),
        c.spec.d,
        c.qn.n,
        c.alpha,
        c.left,
        c.right,
        c.slack(),
        c.verdict().label()
    );
}

fn main() {
    let tight = EvalOpts { rel_tol: 1e-10 };
    let ground = QuantumNumbers { n: 1, l: 0 };
    let excited = QuantumNumbers { n: 2, l: 0 };

    println!("Shannon sums vs d (1 + ln pi):");
    for spec in [
        SystemSpec::dirichlet(3),
        SystemSpec::neumann(3),
        SystemSpec::hydrogen(3),
    ] {
        show(&shannon_check(&spec, ground, &tight).unwrap());
    }

    // every ground state saturates the conjugate-order relation at
    // alpha = 1/2 — the sum collapses onto d ln 2pi exactly — while excited
    // states keep a strictly positive margin
    println!();
    println!("Renyi sums at the saturation order alpha = 1/2:");
    for spec in [
        SystemSpec::dirichlet(3),
        SystemSpec::neumann(4),
        SystemSpec::hydrogen(3),
    ] {
        show(&renyi_sum(&spec, ground, 0.5, &tight).unwrap());
        show(&renyi_sum(&spec, excited, 0.5, &tight).unwrap());
    }

    println!();
    println!("moving the order along the window [1/2, alpha_R):");
    let spec = SystemSpec::neumann(3);
    for alpha in [0.5, 0.8, 1.0, 1.2, 1.4] {
        let opts = EvalOpts { rel_tol: 1e-7 };
        show(&renyi_sum(&spec, ground, alpha, &opts).unwrap());
    }

    println!();
    println!("Tsallis sides (equal at both window ends, ordered between):");
    let spec = SystemSpec::dirichlet(3);
    for alpha in [0.5, 0.75, 1.0] {
        show(&tsallis_sides(&spec, ground, alpha, &tight).unwrap());
    }
}

//! Closed-form ground-state Renyi entropies of the d-dimensional
//! one-electron ion, cross-checked against direct quadrature, plus the two
//! quantities they make exact: the order where the momentum entropy peaks
//! and the large-order limit of the conjugate sum.
//!
//! Run with: cargo run --release --example hydrogen_closed

use hyperdot::measures::{renyi, EvalOpts};
use hyperdot::systems::{QuantumNumbers, Space, SystemSpec};
use hyperdot::uncertainty::{
    hydrogen_alpha_max, hydrogen_renyi_closed, hydrogen_renyi_sum_closed, hydrogen_sum_asymptote,
};

fn main() {
    let opts = EvalOpts { rel_tol: 1e-10 };
    let ground = QuantumNumbers { n: 1, l: 0 };

    println!("closed form vs quadrature (d = 3 ground state):");
    for (alpha, space) in [
        (0.75, Space::Position),
        (2.0, Space::Position),
        (0.8, Space::Momentum),
        (2.0, Space::Momentum),
    ] {
        let closed = hydrogen_renyi_closed(3, alpha, space).unwrap();
        let quad = renyi(&SystemSpec::hydrogen(3), ground, space, alpha, &opts)
            .unwrap()
            .value;
        println!(
            "  {:?} alpha={alpha:<5}: closed {closed:>15.10}  quadrature {quad:>15.10}",
            space
        );
    }

    // R_rho(2) = ln 8pi for d = 3: one of the few literal constants
    let r2 = hydrogen_renyi_closed(3, 2.0, Space::Position).unwrap();
    println!();
    println!(
        "R_rho(2) = {r2:.12} vs ln 8pi = {:.12}",
        (8.0 * std::f64::consts::PI).ln()
    );

    // unlike the wells, the ion's momentum entropy is not monotone in the
    // order: it rises to a maximum before the large-order tail takes over
    println!();
    println!("order of the momentum-entropy maximum:");
    for d in [3, 4, 5, 8] {
        println!("  d={d}: alpha_max = {:.6}", hydrogen_alpha_max(d).unwrap());
    }

    // the conjugate sum settles on d ln 2pi as alpha -> infinity; compare a
    // large finite order against the limit
    println!();
    for d in [3, 4] {
        let far = hydrogen_renyi_sum_closed(d, 1e6).unwrap();
        let limit = hydrogen_sum_asymptote(d).unwrap();
        println!(
            "d={d}: sum at alpha=1e6 is {far:.8}, asymptote {limit:.8} \
             (d ln 2pi = {:.8})",
            d as f64 * (2.0 * std::f64::consts::PI).ln()
        );
    }
}

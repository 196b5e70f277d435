//! Sample the radial profiles of the three families in both spaces.
//!
//! Run with: cargo run --example waveforms

use hyperdot::systems::{QuantumNumbers, Space, SystemSpec};

fn main() {
    let ground = QuantumNumbers { n: 1, l: 0 };
    let specs = [
        SystemSpec::dirichlet(3),
        SystemSpec::neumann(3),
        SystemSpec::hydrogen(3),
    ];

    println!("position profiles Rbar(x) (dimensionless radius)");
    print!("{:>6}", "x");
    for spec in &specs {
        print!("{:>14}", spec.label());
    }
    println!();
    for i in 0..=10 {
        let x = i as f64 / 10.0;
        print!("{x:>6.2}");
        for spec in &specs {
            let p = spec.profile(ground, Space::Position).unwrap();
            print!("{:>14.6}", p.value_ln(x).to_f64());
        }
        println!();
    }

    // the hard-wall profile vanishes at the wall, the reflecting one has a
    // flat ground state, and the ion decays exponentially
    println!();
    println!("momentum profiles Kbar(z)");
    print!("{:>6}", "z");
    for spec in &specs {
        print!("{:>14}", spec.label());
    }
    println!();
    for i in 0..=10 {
        let z = 1.5 * i as f64;
        print!("{z:>6.2}");
        for spec in &specs {
            let p = spec.profile(ground, Space::Momentum).unwrap();
            print!("{:>14.6}", p.value_ln(z).to_f64());
        }
        println!();
    }

    // the momentum profile of a confined state has a removable singularity
    // at the spectral parameter; values right next to it stay smooth
    let p = SystemSpec::dirichlet(3)
        .profile(ground, Space::Momentum)
        .unwrap();
    let j = std::f64::consts::PI;
    println!();
    println!("hard-wall d = 3 near the resonance z = pi:");
    for z in [j - 1e-3, j - 1e-7, j, j + 1e-7, j + 1e-3] {
        println!("  Kbar({z:.9}) = {:.12}", p.value_ln(z).to_f64());
    }
}

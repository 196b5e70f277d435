//! The zero chains behind the well spectra, and the persistent cache that
//! stores them across runs (what `hyperdot zeros` manages).
//!
//! Run with: cargo run --example bessel_zeros

use hyperdot::specfun::{bessel_zero, global_zeros, neumann_zero, ZeroTable};

fn main() {
    // hard-wall levels in d dimensions sit at the zeros of J_(l + d/2 - 1)
    println!("first zeros of J_nu:");
    for nu in [0.5, 1.0, 2.5, 10.0] {
        let zeros: Vec<String> = (1..=4)
            .map(|n| format!("{:.6}", bessel_zero(nu, n).unwrap()))
            .collect();
        println!("  nu = {nu:>4}: {}", zeros.join(", "));
    }
    // at half-integer order they are elementary: j_(1/2, n) = n pi
    let j = bessel_zero(0.5, 3).unwrap();
    println!("  j_(1/2,3) / pi = {:.15}", j / std::f64::consts::PI);

    // reflecting-wall levels use the extremum condition instead; the ground
    // chain starts at zero (the flat state costs no energy)
    println!();
    println!("reflecting-wall spectral parameters, d = 5:");
    for l in 0..=2 {
        let zeros: Vec<String> = (1..=4)
            .map(|n| format!("{:.6}", neumann_zero(5, l, n).unwrap()))
            .collect();
        println!("  l = {l}: {}", zeros.join(", "));
    }

    // chains computed in this process accumulate in a global table that can
    // be saved and reloaded; files round-trip every bit of every zero
    let path = std::env::temp_dir().join("hyperdot-example-zeros.txt");
    global_zeros().save(&path).unwrap();
    let reloaded = ZeroTable::load(&path).unwrap();
    println!();
    println!(
        "cached {} chains entries at {}",
        reloaded.entry_count(),
        path.display()
    );
    let again = reloaded.bessel_zero(10.0, 4).unwrap();
    println!(
        "reloaded j_(10,4) = {again:.15} (identical: {})",
        again == bessel_zero(10.0, 4).unwrap()
    );
    let _ = std::fs::remove_file(path);
}

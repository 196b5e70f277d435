//! Round-trip between the two spaces: the momentum profiles shipped with each
//! system must agree with a direct Fourier-Bessel transform of the position
//! ones, and both bases must be orthonormal on their own.
//!
//! Run with: cargo run --example momentum_transform

use hyperdot::systems::{
    fourier_consistency, momentum_transform, radial_overlap, QuantumNumbers, Space, SystemSpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        SystemSpec::dirichlet(3),
        SystemSpec::neumann(4),
        SystemSpec::hydrogen(3),
    ];

    // pointwise: transform the position profile and compare against the
    // closed-form momentum profile at a few representative momenta
    println!("pointwise transform residuals (n = 2, l = 1):");
    let qn = QuantumNumbers { n: 2, l: 1 };
    for spec in &specs {
        let pos = spec.profile(qn, Space::Position)?;
        let mom = spec.profile(qn, Space::Momentum)?;
        let mut worst = 0.0f64;
        for z in [0.3, 1.2, 4.0] {
            let via_integral = momentum_transform(&pos, z, 1e-10)?;
            let direct = mom.value_ln(z).to_f64();
            worst = worst.max((via_integral - direct).abs());
        }
        println!("  {:<22} worst |delta| = {:.3e}", spec.label(), worst);
    }

    // same check, packaged: worst relative residual over a momentum grid
    println!();
    println!("fourier_consistency over a grid:");
    for spec in &specs {
        let r = fourier_consistency(spec, qn, &[0.4, 1.7, 6.3], 1e-10)?;
        println!("  {:<22} {:.3e}", spec.label(), r);
    }

    // orthonormality holds in momentum space too, even though the densities
    // only decay like a power of z there
    println!();
    println!("momentum-space overlaps, reflecting wall d = 4, l = 0:");
    let spec = SystemSpec::neumann(4);
    for n in 1..=3u32 {
        for m in n..=3u32 {
            let p = spec.profile(QuantumNumbers { n, l: 0 }, Space::Momentum)?;
            let q = spec.profile(QuantumNumbers { n: m, l: 0 }, Space::Momentum)?;
            let ov = radial_overlap(&p, &q, 1e-9)?;
            println!("  <{n}|{m}> = {ov:+.12}");
        }
    }
    Ok(())
}

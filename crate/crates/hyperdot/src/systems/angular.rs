//! Angular normalization shared by every state considered here: the surface
//! area of the unit (d-1)-sphere and the constant ground harmonic built from
//! it. Full densities are `rho(r) = Rbar(r)^2 / Omega_d`, i.e. the angular
//! factor is the uniform one; orbital momentum enters through the radial
//! profiles only.

use crate::specfun::gamma::ln_gamma;

/// ln of the surface area of S^(d-1): Omega_d = 2 pi^(d/2) / Gamma(d/2).
pub fn ln_sphere_area(d: u32) -> f64 {
    let df = d as f64;
    std::f64::consts::LN_2 + 0.5 * df * std::f64::consts::PI.ln() - ln_gamma(0.5 * df)
}

/// ln |Y_0|^2 = -ln Omega_d: squared magnitude of the constant harmonic.
pub fn ln_ground_harmonic_sq(d: u32) -> f64 {
    -ln_sphere_area(d)
}

/// |Y_0|^2 = 1 / Omega_d as a plain value: the uniform angular density that
/// multiplies every l = 0 radial density.
pub fn ground_harmonic_density(d: u32) -> f64 {
    ln_ground_harmonic_sq(d).exp()
}

/// ln of the volume of the unit d-ball: V_d = Omega_d / d.
pub fn ln_ball_volume(d: u32) -> f64 {
    ln_sphere_area(d) - (d as f64).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_dimensional_sphere_areas() {
        let pi = std::f64::consts::PI;
        assert_relative_eq!(ln_sphere_area(2).exp(), 2.0 * pi, max_relative = 1e-14);
        assert_relative_eq!(ln_sphere_area(3).exp(), 4.0 * pi, max_relative = 1e-14);
        assert_relative_eq!(ln_sphere_area(4).exp(), 2.0 * pi * pi, max_relative = 1e-14);
        // d = 6: pi^3
        assert_relative_eq!(ln_sphere_area(6).exp(), pi.powi(3), max_relative = 1e-13);
    }

    #[test]
    fn harmonic_is_inverse_area() {
        for d in [2, 3, 7, 25, 100] {
            assert_relative_eq!(
                ln_ground_harmonic_sq(d),
                -ln_sphere_area(d),
                max_relative = 1e-15
            );
        }
        let pi = std::f64::consts::PI;
        assert_relative_eq!(
            ground_harmonic_density(3),
            1.0 / (4.0 * pi),
            max_relative = 1e-14
        );
    }

    #[test]
    fn ball_volumes() {
        let pi = std::f64::consts::PI;
        assert_relative_eq!(ln_ball_volume(2).exp(), pi, max_relative = 1e-14);
        assert_relative_eq!(
            ln_ball_volume(3).exp(),
            4.0 * pi / 3.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            ln_ball_volume(4).exp(),
            pi * pi / 2.0,
            max_relative = 1e-14
        );
    }
}

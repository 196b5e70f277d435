//! Bessel functions J_nu of real non-negative order, and the radial kernel
//! J_nu(z) / z^(d/2-1) shared by every hyperspherical wavefunction here.
//!
//! Three evaluation regimes, stitched so values stay continuous at the
//! switch boundaries (see `continuity_at_switches` test):
//!
//! * ascending power series, log-scaled, for `z <= max(7, 2 sqrt(nu+1))`
//!   (the bound keeps alternating-series cancellation below ~1e2);
//! * Miller downward recurrence normalized by the Neumann expansion
//!   `(z/2)^nu = sum_k (nu+2k) Gamma(nu+k)/k! J_{nu+2k}(z)` in the middle
//!   region, where neither the series nor the large-z expansion is safe;
//! * Hankel asymptotic expansion for `z >= max(26, 0.75 nu^2 + 12)`.
//!
//! Orders stay moderate (nu <= a few hundred) but arguments reach a few
//! thousand in integral tails, so the large-z path matters for speed.
//! Results are returned in log form: in the deep evanescent region
//! (z << nu) magnitudes fall below f64 range long before the physics stops
//! caring.

use super::gamma::ln_gamma;
use super::logreal::LogReal;

const SERIES_FLOOR: f64 = 7.0;

fn series_radius(nu: f64) -> f64 {
    SERIES_FLOOR.max(2.0 * (nu + 1.0).sqrt())
}

fn hankel_min(nu: f64) -> f64 {
    26.0f64.max(0.75 * nu * nu + 12.0)
}

/// Ascending series, log-scaled: J = (z/2)^nu / Gamma(nu+1) * sum_k c_k,
/// c_0 = 1, c_{k+1} = -c_k (z^2/4) / ((k+1)(nu+k+1)).
fn series_j_ln(nu: f64, z: f64) -> LogReal {
    debug_assert!(z > 0.0);
    let t = 0.25 * z * z;
    let mut c = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..200 {
        let kf = k as f64;
        c *= -t / ((kf + 1.0) * (nu + kf + 1.0));
        sum += c;
        if c.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    let ln_pref = nu * (0.5 * z).ln() - ln_gamma(nu + 1.0);
    if sum == 0.0 {
        return LogReal::ZERO;
    }
    LogReal::new(if sum > 0.0 { 1 } else { -1 }, ln_pref + sum.abs().ln())
}

/// Miller downward recurrence from order nu+m, normalized by the Neumann
/// sum. Returns (J_nu, J_{nu+1}) in log form.
fn miller_pair_ln(nu: f64, z: f64) -> (LogReal, LogReal) {
    let above = nu.max(z);
    let m = (above + 12.0 * above.cbrt() + 18.0).ceil() as i64;
    let start = m; // order nu + start downwards to nu
    let mut jp = 0.0f64; // J~ at order nu + k + 1
    let mut j = 1e-30f64; // J~ at order nu + k
    let mut scale = LogReal::ONE; // cumulative rescale applied to state
    let mut sum = LogReal::ZERO; // Neumann sum in the same scale
    let mut j_nu1 = 0.0f64;
    let mut j_nu1_scale = LogReal::ONE;

    let ln_w = |k: i64| -> f64 {
        // w_k = (nu + 2k) Gamma(nu + k) / k!
        if k == 0 {
            ln_gamma(nu + 1.0)
        } else {
            let kf = k as f64;
            (nu + 2.0 * kf).ln() + ln_gamma(nu + kf) - ln_gamma(kf + 1.0)
        }
    };

    let mut k = start;
    loop {
        if k % 2 == 0 && j != 0.0 {
            let term = LogReal::new(if j > 0.0 { 1 } else { -1 }, j.abs().ln() + ln_w(k / 2));
            sum = sum.add(term);
        }
        if k == 0 {
            break;
        }
        // J_{k-1} = (2(nu+k)/z) J_k - J_{k+1}
        let next = (2.0 * (nu + k as f64) / z) * j - jp;
        jp = j;
        j = next;
        k -= 1;
        if k == 1 {
            j_nu1 = j;
            j_nu1_scale = scale;
        }
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp *= 1e-250;
            sum = sum.mul(LogReal::from_f64(1e-250));
            scale = scale.mul(LogReal::from_f64(1e-250));
            if k <= 1 {
                j_nu1 *= 1e-250;
                j_nu1_scale = scale;
            }
        }
    }
    debug_assert!(sum.sign() > 0, "Miller normalization sum must be positive");
    // true J_{nu+q} = J~_q * (z/2)^nu / sum   (everything in the same scale)
    let ln_norm = nu * (0.5 * z).ln();
    let jn = LogReal::from_f64(j).mul(LogReal::from_ln(ln_norm)).div(sum);
    let jn1 = LogReal::from_f64(j_nu1)
        .mul(scale.div(j_nu1_scale)) // bring captured value to final scale
        .mul(LogReal::from_ln(ln_norm))
        .div(sum);
    (jn, jn1)
}

/// Hankel large-argument expansion:
/// J_nu(z) = sqrt(2/(pi z)) [P cos w - Q sin w], w = z - (nu/2 + 1/4) pi.
fn hankel_j(nu: f64, z: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut a = 1.0f64; // a_k
    let mut p = 1.0f64;
    let mut q = 0.0f64;
    let mut prev = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        a *= (mu - odd * odd) / (kf * 8.0 * z);
        if a.abs() >= prev {
            break; // semi-convergent: stop at smallest term
        }
        prev = a.abs();
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
        if a.abs() < 1e-17 {
            break;
        }
    }
    let w = z - (0.5 * nu + 0.25) * std::f64::consts::PI;
    (2.0 / (std::f64::consts::PI * z)).sqrt() * (p * w.cos() - q * w.sin())
}

/// J_nu and J_{nu+1} together (most callers need both: derivatives and the
/// kernel recurrences come from this pair).
pub fn bessel_j_pair_ln(nu: f64, z: f64) -> (LogReal, LogReal) {
    assert!(nu >= 0.0 && z >= 0.0 && z.is_finite(), "bessel_j: nu={nu}, z={z}");
    if z == 0.0 {
        let j0 = if nu == 0.0 { LogReal::ONE } else { LogReal::ZERO };
        return (j0, LogReal::ZERO);
    }
    if z <= series_radius(nu) {
        (series_j_ln(nu, z), series_j_ln(nu + 1.0, z))
    } else if z >= hankel_min(nu + 1.0) {
        (LogReal::from_f64(hankel_j(nu, z)), LogReal::from_f64(hankel_j(nu + 1.0, z)))
    } else {
        miller_pair_ln(nu, z)
    }
}

pub fn bessel_j_ln(nu: f64, z: f64) -> LogReal {
    bessel_j_pair_ln(nu, z).0
}

pub fn bessel_j(nu: f64, z: f64) -> f64 {
    bessel_j_ln(nu, z).to_f64()
}

/// J_nu'(z) = (nu/z) J_nu(z) - J_{nu+1}(z).
pub fn bessel_j_deriv(nu: f64, z: f64) -> f64 {
    let (j, j1) = bessel_j_pair_ln(nu, z);
    if z == 0.0 {
        // J_0' = 0, J_1'(0) = 1/2, all higher orders 0
        return if (nu - 1.0).abs() < 1e-12 { 0.5 } else { 0.0 };
    }
    j.mul(LogReal::from_f64(nu / z)).sub(j1).to_f64()
}

/// (J_nu(z), J_nu'(z)) in plain f64, for Newton iterations in the
/// oscillatory region where magnitudes are tame.
pub fn bessel_j_with_deriv(nu: f64, z: f64) -> (f64, f64) {
    let (j, j1) = bessel_j_pair_ln(nu, z);
    let jv = j.to_f64();
    (jv, nu / z * jv - j1.to_f64())
}

/// Radial kernel K_l(z) = J_{l + d/2 - 1}(z) / z^(d/2 - 1): the
/// hyperspherical Bessel function stripped of its d-dependent constant
/// prefactor (which cancels in every normalized quantity and is ill-defined
/// below d = 4).
pub fn radial_kernel(d: u32, l: u32, z: f64) -> LogReal {
    let d1 = 0.5 * d as f64 - 1.0;
    let nu = l as f64 + d1;
    if z == 0.0 {
        return if l == 0 {
            LogReal::from_ln(-d1 * std::f64::consts::LN_2 - ln_gamma(0.5 * d as f64))
        } else {
            LogReal::ZERO
        };
    }
    bessel_j_ln(nu, z).div(LogReal::from_ln(d1 * z.ln()))
}

/// d/dz of the radial kernel: K_l'(z) = (l/z) K_l(z) - K_{l+1}(z).
pub fn radial_kernel_deriv(d: u32, l: u32, z: f64) -> LogReal {
    let d1 = 0.5 * d as f64 - 1.0;
    let nu = l as f64 + d1;
    if z == 0.0 {
        // K_l ~ z^l / (2^(l+d1) Gamma(l+d/2+...)); only l=1 has nonzero slope
        return if l == 1 {
            LogReal::from_ln(-(1.0 + d1) * std::f64::consts::LN_2 - ln_gamma(2.0 + d1))
        } else {
            LogReal::ZERO
        };
    }
    let (j, j1) = bessel_j_pair_ln(nu, z);
    let k_l = j.div(LogReal::from_ln(d1 * z.ln()));
    let k_l1 = j1.div(LogReal::from_ln(d1 * z.ln()));
    k_l.mul(LogReal::from_f64(l as f64 / z)).sub(k_l1)
}

/// Oscillation envelope sqrt(2/(pi z)) of J_nu at large argument; reference
/// scale for residual checks near zeros.
pub fn envelope(z: f64) -> f64 {
    (2.0 / (std::f64::consts::PI * z)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Test-only oracle: plain 60-term ascending series (unscaled), valid
    /// for small arguments where no route logic is involved.
    fn series_oracle(nu: f64, z: f64) -> f64 {
        let t = 0.25 * z * z;
        let mut c = 1.0;
        let mut s = 1.0;
        for k in 0..60 {
            let kf = k as f64;
            c *= -t / ((kf + 1.0) * (nu + kf + 1.0));
            s += c;
        }
        (0.5 * z).powf(nu) / ln_gamma(nu + 1.0).exp() * s
    }

    fn j_half(z: f64) -> f64 {
        (2.0 / (std::f64::consts::PI * z)).sqrt() * z.sin()
    }
    fn j_three_half(z: f64) -> f64 {
        (2.0 / (std::f64::consts::PI * z)).sqrt() * (z.sin() / z - z.cos())
    }

    #[test]
    fn small_argument_matches_series_oracle() {
        for &nu in &[0.0, 0.5, 1.0, 2.5, 6.0, 10.5] {
            for &z in &[0.05, 0.7, 2.0, 4.5] {
                assert_relative_eq!(
                    bessel_j(nu, z),
                    series_oracle(nu, z),
                    max_relative = 1e-12,
                    epsilon = 1e-300
                );
            }
        }
    }

    #[test]
    fn half_integer_closed_forms_across_regimes() {
        // z spans series / Miller / Hankel regions. At large z the phase
        // subtraction z - nu pi/2 - pi/4 rounds at ulp(z)/2, so agreement
        // beyond ~ z*eps relative to the envelope is not achievable in f64;
        // the tolerance carries that floor explicitly.
        for &z in &[0.3, 3.0, 8.0, 15.0, 40.0, 250.0, 3000.0] {
            let phase_floor = 3.0 * z * f64::EPSILON * envelope(z);
            for (nu, oracle) in [(0.5, j_half(z)), (1.5, j_three_half(z))] {
                let got = bessel_j(nu, z);
                let tol = (5e-13 * oracle.abs()).max(phase_floor).max(1e-15);
                assert!(
                    (got - oracle).abs() <= tol,
                    "nu={nu}, z={z}: {got:e} vs {oracle:e}"
                );
            }
        }
        // push to higher half-integer order by (stable, z > nu) upward recurrence
        let z = 60.0;
        let mut jm1 = j_half(z);
        let mut j = j_three_half(z);
        let mut nu = 1.5;
        while nu < 12.0 {
            let next = 2.0 * nu / z * j - jm1;
            jm1 = j;
            j = next;
            nu += 1.0;
            assert_relative_eq!(bessel_j(nu, z), j, max_relative = 1e-11, epsilon = 1e-13);
        }
    }

    #[test]
    fn recurrence_identity_samples() {
        // J_{nu+1} = (2 nu / z) J_nu - J_{nu-1} must hold across regimes
        for &nu in &[1.0, 3.5, 9.0, 30.0, 60.5] {
            for &z in &[5.0, 11.0, 28.0, 95.0, 700.0] {
                let a = bessel_j(nu - 1.0, z);
                let b = bessel_j(nu, z);
                let c = bessel_j(nu + 1.0, z);
                let rhs = 2.0 * nu / z * b - a;
                assert_relative_eq!(c, rhs, epsilon = 1e-12 * envelope(z).max(a.abs()), max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn derivative_consistent_with_finite_difference() {
        for &(nu, z) in &[(0.0, 3.3), (2.5, 7.7), (10.0, 14.0), (5.5, 80.0)] {
            let h = 1e-6 * z;
            let fd = (bessel_j(nu, z + h) - bessel_j(nu, z - h)) / (2.0 * h);
            assert_relative_eq!(bessel_j_deriv(nu, z), fd, epsilon = 1e-7, max_relative = 1e-7);
        }
    }

    #[test]
    fn continuity_at_switches() {
        // Evaluate both neighboring routes at the same point: 1e-12 relative
        // agreement, with an envelope floor where J sits near a node and the
        // f64 phase-rounding floor ~ z*eps at large switch radii.
        for &nu in &[0.0, 0.5, 1.0, 2.5, 5.0, 10.0, 24.5, 49.0, 120.5, 199.0] {
            let b1 = series_radius(nu);
            let s = series_j_ln(nu, b1).to_f64();
            let m = miller_pair_ln(nu, b1).0.to_f64();
            let tol1 = 1e-12 * s.abs().max(1e-3 * envelope(b1));
            assert!(
                (s - m).abs() <= tol1,
                "series/miller mismatch nu={nu}: {s:e} vs {m:e}"
            );
            let b2 = hankel_min(nu + 1.0);
            let mm = miller_pair_ln(nu, b2).0.to_f64();
            let hh = hankel_j(nu, b2);
            let tol2 = 1e-12 * mm.abs().max(envelope(b2))
                + 4.0 * b2 * f64::EPSILON * envelope(b2);
            assert!(
                (mm - hh).abs() <= tol2,
                "miller/hankel mismatch nu={nu}: {mm:e} vs {hh:e}"
            );
        }
    }

    #[test]
    fn deep_evanescent_region_stays_finite_and_positive() {
        // J_199(40): far below the turning point, magnitude ~ 1e-200ish;
        // must come back as a healthy log-form value, not 0 or junk.
        let v = bessel_j_ln(199.0, 40.0);
        assert_eq!(v.sign(), 1);
        assert!(v.ln_abs() < -200.0 && v.ln_abs() > -700.0, "ln|J| = {}", v.ln_abs());
        // three-term recurrence in log domain:
        // J_198 + J_200 = (2*199/40) J_199, all terms ~ e^(-450)
        let a = bessel_j_ln(198.0, 40.0);
        let b = bessel_j_ln(199.0, 40.0);
        let c = bessel_j_ln(200.0, 40.0);
        let ratio = a.add(c).div(b.mul(LogReal::from_f64(2.0 * 199.0 / 40.0)));
        assert_relative_eq!(ratio.to_f64(), 1.0, max_relative = 1e-11);
    }

    #[test]
    fn kernel_and_kernel_deriv() {
        // d=3, l=0: K(z) = J_{1/2}(z)/sqrt(z) = sqrt(2/pi) sin(z)/z
        let z: f64 = 1.7;
        let expect = (2.0 / std::f64::consts::PI).sqrt() * z.sin() / z;
        assert_relative_eq!(radial_kernel(3, 0, z).to_f64(), expect, max_relative = 1e-12);
        // kernel value at the origin: 2^(1-d/2)/Gamma(d/2) ... for d=3: sqrt(2/pi)
        assert_relative_eq!(
            radial_kernel(3, 0, 0.0).to_f64(),
            (2.0 / std::f64::consts::PI).sqrt(),
            max_relative = 1e-13
        );
        // derivative against finite differences
        for &(d, l, z) in &[(3u32, 0u32, 2.2), (4, 1, 5.5), (6, 2, 9.1)] {
            let h = 1e-6;
            let fd = (radial_kernel(d, l, z + h).to_f64() - radial_kernel(d, l, z - h).to_f64())
                / (2.0 * h);
            assert_relative_eq!(
                radial_kernel_deriv(d, l, z).to_f64(),
                fd,
                epsilon = 1e-8,
                max_relative = 1e-7
            );
        }
    }
}

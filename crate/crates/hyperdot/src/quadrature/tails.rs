//! Closed-form tail corrections for semi-infinite radial integrals.
//!
//! Every momentum density here decays like an inverse power, either with an
//! oscillating `cos^2` factor (box states, whose transforms ring at the
//! Bessel frequency) or smoothly (Coulomb states, rational in the momentum).
//! Truncating the numeric panels at a cutoff Z and adding the phase-averaged
//! analytic remainder turns an O(Z^(1-q)) truncation error into O(Z^(-q-1)):
//! ending the panels exactly at an oscillation node kills the boundary term
//! of every harmonic of cos^(2a), so only the envelope-drift correction is
//! left. Each tail therefore comes back as a (value, error-bound) pair with
//! the error of order `value * (drift + q^2) / Z^2`.

use crate::error::{Error, Result};
use crate::specfun::gamma::ln_cos_power_mean;
use crate::specfun::LogReal;

/// Phase average of cos^2 t * ln(cos^2 t): (1 - 2 ln 2) / 2.
const COS2_LNCOS2_MEAN: f64 = (1.0 - 2.0 * std::f64::consts::LN_2) / 2.0;

/// Large-argument envelope of a density: `rho(z) ~ C z^(-s) cos^2(phase)`
/// when `oscillatory`, or `rho(z) ~ C z^(-s)` otherwise.
///
/// `drift` bounds how fast the envelope constant settles: the true density
/// is `C(z) z^(-s) ...` with `|C(z)/C - 1| <~ drift / z^2`. For transforms of
/// box states this collects the Bessel-envelope correction (~nu^2) and the
/// resonance denominator (~2 j^2); pure powers take drift = 0.
#[derive(Clone, Copy, Debug)]
pub struct PowerEnvelope {
    pub ln_c: f64,
    pub s: f64,
    pub oscillatory: bool,
    pub drift: f64,
}

impl PowerEnvelope {
    /// Tail of `int_Z^inf rho(z)^alpha z^weight dz` as (value, error bound).
    /// The integrand decay exponent is q = alpha s - weight; q <= 1 means
    /// the full integral diverges.
    pub fn density_power_tail(
        &self,
        alpha: f64,
        weight: f64,
        z: f64,
    ) -> Result<(LogReal, LogReal)> {
        let q = alpha * self.s - weight;
        if q <= 1.0 {
            return Err(Error::Divergent(format!(
                "tail exponent q = {q:.4} <= 1 (alpha = {alpha}, envelope decay s = {})",
                self.s
            )));
        }
        let mut ln = alpha * self.ln_c + (1.0 - q) * z.ln() - (q - 1.0).ln();
        if self.oscillatory {
            ln += ln_cos_power_mean(alpha);
        }
        let value = LogReal::from_ln(ln);
        let rel = (alpha.abs() * self.drift + q * q) / (z * z);
        Ok((value, value.mul(LogReal::from_f64(rel))))
    }

    /// Tail of `int_Z^inf (-rho ln rho) z^weight dz` — the Shannon-entropy
    /// remainder, as (value, error bound). Splitting ln rho into envelope
    /// and phase parts gives power-with-logarithm moments T1, T2 plus (when
    /// oscillating) the constant phase average of cos^2 ln cos^2.
    pub fn entropy_tail(&self, weight: f64, z: f64) -> Result<(f64, f64)> {
        let q = self.s - weight;
        if q <= 1.0 {
            return Err(Error::Divergent(format!(
                "entropy tail exponent q = {q:.4} <= 1 (envelope decay s = {})",
                self.s
            )));
        }
        let t1 = z.powf(1.0 - q) / (q - 1.0);
        let t2 = z.powf(1.0 - q) * (z.ln() / (q - 1.0) + (q - 1.0).powi(-2));
        let c = self.ln_c.exp();
        let value = if self.oscillatory {
            c * (0.5 * self.s * t2 - 0.5 * self.ln_c * t1 - COS2_LNCOS2_MEAN * t1)
        } else {
            c * (self.s * t2 - self.ln_c * t1)
        };
        // gross magnitude of the contributing moments, immune to accidental
        // cancellation in `value`
        let gross = c * (self.s * t2.abs() + (self.ln_c.abs() + 1.0) * t1.abs());
        let err = gross * (self.drift + q * q) * (1.0 + z.ln().max(0.0)) / (z * z);
        Ok((value, err))
    }
}

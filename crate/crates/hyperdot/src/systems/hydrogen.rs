//! Radial profiles of a d-dimensional one-electron ion with unit nuclear
//! charge, in position and momentum space. Lengths are in Bohr-type units;
//! the bound spectrum is epsilon_n = -1/(2 sigma^2) with
//! sigma = n + (d-3)/2 = 2 lambda.
//!
//! Position space:
//!   Rbar(x) = lambda^(-d/2) sqrt((n-l-1)! / (4 lambda (n+l+d-3)!))
//!             e^(-x/(2 lambda)) (x/lambda)^l L^(2l+d-2)_{n-l-1}(x/lambda)
//! Momentum space (u = 2 lambda y):
//!   Kbar(y) = (2 lambda)^(d/2) 2^(2l+d)
//!             sqrt(lambda (n-l-1)! / (pi (n+l+d-3)!)) Gamma(l+(d-1)/2)
//!             u^l (1+u^2)^(-(l+(d+1)/2)) C^(l+(d-1)/2)_{n-l-1}((1-u^2)/(1+u^2))
//!
//! The momentum profile is rational (no oscillation): integrals over it use
//! geometric panels and a smooth power tail.

use super::{ExpTail, QuantumNumbers, Space};
use crate::error::{Error, Result};
use crate::quadrature::PowerEnvelope;
use crate::specfun::gamma::ln_gamma;
use crate::specfun::poly::{gegenbauer, laguerre, laguerre_deriv};
use crate::specfun::LogReal;

#[derive(Clone, Debug)]
pub struct HydrogenProfile {
    d: u32,
    qn: QuantumNumbers,
    space: Space,
    lambda: f64,
    /// degree of the polynomial factor: n - l - 1
    k: u32,
    /// Laguerre superscript 2l + d - 2 (position)
    eta: f64,
    /// Gegenbauer order l + (d-1)/2 (momentum)
    glam: f64,
    /// ln of the constant prefactor of the active space
    ln_pref: f64,
}

impl HydrogenProfile {
    pub fn new(d: u32, qn: QuantumNumbers, space: Space) -> Result<Self> {
        if d < 3 {
            return Err(Error::Domain(format!(
                "hydrogen profiles need d >= 3 (the sigma = n + (d-3)/2 spectrum \
                 and its exponents assume that range), got d = {d}"
            )));
        }
        if qn.n < 1 || qn.l + 1 > qn.n {
            return Err(Error::QuantumNumbers(format!(
                "bound state needs n >= 1 and l <= n - 1, got n = {}, l = {}",
                qn.n, qn.l
            )));
        }
        let df = d as f64;
        let nf = qn.n as f64;
        let lf = qn.l as f64;
        let lambda = 0.5 * (nf + 0.5 * (df - 3.0));
        let k = qn.n - qn.l - 1;
        let eta = 2.0 * lf + df - 2.0;
        let glam = lf + 0.5 * (df - 1.0);
        // (n-l-1)! = Gamma(n-l); (n+l+d-3)! = Gamma(n+l+d-2)
        let ln_fact_ratio = ln_gamma(nf - lf) - ln_gamma(nf + lf + df - 2.0);
        let ln_pref = match space {
            Space::Position => {
                -0.5 * df * lambda.ln() + 0.5 * (ln_fact_ratio - (4.0 * lambda).ln())
            }
            Space::Momentum => {
                0.5 * df * (2.0 * lambda).ln()
                    + (2.0 * lf + df) * std::f64::consts::LN_2
                    + 0.5 * (lambda.ln() + ln_fact_ratio - std::f64::consts::PI.ln())
                    + ln_gamma(glam)
            }
        };
        Ok(HydrogenProfile { d, qn, space, lambda, k, eta, glam, ln_pref })
    }

    pub fn dim(&self) -> u32 {
        self.d
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Dimensionless bound-state energy -1/(8 lambda^2).
    pub fn energy(&self) -> f64 {
        -1.0 / (8.0 * self.lambda * self.lambda)
    }

    pub fn upper_limit(&self) -> Option<f64> {
        None
    }

    /// Radial profile value, signed, in log form.
    pub fn value_ln(&self, x: f64) -> LogReal {
        let lf = self.qn.l as f64;
        match self.space {
            Space::Position => {
                let u = x / self.lambda;
                if u < 0.0 {
                    return LogReal::ZERO;
                }
                if u == 0.0 && self.qn.l > 0 {
                    return LogReal::ZERO;
                }
                let ln_x_part = if self.qn.l == 0 { 0.0 } else { lf * u.ln() };
                LogReal::from_ln(self.ln_pref - 0.5 * u + ln_x_part)
                    .mul(LogReal::from_f64(laguerre(self.k, self.eta, u)))
            }
            Space::Momentum => {
                let u = 2.0 * self.lambda * x;
                if u < 0.0 {
                    return LogReal::ZERO;
                }
                if u == 0.0 && self.qn.l > 0 {
                    return LogReal::ZERO;
                }
                let t = (1.0 - u) * (1.0 + u) / (1.0 + u * u);
                let beta = self.glam + 1.0; // l + (d+1)/2
                let ln_u_part = if self.qn.l == 0 { 0.0 } else { lf * u.ln() };
                LogReal::from_ln(self.ln_pref + ln_u_part - beta * (1.0 + u * u).ln())
                    .mul(LogReal::from_f64(gegenbauer(self.k, self.glam, t)))
            }
        }
    }

    /// d/dx of the profile, signed, in log form.
    pub fn deriv_ln(&self, x: f64) -> LogReal {
        let lf = self.qn.l as f64;
        match self.space {
            Space::Position => {
                let u = x / self.lambda;
                let lag = laguerre(self.k, self.eta, u);
                let lag_d = laguerre_deriv(self.k, self.eta, u);
                // (1/lambda) e^(-u/2) u^(l-1) [(l - u/2) L + u L']
                let bracket = if self.qn.l == 0 {
                    -0.5 * lag + lag_d
                } else {
                    u.powi(self.qn.l as i32 - 1) * ((lf - 0.5 * u) * lag + u * lag_d)
                };
                LogReal::from_ln(self.ln_pref - 0.5 * u - self.lambda.ln())
                    .mul(LogReal::from_f64(bracket))
            }
            Space::Momentum => {
                let u = 2.0 * self.lambda * x;
                let t = (1.0 - u) * (1.0 + u) / (1.0 + u * u);
                let beta = self.glam + 1.0;
                let c = gegenbauer(self.k, self.glam, t);
                let c_d = if self.k == 0 {
                    0.0
                } else {
                    2.0 * self.glam * gegenbauer(self.k - 1, self.glam + 1.0, t)
                };
                let one_u2 = 1.0 + u * u;
                let term1 = if self.qn.l == 0 {
                    0.0
                } else {
                    lf * u.powi(self.qn.l as i32 - 1) * c
                };
                let term2 = u.powi(self.qn.l as i32 + 1) / one_u2
                    * (2.0 * beta * c + 4.0 * c_d / one_u2);
                LogReal::from_ln(self.ln_pref - beta * one_u2.ln())
                    .mul(LogReal::from_f64(2.0 * self.lambda * (term1 - term2)))
            }
        }
    }

    /// No finite-support node structure: integrals use these panel edges.
    pub fn node(&self, k: u32) -> Result<f64> {
        match self.space {
            Space::Position => Ok(2.0 * self.lambda * k as f64),
            Space::Momentum => Ok(0.5 / self.lambda * 1.3f64.powi(k as i32 - 1)),
        }
    }

    pub fn interior_zeros(&self) -> Result<Vec<f64>> {
        Ok(Vec::new())
    }

    /// Position density decays like x^(2(n-1)) e^(-x/lambda).
    pub fn exp_tail(&self) -> Option<ExpTail> {
        match self.space {
            Space::Position => Some(ExpTail {
                scale: self.lambda,
                degree: 2.0 * (self.qn.n as f64 - 1.0),
            }),
            Space::Momentum => None,
        }
    }

    /// Squared momentum profile decays like a pure power y^(-2(l+d+1)).
    pub fn envelope(&self) -> Option<PowerEnvelope> {
        if self.space != Space::Momentum {
            return None;
        }
        let df = self.d as f64;
        let lf = self.qn.l as f64;
        let beta = self.glam + 1.0;
        let c_inf = gegenbauer(self.k, self.glam, -1.0);
        let c_d_inf = if self.k == 0 {
            0.0
        } else {
            2.0 * self.glam * gegenbauer(self.k - 1, self.glam + 1.0, -1.0)
        };
        let p = lf + df + 1.0;
        let inv_2lam = 0.5 / self.lambda;
        Some(PowerEnvelope {
            ln_c: 2.0 * (self.ln_pref + c_inf.abs().ln() - p * (2.0 * self.lambda).ln()),
            s: 2.0 * p,
            oscillatory: false,
            drift: (2.0 * beta + 4.0 * (c_d_inf / c_inf).abs()) * inv_2lam * inv_2lam + 1.0,
        })
    }
}

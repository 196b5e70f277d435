//! Special functions underpinning the radial profiles: log-scaled real
//! arithmetic, gamma-family functions, classical orthogonal polynomials,
//! Bessel functions of real order, and their zeros.

pub mod bessel;
pub mod gamma;
pub mod logreal;
pub mod poly;
pub mod zeros;

pub use bessel::{
    bessel_j, bessel_j_deriv, bessel_j_ln, bessel_j_pair_ln, bessel_j_with_deriv, envelope,
    radial_kernel, radial_kernel_deriv,
};
pub use gamma::{digamma, gamma, ln_cos_power_mean, ln_gamma};
pub use logreal::LogReal;
pub use poly::{gegenbauer, laguerre, laguerre_deriv};
pub use zeros::{bessel_zero, global_zeros, neumann_zero, ZeroTable};

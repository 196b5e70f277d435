//! Orthogonal polynomials entering hydrogen-like radial functions:
//! generalized Laguerre L_n^(eta) and Gegenbauer C_n^(lam), by forward
//! three-term recurrence (degrees here stay small, so recurrence is exact
//! enough and allocation-free).

/// Generalized Laguerre polynomial L_n^(eta)(x).
pub fn laguerre(n: u32, eta: f64, x: f64) -> f64 {
    // (k+1) L_{k+1} = (2k + 1 + eta - x) L_k - (k + eta) L_{k-1}
    let mut lm1 = 1.0;
    if n == 0 {
        return lm1;
    }
    let mut l = 1.0 + eta - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + eta - x) * l - (kf + eta) * lm1) / (kf + 1.0);
        lm1 = l;
        l = next;
    }
    l
}

/// d/dx L_n^(eta)(x) = -L_{n-1}^(eta+1)(x).
pub fn laguerre_deriv(n: u32, eta: f64, x: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        -laguerre(n - 1, eta + 1.0, x)
    }
}

/// Gegenbauer (ultraspherical) polynomial C_n^(lam)(x).
pub fn gegenbauer(n: u32, lam: f64, x: f64) -> f64 {
    // (k+1) C_{k+1} = 2(k+lam) x C_k - (k + 2 lam - 1) C_{k-1}
    let mut cm1 = 1.0;
    if n == 0 {
        return cm1;
    }
    let mut c = 2.0 * lam * x;
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 * (kf + lam) * x * c - (kf + 2.0 * lam - 1.0) * cm1) / (kf + 1.0);
        cm1 = c;
        c = next;
    }
    c
}

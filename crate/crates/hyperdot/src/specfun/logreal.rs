//! Sign + log-magnitude representation for quantities far outside f64 range.
//!
//! Density powers in high dimension reach magnitudes like 1e+290 / 1e-643,
//! so integrals accumulate in the log domain. A value is `sign * exp(ln_abs)`
//! with `sign ∈ {-1, 0, +1}`; zero is represented by `sign == 0` and
//! `ln_abs == -inf`.

use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogReal {
    sign: i8,
    ln_abs: f64,
}

impl LogReal {
    pub const ZERO: LogReal = LogReal { sign: 0, ln_abs: f64::NEG_INFINITY };
    pub const ONE: LogReal = LogReal { sign: 1, ln_abs: 0.0 };

    /// Construct from sign and log-magnitude. `sign` is normalized to {-1,0,1}.
    pub fn new(sign: i8, ln_abs: f64) -> Self {
        if sign == 0 || ln_abs == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        LogReal { sign: sign.signum(), ln_abs }
    }

    /// Positive value given directly as its natural logarithm.
    pub fn from_ln(ln_abs: f64) -> Self {
        Self::new(1, ln_abs)
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            LogReal { sign: if x > 0.0 { 1 } else { -1 }, ln_abs: x.abs().ln() }
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn ln_abs(&self) -> f64 {
        self.ln_abs
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Convert to f64; overflows to ±inf, underflows to 0.
    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * self.ln_abs.exp()
    }

    pub fn abs(&self) -> Self {
        LogReal { sign: self.sign.abs(), ln_abs: self.ln_abs }
    }

    pub fn neg(&self) -> Self {
        LogReal { sign: -self.sign, ln_abs: self.ln_abs }
    }

    pub fn mul(&self, other: Self) -> Self {
        Self::new(self.sign * other.sign, self.ln_abs + other.ln_abs)
    }

    pub fn div(&self, other: Self) -> Self {
        debug_assert!(other.sign != 0, "LogReal division by zero");
        Self::new(self.sign * other.sign, self.ln_abs - other.ln_abs)
    }

    /// Raise to a real power; requires a non-negative base unless `p` is an integer.
    pub fn powf(&self, p: f64) -> Self {
        if self.sign == 0 {
            return if p > 0.0 { Self::ZERO } else { Self::from_ln(f64::INFINITY) };
        }
        debug_assert!(self.sign > 0 || p.fract() == 0.0);
        let sign = if self.sign > 0 || (p as i64) % 2 == 0 { 1 } else { -1 };
        Self::new(sign, self.ln_abs * p)
    }

    /// Sum computed as log-sum-exp: `ln(|a| + |b|) = max + ln_1p(exp(min - max))`
    /// for same-sign operands; opposite signs use `ln_1p(-exp(..))`.
    pub fn add(&self, other: Self) -> Self {
        if self.sign == 0 {
            return other;
        }
        if other.sign == 0 {
            return *self;
        }
        let (big, small) = if self.ln_abs >= other.ln_abs { (self, &other) } else { (&other, self) };
        let d = small.ln_abs - big.ln_abs; // <= 0
        if self.sign == other.sign {
            LogReal { sign: big.sign, ln_abs: big.ln_abs + d.exp().ln_1p() }
        } else if d == 0.0 {
            Self::ZERO
        } else {
            LogReal { sign: big.sign, ln_abs: big.ln_abs + (-d.exp()).ln_1p() }
        }
    }

    pub fn sub(&self, other: Self) -> Self {
        self.add(other.neg())
    }

    /// Compare by signed magnitude.
    pub fn cmp_signed(&self, other: &Self) -> Ordering {
        match (self.sign, other.sign) {
            (a, b) if a != b => a.cmp(&b),
            (0, 0) => Ordering::Equal,
            (s, _) => {
                let ord = self.ln_abs.partial_cmp(&other.ln_abs).unwrap_or(Ordering::Equal);
                if s > 0 { ord } else { ord.reverse() }
            }
        }
    }

    /// Decimal mantissa in [0.1, 1) and exponent: value = mantissa * 10^exp10.
    pub fn mantissa_exp10(&self) -> (f64, i32) {
        if self.sign == 0 {
            return (0.0, 0);
        }
        let log10 = self.ln_abs / std::f64::consts::LN_10;
        let mut e = log10.floor() as i32 + 1;
        let mut m = 10f64.powf(log10 - e as f64);
        // rounding at the boundary can push the mantissa to 1.0
        if m >= 1.0 {
            m /= 10.0;
            e += 1;
        }
        if m < 0.1 {
            m *= 10.0;
            e -= 1;
        }
        (self.sign as f64 * m, e)
    }
}

impl fmt::Display for LogReal {
    /// Mantissa/exponent form `0.18494E-87` (5 significant digits).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return write!(f, "0");
        }
        let (m, e) = self.mantissa_exp10();
        write!(f, "{:.5}E{:+}", m, e)
    }
}

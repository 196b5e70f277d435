//! Zeros of J_nu and of the mixed boundary condition
//! `l J_nu(z) = z J_{nu+1}(z)` (zero normal derivative of the radial
//! kernel), plus a process-wide cache with optional file persistence.
//!
//! Strategy for plain Bessel zeros: a guaranteed bracket first, Newton
//! afterwards. Brackets come from scanning in sub-half-wavelength steps of
//! the local WKB period `pi / sqrt(1 - nu^2/z^2)` (for the first zero of a
//! large order, from the classic `nu + 1.8557571 nu^(1/3) + ...` expansion),
//! so no zero can be skipped; the scan costs ~3 function evaluations per
//! zero. Every accepted root is verified against the oscillation envelope.
//!
//! Mixed-condition zeros a_{l,n} interlace with Bessel zeros:
//! a_{l,1} lies in (0, j_{nu,1}) and a_{l,n} in (j_{nu+1,n-1}, j_{nu,n}),
//! with the sign of the condition fixed and opposite at the endpoints, so
//! bisection-safeguarded Newton always converges. The l = 0 family is
//! explicit: a_{0,1} = 0 and a_{0,n} = j_{d/2, n-1}.

use std::collections::HashMap;
use std::path::Path;
use std::sync::{OnceLock, RwLock};

use super::bessel::{bessel_j_ln, bessel_j_pair_ln, bessel_j_with_deriv, envelope};
use super::logreal::LogReal;
use crate::error::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// McMahon's expansion for j_{nu,n}, good once beta is a few times mu.
/// Kept as an independent cross-check of the scan-and-polish pipeline.
#[cfg(test)]
fn mcmahon_guess(nu: f64, n: u32) -> f64 {
    let beta = (n as f64 + 0.5 * nu - 0.25) * PI;
    let mu = 4.0 * nu * nu;
    beta - (mu - 1.0) / (8.0 * beta)
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * (8.0 * beta).powi(3))
}

/// First-zero expansion for large order.
fn first_zero_large_order(nu: f64) -> f64 {
    let c = nu.cbrt();
    nu + 1.855_757_1 * c + 1.033_150 / c
}

/// Scan step that provably stays below the local zero spacing.
fn scan_step(nu: f64, z: f64) -> f64 {
    let turn = nu + 0.5 * nu.cbrt();
    if z <= turn {
        (0.4 * nu.cbrt()).max(0.5)
    } else {
        0.35 * PI / (1.0 - (nu / z) * (nu / z)).sqrt()
    }
}

/// Bisection-safeguarded Newton inside a sign-change bracket.
/// `s_lo` is the sign of J at the low end.
fn polish_bessel(nu: f64, mut lo: f64, mut hi: f64, s_lo: f64) -> Result<f64> {
    let mut x = 0.5 * (lo + hi);
    for _ in 0..120 {
        let (j, jp) = bessel_j_with_deriv(nu, x);
        if j == 0.0 {
            return verify_bessel_root(nu, x);
        }
        if j.signum() == s_lo {
            lo = x;
        } else {
            hi = x;
        }
        let mut xn = x - j / jp;
        if !xn.is_finite() || xn <= lo || xn >= hi {
            xn = 0.5 * (lo + hi);
        }
        if (xn - x).abs() <= 1e-15 * x {
            return verify_bessel_root(nu, xn);
        }
        x = xn;
    }
    if hi - lo <= 1e-12 * hi {
        verify_bessel_root(nu, 0.5 * (lo + hi))
    } else {
        Err(Error::Convergence {
            context: "bessel zero polish",
            detail: format!("nu={nu}, bracket [{lo}, {hi}] did not collapse"),
        })
    }
}

fn verify_bessel_root(nu: f64, x: f64) -> Result<f64> {
    let resid = bessel_j_ln(nu, x).to_f64().abs();
    let tol = 1e-10 * x.max(10.0) * envelope(x);
    if resid <= tol {
        Ok(x)
    } else {
        Err(Error::Convergence {
            context: "bessel zero residual",
            detail: format!("nu={nu}, x={x}: |J|={resid:.3e} > {tol:.3e}"),
        })
    }
}

/// First positive zero of J_nu.
fn first_bessel_zero(nu: f64) -> Result<f64> {
    if nu >= 10.0 {
        let g = first_zero_large_order(nu);
        let delta = 0.45 * nu.cbrt();
        let a = bessel_j_ln(nu, g - delta);
        let b = bessel_j_ln(nu, g + delta);
        if a.sign() > 0 && b.sign() < 0 {
            return polish_bessel(nu, g - delta, g + delta, 1.0);
        }
        // expansion failed its sanity check: fall through to the scan
    }
    scan_for_zero(nu, 0.1, 1)
}

/// Walk upward from `start` (where sign(J) = `sign`) until the sign flips,
/// then polish. `sign` as i8 matches LogReal's sign convention.
fn scan_for_zero(nu: f64, start: f64, sign: i8) -> Result<f64> {
    let mut z = start;
    let mut s = sign;
    for _ in 0..20_000 {
        let zn = z + scan_step(nu, z);
        let j = bessel_j_ln(nu, zn);
        if j.sign() == 0 {
            return verify_bessel_root(nu, zn);
        }
        if j.sign() != s {
            return polish_bessel(nu, z, zn, s as f64);
        }
        // in the evanescent region J never vanishes; keep the sign we have
        s = j.sign();
        z = zn;
    }
    Err(Error::Convergence {
        context: "bessel zero scan",
        detail: format!("nu={nu}, no sign change above {start}"),
    })
}

/// Zero n+1 given zero n.
fn next_bessel_zero(nu: f64, prev: f64) -> Result<f64> {
    let (_, dp) = bessel_j_with_deriv(nu, prev);
    let s: i8 = if dp >= 0.0 { 1 } else { -1 };
    scan_for_zero(nu, prev + 1e-9 * prev.max(1.0), s)
}

/// Condition function g(z) = l J_nu(z) - z J_{nu+1}(z) and its derivative
/// g'(z) = (l nu / z - z) J_nu(z) + (nu - l) J_{nu+1}(z), in log form so the
/// sign is reliable even deep under the turning point.
fn neumann_g_pair(l: f64, nu: f64, z: f64) -> (LogReal, LogReal) {
    let (jn, jn1) = bessel_j_pair_ln(nu, z);
    let g = jn.mul(LogReal::from_f64(l)).sub(jn1.mul(LogReal::from_f64(z)));
    let gp = jn
        .mul(LogReal::from_f64(l * nu / z - z))
        .add(jn1.mul(LogReal::from_f64(nu - l)));
    (g, gp)
}

fn polish_neumann(l: f64, nu: f64, mut lo: f64, mut hi: f64, s_lo: i8) -> Result<f64> {
    let mut x = 0.5 * (lo + hi);
    for _ in 0..120 {
        let (g, gp) = neumann_g_pair(l, nu, x);
        if g.sign() == 0 {
            return Ok(x);
        }
        if g.sign() == s_lo {
            lo = x;
        } else {
            hi = x;
        }
        let step = g.div(gp).to_f64();
        let mut xn = x - step;
        if !xn.is_finite() || xn <= lo || xn >= hi {
            xn = 0.5 * (lo + hi);
        }
        if (xn - x).abs() <= 1e-15 * x.abs().max(1e-3) {
            return Ok(xn);
        }
        x = xn;
    }
    if hi - lo <= 1e-12 * hi {
        Ok(0.5 * (lo + hi))
    } else {
        Err(Error::Convergence {
            context: "mixed-condition zero polish",
            detail: format!("l={l}, nu={nu}, bracket [{lo}, {hi}]"),
        })
    }
}

/// Cache of Bessel-function zeros and mixed-condition zeros, grown lazily.
/// Chains are stored per order so that asking for zero #n fills 1..=n, which
/// is exactly the access pattern of oscillatory-panel integration.
pub struct ZeroTable {
    bessel: RwLock<HashMap<u64, Vec<f64>>>,
    neumann: RwLock<HashMap<(u32, u32), Vec<f64>>>,
}

impl Default for ZeroTable {
    fn default() -> Self {
        Self::new()
    }
}

impl ZeroTable {
    pub fn new() -> Self {
        ZeroTable { bessel: RwLock::new(HashMap::new()), neumann: RwLock::new(HashMap::new()) }
    }

    /// n-th positive zero of J_nu (n is 1-based).
    pub fn bessel_zero(&self, nu: f64, n: u32) -> Result<f64> {
        if n == 0 {
            return Err(Error::Domain("zero index is 1-based".into()));
        }
        if !(nu >= 0.0) || !nu.is_finite() {
            return Err(Error::Domain(format!("order nu={nu} out of range")));
        }
        let key = nu.to_bits();
        if let Some(v) = self.bessel.read().unwrap().get(&key) {
            if v.len() >= n as usize {
                return Ok(v[n as usize - 1]);
            }
        }
        let mut chain =
            self.bessel.read().unwrap().get(&key).cloned().unwrap_or_default();
        while chain.len() < n as usize {
            let next = match chain.last() {
                None => first_bessel_zero(nu)?,
                Some(&p) => next_bessel_zero(nu, p)?,
            };
            debug_assert!(chain.last().map_or(true, |&p| next > p));
            chain.push(next);
        }
        let value = chain[n as usize - 1];
        let mut w = self.bessel.write().unwrap();
        let entry = w.entry(key).or_default();
        if entry.len() < chain.len() {
            *entry = chain;
        }
        Ok(value)
    }

    /// First n zeros of J_nu, ascending.
    pub fn bessel_zeros_upto(&self, nu: f64, n: u32) -> Result<Vec<f64>> {
        self.bessel_zero(nu, n)?;
        Ok(self.bessel.read().unwrap()[&nu.to_bits()][..n as usize].to_vec())
    }

    /// n-th zero a_{l,n} of l J_nu(z) - z J_{nu+1}(z) with nu = l + d/2 - 1
    /// (zero-slope condition of the radial kernel in d dimensions).
    /// Indexing is 1-based and includes a_{0,1} = 0.
    pub fn neumann_zero(&self, d: u32, l: u32, n: u32) -> Result<f64> {
        if n == 0 {
            return Err(Error::Domain("zero index is 1-based".into()));
        }
        if d < 2 {
            return Err(Error::Domain(format!("dimension d={d} must be >= 2")));
        }
        if l == 0 {
            // g = -z J_{d/2}(z): zeros are 0 and the zeros of J_{d/2}
            return if n == 1 { Ok(0.0) } else { self.bessel_zero(0.5 * d as f64, n - 1) };
        }
        let key = (d, l);
        if let Some(v) = self.neumann.read().unwrap().get(&key) {
            if v.len() >= n as usize {
                return Ok(v[n as usize - 1]);
            }
        }
        let nu = l as f64 + 0.5 * d as f64 - 1.0;
        let lf = l as f64;
        let mut chain =
            self.neumann.read().unwrap().get(&key).cloned().unwrap_or_default();
        while chain.len() < n as usize {
            let k = chain.len() as u32 + 1; // index being computed
            let next = if k == 1 {
                let hi = self.bessel_zero(nu, 1)?;
                let mut lo = 0.5 * hi;
                let mut guard = 0;
                while neumann_g_pair(lf, nu, lo).0.sign() <= 0 {
                    lo *= 0.5;
                    guard += 1;
                    if guard > 80 {
                        return Err(Error::Convergence {
                            context: "mixed-condition first zero",
                            detail: format!("d={d}, l={l}: no positive region found"),
                        });
                    }
                }
                polish_neumann(lf, nu, lo, hi, 1)?
            } else {
                let lo = self.bessel_zero(nu + 1.0, k - 1)?;
                let hi = self.bessel_zero(nu, k)?;
                let s_lo = neumann_g_pair(lf, nu, lo).0.sign();
                let s_hi = neumann_g_pair(lf, nu, hi).0.sign();
                if s_lo == 0 {
                    lo // endpoint happens to be the root (never in exact math)
                } else if s_lo == s_hi {
                    return Err(Error::Convergence {
                        context: "mixed-condition bracket",
                        detail: format!("d={d}, l={l}, n={k}: no sign change in [{lo}, {hi}]"),
                    });
                } else {
                    polish_neumann(lf, nu, lo, hi, s_lo)?
                }
            };
            debug_assert!(chain.last().map_or(true, |&p| next > p));
            chain.push(next);
        }
        let value = chain[n as usize - 1];
        let mut w = self.neumann.write().unwrap();
        let entry = w.entry(key).or_default();
        if entry.len() < chain.len() {
            *entry = chain;
        }
        Ok(value)
    }

    pub fn entry_count(&self) -> usize {
        self.bessel.read().unwrap().values().map(Vec::len).sum::<usize>()
            + self.neumann.read().unwrap().values().map(Vec::len).sum::<usize>()
    }

    /// Serialize every cached zero. Lines are sorted for determinism.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = String::from("hyperdot-zeros v1\n");
        let bessel = self.bessel.read().unwrap();
        let mut orders: Vec<&u64> = bessel.keys().collect();
        orders.sort_by(|a, b| {
            f64::from_bits(**a).partial_cmp(&f64::from_bits(**b)).unwrap()
        });
        for key in orders {
            let nu = f64::from_bits(*key);
            for (i, z) in bessel[key].iter().enumerate() {
                out.push_str(&format!("J,{},{},{:.16e}\n", nu, i + 1, z));
            }
        }
        let neumann = self.neumann.read().unwrap();
        let mut keys: Vec<&(u32, u32)> = neumann.keys().collect();
        keys.sort();
        for key in keys {
            for (i, z) in neumann[key].iter().enumerate() {
                out.push_str(&format!("N,{}:{},{},{:.16e}\n", key.0, key.1, i + 1, z));
            }
        }
        std::fs::write(path, out)
            .map_err(|e| Error::CacheIo(format!("writing {}: {e}", path.display())))
    }

    /// Deserialize a cache file. A missing header, malformed line, gap in an
    /// index chain, or value failing its residual check discards the whole
    /// file (the cache is merely an accelerator — rebuild beats trusting a
    /// damaged file).
    pub fn load(path: &Path) -> Result<ZeroTable> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::CacheIo(format!("reading {}: {e}", path.display())))?;
        Ok(Self::parse(&text).unwrap_or_default())
    }

    /// Absorb every chain of `other` that is longer than ours.
    pub fn merge_from(&self, other: ZeroTable) {
        let ob = other.bessel.into_inner().unwrap();
        let mut b = self.bessel.write().unwrap();
        for (k, v) in ob {
            let e = b.entry(k).or_default();
            if e.len() < v.len() {
                *e = v;
            }
        }
        drop(b);
        let on = other.neumann.into_inner().unwrap();
        let mut n = self.neumann.write().unwrap();
        for (k, v) in on {
            let e = n.entry(k).or_default();
            if e.len() < v.len() {
                *e = v;
            }
        }
    }

    fn parse(text: &str) -> Option<ZeroTable> {
        let mut lines = text.lines();
        if lines.next()? != "hyperdot-zeros v1" {
            return None;
        }
        let mut bessel: HashMap<u64, Vec<(u32, f64)>> = HashMap::new();
        let mut neumann: HashMap<(u32, u32), Vec<(u32, f64)>> = HashMap::new();
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut f = line.split(',');
            let kind = f.next()?;
            let who = f.next()?;
            let n: u32 = f.next()?.parse().ok()?;
            let v: f64 = f.next()?.parse().ok()?;
            if f.next().is_some() || n == 0 || !v.is_finite() {
                return None;
            }
            match kind {
                "J" => {
                    let nu: f64 = who.parse().ok()?;
                    if !(nu >= 0.0) {
                        return None;
                    }
                    bessel.entry(nu.to_bits()).or_default().push((n, v));
                }
                "N" => {
                    let (d, l) = who.split_once(':')?;
                    let d: u32 = d.parse().ok()?;
                    let l: u32 = l.parse().ok()?;
                    neumann.entry((d, l)).or_default().push((n, v));
                }
                _ => return None,
            }
        }
        let table = ZeroTable::new();
        {
            let mut b = table.bessel.write().unwrap();
            for (key, entries) in bessel {
                let chain = contiguous_chain(entries)?;
                let nu = f64::from_bits(key);
                for &z in &chain {
                    verify_bessel_root(nu, z).ok()?;
                }
                b.insert(key, chain);
            }
        }
        {
            let mut nm = table.neumann.write().unwrap();
            for (&(d, l), entries) in &neumann {
                let chain = contiguous_chain(entries.clone())?;
                for (i, &z) in chain.iter().enumerate() {
                    verify_neumann_root(d, l, i as u32 + 1, z)?;
                }
                nm.insert((d, l), chain);
            }
        }
        Some(table)
    }
}

/// Entries (n, value) must form exactly 1..=len, strictly increasing.
fn contiguous_chain(mut entries: Vec<(u32, f64)>) -> Option<Vec<f64>> {
    entries.sort_by_key(|e| e.0);
    let mut chain = Vec::with_capacity(entries.len());
    for (i, (n, v)) in entries.into_iter().enumerate() {
        if n as usize != i + 1 {
            return None;
        }
        if let Some(&p) = chain.last() {
            if v <= p {
                return None;
            }
        }
        chain.push(v);
    }
    Some(chain)
}

fn verify_neumann_root(d: u32, l: u32, n: u32, z: f64) -> Option<()> {
    if l == 0 {
        if n == 1 {
            return if z == 0.0 { Some(()) } else { None };
        }
        return verify_bessel_root(0.5 * d as f64, z).ok().map(|_| ());
    }
    let nu = l as f64 + 0.5 * d as f64 - 1.0;
    let (jn, jn1) = bessel_j_pair_ln(nu, z);
    let t1 = jn.mul(LogReal::from_f64(l as f64));
    let t2 = jn1.mul(LogReal::from_f64(z));
    let g = t1.sub(t2);
    let scale = t1.ln_abs().max(t2.ln_abs());
    if g.is_zero() || g.ln_abs() - scale < (1e-8 * z.max(10.0)).ln() {
        Some(())
    } else {
        None
    }
}

static GLOBAL_ZEROS: OnceLock<ZeroTable> = OnceLock::new();

/// Process-wide shared zero cache (all profile and panel machinery goes
/// through this; explicit tables are only needed for persistence tests).
pub fn global_zeros() -> &'static ZeroTable {
    GLOBAL_ZEROS.get_or_init(ZeroTable::new)
}

/// n-th positive zero of J_nu through the shared cache.
pub fn bessel_zero(nu: f64, n: u32) -> Result<f64> {
    global_zeros().bessel_zero(nu, n)
}

/// n-th zero of the kernel-slope condition through the shared cache.
pub fn neumann_zero(d: u32, l: u32, n: u32) -> Result<f64> {
    global_zeros().neumann_zero(d, l, n)
}

//! Command-line workbench over the library: reproduce the measure tables,
//! emit the data behind the standard plots, run the invariant suites, and
//! manage the persistent zero cache.
//!
//! Exit codes: 0 on success, 1 when a computation fails (or a check suite
//! finds a violation), 2 on configuration errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::measures::{
    fisher, fisher_closed_form, fisher_gradient, measure_report, renyi, thresholds, EvalOpts,
    FisherClosedForm, MeasureReport, RenyiStatus,
};
use crate::specfun::{global_zeros, ZeroTable};
use crate::systems::{
    fourier_consistency, radial_overlap, QuantumNumbers, Space, SystemSpec,
};
use crate::uncertainty::{
    conjugate_beta, hydrogen_alpha_max, hydrogen_renyi_closed, hydrogen_sum_asymptote,
    renyi_order_limit, renyi_sum, shannon_check, tsallis_sides, RelationCheck, Verdict,
};

#[derive(Parser)]
#[command(
    name = "hyperdot",
    version,
    about = "Information-theoretic workbench for hyperspherical wells and hydrogen-like ions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Measure table as CSV: one row per dimension with Shannon, Fisher and
    /// Onicescu values in both spaces plus their sums and products
    Table(RunConfig),
    /// Data files behind the standard plots: waveforms, conjugate Renyi sums
    /// against their bound (with threshold sidecars), Tsallis sides
    Figure(RunConfig),
    /// Invariant, identity and oracle suites; exit 1 if anything is violated
    Check(RunConfig),
    /// Precompute and persist radial zeros for later runs (idempotent)
    Zeros(RunConfig),
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Debug)]
enum BcArg {
    /// hard wall: the profile vanishes at the unit radius
    Dirichlet,
    /// reflecting wall: the radial slope vanishes there
    Neumann,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Debug)]
enum FamilyArg {
    /// particle confined to the unit ball (see --bc)
    Dot,
    /// one-electron ion with a Coulomb center (d >= 3)
    Hydrogen,
}

/// Everything a subcommand needs. Not every flag is meaningful everywhere:
/// the figure command draws its canonical curve sets and only honors the
/// alpha grid, tolerance and paths; checks read the scale switches.
#[derive(Args, Debug, Clone)]
struct RunConfig {
    /// wall type of the dot family
    #[arg(long, value_enum, default_value_t = BcArg::Dirichlet)]
    bc: BcArg,

    /// physical family to evaluate
    #[arg(long, value_enum, default_value_t = FamilyArg::Dot)]
    system: FamilyArg,

    /// dimensions, an inclusive range "2..10" or a list "3,4,6"
    #[arg(long, default_value = "3")]
    dims: String,

    /// radial index (1-based); the zeros command reads it as "cache indices
    /// up to n"
    #[arg(long, default_value_t = 1)]
    n: u32,

    /// orbital index (0-based); the zeros command caches all l' <= l
    #[arg(long, default_value_t = 0)]
    l: u32,

    /// lower end of the Renyi order grid
    #[arg(long, default_value_t = 0.5)]
    alpha_min: f64,

    /// upper end of the Renyi order grid
    #[arg(long, default_value_t = 3.0)]
    alpha_max: f64,

    /// number of points on the order grid
    #[arg(long, default_value_t = 26)]
    alpha_points: u32,

    /// space the order grid logarithmically instead of linearly
    #[arg(long)]
    alpha_log: bool,

    /// output file (table, check report) or directory (figure data);
    /// defaults to stdout, or "." for figures
    #[arg(long)]
    out: Option<PathBuf>,

    /// zero-cache file; defaults to $HYPERDOT_CACHE_DIR/zeros.txt when that
    /// variable is set
    #[arg(long)]
    cache: Option<PathBuf>,

    /// relative quadrature tolerance override
    #[arg(long)]
    tol: Option<f64>,

    /// shrink the check suites to a smoke-test scale
    #[arg(long)]
    quick: bool,

    /// which figure to emit: 1 (waveforms), 2 (hard-wall Renyi sums),
    /// 3 (reflecting-wall Renyi sums), 4 (Tsallis sides) or "all"
    #[arg(long, default_value = "all")]
    which: String,

    /// testing aid: shift every inequality's right side before verdicts
    #[arg(long, hide = true, default_value_t = 0.0)]
    bound_shift: f64,
}

/// Entry point of the `hyperdot` binary.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Same as [`run`], with explicit arguments (the program name first).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here and are not errors
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Table(cfg) => cmd_table(cfg),
        Command::Figure(cfg) => cmd_figure(cfg),
        Command::Check(cfg) => cmd_check(cfg),
        Command::Zeros(cfg) => cmd_zeros(cfg),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) | Error::QuantumNumbers(_) | Error::Config(_) => 2,
                _ => 1,
            }
        }
    }
}

impl RunConfig {
    fn dims(&self) -> Result<Vec<u32>> {
        parse_dims(&self.dims)
    }

    fn spec_for(&self, d: u32) -> Result<SystemSpec> {
        match self.system {
            FamilyArg::Hydrogen => {
                if d < 3 {
                    return Err(Error::Config(format!(
                        "the hydrogen family needs d >= 3, got {d}"
                    )));
                }
                Ok(SystemSpec::hydrogen(d))
            }
            FamilyArg::Dot => {
                if d < 2 {
                    return Err(Error::Config(format!("dot systems need d >= 2, got {d}")));
                }
                Ok(match self.bc {
                    BcArg::Dirichlet => SystemSpec::dirichlet(d),
                    BcArg::Neumann => SystemSpec::neumann(d),
                })
            }
        }
    }

    fn qn(&self) -> QuantumNumbers {
        QuantumNumbers { n: self.n, l: self.l }
    }

    fn opts(&self, default_tol: f64) -> Result<EvalOpts> {
        match self.tol {
            None => Ok(EvalOpts { rel_tol: default_tol }),
            Some(t) if t.is_finite() && t > 0.0 && t < 0.1 => Ok(EvalOpts { rel_tol: t }),
            Some(t) => Err(Error::Config(format!("--tol must lie in (0, 0.1), got {t}"))),
        }
    }

    fn cache_path(&self) -> Option<PathBuf> {
        self.cache.clone().or_else(|| {
            std::env::var_os("HYPERDOT_CACHE_DIR")
                .map(|dir| PathBuf::from(dir).join("zeros.txt"))
        })
    }

    /// The requested order grid, with exact endpoints.
    fn alpha_grid(&self) -> Result<Vec<f64>> {
        let (lo, hi, k) = (self.alpha_min, self.alpha_max, self.alpha_points);
        if !lo.is_finite() || !hi.is_finite() || hi < lo {
            return Err(Error::Config(format!(
                "order grid needs finite alpha-min <= alpha-max, got [{lo}, {hi}]"
            )));
        }
        if k == 0 {
            return Err(Error::Config("--alpha-points must be at least 1".into()));
        }
        if self.alpha_log && lo <= 0.0 {
            return Err(Error::Config(
                "--alpha-log needs a strictly positive alpha-min".into(),
            ));
        }
        if k == 1 || hi == lo {
            return Ok(vec![lo]);
        }
        let mut grid = Vec::with_capacity(k as usize);
        for i in 0..k {
            let t = i as f64 / (k - 1) as f64;
            grid.push(if self.alpha_log {
                (lo.ln() + t * (hi.ln() - lo.ln())).exp()
            } else {
                lo + t * (hi - lo)
            });
        }
        grid[0] = lo;
        *grid.last_mut().unwrap() = hi;
        Ok(grid)
    }
}

fn parse_dims(s: &str) -> Result<Vec<u32>> {
    let bad = |why: &str| Error::Config(format!("--dims {s:?}: {why}"));
    let mut dims = Vec::new();
    if let Some((a, b)) = s.split_once("..") {
        let lo: u32 = a.trim().parse().map_err(|_| bad("range ends must be integers"))?;
        let hi: u32 = b.trim().parse().map_err(|_| bad("range ends must be integers"))?;
        if lo > hi {
            return Err(bad("empty range"));
        }
        dims.extend(lo..=hi);
    } else {
        for part in s.split(',') {
            dims.push(part.trim().parse().map_err(|_| bad("expected integers"))?);
        }
    }
    if dims.is_empty() {
        return Err(bad("no dimensions given"));
    }
    Ok(dims)
}

/// Twelve significant digits, the figure-file precision.
fn sci12(v: f64) -> String {
    if v == 0.0 {
        "0".into()
    } else if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:.11e}")
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))
}

/// Table and check output: a file when --out is given, stdout otherwise.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Warm the process-wide zero table from the configured cache file, if any.
/// A missing file is fine; an unreadable one only costs a warning, since
/// every zero can be recomputed.
fn seed_cache(cfg: &RunConfig) {
    let Some(path) = cfg.cache_path() else { return };
    if !path.exists() {
        return;
    }
    match ZeroTable::load(&path) {
        Ok(table) => global_zeros().merge_from(table),
        Err(e) => eprintln!("warning: ignoring zero cache {}: {e}", path.display()),
    }
}

fn linspace(lo: f64, hi: f64, k: usize) -> Vec<f64> {
    if k <= 1 {
        return vec![lo];
    }
    let mut g: Vec<f64> =
        (0..k).map(|i| lo + (hi - lo) * i as f64 / (k - 1) as f64).collect();
    g[0] = lo;
    g[k - 1] = hi;
    g
}

// ---------------------------------------------------------------- table --

fn cmd_table(cfg: &RunConfig) -> Result<i32> {
    seed_cache(cfg);
    let opts = cfg.opts(1e-8)?;
    let qn = cfg.qn();
    let mut csv = String::new();
    let mut line = |s: &str| {
        csv.push_str(s);
        csv.push('\n');
    };
    line(MeasureReport::csv_header());
    for d in cfg.dims()? {
        let spec = cfg.spec_for(d)?;
        let report = measure_report(&spec, qn, &opts)?;
        line(&report.csv_row());
    }
    emit(cfg.out.as_deref(), &csv)?;
    Ok(0)
}

// --------------------------------------------------------------- figure --

const FIGURE_DIMS: [u32; 4] = [3, 4, 5, 6];

fn cmd_figure(cfg: &RunConfig) -> Result<i32> {
    seed_cache(cfg);
    let dir = cfg.out.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&dir)
        .map_err(|e| Error::Io(format!("cannot create {}: {e}", dir.display())))?;
    let all = cfg.which == "all";
    let wants = |tag: &str| all || cfg.which == tag;
    if !all && !["1", "2", "3", "4"].contains(&cfg.which.as_str()) {
        return Err(Error::Config(format!(
            "--which must be 1, 2, 3, 4 or \"all\", got {:?}",
            cfg.which
        )));
    }
    if wants("1") {
        fig_waveforms(cfg, &dir)?;
    }
    if wants("2") {
        fig_renyi_sums(cfg, &dir, SystemSpec::dirichlet, "fig2", "dirichlet")?;
    }
    if wants("3") {
        fig_renyi_sums(cfg, &dir, SystemSpec::neumann, "fig3", "neumann")?;
    }
    if wants("4") {
        fig_tsallis_sides(cfg, &dir)?;
    }
    Ok(0)
}

/// Ground-state radial profiles of the dot (wall from --bc) and the ion in
/// both spaces, for d = 3..6, on fixed plotting grids.
fn fig_waveforms(cfg: &RunConfig, dir: &Path) -> Result<()> {
    let qn = QuantumNumbers { n: 1, l: 0 };
    let mut csv = String::from("system,d,space,x,value\n");
    for d in FIGURE_DIMS {
        let dot = match cfg.bc {
            BcArg::Dirichlet => SystemSpec::dirichlet(d),
            BcArg::Neumann => SystemSpec::neumann(d),
        };
        for spec in [dot, SystemSpec::hydrogen(d)] {
            for space in [Space::Position, Space::Momentum] {
                let profile = spec.profile(qn, space)?;
                let upper = match (space, profile.upper_limit()) {
                    (_, Some(r)) => r,
                    (Space::Position, None) => 12.0,
                    (Space::Momentum, None) => {
                        if spec.boundary().is_some() { 16.0 } else { 8.0 }
                    }
                };
                let tag = match space {
                    Space::Position => "position",
                    Space::Momentum => "momentum",
                };
                for x in linspace(0.0, upper, 321) {
                    let value = profile.value_ln(x).to_f64();
                    writeln!(csv, "{},{d},{tag},{},{}", spec.label(), sci12(x), sci12(value))
                        .unwrap();
                }
            }
        }
    }
    write_file(&dir.join("fig1_waveforms.csv"), &csv)
}

/// Conjugate Renyi entropy sums of the dot ground state against their
/// bound, shifted down by (d - 3) ln 2pi so different d share a panel.
/// Orders past the window edge become "divergent" rows, and the edge itself
/// goes to a threshold sidecar file.
fn fig_renyi_sums(
    cfg: &RunConfig,
    dir: &Path,
    family: fn(u32) -> SystemSpec,
    tag: &str,
    label: &str,
) -> Result<()> {
    let opts = cfg.opts(1e-6)?;
    let qn = QuantumNumbers { n: 1, l: 0 };
    let grid = cfg.alpha_grid()?;
    if grid.iter().any(|a| *a < 0.5) {
        eprintln!(
            "warning: orders below 1/2 have no conjugate; clipping the grid to [0.5, {}]",
            cfg.alpha_max
        );
    }
    let mut csv = String::from("d,alpha,beta,sum_shifted,bound_shifted,status\n");
    let mut side = String::from("d,alpha_limit\n");
    for d in FIGURE_DIMS {
        let spec = family(d);
        let limit = renyi_order_limit(&spec);
        let shift = (d as f64 - 3.0) * (2.0 * std::f64::consts::PI).ln();
        writeln!(side, "{d},{}", sci12(limit.unwrap_or(f64::INFINITY))).unwrap();
        for &alpha in grid.iter().filter(|a| **a >= 0.5) {
            let beta =
                sci12(if alpha == 0.5 { f64::INFINITY } else { conjugate_beta(alpha)? });
            if limit.is_some_and(|lim| alpha >= lim) {
                writeln!(csv, "{d},{},{beta},,,divergent", sci12(alpha)).unwrap();
                continue;
            }
            let check = renyi_sum(&spec, qn, alpha, &opts)?;
            writeln!(
                csv,
                "{d},{},{beta},{},{},ok",
                sci12(alpha),
                sci12(check.left - shift),
                sci12(check.right - shift)
            )
            .unwrap();
        }
    }
    write_file(&dir.join(format!("{tag}_renyi_sum_{label}.csv")), &csv)?;
    write_file(&dir.join(format!("{tag}_thresholds_{label}.csv")), &side)
}

/// Both sides of the Tsallis relation for the 3-d hard-wall ground state
/// over the orders where it holds, alpha in [1/2, 1].
fn fig_tsallis_sides(cfg: &RunConfig, dir: &Path) -> Result<()> {
    let opts = cfg.opts(1e-8)?;
    let spec = SystemSpec::dirichlet(3);
    let qn = QuantumNumbers { n: 1, l: 0 };
    let mut csv = String::from("alpha,beta,position_side,momentum_side\n");
    for alpha in linspace(0.5, 1.0, cfg.alpha_points.max(2) as usize) {
        let check = tsallis_sides(&spec, qn, alpha, &opts)?;
        writeln!(
            csv,
            "{},{},{},{}",
            sci12(alpha),
            sci12(check.beta),
            sci12(check.left),
            sci12(check.right)
        )
        .unwrap();
    }
    write_file(&dir.join("fig4_tsallis_sides.csv"), &csv)
}

// ---------------------------------------------------------------- check --

struct CheckReport {
    text: String,
    failed: u32,
}

impl CheckReport {
    fn new() -> Self {
        CheckReport { text: String::from("# invariant and identity suites\n"), failed: 0 }
    }

    fn suite(&mut self, name: &str, ok: bool, detail: &str) {
        writeln!(self.text, "{} {name}: {detail}", if ok { "PASS" } else { "FAIL" }).unwrap();
        if !ok {
            self.failed += 1;
        }
    }
}

/// How far each suite reaches. The full scale covers every dimension and
/// state the acceptance gates talk about; --quick is a smoke test.
struct Scale {
    dot_dims: Vec<u32>,
    hyd_dims: Vec<u32>,
    fisher_dims: Vec<u32>,
    n_max: u32,
    l_max: u32,
    pair_max: u32,
    alpha_points: usize,
    mono_points: usize,
}

fn scale(quick: bool) -> Scale {
    if quick {
        Scale {
            dot_dims: vec![2, 3],
            hyd_dims: vec![3],
            fisher_dims: vec![3, 4],
            n_max: 2,
            l_max: 1,
            pair_max: 2,
            alpha_points: 5,
            mono_points: 6,
        }
    } else {
        Scale {
            dot_dims: (2..=6).collect(),
            hyd_dims: (3..=6).collect(),
            fisher_dims: (2..=8).collect(),
            n_max: 3,
            l_max: 2,
            pair_max: 4,
            alpha_points: 12,
            mono_points: 10,
        }
    }
}

fn all_specs(sc: &Scale) -> Vec<SystemSpec> {
    let mut specs = Vec::new();
    for &d in &sc.dot_dims {
        specs.push(SystemSpec::dirichlet(d));
        specs.push(SystemSpec::neumann(d));
    }
    for &d in &sc.hyd_dims {
        specs.push(SystemSpec::hydrogen(d));
    }
    specs
}

fn cmd_check(cfg: &RunConfig) -> Result<i32> {
    seed_cache(cfg);
    let sc = scale(cfg.quick);
    let mut report = CheckReport::new();
    suite_relation_sweep(cfg, &sc, &mut report)?;
    suite_ground_saturation(cfg, &sc, &mut report)?;
    suite_tsallis_endpoints(cfg, &mut report)?;
    suite_ion_closed_forms(cfg, &mut report)?;
    suite_transform_residuals(&sc, &mut report)?;
    suite_fisher_forms(&sc, &mut report)?;
    suite_scale_invariance(cfg.quick, &mut report)?;
    suite_order_monotonicity(&sc, &mut report)?;
    let ok = report.failed == 0;
    writeln!(
        report.text,
        "# verdict: {} ({} suite(s) failed)",
        if ok { "PASS" } else { "FAIL" },
        report.failed
    )
    .unwrap();
    print!("{}", report.text);
    if let Some(path) = cfg.out.as_deref() {
        write_file(path, &report.text)?;
    }
    Ok(if ok { 0 } else { 1 })
}

/// Shannon, Renyi and Tsallis relations across systems, states and orders:
/// no instance may come out below its bound.
fn suite_relation_sweep(cfg: &RunConfig, sc: &Scale, report: &mut CheckReport) -> Result<()> {
    let sweep = cfg.opts(1e-6)?;
    let tight = EvalOpts { rel_tol: 1e-10 };
    let mut checks = 0u32;
    let mut violations = 0u32;
    let mut min_slack = f64::INFINITY;
    let mut worst = String::from("-");
    let mut tally = |mut c: RelationCheck| {
        c.right += cfg.bound_shift;
        checks += 1;
        if c.verdict() == Verdict::Violated {
            violations += 1;
        }
        if c.slack() < min_slack {
            min_slack = c.slack();
            worst = format!(
                "{} {} d={} n={} alpha={:.4}",
                c.kind.label(),
                c.spec.label(),
                c.spec.d,
                c.qn.n,
                c.alpha
            );
        }
    };
    for spec in all_specs(sc) {
        for n in 1..=sc.n_max {
            let qn = QuantumNumbers { n, l: 0 };
            tally(shannon_check(&spec, qn, &sweep)?);
            // stay a little clear of the window edge, where the conjugate
            // order sits almost on the momentum convergence threshold
            let hi = match renyi_order_limit(&spec) {
                Some(limit) => 0.5 + 0.85 * (limit - 0.5),
                None => 3.0,
            };
            for alpha in linspace(0.5, hi, sc.alpha_points) {
                // the saturated ground identity at alpha = 1/2 needs
                // identity-grade accuracy; everywhere else the slack dwarfs
                // the sweep tolerance
                let opts = if alpha == 0.5 && n == 1 { &tight } else { &sweep };
                tally(renyi_sum(&spec, qn, alpha, opts)?);
            }
            // both Tsallis endpoints are analytic identities whose slack
            // must be resolved well below the violation margin
            for alpha in [0.5, 0.75, 1.0] {
                tally(tsallis_sides(&spec, qn, alpha, &tight)?);
            }
        }
    }
    report.suite(
        "relation sweep",
        violations == 0,
        &format!(
            "{checks} checks, {violations} violated; smallest slack {min_slack:.3e} ({worst})"
        ),
    );
    Ok(())
}

/// Ground states must saturate the Renyi sum at alpha = 1/2 to identity
/// precision, and excited states must clear it by a real margin.
fn suite_ground_saturation(cfg: &RunConfig, sc: &Scale, report: &mut CheckReport) -> Result<()> {
    let tight = EvalOpts { rel_tol: 1e-10 };
    let mut worst_abs = 0.0f64;
    let mut min_excited = f64::INFINITY;
    let mut ok = true;
    for spec in all_specs(sc) {
        let mut ground = renyi_sum(&spec, QuantumNumbers { n: 1, l: 0 }, 0.5, &tight)?;
        ground.right += cfg.bound_shift;
        worst_abs = worst_abs.max(ground.slack().abs());
        ok &= ground.verdict() == Verdict::Identity;
        let mut excited = renyi_sum(&spec, QuantumNumbers { n: 2, l: 0 }, 0.5, &tight)?;
        excited.right += cfg.bound_shift;
        min_excited = min_excited.min(excited.slack());
        ok &= excited.verdict() == Verdict::Strict && excited.slack() > 1e-3;
    }
    report.suite(
        "ground saturation at alpha = 1/2",
        ok,
        &format!(
            "worst ground |slack| {worst_abs:.3e}, smallest excited slack {min_excited:.3e}"
        ),
    );
    Ok(())
}

/// The Tsallis sides of the 3-d hard-wall ground state meet at both ends of
/// the order window and stay strictly ordered inside it.
fn suite_tsallis_endpoints(cfg: &RunConfig, report: &mut CheckReport) -> Result<()> {
    let opts = EvalOpts { rel_tol: 1e-10 };
    let spec = SystemSpec::dirichlet(3);
    let qn = QuantumNumbers { n: 1, l: 0 };
    let mut ok = true;
    let mut detail = String::new();
    for (alpha, expect) in [
        (0.5, 1.0 / (std::f64::consts::PI * std::f64::consts::PI)),
        (1.0, std::f64::consts::PI.powf(-0.75)),
    ] {
        let mut c = tsallis_sides(&spec, qn, alpha, &opts)?;
        c.right += cfg.bound_shift;
        let gap = (c.left - c.right).abs();
        ok &= gap <= 1e-8 * expect.abs() && (c.left - expect).abs() <= 1e-6 * expect;
        write!(detail, "alpha={alpha}: sides differ by {gap:.3e}; ").unwrap();
    }
    let mut mid = tsallis_sides(&spec, qn, 0.75, &opts)?;
    mid.right += cfg.bound_shift;
    ok &= mid.verdict() != Verdict::Violated && mid.slack() > 0.0;
    write!(detail, "interior slack {:.3e}", mid.slack()).unwrap();
    report.suite("tsallis endpoints", ok, &detail);
    Ok(())
}

/// The ion's closed-form entropies against frozen values and quadrature.
fn suite_ion_closed_forms(cfg: &RunConfig, report: &mut CheckReport) -> Result<()> {
    let opts = EvalOpts { rel_tol: 1e-9 };
    let qn = QuantumNumbers { n: 1, l: 0 };
    let mut worst = 0.0f64;
    let mut ok = true;

    let pos = hydrogen_renyi_closed(3, 2.0, Space::Position)?;
    let expect = (8.0 * std::f64::consts::PI).ln();
    ok &= (pos - expect).abs() <= 1e-12;

    let asym = hydrogen_sum_asymptote(3)?;
    ok &= (asym - 3.0 * (2.0 * std::f64::consts::PI).ln()).abs() <= 1e-12;

    for (d, frozen) in [(3u32, 1.1798), (4, 1.1498), (5, 1.1272)] {
        let a = hydrogen_alpha_max(d)?;
        ok &= (a - frozen).abs() <= 2e-3;
    }

    let mut cross = |d: u32, alpha: f64, space: Space| -> Result<()> {
        let closed = hydrogen_renyi_closed(d, alpha, space)?;
        let spec = SystemSpec::hydrogen(d);
        let quad = renyi(&spec, qn, space, alpha, &opts)?;
        let err = (closed - quad.value).abs() / closed.abs().max(1.0);
        worst = worst.max(err);
        Ok(())
    };
    cross(3, 2.0, Space::Position)?;
    cross(3, 1.7, Space::Momentum)?;
    if !cfg.quick {
        cross(4, 0.9, Space::Momentum)?;
        cross(5, 1.3, Space::Momentum)?;
    }
    ok &= worst <= 1e-6;
    report.suite(
        "ion closed forms",
        ok,
        &format!("worst closed-vs-quadrature residual {worst:.3e}"),
    );
    Ok(())
}

/// Orthonormality in both spaces and transform consistency: the oracles
/// that tie profiles to their definitions.
fn suite_transform_residuals(sc: &Scale, report: &mut CheckReport) -> Result<()> {
    let mut worst = 0.0f64;
    for spec in all_specs(sc) {
        // the ion's principal numbering only has states with l <= n - 1
        let n_lo = |l: u32| if spec.boundary().is_none() { l + 1 } else { 1 };
        for l in 0..=sc.l_max {
            for space in [Space::Position, Space::Momentum] {
                for n in n_lo(l)..=sc.pair_max {
                    for m in n..=sc.pair_max {
                        let a = spec.profile(QuantumNumbers { n, l }, space)?;
                        let b = spec.profile(QuantumNumbers { n: m, l }, space)?;
                        let ovl = radial_overlap(&a, &b, 1e-9)?;
                        let target = if n == m { 1.0 } else { 0.0 };
                        worst = worst.max((ovl - target).abs());
                    }
                }
            }
        }
        let states: &[(u32, u32)] =
            if sc.n_max >= 3 { &[(1, 0), (2, 1)] } else { &[(1, 0)] };
        for &(n, l) in states {
            let qn = QuantumNumbers { n, l };
            let res = fourier_consistency(&spec, qn, &[0.4, 1.7, 6.3], 1e-10)?;
            worst = worst.max(res);
        }
    }
    report.suite(
        "transform and overlap residuals",
        worst <= 1e-8,
        &format!("worst residual {worst:.3e}"),
    );
    Ok(())
}

/// Fisher information against its closed forms: the position value is pure
/// spectrum, the gradient functional must agree with it, and the momentum
/// value has exact expressions in the tabulated cases.
fn suite_fisher_forms(sc: &Scale, report: &mut CheckReport) -> Result<()> {
    let opts = EvalOpts { rel_tol: 1e-9 };
    let mut worst = 0.0f64;
    let mut track = |a: f64, b: f64| {
        worst = worst.max((a - b).abs() / b.abs().max(1.0));
    };
    for &d in &sc.fisher_dims {
        let mut specs = vec![SystemSpec::dirichlet(d), SystemSpec::neumann(d)];
        if d >= 3 {
            specs.push(SystemSpec::hydrogen(d));
        }
        for spec in specs {
            for n in 1..=sc.n_max.min(3) {
                for l in 0..=sc.l_max.min(2) {
                    if spec.boundary().is_none() && l >= n {
                        continue;
                    }
                    let qn = QuantumNumbers { n, l };
                    track(
                        fisher_gradient(&spec, qn, &opts)?,
                        fisher(&spec, qn, Space::Position, &opts)?,
                    );
                }
            }
        }
        track(
            fisher(&SystemSpec::neumann(d), QuantumNumbers { n: 1, l: 0 }, Space::Momentum, &opts)?,
            fisher_closed_form(FisherClosedForm::ReflectingGroundMomentum { d }),
        );
    }
    for n in 1..=sc.n_max.min(3) {
        track(
            fisher(&SystemSpec::dirichlet(3), QuantumNumbers { n, l: 0 }, Space::Momentum, &opts)?,
            fisher_closed_form(FisherClosedForm::HardWallMomentum3d { n }),
        );
        track(
            fisher(&SystemSpec::dirichlet(4), QuantumNumbers { n, l: 0 }, Space::Momentum, &opts)?,
            fisher_closed_form(FisherClosedForm::BallMomentum4d),
        );
        if n >= 2 {
            track(
                fisher(&SystemSpec::neumann(4), QuantumNumbers { n, l: 0 }, Space::Momentum, &opts)?,
                fisher_closed_form(FisherClosedForm::BallMomentum4d),
            );
        }
    }
    report.suite(
        "fisher closed forms",
        worst <= 1e-7,
        &format!("worst relative deviation {worst:.3e}"),
    );
    Ok(())
}

/// Rescaling the confinement radius must shift per-space values by exact
/// amounts and leave sums and products untouched.
fn suite_scale_invariance(quick: bool, report: &mut CheckReport) -> Result<()> {
    let opts = EvalOpts { rel_tol: 1e-8 };
    let cases: &[(SystemSpec, u32, u32)] = if quick {
        &[(SystemSpec::dirichlet(3), 1, 0)]
    } else {
        &[
            (SystemSpec::dirichlet(4), 2, 1),
            (SystemSpec::neumann(3), 1, 0),
            (SystemSpec::hydrogen(3), 2, 0),
        ]
    };
    let factor = 2.5f64;
    let mut worst = 0.0f64;
    for &(spec, n, l) in cases {
        let qn = QuantumNumbers { n, l };
        let base = measure_report(&spec, qn, &opts)?;
        let scaled = measure_report(&spec.with_length(factor), qn, &opts)?;
        let d = spec.d as f64;
        let shift = d * factor.ln();
        let mut track = |a: f64, b: f64, scale: f64| {
            worst = worst.max((a - b).abs() / scale.abs().max(1.0));
        };
        track(scaled.shannon_sum(), base.shannon_sum(), base.shannon_sum());
        track(scaled.fisher_product(), base.fisher_product(), base.fisher_product());
        track(
            scaled.onicescu_product().ln_abs(),
            base.onicescu_product().ln_abs(),
            base.onicescu_product().ln_abs(),
        );
        track(scaled.shannon_rho - base.shannon_rho, shift, shift);
        track(scaled.shannon_gamma - base.shannon_gamma, -shift, shift);
        track(scaled.fisher_rho * factor * factor, base.fisher_rho, base.fisher_rho);
        track(
            scaled.onicescu_rho.ln_abs() + shift,
            base.onicescu_rho.ln_abs(),
            base.onicescu_rho.ln_abs().abs().max(1.0),
        );
    }
    report.suite(
        "confinement-scale invariance",
        worst <= 1e-9,
        &format!("worst relative deviation {worst:.3e}"),
    );
    Ok(())
}

/// Renyi entropy must be nonincreasing in its order, in both spaces.
fn suite_order_monotonicity(sc: &Scale, report: &mut CheckReport) -> Result<()> {
    let opts = EvalOpts { rel_tol: 1e-8 };
    let qn = QuantumNumbers { n: 1, l: 0 };
    let mut cases: Vec<(SystemSpec, Space)> = vec![
        (SystemSpec::dirichlet(3), Space::Position),
        (SystemSpec::dirichlet(3), Space::Momentum),
    ];
    if sc.n_max >= 3 {
        cases.push((SystemSpec::neumann(5), Space::Momentum));
        cases.push((SystemSpec::hydrogen(4), Space::Momentum));
    }
    let mut worst_rise = 0.0f64;
    for (spec, space) in cases {
        let grid = match space {
            Space::Position => linspace(0.1, 3.0, sc.mono_points),
            Space::Momentum => {
                let (edge, _) = thresholds(&spec, 0);
                linspace(edge * 1.1, 3.0, sc.mono_points)
            }
        };
        let mut prev = f64::INFINITY;
        for alpha in grid {
            let pt = renyi(&spec, qn, space, alpha, &opts)?;
            if pt.status != RenyiStatus::Finite {
                return Err(Error::Domain(format!(
                    "monotonicity grid hit a non-finite point at alpha = {alpha}"
                )));
            }
            worst_rise = worst_rise.max(pt.value - prev);
            prev = pt.value;
        }
    }
    report.suite(
        "order monotonicity",
        worst_rise <= 1e-6,
        &format!("largest rise along the order grid {worst_rise:.3e}"),
    );
    Ok(())
}

// ---------------------------------------------------------------- zeros --

fn cmd_zeros(cfg: &RunConfig) -> Result<i32> {
    let path = cfg.cache_path().ok_or_else(|| {
        Error::Config("zeros needs --cache PATH (or HYPERDOT_CACHE_DIR set)".into())
    })?;
    let table = if path.exists() { ZeroTable::load(&path)? } else { ZeroTable::new() };
    let before = table.entry_count();
    for d in cfg.dims()? {
        if d < 2 {
            return Err(Error::Config(format!("dot systems need d >= 2, got {d}")));
        }
        for l in 0..=cfg.l {
            let nu = l as f64 + 0.5 * d as f64 - 1.0;
            table.bessel_zeros_upto(nu, cfg.n)?;
            for n in 1..=cfg.n {
                table.neumann_zero(d, l, n)?;
            }
        }
    }
    let after = table.entry_count();
    if after != before {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)
                    .map_err(|e| Error::Io(format!("cannot create {}: {e}", parent.display())))?;
            }
        }
        table.save(&path)?;
        println!("zero cache {}: {after} entries ({} new)", path.display(), after - before);
    } else {
        println!("zero cache {}: up to date ({after} entries)", path.display());
    }
    global_zeros().merge_from(table);
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        let mut full = vec!["hyperdot", "table"];
        full.extend(args);
        match Cli::try_parse_from(full).unwrap().command {
            Command::Table(cfg) => cfg,
            _ => unreachable!(),
        }
    }

    #[test]
    fn dims_parse_ranges_and_lists() {
        assert_eq!(parse_dims("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_dims("7").unwrap(), vec![7]);
        assert_eq!(parse_dims("3, 10,2").unwrap(), vec![3, 10, 2]);
        assert!(parse_dims("5..2").is_err());
        assert!(parse_dims("a..b").is_err());
        assert!(parse_dims("").is_err());
    }

    #[test]
    fn alpha_grids_hit_their_endpoints() {
        let linear = cfg(&["--alpha-min", "0.5", "--alpha-max", "3", "--alpha-points", "6"]);
        let g = linear.alpha_grid().unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g[0], 0.5);
        assert_eq!(g[5], 3.0);
        let log = cfg(&[
            "--alpha-min", "0.5", "--alpha-max", "2", "--alpha-points", "3", "--alpha-log",
        ]);
        let g = log.alpha_grid().unwrap();
        assert!((g[1] - 1.0).abs() < 1e-12, "log midpoint {}", g[1]);
        assert!(cfg(&["--alpha-min", "2", "--alpha-max", "1"]).alpha_grid().is_err());
        assert!(cfg(&["--alpha-min=-1", "--alpha-log"]).alpha_grid().is_err());
    }

    #[test]
    fn config_errors_exit_with_two() {
        assert_eq!(run_from(["hyperdot", "table", "--dims", "nope"]), 2);
        assert_eq!(run_from(["hyperdot", "table", "--system", "hydrogen", "--dims", "2"]), 2);
        assert_eq!(run_from(["hyperdot", "table", "--dims", "1..3"]), 2);
        assert_eq!(run_from(["hyperdot", "table", "--tol", "7"]), 2);
        assert_eq!(run_from(["hyperdot", "figure", "--which", "9"]), 2);
        assert_eq!(run_from(["hyperdot", "zeros", "--cache-less-typo"]), 2);
    }

    #[test]
    fn table_rows_are_deterministic_and_scale_with_length() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("t.csv");
        let args = |p: &Path| {
            vec![
                "hyperdot".to_string(),
                "table".into(),
                "--dims".into(),
                "3,4".into(),
                "--tol".into(),
                "1e-7".into(),
                "--out".into(),
                p.display().to_string(),
            ]
        };
        assert_eq!(run_from(args(&out)), 0);
        let first = fs::read_to_string(&out).unwrap();
        let lines: Vec<&str> = first.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("system,d,n,l,shannon_rho"));
        assert!(lines[1].starts_with("dirichlet,3,1,0,"));
        let out2 = dir.path().join("t2.csv");
        assert_eq!(run_from(args(&out2)), 0);
        assert_eq!(first, fs::read_to_string(&out2).unwrap());
    }

    #[test]
    fn zero_cache_round_trips_and_stays_put() {
        let dir = tempfile::tempdir().unwrap();
        let cache = dir.path().join("zeros.txt");
        let args: Vec<String> = [
            "hyperdot", "zeros", "--dims", "3..5", "--n", "4", "--l", "1", "--cache",
        ]
        .iter()
        .map(|s| s.to_string())
        .chain([cache.display().to_string()])
        .collect();
        assert_eq!(run_from(args.clone()), 0);
        let first = fs::read_to_string(&cache).unwrap();
        assert!(first.starts_with("hyperdot-zeros v1"));
        assert_eq!(run_from(args), 0);
        assert_eq!(first, fs::read_to_string(&cache).unwrap());
    }

    #[test]
    fn tsallis_figure_reproduces_the_endpoint_values() {
        let dir = tempfile::tempdir().unwrap();
        let code = run_from([
            "hyperdot",
            "figure",
            "--which",
            "4",
            "--alpha-points",
            "3",
            "--out",
            &dir.path().display().to_string(),
        ]);
        assert_eq!(code, 0);
        let csv = fs::read_to_string(dir.path().join("fig4_tsallis_sides.csv")).unwrap();
        let rows: Vec<&str> = csv.lines().collect();
        assert_eq!(rows.len(), 4);
        let first: Vec<&str> = rows[1].split(',').collect();
        let last: Vec<&str> = rows[3].split(',').collect();
        let phi0: f64 = first[2].parse().unwrap();
        let phi1: f64 = last[2].parse().unwrap();
        assert!((phi0 - 0.10132).abs() < 1e-4, "phi(1/2) = {phi0}");
        assert!((phi1 - 0.42377).abs() < 1e-4, "phi(1) = {phi1}");
        assert_eq!(first[1], "inf");
    }
}

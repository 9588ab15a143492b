//! Grid sweeps from a JSON config, closed-form printing and the result cache.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bivariate;
use crate::check::{compare_polys, Mismatch, Outcome};
use crate::engine::{self, Bounds};
use crate::error::{Error, Result};
use crate::gf::{is_prime, prime_power};
use crate::orbits;
use crate::qtcomb::{self, pw, Composition, WeakComposition};
use crate::series::TPoly;

/// Bumped whenever a check's meaning changes, invalidating cached results.
pub const VERSION_TAG: &str = concat!("qtinv-", env!("CARGO_PKG_VERSION"), "-r1");
pub const OUTPUT_DIR_ENV: &str = "QTINV_OUTPUT_DIR";
const RECURRENCE_ORDER: usize = 200;
const RR_ORDER: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Conj1,
    Conj2,
    Truncation,
    Duality,
    M1,
    Orbits,
    Csp,
    Kuhn,
    Recurrence,
    N3,
    Bivariate,
    Limits,
    Rr,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::Conj1,
        Check::Conj2,
        Check::Truncation,
        Check::Duality,
        Check::M1,
        Check::Orbits,
        Check::Csp,
        Check::Kuhn,
        Check::Recurrence,
        Check::N3,
        Check::Bivariate,
        Check::Limits,
        Check::Rr,
    ];
    pub fn name(self) -> String {
        serde_json::to_value(self).unwrap().as_str().unwrap().to_string()
    }
}

/// One grid point: `F_q` with `q = p^r`, `n` variables, Frobenius power `m`, composition `α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub p: u64,
    pub r: u32,
    pub n: u32,
    pub m: u32,
    pub alpha: Composition,
}

impl Cell {
    pub fn q(&self) -> u64 {
        pw(self.p, self.r)
    }
    pub fn id(&self) -> String {
        let a: Vec<String> = self.alpha.parts().iter().map(|x| x.to_string()).collect();
        format!("q{}_n{}_m{}_a{}", self.q(), self.n, self.m, a.join("-"))
    }
    fn validate(&self) -> Result<()> {
        if !is_prime(self.p) || self.r == 0 {
            return Err(Error::ConfigInvalid(format!("p = {}, r = {} does not give a field", self.p, self.r)));
        }
        if self.alpha.n() != self.n {
            return Err(Error::ConfigInvalid(format!("{} is not a composition of {}", self.alpha, self.n)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Range {
    pub from: u32,
    pub to: u32,
}

/// A cell as `[p, r, n, m, [α]]`, as an object, or a range over `q`, `n`, `m`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum CellSpec {
    Tuple(u64, u32, u32, u32, Vec<u32>),
    Single {
        p: u64,
        r: u32,
        n: u32,
        m: u32,
        alpha: Vec<u32>,
    },
    Grid {
        q: Vec<u64>,
        n: Range,
        m: Range,
        /// All compositions of `n` when absent.
        #[serde(default)]
        alpha: Option<Vec<Vec<u32>>>,
    },
}

impl CellSpec {
    fn expand(&self) -> Result<Vec<Cell>> {
        let single = |p: u64, r: u32, n: u32, m: u32, alpha: &[u32]| -> Result<Cell> {
            let alpha = Composition::new(alpha.to_vec()).map_err(|e| Error::ConfigInvalid(e.to_string()))?;
            let c = Cell { p, r, n, m, alpha };
            c.validate()?;
            Ok(c)
        };
        match self {
            CellSpec::Tuple(p, r, n, m, a) => Ok(vec![single(*p, *r, *n, *m, a)?]),
            CellSpec::Single { p, r, n, m, alpha } => Ok(vec![single(*p, *r, *n, *m, alpha)?]),
            CellSpec::Grid { q, n, m, alpha } => {
                let mut out = Vec::new();
                for &qq in q {
                    let (p, r) = prime_power(qq).ok_or_else(|| Error::ConfigInvalid(format!("{qq} is not a prime power")))?;
                    for nn in n.from.max(1)..=n.to {
                        let comps = match alpha {
                            None => Composition::all(nn),
                            Some(list) => list
                                .iter()
                                .filter(|a| a.iter().sum::<u32>() == nn)
                                .map(|a| Composition::new(a.clone()).map_err(|e| Error::ConfigInvalid(e.to_string())))
                                .collect::<Result<_>>()?,
                        };
                        for mm in m.from..=m.to {
                            for a in &comps {
                                out.push(single(p, r, nn, mm, a.parts())?);
                            }
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq, Eq)]
pub struct BoundsConfig {
    #[serde(default)]
    pub basis_bound: Option<u64>,
    #[serde(default)]
    pub enum_bound: Option<u64>,
    /// Truncation degree `D` for cofixed checks; `3q^2` when absent.
    #[serde(default)]
    pub max_degree: Option<u32>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GridConfig {
    #[serde(default)]
    pub cells: Vec<CellSpec>,
    #[serde(default)]
    pub checks: Option<Vec<Check>>,
    #[serde(default)]
    pub bounds: BoundsConfig,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
}

impl GridConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::ConfigInvalid(e.to_string()))
    }
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::ConfigInvalid(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
    /// Expanded cells in config order; a cell listed more than once runs once.
    pub fn cells(&self) -> Result<Vec<Cell>> {
        let mut out: Vec<Cell> = Vec::new();
        for s in &self.cells {
            for c in s.expand()? {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        Ok(out)
    }
    pub fn checks(&self) -> Vec<Check> {
        let mut c = self.checks.clone().unwrap_or_else(|| Check::ALL.to_vec());
        c.sort();
        c.dedup();
        c
    }
}

/// Resolved limits for a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RunBounds {
    pub engine: Bounds,
    pub max_degree: Option<u32>,
}

impl RunBounds {
    pub fn from_config(c: &BoundsConfig) -> Self {
        let mut engine = Bounds::default();
        if let Some(b) = c.basis_bound {
            engine.basis_bound = b;
        }
        if let Some(b) = c.enum_bound {
            engine.enum_bound = b;
        }
        RunBounds {
            engine,
            max_degree: c.max_degree,
        }
    }
    pub fn cofixed_degree(&self, q: u64) -> u32 {
        self.max_degree.unwrap_or((3 * q * q) as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub computed: Option<TPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<TPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<Mismatch>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl CheckReport {
    fn skipped(reason: impl Into<String>) -> Self {
        CheckReport {
            status: Status::Skipped,
            reason: Some(reason.into()),
            computed: None,
            closed_form: None,
            mismatch: None,
            notes: Vec::new(),
            details: None,
        }
    }
    fn from_outcome(o: Outcome) -> Self {
        CheckReport {
            status: if o.passed { Status::Pass } else { Status::Fail },
            reason: None,
            computed: None,
            closed_form: None,
            mismatch: o.mismatch,
            notes: o.notes,
            details: None,
        }
    }
    fn with_series(mut self, computed: TPoly, closed: TPoly) -> Self {
        self.computed = Some(computed);
        self.closed_form = Some(closed);
        self
    }
    fn with_details(mut self, d: impl Serialize) -> Self {
        self.details = Some(serde_json::to_value(d).expect("report details serialize"));
        self
    }
    fn from_error(e: Error) -> Self {
        match e {
            Error::ProblemTooLarge(_) | Error::TooManyVectors { .. } | Error::TooLarge { .. } => {
                Self::skipped(e.to_string())
            }
            other => CheckReport {
                status: Status::Fail,
                reason: Some(other.to_string()),
                computed: None,
                closed_form: None,
                mismatch: None,
                notes: Vec::new(),
                details: None,
            },
        }
    }
}

fn is_full_group(cell: &Cell) -> bool {
    cell.alpha.len() == 1
}

/// Runs one check on one cell.
pub fn run_check(cell: &Cell, check: Check, bounds: &RunBounds) -> CheckReport {
    match try_check(cell, check, bounds) {
        Ok(r) => r,
        Err(e) => CheckReport::from_error(e),
    }
}

fn try_check(cell: &Cell, check: Check, bounds: &RunBounds) -> Result<CheckReport> {
    let (q, n, m, a) = (cell.q(), cell.n, cell.m, &cell.alpha);
    let b = &bounds.engine;
    Ok(match check {
        Check::Conj1 => {
            let got = engine::hilb_fixed_Q(q, n, m, a, b)?;
            let closed = qtcomb::parabolic_C(q, m, a);
            let o = Outcome::from_mismatch(compare_polys(&got.series, &closed)).and(qtcomb::check_monic_degree(q, m, a));
            CheckReport::from_outcome(o).with_series(got.series, closed)
        }
        Check::Conj2 => {
            let top = (pw(q, m) - 1).min(bounds.cofixed_degree(q) as u64) as u32;
            let got = engine::hilb_cofixed_S(q, n, a, top, b)?;
            let expected = qtcomb::conj2_rhs(q, a).expand(top as usize + 1).to_poly();
            CheckReport::from_outcome(Outcome::from_mismatch(compare_polys(&got.series, &expected)))
                .with_series(got.series, expected)
        }
        Check::Truncation => {
            let low = qtcomb::classify_low_exponent(q, m, a);
            let mut o = qtcomb::check_truncation_prop(q, m, a);
            o.require(low.matches, "low-exponent classification differs from brute force");
            CheckReport::from_outcome(o).with_details(low)
        }
        Check::Duality => {
            let o = engine::check_duality(q, m, a, b)?
                .and(qtcomb::check_reciprocal_congruence(q, m, a))
                .and(qtcomb::check_value_at_one(q, m, a));
            CheckReport::from_outcome(o)
        }
        Check::M1 => match m {
            0 => {
                let got = engine::hilb_fixed_Q(q, n, 0, a, b)?;
                CheckReport::from_outcome(Outcome::from_mismatch(compare_polys(&got.series, &TPoly::one())))
            }
            1 => CheckReport::from_outcome(engine::verify_m1_basis(q, a, b)?),
            _ => CheckReport::skipped("applies to m <= 1"),
        },
        Check::Orbits => {
            let c = orbits::orbit_count(q, n, m, a, b.enum_bound)?;
            CheckReport::from_outcome(c.outcome()).with_details(c)
        }
        Check::Csp => {
            let r = orbits::csp_check(q, n, m, a, b.enum_bound)?;
            CheckReport::from_outcome(r.outcome.clone()).with_details(r)
        }
        Check::Kuhn => {
            if !is_full_group(cell) {
                return Ok(CheckReport::skipped("applies to alpha = (n)"));
            }
            let r = engine::kuhn_filtration_check(q, n, m, b)?;
            CheckReport::from_outcome(r.outcome.clone())
                .with_series(TPoly::from_coeffs(&r.jumps), TPoly::from_coeffs(&r.fixed_q))
                .with_details(r)
        }
        Check::Recurrence => {
            let mut o = Outcome::pass();
            let limit = qtcomb::rank_one_limit(q, a)?;
            o.require(num_traits::One::is_one(&limit), format!("rank-one limit is {limit}"));
            o.require(qtcomb::polynomiality_check(q, a)?, "Hilbert series quotient is not a polynomial");
            if is_full_group(cell) {
                o = o.and(qtcomb::check_recurrence(q, n, RECURRENCE_ORDER));
            }
            CheckReport::from_outcome(o)
        }
        Check::N3 => {
            if n != 3 || !is_full_group(cell) {
                return Ok(CheckReport::skipped("applies to alpha = (3)"));
            }
            CheckReport::from_outcome(qtcomb::check_n3_identity(q, RECURRENCE_ORDER))
        }
        Check::Bivariate => {
            if n != 2 || !is_full_group(cell) {
                return Ok(CheckReport::skipped("applies to alpha = (2)"));
            }
            CheckReport::from_outcome(bivariate::full_check(q)?)
        }
        Check::Limits => {
            if !is_full_group(cell) {
                return Ok(CheckReport::skipped("applies to alpha = (n)"));
            }
            let r = qtcomb::limits_and_rr(q, n, m, RR_ORDER);
            let mut o = Outcome::pass();
            o.require(r.c_at_one == r.galois_sum, "C(1) differs from the Gaussian sum");
            o.require(r.shadow_m_eq_n, "m = n specialization disagrees with the product side");
            o.require(r.shadow_m_eq_n_minus_1, "m = n-1 specialization disagrees with the product side");
            CheckReport::from_outcome(o).with_details(r)
        }
        Check::Rr => {
            let r = qtcomb::limits_and_rr(q, n, m, RR_ORDER);
            let mut o = Outcome::pass();
            o.require(r.rr_first, "first Rogers-Ramanujan identity fails");
            o.require(r.rr_second, "second Rogers-Ramanujan identity fails");
            CheckReport::from_outcome(o)
        }
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CellReport {
    pub id: String,
    pub cell: Cell,
    pub checks: BTreeMap<Check, CheckReport>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub version: String,
    pub cells: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub cache_hits: usize,
    /// `cell id / check` for every failure.
    pub failures: Vec<String>,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(output_dir: &Path) -> Self {
        Cache {
            dir: output_dir.join("cache"),
        }
    }
    pub fn key(cell: &Cell, check: Check, bounds: &RunBounds) -> String {
        let canonical = serde_json::json!({
            "version": VERSION_TAG,
            "cell": cell,
            "check": check,
            "bounds": bounds,
        });
        hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
    }
    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }
    pub fn get(&self, key: &str) -> Result<Option<CheckReport>> {
        let p = self.path(key);
        match fs::read_to_string(&p) {
            Ok(text) => serde_json::from_str(&text)
                .map(Some)
                .map_err(|e| Error::CacheCorrupt(format!("{}: {e}", p.display()))),
            Err(_) => Ok(None),
        }
    }
    pub fn put(&self, key: &str, r: &CheckReport) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        fs::write(self.path(key), serde_json::to_string_pretty(r).expect("reports serialize"))
    }
    pub fn clean(&self) -> std::io::Result<usize> {
        let mut n = 0;
        if let Ok(entries) = fs::read_dir(&self.dir) {
            for e in entries.flatten() {
                if e.path().extension().is_some_and(|x| x == "json") {
                    fs::remove_file(e.path())?;
                    n += 1;
                }
            }
        }
        Ok(n)
    }
}

pub struct RunOutput {
    pub summary: Summary,
    pub reports: Vec<CellReport>,
    pub timings: BTreeMap<String, BTreeMap<Check, f64>>,
}

/// Runs every requested check on every cell and writes reports under `output_dir`.
pub fn run_grid(config: &GridConfig, bounds: &RunBounds, output_dir: &Path) -> Result<RunOutput> {
    let cells = config.cells()?;
    let checks = config.checks();
    let cache = Cache::new(output_dir);
    let results: Vec<(CellReport, BTreeMap<Check, f64>, usize)> = cells
        .par_iter()
        .map(|cell| {
            let mut reports = BTreeMap::new();
            let mut times = BTreeMap::new();
            let mut hits = 0;
            for &check in &checks {
                let key = Cache::key(cell, check, bounds);
                let cached = match cache.get(&key) {
                    Ok(r) => r,
                    Err(e) => {
                        eprintln!("warning: {e}; recomputing");
                        None
                    }
                };
                let start = Instant::now();
                let report = match cached {
                    Some(r) => {
                        hits += 1;
                        r
                    }
                    None => {
                        let r = run_check(cell, check, bounds);
                        if let Err(e) = cache.put(&key, &r) {
                            eprintln!("warning: could not write cache entry: {e}");
                        }
                        r
                    }
                };
                times.insert(check, start.elapsed().as_secs_f64());
                reports.insert(check, report);
            }
            (
                CellReport {
                    id: cell.id(),
                    cell: cell.clone(),
                    checks: reports,
                },
                times,
                hits,
            )
        })
        .collect();

    let mut summary = Summary {
        version: VERSION_TAG.to_string(),
        cells: cells.len(),
        ..Summary::default()
    };
    let mut reports = Vec::new();
    let mut timings = BTreeMap::new();
    for (report, times, hits) in results {
        summary.cache_hits += hits;
        for (check, r) in &report.checks {
            match r.status {
                Status::Pass => summary.passed += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Fail => {
                    summary.failed += 1;
                    summary.failures.push(format!("{} / {}", report.id, check.name()));
                }
            }
        }
        timings.insert(report.id.clone(), times);
        reports.push(report);
    }
    write_reports(output_dir, &summary, &reports, &timings)
        .map_err(|e| Error::ConfigInvalid(format!("cannot write to {}: {e}", output_dir.display())))?;
    Ok(RunOutput {
        summary,
        reports,
        timings,
    })
}

fn write_reports(
    dir: &Path,
    summary: &Summary,
    reports: &[CellReport],
    timings: &BTreeMap<String, BTreeMap<Check, f64>>,
) -> std::io::Result<()> {
    let cells_dir = dir.join("cells");
    fs::create_dir_all(&cells_dir)?;
    for r in reports {
        fs::write(cells_dir.join(format!("{}.json", r.id)), to_json(r))?;
    }
    fs::write(dir.join("summary.json"), to_json(summary))?;
    fs::write(dir.join("timings.json"), to_json(timings))?;
    Ok(())
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn params(args: &[String]) -> Result<BTreeMap<String, String>> {
    args.iter()
        .map(|a| {
            a.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| Error::ConfigInvalid(format!("expected key=value, got {a}")))
        })
        .collect()
}

fn get<T: std::str::FromStr>(p: &BTreeMap<String, String>, key: &str) -> Result<T> {
    let v = p.get(key).ok_or_else(|| Error::ConfigInvalid(format!("missing parameter {key}")))?;
    v.parse().map_err(|_| Error::ConfigInvalid(format!("bad value for {key}: {v}")))
}

fn get_list(p: &BTreeMap<String, String>, key: &str) -> Result<Vec<u32>> {
    let v = p.get(key).ok_or_else(|| Error::ConfigInvalid(format!("missing parameter {key}")))?;
    v.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::ConfigInvalid(format!("bad value for {key}: {v}"))))
        .collect()
}

fn get_q(p: &BTreeMap<String, String>) -> Result<u64> {
    let q: u64 = get(p, "q")?;
    prime_power(q).ok_or_else(|| Error::ConfigInvalid(format!("{q} is not a prime power")))?;
    Ok(q)
}

/// Closed-form objects for `show`: `C`, `qtbin`, `multinomial`, `e`, `hilb`,
/// `conj2`, `A1`, `A2`, `A3`, `f`, `SB`, `SG`.
pub fn show(object: &str, args: &[String]) -> Result<String> {
    let p = params(args)?;
    let alpha = |p: &BTreeMap<String, String>| -> Result<Composition> {
        match p.get("alpha") {
            Some(_) => Composition::new(get_list(p, "alpha")?),
            None => Ok(Composition::single(get(p, "n")?)),
        }
    };
    Ok(match object {
        "C" => {
            let q = get_q(&p)?;
            qtcomb::parabolic_C(q, get(&p, "m")?, &alpha(&p)?).to_string()
        }
        "qtbin" => qtcomb::qt_binomial(get_q(&p)?, get(&p, "n")?, get(&p, "k")?)?.to_string(),
        "multinomial" => {
            let beta = WeakComposition::new(get_list(&p, "beta")?);
            qtcomb::qt_multinomial(get_q(&p)?, get(&p, "m")?, &beta)?.to_string()
        }
        "e" => {
            let beta = WeakComposition::new(get_list(&p, "beta")?);
            qtcomb::exponent_e(get_q(&p)?, get(&p, "m")?, &alpha(&p)?, &beta)?.to_string()
        }
        "hilb" => qtcomb::hilb_invariant_ring(get_q(&p)?, &alpha(&p)?).to_string(),
        "conj2" => qtcomb::conj2_rhs(get_q(&p)?, &alpha(&p)?).sum().to_string(),
        "A1" | "A2" | "A3" => {
            let (a1, a2, a3) = qtcomb::n3_numerators(get_q(&p)?);
            match object {
                "A1" => a1,
                "A2" => a2,
                _ => a3,
            }
            .to_string()
        }
        "f" => qtcomb::f_series(get_q(&p)?, get(&p, "n")?).to_string(),
        "SB" => bivariate::hilb_sb_closed(get_q(&p)?).to_string(),
        "SG" => bivariate::hilb_sg_closed(get_q(&p)?).to_string(),
        other => return Err(Error::UnknownObject(other.to_string())),
    })
}

#[derive(Parser, Debug)]
#[command(name = "qtinv", version, about = "Exact checks of fixed and cofixed Hilbert series for parabolic subgroups of GL_n(F_q)")]
pub struct Cli {
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Maximum number of monomials of Q = S/(x_i^{q^m}).
    #[arg(long, global = true)]
    pub basis_bound: Option<u64>,
    /// Maximum number of vectors enumerated for orbit checks.
    #[arg(long, global = true)]
    pub enum_bound: Option<u64>,
    /// Truncation degree for cofixed checks (default 3q^2).
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the checks of a JSON grid config.
    Run {
        #[arg(long)]
        config: PathBuf,
    },
    /// Print a closed-form object, e.g. `show C q=3 n=2 m=2`.
    Show { object: String, params: Vec<String> },
    /// Remove cached check results.
    CleanCache {
        /// Output directory holding the cache (overridden by QTINV_OUTPUT_DIR).
        #[arg(long, default_value = "qtinv-out")]
        output_dir: PathBuf,
    },
}

fn resolve_output_dir(configured: Option<PathBuf>) -> PathBuf {
    std::env::var_os(OUTPUT_DIR_ENV)
        .map(PathBuf::from)
        .or(configured)
        .unwrap_or_else(|| PathBuf::from("qtinv-out"))
}

pub fn main_with(cli: Cli) -> ExitCode {
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("warning: {e}");
        }
    }
    match cli.command {
        Command::Run { config } => {
            let cfg = match GridConfig::load(&config) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let mut bc = cfg.bounds.clone();
            bc.basis_bound = cli.basis_bound.or(bc.basis_bound);
            bc.enum_bound = cli.enum_bound.or(bc.enum_bound);
            bc.max_degree = cli.max_degree.or(bc.max_degree);
            let bounds = RunBounds::from_config(&bc);
            let out_dir = resolve_output_dir(cfg.output_dir.clone());
            match run_grid(&cfg, &bounds, &out_dir) {
                Ok(out) => {
                    for r in &out.reports {
                        let line: Vec<String> = r.checks.iter().map(|(c, x)| format!("{}={}", c.name(), x.status)).collect();
                        println!("{} {}", r.id, line.join(" "));
                    }
                    let s = &out.summary;
                    println!(
                        "cells={} passed={} failed={} skipped={} cache_hits={} reports={}",
                        s.cells,
                        s.passed,
                        s.failed,
                        s.skipped,
                        s.cache_hits,
                        out_dir.display()
                    );
                    if s.failed == 0 {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Show { object, params } => match show(&object, &params) {
            Ok(s) => {
                println!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::CleanCache { output_dir } => {
            let dir = resolve_output_dir(Some(output_dir));
            match Cache::new(&dir).clean() {
                Ok(n) => {
                    println!("removed {n} cache entries from {}", dir.join("cache").display());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}

pub fn main() -> ExitCode {
    main_with(Cli::parse())
}

//! The `detlinks` command line.
//!
//! Exit codes: 0 success, 2 usage, 3 domain (a request outside the valid
//! parameter range, e.g. a non-smooth link), 4 consistency (a sign, duality or
//! cache verification failure), 1 anything else.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::cache::{self, CacheFile, Loaded};
use crate::error::{Error, Result};
use crate::grass::oracle::compare_with_schubert;
use crate::grass::GrassSpec;
use crate::links::{
    euler_complex_link, euler_complex_link_smooth, hilbert_burch_euler, link_profile, DetSpec, LinkProfile,
};
use crate::polar::{compute_profile, insert_profile, memo_snapshot, polar_profile, PolarProfile};
use crate::tabulate::{render_betti, render_euler, render_hilbert_burch, render_polar, render_ring, EulerRow, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;

/// An inclusive range of parameters, written `a` or `a..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange(pub RangeInclusive<u32>);

impl ParamRange {
    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.clone()
    }
}

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("'{t}' is not a nonnegative integer"))
        };
        let range = match s.split_once("..") {
            Some((a, b)) => parse(a)?..=parse(b)?,
            None => {
                let a = parse(s)?;
                a..=a
            }
        };
        if range.is_empty() {
            return Err(format!("range '{s}' is empty"));
        }
        Ok(ParamRange(range))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "detlinks",
    version,
    about = "Polar multiplicities and link invariants of generic determinantal varieties"
)]
pub struct Cli {
    /// Output format: csv, md or json.
    #[arg(long, global = true, default_value = "csv")]
    pub format: Format,
    /// Recompute cached polar profiles and fail on any mismatch.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Polar multiplicities e_{m,n}^{r,k}, one row per (m, n, r).
    Polar(PolarArgs),
    /// Euler characteristics of complex links.
    Euler(EulerArgs),
    /// Betti numbers of smooth complex links.
    Betti(BettiArgs),
    /// Schubert basis, Poincaré polynomial and presentation of Grass(r, m).
    Ring(RingArgs),
    /// Inspect or clear the polar-profile cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Args)]
pub struct PolarArgs {
    #[arg(long)]
    pub m: ParamRange,
    #[arg(long)]
    pub n: ParamRange,
    #[arg(long)]
    pub r: ParamRange,
}

#[derive(Debug, Args)]
pub struct EulerArgs {
    #[arg(long, required_unless_present = "hilbert_burch")]
    pub m: Option<ParamRange>,
    #[arg(long, required_unless_present = "hilbert_burch")]
    pub n: Option<ParamRange>,
    #[arg(long, required_unless_present = "hilbert_burch")]
    pub s: Option<ParamRange>,
    /// Codimensions; all of 0..d-1 when omitted.
    #[arg(long)]
    pub codim: Option<ParamRange>,
    /// Emit the Euler characteristics of the smooth complex links of
    /// dimension 0..3 of M_{m,m+1}^m for m = 1..max-m.
    #[arg(long, conflicts_with_all = ["m", "n", "s", "codim"], requires = "max_m")]
    pub hilbert_burch: bool,
    #[arg(long, requires = "hilbert_burch", value_parser = clap::value_parser!(u32).range(1..))]
    pub max_m: Option<u32>,
}

#[derive(Debug, Args)]
pub struct BettiArgs {
    #[arg(long)]
    pub m: ParamRange,
    #[arg(long)]
    pub n: ParamRange,
    #[arg(long)]
    pub s: ParamRange,
    #[arg(long)]
    pub codim: ParamRange,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub m: u32,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Print the cache location and its entries.
    Inspect,
    /// Delete the cache file.
    Clear,
}

/// Parses `args` (including the program name) and runs the command. Tables go
/// to `out`, diagnostics to `err`; the return value is the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut session = Session::new(&cli);
    let result = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j as usize).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut session)),
            Err(e) => Err(Error::InvalidParameters(format!(
                "cannot start {j} worker threads: {e}"
            ))),
        },
        None => dispatch(&cli, &mut session),
    };
    let result = result.and_then(|text| {
        session.finish(cli.verify)?;
        Ok(text)
    });
    for note in &session.notes {
        let _ = writeln!(err, "{note}");
    }
    match result {
        Ok(text) => {
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return 1;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Cache state and diagnostics of one invocation.
struct Session {
    path: Option<PathBuf>,
    file: CacheFile,
    /// Lines for the error stream, printed once the command finishes.
    notes: Vec<String>,
}

impl Session {
    fn new(cli: &Cli) -> Self {
        let path = match &cli.command {
            Command::Polar(_) | Command::Euler(_) | Command::Betti(_) => cache::cache_path(),
            Command::Ring(_) | Command::Cache { .. } => None,
        };
        let mut file = CacheFile::default();
        let mut notes = Vec::new();
        if let Some(p) = &path {
            match cache::load(p) {
                Loaded::Missing => {}
                Loaded::Ok(f) => file = f,
                Loaded::Ignored(why) => {
                    notes.push(format!("warning: ignoring cache {}: {why}", p.display()));
                }
            }
        }
        if !cli.verify {
            for p in file.profiles().unwrap_or_default() {
                insert_profile(p);
            }
        }
        Session { path, file, notes }
    }

    /// Under `--verify`, compares every profile computed in this run with the
    /// cached one; then writes new profiles back. Write failures only warn.
    fn finish(&mut self, verify: bool) -> Result<()> {
        let Some(path) = self.path.clone() else { return Ok(()) };
        let computed = memo_snapshot();
        if verify {
            for p in &computed {
                if let Some(cached) = self.file.get(p.m, p.n, p.r) {
                    if cached != **p {
                        return Err(Error::Consistency(format!(
                            "cached profile {},{},{} differs from the recomputed one; run `detlinks cache clear`",
                            p.m, p.n, p.r
                        )));
                    }
                }
            }
        }
        let before = self.file.entries.len();
        for p in &computed {
            if self.file.get(p.m, p.n, p.r).is_none() {
                self.file.insert(p);
            }
        }
        if self.file.entries.len() != before {
            if let Err(e) = cache::store(&path, &self.file) {
                self.notes.push(format!("warning: {e}"));
            }
        }
        Ok(())
    }
}

fn dispatch(cli: &Cli, session: &mut Session) -> Result<String> {
    match &cli.command {
        Command::Polar(a) => cmd_polar(a, cli.format, cli.verify),
        Command::Euler(a) => cmd_euler(a, cli.format, cli.verify),
        Command::Betti(a) => cmd_betti(a, cli.format),
        Command::Ring(a) => cmd_ring(a, cli.format, cli.verify, session),
        Command::Cache { action } => cmd_cache(action, session),
    }
}

/// Valid `(m, n, r)` triples of the request. Invalid combinations inside
/// ranges are skipped; if none is valid the first domain error is returned.
fn polar_keys(a: &PolarArgs) -> Result<Vec<(u32, u32, u32)>> {
    let mut keys = Vec::new();
    let mut first_err = None;
    for m in a.m.values() {
        for n in a.n.values() {
            for r in a.r.values() {
                if m == 0 || m > n {
                    first_err.get_or_insert(Error::InvalidParameters(format!(
                        "polar multiplicities need 1 <= m <= n, got m = {m}, n = {n}"
                    )));
                } else if r > m {
                    first_err.get_or_insert(Error::out_of_range("r", r as i64, format!("0..={m}")));
                } else {
                    keys.push((m, n, r));
                }
            }
        }
    }
    match first_err {
        Some(e) if keys.is_empty() => Err(e),
        _ => Ok(keys),
    }
}

fn cmd_polar(a: &PolarArgs, format: Format, verify: bool) -> Result<String> {
    let keys = polar_keys(a)?;
    let profiles: Vec<PolarProfile> = keys
        .par_iter()
        .map(|&(m, n, r)| {
            if verify {
                let p = compute_profile(m, n, r)?;
                insert_profile(p.clone());
                Ok(p)
            } else {
                Ok((*polar_profile(m, n, r)?).clone())
            }
        })
        .collect::<Result<_>>()?;
    Ok(render_polar(&profiles, format))
}

fn det_specs(m: &ParamRange, n: &ParamRange, s: &ParamRange) -> Result<Vec<DetSpec>> {
    let mut specs = Vec::new();
    let mut first_err = None;
    for m in m.values() {
        for n in n.values() {
            for s in s.values() {
                match DetSpec::new(m, n, s) {
                    Ok(spec) => specs.push(spec),
                    Err(e) => {
                        first_err.get_or_insert(e);
                    }
                }
            }
        }
    }
    match first_err {
        Some(e) if specs.is_empty() => Err(e),
        _ => Ok(specs),
    }
}

fn check_codim(spec: DetSpec, i: u32) -> Result<()> {
    if i >= spec.dim() {
        return Err(Error::out_of_range(
            "codim",
            i as i64,
            format!("0..{} for {spec}", spec.dim()),
        ));
    }
    Ok(())
}

fn cmd_euler(a: &EulerArgs, format: Format, verify: bool) -> Result<String> {
    if a.hilbert_burch {
        let max_m = a.max_m.expect("clap enforces --max-m");
        let columns: Vec<Vec<BigInt>> = (1..=max_m)
            .into_par_iter()
            .map(|m| (0..=3).map(|d| hilbert_burch_euler(m, d)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        return Ok(render_hilbert_burch(&columns, format));
    }
    let (m, n, s) = (a.m.as_ref().unwrap(), a.n.as_ref().unwrap(), a.s.as_ref().unwrap());
    let mut cells = Vec::new();
    for spec in det_specs(m, n, s)? {
        match &a.codim {
            Some(c) => {
                for i in c.values() {
                    check_codim(spec, i)?;
                    cells.push((spec, i));
                }
            }
            None => cells.extend((0..spec.dim()).map(|i| (spec, i))),
        }
    }
    let rows: Vec<EulerRow> = cells
        .par_iter()
        .map(|&(spec, i)| {
            let chi = euler_complex_link(spec, i)?;
            if verify && spec.is_smooth(i) {
                let shortcut = euler_complex_link_smooth(spec, i)?;
                if shortcut != chi {
                    return Err(Error::Consistency(format!(
                        "stratum sum {chi} and smooth shortcut {shortcut} disagree for L^{i} of {spec}"
                    )));
                }
            }
            Ok(EulerRow {
                m: spec.m(),
                n: spec.n(),
                s: spec.s(),
                codim: i,
                chi,
            })
        })
        .collect::<Result<_>>()?;
    Ok(render_euler(&rows, format))
}

fn cmd_betti(a: &BettiArgs, format: Format) -> Result<String> {
    let mut cells = Vec::new();
    for spec in det_specs(&a.m, &a.n, &a.s)? {
        for i in a.codim.values() {
            check_codim(spec, i)?;
            cells.push((spec, i));
        }
    }
    let profiles: Vec<LinkProfile> = cells
        .par_iter()
        .map(|&(spec, i)| {
            let p = link_profile(spec, i)?;
            if !p.smooth {
                return Err(Error::NonSmoothLink {
                    codim: i as i64,
                    lo: spec.sing_dim().max(0),
                    hi: spec.dim() as i64,
                });
            }
            Ok(p)
        })
        .collect::<Result<_>>()?;
    Ok(render_betti(&profiles, format))
}

fn cmd_ring(a: &RingArgs, format: Format, verify: bool, session: &mut Session) -> Result<String> {
    let spec = GrassSpec::new(a.r, a.m)?;
    if verify {
        let report = compare_with_schubert(spec)?;
        session.notes.push(format!(
            "{spec}: graded ranks {:?}, torsion-free {}, Schubert basis unimodular {}, {} products checked, {} mismatches",
            report.graded_ranks,
            report.torsion_free,
            report.schubert_basis_unimodular,
            report.products_checked,
            report.product_mismatches.len()
        ));
        if !report.passed() {
            return Err(Error::Consistency(format!(
                "quotient-ring oracle disagrees with the Schubert calculus on {spec}"
            )));
        }
    }
    Ok(render_ring(spec, format))
}

fn cmd_cache(action: &CacheAction, session: &mut Session) -> Result<String> {
    let path = cache::cache_path()
        .ok_or_else(|| Error::InvalidParameters(format!("no cache directory; set {}", cache::CACHE_ENV)))?;
    match action {
        CacheAction::Inspect => {
            let mut text = format!("path: {}\n", path.display());
            match cache::load(&path) {
                Loaded::Missing => text.push_str("status: missing\n"),
                Loaded::Ignored(why) => text.push_str(&format!("status: ignored ({why})\n")),
                Loaded::Ok(file) => {
                    text.push_str(&format!(
                        "status: ok\nversion: {}\nentries: {}\n",
                        file.version,
                        file.entries.len()
                    ));
                    for k in file.entries.keys() {
                        text.push_str(&format!("  {k}\n"));
                    }
                }
            }
            Ok(text)
        }
        CacheAction::Clear => {
            let removed = cache::clear(&path)?;
            session.notes.push(format!(
                "{} {}",
                if removed { "removed" } else { "nothing to remove at" },
                path.display()
            ));
            Ok(String::new())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse() {
        assert_eq!("3".parse::<ParamRange>().unwrap().0, 3..=3);
        assert_eq!("2..7".parse::<ParamRange>().unwrap().0, 2..=7);
        assert!("7..2".parse::<ParamRange>().is_err());
        assert!("a..2".parse::<ParamRange>().is_err());
        assert!("-1".parse::<ParamRange>().is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(
            run(
                ["detlinks", "polar", "--m", "3", "--n", "5..4", "--r", "1"],
                &mut out,
                &mut err
            ),
            2
        );
        assert_eq!(run(["detlinks", "frobnicate"], &mut out, &mut err), 2);
        assert_eq!(
            run(
                ["detlinks", "polar", "--m", "3", "--n", "4", "--r", "1", "--format", "xml"],
                &mut out,
                &mut err
            ),
            2
        );
    }

    #[test]
    fn ring_runs_without_cache() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(
            run(
                ["detlinks", "ring", "--r", "1", "--m", "3", "--verify"],
                &mut out,
                &mut err
            ),
            0
        );
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "index,partition,degree\n0,,0\n1,1,1\n2,2,2\n"
        );
    }
}

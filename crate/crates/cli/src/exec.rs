//! Subcommand implementations: knit, mono, cover, report.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use arknit::covering::{
    interval_module, push_down, shift_module, verify_ar_preservation,
    verify_ar_preservation_morph, verify_precovering, verify_stabilizer,
    verify_translation_cover, CoverError, LineCover,
};
use arknit::fdmod::{same_module, ModMap};
use arknit::knit::{enumerate_with, export_dot, BoundKind, KnitBounds, Verdict};
use arknit::morphcat::{auslander_algebra, ind_counts, CountVerdict, MorphError, MorphObject};

use crate::report::{Check, Count, CoverSection, Entry, KnitSection, MonoSection, Report, SCHEMA};
use crate::spec::{build_algebra, parse_spec, BuildError};

#[derive(Parser)]
#[command(
    name = "arknit",
    version,
    about = "Exact-arithmetic Auslander-Reiten workbench: knit AR quivers, count \
             monomorphism categories, verify covering identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

/// Flags shared by every subcommand.
#[derive(Args, Clone)]
pub struct Common {
    /// Seed for randomized decomposition certificates, in hex.
    #[arg(long, default_value = "0xA12")]
    pub seed: String,
    /// Enumeration stops after this many indecomposables.
    #[arg(long, default_value_t = 400)]
    pub max_modules: usize,
    /// Enumeration stops when a candidate exceeds this total dimension.
    #[arg(long, default_value_t = 120)]
    pub max_dim: usize,
    /// Also write the JSON report to this path.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Enumerate the indecomposables of an algebra and knit its AR quiver.
    Knit {
        /// Algebra spec, e.g. "nakayama 2 3" or "vertices: a b; arrows: x:a->b;".
        spec: String,
        /// Write the AR quiver as a Graphviz file.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Count the indecomposables of the monomorphism category of an algebra.
    Mono {
        /// Algebra spec for the base algebra (must be representation-finite).
        spec: String,
        /// Also count the full morphism category.
        #[arg(long)]
        morph: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Verify push-down identities for the cyclic Nakayama family on a window.
    Cover {
        /// Number of vertices of the cyclic quiver.
        n: usize,
        /// Nilpotency bound.
        t: usize,
        /// Window on the covering line, as LO:HI (e.g. -6:6).
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Run every check (the default when no check flag is given).
        #[arg(long)]
        all: bool,
        /// Push-down dimension preservation and shift invariance.
        #[arg(long)]
        push: bool,
        /// Stabilizer cocycle law.
        #[arg(long)]
        stabilizer: bool,
        /// Hom-sum identity over all interval pairs.
        #[arg(long)]
        precovering: bool,
        /// Almost-split-sequence preservation, modules and morphism objects.
        #[arg(long)]
        ar: bool,
        /// Translation-quiver covering axioms on the window's interior.
        #[arg(long)]
        translation: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run a manifest of commands (one per line, # comments) and aggregate
    /// one report.
    Report {
        /// Manifest file.
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

impl Cmd {
    fn common(&self) -> &Common {
        match self {
            Cmd::Knit { common, .. }
            | Cmd::Mono { common, .. }
            | Cmd::Cover { common, .. }
            | Cmd::Report { common, .. } => common,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Build(#[from] BuildError),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Cover(#[from] CoverError),
    #[error("enumeration could not be certified: {0}")]
    Undecided(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for bound-tripped verdicts-as-errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Cover(CoverError::NotFinite) => 2,
            _ => 1,
        }
    }
}

fn parse_seed(s: &str) -> Result<u64, CliError> {
    let digits = s
        .strip_prefix("0x")
        .or_else(|| s.strip_prefix("0X"))
        .unwrap_or(s);
    u64::from_str_radix(digits, 16)
        .map_err(|_| CliError::Invalid(format!("seed `{s}` is not a hex integer")))
}

fn parse_window(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Invalid(format!("window `{s}` is not of the form LO:HI"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    Ok((lo.parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?))
}

fn bounds_of(common: &Common) -> Result<KnitBounds, CliError> {
    Ok(KnitBounds {
        max_modules: common.max_modules,
        max_dim: common.max_dim,
        seed: parse_seed(&common.seed)?,
    })
}

fn blank_report(echo: &str, common: &Common) -> Report {
    Report {
        schema: SCHEMA,
        command: echo.to_string(),
        seed: common.seed.clone(),
        max_modules: common.max_modules,
        max_dim: common.max_dim,
        knit: None,
        mono: None,
        cover: None,
        entries: None,
        pass: false,
    }
}

/// Execute one parsed command. Returns the report plus the exit code;
/// `Err` means a diagnostic (exit 1, or 2 for bound-tripped builds).
pub fn run_command(cmd: Cmd, echo: &str, depth: usize) -> Result<(Report, i32), CliError> {
    let common = cmd.common().clone();
    let mut report = blank_report(echo, &common);
    let code = match cmd {
        Cmd::Knit { spec, dot, .. } => cmd_knit(&spec, dot.as_deref(), &common, &mut report)?,
        Cmd::Mono { spec, morph, .. } => cmd_mono(&spec, morph, &common, &mut report)?,
        Cmd::Cover {
            n,
            t,
            window,
            all,
            push,
            stabilizer,
            precovering,
            ar,
            translation,
            ..
        } => {
            let picked = [push, stabilizer, precovering, ar, translation];
            let run_all = all || !picked.iter().any(|&b| b);
            let flags = CoverChecks {
                push: run_all || push,
                stabilizer: run_all || stabilizer,
                precovering: run_all || precovering,
                ar: run_all || ar,
                translation: run_all || translation,
            };
            cmd_cover(n, t, &window, flags, &common, &mut report)?
        }
        Cmd::Report { file, .. } => cmd_report(&file, &common, depth, &mut report)?,
    };
    report.pass = code == 0;
    if let Some(path) = &common.json {
        fs::write(path, report.to_json())?;
    }
    Ok((report, code))
}

fn cmd_knit(
    spec_str: &str,
    dot: Option<&std::path::Path>,
    common: &Common,
    report: &mut Report,
) -> Result<i32, CliError> {
    let bounds = bounds_of(common)?;
    let spec = parse_spec(spec_str).map_err(BuildError::from)?;
    let algebra = build_algebra(&spec, &bounds)?;
    match enumerate_with(&algebra, &bounds) {
        Ok(Verdict::Finite { modules, quiver }) => {
            if let Some(path) = dot {
                fs::write(path, export_dot(&quiver))?;
            }
            report.knit = Some(KnitSection {
                verdict: "finite".into(),
                modules: modules.len(),
                dim_vectors: Some(quiver.dims.clone()),
                components: Some(quiver.components),
                bound: None,
            });
            Ok(0)
        }
        Ok(Verdict::ExceededBound { found, bound }) => {
            report.knit = Some(KnitSection {
                verdict: "exceeded-bound".into(),
                modules: found.len(),
                dim_vectors: None,
                components: None,
                bound: Some(match bound {
                    BoundKind::MaxModules(n) => format!("max-modules {n}"),
                    BoundKind::MaxDim(d) => format!("max-dim {d}"),
                }),
            });
            Ok(2)
        }
        Err(e) => Err(CliError::Undecided(e.to_string())),
    }
}

fn cmd_mono(
    spec_str: &str,
    morph: bool,
    common: &Common,
    report: &mut Report,
) -> Result<i32, CliError> {
    let bounds = bounds_of(common)?;
    let spec = parse_spec(spec_str).map_err(BuildError::from)?;
    let base = build_algebra(&spec, &bounds)?;
    let data = auslander_algebra(&base, &bounds).map_err(|e| match e {
        MorphError::NotFinite => CliError::Build(BuildError::BaseNotFinite),
        other => CliError::Undecided(other.to_string()),
    })?;
    let (h, s) = ind_counts(&data, &bounds).map_err(|e| CliError::Undecided(e.to_string()))?;
    let r = data.inds.len();
    let count_out = |v: &CountVerdict| match v {
        CountVerdict::Finite(total) => Count {
            verdict: "finite".into(),
            total: Some(*total),
        },
        CountVerdict::NotFiniteWithinBounds => Count {
            verdict: "exceeded-bound".into(),
            total: None,
        },
    };
    let mut ok = matches!(s, CountVerdict::Finite(_));
    if morph {
        ok &= matches!(h, CountVerdict::Finite(_));
    }
    report.mono = Some(MonoSection {
        base_indecomposables: r,
        trivial_objects: 2 * r,
        mono: count_out(&s),
        stable_quotient_modules: match s {
            CountVerdict::Finite(total) => Some(total - 2 * r),
            CountVerdict::NotFiniteWithinBounds => None,
        },
        morphism: morph.then(|| count_out(&h)),
    });
    Ok(if ok { 0 } else { 2 })
}

struct CoverChecks {
    push: bool,
    stabilizer: bool,
    precovering: bool,
    ar: bool,
    translation: bool,
}

/// The default grid: every interval with its source vertex among the orbit
/// representatives — all `n·t` isomorphism classes of line indecomposables
/// up to shift.
fn grid_intervals(c: &LineCover) -> Result<Vec<((usize, usize), arknit::covering::WindowModule)>, CoverError> {
    let mut out = Vec::new();
    for a in 0..c.n {
        for l in 1..=c.t {
            out.push((
                (a, l),
                interval_module(c, a as i64, (a + l - 1) as i64)?,
            ));
        }
    }
    Ok(out)
}

fn cmd_cover(
    n: usize,
    t: usize,
    window: &str,
    flags: CoverChecks,
    common: &Common,
    report: &mut Report,
) -> Result<i32, CliError> {
    let (lo, hi) = parse_window(window)?;
    let seed = parse_seed(&common.seed)?;
    let c = LineCover::new(n, t, lo, hi)?;
    let mut checks = Vec::new();
    if flags.push {
        checks.push(check_push(&c)?);
    }
    if flags.stabilizer {
        checks.push(check_stabilizer(&c)?);
    }
    if flags.precovering {
        checks.push(check_precovering(&c)?);
    }
    if flags.ar {
        let (m, mo) = check_ar(&c, seed)?;
        checks.push(m);
        checks.push(mo);
    }
    if flags.translation {
        checks.push(check_translation(&c, seed)?);
    }
    let pass = checks.iter().all(|ch| ch.pass);
    report.cover = Some(CoverSection {
        n,
        t,
        window: [lo, hi],
        checks,
    });
    Ok(if pass { 0 } else { 1 })
}

fn check_push(c: &LineCover) -> Result<Check, CoverError> {
    let grid = grid_intervals(c)?;
    let mut pass = true;
    for (_, m) in &grid {
        let p = push_down(c, m)?;
        pass &= p.total_dim() == m.module.total_dim();
        for g in [-1i64, 0, 1] {
            let q = push_down(c, &shift_module(c, m, g)?)?;
            pass &= same_module(&p, &q);
        }
    }
    Ok(Check {
        name: "push-down".into(),
        pass,
        detail: format!(
            "{} intervals, shifts -1..=1: total dimension preserved, push-down shift-invariant",
            grid.len()
        ),
    })
}

fn check_stabilizer(c: &LineCover) -> Result<Check, CoverError> {
    let grid = grid_intervals(c)?;
    let pairs = [(1i64, 1i64), (1, -1), (-1, 1)];
    let mut pass = true;
    for (_, m) in &grid {
        for (g, h) in pairs {
            pass &= verify_stabilizer(c, g, h, m)?;
        }
    }
    Ok(Check {
        name: "stabilizer-cocycle".into(),
        pass,
        detail: format!(
            "{} intervals x {} shift pairs: composition law holds",
            grid.len(),
            pairs.len()
        ),
    })
}

fn check_precovering(c: &LineCover) -> Result<Check, CoverError> {
    let grid = grid_intervals(c)?;
    let bound = ((c.t + c.n) / c.n + 1) as i64;
    let mut pass = true;
    for (_, m) in &grid {
        for (_, nn) in &grid {
            pass &= verify_precovering(c, m, nn, bound)?.pass;
        }
    }
    Ok(Check {
        name: "precovering-hom-sums".into(),
        pass,
        detail: format!(
            "{} interval pairs, shift bound {bound}: module and morphism Hom sums equal \
             the push-down Hom dimensions",
            grid.len() * grid.len()
        ),
    })
}

fn check_ar(c: &LineCover, seed: u64) -> Result<(Check, Check), CoverError> {
    // Proper subintervals are exactly the non-projective indecomposables.
    let grid: Vec<_> = grid_intervals(c)?
        .into_iter()
        .filter(|((_, l), _)| *l < c.t)
        .collect();
    let mut pass = true;
    for (_, m) in &grid {
        pass &= verify_ar_preservation(c, m, seed)?.almost_split;
    }
    let modules = Check {
        name: "ar-preservation-modules".into(),
        pass,
        detail: format!(
            "{} non-projective intervals: pushed almost split sequences stay almost split",
            grid.len()
        ),
    };
    let mut pass_m = true;
    let mut count = 0usize;
    for (_, m) in &grid {
        let objects = [
            MorphObject::zero_to(&m.module),
            MorphObject::new(ModMap::identity(&m.module)),
            MorphObject::to_zero(&m.module),
        ];
        for x in objects {
            pass_m &= verify_ar_preservation_morph(c, &x, seed)?.almost_split;
            count += 1;
        }
    }
    let morphs = Check {
        name: "ar-preservation-morphisms".into(),
        pass: pass_m,
        detail: format!(
            "{count} trivial-shape morphism objects: pushed almost split sequences stay \
             almost split over the triangular matrix algebra"
        ),
    };
    Ok((modules, morphs))
}

fn check_translation(c: &LineCover, seed: u64) -> Result<Check, CoverError> {
    let r = verify_translation_cover(c, seed)?;
    Ok(Check {
        name: "translation-quiver-covering".into(),
        pass: r.pass,
        detail: format!(
            "fragment of {} vertices: surjective {}, fibers=orbits {}, neighbor bijections {}, \
             valuation sums {}, ends preserved {}, translation commutes {}",
            r.fragment_vertices,
            r.surjective,
            r.fibers_are_shift_orbits,
            r.neighbor_bijections,
            r.valuation_sums,
            r.ends_preserved,
            r.translation_commutes
        ),
    })
}

/// Split a manifest line into words, honoring double quotes.
fn split_quoted(line: &str) -> Result<Vec<String>, String> {
    let mut words = Vec::new();
    let mut cur = String::new();
    let mut in_quotes = false;
    let mut any = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                in_quotes = !in_quotes;
                any = true;
            }
            c if c.is_whitespace() && !in_quotes => {
                if any {
                    words.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            c => {
                cur.push(c);
                any = true;
            }
        }
    }
    if in_quotes {
        return Err("unterminated quote".into());
    }
    if any {
        words.push(cur);
    }
    Ok(words)
}

fn cmd_report(
    file: &std::path::Path,
    _common: &Common,
    depth: usize,
    report: &mut Report,
) -> Result<i32, CliError> {
    if depth > 0 {
        return Err(CliError::Invalid(
            "report manifests cannot invoke `report`".into(),
        ));
    }
    let text = fs::read_to_string(file)?;
    let mut entries = Vec::new();
    let mut all_ok = true;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words = split_quoted(line).map_err(|m| {
            CliError::Invalid(format!("{}:{}: {m}", file.display(), idx + 1))
        })?;
        let mut argv = vec!["arknit".to_string()];
        argv.extend(words);
        match Cli::try_parse_from(&argv) {
            Err(e) => {
                all_ok = false;
                entries.push(Entry {
                    command: line.to_string(),
                    exit: 1,
                    error: Some(e.to_string()),
                    report: None,
                });
            }
            Ok(cli) => match run_command(cli.cmd, line, depth + 1) {
                Ok((sub, code)) => {
                    all_ok &= code == 0;
                    entries.push(Entry {
                        command: line.to_string(),
                        exit: code,
                        error: None,
                        report: Some(Box::new(sub)),
                    });
                }
                Err(e) => {
                    all_ok = false;
                    entries.push(Entry {
                        command: line.to_string(),
                        exit: e.exit_code(),
                        error: Some(e.to_string()),
                        report: None,
                    });
                }
            },
        }
    }
    report.entries = Some(entries);
    Ok(if all_ok { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_and_windows_parse() {
        assert_eq!(parse_seed("0xA12").unwrap(), 0xA12);
        assert_eq!(parse_seed("ff").unwrap(), 255);
        assert!(parse_seed("0xZZ").is_err());
        assert_eq!(parse_window("-6:6").unwrap(), (-6, 6));
        assert_eq!(parse_window("0:13").unwrap(), (0, 13));
        assert!(parse_window("6").is_err());
        assert!(parse_window("a:b").is_err());
    }

    #[test]
    fn quoted_splitting() {
        assert_eq!(
            split_quoted(r#"knit "nakayama 1 3" --max-dim 50"#).unwrap(),
            vec!["knit", "nakayama 1 3", "--max-dim", "50"]
        );
        assert_eq!(split_quoted("  ").unwrap(), Vec::<String>::new());
        assert_eq!(split_quoted(r#""""#).unwrap(), vec![""]);
        assert!(split_quoted(r#"knit "oops"#).is_err());
    }
}

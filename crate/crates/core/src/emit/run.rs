use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use super::{write_csv, write_svg, EmitConfig, EmitError, Format};
use crate::moebius::{MetricKind, Subgroup};
use crate::scenarios::{
    future_past_frames, generate_arrows, generate_orbits, generate_transverses, Curve, CurveFamily,
    FocalCheckReport, NodeStats, ParabolaCapture, TuningTables,
};

/// Agreement required of the circle radius and of the parabola vertex
/// check.
const CHECK_TOL: f64 = 1e-3;
const ARROW_GREY: f64 = 0.6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Orbits,
    Transverses,
    Arrows,
    FuturePast,
    Checks,
    All,
}

impl Mode {
    fn includes(self, other: Mode) -> bool {
        self == Mode::All || self == other
    }
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub kinds: Vec<MetricKind>,
    pub subgroups: Vec<Subgroup>,
    pub mode: Mode,
    pub emit: EmitConfig,
}

#[derive(Debug, Default)]
pub struct RunReport {
    pub files: Vec<PathBuf>,
    pub focal_checks: Vec<FocalCheckReport>,
    pub parabolas: Vec<ParabolaCapture>,
    pub stats: NodeStats,
    pub singular_arrows: usize,
    pub failures: Vec<String>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render(&self, verbose: bool) -> String {
        let mut out = String::new();
        let mut last_kind = None;
        for r in &self.focal_checks {
            if last_kind != Some(r.kind) {
                let _ = writeln!(out, "Metric is: {}.", r.kind.letter());
                last_kind = Some(r.kind);
            }
            let _ = writeln!(out, "{}", r.render());
        }
        for p in &self.parabolas {
            let _ = writeln!(out, "{}", p.render());
        }
        let _ = writeln!(
            out,
            "nodes: {}, singular: {}, out of bounds: {}, segment breaks: {}, singular arrows: {}",
            self.stats.nodes,
            self.stats.singular,
            self.stats.out_of_bounds,
            self.stats.breaks,
            self.singular_arrows
        );
        let _ = writeln!(out, "files written: {}", self.files.len());
        if verbose {
            for f in &self.files {
                let _ = writeln!(out, "  {}", f.display());
            }
        }
        if self.passed() {
            let _ = writeln!(out, "checks: all passed");
        } else {
            let _ = writeln!(out, "checks: {} failed", self.failures.len());
            for f in &self.failures {
                let _ = writeln!(out, "  FAILED {f}");
            }
        }
        out
    }

    fn check_focal(&mut self, r: &FocalCheckReport) {
        if !r.constant {
            self.failures.push(format!(
                "{} K-orbit through (0, {}) not constant (max deviation {:e})",
                r.kind, r.vval, r.max_deviation
            ));
        }
        if r.kind == MetricKind::Elliptic {
            let radius = (r.vval - 1.0 / r.vval).abs() / 2.0;
            if let Some(bad) = r
                .values
                .iter()
                .find(|v| v.is_nan() || (*v - radius).abs() >= CHECK_TOL)
            {
                self.failures.push(format!(
                    "elliptic K-orbit through (0, {}): distance {bad} differs from radius {radius}",
                    r.vval
                ));
            }
        }
    }

    fn check_parabola(&mut self, p: &ParabolaCapture) {
        if p.subgroup != Subgroup::A {
            return;
        }
        for (slot, fit) in p.fits.iter().enumerate() {
            let value = fit.map_or(f64::NAN, |f| f.vertex_check());
            if value.is_nan() || (value + 1.0).abs() >= CHECK_TOL {
                self.failures.push(format!(
                    "vertex check of Cayley image {} on A-orbit {}: {value} instead of -1",
                    slot, p.vi
                ));
            }
        }
    }
}

struct Writer<'a> {
    cfg: &'a EmitConfig,
    report: &'a mut RunReport,
}

impl Writer<'_> {
    fn write(&mut self, stem: &str, curves: &[Curve]) -> Result<(), EmitError> {
        for &format in &self.cfg.formats {
            let path = self
                .cfg
                .out_dir
                .join(format!("{stem}.{}", format.extension()));
            match format {
                Format::Csv => write_csv(curves, &path, self.cfg)?,
                Format::Svg => write_svg(curves, &path, self.cfg)?,
            }
            self.report.files.push(path);
        }
        Ok(())
    }

    fn write_family(&mut self, stems: [&str; 3], family: &CurveFamily) -> Result<(), EmitError> {
        let suffix = format!("-{}-{}", family.subgroup.letter(), family.kind.letter());
        for (stem, curves) in stems.iter().zip(&family.curves) {
            self.write(&format!("{stem}{suffix}"), curves)?;
        }
        Ok(())
    }
}

/// Generate the selected datasets, write them and evaluate the checks.
pub fn run(opts: &RunOptions, tables: &TuningTables) -> Result<RunReport, EmitError> {
    let mode = opts.mode;
    let mut report = RunReport::default();
    if mode != Mode::Checks {
        std::fs::create_dir_all(&opts.emit.out_dir).map_err(|source| EmitError::Io {
            path: opts.emit.out_dir.clone(),
            source,
        })?;
    }

    for &kind in &opts.kinds {
        for &s in &opts.subgroups {
            if mode.includes(Mode::Arrows) {
                let field = generate_arrows(s, kind, tables);
                report.singular_arrows += field.singular;
                let curves = field.to_curves(ARROW_GREY);
                Writer {
                    cfg: &opts.emit,
                    report: &mut report,
                }
                .write(&format!("arrows-{}-{}", s.letter(), kind.letter()), &curves)?;
            }
            if mode.includes(Mode::Orbits) || mode == Mode::Checks {
                let family = generate_orbits(s, kind, tables)?;
                report.stats.merge(family.stats);
                if mode != Mode::Checks {
                    Writer {
                        cfg: &opts.emit,
                        report: &mut report,
                    }
                    .write_family(["orbit", "cayley", "cayl-a"], &family)?;
                }
                for r in &family.focal_checks {
                    report.check_focal(r);
                }
                for p in &family.parabolas {
                    report.check_parabola(p);
                }
                report.focal_checks.extend(family.focal_checks);
                report.parabolas.extend(family.parabolas);
            }
            if mode.includes(Mode::Transverses) {
                let family = generate_transverses(s, kind, tables)?;
                report.stats.merge(family.stats);
                Writer {
                    cfg: &opts.emit,
                    report: &mut report,
                }
                .write_family(["orbit-t", "cayley-t", "cayl-a-t"], &family)?;
            }
        }
    }

    if mode.includes(Mode::FuturePast) {
        for (j, frame) in future_past_frames(tables).iter().enumerate() {
            Writer {
                cfg: &opts.emit,
                report: &mut report,
            }
            .write(&format!("future-past-{j:02}"), frame)?;
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    E,
    P,
    H,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SubgroupArg {
    #[value(name = "A")]
    A,
    #[value(name = "N")]
    N,
    #[value(name = "K")]
    K,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Svg,
    Both,
}

/// Regenerate orbit, transverse, Cayley-image, vector-field and
/// future-to-past data for the elliptic, parabolic and hyperbolic planes.
#[derive(Debug, Parser)]
#[command(name = "eph-plot", version)]
struct Args {
    /// Plane geometry.
    #[arg(long, value_enum, default_value_t = MetricArg::All)]
    metric: MetricArg,
    /// One-parameter subgroup.
    #[arg(long, value_enum, default_value_t = SubgroupArg::All)]
    subgroup: SubgroupArg,
    /// Which datasets to produce. `checks` writes no files.
    #[arg(long, value_enum, default_value_t = Mode::All)]
    mode: Mode,
    /// Output directory, created if missing.
    #[arg(long, default_value = "out")]
    out_dir: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Both)]
    format: FormatArg,
    /// List every written file.
    #[arg(long)]
    verbose: bool,
}

/// Command-line entry point. Returns the process exit code: 0 on success,
/// 1 on I/O failure, 2 on bad usage, 3 if a numeric check failed.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    let tables = TuningTables::default();
    let mut emit = EmitConfig::new(&args.out_dir, &tables);
    emit.formats = match args.format {
        FormatArg::Csv => vec![Format::Csv],
        FormatArg::Svg => vec![Format::Svg],
        FormatArg::Both => vec![Format::Csv, Format::Svg],
    };
    let opts = RunOptions {
        kinds: match args.metric {
            MetricArg::E => vec![MetricKind::Elliptic],
            MetricArg::P => vec![MetricKind::Parabolic],
            MetricArg::H => vec![MetricKind::Hyperbolic],
            MetricArg::All => MetricKind::ALL.to_vec(),
        },
        subgroups: match args.subgroup {
            SubgroupArg::A => vec![Subgroup::A],
            SubgroupArg::N => vec![Subgroup::N],
            SubgroupArg::K => vec![Subgroup::K],
            SubgroupArg::All => Subgroup::ALL.to_vec(),
        },
        mode: args.mode,
        emit,
    };
    match run(&opts, &tables) {
        Ok(report) => {
            print!("{}", report.render(args.verbose));
            if report.passed() {
                0
            } else {
                3
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

//! `linkdensity`: generate link diagrams, compute invariants and densities,
//! and synthesize links with a prescribed determinant density.

use clap::{Args, Parser, Subcommand, ValueEnum};
use linkdensity::adequacy::{adequacy_report, certify_crossing_number, certify_nonalternating};
use linkdensity::densities::{det_density, vol_density_interval, VolumeOracle};
use linkdensity::diagram::{braid_link, pretzel_tangle, weaving_tangle};
use linkdensity::format::{self, to_dt, to_gauss, to_pd, write_link, write_tangle};
use linkdensity::invariants::{determinant, jones_breadth, kauffman_bracket, DEFAULT_CAP};
use linkdensity::synthesis::{
    build_vol_link, cycle_family, nonalt_family, synthesize_det, weave_scan, DEFAULT_K_MAX,
};
use linkdensity::{BraidWord, ClosureKind, Error, Execution, LinkDiagram, Tangle};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "linkdensity", version, about)]
struct Cli {
    /// Leave the timestamp out of generated headers.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a diagram.
    Gen(Gen),
    /// Compute an invariant of a native diagram file.
    Inv {
        #[arg(value_enum)]
        invariant: Invariant,
        file: PathBuf,
        /// Crossing cap for the state sum.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Adequacy report and crossing-number certificate.
    Adequacy { file: PathBuf },
    /// Certify that a diagram represents a non-alternating link.
    CertifyNonalt { file: PathBuf },
    /// Determinant density.
    Density {
        #[arg(value_enum)]
        kind: DensityKind,
        file: PathBuf,
    },
    /// Volume-density bounds.
    Bounds {
        file: PathBuf,
        /// CSV of known volumes with header `id,volume,source`.
        #[arg(long)]
        volumes: Option<PathBuf>,
        /// Id to look up in the volume file; defaults to the file stem.
        #[arg(long)]
        id: Option<String>,
    },
    /// Build a link with determinant density within `eps` of `target`.
    Synth {
        #[arg(long, allow_negative_numbers = true)]
        target: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Tabulate a family.
    Scan {
        #[arg(value_enum)]
        family: ScanFamily,
        #[arg(long, default_value_t = 3)]
        k_min: usize,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = Closure::D)]
        closure: Closure,
        #[arg(long)]
        csv: PathBuf,
    },
}

#[derive(Args, Debug)]
struct Gen {
    #[command(subcommand)]
    family: Family,
    /// Closure for tangle families; `none` writes the tangle itself.
    #[arg(long, value_enum, global = true)]
    closure: Option<Closure>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, global = true, default_value_t = OutFormat::Native)]
    format: OutFormat,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Weaving tangle on M strands with N braid layers.
    Weaving { m: usize, n: usize },
    /// Pretzel tangle with twist counts L, M, N.
    Pretzel { l: usize, m: usize, n: usize },
    /// Closed braid; WORD is comma separated, e.g. `1,-2,1`.
    Braid {
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Numerator closure of n weaving tangles alternating with mirrors.
    Nonalt { n: usize },
    /// Numerator closure of COPIES copies of a weaving or pretzel tangle.
    Cycle {
        #[arg(value_enum)]
        tangle: CycleTangle,
        /// Tangle parameters: `M N` for weaving, `L M N` for pretzel.
        #[arg(num_args = 2..=3)]
        params: Vec<usize>,
        #[arg(long)]
        copies: usize,
    },
    /// Volume-spectrum link: a·n pretzel and b·n weaving summands.
    Volspec {
        a: u64,
        b: u64,
        n: u64,
        m: u64,
        k: usize,
        #[arg(long, default_value_t = 0.3)]
        eps: f64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Closure {
    #[value(name = "N", alias = "n")]
    N,
    #[value(name = "D", alias = "d")]
    D,
    Belt,
    None,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutFormat {
    Native,
    Pd,
    Gauss,
    Dt,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Invariant {
    Bracket,
    Breadth,
    Det,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DensityKind {
    Det,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ScanFamily {
    Weaving,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CycleTangle {
    Weaving,
    Pretzel,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("linkdensity: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) | Error::Parse { .. } | Error::Resource(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        Error::Inconsistency(_) => 4,
        Error::Io(_) | Error::Csv(_) => 1,
    }
}

fn header(cli: &Cli) -> Vec<String> {
    let mut h = vec![
        format!("linkdensity {}", env!("CARGO_PKG_VERSION")),
        format!("config = {:?}", cli.command),
    ];
    if !cli.no_timestamp {
        h.push(format!("timestamp = {}", chrono::Utc::now().to_rfc3339()));
    }
    h
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

enum Generated {
    Link(LinkDiagram),
    Tangle(Tangle),
}

fn close(t: Tangle, closure: Option<Closure>) -> Generated {
    match closure.unwrap_or(Closure::None) {
        Closure::N => Generated::Link(t.closure(ClosureKind::Numerator)),
        Closure::D => Generated::Link(t.closure(ClosureKind::Denominator)),
        Closure::Belt => Generated::Link(t.belt_closure()),
        Closure::None => Generated::Tangle(t),
    }
}

fn link_only(closure: Option<Closure>, what: &str) -> Result<(), Error> {
    match closure {
        None | Some(Closure::None) => Ok(()),
        Some(c) => Err(Error::Domain(format!("{what} is already closed; --closure {c:?} does not apply"))),
    }
}

fn generate(g: &Gen, notes: &mut Vec<String>) -> Result<Generated, Error> {
    Ok(match &g.family {
        Family::Weaving { m, n } => close(weaving_tangle(*m, *n)?, g.closure),
        Family::Pretzel { l, m, n } => close(pretzel_tangle(*l, *m, *n)?, g.closure),
        Family::Braid { strands, word } => {
            link_only(g.closure, "a braid closure")?;
            let letters = word
                .split(',')
                .map(|s| s.trim().parse::<i32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Error::Domain(format!("invalid braid word `{word}`")))?;
            Generated::Link(braid_link(&BraidWord::new(*strands, letters)?)?)
        }
        Family::Nonalt { n } => {
            link_only(g.closure, "the non-alternating family")?;
            Generated::Link(nonalt_family(*n)?)
        }
        Family::Cycle { tangle, params, copies } => {
            link_only(g.closure, "a cycle-family link")?;
            let t = match (tangle, params.as_slice()) {
                (CycleTangle::Weaving, &[m, n]) => weaving_tangle(m, n)?,
                (CycleTangle::Pretzel, &[l, m, n]) => pretzel_tangle(l, m, n)?,
                _ => return Err(Error::Domain("weaving takes M N, pretzel takes L M N".into())),
            };
            Generated::Link(cycle_family(&t, *copies)?)
        }
        Family::Volspec { a, b, n, m, k, eps } => {
            link_only(g.closure, "a volume-spectrum link")?;
            let (link, recipe) = build_vol_link(*a, *b, *n, *m, *k, *eps)?;
            notes.extend(recipe.to_string().lines().map(String::from));
            Generated::Link(link)
        }
    })
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Gen(g) => {
            let mut notes = header(cli);
            let text = match (generate(g, &mut notes)?, g.format) {
                (Generated::Link(d), OutFormat::Native) => write_link(&d, &notes),
                (Generated::Tangle(t), OutFormat::Native) => write_tangle(&t, &notes),
                (Generated::Tangle(_), f) => {
                    return Err(Error::Domain(format!("{f:?} export needs a closed diagram; pass --closure")))
                }
                (Generated::Link(d), OutFormat::Pd) => to_pd(&d)? + "\n",
                (Generated::Link(d), OutFormat::Gauss) => to_gauss(&d)?,
                (Generated::Link(d), OutFormat::Dt) => to_dt(&d)? + "\n",
            };
            emit(g.out.as_deref(), &text)
        }
        Command::Inv { invariant, file, cap } => {
            let d = format::read_link(file)?;
            let out = match invariant {
                Invariant::Bracket => kauffman_bracket(&d, *cap)?.to_string(),
                Invariant::Breadth => jones_breadth(&d, *cap)?.to_string(),
                Invariant::Det => determinant(&d)?.to_string(),
            };
            println!("{out}");
            Ok(())
        }
        Command::Adequacy { file } => {
            let d = format::read_link(file)?;
            let r = adequacy_report(&d)?;
            let mut out = String::new();
            let _ = writeln!(out, "a_adequate = {}", r.a_adequate);
            let _ = writeln!(out, "b_adequate = {}", r.b_adequate);
            let _ = writeln!(out, "adequate = {}", r.adequate);
            let _ = writeln!(out, "s_a = {}", r.s_a);
            let _ = writeln!(out, "s_b = {}", r.s_b);
            out.push_str(&certify_crossing_number(&d, &stem(file))?.to_string());
            print!("{out}");
            Ok(())
        }
        Command::CertifyNonalt { file } => {
            let d = format::read_link(file)?;
            print!("{}", certify_nonalternating(&d, &stem(file))?);
            Ok(())
        }
        Command::Density { kind: DensityKind::Det, file } => {
            let d = format::read_link(file)?;
            let r = det_density(&d, &stem(file))?;
            println!("id = {}", r.id);
            println!("crossings = {}", r.crossings);
            println!("determinant = {}", r.determinant);
            println!("det_density = {:.15}", r.det_density);
            println!("crossing_number_certified = {}", r.certified_crossing);
            println!("degenerate = {}", r.degenerate);
            Ok(())
        }
        Command::Bounds { file, volumes, id } => {
            let d = format::read_link(file)?;
            let oracle = volumes.as_deref().map(VolumeOracle::load).transpose()?;
            let id = id.clone().unwrap_or_else(|| stem(file));
            let iv = vol_density_interval(&d, &id, oracle.as_ref())?;
            println!("id = {id}");
            println!("lower = {:.15}", iv.lower);
            println!("upper = {:.15}", iv.upper);
            for b in iv.basis {
                println!("basis = {b}");
            }
            Ok(())
        }
        Command::Synth { target, eps, k_max, out, cert } => {
            let (link, c) = synthesize_det(*target, *eps, *k_max, Execution::Auto)?;
            let notes = header(cli);
            std::fs::write(out, write_link(&link, &notes))?;
            let mut text = String::new();
            for n in &notes {
                let _ = writeln!(text, "# {n}");
            }
            text.push_str(&c.to_string());
            std::fs::write(cert, text)?;
            println!("pass = {}", c.pass);
            Ok(())
        }
        Command::Scan { family: ScanFamily::Weaving, k_min, k_max, closure, csv } => {
            let kind = match closure {
                Closure::N => ClosureKind::Numerator,
                Closure::D => ClosureKind::Denominator,
                c => return Err(Error::Domain(format!("scan supports closures N and D, not {c:?}"))),
            };
            let rows = weave_scan(*k_min, *k_max, kind, Execution::Auto)?;
            let mut w = ::csv::Writer::from_path(csv)?;
            w.write_record(["k", "crossings", "det_digits", "det", "det_density"])?;
            for r in rows {
                let det = r.det.to_string();
                w.write_record([
                    r.k.to_string(),
                    r.crossings.to_string(),
                    det.len().to_string(),
                    det,
                    format!("{:.15}", r.density),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 verification failure.

use std::fmt::Display;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{KupischSeries, Module};
use crate::charseq::{char_of, CharSeq};
use crate::classify::{
    analyze, census, check_equivalent_conditions, verify_props, verify_theorem_1_in,
    verify_theorem_1p_in, verify_theorem_3, CensusRecord, Report,
};
use crate::constructions::{ascent_algebra, check_h_sequence, h_algebra_closure, partial_d_closure};
use crate::homology::pd;
use crate::render::{layout, mark_z, to_graph_desc, to_text, LabelMode};

#[derive(Parser, Debug)]
#[command(name = "nakayama", about = "Homological invariants of linear Nakayama algebras")]
struct Cli {
    /// Worker threads for census and verification (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Records,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Labels {
    Pd,
    None,
}

#[derive(Args, Debug)]
struct ModuleArg {
    /// Kupisch series, e.g. 1,2,3,3,3,3.
    series: String,
    /// Module as top,length.
    #[arg(long = "module")]
    module: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate and normalize a Kupisch series.
    Validate { series: String },
    /// Invariants of an algebra.
    Info {
        series: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Projective dimension of a module.
    Pd(ModuleArg),
    /// Characteristic sequence of a module.
    Char(ModuleArg),
    /// Ascending algebra of a projective characteristic sequence.
    Ascent { seq: String },
    /// Partial d-closure.
    Closure {
        series: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        trace: bool,
    },
    /// The algebra H_d(c_1, ..., c_u).
    Hd {
        #[arg(long)]
        d: usize,
        /// Comma-separated odd numbers; empty for the empty sequence.
        #[arg(long, default_value = "")]
        seq: String,
        #[arg(long)]
        trace: bool,
    },
    /// Concave higher Auslander algebras up to a rank.
    Census {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, value_enum, default_value = "records")]
        format: Format,
    },
    /// Machine verification of the classification results.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Draw the Auslander-Reiten quiver.
    Render {
        series: String,
        #[arg(long, value_enum, default_value = "pd")]
        labels: Labels,
        /// Emit vertex/edge lines instead of the grid.
        #[arg(long)]
        graph: bool,
        /// Mark the subfactors of the classifying module.
        #[arg(long)]
        mark_z: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Odd d: the sequences bounded by d classify the algebras.
    Thm1 {
        #[arg(long)]
        d: usize,
        #[arg(long = "max-u", default_value_t = 3)]
        max_u: usize,
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
    },
    /// Even d: the sequences bounded by d classify the algebras.
    Thm1p {
        #[arg(long)]
        d: usize,
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
    },
    /// Summit counts and summit characteristics of H_d(seq).
    Thm3 {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value = "")]
        seq: String,
    },
    /// Structural properties over all concave algebras up to a rank.
    Props {
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: usize,
    },
    /// Equivalent characterizations for one algebra.
    Conditions {
        series: String,
        #[arg(long)]
        d: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(e: impl Display) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

fn parse_series(s: &str) -> Result<KupischSeries, Failure> {
    s.parse().map_err(|e| usage(format!("invalid Kupisch series {s:?}: {e}")))
}

fn parse_module(a: &KupischSeries, s: &str) -> Result<Module, Failure> {
    let bad = || usage(format!("module must be given as top,length: {s:?}"));
    let (t, l) = s.split_once(',').ok_or_else(bad)?;
    let t: usize = t.trim().parse().map_err(|_| bad())?;
    let l: usize = l.trim().parse().map_err(|_| bad())?;
    a.module(t, l).map_err(usage)
}

fn parse_seq(s: &str) -> Result<Vec<usize>, Failure> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| usage(format!("invalid sequence entry {x:?}"))))
        .collect()
}

fn report(out: &mut dyn Write, r: &Report) -> Result<(), Failure> {
    writeln!(out, "{r}").map_err(usage)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Failure { code: 2, message: format!("{} failed", r.name) })
    }
}

fn human(out: &mut dyn Write, r: &CensusRecord) -> std::io::Result<()> {
    let opt = |x: &Option<CharSeq>| x.as_ref().map_or("-".to_string(), |c| c.to_string());
    writeln!(out, "kupisch:        {}", r.kupisch)?;
    writeln!(out, "rank:           {}", r.n)?;
    writeln!(out, "height:         {}", r.h)?;
    writeln!(out, "gldim:          {}", r.gldim)?;
    writeln!(out, "domdim:         {}", r.domdim)?;
    writeln!(out, "higher auslander: {}", if r.is_ha { "yes" } else { "no" })?;
    if let (Some(d), Some(p)) = (r.d, r.parity) {
        writeln!(out, "d:              {d} ({p})")?;
    }
    if let Some(s) = r.summit_count {
        writeln!(out, "summits:        {s}")?;
    }
    writeln!(out, "first summit:   {}", opt(&r.first_summit_char))?;
    writeln!(out, "last summit:    {}", opt(&r.last_summit_char))?;
    writeln!(out, "z char:         {}", opt(&r.z_char))
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| usage(e);
    match cli.command {
        Command::Validate { series } => {
            let a = parse_series(&series)?;
            writeln!(out, "{a}").map_err(io)?;
        }
        Command::Info { series, format } => {
            let r = analyze(&parse_series(&series)?);
            match format {
                Format::Records => writeln!(out, "{r}").map_err(io)?,
                Format::Human => human(out, &r).map_err(io)?,
            }
        }
        Command::Pd(m) => {
            let a = parse_series(&m.series)?;
            let x = parse_module(&a, &m.module)?;
            writeln!(out, "{}", pd(&a, &Some(x))).map_err(io)?;
        }
        Command::Char(m) => {
            let a = parse_series(&m.series)?;
            let x = parse_module(&a, &m.module)?;
            writeln!(out, "{}", char_of(&a, &Some(x))).map_err(io)?;
        }
        Command::Ascent { seq } => {
            let z: CharSeq = format!("({})", seq.trim_matches(|c| c == '(' || c == ')'))
                .parse()
                .map_err(usage)?;
            writeln!(out, "{}", ascent_algebra(&z.0).map_err(usage)?).map_err(io)?;
        }
        Command::Closure { series, d, trace } => {
            if d == 0 {
                return Err(usage("d must be positive"));
            }
            let c = partial_d_closure(&parse_series(&series)?, d).map_err(usage)?;
            writeln!(out, "{}", c.series).map_err(io)?;
            if trace {
                for (i, step) in c.trace.iter().enumerate() {
                    writeln!(out, "step {}: cliff {} append {}", i + 1, step.cliff, step.appended)
                        .map_err(io)?;
                }
                writeln!(out, "iterations: {}", c.iterations()).map_err(io)?;
            }
            if c.below_gldim {
                writeln!(out, "warning: d is below the global dimension of the input").map_err(io)?;
            }
        }
        Command::Hd { d, seq, trace } => {
            let cs = parse_seq(&seq)?;
            check_h_sequence(d, &cs).map_err(usage)?;
            let c = h_algebra_closure(d, &cs).map_err(usage)?;
            writeln!(out, "{}", c.series).map_err(io)?;
            if trace {
                for (i, step) in c.trace.iter().enumerate() {
                    writeln!(out, "step {}: cliff {} append {}", i + 1, step.cliff, step.appended)
                        .map_err(io)?;
                }
            }
        }
        Command::Census { max_n, out: path, format } => {
            if max_n == 0 {
                return Err(usage("max-n must be positive"));
            }
            let recs = census(max_n);
            let mut buf = Vec::new();
            for r in &recs {
                match format {
                    Format::Records => writeln!(buf, "{r}").map_err(io)?,
                    Format::Human => {
                        human(&mut buf, r).map_err(io)?;
                        writeln!(buf).map_err(io)?;
                    }
                }
            }
            match path {
                Some(p) => {
                    std::fs::write(&p, &buf).map_err(|e| usage(format!("{p}: {e}")))?;
                    writeln!(out, "{} records written to {p}", recs.len()).map_err(io)?;
                }
                None => out.write_all(&buf).map_err(io)?,
            }
        }
        Command::Verify { what } => match what {
            Verify::Thm1 { d, max_u, max_n } => {
                if d % 2 == 0 {
                    return Err(usage("thm1 needs an odd d"));
                }
                report(out, &verify_theorem_1_in(d, max_u, &census(max_n)))?;
            }
            Verify::Thm1p { d, max_n } => {
                if d % 2 == 1 || d == 0 {
                    return Err(usage("thm1p needs a positive even d"));
                }
                report(out, &verify_theorem_1p_in(d, &census(max_n)))?;
            }
            Verify::Thm3 { d, seq } => {
                let cs = parse_seq(&seq)?;
                check_h_sequence(d, &cs).map_err(usage)?;
                report(out, &verify_theorem_3(d, &cs))?;
            }
            Verify::Props { max_n } => report(out, &verify_props(max_n))?,
            Verify::Conditions { series, d } => {
                let a = parse_series(&series)?;
                if !a.is_concave() {
                    return Err(usage("algebra must be concave"));
                }
                report(out, &check_equivalent_conditions(&a, d))?;
            }
        },
        Command::Render { series, labels, graph, mark_z: mark } => {
            let a = parse_series(&series)?;
            let mode = match labels {
                Labels::Pd => LabelMode::Pd,
                Labels::None => LabelMode::None,
            };
            let mut l = layout(&a, mode);
            if mark {
                mark_z(&mut l, &a);
            }
            let text = if graph { to_graph_desc(&l) } else { to_text(&l) };
            out.write_all(text.as_bytes()).map_err(io)?;
        }
    }
    Ok(())
}

/// Runs the command line `args` (including the program name), writing
/// regular output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    let jobs = cli.jobs;
    let result = match jobs {
        // Output is buffered so the work can move onto the pool.
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            Ok(pool) => {
                let (res, buf) = pool.install(|| {
                    let mut buf = Vec::new();
                    (execute(cli, &mut buf), buf)
                });
                out.write_all(&buf).map_err(usage).and(res)
            }
            Err(e) => Err(usage(e)),
        },
        None => execute(cli, out),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

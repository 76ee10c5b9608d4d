use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use qfab::algebra::{build_algebra, FDAlgebra, IdempotentSet, Presentation, Relation};
use qfab::fabric::{analyze_fabric, special_tilting_report, FabricOptions};
use qfab::homology::{
    default_cutoff, dominant_dimension, global_dimension, gorenstein_dimension, is_self_injective, minimal_resolution,
    Direction, Termination,
};
use qfab::io::{parse_presentation, presentation_to_dot, print_presentation, resolution_to_dot, Report};
use qfab::linalg::Field;
use qfab::nakayama::{higher_nakayama, reduce_to_selfinjective, KupischSeries};
use qfab::par::Execution;
use qfab::rep::{Representation, DEFAULT_SEED};
use qfab::Error;

#[derive(Parser)]
#[command(name = "qfab", version, about = "Homological computations with bound quiver algebras")]
struct Cli {
    /// Process batches on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Knobs {
    /// Resolution cutoff; defaults to QFAB_DEFAULT_CUTOFF or 4 * #vertices + Loewy length.
    #[arg(long)]
    cutoff: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Reinterpret the presentation over `Q` or `F<p>`.
    #[arg(long)]
    field: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a presentation and print its dimensions.
    Build {
        /// Presentation file or fixture name.
        input: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print the normalized presentation instead of the report.
        #[arg(long)]
        print: bool,
    },
    /// Gorenstein, dominant and global dimensions.
    Analyze {
        input: String,
        #[command(flatten)]
        knobs: Knobs,
    },
    /// Fabric test for the idempotent given by vertex labels.
    Fabric {
        input: String,
        /// Defaults to the stated `f` when the input is a fixture, else empty.
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<String>>,
        /// Idempotent `h` for the generation level of `DA`.
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<String>>,
        #[command(flatten)]
        knobs: Knobs,
    },
    /// Higher Nakayama algebra of a Kupisch series.
    Nakayama {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        kupisch: Vec<usize>,
        /// Run the contraction to a self-injective algebra.
        #[arg(long)]
        reduce: bool,
        #[arg(long)]
        cutoff: Option<usize>,
        /// Print the presentation.
        #[arg(long)]
        print: bool,
    },
    /// Minimal resolution of a simple, projective or injective module.
    Resolve {
        input: String,
        /// `simple:<v>`, `proj:<v>` or `inj:<v>`.
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 6)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Side::Projective)]
        direction: Side,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Projective,
    Injective,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Syntax { .. }
            | Error::UnknownVertex(_)
            | Error::UnknownArrow(_)
            | Error::NonParallelRelation(_)
            | Error::InvalidPresentation(_)
            | Error::NotAdmissible(_)
            | Error::InvalidIdempotent(_)
            | Error::InvalidKupisch(_)
            | Error::UnknownFixture(_)
            | Error::ParameterOutOfRange(_)
            | Error::HypothesisViolated(_)
            | Error::Io(_)
            | Error::Linalg(_) => Failure::Input(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn parse_field(s: &str) -> Result<Field, Failure> {
    let s = s.trim();
    if s == "Q" {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix('F')
        .map(str::trim)
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| Failure::Input(format!("unknown field `{s}`, expected Q or F<p>")))?;
    Field::prime(p).map_err(|e| Failure::Input(e.to_string()))
}

fn with_field(p: &Presentation, field: Field) -> Result<Presentation, Failure> {
    let mut out = Presentation::new(field, p.quiver.clone());
    out.length_bound = p.length_bound;
    for r in &p.relations {
        let mut terms = Vec::new();
        for (c, w) in &r.terms {
            let c = field.convert(c).map_err(|e| Failure::Input(e.to_string()))?;
            if !c.is_zero() {
                terms.push((c, w.clone()));
            }
        }
        if !terms.is_empty() {
            out.add_relation(Relation::new(terms))?;
        }
    }
    Ok(out)
}

fn load(input: &str) -> Result<Presentation, Failure> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        return parse_presentation(&text).map_err(|e| match Failure::from(e) {
            Failure::Input(m) | Failure::Verification(m) => Failure::Input(format!("{input}: {m}")),
        });
    }
    match qfab::fixtures::fixture(input) {
        Ok(fx) => Ok(fx.presentation),
        Err(Error::UnknownFixture(_)) => Err(Failure::Input(format!("{input}: no such file or fixture"))),
        Err(e) => Err(e.into()),
    }
}

fn load_algebra(input: &str, field: Option<&str>) -> Result<(Presentation, Arc<FDAlgebra>), Failure> {
    let mut p = load(input)?;
    if let Some(f) = field {
        p = with_field(&p, parse_field(f)?)?;
    }
    let a = build_algebra(&p)?;
    Ok((p, a))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn vertex_set(a: &FDAlgebra, labels: &[String]) -> Result<IdempotentSet, Failure> {
    Ok(IdempotentSet::from_labels(a.labels(), labels)?)
}

fn braces(a: &FDAlgebra, s: &IdempotentSet) -> String {
    format!("{{{}}}", s.labels(a.labels()).join(","))
}

fn algebra_summary(r: &mut Report, p: &Presentation, a: &FDAlgebra) {
    r.push("field", p.field)
        .push("vertices", a.n_vertices())
        .push("arrows", p.quiver.n_arrows())
        .push("relations", p.relations.len())
        .push("dimension", a.dim())
        .push("loewy_length", a.loewy_length());
}

fn build(input: &str, dot: Option<&Path>, print: bool) -> Outcome {
    let (p, a) = load_algebra(input, None)?;
    if let Some(path) = dot {
        write_file(path, &presentation_to_dot(&p))?;
    }
    if print {
        emit(&print_presentation(&p));
        return Ok(());
    }
    let mut r = Report::new();
    r.push("command", "build");
    algebra_summary(&mut r, &p, &a);
    r.push_list("projective_dims", (0..a.n_vertices()).map(|v| (0..a.n_vertices()).map(|w| a.block(v, w).len()).sum::<usize>()));
    emit(&r);
    Ok(())
}

fn analyze(input: &str, knobs: &Knobs, exec: Execution) -> Outcome {
    let (p, a) = load_algebra(input, knobs.field.as_deref())?;
    let cutoff = knobs.cutoff.unwrap_or_else(|| default_cutoff(&a));
    let mut r = Report::new();
    r.push("command", "analyze");
    algebra_summary(&mut r, &p, &a);
    r.push("cutoff", cutoff)
        .push("seed", knobs.seed)
        .push("self_injective", is_self_injective(&a))
        .push("gorenstein_dimension", gorenstein_dimension(&a, cutoff, exec))
        .push("dominant_dimension", dominant_dimension(&a, cutoff, exec))
        .push("global_dimension", global_dimension(&a, cutoff, exec));
    emit(&r);
    Ok(())
}

/// Writes to stdout; a closed pipe ends the output silently.
fn emit(x: &impl std::fmt::Display) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = write!(out, "{x}").and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn fabric(input: &str, f: Option<&[String]>, h: Option<&[String]>, knobs: &Knobs, exec: Execution) -> Outcome {
    let (p, a) = load_algebra(input, knobs.field.as_deref())?;
    let cutoff = knobs.cutoff.unwrap_or_else(|| default_cutoff(&a));
    let stated = if Path::new(input).exists() { None } else { qfab::fixtures::fixture(input).ok().and_then(|fx| fx.f) };
    let fset = vertex_set(&a, f.or(stated.as_deref()).unwrap_or(&[]))?;
    let h = h.map(|h| vertex_set(&a, h)).transpose()?;
    let opts = FabricOptions { cutoff, seed: knobs.seed, exec, h };
    let rep = analyze_fabric(&a, Some(&p), &fset, &opts)?;
    let mut r = Report::new();
    r.push("command", "fabric");
    algebra_summary(&mut r, &p, &a);
    r.push("cutoff", cutoff).push("seed", knobs.seed).push("f", braces(&a, &fset));
    r.push("proj_dim_quotient_at_most_one", rep.definitional.proj_dim_ok);
    r.push("fabric", rep.is_fabric());
    r.push("tau_dual_companion", rep.definitional.strong.as_ref().map(|e| braces(&a, e)).unwrap_or_else(|| "none".into()));
    if let Some(c) = &rep.combinatorial {
        r.push("combinatorial_companion", c.companion.as_ref().map(|e| braces(&a, e)).unwrap_or_else(|| "none".into()));
        if let Some(fail) = &c.failure {
            r.push("combinatorial_failure", format!("condition {}: {}", fail.condition, fail.witness));
        }
    }
    if let Some(agree) = rep.methods_agree() {
        r.push("methods_agree", agree);
    }
    let agree = rep.methods_agree() != Some(false);
    let mut tilting = true;
    if let Some(e) = &rep.companion {
        r.push("e", braces(&a, e));
        if let Some(d) = &rep.dimensions {
            for (v, hit) in &d.per_vertex {
                r.push(format!("fab_dim.{}", a.label(*v)), hit.depth);
            }
            r.push("fab_dim", d.sup);
        }
        let t = special_tilting_report(&a, &fset, e)?;
        r.push_list("tilting.summands", &t.summand_names)
            .push("tilting.proj_dim_at_most_one", t.proj_dim_at_most_one)
            .push("tilting.ext1_vanishes", t.ext1_vanishes)
            .push("tilting.coresolves_regular", t.coresolves_regular)
            .push("tilting.full_rank", t.has_full_rank())
            .push("tilting.passes", t.passes());
        tilting = t.passes();
    }
    if let Some((hs, level)) = &rep.h {
        r.push("h", braces(&a, hs));
        r.push("dual_regular_gen_level", level.map(|l| l.to_string()).unwrap_or_else(|| "none".into()));
    }
    emit(&r);
    if !rep.is_fabric() {
        return Err(Failure::Verification(format!("{} is not a fabric idempotent", braces(&a, &fset))));
    }
    if !agree {
        return Err(Failure::Verification("fabric certificates disagree".into()));
    }
    if !tilting {
        return Err(Failure::Verification("special tilting module check failed".into()));
    }
    Ok(())
}

fn nakayama(n: usize, kupisch: &[usize], reduce: bool, cutoff: Option<usize>, print: bool) -> Outcome {
    let l = KupischSeries::new(kupisch.to_vec())?;
    let h = higher_nakayama(n, &l)?;
    if print {
        emit(&print_presentation(&h.presentation));
        return Ok(());
    }
    let a = &h.algebra;
    let cutoff = cutoff.unwrap_or_else(|| default_cutoff(a));
    let mut r = Report::new();
    r.push("command", "nakayama").push("n", n).push("kupisch", &l);
    algebra_summary(&mut r, &h.presentation, a);
    r.push_list("labels", a.labels());
    r.push("self_injective", is_self_injective(a));
    if reduce {
        r.push("cutoff", cutoff);
        let trace = reduce_to_selfinjective(n, &l, cutoff)?;
        for (i, line) in trace.describe().iter().enumerate() {
            r.push(format!("trace.{i}"), line.trim());
        }
        if let Some(s) = trace.last_corner() {
            r.push_list("terminal_labels", s.corner.labels());
        }
        r.push("terminal_vertices", trace.terminal_algebra.n_vertices());
    }
    emit(&r);
    Ok(())
}

fn resolve(input: &str, module: &str, steps: usize, side: Side, dot: Option<&Path>) -> Outcome {
    let (_, a) = load_algebra(input, None)?;
    let (kind, v) = module
        .split_once(':')
        .ok_or_else(|| Failure::Input(format!("module `{module}` is not of the form kind:vertex")))?;
    let vi = a.vertex_by_label(v)?;
    let m = match kind {
        "simple" => Representation::simple(&a, vi),
        "proj" => Representation::projective(&a, vi),
        "inj" => Representation::injective(&a, vi),
        _ => return Err(Failure::Input(format!("unknown module kind `{kind}`"))),
    };
    let (dir, letter) = match side {
        Side::Projective => (Direction::Projective, "P"),
        Side::Injective => (Direction::Injective, "I"),
    };
    let res = minimal_resolution(&m, dir, steps);
    let mut r = Report::new();
    r.push("command", "resolve").push("module", module).push("steps", steps);
    for (i, t) in res.terms.iter().enumerate() {
        let names: Vec<String> = t.copies.iter().map(|&w| format!("{letter}{}", a.label(w))).collect();
        r.push(format!("term.{i}"), if names.is_empty() { "0".into() } else { names.join(" + ") });
    }
    let status = match res.status {
        Termination::Terminated => "terminated".to_string(),
        Termination::Truncated => "truncated".to_string(),
        Termination::Periodic { start, period } => format!("periodic from {start} with period {period}"),
    };
    r.push("status", status);
    if let Some(path) = dot {
        write_file(path, &resolution_to_dot(&res, &a))?;
    }
    emit(&r);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let out = match &cli.command {
        Command::Build { input, dot, print } => build(input, dot.as_deref(), *print),
        Command::Analyze { input, knobs } => analyze(input, knobs, exec),
        Command::Fabric { input, f, h, knobs } => fabric(input, f.as_deref(), h.as_deref(), knobs, exec),
        Command::Nakayama { n, kupisch, reduce, cutoff, print } => nakayama(*n, kupisch, *reduce, *cutoff, *print),
        Command::Resolve { input, module, steps, direction, dot } => resolve(input, module, *steps, *direction, dot.as_deref()),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

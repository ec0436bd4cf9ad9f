//! The `tp` command: run TP files, check the law suite, evaluate
//! expressions and enumerate programs.
//!
//! Exit status is 0 when everything passes, 1 when a check or law fails
//! and 2 on unreadable input, syntax or elaboration errors, unknown laws
//! and requests too large to enumerate.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tp_core::StateSpace;
use tp_lang::{Diagnostic, DirectiveReport, Model, Query, Verdict};
use tp_laws::{Config, LawReport, Mode as LawMode, Verdict as LawVerdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tp", version, about = "Finite-state workbench for the set-theoretic theory of programs")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QueryArg {
    Post,
    Pre,
    Range,
    Dom,
    Classify,
}

impl From<QueryArg> for Query {
    fn from(q: QueryArg) -> Query {
        match q {
            QueryArg::Post => Query::Post,
            QueryArg::Pre => Query::Pre,
            QueryArg::Range => Query::Range,
            QueryArg::Dom => Query::Dom,
            QueryArg::Classify => Query::Classify,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse, elaborate and run the directives of TP files.
    Run {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Check registered laws.
    Laws {
        /// Law id, or a base id such as P32 for all its variants. Repeatable;
        /// all laws when absent.
        #[arg(long = "law")]
        laws: Vec<String>,
        #[arg(long, default_value_t = 2)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate an expression and print one facet of the resulting program.
    Eval {
        /// File providing the universe and bindings; a three-atom universe
        /// {s0,s1,s2} when absent.
        file: Option<PathBuf>,
        #[arg(long)]
        expr: String,
        #[arg(long = "print", value_enum, default_value_t = QueryArg::Post)]
        query: QueryArg,
    },
    /// Print every program over a numbered space, one per line.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        size: usize,
    },
}

/// Runs the command line `args` (program name first), writing reports to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Run { files } => cmd_run(files, cli.format, out, err),
        Command::Laws {
            laws,
            size,
            mode,
            samples,
            seed,
        } => {
            let cfg = match mode {
                Mode::Exhaustive => Config::exhaustive(*size),
                Mode::Random => Config::random(*size, *samples, *seed),
            };
            cmd_laws(laws, &cfg, cli.format, out, err)
        }
        Command::Eval { file, expr, query } => cmd_eval(file.as_ref(), expr, (*query).into(), out, err),
        Command::Enumerate { size } => cmd_enumerate(*size, out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_ERROR
    })
}

type IoResult = std::io::Result<i32>;

fn report_diagnostics(
    file: &str,
    diags: &[Diagnostic],
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<()> {
    for d in diags {
        let level = if d.is_error() { "error" } else { "warning" };
        write!(err, "{file}:{}: {level}: {}", d.pos, d.message)?;
        match &d.note {
            Some(note) => writeln!(err, " ({note})")?,
            None => writeln!(err)?,
        }
        if format == Format::JsonLines {
            let line = json!({
                "file": file,
                "id": null,
                "verdict": "error",
                "position": d.pos.to_string(),
                "message": d.message,
                "note": d.note,
            });
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}

pub fn cmd_run(files: &[PathBuf], format: Format, out: &mut dyn Write, err: &mut dyn Write) -> IoResult {
    let mut status = EXIT_OK;
    for path in files {
        let name = path.display().to_string();
        let src = match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => {
                let d = Diagnostic::error(tp_lang::Pos::new(1, 1), format!("cannot read file: {e}"));
                report_diagnostics(&name, &[d], format, out, err)?;
                status = EXIT_ERROR;
                continue;
            }
        };
        let model = match tp_lang::load(&src) {
            Ok(m) => m,
            Err(diags) => {
                report_diagnostics(&name, &diags, format, out, err)?;
                status = EXIT_ERROR;
                continue;
            }
        };
        for r in tp_lang::run(&model) {
            write_directive(&name, &r, format, out)?;
            if r.verdict == Verdict::Fail && status == EXIT_OK {
                status = EXIT_FAILED;
            }
        }
    }
    Ok(status)
}

fn write_directive(file: &str, r: &DirectiveReport, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Text => {
            let verdict = if r.expected_failure {
                "pass (expected failure)".to_string()
            } else {
                r.verdict.name().to_string()
            };
            match &r.value {
                Some(v) => writeln!(out, "{file}:{}: {verdict} {} = {v}", r.position, r.id)?,
                None => writeln!(out, "{file}:{}: {verdict} {}", r.position, r.id)?,
            }
            for w in &r.witnesses {
                writeln!(out, "    witness: {w}")?;
            }
        }
        Format::JsonLines => {
            let line = json!({
                "file": file,
                "id": r.id,
                "verdict": r.verdict.name(),
                "expected_failure": r.expected_failure,
                "cases": r.cases,
                "failures": r.failures,
                "witnesses": r.witnesses,
                "position": r.position.to_string(),
                "value": r.value,
            });
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}

fn law_witnesses(r: &LawReport) -> Vec<String> {
    let mut w = Vec::new();
    if let Some(replay) = &r.replay {
        w.push(format!("{} witness: {}", replay.source.name(), replay.counterexample.render()));
    }
    w.extend(r.failures.iter().map(|c| c.render()));
    w
}

pub fn cmd_laws(ids: &[String], cfg: &Config, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> IoResult {
    let laws = match tp_laws::select(ids) {
        Ok(l) => l,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_ERROR);
        }
    };
    let mut status = EXIT_OK;
    for law in laws {
        let start = Instant::now();
        let report = match tp_laws::check(law, cfg) {
            Ok(r) => r,
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_ERROR);
            }
        };
        let millis = start.elapsed().as_millis();
        let verdict = match &report.verdict {
            LawVerdict::Confirmed => "confirmed",
            LawVerdict::Unexpected(_) => "unexpected",
        };
        let expected = if law.expects_holds() { "holds" } else { "refuted" };
        if !report.confirmed() {
            status = EXIT_FAILED;
        }
        match format {
            Format::Text => {
                let mode = match cfg.mode {
                    LawMode::Exhaustive => format!("exhaustive |S|={}", cfg.size),
                    LawMode::Random { samples } => format!("random |S|={} samples={samples} seed={}", cfg.size, cfg.seed),
                };
                writeln!(
                    out,
                    "{:<24} {verdict:<10} expected {expected:<8} {mode} cases={} failures={} {millis}ms",
                    law.id, report.cases, report.failure_count
                )?;
                if let LawVerdict::Unexpected(why) = &report.verdict {
                    writeln!(out, "    {why}")?;
                }
                for w in law_witnesses(&report) {
                    writeln!(out, "    witness: {w}")?;
                }
            }
            Format::JsonLines => {
                let line = json!({
                    "id": law.id,
                    "verdict": verdict,
                    "expected": expected,
                    "statement": law.statement,
                    "domain": law.domain.name(),
                    "mode": report.mode_name(),
                    "size": cfg.size,
                    "cases": report.cases,
                    "vacuous": report.vacuous,
                    "failures": report.failure_count,
                    "witnesses": law_witnesses(&report),
                    "position": null,
                });
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(status)
}

pub fn cmd_eval(
    file: Option<&PathBuf>,
    expr: &str,
    query: Query,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> IoResult {
    let (name, model) = match file {
        Some(path) => {
            let name = path.display().to_string();
            let src = match std::fs::read_to_string(path) {
                Ok(s) => s,
                Err(e) => {
                    writeln!(err, "{name}: cannot read file: {e}")?;
                    return Ok(EXIT_ERROR);
                }
            };
            match tp_lang::load(&src) {
                Ok(m) => (name, m),
                Err(diags) => {
                    report_diagnostics(&name, &diags, Format::Text, out, err)?;
                    return Ok(EXIT_ERROR);
                }
            }
        }
        None => ("<expr>".to_string(), Model::bare(tp_lang::default_space())),
    };
    match tp_lang::eval(&model, expr, query) {
        Ok(text) => {
            writeln!(out, "{text}")?;
            Ok(EXIT_OK)
        }
        Err(diags) => {
            let label = if file.is_some() { format!("{name} --expr") } else { name };
            report_diagnostics(&label, &diags, Format::Text, out, err)?;
            Ok(EXIT_ERROR)
        }
    }
}

pub fn cmd_enumerate(size: usize, out: &mut dyn Write, err: &mut dyn Write) -> IoResult {
    let programs = StateSpace::numbered(size)
        .map_err(|e| e.to_string())
        .and_then(|s| tp_laws::enumerate_programs(&s).map_err(|e| e.to_string()));
    match programs {
        Ok(ps) => {
            for p in ps {
                writeln!(out, "{}", tp_lang::printer::prog_text(&p))?;
            }
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_ERROR)
        }
    }
}

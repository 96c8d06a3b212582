//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::framework::{registry, GenParams, VariationSpec};
use crate::grid::render_text;
use crate::harness::{self, GoldenOutcome, TaskTally};
use crate::rng::RngStream;

#[derive(Debug, Parser)]
#[command(name = "arcgen", version, about = "Procedural generators and verifiers for ARC grid tasks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a dataset of generated task files plus a manifest.
    Generate(GenerateArgs),
    /// Check fixtures against golden task files.
    Validate(ValidateArgs),
    /// Judge task files with the bundled verifiers.
    Evaluate(EvaluateArgs),
    /// Print one example as digit rows.
    Render(RenderArgs),
    /// List registered task ids.
    List,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Task to generate (repeatable); all tasks when omitted.
    #[arg(long = "task")]
    tasks: Vec<String>,
    /// Train examples per task; one test example is always added.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Variation override `name=value` (repeatable); needs exactly one --task.
    #[arg(long = "set", value_name = "NAME=VALUE")]
    overrides: Vec<String>,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    #[arg(long)]
    task: Option<String>,
    /// Golden task file for the single task named by --task.
    #[arg(long, requires = "task")]
    file: Option<PathBuf>,
    /// Directory of golden `<task_id>.json` files.
    #[arg(long = "in-dir")]
    in_dir: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    /// Directory of task files.
    #[arg(long = "examples", visible_alias = "in-dir")]
    examples: PathBuf,
    #[arg(long)]
    task: Option<String>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// Task file to read the example from.
    #[arg(long, conflicts_with = "task", required_unless_present = "task")]
    file: Option<PathBuf>,
    /// Generate the example on the fly instead.
    #[arg(long)]
    task: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Example index, counting train examples first, then test.
    #[arg(long, default_value_t = 0)]
    index: usize,
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return 2;
            }
            let _ = write!(out, "{text}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Generate(a) => generate(a, out, err),
        Command::Validate(a) => validate(a, out),
        Command::Evaluate(a) => evaluate(a, out),
        Command::Render(a) => render(a, out),
        Command::List => list(out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

fn generate(a: GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let reg = registry();
    let ids: Vec<&str> = if a.tasks.is_empty() {
        reg.ids().collect()
    } else {
        a.tasks.iter().map(String::as_str).collect()
    };
    for id in &ids {
        reg.lookup(id)?;
    }
    let count = a.count as usize;
    let manifest = if a.overrides.is_empty() {
        harness::emit_dataset(reg, &ids, count, a.seed, &a.out)?
    } else {
        let [id] = ids.as_slice() else {
            return Err(Error::invalid("--set needs exactly one --task"));
        };
        let mut params = GenParams::new();
        for s in &a.overrides {
            params.insert_assignment(s)?;
        }
        let v = reg.apply_variation(id, &VariationSpec::new(params), count, a.seed)?;
        if !v.within_domain {
            let _ = writeln!(err, "warning: task {id}: variation leaves the verifier's domain; examples were not verified");
        }
        harness::write_dataset(&a.out, a.seed, &[(id.to_string(), v.tasks)])?
    };
    for t in &manifest.tasks {
        let path = a.out.join(&t.file);
        write_out(
            out,
            &format!("Wrote {} ({} train, {} test)\n", path.display(), t.train_count, t.test_count),
        )?;
    }
    Ok(0)
}

fn golden_path(a: &ValidateArgs, id: &str) -> Option<PathBuf> {
    if let Some(f) = &a.file {
        return Some(f.clone());
    }
    a.in_dir.as_ref().map(|d| d.join(format!("{id}.json"))).filter(|p| p.exists())
}

fn validate(a: ValidateArgs, out: &mut dyn Write) -> Result<i32> {
    let reg = registry();
    let ids: Vec<&str> = match &a.task {
        Some(id) => vec![reg.lookup(id)?.task_id()],
        None => reg.ids().collect(),
    };
    let mut report = harness::EvalReport::new();
    for id in ids {
        let path = golden_path(&a, id);
        match harness::golden_check(reg, id, path.as_deref())? {
            GoldenOutcome::Match => report.record(id, TaskTally { pass_count: 1, total_count: 1 }),
            GoldenOutcome::Mismatch => report.record(id, TaskTally { pass_count: 0, total_count: 1 }),
            GoldenOutcome::NotApplicable => report.skip(id),
        }
    }
    write_out(out, &harness::format_report(&report))?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn evaluate(a: EvaluateArgs, out: &mut dyn Write) -> Result<i32> {
    let reg = registry();
    if let Some(id) = &a.task {
        reg.lookup(id)?;
    }
    let mut programs = harness::bundled_verifiers(reg);
    if let Some(id) = &a.task {
        programs.retain(|k, _| k == id);
    }
    let report = harness::evaluate(&a.examples, &programs)?;
    write_out(out, &harness::format_report(&report))?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn render(a: RenderArgs, out: &mut dyn Write) -> Result<i32> {
    let example = match (&a.file, &a.task) {
        (Some(path), _) => {
            let ts = harness::load_task_file(path)?;
            let n = ts.len();
            let example = ts.examples().nth(a.index).cloned();
            example.ok_or_else(|| out_of_range(path, a.index, n))?
        }
        (None, Some(id)) => {
            let gen = registry().lookup(id)?;
            let mut rng = RngStream::new(a.seed, id, a.index as u64)?;
            gen.generate(&GenParams::new(), &mut rng).map_err(|e| e.in_task(id))?
        }
        (None, None) => return Err(Error::invalid("render needs --file or --task")),
    };
    write_out(
        out,
        &format!("input\n{}\noutput\n{}", render_text(&example.input), render_text(&example.output)),
    )?;
    Ok(0)
}

fn out_of_range(path: &Path, index: usize, n: usize) -> Error {
    Error::invalid(format!("{}: example index {index} out of range (file has {n})", path.display()))
}

fn list(out: &mut dyn Write) -> Result<i32> {
    for id in registry().ids() {
        write_out(out, &format!("{id}\n"))?;
    }
    Ok(0)
}

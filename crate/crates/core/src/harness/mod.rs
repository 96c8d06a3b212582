//! Dataset emission, golden-set checks, and program evaluation with
//! plain-text reports.

mod taskfile;

use std::collections::BTreeMap;
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::framework::Registry;
use crate::grid::{Grid, TaskSet};

pub use taskfile::{from_json, load_task_file, save_task_file, to_json};

pub const MANIFEST_FILE: &str = "manifest.json";

/// Official examples shipped with the crate, keyed by task id.
pub fn bundled_golden(task_id: &str) -> Option<&'static str> {
    match task_id {
        "543a7ed5" => Some(include_str!("../../data/543a7ed5.json")),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub train_count: usize,
    pub test_count: usize,
    pub file: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub master_seed: u64,
    pub tasks: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn example_count(&self) -> usize {
        self.tasks.iter().map(|t| t.train_count + t.test_count).sum()
    }
}

/// Write one `<task_id>.json` per task set plus `manifest.json`.
pub fn write_dataset(out_dir: &Path, master_seed: u64, sets: &[(String, TaskSet)]) -> Result<Manifest> {
    fs::create_dir_all(out_dir).map_err(|e| Error::io(out_dir, e))?;
    let mut tasks = Vec::with_capacity(sets.len());
    for (id, ts) in sets {
        let file = format!("{id}.json");
        save_task_file(&out_dir.join(&file), ts)?;
        tasks.push(ManifestEntry {
            id: id.clone(),
            train_count: ts.train().len(),
            test_count: ts.test().len(),
            file,
        });
    }
    let manifest = Manifest { master_seed, tasks };
    let path = out_dir.join(MANIFEST_FILE);
    let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    text.push('\n');
    fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
    Ok(manifest)
}

/// Generate `per_task_train` train examples and one test example for every task.
pub fn emit_dataset(
    registry: &Registry,
    task_ids: &[&str],
    per_task_train: usize,
    master_seed: u64,
    out_dir: &Path,
) -> Result<Manifest> {
    if per_task_train == 0 {
        return Err(Error::invalid("per-task train count must be positive"));
    }
    let sets = task_ids
        .iter()
        .map(|&id| Ok((id.to_string(), registry.generate_task_set(id, per_task_train, 1, master_seed)?)))
        .collect::<Result<Vec<_>>>()?;
    write_dataset(out_dir, master_seed, &sets)
}

/// A candidate transformation program. Errors and panics count as failed examples.
pub type Program<'a> = Box<dyn Fn(&Grid) -> Result<Grid> + Send + Sync + 'a>;

/// Each registered task's verifier, keyed by task id.
pub fn bundled_verifiers(registry: &Registry) -> BTreeMap<String, Program<'_>> {
    registry
        .ids()
        .map(|id| {
            let gen = registry.lookup(id).expect("listed ids are registered");
            let program: Program<'_> = Box::new(move |g: &Grid| gen.verify(g));
            (id.to_string(), program)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TaskTally {
    pub pass_count: usize,
    pub total_count: usize,
}

impl TaskTally {
    pub fn passed(&self) -> bool {
        self.total_count > 0 && self.pass_count == self.total_count
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EvalReport {
    per_task: BTreeMap<String, TaskTally>,
    skipped: Vec<String>,
}

impl EvalReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, task_id: &str, tally: TaskTally) {
        self.per_task.insert(task_id.to_string(), tally);
    }

    pub fn skip(&mut self, task_id: &str) {
        self.skipped.push(task_id.to_string());
        self.skipped.sort();
    }

    pub fn per_task(&self) -> &BTreeMap<String, TaskTally> {
        &self.per_task
    }

    /// Tasks present but not judged; excluded from the totals.
    pub fn skipped(&self) -> &[String] {
        &self.skipped
    }

    pub fn tasks_passed(&self) -> usize {
        self.per_task.values().filter(|t| t.passed()).count()
    }

    pub fn tasks_total(&self) -> usize {
        self.per_task.len()
    }

    pub fn all_passed(&self) -> bool {
        self.tasks_total() > 0 && self.tasks_passed() == self.tasks_total()
    }

    /// `100 * passed / total`, rounded to two decimals with trailing zeros dropped.
    pub fn percent_text(&self) -> String {
        format_percent(self.tasks_passed(), self.tasks_total())
    }
}

fn format_percent(passed: usize, total: usize) -> String {
    if total == 0 {
        return "0".to_string();
    }
    let (passed, total) = (passed as u128, total as u128);
    let hundredths = (passed * 10_000 + total / 2) / total;
    let (whole, frac) = (hundredths / 100, hundredths % 100);
    match frac {
        0 => format!("{whole}"),
        f if f % 10 == 0 => format!("{whole}.{}", f / 10),
        f => format!("{whole}.{f:02}"),
    }
}

pub fn format_report(r: &EvalReport) -> String {
    let mut out = String::new();
    for (id, tally) in &r.per_task {
        let verdict = if tally.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!("Testing task {id} ... {verdict}\n"));
    }
    for id in &r.skipped {
        out.push_str(&format!("Skipping task {id} ... n/a\n"));
    }
    out.push_str(&format!(
        "Examples pass for {}/{} tasks ({}%)\n",
        r.tasks_passed(),
        r.tasks_total(),
        r.percent_text()
    ));
    out
}

/// Run `program` on every example and count exact matches.
pub fn judge(ts: &TaskSet, program: &(dyn Fn(&Grid) -> Result<Grid> + Sync)) -> TaskTally {
    let pass_count = ts
        .examples()
        .filter(|ex| matches!(catch_unwind(AssertUnwindSafe(|| program(&ex.input))), Ok(Ok(out)) if out == ex.output))
        .count();
    TaskTally { pass_count, total_count: ts.len() }
}

/// Task files in `dir`, sorted by task id.
pub fn task_files(dir: &Path) -> Result<Vec<(String, PathBuf)>> {
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        let is_json = path.extension().is_some_and(|e| e == "json");
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
        if !is_json || name == MANIFEST_FILE {
            continue;
        }
        if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
            files.push((stem.to_string(), path.clone()));
        }
    }
    files.sort();
    Ok(files)
}

/// Judge every task file in `dir` that has a program; the rest are skipped.
pub fn evaluate(dir: &Path, programs: &BTreeMap<String, Program<'_>>) -> Result<EvalReport> {
    let mut report = EvalReport::new();
    for (id, path) in task_files(dir)? {
        match programs.get(&id) {
            Some(program) => report.record(&id, judge(&load_task_file(&path)?, program.as_ref())),
            None => report.skip(&id),
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoldenOutcome {
    Match,
    Mismatch,
    /// Neither a fixture nor golden examples are available.
    NotApplicable,
}

/// Compare a task's fixture with its golden examples.
///
/// Golden examples come from `golden_path` or, failing that, the copy bundled
/// with the crate. Tasks without a fixture are checked by running their
/// verifier over the golden examples instead.
pub fn golden_check(registry: &Registry, task_id: &str, golden_path: Option<&Path>) -> Result<GoldenOutcome> {
    let gen = registry.lookup(task_id)?;
    let golden = match golden_path {
        Some(p) => Some(load_task_file(p)?),
        None => bundled_golden(task_id)
            .map(|text| from_json(text, &format!("bundled {task_id}.json")))
            .transpose()?,
    };
    let Some(golden) = golden else {
        return Ok(GoldenOutcome::NotApplicable);
    };
    let matched = match gen.validate() {
        Some(fixture) => fixture.map_err(|e| e.in_task(task_id))? == golden,
        None => judge(&golden, &|g: &Grid| gen.verify(g)).passed(),
    };
    Ok(if matched { GoldenOutcome::Match } else { GoldenOutcome::Mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(passed: usize, total: usize) -> EvalReport {
        let mut r = EvalReport::new();
        for i in 0..total {
            let pass_count = if i < passed { 2 } else { 1 };
            r.record(&format!("{i:08x}"), TaskTally { pass_count, total_count: 2 });
        }
        r
    }

    #[test]
    fn percent_formatting() {
        assert_eq!(format_percent(4, 4), "100");
        assert_eq!(format_percent(1, 4), "25");
        assert_eq!(format_percent(3, 4), "75");
        assert_eq!(format_percent(65, 400), "16.25");
        assert_eq!(format_percent(1, 8), "12.5");
        assert_eq!(format_percent(1, 3), "33.33");
        assert_eq!(format_percent(2, 3), "66.67");
        assert_eq!(format_percent(0, 5), "0");
    }

    #[test]
    fn report_lines() {
        let text = format_report(&report(1, 4));
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "Testing task 00000000 ... pass");
        assert_eq!(lines[1], "Testing task 00000001 ... FAIL");
        assert_eq!(*lines.last().unwrap(), "Examples pass for 1/4 tasks (25%)");
        assert!(format_report(&report(4, 4)).ends_with("Examples pass for 4/4 tasks (100%)\n"));
        assert!(format_report(&report(65, 400)).ends_with("(16.25%)\n"));
    }

    #[test]
    fn tally_invariants() {
        assert!(!TaskTally { pass_count: 0, total_count: 0 }.passed());
        assert!(TaskTally { pass_count: 3, total_count: 3 }.passed());
        let mut r = report(2, 3);
        r.skip("ffffffff");
        assert_eq!((r.tasks_passed(), r.tasks_total()), (2, 3));
        assert_eq!(r.skipped(), ["ffffffff"]);
        assert!(format_report(&r).contains("Skipping task ffffffff ... n/a\n"));
    }

    #[test]
    fn panicking_and_failing_programs_fail_examples() {
        let ts = TaskSet::new(
            vec![crate::grid::Example {
                input: Grid::from_rows(&[[1u8]]).unwrap(),
                output: Grid::from_rows(&[[1u8]]).unwrap(),
            }],
            vec![crate::grid::Example {
                input: Grid::from_rows(&[[2u8]]).unwrap(),
                output: Grid::from_rows(&[[3u8]]).unwrap(),
            }],
        )
        .unwrap();
        assert_eq!(judge(&ts, &|g: &Grid| Ok(g.clone())).pass_count, 1);
        assert_eq!(judge(&ts, &|_: &Grid| Err(Error::domain("nope"))).pass_count, 0);
        assert_eq!(judge(&ts, &|_: &Grid| -> Result<Grid> { panic!("boom") }).pass_count, 0);
    }
}

//! The per-task generator contract, parameter bundles, and the task registry.
//!
//! A generator runs in two stanzas. Parameterization fills every parameter the
//! caller left unset with random draws (retrying until the task's constraints
//! hold), and generation turns the resulting concrete parameters into pixel
//! grids. When every parameter is supplied the first stanza draws nothing.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::grid::{named_color, Color, Example, Grid, TaskSet};
use crate::rng::RngStream;

/// Attempts allowed for a parameterization retry loop before giving up.
pub const RETRY_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    List(Vec<i64>),
    Color(Color),
    Bool(bool),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<Vec<i64>> for ParamValue {
    fn from(v: Vec<i64>) -> Self {
        ParamValue::List(v)
    }
}

impl From<Color> for ParamValue {
    fn from(v: Color) -> Self {
        ParamValue::Color(v)
    }
}

impl From<bool> for ParamValue {
    fn from(v: bool) -> Self {
        ParamValue::Bool(v)
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::List(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
            ParamValue::Color(c) => write!(f, "{c}"),
            ParamValue::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl ParamValue {
    /// Parse the textual form used on the command line: `true`/`false`, a
    /// palette name, an integer, or a comma-separated integer list.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "true" => return Ok(ParamValue::Bool(true)),
            "false" => return Ok(ParamValue::Bool(false)),
            _ => {}
        }
        if let Ok(c) = named_color(text) {
            return Ok(ParamValue::Color(c));
        }
        let parse_int = |s: &str| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::invalid(format!("cannot parse parameter value `{text}`")))
        };
        if text.contains(',') {
            text.split(',').map(parse_int).collect::<Result<Vec<_>>>().map(ParamValue::List)
        } else {
            parse_int(text).map(ParamValue::Int)
        }
    }
}

/// Named, optional parameters for one generator call. Absent entries are randomized.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenParams {
    entries: BTreeMap<String, ParamValue>,
}

impl GenParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: impl Into<ParamValue>) -> Self {
        self.insert(name, value);
        self
    }

    pub fn insert(&mut self, name: &str, value: impl Into<ParamValue>) {
        self.entries.insert(name.to_string(), value.into());
    }

    /// Parse a `name=value` assignment.
    pub fn insert_assignment(&mut self, assignment: &str) -> Result<()> {
        let (name, value) = assignment
            .split_once('=')
            .ok_or_else(|| Error::invalid(format!("expected name=value, got `{assignment}`")))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::invalid(format!("empty parameter name in `{assignment}`")));
        }
        self.entries.insert(name.to_string(), ParamValue::parse(value)?);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.entries.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn int(&self, name: &str) -> Result<Option<i64>> {
        match self.get(name) {
            None => Ok(None),
            Some(ParamValue::Int(v)) => Ok(Some(*v)),
            Some(ParamValue::Color(c)) => Ok(Some(i64::from(c.value()))),
            Some(other) => Err(Error::invalid(format!("`{name}` expects an integer, got `{other}`"))),
        }
    }

    /// A list parameter; a bare integer counts as a one-element list.
    pub fn list(&self, name: &str) -> Result<Option<Vec<i64>>> {
        match self.get(name) {
            None => Ok(None),
            Some(ParamValue::List(v)) => Ok(Some(v.clone())),
            Some(ParamValue::Int(v)) => Ok(Some(vec![*v])),
            Some(ParamValue::Color(c)) => Ok(Some(vec![i64::from(c.value())])),
            Some(other) => Err(Error::invalid(format!("`{name}` expects a list, got `{other}`"))),
        }
    }

    pub fn color(&self, name: &str) -> Result<Option<Color>> {
        match self.get(name) {
            None => Ok(None),
            Some(ParamValue::Color(c)) => Ok(Some(*c)),
            Some(ParamValue::Int(v)) => Color::new(*v).map(Some),
            Some(other) => Err(Error::invalid(format!("`{name}` expects a color, got `{other}`"))),
        }
    }

    pub fn flag(&self, name: &str) -> Result<Option<bool>> {
        match self.get(name) {
            None => Ok(None),
            Some(ParamValue::Bool(b)) => Ok(Some(*b)),
            Some(ParamValue::Int(0)) => Ok(Some(false)),
            Some(ParamValue::Int(1)) => Ok(Some(true)),
            Some(other) => Err(Error::invalid(format!("`{name}` expects a boolean, got `{other}`"))),
        }
    }
}

/// A declared generator parameter and a human-readable note on its default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: &'static str,
}

pub trait TaskGenerator: Send + Sync {
    /// Eight lowercase hex characters, as in ARC task file names.
    fn task_id(&self) -> &'static str;

    fn params(&self) -> &'static [ParamSpec];

    /// Produce one example. Unset parameters are drawn from `rng`.
    fn generate(&self, params: &GenParams, rng: &mut RngStream) -> Result<Example>;

    /// Reference transformation; `verify(input) == output` for every generated example.
    fn verify(&self, input: &Grid) -> Result<Grid>;

    /// Parameters that reproduce the original task's examples, if known.
    fn validate(&self) -> Option<Result<TaskSet>> {
        None
    }

    /// Whether examples drawn with `overrides` still belong to the input space the
    /// verifier is defined on.
    fn within_verifier_domain(&self, _overrides: &GenParams) -> Result<bool> {
        Ok(true)
    }
}

/// Parameter overrides that widen a task's distribution.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VariationSpec {
    pub overrides: GenParams,
}

impl VariationSpec {
    pub fn new(overrides: GenParams) -> Self {
        VariationSpec { overrides }
    }
}

/// Examples drawn under a variation. When `within_domain` is false the examples
/// were not checked against the verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variation {
    pub tasks: TaskSet,
    pub within_domain: bool,
}

fn is_task_id(id: &str) -> bool {
    id.len() == 8 && id.bytes().all(|b| b.is_ascii_digit() || (b'a'..=b'f').contains(&b))
}

#[derive(Default)]
pub struct Registry {
    tasks: BTreeMap<&'static str, Box<dyn TaskGenerator>>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// The four bundled tasks.
    pub fn builtin() -> Self {
        let mut r = Registry::new();
        for gen in crate::tasks::all() {
            r.register(gen).expect("bundled task ids are unique");
        }
        r
    }

    pub fn register(&mut self, gen: Box<dyn TaskGenerator>) -> Result<()> {
        let id = gen.task_id();
        if !is_task_id(id) {
            return Err(Error::invalid(format!("`{id}` is not an 8-hex-digit task id")));
        }
        if self.tasks.contains_key(id) {
            return Err(Error::Conflict(id.to_string()));
        }
        self.tasks.insert(id, gen);
        Ok(())
    }

    pub fn lookup(&self, task_id: &str) -> Result<&dyn TaskGenerator> {
        self.tasks
            .get(task_id)
            .map(|g| g.as_ref())
            .ok_or_else(|| Error::NotFound(task_id.to_string()))
    }

    /// Registered ids in sorted order.
    pub fn ids(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.tasks.keys().copied()
    }

    pub fn generate_task_set(
        &self,
        task_id: &str,
        train_count: usize,
        test_count: usize,
        master_seed: u64,
    ) -> Result<TaskSet> {
        let gen = self.lookup(task_id)?;
        draw_task_set(gen, &GenParams::new(), train_count, test_count, master_seed, true)
    }

    /// `count` train examples and one test example drawn with `v.overrides` held fixed.
    pub fn apply_variation(
        &self,
        task_id: &str,
        v: &VariationSpec,
        count: usize,
        master_seed: u64,
    ) -> Result<Variation> {
        let gen = self.lookup(task_id)?;
        check_declared(gen, &v.overrides)?;
        let within_domain = gen.within_verifier_domain(&v.overrides).map_err(|e| e.in_task(task_id))?;
        let tasks = draw_task_set(gen, &v.overrides, count, 1, master_seed, within_domain)?;
        Ok(Variation { tasks, within_domain })
    }
}

/// The process-wide registry of bundled tasks.
pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::builtin)
}

pub fn lookup(task_id: &str) -> Result<&'static dyn TaskGenerator> {
    registry().lookup(task_id)
}

pub fn generate_task_set(
    task_id: &str,
    train_count: usize,
    test_count: usize,
    master_seed: u64,
) -> Result<TaskSet> {
    registry().generate_task_set(task_id, train_count, test_count, master_seed)
}

pub fn apply_variation(task_id: &str, v: &VariationSpec, count: usize, master_seed: u64) -> Result<Variation> {
    registry().apply_variation(task_id, v, count, master_seed)
}

pub(crate) fn check_declared(gen: &dyn TaskGenerator, params: &GenParams) -> Result<()> {
    for name in params.names() {
        if !gen.params().iter().any(|p| p.name == name) {
            return Err(Error::invalid(format!(
                "task {} has no parameter `{name}`",
                gen.task_id()
            )));
        }
    }
    Ok(())
}

fn draw_task_set(
    gen: &dyn TaskGenerator,
    params: &GenParams,
    train_count: usize,
    test_count: usize,
    master_seed: u64,
    verify: bool,
) -> Result<TaskSet> {
    let id = gen.task_id();
    if train_count == 0 || test_count == 0 {
        return Err(Error::invalid(format!("task {id}: train and test counts must be positive")));
    }
    let mut examples = (0..train_count + test_count)
        .map(|index| {
            let mut rng = RngStream::new(master_seed, id, index as u64)?;
            let ex = gen.generate(params, &mut rng).map_err(|e| e.in_task(id))?;
            if verify && gen.verify(&ex.input).ok().as_ref() != Some(&ex.output) {
                return Err(Error::VerifierMismatch { task: id.to_string(), index });
            }
            Ok(ex)
        })
        .collect::<Result<Vec<_>>>()?;
    let test = examples.split_off(train_count);
    TaskSet::new(examples, test)
}

/// Run `attempt` until it yields a value, at most [`RETRY_BUDGET`] times.
pub(crate) fn retry<T>(task: &str, mut attempt: impl FnMut() -> Result<Option<T>>) -> Result<T> {
    for _ in 0..RETRY_BUDGET {
        if let Some(v) = attempt()? {
            return Ok(v);
        }
    }
    Err(Error::GenerationFailure { task: task.to_string(), attempts: RETRY_BUDGET })
}

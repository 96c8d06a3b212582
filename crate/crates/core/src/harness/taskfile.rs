//! ARC task files: compact JSON with `train` and `test` lists of
//! `{"input": rows, "output": rows}` objects.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Example, Grid, TaskSet};

#[derive(Serialize)]
struct ExampleOut {
    input: Vec<Vec<u8>>,
    output: Vec<Vec<u8>>,
}

#[derive(Serialize)]
struct TaskOut {
    train: Vec<ExampleOut>,
    test: Vec<ExampleOut>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExampleIn {
    input: Vec<Vec<i64>>,
    output: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TaskIn {
    train: Vec<ExampleIn>,
    test: Vec<ExampleIn>,
}

fn to_out(examples: &[Example]) -> Vec<ExampleOut> {
    examples
        .iter()
        .map(|e| ExampleOut { input: e.input.to_rows(), output: e.output.to_rows() })
        .collect()
}

/// Serialize a task set to its exact on-disk text (no trailing newline).
pub fn to_json(ts: &TaskSet) -> String {
    let doc = TaskOut { train: to_out(ts.train()), test: to_out(ts.test()) };
    serde_json::to_string(&doc).expect("task sets always serialize")
}

/// Parse task-file text. `origin` names the source in error messages.
pub fn from_json(text: &str, origin: &str) -> Result<TaskSet> {
    let format = |message: String| Error::Format { path: origin.to_string(), message };
    let doc: TaskIn = serde_json::from_str(text)
        .map_err(|e| format(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let convert = |split: &str, examples: Vec<ExampleIn>| -> Result<Vec<Example>> {
        examples
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                let grid = |side: &str, rows: Vec<Vec<i64>>| {
                    Grid::from_rows(&rows).map_err(|err| format(format!("{split}[{i}].{side}: {err}")))
                };
                Ok(Example { input: grid("input", e.input)?, output: grid("output", e.output)? })
            })
            .collect()
    };
    let train = convert("train", doc.train)?;
    let test = convert("test", doc.test)?;
    TaskSet::new(train, test).map_err(|e| format(e.to_string()))
}

pub fn save_task_file(path: &Path, ts: &TaskSet) -> Result<()> {
    fs::write(path, to_json(ts)).map_err(|e| Error::io(path, e))
}

pub fn load_task_file(path: &Path) -> Result<TaskSet> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    from_json(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(v: u8) -> Grid {
        Grid::from_rows(&[[v]]).unwrap()
    }

    #[test]
    fn minimal_file_is_bit_exact() {
        let ts = TaskSet::new(
            vec![Example { input: g(1), output: g(2) }],
            vec![Example { input: g(0), output: g(0) }],
        )
        .unwrap();
        let text = to_json(&ts);
        assert_eq!(
            text,
            r#"{"train":[{"input":[[1]],"output":[[2]]}],"test":[{"input":[[0]],"output":[[0]]}]}"#
        );
        assert_eq!(from_json(&text, "mem").unwrap(), ts);
    }

    #[test]
    fn rejects_bad_files() {
        let bad_cell = r#"{"train":[{"input":[[10]],"output":[[2]]}],"test":[{"input":[[0]],"output":[[0]]}]}"#;
        let err = from_json(bad_cell, "t.json").unwrap_err();
        assert!(matches!(err, Error::Format { .. }));
        assert!(err.to_string().contains("train[0].input"), "{err}");

        let extra = r#"{"train":[],"test":[],"name":"x"}"#;
        assert!(matches!(from_json(extra, "t.json"), Err(Error::Format { .. })));

        let empty = r#"{"train":[],"test":[{"input":[[0]],"output":[[0]]}]}"#;
        assert!(matches!(from_json(empty, "t.json"), Err(Error::Format { .. })));

        let ragged = r#"{"train":[{"input":[[1,2],[3]],"output":[[2]]}],"test":[{"input":[[0]],"output":[[0]]}]}"#;
        assert!(matches!(from_json(ragged, "t.json"), Err(Error::Format { .. })));

        let broken = "{\"train\":\n[";
        let err = from_json(broken, "t.json").unwrap_err();
        assert!(err.to_string().starts_with("t.json: line 2"), "{err}");
    }

    #[test]
    fn official_file_round_trips_byte_for_byte() {
        let text = include_str!("../../data/543a7ed5.json");
        let ts = from_json(text, "543a7ed5.json").unwrap();
        assert_eq!(to_json(&ts), text);
    }

    fn arb_example() -> impl Strategy<Value = Example> {
        let grid = (1usize..=8, 1usize..=8).prop_flat_map(|(h, w)| {
            proptest::collection::vec(proptest::collection::vec(0u8..=9, w), h)
                .prop_map(|rows| Grid::from_rows(&rows).unwrap())
        });
        (grid.clone(), grid).prop_map(|(input, output)| Example { input, output })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn save_load_round_trip(
            train in proptest::collection::vec(arb_example(), 1..5),
            test in proptest::collection::vec(arb_example(), 1..3),
        ) {
            let ts = TaskSet::new(train, test).unwrap();
            let dir = tempfile::tempdir().unwrap();
            let path = dir.path().join("t.json");
            save_task_file(&path, &ts).unwrap();
            prop_assert_eq!(load_task_file(&path).unwrap(), ts);
        }
    }
}

//! Task 1e0a9b12: every colored cell falls to the bottom of its column,
//! keeping its order relative to the others in that column.

use crate::error::{Error, Result};
use crate::framework::{check_declared, retry, GenParams, ParamSpec, TaskGenerator};
use crate::grid::{Color, Example, Grid};
use crate::rng::RngStream;

pub const TASK_ID: &str = "1e0a9b12";

const MIN_SIZE: i64 = 3;
const MAX_SIZE: i64 = 10;
const MAX_PER_COLUMN: i64 = 3;

static PARAMS: [ParamSpec; 2] = [
    ParamSpec { name: "size", default: "random in 4..=6" },
    ParamSpec { name: "cells", default: "random" },
];

pub fn verify(g: &Grid) -> Result<Grid> {
    let mut out = g.clone();
    let h = g.height();
    for c in 0..g.width() {
        let mut dest = h;
        for r in (0..h).rev() {
            let v = g.get(r, c);
            out.set(r, c, Color::BLACK);
            if !v.is_zero() {
                dest -= 1;
                out.set(dest, c, v);
            }
        }
    }
    Ok(out)
}

/// True if every column's colored cells already sit at its bottom.
pub fn is_packed(g: &Grid) -> bool {
    (0..g.width()).all(|c| {
        let mut seen_color = false;
        (0..g.height()).all(|r| {
            let zero = g.get(r, c).is_zero();
            seen_color |= !zero;
            !(seen_color && zero)
        })
    })
}

fn check_input(g: &Grid) -> Result<()> {
    if g.cells().all(|(_, _, v)| v.is_zero()) {
        return Err(Error::invalid("input has no colored cells"));
    }
    if is_packed(g) {
        return Err(Error::invalid("input is already packed"));
    }
    Ok(())
}

fn random_input(size: usize, rng: &mut RngStream) -> Result<Grid> {
    retry(TASK_ID, || {
        let mut g = Grid::new(size, size, Color::BLACK)?;
        let mut rows: Vec<usize> = (0..size).collect();
        for c in 0..size {
            let k = rng.randint(0, MAX_PER_COLUMN.min(size as i64 - 1))? as usize;
            rng.shuffle(&mut rows);
            for &r in &rows[..k] {
                g.set(r, c, Color::new(rng.randint(1, 9)?)?);
            }
        }
        Ok(check_input(&g).is_ok().then_some(g))
    })
}

pub fn generate(p: &GenParams, rng: &mut RngStream) -> Result<Example> {
    check_declared(&ColumnGravity, p)?;
    let size = p.int("size")?;
    if let Some(n) = size {
        if !(MIN_SIZE..=MAX_SIZE).contains(&n) {
            return Err(Error::invalid(format!("size {n} outside {MIN_SIZE}..={MAX_SIZE}")));
        }
    }
    let input = match p.list("cells")? {
        Some(cells) => {
            let n = match size {
                Some(n) => n as usize,
                None => (cells.len() as f64).sqrt().round() as usize,
            };
            if n == 0 || cells.len() != n * n {
                return Err(Error::invalid(format!("{} cells do not fill a square grid", cells.len())));
            }
            let rows: Vec<&[i64]> = cells.chunks(n).collect();
            let g = Grid::from_rows(&rows)?;
            check_input(&g)?;
            g
        }
        None => {
            let n = match size {
                Some(n) => n,
                None => rng.randint(4, 6)?,
            };
            random_input(n as usize, rng)?
        }
    };
    let output = verify(&input)?;
    Ok(Example { input, output })
}

pub struct ColumnGravity;

impl TaskGenerator for ColumnGravity {
    fn task_id(&self) -> &'static str {
        TASK_ID
    }

    fn params(&self) -> &'static [ParamSpec] {
        &PARAMS
    }

    fn generate(&self, params: &GenParams, rng: &mut RngStream) -> Result<Example> {
        generate(params, rng)
    }

    fn verify(&self, input: &Grid) -> Result<Grid> {
        verify(input)
    }
}

//! Task 67a423a3: one full row and one full column cross; the eight cells
//! around the crossing turn yellow.

use crate::error::{Error, Result};
use crate::framework::{check_declared, GenParams, ParamSpec, TaskGenerator};
use crate::grid::{Color, Example, Grid};
use crate::rng::RngStream;

pub const TASK_ID: &str = "67a423a3";

const MIN_SIZE: i64 = 3;
const DEFAULT_SIZES: (i64, i64) = (6, 12);
const LINE_COLORS: [u8; 8] = [1, 2, 3, 5, 6, 7, 8, 9];

static PARAMS: [ParamSpec; 6] = [
    ParamSpec { name: "size", default: "random in 6..=12" },
    ParamSpec { name: "row", default: "random interior row" },
    ParamSpec { name: "col", default: "random interior column" },
    ParamSpec { name: "row_color", default: "random, not black or yellow" },
    ParamSpec { name: "col_color", default: "random, distinct from row_color" },
    ParamSpec { name: "row_on_top", default: "random" },
];

/// The last interior cell, in row-major scan order, whose four orthogonal
/// neighbors are all colored.
pub fn find_crossing(g: &Grid) -> Option<(usize, usize)> {
    let (h, w) = (g.height(), g.width());
    let mut found = None;
    for r in 1..h.saturating_sub(1) {
        for c in 1..w.saturating_sub(1) {
            let neighbors = [g.get(r, c - 1), g.get(r, c + 1), g.get(r - 1, c), g.get(r + 1, c)];
            if neighbors.iter().all(|v| !v.is_zero()) {
                found = Some((r, c));
            }
        }
    }
    found
}

pub fn verify(g: &Grid) -> Result<Grid> {
    let (x, y) = find_crossing(g).ok_or_else(|| Error::domain("no cell has four colored neighbors"))?;
    let mut out = g.clone();
    for i in 0..9 {
        if i != 4 {
            out.set(x + i / 3 - 1, y + i % 3 - 1, Color::YELLOW);
        }
    }
    Ok(out)
}

fn line_color(p: &GenParams, name: &str) -> Result<Option<Color>> {
    let c = p.color(name)?;
    if let Some(c) = c {
        if !LINE_COLORS.contains(&c.value()) {
            return Err(Error::invalid(format!("{name} {c} must be neither black nor yellow")));
        }
    }
    Ok(c)
}

fn pick_color(rng: &mut RngStream, except: Option<Color>) -> Result<Color> {
    let choices: Vec<u8> = LINE_COLORS
        .iter()
        .copied()
        .filter(|&v| Some(v) != except.map(Color::value))
        .collect();
    Color::new(i64::from(choices[rng.index(choices.len())]))
}

pub fn generate(p: &GenParams, rng: &mut RngStream) -> Result<Example> {
    check_declared(&CrossingRing, p)?;
    let size = match p.int("size")? {
        Some(n) if (MIN_SIZE..=crate::grid::MAX_SIDE as i64).contains(&n) => n,
        Some(n) => return Err(Error::invalid(format!("size {n} outside {MIN_SIZE}..=30"))),
        None => rng.randint(DEFAULT_SIZES.0, DEFAULT_SIZES.1)?,
    };
    let mut interior = |name: &str| -> Result<i64> {
        match p.int(name)? {
            Some(v) if (1..=size - 2).contains(&v) => Ok(v),
            Some(v) => Err(Error::invalid(format!("{name} {v} is not an interior line of a {size}x{size} grid"))),
            None => rng.randint(1, size - 2),
        }
    };
    let row = interior("row")? as usize;
    let col = interior("col")? as usize;
    let row_color = match line_color(p, "row_color")? {
        Some(c) => c,
        None => pick_color(rng, None)?,
    };
    let col_color = match line_color(p, "col_color")? {
        Some(c) => c,
        None => pick_color(rng, Some(row_color))?,
    };
    if row_color == col_color {
        return Err(Error::invalid("row and column colors must differ"));
    }
    let row_on_top = match p.flag("row_on_top")? {
        Some(b) => b,
        None => rng.coin(),
    };

    let n = size as usize;
    let mut input = Grid::new(n, n, Color::BLACK)?;
    let paint_row = |g: &mut Grid| (0..n).for_each(|c| g.set(row, c, row_color));
    let paint_col = |g: &mut Grid| (0..n).for_each(|r| g.set(r, col, col_color));
    if row_on_top {
        paint_col(&mut input);
        paint_row(&mut input);
    } else {
        paint_row(&mut input);
        paint_col(&mut input);
    }
    let output = verify(&input)?;
    Ok(Example { input, output })
}

pub struct CrossingRing;

impl TaskGenerator for CrossingRing {
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

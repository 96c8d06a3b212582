//! Task 05269061: a few anti-diagonals in a corner seed a three-color stripe
//! pattern that the output extends over the whole grid.

use crate::error::{Error, Result};
use crate::framework::{check_declared, GenParams, ParamSpec, TaskGenerator};
use crate::grid::{Color, Example, Grid};
use crate::rng::RngStream;

pub const TASK_ID: &str = "05269061";

const MIN_SIZE: i64 = 3;
const DEFAULT_SIZES: (i64, i64) = (5, 9);
const MIN_BAND: i64 = 3;
const MAX_BAND: i64 = 9;

static PARAMS: [ParamSpec; 4] = [
    ParamSpec { name: "size", default: "random in 5..=9" },
    ParamSpec { name: "colors", default: "three random distinct non-black colors" },
    ParamSpec { name: "band", default: "random in 3..=9 anti-diagonals" },
    ParamSpec { name: "from_bottom", default: "random corner" },
];

/// Three forward scans, each carrying the last color seen on every
/// anti-diagonal residue class and writing it into the cell.
pub fn verify(g: &Grid) -> Result<Grid> {
    let mut out = g.clone();
    let mut carried = [Color::BLACK; 3];
    for _ in 0..3 {
        for r in 0..out.height() {
            for c in 0..out.width() {
                let k = (r + c) % 3;
                let v = out.get(r, c);
                if !v.is_zero() {
                    carried[k] = v;
                }
                out.set(r, c, carried[k]);
            }
        }
    }
    Ok(out)
}

fn colors(p: &GenParams, rng: &mut RngStream) -> Result<[Color; 3]> {
    match p.list("colors")? {
        Some(list) => {
            let [a, b, c]: [i64; 3] = list
                .try_into()
                .map_err(|l: Vec<i64>| Error::invalid(format!("colors needs 3 entries, got {}", l.len())))?;
            let cs = [Color::new(a)?, Color::new(b)?, Color::new(c)?];
            if cs.iter().any(|c| c.is_zero()) || a == b || b == c || a == c {
                return Err(Error::invalid("colors must be three distinct non-black colors"));
            }
            Ok(cs)
        }
        None => {
            let mut pool: Vec<i64> = (1..=9).collect();
            rng.shuffle(&mut pool);
            Ok([Color::new(pool[0])?, Color::new(pool[1])?, Color::new(pool[2])?])
        }
    }
}

pub fn generate(p: &GenParams, rng: &mut RngStream) -> Result<Example> {
    check_declared(&DiagonalStripes, p)?;
    let size = match p.int("size")? {
        Some(n) if (MIN_SIZE..=crate::grid::MAX_SIDE as i64).contains(&n) => n,
        Some(n) => return Err(Error::invalid(format!("size {n} outside {MIN_SIZE}..=30"))),
        None => rng.randint(DEFAULT_SIZES.0, DEFAULT_SIZES.1)?,
    };
    let stripes = colors(p, rng)?;
    let diagonals = 2 * size - 1;
    let band = match p.int("band")? {
        Some(b) if (1..=diagonals).contains(&b) => b,
        Some(b) => return Err(Error::invalid(format!("band {b} outside 1..={diagonals}"))),
        None => rng.randint(MIN_BAND, MAX_BAND.min(diagonals - 1))?,
    };
    let from_bottom = match p.flag("from_bottom")? {
        Some(b) => b,
        None => rng.coin(),
    };

    let n = size as usize;
    let mut input = Grid::new(n, n, Color::BLACK)?;
    let mut output = input.clone();
    for r in 0..n {
        for c in 0..n {
            let v = stripes[(r + c) % 3];
            output.set(r, c, v);
            let d = (r + c) as i64;
            let seeded = if from_bottom { d >= diagonals - band } else { d < band };
            if seeded {
                input.set(r, c, v);
            }
        }
    }
    Ok(Example { input, output })
}

pub struct DiagonalStripes;

impl TaskGenerator for DiagonalStripes {
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

    /// Fewer than three seeded anti-diagonals leave a residue class unseeded.
    fn within_verifier_domain(&self, overrides: &GenParams) -> Result<bool> {
        Ok(overrides.int("band")?.is_none_or(|b| b >= MIN_BAND))
    }
}

//! Grids, the ten-color palette, and the example/task containers.

use std::fmt;

use crate::error::{Error, Result};

/// Largest allowed side length, matching the ARC task file format.
pub const MAX_SIDE: usize = 30;

/// A palette entry, an integer code in `0..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(u8);

impl Color {
    pub const BLACK: Color = Color(0);
    pub const BLUE: Color = Color(1);
    pub const RED: Color = Color(2);
    pub const GREEN: Color = Color(3);
    pub const YELLOW: Color = Color(4);
    pub const GREY: Color = Color(5);
    pub const PINK: Color = Color(6);
    pub const ORANGE: Color = Color(7);
    pub const CYAN: Color = Color(8);
    pub const MAROON: Color = Color(9);

    pub fn new(value: i64) -> Result<Self> {
        if (0..=9).contains(&value) {
            Ok(Color(value as u8))
        } else {
            Err(Error::InvalidColor(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Canonical palette names, indexed by code.
pub const PALETTE_NAMES: [&str; 10] = [
    "black", "blue", "red", "green", "yellow", "grey", "pink", "orange", "cyan", "maroon",
];

/// Look up a palette entry by its canonical name.
pub fn named_color(name: &str) -> Result<Color> {
    PALETTE_NAMES
        .iter()
        .position(|n| *n == name)
        .map(|i| Color(i as u8))
        .ok_or_else(|| Error::UnknownColor(name.to_string()))
}

/// A rectangular, row-major matrix of colors with both sides in `1..=30`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    height: usize,
    width: usize,
    cells: Vec<Color>,
}

fn check_dims(height: usize, width: usize) -> Result<()> {
    if (1..=MAX_SIDE).contains(&height) && (1..=MAX_SIDE).contains(&width) {
        Ok(())
    } else {
        Err(Error::InvalidDimension { height, width })
    }
}

impl Grid {
    pub fn new(height: usize, width: usize, fill: Color) -> Result<Self> {
        check_dims(height, width)?;
        Ok(Grid { height, width, cells: vec![fill; height * width] })
    }

    /// Build a grid from rows of raw codes. Rows must be non-empty and equally long.
    pub fn from_rows<R, T>(rows: &[R]) -> Result<Self>
    where
        R: AsRef<[T]>,
        T: Copy + Into<i64>,
    {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        check_dims(height, width)?;
        let mut cells = Vec::with_capacity(height * width);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != width {
                return Err(Error::invalid(format!(
                    "row {r} has {} cells, expected {width}",
                    row.len()
                )));
            }
            for &v in row {
                cells.push(Color::new(v.into())?);
            }
        }
        Ok(Grid { height, width, cells })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, row: usize, col: usize) -> Color {
        assert!(row < self.height && col < self.width, "cell ({row},{col}) out of bounds");
        self.cells[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, color: Color) {
        assert!(row < self.height && col < self.width, "cell ({row},{col}) out of bounds");
        self.cells[row * self.width + col] = color;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Color]> {
        self.cells.chunks(self.width)
    }

    /// Every cell with its coordinates, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        let w = self.width;
        self.cells.iter().enumerate().map(move |(i, &c)| (i / w, i % w, c))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows().map(|r| r.iter().map(|c| c.value()).collect()).collect()
    }

    pub fn count(&self, color: Color) -> usize {
        self.cells.iter().filter(|&&c| c == color).count()
    }

    /// Number of cells in which two same-shaped grids differ; `None` if shapes differ.
    pub fn hamming(&self, other: &Grid) -> Option<usize> {
        if self.height != other.height || self.width != other.width {
            return None;
        }
        Some(self.cells.iter().zip(&other.cells).filter(|(a, b)| a != b).count())
    }
}

/// Two independent grids of identical shape and fill.
pub fn grids(height: usize, width: usize, fill: Color) -> Result<(Grid, Grid)> {
    let g = Grid::new(height, width, fill)?;
    Ok((g.clone(), g))
}

/// One line per row, digits concatenated, each line newline-terminated.
pub fn render_text(g: &Grid) -> String {
    let mut out = String::with_capacity(g.height * (g.width + 1));
    for row in g.rows() {
        for c in row {
            out.push(char::from(b'0' + c.value()));
        }
        out.push('\n');
    }
    out
}

/// Inverse of [`render_text`].
pub fn parse_text(text: &str) -> Result<Grid> {
    let rows = text
        .lines()
        .enumerate()
        .map(|(r, line)| {
            line.chars()
                .map(|ch| {
                    ch.to_digit(10).map(i64::from).ok_or_else(|| {
                        Error::invalid(format!("line {}: `{ch}` is not a color digit", r + 1))
                    })
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Grid::from_rows(&rows)
}

/// An input/output pair. The two grids may differ in shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Example {
    pub input: Grid,
    pub output: Grid,
}

/// Ordered train and test examples for one task.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskSet {
    train: Vec<Example>,
    test: Vec<Example>,
}

impl TaskSet {
    pub fn new(train: Vec<Example>, test: Vec<Example>) -> Result<Self> {
        if train.is_empty() || test.is_empty() {
            return Err(Error::invalid("a task set needs at least one train and one test example"));
        }
        Ok(TaskSet { train, test })
    }

    pub fn train(&self) -> &[Example] {
        &self.train
    }

    pub fn test(&self) -> &[Example] {
        &self.test
    }

    /// Train examples followed by test examples.
    pub fn examples(&self) -> impl Iterator<Item = &Example> {
        self.train.iter().chain(&self.test)
    }

    pub fn len(&self) -> usize {
        self.train.len() + self.test.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

//! Rectangle placement constraints shared by the generators.

use crate::error::{Error, Result};

/// An axis-aligned box in cell units: top-left corner plus extents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub row: i64,
    pub col: i64,
    pub width: i64,
    pub height: i64,
}

impl Rect {
    pub fn new(row: i64, col: i64, width: i64, height: i64) -> Self {
        Rect { row, col, width, height }
    }

    pub fn bottom(&self) -> i64 {
        self.row + self.height
    }

    pub fn right(&self) -> i64 {
        self.col + self.width
    }

    pub fn area(&self) -> i64 {
        self.width * self.height
    }

    /// True if `inner` fits inside `self` leaving at least `margin` cells on every side.
    pub fn contains_with_margin(&self, inner: &Rect, margin: i64) -> bool {
        inner.row >= self.row + margin
            && inner.col >= self.col + margin
            && inner.bottom() <= self.bottom() - margin
            && inner.right() <= self.right() - margin
    }

    /// Number of empty cells between the two boxes along each axis, zero when
    /// their projections touch or intersect.
    pub fn gaps(&self, other: &Rect) -> (i64, i64) {
        let row_gap = (other.row - self.bottom()).max(self.row - other.bottom()).max(0);
        let col_gap = (other.col - self.right()).max(self.col - other.right()).max(0);
        (row_gap, col_gap)
    }

    pub fn conflicts(&self, other: &Rect, spacing: i64) -> bool {
        let (row_gap, col_gap) = self.gaps(other);
        row_gap < spacing && col_gap < spacing
    }
}

/// Zip parallel coordinate lists into boxes.
pub fn rects(rows: &[i64], cols: &[i64], widths: &[i64], heights: &[i64]) -> Result<Vec<Rect>> {
    let n = rows.len();
    if cols.len() != n || widths.len() != n || heights.len() != n {
        return Err(Error::invalid(format!(
            "box lists differ in length: rows {}, cols {}, widths {}, heights {}",
            n,
            cols.len(),
            widths.len(),
            heights.len()
        )));
    }
    if let Some(bad) = widths.iter().chain(heights).find(|&&v| v < 1) {
        return Err(Error::invalid(format!("box extent {bad} is not positive")));
    }
    Ok((0..n).map(|i| Rect::new(rows[i], cols[i], widths[i], heights[i])).collect())
}

/// True iff some pair of distinct boxes is closer than `spacing` cells on both axes.
pub fn overlaps(
    rows: &[i64],
    cols: &[i64],
    widths: &[i64],
    heights: &[i64],
    spacing: i64,
) -> Result<bool> {
    if spacing < 0 {
        return Err(Error::invalid(format!("spacing {spacing} is negative")));
    }
    Ok(any_conflict(&rects(rows, cols, widths, heights)?, spacing))
}

pub fn any_conflict(boxes: &[Rect], spacing: i64) -> bool {
    boxes
        .iter()
        .enumerate()
        .any(|(i, a)| boxes[i + 1..].iter().any(|b| a.conflicts(b, spacing)))
}

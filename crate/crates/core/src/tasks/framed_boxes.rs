//! Task 543a7ed5: pink rectangles, some hollowed out, on a cyan background.
//! The output rings each rectangle in green and fills its hole with yellow.

use crate::error::{Error, Result};
use crate::framework::{check_declared, retry, GenParams, ParamSpec, TaskGenerator};
use crate::geometry::{any_conflict, overlaps, rects, Rect};
use crate::grid::{grids, Color, Example, Grid, TaskSet};
use crate::rng::RngStream;

pub const TASK_ID: &str = "543a7ed5";

const DEFAULT_BOXES: i64 = 3;
const DEFAULT_SIZE: i64 = 15;
const MIN_EXTENT: i64 = 2;
const MAX_EXTENT: i64 = 7;
const SPACING: i64 = 2;

static PARAMS: [ParamSpec; 11] = [
    ParamSpec { name: "rows", default: "random" },
    ParamSpec { name: "cols", default: "random" },
    ParamSpec { name: "widths", default: "random" },
    ParamSpec { name: "heights", default: "random" },
    ParamSpec { name: "colors", default: "random" },
    ParamSpec { name: "boxes", default: "3" },
    ParamSpec { name: "size", default: "15" },
    ParamSpec { name: "background", default: "cyan" },
    ParamSpec { name: "box_color", default: "pink" },
    ParamSpec { name: "border_color", default: "green" },
    ParamSpec { name: "hole_color", default: "yellow" },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Palette {
    background: Color,
    fill: Color,
    border: Color,
    hole: Color,
}

impl Palette {
    const DEFAULT: Palette = Palette {
        background: Color::CYAN,
        fill: Color::PINK,
        border: Color::GREEN,
        hole: Color::YELLOW,
    };

    fn from_params(p: &GenParams) -> Result<Self> {
        let d = Palette::DEFAULT;
        let palette = Palette {
            background: p.color("background")?.unwrap_or(d.background),
            fill: p.color("box_color")?.unwrap_or(d.fill),
            border: p.color("border_color")?.unwrap_or(d.border),
            hole: p.color("hole_color")?.unwrap_or(d.hole),
        };
        if palette.fill == palette.background || palette.fill == palette.hole {
            return Err(Error::invalid("box color must differ from the background and hole colors"));
        }
        Ok(palette)
    }
}

/// Box placements in draw order. Boxes with the fill color are the rectangles;
/// the rest are holes cut into them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxLayout {
    pub rows: Vec<i64>,
    pub cols: Vec<i64>,
    pub widths: Vec<i64>,
    pub heights: Vec<i64>,
    pub colors: Vec<Color>,
    pub size: i64,
}

impl BoxLayout {
    fn rects(&self) -> Vec<Rect> {
        rects(&self.rows, &self.cols, &self.widths, &self.heights).expect("layout lists are consistent")
    }

    /// Check a caller-supplied layout against the placement invariants.
    fn check(&self, palette: &Palette, boxes: Option<i64>) -> Result<()> {
        let all = rects(&self.rows, &self.cols, &self.widths, &self.heights)?;
        if self.colors.len() != all.len() {
            return Err(Error::invalid("colors list length differs from the box lists"));
        }
        let mut filled = Vec::new();
        let mut holes = Vec::new();
        for (rect, &color) in all.iter().zip(&self.colors) {
            if color == palette.fill {
                filled.push(*rect);
            } else if color == palette.hole {
                holes.push(*rect);
            } else {
                return Err(Error::invalid(format!("box color {color} is neither the box nor the hole color")));
            }
        }
        if filled.is_empty() {
            return Err(Error::invalid("layout has no rectangles"));
        }
        if let Some(n) = boxes {
            if n != filled.len() as i64 {
                return Err(Error::invalid(format!("boxes={n} but the layout has {} rectangles", filled.len())));
            }
        }
        let limit = self.size - 1;
        if let Some(r) = filled.iter().find(|r| r.row < 1 || r.col < 1 || r.bottom() > limit || r.right() > limit) {
            return Err(Error::invalid(format!("rectangle {r:?} leaves no room for its border")));
        }
        if any_conflict(&filled, SPACING) {
            return Err(Error::invalid("rectangles are too close together"));
        }
        for h in &holes {
            if !filled.iter().any(|f| f.contains_with_margin(h, 1)) {
                return Err(Error::invalid(format!("hole {h:?} is not strictly inside a rectangle")));
            }
        }
        let hole_area: i64 = holes.iter().map(Rect::area).sum();
        if hole_area < 2 * filled.len() as i64 {
            return Err(Error::invalid(format!(
                "total hole area {hole_area} is below twice the rectangle count"
            )));
        }
        Ok(())
    }
}

fn check_size(size: i64, randomized: bool) -> Result<()> {
    // A random rectangle can be 7 cells long and needs a cell of border on both sides.
    let min = if randomized { MAX_EXTENT + 2 } else { 3 };
    if (min..=crate::grid::MAX_SIDE as i64).contains(&size) {
        Ok(())
    } else {
        Err(Error::invalid(format!("size {size} outside {min}..=30")))
    }
}

/// Draw a layout: non-overlapping rectangles first, then one optional hole per rectangle.
fn random_layout(size: i64, boxes: usize, palette: &Palette, rng: &mut RngStream) -> Result<BoxLayout> {
    retry(TASK_ID, || {
        let widths = rng.randints(MIN_EXTENT, MAX_EXTENT, boxes)?;
        let heights = rng.randints(MIN_EXTENT, MAX_EXTENT, boxes)?;
        let rows = heights.iter().map(|h| rng.randint(1, size - h - 1)).collect::<Result<Vec<_>>>()?;
        let cols = widths.iter().map(|w| rng.randint(1, size - w - 1)).collect::<Result<Vec<_>>>()?;
        if overlaps(&rows, &cols, &widths, &heights, SPACING)? {
            return Ok(None);
        }
        let mut colors = vec![palette.fill; boxes];
        let (mut hrows, mut hcols, mut hwidths, mut hheights) = (vec![], vec![], vec![], vec![]);
        for i in 0..boxes {
            let (row, col, width, height) = (rows[i], cols[i], widths[i], heights[i]);
            let w = rng.randint(0, width - 2)?;
            let t = rng.randint(0, height - 2)?;
            if w == 0 || t == 0 {
                continue;
            }
            hrows.push(row + rng.randint(1, height - t - 1)?);
            hcols.push(col + rng.randint(1, width - w - 1)?);
            hwidths.push(w);
            hheights.push(t);
        }
        let hole_area: i64 = hwidths.iter().zip(&hheights).map(|(w, t)| w * t).sum();
        if hole_area < 2 * boxes as i64 {
            return Ok(None);
        }
        colors.extend(std::iter::repeat_n(palette.hole, hrows.len()));
        Ok(Some(BoxLayout {
            rows: [rows, hrows].concat(),
            cols: [cols, hcols].concat(),
            widths: [widths, hwidths].concat(),
            heights: [heights, hheights].concat(),
            colors,
            size,
        }))
    })
}

fn paint(layout: &BoxLayout, palette: &Palette) -> Result<Example> {
    let size = layout.size as usize;
    let (mut input, mut output) = grids(size, size, palette.background)?;
    for (rect, &color) in layout.rects().iter().zip(&layout.colors) {
        for r in rect.row - 1..rect.bottom() + 1 {
            for c in rect.col - 1..rect.right() + 1 {
                let (ru, cu) = (r as usize, c as usize);
                if color == palette.fill {
                    output.set(ru, cu, palette.border);
                }
                if r < rect.row || r >= rect.bottom() || c < rect.col || c >= rect.right() {
                    continue;
                }
                input.set(ru, cu, if color == palette.fill { color } else { palette.background });
                output.set(ru, cu, color);
            }
        }
    }
    Ok(Example { input, output })
}

fn supplied_layout(p: &GenParams, size: i64) -> Result<Option<BoxLayout>> {
    let lists = [p.list("rows")?, p.list("cols")?, p.list("widths")?, p.list("heights")?, p.list("colors")?];
    match lists {
        [None, None, None, None, None] => Ok(None),
        [Some(rows), Some(cols), Some(widths), Some(heights), Some(colors)] => {
            let colors = colors.into_iter().map(Color::new).collect::<Result<Vec<_>>>()?;
            Ok(Some(BoxLayout { rows, cols, widths, heights, colors, size }))
        }
        _ => Err(Error::invalid("rows, cols, widths, heights and colors must be given together")),
    }
}

/// Draw one example; any of the layout lists left unset are randomized together.
pub fn generate(p: &GenParams, rng: &mut RngStream) -> Result<Example> {
    check_declared(&FramedBoxes, p)?;
    let palette = Palette::from_params(p)?;
    let size = p.int("size")?.unwrap_or(DEFAULT_SIZE);
    let boxes = p.int("boxes")?;
    let layout = match supplied_layout(p, size)? {
        Some(layout) => {
            check_size(size, false)?;
            layout.check(&palette, boxes)?;
            layout
        }
        None => {
            check_size(size, true)?;
            let boxes = boxes.unwrap_or(DEFAULT_BOXES);
            if boxes < 1 {
                return Err(Error::invalid(format!("boxes={boxes} must be positive")));
            }
            random_layout(size, boxes as usize, &palette, rng)?
        }
    };
    paint(&layout, &palette)
}

fn fixture(rows: &[i64], cols: &[i64], widths: &[i64], heights: &[i64], colors: &[i64]) -> GenParams {
    GenParams::new()
        .with("rows", rows.to_vec())
        .with("cols", cols.to_vec())
        .with("widths", widths.to_vec())
        .with("heights", heights.to_vec())
        .with("colors", colors.to_vec())
}

/// The layouts of the original task's two train pairs and one test pair.
pub fn validate() -> Result<TaskSet> {
    // Never drawn from: every parameter is supplied.
    let mut rng = RngStream::new(0, TASK_ID, 0)?;
    let train = [
        fixture(&[2, 4, 10, 3], &[8, 3, 5, 9], &[4, 2, 4, 2], &[5, 2, 4, 3], &[6, 6, 6, 4]),
        fixture(
            &[1, 3, 8, 4, 9],
            &[8, 2, 8, 3, 9],
            &[3, 4, 6, 1, 4],
            &[3, 4, 6, 2, 4],
            &[6, 6, 6, 4, 4],
        ),
    ];
    let test = [fixture(
        &[2, 3, 11, 4, 4, 12],
        &[9, 2, 4, 10, 3, 6],
        &[3, 4, 7, 1, 2, 2],
        &[6, 4, 3, 3, 2, 1],
        &[6, 6, 6, 4, 4, 4],
    )];
    let train = train.iter().map(|p| generate(p, &mut rng)).collect::<Result<Vec<_>>>()?;
    let test = test.iter().map(|p| generate(p, &mut rng)).collect::<Result<Vec<_>>>()?;
    TaskSet::new(train, test)
}

/// 4-connected components of `color`, each as a list of cells.
fn components(g: &Grid, color: Color) -> Vec<Vec<(usize, usize)>> {
    let (h, w) = (g.height(), g.width());
    let mut seen = vec![false; h * w];
    let mut out = Vec::new();
    for (r, c, v) in g.cells() {
        if v != color || seen[r * w + c] {
            continue;
        }
        seen[r * w + c] = true;
        let mut stack = vec![(r, c)];
        let mut comp = Vec::new();
        while let Some((r, c)) = stack.pop() {
            comp.push((r, c));
            let neighbors = [
                (r.wrapping_sub(1), c),
                (r + 1, c),
                (r, c.wrapping_sub(1)),
                (r, c + 1),
            ];
            for (nr, nc) in neighbors {
                if nr < h && nc < w && !seen[nr * w + nc] && g.get(nr, nc) == color {
                    seen[nr * w + nc] = true;
                    stack.push((nr, nc));
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Ring every pink rectangle in green and paint its enclosed cyan cells yellow.
pub fn verify(g: &Grid) -> Result<Grid> {
    let Palette { background, fill, border, hole } = Palette::DEFAULT;
    if let Some((r, c, v)) = g.cells().find(|&(_, _, v)| v != background && v != fill) {
        return Err(Error::domain(format!("cell ({r},{c}) has color {v}")));
    }
    let (h, w) = (g.height(), g.width());
    let mut owner = vec![usize::MAX; h * w];
    let comps = components(g, fill);
    for (id, comp) in comps.iter().enumerate() {
        for &(r, c) in comp {
            owner[r * w + c] = id;
        }
    }
    let mut out = g.clone();
    for (id, comp) in comps.iter().enumerate() {
        let top = comp.iter().map(|p| p.0).min().unwrap();
        let bottom = comp.iter().map(|p| p.0).max().unwrap();
        let left = comp.iter().map(|p| p.1).min().unwrap();
        let right = comp.iter().map(|p| p.1).max().unwrap();
        if top == 0 || left == 0 || bottom == h - 1 || right == w - 1 {
            return Err(Error::domain(format!("rectangle at ({top},{left}) touches the grid edge")));
        }
        for r in top..=bottom {
            for c in left..=right {
                let edge = r == top || r == bottom || c == left || c == right;
                let mine = owner[r * w + c] == id;
                if g.get(r, c) == fill && !mine {
                    return Err(Error::domain(format!("rectangle nested inside another at ({r},{c})")));
                }
                if edge && !mine {
                    return Err(Error::domain(format!("shape at ({top},{left}) is not a rectangle")));
                }
                if !edge && !mine {
                    out.set(r, c, hole);
                }
            }
        }
        for r in top - 1..=bottom + 1 {
            for c in left - 1..=right + 1 {
                if r >= top && r <= bottom && c >= left && c <= right {
                    continue;
                }
                if g.get(r, c) != background {
                    return Err(Error::domain(format!("rectangles at ({top},{left}) and ({r},{c}) touch")));
                }
                out.set(r, c, border);
            }
        }
    }
    Ok(out)
}

pub struct FramedBoxes;

impl TaskGenerator for FramedBoxes {
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

    fn validate(&self) -> Option<Result<TaskSet>> {
        Some(validate())
    }

    fn within_verifier_domain(&self, overrides: &GenParams) -> Result<bool> {
        Ok(Palette::from_params(overrides)? == Palette::DEFAULT)
    }
}

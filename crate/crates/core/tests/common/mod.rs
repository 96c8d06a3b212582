#![allow(dead_code)]

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use arcgen::{Color, Example, Grid, TaskSet};
use sha2::{Digest, Sha256};

pub const TASK_IDS: [&str; 4] = ["05269061", "1e0a9b12", "543a7ed5", "67a423a3"];

pub fn fixture_path(task_id: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(format!("{task_id}.json"))
}

pub fn official(task_id: &str) -> TaskSet {
    arcgen::load_task_file(&fixture_path(task_id)).unwrap()
}

/// Bounding boxes `(top, left, bottom, right)` of the 8-connected components of `color`.
pub fn bounding_boxes(g: &Grid, color: Color) -> Vec<(usize, usize, usize, usize)> {
    let (h, w) = (g.height(), g.width());
    let mut seen = vec![vec![false; w]; h];
    let mut boxes = Vec::new();
    for r0 in 0..h {
        for c0 in 0..w {
            if seen[r0][c0] || g.get(r0, c0) != color {
                continue;
            }
            let mut bb = (r0, c0, r0, c0);
            let mut queue = vec![(r0, c0)];
            seen[r0][c0] = true;
            while let Some((r, c)) = queue.pop() {
                bb = (bb.0.min(r), bb.1.min(c), bb.2.max(r), bb.3.max(c));
                for dr in -1i64..=1 {
                    for dc in -1i64..=1 {
                        let (nr, nc) = (r as i64 + dr, c as i64 + dc);
                        if nr < 0 || nc < 0 || nr >= h as i64 || nc >= w as i64 {
                            continue;
                        }
                        let (nr, nc) = (nr as usize, nc as usize);
                        if !seen[nr][nc] && g.get(nr, nc) == color {
                            seen[nr][nc] = true;
                            queue.push((nr, nc));
                        }
                    }
                }
            }
            boxes.push(bb);
        }
    }
    boxes
}

pub fn colors_of(g: &Grid) -> BTreeSet<u8> {
    g.cells().map(|(_, _, c)| c.value()).collect()
}

/// SHA-256 of every file in `dir`, keyed by file name.
pub fn hash_dir(dir: &Path) -> Vec<(String, String)> {
    let mut out: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let path = e.unwrap().path();
            let digest = Sha256::digest(fs::read(&path).unwrap());
            let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
            (path.file_name().unwrap().to_string_lossy().into_owned(), hex)
        })
        .collect();
    out.sort();
    out
}

fn column(g: &Grid, c: usize) -> Vec<u8> {
    (0..g.height()).map(|r| g.get(r, c).value()).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

/// 1e0a9b12: each column keeps its colored cells in order and they sit at the bottom.
pub fn check_column_gravity(ex: &Example) -> Result<(), String> {
    ensure(colors_of(&ex.input).iter().any(|&v| v != 0), || "input has no colored cell".into())?;
    ensure(ex.input.width() == ex.output.width() && ex.input.height() == ex.output.height(), || "shape changed".into())?;
    for c in 0..ex.input.width() {
        let before: Vec<u8> = column(&ex.input, c).into_iter().filter(|&v| v != 0).collect();
        let after = column(&ex.output, c);
        let first = after.iter().position(|&v| v != 0).unwrap_or(after.len());
        ensure(after[first..].iter().all(|&v| v != 0), || format!("column {c} is not bottom-packed"))?;
        let mut kept: Vec<u8> = after[first..].to_vec();
        ensure(kept == before, || format!("column {c} order changed"))?;
        let mut sorted_before = before.clone();
        sorted_before.sort();
        kept.sort();
        ensure(kept == sorted_before, || format!("column {c} multiset changed"))?;
    }
    Ok(())
}

/// 67a423a3: exactly eight cells change, all to yellow, forming the ring around one cell.
pub fn check_crossing_ring(ex: &Example) -> Result<(), String> {
    ensure(ex.input.hamming(&ex.output) == Some(8), || "Hamming distance is not 8".into())?;
    ensure(!colors_of(&ex.input).contains(&4), || "input already contains yellow".into())?;
    let changed: BTreeSet<(usize, usize)> = ex
        .output
        .cells()
        .filter(|&(r, c, v)| v != ex.input.get(r, c))
        .map(|(r, c, _)| (r, c))
        .collect();
    ensure(changed.iter().all(|&(r, c)| ex.output.get(r, c) == Color::YELLOW), || "changed cell is not yellow".into())?;
    let rows: BTreeSet<usize> = changed.iter().map(|p| p.0).collect();
    let cols: BTreeSet<usize> = changed.iter().map(|p| p.1).collect();
    ensure(rows.len() == 3 && cols.len() == 3, || "ring is not 3x3".into())?;
    let (cr, cc) = (*rows.iter().nth(1).unwrap(), *cols.iter().nth(1).unwrap());
    let mut ring = BTreeSet::new();
    for r in cr - 1..=cr + 1 {
        for c in cc - 1..=cc + 1 {
            if (r, c) != (cr, cc) {
                ring.insert((r, c));
            }
        }
    }
    ensure(changed == ring, || "changed cells are not the 8-neighborhood of one cell".into())
}

/// 05269061: zero-free output, constant on each residue of (row + col) mod 3, three distinct colors.
pub fn check_diagonal_stripes(ex: &Example) -> Result<(), String> {
    ensure(!colors_of(&ex.output).contains(&0), || "zero in output".into())?;
    let mut by_class = [BTreeSet::new(), BTreeSet::new(), BTreeSet::new()];
    for (r, c, v) in ex.output.cells() {
        by_class[(r + c) % 3].insert(v.value());
    }
    ensure(by_class.iter().all(|s| s.len() == 1), || format!("residue classes not constant: {by_class:?}"))?;
    let stripe: BTreeSet<u8> = by_class.iter().map(|s| *s.first().unwrap()).collect();
    ensure(stripe.len() == 3, || "stripe colors are not distinct".into())?;
    for (r, c, v) in ex.input.cells() {
        ensure(v.is_zero() || v == ex.output.get(r, c), || format!("seed ({r},{c}) disagrees with output"))?;
    }
    Ok(())
}

/// 543a7ed5: alphabets, green ring on each pink bounding box, margin and hole area.
pub fn check_framed_boxes(ex: &Example) -> Result<(), String> {
    let (input, output) = (&ex.input, &ex.output);
    let size = input.height();
    ensure(colors_of(input).is_subset(&[6, 8].into()), || "input alphabet".into())?;
    ensure(colors_of(output).is_subset(&[3, 4, 6, 8].into()), || "output alphabet".into())?;

    let boxes = bounding_boxes(input, Color::PINK);
    ensure(!boxes.is_empty(), || "no boxes".into())?;
    let mut ring = BTreeSet::new();
    for &(t, l, b, r) in &boxes {
        ensure(t >= 1 && l >= 1 && b + 2 <= size && r + 2 <= input.width(), || "margin violated".into())?;
        for row in t - 1..=b + 1 {
            for col in l - 1..=r + 1 {
                if row == t - 1 || row == b + 1 || col == l - 1 || col == r + 1 {
                    ring.insert((row, col));
                }
            }
        }
    }
    let green: BTreeSet<_> = output.cells().filter(|&(_, _, v)| v == Color::GREEN).map(|(r, c, _)| (r, c)).collect();
    ensure(green == ring, || "green cells are not the box rings".into())?;

    let holes = output.count(Color::YELLOW);
    ensure(holes >= 2 * boxes.len(), || format!("hole area {holes} < 2 x {}", boxes.len()))?;
    for (r, c, v) in output.cells() {
        let was = input.get(r, c);
        let ok = match v.value() {
            4 => was == Color::CYAN && boxes.iter().any(|&(t, l, b, rt)| r > t && r < b && c > l && c < rt),
            3 => was == Color::CYAN,
            _ => was == v,
        };
        ensure(ok, || format!("unexpected change at ({r},{c})"))?;
    }
    Ok(())
}

pub fn check_invariants(task_id: &str, ex: &Example) -> Result<(), String> {
    match task_id {
        "1e0a9b12" => check_column_gravity(ex),
        "67a423a3" => check_crossing_ring(ex),
        "05269061" => check_diagonal_stripes(ex),
        "543a7ed5" => check_framed_boxes(ex),
        other => Err(format!("no invariants for {other}")),
    }
}

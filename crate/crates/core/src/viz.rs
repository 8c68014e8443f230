//! Binary PGM/PPM renders and landscape CSV.
//!
//! One pixel per cell. Costs are mapped onto `[0, 1]` by scale-translate
//! normalization, so the cheapest edge is black and the dearest white.

use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::instance::{normalize_scale_translate, normalize_scale_translate_values, CostMatrix};
use crate::numfmt::fmt_g17;
use crate::solver::LandscapeRow;
use crate::sortedm::{Frontier, SortedM};

pub const RED: [u8; 3] = [255, 0, 0];
pub const GREEN: [u8; 3] = [0, 255, 0];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageGray {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<u8>,
}

impl ImageGray {
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    /// Binary PGM (`P5`, maxval 255).
    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = format!("P5\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend_from_slice(&self.pixels);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageRgb {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<[u8; 3]>,
}

impl ImageRgb {
    pub fn get(&self, x: usize, y: usize) -> [u8; 3] {
        self.pixels[y * self.width + x]
    }

    pub fn count(&self, color: [u8; 3]) -> usize {
        self.pixels.iter().filter(|&&p| p == color).count()
    }

    /// Binary PPM (`P6`, maxval 255).
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend(self.pixels.iter().flatten());
        out
    }
}

fn to_byte(v: f64) -> u8 {
    (255.0 * v).round() as u8
}

/// `n x n` grayscale image of the matrix; the diagonal is white.
pub fn render_cost_matrix(m: &CostMatrix) -> Result<ImageGray> {
    let values = normalize_scale_translate(m)?;
    Ok(ImageGray { width: m.n(), height: m.n(), pixels: values.into_iter().map(to_byte).collect() })
}

/// Sorted costs as an `(n - 1)`-wide, `n`-high image (row `v` is vertex `v`),
/// frontier cells red and, if given, the candidate's cells green on top.
///
/// A matrix whose off-diagonal costs are all equal renders black.
pub fn render_sorted_m(s: &SortedM, frontier: &Frontier, candidate: Option<&Cycle>) -> Result<ImageRgb> {
    let n = s.n();
    let width = n - 1;
    let costs: Vec<f64> = s.rows().iter().flatten().map(|e| e.cost).collect();
    let gray = match normalize_scale_translate_values(&costs) {
        Ok(v) => v,
        Err(Error::DegenerateRange) => vec![0.0; costs.len()],
        Err(e) => return Err(e),
    };
    let mut pixels: Vec<[u8; 3]> = gray.into_iter().map(|v| [to_byte(v); 3]).collect();
    for (k, &col) in frontier.positions().iter().enumerate() {
        pixels[k * width + col] = RED;
    }
    if let Some(c) = candidate {
        if c.n() != n {
            return Err(Error::SizeMismatch(n, c.n()));
        }
        for (a, b) in c.edges() {
            let col = s.column_of(a, b).expect("every target appears once per row");
            pixels[(a - 1) * width + col] = GREEN;
        }
    }
    Ok(ImageRgb { width, height: n, pixels })
}

/// Target vertex of every sorted cell, shaded `round(255 v / n)`.
pub fn render_vertex_index(s: &SortedM) -> ImageGray {
    let n = s.n();
    let pixels = s.rows().iter().flatten().map(|e| to_byte(e.vertex as f64 / n as f64)).collect();
    ImageGray { width: n.saturating_sub(1), height: n, pixels }
}

pub const LANDSCAPE_HEADER: &str = "rank,cost,shared_edges";

pub fn export_landscape_csv(rows: &[LandscapeRow]) -> String {
    let mut out = String::with_capacity(24 * (rows.len() + 1));
    out.push_str(LANDSCAPE_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.rank, fmt_g17(r.cost), r.shared_edges));
    }
    out
}

pub fn parse_landscape_csv(text: &str) -> Result<Vec<LandscapeRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == LANDSCAPE_HEADER => {}
        _ => return Err(Error::Parse { line: 1, msg: format!("expected header {LANDSCAPE_HEADER:?}") }),
    }
    lines
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(k, line)| {
            let bad = |msg: String| Error::Parse { line: k + 1, msg };
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(bad(format!("expected 3 fields, got {}", fields.len())));
            }
            Ok(LandscapeRow {
                rank: fields[0].trim().parse().map_err(|e| bad(format!("rank: {e}")))?,
                cost: fields[1].trim().parse().map_err(|e| bad(format!("cost: {e}")))?,
                shared_edges: fields[2].trim().parse().map_err(|e| bad(format!("shared_edges: {e}")))?,
            })
        })
        .collect()
}

//! Static SVG rendering of the doubled free-space diagram.
//!
//! `u` grows to the right and `v` upward with the origin at the bottom left.
//! Free intervals are drawn on the edges; the parts reachable from the bottom
//! and from the top are drawn beside them, slightly offset, so all three stay
//! visible on the same edge.

use std::fmt::Write as _;

use closed_frechet::decision::Analysis;
use closed_frechet::Interval;

/// Largest diagram (in cells) the CLI will render.
pub const MAX_CELLS: usize = 100_000;

const MARGIN: f64 = 40.0;
const FREE: &str = "#9ecae1";
const DOWN: &str = "#e6550d";
const UP: &str = "#31a354";
const WITNESS: &str = "#756bb1";

struct Frame {
    cell: f64,
    rows: usize,
}

impl Frame {
    fn x(&self, u: f64) -> f64 {
        MARGIN + u * self.cell
    }

    fn y(&self, v: f64) -> f64 {
        MARGIN + (self.rows as f64 - v) * self.cell
    }
}

fn line(out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64, style: &str) {
    let _ = writeln!(
        out,
        r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" {style}/>"#
    );
}

/// Horizontal segment for an interval on a `T` edge at height `v`.
fn t_segment(out: &mut String, f: &Frame, iv: Interval, v: f64, dy: f64, color: &str, w: f64) {
    if let Some((lo, hi)) = iv.bounds() {
        let y = f.y(v) + dy;
        // Zero-length intervals still get a visible dot.
        let (x1, x2) = (f.x(lo), f.x(hi).max(f.x(lo) + 0.8));
        let style = format!(
            r#"class="{}" stroke="{color}" stroke-width="{w}""#,
            class_of(color)
        );
        line(out, x1, y, x2, y, &style);
    }
}

/// Vertical segment for an interval on an `R` edge at abscissa `u`.
fn r_segment(out: &mut String, f: &Frame, iv: Interval, u: f64, dx: f64, color: &str, w: f64) {
    if let Some((lo, hi)) = iv.bounds() {
        let x = f.x(u) + dx;
        let (y1, y2) = (f.y(lo), f.y(hi).min(f.y(lo) - 0.8));
        let style = format!(
            r#"class="{}" stroke="{color}" stroke-width="{w}""#,
            class_of(color)
        );
        line(out, x, y1, x, y2, &style);
    }
}

fn class_of(color: &str) -> &'static str {
    match color {
        FREE => "free",
        DOWN => "reach-down",
        UP => "reach-up",
        _ => "mark",
    }
}

pub fn render(a: &Analysis) -> String {
    let (cols, rows) = (a.grid.cols(), a.grid.rows());
    let m = a.grid.period();
    let cell = (720.0 / cols.max(rows) as f64).clamp(4.0, 80.0);
    let f = Frame { cell, rows };
    let width = 2.0 * MARGIN + cols as f64 * cell;
    let height = 2.0 * MARGIN + rows as f64 * cell + 30.0;
    let stroke = (cell / 12.0).clamp(1.0, 4.0);
    let offset = stroke;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="sans-serif">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    // Cell grid; the seam between the two copies of X is dashed.
    let _ = writeln!(out, r##"<g stroke="#d9d9d9" stroke-width="0.5">"##);
    for i in 0..=cols {
        line(
            &mut out,
            f.x(i as f64),
            f.y(0.0),
            f.x(i as f64),
            f.y(rows as f64),
            "",
        );
    }
    for j in 0..=rows {
        line(
            &mut out,
            f.x(0.0),
            f.y(j as f64),
            f.x(cols as f64),
            f.y(j as f64),
            "",
        );
    }
    let _ = writeln!(out, "</g>");
    line(
        &mut out,
        f.x(m as f64),
        f.y(0.0),
        f.x(m as f64),
        f.y(rows as f64),
        r##"stroke="#636363" stroke-dasharray="4 3""##,
    );

    for j in 0..=rows {
        for i in 1..=cols {
            let v = j as f64;
            t_segment(&mut out, &f, a.grid.free_t(i, j), v, 0.0, FREE, stroke);
            t_segment(&mut out, &f, a.reach.down_t(i, j), v, -offset, DOWN, stroke);
            t_segment(&mut out, &f, a.reach.up_t(i, j), v, offset, UP, stroke);
        }
    }
    for j in 1..=rows {
        for i in 0..=cols {
            let u = i as f64;
            r_segment(&mut out, &f, a.grid.free_r(i, j), u, 0.0, FREE, stroke);
            r_segment(&mut out, &f, a.reach.down_r(i, j), u, -offset, DOWN, stroke);
            r_segment(&mut out, &f, a.reach.up_r(i, j), u, offset, UP, stroke);
        }
    }

    // Pieces of r_down on the top side: boundary ticks and value labels.
    let font = (cell / 5.0).clamp(6.0, 11.0);
    let top = f.y(rows as f64);
    for piece in a.forward.partitions.iter().flatten() {
        for u in [piece.beg, piece.end] {
            line(
                &mut out,
                f.x(u),
                top - 3.0 * offset,
                f.x(u),
                top - 3.0 * offset - 6.0,
                r##"class="piece" stroke="#252525" stroke-width="1""##,
            );
        }
        let label = if piece.is_identity() {
            "id".to_string()
        } else {
            format!("{:.3}", piece.val)
        };
        let _ = writeln!(
            out,
            r##"<text class="piece-label" x="{:.2}" y="{:.2}" font-size="{font:.1}" text-anchor="middle" fill="#252525">{label}</text>"##,
            f.x(0.5 * (piece.beg + piece.end)),
            top - 3.0 * offset - 8.0
        );
    }

    if let Some(u) = a.report.witness_u {
        for (px, py) in [(f.x(u), f.y(0.0)), (f.x(u + m as f64), f.y(rows as f64))] {
            let _ = writeln!(
                out,
                r#"<circle class="witness" cx="{px:.2}" cy="{py:.2}" r="{:.1}" fill="{WITNESS}"/>"#,
                (1.5 * stroke).max(3.0)
            );
        }
        line(
            &mut out,
            f.x(u),
            f.y(0.0),
            f.x(u + m as f64),
            f.y(rows as f64),
            &format!(
                r#"class="witness-link" stroke="{WITNESS}" stroke-width="1" stroke-dasharray="2 3""#
            ),
        );
    }

    let legend_y = height - 12.0;
    let status = match a.report.witness_u {
        Some(u) => format!("δ ≤ {} holds, witness u = {u:.6}", a.report.eps),
        None => format!("δ ≤ {} fails", a.report.eps),
    };
    let _ = writeln!(
        out,
        r#"<text x="{MARGIN}" y="{legend_y:.0}" font-size="12"><tspan fill="{FREE}">free</tspan>  <tspan fill="{DOWN}">reachable from bottom</tspan>  <tspan fill="{UP}">reachable from top</tspan>  <tspan fill="{WITNESS}">{status}</tspan></text>"#
    );
    let _ = writeln!(out, "</svg>");
    out
}

//! SVG rendering of free space diagrams.
//!
//! The picture is a fixed 1000×1000 viewBox. The parameter space `[0,n]×[0,m]`
//! is stretched to a 880×880 plot area with P along the bottom and Q up the
//! left side. Each component is a `<g class="component" data-id="…">` group
//! holding one polygon per member cell, filled with its own hue. Selected
//! components additionally get the `selected` class and a dark outline.
//! A `<metadata>` element carries a small JSON summary.

use std::fmt::Write;

use serde_json::json;

use crate::freespace::{point_segment_interval, CellFreeSpace, FreeSpaceDiagram};
use crate::geometry::PolyCurve;
use crate::selection::SelectionError;

const SIZE: f64 = 1000.0;
const MARGIN: f64 = 60.0;
const PLOT: f64 = SIZE - 2.0 * MARGIN;
/// Boundary samples per cell along the P direction.
const SAMPLES: usize = 48;

struct Frame {
    sx: f64,
    sy: f64,
}

impl Frame {
    fn x(&self, s: f64) -> f64 {
        MARGIN + s * self.sx
    }

    fn y(&self, t: f64) -> f64 {
        SIZE - MARGIN - t * self.sy
    }
}

/// Renders the diagram of `p` and `q` (the curves it was built from) with
/// the components in `selected` outlined.
pub fn render_svg(
    d: &FreeSpaceDiagram,
    p: &PolyCurve,
    q: &PolyCurve,
    selected: &[usize],
) -> Result<String, SelectionError> {
    let count = d.component_count();
    if let Some(&id) = selected.iter().find(|&&id| id >= count) {
        return Err(SelectionError::UnknownComponent { id, count });
    }
    let (n, m) = (d.n(), d.m());
    let frame = Frame {
        sx: PLOT / n as f64,
        sy: PLOT / m as f64,
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    let meta = json!({
        "components": count,
        "epsilon": d.epsilon(),
        "m": m,
        "n": n,
        "selected": selected,
    });
    let _ = writeln!(out, "<metadata>{meta}</metadata>");
    out.push_str(concat!(
        "<style>",
        ".grid{stroke:#bbb;stroke-width:1}",
        ".frame{fill:#fff;stroke:#333;stroke-width:2}",
        ".component polygon{fill-opacity:0.65;stroke:none}",
        ".selected polygon{stroke:#111;stroke-width:2.5}",
        "text{font-family:sans-serif;font-size:16px;fill:#333}",
        "</style>\n"
    ));

    let _ = writeln!(
        out,
        r#"<rect class="frame" x="{MARGIN}" y="{MARGIN}" width="{PLOT}" height="{PLOT}"/>"#
    );
    for i in 1..n {
        let x = frame.x(i as f64);
        let _ = writeln!(
            out,
            r#"<line class="grid" x1="{x:.2}" y1="{MARGIN}" x2="{x:.2}" y2="{:.2}"/>"#,
            SIZE - MARGIN
        );
    }
    for j in 1..m {
        let y = frame.y(j as f64);
        let _ = writeln!(
            out,
            r#"<line class="grid" x1="{MARGIN}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}"/>"#,
            SIZE - MARGIN
        );
    }

    for comp in d.components() {
        let hue = (comp.id as f64 * 137.508) % 360.0;
        let class = if selected.contains(&comp.id) {
            "component selected"
        } else {
            "component"
        };
        let _ = writeln!(
            out,
            r#"<g class="{class}" data-id="{}" fill="hsl({hue:.1},70%,50%)">"#,
            comp.id
        );
        for &(i, j) in &comp.cells {
            let pts = cell_outline(d.cell(i, j), p, q, d.epsilon(), d.tol());
            let coords: Vec<String> = pts
                .iter()
                .map(|&(u, v)| {
                    format!(
                        "{:.2},{:.2}",
                        frame.x(i as f64 + u),
                        frame.y(j as f64 + v)
                    )
                })
                .collect();
            let _ = writeln!(out, r#"<polygon points="{}"/>"#, coords.join(" "));
        }
        out.push_str("</g>\n");
    }

    // Axis ticks at every vertex parameter; labels are thinned on long curves.
    let step = |len: usize| len.div_ceil(20).max(1);
    for i in (0..=n).step_by(step(n)) {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{i}</text>"#,
            frame.x(i as f64),
            SIZE - MARGIN + 22.0
        );
    }
    for j in (0..=m).step_by(step(m)) {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{j}</text>"#,
            MARGIN - 8.0,
            frame.y(j as f64) + 5.0
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">P (s)</text>"#,
        SIZE / 2.0,
        SIZE - 12.0
    );
    let _ = writeln!(
        out,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">Q (t)</text>"#,
        SIZE / 2.0,
        SIZE / 2.0
    );
    out.push_str("</svg>\n");
    Ok(out)
}

/// Boundary of a cell's free set in local coordinates, counter-clockwise:
/// the lower chain left to right, then the upper chain back.
fn cell_outline(
    cell: &CellFreeSpace,
    p: &PolyCurve,
    q: &PolyCurve,
    eps: f64,
    tol: f64,
) -> Vec<(f64, f64)> {
    let Some((a, b)) = cell.s_projection.bounds() else {
        return Vec::new();
    };
    let seg_p = p.segment(cell.i);
    let seg_q = q.segment(cell.j);
    let mut lower = Vec::with_capacity(SAMPLES + 1);
    let mut upper = Vec::with_capacity(SAMPLES + 1);
    for k in 0..=SAMPLES {
        let u = a + (b - a) * k as f64 / SAMPLES as f64;
        if let Some((lo, hi)) = point_segment_interval(&seg_q, seg_p.point_at(u), eps, tol).bounds()
        {
            lower.push((u, lo));
            upper.push((u, hi));
        }
    }
    if lower.is_empty() {
        // Tangency too thin to sample: fall back to the projection box.
        let (c, d) = cell.t_projection.bounds().unwrap_or((0.0, 0.0));
        return vec![(a, c), (b, c), (b, d), (a, d)];
    }
    upper.reverse();
    lower.extend(upper);
    lower
}

/// Component count recorded in the metadata of an SVG produced by [`render_svg`].
pub fn metadata_component_count(svg: &str) -> Option<usize> {
    let start = svg.find("<metadata>")? + "<metadata>".len();
    let end = svg[start..].find("</metadata>")? + start;
    let meta: serde_json::Value = serde_json::from_str(&svg[start..end]).ok()?;
    meta.get("components")?.as_u64().map(|c| c as usize)
}

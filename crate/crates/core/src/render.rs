//! Static SVG pictures of planar complexes. Exact coordinates are converted to
//! `f64` only here, for display.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complex::{Coloring, Complex};
use crate::dual::build_dual;
use crate::error::{Error, Result};
use crate::geometry::to_f64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    pub palette: Vec<String>,
    pub show_dual: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 640,
            height: 640,
            palette: ["#e41a1c", "#377eb8", "#4daf4a", "#ff7f00", "#984ea3", "#a65628"]
                .map(String::from)
                .to_vec(),
            show_dual: false,
        }
    }
}

const UNCOLORED: &str = "#dddddd";
const MARGIN: f64 = 16.0;

pub fn render_svg(c: &Complex, coloring: Option<&Coloring>, opts: &RenderOptions) -> Result<String> {
    if c.dimension() != 2 {
        return Err(Error::UnsupportedDimension {
            dimension: c.dimension(),
            context: "rendering supports planar complexes only".into(),
        });
    }
    if opts.width == 0 || opts.height == 0 {
        return Err(Error::input("image size must be positive"));
    }
    if opts.palette.iter().any(|s| s.is_empty() || s.contains(['"', '<', '>', '&'])) {
        return Err(Error::input("palette entries must be plain SVG color strings"));
    }
    if let Some(col) = coloring {
        if col.len() != c.len() {
            return Err(Error::input(format!(
                "coloring has {} entries for {} simplices",
                col.len(),
                c.len()
            )));
        }
        if let Some(max) = col.max_color() {
            if max >= opts.palette.len() {
                return Err(Error::input(format!(
                    "palette has {} colors but the coloring uses index {max}",
                    opts.palette.len()
                )));
            }
        }
    }

    let pts: Vec<(f64, f64)> = c
        .vertices()
        .iter()
        .map(|p| (to_f64(&p.coords()[0]), to_f64(&p.coords()[1])))
        .collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for s in c.simplices() {
        for &v in s.ids() {
            let (x, y) = pts[v];
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
    }
    let (w, h) = (f64::from(opts.width), f64::from(opts.height));
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let scale = ((w - 2.0 * MARGIN).min(h - 2.0 * MARGIN) / span).max(0.0);
    // SVG y grows downwards.
    let map = |(x, y): (f64, f64)| (MARGIN + (x - x0) * scale, h - MARGIN - (y - y0) * scale);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        opts.width, opts.height, opts.width, opts.height
    );
    out.push_str("<g stroke=\"#222222\" stroke-width=\"1\" stroke-linejoin=\"round\">\n");
    for (i, s) in c.simplices().iter().enumerate() {
        let fill = coloring.map_or(UNCOLORED, |col| opts.palette[col.colors[i]].as_str());
        let corners: Vec<String> = s
            .ids()
            .iter()
            .map(|&v| {
                let (x, y) = map(pts[v]);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polygon data-simplex="{i}" points="{}" fill="{fill}"/>"#,
            corners.join(" ")
        );
    }
    out.push_str("</g>\n");

    if opts.show_dual {
        let g = build_dual(c)?;
        let centroid = |i: usize| {
            let ids = c.simplex(i).ids();
            let (sx, sy) = ids.iter().fold((0.0, 0.0), |(ax, ay), &v| (ax + pts[v].0, ay + pts[v].1));
            map((sx / 3.0, sy / 3.0))
        };
        out.push_str("<g fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\">\n");
        for (a, b, facet) in g.edges() {
            let ids = facet.ids();
            let mid = map((
                (pts[ids[0]].0 + pts[ids[1]].0) / 2.0,
                (pts[ids[0]].1 + pts[ids[1]].1) / 2.0,
            ));
            let (ca, cb) = (centroid(a), centroid(b));
            let _ = writeln!(
                out,
                r#"<polyline points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3}"/>"#,
                ca.0, ca.1, mid.0, mid.1, cb.0, cb.1
            );
        }
        out.push_str("</g>\n<g fill=\"#000000\">\n");
        for i in 0..c.len() {
            let (x, y) = centroid(i);
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3"/>"#);
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

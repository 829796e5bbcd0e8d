//! Deterministic SVG drawings of tilings with polygon overlays.
//!
//! Every coordinate is written as a six-place decimal of a `2^-20`
//! enclosure of the exact value, so identical inputs give identical bytes.

use std::fmt::Write;

use crate::point::Point;
use crate::qfield::QuadNum;
use crate::regions::{BBox, ConvexPolygon};
use crate::report::decimal;
use crate::tilings::{catalog, TilingId};
use crate::Error;

const PIXELS_PER_UNIT: f64 = 80.0;
const EDGE_WIDTH: &str = "0.04";
const VERTEX_RADIUS: &str = "0.07";

/// A filled polygon drawn at 50% opacity over the tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlay {
    pub polygon: ConvexPolygon,
    pub fill: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub tiling: TilingId,
    pub window: BBox,
    pub overlays: Vec<Overlay>,
}

/// Counts of what a drawing contains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderSummary {
    pub vertices: usize,
    pub edges: usize,
    pub overlays: usize,
}

fn coord(x: &QuadNum) -> String {
    decimal(x)
}

fn xy(p: &Point) -> String {
    format!("{} {}", coord(&p.x), coord(&p.y))
}

/// Draws the vertices and unit edges inside the window. Edges are drawn
/// when both endpoints lie in the window.
pub fn render_svg(spec: &RenderSpec) -> Result<(String, RenderSummary), Error> {
    let rec = catalog(spec.tiling);
    let w = &spec.window;
    let vertices = rec.vertices_in_window(w)?;
    let edges: Vec<(Point, Point)> = rec
        .edges_in_window(w)?
        .into_iter()
        .filter(|(p, q)| w.contains(p) && w.contains(q))
        .collect();

    let width = &w.max_x - &w.min_x;
    let height = &w.max_y - &w.min_y;
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"{} {} {} {}\">",
        width.to_f64() * PIXELS_PER_UNIT,
        height.to_f64() * PIXELS_PER_UNIT,
        coord(&w.min_x),
        coord(&-&w.max_y),
        coord(&width),
        coord(&height),
    );
    let _ = writeln!(s, "<title>{} tiling</title>", spec.tiling);
    s.push_str("<g transform=\"scale(1,-1)\">\n");
    let _ = writeln!(s, "<g stroke=\"#222222\" stroke-width=\"{EDGE_WIDTH}\" stroke-linecap=\"round\">");
    for (p, q) in &edges {
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            coord(&p.x),
            coord(&p.y),
            coord(&q.x),
            coord(&q.y)
        );
    }
    s.push_str("</g>\n<g fill=\"#000000\">\n");
    for v in &vertices {
        let _ = writeln!(s, "<circle cx=\"{}\" cy=\"{}\" r=\"{VERTEX_RADIUS}\"/>", coord(&v.x), coord(&v.y));
    }
    s.push_str("</g>\n");
    for o in &spec.overlays {
        let mut d = String::new();
        for (i, v) in o.polygon.vertices().iter().enumerate() {
            d.push_str(if i == 0 { "M " } else { " L " });
            d.push_str(&xy(v));
        }
        d.push_str(" Z");
        let _ = writeln!(s, "<path d=\"{d}\" fill=\"{}\" fill-opacity=\"0.5\" stroke=\"none\"/>", o.fill);
    }
    s.push_str("</g>\n</svg>\n");
    let summary = RenderSummary { vertices: vertices.len(), edges: edges.len(), overlays: spec.overlays.len() };
    Ok((s, summary))
}

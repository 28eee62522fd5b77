//! SVG figures: solid triangulation edges, dotted Voronoi edges, filled site
//! dots and open circumcenter dots.
//!
//! Output is a pure function of the mesh, diagram and view, so identical
//! inputs give identical bytes.

use std::fmt::Write;
use std::str::FromStr;

use num_rational::BigRational;

use crate::delaunay::TriMesh;
use crate::geometry::number::approx;
use crate::geometry::{clip_by_polygon, ConvexOverlap, Point, Polygon, Scalar};
use crate::regions::{extract_regions, region_union_polygon};
use crate::voronoi::{Frame, VoronoiDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum View {
    Delaunay,
    Voronoi,
    Overlay,
    Regions,
}

impl FromStr for View {
    type Err = String;

    fn from_str(s: &str) -> Result<View, String> {
        match s {
            "delaunay" => Ok(View::Delaunay),
            "voronoi" => Ok(View::Voronoi),
            "overlay" => Ok(View::Overlay),
            "regions" => Ok(View::Regions),
            _ => Err(format!("unknown view `{s}`")),
        }
    }
}

pub struct Style {
    /// Longer side of the canvas, in pixels.
    pub canvas: f64,
    /// Padding on every side as a fraction `(numerator, denominator)` of the
    /// longer side of the box around sites and circumcenters.
    pub margin: (i64, i64),
    pub background: &'static str,
    pub triangle_stroke: &'static str,
    pub triangle_width: f64,
    pub voronoi_stroke: &'static str,
    pub voronoi_width: f64,
    pub voronoi_dash: &'static str,
    pub site_fill: &'static str,
    pub site_radius: f64,
    pub center_stroke: &'static str,
    pub center_radius: f64,
    pub center_width: f64,
    pub region_palette: [&'static str; 8],
    pub region_opacity: f64,
}

pub const STYLE: Style = Style {
    canvas: 800.0,
    margin: (1, 10),
    background: "#ffffff",
    triangle_stroke: "#1f2937",
    triangle_width: 1.5,
    voronoi_stroke: "#1d4ed8",
    voronoi_width: 1.2,
    voronoi_dash: "2 4",
    site_fill: "#111827",
    site_radius: 3.5,
    center_stroke: "#b91c1c",
    center_radius: 4.0,
    center_width: 1.2,
    region_palette: [
        "#f59e0b", "#10b981", "#6366f1", "#ef4444", "#14b8a6", "#a855f7", "#84cc16", "#ec4899",
    ],
    region_opacity: 0.35,
};

struct Canvas {
    x0: f64,
    y1: f64,
    scale: f64,
    width: f64,
    height: f64,
}

impl Canvas {
    /// Box around the sites and circumcenters, widened by the style margin.
    fn fit(m: &TriMesh, v: &VoronoiDiagram) -> Canvas {
        let mut pts: Vec<Point> = m.points().to_vec();
        pts.extend(v.vertices().iter().cloned());
        let probe = Frame::around(&pts, Some(Scalar::from_integer(0.into())));
        let (lo, hi) = (probe.min(), probe.max());
        let (w, h) = (hi.x() - lo.x(), hi.y() - lo.y());
        let frac = BigRational::new(STYLE.margin.0.into(), STYLE.margin.1.into());
        let pad = if w > h { &w * &frac } else { &h * &frac };
        let (x0, y0) = (approx(&(lo.x() - &pad)), approx(&(lo.y() - &pad)));
        let (x1, y1) = (approx(&(hi.x() + &pad)), approx(&(hi.y() + &pad)));
        let scale = STYLE.canvas / (x1 - x0).max(y1 - y0);
        Canvas {
            x0,
            y1,
            scale,
            width: ((x1 - x0) * scale).round(),
            height: ((y1 - y0) * scale).round(),
        }
    }

    fn map(&self, p: &Point) -> (f64, f64) {
        let (x, y) = p.to_f64();
        ((x - self.x0) * self.scale, (self.y1 - y) * self.scale)
    }

    fn points_attr(&self, poly: &Polygon) -> String {
        poly.vertices()
            .iter()
            .map(|p| {
                let (x, y) = self.map(p);
                format!("{} {}", num(x), num(y))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// View rectangle in model coordinates, for clipping long edges.
    fn window(&self) -> Polygon {
        let f = |v: f64| Scalar::from_float(v).expect("finite");
        let (x1, y0) = (self.x0 + self.width / self.scale, self.y1 - self.height / self.scale);
        Polygon::new(vec![
            Point::new(f(self.x0), f(y0)),
            Point::new(f(x1), f(y0)),
            Point::new(f(x1), f(self.y1)),
            Point::new(f(self.x0), f(self.y1)),
        ])
        .expect("window has area")
    }
}

/// Fixed-precision number text with trailing zeros trimmed.
fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Renders `view` of a Delaunay mesh and its Voronoi diagram as SVG 1.1.
pub fn render_svg(m: &TriMesh, v: &VoronoiDiagram, view: View) -> String {
    let c = Canvas::fit(m, v);
    let mut out = String::new();
    let w = |out: &mut String, s: String| out.push_str(&s);
    w(&mut out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n".into());
    w(
        &mut out,
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
            num(c.width),
            num(c.height),
            num(c.width),
            num(c.height)
        ),
    );
    w(
        &mut out,
        format!(
            "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
            num(c.width),
            num(c.height),
            STYLE.background
        ),
    );

    if view == View::Regions {
        out.push_str("<g class=\"regions\" stroke=\"none\">\n");
        for (i, r) in extract_regions(m).iter().enumerate() {
            let colour = STYLE.region_palette[i % STYLE.region_palette.len()];
            let _ = writeln!(
                out,
                "<g class=\"region\" data-region=\"{i}\" fill=\"{colour}\" fill-opacity=\"{}\">",
                STYLE.region_opacity
            );
            let polys: Vec<Polygon> = match region_union_polygon(r) {
                Ok(p) => vec![p],
                Err(_) => r
                    .triangles()
                    .iter()
                    .map(|&t| m.triangle_polygon(t).expect("valid id"))
                    .collect(),
            };
            for p in polys {
                let _ = writeln!(out, "<polygon points=\"{}\"/>", c.points_attr(&p));
            }
            out.push_str("</g>\n");
        }
        out.push_str("</g>\n");
    }

    if view != View::Voronoi {
        let _ = writeln!(
            out,
            "<g class=\"triangles\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-linejoin=\"round\">",
            STYLE.triangle_stroke, STYLE.triangle_width
        );
        for t in 0..m.triangle_count() {
            let _ = writeln!(
                out,
                "<polygon points=\"{}\"/>",
                c.points_attr(&m.triangle_polygon(t).expect("valid id"))
            );
        }
        out.push_str("</g>\n");
    }

    if matches!(view, View::Voronoi | View::Overlay) {
        let window = c.window();
        let _ = writeln!(
            out,
            "<g class=\"voronoi\" stroke=\"{}\" stroke-width=\"{}\" stroke-dasharray=\"{}\" stroke-linecap=\"round\">",
            STYLE.voronoi_stroke, STYLE.voronoi_width, STYLE.voronoi_dash
        );
        for (_, _, seg) in v.ridges() {
            let clipped = clip_by_polygon(vec![seg.a().clone(), seg.b().clone()], &window);
            if let ConvexOverlap::Segment(s) = ConvexOverlap::from_loop(clipped) {
                let ((x1, y1), (x2, y2)) = (c.map(s.a()), c.map(s.b()));
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                    num(x1),
                    num(y1),
                    num(x2),
                    num(y2)
                );
            }
        }
        out.push_str("</g>\n");
        let _ = writeln!(
            out,
            "<g class=\"circumcenters\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\">",
            STYLE.center_stroke, STYLE.center_width
        );
        for p in v.vertices() {
            let (x, y) = c.map(p);
            let _ = writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                num(x),
                num(y),
                STYLE.center_radius
            );
        }
        out.push_str("</g>\n");
    }

    let _ = writeln!(out, "<g class=\"sites\" fill=\"{}\" stroke=\"none\">", STYLE.site_fill);
    for p in m.points() {
        let (x, y) = c.map(p);
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            num(x),
            num(y),
            STYLE.site_radius
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

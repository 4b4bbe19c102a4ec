//! Static SVG rendering of the primal scene and the dual polygon.
//!
//! Coordinates are converted to decimals for display only; everything
//! upstream stays exact.

use super::{InstanceDocument, ResultDocument};
use crate::exact_geometry::Rational;
use crate::transversal::FamilyError;
use num_traits::ToPrimitive;
use std::fmt::Write;

/// Which plane to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    /// Segments plus the extremal and selected lines.
    Primal,
    /// The feasibility polygon, its vertices, and the centroid marks.
    Dual,
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;

/// Affine map from data space to viewport pixels (y flipped).
struct Frame {
    x_min: f64,
    y_min: f64,
    x_scale: f64,
    y_scale: f64,
}

impl Frame {
    fn fit(xs: &[f64], ys: &[f64]) -> Frame {
        let span = |values: &[f64]| {
            let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
            let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            if min.is_finite() && max.is_finite() && max > min {
                (min, max)
            } else if min.is_finite() {
                (min - 1.0, min + 1.0)
            } else {
                (0.0, 1.0)
            }
        };
        let (x_min, x_max) = span(xs);
        let (y_min, y_max) = span(ys);
        let pad_x = 0.08 * (x_max - x_min);
        let pad_y = 0.08 * (y_max - y_min);
        let (x_min, x_max) = (x_min - pad_x, x_max + pad_x);
        let (y_min, y_max) = (y_min - pad_y, y_max + pad_y);
        Frame {
            x_min,
            y_min,
            x_scale: WIDTH / (x_max - x_min),
            y_scale: HEIGHT / (y_max - y_min),
        }
    }

    fn x(&self, x: f64) -> f64 {
        (x - self.x_min) * self.x_scale
    }

    fn y(&self, y: f64) -> f64 {
        HEIGHT - (y - self.y_min) * self.y_scale
    }

    fn x_data_range(&self) -> (f64, f64) {
        (self.x_min, self.x_min + WIDTH / self.x_scale)
    }
}

fn approx(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(0.0)
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, "  <title>{title}</title>");
    let _ = writeln!(
        out,
        r#"  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
}

fn line_element(out: &mut String, frame: &Frame, k: f64, l: f64, class: &str, style: &str) {
    let (x0, x1) = frame.x_data_range();
    let _ = writeln!(
        out,
        r#"  <line class="{class}" x1="{:.4}" y1="{:.4}" x2="{:.4}" y2="{:.4}" {style}/>"#,
        frame.x(x0),
        frame.y(k * x0 + l),
        frame.x(x1),
        frame.y(k * x1 + l),
    );
}

/// Renders an instance and its computed result as a standalone SVG.
///
/// Primal mode draws every segment, the extremal lines dashed, and the
/// three selected lines in distinct stroke classes; absent fields are
/// simply not drawn, so a transversal-free result shows the segments
/// alone. Dual mode draws the feasibility polygon, its vertices, and one
/// mark per selected line.
pub fn render_svg(
    doc: &InstanceDocument,
    result: &ResultDocument,
    mode: RenderMode,
) -> Result<String, FamilyError> {
    let family = doc.family()?;
    let title = doc.name.as_deref().unwrap_or("segment family");
    let mut out = String::new();
    match mode {
        RenderMode::Primal => {
            let xs: Vec<f64> = family.segments().iter().map(|s| approx(s.x())).collect();
            let mut ys: Vec<f64> = family.segments().iter().map(|s| approx(s.low())).collect();
            ys.extend(family.segments().iter().map(|s| approx(s.high())));
            let frame = Frame::fit(&xs, &ys);
            header(&mut out, title);
            for s in family.segments() {
                let x = frame.x(approx(s.x()));
                let _ = writeln!(
                    out,
                    r#"  <line class="segment" x1="{x:.4}" y1="{:.4}" x2="{x:.4}" y2="{:.4}" stroke="steelblue" stroke-width="4" stroke-linecap="round"/>"#,
                    frame.y(approx(s.low())),
                    frame.y(approx(s.high())),
                );
            }
            for (rec, class) in [(&result.r, "extremal r"), (&result.p, "extremal p")] {
                if let Some(rec) = rec {
                    line_element(
                        &mut out,
                        &frame,
                        approx(&rec.k),
                        approx(&rec.l),
                        class,
                        r#"stroke="gray" stroke-width="1" stroke-dasharray="6 4""#,
                    );
                }
            }
            let selectors = [
                (
                    &result.s1,
                    "selector s1",
                    "stroke=\"teal\" stroke-width=\"1.5\"",
                ),
                (
                    &result.s2,
                    "selector s2",
                    "stroke=\"seagreen\" stroke-width=\"1.5\"",
                ),
                (
                    &result.s3,
                    "selector s3",
                    "stroke=\"crimson\" stroke-width=\"1.5\"",
                ),
            ];
            for (rec, class, style) in selectors {
                if let Some(rec) = rec {
                    line_element(
                        &mut out,
                        &frame,
                        approx(&rec.k),
                        approx(&rec.l),
                        class,
                        style,
                    );
                }
            }
        }
        RenderMode::Dual => {
            let vertices = result.polygon.as_deref().unwrap_or(&[]);
            let mut ks: Vec<f64> = vertices.iter().map(|v| approx(&v.k)).collect();
            let mut ls: Vec<f64> = vertices.iter().map(|v| approx(&v.l)).collect();
            for rec in [&result.s1, &result.s2, &result.s3].into_iter().flatten() {
                ks.push(approx(&rec.k));
                ls.push(approx(&rec.l));
            }
            let frame = Frame::fit(&ks, &ls);
            header(&mut out, title);
            if vertices.len() >= 2 {
                let points: Vec<String> = vertices
                    .iter()
                    .map(|v| format!("{:.4},{:.4}", frame.x(approx(&v.k)), frame.y(approx(&v.l))))
                    .collect();
                let _ = writeln!(
                    out,
                    r#"  <polygon class="region" points="{}" fill="lightsteelblue" stroke="steelblue" stroke-width="1"/>"#,
                    points.join(" ")
                );
            }
            for v in vertices {
                let _ = writeln!(
                    out,
                    r#"  <circle class="vertex" cx="{:.4}" cy="{:.4}" r="4" fill="steelblue"/>"#,
                    frame.x(approx(&v.k)),
                    frame.y(approx(&v.l)),
                );
            }
            let marks = [
                (&result.s1, "mark s1", "teal"),
                (&result.s2, "mark s2", "seagreen"),
                (&result.s3, "mark s3", "crimson"),
            ];
            for (rec, class, color) in marks {
                if let Some(rec) = rec {
                    let _ = writeln!(
                        out,
                        r#"  <circle class="{class}" cx="{:.4}" cy="{:.4}" r="3" fill="{color}"/>"#,
                        frame.x(approx(&rec.k)),
                        frame.y(approx(&rec.l)),
                    );
                }
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

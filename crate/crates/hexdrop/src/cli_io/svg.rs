//! SVG 1.1 rendering: one hexagon outline per cell, sector boundary spokes
//! for sectored cells, and one dot per generated node. Mathematical +y points
//! up (the content group is y-flipped), and the viewBox pads the network
//! extent by 5%.

use crate::geometry::{Point, SQRT3};
use crate::network::{LabeledPoint, NetworkConfig};
use std::io::{self, Write};

struct Extent {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Extent {
    fn empty() -> Self {
        Extent {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn add(&mut self, p: Point) {
        self.min_x = self.min_x.min(p.x);
        self.min_y = self.min_y.min(p.y);
        self.max_x = self.max_x.max(p.x);
        self.max_y = self.max_y.max(p.y);
    }

    fn or_unit(self) -> Self {
        if self.min_x.is_finite() {
            self
        } else {
            Extent {
                min_x: -1.0,
                min_y: -1.0,
                max_x: 1.0,
                max_y: 1.0,
            }
        }
    }
}

fn hexagon_corners(center: Point, side: f64) -> [Point; 6] {
    let h = 0.5 * SQRT3 * side;
    [
        Point::new(center.x + side, center.y),
        Point::new(center.x + 0.5 * side, center.y + h),
        Point::new(center.x - 0.5 * side, center.y + h),
        Point::new(center.x - side, center.y),
        Point::new(center.x - 0.5 * side, center.y - h),
        Point::new(center.x + 0.5 * side, center.y - h),
    ]
}

/// Render the network layout and its generated points as an SVG document.
///
/// The config supplies the cell outlines; points are drawn wherever they are,
/// so a mismatched (config, points) pair still produces a valid image.
pub fn render_svg<W: Write>(
    cfg: &NetworkConfig,
    points: &[LabeledPoint],
    sink: &mut W,
) -> io::Result<()> {
    let mut extent = Extent::empty();
    let mut cells = Vec::with_capacity(cfg.cells.len());
    for spec in &cfg.cells {
        // parity was validated with the config; fall back to skipping outlines
        // for indices that are somehow off-lattice
        if let Ok(center) = spec.idx.cell_center(cfg.reference_size) {
            let corners = hexagon_corners(center, spec.size);
            for c in &corners {
                extent.add(*c);
            }
            cells.push((spec, center, corners));
        }
    }
    for lp in points {
        extent.add(lp.p);
    }
    let extent = extent.or_unit();

    let pad_x = 0.05 * (extent.max_x - extent.min_x).max(f64::MIN_POSITIVE);
    let pad_y = 0.05 * (extent.max_y - extent.min_y).max(f64::MIN_POSITIVE);
    let view_w = (extent.max_x - extent.min_x) + 2.0 * pad_x;
    let view_h = (extent.max_y - extent.min_y) + 2.0 * pad_y;
    // the content group is mirrored with scale(1,-1), so flip the y-window
    let view_x = extent.min_x - pad_x;
    let view_y = -(extent.max_y + pad_y);

    let px_w = 900.0;
    let px_h = (px_w * view_h / view_w).round().max(1.0);
    let scale = cfg.reference_size.max(view_w / 40.0);
    let outline_w = 0.012 * scale;
    let spoke_w = 0.006 * scale;
    let dot_r = 0.015 * scale;

    writeln!(sink, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        sink,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{view_x} {view_y} {view_w} {view_h}" width="{px_w}" height="{px_h}">"#
    )?;
    writeln!(sink, r#"  <g transform="scale(1 -1)">"#)?;

    writeln!(
        sink,
        r##"    <g fill="none" stroke="#444444" stroke-width="{outline_w}">"##
    )?;
    for (spec, center, corners) in &cells {
        let d: Vec<String> = corners
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{}{} {}", if i == 0 { "M" } else { "L" }, c.x, c.y))
            .collect();
        writeln!(sink, r#"      <path d="{} Z"/>"#, d.join(" "))?;
        let sectors = spec.sectoring.count();
        if sectors > 1 {
            for s in 1..=sectors {
                let angle = spec.sectoring.sector_angle(s).expect("id in range");
                let tip = Point::new(spec.size, 0.0)
                    .rotated(angle)
                    .translated(*center);
                writeln!(
                    sink,
                    r##"      <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#999999" stroke-width="{spoke_w}"/>"##,
                    center.x, center.y, tip.x, tip.y
                )?;
            }
        }
    }
    writeln!(sink, r#"    </g>"#)?;

    writeln!(sink, r##"    <g fill="#1f6fb4" fill-opacity="0.55">"##)?;
    for lp in points {
        writeln!(
            sink,
            r#"      <circle cx="{}" cy="{}" r="{dot_r}"/>"#,
            lp.p.x, lp.p.y
        )?;
    }
    writeln!(sink, r#"    </g>"#)?;

    writeln!(sink, r#"  </g>"#)?;
    writeln!(sink, r#"</svg>"#)
}

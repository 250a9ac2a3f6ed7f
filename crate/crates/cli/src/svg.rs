//! Hand-rolled SVG 1.1 rendering of a wall-and-chamber picture in the
//! `(s, t)` upper half plane: candidate walls as semicircles on the
//! s-axis, degenerate walls as ticks, the vertical wall as a line, and
//! the chosen wall highlighted. Coordinates are printed with six
//! decimals, so the output is deterministic for given input data.

use std::fmt::Write as _;

use k3nef_core::bridgeland::WallAnalysis;
use k3nef_core::ratio::to_f64;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 360.0;
const MARGIN: f64 = 48.0;

fn fmt(x: f64) -> String {
    format!("{x:.6}")
}

struct Frame {
    s_lo: f64,
    s_hi: f64,
    t_hi: f64,
}

impl Frame {
    fn x(&self, s: f64) -> f64 {
        MARGIN + (s - self.s_lo) / (self.s_hi - self.s_lo) * (WIDTH - 2.0 * MARGIN)
    }

    fn y(&self, t: f64) -> f64 {
        HEIGHT - MARGIN - t / self.t_hi * (HEIGHT - 2.0 * MARGIN)
    }

    fn sx(&self, ds: f64) -> f64 {
        ds / (self.s_hi - self.s_lo) * (WIDTH - 2.0 * MARGIN)
    }

    fn sy(&self, dt: f64) -> f64 {
        dt / self.t_hi * (HEIGHT - 2.0 * MARGIN)
    }
}

fn semicircle(frame: &Frame, center: f64, radius: f64, class: &str, out: &mut String) {
    let x1 = frame.x(center - radius);
    let x2 = frame.x(center + radius);
    let y0 = frame.y(0.0);
    let rx = frame.sx(radius);
    let ry = frame.sy(radius);
    let _ = writeln!(
        out,
        r#"  <path class="{class}" d="M {} {} A {} {} 0 0 1 {} {}" fill="none"/>"#,
        fmt(x1),
        fmt(y0),
        fmt(rx),
        fmt(ry),
        fmt(x2),
        fmt(y0),
    );
}

fn tick(frame: &Frame, s: f64, class: &str, out: &mut String) {
    let x = frame.x(s);
    let y0 = frame.y(0.0);
    let _ = writeln!(
        out,
        r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        fmt(x),
        fmt(y0 - 5.0),
        fmt(x),
        fmt(y0 + 5.0),
    );
}

/// Renders the full analysis to an SVG document string.
pub fn walls_svg(analysis: &WallAnalysis) -> String {
    // World bounds from the data, with padding.
    let mut s_lo = f64::INFINITY;
    let mut s_hi = f64::NEG_INFINITY;
    let mut t_hi: f64 = 0.0;
    let mut extend = |s: f64| {
        s_lo = s_lo.min(s);
        s_hi = s_hi.max(s);
    };
    for cand in &analysis.candidates {
        let c = to_f64(&cand.wall.center);
        let r = to_f64(&cand.wall.radius_sq).max(0.0).sqrt();
        extend(c - r);
        extend(c + r);
        t_hi = t_hi.max(r);
    }
    extend(to_f64(&analysis.vertical_s));
    extend(0.0);
    let pad = 0.5;
    let frame = Frame {
        s_lo: s_lo - pad,
        s_hi: s_hi + pad,
        t_hi: (t_hi * 1.15).max(1.0),
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt(WIDTH),
        fmt(HEIGHT),
        fmt(WIDTH),
        fmt(HEIGHT),
    );
    let _ = writeln!(
        out,
        r#"  <style>.axis{{stroke:#000;stroke-width:1}}.wall{{stroke:#888;stroke-width:1.5}}.chosen{{stroke:#c00;stroke-width:2}}.vertical{{stroke:#06c;stroke-width:1.5;stroke-dasharray:4 3}}.degenerate{{stroke:#888;stroke-width:1.5}}.label{{font:10px sans-serif;fill:#000}}</style>"#
    );
    // s-axis.
    let y0 = frame.y(0.0);
    let _ = writeln!(
        out,
        r#"  <line class="axis" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        fmt(frame.x(frame.s_lo)),
        fmt(y0),
        fmt(frame.x(frame.s_hi)),
        fmt(y0),
    );
    // Integer s labels.
    let lo = frame.s_lo.ceil() as i64;
    let hi = frame.s_hi.floor() as i64;
    for s in lo..=hi {
        tick(&frame, s as f64, "axis", &mut out);
        let _ = writeln!(
            out,
            r#"  <text class="label" x="{}" y="{}" text-anchor="middle">{}</text>"#,
            fmt(frame.x(s as f64)),
            fmt(y0 + 18.0),
            s,
        );
    }
    // Candidate walls (chosen drawn last, highlighted).
    let chosen = &analysis.chosen;
    for cand in &analysis.candidates {
        if cand == chosen {
            continue;
        }
        let c = to_f64(&cand.wall.center);
        if cand.wall.is_degenerate() {
            tick(&frame, c, "degenerate", &mut out);
        } else {
            let r = to_f64(&cand.wall.radius_sq).sqrt();
            semicircle(&frame, c, r, "wall", &mut out);
        }
    }
    let c = to_f64(&chosen.wall.center);
    if chosen.wall.is_degenerate() {
        tick(&frame, c, "chosen", &mut out);
    } else {
        let r = to_f64(&chosen.wall.radius_sq).sqrt();
        semicircle(&frame, c, r, "chosen", &mut out);
    }
    // Vertical wall.
    let v = to_f64(&analysis.vertical_s);
    let _ = writeln!(
        out,
        r#"  <line class="vertical" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        fmt(frame.x(v)),
        fmt(y0),
        fmt(frame.x(v)),
        fmt(frame.y(frame.t_hi)),
    );
    let _ = writeln!(
        out,
        r#"  <text class="label" x="{}" y="{}">walls: gray = candidates, red = chosen, dashed = vertical</text>"#,
        fmt(MARGIN),
        fmt(MARGIN / 2.0),
    );
    out.push_str("</svg>\n");
    out
}

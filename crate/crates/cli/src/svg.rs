//! Heatmap rendering: one rectangle per grid cell, log-scaled colour ramp,
//! point markers and a colour bar.

use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Circle,
    Square,
    Cross,
}

#[derive(Debug, Clone)]
pub struct PointMarker {
    pub label: String,
    pub at: [f64; 2],
    pub shape: Shape,
}

pub struct Heatmap<'a> {
    pub title: &'a str,
    pub x_label: &'a str,
    pub y_label: &'a str,
    pub x_range: [f64; 2],
    pub y_range: [f64; 2],
    pub nx: usize,
    pub ny: usize,
    /// `values[iy * nx + ix]`; `None` marks a masked cell.
    pub values: &'a [Option<f64>],
    pub markers: &'a [PointMarker],
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 70.0;
const MASK: &str = "#c8c8c8";

// viridis, sampled at five stops
const RAMP: [(f64, f64, f64); 5] = [
    (68.0, 1.0, 84.0),
    (59.0, 82.0, 139.0),
    (33.0, 145.0, 140.0),
    (94.0, 201.0, 98.0),
    (253.0, 231.0, 37.0),
];

fn colour(t: f64) -> String {
    let t = t.clamp(0.0, 1.0) * (RAMP.len() - 1) as f64;
    let i = (t.floor() as usize).min(RAMP.len() - 2);
    let f = t - i as f64;
    let (a, b) = (RAMP[i], RAMP[i + 1]);
    let mix = |u: f64, v: f64| (u + (v - u) * f).round() as u8;
    format!("#{:02x}{:02x}{:02x}", mix(a.0, b.0), mix(a.1, b.1), mix(a.2, b.2))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    nx: usize,
    ny: usize,
    cw: f64,
    ch: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        let u = if self.nx > 1 { (x - self.x0) / (self.x1 - self.x0) * (self.nx - 1) as f64 } else { 0.0 };
        LEFT + (u + 0.5) * self.cw
    }

    fn py(&self, y: f64) -> f64 {
        let v = if self.ny > 1 { (y - self.y0) / (self.y1 - self.y0) * (self.ny - 1) as f64 } else { 0.0 };
        TOP + (self.ny as f64 - 0.5 - v) * self.ch
    }
}

pub fn render(h: &Heatmap) -> String {
    let pw = WIDTH - LEFT - RIGHT;
    let ph = HEIGHT - TOP - BOTTOM;
    let frame = Frame {
        x0: h.x_range[0],
        x1: h.x_range[1],
        y0: h.y_range[0],
        y1: h.y_range[1],
        nx: h.nx,
        ny: h.ny,
        cw: pw / h.nx.max(1) as f64,
        ch: ph / h.ny.max(1) as f64,
    };
    let logs: Vec<Option<f64>> = h.values.iter().map(|v| v.filter(|x| *x > 0.0 && x.is_finite()).map(f64::log10)).collect();
    let lo = logs.iter().flatten().copied().fold(f64::INFINITY, f64::min);
    let hi = logs.iter().flatten().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = if hi > lo { hi - lo } else { 1.0 };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(s, r#"<text x="{:.1}" y="28" text-anchor="middle" font-size="15">{}</text>"#, LEFT + pw / 2.0, escape(h.title));
    let _ = writeln!(s, r#"<g shape-rendering="crispEdges">"#);
    for iy in 0..h.ny {
        for ix in 0..h.nx {
            let idx = iy * h.nx + ix;
            let fill = match h.values.get(idx).copied().flatten() {
                None => MASK.to_string(),
                Some(_) => match logs[idx] {
                    Some(l) => colour((l - lo) / span),
                    None => colour(0.0),
                },
            };
            let x = LEFT + ix as f64 * frame.cw;
            let y = TOP + (h.ny - 1 - iy) as f64 * frame.ch;
            let _ = writeln!(
                s,
                r#"<rect x="{x:.3}" y="{y:.3}" width="{:.3}" height="{:.3}" fill="{fill}"/>"#,
                frame.cw + 0.05,
                frame.ch + 0.05
            );
        }
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<rect x="{LEFT}" y="{TOP}" width="{pw:.3}" height="{ph:.3}" fill="none" stroke="black"/>"#);

    for t in 0..=4 {
        let f = t as f64 / 4.0;
        let xv = frame.x0 + f * (frame.x1 - frame.x0);
        let yv = frame.y0 + f * (frame.y1 - frame.y0);
        let (xp, yp) = (frame.px(xv), frame.py(yv));
        let _ = writeln!(s, r#"<line x1="{xp:.3}" y1="{:.3}" x2="{xp:.3}" y2="{:.3}" stroke="black"/>"#, TOP + ph, TOP + ph + 5.0);
        let _ = writeln!(s, r#"<text x="{xp:.3}" y="{:.3}" text-anchor="middle">{xv:.3}</text>"#, TOP + ph + 20.0);
        let _ = writeln!(s, r#"<line x1="{:.3}" y1="{yp:.3}" x2="{LEFT}" y2="{yp:.3}" stroke="black"/>"#, LEFT - 5.0);
        let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" text-anchor="end">{yv:.3}</text>"#, LEFT - 8.0, yp + 4.0);
    }
    let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#, LEFT + pw / 2.0, HEIGHT - 22.0, escape(h.x_label));
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.1}" text-anchor="middle" transform="rotate(-90 20 {:.1})">{}</text>"#,
        TOP + ph / 2.0,
        TOP + ph / 2.0,
        escape(h.y_label)
    );

    for m in h.markers {
        let (x, y) = (frame.px(m.at[0]), frame.py(m.at[1]));
        let label = escape(&m.label);
        match m.shape {
            Shape::Circle => {
                let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="6" fill="white" stroke="black" stroke-width="2"><title>{label}</title></circle>"#);
            }
            Shape::Square => {
                let _ = writeln!(
                    s,
                    r#"<rect x="{:.3}" y="{:.3}" width="11" height="11" fill="none" stroke="white" stroke-width="2.5"><title>{label}</title></rect>"#,
                    x - 5.5,
                    y - 5.5
                );
            }
            Shape::Cross => {
                let _ = writeln!(
                    s,
                    r#"<path d="M{:.3} {:.3}L{:.3} {:.3}M{:.3} {:.3}L{:.3} {:.3}" stroke="red" stroke-width="2.5"><title>{label}</title></path>"#,
                    x - 5.0,
                    y - 5.0,
                    x + 5.0,
                    y + 5.0,
                    x - 5.0,
                    y + 5.0,
                    x + 5.0,
                    y - 5.0
                );
            }
        }
    }

    let bx = LEFT + pw + 30.0;
    let steps = 64;
    let bh = ph / steps as f64;
    for i in 0..steps {
        let t = i as f64 / (steps - 1) as f64;
        let y = TOP + ph - (i + 1) as f64 * bh;
        let _ = writeln!(s, r#"<rect x="{bx:.1}" y="{y:.3}" width="18" height="{:.3}" fill="{}"/>"#, bh + 0.05, colour(t));
    }
    if hi >= lo {
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}">1e{hi:.2}</text>"#, bx + 24.0, TOP + 10.0);
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}">1e{lo:.2}</text>"#, bx + 24.0, TOP + ph);
    } else {
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}">all masked</text>"#, bx + 24.0, TOP + 10.0);
    }
    let _ = writeln!(s, r#"<rect x="{bx:.1}" y="{:.1}" width="18" height="12" fill="{MASK}"/>"#, TOP + ph + 20.0);
    let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}">infeasible</text>"#, bx + 24.0, TOP + ph + 30.0);
    s.push_str("</svg>\n");
    s
}

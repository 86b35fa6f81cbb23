//! SVG drawings of diagrams.
//!
//! Sites sit evenly on the circle, site 0 at the top and the rest following
//! counterclockwise. Chords are straight segments, cross chords and cross T
//! edges carry an `X`, the marked arc is drawn bold. A T-graph is drawn as the
//! chord between its side ends plus a segment from that chord's midpoint to the
//! lower end.

use std::f64::consts::PI;
use std::fmt::Write as _;

use sfa_core::{ChordColor, Diagram, Direction, Site};

const SIZE: f64 = 400.0;
const CX: f64 = 200.0;
const CY: f64 = 215.0;
const R: f64 = 150.0;

#[derive(Clone, Copy)]
struct Point {
    x: f64,
    y: f64,
}

impl Point {
    fn mid(self, other: Point) -> Point {
        Point {
            x: (self.x + other.x) / 2.0,
            y: (self.y + other.y) / 2.0,
        }
    }
}

fn angle(i: usize, m: usize) -> f64 {
    PI / 2.0 + 2.0 * PI * i as f64 / m as f64
}

fn at(theta: f64, r: f64) -> Point {
    Point {
        x: CX + r * theta.cos(),
        y: CY - r * theta.sin(),
    }
}

/// Two decimals, with `-0.00` folded into `0.00`.
fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn line(out: &mut String, a: Point, b: Point, class: &str) {
    let _ = writeln!(
        out,
        r#"  <line class="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        class,
        num(a.x),
        num(a.y),
        num(b.x),
        num(b.y)
    );
}

fn cross_mark(out: &mut String, p: Point) {
    let _ = writeln!(
        out,
        r#"  <text class="x" x="{}" y="{}">X</text>"#,
        num(p.x),
        num(p.y + 5.0)
    );
}

fn segment(out: &mut String, a: Point, b: Point, color: ChordColor, class: &str) {
    line(out, a, b, class);
    if color.is_cross() {
        cross_mark(out, a.mid(b));
    }
}

/// Draws the diagram in the orientation of its canonical code, so isomorphic
/// diagrams give identical output.
pub fn render(d: &Diagram) -> String {
    let code = d.canonical_code();
    let canonical = code.to_diagram();
    let d = &canonical;
    let title = code.compact().unwrap_or_else(|| code.to_string());
    let arr = d.arrangement();
    let m = arr.len();
    let labels = site_labels(d);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        SIZE
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(&title));
    out.push_str(concat!(
        "  <style>\n",
        "    .circle { fill: none; stroke: #000; stroke-width: 1.5; }\n",
        "    .arc { fill: none; stroke: #000; stroke-width: 5; }\n",
        "    .chord, .t { stroke: #000; stroke-width: 1.5; }\n",
        "    .t { stroke-width: 2.5; }\n",
        "    .x { font: bold 14px sans-serif; text-anchor: middle; }\n",
        "    .label, .caption { font: 13px sans-serif; text-anchor: middle; }\n",
        "  </style>\n",
    ));
    let _ = writeln!(
        out,
        r#"  <text class="caption" x="{}" y="24">{}</text>"#,
        num(CX),
        escape(&title)
    );
    let _ = writeln!(
        out,
        r#"  <circle class="circle" cx="{}" cy="{}" r="{}"/>"#,
        num(CX),
        num(CY),
        num(R)
    );

    let point = |i: usize| at(angle(i, m), R);
    if let Diagram::Sn(c) = d {
        let (s, e) = (0, c.arc_end());
        let sweep = 2.0 * PI * (e - s) as f64 / m as f64;
        let (a, b) = (point(s), point(e));
        let _ = writeln!(
            out,
            r#"  <path class="arc" d="M {} {} A {} {} 0 {} 0 {} {}"/>"#,
            num(a.x),
            num(a.y),
            num(R),
            num(R),
            u8::from(sweep > PI),
            num(b.x),
            num(b.y)
        );
    }

    for i in 0..m {
        if let Site::Chord(c) = arr.sites()[i] {
            let j = arr.partner(i).unwrap();
            if i < j {
                segment(&mut out, point(i), point(j), d.chord_color(c), "chord");
            }
        }
    }

    if let Diagram::Sc(t) = d {
        let edges = t.edges();
        let lower = point(0);
        let (a, b) = (point(t.side_a()), point(t.side_b()));
        let foot = a.mid(b);
        segment(&mut out, foot, a, edges.side_a, "t");
        segment(&mut out, foot, b, edges.side_b, "t");
        segment(&mut out, foot, lower, edges.lower, "t");
    }

    for (i, label) in labels.iter().enumerate() {
        let p = at(angle(i, m), R + 18.0);
        let _ = writeln!(
            out,
            r#"  <text class="label" x="{}" y="{}">{}</text>"#,
            num(p.x),
            num(p.y + 5.0),
            escape(label)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Code token at each site, read counterclockwise. The arc start, which has no
/// token, is labelled `*`.
fn site_labels(d: &Diagram) -> Vec<String> {
    let code = sfa_core::emit_code(d, Direction::Counterclockwise);
    let mut tokens = code.tokens().iter().map(|t| t.to_string());
    d.arrangement()
        .sites()
        .iter()
        .map(|s| match s {
            Site::ArcStart => "*".to_string(),
            _ => tokens.next().unwrap_or_default(),
        })
        .collect()
}

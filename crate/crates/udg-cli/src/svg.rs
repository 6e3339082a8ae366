//! Plain SVG 1.1 renderings of instances, trees, and separating cycles.
//!
//! No styling beyond presentation attributes, so the files open anywhere.
//! The coordinate frame is flipped so y grows upward like the instances.

use std::fmt::Write;

use udg::datagen::Instance;
use udg::geom::Point;
use udg::sssp::UNREACHED;

use crate::results::{CycleFile, TreeFile};

/// Pixels per unit of instance space.
const SCALE: f64 = 40.0;
/// Margin in instance units; covers half-unit disks with room to spare.
const MARGIN: f64 = 1.2;

const PALETTE: [&str; 7] =
    ["#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377", "#994455"];

struct Canvas {
    min: Point,
    max_y: f64,
    width: f64,
    height: f64,
    body: String,
}

impl Canvas {
    fn over(points: &[Point], extra: &[Point]) -> Canvas {
        let all = points.iter().chain(extra);
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in all {
            min = Point::new(min.x.min(p.x), min.y.min(p.y));
            max = Point::new(max.x.max(p.x), max.y.max(p.y));
        }
        if !min.x.is_finite() {
            min = Point::new(0.0, 0.0);
            max = Point::new(1.0, 1.0);
        }
        let min = Point::new(min.x - MARGIN, min.y - MARGIN);
        let max = Point::new(max.x + MARGIN, max.y + MARGIN);
        Canvas {
            min,
            max_y: max.y,
            width: ((max.x - min.x) * SCALE).ceil(),
            height: ((max.y - min.y) * SCALE).ceil(),
            body: String::new(),
        }
    }

    fn x(&self, p: Point) -> f64 {
        (p.x - self.min.x) * SCALE
    }

    fn y(&self, p: Point) -> f64 {
        (self.max_y - p.y) * SCALE
    }

    fn circle(&mut self, p: Point, r: f64, attrs: &str) {
        let (x, y) = (self.x(p), self.y(p));
        let _ = writeln!(self.body, r##"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}" {attrs}/>"##);
    }

    fn disk(&mut self, p: Point, color: &str) {
        self.circle(
            p,
            0.5 * SCALE,
            &format!(r##"fill="{color}" fill-opacity="0.10" stroke="{color}" stroke-opacity="0.25""##),
        );
    }

    fn line(&mut self, a: Point, b: Point, attrs: &str) {
        let _ = writeln!(
            self.body,
            r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {attrs}/>"##,
            self.x(a),
            self.y(a),
            self.x(b),
            self.y(b)
        );
    }

    fn label(&mut self, p: Point, text: &str, color: &str) {
        let _ = writeln!(
            self.body,
            r##"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="13" fill="{color}">{text}</text>"##,
            self.x(p) + 7.0,
            self.y(p) - 7.0
        );
    }

    fn terminals(&mut self, s: Point, t: Point) {
        self.circle(s, 4.5, r##"fill="#228833" stroke="#ffffff" stroke-width="1.5""##);
        self.circle(t, 4.5, r##"fill="#ee6677" stroke="#ffffff" stroke-width="1.5""##);
        self.label(s, "s", "#228833");
        self.label(t, "t", "#ee6677");
    }

    fn finish(self, title: &str) -> String {
        format!(
            concat!(
                r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" "##,
                r##"width="{w}" height="{h}" viewBox="0 0 {w} {h}">"##,
                "\n<title>{title}</title>\n",
                r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##,
                "\n{body}</svg>\n"
            ),
            w = self.width,
            h = self.height,
            title = title,
            body = self.body
        )
    }
}

pub fn render_instance(inst: &Instance, disks: bool) -> String {
    let mut c = Canvas::over(&inst.points, &[inst.s, inst.t]);
    if disks {
        for &p in &inst.points {
            c.disk(p, "#4477aa");
        }
    }
    for &p in &inst.points {
        c.circle(p, 2.0, r##"fill="#555555""##);
    }
    c.terminals(inst.s, inst.t);
    c.finish(&format!("{} points", inst.points.len()))
}

pub fn render_tree(file: &TreeFile, disks: bool) -> String {
    let inst = &file.instance;
    let tree = &file.tree;
    let mut c = Canvas::over(&inst.points, &[inst.s, inst.t]);
    if disks {
        for (i, &p) in inst.points.iter().enumerate() {
            if tree.dist[i] != UNREACHED {
                c.disk(p, "#4477aa");
            }
        }
    }
    for (i, &p) in inst.points.iter().enumerate() {
        if let Some(w) = tree.parent[i] {
            let color = PALETTE[tree.dist[i] as usize % PALETTE.len()];
            c.line(p, inst.points[w as usize], &format!(r##"stroke="{color}" stroke-width="1.5""##));
        }
    }
    for (i, &p) in inst.points.iter().enumerate() {
        let attrs = if tree.dist[i] == UNREACHED {
            r##"fill="#cccccc""##
        } else {
            r##"fill="#555555""##
        };
        c.circle(p, 2.0, attrs);
    }
    let root = inst.points[tree.root as usize];
    c.circle(root, 6.0, r##"fill="none" stroke="#000000" stroke-width="2""##);
    c.label(root, "root", "#000000");
    c.terminals(inst.s, inst.t);
    c.finish(&format!("shortest-path tree from point {}", tree.root))
}

pub fn render_cycle(file: &CycleFile, disks: bool) -> String {
    let inst = &file.instance;
    let mut c = Canvas::over(&inst.points, &[inst.s, inst.t]);
    if disks {
        for (i, &p) in inst.points.iter().enumerate() {
            if file.members[i] {
                c.disk(p, "#4477aa");
            }
        }
    }
    if let Some(a) = &file.answer {
        let (p, q) = a.edge;
        c.line(
            inst.points[p as usize],
            inst.points[q as usize],
            r##"stroke="#ee6677" stroke-width="2.5" stroke-dasharray="6 3""##,
        );
    }
    for (i, &p) in inst.points.iter().enumerate() {
        if file.members[i] {
            c.circle(p, 3.5, r##"fill="#4477aa""##);
        } else {
            c.circle(p, 1.8, r##"fill="#bbbbbb""##);
        }
    }
    c.terminals(inst.s, inst.t);
    let title = match &file.answer {
        Some(a) => format!("separating set of {} disks", a.size),
        None => "terminals cannot be separated".to_string(),
    };
    c.finish(&title)
}

#[cfg(test)]
mod tests {
    use super::*;
    use udg::sssp::ShortestPathResult;

    fn tiny() -> Instance {
        Instance {
            points: vec![Point::new(0.0, 0.6), Point::new(0.3, -0.4)],
            s: Point::new(0.0, 0.0),
            t: Point::new(0.0, 2.0),
        }
    }

    #[test]
    fn renders_are_wellformed_svg() {
        let inst = tiny();
        for disks in [false, true] {
            let svg = render_instance(&inst, disks);
            assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""));
            assert!(svg.trim_end().ends_with("</svg>"));
            assert_eq!(svg.matches("<circle").count() >= 4, true);
        }
        let tree = TreeFile {
            instance: tiny(),
            tree: ShortestPathResult {
                root: 0,
                dist: vec![0, 1],
                parent: vec![None, Some(0)],
            },
        };
        let svg = render_tree(&tree, true);
        assert!(svg.contains("<line"));
        assert!(svg.contains("root"));

        let cycle = CycleFile {
            instance: tiny(),
            answer: Some(crate::results::CycleAnswer { size: 2, root: 0, edge: (0, 1) }),
            members: vec![true, true],
        };
        let svg = render_cycle(&cycle, true);
        assert!(svg.contains("stroke-dasharray"));
    }

    #[test]
    fn empty_instance_still_renders() {
        let inst = Instance {
            points: Vec::new(),
            s: Point::new(0.0, 0.0),
            t: Point::new(0.0, 1.0),
        };
        let svg = render_instance(&inst, false);
        assert!(svg.contains("</svg>"));
    }
}

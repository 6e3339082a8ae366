//! Instance generation and the instance file format.
//!
//! An instance is a point set plus two terminals. Points are sampled
//! uniformly from an axis-aligned rectangle with zero or more rectangular
//! holes punched out; the first terminal s sits at the centre of the
//! first hole (or of the rectangle when there are none), and t sits one
//! unit above the rectangle's top edge at the same x, so no cycle through
//! generated points can ever enclose it. Samples falling inside a hole or
//! close enough to a terminal to cover it (distance <= 1/2) are rejected,
//! keeping the separation problem well-posed on every generated instance.
//!
//! [`add_strip_clutter`] densifies a width-1 vertical strip around the
//! st segment with extra points, drawn from a separate stream of the same
//! generator so base points and clutter never collide for equal seeds.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{dist_sq, Point};

/// Hole layout of a generated domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HoleStyle {
    /// Solid rectangle.
    None,
    /// One hole of w/8 x h/8 at the centre.
    Small1,
    /// One hole of w/2 x h/2 at the centre.
    Large1,
    /// Four holes of w/8 x h/8 centred at (±w/4, ±h/4) from the centre.
    Small4,
    /// Four holes of w/4 x h/4 centred at (±w/4, ±h/4) from the centre.
    Large4,
}

impl HoleStyle {
    pub const ALL: [HoleStyle; 5] =
        [HoleStyle::None, HoleStyle::Small1, HoleStyle::Large1, HoleStyle::Small4, HoleStyle::Large4];
}

impl fmt::Display for HoleStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HoleStyle::None => "none",
            HoleStyle::Small1 => "small1",
            HoleStyle::Large1 => "large1",
            HoleStyle::Small4 => "small4",
            HoleStyle::Large4 => "large4",
        })
    }
}

impl FromStr for HoleStyle {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "none" => HoleStyle::None,
            "small1" => HoleStyle::Small1,
            "large1" => HoleStyle::Large1,
            "small4" => HoleStyle::Small4,
            "large4" => HoleStyle::Large4,
            other => return Err(format!("unknown hole style `{other}`")),
        })
    }
}

/// Closed axis-aligned rectangle; holes use its open interior.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    pub fn contains_open(&self, p: Point) -> bool {
        p.x > self.x0 && p.x < self.x1 && p.y > self.y0 && p.y < self.y1
    }

    pub fn center(&self) -> Point {
        Point::new((self.x0 + self.x1) / 2.0, (self.y0 + self.y1) / 2.0)
    }

    fn centered(c: Point, w: f64, h: f64) -> Rect {
        Rect { x0: c.x - w / 2.0, y0: c.y - h / 2.0, x1: c.x + w / 2.0, y1: c.y + h / 2.0 }
    }

    fn inside(&self, outer: &Rect) -> bool {
        self.x0 > outer.x0 && self.y0 > outer.y0 && self.x1 < outer.x1 && self.y1 < outer.y1
    }

    fn overlaps(&self, other: &Rect) -> bool {
        self.x0 < other.x1 && other.x0 < self.x1 && self.y0 < other.y1 && other.y0 < self.y1
    }
}

/// A sampling domain: the rectangle [0,w] x [0,h], its holes, and the
/// terminal pair derived from them.
#[derive(Clone, Debug, PartialEq)]
pub struct DomainSpec {
    pub width: f64,
    pub height: f64,
    pub holes: Vec<Rect>,
    pub s: Point,
    pub t: Point,
}

impl DomainSpec {
    /// Dimensions must be positive and finite, holes strictly inside the
    /// rectangle and pairwise disjoint.
    pub fn validate(&self) -> Result<()> {
        if !(self.width > 0.0 && self.height > 0.0)
            || !self.width.is_finite()
            || !self.height.is_finite()
        {
            return Err(Error::InvalidDimensions(format!(
                "domain {} x {} is not a positive rectangle",
                self.width, self.height
            )));
        }
        let outer = Rect { x0: 0.0, y0: 0.0, x1: self.width, y1: self.height };
        for (i, h) in self.holes.iter().enumerate() {
            if !(h.x0 < h.x1 && h.y0 < h.y1) || !h.inside(&outer) {
                return Err(Error::InvalidDimensions(format!(
                    "hole {i} does not fit strictly inside the domain"
                )));
            }
            for (j, g) in self.holes.iter().enumerate().take(i) {
                if h.overlaps(g) {
                    return Err(Error::InvalidDimensions(format!("holes {j} and {i} overlap")));
                }
            }
        }
        Ok(())
    }
}

/// Default 16 x 4 domain.
pub fn make_domain(style: HoleStyle) -> DomainSpec {
    make_domain_sized(style, 16.0, 4.0).expect("default dimensions are valid")
}

/// Build the domain for `style` over the rectangle [0,width] x [0,height].
/// s sits at the first hole's centre (the rectangle's centre for
/// [`HoleStyle::None`]); t sits at (s.x, height + 1).
pub fn make_domain_sized(style: HoleStyle, width: f64, height: f64) -> Result<DomainSpec> {
    let c = Point::new(width / 2.0, height / 2.0);
    let quad = [(-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0), (1.0, 1.0)];
    let four = |w: f64, h: f64| -> Vec<Rect> {
        quad.iter()
            .map(|&(sx, sy)| {
                Rect::centered(Point::new(c.x + sx * width / 4.0, c.y + sy * height / 4.0), w, h)
            })
            .collect()
    };
    let holes = match style {
        HoleStyle::None => Vec::new(),
        HoleStyle::Small1 => vec![Rect::centered(c, width / 8.0, height / 8.0)],
        HoleStyle::Large1 => vec![Rect::centered(c, width / 2.0, height / 2.0)],
        HoleStyle::Small4 => four(width / 8.0, height / 8.0),
        HoleStyle::Large4 => four(width / 4.0, height / 4.0),
    };
    let s = holes.first().map_or(c, |h| h.center());
    let spec = DomainSpec { width, height, holes, s, t: Point::new(s.x, height + 1.0) };
    spec.validate()?;
    Ok(spec)
}

/// A problem instance: the point set and the two terminals.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub points: Vec<Point>,
    pub s: Point,
    pub t: Point,
}

/// An instance together with how it was generated.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedInstance {
    pub instance: Instance,
    pub style_label: String,
    pub width: f64,
    pub height: f64,
    pub seed: u64,
    /// How many of the points are strip clutter (always at the tail).
    pub clutter: usize,
}

impl GeneratedInstance {
    /// Instance file text with the generation parameters as comments.
    pub fn to_text(&self) -> String {
        let comment = format!(
            "style={} width={} height={} seed={} clutter={}",
            self.style_label, self.width, self.height, self.seed, self.clutter
        );
        format_instance(&self.instance, &[&comment])
    }
}

fn acceptable(spec: &DomainSpec, p: Point) -> bool {
    !spec.holes.iter().any(|h| h.contains_open(p))
        && dist_sq(p, spec.s) > 0.25
        && dist_sq(p, spec.t) > 0.25
}

fn sample(spec: &DomainSpec, rng: &mut ChaCha8Rng, out: &mut Vec<Point>, k: usize, strip: bool) -> Result<()> {
    let mut attempts = 0usize;
    let limit = 1000 * k + 1000;
    let target = out.len() + k;
    while out.len() < target {
        if attempts >= limit {
            return Err(Error::InvalidDimensions(
                "rejection sampling stalled; the domain leaves almost no room".into(),
            ));
        }
        attempts += 1;
        let p = if strip {
            Point::new(
                rng.gen_range(spec.s.x - 0.5..spec.s.x + 0.5),
                rng.gen_range(spec.s.y..spec.t.y),
            )
        } else {
            Point::new(rng.gen_range(0.0..spec.width), rng.gen_range(0.0..spec.height))
        };
        if acceptable(spec, p) {
            out.push(p);
        }
    }
    Ok(())
}

/// Sample `n` points uniformly from the domain (holes and the terminals'
/// covering disks excluded) with a deterministic generator.
pub fn generate(spec: &DomainSpec, n: usize, seed: u64) -> Result<GeneratedInstance> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    sample(spec, &mut rng, &mut points, n, false)?;
    Ok(GeneratedInstance {
        instance: Instance { points, s: spec.s, t: spec.t },
        style_label: if spec.holes.is_empty() { "none".into() } else { format!("{}holes", spec.holes.len()) },
        width: spec.width,
        height: spec.height,
        seed,
        clutter: 0,
    })
}

/// Append `k` clutter points in the width-1 vertical strip spanning the
/// st segment, subject to the same rejection rules. Stream 1 of the seed
/// keeps clutter independent of the base sample.
pub fn add_strip_clutter(
    spec: &DomainSpec,
    g: &mut GeneratedInstance,
    k: usize,
    seed: u64,
) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    sample(spec, &mut rng, &mut g.instance.points, k, true)?;
    g.clutter += k;
    Ok(())
}

/// Serialise an instance:
///
/// ```text
/// udg 1
/// # any comments
/// n <count>
/// s <x> <y>
/// t <x> <y>
/// <x> <y>    one line per point
/// ```
///
/// Coordinates print in shortest round-trip form, so
/// [`parse_instance`] recovers them bit-exactly.
pub fn format_instance(inst: &Instance, comments: &[&str]) -> String {
    use fmt::Write;
    let mut out = String::new();
    out.push_str("udg 1\n");
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "n {}", inst.points.len());
    let _ = writeln!(out, "s {} {}", inst.s.x, inst.s.y);
    let _ = writeln!(out, "t {} {}", inst.t.x, inst.t.y);
    for p in &inst.points {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

/// Parse the format written by [`format_instance`]. Comment lines
/// (`# ...`) and blank lines are allowed anywhere.
pub fn parse_instance(text: &str) -> Result<Instance> {
    enum Expect {
        Header,
        Count,
        S,
        T,
        Points,
    }
    let fail = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
    let coord = |line: usize, tok: &str| -> Result<f64> {
        let v: f64 =
            tok.parse().map_err(|_| fail(line, &format!("bad coordinate `{tok}`")))?;
        if !v.is_finite() {
            return Err(fail(line, "non-finite coordinate"));
        }
        Ok(v)
    };
    let pair = |line: usize, toks: &[&str]| -> Result<Point> {
        if toks.len() != 2 {
            return Err(fail(line, "expected two coordinates"));
        }
        Ok(Point::new(coord(line, toks[0])?, coord(line, toks[1])?))
    };

    let mut state = Expect::Header;
    let mut n = 0usize;
    let mut s = None;
    let mut t = None;
    let mut points = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match state {
            Expect::Header => {
                if toks != ["udg", "1"] {
                    return Err(fail(line, "expected header `udg 1`"));
                }
                state = Expect::Count;
            }
            Expect::Count => {
                if toks.len() != 2 || toks[0] != "n" {
                    return Err(fail(line, "expected `n <count>`"));
                }
                n = toks[1].parse().map_err(|_| fail(line, "bad point count"))?;
                points.reserve(n);
                state = Expect::S;
            }
            Expect::S => {
                if toks.first() != Some(&"s") {
                    return Err(fail(line, "expected `s <x> <y>`"));
                }
                s = Some(pair(line, &toks[1..])?);
                state = Expect::T;
            }
            Expect::T => {
                if toks.first() != Some(&"t") {
                    return Err(fail(line, "expected `t <x> <y>`"));
                }
                t = Some(pair(line, &toks[1..])?);
                state = Expect::Points;
            }
            Expect::Points => {
                if points.len() == n {
                    return Err(fail(line, "more than `n` point lines"));
                }
                points.push(pair(line, &toks)?);
            }
        }
    }
    match state {
        Expect::Points if points.len() == n => Ok(Instance {
            points,
            s: s.expect("set before points"),
            t: t.expect("set before points"),
        }),
        Expect::Points => Err(fail(
            last_line,
            &format!("expected {n} points, found {}", points.len()),
        )),
        _ => Err(fail(last_line, "truncated instance")),
    }
}

//! Result file formats for dumped trees and separating cycles.
//!
//! Both share the instance format's conventions: a versioned header line,
//! `#` comments and blank lines anywhere, whitespace-separated tokens.
//!
//! ```text
//! udg-tree 1                     udg-cycle 1
//! n <count>                      n <count>
//! s <x> <y>                      s <x> <y>
//! t <x> <y>                      t <x> <y>
//! root <idx>                     size <k> | infeasible
//! <x> <y> <dist> <parent>  x n   root <idx>        (only with size)
//!                                edge <p> <q>      (only with size)
//!                                <x> <y> <member>  x n
//! ```
//!
//! `dist` and `parent` use -1 for unreached points and for the root's
//! missing parent; `member` is 1 for points in the separating set.

use anyhow::{anyhow, bail, Context, Result};
use udg::datagen::{parse_instance, Instance};
use udg::geom::Point;
use udg::sssp::{ShortestPathResult, UNREACHED};

pub struct TreeFile {
    pub instance: Instance,
    pub tree: ShortestPathResult,
}

#[derive(Debug, PartialEq)]
pub struct CycleAnswer {
    pub size: u32,
    pub root: u32,
    pub edge: (u32, u32),
}

pub struct CycleFile {
    pub instance: Instance,
    /// `None` when the terminals cannot be separated.
    pub answer: Option<CycleAnswer>,
    /// Separating-set membership flag per point.
    pub members: Vec<bool>,
}

/// What a file's header says it holds.
pub enum AnyFile {
    Instance(Instance),
    Tree(TreeFile),
    Cycle(CycleFile),
}

fn header_of(text: &str) -> Option<&str> {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Parse a file as whatever its header declares.
pub fn parse_any(text: &str) -> Result<AnyFile> {
    match header_of(text) {
        Some("udg 1") => Ok(AnyFile::Instance(parse_instance(text)?)),
        Some(h) if h.starts_with("udg-tree") => Ok(AnyFile::Tree(parse_tree(text)?)),
        Some(h) if h.starts_with("udg-cycle") => Ok(AnyFile::Cycle(parse_cycle(text)?)),
        Some(h) => bail!("unrecognised header `{h}`"),
        None => bail!("empty file"),
    }
}

fn signed(v: u32) -> i64 {
    if v == UNREACHED {
        -1
    } else {
        v as i64
    }
}

pub fn format_tree(inst: &Instance, tree: &ShortestPathResult) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    out.push_str("udg-tree 1\n");
    let _ = writeln!(out, "n {}", inst.points.len());
    let _ = writeln!(out, "s {} {}", inst.s.x, inst.s.y);
    let _ = writeln!(out, "t {} {}", inst.t.x, inst.t.y);
    let _ = writeln!(out, "root {}", tree.root);
    for (i, p) in inst.points.iter().enumerate() {
        let parent = tree.parent[i].map_or(-1, |w| w as i64);
        let _ = writeln!(out, "{} {} {} {}", p.x, p.y, signed(tree.dist[i]), parent);
    }
    out
}

pub fn format_cycle(inst: &Instance, answer: Option<&CycleAnswer>, members: &[bool]) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    out.push_str("udg-cycle 1\n");
    let _ = writeln!(out, "n {}", inst.points.len());
    let _ = writeln!(out, "s {} {}", inst.s.x, inst.s.y);
    let _ = writeln!(out, "t {} {}", inst.t.x, inst.t.y);
    match answer {
        Some(a) => {
            let _ = writeln!(out, "size {}", a.size);
            let _ = writeln!(out, "root {}", a.root);
            let _ = writeln!(out, "edge {} {}", a.edge.0, a.edge.1);
        }
        None => out.push_str("infeasible\n"),
    }
    for (p, &m) in inst.points.iter().zip(members) {
        let _ = writeln!(out, "{} {} {}", p.x, p.y, u8::from(m));
    }
    out
}

/// Non-comment lines as token vectors, with their 1-based line numbers.
fn tokens(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let t = l.trim();
            if t.is_empty() || t.starts_with('#') {
                None
            } else {
                Some((i + 1, t.split_whitespace().collect()))
            }
        })
        .collect()
}

struct Lines<'a> {
    rows: Vec<(usize, Vec<&'a str>)>,
    at: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Result<(usize, &[&'a str])> {
        let row = self.rows.get(self.at).ok_or_else(|| anyhow!("truncated file"))?;
        self.at += 1;
        Ok((row.0, &row.1))
    }

    fn peek(&self) -> Option<&[&'a str]> {
        self.rows.get(self.at).map(|r| &r.1[..])
    }

    /// `tag v1 v2 ..` line with exactly `argc` parsed values.
    fn tagged<T: std::str::FromStr>(&mut self, tag: &str, argc: usize) -> Result<Vec<T>> {
        let (line, toks) = self.next()?;
        if toks.first() != Some(&tag) || toks.len() != argc + 1 {
            bail!("line {line}: expected `{tag}` with {argc} value(s)");
        }
        toks[1..]
            .iter()
            .map(|t| t.parse().map_err(|_| anyhow!("line {line}: bad value `{t}`")))
            .collect()
    }
}

fn common_prelude<'a>(text: &'a str, header: &str) -> Result<(Lines<'a>, usize, Point, Point)> {
    let mut lines = Lines { rows: tokens(text), at: 0 };
    let (line, toks) = lines.next()?;
    if toks != [header, "1"] {
        bail!("line {line}: expected header `{header} 1`");
    }
    let n = lines.tagged::<usize>("n", 1)?[0];
    let s = lines.tagged::<f64>("s", 2)?;
    let t = lines.tagged::<f64>("t", 2)?;
    Ok((lines, n, Point::new(s[0], s[1]), Point::new(t[0], t[1])))
}

pub fn parse_tree(text: &str) -> Result<TreeFile> {
    let (mut lines, n, s, t) = common_prelude(text, "udg-tree")?;
    let root = lines.tagged::<u32>("root", 1)?[0];
    let mut points = Vec::with_capacity(n);
    let mut dist = Vec::with_capacity(n);
    let mut parent = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, toks) = lines.next()?;
        let vals: Vec<f64> = toks
            .iter()
            .map(|t| t.parse().map_err(|_| anyhow!("line {line}: bad value `{t}`")))
            .collect::<Result<_>>()?;
        if vals.len() != 4 {
            bail!("line {line}: expected `x y dist parent`");
        }
        points.push(Point::new(vals[0], vals[1]));
        dist.push(if vals[2] < 0.0 { UNREACHED } else { vals[2] as u32 });
        parent.push(if vals[3] < 0.0 { None } else { Some(vals[3] as u32) });
    }
    Ok(TreeFile {
        instance: Instance { points, s, t },
        tree: ShortestPathResult { root, dist, parent },
    })
}

pub fn parse_cycle(text: &str) -> Result<CycleFile> {
    let (mut lines, n, s, t) = common_prelude(text, "udg-cycle")?;
    let answer = if lines.peek() == Some(&["infeasible"]) {
        lines.next()?;
        None
    } else {
        let size = lines.tagged::<u32>("size", 1)?[0];
        let root = lines.tagged::<u32>("root", 1)?[0];
        let e = lines.tagged::<u32>("edge", 2)?;
        Some(CycleAnswer { size, root, edge: (e[0], e[1]) })
    };
    let mut points = Vec::with_capacity(n);
    let mut members = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, toks) = lines.next().context("missing point lines")?;
        if toks.len() != 3 {
            bail!("line {line}: expected `x y member`");
        }
        let x: f64 = toks[0].parse().map_err(|_| anyhow!("line {line}: bad value"))?;
        let y: f64 = toks[1].parse().map_err(|_| anyhow!("line {line}: bad value"))?;
        members.push(match toks[2] {
            "0" => false,
            "1" => true,
            other => bail!("line {line}: member flag must be 0 or 1, got `{other}`"),
        });
        points.push(Point::new(x, y));
    }
    Ok(CycleFile { instance: Instance { points, s, t }, answer, members })
}

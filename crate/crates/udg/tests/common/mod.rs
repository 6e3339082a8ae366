//! Shared fixtures for the integration suites: deterministic instance
//! generators, structural tree checks, and a gate that serialises tests
//! so timing measurements never overlap.
// Each suite uses its own subset of the fixtures.
#![allow(dead_code)]

use std::sync::{Mutex, MutexGuard};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use udg::datagen::{generate, make_domain_sized, HoleStyle};
use udg::geom::{dist_sq, Point};
use udg::sssp::{ShortestPathResult, UNREACHED};

/// Take this in every test that measures time; it also keeps the memory
/// high-water marks of the heavyweight tests from stacking.
pub fn gate() -> MutexGuard<'static, ()> {
    static GATE: Mutex<()> = Mutex::new(());
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

pub struct TestInstance {
    pub points: Vec<Point>,
    pub s: Point,
    pub t: Point,
}

/// Structural shortest-path-tree invariants: the root is its own level,
/// parents sit exactly one level closer and within unit distance, and
/// unreached points carry no parent.
pub fn assert_valid_tree(points: &[Point], spt: &ShortestPathResult) {
    let root = spt.root as usize;
    assert_eq!(spt.dist[root], 0);
    assert_eq!(spt.parent[root], None);
    for p in 0..points.len() {
        match spt.parent[p] {
            Some(w) => {
                let w = w as usize;
                assert_ne!(p, root, "the root has no parent");
                assert_ne!(spt.dist[p], UNREACHED);
                assert_eq!(spt.dist[p], spt.dist[w] + 1, "parent not one level closer at {p}");
                assert!(dist_sq(points[p], points[w]) <= 1.0, "tree edge longer than unit at {p}");
            }
            None => {
                assert!(p == root || spt.dist[p] == UNREACHED, "reached non-root without parent");
            }
        }
    }
}

fn sample_clear(rng: &mut ChaCha8Rng, s: Point, t: Point, x: f64, y: f64, w: f64, h: f64) -> Point {
    loop {
        let p = Point::new(rng.gen_range(x..x + w), rng.gen_range(y..y + h));
        if dist_sq(p, s) > 0.25 && dist_sq(p, t) > 0.25 {
            return p;
        }
    }
}

/// A cluster ring around one terminal plus loose background points; about
/// half of these instances admit a separating cycle.
pub fn annulus_instance(rng: &mut ChaCha8Rng, n: usize, around_s: bool) -> TestInstance {
    let s = Point::new(0.0, 0.0);
    let tau = rng.gen_range(1.5..3.0);
    let t = Point::new(0.0, tau);
    let center = if around_s { s } else { t };
    let ring = (n * 2 / 3).max(3);
    let mut points = Vec::with_capacity(n);
    for _ in 0..ring {
        let r = rng.gen_range(0.55..1.0);
        let a = rng.gen_range(0.0..std::f64::consts::TAU);
        points.push(Point::new(center.x + r * a.cos(), center.y + r * a.sin()));
    }
    for _ in ring..n {
        points.push(sample_clear(rng, s, t, -2.0, -1.0, 4.0, tau + 2.0));
    }
    TestInstance { points, s, t }
}

/// Every point on a tight annulus around one terminal, angles jittered off
/// an even spacing. With radii in 0.55..0.7 and n >= 6 the angular gap
/// between neighbours stays below 84°, whose chord at the outer radius is
/// under 1, so consecutive ring points are always adjacent and the ring
/// closes a separating cycle: guaranteed-feasible small instances.
pub fn ring_instance(rng: &mut ChaCha8Rng, n: usize, around_s: bool) -> TestInstance {
    assert!(n >= 6, "fewer points cannot guarantee a closed ring");
    let s = Point::new(0.0, 0.0);
    let tau = rng.gen_range(1.5..3.0);
    let t = Point::new(0.0, tau);
    let center = if around_s { s } else { t };
    let points = (0..n)
        .map(|i| {
            let r = rng.gen_range(0.55..0.7);
            let a = std::f64::consts::TAU * (i as f64 + rng.gen_range(0.0..0.4)) / n as f64;
            Point::new(center.x + r * a.cos(), center.y + r * a.sin())
        })
        .collect();
    TestInstance { points, s, t }
}

/// Uniform box instance around both terminals; feasibility varies.
pub fn box_instance(rng: &mut ChaCha8Rng, n: usize) -> TestInstance {
    let s = Point::new(0.0, 0.0);
    let tau = rng.gen_range(1.5..3.0);
    let t = Point::new(0.0, tau);
    let points =
        (0..n).map(|_| sample_clear(rng, s, t, -2.0, -1.0, 4.0, tau + 2.0)).collect();
    TestInstance { points, s, t }
}

/// A generated benchmark domain instance.
pub fn domain_instance(
    style: HoleStyle,
    width: f64,
    height: f64,
    n: usize,
    seed: u64,
) -> TestInstance {
    let spec = make_domain_sized(style, width, height).expect("valid dimensions");
    let g = generate(&spec, n, seed).expect("generation succeeds");
    TestInstance { points: g.instance.points, s: g.instance.s, t: g.instance.t }
}

/// The shared instance set for the separation-equivalence and early-exit
/// criteria: 50 terminal-cluster/box instances and 50 generated domain
/// instances, all seeds fixed.
pub fn separation_instances() -> Vec<TestInstance> {
    let mut out = Vec::with_capacity(100);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e9a);
    for i in 0..50usize {
        let n = 8 + (i * 97) % 113;
        out.push(match i % 4 {
            0 => annulus_instance(&mut rng, n, true),
            1 => annulus_instance(&mut rng, n, false),
            _ => box_instance(&mut rng, n),
        });
    }
    let styles = [
        HoleStyle::None,
        HoleStyle::Small1,
        HoleStyle::Large1,
        HoleStyle::Small4,
        HoleStyle::Large4,
    ];
    for i in 0..50usize {
        let style = styles[i % styles.len()];
        let (w, h) = if i % 2 == 0 { (4.0, 1.0) } else { (8.0, 2.0) };
        let n = 60 + (i * 31) % 241;
        out.push(domain_instance(style, w, h, n, 7000 + i as u64));
    }
    out
}

pub fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

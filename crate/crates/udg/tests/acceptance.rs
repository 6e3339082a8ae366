//! The acceptance gate: one test per release criterion. Every test prints
//! a single `PASS criterion N` line with its measured numbers (visible
//! under `--nocapture`); a failed assertion in any of them is a gate
//! failure. Timing-sensitive tests serialise on a shared lock so their
//! measurements never overlap on a busy machine.

mod common;

use std::time::Instant;

use common::{
    annulus_instance, assert_valid_tree, box_instance, domain_instance, gate, median,
    ring_instance, separation_instances, TestInstance,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use udg::datagen::{add_strip_clutter, generate, make_domain_sized, HoleStyle};
use udg::delaunay::build_delaunay;
use udg::dual_index::build_dual;
use udg::error::Error;
use udg::geom::{crosses_terminal, dist_sq, normalize, Point};
use udg::oracle::{oracle_separation, oracle_sssp};
use udg::sep_compact::{separation_compact_with, CompactOptions};
use udg::sep_generic::{compute_parities, separation_generic};
use udg::sssp::{
    build_explicit_graph, sssp_delaunay, sssp_explicit_bfs, sssp_grid, UNREACHED,
};

/// Criterion 1: the three solvers and the quadratic reference report
/// identical hop distances on 200 seeded instances spanning all five
/// domain styles, and every parent table is a valid shortest-path tree.
#[test]
fn acceptance_sssp_oracle_equivalence() {
    let _g = gate();
    let start = Instant::now();
    let styles = [
        HoleStyle::None,
        HoleStyle::Small1,
        HoleStyle::Large1,
        HoleStyle::Small4,
        HoleStyle::Large4,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc1);
    let mut instances = 0u32;
    let mut trees = 0u32;
    for round in 0..40u64 {
        for (si, &style) in styles.iter().enumerate() {
            let n = rng.gen_range(50..=2000);
            let (w, h) = match n {
                0..=300 => (4.0, 1.0),
                301..=1000 => (8.0, 2.0),
                _ => (16.0, 4.0),
            };
            let inst = domain_instance(style, w, h, n, 100 * round + si as u64);
            let tri = build_delaunay(&inst.points).unwrap();
            instances += 1;
            for _ in 0..3 {
                let root = rng.gen_range(0..n) as u32;
                let reference = oracle_sssp(&inst.points, root).unwrap();
                for spt in [
                    sssp_delaunay(&inst.points, &tri, root).unwrap(),
                    sssp_explicit_bfs(&inst.points, root).unwrap(),
                    sssp_grid(&inst.points, root).unwrap(),
                ] {
                    assert_eq!(spt.dist, reference.dist, "dist table mismatch, root {root}");
                    assert_valid_tree(&inst.points, &spt);
                    trees += 1;
                }
            }
        }
    }
    assert_eq!(instances, 200);
    println!(
        "PASS criterion 1: SSSP oracle equivalence, {instances} instances / {trees} trees, zero tolerance, {:.1}s",
        start.elapsed().as_secs_f64()
    );
}

fn small_instances() -> Vec<TestInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc2);
    (0..50usize)
        .map(|i| {
            let n = 4 + i % 11; // 4..=14
            match i % 4 {
                // Rings are guaranteed feasible; boxes at these sizes are
                // mostly infeasible, exercising the `None` agreement.
                0 => ring_instance(&mut rng, n.max(6), true),
                1 => ring_instance(&mut rng, n.max(6), false),
                _ => box_instance(&mut rng, n),
            }
        })
        .collect()
}

/// Criterion 2: the cubic and near-quadratic solvers agree exactly on 100
/// mixed instances, and both agree with the exhaustive reference on 50
/// small ones.
#[test]
fn acceptance_separation_equivalence() {
    let _g = gate();
    let start = Instant::now();
    let mut feasible = 0u32;
    let big = separation_instances();
    for inst in &big {
        let g = separation_generic(&inst.points, inst.s, inst.t).unwrap();
        let c = separation_compact_with(
            &inst.points,
            inst.s,
            inst.t,
            CompactOptions::default(),
        )
        .unwrap();
        assert_eq!(g.size(), c.size(), "methods disagree on n={}", inst.points.len());
        feasible += u32::from(g.size().is_some());
    }
    let mut small_feasible = 0u32;
    let small = small_instances();
    for inst in &small {
        let reference = oracle_separation(&inst.points, inst.s, inst.t).unwrap();
        let g = separation_generic(&inst.points, inst.s, inst.t).unwrap();
        let c = separation_compact_with(
            &inst.points,
            inst.s,
            inst.t,
            CompactOptions::default(),
        )
        .unwrap();
        assert_eq!(g.size(), reference.size(), "generic vs oracle, n={}", inst.points.len());
        assert_eq!(c.size(), reference.size(), "compact vs oracle, n={}", inst.points.len());
        small_feasible += u32::from(reference.size().is_some());
    }
    assert!(feasible >= 20, "fixture drift: only {feasible} feasible large instances");
    assert!(small_feasible >= 8, "fixture drift: only {small_feasible} feasible small instances");
    println!(
        "PASS criterion 2: separation equivalence, {} mixed instances ({feasible} feasible) + {} oracle instances ({small_feasible} feasible), exact, {:.1}s",
        big.len(),
        small.len(),
        start.elapsed().as_secs_f64()
    );
}

/// Criterion 3: crossing/noncrossing range queries match a linear scan on
/// 300 random configurations and on the pinned boundary cases.
#[test]
fn acceptance_dual_query_oracle() {
    let _g = gate();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc3);
    let mut queries_checked = 0u32;
    for _config in 0..300 {
        let tau = rng.gen_range(1.0..3.0);
        let m = rng.gen_range(1..=500usize);
        let points: Vec<Point> = (0..m)
            .map(|_| Point::new(rng.gen_range(1e-6..2.0), rng.gen_range(-1.5..tau + 1.5)))
            .collect();
        let members: Vec<u32> = (0..m as u32).collect();
        let idx = build_dual(&points, &members, tau).unwrap();
        for _ in 0..12 {
            let a = Point::new(rng.gen_range(-2.0..-1e-6), rng.gen_range(-1.5..tau + 1.5));
            for crossing in [true, false] {
                let got = if crossing {
                    idx.query_crossing(a).unwrap()
                } else {
                    idx.query_noncrossing(a).unwrap()
                };
                let hit = |b: Point| {
                    dist_sq(a, b) <= 1.0 && (crosses_terminal(a, b, tau) == 1) == crossing
                };
                assert_eq!(
                    got.is_some(),
                    points.iter().any(|&b| hit(b)),
                    "emptiness mismatch, crossing={crossing}"
                );
                if let Some(b) = got {
                    assert!(hit(points[b as usize]), "returned member violates the query");
                }
                queries_checked += 1;
            }
        }
    }

    // Pinned boundaries. Dyadic coordinates keep both sides of the
    // comparison exact. Segment through s:
    let tau = 2.0;
    let through_s = [Point::new(0.25, 0.25)];
    let idx = build_dual(&through_s, &[0], tau).unwrap();
    let a = Point::new(-0.25, -0.25);
    assert_eq!(idx.query_crossing(a).unwrap(), None);
    assert_eq!(idx.query_noncrossing(a).unwrap(), Some(0));
    // Segment through t:
    let through_t = [Point::new(0.25, 1.75)];
    let idx = build_dual(&through_t, &[0], tau).unwrap();
    let a = Point::new(-0.25, 2.25);
    assert_eq!(idx.query_crossing(a).unwrap(), None);
    assert_eq!(idx.query_noncrossing(a).unwrap(), Some(0));
    // Proper crossing at distance exactly 1:
    let unit = [Point::new(0.7, 0.5)];
    let idx = build_dual(&unit, &[0], tau).unwrap();
    let a = Point::new(-0.3, 0.5);
    assert_eq!(idx.query_crossing(a).unwrap(), Some(0));
    assert_eq!(idx.query_noncrossing(a).unwrap(), None);
    // x = 0 is the right side by the half-open rule: never a member of a
    // dual structure, never a left-side query.
    assert!(matches!(
        build_dual(&[Point::new(0.0, 0.5)], &[0], tau),
        Err(Error::OnAxis(0, x)) if x == 0.0
    ));
    assert!(matches!(
        idx.query_crossing(Point::new(0.0, 0.5)),
        Err(Error::WrongSide(x)) if x == 0.0
    ));

    println!(
        "PASS criterion 3: dual-structure queries match linear scans, 300 configurations / {queries_checked} queries + pinned boundaries, {:.1}s",
        start.elapsed().as_secs_f64()
    );
}

/// Criterion 4: the edge-parity formula equals the walked crossing parity
/// of the closed tree polyline for every root and reached edge, and tree
/// edges always give parity zero.
#[test]
fn acceptance_parity_invariants() {
    let _g = gate();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacc4);
    let mut edges_checked = 0u64;
    for case in 0..100usize {
        let n = rng.gen_range(20..90);
        let inst = match case % 5 {
            0 => annulus_instance(&mut rng, n, true),
            1 => annulus_instance(&mut rng, n, false),
            2 | 3 => box_instance(&mut rng, n),
            _ => domain_instance(HoleStyle::Small1, 4.0, 1.0, n.max(40), case as u64),
        };
        let norm = normalize(&inst.points, inst.s, inst.t).unwrap();
        let pts = &norm.points;
        let n = pts.len();
        let tri = build_delaunay(pts).unwrap();
        for root in 0..n as u32 {
            let spt = sssp_delaunay(pts, &tri, root).unwrap();
            let parities = compute_parities(pts, norm.tau, &spt);
            // Walk each tree path explicitly, independent of the table's
            // level-order recurrence.
            let mut walked = vec![0u8; n];
            for p in 0..n {
                if !spt.reached(p) {
                    continue;
                }
                let mut acc = 0u8;
                let mut cur = p;
                while let Some(w) = spt.parent[cur] {
                    acc ^= crosses_terminal(pts[cur], pts[w as usize], norm.tau);
                    cur = w as usize;
                }
                walked[p] = acc;
                if let Some(w) = spt.parent[p] {
                    let w = w as usize;
                    let tree_edge_parity =
                        parities.get(p) ^ parities.get(w) ^ crosses_terminal(pts[p], pts[w], norm.tau);
                    assert_eq!(tree_edge_parity, 0, "tree edge has odd parity at {p}");
                }
            }
            for p in 0..n {
                if !spt.reached(p) {
                    continue;
                }
                for q in p + 1..n {
                    if !spt.reached(q) || dist_sq(pts[p], pts[q]) > 1.0 {
                        continue;
                    }
                    let cr = crosses_terminal(pts[p], pts[q], norm.tau);
                    let formula = parities.get(p) ^ parities.get(q) ^ cr;
                    let polyline = walked[p] ^ walked[q] ^ cr;
                    assert_eq!(formula, polyline, "parity mismatch on edge ({p},{q})");
                    edges_checked += 1;
                }
            }
        }
    }
    println!(
        "PASS criterion 4: edge parity formula equals walked polyline parity, 100 instances / {edges_checked} edge checks, exact, {:.1}s",
        start.elapsed().as_secs_f64()
    );
}

/// Criterion 5: per-root time of the triangulation-based solver grows
/// subquadratically (ratio <= 2.8 per doubling) over 10K..80K points at
/// fixed density, and beats the explicit-graph solver by >= 10x at 20K.
#[test]
fn acceptance_sssp_scaling() {
    let _g = gate();
    let start = Instant::now();
    const DENSITY: f64 = 5000.0;
    let sizes = [10_000usize, 20_000, 40_000, 80_000];
    let mut medians = Vec::new();
    let mut bfs_median_20k = f64::NAN;
    let mut delaunay_median_20k = f64::NAN;
    for &n in &sizes {
        let area = n as f64 / DENSITY;
        let (w, h) = (2.0 * area.sqrt(), area.sqrt() / 2.0);
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let points: Vec<Point> =
            (0..n).map(|_| Point::new(rng.gen_range(0.0..w), rng.gen_range(0.0..h))).collect();
        let tri = build_delaunay(&points).unwrap();
        let roots: Vec<u32> =
            rand::seq::index::sample(&mut rng, n, 8).into_iter().map(|i| i as u32).collect();
        // First root warms the caches and is not measured.
        sssp_delaunay(&points, &tri, roots[0]).unwrap();
        let times: Vec<f64> = roots[1..]
            .iter()
            .map(|&r| {
                let t0 = Instant::now();
                let spt = sssp_delaunay(&points, &tri, r).unwrap();
                let dt = t0.elapsed().as_secs_f64();
                assert!(spt.dist.iter().any(|&d| d != UNREACHED && d > 0));
                dt
            })
            .collect();
        let med = median(times);
        medians.push(med);

        if n == 20_000 {
            delaunay_median_20k = med;
            let graph = build_explicit_graph(&points);
            graph.bfs(roots[0]).unwrap();
            let times: Vec<f64> = roots[1..7]
                .iter()
                .map(|&r| {
                    let t0 = Instant::now();
                    graph.bfs(r).unwrap();
                    t0.elapsed().as_secs_f64()
                })
                .collect();
            bfs_median_20k = median(times);
        }
    }
    let ratios: Vec<f64> = medians.windows(2).map(|w| w[1] / w[0]).collect();
    for (i, &r) in ratios.iter().enumerate() {
        assert!(
            r <= 2.8,
            "doubling {} -> {}: per-root ratio {r:.2} exceeds 2.8 (medians {medians:?})",
            sizes[i],
            sizes[i + 1]
        );
    }
    let speedup = bfs_median_20k / delaunay_median_20k;
    assert!(
        speedup >= 10.0,
        "only {speedup:.1}x faster than explicit BFS at 20K (
         {delaunay_median_20k:.4}s vs {bfs_median_20k:.4}s)"
    );
    println!(
        "PASS criterion 5: per-root scaling ratios {:?} all <= 2.8, and {speedup:.0}x over explicit BFS at 20K, {:.1}s",
        ratios.iter().map(|r| (r * 100.0).round() / 100.0).collect::<Vec<_>>(),
        start.elapsed().as_secs_f64()
    );
}

/// Criterion 6: on the adversarial clutter instance the grouped solver
/// finishes in at most 0.7x the cubic solver's time.
#[test]
fn acceptance_compact_vs_generic_speed() {
    let _g = gate();
    let spec = make_domain_sized(HoleStyle::Small1, 32.0, 8.0).unwrap();
    let mut g = generate(&spec, 2000, 0xbeef).unwrap();
    add_strip_clutter(&spec, &mut g, 1000, 0xbeef).unwrap();
    let inst = &g.instance;

    let t0 = Instant::now();
    let generic = separation_generic(&inst.points, inst.s, inst.t).unwrap();
    let generic_s = t0.elapsed().as_secs_f64();

    let t1 = Instant::now();
    let compact = separation_compact_with(
        &inst.points,
        inst.s,
        inst.t,
        CompactOptions::default(),
    )
    .unwrap();
    let compact_s = t1.elapsed().as_secs_f64();

    assert_eq!(generic.size(), compact.size());
    let ratio = compact_s / generic_s;
    assert!(
        ratio <= 0.7,
        "compact {compact_s:.2}s vs generic {generic_s:.2}s: ratio {ratio:.2} exceeds 0.7"
    );
    println!(
        "PASS criterion 6: compact {compact_s:.2}s vs generic {generic_s:.2}s (ratio {ratio:.2} <= 0.7) on 2K+1K clutter, size {:?}",
        compact.size()
    );
}

/// Criterion 7: optimal sizes are finite and strictly increase with the
/// domain across five seeds at fixed point count.
#[test]
fn acceptance_solution_size_monotonicity() {
    let _g = gate();
    let start = Instant::now();
    let domains = [(8.0, 2.0), (16.0, 4.0), (32.0, 8.0)];
    let mut rows = Vec::new();
    for seed in 1..=5u64 {
        let mut sizes = Vec::new();
        for &(w, h) in &domains {
            let inst = domain_instance(HoleStyle::Small1, w, h, 2000, seed);
            let answer = separation_compact_with(
                &inst.points,
                inst.s,
                inst.t,
                CompactOptions::default(),
            )
            .unwrap();
            let size = answer.size().expect("2000 points around a hole always separate");
            sizes.push(size);
        }
        assert!(
            sizes[0] < sizes[1] && sizes[1] < sizes[2],
            "seed {seed}: sizes {sizes:?} are not strictly increasing"
        );
        rows.push(sizes);
    }
    println!(
        "PASS criterion 7: optimal sizes finite and increasing over 8x2/16x4/32x8 for 5 seeds: {rows:?}, {:.1}s",
        start.elapsed().as_secs_f64()
    );
}

/// Criterion 8: disabling every pruning shortcut (level caps, probe
/// guards, first-hit exits) never changes the answer on the criterion-2
/// instance set.
#[test]
fn acceptance_early_exit_soundness() {
    let _g = gate();
    let start = Instant::now();
    let instances = separation_instances();
    for inst in &instances {
        let fast = separation_compact_with(
            &inst.points,
            inst.s,
            inst.t,
            CompactOptions { early_exit: true },
        )
        .unwrap();
        let slow = separation_compact_with(
            &inst.points,
            inst.s,
            inst.t,
            CompactOptions { early_exit: false },
        )
        .unwrap();
        assert_eq!(fast.size(), slow.size(), "early exit changed the answer, n={}", inst.points.len());
    }
    println!(
        "PASS criterion 8: early-exit shortcuts sound on all {} criterion-2 instances, exact, {:.1}s",
        instances.len(),
        start.elapsed().as_secs_f64()
    );
}

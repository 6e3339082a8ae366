//! Minimum separating set of unit disks, compact near-quadratic algorithm.
//!
//! Same problem and answer as [`crate::sep_generic`], but instead of
//! scanning every unit disk edge per root, each root probes a fixed table
//! of group pairs. Points of the root's shortest-path tree are grouped by
//! (hop level, side of the terminal axis, crossing parity); a separating
//! cycle of size 2i or 2i+1 exists through this root exactly when some
//! pair of groups at levels (i, i-1) or (i, i) contains a unit-distance
//! pair with odd combined parity. Because side and parity are fixed per
//! group, the crossing behaviour required of the connecting edge is known
//! in advance:
//!
//! * same-side pairs never cross, so their parities must differ;
//! * left-right pairs that cross need equal parities;
//! * left-right pairs that do not cross need differing parities.
//!
//! Same-side probes are nearest-neighbour emptiness queries; left-right
//! probes go through the crossing-constrained [`crate::dual_index`]. Every
//! odd cycle edge is discoverable by exactly one probe family, so probing
//! sizes in increasing order (2i before 2i+1, i ascending) finds each
//! root's minimum without touching the quadratically many edges.
//!
//! With early exit enabled (the default), a root stops at its first hit,
//! probes are skipped as soon as they cannot beat the best size found so
//! far, and the per-root tree is only grown to the deepest level such a
//! probe could use. Disabling it probes every family at every level of
//! every root — same answers, no shortcuts — which exists to validate the
//! shortcuts against.

use crate::delaunay::{build_delaunay, Triangulation};
use crate::dual_index::{build_dual, DualIndex};
use crate::error::{Error, Result};
use crate::geom::{crosses_terminal, dist_sq, is_left_of_axis, normalize, Point};
use crate::neighbor::{build_nn, NNIndex};
use crate::sep_generic::{compute_parities, ParityTable, SeparationAnswer, SeparationWitness};
use crate::sssp::{sssp_delaunay_with, ShortestPathResult, SsspOptions, UNREACHED};

/// Reached points of one shortest-path tree, bucketed by hop level, axis
/// side, and crossing parity.
#[derive(Clone, Debug)]
pub struct LevelGroups {
    /// `levels[i]` holds the four groups at hop distance i, in the order
    /// [left parity 0, left parity 1, right parity 0, right parity 1];
    /// points on the axis itself count as right. Ascending indices within
    /// each group.
    pub levels: Vec<[Vec<u32>; 4]>,
}

impl LevelGroups {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn group(&self, level: usize, left: bool, parity: u8) -> &[u32] {
        &self.levels[level][group_slot(left, parity)]
    }
}

#[inline]
fn group_slot(left: bool, parity: u8) -> usize {
    (if left { 0 } else { 2 }) + parity as usize
}

/// Bucket the reached points of `spt` into [`LevelGroups`].
pub fn build_level_groups(
    points: &[Point],
    spt: &ShortestPathResult,
    parities: &ParityTable,
) -> LevelGroups {
    let mut levels = vec![[const { Vec::new() }; 4]; spt.max_level() as usize + 1];
    for (p, &d) in spt.dist.iter().enumerate() {
        if d == UNREACHED {
            continue;
        }
        let slot = group_slot(is_left_of_axis(points[p]), parities.get(p));
        levels[d as usize][slot].push(p as u32);
    }
    LevelGroups { levels }
}

/// First pair (query, member) at unit distance between two groups, found
/// by nearest-neighbour probes of `members` for each query in order.
/// Either list may live on either side of the axis.
pub fn search_same_side(
    points: &[Point],
    queries: &[u32],
    members: &[u32],
) -> Result<Option<(u32, u32)>> {
    check_indices(points.len(), queries)?;
    if queries.is_empty() || members.is_empty() {
        return Ok(None);
    }
    let nn = build_nn(points, members)?;
    Ok(nn_scan(points, queries, &nn))
}

fn nn_scan(points: &[Point], queries: &[u32], nn: &NNIndex) -> Option<(u32, u32)> {
    for &q in queries {
        if let Some(m) = nn.any_within_unit(points[q as usize]) {
            return Some((q, m));
        }
    }
    None
}

/// First pair (query, member) at unit distance whose segment crosses
/// (`want_crossing`) or avoids the open terminal segment. Queries must be
/// strictly left of the axis; members on the right, with on-axis members
/// (x = 0) checked directly against the geometric rule since they have no
/// dual image.
pub fn search_cross_side(
    points: &[Point],
    queries: &[u32],
    members: &[u32],
    tau: f64,
    want_crossing: bool,
) -> Result<Option<(u32, u32)>> {
    check_indices(points.len(), queries)?;
    check_indices(points.len(), members)?;
    if queries.is_empty() || members.is_empty() {
        return Ok(None);
    }
    let entry = CrossEntry::build(points, members, tau, f64::INFINITY)?;
    cross_scan(points, queries, &entry, tau, want_crossing, false)
}

fn check_indices(len: usize, ids: &[u32]) -> Result<()> {
    for &i in ids {
        if i as usize >= len {
            return Err(Error::IndexOutOfRange { index: i as usize, len });
        }
    }
    Ok(())
}

/// One right-side group prepared for cross-side probes: a dual index over
/// its off-axis members plus a plain list of any on-axis ones.
#[derive(Debug)]
struct CrossEntry {
    idx: DualIndex,
    axis: Vec<u32>,
}

impl CrossEntry {
    /// `max_x` trims members that sit too far right to be within unit
    /// distance of any left-side query (pass infinity to keep all).
    fn build(points: &[Point], members: &[u32], tau: f64, max_x: f64) -> Result<CrossEntry> {
        let mut banded = Vec::new();
        let mut axis = Vec::new();
        for &m in members {
            let x = points[m as usize].x;
            if x == 0.0 {
                axis.push(m);
            } else if x <= max_x {
                banded.push(m);
            }
        }
        Ok(CrossEntry { idx: build_dual(points, &banded, tau)?, axis })
    }
}

fn cross_scan(
    points: &[Point],
    queries: &[u32],
    entry: &CrossEntry,
    tau: f64,
    want_crossing: bool,
    skip_far_queries: bool,
) -> Result<Option<(u32, u32)>> {
    for &q in queries {
        let a = points[q as usize];
        // A left point below x = -1 cannot reach any right-side member.
        if skip_far_queries && a.x < -1.0 {
            continue;
        }
        let hit = if want_crossing {
            entry.idx.query_crossing(a)?
        } else {
            entry.idx.query_noncrossing(a)?
        };
        if let Some(m) = hit {
            return Ok(Some((q, m)));
        }
        for &m in &entry.axis {
            let b = points[m as usize];
            if dist_sq(a, b) <= 1.0 && crosses_terminal(a, b, tau) == u8::from(want_crossing) {
                return Ok(Some((q, m)));
            }
        }
    }
    Ok(None)
}

/// Options for [`separation_compact_with`].
#[derive(Clone, Copy, Debug)]
pub struct CompactOptions {
    /// Stop each root at its first hit, skip probes that cannot improve
    /// the best size found so far, and cap tree growth accordingly. The
    /// answer is identical either way; disable only to cross-check that.
    pub early_exit: bool,
}

impl Default for CompactOptions {
    fn default() -> Self {
        CompactOptions { early_exit: true }
    }
}

/// Minimum separating set via per-root group probes, default options.
pub fn separation_compact(points: &[Point], s: Point, t: Point) -> Result<SeparationAnswer> {
    separation_compact_with(points, s, t, CompactOptions::default())
}

/// Minimum separating set via per-root group probes.
pub fn separation_compact_with(
    points: &[Point],
    s: Point,
    t: Point,
    opts: CompactOptions,
) -> Result<SeparationAnswer> {
    let inst = normalize(points, s, t)?;
    if let Some(i) = inst.covered_terminal() {
        return Err(Error::TerminalCovered(i));
    }
    let npts = &inst.points;
    let n = npts.len();
    let tri = build_delaunay(npts)?;

    let mut best: u32 = n as u32 + 1;
    let mut witness: Option<SeparationWitness> = None;
    for root in 0..n as u32 {
        // Sizes come as 2i or 2i+1 with i >= 1, so nothing can beat 2.
        if opts.early_exit && best <= 2 {
            break;
        }
        if let Some((size, (a, b))) = probe_root(npts, inst.tau, &tri, root, best, opts)? {
            if size < best {
                best = size;
                witness = Some(SeparationWitness {
                    root,
                    edge: (a.min(b), a.max(b)),
                });
            }
        }
    }
    if best > n as u32 {
        Ok(SeparationAnswer::Infeasible)
    } else {
        Ok(SeparationAnswer::Separator { size: best, witness })
    }
}

/// The probe table. Each family names a query group (side, parity, which
/// of the two levels) and a member group, plus the edge kind connecting
/// them. `deep` marks the level-i group of an (i, i-1) pair.
struct Family {
    query_left: bool,
    query_parity: u8,
    query_deep: bool,
    member_left: bool,
    member_parity: u8,
    cross: Option<bool>, // None: same side; Some(w): cross side, crossing = w
}

const fn fam(
    query_left: bool,
    query_parity: u8,
    query_deep: bool,
    member_left: bool,
    member_parity: u8,
    cross: Option<bool>,
) -> Family {
    Family { query_left, query_parity, query_deep, member_left, member_parity, cross }
}

/// Families probing levels (i, i-1): cycles of size 2i. The member group
/// takes the opposite level to the query group.
const EVEN_FAMILIES: [Family; 12] = [
    // Same side: parities must differ.
    fam(true, 0, true, true, 1, None),
    fam(true, 1, true, true, 0, None),
    fam(false, 0, true, false, 1, None),
    fam(false, 1, true, false, 0, None),
    // Cross side, crossing edge: parities equal. Queries are always the
    // left group; both level assignments appear.
    fam(true, 0, true, false, 0, Some(true)),
    fam(true, 1, true, false, 1, Some(true)),
    fam(true, 0, false, false, 0, Some(true)),
    fam(true, 1, false, false, 1, Some(true)),
    // Cross side, non-crossing edge: parities differ.
    fam(true, 0, true, false, 1, Some(false)),
    fam(true, 1, true, false, 0, Some(false)),
    fam(true, 0, false, false, 1, Some(false)),
    fam(true, 1, false, false, 0, Some(false)),
];

/// Families probing level (i, i): cycles of size 2i+1. `query_deep` is
/// irrelevant here (both groups sit at level i).
const ODD_FAMILIES: [Family; 6] = [
    fam(true, 0, true, true, 1, None),
    fam(false, 0, true, false, 1, None),
    fam(true, 0, true, false, 0, Some(true)),
    fam(true, 1, true, false, 1, Some(true)),
    fam(true, 0, true, false, 1, Some(false)),
    fam(true, 1, true, false, 0, Some(false)),
];

/// Lazily built per-root search structures: nearest-neighbour indexes per
/// (level, group slot) and cross entries per (level, right parity).
struct Caches {
    nn: Vec<[Option<NNIndex>; 4]>,
    cross: Vec<[Option<CrossEntry>; 2]>,
}

/// Probe one root. Returns the smallest cycle size found for it with one
/// witness edge, or `None`. With early exit, incoming `best` prunes the
/// search and the first hit returns immediately (guards make it beat
/// `best` by construction).
fn probe_root(
    npts: &[Point],
    tau: f64,
    tri: &Triangulation,
    root: u32,
    best: u32,
    opts: CompactOptions,
) -> Result<Option<(u32, (u32, u32))>> {
    let sssp_opts = if opts.early_exit {
        // Probes only ever touch levels i with 2i < best; growing the
        // tree past that depth cannot change any answer.
        SsspOptions { max_level: Some((best - 1) / 2), ..Default::default() }
    } else {
        SsspOptions::default()
    };
    let spt = sssp_delaunay_with(npts, tri, root, sssp_opts)?;
    let parities = compute_parities(npts, tau, &spt);
    let groups = build_level_groups(npts, &spt, &parities);
    let depth = groups.depth();
    let mut caches = Caches {
        nn: (0..depth).map(|_| [const { None }; 4]).collect(),
        cross: (0..depth).map(|_| [const { None }; 2]).collect(),
    };

    let mut found: Option<(u32, (u32, u32))> = None;
    for i in 1..depth {
        let even = 2 * i as u32;
        if opts.early_exit && even >= best {
            break;
        }
        for f in &EVEN_FAMILIES {
            let (qlvl, mlvl) = if f.query_deep { (i, i - 1) } else { (i - 1, i) };
            if let Some(pair) = probe_family(npts, tau, &groups, &mut caches, f, qlvl, mlvl)? {
                track(&mut found, even, pair);
                if opts.early_exit {
                    return Ok(found);
                }
            }
        }
        let odd = even + 1;
        if opts.early_exit && odd >= best {
            continue;
        }
        for f in &ODD_FAMILIES {
            if let Some(pair) = probe_family(npts, tau, &groups, &mut caches, f, i, i)? {
                track(&mut found, odd, pair);
                if opts.early_exit {
                    return Ok(found);
                }
            }
        }
    }
    Ok(found)
}

fn track(found: &mut Option<(u32, (u32, u32))>, size: u32, pair: (u32, u32)) {
    if found.map_or(true, |(s, _)| size < s) {
        *found = Some((size, pair));
    }
}

fn probe_family(
    npts: &[Point],
    tau: f64,
    groups: &LevelGroups,
    caches: &mut Caches,
    f: &Family,
    qlvl: usize,
    mlvl: usize,
) -> Result<Option<(u32, u32)>> {
    let queries = groups.group(qlvl, f.query_left, f.query_parity);
    let members = groups.group(mlvl, f.member_left, f.member_parity);
    if queries.is_empty() || members.is_empty() {
        return Ok(None);
    }
    match f.cross {
        None => {
            let slot = group_slot(f.member_left, f.member_parity);
            let nn = match &mut caches.nn[mlvl][slot] {
                Some(nn) => nn,
                entry @ None => entry.insert(build_nn(npts, members)?),
            };
            Ok(nn_scan(npts, queries, nn))
        }
        Some(want_crossing) => {
            let entry = match &mut caches.cross[mlvl][f.member_parity as usize] {
                Some(e) => e,
                // Members right of x = 1 cannot pair with any left query.
                entry @ None => entry.insert(CrossEntry::build(npts, members, tau, 1.0)?),
            };
            cross_scan(npts, queries, entry, tau, want_crossing, true)
        }
    }
}

//! Static nearest-neighbour index over a subset of a point set.
//!
//! A balanced k-d tree in implicit median layout: the node of the range
//! `[lo, hi)` sits at its midpoint, children are the two half-ranges, and
//! the split axis alternates with depth. Queries recurse on index ranges,
//! so nothing is allocated per query. Every subtree's bounding box is
//! precomputed at build time and searches prune on true box distance, not
//! just split-plane distance — the difference is decisive for queries that
//! end up empty (for example unit-ball misses), which otherwise wander
//! through plane-near but box-far subtrees.
//!
//! Ties in [`NNIndex::nearest`] are broken toward the smaller original
//! index. That makes the answer a unique minimum under the order
//! `(distance, index)`, which in turn makes the result independent of the
//! optional search hint — the hint can only change how fast the search
//! converges, never what it returns.

use crate::error::{Error, Result};
use crate::geom::{dist_sq, Point};

#[derive(Clone, Debug)]
pub struct NNIndex {
    entries: Vec<(Point, u32)>,
    /// Bounding box of each subtree, stored at the subtree's mid slot.
    boxes: Vec<(Point, Point)>,
    min: Point,
    max: Point,
}

/// Build an index over `members`, a list of indices into `points`. The
/// indices are what queries return, so callers keep index-based identity
/// across subsets.
pub fn build_nn(points: &[Point], members: &[u32]) -> Result<NNIndex> {
    for &m in members {
        if m as usize >= points.len() {
            return Err(Error::IndexOutOfRange { index: m as usize, len: points.len() });
        }
    }
    let entries: Vec<(Point, u32)> =
        members.iter().map(|&m| (points[m as usize], m)).collect();
    NNIndex::from_entries(entries).ok_or(Error::EmptySet)
}

impl NNIndex {
    /// Build from (point, id) pairs (reordered in place). Returns `None`
    /// for the empty set.
    pub(crate) fn from_entries(mut entries: Vec<(Point, u32)>) -> Option<NNIndex> {
        if entries.is_empty() {
            return None;
        }
        build_range(&mut entries, 0);
        let mut boxes = vec![(Point::new(0.0, 0.0), Point::new(0.0, 0.0)); entries.len()];
        let (min, max) = fill_boxes(&entries, &mut boxes, 0, entries.len());
        Some(NNIndex { entries, boxes, min, max })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The member nearest to `p`, as `(original index, squared distance)`,
    /// ties broken toward the smaller index.
    ///
    /// `hint` is a location believed to be close to the answer (in the
    /// algorithms here: the previously matched neighbor). The search first
    /// walks the tree toward the hint to seed a good upper bound, then runs
    /// the usual branch-and-bound pass. The returned pair never depends on
    /// the hint.
    pub fn nearest(&self, p: Point, hint: Option<Point>) -> (u32, f64) {
        debug_assert!(!self.entries.is_empty());
        let mut best = (f64::INFINITY, u32::MAX);
        if let Some(h) = hint {
            self.descend_toward(h, p, &mut best);
        }
        self.nearest_in(0, self.entries.len(), 0, p, &mut best);
        (best.1, best.0)
    }

    /// [`NNIndex::nearest`] restricted to the unit ball: the nearest member
    /// with squared distance ≤ 1 (inclusive), or `None` when every member is
    /// farther. Same tie rule and hint semantics as `nearest`, but the
    /// search is pruned at unit radius from the start, so queries with no
    /// member in range stay cheap instead of exploring out to the true
    /// nearest — the case that dominates when a query sits just beyond a
    /// dense set's boundary.
    pub fn nearest_within_unit(&self, p: Point, hint: Option<Point>) -> Option<(u32, f64)> {
        debug_assert!(!self.entries.is_empty());
        if self.bbox_gap_sq(p) > 1.0 {
            return None;
        }
        // The cap sits one ulp above 1 so members at exactly unit distance
        // still replace it; a final check drops the cap itself.
        let cap = 1.0 + f64::EPSILON;
        let mut best = (cap, u32::MAX);
        if let Some(h) = hint {
            self.descend_toward(h, p, &mut best);
        }
        self.nearest_in(0, self.entries.len(), 0, p, &mut best);
        (best.0 <= 1.0).then_some((best.1, best.0))
    }

    /// Any member within squared distance 1 of `p` (inclusive), or `None`.
    /// Which member is returned is unspecified but deterministic for a fixed
    /// build; the search exits on the first find.
    pub fn any_within_unit(&self, p: Point) -> Option<u32> {
        if self.bbox_gap_sq(p) > 1.0 {
            return None;
        }
        self.unit_in(0, self.entries.len(), 0, p)
    }

    /// Squared distance from `p` to the bounding box of the whole set.
    #[inline]
    fn bbox_gap_sq(&self, p: Point) -> f64 {
        rect_gap_sq(p, (self.min, self.max))
    }

    /// Walk from the root toward `h`, scoring every node point against the
    /// query `p`. Seeds `best` with a candidate from the hint's leaf region.
    fn descend_toward(&self, h: Point, p: Point, best: &mut (f64, u32)) {
        let (mut lo, mut hi, mut depth) = (0usize, self.entries.len(), 0u32);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            let (mp, mid_id) = self.entries[mid];
            consider(best, dist_sq(p, mp), mid_id);
            let (hc, mc) = if depth & 1 == 0 { (h.x, mp.x) } else { (h.y, mp.y) };
            if hc <= mc {
                hi = mid;
            } else {
                lo = mid + 1;
            }
            depth += 1;
        }
    }

    fn nearest_in(&self, lo: usize, hi: usize, depth: u32, p: Point, best: &mut (f64, u32)) {
        if lo >= hi {
            return;
        }
        let mid = lo + (hi - lo) / 2;
        // A subtree whose box is strictly farther than the current best
        // holds no improving member; equal distance is still visited so
        // index ties resolve the same with or without pruning.
        if rect_gap_sq(p, self.boxes[mid]) > best.0 {
            return;
        }
        let (mp, mid_id) = self.entries[mid];
        consider(best, dist_sq(p, mp), mid_id);
        let gap = if depth & 1 == 0 { p.x - mp.x } else { p.y - mp.y };
        let (near, far) = if gap <= 0.0 {
            ((lo, mid), (mid + 1, hi))
        } else {
            ((mid + 1, hi), (lo, mid))
        };
        self.nearest_in(near.0, near.1, depth + 1, p, best);
        // The far half can still hold an equal-distance, smaller-index
        // member when the gap ties exactly, so prune on strict inequality.
        if gap * gap <= best.0 {
            self.nearest_in(far.0, far.1, depth + 1, p, best);
        }
    }

    fn unit_in(&self, lo: usize, hi: usize, depth: u32, p: Point) -> Option<u32> {
        if lo >= hi {
            return None;
        }
        let mid = lo + (hi - lo) / 2;
        if rect_gap_sq(p, self.boxes[mid]) > 1.0 {
            return None;
        }
        let (mp, mid_id) = self.entries[mid];
        if dist_sq(p, mp) <= 1.0 {
            return Some(mid_id);
        }
        let gap = if depth & 1 == 0 { p.x - mp.x } else { p.y - mp.y };
        let (near, far) = if gap <= 0.0 {
            ((lo, mid), (mid + 1, hi))
        } else {
            ((mid + 1, hi), (lo, mid))
        };
        if let Some(hit) = self.unit_in(near.0, near.1, depth + 1, p) {
            return Some(hit);
        }
        if gap * gap <= 1.0 {
            return self.unit_in(far.0, far.1, depth + 1, p);
        }
        None
    }
}

#[inline]
fn consider(best: &mut (f64, u32), d2: f64, id: u32) {
    if d2 < best.0 || (d2 == best.0 && id < best.1) {
        *best = (d2, id);
    }
}

/// Squared distance from `p` to the closed axis-aligned rectangle
/// `[min, max]`; zero when `p` is inside.
#[inline]
fn rect_gap_sq(p: Point, (min, max): (Point, Point)) -> f64 {
    let dx = (min.x - p.x).max(0.0).max(p.x - max.x);
    let dy = (min.y - p.y).max(0.0).max(p.y - max.y);
    dx * dx + dy * dy
}

/// Fill `boxes[mid]` with the bounding box of every subtree `[lo, hi)`,
/// bottom-up, and return the root's. Depth is logarithmic because the
/// layout is median-balanced.
fn fill_boxes(
    entries: &[(Point, u32)],
    boxes: &mut [(Point, Point)],
    lo: usize,
    hi: usize,
) -> (Point, Point) {
    let mid = lo + (hi - lo) / 2;
    let mp = entries[mid].0;
    let (mut min, mut max) = (mp, mp);
    for (clo, chi) in [(lo, mid), (mid + 1, hi)] {
        if clo < chi {
            let (cmin, cmax) = fill_boxes(entries, boxes, clo, chi);
            min = Point::new(min.x.min(cmin.x), min.y.min(cmin.y));
            max = Point::new(max.x.max(cmax.x), max.y.max(cmax.y));
        }
    }
    boxes[mid] = (min, max);
    (min, max)
}

/// Recursive median build: place the axis-median of the range at its mid
/// slot and recurse into the halves with the axis flipped.
fn build_range(entries: &mut [(Point, u32)], depth: u32) {
    let n = entries.len();
    if n <= 1 {
        return;
    }
    let mid = n / 2;
    if depth & 1 == 0 {
        entries.select_nth_unstable_by(mid, |a, b| a.0.x.total_cmp(&b.0.x));
    } else {
        entries.select_nth_unstable_by(mid, |a, b| a.0.y.total_cmp(&b.0.y));
    }
    let (left, rest) = entries.split_at_mut(mid);
    build_range(left, depth + 1);
    build_range(&mut rest[1..], depth + 1);
}

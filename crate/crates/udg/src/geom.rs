//! Planar primitives shared by every algorithm in the crate.
//!
//! All coordinates are plain `f64` and all comparisons are exact: distances
//! are compared squared (`dist_sq(p, q) <= 1.0` is the adjacency test
//! everywhere), and no epsilons are introduced anywhere. Degenerate inputs
//! are handled by explicit conventions, not tolerances.

use crate::error::{Error, Result};

/// A point in the plane (also the center of a unit-diameter disk).
///
/// Identity is positional: algorithms refer to points by index into a slice,
/// never by coordinates, so equal coordinates at different indices are a
/// hard input error where distinctness matters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

/// Squared Euclidean distance between `p` and `q`.
///
/// Two disks of diameter 1 centered at `p` and `q` intersect exactly when
/// `dist_sq(p, q) <= 1.0`; keeping the square avoids both a `sqrt` and any
/// question of rounding at the threshold.
#[inline]
pub fn dist_sq(p: Point, q: Point) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    dx * dx + dy * dy
}

/// Which side of the terminal axis (the vertical line x = 0) a point is on.
///
/// The rule is half-open so that every point has exactly one side: `x < 0`
/// is the left side and `x >= 0` (including x = 0 exactly) is the right
/// side.
#[inline]
pub fn is_left_of_axis(p: Point) -> bool {
    p.x < 0.0
}

/// Crossing parity of the segment `pq` against the open terminal segment
/// { (0, y) : 0 < y < tau }. Returns 1 for a crossing, 0 otherwise.
///
/// Conventions, chosen so that every segment gets a well-defined parity:
/// - endpoint sides follow the half-open rule of [`is_left_of_axis`], so a
///   segment whose endpoints are on one side (including both on the axis)
///   never crosses;
/// - the terminal segment is open: a segment through (0, 0) or (0, tau)
///   exactly passes through a terminal and does not count as a crossing.
///
/// The evaluation is symmetric in `p` and `q` by construction: the strictly
/// left endpoint is put first, so both argument orders round identically.
#[inline]
pub fn crosses_terminal(p: Point, q: Point, tau: f64) -> u8 {
    if is_left_of_axis(p) == is_left_of_axis(q) {
        return 0;
    }
    let (l, r) = if is_left_of_axis(p) { (p, q) } else { (q, p) };
    // Height at which pq meets x = 0; the denominator is positive because
    // l.x < 0 <= r.x.
    let y = (l.y * r.x - r.y * l.x) / (r.x - l.x);
    (y > 0.0 && y < tau) as u8
}

/// The rigid motion produced by [`normalize`]: translate `s` to the origin,
/// then rotate counterclockwise so the terminal direction becomes +y.
#[derive(Clone, Copy, Debug)]
pub struct RigidTransform {
    /// Cosine and sine of the rotation angle.
    pub cos: f64,
    pub sin: f64,
    /// The original location of terminal `s` (the translation).
    pub origin: Point,
}

impl RigidTransform {
    /// Map a point from original coordinates to normalized coordinates.
    #[inline]
    pub fn apply(&self, p: Point) -> Point {
        let vx = p.x - self.origin.x;
        let vy = p.y - self.origin.y;
        Point::new(self.cos * vx - self.sin * vy, self.sin * vx + self.cos * vy)
    }

    /// Map a point from normalized coordinates back to the original frame.
    #[inline]
    pub fn invert(&self, p: Point) -> Point {
        Point::new(
            self.origin.x + self.cos * p.x + self.sin * p.y,
            self.origin.y - self.sin * p.x + self.cos * p.y,
        )
    }

    /// The identity motion (already-normalized input).
    pub fn identity() -> Self {
        RigidTransform { cos: 1.0, sin: 0.0, origin: Point::new(0.0, 0.0) }
    }
}

/// A point set expressed in the canonical frame: terminal `s` at the origin,
/// terminal `t` at `(0, tau)` with `tau > 0`.
#[derive(Clone, Debug)]
pub struct NormalizedInstance {
    pub points: Vec<Point>,
    /// Distance between the two terminals; `t` sits at `(0, tau)`.
    pub tau: f64,
    /// The rigid motion that was applied to reach this frame.
    pub transform: RigidTransform,
}

impl NormalizedInstance {
    /// Wrap a point set that is already expressed in the canonical frame.
    pub fn pre_normalized(points: Vec<Point>, tau: f64) -> Self {
        NormalizedInstance { points, tau, transform: RigidTransform::identity() }
    }

    /// Index of a point whose disk covers a terminal (distance <= 1/2 from
    /// (0,0) or (0,tau)), if any. Separation is undefined for such inputs.
    pub fn covered_terminal(&self) -> Option<usize> {
        let s = Point::new(0.0, 0.0);
        let t = Point::new(0.0, self.tau);
        self.points
            .iter()
            .position(|&p| dist_sq(p, s) <= 0.25 || dist_sq(p, t) <= 0.25)
    }
}

/// Express `points` in the canonical frame of the terminals `s` and `t`:
/// translate `s` to the origin and rotate counterclockwise so that `t` lands
/// on the positive y-axis at `(0, tau)` with `tau = |st|`.
///
/// Rigid motions preserve distances, so unit-disk adjacency, shortest-path
/// structure, and separating subsets are unchanged; only the crossing
/// bookkeeping relies on the canonical frame.
pub fn normalize(points: &[Point], s: Point, t: Point) -> Result<NormalizedInstance> {
    let d2 = dist_sq(s, t);
    if d2 == 0.0 {
        return Err(Error::DegenerateTerminals);
    }
    let tau = d2.sqrt();
    // Rotation sending the unit vector (dx, dy) = (t - s) / tau to (0, 1);
    // for dx = 0, dy > 0 this is exactly the identity.
    let dx = (t.x - s.x) / tau;
    let dy = (t.y - s.y) / tau;
    let transform = RigidTransform { cos: dy, sin: dx, origin: s };
    let points = points.iter().map(|&p| transform.apply(p)).collect();
    Ok(NormalizedInstance { points, tau, transform })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dist_sq_basic() {
        assert_eq!(dist_sq(Point::new(0.3, 0.4), Point::new(0.0, 0.0)), 0.25);
        assert_eq!(dist_sq(Point::new(1.0, 1.0), Point::new(1.0, 1.0)), 0.0);
    }

    #[test]
    fn crossing_straddles_axis() {
        let tau = 2.0;
        assert_eq!(crosses_terminal(Point::new(-1.0, 1.0), Point::new(1.0, 1.0), tau), 1);
        // Same segment, both orders.
        assert_eq!(crosses_terminal(Point::new(1.0, 1.0), Point::new(-1.0, 1.0), tau), 1);
    }

    #[test]
    fn crossing_same_side_never() {
        let tau = 2.0;
        assert_eq!(crosses_terminal(Point::new(0.5, 1.0), Point::new(2.0, -3.0), tau), 0);
        assert_eq!(crosses_terminal(Point::new(-0.5, 1.0), Point::new(-2.0, 5.0), tau), 0);
        // Both endpoints on the axis count as right side.
        assert_eq!(crosses_terminal(Point::new(0.0, 0.5), Point::new(0.0, 1.5), tau), 0);
    }

    #[test]
    fn crossing_through_terminal_does_not_count() {
        let tau = 2.0;
        // Through s = (0, 0) exactly.
        assert_eq!(crosses_terminal(Point::new(-1.0, -1.0), Point::new(1.0, 1.0), tau), 0);
        // Through t = (0, tau) exactly.
        assert_eq!(crosses_terminal(Point::new(-1.0, 2.0), Point::new(1.0, 2.0), tau), 0);
        // Below s / above t.
        assert_eq!(crosses_terminal(Point::new(-1.0, -2.0), Point::new(1.0, -1.0), tau), 0);
        assert_eq!(crosses_terminal(Point::new(-1.0, 5.0), Point::new(1.0, 4.0), tau), 0);
    }

    #[test]
    fn crossing_axis_endpoint_is_right_side() {
        // The x = 0 endpoint is the right endpoint; the crossing happens at
        // its own height.
        assert_eq!(crosses_terminal(Point::new(0.0, 1.0), Point::new(-1.0, 1.0), 2.0), 1);
        assert_eq!(crosses_terminal(Point::new(0.0, 3.0), Point::new(-1.0, 3.0), 2.0), 0);
    }

    /// Sum of crossing parities around a closed polyline.
    fn loop_parity(pts: &[Point], tau: f64) -> u32 {
        (0..pts.len())
            .map(|i| crosses_terminal(pts[i], pts[(i + 1) % pts.len()], tau) as u32)
            .sum()
    }

    #[test]
    fn closed_loops_count_crossings_by_enclosure() {
        let tau = 5.0;
        // A loop that stays strictly right of the axis never crosses.
        let right = [
            Point::new(1.0, -1.0),
            Point::new(3.0, -1.0),
            Point::new(3.0, 6.0),
            Point::new(1.0, 6.0),
        ];
        assert_eq!(loop_parity(&right, tau), 0);
        // A loop around both terminals crosses below s and above t: zero
        // crossings of the open segment between them.
        let around_both = [
            Point::new(-2.0, -1.0),
            Point::new(2.0, -1.0),
            Point::new(2.0, 6.0),
            Point::new(-2.0, 6.0),
        ];
        assert_eq!(loop_parity(&around_both, tau), 0);
        // A triangle enclosing only s crosses exactly once: its lower edge
        // passes below s, its upper straddling edge crosses between the
        // terminals.
        let around_s = [Point::new(-1.0, -1.0), Point::new(1.0, -1.0), Point::new(0.2, 1.0)];
        assert_eq!(loop_parity(&around_s, tau), 1);
    }

    #[test]
    fn normalize_translation_only() {
        let inst =
            normalize(&[Point::new(3.0, 4.0)], Point::new(3.0, 4.0), Point::new(3.0, 9.0))
                .unwrap();
        assert_eq!(inst.tau, 5.0);
        assert_eq!(inst.points[0], Point::new(0.0, 0.0));
        assert_eq!(inst.transform.cos, 1.0);
        assert_eq!(inst.transform.sin, 0.0);
    }

    #[test]
    fn normalize_rotation_is_counterclockwise() {
        // Terminals along +x: the frame rotates by +90 degrees, so (1, 0)
        // (the t direction) lands on (0, 1) and (0, 1) lands on (-1, 0).
        let s = Point::new(0.0, 0.0);
        let t = Point::new(2.0, 0.0);
        let inst = normalize(&[Point::new(1.0, 0.0), Point::new(0.0, 1.0)], s, t).unwrap();
        assert_eq!(inst.points[0], Point::new(0.0, 1.0));
        assert_eq!(inst.points[1], Point::new(-1.0, 0.0));
    }

    #[test]
    fn normalize_rejects_coincident_terminals() {
        let r = normalize(&[], Point::new(1.0, 1.0), Point::new(1.0, 1.0));
        assert_eq!(r.unwrap_err(), Error::DegenerateTerminals);
    }

    #[test]
    fn transform_roundtrip() {
        let s = Point::new(2.5, -1.25);
        let t = Point::new(-3.0, 4.0);
        let p = Point::new(0.125, 7.5);
        let inst = normalize(&[p], s, t).unwrap();
        let back = inst.transform.invert(inst.points[0]);
        assert!(dist_sq(back, p) < 1e-24);
        // Terminals land where they must.
        let s_img = inst.transform.apply(s);
        let t_img = inst.transform.apply(t);
        assert_eq!(s_img, Point::new(0.0, 0.0));
        assert!(t_img.x.abs() < 1e-12);
        assert!((t_img.y - inst.tau).abs() < 1e-12);
    }

    #[test]
    fn covered_terminal_detection() {
        let inst = NormalizedInstance::pre_normalized(
            vec![Point::new(0.3, 0.4), Point::new(0.3, 0.41)],
            2.0,
        );
        // (0.3, 0.4) is at distance exactly 1/2 from s: covered.
        assert_eq!(inst.covered_terminal(), Some(0));
        let inst2 = NormalizedInstance::pre_normalized(vec![Point::new(0.3, 0.41)], 2.0);
        assert_eq!(inst2.covered_terminal(), None);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn pt() -> impl Strategy<Value = Point> {
            (-50.0f64..50.0, -50.0f64..50.0).prop_map(|(x, y)| Point::new(x, y))
        }

        proptest! {
            #[test]
            fn crossing_is_symmetric(p in pt(), q in pt(), tau in 0.1f64..20.0) {
                prop_assert_eq!(crosses_terminal(p, q, tau), crosses_terminal(q, p, tau));
            }

            #[test]
            fn closed_polyline_below_terminals_never_crosses(
                pts in proptest::collection::vec((-50.0f64..50.0, -50.0f64..-0.01)
                    .prop_map(|(x, y)| Point::new(x, y)), 3..12),
                tau in 0.1f64..20.0,
            ) {
                // Any axis intersection of a segment lies between its
                // endpoints' heights, so a polyline kept strictly below s
                // cannot meet the open terminal segment.
                let mut total = 0u32;
                for i in 0..pts.len() {
                    total += crosses_terminal(pts[i], pts[(i + 1) % pts.len()], tau) as u32;
                }
                prop_assert_eq!(total, 0);
            }

            #[test]
            fn normalize_preserves_distances(p in pt(), q in pt(),
                                             s in pt(), t in pt()) {
                prop_assume!(dist_sq(s, t) > 1e-6);
                let inst = normalize(&[p, q], s, t).unwrap();
                let before = dist_sq(p, q);
                let after = dist_sq(inst.points[0], inst.points[1]);
                let err = (after - before).abs();
                prop_assert!(err <= 1e-12 * before.max(1.0),
                             "distance drift {} on base {}", err, before);
            }
        }
    }
}

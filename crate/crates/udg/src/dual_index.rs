//! Dual-space index for crossing-constrained neighbour queries.
//!
//! Setting: terminals at (0,0) and (0,tau), points strictly right of the
//! y axis as members, query points strictly left of it. Whether the
//! segment from a left point `a` to a right point `b` crosses the open
//! terminal segment is captured by two projective images
//!
//! ```text
//!     phi1(p) = p.y / p.x        phi2(p) = (p.y - tau) / p.x
//! ```
//!
//! because the segment ab meets the axis at height y0 with
//! sign(y0) = sign(phi1(b) - phi1(a)) and
//! sign(y0 - tau) = sign(phi2(b) - phi2(a)). So ab crosses exactly when
//! `phi1(a) < phi1(b)` and `phi2(a) > phi2(b)`, both strict — a segment
//! through a terminal itself does not cross — and the non-crossing pairs
//! are precisely the complement.
//!
//! [`DualIndex`] stores the members in a two-level range tree over
//! (phi1, phi2); every canonical node carries a nearest-neighbour index
//! over the original coordinates of its range. A query decomposes its
//! quadrant (crossing) or the complement (non-crossing) into canonical
//! nodes — sharing the same split positions, so the two pools partition
//! the members exactly — and asks each node for any member within unit
//! distance.

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::neighbor::NNIndex;

/// The two dual images of a point with nonzero x.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhiImage {
    pub phi1: f64,
    pub phi2: f64,
}

/// Dual images of `p` for terminals (0,0) and (0,tau). `p.x` must be
/// nonzero; points on the axis have no dual image.
pub fn phi(p: Point, tau: f64) -> PhiImage {
    assert!(p.x != 0.0, "dual image undefined for x = 0");
    PhiImage { phi1: p.y / p.x, phi2: (p.y - tau) / p.x }
}

const NIL: u32 = u32::MAX;

/// Node of one secondary tree: a range of its primary node's
/// phi2-sorted entries, with a nearest-neighbour index over that range.
#[derive(Clone, Debug)]
struct SecondaryNode {
    lo: u32,
    hi: u32,
    left: u32,
    right: u32,
    nn: NNIndex,
}

/// Node of the primary tree: a range of the phi1-sorted entries, with its
/// own phi2-sorted copy and a secondary tree over it.
#[derive(Clone, Debug)]
struct PrimaryNode {
    lo: u32,
    hi: u32,
    left: u32,
    right: u32,
    /// phi2 keys of this node's entries, ascending (ties by id).
    phi2: Vec<f64>,
    sec_root: u32,
}

#[derive(Clone, Debug)]
pub struct DualIndex {
    tau: f64,
    /// phi1 keys of all entries, ascending (ties by phi2 then id).
    phi1: Vec<f64>,
    primary: Vec<PrimaryNode>,
    sec: Vec<SecondaryNode>,
    root: u32,
}

/// Index the points of `members` (indices into `points`, all strictly
/// right of the axis) for crossing-constrained unit-distance queries from
/// the left. An empty member list builds a valid index that never reports
/// a match.
pub fn build_dual(points: &[Point], members: &[u32], tau: f64) -> Result<DualIndex> {
    let mut ents: Vec<(f64, f64, Point, u32)> = Vec::with_capacity(members.len());
    for &m in members {
        if m as usize >= points.len() {
            return Err(Error::IndexOutOfRange { index: m as usize, len: points.len() });
        }
        let p = points[m as usize];
        if p.x <= 0.0 {
            return Err(Error::OnAxis(m as usize, p.x));
        }
        let im = phi(p, tau);
        ents.push((im.phi1, im.phi2, p, m));
    }
    ents.sort_unstable_by(|a, b| {
        a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)).then(a.3.cmp(&b.3))
    });
    let phi1 = ents.iter().map(|e| e.0).collect();
    let mut primary = Vec::new();
    let mut sec = Vec::new();
    let root = if ents.is_empty() {
        NIL
    } else {
        build_primary(&ents, 0, ents.len(), &mut primary, &mut sec)
    };
    Ok(DualIndex { tau, phi1, primary, sec, root })
}

fn build_primary(
    ents: &[(f64, f64, Point, u32)],
    lo: usize,
    hi: usize,
    primary: &mut Vec<PrimaryNode>,
    sec: &mut Vec<SecondaryNode>,
) -> u32 {
    let (left, right) = if hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        (build_primary(ents, lo, mid, primary, sec), build_primary(ents, mid, hi, primary, sec))
    } else {
        (NIL, NIL)
    };
    let mut by2: Vec<(f64, Point, u32)> =
        ents[lo..hi].iter().map(|e| (e.1, e.2, e.3)).collect();
    by2.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.2.cmp(&b.2)));
    let phi2 = by2.iter().map(|e| e.0).collect();
    let sec_root = build_secondary(&by2, 0, by2.len(), sec);
    primary.push(PrimaryNode { lo: lo as u32, hi: hi as u32, left, right, phi2, sec_root });
    (primary.len() - 1) as u32
}

fn build_secondary(by2: &[(f64, Point, u32)], lo: usize, hi: usize, sec: &mut Vec<SecondaryNode>) -> u32 {
    let (left, right) = if hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        (build_secondary(by2, lo, mid, sec), build_secondary(by2, mid, hi, sec))
    } else {
        (NIL, NIL)
    };
    let nn = NNIndex::from_entries(by2[lo..hi].iter().map(|e| (e.1, e.2)).collect())
        .expect("secondary ranges are non-empty");
    sec.push(SecondaryNode { lo: lo as u32, hi: hi as u32, left, right, nn });
    (sec.len() - 1) as u32
}

impl DualIndex {
    pub fn len(&self) -> usize {
        self.phi1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi1.is_empty()
    }

    fn check_query(&self, a: Point) -> Result<()> {
        if a.x >= 0.0 {
            return Err(Error::WrongSide(a.x));
        }
        Ok(())
    }

    /// Some member b with `dist_sq(a, b) <= 1` whose segment to `a`
    /// crosses the open terminal segment — phi1(b) strictly above
    /// phi1(a) and phi2(b) strictly below phi2(a) — or `None`.
    pub fn query_crossing(&self, a: Point) -> Result<Option<u32>> {
        self.check_query(a)?;
        if self.is_empty() {
            return Ok(None);
        }
        let qa = phi(a, self.tau);
        let i0 = self.phi1.partition_point(|&v| v <= qa.phi1);
        Ok(self.cross_in_suffix(self.root, i0, qa.phi2, a))
    }

    /// Some member b with `dist_sq(a, b) <= 1` whose segment to `a` does
    /// not cross the open terminal segment, or `None`. The candidate pool
    /// is the exact complement of [`DualIndex::query_crossing`]'s: both
    /// sides split the members at the same positions.
    pub fn query_noncrossing(&self, a: Point) -> Result<Option<u32>> {
        self.check_query(a)?;
        if self.is_empty() {
            return Ok(None);
        }
        let qa = phi(a, self.tau);
        let i0 = self.phi1.partition_point(|&v| v <= qa.phi1);
        // Members at phi1 <= phi1(a) never cross, whatever their phi2.
        if let Some(hit) = self.any_in_prefix(self.root, i0, a) {
            return Ok(Some(hit));
        }
        // Members above on phi1 must fail the phi2 half: phi2 >= phi2(a).
        Ok(self.noncross_in_suffix(self.root, i0, qa.phi2, a))
    }

    /// Probe the phi1 suffix `[from, ..)`, keeping phi2 strictly below
    /// `qphi2` (the crossing quadrant).
    fn cross_in_suffix(&self, node: u32, from: usize, qphi2: f64, a: Point) -> Option<u32> {
        let nd = &self.primary[node as usize];
        if from >= nd.hi as usize {
            return None;
        }
        if from <= nd.lo as usize {
            let j0 = nd.phi2.partition_point(|&v| v < qphi2);
            return self.sec_prefix(nd.sec_root, j0, a);
        }
        self.cross_in_suffix(nd.left, from, qphi2, a)
            .or_else(|| self.cross_in_suffix(nd.right, from, qphi2, a))
    }

    /// Probe the phi1 suffix `[from, ..)`, keeping phi2 at or above
    /// `qphi2` (the non-crossing part of the suffix).
    fn noncross_in_suffix(&self, node: u32, from: usize, qphi2: f64, a: Point) -> Option<u32> {
        let nd = &self.primary[node as usize];
        if from >= nd.hi as usize {
            return None;
        }
        if from <= nd.lo as usize {
            let j0 = nd.phi2.partition_point(|&v| v < qphi2);
            return self.sec_suffix(nd.sec_root, j0, a);
        }
        self.noncross_in_suffix(nd.left, from, qphi2, a)
            .or_else(|| self.noncross_in_suffix(nd.right, from, qphi2, a))
    }

    /// Probe the whole phi1 prefix `[0, to)` with no phi2 constraint.
    fn any_in_prefix(&self, node: u32, to: usize, a: Point) -> Option<u32> {
        let nd = &self.primary[node as usize];
        if to <= nd.lo as usize {
            return None;
        }
        if to >= nd.hi as usize {
            return self.sec[nd.sec_root as usize].nn.any_within_unit(a);
        }
        self.any_in_prefix(nd.left, to, a).or_else(|| self.any_in_prefix(nd.right, to, a))
    }

    fn sec_prefix(&self, node: u32, to: usize, a: Point) -> Option<u32> {
        let nd = &self.sec[node as usize];
        if to <= nd.lo as usize {
            return None;
        }
        if to >= nd.hi as usize {
            return nd.nn.any_within_unit(a);
        }
        self.sec_prefix(nd.left, to, a).or_else(|| self.sec_prefix(nd.right, to, a))
    }

    fn sec_suffix(&self, node: u32, from: usize, a: Point) -> Option<u32> {
        let nd = &self.sec[node as usize];
        if from >= nd.hi as usize {
            return None;
        }
        if from <= nd.lo as usize {
            return nd.nn.any_within_unit(a);
        }
        self.sec_suffix(nd.left, from, a).or_else(|| self.sec_suffix(nd.right, from, a))
    }
}

/// The crossing classification the index implements, pair by pair: strict
/// on both dual coordinates.
#[cfg(test)]
fn crossing_pair(a: Point, b: Point, tau: f64) -> bool {
    let ia = phi(a, tau);
    let ib = phi(b, tau);
    ia.phi1 < ib.phi1 && ia.phi2 > ib.phi2
}

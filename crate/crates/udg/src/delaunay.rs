//! Delaunay adjacency, the candidate-edge skeleton the shortest-path
//! algorithm grows along.
//!
//! The triangulation itself is delegated to the `delaunator` crate (robust
//! predicates, O(n log n)); this module reduces its output to per-vertex
//! adjacency lists indexed like the input slice and papers over the
//! degenerate cases (fewer than three points, all points collinear).

use crate::error::{Error, Result};
use crate::geom::Point;

/// Per-vertex Delaunay adjacency of a point set.
#[derive(Clone, Debug)]
pub struct Triangulation {
    adjacency: Vec<Vec<u32>>,
}

impl Triangulation {
    /// Number of vertices (equals the length of the input point set).
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Delaunay neighbors of vertex `p`, sorted by index.
    pub fn neighbors(&self, p: usize) -> Result<&[u32]> {
        self.adjacency
            .get(p)
            .map(|v| v.as_slice())
            .ok_or(Error::IndexOutOfRange { index: p, len: self.adjacency.len() })
    }

    /// Unchecked access for the hot loops; callers index with vertices that
    /// came out of this same triangulation.
    #[inline]
    pub(crate) fn adj(&self, p: usize) -> &[u32] {
        &self.adjacency[p]
    }

    /// Total number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|v| v.len()).sum::<usize>() / 2
    }
}

/// Indices of `points` sorted by coordinates; any duplicate pair sits
/// adjacent in this order.
fn detect_duplicates(points: &[Point]) -> Result<()> {
    let mut order: Vec<u32> = (0..points.len() as u32).collect();
    order.sort_unstable_by(|&a, &b| {
        let (pa, pb) = (points[a as usize], points[b as usize]);
        pa.x.total_cmp(&pb.x).then(pa.y.total_cmp(&pb.y))
    });
    for w in order.windows(2) {
        let (a, b) = (w[0] as usize, w[1] as usize);
        if points[a] == points[b] {
            return Err(Error::DuplicatePoints(a.min(b), a.max(b)));
        }
    }
    Ok(())
}

/// Build the Delaunay adjacency of `points`.
///
/// Degenerate inputs keep the guarantee that the result connects every pair
/// of points that could be Delaunay-adjacent: for all-collinear input the
/// adjacency is the path along the line, and for n <= 2 it is the complete
/// (trivial) adjacency.
pub fn build_delaunay(points: &[Point]) -> Result<Triangulation> {
    detect_duplicates(points)?;
    let n = points.len();
    let mut adjacency = vec![Vec::new(); n];

    match n {
        0 | 1 => {}
        2 => {
            adjacency[0].push(1);
            adjacency[1].push(0);
        }
        _ => {
            let input: Vec<delaunator::Point> =
                points.iter().map(|p| delaunator::Point { x: p.x, y: p.y }).collect();
            let tri = delaunator::triangulate(&input);
            if tri.triangles.is_empty() {
                // All points collinear: the hull is the path along the line,
                // in order, and its consecutive pairs are the adjacency.
                debug_assert_eq!(tri.hull.len(), n);
                for w in tri.hull.windows(2) {
                    adjacency[w[0]].push(w[1] as u32);
                    adjacency[w[1]].push(w[0] as u32);
                }
            } else {
                for t in tri.triangles.chunks_exact(3) {
                    let (a, b, c) = (t[0], t[1], t[2]);
                    adjacency[a].push(b as u32);
                    adjacency[b].push(a as u32);
                    adjacency[b].push(c as u32);
                    adjacency[c].push(b as u32);
                    adjacency[c].push(a as u32);
                    adjacency[a].push(c as u32);
                }
                for list in &mut adjacency {
                    list.sort_unstable();
                    list.dedup();
                }
            }
        }
    }
    Ok(Triangulation { adjacency })
}

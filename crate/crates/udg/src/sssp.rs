//! Single-source shortest paths in a unit disk graph.
//!
//! Three interchangeable methods, all producing the same hop distances:
//!
//! * [`sssp_delaunay`] — works on the Delaunay triangulation of the point
//!   set instead of the (possibly dense) unit disk graph itself. Each BFS
//!   level is found by walking triangulation edges outward from the
//!   previous level and testing candidates against a nearest-neighbour
//!   index over that level. O(n log n) per root once the triangulation
//!   exists.
//! * [`sssp_explicit_bfs`] — materialises the whole unit disk graph as a
//!   CSR adjacency structure and runs textbook BFS. Quadratic build, and
//!   per-root cost proportional to the (possibly quadratic) edge count.
//! * [`sssp_grid`] — BFS over an implicit adjacency: points bucketed into
//!   a unit grid, neighbours found by scanning the 3x3 block of cells
//!   around the current point and consuming matches.
//!
//! Distances are hop counts (`u32`), with [`UNREACHED`] for points in a
//! different component. Every reached non-root point records a parent at
//! distance exactly one less and within unit distance, so the parents form
//! a shortest-path tree.

use std::collections::{HashMap, VecDeque};

use crate::delaunay::Triangulation;
use crate::error::{Error, Result};
use crate::geom::{dist_sq, Point};
use crate::neighbor::build_nn;

/// Hop distance assigned to points not connected to the root.
pub const UNREACHED: u32 = u32::MAX;

/// A shortest-path tree rooted at one point of the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestPathResult {
    pub root: u32,
    /// Hop distance per point; [`UNREACHED`] outside the root's component.
    pub dist: Vec<u32>,
    /// Tree parent per point; `None` for the root and for unreached points.
    pub parent: Vec<Option<u32>>,
}

impl ShortestPathResult {
    pub fn reached(&self, p: usize) -> bool {
        self.dist[p] != UNREACHED
    }

    /// Largest finite hop distance (0 when the root is isolated).
    pub fn max_level(&self) -> u32 {
        self.dist.iter().copied().filter(|&d| d != UNREACHED).max().unwrap_or(0)
    }

    /// Reached point indices bucketed by hop distance: `levels()[i]` holds
    /// the points at distance exactly i, in ascending index order.
    pub fn levels(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.max_level() as usize + 1];
        for (p, &d) in self.dist.iter().enumerate() {
            if d != UNREACHED {
                out[d as usize].push(p as u32);
            }
        }
        out
    }
}

/// Options for [`sssp_delaunay_with`].
#[derive(Clone, Copy, Debug)]
pub struct SsspOptions {
    /// Seed each nearest-neighbour query with a location already known to
    /// be close. Never changes the output, only the constant factor.
    pub use_hints: bool,
    /// Stop after completing this many levels; points farther away stay
    /// [`UNREACHED`]. `None` runs to exhaustion.
    pub max_level: Option<u32>,
}

impl Default for SsspOptions {
    fn default() -> Self {
        SsspOptions { use_hints: true, max_level: None }
    }
}

fn check_root(root: u32, n: usize) -> Result<()> {
    if root as usize >= n {
        return Err(Error::IndexOutOfRange { index: root as usize, len: n });
    }
    Ok(())
}

/// Shortest-path tree via the Delaunay triangulation, default options.
pub fn sssp_delaunay(
    points: &[Point],
    tri: &Triangulation,
    root: u32,
) -> Result<ShortestPathResult> {
    sssp_delaunay_with(points, tri, root, SsspOptions::default())
}

/// Shortest-path tree via the Delaunay triangulation.
///
/// Level i is grown from level i-1 by a FIFO walk along triangulation
/// edges: when a point q is popped, each unlabelled triangulation
/// neighbour p is matched against the nearest member w of level i-1; if w
/// is within unit distance, p joins level i with parent w and is pushed,
/// so the walk can continue through p to points that have no triangulation
/// edge into level i-1 at all.
pub fn sssp_delaunay_with(
    points: &[Point],
    tri: &Triangulation,
    root: u32,
    opts: SsspOptions,
) -> Result<ShortestPathResult> {
    assert_eq!(points.len(), tri.len(), "triangulation built over a different point set");
    check_root(root, points.len())?;
    let n = points.len();
    let mut dist = vec![UNREACHED; n];
    let mut parent: Vec<Option<u32>> = vec![None; n];
    dist[root as usize] = 0;

    let cap = opts.max_level.unwrap_or(u32::MAX);
    let mut prev: Vec<u32> = vec![root];
    let mut queue: VecDeque<u32> = VecDeque::new();
    // Round stamp: a point that failed the unit test against this round's
    // index cannot pass it later in the same round (the index is fixed),
    // so it is queried at most once per round instead of once per popped
    // neighbour.
    let mut tried: Vec<u32> = vec![0; n];
    let mut level: u32 = 0;
    while !prev.is_empty() && level < cap {
        level += 1;
        let nn = build_nn(points, &prev).expect("level set is non-empty");
        let mut next: Vec<u32> = Vec::new();
        queue.extend(prev.iter().copied());
        while let Some(q) = queue.pop_front() {
            let qi = q as usize;
            let hint = if opts.use_hints {
                // q itself belongs to the indexed level, or was just
                // labelled from a parent that does; either location is a
                // good starting guess for the nearest member.
                Some(if dist[qi] == level - 1 {
                    points[qi]
                } else {
                    points[parent[qi].expect("labelled in this round") as usize]
                })
            } else {
                None
            };
            for &p in tri.adj(qi) {
                let pi = p as usize;
                if dist[pi] != UNREACHED || tried[pi] == level {
                    continue;
                }
                tried[pi] = level;
                // Capped query: the algorithm only consumes "nearest member
                // if within unit distance", and the cap keeps misses from
                // sweeping far beyond the unit ball in dense sets.
                if let Some((w, _)) = nn.nearest_within_unit(points[pi], hint) {
                    dist[pi] = level;
                    parent[pi] = Some(w);
                    queue.push_back(p);
                    next.push(p);
                }
            }
        }
        prev = next;
    }
    Ok(ShortestPathResult { root, dist, parent })
}

/// The unit disk graph stored explicitly as CSR adjacency lists.
#[derive(Clone, Debug)]
pub struct ExplicitGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

/// Materialise the unit disk graph of `points` by testing all pairs.
pub fn build_explicit_graph(points: &[Point]) -> ExplicitGraph {
    let n = points.len();
    let mut deg = vec![0usize; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if dist_sq(points[i], points[j]) <= 1.0 {
                deg[i] += 1;
                deg[j] += 1;
            }
        }
    }
    let mut offsets = vec![0usize; n + 1];
    for i in 0..n {
        offsets[i + 1] = offsets[i] + deg[i];
    }
    // Second pairwise pass fills both directions; recomputing distances is
    // cheaper at scale than buffering the edge list.
    let mut cursor = offsets.clone();
    let mut targets = vec![0u32; offsets[n]];
    for i in 0..n {
        for j in (i + 1)..n {
            if dist_sq(points[i], points[j]) <= 1.0 {
                targets[cursor[i]] = j as u32;
                cursor[i] += 1;
                targets[cursor[j]] = i as u32;
                cursor[j] += 1;
            }
        }
    }
    ExplicitGraph { offsets, targets }
}

impl ExplicitGraph {
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, p: usize) -> Result<&[u32]> {
        if p >= self.node_count() {
            return Err(Error::IndexOutOfRange { index: p, len: self.node_count() });
        }
        Ok(&self.targets[self.offsets[p]..self.offsets[p + 1]])
    }

    /// Textbook BFS from `root` over the stored adjacency.
    pub fn bfs(&self, root: u32) -> Result<ShortestPathResult> {
        let n = self.node_count();
        check_root(root, n)?;
        let mut dist = vec![UNREACHED; n];
        let mut parent: Vec<Option<u32>> = vec![None; n];
        dist[root as usize] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(q) = queue.pop_front() {
            let qi = q as usize;
            let d = dist[qi];
            for &p in &self.targets[self.offsets[qi]..self.offsets[qi + 1]] {
                let pi = p as usize;
                if dist[pi] == UNREACHED {
                    dist[pi] = d + 1;
                    parent[pi] = Some(q);
                    queue.push_back(p);
                }
            }
        }
        Ok(ShortestPathResult { root, dist, parent })
    }
}

/// Convenience wrapper: build the explicit graph and BFS from `root`.
/// Prefer [`build_explicit_graph`] + [`ExplicitGraph::bfs`] for repeated
/// roots over one point set.
pub fn sssp_explicit_bfs(points: &[Point], root: u32) -> Result<ShortestPathResult> {
    check_root(root, points.len())?;
    build_explicit_graph(points).bfs(root)
}

#[inline]
pub(crate) fn cell_of(p: Point) -> (i64, i64) {
    (p.x.floor() as i64, p.y.floor() as i64)
}

/// BFS over an implicit adjacency via a unit grid.
///
/// Points are bucketed by the integer cell containing them; any unit-disk
/// neighbour of a point lies in the 3x3 block of cells around it. Labelled
/// points are consumed from their bucket, so each point is matched once,
/// though non-matching bucket mates are re-scanned.
pub fn sssp_grid(points: &[Point], root: u32) -> Result<ShortestPathResult> {
    check_root(root, points.len())?;
    let n = points.len();
    let mut cells: HashMap<(i64, i64), Vec<u32>> = HashMap::new();
    for (i, &p) in points.iter().enumerate() {
        cells.entry(cell_of(p)).or_default().push(i as u32);
    }
    // Consume the root so it is never relabelled.
    let root_cell = cells.get_mut(&cell_of(points[root as usize])).expect("root was bucketed");
    let at = root_cell.iter().position(|&i| i == root).expect("root was bucketed");
    root_cell.swap_remove(at);

    let mut dist = vec![UNREACHED; n];
    let mut parent: Vec<Option<u32>> = vec![None; n];
    dist[root as usize] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(q) = queue.pop_front() {
        let qp = points[q as usize];
        let d = dist[q as usize];
        let (cx, cy) = cell_of(qp);
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(list) = cells.get_mut(&(cx + dx, cy + dy)) else { continue };
                let mut i = 0;
                while i < list.len() {
                    let p = list[i];
                    if dist_sq(qp, points[p as usize]) <= 1.0 {
                        list.swap_remove(i);
                        dist[p as usize] = d + 1;
                        parent[p as usize] = Some(q);
                        queue.push_back(p);
                    } else {
                        i += 1;
                    }
                }
            }
        }
    }
    Ok(ShortestPathResult { root, dist, parent })
}

//! Brute-force reference implementations for testing.
//!
//! Deliberately naive and written independently of the real algorithms:
//! [`oracle_sssp`] builds plain adjacency lists straight from the distance
//! definition, and [`oracle_separation`] tries every subset in order of
//! size. Their only job is to be obviously correct on small inputs.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geom::{dist_sq, normalize, Point};
use crate::sep_generic::{is_separating, SeparationAnswer};
use crate::sssp::{ShortestPathResult, UNREACHED};

/// Textbook BFS over adjacency lists built by testing all pairs.
pub fn oracle_sssp(points: &[Point], root: u32) -> Result<ShortestPathResult> {
    let n = points.len();
    if root as usize >= n {
        return Err(Error::IndexOutOfRange { index: root as usize, len: n });
    }
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && dist_sq(points[i], points[j]) <= 1.0 {
                adj[i].push(j as u32);
            }
        }
    }
    let mut dist = vec![UNREACHED; n];
    let mut parent: Vec<Option<u32>> = vec![None; n];
    dist[root as usize] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(q) = queue.pop_front() {
        for &p in &adj[q as usize] {
            if dist[p as usize] == UNREACHED {
                dist[p as usize] = dist[q as usize] + 1;
                parent[p as usize] = Some(q);
                queue.push_back(p);
            }
        }
    }
    Ok(ShortestPathResult { root, dist, parent })
}

/// Largest point count [`oracle_separation`] accepts; subset enumeration
/// beyond this is hopeless.
pub const ORACLE_SEPARATION_MAX: usize = 20;

/// Exhaustive minimum separating set: enumerate subsets in order of
/// cardinality (lexicographic within each size) and return the first that
/// separates. No witness is reported.
pub fn oracle_separation(points: &[Point], s: Point, t: Point) -> Result<SeparationAnswer> {
    let n = points.len();
    if n > ORACLE_SEPARATION_MAX {
        return Err(Error::TooLarge(n, ORACLE_SEPARATION_MAX));
    }
    let inst = normalize(points, s, t)?;
    if let Some(i) = inst.covered_terminal() {
        return Err(Error::TerminalCovered(i));
    }
    for k in 1..=n {
        let mut combo: Vec<u32> = (0..k as u32).collect();
        loop {
            if is_separating(&inst.points, &combo, inst.tau) {
                return Ok(SeparationAnswer::Separator { size: k as u32, witness: None });
            }
            if !next_combination(&mut combo, n as u32) {
                break;
            }
        }
    }
    Ok(SeparationAnswer::Infeasible)
}

/// Advance `combo` (strictly increasing values in 0..n) to the next
/// k-combination in lexicographic order; false when exhausted.
fn next_combination(combo: &mut [u32], n: u32) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - (k - i) as u32 {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

//! Euler-characteristic lower bounds and the closed formulas for complete
//! and complete bipartite graphs.

use super::SurfaceError;
use crate::graph::SimpleGraph;

/// Lower bounds `(genus, crosscap)` from Euler's formula and the girth.
///
/// A cellular embedding of a connected graph has at most `2e / girth`
/// faces. Forests give `(0, 0)`.
pub fn euler_lower_bounds(g: &SimpleGraph) -> Result<(u32, u32), SurfaceError> {
    if !g.is_connected() {
        return Err(SurfaceError::Disconnected);
    }
    let Some(girth) = g.girth() else {
        return Ok((0, 0));
    };
    let (v, e) = (g.vertex_count() as i64, g.edge_count() as i64);
    let f_max = 2 * e / girth as i64;
    let euler = 2 - v + e - f_max;
    let genus = (euler + 1).div_euclid(2).max(0);
    Ok((genus as u32, euler.max(0) as u32))
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Genus of `K_n`.
pub fn genus_complete(n: usize) -> u32 {
    if n < 5 {
        return 0;
    }
    let n = n as i64;
    ceil_div((n - 3) * (n - 4), 12) as u32
}

/// Genus of `K_{m,n}`.
pub fn genus_complete_bipartite(m: usize, n: usize) -> u32 {
    if m.min(n) < 3 {
        return 0;
    }
    ceil_div((m as i64 - 2) * (n as i64 - 2), 4) as u32
}

/// Crosscap number of `K_n`; `K_7` is the exception to the formula.
pub fn crosscap_complete(n: usize) -> u32 {
    if n < 5 {
        return 0;
    }
    if n == 7 {
        return 3;
    }
    let n = n as i64;
    ceil_div((n - 3) * (n - 4), 6) as u32
}

/// Crosscap number of `K_{m,n}`.
pub fn crosscap_complete_bipartite(m: usize, n: usize) -> u32 {
    if m.min(n) < 3 {
        return 0;
    }
    ceil_div((m as i64 - 2) * (n as i64 - 2), 2) as u32
}

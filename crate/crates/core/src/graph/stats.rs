use super::{distances, Graph};
use crate::error::{Error, Result};

/// Common-neighbour extremes over pair classes.
///
/// `lambda`/`eta` are the max/min over adjacent pairs; `m`/`xi` the max/min
/// over pairs at distance exactly 2, absent when there is no such pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborStats {
    pub lambda: usize,
    pub eta: usize,
    pub m: Option<usize>,
    pub xi: Option<usize>,
}

pub fn common_neighbor_stats(g: &Graph) -> Result<NeighborStats> {
    let d = distances(g);
    let mut adjacent: Option<(usize, usize)> = None;
    let mut dist2: Option<(usize, usize)> = None;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let slot = match d.get(u, v) {
                Some(1) => &mut adjacent,
                Some(2) => &mut dist2,
                _ => continue,
            };
            let c = g.common_neighbors(u, v);
            *slot = Some(slot.map_or((c, c), |(lo, hi)| (lo.min(c), hi.max(c))));
        }
    }
    let (eta, lambda) =
        adjacent.ok_or_else(|| Error::Undefined("graph has no edges".into()))?;
    Ok(NeighborStats {
        lambda,
        eta,
        m: dist2.map(|x| x.1),
        xi: dist2.map(|x| x.0),
    })
}

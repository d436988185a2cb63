use super::Graph;
use crate::error::{input, Result};
use crate::Rational;

/// Boundary statistics of a vertex subset, as exact fractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    /// Sorted vertices of `S`.
    pub set: Vec<usize>,
    pub boundary: usize,
    pub size: usize,
    pub volume: usize,
    pub n: usize,
    /// `|∂S| / |S|`.
    pub i: Rational,
    /// `|∂S| / vol(S)`, undefined when `S` has no edges at all.
    pub h: Option<Rational>,
    /// `|∂S| / (|S| |V \ S|)`.
    pub sigma: Rational,
}

impl CutResult {
    pub(crate) fn from_parts(g: &Graph, mut set: Vec<usize>, boundary: usize) -> CutResult {
        set.sort_unstable();
        let n = g.n();
        let size = set.len();
        let volume = set.iter().map(|&v| g.degree(v)).sum::<usize>();
        let b = boundary as i64;
        CutResult {
            boundary,
            size,
            volume,
            n,
            i: Rational::new(b, size as i64),
            h: (volume > 0).then(|| Rational::new(b, volume as i64)),
            sigma: Rational::new(b, (size * (n - size)) as i64),
            set,
        }
    }
}

/// Cut statistics of `set`, which must be neither empty nor all of `V`.
pub fn cut_metrics(g: &Graph, set: &[usize]) -> Result<CutResult> {
    g.check_set(set)?;
    if set.is_empty() || set.len() == g.n() {
        return input("cut set must be neither empty nor the whole vertex set");
    }
    Ok(CutResult::from_parts(g, set.to_vec(), g.boundary(set)))
}

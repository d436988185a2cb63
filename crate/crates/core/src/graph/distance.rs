use std::collections::VecDeque;

use super::Graph;

/// All-pairs hop distances, computed by BFS from every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Marker for pairs in different components.
    pub const INF: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, or `None` when disconnected.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let x = self.d[u * self.n + v];
        (x != Self::INF).then_some(x)
    }

    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&Self::INF)
    }

    /// Largest distance, or `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<u32> {
        self.is_connected().then(|| self.d.iter().copied().max().unwrap_or(0))
    }

    /// Sum of distances over unordered pairs, or `None` when disconnected.
    pub fn wiener_index(&self) -> Option<u64> {
        self.is_connected()
            .then(|| self.d.iter().map(|&x| x as u64).sum::<u64>() / 2)
    }
}

pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![DistanceMatrix::INF; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if row[v] == DistanceMatrix::INF {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

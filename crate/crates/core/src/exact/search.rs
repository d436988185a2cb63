//! Parallel enumeration of fixed-size vertex subsets with incremental
//! boundary and volume tracking.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::combinations::{revolving_door, Move};
use crate::graph::Graph;

/// Receives every enumerated subset of one size class.
pub(crate) trait Visitor: Clone + Send + Sync {
    fn visit(&mut self, mask: u64, boundary: u32, volume: u32);
    /// Combines two partial results; must be order-independent.
    fn merge(self, other: Self) -> Self;
}

/// `a` precedes `b` as sorted vertex lists of equal length.
pub(crate) fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a & d & d.wrapping_neg() != 0
}

/// Smallest boundary in a size class, lexicographically first witness.
#[derive(Clone, Copy, Debug)]
pub(crate) struct MinBoundary {
    pub boundary: u32,
    pub mask: u64,
}

impl MinBoundary {
    pub fn new() -> MinBoundary {
        MinBoundary {
            boundary: u32::MAX,
            mask: 0,
        }
    }

    pub fn found(&self) -> bool {
        self.boundary != u32::MAX
    }
}

impl Visitor for MinBoundary {
    #[inline(always)]
    fn visit(&mut self, mask: u64, boundary: u32, _volume: u32) {
        if boundary < self.boundary || (boundary == self.boundary && lex_less(mask, self.mask)) {
            self.boundary = boundary;
            self.mask = mask;
        }
    }

    fn merge(mut self, other: Self) -> Self {
        self.visit(other.mask, other.boundary, 0);
        self
    }
}

/// Visits each set and its complement, which share the boundary.
#[derive(Clone)]
struct WithComplement<V> {
    inner: V,
    full: u64,
    total: u32,
}

impl<V: Visitor> Visitor for WithComplement<V> {
    #[inline(always)]
    fn visit(&mut self, mask: u64, boundary: u32, volume: u32) {
        self.inner.visit(mask, boundary, volume);
        self.inner.visit(self.full ^ mask, boundary, self.total - volume);
    }

    fn merge(self, other: Self) -> Self {
        WithComplement {
            inner: self.inner.merge(other.inner),
            ..self
        }
    }
}

pub(crate) struct Engine<'a> {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<u32>,
    deadline: Option<Instant>,
    aborted: &'a AtomicBool,
}

const CHECK_EVERY: u32 = 1 << 16;

impl<'a> Engine<'a> {
    pub fn new(g: &Graph, deadline: Option<Instant>, aborted: &'a AtomicBool) -> Engine<'a> {
        assert!(g.n() <= 64);
        Engine {
            n: g.n(),
            adj: (0..g.n()).map(|v| g.row64(v)).collect(),
            deg: (0..g.n()).map(|v| g.degree(v) as u32).collect(),
            deadline,
            aborted,
        }
    }

    pub fn aborted(&self) -> bool {
        self.aborted.load(Ordering::Relaxed)
    }

    /// Enumerates all `m`-subsets, split into tasks by their largest one or
    /// two elements.
    pub fn run_class<V: Visitor>(&self, m: usize, proto: V) -> V {
        let n = self.n;
        if m == 0 || m > n {
            return proto;
        }
        if 2 * m == n {
            // Half the class: sets avoiding vertex n−1, each also visited
            // through its complement.
            let full = u64::MAX >> (64 - n);
            let total = self.deg.iter().sum();
            let wrapped = WithComplement { inner: proto, full, total };
            return self.run_tasks(m, n - 1, wrapped).inner;
        }
        self.run_tasks(m, n, proto)
    }

    /// The `m`-subsets of the first `top` vertices.
    fn run_tasks<V: Visitor>(&self, m: usize, top: usize, proto: V) -> V {
        if m > top {
            return proto;
        }
        let mut tasks: Vec<(u64, usize)> = Vec::new();
        if m == 1 {
            tasks.extend((0..top).map(|h| (1u64 << h, 0)));
        } else {
            for h1 in m - 1..top {
                for h2 in m - 2..h1 {
                    tasks.push((1u64 << h1 | 1u64 << h2, h2));
                }
            }
        }
        let depth = m.min(2);
        tasks
            .par_iter()
            .map(|&(fixed, below)| {
                let mut v = proto.clone();
                self.run_task(fixed, below, m - depth, &mut v);
                v
            })
            .reduce(|| proto.clone(), V::merge)
    }

    fn run_task<V: Visitor>(&self, fixed: u64, below: usize, t: usize, v: &mut V) {
        #[cfg(target_arch = "x86_64")]
        {
            if std::arch::is_x86_feature_detected!("popcnt") {
                // SAFETY: the popcnt feature was detected at runtime.
                unsafe { self.run_task_popcnt(fixed, below, t, v) };
                return;
            }
        }
        self.run_task_generic(fixed, below, t, v);
    }

    #[cfg(target_arch = "x86_64")]
    #[target_feature(enable = "popcnt")]
    unsafe fn run_task_popcnt<V: Visitor>(&self, fixed: u64, below: usize, t: usize, v: &mut V) {
        self.run_task_generic(fixed, below, t, v);
    }

    #[inline(always)]
    fn run_task_generic<V: Visitor>(&self, fixed: u64, below: usize, t: usize, v: &mut V) {
        if self.aborted() {
            return;
        }
        let adj = &self.adj;
        let deg = &self.deg;
        let mut set = 0u64;
        let mut boundary = 0i32;
        let mut volume = 0u32;
        let mut counter = 0u32;
        let deadline = self.deadline;
        let aborted = self.aborted;
        revolving_door(below, t, |mv| {
            match mv {
                Move::Start(first) => {
                    for x in crate::graph::bits(&[first | fixed]) {
                        boundary += deg[x] as i32 - 2 * (adj[x] & set).count_ones() as i32;
                        set |= 1 << x;
                        volume += deg[x];
                    }
                }
                Move::Swap { out, inn } => {
                    set &= !(1u64 << out);
                    boundary -= deg[out] as i32 - 2 * (adj[out] & set).count_ones() as i32;
                    boundary += deg[inn] as i32 - 2 * (adj[inn] & set).count_ones() as i32;
                    set |= 1 << inn;
                    volume = volume - deg[out] + deg[inn];
                }
            }
            v.visit(set, boundary as u32, volume);
            counter += 1;
            if counter == CHECK_EVERY {
                counter = 0;
                if aborted.load(Ordering::Relaxed) {
                    return false;
                }
                if deadline.is_some_and(|d| Instant::now() >= d) {
                    aborted.store(true, Ordering::Relaxed);
                    return false;
                }
            }
            true
        });
    }
}

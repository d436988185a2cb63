//! Revolving-door enumeration of fixed-size subsets.
//!
//! Consecutive subsets differ by exactly one element leaving and one
//! entering (Knuth's Algorithm R), which lets callers update cut statistics
//! in O(1) per step.

/// One move of the enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// The first subset, as a bitmask.
    Start(u64),
    /// The next subset: `out` left and `inn` entered.
    Swap { out: usize, inn: usize },
}

/// Visits every `t`-subset of `{0..n}` (`n <= 64`). The callback returns
/// `false` to stop early.
#[inline(always)]
pub fn revolving_door(n: usize, t: usize, mut visit: impl FnMut(Move) -> bool) {
    assert!(n <= 64);
    if t > n {
        return;
    }
    let first = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
    if !visit(Move::Start(first)) || t == 0 || t == n {
        return;
    }
    let mut swap = |out, inn| visit(Move::Swap { out, inn });
    if t == 1 {
        for v in 1..n {
            if !swap(v - 1, v) {
                return;
            }
        }
        return;
    }
    // c[1..=t] hold the elements and c[t+1] = n is a sentinel.
    let mut c = [0usize; 66];
    for (j, x) in c.iter_mut().enumerate().take(t + 1) {
        *x = j.wrapping_sub(1);
    }
    c[t + 1] = n;
    loop {
        // R3: the easy cases move c[1] only.
        if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                if !swap(c[1] - 1, c[1]) {
                    return;
                }
                continue;
            }
        } else if c[1] > 0 {
            c[1] -= 1;
            if !swap(c[1] + 1, c[1]) {
                return;
            }
            continue;
        }
        let mut j = 2;
        let mut try_decrease = t % 2 == 1;
        let moved = loop {
            if j > t {
                break None;
            }
            if try_decrease {
                // R4: here c[j] = c[j-1] + 1.
                if c[j] >= j {
                    let out = c[j];
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    break Some((out, j - 2));
                }
                j += 1;
            } else {
                // R5: here c[j-1] = j - 2.
                if c[j] + 1 < c[j + 1] {
                    let out = c[j - 1];
                    c[j - 1] = c[j];
                    c[j] += 1;
                    break Some((out, c[j]));
                }
                j += 1;
            }
            try_decrease = !try_decrease;
        };
        match moved {
            Some((out, inn)) => {
                if !swap(out, inn) {
                    return;
                }
            }
            None => return,
        }
    }
}

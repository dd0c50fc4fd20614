//! Fixed-point counts from run-length tuples.
//!
//! Open chains are counted with the left-end recursion
//! `F(k_1..k_m) = F(k_2-1, k_3..k_m) + F(k_3-1, k_4..k_m)` after reducing
//! end runs to 1 and interior runs to at most 2. Closed chains reduce to a
//! few open-chain counts. All arithmetic is exact.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::CountError;
use crate::model::{validate_closed_runs, ClosedChain, Count, InfiniteChain, OpenChain};

/// A normalized run tuple: all entries positive, or the `(-1)` sentinel
/// (one fixed point) used by the closed-chain conventions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RunTuple {
    Runs(Vec<u64>),
    MinusOne,
}

impl RunTuple {
    pub fn empty() -> Self {
        RunTuple::Runs(Vec::new())
    }

    pub fn runs(entries: &[u64]) -> Result<Self, CountError> {
        check_positive(entries)?;
        Ok(RunTuple::Runs(entries.to_vec()))
    }

    pub fn to_raw(&self) -> Vec<i64> {
        match self {
            RunTuple::Runs(r) => r.iter().map(|&k| k as i64).collect(),
            RunTuple::MinusOne => vec![-1],
        }
    }
}

impl From<&OpenChain> for RunTuple {
    fn from(c: &OpenChain) -> Self {
        RunTuple::Runs(c.runs().to_vec())
    }
}

fn check_positive(entries: &[u64]) -> Result<(), CountError> {
    if entries.contains(&0) {
        return Err(CountError::InvalidTuple(format!(
            "run lengths must be positive: {entries:?}"
        )));
    }
    Ok(())
}

/// Drops zero entries at either end; a lone `-1` becomes [`RunTuple::MinusOne`].
///
/// Zeros or negative values anywhere else are rejected.
pub fn normalize_tuple(raw: &[i64]) -> Result<RunTuple, CountError> {
    if raw == [-1] {
        return Ok(RunTuple::MinusOne);
    }
    let start = raw.iter().position(|&k| k != 0).unwrap_or(raw.len());
    let end = raw.iter().rposition(|&k| k != 0).map_or(start, |i| i + 1);
    let core = &raw[start..end];
    if let Some(bad) = core.iter().find(|&&k| k <= 0) {
        return Err(CountError::InvalidTuple(format!(
            "entry {bad} not allowed inside {raw:?}"
        )));
    }
    Ok(RunTuple::Runs(core.iter().map(|&k| k as u64).collect()))
}

/// End runs become 1, interior runs are capped at 2. Tuples with fewer than
/// two runs are returned unchanged.
pub fn reduce_open(t: &[u64]) -> Vec<u64> {
    let m = t.len();
    if m < 2 {
        return t.to_vec();
    }
    t.iter()
        .enumerate()
        .map(|(i, &k)| if i == 0 || i + 1 == m { 1 } else { k.min(2) })
        .collect()
}

/// Caps every run of a closed tuple at 2 (for `r >= 2`; a single run is left alone).
pub fn reduce_closed(t: &[u64]) -> Vec<u64> {
    if t.len() < 2 {
        return t.to_vec();
    }
    t.iter().map(|&k| k.min(2)).collect()
}

/// Memoizing counter. Not shareable across threads; create one per worker.
#[derive(Debug, Default)]
pub struct CountEngine {
    open_memo: HashMap<Vec<u8>, BigUint>,
    mirror_memo: HashMap<Vec<u64>, BigUint>,
}

impl CountEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count_open(&mut self, t: &RunTuple) -> Result<BigUint, CountError> {
        match t {
            RunTuple::MinusOne => Ok(BigUint::one()),
            RunTuple::Runs(runs) => {
                check_positive(runs)?;
                Ok(self.count_open_runs(runs))
            }
        }
    }

    pub fn count_open_chain(&mut self, c: &OpenChain) -> BigUint {
        self.count_open_runs(c.runs())
    }

    fn count_open_runs(&mut self, runs: &[u64]) -> BigUint {
        if runs.len() < 2 {
            return BigUint::from(2u32);
        }
        let reduced: Vec<u8> = reduce_open(runs).into_iter().map(|k| k as u8).collect();
        if let Some(v) = self.open_memo.get(&reduced) {
            return v.clone();
        }
        let v = count_reduced_open(&reduced);
        self.open_memo.insert(reduced, v.clone());
        v
    }

    /// Same count as [`count_open`](Self::count_open), via the right-end
    /// recursion `F(k_1..k_m) = F(k_1..k_{m-2}, k_{m-1}-1) + F(k_1..k_{m-3}, k_{m-2}-1)`
    /// on the unreduced tuple. Recursion depth grows with `m`; meant for cross-checks.
    pub fn count_open_mirrored(&mut self, t: &RunTuple) -> Result<BigUint, CountError> {
        match t {
            RunTuple::MinusOne => Ok(BigUint::one()),
            RunTuple::Runs(runs) => {
                check_positive(runs)?;
                Ok(self.mirrored(runs))
            }
        }
    }

    fn mirrored(&mut self, runs: &[u64]) -> BigUint {
        let m = runs.len();
        match m {
            0 | 1 => return BigUint::from(2u32),
            2 => return BigUint::from(3u32),
            _ => {}
        }
        if let Some(v) = self.mirror_memo.get(runs) {
            return v.clone();
        }
        let shrink = |prefix: &[u64]| -> Vec<u64> {
            // decrement the last entry, dropping it when it hits zero
            let mut v = prefix.to_vec();
            let last = v.last_mut().unwrap();
            *last -= 1;
            if *last == 0 {
                v.pop();
            }
            v
        };
        let first = shrink(&runs[..m - 1]);
        let second = shrink(&runs[..m - 2]);
        let v = self.mirrored(&first) + self.mirrored(&second);
        self.mirror_memo.insert(runs.to_vec(), v.clone());
        v
    }

    /// Count for a closed tuple `[k_1, ..., k_r]`.
    pub fn count_closed(&mut self, t: &[u64]) -> Result<BigUint, CountError> {
        validate_closed_runs(t)?;
        let reduced = reduce_closed(t);
        if reduced.len() >= 4 {
            // any rotation describes the same ring (up to duality); prefer a leading 2
            let shift = reduced.iter().position(|&k| k == 2).unwrap_or(0);
            let mut rotated = reduced;
            rotated.rotate_left(shift);
            return self.closed_recursion(&rotated);
        }
        Ok(closed_base(&reduced))
    }

    /// Closed count without rotating: the branch is chosen by the first
    /// entry as given. Exposed so both closed formulas can be checked.
    pub fn count_closed_unrotated(&mut self, t: &[u64]) -> Result<BigUint, CountError> {
        validate_closed_runs(t)?;
        let reduced = reduce_closed(t);
        if reduced.len() >= 4 {
            return self.closed_recursion(&reduced);
        }
        Ok(closed_base(&reduced))
    }

    pub fn count_closed_chain(&mut self, c: &ClosedChain) -> BigUint {
        self.count_closed(c.runs())
            .expect("ClosedChain runs are validated at construction")
    }

    fn closed_recursion(&mut self, k: &[u64]) -> Result<BigUint, CountError> {
        let r = k.len();
        // 1-based ranges into k, both ends decremented
        let mut term = |s: usize, t: usize| -> Result<BigUint, CountError> {
            let raw = decremented_range(k, s, t);
            self.count_open(&normalize_tuple(&raw)?)
        };
        if k[0] >= 2 {
            Ok(term(2, r)? + term(3, r - 1)?)
        } else {
            let plus = term(3, r - 1)? + term(4, r)? + term(2, r - 2)?;
            let minus = term(4, r - 2)?;
            Ok(plus - minus)
        }
    }

    pub fn count_infinite(&mut self, c: &InfiniteChain) -> Result<Count, CountError> {
        match c {
            InfiniteChain::Uniform(_) => Ok(Count::Finite(BigUint::from(2u32))),
            InfiniteChain::BoundedMiddle(middle) => {
                if middle.is_empty() {
                    return Err(CountError::Unsupported(
                        "(inf,inf) with no finite runs between the infinite ones".into(),
                    ));
                }
                let mut runs = Vec::with_capacity(middle.len() + 2);
                runs.push(1);
                runs.extend_from_slice(middle);
                runs.push(1);
                Ok(Count::Finite(self.count_open(&RunTuple::runs(&runs)?)?))
            }
            InfiniteChain::LeftInfinite(_)
            | InfiniteChain::RightInfinite(_)
            | InfiniteChain::BiInfinitePattern => Ok(Count::CountablyInfinite),
        }
    }
}

/// `(k_s - 1, k_{s+1}, ..., k_{t-1}, k_t - 1)` with the closed-chain
/// conventions: a single entry loses 2, an empty range is `(-1)`.
fn decremented_range(k: &[u64], s: usize, t: usize) -> Vec<i64> {
    if s > t {
        return vec![-1];
    }
    let mut raw: Vec<i64> = k[s - 1..t].iter().map(|&v| v as i64).collect();
    if s == t {
        raw[0] -= 2;
    } else {
        raw[0] -= 1;
        *raw.last_mut().unwrap() -= 1;
    }
    raw
}

fn closed_base(reduced: &[u64]) -> BigUint {
    match reduced {
        [_] => BigUint::from(2u32),
        [a, b] if *a >= 2 && *b >= 2 => BigUint::from(3u32),
        [_, _] => BigUint::from(2u32),
        _ => unreachable!("closed tuples with r >= 4 use the recursion"),
    }
}

/// Left-end recursion over a reduced tuple (ends 1, interior in {1, 2}).
///
/// `g(i)` is the count of the suffix starting at run `i` with its head
/// reduced to 1; the recursion only looks three runs ahead, so a rolling
/// window of four values suffices.
fn count_reduced_open(t: &[u8]) -> BigUint {
    let m = t.len();
    let two = || BigUint::from(2u32);
    let mut window: [BigUint; 4] = Default::default();
    let slot = |i: usize| i % 4;
    for i in (0..=m).rev() {
        let len = m - i;
        let value = match len {
            0 | 1 => two(),
            2 => BigUint::from(3u32),
            _ => {
                // F(t[j]-1, t[j+1..]) for j = i+1, i+2
                let drop_head = |j: usize, window: &[BigUint; 4]| -> BigUint {
                    if m - j == 1 {
                        two()
                    } else if t[j] == 1 {
                        window[slot(j + 1)].clone()
                    } else {
                        window[slot(j)].clone()
                    }
                };
                drop_head(i + 1, &window) + drop_head(i + 2, &window)
            }
        };
        window[slot(i)] = value;
    }
    std::mem::take(&mut window[slot(0)])
}

pub fn count_open(t: &RunTuple) -> Result<BigUint, CountError> {
    CountEngine::new().count_open(t)
}

pub fn count_open_mirrored(t: &RunTuple) -> Result<BigUint, CountError> {
    CountEngine::new().count_open_mirrored(t)
}

pub fn count_closed(t: &[u64]) -> Result<BigUint, CountError> {
    CountEngine::new().count_closed(t)
}

pub fn count_infinite(c: &InfiniteChain) -> Result<Count, CountError> {
    CountEngine::new().count_infinite(c)
}

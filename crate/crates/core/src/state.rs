//! Packed Boolean state vectors.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::ModelError;

const WORD: usize = 64;

/// A point of `{0,1}^n`.
///
/// Bits are packed into 64-bit words with coordinate `x_1` at bit 0 of the
/// first word. The textual form is a binary string with `x_1` leftmost, so
/// ordering compares coordinates from `x_1` onward.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateVector {
    len: usize,
    words: Vec<u64>,
}

impl StateVector {
    pub fn zeros(len: usize) -> Self {
        StateVector {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut s = Self::zeros(len);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.clear_tail();
        s
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::zeros(len);
        for i in 0..len {
            if f(i) {
                s.set(i, true);
            }
        }
        s
    }

    /// Builds a state of length `len <= 64` from a word whose bit `i` is coordinate `i`.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= WORD, "from_word supports at most 64 coordinates");
        let mut s = Self::zeros(len);
        if len > 0 {
            s.words[0] = word;
            s.clear_tail();
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Coordinate `i` (0-based, so `get(0)` is `x_1`).
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for state of length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for state of length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Bitwise complement.
    pub fn negate(&self) -> Self {
        let mut s = StateVector {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.clear_tail();
        s
    }

    pub fn is_constant(&self, range: std::ops::Range<usize>) -> bool {
        let mut it = range.map(|i| self.get(i));
        match it.next() {
            None => true,
            Some(first) => it.all(|b| b == first),
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// Bitwise complement of a state.
pub fn negate(s: &StateVector) -> StateVector {
    s.negate()
}

impl Ord for StateVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len);
        for i in 0..common {
            match self.get(i).cmp(&other.get(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for StateVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateVector({self})")
    }
}

impl FromStr for StateVector {
    type Err = ModelError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bits: Vec<bool> = text
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ModelError::BadStateChar(other)),
            })
            .collect::<Result<_, _>>()?;
        Ok(StateVector::from_fn(bits.len(), |i| bits[i]))
    }
}

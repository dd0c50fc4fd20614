//! Padovan and Fibonacci numbers and the bound families built from them.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::CountError;

/// Padovan numbers `a_0..=a_n` with `a_0 = a_1 = a_2 = 1`, `a_n = a_{n-2} + a_{n-3}`.
pub fn padovan_table(n: usize) -> Vec<BigUint> {
    let mut a: Vec<BigUint> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let v = if i < 3 {
            BigUint::one()
        } else {
            &a[i - 2] + &a[i - 3]
        };
        a.push(v);
    }
    a
}

/// Fibonacci numbers `b_0..=b_n` with `b_0 = b_1 = 1`.
pub fn fibonacci_table(n: usize) -> Vec<BigUint> {
    let mut b: Vec<BigUint> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let v = if i < 2 {
            BigUint::one()
        } else {
            &b[i - 1] + &b[i - 2]
        };
        b.push(v);
    }
    b
}

pub fn padovan(n: usize) -> BigUint {
    let (mut x, mut y, mut z) = (BigUint::one(), BigUint::one(), BigUint::one());
    for _ in 0..n {
        // (a_i, a_{i+1}, a_{i+2}) -> (a_{i+1}, a_{i+2}, a_i + a_{i+1})
        let next = &x + &y;
        x = std::mem::replace(&mut y, std::mem::replace(&mut z, next));
    }
    x
}

pub fn fibonacci(n: usize) -> BigUint {
    let (mut x, mut y) = (BigUint::one(), BigUint::one());
    for _ in 0..n {
        let next = &x + &y;
        x = std::mem::replace(&mut y, next);
    }
    x
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub lower: BigUint,
    pub upper: BigUint,
}

/// Sharp bounds on the count of any open chain `(1, r_1, ..., r_m, 1)`:
/// `(a_{m+5}, b_{m+3})`, attained by all-ones and all-twos.
pub fn open_bounds(m: usize) -> Bounds {
    Bounds {
        lower: padovan(m + 5),
        upper: fibonacci(m + 3),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedBounds {
    pub bounds: Bounds,
    /// `m + 2` runs is even, so `[1; m+2]` and `[2; m+2]` are real rings.
    /// For odd `m` the values are formula evaluations only.
    pub representable: bool,
}

/// `(3 a_m - a_{m-2}, b_{m+2} + b_m)` for closed chains of `m + 2` runs.
pub fn closed_bounds(m: usize) -> Result<ClosedBounds, CountError> {
    if m < 2 {
        return Err(CountError::Domain(m as u64));
    }
    let a = padovan_table(m);
    let b = fibonacci_table(m + 2);
    Ok(ClosedBounds {
        bounds: Bounds {
            lower: BigUint::from(3u32) * &a[m] - &a[m - 2],
            upper: &b[m + 2] + &b[m],
        },
        representable: m.is_multiple_of(2),
    })
}

/// `(1, 1, ..., 1)` with `m + 2` entries.
pub fn family_a(m: usize) -> Vec<u64> {
    vec![1; m + 2]
}

/// `(2, 2, ..., 2)` with `m + 2` entries.
pub fn family_b(m: usize) -> Vec<u64> {
    vec![2; m + 2]
}

//! Exhaustive formula-versus-oracle sweeps over every operator assignment.

use num_bigint::BigUint;

use crate::count::CountEngine;
use crate::exec::{find_first_range, Exec};
use crate::model::{open_from_operators, ClosedChain, FiniteNetwork, Operator};
use crate::oracle::{brute_force_count, OracleOptions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub kind: &'static str,
    /// Node operators (interior ones for open chains) as `&`/`|`.
    pub operators: String,
    pub formula: BigUint,
    pub oracle: BigUint,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub open_networks: u64,
    pub closed_networks: u64,
    pub mismatch: Option<Mismatch>,
}

/// Operators for assignment `index`: bit `i` set means node `i` is OR.
fn operators(len: usize, index: u64) -> Vec<Operator> {
    (0..len)
        .map(|i| {
            if (index >> i) & 1 == 1 {
                Operator::Or
            } else {
                Operator::And
            }
        })
        .collect()
}

fn render(ops: &[Operator]) -> String {
    ops.iter().map(|op| op.symbol()).collect()
}

fn oracle(exec: Exec) -> OracleOptions {
    OracleOptions {
        max_n: crate::oracle::HARD_MAX_ORACLE_N,
        exec,
    }
}

/// Open chains on `n` nodes: all `2^(n-2)` interior assignments.
pub fn sweep_open_n(n: usize, exec: Exec) -> Result<u64, Mismatch> {
    assert!(n >= 2);
    let total = 1u64 << (n - 2);
    // fan out over assignments; each oracle call runs sequentially inside
    let found = find_first_range(exec, 0..total, |index| {
        let ops = operators(n - 2, index);
        let chain = open_from_operators(&ops);
        let formula = CountEngine::new().count_open_chain(&chain);
        let truth = brute_force_count(&chain, oracle(Exec::Sequential)).ok()?;
        (formula != truth).then(|| Mismatch {
            kind: "open",
            operators: render(&ops),
            formula,
            oracle: truth,
        })
    });
    match found {
        Some(m) => Err(m),
        None => Ok(total),
    }
}

/// Closed chains on `n >= 3` nodes: all `2^n` assignments.
pub fn sweep_closed_n(n: usize, exec: Exec) -> Result<u64, Mismatch> {
    assert!(n >= 3);
    let total = 1u64 << n;
    let found = find_first_range(exec, 0..total, |index| {
        let ops = operators(n, index);
        let chain = ClosedChain::from_operators(&ops).expect("n >= 3 ring");
        let formula = CountEngine::new().count_closed_chain(&chain);
        let truth =
            brute_force_count(FiniteNetwork::Closed(&chain), oracle(Exec::Sequential)).ok()?;
        (formula != truth).then(|| Mismatch {
            kind: "closed",
            operators: render(&ops),
            formula,
            oracle: truth,
        })
    });
    match found {
        Some(m) => Err(m),
        None => Ok(total),
    }
}

/// Open chains for `n` in `2..=max_open` and closed chains for `n` in
/// `3..=max_closed`, stopping at the first disagreement.
pub fn sweep(max_open: usize, max_closed: usize, exec: Exec) -> SweepReport {
    let mut report = SweepReport::default();
    for n in 2..=max_open {
        match sweep_open_n(n, exec) {
            Ok(k) => report.open_networks += k,
            Err(m) => {
                report.mismatch = Some(m);
                return report;
            }
        }
    }
    for n in 3..=max_closed {
        match sweep_closed_n(n, exec) {
            Ok(k) => report.closed_networks += k,
            Err(m) => {
                report.mismatch = Some(m);
                return report;
            }
        }
    }
    report
}

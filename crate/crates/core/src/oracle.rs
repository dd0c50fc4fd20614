//! Exhaustive fixed-point oracle.
//!
//! Scans all `2^n` states of the concrete network. Each state is a machine
//! word and the whole network is evaluated with a handful of shifts and
//! masks. Nothing here looks at run lengths or block structure: the only
//! input is the per-node rule list.

use num_bigint::BigUint;

use crate::error::EnumerateError;
use crate::exec::{count_range, filter_map_range, Exec};
use crate::model::{FiniteNetwork, NodeRule, Operator};
use crate::state::StateVector;

pub const DEFAULT_MAX_ORACLE_N: usize = 30;
/// States are single words; this is the largest `n` the scan can represent.
pub const HARD_MAX_ORACLE_N: usize = 63;

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    pub max_n: usize,
    pub exec: Exec,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_n: DEFAULT_MAX_ORACLE_N,
            exec: Exec::default(),
        }
    }
}

/// Word-level form of a network: bit `i` is node `i + 1`.
#[derive(Debug, Clone, Copy)]
struct WordNetwork {
    n: u32,
    full: u64,
    and_mask: u64,
    or_mask: u64,
    copy_right: u64,
    copy_left: u64,
    cyclic: bool,
}

impl WordNetwork {
    fn new(rules: &[NodeRule], cyclic: bool) -> Self {
        let n = rules.len() as u32;
        let mut net = WordNetwork {
            n,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            and_mask: 0,
            or_mask: 0,
            copy_right: 0,
            copy_left: 0,
            cyclic,
        };
        for (i, rule) in rules.iter().enumerate() {
            let bit = 1u64 << i;
            match rule {
                NodeRule::CopyRight => net.copy_right |= bit,
                NodeRule::CopyLeft => net.copy_left |= bit,
                NodeRule::Gate(Operator::And) => net.and_mask |= bit,
                NodeRule::Gate(Operator::Or) => net.or_mask |= bit,
            }
        }
        net
    }

    #[inline]
    fn step(&self, x: u64) -> u64 {
        // left(x) has x_{i-1} at bit i, right(x) has x_{i+1} at bit i
        let (left, right) = if self.cyclic {
            (
                ((x << 1) | (x >> (self.n - 1))) & self.full,
                (x >> 1) | ((x & 1) << (self.n - 1)),
            )
        } else {
            ((x << 1) & self.full, x >> 1)
        };
        (left & right & self.and_mask)
            | ((left | right) & self.or_mask)
            | (right & self.copy_right)
            | (left & self.copy_left)
    }

    #[inline]
    fn is_fixed(&self, x: u64) -> bool {
        self.step(x) == x
    }
}

fn prepare(network: FiniteNetwork<'_>, max_n: usize) -> Result<WordNetwork, EnumerateError> {
    let n = network.node_count();
    let cap = max_n.min(HARD_MAX_ORACLE_N);
    if n > cap {
        return Err(EnumerateError::CapExceeded {
            what: "node count",
            size: n,
            cap,
        });
    }
    Ok(WordNetwork::new(&network.rules(), network.is_cyclic()))
}

/// Every `s` with `f(s) = s`, sorted as binary strings.
pub fn brute_force_fixed_points<'a>(
    network: impl Into<FiniteNetwork<'a>>,
    options: OracleOptions,
) -> Result<Vec<StateVector>, EnumerateError> {
    let word = prepare(network.into(), options.max_n)?;
    let n = word.n as usize;
    let mut out: Vec<StateVector> = filter_map_range(options.exec, 0..(1u64 << n), |x| {
        word.is_fixed(x).then(|| StateVector::from_word(n, x))
    });
    out.sort();
    Ok(out)
}

pub fn brute_force_count<'a>(
    network: impl Into<FiniteNetwork<'a>>,
    options: OracleOptions,
) -> Result<BigUint, EnumerateError> {
    let word = prepare(network.into(), options.max_n)?;
    let total = 1u64 << word.n;
    Ok(BigUint::from(count_range(options.exec, 0..total, |x| {
        word.is_fixed(x)
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{evaluate, ClosedChain, OpenChain, Operator::*};

    fn strings(v: &[StateVector]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn word_step_matches_evaluate() {
        let open = OpenChain::new(vec![2, 1, 1, 3, 2, 1], And).unwrap();
        let closed = ClosedChain::new(vec![3, 1, 1, 3, 2, 2], And).unwrap();
        for net in [FiniteNetwork::from(&open), FiniteNetwork::from(&closed)] {
            let word = WordNetwork::new(&net.rules(), net.is_cyclic());
            for x in (0u64..4096).step_by(7) {
                let s = StateVector::from_word(12, x);
                let expected = evaluate(net, &s).unwrap();
                assert_eq!(StateVector::from_word(12, word.step(x)), expected);
            }
        }
    }

    #[test]
    fn two_node_chain() {
        let c = OpenChain::default();
        let fps = brute_force_fixed_points(&c, OracleOptions::default()).unwrap();
        assert_eq!(strings(&fps), ["00", "11"]);
    }

    #[test]
    fn closed_two_two_has_three() {
        let c = ClosedChain::new(vec![2, 2], And).unwrap();
        let fps = brute_force_fixed_points(&c, OracleOptions::default()).unwrap();
        assert_eq!(fps.len(), 3);
    }

    #[test]
    fn uniform_and_chain_has_two() {
        let c = OpenChain::new(vec![7], And).unwrap();
        assert_eq!(c.node_count(), 9);
        let count = brute_force_count(&c, OracleOptions::default()).unwrap();
        assert_eq!(count, BigUint::from(2u32));
    }

    #[test]
    fn cap_is_enforced() {
        let c = OpenChain::new(vec![40], And).unwrap();
        let err = brute_force_count(&c, OracleOptions::default()).unwrap_err();
        assert!(matches!(err, EnumerateError::CapExceeded { size: 42, cap: 30, .. }));
        let c = OpenChain::new(vec![70], And).unwrap();
        let opts = OracleOptions {
            max_n: 1000,
            ..Default::default()
        };
        assert!(brute_force_count(&c, opts).is_err());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let c = ClosedChain::new(vec![3, 1, 1, 3, 2, 2], And).unwrap();
        let seq = OracleOptions {
            exec: Exec::Sequential,
            ..Default::default()
        };
        let par = OracleOptions {
            exec: Exec::Parallel,
            ..Default::default()
        };
        assert_eq!(
            brute_force_fixed_points(&c, seq).unwrap(),
            brute_force_fixed_points(&c, par).unwrap()
        );
    }
}

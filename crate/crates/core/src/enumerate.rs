//! Fixed-point enumeration over block patterns.
//!
//! A fixed point is constant on every block returned by `block_sizes`, so it
//! is enough to try the `2^blocks` block-constant states.

use crate::error::EnumerateError;
use crate::exec::{filter_map_range, Exec};
use crate::model::{evaluate, FiniteNetwork};
use crate::state::StateVector;

pub const DEFAULT_MAX_BLOCKS: usize = 30;
const HARD_MAX_BLOCKS: usize = 63;

/// One bit per block, block 1 first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPattern(pub Vec<bool>);

impl BlockPattern {
    /// Pattern number `index` out of `2^blocks`, block 1 as the most significant bit.
    pub fn from_index(blocks: usize, index: u64) -> Self {
        BlockPattern(
            (0..blocks)
                .map(|i| (index >> (blocks - 1 - i)) & 1 == 1)
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerateOptions {
    pub max_blocks: usize,
    pub exec: Exec,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            max_blocks: DEFAULT_MAX_BLOCKS,
            exec: Exec::default(),
        }
    }
}

pub fn expand_blocks<'a>(
    network: impl Into<FiniteNetwork<'a>>,
    pattern: &BlockPattern,
) -> Result<StateVector, EnumerateError> {
    let sizes = network.into().block_sizes();
    if sizes.len() != pattern.0.len() {
        return Err(EnumerateError::Model(crate::error::ModelError::Dimension {
            expected: sizes.len(),
            got: pattern.0.len(),
        }));
    }
    Ok(expand(&sizes, &pattern.0))
}

fn expand(sizes: &[u64], values: &[bool]) -> StateVector {
    let n = sizes.iter().sum::<u64>() as usize;
    let mut s = StateVector::zeros(n);
    let mut pos = 0usize;
    for (&size, &value) in sizes.iter().zip(values) {
        let size = size as usize;
        if value {
            for i in pos..pos + size {
                s.set(i, true);
            }
        }
        pos += size;
    }
    s
}

/// All fixed points, sorted as binary strings.
pub fn enumerate_fixed_points<'a>(
    network: impl Into<FiniteNetwork<'a>>,
    options: EnumerateOptions,
) -> Result<Vec<StateVector>, EnumerateError> {
    let network = network.into();
    let sizes = network.block_sizes();
    let blocks = sizes.len();
    let cap = options.max_blocks.min(HARD_MAX_BLOCKS);
    if blocks > cap {
        return Err(EnumerateError::CapExceeded {
            what: "block count",
            size: blocks,
            cap,
        });
    }
    let mut out = filter_map_range(options.exec, 0..(1u64 << blocks), |index| {
        let pattern = BlockPattern::from_index(blocks, index);
        let s = expand(&sizes, &pattern.0);
        let image = evaluate(network, &s).expect("expanded state has n coordinates");
        (image == s).then_some(s)
    });
    out.sort();
    Ok(out)
}

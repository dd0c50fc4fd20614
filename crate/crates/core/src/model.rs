//! Chain networks and the elementary operations on them.
//!
//! An open chain on `n >= 2` nodes has `f_1 = x_2`, `f_n = x_{n-1}` and
//! `f_i = x_{i-1} op_i x_{i+1}` in between. A closed chain applies an
//! operator at every node with cyclic neighbours. Both are stored as
//! run-length tuples plus the operator of the first run.

use std::fmt;

use num_bigint::BigUint;

use crate::error::ModelError;
use crate::state::StateVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Operator {
    #[default]
    And,
    Or,
}

impl Operator {
    pub fn dual(self) -> Operator {
        match self {
            Operator::And => Operator::Or,
            Operator::Or => Operator::And,
        }
    }

    pub fn apply(self, a: bool, b: bool) -> bool {
        match self {
            Operator::And => a && b,
            Operator::Or => a || b,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Operator::And => '&',
            Operator::Or => '|',
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// The coordinate function of a single node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeRule {
    /// `f_i = x_{i+1}` (left end of an open chain).
    CopyRight,
    /// `f_i = x_{i-1}` (right end of an open chain).
    CopyLeft,
    Gate(Operator),
}

/// Open chain `(k_1, ..., k_m)` over the interior operators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OpenChain {
    runs: Vec<u64>,
    leading_op: Operator,
}

impl OpenChain {
    pub fn new(runs: Vec<u64>, leading_op: Operator) -> Result<Self, ModelError> {
        if let Some(index) = runs.iter().position(|&k| k == 0) {
            return Err(ModelError::ZeroRun { index });
        }
        Ok(OpenChain { runs, leading_op })
    }

    pub fn runs(&self) -> &[u64] {
        &self.runs
    }

    pub fn leading_op(&self) -> Operator {
        self.leading_op
    }

    pub fn node_count(&self) -> u64 {
        2 + self.runs.iter().sum::<u64>()
    }

    pub fn dualize(&self) -> Self {
        OpenChain {
            runs: self.runs.clone(),
            leading_op: self.leading_op.dual(),
        }
    }

    /// `(k_1+1, k_2, ..., k_{m-1}, k_m+1)`; a single run is one block of
    /// `k_1+2` nodes and the empty chain is one block of 2.
    pub fn block_sizes(&self) -> Vec<u64> {
        match self.runs.len() {
            0 => vec![2],
            1 => vec![self.runs[0] + 2],
            m => {
                let mut sizes = self.runs.clone();
                sizes[0] += 1;
                sizes[m - 1] += 1;
                sizes
            }
        }
    }

    /// Operators of nodes `2..n-1`.
    pub fn operators(&self) -> Vec<Operator> {
        operators_from_runs(&self.runs, self.leading_op)
    }
}

/// Closed chain `[k_1, ..., k_r]`.
///
/// `origin` records where node 1 of the canonical rotation sat in the
/// operator string the chain was built from (0 when built from runs).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedChain {
    runs: Vec<u64>,
    leading_op: Operator,
    origin: usize,
}

impl ClosedChain {
    pub fn new(runs: Vec<u64>, leading_op: Operator) -> Result<Self, ModelError> {
        validate_closed_runs(&runs)?;
        Ok(ClosedChain {
            runs,
            leading_op,
            origin: 0,
        })
    }

    /// Run-length encodes the operators of nodes `1..n` of a ring, rotating
    /// so that the first run does not straddle the wrap point.
    pub fn from_operators(ops: &[Operator]) -> Result<Self, ModelError> {
        let n = ops.len();
        if n < 3 {
            return Err(ModelError::TooFewNodes(n as u64));
        }
        let boundary = |i: usize| ops[i] != ops[(i + n - 1) % n];
        let origin = if boundary(0) {
            0
        } else {
            (1..n).rev().find(|&i| boundary(i)).unwrap_or(0)
        };
        let rotated: Vec<Operator> = (0..n).map(|j| ops[(j + origin) % n]).collect();
        let open = open_from_operators(&rotated);
        let mut chain = ClosedChain::new(open.runs, open.leading_op)?;
        chain.origin = origin;
        Ok(chain)
    }

    pub fn runs(&self) -> &[u64] {
        &self.runs
    }

    pub fn leading_op(&self) -> Operator {
        self.leading_op
    }

    pub fn origin(&self) -> usize {
        self.origin
    }

    pub fn node_count(&self) -> u64 {
        self.runs.iter().sum()
    }

    pub fn dualize(&self) -> Self {
        ClosedChain {
            runs: self.runs.clone(),
            leading_op: self.leading_op.dual(),
            origin: self.origin,
        }
    }

    pub fn block_sizes(&self) -> Vec<u64> {
        self.runs.clone()
    }

    /// Operators of nodes `1..n` in canonical order.
    pub fn operators(&self) -> Vec<Operator> {
        operators_from_runs(&self.runs, self.leading_op)
    }

    /// Maps a state indexed canonically back to the node order of the
    /// operator string this chain was parsed from.
    pub fn to_original_order(&self, s: &StateVector) -> StateVector {
        let n = s.len();
        if self.origin == 0 || n == 0 {
            return s.clone();
        }
        let mut out = StateVector::zeros(n);
        for j in 0..n {
            out.set((j + self.origin) % n, s.get(j));
        }
        out
    }
}

pub(crate) fn validate_closed_runs(runs: &[u64]) -> Result<(), ModelError> {
    if runs.is_empty() {
        return Err(ModelError::EmptyClosed);
    }
    if let Some(index) = runs.iter().position(|&k| k == 0) {
        return Err(ModelError::ZeroRun { index });
    }
    if runs.len() > 1 && runs.len() % 2 == 1 {
        return Err(ModelError::OddRunCount(runs.len()));
    }
    let n: u64 = runs.iter().sum();
    if n < 3 {
        return Err(ModelError::TooFewNodes(n));
    }
    Ok(())
}

/// Infinite chains, classified by the shape of their run sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum InfiniteChain {
    /// A single operator repeated in both directions, `(inf)`.
    Uniform(Operator),
    /// `(inf, k_1, ..., k_m, inf)`.
    BoundedMiddle(Vec<u64>),
    /// `(..., k_1, ..., k_m, inf)`: unboundedly many runs to the left.
    LeftInfinite(Vec<u64>),
    /// `(inf, k_1, ..., k_m, ...)`: unboundedly many runs to the right.
    RightInfinite(Vec<u64>),
    /// Unboundedly many runs in both directions.
    BiInfinitePattern,
}

/// A fixed-point count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(BigUint),
    CountablyInfinite,
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(v) => write!(f, "{v}"),
            Count::CountablyInfinite => f.write_str("infinite"),
        }
    }
}

/// Any chain value the notation can denote.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Chain {
    Open(OpenChain),
    Closed(ClosedChain),
    Infinite(InfiniteChain),
}

impl Chain {
    pub fn kind(&self) -> &'static str {
        match self {
            Chain::Open(_) => "open",
            Chain::Closed(_) => "closed",
            Chain::Infinite(_) => "infinite",
        }
    }

    /// Node count, or `None` for infinite chains.
    pub fn node_count(&self) -> Option<u64> {
        match self {
            Chain::Open(c) => Some(c.node_count()),
            Chain::Closed(c) => Some(c.node_count()),
            Chain::Infinite(_) => None,
        }
    }

    pub fn as_finite(&self) -> Option<FiniteNetwork<'_>> {
        match self {
            Chain::Open(c) => Some(FiniteNetwork::Open(c)),
            Chain::Closed(c) => Some(FiniteNetwork::Closed(c)),
            Chain::Infinite(_) => None,
        }
    }
}

/// Borrowed view of a concrete (finite) network.
#[derive(Debug, Clone, Copy)]
pub enum FiniteNetwork<'a> {
    Open(&'a OpenChain),
    Closed(&'a ClosedChain),
}

impl<'a> From<&'a OpenChain> for FiniteNetwork<'a> {
    fn from(c: &'a OpenChain) -> Self {
        FiniteNetwork::Open(c)
    }
}

impl<'a> From<&'a ClosedChain> for FiniteNetwork<'a> {
    fn from(c: &'a ClosedChain) -> Self {
        FiniteNetwork::Closed(c)
    }
}

impl FiniteNetwork<'_> {
    pub fn node_count(&self) -> usize {
        match self {
            FiniteNetwork::Open(c) => c.node_count() as usize,
            FiniteNetwork::Closed(c) => c.node_count() as usize,
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, FiniteNetwork::Closed(_))
    }

    pub fn block_sizes(&self) -> Vec<u64> {
        match self {
            FiniteNetwork::Open(c) => c.block_sizes(),
            FiniteNetwork::Closed(c) => c.block_sizes(),
        }
    }

    /// One rule per node, `x_1` first.
    pub fn rules(&self) -> Vec<NodeRule> {
        match self {
            FiniteNetwork::Open(c) => {
                let mut rules = Vec::with_capacity(c.node_count() as usize);
                rules.push(NodeRule::CopyRight);
                rules.extend(c.operators().into_iter().map(NodeRule::Gate));
                rules.push(NodeRule::CopyLeft);
                rules
            }
            FiniteNetwork::Closed(c) => c.operators().into_iter().map(NodeRule::Gate).collect(),
        }
    }
}

/// Applies every coordinate function synchronously.
pub fn evaluate<'a>(
    network: impl Into<FiniteNetwork<'a>>,
    s: &StateVector,
) -> Result<StateVector, ModelError> {
    let network = network.into();
    let n = network.node_count();
    if s.len() != n {
        return Err(ModelError::Dimension {
            expected: n,
            got: s.len(),
        });
    }
    let cyclic = network.is_cyclic();
    let left = |i: usize| s.get(if i == 0 { n - 1 } else { i - 1 });
    let right = |i: usize| s.get(if i + 1 == n { 0 } else { i + 1 });
    let rules = network.rules();
    Ok(StateVector::from_fn(n, |i| match rules[i] {
        NodeRule::CopyRight => right(i),
        NodeRule::CopyLeft => left(i),
        NodeRule::Gate(op) => {
            debug_assert!(cyclic || (i > 0 && i + 1 < n));
            op.apply(left(i), right(i))
        }
    }))
}

pub fn is_fixed_point<'a>(network: impl Into<FiniteNetwork<'a>>, s: &StateVector) -> bool {
    evaluate(network, s).map(|image| &image == s).unwrap_or(false)
}

/// Run-length encodes an operator sequence into an open chain.
pub fn open_from_operators(ops: &[Operator]) -> OpenChain {
    let mut runs: Vec<u64> = Vec::new();
    let mut prev: Option<Operator> = None;
    for &op in ops {
        if prev == Some(op) {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
            prev = Some(op);
        }
    }
    OpenChain {
        runs,
        leading_op: ops.first().copied().unwrap_or_default(),
    }
}

pub fn operators_from_open(c: &OpenChain) -> Vec<Operator> {
    c.operators()
}

fn operators_from_runs(runs: &[u64], leading: Operator) -> Vec<Operator> {
    let mut ops = Vec::with_capacity(runs.iter().sum::<u64>() as usize);
    let mut op = leading;
    for &k in runs {
        ops.extend(std::iter::repeat_n(op, k as usize));
        op = op.dual();
    }
    ops
}

//! Fixed points of AND-OR Boolean networks whose wiring diagram is a chain.
//!
//! Networks are described by run-length tuples of their operators: open
//! chains `(k_1, ..., k_m)`, closed chains `[k_1, ..., k_r]`, and a
//! classification of infinite chains. Counts come from exact recursions on
//! those tuples; [`enumerate`] lists fixed points through the block
//! structure, and [`oracle`] scans every state as an independent check.
//!
//! ```
//! use andor_chain::{count::count_open, count::RunTuple};
//!
//! let n = count_open(&RunTuple::runs(&[2, 1, 1, 3, 2, 1]).unwrap()).unwrap();
//! assert_eq!(n.to_string(), "13");
//! ```

pub mod count;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod model;
pub mod notation;
pub mod oracle;
pub mod sequences;
pub mod state;
pub mod sweep;

pub use count::{CountEngine, RunTuple};
pub use error::{CountError, EnumerateError, ModelError, ParseError};
pub use exec::Exec;
pub use model::{
    evaluate, Chain, ClosedChain, Count, FiniteNetwork, InfiniteChain, OpenChain, Operator,
};
pub use notation::{format_spec, parse_spec};
pub use state::StateVector;

pub use num_bigint::BigUint;

/// Count for any parsed chain.
pub fn count_chain(engine: &mut CountEngine, chain: &Chain) -> Result<Count, CountError> {
    match chain {
        Chain::Open(c) => Ok(Count::Finite(engine.count_open_chain(c))),
        Chain::Closed(c) => Ok(Count::Finite(engine.count_closed_chain(c))),
        Chain::Infinite(c) => engine.count_infinite(c),
    }
}

/// Formula count of a finite network.
pub fn count_finite(engine: &mut CountEngine, network: FiniteNetwork<'_>) -> BigUint {
    match network {
        FiniteNetwork::Open(c) => engine.count_open_chain(c),
        FiniteNetwork::Closed(c) => engine.count_closed_chain(c),
    }
}

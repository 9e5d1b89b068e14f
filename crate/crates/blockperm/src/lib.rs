//! Permutation codes under the block permutation metric and its cyclic
//! variant on cosets of the full cycle.
//!
//! The crate covers the whole pipeline: metric primitives on permutations
//! and cosets ([`perm`], [`coset`]), the residue-group machinery behind the
//! code maps ([`algebra`]), the coset code construction and its exhaustive
//! certification ([`cyclic`]), the partition of S_n into block-metric codes
//! plus the explicit systematic encoder ([`block`]), and sphere volumes with
//! the Gilbert-Varshamov comparison ([`bounds`]).
//!
//! ```
//! use blockperm::{CyclicCoset, Permutation};
//!
//! let a: Permutation = "1 2 3 4".parse().unwrap();
//! let b: Permutation = "2 3 4 1".parse().unwrap();
//! // One rotation apart: one block boundary moves, and the cyclic edge
//! // sets coincide.
//! assert_eq!(a.d_block(&b).unwrap(), 1);
//! let (ca, cb) = (
//!     CyclicCoset::from_permutation(&a),
//!     CyclicCoset::from_permutation(&b),
//! );
//! assert_eq!(ca.d_cyclic(&cb).unwrap(), 0);
//! ```

pub mod algebra;
pub mod block;
pub mod bounds;
pub mod budget;
pub mod codebook;
pub mod coset;
pub mod cyclic;
pub mod error;
pub mod perm;
pub mod sampling;
pub mod zn;

pub use budget::Budget;
pub use codebook::{Certification, Codebook, Metric};
pub use coset::{coset_slot, CosetSpace, CyclicCoset, PermSpace};
pub use error::{Error, Result};
pub use perm::{EdgeSet, Permutation};

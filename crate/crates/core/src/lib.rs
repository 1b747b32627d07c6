//! Exact-arithmetic measures on the symmetric group arising from card
//! shuffling, together with total-variation distances between them.
//!
//! The library covers four measure families on `S_n`:
//!
//! * `riffle` — the k-riffle (Gilbert-Shannon-Reeds) shuffle measure, whose
//!   mass at a permutation depends only on its descent count;
//! * `cut-riffle` — a uniform cut followed by a k-riffle shuffle, whose mass
//!   depends only on the cyclic descent count;
//! * `affine` — the affine k-shuffle measure, whose mass depends on the
//!   cyclic descent count and the major index through Ramanujan sums;
//! * `uniform` — the uniform distribution.
//!
//! Every probability mass and every distance is a [`BigRational`]; floating
//! point appears only in rendered output and in one explicit upper bound.
//! Closed-form mass functions are cross-checked against brute-force
//! enumeration oracles, and seeded Monte Carlo simulators of the physical
//! shuffles are compared against the exact laws.

pub mod error;
pub mod exact;
pub mod measure;
pub mod perm;
pub mod sim;
pub mod tv;
pub mod verify;

pub use error::Error;
pub use exact::BigRational;
pub use measure::{Family, FullDistribution, MeasureSpec, StatDistribution, Statistic};
pub use perm::{Permutation, Word};
pub use sim::SampleReport;
pub use tv::MixingRow;

/// Largest deck size for which exhaustive enumeration of `S_n` is allowed
/// unless the caller raises the limit explicitly.
pub const DEFAULT_ENUM_LIMIT: u32 = 10;

/// Default budget for `k^n`-word oracles.
pub const DEFAULT_WORD_LIMIT: u64 = 10_000_000;

//! Split Cycle and related Condorcet voting methods.
//!
//! The crate is organised around [`Profile`] (a multiset of linear ballots)
//! and [`MarginGraph`] (the pairwise margins every Condorcet method reads).
//!
//! * [`methods`]: Split Cycle, Beat Path, Ranked Pairs, Minimax, Copeland,
//!   GETCHA, GOCHA, the uncovered set, Ranked Choice and Plurality.
//! * [`criteria`]: per-instance axiom checkers producing self-verifying
//!   [`criteria::Witness`] records, clone detection, and constructive
//!   procedures for rejectability and resolvability.
//! * [`generators`]: seeded impartial culture, Mallows and limit samplers.
//! * [`io`]: preflib strict-order files, canonical profile text, CSV output.
//! * [`sim`]: parallel, reproducible simulation campaigns.
//!
//! ```
//! use splitcycle::{methods, Ballot, Profile};
//!
//! let ballot = |ids: &[u32]| Ballot::from_ids(ids).unwrap();
//! let p = Profile::from_ballots([
//!     (ballot(&[1, 0, 2]), 2),
//!     (ballot(&[0, 2, 1]), 3),
//!     (ballot(&[2, 1, 0]), 4),
//! ])
//! .unwrap();
//! let winners = methods::split_cycle(&p.margin_graph());
//! assert_eq!(winners.as_slice(), &[splitcycle::Candidate(2)]);
//! ```

pub mod criteria;
pub mod debord;
mod error;
pub mod generators;
pub mod io;
mod margins;
pub mod methods;
mod profile;
pub mod sim;

pub use debord::realize;
pub use error::{Error, Result};
pub use margins::{MarginGraph, QualitativeMarginGraph};
pub use methods::{MethodId, WinnerSet};
pub use profile::{Ballot, Candidate, Profile};

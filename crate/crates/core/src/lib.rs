//! Exact selection of small index subsets whose vector sum dominates a given
//! fraction of the total.
//!
//! Given `N` nonnegative rational vectors in dimension `d` and a ratio
//! `a = p/q`, [`selector::select_rich_subset`] returns indices `I` with
//! `sum_{i in I} u_i >= a * sum_i u_i` coordinatewise and
//! `|I| <= (d - 1) + ceil((pN - d + 1) / q)`. The [`extremal`] module builds
//! instances on which no smaller set exists, and [`oracle`] finds true minima
//! by exhaustive search for cross-checking.

pub mod cli;
pub mod error;
pub mod extremal;
pub mod numeric;
pub mod oracle;
pub mod selector;

pub use error::{Error, Result};
pub use numeric::{RatVec, Rational};
pub use selector::{Instance, Selection, TargetRatio};

//! Graded Frobenius characteristics of Delta-Springer modules and the
//! combinatorics behind them.

pub mod delta_springer;
pub mod error;
pub mod guard;
pub mod hall_littlewood;
pub mod macdonald;
pub mod partitions;
pub mod qt;
pub mod schur;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{Composition, DeltaParams, Partition};

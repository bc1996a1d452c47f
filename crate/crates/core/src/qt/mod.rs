//! Exact arithmetic in `Z[q,t]` and its fraction field `Q(q,t)`.

mod gcd;
mod linalg;
mod poly;
mod rational;

pub use gcd::qt_gcd;
pub use linalg::rational_solve;
pub use poly::{p_qt, q_binomial, q_integer, Monomial, QTPoly};
pub use rational::QTRational;

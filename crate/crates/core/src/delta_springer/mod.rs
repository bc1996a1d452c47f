//! Frobenius characteristics of the Delta-Springer modules and the
//! combinatorial maps relating their formulas.

pub mod conjectures;
pub mod golden;
pub mod osp;
pub mod routes;
pub mod s2;

pub use osp::OrderedSetPartition;
pub use routes::{frobenius, route_report, verify_routes, Route, RouteReport};

//! Size limits for enumeration-heavy operations. Each limit has a default and
//! can be overridden through an environment variable.

use crate::error::{Error, Result};

/// Largest `n` for partition and composition enumeration.
pub const PARTITION_N: (&str, usize) = ("DELTA_SPRINGER_MAX_PARTITION_N", 30);
/// Largest `|mu|` for a full Hall-Littlewood expansion.
pub const HALL_LITTLEWOOD_SIZE: (&str, usize) = ("DELTA_SPRINGER_MAX_HL_SIZE", 24);
/// Largest `|Lambda|` for the skewing route.
pub const SKEW_ROUTE_SIZE: (&str, usize) = ("DELTA_SPRINGER_MAX_SKEW_SIZE", 40);
/// Largest `|Lambda|` for enumerating battery-powered tableaux.
pub const BATTERY_ROUTE_SIZE: (&str, usize) = ("DELTA_SPRINGER_MAX_BATTERY_SIZE", 40);
/// Largest `n` for Macdonald polynomials and the Delta operator.
pub const MACDONALD_N: (&str, usize) = ("DELTA_SPRINGER_MAX_MACDONALD_N", 7);

pub fn limit(guard: (&str, usize)) -> usize {
    std::env::var(guard.0)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(guard.1)
}

pub fn check(guard: (&str, usize), what: &str, size: usize) -> Result<()> {
    let limit = limit(guard);
    if size > limit {
        return Err(Error::GuardExceeded {
            what: what.to_string(),
            size,
            limit,
            var: guard.0.to_string(),
        });
    }
    Ok(())
}

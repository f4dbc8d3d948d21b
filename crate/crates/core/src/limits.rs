//! Process-wide size caps for the brute-force enumerations.
//!
//! Filling sums walk all `n!` standard fillings and the Assaf graph has `n!`
//! vertices, so both are capped. `YAMHALL_MAX_N` replaces both defaults;
//! [`set_override`] disables the caps entirely.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_FILLING_BOUND: usize = 10;
pub const DEFAULT_GRAPH_BOUND: usize = 8;

/// Hard ceiling from the bit-packed signature and descent masks.
pub const MAX_SUPPORTED_N: usize = 63;

static OVERRIDE: AtomicBool = AtomicBool::new(false);

fn env_bound() -> Option<usize> {
    static ENV: OnceLock<Option<usize>> = OnceLock::new();
    *ENV.get_or_init(|| {
        std::env::var("YAMHALL_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse().ok())
    })
}

pub fn filling_bound() -> usize {
    env_bound().unwrap_or(DEFAULT_FILLING_BOUND)
}

pub fn graph_bound() -> usize {
    env_bound().unwrap_or(DEFAULT_GRAPH_BOUND)
}

/// Lift the caps (the CLI's `--force`).
pub fn set_override(on: bool) {
    OVERRIDE.store(on, Ordering::SeqCst);
}

pub fn override_enabled() -> bool {
    OVERRIDE.load(Ordering::SeqCst)
}

fn check(n: usize, bound: usize) -> Result<()> {
    if n > MAX_SUPPORTED_N || (n > bound && !override_enabled()) {
        let bound = if n > MAX_SUPPORTED_N {
            MAX_SUPPORTED_N
        } else {
            bound
        };
        return Err(Error::BoundExceeded { n, bound });
    }
    Ok(())
}

pub(crate) fn check_filling(n: usize) -> Result<()> {
    check(n, filling_bound())
}

pub(crate) fn check_graph(n: usize) -> Result<()> {
    check(n, graph_bound())
}

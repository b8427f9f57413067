//! Process-wide switch that lifts the soft size guards of the exhaustive
//! solvers up to the hard limits of their data representations.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCED: AtomicBool = AtomicBool::new(false);

pub fn set_forced(on: bool) {
    FORCED.store(on, Ordering::Relaxed);
}

pub fn forced() -> bool {
    FORCED.load(Ordering::Relaxed)
}

/// The guard in effect: `soft` normally, `hard` when forced.
pub(crate) fn effective(soft: usize, hard: usize) -> usize {
    if forced() {
        hard.max(soft)
    } else {
        soft
    }
}

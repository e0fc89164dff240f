//! Resource caps.
//!
//! The process-wide defaults can be changed with [`set_global`]; the degree
//! cap also reads `SYMSTAB_DEGREE_CAP` on first use. [`with_limits`] installs
//! an override for the current thread only, which is what tests use.

use std::cell::Cell;
use std::sync::OnceLock;

use parking_lot::RwLock;

use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_CAP: usize = 12;
pub const DEFAULT_ENUMERATION_CAP: usize = 8;
pub const DEFAULT_HORIZON: usize = 14;
pub const DEGREE_CAP_ENV: &str = "SYMSTAB_DEGREE_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest degree for which change-of-basis matrices are assembled.
    pub degree: usize,
    /// Largest `n` for shuffle and Macdonald filling enumeration.
    pub enumeration: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { degree: DEFAULT_DEGREE_CAP, enumeration: DEFAULT_ENUMERATION_CAP }
    }
}

fn global() -> &'static RwLock<Limits> {
    static G: OnceLock<RwLock<Limits>> = OnceLock::new();
    G.get_or_init(|| {
        let mut l = Limits::default();
        if let Some(cap) = std::env::var(DEGREE_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            l.degree = cap;
        }
        RwLock::new(l)
    })
}

thread_local! {
    static LOCAL: Cell<Option<Limits>> = const { Cell::new(None) };
}

/// Limits in effect on this thread.
pub fn current() -> Limits {
    LOCAL.with(|l| l.get()).unwrap_or_else(|| *global().read())
}

pub fn set_global(limits: Limits) {
    *global().write() = limits;
}

/// Runs `f` with `limits` in effect on the current thread.
pub fn with_limits<T>(limits: Limits, f: impl FnOnce() -> T) -> T {
    let prev = LOCAL.with(|l| l.replace(Some(limits)));
    struct Restore(Option<Limits>);
    impl Drop for Restore {
        fn drop(&mut self) {
            LOCAL.with(|l| l.set(self.0));
        }
    }
    let _guard = Restore(prev);
    f()
}

pub fn check_degree(degree: usize) -> Result<()> {
    let cap = current().degree;
    if degree > cap {
        Err(Error::DegreeCap { degree, cap })
    } else {
        Ok(())
    }
}

pub fn check_enumeration(size: usize) -> Result<()> {
    let cap = current().enumeration;
    if size > cap {
        Err(Error::EnumerationCap { size, cap })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scoped_override_restores() {
        let before = current();
        let inner = with_limits(Limits { degree: 3, enumeration: 2 }, || {
            assert!(check_degree(4).is_err());
            assert!(check_enumeration(2).is_ok());
            current()
        });
        assert_eq!(inner.degree, 3);
        assert_eq!(current(), before);
    }
}

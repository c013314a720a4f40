//! Test-only fault injection. Each fault corrupts one decision procedure on
//! the current thread so that property suites can show they would notice.

use crate::bits::Bits;
use std::cell::Cell;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fault {
    /// `leq` ignores the first model.
    Leq,
    /// `jacobson` returns its argument unchanged.
    Jacobson,
    /// `verify_collapse` accepts everything.
    VerifyCollapse,
}

impl std::str::FromStr for Fault {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "leq" => Ok(Fault::Leq),
            "jacobson" => Ok(Fault::Jacobson),
            "verify-collapse" | "verify_collapse" => Ok(Fault::VerifyCollapse),
            _ => Err(crate::error::Error::Invalid(format!("unknown fault `{s}`"))),
        }
    }
}

thread_local! {
    static ACTIVE: Cell<Option<Fault>> = const { Cell::new(None) };
}

struct Reset(Option<Fault>);

impl Drop for Reset {
    fn drop(&mut self) {
        ACTIVE.with(|a| a.set(self.0));
    }
}

/// Run `body` with `fault` active on this thread.
pub fn with_fault<R>(fault: Fault, body: impl FnOnce() -> R) -> R {
    let prev = ACTIVE.with(|a| a.replace(Some(fault)));
    let _reset = Reset(prev);
    body()
}

pub fn active(fault: Fault) -> bool {
    ACTIVE.with(|a| a.get() == Some(fault))
}

pub(crate) fn model_leq(a: &Bits, b: &Bits) -> bool {
    if active(Fault::Leq) && !a.is_empty() {
        let mut d = a.and_not(b);
        d.clear(0);
        return d.is_empty();
    }
    a.is_subset(b)
}

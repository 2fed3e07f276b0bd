//! The `→` relation: the exact decision, certificates, proof search and
//! bounded axiom checks.

pub mod axioms;
pub mod certificate;
pub mod proof;
pub mod search;
pub mod universe;

use std::fmt;

use crate::term::{Eidostate, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    ContentMismatch,
    EntropyDecrease,
    Ok,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::ContentMismatch => "content-mismatch",
            Reason::EntropyDecrease => "entropy-decrease",
            Reason::Ok => "ok",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub reachable: bool,
    pub reason: Reason,
    pub weight_src: Weight,
    pub weight_dst: Weight,
}

/// `E → F` exactly when contents agree and the weight does not decrease.
pub fn reachable(e: &Eidostate, f: &Eidostate) -> Decision {
    let (weight_src, weight_dst) = (e.weight(), f.weight());
    let reason = if e.content_ref() != f.content_ref() {
        Reason::ContentMismatch
    } else if weight_src > weight_dst {
        Reason::EntropyDecrease
    } else {
        Reason::Ok
    };
    Decision {
        reachable: reason == Reason::Ok,
        reason,
        weight_src,
        weight_dst,
    }
}

/// `E ↔ F`.
pub fn equivalent(e: &Eidostate, f: &Eidostate) -> bool {
    reachable(e, f).reachable && reachable(f, e).reachable
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_eidostate, Declarations};

    fn e(s: &str) -> Eidostate {
        parse_eidostate(s, &Declarations::default()).unwrap()
    }

    #[test]
    fn decision_examples() {
        assert!(reachable(&e("h"), &e("{h,t}")).reachable);
        assert_eq!(
            reachable(&e("{h,t}"), &e("h")).reason,
            Reason::EntropyDecrease
        );
        assert!(equivalent(&e("{h,t}"), &e("{(h+r0),(h+r1)}")));
        assert_eq!(
            reachable(&e("h"), &e("(t+h)")).reason,
            Reason::ContentMismatch
        );
    }
}

//! Finite quantum-Wajsberg (QW) algebras.
//!
//! A QW algebra is an involutive BE algebra `(X, →, 0, 1)` satisfying
//! `x → ((x ⊓ y) ⊓ (z ⊓ x)) = (x → y) ⊓ (x → z)`. This crate works with
//! finite ones given by their implication tables:
//!
//! * [`algebra`] and [`axioms`]: tables, derived operations, axiom classes.
//! * [`laws`]: ground-instance checking of the standard identities.
//! * [`structure`]: filters, deductive systems, ideals, maximality,
//!   primality and linearity.
//! * [`congruence`]: congruences induced by deductive systems, quotients,
//!   element orders and local finiteness.
//! * [`search`]: enumeration of all QW algebras of a small order up to
//!   isomorphism.
//! * [`format`], [`report`], [`commands`]: the text format and the
//!   `check` / `analyze` / `quotient` / `search` entry points used by the
//!   `qw` binary.
//!
//! Runnable walkthroughs of each capability live in the crate's `examples/`.

pub mod algebra;
pub mod axioms;
pub mod catalog;
pub mod commands;
pub mod congruence;
pub mod error;
pub mod format;
pub mod laws;
pub mod report;
pub mod search;
pub mod structure;
pub mod subset;

pub use algebra::{ElementId, FiniteAlgebra};
pub use error::{Error, ParseError, Result};
pub use subset::Subset;

/// Size limits for the exhaustive procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gates {
    /// Largest carrier for which all `2ⁿ` subsets are scanned.
    pub subsets: usize,
    /// Largest carrier for which all set partitions are scanned.
    pub partitions: usize,
    /// Largest order accepted by model enumeration.
    pub search_order: usize,
}

impl Default for Gates {
    fn default() -> Self {
        Gates { subsets: 24, partitions: 8, search_order: 8 }
    }
}

impl Gates {
    pub fn unlimited() -> Self {
        Gates { subsets: algebra::MAX_ORDER, partitions: usize::MAX, search_order: usize::MAX }
    }

    pub(crate) fn check_subsets(&self, n: usize) -> Result<()> {
        if n <= self.subsets && n < usize::BITS as usize {
            Ok(())
        } else {
            Err(Error::GateExceeded { n, gate: self.subsets })
        }
    }
}

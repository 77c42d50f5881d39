//! Labeled cell complexes standing in for Reeb spaces, cobordism-style
//! modules over their fiber types, and exact non-vanishing certificates for
//! top homology with module coefficients.
//!
//! The pipeline: register the diffeomorphism types appearing as fibers
//! ([`fiber::TypeRegistry`]), describe the quotient space as a labeled cell
//! complex ([`complex::LabeledComplex`]), extract the relation vectors its
//! transitions force, quotient the free module on the types by them
//! ([`quotient::QuotientModule`]), and ask whether any label's class
//! survives — if one does, the canonical top chain is a nonzero cycle and
//! the top homology group with those coefficients cannot vanish.
//!
//! All arithmetic is exact: unbounded integers, Smith and Hermite normal
//! forms, integer lattices. Group-valued labelings (cobordism classes,
//! sphere groups, anything user-declared) enter as [`fiber::Classifier`]s;
//! their kernels generate the same machinery.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `reebmod` binary for the file-driven interface.

pub mod cli;
pub mod complex;
pub mod error;
pub mod fiber;
pub mod homology;
pub mod lattice;
pub mod matrix;
pub mod quotient;
pub mod report;
pub mod ring;
pub mod scene_io;
pub mod scenes;
pub mod snf;
pub mod verdict;

pub use complex::{FaceMark, LabeledComplex, ValidationReport};
pub use error::{Error, Result};
pub use fiber::{Classifier, FiberKind, FiberType, GenusConvention, TypeRegistry};
pub use homology::{GroupSummary, HomologySummary, TopHomology};
pub use matrix::IntMatrix;
pub use quotient::{ModuleElement, QuotientModule};
pub use ring::RingSpec;
pub use snf::{smith_normal_form, SnfResult};
pub use verdict::{CanonicalChain, Relation, RelationMode, TransitionReport, Verdict};

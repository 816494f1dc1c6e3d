//! General concept lattice construction and implication extraction for
//! formal contexts.
//!
//! A formal context distinguishes n_F classes of objects. Each union of
//! classes (a general extent) carries a closed interval of generalized
//! attributes as its intent, delimited by a lower bound in disjunctive
//! normal form and an upper bound in conjunctive normal form. The whole
//! lattice is read off the context in a single scan and every implication
//! question between composite attributes reduces to one comparison against
//! the contextual truth.

pub mod attr;
pub mod bits;
pub mod context;
pub mod degeneracy;
pub mod error;
pub mod export;
pub mod gcl;
pub mod implication;
pub mod oracle;
pub mod sublattice;

#[cfg(test)]
pub(crate) mod testutil;

pub use attr::{
    irreducible_covers, AttrExpr, AttrFn, AttrSpace, ClauseRole, CoverMode, LiteralClause,
};
pub use context::{
    ContextFormat, ContextQuotient, DiscernibleClass, ExtentMask, FormalContext, ParseOptions,
    DEFAULT_ATTR_CAP, FICTITIOUS_PREFIX,
};
pub use degeneracy::{
    degeneracy_report, referential_context, restrict, DegeneracyReport, S2Method,
};
pub use error::{Error, Result};
pub use export::{lattice_dot, lattice_export, lattice_json, LatticeExport, LatticeNode};
pub use gcl::{Gcl, GeneralConcept, DEFAULT_ENUMERATION_CAP};
pub use implication::{
    allowable, closure, closure_upper, equivalent, fcl_implication, judge, rsl_implication,
    ImplicationVerdict, InformativeClass, Rule, RuleVerdict, TClass,
};
pub use oracle::{enumerate_mstar, verify, OracleOptions, OracleReport, Violation};
pub use sublattice::{
    cgrsl_intent, classical_candidates, fcl_concepts, gfcl_intent, grsl_intent, rsl_concepts,
    ClassicalCandidates, ClassicalConcept, ConceptKind, GeneralizedIntent,
};

//! Generalized attributes over the alphabet M: expression parsing, canonical
//! truth functions and irreducible literal covers.

mod clause;
mod expr;
mod func;

pub use clause::{irreducible_covers, ClauseRole, CoverMode, LiteralClause};
pub use expr::{parse, AttrExpr};
pub use func::{AttrFn, AttrSpace, MAX_TABLE_WIDTH};

//! Canonical truth functions over the attribute alphabet.
//!
//! An [`AttrFn`] is a 2^|M|-bit vector: bit i is the value on the i-th total
//! assignment, where attribute j of the alphabet contributes bit j of i.
//! Two functions are equal exactly when their bit vectors are equal.

use std::collections::HashMap;

use crate::attr::{AttrExpr, ClauseRole, LiteralClause};
use crate::bits::Bits;
use crate::error::{Error, Result};

/// Hard ceiling on alphabet width; tables are 2^width bits.
pub const MAX_TABLE_WIDTH: usize = 26;

/// The attribute alphabet an [`AttrFn`] is bound to, together with the mask
/// of admissible minterms. With no intrinsic constraints the mask is all-ones
/// and `rank = 2^|M|`; declared forbidden minterms are stripped from every
/// function built through the space.
#[derive(Debug, Clone)]
pub struct AttrSpace {
    attrs: Vec<String>,
    index: HashMap<String, usize>,
    allowed: Bits,
}

impl AttrSpace {
    pub fn new(attrs: &[String]) -> Result<Self> {
        if attrs.len() > MAX_TABLE_WIDTH {
            return Err(Error::AttributeCapExceeded {
                count: attrs.len(),
                cap: MAX_TABLE_WIDTH,
            });
        }
        let mut index = HashMap::new();
        for (j, name) in attrs.iter().enumerate() {
            if index.insert(name.clone(), j).is_some() {
                return Err(Error::InvalidAttributeName(format!("duplicate `{name}`")));
            }
        }
        let size = 1usize << attrs.len();
        Ok(AttrSpace {
            attrs: attrs.to_vec(),
            index,
            allowed: Bits::ones(size),
        })
    }

    /// Declares forbidden minterms; they are masked out of every function.
    pub fn with_forbidden(attrs: &[String], forbidden: &Bits) -> Result<Self> {
        let mut space = Self::new(attrs)?;
        if forbidden.len() != space.size() {
            return Err(Error::Constraints(format!(
                "forbidden mask has {} bits, expected {}",
                forbidden.len(),
                space.size()
            )));
        }
        space.allowed = forbidden.not();
        Ok(space)
    }

    pub fn width(&self) -> usize {
        self.attrs.len()
    }

    /// Number of total assignments, 2^|M|.
    pub fn size(&self) -> usize {
        1usize << self.attrs.len()
    }

    /// rank(M) = log2 |M*| = 2^|M| − r, with r the forbidden minterm count.
    pub fn rank(&self) -> u64 {
        self.allowed.count_ones()
    }

    pub fn allowed(&self) -> &Bits {
        &self.allowed
    }

    pub fn forbidden_count(&self) -> u64 {
        self.size() as u64 - self.rank()
    }

    pub fn attrs(&self) -> &[String] {
        &self.attrs
    }

    pub fn attr_name(&self, index: usize) -> &str {
        &self.attrs[index]
    }

    pub fn attr_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownAttribute(name.to_string()))
    }

    /// The constant falsity 𝟎.
    pub fn zero(&self) -> AttrFn {
        AttrFn {
            width: self.width(),
            table: Bits::zeros(self.size()),
        }
    }

    /// The constant truth 𝟏 (all admissible minterms).
    pub fn one(&self) -> AttrFn {
        AttrFn {
            width: self.width(),
            table: self.allowed.clone(),
        }
    }

    /// The plain attribute at `index`.
    pub fn var(&self, index: usize) -> AttrFn {
        self.literal(index, true)
    }

    /// The attribute or its negation as a function.
    pub fn literal(&self, index: usize, positive: bool) -> AttrFn {
        assert!(index < self.width(), "attribute index out of range");
        let size = self.size();
        let table = Bits::from_indices(
            size,
            (0..size).filter(|i| ((i >> index) & 1 == 1) == positive),
        );
        AttrFn {
            width: self.width(),
            table: table.and(&self.allowed),
        }
    }

    /// The single-minterm function e_i, or 𝟎 if the minterm is forbidden.
    pub fn minterm(&self, index: usize) -> AttrFn {
        assert!(index < self.size(), "minterm index out of range");
        AttrFn {
            width: self.width(),
            table: Bits::from_indices(self.size(), [index]).and(&self.allowed),
        }
    }

    /// Complement within the admissible minterms.
    pub fn not(&self, f: &AttrFn) -> AttrFn {
        self.check_width(f);
        AttrFn {
            width: f.width,
            table: f.table.not().and(&self.allowed),
        }
    }

    /// Evaluates an expression into its canonical truth function.
    pub fn from_expr(&self, expr: &AttrExpr) -> AttrFn {
        match expr {
            AttrExpr::Var(j) => self.var(*j),
            AttrExpr::Not(inner) => self.not(&self.from_expr(inner)),
            AttrExpr::And(l, r) => self.from_expr(l).and(&self.from_expr(r)),
            AttrExpr::Or(l, r) => self.from_expr(l).or(&self.from_expr(r)),
            AttrExpr::Zero => self.zero(),
            AttrExpr::One => self.one(),
        }
    }

    /// Parses expression text straight to a truth function.
    pub fn parse_fn(&self, text: &str) -> Result<AttrFn> {
        Ok(self.from_expr(&crate::attr::parse(text, self)?))
    }

    /// Full minterm DNF: one conjunction per satisfied assignment, ascending.
    pub fn to_dnf(&self, f: &AttrFn) -> Vec<LiteralClause> {
        self.check_width(f);
        f.table
            .iter_ones()
            .map(|i| self.full_clause(i, ClauseRole::Conjunction))
            .collect()
    }

    /// Full maxterm CNF: one disjunction per falsified assignment, ascending.
    pub fn to_cnf(&self, f: &AttrFn) -> Vec<LiteralClause> {
        self.check_width(f);
        f.table
            .not()
            .iter_ones()
            .map(|i| self.full_clause(i, ClauseRole::Disjunction))
            .collect()
    }

    fn full_clause(&self, minterm: usize, role: ClauseRole) -> LiteralClause {
        // A minterm conjunction repeats the assignment; a maxterm disjunction
        // negates it.
        let flip = matches!(role, ClauseRole::Disjunction);
        LiteralClause::new(
            (0..self.width()).map(|j| (j, ((minterm >> j) & 1 == 1) != flip)),
            role,
        )
    }

    /// Rebuilds a function from clauses: OR of conjunctions, or AND of
    /// disjunctions, over the whole clause list.
    pub fn from_clauses(&self, clauses: &[LiteralClause], role: ClauseRole) -> AttrFn {
        match role {
            ClauseRole::Conjunction => clauses
                .iter()
                .fold(self.zero(), |acc, c| acc.or(&c.to_fn(self))),
            ClauseRole::Disjunction => clauses
                .iter()
                .fold(self.one(), |acc, c| acc.and(&c.to_fn(self))),
        }
    }

    /// Canonical DNF rendering: terms ascending by minterm index, `~` for
    /// negation, explicit `*` between literals. The empty sum prints as `0`.
    pub fn dnf_string(&self, f: &AttrFn) -> String {
        self.check_width(f);
        let terms = self.to_dnf(f);
        if terms.is_empty() {
            return "0".into();
        }
        terms
            .iter()
            .map(|c| c.display(self))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Canonical CNF rendering: parenthesized clauses joined by `*`.
    pub fn cnf_string(&self, f: &AttrFn) -> String {
        self.check_width(f);
        let clauses = self.to_cnf(f);
        if clauses.is_empty() {
            return "1".into();
        }
        clauses
            .iter()
            .map(|c| format!("({})", c.display(self)))
            .collect::<Vec<_>>()
            .join("*")
    }

    fn check_width(&self, f: &AttrFn) {
        assert_eq!(
            f.width,
            self.width(),
            "attribute function width {} does not match alphabet width {}",
            f.width,
            self.width()
        );
    }
}

/// A generalized attribute in canonical truth-function form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AttrFn {
    width: usize,
    table: Bits,
}

impl AttrFn {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn table(&self) -> &Bits {
        &self.table
    }

    /// Value on one total assignment.
    pub fn eval(&self, minterm: usize) -> bool {
        self.table.get(minterm)
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_zero()
    }

    /// Number of satisfied assignments.
    pub fn support(&self) -> u64 {
        self.table.count_ones()
    }

    /// Conjunction. Panics if the operands belong to different alphabets.
    pub fn and(&self, other: &AttrFn) -> AttrFn {
        assert_eq!(self.width, other.width, "attribute function width mismatch");
        AttrFn {
            width: self.width,
            table: self.table.and(&other.table),
        }
    }

    /// Disjunction. Panics if the operands belong to different alphabets.
    pub fn or(&self, other: &AttrFn) -> AttrFn {
        assert_eq!(self.width, other.width, "attribute function width mismatch");
        AttrFn {
            width: self.width,
            table: self.table.or(&other.table),
        }
    }

    /// The order on M*: f ≤ g iff f's minterms are contained in g's.
    pub fn leq(&self, other: &AttrFn) -> bool {
        assert_eq!(self.width, other.width, "attribute function width mismatch");
        self.table.is_subset(&other.table)
    }

    pub fn lt(&self, other: &AttrFn) -> bool {
        self.leq(other) && self != other
    }

    pub(crate) fn from_table(width: usize, table: Bits) -> AttrFn {
        assert_eq!(table.len(), 1usize << width);
        AttrFn { width, table }
    }
}

impl std::fmt::Debug for AttrFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "AttrFn(width={}, {:?})", self.width, self.table)
    }
}

//! Literal clauses and the exhaustive search for irreducible covers.

use crate::attr::{AttrFn, AttrSpace};
use crate::context::ExtentMask;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClauseRole {
    Disjunction,
    Conjunction,
}

/// Search mode for [`irreducible_covers`], matching the clause role produced.
pub type CoverMode = ClauseRole;

/// A clause of signed attributes: no attribute appears twice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiteralClause {
    literals: Vec<(usize, bool)>,
    role: ClauseRole,
}

impl LiteralClause {
    /// Builds a clause; literals are sorted by attribute index.
    /// Panics if an attribute appears twice.
    pub fn new(literals: impl IntoIterator<Item = (usize, bool)>, role: ClauseRole) -> Self {
        let mut literals: Vec<(usize, bool)> = literals.into_iter().collect();
        literals.sort_unstable();
        for pair in literals.windows(2) {
            assert_ne!(pair[0].0, pair[1].0, "attribute repeated in clause");
        }
        LiteralClause { literals, role }
    }

    pub fn literals(&self) -> &[(usize, bool)] {
        &self.literals
    }

    pub fn role(&self) -> ClauseRole {
        self.role
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn to_fn(&self, space: &AttrSpace) -> AttrFn {
        match self.role {
            ClauseRole::Conjunction => self.literals.iter().fold(space.one(), |acc, &(j, pos)| {
                acc.and(&space.literal(j, pos))
            }),
            ClauseRole::Disjunction => self.literals.iter().fold(space.zero(), |acc, &(j, pos)| {
                acc.or(&space.literal(j, pos))
            }),
        }
    }

    /// `c*~d` for conjunctions, `b + ~e` for disjunctions. The empty
    /// conjunction is `1`, the empty disjunction `0`.
    pub fn display(&self, space: &AttrSpace) -> String {
        if self.literals.is_empty() {
            return match self.role {
                ClauseRole::Conjunction => "1".into(),
                ClauseRole::Disjunction => "0".into(),
            };
        }
        let rendered: Vec<String> = self
            .literals
            .iter()
            .map(|&(j, pos)| {
                if pos {
                    space.attr_name(j).to_string()
                } else {
                    format!("~{}", space.attr_name(j))
                }
            })
            .collect();
        match self.role {
            ClauseRole::Conjunction => rendered.join("*"),
            ClauseRole::Disjunction => rendered.join(" + "),
        }
    }

    /// True on the given total assignment.
    pub fn eval(&self, minterm: usize) -> bool {
        match self.role {
            ClauseRole::Conjunction => self
                .literals
                .iter()
                .all(|&(j, pos)| ((minterm >> j) & 1 == 1) == pos),
            ClauseRole::Disjunction => self
                .literals
                .iter()
                .any(|&(j, pos)| ((minterm >> j) & 1 == 1) == pos),
        }
    }
}

/// All clauses over the signed attributes whose derived object set equals the
/// target extent and which lose that property when any single literal is
/// dropped. Exhaustive over clause sizes 1..=|M|; exponential in |M| and
/// meant for desk-scale alphabets.
///
/// `class_minterms` gives each discernible class's signature as a truth-table
/// index; the target mask selects classes in the same order.
pub fn irreducible_covers(
    space: &AttrSpace,
    class_minterms: &[usize],
    target: &ExtentMask,
    mode: CoverMode,
) -> Result<Vec<LiteralClause>> {
    if target.width() != class_minterms.len() {
        return Err(Error::MaskWidth {
            got: target.width(),
            expected: class_minterms.len(),
        });
    }
    let width = space.width();
    let n_f = class_minterms.len();

    // Per-literal class extents: which classes satisfy attribute j / its negation.
    let literal_extent = |j: usize, pos: bool| -> ExtentMask {
        ExtentMask::from_classes(
            n_f,
            (0..n_f).filter(|&k| ((class_minterms[k] >> j) & 1 == 1) == pos),
        )
    };
    let mut extents = vec![[ExtentMask::empty(n_f), ExtentMask::empty(n_f)]; width];
    for (j, pair) in extents.iter_mut().enumerate() {
        pair[0] = literal_extent(j, false);
        pair[1] = literal_extent(j, true);
    }
    let clause_extent = |lits: &[(usize, bool)]| -> ExtentMask {
        match mode {
            ClauseRole::Conjunction => lits.iter().fold(ExtentMask::full(n_f), |acc, &(j, p)| {
                acc.intersect(&extents[j][p as usize])
            }),
            ClauseRole::Disjunction => lits.iter().fold(ExtentMask::empty(n_f), |acc, &(j, p)| {
                acc.union(&extents[j][p as usize])
            }),
        }
    };

    let mut found = Vec::new();
    // Attribute subsets, then a sign per chosen attribute.
    for subset in 1u64..(1u64 << width) {
        let attrs: Vec<usize> = (0..width).filter(|j| (subset >> j) & 1 == 1).collect();
        for signs in 0u64..(1u64 << attrs.len()) {
            let lits: Vec<(usize, bool)> = attrs
                .iter()
                .enumerate()
                .map(|(pos, &j)| (j, (signs >> pos) & 1 == 1))
                .collect();
            if clause_extent(&lits) != *target {
                continue;
            }
            let reducible = (0..lits.len()).any(|drop| {
                let rest: Vec<(usize, bool)> = lits
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, &l)| l)
                    .collect();
                clause_extent(&rest) == *target
            });
            if !reducible {
                found.push(LiteralClause::new(lits, mode));
            }
        }
    }
    found.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.literals.cmp(&b.literals))
    });
    Ok(found)
}

//! Implication between composite attributes under a formal context.
//!
//! A rule μ1 → μ2 is allowable exactly when μ1·1_η ≤ μ2·1_η, equivalently
//! when the derived extents are nested. Refutations carry a witness class.

use std::fmt;

use crate::attr::{parse, AttrFn};
use crate::context::ExtentMask;
use crate::error::{Error, Result};
use crate::gcl::Gcl;

/// Extent relation of an allowed rule: equal extents (bi-implication) or
/// strict inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TClass {
    T1,
    T2,
}

impl fmt::Display for TClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TClass::T1 => write!(f, "T1"),
            TClass::T2 => write!(f, "T2"),
        }
    }
}

/// How informative an allowed rule is, judged on the raw truth functions:
/// a tautology (μ1 ≤ μ2), a purely informative rule (μ1 > μ2), or an
/// informative rule (unordered).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InformativeClass {
    Tautology,
    Informative,
    PurelyInformative,
}

impl fmt::Display for InformativeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InformativeClass::Tautology => write!(f, "TT"),
            InformativeClass::Informative => write!(f, "RII"),
            InformativeClass::PurelyInformative => write!(f, "RPII"),
        }
    }
}

/// Outcome of one directed implication query.
#[derive(Debug, Clone)]
pub struct ImplicationVerdict {
    pub allowed: bool,
    /// Defined when allowed.
    pub t_class: Option<TClass>,
    /// Defined when allowed.
    pub informative: Option<InformativeClass>,
    /// An occupied minterm where μ1·1_η holds but μ2·1_η fails; defined when
    /// refuted.
    pub witness_minterm: Option<usize>,
    /// Members of the witness class, for hand checking.
    pub witness_class: Vec<String>,
    /// μ1·1_η, the strongest consequent of the left side.
    pub lhs_closure: AttrFn,
    pub lhs_extent: ExtentMask,
    pub rhs_extent: ExtentMask,
}

/// Decides μ1 → μ2 under the lattice's contextual truth.
pub fn allowable(gcl: &Gcl, mu1: &AttrFn, mu2: &AttrFn) -> ImplicationVerdict {
    let lhs_closure = mu1.and(gcl.one_eta());
    let rhs_closure = mu2.and(gcl.one_eta());
    let lhs_extent = gcl.extent_of_attr(mu1);
    let rhs_extent = gcl.extent_of_attr(mu2);
    let allowed = lhs_closure.leq(&rhs_closure);
    debug_assert_eq!(allowed, lhs_extent.is_subset(&rhs_extent));

    let (t_class, informative) = if allowed {
        let t = if lhs_extent == rhs_extent {
            TClass::T1
        } else {
            TClass::T2
        };
        let info = if mu1.leq(mu2) {
            InformativeClass::Tautology
        } else if mu2.leq(mu1) {
            InformativeClass::PurelyInformative
        } else {
            InformativeClass::Informative
        };
        (Some(t), Some(info))
    } else {
        (None, None)
    };

    let (witness_minterm, witness_class) = if allowed {
        (None, Vec::new())
    } else {
        let offending = lhs_closure.table().minus(rhs_closure.table());
        let minterm = offending
            .iter_ones()
            .next()
            .expect("a refuted rule has an offending occupied minterm");
        let class = gcl
            .class_of_minterm(minterm)
            .expect("offending minterm lies under 1_eta, hence is occupied");
        (
            Some(minterm),
            gcl.quotient().classes()[class].members().to_vec(),
        )
    };

    ImplicationVerdict {
        allowed,
        t_class,
        informative,
        witness_minterm,
        witness_class,
        lhs_closure,
        lhs_extent,
        rhs_extent,
    }
}

/// μ·1_η = η(μ^R): the strongest consequent of μ.
pub fn closure(gcl: &Gcl, mu: &AttrFn) -> AttrFn {
    mu.and(gcl.one_eta())
}

/// The dual form μ+0_ρ = ρ(μ^R).
pub fn closure_upper(gcl: &Gcl, mu: &AttrFn) -> AttrFn {
    mu.or(gcl.zero_rho())
}

/// True when both attributes sit in the same general intent.
pub fn equivalent(gcl: &Gcl, mu1: &AttrFn, mu2: &AttrFn) -> bool {
    closure(gcl, mu1) == closure(gcl, mu2)
}

fn set_to_fn(gcl: &Gcl, attrs: &[&str], conjunctive: bool) -> Result<AttrFn> {
    let space = gcl.space();
    let mut acc = if conjunctive {
        space.one()
    } else {
        space.zero()
    };
    for name in attrs {
        let var = space.var(space.attr_index(name)?);
        acc = if conjunctive {
            acc.and(&var)
        } else {
            acc.or(&var)
        };
    }
    Ok(acc)
}

/// A fcl→ B as the composite rule ∏A → ∏B; the empty product is 𝟏.
pub fn fcl_implication(gcl: &Gcl, a: &[&str], b: &[&str]) -> Result<ImplicationVerdict> {
    Ok(allowable(
        gcl,
        &set_to_fn(gcl, a, true)?,
        &set_to_fn(gcl, b, true)?,
    ))
}

/// A rsl→ B as the composite rule ∑A → ∑B; the empty sum is 𝟎.
pub fn rsl_implication(gcl: &Gcl, a: &[&str], b: &[&str]) -> Result<ImplicationVerdict> {
    Ok(allowable(
        gcl,
        &set_to_fn(gcl, a, false)?,
        &set_to_fn(gcl, b, false)?,
    ))
}

/// A parsed rule line: `LHS -> RHS` or `LHS <-> RHS`.
#[derive(Debug, Clone)]
pub struct Rule {
    pub lhs: AttrFn,
    pub rhs: AttrFn,
    pub bidirectional: bool,
    pub text: String,
}

impl Rule {
    pub fn parse(text: &str, gcl: &Gcl) -> Result<Rule> {
        let (lhs_text, rhs_text, bidirectional) = match text.split_once("<->") {
            Some((l, r)) => (l, r, true),
            None => match text.split_once("->") {
                Some((l, r)) => (l, r, false),
                None => return Err(Error::MalformedRule(text.to_string())),
            },
        };
        let space = gcl.space();
        Ok(Rule {
            lhs: space.from_expr(&parse(lhs_text, space)?),
            rhs: space.from_expr(&parse(rhs_text, space)?),
            bidirectional,
            text: text.trim().to_string(),
        })
    }
}

/// Judgement of a rule line; bi-implications carry both directions and are
/// allowed only when the extents coincide.
#[derive(Debug, Clone)]
pub struct RuleVerdict {
    pub rule: Rule,
    pub forward: ImplicationVerdict,
    pub backward: Option<ImplicationVerdict>,
}

impl RuleVerdict {
    pub fn allowed(&self) -> bool {
        self.forward.allowed && self.backward.as_ref().is_none_or(|b| b.allowed)
    }
}

/// Parses and decides one rule line.
pub fn judge(gcl: &Gcl, text: &str) -> Result<RuleVerdict> {
    let rule = Rule::parse(text, gcl)?;
    let forward = allowable(gcl, &rule.lhs, &rule.rhs);
    let backward = rule
        .bidirectional
        .then(|| allowable(gcl, &rule.rhs, &rule.lhs));
    Ok(RuleVerdict {
        rule,
        forward,
        backward,
    })
}

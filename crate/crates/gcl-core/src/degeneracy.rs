//! Degenerate contexts: detection, attribute restriction and referential
//! completion with fictitious objects.
//!
//! A context is degenerate when its classes exhaust every admissible
//! minterm; the contextual truth then collapses to 𝟏 and every general
//! intent to a single attribute.

use crate::bits::Bits;
use crate::context::{ExtentMask, FormalContext, ParseOptions, FICTITIOUS_PREFIX};
use crate::error::{Error, Result};
use crate::gcl::Gcl;

/// Exhaustive per-mask checking is attempted up to 2^20 masks.
const S2_EXHAUSTIVE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S2Method {
    /// ρ(X) = η(X) compared on every mask.
    Exhaustive,
    /// Read off S3; beyond the mask cap the per-mask loop is skipped.
    InferredFromS3,
}

/// The four equivalent degeneracy statements, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegeneracyReport {
    /// n_F = rank(M).
    pub s1: bool,
    /// ρ(X) = η(X) for every mask.
    pub s2: bool,
    /// 1_η = 𝟏 and 0_ρ = 𝟎.
    pub s3: bool,
    /// Every intent is a singleton: rank − n_F = 0.
    pub s4: bool,
    /// The four statements agree (all true or all false).
    pub consistent: bool,
    pub s2_method: S2Method,
}

impl DegeneracyReport {
    pub fn degenerate(&self) -> bool {
        self.s1 && self.s2 && self.s3 && self.s4
    }
}

pub fn degeneracy_report(gcl: &Gcl) -> DegeneracyReport {
    let n_f = gcl.n_f();
    let s1 = n_f as u64 == gcl.rank();
    let s3 = *gcl.one_eta() == gcl.space().one() && gcl.zero_rho().is_zero();
    let s4 = gcl.intent_size_exponent() == 0;
    let (s2, s2_method) = if n_f <= S2_EXHAUSTIVE_CAP {
        let all_equal = (0..(1u64 << n_f)).all(|v| {
            let mask = ExtentMask::from_u64(v, n_f);
            gcl.rho_of(&mask) == gcl.eta_of(&mask)
        });
        (all_equal, S2Method::Exhaustive)
    } else {
        (s3, S2Method::InferredFromS3)
    };
    DegeneracyReport {
        s1,
        s2,
        s3,
        s4,
        consistent: s1 == s2 && s2 == s3 && s3 == s4,
        s2_method,
    }
}

/// Projects the context onto the kept attributes, preserving their original
/// order. Objects are untouched; classes may collapse downstream.
pub fn restrict(ctx: &FormalContext, keep: &[&str]) -> Result<FormalContext> {
    if keep.is_empty() {
        return Err(Error::EmptyRestriction);
    }
    let mut kept: Vec<usize> = keep
        .iter()
        .map(|name| ctx.attribute_index(name))
        .collect::<Result<Vec<_>>>()?;
    kept.sort_unstable();
    kept.dedup();
    let attributes: Vec<String> = kept.iter().map(|&j| ctx.attributes()[j].clone()).collect();
    let rows: Vec<Vec<bool>> = (0..ctx.num_objects())
        .map(|i| kept.iter().map(|&j| ctx.incidence(i, j)).collect())
        .collect();
    FormalContext::from_parts(
        ctx.title().to_string(),
        ctx.objects().to_vec(),
        attributes,
        rows,
        &ParseOptions {
            max_attrs: ctx.num_attrs(),
        },
    )
}

/// Appends one fictitious object `_f<i>` per unoccupied admissible minterm,
/// in ascending minterm order. The result realizes every admissible row and
/// is degenerate by construction; a context that already does so is returned
/// unchanged.
pub fn referential_context(ctx: &FormalContext, forbidden: Option<&Bits>) -> Result<FormalContext> {
    if let Some(g) = ctx
        .objects()
        .iter()
        .find(|g| g.starts_with(FICTITIOUS_PREFIX))
    {
        return Err(Error::ReservedObjectName(g.clone()));
    }
    let n_attrs = ctx.num_attrs();
    if n_attrs > crate::attr::MAX_TABLE_WIDTH {
        return Err(Error::AttributeCapExceeded {
            count: n_attrs,
            cap: crate::attr::MAX_TABLE_WIDTH,
        });
    }
    let size = 1usize << n_attrs;
    let allowed = match forbidden {
        Some(mask) => {
            if mask.len() != size {
                return Err(Error::Constraints(format!(
                    "forbidden mask has {} bits, expected {size}",
                    mask.len()
                )));
            }
            mask.not()
        }
        None => Bits::ones(size),
    };
    let quotient = ctx.quotient();
    let mut occupied = Bits::zeros(size);
    for class in quotient.classes() {
        if !allowed.get(class.minterm()) {
            return Err(Error::ForbiddenMintermOccupied(class.minterm()));
        }
        occupied.set(class.minterm(), true);
    }

    let mut objects = ctx.objects().to_vec();
    let mut rows: Vec<Vec<bool>> = (0..ctx.num_objects())
        .map(|i| (0..n_attrs).map(|j| ctx.incidence(i, j)).collect())
        .collect();
    for minterm in allowed.minus(&occupied).iter_ones() {
        objects.push(format!("{FICTITIOUS_PREFIX}{minterm}"));
        rows.push((0..n_attrs).map(|j| (minterm >> j) & 1 == 1).collect());
    }
    FormalContext::from_parts(
        ctx.title().to_string(),
        objects,
        ctx.attributes().to_vec(),
        rows,
        &ParseOptions { max_attrs: n_attrs },
    )
}

//! The general concept lattice in its η-representation.
//!
//! One scan over the quotient fixes the whole structure: each discernible
//! class contributes the single-minterm atom η_k built from its signature,
//! the contextual truth 1_η is their sum and the contextual falsity 0_ρ its
//! complement. Every n_F-bit mask then decodes to a general concept without
//! materializing the lattice.

use crate::attr::{AttrFn, AttrSpace};
use crate::bits::Bits;
use crate::context::{ContextQuotient, ExtentMask, FormalContext};
use crate::error::{Error, Result};

/// Cap on full lattice enumeration (2^n_F nodes); mask lookups stay O(n_F)
/// regardless.
pub const DEFAULT_ENUMERATION_CAP: u32 = 24;

/// A built lattice: the context, its quotient, the bound attribute space and
/// the η-representation. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Gcl {
    context: FormalContext,
    quotient: ContextQuotient,
    space: AttrSpace,
    pub(crate) eta_atoms: Vec<AttrFn>,
    pub(crate) one_eta: AttrFn,
    pub(crate) zero_rho: AttrFn,
    enumeration_cap: u32,
}

/// A lattice node: extent mask, named extent and the intent bounds.
#[derive(Debug, Clone)]
pub struct GeneralConcept {
    pub mask: ExtentMask,
    pub extent: Vec<String>,
    pub eta: AttrFn,
    pub rho: AttrFn,
}

impl Gcl {
    /// Builds the lattice in one pass over the quotient.
    pub fn build(context: FormalContext) -> Result<Self> {
        Self::build_with_constraints(context, None)
    }

    /// Builds with declared forbidden minterms (intrinsic attribute
    /// constraints). A forbidden minterm occupied by an object class is an
    /// error.
    pub fn build_with_constraints(
        context: FormalContext,
        forbidden: Option<&Bits>,
    ) -> Result<Self> {
        let quotient = context.quotient();
        let space = match forbidden {
            None => AttrSpace::new(context.attributes())?,
            Some(mask) => {
                let space = AttrSpace::with_forbidden(context.attributes(), mask)?;
                for class in quotient.classes() {
                    if mask.get(class.minterm()) {
                        return Err(Error::ForbiddenMintermOccupied(class.minterm()));
                    }
                }
                space
            }
        };
        let eta_atoms: Vec<AttrFn> = quotient
            .classes()
            .iter()
            .map(|c| space.minterm(c.minterm()))
            .collect();
        let one_eta = eta_atoms
            .iter()
            .fold(space.zero(), |acc, atom| acc.or(atom));
        let zero_rho = space.not(&one_eta);
        Ok(Gcl {
            context,
            quotient,
            space,
            eta_atoms,
            one_eta,
            zero_rho,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        })
    }

    pub fn set_enumeration_cap(&mut self, cap: u32) {
        self.enumeration_cap = cap;
    }

    pub fn context(&self) -> &FormalContext {
        &self.context
    }

    pub fn quotient(&self) -> &ContextQuotient {
        &self.quotient
    }

    pub fn space(&self) -> &AttrSpace {
        &self.space
    }

    pub fn n_f(&self) -> usize {
        self.quotient.n_f()
    }

    /// rank(M) = log2 |M*|.
    pub fn rank(&self) -> u64 {
        self.space.rank()
    }

    /// log2 of the constant intent cardinality: rank − n_F. The count itself
    /// overflows quickly, so only the exponent is reported.
    pub fn intent_size_exponent(&self) -> u64 {
        self.rank() - self.n_f() as u64
    }

    /// The η-representation [η_1..η_{n_F}].
    pub fn eta_atoms(&self) -> &[AttrFn] {
        &self.eta_atoms
    }

    /// The ρ-representation [¬η_1..¬η_{n_F}].
    pub fn rho_atoms(&self) -> Vec<AttrFn> {
        self.eta_atoms.iter().map(|a| self.space.not(a)).collect()
    }

    /// Contextual truth 1_η = ∑ η_k.
    pub fn one_eta(&self) -> &AttrFn {
        &self.one_eta
    }

    /// Contextual falsity 0_ρ = ¬1_η.
    pub fn zero_rho(&self) -> &AttrFn {
        &self.zero_rho
    }

    fn check_mask(&self, mask: &ExtentMask) -> Result<()> {
        if mask.width() != self.n_f() {
            return Err(Error::MaskWidth {
                got: mask.width(),
                expected: self.n_f(),
            });
        }
        Ok(())
    }

    /// η(X) = ∑ {η_k | bit k set}.
    pub fn eta_of(&self, mask: &ExtentMask) -> AttrFn {
        mask.iter_classes()
            .fold(self.space.zero(), |acc, k| acc.or(&self.eta_atoms[k]))
    }

    /// ρ(X) = ∏ {¬η_k | bit k clear}.
    pub fn rho_of(&self, mask: &ExtentMask) -> AttrFn {
        mask.complement()
            .iter_classes()
            .fold(self.space.one(), |acc, k| {
                acc.and(&self.space.not(&self.eta_atoms[k]))
            })
    }

    /// Checks the conjugate identity η(X^c) = ¬ρ(X) on one mask.
    pub fn conjugate_holds(&self, mask: &ExtentMask) -> bool {
        self.eta_of(&mask.complement()) == self.space.not(&self.rho_of(mask))
    }

    /// Object names selected by a mask, in context order.
    pub fn extent_names(&self, mask: &ExtentMask) -> Vec<String> {
        let mut indices: Vec<usize> = mask
            .iter_classes()
            .flat_map(|k| self.quotient.classes()[k].member_indices().iter().copied())
            .collect();
        indices.sort_unstable();
        indices
            .into_iter()
            .map(|i| self.context.objects()[i].clone())
            .collect()
    }

    /// Decodes a mask into the full general concept.
    pub fn concept_of_mask(&self, mask: &ExtentMask) -> Result<GeneralConcept> {
        self.check_mask(mask)?;
        Ok(GeneralConcept {
            mask: mask.clone(),
            extent: self.extent_names(mask),
            eta: self.eta_of(mask),
            rho: self.rho_of(mask),
        })
    }

    /// μ^R as a class mask: bit k is the value of μ on the class signature.
    pub fn extent_of_attr(&self, mu: &AttrFn) -> ExtentMask {
        assert_eq!(
            mu.width(),
            self.space.width(),
            "attribute function width mismatch"
        );
        ExtentMask::from_classes(
            self.n_f(),
            self.quotient
                .classes()
                .iter()
                .enumerate()
                .filter(|(_, c)| mu.eval(c.minterm()))
                .map(|(k, _)| k),
        )
    }

    /// The concept an arbitrary attribute lands in.
    pub fn concept_of_attr(&self, mu: &AttrFn) -> GeneralConcept {
        self.concept_of_mask(&self.extent_of_attr(mu))
            .expect("mask width always matches")
    }

    /// μ ∈ \[X\]_F: equivalently μ·1_η = η(X) and μ+0_ρ = ρ(X).
    pub fn intent_member(&self, mask: &ExtentMask, mu: &AttrFn) -> Result<bool> {
        self.check_mask(mask)?;
        Ok(self.extent_of_attr(mu) == *mask)
    }

    /// Mask of a named object set; errors if it is not a union of classes.
    pub fn mask_of_objects<S: AsRef<str>>(&self, objects: &[S]) -> Result<ExtentMask> {
        let indices = objects
            .iter()
            .map(|name| self.context.object_index(name.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.quotient.mask_of_object_indices(&indices)
    }

    /// Errors when 2^n_F nodes exceed the enumeration cap.
    pub fn ensure_enumerable(&self) -> Result<()> {
        let n_f = self.n_f();
        if n_f as u32 > self.enumeration_cap || n_f >= 63 {
            return Err(Error::EnumerationTooLarge {
                n_f,
                cap: self.enumeration_cap,
            });
        }
        Ok(())
    }

    /// All masks in ascending value order. Guarded by the enumeration cap.
    pub fn enumerate_masks(&self) -> Result<Vec<ExtentMask>> {
        self.ensure_enumerable()?;
        let n_f = self.n_f();
        Ok((0..(1u64 << n_f))
            .map(|v| ExtentMask::from_u64(v, n_f))
            .collect())
    }

    /// Covering pairs (x, y) with y = x plus exactly one class bit, ascending
    /// by lower mask value then bit. Guarded by the enumeration cap.
    pub fn hasse_edges(&self) -> Result<Vec<(ExtentMask, ExtentMask)>> {
        self.ensure_enumerable()?;
        let n_f = self.n_f();
        let mut edges = Vec::new();
        for v in 0..(1u64 << n_f) {
            for k in 0..n_f {
                if (v >> k) & 1 == 0 {
                    edges.push((
                        ExtentMask::from_u64(v, n_f),
                        ExtentMask::from_u64(v | (1 << k), n_f),
                    ));
                }
            }
        }
        Ok(edges)
    }

    /// Resolves a witness minterm to its discernible class index.
    pub fn class_of_minterm(&self, minterm: usize) -> Option<usize> {
        self.quotient.class_by_minterm(minterm)
    }
}

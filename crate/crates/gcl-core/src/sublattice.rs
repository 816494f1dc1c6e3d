//! Classical concept recovery and the generalized sublattice intents.
//!
//! The formal-concept lattice lives inside the general lattice as the extents
//! expressible as intersections of attribute derivations; the rough-set
//! lattice as the unions. Their generalized counterparts describe intents as
//! unions of whole general intents, addressed here by extent masks.

use std::collections::BTreeMap;
use std::fmt;

use crate::bits::Bits;
use crate::context::{ExtentMask, FormalContext};
use crate::error::Result;
use crate::gcl::Gcl;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConceptKind {
    Fcl,
    Rsl,
}

impl fmt::Display for ConceptKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConceptKind::Fcl => write!(f, "fcl"),
            ConceptKind::Rsl => write!(f, "rsl"),
        }
    }
}

/// A recovered classical concept. `appended` marks the artificial completion
/// node (the supremum for fcl, the infimum for rsl) that the enumeration does
/// not produce by itself; it carries its computed derivation as intent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalConcept {
    pub extent: Vec<String>,
    pub intent: Vec<String>,
    pub kind: ConceptKind,
    pub appended: bool,
}

fn names(ctx: &FormalContext, objects: &Bits) -> Vec<String> {
    objects
        .iter_ones()
        .map(|i| ctx.objects()[i].clone())
        .collect()
}

fn attr_names(ctx: &FormalContext, attrs: impl IntoIterator<Item = usize>) -> Vec<String> {
    attrs
        .into_iter()
        .map(|j| ctx.attributes()[j].clone())
        .collect()
}

/// {m | m^R ⊇ X} over object index sets.
fn intent_common(ctx: &FormalContext, x: &Bits) -> Vec<usize> {
    (0..ctx.num_attrs())
        .filter(|&j| x.is_subset(&ctx.attribute_extent(j)))
        .collect()
}

/// {m | m^R ⊆ X}.
fn intent_box(ctx: &FormalContext, x: &Bits) -> Vec<usize> {
    (0..ctx.num_attrs())
        .filter(|&j| ctx.attribute_extent(j).is_subset(x))
        .collect()
}

/// Extents as intersections over nonempty attribute subsets, deduplicated;
/// the supremum (G, G^I) is appended when the intersections miss it.
pub fn fcl_concepts(gcl: &Gcl) -> Vec<ClassicalConcept> {
    let ctx = gcl.context();
    let n_attrs = ctx.num_attrs();
    let full = Bits::ones(ctx.num_objects());
    let mut extents: BTreeMap<Bits, ()> = BTreeMap::new();
    for subset in 1u64..(1u64 << n_attrs) {
        let extent = (0..n_attrs)
            .filter(|j| (subset >> j) & 1 == 1)
            .fold(full.clone(), |acc, j| acc.and(&ctx.attribute_extent(j)));
        extents.insert(extent, ());
    }
    let mut out = Vec::new();
    let mut have_top = false;
    for extent in extents.keys() {
        let intent = intent_common(ctx, extent);
        // Intersections always close under the derivation round trip.
        debug_assert_eq!(
            intent
                .iter()
                .fold(full.clone(), |acc, &j| acc.and(&ctx.attribute_extent(j))),
            *extent
        );
        have_top |= *extent == full;
        out.push(ClassicalConcept {
            extent: names(ctx, extent),
            intent: attr_names(ctx, intent),
            kind: ConceptKind::Fcl,
            appended: false,
        });
    }
    if !have_top {
        out.push(ClassicalConcept {
            extent: names(ctx, &full),
            intent: attr_names(ctx, intent_common(ctx, &full)),
            kind: ConceptKind::Fcl,
            appended: true,
        });
    }
    out
}

/// Extents as unions over nonempty attribute subsets, deduplicated; the
/// infimum (∅, ∅^□) is appended when the unions miss it.
pub fn rsl_concepts(gcl: &Gcl) -> Vec<ClassicalConcept> {
    let ctx = gcl.context();
    let n_attrs = ctx.num_attrs();
    let empty = Bits::zeros(ctx.num_objects());
    let mut extents: BTreeMap<Bits, ()> = BTreeMap::new();
    for subset in 1u64..(1u64 << n_attrs) {
        let extent = (0..n_attrs)
            .filter(|j| (subset >> j) & 1 == 1)
            .fold(empty.clone(), |acc, j| acc.or(&ctx.attribute_extent(j)));
        extents.insert(extent, ());
    }
    let mut out = Vec::new();
    let mut have_bottom = false;
    for extent in extents.keys() {
        let intent = intent_box(ctx, extent);
        debug_assert_eq!(
            intent
                .iter()
                .fold(empty.clone(), |acc, &j| acc.or(&ctx.attribute_extent(j))),
            *extent
        );
        have_bottom |= *extent == empty;
        out.push(ClassicalConcept {
            extent: names(ctx, extent),
            intent: attr_names(ctx, intent),
            kind: ConceptKind::Rsl,
            appended: false,
        });
    }
    if !have_bottom {
        out.push(ClassicalConcept {
            extent: Vec::new(),
            intent: attr_names(ctx, intent_box(ctx, &empty)),
            kind: ConceptKind::Rsl,
            appended: true,
        });
    }
    out
}

/// Candidate classical intents read off one node's bounds, with their
/// round-trip acceptance status. The attributes implied by the lower bound
/// form the formal-concept candidate; the attributes below the upper bound
/// form the rough-set candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalCandidates {
    pub fcl_intent: Vec<String>,
    pub fcl_accepted: bool,
    pub rsl_intent: Vec<String>,
    pub rsl_accepted: bool,
}

/// Reads both classical candidates from the bounds of one mask.
pub fn classical_candidates(gcl: &Gcl, mask: &ExtentMask) -> Result<ClassicalCandidates> {
    let ctx = gcl.context();
    let space = gcl.space();
    let concept = gcl.concept_of_mask(mask)?;
    let fcl: Vec<usize> = (0..space.width())
        .filter(|&j| concept.eta.leq(&space.var(j)))
        .collect();
    let rsl: Vec<usize> = (0..space.width())
        .filter(|&j| space.var(j).leq(&concept.rho))
        .collect();
    let extent_objects = Bits::from_indices(
        ctx.num_objects(),
        mask.iter_classes()
            .flat_map(|k| gcl.quotient().classes()[k].member_indices().iter().copied()),
    );
    let fcl_derived = fcl.iter().fold(Bits::ones(ctx.num_objects()), |acc, &j| {
        acc.and(&ctx.attribute_extent(j))
    });
    let rsl_derived = rsl.iter().fold(Bits::zeros(ctx.num_objects()), |acc, &j| {
        acc.or(&ctx.attribute_extent(j))
    });
    Ok(ClassicalCandidates {
        fcl_intent: attr_names(ctx, fcl),
        fcl_accepted: fcl_derived == extent_objects,
        rsl_intent: attr_names(ctx, rsl),
        rsl_accepted: rsl_derived == extent_objects,
    })
}

/// A generalized intent: the union of the general intents of the listed
/// masks, or its complement in M* when `complemented` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedIntent {
    pub masks: Vec<ExtentMask>,
    pub complemented: bool,
    n_f: usize,
    intent_size_exponent: u64,
}

impl GeneralizedIntent {
    /// Cardinality as (mask count, exponent): count · 2^exponent members.
    pub fn cardinality(&self) -> (u64, u64) {
        let count = if self.complemented {
            (1u64 << self.n_f) - self.masks.len() as u64
        } else {
            self.masks.len() as u64
        };
        (count, self.intent_size_exponent)
    }

    pub fn intent_size_exponent(&self) -> u64 {
        self.intent_size_exponent
    }
}

fn masks_from_values(mut values: Vec<u64>, n_f: usize) -> Vec<ExtentMask> {
    values.sort_unstable();
    values
        .into_iter()
        .map(|v| ExtentMask::from_u64(v, n_f))
        .collect()
}

fn subsets_of(value: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = value;
    loop {
        out.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & value;
    }
    out
}

/// gFCL intent of a mask: the general intents of all supersets.
pub fn gfcl_intent(gcl: &Gcl, mask: &ExtentMask) -> Result<GeneralizedIntent> {
    gcl.ensure_enumerable()?;
    let n_f = gcl.n_f();
    let base = mask.to_u64();
    let complement = ExtentMask::full(n_f).to_u64() & !base;
    let values = subsets_of(complement)
        .into_iter()
        .map(|s| base | s)
        .collect();
    Ok(GeneralizedIntent {
        masks: masks_from_values(values, n_f),
        complemented: false,
        n_f,
        intent_size_exponent: gcl.intent_size_exponent(),
    })
}

/// gRSL intent of a mask: the general intents of all subsets.
pub fn grsl_intent(gcl: &Gcl, mask: &ExtentMask) -> Result<GeneralizedIntent> {
    gcl.ensure_enumerable()?;
    let n_f = gcl.n_f();
    Ok(GeneralizedIntent {
        masks: masks_from_values(subsets_of(mask.to_u64()), n_f),
        complemented: false,
        n_f,
        intent_size_exponent: gcl.intent_size_exponent(),
    })
}

/// cgRSL intent of a mask: everything outside the general intents of the
/// complement's subsets.
pub fn cgrsl_intent(gcl: &Gcl, mask: &ExtentMask) -> Result<GeneralizedIntent> {
    gcl.ensure_enumerable()?;
    let n_f = gcl.n_f();
    let complement = ExtentMask::full(n_f).to_u64() & !mask.to_u64();
    Ok(GeneralizedIntent {
        masks: masks_from_values(subsets_of(complement), n_f),
        complemented: true,
        n_f,
        intent_size_exponent: gcl.intent_size_exponent(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::six_objects;

    fn fixture() -> Gcl {
        Gcl::build(six_objects()).unwrap()
    }

    fn strs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn find<'a>(concepts: &'a [ClassicalConcept], extent: &[&str]) -> Option<&'a ClassicalConcept> {
        concepts.iter().find(|c| c.extent == strs(extent))
    }

    #[test]
    fn fcl_recovery_on_fixture() {
        let gcl = fixture();
        let concepts = fcl_concepts(&gcl);
        let c = find(&concepts, &["1", "2", "5", "6"]).expect("a^R is an extent");
        assert_eq!(c.intent, strs(&["a"]));
        assert!(!c.appended);
        let c = find(&concepts, &["1", "6"]).expect("a^R ∩ e^R");
        assert_eq!(c.intent, strs(&["a", "e"]));
        let c = find(&concepts, &[]).expect("empty intersection");
        assert_eq!(c.intent, strs(&["a", "b", "c", "d", "e"]));
        assert!(!c.appended);
        // The full object set is not an intersection here, so it is appended
        // with its computed (empty) intent.
        let top = find(&concepts, &["1", "2", "3", "4", "5", "6"]).unwrap();
        assert!(top.appended);
        assert!(top.intent.is_empty());
    }

    #[test]
    fn rsl_recovery_on_fixture() {
        let gcl = fixture();
        let concepts = rsl_concepts(&gcl);
        let c = find(&concepts, &["1", "2", "5", "6"]).expect("a^R is a union");
        assert_eq!(c.intent, strs(&["a", "c", "d"]));
        assert!(
            find(&concepts, &["1", "6"]).is_none(),
            "{{1,6}} is no union"
        );
        let top = find(&concepts, &["1", "2", "3", "4", "5", "6"]).unwrap();
        assert_eq!(top.intent, strs(&["a", "b", "c", "d", "e"]));
        assert!(!top.appended);
        let bottom = find(&concepts, &[]).unwrap();
        assert!(bottom.appended);
        assert!(bottom.intent.is_empty());
    }

    #[test]
    fn classical_extents_are_general_extents() {
        let gcl = fixture();
        for c in fcl_concepts(&gcl).iter().chain(rsl_concepts(&gcl).iter()) {
            let refs: Vec<&str> = c.extent.iter().map(String::as_str).collect();
            assert!(gcl.mask_of_objects(&refs).is_ok(), "{:?}", c.extent);
        }
    }

    #[test]
    fn fcl_extents_close_under_intersection() {
        let gcl = fixture();
        let sets: Vec<std::collections::BTreeSet<String>> = fcl_concepts(&gcl)
            .into_iter()
            .map(|c| c.extent.into_iter().collect())
            .collect();
        for x in &sets {
            for y in &sets {
                let meet: std::collections::BTreeSet<String> = x.intersection(y).cloned().collect();
                assert!(sets.contains(&meet));
            }
        }
    }

    #[test]
    fn rsl_extents_close_under_union() {
        let gcl = fixture();
        let sets: Vec<std::collections::BTreeSet<String>> = rsl_concepts(&gcl)
            .into_iter()
            .map(|c| c.extent.into_iter().collect())
            .collect();
        for x in &sets {
            for y in &sets {
                let join: std::collections::BTreeSet<String> = x.union(y).cloned().collect();
                assert!(sets.contains(&join));
            }
        }
    }

    #[test]
    fn candidates_read_off_the_bounds() {
        let gcl = fixture();
        // {1,2,5,6}: both classical readings land on real concepts.
        let mask = gcl.mask_of_objects(&["1", "2", "5", "6"]).unwrap();
        let c = classical_candidates(&gcl, &mask).unwrap();
        assert_eq!(c.fcl_intent, strs(&["a"]));
        assert!(c.fcl_accepted);
        assert_eq!(c.rsl_intent, strs(&["a", "c", "d"]));
        assert!(c.rsl_accepted);
        // {1,6}: the formal-concept reading holds, the rough-set one fails
        // because the only contained attribute derivation is d^R = {1}.
        let mask = gcl.mask_of_objects(&["1", "6"]).unwrap();
        let c = classical_candidates(&gcl, &mask).unwrap();
        assert_eq!(c.fcl_intent, strs(&["a", "e"]));
        assert!(c.fcl_accepted);
        assert_eq!(c.rsl_intent, strs(&["d"]));
        assert!(!c.rsl_accepted);
        // Bottom node: every attribute is implied by the empty lower bound.
        let c = classical_candidates(&gcl, &ExtentMask::empty(5)).unwrap();
        assert_eq!(c.fcl_intent, strs(&["a", "b", "c", "d", "e"]));
        assert!(c.fcl_accepted);
        // Top node: every attribute sits under 𝟏 and the union covers G.
        let c = classical_candidates(&gcl, &ExtentMask::full(5)).unwrap();
        assert_eq!(c.rsl_intent, strs(&["a", "b", "c", "d", "e"]));
        assert!(c.rsl_accepted);
    }

    #[test]
    fn candidates_agree_with_derivation_operators() {
        let gcl = fixture();
        let ctx = gcl.context();
        for mask in gcl.enumerate_masks().unwrap() {
            let extent = gcl.extent_names(&mask);
            let refs: Vec<&str> = extent.iter().map(String::as_str).collect();
            let c = classical_candidates(&gcl, &mask).unwrap();
            let common: Vec<String> = ctx.derive_common(&refs).unwrap().into_iter().collect();
            let boxed: Vec<String> = ctx.derive_box(&refs).unwrap().into_iter().collect();
            assert_eq!(c.fcl_intent, common);
            assert_eq!(c.rsl_intent, boxed);
        }
    }

    #[test]
    fn generalized_intents_at_the_bounds() {
        let gcl = fixture();
        let full = ExtentMask::full(5);
        let empty = ExtentMask::empty(5);
        let g = gfcl_intent(&gcl, &full).unwrap();
        assert_eq!(g.masks, vec![full.clone()]);
        let g = grsl_intent(&gcl, &empty).unwrap();
        assert_eq!(g.masks, vec![empty.clone()]);
    }

    #[test]
    fn gfcl_counts_supersets() {
        let gcl = fixture();
        let mask = gcl.mask_of_objects(&["1", "2"]).unwrap();
        let g = gfcl_intent(&gcl, &mask).unwrap();
        assert_eq!(g.masks.len(), 1 << 3);
        assert!(g.masks.iter().all(|m| mask.is_subset(m)));
        assert_eq!(g.cardinality(), (8, 27));
    }

    #[test]
    fn intersection_of_gfcl_and_grsl_is_the_node_itself() {
        let gcl = fixture();
        for mask in gcl.enumerate_masks().unwrap() {
            let up: std::collections::BTreeSet<ExtentMask> = gfcl_intent(&gcl, &mask)
                .unwrap()
                .masks
                .into_iter()
                .collect();
            let down: std::collections::BTreeSet<ExtentMask> = grsl_intent(&gcl, &mask)
                .unwrap()
                .masks
                .into_iter()
                .collect();
            let common: Vec<&ExtentMask> = up.intersection(&down).collect();
            assert_eq!(common, vec![&mask]);
        }
    }

    #[test]
    fn cgrsl_complements_the_subset_family() {
        let gcl = fixture();
        let mask = gcl.mask_of_objects(&["1", "2"]).unwrap();
        let g = cgrsl_intent(&gcl, &mask).unwrap();
        assert!(g.complemented);
        // Subsets of the 3-bit complement.
        assert_eq!(g.masks.len(), 8);
        assert_eq!(g.cardinality(), (32 - 8, 27));
    }
}

//! Brute-force verifier for tiny alphabets.
//!
//! Ground truth is computed from first principles only: μ^R by evaluating μ
//! on every object row, intents by grouping functions on equal derived sets.
//! Agreement with the lattice's formulas is the theorem under test, so any
//! mismatch is reported as a violation rather than thrown.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::attr::{AttrFn, AttrSpace};
use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::gcl::Gcl;

/// Exhaustive enumeration bound: 2^(2^4) functions is the most we ever list.
pub const MAX_ORACLE_ALPHABET: usize = 4;

/// Pair laws are exhaustive up to this width and sampled above it.
const PAIR_EXHAUSTIVE_WIDTH: usize = 3;

#[derive(Debug, Clone)]
pub struct OracleOptions {
    /// Sampled pair count when the alphabet is too wide for exhaustion.
    pub pair_samples: u64,
    pub seed: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            pair_samples: 100_000,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub law: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    pub alphabet_size: usize,
    pub functions_checked: u64,
    pub pairs_checked: u64,
    /// Recorded only when pairs were sampled rather than exhausted.
    pub sampling_seed: Option<u64>,
    pub violations: Vec<Violation>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All of M* in ascending bit-vector order: every subset of the admissible
/// minterms, 2^rank functions in total.
pub fn enumerate_mstar(space: &AttrSpace) -> Result<Vec<AttrFn>> {
    if space.width() > MAX_ORACLE_ALPHABET {
        return Err(Error::AlphabetTooLarge(space.width(), MAX_ORACLE_ALPHABET));
    }
    let size = space.size();
    let allowed: Vec<usize> = space.allowed().iter_ones().collect();
    let count: u64 = 1u64 << allowed.len();
    Ok((0..count)
        .map(|k| {
            let table = Bits::from_indices(
                size,
                allowed
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| (k >> pos) & 1 == 1)
                    .map(|(_, &minterm)| minterm),
            );
            AttrFn::from_table(space.width(), table)
        })
        .collect())
}

/// Checks every lattice law against first principles. |M| must stay within
/// the oracle bound.
pub fn verify(gcl: &Gcl, opts: &OracleOptions) -> Result<OracleReport> {
    let space = gcl.space();
    let ctx = gcl.context();
    let functions = enumerate_mstar(space)?;
    let n_f = gcl.n_f();
    let mut violations = Vec::new();

    // Ground extents straight from the object rows.
    let row_minterms: Vec<usize> = (0..ctx.num_objects()).map(|i| ctx.row_minterm(i)).collect();
    let ground_extent = |f: &AttrFn| -> Bits {
        Bits::from_indices(
            ctx.num_objects(),
            row_minterms
                .iter()
                .enumerate()
                .filter(|(_, &m)| f.eval(m))
                .map(|(i, _)| i),
        )
    };

    let extents: Vec<Bits> = functions.iter().map(&ground_extent).collect();
    let mut intent_sizes: HashMap<Bits, u64> = HashMap::new();
    for (f, extent) in functions.iter().zip(&extents) {
        *intent_sizes.entry(extent.clone()).or_insert(0) += 1;

        // (a) the mask formulas must reproduce the row-level derivation.
        let mask = gcl.extent_of_attr(f);
        let mask_objects = Bits::from_indices(
            ctx.num_objects(),
            mask.iter_classes()
                .flat_map(|k| gcl.quotient().classes()[k].member_indices().iter().copied()),
        );
        if mask_objects != *extent {
            violations.push(Violation {
                law: "partition",
                detail: format!(
                    "mask decoding of {} disagrees with row evaluation",
                    space.dnf_string(f)
                ),
            });
            continue;
        }
        // (b) every attribute sits between the bounds of its intent.
        let eta = gcl.eta_of(&mask);
        let rho = gcl.rho_of(&mask);
        if !(eta.leq(f) && f.leq(&rho)) {
            violations.push(Violation {
                law: "bounds",
                detail: format!("{} escapes [η, ρ] of its extent", space.dnf_string(f)),
            });
        }
    }

    // (a) continued: the derived sets must exhaust all 2^n_F general extents.
    if intent_sizes.len() as u64 != 1u64 << n_f {
        violations.push(Violation {
            law: "partition",
            detail: format!("{} distinct extents, expected 2^{n_f}", intent_sizes.len()),
        });
    }
    // (c) constant intent cardinality.
    let expected_size = 1u64 << gcl.intent_size_exponent();
    for (extent, size) in &intent_sizes {
        if *size != expected_size {
            violations.push(Violation {
                law: "cardinality",
                detail: format!(
                    "intent of {extent:?} has {size} members, expected {expected_size}"
                ),
            });
        }
    }

    // (d) implication agreement and its 0_ρ dual, (e) closure of sums and
    // products, on function pairs.
    let mut pairs_checked = 0u64;
    let mut sampling_seed = None;
    let check_pair = |i: usize, j: usize, violations: &mut Vec<Violation>| {
        let (f1, f2) = (&functions[i], &functions[j]);
        let ground_subset = extents[i].is_subset(&extents[j]);
        let lower = f1.and(gcl.one_eta()).leq(&f2.and(gcl.one_eta()));
        let upper = f1.or(gcl.zero_rho()).leq(&f2.or(gcl.zero_rho()));
        if lower != ground_subset || upper != ground_subset {
            violations.push(Violation {
                law: "implication",
                detail: format!(
                    "{} -> {}: ground {}, 1_eta {}, 0_rho {}",
                    space.dnf_string(f1),
                    space.dnf_string(f2),
                    ground_subset,
                    lower,
                    upper
                ),
            });
        }
        let m1 = gcl.extent_of_attr(f1);
        let m2 = gcl.extent_of_attr(f2);
        if gcl.extent_of_attr(&f1.or(f2)) != m1.union(&m2)
            || gcl.extent_of_attr(&f1.and(f2)) != m1.intersect(&m2)
        {
            violations.push(Violation {
                law: "closure",
                detail: format!(
                    "sum/product of {} and {} lands outside the union/intersection intent",
                    space.dnf_string(f1),
                    space.dnf_string(f2)
                ),
            });
        }
    };
    if space.width() <= PAIR_EXHAUSTIVE_WIDTH {
        for i in 0..functions.len() {
            for j in 0..functions.len() {
                check_pair(i, j, &mut violations);
                pairs_checked += 1;
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(opts.seed);
        sampling_seed = Some(opts.seed);
        for _ in 0..opts.pair_samples {
            let i = rng.gen_range(0..functions.len());
            let j = rng.gen_range(0..functions.len());
            check_pair(i, j, &mut violations);
            pairs_checked += 1;
        }
    }

    Ok(OracleReport {
        alphabet_size: space.width(),
        functions_checked: functions.len() as u64,
        pairs_checked,
        sampling_seed,
        violations,
    })
}

//! Lattice serialization: JSON nodes/edges and a DOT covering diagram.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gcl::Gcl;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeNode {
    pub mask: String,
    pub extent: Vec<String>,
    pub eta_dnf: String,
    pub rho_cnf: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeExport {
    pub objects: Vec<String>,
    pub attributes: Vec<String>,
    pub n_f: usize,
    pub rank: u64,
    pub intent_size_exponent: u64,
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<[String; 2]>,
}

/// Materializes every node and covering edge; guarded by the enumeration cap.
pub fn lattice_export(gcl: &Gcl) -> Result<LatticeExport> {
    let space = gcl.space();
    let nodes = gcl
        .enumerate_masks()?
        .into_iter()
        .map(|mask| {
            let concept = gcl.concept_of_mask(&mask)?;
            Ok(LatticeNode {
                mask: mask.to_string(),
                extent: concept.extent,
                eta_dnf: space.dnf_string(&concept.eta),
                rho_cnf: space.cnf_string(&concept.rho),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let edges = gcl
        .hasse_edges()?
        .into_iter()
        .map(|(lo, hi)| [lo.to_string(), hi.to_string()])
        .collect();
    Ok(LatticeExport {
        objects: gcl.context().objects().to_vec(),
        attributes: gcl.context().attributes().to_vec(),
        n_f: gcl.n_f(),
        rank: gcl.rank(),
        intent_size_exponent: gcl.intent_size_exponent(),
        nodes,
        edges,
    })
}

pub fn lattice_json(gcl: &Gcl) -> Result<String> {
    let export = lattice_export(gcl)?;
    Ok(serde_json::to_string_pretty(&export).expect("export serializes"))
}

/// DOT digraph of covering edges, drawn bottom-up; nodes are labelled with
/// their extents.
pub fn lattice_dot(gcl: &Gcl) -> Result<String> {
    let mut out = String::from("digraph gcl {\n  rankdir=BT;\n  node [shape=box];\n");
    for mask in gcl.enumerate_masks()? {
        let extent = gcl.extent_names(&mask);
        out.push_str(&format!(
            "  \"{}\" [label=\"{{{}}}\"];\n",
            mask,
            extent.join(",")
        ));
    }
    for (lo, hi) in gcl.hasse_edges()? {
        out.push_str(&format!("  \"{lo}\" -> \"{hi}\";\n"));
    }
    out.push_str("}\n");
    Ok(out)
}

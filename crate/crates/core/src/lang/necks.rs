//! The strand/string correspondence: necks of a graph (vertices whose
//! removal leaves only path components) and the strings they induce.

use super::bitstring::BitString;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tassels::{strand_bits, Strand};

/// The neck-adjacency string of a strand, canonical up to reversal.
pub fn string_of_strand(s: &Strand) -> BitString {
    strand_bits(s).canonical()
}

/// All vertices of a connected graph whose removal leaves only path
/// components (the single-vertex graph counts as a path; so does an empty
/// remainder).
pub fn necks_of(k: &Graph) -> Vec<usize> {
    k.vertices().filter(|&v| is_neck(k, v)).collect()
}

fn is_neck(k: &Graph, v: usize) -> bool {
    let rest: Vec<usize> = k.vertices().filter(|&u| u != v).collect();
    let (sub, _) = k.induced_subgraph(&rest).expect("subset");
    sub.components().into_iter().all(|comp| {
        let (cg, _) = sub.induced_subgraph(&comp).expect("subset");
        cg.is_path()
    })
}

/// The multiset of strings S_{P,v} over the components P of `k` minus `v`,
/// each canonical up to reversal, sorted for determinism. Components are
/// ordered by minimum vertex id.
pub fn strings_of_neck(k: &Graph, v: usize) -> Result<Vec<BitString>> {
    k.check_vertex(v)?;
    if !is_neck(k, v) {
        return Err(Error::Invalid(format!(
            "vertex {v} is not a neck: some component of the remainder is not a path"
        )));
    }
    let rest: Vec<usize> = k.vertices().filter(|&u| u != v).collect();
    let (sub, sub_ids) = k.induced_subgraph(&rest).expect("subset");
    let mut out = Vec::new();
    for comp in sub.components() {
        let (cg, comp_ids) = sub.induced_subgraph(&comp).expect("subset");
        let order = cg.path_order().expect("neck components are paths");
        let bits: Vec<bool> = order
            .iter()
            .map(|&local| {
                let orig = sub_ids[comp_ids[local]];
                k.has_edge(v, orig)
            })
            .collect();
        out.push(BitString::new(bits).canonical());
    }
    out.sort();
    Ok(out)
}

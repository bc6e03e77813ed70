//! Algebraic simplicity criteria for regular hypermaps, each alongside a
//! direct combinatorial check on the underlying hypergraph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypermap::{Hypergraph, Hypermap};

/// `H ∩ K = ⟨γ2⟩`: a hypervertex and an incident hyperedge share at most
/// two flags.
pub fn flag_condition(hm: &Hypermap) -> bool {
    let meet = hm.vertex_stabilizer().intersect(hm.edge_stabilizer());
    meet.members() == sorted_pair(0, hm.triple().g2)
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    [a.min(b), a.max(b)]
}

/// The set `⋂_{x∈K} K·H^x`, the union of the `K`-cosets of hyperedges
/// incident with every hypervertex that meets `K`.
pub fn multiplicity_set(hm: &Hypermap) -> crate::group::ElementSet {
    let group = hm.group();
    let h = hm.vertex_stabilizer();
    let k = hm.edge_stabilizer();
    // x = 1 term first: KH itself.
    let mut set = group.set_product(k, h);
    for x in k.iter().skip(1) {
        if set.len() == k.len() {
            // K ⊆ KH^x for every x, so the intersection cannot shrink further.
            break;
        }
        let conj = group.conjugate_subgroup(h, x);
        set.retain(|g| group.product_contains(k, &conj, g));
    }
    set
}

/// Edge multiplicity `|⋂_{x∈K} K·H^x : K|`.
pub fn edge_multiplicity(hm: &Hypermap) -> Result<usize> {
    let set = multiplicity_set(hm);
    let k = hm.edge_stabilizer().len();
    if !set.len().is_multiple_of(k) {
        return Err(Error::Internal(format!(
            "intersection of size {} is not a union of cosets of K (|K| = {k})",
            set.len()
        )));
    }
    Ok(set.len() / k)
}

/// Counts hyperedges containing every vertex of hyperedge 0 (the coset `K`).
pub fn edge_multiplicity_direct(hm: &Hypermap) -> usize {
    let hg = hm.underlying_hypergraph();
    let first = &hg.edges()[0];
    hg.edges()
        .iter()
        .filter(|e| first.iter().all(|v| e.binary_search(v).is_ok()))
        .count()
}

/// The standing assumption that a hypermap is not a cycle on a sphere:
/// `m = 2` forces `k ≥ 3`.
pub fn proviso_holds(hm: &Hypermap) -> bool {
    let t = hm.hypermap_type();
    t.m != 2 || t.k >= 3
}

/// `K = ⋂_{x∈K} K·H^x`.
pub fn is_simple(hm: &Hypermap) -> bool {
    multiplicity_set(hm).len() == hm.edge_stabilizer().len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityVerdict {
    pub simple: bool,
    /// False when `m = 2` and `k < 3`; reported rather than enforced.
    pub proviso: bool,
}

pub fn simplicity(hm: &Hypermap) -> SimplicityVerdict {
    SimplicityVerdict {
        simple: is_simple(hm),
        proviso: proviso_holds(hm),
    }
}

/// No hyperedge occurrence equals, or is contained in, another occurrence.
pub fn hypergraph_simple_direct(hg: &Hypergraph) -> bool {
    let edges = hg.edges();
    for (i, a) in edges.iter().enumerate() {
        for (j, b) in edges.iter().enumerate() {
            if i != j && a.iter().all(|v| b.binary_search(v).is_ok()) {
                return false;
            }
        }
    }
    true
}

/// The automorphism group acts faithfully on hypervertices, i.e.
/// `Core_G(H) = 1`.
pub fn faithful_on_vertices(hm: &Hypermap) -> bool {
    hm.group().core(hm.vertex_stabilizer()).is_trivial()
}

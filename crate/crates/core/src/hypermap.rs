//! Regular hypermaps `H(G; γ0, γ1, γ2)` and their underlying hypergraphs.
//!
//! Flags are identified with group elements. Hypervertices, hyperedges and
//! hyperfaces are the right cosets of `H = ⟨γ1,γ2⟩`, `K = ⟨γ2,γ0⟩` and
//! `F = ⟨γ0,γ1⟩`; a hypervertex and a hyperedge are incident when their
//! cosets intersect.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{CosetPartition, GroupTable, Subgroup};

/// Element indices of `(γ0, γ1, γ2)` in a [`GroupTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvolutionTriple {
    pub g0: usize,
    pub g1: usize,
    pub g2: usize,
}

impl InvolutionTriple {
    pub fn new(g0: usize, g1: usize, g2: usize) -> Self {
        Self { g0, g1, g2 }
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.g0, self.g1, self.g2]
    }

    /// Conjugate every entry by `x`.
    pub fn conjugated(&self, group: &GroupTable, x: usize) -> Self {
        Self {
            g0: group.conjugate(self.g0, x),
            g1: group.conjugate(self.g1, x),
            g2: group.conjugate(self.g2, x),
        }
    }

    /// Checks that every entry is a valid index of order exactly 2.
    pub fn check_involutions(&self, group: &GroupTable) -> Result<()> {
        for (slot, g) in [("g0", self.g0), ("g1", self.g1), ("g2", self.g2)] {
            group.check_index(g)?;
            let order = group.element_order(g);
            if order != 2 {
                return Err(Error::NotInvolution { slot, order });
            }
        }
        Ok(())
    }
}

/// Valencies of hypervertices, hyperedges and hyperfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HypermapType {
    pub k: u64,
    pub m: u64,
    pub n: u64,
}

impl HypermapType {
    pub fn of(group: &GroupTable, t: &InvolutionTriple) -> Self {
        Self {
            k: group.element_order(group.mul(t.g1, t.g2)),
            m: group.element_order(group.mul(t.g2, t.g0)),
            n: group.element_order(group.mul(t.g0, t.g1)),
        }
    }

    /// `χ = |G|·(1/(2k) + 1/(2m) + 1/(2n) − 1/2)`, or `None` when that is
    /// not an integer.
    pub fn euler_from_order(&self, flags: u64) -> Option<i64> {
        let (k, m, n) = (self.k as i128, self.m as i128, self.n as i128);
        let num = flags as i128 * (m * n + k * n + k * m - k * m * n);
        let den = 2 * k * m * n;
        (num % den == 0).then(|| (num / den) as i64)
    }
}

/// Stabilizer orders that differ from the dihedral orders `2k`, `2m`, `2n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub vertex_stabilizer_dihedral: bool,
    pub edge_stabilizer_dihedral: bool,
    pub face_stabilizer_dihedral: bool,
}

impl Diagnostics {
    pub fn all_dihedral(&self) -> bool {
        self.vertex_stabilizer_dihedral && self.edge_stabilizer_dihedral && self.face_stabilizer_dihedral
    }
}

#[derive(Clone, Debug)]
pub struct Hypermap {
    group: Arc<GroupTable>,
    triple: InvolutionTriple,
    vertex_stabilizer: Subgroup,
    edge_stabilizer: Subgroup,
    face_stabilizer: Subgroup,
    hypermap_type: HypermapType,
    num_vertices: usize,
    num_edges: usize,
    num_faces: usize,
    euler: i64,
    orientable: bool,
    diagnostics: Diagnostics,
}

impl Hypermap {
    pub fn build(group: Arc<GroupTable>, triple: InvolutionTriple) -> Result<Self> {
        triple.check_involutions(&group)?;
        let generated = group.subgroup_unchecked(&triple.as_array()).len();
        if generated != group.order() {
            return Err(Error::NotGenerating {
                generated,
                order: group.order(),
            });
        }
        Self::build_generating(group, triple)
    }

    /// Builds without re-checking the involution and generation conditions.
    pub(crate) fn build_generating(group: Arc<GroupTable>, triple: InvolutionTriple) -> Result<Self> {
        let InvolutionTriple { g0, g1, g2 } = triple;
        let h = group.subgroup_unchecked(&[g1, g2]);
        let k = group.subgroup_unchecked(&[g2, g0]);
        let f = group.subgroup_unchecked(&[g0, g1]);
        let hypermap_type = HypermapType::of(&group, &triple);
        let flags = group.order();
        let (num_vertices, num_edges, num_faces) = (flags / h.len(), flags / k.len(), flags / f.len());
        let euler = (num_vertices + num_edges + num_faces) as i64 - (flags / 2) as i64;
        let by_type = hypermap_type.euler_from_order(flags as u64);
        if by_type != Some(euler) {
            return Err(Error::Internal(format!(
                "Euler characteristic mismatch: counts give {euler}, type gives {by_type:?}"
            )));
        }
        let orientable = even_subgroup_index(&group, &triple)? == 2;
        if orientable && euler % 2 != 0 {
            return Err(Error::Internal(format!("orientable with odd χ = {euler}")));
        }
        let diagnostics = Diagnostics {
            vertex_stabilizer_dihedral: h.len() as u64 == 2 * hypermap_type.k,
            edge_stabilizer_dihedral: k.len() as u64 == 2 * hypermap_type.m,
            face_stabilizer_dihedral: f.len() as u64 == 2 * hypermap_type.n,
        };
        Ok(Self {
            group,
            triple,
            vertex_stabilizer: h,
            edge_stabilizer: k,
            face_stabilizer: f,
            hypermap_type,
            num_vertices,
            num_edges,
            num_faces,
            euler,
            orientable,
            diagnostics,
        })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn triple(&self) -> InvolutionTriple {
        self.triple
    }

    /// `H = ⟨γ1,γ2⟩`
    pub fn vertex_stabilizer(&self) -> &Subgroup {
        &self.vertex_stabilizer
    }

    /// `K = ⟨γ2,γ0⟩`
    pub fn edge_stabilizer(&self) -> &Subgroup {
        &self.edge_stabilizer
    }

    /// `F = ⟨γ0,γ1⟩`
    pub fn face_stabilizer(&self) -> &Subgroup {
        &self.face_stabilizer
    }

    pub fn hypermap_type(&self) -> HypermapType {
        self.hypermap_type
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn num_faces(&self) -> usize {
        self.num_faces
    }

    pub fn num_flags(&self) -> usize {
        self.group.order()
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn diagnostics(&self) -> Diagnostics {
        self.diagnostics
    }

    /// `(2 − χ)/2` for orientable hypermaps.
    pub fn orientable_genus(&self) -> Option<i64> {
        self.orientable.then(|| (2 - self.euler) / 2)
    }

    /// `2 − χ` for non-orientable hypermaps.
    pub fn nonorientable_genus(&self) -> Option<i64> {
        (!self.orientable).then(|| 2 - self.euler)
    }

    pub fn vertex_cosets(&self) -> CosetPartition {
        self.group.right_cosets(&self.vertex_stabilizer)
    }

    pub fn edge_cosets(&self) -> CosetPartition {
        self.group.right_cosets(&self.edge_stabilizer)
    }

    /// Vertices are right cosets of `H`, one edge per right coset `Kg`
    /// holding the vertices whose coset meets it. Edges keep canonical coset
    /// order and are never merged.
    pub fn underlying_hypergraph(&self) -> Hypergraph {
        let vertices = self.vertex_cosets();
        let edges = self
            .edge_cosets()
            .blocks
            .iter()
            .map(|block| {
                let mut vs: Vec<usize> = block.iter().map(|&g| vertices.block_of[g]).collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            })
            .collect();
        Hypergraph {
            num_vertices: vertices.len(),
            edges,
        }
    }
}

/// Index of the even subgroup `⟨γ1γ2, γ2γ0⟩`, always 1 or 2.
pub fn even_subgroup_index(group: &GroupTable, t: &InvolutionTriple) -> Result<usize> {
    let even = group.subgroup_unchecked(&[group.mul(t.g1, t.g2), group.mul(t.g2, t.g0)]);
    match group.order() / even.len() {
        i @ (1 | 2) => Ok(i),
        i => Err(Error::Internal(format!("even subgroup has index {i}"))),
    }
}

/// A vertex set `0..num_vertices` with an ordered multiset of hyperedges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    num_vertices: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Edges are stored sorted and deduplicated internally; every edge must
    /// be non-empty and inside `0..num_vertices`.
    pub fn new(num_vertices: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::SpecViolation(format!("hyperedge {} is empty", i + 1)));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= num_vertices) {
                return Err(Error::SpecViolation(format!(
                    "hyperedge {} contains vertex {} outside 1..{}",
                    i + 1,
                    v + 1,
                    num_vertices
                )));
            }
            e.sort_unstable();
            e.dedup();
            out.push(e);
        }
        Ok(Self {
            num_vertices,
            edges: out,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn levi_graph(&self) -> LeviGraph {
        let adjacency = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(e, vs)| vs.iter().map(move |&v| (v, e)))
            .collect();
        LeviGraph {
            left_count: self.num_vertices,
            right_count: self.edges.len(),
            adjacency,
        }
    }
}

/// Bipartite vertex/hyperedge incidence graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviGraph {
    pub left_count: usize,
    pub right_count: usize,
    /// `(vertex, hyperedge)` pairs, grouped by hyperedge.
    pub adjacency: Vec<(usize, usize)>,
}

impl LeviGraph {
    pub fn vertex_degree(&self, v: usize) -> usize {
        self.adjacency.iter().filter(|&&(x, _)| x == v).count()
    }

    pub fn edge_degree(&self, e: usize) -> usize {
        self.adjacency.iter().filter(|&&(_, y)| y == e).count()
    }

    /// Graphviz rendering: filled circles `v1..vN` for vertices, squares
    /// `e1..eM` for hyperedges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph levi {\n");
        for v in 0..self.left_count {
            let _ = writeln!(out, "  v{} [shape=circle, style=filled];", v + 1);
        }
        for e in 0..self.right_count {
            let _ = writeln!(out, "  e{} [shape=square];", e + 1);
        }
        for &(v, e) in &self.adjacency {
            let _ = writeln!(out, "  v{} -- e{};", v + 1, e + 1);
        }
        out.push_str("}\n");
        out
    }
}

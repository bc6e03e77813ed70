//! JSON shapes written by the CLI. Vertex and hyperedge numbers are 1-based.

use serde::{Deserialize, Serialize};

use hypermap_core::catalog::{Family, FamilySpec};
use hypermap_core::classify::{ClassificationReport, ConditionLedger};
use hypermap_core::group::GroupTable;
use hypermap_core::hypermap::{Diagnostics, Hypergraph, Hypermap, HypermapType, LeviGraph};

use crate::failure::{CliResult, Failure};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct ElementJson {
    pub index: usize,
    pub cycles: String,
}

impl ElementJson {
    pub fn of(group: &GroupTable, index: usize) -> Self {
        Self {
            index,
            cycles: group.element(index).to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct TripleJson {
    pub g0: ElementJson,
    pub g1: ElementJson,
    pub g2: ElementJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub vertices: usize,
    pub edges: Vec<Vec<usize>>,
}

impl HypergraphJson {
    pub fn of(hg: &Hypergraph) -> Self {
        Self {
            vertices: hg.num_vertices(),
            edges: hg.edges().iter().map(|e| e.iter().map(|v| v + 1).collect()).collect(),
        }
    }

    pub fn to_hypergraph(&self) -> CliResult<Hypergraph> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            if e.contains(&0) {
                return Err(Failure::parse(format!(
                    "hyperedge {}: vertices are numbered from 1",
                    i + 1
                )));
            }
            edges.push(e.iter().map(|v| v - 1).collect());
        }
        Hypergraph::new(self.vertices, edges).map_err(|e| Failure::parse(e.to_string()))
    }
}

#[derive(Serialize)]
pub struct RepresentativeJson {
    pub triple: TripleJson,
    #[serde(rename = "type")]
    pub hypermap_type: HypermapType,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub flags: usize,
    pub euler: i64,
    pub orientable: bool,
    pub genus: Option<i64>,
    pub nonorientable_genus: Option<i64>,
    pub multiplicity: usize,
    pub conditions: ConditionLedger,
    pub diagnostics: Diagnostics,
    pub class_size: usize,
    pub hypergraph: HypergraphJson,
}

#[derive(Serialize)]
pub struct GroupReportJson {
    pub descriptor: String,
    pub family: Option<Family>,
    pub p: Option<u64>,
    pub n: Option<u64>,
    pub degree: usize,
    pub group_order: usize,
    pub omega: usize,
    pub total_candidates: usize,
    pub representatives: Vec<RepresentativeJson>,
}

impl GroupReportJson {
    pub fn of(report: &ClassificationReport, group: &GroupTable, spec: Option<FamilySpec>) -> Self {
        let representatives = report
            .representatives
            .iter()
            .zip(&report.class_sizes)
            .map(|(c, &class_size)| {
                let hm = &c.hypermap;
                RepresentativeJson {
                    triple: triple_json(group, hm),
                    hypermap_type: hm.hypermap_type(),
                    vertices: hm.num_vertices(),
                    edges: hm.num_edges(),
                    faces: hm.num_faces(),
                    flags: hm.num_flags(),
                    euler: hm.euler(),
                    orientable: hm.orientable(),
                    genus: hm.orientable_genus(),
                    nonorientable_genus: hm.nonorientable_genus(),
                    multiplicity: c.multiplicity,
                    conditions: c.passes,
                    diagnostics: hm.diagnostics(),
                    class_size,
                    hypergraph: HypergraphJson::of(&hm.underlying_hypergraph()),
                }
            })
            .collect();
        Self {
            descriptor: report.descriptor.clone(),
            family: spec.map(|s| s.family),
            p: spec.map(|s| s.p),
            n: spec.map(|s| s.n),
            degree: group.degree(),
            group_order: report.group_order,
            omega: report.omega,
            total_candidates: report.total_candidates,
            representatives,
        }
    }
}

pub fn triple_json(group: &GroupTable, hm: &Hypermap) -> TripleJson {
    let t = hm.triple();
    TripleJson {
        g0: ElementJson::of(group, t.g0),
        g1: ElementJson::of(group, t.g1),
        g2: ElementJson::of(group, t.g2),
    }
}

#[derive(Serialize)]
pub struct ClassifyJson {
    pub schema: u32,
    pub groups: Vec<GroupReportJson>,
}

/// Levi graph export; `vertices` and `edges` make it a valid hypergraph file.
#[derive(Serialize)]
pub struct LeviJson {
    pub schema: u32,
    pub vertices: usize,
    pub edges: Vec<Vec<usize>>,
    /// `[vertex, hyperedge]` pairs.
    pub incidences: Vec<[usize; 2]>,
}

impl LeviJson {
    pub fn of(hg: &Hypergraph, levi: &LeviGraph) -> Self {
        let HypergraphJson { vertices, edges } = HypergraphJson::of(hg);
        Self {
            schema: SCHEMA_VERSION,
            vertices,
            edges,
            incidences: levi.adjacency.iter().map(|&(v, e)| [v + 1, e + 1]).collect(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

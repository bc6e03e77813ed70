use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Serialize;

use hypermap_core::catalog::{build_family, is_dihedral, Family, FamilySpec};
use hypermap_core::classify::{classify, EnumerationOptions};
use hypermap_core::field::is_prime;
use hypermap_core::group::GroupTable;
use hypermap_core::hypermap::{Hypermap, HypermapType, InvolutionTriple};
use hypermap_core::perm::Permutation;
use hypermap_core::simplicity::{
    edge_multiplicity, edge_multiplicity_direct, faithful_on_vertices, flag_condition, proviso_holds,
};
use hypermap_core::verify::{verify_paper, EntryStatus, VerificationRecord};
use hypermap_core::Error;

use crate::failure::{CliResult, Failure, Status};
use crate::groupfile;
use crate::report::{to_json, ClassifyJson, ElementJson, GroupReportJson, HypergraphJson, LeviJson, SCHEMA_VERSION};

/// What a command prints: stdout text, then an optional failure whose
/// message goes to stderr.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub failure: Option<Failure>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            failure: None,
        }
    }
}

fn check_prime(p: u64, max_p: u64) -> CliResult<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p).into());
    }
    if p > max_p {
        return Err(Failure::bad(format!(
            "p = {p} exceeds the maximum {max_p} (raise --max-p)"
        )));
    }
    Ok(())
}

/// Legal `(family, n)` combinations at `p`, narrowed by the optional filters.
fn select_specs(p: u64, family: Option<Family>, n: Option<u64>) -> CliResult<Vec<FamilySpec>> {
    match (family, n) {
        (Some(f), Some(n)) => Ok(vec![FamilySpec::new(f, p, n)?]),
        (Some(f), None) => {
            let ns = f.legal_n(p);
            if ns.is_empty() {
                return Err(Failure::bad(format!("{} (got p = {p})", f.constraint())));
            }
            Ok(ns.into_iter().map(|n| FamilySpec { family: f, p, n }).collect())
        }
        (None, n) => {
            let specs: Vec<_> = FamilySpec::all_at(p)?
                .into_iter()
                .filter(|s| n.is_none_or(|n| s.n == n))
                .collect();
            if specs.is_empty() {
                return Err(Failure::bad(format!(
                    "no family admits n = {} at p = {p}",
                    n.unwrap_or(0)
                )));
            }
            Ok(specs)
        }
    }
}

#[derive(Serialize)]
struct GeneratorJson {
    name: &'static str,
    cycles: String,
}

#[derive(Serialize)]
struct CatalogRecord {
    family: Family,
    p: u64,
    n: u64,
    order: usize,
    generators: Vec<GeneratorJson>,
    stabilizer_order: usize,
    stabilizer_dihedral: bool,
}

#[derive(Serialize)]
struct CatalogJson {
    schema: u32,
    records: Vec<CatalogRecord>,
}

pub fn catalog(p: u64, family: Option<Family>, n: Option<u64>, max_p: u64) -> CliResult<Outcome> {
    check_prime(p, max_p)?;
    let mut records = Vec::new();
    for spec in select_specs(p, family, n)? {
        let g = build_family(spec)?;
        let stab = g.origin_stabilizer();
        records.push(CatalogRecord {
            family: spec.family,
            p,
            n: spec.n,
            order: g.group.order(),
            generators: g
                .generators
                .iter()
                .map(|gen| GeneratorJson {
                    name: gen.name,
                    cycles: g.group.element(gen.index).to_string(),
                })
                .collect(),
            stabilizer_order: stab.len(),
            stabilizer_dihedral: is_dihedral(&g.group, &stab),
        });
    }
    Ok(Outcome::ok(to_json(&CatalogJson {
        schema: SCHEMA_VERSION,
        records,
    })))
}

pub struct ClassifySource {
    pub p: Option<u64>,
    pub group: Option<PathBuf>,
    pub family: Option<Family>,
    pub n: Option<u64>,
    pub omega: Option<usize>,
    pub max_p: u64,
}

fn load_group(path: &Path, cap: usize) -> CliResult<Arc<GroupTable>> {
    let file = groupfile::read(path)?;
    Ok(Arc::new(GroupTable::generate(&file.generators, cap)?))
}

pub fn classify_cmd(src: ClassifySource, opts: EnumerationOptions, cap: usize) -> CliResult<Outcome> {
    let mut groups = Vec::new();
    match (src.p, &src.group) {
        (Some(p), None) => {
            check_prime(p, src.max_p)?;
            let omega = src.omega.unwrap_or((p * p) as usize);
            for spec in select_specs(p, src.family, src.n)? {
                if spec.expected_order() > cap as u64 {
                    return Err(Error::CapExceeded { cap }.into());
                }
                let g = build_family(spec)?;
                let report = classify(&g.group, spec.to_string(), omega, opts)?;
                groups.push(GroupReportJson::of(&report, &g.group, Some(spec)));
            }
        }
        (None, Some(path)) => {
            if src.family.is_some() || src.n.is_some() {
                return Err(Failure::bad("--family and --n apply only with --p"));
            }
            let group = load_group(path, cap)?;
            let omega = src.omega.unwrap_or(group.degree());
            let report = classify(&group, path.display().to_string(), omega, opts)?;
            groups.push(GroupReportJson::of(&report, &group, None));
        }
        _ => return Err(Failure::bad("give exactly one of --p or --group")),
    }
    Ok(Outcome::ok(to_json(&ClassifyJson {
        schema: SCHEMA_VERSION,
        groups,
    })))
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    schema: u32,
    records: &'a [VerificationRecord],
    passed: bool,
}

fn type_text(t: &Option<HypermapType>) -> String {
    t.map_or_else(|| "-".into(), |t| format!("({},{},{})", t.k, t.m, t.n))
}

fn table(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<4} {:<5} {:<6} {:<4} {:<6} {:<10} {:<5} note",
        "p", "label", "family", "n", "status", "type", "mult"
    );
    for rec in records {
        for e in &rec.entries {
            let status = match e.status {
                EntryStatus::Pass => "PASS",
                EntryStatus::Fail => "FAIL",
                EntryStatus::NotApplicable => "n/a",
            };
            let _ = writeln!(
                out,
                "{:<4} {:<5} {:<6} {:<4} {:<6} {:<10} {:<5} {}",
                rec.p,
                e.label,
                e.family.to_string(),
                e.n.map_or_else(|| "-".into(), |n| n.to_string()),
                status,
                type_text(&e.hypermap_type),
                e.multiplicity.map_or_else(|| "-".into(), |m| m.to_string()),
                e.note
            );
        }
        if let Some(k) = rec.g7_representatives {
            let _ = writeln!(out, "p={}  G7: {k} simple hypermaps", rec.p);
        }
        let _ = writeln!(out, "p={}  {}", rec.p, if rec.passed { "PASS" } else { "FAIL" });
    }
    out
}

pub fn verify_cmd(p_list: &str, opts: EnumerationOptions, max_p: u64) -> CliResult<Outcome> {
    let mut primes = Vec::new();
    for item in p_list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let p: u64 = item
            .parse()
            .map_err(|_| Failure::bad(format!("{item:?} is not a number")))?;
        check_prime(p, max_p)?;
        primes.push(p);
    }
    if primes.is_empty() {
        return Err(Failure::bad("--p-list names no primes"));
    }
    let records = primes
        .iter()
        .map(|&p| verify_paper(p, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let first_failure = records.iter().find_map(VerificationRecord::first_failure);
    let stdout = to_json(&VerifyJson {
        schema: SCHEMA_VERSION,
        records: &records,
        passed: first_failure.is_none(),
    });
    Ok(Outcome {
        stdout,
        stderr: table(&records),
        failure: first_failure.map(|msg| Failure::new(Status::Verification, format!("verification failed: {msg}"))),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum LeviFormat {
    Dot,
    Json,
}

/// Reads a hypergraph file, or picks one representative out of a classify
/// report.
fn read_hypergraph(path: &Path, group_index: usize, rep: usize) -> CliResult<HypergraphJson> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    let value = if let Some(groups) = value.get("groups") {
        let group = groups
            .get(group_index)
            .ok_or_else(|| Failure::parse(format!("report has no group {group_index}")))?;
        group
            .get("representatives")
            .and_then(|r| r.get(rep))
            .and_then(|r| r.get("hypergraph"))
            .ok_or_else(|| Failure::parse(format!("group {group_index} has no representative {rep}")))?
            .clone()
    } else {
        value
    };
    serde_json::from_value(value).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

pub fn levi_cmd(input: &Path, format: LeviFormat, group_index: usize, rep: usize) -> CliResult<Outcome> {
    let hg = read_hypergraph(input, group_index, rep)?.to_hypergraph()?;
    let levi = hg.levi_graph();
    Ok(Outcome::ok(match format {
        LeviFormat::Dot => levi.to_dot(),
        LeviFormat::Json => to_json(&LeviJson::of(&hg, &levi)),
    }))
}

#[derive(Serialize)]
struct TripleEntry {
    cycles: String,
    index: Option<usize>,
    order: u64,
}

#[derive(Serialize, Default)]
struct CheckConditions {
    involutions: bool,
    generates: bool,
    index: Option<bool>,
    flag_condition: Option<bool>,
    simple: Option<bool>,
    proviso: Option<bool>,
}

#[derive(Serialize)]
struct Meet {
    order: usize,
    members: Vec<ElementJson>,
}

#[derive(Serialize)]
struct Multiplicity {
    coset_formula: usize,
    direct: usize,
}

#[derive(Serialize)]
struct CheckJson {
    schema: u32,
    degree: usize,
    group_order: usize,
    omega: usize,
    triple: [TripleEntry; 3],
    generated_order: Option<usize>,
    conditions: CheckConditions,
    h_meet_k: Option<Meet>,
    multiplicity: Option<Multiplicity>,
    faithful: Option<bool>,
    #[serde(rename = "type")]
    hypermap_type: Option<HypermapType>,
    vertices: Option<usize>,
    euler: Option<i64>,
    orientable: Option<bool>,
    genus: Option<i64>,
    nonorientable_genus: Option<i64>,
    error: Option<String>,
}

pub fn check_triple(path: &Path, cycles: [&str; 3], omega: Option<usize>, cap: usize) -> CliResult<Outcome> {
    let group = load_group(path, cap)?;
    let perms = cycles
        .iter()
        .zip(["g0", "g1", "g2"])
        .map(|(c, slot)| {
            Permutation::from_cycles(c, group.degree()).map_err(|e| Failure::parse(format!("--{slot} {c:?}: {e}")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let indices: Vec<Option<usize>> = perms.iter().map(|p| group.index_of(p)).collect();
    let triple = [0, 1, 2].map(|i| TripleEntry {
        cycles: perms[i].to_string(),
        index: indices[i],
        order: perms[i].order(),
    });
    let omega = omega.unwrap_or(group.degree());
    let mut report = CheckJson {
        schema: SCHEMA_VERSION,
        degree: group.degree(),
        group_order: group.order(),
        omega,
        triple,
        generated_order: None,
        conditions: CheckConditions::default(),
        h_meet_k: None,
        multiplicity: None,
        faithful: None,
        hypermap_type: None,
        vertices: None,
        euler: None,
        orientable: None,
        genus: None,
        nonorientable_genus: None,
        error: None,
    };
    report.conditions.involutions = report.triple.iter().all(|t| t.order == 2);
    let failure = match indices.as_slice() {
        &[Some(g0), Some(g1), Some(g2)] => {
            let generated = group.subgroup(&[g0, g1, g2])?.len();
            report.generated_order = Some(generated);
            report.conditions.generates = generated == group.order();
            match Hypermap::build(group.clone(), InvolutionTriple::new(g0, g1, g2)) {
                Ok(hm) => {
                    fill_hypermap(&mut report, &hm, omega)?;
                    None
                }
                Err(e @ (Error::NotInvolution { .. } | Error::NotGenerating { .. })) => Some(Failure::from(e)),
                Err(e) => return Err(e.into()),
            }
        }
        _ => {
            let slot = ["g0", "g1", "g2"][indices.iter().position(Option::is_none).unwrap()];
            Some(Failure::new(
                Status::Precondition,
                format!("{slot} is not an element of the group generated by {}", path.display()),
            ))
        }
    };
    if let Some(f) = &failure {
        report.error = Some(f.message.clone());
    }
    Ok(Outcome {
        stdout: to_json(&report),
        stderr: String::new(),
        failure,
    })
}

fn fill_hypermap(report: &mut CheckJson, hm: &Hypermap, omega: usize) -> CliResult<()> {
    let group = hm.group();
    let meet = hm.vertex_stabilizer().intersect(hm.edge_stabilizer());
    let multiplicity = edge_multiplicity(hm)?;
    report.conditions.index = Some(hm.num_vertices() == omega);
    report.conditions.flag_condition = Some(flag_condition(hm));
    report.conditions.simple = Some(multiplicity == 1);
    report.conditions.proviso = Some(proviso_holds(hm));
    report.h_meet_k = Some(Meet {
        order: meet.len(),
        members: meet.iter().map(|g| ElementJson::of(group, g)).collect(),
    });
    report.multiplicity = Some(Multiplicity {
        coset_formula: multiplicity,
        direct: edge_multiplicity_direct(hm),
    });
    report.faithful = Some(faithful_on_vertices(hm));
    report.hypermap_type = Some(hm.hypermap_type());
    report.vertices = Some(hm.num_vertices());
    report.euler = Some(hm.euler());
    report.orientable = Some(hm.orientable());
    report.genus = hm.orientable_genus();
    report.nonorientable_genus = hm.nonorientable_genus();
    Ok(())
}

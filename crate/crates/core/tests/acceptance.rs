//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use hypermap_core::catalog::{build_family, explicit_triple, is_dihedral, ExplicitLabel, Family, FamilySpec};
use hypermap_core::classify::{
    classify, enumerate_generating_triples, ClassificationReport, ConditionLedger, EnumerationOptions,
};
use hypermap_core::group::{GroupTable, DEFAULT_CAP};
use hypermap_core::hypermap::{Hypergraph, Hypermap};
use hypermap_core::perm::Permutation;
use hypermap_core::simplicity::{
    edge_multiplicity, edge_multiplicity_direct, faithful_on_vertices, hypergraph_simple_direct, is_simple,
    proviso_holds,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_groups(max_order: u64) -> Vec<FamilySpec> {
    [2u64, 3, 5, 7]
        .into_iter()
        .flat_map(|p| FamilySpec::all_at(p).unwrap())
        .filter(|s| s.expected_order() <= max_order)
        .collect()
}

/// Every generating triple of index p² on every catalog group of order ≤ 600.
fn enumerated_hypermaps() -> Vec<(FamilySpec, Vec<hypermap_core::classify::CandidateTriple>)> {
    catalog_groups(600)
        .into_iter()
        .map(|spec| {
            let g = build_family(spec).unwrap();
            let omega = (spec.p * spec.p) as usize;
            (
                spec,
                enumerate_generating_triples(&g.group, omega, EnumerationOptions::default()).unwrap(),
            )
        })
        .collect()
}

fn ac1_catalog() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for p in [2u64, 3, 5, 7] {
        for spec in FamilySpec::all_at(p).map_err(|e| e.to_string())? {
            let g = build_family(spec).map_err(|e| e.to_string())?;
            let group = &g.group;
            ensure(group.degree() as u64 == p * p, || {
                format!("{spec}: degree {}", group.degree())
            })?;
            ensure(group.is_transitive(), || format!("{spec}: not transitive"))?;
            ensure(group.order() as u64 == spec.expected_order(), || {
                format!("{spec}: order {} != {}", group.order(), spec.expected_order())
            })?;
            if matches!(spec.family, Family::G2 | Family::G3) {
                let stab = g.origin_stabilizer();
                let x = g.generator("x").unwrap().index;
                let y = g.generator("y").unwrap().index;
                ensure(stab.len() as u64 == 2 * spec.n, || {
                    format!("{spec}: |G_0| = {}", stab.len())
                })?;
                ensure(group.element_order(x) == spec.n, || {
                    format!("{spec}: |x| = {}", group.element_order(x))
                })?;
                ensure(group.element_order(y) == 2, || format!("{spec}: |y| != 2"))?;
                ensure(group.conjugate(x, y) == group.inv(x), || format!("{spec}: x^y != x⁻¹"))?;
                ensure(group.subgroup(&[x, y]).unwrap() == stab, || {
                    format!("{spec}: ⟨x,y⟩ != G_0")
                })?;
                ensure(is_dihedral(group, &stab), || format!("{spec}: G_0 not dihedral"))?;
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} groups, {elapsed:.2?}"))
}

fn ac2_explicit_hypermaps() -> Outcome {
    let mut checked = Vec::new();
    for p in [2u64, 3, 5, 7] {
        for label in ExplicitLabel::ALL {
            for n in label.family().legal_n(p).into_iter().filter(|&n| label.applies_to(n)) {
                let ph = explicit_triple(label, p, n).map_err(|e| format!("{label} p={p} n={n}: {e}"))?;
                let hm = Hypermap::build(ph.group.group.clone(), ph.triple)
                    .map_err(|e| format!("{label} p={p} n={n}: {e}"))?;
                let (ledger, mult) = ConditionLedger::evaluate(&hm, (p * p) as usize).map_err(|e| e.to_string())?;
                ensure(ledger.all_pass() && mult == 1, || {
                    format!(
                        "{label} p={p} n={n}: {:?} (multiplicity {mult})",
                        ledger.first_failure()
                    )
                })?;
                checked.push(format!("{label}(p={p},n={n})"));
            }
        }
    }
    Ok(format!("{} hypermaps: {}", checked.len(), checked.join(" ")))
}

fn ac3_g7_empty() -> Outcome {
    let mut notes = Vec::new();
    for p in [3u64, 5] {
        let start = Instant::now();
        let g7 = build_family(FamilySpec::new(Family::G7, p, p).unwrap()).unwrap();
        ensure(g7.group.order() as u64 == 2 * p * p * p, || format!("|G7| at p={p}"))?;
        let report =
            classify(&g7.group, "G7", (p * p) as usize, EnumerationOptions::default()).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(report.representatives.is_empty(), || {
            format!("p={p}: {} representatives", report.representatives.len())
        })?;
        ensure(elapsed < Duration::from_secs(120), || format!("p={p} took {elapsed:?}"))?;
        notes.push(format!("p={p}: 0 reps in {elapsed:.2?}"));
    }
    Ok(notes.join(", "))
}

fn ac4_oracle(all: &[(FamilySpec, Vec<hypermap_core::classify::CandidateTriple>)]) -> Outcome {
    let mut total = 0;
    let mut non_simple = 0;
    for (spec, triples) in all {
        for c in triples {
            let formula = edge_multiplicity(&c.hypermap).map_err(|e| e.to_string())?;
            let direct = edge_multiplicity_direct(&c.hypermap);
            ensure(formula == direct, || {
                format!("{spec} {:?}: formula {formula} vs direct {direct}", c.triple)
            })?;
            if formula > 1 {
                non_simple += 1;
            }
            total += 1;
        }
    }
    Ok(format!(
        "{total} triples over {} groups ({non_simple} with multiplicity > 1), 0 discrepancies",
        all.len()
    ))
}

fn ac5_core(all: &[(FamilySpec, Vec<hypermap_core::classify::CandidateTriple>)]) -> Outcome {
    let mut premises = 0;
    for (spec, triples) in all {
        for c in triples {
            if is_simple(&c.hypermap) && proviso_holds(&c.hypermap) {
                premises += 1;
                ensure(faithful_on_vertices(&c.hypermap), || {
                    format!("{spec} {:?}: simple with non-trivial core", c.triple)
                })?;
            }
        }
    }
    Ok(format!("{premises} simple triples with proviso, 0 counterexamples"))
}

fn check_euler(hm: &Hypermap) -> Result<(), String> {
    let t = hm.hypermap_type();
    let flags = hm.num_flags() as i128;
    let (k, m, n) = (t.k as i128, t.m as i128, t.n as i128);
    // χ·2kmn = |G|·(mn + kn + km − kmn)
    let lhs = hm.euler() as i128 * 2 * k * m * n;
    let rhs = flags * (m * n + k * n + k * m - k * m * n);
    let counted = (hm.num_vertices() + hm.num_edges() + hm.num_faces()) as i128 - flags / 2;
    ensure(lhs == rhs && counted == hm.euler() as i128, || {
        format!(
            "{:?}: χ = {} but type formula gives {rhs}/{}",
            hm.triple(),
            hm.euler(),
            2 * k * m * n
        )
    })?;
    ensure(!hm.orientable() || hm.euler() % 2 == 0, || {
        format!("{:?}: orientable with odd χ", hm.triple())
    })
}

fn ac6_euler(all: &[(FamilySpec, Vec<hypermap_core::classify::CandidateTriple>)]) -> Outcome {
    let mut count = 0;
    for (_, triples) in all {
        for c in triples {
            check_euler(&c.hypermap)?;
            count += 1;
        }
    }
    let h1 = explicit_triple(ExplicitLabel::H1, 2, 3).unwrap();
    let hm = Hypermap::build(h1.group.group.clone(), h1.triple).map_err(|e| e.to_string())?;
    check_euler(&hm)?;
    let t = hm.hypermap_type();
    ensure((t.k, t.m, t.n) == (3, 2, 3), || format!("H1 type {t:?}"))?;
    ensure(hm.euler() == 2, || format!("H1 χ = {}", hm.euler()))?;
    ensure(hm.orientable() && hm.orientable_genus() == Some(0), || {
        "H1 not genus 0 orientable".into()
    })?;
    Ok(format!(
        "{} hypermaps consistent; H1 type (3,2,3), χ = 2, genus 0",
        count + 1
    ))
}

fn ac7_example_fixture() -> Outcome {
    // V = {1..5}, E = {{1,3},{1,3},{2,3},{1,3,5}}
    let hg = Hypergraph::new(5, vec![vec![0, 2], vec![0, 2], vec![1, 2], vec![0, 2, 4]]).map_err(|e| e.to_string())?;
    let levi = hg.levi_graph();
    ensure(levi.adjacency.len() == 9, || {
        format!("{} incidences", levi.adjacency.len())
    })?;
    ensure(levi.vertex_degree(2) == 4, || "vertex 3 degree".into())?;
    ensure(levi.vertex_degree(3) == 0, || "vertex 4 not isolated".into())?;
    ensure(!hypergraph_simple_direct(&hg), || "reported simple".into())?;
    Ok("9 incidences, deg(3) = 4, vertex 4 isolated, not simple".into())
}

fn summary(report: &ClassificationReport) -> String {
    let reps: Vec<String> = report
        .representatives
        .iter()
        .map(|r| format!("{:?}/{:?}/{}", r.triple, r.hypermap.hypermap_type(), r.hypermap.euler()))
        .collect();
    format!(
        "{}|{}|{:?}|{}",
        report.descriptor,
        report.total_candidates,
        report.class_sizes,
        reps.join(";")
    )
}

fn ac8_properties(all: &[(FamilySpec, Vec<hypermap_core::classify::CandidateTriple>)]) -> Outcome {
    // permutation-group axioms on random permutations
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let n = rng.gen_range(1..20);
        let mut rand_perm = || {
            let mut v: Vec<u32> = (0..n as u32).collect();
            v.shuffle(&mut rng);
            Permutation::from_images(v).unwrap()
        };
        let (a, b, c) = (rand_perm(), rand_perm(), rand_perm());
        let ab = a.then(&b).unwrap();
        ensure(ab.then(&c).unwrap() == a.then(&b.then(&c).unwrap()).unwrap(), || {
            "associativity".into()
        })?;
        ensure(ab.inverse() == b.inverse().then(&a.inverse()).unwrap(), || {
            "inverse of product".into()
        })?;
        ensure(a.then(&a.inverse()).unwrap().is_identity(), || "inverse".into())?;
    }
    // closure and Lagrange on every catalog group, coset counting on every
    // H, K, F met in the enumeration
    let mut cosets_checked = 0;
    for (spec, triples) in all {
        let g = &triples.first().map(|c| c.hypermap.group_arc().clone());
        let Some(group) = g else { continue };
        let order = group.order();
        for c in triples.iter().take(50) {
            for sub in [
                c.hypermap.vertex_stabilizer(),
                c.hypermap.edge_stabilizer(),
                c.hypermap.face_stabilizer(),
            ] {
                ensure(order % sub.len() == 0, || format!("{spec}: Lagrange"))?;
                let cosets = group.right_cosets(sub);
                ensure(cosets.len() * sub.len() == order, || format!("{spec}: coset count"))?;
                cosets_checked += 1;
            }
        }
        let mut rng = StdRng::seed_from_u64(order as u64);
        for _ in 0..200 {
            let (a, b) = (rng.gen_range(0..order), rng.gen_range(0..order));
            let prod = group.element(a).then(group.element(b)).unwrap();
            ensure(group.index_of(&prod) == Some(group.mul(a, b)), || {
                format!("{spec}: closure")
            })?;
        }
    }
    // pruning is lossless on one family at p = 3
    let g2 = build_family(FamilySpec::new(Family::G2, 3, 4).unwrap()).unwrap();
    let pruned = classify(&g2.group, "G2", 9, EnumerationOptions::default()).map_err(|e| e.to_string())?;
    let full = classify(
        &g2.group,
        "G2",
        9,
        EnumerationOptions {
            prune: false,
            workers: 1,
        },
    )
    .map_err(|e| e.to_string())?;
    let reps = |r: &ClassificationReport| r.representatives.iter().map(|c| c.triple).collect::<Vec<_>>();
    ensure(reps(&pruned) == reps(&full), || {
        format!("pruned {:?} vs unpruned {:?}", reps(&pruned), reps(&full))
    })?;
    // byte-determinism across worker counts
    let mut groups_compared = 0;
    for spec in catalog_groups(300) {
        let g = build_family(spec).unwrap();
        let omega = (spec.p * spec.p) as usize;
        let base = summary(&classify(&g.group, spec.to_string(), omega, EnumerationOptions::default()).unwrap());
        for workers in [2, 4] {
            let other = summary(
                &classify(
                    &g.group,
                    spec.to_string(),
                    omega,
                    EnumerationOptions { prune: true, workers },
                )
                .unwrap(),
            );
            ensure(base == other, || {
                format!("{spec}: output differs with {workers} workers")
            })?;
        }
        groups_compared += 1;
    }
    // |G| divides degree! for the small-degree catalog groups and S4
    let s4 = GroupTable::generate(
        &[
            Permutation::from_cycles("(1 2 3 4)", 4).unwrap(),
            Permutation::from_cycles("(1 2)", 4).unwrap(),
        ],
        DEFAULT_CAP,
    )
    .map_err(|e| e.to_string())?;
    let mut small: Vec<GroupTable> = vec![s4];
    small.extend(
        catalog_groups(u64::MAX)
            .into_iter()
            .filter(|s| s.p <= 3)
            .map(|s| (*build_family(s).unwrap().group).clone()),
    );
    for g in &small {
        let factorial: u64 = (1..=g.degree() as u64).product();
        ensure(factorial.is_multiple_of(g.order() as u64), || {
            format!("|G| = {} does not divide {}!", g.order(), g.degree())
        })?;
    }
    Ok(format!(
        "axioms ok, {cosets_checked} coset partitions, pruning lossless ({} reps), deterministic over {groups_compared} groups",
        full.representatives.len()
    ))
}

fn main() {
    let all = enumerated_hypermaps();
    let criteria: Vec<Criterion<'_>> = vec![
        ("AC1 catalog reproduction", Box::new(ac1_catalog)),
        ("AC2 explicit simple hypermaps", Box::new(ac2_explicit_hypermaps)),
        ("AC3 G7 emptiness", Box::new(ac3_g7_empty)),
        ("AC4 multiplicity oracle equivalence", Box::new(|| ac4_oracle(&all))),
        ("AC5 simple implies faithful", Box::new(|| ac5_core(&all))),
        ("AC6 Euler consistency", Box::new(|| ac6_euler(&all))),
        ("AC7 Levi graph fixture", Box::new(ac7_example_fixture)),
        ("AC8 property suites", Box::new(|| ac8_properties(&all))),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

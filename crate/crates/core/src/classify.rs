//! Enumeration of generating involution triples satisfying the simplicity
//! conditions, and reduction to one representative per automorphism class.
//!
//! A triple is a *candidate* for target order `ω` when its entries are
//! involutions, it generates `G`, `[G : ⟨γ1,γ2⟩] = ω`, `⟨γ1,γ2⟩ ∩ ⟨γ2,γ0⟩ =
//! ⟨γ2⟩`, `⟨γ2,γ0⟩ = ⋂_{x∈K} K·H^x`, and the proviso `m = 2 ⇒ k ≥ 3` holds.
//!
//! Conjugating a whole triple preserves every condition and its class, so
//! `γ2` only ranges over representatives (least indices) of the conjugacy
//! classes of involutions. Representatives are the least triples of their
//! class under the key `(γ2, γ0, γ1)`: the least `γ2` in an automorphism
//! orbit is always a class representative, so pruning never hides the
//! least triple.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::hypermap::{Hypermap, HypermapType, InvolutionTriple};
use crate::simplicity::{edge_multiplicity, faithful_on_vertices, flag_condition, proviso_holds};

/// Per-condition verdicts, each evaluated independently of the others.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionLedger {
    pub involutions: bool,
    pub generates: bool,
    pub index: bool,
    pub flag_condition: bool,
    pub simple: bool,
    pub proviso: bool,
}

impl ConditionLedger {
    pub fn all_pass(&self) -> bool {
        self.involutions && self.generates && self.index && self.flag_condition && self.simple && self.proviso
    }

    /// Name of the first failing condition, in the order listed.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            ("involutions", self.involutions),
            ("generates", self.generates),
            ("index", self.index),
            ("flag_condition", self.flag_condition),
            ("simple", self.simple),
            ("proviso", self.proviso),
        ]
        .into_iter()
        .find(|(_, ok)| !ok)
        .map(|(name, _)| name)
    }

    /// Ledger of an already-built (so involutive and generating) hypermap.
    pub fn evaluate(hm: &Hypermap, omega: usize) -> Result<(Self, usize)> {
        let multiplicity = edge_multiplicity(hm)?;
        Ok((
            Self {
                involutions: true,
                generates: true,
                index: hm.num_vertices() == omega,
                flag_condition: flag_condition(hm),
                simple: multiplicity == 1,
                proviso: proviso_holds(hm),
            },
            multiplicity,
        ))
    }
}

#[derive(Clone, Debug)]
pub struct CandidateTriple {
    pub triple: InvolutionTriple,
    pub hypermap: Hypermap,
    pub passes: ConditionLedger,
    pub multiplicity: usize,
}

impl CandidateTriple {
    /// Ordering key for representatives.
    pub fn key(&self) -> (usize, usize, usize) {
        (self.triple.g2, self.triple.g0, self.triple.g1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Restrict `γ2` to conjugacy-class representatives.
    pub prune: bool,
    pub workers: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            prune: true,
            workers: 1,
        }
    }
}

/// Elements of order exactly 2, ascending.
pub fn involutions(group: &GroupTable) -> Vec<usize> {
    (0..group.order()).filter(|&g| group.element_order(g) == 2).collect()
}

/// Least element of each conjugacy class meeting `elements`.
pub fn class_representatives(group: &GroupTable, elements: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let mut reps = Vec::new();
    for &g in elements {
        if seen[g] {
            continue;
        }
        reps.push(g);
        for x in 0..group.order() {
            seen[group.conjugate(g, x)] = true;
        }
    }
    reps
}

fn run_parallel<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if workers <= 1 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(job))
}

/// Every triple of involutions that generates `G` with `[G : ⟨γ1,γ2⟩] = ω`,
/// with the remaining conditions evaluated into its ledger. Sorted by
/// [`CandidateTriple::key`].
pub fn enumerate_generating_triples(
    group: &Arc<GroupTable>,
    omega: usize,
    opts: EnumerationOptions,
) -> Result<Vec<CandidateTriple>> {
    let order = group.order();
    if omega == 0 || !order.is_multiple_of(omega) {
        return Ok(Vec::new());
    }
    let h_order = (order / omega) as u64;
    let invs = involutions(group);
    let g2_range = if opts.prune {
        class_representatives(group, &invs)
    } else {
        invs.clone()
    };
    // |⟨γ1,γ2⟩| = 2·|γ1γ2| for distinct involutions, 2 when equal.
    let pairs: Vec<(usize, usize)> = g2_range
        .iter()
        .flat_map(|&g2| invs.iter().map(move |&g1| (g2, g1)))
        .filter(|&(g2, g1)| {
            let dihedral = if g1 == g2 {
                2
            } else {
                2 * group.element_order(group.mul(g1, g2))
            };
            dihedral == h_order
        })
        .collect();

    let scan = |&(g2, g1): &(usize, usize)| -> Result<Vec<CandidateTriple>> {
        let h = group.subgroup_unchecked(&[g1, g2]);
        let mut mask = Vec::new();
        let mut queue = Vec::new();
        let mut out = Vec::new();
        for &g0 in &invs {
            if h.contains(g0) || group.generated_order(&[g0, g1, g2], &mut mask, &mut queue) != order {
                continue;
            }
            let triple = InvolutionTriple::new(g0, g1, g2);
            let hypermap = Hypermap::build_generating(group.clone(), triple)?;
            let (passes, multiplicity) = ConditionLedger::evaluate(&hypermap, omega)?;
            out.push(CandidateTriple {
                triple,
                hypermap,
                passes,
                multiplicity,
            });
        }
        Ok(out)
    };

    let chunks: Vec<Result<Vec<CandidateTriple>>> =
        run_parallel(opts.workers, || pairs.par_iter().map(scan).collect())?;
    let mut all = Vec::new();
    for chunk in chunks {
        all.extend(chunk?);
    }
    all.sort_by_key(CandidateTriple::key);
    Ok(all)
}

/// Triples passing every condition.
pub fn enumerate_candidates(
    group: &Arc<GroupTable>,
    omega: usize,
    opts: EnumerationOptions,
) -> Result<Vec<CandidateTriple>> {
    let mut all = enumerate_generating_triples(group, omega, opts)?;
    all.retain(|c| c.passes.all_pass());
    Ok(all)
}

/// Whether `γi ↦ γi'` extends to an automorphism of `G`.
///
/// The map is grown over the right Cayley graph of `(G, t1)` from
/// `φ(1) = 1` by `φ(g·γi) = φ(g)·γi'`; the triples are equivalent iff no
/// element receives two images and the result is a bijection.
pub fn triples_equivalent(group: &GroupTable, t1: &InvolutionTriple, t2: &InvolutionTriple) -> bool {
    let n = group.order();
    let from = t1.as_array();
    let to = t2.as_array();
    let mut phi = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    phi[0] = 0;
    hit[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let g = queue[head];
        head += 1;
        for i in 0..3 {
            let h = group.mul(g, from[i]);
            let image = group.mul(phi[g], to[i]);
            if phi[h] == usize::MAX {
                if hit[image] {
                    return false;
                }
                hit[image] = true;
                phi[h] = image;
                queue.push(h);
            } else if phi[h] != image {
                return false;
            }
        }
    }
    queue.len() == n
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub descriptor: String,
    pub group_order: usize,
    pub omega: usize,
    pub representatives: Vec<CandidateTriple>,
    /// Number of enumerated candidates in each representative's class.
    pub class_sizes: Vec<usize>,
    pub total_candidates: usize,
}

/// Partition candidates into automorphism classes, greedily in key order so
/// each representative is the least member of its class.
pub fn partition_classes(group: &GroupTable, candidates: Vec<CandidateTriple>) -> (Vec<CandidateTriple>, Vec<usize>) {
    let mut candidates = candidates;
    candidates.sort_by_key(CandidateTriple::key);
    let mut reps: Vec<(CandidateTriple, HypermapType, bool)> = Vec::new();
    let mut sizes: Vec<usize> = Vec::new();
    for c in candidates {
        let ty = c.hypermap.hypermap_type();
        let orientable = c.hypermap.orientable();
        let found = reps.iter().position(|(r, rty, ror)| {
            *rty == ty && *ror == orientable && triples_equivalent(group, &r.triple, &c.triple)
        });
        match found {
            Some(i) => sizes[i] += 1,
            None => {
                reps.push((c, ty, orientable));
                sizes.push(1);
            }
        }
    }
    (reps.into_iter().map(|(c, _, _)| c).collect(), sizes)
}

pub fn classify(
    group: &Arc<GroupTable>,
    descriptor: impl Into<String>,
    omega: usize,
    opts: EnumerationOptions,
) -> Result<ClassificationReport> {
    let candidates = enumerate_candidates(group, omega, opts)?;
    let total_candidates = candidates.len();
    let (representatives, class_sizes) = partition_classes(group, candidates);
    for rep in &representatives {
        if proviso_holds(&rep.hypermap) && !faithful_on_vertices(&rep.hypermap) {
            return Err(Error::Internal(format!(
                "simple representative {:?} has a non-trivial core",
                rep.triple
            )));
        }
    }
    Ok(ClassificationReport {
        descriptor: descriptor.into(),
        group_order: group.order(),
        omega,
        representatives,
        class_sizes,
        total_candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;
    use crate::perm::Permutation;

    fn sym(n: usize) -> Arc<GroupTable> {
        let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        let gens = [
            Permutation::from_images(cycle).unwrap(),
            Permutation::from_cycles("(1 2)", n).unwrap(),
        ];
        Arc::new(GroupTable::generate(&gens, DEFAULT_CAP).unwrap())
    }

    #[test]
    fn involution_counts() {
        let trivial = GroupTable::generate(&[Permutation::identity(3)], 10).unwrap();
        assert!(involutions(&trivial).is_empty());
        assert_eq!(involutions(&sym(3)).len(), 3);
        let s4 = sym(4);
        assert_eq!(involutions(&s4).len(), 9);
        assert_eq!(class_representatives(&s4, &involutions(&s4)).len(), 2);
    }

    #[test]
    fn z2_has_no_candidates() {
        let z2 = Arc::new(GroupTable::generate(&[Permutation::from_cycles("(1 2)", 2).unwrap()], 10).unwrap());
        for omega in 2..5 {
            assert!(enumerate_candidates(&z2, omega, EnumerationOptions::default())
                .unwrap()
                .is_empty());
        }
    }

    #[test]
    fn equivalence_basics() {
        let s4 = sym(4);
        let idx = |c: &str| s4.index_of(&Permutation::from_cycles(c, 4).unwrap()).unwrap();
        let t = InvolutionTriple::new(idx("(1 2)"), idx("(2 3)"), idx("(3 4)"));
        assert!(triples_equivalent(&s4, &t, &t));
        for x in 0..s4.order() {
            let c = t.conjugated(&s4, x);
            assert!(triples_equivalent(&s4, &t, &c));
            assert!(triples_equivalent(&s4, &c, &t));
        }
        // Type (3,2,3) against (2,3,3).
        let swapped = InvolutionTriple::new(t.g1, t.g0, t.g2);
        let ty1 = HypermapType::of(&s4, &t);
        let ty2 = HypermapType::of(&s4, &swapped);
        assert_ne!(ty1, ty2);
        assert!(!triples_equivalent(&s4, &t, &swapped));
    }

    #[test]
    fn non_generating_target_is_rejected() {
        let s4 = sym(4);
        let idx = |c: &str| s4.index_of(&Permutation::from_cycles(c, 4).unwrap()).unwrap();
        let t = InvolutionTriple::new(idx("(1 2)"), idx("(2 3)"), idx("(3 4)"));
        let small = InvolutionTriple::new(idx("(1 2)"), idx("(1 2)"), idx("(3 4)"));
        assert!(!triples_equivalent(&s4, &t, &small));
    }
}

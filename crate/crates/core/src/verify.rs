//! Checks the explicit hypermaps `H1..H6` against every classification
//! condition at a prime `p`, and that `G7` carries no simple hypermap of
//! order `p²`.

use serde::Serialize;

use crate::catalog::{build_family, explicit_triple, ExplicitLabel, Family, FamilySpec};
use crate::classify::{classify, ConditionLedger, EnumerationOptions};
use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::hypermap::{Hypermap, HypermapType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationEntry {
    pub label: String,
    pub family: Family,
    pub n: Option<u64>,
    pub status: EntryStatus,
    pub conditions: Option<ConditionLedger>,
    pub multiplicity: Option<usize>,
    #[serde(rename = "type")]
    pub hypermap_type: Option<HypermapType>,
    pub group_order: Option<usize>,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub p: u64,
    pub entries: Vec<VerificationEntry>,
    /// Representatives found on `G7` at order `p²`, absent for `p = 2`.
    pub g7_representatives: Option<usize>,
    pub passed: bool,
}

impl VerificationRecord {
    pub fn first_failure(&self) -> Option<String> {
        if let Some(e) = self.entries.iter().find(|e| e.status == EntryStatus::Fail) {
            return Some(format!("p={} {}: {}", self.p, e.label, e.note));
        }
        match self.g7_representatives {
            Some(k) if k > 0 => Some(format!("p={}: G7 carries {k} simple hypermaps", self.p)),
            _ => None,
        }
    }
}

fn check_label(label: ExplicitLabel, p: u64, n: u64) -> Result<VerificationEntry> {
    let omega = (p * p) as usize;
    let ph = explicit_triple(label, p, n)?;
    let mut entry = VerificationEntry {
        label: label.name().to_string(),
        family: label.family(),
        n: Some(n),
        status: EntryStatus::Fail,
        conditions: None,
        multiplicity: None,
        hypermap_type: None,
        group_order: Some(ph.group.group.order()),
        note: String::new(),
    };
    match Hypermap::build(ph.group.group.clone(), ph.triple) {
        Ok(hm) => {
            let (ledger, multiplicity) = ConditionLedger::evaluate(&hm, omega)?;
            entry.conditions = Some(ledger);
            entry.multiplicity = Some(multiplicity);
            entry.hypermap_type = Some(hm.hypermap_type());
            match ledger.first_failure() {
                None => entry.status = EntryStatus::Pass,
                Some(cond) => entry.note = format!("condition {cond} fails"),
            }
        }
        Err(e @ (Error::NotInvolution { .. } | Error::NotGenerating { .. })) => {
            let mut ledger = ConditionLedger {
                involutions: !matches!(e, Error::NotInvolution { .. }),
                ..Default::default()
            };
            ledger.generates = false;
            entry.conditions = Some(ledger);
            entry.note = e.to_string();
        }
        Err(e) => return Err(e),
    }
    Ok(entry)
}

/// Runs every applicable explicit hypermap at `p`, then the exhaustive `G7`
/// search when `p ≥ 3`.
pub fn verify_paper(p: u64, opts: EnumerationOptions) -> Result<VerificationRecord> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut entries = Vec::new();
    for label in ExplicitLabel::ALL {
        let ns: Vec<u64> = label
            .family()
            .legal_n(p)
            .into_iter()
            .filter(|&n| label.applies_to(n))
            .collect();
        if ns.is_empty() {
            entries.push(VerificationEntry {
                label: label.name().to_string(),
                family: label.family(),
                n: None,
                status: EntryStatus::NotApplicable,
                conditions: None,
                multiplicity: None,
                hypermap_type: None,
                group_order: None,
                note: format!("no legal n at p = {p}: {}", label.family().constraint()),
            });
        }
        for n in ns {
            entries.push(check_label(label, p, n)?);
        }
    }
    let g7_representatives = if p >= 3 {
        let g7 = build_family(FamilySpec::new(Family::G7, p, p)?)?;
        let report = classify(&g7.group, g7.spec.to_string(), (p * p) as usize, opts)?;
        Some(report.representatives.len())
    } else {
        None
    };
    let mut record = VerificationRecord {
        p,
        entries,
        g7_representatives,
        passed: false,
    };
    record.passed = record.first_failure().is_none();
    Ok(record)
}

/// As [`verify_paper`], failing with the first violated condition.
pub fn verify_paper_strict(p: u64, opts: EnumerationOptions) -> Result<VerificationRecord> {
    let record = verify_paper(p, opts)?;
    match record.first_failure() {
        Some(msg) => Err(Error::Verification(msg)),
        None => Ok(record),
    }
}

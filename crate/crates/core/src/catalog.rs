//! The seven affine families `G1..G7 = T ⋊ ⟨…⟩` of degree `p²` whose point
//! stabilizers are dihedral (or, for `G7`, listed alongside them), and the
//! explicit simple hypermaps `H1..H6` on them.
//!
//! Points are the row vectors `(a, b)` of `F_p²`, indexed `a·p + b`; group
//! elements act on the right. `T` is generated by the translations
//! `t_(1,0)` and `t_(0,1)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::affine::{AffineMap, Mat2};
use crate::error::{Error, Result};
use crate::field::{diag_param, is_prime, mod_inv, norm_one_element, primitive_root};
use crate::group::{GroupTable, Subgroup, DEFAULT_CAP};
use crate::hypermap::InvolutionTriple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::G1,
        Family::G2,
        Family::G3,
        Family::G4,
        Family::G5,
        Family::G6,
        Family::G7,
    ];

    /// Human-readable parameter constraint.
    pub fn constraint(self) -> &'static str {
        match self {
            Family::G1 => "G1 requires p = 2, n = 3",
            Family::G2 => "G2 requires p ≥ 3, n | p+1, n ≥ 3",
            Family::G3 => "G3 requires p ≥ 3, n | p-1, n ≥ 3",
            Family::G4 => "G4 requires p ≥ 3, n = 2",
            Family::G5 => "G5 requires p ≥ 3, n = p",
            Family::G6 => "G6 requires p ≥ 3, n = 2p",
            Family::G7 => "G7 requires p ≥ 3, n = p",
        }
    }

    /// Legal values of `n` at prime `p`, ascending.
    pub fn legal_n(self, p: u64) -> Vec<u64> {
        match self {
            Family::G1 if p == 2 => vec![3],
            Family::G1 => vec![],
            _ if p < 3 => vec![],
            Family::G2 => (3..=p + 1).filter(|n| (p + 1).is_multiple_of(*n)).collect(),
            Family::G3 => (3..=p - 1).filter(|n| (p - 1).is_multiple_of(*n)).collect(),
            Family::G4 => vec![2],
            Family::G5 | Family::G7 => vec![p],
            Family::G6 => vec![2 * p],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::SpecViolation(format!("unknown family {s:?} (expected G1..G7)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub p: u64,
    pub n: u64,
}

impl FamilySpec {
    pub fn new(family: Family, p: u64, n: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !family.legal_n(p).contains(&n) {
            return Err(Error::SpecViolation(format!(
                "{} (got p = {p}, n = {n})",
                family.constraint()
            )));
        }
        Ok(Self { family, p, n })
    }

    /// Every legal `(family, n)` at `p`, in family then `n` order.
    pub fn all_at(p: u64) -> Result<Vec<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Family::ALL
            .into_iter()
            .flat_map(|family| family.legal_n(p).into_iter().map(move |n| Self { family, p, n }))
            .collect())
    }

    /// `2np²` for `G1..G6`, `2p³` for `G7`.
    pub fn expected_order(&self) -> u64 {
        match self.family {
            Family::G7 => 2 * self.p.pow(3),
            _ => 2 * self.n * self.p * self.p,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(p={}, n={})", self.family, self.p, self.n)
    }
}

/// A catalog group with its named generators.
#[derive(Clone, Debug)]
pub struct AffineGroup {
    pub spec: FamilySpec,
    pub group: Arc<GroupTable>,
    /// Generator names (`t10`, `t01`, `x` or `x1`/`x2`, `y`) with their maps
    /// and element indices, in the order used for enumeration.
    pub generators: Vec<NamedGenerator>,
}

#[derive(Clone, Debug)]
pub struct NamedGenerator {
    pub name: &'static str,
    pub map: AffineMap,
    pub index: usize,
}

impl AffineGroup {
    pub fn generator(&self, name: &str) -> Option<&NamedGenerator> {
        self.generators.iter().find(|g| g.name == name)
    }

    pub fn map(&self, name: &str) -> AffineMap {
        self.generator(name)
            .unwrap_or_else(|| panic!("{} has no generator {name}", self.spec.family))
            .map
    }

    pub fn index_of_map(&self, map: &AffineMap) -> Option<usize> {
        self.group.index_of(&map.to_permutation())
    }

    /// Stabilizer of the origin `(0, 0)`.
    pub fn origin_stabilizer(&self) -> Subgroup {
        self.group.point_stabilizer(0)
    }
}

fn matrices(spec: &FamilySpec) -> Result<Vec<(&'static str, Mat2)>> {
    let FamilySpec { family, p, n } = *spec;
    let m = |a, b, c, d| Mat2::new(p, a, b, c, d);
    Ok(match family {
        Family::G1 => vec![("x", m(1, 1, 1, 0)), ("y", m(0, 1, 1, 0))],
        Family::G2 => {
            let theta = primitive_root(p)? as i64;
            let (e, f) = norm_one_element(p, n)?;
            let (e, f) = (e as i64, f as i64);
            vec![("x", m(e, f * theta, f, e)), ("y", m(1, 0, 0, -1))]
        }
        Family::G3 => {
            let t = diag_param(p, n)?;
            let t_inv = mod_inv(t, p);
            vec![("x", m(t as i64, 0, 0, t_inv as i64)), ("y", m(0, 1, 1, 0))]
        }
        Family::G4 => vec![("x", m(-1, 0, 0, -1)), ("y", m(1, 0, 0, -1))],
        Family::G5 => vec![("x", m(1, 1, 0, 1)), ("y", m(-1, 0, 0, 1))],
        Family::G6 => vec![("x1", m(1, 1, 0, 1)), ("x2", m(-1, 0, 0, -1)), ("y", m(1, 0, 0, -1))],
        Family::G7 => vec![("x", m(1, 1, 0, 1)), ("y", m(-1, 0, 0, -1))],
    })
}

/// Builds `T ⋊ ⟨generators⟩` as a permutation group on `p²` points.
pub fn build_family(spec: FamilySpec) -> Result<AffineGroup> {
    let spec = FamilySpec::new(spec.family, spec.p, spec.n)?;
    let p = spec.p;
    let mut named = vec![
        ("t10", AffineMap::translation(p, 1, 0)),
        ("t01", AffineMap::translation(p, 0, 1)),
    ];
    named.extend(
        matrices(&spec)?
            .into_iter()
            .map(|(name, m)| (name, AffineMap::linear(m))),
    );
    for (name, map) in &named {
        if map.matrix.det() == 0 {
            return Err(Error::Internal(format!("{name} is singular")));
        }
    }
    let perms: Vec<_> = named.iter().map(|(_, m)| m.to_permutation()).collect();
    let group = Arc::new(GroupTable::generate(&perms, DEFAULT_CAP)?);
    let generators = named
        .into_iter()
        .zip(group.generators())
        .map(|((name, map), &index)| NamedGenerator { name, map, index })
        .collect();
    Ok(AffineGroup {
        spec,
        group,
        generators,
    })
}

/// Whether `s` is dihedral of order `|s|`: it contains an element `r` of
/// order `|s|/2` and an involution outside `⟨r⟩` inverting it. The Klein
/// four-group counts as dihedral of order 4.
pub fn is_dihedral(group: &GroupTable, s: &Subgroup) -> bool {
    let size = s.len();
    if size < 4 || !size.is_multiple_of(2) {
        return false;
    }
    let half = (size / 2) as u64;
    s.iter().filter(|&r| group.element_order(r) == half).any(|r| {
        let rotations = group.subgroup_unchecked(&[r]);
        s.iter()
            .any(|f| group.element_order(f) == 2 && !rotations.contains(f) && group.conjugate(r, f) == group.inv(r))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExplicitLabel {
    H1,
    H21,
    H22,
    H31,
    H32,
    H4,
    H5,
    H6,
}

impl ExplicitLabel {
    pub const ALL: [ExplicitLabel; 8] = [
        ExplicitLabel::H1,
        ExplicitLabel::H21,
        ExplicitLabel::H22,
        ExplicitLabel::H31,
        ExplicitLabel::H32,
        ExplicitLabel::H4,
        ExplicitLabel::H5,
        ExplicitLabel::H6,
    ];

    pub fn family(self) -> Family {
        match self {
            ExplicitLabel::H1 => Family::G1,
            ExplicitLabel::H21 | ExplicitLabel::H22 => Family::G2,
            ExplicitLabel::H31 | ExplicitLabel::H32 => Family::G3,
            ExplicitLabel::H4 => Family::G4,
            ExplicitLabel::H5 => Family::G5,
            ExplicitLabel::H6 => Family::G6,
        }
    }

    /// `Some(true)` for even-only labels, `Some(false)` for odd-only.
    pub fn parity(self) -> Option<bool> {
        match self {
            ExplicitLabel::H21 | ExplicitLabel::H31 => Some(true),
            ExplicitLabel::H22 | ExplicitLabel::H32 => Some(false),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ExplicitLabel::H1 => "H1",
            ExplicitLabel::H21 => "H21",
            ExplicitLabel::H22 => "H22",
            ExplicitLabel::H31 => "H31",
            ExplicitLabel::H32 => "H32",
            ExplicitLabel::H4 => "H4",
            ExplicitLabel::H5 => "H5",
            ExplicitLabel::H6 => "H6",
        }
    }

    pub fn applies_to(self, n: u64) -> bool {
        self.parity().is_none_or(|even| n.is_multiple_of(2) == even)
    }
}

impl fmt::Display for ExplicitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExplicitLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExplicitLabel::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::SpecViolation(format!("unknown hypermap label {s:?}")))
    }
}

#[derive(Clone, Debug)]
pub struct ExplicitHypermap {
    pub label: ExplicitLabel,
    pub group: AffineGroup,
    pub triple: InvolutionTriple,
    pub maps: [AffineMap; 3],
}

/// The listed triple `(γ0, γ1, γ2)` for `label` on its family at `(p, n)`.
pub fn explicit_triple(label: ExplicitLabel, p: u64, n: u64) -> Result<ExplicitHypermap> {
    if let Some(even) = label.parity() {
        if n.is_multiple_of(2) != even {
            return Err(Error::ParityMismatch {
                label: label.name(),
                parity: if even { "even" } else { "odd" },
                n,
            });
        }
    }
    let group = build_family(FamilySpec::new(label.family(), p, n)?)?;
    let prod = |maps: &[AffineMap]| AffineMap::product(p, maps);
    let t = |a, b| AffineMap::translation(p, a, b);
    let g = |name: &str| group.map(name);
    let half_x = || AffineMap::linear(g("x").matrix.pow(n / 2));
    let (g0, g1, g2) = match label {
        ExplicitLabel::H1 => (prod(&[t(1, 1), g("y")]), prod(&[g("x"), g("y")]), g("y")),
        ExplicitLabel::H21 => (prod(&[t(1, 0), half_x(), g("y")]), prod(&[g("x"), g("y")]), g("y")),
        ExplicitLabel::H22 => (prod(&[t(0, 1), g("y")]), prod(&[g("x"), g("y")]), g("y")),
        ExplicitLabel::H31 => (prod(&[t(1, 1), half_x(), g("y")]), prod(&[g("x"), g("y")]), g("y")),
        ExplicitLabel::H32 => (prod(&[t(1, -1), g("y")]), prod(&[g("x"), g("y")]), g("y")),
        ExplicitLabel::H4 => (prod(&[t(1, 1), g("x")]), g("y"), g("x")),
        ExplicitLabel::H5 => (prod(&[t(1, 0), g("y")]), prod(&[g("x"), g("y")]), g("y")),
        ExplicitLabel::H6 => (
            prod(&[t(1, 0), g("x2"), g("y")]),
            prod(&[g("x1"), g("x2"), g("y")]),
            g("y"),
        ),
    };
    let maps = [g0, g1, g2];
    let mut idx = [0usize; 3];
    for (slot, map) in maps.iter().enumerate() {
        idx[slot] = group
            .index_of_map(map)
            .ok_or_else(|| Error::Internal(format!("{label} entry {slot} is not in the group")))?;
    }
    let triple = InvolutionTriple::new(idx[0], idx[1], idx[2]);
    triple.check_involutions(&group.group)?;
    Ok(ExplicitHypermap {
        label,
        group,
        triple,
        maps,
    })
}

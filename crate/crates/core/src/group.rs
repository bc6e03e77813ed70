//! Finite permutation groups with a fully enumerated, indexed element list.
//!
//! Elements are numbered in breadth-first discovery order from the identity
//! over the right Cayley graph of the generator list, so every index (and
//! everything derived from indices) is deterministic. Products are computed
//! with integer table walks only: each element remembers the Cayley-graph
//! edge it was discovered through, and right multiplication by a generator
//! is tabulated during the closure.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default upper bound on the number of enumerated elements.
pub const DEFAULT_CAP: usize = 200_000;

/// Groups up to this order get a dense multiplication table.
pub const DENSE_TABLE_LIMIT: usize = 4096;

const NONE: u32 = u32::MAX;

#[derive(Clone)]
pub struct GroupTable {
    degree: usize,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, u32>,
    generators: Vec<usize>,
    // gen_mul[g * ngens + s] = g * generator s
    gen_mul: Vec<u32>,
    // Cayley-graph parent and generator slot, NONE for the identity.
    parent: Vec<(u32, u32)>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl GroupTable {
    /// Breadth-first closure of `gens` under right multiplication.
    pub fn generate(gens: &[Permutation], cap: usize) -> Result<Self> {
        let degree = gens.first().ok_or(Error::NoGenerators)?.degree();
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(crate::perm::PermError::DegreeMismatch(degree, bad.degree()).into());
        }
        let ngens = gens.len();
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::new();
        lookup.insert(identity, 0u32);
        let mut parent = vec![(NONE, NONE)];
        let mut gen_mul: Vec<u32> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            for (s, gen) in gens.iter().enumerate() {
                let prod = elements[head].then_unchecked(gen);
                let idx = match lookup.get(&prod) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        let i = elements.len() as u32;
                        lookup.insert(prod.clone(), i);
                        elements.push(prod);
                        parent.push((head as u32, s as u32));
                        i
                    }
                };
                gen_mul.push(idx);
            }
            head += 1;
        }
        let generators = gens.iter().map(|g| lookup[g] as usize).collect::<Vec<_>>();
        let inverse = elements.iter().map(|e| lookup[&e.inverse()]).collect();
        let orders = elements.iter().map(|e| e.order() as u32).collect();
        let mut group = Self {
            degree,
            elements,
            lookup,
            generators,
            gen_mul,
            parent,
            inverse,
            orders,
            table: None,
        };
        debug_assert_eq!(group.gen_mul.len(), group.order() * ngens);
        if group.order() <= DENSE_TABLE_LIMIT {
            group.table = Some(group.build_table());
        }
        Ok(group)
    }

    fn build_table(&self) -> Vec<u32> {
        let n = self.order();
        let ngens = self.generators.len();
        let mut table = vec![0u32; n * n];
        for g in 0..n {
            let row = &mut table[g * n..(g + 1) * n];
            row[0] = g as u32;
            // BFS order guarantees the parent of j precedes j.
            for j in 1..n {
                let (p, s) = self.parent[j];
                row[j] = self.gen_mul[row[p as usize] as usize * ngens + s as usize];
            }
        }
        table
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, perm: &Permutation) -> Option<usize> {
        self.lookup.get(perm).map(|&i| i as usize)
    }

    /// Index of `element(a)` followed by `element(b)`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(table) = &self.table {
            return table[a * self.order() + b] as usize;
        }
        let ngens = self.generators.len();
        let mut word = Vec::new();
        let mut j = b;
        while j != 0 {
            let (p, s) = self.parent[j];
            word.push(s);
            j = p as usize;
        }
        let mut acc = a;
        for &s in word.iter().rev() {
            acc = self.gen_mul[acc * ngens + s as usize] as usize;
        }
        acc
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a] as u64
    }

    /// `x⁻¹ g x`
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn check_index(&self, i: usize) -> Result<usize> {
        if i < self.order() {
            Ok(i)
        } else {
            Err(Error::BadIndex(i))
        }
    }

    /// Closure of the given elements inside the group.
    pub fn subgroup(&self, gens: &[usize]) -> Result<Subgroup> {
        for &g in gens {
            self.check_index(g)?;
        }
        Ok(self.subgroup_unchecked(gens))
    }

    pub(crate) fn subgroup_unchecked(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut mask = vec![false; n];
        mask[0] = true;
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let g = members[head];
            for &s in gens {
                let h = self.mul(g, s);
                if !mask[h] {
                    mask[h] = true;
                    members.push(h);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        Subgroup(ElementSet { members, mask })
    }

    /// Size of the subgroup generated by `gens`, reusing caller buffers.
    pub(crate) fn generated_order(&self, gens: &[usize], mask: &mut Vec<bool>, queue: &mut Vec<usize>) -> usize {
        mask.clear();
        mask.resize(self.order(), false);
        queue.clear();
        mask[0] = true;
        queue.push(0);
        let mut head = 0;
        while head < queue.len() {
            let g = queue[head];
            for &s in gens {
                let h = self.mul(g, s);
                if !mask[h] {
                    mask[h] = true;
                    queue.push(h);
                }
            }
            head += 1;
        }
        queue.len()
    }

    pub fn whole(&self) -> Subgroup {
        let n = self.order();
        Subgroup(ElementSet {
            members: (0..n).collect(),
            mask: vec![true; n],
        })
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup(self.set_from_indices([0]))
    }

    pub fn set_from_indices(&self, indices: impl IntoIterator<Item = usize>) -> ElementSet {
        let mut mask = vec![false; self.order()];
        for i in indices {
            mask[i] = true;
        }
        ElementSet::from_mask(mask)
    }

    /// Right cosets `Hg`, blocks ordered by their least element index, so
    /// block 0 is `H` itself.
    pub fn right_cosets(&self, h: &Subgroup) -> CosetPartition {
        let n = self.order();
        let mut block_of = vec![NONE; n];
        let mut blocks = Vec::with_capacity(n / h.len());
        for g in 0..n {
            if block_of[g] != NONE {
                continue;
            }
            let b = blocks.len() as u32;
            let mut block: Vec<usize> = h.iter().map(|x| self.mul(x, g)).collect();
            for &x in &block {
                block_of[x] = b;
            }
            block.sort_unstable();
            blocks.push(block);
        }
        CosetPartition {
            block_of: block_of.into_iter().map(|b| b as usize).collect(),
            blocks,
        }
    }

    /// Largest normal subgroup contained in `h`: the kernel of the action on
    /// right cosets of `h`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let cosets = self.right_cosets(h);
        let reps: Vec<usize> = cosets.blocks.iter().map(|b| b[0]).collect();
        let kernel = h.iter().filter(|&g| {
            reps.iter()
                .enumerate()
                .all(|(i, &x)| cosets.block_of[self.mul(x, g)] == i)
        });
        Subgroup(self.set_from_indices(kernel))
    }

    /// `x⁻¹ H x`
    pub fn conjugate_subgroup(&self, h: &Subgroup, x: usize) -> Subgroup {
        Subgroup(self.set_from_indices(h.iter().map(|g| self.conjugate(g, x))))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators
            .iter()
            .all(|&x| h.iter().all(|g| h.contains(self.conjugate(g, x))))
    }

    /// `{a·b : a ∈ A, b ∈ B}`
    pub fn set_product(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let mut mask = vec![false; self.order()];
        for x in a.iter() {
            for y in b.iter() {
                mask[self.mul(x, y)] = true;
            }
        }
        ElementSet::from_mask(mask)
    }

    /// Whether `g ∈ K·S`, decided as `∃ k ∈ K : k⁻¹g ∈ S`.
    #[inline]
    pub fn product_contains(&self, k: &ElementSet, s: &ElementSet, g: usize) -> bool {
        k.iter().any(|x| s.contains(self.mul(self.inv(x), g)))
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            for &s in &self.generators {
                let y = self.elements[s].apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn point_stabilizer(&self, point: usize) -> Subgroup {
        Subgroup(self.set_from_indices((0..self.order()).filter(|&g| self.elements[g].apply(point) == point)))
    }
}

/// A set of element indices of some parent group, kept sorted with a
/// membership mask sized to the parent order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl ElementSet {
    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask.iter().enumerate().filter_map(|(i, &m)| m.then_some(i)).collect();
        Self { members, mask }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask.get(g).copied().unwrap_or(false)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        let mask = self.mask.iter().zip(&other.mask).map(|(&a, &b)| a && b).collect();
        ElementSet::from_mask(mask)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|g| other.contains(g))
    }

    /// Keeps the members satisfying `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(usize) -> bool) {
        let mask = &mut self.mask;
        self.members.retain(|&g| {
            let k = keep(g);
            if !k {
                mask[g] = false;
            }
            k
        });
    }
}

/// An [`ElementSet`] known to be closed under products and inverses.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup(ElementSet);

impl Subgroup {
    pub fn as_set(&self) -> &ElementSet {
        &self.0
    }

    pub fn into_set(self) -> ElementSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn contains(&self, g: usize) -> bool {
        self.0.contains(g)
    }

    pub fn members(&self) -> &[usize] {
        self.0.members()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter()
    }
}

impl std::ops::Deref for Subgroup {
    type Target = ElementSet;

    fn deref(&self) -> &ElementSet {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPartition {
    pub block_of: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

impl CosetPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::from_cycles(text, degree).unwrap()
    }

    fn s4() -> GroupTable {
        GroupTable::generate(&[p("(1 2 3 4)", 4), p("(1 2)", 4)], DEFAULT_CAP).unwrap()
    }

    #[test]
    fn generate_small() {
        let g = GroupTable::generate(&[p("(1 2)", 2)], DEFAULT_CAP).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.element(0).is_identity());
        assert_eq!(s4().order(), 24);
        assert!(matches!(
            GroupTable::generate(&[p("(1 2 3 4)", 4), p("(1 2)", 4)], 10),
            Err(Error::CapExceeded { cap: 10 })
        ));
        assert_eq!(GroupTable::generate(&[], 10).unwrap_err(), Error::NoGenerators);
    }

    #[test]
    fn dense_and_walked_products_agree() {
        let g = s4();
        let mut walked = g.clone();
        walked.table = None;
        for a in 0..g.order() {
            for b in 0..g.order() {
                let expect = g.index_of(&g.element(a).then(g.element(b)).unwrap()).unwrap();
                assert_eq!(g.mul(a, b), expect);
                assert_eq!(walked.mul(a, b), expect);
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
    }

    #[test]
    fn subgroup_examples() {
        let g = s4();
        assert_eq!(g.subgroup(&[0]).unwrap().len(), 1);
        assert_eq!(g.subgroup(g.generators()).unwrap().len(), 24);
        assert_eq!(g.subgroup(&[99]).unwrap_err(), Error::BadIndex(99));
        let stab = g.point_stabilizer(3);
        assert_eq!(stab.len(), 6);
        assert_eq!(g.right_cosets(&stab).len(), 4);
        assert_eq!(g.right_cosets(&g.whole()).len(), 1);
        assert_eq!(g.right_cosets(&g.trivial()).len(), 24);
        assert!(g.core(&stab).is_trivial());
        assert_eq!(g.core(&g.whole()).len(), 24);
    }

    #[test]
    fn coset_block_zero_is_subgroup() {
        let g = s4();
        let stab = g.point_stabilizer(0);
        let cosets = g.right_cosets(&stab);
        assert_eq!(cosets.blocks[0], stab.members());
        for w in cosets.blocks.windows(2) {
            assert!(w[0][0] < w[1][0]);
        }
    }

    #[test]
    fn conjugation_and_products() {
        let g = s4();
        let h = g.point_stabilizer(0);
        assert_eq!(g.conjugate_subgroup(&h, 0), h);
        for x in h.iter() {
            assert_eq!(g.conjugate_subgroup(&h, x), h);
        }
        let t = g.trivial();
        assert_eq!(g.set_product(&h, &t), *h.as_set());
        assert_eq!(g.set_product(&t, &h), *h.as_set());
        let k = g.point_stabilizer(1);
        let prod = g.set_product(&k, &h);
        let meet = k.intersect(&h);
        assert_eq!(prod.len(), k.len() * h.len() / meet.len());
        for x in 0..g.order() {
            assert_eq!(prod.contains(x), g.product_contains(&k, &h, x));
        }
        assert_eq!(h.intersect(&h), *h.as_set());
        assert_eq!(h.intersect(&g.whole()), *h.as_set());
    }

    #[test]
    fn normality() {
        let g = s4();
        let klein = g
            .subgroup(&[
                g.index_of(&p("(1 2)(3 4)", 4)).unwrap(),
                g.index_of(&p("(1 3)(2 4)", 4)).unwrap(),
            ])
            .unwrap();
        assert_eq!(klein.len(), 4);
        assert!(g.is_normal(&klein));
        assert_eq!(g.core(&klein), klein);
        assert!(!g.is_normal(&g.point_stabilizer(0)));
    }
}

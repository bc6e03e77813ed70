//! Dense permutations on `0..degree` and the cycle-notation surface.
//!
//! Composition follows the right-action convention: `a.then(&b)` applies `a`
//! first and `b` second, so the image of point `i` is `b[a[i]]`. Cycle
//! notation is 1-based externally and 0-based internally.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images do not form a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    DuplicatePoint(usize),
}

/// A permutation stored by its image array: `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images<I>(images: I) -> Result<Self, PermError>
    where
        I: IntoIterator,
        I::Item: TryInto<u32>,
    {
        let images: Vec<u32> = images.into_iter().map(|x| x.try_into().unwrap_or(u32::MAX)).collect();
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(PermError::NotABijection(n));
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses disjoint-cycle notation such as `(1 2)(3,4,5)`. Points missing
    /// from every cycle are fixed; `()` and the empty string give the identity.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let bytes = text.as_bytes();
        let mut pos = 0;
        let err = |pos: usize, msg: &str| PermError::Parse {
            pos,
            msg: msg.to_string(),
        };
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(err(pos, "expected '('"));
            }
            pos += 1;
            let mut cycle = Vec::new();
            let mut expect_label = true;
            loop {
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
                match bytes.get(pos) {
                    None => return Err(err(pos, "unbalanced parenthesis")),
                    Some(b')') => {
                        if !cycle.is_empty() && expect_label {
                            return Err(err(pos, "dangling separator"));
                        }
                        pos += 1;
                        break;
                    }
                    Some(b',') => {
                        if expect_label {
                            return Err(err(pos, "unexpected ','"));
                        }
                        expect_label = true;
                        pos += 1;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let label: usize = text[start..pos].parse().map_err(|_| err(start, "label too large"))?;
                        if label == 0 || label > degree {
                            return Err(PermError::PointOutOfRange { point: label, degree });
                        }
                        let point = label - 1;
                        if used[point] {
                            return Err(PermError::DuplicatePoint(label));
                        }
                        used[point] = true;
                        cycle.push(point as u32);
                        expect_label = false;
                    }
                    Some(_) => return Err(err(pos, "unexpected character")),
                }
            }
            for (i, &pt) in cycle.iter().enumerate() {
                images[pt as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Self) -> Self {
        Self {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut result = Self::identity(self.degree());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then_unchecked(&base);
            }
            base = base.then_unchecked(&base);
            e >>= 1;
        }
        result
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Canonical 1-based cycle form; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn from_images_examples() {
        assert!(Permutation::from_images([0, 1, 2]).unwrap().is_identity());
        let swap = Permutation::from_images([1, 0, 2]).unwrap();
        assert_eq!(swap.cycles(), vec![vec![0, 1]]);
        assert_eq!(Permutation::from_images([0, 0, 1]), Err(PermError::NotABijection(3)));
        assert_eq!(Permutation::from_images([0, 3, 1]), Err(PermError::NotABijection(3)));
    }

    #[test]
    fn from_cycles_examples() {
        let p = Permutation::from_cycles("(1 2)(3 4)", 4).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 2]);
        assert!(Permutation::from_cycles("()", 5).unwrap().is_identity());
        assert!(Permutation::from_cycles("", 5).unwrap().is_identity());
        assert_eq!(Permutation::from_cycles("  ", 2).unwrap().degree(), 2);
        assert!(matches!(
            Permutation::from_cycles("(1 2 3", 3),
            Err(PermError::Parse { .. })
        ));
        assert_eq!(Permutation::from_cycles("(1,2,3)", 3).unwrap().images(), &[1, 2, 0]);
        assert_eq!(
            Permutation::from_cycles("(1, 5)", 4),
            Err(PermError::PointOutOfRange { point: 5, degree: 4 })
        );
        assert_eq!(
            Permutation::from_cycles("(1 2)(2 3)", 3),
            Err(PermError::DuplicatePoint(2))
        );
        assert!(Permutation::from_cycles("(1 2) x", 3).is_err());
        assert!(Permutation::from_cycles("(1,,2)", 3).is_err());
        assert!(Permutation::from_cycles("(0 1)", 3).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(Permutation::from_images([1, 0]).unwrap().order(), 2);
        assert_eq!(Permutation::from_cycles("(1 2)(3 4 5)", 5).unwrap().order(), 6);
    }

    #[test]
    fn matrix_over_f2_has_order_three() {
        // ||1,1;1,0|| acting on row vectors (a,b) of F_2^2, point index 2a+b.
        let images: Vec<u32> = (0..4u32)
            .map(|i| {
                let (a, b) = (i / 2, i % 2);
                let (c, d) = ((a + b) % 2, a % 2);
                2 * c + d
            })
            .collect();
        let x = Permutation::from_images(images).unwrap();
        assert_eq!(x.order(), 3);
        assert!(x.pow(3).is_identity());
        assert!(!x.pow(2).is_identity());
    }

    #[test]
    fn then_is_right_action() {
        let a = Permutation::from_cycles("(1 2)", 3).unwrap();
        let b = Permutation::from_cycles("(2 3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).unwrap().apply(0), 2);
        assert_eq!(a.then(&Permutation::identity(2)), Err(PermError::DegreeMismatch(3, 2)));
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_axioms(
            (a, b, c) in (1usize..12).prop_flat_map(|n| (perm_strategy(n), perm_strategy(n), perm_strategy(n)))
        ) {
            let ab_c = a.then(&b).unwrap().then(&c).unwrap();
            let a_bc = a.then(&b.then(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert!(a.then(&a.inverse()).unwrap().is_identity());
            prop_assert_eq!(a.then(&b).unwrap().inverse(), b.inverse().then(&a.inverse()).unwrap());
            prop_assert!(a.pow(a.order()).is_identity());
        }

        #[test]
        fn cycle_text_round_trip(a in (1usize..15).prop_flat_map(perm_strategy)) {
            let text = a.to_string();
            let back = Permutation::from_cycles(&text, a.degree()).unwrap();
            prop_assert_eq!(back.to_string(), text);
            prop_assert_eq!(back, a);
        }
    }
}

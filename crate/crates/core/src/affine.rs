//! Affine maps `u ↦ u·M + v` on row vectors of `F_p²`.

use crate::perm::Permutation;

/// 2×2 matrix over `F_p`, entries `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub p: u64,
    pub rows: [[u64; 2]; 2],
}

impl Mat2 {
    /// Entries may be given as any integers; they are reduced mod `p`.
    pub fn new(p: u64, a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |x: i64| x.rem_euclid(p as i64) as u64;
        Self {
            p,
            rows: [[r(a), r(b)], [r(c), r(d)]],
        }
    }

    pub fn identity(p: u64) -> Self {
        Self::new(p, 1, 0, 0, 1)
    }

    pub fn det(&self) -> u64 {
        let [[a, b], [c, d]] = self.rows;
        (a * d % self.p + self.p - b * c % self.p) % self.p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.p;
        let mut rows = [[0; 2]; 2];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (self.rows[i][0] * other.rows[0][j] + self.rows[i][1] * other.rows[1][j]) % p;
            }
        }
        Self { p, rows }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = Self::identity(self.p);
        let mut base = *self;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        result
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: [u64; 2]) -> [u64; 2] {
        let p = self.p;
        [
            (v[0] * self.rows[0][0] + v[1] * self.rows[1][0]) % p,
            (v[0] * self.rows[0][1] + v[1] * self.rows[1][1]) % p,
        ]
    }
}

/// `u ↦ u·matrix + shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub matrix: Mat2,
    pub shift: [u64; 2],
}

impl AffineMap {
    pub fn linear(matrix: Mat2) -> Self {
        Self { matrix, shift: [0, 0] }
    }

    /// The translation `t_(a,b)`.
    pub fn translation(p: u64, a: i64, b: i64) -> Self {
        let r = |x: i64| x.rem_euclid(p as i64) as u64;
        Self {
            matrix: Mat2::identity(p),
            shift: [r(a), r(b)],
        }
    }

    pub fn apply(&self, v: [u64; 2]) -> [u64; 2] {
        let w = self.matrix.apply(v);
        let p = self.matrix.p;
        [(w[0] + self.shift[0]) % p, (w[1] + self.shift[1]) % p]
    }

    /// `self` first, then `other`: `(M1, v1)(M2, v2) = (M1·M2, v1·M2 + v2)`.
    pub fn then(&self, other: &Self) -> Self {
        let v = other.matrix.apply(self.shift);
        let p = self.matrix.p;
        Self {
            matrix: self.matrix.mul(&other.matrix),
            shift: [(v[0] + other.shift[0]) % p, (v[1] + other.shift[1]) % p],
        }
    }

    /// Product of the maps left to right.
    pub fn product<'a>(p: u64, maps: impl IntoIterator<Item = &'a AffineMap>) -> Self {
        maps.into_iter()
            .fold(Self::linear(Mat2::identity(p)), |acc, m| acc.then(m))
    }

    /// Action on points indexed `(a, b) ↦ a·p + b`.
    pub fn to_permutation(&self) -> Permutation {
        let p = self.matrix.p;
        let images = (0..p * p).map(|i| {
            let [a, b] = self.apply([i / p, i % p]);
            (a * p + b) as u32
        });
        Permutation::from_images(images).expect("invertible affine map")
    }
}

/// Point index of the row vector `(a, b)`.
pub fn point_index(p: u64, v: [u64; 2]) -> usize {
    (v[0] * p + v[1]) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn conjugating_translation_by_matrix() {
        // g⁻¹ t_α g = t_{αg}
        let p = 5;
        let g = AffineMap::linear(Mat2::new(p, 1, 2, 3, 4));
        let g_inv = AffineMap::linear(g.matrix.pow((p * p - 1) * (p * p - p) - 1));
        assert_eq!(g_inv.then(&g).matrix, Mat2::identity(p));
        let t = AffineMap::translation(p, 1, 3);
        let conj = AffineMap::product(p, [&g_inv, &t, &g]);
        let moved = g.matrix.apply([1, 3]);
        assert_eq!(conj, AffineMap::translation(p, moved[0] as i64, moved[1] as i64));
    }

    #[test]
    fn involution_with_translation() {
        let p = 7;
        let minus_one = AffineMap::linear(Mat2::new(p, -1, 0, 0, -1));
        let g = AffineMap::translation(p, 1, 1).then(&minus_one);
        assert!(g.then(&g).to_permutation().is_identity());
    }

    fn affine(p: u64) -> impl Strategy<Value = AffineMap> {
        (0..p, 0..p, 0..p, 0..p, 0..p, 0..p)
            .prop_filter("invertible", move |&(a, b, c, d, _, _)| {
                !(a * d + p * p - b * c).is_multiple_of(p)
            })
            .prop_map(move |(a, b, c, d, s, t)| AffineMap {
                matrix: Mat2::new(p, a as i64, b as i64, c as i64, d as i64),
                shift: [s, t],
            })
    }

    proptest! {
        #[test]
        fn to_permutation_is_homomorphism((x, y) in prop::sample::select(vec![2u64, 3, 5, 7]).prop_flat_map(|p| (affine(p), affine(p)))) {
            let lhs = x.then(&y).to_permutation();
            let rhs = x.to_permutation().then(&y.to_permutation()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(x.matrix.det() != 0);
        }
    }
}

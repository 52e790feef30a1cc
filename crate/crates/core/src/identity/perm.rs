use itertools::Itertools;

/// A bijection on `{1..n}` together with its inversion number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
    inversions: usize,
}

impl Permutation {
    /// `images[i - 1] = sigma(i)`; returns `None` unless `images` is a
    /// permutation of `1..=len`.
    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        let inversions = count_inversions(&images);
        Some(Permutation { images, inversions })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
            inversions: 0,
        }
    }

    /// All permutations of `{1..n}` in lexicographic order of their images.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|images| {
            let inversions = count_inversions(&images);
            Permutation { images, inversions }
        })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inversions(&self) -> usize {
        self.inversions
    }

    /// `(-1)^inv`.
    pub fn sign(&self) -> i64 {
        if self.inversions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation {
            inversions: self.inversions,
            images: inv,
        }
    }
}

fn count_inversions(images: &[usize]) -> usize {
    images
        .iter()
        .enumerate()
        .map(|(i, &a)| images[i + 1..].iter().filter(|&&b| a > b).count())
        .sum()
}

/// A subset `S` of `{1..n}` with `epsilon_i = -1` on `S` and `+1` off it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedSubset {
    n: usize,
    mask: u32,
}

impl SignedSubset {
    /// Bit `i - 1` of `mask` marks `i` as a member.
    pub fn from_mask(n: usize, mask: u32) -> SignedSubset {
        assert!(
            n < 32 && mask < (1 << n),
            "mask {mask:#b} outside a universe of {n}"
        );
        SignedSubset { n, mask }
    }

    /// All subsets as masks in increasing numeric order.
    pub fn all(n: usize) -> impl Iterator<Item = SignedSubset> {
        (0..1u32 << n).map(move |mask| SignedSubset { n, mask })
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask >> (i - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_proper(&self) -> bool {
        self.len() < self.n
    }

    pub fn epsilon(&self, i: usize) -> i32 {
        if self.contains(i) {
            -1
        } else {
            1
        }
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(|&i| self.contains(i))
    }

    pub fn complement(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(|&i| !self.contains(i))
    }

    /// `(-1)^{|S|}`.
    pub fn sign(&self) -> i64 {
        if self.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_with_inversions() {
        let all: Vec<_> = Permutation::all(3).collect();
        let imgs: Vec<_> = all.iter().map(|p| p.images().to_vec()).collect();
        assert_eq!(
            imgs,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        let inv: Vec<_> = all.iter().map(|p| p.inversions()).collect();
        assert_eq!(inv, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn validation_and_inverse() {
        assert!(Permutation::from_images(vec![1, 1]).is_none());
        assert!(Permutation::from_images(vec![0, 1]).is_none());
        let p = Permutation::from_images(vec![2, 3, 1]).unwrap();
        assert_eq!(p.inversions(), 2);
        assert_eq!(p.inverse().images(), &[3, 1, 2]);
        assert_eq!(p.inverse().inversions(), 2);
    }

    #[test]
    fn epsilon_from_membership() {
        let s = SignedSubset::from_mask(3, 0b101);
        assert_eq!(s.members().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(s.complement().collect::<Vec<_>>(), vec![2]);
        assert_eq!(
            (1..=3).map(|i| s.epsilon(i)).collect::<Vec<_>>(),
            vec![-1, 1, -1]
        );
        assert_eq!(s.sign(), 1);
        assert!(s.is_proper());
        assert!(!SignedSubset::from_mask(2, 0b11).is_proper());
        assert_eq!(SignedSubset::all(3).count(), 8);
    }
}

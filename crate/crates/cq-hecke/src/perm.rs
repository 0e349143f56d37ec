//! Permutations in one-line notation (0-indexed images), with the length
//! statistic and reduced words used by the permutation-basis multiplication.

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        let mut sorted = images.clone();
        sorted.sort_unstable();
        assert!(
            sorted.iter().enumerate().all(|(i, &x)| x == i as u8),
            "not a permutation: {:?}",
            images
        );
        Perm { images }
    }

    /// The adjacent transposition swapping `i` and `i+1` (0-indexed).
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i + 1 < n);
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(i, i + 1);
        Perm { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as u8)
    }

    /// Number of inversions = Coxeter length.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Composition `self . rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.n(), rhs.n());
        Perm {
            images: (0..self.n())
                .map(|i| self.images[rhs.images[i] as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Perm { images }
    }

    /// Right product by `s_i`: swaps the entries at positions `i`, `i+1`.
    /// The length goes up exactly when there is an ascent at `i`.
    pub fn right_mul_s(&self, i: usize) -> (Perm, bool) {
        let ascends = self.images[i] < self.images[i + 1];
        let mut images = self.images.clone();
        images.swap(i, i + 1);
        (Perm { images }, ascends)
    }

    /// A reduced word (list of `s_i` indices, left to right) by repeatedly
    /// removing the leftmost descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut word = Vec::new();
        loop {
            let mut descent = None;
            for i in 0..w.len() - 1 {
                if w[i] > w[i + 1] {
                    descent = Some(i);
                    break;
                }
            }
            match descent {
                Some(i) => {
                    // self = (shorter) . s_i, so s_i is the last letter
                    w.swap(i, i + 1);
                    word.push(i);
                }
                None => break,
            }
        }
        word.reverse();
        word
    }

    /// Extend to a permutation of `m >= n` points fixing the new ones.
    pub fn extend(&self, m: usize) -> Perm {
        assert!(m >= self.n());
        let mut images = self.images.clone();
        images.extend(self.n() as u8..m as u8);
        Perm { images }
    }

    /// Shift by `k`: acts on `{k, ..., k+n-1}`, fixing `{0, ..., k-1}`.
    pub fn shift(&self, k: usize) -> Perm {
        let mut images: Vec<u8> = (0..k as u8).collect();
        images.extend(self.images.iter().map(|&x| x + k as u8));
        Perm { images }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_and_reduced_words() {
        let w = Perm::from_images(vec![2, 0, 1]);
        assert_eq!(w.length(), 2);
        let word = w.reduced_word();
        assert_eq!(word.len(), 2);
        // rebuild from the word
        let mut p = Perm::identity(3);
        for i in word {
            p = p.compose(&Perm::transposition(3, i));
        }
        assert_eq!(p, w);
    }

    #[test]
    fn ascent_tracking() {
        let id = Perm::identity(3);
        let (s0, up) = id.right_mul_s(0);
        assert!(up);
        let (back, up2) = s0.right_mul_s(0);
        assert!(!up2);
        assert!(back.is_identity());
    }

    #[test]
    fn inverse_and_compose() {
        let w = Perm::from_images(vec![3, 1, 0, 2]);
        assert!(w.compose(&w.inverse()).is_identity());
        assert_eq!(w.inverse().length(), w.length());
    }
}

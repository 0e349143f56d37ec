//! Elements of the Hecke algebra H_n in the permutation basis `{T_w}`,
//! with multiplication driven by the quadratic relation
//! `sigma - sigma^{-1} = (q - q^{-1})`.

use crate::perm::Perm;
use cq_exact::FieldElem;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("generator index {0} out of range for {1} strands")]
    IndexOutOfRange(usize, usize),
    #[error("normalization scalar vanished (degenerate at this specialization)")]
    DegenerateNormalization,
    #[error("quantum integer [{0}] vanishes; symmetrizer undefined")]
    VanishingQuantumInteger(u32),
}

#[derive(Clone, Debug)]
pub struct HeckeElem {
    n: usize,
    terms: HashMap<Perm, FieldElem>,
}

impl PartialEq for HeckeElem {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && (self - other).is_zero()
    }
}

impl HeckeElem {
    pub fn zero(n: usize) -> Self {
        HeckeElem {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Perm::identity(n))
    }

    pub fn basis(w: Perm) -> Self {
        let n = w.n();
        let mut terms = HashMap::new();
        terms.insert(w, FieldElem::one());
        HeckeElem { n, terms }
    }

    pub fn scalar(n: usize, c: FieldElem) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Perm::identity(n), c);
        e
    }

    /// The positive braid generator `sigma_i` (1-indexed).
    pub fn sigma(n: usize, i: usize) -> Result<Self, HeckeError> {
        if i == 0 || i >= n {
            return Err(HeckeError::IndexOutOfRange(i, n));
        }
        Ok(Self::basis(Perm::transposition(n, i - 1)))
    }

    /// `sigma_i^{-1} = T_{s_i} - (q - q^{-1})`.
    pub fn sigma_inv(n: usize, i: usize) -> Result<Self, HeckeError> {
        let mut e = Self::sigma(n, i)?;
        let qq = &FieldElem::q() - &FieldElem::q_pow(-1);
        e.add_term(Perm::identity(n), -&qq);
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &FieldElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Perm) -> FieldElem {
        self.terms.get(w).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Perm, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(FieldElem::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        HeckeElem {
            n: self.n,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Right multiplication by the generator `sigma_i` (1-indexed) via
    /// `T_w sigma_i = T_{w s_i}` on ascents, else
    /// `T_{w s_i} + (q - q^{-1}) T_w`.
    pub fn right_mul_sigma(&self, i: usize) -> Result<Self, HeckeError> {
        if i == 0 || i >= self.n {
            return Err(HeckeError::IndexOutOfRange(i, self.n));
        }
        let qq = &FieldElem::q() - &FieldElem::q_pow(-1);
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let (ws, ascends) = w.right_mul_s(i - 1);
            if ascends {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.clone());
                out.add_term(w.clone(), c * &qq);
            }
        }
        Ok(out)
    }

    /// Right multiplication by `sigma_i^{-1}`.
    pub fn right_mul_sigma_inv(&self, i: usize) -> Result<Self, HeckeError> {
        let qq = &FieldElem::q() - &FieldElem::q_pow(-1);
        let lowered = self.right_mul_sigma(i)?;
        Ok(&lowered - &self.scale(&qq))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, HeckeError> {
        if self.n != rhs.n {
            return Err(HeckeError::StrandMismatch(self.n, rhs.n));
        }
        let mut out = Self::zero(self.n);
        for (v, d) in &rhs.terms {
            // T_v = product of sigma letters along a reduced word.
            let mut part = self.scale(d);
            for i in v.reduced_word() {
                part = part.right_mul_sigma(i + 1)?;
            }
            out = &out + &part;
        }
        Ok(out)
    }

    /// The involution: anti-automorphism with `sigma_i -> sigma_i^{-1}` and
    /// coefficients conjugated (`q -> q^{-1}`, `I -> -I`).
    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let mut part = Self::scalar(self.n, c.conj());
            for i in w.reduced_word().into_iter().rev() {
                part = part.right_mul_sigma_inv(i + 1).unwrap();
            }
            out = &out + &part;
        }
        out
    }

    /// Add `k` strands on the right: `x (x) 1^{(x) k}`.
    pub fn tensor_right(&self, k: usize) -> Self {
        HeckeElem {
            n: self.n + k,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.extend(self.n + k), c.clone()))
                .collect(),
        }
    }

    /// Add `k` strands on the left: `1^{(x) k} (x) x`.
    pub fn tensor_left(&self, k: usize) -> Self {
        HeckeElem {
            n: self.n + k,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.shift(k), c.clone()))
                .collect(),
        }
    }
}

impl std::ops::Add for &HeckeElem {
    type Output = HeckeElem;
    fn add(self, rhs: &HeckeElem) -> HeckeElem {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &HeckeElem {
    type Output = HeckeElem;
    fn sub(self, rhs: &HeckeElem) -> HeckeElem {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl fmt::Display for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Perm> = self.terms.keys().collect();
        keys.sort();
        let parts: Vec<String> = keys
            .iter()
            .map(|w| {
                let word = w
                    .reduced_word()
                    .iter()
                    .map(|i| format!("s{}", i + 1))
                    .collect::<Vec<_>>()
                    .join(" ");
                let word = if word.is_empty() { "1".to_string() } else { word };
                format!("({}) {}", self.terms[*w], word)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

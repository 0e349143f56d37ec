//! Sparse Laurent polynomials in `q` over the Gaussian rationals.
//!
//! Stored as an exponent -> coefficient map with no zero entries, so
//! structural equality is semantic equality.

use crate::gaussrat::GaussRat;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Laurent {
    terms: BTreeMap<i64, GaussRat>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, GaussRat::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, coeff: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Laurent { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (i64, GaussRat)>) -> Self {
        let mut p = Laurent::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: GaussRat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(GaussRat::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: i64) -> GaussRat {
        self.terms.get(&exp).cloned().unwrap_or_else(GaussRat::zero)
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// The involution `q -> q^{-1}`, `I -> -I`.
    pub fn conj(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (-e, c.conj())).collect(),
        }
    }

    /// Dense coefficient vector `[c_0, ..., c_d]` after shifting the lowest
    /// exponent to zero; returns `(min_exp, coeffs)`.
    pub fn to_dense(&self) -> (i64, Vec<GaussRat>) {
        if self.is_zero() {
            return (0, vec![]);
        }
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut v = vec![GaussRat::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub fn from_dense(min_exp: i64, coeffs: &[GaussRat]) -> Self {
        Laurent::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (min_exp + k as i64, c.clone())),
        )
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

/// Polynomial division over the Gaussian rationals on dense coefficient
/// vectors (highest degree last): returns `(quotient, remainder)`.
pub fn poly_divmod(num: &[GaussRat], den: &[GaussRat]) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let dd = den.len();
    assert!(dd > 0 && !den[dd - 1].is_zero(), "division by zero poly");
    if num.len() < dd {
        return (vec![], num.to_vec());
    }
    let lead_inv = den[dd - 1].inv();
    let mut rem = num.to_vec();
    let mut quot = vec![GaussRat::zero(); num.len() - dd + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd - 1] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..dd {
            rem[k + j] = &rem[k + j] - &(&den[j] * &c);
        }
    }
    while rem.last().map_or(false, |c| c.is_zero()) {
        rem.pop();
    }
    (quot, rem)
}

/// Monic gcd of two dense polynomials over the Gaussian rationals.
pub fn poly_gcd(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
    while b.last().map_or(false, |c| c.is_zero()) {
        b.pop();
    }
    while !b.is_empty() {
        let (_, r) = poly_divmod(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        let inv = lead.inv();
        for c in &mut a {
            *c = &*c * &inv;
        }
    }
    a
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest exponent first reads naturally.
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let (sign, body) = if let Some(stripped) = cs.strip_prefix('-') {
                // Only strip the sign of a purely leading minus.
                if c.is_real() || c.re.numer().sign() == num_bigint::Sign::NoSign {
                    ("-", stripped.to_string())
                } else {
                    ("+", format!("({})", cs))
                }
            } else if cs.contains('+') || cs.contains('-') {
                ("+", format!("({})", cs))
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else if sign == "-" {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            first = false;
            let coeff_is_unit = body == "1";
            match (*e, coeff_is_unit) {
                (0, _) => write!(f, "{}", body)?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}*q", body)?,
                (e, true) => write!(f, "q^{}", e)?,
                (e, false) => write!(f, "{}*q^{}", body, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qn(e: i64) -> Laurent {
        Laurent::monomial(e, GaussRat::one())
    }

    #[test]
    fn mul_and_shift() {
        // (q + q^-1)(q - q^-1) = q^2 - q^-2
        let a = &qn(1) + &qn(-1);
        let b = &qn(1) - &qn(-1);
        let p = &a * &b;
        assert_eq!(p, &qn(2) - &qn(-2));
        assert_eq!(p.shift(2), &qn(4) - &qn(0));
    }

    #[test]
    fn conj_involution() {
        let a = Laurent::from_terms([(2, GaussRat::i()), (-1, GaussRat::from_int(3))]);
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn divmod_exact() {
        // (q^2 - 1) / (q - 1) = q + 1
        let num = vec![
            GaussRat::from_int(-1),
            GaussRat::zero(),
            GaussRat::from_int(1),
        ];
        let den = vec![GaussRat::from_int(-1), GaussRat::from_int(1)];
        let (q, r) = poly_divmod(&num, &den);
        assert!(r.is_empty());
        assert_eq!(q, vec![GaussRat::from_int(1), GaussRat::from_int(1)]);
    }

    #[test]
    fn gcd_of_common_factor() {
        // gcd((q-1)(q+2), (q-1)) = q - 1 (monic)
        let f = vec![
            GaussRat::from_int(-2),
            GaussRat::from_int(1),
            GaussRat::from_int(1),
        ];
        let g = vec![GaussRat::from_int(-1), GaussRat::from_int(1)];
        assert_eq!(poly_gcd(&f, &g), g);
    }

    #[test]
    fn display_reads_naturally() {
        let p = Laurent::from_terms([
            (2, GaussRat::one()),
            (0, GaussRat::one()),
            (-2, GaussRat::one()),
        ]);
        assert_eq!(p.to_string(), "q^2+1+q^-2");
    }
}

//! Elements of the rational function field Q(i)(q), stored as reduced
//! fractions of Laurent polynomials.
//!
//! Canonical form: numerator and denominator share no polynomial factor,
//! the denominator has lowest exponent 0 and leading coefficient 1. Under
//! this normalization structural equality decides semantic equality.

use crate::gaussrat::GaussRat;
use crate::laurent::{poly_divmod, poly_gcd, Laurent};
use crate::{ExactError, Result};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    num: Laurent,
    den: Laurent,
}

impl FieldElem {
    pub fn from_laurent(p: Laurent) -> Self {
        FieldElem {
            num: p,
            den: Laurent::one(),
        }
    }

    pub fn from_ratio(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "FieldElem with zero denominator");
        let mut x = FieldElem { num, den };
        x.reduce();
        x
    }

    pub fn zero() -> Self {
        Self::from_laurent(Laurent::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(Laurent::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(Laurent::constant(GaussRat::from_int(n)))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Self::from_laurent(Laurent::constant(c))
    }

    pub fn from_rat(num: i64, den: i64) -> Self {
        Self::from_laurent(Laurent::constant(GaussRat::from_ratio(num, den)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_gauss(GaussRat::i())
    }

    /// The monomial `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(Laurent::monomial(e, GaussRat::one()))
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    pub fn den(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Laurent::one();
            return;
        }
        // Monomial denominator: shift the exponent into the numerator and
        // scale; no gcd needed. This is the dominant case in practice.
        if self.den.num_terms() == 1 {
            let (e, c) = {
                let (e, c) = self.den.terms().next().unwrap();
                (*e, c.clone())
            };
            self.num = self.num.shift(-e).scale(&c.inv());
            self.den = Laurent::one();
            return;
        }
        let (_, nd) = self.num.to_dense();
        let (_, dd) = self.den.to_dense();
        let g = poly_gcd(&nd, &dd);
        let (mut nd, mut dd) = (nd, dd);
        if g.len() > 1 {
            let (qn, rn) = poly_divmod(&nd, &g);
            let (qd, rd) = poly_divmod(&dd, &g);
            debug_assert!(rn.is_empty() && rd.is_empty());
            nd = qn;
            dd = qd;
        }
        // Denominator: lowest exponent 0, leading (highest-degree)
        // coefficient 1; the compensating monomial moves to the numerator.
        let num_min = self.num.min_exp().unwrap();
        let den_min = self.den.min_exp().unwrap();
        let lead = dd.last().unwrap().clone();
        let lead_inv = lead.inv();
        for c in nd.iter_mut() {
            *c = &*c * &lead_inv;
        }
        for c in dd.iter_mut() {
            *c = &*c * &lead_inv;
        }
        self.num = Laurent::from_dense(num_min - den_min, &nd);
        self.den = Laurent::from_dense(0, &dd);
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::from_ratio(self.den.clone(), self.num.clone()))
    }

    /// The involution `q -> q^{-1}`, `I -> -I`.
    pub fn conj(&self) -> Self {
        Self::from_ratio(self.num.conj(), self.den.conj())
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            return self.inv().expect("pow of zero with negative exponent").pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self * &Self::from_int(n)
    }

    /// Evaluate at a numeric `q` on the unit circle, `q = exp(i theta)`.
    /// Used only for float reporting, never for exact decisions.
    pub fn eval_unit_circle_f64(&self, theta: f64) -> (f64, f64) {
        let eval = |p: &Laurent| -> (f64, f64) {
            let mut re = 0.0;
            let mut im = 0.0;
            for (e, c) in p.terms() {
                let (s, cth) = ((*e as f64) * theta).sin_cos();
                let cr = rat_f64(&c.re);
                let ci = rat_f64(&c.im);
                re += cr * cth - ci * s;
                im += cr * s + ci * cth;
            }
            (re, im)
        };
        let (nr, ni) = eval(&self.num);
        let (dr, di) = eval(&self.den);
        let d2 = dr * dr + di * di;
        ((nr * dr + ni * di) / d2, (ni * dr - nr * di) / d2)
    }
}

pub(crate) fn rat_f64(r: &num_rational::BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::from_ratio(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::from_ratio(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::from_ratio(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        assert!(!rhs.is_zero(), "FieldElem division by zero");
        FieldElem::from_ratio(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Laurent::one() {
            if self.num.num_terms() > 1 {
                write!(f, "{}", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            let n = if self.num.num_terms() > 1 {
                format!("({})", self.num)
            } else {
                format!("{}", self.num)
            };
            write!(f, "{}/({})", n, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldElem {
        FieldElem::q()
    }

    #[test]
    fn product_of_conjugate_binomials() {
        // (q + q^-1)(q - q^-1) = q^2 - q^-2
        let a = &q() + &FieldElem::q_pow(-1);
        let b = &q() - &FieldElem::q_pow(-1);
        let expect = &FieldElem::q_pow(2) - &FieldElem::q_pow(-2);
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (q^2 - q^-2)/(q - q^-1) = q + q^-1
        let num = &FieldElem::q_pow(2) - &FieldElem::q_pow(-2);
        let den = &q() - &FieldElem::q_pow(-1);
        assert_eq!(&num / &den, &q() + &FieldElem::q_pow(-1));
    }

    #[test]
    fn conj_is_involution() {
        let x = &(&q() + &FieldElem::i()) / &(&FieldElem::q_pow(2) - &FieldElem::from_int(3));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(FieldElem::zero().inv(), Err(ExactError::DivisionByZero));
    }
}

//! Exact cyclotomic arithmetic in the power basis of a primitive root of
//! unity, with reduction modulo the cyclotomic polynomial.
//!
//! For the root-of-unity specialization at level `N` the order is `4N+4`,
//! so that `q = zeta` is `exp(i pi/(2N+2))` and `I = zeta^{N+1}`.

use crate::field::FieldElem;
use crate::gaussrat::GaussRat;
use crate::{ExactError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dense polynomial coefficients (ascending degree) of the n-th cyclotomic
/// polynomial, computed by repeated exact division of `x^n - 1` and cached
/// per order (the reduction step runs on every multiplication).
pub fn cyclotomic_poly(n: u64) -> Vec<BigRational> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigRational>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = cyclotomic_poly_uncached(n);
    cache.lock().unwrap().insert(n, result.clone());
    result
}

fn cyclotomic_poly_uncached(n: u64) -> Vec<BigRational> {
    assert!(n > 0);
    if n == 1 {
        return vec![-BigRational::one(), BigRational::one()];
    }
    let mut result = x_n_minus_1(n);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        result = exact_div(&result, &phi_d);
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

fn x_n_minus_1(n: u64) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); n as usize + 1];
    v[0] = -BigRational::one();
    v[n as usize] = BigRational::one();
    v
}

fn exact_div(num: &[BigRational], den: &[BigRational]) -> Vec<BigRational> {
    let dd = den.len();
    let mut rem = num.to_vec();
    let mut quot = vec![BigRational::zero(); num.len() - dd + 1];
    let lead_inv = den[dd - 1].recip();
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd - 1] * &lead_inv;
        quot[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for j in 0..dd {
            rem[k + j] = &rem[k + j] - &(&den[j] * &c);
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if m > 1 {
        result = result / m * (m - 1);
    }
    result
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloElem {
    order: u64,
    /// Length `phi(order)`; coefficient of `zeta^k` at index `k`.
    coeffs: Vec<BigRational>,
}

impl CycloElem {
    pub fn zero(order: u64) -> Self {
        CycloElem {
            order,
            coeffs: vec![BigRational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one(order: u64) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u64, c: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c;
        z
    }

    pub fn from_int(order: u64, n: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(n)))
    }

    /// The primitive root `zeta` itself.
    pub fn zeta(order: u64) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// `zeta^k`, reduced into the power basis.
    pub fn zeta_pow(order: u64, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as usize;
        let mut dense = vec![BigRational::zero(); k + 1];
        dense[k] = BigRational::one();
        Self::from_poly(order, dense)
    }

    /// The imaginary unit; requires `4 | order`.
    pub fn i(order: u64) -> Self {
        assert!(order % 4 == 0, "imaginary unit needs 4 | order");
        Self::zeta_pow(order, (order / 4) as i64)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Reduce an arbitrary dense polynomial in `zeta` into the power basis.
    pub fn from_poly(order: u64, mut dense: Vec<BigRational>) -> Self {
        let phi = euler_phi(order) as usize;
        let modulus = cyclotomic_poly(order);
        debug_assert_eq!(modulus.len(), phi + 1);
        // Reduce modulo the (monic) cyclotomic polynomial.
        while dense.len() > phi {
            let k = dense.len() - 1;
            let c = dense[k].clone();
            if !c.is_zero() {
                for j in 0..=phi {
                    dense[k - phi + j] = &dense[k - phi + j] - &(&modulus[j] * &c);
                }
            }
            dense.pop();
        }
        dense.resize(phi, BigRational::zero());
        CycloElem {
            order,
            coeffs: dense,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Complex conjugation `zeta -> zeta^{-1}` (a Galois automorphism).
    pub fn conj(&self) -> Self {
        let mut dense = vec![BigRational::zero(); self.order as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = ((self.order as usize) - k) % self.order as usize;
            dense[e] = &dense[e] + c;
        }
        Self::from_poly(self.order, dense)
    }

    /// True when fixed by conjugation.
    pub fn is_real(&self) -> bool {
        self == &self.conj()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // Extended Euclid in Q[x] against the cyclotomic modulus.
        let modulus = cyclotomic_poly(self.order);
        let (g, _, t) = ext_gcd(&modulus, &self.coeffs);
        // g is a nonzero constant since the modulus is irreducible.
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        let inv: Vec<BigRational> = t.iter().map(|c| c * &ginv).collect();
        Ok(Self::from_poly(self.order, inv))
    }
}

/// Extended gcd on dense rational polynomials: returns `(g, s, t)` with
/// `s*a + t*b = g`.
fn ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        v
    }
    fn sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        // a - q*b
        let mut out = a.to_vec();
        let prod_len = if q.is_empty() || b.is_empty() {
            0
        } else {
            q.len() + b.len() - 1
        };
        if out.len() < prod_len {
            out.resize(prod_len, BigRational::zero());
        }
        for (i, qc) in q.iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            for (j, bc) in b.iter().enumerate() {
                out[i + j] = &out[i + j] - &(qc * bc);
            }
        }
        trim(out)
    }
    fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let db = b.len();
        if a.len() < db {
            return (vec![], a.to_vec());
        }
        let mut rem = a.to_vec();
        let mut quot = vec![BigRational::zero(); a.len() - db + 1];
        let lead_inv = b[db - 1].recip();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db - 1] * &lead_inv;
            quot[k] = c.clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..db {
                rem[k + j] = &rem[k + j] - &(&b[j] * &c);
            }
        }
        (trim(quot), trim(rem))
    }

    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = vec![];
    let mut t0: Vec<BigRational> = vec![];
    let mut t1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let s2 = sub_mul(&s0, &q, &s1);
        let t2 = sub_mul(&t0, &q, &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    (r0, s0, t0)
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.order, rhs.order);
        CycloElem {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.order, rhs.order);
        CycloElem {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.order, rhs.order);
        let mut dense = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                dense[i + j] = &dense[i + j] + &(a * b);
            }
        }
        CycloElem::from_poly(self.order, dense)
    }
}

impl Div for &CycloElem {
    type Output = CycloElem;
    fn div(self, rhs: &CycloElem) -> CycloElem {
        self * &rhs.inv().expect("CycloElem division by zero")
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloElem {
            type Output = CycloElem;
            fn $m(self, rhs: CycloElem) -> CycloElem {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*z", c)?,
                _ => write!(f, "{}*z^{}", c, k)?,
            }
        }
        Ok(())
    }
}

/// Specialize a generic scalar at `q = zeta_{4N+4}`, `I = zeta^{N+1}`.
pub fn specialize(x: &FieldElem, n_level: u32) -> Result<CycloElem> {
    let order = 4 * (n_level as u64) + 4;
    let eval = |p: &crate::laurent::Laurent| -> CycloElem {
        let mut acc = CycloElem::zero(order);
        for (e, c) in p.terms() {
            let coeff = embed_gauss(c, order);
            let term = &coeff * &CycloElem::zeta_pow(order, *e);
            acc = &acc + &term;
        }
        acc
    };
    let den = eval(x.den());
    if den.is_zero() {
        return Err(ExactError::PoleAtRootOfUnity { order });
    }
    let num = eval(x.num());
    Ok(&num * &den.inv()?)
}

fn embed_gauss(c: &GaussRat, order: u64) -> CycloElem {
    let re = CycloElem::from_rational(order, c.re.clone());
    let im = &CycloElem::from_rational(order, c.im.clone()) * &CycloElem::i(order);
    &re + &im
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        let as_i64 = |v: Vec<BigRational>| -> Vec<i64> {
            use num_traits::ToPrimitive;
            v.iter().map(|c| c.to_integer().to_i64().unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
        assert_eq!(
            as_i64(cyclotomic_poly(16)),
            vec![1, 0, 0, 0, 0, 0, 0, 0, 1]
        );
    }

    #[test]
    fn zeta_has_right_order() {
        let z = CycloElem::zeta(12);
        let mut p = CycloElem::one(12);
        for k in 1..12 {
            p = &p * &z;
            assert!(!p.is_one(), "zeta^{} = 1 too early", k);
        }
        p = &p * &z;
        assert!(p.is_one());
    }

    #[test]
    fn i_squared() {
        let i = CycloElem::i(12);
        assert_eq!(&i * &i, -CycloElem::one(12));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = &CycloElem::zeta_pow(12, 5) + &CycloElem::from_int(12, 3);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
    }

    #[test]
    fn conj_is_involution_and_fixes_real() {
        let z = CycloElem::zeta(16);
        assert_eq!(z.conj().conj(), z);
        let real = &z + &z.conj();
        assert!(real.is_real());
    }
}

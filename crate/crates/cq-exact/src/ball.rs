//! Rigorous interval arithmetic over exact rationals, used to certify signs
//! of real cyclotomic numbers and to print floating approximations.
//!
//! Endpoints are `BigRational`, so ring operations are exact; only the
//! transcendental constants (pi, sine, cosine) carry truncation error,
//! bounded by explicit alternating-series tails. Precision is a bit count:
//! intervals are certified to width below `2^{-bits}` where needed, with
//! refinement driven by the caller.

use crate::cyclo::CycloElem;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: i64) -> Self {
        Self::point(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid_f64(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        crate::field::rat_f64(&mid)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `Some(sign)` when the interval excludes zero.
    pub fn certified_sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }

    pub fn sub(&self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        let cands = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        if c.is_negative() {
            Interval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            Interval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    /// Reciprocal; requires the interval to exclude zero.
    pub fn recip(&self) -> Interval {
        assert!(!self.contains_zero(), "Interval::recip across zero");
        Interval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        }
    }

    pub fn div(&self, rhs: &Interval) -> Interval {
        self.mul(&rhs.recip())
    }
}

/// `pi` as an interval of width below `2^{-bits}`, by Machin's formula
/// `pi = 16 atan(1/5) - 4 atan(1/239)` with alternating-tail bounds.
pub fn pi(bits: u32) -> Interval {
    // atan(1/x) = sum_{k>=0} (-1)^k / ((2k+1) x^{2k+1}); alternating, so the
    // truncation error is bounded by the first omitted term.
    let atan_inv = |x: i64, terms: usize| -> (BigRational, BigRational) {
        let mut sum = BigRational::zero();
        let x2 = BigInt::from(x) * BigInt::from(x);
        let mut xpow = BigInt::from(x);
        for k in 0..terms {
            let term = BigRational::new(BigInt::one(), BigInt::from(2 * k as i64 + 1) * &xpow);
            if k % 2 == 0 {
                sum += &term;
            } else {
                sum -= &term;
            }
            xpow *= &x2;
        }
        let tail = BigRational::new(
            BigInt::one(),
            BigInt::from(2 * terms as i64 + 1) * &xpow,
        );
        (sum, tail)
    };
    // 5^{2k+1} gains ~4.6 bits per term, 239^{2k+1} ~15.8; add margin.
    let t5 = (bits as usize) / 4 + 4;
    let t239 = (bits as usize) / 15 + 3;
    let (a5, e5) = atan_inv(5, t5);
    let (a239, e239) = atan_inv(239, t239);
    let sixteen = BigRational::from_integer(BigInt::from(16));
    let four = BigRational::from_integer(BigInt::from(4));
    let center = &sixteen * &a5 - &four * &a239;
    let err = &sixteen * &e5 + &four * &e239;
    Interval {
        lo: &center - &err,
        hi: &center + &err,
    }
}

/// Sine and cosine of a rational interval by Taylor series with factorial
/// tail bounds; callers keep |x| modest (a few multiples of pi at most).
fn sin_cos(x: &Interval, bits: u32) -> (Interval, Interval) {
    // Use the midpoint for the series and widen by the interval radius,
    // since |sin'| <= 1 and |cos'| <= 1.
    let two = BigRational::from_integer(BigInt::from(2));
    let mid = (&x.lo + &x.hi) / &two;
    let rad = (&x.hi - &x.lo) / &two;

    // Terms until x^n/n! < 2^{-bits-2} for |x| <= 8 (enough for our angles):
    // n = bits works with a wide margin; pick adaptively but bounded.
    let mut terms = 8usize;
    let bound = BigRational::new(BigInt::one(), BigInt::one() << (bits as usize + 2));
    let abs_mid = mid.abs();
    loop {
        // x^terms / terms!
        let mut t = BigRational::one();
        for k in 1..=terms {
            t = t * &abs_mid / BigRational::from_integer(BigInt::from(k as i64));
        }
        if t < bound || terms > 4000 {
            break;
        }
        terms += 8;
    }

    let mut sin_sum = BigRational::zero();
    let mut cos_sum = BigRational::zero();
    let mut pow = BigRational::one(); // mid^k / k!
    for k in 0..=terms {
        if k > 0 {
            pow = pow * &mid / BigRational::from_integer(BigInt::from(k as i64));
        }
        match k % 4 {
            0 => cos_sum += &pow,
            1 => sin_sum += &pow,
            2 => cos_sum -= &pow,
            3 => sin_sum -= &pow,
            _ => unreachable!(),
        }
    }
    // Tail bound: |mid|^{terms+1}/(terms+1)! * 2 (crude but rigorous since
    // successive terms shrink at least geometrically once terms > 2|mid|).
    let mut tail = BigRational::one();
    for k in 1..=(terms + 1) {
        tail = tail * &abs_mid / BigRational::from_integer(BigInt::from(k as i64));
    }
    tail = tail * &two;
    let err = &tail + &rad;
    let widen = |c: BigRational| Interval {
        lo: &c - &err,
        hi: &c + &err,
    };
    (widen(sin_sum), widen(cos_sum))
}

/// Complex interval.
#[derive(Clone, Debug)]
pub struct ComplexBall {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBall {
    pub fn zero() -> Self {
        ComplexBall {
            re: Interval::zero(),
            im: Interval::zero(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        ComplexBall {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        ComplexBall {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ComplexBall {
            re: self.re.scale(c),
            im: self.im.scale(c),
        }
    }

    pub fn mid_f64(&self) -> (f64, f64) {
        (self.re.mid_f64(), self.im.mid_f64())
    }
}

/// `zeta_order^k = exp(2 pi i k / order)` as a complex interval.
pub fn root_of_unity(order: u64, k: i64, bits: u32) -> ComplexBall {
    let k = k.rem_euclid(order as i64);
    let pi_iv = pi(bits + 8);
    let frac = BigRational::new(BigInt::from(2 * k), BigInt::from(order as i64));
    let angle = pi_iv.scale(&frac);
    let (s, c) = sin_cos(&angle, bits + 4);
    ComplexBall { re: c, im: s }
}

/// Evaluate a cyclotomic number numerically as a complex interval.
pub fn eval_cyclo(x: &CycloElem, bits: u32) -> ComplexBall {
    let order = x.order();
    let mut acc = ComplexBall::zero();
    for (k, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let z = root_of_unity(order, k as i64, bits);
        acc = acc.add(&z.scale(c));
    }
    acc
}

/// Certified sign of a real cyclotomic number: exact zero test first, then
/// interval refinement (terminates because nonzero numbers separate from 0).
pub fn sign_of_real_cyclo(x: &CycloElem) -> i32 {
    assert!(x.is_real(), "sign of a non-real cyclotomic number");
    if x.is_zero() {
        return 0;
    }
    let mut bits = 64;
    loop {
        let ball = eval_cyclo(x, bits);
        if let Some(s) = ball.re.certified_sign() {
            return s;
        }
        bits *= 2;
        assert!(bits <= 1 << 16, "sign refinement runaway");
    }
}

/// Float value of a real cyclotomic number at 128-bit working precision.
pub fn real_cyclo_f64(x: &CycloElem) -> f64 {
    eval_cyclo(x, 128).re.mid_f64()
}

pub fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_interval_is_tight() {
        let p = pi(128);
        assert!(p.lo < p.hi);
        let w = p.width();
        let bound = BigRational::new(BigInt::one(), BigInt::one() << 128);
        assert!(w < bound);
        let mid = p.mid_f64();
        assert!((mid - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn root_of_unity_twelfth() {
        // zeta_12 = exp(i pi/6): re = sqrt(3)/2, im = 1/2
        let z = root_of_unity(12, 1, 96);
        assert!((z.re.mid_f64() - 3f64.sqrt() / 2.0).abs() < 1e-20_f64.max(1e-15));
        assert!((z.im.mid_f64() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn certified_signs() {
        // zeta_12 + zeta_12^{-1} = 2 cos(pi/6) = sqrt(3) > 0
        let z = CycloElem::zeta(12);
        let real = &z + &z.conj();
        assert!(real.is_real());
        assert_eq!(sign_of_real_cyclo(&real), 1);
        assert_eq!(sign_of_real_cyclo(&(-&real)), -1);
        assert_eq!(sign_of_real_cyclo(&CycloElem::zero(12)), 0);
        assert!((real_cyclo_f64(&real) - 3f64.sqrt()).abs() < 1e-12);
    }
}

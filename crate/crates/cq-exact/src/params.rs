//! The parameter dictionary of the planar algebra over Q(i)(q).
//!
//! All five scalars are Laurent expressions in `q`:
//! `delta = i(q+q^{-1})/(q-q^{-1})`, `r = i q^{-1}`, `a = (q-q^{-1})/2`,
//! `b = (q-q^{-1})/(2i)`, `d = (q+q^{-1})/2`, and the circle-parameter
//! identity `(r - r^{-1})/(q - q^{-1}) = delta` holds exactly.

use crate::field::FieldElem;

#[derive(Clone, Debug)]
pub struct Params {
    pub delta: FieldElem,
    pub r: FieldElem,
    pub a: FieldElem,
    pub b: FieldElem,
    pub d: FieldElem,
}

impl Params {
    pub fn generic() -> Self {
        let q = FieldElem::q();
        let qi = FieldElem::q_pow(-1);
        let i = FieldElem::i();
        let two = FieldElem::from_int(2);
        let q_plus = &q + &qi;
        let q_minus = &q - &qi;
        Params {
            delta: &(&i * &q_plus) / &q_minus,
            r: &i * &qi,
            a: &q_minus / &two,
            b: &q_minus / &(&two * &i),
            d: &q_plus / &two,
        }
    }

    pub fn delta_inv(&self) -> FieldElem {
        self.delta.inv().expect("delta is nonzero")
    }
}

/// The quantum integer `[n] = (q^n - q^{-n})/(q - q^{-1})`, built directly
/// as the Laurent polynomial `q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn qint(n: u32) -> FieldElem {
    let mut acc = FieldElem::zero();
    let n = n as i64;
    let mut e = n - 1;
    while e >= 1 - n {
        acc = &acc + &FieldElem::q_pow(e);
        e -= 2;
    }
    acc
}

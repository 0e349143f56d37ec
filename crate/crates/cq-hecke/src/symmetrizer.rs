//! The inductive symmetrizer and antisymmetrizer:
//! `f(l) = f(l-1) - [l-1]/[l] f(l-1) (q - sigma_{l-1}) f(l-1)` and the
//! antisymmetrizer with `(q^{-1} + sigma_{l-1})`, plus the alternative
//! recursion growing from the left.

use crate::elem::{HeckeElem, HeckeError};
use cq_exact::{qint, FieldElem};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymKind {
    Sym,
    Antisym,
}

/// `f^{(l)}` or `g^{(l)}` inside `H_n` (`n >= l`).
pub fn symmetrizer(l: u32, n: usize, kind: SymKind) -> Result<HeckeElem, HeckeError> {
    assert!(n >= l as usize && l >= 1);
    let mut acc = HeckeElem::one(n);
    for step in 2..=l {
        acc = grow_right(&acc, step, n, kind)?;
    }
    Ok(acc)
}

fn ratio(step: u32) -> Result<FieldElem, HeckeError> {
    let den = qint(step);
    if den.is_zero() {
        return Err(HeckeError::VanishingQuantumInteger(step));
    }
    Ok(&qint(step - 1) / &den)
}

fn grow_right(
    prev: &HeckeElem,
    step: u32,
    n: usize,
    kind: SymKind,
) -> Result<HeckeElem, HeckeError> {
    let i = step as usize - 1; // sigma_{l-1}
    let middle = middle_factor(n, i, kind)?;
    let corr = prev.mul(&middle)?.mul(prev)?;
    Ok(prev - &corr.scale(&ratio(step)?))
}

fn middle_factor(n: usize, i: usize, kind: SymKind) -> Result<HeckeElem, HeckeError> {
    let sigma = HeckeElem::sigma(n, i)?;
    Ok(match kind {
        SymKind::Sym => &HeckeElem::scalar(n, FieldElem::q()) - &sigma,
        SymKind::Antisym => &HeckeElem::scalar(n, FieldElem::q_pow(-1)) + &sigma,
    })
}

/// The alternative recursion `f^{(l)} = 1 (x) f^{(l-1)} - [l-1]/[l]
/// (1 (x) f^{(l-1)}) (q - sigma_1) (1 (x) f^{(l-1)})`, growing on the left.
pub fn symmetrizer_alt(l: u32, n: usize, kind: SymKind) -> Result<HeckeElem, HeckeError> {
    assert!(n >= l as usize && l >= 1);
    if l == 1 {
        return Ok(HeckeElem::one(n));
    }
    let prev = symmetrizer_alt(l - 1, n - 1, kind)?;
    let shifted = prev.tensor_left(1).tensor_right(n - l as usize);
    let middle = middle_factor(n, 1, kind)?;
    let corr = shifted.mul(&middle)?.mul(&shifted)?;
    Ok(&shifted - &corr.scale(&ratio(l)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cq_exact::Params;

    #[test]
    fn base_cases_are_identity() {
        assert_eq!(symmetrizer(1, 2, SymKind::Sym).unwrap(), HeckeElem::one(2));
        assert_eq!(
            symmetrizer(1, 2, SymKind::Antisym).unwrap(),
            HeckeElem::one(2)
        );
    }

    #[test]
    fn two_box_formulas() {
        // f^{(2)} = 1 - (q - sigma_1)/[2], g^{(2)} = 1 - (q^{-1} + sigma_1)/[2]
        let f2 = symmetrizer(2, 2, SymKind::Sym).unwrap();
        let inv2 = qint(2).inv().unwrap();
        let expect = &HeckeElem::one(2)
            - &(&HeckeElem::scalar(2, FieldElem::q()) - &HeckeElem::sigma(2, 1).unwrap())
                .scale(&inv2);
        assert_eq!(f2, expect);

        let g2 = symmetrizer(2, 2, SymKind::Antisym).unwrap();
        let expect = &HeckeElem::one(2)
            - &(&HeckeElem::scalar(2, FieldElem::q_pow(-1)) + &HeckeElem::sigma(2, 1).unwrap())
                .scale(&inv2);
        assert_eq!(g2, expect);
    }

    #[test]
    fn idempotent_and_eigen() {
        for l in 2..=4u32 {
            let n = l as usize;
            let f = symmetrizer(l, n, SymKind::Sym).unwrap();
            assert_eq!(f.mul(&f).unwrap(), f, "f^{} not idempotent", l);
            let g = symmetrizer(l, n, SymKind::Antisym).unwrap();
            assert_eq!(g.mul(&g).unwrap(), g, "g^{} not idempotent", l);
            for i in 1..n {
                let s = HeckeElem::sigma(n, i).unwrap();
                assert_eq!(
                    f.mul(&s).unwrap(),
                    f.scale(&FieldElem::q()),
                    "f sigma_{} != q f",
                    i
                );
                assert_eq!(
                    g.mul(&s).unwrap(),
                    g.scale(&(-&FieldElem::q_pow(-1))),
                    "g sigma_{} != -q^-1 g",
                    i
                );
            }
        }
    }

    #[test]
    fn alternative_recursion_agrees() {
        for l in 1..=4u32 {
            let n = l as usize;
            for kind in [SymKind::Sym, SymKind::Antisym] {
                assert_eq!(
                    symmetrizer(l, n, kind).unwrap(),
                    symmetrizer_alt(l, n, kind).unwrap(),
                    "mismatch at l={}",
                    l
                );
            }
        }
    }

    #[test]
    fn star_fixes_symmetrizers() {
        for l in 2..=3u32 {
            let f = symmetrizer(l, l as usize, SymKind::Sym).unwrap();
            assert_eq!(f.star(), f);
            let g = symmetrizer(l, l as usize, SymKind::Antisym).unwrap();
            assert_eq!(g.star(), g);
        }
    }

    #[test]
    fn murphy_on_two_boxes() {
        // sigma_1^2 has eigenvalue q^2 on f^{(2)} and q^{-2} on g^{(2)}
        let f = symmetrizer(2, 2, SymKind::Sym).unwrap();
        let g = symmetrizer(2, 2, SymKind::Antisym).unwrap();
        let eps2 = crate::murphy::murphy(2, 2).unwrap();
        assert_eq!(eps2.mul(&f).unwrap(), f.scale(&FieldElem::q_pow(2)));
        assert_eq!(eps2.mul(&g).unwrap(), g.scale(&FieldElem::q_pow(-2)));
        let _ = Params::generic();
    }
}

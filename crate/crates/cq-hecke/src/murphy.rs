//! The q-Murphy operator: the full-twist word
//! `eps_n = sigma_{n-1} ... sigma_1 . sigma_1 ... sigma_{n-1}`,
//! whose right action on branch morphisms is scalar with eigenvalue
//! `q^{2 cn(c)}` for the added cell `c`.

use crate::elem::{HeckeElem, HeckeError};

/// `eps_k` inside `H_n` (`1 <= k <= n`); `eps_1` is the identity.
pub fn murphy(k: usize, n: usize) -> Result<HeckeElem, HeckeError> {
    assert!(k >= 1 && k <= n);
    let mut acc = HeckeElem::one(n);
    for i in (1..k).rev() {
        acc = acc.right_mul_sigma(i)?;
    }
    for i in 1..k {
        acc = acc.right_mul_sigma(i)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn murphy_one_is_identity() {
        assert_eq!(murphy(1, 3).unwrap(), HeckeElem::one(3));
    }

    #[test]
    fn murphy_two_is_sigma_squared() {
        let s = HeckeElem::sigma(2, 1).unwrap();
        assert_eq!(murphy(2, 2).unwrap(), s.mul(&s).unwrap());
    }

    #[test]
    fn murphys_commute() {
        let e2 = murphy(2, 3).unwrap();
        let e3 = murphy(3, 3).unwrap();
        assert_eq!(e2.mul(&e3).unwrap(), e3.mul(&e2).unwrap());
    }
}

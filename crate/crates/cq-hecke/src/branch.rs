//! Branch morphisms between `y_mu (x) 1` and `y_lambda` for `lambda > mu`:
//! the up and down maps live in the one-dimensional intertwiner space, are
//! normalized so that `down . up = y_lambda`, and sum to the branching
//! identity over all ways of adding a cell.

use crate::elem::{HeckeElem, HeckeError};
use crate::young_idem::{young_idempotent, YoungIdem};
use cq_exact::FieldElem;
use cq_young::YoungDiagram;

#[derive(Clone, Debug)]
pub struct BranchMorphism {
    pub mu: YoungDiagram,
    pub lambda: YoungDiagram,
    /// `rho_{mu < lambda}`: from `y_mu (x) 1` to `y_lambda`.
    pub up: HeckeElem,
    /// `rho_{lambda > mu}`: from `y_lambda` to `y_mu (x) 1`.
    pub down: HeckeElem,
    /// The pairing scalar of the unnormalized morphisms.
    pub pairing_norm: FieldElem,
}

/// Build the branch pair for `lambda = mu + one cell`.
pub fn branch(mu: &YoungDiagram, lambda: &YoungDiagram) -> Result<BranchMorphism, HeckeError> {
    assert!(
        mu.added_cell_to(lambda).is_some(),
        "{} is not {} plus one cell",
        lambda,
        mu
    );
    let n = lambda.size() as usize;
    let y_lam = young_idempotent(lambda)?.element;
    let y_mu_ext = if mu.is_empty() {
        HeckeElem::one(n)
    } else {
        young_idempotent(mu)?.element.tensor_right(1)
    };
    // The intertwiner space (y_mu (x) 1) H_n y_lambda is one-dimensional;
    // the bare product of the idempotents can vanish, so scan basis
    // permutations by length for a nonzero representative.
    let mut perms: Vec<crate::perm::Perm> = all_perms(n);
    perms.sort_by_key(|w| (w.length(), w.reduced_word()));
    let mut up_dot = HeckeElem::zero(n);
    for w in perms {
        let cand = y_mu_ext.mul(&HeckeElem::basis(w))?.mul(&y_lam)?;
        if !cand.is_zero() {
            up_dot = cand;
            break;
        }
    }
    if up_dot.is_zero() {
        return Err(HeckeError::DegenerateNormalization);
    }
    let down = up_dot.star();
    // down . up is a scalar multiple of y_lambda; that scalar normalizes up.
    let pair = down.mul(&up_dot)?;
    let (w, c) = y_lam
        .terms()
        .next()
        .map(|(w, c)| (w.clone(), c.clone()))
        .expect("nonzero idempotent");
    let m = &pair.coeff(&w) / &c;
    if m.is_zero() {
        return Err(HeckeError::DegenerateNormalization);
    }
    debug_assert_eq!(pair, y_lam.scale(&m));
    let up = up_dot.scale(&m.inv().unwrap());
    Ok(BranchMorphism {
        mu: mu.clone(),
        lambda: lambda.clone(),
        up,
        down,
        pairing_norm: m,
    })
}

/// `y_mu (x) 1` as an element of `H_{|mu|+1}`.
pub fn included_idempotent(mu: &YoungDiagram) -> Result<HeckeElem, HeckeError> {
    Ok(if mu.is_empty() {
        HeckeElem::one(1)
    } else {
        young_idempotent(mu)?.element.tensor_right(1)
    })
}

/// The branching identity: `sum over lambda > mu of up . down = y_mu (x) 1`.
pub fn branching_sum(mu: &YoungDiagram) -> Result<HeckeElem, HeckeError> {
    let n = mu.size() as usize + 1;
    let mut acc = HeckeElem::zero(n);
    for lam in mu.ups() {
        let b = branch(mu, &lam)?;
        acc = &acc + &b.up.mul(&b.down)?;
    }
    Ok(acc)
}

pub fn idem_for(lambda: &YoungDiagram) -> Result<YoungIdem, HeckeError> {
    young_idempotent(lambda)
}

fn all_perms(n: usize) -> Vec<crate::perm::Perm> {
    fn rec(rest: &mut Vec<u8>, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            rec(rest, prefix, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut images = Vec::new();
    rec(
        &mut (0..n as u8).collect(),
        &mut Vec::new(),
        &mut images,
    );
    images
        .into_iter()
        .map(crate::perm::Perm::from_images)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::murphy::murphy;
    use cq_dims::cell_eig;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec())
    }

    #[test]
    fn down_up_is_young_idempotent() {
        let b = branch(&yd(&[1]), &yd(&[2])).unwrap();
        let y2 = young_idempotent(&yd(&[2])).unwrap().element;
        assert_eq!(b.down.mul(&b.up).unwrap(), y2);
    }

    #[test]
    fn up_down_is_idempotent() {
        let b = branch(&yd(&[2]), &yd(&[2, 1])).unwrap();
        let p = b.up.mul(&b.down).unwrap();
        assert_eq!(p.mul(&p).unwrap(), p);
    }

    #[test]
    fn branching_completeness_small() {
        for mu in [yd(&[]), yd(&[1]), yd(&[2]), yd(&[1, 1]), yd(&[2, 1])] {
            let sum = branching_sum(&mu).unwrap();
            let expect = included_idempotent(&mu).unwrap();
            assert_eq!(sum, expect, "branching fails at mu={}", mu);
        }
    }

    #[test]
    fn murphy_eigenvalue_on_branches() {
        // down . eps_{n+1} = q^{2 cn(cell)} down
        for mu in [yd(&[]), yd(&[1]), yd(&[2]), yd(&[1, 1])] {
            let n = mu.size() as usize;
            for lam in mu.ups() {
                let b = branch(&mu, &lam).unwrap();
                let eps = murphy(n + 1, n + 1).unwrap();
                let lhs = b.down.mul(&eps).unwrap();
                let cell = mu.added_cell_to(&lam).unwrap();
                let rhs = b.down.scale(&cell_eig(cell));
                assert_eq!(lhs, rhs, "mu={} lam={}", mu, lam);
            }
        }
    }
}

//! The central generating function `Z(mu, u)`.
//!
//! `Z(mu,u) - delta/2` is the product of `(u + b_c)/(u - b_c)` over addable
//! cells and the reciprocal factors over removable cells, scaled by
//! `delta/2`. We keep it in factored form: a map from linear-factor root to
//! integer exponent. Residues and the cell-transfer recursion are then
//! factor-local, with exact cancellation.

use crate::qdim::cell_eig;
use crate::DimsError;
use cq_exact::{FieldElem, Params};
use cq_young::{Cell, YoungDiagram};

/// `Z(mu, u) = delta/2 + (delta/2) * prod (u - root)^{exp}` in factored form.
#[derive(Clone, Debug, PartialEq)]
pub struct ZFunction {
    pub mu: YoungDiagram,
    /// Sorted by a stable key for structural comparison.
    factors: Vec<(FieldElem, i32)>,
}

impl ZFunction {
    fn normalize(mut factors: Vec<(FieldElem, i32)>) -> Vec<(FieldElem, i32)> {
        let mut out: Vec<(FieldElem, i32)> = Vec::new();
        'next: for (root, e) in factors.drain(..) {
            if e == 0 {
                continue;
            }
            for (r, k) in out.iter_mut() {
                if *r == root {
                    *k += e;
                    continue 'next;
                }
            }
            out.push((root, e));
        }
        out.retain(|(_, e)| *e != 0);
        out.sort_by_key(|(r, _)| format!("{}", r));
        out
    }

    pub fn factors(&self) -> &[(FieldElem, i32)] {
        &self.factors
    }

    /// Evaluate at a concrete value of `u` (away from the poles).
    pub fn eval(&self, u: &FieldElem) -> FieldElem {
        let p = Params::generic();
        let half_delta = &p.delta / &FieldElem::from_int(2);
        let mut prod = FieldElem::one();
        for (root, e) in &self.factors {
            let lin = u - root;
            assert!(!lin.is_zero(), "evaluation at a pole");
            prod = &prod * &lin.pow(*e);
        }
        &half_delta + &(&half_delta * &prod)
    }

    /// Residue of `Z(mu,u)/u` at `u = b` for a simple pole `b != 0`.
    pub fn residue_at(&self, b: &FieldElem) -> Result<FieldElem, DimsError> {
        let e = self
            .factors
            .iter()
            .find(|(r, _)| r == b)
            .map(|(_, e)| *e)
            .unwrap_or(0);
        if e != -1 {
            return Err(DimsError::RepeatedPole);
        }
        let p = Params::generic();
        let half_delta = &p.delta / &FieldElem::from_int(2);
        let mut prod = FieldElem::one();
        for (root, e) in &self.factors {
            if root == b {
                continue;
            }
            prod = &prod * &(b - root).pow(*e);
        }
        // delta/2 * prod / b   (the constant delta/2 term has no pole)
        Ok(&(&half_delta * &prod) / b)
    }
}

/// Closed form from the addable/removable cells of `mu`.
pub fn z_closed(mu: &YoungDiagram) -> ZFunction {
    let mut factors = Vec::new();
    for c in mu.addable_cells() {
        let b = cell_eig(c);
        factors.push((-&b, 1)); // (u + b)
        factors.push((b.clone(), -1)); // / (u - b)
    }
    for c in mu.removable_cells() {
        let b = cell_eig(c);
        factors.push((b.clone(), 1)); // (u - b)
        factors.push((-&b, -1)); // / (u + b)
    }
    ZFunction {
        mu: mu.clone(),
        factors: ZFunction::normalize(factors),
    }
}

/// One step of the transfer recursion: from `Z(nu, u)` to `Z(nu + c, u)`
/// by the factor `(u-b)^2 (u+q^{-2}b)(u+q^2 b) / ((u+b)^2 (u-q^{-2}b)(u-q^2 b))`.
pub fn z_transfer(z_nu: &ZFunction, c: Cell) -> Result<ZFunction, DimsError> {
    if !z_nu.mu.addable_cells().contains(&c) {
        return Err(DimsError::InvalidCellAddition(c));
    }
    let b = cell_eig(c);
    let q2 = FieldElem::q_pow(2);
    let qm2 = FieldElem::q_pow(-2);
    let mut factors = z_nu.factors.clone();
    factors.push((b.clone(), 2));
    factors.push((-&(&qm2 * &b), 1));
    factors.push((-&(&q2 * &b), 1));
    factors.push((-&b, -2));
    factors.push((&qm2 * &b, -1));
    factors.push((&q2 * &b, -1));
    Ok(ZFunction {
        mu: z_nu.mu.add_cell(c),
        factors: ZFunction::normalize(factors),
    })
}

/// The ratio `<lambda>/<mu>` extracted as the residue of `Z(mu,u)/u` at the
/// Murphy eigenvalue of the added cell. Must agree with the hook formula.
pub fn dim_ratio_by_residue(
    mu: &YoungDiagram,
    lambda: &YoungDiagram,
) -> Result<FieldElem, DimsError> {
    let cell = mu
        .added_cell_to(lambda)
        .ok_or(DimsError::InvalidCellAddition((0, 0)))?;
    z_closed(mu).residue_at(&cell_eig(cell))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec())
    }

    fn fe(n: i64) -> FieldElem {
        FieldElem::from_int(n)
    }

    #[test]
    fn empty_diagram_closed_form() {
        // Z(0, u) = delta u/(u - 1)
        let z = z_closed(&YoungDiagram::empty());
        let p = Params::generic();
        for u in [fe(2), fe(3), fe(-5), FieldElem::q_pow(3)] {
            let expect = &(&p.delta * &u) / &(&u - &fe(1));
            assert_eq!(z.eval(&u), expect);
        }
    }

    #[test]
    fn one_box_closed_form() {
        // Z([1],u) = d/2 + d/2 (u+q^2)/(u-q^2) (u+q^-2)/(u-q^-2) (u-1)/(u+1)
        let z = z_closed(&yd(&[1]));
        let p = Params::generic();
        let half = &p.delta / &fe(2);
        let q2 = FieldElem::q_pow(2);
        let qm2 = FieldElem::q_pow(-2);
        for u in [fe(2), fe(7), FieldElem::q_pow(5)] {
            let expect = &half
                + &(&(&(&(&half * &(&(&u + &q2) / &(&u - &q2))) * &(&(&u + &qm2) / &(&u - &qm2)))
                    * &(&u - &fe(1)))
                    / &(&u + &fe(1)));
            assert_eq!(z.eval(&u), expect);
        }
    }

    #[test]
    fn limit_at_infinity_is_delta() {
        // all factors cancel in the u -> infinity limit: the factor product
        // has total degree zero and leading coefficient 1, so Z -> delta.
        for mu in [YoungDiagram::empty(), yd(&[1]), yd(&[3, 1]), yd(&[2, 2, 1])] {
            let z = z_closed(&mu);
            let total_degree: i32 = z.factors().iter().map(|(_, e)| *e).sum();
            assert_eq!(total_degree, 0, "at {}", mu);
        }
    }

    #[test]
    fn transfer_matches_closed_form() {
        // one step from the empty diagram
        let z0 = z_closed(&YoungDiagram::empty());
        let z1 = z_transfer(&z0, (1, 1)).unwrap();
        assert_eq!(z1, z_closed(&yd(&[1])));

        // two different orders to [2,1]
        let via_2 = z_transfer(&z_transfer(&z1, (1, 2)).unwrap(), (2, 1)).unwrap();
        let via_11 = z_transfer(&z_transfer(&z1, (2, 1)).unwrap(), (1, 2)).unwrap();
        assert_eq!(via_2.factors(), via_11.factors());
        assert_eq!(via_2, z_closed(&yd(&[2, 1])));

        // straight chain to [2]
        let z2 = z_transfer(&z1, (1, 2)).unwrap();
        assert_eq!(z2, z_closed(&yd(&[2])));
    }

    #[test]
    fn transfer_rejects_bad_cell() {
        let z0 = z_closed(&YoungDiagram::empty());
        assert!(matches!(
            z_transfer(&z0, (2, 2)),
            Err(DimsError::InvalidCellAddition(_))
        ));
    }

    #[test]
    fn residue_from_empty_is_delta() {
        let r = dim_ratio_by_residue(&YoungDiagram::empty(), &yd(&[1])).unwrap();
        assert_eq!(r, Params::generic().delta);
    }

    #[test]
    fn residues_match_hook_ratios_small() {
        for (mu, lam) in [
            (yd(&[1]), yd(&[2])),
            (yd(&[1]), yd(&[1, 1])),
            (yd(&[2, 1]), yd(&[2, 2])),
            (yd(&[3, 1]), yd(&[3, 2])),
        ] {
            let lhs = dim_ratio_by_residue(&mu, &lam).unwrap();
            let rhs = &qdim(&lam) / &qdim(&mu);
            assert_eq!(lhs, rhs, "mu={} lam={}", mu, lam);
        }
    }
}

//! Cross-checks between the two dimension routes (hook products vs residues
//! of the generating function), and the vanishing/Perron identities.

use cq_dims::{dim_ratio_by_residue, qdim, qdim_at};
use cq_exact::{FieldElem, Params};
use cq_young::{LatticeGraph, YoungDiagram};

#[test]
fn residue_equals_hook_ratio_up_to_five_cells() {
    for n in 0..=5u32 {
        for mu in YoungDiagram::partitions_of(n) {
            for lam in mu.ups() {
                let lhs = dim_ratio_by_residue(&mu, &lam).unwrap();
                let rhs = &qdim(&lam) / &qdim(&mu);
                assert_eq!(lhs, rhs, "mu={} lambda={}", mu, lam);
            }
        }
    }
}

#[test]
fn perron_identity_generic() {
    // sum over lattice neighbors of <nu> equals delta <mu>
    let p = Params::generic();
    for n in 0..=5u32 {
        for mu in YoungDiagram::partitions_of(n) {
            let mut sum = FieldElem::zero();
            for nu in mu.ups() {
                sum = &sum + &qdim(&nu);
            }
            for nu in mu.downs() {
                sum = &sum + &qdim(&nu);
            }
            assert_eq!(sum, &p.delta * &qdim(&mu), "mu={}", mu);
        }
    }
}

#[test]
fn boundary_dimensions_vanish_exactly() {
    // every boundary diagram of Y(N) with at most 8 cells has dimension 0
    for n_level in 2..=4u32 {
        let g = LatticeGraph::truncated(n_level, 8);
        let mut checked = 0;
        for kappa in g.boundary() {
            if kappa.size() > 8 {
                continue;
            }
            let v = qdim_at(kappa, n_level).unwrap();
            assert!(v.is_zero(), "boundary {} at level {}", kappa, n_level);
            checked += 1;
        }
        assert!(checked > 0);
    }
}

#[test]
fn perron_identity_specialized() {
    // At level N the Perron identity survives on Y(N) with boundary terms
    // vanishing: sum over neighbors inside Y(N) u B(N).
    for n_level in 2..=3u32 {
        let delta_n = cq_exact::cyclo::specialize(&Params::generic().delta, n_level).unwrap();
        for size in 0..=4u32 {
            for mu in YoungDiagram::partitions_of(size) {
                if mu.corner_hook() > n_level {
                    continue;
                }
                let mut sum = cq_exact::CycloElem::zero(4 * n_level as u64 + 4);
                for nu in mu.ups().into_iter().chain(mu.downs()) {
                    if nu.corner_hook() <= n_level + 1 {
                        sum = &sum + &qdim_at(&nu, n_level).unwrap();
                    }
                }
                let rhs = &delta_n * &qdim_at(&mu, n_level).unwrap();
                assert_eq!(sum, rhs, "mu={} N={}", mu, n_level);
            }
        }
    }
}

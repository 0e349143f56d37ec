//! Gram matrices of trace pairings `G[k][l] = tr(w_k* w_l)` over the word
//! algebra, generic and at roots of unity, with basis expansion by solving
//! against them. Spanning of the canonical words is certified by rank.

use crate::words::{closure, word_trace, AlgElem, Word};
use crate::zeta::zeta;
use cq_exact::cyclo::specialize;
use cq_exact::linalg::Matrix;
use cq_exact::{CycloElem, FieldElem, Result};
use rayon::prelude::*;

/// Trace of the product `w_k* w_l` (both monomials, so the closure is a
/// single diagram).
fn pair_trace(wk: &Word, wl: &Word, m: u8) -> FieldElem {
    let mut w: Word = wk.clone();
    w.reverse();
    w.extend_from_slice(wl);
    zeta(&closure(&w, m))
}

/// Generic Gram matrix of the given words.
pub fn gram(words: &[Word], m: u8) -> Matrix<FieldElem> {
    let n = words.len();
    // exploit symmetry under the adjoint: G[l][k] = conj(G[k][l])
    let upper: Vec<((usize, usize), FieldElem)> = (0..n)
        .flat_map(|k| ((k..n).map(move |l| (k, l))))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(k, l)| ((k, l), pair_trace(&words[k], &words[l], m)))
        .collect();
    let mut entries = vec![vec![FieldElem::zero(); n]; n];
    for ((k, l), v) in upper {
        entries[l][k] = v.conj();
        entries[k][l] = v;
    }
    Matrix::from_rows(entries)
}

/// Gram matrix specialized at level `N`.
pub fn gram_at(words: &[Word], m: u8, n_level: u32) -> Result<Matrix<CycloElem>> {
    let g = gram(words, m);
    let n = words.len();
    let mut rows = Vec::with_capacity(n);
    for k in 0..n {
        let mut row = Vec::with_capacity(n);
        for l in 0..n {
            row.push(specialize(g.at(k, l), n_level)?);
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows))
}

/// Coordinates of `x` over the words `basis` with respect to the trace
/// pairing: solves `G c = v` with `v_k = tr(w_k* x)`. `None` when `x` is
/// not in the span (generic basis words always span).
pub fn expand_over_basis(x: &AlgElem, basis: &[Word], m: u8) -> Option<Vec<FieldElem>> {
    let g = gram(basis, m);
    let v: Vec<FieldElem> = basis
        .par_iter()
        .map(|w| {
            let mut e = AlgElem::word(m, {
                let mut r = w.clone();
                r.reverse();
                r
            });
            e = e.mul(x);
            word_trace(&e)
        })
        .collect();
    let c = g.solve(&v)?;
    // confirm membership: tr(p* (x - sum c_k w_k)) = 0 for all probes
    let mut recombined = AlgElem::zero(m);
    for (k, w) in basis.iter().enumerate() {
        recombined = recombined.add(&AlgElem::word(m, w.clone()).scale(&c[k]));
    }
    let diff = x.sub(&recombined);
    let ok = basis.par_iter().all(|w| {
        let probe = AlgElem::word(m, w.clone());
        word_trace(&diff.mul(&probe.star())).is_zero()
    });
    if ok {
        Some(c)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{canonical_words, Letter};
    use cq_exact::Params;
    use cq_young::LatticeGraph;

    #[test]
    fn two_strand_gram_matrix() {
        let p = Params::generic();
        let d = &p.delta;
        let d2 = d * d;
        let words: Vec<Word> = vec![vec![], vec![Letter::H(1)], vec![Letter::R(1)]];
        let g = gram(&words, 2);
        let expect = Matrix::from_rows(vec![
            vec![d2.clone(), d.clone(), FieldElem::zero()],
            vec![d.clone(), d2.clone(), FieldElem::zero()],
            vec![
                FieldElem::zero(),
                FieldElem::zero(),
                &d2 - &FieldElem::one(),
            ],
        ]);
        assert_eq!(g, expect);
        assert_eq!(g.rank(), 3);
    }

    #[test]
    fn generic_ranks_are_odd_double_factorials() {
        for m in 1..=3u8 {
            let words = canonical_words(m);
            let g = gram(&words, m);
            let expect = cq_young::double_factorial_odd(m as u32) as usize;
            assert_eq!(g.rank(), expect, "generic rank at m={}", m);
        }
    }

    #[test]
    fn level_two_rank_drops_to_loop_count() {
        let words = canonical_words(3);
        let g2 = gram_at(&words, 3, 2).unwrap();
        let loops = LatticeGraph::truncated(2, 6).count_loops(3) as usize;
        assert_eq!(loops, 9);
        assert_eq!(g2.rank(), 9);
        // kernel dimension 15 - 9 = 6
        assert_eq!(g2.nullspace().len(), 6);
    }

    #[test]
    fn specialized_gram_is_hermitian() {
        let words = canonical_words(2);
        let g = gram_at(&words, 2, 2).unwrap();
        assert_eq!(g, g.dagger());
        let words3 = canonical_words(3);
        let g3 = gram_at(&words3, 3, 3).unwrap();
        assert_eq!(g3, g3.dagger());
    }
}

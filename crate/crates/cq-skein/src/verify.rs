//! Relation certification: equality in the algebra is witnessed by vanishing
//! trace pairings against probe words. With a spanning probe set this is a
//! proof of equality; with sampled probes it is a strong consistency check.

use crate::words::{alpha, canonical_words, word_trace, AlgElem, Letter, Word};
use cq_exact::{FieldElem, Params};
use rayon::prelude::*;

/// True iff `tr((lhs - rhs) p*) = 0` for every probe `p`.
pub fn verify_relation(lhs: &AlgElem, rhs: &AlgElem, probes: &[Word]) -> bool {
    let diff = lhs.sub(rhs);
    if diff.num_terms() == 0 {
        return true;
    }
    probes.par_iter().all(|p| {
        let probe = AlgElem::word(diff.m(), p.clone());
        word_trace(&diff.mul(&probe.star())).is_zero()
    })
}

pub struct Relation {
    pub name: &'static str,
    pub m: u8,
    pub lhs: AlgElem,
    pub rhs: AlgElem,
}

fn h(m: u8, i: u8) -> AlgElem {
    AlgElem::word(m, vec![Letter::H(i)])
}

fn r(m: u8, i: u8) -> AlgElem {
    AlgElem::word(m, vec![Letter::R(i)])
}

fn scal(m: u8, c: FieldElem) -> AlgElem {
    AlgElem::one(m).scale(&c)
}

/// The full presentation in terms of the braid letters `alpha_i` and the
/// turnbacks `h_i`, instantiated at the smallest strand count where each
/// index pattern fits (far commutations at m = 4).
pub fn presentation_relations() -> Vec<Relation> {
    let p = Params::generic();
    let qq = &FieldElem::q() - &FieldElem::q_pow(-1);
    let i_unit = FieldElem::i();
    let a = |m: u8, i: u8| alpha(m, i, false).unwrap();
    let ai = |m: u8, i: u8| alpha(m, i, true).unwrap();
    let mut rels = Vec::new();

    // quadratic relation for the braid letter
    rels.push(Relation {
        name: "alpha - alpha^-1 = (q-q^-1)",
        m: 2,
        lhs: a(2, 1).sub(&ai(2, 1)),
        rhs: scal(2, qq.clone()),
    });
    // generator quadratic: r^2 = 1 - h/delta
    rels.push(Relation {
        name: "r^2 = 1 - h/delta",
        m: 2,
        lhs: r(2, 1).mul(&r(2, 1)),
        rhs: AlgElem::one(2).sub(&h(2, 1).scale(&p.delta_inv())),
    });
    // Yang-Baxter / braid relation
    rels.push(Relation {
        name: "alpha1 alpha2 alpha1 = alpha2 alpha1 alpha2",
        m: 3,
        lhs: a(3, 1).mul(&a(3, 2)).mul(&a(3, 1)),
        rhs: a(3, 2).mul(&a(3, 1)).mul(&a(3, 2)),
    });
    // turnback quadratic and Jones relations
    rels.push(Relation {
        name: "h^2 = delta h",
        m: 2,
        lhs: h(2, 1).mul(&h(2, 1)),
        rhs: h(2, 1).scale(&p.delta),
    });
    rels.push(Relation {
        name: "h1 h2 h1 = h1",
        m: 3,
        lhs: h(3, 1).mul(&h(3, 2)).mul(&h(3, 1)),
        rhs: h(3, 1),
    });
    rels.push(Relation {
        name: "h2 h1 h2 = h2",
        m: 3,
        lhs: h(3, 2).mul(&h(3, 1)).mul(&h(3, 2)),
        rhs: h(3, 2),
    });
    // absorption
    rels.push(Relation {
        name: "alpha1 h1 = q h1",
        m: 2,
        lhs: a(2, 1).mul(&h(2, 1)),
        rhs: h(2, 1).scale(&FieldElem::q()),
    });
    rels.push(Relation {
        name: "h1 alpha1 = q h1",
        m: 2,
        lhs: h(2, 1).mul(&a(2, 1)),
        rhs: h(2, 1).scale(&FieldElem::q()),
    });
    // mixed two-letter relations
    rels.push(Relation {
        name: "alpha1 alpha2 h1 = h2 alpha1 alpha2",
        m: 3,
        lhs: a(3, 1).mul(&a(3, 2)).mul(&h(3, 1)),
        rhs: h(3, 2).mul(&a(3, 1)).mul(&a(3, 2)),
    });
    rels.push(Relation {
        name: "alpha1 alpha2 h1 = i h2 h1",
        m: 3,
        lhs: a(3, 1).mul(&a(3, 2)).mul(&h(3, 1)),
        rhs: h(3, 2).mul(&h(3, 1)).scale(&i_unit),
    });
    rels.push(Relation {
        name: "h1 alpha2 alpha1 = alpha2 alpha1 h2",
        m: 3,
        lhs: h(3, 1).mul(&a(3, 2)).mul(&a(3, 1)),
        rhs: a(3, 2).mul(&a(3, 1)).mul(&h(3, 2)),
    });
    rels.push(Relation {
        name: "h1 alpha2 alpha1 = -i h1 h2",
        m: 3,
        lhs: h(3, 1).mul(&a(3, 2)).mul(&a(3, 1)),
        rhs: h(3, 1).mul(&h(3, 2)).scale(&(-&i_unit)),
    });
    rels.push(Relation {
        name: "alpha1 h2 alpha2^-1 = alpha2^-1 h1 alpha2",
        m: 3,
        lhs: a(3, 1).mul(&h(3, 2)).mul(&ai(3, 2)),
        rhs: ai(3, 2).mul(&h(3, 1)).mul(&a(3, 2)),
    });
    rels.push(Relation {
        name: "alpha2 h1 alpha1^-1 = alpha1^-1 h2 alpha1",
        m: 3,
        lhs: a(3, 2).mul(&h(3, 1)).mul(&ai(3, 1)),
        rhs: ai(3, 1).mul(&h(3, 2)).mul(&a(3, 1)),
    });
    rels.push(Relation {
        name: "h1 h2 alpha1 = h1 alpha2^-1",
        m: 3,
        lhs: h(3, 1).mul(&h(3, 2)).mul(&a(3, 1)),
        rhs: h(3, 1).mul(&ai(3, 2)),
    });
    rels.push(Relation {
        name: "h2 h1 alpha2 = h2 alpha1^-1",
        m: 3,
        lhs: h(3, 2).mul(&h(3, 1)).mul(&a(3, 2)),
        rhs: h(3, 2).mul(&ai(3, 1)),
    });
    rels.push(Relation {
        name: "alpha1 h2 h1 = alpha2 h1",
        m: 3,
        lhs: a(3, 1).mul(&h(3, 2)).mul(&h(3, 1)),
        rhs: a(3, 2).mul(&h(3, 1)),
    });
    rels.push(Relation {
        name: "alpha2 h1 h2 = alpha1 h2",
        m: 3,
        lhs: a(3, 2).mul(&h(3, 1)).mul(&h(3, 2)),
        rhs: a(3, 1).mul(&h(3, 2)),
    });
    rels.push(Relation {
        name: "h1 alpha2 h1 = i q^-1 h1",
        m: 3,
        lhs: h(3, 1).mul(&a(3, 2)).mul(&h(3, 1)),
        rhs: h(3, 1).scale(&(&i_unit * &FieldElem::q_pow(-1))),
    });
    rels.push(Relation {
        name: "h2 alpha1 h2 = i q^-1 h2",
        m: 3,
        lhs: h(3, 2).mul(&a(3, 1)).mul(&h(3, 2)),
        rhs: h(3, 2).scale(&(&i_unit * &FieldElem::q_pow(-1))),
    });
    rels
}

/// Far-commutation relations needing four strands.
pub fn far_commutation_relations() -> Vec<Relation> {
    let a = |i: u8| alpha(4, i, false).unwrap();
    vec![
        Relation {
            name: "alpha1 alpha3 = alpha3 alpha1",
            m: 4,
            lhs: a(1).mul(&a(3)),
            rhs: a(3).mul(&a(1)),
        },
        Relation {
            name: "h1 h3 = h3 h1",
            m: 4,
            lhs: h(4, 1).mul(&h(4, 3)),
            rhs: h(4, 3).mul(&h(4, 1)),
        },
        Relation {
            name: "alpha1 h3 = h3 alpha1",
            m: 4,
            lhs: a(1).mul(&h(4, 3)),
            rhs: h(4, 3).mul(&a(1)),
        },
    ]
}

/// Verify a relation against the full canonical probe set of its box size.
pub fn verify_with_full_probes(rel: &Relation) -> bool {
    verify_relation(&rel.lhs, &rel.rhs, &canonical_words(rel.m))
}

/// Verify against a deterministic sample of probes (for box size 4 the full
/// set of 105 canonical words would be wasteful).
pub fn verify_with_sampled_probes(rel: &Relation, count: usize, seed: u64) -> bool {
    let all = canonical_words(rel.m);
    let sampled = sample_words(&all, count, seed);
    verify_relation(&rel.lhs, &rel.rhs, &sampled)
}

/// Deterministic sample without replacement, by a small multiplicative
/// congruential shuffle.
pub fn sample_words(all: &[Word], count: usize, seed: u64) -> Vec<Word> {
    let n = all.len();
    if count >= n {
        return all.to_vec();
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    for i in (1..n).rev() {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let j = (state >> 33) as usize % (i + 1);
        idx.swap(i, j);
    }
    idx.truncate(count);
    idx.into_iter().map(|i| all[i].clone()).collect()
}

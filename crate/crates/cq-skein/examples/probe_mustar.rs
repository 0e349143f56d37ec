use cq_exact::{FieldElem, Params};
use cq_skein::zeta::{CLASS_SIGN, MU_STAR};
use cq_skein::*;
use std::sync::atomic::Ordering;

fn clear_cache_hack() {
    // the zeta cache is keyed only on diagrams; changing conventions
    // invalidates it, so this probe must run each variant in its own process
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mu: u8 = args[1].parse().unwrap();
    let sg: i8 = args[2].parse().unwrap();
    MU_STAR.store(mu, Ordering::Relaxed);
    CLASS_SIGN.store(sg, Ordering::Relaxed);
    clear_cache_hack();

    let p = Params::generic();
    let d2m1 = &(&p.delta * &p.delta) - &FieldElem::one();
    let r1 = AlgElem::word(2, vec![Letter::R(1)]);
    let ok_tr_r = word_trace(&r1).is_zero();
    let ok_tr_r2 = word_trace(&r1.mul(&r1)) == d2m1;

    // orientation independence on the square closure
    let d = closure(&vec![Letter::R(1), Letter::R(1)], 2);
    let ncirc = d.immersed_circles().len();
    let base = zeta(&d);
    let mut ok_orient = true;
    for f in 0..(1u32 << ncirc) {
        for g in 0..4u8 {
            let flips: Vec<bool> = (0..ncirc).map(|i| f >> i & 1 == 1).collect();
            let gamma: Vec<bool> = (0..2).map(|i| g >> i & 1 == 1).collect();
            if zeta_with_choices(&d, &flips, &gamma) != base {
                ok_orient = false;
            }
        }
    }

    // the mixed relation families
    let a = |i: u8| alpha(3, i, false).unwrap();
    let h = |i: u8| AlgElem::word(3, vec![Letter::H(i)]);
    let probes = canonical_words(3);
    let i_u = FieldElem::i();
    let rel_a = verify_relation(
        &a(1).mul(&a(2)).mul(&h(1)),
        &h(2).mul(&h(1)).scale(&i_u),
        &probes,
    );
    let rel_b = verify_relation(
        &h(1).mul(&a(2)).mul(&a(1)),
        &h(1).mul(&h(2)).scale(&(-&i_u)),
        &probes,
    );
    let rel_c = verify_relation(&a(1).mul(&h(2)).mul(&h(1)), &a(2).mul(&h(1)), &probes);
    println!(
        "mu={} sign={}: tr_r={} tr_r2={} orient={} relA={} relB={} relC={}",
        mu, sg, ok_tr_r, ok_tr_r2, ok_orient, rel_a, rel_b, rel_c
    );
}

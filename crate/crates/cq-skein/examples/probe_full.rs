use cq_exact::{FieldElem, Params};
use cq_skein::zeta::{CLASS_SIGN, MU_STAR, OVER_RULE};
use cq_skein::*;
use std::sync::atomic::Ordering;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    MU_STAR.store(args[1].parse().unwrap(), Ordering::Relaxed);
    CLASS_SIGN.store(args[2].parse().unwrap(), Ordering::Relaxed);
    OVER_RULE.store(args[3].parse().unwrap(), Ordering::Relaxed);

    let p = Params::generic();
    let iu = FieldElem::i();
    let d2m1 = &(&p.delta * &p.delta) - &FieldElem::one();
    let r1 = AlgElem::word(2, vec![Letter::R(1)]);
    if !word_trace(&r1).is_zero() || word_trace(&r1.mul(&r1)) != d2m1 {
        println!("mu={} sg={} ov={}: trace base FAIL", args[1], args[2], args[3]);
        return;
    }
    // orientation independence spot check
    let d = closure(&vec![Letter::R(1), Letter::R(1)], 2);
    let ncirc = d.immersed_circles().len();
    let base = zeta(&d);
    for f in 0..(1u32 << ncirc) {
        for g in 0..4u8 {
            let flips: Vec<bool> = (0..ncirc).map(|i| f >> i & 1 == 1).collect();
            let gamma: Vec<bool> = (0..2).map(|i| g >> i & 1 == 1).collect();
            if zeta_with_choices(&d, &flips, &gamma) != base {
                println!("mu={} sg={} ov={}: orientation FAIL", args[1], args[2], args[3]);
                return;
            }
        }
    }
    let a = |i: u8| alpha(3, i, false).unwrap();
    let ai = |i: u8| alpha(3, i, true).unwrap();
    let h = |i: u8| AlgElem::word(3, vec![Letter::H(i)]);
    let probes = canonical_words(3);
    let checks: Vec<(&str, AlgElem, AlgElem)> = vec![
        ("9a", a(1).mul(&a(2)).mul(&h(1)), h(2).mul(&a(1)).mul(&a(2))),
        ("9b", a(1).mul(&a(2)).mul(&h(1)), h(2).mul(&h(1)).scale(&iu)),
        ("10a", h(1).mul(&a(2)).mul(&a(1)), a(2).mul(&a(1)).mul(&h(2))),
        ("10b", h(1).mul(&a(2)).mul(&a(1)), h(1).mul(&h(2)).scale(&(-&iu))),
        ("13", a(1).mul(&h(2)).mul(&h(1)), a(2).mul(&h(1))),
        ("12", h(1).mul(&h(2)).mul(&a(1)), h(1).mul(&ai(2))),
        ("14", h(1).mul(&a(2)).mul(&h(1)), h(1).scale(&(&iu * &FieldElem::q_pow(-1)))),
        ("7", a(2).mul(&h(2)), h(2).scale(&FieldElem::q())),
    ];
    let results: Vec<String> = checks
        .iter()
        .map(|(n, l, r)| format!("{}={}", n, verify_relation(l, r, &probes)))
        .collect();
    println!(
        "mu={} sg={} ov={}: {}",
        args[1], args[2], args[3], results.join(" ")
    );
}

use cq_skein::zeta::{CLASS_SIGN, MU_STAR, OVER_RULE};
use cq_skein::*;
use std::sync::atomic::Ordering;

fn show(name: &str, x: &AlgElem, basis: &[Word]) {
    let c = expand_over_basis(x, basis, 3).expect("span");
    let parts: Vec<String> = basis
        .iter()
        .zip(&c)
        .filter(|(_, ci)| !ci.is_zero())
        .map(|(w, ci)| format!("({}) {}", ci, cq_skein::words::word_string(w)))
        .collect();
    println!("{} = {}", name, parts.join(" + "));
}

fn main() {
    MU_STAR.store(0, Ordering::Relaxed);
    CLASS_SIGN.store(-1, Ordering::Relaxed);
    OVER_RULE.store(0, Ordering::Relaxed);
    let basis = canonical_words(3);
    let h = |i: u8| AlgElem::word(3, vec![Letter::H(i)]);
    let a = |i: u8| alpha(3, i, false).unwrap();
    show("h1 a2 a1", &h(1).mul(&a(2)).mul(&a(1)), &basis);
    show("a1 h2 h1", &a(1).mul(&h(2)).mul(&h(1)), &basis);
    show("h1 h2 a1", &h(1).mul(&h(2)).mul(&a(1)), &basis);
    show("h2 h1 a2", &h(2).mul(&h(1)).mul(&a(2)), &basis);
    show("a2 h1 h2", &a(2).mul(&h(1)).mul(&h(2)), &basis);
    // bare slides
    let r = |i: u8| AlgElem::word(3, vec![Letter::R(i)]);
    show("r1 h2 h1", &r(1).mul(&h(2)).mul(&h(1)), &basis);
    show("h1 h2 r1", &h(1).mul(&h(2)).mul(&r(1)), &basis);
    show("r2 h1", &r(2).mul(&h(1)), &basis);
    show("h1 r2", &h(1).mul(&r(2)), &basis);
}

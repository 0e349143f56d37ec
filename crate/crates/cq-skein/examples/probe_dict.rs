use cq_exact::FieldElem;
use cq_skein::*;

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
    let basis = canonical_words(3);
    let h = |i: u8| AlgElem::word(3, vec![Letter::H(i)]);
    let a = |i: u8| alpha(3, i, false).unwrap();
    let b = |i: u8| beta(3, i, false).unwrap();
    show("h1 a2 h1", &h(1).mul(&a(2)).mul(&h(1)), &basis);
    show("h1 b2 h1", &h(1).mul(&b(2)).mul(&h(1)), &basis);
    show("b1 b2 h1", &b(1).mul(&b(2)).mul(&h(1)), &basis);
    show("h1 b2 b1", &h(1).mul(&b(2)).mul(&h(1).mul(&h(1)).scale(&FieldElem::zero()).add(&b(1))), &basis);
    show("b1 h2 h1", &b(1).mul(&h(2)).mul(&h(1)), &basis);
    show("a2 h1( for cmp)", &a(2).mul(&h(1)), &basis);
    show("b2 h1( for cmp)", &b(2).mul(&h(1)), &basis);
    // the Yang-Baxter element over the basis
    let r = |i: u8| AlgElem::word(3, vec![Letter::R(i)]);
    show("r1 r2 r1", &r(1).mul(&r(2)).mul(&r(1)), &basis);
    show("r2 r1 r2", &r(2).mul(&r(1)).mul(&r(2)), &basis);
}

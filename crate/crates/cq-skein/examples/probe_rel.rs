use cq_skein::*;
use cq_exact::FieldElem;

fn main() {
    let a = |i: u8| alpha(3, i, false).unwrap();
    let h = |i: u8| AlgElem::word(3, vec![Letter::H(i)]);
    let probes = canonical_words(3);
    let lhs = a(1).mul(&a(2)).mul(&h(1));
    let candidates: Vec<(&str, AlgElem)> = vec![
        ("h2 a1 a2", h(2).mul(&a(1)).mul(&a(2))),
        ("a2 a1 h2", a(2).mul(&a(1)).mul(&h(2))),
        ("i h2 h1", h(2).mul(&h(1)).scale(&FieldElem::i())),
        ("-i h2 h1", h(2).mul(&h(1)).scale(&(-&FieldElem::i()))),
        ("i h1 h2", h(1).mul(&h(2)).scale(&FieldElem::i())),
        ("-i h1 h2", h(1).mul(&h(2)).scale(&(-&FieldElem::i()))),
    ];
    for (name, rhs) in &candidates {
        println!("a1 a2 h1 == {} : {}", name, verify_relation(&lhs, rhs, &probes));
    }
    let lhs2 = h(1).mul(&a(2)).mul(&a(1));
    for (name, rhs) in &[
        ("a2 a1 h2", a(2).mul(&a(1)).mul(&h(2))),
        ("i h1 h2", h(1).mul(&h(2)).scale(&FieldElem::i())),
        ("-i h1 h2", h(1).mul(&h(2)).scale(&(-&FieldElem::i()))),
    ] {
        println!("h1 a2 a1 == {} : {}", name, verify_relation(&lhs2, rhs, &probes));
    }
    // index-flipped variants
    let lhs3 = a(2).mul(&a(1)).mul(&h(2));
    for (name, rhs) in &[
        ("i h1 h2", h(1).mul(&h(2)).scale(&FieldElem::i())),
        ("-i h1 h2", h(1).mul(&h(2)).scale(&(-&FieldElem::i()))),
    ] {
        println!("a2 a1 h2 == {} : {}", name, verify_relation(&lhs3, rhs, &probes));
    }
}

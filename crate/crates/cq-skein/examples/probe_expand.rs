use cq_skein::*;

fn main() {
    let a = |i: u8| alpha(3, i, false).unwrap();
    let h = |i: u8| AlgElem::word(3, vec![Letter::H(i)]);
    let basis = canonical_words(3);
    for (name, x) in [
        ("a1 a2 h1", a(1).mul(&a(2)).mul(&h(1))),
        ("h1 a2 a1", h(1).mul(&a(2)).mul(&a(1))),
        ("a1 h2 h1", a(1).mul(&h(2)).mul(&h(1))),
        ("h1 h2 a1", h(1).mul(&h(2)).mul(&a(1))),
    ] {
        let c = expand_over_basis(&x, &basis, 3).expect("span");
        let parts: Vec<String> = basis
            .iter()
            .zip(&c)
            .filter(|(_, ci)| !ci.is_zero())
            .map(|(w, ci)| format!("({}) {}", ci, cq_skein::words::word_string(w)))
            .collect();
        println!("{} = {}", name, parts.join(" + "));
    }
}

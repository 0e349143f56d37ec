use cq_exact::{qint, FieldElem, Params};
use cq_skein::*;

/// f^(2) = 1 - (q - alpha_1)/[2] as a word element on m strands.
fn f2(m: u8) -> AlgElem {
    let inv2 = qint(2).inv().unwrap();
    let q_id = AlgElem::one(m).scale(&FieldElem::q());
    let diff = q_id.sub(&alpha(m, 1, false).unwrap());
    AlgElem::one(m).sub(&diff.scale(&inv2))
}

/// g^(2) = 1 - (q^-1 + alpha_1)/[2].
fn g2(m: u8) -> AlgElem {
    let inv2 = qint(2).inv().unwrap();
    let s = AlgElem::one(m)
        .scale(&FieldElem::q_pow(-1))
        .add(&alpha(m, 1, false).unwrap());
    AlgElem::one(m).sub(&s.scale(&inv2))
}

fn main() {
    let p = Params::generic();
    // e = h/delta; jones projection trace = delta; y-idempotent traces:
    let e = AlgElem::word(2, vec![Letter::H(1)]).scale(&p.delta_inv());
    println!("tr(e) = {}", word_trace(&e));
    let tf = word_trace(&f2(2));
    let tg = word_trace(&g2(2));
    println!("tr(f2) = {}", tf);
    println!("tr(g2) = {}", tg);
    // hook formula candidates for [2] and [1,1]:
    let i = FieldElem::i();
    let hook = |h: i64| {
        &(&i * &(&FieldElem::q_pow(h) + &FieldElem::q_pow(-h)))
            / &(&FieldElem::q_pow(h) - &FieldElem::q_pow(-h))
    };
    // qdim([2]) = hook(2)*hook(1), qdim([1,1]) same (hooks {2,1})
    let qd = &hook(2) * &hook(1);
    println!("qdim_hooks(2,1) = {}", qd);
    println!("tr f2 == qdim: {}", tf == qd);
    println!("tr g2 == qdim: {}", tg == qd);
    let qd_conj = qd.conj();
    println!("tr f2 == conj qdim: {}", tf == qd_conj);
    println!("tr g2 == conj qdim: {}", tg == qd_conj);
    // sanity: tr(f2)+tr(g2)+tr(e) = delta^2
    let total = &(&tf + &tg) + &p.delta;
    println!("sum == delta^2: {}", total == &p.delta * &p.delta);
}

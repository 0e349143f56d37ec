//! Root-of-unity specialization against float oracles, and the field/
//! homomorphism laws on randomized elements.

use cq_exact::ball::{eval_cyclo, real_cyclo_f64};
use cq_exact::cyclo::specialize;
use cq_exact::{qint, CycloElem, ExactError, FieldElem, Params};
use proptest::prelude::*;

#[test]
fn delta_at_level_two_is_sqrt3() {
    // q = exp(i pi/6): delta = cot(pi/6) = sqrt(3).
    let p = Params::generic();
    let (re, im) = p.delta.eval_unit_circle_f64(std::f64::consts::PI / 6.0);
    assert!((re - 3f64.sqrt()).abs() < 1e-12);
    assert!(im.abs() < 1e-12);

    let z = specialize(&p.delta, 2).unwrap();
    assert!(z.is_real());
    assert!((real_cyclo_f64(&z) - 3f64.sqrt()).abs() < 1e-12);
    // And exactly: delta^2 = 3 at this root of unity.
    assert_eq!(&z * &z, CycloElem::from_int(12, 3));
}

#[test]
fn quantum_integer_vanishes_at_its_level() {
    for n in 1..=4u32 {
        let v = specialize(&qint(2 * n + 2), n).unwrap();
        assert!(v.is_zero(), "[2N+2] must vanish at level N={}", n);
        // ...and the reciprocal has a pole there.
        let inv = qint(2 * n + 2).inv().unwrap();
        assert_eq!(
            specialize(&inv, n),
            Err(ExactError::PoleAtRootOfUnity {
                order: 4 * n as u64 + 4
            })
        );
    }
}

#[test]
fn i_maps_to_quarter_turn() {
    let z = specialize(&FieldElem::i(), 3).unwrap();
    let (re, im) = eval_cyclo(&z, 64).mid_f64();
    assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    assert_eq!(&z * &z, -CycloElem::one(16));
}

fn arb_field_elem() -> impl Strategy<Value = FieldElem> {
    // Small Laurent polynomials with integer Gaussian coefficients.
    let term = (-3i64..=3, -4i64..=4, -4i64..=4);
    prop::collection::vec(term, 1..4).prop_map(|ts| {
        let mut acc = FieldElem::zero();
        for (e, re, im) in ts {
            let c = &FieldElem::from_int(re) + &(&FieldElem::i() * &FieldElem::from_int(im));
            acc = &acc + &(&c * &FieldElem::q_pow(e));
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in arb_field_elem(), b in arb_field_elem(), c in arb_field_elem()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), FieldElem::one());
        }
    }

    #[test]
    fn conj_is_field_automorphism(a in arb_field_elem(), b in arb_field_elem()) {
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn specialize_is_ring_homomorphism(a in arb_field_elem(), b in arb_field_elem()) {
        let n = 2u32;
        let sa = specialize(&a, n).unwrap();
        let sb = specialize(&b, n).unwrap();
        prop_assert_eq!(specialize(&(&a + &b), n).unwrap(), &sa + &sb);
        prop_assert_eq!(specialize(&(&a * &b), n).unwrap(), &sa * &sb);
    }
}

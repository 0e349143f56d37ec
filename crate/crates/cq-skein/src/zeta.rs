//! The partition function on closed R-labeled diagrams.
//!
//! A diagram with `n` labels is evaluated by choosing an orientation of its
//! immersed circles and a braid sign per crossing, replacing each crossing
//! by the corresponding braid, and solving for the all-R term against the
//! HOMFLY value of the resulting oriented link:
//!
//!   HOMFLY(T_braided) = (all-R coefficient) * zeta(T)
//!                     + sum over proper resolutions coeff * zeta(smaller).
//!
//! The braid resolves as `(+/-)a * through + b * turnback + d * R`, rotated
//! into the crossing's orientation class; each kept label's rotation is
//! normalized away as a power of `-i`. Any orientation/braid choice yields
//! the same value; the engine uses one choice and exposes the rest for
//! cross-checking.

use crate::diagram::ClosedDiagram;
use crate::link::{homfly, OrientedLink};
use cq_exact::{FieldElem, Params};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Reference rotation: the slot of the label's dollar sign in the braid
/// replacement for a class-0 (both strands inward at the bottom) crossing.
pub static MU_STAR: std::sync::atomic::AtomicU8 = std::sync::atomic::AtomicU8::new(0);
/// +1 or -1: sense in which the mark follows the orientation class.
pub static CLASS_SIGN: std::sync::atomic::AtomicI8 = std::sync::atomic::AtomicI8::new(1);
/// Which in-slot carries the over strand for a positive braid: 0 -> slot k,
/// 1 -> slot k+1.
pub static OVER_RULE: std::sync::atomic::AtomicU8 = std::sync::atomic::AtomicU8::new(0);

fn kept_mark(class: u8) -> u32 {
    let mu = MU_STAR.load(std::sync::atomic::Ordering::Relaxed) as i32;
    let sg = CLASS_SIGN.load(std::sync::atomic::Ordering::Relaxed) as i32;
    (mu + sg * class as i32).rem_euclid(4) as u32
}

fn minus_i_pow(k: u32) -> FieldElem {
    let mi = -&FieldElem::i();
    mi.pow((k % 4) as i32)
}

/// Orientation data per crossing derived from a circle orientation choice.
#[derive(Clone, Debug)]
struct Orientation {
    a_dir: Vec<bool>,
    b_dir: Vec<bool>,
    /// `class[c] = k` when the in-slots are `{k, k+1}`.
    class: Vec<u8>,
}

fn orient(d: &ClosedDiagram, flips: &[bool]) -> Orientation {
    let n = d.n_crossings();
    let mut a_dir = vec![true; n];
    let mut b_dir = vec![true; n];
    let circles = d.immersed_circles();
    assert!(flips.len() >= circles.len());
    for (ci, circle) in circles.iter().enumerate() {
        for &(c, s_entry) in circle {
            let s = if flips[ci] { (s_entry + 2) % 4 } else { s_entry };
            match s {
                0 => a_dir[c as usize] = true,
                2 => a_dir[c as usize] = false,
                1 => b_dir[c as usize] = true,
                _ => b_dir[c as usize] = false,
            }
        }
    }
    let class = (0..n)
        .map(|c| match (a_dir[c], b_dir[c]) {
            (true, true) => 0,
            (false, true) => 1,
            (false, false) => 2,
            (true, false) => 3,
        })
        .collect();
    Orientation {
        a_dir,
        b_dir,
        class,
    }
}

/// The oriented link obtained by replacing every crossing with the braid of
/// the given sign: the over strand is the one entering at the class slot
/// for a positive braid.
fn braided_link(d: &ClosedDiagram, o: &Orientation, gamma: &[bool]) -> OrientedLink {
    let n = d.n_crossings();
    let over_rule = OVER_RULE.load(std::sync::atomic::Ordering::Relaxed);
    let a_over = (0..n)
        .map(|c| {
            let over_slot = (o.class[c] + over_rule) % 4;
            let over_is_a = over_slot == 0 || over_slot == 2;
            if gamma[c] {
                over_is_a
            } else {
                !over_is_a
            }
        })
        .collect();
    OrientedLink {
        mates: d.mates.clone(),
        a_dir: o.a_dir.clone(),
        b_dir: o.b_dir.clone(),
        a_over,
        free_circles: 0,
    }
}

fn zeta_cache() -> &'static Mutex<HashMap<Vec<u8>, FieldElem>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u8>, FieldElem>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Evaluate with the default orientation/braid choice.
pub fn zeta(d: &ClosedDiagram) -> FieldElem {
    let p = Params::generic();
    let mark_sum: u32 = d.marks.iter().map(|&m| m as u32).sum();
    let factor = minus_i_pow(mark_sum);
    let mut core = d.clone();
    for m in core.marks.iter_mut() {
        *m = 0;
    }
    &factor * &zeta_zero(&core, &p, None)
}

/// Evaluate with explicit circle-orientation flips and braid signs; the
/// consistency theorem makes the result choice-independent, which the test
/// suite verifies sample-wise.
pub fn zeta_with_choices(d: &ClosedDiagram, flips: &[bool], gamma: &[bool]) -> FieldElem {
    let p = Params::generic();
    let mark_sum: u32 = d.marks.iter().map(|&m| m as u32).sum();
    let factor = minus_i_pow(mark_sum);
    let mut core = d.clone();
    for m in core.marks.iter_mut() {
        *m = 0;
    }
    &factor * &zeta_zero(&core, &p, Some((flips, gamma)))
}

/// Core recursion on mark-free diagrams. `choices` overrides the default
/// orientation at the top level only; recursive calls use the default (the
/// sub-values are well-defined scalars by induction).
fn zeta_zero(d: &ClosedDiagram, p: &Params, choices: Option<(&[bool], &[bool])>) -> FieldElem {
    let n = d.n_crossings();
    if n == 0 {
        return p.delta.pow(d.free_circles as i32);
    }
    // free circles factor out
    if d.free_circles > 0 {
        let mut core = d.clone();
        core.free_circles = 0;
        return &p.delta.pow(d.free_circles as i32) * &zeta_zero(&core, p, choices);
    }
    let use_cache = choices.is_none();
    let code = d.canonical_code();
    if use_cache {
        if let Some(hit) = zeta_cache().lock().unwrap().get(&code) {
            return hit.clone();
        }
    }

    let n_circles = d.immersed_circles().len();
    let default_flips = vec![false; n_circles];
    let default_gamma = vec![true; n];
    let (flips, gamma) = match choices {
        Some((f, g)) => (f.to_vec(), g.to_vec()),
        None => (default_flips, default_gamma),
    };
    let o = orient(d, &flips);
    let link = braided_link(d, &o, &gamma);
    let h = homfly(&link);

    // Enumerate proper resolutions in base 3: digit 0 = through smoothing,
    // 1 = turnback smoothing, 2 = keep the label.
    let mut acc = FieldElem::zero();
    let total = 3usize.pow(n as u32);
    let mut digits = vec![0u8; n];
    for code_ix in 0..total {
        let mut x = code_ix;
        let mut all_r = true;
        for dctx in digits.iter_mut() {
            *dctx = (x % 3) as u8;
            x /= 3;
            if *dctx != 2 {
                all_r = false;
            }
        }
        if all_r {
            continue;
        }
        let mut coeff = FieldElem::one();
        // splice from the highest index down so indices stay valid
        let mut sub = d.clone();
        for c in (0..n).rev() {
            let k = o.class[c];
            match digits[c] {
                0 => {
                    coeff = &coeff * &(if gamma[c] { p.a.clone() } else { -&p.a });
                    sub = sub.splice(c, [(k, (k + 3) % 4), ((k + 1) % 4, (k + 2) % 4)]);
                }
                1 => {
                    coeff = &coeff * &p.b;
                    sub = sub.splice(c, [(k, (k + 1) % 4), ((k + 2) % 4, (k + 3) % 4)]);
                }
                _ => {
                    coeff = &coeff * &(&p.d * &minus_i_pow(kept_mark(k)));
                }
            }
        }
        if coeff.is_zero() {
            continue;
        }
        acc = &acc + &(&coeff * &zeta_zero(&sub, p, None));
    }

    let mut all_r_coeff = p.d.pow(n as i32);
    for c in 0..n {
        all_r_coeff = &all_r_coeff * &minus_i_pow(kept_mark(o.class[c]));
    }
    let value = &(&h - &acc) / &all_r_coeff;
    if use_cache {
        zeta_cache().lock().unwrap().insert(code, value.clone());
    }
    value
}

/// Disjoint union (side by side) of two diagrams.
pub fn disjoint_union(d1: &ClosedDiagram, d2: &ClosedDiagram) -> ClosedDiagram {
    let off = d1.n_crossings() as u32;
    let mut mates = d1.mates.clone();
    mates.extend(
        d2.mates
            .iter()
            .map(|row| row.map(|(c, s)| (c + off, s))),
    );
    let mut marks = d1.marks.clone();
    marks.extend_from_slice(&d2.marks);
    ClosedDiagram {
        mates,
        marks,
        free_circles: d1.free_circles + d2.free_circles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::ClosedDiagram;

    fn delta() -> FieldElem {
        Params::generic().delta
    }

    /// Markov-trace closure of a single label (right caps).
    fn closure_r1() -> ClosedDiagram {
        ClosedDiagram::from_wiring(1, vec![0], &[((0, 0), (0, 3)), ((0, 1), (0, 2))], 0).unwrap()
    }

    /// Vertical cap/cup closure of a single label.
    fn closure_r1_other() -> ClosedDiagram {
        ClosedDiagram::from_wiring(1, vec![0], &[((0, 0), (0, 1)), ((0, 2), (0, 3))], 0).unwrap()
    }

    /// Markov-trace closure of the square of the label.
    fn closure_r1_squared() -> ClosedDiagram {
        ClosedDiagram::from_wiring(
            2,
            vec![0, 0],
            &[
                ((0, 3), (1, 0)),
                ((0, 2), (1, 1)),
                ((1, 3), (0, 0)),
                ((1, 2), (0, 1)),
            ],
            0,
        )
        .unwrap()
    }

    #[test]
    fn circles_evaluate_to_delta_powers() {
        for k in 0..4u32 {
            assert_eq!(
                zeta(&ClosedDiagram::circles_only(k)),
                delta().pow(k as i32)
            );
        }
    }

    #[test]
    fn generator_is_uncappable() {
        assert!(zeta(&closure_r1()).is_zero());
        assert!(zeta(&closure_r1_other()).is_zero());
    }

    #[test]
    fn square_closure_value() {
        // R^2 = 1 - e gives trace delta^2 - 1
        let expect = &(&delta() * &delta()) - &FieldElem::one();
        assert_eq!(zeta(&closure_r1_squared()), expect);
    }

    #[test]
    fn rotated_labels_scale_by_minus_i() {
        let base = zeta(&closure_r1_squared());
        let mut rotated = closure_r1_squared();
        rotated.marks[0] = 1;
        let got = zeta(&rotated);
        assert_eq!(got, &(-&FieldElem::i()) * &base);
    }

    #[test]
    fn orientation_and_braid_independence_small() {
        for d in [closure_r1(), closure_r1_other(), closure_r1_squared()] {
            let n = d.n_crossings();
            let k = d.immersed_circles().len();
            let reference = zeta(&d);
            for fmask in 0..(1u32 << k) {
                for gmask in 0..(1u32 << n) {
                    let flips: Vec<bool> = (0..k).map(|i| fmask >> i & 1 == 1).collect();
                    let gamma: Vec<bool> = (0..n).map(|i| gmask >> i & 1 == 1).collect();
                    assert_eq!(
                        zeta_with_choices(&d, &flips, &gamma),
                        reference,
                        "choice mismatch flips={:?} gamma={:?}",
                        flips,
                        gamma
                    );
                }
            }
        }
    }

    #[test]
    fn multiplicative_on_disjoint_unions() {
        let d1 = closure_r1_squared();
        let d2 = ClosedDiagram::circles_only(2);
        let u = disjoint_union(&d1, &d2);
        assert_eq!(zeta(&u), &zeta(&d1) * &zeta(&d2));
        let uu = disjoint_union(&d1, &d1);
        assert_eq!(zeta(&uu), &zeta(&d1) * &zeta(&d1));
    }
}

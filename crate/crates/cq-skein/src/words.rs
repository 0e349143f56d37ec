//! The word algebra on `m` strands: formal linear combinations of words in
//! the crossing letters `r_i` and turnback letters `h_i`, their closures as
//! labeled diagrams, and the Markov trace through the partition function.
//!
//! Equality of elements is semantic, witnessed through trace pairings
//! against a spanning set of words; the canonical spanning words are chosen
//! one per Brauer diagram by breadth-first search in the shadow monoid.

use crate::diagram::{ClosedDiagram, SkeinError};
use crate::link::Port;
use crate::zeta::zeta;
use cq_exact::{FieldElem, Params};
use std::collections::{HashMap, VecDeque};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    /// Crossing label at position `i` (1-indexed, acts on strands i, i+1).
    R(u8),
    /// Turnback (cap over cup) at position `i`.
    H(u8),
}

impl Letter {
    pub fn position(&self) -> u8 {
        match self {
            Letter::R(i) | Letter::H(i) => *i,
        }
    }
}

pub type Word = Vec<Letter>;

/// Letters read left to right stack bottom to top in the closure diagram.
#[derive(Clone, Debug)]
pub struct AlgElem {
    m: u8,
    terms: HashMap<Word, FieldElem>,
}

impl AlgElem {
    pub fn zero(m: u8) -> Self {
        AlgElem {
            m,
            terms: HashMap::new(),
        }
    }

    pub fn one(m: u8) -> Self {
        Self::word(m, vec![])
    }

    pub fn word(m: u8, w: Word) -> Self {
        let mut e = Self::zero(m);
        e.add_term(w, FieldElem::one());
        e
    }

    pub fn letter(m: u8, l: Letter) -> Result<Self, SkeinError> {
        let i = l.position() as usize;
        if i == 0 || i >= m as usize {
            return Err(SkeinError::IndexOutOfRange(i, m as usize));
        }
        Ok(Self::word(m, vec![l]))
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &FieldElem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: Word, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        debug_assert!(w
            .iter()
            .all(|l| l.position() >= 1 && l.position() < self.m));
        let entry = self.terms.entry(w.clone()).or_insert_with(FieldElem::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        AlgElem {
            m: self.m,
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.m, rhs.m);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.m, rhs.m);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.m, rhs.m);
        let mut out = Self::zero(self.m);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// The adjoint: words reversed, coefficients conjugated; the letters
    /// themselves are self-adjoint.
    pub fn star(&self) -> Self {
        AlgElem {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let mut rw = w.clone();
                    rw.reverse();
                    (rw, c.conj())
                })
                .collect(),
        }
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Word> = self.terms.keys().collect();
        keys.sort();
        let parts: Vec<String> = keys
            .iter()
            .map(|w| format!("({}) {}", self.terms[*w], word_string(w)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn word_string(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.iter()
        .map(|l| match l {
            Letter::R(i) => format!("r{}", i),
            Letter::H(i) => format!("h{}", i),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Markov-trace closure of a word on `m` strands: stack the letters and add
/// `m` right caps.
pub fn closure(word: &Word, m: u8) -> ClosedDiagram {
    let m = m as usize;
    // Terminals: crossing ports, or numbered junctions with exactly two
    // incident edge endpoints.
    #[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
    enum Term {
        P(Port),
        J(u32),
    }
    let mut edges: Vec<(Term, Term)> = Vec::new();
    let mut jnext = m as u32;
    let mut cur: Vec<Term> = (0..m as u32).map(Term::J).collect();
    let mut n_crossings = 0u32;
    for l in word {
        let i = l.position() as usize;
        assert!(i >= 1 && i < m, "letter position out of range");
        match l {
            Letter::R(_) => {
                let c = n_crossings;
                n_crossings += 1;
                edges.push((cur[i - 1], Term::P((c, 0))));
                edges.push((cur[i], Term::P((c, 1))));
                cur[i - 1] = Term::P((c, 3));
                cur[i] = Term::P((c, 2));
            }
            Letter::H(_) => {
                let cap = Term::J(jnext);
                jnext += 1;
                edges.push((cur[i - 1], cap));
                edges.push((cur[i], cap));
                let cup = jnext;
                jnext += 1;
                cur[i - 1] = Term::J(cup);
                cur[i] = Term::J(cup);
            }
        }
    }
    for (i, &c) in cur.iter().enumerate() {
        edges.push((c, Term::J(i as u32)));
    }

    // Resolve junction chains into port-to-port wiring plus free circles.
    let mut adj: HashMap<Term, Vec<(usize, Term)>> = HashMap::new();
    for (eid, &(x, y)) in edges.iter().enumerate() {
        adj.entry(x).or_default().push((eid, y));
        adj.entry(y).or_default().push((eid, x));
    }
    let mut wiring: Vec<(Port, Port)> = Vec::new();
    let mut used_edges = vec![false; edges.len()];
    for c in 0..n_crossings {
        for s in 0..4u8 {
            let start = Term::P((c, s));
            let &(e0, mut t) = adj[&start]
                .first()
                .expect("every port has exactly one edge");
            if used_edges[e0] {
                continue;
            }
            used_edges[e0] = true;
            let mut last_edge = e0;
            while let Term::J(_) = t {
                let next = adj[&t]
                    .iter()
                    .find(|&&(e, _)| e != last_edge && !used_edges[e])
                    .copied();
                match next {
                    Some((e, u)) => {
                        used_edges[e] = true;
                        last_edge = e;
                        t = u;
                    }
                    None => unreachable!("junction chain must continue"),
                }
            }
            if let Term::P(q) = t {
                wiring.push(((c, s), q));
            }
        }
    }
    // circles: junction components with no port contact
    let mut free_circles = 0u32;
    let mut seen_j: HashMap<Term, bool> = HashMap::new();
    for (eid, &(x, y)) in edges.iter().enumerate() {
        if used_edges[eid] {
            continue;
        }
        // both endpoints are junctions
        if seen_j.get(&x).copied().unwrap_or(false) {
            continue;
        }
        // walk the cycle
        let mut t = x;
        let mut last_edge = usize::MAX;
        loop {
            seen_j.insert(t, true);
            let next = adj[&t]
                .iter()
                .find(|&&(e, _)| e != last_edge && !used_edges[e])
                .copied();
            match next {
                Some((e, u)) => {
                    used_edges[e] = true;
                    last_edge = e;
                    t = u;
                }
                None => break,
            }
            if t == x {
                break;
            }
        }
        let _ = y;
        free_circles += 1;
    }

    ClosedDiagram::from_wiring(
        n_crossings as usize,
        vec![0; n_crossings as usize],
        &wiring,
        free_circles,
    )
    .expect("word closures are well-formed")
}

/// Markov trace of an element: sum of partition-function values of the
/// closures of its words.
pub fn word_trace(x: &AlgElem) -> FieldElem {
    let mut acc = FieldElem::zero();
    for (w, c) in x.terms() {
        acc = &acc + &(c * &zeta(&closure(w, x.m())));
    }
    acc
}

/// The braid element `alpha_i = a + b h_i + d r_i` and its inverse
/// `alpha_i^{-1} = -a + b h_i + d r_i`; `beta_i` flips the sign of `b`.
pub fn alpha(m: u8, i: u8, inverse: bool) -> Result<AlgElem, SkeinError> {
    let p = Params::generic();
    let mut e = AlgElem::zero(m);
    let a = if inverse { -&p.a } else { p.a.clone() };
    e.add_term(vec![], a);
    e.add_term(vec![Letter::H(i)], p.b.clone());
    e.add_term(vec![Letter::R(i)], p.d.clone());
    check_letter(m, i)?;
    Ok(e)
}

pub fn beta(m: u8, i: u8, inverse: bool) -> Result<AlgElem, SkeinError> {
    let p = Params::generic();
    let mut e = AlgElem::zero(m);
    let a = if inverse { -&p.a } else { p.a.clone() };
    e.add_term(vec![], a);
    e.add_term(vec![Letter::H(i)], -&p.b);
    e.add_term(vec![Letter::R(i)], p.d.clone());
    check_letter(m, i)?;
    Ok(e)
}

fn check_letter(m: u8, i: u8) -> Result<(), SkeinError> {
    if i == 0 || i >= m {
        return Err(SkeinError::IndexOutOfRange(i as usize, m as usize));
    }
    Ok(())
}

/// Perfect matchings on `2m` points (bottom `0..m`, top `m..2m`): the shadow
/// of a word, used only to pick one canonical word per diagram.
type Matching = Vec<u8>;

fn matching_identity(m: usize) -> Matching {
    let mut v = vec![0u8; 2 * m];
    for i in 0..m {
        v[i] = (m + i) as u8;
        v[m + i] = i as u8;
    }
    v
}

/// Stack the one-letter diagram of `l` on top of `mat`.
fn matching_apply(mat: &Matching, l: Letter, m: usize) -> Matching {
    // letter diagram as a matching
    let mut letter = matching_identity(m);
    let i = l.position() as usize - 1;
    match l {
        Letter::R(_) => {
            letter[i] = (m + i + 1) as u8;
            letter[i + 1] = (m + i) as u8;
            letter[m + i] = (i + 1) as u8;
            letter[m + i + 1] = i as u8;
        }
        Letter::H(_) => {
            letter[i] = (i + 1) as u8;
            letter[i + 1] = i as u8;
            letter[m + i] = (m + i + 1) as u8;
            letter[m + i + 1] = (m + i) as u8;
        }
    }
    compose_matchings(mat, &letter, m)
}

/// `top` stacked over `bottom`: join bottom's top points to top's bottom
/// points and trace through.
fn compose_matchings(bottom: &Matching, top: &Matching, m: usize) -> Matching {
    // points: result bottom 0..m (bottom's bottom), result top m..2m
    // (top's top). Walk through the middle layer.
    let mut out = vec![0u8; 2 * m];
    let trace_from = |start_layer: bool, start: usize| -> (bool, usize) {
        // (layer, point): layer false = in `bottom` diagram, true = in `top`
        let (mut layer, mut pt) = (start_layer, start);
        loop {
            let partner = if !layer {
                bottom[pt] as usize
            } else {
                top[pt] as usize
            };
            match (layer, partner >= m) {
                (false, false) => return (false, partner), // bottom's bottom: exterior
                (false, true) => {
                    // bottom's top -> top's bottom
                    layer = true;
                    pt = partner - m;
                }
                (true, true) => return (true, partner), // top's top: exterior
                (true, false) => {
                    // top's bottom -> bottom's top
                    layer = false;
                    pt = partner + m;
                }
            }
        }
    };
    // Exterior encodings coincide with the result's: bottom's bottom points
    // are 0..m, top's top points are m..2m.
    for p in 0..m {
        let (_, q) = trace_from(false, p);
        out[p] = q as u8;
    }
    for p in 0..m {
        let (_, q) = trace_from(true, m + p);
        out[m + p] = q as u8;
    }
    out
}

/// One canonical word per Brauer diagram on `m` strands, found breadth-first
/// over the shadow monoid; `(2m-1)!!` words in all, identity first.
pub fn canonical_words(m: u8) -> Vec<Word> {
    let mu = m as usize;
    let target = (0..mu as u64).map(|k| 2 * k + 1).product::<u64>() as usize;
    let mut letters = Vec::new();
    for i in 1..mu {
        letters.push(Letter::R(i as u8));
        letters.push(Letter::H(i as u8));
    }
    let mut first: HashMap<Matching, Word> = HashMap::new();
    let id = matching_identity(mu);
    first.insert(id.clone(), vec![]);
    let mut queue: VecDeque<(Matching, Word)> = VecDeque::new();
    queue.push_back((id, vec![]));
    while let Some((mat, word)) = queue.pop_front() {
        if first.len() == target {
            break;
        }
        for &l in &letters {
            let next = matching_apply(&mat, l, mu);
            if !first.contains_key(&next) {
                let mut w = word.clone();
                w.push(l);
                first.insert(next.clone(), w.clone());
                queue.push_back((next, w));
            }
        }
    }
    assert_eq!(first.len(), target, "shadow monoid exploration incomplete");
    let mut words: Vec<Word> = first.into_values().collect();
    words.sort_by_key(|w| (w.len(), w.clone()));
    words
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta() -> FieldElem {
        Params::generic().delta
    }

    #[test]
    fn identity_trace_is_delta_m() {
        for m in 1..=3u8 {
            let x = AlgElem::one(m);
            assert_eq!(word_trace(&x), delta().pow(m as i32));
        }
    }

    #[test]
    fn turnback_trace() {
        // two right caps on a turnback close into a single circle: trace is
        // delta for m = 2
        let x = AlgElem::word(2, vec![Letter::H(1)]);
        assert_eq!(word_trace(&x), delta());
    }

    #[test]
    fn crossing_trace_vanishes() {
        let x = AlgElem::word(2, vec![Letter::R(1)]);
        assert!(word_trace(&x).is_zero());
        let y = AlgElem::word(3, vec![Letter::R(2)]);
        assert!(word_trace(&y).is_zero());
    }

    #[test]
    fn square_relation_trace() {
        // tr(r1 r1) = delta^2 - 1
        let x = AlgElem::word(2, vec![Letter::R(1), Letter::R(1)]);
        let expect = &(&delta() * &delta()) - &FieldElem::one();
        assert_eq!(word_trace(&x), expect);
    }

    #[test]
    fn canonical_word_counts() {
        assert_eq!(canonical_words(1).len(), 1);
        assert_eq!(canonical_words(2).len(), 3);
        assert_eq!(canonical_words(3).len(), 15);
    }

    #[test]
    fn alpha_satisfies_quadratic() {
        // alpha - alpha^{-1} = (q - q^{-1}) as elements (same words)
        let al = alpha(2, 1, false).unwrap();
        let al_inv = alpha(2, 1, true).unwrap();
        let diff = al.sub(&al_inv);
        assert_eq!(diff.num_terms(), 1);
        let qq = &FieldElem::q() - &FieldElem::q_pow(-1);
        assert_eq!(diff.terms().next().unwrap().1, &qq);
    }
}

//! Closed diagrams labeled by the 2-box generator: 4-valent port graphs
//! where every vertex is an R-labeled crossing carrying a rotation mark
//! (the slot holding the label's dollar sign), plus crossing-free circles.
//!
//! One click of rotation multiplies the label by `-i`, so a mark `m`
//! contributes the scalar `(-i)^m` relative to the mark-0 diagram; the
//! evaluation engine normalizes all marks to zero up front.

use crate::link::Port;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("malformed link or diagram wiring")]
    MalformedLink,
    #[error("wiring is not planar (Euler characteristic {0} on a connected component)")]
    NonPlanarWiring(i64),
    #[error("letter index {0} out of range for {1} strands")]
    IndexOutOfRange(usize, usize),
    #[error(transparent)]
    Exact(#[from] cq_exact::ExactError),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedDiagram {
    /// `mates[c][s]` is the port wired to `(c, s)`; slots CCW 0=SW..3=NW.
    pub(crate) mates: Vec<[Port; 4]>,
    /// Rotation mark per crossing.
    pub(crate) marks: Vec<u8>,
    pub(crate) free_circles: u32,
}

impl ClosedDiagram {
    pub fn circles_only(k: u32) -> Self {
        ClosedDiagram {
            mates: vec![],
            marks: vec![],
            free_circles: k,
        }
    }

    /// Build from explicit crossing wiring. `wiring` pairs ports; every port
    /// of every crossing must occur exactly once.
    pub fn from_wiring(
        n_crossings: usize,
        marks: Vec<u8>,
        wiring: &[(Port, Port)],
        free_circles: u32,
    ) -> Result<Self, SkeinError> {
        if marks.len() != n_crossings || wiring.len() != 2 * n_crossings {
            return Err(SkeinError::MalformedLink);
        }
        let mut mates = vec![[(u32::MAX, 9u8); 4]; n_crossings];
        let mut seen = vec![[false; 4]; n_crossings];
        let mut set = |p: Port, q: Port, mates: &mut Vec<[Port; 4]>| -> Result<(), SkeinError> {
            let (c, s) = (p.0 as usize, p.1 as usize);
            if c >= n_crossings || s >= 4 || seen[c][s] {
                return Err(SkeinError::MalformedLink);
            }
            seen[c][s] = true;
            mates[c][s] = q;
            Ok(())
        };
        for &(p, q) in wiring {
            set(p, q, &mut mates)?;
            set(q, p, &mut mates)?;
        }
        if !seen.iter().all(|r| r.iter().all(|&b| b)) {
            return Err(SkeinError::MalformedLink);
        }
        Ok(ClosedDiagram {
            mates,
            marks: marks.into_iter().map(|m| m % 4).collect(),
            free_circles,
        })
    }

    pub fn n_crossings(&self) -> usize {
        self.mates.len()
    }

    pub fn free_circles(&self) -> u32 {
        self.free_circles
    }

    pub fn marks(&self) -> &[u8] {
        &self.marks
    }

    /// Immersed circles: strands continue through crossings diagonally
    /// (0 <-> 2, 1 <-> 3). Returns circles as lists of (entry) ports.
    pub fn immersed_circles(&self) -> Vec<Vec<Port>> {
        let n = self.mates.len();
        let mut seen = vec![[false; 4]; n];
        let mut out = Vec::new();
        for c0 in 0..n {
            for s0 in 0..4u8 {
                if seen[c0][s0 as usize] {
                    continue;
                }
                // trace the circle through this port in one direction
                let mut circle = Vec::new();
                let (mut c, mut s) = (c0, s0);
                loop {
                    if seen[c][s as usize] {
                        break;
                    }
                    seen[c][s as usize] = true;
                    seen[c][((s + 2) % 4) as usize] = true;
                    circle.push((c as u32, s));
                    let (nc, ns) = self.mates[c][((s + 2) % 4) as usize];
                    c = nc as usize;
                    s = ns;
                }
                if !circle.is_empty() {
                    out.push(circle);
                }
            }
        }
        out
    }

    /// Remove crossing `c`, joining its slots pairwise; same contraction
    /// rules as for links.
    pub(crate) fn splice(&self, c: usize, pairs: [(u8, u8); 2]) -> Self {
        let n = self.mates.len();
        let pair_of = |s: u8| -> u8 {
            for &(x, y) in &pairs {
                if s == x {
                    return y;
                }
                if s == y {
                    return x;
                }
            }
            unreachable!()
        };
        let reindex = |p: Port| -> Port {
            if (p.0 as usize) < c {
                p
            } else {
                (p.0 - 1, p.1)
            }
        };
        let mut used = [false; 4];
        let mut mates: Vec<[Port; 4]> = Vec::with_capacity(n.saturating_sub(1));
        for cc in 0..n {
            if cc == c {
                continue;
            }
            let mut row = [(u32::MAX, 0u8); 4];
            for s in 0..4usize {
                let mut m = self.mates[cc][s];
                while m.0 as usize == c {
                    used[m.1 as usize] = true;
                    let cont = pair_of(m.1);
                    used[cont as usize] = true;
                    m = self.mates[c][cont as usize];
                }
                row[s] = reindex(m);
            }
            mates.push(row);
        }
        let mut free_circles = self.free_circles;
        for s0 in 0..4u8 {
            if used[s0 as usize] {
                continue;
            }
            let mut s = s0;
            loop {
                used[s as usize] = true;
                let s2 = pair_of(s);
                used[s2 as usize] = true;
                let m = self.mates[c][s2 as usize];
                debug_assert_eq!(m.0 as usize, c);
                s = m.1;
                if s == s0 {
                    break;
                }
            }
            free_circles += 1;
        }
        let mut marks = self.marks.clone();
        marks.remove(c);
        ClosedDiagram {
            mates,
            marks,
            free_circles,
        }
    }

    /// Canonical code under crossing relabeling (marks included).
    pub(crate) fn canonical_code(&self) -> Vec<u8> {
        let n = self.mates.len();
        if n == 0 {
            return vec![255, self.free_circles as u8];
        }
        let mut best: Option<Vec<u8>> = None;
        for start in 0..n {
            let mut label = vec![u32::MAX; n];
            let mut order = Vec::with_capacity(n);
            label[start] = 0;
            order.push(start);
            let mut head = 0;
            while head < order.len() {
                let c = order[head];
                head += 1;
                for s in 0..4usize {
                    let (mc, _) = self.mates[c][s];
                    let mc = mc as usize;
                    if label[mc] == u32::MAX {
                        label[mc] = order.len() as u32;
                        order.push(mc);
                    }
                }
            }
            if order.len() < n {
                for c in 0..n {
                    if label[c] == u32::MAX {
                        label[c] = order.len() as u32;
                        order.push(c);
                    }
                }
            }
            let mut code = Vec::with_capacity(n * 9 + 1);
            code.push(self.free_circles as u8);
            for &c in &order {
                code.push(self.marks[c]);
                for s in 0..4usize {
                    let (mc, ms) = self.mates[c][s];
                    code.push(label[mc as usize] as u8);
                    code.push(ms);
                }
            }
            if best.as_ref().map_or(true, |b| &code < b) {
                best = Some(code);
            }
        }
        best.unwrap()
    }

    /// Planarity check via the Euler characteristic of the surface induced
    /// by the counterclockwise rotation system: each connected component
    /// must have V - E + F = 2.
    pub fn validate_planar(&self) -> Result<(), SkeinError> {
        let n = self.mates.len();
        if n == 0 {
            return Ok(());
        }
        // connected components of the crossing graph
        let mut comp = vec![usize::MAX; n];
        let mut n_comp = 0;
        for c0 in 0..n {
            if comp[c0] != usize::MAX {
                continue;
            }
            let mut stack = vec![c0];
            comp[c0] = n_comp;
            while let Some(c) = stack.pop() {
                for s in 0..4usize {
                    let m = self.mates[c][s].0 as usize;
                    if comp[m] == usize::MAX {
                        comp[m] = n_comp;
                        stack.push(m);
                    }
                }
            }
            n_comp += 1;
        }
        // face tracing: directed edge = arrival port; next directed edge
        // turns left: exit at (arrival + 1) mod 4 and follow the wiring.
        let mut faces = vec![0i64; n_comp];
        let mut seen = vec![[false; 4]; n];
        for c0 in 0..n {
            for s0 in 0..4u8 {
                if seen[c0][s0 as usize] {
                    continue;
                }
                let (mut c, mut s) = (c0, s0);
                loop {
                    if seen[c][s as usize] {
                        break;
                    }
                    seen[c][s as usize] = true;
                    let exit = (s + 1) % 4;
                    let (nc, ns) = self.mates[c][exit as usize];
                    c = nc as usize;
                    s = ns;
                }
                faces[comp[c0]] += 1;
            }
        }
        let mut verts = vec![0i64; n_comp];
        for c in 0..n {
            verts[comp[c]] += 1;
        }
        for k in 0..n_comp {
            let v = verts[k];
            let e = 2 * v; // 4 ports per crossing, two per edge
            let chi = v - e + faces[k];
            if chi != 2 {
                return Err(SkeinError::NonPlanarWiring(chi));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Closure of a single crossing: both diagonals capped off.
    fn single_crossing_closure() -> ClosedDiagram {
        ClosedDiagram::from_wiring(
            1,
            vec![0],
            &[((0, 0), (0, 3)), ((0, 1), (0, 2))],
            0,
        )
        .unwrap()
    }

    #[test]
    fn wiring_validation() {
        assert!(ClosedDiagram::from_wiring(1, vec![0], &[((0, 0), (0, 1))], 0).is_err());
        assert!(single_crossing_closure().validate_planar().is_ok());
    }

    #[test]
    fn immersed_circle_count() {
        let d = single_crossing_closure();
        assert_eq!(d.immersed_circles().len(), 1);
    }

    #[test]
    fn splice_counts_circles() {
        let d = single_crossing_closure();
        // turnback smoothing (0,1),(2,3): joins 0-1 and 2-3; wiring has
        // 0-3 and 1-2: one big circle
        let s = d.splice(0, [(0, 1), (2, 3)]);
        assert_eq!(s.n_crossings(), 0);
        assert_eq!(s.free_circles, 1);
        // through smoothing (0,3),(1,2): matches the wiring: two circles
        let s2 = d.splice(0, [(0, 3), (1, 2)]);
        assert_eq!(s2.free_circles, 2);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        // two crossings in a cycle, labeled two ways
        let d1 = ClosedDiagram::from_wiring(
            2,
            vec![1, 2],
            &[
                ((0, 0), (1, 3)),
                ((0, 1), (1, 2)),
                ((0, 2), (1, 1)),
                ((0, 3), (1, 0)),
            ],
            0,
        )
        .unwrap();
        let d2 = ClosedDiagram::from_wiring(
            2,
            vec![2, 1],
            &[
                ((1, 0), (0, 3)),
                ((1, 1), (0, 2)),
                ((1, 2), (0, 1)),
                ((1, 3), (0, 0)),
            ],
            0,
        )
        .unwrap();
        assert_eq!(d1.canonical_code(), d2.canonical_code());
    }
}

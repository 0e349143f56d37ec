//! Young's lattice and its truncations `YL(N)`, as finite bipartite-by-parity
//! graphs, with oscillating-path counting.

use crate::diagram::YoungDiagram;
use std::collections::HashMap;

/// A finite, downward-closed piece of Young's lattice: vertices are diagrams,
/// edges join diagrams differing by one cell, the root is the empty diagram.
#[derive(Clone, Debug)]
pub struct LatticeGraph {
    verts: Vec<YoungDiagram>,
    index: HashMap<YoungDiagram, usize>,
    adj: Vec<Vec<usize>>,
    /// Boundary annotation: diagrams just outside the truncation (one cell
    /// above a vertex, not themselves vertices). Empty for the full lattice.
    boundary: Vec<YoungDiagram>,
}

impl LatticeGraph {
    fn build(verts: Vec<YoungDiagram>, boundary: Vec<YoungDiagram>) -> Self {
        let index: HashMap<YoungDiagram, usize> =
            verts.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let mut adj = vec![Vec::new(); verts.len()];
        for (i, d) in verts.iter().enumerate() {
            for up in d.ups() {
                if let Some(&j) = index.get(&up) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        LatticeGraph {
            verts,
            index,
            adj,
            boundary,
        }
    }

    /// Full Young's lattice with all diagrams of size at most `depth`.
    pub fn young_lattice(depth: u32) -> Self {
        let mut verts = Vec::new();
        for n in 0..=depth {
            verts.extend(YoungDiagram::partitions_of(n));
        }
        Self::build(verts, Vec::new())
    }

    /// The truncation `YL(N)`: diagrams with corner hook at most `N`, size at
    /// most `depth`. The boundary is the set of diagrams one cell above a
    /// vertex with corner hook exactly `N+1` (within `depth + 1` cells).
    pub fn truncated(n_level: u32, depth: u32) -> Self {
        let mut verts = Vec::new();
        for n in 0..=depth {
            verts.extend(
                YoungDiagram::partitions_of(n)
                    .into_iter()
                    .filter(|d| d.corner_hook() <= n_level),
            );
        }
        let mut boundary = Vec::new();
        for v in &verts {
            for up in v.ups() {
                if up.corner_hook() == n_level + 1 && !boundary.contains(&up) {
                    boundary.push(up);
                }
            }
        }
        boundary.sort();
        Self::build(verts, boundary)
    }

    pub fn vertices(&self) -> &[YoungDiagram] {
        &self.verts
    }

    pub fn boundary(&self) -> &[YoungDiagram] {
        &self.boundary
    }

    pub fn contains(&self, d: &YoungDiagram) -> bool {
        self.index.contains_key(d)
    }

    pub fn vertex_index(&self, d: &YoungDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.verts.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: &YoungDiagram, b: &YoungDiagram) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.adj[i].contains(&j),
            _ => false,
        }
    }

    /// Number of length-`m` walks from the root to each vertex.
    pub fn path_counts(&self, m: u32) -> Vec<u64> {
        let root = self.index[&YoungDiagram::empty()];
        let mut p = vec![0u64; self.verts.len()];
        p[root] = 1;
        for _ in 0..m {
            let mut next = vec![0u64; self.verts.len()];
            for (i, &c) in p.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for &j in &self.adj[i] {
                    next[j] += c;
                }
            }
            p = next;
        }
        p
    }

    /// Dimension of the string algebra at level `m`: the number of loops of
    /// length `2m` at the root, computed as the sum of squared path counts.
    pub fn count_loops(&self, m: u32) -> u64 {
        self.path_counts(m).iter().map(|c| c * c).sum()
    }

    /// All length-`m` oscillating paths from the root, as vertex sequences.
    pub fn enumerate_paths(&self, m: u32) -> Vec<Vec<YoungDiagram>> {
        let root = self.index[&YoungDiagram::empty()];
        let mut acc: Vec<Vec<usize>> = vec![vec![root]];
        for _ in 0..m {
            let mut next = Vec::new();
            for path in &acc {
                let last = *path.last().unwrap();
                for &j in &self.adj[last] {
                    let mut p = path.clone();
                    p.push(j);
                    next.push(p);
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|p| p.into_iter().map(|i| self.verts[i].clone()).collect())
            .collect()
    }

    /// DOT rendering; the root is highlighted.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {} {{\n  rankdir=BT;\n", name);
        for (i, v) in self.verts.iter().enumerate() {
            let extra = if v.is_empty() {
                ", style=filled, fillcolor=lightgray"
            } else {
                ""
            };
            s.push_str(&format!("  v{} [label=\"{}\"{}];\n", i, v.label(), extra));
        }
        for (i, nbrs) in self.adj.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    s.push_str(&format!("  v{} -- v{};\n", i, j));
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// `(2m-1)!! = 1 * 3 * 5 * ...`, the dimension of the m-box algebra.
pub fn double_factorial_odd(m: u32) -> u64 {
    (0..m).map(|k| 2 * k as u64 + 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec())
    }

    #[test]
    fn truncated_level2_depth2() {
        let g = LatticeGraph::truncated(2, 2);
        let mut vs: Vec<_> = g.vertices().to_vec();
        vs.sort();
        let mut expect = vec![YoungDiagram::empty(), yd(&[1]), yd(&[2]), yd(&[1, 1])];
        expect.sort();
        assert_eq!(vs, expect);
        assert!(g.has_edge(&YoungDiagram::empty(), &yd(&[1])));
        assert!(g.has_edge(&yd(&[1]), &yd(&[2])));
        assert!(g.has_edge(&yd(&[1]), &yd(&[1, 1])));
        assert_eq!(g.num_edges(), 3);
    }

    #[test]
    fn truncated_level3_depth4_has_eight_vertices() {
        let g = LatticeGraph::truncated(3, 4);
        assert_eq!(g.num_vertices(), 8);
        // Independent enumeration oracle: filter all partitions by corner hook.
        let mut count = 0;
        for n in 0..=4 {
            count += YoungDiagram::partitions_of(n)
                .iter()
                .filter(|d| d.corner_hook() <= 3)
                .count();
        }
        assert_eq!(count, 8);
    }

    #[test]
    fn truncated_level1_is_a_single_edge() {
        let g = LatticeGraph::truncated(1, 10);
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn loop_counts() {
        let full = LatticeGraph::young_lattice(8);
        assert_eq!(full.count_loops(0), 1);
        assert_eq!(full.count_loops(3), 15);
        for m in 0..=7 {
            assert_eq!(full.count_loops(m), double_factorial_odd(m), "m={}", m);
        }
        let g2 = LatticeGraph::truncated(2, 8);
        assert_eq!(g2.count_loops(3), 9);
    }

    #[test]
    fn path_enumeration_matches_counts() {
        let g = LatticeGraph::truncated(2, 6);
        let paths = g.enumerate_paths(4);
        let total: u64 = g.path_counts(4).iter().sum();
        assert_eq!(paths.len() as u64, total);
        // every step moves by one cell
        for p in paths.iter().take(50) {
            for w in p.windows(2) {
                assert_eq!((w[0].size() as i64 - w[1].size() as i64).abs(), 1);
            }
        }
    }

    #[test]
    fn boundary_has_corner_hook_n_plus_one() {
        for n in 2..=4 {
            let g = LatticeGraph::truncated(n, 8);
            assert!(!g.boundary().is_empty());
            for b in g.boundary() {
                assert_eq!(b.corner_hook(), n + 1);
            }
        }
        // B(2) is exactly the three 3-cell diagrams above Y(2)
        let g = LatticeGraph::truncated(2, 8);
        let mut b = g.boundary().to_vec();
        b.sort();
        let mut expect = vec![yd(&[3]), yd(&[2, 1]), yd(&[1, 1, 1])];
        expect.sort();
        assert_eq!(b, expect);
    }

    #[test]
    fn downward_closed() {
        let g = LatticeGraph::truncated(3, 8);
        for v in g.vertices() {
            for d in v.downs() {
                assert!(g.contains(&d));
            }
        }
    }
}

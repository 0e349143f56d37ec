//! Brute-force graph automorphisms with color refinement, plus a small
//! generating-set extraction. The truncation graphs are tiny, so a plain
//! backtracking search is enough.

use crate::lattice::LatticeGraph;

/// All automorphisms of the graph, each as a vertex permutation (image
/// indexed by source vertex).
pub fn automorphisms(g: &LatticeGraph) -> Vec<Vec<usize>> {
    let n = g.num_vertices();
    if n == 0 {
        return vec![vec![]];
    }
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            let mut row = vec![false; n];
            for &j in g.neighbors(i) {
                row[j] = true;
            }
            row
        })
        .collect();

    // 1-dimensional Weisfeiler-Leman color refinement.
    let mut colors: Vec<u64> = (0..n).map(|i| g.neighbors(i).len() as u64).collect();
    loop {
        let mut sig: Vec<(u64, Vec<u64>)> = (0..n)
            .map(|i| {
                let mut nb: Vec<u64> = g.neighbors(i).iter().map(|&j| colors[j]).collect();
                nb.sort_unstable();
                (colors[i], nb)
            })
            .collect();
        let mut uniq = sig.clone();
        uniq.sort();
        uniq.dedup();
        let next: Vec<u64> = sig
            .drain(..)
            .map(|s| uniq.binary_search(&s).unwrap() as u64)
            .collect();
        if next == colors {
            break;
        }
        colors = next;
    }

    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(n, &adj, &colors, 0, &mut perm, &mut used, &mut out);
    out
}

fn search(
    n: usize,
    adj: &[Vec<bool>],
    colors: &[u64],
    v: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if v == n {
        out.push(perm.clone());
        return;
    }
    for target in 0..n {
        if used[target] || colors[target] != colors[v] {
            continue;
        }
        // adjacency with all previously assigned vertices must match
        let ok = (0..v).all(|u| adj[v][u] == adj[target][perm[u]]);
        if !ok {
            continue;
        }
        perm[v] = target;
        used[target] = true;
        search(n, adj, colors, v + 1, perm, used, out);
        used[target] = false;
        perm[v] = usize::MAX;
    }
}

/// A small generating set: greedily add elements whose closure grows.
pub fn generators(all: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = match all.first() {
        Some(p) => p.len(),
        None => return vec![],
    };
    let id: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut closure: std::collections::HashSet<Vec<usize>> = [id.clone()].into_iter().collect();
    for cand in all {
        if closure.contains(cand) {
            continue;
        }
        gens.push(cand.clone());
        // regenerate closure
        closure = [id.clone()].into_iter().collect();
        let mut frontier = vec![id.clone()];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
                if closure.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        if closure.len() == all.len() {
            break;
        }
    }
    gens
}

/// True when the group (given as all elements) is dihedral of order `2m`
/// with `m >= 3`: has an index-2 cyclic subgroup inverted by reflections.
pub fn is_dihedral_of_order(all: &[Vec<usize>], order: usize) -> bool {
    if all.len() != order || order % 2 != 0 || order < 6 {
        return all.len() == order && (order == 2 || order == 4 || order == 1);
    }
    let m = order / 2;
    // look for an element of order m
    'outer: for r in all {
        let mut pow: Vec<usize> = r.clone();
        let mut k = 1;
        let id: Vec<usize> = (0..r.len()).collect();
        while pow != id {
            pow = pow.iter().map(|&i| r[i]).collect();
            k += 1;
            if k > order {
                continue 'outer;
            }
        }
        if k == m {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeGraph;

    #[test]
    fn dihedral_symmetry_of_truncations() {
        // |Aut(YL(N))| = 2(N+1) on the full truncation Y(N), for N >= 2
        for n in 2..=5u32 {
            let depth = (n + 1) * (n + 1) / 4 + 1;
            let g = LatticeGraph::truncated(n, depth);
            let autos = automorphisms(&g);
            assert_eq!(
                autos.len(),
                2 * (n as usize + 1),
                "wrong automorphism count for N={}",
                n
            );
        }
    }

    #[test]
    fn level_two_is_s3_on_the_claw() {
        let g = LatticeGraph::truncated(2, 4);
        let autos = automorphisms(&g);
        assert_eq!(autos.len(), 6);
        assert!(is_dihedral_of_order(&autos, 6));
        let gens = generators(&autos);
        assert!(gens.len() <= 2);
    }

    #[test]
    fn level_three_is_dihedral_eight() {
        let g = LatticeGraph::truncated(3, 4);
        let autos = automorphisms(&g);
        assert_eq!(autos.len(), 8);
        assert!(is_dihedral_of_order(&autos, 8));
    }

    #[test]
    fn single_edge_has_swap() {
        let g = LatticeGraph::truncated(1, 5);
        let autos = automorphisms(&g);
        assert_eq!(autos.len(), 2);
    }
}

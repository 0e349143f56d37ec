//! The order-(N+1) lattice automorphism given by tensoring with the
//! one-column rectangle `[1^N]`: remove the first row of the diagram and
//! prepend a column with `N - (first row)` cells.

use crate::diagram::YoungDiagram;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GTensorError {
    #[error("{0} is not in Y({1}): corner hook {2} exceeds {1}")]
    NotInYn(YoungDiagram, u32, u32),
}

/// `lambda (x) [1^N]` on `Y(N)`.
pub fn g_tensor(lambda: &YoungDiagram, n_level: u32) -> Result<YoungDiagram, GTensorError> {
    let hook = lambda.corner_hook();
    if hook > n_level {
        return Err(GTensorError::NotInYn(lambda.clone(), n_level, hook));
    }
    let first = lambda.row(1);
    let rest = YoungDiagram::new(lambda.rows().iter().skip(1).copied().collect::<Vec<_>>());
    // Prepend a column of `N - first` cells: transpose, push the new column
    // length in front, transpose back. Membership in Y(N) makes the new
    // column at least as long as the rest (corner hook <= N).
    let col = n_level - first;
    let mut tr: Vec<u32> = rest.transpose().rows().to_vec();
    tr.insert(0, col);
    Ok(YoungDiagram::new(tr).transpose())
}

/// Iterated action; `k` may be any integer thanks to the period `N+1`.
pub fn g_tensor_pow(
    lambda: &YoungDiagram,
    n_level: u32,
    k: i64,
) -> Result<YoungDiagram, GTensorError> {
    let k = k.rem_euclid(n_level as i64 + 1) as u32;
    let mut d = lambda.clone();
    for _ in 0..k {
        d = g_tensor(&d, n_level)?;
    }
    Ok(d)
}

/// Orbits of `Y(N)` (up to `depth` cells) under the action.
pub fn orbits(n_level: u32, depth: u32) -> Vec<Vec<YoungDiagram>> {
    let mut all: Vec<YoungDiagram> = Vec::new();
    for n in 0..=depth {
        all.extend(
            YoungDiagram::partitions_of(n)
                .into_iter()
                .filter(|d| d.corner_hook() <= n_level),
        );
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for d in all {
        if seen.contains(&d) {
            continue;
        }
        let mut orbit = vec![d.clone()];
        seen.insert(d.clone());
        let mut cur = d.clone();
        loop {
            cur = g_tensor(&cur, n_level).expect("orbit stays in Y(N)");
            if cur == d {
                break;
            }
            seen.insert(cur.clone());
            orbit.push(cur.clone());
        }
        out.push(orbit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeGraph;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec())
    }

    #[test]
    fn action_on_level_three() {
        assert_eq!(g_tensor(&YoungDiagram::empty(), 3).unwrap(), yd(&[1, 1, 1]));
        assert_eq!(g_tensor(&yd(&[1, 1, 1]), 3).unwrap(), yd(&[2, 2]));
        assert_eq!(g_tensor(&yd(&[3]), 3).unwrap(), YoungDiagram::empty());
    }

    #[test]
    fn rectangle_chain_closes() {
        // Applying the action N+1 times to the empty diagram walks through
        // every rectangle exactly once and returns.
        for n in 1..=5u32 {
            let mut seen = Vec::new();
            let mut d = YoungDiagram::empty();
            for _ in 0..=n {
                seen.push(d.clone());
                d = g_tensor(&d, n).unwrap();
            }
            assert_eq!(d, YoungDiagram::empty());
            seen.sort();
            let mut rects: Vec<_> = (0..=n).map(|k| YoungDiagram::rectangle(k, n)).collect();
            rects.sort();
            assert_eq!(seen, rects);
        }
    }

    #[test]
    fn order_divides_n_plus_one_everywhere() {
        for n in 1..=5u32 {
            let depth = 12.min((n + 1) * (n + 1) / 4);
            for orbit in orbits(n, depth) {
                assert!((n as usize + 1) % orbit.len() == 0);
                let back = g_tensor_pow(&orbit[0], n, n as i64 + 1).unwrap();
                assert_eq!(back, orbit[0]);
            }
        }
    }

    #[test]
    fn edge_preserving_on_truncations() {
        for n in 2..=5u32 {
            let depth = 12.min((n + 1) * (n + 1) / 4);
            let g = LatticeGraph::truncated(n, depth);
            for a in g.vertices() {
                for b in g.vertices() {
                    if a.size() + 1 != b.size() || !g.has_edge(a, b) {
                        continue;
                    }
                    let ga = g_tensor(a, n).unwrap();
                    let gb = g_tensor(b, n).unwrap();
                    assert!(
                        (ga.size() as i64 - gb.size() as i64).abs() == 1
                            && (ga.downs().contains(&gb) || gb.downs().contains(&ga)),
                        "edge {}-{} not preserved: {}-{}",
                        a,
                        b,
                        ga,
                        gb
                    );
                }
            }
        }
    }

    #[test]
    fn dihedral_relation_with_transpose() {
        // transpose . g . transpose = g^{-1} on Y(N)
        for n in 2..=5u32 {
            let depth = 12.min((n + 1) * (n + 1) / 4);
            for orbit in orbits(n, depth) {
                for d in orbit {
                    let lhs = g_tensor(&d.transpose(), n).unwrap().transpose();
                    let rhs = g_tensor_pow(&d, n, n as i64).unwrap(); // g^{-1} = g^N
                    assert_eq!(lhs, rhs, "failed at {} (N={})", d, n);
                }
            }
        }
    }

    #[test]
    fn two_orbits_at_level_three() {
        let os = orbits(3, 4);
        assert_eq!(os.len(), 2);
        let mut sizes: Vec<usize> = os.iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![4, 4]);
    }
}

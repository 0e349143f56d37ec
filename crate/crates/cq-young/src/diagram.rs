//! Young diagrams as weakly decreasing row lists, with hooks, contents,
//! cell moves and the diagonal reflection.

use std::fmt;

/// Row lengths, weakly decreasing, no trailing zeros; the empty diagram is
/// the empty list. Canonical form makes these usable as hash keys.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct YoungDiagram {
    rows: Vec<u32>,
}

/// A cell position, 1-indexed `(row, col)` like the usual matrix.
pub type Cell = (u32, u32);

impl YoungDiagram {
    pub fn empty() -> Self {
        YoungDiagram { rows: vec![] }
    }

    pub fn new(rows: impl Into<Vec<u32>>) -> Self {
        let mut rows = rows.into();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        assert!(
            rows.windows(2).all(|w| w[0] >= w[1]),
            "rows must be weakly decreasing: {:?}",
            rows
        );
        YoungDiagram { rows }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn num_rows(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn row(&self, i: u32) -> u32 {
        self.rows.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.0 >= 1 && c.1 >= 1 && self.row(c.0) >= c.1
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i as u32 + 1, j)))
    }

    /// Column length = number of rows with at least `j` cells.
    pub fn col_len(&self, j: u32) -> u32 {
        self.rows.iter().filter(|&&r| r >= j).count() as u32
    }

    /// Hook length of a cell: arm + leg + 1.
    pub fn hook(&self, c: Cell) -> u32 {
        assert!(self.contains_cell(c));
        let arm = self.row(c.0) - c.1;
        let leg = self.col_len(c.1) - c.0;
        arm + leg + 1
    }

    pub fn hooks(&self) -> Vec<(Cell, u32)> {
        self.cells().map(|c| (c, self.hook(c))).collect()
    }

    /// Content of a cell: `col - row`.
    pub fn content(c: Cell) -> i64 {
        c.1 as i64 - c.0 as i64
    }

    pub fn contents(&self) -> Vec<(Cell, i64)> {
        self.cells().map(|c| (c, Self::content(c))).collect()
    }

    /// The hook of the (1,1) cell; zero for the empty diagram. This is the
    /// statistic that cuts out the truncation `Y(N)`.
    pub fn corner_hook(&self) -> u32 {
        if self.is_empty() {
            0
        } else {
            self.hook((1, 1))
        }
    }

    /// Cells whose addition still gives a Young diagram.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.num_rows() + 1 {
            let here = self.row(i);
            let above = if i == 1 { u32::MAX } else { self.row(i - 1) };
            if here < above {
                out.push((i, here + 1));
            }
        }
        out
    }

    /// Cells whose removal still gives a Young diagram.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.num_rows() {
            let here = self.row(i);
            let below = self.row(i + 1);
            if here > below {
                out.push((i, here));
            }
        }
        out
    }

    pub fn add_cell(&self, c: Cell) -> YoungDiagram {
        assert!(self.addable_cells().contains(&c), "not addable: {:?}", c);
        let mut rows = self.rows.clone();
        if c.0 as usize > rows.len() {
            rows.push(1);
        } else {
            rows[c.0 as usize - 1] += 1;
        }
        YoungDiagram::new(rows)
    }

    pub fn remove_cell(&self, c: Cell) -> YoungDiagram {
        assert!(self.removable_cells().contains(&c), "not removable: {:?}", c);
        let mut rows = self.rows.clone();
        rows[c.0 as usize - 1] -= 1;
        YoungDiagram::new(rows)
    }

    /// All diagrams covering this one (one cell added).
    pub fn ups(&self) -> Vec<YoungDiagram> {
        self.addable_cells().iter().map(|&c| self.add_cell(c)).collect()
    }

    /// All diagrams covered by this one (one cell removed).
    pub fn downs(&self) -> Vec<YoungDiagram> {
        self.removable_cells()
            .iter()
            .map(|&c| self.remove_cell(c))
            .collect()
    }

    /// If `other = self + one cell`, that cell.
    pub fn added_cell_to(&self, other: &YoungDiagram) -> Option<Cell> {
        if other.size() != self.size() + 1 {
            return None;
        }
        self.addable_cells()
            .into_iter()
            .find(|&c| &self.add_cell(c) == other)
    }

    /// Reflection by the diagonal (conjugate partition). An involution.
    pub fn transpose(&self) -> YoungDiagram {
        if self.is_empty() {
            return YoungDiagram::empty();
        }
        let cols = self.rows[0];
        YoungDiagram::new((1..=cols).map(|j| self.col_len(j)).collect::<Vec<_>>())
    }

    /// The `k`-rows-by-`(N+1-k)`-columns rectangle: the k-th invertible
    /// object at level `N`; `k = 0` gives the empty diagram.
    pub fn rectangle(k: u32, n_level: u32) -> YoungDiagram {
        assert!(k <= n_level);
        if k == 0 {
            return YoungDiagram::empty();
        }
        YoungDiagram::new(vec![n_level + 1 - k; k as usize])
    }

    /// All partitions of exactly `n`.
    pub fn partitions_of(n: u32) -> Vec<YoungDiagram> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
            if n == 0 {
                out.push(YoungDiagram::new(prefix.clone()));
                return;
            }
            let hi = max.min(n);
            for first in (1..=hi).rev() {
                prefix.push(first);
                rec(n - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Compact label like `2,1` (empty diagram prints as `0`).
    pub fn label(&self) -> String {
        if self.is_empty() {
            "0".to_string()
        } else {
            self.rows
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec())
    }

    #[test]
    fn hooks_of_small_diagrams() {
        let h: std::collections::HashMap<Cell, u32> = yd(&[2, 1]).hooks().into_iter().collect();
        assert_eq!(h[&(1, 1)], 3);
        assert_eq!(h[&(1, 2)], 1);
        assert_eq!(h[&(2, 1)], 1);

        let h: std::collections::HashMap<Cell, u32> = yd(&[1]).hooks().into_iter().collect();
        assert_eq!(h[&(1, 1)], 1);

        let h: std::collections::HashMap<Cell, u32> = yd(&[2, 2]).hooks().into_iter().collect();
        assert_eq!(
            (h[&(1, 1)], h[&(1, 2)], h[&(2, 1)], h[&(2, 2)]),
            (3, 2, 2, 1)
        );
    }

    #[test]
    fn contents_of_small_diagrams() {
        let c: std::collections::HashMap<Cell, i64> = yd(&[2]).contents().into_iter().collect();
        assert_eq!((c[&(1, 1)], c[&(1, 2)]), (0, 1));
        let c: std::collections::HashMap<Cell, i64> = yd(&[1, 1]).contents().into_iter().collect();
        assert_eq!((c[&(1, 1)], c[&(2, 1)]), (0, -1));
        // the cell added to [2] to reach [2,1] has content -1
        let cell = yd(&[2]).added_cell_to(&yd(&[2, 1])).unwrap();
        assert_eq!(YoungDiagram::content(cell), -1);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(yd(&[3, 1]).transpose(), yd(&[2, 1, 1]));
        assert_eq!(yd(&[2, 2]).transpose(), yd(&[2, 2]));
        assert_eq!(yd(&[3, 1]).transpose().transpose(), yd(&[3, 1]));
        // rectangles reflect to complementary rectangles
        assert_eq!(
            YoungDiagram::rectangle(1, 3).transpose(),
            YoungDiagram::rectangle(3, 3)
        );
    }

    #[test]
    fn add_remove_roundtrip() {
        let d = yd(&[3, 2, 2]);
        for c in d.addable_cells() {
            assert_eq!(d.add_cell(c).remove_cell(c), d);
        }
        assert_eq!(d.addable_cells(), vec![(1, 4), (2, 3), (4, 1)]);
        assert_eq!(d.removable_cells(), vec![(1, 3), (3, 2)]);
    }

    #[test]
    fn partitions_count() {
        assert_eq!(YoungDiagram::partitions_of(0).len(), 1);
        assert_eq!(YoungDiagram::partitions_of(5).len(), 7);
        assert_eq!(YoungDiagram::partitions_of(8).len(), 22);
    }
}

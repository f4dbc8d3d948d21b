//! Lattice diagrams, partitions, reading order, pistols, legs, and the
//! triple/pair templates that drive the `inv` statistic.
//!
//! Cells are `(col, row)` points of `Z x Z`. Partitions are drawn in French
//! notation: the longest row sits at the bottom with its first cell at the
//! origin. Reading order walks rows top to bottom, each left to right.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};

/// A lattice cell. Orders by reading position: higher rows first, then by column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub col: i32,
    pub row: i32,
}

impl Cell {
    pub const fn new(col: i32, row: i32) -> Self {
        Cell { col, row }
    }

    /// Position key `(-row, col)`; defined for any lattice point.
    pub fn reading_key(self) -> (i32, i32) {
        (-self.row, self.col)
    }

    pub fn below(self) -> Cell {
        Cell::new(self.col, self.row - 1)
    }

    pub fn above(self) -> Cell {
        Cell::new(self.col, self.row + 1)
    }

    /// Reflection over `x = y`.
    pub fn transpose(self) -> Cell {
        Cell::new(self.row, self.col)
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.reading_key().cmp(&other.reading_key())
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// Weakly decreasing positive parts. Derived `Ord` is lexicographic on parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zero parts are dropped; anything not weakly decreasing is rejected.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `i`-th part, 0-based, with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.0.iter().filter(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    /// Origin-anchored containment: `self_i >= other_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        self.len() >= other.len() && other.0.iter().zip(&self.0).all(|(o, s)| s >= o)
    }

    /// All partitions of `n`, lexicographically largest first (`(n)` leads).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn partition_contains(mu: &Partition, nu: &Partition) -> bool {
    mu.contains(nu)
}

/// Inversion templates located by 0-based reading index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Template {
    /// `c`, `d` share a row; `e` sits directly below `c`.
    Triple { c: usize, d: usize, e: usize },
    /// The position below `c` is empty.
    PairCd { c: usize, d: usize },
    /// The position `c` is empty but the cell below it is present.
    PairDe { d: usize, e: usize },
}

impl Template {
    pub(crate) fn min_index(self) -> usize {
        match self {
            Template::Triple { c, .. } | Template::PairCd { c, .. } => c,
            Template::PairDe { d, .. } => d,
        }
    }

    pub(crate) fn max_index(self) -> usize {
        match self {
            Template::Triple { e, .. } | Template::PairDe { e, .. } => e,
            Template::PairCd { d, .. } => d,
        }
    }

    /// Whether the values at the template's cells form an inversion.
    /// Uses the weak/strict inequalities so repeated letters are handled.
    #[inline]
    pub(crate) fn is_inversion(self, w: &[u32]) -> bool {
        match self {
            Template::Triple { c, d, e } => {
                let (c, d, e) = (w[c], w[d], w[e]);
                (e < d && d < c) || (c <= e && e < d) || (d < c && c <= e)
            }
            Template::PairCd { c, d } => w[c] > w[d],
            Template::PairDe { d, e } => w[d] > w[e],
        }
    }
}

/// The cell-level view of a diagram's inversion templates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleTemplates {
    pub triples: Vec<(Cell, Cell, Cell)>,
    pub pairs_cd: Vec<(Cell, Cell)>,
    pub pairs_de: Vec<(Cell, Cell)>,
    pub max_inv: usize,
}

/// A finite set of lattice cells with its reading order and derived tables.
#[derive(Clone, Debug)]
pub struct Diagram {
    cells: Vec<Cell>,
    lookup: HashMap<Cell, usize>,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    legs: Vec<usize>,
    pistol_end: Vec<usize>,
    pistol_reach: Vec<usize>,
    templates: Vec<Template>,
    closing_at: Vec<Vec<usize>>,
    opening_at: Vec<Vec<usize>>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells
    }
}

impl Eq for Diagram {}

impl std::hash::Hash for Diagram {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cells.hash(state);
    }
}

impl Diagram {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for c in cells {
            if !set.insert(c) {
                return Err(Error::DuplicateCell(c.col, c.row));
            }
        }
        Ok(Self::build(set.into_iter().collect()))
    }

    pub fn empty() -> Self {
        Self::build(Vec::new())
    }

    /// French-notation diagram: row `y` holds `parts[y]` cells starting at column 0.
    pub fn from_partition(lambda: &Partition) -> Self {
        let cells = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(y, &len)| (0..len).map(move |x| Cell::new(x as i32, y as i32)));
        Self::new(cells).expect("partition cells are distinct")
    }

    fn build(cells: Vec<Cell>) -> Self {
        let n = cells.len();
        let lookup: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let below: Vec<Option<usize>> = cells.iter().map(|c| lookup.get(&c.below()).copied()).collect();
        let above: Vec<Option<usize>> = cells.iter().map(|c| lookup.get(&c.above()).copied()).collect();
        let legs = cells
            .iter()
            .map(|c| {
                cells
                    .iter()
                    .filter(|d| d.col == c.col && d.row > c.row)
                    .count()
            })
            .collect();

        let keys: Vec<(i32, i32)> = cells.iter().map(|c| c.reading_key()).collect();
        let pistol_end: Vec<usize> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let limit = c.below().reading_key();
                let upto = keys.partition_point(|k| *k <= limit);
                upto.saturating_sub(1).max(i)
            })
            .collect();
        let mut pistol_reach = Vec::with_capacity(n);
        let mut best = 0;
        for &end in &pistol_end {
            best = best.max(end);
            pistol_reach.push(best);
        }

        let templates = Self::enumerate_templates(&cells, &lookup);
        let mut closing_at = vec![Vec::new(); n];
        let mut opening_at = vec![Vec::new(); n];
        for (t, tpl) in templates.iter().enumerate() {
            closing_at[tpl.max_index()].push(t);
            opening_at[tpl.min_index()].push(t);
        }

        Diagram {
            cells,
            lookup,
            below,
            above,
            legs,
            pistol_end,
            pistol_reach,
            templates,
            closing_at,
            opening_at,
        }
    }

    fn enumerate_templates(cells: &[Cell], lookup: &HashMap<Cell, usize>) -> Vec<Template> {
        let rows: BTreeSet<i32> = cells.iter().map(|c| c.row).collect();
        let mut out = Vec::new();
        for &y in rows.iter().rev() {
            let row_cols: BTreeSet<i32> = cells.iter().filter(|c| c.row == y).map(|c| c.col).collect();
            let below_cols: BTreeSet<i32> =
                cells.iter().filter(|c| c.row == y - 1).map(|c| c.col).collect();
            let candidates: BTreeSet<i32> = row_cols.union(&below_cols).copied().collect();
            for &xc in &candidates {
                for &xd in row_cols.range(xc + 1..) {
                    let d = lookup[&Cell::new(xd, y)];
                    let c = lookup.get(&Cell::new(xc, y)).copied();
                    let e = lookup.get(&Cell::new(xc, y - 1)).copied();
                    match (c, e) {
                        (Some(c), Some(e)) => out.push(Template::Triple { c, d, e }),
                        (None, Some(e)) => out.push(Template::PairDe { d, e }),
                        (Some(c), None) => out.push(Template::PairCd { c, d }),
                        (None, None) => {}
                    }
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells in reading order.
    pub fn reading_order(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.lookup.contains_key(&cell)
    }

    /// 0-based position of `cell` in reading order.
    pub fn position(&self, cell: Cell) -> Option<usize> {
        self.lookup.get(&cell).copied()
    }

    pub fn is_subset_of(&self, other: &Diagram) -> bool {
        self.cells.iter().all(|&c| other.contains(c))
    }

    pub fn conjugate(&self) -> Diagram {
        Diagram::new(self.cells.iter().map(|c| c.transpose())).expect("transpose is injective")
    }

    /// `Some(λ)` when this is exactly the French diagram of a partition.
    pub fn as_partition(&self) -> Option<Partition> {
        let top = self.cells.iter().map(|c| c.row).max()?;
        let parts: Vec<usize> = (0..=top)
            .map(|y| self.cells.iter().filter(|c| c.row == y).count())
            .collect();
        let lambda = Partition::new(parts).ok()?;
        (Diagram::from_partition(&lambda) == *self).then_some(lambda)
    }

    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.position(cell)
            .map(|i| self.legs[i])
            .ok_or(Error::CellNotInDiagram(cell.col, cell.row))
    }

    /// Pistols as 1-based reading-index intervals, one per cell in reading order.
    ///
    /// A pistol runs from its cell to the lattice position directly below,
    /// inclusive, whether or not that position is itself a cell.
    pub fn pistols(&self) -> Vec<RangeInclusive<usize>> {
        self.pistol_end
            .iter()
            .enumerate()
            .map(|(i, &end)| i + 1..=end + 1)
            .collect()
    }

    pub fn max_pistol_len(&self) -> usize {
        self.pistol_end
            .iter()
            .enumerate()
            .map(|(i, &end)| end - i + 1)
            .max()
            .unwrap_or(0)
    }

    /// Whether the 1-based indices all lie in one pistol. Empty sets are pistoled.
    pub fn is_pistoled(&self, indices: &[usize]) -> bool {
        let (Some(&lo), Some(&hi)) = (indices.iter().min(), indices.iter().max()) else {
            return true;
        };
        if lo == 0 || hi > self.len() {
            return false;
        }
        self.span_pistoled(lo - 1, hi - 1)
    }

    /// 0-based: is `[lo, hi]` inside a single pistol?
    #[inline]
    pub(crate) fn span_pistoled(&self, lo: usize, hi: usize) -> bool {
        self.pistol_reach[lo] >= hi
    }

    #[inline]
    pub(crate) fn below_index(&self, i: usize) -> Option<usize> {
        self.below[i]
    }

    #[inline]
    pub(crate) fn above_index(&self, i: usize) -> Option<usize> {
        self.above[i]
    }

    #[inline]
    pub(crate) fn leg_at(&self, i: usize) -> usize {
        self.legs[i]
    }

    pub(crate) fn templates(&self) -> &[Template] {
        &self.templates
    }

    /// Templates whose largest reading index is `i`.
    pub(crate) fn templates_closing_at(&self, i: usize) -> impl Iterator<Item = Template> + '_ {
        self.closing_at[i].iter().map(|&t| self.templates[t])
    }

    /// Templates whose smallest reading index is `i`.
    pub(crate) fn templates_opening_at(&self, i: usize) -> impl Iterator<Item = Template> + '_ {
        self.opening_at[i].iter().map(|&t| self.templates[t])
    }

    /// Cells that have a cell directly below them.
    pub fn descent_capable(&self) -> Diagram {
        Self::build(
            self.cells
                .iter()
                .zip(&self.below)
                .filter(|(_, b)| b.is_some())
                .map(|(&c, _)| c)
                .collect(),
        )
    }

    pub fn triple_templates(&self) -> TripleTemplates {
        let mut out = TripleTemplates {
            triples: Vec::new(),
            pairs_cd: Vec::new(),
            pairs_de: Vec::new(),
            max_inv: self.templates.len(),
        };
        let cell = |i: usize| self.cells[i];
        for t in &self.templates {
            match *t {
                Template::Triple { c, d, e } => out.triples.push((cell(c), cell(d), cell(e))),
                Template::PairCd { c, d } => out.pairs_cd.push((cell(c), cell(d))),
                Template::PairDe { d, e } => out.pairs_de.push((cell(d), cell(e))),
            }
        }
        out
    }

    /// `m(δ)`: the number of inversion templates.
    pub fn max_inv(&self) -> usize {
        self.templates.len()
    }

    /// Sub-diagram selected by a bitmask over reading positions.
    pub(crate) fn submask(&self, mask: u64) -> Diagram {
        Self::build(
            self.cells
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect(),
        )
    }

    /// Bitmask over this diagram's reading positions of the cells of `sub`.
    pub(crate) fn mask_of(&self, sub: &Diagram) -> Result<u64> {
        let mut mask = 0u64;
        for c in sub.cells() {
            let i = self.position(*c).ok_or(Error::NotSubdiagram)?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn rows(&self) -> Option<RangeInclusive<i32>> {
        let lo = self.cells.iter().map(|c| c.row).min()?;
        let hi = self.cells.iter().map(|c| c.row).max()?;
        Some(lo..=hi)
    }

    pub fn columns(&self) -> BTreeSet<i32> {
        self.cells.iter().map(|c| c.col).collect()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(lambda) = self.as_partition() {
            let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
            return write!(f, "p:{}", parts.join(","));
        }
        let cells: Vec<String> = self.cells.iter().map(|c| format!("{},{}", c.col, c.row)).collect();
        write!(f, "c:{}", cells.join(";"))
    }
}

pub fn diagram_from_partition(lambda: &Partition) -> Diagram {
    Diagram::from_partition(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cells(list: &[(i32, i32)]) -> Diagram {
        Diagram::new(list.iter().map(|&(x, y)| Cell::new(x, y))).unwrap()
    }

    /// The 13-cell diagram drawn with four highlighted pistols.
    fn thirteen_cell() -> Diagram {
        cells(&[
            (1, 3), (2, 3),
            (0, 2), (1, 2), (2, 2), (3, 2),
            (1, 1), (2, 1), (3, 1),
            (0, 0), (1, 0), (2, 0), (4, 0),
        ])
    }

    #[test]
    fn partition_diagram_4322() {
        let d = Diagram::from_partition(&p(&[4, 3, 2, 2]));
        assert_eq!(d.len(), 11);
        for x in 0..4 {
            assert!(d.contains(Cell::new(x, 0)));
        }
        assert!(!d.contains(Cell::new(4, 0)));
        let top: Vec<Cell> = d.cells().iter().filter(|c| c.row == 3).copied().collect();
        assert_eq!(top, vec![Cell::new(0, 3), Cell::new(1, 3)]);
    }

    #[test]
    fn small_partition_diagrams() {
        assert_eq!(Diagram::from_partition(&p(&[1])).cells(), &[Cell::new(0, 0)]);
        let d = Diagram::from_partition(&p(&[3, 3]));
        assert_eq!(d.len(), 6);
        assert!((0..3).all(|x| (0..2).all(|y| d.contains(Cell::new(x, y)))));
    }

    #[test]
    fn reading_order_of_3_2() {
        let d = Diagram::from_partition(&p(&[3, 2]));
        let want = [(0, 1), (1, 1), (0, 0), (1, 0), (2, 0)].map(|(x, y)| Cell::new(x, y));
        assert_eq!(d.reading_order(), &want);
    }

    #[test]
    fn single_row_reads_left_to_right() {
        let d = cells(&[(2, 5), (0, 5), (1, 5)]);
        assert_eq!(d.reading_order(), &[Cell::new(0, 5), Cell::new(1, 5), Cell::new(2, 5)]);
    }

    #[test]
    fn pistols_of_3_3() {
        let d = Diagram::from_partition(&p(&[3, 3]));
        assert_eq!(d.pistols(), vec![1..=4, 2..=5, 3..=6, 4..=6, 5..=6, 6..=6]);
        assert_eq!(d.max_pistol_len(), 4);
    }

    #[test]
    fn highlighted_pistols_of_thirteen_cell_diagram() {
        let d = thirteen_cell();
        assert_eq!(d.len(), 13);
        let ps = d.pistols();
        for want in [3..=6, 4..=7, 5..=8, 6..=9] {
            assert!(ps.contains(&want), "missing {want:?}");
        }
        assert!(d.is_pistoled(&[3, 6]));
        assert!(d.is_pistoled(&[7, 9]));
        assert!(!d.is_pistoled(&[3, 7]));
    }

    #[test]
    fn single_cell_pistol() {
        let d = cells(&[(0, 0)]);
        assert_eq!(d.pistols(), vec![1..=1]);
    }

    #[test]
    fn pistols_of_scattered_word_3214() {
        // Cells read as 3214 with no descents.
        let d = cells(&[(1, 2), (0, 1), (1, 0), (2, 0)]);
        assert!(d.is_pistoled(&[1, 2]));
        assert!(d.is_pistoled(&[3, 4]));
        assert!(!d.is_pistoled(&[2, 3]));
    }

    #[test]
    fn legs() {
        let d = Diagram::from_partition(&p(&[2, 1, 1]));
        assert_eq!(d.leg(Cell::new(0, 0)).unwrap(), 2);
        assert_eq!(d.leg(Cell::new(0, 2)).unwrap(), 0);
        assert_eq!(d.leg(Cell::new(1, 0)).unwrap(), 0);
        assert_eq!(d.leg(Cell::new(5, 5)), Err(Error::CellNotInDiagram(5, 5)));
    }

    #[test]
    fn templates_of_2_2() {
        let t = Diagram::from_partition(&p(&[2, 2])).triple_templates();
        assert_eq!(t.triples, vec![(Cell::new(0, 1), Cell::new(1, 1), Cell::new(0, 0))]);
        assert_eq!(t.pairs_cd, vec![(Cell::new(0, 0), Cell::new(1, 0))]);
        assert!(t.pairs_de.is_empty());
        assert_eq!(t.max_inv, 2);
    }

    #[test]
    fn templates_of_column_and_4_2_2() {
        let col = Diagram::from_partition(&p(&[1, 1, 1]));
        assert_eq!(col.max_inv(), 0);
        let t = Diagram::from_partition(&p(&[4, 2, 2])).triple_templates();
        let bottom = t.pairs_cd.iter().filter(|(c, _)| c.row == 0).count();
        assert_eq!(bottom, 6);
        assert_eq!(t.max_inv, t.triples.len() + t.pairs_cd.len() + t.pairs_de.len());
    }

    #[test]
    fn templates_span_wide_gaps() {
        // c and d two columns apart still form a triple.
        let d = cells(&[(0, 1), (2, 1), (0, 0)]);
        let t = d.triple_templates();
        assert_eq!(t.triples, vec![(Cell::new(0, 1), Cell::new(2, 1), Cell::new(0, 0))]);
        // An empty c position above a present e gives a d/e pair.
        let d = cells(&[(1, 1), (0, 0)]);
        assert_eq!(d.triple_templates().pairs_de, vec![(Cell::new(1, 1), Cell::new(0, 0))]);
    }

    #[test]
    fn containment() {
        assert!(partition_contains(&p(&[4, 3, 3, 2]), &p(&[3, 3, 3])));
        assert!(!partition_contains(&p(&[3, 3]), &p(&[4])));
        assert!(partition_contains(&p(&[3, 3, 3]), &p(&[3, 3, 3])));
        assert!(!partition_contains(&p(&[3, 3]), &p(&[3, 3, 3])));
    }

    #[test]
    fn partitions_enumerated_largest_first() {
        let all = Partition::all(4);
        let want: Vec<Partition> = [&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]]
            .iter()
            .map(|x| p(x))
            .collect();
        assert_eq!(all, want);
        assert_eq!(Partition::all(8).len(), 22);
        assert_eq!(Partition::all(0), vec![Partition::default()]);
    }

    #[test]
    fn invalid_inputs() {
        assert!(Partition::new(vec![3, 4]).is_err());
        assert!(Diagram::new([Cell::new(0, 0), Cell::new(0, 0)]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn conjugation() {
        let lambda = p(&[4, 2, 1]);
        assert_eq!(lambda.conjugate(), p(&[3, 2, 1, 1]));
        let d = Diagram::from_partition(&lambda);
        assert_eq!(d.conjugate(), Diagram::from_partition(&lambda.conjugate()));
        assert_eq!(d.conjugate().conjugate(), d);
        assert_eq!(d.as_partition(), Some(lambda));
        assert_eq!(cells(&[(0, 0), (1, 1)]).as_partition(), None);
    }
}

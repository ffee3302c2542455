//! Young diagrams and skew diagrams.
//!
//! Cells are addressed 1-based as `(row, col)`, rows counted from the top.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root::Rank;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellPos {
    pub row: usize,
    pub col: usize,
}

impl CellPos {
    pub fn new(row: usize, col: usize) -> CellPos {
        CellPos { row, col }
    }

    /// `self` lies weakly north-east of `other` and differs from it.
    pub fn strictly_higher_than(&self, other: &CellPos) -> bool {
        self != other && self.row <= other.row && self.col >= other.col
    }
}

impl fmt::Display for CellPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing list of positive row lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Partition> {
        let mut rows = rows;
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.contains(&0) {
            return Err(Error::Structure(format!(
                "partition {rows:?} has an interior zero row"
            )));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Structure(format!(
                "partition {rows:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `r` (1-based); zero past the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.rows.get(r - 1).copied().unwrap_or(0)
    }

    /// Length of column `c` (1-based).
    pub fn col_len(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&len| len >= c).count()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, cell: CellPos) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn cells(&self) -> Vec<CellPos> {
        SkewShape::straight(self.clone()).cells()
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            rows: (1..=self.num_cols()).map(|c| self.col_len(c)).collect(),
        }
    }

    /// `self ⊆ other` as diagrams.
    pub fn fits_in(&self, other: &Partition) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(r, &len)| len <= other.row_len(r + 1))
    }

    /// The `(m,n)`-hook condition: row `m+1` has at most `n` cells.
    pub fn is_hook(&self, rank: Rank) -> bool {
        self.row_len(rank.m() + 1) <= rank.n()
    }

    /// Contains the full `m × n` rectangle.
    pub fn has_full_body(&self, rank: Rank) -> bool {
        self.row_len(rank.m()) >= rank.n()
    }

    pub fn corners(&self) -> Vec<CellPos> {
        SkewShape::straight(self.clone()).corners()
    }

    pub fn cocorners(&self) -> Vec<CellPos> {
        SkewShape::straight(self.clone()).cocorners()
    }

    pub fn is_addable(&self, at: CellPos) -> bool {
        at.row >= 1
            && at.row <= self.rows.len() + 1
            && at.col == self.row_len(at.row) + 1
            && (at.row == 1 || self.row_len(at.row - 1) > self.row_len(at.row))
    }

    pub fn is_removable(&self, at: CellPos) -> bool {
        at.row >= 1
            && at.row <= self.rows.len()
            && at.col == self.row_len(at.row)
            && self.row_len(at.row + 1) < at.col
    }

    pub fn add_box(&self, at: CellPos) -> Result<Partition> {
        if !self.is_addable(at) {
            return Err(Error::arg(format!("{at} is not a co-corner of {self}")));
        }
        let mut rows = self.rows.clone();
        if at.row > rows.len() {
            rows.push(1);
        } else {
            rows[at.row - 1] += 1;
        }
        Ok(Partition { rows })
    }

    pub fn remove_box(&self, at: CellPos) -> Result<Partition> {
        if !self.is_removable(at) {
            return Err(Error::arg(format!("{at} is not a corner of {self}")));
        }
        let mut rows = self.rows.clone();
        rows[at.row - 1] -= 1;
        if rows[at.row - 1] == 0 {
            rows.pop();
        }
        Ok(Partition { rows })
    }

    /// Splits the cells of a hook diagram into body, arm and leg.
    pub fn arm_body_leg(&self, rank: Rank) -> Result<BodyArmLeg> {
        if !self.is_hook(rank) {
            return Err(Error::arg(format!("{self} is not a ({rank})-hook diagram")));
        }
        let mut parts = BodyArmLeg::default();
        for cell in self.cells() {
            if cell.row <= rank.m() && cell.col <= rank.n() {
                parts.body.push(cell);
            } else if cell.row <= rank.m() {
                parts.arm.push(cell);
            } else {
                parts.leg.push(cell);
            }
        }
        Ok(parts)
    }

    /// All partitions of `k`, in reverse lexicographic order.
    pub fn all_of_size(k: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { rows: cur.clone() });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                go(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// All `(m,n)`-hook diagrams with exactly `k` cells.
    pub fn hooks_of_size(k: usize, rank: Rank) -> Vec<Partition> {
        Partition::all_of_size(k)
            .into_iter()
            .filter(|p| p.is_hook(rank))
            .collect()
    }

    /// All hook diagrams with at most `k` cells, smallest first.
    pub fn hooks_up_to(k: usize, rank: Rank) -> Vec<Partition> {
        (0..=k)
            .flat_map(|size| Partition::hooks_of_size(size, rank))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let rows = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad row length `{part}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows).map_err(|e| Error::parse(e.to_string()))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<usize>::deserialize(d)?;
        Partition::new(rows).map_err(serde::de::Error::custom)
    }
}

/// The three regions of a hook diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BodyArmLeg {
    pub body: Vec<CellPos>,
    pub arm: Vec<CellPos>,
    pub leg: Vec<CellPos>,
}

/// `outer / inner`, with `inner ⊆ outer`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape> {
        if !inner.fits_in(&outer) {
            return Err(Error::Structure(format!(
                "inner {inner} does not fit in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> SkewShape {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.num_rows()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.num_cols()
    }

    /// First and last occupied column of row `r` as `(inner_len, outer_len)`.
    pub fn row_bounds(&self, r: usize) -> (usize, usize) {
        (self.inner.row_len(r), self.outer.row_len(r))
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, cell: CellPos) -> bool {
        self.outer.contains(cell) && !self.inner.contains(cell)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<CellPos> {
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=self.num_rows() {
            let (lo, hi) = self.row_bounds(r);
            out.extend((lo + 1..=hi).map(|c| CellPos::new(r, c)));
        }
        out
    }

    /// Rows (top to bottom) occupied in column `c`.
    pub fn column_rows(&self, c: usize) -> std::ops::RangeInclusive<usize> {
        self.inner.col_len(c) + 1..=self.outer.col_len(c)
    }

    /// Cells of the skew diagram with no cell of the diagram to the right or
    /// below. These are exactly the removable cells of `outer` outside `inner`.
    pub fn corners(&self) -> Vec<CellPos> {
        self.cells()
            .into_iter()
            .filter(|&cell| self.outer.is_removable(cell))
            .collect()
    }

    /// Positions where one cell can be added to `outer`, keeping `inner`.
    pub fn cocorners(&self) -> Vec<CellPos> {
        (1..=self.outer.num_rows() + 1)
            .map(|r| CellPos::new(r, self.outer.row_len(r) + 1))
            .filter(|&cell| self.outer.is_addable(cell))
            .collect()
    }

    pub fn add_box(&self, at: CellPos) -> Result<SkewShape> {
        Ok(SkewShape {
            outer: self.outer.add_box(at)?,
            inner: self.inner.clone(),
        })
    }

    pub fn remove_box(&self, at: CellPos) -> Result<SkewShape> {
        if self.inner.contains(at) {
            return Err(Error::arg(format!("{at} is not a cell of {self}")));
        }
        let outer = self.outer.remove_box(at)?;
        SkewShape::new(outer, self.inner.clone())
    }
}

impl From<Partition> for SkewShape {
    fn from(p: Partition) -> SkewShape {
        SkewShape::straight(p)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((outer, inner)) => SkewShape::new(outer.parse()?, inner.parse()?)
                .map_err(|e| Error::parse(e.to_string())),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            outer: Partition,
            #[serde(default)]
            inner: Partition,
        }
        let raw = Raw::deserialize(d)?;
        SkewShape::new(raw.outer, raw.inner).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cells(v: &[(usize, usize)]) -> Vec<CellPos> {
        v.iter().map(|&(r, c)| CellPos::new(r, c)).collect()
    }

    fn rank(m: usize, n: usize) -> Rank {
        Rank::new(m, n).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("3,2,1").rows(), &[3, 2, 1]);
        assert_eq!(p("3,2,1").to_string(), "3,2,1");
        assert_eq!(p("").to_string(), "0");
        assert_eq!(p("0"), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        let s: SkewShape = "3,2,1/1".parse().unwrap();
        assert_eq!(s.to_string(), "3,2,1/1");
        assert!("1/2".parse::<SkewShape>().is_err());
    }

    #[test]
    fn json_forms() {
        let s: SkewShape = "2,2/1".parse().unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"outer":[2,2],"inner":[1]}"#);
        let back: SkewShape = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let bare: SkewShape = serde_json::from_str(r#"{"outer":[3,1]}"#).unwrap();
        assert!(bare.is_straight());
        assert!(serde_json::from_str::<SkewShape>(r#"{"outer":[1],"inner":[2]}"#).is_err());
    }

    #[test]
    fn hook_examples() {
        assert!(p("3,2,1").is_hook(rank(2, 2)));
        assert!(!p("2,2").is_hook(rank(1, 1)));
        assert!(Partition::empty().is_hook(rank(1, 1)));
        assert!(p("5,5,1,1,1").is_hook(rank(2, 1)));
    }

    #[test]
    fn corner_examples() {
        assert_eq!(p("3,2,1").corners(), cells(&[(1, 3), (2, 2), (3, 1)]));
        assert_eq!(p("1").corners(), cells(&[(1, 1)]));
        assert!(Partition::empty().corners().is_empty());
    }

    #[test]
    fn cocorner_examples() {
        assert_eq!(
            p("3,2,1").cocorners(),
            cells(&[(1, 4), (2, 3), (3, 2), (4, 1)])
        );
        assert_eq!(Partition::empty().cocorners(), cells(&[(1, 1)]));
        let s: SkewShape = "2,2/1".parse().unwrap();
        assert_eq!(s.cocorners(), cells(&[(1, 3), (3, 1)]));
    }

    #[test]
    fn skew_corners_are_outer_removable() {
        let s: SkewShape = "3,3,1/2,1".parse().unwrap();
        assert_eq!(s.corners(), cells(&[(2, 3), (3, 1)]));
        let s: SkewShape = "2,1/1,1".parse().unwrap();
        assert_eq!(s.corners(), cells(&[(1, 2)]));
    }

    #[test]
    fn add_remove_examples() {
        let y = p("3,2,1");
        assert_eq!(y.add_box(CellPos::new(2, 3)).unwrap(), p("3,3,1"));
        assert_eq!(y.remove_box(CellPos::new(3, 1)).unwrap(), p("3,2"));
        let at = CellPos::new(1, 4);
        assert_eq!(y.add_box(at).unwrap().remove_box(at).unwrap(), y);
        assert!(y.add_box(CellPos::new(2, 2)).is_err());
        assert!(y.remove_box(CellPos::new(1, 2)).is_err());
    }

    #[test]
    fn add_remove_inverse_up_to_nine_cells() {
        for k in 0..=9 {
            for y in Partition::all_of_size(k) {
                for c in y.corners() {
                    assert_eq!(y.remove_box(c).unwrap().add_box(c).unwrap(), y);
                }
                for c in y.cocorners() {
                    assert_eq!(y.add_box(c).unwrap().remove_box(c).unwrap(), y);
                }
            }
        }
    }

    #[test]
    fn cocorners_match_brute_force() {
        // Brute force: scan every position in a bounding box, keep those whose
        // addition to the outer diagram leaves a skew diagram in which the new
        // cell has nothing to its right or below.
        for k in 0..=7 {
            for outer in Partition::all_of_size(k) {
                for j in 0..=k {
                    for inner in Partition::all_of_size(j) {
                        let Ok(s) = SkewShape::new(outer.clone(), inner) else {
                            continue;
                        };
                        let mut brute = Vec::new();
                        for r in 1..=outer.num_rows() + 1 {
                            for c in 1..=outer.num_cols() + 1 {
                                let cell = CellPos::new(r, c);
                                if outer.contains(cell) {
                                    continue;
                                }
                                let Ok(bigger) = Partition::new({
                                    let mut rows = outer.rows().to_vec();
                                    if r > rows.len() {
                                        rows.resize(r, 0);
                                    }
                                    rows[r - 1] += 1;
                                    rows
                                }) else {
                                    continue;
                                };
                                if !bigger.contains(cell) {
                                    continue;
                                }
                                let grown = SkewShape::new(bigger, s.inner().clone()).unwrap();
                                let right = CellPos::new(r, c + 1);
                                let below = CellPos::new(r + 1, c);
                                if !grown.contains(right) && !grown.contains(below) {
                                    brute.push(cell);
                                }
                            }
                        }
                        brute.sort();
                        let mut fast = s.cocorners();
                        fast.sort();
                        assert_eq!(fast, brute, "shape {s}");
                    }
                }
            }
        }
    }

    #[test]
    fn corners_match_definition_on_straight_shapes() {
        for k in 0..=8 {
            for y in Partition::all_of_size(k) {
                let set: BTreeSet<_> = y.cells().into_iter().collect();
                let brute: Vec<_> = y
                    .cells()
                    .into_iter()
                    .filter(|c| {
                        !set.contains(&CellPos::new(c.row, c.col + 1))
                            && !set.contains(&CellPos::new(c.row + 1, c.col))
                    })
                    .collect();
                assert_eq!(y.corners(), brute);
            }
        }
    }

    #[test]
    fn arm_body_leg_examples() {
        let parts = p("3,2,1").arm_body_leg(rank(2, 2)).unwrap();
        assert_eq!(parts.body.len(), 4);
        assert_eq!(parts.arm, cells(&[(1, 3)]));
        assert_eq!(parts.leg, cells(&[(3, 1)]));

        let parts = p("2,1").arm_body_leg(rank(2, 2)).unwrap();
        assert!(parts.arm.is_empty() && parts.leg.is_empty());

        let rect = p("2,2");
        let parts = rect.arm_body_leg(rank(2, 2)).unwrap();
        assert_eq!(parts.body.len(), 4);
        assert!(rect.has_full_body(rank(2, 2)));
        assert!(!p("2,1").has_full_body(rank(2, 2)));

        assert!(p("2,2").arm_body_leg(rank(1, 1)).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|k| Partition::all_of_size(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    }
}

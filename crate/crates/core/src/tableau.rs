//! Fillings of skew diagrams by super letters, and their readings.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::root::{Letter, Rank, Weight};
use crate::shape::{CellPos, Partition, SkewShape};

/// A finite sequence of letters, i.e. an element of `B^{⊗N}`.
pub type Word = Vec<Letter>;

/// A listing of the cells of a shape; reading a tableau along it gives a word.
pub type Reading = Vec<CellPos>;

pub fn format_word(w: &[Letter]) -> String {
    let parts: Vec<String> = w.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn parse_word(s: &str) -> Result<Word> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|part| part.parse()).collect()
}

pub fn word_weight(rank: Rank, w: &[Letter]) -> Result<Weight> {
    let mut coeffs = vec![0; rank.size()];
    for &a in w {
        coeffs[rank.index_of(a)?] += 1;
    }
    Weight::from_coeffs(rank, coeffs)
}

/// A skew shape together with one letter per cell. Row `r` of `rows` holds
/// the entries of columns `inner_r + 1 ..= outer_r`, left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        let nrows = shape.num_rows();
        if rows.len() > nrows && rows[nrows..].iter().any(|r| !r.is_empty()) {
            return Err(Error::Structure(format!(
                "more rows than shape {shape} allows"
            )));
        }
        let mut rows = rows;
        rows.resize(nrows, Vec::new());
        for (i, row) in rows.iter().enumerate() {
            let (lo, hi) = shape.row_bounds(i + 1);
            if row.len() != hi - lo {
                return Err(Error::Structure(format!(
                    "row {} of shape {shape} needs {} entries, got {}",
                    i + 1,
                    hi - lo,
                    row.len()
                )));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Straight-shape tableau from its rows; the shape is read off the row lengths.
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<Tableau> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Tableau::new(SkewShape::straight(shape), rows)
    }

    pub fn from_cells(shape: SkewShape, entries: &HashMap<CellPos, Letter>) -> Result<Tableau> {
        if entries.len() != shape.size() {
            return Err(Error::Structure(format!(
                "{} entries for a shape with {} cells",
                entries.len(),
                shape.size()
            )));
        }
        let mut rows = Vec::with_capacity(shape.num_rows());
        for r in 1..=shape.num_rows() {
            let (lo, hi) = shape.row_bounds(r);
            let row = (lo + 1..=hi)
                .map(|c| {
                    entries
                        .get(&CellPos::new(r, c))
                        .copied()
                        .ok_or_else(|| Error::Structure(format!("no entry at ({r},{c})")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Tableau::new(shape, rows)
    }

    pub fn empty() -> Tableau {
        Tableau {
            shape: SkewShape::default(),
            rows: Vec::new(),
        }
    }

    /// A single column, read top to bottom.
    pub fn column(letters: &[Letter]) -> Tableau {
        Tableau::from_rows(letters.iter().map(|&a| vec![a]).collect())
            .expect("a column always has a valid shape")
    }

    /// A single row, read left to right.
    pub fn row(letters: &[Letter]) -> Tableau {
        if letters.is_empty() {
            return Tableau::empty();
        }
        Tableau::from_rows(vec![letters.to_vec()]).expect("a row always has a valid shape")
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries by row; inner cells are omitted.
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn get(&self, cell: CellPos) -> Option<Letter> {
        if !self.shape.contains(cell) {
            return None;
        }
        let lo = self.shape.inner().row_len(cell.row);
        Some(self.rows[cell.row - 1][cell.col - lo - 1])
    }

    pub(crate) fn set(&mut self, cell: CellPos, a: Letter) {
        let lo = self.shape.inner().row_len(cell.row);
        self.rows[cell.row - 1][cell.col - lo - 1] = a;
    }

    /// Letters of column `c`, top to bottom.
    pub fn column_entries(&self, c: usize) -> Vec<Letter> {
        self.shape
            .column_rows(c)
            .map(|r| self.get(CellPos::new(r, c)).expect("cell in shape"))
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (CellPos, Letter)> + '_ {
        self.shape
            .cells()
            .into_iter()
            .map(move |cell| (cell, self.get(cell).unwrap()))
    }

    /// Row and column conditions on adjacent cells.
    pub fn is_semistandard(&self) -> bool {
        self.entries().all(|(cell, a)| {
            let right = self.get(CellPos::new(cell.row, cell.col + 1));
            let below = self.get(CellPos::new(cell.row + 1, cell.col));
            right.is_none_or(|b| a.row_ok(b)) && below.is_none_or(|b| a.column_ok(b))
        })
    }

    /// Semistandard with every letter drawn from the alphabet of `rank`.
    pub fn validate_semistandard(&self, rank: Rank) -> bool {
        self.entries().all(|(_, a)| rank.contains(a)) && self.is_semistandard()
    }

    pub fn weight(&self, rank: Rank) -> Result<Weight> {
        word_weight(rank, &self.japanese_reading())
    }

    pub fn japanese_reading(&self) -> Word {
        self.read_unchecked(&japanese_listing(&self.shape))
    }

    pub fn arabic_reading(&self) -> Word {
        self.read_unchecked(&arabic_listing(&self.shape))
    }

    fn read_unchecked(&self, listing: &[CellPos]) -> Word {
        listing
            .iter()
            .map(|&cell| self.get(cell).unwrap())
            .collect()
    }

    /// The word obtained by reading cells in the order of `listing`.
    pub fn read(&self, listing: &[CellPos]) -> Result<Word> {
        check_listing(listing, &self.shape)?;
        Ok(self.read_unchecked(listing))
    }

    /// Inverse of [`Tableau::read`]: fill `shape` by placing `word[k]` at `listing[k]`.
    pub fn from_reading(
        shape: &SkewShape,
        listing: &[CellPos],
        word: &[Letter],
    ) -> Result<Tableau> {
        check_listing(listing, shape)?;
        if word.len() != listing.len() {
            return Err(Error::Structure(format!(
                "word of length {} for a listing of {} cells",
                word.len(),
                listing.len()
            )));
        }
        let mut t = Tableau::placeholder(shape.clone());
        for (&cell, &a) in listing.iter().zip(word) {
            t.set(cell, a);
        }
        Ok(t)
    }

    pub(crate) fn placeholder(shape: SkewShape) -> Tableau {
        let rows = (1..=shape.num_rows())
            .map(|r| {
                let (lo, hi) = shape.row_bounds(r);
                vec![Letter::unbarred(1); hi - lo]
            })
            .collect();
        Tableau { shape, rows }
    }

    /// Rows with `None` at inner cells, as used by the JSON form.
    pub fn padded_rows(&self) -> Vec<Vec<Option<Letter>>> {
        (1..=self.shape.num_rows())
            .map(|r| {
                let (lo, _) = self.shape.row_bounds(r);
                std::iter::repeat_n(None, lo)
                    .chain(self.rows[r - 1].iter().copied().map(Some))
                    .collect()
            })
            .collect()
    }

    pub fn from_padded_rows(rows: Vec<Vec<Option<Letter>>>) -> Result<Tableau> {
        let mut outer = Vec::with_capacity(rows.len());
        let mut inner = Vec::with_capacity(rows.len());
        let mut filled = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let lo = row.iter().take_while(|x| x.is_none()).count();
            let letters: Vec<Letter> = row[lo..]
                .iter()
                .map(|x| x.ok_or_else(|| Error::Structure(format!("gap inside row {}", i + 1))))
                .collect::<Result<_>>()?;
            outer.push(row.len());
            inner.push(lo);
            filled.push(letters);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Tableau::new(shape, filled)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.padded_rows();
        let width = rows
            .iter()
            .flatten()
            .map(|x| x.map_or(1, |a| a.to_string().len()))
            .max()
            .unwrap_or(1);
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row
                .iter()
                .map(|x| {
                    let s = x.map_or_else(|| ".".to_string(), |a| a.to_string());
                    format!("{s:>width$}")
                })
                .collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: SkewShape,
    rows: Vec<Vec<Option<Letter>>>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr {
            shape: self.shape.clone(),
            rows: self.padded_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableauRepr::deserialize(d)?;
        let t = Tableau::from_padded_rows(repr.rows).map_err(serde::de::Error::custom)?;
        if t.shape != repr.shape {
            return Err(serde::de::Error::custom(format!(
                "rows describe shape {} but shape field says {}",
                t.shape, repr.shape
            )));
        }
        Ok(t)
    }
}

/// Columns right to left, each top to bottom.
pub fn japanese_listing(shape: &SkewShape) -> Reading {
    let mut out = Vec::with_capacity(shape.size());
    for c in (1..=shape.num_cols()).rev() {
        out.extend(shape.column_rows(c).map(|r| CellPos::new(r, c)));
    }
    out
}

/// Rows top to bottom, each right to left.
pub fn arabic_listing(shape: &SkewShape) -> Reading {
    let mut out = Vec::with_capacity(shape.size());
    for r in 1..=shape.num_rows() {
        let (lo, hi) = shape.row_bounds(r);
        out.extend((lo + 1..=hi).rev().map(|c| CellPos::new(r, c)));
    }
    out
}

fn check_listing(listing: &[CellPos], shape: &SkewShape) -> Result<()> {
    let mut seen = std::collections::HashSet::with_capacity(listing.len());
    for &cell in listing {
        if !shape.contains(cell) {
            return Err(Error::Structure(format!("{cell} is not a cell of {shape}")));
        }
        if !seen.insert(cell) {
            return Err(Error::Structure(format!("{cell} listed twice")));
        }
    }
    if seen.len() != shape.size() {
        return Err(Error::Structure(format!(
            "listing covers {} of {} cells",
            seen.len(),
            shape.size()
        )));
    }
    Ok(())
}

/// Every cell is listed before all cells it is strictly higher than.
pub fn is_admissible(listing: &[CellPos], shape: &SkewShape) -> Result<bool> {
    check_listing(listing, shape)?;
    for (i, later) in listing.iter().enumerate() {
        if listing[..i]
            .iter()
            .any(|earlier| later.strictly_higher_than(earlier))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All semistandard fillings of `shape` with letters of `rank`, in
/// lexicographic order of their Japanese readings.
pub fn enumerate_tableaux(shape: &SkewShape, rank: Rank, budget: &Budget) -> Result<Vec<Tableau>> {
    let listing = japanese_listing(shape);
    let letters: Vec<Letter> = rank.letters().collect();
    let mut search = Search {
        listing: &listing,
        letters: &letters,
        current: Tableau::placeholder(shape.clone()),
        out: Vec::new(),
        nodes: 0,
        limit: budget.enumeration,
    };
    search.go(0)?;
    Ok(search.out)
}

struct Search<'a> {
    listing: &'a [CellPos],
    letters: &'a [Letter],
    current: Tableau,
    out: Vec<Tableau>,
    nodes: usize,
    limit: usize,
}

impl Search<'_> {
    fn go(&mut self, k: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::Budget {
                what: "enumerating tableaux",
                limit: self.limit,
            });
        }
        let Some(&cell) = self.listing.get(k) else {
            self.out.push(self.current.clone());
            return Ok(());
        };
        // Columns to the right and cells above are already filled.
        let right = self.current.get(CellPos::new(cell.row, cell.col + 1));
        let above = if cell.row > 1 {
            self.current.get(CellPos::new(cell.row - 1, cell.col))
        } else {
            None
        };
        for &a in self.letters {
            if above.is_some_and(|x| !x.column_ok(a)) {
                continue;
            }
            if right.is_some_and(|x| !a.row_ok(x)) {
                // Letters only grow from here on, so nothing later fits either.
                break;
            }
            self.current.set(cell, a);
            self.go(k + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(k: i32) -> Letter {
        Letter::from_label(k).unwrap()
    }

    fn rank(m: usize, n: usize) -> Rank {
        Rank::new(m, n).unwrap()
    }

    fn t(rows: &[&[i32]]) -> Tableau {
        Tableau::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&k| l(k)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn word(ks: &[i32]) -> Word {
        ks.iter().map(|&k| l(k)).collect()
    }

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    pub(crate) fn figure_tableau() -> Tableau {
        Tableau::from_padded_rows(vec![
            vec![None, Some(l(-3)), Some(l(-2))],
            vec![Some(l(-4)), Some(l(-1)), Some(l(1))],
            vec![Some(l(1)), Some(l(3))],
            vec![Some(l(2))],
        ])
        .unwrap()
    }

    /// All fillings of `shape` from the alphabet, filtered by the
    /// semistandard predicate, sorted by Japanese reading.
    fn brute_force(shape: &SkewShape, rank: Rank) -> Vec<Tableau> {
        let listing = japanese_listing(shape);
        let letters: Vec<Letter> = rank.letters().collect();
        let total = letters.len().pow(listing.len() as u32);
        let mut out = Vec::new();
        for mut code in 0..total {
            let mut w = Vec::with_capacity(listing.len());
            for _ in 0..listing.len() {
                w.push(letters[code % letters.len()]);
                code /= letters.len();
            }
            let tab = Tableau::from_reading(shape, &listing, &w).unwrap();
            if tab.is_semistandard() {
                out.push(tab);
            }
        }
        out.sort_by_key(|x| x.japanese_reading());
        out
    }

    #[test]
    fn semistandard_examples() {
        let r = rank(2, 2);
        assert!(t(&[&[-2, -2, -2], &[-1, -1], &[1]]).validate_semistandard(r));
        assert!(!t(&[&[1, 1]]).validate_semistandard(r));
        assert!(!t(&[&[-1], &[-1]]).validate_semistandard(r));
        assert!(t(&[&[1], &[1]]).validate_semistandard(r));
        assert!(!t(&[&[-3]]).validate_semistandard(r));
        assert!(t(&[&[-1, -1]]).validate_semistandard(r));
    }

    #[test]
    fn structure_errors() {
        let s = shape("2,1");
        assert!(Tableau::new(s.clone(), vec![vec![l(1)], vec![l(2)]]).is_err());
        let mut cells = HashMap::new();
        cells.insert(CellPos::new(1, 1), l(1));
        assert!(Tableau::from_cells(s, &cells).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let b = Budget::default();
        let two = enumerate_tableaux(&shape("2"), rank(1, 1), &b).unwrap();
        assert_eq!(two, vec![t(&[&[-1, -1]]), t(&[&[-1, 1]])]);
        assert!(enumerate_tableaux(&shape("2,2"), rank(1, 1), &b)
            .unwrap()
            .is_empty());
        let col = enumerate_tableaux(&shape("1,1"), rank(1, 1), &b).unwrap();
        assert_eq!(col, vec![t(&[&[-1], &[1]]), t(&[&[1], &[1]])]);
        let empty = enumerate_tableaux(&SkewShape::default(), rank(1, 1), &b).unwrap();
        assert_eq!(empty, vec![Tableau::empty()]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let b = Budget::default();
        for r in [rank(1, 1), rank(2, 1), rank(1, 2), rank(2, 2)] {
            for k in 0..=4 {
                for y in Partition::all_of_size(k) {
                    let s = SkewShape::straight(y);
                    assert_eq!(enumerate_tableaux(&s, r, &b).unwrap(), brute_force(&s, r));
                }
            }
            for s in ["2,1/1", "2,2/1", "3,1/2", "2,2,1/1,1", "3,2/1"] {
                let s = shape(s);
                assert_eq!(
                    enumerate_tableaux(&s, r, &b).unwrap(),
                    brute_force(&s, r),
                    "{s}"
                );
            }
        }
    }

    #[test]
    fn enumeration_respects_budget() {
        let tiny = Budget {
            enumeration: 5,
            bfs: 5,
        };
        let err = enumerate_tableaux(&shape("3,2,1"), rank(2, 2), &tiny).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn nonempty_iff_hook() {
        let b = Budget::default();
        for m in 1..=3 {
            for n in 1..=3 {
                let r = rank(m, n);
                for k in 0..=7 {
                    for y in Partition::all_of_size(k) {
                        let s = SkewShape::straight(y.clone());
                        let found = enumerate_tableaux(&s, r, &b).unwrap();
                        assert_eq!(!found.is_empty(), y.is_hook(r), "{y} at ({r})");
                    }
                }
            }
        }
    }

    #[test]
    fn figure_readings() {
        let tab = figure_tableau();
        assert!(tab.validate_semistandard(rank(4, 3)));
        assert_eq!(tab.japanese_reading(), word(&[-2, 1, -3, -1, 3, -4, 1, 2]));
        assert_eq!(tab.arabic_reading(), word(&[-2, -3, 1, -1, -4, 3, 1, 2]));
        assert_eq!(t(&[&[2]]).japanese_reading(), word(&[2]));
        assert!(Tableau::empty().japanese_reading().is_empty());
    }

    #[test]
    fn admissibility_examples() {
        let s = shape("2,1");
        assert!(is_admissible(&japanese_listing(&s), &s).unwrap());
        assert!(is_admissible(&arabic_listing(&s), &s).unwrap());
        let bottom_first = vec![CellPos::new(2, 1), CellPos::new(1, 1), CellPos::new(1, 2)];
        assert!(!is_admissible(&bottom_first, &s).unwrap());
        let one = shape("1");
        assert!(is_admissible(&[CellPos::new(1, 1)], &one).unwrap());
        assert!(is_admissible(&[CellPos::new(1, 1)], &s).is_err());
    }

    #[test]
    fn readings_are_admissible_on_many_shapes() {
        for k in 0..=7 {
            for y in Partition::all_of_size(k) {
                let s = SkewShape::straight(y);
                assert!(is_admissible(&japanese_listing(&s), &s).unwrap());
                assert!(is_admissible(&arabic_listing(&s), &s).unwrap());
            }
        }
        let s = shape("3,3,2,1/1");
        assert!(is_admissible(&japanese_listing(&s), &s).unwrap());
        assert!(is_admissible(&arabic_listing(&s), &s).unwrap());
    }

    #[test]
    fn reading_round_trip_and_weight() {
        let b = Budget::default();
        let r = rank(2, 2);
        for y in Partition::hooks_up_to(5, r) {
            let s = SkewShape::straight(y);
            let jl = japanese_listing(&s);
            let al = arabic_listing(&s);
            for tab in enumerate_tableaux(&s, r, &b).unwrap() {
                let jw = tab.read(&jl).unwrap();
                let aw = tab.read(&al).unwrap();
                assert_eq!(Tableau::from_reading(&s, &jl, &jw).unwrap(), tab);
                let mut sj = jw.clone();
                let mut sa = aw.clone();
                sj.sort();
                sa.sort();
                assert_eq!(sj, sa);
                assert_eq!(word_weight(r, &jw).unwrap(), word_weight(r, &aw).unwrap());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let tab = figure_tableau();
        let text = serde_json::to_string(&tab).unwrap();
        assert!(text
            .starts_with(r#"{"shape":{"outer":[3,3,2,1],"inner":[1]},"rows":[[null,"-3","-2"]"#));
        let back: Tableau = serde_json::from_str(&text).unwrap();
        assert_eq!(back, tab);
        let bad = r#"{"shape":{"outer":[1],"inner":[]},"rows":[["1","2"]]}"#;
        assert!(serde_json::from_str::<Tableau>(bad).is_err());
    }

    #[test]
    fn word_text_round_trip() {
        let w = word(&[-2, 1, -3]);
        assert_eq!(format_word(&w), "(-2,1,-3)");
        assert_eq!(parse_word("(-2,1,-3)").unwrap(), w);
        assert_eq!(parse_word("-2, 1,-3").unwrap(), w);
        assert!(parse_word("()").unwrap().is_empty());
    }

    #[test]
    fn word_weight_examples() {
        let r = rank(4, 3);
        let w = word_weight(r, &word(&[-2, 1, -3, -1, 3, -4, 1, 2])).unwrap();
        assert_eq!(w.coeffs(), &[1, 1, 1, 1, 2, 1, 1]);
        assert!(word_weight(r, &[]).unwrap().is_zero());
        let r = rank(1, 1);
        assert_eq!(word_weight(r, &word(&[-1, 1])).unwrap().coeffs(), &[1, 1]);
    }
}

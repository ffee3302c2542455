//! Knuth moves, column and row bumping, and letter insertion into tableaux.
//!
//! Tensor products are read as words: a column `a_1,…,a_r` (top to bottom)
//! tensored with a letter `b` is the word `a_1 … a_r b`, and a row
//! `a_1,…,a_r` (left to right) contributes `a_r … a_1`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root::Letter;
use crate::shape::{CellPos, Partition, SkewShape};
use crate::tableau::{format_word, Tableau, Word};

fn row_ok(left: Letter, right: Letter) -> bool {
    left.row_ok(right)
}

fn column_ok(top: Letter, below: Letter) -> bool {
    top.column_ok(below)
}

fn require_semistandard(t: &Tableau, what: &str) -> Result<()> {
    if t.is_semistandard() {
        Ok(())
    } else {
        Err(Error::arg(format!("{what} is not semistandard:\n{t}")))
    }
}

/// The Knuth move from shape `(2,1)` (top row `a b`, `c` under `a`) to the
/// skew shape `(2,2)/(1)`.
pub fn knuth_psi(t: &Tableau) -> Result<Tableau> {
    let expected: SkewShape = "2,1".parse()?;
    if t.shape() != &expected {
        return Err(Error::arg(format!(
            "Knuth move needs shape 2,1, got {}",
            t.shape()
        )));
    }
    require_semistandard(t, "input")?;
    let a = t.get(CellPos::new(1, 1)).unwrap();
    let b = t.get(CellPos::new(1, 2)).unwrap();
    let c = t.get(CellPos::new(2, 1)).unwrap();
    let (top, left, right) = if row_ok(c, b) {
        (a, c, b)
    } else if column_ok(b, c) {
        (b, a, c)
    } else {
        return Err(Error::Internal(format!(
            "no Knuth branch for {a},{b} over {c}"
        )));
    };
    skew_2_2_1(top, left, right)
}

fn skew_2_2_1(top: Letter, left: Letter, right: Letter) -> Result<Tableau> {
    Tableau::new("2,2/1".parse()?, vec![vec![top], vec![left, right]])
}

/// Inverse of [`knuth_psi`]: from `(2,2)/(1)` (top-right `x`, bottom row `y z`)
/// back to shape `(2,1)`.
pub fn knuth_psi_inv(t: &Tableau) -> Result<Tableau> {
    let expected: SkewShape = "2,2/1".parse()?;
    if t.shape() != &expected {
        return Err(Error::arg(format!(
            "inverse Knuth move needs shape 2,2/1, got {}",
            t.shape()
        )));
    }
    require_semistandard(t, "input")?;
    let x = t.get(CellPos::new(1, 2)).unwrap();
    let y = t.get(CellPos::new(2, 1)).unwrap();
    let z = t.get(CellPos::new(2, 2)).unwrap();
    let rows = if column_ok(x, y) {
        vec![vec![x, z], vec![y]]
    } else if row_ok(y, x) {
        vec![vec![y, x], vec![z]]
    } else {
        return Err(Error::Internal(format!(
            "no inverse Knuth branch for {x} over {y},{z}"
        )));
    };
    Tableau::from_rows(rows)
}

/// Which of the two cases of a bump applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BumpOutcome {
    /// The letter fits at the end: the shape of the product grows by one box.
    Append { emitted: Letter, remaining: Word },
    /// The letter displaces the entry at `position` (0-based), which is emitted.
    Bump {
        position: usize,
        emitted: Letter,
        remaining: Word,
    },
}

impl BumpOutcome {
    pub fn emitted(&self) -> Letter {
        match self {
            BumpOutcome::Append { emitted, .. } | BumpOutcome::Bump { emitted, .. } => *emitted,
        }
    }

    pub fn remaining(&self) -> &[Letter] {
        match self {
            BumpOutcome::Append { remaining, .. } | BumpOutcome::Bump { remaining, .. } => {
                remaining
            }
        }
    }
}

fn check_column(col: &[Letter]) -> Result<()> {
    if col.is_empty() {
        return Err(Error::arg("bumping needs a nonempty column"));
    }
    if col.windows(2).all(|w| column_ok(w[0], w[1])) {
        Ok(())
    } else {
        Err(Error::arg(format!(
            "column {} is not semistandard",
            format_word(col)
        )))
    }
}

fn check_row(row: &[Letter]) -> Result<()> {
    if row.is_empty() {
        return Err(Error::arg("bumping needs a nonempty row"));
    }
    if row.windows(2).all(|w| row_ok(w[0], w[1])) {
        Ok(())
    } else {
        Err(Error::arg(format!(
            "row {} is not semistandard",
            format_word(row)
        )))
    }
}

/// `Ψ`: column `a_1..a_r` ⊗ `b` ↦ `emitted` ⊗ `remaining` column.
pub fn column_bump(col: &[Letter], b: Letter) -> Result<BumpOutcome> {
    check_column(col)?;
    let r = col.len();
    if column_ok(col[r - 1], b) {
        let mut remaining = col[1..].to_vec();
        remaining.push(b);
        return Ok(BumpOutcome::Append {
            emitted: col[0],
            remaining,
        });
    }
    let position = col
        .iter()
        .position(|&a| row_ok(b, a))
        .ok_or_else(|| Error::Internal(format!("no bump site for {b} in {}", format_word(col))))?;
    let mut remaining = col.to_vec();
    remaining[position] = b;
    Ok(BumpOutcome::Bump {
        position,
        emitted: col[position],
        remaining,
    })
}

/// `Ψ⁻¹`: `b` ⊗ column `a_1..a_r` ↦ column ⊗ emitted letter.
pub fn column_unbump(b: Letter, col: &[Letter]) -> Result<BumpOutcome> {
    check_column(col)?;
    let r = col.len();
    if column_ok(b, col[0]) {
        let mut remaining = vec![b];
        remaining.extend_from_slice(&col[..r - 1]);
        return Ok(BumpOutcome::Append {
            emitted: col[r - 1],
            remaining,
        });
    }
    let position = col.iter().rposition(|&a| row_ok(a, b)).ok_or_else(|| {
        Error::Internal(format!("no unbump site for {b} in {}", format_word(col)))
    })?;
    let mut remaining = col.to_vec();
    remaining[position] = b;
    Ok(BumpOutcome::Bump {
        position,
        emitted: col[position],
        remaining,
    })
}

/// `Φ`: row `a_1..a_r` ⊗ `b` ↦ `emitted` ⊗ `remaining` row.
pub fn row_bump(row: &[Letter], b: Letter) -> Result<BumpOutcome> {
    check_row(row)?;
    let r = row.len();
    if row_ok(b, row[0]) {
        let mut remaining = vec![b];
        remaining.extend_from_slice(&row[..r - 1]);
        return Ok(BumpOutcome::Append {
            emitted: row[r - 1],
            remaining,
        });
    }
    let position = row
        .iter()
        .rposition(|&a| column_ok(a, b))
        .ok_or_else(|| Error::Internal(format!("no bump site for {b} in {}", format_word(row))))?;
    let mut remaining = row.to_vec();
    remaining[position] = b;
    Ok(BumpOutcome::Bump {
        position,
        emitted: row[position],
        remaining,
    })
}

/// `Φ⁻¹`: `b` ⊗ row `a_1..a_r` ↦ row ⊗ emitted letter.
pub fn row_unbump(b: Letter, row: &[Letter]) -> Result<BumpOutcome> {
    check_row(row)?;
    let r = row.len();
    if row_ok(row[r - 1], b) {
        let mut remaining = row[1..].to_vec();
        remaining.push(b);
        return Ok(BumpOutcome::Append {
            emitted: row[0],
            remaining,
        });
    }
    let position = row.iter().position(|&a| column_ok(b, a)).ok_or_else(|| {
        Error::Internal(format!("no unbump site for {b} in {}", format_word(row)))
    })?;
    let mut remaining = row.to_vec();
    remaining[position] = b;
    Ok(BumpOutcome::Bump {
        position,
        emitted: row[position],
        remaining,
    })
}

/// One column visited while inserting a letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BumpStep {
    pub column: usize,
    pub incoming: Letter,
    /// The cell the incoming letter lands in.
    pub cell: CellPos,
    /// The letter pushed on to the next column, if any.
    pub ejected: Option<Letter>,
}

impl fmt::Display for BumpStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ejected {
            Some(x) => write!(
                f,
                "column {}: {} ejects {} at {}",
                self.column, self.incoming, x, self.cell
            ),
            None => write!(
                f,
                "column {}: {} appended at {}",
                self.column, self.incoming, self.cell
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Insertion {
    pub tableau: Tableau,
    pub added: CellPos,
    pub trace: Vec<BumpStep>,
}

/// Column-inserts `b` into `t`, starting at column 1 and carrying each
/// ejected letter one column to the right until it can be appended.
pub fn insert(t: &Tableau, b: Letter) -> Result<Insertion> {
    require_semistandard(t, "tableau")?;
    let shape = t.shape().clone();
    let mut entries: Vec<(CellPos, Letter)> = t.entries().collect();
    let mut trace = Vec::new();
    let mut x = b;
    let mut c = 1;
    loop {
        let rows = shape.column_rows(c);
        let col: Vec<Letter> = rows
            .clone()
            .map(|r| t_get(&entries, CellPos::new(r, c)))
            .collect();
        if col.last().is_none_or(|&bottom| column_ok(bottom, x)) {
            let cell = CellPos::new(shape.outer().col_len(c) + 1, c);
            if !shape.outer().is_addable(cell) {
                return Err(Error::Internal(format!(
                    "insertion of {b} would place {x} at {cell}, which is not a co-corner of {shape}"
                )));
            }
            trace.push(BumpStep {
                column: c,
                incoming: x,
                cell,
                ejected: None,
            });
            entries.push((cell, x));
            let new_shape = shape.add_box(cell)?;
            let map = entries.into_iter().collect();
            let tableau = Tableau::from_cells(new_shape, &map)?;
            if !tableau.is_semistandard() {
                return Err(Error::Internal(format!(
                    "insertion of {b} broke semistandardness:\n{tableau}"
                )));
            }
            return Ok(Insertion {
                tableau,
                added: cell,
                trace,
            });
        }
        let nu = col
            .iter()
            .position(|&a| row_ok(x, a))
            .ok_or_else(|| Error::Internal(format!("no bump site for {x} in column {c}")))?;
        let cell = CellPos::new(*rows.start() + nu, c);
        let ejected = col[nu];
        t_set(&mut entries, cell, x);
        trace.push(BumpStep {
            column: c,
            incoming: x,
            cell,
            ejected: Some(ejected),
        });
        x = ejected;
        c += 1;
    }
}

fn t_get(entries: &[(CellPos, Letter)], cell: CellPos) -> Letter {
    entries
        .iter()
        .find(|(p, _)| *p == cell)
        .map(|(_, a)| *a)
        .expect("cell in shape")
}

fn t_set(entries: &mut [(CellPos, Letter)], cell: CellPos, a: Letter) {
    let slot = entries
        .iter_mut()
        .find(|(p, _)| *p == cell)
        .expect("cell in shape");
    slot.1 = a;
}

/// Inverse of [`insert`]: removes the letter at `cell` and walks it back
/// through the columns to its left. Returns the smaller tableau and the
/// letter that was originally inserted.
pub fn uninsert(t: &Tableau, cell: CellPos) -> Result<(Tableau, Letter)> {
    require_semistandard(t, "tableau")?;
    let shape = t.shape();
    if !shape.contains(cell) || !shape.outer().is_removable(cell) {
        return Err(Error::arg(format!("{cell} is not a corner of {shape}")));
    }
    let new_shape = shape.remove_box(cell)?;
    let mut entries: Vec<(CellPos, Letter)> = t.entries().filter(|(p, _)| *p != cell).collect();
    let mut x = t.get(cell).unwrap();
    for c in (1..cell.col).rev() {
        let rows = new_shape.column_rows(c);
        let col: Vec<Letter> = rows
            .clone()
            .map(|r| t_get(&entries, CellPos::new(r, c)))
            .collect();
        let nu = col
            .iter()
            .rposition(|&a| row_ok(a, x))
            .ok_or_else(|| Error::arg(format!("{x} cannot be walked back through column {c}")))?;
        let at = CellPos::new(*rows.start() + nu, c);
        t_set(&mut entries, at, x);
        x = col[nu];
    }
    let map = entries.into_iter().collect();
    let tableau = Tableau::from_cells(new_shape, &map)?;
    if !tableau.is_semistandard() {
        return Err(Error::arg(format!(
            "removing {cell} does not reverse an insertion"
        )));
    }
    Ok((tableau, x))
}

/// `B(Y_0) ⊗ B → ⊕ B(Y)`: inserts `b` and reports the new shape.
pub fn decompose_step(t: &Tableau, b: Letter) -> Result<(Partition, Tableau, CellPos)> {
    let ins = insert(t, b)?;
    let y = ins.tableau.shape().outer().clone();
    Ok((y, ins.tableau, ins.added))
}

/// Inverse of [`decompose_step`]. `marked` must be a corner of the shape of
/// `t` lying outside `y0`.
pub fn recompose_step(t: &Tableau, marked: CellPos, y0: &Partition) -> Result<(Tableau, Letter)> {
    if y0.contains(marked) {
        return Err(Error::arg(format!("{marked} lies inside {y0}")));
    }
    let (smaller, b) = uninsert(t, marked)?;
    if smaller.shape().outer() != y0 {
        return Err(Error::arg(format!(
            "removing {marked} leaves shape {}, not {y0}",
            smaller.shape()
        )));
    }
    Ok((smaller, b))
}

/// Cells added at each step of iterated insertion.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GrowthRecord {
    pub cells: Vec<CellPos>,
}

impl GrowthRecord {
    /// The chain of shapes `∅ ⊂ Y_1 ⊂ … ⊂ Y_k`.
    pub fn shapes(&self) -> Result<Vec<Partition>> {
        let mut out = vec![Partition::empty()];
        for &cell in &self.cells {
            let next = out.last().unwrap().add_box(cell)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn shape(&self) -> Result<Partition> {
        Ok(self.shapes()?.pop().unwrap())
    }
}

/// Inserts the letters of `w` one by one into the empty tableau.
pub fn word_to_pq(w: &[Letter]) -> Result<(Tableau, GrowthRecord)> {
    let mut p = Tableau::empty();
    let mut q = GrowthRecord::default();
    for &a in w {
        let ins = insert(&p, a)?;
        p = ins.tableau;
        q.cells.push(ins.added);
    }
    Ok((p, q))
}

/// Inverse of [`word_to_pq`].
pub fn pq_to_word(p: &Tableau, q: &GrowthRecord) -> Result<Word> {
    let mut cur = p.clone();
    let mut out = Vec::with_capacity(q.cells.len());
    for &cell in q.cells.iter().rev() {
        let (smaller, a) = uninsert(&cur, cell)?;
        out.push(a);
        cur = smaller;
    }
    if cur.size() != 0 {
        return Err(Error::arg("growth record does not cover the tableau"));
    }
    out.reverse();
    Ok(out)
}

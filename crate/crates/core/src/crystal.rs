//! Raising and lowering operators on letters, words and tableaux.
//!
//! Words are tensor products of letters, `w = w_1 ⊗ … ⊗ w_N`. For an even
//! index the action is computed by bracket cancellation; for the odd index
//! the first letter equal to `1̄` or `1` decides everything. The binary
//! tensor rule itself is kept in [`tensor`] and serves as a reference
//! implementation.

use std::collections::HashMap;
use std::hash::Hash;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::root::{Letter, Rank, SimpleIndex, Weight};
use crate::shape::CellPos;
use crate::tableau::{format_word, japanese_listing, word_weight, Tableau, Word};

/// Raising (`ẽ_i`) or lowering (`f̃_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Raise,
    Lower,
}

pub fn letter_f(i: SimpleIndex, a: Letter) -> Option<Letter> {
    match i {
        SimpleIndex::Barred(k) => (a == Letter::barred(k + 1)).then(|| Letter::barred(k)),
        SimpleIndex::Odd => (a == Letter::barred(1)).then(|| Letter::unbarred(1)),
        SimpleIndex::Unbarred(k) => (a == Letter::unbarred(k)).then(|| Letter::unbarred(k + 1)),
    }
}

pub fn letter_e(i: SimpleIndex, a: Letter) -> Option<Letter> {
    match i {
        SimpleIndex::Barred(k) => (a == Letter::barred(k)).then(|| Letter::barred(k + 1)),
        SimpleIndex::Odd => (a == Letter::unbarred(1)).then(|| Letter::barred(1)),
        SimpleIndex::Unbarred(k) => (a == Letter::unbarred(k + 1)).then(|| Letter::unbarred(k)),
    }
}

pub fn letter_apply(i: SimpleIndex, op: Op, a: Letter) -> Option<Letter> {
    match op {
        Op::Raise => letter_e(i, a),
        Op::Lower => letter_f(i, a),
    }
}

/// Position in `w` at which the operator acts, or `None` when the result is 0.
pub fn action_position(i: SimpleIndex, op: Op, w: &[Letter]) -> Option<usize> {
    if i.is_odd() {
        let pos = w
            .iter()
            .position(|&a| a == Letter::barred(1) || a == Letter::unbarred(1))?;
        return letter_apply(i, op, w[pos]).map(|_| pos);
    }
    let sig = Signature::scan(i, w);
    match (i.ell() > 0, op) {
        (true, Op::Lower) => sig.plus.first().copied(),
        (true, Op::Raise) => sig.minus.last().copied(),
        (false, Op::Lower) => sig.plus.last().copied(),
        (false, Op::Raise) => sig.minus.first().copied(),
    }
}

/// Unmatched `−` and `+` positions after bracket cancellation.
struct Signature {
    minus: Vec<usize>,
    plus: Vec<usize>,
}

impl Signature {
    fn scan(i: SimpleIndex, w: &[Letter]) -> Signature {
        // For ℓ > 0 a `+` to the left of a `−` cancels; for ℓ < 0 the mirror.
        let left_biased = i.ell() > 0;
        let mut minus = Vec::new();
        let mut plus = Vec::new();
        for (pos, &a) in w.iter().enumerate() {
            let is_plus = letter_f(i, a).is_some();
            let is_minus = letter_e(i, a).is_some();
            if left_biased {
                if is_plus {
                    plus.push(pos);
                } else if is_minus && plus.pop().is_none() {
                    minus.push(pos);
                }
            } else if is_minus {
                minus.push(pos);
            } else if is_plus && minus.pop().is_none() {
                plus.push(pos);
            }
        }
        Signature { minus, plus }
    }
}

pub fn word_apply(i: SimpleIndex, op: Op, w: &[Letter]) -> Option<Word> {
    let pos = action_position(i, op, w)?;
    let mut out = w.to_vec();
    out[pos] = letter_apply(i, op, w[pos])?;
    Some(out)
}

pub fn word_f(i: SimpleIndex, w: &[Letter]) -> Option<Word> {
    word_apply(i, Op::Lower, w)
}

pub fn word_e(i: SimpleIndex, w: &[Letter]) -> Option<Word> {
    word_apply(i, Op::Raise, w)
}

pub fn word_eps(i: SimpleIndex, w: &[Letter]) -> usize {
    if i.is_odd() {
        return usize::from(action_position(i, Op::Raise, w).is_some());
    }
    Signature::scan(i, w).minus.len()
}

pub fn word_phi(i: SimpleIndex, w: &[Letter]) -> usize {
    if i.is_odd() {
        return usize::from(action_position(i, Op::Lower, w).is_some());
    }
    Signature::scan(i, w).plus.len()
}

/// Applies the operator to the word read along `listing` and writes the
/// result back into the same cells.
pub fn tableau_apply_via(
    i: SimpleIndex,
    op: Op,
    t: &Tableau,
    listing: &[CellPos],
) -> Result<Option<Tableau>> {
    let w = t.read(listing)?;
    let Some(pos) = action_position(i, op, &w) else {
        return Ok(None);
    };
    let cell = listing[pos];
    let new = letter_apply(i, op, w[pos]).expect("action position carries a letter move");
    let mut out = t.clone();
    out.set(cell, new);
    if !out.is_semistandard() {
        return Err(Error::Internal(format!(
            "operator {i} at {cell} left the semistandard set:\n{out}"
        )));
    }
    Ok(Some(out))
}

pub fn tableau_f(i: SimpleIndex, t: &Tableau) -> Result<Option<Tableau>> {
    tableau_apply_via(i, Op::Lower, t, &japanese_listing(t.shape()))
}

pub fn tableau_e(i: SimpleIndex, t: &Tableau) -> Result<Option<Tableau>> {
    tableau_apply_via(i, Op::Raise, t, &japanese_listing(t.shape()))
}

/// Anything the operators act on.
pub trait CrystalElement: Clone + Eq + Hash {
    fn apply(&self, rank: Rank, i: SimpleIndex, op: Op) -> Result<Option<Self>>;

    fn weight(&self, rank: Rank) -> Result<Weight>;

    /// Word used for ordering and labelling.
    fn key(&self) -> Word;
}

fn check_index(rank: Rank, i: SimpleIndex) -> Result<()> {
    if rank.contains_index(i) {
        Ok(())
    } else {
        Err(Error::arg(format!(
            "simple index {i} is invalid for rank {rank}"
        )))
    }
}

impl CrystalElement for Word {
    fn apply(&self, rank: Rank, i: SimpleIndex, op: Op) -> Result<Option<Self>> {
        check_index(rank, i)?;
        Ok(word_apply(i, op, self))
    }

    fn weight(&self, rank: Rank) -> Result<Weight> {
        word_weight(rank, self)
    }

    fn key(&self) -> Word {
        self.clone()
    }
}

impl CrystalElement for Tableau {
    fn apply(&self, rank: Rank, i: SimpleIndex, op: Op) -> Result<Option<Self>> {
        check_index(rank, i)?;
        tableau_apply_via(i, op, self, &japanese_listing(self.shape()))
    }

    fn weight(&self, rank: Rank) -> Result<Weight> {
        Tableau::weight(self, rank)
    }

    fn key(&self) -> Word {
        self.japanese_reading()
    }
}

/// `ε_i(x)`: how many times `ẽ_i` applies before reaching 0.
pub fn eps<T: CrystalElement>(rank: Rank, i: SimpleIndex, x: &T) -> Result<usize> {
    string_length(rank, i, Op::Raise, x)
}

/// `φ_i(x)`: how many times `f̃_i` applies before reaching 0.
pub fn phi<T: CrystalElement>(rank: Rank, i: SimpleIndex, x: &T) -> Result<usize> {
    string_length(rank, i, Op::Lower, x)
}

fn string_length<T: CrystalElement>(rank: Rank, i: SimpleIndex, op: Op, x: &T) -> Result<usize> {
    let mut count = 0;
    let mut cur = x.clone();
    while let Some(next) = cur.apply(rank, i, op)? {
        count += 1;
        cur = next;
    }
    Ok(count)
}

pub fn is_highest<T: CrystalElement>(rank: Rank, x: &T) -> Result<bool> {
    annihilated(rank, Op::Raise, x)
}

pub fn is_lowest<T: CrystalElement>(rank: Rank, x: &T) -> Result<bool> {
    annihilated(rank, Op::Lower, x)
}

fn annihilated<T: CrystalElement>(rank: Rank, op: Op, x: &T) -> Result<bool> {
    for i in rank.indices() {
        if x.apply(rank, i, op)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertices and `i`-arrows `b → f̃_i b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph<T> {
    pub vertices: Vec<T>,
    pub edges: Vec<(usize, SimpleIndex, usize)>,
}

impl<T: CrystalElement> CrystalGraph<T> {
    pub fn empty() -> Self {
        CrystalGraph {
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// The full subgraph on `vertices`, which must be closed under the operators.
    pub fn from_vertices(rank: Rank, vertices: Vec<T>) -> Result<Self> {
        let index: HashMap<T, usize> = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, v)| (v, k))
            .collect();
        let mut edges = Vec::new();
        for (src, v) in vertices.iter().enumerate() {
            for i in rank.indices() {
                if let Some(w) = v.apply(rank, i, Op::Lower)? {
                    let dst = *index.get(&w).ok_or_else(|| {
                        Error::Structure(format!(
                            "vertex set not closed: f_{i} leaves it at {}",
                            format_word(&w.key())
                        ))
                    })?;
                    edges.push((src, i, dst));
                }
            }
        }
        Ok(CrystalGraph { vertices, edges })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn export_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{k} [label=\"{}\"];\n", format_word(&v.key())));
        }
        for (src, i, dst) in &self.edges {
            out.push_str(&format!("  v{src} -> v{dst} [label=\"{i}\"];\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn export_json(&self) -> String {
        let vertices: Vec<Vec<String>> = self
            .vertices
            .iter()
            .map(|v| v.key().iter().map(|a| a.to_string()).collect())
            .collect();
        let edges: Vec<(usize, String, usize)> = self
            .edges
            .iter()
            .map(|&(src, i, dst)| (src, i.to_string(), dst))
            .collect();
        #[derive(Serialize)]
        struct Repr {
            vertices: Vec<Vec<String>>,
            edges: Vec<(usize, String, usize)>,
        }
        serde_json::to_string(&Repr { vertices, edges }).expect("plain data serializes")
    }
}

/// Breadth-first closure of `start` under every `ẽ_i` and `f̃_i`. Each new
/// layer is sorted by key, so vertex order is deterministic.
pub fn component<T: CrystalElement>(
    rank: Rank,
    start: &T,
    budget: &Budget,
) -> Result<CrystalGraph<T>> {
    let mut seen: HashMap<T, usize> = HashMap::new();
    let mut vertices = vec![start.clone()];
    seen.insert(start.clone(), 0);
    let mut layer = vec![start.clone()];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for v in &layer {
            for i in rank.indices() {
                for op in [Op::Lower, Op::Raise] {
                    let Some(w) = v.apply(rank, i, op)? else {
                        continue;
                    };
                    if !seen.contains_key(&w) {
                        seen.insert(w.clone(), usize::MAX);
                        next.push(w);
                        if seen.len() > budget.bfs {
                            return Err(Error::Budget {
                                what: "exploring a crystal component",
                                limit: budget.bfs,
                            });
                        }
                    }
                }
            }
        }
        next.sort_by_cached_key(|w| w.key());
        for w in &next {
            seen.insert(w.clone(), vertices.len());
            vertices.push(w.clone());
        }
        layer = next;
    }
    CrystalGraph::from_vertices(rank, vertices)
}

/// The binary tensor rule for `b_1 ⊗ b_2`.
pub mod tensor {
    use super::*;

    /// The four shapes of the rule, by parity of the index and sign of `ℓ_i`.
    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub enum TensorCase {
        EvenPositive,
        EvenNegative,
        OddPositive,
        /// Never arises for `gl(m|n)`, where the only odd index has `ℓ_0 = 1`.
        OddNegative,
    }

    impl TensorCase {
        pub fn new(odd: bool, ell: i64) -> TensorCase {
            match (odd, ell > 0) {
                (false, true) => TensorCase::EvenPositive,
                (false, false) => TensorCase::EvenNegative,
                (true, true) => TensorCase::OddPositive,
                (true, false) => TensorCase::OddNegative,
            }
        }

        pub fn of(i: SimpleIndex) -> TensorCase {
            TensorCase::new(i.is_odd(), i.ell())
        }
    }

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub enum Side {
        Left,
        Right,
    }

    /// What the rule needs to know about one tensor factor.
    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct FactorData {
        pub eps: usize,
        pub phi: usize,
        /// `⟨h_i, wt(b)⟩`.
        pub pairing: i64,
    }

    /// Which factor of `b_1 ⊗ b_2` the operator acts on.
    pub fn choose_side(case: TensorCase, op: Op, b1: FactorData, b2: FactorData) -> Side {
        let left = match (case, op) {
            (TensorCase::EvenPositive, Op::Raise) => b1.phi >= b2.eps,
            (TensorCase::EvenPositive, Op::Lower) => b1.phi > b2.eps,
            (TensorCase::EvenNegative, Op::Raise) => b2.phi < b1.eps,
            (TensorCase::EvenNegative, Op::Lower) => b2.phi <= b1.eps,
            (TensorCase::OddPositive, _) => b1.pairing > 0,
            (TensorCase::OddNegative, _) => b2.pairing == 0,
        };
        if left {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// Applies the operator to `u ⊗ v`, where `apply` acts on each factor.
    pub fn binary_apply(
        rank: Rank,
        i: SimpleIndex,
        op: Op,
        u: &[Letter],
        v: &[Letter],
        apply: &dyn Fn(Op, &[Letter]) -> Option<Word>,
    ) -> Result<Option<Word>> {
        let data = |w: &[Letter]| -> Result<FactorData> {
            let count = |op: Op| {
                let mut n = 0;
                let mut cur = w.to_vec();
                while let Some(next) = apply(op, &cur) {
                    n += 1;
                    cur = next;
                }
                n
            };
            Ok(FactorData {
                eps: count(Op::Raise),
                phi: count(Op::Lower),
                pairing: rank.pairing(i, &word_weight(rank, w)?)?,
            })
        };
        let side = choose_side(TensorCase::of(i), op, data(u)?, data(v)?);
        Ok(match side {
            Side::Left => apply(op, u).map(|u2| [u2.as_slice(), v].concat()),
            Side::Right => apply(op, v).map(|v2| [u, v2.as_slice()].concat()),
        })
    }

    /// Reference implementation: the rule folded from the left,
    /// `((w_1 ⊗ w_2) ⊗ w_3) ⊗ …`. Exponential; for testing small words.
    pub fn fold_apply(rank: Rank, i: SimpleIndex, op: Op, w: &[Letter]) -> Result<Option<Word>> {
        match w.len() {
            0 => Ok(None),
            1 => Ok(letter_apply(i, op, w[0]).map(|a| vec![a])),
            n => {
                let rec = |op: Op, x: &[Letter]| -> Option<Word> {
                    if x.len() == 1 {
                        letter_apply(i, op, x[0]).map(|a| vec![a])
                    } else {
                        fold_apply(rank, i, op, x).expect("weights of a valid word")
                    }
                };
                binary_apply(rank, i, op, &w[..n - 1], &w[n - 1..], &rec)
            }
        }
    }
}

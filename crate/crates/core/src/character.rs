//! Weight multiplicities of `B(Y)` and of tensor powers of the vector crystal.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::insertion::{word_to_pq, GrowthRecord};
use crate::root::{Rank, Weight};
use crate::shape::{Partition, SkewShape};
use crate::tableau::{enumerate_tableaux, Word};

/// Exact weight histogram of a crystal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    rank: Rank,
    counts: BTreeMap<Weight, usize>,
}

impl Character {
    pub fn zero(rank: Rank) -> Character {
        Character {
            rank,
            counts: BTreeMap::new(),
        }
    }

    /// One count at each `ε_b`.
    pub fn vector(rank: Rank) -> Character {
        let mut c = Character::zero(rank);
        for a in rank.letters() {
            c.add(Weight::basis(rank, a).expect("letter of the rank"), 1);
        }
        c
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn add(&mut self, w: Weight, count: usize) {
        if count > 0 {
            *self.counts.entry(w).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> usize {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn mass(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, usize)> {
        self.counts.iter().map(|(w, &c)| (w, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.counts.keys()
    }

    /// Character of the tensor product.
    pub fn product(&self, other: &Character) -> Character {
        let mut out = Character::zero(self.rank);
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                out.add(a.clone() + b.clone(), x * y);
            }
        }
        out
    }

    pub fn sum(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add(w.clone(), c);
        }
        out
    }

    /// Applies `w₀` to every weight.
    pub fn weyl_longest(&self) -> Result<Character> {
        let mut out = Character::zero(self.rank);
        for (w, c) in self.iter() {
            out.add(self.rank.weyl_longest(w)?, c);
        }
        Ok(out)
    }

    /// JSON entries `{"weight":[..],"multiplicity":k}` in weight order.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry<'a> {
            weight: &'a Weight,
            multiplicity: usize,
        }
        let entries: Vec<Entry> = self
            .counts
            .iter()
            .map(|(weight, &multiplicity)| Entry {
                weight,
                multiplicity,
            })
            .collect();
        serde_json::to_string(&entries).expect("character entries serialize")
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.counts.keys().map(Weight::pretty).collect();
        let width = labels
            .iter()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(0)
            .max(6);
        writeln!(f, "{:<width$}  mult", "weight")?;
        for (label, c) in labels.iter().zip(self.counts.values()) {
            writeln!(f, "{label:<width$}  {c}")?;
        }
        write!(f, "{:<width$}  {}", "total", self.mass())
    }
}

/// Histogram of tableau weights over `B(Y)`.
pub fn character(y: &Partition, rank: Rank, budget: &Budget) -> Result<Character> {
    skew_character(&SkewShape::straight(y.clone()), rank, budget)
}

pub fn skew_character(shape: &SkewShape, rank: Rank, budget: &Budget) -> Result<Character> {
    let mut out = Character::zero(rank);
    for t in enumerate_tableaux(shape, rank, budget)? {
        out.add(t.weight(rank)?, 1);
    }
    Ok(out)
}

/// Hook diagrams obtained from `y0` by adding one box.
pub fn one_box_hooks(y0: &Partition, rank: Rank) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for cell in y0.cocorners() {
        let y = y0.add_box(cell)?;
        if y.is_hook(rank) {
            out.push(y);
        }
    }
    Ok(out)
}

/// Checks `ch B(Y₀) · ch B = Σ ch B(Y)` over the one-box hook extensions of `Y₀`.
pub fn char_product_identity(y0: &Partition, rank: Rank, budget: &Budget) -> Result<bool> {
    if !y0.is_hook(rank) {
        return Err(Error::arg(format!(
            "{y0} is not a hook diagram for rank {rank}"
        )));
    }
    let lhs = character(y0, rank, budget)?.product(&Character::vector(rank));
    let mut rhs = Character::zero(rank);
    for y in one_box_hooks(y0, rank)? {
        rhs = rhs.sum(&character(&y, rank, budget)?);
    }
    Ok(lhs == rhs)
}

fn all_words(rank: Rank, k: usize, budget: &Budget) -> Result<Vec<Word>> {
    let total = (rank.size() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if total > budget.enumeration as u128 {
        return Err(Error::Budget {
            what: "enumerating words",
            limit: budget.enumeration,
        });
    }
    let letters: Vec<_> = rank.letters().collect();
    let mut out: Vec<Word> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * letters.len());
        for w in &out {
            for &a in &letters {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out = next;
    }
    Ok(out)
}

/// All words of length `k`, in lexicographic order.
pub fn words(rank: Rank, k: usize, budget: &Budget) -> Result<Vec<Word>> {
    all_words(rank, k, budget)
}

/// Multiplicity of each `B(Y)` in `B^{⊗k}`: the number of distinct growth
/// records ending at `Y` when every word of length `k` is inserted.
pub fn power_multiplicities(
    k: usize,
    rank: Rank,
    budget: &Budget,
) -> Result<BTreeMap<Partition, usize>> {
    let mut seen: HashSet<GrowthRecord> = HashSet::new();
    let mut out = BTreeMap::new();
    for w in all_words(rank, k, budget)? {
        let (p, q) = word_to_pq(&w)?;
        if seen.insert(q) {
            *out.entry(p.shape().outer().clone()).or_insert(0) += 1;
        }
    }
    Ok(out)
}

/// Same multiplicities from the one-box rule alone.
pub fn branching_multiplicities(k: usize, rank: Rank) -> Result<BTreeMap<Partition, usize>> {
    let mut cur = BTreeMap::from([(Partition::empty(), 1usize)]);
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for (y0, c) in &cur {
            for y in one_box_hooks(y0, rank)? {
                *next.entry(y).or_insert(0) += c;
            }
        }
        cur = next;
    }
    Ok(cur)
}

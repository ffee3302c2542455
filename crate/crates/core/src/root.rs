//! Root datum of gl(m|n).
//!
//! The super alphabet is `m̄ < … < 1̄ < 1 < … < n`. A [`Letter`] stores a
//! signed label (`-k` for `k̄`, `k` for unbarred `k`), so integer order on
//! labels coincides with the alphabet order for every rank. Weights are
//! integer vectors indexed by the canonical position of a letter in that
//! order (`m̄` at 0, `n` at `m+n-1`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The pair `(m, n)`: `m` barred letters and `n` unbarred letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank {
    m: usize,
    n: usize,
}

impl Rank {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::arg(format!(
                "rank ({m},{n}) must have m >= 1 and n >= 1"
            )));
        }
        Ok(Rank { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of letters, `m + n`.
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn contains(&self, a: Letter) -> bool {
        if a.is_barred() {
            a.magnitude() <= self.m
        } else {
            a.magnitude() <= self.n
        }
    }

    /// Canonical index of a letter: `m̄ ↦ 0`, …, `1̄ ↦ m-1`, `1 ↦ m`, …, `n ↦ m+n-1`.
    pub fn index_of(&self, a: Letter) -> Result<usize> {
        if !self.contains(a) {
            return Err(Error::arg(format!("letter {a} is outside rank {self}")));
        }
        Ok(if a.is_barred() {
            self.m - a.magnitude()
        } else {
            self.m + a.magnitude() - 1
        })
    }

    pub fn letter_at(&self, c: usize) -> Letter {
        assert!(
            c < self.size(),
            "canonical index {c} out of range for {self}"
        );
        if c < self.m {
            Letter::barred(self.m - c)
        } else {
            Letter::unbarred(c - self.m + 1)
        }
    }

    /// All letters in increasing order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.size()).map(move |c| self.letter_at(c))
    }

    pub fn min_letter(&self) -> Letter {
        Letter::barred(self.m)
    }

    pub fn max_letter(&self) -> Letter {
        Letter::unbarred(self.n)
    }

    /// The index set `m-1‾, …, 1̄, 0, 1, …, n-1` in Dynkin order.
    pub fn indices(&self) -> Vec<SimpleIndex> {
        let mut out = Vec::with_capacity(self.size() - 1);
        out.extend((1..self.m).rev().map(SimpleIndex::Barred));
        out.push(SimpleIndex::Odd);
        out.extend((1..self.n).map(SimpleIndex::Unbarred));
        out
    }

    pub fn contains_index(&self, i: SimpleIndex) -> bool {
        match i {
            SimpleIndex::Barred(k) => k >= 1 && k < self.m,
            SimpleIndex::Odd => true,
            SimpleIndex::Unbarred(k) => k >= 1 && k < self.n,
        }
    }

    fn check_index(&self, i: SimpleIndex) -> Result<()> {
        if self.contains_index(i) {
            Ok(())
        } else {
            Err(Error::arg(format!(
                "simple index {i} is invalid for rank {self}"
            )))
        }
    }

    /// `α_i`.
    pub fn simple_root(&self, i: SimpleIndex) -> Result<Weight> {
        self.check_index(i)?;
        let (hi, lo) = match i {
            SimpleIndex::Barred(k) => (Letter::barred(k + 1), Letter::barred(k)),
            SimpleIndex::Odd => (Letter::barred(1), Letter::unbarred(1)),
            SimpleIndex::Unbarred(k) => (Letter::unbarred(k), Letter::unbarred(k + 1)),
        };
        Ok(Weight::basis(*self, hi)? - Weight::basis(*self, lo)?)
    }

    /// `⟨h_i, λ⟩`, defined by `ℓ_i ⟨h_i, λ⟩ = (α_i, λ)`.
    pub fn pairing(&self, i: SimpleIndex, lam: &Weight) -> Result<i64> {
        let alpha = self.simple_root(i)?;
        Ok(alpha.bilinear(lam)? / i.ell())
    }

    /// Longest element of `W = S_m × S_n`: reverses the barred and the
    /// unbarred coefficient blocks independently.
    pub fn weyl_longest(&self, lam: &Weight) -> Result<Weight> {
        self.check_weight(lam)?;
        let mut coeffs = lam.coeffs.clone();
        coeffs[..self.m].reverse();
        coeffs[self.m..].reverse();
        Ok(Weight {
            rank: *self,
            coeffs,
        })
    }

    /// Simple reflection `r_i(λ) = λ - ⟨h_i, λ⟩ α_i` for even `i`.
    pub fn reflect(&self, i: SimpleIndex, lam: &Weight) -> Result<Weight> {
        if i == SimpleIndex::Odd {
            return Err(Error::arg("the odd index has no reflection in W"));
        }
        let h = self.pairing(i, lam)?;
        Ok(lam.clone() - self.simple_root(i)?.scale(h))
    }

    /// `Δ₁⁺ = {ε_a − ε_a' : a barred, a' unbarred}`, ordered by `(a, a')`.
    pub fn odd_positive_roots(&self) -> Vec<Weight> {
        let mut out = Vec::with_capacity(self.m * self.n);
        for a in 0..self.m {
            for b in self.m..self.size() {
                let mut coeffs = vec![0; self.size()];
                coeffs[a] = 1;
                coeffs[b] = -1;
                out.push(Weight {
                    rank: *self,
                    coeffs,
                });
            }
        }
        out
    }

    /// `ρ₋ = Σ_j (1-j) ε_j`, pairing to `-1` with unbarred simple roots and
    /// to `0` with every other simple root.
    pub fn rho_minus(&self) -> Weight {
        let mut coeffs = vec![0; self.size()];
        for j in 1..=self.n {
            coeffs[self.m + j - 1] = 1 - j as i64;
        }
        Weight {
            rank: *self,
            coeffs,
        }
    }

    /// `δ = Σ_{barred} ε_b − Σ_{unbarred} ε_b`.
    pub fn delta(&self) -> Weight {
        let coeffs = (0..self.size())
            .map(|c| if c < self.m { 1 } else { -1 })
            .collect();
        Weight {
            rank: *self,
            coeffs,
        }
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank != *self {
            return Err(Error::arg(format!(
                "weight of rank {} used with rank {self}",
                w.rank
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.m, self.n)
    }
}

impl FromStr for Rank {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (m, n) = s
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("rank `{s}` is not of the form m,n")))?;
        let m = m
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad m in rank `{s}`")))?;
        let n = n
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad n in rank `{s}`")))?;
        Rank::new(m, n)
    }
}

/// One symbol of the super alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    /// `k̄`, for `k >= 1`.
    pub fn barred(k: usize) -> Letter {
        assert!(k >= 1, "letters are numbered from 1");
        Letter(-(k as i32))
    }

    /// Unbarred `k`, for `k >= 1`.
    pub fn unbarred(k: usize) -> Letter {
        assert!(k >= 1, "letters are numbered from 1");
        Letter(k as i32)
    }

    pub fn is_barred(&self) -> bool {
        self.0 < 0
    }

    pub fn magnitude(&self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// Signed label: `-k` for `k̄`, `k` otherwise.
    pub fn label(&self) -> i32 {
        self.0
    }

    pub fn from_label(label: i32) -> Result<Letter> {
        if label == 0 {
            return Err(Error::parse("0 is not a letter"));
        }
        Ok(Letter(label))
    }

    /// Horizontal domino `[self, right]` is semistandard: weakly increasing,
    /// equality only for barred letters.
    pub fn row_ok(self, right: Letter) -> bool {
        match self.cmp(&right) {
            Ordering::Less => true,
            Ordering::Equal => self.is_barred(),
            Ordering::Greater => false,
        }
    }

    /// Vertical domino with `self` on top of `below` is semistandard: weakly
    /// increasing, equality only for unbarred letters.
    pub fn column_ok(self, below: Letter) -> bool {
        match self.cmp(&below) {
            Ordering::Less => true,
            Ordering::Equal => !self.is_barred(),
            Ordering::Greater => false,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let label: i32 = s
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("`{s}` is not a letter")))?;
        Letter::from_label(label)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Element of `I = {m-1‾, …, 1̄, 0, 1, …, n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleIndex {
    Barred(usize),
    Odd,
    Unbarred(usize),
}

impl SimpleIndex {
    /// `ℓ_i`: `+1` on barred and odd indices, `-1` on unbarred ones.
    pub fn ell(&self) -> i64 {
        match self {
            SimpleIndex::Barred(_) | SimpleIndex::Odd => 1,
            SimpleIndex::Unbarred(_) => -1,
        }
    }

    pub fn is_odd(&self) -> bool {
        matches!(self, SimpleIndex::Odd)
    }
}

impl fmt::Display for SimpleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleIndex::Barred(k) => write!(f, "-{k}"),
            SimpleIndex::Odd => write!(f, "0"),
            SimpleIndex::Unbarred(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for SimpleIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("`{s}` is not a simple index")))?;
        Ok(match v.cmp(&0) {
            Ordering::Less => SimpleIndex::Barred(v.unsigned_abs() as usize),
            Ordering::Equal => SimpleIndex::Odd,
            Ordering::Greater => SimpleIndex::Unbarred(v as usize),
        })
    }
}

/// Integral weight `Σ_b c_b ε_b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    rank: Rank,
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: Rank) -> Weight {
        Weight {
            rank,
            coeffs: vec![0; rank.size()],
        }
    }

    /// `ε_a`.
    pub fn basis(rank: Rank, a: Letter) -> Result<Weight> {
        let mut w = Weight::zero(rank);
        w.coeffs[rank.index_of(a)?] = 1;
        Ok(w)
    }

    pub fn from_coeffs(rank: Rank, coeffs: Vec<i64>) -> Result<Weight> {
        if coeffs.len() != rank.size() {
            return Err(Error::arg(format!(
                "weight needs {} coefficients for rank {rank}, got {}",
                rank.size(),
                coeffs.len()
            )));
        }
        Ok(Weight { rank, coeffs })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Coefficients in canonical letter order.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, a: Letter) -> i64 {
        self.rank.index_of(a).map(|c| self.coeffs[c]).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            rank: self.rank,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// The invariant form: `(ε_a, ε_a) = 1` for barred `a`, `-1` for unbarred `a`.
    pub fn bilinear(&self, other: &Weight) -> Result<i64> {
        if self.rank != other.rank {
            return Err(Error::arg(format!(
                "bilinear form between ranks {} and {}",
                self.rank, other.rank
            )));
        }
        let m = self.rank.m;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .map(|(c, (x, y))| if c < m { x * y } else { -x * y })
            .sum())
    }

    /// `self ≥ other` in the dominance order, i.e. `self - other ∈ Q₊`.
    pub fn dominates(&self, other: &Weight) -> bool {
        if self.rank != other.rank {
            return false;
        }
        let mut prefix = 0;
        for (x, y) in self.coeffs.iter().zip(&other.coeffs) {
            prefix += x - y;
            if prefix < 0 {
                return false;
            }
        }
        prefix == 0
    }

    /// Human-readable sum such as `3e(-2)+2e(-1)+e(1)`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for (c, &k) in self.coeffs.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let letter = self.rank.letter_at(c);
            if !out.is_empty() && k > 0 {
                out.push('+');
            }
            match k {
                1 => {}
                -1 => out.push('-'),
                _ => out.push_str(&k.to_string()),
            }
            out.push_str(&format!("e({letter})"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(mut self, rhs: Weight) -> Weight {
        self += rhs;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        assert_eq!(self.rank, rhs.rank, "adding weights of different rank");
        for (x, y) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *x += y;
        }
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(m: usize, n: usize) -> Rank {
        Rank::new(m, n).unwrap()
    }

    fn eps(rank: Rank, label: i32) -> Weight {
        Weight::basis(rank, Letter::from_label(label).unwrap()).unwrap()
    }

    fn w(rank: Rank, coeffs: &[i64]) -> Weight {
        Weight::from_coeffs(rank, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn rank_zero_rejected() {
        assert!(Rank::new(0, 2).is_err());
        assert!(Rank::new(2, 0).is_err());
    }

    #[test]
    fn letter_order_matches_canonical_index() {
        for rank in [r(1, 1), r(2, 3), r(3, 2)] {
            let letters: Vec<_> = rank.letters().collect();
            for (c, a) in letters.iter().enumerate() {
                assert_eq!(rank.index_of(*a).unwrap(), c);
            }
            assert!(letters.windows(2).all(|p| p[0] < p[1]));
            assert_eq!(letters[0], rank.min_letter());
            assert_eq!(*letters.last().unwrap(), rank.max_letter());
        }
    }

    #[test]
    fn letter_text_round_trip() {
        for s in ["-3", "-1", "1", "4"] {
            assert_eq!(s.parse::<Letter>().unwrap().to_string(), s);
        }
        assert!("0".parse::<Letter>().is_err());
        assert!("x".parse::<Letter>().is_err());
    }

    #[test]
    fn bilinear_examples() {
        let rank = r(2, 2);
        assert_eq!(eps(rank, -2).bilinear(&eps(rank, -2)).unwrap(), 1);
        assert_eq!(eps(rank, 1).bilinear(&eps(rank, 1)).unwrap(), -1);
        assert_eq!(eps(rank, -2).bilinear(&eps(rank, 1)).unwrap(), 0);
        assert!(eps(rank, 1).bilinear(&eps(r(1, 3), 1)).is_err());
    }

    #[test]
    fn simple_root_examples() {
        let rank = r(2, 2);
        assert_eq!(
            rank.simple_root(SimpleIndex::Odd).unwrap(),
            eps(rank, -1) - eps(rank, 1)
        );
        assert_eq!(
            rank.simple_root(SimpleIndex::Barred(1)).unwrap(),
            eps(rank, -2) - eps(rank, -1)
        );
        assert_eq!(
            rank.simple_root(SimpleIndex::Unbarred(1)).unwrap(),
            eps(rank, 1) - eps(rank, 2)
        );
        assert!(rank.simple_root(SimpleIndex::Unbarred(2)).is_err());
        assert!(rank.simple_root(SimpleIndex::Barred(2)).is_err());
    }

    #[test]
    fn ell_values() {
        assert_eq!(SimpleIndex::Barred(1).ell(), 1);
        assert_eq!(SimpleIndex::Odd.ell(), 1);
        assert_eq!(SimpleIndex::Unbarred(1).ell(), -1);
    }

    #[test]
    fn pairing_examples() {
        let rank = r(2, 2);
        let a1 = rank.simple_root(SimpleIndex::Unbarred(1)).unwrap();
        assert_eq!(rank.pairing(SimpleIndex::Unbarred(1), &a1).unwrap(), 2);
        let a0 = rank.simple_root(SimpleIndex::Odd).unwrap();
        assert_eq!(rank.pairing(SimpleIndex::Odd, &a0).unwrap(), 0);
        assert_eq!(rank.pairing(SimpleIndex::Odd, &eps(rank, -2)).unwrap(), 0);
    }

    #[test]
    fn cartan_diagonal_and_symmetrizability() {
        for rank in [r(1, 1), r(2, 2), r(3, 2), r(2, 3)] {
            let idx = rank.indices();
            assert_eq!(idx.len(), rank.size() - 1);
            for &i in &idx {
                let ai = rank.simple_root(i).unwrap();
                let diag = rank.pairing(i, &ai).unwrap();
                assert_eq!(diag, if i.is_odd() { 0 } else { 2 });
                for &j in &idx {
                    let aj = rank.simple_root(j).unwrap();
                    assert_eq!(
                        i.ell() * rank.pairing(i, &aj).unwrap(),
                        j.ell() * rank.pairing(j, &ai).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn pairing_is_linear() {
        let rank = r(2, 3);
        let basis: Vec<_> = rank
            .letters()
            .map(|a| Weight::basis(rank, a).unwrap())
            .collect();
        for &i in &rank.indices() {
            for x in &basis {
                for y in &basis {
                    let lhs = rank.pairing(i, &(x.clone() + y.scale(3))).unwrap();
                    let rhs = rank.pairing(i, x).unwrap() + 3 * rank.pairing(i, y).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn weyl_longest_examples() {
        let rank = r(2, 2);
        // 3ε_2̄ + 2ε_1̄ + ε_1  ↦  2ε_2̄ + 3ε_1̄ + ε_2
        let lam = w(rank, &[3, 2, 1, 0]);
        let expected = w(rank, &[2, 3, 0, 1]);
        assert_eq!(rank.weyl_longest(&lam).unwrap(), expected);
        assert_eq!(
            rank.weyl_longest(&Weight::zero(rank)).unwrap(),
            Weight::zero(rank)
        );
        assert_eq!(rank.weyl_longest(&rank.delta()).unwrap(), rank.delta());
    }

    #[test]
    fn weyl_longest_is_product_of_reflections() {
        // w₀ of S_m × S_n as the reversal word of adjacent transpositions.
        let rank = r(3, 2);
        let lam = w(rank, &[5, -1, 2, 7, 3]);
        let mut word = Vec::new();
        for top in (1..rank.m()).rev() {
            for k in 1..=top {
                word.push(SimpleIndex::Barred(k));
            }
        }
        for top in (1..rank.n()).rev() {
            for k in 1..=top {
                word.push(SimpleIndex::Unbarred(k));
            }
        }
        let mut mu = lam.clone();
        for i in word {
            mu = rank.reflect(i, &mu).unwrap();
        }
        assert_eq!(mu, rank.weyl_longest(&lam).unwrap());
    }

    #[test]
    fn form_is_weyl_invariant_on_basis() {
        let rank = r(3, 2);
        let basis: Vec<_> = rank
            .letters()
            .map(|a| Weight::basis(rank, a).unwrap())
            .collect();
        for x in &basis {
            for y in &basis {
                let wx = rank.weyl_longest(x).unwrap();
                let wy = rank.weyl_longest(y).unwrap();
                assert_eq!(wx.bilinear(&wy).unwrap(), x.bilinear(y).unwrap());
            }
        }
    }

    #[test]
    fn odd_positive_root_counts() {
        let one = r(1, 1).odd_positive_roots();
        assert_eq!(one, vec![eps(r(1, 1), -1) - eps(r(1, 1), 1)]);
        assert_eq!(r(2, 2).odd_positive_roots().len(), 4);
        assert_eq!(r(3, 2).odd_positive_roots().len(), 6);
        // Δ₁⁺ = W α₀: every odd root is isotropic.
        for beta in r(3, 2).odd_positive_roots() {
            assert_eq!(beta.bilinear(&beta).unwrap(), 0);
        }
    }

    #[test]
    fn rho_minus_examples() {
        let rank = r(2, 2);
        assert_eq!(rank.rho_minus(), -eps(rank, 2));
        assert!(r(1, 1).rho_minus().is_zero());
        for rank in [r(2, 2), r(3, 3), r(1, 4)] {
            let rho = rank.rho_minus();
            for i in rank.indices() {
                let expected = if matches!(i, SimpleIndex::Unbarred(_)) {
                    -1
                } else {
                    0
                };
                assert_eq!(
                    rho.bilinear(&rank.simple_root(i).unwrap()).unwrap(),
                    expected
                );
            }
        }
    }

    #[test]
    fn delta_examples() {
        assert_eq!(r(1, 1).delta(), eps(r(1, 1), -1) - eps(r(1, 1), 1));
        for rank in [r(2, 2), r(3, 1), r(1, 3)] {
            let delta = rank.delta();
            for i in rank.indices() {
                assert_eq!(rank.pairing(i, &delta).unwrap(), 0);
            }
            assert_eq!(
                delta.bilinear(&delta).unwrap(),
                rank.m() as i64 - rank.n() as i64
            );
        }
    }

    #[test]
    fn dominance_matches_simple_root_cone() {
        let rank = r(2, 2);
        let a0 = rank.simple_root(SimpleIndex::Odd).unwrap();
        let lam = w(rank, &[3, 2, 1, 0]);
        assert!(lam.dominates(&(lam.clone() - a0.clone())));
        assert!(!(lam.clone() - a0).dominates(&lam));
        assert!(lam.dominates(&lam));
    }

    #[test]
    fn index_text_round_trip() {
        for i in r(3, 3).indices() {
            assert_eq!(i.to_string().parse::<SimpleIndex>().unwrap(), i);
        }
    }
}

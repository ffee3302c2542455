//! Exhaustive checks of the main structural results over small ranks and
//! shapes. Each suite returns a [`VerifyReport`]; an empty failure list
//! means every case passed.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::character::{
    branching_multiplicities, character, one_box_hooks, power_multiplicities, words,
};
use crate::crystal::{
    component, eps, is_highest, is_lowest, phi, tableau_apply_via, word_apply, CrystalElement, Op,
};
use crate::error::{Error, Result};
use crate::extremal::{genuine_highest, genuine_lowest, ghwt, glwt, glwt_formula, in_ptilde_plus};
use crate::insertion::{
    column_bump, column_unbump, decompose_step, knuth_psi, knuth_psi_inv, recompose_step, row_bump,
    row_unbump, word_to_pq, BumpOutcome,
};
use crate::root::{Letter, Rank, Weight};
use crate::shape::{CellPos, Partition, SkewShape};
use crate::tableau::{
    arabic_listing, enumerate_tableaux, format_word, is_admissible, japanese_listing, Tableau, Word,
};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// At most this many failure messages are kept per report.
pub const MAX_RECORDED_FAILURES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// Operators do not depend on the admissible reading.
    Reading,
    /// `B(Y)` is connected.
    Connected,
    /// The three-box Knuth moves are crystal isomorphisms.
    Knuth,
    /// Column and row bumping are crystal isomorphisms.
    Bump,
    /// Inserting a letter decomposes `B(Y₀) ⊗ B`.
    Tensor,
    /// Genuine highest and lowest weight vectors.
    Lowest,
    /// String lengths against the weight pairing.
    Strings,
    /// Tensor power multiplicities and equivariance of insertion.
    Counting,
    /// Highest weights of hook diagrams against the dominant cone.
    Cone,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::Reading,
        Theorem::Connected,
        Theorem::Knuth,
        Theorem::Bump,
        Theorem::Tensor,
        Theorem::Lowest,
        Theorem::Strings,
        Theorem::Counting,
        Theorem::Cone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Reading => "reading",
            Theorem::Connected => "connected",
            Theorem::Knuth => "knuth",
            Theorem::Bump => "bump",
            Theorem::Tensor => "tensor",
            Theorem::Lowest => "lowest",
            Theorem::Strings => "strings",
            Theorem::Counting => "counting",
            Theorem::Cone => "cone",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::parse(format!("unknown theorem id {s:?}")))
    }
}

/// Ranks and sizes to sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub ranks: Vec<Rank>,
    /// Largest number of boxes in any diagram involved; for `counting` the
    /// largest word length.
    pub max_boxes: usize,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            ranks: [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (2, 3)]
                .into_iter()
                .map(|(m, n)| Rank::new(m, n).expect("positive rank"))
                .collect(),
            max_boxes: 6,
            seed: DEFAULT_SEED,
            budget: Budget::default(),
        }
    }
}

impl VerifyConfig {
    pub fn new(ranks: Vec<Rank>, max_boxes: usize) -> VerifyConfig {
        VerifyConfig {
            ranks,
            max_boxes,
            ..VerifyConfig::default()
        }
    }

    fn range(&self) -> String {
        let ranks: Vec<String> = self.ranks.iter().map(|r| format!("({r})")).collect();
        format!("ranks {} max-boxes {}", ranks.join(" "), self.max_boxes)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub range: String,
    pub cases: usize,
    pub failure_count: usize,
    /// The first few failures.
    pub failures: Vec<String>,
    /// Wall time is left out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<10} {:>9} cases {:>6} failures {:>8} ms  {}",
            self.theorem.name(),
            self.cases,
            self.failure_count,
            self.wall_time_ms,
            self.range
        )?;
        for msg in &self.failures {
            write!(f, "\n    {msg}")?;
        }
        Ok(())
    }
}

struct Tally {
    cases: usize,
    failure_count: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally {
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(msg);
        }
    }

    /// Budget errors abort the run; anything else is a failed case.
    fn ok<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(e @ Error::Budget { .. }) => Err(e),
            Err(e) => {
                self.cases += 1;
                self.fail(format!("{}: {e}", context()));
                Ok(None)
            }
        }
    }
}

/// Runs one suite over every configured rank.
pub fn run(theorem: Theorem, config: &VerifyConfig) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut tally = Tally::new();
    for &rank in &config.ranks {
        match theorem {
            Theorem::Reading => check_reading(rank, config, &mut tally)?,
            Theorem::Connected => check_connected(rank, config, &mut tally)?,
            Theorem::Knuth => check_knuth(rank, config, &mut tally)?,
            Theorem::Bump => check_bump(rank, config, &mut tally)?,
            Theorem::Tensor => check_tensor(rank, config, &mut tally)?,
            Theorem::Lowest => check_lowest(rank, config, &mut tally)?,
            Theorem::Strings => check_strings(rank, config, &mut tally)?,
            Theorem::Counting => check_counting(rank, config, &mut tally)?,
            Theorem::Cone => check_cone(rank, config, &mut tally)?,
        }
    }
    Ok(VerifyReport {
        theorem,
        range: config.range(),
        cases: tally.cases,
        failure_count: tally.failure_count,
        failures: tally.failures,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

pub fn run_all(config: &VerifyConfig) -> Result<Vec<VerifyReport>> {
    Theorem::ALL.into_iter().map(|t| run(t, config)).collect()
}

const OPS: [Op; 2] = [Op::Lower, Op::Raise];

fn op_name(op: Op) -> &'static str {
    match op {
        Op::Lower => "f",
        Op::Raise => "e",
    }
}

fn hook_crystals(
    rank: Rank,
    max_boxes: usize,
    budget: &Budget,
) -> Result<Vec<(Partition, Vec<Tableau>)>> {
    Partition::hooks_up_to(max_boxes, rank)
        .into_iter()
        .map(|y| {
            let all = enumerate_tableaux(&SkewShape::straight(y.clone()), rank, budget)?;
            Ok((y, all))
        })
        .collect()
}

/// A uniformly chosen next cell among those whose strictly higher cells are
/// all listed already.
pub fn random_admissible_listing(shape: &SkewShape, rng: &mut ChaCha8Rng) -> Vec<CellPos> {
    let mut pending = shape.cells();
    let mut out = Vec::with_capacity(pending.len());
    while !pending.is_empty() {
        let ready: Vec<usize> = (0..pending.len())
            .filter(|&k| !pending.iter().any(|d| d.strictly_higher_than(&pending[k])))
            .collect();
        let &k = ready.choose(rng).expect("some pending cell is maximal");
        out.push(pending.swap_remove(k));
    }
    out
}

fn check_reading(rank: Rank, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    let mut rng =
        ChaCha8Rng::seed_from_u64(config.seed ^ ((rank.m() as u64) << 32 | rank.n() as u64));
    for (y, all) in hook_crystals(rank, config.max_boxes, &config.budget)? {
        let shape = SkewShape::straight(y.clone());
        let japanese = japanese_listing(&shape);
        let arabic = arabic_listing(&shape);
        let random = random_admissible_listing(&shape, &mut rng);
        tally.check(is_admissible(&random, &shape)?, || {
            format!("random listing for {y} is not admissible")
        });
        for t in &all {
            for i in rank.indices() {
                for op in OPS {
                    let ctx = || {
                        format!(
                            "{}_{i} on {} at rank {rank}",
                            op_name(op),
                            format_word(&t.japanese_reading())
                        )
                    };
                    let Some(a) = tally.ok(tableau_apply_via(i, op, t, &japanese), ctx)? else {
                        continue;
                    };
                    let Some(b) = tally.ok(tableau_apply_via(i, op, t, &arabic), ctx)? else {
                        continue;
                    };
                    let Some(c) = tally.ok(tableau_apply_via(i, op, t, &random), ctx)? else {
                        continue;
                    };
                    tally.check(a == b, || {
                        format!("{}: Japanese and Arabic readings disagree", ctx())
                    });
                    tally.check(a == c, || {
                        format!("{}: a random admissible reading disagrees", ctx())
                    });
                }
            }
        }
    }
    Ok(())
}

fn check_connected(rank: Rank, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    for (y, all) in hook_crystals(rank, config.max_boxes, &config.budget)? {
        let h = genuine_highest(&y, rank)?;
        let Some(graph) = tally.ok(component(rank, &h, &config.budget), || {
            format!("component of H_Y for {y}")
        })?
        else {
            continue;
        };
        let expected: HashSet<&Tableau> = all.iter().collect();
        let found: HashSet<&Tableau> = graph.vertices.iter().collect();
        tally.check(graph.len() == all.len() && found == expected, || {
            format!(
                "rank {rank}, shape {y}: component has {} vertices, B(Y) has {}",
                graph.len(),
                all.len()
            )
        });
    }
    Ok(())
}

fn check_strings(rank: Rank, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    for (y, all) in hook_crystals(rank, config.max_boxes, &config.budget)? {
        for t in &all {
            let wt = t.weight(rank)?;
            for i in rank.indices() {
                let h = rank.pairing(i, &wt)?;
                let ctx = || {
                    format!(
                        "rank {rank}, shape {y}, {} at {i}",
                        format_word(&t.japanese_reading())
                    )
                };
                let Some(e) = tally.ok(eps(rank, i, t), ctx)? else {
                    continue;
                };
                let Some(f) = tally.ok(phi(rank, i, t), ctx)? else {
                    continue;
                };
                if i.is_odd() {
                    let ok = e + f <= 1 && ((e + f == 1) == (h != 0));
                    tally.check(ok, || format!("{}: φ={f}, ε={e}, pairing {h}", ctx()));
                } else {
                    tally.check(h == f as i64 - e as i64, || {
                        format!("{}: φ−ε = {} but pairing {h}", ctx(), f as i64 - e as i64)
                    });
                }
            }
        }
    }
    Ok(())
}

fn check_knuth(rank: Rank, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    let straight: SkewShape = "2,1".parse()?;
    let skew: SkewShape = "2,2/1".parse()?;
    let sources = enumerate_tableaux(&straight, rank, &config.budget)?;
    let targets = enumerate_tableaux(&skew, rank, &config.budget)?;
    let mut image = HashSet::new();
    for t in &sources {
        let ctx = || format!("rank {rank}, ψ on {}", format_word(&t.japanese_reading()));
        let Some(u) = tally.ok(knuth_psi(t), ctx)? else {
            continue;
        };
        tally.check(u.shape() == &skew && u.is_semistandard(), || {
            format!("{}: bad image {u}", ctx())
        });
        let back = tally.ok(knuth_psi_inv(&u), ctx)?;
        tally.check(back.as_ref() == Some(t), || {
            format!("{}: ψ⁻¹ψ is not the identity", ctx())
        });
        tally.check(image.insert(u.clone()), || {
            format!("{}: ψ is not injective", ctx())
        });
        check_morphism(rank, tally, t, &u, &|x: &Tableau| knuth_psi(x), &ctx)?;
    }
    let target_set: HashSet<Tableau> = targets.iter().cloned().collect();
    tally.check(image == target_set, || {
        format!("rank {rank}: ψ is not onto the (2,2)/(1) fillings")
    });
    for u in &targets {
        let ctx = || format!("rank {rank}, ψ⁻¹ on {}", format_word(&u.japanese_reading()));
        let Some(t) = tally.ok(knuth_psi_inv(u), ctx)? else {
            continue;
        };
        let again = tally.ok(knuth_psi(&t), ctx)?;
        tally.check(again.as_ref() == Some(u), || {
            format!("{}: ψψ⁻¹ is not the identity", ctx())
        });
        check_morphism(rank, tally, u, &t, &|x: &Tableau| knuth_psi_inv(x), &ctx)?;
    }
    Ok(())
}

/// `map(op x) = op map(x)` for every operator, with 0 ↦ 0.
fn check_morphism<T: CrystalElement, U: CrystalElement + fmt::Debug>(
    rank: Rank,
    tally: &mut Tally,
    x: &T,
    image: &U,
    map: &dyn Fn(&T) -> Result<U>,
    ctx: &dyn Fn() -> String,
) -> Result<()> {
    for i in rank.indices() {
        for op in OPS {
            let Some(moved) = tally.ok(x.apply(rank, i, op), ctx)? else {
                continue;
            };
            let lhs = match moved {
                Some(m) => match tally.ok(map(&m), ctx)? {
                    Some(v) => Some(v),
                    None => continue,
                },
                None => None,
            };
            let Some(rhs) = tally.ok(image.apply(rank, i, op), ctx)? else {
                continue;
            };
            tally.check(lhs == rhs, || {
                format!("{}: does not commute with {}_{i}", ctx(), op_name(op))
            });
        }
    }
    Ok(())
}

fn columns(rank: Rank, len: usize, budget: &Budget) -> Result<Vec<Word>> {
    let shape = SkewShape::straight(Partition::new(vec![1; len])?);
    Ok(enumerate_tableaux(&shape, rank, budget)?
        .iter()
        .map(Tableau::japanese_reading)
        .collect())
}

fn rows(rank: Rank, len: usize, budget: &Budget) -> Result<Vec<Word>> {
    let shape = SkewShape::straight(Partition::new(vec![len])?);
    Ok(enumerate_tableaux(&shape, rank, budget)?
        .into_iter()
        .map(|t| t.rows()[0].clone())
        .collect())
}

fn reversed(w: &[Letter]) -> Word {
    w.iter().rev().copied().collect()
}

/// A bumping map written on words: `x ⊗ b ↦ b' ⊗ x'` or its inverse.
type WordMap<'a> = &'a dyn Fn(&[Letter]) -> Result<Word>;

/// Checks that `map` is a bijection from `domain` onto `codomain` that
/// commutes with every operator, and that `inverse` undoes it.
fn check_word_iso(
    rank: Rank,
    tally: &mut Tally,
    label: &str,
    domain: &[Word],
    codomain: &[Word],
    map: WordMap,
    inverse: WordMap,
) -> Result<()> {
    let mut image = HashSet::new();
    for w in domain {
        let ctx = || format!("rank {rank}, {label} on {}", format_word(w));
        let Some(v) = tally.ok(map(w), ctx)? else {
            continue;
        };
        let back = tally.ok(inverse(&v), ctx)?;
        tally.check(back.as_ref() == Some(w), || {
            format!("{}: inverse fails", ctx())
        });
        tally.check(image.insert(v.clone()), || {
            format!("{}: not injective", ctx())
        });
        for i in rank.indices() {
            for op in OPS {
                let lhs = match word_apply(i, op, w) {
                    Some(m) => match tally.ok(map(&m), ctx)? {
                        Some(x) => Some(x),
                        None => continue,
                    },
                    None => None,
                };
                tally.check(lhs == word_apply(i, op, &v), || {
                    format!("{}: does not commute with {}_{i}", ctx(), op_name(op))
                });
            }
        }
    }
    let target: HashSet<Word> = codomain.iter().cloned().collect();
    tally.check(image == target, || {
        format!("rank {rank}, {label}: not onto")
    });
    Ok(())
}

fn outcome_word(out: &BumpOutcome) -> Word {
    [&[out.emitted()][..], out.remaining()].concat()
}

fn check_bump(rank: Rank, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    let letters: Vec<Letter> = rank.letters().collect();
    for len in 1..=config.max_boxes.min(4) {
        // Column: the word of column ⊗ b is a_1 … a_r b; b ⊗ column is b a_1 … a_r.
        let cols = columns(rank, len, &config.budget)?;
        let col_then_letter: Vec<Word> = cols
            .iter()
            .flat_map(|c| letters.iter().map(move |&b| [c.clone(), vec![b]].concat()))
            .collect();
        let letter_then_col: Vec<Word> = cols
            .iter()
            .flat_map(|c| letters.iter().map(move |&b| [vec![b], c.clone()].concat()))
            .collect();
        let psi = |w: &[Letter]| column_bump(&w[..len], w[len]).map(|o| outcome_word(&o));
        let psi_inv = |w: &[Letter]| {
            column_unbump(w[0], &w[1..]).map(|o| [o.remaining(), &[o.emitted()][..]].concat())
        };
        check_word_iso(
            rank,
            tally,
            "column bump",
            &col_then_letter,
            &letter_then_col,
            &psi,
            &psi_inv,
        )?;
        check_word_iso(
            rank,
            tally,
            "column unbump",
            &letter_then_col,
            &col_then_letter,
            &psi_inv,
            &psi,
        )?;
        let column_shape = Partition::new(vec![1; len])?;
        check_split(rank, config, tally, &column_shape, &col_then_letter)?;

        // Row: a row a_1 … a_r reads as a_r … a_1.
        let rws = rows(rank, len, &config.budget)?;
        let row_then_letter: Vec<Word> = rws
            .iter()
            .flat_map(|r| {
                letters
                    .iter()
                    .map(move |&b| [reversed(r), vec![b]].concat())
            })
            .collect();
        let letter_then_row: Vec<Word> = rws
            .iter()
            .flat_map(|r| {
                letters
                    .iter()
                    .map(move |&b| [vec![b], reversed(r)].concat())
            })
            .collect();
        let phi_map = |w: &[Letter]| {
            row_bump(&reversed(&w[..len]), w[len])
                .map(|o| [vec![o.emitted()], reversed(o.remaining())].concat())
        };
        let phi_inv = |w: &[Letter]| {
            row_unbump(w[0], &reversed(&w[1..]))
                .map(|o| [reversed(o.remaining()), vec![o.emitted()]].concat())
        };
        check_word_iso(
            rank,
            tally,
            "row bump",
            &row_then_letter,
            &letter_then_row,
            &phi_map,
            &phi_inv,
        )?;
        check_word_iso(
            rank,
            tally,
            "row unbump",
            &letter_then_row,
            &row_then_letter,
            &phi_inv,
            &phi_map,
        )?;
        let row_shape = Partition::new(vec![len])?;
        check_split(rank, config, tally, &row_shape, &row_then_letter)?;
    }
    Ok(())
}

/// Connected components of the words `x ⊗ b` against the characters of the
/// one-box hook extensions of the shape of `x`.
fn check_split(
    rank: Rank,
    config: &VerifyConfig,
    tally: &mut Tally,
    y0: &Partition,
    words: &[Word],
) -> Result<()> {
    let mut seen: HashSet<&Word> = HashSet::new();
    let mut found: Vec<Vec<(Weight, usize)>> = Vec::new();
    let mut closed = true;
    let all: HashSet<&Word> = words.iter().collect();
    for w in words {
        if seen.contains(w) {
            continue;
        }
        let comp = component(rank, w, &config.budget)?;
        let mut hist: BTreeMap<Weight, usize> = BTreeMap::new();
        for v in &comp.vertices {
            match all.get(v) {
                Some(&orig) => {
                    seen.insert(orig);
                }
                None => closed = false,
            }
            *hist.entry(v.weight(rank)?).or_insert(0) += 1;
        }
        found.push(hist.into_iter().collect());
    }
    let mut expected: Vec<Vec<(Weight, usize)>> = Vec::new();
    for y in one_box_hooks(y0, rank)? {
        expected.push(
            character(&y, rank, &config.budget)?
                .iter()
                .map(|(w, c)| (w.clone(), c))
                .collect(),
        );
    }
    found.sort();
    expected.sort();
    tally.check(closed && found == expected, || {
        format!(
            "rank {rank}, B({y0}) ⊗ B: {} components do not match {} summands",
            found.len(),
            expected.len()
        )
    });
    Ok(())
}

fn check_tensor(rank: Rank, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    let letters: Vec<Letter> = rank.letters().collect();
    let sizes = config.max_boxes.saturating_sub(1);
    for (y0, all) in hook_crystals(rank, sizes, &config.budget)? {
        let shape = SkewShape::straight(y0.clone());
        let listing = japanese_listing(&shape);
        let mut image: HashSet<Tableau> = HashSet::new();
        let mut shapes_hit: BTreeSet<Partition> = BTreeSet::new();
        let decompose_word = |w: &[Letter]| -> Result<Tableau> {
            let k = w.len() - 1;
            let x = Tableau::from_reading(&shape, &listing, &w[..k])?;
            Ok(decompose_step(&x, w[k])?.1)
        };
        for x in &all {
            for &b in &letters {
                let src = [x.japanese_reading(), vec![b]].concat();
                let ctx = || {
                    format!(
                        "rank {rank}, decompose {} ⊗ {b}",
                        format_word(&x.japanese_reading())
                    )
                };
                let Some((y, t, cell)) = tally.ok(decompose_step(x, b), ctx)? else {
                    continue;
                };
                shapes_hit.insert(y.clone());
                tally.check(image.insert(t.clone()), || {
                    format!("{}: not injective", ctx())
                });
                let back = tally.ok(recompose_step(&t, cell, &y0), ctx)?;
                tally.check(back == Some((x.clone(), b)), || {
                    format!("{}: recompose does not invert", ctx())
                });
                for i in rank.indices() {
                    for op in OPS {
                        let lhs = match word_apply(i, op, &src) {
                            Some(m) => match tally.ok(decompose_word(&m), ctx)? {
                                Some(v) => Some(v),
                                None => continue,
                            },
                            None => None,
                        };
                        let Some(rhs) = tally.ok(
                            tableau_apply_via(i, op, &t, &japanese_listing(t.shape())),
                            ctx,
                        )?
                        else {
                            continue;
                        };
                        tally.check(lhs == rhs, || {
                            format!("{}: does not commute with {}_{i}", ctx(), op_name(op))
                        });
                    }
                }
            }
        }
        let expected: BTreeSet<Partition> = one_box_hooks(&y0, rank)?.into_iter().collect();
        tally.check(shapes_hit == expected, || {
            format!("rank {rank}, Y₀ = {y0}: shapes {shapes_hit:?} reached")
        });
        let mut target: HashSet<Tableau> = HashSet::new();
        for y in &expected {
            target.extend(enumerate_tableaux(
                &SkewShape::straight(y.clone()),
                rank,
                &config.budget,
            )?);
        }
        tally.check(image == target, || {
            format!("rank {rank}, Y₀ = {y0}: image is not the union of B(Y)")
        });
    }
    Ok(())
}

fn check_lowest(rank: Rank, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    for (y, all) in hook_crystals(rank, config.max_boxes, &config.budget)? {
        let h = genuine_highest(&y, rank)?;
        let lo = genuine_lowest(&y, rank)?;
        let hw = ghwt(&y, rank)?;
        let lw = glwt(&y, rank)?;
        let mut at_h = 0;
        let mut at_l = 0;
        for t in &all {
            let wt = t.weight(rank)?;
            at_h += usize::from(wt == hw);
            at_l += usize::from(wt == lw);
            tally.check(hw.dominates(&wt) && wt.dominates(&lw), || {
                format!(
                    "rank {rank}, shape {y}: {} escapes the extremal weights",
                    format_word(&t.japanese_reading())
                )
            });
        }
        tally.check(h.weight(rank)? == hw && is_highest(rank, &h)?, || {
            format!("rank {rank}, shape {y}: H_Y")
        });
        tally.check(lo.weight(rank)? == lw && is_lowest(rank, &lo)?, || {
            format!("rank {rank}, shape {y}: L_Y")
        });
        tally.check(at_h == 1 && at_l == 1, || {
            format!("rank {rank}, shape {y}: extremal weights not simple")
        });
        tally.check(glwt_formula(&hw, rank)? == lw, || {
            format!("rank {rank}, shape {y}: lowest weight formula")
        });
    }
    Ok(())
}

fn check_counting(rank: Rank, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    let mut sizes: HashMap<Partition, usize> = HashMap::new();
    for k in 0..=config.max_boxes {
        let mults = power_multiplicities(k, rank, &config.budget)?;
        let mut mass = 0usize;
        for (y, c) in &mults {
            if !sizes.contains_key(y) {
                let n = enumerate_tableaux(&SkewShape::straight(y.clone()), rank, &config.budget)?
                    .len();
                sizes.insert(y.clone(), n);
            }
            mass += c * sizes[y];
        }
        let total = rank.size().pow(k as u32);
        tally.check(mass == total, || {
            format!("rank {rank}, k = {k}: Σ mult·|B(Y)| = {mass}, expected {total}")
        });
        tally.check(mults == branching_multiplicities(k, rank)?, || {
            format!("rank {rank}, k = {k}: multiplicities differ from the one-box rule")
        });
        for w in words(rank, k, &config.budget)? {
            let ctx = || format!("rank {rank}, word {}", format_word(&w));
            let Some((p, q)) = tally.ok(word_to_pq(&w), ctx)? else {
                continue;
            };
            tally.check(
                p.shape().is_straight() && p.shape().outer().is_hook(rank),
                || format!("{}: P is not a hook tableau", ctx()),
            );
            for i in rank.indices() {
                for op in OPS {
                    let Some(moved) = word_apply(i, op, &w) else {
                        continue;
                    };
                    let Some((p2, q2)) = tally.ok(word_to_pq(&moved), ctx)? else {
                        continue;
                    };
                    let Some(rhs) = tally.ok(p.apply(rank, i, op), ctx)? else {
                        continue;
                    };
                    tally.check(Some(p2) == rhs && q2 == q, || {
                        format!(
                            "{}: insertion does not commute with {}_{i}",
                            ctx(),
                            op_name(op)
                        )
                    });
                }
            }
        }
    }
    Ok(())
}

/// Nonnegative weights with coefficient sum at most `total`.
fn weight_box(rank: Rank, total: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank.size()];
    fn fill(pos: usize, left: i64, cur: &mut Vec<i64>, rank: Rank, out: &mut Vec<Weight>) {
        if pos == cur.len() {
            out.push(Weight::from_coeffs(rank, cur.clone()).expect("length matches rank"));
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            fill(pos + 1, left - v, cur, rank, out);
        }
        cur[pos] = 0;
    }
    fill(0, total as i64, &mut cur, rank, &mut out);
    out
}

fn check_cone(rank: Rank, config: &VerifyConfig, tally: &mut Tally) -> Result<()> {
    let mut image: HashMap<Weight, Partition> = HashMap::new();
    for y in Partition::hooks_up_to(config.max_boxes, rank) {
        let lam = ghwt(&y, rank)?;
        tally.check(in_ptilde_plus(&lam, rank)?, || {
            format!("rank {rank}: ghwt({y}) lies outside the cone")
        });
        if let Some(other) = image.insert(lam.clone(), y.clone()) {
            tally.fail(format!("rank {rank}: ghwt({y}) = ghwt({other})"));
        }
        tally.check(glwt_formula(&lam, rank)? == glwt(&y, rank)?, || {
            format!("rank {rank}: lowest weight formula fails at {y}")
        });
    }
    for lam in weight_box(rank, config.max_boxes) {
        if in_ptilde_plus(&lam, rank)? {
            tally.check(image.contains_key(&lam), || {
                format!(
                    "rank {rank}: {} lies in the cone but is no ghwt(Y)",
                    lam.pretty()
                )
            });
        }
    }
    Ok(())
}

/// Parses rank lists such as `1,1;2,2` or `1,1 2,2`.
pub fn parse_ranks(s: &str) -> Result<Vec<Rank>> {
    let ranks: Vec<Rank> = s
        .split(|c: char| c == ';' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    if ranks.is_empty() {
        return Err(Error::parse("empty rank list"));
    }
    Ok(ranks)
}

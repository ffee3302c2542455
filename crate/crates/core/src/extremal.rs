//! Genuine highest and lowest weight tableaux of hook diagrams, and the
//! correspondence between hook diagrams and dominant weights.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root::{Letter, Rank, SimpleIndex, Weight};
use crate::shape::{CellPos, Partition, SkewShape};
use crate::tableau::Tableau;

/// Row lengths `a` of the first `m` rows, column lengths `c` of the first
/// `n` columns, and their overflow `b_i = max(a_i − n, 0)`, `d_j = max(c_j − m, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookProfile {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
}

impl HookProfile {
    pub fn new(y: &Partition, rank: Rank) -> Result<HookProfile> {
        require_hook(y, rank)?;
        let (m, n) = (rank.m(), rank.n());
        let a: Vec<usize> = (1..=m).map(|i| y.row_len(i)).collect();
        let c: Vec<usize> = (1..=n).map(|j| y.col_len(j)).collect();
        let b = a.iter().map(|&x| x.saturating_sub(n)).collect();
        let d = c.iter().map(|&x| x.saturating_sub(m)).collect();
        Ok(HookProfile { a, b, c, d })
    }
}

fn require_hook(y: &Partition, rank: Rank) -> Result<()> {
    if y.is_hook(rank) {
        Ok(())
    } else {
        Err(Error::arg(format!("{y} is not a ({rank})-hook diagram")))
    }
}

/// `H_Y`: row `i ≤ m` filled with `(m+1−i)‾`, leg column `j` filled with `j`.
pub fn genuine_highest(y: &Partition, rank: Rank) -> Result<Tableau> {
    require_hook(y, rank)?;
    let m = rank.m();
    let rows = (1..=y.num_rows())
        .map(|i| {
            (1..=y.row_len(i))
                .map(|j| {
                    if i <= m {
                        Letter::barred(m + 1 - i)
                    } else {
                        Letter::unbarred(j)
                    }
                })
                .collect()
        })
        .collect();
    Tableau::from_rows(rows)
}

/// `L_Y`: row `i` opens with `b_i` barred cells, whose columns read
/// `…, 2̄, 1̄` upwards from the bottom; the rest of the row is the run of
/// unbarred letters ending in `n`.
pub fn genuine_lowest(y: &Partition, rank: Rank) -> Result<Tableau> {
    require_hook(y, rank)?;
    let n = rank.n();
    let b: Vec<usize> = y.rows().iter().map(|&a| a.saturating_sub(n)).collect();
    let mut t = Tableau::placeholder(SkewShape::straight(y.clone()));
    for (idx, &a) in y.rows().iter().enumerate() {
        let i = idx + 1;
        for c in 1..=a {
            let letter = if c <= b[idx] {
                let height = b.iter().filter(|&&bi| bi >= c).count();
                Letter::barred(height - i + 1)
            } else {
                Letter::unbarred(n + c - a)
            };
            t.set(CellPos::new(i, c), letter);
        }
    }
    Ok(t)
}

/// `Σ a_i ε_{(m+1−i)‾} + Σ d_j ε_j`.
pub fn ghwt(y: &Partition, rank: Rank) -> Result<Weight> {
    let p = HookProfile::new(y, rank)?;
    let (m, n) = (rank.m(), rank.n());
    let mut coeffs = vec![0i64; rank.size()];
    for i in 1..=m {
        coeffs[rank.index_of(Letter::barred(m + 1 - i))?] = p.a[i - 1] as i64;
    }
    for j in 1..=n {
        coeffs[rank.index_of(Letter::unbarred(j))?] = p.d[j - 1] as i64;
    }
    Weight::from_coeffs(rank, coeffs)
}

/// `b_m ε_m̄ + … + b_1 ε_1̄ + c_n ε_1 + … + c_1 ε_n`.
pub fn glwt(y: &Partition, rank: Rank) -> Result<Weight> {
    let p = HookProfile::new(y, rank)?;
    let (m, n) = (rank.m(), rank.n());
    let mut coeffs = vec![0i64; rank.size()];
    for k in 1..=m {
        coeffs[rank.index_of(Letter::barred(k))?] = p.b[k - 1] as i64;
    }
    for j in 1..=n {
        coeffs[rank.index_of(Letter::unbarred(j))?] = p.c[n - j] as i64;
    }
    Weight::from_coeffs(rank, coeffs)
}

/// `⟨h_i, λ⟩ ≥ 0` for every `i`, and `⟨h_0 − h_1 − … − h_k, λ⟩ ≥ k` whenever
/// `⟨h_k, λ⟩ > 0`.
pub fn in_ptilde(lam: &Weight, rank: Rank) -> Result<bool> {
    if lam.rank() != rank {
        return Err(Error::arg(format!(
            "weight of rank {} used with rank {rank}",
            lam.rank()
        )));
    }
    for i in rank.indices() {
        if rank.pairing(i, lam)? < 0 {
            return Ok(false);
        }
    }
    let mut running = rank.pairing(SimpleIndex::Odd, lam)?;
    for k in 1..rank.n() {
        let hk = rank.pairing(SimpleIndex::Unbarred(k), lam)?;
        running -= hk;
        if hk > 0 && running < k as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn in_ptilde_plus(lam: &Weight, rank: Rank) -> Result<bool> {
    Ok(in_ptilde(lam, rank)? && lam.coeffs().iter().all(|&x| x >= 0))
}

/// Exactly the weights `ghwt(Y)` of hook diagrams: the cone `P̃⁺` cut down
/// by one more condition, that a positive coefficient at `ε_n` forces the
/// coefficient at `ε_1̄` to be at least `n`. Without it, `P̃⁺` also holds
/// weights such as `ε_1` for `(m,n) = (1,1)`, which equal `ghwt(Y) − kδ`
/// for some `Y` but are not themselves of the form `ghwt(Y)`.
pub fn is_hook_weight(lam: &Weight, rank: Rank) -> Result<bool> {
    let top = lam.coeff(Letter::unbarred(rank.n()));
    let first = lam.coeff(Letter::barred(1));
    Ok(in_ptilde_plus(lam, rank)? && (top == 0 || first >= rank.n() as i64))
}

/// The hook diagram `Y_λ` with `ghwt(Y_λ) = λ`.
pub fn shape_from_weight(lam: &Weight, rank: Rank) -> Result<Partition> {
    if !in_ptilde_plus(lam, rank)? {
        return Err(Error::arg(format!(
            "{} is not in the dominant cone",
            lam.pretty()
        )));
    }
    let (m, n) = (rank.m(), rank.n());
    let a: Vec<usize> = (1..=m)
        .map(|i| lam.coeff(Letter::barred(m + 1 - i)) as usize)
        .collect();
    let d: Vec<usize> = (1..=n)
        .map(|j| lam.coeff(Letter::unbarred(j)) as usize)
        .collect();
    let c: Vec<usize> = (1..=n)
        .map(|j| a.iter().filter(|&&ai| ai >= j).count() + d[j - 1])
        .collect();
    // Rows below m are read off the leg columns.
    let mut rows: Vec<usize> = a.clone();
    let leg_depth = d.iter().copied().max().unwrap_or(0);
    for r in 1..=leg_depth {
        rows.push(d.iter().filter(|&&dj| dj >= r).count());
    }
    let y = Partition::new(rows)
        .map_err(|e| Error::arg(format!("{} gives no diagram: {e}", lam.pretty())))?;
    let check = HookProfile::new(&y, rank)?;
    if check.a != a || check.c != c || ghwt(&y, rank)? != *lam {
        return Err(Error::arg(format!(
            "{} does not come from a hook diagram",
            lam.pretty()
        )));
    }
    Ok(y)
}

/// `w_0(λ − Σ_{β ∈ Δ₁⁺, (λ+ρ₋, β) > 0} β)`.
pub fn glwt_formula(lam: &Weight, rank: Rank) -> Result<Weight> {
    if !in_ptilde_plus(lam, rank)? {
        return Err(Error::arg(format!(
            "{} is not in the dominant cone",
            lam.pretty()
        )));
    }
    let shifted = lam.clone() + rank.rho_minus();
    let mut mu = lam.clone();
    for beta in rank.odd_positive_roots() {
        if shifted.bilinear(&beta)? > 0 {
            mu = mu - beta;
        }
    }
    rank.weyl_longest(&mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::crystal::{is_highest, is_lowest};
    use crate::tableau::enumerate_tableaux;

    fn l(k: i32) -> Letter {
        Letter::from_label(k).unwrap()
    }

    fn rank(m: usize, n: usize) -> Rank {
        Rank::new(m, n).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(rows: &[&[i32]]) -> Tableau {
        Tableau::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&k| l(k)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn w(r: Rank, coeffs: &[i64]) -> Weight {
        Weight::from_coeffs(r, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn figure_extremal_tableaux() {
        let r = rank(2, 2);
        let y = p("3,2,1");
        assert_eq!(
            genuine_highest(&y, r).unwrap(),
            t(&[&[-2, -2, -2], &[-1, -1], &[1]])
        );
        assert_eq!(
            genuine_lowest(&y, r).unwrap(),
            t(&[&[-1, 1, 2], &[1, 2], &[2]])
        );
        assert_eq!(ghwt(&y, r).unwrap(), w(r, &[3, 2, 1, 0]));
        assert_eq!(glwt(&y, r).unwrap(), w(r, &[0, 1, 2, 3]));
    }

    #[test]
    fn single_box_and_empty() {
        for r in [rank(1, 1), rank(3, 2)] {
            let one = p("1");
            assert_eq!(
                genuine_highest(&one, r).unwrap(),
                Tableau::column(&[r.min_letter()])
            );
            assert_eq!(
                genuine_lowest(&one, r).unwrap(),
                Tableau::column(&[r.max_letter()])
            );
            assert!(ghwt(&Partition::empty(), r).unwrap().is_zero());
            assert!(glwt(&Partition::empty(), r).unwrap().is_zero());
        }
    }

    #[test]
    fn leg_column_repeats_its_index() {
        let r = rank(2, 2);
        let y = p("1,1,1,1");
        assert_eq!(
            genuine_highest(&y, r).unwrap(),
            t(&[&[-2], &[-1], &[1], &[1]])
        );
        assert_eq!(ghwt(&y, r).unwrap(), w(r, &[1, 1, 2, 0]));
    }

    #[test]
    fn non_hook_rejected() {
        let r = rank(1, 1);
        assert!(genuine_highest(&p("2,2"), r).is_err());
        assert!(genuine_lowest(&p("2,2"), r).is_err());
        assert!(ghwt(&p("2,2"), r).is_err());
    }

    #[test]
    fn ptilde_examples() {
        let r = rank(2, 2);
        assert!(in_ptilde(&w(r, &[3, 2, 1, 0]), r).unwrap());
        assert!(in_ptilde(&r.delta(), r).unwrap());
        assert!(!in_ptilde_plus(&r.delta(), r).unwrap());
        assert!(!in_ptilde(&w(r, &[0, 0, 1, 0]), r).unwrap());
    }

    #[test]
    fn shape_from_weight_examples() {
        let r = rank(2, 2);
        assert_eq!(
            shape_from_weight(&w(r, &[3, 2, 1, 0]), r).unwrap(),
            p("3,2,1")
        );
        assert_eq!(shape_from_weight(&w(r, &[1, 0, 0, 0]), r).unwrap(), p("1"));
        assert!(shape_from_weight(&w(r, &[0, 0, 1, 0]), r).is_err());
    }

    #[test]
    fn glwt_formula_examples() {
        let r = rank(2, 2);
        assert_eq!(
            glwt_formula(&w(r, &[3, 2, 1, 0]), r).unwrap(),
            w(r, &[0, 1, 2, 3])
        );
        for r in [rank(1, 1), rank(2, 3), rank(3, 2)] {
            let top = Weight::basis(r, r.min_letter()).unwrap();
            let bottom = Weight::basis(r, r.max_letter()).unwrap();
            assert_eq!(glwt_formula(&top, r).unwrap(), bottom);
        }
    }

    #[test]
    fn full_body_formula_degenerates() {
        for r in [rank(1, 1), rank(2, 2), rank(2, 3)] {
            for k in 0..=7 {
                for y in Partition::hooks_of_size(k, r) {
                    if !y.has_full_body(r) {
                        continue;
                    }
                    let lam = ghwt(&y, r).unwrap();
                    let mut expected = r.weyl_longest(&lam).unwrap();
                    for beta in r.odd_positive_roots() {
                        expected = expected - beta;
                    }
                    assert_eq!(glwt_formula(&lam, r).unwrap(), expected, "{y}");
                }
            }
        }
    }

    #[test]
    fn rho_minus_representative_is_irrelevant() {
        // Shifting ρ₋ by a multiple of δ leaves every test in the formula unchanged.
        for r in [rank(2, 2), rank(3, 2), rank(2, 3)] {
            for k in 0..=6 {
                for y in Partition::hooks_of_size(k, r) {
                    let lam = ghwt(&y, r).unwrap();
                    for t in -3..=3 {
                        let rho = r.rho_minus() + r.delta().scale(t);
                        let shifted = lam.clone() + rho;
                        let base = lam.clone() + r.rho_minus();
                        for beta in r.odd_positive_roots() {
                            assert_eq!(
                                shifted.bilinear(&beta).unwrap() > 0,
                                base.bilinear(&beta).unwrap() > 0
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn extremal_vectors_against_enumeration() {
        let b = Budget::default();
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3)] {
            let r = rank(m, n);
            for y in Partition::hooks_up_to(5, r) {
                let all = enumerate_tableaux(&SkewShape::straight(y.clone()), r, &b).unwrap();
                let h = genuine_highest(&y, r).unwrap();
                let lo = genuine_lowest(&y, r).unwrap();
                assert!(
                    h.validate_semistandard(r) && lo.validate_semistandard(r),
                    "{y}"
                );
                assert!(
                    is_highest(r, &h).unwrap() && is_lowest(r, &lo).unwrap(),
                    "{y}"
                );
                let hw = ghwt(&y, r).unwrap();
                let lw = glwt(&y, r).unwrap();
                assert_eq!(h.weight(r).unwrap(), hw);
                assert_eq!(lo.weight(r).unwrap(), lw);
                let at_h: Vec<_> = all.iter().filter(|x| x.weight(r).unwrap() == hw).collect();
                let at_l: Vec<_> = all.iter().filter(|x| x.weight(r).unwrap() == lw).collect();
                assert_eq!(at_h, vec![&h]);
                assert_eq!(at_l, vec![&lo]);
                for x in &all {
                    let wt = x.weight(r).unwrap();
                    assert!(hw.dominates(&wt) && wt.dominates(&lw), "{y}");
                    // H_Y is entrywise minimal.
                    for (cell, a) in x.entries() {
                        assert!(a >= h.get(cell).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dominant_weights_match_hooks() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3)] {
            let r = rank(m, n);
            for k in 0..=6 {
                let mut from_hooks: Vec<Weight> = Partition::hooks_of_size(k, r)
                    .iter()
                    .map(|y| ghwt(y, r).unwrap())
                    .collect();
                from_hooks.sort();
                let before = from_hooks.len();
                from_hooks.dedup();
                assert_eq!(before, from_hooks.len(), "ghwt not injective at size {k}");
                let mut cone: Vec<Weight> = compositions(k, r.size())
                    .into_iter()
                    .map(|c| w(r, &c))
                    .filter(|lam| is_hook_weight(lam, r).unwrap())
                    .collect();
                cone.sort();
                assert_eq!(from_hooks, cone, "({r}) size {k}");
                for y in Partition::hooks_of_size(k, r) {
                    let lam = ghwt(&y, r).unwrap();
                    assert_eq!(shape_from_weight(&lam, r).unwrap(), y);
                    assert_eq!(glwt_formula(&lam, r).unwrap(), glwt(&y, r).unwrap());
                }
            }
        }
    }

    #[test]
    fn literal_cone_is_larger_than_hook_weights() {
        let r = rank(1, 1);
        let e1 = w(r, &[0, 1]);
        assert!(in_ptilde_plus(&e1, r).unwrap());
        assert!(!is_hook_weight(&e1, r).unwrap());
        assert!(shape_from_weight(&e1, r).is_err());
        // ε_1 = ghwt((1)) − δ.
        assert_eq!(e1, ghwt(&p("1"), r).unwrap() - r.delta());

        let r = rank(2, 2);
        let e12 = w(r, &[0, 0, 1, 1]);
        assert!(in_ptilde_plus(&e12, r).unwrap());
        assert!(!is_hook_weight(&e12, r).unwrap());
        for k in 0..=6 {
            for c in compositions(k, r.size()) {
                let lam = w(r, &c);
                if in_ptilde_plus(&lam, r).unwrap() && !is_hook_weight(&lam, r).unwrap() {
                    assert!(lam.coeff(Letter::unbarred(2)) > 0);
                }
            }
        }
    }

    #[test]
    fn ptilde_is_cone_plus_delta() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let r = rank(m, n);
            for coeffs in box_vectors(r.size(), 2) {
                let lam = w(r, &coeffs);
                if !in_ptilde(&lam, r).unwrap() {
                    continue;
                }
                let found = (-6..=6)
                    .any(|t| in_ptilde_plus(&(lam.clone() + r.delta().scale(t)), r).unwrap());
                assert!(found, "{}", lam.pretty());
            }
        }
    }

    #[test]
    fn highest_weights_meet_character_constraints() {
        for (m, n) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let r = rank(m, n);
            for k in 0..=7 {
                for y in Partition::hooks_of_size(k, r) {
                    let lam = ghwt(&y, r).unwrap();
                    let h0 = r.pairing(SimpleIndex::Odd, &lam).unwrap();
                    let rest: i64 = (1..n)
                        .map(|j| r.pairing(SimpleIndex::Unbarred(j), &lam).unwrap())
                        .sum();
                    assert!(h0 >= rest, "{y}");
                    assert!(in_ptilde(&lam, r).unwrap());
                }
            }
        }
    }

    #[test]
    fn profile_consistency() {
        let r = rank(2, 2);
        let prof = HookProfile::new(&p("4,3,2,1"), r).unwrap();
        assert_eq!(prof.a, vec![4, 3]);
        assert_eq!(prof.b, vec![2, 1]);
        assert_eq!(prof.c, vec![4, 3]);
        assert_eq!(prof.d, vec![2, 1]);
        for j in 0..2 {
            let from_rows = prof.a.iter().filter(|&&ai| ai > j).count() + prof.d[j];
            assert_eq!(prof.c[j], from_rows);
        }
    }

    fn compositions(total: usize, parts: usize) -> Vec<Vec<i64>> {
        if parts == 1 {
            return vec![vec![total as i64]];
        }
        let mut out = Vec::new();
        for first in 0..=total {
            for mut rest in compositions(total - first, parts - 1) {
                rest.insert(0, first as i64);
                out.push(rest);
            }
        }
        out
    }

    fn box_vectors(len: usize, bound: i64) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (-bound..=bound).map(move |x| {
                        let mut v2 = v.clone();
                        v2.push(x);
                        v2
                    })
                })
                .collect();
        }
        out
    }
}

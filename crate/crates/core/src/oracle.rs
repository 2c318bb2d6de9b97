//! Independent brute-force implementations on Ferrers diagrams, used solely
//! to cross-validate the abacus engine. Nothing here touches abacus code:
//! strips are enumerated by row interlacing on diagrams, and Jacobi–Trudi
//! determinants are expanded over permutations into h-monomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::partition::Partition;
use crate::qlaurent::QLaurent;

/// A pair of nested shapes for strip testing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewCheck {
    pub inner: Partition,
    pub outer: Partition,
}

impl SkewCheck {
    pub fn new(inner: Partition, outer: Partition) -> Self {
        SkewCheck { inner, outer }
    }

    pub fn is_skew(&self) -> bool {
        self.outer.contains(&self.inner)
    }

    pub fn cells(&self) -> i64 {
        self.outer.size() - self.inner.size()
    }

    /// At most one cell per column: outer_i ≥ inner_i ≥ outer_{i+1} for all i.
    pub fn is_horizontal_strip(&self) -> bool {
        if !self.is_skew() {
            return false;
        }
        (0..self.outer.len()).all(|i| self.inner.part(i) >= self.outer.part(i + 1))
    }

    /// At most one cell per row: outer_i − inner_i ∈ {0, 1} for all i.
    pub fn is_vertical_strip(&self) -> bool {
        if !self.is_skew() {
            return false;
        }
        (0..self.outer.len()).all(|i| self.outer.part(i) - self.inner.part(i) <= 1)
    }
}

/// All λ ⊇ μ with λ/μ a horizontal strip of c cells.
pub fn hs_additions(mu: &Partition, c: i64) -> Vec<Partition> {
    if c < 0 {
        return Vec::new();
    }
    let rows = mu.len() + 1;
    let mut out = Vec::new();
    let mut lam = Vec::with_capacity(rows);
    fn rec(
        mu: &Partition,
        row: usize,
        rows: usize,
        rem: i64,
        lam: &mut Vec<i64>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if rem == 0 {
                out.push(Partition::new(lam.clone()).expect("interlaced rows form a partition"));
            }
            return;
        }
        let base = mu.part(row);
        // strip condition bounds the new row by the previous row of μ
        let cap = if row == 0 {
            base + rem
        } else {
            mu.part(row - 1).min(base + rem)
        };
        for v in (base..=cap).rev() {
            lam.push(v);
            rec(mu, row + 1, rows, rem - (v - base), lam, out);
            lam.pop();
        }
    }
    rec(mu, 0, rows, c, &mut lam, &mut out);
    out
}

/// All ν ⊆ μ with μ/ν a horizontal strip of c cells.
pub fn hs_removals(mu: &Partition, c: i64) -> Vec<Partition> {
    if c < 0 || c > mu.first() {
        return Vec::new();
    }
    let rows = mu.len();
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(rows);
    fn rec(
        mu: &Partition,
        row: usize,
        rows: usize,
        rem: i64,
        nu: &mut Vec<i64>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if rem == 0 {
                out.push(Partition::new(nu.clone()).expect("interlaced rows form a partition"));
            }
            return;
        }
        let hi = mu.part(row);
        // ν_row ≥ μ_{row+1} keeps μ/ν a horizontal strip
        let lo = mu.part(row + 1).max(hi - rem);
        for v in (lo..=hi).rev() {
            nu.push(v);
            rec(mu, row + 1, rows, rem - (hi - v), nu, out);
            nu.pop();
        }
    }
    rec(mu, 0, rows, c, &mut nu, &mut out);
    out
}

/// All λ ⊇ μ with λ/μ a vertical strip of c cells.
pub fn vs_additions(mu: &Partition, c: i64) -> Vec<Partition> {
    if c < 0 {
        return Vec::new();
    }
    let rows = mu.len() + c.max(0) as usize;
    let mut out = Vec::new();
    let mut lam = Vec::with_capacity(rows);
    fn rec(
        mu: &Partition,
        row: usize,
        rows: usize,
        rem: i64,
        lam: &mut Vec<i64>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if rem == 0 {
                out.push(Partition::new(lam.clone()).expect("rows weakly decrease"));
            }
            return;
        }
        let base = mu.part(row);
        let prev = if row == 0 { i64::MAX } else { lam[row - 1] };
        for add in [1i64, 0] {
            let v = base + add;
            if add <= rem && v <= prev {
                lam.push(v);
                rec(mu, row + 1, rows, rem - add, lam, out);
                lam.pop();
            }
        }
    }
    rec(mu, 0, rows, c, &mut lam, &mut out);
    out
}

/// All ν ⊆ μ with μ/ν a vertical strip of c cells.
pub fn vs_removals(mu: &Partition, c: i64) -> Vec<Partition> {
    if c < 0 || c > mu.len() as i64 {
        return Vec::new();
    }
    let rows = mu.len();
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(rows);
    fn rec(
        mu: &Partition,
        row: usize,
        rows: usize,
        rem: i64,
        nu: &mut Vec<i64>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if rem == 0 {
                out.push(Partition::new(nu.clone()).expect("rows weakly decrease"));
            }
            return;
        }
        let base = mu.part(row);
        let prev = if row == 0 { i64::MAX } else { nu[row - 1] };
        for sub in [0i64, 1] {
            let v = base - sub;
            if sub <= rem && v >= 0 && v <= prev {
                nu.push(v);
                rec(mu, row + 1, rows, rem - sub, nu, out);
                nu.pop();
            }
        }
    }
    rec(mu, 0, rows, c, &mut nu, &mut out);
    out
}

fn sum_of(parts: Vec<Partition>) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for p in parts {
        out.add_term(p, QLaurent::one());
    }
    out
}

/// Pieri rule h_c · s_μ on diagrams.
pub fn ferrers_mul_h(c: i64, mu: &Partition) -> SchurExpansion {
    sum_of(hs_additions(mu, c))
}

/// Dual Pieri rule h_c⊥ s_μ on diagrams.
pub fn ferrers_h_perp(c: i64, mu: &Partition) -> SchurExpansion {
    sum_of(hs_removals(mu, c))
}

/// Pieri rule e_c · s_μ on diagrams.
pub fn ferrers_mul_e(c: i64, mu: &Partition) -> SchurExpansion {
    sum_of(vs_additions(mu, c))
}

/// Dual Pieri rule e_c⊥ s_μ on diagrams.
pub fn ferrers_e_perp(c: i64, mu: &Partition) -> SchurExpansion {
    sum_of(vs_removals(mu, c))
}

const JT_MAX_LEN: usize = 8;

/// D(α): the determinant of the L×L matrix with (i, j) entry h_{α_i + j − i},
/// expanded over permutations and then into Schur terms by iterated Pieri
/// multiplication from the empty partition. h with a negative subscript kills
/// a monomial; h_0 = 1.
pub fn jacobi_trudi(alpha: &[i64]) -> Result<SchurExpansion> {
    if alpha.len() > JT_MAX_LEN {
        return Err(Error::JacobiTrudiTooLong {
            length: alpha.len(),
            max: JT_MAX_LEN,
        });
    }
    let n = alpha.len();
    // signed counts of h-monomials (sorted descending subscripts, zeros dropped)
    let mut monomials: HashMap<Vec<i64>, BigInt> = HashMap::new();
    let mut used = vec![false; n];
    let mut subscripts = Vec::with_capacity(n);
    fn rec(
        alpha: &[i64],
        row: usize,
        used: &mut Vec<bool>,
        subscripts: &mut Vec<i64>,
        inversions: usize,
        monomials: &mut HashMap<Vec<i64>, BigInt>,
    ) {
        let n = alpha.len();
        if row == n {
            let mut key = subscripts.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
            *monomials.entry(key).or_insert_with(BigInt::zero) += sign;
            return;
        }
        for col in 0..n {
            if used[col] {
                continue;
            }
            let sub = alpha[row] + col as i64 - row as i64;
            if sub < 0 {
                continue;
            }
            let inv_added = used[col + 1..].iter().filter(|&&u| u).count();
            used[col] = true;
            if sub > 0 {
                subscripts.push(sub);
            }
            rec(
                alpha,
                row + 1,
                used,
                subscripts,
                inversions + inv_added,
                monomials,
            );
            if sub > 0 {
                subscripts.pop();
            }
            used[col] = false;
        }
    }
    rec(alpha, 0, &mut used, &mut subscripts, 0, &mut monomials);

    let mut memo: HashMap<Vec<i64>, SchurExpansion> = HashMap::new();
    let mut out = SchurExpansion::zero();
    for (key, count) in monomials {
        if count.is_zero() {
            continue;
        }
        let expanded = expand_h_monomial(&key, &mut memo);
        out.add_scaled(&expanded, &QLaurent::monomial(0, count));
    }
    Ok(out)
}

fn expand_h_monomial(beta: &[i64], memo: &mut HashMap<Vec<i64>, SchurExpansion>) -> SchurExpansion {
    if beta.is_empty() {
        return SchurExpansion::one();
    }
    if let Some(e) = memo.get(beta) {
        return e.clone();
    }
    let rest = expand_h_monomial(&beta[1..], memo);
    let mut out = SchurExpansion::zero();
    for (mu, w) in rest.iter() {
        out.add_scaled(&ferrers_mul_h(beta[0], mu), w);
    }
    memo.insert(beta.to_vec(), out.clone());
    out
}

/// B_m on diagrams, per the conjugation identity: remove a vertical strip of
/// d cells, remove a horizontal strip of c cells, add a vertical strip of
/// m + d + c cells, weighted q^d (−1)^c.
pub fn ferrers_b(m: i64, mu: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for d in 0..=mu.len() as i64 {
        for nu1 in vs_removals(mu, d) {
            for c in 0..=nu1.first() {
                let k = m + d + c;
                if k < 0 {
                    continue;
                }
                let weight = QLaurent::monomial(d, if c % 2 == 0 { 1 } else { -1 });
                for nu2 in hs_removals(&nu1, c) {
                    for lam in vs_additions(&nu2, k) {
                        out.add_term(lam, weight.clone());
                    }
                }
            }
        }
    }
    out
}

//! The linear operators of the engine, acting on Schur expansions.
//!
//! Pieri multiplications and their adjoints are realized as bead moves on
//! abaci. The Bernstein operator S_m fills the unique gap labeled m (with a
//! sign); its ω-conjugate destroys the bead labeled m. The creation
//! operators are the q-weighted composites
//!
//! ```text
//! H_m = Σ_{c≥0} q^c      S_{m+c} ∘ h_c⊥
//! C_m = (−1/q)^{m−1} Σ_c q^{−c} S_{m+c} ∘ h_c⊥
//! B_m = ω ∘ H_m ∘ ω
//! ```
//!
//! Every operator is linear; application to an expansion is termwise with
//! weights multiplied through. All sums over c and d truncate at c ≤ μ_1 and
//! d ≤ ℓ(μ) since wider strips cannot be removed.

use crate::abacus::Abacus;
use crate::expansion::SchurExpansion;
use crate::moves;
use crate::partition::Partition;
use crate::qlaurent::QLaurent;

/// One operator token of a word. Pieri operators with a negative index are
/// the zero operator by convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorSpec {
    /// Multiplication by h_c.
    MulH(i64),
    /// Multiplication by e_c.
    MulE(i64),
    /// The adjoint h_c⊥.
    HPerp(i64),
    /// The adjoint e_c⊥.
    EPerp(i64),
    /// The involution ω.
    Omega,
    /// Bernstein creation operator S_m.
    S(i64),
    /// Bead destruction ω ∘ S_m ∘ ω.
    CoS(i64),
    /// Jing creation operator H_m.
    H(i64),
    /// HMZ creation operator C_m.
    C(i64),
    /// HMZ creation operator B_m.
    B(i64),
}

/// Which family of creation operators a word is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CreationKind {
    S,
    H,
    C,
    B,
}

/// The operator word computing the symmetric function indexed by α for the
/// given family, in application order for [`apply_word`] (rightmost token
/// applied first). H_α, C_α, and S_α apply the last entry of α first; B_α
/// applies the first entry of α first, so its word is reversed.
pub fn creation_word(kind: CreationKind, alpha: &[i64]) -> Vec<OperatorSpec> {
    match kind {
        CreationKind::S => alpha.iter().map(|&m| OperatorSpec::S(m)).collect(),
        CreationKind::H => alpha.iter().map(|&m| OperatorSpec::H(m)).collect(),
        CreationKind::C => alpha.iter().map(|&m| OperatorSpec::C(m)).collect(),
        CreationKind::B => alpha.iter().rev().map(|&m| OperatorSpec::B(m)).collect(),
    }
}

fn lift(e: &SchurExpansion, f: impl Fn(&Partition) -> SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (mu, w) in e.iter() {
        out.add_scaled(&f(mu), w);
    }
    out
}

fn sum_of(parts: impl IntoIterator<Item = Partition>) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for p in parts {
        out.add_term(p, QLaurent::one());
    }
    out
}

/// Partitions reachable from μ by adding a horizontal strip of c cells:
/// beads move east a total of c steps. One zero part of padding accommodates
/// strips below the last row.
fn mul_h_term(c: i64, mu: &Partition) -> Vec<Partition> {
    if c < 0 {
        return Vec::new();
    }
    let ab = Abacus::from_partition(mu, mu.len() + 1).expect("padded");
    moves::east_distributions(ab.beads(), c)
        .into_iter()
        .map(|d| {
            ab.with_positions(moves::apply_displacements(ab.beads(), &d))
                .to_partition()
        })
        .collect()
}

/// Partitions reachable by removing a horizontal strip of c cells: beads
/// move west a total of c steps. No padding is needed.
fn h_perp_term(c: i64, mu: &Partition) -> Vec<Partition> {
    if c < 0 || c > mu.first() {
        return Vec::new();
    }
    let ab = Abacus::from_partition(mu, mu.len()).expect("exact");
    moves::west_distributions(ab.beads(), c)
        .into_iter()
        .map(|d| {
            let neg: Vec<i64> = d.iter().map(|&x| -x).collect();
            ab.with_positions(moves::apply_displacements(ab.beads(), &neg))
                .to_partition()
        })
        .collect()
}

/// Partitions reachable by adding a vertical strip of c cells: c distinct
/// beads step southeast simultaneously. Padding by c zero parts accommodates
/// strips below the last row.
fn mul_e_term(c: i64, mu: &Partition) -> Vec<Partition> {
    if c < 0 {
        return Vec::new();
    }
    let ab = Abacus::from_partition(mu, mu.len() + c.max(0) as usize).expect("padded");
    moves::se_move_sets(ab.beads(), c)
        .into_iter()
        .map(|set| {
            let mut d = vec![0i64; ab.n_beads()];
            for i in set {
                d[i] = 1;
            }
            ab.with_positions(moves::apply_displacements(ab.beads(), &d))
                .to_partition()
        })
        .collect()
}

/// Partitions reachable by removing a vertical strip of c cells: c distinct
/// beads step southwest simultaneously.
fn e_perp_term(c: i64, mu: &Partition) -> Vec<Partition> {
    if c < 0 || c > mu.len() as i64 {
        return Vec::new();
    }
    let ab = Abacus::from_partition(mu, mu.len()).expect("exact");
    moves::sw_move_sets(ab.beads(), c)
        .into_iter()
        .map(|set| {
            let mut d = vec![0i64; ab.n_beads()];
            for i in set {
                d[i] = -1;
            }
            ab.with_positions(moves::apply_displacements(ab.beads(), &d))
                .to_partition()
        })
        .collect()
}

pub fn mul_h(c: i64, e: &SchurExpansion) -> SchurExpansion {
    lift(e, |mu| sum_of(mul_h_term(c, mu)))
}

pub fn h_perp(c: i64, e: &SchurExpansion) -> SchurExpansion {
    lift(e, |mu| sum_of(h_perp_term(c, mu)))
}

pub fn mul_e(c: i64, e: &SchurExpansion) -> SchurExpansion {
    lift(e, |mu| sum_of(mul_e_term(c, mu)))
}

pub fn e_perp(c: i64, e: &SchurExpansion) -> SchurExpansion {
    lift(e, |mu| sum_of(e_perp_term(c, mu)))
}

pub fn omega(e: &SchurExpansion) -> SchurExpansion {
    e.map_conjugate()
}

/// S_m on a single Schur function: fill the unique gap labeled m, or zero.
/// Returns the signed image partition.
pub fn bernstein_s_term(m: i64, mu: &Partition) -> Option<(Partition, i32)> {
    let ab = Abacus::from_partition(mu, mu.len() + 1).expect("padded");
    let (pos, sign) = ab.gap_for_label(m)?;
    Some((ab.with_bead_filled(pos).to_partition(), sign))
}

/// Bernstein creation operator S_m (bead creation).
pub fn bernstein_s(m: i64, e: &SchurExpansion) -> SchurExpansion {
    lift(e, |mu| match bernstein_s_term(m, mu) {
        None => SchurExpansion::zero(),
        Some((lam, sign)) => {
            let mut out = SchurExpansion::zero();
            out.add_term(lam, QLaurent::monomial(0, sign));
            out
        }
    })
}

/// S_m by its defining alternating sum Σ_c (−1)^c h_{m+c} · e_c⊥, truncated
/// at c ≤ ℓ(μ).
pub fn bernstein_s_via_sum(m: i64, e: &SchurExpansion) -> SchurExpansion {
    lift(e, |mu| {
        let mut out = SchurExpansion::zero();
        for c in 0..=mu.len() as i64 {
            let sign = QLaurent::monomial(0, if c % 2 == 0 { 1 } else { -1 });
            for nu in e_perp_term(c, mu) {
                for lam in mul_h_term(m + c, &nu) {
                    out.add_term(lam, sign.clone());
                }
            }
        }
        out
    })
}

/// ω ∘ S_m ∘ ω on a single Schur function: destroy the bead labeled m, or
/// zero. Padding exposes every bead label the operator can address.
pub fn co_s_term(m: i64, mu: &Partition) -> Option<(Partition, i32)> {
    let n = mu.len() + m.max(0) as usize + 2;
    let ab = Abacus::from_partition(mu, n).expect("padded");
    let (pos, sign) = ab.bead_for_label(m)?;
    Some((ab.with_bead_removed(pos).to_partition(), sign))
}

/// The bead-destruction operator ω ∘ S_m ∘ ω.
pub fn co_s_destroy(m: i64, e: &SchurExpansion) -> SchurExpansion {
    lift(e, |mu| match co_s_term(m, mu) {
        None => SchurExpansion::zero(),
        Some((nu, sign)) => {
            let mut out = SchurExpansion::zero();
            out.add_term(nu, QLaurent::monomial(0, sign));
            out
        }
    })
}

fn jing_like(m: i64, mu: &Partition, q_exp_per_c: i64) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for c in 0..=mu.first() {
        let weight = QLaurent::q_power(q_exp_per_c * c);
        for nu in h_perp_term(c, mu) {
            if let Some((lam, sign)) = bernstein_s_term(m + c, &nu) {
                out.add_term(lam, &weight * &QLaurent::monomial(0, sign));
            }
        }
    }
    out
}

/// Jing creation operator H_m = Σ_c q^c S_{m+c} ∘ h_c⊥.
pub fn jing_h(m: i64, e: &SchurExpansion) -> SchurExpansion {
    lift(e, |mu| jing_like(m, mu, 1))
}

/// HMZ creation operator C_m: replace q by 1/q in H_m and multiply by the
/// global factor (−1/q)^{m−1}.
pub fn hmz_c(m: i64, e: &SchurExpansion) -> SchurExpansion {
    let global = QLaurent::signed_q_power(-1, m - 1);
    lift(e, |mu| jing_like(m, mu, -1)).scale(&global)
}

/// HMZ creation operator B_m = ω ∘ H_m ∘ ω.
pub fn hmz_b(m: i64, e: &SchurExpansion) -> SchurExpansion {
    omega(&jing_h(m, &omega(e)))
}

/// B_m by the double sum Σ_{c,d} q^d (−1)^c e_{m+d+c} · h_c⊥ ∘ e_d⊥,
/// truncated at d ≤ ℓ(μ) and c ≤ μ_1.
pub fn hmz_b_via_sum(m: i64, e: &SchurExpansion) -> SchurExpansion {
    lift(e, |mu| {
        let mut out = SchurExpansion::zero();
        for d in 0..=mu.len() as i64 {
            for nu1 in e_perp_term(d, mu) {
                for c in 0..=nu1.first() {
                    let k = m + d + c;
                    if k < 0 {
                        continue;
                    }
                    let weight = QLaurent::monomial(d, if c % 2 == 0 { 1 } else { -1 });
                    for nu2 in h_perp_term(c, &nu1) {
                        for lam in mul_e_term(k, &nu2) {
                            out.add_term(lam, weight.clone());
                        }
                    }
                }
            }
        }
        out
    })
}

/// Apply a single operator.
pub fn apply(op: OperatorSpec, e: &SchurExpansion) -> SchurExpansion {
    match op {
        OperatorSpec::MulH(c) => mul_h(c, e),
        OperatorSpec::MulE(c) => mul_e(c, e),
        OperatorSpec::HPerp(c) => h_perp(c, e),
        OperatorSpec::EPerp(c) => e_perp(c, e),
        OperatorSpec::Omega => omega(e),
        OperatorSpec::S(m) => bernstein_s(m, e),
        OperatorSpec::CoS(m) => co_s_destroy(m, e),
        OperatorSpec::H(m) => jing_h(m, e),
        OperatorSpec::C(m) => hmz_c(m, e),
        OperatorSpec::B(m) => hmz_b(m, e),
    }
}

/// Apply a word of operators, rightmost token first, matching written
/// composition order.
pub fn apply_word(word: &[OperatorSpec], e: &SchurExpansion) -> SchurExpansion {
    word.iter()
        .rev()
        .fold(e.clone(), |acc, &op| apply(op, &acc))
}

/// Termwise-parallel variant: the expansion's terms are processed across
/// `jobs` threads and merged with the associative, commutative expansion
/// sum, so the result is bit-identical to sequential evaluation.
pub fn apply_word_jobs(word: &[OperatorSpec], e: &SchurExpansion, jobs: usize) -> SchurExpansion {
    if jobs <= 1 {
        return apply_word(word, e);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    word.iter().rev().fold(e.clone(), |acc, &op| {
        use rayon::prelude::*;
        let terms: Vec<(Partition, QLaurent)> =
            acc.iter().map(|(mu, w)| (mu.clone(), w.clone())).collect();
        let partials: Vec<SchurExpansion> = pool.install(|| {
            terms
                .par_iter()
                .map(|(mu, w)| apply(op, &SchurExpansion::schur(mu.clone())).scale(w))
                .collect()
        });
        let mut out = SchurExpansion::zero();
        for p in partials {
            out.add(&p);
        }
        out
    })
}

/// Littlewood straightening of D(α): repeatedly replace an ascent (a, b) by
/// (b − 1, a + 1), flipping the sign; an ascent with b = a + 1 kills the
/// determinant. The list is treated as padded with infinitely many zeros.
/// Returns None for zero, otherwise the sign and the sorted partition.
pub fn straighten(alpha: &[i64]) -> Option<(i32, Partition)> {
    let mut list = alpha.to_vec();
    let mut sign = 1;
    let spread = alpha.iter().map(|a| a.unsigned_abs()).max().unwrap_or(0) as i64;
    let mut guard = 4 * (alpha.len() as i64 + spread + 2).pow(2) + 16;
    loop {
        guard -= 1;
        assert!(guard > 0, "straightening failed to terminate");
        if list.last().is_some_and(|&a| a < 0) {
            list.push(0);
        }
        match list.windows(2).position(|w| w[0] < w[1]) {
            Some(i) => {
                let (a, b) = (list[i], list[i + 1]);
                if b == a + 1 {
                    return None;
                }
                list[i] = b - 1;
                list[i + 1] = a + 1;
                sign = -sign;
            }
            None => {
                let mu = Partition::new(list).expect("weakly decreasing and nonnegative");
                return Some((sign, mu));
            }
        }
    }
}

/// The straightening result rendered as an expansion (zero or ±s_μ).
pub fn straighten_expansion(alpha: &[i64]) -> SchurExpansion {
    match straighten(alpha) {
        None => SchurExpansion::zero(),
        Some((sign, mu)) => {
            let mut out = SchurExpansion::zero();
            out.add_term(mu, QLaurent::monomial(0, sign));
            out
        }
    }
}

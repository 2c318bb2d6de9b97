//! Hall–Littlewood polynomials with at most three rows: the sign-reversing
//! involution on three-bead H-histories and the closed-form Schur
//! coefficient it proves.
//!
//! For ν = (ν_1 ≥ ν_2 ≥ ν_3 > 0) the histories of H_ν have three beads whose
//! paths are determined by west-step counts a, b, c: bead 1 walks W^a S W^b S
//! from position ν_3, bead 2 walks W^c S from ν_2+1+a, and bead 3 is created
//! at ν_1+2+b+c. An object is negative exactly when bead 3 lands left of
//! bead 2 in the bottom row; moving k west steps between a and b swaps
//! negative objects with positive ones of equal q-weight and final shape.

use std::collections::BTreeMap;

use crate::abacus::Abacus;
use crate::error::{Error, Result};
use crate::histories::{sum_histories, AbacusHistory, HistoryOptions, HistoryStep, StepKind};
use crate::operators::{creation_word, CreationKind};
use crate::partition::Partition;
use crate::qlaurent::QLaurent;

/// West-step counts of a three-bead history and the bottom-row distance k
/// between the newly created bead and its nearest neighbor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreeRowParams {
    pub nu: [i64; 3],
    pub a: i64,
    pub b: i64,
    pub c: i64,
    /// Distance |f3 − f2| between the two rightmost beads of the bottom row.
    pub k: i64,
    /// True when bead 3 landed right of bead 2 (positive object).
    pub positive: bool,
}

/// The coefficient of s_λ in H_ν for a three-row partition ν:
/// Σ q^(ν_3−λ_3+λ_1−ν_1−b) over 0 ≤ b ≤ min(λ_1−λ_2, λ_2−λ_3, ν_3−λ_3, λ_1−ν_1).
pub fn three_row_coeff(nu: &Partition, lam: &Partition) -> Result<QLaurent> {
    if nu.len() != 3 {
        return Err(Error::ThreeRowDomain(format!(
            "nu must have exactly three positive parts, got {}",
            nu
        )));
    }
    if lam.len() > 3 {
        return Err(Error::ThreeRowDomain(format!(
            "lambda must have at most three parts, got {}",
            lam
        )));
    }
    if lam.size() != nu.size() {
        return Err(Error::ThreeRowDomain(format!(
            "|lambda| = {} does not match |nu| = {}",
            lam.size(),
            nu.size()
        )));
    }
    let (n1, n3) = (nu.part(0), nu.part(2));
    let (l1, l2, l3) = (lam.part(0), lam.part(1), lam.part(2));
    let top = (l1 - l2).min(l2 - l3).min(n3 - l3).min(l1 - n1);
    let mut out = QLaurent::zero();
    for b in 0..=top.max(-1) {
        out = &out + &QLaurent::q_power(n3 - l3 + l1 - n1 - b);
    }
    Ok(out)
}

/// Read (a, b, c, k) off a three-bead H_ν history from the empty start.
pub fn extract_params(h: &AbacusHistory) -> Result<ThreeRowParams> {
    let bad = |reason: &str| Error::InvalidHistory(reason.to_string());
    if h.rows.len() != 4 || h.steps.len() != 3 {
        return Err(bad("expected a three-step history"));
    }
    if h.rows[0].n_beads() != 0 {
        return Err(bad("expected the empty starting abacus"));
    }
    if h.steps.iter().any(|s| s.kind != StepKind::CreateBead) {
        return Err(bad("expected creation steps only"));
    }
    let move_of = |step: &HistoryStep, idx: usize| -> i64 {
        step.moves
            .iter()
            .find(|&&(i, _)| i == idx)
            .map(|&(_, dx)| -dx)
            .unwrap_or(0)
    };
    let p1 = h.steps[0].created.ok_or_else(|| bad("missing creation"))?;
    let a = move_of(&h.steps[1], 0);
    let p2 = h.steps[1].created.ok_or_else(|| bad("missing creation"))?;
    // in row 2 the bead created second sits right of bead 1
    let c = move_of(&h.steps[2], 0);
    let b = move_of(&h.steps[2], 1);
    let p3 = h.steps[2].created.ok_or_else(|| bad("missing creation"))?;

    let nu3 = p1;
    let nu2 = p2 - 1 - a;
    let nu1 = p3 - 2 - b - c;
    if !(nu1 >= nu2 && nu2 >= nu3 && nu3 > 0) {
        return Err(bad("history does not come from a three-row partition"));
    }
    let f2 = nu2 + 1 + a - c;
    let f3 = p3;
    Ok(ThreeRowParams {
        nu: [nu1, nu2, nu3],
        a,
        b,
        c,
        k: (f3 - f2).abs(),
        positive: f3 > f2,
    })
}

/// Build the H_ν history with the given west-step counts.
fn build_history(nu: [i64; 3], a: i64, b: i64, c: i64) -> Result<AbacusHistory> {
    let [n1, n2, n3] = nu;
    let bad = |reason: String| Error::InvalidHistory(reason);
    if a < 0 || b < 0 || c < 0 || a > n3 || n3 - a - b < 0 {
        return Err(bad(format!("illegal west counts a={} b={} c={}", a, b, c)));
    }
    // middle-row collision check for the second bead's west walk
    if n2 + 1 + a - c <= n3 - a {
        return Err(bad("beads collide in the middle row".into()));
    }

    let row0 = Abacus::from_partition(&Partition::empty(), 0).expect("empty");
    let row1 = row0.with_bead_filled(n3);
    let step0 = HistoryStep {
        kind: StepKind::CreateBead,
        moves: Vec::new(),
        created: Some(n3),
        destroyed: None,
    };

    let moved1 = row1.with_positions(vec![n3 - a]);
    let p2 = n2 + 1 + a;
    if moved1.has_bead(p2) {
        return Err(bad("second creation position occupied".into()));
    }
    let row2 = moved1.with_bead_filled(p2);
    let step1 = HistoryStep {
        kind: StepKind::CreateBead,
        moves: if a > 0 { vec![(0, -a)] } else { Vec::new() },
        created: Some(p2),
        destroyed: None,
    };

    let f2 = p2 - c;
    let f1 = n3 - a - b;
    let moved2 = row2.with_positions(vec![f2, f1]);
    let p3 = n1 + 2 + b + c;
    if moved2.has_bead(p3) {
        return Err(bad("third creation position occupied".into()));
    }
    let row3 = moved2.with_bead_filled(p3);
    let mut moves2 = Vec::new();
    if c > 0 {
        moves2.push((0, -c));
    }
    if b > 0 {
        moves2.push((1, -b));
    }
    let step2 = HistoryStep {
        kind: StepKind::CreateBead,
        moves: moves2,
        created: Some(p3),
        destroyed: None,
    };

    let sign = if p3 > f2 { 1 } else { -1 };
    Ok(AbacusHistory {
        final_partition: row3.to_partition(),
        rows: vec![row0, row1, row2, row3],
        steps: vec![step0, step1, step2],
        sign,
        qpower: a + b + c,
    })
}

/// Outcome of the cancellation move on a three-bead history.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThreeRowInvolution {
    Paired(Box<AbacusHistory>),
    FixedPoint,
}

/// The sign-reversing involution: a negative object maps to the positive
/// object with (a−k, b+k); a positive object with k ≤ b maps back via
/// (a+k, b−k); positive objects with k > b are fixed.
pub fn three_row_involution(h: &AbacusHistory) -> Result<ThreeRowInvolution> {
    let p = extract_params(h)?;
    let (a2, b2) = if !p.positive {
        (p.a - p.k, p.b + p.k)
    } else if p.k <= p.b {
        (p.a + p.k, p.b - p.k)
    } else {
        return Ok(ThreeRowInvolution::FixedPoint);
    };
    let partner = build_history(p.nu, a2, b2, p.c)?;
    if partner.final_partition != h.final_partition
        || partner.qpower != h.qpower
        || partner.sign != -h.sign
    {
        return Err(Error::InvalidHistory(
            "cancellation move failed to preserve weight and shape".into(),
        ));
    }
    Ok(ThreeRowInvolution::Paired(Box::new(partner)))
}

/// Kostka–Foulkes coefficients for all ν of size n with at most three rows:
/// three-part ν by the closed formula, shorter ν by direct history
/// summation (all such histories are positive).
pub fn three_row_table(n: i64) -> BTreeMap<(Partition, Partition), QLaurent> {
    let mut out = BTreeMap::new();
    for nu in Partition::all_of_size(n) {
        if nu.is_empty() || nu.len() > 3 {
            continue;
        }
        if nu.len() == 3 {
            for lam in Partition::all_of_size(n) {
                if lam.len() > 3 {
                    continue;
                }
                let coeff = three_row_coeff(&nu, &lam).expect("domain checked");
                if !coeff.is_zero() {
                    out.insert((nu.clone(), lam), coeff);
                }
            }
        } else {
            let word = creation_word(CreationKind::H, nu.parts());
            let sum = sum_histories(&word, &Partition::empty(), &HistoryOptions::default(), 1)
                .expect("valid H word");
            for (lam, coeff) in sum.iter() {
                out.insert((nu.clone(), lam.clone()), coeff.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::SchurExpansion;
    use crate::histories::collect_histories;
    use crate::operators::apply_word;

    fn ptn(parts: &[i64]) -> Partition {
        Partition::from_parts(parts)
    }

    fn h_nu(nu: &Partition) -> SchurExpansion {
        apply_word(
            &creation_word(CreationKind::H, nu.parts()),
            &SchurExpansion::one(),
        )
    }

    #[test]
    fn formula_examples_against_enumeration() {
        let cases = [
            (&[2i64, 1, 1][..], &[2i64, 2][..], QLaurent::q_power(1)),
            (&[2, 1, 1], &[4], QLaurent::q_power(3)),
            (&[3, 2, 1], &[3, 2, 1], QLaurent::one()),
        ];
        for (nu, lam, want) in cases {
            let nu = ptn(nu);
            let lam = ptn(lam);
            let got = three_row_coeff(&nu, &lam).unwrap();
            assert_eq!(got, want, "nu={} lam={}", nu, lam);
            assert_eq!(
                got,
                h_nu(&nu).coeff(&lam),
                "enumeration nu={} lam={}",
                nu,
                lam
            );
        }
    }

    #[test]
    fn formula_domain_errors() {
        assert!(three_row_coeff(&ptn(&[2, 1, 1]), &ptn(&[1, 1, 1, 1])).is_err());
        assert!(three_row_coeff(&ptn(&[2, 1]), &ptn(&[3])).is_err());
        assert!(three_row_coeff(&ptn(&[2, 1, 1]), &ptn(&[3])).is_err());
    }

    #[test]
    fn formula_matches_engine_up_to_nine() {
        for n in 3..=9i64 {
            for nu in Partition::all_of_size(n) {
                if nu.len() != 3 {
                    continue;
                }
                let h = h_nu(&nu);
                for lam in Partition::all_of_size(n) {
                    if lam.len() > 3 {
                        continue;
                    }
                    let got = three_row_coeff(&nu, &lam).unwrap();
                    assert_eq!(got, h.coeff(&lam), "nu={} lam={}", nu, lam);
                    assert!(got.is_nonneg_poly(), "nu={} lam={}", nu, lam);
                }
                // rows beyond the third never appear
                for (lam, _) in h.iter() {
                    assert!(lam.len() <= 3, "nu={} lam={}", nu, lam);
                }
            }
        }
    }

    #[test]
    fn involution_accounting() {
        for n in 3..=8i64 {
            for nu in Partition::all_of_size(n) {
                if nu.len() != 3 {
                    continue;
                }
                let word = creation_word(CreationKind::H, nu.parts());
                let histories =
                    collect_histories(&word, &Partition::empty(), &HistoryOptions::default())
                        .unwrap();
                let mut fixed = SchurExpansion::zero();
                let mut pairs = 0usize;
                let mut fixed_count = 0usize;
                for h in &histories {
                    match three_row_involution(h).unwrap() {
                        ThreeRowInvolution::Paired(partner) => {
                            pairs += 1;
                            assert!(histories.contains(&partner), "nu={}", nu);
                            assert_eq!(partner.qpower, h.qpower);
                            assert_eq!(partner.final_partition, h.final_partition);
                            match three_row_involution(&partner).unwrap() {
                                ThreeRowInvolution::Paired(back) => assert_eq!(*back, *h),
                                ThreeRowInvolution::FixedPoint => {
                                    panic!("involution not self-inverse")
                                }
                            }
                        }
                        ThreeRowInvolution::FixedPoint => {
                            fixed_count += 1;
                            assert_eq!(h.sign, 1, "fixed points are positive, nu={}", nu);
                            fixed.add_term(
                                h.final_partition.clone(),
                                QLaurent::monomial(h.qpower, h.sign),
                            );
                        }
                    }
                }
                assert_eq!(pairs % 2, 0);
                assert_eq!(histories.len(), 2 * (pairs / 2) + fixed_count, "nu={}", nu);
                assert_eq!(fixed, h_nu(&nu), "fixed-point sum nu={}", nu);
                // every negative object is matched
                assert!(histories
                    .iter()
                    .filter(|h| h.sign < 0)
                    .all(|h| three_row_involution(h).unwrap() != ThreeRowInvolution::FixedPoint));
            }
        }
    }

    #[test]
    fn fixed_point_characterization_and_parameters() {
        for nu in Partition::all_of_size(8) {
            if nu.len() != 3 {
                continue;
            }
            let word = creation_word(CreationKind::H, nu.parts());
            let histories =
                collect_histories(&word, &Partition::empty(), &HistoryOptions::default()).unwrap();
            for h in &histories {
                let p = extract_params(h).unwrap();
                let lam = &h.final_partition;
                let is_fixed = three_row_involution(h).unwrap() == ThreeRowInvolution::FixedPoint;
                assert_eq!(is_fixed, p.positive && p.k > p.b, "nu={}", nu);
                if p.positive {
                    // k is the distance between the two rightmost bottom beads
                    assert_eq!(p.k, (lam.part(0) + 2) - (lam.part(1) + 1));
                }
                if !p.positive {
                    // k is determined by the other west counts, with k < a strictly
                    assert_eq!(
                        p.k,
                        p.a - (p.b + 2 * p.c + 1 + p.nu[0] - p.nu[1]),
                        "nu={}",
                        nu
                    );
                    assert!(p.k < p.a);
                    // the moved object has no middle-row collision
                    assert!(p.nu[2] - p.a + p.k < p.nu[1] + 1 + p.a - p.k - p.c);
                }
                if is_fixed {
                    // parameter elimination at fixed points
                    assert_eq!(p.a, p.nu[2] - lam.part(2) - p.b);
                    assert_eq!(p.c, lam.part(0) - p.nu[0] - p.b);
                    assert_eq!(
                        h.qpower,
                        p.nu[2] - lam.part(2) + lam.part(0) - p.nu[0] - p.b
                    );
                }
            }
        }
    }

    #[test]
    fn table_covers_short_shapes() {
        // one-row: H_(2) = s_(2)
        let t2 = three_row_table(2);
        assert_eq!(t2.get(&(ptn(&[2]), ptn(&[2]))), Some(&QLaurent::one()));

        // two-row shapes sum positively and match the engine
        let t4 = three_row_table(4);
        for ((nu, lam), coeff) in &t4 {
            assert!(coeff.is_nonneg_poly(), "nu={} lam={}", nu, lam);
            assert_eq!(coeff, &h_nu(nu).coeff(lam), "nu={} lam={}", nu, lam);
        }

        // three-row column matches enumeration
        let t3 = three_row_table(3);
        let nu = ptn(&[1, 1, 1]);
        let h = h_nu(&nu);
        for (lam, coeff) in h.iter() {
            assert_eq!(t3.get(&(nu.clone(), lam.clone())), Some(coeff));
        }
    }

    #[test]
    fn involution_rejects_foreign_histories() {
        let word = creation_word(CreationKind::H, &[2, 2]);
        let histories =
            collect_histories(&word, &Partition::empty(), &HistoryOptions::default()).unwrap();
        assert!(three_row_involution(&histories[0]).is_err());
    }
}

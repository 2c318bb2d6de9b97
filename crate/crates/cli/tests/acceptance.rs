//! Acceptance suite: one test per criterion, each printing a PASS line.
//! All comparisons are exact (integer / Laurent-polynomial equality);
//! stated runtime budgets are asserted.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use schur_abacus::histories::{
    count_histories, enumerate_s_raw, s_involution, sum_histories, HistoryOptions, SInvolution,
};
use schur_abacus::operators::{self, apply_word, creation_word, CreationKind, OperatorSpec};
use schur_abacus::oracle;
use schur_abacus::threerow::three_row_coeff;
use schur_abacus::{Partition, QLaurent, SchurExpansion};

fn ptn(parts: &[i64]) -> Partition {
    Partition::from_parts(parts)
}

fn schur(parts: &[i64]) -> SchurExpansion {
    SchurExpansion::schur(ptn(parts))
}

fn signed(parts: &[i64], sign: i64) -> SchurExpansion {
    let mut e = SchurExpansion::zero();
    e.add_term(ptn(parts), QLaurent::monomial(0, sign));
    e
}

fn q_pow(k: i64) -> QLaurent {
    QLaurent::q_power(k)
}

fn random_partition(rng: &mut StdRng, max_size: i64) -> Partition {
    let n = rng.gen_range(0..=max_size);
    let all = Partition::all_of_size(n);
    all[rng.gen_range(0..all.len())].clone()
}

#[test]
fn acceptance_01_table_one_reproduction() {
    let started = Instant::now();
    let mu = ptn(&[8, 8, 8, 4, 4, 2, 2, 1]);
    let e = SchurExpansion::schur(mu.clone());
    for m in -12..=12i64 {
        let got = operators::bernstein_s(m, &e);
        let want = match m {
            m if m >= 8 => {
                let mut parts = vec![m];
                parts.extend_from_slice(mu.parts());
                signed(&parts, 1)
            }
            4 => signed(&[7, 7, 7, 7, 4, 4, 2, 2, 1], -1),
            3 => signed(&[7, 7, 7, 6, 4, 4, 2, 2, 1], -1),
            2 => signed(&[7, 7, 7, 5, 4, 4, 2, 2, 1], -1),
            1 => signed(&[7, 7, 7, 4, 4, 4, 2, 2, 1], -1),
            -2 => signed(&[7, 7, 7, 3, 3, 3, 2, 2, 1], -1),
            -3 => signed(&[7, 7, 7, 3, 3, 2, 2, 2, 1], -1),
            -6 => signed(&[7, 7, 7, 3, 3, 1, 1, 1, 1], -1),
            -8 => signed(&[7, 7, 7, 3, 3, 1, 1], 1),
            _ => SchurExpansion::zero(),
        };
        assert_eq!(got, want, "S_{} on s_{}", m, mu);
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {:?}", elapsed);
    println!(
        "ACCEPTANCE 1 (Table 1 reproduction, m in [-12,12], {:?}): PASS",
        elapsed
    );
}

#[test]
fn acceptance_02_s_oracle_triangle() {
    let started = Instant::now();
    let mut cases = 0u64;
    for mu in Partition::all_up_to(10) {
        let e = SchurExpansion::schur(mu.clone());
        for m in -8..=10i64 {
            cases += 1;
            let direct = operators::bernstein_s(m, &e);
            assert_eq!(
                direct,
                operators::bernstein_s_via_sum(m, &e),
                "via-sum disagrees at m={} mu={}",
                m,
                mu
            );
            let mut alpha = vec![m];
            alpha.extend_from_slice(mu.parts());
            assert_eq!(
                direct,
                operators::straighten_expansion(&alpha),
                "straightening disagrees at m={} mu={}",
                m,
                mu
            );
            if alpha.len() <= 8 {
                assert_eq!(
                    direct,
                    oracle::jacobi_trudi(&alpha).unwrap(),
                    "jacobi-trudi disagrees at m={} mu={}",
                    m,
                    mu
                );
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {:?}", elapsed);
    println!(
        "ACCEPTANCE 2 (S-oracle triangle, {} cases, {:?}): PASS",
        cases, elapsed
    );
}

#[test]
fn acceptance_03_worked_expansions() {
    // H_{-2}(s_(3,1)) = (1−q)s_(2) + (q^3−q^2)s_(1,1)
    let mut want = SchurExpansion::zero();
    want.add_term(ptn(&[2]), &QLaurent::one() - &q_pow(1));
    want.add_term(ptn(&[1, 1]), &q_pow(3) - &q_pow(2));
    assert_eq!(operators::jing_h(-2, &schur(&[3, 1])), want);

    // H_1(s_(3,1)) = (q−1)s_(2,2,1) + q^2 s_(3,2) + q^2 s_(3,1,1) + q^3 s_(4,1)
    let mut want = SchurExpansion::zero();
    want.add_term(ptn(&[2, 2, 1]), &q_pow(1) - &QLaurent::one());
    want.add_term(ptn(&[3, 2]), q_pow(2));
    want.add_term(ptn(&[3, 1, 1]), q_pow(2));
    want.add_term(ptn(&[4, 1]), q_pow(3));
    assert_eq!(operators::jing_h(1, &schur(&[3, 1])), want);

    // C_{-2}(s_(3,1)) = −q^3 s_(2) + q^2 s_(2) + q s_(1,1) − s_(1,1)
    let mut want = SchurExpansion::zero();
    want.add_term(ptn(&[2]), &q_pow(2) - &q_pow(3));
    want.add_term(ptn(&[1, 1]), &q_pow(1) - &QLaurent::one());
    assert_eq!(operators::hmz_c(-2, &schur(&[3, 1])), want);

    // C_1(s_(3,1)) = (q^{-1}−1)s_(2,2,1) + q^{-2}s_(3,2) + q^{-2}s_(3,1,1) + q^{-3}s_(4,1)
    let mut want = SchurExpansion::zero();
    want.add_term(ptn(&[2, 2, 1]), &q_pow(-1) - &QLaurent::one());
    want.add_term(ptn(&[3, 2]), q_pow(-2));
    want.add_term(ptn(&[3, 1, 1]), q_pow(-2));
    want.add_term(ptn(&[4, 1]), q_pow(-3));
    assert_eq!(operators::hmz_c(1, &schur(&[3, 1])), want);

    // B_{-2}(s_(2,1,1)) = (1−q)s_(1,1) + (q^3−q^2)s_(2)
    let mut want = SchurExpansion::zero();
    want.add_term(ptn(&[1, 1]), &QLaurent::one() - &q_pow(1));
    want.add_term(ptn(&[2]), &q_pow(3) - &q_pow(2));
    assert_eq!(operators::hmz_b(-2, &schur(&[2, 1, 1])), want);

    // B_1(s_(2,1,1)) = (q−1)s_(3,2) + q^2 s_(2,2,1) + q^2 s_(3,1,1) + q^3 s_(2,1,1,1)
    let mut want = SchurExpansion::zero();
    want.add_term(ptn(&[3, 2]), &q_pow(1) - &QLaurent::one());
    want.add_term(ptn(&[2, 2, 1]), q_pow(2));
    want.add_term(ptn(&[3, 1, 1]), q_pow(2));
    want.add_term(ptn(&[2, 1, 1, 1]), q_pow(3));
    assert_eq!(operators::hmz_b(1, &schur(&[2, 1, 1])), want);

    // the seven-term H_(123)
    let got = apply_word(
        &[OperatorSpec::H(1), OperatorSpec::H(2), OperatorSpec::H(3)],
        &SchurExpansion::one(),
    );
    let mut want = SchurExpansion::zero();
    want.add_term(ptn(&[6]), q_pow(8));
    want.add_term(ptn(&[5, 1]), &q_pow(6) + &q_pow(7));
    want.add_term(
        ptn(&[4, 2]),
        QLaurent::from_coeffs(3, vec![(-1).into(), 1.into(), 1.into(), 1.into()]),
    );
    want.add_term(ptn(&[4, 1, 1]), q_pow(5));
    want.add_term(ptn(&[3, 3]), q_pow(5));
    want.add_term(
        ptn(&[3, 2, 1]),
        QLaurent::from_coeffs(2, vec![(-1).into(), 1.into(), 1.into()]),
    );
    want.add_term(ptn(&[2, 2, 2]), &q_pow(2) - &q_pow(1));
    assert_eq!(got, want);

    println!("ACCEPTANCE 3 (worked creation-operator expansions): PASS");
}

#[test]
fn acceptance_04_history_counts() {
    let opts = HistoryOptions::default();
    let started = Instant::now();
    for (k, want) in [(2usize, 4u64), (3, 27), (4, 338), (5, 6262)] {
        let word = creation_word(CreationKind::H, &vec![3i64; k]);
        let got = count_histories(&word, &Partition::empty(), &opts, 1).unwrap();
        assert_eq!(got, want, "H_(3^{})", k);
    }
    let elapsed_k5 = started.elapsed();
    assert!(
        elapsed_k5 < Duration::from_secs(10),
        "took {:?}",
        elapsed_k5
    );

    let started6 = Instant::now();
    let word = creation_word(CreationKind::H, &[3i64; 6]);
    let got = count_histories(&word, &Partition::empty(), &opts, 1).unwrap();
    assert_eq!(got, 168312, "H_(3^6)");
    let elapsed_k6 = started6.elapsed();
    assert!(
        elapsed_k6 < Duration::from_secs(120),
        "took {:?}",
        elapsed_k6
    );

    let word = creation_word(CreationKind::C, &[5, 1, 4, 2, 3, 1]);
    let terms = count_histories(&word, &Partition::empty(), &opts, 1).unwrap();
    assert_eq!(terms, 16682, "C_(5,1,4,2,3,1) term count");

    println!(
        "ACCEPTANCE 4 (history counts 4/27/338/6262/168312 and 16682 C-terms, k<=5 {:?}, k=6 {:?}): PASS",
        elapsed_k5, elapsed_k6
    );
}

#[test]
fn acceptance_05_cancellation_involution() {
    let histories = enumerate_s_raw(1, &ptn(&[3, 1, 1]));
    assert_eq!(histories.len(), 23, "raw history count");

    let mut pairs = 0usize;
    let mut fixed = Vec::new();
    for h in &histories {
        match s_involution(h).unwrap() {
            SInvolution::Paired(partner) => {
                assert!(histories.contains(&partner));
                assert_eq!(partner.sign, -h.sign);
                assert_eq!(partner.final_partition, h.final_partition);
                match s_involution(&partner).unwrap() {
                    SInvolution::Paired(back) => assert_eq!(*back, *h),
                    SInvolution::FixedPoint => panic!("involution not self-inverse"),
                }
                pairs += 1;
            }
            SInvolution::FixedPoint => fixed.push(h.clone()),
        }
    }
    assert_eq!(pairs, 22, "matched endpoints");
    assert_eq!(fixed.len(), 1, "unique fixed point");
    assert_eq!(fixed[0].sign, -1, "the fixed point is negative");

    let mut sum = SchurExpansion::zero();
    for h in &fixed {
        sum.add_term(h.final_partition.clone(), QLaurent::monomial(0, h.sign));
    }
    assert_eq!(sum, signed(&[2, 2, 1, 1], -1));

    println!("ACCEPTANCE 5 (23 raw histories, 11 pairs, one negative fixed point): PASS");
}

#[test]
fn acceptance_06_commutation_suite() {
    let mut rng = StdRng::seed_from_u64(0xACCE97);
    let q = q_pow(1);
    let minus_one = QLaurent::monomial(0, -1);

    // S-commute including the zero case n = m + 1
    for case in 0..220 {
        let mu = random_partition(&mut rng, 8);
        let m = rng.gen_range(-5..=6);
        let n = if case % 10 == 0 {
            m + 1
        } else {
            rng.gen_range(-5..=6)
        };
        let e = SchurExpansion::schur(mu.clone());
        let lhs = operators::bernstein_s(m, &operators::bernstein_s(n, &e));
        let rhs = operators::bernstein_s(n - 1, &operators::bernstein_s(m + 1, &e));
        assert_eq!(
            lhs,
            rhs.scale(&minus_one),
            "S-commute m={} n={} mu={}",
            m,
            n,
            mu
        );
        if n == m + 1 {
            assert!(lhs.is_zero(), "zero case m={} mu={}", m, mu);
        }
    }

    // q C_m C_{m+1} = C_{m+1} C_m
    for _ in 0..220 {
        let mu = random_partition(&mut rng, 8);
        let m = rng.gen_range(-5..=6);
        let e = SchurExpansion::schur(mu.clone());
        let lhs = operators::hmz_c(m, &operators::hmz_c(m + 1, &e)).scale(&q);
        let rhs = operators::hmz_c(m + 1, &operators::hmz_c(m, &e));
        assert_eq!(lhs, rhs, "qCC m={} mu={}", m, mu);
    }

    // q C_m C_n − C_{m+1} C_{n−1} = C_n C_m − q C_{n−1} C_{m+1}
    for _ in 0..220 {
        let mu = random_partition(&mut rng, 8);
        let (m, n) = (rng.gen_range(-4..=5), rng.gen_range(-4..=5));
        let e = SchurExpansion::schur(mu.clone());
        let mut lhs = operators::hmz_c(m, &operators::hmz_c(n, &e)).scale(&q);
        lhs.add_scaled(
            &operators::hmz_c(m + 1, &operators::hmz_c(n - 1, &e)),
            &minus_one,
        );
        let mut rhs = operators::hmz_c(n, &operators::hmz_c(m, &e));
        rhs.add_scaled(
            &operators::hmz_c(n - 1, &operators::hmz_c(m + 1, &e)),
            &(&q * &minus_one),
        );
        assert_eq!(lhs, rhs, "C four-term m={} n={} mu={}", m, n, mu);
    }

    // B_n C_m = q C_m B_n for m + n > 0
    let mut done = 0;
    while done < 220 {
        let mu = random_partition(&mut rng, 8);
        let (m, n) = (rng.gen_range(-4..=6), rng.gen_range(-4..=6));
        if m + n <= 0 {
            continue;
        }
        done += 1;
        let e = SchurExpansion::schur(mu.clone());
        let lhs = operators::hmz_b(n, &operators::hmz_c(m, &e));
        let rhs = operators::hmz_c(m, &operators::hmz_b(n, &e)).scale(&q);
        assert_eq!(lhs, rhs, "BC m={} n={} mu={}", m, n, mu);
    }

    println!("ACCEPTANCE 6 (commutation relations, 880 random cases): PASS");
}

#[test]
fn acceptance_07_three_row_theorem() {
    let started = Instant::now();
    let opts = HistoryOptions::default();
    let mut cases = 0u64;
    for n in 3..=12i64 {
        for nu in Partition::all_of_size(n) {
            if nu.len() != 3 {
                continue;
            }
            let word = creation_word(CreationKind::H, nu.parts());
            let enumerated = sum_histories(&word, &Partition::empty(), &opts, 1).unwrap();
            for lam in Partition::all_of_size(n) {
                cases += 1;
                let from_histories = enumerated.coeff(&lam);
                if lam.len() > 3 {
                    assert!(from_histories.is_zero(), "nu={} lam={}", nu, lam);
                    continue;
                }
                let formula = three_row_coeff(&nu, &lam).unwrap();
                assert_eq!(formula, from_histories, "nu={} lam={}", nu, lam);
                assert!(formula.is_nonneg_poly(), "nu={} lam={}", nu, lam);
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {:?}", elapsed);
    println!(
        "ACCEPTANCE 7 (three-row closed form vs enumeration, {} pairs, {:?}): PASS",
        cases, elapsed
    );
}

#[test]
fn acceptance_08_q_zero_specialization() {
    use num_rational::BigRational;
    use num_traits::Zero;
    let zero = BigRational::zero();
    let one = BigRational::from(num_bigint::BigInt::from(1));
    for nu in Partition::all_up_to(10) {
        if nu.is_empty() {
            continue;
        }
        let h = apply_word(
            &creation_word(CreationKind::H, nu.parts()),
            &SchurExpansion::one(),
        );
        for (lam, coeff) in h.iter() {
            assert!(coeff.lo() >= 0, "nu={} lam={} coeff={}", nu, lam, coeff);
            let at0 = coeff.evaluate(&zero).unwrap();
            assert_eq!(
                at0,
                if lam == &nu {
                    one.clone()
                } else {
                    zero.clone()
                },
                "nu={} lam={}",
                nu,
                lam
            );
        }
        // and the diagonal term is present
        assert!(!h.coeff(&nu).is_zero(), "nu={}", nu);
    }
    println!("ACCEPTANCE 8 (q=0 specialization of H_nu is the indicator of nu): PASS");
}

#[test]
fn acceptance_09_master_history_equivalence() {
    let mut rng = StdRng::seed_from_u64(0xACCE99);
    let opts = HistoryOptions::default();
    for case in 0..120 {
        let len = rng.gen_range(1..=4);
        let word: Vec<OperatorSpec> = (0..len)
            .map(|_| {
                let m = rng.gen_range(-3..=4);
                match rng.gen_range(0..3) {
                    0 => OperatorSpec::H(m),
                    1 => OperatorSpec::C(m),
                    _ => OperatorSpec::B(m),
                }
            })
            .collect();
        let engine = apply_word(&word, &SchurExpansion::one());
        let histories = sum_histories(&word, &Partition::empty(), &opts, 1).unwrap();
        assert_eq!(histories, engine, "case {} word {:?}", case, word);
    }
    println!("ACCEPTANCE 9 (history sum equals engine on 120 random H/C/B words): PASS");
}

fn run_cli(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_schur-abacus"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn acceptance_10_cli_determinism_across_jobs() {
    let mut commands: Vec<Vec<String>> = vec![
        vec!["expand".into(), "--word".into(), "H(1),H(2),H(3)".into()],
        vec![
            "expand".into(),
            "--word".into(),
            "H(-2)".into(),
            "--start".into(),
            "3,1".into(),
        ],
        vec![
            "expand".into(),
            "--word".into(),
            "C(1)".into(),
            "--start".into(),
            "3,1".into(),
            "--format".into(),
            "json".into(),
        ],
        vec![
            "expand".into(),
            "--word".into(),
            "B(1)".into(),
            "--start".into(),
            "2,1,1".into(),
        ],
        vec![
            "histories".into(),
            "--word".into(),
            "C(5),C(1),C(4),C(2),C(3),C(1)".into(),
            "--count-only".into(),
        ],
    ];
    for k in 2..=6usize {
        let word = vec!["H(3)"; k].join(",");
        commands.push(vec![
            "histories".into(),
            "--word".into(),
            word,
            "--count-only".into(),
        ]);
    }
    // a streaming case: full JSON history output must also be identical
    commands.push(vec![
        "histories".into(),
        "--word".into(),
        "H(2),H(1),H(3)".into(),
        "--format".into(),
        "json".into(),
    ]);

    for command in &commands {
        let mut with_jobs1: Vec<String> = command.clone();
        with_jobs1.extend(["--jobs".into(), "1".into()]);
        let mut with_jobs8: Vec<String> = command.clone();
        with_jobs8.extend(["--jobs".into(), "8".into()]);
        let args1: Vec<&str> = with_jobs1.iter().map(String::as_str).collect();
        let args8: Vec<&str> = with_jobs8.iter().map(String::as_str).collect();
        let (out1, err1, code1) = run_cli(&args1);
        let (out8, err8, code8) = run_cli(&args8);
        assert_eq!(code1, 0, "jobs=1 failed: {:?}: {}", command, err1);
        assert_eq!(code8, 0, "jobs=8 failed: {:?}: {}", command, err8);
        assert_eq!(out1, out8, "outputs differ for {:?}", command);
    }
    println!("ACCEPTANCE 10 (byte-identical CLI output for --jobs 1 vs --jobs 8): PASS");
}

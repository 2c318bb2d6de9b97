//! Abacus-histories: two-dimensional diagrams recording an operator word's
//! action on an abacus over time, one row per time step.
//!
//! Each history carries a sign (−1 to the number of beads right of newly
//! created beads, resp. gaps left of destroyed beads) and a q-power (the
//! total west-step count, negated for C-type steps; southwest zigs for
//! B-type steps). Summing sign · q^qpower · s_final over all histories of a
//! word — times the global factor (−1/q)^(m−1) per C token — reproduces the
//! operator engine exactly.
//!
//! Steps of a creation word are merged: within one time step the existing
//! beads move west (or zig southwest for B) and then the new bead appears
//! (or a bead is destroyed). The raw two-time-step model for a single S_m is
//! kept separately in [`enumerate_s_raw`] together with its sign-reversing
//! involution [`s_involution`].
//!
//! Enumeration order is deterministic: time steps advance depth-first with
//! the per-step choice vectors (strip size c ascending, then the move
//! distribution in the order of [`crate::moves`]) in lexicographic order.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::abacus::Abacus;
use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::moves;
use crate::operators::OperatorSpec;
use crate::partition::Partition;
use crate::qlaurent::QLaurent;

/// What happened during one time interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// Beads moved west (h⊥-style), no creation.
    WestMoves,
    /// Beads moved east (h-multiplication style).
    EastMoves,
    /// A set of beads zigged southeast simultaneously.
    ZigSE,
    /// A set of beads zigged southwest simultaneously.
    ZigSW,
    /// West moves followed by a bead creation (merged H/C/S step).
    CreateBead,
    /// Southwest zigs followed by a bead destruction (merged B step).
    DestroyBead,
    /// Nothing moved.
    Plain,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::WestMoves => "west_moves",
            StepKind::EastMoves => "east_moves",
            StepKind::ZigSE => "zig_se",
            StepKind::ZigSW => "zig_sw",
            StepKind::CreateBead => "create_bead",
            StepKind::DestroyBead => "destroy_bead",
            StepKind::Plain => "plain",
        }
    }
}

/// One time interval of a history. Moves pair the bead's index in the
/// previous row (beads listed in decreasing position order) with its signed
/// horizontal displacement; beads keep their relative order, so the same
/// index addresses the same bead in the next row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HistoryStep {
    pub kind: StepKind,
    pub moves: Vec<(usize, i64)>,
    pub created: Option<i64>,
    pub destroyed: Option<i64>,
}

impl HistoryStep {
    fn west_total(&self) -> i64 {
        self.moves.iter().map(|&(_, dx)| (-dx).max(0)).sum()
    }
}

/// A complete abacus-history: the row-by-row abacus states, the per-step
/// move annotations, and the accumulated sign and q-power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbacusHistory {
    pub rows: Vec<Abacus>,
    pub steps: Vec<HistoryStep>,
    pub sign: i32,
    pub qpower: i64,
    pub final_partition: Partition,
}

/// How B tokens are turned into history steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BRoute {
    /// Run the H-histories of the conjugate input and conjugate the final
    /// partitions (rows then live on the conjugate abacus). Only available
    /// for words consisting entirely of B tokens.
    #[default]
    Conjugate,
    /// Southwest zigs followed by destroying the bead labeled m + d.
    Native,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct HistoryOptions {
    pub b_route: BRoute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum StepOp {
    /// West moves then create in the gap labeled m + c, weight q^(q_sign·c).
    Create { m: i64, q_sign: i64 },
    /// Create in the gap labeled m, no moves, no weight (bare S_m).
    CreateOnly { m: i64 },
    /// Southwest zigs then destroy the bead labeled m + d, weight q^d.
    Destroy { m: i64 },
}

struct Plan {
    ops: Vec<StepOp>,
    start: Abacus,
    conjugate_finals: bool,
    global: QLaurent,
}

fn plan(word: &[OperatorSpec], start: &Partition, opts: &HistoryOptions) -> Result<Plan> {
    if word.is_empty() {
        return Err(Error::InvalidHistory("empty operator word".into()));
    }
    for op in word {
        match op {
            OperatorSpec::S(_) | OperatorSpec::H(_) | OperatorSpec::C(_) | OperatorSpec::B(_) => {}
            other => {
                return Err(Error::InvalidHistory(format!(
                    "history diagrams are only generated for S/H/C/B words, found {}",
                    other
                )))
            }
        }
    }

    let mut global = QLaurent::one();
    for op in word {
        if let OperatorSpec::C(m) = op {
            global = &global * &QLaurent::signed_q_power(-1, m - 1);
        }
    }

    let pure_b = word.iter().all(|op| matches!(op, OperatorSpec::B(_)));
    let use_conjugate = pure_b && opts.b_route == BRoute::Conjugate;

    // time order is the reverse of written composition order
    let tokens: Vec<OperatorSpec> = word.iter().rev().copied().collect();

    if use_conjugate {
        let ops = tokens
            .iter()
            .map(|op| match op {
                OperatorSpec::B(m) => StepOp::Create { m: *m, q_sign: 1 },
                _ => unreachable!(),
            })
            .collect();
        let conj = start.conjugate();
        let n = conj.len();
        return Ok(Plan {
            ops,
            start: Abacus::from_partition(&conj, n)?,
            conjugate_finals: true,
            global,
        });
    }

    let ops: Vec<StepOp> = tokens
        .iter()
        .map(|op| match op {
            OperatorSpec::H(m) => StepOp::Create { m: *m, q_sign: 1 },
            OperatorSpec::C(m) => StepOp::Create { m: *m, q_sign: -1 },
            OperatorSpec::S(m) => StepOp::CreateOnly { m: *m },
            OperatorSpec::B(m) => StepOp::Destroy { m: *m },
            _ => unreachable!(),
        })
        .collect();

    let n0 = native_bead_count(&ops, start.len());
    Ok(Plan {
        ops,
        start: Abacus::from_partition(start, n0)?,
        conjugate_finals: false,
        global,
    })
}

/// Starting bead count that keeps every destroyable bead label visible for
/// the whole word. Creations raise the partition-length bound by one;
/// destroying the bead labeled m + d raises it to at most m + ℓ.
fn native_bead_count(ops: &[StepOp], start_len: usize) -> usize {
    let mut len_bound = start_len as i64;
    let mut delta = 0i64;
    let mut need = start_len as i64;
    for op in ops {
        match op {
            StepOp::Create { .. } | StepOp::CreateOnly { .. } => {
                len_bound += 1;
                delta += 1;
            }
            StepOp::Destroy { m } => {
                need = need.max(m + len_bound + 1 - delta);
                len_bound += m.max(&0);
                delta -= 1;
            }
        }
    }
    need.max(0) as usize
}

#[derive(Clone)]
struct Frame {
    rows: Vec<Abacus>,
    steps: Vec<HistoryStep>,
    sign: i32,
    qpower: i64,
}

impl Frame {
    fn new(start: Abacus) -> Frame {
        Frame {
            rows: vec![start],
            steps: Vec::new(),
            sign: 1,
            qpower: 0,
        }
    }

    fn emit(&self, conjugate_finals: bool) -> AbacusHistory {
        let last = self.rows.last().expect("at least one row");
        let mut final_partition = last.to_partition();
        if conjugate_finals {
            final_partition = final_partition.conjugate();
        }
        AbacusHistory {
            rows: self.rows.clone(),
            steps: self.steps.clone(),
            sign: self.sign,
            qpower: self.qpower,
            final_partition,
        }
    }

    fn push(&mut self, row: Abacus, step: HistoryStep, sign: i32, q: i64) {
        self.rows.push(row);
        self.steps.push(step);
        self.sign *= sign;
        self.qpower += q;
    }

    fn pop(&mut self, sign: i32, q: i64) {
        self.rows.pop();
        self.steps.pop();
        self.sign *= sign;
        self.qpower -= q;
    }
}

/// Enumerate the children of `frame` under `op`, invoking `then` for each.
fn expand_step(frame: &mut Frame, op: StepOp, then: &mut dyn FnMut(&mut Frame)) {
    let ab = frame.rows.last().expect("row").clone();
    match op {
        StepOp::CreateOnly { m } => {
            if let Some((pos, sign)) = ab.gap_for_label(m) {
                let step = HistoryStep {
                    kind: StepKind::CreateBead,
                    moves: Vec::new(),
                    created: Some(pos),
                    destroyed: None,
                };
                frame.push(ab.with_bead_filled(pos), step, sign, 0);
                then(frame);
                frame.pop(sign, 0);
            }
        }
        StepOp::Create { m, q_sign } => {
            let first_part = ab
                .max_bead()
                .map_or(0, |top| top - (ab.n_beads() as i64 - 1));
            for c in 0..=first_part {
                for dist in moves::west_distributions(ab.beads(), c) {
                    let displaced: Vec<i64> = dist.iter().map(|&d| -d).collect();
                    let moved =
                        ab.with_positions(moves::apply_displacements(ab.beads(), &displaced));
                    if let Some((pos, sign)) = moved.gap_for_label(m + c) {
                        let step = HistoryStep {
                            kind: StepKind::CreateBead,
                            moves: dist
                                .iter()
                                .enumerate()
                                .filter(|&(_, &d)| d != 0)
                                .map(|(i, &d)| (i, -d))
                                .collect(),
                            created: Some(pos),
                            destroyed: None,
                        };
                        frame.push(moved.with_bead_filled(pos), step, sign, q_sign * c);
                        then(frame);
                        frame.pop(sign, q_sign * c);
                    }
                }
            }
        }
        StepOp::Destroy { m } => {
            let mut d = 0i64;
            loop {
                let sets = moves::sw_move_sets(ab.beads(), d);
                if sets.is_empty() {
                    break;
                }
                for set in sets {
                    let mut displaced = vec![0i64; ab.n_beads()];
                    for &i in &set {
                        displaced[i] = -1;
                    }
                    let moved =
                        ab.with_positions(moves::apply_displacements(ab.beads(), &displaced));
                    if let Some((pos, sign)) = moved.bead_for_label(m + d) {
                        let mut move_list: Vec<(usize, i64)> =
                            set.iter().map(|&i| (i, -1)).collect();
                        move_list.sort_unstable();
                        let step = HistoryStep {
                            kind: StepKind::DestroyBead,
                            moves: move_list,
                            created: None,
                            destroyed: Some(pos),
                        };
                        frame.push(moved.with_bead_removed(pos), step, sign, d);
                        then(frame);
                        frame.pop(sign, d);
                    }
                }
                d += 1;
            }
        }
    }
}

fn dfs(
    frame: &mut Frame,
    ops: &[StepOp],
    t: usize,
    conj: bool,
    visit: &mut dyn FnMut(&AbacusHistory),
) {
    if t == ops.len() {
        visit(&frame.emit(conj));
        return;
    }
    expand_step(frame, ops[t], &mut |f| dfs(f, ops, t + 1, conj, visit));
}

/// Drive `visit` over every history of the word, in the documented
/// deterministic order.
pub fn visit_histories(
    word: &[OperatorSpec],
    start: &Partition,
    opts: &HistoryOptions,
    visit: &mut dyn FnMut(&AbacusHistory),
) -> Result<()> {
    let plan = plan(word, start, opts)?;
    let mut frame = Frame::new(plan.start);
    dfs(&mut frame, &plan.ops, 0, plan.conjugate_finals, visit);
    Ok(())
}

/// Materialize all histories of a word.
pub fn collect_histories(
    word: &[OperatorSpec],
    start: &Partition,
    opts: &HistoryOptions,
) -> Result<Vec<AbacusHistory>> {
    let mut out = Vec::new();
    visit_histories(word, start, opts, &mut |h| out.push(h.clone()))?;
    Ok(out)
}

/// States after the first time step, used to split work across threads.
fn first_level(plan: &Plan) -> Vec<Frame> {
    let mut frames = Vec::new();
    let mut frame = Frame::new(plan.start.clone());
    expand_step(&mut frame, plan.ops[0], &mut |f| frames.push(f.clone()));
    frames
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Total number of histories of the word.
pub fn count_histories(
    word: &[OperatorSpec],
    start: &Partition,
    opts: &HistoryOptions,
    jobs: usize,
) -> Result<u64> {
    let plan = plan(word, start, opts)?;
    let count_from = |mut frame: Frame| {
        let mut n = 0u64;
        dfs(&mut frame, &plan.ops, 1, plan.conjugate_finals, &mut |_| {
            n += 1
        });
        n
    };
    if jobs <= 1 {
        let mut n = 0u64;
        let mut frame = Frame::new(plan.start.clone());
        dfs(&mut frame, &plan.ops, 0, plan.conjugate_finals, &mut |_| {
            n += 1
        });
        Ok(n)
    } else {
        let branches = first_level(&plan);
        Ok(with_pool(jobs, || {
            branches.into_par_iter().map(count_from).sum()
        }))
    }
}

/// The signed, weighted sum of all histories: Σ sign · q^qpower · s_final,
/// times the global factor contributed by C tokens. Equals the operator
/// engine's expansion for the same word.
pub fn sum_histories(
    word: &[OperatorSpec],
    start: &Partition,
    opts: &HistoryOptions,
    jobs: usize,
) -> Result<SchurExpansion> {
    let plan = plan(word, start, opts)?;
    let add = |acc: &mut SchurExpansion, h: &AbacusHistory| {
        acc.add_term(
            h.final_partition.clone(),
            QLaurent::monomial(h.qpower, h.sign),
        );
    };
    let total = if jobs <= 1 {
        let mut acc = SchurExpansion::zero();
        let mut frame = Frame::new(plan.start.clone());
        dfs(&mut frame, &plan.ops, 0, plan.conjugate_finals, &mut |h| {
            add(&mut acc, h)
        });
        acc
    } else {
        let branches = first_level(&plan);
        let partials: Vec<SchurExpansion> = with_pool(jobs, || {
            branches
                .into_par_iter()
                .map(|mut frame| {
                    let mut acc = SchurExpansion::zero();
                    dfs(&mut frame, &plan.ops, 1, plan.conjugate_finals, &mut |h| {
                        add(&mut acc, h)
                    });
                    acc
                })
                .collect()
        });
        let mut acc = SchurExpansion::zero();
        for p in partials {
            acc.add(&p);
        }
        acc
    };
    Ok(total.scale(&plan.global))
}

/// Map every history through `f`, preserving the deterministic enumeration
/// order; with `jobs > 1` the first-level branches run in parallel and are
/// concatenated in order, so the result is identical for every job count.
pub fn map_histories<T: Send>(
    word: &[OperatorSpec],
    start: &Partition,
    opts: &HistoryOptions,
    jobs: usize,
    f: impl Fn(&AbacusHistory) -> T + Sync,
) -> Result<Vec<T>> {
    let plan = plan(word, start, opts)?;
    if jobs <= 1 {
        let mut out = Vec::new();
        let mut frame = Frame::new(plan.start.clone());
        dfs(&mut frame, &plan.ops, 0, plan.conjugate_finals, &mut |h| {
            out.push(f(h))
        });
        return Ok(out);
    }
    let branches = first_level(&plan);
    let nested: Vec<Vec<T>> = with_pool(jobs, || {
        branches
            .into_par_iter()
            .map(|mut frame| {
                let mut out = Vec::new();
                dfs(&mut frame, &plan.ops, 1, plan.conjugate_finals, &mut |h| {
                    out.push(f(h))
                });
                out
            })
            .collect()
    });
    Ok(nested.into_iter().flatten().collect())
}

/// Default starting positions of the beads created by an H-word for α: the
/// positions (α_L, α_{L−1}+1, …, α_1+L−1) where the new beads land when no
/// west steps are taken, listed in creation order.
pub fn default_start_positions(alpha: &[i64]) -> Vec<i64> {
    let l = alpha.len();
    (0..l).map(|t| alpha[l - 1 - t] + t as i64).collect()
}

/// Per-step q-exponent sign for recomputation: +1 for H/S/B tokens, −1 for
/// C tokens, listed in time order (reverse of the written word).
pub fn step_q_signs(word: &[OperatorSpec]) -> Vec<i64> {
    word.iter()
        .rev()
        .map(|op| match op {
            OperatorSpec::C(_) => -1,
            _ => 1,
        })
        .collect()
}

/// Recompute sign and q-power from rows and steps alone. The `q_signs`
/// slice (see [`step_q_signs`]) fixes the per-step orientation of the
/// weight.
pub fn recompute_sign_qpower(h: &AbacusHistory, q_signs: &[i64]) -> Result<(i32, i64)> {
    if h.steps.len() != q_signs.len() || h.rows.len() != h.steps.len() + 1 {
        return Err(Error::InvalidHistory("row/step count mismatch".into()));
    }
    let mut sign = 1i32;
    let mut qpower = 0i64;
    for (t, step) in h.steps.iter().enumerate() {
        let before = &h.rows[t];
        let after = &h.rows[t + 1];
        match step.kind {
            StepKind::CreateBead => {
                let pos = step
                    .created
                    .ok_or_else(|| Error::InvalidHistory("create step without position".into()))?;
                let b = after.beads_right_of(pos);
                if b % 2 == 1 {
                    sign = -sign;
                }
                qpower += q_signs[t] * step.west_total();
            }
            StepKind::DestroyBead => {
                let pos = step
                    .destroyed
                    .ok_or_else(|| Error::InvalidHistory("destroy step without position".into()))?;
                // gaps left of the bead at destruction time: after the zigs,
                // before the removal
                let mut displaced = vec![0i64; before.n_beads()];
                for &(i, dx) in &step.moves {
                    displaced[i] = dx;
                }
                let intermediate =
                    before.with_positions(moves::apply_displacements(before.beads(), &displaced));
                let g = pos - intermediate.beads_left_of(pos) as i64;
                if g % 2 == 1 {
                    sign = -sign;
                }
                qpower += q_signs[t] * step.moves.len() as i64;
            }
            _ => {
                qpower += q_signs[t] * step.west_total();
            }
        }
    }
    Ok((sign, qpower))
}

/// JSON record for one history: {rows, steps, sign, qpower, final}.
pub fn history_to_json(h: &AbacusHistory) -> Value {
    json!({
        "rows": h.rows.iter().map(|a| a.beads().to_vec()).collect::<Vec<_>>(),
        "steps": h.steps.iter().map(|s| {
            json!({
                "kind": s.kind.as_str(),
                "moves": s.moves.iter().map(|&(i, dx)| json!([i, dx])).collect::<Vec<_>>(),
                "created": s.created,
                "destroyed": s.destroyed,
            })
        }).collect::<Vec<_>>(),
        "sign": h.sign,
        "qpower": h.qpower,
        "final": h.final_partition.parts(),
    })
}

/// Multi-row ASCII rendering: `o` bead, `.` gap, `(o)` newly created bead,
/// `x` just-destroyed bead, with move glyphs (`<`, `>`, `\`) between rows.
pub fn render_history(h: &AbacusHistory) -> String {
    let mut width = 0i64;
    for row in &h.rows {
        width = width.max(row.max_bead().unwrap_or(-1) + 1);
    }
    for step in &h.steps {
        if let Some(p) = step.created.or(step.destroyed) {
            width = width.max(p + 1);
        }
    }
    width += 1;

    let cell = |s: &str| format!("{:^3}", s);
    let mut out = String::new();
    for (r, row) in h.rows.iter().enumerate() {
        let created = if r > 0 { h.steps[r - 1].created } else { None };
        let destroyed = if r > 0 {
            h.steps[r - 1].destroyed
        } else {
            None
        };
        for p in 0..width {
            if Some(p) == created {
                out.push_str("(o)");
            } else if Some(p) == destroyed {
                out.push_str(&cell("x"));
            } else if row.has_bead(p) {
                out.push_str(&cell("o"));
            } else {
                out.push_str(&cell("."));
            }
        }
        out.push('\n');
        if r < h.steps.len() {
            let step = &h.steps[r];
            let before = &h.rows[r];
            let mut glyphs = vec![' '; width as usize];
            for &(i, dx) in &step.moves {
                let p = before.beads()[i];
                if dx == -1 && matches!(step.kind, StepKind::ZigSW | StepKind::DestroyBead) {
                    glyphs[p as usize] = '\\';
                } else if dx < 0 {
                    for col in (p + dx)..p {
                        glyphs[col as usize] = '<';
                    }
                } else if dx > 0 {
                    for col in (p + 1)..=(p + dx) {
                        glyphs[col as usize] = '>';
                    }
                }
            }
            for g in glyphs {
                out.push_str(&cell(&g.to_string()));
            }
            out.push('\n');
        }
    }
    out
}

/// All two-time-step histories computing S_m(s_μ) from the alternating-sum
/// definition: choose c, zig c beads southwest (sign (−1)^c), then move
/// beads a total of m + c steps east avoiding interval-start positions.
pub fn enumerate_s_raw(m: i64, mu: &Partition) -> Vec<AbacusHistory> {
    let ab = Abacus::from_partition(mu, mu.len() + 1).expect("padded");
    let mut out = Vec::new();
    let mut c = 0i64;
    loop {
        let sets = moves::sw_move_sets(ab.beads(), c);
        if sets.is_empty() {
            break;
        }
        if m + c >= 0 {
            for set in sets {
                let mut displaced = vec![0i64; ab.n_beads()];
                for &i in &set {
                    displaced[i] = -1;
                }
                let mid = ab.with_positions(moves::apply_displacements(ab.beads(), &displaced));
                let mut sw_moves: Vec<(usize, i64)> = set.iter().map(|&i| (i, -1)).collect();
                sw_moves.sort_unstable();
                for dist in moves::east_distributions(mid.beads(), m + c) {
                    let last = mid.with_positions(moves::apply_displacements(mid.beads(), &dist));
                    let final_partition = last.to_partition();
                    out.push(AbacusHistory {
                        rows: vec![ab.clone(), mid.clone(), last],
                        steps: vec![
                            HistoryStep {
                                kind: StepKind::ZigSW,
                                moves: sw_moves.clone(),
                                created: None,
                                destroyed: None,
                            },
                            HistoryStep {
                                kind: StepKind::EastMoves,
                                moves: dist
                                    .iter()
                                    .enumerate()
                                    .filter(|&(_, &d)| d != 0)
                                    .map(|(i, &d)| (i, d))
                                    .collect(),
                                created: None,
                                destroyed: None,
                            },
                        ],
                        sign: if c % 2 == 0 { 1 } else { -1 },
                        qpower: 0,
                        final_partition,
                    });
                }
            }
        }
        c += 1;
    }
    out
}

/// Result of the cancellation move on a raw S-history.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SInvolution {
    Paired(Box<AbacusHistory>),
    FixedPoint,
}

struct RawSView {
    zigged: Vec<bool>,
    east: Vec<i64>,
}

fn raw_s_view(h: &AbacusHistory) -> Result<RawSView> {
    if h.rows.len() != 3
        || h.steps.len() != 2
        || h.steps[0].kind != StepKind::ZigSW
        || h.steps[1].kind != StepKind::EastMoves
    {
        return Err(Error::InvalidHistory("not a raw two-step S history".into()));
    }
    let n = h.rows[0].n_beads();
    let mut zigged = vec![false; n];
    for &(i, dx) in &h.steps[0].moves {
        if dx != -1 || i >= n {
            return Err(Error::InvalidHistory("bad southwest move".into()));
        }
        zigged[i] = true;
    }
    let mut east = vec![0i64; n];
    for &(i, dx) in &h.steps[1].moves {
        if dx <= 0 || i >= n {
            return Err(Error::InvalidHistory("bad east move".into()));
        }
        east[i] = dx;
    }
    Ok(RawSView { zigged, east })
}

/// The sign-reversing involution on raw S-histories: swap, at the leftmost
/// applicable column, a southwest-then-east bead path with a south step next
/// to an unvisited west gap. Fixed points avoid both patterns and sum to
/// S_m(s_μ).
pub fn s_involution(h: &AbacusHistory) -> Result<SInvolution> {
    let view = raw_s_view(h)?;
    let mid = &h.rows[1];
    let n = mid.n_beads();

    // pattern 1: zigged southwest and then moved east
    // pattern 2: went straight south, with the gap just west untouched in
    // the second interval
    let mut best: Option<(i64, usize, bool)> = None; // (column, bead, is_pattern1)
    for k in 0..n {
        let p = mid.beads()[k];
        if view.zigged[k] && view.east[k] > 0 {
            let col = p;
            if best.is_none() || col < best.unwrap().0 {
                best = Some((col, k, true));
            }
        } else if !view.zigged[k] {
            let col = p - 1;
            if col >= 0 && !mid.has_bead(col) {
                let visited = (0..n).any(|j| {
                    let start = mid.beads()[j];
                    start < col && col <= start + view.east[j]
                });
                if !visited && (best.is_none() || col < best.unwrap().0) {
                    best = Some((col, k, false));
                }
            }
        }
    }

    let Some((_, k, is_pattern1)) = best else {
        return Ok(SInvolution::FixedPoint);
    };

    let mut zigged = view.zigged.clone();
    let mut east = view.east.clone();
    if is_pattern1 {
        zigged[k] = false;
        east[k] -= 1;
    } else {
        zigged[k] = true;
        east[k] += 1;
    }

    let start = &h.rows[0];
    let displaced: Vec<i64> = zigged.iter().map(|&z| if z { -1 } else { 0 }).collect();
    let mid2 = start.with_positions(moves::apply_displacements(start.beads(), &displaced));
    let last2 = mid2.with_positions(moves::apply_displacements(mid2.beads(), &east));
    if last2 != h.rows[2] {
        return Err(Error::InvalidHistory(
            "involution changed the final abacus".into(),
        ));
    }
    let partner = AbacusHistory {
        rows: vec![start.clone(), mid2, last2],
        steps: vec![
            HistoryStep {
                kind: StepKind::ZigSW,
                moves: zigged
                    .iter()
                    .enumerate()
                    .filter(|&(_, &z)| z)
                    .map(|(i, _)| (i, -1))
                    .collect(),
                created: None,
                destroyed: None,
            },
            HistoryStep {
                kind: StepKind::EastMoves,
                moves: east
                    .iter()
                    .enumerate()
                    .filter(|&(_, &d)| d != 0)
                    .map(|(i, &d)| (i, d))
                    .collect(),
                created: None,
                destroyed: None,
            },
        ],
        sign: -h.sign,
        qpower: 0,
        final_partition: h.final_partition.clone(),
    };
    Ok(SInvolution::Paired(Box::new(partner)))
}

/// Structural characterization of the fixed points: if some bead zigs down,
/// every bead to its right and every bead left of it inside its block zig
/// down too.
pub fn s_fixed_point_structure_ok(h: &AbacusHistory) -> Result<bool> {
    let view = raw_s_view(h)?;
    let start = &h.rows[0];
    let n = start.n_beads();
    for k in 0..n {
        if !(view.zigged[k] && view.east[k] == 0) {
            continue;
        }
        // beads to the right = smaller indices (larger positions)
        for j in 0..k {
            if !view.zigged[j] {
                return Ok(false);
            }
        }
        // left neighbors within the block of consecutive positions
        let mut j = k;
        while j + 1 < n && start.beads()[j + 1] == start.beads()[j] - 1 {
            if !view.zigged[j + 1] {
                return Ok(false);
            }
            j += 1;
        }
    }
    Ok(true)
}

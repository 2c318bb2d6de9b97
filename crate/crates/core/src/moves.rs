//! Enumeration of legal bead moves on an abacus.
//!
//! Bead positions are always listed in strictly decreasing order. The move
//! rules mirror the Pieri rules:
//!
//! - east moves (adding a horizontal strip): each bead moves east some
//!   d_i ≥ 0 steps, never reaching a position another bead occupied at the
//!   start of the interval, i.e. `new[i] < old[i-1]`;
//! - west moves (removing a horizontal strip): `new[i] > old[i+1]` and the
//!   last bead stays nonnegative;
//! - southeast zigs (adding a vertical strip): a set of beads moves +1
//!   simultaneously with distinct finals, i.e. a top segment of each block;
//! - southwest zigs (removing a vertical strip): a set of beads moves −1
//!   simultaneously, i.e. a bottom segment of each block with room below.
//!
//! Distributions are emitted in lexicographically increasing order of the
//! per-bead vectors (beads in decreasing position order), which fixes the
//! deterministic enumeration order of the history module.

/// Maximal runs of consecutive positions, as index ranges into the
/// descending bead array.
fn blocks(beads: &[i64]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=beads.len() {
        if i == beads.len() || beads[i] != beads[i - 1] - 1 {
            out.push((start, i - 1));
            start = i;
        }
    }
    out
}

/// East displacement vectors summing to `total`.
pub fn east_distributions(beads: &[i64], total: i64) -> Vec<Vec<i64>> {
    if total < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut d = vec![0i64; beads.len()];
    fn rec(beads: &[i64], i: usize, rem: i64, d: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == beads.len() {
            if rem == 0 {
                out.push(d.clone());
            }
            return;
        }
        let cap = if i == 0 {
            rem
        } else {
            rem.min(beads[i - 1] - beads[i] - 1)
        };
        for dx in 0..=cap {
            d[i] = dx;
            rec(beads, i + 1, rem - dx, d, out);
        }
        d[i] = 0;
    }
    if beads.is_empty() {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(beads, 0, total, &mut d, &mut out);
    out
}

/// West step-count vectors summing to `total` (entries are nonnegative
/// west-step counts; the new position of bead i is `beads[i] - d[i]`).
pub fn west_distributions(beads: &[i64], total: i64) -> Vec<Vec<i64>> {
    if total < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut d = vec![0i64; beads.len()];
    fn rec(beads: &[i64], i: usize, rem: i64, d: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == beads.len() {
            if rem == 0 {
                out.push(d.clone());
            }
            return;
        }
        let room = if i + 1 < beads.len() {
            beads[i] - beads[i + 1] - 1
        } else {
            beads[i]
        };
        for dx in 0..=rem.min(room) {
            d[i] = dx;
            rec(beads, i + 1, rem - dx, d, out);
        }
        d[i] = 0;
    }
    if beads.is_empty() {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(beads, 0, total, &mut d, &mut out);
    out
}

/// Sets of bead indices that may simultaneously step southeast (+1), of the
/// given size. Within each block of consecutive beads only a top segment may
/// move; the position above a maximal block is always open.
pub fn se_move_sets(beads: &[i64], count: i64) -> Vec<Vec<usize>> {
    if count < 0 {
        return Vec::new();
    }
    let bl = blocks(beads);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        bl: &[(usize, usize)],
        b: usize,
        rem: i64,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if b == bl.len() {
            if rem == 0 {
                out.push(chosen.clone());
            }
            return;
        }
        let (start, end) = bl[b];
        let max_k = ((end - start + 1) as i64).min(rem);
        for k in 0..=max_k {
            // top segment = lowest indices (largest positions)
            for j in 0..k as usize {
                chosen.push(start + j);
            }
            rec(bl, b + 1, rem - k, chosen, out);
            for _ in 0..k as usize {
                chosen.pop();
            }
        }
    }
    rec(&bl, 0, count, &mut chosen, &mut out);
    out
}

/// Sets of bead indices that may simultaneously step southwest (−1), of the
/// given size. Within each block only a bottom segment may move, and only if
/// the position below the block is open (nonnegative).
pub fn sw_move_sets(beads: &[i64], count: i64) -> Vec<Vec<usize>> {
    if count < 0 {
        return Vec::new();
    }
    let bl = blocks(beads);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        beads: &[i64],
        bl: &[(usize, usize)],
        b: usize,
        rem: i64,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if b == bl.len() {
            if rem == 0 {
                out.push(chosen.clone());
            }
            return;
        }
        let (start, end) = bl[b];
        let room_below = beads[end] > 0;
        let max_k = if room_below {
            ((end - start + 1) as i64).min(rem)
        } else {
            0
        };
        for k in 0..=max_k {
            // bottom segment = highest indices (smallest positions)
            for j in 0..k as usize {
                chosen.push(end - j);
            }
            rec(beads, bl, b + 1, rem - k, chosen, out);
            for _ in 0..k as usize {
                chosen.pop();
            }
        }
    }
    rec(beads, &bl, 0, count, &mut chosen, &mut out);
    out
}

/// Apply a signed displacement vector aligned with the descending bead list.
pub fn apply_displacements(beads: &[i64], d: &[i64]) -> Vec<i64> {
    beads.iter().zip(d).map(|(p, dx)| p + dx).collect()
}

//! N-bead abaci: the bead-position encoding of μ + δ(N).
//!
//! A partition μ padded to N parts corresponds to beads at positions
//! μ_i + N − i. Gaps and beads carry labels and signs that drive the
//! creation and destruction operators:
//!
//! - a gap with g gaps strictly left and b beads strictly right has
//!   label g − b and sign (−1)^b; equivalently its label is p − N at
//!   position p, since every position left of it is a bead or a gap;
//! - a bead with b beads strictly right and g gaps strictly left has
//!   label b − g = N − 1 − p and sign (−1)^g.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Positions of the N beads, strictly decreasing, all nonnegative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Abacus {
    beads: Vec<i64>,
}

/// A gap together with its label g − b and sign (−1)^b.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapInfo {
    pub position: i64,
    pub label: i64,
    pub sign: i32,
}

/// A bead together with its label b − g and sign (−1)^g.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BeadInfo {
    pub position: i64,
    pub label: i64,
    pub sign: i32,
}

impl Abacus {
    /// Abacus of μ padded with zeros to `n_beads` parts.
    pub fn from_partition(mu: &Partition, n_beads: usize) -> Result<Abacus> {
        if n_beads < mu.len() {
            return Err(Error::InvalidBeadCount {
                length: mu.len(),
                n_beads,
            });
        }
        let n = n_beads as i64;
        let beads = (0..n_beads)
            .map(|j| mu.part(j) + n - 1 - j as i64)
            .collect();
        Ok(Abacus { beads })
    }

    /// Construct directly from strictly decreasing nonnegative positions.
    pub fn from_positions(beads: Vec<i64>) -> Result<Abacus> {
        for w in beads.windows(2) {
            if w[0] <= w[1] {
                return Err(Error::InvalidPartition(format!(
                    "bead positions not strictly decreasing: {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if beads.last().is_some_and(|&b| b < 0) {
            return Err(Error::InvalidPartition("negative bead position".into()));
        }
        Ok(Abacus { beads })
    }

    /// Read the partition back off: μ_{j+1} = p_j − N + j + 1 for the j-th
    /// largest bead position p_j, trailing zeros stripped.
    pub fn to_partition(&self) -> Partition {
        let n = self.beads.len() as i64;
        let parts: Vec<i64> = self
            .beads
            .iter()
            .enumerate()
            .map(|(j, &p)| p - n + j as i64 + 1)
            .collect();
        Partition::new(parts).expect("abacus always decodes to a partition")
    }

    pub fn n_beads(&self) -> usize {
        self.beads.len()
    }

    /// Bead positions in decreasing order.
    pub fn beads(&self) -> &[i64] {
        &self.beads
    }

    pub fn max_bead(&self) -> Option<i64> {
        self.beads.first().copied()
    }

    fn search(&self, pos: i64) -> std::result::Result<usize, usize> {
        // beads are stored descending
        self.beads.binary_search_by(|&b| pos.cmp(&b))
    }

    pub fn has_bead(&self, pos: i64) -> bool {
        self.search(pos).is_ok()
    }

    /// Number of beads at positions strictly greater than `pos`.
    pub fn beads_right_of(&self, pos: i64) -> usize {
        match self.search(pos) {
            Ok(i) | Err(i) => i,
        }
    }

    /// Number of beads at positions strictly less than `pos`.
    pub fn beads_left_of(&self, pos: i64) -> usize {
        match self.search(pos) {
            Ok(i) => self.beads.len() - i - 1,
            Err(i) => self.beads.len() - i,
        }
    }

    /// Fill the gap at `pos` with a new bead.
    pub fn with_bead_filled(&self, pos: i64) -> Abacus {
        debug_assert!(pos >= 0 && !self.has_bead(pos));
        let i = self.beads_right_of(pos);
        let mut beads = self.beads.clone();
        beads.insert(i, pos);
        Abacus { beads }
    }

    /// Remove the bead at `pos`, leaving a gap.
    pub fn with_bead_removed(&self, pos: i64) -> Abacus {
        let i = self.search(pos).expect("bead present");
        let mut beads = self.beads.clone();
        beads.remove(i);
        Abacus { beads }
    }

    /// Replace this abacus with new bead positions (already descending).
    pub fn with_positions(&self, beads: Vec<i64>) -> Abacus {
        debug_assert!(beads.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(beads.last().is_none_or(|&b| b >= 0));
        Abacus { beads }
    }

    /// Gaps at positions 0..(max bead + 1 + horizon), left to right, with
    /// labels and signs. Beyond the last bead the labels keep increasing by
    /// one per position, so a finite horizon loses no information.
    pub fn gap_labels(&self, horizon: i64) -> Vec<GapInfo> {
        let end = self.max_bead().unwrap_or(-1) + 1 + horizon.max(0);
        let n = self.beads.len() as i64;
        let mut out = Vec::new();
        let mut beads_right = self.beads.len();
        for p in 0..end {
            if self.has_bead(p) {
                beads_right -= 1;
            } else {
                out.push(GapInfo {
                    position: p,
                    label: p - n,
                    sign: if beads_right.is_multiple_of(2) { 1 } else { -1 },
                });
            }
        }
        out
    }

    /// Beads left to right with labels and signs; labels strictly decrease.
    pub fn bead_labels(&self) -> Vec<BeadInfo> {
        let n = self.beads.len() as i64;
        let mut out: Vec<BeadInfo> = self
            .beads
            .iter()
            .map(|&p| {
                let g = p - self.beads_left_of(p) as i64;
                BeadInfo {
                    position: p,
                    label: n - 1 - p,
                    sign: if g % 2 == 0 { 1 } else { -1 },
                }
            })
            .collect();
        out.reverse();
        out
    }

    /// Position and sign of the unique gap labeled `m`, if it exists.
    /// The gap labeled m sits at position m + N when that position is open.
    pub fn gap_for_label(&self, m: i64) -> Option<(i64, i32)> {
        let pos = m + self.beads.len() as i64;
        if pos < 0 || self.has_bead(pos) {
            return None;
        }
        let b = self.beads_right_of(pos);
        Some((pos, if b.is_multiple_of(2) { 1 } else { -1 }))
    }

    /// Position and sign of the unique bead labeled `m`, if it exists.
    /// The bead labeled m sits at position N − 1 − m when that holds a bead.
    pub fn bead_for_label(&self, m: i64) -> Option<(i64, i32)> {
        let pos = self.beads.len() as i64 - 1 - m;
        if pos < 0 || !self.has_bead(pos) {
            return None;
        }
        let g = pos - self.beads_left_of(pos) as i64;
        Some((pos, if g % 2 == 0 { 1 } else { -1 }))
    }

    /// Interchange beads and gaps on the window [0, window) and reverse it.
    /// With every bead inside the window this implements conjugation:
    /// `flip(abacus(μ)).to_partition() == μ′`.
    pub fn flip(&self, window: i64) -> Result<Abacus> {
        if let Some(max) = self.max_bead() {
            if window <= max {
                return Err(Error::IncompleteWindow { window, bead: max });
            }
        }
        if window < 0 {
            return Err(Error::IncompleteWindow { window, bead: 0 });
        }
        let mut beads = Vec::with_capacity((window as usize).saturating_sub(self.beads.len()));
        for p in 0..window {
            if !self.has_bead(p) {
                beads.push(window - 1 - p);
            }
        }
        Ok(Abacus { beads })
    }

    /// 0/1 word rendering with `o` for bead and `.` for gap.
    pub fn word_string(&self, len: usize) -> String {
        (0..len as i64)
            .map(|p| if self.has_bead(p) { 'o' } else { '.' })
            .collect()
    }
}

impl fmt::Debug for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Abacus{:?}", self.beads)
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = (self.max_bead().unwrap_or(-1) + 2) as usize;
        write!(f, "{}", self.word_string(len))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ptn(parts: &[i64]) -> Partition {
        Partition::from_parts(parts)
    }

    #[test]
    fn abacus_of_large_partition() {
        // w = 11010110011000011100000...
        let mu = ptn(&[8, 8, 8, 4, 4, 2, 2, 1]);
        let a = Abacus::from_partition(&mu, 10).unwrap();
        assert_eq!(a.beads(), &[17, 16, 15, 10, 9, 6, 5, 3, 1, 0]);
        assert_eq!(
            a.word_string(23),
            "11010110011000011100000"
                .replace('1', "o")
                .replace('0', ".")
        );
        assert_eq!(a.to_partition(), mu);
    }

    #[test]
    fn abacus_of_empty_partition() {
        let a = Abacus::from_partition(&Partition::empty(), 3).unwrap();
        assert_eq!(a.beads(), &[2, 1, 0]);
        assert_eq!(a.to_partition(), Partition::empty());
    }

    #[test]
    fn abacus_by_hand_arithmetic() {
        let a = Abacus::from_partition(&ptn(&[3, 1, 1]), 4).unwrap();
        assert_eq!(a.beads(), &[6, 3, 2, 0]);
        assert_eq!(a.to_partition(), ptn(&[3, 1, 1]));
    }

    #[test]
    fn bead_count_too_small() {
        assert!(matches!(
            Abacus::from_partition(&ptn(&[3, 1, 1]), 2),
            Err(Error::InvalidBeadCount { .. })
        ));
    }

    #[test]
    fn round_trip_over_padding_range() {
        for mu in Partition::all_up_to(8) {
            for extra in 0..=20usize {
                let n = mu.len() + extra;
                let a = Abacus::from_partition(&mu, n).unwrap();
                assert_eq!(a.to_partition(), mu, "mu={} N={}", mu, n);
            }
        }
    }

    #[test]
    fn gap_labels_of_table_one_abacus() {
        let a = Abacus::from_partition(&ptn(&[8, 8, 8, 4, 4, 2, 2, 1]), 8).unwrap();
        let gaps = a.gap_labels(4);
        let labels: Vec<i64> = gaps.iter().map(|g| g.label).collect();
        assert_eq!(labels, vec![-8, -6, -3, -2, 1, 2, 3, 4, 8, 9, 10, 11]);
        let sign_of = |l: i64| gaps.iter().find(|g| g.label == l).unwrap().sign;
        for l in [8, 9, 10, 11, -8] {
            assert_eq!(sign_of(l), 1, "label {}", l);
        }
        for l in [4, 3, 2, 1, -2, -3, -6] {
            assert_eq!(sign_of(l), -1, "label {}", l);
        }
    }

    #[test]
    fn gap_labels_of_empty_abacus() {
        let a = Abacus::from_partition(&Partition::empty(), 5).unwrap();
        for (i, g) in a.gap_labels(7).iter().enumerate() {
            assert_eq!(g.position, 5 + i as i64);
            assert_eq!(g.label, i as i64);
            assert_eq!(g.sign, 1);
        }
    }

    #[test]
    fn gap_label_second_rule() {
        // First gap right of the rightmost bead is labeled μ_1; labels step
        // by one per position in both directions.
        for mu in Partition::all_up_to(9) {
            for extra in 0..3usize {
                let a = Abacus::from_partition(&mu, mu.len() + extra).unwrap();
                let right = a.max_bead().unwrap_or(-1) + 1;
                let gaps = a.gap_labels(3);
                let anchor = gaps.iter().find(|g| g.position == right).unwrap();
                assert_eq!(anchor.label, mu.first());
                for g in &gaps {
                    assert_eq!(g.label, mu.first() + (g.position - right));
                }
            }
        }
    }

    #[test]
    fn gap_labels_padding_independent() {
        for mu in Partition::all_up_to(8) {
            let a = Abacus::from_partition(&mu, mu.len()).unwrap();
            let b = Abacus::from_partition(&mu, mu.len() + 1).unwrap();
            let map_a: std::collections::BTreeMap<i64, i32> = a
                .gap_labels(5)
                .into_iter()
                .map(|g| (g.label, g.sign))
                .collect();
            let map_b: std::collections::BTreeMap<i64, i32> = b
                .gap_labels(5)
                .into_iter()
                .map(|g| (g.label, g.sign))
                .collect();
            for (label, sign) in &map_a {
                if let Some(s2) = map_b.get(label) {
                    assert_eq!(sign, s2, "mu={} label={}", mu, label);
                }
            }
            // every label of the smaller abacus appears in the larger
            assert!(map_a.keys().all(|l| map_b.contains_key(l)));
        }
    }

    #[test]
    fn bead_labels_examples() {
        // empty partition: all gaps right of all beads
        let a = Abacus::from_partition(&Partition::empty(), 4).unwrap();
        for b in a.bead_labels() {
            assert_eq!(b.label, 3 - b.position);
            assert_eq!(b.sign, 1);
        }

        let a = Abacus::from_partition(&ptn(&[1]), 2).unwrap();
        assert_eq!(a.beads(), &[2, 0]);
        let bl = a.bead_labels();
        assert_eq!(
            bl[0],
            BeadInfo {
                position: 0,
                label: 1,
                sign: 1
            }
        );
        assert_eq!(
            bl[1],
            BeadInfo {
                position: 2,
                label: -1,
                sign: -1
            }
        );

        let a = Abacus::from_partition(&ptn(&[2, 1]), 2).unwrap();
        assert_eq!(a.beads(), &[3, 1]);
        let bl = a.bead_labels();
        assert_eq!(bl[1].label, -2);
        assert_eq!(bl[1].sign, 1);
        // strictly decreasing left to right
        for w in bl.windows(2) {
            assert!(w[0].label > w[1].label);
        }
    }

    #[test]
    fn direct_label_lookup_agrees_with_enumeration() {
        for mu in Partition::all_up_to(8) {
            for extra in 0..3usize {
                let a = Abacus::from_partition(&mu, mu.len() + extra).unwrap();
                for g in a.gap_labels(6) {
                    assert_eq!(a.gap_for_label(g.label), Some((g.position, g.sign)));
                }
                for b in a.bead_labels() {
                    assert_eq!(a.bead_for_label(b.label), Some((b.position, b.sign)));
                }
            }
        }
    }

    #[test]
    fn flip_implements_conjugation() {
        let a = Abacus::from_partition(&ptn(&[3, 1]), 2).unwrap();
        let f = a.flip(a.max_bead().unwrap() + 1).unwrap();
        assert_eq!(f.to_partition(), ptn(&[2, 1, 1]));

        let empty = Abacus::from_partition(&Partition::empty(), 0).unwrap();
        assert_eq!(empty.flip(0).unwrap().to_partition(), Partition::empty());

        let a = Abacus::from_partition(&ptn(&[8, 8, 8, 4, 4, 2, 2, 1]), 8).unwrap();
        let f = a.flip(20).unwrap();
        assert_eq!(f.to_partition(), ptn(&[8, 7, 5, 5, 3, 3, 3, 3]));
        assert_eq!(f.to_partition(), ptn(&[8, 8, 8, 4, 4, 2, 2, 1]).conjugate());
    }

    #[test]
    fn flip_exhaustive_and_involutive() {
        for mu in Partition::all_up_to(12) {
            for extra in [0usize, 2] {
                let a = Abacus::from_partition(&mu, mu.len() + extra).unwrap();
                let w = a.max_bead().unwrap_or(-1) + 1 + 3;
                let f = a.flip(w).unwrap();
                assert_eq!(f.to_partition(), mu.conjugate(), "mu={}", mu);
                let ff = f.flip(w).unwrap();
                assert_eq!(ff.to_partition(), mu, "mu={}", mu);
            }
        }
    }

    #[test]
    fn flip_window_too_small() {
        let a = Abacus::from_partition(&ptn(&[3, 1]), 2).unwrap();
        assert!(matches!(a.flip(4), Err(Error::IncompleteWindow { .. })));
    }
}

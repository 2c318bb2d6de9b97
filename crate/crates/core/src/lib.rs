//! Exact-arithmetic engine for Schur expansions of symmetric functions built
//! from creation operators.
//!
//! The engine works in the Schur basis throughout. Partitions are encoded as
//! N-bead abaci; the creation operators act by moving, creating, and
//! destroying beads:
//!
//! - [`operators::bernstein_s`]: the bead-creation operator S_m (fills the
//!   unique gap labeled m, with a sign);
//! - [`operators::jing_h`]: H_m = Σ_c q^c S_{m+c} ∘ h_c⊥, which builds
//!   Hall–Littlewood polynomials row by row;
//! - [`operators::hmz_c`], [`operators::hmz_b`]: the q ↦ 1/q variant C_m and
//!   the ω-conjugate B_m;
//! - Pieri multiplications and their adjoints as bead moves.
//!
//! [`histories`] enumerates abacus-histories: the two-dimensional diagrams
//! recording an operator word's action over time, each carrying a sign and a
//! q-power. Their signed weighted sum reproduces the operator engine exactly.
//! [`threerow`] implements the closed-form Schur coefficients of H_ν for
//! three-row ν together with the sign-reversing involution behind them.
//! [`oracle`] holds independent Ferrers-diagram implementations used only for
//! cross-validation.
//!
//! Coefficients are Laurent polynomials in q over arbitrary-precision
//! integers ([`qlaurent::QLaurent`]); all comparisons in the test and check
//! suites are exact.

pub mod abacus;
pub mod error;
pub mod expansion;
pub mod histories;
pub mod moves;
pub mod operators;
pub mod oracle;
pub mod partition;
pub mod qlaurent;
pub mod selfcheck;
pub mod threerow;
pub mod word;

pub use abacus::{Abacus, BeadInfo, GapInfo};
pub use error::{Error, Result};
pub use expansion::SchurExpansion;
pub use partition::Partition;
pub use qlaurent::QLaurent;

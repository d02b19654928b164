//! Stabilization-sequence calculus: reduction of a move sequence to
//! monotone form and the common-stabilization genus.
//!
//! A destabilization followed by a stabilization produces a splitting
//! isotopic to the one before the pair, so adjacent `(−1, +1)` pairs can be
//! deleted from a move sequence without changing its endpoints. Repeating
//! until no such pair remains leaves a monotone sequence: all `+1` moves
//! before all `−1` moves. Its peak is the common-stabilization genus.

use alloc::vec::Vec;
use core::fmt;

use crate::sweep::Trajectory;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabError {
    /// A prefix of the sequence drives the genus below zero.
    InvalidSequence { at: usize },
    /// `c` and `p + q` have different parities.
    ParityViolation { p: u32, q: u32, c: u32 },
    /// `c < |p − q|`.
    GapViolation { p: u32, q: u32, c: u32 },
}

impl fmt::Display for StabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabError::InvalidSequence { at } => {
                write!(f, "move {at} destabilizes a genus-0 splitting")
            }
            StabError::ParityViolation { p, q, c } => {
                write!(f, "c = {c} has different parity from p + q = {}", p + q)
            }
            StabError::GapViolation { p, q, c } => {
                write!(f, "c = {c} is less than |p − q| = {}", p.abs_diff(*q))
            }
        }
    }
}

impl core::error::Error for StabError {}

/// A base genus plus ±1 stabilization/destabilization moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSequence {
    pub base_genus: u32,
    pub moves: Vec<i8>,
}

impl MoveSequence {
    pub fn new(base_genus: u32, moves: Vec<i8>) -> MoveSequence {
        MoveSequence { base_genus, moves }
    }

    /// Genus after the last move.
    pub fn end_genus(&self) -> i64 {
        self.base_genus as i64 + self.moves.iter().map(|&m| m as i64).sum::<i64>()
    }

    /// Checks that every prefix keeps the genus nonnegative.
    pub fn check(&self) -> Result<(), StabError> {
        let mut genus = self.base_genus as i64;
        for (i, &m) in self.moves.iter().enumerate() {
            debug_assert!(m == 1 || m == -1);
            genus += m as i64;
            if genus < 0 {
                return Err(StabError::InvalidSequence { at: i });
            }
        }
        Ok(())
    }
}

/// A monotone up-then-down sequence with the same endpoints as its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSequence {
    /// All `+1` moves precede all `−1` moves.
    pub moves: Vec<i8>,
    /// Largest genus along the reduced sequence.
    pub peak: u32,
}

/// Deletes adjacent `(−1, +1)` pairs until none remain. The fixpoint is
/// monotone, has the same endpoints as the source, and is never longer.
pub fn reduce(s: &MoveSequence) -> Result<ReducedSequence, StabError> {
    s.check()?;
    let mut moves = s.moves.clone();
    loop {
        let mut deleted = false;
        let mut i = 0;
        while i + 1 < moves.len() {
            if moves[i] == -1 && moves[i + 1] == 1 {
                moves.drain(i..i + 2);
                deleted = true;
                // Re-examine from the previous position: the deletion may
                // have created a new adjacent pair.
                i = i.saturating_sub(1);
            } else {
                i += 1;
            }
        }
        if !deleted {
            break;
        }
    }
    debug_assert!(moves.windows(2).all(|w| !(w[0] == -1 && w[1] == 1)));
    let ups = moves.iter().filter(|&&m| m == 1).count() as u32;
    Ok(ReducedSequence {
        moves,
        peak: s.base_genus + ups,
    })
}

/// The common-stabilization genus `(p + q + c) / 2` for end genera `p`, `q`
/// joined by a sequence of `c` single moves. Always an integer at least
/// `max(p, q)` once the parity and gap laws hold.
pub fn common_stab_genus(p: u32, q: u32, c: u32) -> Result<u32, StabError> {
    if !(p + q + c).is_multiple_of(2) {
        return Err(StabError::ParityViolation { p, q, c });
    }
    if c < p.abs_diff(q) {
        return Err(StabError::GapViolation { p, q, c });
    }
    let genus = (p + q + c) / 2;
    debug_assert!(genus >= p.max(q));
    Ok(genus)
}

/// The move sequence read off a genus trajectory: base genus `q` and the
/// nonzero genus steps in angle order.
pub fn from_trajectory(trajectory: &Trajectory) -> MoveSequence {
    let moves = trajectory.moves().iter().map(|&d| d as i8).collect();
    MoveSequence {
        base_genus: trajectory.q(),
        moves,
    }
}

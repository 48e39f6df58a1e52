//! Liftability through the balanced superelliptic cover.
//!
//! The cover has branch points `p_1, ..., p_{2n+2}`, paired into `n + 1` arcs
//! `(p_1, p_2), (p_3, p_4), ...`. For `k ≥ 3` a mapping class lifts exactly
//! when its permutation of the branch points either keeps the odd-indexed
//! points among themselves or swaps them wholesale with the even-indexed
//! ones. For `k = 2` every mapping class lifts.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::braid::BraidWord;
use crate::perm::Perm;

/// Largest `n` for which [`enumerate_w`] will filter the full symmetric group.
pub const MAX_ENUMERATION_N: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("invalid cover: n = {n}, k = {k} (need n ≥ 1, k ≥ 2)")]
    InvalidConfig { n: usize, k: usize },
    #[error("expected {expected} points, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("n = {0} is too large to enumerate (limit {MAX_ENUMERATION_N})")]
    TooLarge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct CoverConfig {
    n: usize,
    k: usize,
}

impl CoverConfig {
    pub fn new(n: usize, k: usize) -> Result<Self, LiftError> {
        if n == 0 || k < 2 {
            return Err(LiftError::InvalidConfig { n, k });
        }
        Ok(CoverConfig { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of branch points, `2n + 2`.
    pub fn points(&self) -> usize {
        2 * self.n + 2
    }

    /// Genus of the covering surface, `n(k - 1)`.
    pub fn genus(&self) -> usize {
        self.n * (self.k - 1)
    }

    pub fn is_hyperelliptic(&self) -> bool {
        self.k == 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ParityClass {
    Preserving,
    Reversing,
    Neither,
}

impl ParityClass {
    /// Grading on the parity subgroup: preserving is 0, reversing is 1.
    pub fn grade(self) -> Option<u8> {
        match self {
            ParityClass::Preserving => Some(0),
            ParityClass::Reversing => Some(1),
            ParityClass::Neither => None,
        }
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityClass::Preserving => "PRESERVING",
            ParityClass::Reversing => "REVERSING",
            ParityClass::Neither => "NEITHER",
        })
    }
}

pub fn parity_class(p: &Perm, cfg: &CoverConfig) -> Result<ParityClass, LiftError> {
    if p.degree() != cfg.points() {
        return Err(LiftError::SizeMismatch {
            expected: cfg.points(),
            got: p.degree(),
        });
    }
    let mut odd_to_odd = true;
    let mut odd_to_even = true;
    for i in (1..=p.degree()).step_by(2) {
        if p.apply(i) % 2 == 1 {
            odd_to_even = false;
        } else {
            odd_to_odd = false;
        }
    }
    Ok(match (odd_to_odd, odd_to_even) {
        (true, _) => ParityClass::Preserving,
        (_, true) => ParityClass::Reversing,
        _ => ParityClass::Neither,
    })
}

pub fn is_liftable(b: &BraidWord, cfg: &CoverConfig) -> Result<bool, LiftError> {
    if b.strands() != cfg.points() {
        return Err(LiftError::SizeMismatch {
            expected: cfg.points(),
            got: b.strands(),
        });
    }
    if cfg.is_hyperelliptic() {
        return Ok(true);
    }
    Ok(parity_class(&b.perm(), cfg)? != ParityClass::Neither)
}

/// All parity-preserving or parity-reversing permutations, in lexicographic
/// order of their image lists.
pub fn enumerate_w(cfg: &CoverConfig) -> Result<Vec<Perm>, LiftError> {
    if cfg.n > MAX_ENUMERATION_N {
        return Err(LiftError::TooLarge(cfg.n));
    }
    let m = cfg.points();
    let out = (1..=m)
        .permutations(m)
        .map(|images| Perm::from_images(images).expect("permutations are bijective"))
        .filter(|p| {
            parity_class(p, cfg)
                .map(|c| c != ParityClass::Neither)
                .unwrap_or(false)
        })
        .collect();
    Ok(out)
}

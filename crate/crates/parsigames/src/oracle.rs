//! Brute-force certifier.
//!
//! Everything here works by exhaustive subset enumeration over `2^n`
//! coalitions, so `n` is capped (default 16, overridable per call and via
//! `PARSIGAMES_ORACLE_CAP` in the CLI). Weights enter as exact integers; no
//! floating point anywhere.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::representations::{Game, MinHomRepr};

/// Default cap on `n` for subset enumeration: 65 536 subsets per game.
pub const DEFAULT_ORACLE_CAP: usize = 16;

/// A coalition as an `n`-bit mask; bit `i - 1` set means player `i` (in
/// non-decreasing weight order) is a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(pub u32);

impl Coalition {
    pub fn members(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |i| mask >> i & 1 == 1).map(|i| i + 1)
    }

    pub fn size(self) -> u32 {
        self.0.count_ones()
    }
}

/// Outcome of certifying a representation against the defining properties.
#[derive(Debug, Clone, Serialize)]
pub struct CertificationReport {
    pub n: usize,
    pub wm_count: usize,
    pub homogeneous: bool,
    pub constant_sum: bool,
    pub dummy_free: bool,
    pub parsimonious: bool,
    #[serde(skip)]
    pub wm_list: Vec<Coalition>,
}

/// `w(S) >= q`, exact arithmetic.
pub fn is_winning(coalition: Coalition, r: &MinHomRepr) -> bool {
    let weight: BigUint = coalition
        .members()
        .map(|i| r.weights[i - 1].clone())
        .sum();
    weight >= r.quota
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::Capacity { n, cap })
    } else {
        Ok(())
    }
}

/// All subset weights as machine integers. The cap keeps tables small; the
/// conversion is checked so an oversized weight errors instead of wrapping.
fn subset_sums(r: &MinHomRepr) -> Result<(Vec<u64>, u64)> {
    let weights: Vec<u64> = r
        .weights
        .iter()
        .map(|w| {
            w.to_u64()
                .ok_or_else(|| Error::Capacity { n: r.n(), cap: DEFAULT_ORACLE_CAP })
        })
        .collect::<Result<_>>()?;
    let quota = r
        .quota
        .to_u64()
        .ok_or(Error::Capacity { n: r.n(), cap: DEFAULT_ORACLE_CAP })?;
    let n = weights.len();
    let mut sums = vec![0u64; 1 << n];
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        sums[mask] = sums[mask & (mask - 1)] + weights[low];
    }
    Ok((sums, quota))
}

/// All minimal winning coalitions, ordered by ascending bitmask value.
///
/// Minimality is tested by deleting the lightest member only: weights are the
/// sole coalition data and the players are sorted, so removing the
/// lowest-index member is the weakest possible deletion.
pub fn minimal_winning_set(r: &MinHomRepr) -> Result<Vec<Coalition>> {
    minimal_winning_set_capped(r, DEFAULT_ORACLE_CAP)
}

pub fn minimal_winning_set_capped(r: &MinHomRepr, cap: usize) -> Result<Vec<Coalition>> {
    let n = r.n();
    check_cap(n, cap)?;
    let (sums, quota) = subset_sums(r)?;
    let weights: Vec<u64> = (0..n).map(|i| sums[1 << i]).collect();
    let mut wm = Vec::new();
    for mask in 1usize..1 << n {
        let sum = sums[mask];
        if sum < quota {
            continue;
        }
        let lightest = weights[mask.trailing_zeros() as usize];
        if sum - lightest < quota {
            wm.push(Coalition(mask as u32));
        }
    }
    Ok(wm)
}

/// Certifies every defining property of a parsimonious game by brute force.
pub fn certify(r: &MinHomRepr) -> Result<CertificationReport> {
    certify_capped(r, DEFAULT_ORACLE_CAP)
}

pub fn certify_capped(r: &MinHomRepr, cap: usize) -> Result<CertificationReport> {
    let n = r.n();
    check_cap(n, cap)?;
    let wm = minimal_winning_set_capped(r, cap)?;
    let (sums, quota) = subset_sums(r)?;
    let full = (1usize << n) - 1;

    let homogeneous = wm.iter().all(|c| sums[c.0 as usize] == quota);
    let constant_sum = (0..=full).all(|mask| {
        let s_wins = sums[mask] >= quota;
        let c_wins = sums[full ^ mask] >= quota;
        s_wins != c_wins
    });
    let mut covered = 0u32;
    for c in &wm {
        covered |= c.0;
    }
    let dummy_free = covered == full as u32;
    let wm_count = wm.len();
    let parsimonious = wm_count == n && homogeneous && constant_sum && dummy_free;

    Ok(CertificationReport {
        n,
        wm_count,
        homogeneous,
        constant_sum,
        dummy_free,
        parsimonious,
        wm_list: wm,
    })
}

/// The `n x n` incidence matrix: row `j`, column `i` is 1 iff player `i`
/// belongs to the `j`-th minimal winning coalition in bitmask order.
pub fn incidence_matrix(game: &Game) -> Result<Vec<Vec<u8>>> {
    incidence_matrix_capped(game, DEFAULT_ORACLE_CAP)
}

pub fn incidence_matrix_capped(game: &Game, cap: usize) -> Result<Vec<Vec<u8>>> {
    let n = game.n();
    let wm = minimal_winning_set_capped(&game.min_hom(), cap)?;
    if wm.len() != n {
        return Err(Error::Invariant(format!(
            "generated game has {} minimal winning coalitions, expected {n}",
            wm.len()
        )));
    }
    Ok(wm
        .iter()
        .map(|c| (1..=n).map(|i| (c.0 >> (i - 1) & 1) as u8).collect())
        .collect())
}

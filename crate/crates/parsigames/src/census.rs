//! The counting layer: the classic triangle `C` and the three modified
//! triangles `Gamma` (self-twin counts), `Delta` (non-self-twin counts) and
//! `Theta` (twin-pair counts), each obtainable by independent routes that
//! must agree: closed form, recurrence and direct enumeration.
//!
//! Rows are indexed by `m = n - 4`, columns by `k = h - 2`.

use crate::error::{Error, Result};
use crate::representations::enumerate_games;
use crate::symmetry::is_self_twin;

/// Default row cap for closed forms and recurrences.
pub const DEFAULT_MAX_M: usize = 20;
/// Default row cap for exhaustive enumeration (2^12 games).
pub const DEFAULT_ENUM_MAX_M: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriangleKind {
    C,
    Gamma,
    Delta,
    Theta,
}

impl TriangleKind {
    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::C => "C",
            TriangleKind::Gamma => "gamma",
            TriangleKind::Delta => "delta",
            TriangleKind::Theta => "theta",
        }
    }
}

/// A dense lower-triangular table: row `m` holds entries for `k = 0..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub kind: TriangleKind,
    pub rows: Vec<Vec<u64>>,
}

impl Triangle {
    pub fn max_m(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, m: usize, k: usize) -> u64 {
        self.rows[m][k]
    }
}

fn check_range(m: usize, k: usize) -> Result<()> {
    if k > m {
        Err(Error::Domain(format!("need k <= m, got m={m}, k={k}")))
    } else {
        Ok(())
    }
}

/// Binomial coefficient by the additive Pascal recurrence; exact, no
/// factorials or division.
pub fn c_count(m: usize, k: usize) -> Result<u64> {
    check_range(m, k)?;
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![1u64];
        for pair in row.windows(2) {
            next.push(pair[0] + pair[1]);
        }
        next.push(1);
        row = next;
    }
    Ok(row[k])
}

pub fn c_triangle(max_m: usize) -> Triangle {
    let mut rows = vec![vec![1u64]];
    for _ in 0..max_m {
        let prev = rows.last().unwrap();
        let mut next = vec![1u64];
        for pair in prev.windows(2) {
            next.push(pair[0] + pair[1]);
        }
        next.push(1);
        rows.push(next);
    }
    Triangle { kind: TriangleKind::C, rows }
}

/// Number of self-twin games with `n = m + 4` players: `2^{m/2}` for even
/// `m`, `2^{(m+1)/2}` for odd `m`.
pub fn gamma_total(m: usize) -> u64 {
    1 << ((m + 1) / 2)
}

/// Self-twin count for `(m, k)` in closed form, by parity case.
pub fn gamma_closed(m: usize, k: usize) -> Result<u64> {
    check_range(m, k)?;
    match (m % 2, k % 2) {
        (0, 0) => c_count(m / 2, k / 2),
        (0, 1) => Ok(0),
        (1, 0) => c_count((m - 1) / 2, k / 2),
        (1, 1) => c_count((m - 1) / 2, (k - 1) / 2),
        _ => unreachable!(),
    }
}

/// The modified Pascal recurrence for `Gamma`: edges are 1; interior cells
/// take the sum of the two adjacent entries above when `m + k` is even and
/// their difference when `m + k` is odd.
pub fn gamma_recurrence(max_m: usize) -> Triangle {
    let mut rows: Vec<Vec<u64>> = vec![vec![1u64]];
    for m in 1..=max_m {
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(1);
        for k in 1..m {
            let entry = if (m + k) % 2 == 0 {
                prev[k] + prev[k - 1]
            } else {
                prev[k] - prev[k - 1]
            };
            row.push(entry);
        }
        row.push(1);
        rows.push(row);
    }
    Triangle { kind: TriangleKind::Gamma, rows }
}

/// Builds `Delta` and `Theta` up to `max_m`.
///
/// `Delta` is computed twice, by subtraction `C - Gamma` and by its own
/// recurrence (sum rule, plus `2 Gamma(m-1, k-1)` on the parity cells); any
/// disagreement, or an odd `Delta` entry, is an internal bug and raised as
/// an invariant violation. `Theta = Delta / 2`.
pub fn delta_theta(max_m: usize) -> Result<(Triangle, Triangle)> {
    let c = c_triangle(max_m);
    let gamma = gamma_recurrence(max_m);

    let subtraction: Vec<Vec<u64>> = (0..=max_m)
        .map(|m| (0..=m).map(|k| c.get(m, k) - gamma.get(m, k)).collect())
        .collect();

    let mut recurrence: Vec<Vec<u64>> = vec![vec![0u64]];
    for m in 1..=max_m {
        let prev = &recurrence[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(0);
        for k in 1..m {
            let mut entry = prev[k] + prev[k - 1];
            if (m + k) % 2 == 1 {
                entry += 2 * gamma.get(m - 1, k - 1);
            }
            row.push(entry);
        }
        row.push(0);
        recurrence.push(row);
    }

    if subtraction != recurrence {
        return Err(Error::Invariant(
            "delta by subtraction disagrees with delta by recurrence".into(),
        ));
    }
    if subtraction.iter().flatten().any(|&d| d % 2 != 0) {
        return Err(Error::Invariant("odd delta entry".into()));
    }

    let theta_rows = subtraction
        .iter()
        .map(|row| row.iter().map(|&d| d / 2).collect())
        .collect();
    Ok((
        Triangle { kind: TriangleKind::Delta, rows: subtraction },
        Triangle { kind: TriangleKind::Theta, rows: theta_rows },
    ))
}

/// Observed counts for a single `n`, classified by `k = h - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub m: usize,
    /// Games per `k`; must equal row `m` of `C`.
    pub total_per_k: Vec<u64>,
    /// Self-twin games per `k`; must equal row `m` of `Gamma`.
    pub self_twin_per_k: Vec<u64>,
    /// Twin pairs per `k`; must equal row `m` of `Theta`.
    pub twin_pairs_per_k: Vec<u64>,
}

/// Classifies all `2^{n-4}` games of a given `n` by exhaustive enumeration.
pub fn census_by_enumeration(n: usize) -> Result<CensusRow> {
    census_by_enumeration_capped(n, DEFAULT_ENUM_MAX_M)
}

pub fn census_by_enumeration_capped(n: usize, max_m: usize) -> Result<CensusRow> {
    if n < 4 {
        return Err(Error::Domain(format!("need n >= 4, got {n}")));
    }
    let m = n - 4;
    if m > max_m {
        return Err(Error::Capacity { n, cap: max_m + 4 });
    }
    let mut total = vec![0u64; m + 1];
    let mut self_twin = vec![0u64; m + 1];
    for game in enumerate_games(n)? {
        let k = game.k();
        total[k] += 1;
        if is_self_twin(&game) {
            self_twin[k] += 1;
        }
    }
    let twin_pairs = total
        .iter()
        .zip(&self_twin)
        .map(|(&t, &s)| (t - s) / 2)
        .collect();
    Ok(CensusRow {
        m,
        total_per_k: total,
        self_twin_per_k: self_twin,
        twin_pairs_per_k: twin_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(c_count(4, 2).unwrap(), 6);
        assert_eq!(c_count(9, 0).unwrap(), 1);
        assert_eq!(c_count(5, 3).unwrap(), 10);
        assert!(c_count(3, 4).is_err());
    }

    #[test]
    fn gamma_totals() {
        assert_eq!(gamma_total(0), 1);
        assert_eq!(gamma_total(4), 4);
        assert_eq!(gamma_total(5), 8);
    }

    #[test]
    fn gamma_closed_cases() {
        assert_eq!(gamma_closed(4, 2).unwrap(), 2);
        assert_eq!(gamma_closed(6, 3).unwrap(), 0);
        assert_eq!(gamma_closed(7, 4).unwrap(), 3);
    }

    #[test]
    fn gamma_recurrence_interior_cells() {
        let t = gamma_recurrence(8);
        // (m + k) even: sum rule.
        assert_eq!(t.get(8, 4), t.get(7, 4) + t.get(7, 3));
        assert_eq!(t.get(8, 4), 6);
        // (m + k) odd: difference rule.
        assert_eq!(t.get(8, 3), t.get(7, 3) - t.get(7, 2));
        assert_eq!(t.get(8, 3), 0);
    }

    #[test]
    fn gamma_recurrence_equals_closed_form() {
        let t = gamma_recurrence(DEFAULT_MAX_M);
        for m in 0..=DEFAULT_MAX_M {
            for k in 0..=m {
                assert_eq!(t.get(m, k), gamma_closed(m, k).unwrap(), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn delta_theta_rows() {
        let (delta, theta) = delta_theta(8).unwrap();
        assert_eq!(delta.rows[6], vec![0, 6, 12, 20, 12, 6, 0]);
        assert_eq!(theta.rows[8], vec![0, 4, 12, 28, 32, 28, 12, 4, 0]);
        for m in 0..=8 {
            assert_eq!(delta.get(m, 0), 0);
            assert_eq!(delta.get(m, m), 0);
        }
    }

    #[test]
    fn enumeration_rows() {
        let row = census_by_enumeration(8).unwrap();
        assert_eq!(row.self_twin_per_k, vec![1, 0, 2, 0, 1]);
        assert_eq!(row.twin_pairs_per_k, vec![0, 2, 2, 2, 0]);

        let row = census_by_enumeration(9).unwrap();
        assert_eq!(row.self_twin_per_k, vec![1, 1, 2, 2, 1, 1]);
        assert_eq!(row.twin_pairs_per_k, vec![0, 2, 4, 4, 2, 0]);

        let row = census_by_enumeration(4).unwrap();
        assert_eq!(row.self_twin_per_k, vec![1]);
    }

    #[test]
    fn gamma_doubling_pattern() {
        for m in (0..=18).step_by(2) {
            assert_eq!(gamma_total(m + 1), 2 * gamma_total(m));
            assert_eq!(gamma_total(m + 2), gamma_total(m + 1));
        }
    }
}

//! Pivot triangles: for each generation, the distinct pivot values of the
//! OSTP games and their repetition counts, in closed form and harvested from
//! the genealogical tree.
//!
//! Even rows hold the odd pivots `1, 3, ..., m-1, m+3` (every odd value up to
//! `m + 3` except `m + 1`) with repetitions `2^{m/2-c}` and a final 1. Odd
//! rows are the previous even row with every value bumped by one. Rows are
//! stored sparse as `(value, repetitions)` pairs sorted by value; the column
//! index `c` is positional.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::genealogy::{GenerationLayer, ParityClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotParity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotRow {
    pub m: usize,
    /// `(value, repetitions)` pairs, values strictly increasing.
    pub entries: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotTriangle {
    pub parity: PivotParity,
    pub rows: Vec<PivotRow>,
}

fn check_even_args(m: usize, c: usize) -> Result<()> {
    if m % 2 != 0 {
        return Err(Error::Domain(format!("even pivot row requires even m, got {m}")));
    }
    if c < 1 || c > m / 2 + 1 {
        return Err(Error::Domain(format!(
            "column {c} out of range 1..={} for row m={m}",
            m / 2 + 1
        )));
    }
    Ok(())
}

/// Pivot value in even row `m`, column `c`: `2c - 1` except the last column,
/// which jumps to `2c + 1 = m + 3`. For `m = 0` the single column is the
/// last one, giving the seed pivot 3.
pub fn even_pivot_value(m: usize, c: usize) -> Result<u64> {
    check_even_args(m, c)?;
    if c == m / 2 + 1 {
        Ok(2 * c as u64 + 1)
    } else {
        Ok(2 * c as u64 - 1)
    }
}

/// Repetitions in even row `m`, column `c`: `2^{m/2 - c}`, with the last
/// column appearing once.
pub fn even_pivot_reps(m: usize, c: usize) -> Result<u64> {
    check_even_args(m, c)?;
    if c == m / 2 + 1 {
        Ok(1)
    } else {
        Ok(1 << (m / 2 - c))
    }
}

pub fn even_pivot_row(m: usize) -> Result<Vec<(u64, u64)>> {
    (1..=m / 2 + 1)
        .map(|c| Ok((even_pivot_value(m, c)?, even_pivot_reps(m, c)?)))
        .collect()
}

/// Row sums of even row `m`: `Z` (values, no repetitions), `Y = Z - 2`
/// (the squared-numbers triangle) and `Phi` (value times repetitions).
/// Each closed form is checked against direct summation of the row.
pub fn pivot_sums(m: usize) -> Result<(u64, u64, u64)> {
    let row = even_pivot_row(m)?;
    let z_direct: u64 = row.iter().map(|&(v, _)| v).sum();
    let phi_direct: u64 = row.iter().map(|&(v, r)| v * r).sum();
    let half = (m / 2 + 1) as u64;
    let z = 2 + half * half;
    let phi = 3 * (1u64 << (m / 2));
    if z != z_direct || phi != phi_direct {
        return Err(Error::Invariant(format!(
            "pivot sum closed forms disagree with row m={m}: Z {z} vs {z_direct}, Phi {phi} vs {phi_direct}"
        )));
    }
    Ok((z, z - 2, phi))
}

/// Entry of the odd triangle at row `m_odd`, column `c`: the even row
/// `m_odd - 1` entry with its value bumped by one, same repetitions.
pub fn odd_pivot_entry(m_odd: usize, c: usize) -> Result<(u64, u64)> {
    if m_odd % 2 != 1 {
        return Err(Error::Domain(format!("odd pivot row requires odd m, got {m_odd}")));
    }
    Ok((
        even_pivot_value(m_odd - 1, c)? + 1,
        even_pivot_reps(m_odd - 1, c)?,
    ))
}

pub fn odd_pivot_row(m_odd: usize) -> Result<Vec<(u64, u64)>> {
    if m_odd % 2 != 1 {
        return Err(Error::Domain(format!("odd pivot row requires odd m, got {m_odd}")));
    }
    (1..=(m_odd - 1) / 2 + 1)
        .map(|c| odd_pivot_entry(m_odd, c))
        .collect()
}

/// Weighted row sum of odd row `m_odd`: `4 * 2^{(m_odd - 1)/2}`, verified by
/// direct summation.
pub fn psi(m_odd: usize) -> Result<u64> {
    let row = odd_pivot_row(m_odd)?;
    let direct: u64 = row.iter().map(|&(v, r)| v * r).sum();
    let closed = 4 * (1u64 << ((m_odd - 1) / 2));
    if direct != closed {
        return Err(Error::Invariant(format!(
            "psi closed form {closed} disagrees with direct sum {direct} at m={m_odd}"
        )));
    }
    Ok(closed)
}

/// Closed-form triangles covering all generations up to `max_m`.
pub fn closed_form_triangles(max_m: usize) -> Result<(PivotTriangle, PivotTriangle)> {
    let even_rows = (0..=max_m)
        .step_by(2)
        .map(|m| Ok(PivotRow { m, entries: even_pivot_row(m)? }))
        .collect::<Result<_>>()?;
    let odd_rows = (1..=max_m)
        .step_by(2)
        .map(|m| Ok(PivotRow { m, entries: odd_pivot_row(m)? }))
        .collect::<Result<_>>()?;
    Ok((
        PivotTriangle { parity: PivotParity::Even, rows: even_rows },
        PivotTriangle { parity: PivotParity::Odd, rows: odd_rows },
    ))
}

/// Collects the pivots of the OSTP nodes of every layer into `(value, count)`
/// rows, split by generation parity.
pub fn harvest_pivots(layers: &[GenerationLayer]) -> (PivotTriangle, PivotTriangle) {
    let mut even_rows = Vec::new();
    let mut odd_rows = Vec::new();
    for layer in layers {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for node in &layer.nodes {
            if node.parity_class == ParityClass::Ostp {
                *counts.entry(node.pivot.unwrap() as u64).or_insert(0) += 1;
            }
        }
        let row = PivotRow { m: layer.m, entries: counts.into_iter().collect() };
        if layer.m % 2 == 0 {
            even_rows.push(row);
        } else {
            odd_rows.push(row);
        }
    }
    (
        PivotTriangle { parity: PivotParity::Even, rows: even_rows },
        PivotTriangle { parity: PivotParity::Odd, rows: odd_rows },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genealogy::build_tree;

    #[test]
    fn even_values() {
        assert_eq!(even_pivot_value(4, 3).unwrap(), 7);
        assert_eq!(even_pivot_value(0, 1).unwrap(), 3);
        assert_eq!(even_pivot_value(8, 4).unwrap(), 7);
        assert!(even_pivot_value(4, 4).is_err());
        assert!(even_pivot_value(3, 1).is_err());
    }

    #[test]
    fn even_reps() {
        assert_eq!(even_pivot_reps(10, 1).unwrap(), 16);
        assert_eq!(even_pivot_reps(6, 4).unwrap(), 1);
        assert_eq!(even_pivot_reps(12, 3).unwrap(), 8);
    }

    #[test]
    fn even_rows_match_paper_tables() {
        assert_eq!(even_pivot_row(0).unwrap(), vec![(3, 1)]);
        assert_eq!(even_pivot_row(2).unwrap(), vec![(1, 1), (5, 1)]);
        assert_eq!(even_pivot_row(4).unwrap(), vec![(1, 2), (3, 1), (7, 1)]);
        assert_eq!(
            even_pivot_row(8).unwrap(),
            vec![(1, 8), (3, 4), (5, 2), (7, 1), (11, 1)]
        );
    }

    #[test]
    fn row_sums() {
        assert_eq!(pivot_sums(6).unwrap(), (18, 16, 24));
        assert_eq!(pivot_sums(0).unwrap(), (3, 1, 3));
        assert_eq!(pivot_sums(12).unwrap().1, 49);
    }

    #[test]
    fn odd_entries_match_paper_table() {
        assert_eq!(odd_pivot_entry(5, 1).unwrap(), (2, 2));
        assert_eq!(odd_pivot_entry(9, 5).unwrap(), (12, 1));
        assert_eq!(odd_pivot_entry(1, 1).unwrap(), (4, 1));
        assert_eq!(
            odd_pivot_row(5).unwrap(),
            vec![(2, 2), (4, 1), (8, 1)]
        );
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(5).unwrap(), 16);
        assert_eq!(psi(1).unwrap(), 4);
        assert_eq!(psi(9).unwrap(), 64);
    }

    #[test]
    fn harvest_matches_closed_forms() {
        let layers = build_tree(9).unwrap();
        let (even, odd) = harvest_pivots(&layers);
        let (even_closed, odd_closed) = closed_form_triangles(9).unwrap();
        assert_eq!(even, even_closed);
        assert_eq!(odd, odd_closed);
    }

    #[test]
    fn even_row_repetition_totals() {
        for m in (0..=12).step_by(2) {
            let total: u64 = even_pivot_row(m).unwrap().iter().map(|&(_, r)| r).sum();
            assert_eq!(total, 1 << (m / 2));
        }
    }
}

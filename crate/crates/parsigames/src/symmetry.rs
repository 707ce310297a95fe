//! The twin (dual) map and the bilateral-symmetry predicates.
//!
//! A game's twin reverses its free type vector; a game is self-twin when it
//! equals its twin, i.e. when its free representations are palindromes. The
//! 1-bit position law `I_t + I_{h+1-t} = n + 1` gives a third, equivalent
//! characterization, and the incidence-matrix transpose gives a fourth one
//! checkable by the brute-force oracle.

use crate::error::Result;
use crate::oracle;
use crate::representations::{FullBinaryRepr, FreeTypeRepr, Game};

/// Ordinal positions (1-based) of the 1-bits of a binary representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnesPositions {
    positions: Vec<usize>,
}

impl OnesPositions {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }
}

/// The twin game: free type vector reversed. An involution preserving `n`
/// and `h`.
pub fn twin(game: &Game) -> Game {
    let mut components = game.free_type().components().to_vec();
    components.reverse();
    Game::new(FreeTypeRepr::new(components).expect("reversal preserves free type validity"))
}

/// True iff the free type vector is a palindrome (equivalently, iff the free
/// binary vector is).
pub fn is_self_twin(game: &Game) -> bool {
    let components = game.free_type().components();
    components.iter().eq(components.iter().rev())
}

pub fn ones_positions(b: &FullBinaryRepr) -> OnesPositions {
    OnesPositions {
        positions: b
            .bits()
            .iter()
            .enumerate()
            .filter(|(_, &bit)| bit == 1)
            .map(|(i, _)| i + 1)
            .collect(),
    }
}

/// The position sum law: `I_t + I_{h+1-t} = n + 1` for every `t`. Coincides
/// with [`is_self_twin`] on the same game.
pub fn symmetry_positions_check(positions: &OnesPositions, n: usize) -> bool {
    let i = positions.positions();
    let h = i.len();
    (0..h).all(|t| i[t] + i[h - 1 - t] == n + 1)
}

/// Twins share their minimal winning quota.
pub fn twin_quota_check(game: &Game) -> bool {
    game.min_hom().quota == twin(game).min_hom().quota
}

/// Checks that the incidence matrix of `twin(g)` equals the transpose of the
/// incidence matrix of `g`, up to a row permutation composed with a column
/// permutation (players of equal weight are interchangeable and the minimal
/// winning set carries no intrinsic order).
pub fn twin_transpose_check(game: &Game) -> Result<bool> {
    twin_transpose_check_capped(game, oracle::DEFAULT_ORACLE_CAP)
}

pub fn twin_transpose_check_capped(game: &Game, cap: usize) -> Result<bool> {
    let twin_matrix = oracle::incidence_matrix_capped(&twin(game), cap)?;
    let transposed = transpose(&oracle::incidence_matrix_capped(game, cap)?);
    Ok(matrices_equivalent(&twin_matrix, &transposed))
}

fn transpose(matrix: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = matrix.len();
    (0..n).map(|i| (0..n).map(|j| matrix[j][i]).collect()).collect()
}

/// Decides equality of two square 0/1 matrices up to independent row and
/// column permutations. Columns are matched within equal column-sum classes;
/// within each class all assignments are searched, with the sorted row
/// multiset compared at each complete assignment.
fn matrices_equivalent(a: &[Vec<u8>], b: &[Vec<u8>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    let col_sum = |m: &[Vec<u8>], j: usize| m.iter().map(|row| row[j] as usize).sum::<usize>();
    let mut a_cols: Vec<usize> = (0..n).collect();
    let mut b_cols: Vec<usize> = (0..n).collect();
    a_cols.sort_by_key(|&j| col_sum(a, j));
    b_cols.sort_by_key(|&j| col_sum(b, j));
    let a_sums: Vec<usize> = a_cols.iter().map(|&j| col_sum(a, j)).collect();
    let b_sums: Vec<usize> = b_cols.iter().map(|&j| col_sum(b, j)).collect();
    if a_sums != b_sums {
        return false;
    }

    // Rows of `a` as bitmasks over the sorted column order; the target
    // multiset for the search below.
    let row_mask = |row: &[u8], cols: &[usize]| -> u32 {
        cols.iter()
            .enumerate()
            .fold(0u32, |mask, (slot, &j)| mask | ((row[j] as u32) << slot))
    };
    let mut a_rows: Vec<u32> = a.iter().map(|row| row_mask(row, &a_cols)).collect();
    a_rows.sort_unstable();

    // Assign b's columns (slot by slot, restricted to its column-sum class)
    // and compare row multisets at the leaves.
    fn search(
        slot: usize,
        n: usize,
        b: &[Vec<u8>],
        b_cols: &[usize],
        b_sums: &[usize],
        used: &mut Vec<bool>,
        assignment: &mut Vec<usize>,
        a_rows: &[u32],
    ) -> bool {
        if slot == n {
            let mut b_rows: Vec<u32> = b
                .iter()
                .map(|row| {
                    assignment
                        .iter()
                        .enumerate()
                        .fold(0u32, |mask, (s, &j)| mask | ((row[j] as u32) << s))
                })
                .collect();
            b_rows.sort_unstable();
            return b_rows == a_rows;
        }
        for idx in 0..n {
            if used[idx] || b_sums[idx] != b_sums[slot] {
                continue;
            }
            // b_sums is sorted, so candidates for this slot share its sum.
            used[idx] = true;
            assignment.push(b_cols[idx]);
            if search(slot + 1, n, b, b_cols, b_sums, used, assignment, a_rows) {
                return true;
            }
            assignment.pop();
            used[idx] = false;
        }
        false
    }

    let mut used = vec![false; n];
    let mut assignment = Vec::with_capacity(n);
    search(0, n, b, &b_cols, &b_sums, &mut used, &mut assignment, &a_rows)
}

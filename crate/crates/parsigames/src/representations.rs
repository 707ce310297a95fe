//! The three equivalent descriptions of a parsimonious game and the exact
//! conversions among them.
//!
//! A game on `n` players is identified by any one of:
//!
//! * its free binary representation, the `n - 4` unconstrained interior bits
//!   of the weight-increase indicator vector;
//! * its free type representation `(x_1, ..., x_{h-1})`, the player counts of
//!   the first `h - 1` weight types (the top type always has one player);
//! * its minimal homogeneous representation `(q; w_1, ..., w_n)`.
//!
//! Indexing follows the 1-based convention of the domain in documentation;
//! storage is 0-based and the shift is confined to this module.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symmetry;

/// The `n - 4` free interior bits of a binary representation. May be empty
/// (the unique game on 4 players).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeBinaryRepr {
    bits: Vec<u8>,
}

impl FreeBinaryRepr {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Malformed(format!("free binary bit {b} is not 0/1")));
        }
        Ok(Self { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

/// A full `n`-bit binary representation, `n >= 4`, with the four forced bits
/// `b_1 = 1, b_2 = 0, b_{n-1} = 0, b_n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullBinaryRepr {
    bits: Vec<u8>,
}

impl FullBinaryRepr {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        let n = bits.len();
        if n < 4 {
            return Err(Error::Malformed(format!(
                "binary representation has length {n}, need at least 4"
            )));
        }
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Malformed(format!("binary bit {b} is not 0/1")));
        }
        if bits[0] != 1 || bits[1] != 0 || bits[n - 2] != 0 || bits[n - 1] != 1 {
            return Err(Error::Malformed(
                "fixed bits must be b_1=1, b_2=0, b_{n-1}=0, b_n=1".into(),
            ));
        }
        Ok(Self { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Number of players.
    pub fn n(&self) -> usize {
        self.bits.len()
    }

    /// Number of types, i.e. the count of 1-bits.
    pub fn h(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }
}

/// The free type representation `(x_1, ..., x_{h-1})`: player counts per
/// weight type, with the forced final count `x_h = 1` dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeTypeRepr {
    components: Vec<u32>,
}

impl FreeTypeRepr {
    pub fn new(components: Vec<u32>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Malformed("free type vector must be non-empty".into()));
        }
        if components.iter().any(|&x| x == 0) {
            return Err(Error::Malformed("free type components must be >= 1".into()));
        }
        let first = components[0];
        let last = *components.last().unwrap();
        if components.len() == 1 {
            // h = 2: the single component is x_1 = n - 1 >= 3.
            if first < 3 {
                return Err(Error::Malformed(format!(
                    "single free type component must be >= 3, got {first}"
                )));
            }
        } else if first < 2 || last < 2 {
            return Err(Error::Malformed(
                "free type requires x_1 >= 2 and x_{h-1} >= 2".into(),
            ));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[u32] {
        &self.components
    }

    /// Number of types `h` (one more than the free component count).
    pub fn h(&self) -> usize {
        self.components.len() + 1
    }

    /// Number of players `n = 1 + sum of free components`.
    pub fn n(&self) -> usize {
        1 + self.components.iter().map(|&x| x as usize).sum::<usize>()
    }

    /// The complete type vector, with the implied `x_h = 1` appended.
    pub fn full_components(&self) -> Vec<u32> {
        let mut full = self.components.clone();
        full.push(1);
        full
    }
}

/// Minimal homogeneous representation `(q; w)`: exact quota plus ordered
/// non-decreasing exact weights with `w_1 = 1` and `q = (1 + sum w) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinHomRepr {
    pub quota: BigUint,
    pub weights: Vec<BigUint>,
}

impl MinHomRepr {
    /// Builds a representation from raw parts, checking the structural
    /// invariants (`w_1 = 1`, non-decreasing, odd total, quota formula).
    pub fn new(quota: BigUint, weights: Vec<BigUint>) -> Result<Self> {
        if weights.is_empty() || !weights[0].is_one() {
            return Err(Error::Malformed("weights must start with w_1 = 1".into()));
        }
        if weights.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Malformed("weights must be non-decreasing".into()));
        }
        let total: BigUint = weights.iter().sum();
        if (&total % 2u8).is_zero() {
            return Err(Error::Malformed("weight total must be odd".into()));
        }
        if quota != (&total + 1u8) / 2u8 {
            return Err(Error::Malformed(
                "quota must equal (1 + sum of weights) / 2".into(),
            ));
        }
        Ok(Self { quota, weights })
    }

    /// Builds a representation without invariant checks, for hand-crafted
    /// non-parsimonious inputs fed to the oracle.
    pub fn from_raw_u64(quota: u64, weights: &[u64]) -> Self {
        Self {
            quota: BigUint::from(quota),
            weights: weights.iter().map(|&w| BigUint::from(w)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }
}

/// A parsimonious game, canonically identified by its free type vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Game {
    free_type: FreeTypeRepr,
}

impl Game {
    pub fn new(free_type: FreeTypeRepr) -> Self {
        Self { free_type }
    }

    pub fn from_free_binary(fb: &FreeBinaryRepr) -> Self {
        Self::new(binary_to_type(&lift_free_binary(fb)))
    }

    pub fn free_type(&self) -> &FreeTypeRepr {
        &self.free_type
    }

    pub fn n(&self) -> usize {
        self.free_type.n()
    }

    pub fn h(&self) -> usize {
        self.free_type.h()
    }

    pub fn m(&self) -> usize {
        self.n() - 4
    }

    pub fn k(&self) -> usize {
        self.h() - 2
    }

    pub fn full_binary(&self) -> FullBinaryRepr {
        type_to_binary(&self.free_type)
    }

    pub fn free_binary(&self) -> Result<FreeBinaryRepr> {
        drop_to_free(&self.full_binary())
    }

    pub fn min_hom(&self) -> MinHomRepr {
        type_to_weights(&self.free_type)
    }
}

/// Pads a free binary vector with the four forced bits: `[1,0] ++ fb ++ [0,1]`.
pub fn lift_free_binary(fb: &FreeBinaryRepr) -> FullBinaryRepr {
    let mut bits = Vec::with_capacity(fb.len() + 4);
    bits.push(1);
    bits.push(0);
    bits.extend_from_slice(fb.bits());
    bits.push(0);
    bits.push(1);
    FullBinaryRepr::new(bits).expect("padded vector satisfies the fixed-bit constraints")
}

/// Strips the four forced bits; exact inverse of [`lift_free_binary`].
pub fn drop_to_free(b: &FullBinaryRepr) -> Result<FreeBinaryRepr> {
    let bits = b.bits();
    FreeBinaryRepr::new(bits[2..bits.len() - 2].to_vec())
}

/// Converts a binary representation to the free type vector via the 1-bit
/// positions: `x_t = I_{t+1} - I_t`, dropping the implied `x_h = 1`.
pub fn binary_to_type(b: &FullBinaryRepr) -> FreeTypeRepr {
    let positions = symmetry::ones_positions(b);
    let i = positions.positions();
    let components: Vec<u32> = i.windows(2).map(|w| (w[1] - w[0]) as u32).collect();
    FreeTypeRepr::new(components).expect("1-bit gaps of a valid binary vector form a valid free type")
}

/// Converts a free type vector back to binary: bit 1 at every position
/// `I_t = 1 + x_1 + ... + x_{t-1}` plus the final `I_h = n`.
pub fn type_to_binary(x: &FreeTypeRepr) -> FullBinaryRepr {
    let n = x.n();
    let mut bits = vec![0u8; n];
    let mut pos = 1usize;
    bits[pos - 1] = 1;
    for &c in x.components() {
        pos += c as usize;
        bits[pos - 1] = 1;
    }
    debug_assert_eq!(pos, n);
    FullBinaryRepr::new(bits).expect("positions derived from a valid free type are well formed")
}

/// Computes the minimal homogeneous representation by the type-weight
/// recursion `w_t = x_{t-1} w_{t-1} + w_{t-2}`, with the top type using
/// `w_h = (x_{h-1} - 1) w_{h-1} + w_{h-2}`. All arithmetic is unbounded.
pub fn type_to_weights(x: &FreeTypeRepr) -> MinHomRepr {
    let full = x.full_components();
    let h = full.len();
    let mut type_weights: Vec<BigUint> = Vec::with_capacity(h);
    let mut prev2 = BigUint::zero(); // w_0
    let mut prev1 = BigUint::one(); // w_1
    type_weights.push(prev1.clone());
    for t in 2..=h {
        let multiplier = if t == h { full[t - 2] - 1 } else { full[t - 2] };
        let w = BigUint::from(multiplier) * &prev1 + &prev2;
        type_weights.push(w.clone());
        prev2 = prev1;
        prev1 = w;
    }
    let mut weights = Vec::with_capacity(x.n());
    for (t, count) in full.iter().enumerate() {
        for _ in 0..*count {
            weights.push(type_weights[t].clone());
        }
    }
    let total: BigUint = weights.iter().sum();
    let quota = (total + 1u8) / 2u8;
    MinHomRepr { quota, weights }
}

/// Yields every free binary vector of length `n - 4` exactly once, in
/// lexicographic order. The order is a contract for reproducible output.
pub fn enumerate_free_binaries(n: usize) -> Result<impl Iterator<Item = FreeBinaryRepr>> {
    if n < 4 {
        return Err(Error::Domain(format!("need n >= 4, got {n}")));
    }
    let m = n - 4;
    if m >= 32 {
        return Err(Error::Domain(format!("enumeration of 2^{m} games refused")));
    }
    Ok((0u64..1 << m).map(move |i| {
        let bits = (0..m).map(|j| ((i >> (m - 1 - j)) & 1) as u8).collect();
        FreeBinaryRepr::new(bits).unwrap()
    }))
}

/// Yields every game on `n` players, in free-binary lexicographic order.
pub fn enumerate_games(n: usize) -> Result<impl Iterator<Item = Game>> {
    Ok(enumerate_free_binaries(n)?.map(|fb| Game::from_free_binary(&fb)))
}

/// The wire form of a game, shared by every CLI verb and golden file.
/// Quota and weights travel as decimal strings to accommodate unbounded
/// integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameJson {
    pub n: usize,
    pub h: usize,
    pub free_type: Vec<u32>,
    pub free_binary: Vec<u8>,
    pub quota: String,
    pub weights: Vec<String>,
    pub self_twin: bool,
}

impl GameJson {
    pub fn from_game(game: &Game) -> Self {
        let min_hom = game.min_hom();
        Self {
            n: game.n(),
            h: game.h(),
            free_type: game.free_type().components().to_vec(),
            free_binary: game
                .free_binary()
                .expect("a generated game has a valid free binary form")
                .bits()
                .to_vec(),
            quota: min_hom.quota.to_string(),
            weights: min_hom.weights.iter().map(|w| w.to_string()).collect(),
            self_twin: symmetry::is_self_twin(game),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ft(components: &[u32]) -> FreeTypeRepr {
        FreeTypeRepr::new(components.to_vec()).unwrap()
    }

    fn fb(bits: &[u8]) -> FreeBinaryRepr {
        FreeBinaryRepr::new(bits.to_vec()).unwrap()
    }

    #[test]
    fn lift_pads_the_four_fixed_bits() {
        assert_eq!(lift_free_binary(&fb(&[])).bits(), &[1, 0, 0, 1]);
        assert_eq!(
            lift_free_binary(&fb(&[1, 0, 1, 1, 0])).bits(),
            &[1, 0, 1, 0, 1, 1, 0, 0, 1]
        );
        // All free bits set: the 10-player Fibonacci game.
        assert_eq!(
            lift_free_binary(&fb(&[1, 1, 1, 1, 1, 1])).bits(),
            &[1, 0, 1, 1, 1, 1, 1, 1, 0, 1]
        );
    }

    #[test]
    fn drop_to_free_inverts_lift() {
        assert_eq!(
            drop_to_free(&FullBinaryRepr::new(vec![1, 0, 0, 1]).unwrap()).unwrap(),
            fb(&[])
        );
        assert_eq!(
            drop_to_free(&FullBinaryRepr::new(vec![1, 0, 1, 0, 1, 1, 0, 1, 0, 1]).unwrap())
                .unwrap(),
            fb(&[1, 0, 1, 1, 0, 1])
        );
    }

    #[test]
    fn malformed_fixed_bits_rejected() {
        assert!(matches!(
            FullBinaryRepr::new(vec![1, 1, 0, 1]),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            FullBinaryRepr::new(vec![1, 0, 1]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn binary_to_type_matches_known_games() {
        let b = FullBinaryRepr::new(vec![1, 0, 1, 0, 1, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!(binary_to_type(&b), ft(&[2, 2, 1, 2, 2]));

        let b = FullBinaryRepr::new(vec![1, 0, 0, 1]).unwrap();
        assert_eq!(binary_to_type(&b), ft(&[3]));

        let b = FullBinaryRepr::new(vec![1, 0, 1, 0, 1, 1, 0, 0, 1]).unwrap();
        assert_eq!(binary_to_type(&b), ft(&[2, 2, 1, 3]));
    }

    #[test]
    fn type_to_binary_matches_known_games() {
        assert_eq!(type_to_binary(&ft(&[3])).bits(), &[1, 0, 0, 1]);
        assert_eq!(
            type_to_binary(&ft(&[2, 2, 1, 2, 2])).bits(),
            &[1, 0, 1, 0, 1, 1, 0, 1, 0, 1]
        );
        assert_eq!(
            type_to_binary(&ft(&[2, 2, 1, 3])).bits(),
            &[1, 0, 1, 0, 1, 1, 0, 0, 1]
        );
    }

    fn weights_of(components: &[u32]) -> (u64, Vec<u64>) {
        let r = type_to_weights(&ft(components));
        (
            r.quota.to_string().parse().unwrap(),
            r.weights.iter().map(|w| w.to_string().parse().unwrap()).collect(),
        )
    }

    #[test]
    fn weight_recursion_matches_known_games() {
        assert_eq!(
            weights_of(&[2, 2, 1, 3]),
            (26, vec![1, 1, 2, 2, 5, 7, 7, 7, 19])
        );
        assert_eq!(weights_of(&[7]), (7, vec![1, 1, 1, 1, 1, 1, 1, 6]));
        assert_eq!(
            weights_of(&[2, 1, 1, 1, 1, 1, 2]),
            (55, vec![1, 1, 2, 3, 5, 8, 13, 21, 21, 34])
        );
        assert_eq!(weights_of(&[3]), (3, vec![1, 1, 1, 2]));
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_free_binaries(4).unwrap().count(), 1);
        assert_eq!(enumerate_free_binaries(6).unwrap().count(), 4);
        assert_eq!(enumerate_free_binaries(9).unwrap().count(), 32);
        assert!(enumerate_free_binaries(3).is_err());

        let all: Vec<_> = enumerate_free_binaries(6).unwrap().collect();
        assert_eq!(
            all,
            vec![fb(&[0, 0]), fb(&[0, 1]), fb(&[1, 0]), fb(&[1, 1])]
        );
    }

    #[test]
    fn free_type_validation() {
        assert!(FreeTypeRepr::new(vec![]).is_err());
        assert!(FreeTypeRepr::new(vec![2]).is_err());
        assert!(FreeTypeRepr::new(vec![1, 2]).is_err());
        assert!(FreeTypeRepr::new(vec![2, 1]).is_err());
        assert!(FreeTypeRepr::new(vec![2, 0, 2]).is_err());
        assert!(FreeTypeRepr::new(vec![3]).is_ok());
        assert!(FreeTypeRepr::new(vec![2, 1, 2]).is_ok());
    }

    #[test]
    fn game_json_matches_wire_format() {
        let game = Game::new(ft(&[2, 2, 1, 3]));
        let json = serde_json::to_string(&GameJson::from_game(&game)).unwrap();
        assert_eq!(
            json,
            r#"{"n":9,"h":5,"free_type":[2,2,1,3],"free_binary":[1,0,1,1,0],"quota":"26","weights":["1","1","2","2","5","7","7","7","19"],"self_twin":false}"#
        );
    }
}

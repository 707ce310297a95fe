//! The genealogical tree of self-twin games.
//!
//! Generation `m` holds the self-twin games on `n = m + 4` players. Even
//! generations contain only games with an odd number of free type components
//! (OSTP), each carrying an odd central pivot; odd generations are half OSTP
//! (even pivots) and half ESTP. Breeding:
//!
//! * even parent (odd pivot `p`): first child bumps the pivot to `p + 1`,
//!   second child splits that even pivot into two halves `(p+1)/2, (p+1)/2`;
//! * odd OSTP parent (even pivot `p`): single child bumps the pivot to `p + 1`;
//! * odd ESTP parent: single child inserts a new central component 1.
//!
//! All bred vectors are palindromes by construction; the self-twin predicate
//! stays out of the construction path so it can serve as an independent check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::representations::{FreeTypeRepr, Game};

/// Parity of the free type component count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParityClass {
    #[serde(rename = "OSTP")]
    Ostp,
    #[serde(rename = "ESTP")]
    Estp,
}

#[derive(Debug, Clone)]
pub struct TreeNode {
    pub game: Game,
    pub generation: usize,
    pub parity_class: ParityClass,
    /// Central component; present iff the node is OSTP.
    pub pivot: Option<u32>,
    /// Index of the parent within the previous layer.
    pub parent: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct GenerationLayer {
    pub m: usize,
    pub nodes: Vec<TreeNode>,
}

fn parity_of(game: &Game) -> ParityClass {
    if game.free_type().components().len() % 2 == 1 {
        ParityClass::Ostp
    } else {
        ParityClass::Estp
    }
}

fn node_for(game: Game, generation: usize, parent: Option<usize>) -> TreeNode {
    let parity_class = parity_of(&game);
    let pivot = match parity_class {
        ParityClass::Ostp => Some(pivot_of(&game).expect("OSTP game has a pivot")),
        ParityClass::Estp => None,
    };
    TreeNode { game, generation, parity_class, pivot, parent }
}

/// The root: the four-player game with free type vector `(3)`.
pub fn seed() -> TreeNode {
    let game = Game::new(FreeTypeRepr::new(vec![3]).unwrap());
    node_for(game, 0, None)
}

/// The central component of an odd-length free type vector.
pub fn pivot_of(game: &Game) -> Result<u32> {
    let components = game.free_type().components();
    if components.len() % 2 == 0 {
        return Err(Error::Parity(format!(
            "pivot undefined for even-length free type vector {components:?}"
        )));
    }
    Ok(components[components.len() / 2])
}

fn game_with_center(components: &[u32], center: &[u32]) -> Game {
    let mid = components.len() / 2;
    let mut child: Vec<u32> = components[..mid].to_vec();
    child.extend_from_slice(center);
    child.extend_from_slice(&components[mid + 1..]);
    Game::new(FreeTypeRepr::new(child).expect("bred vector is a valid free type"))
}

/// Breeds the two children of an even-generation parent.
pub fn breed_even(parent: &TreeNode, parent_index: usize) -> Result<(TreeNode, TreeNode)> {
    if parent.generation % 2 != 0 {
        return Err(Error::Parity(format!(
            "breed_even called on generation {}",
            parent.generation
        )));
    }
    let pivot = parent.pivot.ok_or_else(|| {
        Error::Parity("even-generation parent must be OSTP".into())
    })?;
    if pivot % 2 == 0 {
        return Err(Error::Invariant(format!(
            "even-generation pivot {pivot} should be odd"
        )));
    }
    let components = parent.game.free_type().components();
    let bumped = pivot + 1;
    let first = game_with_center(components, &[bumped]);
    let second = game_with_center(components, &[bumped / 2, bumped / 2]);
    let m = parent.generation + 1;
    Ok((
        node_for(first, m, Some(parent_index)),
        node_for(second, m, Some(parent_index)),
    ))
}

/// Breeds the single child of an odd-generation parent.
pub fn breed_odd(parent: &TreeNode, parent_index: usize) -> Result<TreeNode> {
    if parent.generation % 2 != 1 {
        return Err(Error::Parity(format!(
            "breed_odd called on generation {}",
            parent.generation
        )));
    }
    let components = parent.game.free_type().components();
    let child = match parent.parity_class {
        ParityClass::Ostp => {
            let pivot = parent.pivot.expect("OSTP node carries a pivot");
            if pivot % 2 != 0 {
                return Err(Error::Invariant(format!(
                    "odd-generation pivot {pivot} should be even"
                )));
            }
            game_with_center(components, &[pivot + 1])
        }
        ParityClass::Estp => {
            let mid = components.len() / 2;
            let mut bred: Vec<u32> = components[..mid].to_vec();
            bred.push(1);
            bred.extend_from_slice(&components[mid..]);
            Game::new(FreeTypeRepr::new(bred).expect("bred vector is a valid free type"))
        }
    };
    Ok(node_for(child, parent.generation + 1, Some(parent_index)))
}

/// Materializes layers 0..=max_m. Within a layer, children appear in parent
/// order, pivot-bump child before split child.
pub fn build_tree(max_m: usize) -> Result<Vec<GenerationLayer>> {
    let mut layers = vec![GenerationLayer { m: 0, nodes: vec![seed()] }];
    for m in 0..max_m {
        let mut nodes = Vec::new();
        let parents = &layers[m].nodes;
        if m % 2 == 0 {
            for (i, parent) in parents.iter().enumerate() {
                let (first, second) = breed_even(parent, i)?;
                nodes.push(first);
                nodes.push(second);
            }
        } else {
            for (i, parent) in parents.iter().enumerate() {
                nodes.push(breed_odd(parent, i)?);
            }
        }
        layers.push(GenerationLayer { m: m + 1, nodes });
    }
    Ok(layers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::gamma_total;
    use crate::symmetry::is_self_twin;

    fn game(components: &[u32]) -> Game {
        Game::new(FreeTypeRepr::new(components.to_vec()).unwrap())
    }

    fn free_types(layer: &GenerationLayer) -> Vec<Vec<u32>> {
        layer
            .nodes
            .iter()
            .map(|node| node.game.free_type().components().to_vec())
            .collect()
    }

    #[test]
    fn seed_is_adamo() {
        let root = seed();
        assert_eq!(root.game, game(&[3]));
        assert_eq!(root.game.n(), 4);
        assert_eq!(root.pivot, Some(3));
        assert!(is_self_twin(&root.game));
        let r = root.game.min_hom();
        assert_eq!(r.quota, 3u32.into());
    }

    #[test]
    fn pivot_extraction() {
        assert_eq!(pivot_of(&game(&[2, 3, 2])).unwrap(), 3);
        assert_eq!(pivot_of(&game(&[3])).unwrap(), 3);
        assert!(matches!(pivot_of(&game(&[2, 2])), Err(Error::Parity(_))));
    }

    #[test]
    fn even_breeding() {
        let (c1, c2) = breed_even(&seed(), 0).unwrap();
        assert_eq!(c1.game, game(&[4]));
        assert_eq!(c2.game, game(&[2, 2]));
        assert_eq!(c1.parity_class, ParityClass::Ostp);
        assert_eq!(c2.parity_class, ParityClass::Estp);

        let parent = node_for(game(&[5]), 2, None);
        let (c1, c2) = breed_even(&parent, 0).unwrap();
        assert_eq!(c1.game, game(&[6]));
        assert_eq!(c2.game, game(&[3, 3]));

        let parent = node_for(game(&[2, 1, 2]), 2, None);
        let (c1, c2) = breed_even(&parent, 0).unwrap();
        assert_eq!(c1.game, game(&[2, 2, 2]));
        assert_eq!(c2.game, game(&[2, 1, 1, 2]));
    }

    #[test]
    fn odd_breeding() {
        let parent = node_for(game(&[4]), 1, None);
        assert_eq!(breed_odd(&parent, 0).unwrap().game, game(&[5]));

        let parent = node_for(game(&[2, 2]), 1, None);
        assert_eq!(breed_odd(&parent, 0).unwrap().game, game(&[2, 1, 2]));

        let parent = node_for(game(&[3, 3]), 3, None);
        assert_eq!(breed_odd(&parent, 0).unwrap().game, game(&[3, 1, 3]));
    }

    #[test]
    fn breeding_parity_guards() {
        assert!(breed_odd(&seed(), 0).is_err());
        let odd_parent = node_for(game(&[4]), 1, None);
        assert!(breed_even(&odd_parent, 0).is_err());
    }

    #[test]
    fn layer_sizes_follow_gamma() {
        let layers = build_tree(5).unwrap();
        let sizes: Vec<usize> = layers.iter().map(|l| l.nodes.len()).collect();
        assert_eq!(sizes, vec![1, 2, 2, 4, 4, 8]);
        for layer in &layers {
            assert_eq!(layer.nodes.len() as u64, gamma_total(layer.m));
        }
    }

    #[test]
    fn known_layers() {
        let layers = build_tree(5).unwrap();
        let mut layer4 = free_types(&layers[4]);
        layer4.sort();
        assert_eq!(
            layer4,
            vec![vec![2, 1, 1, 1, 2], vec![2, 3, 2], vec![3, 1, 3], vec![7]]
        );
        let mut layer5 = free_types(&layers[5]);
        layer5.sort();
        assert_eq!(
            layer5,
            vec![
                vec![2, 1, 1, 1, 1, 2],
                vec![2, 1, 2, 1, 2],
                vec![2, 2, 2, 2],
                vec![2, 4, 2],
                vec![3, 1, 1, 3],
                vec![3, 2, 3],
                vec![4, 4],
                vec![8],
            ]
        );
    }

    #[test]
    fn child_n_increments_by_one() {
        let layers = build_tree(8).unwrap();
        for layer in &layers[1..] {
            for node in &layer.nodes {
                assert_eq!(node.game.n(), layer.m + 4);
                let parent = &layers[layer.m - 1].nodes[node.parent.unwrap()];
                assert_eq!(node.game.n(), parent.game.n() + 1);
            }
        }
    }
}

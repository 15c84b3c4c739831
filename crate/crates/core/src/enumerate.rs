//! Exhaustive enumeration of small trees by canonical insertion.

use std::collections::HashSet;
use std::hash::Hash;

use crate::level1::Level1Tree;
use crate::level2::{Level2Tree, LevelLe2Tree, PartialLevel1Tree};
use crate::level3::PartialLevelLe2Tree;

/// Breadth-first closure; each layer keeps first-seen order.
fn grow<T: Clone + Eq + Hash>(
    start: T,
    n: usize,
    step: impl Fn(&T) -> Vec<T>,
) -> Vec<Vec<T>> {
    let mut layers = vec![vec![start]];
    for _ in 0..n {
        let mut seen = HashSet::new();
        let next: Vec<T> = layers
            .last()
            .unwrap()
            .iter()
            .flat_map(&step)
            .filter(|t| seen.insert(t.clone()))
            .collect();
        layers.push(next);
    }
    layers
}

/// `layers[k]` holds every level-1 tree with `k` nodes, `k ≤ n`.
pub fn level1_layers(n: usize) -> Vec<Vec<Level1Tree>> {
    grow(Level1Tree::empty(), n, |p| {
        p.addable_nodes()
            .into_iter()
            .map(|a| p.insert(a).unwrap())
            .collect()
    })
}

/// Every level-1 tree with at most `n` nodes, by size.
pub fn level1_trees(n: usize) -> Vec<Level1Tree> {
    level1_layers(n).into_iter().flatten().collect()
}

/// One-key extensions of a level-2 tree.
pub fn level2_extensions(q: &Level2Tree) -> Vec<Level2Tree> {
    let mut out = Vec::new();
    for (parent, pt) in q.entries() {
        let Ok(done) = pt.completion() else { continue };
        for a in q.children(parent).addable_nodes() {
            for label in PartialLevel1Tree::all_on(&done) {
                if let Ok(next) = q.extend(parent.push(a.clone()), label) {
                    out.push(next);
                }
            }
        }
    }
    out
}

/// `layers[k]` holds every level-2 tree with `k + 1` keys.
pub fn level2_layers(n: usize) -> Vec<Vec<Level2Tree>> {
    if n == 0 {
        return Vec::new();
    }
    grow(Level2Tree::root(), n - 1, level2_extensions)
}

/// Every level ≤2 tree with at most `n` domain nodes.
pub fn level_le2_trees(n: usize) -> Vec<LevelLe2Tree> {
    let l1 = level1_layers(n);
    let l2 = level2_layers(n);
    let mut out = Vec::new();
    for total in 1..=n {
        for a in 0..total {
            for t1 in &l1[a] {
                for t2 in &l2[total - a - 1] {
                    out.push(LevelLe2Tree::new(t1.clone(), t2.clone()));
                }
            }
        }
    }
    out
}

/// Every partial level ≤2 tree on a base with at most `n` domain nodes.
pub fn partial_le2_trees(n: usize) -> Vec<PartialLevelLe2Tree> {
    level_le2_trees(n)
        .iter()
        .flat_map(PartialLevelLe2Tree::all_on)
        .collect()
}

/// Every partial level ≤1 tree `(P, t)` with `card(P) ≤ n`.
pub fn partial_le1_trees(n: usize) -> Vec<PartialLevel1Tree> {
    level1_trees(n)
        .iter()
        .filter(|p| p.is_regular())
        .flat_map(PartialLevel1Tree::all_on)
        .collect()
}

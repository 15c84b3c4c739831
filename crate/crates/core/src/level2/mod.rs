//! Level-2 trees, their descriptions and representations.

mod partial;
mod rep;
mod respect;
mod tree;

pub use partial::{completion_le1, PartialLevel1Tree, PartialTower1, PotentialTower, TowerType};
pub use rep::{rep2_compare, rep2_sequence, respects_partial, Rep2Element, Slot};
pub use respect::{
    evaluate_description, level2_trees_on, recover_tree, respects_le2, s2_member,
    weakly_respects_le2, witness_representable, witness_tuple, DomainShape, Level2Tower,
    OrdTuple2, S2Variant, Verdict,
};
pub use tree::{
    check_tree_of_trees, typical_trees, DescKind, Description, DomKey, Level2Tree, LevelLe2Tree,
    QDesc,
};

//! Partial level ≤1 trees `(P, t)`, partial towers and their compressed
//! "potential" form `(P_*, p⃗)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::level1::Level1Tree;
use crate::node::{ExtNode, Node};

/// `(P, t)`: a finite regular level-1 tree with one pending node, or `-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialLevel1Tree {
    base: Level1Tree,
    node: ExtNode,
}

impl PartialLevel1Tree {
    pub fn new(base: Level1Tree, node: ExtNode) -> Result<Self> {
        if !base.is_regular() {
            return Err(Error::BadPartialTree(format!("{base} is not regular")));
        }
        match &node {
            ExtNode::Minus => {
                if base.is_empty() {
                    return Err(Error::BadPartialTree("(∅, -1) is not allowed".into()));
                }
            }
            ExtNode::Node(t) => {
                if base.contains(t) {
                    return Err(Error::BadPartialTree(format!("{t} is already in {base}")));
                }
                let done = base
                    .insert(t.clone())
                    .map_err(|e| Error::BadPartialTree(e.to_string()))?;
                if !done.is_regular() {
                    return Err(Error::BadPartialTree(format!("{done} is not regular")));
                }
            }
        }
        Ok(PartialLevel1Tree { base, node })
    }

    /// `(∅, (0))`, the unique one of cardinality 1.
    pub fn root() -> Self {
        PartialLevel1Tree {
            base: Level1Tree::empty(),
            node: ExtNode::Node(Node::from([0])),
        }
    }

    pub fn base(&self) -> &Level1Tree {
        &self.base
    }

    pub fn node(&self) -> &ExtNode {
        &self.node
    }

    pub fn degree(&self) -> u8 {
        if self.node.is_minus() {
            0
        } else {
            1
        }
    }

    pub fn card(&self) -> usize {
        self.base.card() + 1
    }

    pub fn completion(&self) -> Result<Level1Tree> {
        match &self.node {
            ExtNode::Minus => Err(Error::DegreeZeroHasNoCompletion),
            ExtNode::Node(t) => self.base.insert(t.clone()),
        }
    }

    /// Every partial tree on `base`: one per regular addable node, then `-1`.
    pub fn all_on(base: &Level1Tree) -> Vec<PartialLevel1Tree> {
        let mut out: Vec<PartialLevel1Tree> = base
            .addable_nodes()
            .into_iter()
            .filter_map(|t| PartialLevel1Tree::new(base.clone(), ExtNode::Node(t)).ok())
            .collect();
        if let Ok(p) = PartialLevel1Tree::new(base.clone(), ExtNode::Minus) {
            out.push(p);
        }
        out
    }
}

impl fmt::Display for PartialLevel1Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base, self.node)
    }
}

impl fmt::Debug for PartialLevel1Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn completion_le1(pt: &PartialLevel1Tree) -> Result<Level1Tree> {
    pt.completion()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TowerType {
    Discontinuous,
    Continuous,
}

/// A partial level ≤1 tower, discontinuous `(P_i, p_i)_{i ≤ k}` or
/// continuous `(P_i, p_i)_{i < k} ⧺ (P_*)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartialTower1 {
    entries: Vec<PartialLevel1Tree>,
    top: Option<Level1Tree>,
}

impl PartialTower1 {
    pub fn discontinuous(entries: Vec<PartialLevel1Tree>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::BadFirstEntry);
        }
        check_chain(&entries)?;
        Ok(PartialTower1 { entries, top: None })
    }

    pub fn continuous(entries: Vec<PartialLevel1Tree>, top: Level1Tree) -> Result<Self> {
        if entries.is_empty() {
            if !top.is_empty() {
                return Err(Error::NotCompletionAt(0));
            }
        } else {
            check_chain(&entries)?;
            let last = entries.last().unwrap().completion();
            if last.as_ref() != Ok(&top) {
                return Err(Error::NotCompletionAt(entries.len()));
            }
        }
        Ok(PartialTower1 {
            entries,
            top: Some(top),
        })
    }

    pub fn entries(&self) -> &[PartialLevel1Tree] {
        &self.entries
    }

    pub fn tower_type(&self) -> TowerType {
        if self.top.is_some() {
            TowerType::Continuous
        } else {
            TowerType::Discontinuous
        }
    }

    pub fn compress(&self) -> PotentialTower {
        let nodes = self.entries.iter().map(|e| e.node().clone()).collect();
        let tree = match &self.top {
            Some(t) => t.clone(),
            None => self.entries.last().unwrap().base().clone(),
        };
        PotentialTower { tree, nodes }
    }
}

fn check_chain(entries: &[PartialLevel1Tree]) -> Result<()> {
    if entries[0] != PartialLevel1Tree::root() {
        return Err(Error::BadFirstEntry);
    }
    for i in 1..entries.len() {
        let prev = entries[i - 1]
            .completion()
            .map_err(|_| Error::NotCompletionAt(i))?;
        if &prev != entries[i].base() {
            return Err(Error::NotCompletionAt(i));
        }
    }
    Ok(())
}

/// `(P_*, p⃗)`: continuous iff `card(P_*) = lh(p⃗)`, discontinuous iff
/// `card(P_*) = lh(p⃗) − 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PotentialTower {
    tree: Level1Tree,
    nodes: Vec<ExtNode>,
}

impl PotentialTower {
    /// Builds and validates by expanding into the full tower.
    pub fn new(tree: Level1Tree, nodes: Vec<ExtNode>) -> Result<Self> {
        let pt = PotentialTower { tree, nodes };
        pt.expand()?;
        Ok(pt)
    }

    pub(crate) fn new_unchecked(tree: Level1Tree, nodes: Vec<ExtNode>) -> Self {
        PotentialTower { tree, nodes }
    }

    pub fn tree(&self) -> &Level1Tree {
        &self.tree
    }

    pub fn nodes(&self) -> &[ExtNode] {
        &self.nodes
    }

    pub fn tower_type(&self) -> Option<TowerType> {
        let (c, l) = (self.tree.card(), self.nodes.len());
        if c == l {
            Some(TowerType::Continuous)
        } else if c + 1 == l {
            Some(TowerType::Discontinuous)
        } else {
            None
        }
    }

    pub fn is_continuous(&self) -> bool {
        self.tower_type() == Some(TowerType::Continuous)
    }

    pub fn expand(&self) -> Result<PartialTower1> {
        let ty = self
            .tower_type()
            .ok_or_else(|| Error::InvalidTower(format!("{self} has the wrong length")))?;
        let mut entries = Vec::with_capacity(self.nodes.len());
        let mut base = Level1Tree::empty();
        for (i, p) in self.nodes.iter().enumerate() {
            let pt = PartialLevel1Tree::new(base.clone(), p.clone())
                .map_err(|_| Error::NotCompletionAt(i))?;
            if i + 1 < self.nodes.len() || ty == TowerType::Continuous {
                base = pt.completion().map_err(|_| Error::NotCompletionAt(i + 1))?;
            }
            entries.push(pt);
        }
        if base != self.tree {
            return Err(Error::NotCompletionAt(self.nodes.len()));
        }
        match ty {
            TowerType::Discontinuous => PartialTower1::discontinuous(entries),
            TowerType::Continuous => PartialTower1::continuous(entries, self.tree.clone()),
        }
    }

    /// The completion of a discontinuous potential tower.
    pub fn completion(&self) -> Result<Level1Tree> {
        match (self.tower_type(), self.nodes.last()) {
            (Some(TowerType::Discontinuous), Some(ExtNode::Node(t))) => {
                self.tree.insert(t.clone())
            }
            _ => Err(Error::DegreeZeroHasNoCompletion),
        }
    }
}

impl fmt::Display for PotentialTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, (", self.tree)?;
        for (i, p) in self.nodes.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "))")
    }
}

impl fmt::Debug for PotentialTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(nodes: &[&[u32]]) -> Level1Tree {
        Level1Tree::validate(nodes.iter().map(|n| Node::new(n.to_vec()))).unwrap()
    }

    fn n(v: &[u32]) -> ExtNode {
        ExtNode::Node(Node::new(v.to_vec()))
    }

    #[test]
    fn completions() {
        assert_eq!(PartialLevel1Tree::root().completion().unwrap(), t(&[&[0]]));
        let p = PartialLevel1Tree::new(t(&[&[0]]), n(&[0, 0])).unwrap();
        assert_eq!(completion_le1(&p).unwrap(), t(&[&[0], &[0, 0]]));
        let m = PartialLevel1Tree::new(t(&[&[0]]), ExtNode::Minus).unwrap();
        assert_eq!(m.completion(), Err(Error::DegreeZeroHasNoCompletion));
        assert!(PartialLevel1Tree::new(t(&[&[0]]), n(&[1])).is_err());
        assert!(PartialLevel1Tree::new(Level1Tree::empty(), ExtNode::Minus).is_err());
    }

    #[test]
    fn towers() {
        let root = PartialLevel1Tree::root();
        let tw = PartialTower1::discontinuous(vec![root.clone()]).unwrap();
        assert_eq!(tw.compress().to_string(), "({}, ((0)))");

        let second = PartialLevel1Tree::new(t(&[&[0]]), n(&[0, 0])).unwrap();
        let tw = PartialTower1::discontinuous(vec![root.clone(), second]).unwrap();
        assert_eq!(tw.tower_type(), TowerType::Discontinuous);
        assert_eq!(tw.compress().to_string(), "({(0)}, ((0) (0 0)))");
        assert_eq!(tw.compress().expand().unwrap(), tw);

        let tw = PartialTower1::continuous(vec![root.clone()], t(&[&[0]])).unwrap();
        assert_eq!(tw.compress().to_string(), "({(0)}, ((0)))");
        assert!(tw.compress().is_continuous());
        assert_eq!(tw.compress().expand().unwrap(), tw);

        let bad = PartialLevel1Tree::new(t(&[&[0]]), n(&[0, 0])).unwrap();
        assert_eq!(PartialTower1::discontinuous(vec![bad]), Err(Error::BadFirstEntry));
        let wrong = PartialLevel1Tree::new(t(&[&[0], &[0, 0]]), n(&[0, 1])).unwrap();
        assert_eq!(
            PartialTower1::discontinuous(vec![root, wrong]),
            Err(Error::NotCompletionAt(1))
        );
    }

    #[test]
    fn potential_validation() {
        assert!(PotentialTower::new(Level1Tree::empty(), vec![n(&[0])]).is_ok());
        assert!(PotentialTower::new(t(&[&[0]]), vec![n(&[0]), ExtNode::Minus]).is_ok());
        assert!(PotentialTower::new(t(&[&[0]]), vec![n(&[0]), n(&[0, 0]), n(&[0, 0, 0])]).is_err());
        assert!(PotentialTower::new(t(&[&[0]]), vec![n(&[0, 0])]).is_err());
    }
}

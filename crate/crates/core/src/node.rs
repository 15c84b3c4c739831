//! Atoms of every tree: nodes of `ω^{<ω}`, the distinguished `-1`, and
//! sequences of nodes (the domain keys of level-2 and level-3 trees).
//!
//! All `Ord` impls here are Brouwer–Kleene orders, so a `BTreeSet<Node>`
//! iterates in `<_BK`-increasing order.

use std::cmp::Ordering;
use std::fmt;

use crate::bk::{bk_compare, bk_compare_by};

/// A finite sequence of naturals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Node(Vec<u32>);

impl Node {
    pub fn new(entries: Vec<u32>) -> Self {
        Node(entries)
    }

    pub fn root() -> Self {
        Node(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ⧺ (j)`.
    pub fn child(&self, j: u32) -> Node {
        let mut v = self.0.clone();
        v.push(j);
        Node(v)
    }

    /// `s⁻`, the node with the last entry dropped. `None` for the root.
    pub fn parent(&self) -> Option<Node> {
        if self.0.is_empty() {
            None
        } else {
            Some(Node(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// The chain node `(0, …, 0)` of length `k`.
    pub fn zeros(k: usize) -> Node {
        Node(vec![0; k])
    }

    pub fn is_zero_chain(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl From<Vec<u32>> for Node {
    fn from(v: Vec<u32>) -> Self {
        Node(v)
    }
}

impl<const N: usize> From<[u32; N]> for Node {
    fn from(v: [u32; N]) -> Self {
        Node(v.to_vec())
    }
}

impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        bk_compare(&self.0, &other.0)
    }
}

impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A node or the distinguished element `-1`, which is `<_BK`-below every node.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtNode {
    Minus,
    Node(Node),
}

impl ExtNode {
    pub fn node(&self) -> Option<&Node> {
        match self {
            ExtNode::Minus => None,
            ExtNode::Node(n) => Some(n),
        }
    }

    pub fn is_minus(&self) -> bool {
        matches!(self, ExtNode::Minus)
    }
}

impl From<Node> for ExtNode {
    fn from(n: Node) -> Self {
        ExtNode::Node(n)
    }
}

impl Ord for ExtNode {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtNode::Minus, ExtNode::Minus) => Ordering::Equal,
            (ExtNode::Minus, ExtNode::Node(_)) => Ordering::Less,
            (ExtNode::Node(_), ExtNode::Minus) => Ordering::Greater,
            (ExtNode::Node(a), ExtNode::Node(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ExtNode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNode::Minus => write!(f, "-1"),
            ExtNode::Node(n) => write!(f, "{n}"),
        }
    }
}

impl fmt::Debug for ExtNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of `(ω^{<ω})^{<ω}`: the domain keys `q` of level-2 trees and
/// `r` of level-3 trees. Ordered by `<_BK` with node entries compared by `<_BK`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Key(Vec<Node>);

impl Key {
    pub fn new(nodes: Vec<Node>) -> Self {
        Key(nodes)
    }

    pub fn empty() -> Self {
        Key(Vec::new())
    }

    pub fn nodes(&self) -> &[Node] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&self, a: Node) -> Key {
        let mut v = self.0.clone();
        v.push(a);
        Key(v)
    }

    pub fn parent(&self) -> Option<Key> {
        if self.0.is_empty() {
            None
        } else {
            Some(Key(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn last(&self) -> Option<&Node> {
        self.0.last()
    }

    /// `q ↾ l`.
    pub fn prefix(&self, l: usize) -> Key {
        Key(self.0[..l].to_vec())
    }

    /// `q ⧺ (−1)`.
    pub fn with_minus(&self) -> StarKey {
        StarKey {
            key: self.clone(),
            minus: true,
        }
    }

    pub fn star(&self) -> StarKey {
        StarKey {
            key: self.clone(),
            minus: false,
        }
    }
}

impl From<Vec<Node>> for Key {
    fn from(v: Vec<Node>) -> Self {
        Key(v)
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        bk_compare(&self.0, &other.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of `dom*`: a key, optionally followed by `−1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StarKey {
    pub key: Key,
    pub minus: bool,
}

impl StarKey {
    pub fn as_ext(&self) -> Vec<ExtNode> {
        let mut v: Vec<ExtNode> = self.key.0.iter().cloned().map(ExtNode::Node).collect();
        if self.minus {
            v.push(ExtNode::Minus);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.key.len() + usize::from(self.minus)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Continuous type iff it ends in `−1`.
    pub fn is_continuous(&self) -> bool {
        self.minus
    }
}

impl From<Key> for StarKey {
    fn from(key: Key) -> Self {
        StarKey { key, minus: false }
    }
}

impl Ord for StarKey {
    fn cmp(&self, other: &Self) -> Ordering {
        bk_compare_by(&self.as_ext(), &other.as_ext(), Ord::cmp)
    }
}

impl PartialOrd for StarKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StarKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.as_ext().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for StarKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minus_is_below_every_node() {
        assert!(ExtNode::Minus < ExtNode::Node(Node::from([0, 0, 0])));
        assert!(ExtNode::Minus < ExtNode::Node(Node::root()));
    }

    #[test]
    fn star_key_minus_comes_before_children() {
        let q = Key::new(vec![Node::from([0])]);
        let qm = q.with_minus();
        let qc = q.push(Node::from([0])).star();
        assert!(qm < qc);
        assert!(qc < q.star());
    }

    #[test]
    fn nested_keys_use_node_order() {
        let a = Key::new(vec![Node::from([0, 0])]);
        let b = Key::new(vec![Node::from([0])]);
        assert!(a < b);
        assert!(Key::empty() > b);
    }
}

//! Level-1 trees, their ordinal representations, descriptions, factoring
//! maps, towers and the node predicate of `S₁`.
//!
//! A description of `P` is a node of `P` or the constant description `∅`.
//! Since `∅` is a prefix of every node, the empty [`Node`] is the
//! `<_BK`-largest node and doubles as the constant description.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::node::Node;
use crate::ordinal::{apply_shift, apply_shift_sup, CtblOrd, IndexMap, UOrd};

/// A finite level-1 tree. Nodes iterate in `<_BK`-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Level1Tree {
    nodes: BTreeSet<Node>,
}

impl Level1Tree {
    pub fn empty() -> Self {
        Level1Tree::default()
    }

    /// Checks both closure clauses; the first violating node is reported in
    /// `<_BK` order.
    pub fn validate(nodes: impl IntoIterator<Item = Node>) -> Result<Self> {
        let nodes: BTreeSet<Node> = nodes.into_iter().collect();
        if nodes.contains(&Node::root()) {
            return Err(Error::ContainsEmpty);
        }
        for node in &nodes {
            let parent = node.parent().expect("root excluded above");
            if !parent.is_empty() && !nodes.contains(&parent) {
                return Err(Error::ClosureViolation {
                    node: node.clone(),
                    missing: parent,
                });
            }
            let last = node.last().unwrap();
            if let Some(j) = (0..last).find(|&j| !nodes.contains(&parent.child(j))) {
                return Err(Error::ClosureViolation {
                    node: node.clone(),
                    missing: parent.child(j),
                });
            }
        }
        Ok(Level1Tree { nodes })
    }

    pub fn nodes(&self) -> impl DoubleEndedIterator<Item = &Node> + ExactSizeIterator {
        self.nodes.iter()
    }

    pub fn node_set(&self) -> &BTreeSet<Node> {
        &self.nodes
    }

    pub fn card(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, p: &Node) -> bool {
        self.nodes.contains(p)
    }

    pub fn is_regular(&self) -> bool {
        !self.nodes.contains(&Node::from([1]))
    }

    pub fn is_subtree_of(&self, other: &Level1Tree) -> bool {
        self.nodes.is_subset(&other.nodes)
    }

    /// Number of immediate children of `p`, where `p` may be `∅`.
    pub fn children_count(&self, p: &Node) -> u32 {
        (0..).take_while(|&j| self.nodes.contains(&p.child(j))).count() as u32
    }

    /// `desc(P) = P ∪ {∅}` in `≺`-increasing order.
    pub fn descriptions(&self) -> Vec<Node> {
        let mut out: Vec<Node> = self.nodes.iter().cloned().collect();
        out.push(Node::root());
        out
    }

    pub fn is_description(&self, d: &Node) -> bool {
        d.is_empty() || self.nodes.contains(d)
    }

    /// `≺`-rank of a description.
    pub fn desc_rank(&self, d: &Node) -> Result<usize> {
        if d.is_empty() {
            Ok(self.card())
        } else if self.nodes.contains(d) {
            Ok(self.nodes.range(..d).count())
        } else {
            Err(Error::NotADescription(d.clone()))
        }
    }

    /// The description of `≺`-rank `r`.
    pub fn desc_at(&self, r: usize) -> Option<Node> {
        match r.cmp(&self.card()) {
            Ordering::Less => self.nodes.iter().nth(r).cloned(),
            Ordering::Equal => Some(Node::root()),
            Ordering::Greater => None,
        }
    }

    /// `seed^P_d = u_{rank(d)+1}`.
    pub fn seed(&self, d: &Node) -> Result<UOrd> {
        Ok(UOrd::u(self.desc_rank(d)? as u32 + 1))
    }

    /// Nodes `p ⧺ (j)` with `p ∈ P ∪ {∅}` and `j` the number of children of
    /// `p`, in `<_BK` order. The `i`-th one fills the gap just below the
    /// `i`-th description.
    pub fn addable_nodes(&self) -> Vec<Node> {
        self.descriptions()
            .into_iter()
            .map(|d| {
                let j = self.children_count(&d);
                d.child(j)
            })
            .collect()
    }

    /// The unique addable node realizing the gap just below description `d`.
    pub fn gap_below(&self, d: &Node) -> Result<Node> {
        if !self.is_description(d) {
            return Err(Error::NotADescription(d.clone()));
        }
        Ok(d.child(self.children_count(d)))
    }

    pub fn is_addable(&self, p: &Node) -> bool {
        match (p.parent(), p.last()) {
            (Some(parent), Some(j)) => {
                self.is_description(&parent)
                    && !self.nodes.contains(p)
                    && self.children_count(&parent) == j
            }
            _ => false,
        }
    }

    /// `P ∪ {p}` for an addable node `p`.
    pub fn insert(&self, p: Node) -> Result<Level1Tree> {
        let mut nodes = self.nodes.clone();
        nodes.insert(p);
        Level1Tree::validate(nodes)
    }

    /// `P ∖ {p}`, checking the result is a tree.
    pub fn remove(&self, p: &Node) -> Result<Level1Tree> {
        let mut nodes = self.nodes.clone();
        nodes.remove(p);
        Level1Tree::validate(nodes)
    }

    /// Whether `x ∈ rep(P)`.
    pub fn in_rep(&self, x: &Rep1Element) -> bool {
        self.nodes.contains(x.node())
    }

    pub fn rep_compare(&self, x: &Rep1Element, y: &Rep1Element) -> Result<Ordering> {
        for e in [x, y] {
            if !self.in_rep(e) {
                return Err(Error::NotInRep {
                    node: e.node().clone(),
                });
            }
        }
        Ok(x.cmp(y))
    }

    /// Order type of `<^P`: one block `ω + 1` per node, in `<_BK` order.
    pub fn rep_order_type(&self) -> CtblOrd {
        let block = CtblOrd::omega().succ();
        self.nodes
            .iter()
            .fold(CtblOrd::zero(), |acc, _| acc.add(&block))
    }

    /// Every strictly `<_BK`-increasing map `P → W`, lexicographic in the
    /// `≺`-listing of the images.
    pub fn factorings(&self, w: &Level1Tree) -> Vec<Factoring> {
        let domain: Vec<Node> = self.nodes.iter().cloned().collect();
        let target: Vec<Node> = w.nodes.iter().cloned().collect();
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(domain.len());
        collect_combinations(target.len(), domain.len(), 0, &mut chosen, &mut |idx| {
            out.push(Factoring {
                domain: domain.clone(),
                image: idx.iter().map(|&i| target[i].clone()).collect(),
            });
        });
        out
    }

    pub fn factor_exists(&self, w: &Level1Tree) -> bool {
        !self.factorings(w).is_empty()
    }

    /// `∃σ ∃w ∈ W` with `σ` factoring `(P, W)` and `σ(p) ≺ w` for all `p ∈ P`.
    pub fn strict_factor_exists(&self, w: &Level1Tree) -> bool {
        self.factorings(w).iter().any(|s| {
            let top = s.image.last();
            w.nodes().any(|x| top.is_none_or(|t| t < x))
        })
    }
}

fn collect_combinations(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    let remaining = k - chosen.len();
    for i in start..n {
        if n - i < remaining {
            break;
        }
        chosen.push(i);
        collect_combinations(n, k, i + 1, chosen, emit);
        chosen.pop();
    }
}

impl fmt::Display for Level1Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lex: Vec<&Node> = self.nodes.iter().collect();
        lex.sort_by(|a, b| a.entries().cmp(b.entries()));
        write!(f, "{{")?;
        for (i, p) in lex.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Level1Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A point of `rep(P)`: `(p)` or `(p, n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Rep1Element {
    Top(Node),
    Pair(Node, u64),
}

impl Rep1Element {
    pub fn node(&self) -> &Node {
        match self {
            Rep1Element::Top(p) | Rep1Element::Pair(p, _) => p,
        }
    }
}

impl Ord for Rep1Element {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.node().cmp(other.node()) {
            Ordering::Equal => {}
            o => return o,
        }
        match (self, other) {
            (Rep1Element::Top(_), Rep1Element::Top(_)) => Ordering::Equal,
            (Rep1Element::Pair(..), Rep1Element::Top(_)) => Ordering::Less,
            (Rep1Element::Top(_), Rep1Element::Pair(..)) => Ordering::Greater,
            (Rep1Element::Pair(_, a), Rep1Element::Pair(_, b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Rep1Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rep1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rep1Element::Top(p) => write!(f, "({p})"),
            Rep1Element::Pair(p, n) => write!(f, "({p} {n})"),
        }
    }
}

/// A strictly `<_BK`-preserving map `desc(P) → desc(W)` fixing `∅`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Factoring {
    domain: Vec<Node>,
    image: Vec<Node>,
}

impl Factoring {
    /// Builds `σ` from pairs `p ↦ σ(p)`, checking it factors `(P, W)`.
    pub fn new(p: &Level1Tree, w: &Level1Tree, map: &BTreeMap<Node, Node>) -> Result<Self> {
        if map.len() != p.card() || !map.keys().all(|k| p.contains(k)) {
            return Err(Error::NotAFactoring);
        }
        let image: Vec<Node> = map.values().cloned().collect();
        if !image.iter().all(|x| w.contains(x)) || image.windows(2).any(|s| s[0] >= s[1]) {
            return Err(Error::NotAFactoring);
        }
        Ok(Factoring {
            domain: map.keys().cloned().collect(),
            image,
        })
    }

    pub fn identity(p: &Level1Tree) -> Self {
        let nodes: Vec<Node> = p.nodes().cloned().collect();
        Factoring {
            domain: nodes.clone(),
            image: nodes,
        }
    }

    /// The inclusion `P ⊆ P'`.
    pub fn inclusion(p: &Level1Tree, p2: &Level1Tree) -> Result<Self> {
        if !p.is_subtree_of(p2) {
            return Err(Error::NotSubtree(p.card(), p2.card()));
        }
        Ok(Factoring::identity(p))
    }

    pub fn domain(&self) -> &[Node] {
        &self.domain
    }

    pub fn image(&self) -> &[Node] {
        &self.image
    }

    pub fn apply(&self, d: &Node) -> Option<Node> {
        if d.is_empty() {
            return Some(Node::root());
        }
        let i = self.domain.binary_search(d).ok()?;
        Some(self.image[i].clone())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Factoring) -> Option<Factoring> {
        let image = inner
            .image
            .iter()
            .map(|x| self.apply(x))
            .collect::<Option<Vec<_>>>()?;
        Some(Factoring {
            domain: inner.domain.clone(),
            image,
        })
    }

    pub fn factors(&self, p: &Level1Tree, w: &Level1Tree) -> bool {
        self.domain.len() == p.card()
            && self.domain.iter().zip(p.nodes()).all(|(a, b)| a == b)
            && self.image.iter().all(|x| w.contains(x))
            && self.image.windows(2).all(|s| s[0] < s[1])
    }

    /// The induced index map: `seed^P_d ↦ seed^W_{σ(d)}`.
    pub fn to_shift(&self, p: &Level1Tree, w: &Level1Tree) -> Result<IndexMap> {
        if !self.factors(p, w) {
            return Err(Error::NotAFactoring);
        }
        let mut values = Vec::with_capacity(p.card() + 1);
        for x in &self.image {
            values.push(w.desc_rank(x)? as u32 + 1);
        }
        values.push(w.card() as u32 + 1);
        IndexMap::new(values, w.card() as u32 + 1)
    }
}

impl fmt::Display for Factoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (a, b) in self.domain.iter().zip(&self.image) {
            write!(f, "{a}->{b}, ")?;
        }
        write!(f, "()->()}}")
    }
}

pub fn factor_to_shift(sigma: &Factoring, p: &Level1Tree, w: &Level1Tree) -> Result<IndexMap> {
    sigma.to_shift(p, w)
}

fn embed_map(p: &Level1Tree, p2: &Level1Tree, b: &UOrd) -> Result<IndexMap> {
    let sigma = Factoring::inclusion(p, p2)?.to_shift(p, p2)?;
    if b.max_level() > p.card() as u32 + 1 {
        return Err(Error::OutOfRange(format!(
            "{b} is above u{}",
            p.card() + 1
        )));
    }
    Ok(sigma)
}

/// `j^{P,P'}`.
pub fn tree_embed(p: &Level1Tree, p2: &Level1Tree, b: &UOrd) -> Result<UOrd> {
    apply_shift(&embed_map(p, p2, b)?, b)
}

/// `j^{P,P'}_sup`.
pub fn tree_embed_sup(p: &Level1Tree, p2: &Level1Tree, b: &UOrd) -> Result<UOrd> {
    apply_shift_sup(&embed_map(p, p2, b)?, b)
}

/// `(P_i)_{i ≤ n}` with `card(P_i) = i` and `P_i ⊆ P_{i+1}`; `P₀ = ∅`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Level1Tower {
    trees: Vec<Level1Tree>,
}

impl Level1Tower {
    pub fn validate(trees: Vec<Level1Tree>) -> Result<Self> {
        for (i, t) in trees.iter().enumerate() {
            if t.card() != i {
                return Err(Error::CardinalityMismatch(i));
            }
            if i > 0 && !trees[i - 1].is_subtree_of(t) {
                return Err(Error::NotSubtree(i - 1, i));
            }
        }
        Ok(Level1Tower { trees })
    }

    /// Accepts towers written with or without the leading `P₀ = ∅`.
    pub fn validate_rooted(mut trees: Vec<Level1Tree>) -> Result<Self> {
        if trees.first().is_none_or(|t| !t.is_empty()) {
            trees.insert(0, Level1Tree::empty());
        }
        Level1Tower::validate(trees)
    }

    pub fn trees(&self) -> &[Level1Tree] {
        &self.trees
    }

    /// `n`, the index of the last tree.
    pub fn height(&self) -> usize {
        self.trees.len().saturating_sub(1)
    }

    pub fn last(&self) -> Option<&Level1Tree> {
        self.trees.last()
    }

    pub fn regularity(&self) -> Vec<bool> {
        self.trees.iter().map(Level1Tree::is_regular).collect()
    }

    /// `p_i`, the unique node of `P_{i+1} ∖ P_i`.
    pub fn new_node(&self, i: usize) -> Option<&Node> {
        let (a, b) = (self.trees.get(i)?, self.trees.get(i + 1)?);
        b.nodes().find(|x| !a.contains(x))
    }

    pub fn new_nodes(&self) -> Vec<Node> {
        (0..self.height())
            .map(|i| self.new_node(i).unwrap().clone())
            .collect()
    }

    /// The tower obtained by adding the nodes of `P` one at a time in the
    /// given order.
    pub fn from_nodes(nodes: &[Node]) -> Result<Self> {
        let mut trees = vec![Level1Tree::empty()];
        for p in nodes {
            let next = trees.last().unwrap().insert(p.clone())?;
            trees.push(next);
        }
        Level1Tower::validate(trees)
    }
}

impl fmt::Display for Level1Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// Every `α_p` is a countable limit and `p ↦ α_p` is `<_BK`-to-`<`
/// order preserving.
pub fn respects_level1(p: &Level1Tree, alpha: &BTreeMap<Node, CtblOrd>) -> bool {
    if alpha.len() != p.card() || !alpha.keys().all(|k| p.contains(k)) {
        return false;
    }
    alpha.values().all(CtblOrd::is_limit) && alpha.values().zip(alpha.values().skip(1)).all(|(a, b)| a < b)
}

/// Node predicate of `S₁`: `α_i` is attached to the node of
/// `P_{i+1} ∖ P_i`, and the reassembled tuple must respect `P_n`.
pub fn s1_member(tower: &Level1Tower, alphas: &[CtblOrd]) -> Result<bool> {
    if alphas.len() != tower.height() {
        return Err(Error::LengthMismatch {
            expected: tower.height(),
            got: alphas.len(),
        });
    }
    if let Some(i) = tower.trees().iter().position(|t| !t.is_regular()) {
        return Err(Error::NotRegular(i));
    }
    let beta: BTreeMap<Node, CtblOrd> = tower
        .new_nodes()
        .into_iter()
        .zip(alphas.iter().cloned())
        .collect();
    Ok(respects_level1(tower.last().unwrap(), &beta))
}

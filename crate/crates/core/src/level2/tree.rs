//! Level-2 and level ≤2 trees, their accessors and descriptions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::partial::{PartialLevel1Tree, PotentialTower};
use crate::error::{Error, Result};
use crate::level1::Level1Tree;
use crate::node::{ExtNode, Key, Node, StarKey};

/// Whether `dom` is a tree of level-1 trees: prefix closed, and every
/// `{a : s ⧺ (a) ∈ dom}` is a level-1 tree. Returns the first offending key.
pub fn check_tree_of_trees(dom: &BTreeSet<Key>) -> std::result::Result<(), Key> {
    let mut children: BTreeMap<Key, Vec<Node>> = BTreeMap::new();
    for k in dom {
        if let Some(parent) = k.parent() {
            if !dom.contains(&parent) {
                return Err(k.clone());
            }
            children.entry(parent).or_default().push(k.last().unwrap().clone());
        }
    }
    for (parent, kids) in children {
        if Level1Tree::validate(kids.iter().cloned()).is_err() {
            return Err(parent);
        }
    }
    Ok(())
}

/// Keys of length at most `depth` ordered first by length, then `<_BK`.
fn by_length<'a, V>(m: &'a BTreeMap<Key, V>) -> Vec<(&'a Key, &'a V)> {
    let mut v: Vec<_> = m.iter().collect();
    v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
    v
}

/// A finite level-2 tree `Q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Level2Tree {
    entries: BTreeMap<Key, PartialLevel1Tree>,
}

impl Level2Tree {
    /// `{∅ ↦ (∅, (0))}`.
    pub fn root() -> Self {
        Level2Tree {
            entries: BTreeMap::from([(Key::empty(), PartialLevel1Tree::root())]),
        }
    }

    pub fn validate(raw: impl IntoIterator<Item = (Key, Level1Tree, ExtNode)>) -> Result<Self> {
        let raw: BTreeMap<Key, (Level1Tree, ExtNode)> =
            raw.into_iter().map(|(k, t, n)| (k, (t, n))).collect();
        match raw.get(&Key::empty()) {
            Some((t, ExtNode::Node(n))) if t.is_empty() && *n == Node::from([0]) => {}
            _ => return Err(Error::RootNotCanonical),
        }
        let dom: BTreeSet<Key> = raw.keys().cloned().collect();
        check_tree_of_trees(&dom).map_err(Error::DomainNotTree)?;
        let mut entries: BTreeMap<Key, PartialLevel1Tree> = BTreeMap::new();
        for (q, (tree, node)) in by_length(&raw) {
            let pt = match q.parent() {
                None => PartialLevel1Tree::root(),
                Some(parent) => {
                    let expected = entries[&parent].completion();
                    if expected.as_ref() != Ok(tree) {
                        return Err(Error::TowerViolation(q.clone()));
                    }
                    PartialLevel1Tree::new(tree.clone(), node.clone())
                        .map_err(|_| Error::TowerViolation(q.clone()))?
                }
            };
            entries.insert(q.clone(), pt);
        }
        Ok(Level2Tree { entries })
    }

    pub fn from_entries(entries: BTreeMap<Key, PartialLevel1Tree>) -> Result<Self> {
        Level2Tree::validate(
            entries
                .into_iter()
                .map(|(k, p)| (k, p.base().clone(), p.node().clone())),
        )
    }

    pub fn entries(&self) -> &BTreeMap<Key, PartialLevel1Tree> {
        &self.entries
    }

    /// `dom(Q)` in `<_BK` order.
    pub fn dom(&self) -> impl Iterator<Item = &Key> {
        self.entries.keys()
    }

    pub fn contains(&self, q: &Key) -> bool {
        self.entries.contains_key(q)
    }

    pub fn card(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, q: &Key) -> Option<&PartialLevel1Tree> {
        self.entries.get(q)
    }

    fn entry(&self, q: &Key) -> Result<&PartialLevel1Tree> {
        self.entries
            .get(q)
            .ok_or_else(|| Error::MissingEntry(q.to_string()))
    }

    pub fn tree(&self, q: &Key) -> Result<&Level1Tree> {
        Ok(self.entry(q)?.base())
    }

    pub fn node(&self, q: &Key) -> Result<&ExtNode> {
        Ok(self.entry(q)?.node())
    }

    /// `Q[q]`, a potential tower of discontinuous type.
    pub fn bracket(&self, q: &Key) -> Result<PotentialTower> {
        let nodes = (0..=q.len())
            .map(|l| self.node(&q.prefix(l)).cloned())
            .collect::<Result<Vec<_>>>()?;
        Ok(PotentialTower::new_unchecked(self.tree(q)?.clone(), nodes))
    }

    /// `Q[q ⧺ (−1)]`, a potential tower of continuous type; needs `Q(q)` of
    /// degree 1.
    pub fn bracket_minus(&self, q: &Key) -> Result<PotentialTower> {
        let b = self.bracket(q)?;
        let tree = self.entry(q)?.completion()?;
        Ok(PotentialTower::new_unchecked(tree, b.nodes().to_vec()))
    }

    /// `Q[q]` for `q ∈ dom*(Q)`.
    pub fn bracket_star(&self, q: &StarKey) -> Result<PotentialTower> {
        if q.minus {
            self.bracket_minus(&q.key)
        } else {
            self.bracket(&q.key)
        }
    }

    /// `Q{q}`, the level-1 tree of children.
    pub fn children(&self, q: &Key) -> Level1Tree {
        let kids = self
            .entries
            .keys()
            .filter(|k| k.parent().as_ref() == Some(q))
            .map(|k| k.last().unwrap().clone());
        Level1Tree::validate(kids).expect("domain is a tree of level-1 trees")
    }

    /// `dom*(Q)`: `dom(Q)` together with `q ⧺ (−1)` for each `q` whose
    /// entry has degree 1, in `<_BK` order.
    pub fn dom_star(&self) -> Vec<StarKey> {
        let mut out: Vec<StarKey> = self.entries.keys().map(Key::star).collect();
        out.extend(
            self.entries
                .iter()
                .filter(|(_, p)| p.degree() == 1)
                .map(|(k, _)| k.with_minus()),
        );
        out.sort();
        out
    }

    fn siblings(&self, q: &Key, tree: &Level1Tree) -> Vec<Key> {
        let Some(parent) = q.parent() else {
            return Vec::new();
        };
        self.entries
            .iter()
            .filter(|(k, p)| k.parent().as_ref() == Some(&parent) && p.base() == tree)
            .map(|(k, _)| k.clone())
            .collect()
    }

    /// `Q{q,−}`; `q` need not lie in `dom(Q)`, in which case its tree is
    /// taken to be the completion of `Q(q⁻)`.
    pub fn minus_set(&self, q: &Key) -> Result<Vec<StarKey>> {
        let parent = q.parent().ok_or(Error::EmptyKeyPresent)?;
        let tree = self.sibling_tree(q)?;
        let last = q.last().unwrap();
        let mut out = vec![parent.with_minus()];
        out.extend(
            self.siblings(q, &tree)
                .into_iter()
                .filter(|k| k.last().unwrap() < last)
                .map(|k| k.star()),
        );
        out.sort();
        Ok(out)
    }

    /// `Q{q,+}`, with the same convention as [`Self::minus_set`].
    pub fn plus_set(&self, q: &Key) -> Result<Vec<Key>> {
        let parent = q.parent().ok_or(Error::EmptyKeyPresent)?;
        let tree = self.sibling_tree(q)?;
        let last = q.last().unwrap();
        let mut out = vec![parent];
        out.extend(
            self.siblings(q, &tree)
                .into_iter()
                .filter(|k| k.last().unwrap() > last),
        );
        out.sort();
        Ok(out)
    }

    fn sibling_tree(&self, q: &Key) -> Result<Level1Tree> {
        match self.entries.get(q) {
            Some(p) => Ok(p.base().clone()),
            None => {
                let parent = q.parent().ok_or(Error::EmptyKeyPresent)?;
                self.entry(&parent)?.completion()
            }
        }
    }

    pub fn is_subtree_of(&self, other: &Level2Tree) -> bool {
        self.entries
            .iter()
            .all(|(k, v)| other.entries.get(k) == Some(v))
    }

    /// The key `q ∉ dom(Q)` that extends `self` to `other`, when `other` has
    /// exactly one more entry.
    pub fn new_key(&self, other: &Level2Tree) -> Option<Key> {
        let mut extra = other.entries.keys().filter(|k| !self.entries.contains_key(*k));
        let k = extra.next()?.clone();
        extra.next().is_none().then_some(k)
    }

    /// Adds `q ↦ pt`, validating the result.
    pub fn extend(&self, q: Key, pt: PartialLevel1Tree) -> Result<Level2Tree> {
        if self.entries.contains_key(&q) {
            return Err(Error::DomainNotTree(q));
        }
        let mut entries = self.entries.clone();
        entries.insert(q, pt);
        Level2Tree::from_entries(entries)
    }
}

impl fmt::Display for Level2Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, (k, p)) in by_length(&self.entries).into_iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{k} -> {p}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for Level2Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Q = (¹Q, ²Q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LevelLe2Tree {
    pub t1: Level1Tree,
    pub t2: Level2Tree,
}

/// `(d, q)`: an index of a level ≤2 tuple; `Zero` is `(0, −1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum DomKey {
    Zero,
    One(Node),
    Two(Key),
}

impl fmt::Display for DomKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomKey::Zero => write!(f, "0:-1"),
            DomKey::One(p) => write!(f, "1:{p}"),
            DomKey::Two(q) => write!(f, "2:{q}"),
        }
    }
}

impl LevelLe2Tree {
    pub fn new(t1: Level1Tree, t2: Level2Tree) -> Self {
        LevelLe2Tree { t1, t2 }
    }

    /// `card(¹Q) + card(²Q)`.
    pub fn card(&self) -> usize {
        self.t1.card() + self.t2.card()
    }

    /// `dom(Q)`, level-1 part first.
    pub fn dom(&self) -> Vec<DomKey> {
        self.t1
            .nodes()
            .cloned()
            .map(DomKey::One)
            .chain(self.t2.dom().cloned().map(DomKey::Two))
            .collect()
    }

    pub fn is_subtree_of(&self, other: &LevelLe2Tree) -> bool {
        self.t1.is_subtree_of(&other.t1) && self.t2.is_subtree_of(&other.t2)
    }

    /// All descriptions `(d, 𝐪)` followed by the extended ones.
    pub fn descriptions(&self) -> Vec<Description> {
        let mut out: Vec<Description> = self
            .t1
            .descriptions()
            .into_iter()
            .map(Description::One)
            .collect();
        for k in self.t2.dom_star() {
            let tower = self.t2.bracket_star(&k).expect("dom* is describable");
            out.push(Description::Two(QDesc {
                key: k,
                tower,
            }));
        }
        out
    }

    /// `desc*(Q) ∖ desc(Q)`: `(q, P, p⃗)` where `(q ⧺ (−1), P, p⃗)` is a
    /// continuous description.
    pub fn extended_only(&self) -> Vec<Description> {
        self.t2
            .dom_star()
            .into_iter()
            .filter(|k| k.minus)
            .map(|k| {
                let tower = self.t2.bracket_star(&k).expect("dom* is describable");
                Description::Two(QDesc {
                    key: k.key.star(),
                    tower,
                })
            })
            .collect()
    }

    pub fn classify(&self, d: &Description) -> DescKind {
        match d {
            Description::One(p) if self.t1.is_description(p) => DescKind::Discontinuous,
            Description::One(_) => DescKind::Invalid,
            Description::Two(x) => {
                let Ok(expected) = self.t2.bracket_star(&x.key) else {
                    return self.classify_extended(x);
                };
                if expected == x.tower {
                    if x.key.minus {
                        DescKind::Continuous
                    } else {
                        DescKind::Discontinuous
                    }
                } else {
                    self.classify_extended(x)
                }
            }
        }
    }

    fn classify_extended(&self, x: &QDesc) -> DescKind {
        if x.key.minus {
            return DescKind::Invalid;
        }
        match self.t2.bracket_minus(&x.key.key) {
            Ok(t) if t == x.tower => DescKind::ExtendedOnly,
            _ => DescKind::Invalid,
        }
    }

    /// Regular iff discontinuous or not a description at all.
    pub fn is_regular_desc(&self, d: &Description) -> bool {
        matches!(
            self.classify(d),
            DescKind::Discontinuous | DescKind::ExtendedOnly
        )
    }
}

impl fmt::Display for LevelLe2Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.t1)?;
        let inner = self.t2.to_string();
        write!(f, "{}", &inner[1..inner.len() - 1])?;
        write!(f, ">")
    }
}

impl fmt::Debug for LevelLe2Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A level-2 description or extended description `(q, P, p⃗)`, stored as
/// the key and its potential tower.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QDesc {
    pub key: StarKey,
    pub tower: PotentialTower,
}

impl QDesc {
    pub fn tree(&self) -> &Level1Tree {
        self.tower.tree()
    }

    /// `(∅, ∅, (0))`.
    pub fn constant() -> Self {
        QDesc {
            key: Key::empty().star(),
            tower: PotentialTower::new_unchecked(
                Level1Tree::empty(),
                vec![ExtNode::Node(Node::from([0]))],
            ),
        }
    }
}

impl fmt::Display for QDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.tower.to_string();
        write!(f, "({}, {}", self.key, &t[1..])
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Description {
    One(Node),
    Two(QDesc),
}

impl Description {
    pub fn level(&self) -> u8 {
        match self {
            Description::One(_) => 1,
            Description::Two(_) => 2,
        }
    }
}

impl fmt::Display for Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Description::One(p) => write!(f, "(1, {p})"),
            Description::Two(x) => write!(f, "(2, {x})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DescKind {
    Discontinuous,
    Continuous,
    ExtendedOnly,
    Invalid,
}

impl fmt::Display for DescKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DescKind::Discontinuous => "discontinuous",
            DescKind::Continuous => "continuous",
            DescKind::ExtendedOnly => "extended",
            DescKind::Invalid => "invalid",
        })
    }
}

/// `(Q⁰, Q¹, Q²⁰, Q²¹)`.
pub fn typical_trees() -> [LevelLe2Tree; 4] {
    let one = Level1Tree::validate([Node::from([0])]).unwrap();
    let child = |node: ExtNode| {
        Level2Tree::root()
            .extend(
                Key::new(vec![Node::from([0])]),
                PartialLevel1Tree::new(one.clone(), node).unwrap(),
            )
            .unwrap()
    };
    [
        LevelLe2Tree::new(Level1Tree::empty(), Level2Tree::root()),
        LevelLe2Tree::new(one.clone(), Level2Tree::root()),
        LevelLe2Tree::new(Level1Tree::empty(), child(ExtNode::Minus)),
        LevelLe2Tree::new(Level1Tree::empty(), child(ExtNode::Node(Node::from([0, 0])))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(nodes: &[&[u32]]) -> Level1Tree {
        Level1Tree::validate(nodes.iter().map(|n| Node::new(n.to_vec()))).unwrap()
    }

    fn key(nodes: &[&[u32]]) -> Key {
        Key::new(nodes.iter().map(|n| Node::new(n.to_vec())).collect())
    }

    fn en(v: &[u32]) -> ExtNode {
        ExtNode::Node(Node::new(v.to_vec()))
    }

    #[test]
    fn validation() {
        assert_eq!(
            Level2Tree::validate([(Key::empty(), Level1Tree::empty(), en(&[0]))]).unwrap(),
            Level2Tree::root()
        );
        let q21 = Level2Tree::validate([
            (Key::empty(), Level1Tree::empty(), en(&[0])),
            (key(&[&[0]]), t(&[&[0]]), en(&[0, 0])),
        ]);
        assert!(q21.is_ok());
        assert_eq!(
            Level2Tree::validate([
                (Key::empty(), Level1Tree::empty(), en(&[0])),
                (key(&[&[0]]), t(&[&[0], &[1]]), en(&[0, 0])),
            ]),
            Err(Error::TowerViolation(key(&[&[0]])))
        );
        assert_eq!(
            Level2Tree::validate([(Key::empty(), t(&[&[0]]), en(&[0, 0]))]),
            Err(Error::RootNotCanonical)
        );
        assert_eq!(
            Level2Tree::validate([
                (Key::empty(), Level1Tree::empty(), en(&[0])),
                (key(&[&[1]]), t(&[&[0]]), en(&[0, 0])),
            ]),
            Err(Error::DomainNotTree(Key::empty()))
        );
    }

    #[test]
    fn typical() {
        let [q0, q1, q20, q21] = typical_trees();
        assert!(q0.t1.is_empty() && q0.t2.card() == 1);
        assert_eq!(q1.t1, t(&[&[0]]));
        assert_eq!(q1.t2.card(), 1);
        assert_eq!(q20.t2.node(&key(&[&[0]])).unwrap(), &ExtNode::Minus);
        assert_eq!(q21.t2.node(&key(&[&[0]])).unwrap(), &en(&[0, 0]));
        assert_eq!(q21.to_string(), "<{} | () -> ({}, (0)); ((0)) -> ({(0)}, (0 0))>");
    }

    #[test]
    fn descriptions() {
        let [q0, q1, _, q21] = typical_trees();
        let d0: Vec<String> = q0.descriptions().iter().map(ToString::to_string).collect();
        assert_eq!(
            d0,
            vec!["(1, ())", "(2, ((-1), {(0)}, ((0))))", "(2, ((), {}, ((0))))"]
        );
        assert!(q1
            .descriptions()
            .contains(&Description::One(Node::from([0]))));
        let d21: Vec<String> = q21.descriptions().iter().map(ToString::to_string).collect();
        assert!(d21.contains(&"(2, (((0)), {(0)}, ((0) (0 0))))".to_string()));
        assert!(d21.contains(&"(2, (((0) -1), {(0) (0 0)}, ((0) (0 0))))".to_string()));
        for d in q21.descriptions() {
            let kind = q21.classify(&d);
            assert_ne!(kind, DescKind::Invalid);
            if let Description::Two(x) = &d {
                assert_eq!(kind == DescKind::Continuous, x.key.minus);
            }
        }
        for d in q21.extended_only() {
            assert_eq!(q21.classify(&d), DescKind::ExtendedOnly);
            assert!(q21.is_regular_desc(&d));
        }
        assert_eq!(
            q21.classify(&Description::Two(QDesc::constant())),
            DescKind::Discontinuous
        );
    }

    #[test]
    fn plus_minus_sets() {
        let q = Level2Tree::root()
            .extend(key(&[&[0]]), PartialLevel1Tree::new(t(&[&[0]]), en(&[0, 0])).unwrap())
            .unwrap()
            .extend(key(&[&[1]]), PartialLevel1Tree::new(t(&[&[0]]), ExtNode::Minus).unwrap())
            .unwrap();
        assert_eq!(q.plus_set(&key(&[&[0]])).unwrap(), vec![key(&[&[1]]), Key::empty()]);
        assert_eq!(q.plus_set(&key(&[&[1]])).unwrap(), vec![Key::empty()]);
        assert_eq!(
            q.minus_set(&key(&[&[1]])).unwrap(),
            vec![Key::empty().with_minus(), key(&[&[0]]).star()]
        );
        // keys outside the domain use the completion of the parent
        assert_eq!(q.plus_set(&key(&[&[2]])).unwrap(), vec![Key::empty()]);
        assert_eq!(
            q.plus_set(&key(&[&[0, 0]])).unwrap(),
            vec![key(&[&[0]]), key(&[&[1]]), Key::empty()]
        );
        assert_eq!(q.children(&Key::empty()), t(&[&[0], &[1]]));
    }
}

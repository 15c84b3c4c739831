//! Partial level ≤2 trees, level-3 trees and towers, `rep(R)`, and the
//! structural side of `S₃`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bk::bk_compare;
use crate::error::{Error, Result};
use crate::level1::Level1Tree;
use crate::level2::{
    check_tree_of_trees, respects_le2, Description, DomKey, LevelLe2Tree, PartialLevel1Tree,
    QDesc,
};
use crate::node::{ExtNode, Key, Node, StarKey};
use crate::ordinal::UOrd;

/// A level ≤2 tuple indexed by `dom(Q)`, possibly with one extra entry.
pub type OrdTuple = BTreeMap<DomKey, UOrd>;

/// `(Q, (d, q, P))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialLevelLe2Tree {
    base: LevelLe2Tree,
    node: DomKey,
    tree: Level1Tree,
}

impl PartialLevelLe2Tree {
    pub fn new(base: LevelLe2Tree, node: DomKey, tree: Level1Tree) -> Result<Self> {
        match &node {
            DomKey::Zero => {
                if !tree.is_empty() {
                    return Err(Error::CaseViolation("degree 0 requires P = ∅".into()));
                }
            }
            DomKey::One(q) => {
                if base.t1.contains(q) {
                    return Err(Error::CaseViolation(format!("{q} is already in the level-1 part")));
                }
                if q.is_empty() || base.t1.insert(q.clone()).is_err() {
                    return Err(Error::CaseViolation(format!(
                        "adding {q} does not give a level-1 tree"
                    )));
                }
                if !tree.is_empty() {
                    return Err(Error::CaseViolation("degree 1 requires P = ∅".into()));
                }
            }
            DomKey::Two(q) => {
                if base.t2.contains(q) {
                    return Err(Error::CaseViolation(format!("{q} is already in the domain")));
                }
                let mut dom: BTreeSet<Key> = base.t2.dom().cloned().collect();
                dom.insert(q.clone());
                if q.is_empty() || check_tree_of_trees(&dom).is_err() {
                    return Err(Error::CaseViolation(format!(
                        "adding {q} does not give a tree of level-1 trees"
                    )));
                }
                let parent = q.parent().unwrap();
                let done = base.t2.get(&parent).unwrap().completion().map_err(|_| {
                    Error::CaseViolation(format!("the entry at {parent} has degree 0"))
                })?;
                if done != tree {
                    return Err(Error::CaseViolation(format!(
                        "P must be the completion {done} of the entry at {parent}"
                    )));
                }
            }
        }
        Ok(PartialLevelLe2Tree { base, node, tree })
    }

    pub fn base(&self) -> &LevelLe2Tree {
        &self.base
    }

    /// `(d, q)`.
    pub fn node(&self) -> &DomKey {
        &self.node
    }

    /// `P`.
    pub fn tree(&self) -> &Level1Tree {
        &self.tree
    }

    pub fn degree(&self) -> u8 {
        match self.node {
            DomKey::Zero => 0,
            DomKey::One(_) => 1,
            DomKey::Two(_) => 2,
        }
    }

    pub fn card(&self) -> usize {
        self.base.card() + 1
    }

    /// Every partial level ≤2 tree on `base`.
    pub fn all_on(base: &LevelLe2Tree) -> Vec<PartialLevelLe2Tree> {
        let mut out = vec![PartialLevelLe2Tree {
            base: base.clone(),
            node: DomKey::Zero,
            tree: Level1Tree::empty(),
        }];
        for q in base.t1.addable_nodes() {
            out.push(PartialLevelLe2Tree {
                base: base.clone(),
                node: DomKey::One(q),
                tree: Level1Tree::empty(),
            });
        }
        for (parent, pt) in base.t2.entries() {
            let Ok(done) = pt.completion() else { continue };
            for a in base.t2.children(parent).addable_nodes() {
                out.push(PartialLevelLe2Tree {
                    base: base.clone(),
                    node: DomKey::Two(parent.push(a)),
                    tree: done.clone(),
                });
            }
        }
        out
    }

    /// The uniform cofinality, with the number of the defining case.
    pub fn ucf_case(&self) -> (Ucf, u8) {
        match &self.node {
            DomKey::Zero => (Ucf::Zero, 1),
            DomKey::One(q) => match q.parent() {
                Some(parent) if !parent.is_empty() => (Ucf::One(parent), 2),
                _ => (Ucf::Two(QDesc::constant()), 3),
            },
            DomKey::Two(q) => {
                let parent = q.parent().unwrap();
                let plus = self.base.t2.plus_set(q).expect("q has a parent in the domain");
                let least = plus[0].clone();
                if least != parent {
                    let tower = self.base.t2.bracket(&least).unwrap();
                    (Ucf::Two(QDesc { key: least.star(), tower }), 4)
                } else {
                    let nodes = self.base.t2.bracket(&parent).unwrap().nodes().to_vec();
                    let tower = crate::level2::PotentialTower::new(self.tree.clone(), nodes)
                        .expect("completion of the parent entry");
                    (Ucf::Two(QDesc { key: parent.star(), tower }), 5)
                }
            }
        }
    }

    pub fn ucf(&self) -> Ucf {
        self.ucf_case().0
    }

    pub fn cf3(&self) -> u8 {
        match &self.node {
            DomKey::Zero => 0,
            DomKey::One(q) if self.base.t1.nodes().all(|p| q < p) => 1,
            _ => 2,
        }
    }

    /// All completions, the canonical one first.
    pub fn completions(&self) -> Result<Vec<LevelLe2Tree>> {
        match &self.node {
            DomKey::Zero => Err(Error::DegreeZero),
            DomKey::One(q) => Ok(vec![LevelLe2Tree::new(
                self.base.t1.insert(q.clone())?,
                self.base.t2.clone(),
            )]),
            DomKey::Two(q) => Ok(PartialLevel1Tree::all_on(&self.tree)
                .into_iter()
                .filter_map(|pt| self.base.t2.extend(q.clone(), pt).ok())
                .map(|t2| LevelLe2Tree::new(self.base.t1.clone(), t2))
                .collect()),
        }
    }

    pub fn is_completion(&self, q: &LevelLe2Tree) -> bool {
        self.completions().is_ok_and(|all| all.contains(q))
    }

    /// `t↾dom(Q)` respects `Q`, and the new entry is finite (degree 0) or
    /// `t` respects some completion.
    pub fn respects(&self, t: &OrdTuple) -> Result<bool> {
        let restricted: OrdTuple = t
            .iter()
            .filter(|(k, _)| **k != self.node)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        if !respects_le2(&self.base, &restricted)?.holds() {
            return Ok(false);
        }
        let extra = t
            .get(&self.node)
            .ok_or_else(|| Error::MissingEntry(self.node.to_string()))?;
        if self.degree() == 0 {
            return Ok(extra.as_countable().is_some_and(|c| c.is_finite()));
        }
        for q in self.completions()? {
            if respects_le2(&q, t)?.holds() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

impl fmt::Display for PartialLevelLe2Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (d, q) = match &self.node {
            DomKey::Zero => (0, "-1".to_string()),
            DomKey::One(q) => (1, q.to_string()),
            DomKey::Two(q) => (2, q.to_string()),
        };
        write!(f, "({}, ({d}, {q}, {}))", self.base, self.tree)
    }
}

impl fmt::Debug for PartialLevelLe2Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(0, −1)` or a regular extended description.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Ucf {
    Zero,
    One(Node),
    Two(QDesc),
}

impl Ucf {
    pub fn as_description(&self) -> Option<Description> {
        match self {
            Ucf::Zero => None,
            Ucf::One(p) => Some(Description::One(p.clone())),
            Ucf::Two(x) => Some(Description::Two(x.clone())),
        }
    }
}

impl fmt::Display for Ucf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ucf::Zero => write!(f, "(0, -1)"),
            Ucf::One(p) => write!(f, "(1, {p})"),
            Ucf::Two(x) => write!(f, "(2, {x})"),
        }
    }
}

pub fn completion_le2(pt: &PartialLevelLe2Tree) -> Result<Vec<LevelLe2Tree>> {
    pt.completions()
}

/// `(Q_*, ((d_i, q_i, P_i))_i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PotentialTower2 {
    pub tree: LevelLe2Tree,
    pub labels: Vec<(DomKey, Level1Tree)>,
}

impl fmt::Display for PotentialTower2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, (", self.tree)?;
        for (i, (k, p)) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({k}, {p})")?;
        }
        write!(f, "))")
    }
}

fn by_length<V>(m: &BTreeMap<Key, V>) -> Vec<(&Key, &V)> {
    let mut v: Vec<_> = m.iter().collect();
    v.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
    v
}

/// A finite level-3 tree `R`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Level3Tree {
    entries: BTreeMap<Key, PartialLevelLe2Tree>,
}

impl Level3Tree {
    pub fn empty() -> Self {
        Level3Tree::default()
    }

    pub fn validate(raw: impl IntoIterator<Item = (Key, PartialLevelLe2Tree)>) -> Result<Self> {
        let entries: BTreeMap<Key, PartialLevelLe2Tree> = raw.into_iter().collect();
        if entries.contains_key(&Key::empty()) {
            return Err(Error::EmptyKeyPresent);
        }
        let mut dom: BTreeSet<Key> = entries.keys().cloned().collect();
        dom.insert(Key::empty());
        check_tree_of_trees(&dom).map_err(Error::DomainNotTree)?;
        for (r, pt) in by_length(&entries) {
            let ok = match r.parent() {
                Some(parent) if !parent.is_empty() => entries[&parent].is_completion(pt.base()),
                _ => pt.base().card() == 1,
            };
            if !ok {
                return Err(Error::TowerViolation(r.clone()));
            }
        }
        Ok(Level3Tree { entries })
    }

    pub fn entries(&self) -> &BTreeMap<Key, PartialLevelLe2Tree> {
        &self.entries
    }

    pub fn dom(&self) -> impl Iterator<Item = &Key> {
        self.entries.keys()
    }

    pub fn card(&self) -> usize {
        self.entries.len()
    }

    pub fn is_regular(&self) -> bool {
        !self.entries.contains_key(&Key::new(vec![Node::from([1])]))
    }

    pub fn is_subtree_of(&self, other: &Level3Tree) -> bool {
        self.entries
            .iter()
            .all(|(k, v)| other.entries.get(k) == Some(v))
    }

    fn entry(&self, r: &Key) -> Result<&PartialLevelLe2Tree> {
        self.entries
            .get(r)
            .ok_or_else(|| Error::MissingEntry(r.to_string()))
    }

    pub fn tree(&self, r: &Key) -> Result<&LevelLe2Tree> {
        Ok(self.entry(r)?.base())
    }

    pub fn node(&self, r: &Key) -> Result<&DomKey> {
        Ok(self.entry(r)?.node())
    }

    fn labels(&self, r: &Key) -> Result<Vec<(DomKey, Level1Tree)>> {
        (1..=r.len())
            .map(|l| {
                let e = self.entry(&r.prefix(l))?;
                Ok((e.node().clone(), e.tree().clone()))
            })
            .collect()
    }

    /// `R[r]`.
    pub fn bracket(&self, r: &Key) -> Result<PotentialTower2> {
        Ok(PotentialTower2 {
            tree: self.tree(r)?.clone(),
            labels: self.labels(r)?,
        })
    }

    /// `R[r, Q]` for a completion `Q` of `R(r)`.
    pub fn bracket_with(&self, r: &Key, q: &LevelLe2Tree) -> Result<PotentialTower2> {
        if !self.entry(r)?.is_completion(q) {
            return Err(Error::NotTower(format!("{q} is not a completion of R({r})")));
        }
        Ok(PotentialTower2 {
            tree: q.clone(),
            labels: self.labels(r)?,
        })
    }

    /// `R{r}` for `r ∈ dom(R) ∪ {∅}`.
    pub fn children(&self, r: &Key) -> Level1Tree {
        let kids = self
            .entries
            .keys()
            .filter(|k| k.parent().as_ref() == Some(r))
            .map(|k| k.last().unwrap().clone());
        Level1Tree::validate(kids).expect("domain is a tree of level-1 trees")
    }

    /// `dom*(R)`.
    pub fn dom_star(&self) -> Vec<StarKey> {
        let mut out: Vec<StarKey> = self.entries.keys().map(Key::star).collect();
        out.extend(self.entries.keys().map(Key::with_minus));
        out.sort();
        out
    }

    fn siblings(&self, r: &Key) -> Result<Vec<Key>> {
        let tree = self.tree(r)?;
        let parent = r.parent().ok_or(Error::EmptyKeyPresent)?;
        Ok(self
            .entries
            .iter()
            .filter(|(k, e)| k.parent().as_ref() == Some(&parent) && e.base() == tree)
            .map(|(k, _)| k.clone())
            .collect())
    }

    /// `R{r,−}`.
    pub fn minus_set(&self, r: &Key) -> Result<Vec<StarKey>> {
        let last = r.last().ok_or(Error::EmptyKeyPresent)?;
        let mut out = vec![r.parent().unwrap().with_minus()];
        out.extend(
            self.siblings(r)?
                .into_iter()
                .filter(|k| k.last().unwrap() < last)
                .map(|k| k.star()),
        );
        out.sort();
        Ok(out)
    }

    /// `R{r,+}`.
    pub fn plus_set(&self, r: &Key) -> Result<Vec<Key>> {
        let last = r.last().ok_or(Error::EmptyKeyPresent)?;
        let mut out = vec![r.parent().unwrap()];
        out.extend(
            self.siblings(r)?
                .into_iter()
                .filter(|k| k.last().unwrap() > last),
        );
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for Level3Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<<")?;
        for (i, (r, e)) in by_length(&self.entries).into_iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{r} -> {e}")?;
        }
        write!(f, ">>")
    }
}

impl fmt::Debug for Level3Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One slot of `β⃗ ⊕_R r`: nodes of `r` (or `−1`) alternating with ordinals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Slot3 {
    Node(ExtNode),
    Ord(UOrd),
}

impl Ord for Slot3 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Slot3::Node(a), Slot3::Node(b)) => a.cmp(b),
            (Slot3::Ord(a), Slot3::Ord(b)) => a.cmp(b),
            (Slot3::Node(_), Slot3::Ord(_)) => Ordering::Less,
            (Slot3::Ord(_), Slot3::Node(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Slot3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `β⃗ ⊕_R r` for `r ∈ dom*(R)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rep3Element {
    pub beta: OrdTuple,
    pub key: StarKey,
}

impl fmt::Display for Rep3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.beta.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        write!(f, "([{}] + {})", b.join(" "), self.key)
    }
}

/// Checks membership in `rep(R)` and returns the interleaved sequence.
pub fn rep3_sequence(r: &Level3Tree, x: &Rep3Element) -> Result<Vec<Slot3>> {
    let invalid = || Error::InvalidElement(x.to_string());
    let key = &x.key.key;
    let entry = r.entries.get(key).ok_or_else(invalid)?;
    let dom: BTreeSet<DomKey> = entry.base().dom().into_iter().collect();
    let ok = if x.key.minus {
        let mut full = dom.clone();
        full.insert(entry.node().clone());
        x.beta.keys().cloned().collect::<BTreeSet<_>>() == full && entry.respects(&x.beta)?
    } else {
        x.beta.keys().cloned().collect::<BTreeSet<_>>() == dom
            && respects_le2(entry.base(), &x.beta)?.holds()
    };
    if !ok {
        return Err(invalid());
    }
    let mut out = Vec::new();
    for (i, a) in key.nodes().iter().enumerate() {
        if i > 0 {
            let k = r.node(&key.prefix(i))?;
            out.push(Slot3::Ord(x.beta.get(k).ok_or_else(invalid)?.clone()));
        }
        out.push(Slot3::Node(ExtNode::Node(a.clone())));
    }
    if x.key.minus {
        out.push(Slot3::Ord(x.beta[entry.node()].clone()));
        out.push(Slot3::Node(ExtNode::Minus));
    }
    Ok(out)
}

pub fn rep3_compare(r: &Level3Tree, x: &Rep3Element, y: &Rep3Element) -> Result<Ordering> {
    Ok(bk_compare(&rep3_sequence(r, x)?, &rep3_sequence(r, y)?))
}

/// A finite level-3 tower `(R_i)_{i ≤ n}` with `card(R_i) = i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level3Tower {
    trees: Vec<Level3Tree>,
}

impl Level3Tower {
    pub fn validate(trees: Vec<Level3Tree>) -> Result<Self> {
        for (i, r) in trees.iter().enumerate() {
            if r.card() != i + 1 {
                return Err(Error::NotTower(format!("entry {i} has cardinality {}", r.card())));
            }
            if i > 0 && !trees[i - 1].is_subtree_of(r) {
                return Err(Error::NotTower(format!("entry {} is not a subtree of entry {i}", i - 1)));
            }
        }
        Ok(Level3Tower { trees })
    }

    pub fn trees(&self) -> &[Level3Tree] {
        &self.trees
    }

    pub fn is_regular(&self) -> bool {
        self.trees.iter().all(Level3Tree::is_regular)
    }

    /// The key that receives the `i`-th ordinal: the unique key of `R_0`,
    /// then the key added at each step.
    pub fn new_keys(&self) -> Vec<Key> {
        let mut out = Vec::new();
        let mut seen: BTreeSet<&Key> = BTreeSet::new();
        for r in &self.trees {
            for k in r.dom() {
                if seen.insert(k) {
                    out.push(k.clone());
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S3Variant {
    Minus,
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum S3Verdict {
    /// The tower part holds; the ordinal clause is not evaluated.
    StructurallyValid,
    Rejected(Error),
}

impl fmt::Display for S3Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            S3Verdict::StructurallyValid => {
                write!(f, "structurally-valid (ordinal clause not evaluated)")
            }
            S3Verdict::Rejected(e) => write!(f, "rejected ({e})"),
        }
    }
}

/// The regular-tower part of a node of `S₃⁻` or `S₃`. Both variants differ
/// only in the ordinal clause, which is out of reach here.
pub fn s3_structural_member(trees: &[Level3Tree], _variant: S3Variant) -> S3Verdict {
    let tower = match Level3Tower::validate(trees.to_vec()) {
        Ok(t) => t,
        Err(e) => return S3Verdict::Rejected(e),
    };
    if let Some(i) = tower.trees().iter().position(|r| !r.is_regular()) {
        return S3Verdict::Rejected(Error::NotRegular(i));
    }
    S3Verdict::StructurallyValid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level2::{typical_trees, witness_tuple, DescKind};

    fn n(v: &[u32]) -> Node {
        Node::new(v.to_vec())
    }

    fn t(nodes: &[&[u32]]) -> Level1Tree {
        Level1Tree::validate(nodes.iter().map(|x| n(x))).unwrap()
    }

    fn key(nodes: &[&[u32]]) -> Key {
        Key::new(nodes.iter().map(|x| n(x)).collect())
    }

    #[test]
    fn partial_cases() {
        let [q0, q1, _, q21] = typical_trees();
        let z = PartialLevelLe2Tree::new(q0.clone(), DomKey::Zero, Level1Tree::empty()).unwrap();
        assert_eq!(z.degree(), 0);
        assert_eq!(z.ucf(), Ucf::Zero);
        assert_eq!(z.cf3(), 0);
        assert_eq!(z.completions(), Err(Error::DegreeZero));

        let one = PartialLevelLe2Tree::new(q0.clone(), DomKey::One(n(&[0])), Level1Tree::empty())
            .unwrap();
        assert_eq!(one.ucf(), Ucf::Two(QDesc::constant()));
        assert_eq!(one.cf3(), 1);
        assert_eq!(one.completions().unwrap(), vec![q1.clone()]);

        let lower = PartialLevelLe2Tree::new(q1.clone(), DomKey::One(n(&[0, 0])), Level1Tree::empty())
            .unwrap();
        assert_eq!(lower.cf3(), 1);
        assert_eq!(lower.ucf_case(), (Ucf::One(n(&[0])), 2));
        let right = PartialLevelLe2Tree::new(q1, DomKey::One(n(&[1])), Level1Tree::empty()).unwrap();
        assert_eq!(right.cf3(), 2);

        let two = PartialLevelLe2Tree::new(
            q21.clone(),
            DomKey::Two(key(&[&[0], &[0]])),
            t(&[&[0], &[0, 0]]),
        )
        .unwrap();
        let (u, case) = two.ucf_case();
        assert_eq!(case, 5);
        assert_eq!(u.to_string(), "(2, (((0)), {(0) (0 0)}, ((0) (0 0))))");
        assert_eq!(q21.classify(&u.as_description().unwrap()), DescKind::ExtendedOnly);

        assert!(PartialLevelLe2Tree::new(q21, DomKey::Two(key(&[&[0], &[0]])), t(&[&[0]])).is_err());
    }

    #[test]
    fn case_four() {
        let [_, _, _, q21] = typical_trees();
        let wider = q21
            .t2
            .extend(key(&[&[1]]), PartialLevel1Tree::new(t(&[&[0]]), ExtNode::Minus).unwrap())
            .unwrap();
        let base = LevelLe2Tree::new(Level1Tree::empty(), wider);
        let pt = PartialLevelLe2Tree::new(base, DomKey::Two(key(&[&[0, 0]])), t(&[&[0]])).unwrap();
        let (u, case) = pt.ucf_case();
        assert_eq!(case, 4);
        assert_eq!(u.to_string(), "(2, (((0)), {(0)}, ((0) (0 0))))");
    }

    #[test]
    fn completions_of_level2_extension() {
        let [q0, _, q20, q21] = typical_trees();
        let pt = PartialLevelLe2Tree::new(q0, DomKey::Two(key(&[&[0]])), t(&[&[0]])).unwrap();
        assert_eq!(pt.completions().unwrap(), vec![q21, q20]);
    }

    fn single(pt: PartialLevelLe2Tree) -> Level3Tree {
        Level3Tree::validate([(key(&[&[0]]), pt)]).unwrap()
    }

    #[test]
    fn level3_validation() {
        let [q0, q1, ..] = typical_trees();
        let zero = PartialLevelLe2Tree::new(q0.clone(), DomKey::Zero, Level1Tree::empty()).unwrap();
        let one = PartialLevelLe2Tree::new(q0, DomKey::One(n(&[0])), Level1Tree::empty()).unwrap();
        let r = single(zero.clone());
        assert!(r.is_regular());
        assert_eq!(
            Level3Tree::validate([(Key::empty(), zero.clone())]),
            Err(Error::EmptyKeyPresent)
        );
        let wide = Level3Tree::validate([(key(&[&[0]]), zero.clone()), (key(&[&[1]]), zero.clone())])
            .unwrap();
        assert!(!wide.is_regular());
        let deep = Level3Tree::validate([
            (key(&[&[0]]), one.clone()),
            (
                key(&[&[0], &[0]]),
                PartialLevelLe2Tree::new(q1.clone(), DomKey::Zero, Level1Tree::empty()).unwrap(),
            ),
        ])
        .unwrap();
        assert_eq!(deep.bracket(&key(&[&[0], &[0]])).unwrap().labels.len(), 2);
        assert_eq!(
            Level3Tree::validate([(key(&[&[0]]), zero), (key(&[&[0], &[0]]), one)]),
            Err(Error::TowerViolation(key(&[&[0], &[0]])))
        );
    }

    #[test]
    fn rep3_order() {
        let [q0, ..] = typical_trees();
        let one = PartialLevelLe2Tree::new(q0.clone(), DomKey::One(n(&[0])), Level1Tree::empty())
            .unwrap();
        let r = single(one.clone());
        let beta = witness_tuple(&q0).unwrap();
        let top = Rep3Element {
            beta: beta.clone(),
            key: key(&[&[0]]).star(),
        };
        let mut ext = beta.clone();
        ext.insert(DomKey::One(n(&[0])), UOrd::countable(crate::ordinal::CtblOrd::omega()));
        let below = Rep3Element {
            beta: ext,
            key: key(&[&[0]]).with_minus(),
        };
        assert_eq!(rep3_compare(&r, &below, &top).unwrap(), Ordering::Less);
        assert_eq!(rep3_compare(&r, &top, &top).unwrap(), Ordering::Equal);
    }

    #[test]
    fn s3_structure() {
        let [q0, ..] = typical_trees();
        let zero = PartialLevelLe2Tree::new(q0, DomKey::Zero, Level1Tree::empty()).unwrap();
        assert_eq!(s3_structural_member(&[], S3Variant::Plain), S3Verdict::StructurallyValid);
        let r0 = single(zero.clone());
        let r1 = Level3Tree::validate([(key(&[&[0]]), zero.clone()), (key(&[&[0, 0]]), zero.clone())])
            .unwrap();
        assert_eq!(
            s3_structural_member(&[r0.clone(), r1], S3Variant::Minus),
            S3Verdict::StructurallyValid
        );
        let bad = Level3Tree::validate([(key(&[&[0]]), zero.clone()), (key(&[&[1]]), zero)]).unwrap();
        assert_eq!(
            s3_structural_member(&[r0, bad], S3Variant::Plain),
            S3Verdict::Rejected(Error::NotRegular(1))
        );
    }
}

//! Ordinal tuples indexed by `dom(Q)`: respect, weak respect, description
//! values, recovery of the tree, and node membership in `S₂`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::partial::PartialLevel1Tree;
use super::tree::{DescKind, Description, DomKey, Level2Tree, LevelLe2Tree};
use crate::analysis::analyze;
use crate::error::{Error, Result};
use crate::level1::{respects_level1, tree_embed, tree_embed_sup, Level1Tree};
use crate::node::{ExtNode, Key, Node};
use crate::ordinal::{CtblOrd, UOrd};

/// `(ᵈβ_q)_{(d,q) ∈ dom(Q)}`.
pub type OrdTuple2 = BTreeMap<DomKey, UOrd>;

/// Outcome of a respect check; `clause` names the first failing clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub clause: Option<u8>,
    pub detail: String,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            clause: None,
            detail: String::new(),
        }
    }

    fn fail(clause: u8, detail: impl Into<String>) -> Self {
        Verdict {
            clause: Some(clause),
            detail: detail.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.clause.is_none()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.clause {
            None => write!(f, "true"),
            Some(c) => write!(f, "false clause={c} ({})", self.detail),
        }
    }
}

fn lookup<'a>(t: &'a OrdTuple2, k: &DomKey) -> Result<&'a UOrd> {
    t.get(k).ok_or_else(|| Error::MissingEntry(k.to_string()))
}

fn beta<'a>(t: &'a OrdTuple2, q: &Key) -> Result<&'a UOrd> {
    lookup(t, &DomKey::Two(q.clone()))
}

fn check_level1(q: &LevelLe2Tree, t: &OrdTuple2) -> Result<Option<Verdict>> {
    let mut alpha = BTreeMap::new();
    for p in q.t1.nodes() {
        let v = lookup(t, &DomKey::One(p.clone()))?;
        match v.as_countable() {
            Some(c) => {
                alpha.insert(p.clone(), c.clone());
            }
            None => return Ok(Some(Verdict::fail(1, format!("entry at {p} is {v}")))),
        }
    }
    if !respects_level1(&q.t1, &alpha) {
        return Ok(Some(Verdict::fail(1, "level-1 part does not respect the tree")));
    }
    Ok(None)
}

fn check_root(t: &OrdTuple2) -> Result<Option<Verdict>> {
    let b = beta(t, &Key::empty())?;
    if *b != UOrd::u(1) {
        return Ok(Some(Verdict::fail(2, format!("entry at () is {b}, not u1"))));
    }
    Ok(None)
}

pub fn respects_le2(q: &LevelLe2Tree, t: &OrdTuple2) -> Result<Verdict> {
    if let Some(v) = check_level1(q, t)? {
        return Ok(v);
    }
    if let Some(v) = check_root(t)? {
        return Ok(v);
    }
    for key in q.t2.dom().filter(|k| !k.is_empty()) {
        let b = beta(t, key)?;
        let a = match analyze(b, q.t2.tree(key)?) {
            Ok(a) => a,
            Err(e) => return Ok(Verdict::fail(2, format!("entry at {key}: {e}"))),
        };
        let expected = q.t2.bracket(key)?;
        if a.potential_tower != expected {
            return Ok(Verdict::fail(
                2,
                format!("entry at {key} induces {}, not {expected}", a.potential_tower),
            ));
        }
        for (l, approx) in a.approximations.iter().enumerate() {
            let prefix = beta(t, &key.prefix(l))?;
            if approx != prefix {
                return Ok(Verdict::fail(
                    2,
                    format!("approximation {l} of the entry at {key} is {approx}, not {prefix}"),
                ));
            }
        }
    }
    for key in q.t2.dom() {
        let kids: Vec<Node> = q.t2.children(key).nodes().cloned().collect();
        for w in kids.windows(2) {
            let lo = beta(t, &key.push(w[0].clone()))?;
            let hi = beta(t, &key.push(w[1].clone()))?;
            if lo >= hi {
                return Ok(Verdict::fail(
                    3,
                    format!("children {} and {} of {key} are out of order", w[0], w[1]),
                ));
            }
        }
    }
    Ok(Verdict::pass())
}

pub fn weakly_respects_le2(q: &LevelLe2Tree, t: &OrdTuple2) -> Result<Verdict> {
    if let Some(v) = check_level1(q, t)? {
        return Ok(v);
    }
    if let Some(v) = check_root(t)? {
        return Ok(v);
    }
    for key in q.t2.dom().filter(|k| !k.is_empty()) {
        let parent = key.parent().unwrap();
        let b = beta(t, key)?;
        let bound = tree_embed(q.t2.tree(&parent)?, q.t2.tree(key)?, beta(t, &parent)?);
        match bound {
            Ok(bound) if *b < bound => {}
            Ok(bound) => {
                return Ok(Verdict::fail(2, format!("entry at {key} is {b}, not below {bound}")))
            }
            Err(e) => return Ok(Verdict::fail(2, format!("entry at {key}: {e}"))),
        }
    }
    Ok(Verdict::pass())
}

/// The value of a description under a respecting tuple.
pub fn evaluate_description(q: &LevelLe2Tree, t: &OrdTuple2, d: &Description) -> Result<UOrd> {
    let v = respects_le2(q, t)?;
    if !v.holds() {
        return Err(Error::NotRespecting(v.to_string()));
    }
    match (q.classify(d), d) {
        (DescKind::Invalid, _) => Err(Error::BadDescription(d.to_string())),
        (_, Description::One(p)) if p.is_empty() => Ok(UOrd::u(1)),
        (_, Description::One(p)) => Ok(lookup(t, &DomKey::One(p.clone()))?.clone()),
        (DescKind::Discontinuous, Description::Two(x)) => Ok(beta(t, &x.key.key)?.clone()),
        (DescKind::Continuous, Description::Two(x)) => {
            tree_embed_sup(q.t2.tree(&x.key.key)?, x.tree(), beta(t, &x.key.key)?)
        }
        (_, Description::Two(x)) => {
            tree_embed(q.t2.tree(&x.key.key)?, x.tree(), beta(t, &x.key.key)?)
        }
    }
}

/// The shape of `dom(Q)`: the level-1 nodes and the level-2 keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainShape {
    pub t1: Level1Tree,
    pub keys: BTreeSet<Key>,
}

impl DomainShape {
    pub fn of(q: &LevelLe2Tree) -> Self {
        DomainShape {
            t1: q.t1.clone(),
            keys: q.t2.dom().cloned().collect(),
        }
    }
}

/// Every level-2 tree with the given domain.
pub fn level2_trees_on(keys: &BTreeSet<Key>) -> Vec<Level2Tree> {
    let mut ordered: Vec<&Key> = keys.iter().filter(|k| !k.is_empty()).collect();
    ordered.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    if !keys.contains(&Key::empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut entries = BTreeMap::from([(Key::empty(), PartialLevel1Tree::root())]);
    label(&ordered, &mut entries, &mut out);
    out
}

fn label(
    rest: &[&Key],
    entries: &mut BTreeMap<Key, PartialLevel1Tree>,
    out: &mut Vec<Level2Tree>,
) {
    let Some((key, rest)) = rest.split_first() else {
        if let Ok(q) = Level2Tree::from_entries(entries.clone()) {
            out.push(q);
        }
        return;
    };
    let Ok(base) = entries[&key.parent().unwrap()].completion() else {
        return;
    };
    for pt in PartialLevel1Tree::all_on(&base) {
        entries.insert((*key).clone(), pt);
        label(rest, entries, out);
    }
    entries.remove(*key);
}

/// The unique level ≤2 tree on `shape` respected by `t`.
pub fn recover_tree(shape: &DomainShape, t: &OrdTuple2) -> Result<LevelLe2Tree> {
    let mut found = Vec::new();
    for t2 in level2_trees_on(&shape.keys) {
        let q = LevelLe2Tree::new(shape.t1.clone(), t2);
        if respects_le2(&q, t)?.holds() {
            found.push(q);
        }
    }
    match found.len() {
        0 => Err(Error::NoTreeFound),
        1 => Ok(found.pop().unwrap()),
        n => Err(Error::MultipleFound(n)),
    }
}

/// Whether a respecting tuple can be written in the additive fragment:
/// every label along `dom(²Q)` is a zero chain of the right length or `−1`.
pub fn witness_representable(q: &LevelLe2Tree) -> bool {
    q.t2.entries().iter().all(|(k, p)| match p.node() {
        ExtNode::Minus => true,
        ExtNode::Node(n) => *n == Node::zeros(k.len() + 1),
    })
}

/// A tuple respecting `Q`, when one is representable.
pub fn witness_tuple(q: &LevelLe2Tree) -> Option<OrdTuple2> {
    if !witness_representable(q) {
        return None;
    }
    let omega = CtblOrd::omega();
    let mut t = OrdTuple2::new();
    for (r, p) in q.t1.nodes().enumerate() {
        t.insert(
            DomKey::One(p.clone()),
            UOrd::countable(omega.mul_nat(r as u64 + 1)),
        );
    }
    t.insert(DomKey::Two(Key::empty()), UOrd::u(1));
    // coefficients of each key, highest level first
    let mut coeffs: BTreeMap<Key, Vec<CtblOrd>> = BTreeMap::from([(Key::empty(), Vec::new())]);
    let mut keys: Vec<&Key> = q.t2.dom().filter(|k| !k.is_empty()).collect();
    keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for key in keys {
        let parent = key.parent().unwrap();
        let mut c = coeffs[&parent].clone();
        if let Some(last) = c.last_mut() {
            *last = last.pred()?;
        }
        let siblings = q.t2.children(&parent);
        let s = siblings.nodes().position(|a| a == key.last().unwrap()).unwrap() as u64;
        let block = omega.mul_nat(s + 1);
        c.push(match q.t2.node(key).ok()? {
            ExtNode::Minus => block,
            ExtNode::Node(_) => block.add(&CtblOrd::nat(2)),
        });
        let m = c.len();
        let terms = c
            .iter()
            .enumerate()
            .map(|(l, x)| ((m - l) as u32, x.clone()))
            .collect();
        t.insert(
            DomKey::Two(key.clone()),
            UOrd::from_parts(terms, CtblOrd::zero())?,
        );
        coeffs.insert(key.clone(), c);
    }
    Some(t)
}

/// A finite level-2 tower `(Q_i)_{1 ≤ i ≤ n}`: `card(Q_i) = i` and each is a
/// subtree of the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level2Tower {
    trees: Vec<Level2Tree>,
}

impl Level2Tower {
    pub fn validate(trees: Vec<Level2Tree>) -> Result<Self> {
        for (i, q) in trees.iter().enumerate() {
            if q.card() != i + 1 {
                return Err(Error::InvalidTower(format!("entry {} has cardinality {}", i + 1, q.card())));
            }
            if i > 0 && !trees[i - 1].is_subtree_of(q) {
                return Err(Error::InvalidTower(format!("entry {i} is not a subtree of entry {}", i + 1)));
            }
        }
        Ok(Level2Tower { trees })
    }

    pub fn trees(&self) -> &[Level2Tree] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// The key `q_i` added at step `i`, so that `dom(Q_i) = {q_1, …, q_i}`.
    pub fn new_keys(&self) -> Vec<Key> {
        let mut prev: Option<&Level2Tree> = None;
        let mut out = Vec::new();
        for q in &self.trees {
            out.push(match prev {
                None => Key::empty(),
                Some(p) => p.new_key(q).expect("consecutive entries differ by one key"),
            });
            prev = Some(q);
        }
        out
    }

    pub fn truncate(&self, n: usize) -> Level2Tower {
        Level2Tower {
            trees: self.trees[..n].to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum S2Variant {
    Respects,
    Weak,
}

/// Node membership in `S₂⁻` (respecting) or `S₂` (weakly respecting).
pub fn s2_member(tower: &Level2Tower, alphas: &[UOrd], variant: S2Variant) -> Result<bool> {
    if alphas.len() != tower.len() {
        return Err(Error::LengthMismatch {
            expected: tower.len(),
            got: alphas.len(),
        });
    }
    let Some(last) = tower.trees().last() else {
        return Ok(true);
    };
    let t: OrdTuple2 = tower
        .new_keys()
        .into_iter()
        .map(DomKey::Two)
        .zip(alphas.iter().cloned())
        .collect();
    let q = LevelLe2Tree::new(Level1Tree::empty(), last.clone());
    let v = match variant {
        S2Variant::Respects => respects_le2(&q, &t)?,
        S2Variant::Weak => weakly_respects_le2(&q, &t)?,
    };
    Ok(v.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level2::typical_trees;

    fn k0() -> Key {
        Key::new(vec![Node::from([0])])
    }

    fn tuple(b: UOrd) -> OrdTuple2 {
        OrdTuple2::from([
            (DomKey::Two(Key::empty()), UOrd::u(1)),
            (DomKey::Two(k0()), b),
        ])
    }

    #[test]
    fn discriminating_pairs() {
        let [_, _, q20, q21] = typical_trees();
        let two = tuple(UOrd::u_times(1, CtblOrd::nat(2)));
        let omega = tuple(UOrd::u_times(1, CtblOrd::omega()));
        assert!(respects_le2(&q21, &two).unwrap().holds());
        assert_eq!(respects_le2(&q20, &two).unwrap().clause, Some(2));
        assert!(respects_le2(&q20, &omega).unwrap().holds());
        assert!(!respects_le2(&q21, &omega).unwrap().holds());
        assert!(weakly_respects_le2(&q21, &two).unwrap().holds());
        assert!(!weakly_respects_le2(&q21, &tuple(UOrd::u(2))).unwrap().holds());
        assert_eq!(
            respects_le2(&q21, &OrdTuple2::new()),
            Err(Error::MissingEntry("2:()".into()))
        );
    }

    #[test]
    fn evaluation() {
        let [_, _, _, q21] = typical_trees();
        let t = tuple(UOrd::u_times(1, CtblOrd::nat(2)));
        let values: Vec<(String, String)> = q21
            .descriptions()
            .iter()
            .map(|d| (d.to_string(), evaluate_description(&q21, &t, d).unwrap().to_string()))
            .collect();
        assert!(values.contains(&("(2, (((0) -1), {(0) (0 0)}, ((0) (0 0))))".into(), "u2 + u1".into())));
        assert!(values.contains(&("(2, (((0)), {(0)}, ((0) (0 0))))".into(), "u1*2".into())));
        assert!(values.contains(&("(2, ((), {}, ((0))))".into(), "u1".into())));
    }

    #[test]
    fn recovery() {
        let [_, _, q20, q21] = typical_trees();
        let shape = DomainShape::of(&q21);
        assert_eq!(level2_trees_on(&shape.keys).len(), 2);
        assert_eq!(recover_tree(&shape, &tuple(UOrd::u_times(1, CtblOrd::nat(2)))).unwrap(), q21);
        assert_eq!(recover_tree(&shape, &tuple(UOrd::u_times(1, CtblOrd::omega()))).unwrap(), q20);
        assert_eq!(recover_tree(&shape, &tuple(UOrd::u(2))), Err(Error::NoTreeFound));
    }

    #[test]
    fn witnesses() {
        for q in typical_trees() {
            let t = witness_tuple(&q).unwrap();
            assert!(respects_le2(&q, &t).unwrap().holds(), "{q}");
        }
    }

    #[test]
    fn s2_examples() {
        let [_, _, _, q21] = typical_trees();
        let tower = Level2Tower::validate(vec![Level2Tree::root(), q21.t2.clone()]).unwrap();
        let ok = [UOrd::u(1), UOrd::u_times(1, CtblOrd::nat(2))];
        let bad = [UOrd::u(1), UOrd::u(2)];
        for v in [S2Variant::Respects, S2Variant::Weak] {
            assert!(s2_member(&tower.truncate(1), &ok[..1], v).unwrap());
            assert!(s2_member(&tower, &ok, v).unwrap());
            assert!(!s2_member(&tower, &bad, v).unwrap());
        }
    }
}

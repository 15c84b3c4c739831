//! `rep(Q)` and `<^Q`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::partial::PartialLevel1Tree;
use super::tree::LevelLe2Tree;
use crate::bk::bk_compare;
use crate::error::{Error, Result};
use crate::level1::{respects_level1, Rep1Element};
use crate::node::{ExtNode, Key, Node, StarKey};
use crate::ordinal::CtblOrd;

/// One slot of `α⃗ ⊕_Q q`: even slots are ordinals, odd slots are nodes or `−1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Slot {
    Ord(CtblOrd),
    Node(ExtNode),
}

impl Ord for Slot {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Slot::Ord(a), Slot::Ord(b)) => a.cmp(b),
            (Slot::Node(a), Slot::Node(b)) => a.cmp(b),
            (Slot::Ord(_), Slot::Node(_)) => Ordering::Less,
            (Slot::Node(_), Slot::Ord(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Slot {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Ord(a) => write!(f, "{a}"),
            Slot::Node(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Rep2Element {
    One(Rep1Element),
    /// `α⃗ ⊕_Q q` for `q ∈ dom(Q)`, or `q ⧺ (−1)` when `key.minus`.
    Two {
        alpha: BTreeMap<ExtNode, CtblOrd>,
        key: StarKey,
    },
}

impl Rep2Element {
    /// `∅ ⊕_Q ∅`, the greatest element.
    pub fn top() -> Self {
        Rep2Element::Two {
            alpha: BTreeMap::new(),
            key: Key::empty().star(),
        }
    }
}

impl fmt::Display for Rep2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rep2Element::One(x) => write!(f, "(1, {x})"),
            Rep2Element::Two { alpha, key } => {
                let a: Vec<String> = alpha.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                write!(f, "(2, [{}] + {key})", a.join(" "))
            }
        }
    }
}

/// Whether `α⃗` respects the partial tree `(P, t)`: `α⃗↾P` respects `P`,
/// and `α_t` is finite when `t = −1`, or `α⃗` respects the completion.
pub fn respects_partial(pt: &PartialLevel1Tree, alpha: &BTreeMap<ExtNode, CtblOrd>) -> bool {
    let Some(a) = alpha.get(pt.node()) else {
        return false;
    };
    if alpha.len() != pt.card() {
        return false;
    }
    match pt.node() {
        ExtNode::Minus => a.is_finite() && respects_on(pt.base().nodes(), alpha),
        ExtNode::Node(_) => match pt.completion() {
            Ok(done) => respects_on(done.nodes(), alpha),
            Err(_) => false,
        },
    }
}

fn respects_on<'a>(
    nodes: impl Iterator<Item = &'a Node>,
    alpha: &BTreeMap<ExtNode, CtblOrd>,
) -> bool {
    let mut plain = BTreeMap::new();
    let mut tree = Vec::new();
    for p in nodes {
        match alpha.get(&ExtNode::Node(p.clone())) {
            Some(a) => {
                plain.insert(p.clone(), a.clone());
                tree.push(p.clone());
            }
            None => return false,
        }
    }
    match crate::level1::Level1Tree::validate(tree) {
        Ok(t) => respects_level1(&t, &plain),
        Err(_) => false,
    }
}

/// Checks membership in `rep(Q)` and returns the interleaved sequence.
pub fn rep2_sequence(q: &LevelLe2Tree, x: &Rep2Element) -> Result<Vec<Slot>> {
    let invalid = || Error::InvalidElement(x.to_string());
    let Rep2Element::Two { alpha, key } = x else {
        return Err(invalid());
    };
    let entry = q.t2.get(&key.key).ok_or_else(invalid)?;
    let ok = if key.minus {
        respects_partial(entry, alpha)
    } else {
        alpha.len() == entry.base().card() && respects_on(entry.base().nodes(), alpha)
    };
    if !ok {
        return Err(invalid());
    }
    let mut out = Vec::new();
    for (i, a) in key.key.nodes().iter().enumerate() {
        let p = q.t2.node(&key.key.prefix(i))?;
        out.push(Slot::Ord(alpha.get(p).ok_or_else(invalid)?.clone()));
        out.push(Slot::Node(ExtNode::Node(a.clone())));
    }
    if key.minus {
        out.push(Slot::Ord(alpha[entry.node()].clone()));
        out.push(Slot::Node(ExtNode::Minus));
    }
    Ok(out)
}

pub fn rep2_compare(q: &LevelLe2Tree, x: &Rep2Element, y: &Rep2Element) -> Result<Ordering> {
    match (x, y) {
        (Rep2Element::One(a), Rep2Element::One(b)) => q
            .t1
            .rep_compare(a, b)
            .map_err(|_| Error::InvalidElement(format!("{x} or {y}"))),
        (Rep2Element::One(a), Rep2Element::Two { .. }) => {
            check_one(q, a)?;
            rep2_sequence(q, y)?;
            Ok(Ordering::Less)
        }
        (Rep2Element::Two { .. }, Rep2Element::One(b)) => {
            check_one(q, b)?;
            rep2_sequence(q, x)?;
            Ok(Ordering::Greater)
        }
        _ => Ok(bk_compare(&rep2_sequence(q, x)?, &rep2_sequence(q, y)?)),
    }
}

fn check_one(q: &LevelLe2Tree, a: &Rep1Element) -> Result<()> {
    if q.t1.in_rep(a) {
        Ok(())
    } else {
        Err(Error::InvalidElement(a.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level2::typical_trees;

    fn w(k: u64) -> CtblOrd {
        CtblOrd::omega().mul_nat(k)
    }

    fn cofinal(b: CtblOrd) -> Rep2Element {
        Rep2Element::Two {
            alpha: BTreeMap::from([(ExtNode::Node(Node::from([0])), b)]),
            key: Key::empty().with_minus(),
        }
    }

    #[test]
    fn top_and_cofinal() {
        let [q0, ..] = typical_trees();
        let top = Rep2Element::top();
        assert_eq!(rep2_compare(&q0, &top, &top).unwrap(), Ordering::Equal);
        assert_eq!(rep2_compare(&q0, &cofinal(w(1)), &top).unwrap(), Ordering::Less);
        assert_eq!(
            rep2_compare(&q0, &cofinal(w(1)), &cofinal(w(2))).unwrap(),
            Ordering::Less
        );
        assert!(rep2_compare(&q0, &cofinal(CtblOrd::nat(3)), &top).is_err());
    }

    #[test]
    fn children_sit_between() {
        let [_, _, _, q21] = typical_trees();
        let k = Key::new(vec![Node::from([0])]);
        let child = Rep2Element::Two {
            alpha: BTreeMap::from([(ExtNode::Node(Node::from([0])), w(3))]),
            key: k.star(),
        };
        let below = Rep2Element::Two {
            alpha: BTreeMap::from([
                (ExtNode::Node(Node::from([0])), w(3)),
                (ExtNode::Node(Node::from([0, 0])), w(2)),
            ]),
            key: k.with_minus(),
        };
        assert_eq!(rep2_compare(&q21, &below, &child).unwrap(), Ordering::Less);
        assert_eq!(rep2_compare(&q21, &child, &cofinal(w(3))).unwrap(), Ordering::Greater);
        assert_eq!(rep2_compare(&q21, &child, &cofinal(w(4))).unwrap(), Ordering::Less);
        let one = Rep2Element::One(Rep1Element::Top(Node::from([0])));
        assert!(rep2_compare(&q21, &one, &child).is_err());
    }
}

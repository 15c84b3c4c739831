//! Signature, uniform cofinality, induced tower and approximation sequence
//! of a limit ordinal `u_1 ≤ β < u_{card(W)+1}` written over `W`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::level1::{Factoring, Level1Tower, Level1Tree};
use crate::level2::PotentialTower;
use crate::node::{ExtNode, Node};
use crate::ordinal::{CtblOrd, Cofinality, UOrd};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrdAnalysis {
    /// `(w_i)_{i<m}`, nodes of `W` in decreasing seed order.
    pub signature: Vec<Node>,
    pub seeds: Vec<UOrd>,
    pub essentially_continuous: bool,
    pub uniform_cofinality: Cofinality,
    pub induced_tower: Level1Tower,
    pub factoring_map: Factoring,
    pub approximations: Vec<UOrd>,
    pub potential_tower: PotentialTower,
}

impl OrdAnalysis {
    pub fn m(&self) -> usize {
        self.signature.len()
    }
}

impl fmt::Display for OrdAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig: Vec<String> = self.signature.iter().map(ToString::to_string).collect();
        let approx: Vec<String> = self.approximations.iter().map(ToString::to_string).collect();
        write!(
            f,
            "signature=[{}] continuous={} ucf={} tower={} approximations=[{}]",
            sig.join(" "),
            self.essentially_continuous,
            self.uniform_cofinality,
            self.potential_tower,
            approx.join(", ")
        )
    }
}

pub fn analyze(b: &UOrd, w: &Level1Tree) -> Result<OrdAnalysis> {
    if b.below_u(1) {
        return Err(Error::BelowOmega1);
    }
    let ucf = b.cf_l();
    if !matches!(ucf, Cofinality::Omega | Cofinality::U(_)) {
        return Err(Error::NotALimit);
    }
    if !b.below_u(w.card() as u32 + 1) {
        return Err(Error::OutOfRange(format!(
            "{b} is not below u{}",
            w.card() + 1
        )));
    }
    let terms = b.terms();
    let m = terms.len();
    let signature: Vec<Node> = terms
        .iter()
        .map(|(k, _)| w.desc_at(*k as usize - 1).expect("level within range"))
        .collect();
    let seeds: Vec<UOrd> = terms.iter().map(|(k, _)| UOrd::u(*k)).collect();

    let chain: Vec<Node> = (1..=m).map(Node::zeros).collect();
    let induced_tower = Level1Tower::from_nodes(&chain)?;
    let p_m = induced_tower.last().unwrap().clone();
    let map: BTreeMap<Node, Node> = chain.iter().cloned().zip(signature.iter().cloned()).collect();
    let factoring_map = Factoring::new(&p_m, w, &map)?;

    let (_, last_c) = terms.last().unwrap();
    let essentially_continuous = b.tail().is_zero() && *last_c == CtblOrd::one();

    let mut nodes: Vec<ExtNode> = chain.iter().cloned().map(ExtNode::Node).collect();
    if !essentially_continuous {
        match ucf {
            Cofinality::Omega => nodes.push(ExtNode::Minus),
            _ => nodes.push(ExtNode::Node(Node::zeros(m + 1))),
        }
    }
    let potential_tower = PotentialTower::new(p_m, nodes)?;

    Ok(OrdAnalysis {
        signature,
        seeds,
        essentially_continuous,
        uniform_cofinality: ucf,
        induced_tower,
        factoring_map,
        approximations: approximations(b),
        potential_tower,
    })
}

/// `β_0 = u_1`; `β_i` for `0 < i < m` keeps the first `i` coefficients on
/// levels `u_i, …, u_1` and adds `u_1`; `β_m` keeps all of them plus the tail.
pub fn approximations(b: &UOrd) -> Vec<UOrd> {
    let terms = b.terms();
    let m = terms.len();
    let mut out = vec![UOrd::u(1)];
    for i in 1..=m {
        let relabelled: Vec<(u32, CtblOrd)> = terms[..i]
            .iter()
            .enumerate()
            .map(|(l, (_, c))| ((i - l) as u32, c.clone()))
            .collect();
        let head = UOrd::from_parts(relabelled, CtblOrd::zero()).unwrap();
        out.push(if i < m {
            head.add(&UOrd::u(1))
        } else {
            head.add(&UOrd::countable(b.tail().clone()))
        });
    }
    out
}

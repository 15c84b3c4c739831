//! Independent reference computations used to cross-check the kernel.

use std::collections::BTreeMap;
use std::cmp::Ordering;

use crate::analysis::approximations;
use crate::error::{Error, Result};
use crate::level1::{Level1Tree, Rep1Element};
use crate::node::Node;
use crate::ordinal::{apply_shift, decompose_shift, Cofinality, CtblOrd, IndexMap, UOrd};

const SAMPLE: u64 = 3;
const FAR: u64 = 1 << 40;

/// Order type of `rep(P)` by transfinite rank computation.
///
/// Each node `p` contributes the family `(p, n)`. Only `n ≤ SAMPLE` is kept
/// explicitly; a family lies wholly below `x` when `(p, FAR)` does, and its
/// supremum is then `rank(p, SAMPLE) + ω`.
pub fn rank_order_type(p: &Level1Tree) -> CtblOrd {
    let cmp = |x: &Rep1Element, y: &Rep1Element| p.rep_compare(x, y).expect("elements of rep(P)");
    let mut finite: Vec<Rep1Element> = Vec::new();
    for q in p.nodes() {
        finite.push(Rep1Element::Top(q.clone()));
        for n in 0..=SAMPLE {
            finite.push(Rep1Element::Pair(q.clone(), n));
        }
    }
    finite.sort_by(cmp);
    for q in p.nodes() {
        let lo = Rep1Element::Pair(q.clone(), SAMPLE);
        let hi = Rep1Element::Pair(q.clone(), FAR);
        let between = finite
            .iter()
            .any(|y| cmp(&lo, y) == Ordering::Less && cmp(y, &hi) == Ordering::Less);
        assert!(!between, "family of {q} is not a tail segment");
    }
    let mut rank: Vec<CtblOrd> = Vec::with_capacity(finite.len());
    for (i, x) in finite.iter().enumerate() {
        let mut r = CtblOrd::zero();
        for (j, y) in finite[..i].iter().enumerate() {
            if cmp(y, x) == Ordering::Less {
                r = r.max(rank[j].succ());
            }
        }
        for q in p.nodes() {
            if cmp(&Rep1Element::Pair(q.clone(), FAR), x) == Ordering::Less {
                let k = finite
                    .iter()
                    .position(|y| *y == Rep1Element::Pair(q.clone(), SAMPLE))
                    .unwrap();
                r = r.max(rank[k].add(&CtblOrd::omega()));
            }
        }
        rank.push(r);
    }
    let mut total = CtblOrd::zero();
    for (i, x) in finite.iter().enumerate() {
        total = total.max(rank[i].succ());
        if let Rep1Element::Pair(_, SAMPLE) = x {
            total = total.max(rank[i].add(&CtblOrd::omega()));
        }
    }
    total
}

/// `j^σ_sup(b)` by the decomposition `σ = σ_k ∘ τ_k` at a gap.
///
/// `τ_k` fixes every level below `k`, so `sup j^{τ_k}''(δ + u_k) = j^{τ_k}(δ) + u_k`,
/// and `σ_k` has no gap at `k`, so it is applied pointwise.
pub fn shift_sup_by_decomposition(sigma: &IndexMap, b: &UOrd) -> Result<UOrd> {
    let direct = apply_shift(sigma, b)?;
    match b.cf_l() {
        Cofinality::Omega => Ok(direct),
        Cofinality::U(k) if !sigma.has_gap_at(k) => Ok(direct),
        Cofinality::U(k) => {
            let (delta, _) = b.split_last_u().ok_or(Error::NotALimit)?;
            let (sigma_k, tau_k) = decompose_shift(sigma, k)?;
            let inner = apply_shift(&tau_k, &delta)?.add(&UOrd::u(k));
            apply_shift(&sigma_k, &inner)
        }
        _ => Err(Error::NotALimit),
    }
}

/// Evaluates `b` at a tuple on `tree`: `u_k ↦ γ` of the node with seed `u_k`.
pub fn evaluate(b: &UOrd, tree: &Level1Tree, gamma: &BTreeMap<Node, CtblOrd>) -> Option<CtblOrd> {
    let mut acc = CtblOrd::zero();
    for (k, c) in b.terms() {
        let node = tree.desc_at(*k as usize - 1)?;
        acc = acc.add(&gamma.get(&node)?.mul(c));
    }
    Some(acc.add(b.tail()))
}

/// `e[s]`, the `s`-th entry of the standard fundamental sequence of a limit.
pub fn fundamental(e: &CtblOrd, s: u64) -> CtblOrd {
    let (head, g) = e.split_last().expect("nonzero");
    let step = match g.pred() {
        Some(g1) => CtblOrd::term(g1, s),
        None => CtblOrd::omega_pow(fundamental(&g, s)),
    };
    head.add(&step)
}

/// `ω^{ω^j}`, additively and multiplicatively closed.
fn closed(j: u64) -> CtblOrd {
    CtblOrd::omega_pow(CtblOrd::omega_pow(CtblOrd::nat(j)))
}

/// Smallest `j` with every coefficient exponent and the tail below `ω^{ω^j}`
/// by a margin, or `None` outside the supported range.
fn headroom(b: &UOrd) -> Option<u64> {
    let mut j = 1;
    let parts = b.terms().iter().map(|(_, c)| c).chain(std::iter::once(b.tail()));
    for c in parts {
        if let Some(e) = c.leading_exponent() {
            let d = match e.leading_exponent() {
                None => 0,
                Some(x) => x.as_nat()?,
            };
            j = j.max(d + 1);
        }
    }
    Some(j)
}

/// Checks the approximation sequence of `b` (written over `w`) against
/// almost-everywhere evaluation on closed tuples.
///
/// With `α_{w_0} > … > α_{w_{m−1}}` closed and spread apart, `β_i` for
/// `0 < i < m` evaluated at `(α_{w_l})_{l<i}` must be the supremum of `b`
/// evaluated with the coordinates `w_i, …` free below `α_{w_{i−1}}`:
/// (a) every sample lies below it and (b) the samples are cofinal in it.
/// `β_m` must evaluate to `b` itself.
pub fn check_approximations(b: &UOrd, w: &Level1Tree) -> std::result::Result<(), String> {
    let m = b.terms().len();
    let sig: Vec<Node> = b
        .terms()
        .iter()
        .map(|(k, _)| w.desc_at(*k as usize - 1).expect("level in range"))
        .collect();
    let base = headroom(b).ok_or_else(|| format!("{b}: coefficients outside the oracle range"))?;
    let spread = base + 2;
    let js: Vec<u64> = (0..m).map(|l| spread * (m - l) as u64 + base).collect();
    let alpha: Vec<CtblOrd> = js.iter().map(|&j| closed(j)).collect();
    let on_w = |vals: &[CtblOrd]| -> BTreeMap<Node, CtblOrd> {
        sig.iter().cloned().zip(vals.iter().cloned()).collect()
    };
    let approx = approximations(b);
    let full = evaluate(b, w, &on_w(&alpha)).ok_or("evaluation failed")?;
    let chain = |i: usize| -> Level1Tree {
        Level1Tree::validate((1..=i).map(Node::zeros)).expect("zero chain")
    };
    let on_chain = |vals: &[CtblOrd]| -> BTreeMap<Node, CtblOrd> {
        vals.iter()
            .enumerate()
            .map(|(l, a)| (Node::zeros(l + 1), a.clone()))
            .collect()
    };
    let top = evaluate(&approx[m], &chain(m), &on_chain(&alpha)).ok_or("evaluation failed")?;
    if top != full {
        return Err(format!("{b}: last approximation evaluates to {top}, expected {full}"));
    }
    for i in 1..m {
        let v = evaluate(&approx[i], &chain(i), &on_chain(&alpha[..i]))
            .ok_or("evaluation failed")?;
        let below = js[i - 1] - 1;
        let mut samples = Vec::new();
        for t in 1..=8u64 {
            let mut vals = alpha[..i].to_vec();
            for l in i..m {
                let e = CtblOrd::term(CtblOrd::nat(below), t * (m - l) as u64);
                vals.push(CtblOrd::omega_pow(e));
            }
            samples.push(evaluate(b, w, &on_w(&vals)).ok_or("evaluation failed")?);
        }
        if let Some(s) = samples.iter().find(|s| **s >= v) {
            return Err(format!("{b}: β_{i} = {v} is not above the sample {s}"));
        }
        let (trimmed, e) = v.split_last().expect("nonzero");
        for s in 1..=3 {
            let target = if e.is_limit() {
                trimmed.add(&CtblOrd::omega_pow(fundamental(&e, s)))
            } else {
                trimmed.add(&CtblOrd::term(e.pred().unwrap(), s))
            };
            if !samples.iter().any(|x| *x > target) {
                return Err(format!("{b}: samples are not cofinal in β_{i} = {v} (stuck below {target})"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::level1_trees;
    use crate::ordinal::apply_shift_sup;

    #[test]
    fn ranks_match_closed_form() {
        for p in level1_trees(4) {
            assert_eq!(rank_order_type(&p), p.rep_order_type(), "{p}");
        }
        let t = Level1Tree::validate([Node::from([0])]).unwrap();
        assert_eq!(rank_order_type(&t).to_string(), "w + 1");
    }

    #[test]
    fn decomposition_matches_closed_form() {
        let map = |v: &[u32], c| IndexMap::new(v.to_vec(), c).unwrap();
        let cases = [
            (map(&[2], 2), UOrd::u(1)),
            (map(&[1, 3], 3), UOrd::u(2)),
            (map(&[2, 4], 4), UOrd::u_times(2, CtblOrd::nat(3)).add(&UOrd::u(1))),
            (map(&[3], 3), UOrd::u_times(1, CtblOrd::omega())),
        ];
        for (s, b) in cases {
            assert_eq!(shift_sup_by_decomposition(&s, &b), apply_shift_sup(&s, &b));
        }
    }

    #[test]
    fn fundamental_sequences() {
        let w2 = CtblOrd::omega_pow(CtblOrd::nat(2));
        assert_eq!(fundamental(&w2, 3), CtblOrd::omega().mul_nat(3));
        let ww = CtblOrd::omega_pow(CtblOrd::omega());
        assert_eq!(fundamental(&ww, 2), w2);
    }

    #[test]
    fn approximations_agree() {
        let w = Level1Tree::validate([Node::from([0]), Node::from([0, 0]), Node::from([1])]).unwrap();
        let b = UOrd::u_times(3, CtblOrd::nat(2)).add(&UOrd::u_times(1, CtblOrd::nat(3)));
        check_approximations(&b, &w).unwrap();
        let b = UOrd::u_times(3, CtblOrd::omega()).add(&UOrd::u(2)).add(&UOrd::u_times(1, CtblOrd::omega()));
        check_approximations(&b, &w).unwrap();
    }

    #[test]
    fn wrong_approximation_is_caught() {
        // relabelling the middle term onto u_2 instead of u_1 overshoots
        let w = Level1Tree::validate([Node::from([0]), Node::from([0, 0]), Node::from([1])]).unwrap();
        let b = UOrd::u_times(3, CtblOrd::nat(2)).add(&UOrd::u(2)).add(&UOrd::u(1));
        let approx = approximations(&b);
        let chain = Level1Tree::validate([Node::from([0]), Node::from([0, 0])]).unwrap();
        let alt = UOrd::u_times(2, CtblOrd::nat(2)).add(&UOrd::u(2));
        assert_ne!(approx[2], alt);
        let g: BTreeMap<Node, CtblOrd> =
            [(Node::from([0]), closed(9)), (Node::from([0, 0]), closed(5))].into();
        assert!(evaluate(&alt, &chain, &g).unwrap() > evaluate(&approx[2], &chain, &g).unwrap());
        check_approximations(&b, &w).unwrap();
    }
}

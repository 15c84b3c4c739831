//! Seeded random objects for test corpora.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enumerate::level2_extensions;
use crate::level1::Level1Tree;
use crate::level2::{Level2Tree, LevelLe2Tree};
use crate::ordinal::{CtblOrd, IndexMap, UOrd};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A countable ordinal with exponents nested at most `depth` deep.
pub fn ctbl<R: Rng>(rng: &mut R, depth: u32) -> CtblOrd {
    let n = rng.gen_range(0..=3);
    let mut exps: Vec<CtblOrd> = (0..n)
        .map(|_| {
            if depth == 0 {
                CtblOrd::nat(rng.gen_range(0..3))
            } else {
                ctbl(rng, depth - 1)
            }
        })
        .collect();
    exps.sort_by(|a, b| b.cmp(a));
    exps.dedup();
    let terms = exps
        .into_iter()
        .map(|e| (e, rng.gen_range(1..=4)))
        .collect();
    CtblOrd::from_terms(terms).expect("sorted distinct exponents")
}

/// A nonzero coefficient, biased towards the small cases that matter most.
pub fn coefficient<R: Rng>(rng: &mut R) -> CtblOrd {
    match rng.gen_range(0..6) {
        0 | 1 => CtblOrd::one(),
        2 => CtblOrd::nat(rng.gen_range(2..5)),
        3 => CtblOrd::omega(),
        4 => CtblOrd::omega().mul_nat(rng.gen_range(2..4)),
        _ => {
            let c = ctbl(rng, 1);
            if c.is_zero() {
                CtblOrd::one()
            } else {
                c
            }
        }
    }
}

/// A random `UOrd` using levels `1..=max_level`.
pub fn uord<R: Rng>(rng: &mut R, max_level: u32) -> UOrd {
    let mut terms = Vec::new();
    for k in (1..=max_level).rev() {
        if rng.gen_bool(0.4) {
            terms.push((k, coefficient(rng)));
        }
    }
    let tail = match rng.gen_range(0..4) {
        0 => ctbl(rng, 1),
        1 => CtblOrd::nat(rng.gen_range(1..4)),
        _ => CtblOrd::zero(),
    };
    UOrd::from_parts(terms, tail).expect("levels strictly decreasing")
}

/// A random `UOrd` at least `u₁` and below `u_{bound}`.
pub fn uncountable_below<R: Rng>(rng: &mut R, bound: u32) -> UOrd {
    loop {
        let b = uord(rng, bound - 1);
        if !b.is_countable() {
            return b;
        }
    }
}

/// A strictly increasing `{1..n} → {1..codomain}`.
pub fn index_map<R: Rng>(rng: &mut R, n: u32, codomain: u32) -> IndexMap {
    let all: Vec<u32> = (1..=codomain).collect();
    let mut values: Vec<u32> = all
        .choose_multiple(rng, n as usize)
        .copied()
        .collect();
    values.sort_unstable();
    IndexMap::new(values, codomain).expect("n ≤ codomain")
}

/// A level-1 tree with `size` nodes, grown by random canonical insertion.
pub fn level1_tree<R: Rng>(rng: &mut R, size: usize) -> Level1Tree {
    let mut t = Level1Tree::empty();
    for _ in 0..size {
        let a = t.addable_nodes();
        let pick = a.choose(rng).expect("always addable").clone();
        t = t.insert(pick).expect("addable");
    }
    t
}

/// A level-2 tree with `keys` keys.
pub fn level2_tree<R: Rng>(rng: &mut R, keys: usize) -> Level2Tree {
    let mut q = Level2Tree::root();
    for _ in 1..keys {
        let ext = level2_extensions(&q);
        match ext.choose(rng) {
            Some(next) => q = next.clone(),
            None => break,
        }
    }
    q
}

pub fn level_le2_tree<R: Rng>(rng: &mut R, size: usize) -> LevelLe2Tree {
    let ones = rng.gen_range(0..size.max(1));
    LevelLe2Tree::new(
        level1_tree(rng, ones),
        level2_tree(rng, size.saturating_sub(ones).max(1)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_runs_repeat() {
        let a: Vec<String> = (0..20).map(|_| uord(&mut rng(7), 6).to_string()).collect();
        let mut r = rng(7);
        let b: Vec<String> = (0..20).map(|_| uord(&mut r, 6).to_string()).collect();
        assert!(a.iter().all(|x| *x == a[0]));
        assert_eq!(b[0], a[0]);
        let mut r1 = rng(3);
        let mut r2 = rng(3);
        for _ in 0..50 {
            assert_eq!(level1_tree(&mut r1, 4), level1_tree(&mut r2, 4));
        }
    }

    #[test]
    fn shapes() {
        let mut r = rng(0);
        for _ in 0..200 {
            assert!(uord(&mut r, 6).max_level() <= 6);
            assert_eq!(level1_tree(&mut r, 5).card(), 5);
            let m = index_map(&mut r, 2, 5);
            assert_eq!((m.n(), m.codomain()), (2, 5));
            assert!(!uncountable_below(&mut r, 3).is_countable());
        }
    }
}

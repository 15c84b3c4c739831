use proptest::prelude::*;
use rand::Rng;

use uctk_core::generate;
use uctk_core::level1::Level1Tree;
use uctk_core::ordinal::{apply_shift, apply_shift_sup, decompose_shift, is_continuity_point, CtblOrd, UOrd};
use uctk_core::syntax;

fn limit(rng: &mut impl Rng, level: u32) -> UOrd {
    loop {
        let b = generate::uord(rng, level);
        if b.is_limit() {
            return b;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ctbl_arithmetic(seed in any::<u64>()) {
        let mut rng = generate::rng(seed);
        let (a, b, c) = (generate::ctbl(&mut rng, 2), generate::ctbl(&mut rng, 2), generate::ctbl(&mut rng, 2));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.add(&b) >= b);
        if !b.is_zero() {
            prop_assert!(a.add(&b) > a);
        }
        prop_assert!(a.succ() > a);
        prop_assert_eq!(a.succ().pred(), Some(a.clone()));
    }

    #[test]
    fn uord_addition(seed in any::<u64>()) {
        let mut rng = generate::rng(seed);
        let (a, b, c) = (generate::uord(&mut rng, 4), generate::uord(&mut rng, 4), generate::uord(&mut rng, 4));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.add(&b) >= a);
        if !b.is_zero() {
            prop_assert!(a.add(&b) > a);
        }
        if b < c {
            prop_assert!(a.add(&b) < a.add(&c));
        }
    }

    #[test]
    fn shifts_preserve_order_and_split(seed in any::<u64>()) {
        let mut rng = generate::rng(seed);
        let (b, c) = (generate::uord(&mut rng, 4), generate::uord(&mut rng, 4));
        let n = 4;
        let codomain = n + rng.gen_range(0..=3);
        let sigma = generate::index_map(&mut rng, n, codomain);
        let (jb, jc) = (apply_shift(&sigma, &b).unwrap(), apply_shift(&sigma, &c).unwrap());
        prop_assert_eq!(b.cmp(&c), jb.cmp(&jc));

        let l = limit(&mut rng, n);
        let sup = apply_shift_sup(&sigma, &l).unwrap();
        let direct = apply_shift(&sigma, &l).unwrap();
        prop_assert!(sup <= direct);
        prop_assert_eq!(sup == direct, is_continuity_point(&sigma, &l).unwrap());

        for k in 1..=n {
            if sigma.has_gap_at(k) {
                let (sk, tk) = decompose_shift(&sigma, k).unwrap();
                prop_assert_eq!(&sk.compose(&tk).unwrap(), &sigma);
                prop_assert!(!sk.has_gap_at(k));
            } else {
                prop_assert!(decompose_shift(&sigma, k).is_err());
            }
        }
    }

    #[test]
    fn print_then_parse(seed in any::<u64>(), size in 0usize..7) {
        let mut rng = generate::rng(seed);
        let t = generate::level1_tree(&mut rng, size);
        prop_assert_eq!(syntax::parse_level1(&t.to_string()).unwrap(), t);
        let q = generate::level_le2_tree(&mut rng, 1 + size % 4);
        prop_assert_eq!(syntax::parse_level_le2(&q.to_string()).unwrap(), q);
        let b = generate::uord(&mut rng, 5);
        prop_assert_eq!(syntax::parse_uord(&b.to_string()).unwrap(), b);
        let c = generate::ctbl(&mut rng, 3);
        prop_assert_eq!(syntax::parse_ctbl(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn factoring_tracks_order_type(seed in any::<u64>(), m in 0usize..6, k in 0usize..6) {
        let mut rng = generate::rng(seed);
        let (p, w) = (generate::level1_tree(&mut rng, m), generate::level1_tree(&mut rng, k));
        let (a, b) = (p.rep_order_type(), w.rep_order_type());
        if p.is_empty() {
            prop_assert!(a.is_zero());
        } else {
            prop_assert_eq!(a.clone(), CtblOrd::omega().mul_nat(p.card() as u64).succ());
        }
        prop_assert_eq!(p.factor_exists(&w), a <= b);
        prop_assert_eq!(p.strict_factor_exists(&w), a < b);
        for s in p.factorings(&w) {
            prop_assert!(s.factors(&p, &w));
        }
    }

    #[test]
    fn insertion_keeps_trees_valid(seed in any::<u64>(), size in 0usize..6) {
        let mut rng = generate::rng(seed);
        let t = generate::level1_tree(&mut rng, size);
        for p in t.addable_nodes() {
            let bigger = t.insert(p.clone()).unwrap();
            prop_assert_eq!(bigger.card(), t.card() + 1);
            prop_assert!(t.is_subtree_of(&bigger));
            prop_assert_eq!(&Level1Tree::validate(bigger.nodes().cloned()).unwrap(), &bigger);
            prop_assert_eq!(&bigger.remove(&p).unwrap(), &t);
        }
    }
}

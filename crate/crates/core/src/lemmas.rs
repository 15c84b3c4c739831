//! Executable check suites for the kernel's invariants and lemmas.
//!
//! Each suite returns a [`SuiteReport`] with pass counts and any
//! counterexamples verbatim. Corpora are exhaustive up to a size bound or
//! drawn from a seeded generator, so every run is reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;

use crate::analysis::analyze;
use crate::enumerate::{level1_layers, level1_trees, level2_layers, level_le2_trees, partial_le2_trees};
use crate::generate;
use crate::level1::{s1_member, tree_embed, tree_embed_sup, Factoring, Level1Tower, Level1Tree};
use crate::level2::{
    recover_tree, respects_le2, s2_member, weakly_respects_le2, witness_tuple, DescKind,
    Description, DomKey, DomainShape, Level2Tower, LevelLe2Tree, OrdTuple2, PartialLevel1Tree,
    S2Variant,
};
use crate::level3::Ucf;
use crate::node::{ExtNode, Node};
use crate::oracle;
use crate::ordinal::{
    apply_shift, apply_shift_sup, decompose_shift, is_continuity_point, Cofinality, CtblOrd,
    IndexMap, UOrd,
};

/// Outcome of one suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn fail(&mut self, what: String) {
        self.checked += 1;
        self.failures.push(what);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={} status={} checked={} skipped={} failures={}",
            self.name,
            if self.passed() { "pass" } else { "fail" },
            self.checked,
            self.skipped,
            self.failures.len()
        )?;
        for n in &self.notes {
            write!(f, " note=\"{n}\"")?;
        }
        if let Some(x) = self.failures.first() {
            write!(f, " counterexample=\"{x}\"")?;
        }
        Ok(())
    }
}

/// Order type of `rep(P)` is `ω·card(P) + 1` and agrees with the rank oracle.
pub fn order_type(max_nodes: usize) -> SuiteReport {
    let mut r = SuiteReport::new("order-type");
    let mut nonempty = 0;
    for p in level1_trees(max_nodes) {
        let closed = p.rep_order_type();
        let expected = if p.is_empty() {
            CtblOrd::zero()
        } else {
            CtblOrd::omega().mul_nat(p.card() as u64).succ()
        };
        let rank = oracle::rank_order_type(&p);
        r.check(closed == expected && rank == closed, || {
            format!("{p}: closed form {closed}, rank oracle {rank}, expected {expected}")
        });
        if !p.is_empty() {
            nonempty += 1;
        }
    }
    r.notes.push(format!("{nonempty} nonempty trees"));
    r
}

/// `factor_exists ⟺ ot(P) ≤ ot(W)` and `strict_factor_exists ⟺ ot(P) < ot(W)`.
pub fn factoring(max_nodes: usize) -> SuiteReport {
    let mut r = SuiteReport::new("factoring");
    let trees = level1_trees(max_nodes);
    for p in &trees {
        for w in &trees {
            let (a, b) = (p.rep_order_type(), w.rep_order_type());
            let all = p.factorings(w);
            let ok = p.factor_exists(w) == (a <= b)
                && p.strict_factor_exists(w) == (a < b)
                && all.iter().all(|s| s.factors(p, w));
            r.check(ok, || {
                format!(
                    "P={p} W={w}: exists={} strict={} ot {a} vs {b}",
                    p.factor_exists(w),
                    p.strict_factor_exists(w)
                )
            });
        }
    }
    r
}

fn random_limit<R: Rng>(rng: &mut R, max_level: u32) -> UOrd {
    loop {
        let b = generate::uord(rng, max_level);
        if b.is_limit() {
            return b;
        }
    }
}

/// Closed form of `j^σ_sup` against the decomposition oracle, and the
/// continuity criterion.
pub fn shift(count: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("shift");
    let mut rng = generate::rng(seed);
    let (mut gaps, mut continuous) = (0, 0);
    for _ in 0..count {
        let b = random_limit(&mut rng, 6);
        let n = b.max_level().max(rng.gen_range(1..=6));
        let codomain = n + rng.gen_range(0..=3);
        let sigma = generate::index_map(&mut rng, n, codomain);
        let closed = apply_shift_sup(&sigma, &b);
        let reference = oracle::shift_sup_by_decomposition(&sigma, &b);
        let plain = apply_shift(&sigma, &b);
        let point = is_continuity_point(&sigma, &b);
        match (closed, reference, plain, point) {
            (Ok(c), Ok(o), Ok(p), Ok(cont)) => {
                if cont {
                    continuous += 1;
                } else {
                    gaps += 1;
                }
                r.check(c == o && (c == p) == cont, || {
                    format!("σ={sigma} β={b}: closed {c}, oracle {o}, j^σ {p}, continuous={cont}")
                });
            }
            (c, o, p, cont) => r.fail(format!("σ={sigma} β={b}: {c:?} {o:?} {p:?} {cont:?}")),
        }
        if let Cofinality::U(k) = b.cf_l() {
            if sigma.has_gap_at(k) {
                let ok = decompose_shift(&sigma, k)
                    .map(|(s, t)| s.compose(&t).as_ref() == Ok(&sigma) && !s.has_gap_at(k))
                    .unwrap_or(false);
                r.check(ok, || format!("σ={sigma} k={k}: decomposition does not compose back"));
            }
        }
    }
    r.notes.push(format!("{gaps} discontinuity points, {continuous} continuity points"));
    r
}

/// Uniform cofinality, potential tower type and the approximation sequence.
pub fn analysis(count: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("analysis");
    let mut rng = generate::rng(seed);
    let mut done = 0;
    while done < count {
        let size = rng.gen_range(1..=5);
        let w = generate::level1_tree(&mut rng, size);
        let b = generate::uncountable_below(&mut rng, size as u32 + 1);
        if !b.is_limit() {
            continue;
        }
        done += 1;
        match analyze(&b, &w) {
            Ok(a) => {
                let ucf_ok = a.uniform_cofinality == b.cf_l();
                let type_ok = a.potential_tower.is_continuous() == a.essentially_continuous;
                let approx = oracle::check_approximations(&b, &w);
                r.check(ucf_ok && type_ok && approx.is_ok(), || {
                    format!(
                        "β={b} W={w}: ucf {} vs cf {}; tower {} continuous={}; {}",
                        a.uniform_cofinality,
                        b.cf_l(),
                        a.potential_tower,
                        a.essentially_continuous,
                        approx.err().unwrap_or_default()
                    )
                });
            }
            Err(e) => r.fail(format!("β={b} W={w}: {e}")),
        }
    }
    r
}

/// `β < u_{n+1}` with `cf_L(β) = u_k`.
fn with_cofinality<R: Rng>(rng: &mut R, n: u32, k: u32) -> UOrd {
    let mut terms = Vec::new();
    for l in (k + 1..=n).rev() {
        if rng.gen_bool(0.5) {
            terms.push((l, generate::coefficient(rng)));
        }
    }
    terms.push((k, generate::ctbl(rng, 1).succ()));
    UOrd::from_parts(terms, CtblOrd::zero()).expect("decreasing levels")
}

/// `β < u_{n+1}` with `cf_L(β) = ω`.
fn with_omega_cofinality<R: Rng>(rng: &mut R, n: u32) -> UOrd {
    loop {
        let b = generate::uord(rng, n);
        if b.cf_l() == Cofinality::Omega {
            return b;
        }
        if let Some((d, k)) = b.split_last_u() {
            let c = CtblOrd::omega().mul_nat(rng.gen_range(1..4));
            return d.add(&UOrd::u_times(k, c));
        }
    }
}

fn corpus<R: Rng>(rng: &mut R, per: usize, mut gen: impl FnMut(&mut R) -> UOrd) -> Vec<UOrd> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < per && tries < per * 20 {
        tries += 1;
        let b = gen(rng);
        if seen.insert(b.to_string()) {
            out.push(b);
        }
    }
    out
}

/// The `≺^W`-predecessor of a description of `W`.
fn predecessor(w: &Level1Tree, d: &Node) -> Option<Node> {
    let list = w.descriptions();
    let i = list.iter().position(|x| x == d)?;
    i.checked_sub(1).map(|j| list[j].clone())
}

fn with_image(sigma: &Factoring, p: &Level1Tree, w: &Level1Tree, node: &Node, image: Node) -> Option<Factoring> {
    let mut map: BTreeMap<Node, Node> = sigma
        .domain()
        .iter()
        .cloned()
        .zip(sigma.image().iter().cloned())
        .collect();
    map.insert(node.clone(), image);
    Factoring::new(p, w, &map).ok()
}

/// `σ^W ∘ j^{P⁻,P}_sup(β) = (σ')^W_sup ∘ j^{P⁻,P}(β)`.
pub fn ucf_lemma_one(max_nodes: usize, per: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("ucf-lemma-1");
    let mut rng = generate::rng(seed);
    let trees = level1_trees(max_nodes);
    let mut configs = 0;
    let mut fewest = usize::MAX;
    let mut cache: BTreeMap<(u32, u32), Vec<UOrd>> = BTreeMap::new();
    for minus in trees.iter().filter(|t| t.is_regular() && t.card() < max_nodes) {
        for pt in PartialLevel1Tree::all_on(minus) {
            let ExtNode::Node(p) = pt.node().clone() else { continue };
            let full = pt.completion().expect("degree 1");
            let parent = p.parent().expect("nonempty");
            let n = minus.card() as u32;
            let k = minus.desc_rank(&parent).expect("parent is a description") as u32 + 1;
            if k > n {
                // cf would be u_{n+1}, above every admissible β
                r.skipped += 1;
                continue;
            }
            let betas = cache
                .entry((n, k))
                .or_insert_with(|| corpus(&mut rng, per, |g| with_cofinality(g, n, k)))
                .clone();
            for w in &trees {
                for sigma in full.factorings(w) {
                    let Some(pred) = predecessor(w, &sigma.apply(&p).unwrap()) else { continue };
                    let Some(sigma2) = with_image(&sigma, &full, w, &p, pred) else { continue };
                    configs += 1;
                    fewest = fewest.min(betas.len());
                    let s = sigma.to_shift(&full, w).unwrap();
                    let s2 = sigma2.to_shift(&full, w).unwrap();
                    for b in &betas {
                        let lhs = tree_embed_sup(minus, &full, b).and_then(|x| apply_shift(&s, &x));
                        let rhs = tree_embed(minus, &full, b).and_then(|x| apply_shift_sup(&s2, &x));
                        r.check(lhs.is_ok() && lhs == rhs, || {
                            format!("P⁻={minus} p={p} W={w} σ={sigma} σ'={sigma2} β={b}: {lhs:?} vs {rhs:?}")
                        });
                    }
                }
            }
        }
    }
    r.notes.push(format!("{configs} configurations, at least {fewest} β each"));
    r
}

/// `σ^W(β) = (σ')^W_sup ∘ j^{P,P⁺}(β)`, both cases.
pub fn ucf_lemma_two(max_nodes: usize, per: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("ucf-lemma-2");
    let mut rng = generate::rng(seed);
    let trees = level1_trees(max_nodes);
    let (mut minus_configs, mut node_configs) = (0, 0);
    let mut fewest = usize::MAX;
    let mut cache: BTreeMap<(u32, Option<u32>), Vec<UOrd>> = BTreeMap::new();
    for base in trees.iter().filter(|t| t.is_regular() && t.card() < max_nodes) {
        let n = base.card() as u32;
        for pt in PartialLevel1Tree::all_on(base) {
            for w in &trees {
                for sigma in base.factorings(w) {
                    let s = sigma.to_shift(base, w).unwrap();
                    let (plus, s2, key) = match pt.node() {
                        ExtNode::Minus => (base.clone(), s.clone(), (n, None)),
                        ExtNode::Node(p) => {
                            let parent = p.parent().unwrap();
                            let target = sigma.apply(&parent).unwrap();
                            let Some(pred) = predecessor(w, &target) else { continue };
                            let plus = pt.completion().unwrap();
                            let Some(sigma2) = with_image(&sigma, &plus, w, p, pred) else { continue };
                            let k = base.desc_rank(&parent).unwrap() as u32 + 1;
                            let s2 = sigma2.to_shift(&plus, w).unwrap();
                            (plus, s2, (n, Some(k)))
                        }
                    };
                    if key.1.is_some_and(|k| k > n) {
                        // cf would be u_{n+1}, above every admissible β
                        r.skipped += 1;
                        continue;
                    }
                    let betas = cache
                        .entry(key)
                        .or_insert_with(|| match key.1 {
                            None => corpus(&mut rng, per, |g| with_omega_cofinality(g, n)),
                            Some(k) => corpus(&mut rng, per, |g| with_cofinality(g, n, k)),
                        })
                        .clone();
                    fewest = fewest.min(betas.len());
                    match key.1 {
                        None => minus_configs += 1,
                        Some(_) => node_configs += 1,
                    }
                    for b in &betas {
                        let lhs = apply_shift(&s, b);
                        let rhs = tree_embed(base, &plus, b).and_then(|x| apply_shift_sup(&s2, &x));
                        r.check(lhs.is_ok() && lhs == rhs, || {
                            format!("P={base} {pt} W={w} σ={sigma} β={b}: {lhs:?} vs {rhs:?}")
                        });
                    }
                }
            }
        }
    }
    r.notes.push(format!(
        "{minus_configs} configurations with p = -1, {node_configs} with p a node, \
         at least {fewest} β each"
    ));
    r
}

/// Trees of the level ≤2 corpus paired with their witness tuple.
fn witnessed(max_nodes: usize) -> (Vec<(LevelLe2Tree, OrdTuple2)>, usize) {
    let mut out = Vec::new();
    let mut skipped = 0;
    for q in level_le2_trees(max_nodes) {
        match witness_tuple(&q) {
            Some(t) => out.push((q, t)),
            None => skipped += 1,
        }
    }
    (out, skipped)
}

/// A respecting tuple determines its level ≤2 tree.
pub fn uniqueness(max_nodes: usize) -> SuiteReport {
    let mut r = SuiteReport::new("uniqueness");
    let (corpus, skipped) = witnessed(max_nodes);
    r.skipped = skipped;
    for (q, t) in &corpus {
        let respects = respects_le2(q, t).map(|v| v.holds()).unwrap_or(false);
        let found = recover_tree(&DomainShape::of(q), t);
        r.check(respects && found.as_ref() == Ok(q), || {
            format!("Q={q} t={}: respects={respects} recovered {found:?}", show_tuple(t))
        });
    }
    r.notes.push(format!(
        "{} trees with a representable witness, {skipped} without",
        corpus.len()
    ));
    r
}

pub fn show_tuple(t: &OrdTuple2) -> String {
    let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("[{}]", parts.join(", "))
}

fn union(a: &Level1Tree, b: &Level1Tree) -> Level1Tree {
    Level1Tree::validate(a.nodes().chain(b.nodes()).cloned()).expect("union of trees")
}

/// Continuous descriptions evaluate to `j^{P⁻,P}_sup(²β_{q⁻})`, and values
/// are monotone in the description order: level-2 values strictly, once
/// both are embedded into the union of their trees, and level-1 values
/// weakly below everything after them.
pub fn continuous_descriptions(max_nodes: usize) -> SuiteReport {
    let mut r = SuiteReport::new("continuous-descriptions");
    let (corpus, skipped) = witnessed(max_nodes);
    r.skipped = skipped;
    let (mut continuous, mut ties) = (0, 0);
    for (q, t) in &corpus {
        let mut values: Vec<(Description, UOrd)> = Vec::new();
        for d in q.descriptions() {
            let v = match crate::level2::evaluate_description(q, t, &d) {
                Ok(v) => v,
                Err(e) => {
                    r.fail(format!("Q={q} d={d}: {e}"));
                    continue;
                }
            };
            if let (DescKind::Continuous, Description::Two(x)) = (q.classify(&d), &d) {
                continuous += 1;
                let prev = &t[&DomKey::Two(x.key.key.clone())];
                let minus = q.t2.tree(&x.key.key).unwrap();
                let expected = Factoring::inclusion(minus, x.tree())
                    .and_then(|s| s.to_shift(minus, x.tree()))
                    .and_then(|s: IndexMap| oracle::shift_sup_by_decomposition(&s, prev));
                r.check(expected.as_ref() == Ok(&v), || {
                    format!("Q={q} d={d}: value {v}, expected {expected:?}")
                });
            }
            values.push((d, v));
        }
        for (i, (d, v)) in values.iter().enumerate() {
            for (e, u) in &values[i + 1..] {
                match (d, e) {
                    (Description::Two(x), Description::Two(y)) => {
                        let common = union(x.tree(), y.tree());
                        let a = tree_embed(x.tree(), &common, v);
                        let b = tree_embed(y.tree(), &common, u);
                        r.check(matches!((&a, &b), (Ok(a), Ok(b)) if a < b), || {
                            format!("Q={q}: {d} = {v} and {e} = {u}, over {common}: {a:?} vs {b:?}")
                        });
                    }
                    _ => {
                        ties += (v == u) as usize;
                        r.check(v <= u, || format!("Q={q}: {d} = {v} but {e} = {u}"));
                    }
                }
            }
        }
    }
    r.notes.push(format!(
        "{continuous} continuous descriptions, {ties} ties between a level-1 and a level-2 description"
    ));
    r
}

fn perturb<R: Rng>(rng: &mut R, t: &OrdTuple2) -> OrdTuple2 {
    let mut out = t.clone();
    let keys: Vec<DomKey> = out.keys().cloned().collect();
    let k = &keys[rng.gen_range(0..keys.len())];
    let v = match k {
        DomKey::Two(_) => generate::uord(rng, 4),
        _ => UOrd::countable(CtblOrd::omega().mul_nat(rng.gen_range(1..6))),
    };
    out.insert(k.clone(), v);
    out
}

fn random_tuple<R: Rng>(rng: &mut R, q: &LevelLe2Tree) -> OrdTuple2 {
    q.dom()
        .into_iter()
        .map(|k| {
            let v = match &k {
                DomKey::Two(key) if key.is_empty() => UOrd::u(1),
                DomKey::Two(_) => generate::uncountable_below(rng, 4),
                _ => UOrd::countable(CtblOrd::omega().mul_nat(rng.gen_range(1..6))),
            };
            (k, v)
        })
        .collect()
}

/// `respects ⇒ weakly respects` on every tree of the corpus: witnesses and
/// perturbed witnesses where a witness exists, random tuples otherwise.
pub fn respect_hierarchy(max_nodes: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("respect-hierarchy");
    let mut rng = generate::rng(seed);
    let (mut respecting, mut weak_only, mut unwitnessed) = (0, 0, 0);
    for q in level_le2_trees(max_nodes) {
        let mut tuples = Vec::new();
        match witness_tuple(&q) {
            Some(t) => {
                for _ in 0..8 {
                    tuples.push(perturb(&mut rng, &t));
                }
                tuples.push(t);
            }
            None => {
                unwitnessed += 1;
                for _ in 0..8 {
                    tuples.push(random_tuple(&mut rng, &q));
                }
            }
        }
        for u in &tuples {
            let strong = respects_le2(&q, u).map(|v| v.holds());
            let weak = weakly_respects_le2(&q, u).map(|v| v.holds());
            match (strong, weak) {
                (Ok(s), Ok(w)) => {
                    respecting += s as usize;
                    weak_only += (w && !s) as usize;
                    r.check(!s || w, || {
                        format!("Q={q} t={}: respects but not weakly", show_tuple(u))
                    });
                }
                (s, w) => r.fail(format!("Q={q} t={}: {s:?} {w:?}", show_tuple(u))),
            }
        }
    }
    r.notes.push(format!(
        "{respecting} respecting tuples, {weak_only} weakly but not fully respecting, \
         {unwitnessed} trees without a witness checked on random tuples"
    ));
    r
}

fn s1_corpus(max_nodes: usize) -> Vec<Level1Tower> {
    let mut towers = vec![Level1Tower::validate(vec![Level1Tree::empty()]).unwrap()];
    let mut frontier = towers.clone();
    for _ in 0..max_nodes {
        let mut next = Vec::new();
        for t in &frontier {
            let last = t.last().unwrap();
            for a in last.addable_nodes() {
                let p = last.insert(a).unwrap();
                if p.is_regular() {
                    let mut trees = t.trees().to_vec();
                    trees.push(p);
                    next.push(Level1Tower::validate(trees).unwrap());
                }
            }
        }
        towers.extend(next.iter().cloned());
        frontier = next;
    }
    towers
}

/// Node predicates of `S₁` and `S₂` are closed under initial segments.
pub fn tree_property(max_nodes: usize, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("tree-property");
    let mut rng = generate::rng(seed);
    let (mut s1_accepted, mut s2_accepted) = (0, 0);
    for tower in s1_corpus(max_nodes) {
        let n = tower.height();
        for _ in 0..6 {
            let alphas: Vec<CtblOrd> = (0..n)
                .map(|_| CtblOrd::omega().mul_nat(rng.gen_range(1..=5)))
                .collect();
            if !s1_member(&tower, &alphas).unwrap_or(false) {
                continue;
            }
            s1_accepted += 1;
            for i in 0..n {
                let prefix = Level1Tower::validate(tower.trees()[..=i].to_vec()).unwrap();
                let ok = s1_member(&prefix, &alphas[..i]).unwrap_or(false);
                r.check(ok, || format!("S1: {tower} {alphas:?} accepted but prefix {i} rejected"));
            }
        }
    }
    for layer in level2_layers(max_nodes).into_iter().skip(1) {
        for q in layer {
            let Some(tower) = level2_tower_to(&q) else { continue };
            let le2 = LevelLe2Tree::new(Level1Tree::empty(), q.clone());
            let mut tuples = Vec::new();
            if let Some(t) = witness_tuple(&le2) {
                tuples.push(t.clone());
                tuples.push(perturb(&mut rng, &t));
            }
            for t in tuples {
                let alphas: Vec<UOrd> = tower
                    .new_keys()
                    .iter()
                    .map(|k| t[&DomKey::Two(k.clone())].clone())
                    .collect();
                for variant in [S2Variant::Respects, S2Variant::Weak] {
                    if !s2_member(&tower, &alphas, variant).unwrap_or(false) {
                        continue;
                    }
                    s2_accepted += 1;
                    for i in 1..tower.len() {
                        let ok = s2_member(&tower.truncate(i), &alphas[..i], variant).unwrap_or(false);
                        r.check(ok, || {
                            format!("S2 {variant:?}: {q} accepted but prefix of length {i} rejected")
                        });
                    }
                }
            }
        }
    }
    r.notes.push(format!("{s1_accepted} accepted S1 nodes, {s2_accepted} accepted S2 nodes"));
    r
}

/// A level-2 tower ending in `q`, adding keys by length then `<_BK`.
pub fn level2_tower_to(q: &crate::level2::Level2Tree) -> Option<Level2Tower> {
    let mut keys: Vec<_> = q.dom().cloned().collect();
    keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut trees = Vec::new();
    for i in 1..=keys.len() {
        let entries = keys[..i]
            .iter()
            .map(|k| (k.clone(), q.get(k).unwrap().clone()))
            .collect();
        trees.push(crate::level2::Level2Tree::from_entries(entries).ok()?);
    }
    Level2Tower::validate(trees).ok()
}

/// `ucf` is `(0, −1)` or a regular extended description; every case of
/// `ucf` and `cf3` occurs.
pub fn ucf_cases(max_nodes: usize) -> SuiteReport {
    let mut r = SuiteReport::new("ucf-cases");
    let mut ucf_seen = BTreeSet::new();
    let mut cf_seen = BTreeSet::new();
    for pt in partial_le2_trees(max_nodes) {
        let (u, case) = pt.ucf_case();
        ucf_seen.insert(case);
        let cf = pt.cf3();
        cf_seen.insert(cf);
        let shape_ok = match &u {
            Ucf::Zero => pt.degree() == 0,
            other => {
                let d = other.as_description().unwrap();
                pt.base().is_regular_desc(&d)
            }
        };
        r.check(shape_ok && (cf == 0) == (pt.degree() == 0), || {
            format!("{pt}: ucf {u} (case {case}), cf {cf}")
        });
    }
    for c in 1..=5u8 {
        r.check(ucf_seen.contains(&c), || format!("ucf case {c} never exercised"));
    }
    for c in 0..=2u8 {
        r.check(cf_seen.contains(&c), || format!("cf3 value {c} never exercised"));
    }
    r.notes.push(format!("ucf cases {ucf_seen:?}, cf3 values {cf_seen:?}"));
    r
}

/// Catalan counts of the level-1 enumeration.
pub fn enumeration(max_nodes: usize) -> SuiteReport {
    let mut r = SuiteReport::new("enumeration");
    let layers = level1_layers(max_nodes);
    let mut catalan = 1u64;
    for (n, layer) in layers.iter().enumerate() {
        r.check(layer.len() as u64 == catalan, || {
            format!("{} trees with {n} nodes, expected {catalan}", layer.len())
        });
        let distinct: BTreeSet<String> = layer.iter().map(ToString::to_string).collect();
        r.check(distinct.len() == layer.len(), || format!("duplicates among {n}-node trees"));
        catalan = catalan * 2 * (2 * n as u64 + 1) / (n as u64 + 2);
    }
    r
}

/// Every suite, sized by `bound`.
pub fn check_lemmas(bound: usize, seed: u64) -> Vec<SuiteReport> {
    let small = bound.min(4);
    let count = 250 * bound.max(1);
    vec![
        enumeration(bound.min(6)),
        order_type(bound.min(5)),
        factoring(small),
        shift(count, seed),
        analysis(count / 4, seed),
        ucf_lemma_one(small, 25 * bound.max(1), seed),
        ucf_lemma_two(small, 25 * bound.max(1), seed),
        uniqueness(small),
        continuous_descriptions(small),
        respect_hierarchy(small, seed),
        tree_property(small, seed),
        ucf_cases(bound.min(3)),
    ]
}

//! Command table and dispatch onto the kernel.

use std::cmp::Ordering;

use uctk_core::analysis::analyze;
use uctk_core::enumerate::{
    level1_trees, level2_layers, level_le2_trees, partial_le1_trees, partial_le2_trees,
};
use uctk_core::level1::{s1_member, tree_embed, tree_embed_sup, Level1Tower, Level1Tree};
use uctk_core::level2::{
    evaluate_description, recover_tree, respects_le2, s2_member, weakly_respects_le2,
    DomainShape, Level2Tower, LevelLe2Tree, OrdTuple2, S2Variant, Verdict,
};
use uctk_core::lemmas::check_lemmas;
use uctk_core::level3::{
    s3_structural_member, Level3Tree, PartialLevelLe2Tree, S3Variant, S3Verdict,
};
use uctk_core::ordinal::{
    apply_shift, apply_shift_sup, decompose_shift, is_continuity_point, CtblOrd, IndexMap, UOrd,
};
use uctk_core::syntax::{parse_all, Parser, TextError};
use uctk_core::Node;

use crate::report::{Failure, Location, Report, Value};
use crate::split::Arg;

/// Name, least and greatest arity, argument synopsis.
pub const COMMANDS: &[(&str, usize, usize, &str)] = &[
    ("validate", 1, 1, "<level-1, level<=2, partial level<=2 or level-3 tree>"),
    ("regular", 1, 1, "<level-1 or level-3 tree>"),
    ("compare", 2, 3, "<a> <b>  |  <level-1 tree> <x> <y>"),
    ("order-type", 1, 1, "<level-1 tree>"),
    ("descriptions", 1, 1, "<level-1 or level<=2 tree>"),
    ("seed", 2, 2, "<level-1 tree> <node>"),
    ("factorings", 2, 2, "<P> <W>"),
    ("tower", 1, 1, "<level-1 tower>"),
    ("s1", 2, 2, "<level-1 tower> <countable ordinals>"),
    ("analyze", 2, 2, "<ordinal> <W>"),
    ("cfl", 1, 1, "<ordinal>"),
    ("shift", 2, 2, "<index map> <ordinal>"),
    ("shift-sup", 2, 2, "<index map> <ordinal>"),
    ("decompose", 2, 2, "<index map> <k>"),
    ("embed", 3, 3, "<P> <P'> <ordinal>"),
    ("respects", 2, 2, "<level<=2 tree> <tuple>"),
    ("weak-respects", 2, 2, "<level<=2 tree> <tuple>"),
    ("eval-desc", 3, 3, "<level<=2 tree> <tuple> <description>"),
    ("recover", 2, 2, "<level<=2 tree> <tuple>"),
    ("s2", 2, 3, "<level-2 tower> <ordinals> [respects|weak]"),
    ("ucf", 1, 1, "<partial level<=2 tree>"),
    ("cf3", 1, 1, "<partial level<=2 tree>"),
    ("complete", 1, 1, "<partial level<=2 tree>"),
    ("s3-structural", 1, 2, "<level-3 tower> [minus|plain]"),
    ("enumerate", 2, 2, "<level1|level2|level-le2|partial-le1|partial-le2> <n>"),
    ("check-lemmas", 0, 0, ""),
    ("batch", 1, 1, "<file>"),
];

const MAX_ENUMERATE: usize = 8;

pub struct Options {
    pub seed: u64,
    pub bound: usize,
}

type Fields = Vec<(String, Value)>;

struct Outcome {
    fields: Fields,
    verdict: Option<bool>,
}

impl Outcome {
    fn plain(fields: Fields) -> Self {
        Outcome {
            fields,
            verdict: None,
        }
    }

    fn predicate(holds: bool, mut fields: Fields) -> Self {
        fields.insert(0, ("result".into(), holds.into()));
        Outcome {
            fields,
            verdict: Some(holds),
        }
    }
}

fn field(k: &str, v: impl Into<Value>) -> (String, Value) {
    (k.to_string(), v.into())
}

/// Echo of the arguments, quoting any with spaces.
pub fn echo(args: &[Arg]) -> String {
    args.iter()
        .map(|a| {
            if a.text.is_empty() || a.text.chars().any(char::is_whitespace) {
                format!("\"{}\"", a.text)
            } else {
                a.text.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run(op: &str, args: &[Arg], opts: &Options) -> Report {
    let (fields, failure, verdict) = match dispatch(op, args, opts) {
        Ok(o) => (o.fields, None, o.verdict),
        Err(f) => (Vec::new(), Some(f), None),
    };
    Report {
        op: op.to_string(),
        input: echo(args),
        fields,
        failure,
        verdict,
    }
}

fn parse<T>(
    args: &[Arg],
    i: usize,
    f: impl FnOnce(&mut Parser) -> Result<T, TextError>,
) -> Result<T, Failure> {
    let a = &args[i];
    parse_all(&a.text, f).map_err(|e| match e {
        TextError::Syntax(s) => {
            let s = s.offset(a.line, a.col);
            Failure {
                code: "E_SYNTAX".into(),
                message: s.msg,
                location: Some(Location {
                    arg: i + 1,
                    line: s.line,
                    col: s.col,
                }),
                exit: 2,
            }
        }
        TextError::Invalid(k) => Failure {
            code: k.code().into(),
            message: k.to_string(),
            location: Some(Location {
                arg: i + 1,
                line: a.line,
                col: a.col,
            }),
            exit: 1,
        },
    })
}

fn level1(args: &[Arg], i: usize) -> Result<Level1Tree, Failure> {
    parse(args, i, Parser::level1)
}

fn le2(args: &[Arg], i: usize) -> Result<LevelLe2Tree, Failure> {
    parse(args, i, Parser::level_le2)
}

fn uord(args: &[Arg], i: usize) -> Result<UOrd, Failure> {
    parse(args, i, |p| Ok(p.uord()?))
}

fn node(args: &[Arg], i: usize) -> Result<Node, Failure> {
    parse(args, i, |p| Ok(p.node()?))
}

fn index_map(args: &[Arg], i: usize) -> Result<IndexMap, Failure> {
    parse(args, i, |p| {
        let (v, n) = p.index_map()?;
        Ok(IndexMap::new(v, n)?)
    })
}

fn tuple(args: &[Arg], i: usize) -> Result<OrdTuple2, Failure> {
    parse(args, i, |p| Ok(p.ord_tuple()?))
}

fn tower1(args: &[Arg], i: usize) -> Result<Level1Tower, Failure> {
    parse(args, i, |p| {
        let mut trees = Vec::new();
        for nodes in p.tower_nodes()? {
            trees.push(Level1Tree::validate(nodes)?);
        }
        Ok(Level1Tower::validate_rooted(trees)?)
    })
}

fn nat(args: &[Arg], i: usize) -> Result<u64, Failure> {
    let a = &args[i];
    a.text.trim().parse().map_err(|_| Failure {
        code: "E_SYNTAX".into(),
        message: format!("expected a natural number, found {:?}", a.text),
        location: Some(Location {
            arg: i + 1,
            line: a.line,
            col: a.col,
        }),
        exit: 2,
    })
}

fn word<'a>(args: &'a [Arg], i: usize, allowed: &[&str]) -> Result<&'a str, Failure> {
    let a = &args[i];
    if allowed.contains(&a.text.as_str()) {
        Ok(&a.text)
    } else {
        Err(Failure {
            code: "E_USAGE".into(),
            message: format!("expected one of {}, found {:?}", allowed.join("|"), a.text),
            location: Some(Location {
                arg: i + 1,
                line: a.line,
                col: a.col,
            }),
            exit: 2,
        })
    }
}

enum AnyTree {
    One(Level1Tree),
    Le2(LevelLe2Tree),
    Partial(PartialLevelLe2Tree),
    Three(Level3Tree),
}

fn any_tree(args: &[Arg], i: usize) -> Result<AnyTree, Failure> {
    let t = args[i].text.trim_start();
    if t.starts_with("<<") {
        Ok(AnyTree::Three(parse(args, i, Parser::level3)?))
    } else if t.starts_with('<') {
        Ok(AnyTree::Le2(le2(args, i)?))
    } else if t.starts_with('(') {
        Ok(AnyTree::Partial(parse(args, i, Parser::partial_le2)?))
    } else {
        Ok(AnyTree::One(level1(args, i)?))
    }
}

fn ordering(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn verdict(v: Verdict) -> Outcome {
    let mut fields = Vec::new();
    if let Some(c) = v.clause {
        fields.push(field("clause", c.to_string()));
        fields.push(field("detail", v.detail.clone()));
    }
    Outcome::predicate(v.holds(), fields)
}

fn arity(op: &str, args: &[Arg]) -> Result<(), Failure> {
    let Some(&(_, lo, hi, synopsis)) = COMMANDS.iter().find(|c| c.0 == op) else {
        return Err(Failure::usage("E_USAGE", format!("unknown command {op:?}")));
    };
    if args.len() < lo || args.len() > hi {
        let want = if lo == hi {
            format!("{lo}")
        } else {
            format!("{lo} to {hi}")
        };
        return Err(Failure::usage(
            "E_ARITY",
            format!("{op} takes {want} argument(s) {synopsis}, got {}", args.len()),
        ));
    }
    Ok(())
}

fn dispatch(op: &str, args: &[Arg], opts: &Options) -> Result<Outcome, Failure> {
    arity(op, args)?;
    let out = match op {
        "validate" => {
            let t = any_tree(args, 0)?;
            let (kind, card, canonical) = match &t {
                AnyTree::One(t) => ("level1", t.card(), t.to_string()),
                AnyTree::Le2(q) => ("level-le2", q.card(), q.to_string()),
                AnyTree::Partial(pt) => ("partial-le2", pt.card(), pt.to_string()),
                AnyTree::Three(r) => ("level3", r.card(), r.to_string()),
            };
            let degree = match &t {
                AnyTree::Partial(pt) => vec![field("degree", pt.degree().to_string())],
                _ => vec![],
            };
            let mut fields =
                vec![field("kind", kind), field("card", card), field("canonical", canonical)];
            fields.extend(degree);
            Outcome::predicate(true, fields)
        }
        "regular" => match any_tree(args, 0)? {
            AnyTree::One(t) => Outcome::predicate(t.is_regular(), vec![]),
            AnyTree::Three(r) => Outcome::predicate(r.is_regular(), vec![]),
            _ => {
                return Err(Failure::usage(
                    "E_USAGE",
                    "regularity is defined for level-1 and level-3 trees",
                ))
            }
        },
        "compare" if args.len() == 3 => {
            let p = level1(args, 0)?;
            let x = parse(args, 1, |q| Ok(q.rep1()?))?;
            let y = parse(args, 2, |q| Ok(q.rep1()?))?;
            Outcome::plain(vec![field("result", ordering(p.rep_compare(&x, &y)?))])
        }
        "compare" => {
            let o = if let (Ok(a), Ok(b)) = (node(args, 0), node(args, 1)) {
                ("bk", a.cmp(&b))
            } else if let (Ok(a), Ok(b)) = (
                parse(args, 0, |p| Ok(p.key()?)),
                parse(args, 1, |p| Ok(p.key()?)),
            ) {
                ("bk", a.cmp(&b))
            } else {
                ("ordinal", uord(args, 0)?.cmp(&uord(args, 1)?))
            };
            Outcome::plain(vec![field("result", ordering(o.1)), field("order", o.0)])
        }
        "order-type" => {
            let p = level1(args, 0)?;
            Outcome::plain(vec![field("result", p.rep_order_type().to_string())])
        }
        "descriptions" => match any_tree(args, 0)? {
            AnyTree::One(p) => {
                let d = p.descriptions();
                let seeds: Result<Vec<UOrd>, _> = d.iter().map(|x| p.seed(x)).collect();
                Outcome::plain(vec![field("result", d), field("seeds", seeds?)])
            }
            AnyTree::Le2(q) => {
                let d = q.descriptions();
                let kinds: Vec<String> = d.iter().map(|x| q.classify(x).to_string()).collect();
                Outcome::plain(vec![field("result", d), field("kinds", kinds)])
            }
            _ => {
                return Err(Failure::usage(
                    "E_USAGE",
                    "descriptions are listed for level-1 and level<=2 trees",
                ))
            }
        },
        "seed" => {
            let p = level1(args, 0)?;
            let d = node(args, 1)?;
            Outcome::plain(vec![field("result", p.seed(&d)?.to_string())])
        }
        "factorings" => {
            let p = level1(args, 0)?;
            let w = level1(args, 1)?;
            let maps = p.factorings(&w);
            let shifts: Result<Vec<IndexMap>, _> = maps.iter().map(|s| s.to_shift(&p, &w)).collect();
            Outcome::plain(vec![
                field("count", maps.len()),
                field("exists", p.factor_exists(&w)),
                field("strict", p.strict_factor_exists(&w)),
                field("maps", maps),
                field("shifts", shifts?),
            ])
        }
        "tower" => {
            let t = tower1(args, 0)?;
            let regular: Vec<bool> = t.regularity();
            Outcome::plain(vec![
                field("result", t.to_string()),
                field("height", t.height()),
                field("new-nodes", t.new_nodes()),
                field("regular", regular),
            ])
        }
        "s1" => {
            let t = tower1(args, 0)?;
            let alphas: Vec<CtblOrd> = parse(args, 1, |p| Ok(p.list(Parser::ctbl)?))?;
            Outcome::predicate(s1_member(&t, &alphas)?, vec![])
        }
        "analyze" => {
            let b = uord(args, 0)?;
            let w = level1(args, 1)?;
            let a = analyze(&b, &w)?;
            Outcome::plain(vec![
                field("signature", a.signature.clone()),
                field("seeds", a.seeds.clone()),
                field("continuous", a.essentially_continuous),
                field("ucf", a.uniform_cofinality.to_string()),
                field("induced-tower", a.induced_tower.to_string()),
                field("factoring", a.factoring_map.to_string()),
                field("approximations", a.approximations.clone()),
                field("potential-tower", a.potential_tower.to_string()),
            ])
        }
        "cfl" => Outcome::plain(vec![field("result", uord(args, 0)?.cf_l().to_string())]),
        "shift" | "shift-sup" => {
            let s = index_map(args, 0)?;
            let b = uord(args, 1)?;
            let v = if op == "shift" {
                apply_shift(&s, &b)?
            } else {
                apply_shift_sup(&s, &b)?
            };
            let mut fields = vec![field("result", v.to_string())];
            if b.is_limit() {
                fields.push(field("continuous", is_continuity_point(&s, &b)?));
            }
            Outcome::plain(fields)
        }
        "decompose" => {
            let s = index_map(args, 0)?;
            let k = u32::try_from(nat(args, 1)?).map_err(|_| Failure::usage("E_USAGE", "k too large"))?;
            let (a, b) = decompose_shift(&s, k)?;
            Outcome::plain(vec![field("outer", a.to_string()), field("inner", b.to_string())])
        }
        "embed" => {
            let p = level1(args, 0)?;
            let p2 = level1(args, 1)?;
            let b = uord(args, 2)?;
            let mut fields = vec![field("result", tree_embed(&p, &p2, &b)?.to_string())];
            if b.is_limit() {
                fields.push(field("sup", tree_embed_sup(&p, &p2, &b)?.to_string()));
            }
            Outcome::plain(fields)
        }
        "respects" => verdict(respects_le2(&le2(args, 0)?, &tuple(args, 1)?)?),
        "weak-respects" => verdict(weakly_respects_le2(&le2(args, 0)?, &tuple(args, 1)?)?),
        "eval-desc" => {
            let q = le2(args, 0)?;
            let t = tuple(args, 1)?;
            let d = parse(args, 2, Parser::description)?;
            let v = evaluate_description(&q, &t, &d)?;
            Outcome::plain(vec![
                field("result", v.to_string()),
                field("kind", q.classify(&d).to_string()),
            ])
        }
        "recover" => {
            let q = le2(args, 0)?;
            let t = tuple(args, 1)?;
            let found = recover_tree(&DomainShape::of(&q), &t)?;
            Outcome::plain(vec![
                field("result", found.to_string()),
                field("same-as-input", found == q),
            ])
        }
        "s2" => {
            let trees = parse(args, 0, |p| p.tree_list(Parser::level2))?;
            let tower = Level2Tower::validate(trees)?;
            let alphas: Vec<UOrd> = parse(args, 1, |p| Ok(p.list(Parser::uord)?))?;
            let variant = match args.get(2) {
                None => S2Variant::Respects,
                Some(_) => match word(args, 2, &["respects", "weak"])? {
                    "weak" => S2Variant::Weak,
                    _ => S2Variant::Respects,
                },
            };
            Outcome::predicate(s2_member(&tower, &alphas, variant)?, vec![])
        }
        "ucf" => {
            let pt = parse(args, 0, Parser::partial_le2)?;
            let (u, case) = pt.ucf_case();
            Outcome::plain(vec![field("result", u.to_string()), field("case", case.to_string())])
        }
        "cf3" => {
            let pt = parse(args, 0, Parser::partial_le2)?;
            Outcome::plain(vec![field("result", pt.cf3().to_string())])
        }
        "complete" => {
            let pt = parse(args, 0, Parser::partial_le2)?;
            let all = pt.completions()?;
            Outcome::plain(vec![field("count", all.len()), field("result", all)])
        }
        "s3-structural" => {
            let trees = parse(args, 0, |p| p.tree_list(Parser::level3))?;
            let variant = match args.get(1) {
                None => S3Variant::Plain,
                Some(_) => match word(args, 1, &["minus", "plain"])? {
                    "minus" => S3Variant::Minus,
                    _ => S3Variant::Plain,
                },
            };
            match s3_structural_member(&trees, variant) {
                S3Verdict::StructurallyValid => Outcome::predicate(
                    true,
                    vec![field("note", "ordinal clause not evaluated")],
                ),
                S3Verdict::Rejected(e) => Outcome::predicate(
                    false,
                    vec![field("code", e.code()), field("detail", e.to_string())],
                ),
            }
        }
        "enumerate" => {
            let kind = word(args, 0, &["level1", "level2", "level-le2", "partial-le1", "partial-le2"])?;
            let n = nat(args, 1)? as usize;
            if n > MAX_ENUMERATE {
                return Err(Failure::usage(
                    "E_BOUND",
                    format!("enumeration is limited to n <= {MAX_ENUMERATE}"),
                ));
            }
            let items: Vec<String> = match kind {
                "level1" => level1_trees(n).iter().map(ToString::to_string).collect(),
                "level2" => level2_layers(n)
                    .iter()
                    .flatten()
                    .map(ToString::to_string)
                    .collect(),
                "level-le2" => level_le2_trees(n).iter().map(ToString::to_string).collect(),
                "partial-le1" => partial_le1_trees(n).iter().map(ToString::to_string).collect(),
                _ => partial_le2_trees(n).iter().map(ToString::to_string).collect(),
            };
            Outcome::plain(vec![field("count", items.len()), field("result", items)])
        }
        "check-lemmas" => {
            let suites = check_lemmas(opts.bound, opts.seed);
            let all = suites.iter().all(|s| s.passed());
            let mut fields = vec![field("bound", opts.bound), field("seed", opts.seed.to_string())];
            for s in &suites {
                let mut line = format!(
                    "{} checked={} skipped={} failures={}",
                    if s.passed() { "pass" } else { "fail" },
                    s.checked,
                    s.skipped,
                    s.failures.len()
                );
                for n in &s.notes {
                    line.push_str(&format!("; {n}"));
                }
                fields.push(field(&s.name, line));
                if let Some(x) = s.failures.first() {
                    fields.push(field(&format!("{}.counterexample", s.name), x.clone()));
                }
            }
            Outcome::predicate(all, fields)
        }
        "batch" => return Err(Failure::usage("E_USAGE", "batch files cannot run batch")),
        _ => unreachable!("arity() rejects unknown commands"),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::split::split_line;

    fn go(line: &str) -> Report {
        let mut a = split_line(line, 1).unwrap();
        let op = a.remove(0).text;
        run(&op, &a, &Options { seed: 0, bound: 2 })
    }

    fn result(line: &str) -> String {
        let r = go(line);
        assert!(r.failure.is_none(), "{line}: {:?}", r.failure);
        match &r.fields.iter().find(|(k, _)| k == "result").unwrap().1 {
            Value::Text(s) => s.clone(),
            Value::List(v) => format!("[{}]", v.join(", ")),
        }
    }

    #[test]
    fn basic_commands() {
        assert_eq!(result("seed {(0) (0 0)} ∅"), "u3");
        assert_eq!(result("seed {(0) (0 0)} (0 0)"), "u1");
        assert_eq!(result("order-type {(0)}"), "w + 1");
        assert_eq!(result("compare (0 0) (0)"), "<");
        assert_eq!(result("compare \"u2 + u1\" u2*2"), "<");
        assert_eq!(result("compare {(0)} ((0) 3) ((0))"), "<");
        assert_eq!(result("cfl \"u2 + u1*2\""), "u1");
        assert_eq!(result("shift {1->2}:2 \"u1 + 5\""), "u2 + 5");
        assert_eq!(result("shift-sup {1->2}:2 u1"), "u1");
        assert_eq!(result("descriptions {(0) (0 0)}"), "[(0 0), (0), ()]");
    }

    #[test]
    fn errors_carry_codes_and_locations() {
        let r = go("seed {(0)}");
        assert_eq!(r.failure.as_ref().unwrap().code, "E_ARITY");
        assert_eq!(r.exit_code(), 2);
        let r = go("validate {(1)}");
        assert_eq!(r.failure.as_ref().unwrap().code, "E_CLOSURE");
        assert_eq!(r.exit_code(), 1);
        let r = go("cfl \"u1 + + 2\"");
        let f = r.failure.unwrap();
        assert_eq!(f.code, "E_SYNTAX");
        assert_eq!(f.location.map(|l| (l.arg, l.line, l.col)), Some((1, 1, 11)));
        assert_eq!(go("frobnicate").failure.unwrap().code, "E_USAGE");
        assert_eq!(go("regular {(0) (1)}").exit_code(), 1);
    }
}

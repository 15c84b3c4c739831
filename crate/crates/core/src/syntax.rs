//! Textual grammar for nodes, trees, towers, ordinals and level ≤3 trees.
//!
//! Every printer in the crate emits a form this module reads back.
//!
//! ```text
//! node        (0 0)          ()  or  ∅
//! ext node    (0 1)  or  -1
//! tree        {(0) (0 0)}
//! tower       [{} {(0)}]
//! ordinal     u3*2 + u1*(w^2 + 3) + 5
//! index map   {1->2, 2->3}:3
//! key         ((0) (0 0))
//! star key    ((0) -1)
//! level 2     <() -> ({}, (0)); ((0)) -> ({(0)}, (0 0))>
//! level ≤2    <{(0)} | () -> ({}, (0))>
//! partial ≤2  (<{} | () -> ({}, (0))>, (1, (0), {}))
//! level 3     <<((0)) -> (<{} | () -> ({}, (0))>, (0, -1, {}))>>
//! tuple       [(0)=w*2, (0 0)=w]    [2:()=u1, 2:((0))=u1*2]
//! description (1, (0))    (2, (((0) -1), {(0) (0 0)}, ((0) (0 0))))
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::level1::{Level1Tower, Level1Tree, Rep1Element};
use crate::level2::{
    Description, DomKey, Level2Tree, LevelLe2Tree, PartialLevel1Tree, PotentialTower, QDesc,
};
use crate::level3::{Level3Tree, PartialLevelLe2Tree};
use crate::node::{ExtNode, Key, Node, StarKey};
use crate::ordinal::{CtblOrd, IndexMap, UOrd};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl SyntaxError {
    /// Relocates an error found in a fragment that starts at `(line, col)`.
    pub fn offset(mut self, line: usize, col: usize) -> Self {
        if self.line == 1 {
            self.col += col - 1;
        }
        self.line += line - 1;
        self
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at {}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for SyntaxError {}

/// A syntax error, or well-formed text naming an invalid object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TextError {
    Syntax(SyntaxError),
    Invalid(Error),
}

impl TextError {
    pub fn code(&self) -> &'static str {
        match self {
            TextError::Syntax(_) => "E_SYNTAX",
            TextError::Invalid(e) => e.code(),
        }
    }
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextError::Syntax(e) => write!(f, "{e}"),
            TextError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TextError {}

impl From<SyntaxError> for TextError {
    fn from(e: SyntaxError) -> Self {
        TextError::Syntax(e)
    }
}

impl From<Error> for TextError {
    fn from(e: Error) -> Self {
        TextError::Invalid(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open(char),
    Close(char),
    Arrow,
    Sym(char),
    Num(u64),
    Neg(u64),
    Word(String),
    Empty,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Open(c) | Tok::Close(c) | Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Arrow => write!(f, "'->'"),
            Tok::Num(n) => write!(f, "{n}"),
            Tok::Neg(n) => write!(f, "-{n}"),
            Tok::Word(w) => write!(f, "'{w}'"),
            Tok::Empty => write!(f, "'∅'"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize, usize)>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    let err = |line, col, msg: String| SyntaxError { line, col, msg };
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let mut take = 1;
        let tok = match c {
            '(' | '{' | '[' | '<' => Tok::Open(c),
            ')' | '}' | ']' | '>' => Tok::Close(c),
            '|' | ';' | ',' | '+' | '*' | '^' | ':' | '=' => Tok::Sym(c),
            '∅' => Tok::Empty,
            'ω' => Tok::Word("w".into()),
            '-' => match chars.get(i + 1) {
                Some('>') => {
                    take = 2;
                    Tok::Arrow
                }
                Some(d) if d.is_ascii_digit() => {
                    let (n, len) = number(&chars[i + 1..]).ok_or_else(|| {
                        err(l0, c0, "number too large".into())
                    })?;
                    take = 1 + len;
                    Tok::Neg(n)
                }
                _ => return Err(err(l0, c0, "expected '->' or a negative number".into())),
            },
            d if d.is_ascii_digit() => {
                let (n, len) =
                    number(&chars[i..]).ok_or_else(|| err(l0, c0, "number too large".into()))?;
                take = len;
                Tok::Num(n)
            }
            a if a.is_ascii_alphabetic() => {
                let len = chars[i..]
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric())
                    .count();
                take = len;
                Tok::Word(chars[i..i + len].iter().collect())
            }
            other => return Err(err(l0, c0, format!("unexpected character '{other}'"))),
        };
        out.push((tok, l0, c0));
        i += take;
        col += take;
    }
    Ok(out)
}

fn number(chars: &[char]) -> Option<(u64, usize)> {
    let digits: String = chars.iter().take_while(|c| c.is_ascii_digit()).collect();
    digits.parse().ok().map(|n| (n, digits.chars().count()))
}

/// Recursive-descent reader over one text.
pub struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    end: (usize, usize),
}

type PResult<T> = Result<T, SyntaxError>;

impl Parser {
    pub fn new(text: &str) -> PResult<Self> {
        let toks = lex(text)?;
        let last_line = text.split('\n').count();
        let last_col = text.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Ok(Parser {
            toks,
            pos: 0,
            end: (last_line, last_col),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|t| &t.0)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.end, |t| (t.1, t.2))
    }

    fn fail<T>(&self, msg: impl Into<String>) -> PResult<T> {
        let (line, col) = self.here();
        let found = match self.peek() {
            Some(t) => format!("found {t}"),
            None => "found end of input".to_string(),
        };
        Err(SyntaxError {
            line,
            col,
            msg: format!("{}, {found}", msg.into()),
        })
    }

    fn at(&self, t: &Tok) -> bool {
        self.peek() == Some(t)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.at(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> PResult<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            self.fail(format!("expected {t}"))
        }
    }

    pub fn finish(&self) -> PResult<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.fail("expected end of input")
        }
    }

    fn nat(&mut self) -> PResult<u64> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.fail("expected a natural number"),
        }
    }

    fn nat32(&mut self) -> PResult<u32> {
        let n = self.nat()?;
        match u32::try_from(n) {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos -= 1;
                self.fail("number too large")
            }
        }
    }

    pub fn node(&mut self) -> PResult<Node> {
        if self.eat(&Tok::Empty) {
            return Ok(Node::root());
        }
        self.expect(Tok::Open('('))?;
        let mut v = Vec::new();
        while !self.eat(&Tok::Close(')')) {
            v.push(self.nat32()?);
        }
        Ok(Node::new(v))
    }

    pub fn ext_node(&mut self) -> PResult<ExtNode> {
        if self.eat(&Tok::Neg(1)) {
            Ok(ExtNode::Minus)
        } else {
            Ok(ExtNode::Node(self.node()?))
        }
    }

    /// The nodes of `{…}`, unvalidated.
    pub fn nodes(&mut self) -> PResult<Vec<Node>> {
        if self.eat(&Tok::Empty) {
            return Ok(Vec::new());
        }
        self.expect(Tok::Open('{'))?;
        let mut v = Vec::new();
        while !self.eat(&Tok::Close('}')) {
            self.eat(&Tok::Sym(','));
            if self.eat(&Tok::Close('}')) {
                break;
            }
            v.push(self.node()?);
        }
        Ok(v)
    }

    pub fn tower_nodes(&mut self) -> PResult<Vec<Vec<Node>>> {
        self.expect(Tok::Open('['))?;
        let mut v = Vec::new();
        while !self.eat(&Tok::Close(']')) {
            v.push(self.nodes()?);
        }
        Ok(v)
    }

    pub fn key(&mut self) -> PResult<Key> {
        if self.eat(&Tok::Empty) {
            return Ok(Key::empty());
        }
        self.expect(Tok::Open('('))?;
        let mut v = Vec::new();
        while !self.eat(&Tok::Close(')')) {
            v.push(self.node()?);
        }
        Ok(Key::new(v))
    }

    pub fn star_key(&mut self) -> PResult<StarKey> {
        if self.eat(&Tok::Empty) {
            return Ok(Key::empty().star());
        }
        self.expect(Tok::Open('('))?;
        let mut v = Vec::new();
        loop {
            if self.eat(&Tok::Close(')')) {
                return Ok(Key::new(v).star());
            }
            if self.eat(&Tok::Neg(1)) {
                self.expect(Tok::Close(')'))?;
                return Ok(Key::new(v).with_minus());
            }
            v.push(self.node()?);
        }
    }

    fn omega_word(&mut self) -> bool {
        if let Some(Tok::Word(w)) = self.peek() {
            if w == "w" {
                self.pos += 1;
                return true;
            }
        }
        false
    }

    fn exponent(&mut self) -> PResult<CtblOrd> {
        if self.eat(&Tok::Open('(')) {
            let e = self.ctbl()?;
            self.expect(Tok::Close(')'))?;
            Ok(e)
        } else if self.omega_word() {
            Ok(CtblOrd::omega())
        } else {
            Ok(CtblOrd::nat(self.nat()?))
        }
    }

    /// `n` or `w[^e][*n]`.
    fn ctbl_term(&mut self) -> PResult<CtblOrd> {
        if self.omega_word() {
            let e = if self.eat(&Tok::Sym('^')) {
                self.exponent()?
            } else {
                CtblOrd::one()
            };
            let c = if self.eat(&Tok::Sym('*')) { self.nat()? } else { 1 };
            Ok(CtblOrd::term(e, c))
        } else if matches!(self.peek(), Some(Tok::Num(_))) {
            Ok(CtblOrd::nat(self.nat()?))
        } else {
            self.fail("expected a countable ordinal term")
        }
    }

    pub fn ctbl(&mut self) -> PResult<CtblOrd> {
        let mut acc = self.ctbl_term()?;
        while self.eat(&Tok::Sym('+')) {
            acc = acc.add(&self.ctbl_term()?);
        }
        Ok(acc)
    }

    fn u_level(&mut self) -> Option<u32> {
        if let Some(Tok::Word(w)) = self.peek() {
            if let Some(k) = w.strip_prefix('u').and_then(|d| d.parse::<u32>().ok()) {
                if k >= 1 {
                    self.pos += 1;
                    return Some(k);
                }
            }
        }
        None
    }

    fn u_coefficient(&mut self) -> PResult<CtblOrd> {
        if self.eat(&Tok::Open('(')) {
            let c = self.ctbl()?;
            self.expect(Tok::Close(')'))?;
            Ok(c)
        } else if self.omega_word() {
            let e = if self.eat(&Tok::Sym('^')) {
                self.exponent()?
            } else {
                CtblOrd::one()
            };
            Ok(CtblOrd::omega_pow(e))
        } else {
            Ok(CtblOrd::nat(self.nat()?))
        }
    }

    fn uord_term(&mut self) -> PResult<UOrd> {
        if let Some(k) = self.u_level() {
            let c = if self.eat(&Tok::Sym('*')) {
                self.u_coefficient()?
            } else {
                CtblOrd::one()
            };
            Ok(UOrd::u_times(k, c))
        } else if matches!(self.peek(), Some(Tok::Word(w)) if w != "w") {
            self.fail("expected u<k>, w or a number")
        } else {
            Ok(UOrd::countable(self.ctbl_term()?))
        }
    }

    pub fn uord(&mut self) -> PResult<UOrd> {
        let mut acc = self.uord_term()?;
        while self.eat(&Tok::Sym('+')) {
            acc = acc.add(&self.uord_term()?);
        }
        Ok(acc)
    }

    /// `{1->a, 2->b, …}:n`.
    pub fn index_map(&mut self) -> PResult<(Vec<u32>, u32)> {
        self.expect(Tok::Open('{'))?;
        let mut values = Vec::new();
        while !self.eat(&Tok::Close('}')) {
            if !values.is_empty() {
                self.expect(Tok::Sym(','))?;
            }
            let i = self.nat32()?;
            if i as usize != values.len() + 1 {
                self.pos -= 1;
                return self.fail(format!("expected argument {}", values.len() + 1));
            }
            self.expect(Tok::Arrow)?;
            values.push(self.nat32()?);
        }
        self.expect(Tok::Sym(':'))?;
        Ok((values, self.nat32()?))
    }

    /// `((0) 3)` or `((0))`.
    pub fn rep1(&mut self) -> PResult<Rep1Element> {
        self.expect(Tok::Open('('))?;
        let p = self.node()?;
        let out = match self.peek() {
            Some(Tok::Num(_)) => Rep1Element::Pair(p, self.nat()?),
            _ => Rep1Element::Top(p),
        };
        self.expect(Tok::Close(')'))?;
        Ok(out)
    }

    fn l2_entries(&mut self) -> PResult<Vec<(Key, Vec<Node>, ExtNode)>> {
        let mut v = Vec::new();
        if self.at(&Tok::Close('>')) {
            return Ok(v);
        }
        loop {
            let k = self.key()?;
            self.expect(Tok::Arrow)?;
            self.expect(Tok::Open('('))?;
            let p = self.nodes()?;
            self.expect(Tok::Sym(','))?;
            let t = self.ext_node()?;
            self.expect(Tok::Close(')'))?;
            v.push((k, p, t));
            if !self.eat(&Tok::Sym(';')) {
                return Ok(v);
            }
        }
    }

    /// `<key -> (tree, node); …>`, unvalidated.
    pub fn level2_raw(&mut self) -> PResult<Vec<(Key, Vec<Node>, ExtNode)>> {
        self.expect(Tok::Open('<'))?;
        let v = self.l2_entries()?;
        self.expect(Tok::Close('>'))?;
        Ok(v)
    }

    pub fn level2(&mut self) -> Result<Level2Tree, TextError> {
        let raw = self.level2_raw()?;
        let mut entries = Vec::new();
        for (k, p, t) in raw {
            entries.push((k, Level1Tree::validate(p)?, t));
        }
        Ok(Level2Tree::validate(entries)?)
    }

    pub fn level1(&mut self) -> Result<Level1Tree, TextError> {
        Ok(Level1Tree::validate(self.nodes()?)?)
    }

    pub fn tower1(&mut self) -> Result<Level1Tower, TextError> {
        let mut trees = Vec::new();
        for t in self.tower_nodes()? {
            trees.push(Level1Tree::validate(t)?);
        }
        Ok(Level1Tower::validate(trees)?)
    }

    /// `<{…} | entries>`; a bare level-2 tree gets an empty level-1 part.
    pub fn level_le2(&mut self) -> Result<LevelLe2Tree, TextError> {
        self.expect(Tok::Open('<'))?;
        let t1 = if matches!(self.peek(), Some(Tok::Open('{')) | Some(Tok::Empty))
            && !matches!(self.peek2(), Some(Tok::Arrow))
        {
            let t1 = self.level1()?;
            self.expect(Tok::Sym('|'))?;
            t1
        } else {
            Level1Tree::empty()
        };
        let raw = self.l2_entries()?;
        self.expect(Tok::Close('>'))?;
        let mut entries = Vec::new();
        for (k, p, t) in raw {
            entries.push((k, Level1Tree::validate(p)?, t));
        }
        Ok(LevelLe2Tree::new(t1, Level2Tree::validate(entries)?))
    }

    /// `0:-1`, `1:(0)` or `2:((0))`.
    pub fn dom_key(&mut self) -> PResult<DomKey> {
        let d = self.nat()?;
        self.expect(Tok::Sym(':'))?;
        match d {
            0 => {
                self.expect(Tok::Neg(1))?;
                Ok(DomKey::Zero)
            }
            1 => Ok(DomKey::One(self.node()?)),
            2 => Ok(DomKey::Two(self.key()?)),
            _ => {
                self.pos -= 2;
                self.fail("expected degree 0, 1 or 2")
            }
        }
    }

    /// `(1, p)` or `(2, (q, P, (p_0 …)))`.
    pub fn description(&mut self) -> Result<Description, TextError> {
        self.expect(Tok::Open('('))?;
        let d = self.nat()?;
        self.expect(Tok::Sym(','))?;
        let out = match d {
            1 => Description::One(self.node()?),
            2 => Description::Two(self.qdesc()?),
            _ => {
                self.pos -= 2;
                return Err(self.fail::<()>("expected level 1 or 2").unwrap_err().into());
            }
        };
        self.expect(Tok::Close(')'))?;
        Ok(out)
    }

    /// `[2:()=u1, …]`.
    pub fn ord_tuple(&mut self) -> PResult<BTreeMap<DomKey, UOrd>> {
        let mut out = BTreeMap::new();
        let here = self.here();
        for (k, v) in self.tuple(Parser::dom_key, Parser::uord)? {
            if out.insert(k.clone(), v).is_some() {
                return Err(SyntaxError {
                    line: here.0,
                    col: here.1,
                    msg: format!("duplicate entry for {k}"),
                });
            }
        }
        Ok(out)
    }

    /// `(Q, (d, q, P))`.
    pub fn partial_le2(&mut self) -> Result<PartialLevelLe2Tree, TextError> {
        self.expect(Tok::Open('('))?;
        let base = self.level_le2()?;
        self.expect(Tok::Sym(','))?;
        self.expect(Tok::Open('('))?;
        let d = self.nat()?;
        self.expect(Tok::Sym(','))?;
        let node = match d {
            0 => {
                self.expect(Tok::Neg(1))?;
                DomKey::Zero
            }
            1 => DomKey::One(self.node()?),
            2 => DomKey::Two(self.key()?),
            _ => return Err(self.fail::<()>("expected degree 0, 1 or 2").unwrap_err().into()),
        };
        self.expect(Tok::Sym(','))?;
        let p = self.level1()?;
        self.expect(Tok::Close(')'))?;
        self.expect(Tok::Close(')'))?;
        Ok(PartialLevelLe2Tree::new(base, node, p)?)
    }

    /// `<<key -> partial; …>>`.
    pub fn level3(&mut self) -> Result<Level3Tree, TextError> {
        self.expect(Tok::Open('<'))?;
        self.expect(Tok::Open('<'))?;
        let mut raw = Vec::new();
        if !self.at(&Tok::Close('>')) {
            loop {
                let k = self.key()?;
                self.expect(Tok::Arrow)?;
                raw.push((k, self.partial_le2()?));
                if !self.eat(&Tok::Sym(';')) {
                    break;
                }
            }
        }
        self.expect(Tok::Close('>'))?;
        self.expect(Tok::Close('>'))?;
        Ok(Level3Tree::validate(raw)?)
    }

    /// `(P, t)`.
    pub fn partial_le1(&mut self) -> Result<PartialLevel1Tree, TextError> {
        self.expect(Tok::Open('('))?;
        let p = self.level1()?;
        self.expect(Tok::Sym(','))?;
        let t = self.ext_node()?;
        self.expect(Tok::Close(')'))?;
        Ok(PartialLevel1Tree::new(p, t)?)
    }

    /// `(P, (p₀ p₁ …))`.
    pub fn potential_tower(&mut self) -> Result<PotentialTower, TextError> {
        self.expect(Tok::Open('('))?;
        let p = self.level1()?;
        self.expect(Tok::Sym(','))?;
        let nodes = self.ext_list()?;
        self.expect(Tok::Close(')'))?;
        Ok(PotentialTower::new(p, nodes)?)
    }

    fn ext_list(&mut self) -> PResult<Vec<ExtNode>> {
        self.expect(Tok::Open('('))?;
        let mut v = Vec::new();
        while !self.eat(&Tok::Close(')')) {
            v.push(self.ext_node()?);
        }
        Ok(v)
    }

    /// `(q*, P, (p₀ p₁ …))`.
    pub fn qdesc(&mut self) -> Result<QDesc, TextError> {
        self.expect(Tok::Open('('))?;
        let key = self.star_key()?;
        self.expect(Tok::Sym(','))?;
        let p = self.level1()?;
        self.expect(Tok::Sym(','))?;
        let nodes = self.ext_list()?;
        self.expect(Tok::Close(')'))?;
        Ok(QDesc {
            key,
            tower: PotentialTower::new(p, nodes)?,
        })
    }

    /// `[label=value, …]` with caller-supplied readers.
    pub fn tuple<L, V>(
        &mut self,
        mut label: impl FnMut(&mut Self) -> PResult<L>,
        mut value: impl FnMut(&mut Self) -> PResult<V>,
    ) -> PResult<Vec<(L, V)>> {
        self.expect(Tok::Open('['))?;
        let mut v = Vec::new();
        while !self.eat(&Tok::Close(']')) {
            if !v.is_empty() {
                self.expect(Tok::Sym(','))?;
            }
            let l = label(self)?;
            self.expect(Tok::Sym('='))?;
            v.push((l, value(self)?));
        }
        Ok(v)
    }

    /// `[a, b, …]`.
    pub fn list<V>(&mut self, mut value: impl FnMut(&mut Self) -> PResult<V>) -> PResult<Vec<V>> {
        self.expect(Tok::Open('['))?;
        let mut v = Vec::new();
        while !self.eat(&Tok::Close(']')) {
            if !v.is_empty() {
                self.expect(Tok::Sym(','))?;
            }
            v.push(value(self)?);
        }
        Ok(v)
    }

    /// A list of level-2 or level-3 trees.
    pub fn tree_list<T>(
        &mut self,
        mut item: impl FnMut(&mut Self) -> Result<T, TextError>,
    ) -> Result<Vec<T>, TextError> {
        self.expect(Tok::Open('['))?;
        let mut v = Vec::new();
        while !self.eat(&Tok::Close(']')) {
            v.push(item(self)?);
        }
        Ok(v)
    }
}

/// Runs `f` on the whole of `text`.
pub fn parse_all<T, E: From<SyntaxError>>(
    text: &str,
    f: impl FnOnce(&mut Parser) -> Result<T, E>,
) -> Result<T, E> {
    let mut p = Parser::new(text)?;
    let out = f(&mut p)?;
    p.finish()?;
    Ok(out)
}

pub fn parse_node(text: &str) -> Result<Node, SyntaxError> {
    parse_all(text, Parser::node)
}

pub fn parse_level1(text: &str) -> Result<Level1Tree, TextError> {
    parse_all(text, Parser::level1)
}

pub fn parse_tower1(text: &str) -> Result<Level1Tower, TextError> {
    parse_all(text, Parser::tower1)
}

pub fn parse_ctbl(text: &str) -> Result<CtblOrd, SyntaxError> {
    parse_all(text, Parser::ctbl)
}

pub fn parse_uord(text: &str) -> Result<UOrd, SyntaxError> {
    parse_all(text, Parser::uord)
}

pub fn parse_index_map(text: &str) -> Result<IndexMap, TextError> {
    let (v, n) = parse_all(text, Parser::index_map)?;
    Ok(IndexMap::new(v, n)?)
}

pub fn parse_key(text: &str) -> Result<Key, SyntaxError> {
    parse_all(text, Parser::key)
}

pub fn parse_star_key(text: &str) -> Result<StarKey, SyntaxError> {
    parse_all(text, Parser::star_key)
}

pub fn parse_level2(text: &str) -> Result<Level2Tree, TextError> {
    parse_all(text, Parser::level2)
}

pub fn parse_level_le2(text: &str) -> Result<LevelLe2Tree, TextError> {
    parse_all(text, Parser::level_le2)
}

pub fn parse_partial_le2(text: &str) -> Result<PartialLevelLe2Tree, TextError> {
    parse_all(text, Parser::partial_le2)
}

pub fn parse_level3(text: &str) -> Result<Level3Tree, TextError> {
    parse_all(text, Parser::level3)
}

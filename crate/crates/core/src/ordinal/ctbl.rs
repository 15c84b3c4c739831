//! Countable ordinals below ε₀ in base-ω Cantor normal form.

use std::cmp::Ordering;
use std::fmt;

/// `ω^{e₁}·c₁ + … + ω^{e_k}·c_k` with `e₁ > … > e_k` and every `cᵢ ≥ 1`.
/// Zero is the empty sum.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CtblOrd {
    terms: Vec<(CtblOrd, u64)>,
}

impl CtblOrd {
    pub fn zero() -> Self {
        CtblOrd { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::nat(1)
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            CtblOrd {
                terms: vec![(CtblOrd::zero(), n)],
            }
        }
    }

    pub fn omega() -> Self {
        Self::omega_pow(Self::one())
    }

    /// `ω^e`.
    pub fn omega_pow(e: CtblOrd) -> Self {
        CtblOrd { terms: vec![(e, 1)] }
    }

    /// `ω^e · c`; zero when `c = 0`.
    pub fn term(e: CtblOrd, c: u64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            CtblOrd { terms: vec![(e, c)] }
        }
    }

    /// Builds from raw terms, checking the normal-form invariants.
    pub fn from_terms(terms: Vec<(CtblOrd, u64)>) -> Option<Self> {
        if terms.iter().any(|(_, c)| *c == 0) {
            return None;
        }
        if terms.windows(2).any(|w| w[0].0 <= w[1].0) {
            return None;
        }
        Some(CtblOrd { terms })
    }

    pub fn terms(&self) -> &[(CtblOrd, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero and without a finite part.
    pub fn is_limit(&self) -> bool {
        matches!(self.terms.last(), Some((e, _)) if !e.is_zero())
    }

    pub fn is_successor(&self) -> bool {
        matches!(self.terms.last(), Some((e, _)) if e.is_zero())
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, c)] if e.is_zero() => Some(*c),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_nat().is_some()
    }

    /// Splits `self = λ + n` with `λ` zero or a limit and `n` finite.
    pub fn split_finite(&self) -> (CtblOrd, u64) {
        match self.terms.last() {
            Some((e, c)) if e.is_zero() => (
                CtblOrd {
                    terms: self.terms[..self.terms.len() - 1].to_vec(),
                },
                *c,
            ),
            _ => (self.clone(), 0),
        }
    }

    /// The predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<CtblOrd> {
        let (lim, n) = self.split_finite();
        if n == 0 {
            None
        } else {
            Some(lim.add(&CtblOrd::nat(n - 1)))
        }
    }

    pub fn succ(&self) -> CtblOrd {
        self.add(&CtblOrd::one())
    }

    /// Leading exponent (the "degree"); `None` for zero.
    pub fn leading_exponent(&self) -> Option<&CtblOrd> {
        self.terms.first().map(|(e, _)| e)
    }

    /// Ordinal addition.
    pub fn add(&self, rhs: &CtblOrd) -> CtblOrd {
        let Some((e, c)) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<(CtblOrd, u64)> = Vec::new();
        let mut lead = *c;
        for (te, tc) in &self.terms {
            match te.cmp(e) {
                Ordering::Greater => terms.push((te.clone(), *tc)),
                Ordering::Equal => lead += *tc,
                Ordering::Less => break,
            }
        }
        terms.push((e.clone(), lead));
        terms.extend(rhs.terms[1..].iter().cloned());
        CtblOrd { terms }
    }

    /// Ordinal multiplication `self · rhs`.
    pub fn mul(&self, rhs: &CtblOrd) -> CtblOrd {
        if self.is_zero() || rhs.is_zero() {
            return CtblOrd::zero();
        }
        let (lead_e, lead_c) = &self.terms[0];
        let mut out = CtblOrd::zero();
        for (f, m) in &rhs.terms {
            let piece = if f.is_zero() {
                let mut terms = self.terms.clone();
                terms[0].1 = lead_c * m;
                CtblOrd { terms }
            } else {
                CtblOrd::term(lead_e.add(f), *m)
            };
            out = out.add(&piece);
        }
        out
    }

    /// `self · n` for a natural `n`.
    pub fn mul_nat(&self, n: u64) -> CtblOrd {
        self.mul(&CtblOrd::nat(n))
    }

    /// Writes `self = δ + ω^e` (the last term with coefficient split off).
    pub fn split_last(&self) -> Option<(CtblOrd, CtblOrd)> {
        let (e, c) = self.terms.last()?;
        let mut terms = self.terms.clone();
        if *c == 1 {
            terms.pop();
        } else {
            terms.last_mut().unwrap().1 -= 1;
        }
        Some((CtblOrd { terms }, e.clone()))
    }

    /// Whether the printed form is a single atom (`7`, `w`, `w^2`).
    pub(crate) fn is_atomic_print(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [(e, c)] => e.is_zero() || *c == 1,
            _ => false,
        }
    }
}

impl Ord for CtblOrd {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(other.terms.iter()) {
            match a.0.cmp(&b.0) {
                Ordering::Equal => {}
                o => return o,
            }
            match a.1.cmp(&b.1) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for CtblOrd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_exponent(e: &CtblOrd, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let single = e.is_finite() || *e == CtblOrd::omega();
    if single {
        write!(f, "{e}")
    } else {
        write!(f, "({e})")
    }
}

impl fmt::Display for CtblOrd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
                continue;
            }
            write!(f, "w")?;
            if *e != CtblOrd::one() {
                write!(f, "^")?;
                fmt_exponent(e, f)?;
            }
            if *c != 1 {
                write!(f, "*{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CtblOrd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

//! Ordinals below `u_ω` in indiscernible normal form
//! `u_{k₁}·c₁ + … + u_{k_j}·c_j + c₀`.

use std::cmp::Ordering;
use std::fmt;

use super::ctbl::CtblOrd;

/// `L`-cofinality of an ordinal below `u_ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cofinality {
    Zero,
    Successor,
    Omega,
    /// `u_k`.
    U(u32),
}

impl fmt::Display for Cofinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cofinality::Zero => write!(f, "0"),
            Cofinality::Successor => write!(f, "successor"),
            Cofinality::Omega => write!(f, "w"),
            Cofinality::U(k) => write!(f, "u{k}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UOrd {
    /// `(level, coefficient)`, levels strictly decreasing, coefficients nonzero.
    terms: Vec<(u32, CtblOrd)>,
    tail: CtblOrd,
}

impl UOrd {
    pub fn zero() -> Self {
        UOrd::default()
    }

    /// `u_k`.
    pub fn u(k: u32) -> Self {
        assert!(k >= 1, "indiscernibles are indexed from 1");
        UOrd {
            terms: vec![(k, CtblOrd::one())],
            tail: CtblOrd::zero(),
        }
    }

    /// `u_k · c`.
    pub fn u_times(k: u32, c: CtblOrd) -> Self {
        assert!(k >= 1, "indiscernibles are indexed from 1");
        if c.is_zero() {
            return UOrd::zero();
        }
        UOrd {
            terms: vec![(k, c)],
            tail: CtblOrd::zero(),
        }
    }

    pub fn countable(c: CtblOrd) -> Self {
        UOrd {
            terms: Vec::new(),
            tail: c,
        }
    }

    pub fn from_parts(terms: Vec<(u32, CtblOrd)>, tail: CtblOrd) -> Option<Self> {
        if terms.iter().any(|(k, c)| *k == 0 || c.is_zero()) {
            return None;
        }
        if terms.windows(2).any(|w| w[0].0 <= w[1].0) {
            return None;
        }
        Some(UOrd { terms, tail })
    }

    pub fn terms(&self) -> &[(u32, CtblOrd)] {
        &self.terms
    }

    pub fn tail(&self) -> &CtblOrd {
        &self.tail
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.tail.is_zero()
    }

    pub fn is_countable(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_countable(&self) -> Option<&CtblOrd> {
        self.is_countable().then_some(&self.tail)
    }

    /// The largest level occurring, 0 for countable ordinals.
    pub fn max_level(&self) -> u32 {
        self.terms.first().map_or(0, |(k, _)| *k)
    }

    /// Distinct levels in decreasing order.
    pub fn levels(&self) -> Vec<u32> {
        self.terms.iter().map(|(k, _)| *k).collect()
    }

    /// `self < u_k`.
    pub fn below_u(&self, k: u32) -> bool {
        self.max_level() < k
    }

    pub fn add(&self, rhs: &UOrd) -> UOrd {
        let Some((k, c)) = rhs.terms.first() else {
            return UOrd {
                terms: self.terms.clone(),
                tail: self.tail.add(&rhs.tail),
            };
        };
        let mut terms = Vec::new();
        let mut lead = c.clone();
        for (tk, tc) in &self.terms {
            match tk.cmp(k) {
                Ordering::Greater => terms.push((*tk, tc.clone())),
                Ordering::Equal => lead = tc.add(c),
                Ordering::Less => break,
            }
        }
        terms.push((*k, lead));
        terms.extend(rhs.terms[1..].iter().cloned());
        UOrd {
            terms,
            tail: rhs.tail.clone(),
        }
    }

    /// `L`-cofinality.
    pub fn cf_l(&self) -> Cofinality {
        if !self.tail.is_zero() {
            return if self.tail.is_successor() {
                Cofinality::Successor
            } else {
                Cofinality::Omega
            };
        }
        match self.terms.last() {
            None => Cofinality::Zero,
            Some((k, c)) => {
                if c.is_successor() {
                    Cofinality::U(*k)
                } else {
                    Cofinality::Omega
                }
            }
        }
    }

    pub fn is_limit(&self) -> bool {
        matches!(self.cf_l(), Cofinality::Omega | Cofinality::U(_))
    }

    /// For `cf_L(self) = u_k`, writes `self = δ + u_k`.
    pub fn split_last_u(&self) -> Option<(UOrd, u32)> {
        if !self.tail.is_zero() {
            return None;
        }
        let (k, c) = self.terms.last()?;
        let pred = c.pred()?;
        let mut terms = self.terms.clone();
        if pred.is_zero() {
            terms.pop();
        } else {
            terms.last_mut().unwrap().1 = pred;
        }
        Some((
            UOrd {
                terms,
                tail: CtblOrd::zero(),
            },
            *k,
        ))
    }

    /// Substitutes `u_k ↦ u_{f(k)}`; `f` must be strictly increasing on the
    /// levels present.
    pub(crate) fn map_levels(&self, f: impl Fn(u32) -> u32) -> UOrd {
        UOrd {
            terms: self.terms.iter().map(|(k, c)| (f(*k), c.clone())).collect(),
            tail: self.tail.clone(),
        }
    }
}

impl From<CtblOrd> for UOrd {
    fn from(c: CtblOrd) -> Self {
        UOrd::countable(c)
    }
}

impl Ord for UOrd {
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
        match self.terms.len().cmp(&other.terms.len()) {
            Ordering::Equal => self.tail.cmp(&other.tail),
            o => o,
        }
    }
}

impl PartialOrd for UOrd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UOrd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "u{k}")?;
            if *c != CtblOrd::one() {
                if c.is_atomic_print() {
                    write!(f, "*{c}")?;
                } else {
                    write!(f, "*({c})")?;
                }
            }
        }
        if !self.tail.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}", self.tail)?;
        }
        Ok(())
    }
}

impl fmt::Debug for UOrd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> CtblOrd {
        CtblOrd::nat(k)
    }

    #[test]
    fn compare_and_add() {
        let a = UOrd::u(2).add(&UOrd::u(1));
        let b = UOrd::u_times(2, n(2));
        assert_eq!(a.cmp(&b), Ordering::Less);

        let x = UOrd::u_times(1, n(2)).add(&UOrd::countable(n(5)));
        assert_eq!(x.add(&UOrd::u(1)), UOrd::u_times(1, n(3)));
        assert_eq!(UOrd::u(2).add(&UOrd::u(2)), UOrd::u_times(2, n(2)));
        // lower levels are absorbed
        assert_eq!(UOrd::u(1).add(&UOrd::u(3)), UOrd::u(3));
    }

    #[test]
    fn cofinalities() {
        assert_eq!(UOrd::u(3).cf_l(), Cofinality::U(3));
        assert_eq!(UOrd::u_times(1, CtblOrd::omega()).cf_l(), Cofinality::Omega);
        assert_eq!(
            UOrd::u(2).add(&UOrd::u_times(1, n(2))).cf_l(),
            Cofinality::U(1)
        );
        assert_eq!(UOrd::zero().cf_l(), Cofinality::Zero);
        assert_eq!(UOrd::u(1).add(&UOrd::countable(n(1))).cf_l(), Cofinality::Successor);
        assert_eq!(
            UOrd::u(1).add(&UOrd::countable(CtblOrd::omega())).cf_l(),
            Cofinality::Omega
        );
    }

    #[test]
    fn split_last() {
        let b = UOrd::u(2).add(&UOrd::u_times(1, n(2)));
        let (d, k) = b.split_last_u().unwrap();
        assert_eq!(k, 1);
        assert_eq!(d, UOrd::u(2).add(&UOrd::u(1)));
        assert!(UOrd::u_times(1, CtblOrd::omega()).split_last_u().is_none());
    }

    #[test]
    fn display() {
        let b = UOrd::u_times(3, n(2))
            .add(&UOrd::u_times(1, CtblOrd::omega_pow(n(2)).add(&n(3))))
            .add(&UOrd::countable(n(5)));
        assert_eq!(b.to_string(), "u3*2 + u1*(w^2 + 3) + 5");
    }
}

//! Order-preserving index maps `σ : {1,…,n} → {1,…,n'}` and the induced
//! shifts `j^σ` (substitution of indiscernibles) and `j^σ_sup`.

use std::fmt;

use super::uord::{Cofinality, UOrd};
use crate::error::{Error, Result};

/// A strictly increasing `σ : {1,…,n} → {1,…,n'}` with the convention `σ(0) = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IndexMap {
    codomain: u32,
    values: Vec<u32>,
}

impl IndexMap {
    /// `values[i-1] = σ(i)`.
    pub fn new(values: Vec<u32>, codomain: u32) -> Result<Self> {
        let increasing = values.windows(2).all(|w| w[0] < w[1]);
        let in_range = values.iter().all(|&v| v >= 1 && v <= codomain);
        if increasing && in_range {
            Ok(IndexMap { codomain, values })
        } else {
            Err(Error::BadIndexMap(codomain))
        }
    }

    pub fn identity(n: u32) -> Self {
        IndexMap {
            codomain: n,
            values: (1..=n).collect(),
        }
    }

    /// Domain size `n`.
    pub fn n(&self) -> u32 {
        self.values.len() as u32
    }

    /// Codomain size `n'`.
    pub fn codomain(&self) -> u32 {
        self.codomain
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `σ(i)`, with `σ(0) = 0`.
    pub fn at(&self, i: u32) -> u32 {
        if i == 0 {
            0
        } else {
            self.values[(i - 1) as usize]
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &IndexMap) -> Result<IndexMap> {
        if inner.codomain != self.n() {
            return Err(Error::BadIndexMap(self.n()));
        }
        IndexMap::new(
            inner.values.iter().map(|&i| self.at(i)).collect(),
            self.codomain,
        )
    }

    /// Whether `σ(k) > σ(k−1) + 1`, the gap that makes `j^σ` discontinuous
    /// at points of cofinality `u_k`.
    pub fn has_gap_at(&self, k: u32) -> bool {
        self.at(k) > self.at(k - 1) + 1
    }

    fn check_levels(&self, b: &UOrd) -> Result<()> {
        let level = b.max_level();
        if level > self.n() {
            Err(Error::LevelOutOfRange {
                level,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for IndexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", i + 1, v)?;
        }
        write!(f, "}}:{}", self.codomain)
    }
}

impl fmt::Debug for IndexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `j^σ`: substitutes `u_k ↦ u_{σ(k)}`, fixing countable parts.
pub fn apply_shift(sigma: &IndexMap, b: &UOrd) -> Result<UOrd> {
    sigma.check_levels(b)?;
    Ok(b.map_levels(|k| sigma.at(k)))
}

/// Whether `j^σ` is continuous at the limit `b`: cofinality `ω`, or `u_k`
/// with no gap at `k`.
pub fn is_continuity_point(sigma: &IndexMap, b: &UOrd) -> Result<bool> {
    match b.cf_l() {
        Cofinality::Omega => Ok(true),
        Cofinality::U(k) => Ok(!sigma.has_gap_at(k)),
        _ => Err(Error::NotALimit),
    }
}

/// `j^σ_sup(b) = sup j^σ''b`.
///
/// At a discontinuity `b = δ + u_k` the value is `j^σ(δ) + u_{σ(k−1)+1}`:
/// the ordinals below `u_k` are generated from `u_1,…,u_{k−1}`, so their
/// images are cofinal in `u_{σ(k−1)+1}`.
pub fn apply_shift_sup(sigma: &IndexMap, b: &UOrd) -> Result<UOrd> {
    sigma.check_levels(b)?;
    if is_continuity_point(sigma, b)? {
        return apply_shift(sigma, b);
    }
    let (delta, k) = b.split_last_u().ok_or(Error::NotALimit)?;
    Ok(apply_shift(sigma, &delta)?.add(&UOrd::u(sigma.at(k - 1) + 1)))
}

/// Splits `σ = σ_k ∘ τ_k` where `τ_k` skips `k` and `σ_k` is continuous at
/// the image. Requires `σ(k) > σ(k−1) + 1`.
pub fn decompose_shift(sigma: &IndexMap, k: u32) -> Result<(IndexMap, IndexMap)> {
    let n = sigma.n();
    if k == 0 || k > n {
        return Err(Error::LevelOutOfRange { level: k, n });
    }
    if !sigma.has_gap_at(k) {
        return Err(Error::CriterionFails(k));
    }
    let sigma_k: Vec<u32> = (1..=n + 1)
        .map(|i| match i.cmp(&k) {
            std::cmp::Ordering::Less => sigma.at(i),
            std::cmp::Ordering::Equal => sigma.at(k - 1) + 1,
            std::cmp::Ordering::Greater => sigma.at(i - 1),
        })
        .collect();
    let tau_k: Vec<u32> = (1..=n).map(|i| if i < k { i } else { i + 1 }).collect();
    let sigma_k = IndexMap::new(sigma_k, sigma.codomain())?;
    let tau_k = IndexMap::new(tau_k, n + 1)?;
    debug_assert_eq!(sigma_k.compose(&tau_k).as_ref(), Ok(sigma));
    Ok((sigma_k, tau_k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::CtblOrd;

    fn map(v: &[u32], cod: u32) -> IndexMap {
        IndexMap::new(v.to_vec(), cod).unwrap()
    }

    #[test]
    fn shift_examples() {
        let b = UOrd::u(1).add(&UOrd::countable(CtblOrd::nat(5)));
        assert_eq!(
            apply_shift(&map(&[2], 2), &b).unwrap(),
            UOrd::u(2).add(&UOrd::countable(CtblOrd::nat(5)))
        );
        let b = UOrd::u_times(2, CtblOrd::nat(2)).add(&UOrd::u(1));
        assert_eq!(apply_shift(&IndexMap::identity(2), &b).unwrap(), b);
        assert_eq!(
            apply_shift(&map(&[1, 3], 3), &b).unwrap(),
            UOrd::u_times(3, CtblOrd::nat(2)).add(&UOrd::u(1))
        );
        assert_eq!(
            apply_shift(&map(&[1], 3), &UOrd::u(2)),
            Err(Error::LevelOutOfRange { level: 2, n: 1 })
        );
    }

    #[test]
    fn shift_sup_examples() {
        assert_eq!(apply_shift_sup(&map(&[2], 2), &UOrd::u(1)).unwrap(), UOrd::u(1));
        assert_eq!(
            apply_shift_sup(&map(&[1, 3], 3), &UOrd::u(2)).unwrap(),
            UOrd::u(2)
        );
        let b = UOrd::u_times(1, CtblOrd::omega());
        assert_eq!(
            apply_shift_sup(&map(&[2], 2), &b).unwrap(),
            UOrd::u_times(2, CtblOrd::omega())
        );
        assert_eq!(
            apply_shift_sup(&map(&[2], 2), &UOrd::u(1).add(&UOrd::countable(CtblOrd::one()))),
            Err(Error::NotALimit)
        );
    }

    #[test]
    fn decompose_examples() {
        let (s, t) = decompose_shift(&map(&[1, 3], 3), 2).unwrap();
        assert_eq!(s, map(&[1, 2, 3], 3));
        assert_eq!(t, map(&[1, 3], 3));
        let (s, t) = decompose_shift(&map(&[3], 3), 1).unwrap();
        assert_eq!(s, map(&[1, 3], 3));
        assert_eq!(t, map(&[2], 2));
        let (s, t) = decompose_shift(&map(&[2], 2), 1).unwrap();
        assert_eq!(s, map(&[1, 2], 2));
        assert_eq!(t, map(&[2], 2));
        assert_eq!(
            decompose_shift(&map(&[1, 2], 2), 2),
            Err(Error::CriterionFails(2))
        );
    }

    #[test]
    fn composition_is_functorial() {
        let s = map(&[1, 3, 4], 5);
        let t = map(&[2, 3], 3);
        let b = UOrd::u_times(2, CtblOrd::nat(3)).add(&UOrd::u(1));
        let direct = apply_shift(&s.compose(&t).unwrap(), &b).unwrap();
        let stepwise = apply_shift(&s, &apply_shift(&t, &b).unwrap()).unwrap();
        assert_eq!(direct, stepwise);
    }
}

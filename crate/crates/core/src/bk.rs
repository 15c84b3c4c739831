//! Brouwer–Kleene comparison of finite sequences.
//!
//! A proper lengthening is *smaller* than the sequence it extends; otherwise
//! the first differing entry decides. Every tree comparator in the crate
//! (`<^P`, `<^Q`, `<^R`, the order on descriptions) is built on this.

use std::cmp::Ordering;

/// Compares `s` and `t` in the Brouwer–Kleene order, with entries ordered by
/// `entry_cmp`.
pub fn bk_compare_by<A, F>(s: &[A], t: &[A], mut entry_cmp: F) -> Ordering
where
    F: FnMut(&A, &A) -> Ordering,
{
    for (a, b) in s.iter().zip(t.iter()) {
        match entry_cmp(a, b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    // one is a prefix of the other: the longer one is smaller
    t.len().cmp(&s.len())
}

/// [`bk_compare_by`] with the entries' own total order.
pub fn bk_compare<A: Ord>(s: &[A], t: &[A]) -> Ordering {
    bk_compare_by(s, t, Ord::cmp)
}

/// `s <_BK t`.
pub fn bk_less<A: Ord>(s: &[A], t: &[A]) -> bool {
    bk_compare(s, t) == Ordering::Less
}

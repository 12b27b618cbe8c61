//! Exhaustive search over selections, O(k·N^k) for N components.

use super::{covers_ids, preprocess, CoverInstance, Selection};
use crate::selection::classic::covers_all;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Preprocessing {
    /// Seed with the necessary components and skip redundant ones.
    #[default]
    On,
    /// Enumerate subsets of all components.
    Off,
}

/// Smallest covering selection of size at most `k`, or `None`.
///
/// See [`decide_bruteforce_with`].
pub fn decide_bruteforce<D: CoverInstance + ?Sized>(d: &D, k: usize) -> Option<Selection> {
    decide_bruteforce_with(d, k, Preprocessing::On)
}

/// Enumerates selections by increasing size, each size in lexicographic id
/// order, and returns the first that covers both axes.
///
/// With preprocessing the necessary components are always included and the
/// remaining slots are filled from the non-redundant candidates only.
pub fn decide_bruteforce_with<D: CoverInstance + ?Sized>(
    d: &D,
    k: usize,
    mode: Preprocessing,
) -> Option<Selection> {
    if !covers_all(d) {
        return None;
    }
    let (seed, pool): (Vec<usize>, Vec<usize>) = match mode {
        Preprocessing::On => {
            let pre = preprocess(d);
            (pre.necessary.into_vec(), pre.candidates)
        }
        Preprocessing::Off => (Vec::new(), (0..d.component_count()).collect()),
    };
    if seed.len() > k {
        return None;
    }
    let free_slots = (k - seed.len()).min(pool.len());
    let mut chosen = seed.clone();
    for r in 0..=free_slots {
        let mut found = None;
        for_each_combination(pool.len(), r, |combo| {
            chosen.truncate(seed.len());
            chosen.extend(combo.iter().map(|&c| pool[c]));
            if covers_ids(d, &chosen) {
                found = Some(Selection::new(chosen.clone()));
                return true;
            }
            false
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Visits the `r`-subsets of `0..n` in lexicographic order until `visit` returns `true`.
pub(crate) fn for_each_combination(n: usize, r: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if visit(&idx) {
            return;
        }
        // Rightmost position that can still advance.
        let Some(pos) = (0..r).rev().find(|&p| idx[p] < n - r + p) else {
            return;
        };
        idx[pos] += 1;
        for q in pos + 1..r {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

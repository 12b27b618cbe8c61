//! Exhaustive box problem solver.
//!
//! Both edges of `B` are cut into elementary pieces at every box endpoint.
//! A selection covers the edges iff every piece lies inside the extent of a
//! selected box. The search always branches on the uncovered piece with the
//! fewest remaining candidates; on the instances built from formulas those
//! are the unit rows, each with exactly two candidates. A packing bound
//! (uncovered pieces with pairwise disjoint candidate sets each need their
//! own box) prunes branches that cannot finish within budget.

use super::{BoxInstance, LabeledBox};

struct CoverSearch {
    /// Candidate boxes for each elementary piece, ascending.
    pieces: Vec<Vec<usize>>,
    box_count: usize,
    budget: usize,
}

impl CoverSearch {
    /// `None` when some piece has no candidate at all.
    fn new(instance: &BoxInstance) -> Option<Self> {
        let [xmax, ymax] = instance.bound;
        let mut pieces = elementary_pieces(&instance.boxes, LabeledBox::x_extent, 1.0, xmax);
        pieces.extend(elementary_pieces(
            &instance.boxes,
            LabeledBox::y_extent,
            1.0,
            ymax,
        ));
        if pieces.iter().any(Vec::is_empty) {
            return None;
        }
        // Rows first: the packing bound then counts them before the columns.
        pieces.reverse();
        Some(Self {
            pieces,
            box_count: instance.boxes.len(),
            budget: instance.k,
        })
    }

    /// Whether some selection of at most `budget` boxes containing `forced`
    /// and avoiding `excluded` covers every piece.
    fn feasible(&self, forced: &[usize], excluded: &[bool]) -> bool {
        if forced.len() > self.budget {
            return false;
        }
        let mut chosen = vec![false; self.box_count];
        for &f in forced {
            chosen[f] = true;
        }
        let mut excluded = excluded.to_vec();
        self.search(&mut chosen, &mut excluded, forced.len())
    }

    fn search(&self, chosen: &mut [bool], excluded: &mut [bool], used: usize) -> bool {
        let mut branch: Option<(usize, usize)> = None;
        let mut packed = vec![false; self.box_count];
        let mut lower_bound = 0;
        for (p, cands) in self.pieces.iter().enumerate() {
            if cands.iter().any(|&c| chosen[c]) {
                continue;
            }
            let avail = cands.iter().filter(|&&c| !excluded[c]).count();
            if avail == 0 {
                return false;
            }
            if branch.is_none_or(|(_, best)| avail < best) {
                branch = Some((p, avail));
            }
            if cands.iter().all(|&c| excluded[c] || !packed[c]) {
                lower_bound += 1;
                for &c in cands {
                    packed[c] = true;
                }
            }
        }
        let Some((piece, _)) = branch else {
            return true;
        };
        if used + lower_bound > self.budget {
            return false;
        }
        // Branch i takes candidate i and rules out candidates 0..i, so every
        // selection is reached once.
        let mut ruled_out = Vec::new();
        let mut found = false;
        for &c in &self.pieces[piece] {
            if excluded[c] {
                continue;
            }
            chosen[c] = true;
            found = self.search(chosen, excluded, used + 1);
            chosen[c] = false;
            if found {
                break;
            }
            excluded[c] = true;
            ruled_out.push(c);
        }
        for c in ruled_out {
            excluded[c] = false;
        }
        found
    }
}

/// Candidate lists for the pieces of `[lo, hi]` cut at every box endpoint.
fn elementary_pieces(
    boxes: &[LabeledBox],
    extent: fn(&LabeledBox) -> (f64, f64),
    lo: f64,
    hi: f64,
) -> Vec<Vec<usize>> {
    let mut cuts = vec![lo, hi];
    for b in boxes {
        let (a, z) = extent(b);
        cuts.extend([a, z].into_iter().filter(|&t| lo < t && t < hi));
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    cuts.windows(2)
        .map(|w| {
            boxes
                .iter()
                .enumerate()
                .filter(|(_, b)| {
                    let (a, z) = extent(b);
                    a <= w[0] && w[1] <= z
                })
                .map(|(idx, _)| idx)
                .collect()
        })
        .collect()
}

/// Whether some selection of at most `k` boxes covers both edges of `B`.
pub fn box_coverable(instance: &BoxInstance) -> bool {
    CoverSearch::new(instance)
        .is_some_and(|s| s.feasible(&[], &vec![false; instance.boxes.len()]))
}

/// The lexicographically first covering selection of at most `k` boxes
/// (as a sorted list of box indices), or `None`.
///
/// Built one index at a time: the next index is the smallest one that still
/// extends to a covering selection when every skipped index is excluded.
pub fn solve_box_bruteforce(instance: &BoxInstance) -> Option<Vec<usize>> {
    let search = CoverSearch::new(instance)?;
    let count = instance.boxes.len();
    let mut excluded = vec![false; count];
    if !search.feasible(&[], &excluded) {
        return None;
    }
    let mut chosen: Vec<usize> = Vec::new();
    let mut next = 0;
    while !selection_covers(instance, &chosen) {
        let pick = (next..count).find(|&x| {
            chosen.push(x);
            let ok = search.feasible(&chosen, &excluded);
            chosen.pop();
            if !ok {
                excluded[x] = true;
            }
            ok
        })?;
        chosen.push(pick);
        next = pick + 1;
    }
    Some(chosen)
}

/// Whether the boxes at `selection` cover both edges of `B`.
pub fn selection_covers(instance: &BoxInstance, selection: &[usize]) -> bool {
    let [xmax, ymax] = instance.bound;
    let covers = |extent: fn(&LabeledBox) -> (f64, f64), hi: f64| {
        let mut spans: Vec<(f64, f64)> = selection
            .iter()
            .map(|&i| extent(&instance.boxes[i]))
            .collect();
        spans.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut reach = 1.0;
        for (a, z) in spans {
            if a > reach {
                break;
            }
            reach = f64::max(reach, z);
        }
        reach >= hi
    };
    covers(LabeledBox::x_extent, xmax) && covers(LabeledBox::y_extent, ymax)
}

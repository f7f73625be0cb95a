//! Brute-force enumeration of small partitions, used by the closure oracles,
//! the exhaustive identity suites and the empirical relation probes.

use crate::partition::{Color, Partition};

/// All set partitions of `m` labeled points, as restricted growth strings.
///
/// A restricted growth string assigns point `i` a block id `<=` 1 + max of
/// the earlier ids, which is exactly the canonical first-appearance labeling.
pub fn restricted_growth_strings(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; m];
    fn rec(current: &mut Vec<usize>, i: usize, max_used: usize, out: &mut Vec<Vec<usize>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for b in 0..=max_used + 1 {
            current[i] = b;
            rec(current, i + 1, max_used.max(b), out);
        }
    }
    if m == 0 {
        out.push(Vec::new());
        return out;
    }
    for b in 0..1 {
        current[0] = b;
        rec(&mut current, 1, 0, &mut out);
    }
    out
}

/// All one-colored partitions in `P(k, l)`.
pub fn all_partitions(k: usize, l: usize) -> Vec<Partition> {
    restricted_growth_strings(k + l)
        .into_iter()
        .map(|blocks| Partition::new(vec![Color::White; k], vec![Color::White; l], &blocks))
        .collect()
}

/// All one-colored partitions with at most `max_points` points, over every
/// split into upper and lower rows.
pub fn all_partitions_up_to(max_points: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for m in 0..=max_points {
        for k in 0..=m {
            out.extend(all_partitions(k, m - k));
        }
    }
    out
}

/// All colorings of a one-colored partition (every point independently
/// white or black).
pub fn all_colorings(p: &Partition) -> Vec<Partition> {
    let k = p.upper_len();
    let l = p.lower_len();
    let mut out = Vec::new();
    for mask in 0u32..1 << (k + l) {
        let color = |i: usize| {
            if mask >> i & 1 == 1 {
                Color::Black
            } else {
                Color::White
            }
        };
        out.push(Partition::new(
            (0..k).map(|i| color(i)).collect(),
            (0..l).map(|t| color(k + t)).collect(),
            p.block_ids(),
        ));
    }
    out
}

/// All perfect matchings of `P(0, m)` (`m` even), enumerated directly.
pub fn all_matchings(m: usize) -> Vec<Partition> {
    fn rec(points: &mut Vec<usize>, blocks: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if points.is_empty() {
            out.push(blocks.clone());
            return;
        }
        let first = points[0];
        for idx in 1..points.len() {
            let partner = points[idx];
            let mut rest: Vec<usize> = points.clone();
            rest.remove(idx);
            rest.remove(0);
            blocks.push((first, partner));
            rec(&mut rest, blocks, out);
            blocks.pop();
        }
    }
    if m % 2 != 0 {
        return Vec::new();
    }
    let mut pairings = Vec::new();
    rec(&mut (0..m).collect(), &mut Vec::new(), &mut pairings);
    pairings
        .into_iter()
        .map(|pairs| {
            let mut ids = vec![0usize; m];
            for (b, (x, y)) in pairs.iter().enumerate() {
                ids[*x] = b;
                ids[*y] = b;
            }
            Partition::new(Vec::new(), vec![Color::White; m], &ids)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        for (m, bell) in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
            assert_eq!(restricted_growth_strings(m).len(), bell, "Bell({m})");
        }
    }

    #[test]
    fn matching_counts_are_double_factorials() {
        for (m, count) in [(2, 1), (4, 3), (6, 15), (8, 105)] {
            assert_eq!(all_matchings(m).len(), count);
        }
    }

    #[test]
    fn noncrossing_counts_are_catalan() {
        for (m, catalan) in [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
            let count = all_partitions(0, m)
                .iter()
                .filter(|p| p.is_noncrossing())
                .count();
            assert_eq!(count, catalan, "Catalan({m})");
        }
    }

    #[test]
    fn noncrossing_matchings_are_catalan() {
        for (m, catalan) in [(1, 1), (2, 2), (3, 5), (4, 14)] {
            let count = all_matchings(2 * m)
                .iter()
                .filter(|p| p.is_noncrossing())
                .count();
            assert_eq!(count, catalan);
        }
    }

    #[test]
    fn crossing_stack_detector_agrees_with_interleaving_oracle() {
        // pairwise interleaving check on the boundary word, all p with <= 8 points
        for m in 0..=8 {
            for p in all_partitions(0, m) {
                assert_eq!(
                    p.is_noncrossing(),
                    interleaving_oracle(&p),
                    "disagreement on {p}"
                );
            }
        }
        for p in all_partitions_up_to(6) {
            assert_eq!(p.is_noncrossing(), interleaving_oracle(&p), "on {p}");
        }
    }

    /// Quadratic oracle: two blocks cross iff their boundary points
    /// interleave as a b a b.
    fn interleaving_oracle(p: &Partition) -> bool {
        let k = p.upper_len();
        let mut word: Vec<usize> = p.block_ids()[..k].to_vec();
        word.extend(p.block_ids()[k..].iter().rev());
        for a in 0..p.block_count() {
            for b in 0..a {
                let pattern: Vec<usize> = word
                    .iter()
                    .copied()
                    .filter(|&x| x == a || x == b)
                    .collect();
                let mut switches = 0;
                for w in pattern.windows(2) {
                    if w[0] != w[1] {
                        switches += 1;
                    }
                }
                if switches >= 3 {
                    return false;
                }
            }
        }
        true
    }
}

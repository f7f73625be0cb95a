//! Evaluation of the index function `delta_p(i, j)` and exhaustive checks of
//! the identities it satisfies under tensor, composition, reflection and
//! involution. All checks use exact integer arithmetic; the `n^{-rl}` factor
//! of the composition identity is moved to the other side.

use thiserror::Error;

use crate::ops::{self, OpsError};
use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeltaError {
    #[error("tuple length mismatch: expected ({k}, {l}), got ({got_i}, {got_j})")]
    LengthMismatch { k: usize, l: usize, got_i: usize, got_j: usize },
    #[error("composition undefined: {0}")]
    Composition(#[from] OpsError),
}

/// `delta_p(i, j)`: 1 iff labeling the upper points by `i` and the lower
/// points by `j` (both left-to-right) gives every block a single value.
///
/// Empty tuples are allowed for `k = 0` / `l = 0`.
pub fn delta(p: &Partition, i: &[usize], j: &[usize]) -> Result<u8, DeltaError> {
    if i.len() != p.upper_len() || j.len() != p.lower_len() {
        return Err(DeltaError::LengthMismatch {
            k: p.upper_len(),
            l: p.lower_len(),
            got_i: i.len(),
            got_j: j.len(),
        });
    }
    Ok(delta_unchecked(p, i, j))
}

/// Allocation-free inner evaluation; tuple lengths must already match.
pub(crate) fn delta_unchecked(p: &Partition, i: &[usize], j: &[usize]) -> u8 {
    // first index met fixes each block's value
    let mut value = [usize::MAX; 64];
    let mut spill: Vec<usize>;
    let values: &mut [usize] = if p.block_count() <= 64 {
        &mut value[..p.block_count()]
    } else {
        spill = vec![usize::MAX; p.block_count()];
        &mut spill
    };
    for (&b, &v) in p.block_ids().iter().zip(i.iter().chain(j.iter())) {
        if values[b] == usize::MAX {
            values[b] = v;
        } else if values[b] != v {
            return 0;
        }
    }
    1
}

/// Iterates over all tuples of the given length with entries in `1..=n`.
pub fn tuples(len: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    TupleIter { current: vec![1; len], n, done: n == 0 && len > 0, first: true }
}

struct TupleIter {
    current: Vec<usize>,
    n: usize,
    done: bool,
    first: bool,
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.current.clone());
        }
        for slot in self.current.iter_mut().rev() {
            if *slot < self.n {
                *slot += 1;
                return Some(self.current.clone());
            }
            *slot = 1;
        }
        self.done = true;
        None
    }
}

/// Exhaustively verifies
/// `delta_{p(x)q}(aa', bb') = delta_p(a, b) * delta_q(a', b')` over all
/// tuples with entries in `1..=n`.
pub fn check_tensor_formula(p: &Partition, q: &Partition, n: usize) -> bool {
    let t = ops::tensor(p, q);
    for a in tuples(p.upper_len(), n) {
        for a2 in tuples(q.upper_len(), n) {
            let aa: Vec<usize> = a.iter().chain(&a2).copied().collect();
            for b in tuples(p.lower_len(), n) {
                for b2 in tuples(q.lower_len(), n) {
                    let bb: Vec<usize> = b.iter().chain(&b2).copied().collect();
                    let lhs = delta_unchecked(&t, &aa, &bb);
                    let rhs = delta_unchecked(p, &a, &b) * delta_unchecked(q, &a2, &b2);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Exhaustively verifies
/// `n^{rl(q,p)} * delta_{qp}(a, b) = sum_z delta_p(a, z) * delta_q(z, b)`.
pub fn check_composition_formula(
    q: &Partition,
    p: &Partition,
    n: usize,
) -> Result<bool, DeltaError> {
    let outcome = ops::compose(q, p)?;
    let factor = (n as u64).pow(outcome.removed_loops as u32);
    let middles: Vec<Vec<usize>> = tuples(p.lower_len(), n).collect();
    for a in tuples(p.upper_len(), n) {
        for b in tuples(q.lower_len(), n) {
            let mut sum: u64 = 0;
            for z in &middles {
                sum += (delta_unchecked(p, &a, z) * delta_unchecked(q, z, &b)) as u64;
            }
            let lhs = factor * delta_unchecked(&outcome.result, &a, &b) as u64;
            if lhs != sum {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exhaustively verifies
/// `delta_p(a_1..a_k, b_1..b_l) = delta_{p~}(a_k..a_1, b_l..b_1)`.
pub fn check_reflection_formula(p: &Partition, n: usize) -> bool {
    let reflected = ops::vreflect(p);
    for a in tuples(p.upper_len(), n) {
        let a_rev: Vec<usize> = a.iter().rev().copied().collect();
        for b in tuples(p.lower_len(), n) {
            let b_rev: Vec<usize> = b.iter().rev().copied().collect();
            if delta_unchecked(p, &a, &b) != delta_unchecked(&reflected, &a_rev, &b_rev) {
                return false;
            }
        }
    }
    true
}

/// Exhaustively verifies `delta_{p*}(a, b) = delta_p(b, a)`.
pub fn check_involution_formula(p: &Partition, n: usize) -> bool {
    let star = ops::involution(p);
    for a in tuples(star.upper_len(), n) {
        for b in tuples(star.lower_len(), n) {
            if delta_unchecked(&star, &a, &b) != delta_unchecked(p, &b, &a) {
                return false;
            }
        }
    }
    true
}

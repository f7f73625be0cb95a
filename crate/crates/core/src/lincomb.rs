//! Formal linear combinations of partitions with a fixed frame (same number
//! of upper/lower points and the same color at every position), together
//! with the bilinear extensions of the diagram operations. Composition picks
//! up an `n^{rl}` factor per term and is therefore `n`-dependent.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::ops::{self, OpsError};
use crate::partition::{Color, Partition};

#[derive(Debug, Error, PartialEq)]
pub enum LinCombError {
    #[error("partition frame ({k}, {l}) with different colors does not match the combination")]
    FrameMismatch { k: usize, l: usize },
    #[error("operation failed on a term: {0}")]
    Op(#[from] OpsError),
}

/// `sum_p a_p p` over partitions sharing upper/lower colors. The zero
/// combination keeps its frame so operations remain well-typed.
#[derive(Clone, Debug, PartialEq)]
pub struct LinComb {
    upper_colors: Vec<Color>,
    lower_colors: Vec<Color>,
    terms: BTreeMap<Partition, Complex64>,
}

impl LinComb {
    pub fn zero(upper_colors: Vec<Color>, lower_colors: Vec<Color>) -> Self {
        LinComb { upper_colors, lower_colors, terms: BTreeMap::new() }
    }

    pub fn term(p: Partition, coefficient: Complex64) -> Self {
        let mut lc = LinComb::zero(p.upper_colors().to_vec(), p.lower_colors().to_vec());
        lc.terms.insert(p, coefficient);
        lc.prune();
        lc
    }

    pub fn single(p: Partition) -> Self {
        LinComb::term(p, Complex64::new(1.0, 0.0))
    }

    pub fn upper_len(&self) -> usize {
        self.upper_colors.len()
    }

    pub fn lower_len(&self) -> usize {
        self.lower_colors.len()
    }

    pub fn upper_colors(&self) -> &[Color] {
        &self.upper_colors
    }

    pub fn lower_colors(&self) -> &[Color] {
        &self.lower_colors
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, Complex64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Partition) -> Complex64 {
        self.terms.get(p).copied().unwrap_or_default()
    }

    /// Adds `coefficient * p`, combining like terms and dropping exact zeros.
    pub fn add_term(&mut self, p: Partition, coefficient: Complex64) -> Result<(), LinCombError> {
        if p.upper_colors() != self.upper_colors || p.lower_colors() != self.lower_colors {
            return Err(LinCombError::FrameMismatch {
                k: p.upper_len(),
                l: p.lower_len(),
            });
        }
        let entry = self.terms.entry(p).or_default();
        *entry += coefficient;
        self.prune();
        Ok(())
    }

    pub fn add(&self, other: &LinComb) -> Result<LinComb, LinCombError> {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: Complex64) -> LinComb {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= factor;
        }
        out.prune();
        out
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.re != 0.0 || c.im != 0.0);
    }
}

impl From<Partition> for LinComb {
    fn from(p: Partition) -> Self {
        LinComb::single(p)
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (p, c)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({} + {}i)*{}", c.re, c.im, p)?;
        }
        Ok(())
    }
}

/// `(sum a_p p) (x) (sum b_q q) = sum a_p b_q (p (x) q)`.
pub fn lc_tensor(x: &LinComb, y: &LinComb) -> LinComb {
    let mut upper = x.upper_colors.clone();
    upper.extend_from_slice(&y.upper_colors);
    let mut lower = x.lower_colors.clone();
    lower.extend_from_slice(&y.lower_colors);
    let mut out = LinComb::zero(upper, lower);
    for (p, a) in x.terms() {
        for (q, b) in y.terms() {
            out.add_term(ops::tensor(p, q), a * b).unwrap();
        }
    }
    out
}

/// `yx = sum_{p,q} n^{rl(q,p)} a_p b_q (qp)`; `y` sits below `x`.
pub fn lc_compose(y: &LinComb, x: &LinComb, n: usize) -> Result<LinComb, LinCombError> {
    if y.upper_len() != x.lower_len() {
        return Err(LinCombError::Op(OpsError::ShapeMismatch {
            p_lower: x.lower_len(),
            q_upper: y.upper_len(),
        }));
    }
    if let Some(position) = (0..x.lower_len()).find(|&t| y.upper_colors[t] != x.lower_colors[t]) {
        return Err(LinCombError::Op(OpsError::ColorMismatch { position: position + 1 }));
    }
    let mut out = LinComb::zero(x.upper_colors.clone(), y.lower_colors.clone());
    for (p, a) in x.terms() {
        for (q, b) in y.terms() {
            let outcome = ops::compose(q, p)?;
            let factor = (n as f64).powi(outcome.removed_loops as i32);
            out.add_term(outcome.result, a * b * factor).unwrap();
        }
    }
    Ok(out)
}

pub fn lc_vreflect(x: &LinComb) -> LinComb {
    let mut out = LinComb::zero(
        x.upper_colors.iter().rev().copied().collect(),
        x.lower_colors.iter().rev().copied().collect(),
    );
    for (p, a) in x.terms() {
        out.add_term(ops::vreflect(p), a).unwrap();
    }
    out
}

/// `x* = sum conj(a_p) p*`.
pub fn lc_involution(x: &LinComb) -> LinComb {
    let mut out = LinComb::zero(x.lower_colors.clone(), x.upper_colors.clone());
    for (p, a) in x.terms() {
        out.add_term(ops::involution(p), a.conj()).unwrap();
    }
    out
}

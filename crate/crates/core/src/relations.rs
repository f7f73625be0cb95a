//! Symbolic instantiation of the relation family `R(p)` attached to a
//! partition: for every free index pair (alpha, beta) an equality of sums of
//! generator words, in unital, non-unital (`P0`-marked) and
//! linear-combination form, plus text rendering and a machine-readable dump.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use thiserror::Error;

use crate::delta::{delta_unchecked, tuples};
use crate::lincomb::LinComb;
use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelationsError {
    #[error("tuple length mismatch: expected ({k}, {l}), got ({got_alpha}, {got_beta})")]
    LengthMismatch { k: usize, l: usize, got_alpha: usize, got_beta: usize },
    #[error("the non-unital form is defined for one-colored partitions only")]
    NotOneColored,
}

/// `u_{row,col}` or its adjoint `u*_{row,col}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSymbol {
    pub row: usize,
    pub col: usize,
    pub star: bool,
}

/// Product of generator symbols; the empty product is the unit. The `P0`
/// markers only appear in the non-unital form (leading on left-hand words,
/// trailing on right-hand words).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    pub leading_p0: bool,
    pub factors: Vec<GeneratorSymbol>,
    pub trailing_p0: bool,
}

impl Word {
    pub fn unit() -> Word {
        Word::default()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty() && !self.leading_p0 && !self.trailing_p0
    }
}

pub type Term = (Complex64, Word);

/// One fully expanded equation of `R(p)` (or of a linear combination of
/// partitions) at concrete free indices: both sides as coefficient-weighted
/// word sums with all `delta` factors resolved.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationInstance {
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
    pub n: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl RelationInstance {
    /// Sorts each side by word and merges equal words; zero terms dropped.
    pub fn normalized(&self) -> RelationInstance {
        RelationInstance {
            lhs: normalize_side(&self.lhs),
            rhs: normalize_side(&self.rhs),
            n: self.n,
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
        }
    }

    /// One term per line: side, coefficient, P0 markers and (row,col,mark)
    /// factors. Empty sides are dumped as an explicit zero line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "instance n={} alpha={:?} beta={:?}",
            self.n, self.alpha, self.beta
        );
        for (label, side) in [("L", &self.lhs), ("R", &self.rhs)] {
            if side.is_empty() {
                let _ = writeln!(out, "{label} 0 0 1");
                continue;
            }
            for (coefficient, word) in side {
                let _ = write!(out, "{label} {} {}", coefficient.re, coefficient.im);
                if word.leading_p0 {
                    let _ = write!(out, " P0");
                }
                if word.factors.is_empty() {
                    let _ = write!(out, " 1");
                }
                for f in &word.factors {
                    let _ = write!(out, " ({},{},{})", f.row, f.col, if f.star { "*" } else { "1" });
                }
                if word.trailing_p0 {
                    let _ = write!(out, " P0");
                }
                out.push('\n');
            }
        }
        out
    }
}

fn normalize_side(side: &[Term]) -> Vec<Term> {
    let mut merged: BTreeMap<Word, Complex64> = BTreeMap::new();
    for (c, w) in side {
        *merged.entry(w.clone()).or_default() += c;
    }
    merged
        .into_iter()
        .filter(|(_, c)| c.re != 0.0 || c.im != 0.0)
        .map(|(w, c)| (c, w))
        .collect()
}

fn check_lengths(p: &Partition, alpha: &[usize], beta: &[usize]) -> Result<(), RelationsError> {
    if alpha.len() != p.upper_len() || beta.len() != p.lower_len() {
        return Err(RelationsError::LengthMismatch {
            k: p.upper_len(),
            l: p.lower_len(),
            got_alpha: alpha.len(),
            got_beta: beta.len(),
        });
    }
    Ok(())
}

fn gamma_side(p: &Partition, n: usize, alpha: &[usize], beta: &[usize]) -> Vec<Word> {
    // LHS: one word per gamma with delta_p(gamma, beta) = 1
    tuples(p.upper_len(), n)
        .filter(|gamma| delta_unchecked(p, gamma, beta) == 1)
        .map(|gamma| Word {
            factors: gamma
                .iter()
                .zip(alpha)
                .zip(p.upper_colors())
                .map(|((&g, &a), color)| GeneratorSymbol { row: g, col: a, star: color.is_star() })
                .collect(),
            ..Word::default()
        })
        .collect()
}

fn gamma_prime_side(p: &Partition, n: usize, alpha: &[usize], beta: &[usize]) -> Vec<Word> {
    // RHS: one word per gamma' with delta_p(alpha, gamma') = 1
    tuples(p.lower_len(), n)
        .filter(|gp| delta_unchecked(p, alpha, gp) == 1)
        .map(|gp| Word {
            factors: beta
                .iter()
                .zip(gp.iter())
                .zip(p.lower_colors())
                .map(|((&b, &g), color)| GeneratorSymbol { row: b, col: g, star: color.is_star() })
                .collect(),
            ..Word::default()
        })
        .collect()
}

/// The `R(p)` equation at free indices (alpha, beta): sum over gamma of
/// `u^{eps_up}_{gamma_s alpha_s}` against the sum over gamma' of
/// `u^{eps_low}_{beta_t gamma'_t}`. For `k = 0` or `l = 0` the respective
/// side degenerates to `delta * 1`.
pub fn instantiate(
    p: &Partition,
    n: usize,
    alpha: &[usize],
    beta: &[usize],
) -> Result<RelationInstance, RelationsError> {
    check_lengths(p, alpha, beta)?;
    let one = Complex64::new(1.0, 0.0);
    Ok(RelationInstance {
        lhs: gamma_side(p, n, alpha, beta).into_iter().map(|w| (one, w)).collect(),
        rhs: gamma_prime_side(p, n, alpha, beta).into_iter().map(|w| (one, w)).collect(),
        n,
        alpha: alpha.to_vec(),
        beta: beta.to_vec(),
    })
}

/// The non-unital form: `P0 * (gamma sum) = (gamma' sum) * P0`, so every
/// left-hand word carries a leading `P0` and every right-hand word a
/// trailing one. Defined for one-colored (self-adjoint) partitions.
pub fn instantiate_nonunital(
    p: &Partition,
    n: usize,
    alpha: &[usize],
    beta: &[usize],
) -> Result<RelationInstance, RelationsError> {
    if !p.is_one_colored() {
        return Err(RelationsError::NotOneColored);
    }
    let mut instance = instantiate(p, n, alpha, beta)?;
    for (_, w) in &mut instance.lhs {
        w.leading_p0 = true;
    }
    for (_, w) in &mut instance.rhs {
        w.trailing_p0 = true;
    }
    Ok(instance)
}

/// Coefficient-weighted superposition of the single-partition instances of
/// a linear combination (all terms share the frame, so the free indices are
/// common).
pub fn instantiate_lincomb(
    x: &LinComb,
    n: usize,
    alpha: &[usize],
    beta: &[usize],
) -> Result<RelationInstance, RelationsError> {
    if alpha.len() != x.upper_len() || beta.len() != x.lower_len() {
        return Err(RelationsError::LengthMismatch {
            k: x.upper_len(),
            l: x.lower_len(),
            got_alpha: alpha.len(),
            got_beta: beta.len(),
        });
    }
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (p, a) in x.terms() {
        let instance = instantiate(p, n, alpha, beta)?;
        lhs.extend(instance.lhs.into_iter().map(|(c, w)| (a * c, w)));
        rhs.extend(instance.rhs.into_iter().map(|(c, w)| (a * c, w)));
    }
    Ok(RelationInstance {
        lhs: normalize_side(&lhs),
        rhs: normalize_side(&rhs),
        n,
        alpha: alpha.to_vec(),
        beta: beta.to_vec(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Latex,
}

#[derive(Clone, Copy, Debug)]
pub struct RenderOptions {
    pub format: RenderFormat,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { format: RenderFormat::Ascii }
    }
}

/// Renders `R(p)` with formal indices: lower free indices `i1..il`, upper
/// free indices `j1..jk`, bound sums `m1, m2, ...`. Bound indices forced by
/// a through-block are substituted away; blocks with several points on the
/// free row contribute Kronecker delta chains.
pub fn render(p: &Partition, options: RenderOptions) -> String {
    let latex = options.format == RenderFormat::Latex;
    let lhs = render_side(p, true, latex);
    let rhs = render_side(p, false, latex);
    format!("R({}): {} = {}", p, lhs, rhs)
}

fn index_name(prefix: &str, position: usize, latex: bool) -> String {
    if latex {
        format!("{prefix}_{{{position}}}")
    } else {
        format!("{prefix}{position}")
    }
}

/// One side of the rendered relation. `gamma_side = true` renders the sum
/// over upper bound indices (words `u[gamma_s, j_s]`), otherwise the sum
/// over lower bound indices (words `u[i_t, gamma'_t]`).
fn render_side(p: &Partition, gamma_side: bool, latex: bool) -> String {
    let (bound_len, free_len, bound_blocks, free_blocks, bound_colors) = if gamma_side {
        let k = p.upper_len();
        let l = p.lower_len();
        (
            k,
            l,
            (0..k).map(|s| p.upper_block(s + 1)).collect::<Vec<_>>(),
            (0..l).map(|t| p.lower_block(t + 1)).collect::<Vec<_>>(),
            p.upper_colors().to_vec(),
        )
    } else {
        let k = p.upper_len();
        let l = p.lower_len();
        (
            l,
            k,
            (0..l).map(|t| p.lower_block(t + 1)).collect::<Vec<_>>(),
            (0..k).map(|s| p.upper_block(s + 1)).collect::<Vec<_>>(),
            p.lower_colors().to_vec(),
        )
    };
    let free_prefix = if gamma_side { "i" } else { "j" };
    // delta chains: blocks with >= 2 points on the free row
    let mut deltas = Vec::new();
    for block in 0..p.block_count() {
        let members: Vec<usize> = (0..free_len).filter(|&t| free_blocks[t] == block).collect();
        for pair in members.windows(2) {
            let a = index_name(free_prefix, pair[0] + 1, latex);
            let b = index_name(free_prefix, pair[1] + 1, latex);
            if latex {
                deltas.push(format!("\\delta_{{{a} {b}}}"));
            } else {
                deltas.push(format!("delta({a},{b})"));
            }
        }
    }
    // bound index expressions: forced to a free index when the block reaches
    // the free row, otherwise one shared summation variable per block
    let mut sum_vars = Vec::new();
    let mut block_var: BTreeMap<usize, String> = BTreeMap::new();
    let mut bound_exprs = Vec::with_capacity(bound_len);
    for s in 0..bound_len {
        let block = bound_blocks[s];
        if let Some(t) = (0..free_len).find(|&t| free_blocks[t] == block) {
            bound_exprs.push(index_name(free_prefix, t + 1, latex));
        } else {
            let var = block_var.entry(block).or_insert_with(|| {
                let name = index_name("m", sum_vars.len() + 1, latex);
                sum_vars.push(name.clone());
                name
            });
            bound_exprs.push(var.clone());
        }
    }
    let mut factors = Vec::with_capacity(bound_len);
    for s in 0..bound_len {
        let bound = &bound_exprs[s];
        let free = index_name(if gamma_side { "j" } else { "i" }, s + 1, latex);
        let (row, col) = if gamma_side { (bound.clone(), free) } else { (free, bound.clone()) };
        let star = bound_colors[s].is_star();
        if latex {
            factors.push(format!("u{}_{{{row} {col}}}", if star { "^*" } else { "" }));
        } else {
            factors.push(format!("u{}[{row},{col}]", if star { "*" } else { "" }));
        }
    }
    let mut parts = Vec::new();
    if !sum_vars.is_empty() {
        let prefix = if latex { "\\sum" } else { "sum" };
        parts.push(format!("{prefix}_{{{}}}", sum_vars.join(",")));
    }
    parts.extend(deltas);
    if factors.is_empty() && parts.is_empty() {
        parts.push("1".to_string());
    }
    parts.extend(factors);
    parts.join(" ")
}

/// One-sided admissibility test (Lemma-2.4 shape): true guarantees that the
/// universal algebra exists for every n, namely when X contains a one-colored
/// two-point block on a single row, or such a block with mixed colors.
/// `false` only means "no guarantee from this criterion".
pub fn admissible_sufficient<'a, I>(x: I) -> bool
where
    I: IntoIterator<Item = &'a Partition>,
{
    x.into_iter().any(|p| {
        if p.points() != 2 || p.block_count() != 1 {
            return false;
        }
        let single_row = (p.upper_len() == 0) != (p.lower_len() == 0);
        if !single_row {
            return false;
        }
        let colors: Vec<_> = p.upper_colors().iter().chain(p.lower_colors()).collect();
        let whites = colors.iter().filter(|c| !c.is_star()).count();
        // both white (self-adjoint case) or one of each (two-colored case)
        whites == 2 || whites == 1
    })
}

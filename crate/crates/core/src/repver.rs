//! Numeric verification of the generator relations against concrete matrix
//! models: built-in scalar and block families, exhaustive instance checks
//! reporting the worst operator-norm violation, empirical probes of the full
//! relation set, and random searches for candidate models to the open
//! orthogonality/commutation problems.

use std::fmt::Write as _;

use ndarray::{Array1, Array2};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use thiserror::Error;

use crate::delta::{delta, tuples};
use crate::enumerate::{all_colorings, all_partitions_up_to};
use crate::lincomb::LinComb;
use crate::partition::Partition;
use crate::relations::{
    instantiate_lincomb, GeneratorSymbol, RelationInstance, RelationsError, Term, Word,
};

#[derive(Debug, Error)]
pub enum RepError {
    #[error("invalid model parameter: {0}")]
    InvalidParameter(String),
    #[error("term budget exceeded: {needed} scalar operations needed, cap is {cap}")]
    TermCap { needed: u128, cap: u64 },
    #[error("model file, line {line}: {message}")]
    ModelFile { line: usize, message: String },
    #[error(transparent)]
    Relations(#[from] RelationsError),
}

/// A concrete family `u_{ij}` of `d x d` complex matrices, `1 <= i, j <= n`,
/// optionally with a projection `P0` for the non-unital relations. `d = 1`
/// is the scalar case.
#[derive(Clone, Debug)]
pub struct RepModel {
    n: usize,
    d: usize,
    /// Row-major: `entries[(i - 1) * n + (j - 1)]` is `u_{ij}`.
    entries: Vec<Array2<Complex64>>,
    p0: Option<Array2<Complex64>>,
}

impl RepModel {
    pub fn new(n: usize, d: usize, entries: Vec<Array2<Complex64>>) -> Result<RepModel, RepError> {
        if n == 0 || d == 0 {
            return Err(RepError::InvalidParameter("n and d must be positive".into()));
        }
        if entries.len() != n * n {
            return Err(RepError::InvalidParameter(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for e in &entries {
            if e.nrows() != d || e.ncols() != d {
                return Err(RepError::InvalidParameter(format!(
                    "entry has shape {}x{}, expected {d}x{d}",
                    e.nrows(),
                    e.ncols()
                )));
            }
        }
        Ok(RepModel { n, d, entries, p0: None })
    }

    /// Scalar model from an `n x n` complex matrix.
    pub fn from_scalar(u: &Array2<Complex64>) -> Result<RepModel, RepError> {
        if u.nrows() != u.ncols() {
            return Err(RepError::InvalidParameter("scalar model matrix must be square".into()));
        }
        let n = u.nrows();
        let entries = u.iter().map(|&z| Array2::from_elem((1, 1), z)).collect();
        RepModel::new(n, 1, entries)
    }

    /// Attaches a `P0`; must be a projection up to the given tolerance.
    pub fn with_p0(mut self, p0: Array2<Complex64>, tolerance: f64) -> Result<RepModel, RepError> {
        if p0.nrows() != self.d || p0.ncols() != self.d {
            return Err(RepError::InvalidParameter("p0 dimension mismatch".into()));
        }
        let idempotent = operator_norm(&(p0.dot(&p0) - &p0));
        let selfadjoint = operator_norm(&(dagger(&p0) - &p0));
        if idempotent > tolerance || selfadjoint > tolerance {
            return Err(RepError::InvalidParameter(format!(
                "p0 is not a projection: |p0^2 - p0| = {idempotent:.3e}, |p0* - p0| = {selfadjoint:.3e}"
            )));
        }
        self.p0 = Some(p0);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn p0(&self) -> Option<&Array2<Complex64>> {
        self.p0.as_ref()
    }

    /// `u_{ij}` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> &Array2<Complex64> {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    fn factor(&self, s: &GeneratorSymbol) -> Array2<Complex64> {
        let e = self.entry(s.row, s.col);
        if s.star {
            dagger(e)
        } else {
            e.clone()
        }
    }

    fn p0_or_identity(&self) -> Array2<Complex64> {
        self.p0.clone().unwrap_or_else(|| identity(self.d))
    }

    pub fn eval_word(&self, w: &Word) -> Array2<Complex64> {
        let mut acc = if w.leading_p0 {
            self.p0_or_identity()
        } else {
            identity(self.d)
        };
        for f in &w.factors {
            acc = acc.dot(&self.factor(f));
        }
        if w.trailing_p0 {
            acc = acc.dot(&self.p0_or_identity());
        }
        acc
    }

    fn eval_side(&self, side: &[Term]) -> Array2<Complex64> {
        let mut acc = Array2::<Complex64>::zeros((self.d, self.d));
        for (c, w) in side {
            acc = acc + self.eval_word(w).mapv(|z| z * c);
        }
        acc
    }

    /// Operator norm of `LHS - RHS` of one instance.
    pub fn instance_violation(&self, instance: &RelationInstance) -> f64 {
        operator_norm(&(self.eval_side(&instance.lhs) - self.eval_side(&instance.rhs)))
    }

    /// The family assembled as one `nd x nd` block matrix.
    pub fn block_matrix(&self) -> Array2<Complex64> {
        let (n, d) = (self.n, self.d);
        let mut out = Array2::<Complex64>::zeros((n * d, n * d));
        for i in 0..n {
            for j in 0..n {
                let e = &self.entries[i * n + j];
                for r in 0..d {
                    for c in 0..d {
                        out[[i * d + r, j * d + c]] = e[[r, c]];
                    }
                }
            }
        }
        out
    }
}

pub fn identity(d: usize) -> Array2<Complex64> {
    Array2::from_diag(&Array1::from_elem(d, Complex64::new(1.0, 0.0)))
}

/// Conjugate transpose.
pub fn dagger(a: &Array2<Complex64>) -> Array2<Complex64> {
    a.t().mapv(|z| z.conj())
}

/// Operator (spectral) norm via power iteration on `a* a`. Deterministic:
/// fixed start vector, fixed iteration cap with early convergence exit.
pub fn operator_norm(a: &Array2<Complex64>) -> f64 {
    let d = a.ncols();
    if d == 0 {
        return 0.0;
    }
    if d == 1 && a.nrows() == 1 {
        return a[[0, 0]].norm();
    }
    let b = dagger(a).dot(a);
    let mut v = Array1::from_iter(
        (0..d).map(|i| Complex64::new(1.0 + 0.137 * i as f64, 0.011 * (i * i) as f64)),
    );
    let norm = |x: &Array1<Complex64>| x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let nv = norm(&v);
    v.mapv_inplace(|z| z / nv);
    let mut lambda = 0.0f64;
    for _ in 0..300 {
        let w = b.dot(&v);
        let nw = norm(&w);
        if nw == 0.0 {
            return 0.0;
        }
        v = w.mapv(|z| z / nw);
        if (nw - lambda).abs() <= 1e-15 * nw.max(1.0) {
            lambda = nw;
            break;
        }
        lambda = nw;
    }
    lambda.sqrt()
}

// ---------------------------------------------------------------------------
// built-in models

#[derive(Clone, Debug, PartialEq)]
pub enum ModelSpec {
    /// `u_{ij} = 1` iff `sigma(j) = i`; `sigma` is 1-based images.
    Permutation { n: usize, sigma: Vec<usize> },
    /// Permutation support with entries `signs[j - 1]` in `{-1, +1}`.
    SignedPermutation { n: usize, sigma: Vec<usize>, signs: Vec<i8> },
    HaarOrthogonal { n: usize },
    HaarUnitary { n: usize },
    /// The `n = 4`, `d = 2` two-projection magic unitary at angle `theta`.
    MagicTwoProjections { theta: f64 },
}

impl ModelSpec {
    /// Colon-separated text form used by the command line:
    /// `permutation:3:2,3,1`, `signed-permutation:3:2,3,1:1,-1,1`,
    /// `haar-orthogonal:3`, `haar-unitary:3`, `magic:0.628`.
    pub fn parse(text: &str) -> Result<ModelSpec, RepError> {
        let bad = |m: &str| RepError::InvalidParameter(format!("{m} in model spec {text:?}"));
        let parts: Vec<&str> = text.split(':').collect();
        let usize_arg = |s: &str, what: &str| {
            s.parse::<usize>()
                .map_err(|_| bad(&format!("bad {what} {s:?}")))
        };
        let list = |s: &str, what: &str| -> Result<Vec<i64>, RepError> {
            s.split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad(&format!("bad {what} {t:?}"))))
                .collect()
        };
        match parts.as_slice() {
            ["permutation", n, sigma] => Ok(ModelSpec::Permutation {
                n: usize_arg(n, "size")?,
                sigma: list(sigma, "permutation")?.iter().map(|&v| v as usize).collect(),
            }),
            ["signed-permutation", n, sigma, signs] => Ok(ModelSpec::SignedPermutation {
                n: usize_arg(n, "size")?,
                sigma: list(sigma, "permutation")?.iter().map(|&v| v as usize).collect(),
                signs: list(signs, "sign")?.iter().map(|&v| v as i8).collect(),
            }),
            ["haar-orthogonal", n] => Ok(ModelSpec::HaarOrthogonal { n: usize_arg(n, "size")? }),
            ["haar-unitary", n] => Ok(ModelSpec::HaarUnitary { n: usize_arg(n, "size")? }),
            ["magic", theta] => Ok(ModelSpec::MagicTwoProjections {
                theta: theta.parse::<f64>().map_err(|_| bad("bad angle"))?,
            }),
            _ => Err(bad("unknown model")),
        }
    }
}

fn check_sigma(n: usize, sigma: &[usize]) -> Result<(), RepError> {
    let mut hit = vec![false; n];
    if sigma.len() != n {
        return Err(RepError::InvalidParameter(format!(
            "permutation has {} images, expected {n}",
            sigma.len()
        )));
    }
    for &v in sigma {
        if v == 0 || v > n || hit[v - 1] {
            return Err(RepError::InvalidParameter(format!("not a permutation: {sigma:?}")));
        }
        hit[v - 1] = true;
    }
    Ok(())
}

/// Columns orthonormalized by Gram-Schmidt; two passes so the result is
/// orthogonal to machine precision rather than sampler precision.
fn orthonormalize(mut m: Array2<Complex64>) -> Array2<Complex64> {
    let k = m.ncols();
    for _ in 0..2 {
        for j in 0..k {
            for i in 0..j {
                let proj: Complex64 = m
                    .column(i)
                    .iter()
                    .zip(m.column(j).iter())
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let col_i = m.column(i).to_owned();
                m.column_mut(j).zip_mut_with(&col_i, |b, a| *b -= proj * a);
            }
            let norm = m.column(j).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            m.column_mut(j).mapv_inplace(|z| z / norm);
        }
    }
    m
}

fn gaussian_matrix(n: usize, rng: &mut ChaCha8Rng, complex: bool) -> Array2<Complex64> {
    Array2::from_shape_fn((n, n), |_| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = if complex { rng.sample(StandardNormal) } else { 0.0 };
        Complex64::new(re, im)
    })
}

pub fn builtin_model(spec: &ModelSpec, seed: u64) -> Result<RepModel, RepError> {
    let re = |v: f64| Complex64::new(v, 0.0);
    match spec {
        ModelSpec::Permutation { n, sigma } => {
            check_sigma(*n, sigma)?;
            let u = Array2::from_shape_fn((*n, *n), |(i, j)| {
                re(if sigma[j] == i + 1 { 1.0 } else { 0.0 })
            });
            RepModel::from_scalar(&u)
        }
        ModelSpec::SignedPermutation { n, sigma, signs } => {
            check_sigma(*n, sigma)?;
            if signs.len() != *n || signs.iter().any(|s| *s != 1 && *s != -1) {
                return Err(RepError::InvalidParameter(format!("bad signs: {signs:?}")));
            }
            let u = Array2::from_shape_fn((*n, *n), |(i, j)| {
                re(if sigma[j] == i + 1 { signs[j] as f64 } else { 0.0 })
            });
            RepModel::from_scalar(&u)
        }
        ModelSpec::HaarOrthogonal { n } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            RepModel::from_scalar(&orthonormalize(gaussian_matrix(*n, &mut rng, false)))
        }
        ModelSpec::HaarUnitary { n } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            RepModel::from_scalar(&orthonormalize(gaussian_matrix(*n, &mut rng, true)))
        }
        ModelSpec::MagicTwoProjections { theta } => {
            if !theta.is_finite() {
                return Err(RepError::InvalidParameter(format!("bad angle {theta}")));
            }
            let (c, s) = (theta.cos(), theta.sin());
            let m = |a: f64, b: f64, cc: f64, dd: f64| {
                Array2::from_shape_vec((2, 2), vec![re(a), re(b), re(cc), re(dd)]).unwrap()
            };
            let p = m(1.0, 0.0, 0.0, 0.0);
            let q = m(c * c, c * s, c * s, s * s);
            let one = identity(2);
            let zero = Array2::zeros((2, 2));
            let cp = one.clone() - &p;
            let cq = one - &q;
            let entries = vec![
                p.clone(), cp.clone(), zero.clone(), zero.clone(),
                cp, p, zero.clone(), zero.clone(),
                zero.clone(), zero.clone(), q.clone(), cq.clone(),
                zero.clone(), zero, cq, q,
            ];
            RepModel::new(4, 2, entries)
        }
    }
}

// ---------------------------------------------------------------------------
// relation checks

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    /// Pass threshold on the worst violation.
    pub tolerance: f64,
    /// Cap on scalar multiply-adds per partition (`n^(k+l) * n^max(k,l)`).
    pub term_cap: u64,
    /// Check the `P0`-decorated relations instead of the unital ones.
    pub nonunital: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            tolerance: 1e-9,
            term_cap: 10_000_000,
            nonunital: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    /// Partition (or linear-combination) literal.
    pub label: String,
    pub instances: u64,
    pub max_violation: f64,
    pub pass: bool,
}

impl CheckReport {
    pub fn line(&self) -> String {
        format!(
            "{} instances={} max_violation={:.6e} pass={}",
            self.label, self.instances, self.max_violation, self.pass
        )
    }
}

fn cost(n: usize, k: usize, l: usize) -> u128 {
    let n = n as u128;
    n.pow((k + l) as u32).saturating_mul(n.pow(k.max(l) as u32))
}

fn check_frame<F>(
    label: String,
    n: usize,
    k: usize,
    l: usize,
    options: &CheckOptions,
    violation: F,
) -> Result<CheckReport, RepError>
where
    F: Fn(&[usize], &[usize]) -> Result<f64, RepError> + Sync,
{
    let needed = cost(n, k, l);
    if needed > options.term_cap as u128 {
        return Err(RepError::TermCap { needed, cap: options.term_cap });
    }
    let alphas: Vec<Vec<usize>> = tuples(k, n).collect();
    let max_violation = alphas
        .par_iter()
        .map(|alpha| -> Result<f64, RepError> {
            let mut worst = 0.0f64;
            for beta in tuples(l, n) {
                worst = worst.max(violation(alpha, &beta)?);
            }
            Ok(worst)
        })
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))?;
    Ok(CheckReport {
        label,
        instances: (n as u64).pow((k + l) as u32),
        max_violation,
        pass: max_violation <= options.tolerance,
    })
}

/// `out = a * b` with plain index loops; the matrices are tiny (`d <= 8`),
/// so what matters is avoiding a fresh allocation per product.
fn mul_into(a: &Array2<Complex64>, b: &Array2<Complex64>, out: &mut Array2<Complex64>) {
    let d = a.nrows();
    for r in 0..d {
        for c in 0..d {
            let mut s = Complex64::new(0.0, 0.0);
            for t in 0..d {
                s += a[[r, t]] * b[[t, c]];
            }
            out[[r, c]] = s;
        }
    }
}

/// Checks every instance of `R(p)` over free tuples `(alpha, beta)` in
/// `{1..n}^(k+l)` and reports the worst operator-norm deviation.
pub fn check_relation(
    model: &RepModel,
    p: &Partition,
    options: &CheckOptions,
) -> Result<CheckReport, RepError> {
    if options.nonunital && !p.is_one_colored() {
        return Err(RelationsError::NotOneColored.into());
    }
    let n = model.n;
    let d = model.d;
    let (k, l) = (p.upper_len(), p.lower_len());
    let needed = cost(n, k, l);
    if needed > options.term_cap as u128 {
        return Err(RepError::TermCap { needed, cap: options.term_cap });
    }
    let alphas: Vec<Vec<usize>> = tuples(k, n).collect();
    let betas: Vec<Vec<usize>> = tuples(l, n).collect();
    // The delta filter on the gamma side depends on beta only, and on the
    // gamma' side on alpha only, so the admissible middle tuples are
    // tabulated once; the per-instance work then only walks the words that
    // actually appear instead of rescanning all n^k (or n^l) candidates.
    let gammas: Vec<Vec<Vec<usize>>> = betas
        .iter()
        .map(|beta| tuples(k, n).filter(|g| delta(p, g, beta) == Ok(1)).collect())
        .collect();
    let gamma_primes: Vec<Vec<Vec<usize>>> = alphas
        .iter()
        .map(|alpha| tuples(l, n).filter(|g| delta(p, alpha, g) == Ok(1)).collect())
        .collect();
    let adjoints: Vec<Array2<Complex64>> =
        model.entries.iter().map(dagger).collect();
    let factor = |row: usize, col: usize, star: bool| -> &Array2<Complex64> {
        let idx = (row - 1) * n + (col - 1);
        if star {
            &adjoints[idx]
        } else {
            &model.entries[idx]
        }
    };
    let upper_stars: Vec<bool> = p.upper_colors().iter().map(|c| c.is_star()).collect();
    let lower_stars: Vec<bool> = p.lower_colors().iter().map(|c| c.is_star()).collect();
    let p0 = options.nonunital.then(|| model.p0_or_identity());
    let start = p0.clone().unwrap_or_else(|| identity(d));

    let max_violation = alphas
        .par_iter()
        .enumerate()
        .map(|(ai, alpha)| -> Result<f64, RepError> {
            let mut worst = 0.0f64;
            let mut work = Array2::<Complex64>::zeros((d, d));
            let mut next = Array2::<Complex64>::zeros((d, d));
            for (bi, beta) in betas.iter().enumerate() {
                let mut diff = Array2::<Complex64>::zeros((d, d));
                // sum over gamma of u^{eps_s}_{gamma_s alpha_s}
                for gamma in &gammas[bi] {
                    work.assign(&start);
                    for s in 0..k {
                        mul_into(&work, factor(gamma[s], alpha[s], upper_stars[s]), &mut next);
                        std::mem::swap(&mut work, &mut next);
                    }
                    diff += &work;
                }
                // minus the sum over gamma' of u^{eps_t}_{beta_t gamma'_t}
                for gp in &gamma_primes[ai] {
                    work.assign(&identity(d));
                    for t in 0..l {
                        mul_into(&work, factor(beta[t], gp[t], lower_stars[t]), &mut next);
                        std::mem::swap(&mut work, &mut next);
                    }
                    if let Some(p0) = &p0 {
                        mul_into(&work, p0, &mut next);
                        std::mem::swap(&mut work, &mut next);
                    }
                    diff -= &work;
                }
                worst = worst.max(operator_norm(&diff));
            }
            Ok(worst)
        })
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))?;
    Ok(CheckReport {
        label: p.to_string(),
        instances: (n as u64).pow((k + l) as u32),
        max_violation,
        pass: max_violation <= options.tolerance,
    })
}

/// Same check for a linear combination of partitions on a common frame.
pub fn check_lincomb(
    model: &RepModel,
    x: &LinComb,
    options: &CheckOptions,
) -> Result<CheckReport, RepError> {
    let n = model.n;
    check_frame(
        x.to_string(),
        n,
        x.upper_len(),
        x.lower_len(),
        options,
        move |alpha, beta| {
            let instance = instantiate_lincomb(x, n, alpha, beta)?;
            Ok(model.instance_violation(&instance))
        },
    )
}

// ---------------------------------------------------------------------------
// empirical relation set

#[derive(Clone, Debug)]
pub struct EmpiricalH {
    /// Partitions whose relations the model satisfies at tolerance.
    pub members: Vec<Partition>,
    /// Partitions skipped because their check exceeded the term cap; the
    /// probe is partial iff this is non-empty.
    pub skipped: Vec<Partition>,
}

impl EmpiricalH {
    pub fn is_partial(&self) -> bool {
        !self.skipped.is_empty()
    }
}

/// Checks every partition within `max_points` (all colorings if `colored`)
/// and collects the passing ones: an empirical probe of the model's
/// relation set.
pub fn empirical_h(
    model: &RepModel,
    max_points: usize,
    colored: bool,
    options: &CheckOptions,
) -> Result<EmpiricalH, RepError> {
    let mut candidates = Vec::new();
    for p in all_partitions_up_to(max_points) {
        if colored {
            candidates.extend(all_colorings(&p));
        } else {
            candidates.push(p);
        }
    }
    let mut members = Vec::new();
    let mut skipped = Vec::new();
    for p in candidates {
        match check_relation(model, &p, options) {
            Ok(report) if report.pass => members.push(p),
            Ok(_) => {}
            Err(RepError::TermCap { .. }) => skipped.push(p),
            Err(e) => return Err(e),
        }
    }
    Ok(EmpiricalH { members, skipped })
}

// ---------------------------------------------------------------------------
// open-problem search

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    /// Orthogonality of `u` under the relations of `[| a b c b]` and its
    /// involution: a candidate satisfies the relations but is far from
    /// orthogonal.
    P3_4,
    /// Noncommutativity under the half-liberation crossing relations of
    /// `[| a b a b]`: a candidate satisfies them with some `u_ij u_kl != u_kl u_ij`.
    P3_5,
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub trial: u64,
    /// Seed reconstructing the model via `random_selfadjoint_model`.
    pub seed: u64,
    /// Worst relation violation; condition (i), must be small.
    pub i_residual: f64,
    /// Distance from the trivial outcome; condition (ii), must be large.
    pub ii_margin: f64,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub problem: Problem,
    pub n: usize,
    pub d: usize,
    pub trials: u64,
    pub seed: u64,
    /// Candidates passing both conditions, best margin first. Empty means
    /// the search found nothing — a negative report, not a disproof.
    pub candidates: Vec<Candidate>,
}

impl SearchReport {
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "search problem={:?} n={} d={} trials={} seed={} candidates={}",
            self.problem, self.n, self.d, self.trials, self.seed,
            self.candidates.len()
        );
        for c in &self.candidates {
            let _ = writeln!(
                out,
                "trial={} seed={} i_residual={:.6e} ii_margin={:.6e}",
                c.trial, c.seed, c.i_residual, c.ii_margin
            );
        }
        out
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// A random family of self-adjoint `d x d` entries with spectrum in
/// `{-1, 0, 1}`: each entry is `V diag(eps) V^t` for a random orthogonal
/// `V`. The shape the open problems ask about — projection-like,
/// noncommuting building blocks.
pub fn random_selfadjoint_model(n: usize, d: usize, seed: u64) -> RepModel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..n * n)
        .map(|_| {
            let v = orthonormalize(gaussian_matrix(d, &mut rng, false));
            let eps = Array1::from_iter(
                (0..d).map(|_| Complex64::new(rng.gen_range(-1i8..=1) as f64, 0.0)),
            );
            v.dot(&Array2::from_diag(&eps)).dot(&v.t().to_owned())
        })
        .collect();
    RepModel::new(n, d, entries).unwrap()
}

/// `(i_residual, ii_margin)` for one model against one problem.
pub fn score_candidate(
    problem: Problem,
    model: &RepModel,
    options: &CheckOptions,
) -> Result<(f64, f64), RepError> {
    match problem {
        Problem::P3_4 => {
            let p = Partition::parse("[| a b c b]").unwrap();
            let p_star = crate::ops::involution(&p);
            let a = check_relation(model, &p, options)?;
            let b = check_relation(model, &p_star, options)?;
            let u = model.block_matrix();
            let one = identity(u.nrows());
            let defect = operator_norm(&(u.dot(&u.t().to_owned()) - &one))
                .max(operator_norm(&(u.t().to_owned().dot(&u) - &one)));
            Ok((a.max_violation.max(b.max_violation), defect))
        }
        Problem::P3_5 => {
            let h2 = Partition::parse("[| a b a b]").unwrap();
            let report = check_relation(model, &h2, options)?;
            let n = model.n;
            let mut margin = 0.0f64;
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        for l in 1..=n {
                            let a = model.entry(i, j);
                            let b = model.entry(k, l);
                            margin = margin.max(operator_norm(&(a.dot(b) - b.dot(a))));
                        }
                    }
                }
            }
            Ok((report.max_violation, margin))
        }
    }
}

/// Randomized search: per-trial seeds derived from the master seed, so
/// serial and parallel runs report identical candidate sets. A candidate
/// must satisfy the relations at tolerance and clear the margin threshold
/// of 1e-3.
pub fn problem_search(
    problem: Problem,
    n: usize,
    d: usize,
    trials: u64,
    seed: u64,
    options: &CheckOptions,
) -> Result<SearchReport, RepError> {
    let scored: Result<Vec<Candidate>, RepError> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let trial_seed = splitmix64(seed ^ splitmix64(trial));
            let model = random_selfadjoint_model(n, d, trial_seed);
            let (i_residual, ii_margin) = score_candidate(problem, &model, options)?;
            Ok(Candidate { trial, seed: trial_seed, i_residual, ii_margin })
        })
        .collect();
    let mut candidates: Vec<Candidate> = scored?
        .into_iter()
        .filter(|c| c.i_residual <= options.tolerance && c.ii_margin > 1e-3)
        .collect();
    candidates.sort_by(|a, b| b.ii_margin.total_cmp(&a.ii_margin));
    Ok(SearchReport { problem, n, d, trials, seed, candidates })
}

// ---------------------------------------------------------------------------
// model files

/// Text form: a header line `model n=<n> d=<d> p0=<0|1>`, then one line per
/// entry in row-major order (`2 d^2` floats, re/im interleaved, row-major
/// within the entry), then the `P0` line if flagged.
pub fn write_model(model: &RepModel) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "model n={} d={} p0={}",
        model.n,
        model.d,
        if model.p0.is_some() { 1 } else { 0 }
    );
    let mut matrix_line = |m: &Array2<Complex64>| {
        let floats: Vec<String> = m.iter().flat_map(|z| [format!("{:?}", z.re), format!("{:?}", z.im)]).collect();
        let _ = writeln!(out, "{}", floats.join(" "));
    };
    for e in &model.entries {
        matrix_line(e);
    }
    if let Some(p0) = &model.p0 {
        matrix_line(p0);
    }
    out
}

pub fn read_model(text: &str) -> Result<RepModel, RepError> {
    let bad = |line: usize, message: &str| RepError::ModelFile { line, message: message.into() };
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| bad(1, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != "model" {
        return Err(bad(1, "expected header: model n=<n> d=<d> p0=<0|1>"));
    }
    let field = |idx: usize, key: &str| -> Result<usize, RepError> {
        fields[idx]
            .strip_prefix(key)
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| bad(1, &format!("bad field {:?}", fields[idx])))
    };
    let n = field(1, "n=")?;
    let d = field(2, "d=")?;
    let has_p0 = field(3, "p0=")? == 1;
    let mut read_matrix = |label: &str| -> Result<Array2<Complex64>, RepError> {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| bad(0, &format!("missing {label} line")))?;
        let floats: Result<Vec<f64>, _> = line.split_whitespace().map(str::parse::<f64>).collect();
        let floats = floats.map_err(|_| bad(idx + 1, "bad float"))?;
        if floats.len() != 2 * d * d {
            return Err(bad(idx + 1, &format!("expected {} floats", 2 * d * d)));
        }
        let values: Vec<Complex64> = floats.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect();
        Ok(Array2::from_shape_vec((d, d), values).unwrap())
    };
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            entries.push(read_matrix(&format!("entry ({i},{j})"))?);
        }
    }
    let model = RepModel::new(n, d, entries)?;
    if has_p0 {
        let p0 = read_matrix("p0")?;
        model.with_p0(p0, 1e-9)
    } else {
        Ok(model)
    }
}

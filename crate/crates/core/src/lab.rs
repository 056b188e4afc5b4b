//! Monte-Carlo and finite-difference checks of the perturbation bounds
//! against dense computation.

use alloc::vec::Vec;
use core::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::conditioning::{eigvec_condition_general, global_min_gap, min_gap};
use crate::linalg::{eigen_decompose, qr_eigenvalues, EigenDecomposition};
use crate::matrix::{dotc, norm2, normalized, DenseMatrix};
use crate::structured::Subspace;
use crate::toeplitz::{is_normal, Family, TriToeplitz};
use crate::{Error, Result, C64};

/// Where a random perturbation is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SampleSpace {
    /// Any complex `n×n` matrix.
    General,
    Structured(Subspace),
}

impl SampleSpace {
    pub fn tag(self) -> &'static str {
        match self {
            SampleSpace::General => "general",
            SampleSpace::Structured(s) => s.tag(),
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        if s == "general" {
            Some(SampleSpace::General)
        } else {
            Subspace::from_tag(s).map(SampleSpace::Structured)
        }
    }
}

/// A unit-Frobenius perturbation direction `E`.
#[derive(Debug, Clone)]
pub struct PerturbationSample {
    pub e: DenseMatrix,
    pub space: SampleSpace,
    pub seed: u64,
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

fn complex_gaussian(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(gaussian(rng), gaussian(rng))
}

/// Gaussian direction, drawn in parameter space for the structured spaces
/// (three complex values for `Toeplitz`, two reals for `Symmetric` and
/// `Skew`) and scaled to unit Frobenius norm.
pub fn sample_perturbation(n: usize, space: SampleSpace, seed: u64) -> Result<PerturbationSample> {
    if n == 0 {
        return Err(Error::InvalidOrder { order: 0, minimum: 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = loop {
        let m = match space {
            SampleSpace::General => DenseMatrix::from_fn(n, n, |_, _| complex_gaussian(&mut rng)),
            SampleSpace::Structured(s) => {
                let (sigma, delta, tau) = match s {
                    Subspace::Toeplitz => {
                        (complex_gaussian(&mut rng), complex_gaussian(&mut rng), complex_gaussian(&mut rng))
                    }
                    Subspace::Symmetric => {
                        let (a, d) = (gaussian(&mut rng), gaussian(&mut rng));
                        (C64::from(a), C64::from(d), C64::from(a))
                    }
                    Subspace::Skew => {
                        let (a, d) = (gaussian(&mut rng), gaussian(&mut rng));
                        (C64::from(a), C64::from(d), C64::from(-a))
                    }
                };
                TriToeplitz::new(n, sigma, delta, tau)?.to_dense()
            }
        };
        let norm = m.frobenius_norm();
        if norm > 0.0 {
            break m.scale(C64::from(norm.recip()));
        }
    };
    Ok(PerturbationSample { e, space, seed })
}

/// Outcome of one `measured ≤ bound` comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub h: usize,
    pub measured: f64,
    pub bound: f64,
    pub pass: bool,
}

impl BoundCheck {
    pub fn new(h: usize, measured: f64, bound: f64) -> Self {
        BoundCheck { h, measured, bound, pass: measured <= bound * (1.0 + 1e-9) }
    }
}

/// Greedy maximum-overlap pairing: entry `h` is the column of `f_eps`
/// continuing column `h` of `f`.
pub fn match_continuation(f: &EigenDecomposition, f_eps: &EigenDecomposition) -> Result<Vec<usize>> {
    let n = f.order();
    if f_eps.order() != n {
        return Err(Error::LengthMismatch { left: n, right: f_eps.order() });
    }
    let base: Vec<Vec<C64>> = (0..n).map(|h| normalized(&f.vector(h))).collect();
    let moved: Vec<Vec<C64>> = (0..n).map(|h| normalized(&f_eps.vector(h))).collect();
    let mut overlaps = Vec::with_capacity(n * n);
    for a in &base {
        for b in &moved {
            overlaps.push(dotc(a, b).norm());
        }
    }
    let mut pairing = alloc::vec![usize::MAX; n];
    let mut taken = alloc::vec![false; n];
    for _ in 0..n {
        let mut best = (usize::MAX, usize::MAX, -1.0);
        for h in (0..n).filter(|&h| pairing[h] == usize::MAX) {
            for j in (0..n).filter(|&j| !taken[j]) {
                let o = overlaps[h * n + j];
                if o > best.2 {
                    best = (h, j, o);
                }
            }
        }
        let (h, j, o) = best;
        if o < core::f64::consts::FRAC_1_SQRT_2 {
            return Err(Error::AmbiguousMatch { index: h + 1, overlap: o });
        }
        pairing[h] = j;
        taken[j] = true;
    }
    Ok(pairing)
}

/// `sin θ` between unit vectors, as `‖y − x(x^H y)‖₂`, which keeps full
/// relative accuracy for small angles.
pub fn sin_theta(x: &[C64], y: &[C64]) -> f64 {
    let c = dotc(x, y);
    let r: Vec<C64> = y.iter().zip(x).map(|(b, a)| b - a * c).collect();
    norm2(&r).min(1.0)
}

/// The closed-form decomposition of a family member with unit vectors.
pub fn exact_decomposition(t: &TriToeplitz, family: Family) -> Result<EigenDecomposition> {
    let n = t.order();
    let values = t.family_eigenvalues(family)?;
    let mut vectors = DenseMatrix::zeros(n, n);
    for h in 1..=n {
        vectors.set_column(h - 1, &normalized(&t.family_right_eigenvector(family, h)?));
    }
    Ok(EigenDecomposition { values, vectors, tolerance: 0.0 })
}

/// `κ(x̃_h)`: the reciprocal gap for normal input, the deflation route otherwise.
pub fn eigvec_condition(t: &TriToeplitz, family: Family, h: usize) -> Result<f64> {
    if is_normal(t) {
        Ok(1.0 / min_gap(t, family, h)?)
    } else {
        let a = t.family_matrix(family)?.to_dense();
        let x = normalized(&t.family_right_eigenvector(family, h)?);
        eigvec_condition_general(&a, t.family_eigenvalue(family, h)?, &x)
    }
}

/// `sin θ(x̃_h, x̃_h^ε) ≤ κ(x̃_h)·ε` for every `h`, with `x̃^ε` from a dense
/// eigensolve of `A + εE`.
pub fn verify_sin_theta_all(t: &TriToeplitz, family: Family, e: &DenseMatrix, eps: f64) -> Result<Vec<BoundCheck>> {
    let n = t.order();
    let kappas: Vec<f64> = (1..=n).map(|h| eigvec_condition(t, family, h)).collect::<Result<_>>()?;
    if eps == 0.0 {
        return Ok((1..=n).map(|h| BoundCheck::new(h, 0.0, 0.0)).collect());
    }
    let base = exact_decomposition(t, family)?;
    let a = t.family_matrix(family)?.to_dense();
    let perturbed = eigen_decompose(&a.add_scaled(e, eps)?)?;
    let pairing = match_continuation(&base, &perturbed)?;
    Ok((0..n)
        .map(|h| {
            let measured = sin_theta(&base.vector(h), &perturbed.vector(pairing[h]));
            BoundCheck::new(h + 1, measured, kappas[h] * eps)
        })
        .collect())
}

pub fn verify_sin_theta(t: &TriToeplitz, family: Family, e: &DenseMatrix, eps: f64, h: usize) -> Result<BoundCheck> {
    t.check_index(h)?;
    Ok(verify_sin_theta_all(t, family, e, eps)?[h - 1])
}

/// Default finite-difference step `1e-6·‖A‖_F`.
pub fn default_step(t: &TriToeplitz, family: Family) -> Result<f64> {
    Ok(1e-6 * t.family_matrix(family)?.frobenius_norm())
}

/// `|λ_h(A + tE) − λ_h(A)| / t`, taking the eigenvalue of `A + tE` nearest
/// `λ_h`. `step = None` uses [`default_step`].
pub fn fd_eigenvalue_slope(t: &TriToeplitz, family: Family, e: &DenseMatrix, h: usize, step: Option<f64>) -> Result<f64> {
    let lambda = t.family_eigenvalue(family, h)?;
    let step = match step {
        Some(s) => s,
        None => default_step(t, family)?,
    };
    let a = t.family_matrix(family)?.to_dense();
    let moved = qr_eigenvalues(&a.add_scaled(e, step)?)?;
    let nearest = moved.iter().map(|z| (z - lambda).norm()).fold(f64::INFINITY, f64::min);
    Ok(nearest / step)
}

/// A normal `T` with `|σ| = |τ|` drawn from `seed`: modulus in `[0.5, 2)`,
/// uniform phases, Gaussian `δ`.
pub fn random_normal_toeplitz(n: usize, seed: u64) -> Result<TriToeplitz> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_0f_7e57);
    let modulus = rng.random_range(0.5..2.0);
    let two_pi = 2.0 * core::f64::consts::PI;
    let sigma = C64::from_polar(modulus, rng.random_range(0.0..two_pi));
    let tau = C64::from_polar(modulus, rng.random_range(0.0..two_pi));
    TriToeplitz::new(n, sigma, complex_gaussian(&mut rng), tau)
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub orders: Vec<usize>,
    pub seeds: Range<u64>,
    /// `ε = eps_scale·(global minimum gap)`.
    pub eps_scale: f64,
    pub space: SampleSpace,
    pub family: Family,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteFailure {
    pub n: usize,
    pub seed: u64,
    pub check: BoundCheck,
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub checks: usize,
    pub passed: usize,
    /// Largest `measured/bound` seen.
    pub worst_ratio: f64,
    pub failures: Vec<SuiteFailure>,
    pub errors: Vec<(usize, u64, Error)>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.errors.is_empty() && self.passed == self.checks
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks += other.checks;
        self.passed += other.passed;
        self.worst_ratio = self.worst_ratio.max(other.worst_ratio);
        self.failures.extend(other.failures);
        self.errors.extend(other.errors);
    }
}

/// One suite cell: a random normal `T` of order `n` and a random `E`, both
/// drawn from `seed`.
pub fn run_bound_case(n: usize, seed: u64, config: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::default();
    let outcome = (|| {
        let t = random_normal_toeplitz(n, seed)?;
        let eps = config.eps_scale * global_min_gap(&t, config.family)?;
        let e = sample_perturbation(n, config.space, seed)?.e;
        verify_sin_theta_all(&t, config.family, &e, eps)
    })();
    match outcome {
        Ok(checks) => {
            for c in checks {
                report.checks += 1;
                if c.bound > 0.0 {
                    report.worst_ratio = report.worst_ratio.max(c.measured / c.bound);
                }
                if c.pass {
                    report.passed += 1;
                } else {
                    report.failures.push(SuiteFailure { n, seed, check: c });
                }
            }
        }
        Err(e) => report.errors.push((n, seed, e)),
    }
    report
}

pub fn run_bound_suite(config: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::default();
    for &n in &config.orders {
        for seed in config.seeds.clone() {
            report.merge(run_bound_case(n, seed, config));
        }
    }
    report
}

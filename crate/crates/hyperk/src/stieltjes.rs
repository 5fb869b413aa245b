//! Hyperbolic Riemann-Stieltjes integration.
//!
//! An integral `∫_I F d_kG` is approximated by sums `Σ F(γ_j)·(G(ρ_{j+1}) -
//! G(ρ_j))` over strong partitions of `I`, with tags `γ_j` inside each
//! chain step. [`rs_integral`] drives diagonal partition refinement until
//! the sums stabilize; [`rs_integral_components`] computes the same
//! integral for separable data through two ordinary real
//! Riemann-Stieltjes integrals and shares no code with the driver, so the
//! two routes check each other.
//!
//! Refinement alone can look converged on a grid that happens to align
//! with the integrand, so after the Cauchy test passes the driver re-sums
//! with seeded random tags and only then reports convergence. Failure to
//! converge is an outcome, not an error: the result carries a `converged`
//! flag and the full refinement trace either way.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::func::{Component, HypFn, SeparableFn};
use crate::hyp::Hyp;
use crate::interval::HypInterval;
use crate::partition::{gen_strong, RealPartition, Strategy, StrongPartition};

/// Where the tag sits in each chain step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleRule {
    Left,
    Right,
    Midpoint,
}

/// `Signed` weighs increments `G(ρ_{j+1}) - G(ρ_j)`; `Absolute` weighs
/// their hyperbolic moduli. The two agree when both components of `G` are
/// non-decreasing and can differ sharply otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Signed,
    Absolute,
}

/// One Riemann-Stieltjes sum over a strong partition.
pub fn rs_sum<F, G>(
    f: &F,
    g: &G,
    part: &StrongPartition,
    rule: SampleRule,
    mode: Mode,
) -> Result<Hyp, Error>
where
    F: HypFn + ?Sized,
    G: HypFn + ?Sized,
{
    rs_sum_tagged(
        f,
        g,
        part,
        |lo, hi| match rule {
            SampleRule::Left => lo,
            SampleRule::Right => hi,
            SampleRule::Midpoint => (lo + hi) * 0.5,
        },
        mode,
    )
}

fn rs_sum_tagged<F, G>(
    f: &F,
    g: &G,
    part: &StrongPartition,
    mut tag: impl FnMut(Hyp, Hyp) -> Hyp,
    mode: Mode,
) -> Result<Hyp, Error>
where
    F: HypFn + ?Sized,
    G: HypFn + ?Sized,
{
    let pts = part.points();
    let mut total = Hyp::ZERO;
    let mut g_prev = g.eval(pts[0])?;
    for w in pts.windows(2) {
        let g_cur = g.eval(w[1])?;
        let weight = match mode {
            Mode::Signed => g_cur - g_prev,
            Mode::Absolute => (g_cur - g_prev).k_module(),
        };
        total = total + f.eval(tag(w[0], w[1]))? * weight;
        g_prev = g_cur;
    }
    Ok(total)
}

/// Tuning knobs for [`rs_integral`].
#[derive(Debug, Clone)]
pub struct IntegrateOpts {
    /// Successive-sum bound: refinement stops once
    /// `|S_L - S_{L-1}|_k ≺ tolerance`.
    pub tolerance: Hyp,
    /// Random-tag agreement bound, relative to `max(1, |S|)` per
    /// component. Tagged sums converge one order slower than the midpoint
    /// ladder differences, so this is looser than `tolerance`; it is
    /// there to catch grid-aligned false convergence, which shows up at
    /// the scale of the sum, not at its last digit.
    pub tag_tolerance: Hyp,
    /// Number of seeded random-tag re-summations after the Cauchy test.
    pub tag_draws: u32,
    pub seed: u64,
    /// Halving levels before the driver gives up.
    pub max_refinements: u32,
    /// Tag placement for the refinement ladder.
    pub rule: SampleRule,
    pub mode: Mode,
}

impl Default for IntegrateOpts {
    fn default() -> IntegrateOpts {
        IntegrateOpts {
            tolerance: Hyp::new(1e-8, 1e-8),
            tag_tolerance: Hyp::new(1e-5, 1e-5),
            tag_draws: 3,
            seed: 0,
            max_refinements: 24,
            rule: SampleRule::Midpoint,
            mode: Mode::Signed,
        }
    }
}

/// One refinement level of the driver.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceEntry {
    pub diameter: Hyp,
    pub sum: Hyp,
}

/// Outcome of [`rs_integral`]. `converged: false` is a first-class
/// answer: `value` is then the last sum computed and the trace shows how
/// far refinement got.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralResult {
    pub value: Hyp,
    /// Last successive-sum difference, absent when only one level ran.
    pub error_estimate: Option<Hyp>,
    pub refinements: usize,
    pub trace: Vec<TraceEntry>,
    pub converged: bool,
}

/// `∫_I F d_kG` by diagonal partition halving.
pub fn rs_integral<F, G>(f: &F, g: &G, i: &HypInterval) -> Result<IntegralResult, Error>
where
    F: HypFn + ?Sized,
    G: HypFn + ?Sized,
{
    rs_integral_with(f, g, i, &IntegrateOpts::default())
}

pub fn rs_integral_with<F, G>(
    f: &F,
    g: &G,
    i: &HypInterval,
    opts: &IntegrateOpts,
) -> Result<IntegralResult, Error>
where
    F: HypFn + ?Sized,
    G: HypFn + ?Sized,
{
    if i.is_point() {
        // Every sum over a point interval is empty.
        return Ok(IntegralResult {
            value: Hyp::ZERO,
            error_estimate: Some(Hyp::ZERO),
            refinements: 0,
            trace: Vec::new(),
            converged: true,
        });
    }
    let ([a1, b1], [a2, b2]) = i.project();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut trace: Vec<TraceEntry> = Vec::new();
    let mut prev: Option<Hyp> = None;
    let mut last_diff: Option<Hyp> = None;
    for level in 0..=opts.max_refinements {
        let cells = 1usize << level;
        let part = gen_strong(
            &RealPartition::uniform(a1, b1, cells)?,
            &RealPartition::uniform(a2, b2, cells)?,
            Strategy::Diagonal,
        );
        let sum = rs_sum(f, g, &part, opts.rule, opts.mode)?;
        trace.push(TraceEntry { diameter: part.diameter(), sum });
        if let Some(p) = prev {
            let diff = (sum - p).k_module();
            last_diff = Some(diff);
            if diff.strict_lt(opts.tolerance)
                && random_tags_agree(f, g, &part, sum, opts, &mut rng)?
            {
                return Ok(IntegralResult {
                    value: sum,
                    error_estimate: Some(diff),
                    refinements: level as usize,
                    trace,
                    converged: true,
                });
            }
        }
        prev = Some(sum);
    }
    Ok(IntegralResult {
        value: prev.unwrap(),
        error_estimate: last_diff,
        refinements: opts.max_refinements as usize,
        trace,
        converged: false,
    })
}

fn random_tags_agree<F, G>(
    f: &F,
    g: &G,
    part: &StrongPartition,
    reference: Hyp,
    opts: &IntegrateOpts,
    rng: &mut ChaCha8Rng,
) -> Result<bool, Error>
where
    F: HypFn + ?Sized,
    G: HypFn + ?Sized,
{
    let bound = Hyp::new(
        opts.tag_tolerance.a1 * reference.a1.abs().max(1.0),
        opts.tag_tolerance.a2 * reference.a2.abs().max(1.0),
    );
    for _ in 0..opts.tag_draws {
        let s = rs_sum_tagged(
            f,
            g,
            part,
            |lo, hi| Hyp::new(rng.gen_range(lo.a1..=hi.a1), rng.gen_range(lo.a2..=hi.a2)),
            opts.mode,
        )?;
        if !(s - reference).k_module().strict_lt(bound) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `∫_I F d_kξ`: the integrator against the identity.
pub fn riemann_identity_integral<F: HypFn + ?Sized>(
    f: &F,
    i: &HypInterval,
) -> Result<IntegralResult, Error> {
    rs_integral(f, &SeparableFn::identity(), i)
}

/// `∫_I F d_kG` for separable data, reduced to one ordinary real
/// Riemann-Stieltjes integral per component over the projections. Kept
/// free of the partition machinery on purpose: this is the independent
/// route that [`rs_integral`] is checked against.
pub fn rs_integral_components(
    f: &SeparableFn,
    g: &SeparableFn,
    i: &HypInterval,
) -> Result<Hyp, Error> {
    let ([a1, b1], [a2, b2]) = i.project();
    Ok(Hyp::new(
        real_rs_integral(f.f1(), g.f1(), a1, b1)?,
        real_rs_integral(f.f2(), g.f2(), a2, b2)?,
    ))
}

const COMPONENT_TOL: f64 = 1e-9;
const COMPONENT_MAX_DOUBLINGS: u32 = 24;

fn real_rs_integral(f: &Component, g: &Component, a: f64, b: f64) -> Result<f64, Error> {
    if a == b {
        return Ok(0.0);
    }
    let mut prev: Option<f64> = None;
    let mut n = 1usize;
    for _ in 0..=COMPONENT_MAX_DOUBLINGS {
        let h = (b - a) / n as f64;
        let mut sum = 0.0;
        let mut g_lo = g.eval(a)?;
        for j in 0..n {
            let x_lo = if j == 0 { a } else { a + j as f64 * h };
            let x_hi = if j + 1 == n { b } else { a + (j + 1) as f64 * h };
            let g_hi = g.eval(x_hi)?;
            sum += f.eval(0.5 * (x_lo + x_hi))? * (g_hi - g_lo);
            g_lo = g_hi;
        }
        if let Some(p) = prev {
            if (sum - p).abs() < COMPONENT_TOL {
                return Ok(sum);
            }
        }
        prev = Some(sum);
        n *= 2;
    }
    Err(Error::NoConvergence {
        context: "component integral",
        refinements: COMPONENT_MAX_DOUBLINGS as usize,
    })
}

/// Result of [`verify_integration_by_parts`].
#[derive(Debug, Clone, Serialize)]
pub struct PartsCheck {
    /// `∫_I F d_kG`.
    pub direct: IntegralResult,
    /// `∫_I F·G' d_kξ`.
    pub reduced: IntegralResult,
    /// `|direct - reduced|_k`.
    pub residual: Hyp,
    pub tolerance: Hyp,
    pub within_tolerance: bool,
}

/// Checks `∫_I F d_kG = ∫_I F·G' d_kξ` for differentiable separable `G`
/// by computing both sides and comparing. Demands convergence of both
/// integrals; a residual beyond `tol` is a negative verdict, not an
/// error.
pub fn verify_integration_by_parts(
    f: &SeparableFn,
    g: &SeparableFn,
    i: &HypInterval,
    tol: Hyp,
) -> Result<PartsCheck, Error> {
    let integrand = f.product(&g.derivative()?);
    let direct = rs_integral(f, g, i)?;
    if !direct.converged {
        return Err(Error::NoConvergence {
            context: "direct integral",
            refinements: direct.refinements,
        });
    }
    let reduced = riemann_identity_integral(&integrand, i)?;
    if !reduced.converged {
        return Err(Error::NoConvergence {
            context: "reduced integral",
            refinements: reduced.refinements,
        });
    }
    let residual = (direct.value - reduced.value).k_module();
    Ok(PartsCheck {
        within_tolerance: residual.strict_lt(tol),
        direct,
        reduced,
        residual,
        tolerance: tol,
    })
}

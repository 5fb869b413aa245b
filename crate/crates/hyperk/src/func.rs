//! Hyperbolic-valued functions of a hyperbolic variable.
//!
//! The workhorse is the separable form `F(ξ) = F1(x1)·e1 + F2(x2)·e2`:
//! each idempotent component depends only on its own coordinate. That is
//! exactly the shape holomorphic (Cauchy-Riemann-satisfying) functions
//! take in this plane, and it is what variation and integration consume.
//! Components are either expression trees (differentiable symbolically) or
//! native callbacks (step functions, kinks); declared jump lists travel
//! with the function so discontinuity analysis does not have to guess.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::expr::Expr;
use crate::hyp::Hyp;

/// Anything that maps `Hyp` to `Hyp`. Implemented by [`SeparableFn`] and
/// by [`PairFn`] for general (non-separable) component pairs.
pub trait HypFn {
    fn eval(&self, xi: Hyp) -> Result<Hyp, Error>;
}

/// One real component: an expression tree or a native callback.
#[derive(Clone)]
pub enum Component {
    Expr(Expr),
    Native(Arc<dyn Fn(f64) -> Result<f64, Error> + Send + Sync>),
}

impl Component {
    pub fn eval(&self, x: f64) -> Result<f64, Error> {
        match self {
            Component::Expr(e) => e.eval(x),
            Component::Native(f) => f(x),
        }
    }

    /// The expression tree, when this component has one.
    pub fn as_expr(&self) -> Option<&Expr> {
        match self {
            Component::Expr(e) => Some(e),
            Component::Native(_) => None,
        }
    }
}

impl fmt::Debug for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Expr(e) => write!(f, "Expr({})", e),
            Component::Native(_) => write!(f, "Native(..)"),
        }
    }
}

impl From<Expr> for Component {
    fn from(e: Expr) -> Component {
        Component::Expr(e)
    }
}

/// `F(ξ) = F1(x1)·e1 + F2(x2)·e2` with optional declared jump abscissae
/// per component.
#[derive(Debug, Clone)]
pub struct SeparableFn {
    f1: Component,
    f2: Component,
    jumps1: Vec<f64>,
    jumps2: Vec<f64>,
}

impl SeparableFn {
    pub fn new(f1: Component, f2: Component) -> SeparableFn {
        SeparableFn { f1, f2, jumps1: Vec::new(), jumps2: Vec::new() }
    }

    pub fn from_exprs(f1: Expr, f2: Expr) -> SeparableFn {
        SeparableFn::new(Component::Expr(f1), Component::Expr(f2))
    }

    /// Parses both component expressions.
    pub fn parse(f1: &str, f2: &str) -> Result<SeparableFn, Error> {
        Ok(SeparableFn::from_exprs(Expr::parse(f1)?, Expr::parse(f2)?))
    }

    pub fn from_natives(
        f1: impl Fn(f64) -> f64 + Send + Sync + 'static,
        f2: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> SeparableFn {
        SeparableFn::new(
            Component::Native(Arc::new(move |x| Ok(f1(x)))),
            Component::Native(Arc::new(move |x| Ok(f2(x)))),
        )
    }

    /// The identity `F(ξ) = ξ`.
    pub fn identity() -> SeparableFn {
        SeparableFn::from_exprs(Expr::Var, Expr::Var)
    }

    /// The constant function `F(ξ) = c`.
    pub fn constant(c: Hyp) -> SeparableFn {
        SeparableFn::from_exprs(Expr::Num(c.a1), Expr::Num(c.a2))
    }

    /// Declares jump abscissae; the lists are kept sorted.
    pub fn with_jumps(mut self, mut jumps1: Vec<f64>, mut jumps2: Vec<f64>) -> SeparableFn {
        jumps1.sort_by(f64::total_cmp);
        jumps2.sort_by(f64::total_cmp);
        self.jumps1 = jumps1;
        self.jumps2 = jumps2;
        self
    }

    pub fn f1(&self) -> &Component {
        &self.f1
    }

    pub fn f2(&self) -> &Component {
        &self.f2
    }

    pub fn jumps1(&self) -> &[f64] {
        &self.jumps1
    }

    pub fn jumps2(&self) -> &[f64] {
        &self.jumps2
    }

    pub fn eval1(&self, x: f64) -> Result<f64, Error> {
        self.f1.eval(x)
    }

    pub fn eval2(&self, x: f64) -> Result<f64, Error> {
        self.f2.eval(x)
    }

    /// The holomorphic derivative `F' = F1'·e1 + F2'·e2`. Requires both
    /// components to be expression-backed.
    pub fn derivative(&self) -> Result<SeparableFn, Error> {
        match (&self.f1, &self.f2) {
            (Component::Expr(e1), Component::Expr(e2)) => Ok(SeparableFn::from_exprs(
                e1.differentiate()?,
                e2.differentiate()?,
            )),
            _ => Err(Error::NotDifferentiable),
        }
    }

    /// Component-wise product `F·G`; separable functions are closed under
    /// it. Jump abscissae of both factors are carried along.
    pub fn product(&self, other: &SeparableFn) -> SeparableFn {
        let merge = |a: &[f64], b: &[f64]| {
            let mut m: Vec<f64> = a.iter().chain(b.iter()).copied().collect();
            m.sort_by(f64::total_cmp);
            m.dedup();
            m
        };
        SeparableFn {
            f1: component_product(&self.f1, &other.f1),
            f2: component_product(&self.f2, &other.f2),
            jumps1: merge(&self.jumps1, &other.jumps1),
            jumps2: merge(&self.jumps2, &other.jumps2),
        }
    }
}

impl HypFn for SeparableFn {
    fn eval(&self, xi: Hyp) -> Result<Hyp, Error> {
        Ok(Hyp::new(self.f1.eval(xi.a1)?, self.f2.eval(xi.a2)?))
    }
}

fn component_product(a: &Component, b: &Component) -> Component {
    match (a, b) {
        (Component::Expr(x), Component::Expr(y)) => {
            Component::Expr(Expr::Mul(Box::new(x.clone()), Box::new(y.clone())))
        }
        _ => {
            let (a, b) = (a.clone(), b.clone());
            Component::Native(Arc::new(move |x| Ok(a.eval(x)? * b.eval(x)?)))
        }
    }
}

/// A general component pair `F(ξ) = F1(x1, x2)·e1 + F2(x1, x2)·e2` in
/// idempotent coordinates. Not separable in general; used where a
/// brute-force check must range over arbitrary functions.
pub struct PairFn<F1, F2> {
    f1: F1,
    f2: F2,
}

impl<F1, F2> PairFn<F1, F2>
where
    F1: Fn(f64, f64) -> f64,
    F2: Fn(f64, f64) -> f64,
{
    pub fn new(f1: F1, f2: F2) -> PairFn<F1, F2> {
        PairFn { f1, f2 }
    }
}

impl<F1, F2> HypFn for PairFn<F1, F2>
where
    F1: Fn(f64, f64) -> f64,
    F2: Fn(f64, f64) -> f64,
{
    fn eval(&self, xi: Hyp) -> Result<Hyp, Error> {
        Ok(Hyp::new((self.f1)(xi.a1, xi.a2), (self.f2)(xi.a1, xi.a2)))
    }
}

/// Central difference `(f(x+h) - f(x-h)) / 2h`.
pub fn central_diff(
    f: impl Fn(f64) -> Result<f64, Error>,
    x: f64,
    h: f64,
) -> Result<f64, Error> {
    Ok((f(x + h)? - f(x - h)?) / (2.0 * h))
}

/// Residuals of the Cauchy-Riemann system for a function given by its
/// standard components `u, v` (so `F = u + v·k`) of the standard
/// coordinates `(t, s)`. Returns `(|∂u/∂t - ∂v/∂s|, |∂u/∂s - ∂v/∂t|)`
/// estimated by central differences with step `h`. Both residuals vanish
/// as `h → 0` exactly when `F` splits into the separable form.
pub fn cr_residual<U, V>(u: U, v: V, xi: Hyp, h: f64) -> Result<(f64, f64), Error>
where
    U: Fn(f64, f64) -> Result<f64, Error>,
    V: Fn(f64, f64) -> Result<f64, Error>,
{
    assert!(h > 0.0, "finite-difference step must be positive");
    let (t, s) = xi.to_standard();
    let du_dt = (u(t + h, s)? - u(t - h, s)?) / (2.0 * h);
    let du_ds = (u(t, s + h)? - u(t, s - h)?) / (2.0 * h);
    let dv_dt = (v(t + h, s)? - v(t - h, s)?) / (2.0 * h);
    let dv_ds = (v(t, s + h)? - v(t, s - h)?) / (2.0 * h);
    Ok(((du_dt - dv_ds).abs(), (du_ds - dv_dt).abs()))
}

/// [`cr_residual`] for a separable function, lifted to standard
/// components via `e1 = (1+k)/2`, `e2 = (1-k)/2`.
pub fn cr_residual_separable(f: &SeparableFn, xi: Hyp, h: f64) -> Result<(f64, f64), Error> {
    let u = |t: f64, s: f64| Ok((f.eval1(t + s)? + f.eval2(t - s)?) / 2.0);
    let v = |t: f64, s: f64| Ok((f.eval1(t + s)? - f.eval2(t - s)?) / 2.0);
    cr_residual(u, v, xi, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separable_evaluation_is_component_wise() {
        let f = SeparableFn::parse("x^2", "sin(x)").unwrap();
        let v = f.eval(Hyp::new(3.0, 0.0)).unwrap();
        assert_eq!(v, Hyp::new(9.0, 0.0));
        assert_eq!(SeparableFn::identity().eval(Hyp::new(2.0, 5.0)).unwrap(), Hyp::new(2.0, 5.0));
        let c = SeparableFn::constant(Hyp::new(1.0, -1.0));
        assert_eq!(c.eval(Hyp::new(7.0, 8.0)).unwrap(), Hyp::new(1.0, -1.0));
    }

    #[test]
    fn holomorphic_derivative_differentiates_components() {
        let f = SeparableFn::parse("x^2", "sin(x)").unwrap();
        let d = f.derivative().unwrap();
        assert_eq!(d.eval(Hyp::new(3.0, 0.0)).unwrap(), Hyp::new(6.0, 1.0));
        let native = SeparableFn::from_natives(|x| x, |x| x);
        assert_eq!(native.derivative().unwrap_err(), Error::NotDifferentiable);
        let kinked = SeparableFn::parse("abs(x)", "x").unwrap();
        assert_eq!(kinked.derivative().unwrap_err(), Error::NotDifferentiable);
    }

    #[test]
    fn products_stay_separable() {
        let f = SeparableFn::parse("x", "x + 1").unwrap();
        let g = SeparableFn::parse("x^2", "2").unwrap();
        let p = f.product(&g);
        assert_eq!(p.eval(Hyp::new(2.0, 3.0)).unwrap(), Hyp::new(8.0, 8.0));
        // Expr × Expr keeps a tree, so the product stays differentiable.
        assert!(p.derivative().is_ok());
        let n = f.product(&SeparableFn::from_natives(|x| x, |x| x));
        assert_eq!(n.eval(Hyp::new(2.0, 3.0)).unwrap(), Hyp::new(4.0, 12.0));
    }

    #[test]
    fn jump_lists_are_sorted() {
        let f = SeparableFn::parse("x", "x")
            .unwrap()
            .with_jumps(vec![0.75, 0.25], vec![0.5]);
        assert_eq!(f.jumps1(), &[0.25, 0.75]);
        assert_eq!(f.jumps2(), &[0.5]);
    }

    #[test]
    fn cr_residual_vanishes_for_the_identity() {
        // F(ξ) = ξ: u = t, v = s.
        let u = |t: f64, _s: f64| Ok(t);
        let v = |_t: f64, s: f64| Ok(s);
        for &h in &[1e-3, 1e-4] {
            let (r1, r2) = cr_residual(u, v, Hyp::from_standard(0.3, 0.7), h).unwrap();
            assert!(r1 < 1e-9 && r2 < 1e-9, "h={}: ({}, {})", h, r1, r2);
        }
    }

    #[test]
    fn cr_residual_rejects_the_conjugate() {
        // F(ξ) = ξ†: u = t, v = -s violates ∂u/∂t = ∂v/∂s by 2.
        let u = |t: f64, _s: f64| Ok(t);
        let v = |_t: f64, s: f64| Ok(-s);
        for &h in &[1e-3, 1e-4] {
            let (r1, r2) = cr_residual(u, v, Hyp::from_standard(0.3, 0.7), h).unwrap();
            assert!((r1 - 2.0).abs() < 1e-9, "h={}: r1={}", h, r1);
            assert!(r2 < 1e-9);
        }
    }

    #[test]
    fn cr_residual_vanishes_for_separable_lifts() {
        let f = SeparableFn::parse("x^2", "x^3").unwrap();
        let xi = Hyp::from_standard(0.4, 0.1);
        let (a1, a2) = cr_residual_separable(&f, xi, 1e-3).unwrap();
        let (b1, b2) = cr_residual_separable(&f, xi, 1e-4).unwrap();
        assert!(a1 < 1e-4 && a2 < 1e-4, "coarse residuals ({}, {})", a1, a2);
        assert!(b1 < 1e-6 && b2 < 1e-6, "fine residuals ({}, {})", b1, b2);
    }
}

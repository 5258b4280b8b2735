//! The t-normed integral `max { ν(f_t) * t : t in [0,1] }` of a function
//! against a capacity, where `f_t` is the upper level set and `*` a t-norm.

use std::fmt;
use std::sync::Arc;

use crate::capacity::{upper_level_set, Capacity, FnVec};
use crate::error::{Error, Result};
use crate::tnorm::TNorm;

/// A function-vector functional, possibly defined only on part of the
/// function space.
///
/// The evaluator returns `None` outside the functional's domain; totality is
/// recorded so checkers can tell "domain-restricted" from "defined
/// everywhere" without probing. Evaluators must return unit values on their
/// domain.
type Evaluator = Arc<dyn Fn(&FnVec) -> Option<f64> + Send + Sync>;

#[derive(Clone)]
pub struct Functional {
    n: usize,
    label: String,
    total: bool,
    evaluator: Evaluator,
}

impl Functional {
    /// A functional defined on every function vector of the right dimension.
    pub fn total(
        n: usize,
        label: impl Into<String>,
        f: impl Fn(&FnVec) -> f64 + Send + Sync + 'static,
    ) -> Functional {
        Functional {
            n,
            label: label.into(),
            total: true,
            evaluator: Arc::new(move |v| Some(f(v))),
        }
    }

    /// A functional with a restricted domain: the evaluator signals
    /// out-of-domain inputs by returning `None`.
    pub fn partial(
        n: usize,
        label: impl Into<String>,
        f: impl Fn(&FnVec) -> Option<f64> + Send + Sync + 'static,
    ) -> Functional {
        Functional {
            n,
            label: label.into(),
            total: false,
            evaluator: Arc::new(f),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_total(&self) -> bool {
        self.total
    }

    /// Evaluates, erroring when the input has the wrong dimension or falls
    /// outside the domain.
    pub fn eval(&self, f: &FnVec) -> Result<f64> {
        self.eval_opt(f)?.ok_or(Error::OutsideDomain)
    }

    /// Evaluates, returning `None` for out-of-domain inputs.
    pub fn eval_opt(&self, f: &FnVec) -> Result<Option<f64>> {
        if f.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: f.n(),
            });
        }
        Ok((self.evaluator)(f))
    }

    /// Domain membership (always true for total functionals).
    pub fn in_domain(&self, f: &FnVec) -> bool {
        self.total || matches!(self.eval_opt(f), Ok(Some(_)))
    }
}

impl fmt::Debug for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Functional")
            .field("n", &self.n)
            .field("label", &self.label)
            .field("total", &self.total)
            .finish()
    }
}

/// Exact t-normed integral.
///
/// `t ↦ ν(f_t)` is a step function that only changes at values of `f`, and
/// a t-norm is monotone in each argument, so the supremum over `t ∈ [0,1]`
/// is attained at one of the finitely many distinct values of `f`. Only
/// those candidates are evaluated.
pub fn tnormed_integral(nu: &Capacity, f: &FnVec, op: &TNorm) -> Result<f64> {
    if nu.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: nu.n(),
            got: f.n(),
        });
    }
    let mut candidates: Vec<f64> = f.values().to_vec();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    let mut best: f64 = 0.0;
    for t in candidates {
        let level = nu.value(upper_level_set(f, t));
        best = best.max(op.eval(level, t));
    }
    Ok(best)
}

/// Dense-grid oracle for the integral: evaluates `ν(f_t) * t` on the grid
/// `{0, step, 2·step, …, 1}` and takes the maximum.
///
/// For the built-in t-norms (1-Lipschitz in each argument) this brackets
/// the exact value: `oracle <= exact <= oracle + step`.
pub fn tnormed_integral_grid(nu: &Capacity, f: &FnVec, op: &TNorm, step: f64) -> Result<f64> {
    if !(step > 0.0 && step <= 0.1) {
        return Err(Error::Precondition(format!(
            "oracle step must be in (0, 0.1], got {step}"
        )));
    }
    if nu.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: nu.n(),
            got: f.n(),
        });
    }
    let mut best: f64 = 0.0;
    let mut k = 0u64;
    loop {
        let t = (k as f64 * step).min(1.0);
        let level = nu.value(upper_level_set(f, t));
        best = best.max(op.eval(level, t));
        if t >= 1.0 {
            break;
        }
        k += 1;
    }
    Ok(best)
}

/// Wraps `f ↦ ∫ f dν` as a total [`Functional`].
///
/// The capacity is validated first so broken inputs surface here rather
/// than as nonsense integrals.
pub fn integral_functional(nu: &Capacity, op: &TNorm) -> Result<Functional> {
    let report = nu.validate(crate::DEFAULT_TOL);
    if !report.all_passed() {
        let first = report.failures().next().expect("non-passing check exists");
        return Err(Error::InvalidCapacity(first.to_string()));
    }
    let label = format!("{} integral of {}", op.name(), nu.summary());
    let nu = nu.clone();
    let op = op.clone();
    Ok(Functional::total(nu.n(), label, move |f| {
        tnormed_integral(&nu, f, &op).expect("dimension checked by Functional::eval")
    }))
}

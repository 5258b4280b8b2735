//! T-norms: associative, commutative, monotone binary operations on the
//! unit interval with unit element 1.

use std::fmt;
use std::sync::Arc;

use crate::capacity::unit_grid;
use crate::error::{check_unit, Error, Result};
use crate::report::{Check, CheckReport, Witness};

pub type CustomOp = dyn Fn(f64, f64) -> f64 + Send + Sync;

/// A binary operation on `[0,1]` intended to be a continuous t-norm.
///
/// The three built-ins are genuine continuous t-norms. A `Custom` evaluator
/// is never trusted: run [`check_tnorm_axioms`] over it before relying on
/// t-norm identities downstream, and keep its outputs inside `[0,1]`.
#[derive(Clone)]
pub enum TNorm {
    /// `a ∧ b` — the largest t-norm.
    Minimum,
    /// `a · b`.
    Product,
    /// `max(0, a + b - 1)`.
    Lukasiewicz,
    Custom(Arc<CustomOp>),
}

impl TNorm {
    pub fn custom(f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> TNorm {
        TNorm::Custom(Arc::new(f))
    }

    pub fn builtins() -> [TNorm; 3] {
        [TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz]
    }

    pub fn name(&self) -> &'static str {
        match self {
            TNorm::Minimum => "minimum",
            TNorm::Product => "product",
            TNorm::Lukasiewicz => "lukasiewicz",
            TNorm::Custom(_) => "custom",
        }
    }

    /// Evaluates the operation after checking both arguments are in `[0,1]`.
    pub fn apply(&self, a: f64, b: f64) -> Result<f64> {
        check_unit("t-norm argument", a)?;
        check_unit("t-norm argument", b)?;
        Ok(self.eval(a, b))
    }

    /// Unchecked evaluation for hot loops whose inputs are known unit values.
    pub(crate) fn eval(&self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Minimum => a.min(b),
            TNorm::Product => a * b,
            TNorm::Lukasiewicz => (a + b - 1.0).max(0.0),
            TNorm::Custom(f) => f(a, b),
        }
    }
}

impl fmt::Debug for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for TNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks the t-norm axioms on the grid `{0, 1/denom, …, 1}`.
///
/// Unit, commutativity and distributivity over pointwise maxima are checked
/// exhaustively on the grid (pairs/triples), associativity on all grid
/// triples, and monotonicity on all grid-adjacent steps (which implies it
/// for every comparable grid pair). Continuity cannot be decided from
/// finitely many samples, so the last entry reports the sampled modulus —
/// the largest jump across grid-adjacent arguments — and fails only when
/// that jump is far larger than the step could explain.
pub fn check_tnorm_axioms(op: &TNorm, denom: u32, tol: f64) -> Result<CheckReport> {
    if denom < 10 {
        return Err(Error::GridTooCoarse { denom, min: 10 });
    }
    let grid = unit_grid(denom);
    let step = 1.0 / f64::from(denom);
    let mut report = CheckReport::new();

    // unit: 1 * s = s = s * 1
    let mut unit = None;
    for &s in &grid {
        let left = op.eval(1.0, s);
        let right = op.eval(s, 1.0);
        if (left - s).abs() > tol {
            unit = Some(Witness::new(vec![("a".into(), s.to_string())], left, s));
            break;
        }
        if (right - s).abs() > tol {
            unit = Some(Witness::new(vec![("a".into(), s.to_string())], right, s));
            break;
        }
    }
    report.push(match unit {
        Some(w) => Check::fail("unit", grid.len(), w),
        None => Check::pass("unit", grid.len()),
    });

    // commutativity on all grid pairs
    let mut comm = None;
    let mut comm_samples = 0usize;
    'comm: for (i, &a) in grid.iter().enumerate() {
        for &b in &grid[i..] {
            comm_samples += 1;
            let ab = op.eval(a, b);
            let ba = op.eval(b, a);
            if (ab - ba).abs() > tol {
                comm = Some(Witness::new(
                    vec![("a".into(), a.to_string()), ("b".into(), b.to_string())],
                    ab,
                    ba,
                ));
                break 'comm;
            }
        }
    }
    report.push(match comm {
        Some(w) => Check::fail("commutativity", comm_samples, w),
        None => Check::pass("commutativity", comm_samples),
    });

    // associativity on all grid triples
    let mut assoc = None;
    let mut assoc_samples = 0usize;
    'assoc: for &a in &grid {
        for &b in &grid {
            for &c in &grid {
                assoc_samples += 1;
                let left = op.eval(op.eval(a, b), c);
                let right = op.eval(a, op.eval(b, c));
                if (left - right).abs() > tol {
                    assoc = Some(Witness::new(
                        vec![
                            ("a".into(), a.to_string()),
                            ("b".into(), b.to_string()),
                            ("c".into(), c.to_string()),
                        ],
                        left,
                        right,
                    ));
                    break 'assoc;
                }
            }
        }
    }
    report.push(match assoc {
        Some(w) => Check::fail("associativity", assoc_samples, w),
        None => Check::pass("associativity", assoc_samples),
    });

    // monotonicity on grid-adjacent steps
    let mut mono = None;
    let mut mono_samples = 0usize;
    'mono: for i in 0..grid.len() {
        for j in 0..grid.len() {
            let here = op.eval(grid[i], grid[j]);
            if i + 1 < grid.len() {
                mono_samples += 1;
                let up = op.eval(grid[i + 1], grid[j]);
                if up + tol < here {
                    mono = Some(Witness::new(
                        vec![
                            ("a".into(), grid[i].to_string()),
                            ("a'".into(), grid[i + 1].to_string()),
                            ("b".into(), grid[j].to_string()),
                        ],
                        up,
                        here,
                    ));
                    break 'mono;
                }
            }
            if j + 1 < grid.len() {
                mono_samples += 1;
                let up = op.eval(grid[i], grid[j + 1]);
                if up + tol < here {
                    mono = Some(Witness::new(
                        vec![
                            ("a".into(), grid[i].to_string()),
                            ("b".into(), grid[j].to_string()),
                            ("b'".into(), grid[j + 1].to_string()),
                        ],
                        up,
                        here,
                    ));
                    break 'mono;
                }
            }
        }
    }
    report.push(match mono {
        Some(w) => Check::fail("monotonicity", mono_samples, w),
        None => Check::pass("monotonicity", mono_samples),
    });

    // (t ∨ s) * l = (t * l) ∨ (s * l) on all grid triples; for monotone
    // operations this is an identity, so failures flag non-monotone ops.
    let mut distr = None;
    let mut distr_samples = 0usize;
    'distr: for &t in &grid {
        for &s in &grid {
            for &l in &grid {
                distr_samples += 1;
                let left = op.eval(t.max(s), l);
                let right = op.eval(t, l).max(op.eval(s, l));
                if (left - right).abs() > tol {
                    distr = Some(Witness::new(
                        vec![
                            ("t".into(), t.to_string()),
                            ("s".into(), s.to_string()),
                            ("l".into(), l.to_string()),
                        ],
                        left,
                        right,
                    ));
                    break 'distr;
                }
            }
        }
    }
    report.push(match distr {
        Some(w) => Check::fail("distributivity_over_max", distr_samples, w),
        None => Check::pass("distributivity_over_max", distr_samples),
    });

    // sampled continuity modulus over grid-adjacent argument pairs
    let mut modulus: f64 = 0.0;
    let mut worst = (0.0, 0.0, 0.0, 0.0);
    for i in 0..grid.len() {
        for j in 0..grid.len() {
            let here = op.eval(grid[i], grid[j]);
            if i + 1 < grid.len() {
                let jump = (op.eval(grid[i + 1], grid[j]) - here).abs();
                if jump > modulus {
                    modulus = jump;
                    worst = (grid[i], grid[j], grid[i + 1], grid[j]);
                }
            }
            if j + 1 < grid.len() {
                let jump = (op.eval(grid[i], grid[j + 1]) - here).abs();
                if jump > modulus {
                    modulus = jump;
                    worst = (grid[i], grid[j], grid[i], grid[j + 1]);
                }
            }
        }
    }
    // A continuous (indeed Lipschitz) operation moves by O(step) across one
    // grid step; 3x leaves slack for built-ins while catching genuine jumps.
    let continuity = if modulus <= 3.0 * step + tol {
        Check::pass("continuity_modulus", mono_samples)
    } else {
        Check::fail(
            "continuity_modulus",
            mono_samples,
            Witness::new(
                vec![
                    ("from".into(), format!("({}, {})", worst.0, worst.1)),
                    ("to".into(), format!("({}, {})", worst.2, worst.3)),
                ],
                modulus,
                3.0 * step,
            ),
        )
    }
    .with_detail(format!("sampled modulus {modulus} at step {step}"));
    report.push(continuity);

    Ok(report)
}

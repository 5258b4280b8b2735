//! Capacity reconstruction from functionals, and round-trip verification
//! that the axiom systems pin down exactly the t-normed integrals on a
//! finite point space.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::capacity::{characteristic, unit_grid, Capacity, FnVec, Subset};
use crate::error::{Error, Result};
use crate::functional::{check_axioms, AxiomKind, CheckConfig};
use crate::integral::{integral_functional, Functional};
use crate::report::{Check, CheckReport, Witness};
use crate::tnorm::TNorm;

/// True iff `f` equals 1 on every point of `a` (vacuously true for the
/// empty set). Among all such functions, the characteristic function of
/// `a` is the pointwise smallest.
pub fn in_upsilon(f: &FnVec, a: Subset) -> Result<bool> {
    if !a.is_subset_of(Subset::full(f.n())) {
        return Err(Error::IndexOutOfRange {
            index: a.bits() as usize,
            n: f.n(),
        });
    }
    Ok(a.indices().iter().all(|&i| f.get(i) >= 1.0))
}

/// A capacity read off a functional, together with its validation report.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub capacity: Capacity,
    pub report: CheckReport,
}

/// Reads a capacity off a functional by evaluating it on characteristic
/// functions: the infimum of `I` over the functions that are 1 on `A` is
/// attained at the pointwise-minimal such function `χ_A`, so
/// `ν(A) := I(χ_A)` for nonempty `A`. The empty set gets 0 by definition —
/// `I(0_X)` need not vanish for an arbitrary functional.
///
/// Nothing about the result is assumed: the accompanying report says
/// whether the table is actually a capacity.
pub fn reconstruct_capacity(i: &Functional) -> Result<Reconstruction> {
    let n = i.n();
    let mut values = vec![0.0; 1usize << n];
    for s in Subset::all(n) {
        if s.is_empty() {
            continue;
        }
        values[s.index()] = i.eval(&characteristic(s, n)?)?;
    }
    let capacity = Capacity::new(n, values)?;
    let report = capacity.validate(crate::DEFAULT_TOL);
    Ok(Reconstruction { capacity, report })
}

fn reconstruction_checks(
    i: &Functional,
    nu: &Capacity,
    op: &TNorm,
    cfg: &CheckConfig,
) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let recon = reconstruct_capacity(i)?;

    let mut mismatch = None;
    for s in Subset::all(nu.n()) {
        let got = recon.capacity.value(s);
        let want = nu.value(s);
        if (got - want).abs() > cfg.tolerance {
            mismatch = Some(Witness::new(vec![("subset".into(), s.to_string())], got, want));
            break;
        }
    }
    checks.push(match mismatch {
        Some(w) => Check::fail("reconstruction", 1usize << nu.n(), w),
        None => Check::pass("reconstruction", 1usize << nu.n()),
    });

    // Re-integrate against the reconstructed table and compare on sampled
    // functions; a validation failure of the reconstruction surfaces here.
    match integral_functional(&recon.capacity, op) {
        Err(e) => checks.push(
            Check::inconclusive("reintegration").with_detail(format!(
                "reconstructed table is not a capacity: {e}"
            )),
        ),
        Ok(i2) => {
            let grid = unit_grid(cfg.grid_denom.max(1));
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7265_696e_7465_6772);
            let mut witness = None;
            for _ in 0..cfg.samples {
                let f = FnVec::new(
                    (0..nu.n()).map(|_| grid[rng.gen_range(0..grid.len())]).collect(),
                )?;
                let a = i.eval(&f)?;
                let b = i2.eval(&f)?;
                if (a - b).abs() > cfg.tolerance {
                    witness = Some(Witness::new(vec![("f".into(), f.to_string())], a, b));
                    break;
                }
            }
            checks.push(match witness {
                Some(w) => Check::fail("reintegration", cfg.samples, w),
                None => Check::pass("reintegration", cfg.samples),
            });
        }
    }
    Ok(checks)
}

/// Round-trips a capacity through its t-normed integral: the integral
/// functional must satisfy the three defining axioms (normed, comonotone
/// maxitive, homogeneous over the t-norm), reading the capacity back off
/// the functional must reproduce it on every subset, and re-integrating
/// against the read-back table must agree on sampled functions.
///
/// Distinct capacities differ on some subset, so the reconstruction
/// equality is also the uniqueness half of the round trip.
pub fn verify_characterization(
    nu: &Capacity,
    op: &TNorm,
    cfg: &CheckConfig,
) -> Result<CheckReport> {
    let i = integral_functional(nu, op)?;
    let axioms = [
        AxiomKind::Normed,
        AxiomKind::ComonotoneMaxitive,
        AxiomKind::StarHomogeneous(op.clone()),
    ];
    let mut report = check_axioms(&i, &axioms, cfg);
    for check in reconstruction_checks(&i, nu, op, cfg)? {
        report.push(check);
    }
    Ok(report)
}

/// Same round trip for the minimum t-norm, but probing only the two
/// homogeneity axioms (`I(c ∨ f) = c ∨ I(f)` and `I(c ∧ f) = c ∧ I(f)`):
/// for the minimum t-norm this weaker pair suffices. Normedness is implied
/// (`1 ∨ I(1_X) = I(1_X)` forces `I(1_X) = 1`) and is checked as a
/// corroboration.
pub fn verify_sugeno_simplification(nu: &Capacity, cfg: &CheckConfig) -> Result<CheckReport> {
    let op = TNorm::Minimum;
    let i = integral_functional(nu, &op)?;
    let axioms = [
        AxiomKind::VeeHomogeneous,
        AxiomKind::WedgeHomogeneous,
        AxiomKind::Normed,
    ];
    let mut report = check_axioms(&i, &axioms, cfg);
    for check in reconstruction_checks(&i, nu, &op, cfg)? {
        report.push(check);
    }
    Ok(report)
}

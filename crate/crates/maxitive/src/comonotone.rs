//! Comonotone pairs of functions and the constructive gadgets built on
//! them: monotone chains between comparable functions, level raises, and
//! squeeze witnesses pinning a function between two others.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::capacity::FnVec;
use crate::error::{check_unit, Error, Result};

/// Two functions are comonotone when no pair of points orders them in
/// opposite directions: `(f(x) - f(y)) * (g(x) - g(y)) >= 0` for all x, y.
pub fn is_comonotone(f: &FnVec, g: &FnVec) -> Result<bool> {
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: g.n(),
        });
    }
    let n = f.n();
    for x in 0..n {
        for y in x + 1..n {
            if (f.get(x) - f.get(y)) * (g.get(x) - g.get(y)) < 0.0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Draws a random comonotone pair: one shared random permutation of the
/// points, and two independent value sequences sorted nondecreasing along
/// it. Deterministic for a fixed seed.
pub fn random_comonotone_pair(n: usize, value_grid: &[f64], seed: u64) -> Result<(FnVec, FnVec)> {
    if n == 0 {
        return Err(Error::PointCountOutOfRange {
            n,
            max: crate::capacity::MAX_POINTS,
        });
    }
    if value_grid.is_empty() {
        return Err(Error::InvalidGrid("grid is empty".into()));
    }
    for &g in value_grid {
        check_unit("grid value", g)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let draw_sorted = |rng: &mut ChaCha8Rng| {
        let mut vals: Vec<f64> = (0..n)
            .map(|_| value_grid[rng.gen_range(0..value_grid.len())])
            .collect();
        vals.sort_by(f64::total_cmp);
        vals
    };
    let fs = draw_sorted(&mut rng);
    let gs = draw_sorted(&mut rng);
    let mut f = vec![0.0; n];
    let mut g = vec![0.0; n];
    for (rank, &point) in perm.iter().enumerate() {
        f[point] = fs[rank];
        g[point] = gs[rank];
    }
    Ok((FnVec::new(f)?, FnVec::new(g)?))
}

/// Given `psi <= phi`, builds the interpolating list `psi_1, …, psi_{n-1}`
/// with `psi <= psi_1 <= … <= psi_{n-1} <= phi` in which every consecutive
/// pair (including `psi` with `psi_1` and `psi_{n-1}` with `phi`) is
/// comonotone.
///
/// Working in coordinates sorted so that `phi` is nondecreasing (stable on
/// ties), `psi_1 = psi ∨ psi(x_1)` and each later step raises the tail:
/// `psi_{i+1}(x_j) = psi_i(x_j)` for `j <= i`, and
/// `psi_i(x_{i+1}) ∨ psi_i(x_j)` for `j > i`. For `n = 1` the list is empty.
pub fn monotone_chain(psi: &FnVec, phi: &FnVec) -> Result<Vec<FnVec>> {
    if !psi.le(phi)? {
        return Err(Error::Precondition(
            "monotone_chain requires psi <= phi pointwise".into(),
        ));
    }
    let n = psi.n();
    if n == 1 {
        return Ok(Vec::new());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| phi.get(a).total_cmp(&phi.get(b)).then(a.cmp(&b)));

    let sorted_psi: Vec<f64> = order.iter().map(|&p| psi.get(p)).collect();
    let mut chain = Vec::with_capacity(n - 1);
    let mut current: Vec<f64> = sorted_psi
        .iter()
        .map(|&v| v.max(sorted_psi[0]))
        .collect();
    let unsort = |sorted: &[f64]| {
        let mut vals = vec![0.0; n];
        for (rank, &p) in order.iter().enumerate() {
            vals[p] = sorted[rank];
        }
        FnVec::new(vals)
    };
    chain.push(unsort(&current)?);
    for i in 1..n - 1 {
        let pivot = current[i];
        for v in current.iter_mut().skip(i) {
            *v = v.max(pivot);
        }
        chain.push(unsort(&current)?);
    }
    Ok(chain)
}

/// Raises `phi` above the `xi` level to 1 while keeping it untouched at or
/// below `delta`, comonotonically: values in the band `[delta, xi]` are
/// multiplied by the affine factor `kappa` with `kappa(delta) = 1` and
/// `kappa(xi) = 1/xi`.
///
/// Requires `0 <= delta < xi < 1`.
pub fn level_raise(phi: &FnVec, delta: f64, xi: f64) -> Result<FnVec> {
    check_unit("delta", delta)?;
    check_unit("xi", xi)?;
    if !(delta < xi && xi < 1.0) {
        return Err(Error::Precondition(format!(
            "level_raise requires 0 <= delta < xi < 1, got delta={delta}, xi={xi}"
        )));
    }
    let kappa = |t: f64| 1.0 + (t - delta) * ((1.0 / xi - 1.0) / (xi - delta));
    Ok(phi.map(|t| {
        if t <= delta {
            t
        } else if t >= xi {
            1.0
        } else {
            kappa(t) * t
        }
    }))
}

/// Builds a function forced between two values by lattice identities alone.
///
/// Given `psi <= phi` and thresholds `c < d`, returns `xi` with
/// `xi ∧ c_X = phi ∧ c_X` and `xi ∨ d_X = psi ∨ d_X` — exact equalities,
/// since every output value is copied from an input or clamped between the
/// thresholds: `xi = phi` where `phi <= c`, `xi = psi` where `psi >= d`,
/// and `median(c, psi ∨ (phi ∧ d), d)` elsewhere.
pub fn squeeze_witness(phi: &FnVec, psi: &FnVec, c: f64, d: f64) -> Result<FnVec> {
    check_unit("c", c)?;
    check_unit("d", d)?;
    if !psi.le(phi)? {
        return Err(Error::Precondition(
            "squeeze_witness requires psi <= phi pointwise".into(),
        ));
    }
    if c >= d {
        return Err(Error::Precondition(format!(
            "squeeze_witness requires c < d, got c={c}, d={d}"
        )));
    }
    psi.zip(phi, |p, f| {
        if f <= c {
            f
        } else if p >= d {
            p
        } else {
            p.max(f.min(d)).clamp(c, d)
        }
    })
}

//! Finitely generated subspaces closed under pointwise join with constants
//! and scaling by constants, functionals defined on them through generator
//! values, exhaustive well-definedness / axiom sweeps, the canonical
//! three-point functional that is monotone and homogeneous yet not
//! comonotone maxitive, and a one-step extension of such a functional to
//! one more generator.

use serde::{Deserialize, Serialize};

use crate::capacity::{unit_grid, FnVec, MAX_POINTS};
use crate::error::{check_unit, Error, Result};
use crate::integral::Functional;
use crate::report::{approx_fraction, Check, CheckReport, Verdict, Witness};

/// Search grid used when resolving arbitrary function vectors to subspace
/// elements (the exact algebraic candidates are tried first; this is the
/// fallback density).
const RESOLVE_DENOM: u32 = 600;

/// A subspace of `[0,1]`-valued functions on `n` points generated by `k`
/// functions: its elements are exactly the vectors `d ∨ (c·g_i)` for unit
/// values `d, c` and generators `g_i` (constants arise as `c = 0`). Each
/// generator carries an assigned value `m_i`, which induces the functional
/// `d ∨ (c·g_i) ↦ d ∨ (c·m_i)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "GenSubspaceWire", into = "GenSubspaceWire")]
pub struct GenSubspace {
    n: usize,
    generators: Vec<FnVec>,
    assigned: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct GenSubspaceWire {
    n: usize,
    generators: Vec<Vec<f64>>,
    m: Vec<f64>,
}

impl From<GenSubspace> for GenSubspaceWire {
    fn from(s: GenSubspace) -> Self {
        GenSubspaceWire {
            n: s.n,
            generators: s.generators.iter().map(|g| g.values().to_vec()).collect(),
            m: s.assigned,
        }
    }
}

impl TryFrom<GenSubspaceWire> for GenSubspace {
    type Error = Error;

    fn try_from(w: GenSubspaceWire) -> Result<GenSubspace> {
        let generators = w
            .generators
            .into_iter()
            .map(FnVec::new)
            .collect::<Result<Vec<_>>>()?;
        GenSubspace::new(w.n, generators, w.m)
    }
}

impl GenSubspace {
    pub fn new(n: usize, generators: Vec<FnVec>, assigned: Vec<f64>) -> Result<GenSubspace> {
        if n == 0 || n > MAX_POINTS {
            return Err(Error::PointCountOutOfRange { n, max: MAX_POINTS });
        }
        for g in &generators {
            if g.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: g.n(),
                });
            }
        }
        if assigned.len() != generators.len() {
            return Err(Error::WrongValueCount {
                expected: generators.len(),
                got: assigned.len(),
            });
        }
        for &m in &assigned {
            check_unit("assigned value", m)?;
        }
        Ok(GenSubspace {
            n,
            generators,
            assigned,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[FnVec] {
        &self.generators
    }

    pub fn assigned(&self) -> &[f64] {
        &self.assigned
    }
}

/// One element of a generated subspace: the function `floor ∨ (scale·g)`,
/// where `g` is the generator at index `generator`. With `scale = 0` the
/// element is the constant `floor` and the generator index is irrelevant.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SubspaceElement {
    pub floor: f64,
    pub scale: f64,
    pub generator: usize,
}

impl SubspaceElement {
    pub fn new(floor: f64, scale: f64, generator: usize) -> SubspaceElement {
        SubspaceElement {
            floor,
            scale,
            generator,
        }
    }

    pub fn constant(floor: f64) -> SubspaceElement {
        SubspaceElement::new(floor, 0.0, 0)
    }
}

impl std::fmt::Display for SubspaceElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.scale == 0.0 {
            write!(f, "(d={})", self.floor)
        } else {
            write!(f, "(d={}, c={}, g={})", self.floor, self.scale, self.generator)
        }
    }
}

fn validate_element(s: &GenSubspace, e: &SubspaceElement) -> Result<()> {
    check_unit("element floor", e.floor)?;
    check_unit("element scale", e.scale)?;
    if e.scale > 0.0 && e.generator >= s.generator_count() {
        return Err(Error::GeneratorIndex {
            index: e.generator,
            count: s.generator_count(),
        });
    }
    Ok(())
}

/// The function vector an element realizes: pointwise `floor ∨ (scale·g)`.
pub fn element_to_fnvec(s: &GenSubspace, e: &SubspaceElement) -> Result<FnVec> {
    validate_element(s, e)?;
    if e.scale == 0.0 {
        return FnVec::constant(s.n, e.floor);
    }
    Ok(s.generators[e.generator].map(|v| e.floor.max(e.scale * v)))
}

/// The generator-induced functional evaluated at an element:
/// `floor ∨ (scale·m_i)`.
pub fn eval_subspace_functional(s: &GenSubspace, e: &SubspaceElement) -> Result<f64> {
    validate_element(s, e)?;
    if e.scale == 0.0 {
        return Ok(e.floor);
    }
    Ok(e.floor.max(e.scale * s.assigned[e.generator]))
}

/// Finds an element realizing `f` within `tol`, if one exists.
///
/// The floor/scale structure is solved exactly first: a constant `f` is a
/// floor, and a scale that is active anywhere must be one of the ratios
/// `f(x)/g_i(x)`. Off-structure matches (where `f` only approximates an
/// element) are caught by a scale sweep of step `1/denom`. For each scale
/// candidate the floor is pinned by the points the scaled generator leaves
/// uncovered, then the reassembled element is verified pointwise.
pub fn resolve(
    s: &GenSubspace,
    f: &FnVec,
    denom: u32,
    tol: f64,
) -> Result<Option<SubspaceElement>> {
    if f.n() != s.n {
        return Err(Error::DimensionMismatch {
            expected: s.n,
            got: f.n(),
        });
    }
    if denom == 0 {
        return Err(Error::InvalidGrid("resolution grid needs denom >= 1".into()));
    }
    let top = f.max_value();
    if f.values().iter().all(|&v| (v - top).abs() <= tol) {
        return Ok(Some(SubspaceElement::constant(top)));
    }
    for (i, g) in s.generators.iter().enumerate() {
        let mut candidates: Vec<f64> = f
            .values()
            .iter()
            .zip(g.values())
            .filter(|&(_, &gv)| gv > tol)
            .map(|(&fv, &gv)| fv / gv)
            .filter(|&c| (0.0..=1.0 + 1e-12).contains(&c))
            .map(|c| c.min(1.0))
            .collect();
        candidates.push(1.0);
        candidates.extend((1..=denom).map(|j| f64::from(j) / f64::from(denom)));
        for c in candidates {
            let floor = f
                .values()
                .iter()
                .zip(g.values())
                .filter(|&(&fv, &gv)| fv > c * gv + tol)
                .map(|(&fv, _)| fv)
                .fold(0.0, f64::max);
            let fits = f
                .values()
                .iter()
                .zip(g.values())
                .all(|(&fv, &gv)| (floor.max(c * gv) - fv).abs() <= tol);
            if fits {
                return Ok(Some(SubspaceElement::new(floor, c, i)));
            }
        }
    }
    Ok(None)
}

/// Wraps a generated subspace as a partial-domain functional: the domain
/// is "resolvable to an element", the value is the element's.
pub fn subspace_functional(s: &GenSubspace) -> Functional {
    let label = format!("subspace functional ({} generators)", s.generator_count());
    let owned = s.clone();
    Functional::partial(s.n, label, move |f| {
        resolve(&owned, f, RESOLVE_DENOM, crate::DEFAULT_TOL)
            .expect("dimension already checked")
            .map(|e| eval_subspace_functional(&owned, &e).expect("resolved element is valid"))
    })
}

/// All grid elements of `s` with their realized vectors and values.
fn grid_elements(s: &GenSubspace, denom: u32) -> Result<Vec<(SubspaceElement, FnVec, f64)>> {
    if denom == 0 {
        return Err(Error::InvalidGrid("element grid needs denom >= 1".into()));
    }
    let grid = unit_grid(denom);
    let mut out = Vec::new();
    if s.generator_count() == 0 {
        for &d in &grid {
            let e = SubspaceElement::constant(d);
            out.push((e, element_to_fnvec(s, &e)?, d));
        }
        return Ok(out);
    }
    for i in 0..s.generator_count() {
        for &d in &grid {
            for &c in &grid {
                let e = SubspaceElement::new(d, c, i);
                let v = element_to_fnvec(s, &e)?;
                let value = eval_subspace_functional(s, &e)?;
                out.push((e, v, value));
            }
        }
    }
    Ok(out)
}

/// Exhaustively checks that the generator-induced functional is a function
/// of the realized vector alone: whenever two grid elements realize the
/// same vector (pointwise within 1e-9), their values must agree within
/// 1e-9.
pub fn well_definedness_check(s: &GenSubspace, denom: u32) -> Result<Check> {
    let tol = crate::DEFAULT_TOL;
    let mut elements = grid_elements(s, denom)?;
    // Vectors equal within tol have coordinate sums within n*tol, so only
    // a sorted sliding window needs pairwise comparison.
    elements.sort_by(|a, b| {
        let sa: f64 = a.1.values().iter().sum();
        let sb: f64 = b.1.values().iter().sum();
        sa.total_cmp(&sb)
    });
    let sums: Vec<f64> = elements
        .iter()
        .map(|(_, v, _)| v.values().iter().sum())
        .collect();
    let window = s.n as f64 * tol * 1.001;
    let total = elements.len();
    for a in 0..total {
        for b in a + 1..total {
            if sums[b] - sums[a] > window {
                break;
            }
            let (ea, va, xa) = &elements[a];
            let (eb, vb, xb) = &elements[b];
            let same = va
                .values()
                .iter()
                .zip(vb.values())
                .all(|(p, q)| (p - q).abs() <= tol);
            if same && (xa - xb).abs() > tol {
                return Ok(Check::fail(
                    "well_defined",
                    total,
                    Witness::new(
                        vec![
                            ("element_a".into(), ea.to_string()),
                            ("element_b".into(), eb.to_string()),
                            ("f".into(), va.to_string()),
                        ],
                        *xa,
                        *xb,
                    ),
                ));
            }
        }
    }
    Ok(Check::pass("well_defined", total))
}

/// Exhaustively checks monotonicity of the generator-induced functional
/// over the element grid: comparable realized vectors must have comparable
/// values, within `tol`.
pub fn monotonicity_sweep(s: &GenSubspace, denom: u32, tol: f64) -> Result<Check> {
    let elements = grid_elements(s, denom)?;
    // Collapse exact duplicates; sort by coordinate sum so f <= g can only
    // pair a lower sum with a higher one.
    let mut items: Vec<(Vec<f64>, f64)> = elements
        .into_iter()
        .map(|(_, v, x)| (v.values().to_vec(), x))
        .collect();
    items.sort_by(|a, b| a.partial_cmp(b).expect("unit values are ordered"));
    items.dedup();
    items.sort_by(|a, b| {
        let sa: f64 = a.0.iter().sum();
        let sb: f64 = b.0.iter().sum();
        sa.total_cmp(&sb)
    });
    let mut compared = 0usize;
    for a in 0..items.len() {
        for b in a + 1..items.len() {
            let dominated = items[a]
                .0
                .iter()
                .zip(&items[b].0)
                .all(|(p, q)| *p <= *q + 1e-12);
            if !dominated {
                continue;
            }
            compared += 1;
            if items[a].1 > items[b].1 + tol {
                let fa = FnVec::new(items[a].0.clone())?;
                let fb = FnVec::new(items[b].0.clone())?;
                return Ok(Check::fail(
                    "monotone",
                    compared,
                    Witness::new(
                        vec![("f".into(), fa.to_string()), ("g".into(), fb.to_string())],
                        items[a].1,
                        items[b].1,
                    ),
                ));
            }
        }
    }
    Ok(Check::pass("monotone", compared))
}

fn transform_sweep(
    s: &GenSubspace,
    denom: u32,
    name: &str,
    floors: &[f64],
    scales: &[f64],
) -> Result<Check> {
    let tol = crate::DEFAULT_TOL;
    let elements = grid_elements(s, denom)?;
    let mut count = 0usize;
    for (e, _, value) in &elements {
        for &d2 in floors {
            for &c2 in scales {
                // d2 ∨ (c2 · (d ∨ (c·g))) = (d2 ∨ (c2·d)) ∨ ((c2·c)·g)
                let te = SubspaceElement::new(d2.max(c2 * e.floor), c2 * e.scale, e.generator);
                let got = eval_subspace_functional(s, &te)?;
                let want = d2.max(c2 * value);
                count += 1;
                if (got - want).abs() > tol {
                    return Ok(Check::fail(
                        name,
                        count,
                        Witness::new(
                            vec![
                                ("element".into(), e.to_string()),
                                ("d'".into(), d2.to_string()),
                                ("c'".into(), c2.to_string()),
                            ],
                            got,
                            want,
                        ),
                    ));
                }
            }
        }
    }
    Ok(Check::pass(name, count))
}

/// Exhaustive check of `I(c_X ∨ f) = c ∨ I(f)` over the element grid,
/// using the element algebra for the joined function.
pub fn vee_homogeneity_sweep(s: &GenSubspace, denom: u32) -> Result<Check> {
    transform_sweep(s, denom, "vee_homogeneous", &unit_grid(denom), &[1.0])
}

/// Exhaustive check of `I(c_X · f) = c · I(f)` over the element grid.
pub fn star_homogeneity_sweep(s: &GenSubspace, denom: u32) -> Result<Check> {
    transform_sweep(
        s,
        denom,
        "star_homogeneous(product)",
        &[0.0],
        &unit_grid(denom),
    )
}

/// The three-generator subspace on three points whose induced functional
/// is monotone, join-homogeneous and scaling-homogeneous but not
/// comonotone maxitive. The third generator is the join of the first two,
/// and its assigned value 1/2 exceeds the join 1/3 of theirs.
pub fn counterexample_subspace() -> GenSubspace {
    let third = 1.0 / 3.0;
    let f1 = FnVec::new(vec![0.0, 0.5, 2.0 / 3.0]).expect("unit values");
    let f2 = FnVec::new(vec![third, third, 1.0]).expect("unit values");
    let f3 = f1.join(&f2).expect("same dimension");
    GenSubspace::new(3, vec![f1, f2, f3], vec![third, third, 0.5]).expect("valid subspace")
}

/// The counterexample subspace together with its induced partial-domain
/// functional.
pub fn counterexample_functional() -> (GenSubspace, Functional) {
    let s = counterexample_subspace();
    let i = subspace_functional(&s);
    (s, i)
}

/// Full verification of the counterexample functional: well-definedness,
/// the three axioms it satisfies (exhaustively over the element grid), and
/// the comonotone pair on which maxitivity breaks.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub report: CheckReport,
    pub mu_f1: f64,
    pub mu_f2: f64,
    pub mu_join: f64,
    /// True when everything passed except comonotone maxitivity, which
    /// failed with the values 1/3, 1/3, 1/2.
    pub expected: bool,
}

impl CounterexampleReport {
    pub fn human_line(&self) -> String {
        format!(
            "comonotone maxitivity FAILS: mu(f1 v f2)={}, mu(f1) v mu(f2)={}",
            approx_fraction(self.mu_join),
            approx_fraction(self.mu_f1.max(self.mu_f2)),
        )
    }
}

pub fn counterexample_report(denom: u32) -> Result<CounterexampleReport> {
    let tol = crate::DEFAULT_TOL;
    let (s, i) = counterexample_functional();
    let mut report = CheckReport::new();
    report.push(well_definedness_check(&s, denom)?);
    report.push(monotonicity_sweep(&s, denom, tol)?);
    report.push(vee_homogeneity_sweep(&s, denom)?);
    report.push(star_homogeneity_sweep(&s, denom)?);

    let f1 = &s.generators()[0];
    let f2 = &s.generators()[1];
    let comonotone = crate::comonotone::is_comonotone(f1, f2)?;
    report.push(if comonotone {
        Check::pass("inputs_comonotone", 1)
    } else {
        Check::fail(
            "inputs_comonotone",
            1,
            Witness::new(
                vec![("f1".into(), f1.to_string()), ("f2".into(), f2.to_string())],
                0.0,
                1.0,
            ),
        )
    });

    let mu_f1 = i.eval(f1)?;
    let mu_f2 = i.eval(f2)?;
    let mu_join = i.eval(&f1.join(f2)?)?;
    let maxitive = (mu_join - mu_f1.max(mu_f2)).abs() <= tol;
    let witness = Witness::new(
        vec![("f1".into(), f1.to_string()), ("f2".into(), f2.to_string())],
        mu_join,
        mu_f1.max(mu_f2),
    );
    report.push(if maxitive {
        Check::pass("comonotone_maxitive", 1)
    } else {
        Check::fail("comonotone_maxitive", 1, witness)
    });

    let expected = report
        .checks
        .iter()
        .all(|c| match c.name.as_str() {
            "comonotone_maxitive" => c.verdict == Verdict::Fail,
            _ => c.verdict == Verdict::Pass,
        })
        && (mu_f1 - 1.0 / 3.0).abs() <= tol
        && (mu_f2 - 1.0 / 3.0).abs() <= tol
        && (mu_join - 0.5).abs() <= tol;

    Ok(CounterexampleReport {
        report,
        mu_f1,
        mu_f2,
        mu_join,
        expected,
    })
}

fn grid_ceil(x: f64, denom: u32) -> Option<f64> {
    let idx = (x * f64::from(denom) - 1e-9).ceil();
    if idx > f64::from(denom) {
        return None;
    }
    Some(idx.max(0.0) / f64::from(denom))
}

/// Grid approximation of the least value any monotone homogeneous
/// extension can give a new function: the infimum of
/// `(d' ∨ (c'·m_i)) / c` over grid floors `d'`, scales `c'`, generators
/// `i` and `c ∈ (0,1]` such that `d' ∨ (c'·g_i) ≥ c·φ` pointwise, clamped
/// to `[0,1]`.
///
/// The result is an exact infimum over a finite candidate set, so it never
/// undershoots the infimum over the same candidates at a coarser grid, and
/// grids of denominator `d` and `2d` nest.
pub fn extension_value(s: &GenSubspace, phi: &FnVec, denom: u32) -> Result<f64> {
    if phi.n() != s.n {
        return Err(Error::DimensionMismatch {
            expected: s.n,
            got: phi.n(),
        });
    }
    if denom == 0 {
        return Err(Error::InvalidGrid("extension grid needs denom >= 1".into()));
    }
    let grid = unit_grid(denom);
    let mut best = f64::INFINITY;
    for &c in grid.iter().skip(1) {
        let target: Vec<f64> = phi.values().iter().map(|&v| c * v).collect();

        // constant dominators: the cheapest is the least grid value above
        // max(c·φ)
        let need = target.iter().fold(0.0, |acc: f64, &t| acc.max(t));
        if let Some(d) = grid_ceil(need, denom) {
            best = best.min(d / c);
        }

        // scaled-generator dominators: for each (i, c') the floor only has
        // to cover the points the scaled generator misses, and the
        // objective grows with the floor, so the least feasible grid floor
        // is the only one worth scoring
        for (g, &m) in s.generators.iter().zip(&s.assigned) {
            for &c2 in &grid {
                let mut need = 0.0f64;
                let mut feasible = true;
                for (&t, &gv) in target.iter().zip(g.values()) {
                    if t > c2 * gv + 1e-12 {
                        need = need.max(t);
                        if need > 1.0 + 1e-12 {
                            feasible = false;
                            break;
                        }
                    }
                }
                if !feasible {
                    continue;
                }
                if let Some(d) = grid_ceil(need, denom) {
                    best = best.min(d.max(c2 * m) / c);
                }
            }
        }
    }
    Ok(best.clamp(0.0, 1.0))
}

/// Result of [`extend_one_step`].
#[derive(Clone, Debug, Serialize)]
pub struct ExtendOutcome {
    pub subspace: GenSubspace,
    /// False when the function was already realizable and nothing changed.
    pub added: bool,
    /// The value assigned to the function: the refined-grid extension
    /// value, or the existing value when already realizable.
    pub value: f64,
    /// The extension value on the unrefined grid (equals `value` when the
    /// function was already realizable).
    pub coarse_value: f64,
}

/// Adjoins one function to a generated subspace. A function already
/// realizable as an element is returned unchanged with its existing value;
/// otherwise it becomes a new generator whose assigned value is the
/// extension value, computed at `denom` and re-computed at `2·denom` (the
/// refinement, being an infimum over a superset, can only be smaller or
/// equal; it is the one adopted).
pub fn extend_one_step(s: &GenSubspace, phi: &FnVec, denom: u32) -> Result<ExtendOutcome> {
    if let Some(e) = resolve(s, phi, RESOLVE_DENOM, crate::DEFAULT_TOL)? {
        let value = eval_subspace_functional(s, &e)?;
        return Ok(ExtendOutcome {
            subspace: s.clone(),
            added: false,
            value,
            coarse_value: value,
        });
    }
    let coarse = extension_value(s, phi, denom)?;
    let refined = extension_value(s, phi, denom.saturating_mul(2))?;
    let mut generators = s.generators.clone();
    let mut assigned = s.assigned.clone();
    generators.push(phi.clone());
    assigned.push(refined);
    Ok(ExtendOutcome {
        subspace: GenSubspace::new(s.n, generators, assigned)?,
        added: true,
        value: refined,
        coarse_value: coarse,
    })
}

//! Sampled axiom checking for functionals on function vectors: the axiom
//! systems that characterize t-normed integrals, and a demonstration that
//! join/meet homogeneity forces monotonicity.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::capacity::{characteristic, unit_grid, FnVec, Subset};
use crate::comonotone::{is_comonotone, random_comonotone_pair, squeeze_witness};
use crate::error::Result;
use crate::integral::Functional;
use crate::report::{Check, CheckReport, Verdict, Witness};
use crate::tnorm::TNorm;

/// An axiom a functional may satisfy. The `Star…` variants are
/// parameterized by the t-norm they are homogeneous over.
#[derive(Clone, Debug)]
pub enum AxiomKind {
    /// `I(1_X) = 1`.
    Normed,
    /// `f <= g` implies `I(f) <= I(g)`.
    Monotone,
    /// `I(f ∨ g) = I(f) ∨ I(g)` for comonotone `f, g`.
    ComonotoneMaxitive,
    /// `I(c_X * f) = c * I(f)` for the given t-norm.
    StarHomogeneous(TNorm),
    /// `I(c_X ∨ f) = c ∨ I(f)`.
    VeeHomogeneous,
    /// `I(c_X ∧ f) = c ∧ I(f)`.
    WedgeHomogeneous,
    /// Star homogeneity restricted to characteristic functions, checked
    /// exhaustively over all subsets and grid constants.
    StarCharHomogeneous(TNorm),
}

impl AxiomKind {
    pub fn name(&self) -> String {
        match self {
            AxiomKind::Normed => "normed".into(),
            AxiomKind::Monotone => "monotone".into(),
            AxiomKind::ComonotoneMaxitive => "comonotone_maxitive".into(),
            AxiomKind::StarHomogeneous(op) => format!("star_homogeneous({})", op.name()),
            AxiomKind::VeeHomogeneous => "vee_homogeneous".into(),
            AxiomKind::WedgeHomogeneous => "wedge_homogeneous".into(),
            AxiomKind::StarCharHomogeneous(op) => {
                format!("star_char_homogeneous({})", op.name())
            }
        }
    }

    fn tag(&self) -> u64 {
        match self {
            AxiomKind::Normed => 1,
            AxiomKind::Monotone => 2,
            AxiomKind::ComonotoneMaxitive => 3,
            AxiomKind::StarHomogeneous(_) => 4,
            AxiomKind::VeeHomogeneous => 5,
            AxiomKind::WedgeHomogeneous => 6,
            AxiomKind::StarCharHomogeneous(_) => 7,
        }
    }
}

/// Configuration for sampled checks.
///
/// When `pool` is set, samples are drawn from it in a fixed deterministic
/// order (cyclic for single functions, row-major for pairs) instead of at
/// random; this is how partial-domain functionals get probed with inputs
/// that actually lie in their domain.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub samples: usize,
    pub grid_denom: u32,
    pub seed: u64,
    pub tolerance: f64,
    pub pool: Option<Vec<FnVec>>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            samples: 500,
            grid_denom: 20,
            seed: 0,
            tolerance: crate::DEFAULT_TOL,
            pool: None,
        }
    }
}

impl CheckConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_pool(mut self, pool: Vec<FnVec>) -> Self {
        self.pool = Some(pool);
        self
    }
}

fn mix(seed: u64, tag: u64, k: u64) -> u64 {
    // splitmix64 over the three inputs, so per-sample streams are
    // independent of evaluation order.
    let mut z = seed;
    for add in [tag, k] {
        z = z.wrapping_add(add).wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^= z >> 31;
    }
    z
}

fn sample_rng(seed: u64, tag: u64, k: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(seed, tag, k))
}

fn random_fnvec(rng: &mut ChaCha8Rng, n: usize, grid: &[f64]) -> FnVec {
    FnVec::new((0..n).map(|_| grid[rng.gen_range(0..grid.len())]).collect())
        .expect("grid values are unit values")
}

struct Ctx<'a> {
    i: &'a Functional,
    grid: Vec<f64>,
    samples: usize,
    seed: u64,
    tol: f64,
    /// `None` means sample at random; `Some` means draw only from here,
    /// even if the filtered pool came up empty.
    pool: Option<Vec<FnVec>>,
}

impl<'a> Ctx<'a> {
    fn new(i: &'a Functional, cfg: &CheckConfig) -> Self {
        let pool = cfg
            .pool
            .as_ref()
            .map(|p| p.iter().filter(|f| f.n() == i.n()).cloned().collect());
        Ctx {
            i,
            grid: unit_grid(cfg.grid_denom.max(1)),
            samples: cfg.samples,
            seed: cfg.seed,
            tol: cfg.tolerance,
            pool,
        }
    }

    fn value(&self, f: &FnVec) -> Option<f64> {
        self.i.eval_opt(f).expect("dimensions verified up front")
    }

    /// k-th (function, constant) sample.
    fn draw_fn_const(&self, tag: u64, k: usize) -> Option<(FnVec, f64)> {
        match &self.pool {
            None => {
                let mut rng = sample_rng(self.seed, tag, k as u64);
                let f = random_fnvec(&mut rng, self.i.n(), &self.grid);
                let c = self.grid[rng.gen_range(0..self.grid.len())];
                Some((f, c))
            }
            Some(p) if p.is_empty() => None,
            Some(p) => {
                let m = p.len();
                Some((p[k % m].clone(), self.grid[(k / m) % self.grid.len()]))
            }
        }
    }

    /// k-th pair sample (row-major over the pool when present).
    fn draw_pair(&self, tag: u64, k: usize) -> Option<(FnVec, FnVec)> {
        match &self.pool {
            None => {
                let mut rng = sample_rng(self.seed, tag, k as u64);
                let a = random_fnvec(&mut rng, self.i.n(), &self.grid);
                let b = random_fnvec(&mut rng, self.i.n(), &self.grid);
                Some((a, b))
            }
            Some(p) if p.is_empty() => None,
            Some(p) => {
                let m = p.len();
                Some((p[(k / m) % m].clone(), p[k % m].clone()))
            }
        }
    }
}

fn finish(name: String, effective: usize, witness: Option<Witness>) -> Check {
    match witness {
        Some(w) => Check::fail(name, effective, w),
        None if effective == 0 => Check::inconclusive(name),
        None => Check::pass(name, effective),
    }
}

fn check_normed(ctx: &Ctx) -> Check {
    let one = FnVec::constant(ctx.i.n(), 1.0).expect("n validated");
    match ctx.value(&one) {
        Some(v) if (v - 1.0).abs() > ctx.tol => Check::fail(
            "normed",
            1,
            Witness::new(vec![("f".into(), one.to_string())], v, 1.0),
        ),
        Some(_) => Check::pass("normed", 1),
        None => Check::inconclusive("normed"),
    }
}

/// Monotonicity check; also hands back the violating pair in typed form so
/// the squeeze-contradiction demo can reuse it.
fn check_monotone(ctx: &Ctx, tag: u64) -> (Check, Option<MonotoneViolation>) {
    let mut effective = 0usize;
    for k in 0..ctx.samples {
        let (f, g) = if ctx.pool.is_none() {
            let mut rng = sample_rng(ctx.seed, tag, k as u64);
            let g = random_fnvec(&mut rng, ctx.i.n(), &ctx.grid);
            let other = random_fnvec(&mut rng, ctx.i.n(), &ctx.grid);
            (g.meet(&other).expect("same n"), g)
        } else {
            let Some((a, b)) = ctx.draw_pair(tag, k) else {
                continue;
            };
            if a.le(&b).expect("same n") {
                (a, b)
            } else if b.le(&a).expect("same n") {
                (b, a)
            } else {
                continue;
            }
        };
        let (Some(vf), Some(vg)) = (ctx.value(&f), ctx.value(&g)) else {
            continue;
        };
        effective += 1;
        if vf > vg + ctx.tol {
            let witness = Witness::new(
                vec![("f".into(), f.to_string()), ("g".into(), g.to_string())],
                vf,
                vg,
            );
            return (
                Check::fail("monotone", effective, witness),
                Some(MonotoneViolation {
                    lower: f,
                    upper: g,
                    lower_value: vf,
                    upper_value: vg,
                }),
            );
        }
    }
    (finish("monotone".into(), effective, None), None)
}

fn check_comonotone_maxitive(ctx: &Ctx, tag: u64) -> Check {
    let mut effective = 0usize;
    for k in 0..ctx.samples {
        let (f, g) = if ctx.pool.is_none() {
            random_comonotone_pair(ctx.i.n(), &ctx.grid, mix(ctx.seed, tag, k as u64))
                .expect("n and grid validated")
        } else {
            let Some((a, b)) = ctx.draw_pair(tag, k) else {
                continue;
            };
            if !is_comonotone(&a, &b).expect("same n") {
                continue;
            }
            (a, b)
        };
        let join = f.join(&g).expect("same n");
        let (Some(vf), Some(vg), Some(vj)) =
            (ctx.value(&f), ctx.value(&g), ctx.value(&join))
        else {
            continue;
        };
        effective += 1;
        let expected = vf.max(vg);
        if (vj - expected).abs() > ctx.tol {
            return Check::fail(
                "comonotone_maxitive",
                effective,
                Witness::new(
                    vec![("f".into(), f.to_string()), ("g".into(), g.to_string())],
                    vj,
                    expected,
                ),
            );
        }
    }
    finish("comonotone_maxitive".into(), effective, None)
}

fn check_pointwise_const(
    ctx: &Ctx,
    tag: u64,
    name: String,
    combine: impl Fn(f64, f64) -> f64,
) -> Check {
    let mut effective = 0usize;
    for k in 0..ctx.samples {
        let Some((f, c)) = ctx.draw_fn_const(tag, k) else {
            continue;
        };
        let combined = f.map(|v| combine(c, v));
        let (Some(vf), Some(vc)) = (ctx.value(&f), ctx.value(&combined)) else {
            continue;
        };
        effective += 1;
        let expected = combine(c, vf);
        if (vc - expected).abs() > ctx.tol {
            return Check::fail(
                name,
                effective,
                Witness::new(
                    vec![("f".into(), f.to_string()), ("c".into(), c.to_string())],
                    vc,
                    expected,
                ),
            );
        }
    }
    finish(name, effective, None)
}

fn check_star_char(ctx: &Ctx, op: &TNorm, name: String) -> Check {
    let n = ctx.i.n();
    let mut effective = 0usize;
    for s in Subset::all(n) {
        let chi = characteristic(s, n).expect("subset within range");
        for &c in &ctx.grid {
            let combined = chi.map(|v| op.eval(c, v));
            let (Some(vchi), Some(vc)) = (ctx.value(&chi), ctx.value(&combined)) else {
                continue;
            };
            effective += 1;
            let expected = op.eval(c, vchi);
            if (vc - expected).abs() > ctx.tol {
                return Check::fail(
                    name,
                    effective,
                    Witness::new(
                        vec![
                            ("subset".into(), s.to_string()),
                            ("c".into(), c.to_string()),
                        ],
                        vc,
                        expected,
                    ),
                );
            }
        }
    }
    finish(name, effective, None)
}

/// Checks the requested axioms against a functional.
///
/// Samples are filtered through the functional's domain: a sample counts
/// only when every function it needs (the inputs themselves, `c_X * f`,
/// `f ∨ g`, …) is in-domain. An axiom with no effective samples comes back
/// inconclusive, never passing.
pub fn check_axioms(i: &Functional, axioms: &[AxiomKind], cfg: &CheckConfig) -> CheckReport {
    let ctx = Ctx::new(i, cfg);
    let mut report = CheckReport::new();
    for axiom in axioms {
        let check = match axiom {
            AxiomKind::Normed => check_normed(&ctx),
            AxiomKind::Monotone => check_monotone(&ctx, axiom.tag()).0,
            AxiomKind::ComonotoneMaxitive => check_comonotone_maxitive(&ctx, axiom.tag()),
            AxiomKind::StarHomogeneous(op) => {
                let op = op.clone();
                check_pointwise_const(&ctx, axiom.tag(), axiom.name(), move |c, v| {
                    op.eval(c, v)
                })
            }
            AxiomKind::VeeHomogeneous => {
                check_pointwise_const(&ctx, axiom.tag(), axiom.name(), f64::max)
            }
            AxiomKind::WedgeHomogeneous => {
                check_pointwise_const(&ctx, axiom.tag(), axiom.name(), f64::min)
            }
            AxiomKind::StarCharHomogeneous(op) => check_star_char(&ctx, op, axiom.name()),
        };
        report.push(check);
    }
    report
}

/// A sampled monotonicity violation in typed form.
#[derive(Clone, Debug, Serialize)]
pub struct MonotoneViolation {
    pub lower: FnVec,
    pub upper: FnVec,
    /// `I(lower)` — the larger value, despite `lower <= upper`.
    pub lower_value: f64,
    /// `I(upper)`.
    pub upper_value: f64,
}

/// The contradiction forced by a monotonicity violation under join/meet
/// homogeneity: the squeeze witness `xi` satisfies `xi ∧ c_X = upper ∧ c_X`
/// and `xi ∨ d_X = lower ∨ d_X`, so meet homogeneity forces
/// `I(xi) = I(upper)` while join homogeneity forces `I(xi) = I(lower)`.
#[derive(Clone, Debug, Serialize)]
pub struct SqueezeContradiction {
    pub violation: MonotoneViolation,
    pub c: f64,
    pub d: f64,
    pub xi: FnVec,
    pub forced_by_wedge: f64,
    pub forced_by_vee: f64,
    pub actual: f64,
}

/// Builds the squeeze contradiction for a concrete violating pair
/// (`lower <= upper` with `I(lower) > I(upper)`); returns `None` when the
/// pair doesn't actually violate monotonicity.
pub fn squeeze_contradiction(
    i: &Functional,
    lower: &FnVec,
    upper: &FnVec,
    tol: f64,
) -> Result<Option<SqueezeContradiction>> {
    if !lower.le(upper)? {
        return Err(crate::Error::Precondition(
            "squeeze_contradiction requires lower <= upper pointwise".into(),
        ));
    }
    let a = i.eval(lower)?;
    let b = i.eval(upper)?;
    if a <= b + tol {
        return Ok(None);
    }
    let c = b + (a - b) / 3.0;
    let d = b + 2.0 * (a - b) / 3.0;
    let xi = squeeze_witness(upper, lower, c, d)?;
    let actual = i.eval(&xi)?;
    Ok(Some(SqueezeContradiction {
        violation: MonotoneViolation {
            lower: lower.clone(),
            upper: upper.clone(),
            lower_value: a,
            upper_value: b,
        },
        c,
        d,
        xi,
        forced_by_wedge: b,
        forced_by_vee: a,
        actual,
    }))
}

/// Report of [`lemma_mon_demo`].
#[derive(Clone, Debug, Serialize)]
pub struct LemmaMonReport {
    pub vee: Check,
    pub wedge: Check,
    pub monotone: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contradiction: Option<SqueezeContradiction>,
}

impl LemmaMonReport {
    /// True when the demo came out consistent: either everything passed, or
    /// homogeneity already failed on its own.
    pub fn homogeneity_implies_monotone(&self) -> bool {
        self.contradiction.is_none()
    }
}

/// Demonstrates that join+meet homogeneity forces monotonicity.
///
/// Homogeneity is corroborated on random grid samples; monotone pairs come
/// from the config (its pool, when given, is the place to put suspicious
/// pairs). If a monotonicity violation shows up while sampled homogeneity
/// holds, the squeeze witness is constructed and the two incompatible
/// values it forces on `I` are reported.
pub fn lemma_mon_demo(i: &Functional, cfg: &CheckConfig) -> LemmaMonReport {
    let random_cfg = CheckConfig {
        pool: None,
        ..cfg.clone()
    };
    let random_ctx = Ctx::new(i, &random_cfg);
    let vee = check_pointwise_const(
        &random_ctx,
        AxiomKind::VeeHomogeneous.tag(),
        AxiomKind::VeeHomogeneous.name(),
        f64::max,
    );
    let wedge = check_pointwise_const(
        &random_ctx,
        AxiomKind::WedgeHomogeneous.tag(),
        AxiomKind::WedgeHomogeneous.name(),
        f64::min,
    );
    let ctx = Ctx::new(i, cfg);
    let (monotone, violation) = check_monotone(&ctx, AxiomKind::Monotone.tag());
    let contradiction = match violation {
        Some(v) if vee.verdict == Verdict::Pass && wedge.verdict == Verdict::Pass => {
            squeeze_contradiction(i, &v.lower, &v.upper, cfg.tolerance)
                .ok()
                .flatten()
        }
        _ => None,
    };
    LemmaMonReport {
        vee,
        wedge,
        monotone,
        contradiction,
    }
}

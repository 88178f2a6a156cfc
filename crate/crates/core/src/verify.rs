//! Self-checks of the library contracts, grouped into named suites.
//!
//! Every check compares a production path against an independent one
//! (exact sums, direct definitions, dense grids) on the requested group,
//! with random inputs drawn from a seeded generator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_complex::Complex;
use rand::Rng;

use crate::counterexample::{
    annulus_base_point, atom_grid, dense_f, dense_spectrum, f_coeff, lower_bound_integral, make_alphas,
    partial_sum_bound, riesz_at_annulus, norlund_at_annulus, sma_atom, validate_alphas, AlphaSequence,
    CounterexampleSpec, Exponent, Operator, Projection,
};
use crate::cyclotomic::{CharacterScalar, CycloInt};
use crate::error::{Error, Result};
use crate::group::{base_sizes, GroupSpec, Point};
use crate::random::{random_atom, random_grid, random_spectrum, seeded, GENERATOR};
use crate::summability::{direct, mean, maximal_mean, riesz_abel_form, riesz_fejer_domination, MeanKind, WeightSeq};
use crate::system::{dirichlet_lazy, dirichlet_mn_closed, dirichlet_naive, dirichlet_prefix, dirichlet_shift_check, psi_grid};
use crate::transform::{analyze, fast_analyze, fast_synthesize, martingale_of, martingale_of_spectral, synthesize, Spectrum};

/// Tolerance for floating-point contracts.
pub const TOL: f64 = 1e-12;

/// Largest group the suites run on; all of them are dense.
pub const SUITE_LIMIT: usize = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Kernels,
    Transform,
    Means,
    Counterexample,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Kernels, Suite::Transform, Suite::Means, Suite::Counterexample];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Kernels => "kernels",
            Suite::Transform => "transform",
            Suite::Means => "means",
            Suite::Counterexample => "counterexample",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// One property outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: Suite,
    pub property: &'static str,
    pub passed: bool,
    pub detail: String,
}

struct Recorder {
    suite: Suite,
    checks: Vec<Check>,
}

impl Recorder {
    fn push(&mut self, property: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { suite: self.suite, property, passed, detail: detail.into() });
    }

    fn within(&mut self, property: &'static str, err: f64, tol: f64) {
        self.push(property, err <= tol, format!("max error {err:.3e} (tolerance {tol:.0e})"));
    }
}

/// Label for the random stream of a run.
pub fn rng_label(seed: u64) -> String {
    format!("{GENERATOR}:{seed}")
}

pub fn run_suite(suite: Suite, group: &GroupSpec, seed: u64) -> Result<Vec<Check>> {
    let size = group.size()?;
    if size > SUITE_LIMIT {
        return Err(Error::Precondition(format!("suites run on groups with at most {SUITE_LIMIT} cells, got {size}")));
    }
    let mut rec = Recorder { suite, checks: Vec::new() };
    match suite {
        Suite::Kernels => kernels(&mut rec, group, seed)?,
        Suite::Transform => transforms(&mut rec, group, seed)?,
        Suite::Means => means(&mut rec, group, seed)?,
        Suite::Counterexample => counterexample(&mut rec)?,
    }
    Ok(rec.checks)
}

fn sample_points<R: Rng>(group: &GroupSpec, count: usize, rng: &mut R) -> Result<Vec<Point>> {
    let size = group.size()?;
    if size <= count {
        return Ok(group.points()?.collect());
    }
    Ok((0..count).map(|_| group.point_of_cell(rng.gen_range(0..size))).collect())
}

fn kernels(rec: &mut Recorder, g: &GroupSpec, seed: u64) -> Result<()> {
    let mut rng = seeded(seed);
    let ctx = CycloInt::context(g);
    let sizes = base_sizes(g)?;
    let points = sample_points(g, 64, &mut rng)?;

    let mut closed_ok = true;
    let mut lazy_ok = true;
    let mut linear_ok = true;
    for x in &points {
        let prefix = dirichlet_prefix::<CycloInt>(sizes.total(), x, g, &ctx)?;
        for (n, &mn) in sizes.values().iter().enumerate() {
            closed_ok &= prefix[mn as usize] == dirichlet_mn_closed::<CycloInt>(n, x, g, &ctx)?;
        }
        for (n, d) in prefix.iter().enumerate().take(sizes.total() as usize) {
            lazy_ok &= *d == dirichlet_lazy::<CycloInt>(&BigUint::from(n), x, g, &ctx)?;
        }
        let rank = x.zero_prefix();
        for j in 0..sizes.get(rank) as usize {
            linear_ok &= prefix[j].as_integer() == Some(j as i128);
        }
    }
    rec.push("closed_form_dirichlet", closed_ok, format!("D_(M_n) on {} points, exact", points.len()));
    rec.push("lazy_dirichlet", lazy_ok, format!("all n < M_N on {} points, exact", points.len()));
    rec.push("linear_on_cylinder", linear_ok, "D_j(x) = j for j < M_n, x in I_n");

    let mut shift_ok = true;
    for x in points.iter().take(16) {
        for k in 0..=g.depth() {
            let room = sizes.total() - sizes.get(k);
            for j in 0..sizes.get(k).min(room) {
                shift_ok &= dirichlet_shift_check(j, k, x, g)?;
            }
        }
    }
    rec.push("shift_identity", shift_ok, "D_(j+M_k) = D_(M_k) + psi_(M_k) D_j, exact");

    let x = &points[0];
    let naive = dirichlet_naive::<Complex<f64>>(sizes.total(), x, g, &())?;
    let exact = dirichlet_naive::<CycloInt>(sizes.total(), x, g, &ctx)?.to_complex::<f64>();
    rec.within("float_backend_agrees", (naive - exact).norm(), TOL * sizes.total() as f64);
    Ok(())
}

fn transforms(rec: &mut Recorder, g: &GroupSpec, seed: u64) -> Result<()> {
    let mut rng = seeded(seed);
    let size = g.size()?;
    let mut ortho = 0.0f64;
    for j in 0..size {
        let psi = crate::transform::GridFunction::new(g.clone(), psi_grid::<f64>(j as u64, g)?)?;
        let s = fast_analyze(&psi);
        ortho = ortho.max(s.max_abs_diff(&Spectrum::delta(g, j)?));
    }
    rec.within("orthonormality", ortho, TOL);

    let (mut fast_err, mut parseval, mut round) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..5 {
        let f = random_grid::<f64, _>(g, &mut rng)?;
        let slow = analyze(&f);
        let fast = fast_analyze(&f);
        fast_err = fast_err.max(fast.max_abs_diff(&slow) / slow.max_abs());
        let back = synthesize(&slow);
        fast_err = fast_err.max(fast_synthesize(&slow).max_abs_diff(&back) / back.max_abs());
        let energy: f64 = f.values().iter().map(|v| v.norm_sqr()).sum::<f64>() / size as f64;
        parseval = parseval.max((energy - fast.energy()).abs());
        round = round.max(fast_synthesize(&fast).max_abs_diff(&f));
    }
    rec.within("fast_matches_naive", fast_err, 1e-10);
    rec.within("parseval", parseval, TOL);
    rec.within("round_trip", round, TOL);

    let mut mart = 0.0f64;
    for _ in 0..3 {
        let f = random_grid::<f64, _>(g, &mut rng)?;
        let (a, b) = (martingale_of(&f), martingale_of_spectral(&f));
        for (x, y) in a.levels().iter().zip(b.levels()) {
            mart = mart.max(x.max_abs_diff(y));
        }
    }
    rec.within("martingale_is_cylinder_average", mart, TOL);
    Ok(())
}

fn means(rec: &mut Recorder, g: &GroupSpec, seed: u64) -> Result<()> {
    let mut rng = seeded(seed);
    let size = g.size()?;
    let s = random_spectrum::<f64, _>(g, &mut rng)?;
    let upto = size.min(24);
    let weights: Vec<f64> = (0..upto).map(|_| rng.gen_range(0.0..2.0)).collect();
    let kinds = [
        MeanKind::Partial,
        MeanKind::Fejer,
        MeanKind::RieszLog,
        MeanKind::NorlundLog,
        MeanKind::NorlundGeneral(WeightSeq::new(weights)?),
    ];
    let mut err = 0.0f64;
    for kind in &kinds {
        for n in kind.first_index().max(1)..=upto {
            err = err.max(mean(&s, kind, n)?.max_abs_diff(&direct::mean(&s, kind, n)?));
        }
    }
    rec.within("multiplier_matches_definition", err, TOL);

    let mut abel = 0.0f64;
    for n in 1..size.min(65) {
        abel = abel.max(riesz_abel_form(&s, n)?.max_abs_diff(&direct::mean(&s, &MeanKind::RieszLog, n)?));
    }
    rec.within("abel_form", abel, TOL);

    let cap = (size - 1).min(200);
    let mut worst = 0.0f64;
    for _ in 0..5 {
        worst = worst.max(riesz_fejer_domination(&random_spectrum::<f64, _>(g, &mut rng)?, cap)?);
    }
    for _ in 0..5 {
        let a = random_atom::<f64, _>(g, 0.5, &mut rng)?;
        worst = worst.max(riesz_fejer_domination(&fast_analyze(&a.grid), cap)?);
    }
    rec.push("riesz_dominated_by_fejer", worst <= 3.0, format!("max ratio {worst:.6} (bound 3)"));

    let cap = size.min(48);
    let mut max_err = 0.0f64;
    for kind in &kinds[..4] {
        max_err = max_err.max(maximal_mean(&s, kind, cap)?.max_abs_diff(&direct::maximal_mean(&s, kind, cap)?));
    }
    rec.within("maximal_matches_direct", max_err, TOL);
    Ok(())
}

fn counterexample(rec: &mut Recorder) -> Result<()> {
    let walsh = [2];
    let mut alphas_ok = true;
    let mut detail = Vec::new();
    for p in ["0.3", "0.5", "1"] {
        let p: Exponent = p.parse()?;
        let seq = make_alphas(p, 3, &walsh)?;
        alphas_ok &= validate_alphas(&seq, &walsh)?.passed();
        detail.push(format!("p={p}: {:?}", seq.alphas()));
    }
    rec.push("greedy_alphas_valid", alphas_ok, detail.join("; "));

    let half = Exponent::new(1, 2)?;
    let cs = CounterexampleSpec::new(GroupSpec::walsh(7)?, AlphaSequence::new(vec![1, 3], half)?)?;
    let mut atoms_ok = true;
    let mut proj_err = 0.0f64;
    for k in 0..2 {
        let a = atom_grid(&cs, k)?;
        atoms_ok &= a.zero_mean() && a.support_ok() && a.sup_ok();
        let grid = a.grid(cs.group())?;
        let spectrum = fast_analyze(&grid);
        for big_a in 0..=7 {
            let proj = crate::summability::partial_sum(&spectrum, 1 << big_a)?;
            let diff = match sma_atom(&cs, k, big_a)? {
                Projection::Unchanged => proj.max_abs_diff(&grid),
                Projection::Zero => proj.max_abs(),
            };
            proj_err = proj_err.max(diff);
        }
    }
    rec.push("atom_axioms", atoms_ok, "zero mean, support, sup bound (exact kernel values)");
    rec.within("projection_branches", proj_err, TOL);

    let f = fast_analyze(&dense_f(&cs, 7)?);
    let mut coeff_err = 0.0f64;
    for (j, c) in f.coeffs().iter().enumerate() {
        coeff_err = coeff_err.max((c - f_coeff(&cs, &BigUint::from(j))?.to_f64()).norm());
    }
    rec.within("block_coefficients", coeff_err, TOL);

    let sums = direct::partial_sums(&dense_spectrum(&cs, 7)?, 64)?;
    let worst = sums.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max);
    let bound = partial_sum_bound(&cs, 1)?.to_f64();
    rec.push("partial_sum_bound", worst <= bound * (1.0 + TOL), format!("max |S_j f| {worst:.6} vs bound {bound:.6}"));

    let mut violations = 0;
    let mut total = 0;
    for s in 2..=3 {
        let x = annulus_base_point(&cs, s)?;
        for b in [riesz_at_annulus(&cs, 1, s, &x)?, norlund_at_annulus(&cs, 1, s, &x)?] {
            total += 1;
            if b.certified.to_f64() > b.exact.expect("dense") * (1.0 + TOL) + TOL {
                violations += 1;
            }
        }
    }
    rec.push("certified_bounds_sound", violations == 0, format!("{violations} violations in {total} annuli"));

    for (p, op) in [("0.5", Operator::Riesz), ("0.5", Operator::Norlund), ("1", Operator::Norlund)] {
        let p: Exponent = p.parse()?;
        let cs = CounterexampleSpec::minimal(&walsh, make_alphas(p, 3, &walsh)?)?;
        let values = (0..3).map(|k| lower_bound_integral(&cs, k, op).map(|r| r.value)).collect::<Result<Vec<_>>>()?;
        let growing = values.windows(2).all(|w| w[0] < w[1]);
        let shown: Vec<String> = values.iter().map(|v| v.to_sci_string()).collect();
        let property = match op {
            Operator::Riesz => "riesz_lower_bound_grows",
            Operator::Norlund => "norlund_lower_bound_grows",
        };
        rec.push(property, growing, format!("p={p}: {}", shown.join(" < ")));
    }
    Ok(())
}

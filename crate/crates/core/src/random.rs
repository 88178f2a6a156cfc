//! Seeded random inputs for property suites.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::group::{base_sizes, cylinder_of, Cylinder, GroupSpec};
use crate::scalar::Real;
use crate::transform::{GridFunction, Spectrum};

/// Name recorded next to seeds in CSV output.
pub const GENERATOR: &str = "chacha8";

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unit_box<T: Real, R: Rng>(rng: &mut R) -> Complex<T> {
    Complex::new(T::of(rng.gen_range(-1.0..1.0)), T::of(rng.gen_range(-1.0..1.0)))
}

pub fn random_grid<T: Real, R: Rng>(spec: &GroupSpec, rng: &mut R) -> Result<GridFunction<T>> {
    let n = spec.size()?;
    GridFunction::new(spec.clone(), (0..n).map(|_| unit_box(rng)).collect())
}

pub fn random_spectrum<T: Real, R: Rng>(spec: &GroupSpec, rng: &mut R) -> Result<Spectrum<T>> {
    let n = spec.size()?;
    Spectrum::new(spec.clone(), (0..n).map(|_| unit_box(rng)).collect())
}

/// A real p-atom together with its supporting cylinder.
#[derive(Debug, Clone)]
pub struct RandomAtom<T> {
    pub grid: GridFunction<T>,
    pub support: Cylinder,
}

/// Random real p-atom: zero mean on a random cylinder `I` of rank `< N`,
/// supported in `I`, with `‖a‖_∞ = μ(I)^{-1/p}` attained.
pub fn random_atom<T: Real, R: Rng>(spec: &GroupSpec, p: f64, rng: &mut R) -> Result<RandomAtom<T>> {
    let rank = rng.gen_range(0..spec.depth());
    let x = spec.point_of_cell(rng.gen_range(0..spec.size()?));
    let support = cylinder_of(&x, rank)?;
    let cells = support.cells(spec)?;
    let mut raw: Vec<f64> = cells.clone().map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mean = raw.iter().sum::<f64>() / raw.len() as f64;
    raw.iter_mut().for_each(|v| *v -= mean);
    let peak = raw.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let height = (base_sizes(spec)?.get(rank) as f64).powf(1.0 / p);
    let mut values = vec![Complex::new(T::zero(), T::zero()); spec.size()?];
    for (slot, v) in values[cells].iter_mut().zip(raw) {
        *slot = Complex::new(T::of(v / peak * height), T::zero());
    }
    Ok(RandomAtom { grid: GridFunction::new(spec.clone(), values)?, support })
}

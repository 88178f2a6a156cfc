//! Dense functions on the depth-`N` cells, Vilenkin-Fourier transforms,
//! `L_p` quasi-norms, the martingale maximal function and `H_p`.

use std::io::{Read, Write};

use num_complex::Complex;
use num_traits::Zero;

use crate::cyclotomic::{CycloInt, CycloRing, RootOfUnity};
use crate::error::{Error, Result};
use crate::group::{base_sizes, digits, GroupSpec, Point};
use crate::scalar::{unit_root, Real};
use crate::system::{psi_digits, RootTable};

/// Values on every rank-`N` cell, in cell order.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction<T> {
    spec: GroupSpec,
    values: Vec<Complex<T>>,
}

/// Vilenkin-Fourier coefficients `f̂(0), …, f̂(M_N - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    spec: GroupSpec,
    coeffs: Vec<Complex<T>>,
}

macro_rules! dense_common {
    ($ty:ident, $field:ident) => {
        impl<T: Real> $ty<T> {
            pub fn new(spec: GroupSpec, $field: Vec<Complex<T>>) -> Result<Self> {
                let expected = spec.size()?;
                if $field.len() != expected {
                    return Err(Error::LengthMismatch { expected, got: $field.len() });
                }
                Ok(Self { spec, $field })
            }

            pub fn zeros(spec: &GroupSpec) -> Result<Self> {
                let n = spec.size()?;
                Ok(Self { spec: spec.clone(), $field: vec![Complex::zero(); n] })
            }

            pub fn spec(&self) -> &GroupSpec {
                &self.spec
            }

            pub fn $field(&self) -> &[Complex<T>] {
                &self.$field
            }

            pub fn len(&self) -> usize {
                self.$field.len()
            }

            pub fn is_empty(&self) -> bool {
                self.$field.is_empty()
            }

            pub fn into_inner(self) -> Vec<Complex<T>> {
                self.$field
            }

            pub fn scale(&self, c: Complex<T>) -> Self {
                Self { spec: self.spec.clone(), $field: self.$field.iter().map(|&v| v * c).collect() }
            }

            /// `self + c·other`.
            pub fn axpy(&self, c: Complex<T>, other: &Self) -> Self {
                let $field = self.$field.iter().zip(&other.$field).map(|(&a, &b)| a + b * c).collect();
                Self { spec: self.spec.clone(), $field }
            }

            /// Largest entrywise distance to `other`.
            pub fn max_abs_diff(&self, other: &Self) -> T {
                self.$field
                    .iter()
                    .zip(&other.$field)
                    .map(|(a, b)| (a - b).norm())
                    .fold(T::zero(), T::max)
            }

            pub fn max_abs(&self) -> T {
                self.$field.iter().map(|v| v.norm()).fold(T::zero(), T::max)
            }

            /// Writes `index,real,imag` rows under a one-line header.
            pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
                write_rows(w, &self.$field)
            }

            pub fn read_csv<R: Read>(spec: &GroupSpec, r: R) -> Result<Self> {
                Self::new(spec.clone(), read_rows(r)?)
            }
        }
    };
}

dense_common!(GridFunction, values);
dense_common!(Spectrum, coeffs);

impl<T: Real> GridFunction<T> {
    pub fn from_fn(spec: &GroupSpec, mut f: impl FnMut(&Point) -> Complex<T>) -> Result<Self> {
        let values = spec.points()?.map(|x| f(&x)).collect();
        Ok(Self { spec: spec.clone(), values })
    }

    pub fn real(spec: &GroupSpec, values: Vec<T>) -> Result<Self> {
        Self::new(spec.clone(), values.into_iter().map(|v| Complex::new(v, T::zero())).collect())
    }

    /// `∫ f dμ`.
    pub fn integral(&self) -> Complex<T> {
        let sum = self.values.iter().fold(Complex::zero(), |acc: Complex<T>, &v| acc + v);
        sum / T::count(self.values.len() as u64)
    }
}

impl<T: Real> Spectrum<T> {
    /// Spectrum with a single unit coefficient at `k`.
    pub fn delta(spec: &GroupSpec, k: usize) -> Result<Self> {
        let mut s = Self::zeros(spec)?;
        if k >= s.len() {
            return Err(Error::IndexOutOfRange { value: k.to_string(), bound: s.len().to_string() });
        }
        s.coeffs[k] = Complex::new(T::one(), T::zero());
        Ok(s)
    }

    /// Coefficients multiplied entrywise by `weights` (missing weights are 0).
    pub fn reweight(&self, weights: &[T]) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| weights.get(k).map_or(Complex::zero(), |&w| c * w))
            .collect();
        Self { spec: self.spec.clone(), coeffs }
    }

    /// `Σ |f̂(k)|²`.
    pub fn energy(&self) -> T {
        self.coeffs.iter().map(|c| c.norm_sqr()).fold(T::zero(), |a, b| a + b)
    }
}

fn write_rows<W: Write, T: Real>(w: W, values: &[Complex<T>]) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["index", "real", "imag"])?;
    for (i, v) in values.iter().enumerate() {
        out.write_record([i.to_string(), v.re.to_string(), v.im.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

fn read_rows<R: Read, T: Real>(r: R) -> Result<Vec<Complex<T>>> {
    let mut rdr = csv::Reader::from_reader(r);
    let mut out = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let field = |i: usize| -> Result<f64> {
            let s = rec.get(i).ok_or_else(|| Error::Parse(format!("row {line}: missing column {i}")))?;
            s.trim().parse::<f64>().map_err(|e| Error::Parse(format!("row {line}: {s:?}: {e}")))
        };
        let index = field(0)? as usize;
        if index != out.len() {
            return Err(Error::Parse(format!("row {line}: expected index {}, found {index}", out.len())));
        }
        let im = if rec.len() > 2 { field(2)? } else { 0.0 };
        out.push(Complex::new(T::of(field(1)?), T::of(im)));
    }
    Ok(out)
}

/// `f̂(k) = (1/M_N) Σ_cells f·ψ̄_k`, by direct `O(M_N²)` summation.
pub fn analyze<T: Real>(f: &GridFunction<T>) -> Spectrum<T> {
    let spec = f.spec();
    let table = RootTable::<T>::new(spec);
    let size = f.len();
    let norm = T::count(size as u64);
    let coeffs = (0..size as u64)
        .map(|k| {
            let idx = digits(k, spec).expect("k below M_N");
            let sum = f.values().iter().enumerate().fold(Complex::zero(), |acc: Complex<T>, (cell, &v)| {
                acc + v * table.psi_at_cell(&idx.digits, cell).conj()
            });
            sum / norm
        })
        .collect();
    Spectrum { spec: spec.clone(), coeffs }
}

/// `f(x) = Σ_k f̂(k)·ψ_k(x)`, by direct summation.
pub fn synthesize<T: Real>(s: &Spectrum<T>) -> GridFunction<T> {
    let spec = s.spec();
    let table = RootTable::<T>::new(spec);
    let idx: Vec<Vec<u32>> = (0..s.len() as u64).map(|k| digits(k, spec).unwrap().digits).collect();
    let values = (0..s.len())
        .map(|cell| {
            s.coeffs().iter().zip(&idx).fold(Complex::zero(), |acc: Complex<T>, (&c, d)| {
                if c.is_zero() {
                    acc
                } else {
                    acc + c * table.psi_at_cell(d, cell)
                }
            })
        })
        .collect();
    GridFunction { spec: spec.clone(), values }
}

/// Mixed-radix plan: one small DFT per coordinate.
///
/// In cell order coordinate `j` has stride `Π_{i>j} m_i`. Transforming
/// every axis in place leaves the coefficient of index `k` at position
/// `Σ_j k_j·stride_j`, which is then permuted to `Σ_j k_j·M_j`. Axes are
/// processed from coordinate 0 upward and each fiber in increasing offset
/// order, so results are bitwise reproducible.
struct MixedRadixPlan<T> {
    radices: Vec<usize>,
    strides: Vec<usize>,
    twiddles: Vec<Vec<Complex<T>>>,
    perm: Vec<usize>,
}

impl<T: Real> MixedRadixPlan<T> {
    fn new(spec: &GroupSpec) -> Result<Self> {
        let radices: Vec<usize> = spec.radices().iter().map(|&m| m as usize).collect();
        let size = spec.size()?;
        let mut strides = vec![1usize; radices.len()];
        for j in (0..radices.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * radices[j + 1];
        }
        let twiddles = radices.iter().map(|&m| (0..m as u64).map(|t| unit_root(t, m as u64)).collect()).collect();
        // perm[spectral index] = layout position
        let mut perm = vec![0usize; size];
        let mut kd = vec![0usize; radices.len()];
        for slot in perm.iter_mut() {
            *slot = kd.iter().zip(&strides).map(|(k, s)| k * s).sum();
            for (d, &m) in kd.iter_mut().zip(&radices) {
                *d += 1;
                if *d < m {
                    break;
                }
                *d = 0;
            }
        }
        Ok(Self { radices, strides, twiddles, perm })
    }

    /// In-place product DFT; `inverse` selects the `+` sign.
    fn run(&self, data: &mut [Complex<T>], inverse: bool) {
        let size = data.len();
        let mut scratch = Vec::new();
        for (axis, &m) in self.radices.iter().enumerate() {
            let stride = self.strides[axis];
            let tw = &self.twiddles[axis];
            let block = stride * m;
            scratch.resize(m, Complex::zero());
            for base in (0..size).step_by(block) {
                for off in 0..stride {
                    let start = base + off;
                    if m == 2 {
                        let (a, b) = (data[start], data[start + stride]);
                        data[start] = a + b;
                        data[start + stride] = a - b;
                        continue;
                    }
                    for (k, out) in scratch.iter_mut().enumerate() {
                        let mut acc = Complex::zero();
                        for x in 0..m {
                            let t = (k * x) % m;
                            let w = if inverse || t == 0 { tw[t] } else { tw[m - t] };
                            acc += data[start + x * stride] * w;
                        }
                        *out = acc;
                    }
                    for (k, &v) in scratch.iter().enumerate() {
                        data[start + k * stride] = v;
                    }
                }
            }
        }
    }
}

/// Same result as [`analyze`] in `O(M_N·Σ_j m_j)` operations.
pub fn fast_analyze<T: Real>(f: &GridFunction<T>) -> Spectrum<T> {
    let plan = MixedRadixPlan::<T>::new(f.spec()).expect("grid exists, so size fits");
    let mut data = f.values().to_vec();
    plan.run(&mut data, false);
    let norm = T::count(data.len() as u64);
    let coeffs = plan.perm.iter().map(|&pos| data[pos] / norm).collect();
    Spectrum { spec: f.spec().clone(), coeffs }
}

/// Same result as [`synthesize`] in `O(M_N·Σ_j m_j)` operations.
pub fn fast_synthesize<T: Real>(s: &Spectrum<T>) -> GridFunction<T> {
    let plan = MixedRadixPlan::<T>::new(s.spec()).expect("spectrum exists, so size fits");
    let mut data = vec![Complex::zero(); s.len()];
    for (k, &pos) in plan.perm.iter().enumerate() {
        data[pos] = s.coeffs()[k];
    }
    plan.run(&mut data, true);
    GridFunction { spec: s.spec().clone(), values: data }
}

/// `(∫|f|^p dμ)^{1/p}` with the exact cell measure `1/M_N`.
pub fn lp_quasinorm<T: Real>(f: &GridFunction<T>, p: T) -> Result<T> {
    if !(p > T::zero()) {
        return Err(Error::NonPositiveExponent(p.to_f64_lossy()));
    }
    let sum = f.values().iter().map(|v| v.norm().powf(p)).fold(T::zero(), |a, b| a + b);
    Ok((sum / T::count(f.len() as u64)).powf(p.recip()))
}

/// `f*(x) = max_{n ≤ N} |average of f over I_n(x)|`, real-valued.
pub fn dyadic_maximal<T: Real>(f: &GridFunction<T>) -> GridFunction<T> {
    let levels = cylinder_averages(f);
    let mut out = vec![T::zero(); f.len()];
    for level in &levels {
        for (o, v) in out.iter_mut().zip(level) {
            *o = o.max(v.norm());
        }
    }
    GridFunction::real(f.spec(), out).expect("same spec")
}

/// `‖f‖_{H_p} = ‖f*‖_p`.
pub fn hardy_quasinorm<T: Real>(f: &GridFunction<T>, p: T) -> Result<T> {
    lp_quasinorm(&dyadic_maximal(f), p)
}

/// Conditional expectations `E[f | F_n]` for `n = 0..=N`, expanded to cells.
fn cylinder_averages<T: Real>(f: &GridFunction<T>) -> Vec<Vec<Complex<T>>> {
    let sizes = base_sizes(f.spec()).expect("grid exists");
    let total = f.len();
    (0..=f.spec().depth())
        .map(|n| {
            let width = total / sizes.get(n) as usize;
            let inv = T::count(width as u64).recip();
            let mut level = Vec::with_capacity(total);
            for chunk in f.values().chunks(width) {
                let avg = chunk.iter().fold(Complex::zero(), |a: Complex<T>, &b| a + b) * inv;
                level.extend(std::iter::repeat(avg).take(width));
            }
            level
        })
        .collect()
}

/// The martingale `(f^{(0)}, …, f^{(N)})`, each level materialized on cells.
#[derive(Debug, Clone, PartialEq)]
pub struct MartingaleSeq<T> {
    levels: Vec<GridFunction<T>>,
}

impl<T: Real> MartingaleSeq<T> {
    pub fn new(levels: Vec<GridFunction<T>>) -> Result<Self> {
        let seq = MartingaleSeq { levels };
        if seq.levels.is_empty() || seq.levels.len() != seq.levels[0].spec().depth() + 1 {
            return Err(Error::InvalidArgument("martingale needs levels 0..=N".into()));
        }
        Ok(seq)
    }

    pub fn levels(&self) -> &[GridFunction<T>] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> &GridFunction<T> {
        &self.levels[n]
    }

    /// Largest violation of measurability (level `n` constant on rank-`n`
    /// cylinders) and of consistency (averaging level `n+1` gives level `n`).
    pub fn defect(&self) -> T {
        let mut worst = T::zero();
        for (n, level) in self.levels.iter().enumerate() {
            let averaged = cylinder_averages(level);
            worst = worst.max(max_diff(&averaged[n], level.values()));
            if n > 0 {
                let coarser = &self.levels[n - 1];
                worst = worst.max(max_diff(&averaged[n - 1], coarser.values()));
            }
        }
        worst
    }

    /// `f* = sup_n |f^{(n)}|` from the stored levels.
    pub fn maximal(&self) -> GridFunction<T> {
        let mut out = vec![T::zero(); self.levels[0].len()];
        for level in &self.levels {
            for (o, v) in out.iter_mut().zip(level.values()) {
                *o = o.max(v.norm());
            }
        }
        GridFunction::real(self.levels[0].spec(), out).expect("same spec")
    }
}

fn max_diff<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> T {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(T::zero(), T::max)
}

/// Levels as rank-`n` cylinder averages of `f`.
pub fn martingale_of<T: Real>(f: &GridFunction<T>) -> MartingaleSeq<T> {
    let levels = cylinder_averages(f)
        .into_iter()
        .map(|v| GridFunction { spec: f.spec().clone(), values: v })
        .collect();
    MartingaleSeq { levels }
}

/// Levels as partial sums `S_{M_n} f` computed from the spectrum.
pub fn martingale_of_spectral<T: Real>(f: &GridFunction<T>) -> MartingaleSeq<T> {
    let spectrum = fast_analyze(f);
    let sizes = base_sizes(f.spec()).expect("grid exists");
    let levels = sizes
        .values()
        .iter()
        .map(|&mn| {
            let mut s = spectrum.clone();
            s.coeffs[mn as usize..].iter_mut().for_each(|c| *c = Complex::zero());
            fast_synthesize(&s)
        })
        .collect();
    MartingaleSeq { levels }
}

/// Exact `M_N·f̂(k)` for integer-valued `f`, in `Z[ζ_L]`.
pub fn analyze_exact(values: &[i64], spec: &GroupSpec) -> Result<Vec<CycloInt>> {
    let size = spec.size()?;
    if values.len() != size {
        return Err(Error::LengthMismatch { expected: size, got: values.len() });
    }
    let ring = CycloRing::for_group(spec);
    let points: Vec<Point> = spec.points()?.collect();
    let roots: Vec<CycloInt> = (0..ring.order()).map(|t| CycloInt::root(&ring, RootOfUnity::new(t, ring.order()))).collect();
    Ok((0..size as u64)
        .map(|k| {
            let idx = digits(k, spec).unwrap();
            let mut counts = vec![0i128; ring.order() as usize];
            for (x, &v) in points.iter().zip(values) {
                let r = psi_digits(&idx.digits, x, spec).conj();
                counts[(r.num() * (ring.order() / r.den())) as usize] += i128::from(v);
            }
            counts.iter().zip(&roots).fold(CycloInt::zero(&ring), |acc, (&c, z)| {
                acc + CycloInt::integer(&ring, c) * z.clone()
            })
        })
        .collect())
}

/// Exact `M_N·S_n f` on every cell from exact `M_N·f̂`.
pub fn partial_sum_exact(scaled: &[CycloInt], n: usize, spec: &GroupSpec) -> Result<Vec<CycloInt>> {
    let ring = CycloRing::for_group(spec);
    let idx: Vec<Vec<u32>> = (0..n as u64).map(|k| digits(k, spec).map(|d| d.digits)).collect::<Result<_>>()?;
    Ok(spec
        .points()?
        .map(|x| {
            scaled[..n].iter().zip(&idx).fold(CycloInt::zero(&ring), |acc, (c, d)| {
                acc + c.clone() * CycloInt::root(&ring, psi_digits(d, &x, spec))
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_grid, seeded};

    type G = GridFunction<f64>;

    fn spec(r: &[u32]) -> GroupSpec {
        GroupSpec::new(r.to_vec()).unwrap()
    }

    #[test]
    fn analyze_psi_is_delta() {
        let g = spec(&[2, 3, 2]);
        let grid = G::new(g.clone(), crate::system::psi_grid(5, &g).unwrap()).unwrap();
        let s = analyze(&grid);
        for (k, c) in s.coeffs().iter().enumerate() {
            let expect = if k == 5 { 1.0 } else { 0.0 };
            assert!((c - Complex::new(expect, 0.0)).norm() < 1e-14);
        }
        let back = synthesize(&Spectrum::<f64>::delta(&g, 5).unwrap());
        assert!(back.max_abs_diff(&grid) < 1e-14);
    }

    #[test]
    fn constant_and_zero() {
        let g = spec(&[3, 3]);
        let c = Complex::new(2.5, -1.0);
        let s = fast_analyze(&G::from_fn(&g, |_| c).unwrap());
        assert!((s.coeffs()[0] - c).norm() < 1e-14);
        assert!(s.coeffs()[1..].iter().all(|v| v.norm() < 1e-14));
        let z = fast_synthesize(&Spectrum::<f64>::zeros(&g).unwrap());
        assert_eq!(z.max_abs(), 0.0);
    }

    #[test]
    fn fast_matches_naive() {
        let mut rng = seeded(7);
        for g in [spec(&[2, 3, 4, 2]), spec(&[5, 5]), spec(&[3]), GroupSpec::walsh(6).unwrap()] {
            let f: G = random_grid(&g, &mut rng).unwrap();
            let slow = analyze(&f);
            let fast = fast_analyze(&f);
            assert!(fast.max_abs_diff(&slow) <= 1e-12 * slow.max_abs());
            let back = fast_synthesize(&fast);
            assert!(back.max_abs_diff(&f) < 1e-12);
            assert!(synthesize(&slow).max_abs_diff(&f) < 1e-12);
        }
    }

    #[test]
    fn f32_backend_round_trips() {
        let g = spec(&[2, 3, 4]);
        let f = GridFunction::<f32>::from_fn(&g, |x| Complex::new(x.digits[0] as f32 - 0.5, x.digits[2] as f32)).unwrap();
        let back = fast_synthesize(&fast_analyze(&f));
        assert!(back.max_abs_diff(&f) < 1e-5);
    }

    #[test]
    fn lp_examples() {
        let g = spec(&[2, 3, 2]);
        let one = G::from_fn(&g, |_| Complex::new(1.0, 0.0)).unwrap();
        for p in [0.3, 0.5, 1.0, 2.0, 7.0] {
            assert!((lp_quasinorm(&one, p).unwrap() - 1.0).abs() < 1e-14);
        }
        // D_{M_n} = M_n on I_n: ‖·‖_p = M_n^{1-1/p}
        for n in 0..=3usize {
            let mn = base_sizes(&g).unwrap().get(n) as f64;
            let d = G::from_fn(&g, |x| Complex::new(if x.in_origin_cylinder(n) { mn } else { 0.0 }, 0.0)).unwrap();
            for p in [0.5, 1.0, 3.0] {
                assert!((lp_quasinorm(&d, p).unwrap() - mn.powf(1.0 - 1.0 / p)).abs() < 1e-12);
            }
        }
        assert!(matches!(lp_quasinorm(&one, 0.0), Err(Error::NonPositiveExponent(_))));
        assert!(lp_quasinorm(&one, -1.0).is_err());
    }

    #[test]
    fn maximal_examples() {
        let g = GroupSpec::walsh(3).unwrap();
        let c = G::from_fn(&g, |_| Complex::new(3.0, 0.0)).unwrap();
        assert!(dyadic_maximal(&c).max_abs_diff(&c) < 1e-15);
        let d2 = G::from_fn(&g, |x| Complex::new(if x.digits[0] == 0 { 2.0 } else { 0.0 }, 0.0)).unwrap();
        let m = dyadic_maximal(&d2);
        for (x, v) in g.points().unwrap().zip(m.values()) {
            let expect = if x.digits[0] == 0 { 2.0 } else { 1.0 };
            assert_eq!(v.re, expect);
        }
        assert!((hardy_quasinorm(&c, 0.5).unwrap() - 3.0).abs() < 1e-13);
    }

    #[test]
    fn martingale_levels() {
        let mut rng = seeded(3);
        let g = spec(&[3, 2, 2]);
        let f: G = random_grid(&g, &mut rng).unwrap();
        let m = martingale_of(&f);
        assert!(m.level(3).max_abs_diff(&f) < 1e-15);
        let mean = f.integral();
        assert!(m.level(0).values().iter().all(|v| (v - mean).norm() < 1e-14));
        assert!(m.defect() < 1e-13);
        let spectral = martingale_of_spectral(&f);
        for n in 0..=3 {
            assert!(spectral.level(n).max_abs_diff(m.level(n)) < 1e-12);
        }
        assert!(MartingaleSeq::new(vec![f.clone()]).is_err());
    }

    #[test]
    fn exact_conditional_expectation() {
        let g = spec(&[2, 3, 2]);
        let values: Vec<i64> = (0..12).map(|i| (i * 7 % 5) as i64 - 2).collect();
        let scaled = analyze_exact(&values, &g).unwrap();
        let sizes = base_sizes(&g).unwrap();
        for n in 0..=3 {
            let mn = sizes.get(n) as usize;
            let width = 12 / mn;
            let s = partial_sum_exact(&scaled, mn, &g).unwrap();
            for (cell, v) in s.iter().enumerate() {
                let block = cell / width * width;
                let sum: i64 = values[block..block + width].iter().sum();
                assert_eq!(v.as_integer(), Some(mn as i128 * sum as i128));
            }
        }
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let g = spec(&[2, 3]);
        let mut rng = seeded(1);
        let f: G = random_grid(&g, &mut rng).unwrap();
        let mut buf = Vec::new();
        f.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("index,real,imag\n"));
        assert_eq!(G::read_csv(&g, &buf[..]).unwrap(), f);
        assert!(G::read_csv(&g, "index,real,imag\n0,1,0\n".as_bytes()).is_err());
        assert!(G::read_csv(&g, "index,real,imag\n1,1,0\n".as_bytes()).is_err());
    }
}

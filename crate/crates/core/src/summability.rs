//! Partial sums, Fejér, Riesz logarithmic and Nörlund means, their
//! truncated maximal operators, and the Abel-transform form of the Riesz
//! means.
//!
//! Every mean is a finite combination of partial sums, so it acts on the
//! spectrum as a multiplier: `mean_n f = Σ_{v<n} w_n(v) f̂(v) ψ_v`. The
//! production path applies the multiplier and synthesizes with the fast
//! transform. [`direct`] keeps the defining double sums as an oracle.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::digits;
use crate::harmonic::harmonic;
use crate::scalar::Real;
use crate::system::RootTable;
use crate::transform::{fast_synthesize, GridFunction, Spectrum};

/// Nonnegative Nörlund weights `q_1, q_2, …` with `q_0 := 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSeq<T> {
    /// `q[k]` for `k ≥ 0`; `q[0]` is always zero.
    q: Vec<T>,
    /// `cumulative[n] = Q_n = Σ_{k=1}^n q_k`.
    cumulative: Vec<T>,
}

impl<T: Real> WeightSeq<T> {
    /// Builds the sequence from `q_1, q_2, …`.
    pub fn new(from_one: Vec<T>) -> Result<Self> {
        if let Some(bad) = from_one.iter().find(|w| !(**w >= T::zero()) || !w.is_finite()) {
            return Err(Error::InvalidArgument(format!("Nörlund weight {bad} is not a finite nonnegative number")));
        }
        let mut q = Vec::with_capacity(from_one.len() + 1);
        q.push(T::zero());
        q.extend(from_one);
        let mut cumulative = Vec::with_capacity(q.len());
        let mut acc = T::zero();
        for &w in &q {
            acc += w;
            cumulative.push(acc);
        }
        Ok(WeightSeq { q, cumulative })
    }

    pub fn constant(len: usize) -> Self {
        Self::new(vec![T::one(); len]).expect("positive")
    }

    /// `q_k = 1/k`, which turns the Nörlund mean into the logarithmic one.
    pub fn reciprocal(len: usize) -> Self {
        Self::new((1..=len).map(|k| T::count(k as u64).recip()).collect()).expect("positive")
    }

    /// `q_k`, zero past the stored range.
    pub fn q(&self, k: usize) -> T {
        self.q.get(k).copied().unwrap_or_else(T::zero)
    }

    /// `Q_n`; only defined within the stored range.
    pub fn cumulative(&self, n: usize) -> Option<T> {
        self.cumulative.get(n).copied()
    }

    pub fn len(&self) -> usize {
        self.q.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The family of means.
#[derive(Debug, Clone, PartialEq)]
pub enum MeanKind<T> {
    Partial,
    Fejer,
    RieszLog,
    NorlundLog,
    NorlundGeneral(WeightSeq<T>),
}

impl<T: Real> MeanKind<T> {
    pub fn name(&self) -> &'static str {
        match self {
            MeanKind::Partial => "partial",
            MeanKind::Fejer => "fejer",
            MeanKind::RieszLog => "riesz_log",
            MeanKind::NorlundLog => "norlund_log",
            MeanKind::NorlundGeneral(_) => "norlund_general",
        }
    }

    /// Smallest index for which the mean is defined.
    pub fn first_index(&self) -> usize {
        match self {
            MeanKind::Partial => 0,
            MeanKind::NorlundLog => 2,
            _ => 1,
        }
    }

    /// Multiplier `w_n(v)` for `v < n`.
    pub fn weights(&self, n: usize) -> Result<Vec<T>> {
        if n < self.first_index() {
            return Err(Error::InvalidArgument(format!("{} mean needs n >= {}", self.name(), self.first_index())));
        }
        let h = |k: usize| T::of(harmonic(k as u64));
        Ok(match self {
            MeanKind::Partial => vec![T::one(); n],
            MeanKind::Fejer => {
                let nn = T::count(n as u64);
                (0..n).map(|v| T::count((n - 1 - v) as u64) / nn).collect()
            }
            MeanKind::RieszLog => {
                let ln = h(n);
                (0..n).map(|v| (ln - h(v)) / ln).collect()
            }
            MeanKind::NorlundLog => {
                let ln = h(n);
                (0..n).map(|v| h(n - 1 - v) / ln).collect()
            }
            MeanKind::NorlundGeneral(w) => {
                let qn = w
                    .cumulative(n)
                    .ok_or_else(|| Error::InvalidArgument(format!("only {} Nörlund weights for n = {n}", w.len())))?;
                if qn <= T::zero() {
                    return Err(Error::InvalidArgument(format!("Q_{n} = 0")));
                }
                (0..n).map(|v| w.cumulative(n - 1 - v).unwrap() / qn).collect()
            }
        })
    }
}

impl<T: Real> fmt::Display for MeanKind<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl<T: Real> FromStr for MeanKind<T> {
    type Err = Error;

    /// Parses every kind except `norlund_general`, which needs weights.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "partial" => Ok(MeanKind::Partial),
            "fejer" => Ok(MeanKind::Fejer),
            "riesz_log" => Ok(MeanKind::RieszLog),
            "norlund_log" => Ok(MeanKind::NorlundLog),
            "norlund_general" => Err(Error::Parse("norlund_general requires explicit weights".into())),
            other => Err(Error::Parse(format!("unknown mean kind {other:?}"))),
        }
    }
}

fn check_n<T: Real>(s: &Spectrum<T>, n: usize) -> Result<()> {
    if n > s.len() {
        return Err(Error::IndexOutOfRange { value: n.to_string(), bound: (s.len() + 1).to_string() });
    }
    Ok(())
}

/// `mean_n f` for any kind.
pub fn mean<T: Real>(s: &Spectrum<T>, kind: &MeanKind<T>, n: usize) -> Result<GridFunction<T>> {
    check_n(s, n)?;
    Ok(fast_synthesize(&s.reweight(&kind.weights(n)?)))
}

/// `S_n f = Σ_{k<n} f̂(k)ψ_k`; `S_0 f = 0`.
pub fn partial_sum<T: Real>(s: &Spectrum<T>, n: usize) -> Result<GridFunction<T>> {
    mean(s, &MeanKind::Partial, n)
}

/// `σ_n f = (1/n) Σ_{k=0}^{n-1} S_k f`.
pub fn fejer<T: Real>(s: &Spectrum<T>, n: usize) -> Result<GridFunction<T>> {
    mean(s, &MeanKind::Fejer, n)
}

/// `R_n f = (1/l_n) Σ_{k=1}^{n} S_k f / k`.
pub fn riesz_log<T: Real>(s: &Spectrum<T>, n: usize) -> Result<GridFunction<T>> {
    mean(s, &MeanKind::RieszLog, n)
}

/// `(1/Q_n) Σ_{k=1}^{n} q_{n-k} S_k f` with `q_0 = 0`.
pub fn norlund_general<T: Real>(s: &Spectrum<T>, w: &WeightSeq<T>, n: usize) -> Result<GridFunction<T>> {
    mean(s, &MeanKind::NorlundGeneral(w.clone()), n)
}

/// `L_n f = (1/l_n) Σ_{k=1}^{n-1} S_k f / (n - k)`, for `n ≥ 2`.
pub fn norlund_log<T: Real>(s: &Spectrum<T>, n: usize) -> Result<GridFunction<T>> {
    mean(s, &MeanKind::NorlundLog, n)
}

/// Pointwise `sup_{first ≤ n ≤ cap} |mean_n f|`.
///
/// Partial, Fejér and Riesz means are advanced with running sums of
/// partial sums (`O(M_N)` per step); Nörlund means are not recursive in
/// `n` and go through the multiplier path.
pub fn maximal_mean<T: Real>(s: &Spectrum<T>, kind: &MeanKind<T>, cap: usize) -> Result<GridFunction<T>> {
    check_n(s, cap)?;
    let size = s.len();
    let mut best = vec![T::zero(); size];
    let mut absorb = |vals: &[Complex<T>]| {
        for (b, v) in best.iter_mut().zip(vals) {
            *b = b.max(v.norm());
        }
    };
    match kind {
        MeanKind::Partial | MeanKind::Fejer | MeanKind::RieszLog => {
            let spec = s.spec();
            let table = RootTable::<T>::new(spec);
            let mut partial = vec![Complex::<T>::zero(); size];
            let mut running = vec![Complex::<T>::zero(); size];
            let mut scratch = vec![Complex::<T>::zero(); size];
            for n in 1..=cap {
                let c = s.coeffs()[n - 1];
                if matches!(kind, MeanKind::Fejer) {
                    for (r, p) in running.iter_mut().zip(&partial) {
                        *r += *p;
                    }
                }
                if !c.is_zero() {
                    let d = digits((n - 1) as u64, spec)?.digits;
                    for (cell, p) in partial.iter_mut().enumerate() {
                        *p += c * table.psi_at_cell(&d, cell);
                    }
                }
                let nn = T::count(n as u64);
                match kind {
                    MeanKind::Partial => absorb(&partial),
                    MeanKind::Fejer => {
                        for (o, r) in scratch.iter_mut().zip(&running) {
                            *o = *r / nn;
                        }
                        absorb(&scratch);
                    }
                    _ => {
                        let ln = T::of(harmonic(n as u64));
                        for ((o, r), p) in scratch.iter_mut().zip(running.iter_mut()).zip(&partial) {
                            *r += *p / nn;
                            *o = *r / ln;
                        }
                        absorb(&scratch);
                    }
                }
            }
        }
        _ => {
            for n in kind.first_index()..=cap {
                absorb(mean(s, kind, n)?.values());
            }
        }
    }
    GridFunction::real(s.spec(), best)
}

/// `R_n f` assembled from Fejér means only:
///
/// `R_n f = (1/l_n) [ Σ_{k=1}^{n-1} σ_{k+1} f / k + ((n+1)/n) σ_{n+1} f ]`,
///
/// which follows from `S_k = (k+1)σ_{k+1} − kσ_k` and summation by parts.
/// Needs `n + 1 ≤ M_N`.
pub fn riesz_abel_form<T: Real>(s: &Spectrum<T>, n: usize) -> Result<GridFunction<T>> {
    if n == 0 {
        return Err(Error::InvalidArgument("Riesz mean needs n >= 1".into()));
    }
    check_n(s, n + 1)?;
    let mut acc = GridFunction::zeros(s.spec())?;
    for k in 1..n {
        let w = Complex::new(T::count(k as u64).recip(), T::zero());
        acc = acc.axpy(w, &fejer(s, k + 1)?);
    }
    let last = Complex::new(T::count((n + 1) as u64) / T::count(n as u64), T::zero());
    acc = acc.axpy(last, &fejer(s, n + 1)?);
    Ok(acc.scale(Complex::new(T::of(harmonic(n as u64)).recip(), T::zero())))
}

/// `max_x R*_{cap} f(x) / σ*_{cap+1} f(x)`.
///
/// Cells where the Fejér maximal function vanishes contribute `0` when the
/// Riesz maximal function vanishes too and `+∞` otherwise. The Abel form
/// gives `R_n = Σ_m c_m σ_m` with positive `c_m` summing to `1 + 1/l_n`,
/// so the result is at most 2 and in particular at most 3.
pub fn riesz_fejer_domination<T: Real>(s: &Spectrum<T>, cap: usize) -> Result<T> {
    check_n(s, cap + 1)?;
    let riesz = maximal_mean(s, &MeanKind::RieszLog, cap)?;
    let fej = maximal_mean(s, &MeanKind::Fejer, cap + 1)?;
    Ok(riesz.values().iter().zip(fej.values()).fold(T::zero(), |worst, (r, f)| {
        let ratio = if f.re > T::zero() {
            r.re / f.re
        } else if r.re > T::zero() {
            T::infinity()
        } else {
            T::zero()
        };
        worst.max(ratio)
    }))
}

/// Means by their defining sums over explicitly built partial sums.
///
/// Partial sums are accumulated term by term from `ψ_k` values, with no
/// multiplier algebra and no fast transform, so this module can serve as an
/// independent oracle for the production path.
pub mod direct {
    use super::*;

    /// `S_0 f, …, S_upto f`.
    pub fn partial_sums<T: Real>(s: &Spectrum<T>, upto: usize) -> Result<Vec<Vec<Complex<T>>>> {
        check_n(s, upto)?;
        let spec = s.spec();
        let table = RootTable::<T>::new(spec);
        let mut out = Vec::with_capacity(upto + 1);
        let mut cur = vec![Complex::<T>::zero(); s.len()];
        out.push(cur.clone());
        for k in 0..upto {
            let d = digits(k as u64, spec)?.digits;
            let c = s.coeffs()[k];
            for (cell, v) in cur.iter_mut().enumerate() {
                *v += c * table.psi_at_cell(&d, cell);
            }
            out.push(cur.clone());
        }
        Ok(out)
    }

    fn combine<T: Real>(s: &Spectrum<T>, sums: &[Vec<Complex<T>>], terms: &[(usize, T)]) -> Result<GridFunction<T>> {
        let mut acc = vec![Complex::<T>::zero(); s.len()];
        for &(k, w) in terms {
            for (a, v) in acc.iter_mut().zip(&sums[k]) {
                *a += *v * w;
            }
        }
        GridFunction::new(s.spec().clone(), acc)
    }

    /// `mean_n f` straight from its definition.
    pub fn mean<T: Real>(s: &Spectrum<T>, kind: &MeanKind<T>, n: usize) -> Result<GridFunction<T>> {
        if n < kind.first_index() {
            return Err(Error::InvalidArgument(format!("{kind} mean needs n >= {}", kind.first_index())));
        }
        let sums = partial_sums(s, n)?;
        let c = |k: usize| T::count(k as u64);
        let l = |k: usize| T::of(harmonic(k as u64));
        let terms: Vec<(usize, T)> = match kind {
            MeanKind::Partial => vec![(n, T::one())],
            MeanKind::Fejer => (0..n).map(|k| (k, c(n).recip())).collect(),
            MeanKind::RieszLog => (1..=n).map(|k| (k, (c(k) * l(n)).recip())).collect(),
            MeanKind::NorlundLog => (1..n).map(|k| (k, (c(n - k) * l(n)).recip())).collect(),
            MeanKind::NorlundGeneral(w) => {
                let qn = w.cumulative(n).ok_or_else(|| Error::InvalidArgument("too few weights".into()))?;
                if qn <= T::zero() {
                    return Err(Error::InvalidArgument(format!("Q_{n} = 0")));
                }
                (1..=n).map(|k| (k, w.q(n - k) / qn)).collect()
            }
        };
        combine(s, &sums, &terms)
    }

    /// Pointwise supremum over `n ≤ cap` of the directly computed means.
    pub fn maximal_mean<T: Real>(s: &Spectrum<T>, kind: &MeanKind<T>, cap: usize) -> Result<GridFunction<T>> {
        let mut best = vec![T::zero(); s.len()];
        for n in kind.first_index()..=cap {
            for (b, v) in best.iter_mut().zip(mean(s, kind, n)?.values()) {
                *b = b.max(v.norm());
            }
        }
        GridFunction::real(s.spec(), best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::random::{random_atom, random_spectrum, seeded};
    use crate::transform::fast_analyze;

    type S = Spectrum<f64>;

    fn walsh(n: usize) -> GroupSpec {
        GroupSpec::walsh(n).unwrap()
    }

    fn psi0(g: &GroupSpec) -> S {
        S::delta(g, 0).unwrap()
    }

    fn assert_const(f: &GridFunction<f64>, value: f64) {
        for v in f.values() {
            assert!((v - Complex::new(value, 0.0)).norm() < 1e-13, "{v} != {value}");
        }
    }

    #[test]
    fn partial_sum_examples() {
        let g = GroupSpec::new(vec![2, 3, 2]).unwrap();
        for k in 0..12 {
            let s = S::delta(&g, k).unwrap();
            for n in 0..=12 {
                let got = partial_sum(&s, n).unwrap();
                let expect = if k < n { fast_synthesize(&s) } else { GridFunction::zeros(&g).unwrap() };
                assert!(got.max_abs_diff(&expect) < 1e-14);
            }
        }
        let mut rng = seeded(1);
        let s: S = random_spectrum(&g, &mut rng).unwrap();
        assert!(partial_sum(&s, 12).unwrap().max_abs_diff(&fast_synthesize(&s)) < 1e-13);
        assert!(partial_sum(&s, 13).is_err());
    }

    #[test]
    fn means_of_constant() {
        let g = walsh(5);
        for n in 1..=32 {
            assert_const(&fejer(&psi0(&g), n).unwrap(), (n as f64 - 1.0) / n as f64);
            assert_const(&riesz_log(&psi0(&g), n).unwrap(), 1.0);
        }
        for n in 2..=32 {
            assert_const(&norlund_log(&psi0(&g), n).unwrap(), harmonic(n as u64 - 1) / harmonic(n as u64));
        }
        assert_const(&fejer(&psi0(&g), 1).unwrap(), 0.0);
        assert!(fejer(&psi0(&g), 0).is_err());
        assert!(riesz_log(&psi0(&g), 0).is_err());
        assert!(norlund_log(&psi0(&g), 1).is_err());
    }

    #[test]
    fn small_index_identities() {
        let g = walsh(4);
        let mut rng = seeded(2);
        let s: S = random_spectrum(&g, &mut rng).unwrap();
        let s1 = partial_sum(&s, 1).unwrap();
        assert!(riesz_log(&s, 1).unwrap().max_abs_diff(&s1) < 1e-14);
        assert!(norlund_log(&s, 2).unwrap().max_abs_diff(&s1.scale(Complex::new(1.0 / 1.5, 0.0))) < 1e-14);
        assert!(fejer(&s, 1).unwrap().max_abs() < 1e-15);
    }

    #[test]
    fn fejer_multiplier_matches_double_sum() {
        let g = GroupSpec::new(vec![3, 2, 2]).unwrap();
        let mut rng = seeded(3);
        let s: S = random_spectrum(&g, &mut rng).unwrap();
        for n in 1..=12 {
            let fast = fejer(&s, n).unwrap();
            let slow = direct::mean(&s, &MeanKind::Fejer, n).unwrap();
            assert!(fast.max_abs_diff(&slow) < 1e-12);
        }
    }

    #[test]
    fn all_kinds_match_direct() {
        let g = walsh(5);
        let mut rng = seeded(4);
        let s: S = random_spectrum(&g, &mut rng).unwrap();
        let kinds = [
            MeanKind::Partial,
            MeanKind::Fejer,
            MeanKind::RieszLog,
            MeanKind::NorlundLog,
            MeanKind::NorlundGeneral(WeightSeq::new(vec![0.5, 2.0, 0.0, 1.0, 3.0, 0.25, 1.0, 1.0, 2.0, 0.5]).unwrap()),
        ];
        for kind in &kinds {
            for n in kind.first_index().max(1)..=9 {
                let fast = mean(&s, kind, n).unwrap();
                let slow = direct::mean(&s, kind, n).unwrap();
                assert!(fast.max_abs_diff(&slow) < 1e-12, "{kind} n={n}");
            }
        }
        assert!(riesz_log(&s, 7).unwrap().max_abs_diff(&direct::mean(&s, &MeanKind::RieszLog, 7).unwrap()) < 1e-12);
    }

    #[test]
    fn norlund_general_special_cases() {
        let g = walsh(5);
        let mut rng = seeded(5);
        let s: S = random_spectrum(&g, &mut rng).unwrap();
        let sums = direct::partial_sums(&s, 32).unwrap();
        let ones = WeightSeq::constant(32);
        for n in 1..=20 {
            // q ≡ 1 gives (1/n) Σ_{k=1}^{n-1} S_k: the k = n term meets q_0 = 0
            let got = norlund_general(&s, &ones, n).unwrap();
            let expect: Vec<Complex<f64>> = (0..s.len())
                .map(|c| (1..n).map(|k| sums[k][c]).sum::<Complex<f64>>() / n as f64)
                .collect();
            assert!(got.max_abs_diff(&GridFunction::new(g.clone(), expect).unwrap()) < 1e-12);
        }
        let recip = WeightSeq::reciprocal(32);
        for n in 2..=32 {
            let a = norlund_general(&s, &recip, n).unwrap();
            let b = norlund_log(&s, n).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-12);
        }
        // one nonzero weight q_{n-1} selects S_1
        let mut w = vec![0.0; 10];
        w[5] = 2.0;
        let single = WeightSeq::new(w).unwrap();
        let got = norlund_general(&s, &single, 7).unwrap();
        assert!(got.max_abs_diff(&partial_sum(&s, 1).unwrap()) < 1e-13);
        assert!(norlund_general(&s, &WeightSeq::new(vec![0.0, 0.0]).unwrap(), 2).is_err());
        assert!(WeightSeq::<f64>::new(vec![1.0, -1.0]).is_err());
    }

    #[test]
    fn maximal_examples() {
        let g = walsh(6);
        let m = maximal_mean(&psi0(&g), &MeanKind::RieszLog, 64).unwrap();
        assert_const(&m, 1.0);
        let mut rng = seeded(6);
        let s: S = random_spectrum(&g, &mut rng).unwrap();
        for kind in [MeanKind::Partial, MeanKind::Fejer, MeanKind::RieszLog, MeanKind::NorlundLog] {
            let small = maximal_mean(&s, &kind, 20).unwrap();
            let large = maximal_mean(&s, &kind, 40).unwrap();
            assert!(small.values().iter().zip(large.values()).all(|(a, b)| a.re <= b.re));
            let oracle = direct::maximal_mean(&s, &kind, 40).unwrap();
            assert!(large.max_abs_diff(&oracle) < 1e-12, "{kind}");
        }
        let atom = random_atom::<f64, _>(&g, 0.5, &mut rng).unwrap();
        let a = fast_analyze(&atom.grid);
        let scale = atom.grid.max_abs();
        let got = maximal_mean(&a, &MeanKind::Fejer, 64).unwrap();
        let oracle = direct::maximal_mean(&a, &MeanKind::Fejer, 64).unwrap();
        assert!(got.max_abs_diff(&oracle) < 1e-12 * scale);
        assert!(maximal_mean(&a, &MeanKind::Fejer, 65).is_err());
    }

    #[test]
    fn abel_form_matches_riesz() {
        let g = walsh(6);
        // n = 1: R_1 = S_1 = 2σ_2
        let mut rng = seeded(7);
        let s: S = random_spectrum(&g, &mut rng).unwrap();
        let two_sigma2 = fejer(&s, 2).unwrap().scale(Complex::new(2.0, 0.0));
        assert!(riesz_abel_form(&s, 1).unwrap().max_abs_diff(&two_sigma2) < 1e-13);
        for n in [1, 2, 3, 5, 17, 63] {
            let abel = riesz_abel_form(&s, n).unwrap();
            let oracle = direct::mean(&s, &MeanKind::RieszLog, n).unwrap();
            assert!(abel.max_abs_diff(&oracle) < 1e-12, "n={n}");
        }
        assert_const(&riesz_abel_form(&psi0(&g), 9).unwrap(), 1.0);
        assert!(riesz_abel_form(&s, 64).is_err());
        assert!(riesz_abel_form(&s, 0).is_err());
    }

    #[test]
    fn domination_examples() {
        let g = walsh(8);
        assert!(riesz_fejer_domination(&psi0(&g), 200).unwrap() <= 3.0);
        assert_eq!(riesz_fejer_domination(&S::zeros(&g).unwrap(), 200).unwrap(), 0.0);
        let mut rng = seeded(8);
        for _ in 0..5 {
            let s: S = random_spectrum(&g, &mut rng).unwrap();
            let r = riesz_fejer_domination(&s, 200).unwrap();
            assert!(r <= 3.0, "{r}");
        }
        assert!(riesz_fejer_domination(&psi0(&g), 256).is_err());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("fejer".parse::<MeanKind<f64>>().unwrap(), MeanKind::Fejer);
        assert_eq!("riesz_log".parse::<MeanKind<f64>>().unwrap().to_string(), "riesz_log");
        assert!("norlund_general".parse::<MeanKind<f64>>().is_err());
        assert!("cesaro".parse::<MeanKind<f64>>().is_err());
    }
}

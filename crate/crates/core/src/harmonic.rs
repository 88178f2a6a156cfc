//! Harmonic numbers `l_n = Σ_{k=1}^n 1/k` at any index size.
//!
//! Up to [`DIRECT_LIMIT`] the values come from a cached Neumaier-compensated
//! prefix sum. Beyond it the asymptotic expansion
//! `ln n + γ + 1/(2n) − 1/(12n²) + 1/(120n⁴)` is used; its truncation error
//! is below `1/(252 n⁶) < 1e-38` there, so only `f64` rounding remains.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// Largest index served by direct compensated summation.
pub const DIRECT_LIMIT: u64 = 1 << 20;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Kahan-Babuška-Neumaier running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = NeumaierSum::default();
        iter.into_iter().for_each(|x| s.add(x));
        s
    }
}

/// Cached `l_0 = 0, l_1, …, l_max`.
#[derive(Debug, Clone)]
pub struct HarmonicTable {
    values: Vec<f64>,
}

impl HarmonicTable {
    pub fn new(max: usize) -> Self {
        let mut values = Vec::with_capacity(max + 1);
        let mut acc = NeumaierSum::default();
        values.push(0.0);
        for k in 1..=max {
            acc.add(1.0 / k as f64);
            values.push(acc.value());
        }
        HarmonicTable { values }
    }

    /// `l_n`; falls back to [`harmonic`] beyond the table.
    pub fn get(&self, n: u64) -> f64 {
        match self.values.get(n as usize) {
            Some(&v) => v,
            None => harmonic(n),
        }
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }
}

fn shared() -> &'static HarmonicTable {
    static TABLE: OnceLock<HarmonicTable> = OnceLock::new();
    TABLE.get_or_init(|| HarmonicTable::new(DIRECT_LIMIT as usize))
}

fn asymptotic(ln_n: f64, inv_n: f64) -> f64 {
    let inv2 = inv_n * inv_n;
    ln_n + EULER_GAMMA + 0.5 * inv_n - inv2 / 12.0 + inv2 * inv2 / 120.0
}

/// `l_n` for `n` up to `u64::MAX`.
pub fn harmonic(n: u64) -> f64 {
    if n <= DIRECT_LIMIT {
        return shared().values[n as usize];
    }
    asymptotic((n as f64).ln(), 1.0 / n as f64)
}

/// `log2(n)` for arbitrarily large `n > 0`.
pub fn log2_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().expect("below 2^1000").log2();
    }
    let shift = bits - 64;
    (n >> shift).to_f64().expect("64-bit head").log2() + shift as f64
}

/// `l_n` for a wide index.
pub fn harmonic_big(n: &BigUint) -> f64 {
    match n.to_u64() {
        Some(small) => harmonic(small),
        None => {
            let lg = log2_big(n);
            asymptotic(lg * std::f64::consts::LN_2, (-lg).exp2())
        }
    }
}

/// `l_b − l_a = Σ_{j=a+1}^{b} 1/j` for `a ≤ b`, without cancellation when
/// both are large.
pub fn harmonic_diff(a: &BigUint, b: &BigUint) -> f64 {
    assert!(a <= b, "harmonic_diff needs a <= b");
    if a == b {
        return 0.0;
    }
    let small = BigUint::from(DIRECT_LIMIT);
    if a <= &small {
        return harmonic_big(b) - harmonic_big(a);
    }
    // ψ(b+1) − ψ(a+1) with ψ(z+1) = ln z + 1/(2z) − 1/(12z²) + …
    let gap = b - a;
    let ratio = ratio_f64(&gap, a);
    let (inv_a, inv_b) = ((-log2_big(a)).exp2(), (-log2_big(b)).exp2());
    ratio.ln_1p() + 0.5 * (inv_b - inv_a) - (inv_b * inv_b - inv_a * inv_a) / 12.0
}

/// `num / den` as `f64`, accurate for any magnitudes with a finite quotient.
pub fn ratio_f64(num: &BigUint, den: &BigUint) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    (log2_big(num) - log2_big(den)).exp2()
}

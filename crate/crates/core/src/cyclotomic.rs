//! Exact arithmetic for sums of roots of unity.
//!
//! Character values of a bounded Vilenkin group are roots of unity whose
//! order divides `L = lcm(m_j)`. Sums of them live in the ring of integers
//! `Z[ζ_L]`, represented here in the power basis `1, ζ, …, ζ^{φ(L)-1}`
//! after reduction modulo the cyclotomic polynomial `Φ_L`. Two elements are
//! equal iff their reduced coefficient vectors are equal, which makes the
//! kernel identities checkable with zero tolerance.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::group::GroupSpec;
use crate::scalar::{unit_root, Real};

/// `exp(2πi·num/den)` kept as an exact reduced fraction of a turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };

    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "root of unity with zero denominator");
        let num = num % den;
        let g = num.gcd(&den);
        RootOfUnity { num: num / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Order of the root; `1` for the identity.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn pow(self, k: u64) -> Self {
        let num = ((u128::from(self.num) * u128::from(k)) % u128::from(self.den)) as u64;
        RootOfUnity::new(num, self.den)
    }

    pub fn conj(self) -> Self {
        RootOfUnity::new(self.den - self.num, self.den)
    }

    pub fn to_complex<T: Real>(self) -> Complex<T> {
        unit_root(self.num, self.den)
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;

    fn mul(self, rhs: Self) -> Self {
        let den = self.den.lcm(&rhs.den);
        let num = self.num * (den / self.den) + rhs.num * (den / rhs.den);
        RootOfUnity::new(num, den)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.num, self.den)
    }
}

/// `Z[ζ_L]` with its cyclotomic modulus and reduced powers of `ζ`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloRing {
    order: u64,
    modulus: Vec<i128>,
    powers: Vec<Vec<i128>>,
}

impl CycloRing {
    pub fn new(order: u64) -> Arc<Self> {
        assert!(order >= 1);
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        let powers = (0..order)
            .map(|t| {
                let mut mono = vec![0i128; t as usize + 1];
                mono[t as usize] = 1;
                reduce(mono, &modulus, degree)
            })
            .collect();
        Arc::new(CycloRing { order, modulus, powers })
    }

    pub fn for_group(spec: &GroupSpec) -> Arc<Self> {
        let order = spec.radices().iter().fold(1u64, |acc, &m| acc.lcm(&u64::from(m)));
        Self::new(order)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `φ(L)`, the dimension of the power basis.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i128] {
        &self.modulus
    }
}

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i128> {
    // x^n - 1 = Π_{d | n} Φ_d(x)
    let mut poly = vec![0i128; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        poly = exact_divide(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn exact_divide(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    let mut quot = vec![0i128; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd] / lead;
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "cyclotomic division left a remainder");
    quot
}

fn reduce(mut poly: Vec<i128>, modulus: &[i128], degree: usize) -> Vec<i128> {
    // Φ is monic, so long division stays in Z.
    for i in (degree..poly.len()).rev() {
        let c = poly[i];
        if c != 0 {
            for (j, &mj) in modulus.iter().enumerate() {
                poly[i - degree + j] -= c * mj;
            }
        }
    }
    poly.resize(degree, 0);
    poly
}

/// An element of `Z[ζ_L]` in reduced power-basis form.
#[derive(Clone)]
pub struct CycloInt {
    ring: Arc<CycloRing>,
    coeffs: Vec<i128>,
}

impl CycloInt {
    pub fn zero(ring: &Arc<CycloRing>) -> Self {
        CycloInt { ring: ring.clone(), coeffs: vec![0; ring.degree()] }
    }

    pub fn integer(ring: &Arc<CycloRing>, n: i128) -> Self {
        let mut z = Self::zero(ring);
        z.coeffs[0] = n;
        z
    }

    pub fn root(ring: &Arc<CycloRing>, r: RootOfUnity) -> Self {
        assert!(ring.order % r.den() == 0, "root order {} does not divide {}", r.den(), ring.order);
        let t = r.num() * (ring.order / r.den());
        CycloInt { ring: ring.clone(), coeffs: ring.powers[t as usize].clone() }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The rational integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<i128> {
        self.coeffs[1..].iter().all(|&c| c == 0).then(|| self.coeffs[0])
    }

    pub fn to_complex<T: Real>(&self) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (t, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let z: Complex<T> = unit_root(t as u64, self.ring.order);
                acc += z * T::of(c as f64);
            }
        }
        acc
    }
}

impl PartialEq for CycloInt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order == other.ring.order && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloInt(L={}, {:?})", self.ring.order, self.coeffs)
    }
}

impl Add for CycloInt {
    type Output = CycloInt;

    fn add(mut self, rhs: Self) -> Self {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl Sub for CycloInt {
    type Output = CycloInt;

    fn sub(mut self, rhs: Self) -> Self {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl Neg for CycloInt {
    type Output = CycloInt;

    fn neg(mut self) -> Self {
        self.coeffs.iter_mut().for_each(|c| *c = -*c);
        self
    }
}

impl Mul for CycloInt {
    type Output = CycloInt;

    fn mul(self, rhs: Self) -> Self {
        let d = self.ring.degree();
        let mut out = vec![0i128; d];
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in rhs.coeffs.iter().enumerate().filter(|(_, &b)| b != 0) {
                let t = (i + j) % self.ring.order as usize;
                for (o, &p) in out.iter_mut().zip(&self.ring.powers[t]) {
                    *o += a * b * p;
                }
            }
        }
        CycloInt { ring: self.ring, coeffs: out }
    }
}

/// Arithmetic backend for character sums.
///
/// Implemented by `Complex<T>` for bulk numerics and by [`CycloInt`] for
/// exact identity checks. Kernel code is written once against this trait.
pub trait CharacterScalar:
    Clone + PartialEq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    type Context: Clone;

    fn context(spec: &GroupSpec) -> Self::Context;
    fn zero(ctx: &Self::Context) -> Self;
    fn root(ctx: &Self::Context, r: RootOfUnity) -> Self;
    /// A natural number as a scalar, if representable.
    fn natural(ctx: &Self::Context, n: &BigUint) -> Option<Self>;
}

impl<T: Real> CharacterScalar for Complex<T> {
    type Context = ();

    fn context(_: &GroupSpec) {}

    fn zero(_: &()) -> Self {
        Complex::new(T::zero(), T::zero())
    }

    fn root(_: &(), r: RootOfUnity) -> Self {
        r.to_complex()
    }

    fn natural(_: &(), n: &BigUint) -> Option<Self> {
        let v = T::of(n.to_f64()?);
        v.is_finite().then(|| Complex::new(v, T::zero()))
    }
}

impl CharacterScalar for CycloInt {
    type Context = Arc<CycloRing>;

    fn context(spec: &GroupSpec) -> Arc<CycloRing> {
        CycloRing::for_group(spec)
    }

    fn zero(ctx: &Arc<CycloRing>) -> Self {
        CycloInt::zero(ctx)
    }

    fn root(ctx: &Arc<CycloRing>, r: RootOfUnity) -> Self {
        CycloInt::root(ctx, r)
    }

    fn natural(ctx: &Arc<CycloRing>, n: &BigUint) -> Option<Self> {
        // leave headroom for reduction coefficients
        let v = n.to_i128().filter(|v| v.unsigned_abs() < 1u128 << 100)?;
        Some(CycloInt::integer(ctx, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of magnitude 2.
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
    }

    #[test]
    fn roots_sum_to_zero() {
        for order in [2u64, 3, 4, 5, 6, 12, 60] {
            let ring = CycloRing::new(order);
            let total = (0..order)
                .map(|t| CycloInt::root(&ring, RootOfUnity::new(t, order)))
                .fold(CycloInt::zero(&ring), |a, b| a + b);
            assert!(total.is_zero(), "order {order}");
        }
    }

    #[test]
    fn root_multiplication_matches_angles() {
        let ring = CycloRing::new(12);
        for a in 0..12u64 {
            for b in 0..12u64 {
                let ra = RootOfUnity::new(a, 12);
                let rb = RootOfUnity::new(b, 12);
                assert_eq!(
                    CycloInt::root(&ring, ra) * CycloInt::root(&ring, rb),
                    CycloInt::root(&ring, ra * rb)
                );
            }
        }
    }

    #[test]
    fn root_of_unity_reduces() {
        assert_eq!(RootOfUnity::new(4, 6), RootOfUnity::new(2, 3));
        assert_eq!(RootOfUnity::new(6, 6), RootOfUnity::ONE);
        assert_eq!(RootOfUnity::new(1, 2).pow(2), RootOfUnity::ONE);
        assert_eq!(RootOfUnity::new(1, 3) * RootOfUnity::new(1, 2), RootOfUnity::new(5, 6));
        assert_eq!(RootOfUnity::new(1, 4).conj(), RootOfUnity::new(3, 4));
        let z: Complex<f64> = RootOfUnity::new(1, 2).to_complex();
        assert_eq!(z, Complex::new(-1.0, 0.0));
    }

    #[test]
    fn complex_image_agrees() {
        let ring = CycloRing::new(15);
        let x = CycloInt::root(&ring, RootOfUnity::new(2, 15)) + CycloInt::integer(&ring, 7)
            - CycloInt::root(&ring, RootOfUnity::new(1, 3));
        let expect = unit_root::<f64>(2, 15) + Complex::new(7.0, 0.0) - unit_root::<f64>(1, 3);
        assert!((x.to_complex::<f64>() - expect).norm() < 1e-12);
    }
}

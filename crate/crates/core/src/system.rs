//! Generalized Rademacher functions, the Vilenkin system and Dirichlet
//! kernels, evaluated pointwise.
//!
//! Character values are returned as exact [`RootOfUnity`] angles; kernel
//! sums are generic over [`CharacterScalar`] so the same code runs on
//! `Complex<f64>` and on exact cyclotomic integers.

use num_bigint::BigUint;
use num_complex::Complex;
use num_integer::Integer;

use crate::cyclotomic::{CharacterScalar, CycloInt, RootOfUnity};
use crate::error::{Error, Result};
use crate::group::{base_sizes, wide_base_sizes, wide_digits, GroupSpec, Idx, Point};
use crate::scalar::{unit_root, Real};

/// `r_k(x) = exp(2πi x_k / m_k)`.
pub fn rademacher(k: usize, x: &Point, spec: &GroupSpec) -> Result<RootOfUnity> {
    if k >= spec.depth() {
        return Err(Error::RankOutOfRange { rank: k, depth: spec.depth() });
    }
    spec.check_point(x)?;
    Ok(RootOfUnity::new(u64::from(x.digits[k]), u64::from(spec.radix(k))))
}

/// `ψ_n(x) = Π_k r_k(x)^{n_k}`.
pub fn psi(n: &Idx, x: &Point, spec: &GroupSpec) -> RootOfUnity {
    psi_digits(&n.digits, x, spec)
}

/// `ψ` for an index given by its digits (which may describe a wide index).
pub fn psi_digits(n_digits: &[u32], x: &Point, spec: &GroupSpec) -> RootOfUnity {
    n_digits
        .iter()
        .zip(&x.digits)
        .zip(spec.radices())
        .filter(|((&nk, &xk), _)| nk != 0 && xk != 0)
        .fold(RootOfUnity::ONE, |acc, ((&nk, &xk), &m)| {
            acc * RootOfUnity::new(u64::from(nk) * u64::from(xk), u64::from(m))
        })
}

/// Values of `ψ_k` on every cell, in cell order.
///
/// Angles are accumulated as integers modulo `L = lcm(m_j)` and looked up
/// in a table of `L` roots, so every entry is one of `L` fixed values.
pub fn psi_grid<T: Real>(k: u64, spec: &GroupSpec) -> Result<Vec<Complex<T>>> {
    let idx = crate::group::digits(k, spec)?;
    let table = RootTable::<T>::new(spec);
    let size = spec.size()?;
    let mut out = Vec::with_capacity(size);
    for cell in 0..size {
        out.push(table.psi_at_cell(&idx.digits, cell));
    }
    Ok(out)
}

/// Lookup table of `exp(2πi t/L)` for the group's `L = lcm(m_j)`.
#[derive(Debug, Clone)]
pub(crate) struct RootTable<T> {
    order: u64,
    radices: Vec<u32>,
    roots: Vec<Complex<T>>,
}

impl<T: Real> RootTable<T> {
    pub(crate) fn new(spec: &GroupSpec) -> Self {
        let order = spec.radices().iter().fold(1u64, |acc, &m| acc.lcm(&u64::from(m)));
        let roots = (0..order).map(|t| unit_root(t, order)).collect();
        RootTable { order, radices: spec.radices().to_vec(), roots }
    }

    pub(crate) fn psi_at_cell(&self, n_digits: &[u32], mut cell: usize) -> Complex<T> {
        let mut t = 0u64;
        for j in (0..self.radices.len()).rev() {
            let m = self.radices[j] as usize;
            let xj = (cell % m) as u64;
            cell /= m;
            t += u64::from(n_digits[j]) * xj * (self.order / m as u64);
        }
        self.roots[(t % self.order) as usize]
    }
}

/// `D_n(x) = Σ_{k<n} ψ_k(x)` by direct summation; `n ≤ M_N`.
pub fn dirichlet_naive<S: CharacterScalar>(
    n: u64,
    x: &Point,
    spec: &GroupSpec,
    ctx: &S::Context,
) -> Result<S> {
    spec.check_point(x)?;
    check_index_bound(n, spec)?;
    let mut acc = S::zero(ctx);
    let mut idx = vec![0u32; spec.depth()];
    for _ in 0..n {
        acc = acc + S::root(ctx, psi_digits(&idx, x, spec));
        increment(&mut idx, spec);
    }
    Ok(acc)
}

/// All of `D_0(x), …, D_upto(x)` in one pass of prefix sums.
pub fn dirichlet_prefix<S: CharacterScalar>(
    upto: u64,
    x: &Point,
    spec: &GroupSpec,
    ctx: &S::Context,
) -> Result<Vec<S>> {
    spec.check_point(x)?;
    check_index_bound(upto, spec)?;
    let mut out = Vec::with_capacity(upto as usize + 1);
    let mut acc = S::zero(ctx);
    out.push(acc.clone());
    let mut idx = vec![0u32; spec.depth()];
    for _ in 0..upto {
        acc = acc + S::root(ctx, psi_digits(&idx, x, spec));
        out.push(acc.clone());
        increment(&mut idx, spec);
    }
    Ok(out)
}

fn check_index_bound(n: u64, spec: &GroupSpec) -> Result<()> {
    let total = base_sizes(spec)?.total();
    if n > total {
        return Err(Error::IndexOutOfRange { value: n.to_string(), bound: format!("{}", total + 1) });
    }
    Ok(())
}

fn increment(digits: &mut [u32], spec: &GroupSpec) {
    for (d, &m) in digits.iter_mut().zip(spec.radices()) {
        *d += 1;
        if *d < m {
            return;
        }
        *d = 0;
    }
}

/// `D_{M_n}(x) = M_n·1[x ∈ I_n]`.
pub fn dirichlet_mn_closed<S: CharacterScalar>(
    n: usize,
    x: &Point,
    spec: &GroupSpec,
    ctx: &S::Context,
) -> Result<S> {
    if n > spec.depth() {
        return Err(Error::RankOutOfRange { rank: n, depth: spec.depth() });
    }
    spec.check_point(x)?;
    if !x.in_origin_cylinder(n) {
        return Ok(S::zero(ctx));
    }
    let mn = &wide_base_sizes(spec)[n];
    S::natural(ctx, mn).ok_or(Error::Overflow("D_{M_n} value"))
}

/// `D_n(x)` for arbitrarily large `n < M_N` without enumerating `ψ_k`.
///
/// Splitting `k < n` by the highest coordinate where the digits of `k` and
/// `n` differ gives
///
/// `D_n(x) = Σ_j ψ_{n^{(>j)}}(x) · (Σ_{u<n_j} r_j(x)^u) · D_{M_j}(x)`,
///
/// where `n^{(>j)}` keeps only the digits above `j`. Each `D_{M_j}` is
/// closed form, so the cost is `O(Σ_j m_j)` regardless of `n`.
pub fn dirichlet_lazy<S: CharacterScalar>(
    n: &BigUint,
    x: &Point,
    spec: &GroupSpec,
    ctx: &S::Context,
) -> Result<S> {
    spec.check_point(x)?;
    let nd = wide_digits(n, spec)?;
    let sizes = wide_base_sizes(spec);
    let zeros = x.zero_prefix();
    let mut acc = S::zero(ctx);
    let mut tail = RootOfUnity::ONE;
    for j in (0..spec.depth()).rev() {
        let nj = u64::from(nd[j]);
        if nj > 0 && j <= zeros {
            let rj = RootOfUnity::new(u64::from(x.digits[j]), u64::from(spec.radix(j)));
            let geometric = (0..nj).fold(S::zero(ctx), |s, u| s + S::root(ctx, rj.pow(u)));
            let mj = S::natural(ctx, &sizes[j]).ok_or(Error::Overflow("M_j in lazy kernel"))?;
            acc = acc + S::root(ctx, tail) * geometric * mj;
        }
        if nj > 0 && x.digits[j] != 0 {
            tail = tail * RootOfUnity::new(nj * u64::from(x.digits[j]), u64::from(spec.radix(j)));
        }
    }
    Ok(acc)
}

/// Both sides of `D_{j+M_k}(x) = D_{M_k}(x) + ψ_{M_k}(x)·D_j(x)`.
pub fn dirichlet_shift_sides<S: CharacterScalar>(
    j: u64,
    k: usize,
    x: &Point,
    spec: &GroupSpec,
    ctx: &S::Context,
) -> Result<(S, S)> {
    let mk = base_sizes(spec)?.get(k.min(spec.depth()));
    if k > spec.depth() || j >= mk {
        return Err(Error::Precondition(format!("shift identity needs j < M_k (j={j}, k={k})")));
    }
    let lhs = dirichlet_lazy::<S>(&BigUint::from(j + mk), x, spec, ctx)?;
    let psi_mk = if k < spec.depth() {
        RootOfUnity::new(u64::from(x.digits[k]), u64::from(spec.radix(k)))
    } else {
        RootOfUnity::ONE
    };
    let rhs = dirichlet_mn_closed::<S>(k, x, spec, ctx)?
        + S::root(ctx, psi_mk) * dirichlet_lazy::<S>(&BigUint::from(j), x, spec, ctx)?;
    Ok((lhs, rhs))
}

/// Checks the shift identity in exact cyclotomic arithmetic.
pub fn dirichlet_shift_check(j: u64, k: usize, x: &Point, spec: &GroupSpec) -> Result<bool> {
    if j + base_sizes(spec)?.get(k.min(spec.depth())) > base_sizes(spec)?.total() {
        return Err(Error::Precondition("j + M_k exceeds M_N".into()));
    }
    let ctx = CycloInt::context(spec);
    let (lhs, rhs) = dirichlet_shift_sides::<CycloInt>(j, k, x, spec, &ctx)?;
    Ok(lhs == rhs)
}

//! Arithmetic of a bounded Vilenkin group truncated at a finite depth.
//!
//! The group is modelled by its first `N` coordinates. Every function the
//! crate handles is constant on rank-`N` cylinders ("cells"), so integrals
//! are finite sums with the exact cell measure `1/M_N`.
//!
//! Two orderings are used throughout and never mixed up:
//!
//! * **indices** `n = Σ n_j M_j` put coordinate 0 in the least significant
//!   position (the generalized number system);
//! * **cells** are enumerated digit-lexicographically with coordinate 0 the
//!   most significant, so that every rank-`n` cylinder is a contiguous run of
//!   `M_N / M_n` cells.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Radix sequence `m_0, …, m_{N-1}` of a truncated bounded Vilenkin group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    radices: Vec<u32>,
}

impl GroupSpec {
    pub fn new(radices: Vec<u32>) -> Result<Self> {
        if radices.is_empty() {
            return Err(Error::EmptyRadices);
        }
        if let Some((coord, &radix)) = radices.iter().enumerate().find(|(_, &m)| m < 2) {
            return Err(Error::InvalidRadix { coord, radix });
        }
        Ok(Self { radices })
    }

    /// Extends `pattern` periodically to `depth` coordinates.
    pub fn periodic(pattern: &[u32], depth: usize) -> Result<Self> {
        if pattern.is_empty() || depth == 0 {
            return Err(Error::EmptyRadices);
        }
        Self::new(pattern.iter().copied().cycle().take(depth).collect())
    }

    /// The Walsh-Paley group: `m ≡ 2` at the given depth.
    pub fn walsh(depth: usize) -> Result<Self> {
        Self::periodic(&[2], depth)
    }

    pub fn depth(&self) -> usize {
        self.radices.len()
    }

    pub fn radices(&self) -> &[u32] {
        &self.radices
    }

    pub fn radix(&self, coord: usize) -> u32 {
        self.radices[coord]
    }

    pub fn is_walsh(&self) -> bool {
        self.radices.iter().all(|&m| m == 2)
    }

    /// Largest radix; finite by construction.
    pub fn bound(&self) -> u32 {
        self.radices.iter().copied().max().unwrap_or(2)
    }

    /// `M_N` as a `usize`, for dense grids.
    pub fn size(&self) -> Result<usize> {
        let top = *base_sizes(self)?.values().last().unwrap();
        usize::try_from(top).map_err(|_| Error::Overflow("grid size"))
    }

    pub fn zero_point(&self) -> Point {
        Point { digits: vec![0; self.depth()] }
    }

    /// Point at the given cell index (coordinate 0 most significant).
    pub fn point_of_cell(&self, mut cell: usize) -> Point {
        let mut digits = vec![0u32; self.depth()];
        for j in (0..self.depth()).rev() {
            let m = self.radices[j] as usize;
            digits[j] = (cell % m) as u32;
            cell /= m;
        }
        Point { digits }
    }

    pub fn cell_of_point(&self, x: &Point) -> usize {
        x.digits
            .iter()
            .zip(&self.radices)
            .fold(0usize, |acc, (&d, &m)| acc * m as usize + d as usize)
    }

    /// Iterator over all cells' points in cell order.
    pub fn points(&self) -> Result<impl Iterator<Item = Point> + '_> {
        let n = self.size()?;
        Ok((0..n).map(move |c| self.point_of_cell(c)))
    }

    /// Checks that `x` conforms to this group.
    pub fn check_point(&self, x: &Point) -> Result<()> {
        if x.digits.len() != self.depth() {
            return Err(Error::DepthMismatch { expected: self.depth(), got: x.digits.len() });
        }
        for (coord, (&digit, &radix)) in x.digits.iter().zip(&self.radices).enumerate() {
            if digit >= radix {
                return Err(Error::DigitOutOfRange { coord, digit, radix });
            }
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    /// Canonical textual form, parseable by [`GroupSpec::from_str`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_walsh() {
            return write!(f, "walsh({})", self.depth());
        }
        let list: Vec<String> = self.radices.iter().map(u32::to_string).collect();
        write!(f, "radices = [{}], depth = {}", list.join(","), self.depth())
    }
}

#[derive(Deserialize, Serialize)]
struct GroupConfig {
    radices: Vec<u32>,
    depth: Option<usize>,
}

#[derive(Deserialize)]
struct Wrapped {
    g: GroupConfig,
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `walsh(N)`, the one-line form `radices = [2,3,2,2], depth = 4`,
    /// or a TOML document with `radices` and optional `depth` keys. A radix
    /// list shorter than `depth` is repeated periodically.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("walsh(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unterminated walsh(...) in {s:?}")))?;
            let depth: usize = inner
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad walsh depth {inner:?}")))?;
            return GroupSpec::walsh(depth);
        }
        let cfg = toml::from_str::<GroupConfig>(s)
            .or_else(|_| toml::from_str::<Wrapped>(&format!("g = {{ {s} }}")).map(|w| w.g))
            .map_err(|e| Error::Parse(format!("group spec {s:?}: {e}")))?;
        let depth = cfg.depth.unwrap_or(cfg.radices.len());
        if cfg.radices.len() > depth {
            return Err(Error::Parse(format!(
                "{} radices given for depth {depth}",
                cfg.radices.len()
            )));
        }
        GroupSpec::periodic(&cfg.radices, depth)
    }
}

/// Place values `M_0 = 1, M_{k+1} = m_k M_k` of the generalized number system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSizes(Vec<u64>);

impl BaseSizes {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, k: usize) -> u64 {
        self.0[k]
    }

    pub fn total(&self) -> u64 {
        *self.0.last().unwrap()
    }
}

/// `M_0..=M_N`; fails instead of wrapping when `M_N` leaves `u64`.
pub fn base_sizes(spec: &GroupSpec) -> Result<BaseSizes> {
    let mut out = Vec::with_capacity(spec.depth() + 1);
    let mut acc = 1u64;
    out.push(acc);
    for &m in spec.radices() {
        acc = acc.checked_mul(u64::from(m)).ok_or(Error::Overflow("base sizes M_k"))?;
        out.push(acc);
    }
    Ok(BaseSizes(out))
}

/// Arbitrary-precision place values for index arithmetic far beyond `u64`.
pub fn wide_base_sizes(spec: &GroupSpec) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(spec.depth() + 1);
    let mut acc = BigUint::one();
    out.push(acc.clone());
    for &m in spec.radices() {
        acc *= m;
        out.push(acc.clone());
    }
    out
}

/// A group element, truncated to the model depth.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub digits: Vec<u32>,
}

impl Point {
    pub fn new(digits: Vec<u32>, spec: &GroupSpec) -> Result<Self> {
        let p = Point { digits };
        spec.check_point(&p)?;
        Ok(p)
    }

    pub fn depth(&self) -> usize {
        self.digits.len()
    }

    /// Largest `n` with `x ∈ I_n`, i.e. the number of leading zero digits.
    pub fn zero_prefix(&self) -> usize {
        self.digits.iter().take_while(|&&d| d == 0).count()
    }

    /// `x ∈ I_n = I_n(0)`.
    pub fn in_origin_cylinder(&self, n: usize) -> bool {
        self.zero_prefix() >= n
    }
}

/// A natural number below `M_N` together with its digits `n_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idx {
    pub value: u64,
    pub digits: Vec<u32>,
}

impl Idx {
    /// Value recomposed from the digits.
    pub fn recompose(&self, spec: &GroupSpec) -> u64 {
        self.digits
            .iter()
            .zip(spec.radices())
            .rev()
            .fold(0u64, |acc, (&d, &m)| acc * u64::from(m) + u64::from(d))
    }
}

/// Digit decomposition `n = Σ n_j M_j` with `0 ≤ n_j < m_j`.
pub fn digits(n: u64, spec: &GroupSpec) -> Result<Idx> {
    let mut digits = vec![0u32; spec.depth()];
    let mut rest = n;
    for (j, &m) in spec.radices().iter().enumerate() {
        digits[j] = (rest % u64::from(m)) as u32;
        rest /= u64::from(m);
    }
    if rest != 0 {
        let bound = base_sizes(spec)
            .map(|b| b.total().to_string())
            .unwrap_or_else(|_| "M_N".into());
        return Err(Error::IndexOutOfRange { value: n.to_string(), bound });
    }
    Ok(Idx { value: n, digits })
}

/// Digits of a wide index; the same contract as [`digits`].
pub fn wide_digits(n: &BigUint, spec: &GroupSpec) -> Result<Vec<u32>> {
    let mut digits = vec![0u32; spec.depth()];
    let mut rest = n.clone();
    for (j, &m) in spec.radices().iter().enumerate() {
        if rest.is_zero() {
            break;
        }
        let m = BigUint::from(m);
        let d = &rest % &m;
        digits[j] = u32::try_from(d).expect("digit below radix");
        rest /= m;
    }
    if !rest.is_zero() {
        return Err(Error::IndexOutOfRange {
            value: n.to_string(),
            bound: format!("M_{}", spec.depth()),
        });
    }
    Ok(digits)
}

/// The interval `I_rank(x)`: points agreeing with `base` on `0..rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cylinder {
    pub rank: usize,
    pub base: Vec<u32>,
}

impl Cylinder {
    pub fn contains(&self, y: &Point) -> bool {
        y.digits.len() >= self.rank && y.digits[..self.rank] == self.base[..]
    }

    /// The contiguous cell range covered by this cylinder.
    pub fn cells(&self, spec: &GroupSpec) -> Result<std::ops::Range<usize>> {
        let sizes = base_sizes(spec)?;
        let width = (sizes.total() / sizes.get(self.rank)) as usize;
        let first = self
            .base
            .iter()
            .zip(spec.radices())
            .fold(0usize, |acc, (&d, &m)| acc * m as usize + d as usize)
            * width;
        Ok(first..first + width)
    }
}

pub fn cylinder_of(x: &Point, rank: usize) -> Result<Cylinder> {
    if rank > x.depth() {
        return Err(Error::RankOutOfRange { rank, depth: x.depth() });
    }
    Ok(Cylinder { rank, base: x.digits[..rank].to_vec() })
}

/// Haar measure `1/M_rank`, exactly.
pub fn cylinder_measure(c: &Cylinder, spec: &GroupSpec) -> Result<Ratio<u64>> {
    if c.rank > spec.depth() {
        return Err(Error::RankOutOfRange { rank: c.rank, depth: spec.depth() });
    }
    Ok(Ratio::new(1, base_sizes(spec)?.get(c.rank)))
}

/// Coordinatewise addition modulo `m_j`.
pub fn group_add(x: &Point, y: &Point, spec: &GroupSpec) -> Point {
    let digits = x
        .digits
        .iter()
        .zip(&y.digits)
        .zip(spec.radices())
        .map(|((&a, &b), &m)| (a + b) % m)
        .collect();
    Point { digits }
}

pub fn group_neg(x: &Point, spec: &GroupSpec) -> Point {
    let digits = x.digits.iter().zip(spec.radices()).map(|(&a, &m)| (m - a) % m).collect();
    Point { digits }
}

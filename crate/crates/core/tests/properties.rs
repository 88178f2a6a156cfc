//! Property tests across modules: random groups, random inputs, random
//! indices, each checked against an independent path.

use num_bigint::BigUint;
use num_complex::Complex;
use proptest::prelude::*;

use vilenkin::counterexample::{riesz_kernel_sum, Exponent};
use vilenkin::cyclotomic::{CharacterScalar, CycloInt};
use vilenkin::group::{base_sizes, digits, group_add, group_neg, GroupSpec};
use vilenkin::random::{random_atom, random_spectrum, seeded};
use vilenkin::summability::{direct, mean, riesz_abel_form, riesz_fejer_domination, MeanKind, WeightSeq};
use vilenkin::system::{dirichlet_lazy, dirichlet_naive, psi};
use vilenkin::transform::{analyze, fast_analyze, fast_synthesize, GridFunction};

fn small_group() -> impl Strategy<Value = GroupSpec> {
    prop::collection::vec(2u32..=5, 1..=4)
        .prop_filter("at most 256 cells", |r| r.iter().product::<u32>() <= 256)
        .prop_map(|r| GroupSpec::new(r).unwrap())
}

fn grid(g: &GroupSpec, seed: u64) -> GridFunction<f64> {
    vilenkin::random::random_grid(g, &mut seeded(seed)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn digits_round_trip(g in small_group(), n in 0u64..256) {
        let total = base_sizes(&g).unwrap().total();
        let n = n % total;
        prop_assert_eq!(digits(n, &g).unwrap().recompose(&g), n);
    }

    #[test]
    fn characters_are_multiplicative_in_the_point(g in small_group(), a in 0usize..256, b in 0usize..256, n in 0u64..256) {
        let size = g.size().unwrap();
        let (x, y) = (g.point_of_cell(a % size), g.point_of_cell(b % size));
        let idx = digits(n % size as u64, &g).unwrap();
        let sum = group_add(&x, &y, &g);
        prop_assert_eq!(psi(&idx, &sum, &g), psi(&idx, &x, &g) * psi(&idx, &y, &g));
        prop_assert_eq!(psi(&idx, &group_neg(&x, &g), &g), psi(&idx, &x, &g).conj());
    }

    #[test]
    fn lazy_kernel_is_exact(g in small_group(), cell in 0usize..256, n in 0u64..256) {
        let size = g.size().unwrap();
        let x = g.point_of_cell(cell % size);
        let n = n % size as u64;
        let ctx = CycloInt::context(&g);
        let lazy = dirichlet_lazy::<CycloInt>(&BigUint::from(n), &x, &g, &ctx).unwrap();
        prop_assert_eq!(lazy, dirichlet_naive::<CycloInt>(n, &x, &g, &ctx).unwrap());
    }

    #[test]
    fn fast_transform_is_linear_and_invertible(g in small_group(), s1 in any::<u64>(), s2 in any::<u64>(), c in -3.0f64..3.0) {
        let (f, h) = (grid(&g, s1), grid(&g, s2));
        let combo = f.axpy(Complex::new(c, 0.0), &h);
        let lhs = fast_analyze(&combo);
        let rhs = fast_analyze(&f).axpy(Complex::new(c, 0.0), &fast_analyze(&h));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        prop_assert!(fast_synthesize(&lhs).max_abs_diff(&combo) < 1e-12);
        prop_assert!(lhs.max_abs_diff(&analyze(&combo)) < 1e-12);
    }

    #[test]
    fn means_agree_with_their_definitions(g in small_group(), seed in any::<u64>(), n in 1usize..40, w in prop::collection::vec(0.0f64..2.0, 40)) {
        let size = g.size().unwrap();
        let n = 1 + (n - 1) % size;
        let s = random_spectrum::<f64, _>(&g, &mut seeded(seed)).unwrap();
        let mut kinds = vec![MeanKind::Partial, MeanKind::Fejer, MeanKind::RieszLog];
        if n >= 2 {
            kinds.push(MeanKind::NorlundLog);
        }
        let weights = WeightSeq::new(w).unwrap();
        if weights.cumulative(n).unwrap() > 0.0 {
            kinds.push(MeanKind::NorlundGeneral(weights));
        }
        for kind in &kinds {
            let fast = mean(&s, kind, n).unwrap();
            prop_assert!(fast.max_abs_diff(&direct::mean(&s, kind, n).unwrap()) < 1e-12, "{}", kind);
        }
    }

    #[test]
    fn abel_form_reproduces_riesz(g in small_group(), seed in any::<u64>(), n in 1usize..64) {
        let size = g.size().unwrap();
        prop_assume!(size >= 3);
        let n = 1 + (n - 1) % (size - 1);
        let s = random_spectrum::<f64, _>(&g, &mut seeded(seed)).unwrap();
        let abel = riesz_abel_form(&s, n).unwrap();
        prop_assert!(abel.max_abs_diff(&direct::mean(&s, &MeanKind::RieszLog, n).unwrap()) < 1e-12);
    }

    #[test]
    fn riesz_maximal_is_at_most_three_fejer_maximal(g in small_group(), seed in any::<u64>(), p in 0.3f64..1.0) {
        let size = g.size().unwrap();
        prop_assume!(size >= 4);
        let mut rng = seeded(seed);
        let a = random_atom::<f64, _>(&g, p, &mut rng).unwrap();
        prop_assert!(riesz_fejer_domination(&fast_analyze(&a.grid), size - 1).unwrap() <= 3.0);
        let s = random_spectrum::<f64, _>(&g, &mut rng).unwrap();
        prop_assert!(riesz_fejer_domination(&s, size - 1).unwrap() <= 3.0);
    }

    #[test]
    fn riesz_kernel_sum_grows_with_the_range(m_bits in 21u32..200, k1 in 2u32..60, k2 in 2u32..60) {
        let m = BigUint::from(1u32) << m_bits as usize;
        let (lo, hi) = (k1.min(k2).min(m_bits), k1.max(k2).min(m_bits));
        prop_assume!(lo < hi);
        let a = riesz_kernel_sum(&m, &(BigUint::from(1u32) << lo as usize));
        let b = riesz_kernel_sum(&m, &(BigUint::from(1u32) << hi as usize));
        prop_assert!(a < b);
        // Σ_{i<K} i/(M+i) lies between K(K−1)/(2(M+K)) and K(K−1)/(2M)
        let upper = 2.0 * f64::from(hi) - f64::from(m_bits) - 1.0;
        prop_assert!(b.log2() <= upper + 1e-9);
        prop_assert!(b.log2() >= upper - 1.0 - 1e-9);
    }

    #[test]
    fn exponent_display_round_trips(num in 1u32..50, den in 1u32..50) {
        prop_assume!(num <= den);
        let p = Exponent::new(num, den).unwrap();
        prop_assert_eq!(p.to_string().parse::<Exponent>().unwrap(), p);
    }
}

use pdm_core::nu::{nu_quantize, NuCoefficients};
use proptest::prelude::*;

mod common;
use common::hypergeometric_residual;

/// (ã₁, ã₂, ã₄) with 4ã₁+1 ≥ 0 and C = ã₁ − ã₂ + ã₄ ≥ 0.
fn valid() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    (-0.25..3.0f64, 0.0..3.0f64, 0.0..4.0f64, -20.0..20.0f64).prop_map(|(a1, a4, c, a3)| (a1, a1 + a4 - c, a3, a4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn k_minus_makes_a_perfect_square((a1, a2, a3, a4) in valid()) {
        let c = NuCoefficients::new(a1, a2, a3, a4).unwrap();
        let (a, b, cc) = c.radicand_quadratic(c.k_minus().unwrap());
        prop_assert!(a >= -1e-12);
        prop_assert!((b * b - 4.0 * a * cc).abs() <= 1e-10 * (b * b).max(1.0));
    }

    #[test]
    fn pi_minus_solves_the_square_root_equation((a1, a2, a3, a4) in valid(), xi in 0.001..0.999f64) {
        let c = NuCoefficients::new(a1, a2, a3, a4).unwrap();
        let (slope, intercept) = c.pi_minus().unwrap();
        let (a, b, cc) = c.radicand_quadratic(c.k_minus().unwrap());
        let lhs = (slope * xi + intercept + xi / 2.0).powi(2);
        let rhs = a * xi * xi + b * xi + cc;
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn tau_slope_is_negative((a1, a2, a3, a4) in valid()) {
        let sol = NuCoefficients::new(a1, a2, a3, a4).unwrap().solve().unwrap();
        prop_assert!(sol.tau_slope() < 0.0);
    }

    #[test]
    fn quantized_lambda_matches_lambda_n((a1, a2, _a3, a4) in valid(), n in 0u32..=5) {
        let a3 = nu_quantize(a1, a2, a4, n).unwrap();
        let c = NuCoefficients::new(a1, a2, a3, a4).unwrap();
        let (l, ln) = (c.lambda().unwrap(), c.lambda_n(n).unwrap());
        prop_assert!((l - ln).abs() <= 1e-10 * ln.abs().max(1.0), "{} vs {}", l, ln);
    }

    #[test]
    fn weight_is_nonnegative((a1, a2, a3, a4) in valid(), xi in 0.001..0.999f64) {
        prop_assert!(NuCoefficients::new(a1, a2, a3, a4).unwrap().weight(xi).unwrap() >= 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn chi_solves_the_hypergeometric_equation((a1, a2, _a3, a4) in valid(), n in 0u32..=5) {
        let a3 = nu_quantize(a1, a2, a4, n).unwrap();
        let c = NuCoefficients::new(a1, a2, a3, a4).unwrap();
        let r = hypergeometric_residual(&c, n);
        prop_assert!(r <= 1e-7, "residual {}", r);
    }
}

#[test]
fn chi_residual_detects_unquantized_coefficients() {
    let a3 = nu_quantize(0.5, -0.2, 1.0, 2).unwrap();
    let c = NuCoefficients::new(0.5, -0.2, a3 + 1.0, 1.0).unwrap();
    assert!(hypergeometric_residual(&c, 2) > 1e-2);
}

#[test]
fn eigenfunction_has_n_interior_zeros() {
    let a3 = 0.0;
    let c = NuCoefficients::new(0.4, -0.3, a3, 0.7).unwrap();
    for n in 0..=5 {
        let values: Vec<f64> = (1..2000).map(|i| c.eigenfunction(n, f64::from(i) / 2000.0).unwrap()).collect();
        let changes = values.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
        assert_eq!(changes, n as usize);
    }
}

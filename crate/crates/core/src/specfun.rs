//! Generalized Laguerre and Jacobi polynomials by forward three-term
//! recurrence, and Simpson-rule normalization of sampled radial functions.

use crate::error::{Error, Result};
use crate::grid::RadialFunction;

/// Generalized Laguerre polynomial L_n^a(x).
pub fn laguerre(n: u32, a: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + a - x;
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Jacobi polynomial P_n^{(a,b)}(x), a, b > −1.
pub fn jacobi(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for k in 2..=n {
        let k = f64::from(k);
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Result of [`normalize`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Normalization {
    /// N such that ∫|N f|² dρ = 1.
    pub factor: f64,
    /// ∫|f|² dρ before scaling.
    pub norm_sq: f64,
    /// Relative quadrature error, estimated from the half-resolution rule.
    pub rel_error: f64,
}

/// Normalizes `f` in the flat measure dρ with composite Simpson quadrature.
///
/// The grid has to reach into the decaying tail: if the integrand at the
/// last node, spread over the whole span, would carry more than 1e−6 of the
/// norm, the sample is rejected as non-integrable.
pub fn normalize(f: &RadialFunction) -> Result<Normalization> {
    let grid = f.grid();
    let h = grid.step();
    let density: Vec<f64> = f.values().iter().enumerate().map(|(i, v)| v * v * grid.jacobian(i)).collect();

    let fine = simpson(&density, h);
    if !(fine > 0.0) {
        return Err(Error::InvalidGrid("radial function vanishes identically".into()));
    }
    let coarse_density: Vec<f64> = density.iter().step_by(2).copied().collect();
    let coarse = simpson(&coarse_density, 2.0 * h);

    let span = h * (density.len() - 1) as f64;
    let tail = density[density.len() - 1] * span / fine;
    if tail > 1e-6 {
        return Err(Error::DivergentTail { fraction: tail });
    }

    Ok(Normalization { factor: fine.sqrt().recip(), norm_sq: fine, rel_error: (fine - coarse).abs() / 15.0 / fine })
}

/// Composite Simpson on equally spaced samples. An odd number of intervals
/// closes with the 3/8 rule on the last three.
pub(crate) fn simpson(y: &[f64], h: f64) -> f64 {
    let n = y.len();
    match n {
        0 | 1 => 0.0,
        2 => 0.5 * h * (y[0] + y[1]),
        3 => h / 3.0 * (y[0] + 4.0 * y[1] + y[2]),
        _ => {
            let intervals = n - 1;
            let even_end = if intervals.is_multiple_of(2) { n } else { n - 3 };
            let mut sum = y[0] + y[even_end - 1];
            for (i, v) in y[1..even_end - 1].iter().enumerate() {
                sum += if i % 2 == 0 { 4.0 * v } else { 2.0 * v };
            }
            let mut total = h / 3.0 * sum;
            if even_end != n {
                let t = &y[n - 4..];
                total += 3.0 * h / 8.0 * (t[0] + 3.0 * t[1] + 3.0 * t[2] + t[3]);
            }
            total
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::RadialGrid;

    #[test]
    fn laguerre_low_orders() {
        for &(a, x) in &[(0.0, 0.3), (1.5, 2.0), (0.5, 7.25), (3.0, -1.0)] {
            assert_eq!(laguerre(0, a, x), 1.0);
            assert!((laguerre(1, a, x) - (1.0 + a - x)).abs() < 1e-14);
            let l2 = 0.5 * (a + 1.0) * (a + 2.0) - (a + 2.0) * x + 0.5 * x * x;
            assert!((laguerre(2, a, x) - l2).abs() < 1e-13);
            let l3 = (a + 1.0) * (a + 2.0) * (a + 3.0) / 6.0 - 0.5 * (a + 2.0) * (a + 3.0) * x
                + 0.5 * (a + 3.0) * x * x
                - x * x * x / 6.0;
            assert!((laguerre(3, a, x) - l3).abs() < 1e-13 * l3.abs().max(1.0));
        }
        // (a+1)(a+2)/2 − (a+2)x + x²/2 at a = 1, x = 2: 3 − 6 + 2
        assert_eq!(laguerre(2, 1.0, 2.0), -1.0);
    }

    #[test]
    fn jacobi_low_orders() {
        for &(a, b, x) in &[(0.0, 0.0, 0.3), (1.5, 0.5, -0.7), (0.25, 2.0, 0.9)] {
            assert_eq!(jacobi(0, a, b, x), 1.0);
            assert!((jacobi(1, a, b, 1.0) - (a + 1.0)).abs() < 1e-14);
            // P_2 from the explicit hypergeometric sum
            let z = (1.0 - x) / 2.0;
            let p2 = (a + 1.0) * (a + 2.0) / 2.0
                * (1.0 - 2.0 * (a + b + 3.0) / (a + 1.0) * z
                    + (a + b + 3.0) * (a + b + 4.0) / ((a + 1.0) * (a + 2.0)) * z * z);
            assert!((jacobi(2, a, b, x) - p2).abs() < 1e-13);
        }
        // Legendre special case
        let x: f64 = 0.4;
        assert!((jacobi(3, 0.0, 0.0, x) - 0.5 * (5.0 * x.powi(3) - 3.0 * x)).abs() < 1e-14);
    }

    #[test]
    fn jacobi_reflection_symmetry() {
        for n in 0..=10 {
            for i in 0..50 {
                let x = -1.0 + 2.0 * (i as f64 + 0.5) / 50.0;
                let lhs = jacobi(n, 0.7, 2.3, x);
                let rhs = if n % 2 == 0 { 1.0 } else { -1.0 } * jacobi(n, 2.3, 0.7, -x);
                assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0), "n={n} x={x}");
            }
        }
    }

    #[test]
    fn jacobi_zero_count() {
        for n in 0..8u32 {
            let samples: Vec<f64> = (0..=4000).map(|i| jacobi(n, 1.3, 0.4, -1.0 + i as f64 / 2000.0)).collect();
            let changes = samples.windows(2).filter(|w| w[0] * w[1] < 0.0).count();
            assert_eq!(changes, n as usize);
        }
    }

    #[test]
    fn simpson_is_exact_on_cubics() {
        for n in [5, 6, 7, 10] {
            let h = 1.0 / (n - 1) as f64;
            let y: Vec<f64> = (0..n).map(|i| (i as f64 * h).powi(3)).collect();
            assert!((simpson(&y, h) - 0.25).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn normalize_exponential() {
        let g = RadialGrid::uniform(1e-10, 40.0, 40_001).unwrap();
        let f = g.sample(|r| (-r).exp()).unwrap();
        let n = normalize(&f).unwrap();
        assert!((n.factor - 2f64.sqrt()).abs() < 1e-8, "{}", n.factor);
        assert!(n.rel_error < 1e-8);
    }

    #[test]
    fn normalize_on_log_grid() {
        let g = RadialGrid::logarithmic(1e-12, 40.0, 4001).unwrap();
        let f = g.sample(|r| r * (-r).exp()).unwrap();
        // ∫ρ² e^{−2ρ} = 1/4
        let n = normalize(&f).unwrap();
        assert!((n.factor - 2.0).abs() < 1e-9, "{}", n.factor);
    }

    #[test]
    fn tail_truncation_is_negligible() {
        // e^{−ρ} decays with length 1; both grids reach well past 20 decay lengths.
        let short = RadialGrid::uniform(1e-10, 25.0, 25_001).unwrap();
        let long = RadialGrid::uniform(1e-10, 50.0, 50_001).unwrap();
        let a = normalize(&short.sample(|r| (-r).exp()).unwrap()).unwrap().factor;
        let b = normalize(&long.sample(|r| (-r).exp()).unwrap()).unwrap().factor;
        assert!((a - b).abs() < 1e-8);
    }

    #[test]
    fn normalize_rejects_growing_sample() {
        let g = RadialGrid::uniform(0.1, 10.0, 1001).unwrap();
        let f = g.sample(|r| r.exp()).unwrap();
        assert!(matches!(normalize(&f), Err(Error::DivergentTail { .. })));
    }
}

//! Closed-form eigenpairs of the cycle `C_n` and the top-frequency product
//! identity `x_{(n-1)/2} · y_{(n-1)/2} = -x_1 / 2` for odd `n`.
//!
//! `x_k(v) = sin(2πkv/n)` and `y_k(v) = cos(2πkv/n)` are Laplacian eigenvectors
//! of `C_n` with eigenvalue `2 - 2cos(2πk/n)`. These formulas are independent
//! of the Jacobi solver, so they serve as its oracle.

use std::f64::consts::PI;

use serde::Serialize;

use crate::bounds::{theorem1_check, CheckTolerances};
use crate::error::{Error, Result};
use crate::graph::{cycle, VertexFunction};
use crate::spectra::{normalize_sign, rayleigh_quotient, EigenDecomposition, Operator};

/// `(sin, cos)` of `2π·k·v/n`, with `k·v` reduced mod `n` in integer
/// arithmetic before scaling. Multiples of a quarter turn are exact.
fn phase(n: usize, k: usize, v: usize) -> (f64, f64) {
    let r = (k as u128 * v as u128 % n as u128) as usize;
    match (4 * r == n, 2 * r == n, 4 * r == 3 * n) {
        _ if r == 0 => (0.0, 1.0),
        (true, _, _) => (1.0, 0.0),
        (_, true, _) => (0.0, -1.0),
        (_, _, true) => (-1.0, 0.0),
        _ => (2.0 * PI * r as f64 / n as f64).sin_cos(),
    }
}

pub fn cycle_eigenvalue(n: usize, k: usize) -> f64 {
    2.0 - 2.0 * (2.0 * PI * k as f64 / n as f64).cos()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycleEigenpair {
    pub n: usize,
    pub k: usize,
    pub eigenvalue: f64,
    /// `x_k`
    pub sine: VertexFunction,
    /// `y_k`
    pub cosine: VertexFunction,
}

pub fn cycle_eigenpair(n: usize, k: usize) -> Result<CycleEigenpair> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    if k > n / 2 {
        return Err(Error::InvalidParameter(format!(
            "frequency {k} outside 0..={}",
            n / 2
        )));
    }
    let (sine, cosine): (Vec<f64>, Vec<f64>) = (0..n).map(|v| phase(n, k, v)).unzip();
    Ok(CycleEigenpair {
        n,
        k,
        eigenvalue: cycle_eigenvalue(n, k),
        sine: sine.into(),
        cosine: cosine.into(),
    })
}

/// The full orthonormal eigenbasis of `C_n` in descending eigenvalue order,
/// built from the closed forms. The identically zero `x_0` (and `x_{n/2}`
/// for even `n`) are dropped; each frequency `k` contributes `x_k` then `y_k`.
pub fn cycle_eigenbasis(n: usize) -> Result<EigenDecomposition> {
    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Vec::with_capacity(n);
    for k in (0..=n / 2).rev() {
        let pair = cycle_eigenpair(n, k)?;
        let singleton = k == 0 || 2 * k == n;
        let mut vectors = Vec::new();
        if !singleton {
            vectors.push(pair.sine);
        }
        vectors.push(pair.cosine);
        for v in vectors {
            let mut v = v.normalized().into_vec();
            normalize_sign(&mut v, 1e-9);
            eigenvalues.push(pair.eigenvalue);
            eigenvectors.push(VertexFunction::new(v));
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
        source: Operator::Laplacian,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductIdentity {
    pub product: VertexFunction,
    /// `-x_1 / 2`, i.e. `½ sin(-2πv/n)`.
    pub reference: VertexFunction,
    /// `max_v |product(v) - reference(v)|`
    pub max_deviation: f64,
    /// `max_v |product(v) + y_1(v)/2|`: the same comparison against the
    /// cosine mode, which does not hold (kept so callers can report it).
    pub cosine_deviation: f64,
}

fn require_odd(n: usize) -> Result<()> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "needs odd n >= 5, got {n}"
        )));
    }
    Ok(())
}

fn max_abs_diff(a: &VertexFunction, b: &VertexFunction) -> f64 {
    a.iter()
        .zip(b.iter())
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

/// Compares `x_{(n-1)/2} · y_{(n-1)/2}` with `-x_1 / 2` entrywise.
///
/// `sin(θ)cos(θ) = ½ sin(2θ)` and `2·(n-1)/2 ≡ -1 (mod n)`, so the product
/// is `½ sin(-2πv/n)`, the sine mode of frequency 1.
pub fn top_pair_product_identity(n: usize) -> Result<ProductIdentity> {
    require_odd(n)?;
    let top = cycle_eigenpair(n, (n - 1) / 2)?;
    let first = cycle_eigenpair(n, 1)?;
    let product: VertexFunction = top
        .sine
        .iter()
        .zip(top.cosine.iter())
        .map(|(a, b)| a * b)
        .collect();
    let reference = first.sine.scaled(-0.5);
    Ok(ProductIdentity {
        max_deviation: max_abs_diff(&product, &reference),
        cosine_deviation: max_abs_diff(&product, &first.cosine.scaled(-0.5)),
        product,
        reference,
    })
}

/// How close the product-energy bound comes on `C_n` for the top sin/cos pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpnessRecord {
    pub n: usize,
    /// Laplacian Rayleigh quotient of the product, `2 - 2cos(2π/n)`.
    pub actual: f64,
    /// `4π²/n²`
    pub asymptotic: f64,
    /// Signless quotient of each factor, `2 - 2cos(π/n)`.
    pub epsilon: f64,
    /// Normalized bound (squared denominator).
    pub bound: f64,
    pub ratio: f64,
    /// Rayleigh quotient of the product as evaluated on the graph.
    pub measured_actual: f64,
    /// Normalized bound as evaluated by the general check.
    pub measured_bound: f64,
}

pub fn sharpness_experiment(n: usize) -> Result<SharpnessRecord> {
    require_odd(n)?;
    let top = cycle_eigenpair(n, (n - 1) / 2)?;
    let (phi, psi) = (&top.sine, &top.cosine);
    let actual = cycle_eigenvalue(n, 1);
    let epsilon = 2.0 - 2.0 * (PI / n as f64).cos();
    let product_sq = n as f64 / 8.0;
    let bound = 2.0
        * epsilon
        * (phi.norm_inf().powi(2) * psi.norm_sq() + phi.norm_sq() * psi.norm_inf().powi(2))
        / product_sq;

    let g = cycle(n)?;
    let report = theorem1_check(&g, phi, psi, &CheckTolerances::default())?;
    let normalized = report
        .related
        .first()
        .expect("nonzero product has a normalized form");
    let product: VertexFunction = phi.iter().zip(psi.iter()).map(|(a, b)| a * b).collect();
    Ok(SharpnessRecord {
        n,
        actual,
        asymptotic: 4.0 * PI * PI / (n * n) as f64,
        epsilon,
        bound,
        ratio: actual / bound,
        measured_actual: rayleigh_quotient(&g, &product, Operator::Laplacian)?,
        measured_bound: normalized.rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let p = cycle_eigenpair(4, 2).unwrap();
        assert!((p.eigenvalue - 4.0).abs() < 1e-15);
        assert_eq!(p.cosine.as_slice(), &[1.0, -1.0, 1.0, -1.0]);
        assert!(p.sine.iter().all(|&x| x == 0.0));

        let p = cycle_eigenpair(6, 0).unwrap();
        assert_eq!(p.eigenvalue, 0.0);
        assert!(p.cosine.iter().all(|&x| x == 1.0));
        assert!(p.sine.iter().all(|&x| x == 0.0));

        assert!(cycle_eigenpair(6, 4).is_err());
        assert!(cycle_eigenpair(2, 0).is_err());
    }

    #[test]
    fn top_eigenvalue_of_c101() {
        let p = cycle_eigenpair(101, 50).unwrap();
        let exact = 2.0 + 2.0 * (PI / 101.0).cos();
        assert!((p.eigenvalue - exact).abs() < 1e-14);
        let leading = 4.0 - PI * PI / (101.0 * 101.0);
        assert!((p.eigenvalue - leading).abs() < 1e-6);
    }

    #[test]
    fn closed_forms_are_laplacian_eigenvectors() {
        for n in [3, 4, 9, 12, 101] {
            let g = cycle(n).unwrap();
            for k in 0..=n / 2 {
                let p = cycle_eigenpair(n, k).unwrap();
                for v in [&p.sine, &p.cosine] {
                    let lv = g.apply_laplacian(v).unwrap();
                    let defect = lv.plus_scaled(-p.eigenvalue, v).norm_inf();
                    assert!(defect < 1e-10, "n={n} k={k} defect {defect}");
                }
                if 0 < k && 2 * k < n {
                    assert!((p.sine.norm_sq() - n as f64 / 2.0).abs() < 1e-10);
                    assert!((p.cosine.norm_sq() - n as f64 / 2.0).abs() < 1e-10);
                }
                assert!(p.sine.dot(&p.cosine).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn eigenbasis_is_orthonormal_and_complete() {
        for n in [5, 12, 101] {
            let basis = cycle_eigenbasis(n).unwrap();
            assert_eq!(basis.len(), n);
            assert!(basis.orthonormality_defect() < 1e-10);
            let g = cycle(n).unwrap();
            assert!(basis.residuals(&g).unwrap().iter().all(|&r| r < 1e-10));
            assert!(basis.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn product_identity() {
        for n in [5, 7, 101] {
            let id = top_pair_product_identity(n).unwrap();
            assert!(id.max_deviation <= 1e-12, "n={n}: {}", id.max_deviation);
            assert!(id.cosine_deviation > 0.5);
        }
        let id = top_pair_product_identity(7).unwrap();
        let rq = rayleigh_quotient(&cycle(7).unwrap(), &id.product, Operator::Laplacian).unwrap();
        assert!((rq - cycle_eigenvalue(7, 1)).abs() < 1e-12);
        assert!(top_pair_product_identity(8).is_err());
    }

    #[test]
    fn sharpness_matches_measured_values() {
        for n in [51, 101, 201] {
            let r = sharpness_experiment(n).unwrap();
            assert!((r.actual - r.measured_actual).abs() < 1e-12);
            assert!((r.bound - r.measured_bound).abs() < 1e-9 * r.bound);
            assert!(r.ratio <= 1.0);
            assert!((r.actual - r.asymptotic).abs() <= 0.05 * r.asymptotic);
        }
    }

    #[test]
    fn sharpness_ratio_tends_to_a_quarter() {
        // ‖x‖₂² = ‖y‖₂² = n/2, ‖xy‖₂² = n/8, ‖·‖∞ → 1 and ε ≈ π²/n² give
        // bound ≈ 2(π²/n²)(n/2 + n/2)/(n/8) = 16π²/n² against 4π²/n²
        let ratios: Vec<f64> = [51, 101, 201, 401, 801]
            .iter()
            .map(|&n| sharpness_experiment(n).unwrap().ratio)
            .collect();
        for w in ratios.windows(2) {
            assert!((w[1] - 0.25).abs() <= (w[0] - 0.25).abs() + 1e-12);
        }
        assert!((ratios[4] - 0.25).abs() < 1e-3);
    }
}

//! Pointwise products of eigenvectors: the all-pairs heatmap of product
//! Rayleigh quotients, and sign patterns.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexFunction};
use crate::spectra::{dirichlet_energy, is_numerically_zero, EigenDecomposition};

/// Entrywise product `f · g`.
pub fn hadamard(f: &VertexFunction, g: &VertexFunction) -> Result<VertexFunction> {
    if f.len() != g.len() {
        return Err(Error::LengthMismatch {
            expected: f.len(),
            actual: g.len(),
        });
    }
    Ok(f.iter().zip(g.iter()).map(|(a, b)| a * b).collect())
}

/// `values[i][j]` is the Laplacian Rayleigh quotient of `φ_i · φ_j`, with
/// indices in the decomposition's (descending) order. Pairs whose product
/// is numerically zero are masked.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductHeatmap {
    n: usize,
    values: Vec<f64>,
    mask: Vec<bool>,
}

impl ProductHeatmap {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` for masked pairs.
    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        let idx = i * self.n + j;
        (!self.mask[idx]).then_some(self.values[idx])
    }

    pub fn is_masked(&self, i: usize, j: usize) -> bool {
        self.mask[i * self.n + j]
    }

    pub fn masked_count(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    /// Largest unmasked entry, or `None` if everything is masked.
    pub fn max_defined(&self) -> Option<f64> {
        self.values
            .iter()
            .zip(&self.mask)
            .filter(|(_, &m)| !m)
            .map(|(&v, _)| v)
            .reduce(f64::max)
    }

    pub fn rows(&self) -> impl Iterator<Item = Vec<Option<f64>>> + '_ {
        (0..self.n).map(move |i| (0..self.n).map(|j| self.get(i, j)).collect())
    }
}

fn product_quotient(g: &Graph, f: &VertexFunction, h: &VertexFunction) -> Result<Option<f64>> {
    let p = hadamard(f, h)?;
    if is_numerically_zero(&p) {
        return Ok(None);
    }
    Ok(Some(dirichlet_energy(g, &p)? / p.norm_sq()))
}

/// Computes every unordered pair once and mirrors it, so the matrix is
/// exactly symmetric. Rows are computed in parallel; each entry depends
/// only on its own pair.
pub fn product_heatmap(g: &Graph, dec: &EigenDecomposition) -> Result<ProductHeatmap> {
    let n = dec.len();
    for v in &dec.eigenvectors {
        g.check_len(v)?;
    }
    let upper: Vec<Vec<Option<f64>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i..n)
                .map(|j| product_quotient(g, &dec.eigenvectors[i], &dec.eigenvectors[j]))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut values = vec![0.0; n * n];
    let mut mask = vec![false; n * n];
    for (i, row) in upper.into_iter().enumerate() {
        for (offset, entry) in row.into_iter().enumerate() {
            let j = i + offset;
            let (v, m) = match entry {
                Some(v) => (v, false),
                None => (0.0, true),
            };
            values[i * n + j] = v;
            values[j * n + i] = v;
            mask[i * n + j] = m;
            mask[j * n + i] = m;
        }
    }
    Ok(ProductHeatmap { n, values, mask })
}

/// Default zero band for sign patterns, relative to the largest magnitude.
pub const DEFAULT_SIGN_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPattern {
    pub signs: Vec<i8>,
    tolerance_bits: u64,
}

impl SignPattern {
    pub fn tolerance(&self) -> f64 {
        f64::from_bits(self.tolerance_bits)
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }
}

/// Sign of each entry; entries with `|f(v)| <= tolerance · max|f|` get 0.
pub fn sign_pattern(f: &VertexFunction, tolerance: f64) -> Result<SignPattern> {
    if tolerance.is_nan() || tolerance < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "sign tolerance must be nonnegative, got {tolerance}"
        )));
    }
    let band = tolerance * f.norm_inf();
    let signs = f
        .iter()
        .map(|&x| {
            if x.abs() <= band {
                0
            } else if x > 0.0 {
                1
            } else {
                -1
            }
        })
        .collect();
    Ok(SignPattern {
        signs,
        tolerance_bits: tolerance.to_bits(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SignAgreement {
    /// Fraction of counted edges whose endpoints share a sign.
    pub fraction: f64,
    pub counted: usize,
    /// Edges touching a zero-sign vertex.
    pub excluded: usize,
}

pub fn edge_sign_agreement(g: &Graph, p: &SignPattern) -> Result<SignAgreement> {
    if p.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            actual: p.len(),
        });
    }
    let (mut agree, mut counted, mut excluded) = (0usize, 0usize, 0usize);
    for &(u, v) in g.edges() {
        let (su, sv) = (p.signs[u], p.signs[v]);
        if su == 0 || sv == 0 {
            excluded += 1;
            continue;
        }
        counted += 1;
        if su == sv {
            agree += 1;
        }
    }
    if counted == 0 {
        return Err(Error::UndefinedFraction);
    }
    Ok(SignAgreement {
        fraction: agree as f64 / counted as f64,
        counted,
        excluded,
    })
}

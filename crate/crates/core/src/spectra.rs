//! Dense symmetric eigendecomposition of `D - A` and `D + A`, and the energy
//! forms built on them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexFunction};

/// Numerical thresholds for the eigensolver and the invariants it promises.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverTolerances {
    /// Relative symmetry required of the input matrix.
    pub symmetry: f64,
    /// Stop when the off-diagonal Frobenius norm falls below this times the
    /// matrix Frobenius norm.
    pub off_diagonal: f64,
    pub max_sweeps: usize,
    /// Allowed eigen-residual, relative to `max(1, λ₁)`.
    pub residual: f64,
    pub orthonormality: f64,
    /// Ties in the sign-normalization argmax are entries within this
    /// relative distance of the maximum.
    pub sign_tie: f64,
}

impl Default for SolverTolerances {
    fn default() -> Self {
        Self {
            symmetry: 1e-12,
            off_diagonal: 1e-12,
            max_sweeps: 100,
            residual: 1e-9,
            orthonormality: 1e-10,
            sign_tie: 1e-9,
        }
    }
}

/// Which graph operator a spectrum belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operator {
    /// `L = D - A`
    Laplacian,
    /// `D + A`
    Signless,
}

impl Operator {
    pub fn apply(self, g: &Graph, f: &VertexFunction) -> Result<VertexFunction> {
        match self {
            Operator::Laplacian => g.apply_laplacian(f),
            Operator::Signless => g.apply_signless(f),
        }
    }

    pub fn energy(self, g: &Graph, f: &VertexFunction) -> Result<f64> {
        match self {
            Operator::Laplacian => dirichlet_energy(g, f),
            Operator::Signless => signless_energy(g, f),
        }
    }
}

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds a matrix from rows; every row must have `rows.len()` entries.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "row of length {} in a {n}x{n} matrix",
                bad.len()
            )));
        }
        Ok(Self {
            n,
            data: rows.concat(),
        })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    /// Materializes `D - A` or `D + A`.
    pub fn of_operator(g: &Graph, op: Operator) -> Self {
        let off = match op {
            Operator::Laplacian => -1.0,
            Operator::Signless => 1.0,
        };
        let mut m = Self::zeros(g.n());
        for v in 0..g.n() {
            m[(v, v)] = g.degree(v) as f64;
        }
        for &(u, v) in g.edges() {
            m[(u, v)] = off;
            m[(v, u)] = off;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self[(i, j)] * self[(i, j)];
                }
            }
        }
        s.sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                self.data[i * self.n..(i + 1) * self.n]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

/// Eigenvalues in descending order, `eigenvalues[k]` paired with
/// `eigenvectors[k]`. Eigenvectors are orthonormal and sign-normalized so
/// their largest-magnitude entry (lowest index on ties) is positive.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<VertexFunction>,
    pub source: Operator,
}

impl EigenDecomposition {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `‖Mφ_k - λ_k φ_k‖₂` for each pair, `M` the decomposed operator on `g`.
    pub fn residuals(&self, g: &Graph) -> Result<Vec<f64>> {
        self.eigenvalues
            .iter()
            .zip(&self.eigenvectors)
            .map(|(&lambda, phi)| {
                let m_phi = self.source.apply(g, phi)?;
                Ok(m_phi.plus_scaled(-lambda, phi).norm())
            })
            .collect()
    }

    /// `max |⟨φ_i, φ_j⟩ - δ_ij|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.len() {
            for j in i..self.len() {
                let target = if i == j { 1.0 } else { 0.0 };
                let dot = self.eigenvectors[i].dot(&self.eigenvectors[j]);
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// Checks the residual and orthonormality invariants.
    pub fn validate(&self, g: &Graph, tol: &SolverTolerances) -> Result<()> {
        let scale = self.eigenvalues.first().copied().unwrap_or(0.0).max(1.0);
        let residual = self.residuals(g)?.into_iter().fold(0.0, f64::max);
        if residual > tol.residual * scale {
            return Err(Error::SpectrumSanity(format!(
                "eigen-residual {residual:e} exceeds {:e}",
                tol.residual * scale
            )));
        }
        let defect = self.orthonormality_defect();
        if defect > tol.orthonormality {
            return Err(Error::SpectrumSanity(format!(
                "orthonormality defect {defect:e} exceeds {:e}",
                tol.orthonormality
            )));
        }
        Ok(())
    }
}

/// Flips `v` so its largest-magnitude entry is positive. Entries within
/// `tie` (relative) of the maximum count as tied; the lowest index wins.
pub fn normalize_sign(v: &mut [f64], tie: f64) {
    let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if max == 0.0 {
        return;
    }
    let pivot = v
        .iter()
        .position(|x| x.abs() >= max * (1.0 - tie))
        .expect("maximum is attained");
    if v[pivot] < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// Cyclic Jacobi eigendecomposition of a real symmetric matrix.
///
/// Returns eigenvalues in descending order and the matching orthonormal
/// eigenvectors, each sign-normalized.
pub fn eigh_symmetric(
    matrix: &DenseMatrix,
    tol: &SolverTolerances,
) -> Result<(Vec<f64>, Vec<VertexFunction>)> {
    let n = matrix.n();
    let fro = matrix.frobenius();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (matrix[(i, j)], matrix[(j, i)]);
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::InvalidMatrix(format!(
                    "non-finite entry at ({i}, {j})"
                )));
            }
            if (a - b).abs() > tol.symmetry * fro.max(f64::MIN_POSITIVE) {
                return Err(Error::InvalidMatrix(format!(
                    "asymmetric at ({i}, {j}): {a} vs {b}"
                )));
            }
        }
        if !matrix[(i, i)].is_finite() {
            return Err(Error::InvalidMatrix(format!(
                "non-finite entry at ({i}, {i})"
            )));
        }
    }

    let mut a = matrix.clone();
    // symmetrize exactly so rotations see one value per pair
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = avg;
            a[(j, i)] = avg;
        }
    }
    let mut v = DenseMatrix::identity(n);
    let target = tol.off_diagonal * fro;

    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off <= target {
            break;
        }
        if sweeps == tol.max_sweeps {
            return Err(Error::ConvergenceFailure {
                sweeps,
                residual: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, &mut v, p, q, c, s);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]).then(i.cmp(&j)));
    let eigenvalues = order.iter().map(|&k| a[(k, k)]).collect();
    let eigenvectors = order
        .iter()
        .map(|&k| {
            let mut col: Vec<f64> = (0..n).map(|r| v[(r, k)]).collect();
            normalize_sign(&mut col, tol.sign_tie);
            VertexFunction::new(col)
        })
        .collect();
    Ok((eigenvalues, eigenvectors))
}

/// Applies `A <- Jᵀ A J`, `V <- V J` for the plane rotation
/// `J = [[c, s], [-s, c]]` in the `(p, q)` plane, zeroing `A[p][q]`.
fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.n();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

fn decompose(g: &Graph, op: Operator, tol: &SolverTolerances) -> Result<EigenDecomposition> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    let (eigenvalues, eigenvectors) = eigh_symmetric(&DenseMatrix::of_operator(g, op), tol)?;
    // both D - A and D + A have spectrum inside [0, 2 * max degree]
    let ceiling = 2.0 * g.max_degree() as f64;
    let slack = 1e-9 * ceiling.max(1.0);
    if let Some(&bad) = eigenvalues
        .iter()
        .find(|&&l| l < -slack || l > ceiling + slack)
    {
        return Err(Error::SpectrumSanity(format!(
            "eigenvalue {bad} outside the Gerschgorin interval [0, {ceiling}]"
        )));
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
        source: op,
    })
}

pub fn decompose_laplacian(g: &Graph) -> Result<EigenDecomposition> {
    decompose(g, Operator::Laplacian, &SolverTolerances::default())
}

pub fn decompose_signless(g: &Graph) -> Result<EigenDecomposition> {
    decompose(g, Operator::Signless, &SolverTolerances::default())
}

pub fn decompose_with(
    g: &Graph,
    op: Operator,
    tol: &SolverTolerances,
) -> Result<EigenDecomposition> {
    decompose(g, op, tol)
}

/// `Σ_{(i,j) ∈ E} (f(i) - f(j))²`, which equals `⟨f, (D - A) f⟩`.
pub fn dirichlet_energy(g: &Graph, f: &VertexFunction) -> Result<f64> {
    g.check_len(f)?;
    Ok(g.edges()
        .iter()
        .fold(0.0, |s, &(i, j)| s + (f[i] - f[j]).powi(2)))
}

/// `Σ_{(i,j) ∈ E} (f(i) + f(j))²`, which equals `⟨f, (D + A) f⟩`.
pub fn signless_energy(g: &Graph, f: &VertexFunction) -> Result<f64> {
    g.check_len(f)?;
    Ok(g.edges()
        .iter()
        .fold(0.0, |s, &(i, j)| s + (f[i] + f[j]).powi(2)))
}

/// Vectors with `‖f‖₂ <= ZERO_NORM * sqrt(n)` count as numerically zero.
pub const ZERO_NORM: f64 = 1e-12;

pub(crate) fn is_numerically_zero(f: &VertexFunction) -> bool {
    f.norm() <= ZERO_NORM * (f.len().max(1) as f64).sqrt()
}

/// Energy of `f` under `op` divided by `‖f‖₂²`.
pub fn rayleigh_quotient(g: &Graph, f: &VertexFunction, op: Operator) -> Result<f64> {
    g.check_len(f)?;
    if is_numerically_zero(f) {
        return Err(Error::ZeroVector { norm: f.norm() });
    }
    Ok(op.energy(g, f)? / f.norm_sq())
}

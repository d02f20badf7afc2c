//! Dense symmetric eigenvalues and quotient matrices of vertex partitions.
//!
//! The eigensolver is a cyclic Jacobi iteration. It is slow compared to
//! tridiagonal QR but it is accurate to a few ulps on the small dense
//! matrices this crate deals with, and it serves as the ground truth the
//! interlacing bounds are checked against.
//!
//! A quotient matrix replaces each block `L_ij` of a partitioned symmetric
//! matrix by its average row sum. Its eigenvalues interlace those of the
//! source matrix, and they are eigenvalues of the source whenever every
//! block has constant row sums (an equitable partition).

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// Absolute tolerance for spectral comparisons.
pub const SPECTRAL_TOL: f64 = 1e-9;

/// Jacobi stops once the off-diagonal Frobenius norm drops below this.
pub const JACOBI_OFF_NORM: f64 = 1e-12;

pub const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error(
        "Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix must be square with {expected} columns per row")]
    NotSquare { expected: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("quotient matrix is not similar to a symmetric one (deviation {deviation:e})")]
    NotSymmetrizable { deviation: f64 },
    #[error("spectrum sizes incompatible: large has {large}, small has {small}")]
    SizeMismatch { large: usize, small: usize },
}

/// Dense real symmetric matrix, stored in full row-major form.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0.0; order * order],
        }
    }

    /// Builds from the upper triangle of `f`; `f(i, j)` is only called for `i <= j`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Rows must be square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, LinalgError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(LinalgError::NotSquare { expected: n });
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(LinalgError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self {
            order: n,
            entries: rows.concat(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum()
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.entries[i * self.order..(i + 1) * self.order]
            .iter()
            .sum()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.order, "vector length must match matrix order");
        self.entries
            .chunks_exact(self.order.max(1))
            .take(self.order)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                let x = self.get(i, j);
                sum += 2.0 * x * x;
            }
        }
        sum.sqrt()
    }
}

/// Eigenvalues sorted in descending order, so `values()[0]` is ν₁.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// ν_i with the 1-based indexing used for interlacing.
    pub fn nu(&self, i: usize) -> f64 {
        self.0[i - 1]
    }

    /// Number of eigenvalues within `tol` of `x`.
    pub fn multiplicity_near(&self, x: f64, tol: f64) -> usize {
        self.0.iter().filter(|&&y| (y - x).abs() <= tol).count()
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.multiplicity_near(x, tol) > 0
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x:.10}")?;
        }
        write!(f, "]")
    }
}

pub fn adjacency_matrix(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.order());
    for (u, w) in g.edges() {
        m.set(u, w, 1.0);
    }
    m
}

pub fn laplacian_matrix(g: &Graph) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zeros(g.order());
    for (u, d) in g.degrees().enumerate() {
        m.set(u, u, d as f64);
    }
    for (u, w) in g.edges() {
        m.set(u, w, -1.0);
    }
    m
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
pub fn eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum, LinalgError> {
    let n = m.order();
    let mut a = m.clone();
    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off < JACOBI_OFF_NORM {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(LinalgError::ConvergenceFailure {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
    }
    Ok(Spectrum::from_values((0..n).map(|i| a.get(i, i)).collect()))
}

/// One Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut SymmetricMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..a.order() {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, c * akp - s * akq);
        a.set(k, q, s * akp + c * akq);
    }
    a.set(p, p, a.get(p, p) - t * apq);
    a.set(q, q, a.get(q, q) + t * apq);
    a.set(p, q, 0.0);
}

/// Ordered list of disjoint nonempty blocks covering `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    order: usize,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(order: usize, blocks: Vec<Vec<usize>>) -> Result<Self, LinalgError> {
        let mut block_of = vec![usize::MAX; order];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(LinalgError::InvalidPartition(format!("block {b} is empty")));
            }
            for &u in block {
                if u >= order {
                    return Err(LinalgError::InvalidPartition(format!(
                        "vertex {u} out of range for order {order}"
                    )));
                }
                if block_of[u] != usize::MAX {
                    return Err(LinalgError::InvalidPartition(format!(
                        "vertex {u} appears in more than one block"
                    )));
                }
                block_of[u] = b;
            }
        }
        if let Some(u) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(LinalgError::InvalidPartition(format!(
                "vertex {u} is not covered"
            )));
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(Self {
            order,
            blocks,
            block_of,
        })
    }

    /// Partition from a block label per vertex; labels must be `0..m` with
    /// every label used.
    pub fn from_labels(labels: &[usize]) -> Result<Self, LinalgError> {
        let m = labels.iter().max().map_or(0, |&x| x + 1);
        let mut blocks = vec![Vec::new(); m];
        for (u, &b) in labels.iter().enumerate() {
            blocks[b].push(u);
        }
        Self::new(labels.len(), blocks)
    }

    pub fn singletons(order: usize) -> Self {
        Self::new(order, (0..order).map(|u| vec![u]).collect()).expect("singletons partition")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, u: usize) -> usize {
        self.block_of[u]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

/// Matrix of average block row sums; generally not symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    block_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// Builds a quotient matrix from explicit entries and the block sizes of
    /// the partition it is meant to represent.
    pub fn from_rows(rows: &[Vec<f64>], block_sizes: Vec<usize>) -> Result<Self, LinalgError> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            return Err(LinalgError::NotSquare { expected: m });
        }
        if block_sizes.len() != m || block_sizes.contains(&0) {
            return Err(LinalgError::InvalidPartition(format!(
                "need {m} positive block sizes, got {block_sizes:?}"
            )));
        }
        Ok(Self {
            order: m,
            entries: rows.concat(),
            block_sizes,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// Order of the partitioned source matrix.
    pub fn source_order(&self) -> usize {
        self.block_sizes.iter().sum()
    }
}

pub fn quotient_matrix(m: &SymmetricMatrix, p: &Partition) -> Result<QuotientMatrix, LinalgError> {
    if p.order() != m.order() {
        return Err(LinalgError::InvalidPartition(format!(
            "partition covers {} indices but matrix has order {}",
            p.order(),
            m.order()
        )));
    }
    let k = p.block_count();
    let mut entries = vec![0.0; k * k];
    for i in 0..m.order() {
        let bi = p.block_of(i);
        for j in 0..m.order() {
            entries[bi * k + p.block_of(j)] += m.get(i, j);
        }
    }
    let block_sizes = p.block_sizes();
    for (bi, &size) in block_sizes.iter().enumerate() {
        for x in &mut entries[bi * k..(bi + 1) * k] {
            *x /= size as f64;
        }
    }
    Ok(QuotientMatrix {
        order: k,
        entries,
        block_sizes,
    })
}

/// Eigenvalues of a quotient matrix through the similar symmetric matrix
/// `D^{1/2} M D^{-1/2}`, where `D` holds the block sizes.
pub fn quotient_eigenvalues(q: &QuotientMatrix) -> Result<Spectrum, LinalgError> {
    let k = q.order();
    let roots: Vec<f64> = q.block_sizes.iter().map(|&s| (s as f64).sqrt()).collect();
    let scaled = |i: usize, j: usize| roots[i] * q.get(i, j) / roots[j];
    let mut deviation: f64 = 0.0;
    let sym = SymmetricMatrix::from_fn(k, |i, j| {
        let (a, b) = (scaled(i, j), scaled(j, i));
        deviation = deviation.max((a - b).abs());
        0.5 * (a + b)
    });
    if deviation > SPECTRAL_TOL {
        return Err(LinalgError::NotSymmetrizable { deviation });
    }
    eigenvalues(&sym)
}

/// Result of an interlacing test; `first_violation` is a 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterlacingCheck {
    pub holds: bool,
    pub first_violation: Option<usize>,
}

pub fn check_interlacing(
    large: &Spectrum,
    small: &Spectrum,
) -> Result<InterlacingCheck, LinalgError> {
    check_interlacing_with_tol(large, small, SPECTRAL_TOL)
}

/// Tests `ν_i(L) ≥ ν_i(M) ≥ ν_{m-n+i}(L)` for `i = 1..=n`.
pub fn check_interlacing_with_tol(
    large: &Spectrum,
    small: &Spectrum,
    tol: f64,
) -> Result<InterlacingCheck, LinalgError> {
    let (m, n) = (large.len(), small.len());
    if n > m {
        return Err(LinalgError::SizeMismatch { large: m, small: n });
    }
    let first_violation = (1..=n).find(|&i| {
        let mu = small.nu(i);
        large.nu(i) + tol < mu || mu + tol < large.nu(m - n + i)
    });
    Ok(InterlacingCheck {
        holds: first_violation.is_none(),
        first_violation,
    })
}

/// The split index `j` of a tight interlacing: the top `j` eigenvalues of
/// `small` match the top of `large` and the remaining ones match the bottom.
/// When several `j` qualify the largest is returned.
pub fn interlacing_tightness(
    large: &Spectrum,
    small: &Spectrum,
) -> Result<Option<usize>, LinalgError> {
    let (m, n) = (large.len(), small.len());
    if n > m {
        return Err(LinalgError::SizeMismatch { large: m, small: n });
    }
    let close = |a: f64, b: f64| (a - b).abs() <= SPECTRAL_TOL;
    // top[j]: first j match from above; bottom[j]: entries j+1..=n match from below.
    let mut top = vec![true; n + 1];
    for i in 1..=n {
        top[i] = top[i - 1] && close(large.nu(i), small.nu(i));
    }
    let mut bottom = vec![true; n + 1];
    for j in (0..n).rev() {
        let i = j + 1;
        bottom[j] = bottom[j + 1] && close(large.nu(m - n + i), small.nu(i));
    }
    Ok((0..=n).rev().find(|&j| top[j] && bottom[j]))
}

/// Whether every vertex in block `i` has the same number of neighbours in
/// block `j`, for all block pairs.
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool, LinalgError> {
    if p.order() != g.order() {
        return Err(LinalgError::InvalidPartition(format!(
            "partition covers {} vertices but graph has {}",
            p.order(),
            g.order()
        )));
    }
    let k = p.block_count();
    let mut counts = vec![0usize; k];
    for block in p.blocks() {
        let mut reference: Option<Vec<usize>> = None;
        for &u in block {
            counts.iter_mut().for_each(|c| *c = 0);
            for &w in g.neighbours(u).expect("vertex in range") {
                counts[p.block_of(w)] += 1;
            }
            match &reference {
                None => reference = Some(counts.clone()),
                Some(r) if *r != counts => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}

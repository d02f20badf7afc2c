//! Strongly regular graphs: detection, spectra and the sufficient conditions
//! under which an SRG maximises algebraic connectivity among all δ-regular
//! graphs on the same number of vertices.
//!
//! All parameter conditions are decided in integer arithmetic. With
//! `r = ½(λ-μ+√Δ)` and `Δ = (λ-μ)² + 4(δ-μ)`, and since `λ+μ > 0`,
//!
//! ```text
//! λ ≥ r  ⟺  (λ+μ)² ≥ Δ  ⟺  μ(λ+1) ≥ δ
//! ```
//!
//! and likewise with strict or equal comparisons throughout.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Tolerance for multiplicity integrality when `Δ` is not a perfect square.
pub const MULTIPLICITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("graph is disconnected")]
    GraphDisconnected,
    #[error("infeasible SRG parameters: {0}")]
    InfeasibleParams(String),
    #[error("graph is not strongly regular with parameters {0}")]
    ParamMismatch(SrgParams),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SrgParams {
    pub v: usize,
    pub degree: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.v, self.degree, self.lambda, self.mu
        )
    }
}

impl SrgParams {
    /// Requires `μ ≥ 1`, `δ < v` and `δ(δ-λ-1) = (v-δ-1)μ`.
    pub fn new(v: usize, degree: usize, lambda: usize, mu: usize) -> Result<Self, SrgError> {
        let p = Self {
            v,
            degree,
            lambda,
            mu,
        };
        if mu == 0 {
            return Err(SrgError::InfeasibleParams(format!("{p}: mu must be >= 1")));
        }
        if degree >= v || lambda >= degree {
            return Err(SrgError::InfeasibleParams(format!(
                "{p}: need lambda < delta < v"
            )));
        }
        if degree * (degree - lambda - 1) != (v - degree - 1) * mu {
            return Err(SrgError::InfeasibleParams(format!(
                "{p}: delta(delta-lambda-1) != (v-delta-1)mu"
            )));
        }
        Ok(p)
    }

    fn ints(&self) -> (i64, i64, i64, i64) {
        (
            self.v as i64,
            self.degree as i64,
            self.lambda as i64,
            self.mu as i64,
        )
    }

    /// `(λ-μ)² + 4(δ-μ)`.
    pub fn discriminant(&self) -> i64 {
        let (_, d, l, m) = self.ints();
        (l - m) * (l - m) + 4 * (d - m)
    }

    /// `½(λ-μ+√Δ)`, the second largest adjacency eigenvalue.
    pub fn nu_plus(&self) -> f64 {
        let (_, _, l, m) = self.ints();
        0.5 * ((l - m) as f64 + (self.discriminant() as f64).sqrt())
    }

    /// `½(λ-μ-√Δ)`, the smallest adjacency eigenvalue.
    pub fn nu_minus(&self) -> f64 {
        let (_, _, l, m) = self.ints();
        0.5 * ((l - m) as f64 - (self.discriminant() as f64).sqrt())
    }

    /// `μ(λ+1)` compared to `δ`, which orders `λ` against `nu_plus()`.
    fn lambda_vs_nu_plus(&self) -> std::cmp::Ordering {
        (self.mu * (self.lambda + 1)).cmp(&self.degree)
    }

    pub fn lambda_equals_nu2(&self) -> bool {
        self.lambda_vs_nu_plus().is_eq()
    }
}

/// The two non-principal adjacency eigenvalues and their multiplicities;
/// index 0 is the larger eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct SrgSpectrum {
    pub eigenvalues: [f64; 2],
    pub multiplicities: [usize; 2],
    /// `Some(√Δ)` when the discriminant is a perfect square.
    pub integral_root: Option<i64>,
}

fn integer_sqrt(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

pub fn srg_spectrum(p: &SrgParams) -> Result<SrgSpectrum, SrgError> {
    SrgParams::new(p.v, p.degree, p.lambda, p.mu)?;
    let (v, d, l, m) = p.ints();
    let disc = p.discriminant();
    if disc <= 0 {
        return Err(SrgError::InfeasibleParams(format!(
            "{p}: non-positive discriminant {disc}"
        )));
    }
    let numerator = 2 * d + (v - 1) * (l - m);
    let root = integer_sqrt(disc);
    let multiplicities = match root {
        Some(s) => {
            if numerator % s != 0 || (v - 1 + numerator / s) % 2 != 0 {
                return Err(SrgError::InfeasibleParams(format!(
                    "{p}: non-integral multiplicities"
                )));
            }
            let k = numerator / s;
            [(v - 1 - k) / 2, (v - 1 + k) / 2]
        }
        None => {
            let k = numerator as f64 / (disc as f64).sqrt();
            let m1 = 0.5 * ((v - 1) as f64 - k);
            let rounded = m1.round();
            if (m1 - rounded).abs() > MULTIPLICITY_TOL {
                return Err(SrgError::InfeasibleParams(format!(
                    "{p}: non-integral multiplicity {m1}"
                )));
            }
            [rounded as i64, v - 1 - rounded as i64]
        }
    };
    if multiplicities.iter().any(|&x| x < 0) {
        return Err(SrgError::InfeasibleParams(format!(
            "{p}: negative multiplicity"
        )));
    }
    Ok(SrgSpectrum {
        eigenvalues: [p.nu_plus(), p.nu_minus()],
        multiplicities: multiplicities.map(|x| x as usize),
        integral_root: root,
    })
}

/// Parameters of `g` if it is strongly regular, found by counting common
/// neighbours over all vertex pairs. Complete graphs have no non-adjacent
/// pair and are not reported.
pub fn detect_srg(g: &Graph) -> Result<Option<SrgParams>, SrgError> {
    if !g.is_connected() {
        return Err(SrgError::GraphDisconnected);
    }
    let Some(degree) = g.regularity() else {
        return Ok(None);
    };
    let n = g.order();
    let (mut lambda, mut mu) = (None, None);
    for u in 0..n {
        for w in (u + 1)..n {
            let common = g.common_neighbours(u, w)?;
            let slot = if g.has_edge(u, w) {
                &mut lambda
            } else {
                &mut mu
            };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return Ok(None),
                Some(_) => {}
            }
        }
    }
    match (lambda, mu) {
        (Some(lambda), Some(mu)) => Ok(SrgParams::new(n, degree, lambda, mu).ok()),
        _ => Ok(None),
    }
}

fn require_params(g: &Graph, p: &SrgParams) -> Result<(), SrgError> {
    if detect_srg(g)? == Some(*p) {
        Ok(())
    } else {
        Err(SrgError::ParamMismatch(*p))
    }
}

/// Whether every neighbourhood graph is λ-regular.
pub fn neighbourhood_regular_check(g: &Graph, p: &SrgParams) -> Result<bool, SrgError> {
    require_params(g, p)?;
    for u in 0..g.order() {
        let (gu, _) = g.neighbourhood_graph(u)?;
        if gu.regularity() != Some(p.lambda) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `λ > ½(λ-μ+√Δ)`: sufficient for every neighbourhood graph to be connected.
pub fn neighbourhood_connectivity_condition(p: &SrgParams) -> bool {
    p.lambda_vs_nu_plus().is_gt()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityCheck {
    /// False when `λ ≠ ν₂`; the check is then vacuous and `holds` is true.
    pub applicable: bool,
    pub holds: bool,
    /// Distinct component sizes over all neighbourhood graphs, ascending.
    pub component_sizes: Vec<usize>,
}

/// When `λ = ν₂`, every component of every neighbourhood graph has size
/// divisible by `λ + 1`.
pub fn component_divisibility_check(
    g: &Graph,
    p: &SrgParams,
) -> Result<DivisibilityCheck, SrgError> {
    require_params(g, p)?;
    let mut sizes = Vec::new();
    for u in 0..g.order() {
        let (gu, _) = g.neighbourhood_graph(u)?;
        sizes.extend(gu.connected_components().iter().map(|c| c.len()));
    }
    sizes.sort_unstable();
    sizes.dedup();
    let applicable = p.lambda_equals_nu2();
    let holds = !applicable || sizes.iter().all(|s| s % (p.lambda + 1) == 0);
    Ok(DivisibilityCheck {
        applicable,
        holds,
        component_sizes: sizes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaximalityCertificate {
    /// `λ ≥ ½(λ-μ+√Δ)`
    pub condition_lambda: bool,
    /// `v ≤ 2δ - λ`
    pub condition_v: bool,
    pub certified: bool,
}

/// When both conditions hold, an SRG with these parameters has the largest
/// algebraic connectivity among all δ-regular graphs on v vertices.
pub fn maximality_certificate(p: &SrgParams) -> MaximalityCertificate {
    let condition_lambda = p.lambda_vs_nu_plus().is_ge();
    let condition_v = p.v + p.lambda <= 2 * p.degree;
    MaximalityCertificate {
        condition_lambda,
        condition_v,
        certified: condition_lambda && condition_v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn params(v: usize, d: usize, l: usize, m: usize) -> SrgParams {
        SrgParams::new(v, d, l, m).unwrap()
    }

    #[test]
    fn detects_known_graphs() {
        assert_eq!(
            detect_srg(&generators::petersen()).unwrap(),
            Some(params(10, 3, 0, 1))
        );
        let k222 = generators::complete_multipartite(3, 2).unwrap();
        assert_eq!(detect_srg(&k222).unwrap(), Some(params(6, 4, 2, 4)));
        assert_eq!(detect_srg(&generators::cycle(6).unwrap()).unwrap(), None);
        assert_eq!(
            detect_srg(&generators::cycle(5).unwrap()).unwrap(),
            Some(params(5, 2, 0, 1))
        );
        assert_eq!(detect_srg(&generators::complete(5).unwrap()).unwrap(), None);
        let two = generators::cycle(5)
            .unwrap()
            .disjoint_union(&generators::cycle(5).unwrap());
        assert_eq!(detect_srg(&two), Err(SrgError::GraphDisconnected));
    }

    #[test]
    fn params_validation() {
        assert!(matches!(
            SrgParams::new(10, 3, 0, 0),
            Err(SrgError::InfeasibleParams(_))
        ));
        assert!(matches!(
            SrgParams::new(10, 3, 1, 1),
            Err(SrgError::InfeasibleParams(_))
        ));
        assert!(SrgParams::new(10, 3, 0, 1).is_ok());
    }

    #[test]
    fn spectra() {
        let s = srg_spectrum(&params(10, 3, 0, 1)).unwrap();
        assert_eq!(s.eigenvalues, [1.0, -2.0]);
        assert_eq!(s.multiplicities, [5, 4]);
        let s = srg_spectrum(&params(6, 4, 2, 4)).unwrap();
        assert_eq!(s.eigenvalues, [0.0, -2.0]);
        assert_eq!(s.multiplicities, [3, 2]);
        let s = srg_spectrum(&params(5, 2, 0, 1)).unwrap();
        let r5 = 5f64.sqrt();
        assert!((s.eigenvalues[0] - (r5 - 1.0) / 2.0).abs() < 1e-15);
        assert!((s.eigenvalues[1] + (r5 + 1.0) / 2.0).abs() < 1e-15);
        assert_eq!(s.multiplicities, [2, 2]);
        assert_eq!(s.integral_root, None);
    }

    #[test]
    fn infeasible_multiplicities() {
        // Eq. (1) holds but the multiplicities are not integers.
        let p = SrgParams::new(13, 4, 1, 1).unwrap();
        assert!(matches!(
            srg_spectrum(&p),
            Err(SrgError::InfeasibleParams(_))
        ));
    }

    #[test]
    fn neighbourhood_checks() {
        let pet = generators::petersen();
        assert!(neighbourhood_regular_check(&pet, &params(10, 3, 0, 1)).unwrap());
        let k222 = generators::complete_multipartite(3, 2).unwrap();
        assert!(neighbourhood_regular_check(&k222, &params(6, 4, 2, 4)).unwrap());
        assert_eq!(
            neighbourhood_regular_check(&pet, &params(6, 4, 2, 4)),
            Err(SrgError::ParamMismatch(params(6, 4, 2, 4)))
        );
    }

    #[test]
    fn connectivity_condition() {
        assert!(neighbourhood_connectivity_condition(&params(6, 4, 2, 4)));
        assert!(!neighbourhood_connectivity_condition(&params(10, 3, 0, 1)));
        assert!(!neighbourhood_connectivity_condition(&params(5, 2, 0, 1)));
    }

    #[test]
    fn divisibility() {
        let pet = generators::petersen();
        let check = component_divisibility_check(&pet, &params(10, 3, 0, 1)).unwrap();
        assert!(!check.applicable && check.holds);
        let k222 = generators::complete_multipartite(3, 2).unwrap();
        let check = component_divisibility_check(&k222, &params(6, 4, 2, 4)).unwrap();
        assert!(!check.applicable);
        assert_eq!(check.component_sizes, vec![4]);
        let k33 = generators::complete_multipartite(2, 3).unwrap();
        let check = component_divisibility_check(&k33, &params(6, 3, 0, 3)).unwrap();
        assert!(check.applicable && check.holds);
    }

    #[test]
    fn certificates() {
        for (parts, size) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
            let g = generators::complete_multipartite(parts, size).unwrap();
            let p = detect_srg(&g).unwrap().unwrap();
            assert_eq!(p.lambda, (parts - 2) * size);
            assert_eq!(p.mu, (parts - 1) * size);
            let c = maximality_certificate(&p);
            assert!(c.certified, "{p}");
            assert_eq!(p.v, 2 * p.degree - p.lambda);
        }
        let c = maximality_certificate(&params(10, 3, 0, 1));
        assert!(!c.condition_lambda && !c.certified);
    }

    #[test]
    fn integer_conditions_match_float_forms() {
        for p in [
            params(10, 3, 0, 1),
            params(6, 4, 2, 4),
            params(5, 2, 0, 1),
            params(9, 4, 1, 2),
            params(16, 6, 2, 2),
            params(16, 5, 0, 2),
            params(10, 6, 3, 4),
        ] {
            let r = p.nu_plus();
            let l = p.lambda as f64;
            assert_eq!(
                maximality_certificate(&p).condition_lambda,
                l >= r - 1e-12,
                "{p}"
            );
            if (l - r).abs() > 1e-9 {
                assert_eq!(neighbourhood_connectivity_condition(&p), l > r, "{p}");
            }
            assert_eq!(p.lambda_equals_nu2(), (l - r).abs() < 1e-12, "{p}");
        }
    }

    #[test]
    fn isqrt() {
        assert_eq!(integer_sqrt(0), Some(0));
        assert_eq!(integer_sqrt(49), Some(7));
        assert_eq!(integer_sqrt(50), None);
        assert_eq!(integer_sqrt(-4), None);
    }
}

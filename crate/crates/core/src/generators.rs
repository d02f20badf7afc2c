//! Graph families used by the bounds and their test corpus.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

/// Restart cap for the pairing model.
pub const MAX_PAIRING_ATTEMPTS: usize = 10_000;

/// Attempts allowed to [`random_connected_regular`].
pub const MAX_CONNECTED_ATTEMPTS: usize = 1_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
    #[error("no valid graph after {attempts} attempts")]
    GenerationFailure { attempts: usize },
}

fn infeasible(msg: impl Into<String>) -> GeneratorError {
    GeneratorError::InfeasibleParams(msg.into())
}

fn build(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edge_list(order, edges).expect("generator produces valid edges")
}

pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(infeasible(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n < 2 {
        return Err(infeasible(format!("complete graph needs n >= 2, got {n}")));
    }
    Ok(build(
        n,
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))),
    ))
}

/// The Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    build(pairs.len(), edges)
}

/// `K_{m,…,m}` with `parts` parts of size `size`; vertex `i` is in part `i / size`.
pub fn complete_multipartite(parts: usize, size: usize) -> Result<Graph, GeneratorError> {
    if parts < 2 || size < 1 || parts * size < 4 {
        return Err(infeasible(format!(
            "complete multipartite needs parts >= 2, size >= 1 and parts*size >= 4, got ({parts}, {size})"
        )));
    }
    let n = parts * size;
    Ok(build(
        n,
        (0..n).flat_map(|i| {
            ((i + 1)..n)
                .filter(move |j| i / size != j / size)
                .map(move |j| (i, j))
        }),
    ))
}

/// Complete bipartite graph with parts `(v-1)/2` and `(v+1)/2`, plus a
/// perfect matching on the larger part; `(v+1)/2`-regular.
///
/// Vertices `0..(v-1)/2` form the smaller part; the larger part is matched in
/// consecutive pairs.
pub fn tight_family(v: usize) -> Result<Graph, GeneratorError> {
    if v < 3 || (v + 1) % 4 != 0 {
        return Err(infeasible(format!(
            "tight family needs v >= 3 with v + 1 divisible by 4, got {v}"
        )));
    }
    let small = (v - 1) / 2;
    let bipartite = (0..small).flat_map(|a| (small..v).map(move |b| (a, b)));
    let matching = (small..v).step_by(2).map(|b| (b, b + 1));
    Ok(build(v, bipartite.chain(matching)))
}

/// A δ-regular graph from the configuration (pairing) model, restarting from
/// scratch whenever the pairing produces a loop or a repeated edge.
///
/// When `δ > (v-1)/2` the complement of a `(v-1-δ)`-regular sample is
/// returned instead; complementation is a bijection between the two sets of
/// labelled regular graphs, so the distribution is unchanged.
pub fn random_regular(v: usize, degree: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if v == 0 || degree >= v || (v * degree) % 2 != 0 {
        return Err(infeasible(format!(
            "random regular needs delta < v and v*delta even, got v={v}, delta={degree}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if 2 * degree > v - 1 {
        return Ok(pairing_model(v, v - 1 - degree, &mut rng)?.complement());
    }
    pairing_model(v, degree, &mut rng)
}

fn pairing_model(v: usize, degree: usize, rng: &mut impl Rng) -> Result<Graph, GeneratorError> {
    let mut points: Vec<usize> = (0..v)
        .flat_map(|u| std::iter::repeat_n(u, degree))
        .collect();
    let mut adjacency = vec![vec![false; v]; v];
    'attempt: for _ in 0..MAX_PAIRING_ATTEMPTS {
        points.shuffle(rng);
        adjacency.iter_mut().for_each(|row| row.fill(false));
        let mut edges = Vec::with_capacity(points.len() / 2);
        for pair in points.chunks_exact(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b || adjacency[a][b] {
                continue 'attempt;
            }
            adjacency[a][b] = true;
            adjacency[b][a] = true;
            edges.push((a, b));
        }
        return Ok(build(v, edges));
    }
    Err(GeneratorError::GenerationFailure {
        attempts: MAX_PAIRING_ATTEMPTS,
    })
}

/// Repeats [`random_regular`] with seeds drawn from `seed` until the sample
/// is connected, giving up after [`MAX_CONNECTED_ATTEMPTS`].
pub fn random_connected_regular(
    v: usize,
    degree: usize,
    seed: u64,
) -> Result<Graph, GeneratorError> {
    let mut seeds = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_CONNECTED_ATTEMPTS {
        let g = random_regular(v, degree, seeds.random())?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GeneratorError::GenerationFailure {
        attempts: MAX_CONNECTED_ATTEMPTS,
    })
}

/// Named family with integer parameters, as used by sweeps and reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle { n: usize },
    Complete { n: usize },
    Petersen,
    CompleteMultipartite { parts: usize, size: usize },
    TightFamily { v: usize },
    RandomRegular { v: usize, degree: usize, seed: u64 },
}

impl FamilySpec {
    /// Builds the graph; random regular specs are filtered for connectivity.
    pub fn build(&self) -> Result<Graph, GeneratorError> {
        match *self {
            Self::Cycle { n } => cycle(n),
            Self::Complete { n } => complete(n),
            Self::Petersen => Ok(petersen()),
            Self::CompleteMultipartite { parts, size } => complete_multipartite(parts, size),
            Self::TightFamily { v } => tight_family(v),
            Self::RandomRegular { v, degree, seed } => random_connected_regular(v, degree, seed),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Self::Cycle { n } => format!("cycle-v{n}"),
            Self::Complete { n } => format!("complete-v{n}"),
            Self::Petersen => "petersen".to_string(),
            Self::CompleteMultipartite { parts, size } => format!("multipartite-a{parts}-m{size}"),
            Self::TightFamily { v } => format!("tight-v{v}"),
            Self::RandomRegular { v, degree, seed } => {
                format!("random-regular-v{v}-d{degree}-s{seed}")
            }
        }
    }
}

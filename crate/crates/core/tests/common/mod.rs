//! Test corpus shared by the integration suites.

#![allow(dead_code)]

use regbound_core::generators::{self, FamilySpec};
use regbound_core::Graph;

/// n×n rook's graph: cells adjacent when they share exactly one coordinate.
pub fn rook(n: usize) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n * n {
        for b in (a + 1)..n * n {
            let (ra, ca, rb, cb) = (a / n, a % n, b / n, b % n);
            if (ra == rb) != (ca == cb) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(n * n, edges).unwrap()
}

/// Cayley graph on Z4×Z4 with connection set ±(1,0), ±(0,1), ±(1,1).
pub fn shrikhande() -> Graph {
    let id = |i: usize, j: usize| 4 * (i % 4) + (j % 4);
    let mut edges = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for (di, dj) in [(1, 0), (0, 1), (1, 1)] {
                edges.push((id(i, j), id(i + di, j + dj)));
            }
        }
    }
    Graph::from_edge_list(16, edges).unwrap()
}

/// Folded 5-cube: 4-bit words adjacent at Hamming distance 1 or 4.
pub fn clebsch() -> Graph {
    let mut edges = Vec::new();
    for a in 0u32..16 {
        for b in (a + 1)..16 {
            let d = (a ^ b).count_ones();
            if d == 1 || d == 4 {
                edges.push((a as usize, b as usize));
            }
        }
    }
    Graph::from_edge_list(16, edges).unwrap()
}

/// Triangular graph T(5), the complement of the Petersen graph.
pub fn triangular5() -> Graph {
    generators::petersen().complement()
}

pub fn paley13() -> Graph {
    let squares: Vec<usize> = (1..13).map(|x| x * x % 13).collect();
    let mut edges = Vec::new();
    for a in 0..13 {
        for b in (a + 1)..13 {
            if squares.contains(&(b - a)) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edge_list(13, edges).unwrap()
}

/// Strongly regular graphs with their expected parameters `(v, δ, λ, μ)`.
pub fn srg_corpus() -> Vec<(&'static str, Graph, (usize, usize, usize, usize))> {
    vec![
        ("C4", generators::cycle(4).unwrap(), (4, 2, 0, 2)),
        ("C5", generators::cycle(5).unwrap(), (5, 2, 0, 1)),
        ("petersen", generators::petersen(), (10, 3, 0, 1)),
        (
            "K222",
            generators::complete_multipartite(3, 2).unwrap(),
            (6, 4, 2, 4),
        ),
        (
            "K33",
            generators::complete_multipartite(2, 3).unwrap(),
            (6, 3, 0, 3),
        ),
        (
            "K333",
            generators::complete_multipartite(3, 3).unwrap(),
            (9, 6, 3, 6),
        ),
        (
            "K2222",
            generators::complete_multipartite(4, 2).unwrap(),
            (8, 6, 4, 6),
        ),
        ("rook3", rook(3), (9, 4, 1, 2)),
        ("rook4", rook(4), (16, 6, 2, 2)),
        ("shrikhande", shrikhande(), (16, 6, 2, 2)),
        ("clebsch", clebsch(), (16, 5, 0, 2)),
        ("T5", triangular5(), (10, 6, 3, 4)),
        ("paley13", paley13(), (13, 6, 2, 3)),
    ]
}

/// Connected regular graphs satisfying `1 < δ < v - 1`.
pub fn bound_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = srg_corpus()
        .into_iter()
        .map(|(name, g, _)| (name.to_string(), g))
        .collect();
    for spec in [
        FamilySpec::Cycle { n: 6 },
        FamilySpec::Cycle { n: 9 },
        FamilySpec::TightFamily { v: 7 },
        FamilySpec::TightFamily { v: 11 },
        FamilySpec::TightFamily { v: 15 },
        FamilySpec::RandomRegular {
            v: 12,
            degree: 3,
            seed: 1,
        },
        FamilySpec::RandomRegular {
            v: 14,
            degree: 4,
            seed: 2,
        },
        FamilySpec::RandomRegular {
            v: 16,
            degree: 5,
            seed: 3,
        },
        FamilySpec::RandomRegular {
            v: 20,
            degree: 15,
            seed: 4,
        },
    ] {
        out.push((spec.label(), spec.build().unwrap()));
    }
    out
}

/// Brute-force vertex connectivity: the smallest vertex set whose removal
/// disconnects the graph, or `v - 1` for complete graphs.
pub fn brute_force_vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let mut best = n - 1;
    for mask in 0u32..(1 << n) {
        let removed = mask.count_ones() as usize;
        if removed >= best || n - removed < 2 {
            continue;
        }
        let keep: Vec<usize> = (0..n).filter(|&u| mask & (1 << u) == 0).collect();
        let sub = regbound_core::VertexSubset::new(n, keep).unwrap();
        if !g.induced_subgraph(&sub).unwrap().is_connected() {
            best = removed;
        }
    }
    best
}

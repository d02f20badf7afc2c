//! Simple undirected graphs and the structural queries the bounds are built on.
//!
//! A [`Graph`] is immutable once built. Adjacency lists are kept sorted and
//! deduplicated, so membership tests are binary searches and iteration order
//! is deterministic.

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

/// Exact rational used for average degrees.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex index {index} out of range for graph on {order} vertices")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("vertex subset belongs to a graph on {subset} vertices, not {graph}")]
    SubsetOrderMismatch { subset: usize, graph: usize },
    #[error("vertex subset is not strictly increasing")]
    UnsortedSubset,
}

/// Error raised while reading the edge-list text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header line `v <count>`")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// Sorted set of vertices of some parent graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    parent_order: usize,
    vertices: Vec<usize>,
}

impl VertexSubset {
    pub fn new(parent_order: usize, vertices: Vec<usize>) -> Result<Self, GraphError> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GraphError::UnsortedSubset);
        }
        if let Some(&last) = vertices.last() {
            if last >= parent_order {
                return Err(GraphError::IndexOutOfRange {
                    index: last,
                    order: parent_order,
                });
            }
        }
        Ok(Self {
            parent_order,
            vertices,
        })
    }

    /// Sorts and deduplicates before validating.
    pub fn from_unsorted(
        parent_order: usize,
        mut vertices: Vec<usize>,
    ) -> Result<Self, GraphError> {
        vertices.sort_unstable();
        vertices.dedup();
        Self::new(parent_order, vertices)
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, u: usize) -> bool {
        self.vertices.binary_search(&u).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `order` vertices. Repeated pairs (in either
    /// orientation) collapse into a single edge.
    pub fn from_edge_list<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut adjacency = vec![Vec::new(); order];
        for (a, b) in edges {
            for index in [a, b] {
                if index >= order {
                    return Err(GraphError::IndexOutOfRange { index, order });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adjacency })
    }

    /// Graph with no edges.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(order, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, w)` with `u < w`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u < self.order() {
            Ok(())
        } else {
            Err(GraphError::IndexOutOfRange {
                index: u,
                order: self.order(),
            })
        }
    }

    pub fn neighbours(&self, u: usize) -> Result<&[usize], GraphError> {
        self.check_vertex(u)?;
        Ok(&self.adjacency[u])
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|ns| ns.binary_search(&w).is_ok())
    }

    pub fn degree(&self, u: usize) -> Result<usize, GraphError> {
        Ok(self.neighbours(u)?.len())
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    /// The common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adjacency[0].len();
        self.degrees().all(|d| d == first).then_some(first)
    }

    /// Number of common neighbours of `u` and `w`.
    pub fn common_neighbours(&self, u: usize, w: usize) -> Result<usize, GraphError> {
        let (a, b) = (self.neighbours(u)?, self.neighbours(w)?);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(count)
    }

    fn check_subset(&self, s: &VertexSubset) -> Result<(), GraphError> {
        if s.parent_order() != self.order() {
            return Err(GraphError::SubsetOrderMismatch {
                subset: s.parent_order(),
                graph: self.order(),
            });
        }
        Ok(())
    }

    /// Subgraph induced on `s`; vertex `i` of the result is `s.vertices()[i]`.
    pub fn induced_subgraph(&self, s: &VertexSubset) -> Result<Graph, GraphError> {
        self.check_subset(s)?;
        if s.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let verts = s.vertices();
        let adjacency = verts
            .iter()
            .map(|&u| {
                self.adjacency[u]
                    .iter()
                    .filter_map(|w| verts.binary_search(w).ok())
                    .collect()
            })
            .collect();
        Ok(Graph { adjacency })
    }

    /// The subgraph induced on the neighbours of `u`, together with the map
    /// from its vertices back to `self`.
    ///
    /// Fails with [`GraphError::EmptySubset`] when `u` is isolated, since a
    /// graph must have at least one vertex.
    pub fn neighbourhood_graph(&self, u: usize) -> Result<(Graph, VertexSubset), GraphError> {
        let subset = VertexSubset::new(self.order(), self.neighbours(u)?.to_vec())?;
        let graph = self.induced_subgraph(&subset)?;
        Ok((graph, subset))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSubset> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut block = Vec::new();
            while let Some(u) = queue.pop_front() {
                block.push(u);
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            block.sort_unstable();
            components.push(VertexSubset {
                parent_order: n,
                vertices: block,
            });
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Average degree of the subgraph induced on `s`, as an exact rational.
    pub fn average_degree(&self, s: &VertexSubset) -> Result<Rational, GraphError> {
        self.check_subset(s)?;
        if s.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let inner: usize = s
            .vertices()
            .iter()
            .map(|&u| self.adjacency[u].iter().filter(|&&w| s.contains(w)).count())
            .sum();
        Ok(Rational::new(inner as i64, s.len() as i64))
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adjacency = (0..n)
            .map(|u| (0..n).filter(|&w| w != u && !self.has_edge(u, w)).collect())
            .collect();
        Graph { adjacency }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|ns| ns.iter().map(|w| w + shift).collect()),
        );
        Graph { adjacency }
    }

    /// Parses the edge-list text format: a header `v <count>` followed by
    /// one `u w` pair per line. `#` starts a comment; blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
            .filter(|(_, line)| !line.is_empty());

        let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
        let order = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["v", count] => count.parse::<usize>().map_err(|e| ParseError::Syntax {
                line: header_line,
                message: format!("bad vertex count `{count}`: {e}"),
            })?,
            _ => return Err(ParseError::MissingHeader),
        };
        if order == 0 {
            return Err(ParseError::Graph {
                line: header_line,
                source: GraphError::NoVertices,
            });
        }

        let mut edges = Vec::new();
        for (line, content) in lines {
            let fields: Vec<_> = content.split_whitespace().collect();
            let [a, b] = fields.as_slice() else {
                return Err(ParseError::Syntax {
                    line,
                    message: format!("expected two vertex indices, found {}", fields.len()),
                });
            };
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|e| ParseError::Syntax {
                    line,
                    message: format!("bad vertex index `{s}`: {e}"),
                })
            };
            let (a, b) = (parse(a)?, parse(b)?);
            // Validate per line so errors carry a line number.
            Graph::from_edge_list(order, [(a, b)])
                .map_err(|source| ParseError::Graph { line, source })?;
            edges.push((a, b));
        }
        Graph::from_edge_list(order, edges).map_err(|source| ParseError::Graph {
            line: header_line,
            source,
        })
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("v {}\n", self.order());
        for (u, w) in self.edges() {
            out.push_str(&format!("{u} {w}\n"));
        }
        out
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(v={}, e={})", self.order(), self.edge_count())
    }
}

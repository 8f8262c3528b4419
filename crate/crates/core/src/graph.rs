//! Simple undirected graphs and an exact maximum independent set oracle.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::random::seeded_rng;
use crate::Error;

/// Largest graph accepted by [`max_independent_set`].
pub const MAX_MIS_VERTICES: usize = 40;
/// Largest graph accepted by [`max_independent_set_exhaustive`].
pub const MAX_EXHAUSTIVE_VERTICES: usize = 20;

/// A simple undirected graph on vertices `0..vertex_count()`.
///
/// Edges are kept normalized (`u < v`) and sorted, so two graphs compare
/// equal exactly when their edge sets agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and builds a graph. Errors name the offending edge by its
    /// position in `edges`.
    pub fn new<I>(vertices: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertices == 0 {
            return Err(Error::NoVertices);
        }
        let mut adjacency = vec![Vec::new(); vertices];
        let mut normalized = Vec::new();
        for (index, (u, v)) in edges.into_iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= vertices {
                    return Err(Error::EndpointOutOfRange {
                        index,
                        vertex,
                        vertices,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { index, vertex: u });
            }
            let (u, v) = if u < v { (u, v) } else { (v, u) };
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge { index, u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            normalized.push((u, v));
        }
        normalized.sort_unstable();
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertices,
            edges: normalized,
            adjacency,
        })
    }

    pub fn empty(vertices: usize) -> Result<Self, Error> {
        Self::new(vertices, [])
    }

    pub fn complete(vertices: usize) -> Result<Self, Error> {
        Self::new(vertices, unordered_pairs(vertices))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertices)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertices && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// True iff no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    fn adjacency_masks(&self) -> Vec<u64> {
        self.adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }
}

fn unordered_pairs(p: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..p).flat_map(move |u| (u + 1..p).map(move |v| (u, v)))
}

/// Every labelled graph on `p` vertices, one per subset of the `p(p-1)/2`
/// possible edges. Intended for small `p`.
pub fn all_graphs(p: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = unordered_pairs(p).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(p, edges).expect("pairs are valid edges")
    })
}

/// Includes each unordered pair `{u, v}` (in lexicographic pair order)
/// independently with probability `edge_probability`.
pub fn random_graph(p: usize, edge_probability: f64, seed: u64) -> Result<Graph, Error> {
    if p == 0 {
        return Err(Error::NoVertices);
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::InvalidProbability);
    }
    let mut rng = seeded_rng(seed);
    let edges: Vec<(usize, usize)> = unordered_pairs(p)
        .filter(|_| rng.gen_bool(edge_probability))
        .collect();
    Graph::new(p, edges)
}

/// A maximum independent set together with its size `α(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentSetResult {
    pub size: usize,
    /// Ascending vertex list; the lexicographically smallest maximum set.
    pub witness: Vec<usize>,
}

struct BranchAndBound<'a> {
    adj: &'a [u64],
}

impl BranchAndBound<'_> {
    /// Number of cliques in a greedy clique cover of `cand`, an upper bound
    /// on the independence number of the induced subgraph.
    fn clique_cover_bound(&self, cand: u64) -> u32 {
        let mut rest = cand;
        let mut cliques = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= !(1 << v);
            let mut grow = rest & self.adj[v];
            while grow != 0 {
                let u = grow.trailing_zeros() as usize;
                rest &= !(1 << u);
                grow &= self.adj[u] & !(1 << u);
            }
            cliques += 1;
        }
        cliques
    }

    fn alpha(&self, cand: u64) -> u32 {
        let mut best = 0;
        self.search(cand, 0, &mut best);
        best
    }

    fn search(&self, cand: u64, size: u32, best: &mut u32) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + self.clique_cover_bound(cand) <= *best {
            return;
        }
        let mut pivot = cand.trailing_zeros() as usize;
        let mut pivot_degree = (self.adj[pivot] & cand).count_ones();
        let mut rest = cand & (cand - 1);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.adj[v] & cand).count_ones();
            if d > pivot_degree {
                pivot = v;
                pivot_degree = d;
            }
        }
        if pivot_degree == 0 {
            *best = (*best).max(size + cand.count_ones());
            return;
        }
        let bit = 1u64 << pivot;
        self.search(cand & !self.adj[pivot] & !bit, size + 1, best);
        self.search(cand & !bit, size, best);
    }
}

/// Exact `α(G)` by branch and bound: branch on a maximum-degree vertex
/// (take it or drop it), prune with a greedy clique-cover bound.
///
/// The witness is the lexicographically smallest maximum independent set,
/// recovered by fixing vertices in ascending order whenever a maximum set
/// still extends the choice.
pub fn max_independent_set(graph: &Graph) -> Result<IndependentSetResult, Error> {
    let p = graph.vertex_count();
    if p > MAX_MIS_VERTICES {
        return Err(Error::TooLarge {
            what: "independent set oracle input",
            limit: MAX_MIS_VERTICES,
            got: p,
        });
    }
    let adj = graph.adjacency_masks();
    let bb = BranchAndBound { adj: &adj };
    let all = (1u64 << p) - 1;
    let alpha = bb.alpha(all);

    let mut witness = Vec::new();
    let mut cand = all;
    let mut needed = alpha;
    for (v, &nbrs) in adj.iter().enumerate() {
        if needed == 0 {
            break;
        }
        let bit = 1u64 << v;
        if cand & bit == 0 {
            continue;
        }
        let with_v = cand & !nbrs & !bit;
        if bb.alpha(with_v) + 1 == needed {
            witness.push(v);
            cand = with_v;
            needed -= 1;
        } else {
            cand &= !bit;
        }
    }
    Ok(IndependentSetResult {
        size: alpha as usize,
        witness,
    })
}

/// Exact `α(G)` by checking all `2^p` vertex subsets. Used as an oracle
/// for [`max_independent_set`].
pub fn max_independent_set_exhaustive(graph: &Graph) -> Result<IndependentSetResult, Error> {
    let p = graph.vertex_count();
    if p > MAX_EXHAUSTIVE_VERTICES {
        return Err(Error::TooLarge {
            what: "exhaustive independent set input",
            limit: MAX_EXHAUSTIVE_VERTICES,
            got: p,
        });
    }
    let adj = graph.adjacency_masks();
    let mut best = 0u64;
    for mask in 0u64..1 << p {
        let independent = (0..p).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0);
        if !independent {
            continue;
        }
        let (c, b) = (mask.count_ones(), best.count_ones());
        let diff = mask ^ best;
        if c > b || c == b && diff != 0 && mask & (diff & diff.wrapping_neg()) != 0 {
            best = mask;
        }
    }
    Ok(IndependentSetResult {
        size: best.count_ones() as usize,
        witness: (0..p).filter(|&v| best >> v & 1 == 1).collect(),
    })
}

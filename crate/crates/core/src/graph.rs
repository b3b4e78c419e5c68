//! Simple undirected graphs on dense vertex ids `0..n`, colorings, and
//! vertex partitions whose classes are either independent sets or linear
//! forests.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::{self, Budget};

/// A finite simple undirected graph. Vertices are `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {}-{}",
                    e.0, e.1
                )));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    /// Builds a graph from an edge list that may contain repeats; loops are still rejected.
    pub fn from_edges_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let set: BTreeSet<(usize, usize)> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        Self::new(n, set)
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Induced subgraph on `vertices`; the returned map sends new ids to old ids.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                let (a, b) = (index[u], index[v]);
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        (Self::from_sorted(vertices.len(), edges), vertices.to_vec())
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// A total map from vertices to color ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Number of distinct colors actually used.
    pub fn num_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> Option<usize> {
        self.colors.iter().copied().max()
    }

    /// First monochromatic edge, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .iter()
            .copied()
            .find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && self.conflict(g).is_none()
    }

    /// Vertex sets of colors `0..=max`, possibly empty.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let k = self.max_color().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    /// Induces an independent set.
    Normal,
    /// Induces a linear forest.
    Path,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKind::Normal => f.write_str("normal"),
            ClassKind::Path => f.write_str("path"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionClass {
    pub kind: ClassKind,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexPartition {
    pub classes: Vec<PartitionClass>,
}

impl VertexPartition {
    pub fn new(classes: Vec<PartitionClass>) -> Self {
        VertexPartition { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn count(&self, kind: ClassKind) -> usize {
        self.classes.iter().filter(|c| c.kind == kind).count()
    }

    /// All classes of the given kind, in one call.
    pub fn all_of_kind(kind: ClassKind, sets: Vec<Vec<usize>>) -> Self {
        VertexPartition {
            classes: sets
                .into_iter()
                .map(|vertices| PartitionClass { kind, vertices })
                .collect(),
        }
    }

    /// Class index of every vertex, if the classes cover `0..n` disjointly.
    pub fn class_of(&self, n: usize) -> Option<Vec<usize>> {
        let mut out = vec![usize::MAX; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in &c.vertices {
                if v >= n || out[v] != usize::MAX {
                    return None;
                }
                out[v] = i;
            }
        }
        out.iter().all(|&c| c != usize::MAX).then_some(out)
    }
}

/// Why a partition was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionDefect {
    VertexOutOfRange(usize),
    Repeated(usize),
    Uncovered(usize),
    NotIndependent { class: usize, edge: (usize, usize) },
    NotLinearForest { class: usize },
}

impl fmt::Display for PartitionDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionDefect::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            PartitionDefect::Repeated(v) => write!(f, "vertex {v} appears in more than one class"),
            PartitionDefect::Uncovered(v) => write!(f, "vertex {v} is in no class"),
            PartitionDefect::NotIndependent { class, edge } => write!(
                f,
                "normal class {class} contains the edge {}-{}",
                edge.0, edge.1
            ),
            PartitionDefect::NotLinearForest { class } => {
                write!(f, "path class {class} does not induce a linear forest")
            }
        }
    }
}

fn linear_forest_unchecked(g: &Graph, set: &[usize]) -> bool {
    let mut member = vec![false; g.n()];
    for &v in set {
        member[v] = true;
    }
    // Union-find over induced edges; a repeated root means a cycle.
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &v in set {
        let mut deg = 0;
        for &u in g.neighbors(v) {
            if !member[u] {
                continue;
            }
            deg += 1;
            if u > v {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return false;
                }
                parent[a] = b;
            }
        }
        if deg > 2 {
            return false;
        }
    }
    true
}

/// True iff the subgraph induced by `set` is acyclic with maximum degree at most 2.
pub fn is_linear_forest(g: &Graph, set: &[usize]) -> Result<bool> {
    for &v in set {
        g.check_vertex(v)?;
    }
    let unique: BTreeSet<usize> = set.iter().copied().collect();
    let set: Vec<usize> = unique.into_iter().collect();
    Ok(linear_forest_unchecked(g, &set))
}

pub fn is_independent(g: &Graph, set: &[usize]) -> Result<bool> {
    for &v in set {
        g.check_vertex(v)?;
    }
    Ok(first_internal_edge(g, set).is_none())
}

fn first_internal_edge(g: &Graph, set: &[usize]) -> Option<(usize, usize)> {
    let member: BTreeSet<usize> = set.iter().copied().collect();
    set.iter().find_map(|&v| {
        g.neighbors(v)
            .iter()
            .find(|u| member.contains(u))
            .map(|&u| (v.min(u), v.max(u)))
    })
}

/// Checks that the classes partition the vertex set and each class has its declared kind.
pub fn validate_partition(
    g: &Graph,
    p: &VertexPartition,
) -> std::result::Result<(), PartitionDefect> {
    let mut owner = vec![false; g.n()];
    for class in &p.classes {
        for &v in &class.vertices {
            if v >= g.n() {
                return Err(PartitionDefect::VertexOutOfRange(v));
            }
            if owner[v] {
                return Err(PartitionDefect::Repeated(v));
            }
            owner[v] = true;
        }
    }
    if let Some(v) = owner.iter().position(|&o| !o) {
        return Err(PartitionDefect::Uncovered(v));
    }
    for (i, class) in p.classes.iter().enumerate() {
        match class.kind {
            ClassKind::Normal => {
                if let Some(edge) = first_internal_edge(g, &class.vertices) {
                    return Err(PartitionDefect::NotIndependent { class: i, edge });
                }
            }
            ClassKind::Path => {
                if !linear_forest_unchecked(g, &class.vertices) {
                    return Err(PartitionDefect::NotLinearForest { class: i });
                }
            }
        }
    }
    Ok(())
}

/// Greedy DSatur coloring: a deterministic upper bound for the chromatic number.
pub fn dsatur_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by(|&a, &b| {
                (seen[a].len(), g.degree(a), std::cmp::Reverse(a)).cmp(&(
                    seen[b].len(),
                    g.degree(b),
                    std::cmp::Reverse(b),
                ))
            })
            .expect("uncolored vertex remains");
        let c = (0..).find(|c| !seen[v].contains(c)).unwrap();
        colors[v] = c;
        for &u in g.neighbors(v) {
            seen[u].insert(c);
        }
    }
    Coloring::new(colors)
}

/// Size of a maximum clique; exact branch and bound for up to 128 vertices,
/// otherwise a greedy clique size (still a valid lower bound).
pub fn clique_lower_bound(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.n() > 128 {
        return greedy_clique(g);
    }
    let masks: Vec<u128> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | (1 << u)))
        .collect();
    fn expand(masks: &[u128], size: usize, cand: u128, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= !(1 << v);
            expand(masks, size + 1, rest & masks[v], best);
        }
    }
    let mut best = 1;
    let all = if g.n() == 128 {
        u128::MAX
    } else {
        (1u128 << g.n()) - 1
    };
    expand(&masks, 0, all, &mut best);
    best
}

fn greedy_clique(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.len()
}

/// Exact chromatic number with a witness coloring using colors `0..chi`.
///
/// Runs between a clique lower bound and a DSatur upper bound, deciding each
/// candidate `k` with an exhaustive search. Exceeding the budget is reported
/// as [`Error::BudgetExceeded`], never as a wrong answer.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<(usize, Coloring)> {
    if g.n() == 0 {
        return Ok((0, Coloring::new(Vec::new())));
    }
    let upper = dsatur_coloring(g);
    let hi = upper.num_colors();
    let lo = clique_lower_bound(g).max(1);
    for k in lo..hi {
        if let Some(colors) = search::mixed_search(g, k, 0, budget)? {
            return Ok((k, Coloring::new(colors)));
        }
    }
    Ok((hi, upper))
}

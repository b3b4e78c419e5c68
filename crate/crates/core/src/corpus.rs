//! Named graphs and seeded random generators for test corpora.

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{ClassKind, Graph, PartitionClass, VertexPartition};
use crate::mixed::{Formula, Literal};

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges_dedup(n, edges).expect("generator produced a malformed graph")
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    build(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// Complete multipartite graph with the given part sizes; parts are consecutive ids.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let mut part_of = Vec::new();
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let n = part_of.len();
    let part_of = &part_of;
    build(
        n,
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |&v| part_of[u] != part_of[v])
                .map(move |v| (u, v))
        }),
    )
}

pub fn random_gnp(n: usize, p: f64, rng: &mut CorpusRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    build(n, edges)
}

/// Random graph with maximum degree at most `max_degree`: candidate edges in
/// random order, kept while both endpoints have spare degree.
pub fn random_bounded_degree(n: usize, max_degree: usize, rng: &mut CorpusRng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < max_degree && deg[v] < max_degree {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    build(n, edges)
}

/// Random maximal planar graph on `n >= 3` vertices: repeated face
/// subdivision followed by random edge flips.
pub fn random_triangulation(n: usize, rng: &mut CorpusRng) -> Graph {
    assert!(n >= 3);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    for f in &faces {
        for k in 0..3 {
            let (u, v) = (f[k], f[(k + 1) % 3]);
            edges.insert((u.min(v), u.max(v)));
        }
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..faces.len());
        let k = rng.gen_range(0..3);
        let (a, b, c) = (faces[i][k], faces[i][(k + 1) % 3], faces[i][(k + 2) % 3]);
        // The twin face traverses b -> a.
        let Some(j) = faces
            .iter()
            .position(|f| (0..3).any(|t| f[t] == b && f[(t + 1) % 3] == a))
        else {
            continue;
        };
        let t = (0..3).find(|&t| faces[j][t] == b).unwrap();
        let d = faces[j][(t + 2) % 3];
        if c == d || edges.contains(&(c.min(d), c.max(d))) {
            continue;
        }
        // Keep degrees at least 3 so the result stays a simple triangulation.
        let deg = |x: usize| edges.iter().filter(|e| e.0 == x || e.1 == x).count();
        if n > 4 && (deg(a) <= 3 || deg(b) <= 3) {
            continue;
        }
        edges.remove(&(a.min(b), a.max(b)));
        edges.insert((c.min(d), c.max(d)));
        faces[i] = [a, d, c];
        faces[j] = [d, b, c];
    }
    build(n, edges)
}

/// Random planar graph: a random triangulation with each edge deleted with probability `p_delete`.
pub fn random_planar(n: usize, p_delete: f64, rng: &mut CorpusRng) -> Graph {
    if n < 3 {
        return path(n);
    }
    let t = random_triangulation(n, rng);
    let kept: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .copied()
        .filter(|_| !rng.gen_bool(p_delete))
        .collect();
    build(n, kept)
}

/// Random graph together with a valid partition into `paths` linear-forest
/// classes and `normals` independent classes (every class nonempty when `n` allows).
pub fn random_partitioned(
    n: usize,
    paths: usize,
    normals: usize,
    p_cross: f64,
    rng: &mut CorpusRng,
) -> (Graph, VertexPartition) {
    let l = paths + normals;
    assert!(l >= 1);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); l];
    for (i, v) in verts.into_iter().enumerate() {
        let k = if i < l { i } else { rng.gen_range(0..l) };
        sets[k].push(v);
    }
    let mut edges = Vec::new();
    for set in sets.iter().take(paths) {
        // Random linear forest: a shuffled sequence with random breaks.
        let mut seq = set.clone();
        seq.shuffle(rng);
        for w in seq.windows(2) {
            if rng.gen_bool(0.7) {
                edges.push((w[0], w[1]));
            }
        }
    }
    let mut class_of = vec![0; n];
    for (k, set) in sets.iter().enumerate() {
        for &v in set {
            class_of[v] = k;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if class_of[u] != class_of[v] && rng.gen_bool(p_cross) {
                edges.push((u, v));
            }
        }
    }
    let classes = sets
        .into_iter()
        .enumerate()
        .map(|(k, mut vertices)| {
            vertices.sort_unstable();
            PartitionClass {
                kind: if k < paths {
                    ClassKind::Path
                } else {
                    ClassKind::Normal
                },
                vertices,
            }
        })
        .collect();
    (build(n, edges), VertexPartition::new(classes))
}

pub fn random_formula(vars: usize, clauses: usize, rng: &mut CorpusRng) -> Formula {
    let clauses = (0..clauses)
        .map(|_| {
            [0; 3].map(|_| Literal {
                var: rng.gen_range(0..vars),
                negated: rng.gen_bool(0.5),
            })
        })
        .collect();
    Formula::new(vars, clauses).expect("generated formula is well formed")
}

fn adjacency_bits(g: &Graph, perm: &[usize]) -> Vec<bool> {
    // perm[i] = original vertex placed at position i
    let n = g.n();
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            bits.push(g.has_edge(perm[i], perm[j]));
        }
    }
    bits
}

/// Canonical adjacency string: minimum over relabelings that respect an
/// iterated degree refinement, so isomorphic graphs get equal keys.
pub fn canonical_form(g: &Graph) -> (usize, Vec<bool>) {
    let n = g.n();
    let mut label: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    for _ in 0..n {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&u| label[u]).collect();
                ns.sort_unstable();
                (label[v], ns)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sig.iter().collect();
        let ranks: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let next: Vec<usize> = sig
            .iter()
            .map(|s| ranks.binary_search(&s).unwrap())
            .collect();
        let stable = next.iter().collect::<BTreeSet<_>>().len()
            == label.iter().collect::<BTreeSet<_>>().len();
        label = next;
        if stable {
            break;
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (label[v], v));
    for v in order {
        match cells.last_mut() {
            Some(cell) if label[cell[0]] == label[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best: Option<Vec<bool>> = None;
    let mut perm = Vec::with_capacity(n);
    fn rec(
        g: &Graph,
        cells: &[Vec<usize>],
        k: usize,
        used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        best: &mut Option<Vec<bool>>,
    ) {
        if k == cells.len() {
            let bits = adjacency_bits(g, perm);
            if best.as_ref().is_none_or(|b| bits < *b) {
                *best = Some(bits);
            }
            return;
        }
        let cell = &cells[k];
        let placed_in_cell = cell.iter().filter(|&&v| used[v]).count();
        if placed_in_cell == cell.len() {
            rec(g, cells, k + 1, used, perm, best);
            return;
        }
        for &v in cell {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                rec(g, cells, k, used, perm, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; n];
    rec(g, &cells, 0, &mut used, &mut perm, &mut best);
    (n, best.unwrap_or_default())
}

/// All graphs on `n` vertices up to isomorphism, in a deterministic order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
                edges.extend(
                    (0..k - 1)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| (i, k - 1)),
                );
                let h = build(k, edges);
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.components().len() <= 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| all_connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn triangulations_have_full_edge_count() {
        let mut r = rng(5);
        for n in 3..30 {
            let g = random_triangulation(n, &mut r);
            assert_eq!(g.edge_count(), 3 * n - 6, "n={n}");
        }
    }

    #[test]
    fn named_graphs() {
        assert_eq!(petersen().edge_count(), 15);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
        assert_eq!(complete_multipartite(&[2, 2, 2]).edge_count(), 12);
    }
}

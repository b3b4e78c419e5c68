//! Combinatorial plane embeddings: planarity testing by incremental face
//! splitting on each biconnected block, and rotation systems glued at cut
//! vertices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cyclic order of neighbors around every vertex. `next[v][u] = w` means
/// the face walk entering `v` from `u` leaves towards `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    next: Vec<BTreeMap<usize, usize>>,
}

impl Rotation {
    pub fn n(&self) -> usize {
        self.next.len()
    }

    pub fn successor(&self, v: usize, u: usize) -> usize {
        self.next[v][&u]
    }

    /// All faces as closed vertex walks.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut out = Vec::new();
        for v in 0..self.n() {
            for &u in self.next[v].keys() {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b)) {
                    walk.push(a);
                    let c = self.next[b][&a];
                    a = b;
                    b = c;
                }
                out.push(walk);
            }
        }
        out
    }

    /// Rotation induced by oriented face walks in which every dart occurs once.
    pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> Self {
        let mut next = vec![BTreeMap::new(); n];
        for f in faces {
            let k = f.len();
            for i in 0..k {
                let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                next[v].insert(u, w);
            }
        }
        Rotation { next }
    }

    /// Each vertex's permutation is one cycle over exactly its neighbors.
    fn is_rotation_of(&self, g: &Graph) -> bool {
        (0..g.n()).all(|v| {
            let nb = g.neighbors(v);
            let map = &self.next[v];
            if map.len() != nb.len() || !nb.iter().all(|u| map.contains_key(u)) {
                return false;
            }
            let Some(&start) = nb.first() else {
                return true;
            };
            let mut cur = start;
            for step in 1..=nb.len() {
                cur = map[&cur];
                if cur == start {
                    return step == nb.len();
                }
            }
            false
        })
    }

    /// `V - E + F = 2` for a connected graph with at least one edge.
    pub fn is_plane_embedding_of(&self, g: &Graph) -> bool {
        if !self.is_rotation_of(g) {
            return false;
        }
        if g.edge_count() == 0 {
            return g.n() <= 1;
        }
        let f = self.faces().len() as i64;
        g.n() as i64 - g.edge_count() as i64 + f == 2
    }
}

/// Adds one edge between consecutive components so the result is connected.
pub fn connect_components(g: &Graph) -> Graph {
    let comps = g.components();
    let mut edges = g.edges().to_vec();
    for w in comps.windows(2) {
        edges.push((w[0][0], w[1][0]));
    }
    Graph::new(g.n(), edges).expect("bridges between components are new edges")
}

/// Edge sets of the biconnected blocks (bridges are blocks with one edge).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct St<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(st: &mut St, v: usize, parent: usize) {
        st.time += 1;
        st.disc[v] = st.time;
        st.low[v] = st.time;
        for &u in st.g.neighbors(v) {
            if st.disc[u] == 0 {
                st.stack.push((v, u));
                dfs(st, u, v);
                st.low[v] = st.low[v].min(st.low[u]);
                if st.low[u] >= st.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = st.stack.pop() {
                        block.push(e);
                        if e == (v, u) {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            } else if u != parent && st.disc[u] < st.disc[v] {
                st.stack.push((v, u));
                st.low[v] = st.low[v].min(st.disc[u]);
            }
        }
    }
    let n = g.n();
    let mut st = St {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            dfs(&mut st, v, usize::MAX);
        }
    }
    st.out
}

type Adj = BTreeMap<usize, Vec<usize>>;

fn block_adj(edges: &[(usize, usize)]) -> Adj {
    let mut adj: Adj = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for l in adj.values_mut() {
        l.sort_unstable();
    }
    adj
}

/// Any cycle of a block with at least two edges.
fn find_cycle(adj: &Adj) -> Vec<usize> {
    let start = *adj.keys().next().unwrap();
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut depth: BTreeMap<usize, usize> = BTreeMap::new();
    let mut stack = vec![(start, 0usize)];
    depth.insert(start, 0);
    while let Some(top) = stack.last_mut() {
        let (v, i) = *top;
        let nb = &adj[&v];
        if i == nb.len() {
            stack.pop();
            continue;
        }
        top.1 += 1;
        let u = nb[i];
        if parent.get(&v) == Some(&u) {
            continue;
        }
        if let Some(&du) = depth.get(&u) {
            if du < depth[&v] {
                let mut cyc = vec![v];
                let mut x = v;
                while x != u {
                    x = parent[&x];
                    cyc.push(x);
                }
                return cyc;
            }
            continue;
        }
        parent.insert(u, v);
        depth.insert(u, depth[&v] + 1);
        stack.push((u, 0));
    }
    unreachable!("blocks with two or more edges contain a cycle")
}

enum Fragment {
    Edge(usize, usize),
    Part(BTreeSet<usize>),
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Faces of a plane embedding of a biconnected block, or `NotPlanar`.
fn embed_block(edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    let adj = block_adj(edges);
    let cycle = find_cycle(&adj);
    let mut in_h: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        h_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while h_edges.len() < edges.len() {
        let mut frags: Vec<(Fragment, Vec<usize>)> = Vec::new();
        for &(u, v) in edges {
            if in_h.contains(&u) && in_h.contains(&v) && !h_edges.contains(&key(u, v)) {
                frags.push((Fragment::Edge(u, v), vec![u.min(v), u.max(v)]));
            }
        }
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        for &s in adj.keys() {
            if in_h.contains(&s) || seen.contains(&s) {
                continue;
            }
            let mut part = BTreeSet::new();
            let mut att = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(x) = queue.pop_front() {
                part.insert(x);
                for &y in &adj[&x] {
                    if in_h.contains(&y) {
                        att.insert(y);
                    } else if seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            frags.push((Fragment::Part(part), att.into_iter().collect()));
        }

        let admissible: Vec<Vec<usize>> = frags
            .iter()
            .map(|(_, att)| {
                faces
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| att.iter().all(|a| f.contains(a)))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        if admissible.iter().any(Vec::is_empty) {
            return Err(Error::NotPlanar);
        }
        let pick = admissible.iter().position(|a| a.len() == 1).unwrap_or(0);
        let face_idx = admissible[pick][0];
        let (frag, att) = &frags[pick];

        let path = match frag {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Part(part) => {
                let (a1, a2) = (att[0], att[1]);
                let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
                let mut queue = VecDeque::new();
                for &x in &adj[&a1] {
                    if part.contains(&x) {
                        parent.insert(x, a1);
                        queue.push_back(x);
                    }
                }
                let end = loop {
                    let x = queue.pop_front().expect("fragment joins its attachments");
                    if adj[&x].contains(&a2) {
                        break x;
                    }
                    for &y in &adj[&x] {
                        if part.contains(&y) && !parent.contains_key(&y) {
                            parent.insert(y, x);
                            queue.push_back(y);
                        }
                    }
                };
                let mut p = vec![a2, end];
                let mut x = end;
                while parent[&x] != a1 {
                    x = parent[&x];
                    p.push(x);
                }
                p.push(a1);
                p.reverse();
                p
            }
        };

        let face = faces.swap_remove(face_idx);
        let k = face.len();
        let i = face.iter().position(|&x| x == path[0]).unwrap();
        let j = face
            .iter()
            .position(|&x| x == *path.last().unwrap())
            .unwrap();
        let interior = &path[1..path.len() - 1];
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let mut out = vec![face[from]];
            let mut t = from;
            while t != to {
                t = (t + 1) % k;
                out.push(face[t]);
            }
            out
        };
        let mut f1 = arc(i, j);
        f1.extend(interior.iter().rev());
        let mut f2 = arc(j, i);
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        in_h.extend(path.iter().copied());
    }
    Ok(faces)
}

/// Joins `block` into `global` at `v`: the two cyclic orders become one.
fn splice(global: &mut BTreeMap<usize, usize>, block: BTreeMap<usize, usize>) {
    if global.is_empty() {
        *global = block;
        return;
    }
    let x1 = *global.keys().next().unwrap();
    let x2 = *block.keys().next().unwrap();
    let s1 = global[&x1];
    let s2 = block[&x2];
    global.extend(block);
    global.insert(x1, s2);
    global.insert(x2, s1);
}

/// A plane rotation system of a connected graph, certified by Euler's formula.
pub fn embed_connected(g: &Graph) -> Result<Rotation> {
    let n = g.n();
    let mut next = vec![BTreeMap::new(); n];
    let mut blocks = blocks(g);
    // Add blocks so that each new one meets the processed part in at most one vertex.
    let mut done_vertices: BTreeSet<usize> = BTreeSet::new();
    while !blocks.is_empty() {
        let idx = blocks
            .iter()
            .position(|b| {
                b.iter()
                    .any(|&(u, v)| done_vertices.contains(&u) || done_vertices.contains(&v))
            })
            .unwrap_or(0);
        let block = blocks.swap_remove(idx);
        let mut local: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
        if block.len() == 1 {
            let (u, v) = block[0];
            local.entry(u).or_default().insert(v, v);
            local.entry(v).or_default().insert(u, u);
        } else {
            for f in embed_block(&block)? {
                let k = f.len();
                for i in 0..k {
                    let (a, b, c) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
                    local.entry(b).or_default().insert(a, c);
                }
            }
        }
        for (v, rot) in local {
            splice(&mut next[v], rot);
            done_vertices.insert(v);
        }
    }
    let rot = Rotation { next };
    if !rot.is_plane_embedding_of(g) {
        return Err(Error::NotPlanar);
    }
    Ok(rot)
}

pub fn is_planar(g: &Graph) -> bool {
    embed_connected(&connect_components(g)).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn kuratowski_graphs_rejected() {
        assert!(!is_planar(&corpus::complete(5)));
        assert!(!is_planar(&corpus::complete_multipartite(&[3, 3])));
        assert!(!is_planar(&corpus::petersen()));
        assert!(is_planar(&corpus::complete(4)));
        assert!(is_planar(&corpus::complete_multipartite(&[2, 3])));
    }

    #[test]
    fn planar_counts_on_small_graphs() {
        // unlabeled planar graphs on 5 and 6 vertices
        let c5 = corpus::all_graphs(5)
            .iter()
            .filter(|g| is_planar(g))
            .count();
        let c6 = corpus::all_graphs(6)
            .iter()
            .filter(|g| is_planar(g))
            .count();
        assert_eq!((c5, c6), (33, 142));
    }

    #[test]
    fn random_planar_graphs_embed() {
        let mut rng = corpus::rng(2);
        for n in [3, 6, 12, 25] {
            for _ in 0..5 {
                let g = corpus::random_planar(n, 0.4, &mut rng);
                let c = connect_components(&g);
                let rot = embed_connected(&c).unwrap();
                assert!(rot.is_plane_embedding_of(&c));
            }
        }
    }

    #[test]
    fn cut_vertices_and_bridges() {
        // two triangles sharing vertex 2, plus a pendant path
        let g = Graph::new(
            7,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (2, 4),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap();
        let rot = embed_connected(&g).unwrap();
        assert!(rot.is_plane_embedding_of(&g));
        assert_eq!(rot.faces().len(), 3);
    }
}

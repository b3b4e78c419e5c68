//! Straight-line grid layout of planar graphs: augmentation to a
//! triangulation, canonical ordering, and the shift placement on a
//! `(2N-4) x (N-2)` grid.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::embedding::{connect_components, embed_connected, Rotation};

/// A maximal planar supergraph with its oriented triangular faces. The
/// original vertices keep their ids; new vertices follow them.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub graph: Graph,
    pub faces: Vec<[usize; 3]>,
}

/// Fills every face of length four or more with new vertices: a hub joined
/// to all boundary vertices when they are distinct, otherwise a ring of new
/// vertices along the walk with a hub inside it.
pub fn triangulate(g: &Graph, rot: &Rotation) -> Result<Triangulation> {
    if g.n() < 3 {
        return Err(Error::Precondition(
            "triangulation needs at least 3 vertices".into(),
        ));
    }
    let mut next = g.n();
    let mut edges = g.edges().to_vec();
    let mut tris: Vec<[usize; 3]> = Vec::new();
    for f in rot.faces() {
        let k = f.len();
        if k == 3 {
            tris.push([f[0], f[1], f[2]]);
            continue;
        }
        let distinct = f.iter().collect::<BTreeSet<_>>().len() == k;
        if distinct {
            let h = next;
            next += 1;
            for i in 0..k {
                edges.push((f[i], h));
                tris.push([f[i], f[(i + 1) % k], h]);
            }
        } else {
            let ring: Vec<usize> = (next..next + k).collect();
            let h = next + k;
            next += k + 1;
            for i in 0..k {
                let (w0, w1) = (f[i], f[(i + 1) % k]);
                let (c0, c1) = (ring[i], ring[(i + 1) % k]);
                edges.extend([(c0, w0), (c0, w1), (c0, c1), (c0, h)]);
                tris.push([w0, w1, c0]);
                tris.push([c0, w1, c1]);
                tris.push([c0, c1, h]);
            }
        }
    }
    let graph = Graph::new(next, edges)
        .map_err(|e| Error::Certification(format!("triangulation is not simple: {e}")))?;
    let n = graph.n();
    if graph.edge_count() != 3 * n - 6 || tris.len() != 2 * n - 4 {
        return Err(Error::Certification(format!(
            "augmented graph has {} edges and {} faces on {n} vertices",
            graph.edge_count(),
            tris.len()
        )));
    }
    let faces: Vec<Vec<usize>> = tris.iter().map(|t| t.to_vec()).collect();
    if !Rotation::from_faces(n, &faces).is_plane_embedding_of(&graph) {
        return Err(Error::Certification(
            "augmented faces do not form a sphere".into(),
        ));
    }
    Ok(Triangulation { graph, faces: tris })
}

/// Canonical order `v1, v2, ..., vN` of a triangulation with outer face
/// `outer = [v1, v2, vN]`, found by repeatedly peeling an outer vertex
/// without chords.
pub fn canonical_order(t: &Graph, outer: [usize; 3]) -> Result<Vec<usize>> {
    let n = t.n();
    let [v1, v2, vn] = outer;
    let mut removed = vec![false; n];
    let mut on_outer = vec![false; n];
    for v in outer {
        on_outer[v] = true;
    }
    let mut rev = Vec::with_capacity(n);
    for _ in 0..n.saturating_sub(2) {
        let outer_degree = |v: usize| {
            t.neighbors(v)
                .iter()
                .filter(|&&u| on_outer[u] && !removed[u])
                .count()
        };
        let pick = if rev.is_empty() {
            Some(vn)
        } else {
            (0..n)
                .find(|&v| on_outer[v] && !removed[v] && v != v1 && v != v2 && outer_degree(v) == 2)
        };
        let v = pick.ok_or_else(|| Error::Certification("no removable outer vertex".into()))?;
        removed[v] = true;
        for &u in t.neighbors(v) {
            if !removed[u] {
                on_outer[u] = true;
            }
        }
        rev.push(v);
    }
    let mut order = vec![v1, v2];
    order.extend(rev.into_iter().rev());
    Ok(order)
}

/// Shift placement along a canonical order; coordinates in `[0, 2N-4] x [0, N-2]`.
pub fn shift_placement(t: &Graph, order: &[usize]) -> Result<Vec<(i64, i64)>> {
    let n = t.n();
    let mut pos = vec![(0i64, 0i64); n];
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    pos[v1] = (0, 0);
    pos[v2] = (2, 0);
    pos[v3] = (1, 1);
    let mut under: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut contour = vec![v1, v3, v2];
    let mut placed = vec![false; n];
    for v in [v1, v2, v3] {
        placed[v] = true;
    }
    for &v in &order[3..] {
        let idx: Vec<usize> = contour
            .iter()
            .enumerate()
            .filter(|(_, w)| t.has_edge(v, **w))
            .map(|(i, _)| i)
            .collect();
        let (p, q) = match (idx.first(), idx.last()) {
            (Some(&p), Some(&q)) if q > p && q - p + 1 == idx.len() => (p, q),
            _ => {
                return Err(Error::Certification(format!(
                    "neighbors of vertex {v} are not consecutive on the contour"
                )))
            }
        };
        for &w in &contour[p + 1..q] {
            for &x in &under[w] {
                pos[x].0 += 1;
            }
        }
        for &w in &contour[q..] {
            for &x in &under[w] {
                pos[x].0 += 2;
            }
        }
        let (xp, yp) = pos[contour[p]];
        let (xq, yq) = pos[contour[q]];
        pos[v] = ((xp + xq + yq - yp) / 2, (xq - xp + yq + yp) / 2);
        let mut cover = vec![v];
        for &w in &contour[p + 1..q] {
            cover.extend(under[w].iter().copied());
        }
        under[v] = cover;
        contour.splice(p + 1..q, [v]);
        placed[v] = true;
    }
    Ok(pos)
}

/// Integer straight-line layout of any planar graph; non-planar input is rejected.
pub fn grid_layout(g: &Graph) -> Result<Vec<(i64, i64)>> {
    match g.n() {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![(0, 0)]),
        2 => return Ok(vec![(0, 0), (1, 0)]),
        _ => {}
    }
    let c = connect_components(g);
    let rot = embed_connected(&c)?;
    let tri = triangulate(&c, &rot)?;
    let outer = tri.faces[0];
    let order = canonical_order(&tri.graph, outer)?;
    let mut pos = shift_placement(&tri.graph, &order)?;
    pos.truncate(g.n());
    Ok(pos)
}

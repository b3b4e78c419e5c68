//! Drawings on a bounded number of columns: embedding path partitions in
//! the plane, locating mixed partitions in `Z^d`, recovering partitions from
//! located drawings, and degree-based partitions into linear forests.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    is_linear_forest, validate_partition, ClassKind, Graph, PartitionClass, VertexPartition,
};
use crate::lattice::{on_segment, GridPoint};
use crate::search::{mixed_search, Budget};
use crate::verify::{column_ranks, is_primitive_drawing, is_valid_drawing, GridDrawing};

fn check_partition(g: &Graph, p: &VertexPartition) -> Result<()> {
    validate_partition(g, p).map_err(|d| Error::Precondition(format!("invalid partition: {d}")))
}

/// Orders the vertices of a linear-forest class so that every induced edge
/// joins consecutive entries.
fn path_sequence(g: &Graph, class: &[usize]) -> Vec<usize> {
    let (h, map) = g.induced(class);
    let mut seen = vec![false; h.n()];
    let mut out = Vec::with_capacity(h.n());
    let starts: Vec<usize> = (0..h.n())
        .filter(|&v| h.degree(v) <= 1)
        .chain(0..h.n())
        .collect();
    for s in starts {
        if seen[s] {
            continue;
        }
        let mut cur = Some(s);
        while let Some(v) = cur {
            seen[v] = true;
            out.push(map[v]);
            cur = h.neighbors(v).iter().copied().find(|&u| !seen[u]);
        }
    }
    out
}

/// Two-colors a linear forest; returns the color classes.
fn two_color(g: &Graph, class: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (h, map) = g.induced(class);
    let mut side = vec![usize::MAX; h.n()];
    for s in 0..h.n() {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &u in h.neighbors(v) {
                if side[u] == usize::MAX {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                }
            }
        }
    }
    let mut out = (Vec::new(), Vec::new());
    for v in 0..h.n() {
        if side[v] == 0 {
            out.0.push(map[v]);
        } else {
            out.1.push(map[v]);
        }
    }
    out.0.sort_unstable();
    out.1.sort_unstable();
    out
}

/// Places columns `0..l` in the plane, shifting each column vertically by
/// the least offset that keeps the partial drawing valid. `columns[i]`
/// lists `(vertex, last coordinate)` pairs of column `i`.
fn settle_columns(g: &Graph, columns: &[Vec<(usize, BigInt)>]) -> Result<GridDrawing> {
    let n = g.n();
    let mut pos: Vec<Option<GridPoint>> = vec![None; n];
    for (c, col) in columns.iter().enumerate() {
        let x = BigInt::from(c);
        let mut t = BigInt::zero();
        loop {
            let trial: Vec<(usize, GridPoint)> = col
                .iter()
                .map(|(v, y)| (*v, GridPoint(vec![x.clone(), y + &t])))
                .collect();
            for (v, p) in &trial {
                pos[*v] = Some(p.clone());
            }
            if column_fits(g, &pos, &trial) {
                break;
            }
            t += 1;
        }
    }
    let points = pos
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::Precondition(format!("vertex {v} has no column"))))
        .collect::<Result<Vec<_>>>()?;
    GridDrawing::new(g.clone(), points)
}

/// Checks the incidences created by the freshly placed `fresh` vertices.
fn column_fits(g: &Graph, pos: &[Option<GridPoint>], fresh: &[(usize, GridPoint)]) -> bool {
    let is_fresh = {
        let mut f = vec![false; g.n()];
        for (v, _) in fresh {
            f[*v] = true;
        }
        f
    };
    let placed: Vec<(usize, &GridPoint)> = pos
        .iter()
        .enumerate()
        .filter_map(|(v, p)| p.as_ref().map(|p| (v, p)))
        .collect();
    for &(u, v) in g.edges() {
        let (Some(a), Some(b)) = (&pos[u], &pos[v]) else {
            continue;
        };
        let touches = is_fresh[u] || is_fresh[v];
        for &(w, p) in &placed {
            if w == u || w == v || !(touches || is_fresh[w]) {
                continue;
            }
            if on_segment(a, b, p, false) {
                return false;
            }
        }
    }
    true
}

/// Draws a graph in the plane with class `i` of an all-path partition on
/// column `i`, each path on consecutive points.
pub fn embed_on_columns(g: &Graph, p: &VertexPartition) -> Result<GridDrawing> {
    check_partition(g, p)?;
    if p.classes.iter().any(|c| c.kind != ClassKind::Path) {
        return Err(Error::Precondition(
            "every class must be a path class".into(),
        ));
    }
    let columns: Vec<Vec<(usize, BigInt)>> = p
        .classes
        .iter()
        .map(|c| {
            path_sequence(g, &c.vertices)
                .into_iter()
                .enumerate()
                .map(|(i, v)| (v, BigInt::from(i)))
                .collect()
        })
        .collect();
    settle_columns(g, &columns)
}

/// Last coordinates admitted by a slot of a rank group.
#[derive(Clone, Copy, Debug)]
enum Slot {
    /// Consecutive values for a path class.
    Path,
    Any,
    Even,
    Odd,
    ZeroMod6,
    OddNot3,
}

impl Slot {
    fn values(self, g: &Graph, class: &PartitionClass) -> Vec<(usize, BigInt)> {
        let order = match self {
            Slot::Path => path_sequence(g, &class.vertices),
            _ => class.vertices.clone(),
        };
        let mut out = Vec::with_capacity(order.len());
        let mut y: i64 = 0;
        for v in order {
            while !self.admits(y) {
                y += 1;
            }
            out.push((v, BigInt::from(y)));
            y += 1;
        }
        out
    }

    fn admits(self, y: i64) -> bool {
        match self {
            Slot::Path | Slot::Any => true,
            Slot::Even => y % 2 == 0,
            Slot::Odd => y % 2 == 1,
            Slot::ZeroMod6 => y % 6 == 0,
            Slot::OddNot3 => y % 2 == 1 && y % 3 != 0,
        }
    }
}

/// Locates a mixed partition on `l` columns in `Z^d` with every edge
/// primitive. Ranks lie in `{0..3} x {0,1}^(d-2)`; each group of four ranks
/// takes either two path classes, one path class with up to two normal
/// classes, or up to four normal classes.
pub fn locate_on_columns(g: &Graph, p: &VertexPartition, d: usize) -> Result<GridDrawing> {
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    check_partition(g, p)?;
    let cap = 1u64
        .checked_shl(d as u32)
        .filter(|_| d < 64)
        .unwrap_or(u64::MAX);
    let l = p.len() as u64;
    let paths = p.count(ClassKind::Path) as u64;
    if l > cap || paths > cap - l {
        return Err(Error::Precondition(format!(
            "{l} classes with {paths} path classes do not fit {cap} ranks in dimension {d}"
        )));
    }
    let path_ids: Vec<usize> = (0..p.len())
        .filter(|&i| p.classes[i].kind == ClassKind::Path)
        .collect();
    let normal_ids: Vec<usize> = (0..p.len())
        .filter(|&i| p.classes[i].kind == ClassKind::Normal)
        .collect();

    // Each group is a list of (slot index 0..3, slot kind, class id).
    let mut groups: Vec<Vec<(usize, Slot, usize)>> = Vec::new();
    let mut pi = path_ids.chunks(2);
    let mut ni = normal_ids.iter().copied().peekable();
    for pair in pi.by_ref() {
        if let [a, b] = pair {
            groups.push(vec![(0, Slot::Path, *a), (1, Slot::Path, *b)]);
        } else {
            let mut grp = vec![(1, Slot::Path, pair[0])];
            if let Some(c) = ni.next() {
                grp.push((0, Slot::Even, c));
            }
            if let Some(c) = ni.next() {
                grp.push((2, Slot::Odd, c));
            }
            groups.push(grp);
        }
    }
    let rest: Vec<usize> = ni.collect();
    for chunk in rest.chunks(4) {
        let slots = if chunk.len() == 1 {
            vec![Slot::Any]
        } else {
            vec![Slot::ZeroMod6, Slot::Even, Slot::Odd, Slot::OddNot3]
        };
        groups.push(
            chunk
                .iter()
                .enumerate()
                .map(|(k, &c)| (k, slots[k], c))
                .collect(),
        );
    }

    let mut points: Vec<Option<GridPoint>> = vec![None; g.n()];
    for (gi, grp) in groups.iter().enumerate() {
        for &(k, slot, c) in grp {
            let mut rank = vec![BigInt::from(k)];
            rank.extend((0..d - 2).map(|b| BigInt::from((gi >> b) & 1)));
            for (v, y) in slot.values(g, &p.classes[c]) {
                let mut coords = rank.clone();
                coords.push(y);
                points[v] = Some(GridPoint(coords));
            }
        }
    }
    let points: Vec<GridPoint> = points
        .into_iter()
        .map(|q| q.expect("partition covers"))
        .collect();
    let dr = GridDrawing::with_dim(g.clone(), points, d)?;
    if !is_valid_drawing(&dr) || !is_primitive_drawing(&dr) {
        return Err(Error::Certification(
            "located drawing is not primitive and valid".into(),
        ));
    }
    Ok(dr)
}

/// Recovers a partition into exactly `l` classes with at most `2^d - l`
/// path classes from a primitive valid drawing on `l` columns in `Z^d`.
pub fn partition_from_located(dr: &GridDrawing, d: usize, l: usize) -> Result<VertexPartition> {
    if dr.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: dr.dim(),
        });
    }
    if !(2..63).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    if !is_valid_drawing(dr) || !is_primitive_drawing(dr) {
        return Err(Error::Precondition(
            "drawing must be valid and primitive".into(),
        ));
    }
    let cols = column_ranks(dr);
    let cap = 1usize << d;
    if cols.len() != l || l > cap {
        return Err(Error::Precondition(format!(
            "drawing uses {} columns, expected l = {l} <= {cap}",
            cols.len()
        )));
    }
    let g = dr.graph();
    let parity = |x: &BigInt| x.is_odd() as usize;

    // Congruence classes of ranks mod 2.
    let mut by_parity: BTreeMap<Vec<usize>, Vec<&Vec<usize>>> = BTreeMap::new();
    for (rank, vs) in &cols {
        by_parity
            .entry(rank.iter().map(parity).collect())
            .or_default()
            .push(vs);
    }
    let split = |vs: &[usize]| -> [Vec<usize>; 2] {
        let mut out = [Vec::new(), Vec::new()];
        for &v in vs {
            out[parity(dr.point(v).last())].push(v);
        }
        out
    };
    let mut normals: Vec<Vec<usize>> = Vec::new();
    let mut paths: Vec<Vec<usize>> = Vec::new();
    for members in by_parity.values() {
        if members.len() == 1 {
            paths.push(members[0].clone());
        } else {
            let all: Vec<usize> = members.iter().flat_map(|c| c.iter().copied()).collect();
            normals.extend(split(&all));
        }
    }
    // Demote path columns while over the path budget.
    while paths.len() > cap - l {
        let col = paths.pop().expect("nonempty");
        normals.extend(split(&col));
    }
    normals.retain(|c| !c.is_empty());
    if paths.len() + normals.len() > l {
        return Err(Error::Certification(
            "congruence classes exceed the column count".into(),
        ));
    }
    while paths.len() + normals.len() < l {
        if let Some(i) = (0..normals.len())
            .filter(|&i| normals[i].len() >= 2)
            .max_by_key(|&i| normals[i].len())
        {
            let half = normals[i].len() / 2;
            let tail = normals[i].split_off(half);
            normals.push(tail);
        } else if let Some(i) = (0..paths.len()).find(|&i| paths[i].len() >= 2) {
            let col = paths.remove(i);
            let (a, b) = two_color(g, &col);
            normals.extend([a, b].into_iter().filter(|c| !c.is_empty()));
        } else {
            normals.push(Vec::new());
        }
    }
    let mut classes: Vec<PartitionClass> = paths
        .into_iter()
        .map(|mut vertices| {
            vertices.sort_unstable();
            PartitionClass {
                kind: ClassKind::Path,
                vertices,
            }
        })
        .collect();
    classes.extend(normals.into_iter().map(|mut vertices| {
        vertices.sort_unstable();
        PartitionClass {
            kind: ClassKind::Normal,
            vertices,
        }
    }));
    let out = VertexPartition::new(classes);
    validate_partition(g, &out)
        .map_err(|e| Error::Certification(format!("recovered partition: {e}")))?;
    Ok(out)
}

/// Splits the first `l - 2^(d-1)` path classes into two normal classes each;
/// partitions with `l <= 2^(d-1)` are returned unchanged. The result fits
/// [`locate_on_columns`] in dimension `d + 1`.
pub fn split_path_colors(p: &VertexPartition, g: &Graph, d: usize) -> Result<VertexPartition> {
    check_partition(g, p)?;
    if p.classes.iter().any(|c| c.kind != ClassKind::Path) {
        return Err(Error::Precondition(
            "every class must be a path class".into(),
        ));
    }
    if d == 0 || d >= 63 {
        return Err(Error::UnsupportedDimension(d));
    }
    let l = p.len();
    let half = 1usize << (d - 1);
    if l > 2 * half {
        return Err(Error::Precondition(format!("{l} classes exceed 2^{d}")));
    }
    let to_split = l.saturating_sub(half);
    let mut classes = Vec::new();
    for (i, c) in p.classes.iter().enumerate() {
        if i < to_split {
            let (a, b) = two_color(g, &c.vertices);
            for vertices in [a, b] {
                if !vertices.is_empty() {
                    classes.push(PartitionClass {
                        kind: ClassKind::Normal,
                        vertices,
                    });
                }
            }
        } else {
            classes.push(c.clone());
        }
    }
    Ok(VertexPartition::new(classes))
}

/// Moves a drawing on `l` columns (any dimension) onto ranks `0..l` of the
/// plane, keeping the vertical order inside each column.
pub fn transfer_to_plane(dr: &GridDrawing) -> Result<GridDrawing> {
    if !is_valid_drawing(dr) {
        return Err(Error::Precondition("drawing must be valid".into()));
    }
    let columns: Vec<Vec<(usize, BigInt)>> = column_ranks(dr)
        .into_values()
        .map(|vs| {
            vs.into_iter()
                .map(|v| (v, dr.point(v).last().clone()))
                .collect()
        })
        .collect();
    settle_columns(dr.graph(), &columns)
}

/// Result of the local-search partition with bounded induced degrees.
#[derive(Clone, Debug, Serialize)]
pub struct LovaszPartition {
    pub parts: Vec<Vec<usize>>,
    pub moves: u64,
    pub initial_potential: i64,
    pub final_potential: i64,
    /// Lower bound on the potential of any partition: `-n * max k`.
    pub potential_floor: i64,
}

/// `sum_i (e(G[V_i]) - k_i |V_i|)`.
pub fn lovasz_potential(g: &Graph, parts: &[Vec<usize>], ks: &[usize]) -> i64 {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            owner[v] = i;
        }
    }
    let mut phi = 0i64;
    for &(u, v) in g.edges() {
        if owner[u] == owner[v] {
            phi += 1;
        }
    }
    for (part, &k) in parts.iter().zip(ks) {
        phi -= (k * part.len()) as i64;
    }
    phi
}

/// Partitions the vertices into `ks.len()` parts with `G[V_i]` of maximum
/// degree at most `ks[i]`, by moving overloaded vertices to a part where
/// they have few neighbours.
pub fn lovasz_partition(g: &Graph, ks: &[usize]) -> Result<LovaszPartition> {
    let m = ks.len();
    if m == 0 {
        return Err(Error::Precondition("at least one part is required".into()));
    }
    let total: usize = ks.iter().sum();
    if total + m < g.max_degree() + 1 {
        return Err(Error::Precondition(format!(
            "sum of caps {total} is below max degree {} minus {m} plus 1",
            g.max_degree()
        )));
    }
    let n = g.n();
    let mut owner = vec![0usize; n];
    let parts_of = |owner: &[usize]| -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); m];
        for (v, &o) in owner.iter().enumerate() {
            parts[o].push(v);
        }
        parts
    };
    let initial_potential = lovasz_potential(g, &parts_of(&owner), ks);
    let inner = |owner: &[usize], v: usize, part: usize| {
        g.neighbors(v).iter().filter(|&&u| owner[u] == part).count()
    };
    let mut moves = 0u64;
    loop {
        let overloaded = (0..n).find(|&v| inner(&owner, v, owner[v]) > ks[owner[v]]);
        let Some(v) = overloaded else { break };
        let target = (0..m)
            .find(|&j| j != owner[v] && inner(&owner, v, j) <= ks[j])
            .ok_or_else(|| Error::Certification(format!("no part can take vertex {v}")))?;
        owner[v] = target;
        moves += 1;
    }
    let parts = parts_of(&owner);
    let final_potential = lovasz_potential(g, &parts, ks);
    let kmax = ks.iter().copied().max().unwrap_or(0);
    Ok(LovaszPartition {
        parts,
        moves,
        initial_potential,
        final_potential,
        potential_floor: -((n * kmax) as i64),
    })
}

/// Partitions a graph of maximum degree at most `2^(d+1) - 1` into `2^d`
/// linear forests.
pub fn degree_partition(g: &Graph, d: usize) -> Result<VertexPartition> {
    if d == 0 || d >= 31 {
        return Err(Error::Precondition(format!(
            "dimension parameter {d} must be in 1..31"
        )));
    }
    let bound = (1usize << (d + 1)) - 1;
    if g.max_degree() > bound {
        return Err(Error::Precondition(format!(
            "max degree {} exceeds {bound}",
            g.max_degree()
        )));
    }
    let sets = degree_sets(g, d)?;
    let out = VertexPartition::all_of_kind(ClassKind::Path, sets);
    validate_partition(g, &out)
        .map_err(|e| Error::Certification(format!("degree partition: {e}")))?;
    Ok(out)
}

fn degree_sets(g: &Graph, d: usize) -> Result<Vec<Vec<usize>>> {
    if d == 1 {
        let mut sets = vec![Vec::new(), Vec::new()];
        for comp in g.components() {
            let (h, map) = g.induced(&comp);
            let [a, b] = two_forests(&h)?;
            sets[0].extend(a.into_iter().map(|v| map[v]));
            sets[1].extend(b.into_iter().map(|v| map[v]));
        }
        for s in &mut sets {
            s.sort_unstable();
        }
        return Ok(sets);
    }
    let cap = (1usize << d) - 1;
    let lp = lovasz_partition(g, &[cap, cap])?;
    let mut out = Vec::new();
    for part in &lp.parts {
        let (h, map) = g.induced(part);
        for set in degree_sets(&h, d - 1)? {
            let mut mapped: Vec<usize> = set.into_iter().map(|v| map[v]).collect();
            mapped.sort_unstable();
            out.push(mapped);
        }
    }
    Ok(out)
}

/// Two linear forests covering a connected graph of maximum degree 3.
fn two_forests(h: &Graph) -> Result<[Vec<usize>; 2]> {
    let n = h.n();
    if n == 4 && h.edge_count() == 6 {
        return Ok([vec![0, 1], vec![2, 3]]);
    }
    if let Some(colors) = mixed_search(h, 3, 0, &Budget::default())? {
        if let Some(out) = recolor_repair(h, colors) {
            return Ok(out);
        }
    }
    let colors = mixed_search(h, 0, 2, &Budget::default())?
        .ok_or_else(|| Error::Certification("no split into two linear forests".into()))?;
    let mut out = [Vec::new(), Vec::new()];
    for (v, c) in colors.into_iter().enumerate() {
        out[c].push(v);
    }
    Ok(out)
}

/// Turns a proper 3-coloring into two linear forests: `{c1, c2}` and `{c3, c4}`.
fn recolor_repair(h: &Graph, mut color: Vec<usize>) -> Option<[Vec<usize>; 2]> {
    let n = h.n();
    let low = |c: usize| c <= 1;
    let inner_degree = |color: &[usize], v: usize, side: fn(usize) -> bool| {
        h.neighbors(v).iter().filter(|&&u| side(color[u])).count()
    };
    for v in 0..n {
        if low(color[v]) && inner_degree(&color, v, |c| c <= 1) >= 3 {
            color[v] = 2;
        }
    }
    // Break cycles of G[C1 u C2] with a fourth color.
    let members: Vec<usize> = (0..n).filter(|&v| low(color[v])).collect();
    let (sub, map) = h.induced(&members);
    for comp in sub.components() {
        if comp.len() >= 3 && comp.iter().all(|&v| sub.degree(v) == 2) {
            color[map[comp[0]]] = 3;
        }
    }
    for v in 0..n {
        if !low(color[v]) && inner_degree(&color, v, |c| c >= 2) >= 3 {
            color[v] = 0;
        }
    }
    let mut out = [Vec::new(), Vec::new()];
    for v in 0..n {
        out[usize::from(!low(color[v]))].push(v);
    }
    let ok = out.iter().all(|s| is_linear_forest(h, s).unwrap_or(false));
    ok.then_some(out)
}

/// Number of columns of a drawing.
pub fn column_count(dr: &GridDrawing) -> usize {
    column_ranks(dr).len()
}

/// Rank of a planar column drawing's column as an integer, if it fits.
pub fn planar_column(dr: &GridDrawing, v: usize) -> Option<i64> {
    dr.point(v).rank().first().and_then(ToPrimitive::to_i64)
}

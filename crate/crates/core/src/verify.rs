//! Checking grid drawings: validity, gp, planarity, properness, columns,
//! and a tiny exhaustive search for the least gp in a box.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geom::{self, P2};
use crate::graph::Graph;
use crate::lattice::{difference_gcd, on_segment, GridPoint};
use crate::search::Budget;

/// A graph together with one lattice point per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridDrawing {
    dim: usize,
    graph: Graph,
    points: Vec<GridPoint>,
}

impl GridDrawing {
    /// Checks totality and a common dimension `>= 2`; validity is judged separately.
    pub fn new(graph: Graph, points: Vec<GridPoint>) -> Result<Self> {
        if points.len() != graph.n() {
            return Err(Error::Input(format!(
                "{} points given for {} vertices",
                points.len(),
                graph.n()
            )));
        }
        let dim = points.first().map_or(2, GridPoint::dim);
        if dim < 2 {
            return Err(Error::UnsupportedDimension(dim));
        }
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(GridDrawing { dim, graph, points })
    }

    /// An empty graph has no points to infer a dimension from.
    pub fn with_dim(graph: Graph, points: Vec<GridPoint>, dim: usize) -> Result<Self> {
        let mut dr = Self::new(graph, points)?;
        if dr.points.is_empty() {
            if dim < 2 {
                return Err(Error::UnsupportedDimension(dim));
            }
            dr.dim = dim;
        } else if dr.dim != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: dr.dim,
            });
        }
        Ok(dr)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn point(&self, v: usize) -> &GridPoint {
        &self.points[v]
    }

    /// Plane coordinates; only meaningful for `dim == 2`.
    pub(crate) fn planar_points(&self) -> Result<Vec<P2<BigInt>>> {
        if self.dim != 2 {
            return Err(Error::UnsupportedDimension(self.dim));
        }
        Ok(self
            .points
            .iter()
            .map(|p| (p.0[0].clone(), p.0[1].clone()))
            .collect())
    }

    /// Per-axis `max - min` of the coordinates.
    pub fn extent(&self) -> Vec<BigInt> {
        (0..self.dim)
            .map(|i| {
                let it = self.points.iter().map(|p| &p.0[i]);
                match (it.clone().min(), it.max()) {
                    (Some(lo), Some(hi)) => hi - lo,
                    _ => BigInt::zero(),
                }
            })
            .collect()
    }
}

impl Serialize for GridDrawing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Points<'a>(&'a [GridPoint]);
        impl Serialize for Points<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (v, p) in self.0.iter().enumerate() {
                    m.serialize_entry(&v.to_string(), p)?;
                }
                m.end()
            }
        }
        let edges: Vec<[usize; 2]> = self.graph.edges().iter().map(|&(u, v)| [u, v]).collect();
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("dim", &self.dim)?;
        m.serialize_entry("n", &self.graph.n())?;
        m.serialize_entry("edges", &edges)?;
        m.serialize_entry("points", &Points(&self.points))?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for GridDrawing {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            dim: usize,
            n: usize,
            edges: Vec<[usize; 2]>,
            points: BTreeMap<String, GridPoint>,
        }
        let raw = Raw::deserialize(d)?;
        let graph =
            Graph::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1]))).map_err(D::Error::custom)?;
        let mut slots: Vec<Option<GridPoint>> = vec![None; raw.n];
        for (key, p) in raw.points {
            let v: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("points: bad vertex key {key:?}")))?;
            if v >= raw.n {
                return Err(D::Error::custom(format!("points: vertex {v} out of range")));
            }
            slots[v] = Some(p);
        }
        let points = slots
            .into_iter()
            .enumerate()
            .map(|(v, p)| p.ok_or_else(|| D::Error::custom(format!("points: vertex {v} missing"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        GridDrawing::with_dim(graph, points, raw.dim).map_err(D::Error::custom)
    }
}

/// First violation of the drawing rules, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrawingDefect {
    SharedPoint(usize, usize),
    VertexOnEdge { vertex: usize, edge: (usize, usize) },
}

pub fn drawing_defect(dr: &GridDrawing) -> Option<DrawingDefect> {
    let mut seen: BTreeMap<&GridPoint, usize> = BTreeMap::new();
    for (v, p) in dr.points.iter().enumerate() {
        if let Some(&u) = seen.get(p) {
            return Some(DrawingDefect::SharedPoint(u, v));
        }
        seen.insert(p, v);
    }
    for &(u, v) in dr.graph.edges() {
        let (a, b) = (&dr.points[u], &dr.points[v]);
        for (w, p) in dr.points.iter().enumerate() {
            if w != u && w != v && on_segment(a, b, p, false) {
                return Some(DrawingDefect::VertexOnEdge {
                    vertex: w,
                    edge: (u, v),
                });
            }
        }
    }
    None
}

/// Injective, and no vertex sits on the closed segment of an edge not incident to it.
pub fn is_valid_drawing(dr: &GridDrawing) -> bool {
    drawing_defect(dr).is_none()
}

/// Largest number of lattice points on an edge segment; 0 without edges.
pub fn gp(dr: &GridDrawing) -> BigInt {
    dr.graph
        .edges()
        .iter()
        .map(|&(u, v)| difference_gcd(&dr.points[u], &dr.points[v]) + 1)
        .max()
        .unwrap_or_else(BigInt::zero)
}

/// Every edge segment is primitive (vacuous without edges).
pub fn is_primitive_drawing(dr: &GridDrawing) -> bool {
    dr.graph
        .edges()
        .iter()
        .all(|&(u, v)| difference_gcd(&dr.points[u], &dr.points[v]).is_one())
}

/// No two edge segments meet except at a shared endpoint.
pub fn is_planar_drawing(dr: &GridDrawing) -> Result<bool> {
    let pts = dr.planar_points()?;
    Ok(straight_line_planar(dr.graph(), &pts))
}

pub(crate) fn straight_line_planar<T: Clone + num_traits::Num + Ord>(
    g: &Graph,
    pts: &[P2<T>],
) -> bool {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if geom::edges_clash((a, &pts[a]), (b, &pts[b]), (c, &pts[c]), (d, &pts[d])) {
                return false;
            }
        }
    }
    true
}

/// Valid, planar and primitive.
pub fn is_proper(dr: &GridDrawing) -> Result<bool> {
    Ok(is_planar_drawing(dr)? && is_valid_drawing(dr) && is_primitive_drawing(dr))
}

/// Vertices grouped by column rank (all coordinates but the last).
pub fn column_ranks(dr: &GridDrawing) -> BTreeMap<Vec<BigInt>, Vec<usize>> {
    let mut out: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
    for (v, p) in dr.points.iter().enumerate() {
        out.entry(p.rank().to_vec()).or_default().push(v);
    }
    out
}

fn gcd64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd64(b, a % b)
    }
}

fn on_seg64(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> bool {
    geom::on_closed_segment(&a, &b, &p)
}

struct BoxSearch<'g> {
    g: &'g Graph,
    cells: Vec<(i64, i64)>,
    pos: Vec<Option<(i64, i64)>>,
    best: Option<i64>,
    nodes: u64,
    budget: u64,
}

impl BoxSearch<'_> {
    fn fits(&self, v: usize, p: (i64, i64)) -> bool {
        let g = self.g;
        for w in 0..g.n() {
            if self.pos[w] == Some(p) {
                return false;
            }
        }
        // p must avoid segments of already-placed edges (none touches v yet)
        for &(a, b) in g.edges() {
            if let (Some(pa), Some(pb)) = (self.pos[a], self.pos[b]) {
                if on_seg64(pa, pb, p) {
                    return false;
                }
            }
        }
        // new edges at v must avoid placed vertices
        for &u in g.neighbors(v) {
            let Some(pu) = self.pos[u] else { continue };
            for w in 0..g.n() {
                if w == u {
                    continue;
                }
                if let Some(pw) = self.pos[w] {
                    if on_seg64(p, pu, pw) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn edge_gp(&self, v: usize, p: (i64, i64)) -> i64 {
        self.g
            .neighbors(v)
            .iter()
            .filter_map(|&u| self.pos[u])
            .map(|q| gcd64(p.0 - q.0, p.1 - q.1) + 1)
            .max()
            .unwrap_or(0)
    }

    fn run(&mut self, v: usize, current: i64) -> Result<()> {
        let floor = if self.g.edge_count() > 0 { 2 } else { 0 };
        if self.best == Some(floor) {
            return Ok(());
        }
        if v == self.g.n() {
            if self.best.is_none_or(|b| current < b) {
                self.best = Some(current);
            }
            return Ok(());
        }
        for i in 0..self.cells.len() {
            let p = self.cells[i];
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let here = current.max(self.edge_gp(v, p));
            if self.best.is_some_and(|b| here >= b) || !self.fits(v, p) {
                continue;
            }
            self.pos[v] = Some(p);
            self.run(v + 1, here)?;
            self.pos[v] = None;
        }
        Ok(())
    }
}

/// Least gp over all valid drawings of `g` in `[0, size]^2`, or `None` if
/// no valid drawing fits. Intended for very small graphs and boxes.
pub fn min_gp_bruteforce(g: &Graph, size: u32, budget: &Budget) -> Result<Option<u64>> {
    let s = i64::from(size);
    let cells: Vec<(i64, i64)> = (0..=s).flat_map(|x| (0..=s).map(move |y| (x, y))).collect();
    let mut st = BoxSearch {
        g,
        cells,
        pos: vec![None; g.n()],
        best: None,
        nodes: 0,
        budget: budget.max_nodes,
    };
    st.run(0, 0)?;
    Ok(st.best.map(|b| b.to_u64().expect("gp is positive")))
}

/// Hash-set based duplicate check, exposed for callers building drawings incrementally.
pub fn is_injective(points: &[GridPoint]) -> bool {
    let mut seen = HashSet::new();
    points.iter().all(|p| seen.insert(p))
}

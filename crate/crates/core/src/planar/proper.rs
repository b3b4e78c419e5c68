//! Clearance of straight-line embeddings and the snapping of a planar
//! embedding onto a primitive planar grid drawing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{point_segment_dist2, segment_segment_dist2};
use crate::graph::Coloring;
use crate::lattice::{crt_solve, prime_factors, Congruence, GridPoint, ResidueSystem};
use crate::verify::{is_proper, GridDrawing};

use super::RealEmbedding;

/// Smallest squared distance between features that must stay apart:
/// vertex pairs, a vertex and an edge not incident to it, and two
/// vertex-disjoint edges. Zero means the embedding is not a plane drawing.
pub fn min_feature_dist2(e: &RealEmbedding) -> Result<BigRational> {
    let g = &e.graph;
    let p = &e.points;
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition("need at least two vertices".into()));
    }
    let mut best: Option<BigRational> = None;
    let mut offer = |d: BigRational| {
        if best.as_ref().is_none_or(|b| d < *b) {
            best = Some(d);
        }
    };
    for u in 0..n {
        for v in u + 1..n {
            let dx = &p[u].0 - &p[v].0;
            let dy = &p[u].1 - &p[v].1;
            offer(&dx * &dx + &dy * &dy);
        }
    }
    let edges = g.edges();
    for &(a, b) in edges {
        for w in 0..n {
            if w != a && w != b {
                offer(point_segment_dist2(&p[a], &p[b], &p[w]));
            }
        }
    }
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a != c && a != d && b != c && b != d {
                offer(segment_segment_dist2(&p[a], &p[b], &p[c], &p[d]));
            }
        }
    }
    let best = best.expect("at least one vertex pair");
    if best.is_zero() {
        return Err(Error::NotPlanar);
    }
    Ok(best)
}

/// Half the minimum feature distance, as an exact square `r^2`.
pub fn min_feature_distance_sq(e: &RealEmbedding) -> Result<BigRational> {
    Ok(min_feature_dist2(e)? / BigRational::from_integer(4.into()))
}

/// A positive rational `<= sqrt(q)` for positive `q`.
pub fn sqrt_lower(q: &BigRational) -> BigRational {
    let (a, b) = (q.numer(), q.denom());
    BigRational::new((a * b).sqrt(), b.clone())
}

/// The squared bound `1 / (2n^2 - 2n + 1)` on the least nonzero distance
/// from a point of an `n x n` grid to a segment between grid points.
pub fn grid_min_distance_bound(n: u64) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "grid side must be at least 2, got {n}"
        )));
    }
    let n = BigInt::from(n);
    let den = BigInt::from(2) * &n * &n - BigInt::from(2) * &n + 1;
    Ok(BigRational::new(BigInt::one(), den))
}

/// Exhaustive least nonzero squared distance from a point of `{0..n-1}^2`
/// to a segment joining two other points of it, as `(numerator, denominator)`.
pub fn grid_min_distance_scan(n: i64) -> (i128, i128) {
    let pts: Vec<(i64, i64)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    let mut best: (i128, i128) = (i128::MAX, 1);
    let less = |a: (i128, i128), b: (i128, i128)| a.0 * b.1 < b.0 * a.1;
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            let (dx, dy) = ((b.0 - a.0) as i128, (b.1 - a.1) as i128);
            let len2 = dx * dx + dy * dy;
            for &p in &pts {
                let (px, py) = ((p.0 - a.0) as i128, (p.1 - a.1) as i128);
                let dot = px * dx + py * dy;
                let d = if dot <= 0 {
                    (px * px + py * py, 1)
                } else if dot >= len2 {
                    let (qx, qy) = ((p.0 - b.0) as i128, (p.1 - b.1) as i128);
                    (qx * qx + qy * qy, 1)
                } else {
                    let cross = px * dy - py * dx;
                    (cross * cross, len2)
                };
                if d.0 != 0 && less(d, best) {
                    best = d;
                }
            }
        }
    }
    best
}

/// Size and arithmetic of a snapped drawing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperReport {
    pub shear: u64,
    #[serde(with = "crate::lattice::bigint_string")]
    pub x_scale: BigInt,
    #[serde(with = "crate::lattice::bigint_string")]
    pub y_scale: BigInt,
    pub primes: Vec<u64>,
    #[serde(with = "crate::lattice::bigint_string")]
    pub modulus: BigInt,
    #[serde(with = "crate::lattice::bigint_string")]
    pub width: BigInt,
    #[serde(with = "crate::lattice::bigint_string")]
    pub height: BigInt,
}

fn ceil_div(a: &BigRational) -> BigInt {
    a.ceil().to_integer()
}

/// Nearest integer to `t` that is `r (mod m)`.
fn snap(t: &BigRational, r: &BigInt, m: &BigInt) -> BigInt {
    let shifted = (t - BigRational::from_integer(r.clone())) / BigRational::from_integer(m.clone());
    let k = (shifted + BigRational::new(1.into(), 2.into()))
        .floor()
        .to_integer();
    k * m + r
}

/// Turns a plane embedding and a coloring with colors `0..4` into a proper
/// grid drawing whose coordinates mod 2 reproduce the colors: color `k`
/// has `x = k >> 1` and `y = k & 1` modulo 2 and modulo 3, and for every
/// prime `p >= 5` dividing some edge's `dx`, `y = k (mod p)`. Every vertex
/// moves less than half the clearance, so the drawing stays plane. The
/// result is checked by `is_proper` before it is returned.
pub fn properize(e: &RealEmbedding, c: &Coloring) -> Result<(GridDrawing, ProperReport)> {
    let g = &e.graph;
    let n = g.n();
    if c.colors.len() != n {
        return Err(Error::Input(format!(
            "coloring has {} entries for {n} vertices",
            c.colors.len()
        )));
    }
    if let Some((u, v)) = c.conflict(g) {
        return Err(Error::ImproperColoring(u, v));
    }
    if c.colors.iter().any(|&k| k > 3) {
        return Err(Error::Precondition("colors must lie in 0..4".into()));
    }
    let bits = |v: usize| {
        (
            BigInt::from(c.colors[v] >> 1),
            BigInt::from(c.colors[v] & 1),
        )
    };
    if n < 2 {
        let pts = (0..n)
            .map(|v| {
                let (a, b) = bits(v);
                GridPoint(vec![a, b])
            })
            .collect();
        let dr = GridDrawing::with_dim(g.clone(), pts, 2)?;
        let report = ProperReport {
            shear: 0,
            x_scale: BigInt::one(),
            y_scale: BigInt::one(),
            primes: vec![],
            modulus: BigInt::from(6),
            width: BigInt::zero(),
            height: BigInt::zero(),
        };
        return Ok((dr, report));
    }

    // Shear until all x are distinct; each vertex pair forbids at most one shear.
    let mut shear = 0u64;
    let sheared = loop {
        let lam = BigRational::from_integer(shear.into());
        let xs: Vec<BigRational> = e.points.iter().map(|(x, y)| x + &lam * y).collect();
        let mut sorted = xs.clone();
        sorted.sort();
        if sorted.windows(2).all(|w| w[0] != w[1]) {
            break RealEmbedding {
                graph: g.clone(),
                points: xs
                    .into_iter()
                    .zip(e.points.iter().map(|p| p.1.clone()))
                    .collect(),
            };
        }
        shear += 1;
    };

    let mut clear2 = min_feature_dist2(&sheared)?;
    let mut xs: Vec<&BigRational> = sheared.points.iter().map(|p| &p.0).collect();
    xs.sort();
    for w in xs.windows(2) {
        let d = w[1] - w[0];
        let d2 = &d * &d;
        if d2 < clear2 {
            clear2 = d2;
        }
    }
    let r_lo = sqrt_lower(&(clear2 / BigRational::from_integer(4.into())));

    let six = BigInt::from(6);
    let x_scale = ceil_div(&(BigRational::from_integer(12.into()) / &r_lo));
    let sx = BigRational::from_integer(x_scale.clone());
    let x: Vec<BigInt> = (0..n)
        .map(|v| snap(&(&sheared.points[v].0 * &sx), &bits(v).0, &six))
        .collect();

    let mut primes: Vec<u64> = Vec::new();
    for &(u, v) in g.edges() {
        let dx = &x[u] - &x[v];
        if dx.is_zero() {
            return Err(Error::Certification(format!(
                "edge {u}-{v} is vertical after snapping"
            )));
        }
        for p in prime_factors(&dx) {
            if p >= BigInt::from(5) {
                primes
                    .push(p.to_u64().ok_or_else(|| {
                        Error::Certification("edge prime exceeds 64 bits".into())
                    })?);
            }
        }
    }
    primes.sort_unstable();
    primes.dedup();
    let modulus: BigInt = primes.iter().fold(six.clone(), |m, &p| m * p);

    let mut class = Vec::with_capacity(4);
    for k in 0..4u64 {
        let mut rs = ResidueSystem::new(vec![Congruence::new(6, k & 1)?]);
        for &p in &primes {
            rs.push(Congruence::new(p, k)?);
        }
        class.push(crt_solve(&rs)?.value);
    }
    let y_scale = ceil_div(&(BigRational::from_integer(BigInt::from(2) * &modulus) / &r_lo));
    let sy = BigRational::from_integer(y_scale.clone());
    let y: Vec<BigInt> = (0..n)
        .map(|v| snap(&(&sheared.points[v].1 * &sy), &class[c.colors[v]], &modulus))
        .collect();

    let pts: Vec<GridPoint> = x
        .into_iter()
        .zip(y)
        .map(|(a, b)| GridPoint(vec![a, b]))
        .collect();
    let dr = GridDrawing::new(g.clone(), pts)?;
    if !is_proper(&dr)? {
        return Err(Error::Certification("snapped drawing is not proper".into()));
    }
    let ext = dr.extent();
    let report = ProperReport {
        shear,
        x_scale,
        y_scale,
        primes,
        modulus,
        width: ext[0].clone(),
        height: ext[1].clone(),
    };
    Ok((dr, report))
}

/// `(x mod 2, y mod 2)` encoded as `2 (x mod 2) + (y mod 2)`.
pub fn parity_coloring(dr: &GridDrawing) -> Result<Coloring> {
    if dr.dim() != 2 {
        return Err(Error::UnsupportedDimension(dr.dim()));
    }
    let two = BigInt::from(2);
    Ok(Coloring::new(
        dr.points()
            .iter()
            .map(|p| {
                let a = p.0[0].mod_floor(&two);
                let b = p.0[1].mod_floor(&two);
                (a * BigInt::from(2) + b).to_usize().unwrap()
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::Graph;
    use num_traits::Signed;

    fn emb(g: Graph, pts: &[(i64, i64)]) -> RealEmbedding {
        RealEmbedding::from_integer_points(g, pts).unwrap()
    }

    #[test]
    fn bound_examples() {
        assert_eq!(
            grid_min_distance_bound(2).unwrap(),
            BigRational::new(1.into(), 5.into())
        );
        assert_eq!(
            grid_min_distance_bound(10).unwrap(),
            BigRational::new(1.into(), 181.into())
        );
        assert!(grid_min_distance_bound(1).is_err());
        let (a, b) = grid_min_distance_scan(5);
        assert!(a * 41 >= b, "scan {a}/{b}");
    }

    #[test]
    fn parallel_edges_clearance() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let e = emb(g, &[(0, 0), (5, 0), (0, 1), (5, 1)]);
        assert_eq!(
            min_feature_distance_sq(&e).unwrap(),
            BigRational::new(1.into(), 4.into())
        );
    }

    #[test]
    fn triangle_clearance_uses_vertex_to_edge() {
        let e = emb(corpus::complete(3), &[(0, 0), (4, 0), (0, 4)]);
        assert_eq!(
            min_feature_distance_sq(&e).unwrap(),
            BigRational::from_integer(2.into())
        );
    }

    #[test]
    fn crossing_has_no_clearance() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let e = emb(g, &[(0, 0), (2, 2), (0, 2), (2, 0)]);
        assert!(matches!(min_feature_distance_sq(&e), Err(Error::NotPlanar)));
    }

    #[test]
    fn sqrt_lower_is_below() {
        for (a, b) in [(1, 5), (2, 1), (9, 4), (1, 1000)] {
            let q = BigRational::new(a.into(), b.into());
            let l = sqrt_lower(&q);
            assert!(l.is_positive() && &l * &l <= q);
        }
    }

    #[test]
    fn properize_triangle_and_edge() {
        let e = emb(corpus::complete(3), &[(0, 0), (2, 0), (1, 1)]);
        let c = Coloring::new(vec![0, 1, 2]);
        let (dr, _) = properize(&e, &c).unwrap();
        assert!(is_proper(&dr).unwrap());
        assert_eq!(parity_coloring(&dr).unwrap(), c);

        let e = emb(corpus::complete(2), &[(0, 0), (1, 0)]);
        let c = Coloring::new(vec![0, 1]);
        let (dr, _) = properize(&e, &c).unwrap();
        assert_eq!(crate::verify::gp(&dr), BigInt::from(2));
        assert_eq!(parity_coloring(&dr).unwrap(), c);
    }

    #[test]
    fn parity_examples() {
        let dr = GridDrawing::new(
            corpus::complete(2),
            vec![GridPoint::from_i64(&[0, 0]), GridPoint::from_i64(&[2, 2])],
        )
        .unwrap();
        let c = parity_coloring(&dr).unwrap();
        assert_eq!(c.colors[0], c.colors[1]);
    }
}

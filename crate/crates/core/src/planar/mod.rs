//! Planar graphs: plane straight-line layouts, 4-colorings, and proper
//! (primitive and crossing-free) grid drawings.

mod embedding;
mod fary;
mod proper;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{chromatic_number, Coloring, Graph};
use crate::search::Budget;
use crate::verify::{straight_line_planar, GridDrawing};

pub use embedding::{connect_components, embed_connected, is_planar, Rotation};
pub use fary::{canonical_order, grid_layout, shift_placement, triangulate, Triangulation};
pub use proper::{
    grid_min_distance_bound, grid_min_distance_scan, min_feature_dist2, min_feature_distance_sq,
    parity_coloring, properize, sqrt_lower, ProperReport,
};

/// A straight-line drawing with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealEmbedding {
    pub graph: Graph,
    pub points: Vec<(BigRational, BigRational)>,
}

impl RealEmbedding {
    pub fn new(graph: Graph, points: Vec<(BigRational, BigRational)>) -> Result<Self> {
        if points.len() != graph.n() {
            return Err(Error::Input(format!(
                "{} points given for {} vertices",
                points.len(),
                graph.n()
            )));
        }
        Ok(RealEmbedding { graph, points })
    }

    pub fn from_integer_points(graph: Graph, pts: &[(i64, i64)]) -> Result<Self> {
        let r = |x: i64| BigRational::from_integer(BigInt::from(x));
        Self::new(graph, pts.iter().map(|&(x, y)| (r(x), r(y))).collect())
    }

    /// Injective, and no two edges meet except at a shared endpoint.
    pub fn is_plane(&self) -> bool {
        let mut sorted: Vec<_> = self.points.iter().collect();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1]) && straight_line_planar(&self.graph, &self.points)
    }

    /// The coordinates as a grid drawing when all of them are integers.
    pub fn to_grid(&self) -> Option<GridDrawing> {
        let pts = self
            .points
            .iter()
            .map(|(x, y)| {
                (x.is_integer() && y.is_integer())
                    .then(|| crate::lattice::GridPoint(vec![x.to_integer(), y.to_integer()]))
            })
            .collect::<Option<Vec<_>>>()?;
        GridDrawing::with_dim(self.graph.clone(), pts, 2).ok()
    }
}

/// Plane straight-line embedding on the integer grid, certified plane.
pub fn fary_embed(g: &Graph) -> Result<RealEmbedding> {
    let pos = grid_layout(g)?;
    let e = RealEmbedding::from_integer_points(g.clone(), &pos)?;
    if !e.is_plane() {
        return Err(Error::Certification("grid layout is not plane".into()));
    }
    Ok(e)
}

/// An optimal coloring of a planar graph; at most 4 colors.
pub fn four_color(g: &Graph, budget: &Budget) -> Result<Coloring> {
    if !is_planar(g) {
        return Err(Error::NotPlanar);
    }
    let (k, c) = chromatic_number(g, budget)?;
    if k > 4 {
        return Err(Error::Certification(format!(
            "planar graph needed {k} colors"
        )));
    }
    Ok(c)
}

/// The full pipeline: layout, optimal coloring, snapping.
pub fn proper_drawing(g: &Graph, budget: &Budget) -> Result<(GridDrawing, Coloring, ProperReport)> {
    let e = fary_embed(g)?;
    let c = four_color(g, budget)?;
    let (dr, report) = properize(&e, &c)?;
    Ok((dr, c, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::verify::{is_planar_drawing, is_proper};

    #[test]
    fn fary_examples() {
        let e = fary_embed(&corpus::complete(3)).unwrap();
        assert!(e.is_plane());
        let e = fary_embed(&corpus::complete(4)).unwrap();
        assert!(is_planar_drawing(&e.to_grid().unwrap()).unwrap());
        assert!(matches!(
            fary_embed(&corpus::complete(5)),
            Err(Error::NotPlanar)
        ));
    }

    #[test]
    fn four_color_examples() {
        let b = Budget::default();
        assert_eq!(
            four_color(&corpus::complete(4), &b).unwrap().num_colors(),
            4
        );
        assert!(four_color(&corpus::star(6), &b).unwrap().num_colors() <= 2);
        let mut rng = corpus::rng(4);
        let g = corpus::random_planar(30, 0.3, &mut rng);
        let c = four_color(&g, &b).unwrap();
        assert!(c.is_proper(&g) && c.num_colors() <= 4);
    }

    #[test]
    fn pipeline_on_random_planar_graphs() {
        let mut rng = corpus::rng(12);
        for n in [1, 2, 5, 9, 14, 20] {
            let g = corpus::random_planar(n, 0.35, &mut rng);
            let (dr, c, _) = proper_drawing(&g, &Budget::default()).unwrap();
            assert!(is_proper(&dr).unwrap());
            assert_eq!(parity_coloring(&dr).unwrap(), c);
        }
    }

    #[test]
    fn clearance_respects_grid_bound() {
        let mut rng = corpus::rng(21);
        let g = corpus::random_triangulation(20, &mut rng);
        let e = fary_embed(&g).unwrap();
        let w = e
            .points
            .iter()
            .flat_map(|(x, y)| [x.to_integer(), y.to_integer()])
            .max()
            .unwrap();
        let side: u64 = (w + 1u32).try_into().unwrap();
        assert!(min_feature_dist2(&e).unwrap() >= grid_min_distance_bound(side).unwrap());
    }
}

//! Exact planar predicates, generic over integer and rational coordinates.

use std::cmp::Ordering;

use num_traits::{Num, Signed};

/// A point of the plane over an exact ordered ring or field.
pub type P2<T> = (T, T);

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orient<T: Clone + Num + Ord>(a: &P2<T>, b: &P2<T>, c: &P2<T>) -> Ordering {
    let l = (b.0.clone() - a.0.clone()) * (c.1.clone() - a.1.clone());
    let r = (b.1.clone() - a.1.clone()) * (c.0.clone() - a.0.clone());
    l.cmp(&r)
}

fn between<T: Ord>(a: &T, b: &T, x: &T) -> bool {
    (a <= x && x <= b) || (b <= x && x <= a)
}

/// `p` on the closed segment `a`-`b`.
pub fn on_closed_segment<T: Clone + Num + Ord>(a: &P2<T>, b: &P2<T>, p: &P2<T>) -> bool {
    orient(a, b, p) == Ordering::Equal && between(&a.0, &b.0, &p.0) && between(&a.1, &b.1, &p.1)
}

/// Closed segments `a`-`b` and `c`-`d` share at least one point.
pub fn segments_meet<T: Clone + Num + Ord>(a: &P2<T>, b: &P2<T>, c: &P2<T>, d: &P2<T>) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2
        && o3 != o4
        && o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
    {
        return true;
    }
    on_closed_segment(a, b, c)
        || on_closed_segment(a, b, d)
        || on_closed_segment(c, d, a)
        || on_closed_segment(c, d, b)
}

/// Whether two straight edges clash in a plane drawing. Edges sharing an
/// endpoint may only touch there; disjoint edges may not touch at all.
pub fn edges_clash<T: Clone + Num + Ord>(
    (u1, p1): (usize, &P2<T>),
    (v1, q1): (usize, &P2<T>),
    (u2, p2): (usize, &P2<T>),
    (v2, q2): (usize, &P2<T>),
) -> bool {
    let shared = [(u1, u2), (u1, v2), (v1, u2), (v1, v2)]
        .iter()
        .filter(|(x, y)| x == y)
        .count();
    match shared {
        0 => segments_meet(p1, q1, p2, q2),
        1 => {
            // Overlap beyond the common endpoint only if collinear and the
            // far endpoint of one lies on the other.
            let (a, b, c) = if u1 == u2 {
                (p1, q1, q2)
            } else if u1 == v2 {
                (p1, q1, p2)
            } else if v1 == u2 {
                (q1, p1, q2)
            } else {
                (q1, p1, p2)
            };
            orient(a, b, c) == Ordering::Equal
                && (on_closed_segment(a, b, c) || on_closed_segment(a, c, b))
        }
        _ => false,
    }
}

/// Squared distance from `p` to the closed segment `a`-`b` (field coordinates).
pub fn point_segment_dist2<T: Clone + Num + Ord + Signed>(a: &P2<T>, b: &P2<T>, p: &P2<T>) -> T {
    let dx = b.0.clone() - a.0.clone();
    let dy = b.1.clone() - a.1.clone();
    let px = p.0.clone() - a.0.clone();
    let py = p.1.clone() - a.1.clone();
    let len2 = dx.clone() * dx.clone() + dy.clone() * dy.clone();
    let dot = px.clone() * dx.clone() + py.clone() * dy.clone();
    if len2.is_zero() || dot <= T::zero() {
        return px.clone() * px + py.clone() * py;
    }
    if dot >= len2 {
        let qx = p.0.clone() - b.0.clone();
        let qy = p.1.clone() - b.1.clone();
        return qx.clone() * qx + qy.clone() * qy;
    }
    let cross = px * dy - py * dx;
    cross.clone() * cross / len2
}

/// Squared distance between two closed segments (zero if they meet).
pub fn segment_segment_dist2<T: Clone + Num + Ord + Signed>(
    a: &P2<T>,
    b: &P2<T>,
    c: &P2<T>,
    d: &P2<T>,
) -> T {
    if segments_meet(a, b, c, d) {
        return T::zero();
    }
    [
        point_segment_dist2(c, d, a),
        point_segment_dist2(c, d, b),
        point_segment_dist2(a, b, c),
        point_segment_dist2(a, b, d),
    ]
    .into_iter()
    .min()
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(x: i64, y: i64) -> P2<i64> {
        (x, y)
    }

    #[test]
    fn crossing_and_touching() {
        assert!(segments_meet(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        assert!(!segments_meet(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)));
        assert!(segments_meet(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)));
        assert!(segments_meet(&p(0, 0), &p(2, 0), &p(2, 0), &p(3, 0)));
        assert!(!segments_meet(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)));
    }

    #[test]
    fn shared_endpoint_rules() {
        let (a, b, c) = (p(0, 0), p(2, 0), p(1, 0));
        // 0-1 and 0-2 collinear, pointing the same way: overlap
        assert!(edges_clash((0, &a), (1, &b), (0, &a), (2, &c)));
        let d = p(-1, 0);
        assert!(!edges_clash((0, &a), (1, &b), (0, &a), (2, &d)));
        let e = p(0, 3);
        assert!(!edges_clash((0, &a), (1, &b), (2, &e), (0, &a)));
    }

    #[test]
    fn distances() {
        let r = |x: i64| BigRational::from_integer(x.into());
        let a = (r(0), r(0));
        let b = (r(4), r(0));
        assert_eq!(point_segment_dist2(&a, &b, &(r(2), r(3))), r(9));
        assert_eq!(point_segment_dist2(&a, &b, &(r(7), r(4))), r(25));
        assert_eq!(
            segment_segment_dist2(&a, &b, &(r(0), r(1)), &(r(4), r(1))),
            r(1)
        );
        let q = point_segment_dist2(&a, &(r(1), r(2)), &(r(1), r(0)));
        assert_eq!(q, BigRational::new(4.into(), 5.into()));
    }
}

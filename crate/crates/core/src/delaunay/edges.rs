//! Edge and triangle status: Delaunay via the Voronoi dual, local Delaunay,
//! visibility and constrained Delaunay.

use std::cmp::Ordering;

use num_traits::Zero;

use super::{ConstraintSet, Edge, MeshError, SiteSet, TriMesh};
use crate::geometry::{
    in_circumcircle, locate_point, orient_sign, segment_intersection, CirclePosition, Point, Scalar, Segment,
    SegmentIntersection,
};
use crate::voronoi::{VoronoiDiagram, VoronoiError};

fn mesh_error(e: VoronoiError) -> MeshError {
    match e {
        VoronoiError::Mesh(e) => e,
        other => MeshError::InvalidMesh(other.to_string()),
    }
}

/// Whether the Voronoi cells of `p` and `q` meet along a positive-length
/// segment. Decided from the diagram alone, so it can cross-check a mesh.
pub fn is_delaunay_edge(m: &TriMesh, v: &VoronoiDiagram, p: usize, q: usize) -> Result<bool, MeshError> {
    m.sites().check_pair(p, q)?;
    crate::voronoi::cells_strongly_near(v, p, q).map_err(mesh_error)
}

/// Whether the circumcenter of triangle `t` lies in the closed cells of all three of its vertices.
pub fn is_delaunay_triangle(m: &TriMesh, v: &VoronoiDiagram, t: usize) -> Result<bool, MeshError> {
    let tri = m.triangle(t)?;
    let center = m.circumcircle(t)?.center;
    for &i in &tri {
        let cell = v.cell(i).map_err(mesh_error)?;
        if !locate_point(&center, &cell.polygon).in_closure() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hull and constrained edges pass; an interior edge passes when the apex of
/// the second triangle is not strictly inside the circumcircle of the first.
pub fn is_locally_delaunay(m: &TriMesh, e: Edge) -> Result<bool, MeshError> {
    let info = m.edge(e)?;
    if info.is_hull() || info.is_constrained() {
        return Ok(true);
    }
    let apexes = m.opposite_vertices(e)?;
    let first = info.triangles().next().expect("edge has a triangle");
    let [a, b, c] = m.oriented_from(first, apexes[0]);
    let pts = m.points();
    let pos = in_circumcircle(&pts[a], &pts[b], &pts[c], &pts[apexes[1]]).expect("mesh triangles are counterclockwise");
    Ok(pos != CirclePosition::Inside)
}

/// No other site lies inside `pq` and no other constraint meets its interior.
pub fn is_visible(s: &SiteSet, l: &ConstraintSet, p: usize, q: usize) -> Result<bool, MeshError> {
    s.check_pair(p, q)?;
    let pts = s.points();
    let pq = s.segment(Edge::new(p, q));
    if (0..pts.len()).any(|k| k != p && k != q && pq.contains_in_interior(&pts[k])) {
        return Ok(false);
    }
    for &c in l.edges() {
        if c == Edge::new(p, q) || c.hi() >= pts.len() {
            continue;
        }
        let blocked = match segment_intersection(&pq, &s.segment(c)) {
            SegmentIntersection::Empty => false,
            SegmentIntersection::SinglePoint(x) => pq.contains_in_interior(&x),
            SegmentIntersection::SubSegment(_) => true,
        };
        if blocked {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `pq` is a constraint, or `p` and `q` see each other and some circle
/// through them holds no site that is visible from the interior of `pq`.
///
/// Sites and constraint segments are the occluders. The circles through
/// `p` and `q` form a one-parameter family (centers on the bisector); each
/// visible site forbids an open half-line of parameters, so a circle exists
/// iff the remaining closed bounds are compatible.
pub fn is_constrained_delaunay_edge(s: &SiteSet, l: &ConstraintSet, p: usize, q: usize) -> Result<bool, MeshError> {
    s.check_pair(p, q)?;
    if l.contains(Edge::new(p, q)) {
        return Ok(true);
    }
    if !is_visible(s, l, p, q)? {
        return Ok(false);
    }
    let pts = s.points();
    let (pp, qq) = (&pts[p], &pts[q]);
    let m = pp.midpoint(qq);
    // normal of pq, pointing to its left
    let nx = -(qq.y() - pp.y());
    let ny = qq.x() - pp.x();
    let mut lower: Option<Scalar> = None;
    let mut upper: Option<Scalar> = None;
    for (k, site) in pts.iter().enumerate() {
        if k == p || k == q || orient_sign(pp, qq, site) == Ordering::Equal {
            continue;
        }
        if !visible_from_open_segment(s, l, p, q, k) {
            continue;
        }
        // site is inside the circle with center m + t*n iff a < 2 t b
        let a = site.squared_distance(&m) - pp.squared_distance(&m);
        let b = &nx * (site.x() - pp.x()) + &ny * (site.y() - pp.y());
        debug_assert!(!b.is_zero());
        let bound = a / (b.clone() * Scalar::from_integer(2.into()));
        if b > Scalar::zero() {
            upper = Some(upper.map_or(bound.clone(), |u: Scalar| u.min(bound)));
        } else {
            lower = Some(lower.map_or(bound.clone(), |u: Scalar| u.max(bound)));
        }
    }
    Ok(match (lower, upper) {
        (Some(lo), Some(hi)) => lo <= hi,
        _ => true,
    })
}

/// Whether site `k` is seen from at least one interior point of `pq`.
fn visible_from_open_segment(s: &SiteSet, l: &ConstraintSet, p: usize, q: usize, k: usize) -> bool {
    let pts = s.points();
    let (pp, qq, eye) = (&pts[p], &pts[q], &pts[k]);
    let mut occluders: Vec<&Point> = pts
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, x)| x)
        .collect();
    for &c in l.edges() {
        occluders.push(&pts[c.lo()]);
        occluders.push(&pts[c.hi()]);
    }
    // what x sees can only change where the sight line x -> eye passes an occluder point
    let zero = Scalar::zero();
    let one = Scalar::from_integer(1.into());
    let mut params = vec![zero.clone(), one.clone()];
    for o in occluders {
        if o == eye {
            continue;
        }
        let fp = crate::geometry::cross(eye, o, pp);
        let fq = crate::geometry::cross(eye, o, qq);
        if fp != fq {
            let t = &fp / (&fp - &fq);
            if t > zero && t < one {
                params.push(t);
            }
        }
    }
    params.sort();
    params.dedup();
    let half = Scalar::new(1.into(), 2.into());
    let mut probes: Vec<Scalar> = params[1..params.len() - 1].to_vec();
    probes.extend(params.windows(2).map(|w| (&w[0] + &w[1]) * &half));
    probes.iter().any(|t| sees(s, l, &pp.lerp(qq, t), k))
}

fn sees(s: &SiteSet, l: &ConstraintSet, x: &Point, k: usize) -> bool {
    let pts = s.points();
    let eye = &pts[k];
    let sight = Segment::new(x.clone(), eye.clone()).expect("x is not a site");
    if pts
        .iter()
        .enumerate()
        .any(|(i, o)| i != k && sight.contains_in_interior(o))
    {
        return false;
    }
    l.edges()
        .iter()
        .all(|&c| match segment_intersection(&sight, &s.segment(c)) {
            SegmentIntersection::Empty => true,
            SegmentIntersection::SinglePoint(y) => &y == x || &y == eye,
            SegmentIntersection::SubSegment(_) => false,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delaunay::{constrained_triangulate, triangulate};
    use crate::voronoi::voronoi_diagram;

    fn sites(coords: &[(i64, i64)]) -> SiteSet {
        SiteSet::from_ints(coords).unwrap()
    }

    #[test]
    fn delaunay_edges_from_voronoi() {
        let s = sites(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
        let m = triangulate(&s).unwrap();
        let v = voronoi_diagram(&s, None).unwrap();
        assert!(is_delaunay_edge(&m, &v, 0, 3).unwrap());
        for t in 0..3 {
            assert!(is_delaunay_triangle(&m, &v, t).unwrap());
        }
        assert_eq!(is_delaunay_edge(&m, &v, 2, 2), Err(MeshError::RepeatedIndex(2)));
        assert!(matches!(
            is_delaunay_edge(&m, &v, 0, 9),
            Err(MeshError::IndexOutOfRange { .. })
        ));

        let s = sites(&[(0, 0), (2, 0), (4, 0), (2, 1)]);
        let m = triangulate(&s).unwrap();
        let v = voronoi_diagram(&s, None).unwrap();
        assert!(!is_delaunay_edge(&m, &v, 0, 2).unwrap());
    }

    #[test]
    fn flipped_diagonal_is_not_delaunay() {
        // (5,3) is outside the circle through (0,0),(4,0),(0,3), so 1-3 is the Delaunay diagonal
        let s = sites(&[(0, 0), (4, 0), (5, 3), (0, 3)]);
        let good = triangulate(&s).unwrap();
        assert!(good.has_edge(1, 3));
        let bad = TriMesh::from_parts(s.clone(), vec![[0, 1, 2], [0, 2, 3]], &[]).unwrap();
        let v = voronoi_diagram(&s, None).unwrap();
        for t in 0..2 {
            assert!(!is_delaunay_triangle(&bad, &v, t).unwrap());
            assert!(is_delaunay_triangle(&good, &v, t).unwrap());
        }
        assert!(!is_locally_delaunay(&bad, Edge::new(0, 2)).unwrap());
        assert!(is_locally_delaunay(&good, Edge::new(1, 3)).unwrap());
        assert!(is_locally_delaunay(&bad, Edge::new(0, 1)).unwrap());
        assert_eq!(
            is_locally_delaunay(&bad, Edge::new(1, 3)),
            Err(MeshError::UnknownEdge(Edge::new(1, 3)))
        );
    }

    #[test]
    fn visibility() {
        let none = ConstraintSet::empty();
        assert!(is_visible(&sites(&[(0, 0), (4, 0), (2, 1)]), &none, 0, 1).unwrap());
        assert!(!is_visible(&sites(&[(0, 0), (4, 0), (2, 0)]), &none, 0, 1).unwrap());
        let s = sites(&[(0, 0), (4, 0), (2, 1), (2, -1)]);
        let l = ConstraintSet::new(&s, &[(2, 3)]).unwrap();
        assert!(!is_visible(&s, &l, 0, 1).unwrap());
        // touching at a shared endpoint does not block
        let l = ConstraintSet::new(&s, &[(0, 2)]).unwrap();
        assert!(is_visible(&s, &l, 0, 1).unwrap());
    }

    #[test]
    fn constrained_delaunay_edges() {
        let s = sites(&[(0, 0), (2, 0), (4, 0), (2, 1)]);
        assert!(!is_constrained_delaunay_edge(&s, &ConstraintSet::empty(), 0, 2).unwrap());
        let l = ConstraintSet::new(&s, &[(0, 2)]).unwrap();
        assert!(is_constrained_delaunay_edge(&s, &l, 0, 2).unwrap());

        // a constraint hides the site that would otherwise spoil edge 0-1
        let s = sites(&[(0, 0), (4, 0), (2, 5), (1, 1), (3, 1)]);
        let l = ConstraintSet::new(&s, &[(3, 4)]).unwrap();
        let m = constrained_triangulate(&s, &l).unwrap();
        for (e, _) in m.edges() {
            assert!(
                is_constrained_delaunay_edge(&s, &l, e.lo(), e.hi()).unwrap(),
                "edge {e}"
            );
        }
    }

    #[test]
    fn agrees_with_plain_delaunay_without_constraints() {
        let s = sites(&[(0, 0), (5, 1), (3, 4), (1, 3), (2, 2), (6, 5), (4, -2)]);
        let m = triangulate(&s).unwrap();
        let none = ConstraintSet::empty();
        for p in 0..s.len() {
            for q in p + 1..s.len() {
                assert_eq!(
                    is_constrained_delaunay_edge(&s, &none, p, q).unwrap(),
                    m.has_edge(p, q),
                    "{p}-{q}"
                );
            }
        }
    }
}

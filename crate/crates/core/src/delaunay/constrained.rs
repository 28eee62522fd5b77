//! Constraint insertion by cavity retriangulation.
//!
//! For each constraint missing from the mesh, the triangles whose edges it
//! crosses are removed. The cavity splits along the constraint into two
//! pseudo-polygons, each retriangulated by recursively picking the chain
//! vertex whose circle with the base edge holds no other chain vertex.

use std::cmp::Ordering;

use super::build::delaunay_triangles;
use super::{ConstraintSet, Edge, MeshError, SiteSet, TriMesh};
use crate::geometry::{
    cross, incircle_perturbed, orient_sign, segment_intersection, Point, Scalar, SegmentIntersection,
};

/// Delaunay triangulation of `sites` forced to contain every constraint as an edge.
pub fn constrained_triangulate(sites: &SiteSet, constraints: &ConstraintSet) -> Result<TriMesh, MeshError> {
    validate_constraints(sites, constraints)?;
    let mut triangles = delaunay_triangles(sites)?;
    let pts = sites.points();
    for &c in constraints.edges() {
        insert_constraint(pts, &mut triangles, c);
    }
    TriMesh::assemble(sites.clone(), triangles, constraints.edges())
}

fn validate_constraints(sites: &SiteSet, constraints: &ConstraintSet) -> Result<(), MeshError> {
    let pts = sites.points();
    let edges = constraints.edges();
    for &c in edges {
        let seg = sites.segment(c);
        if let Some(site) = (0..pts.len()).find(|&s| !c.contains(s) && seg.contains(&pts[s])) {
            return Err(MeshError::ConstraintThroughSite { constraint: c, site });
        }
    }
    for (i, &c) in edges.iter().enumerate() {
        let s = sites.segment(c);
        for &d in &edges[i + 1..] {
            let t = sites.segment(d);
            let crossing = match segment_intersection(&s, &t) {
                SegmentIntersection::Empty => false,
                SegmentIntersection::SubSegment(_) => true,
                // touching at a shared endpoint is allowed
                SegmentIntersection::SinglePoint(p) => {
                    let shared = [c.lo(), c.hi()].iter().any(|&v| d.contains(v) && pts[v] == p);
                    !shared
                }
            };
            if crossing {
                return Err(MeshError::CrossingConstraints { first: c, second: d });
            }
        }
    }
    Ok(())
}

fn has_edge(triangles: &[[usize; 3]], c: Edge) -> bool {
    triangles
        .iter()
        .any(|t| (0..3).any(|i| Edge::new(t[i], t[(i + 1) % 3]) == c))
}

/// Whether the open segments `ab` and `uv` cross at a single interior point.
fn properly_cross(pts: &[Point], a: usize, b: usize, u: usize, v: usize) -> bool {
    let o1 = orient_sign(&pts[a], &pts[b], &pts[u]);
    let o2 = orient_sign(&pts[a], &pts[b], &pts[v]);
    let o3 = orient_sign(&pts[u], &pts[v], &pts[a]);
    let o4 = orient_sign(&pts[u], &pts[v], &pts[b]);
    o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o1 != o2
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
        && o3 != o4
}

fn insert_constraint(pts: &[Point], triangles: &mut Vec<[usize; 3]>, c: Edge) {
    if has_edge(triangles, c) {
        return;
    }
    let (a, b) = (c.lo(), c.hi());
    let (crossed, kept): (Vec<[usize; 3]>, Vec<[usize; 3]>) = triangles
        .iter()
        .partition(|t| (0..3).any(|i| properly_cross(pts, a, b, t[i], t[(i + 1) % 3])));

    // Crossed edges ordered along a -> b. Their endpoints on each side give
    // the two chains; a site whose whole star is crossed sits inside the
    // cavity and shows up as a repeated run, so only adjacent repeats go.
    let mut cuts: Vec<(Scalar, usize, usize)> = Vec::new();
    for t in &crossed {
        for i in 0..3 {
            let (u, v) = (t[i], t[(i + 1) % 3]);
            if u < v && properly_cross(pts, a, b, u, v) {
                let (l, r) = if orient_sign(&pts[a], &pts[b], &pts[u]) == Ordering::Greater {
                    (u, v)
                } else {
                    (v, u)
                };
                let da = cross(&pts[l], &pts[r], &pts[a]);
                let db = cross(&pts[l], &pts[r], &pts[b]);
                cuts.push((da.clone() / (da - db), l, r));
            }
        }
    }
    cuts.sort_by(|x, y| x.0.cmp(&y.0));
    let mut upper: Vec<usize> = cuts.iter().rev().map(|c| c.1).collect();
    let mut lower: Vec<usize> = cuts.iter().map(|c| c.2).collect();
    upper.dedup();
    lower.dedup();

    let mut fresh = kept;
    // left side: polygon (a, b, upper...) with the chain left of a -> b
    triangulate_pseudo_polygon(pts, a, b, &upper, &mut fresh);
    // right side: polygon (b, a, lower...) with the chain left of b -> a
    triangulate_pseudo_polygon(pts, b, a, &lower, &mut fresh);
    *triangles = fresh;
}

/// Triangulates the polygon `(u, w, chain...)` (counterclockwise) whose
/// vertices in `chain` all lie left of `u -> w`.
fn triangulate_pseudo_polygon(pts: &[Point], u: usize, w: usize, chain: &[usize], out: &mut Vec<[usize; 3]>) {
    if chain.is_empty() {
        return;
    }
    let mut best = 0;
    for k in 1..chain.len() {
        if incircle_perturbed(pts, [u, w, chain[best], chain[k]]) {
            best = k;
        }
    }
    let c = chain[best];
    out.push([u, w, c]);
    triangulate_pseudo_polygon(pts, c, w, &chain[..best], out);
    triangulate_pseudo_polygon(pts, u, c, &chain[best + 1..], out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delaunay::{is_locally_delaunay, triangulate};

    #[test]
    fn constraint_forces_diagonal() {
        let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (4, 3), (0, 3)]).unwrap();
        for (a, b) in [(0, 2), (1, 3)] {
            let l = ConstraintSet::new(&sites, &[(a, b)]).unwrap();
            let m = constrained_triangulate(&sites, &l).unwrap();
            assert_eq!(m.triangle_count(), 2);
            let info = m.edge(Edge::new(a, b)).unwrap();
            assert!(info.is_constrained());
            assert_eq!(info.triangles().count(), 2);
        }
    }

    #[test]
    fn empty_constraints_match_delaunay() {
        let sites = SiteSet::from_ints(&[(0, 0), (5, 1), (3, 4), (1, 3), (2, 2), (6, 5)]).unwrap();
        assert_eq!(
            constrained_triangulate(&sites, &ConstraintSet::empty()).unwrap(),
            triangulate(&sites).unwrap()
        );
    }

    #[test]
    fn crossing_and_blocked_constraints_are_rejected() {
        let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (4, 3), (0, 3)]).unwrap();
        let l = ConstraintSet::new(&sites, &[(0, 2), (1, 3)]).unwrap();
        assert!(matches!(
            constrained_triangulate(&sites, &l),
            Err(MeshError::CrossingConstraints { .. })
        ));

        let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (2, 0), (2, 3)]).unwrap();
        let l = ConstraintSet::new(&sites, &[(0, 1)]).unwrap();
        assert_eq!(
            constrained_triangulate(&sites, &l),
            Err(MeshError::ConstraintThroughSite {
                constraint: Edge::new(0, 1),
                site: 2
            })
        );
    }

    #[test]
    fn long_constraint_through_many_triangles() {
        // a zig-zag band of sites crossed by the horizontal constraint 0-1
        let mut coords = vec![(0, 0), (20, 0)];
        for x in 1..10 {
            coords.push((2 * x, if x % 2 == 0 { 3 } else { -3 }));
            coords.push((2 * x + 1, if x % 2 == 0 { -1 } else { 1 }));
        }
        let sites = SiteSet::from_ints(&coords).unwrap();
        let l = ConstraintSet::new(&sites, &[(0, 1)]).unwrap();
        let m = constrained_triangulate(&sites, &l).unwrap();
        assert!(m.edge(Edge::new(0, 1)).unwrap().is_constrained());
        for (e, info) in m.edges() {
            if !info.is_constrained() {
                assert!(is_locally_delaunay(&m, e).unwrap(), "edge {e}");
            }
        }
        let h = m.hull_vertex_count();
        assert_eq!(m.triangle_count(), 2 * sites.len() - h - 2);
    }
}

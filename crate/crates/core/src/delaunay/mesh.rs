use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};

use super::{Edge, MeshError, SiteSet};
use crate::geometry::{circumcircle, orient_sign, CircumCircle, Point, Polygon};

/// Incidence record for one undirected mesh edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeInfo {
    first: usize,
    second: Option<usize>,
    constrained: bool,
}

impl EdgeInfo {
    /// Incident triangle ids, ascending.
    pub fn triangles(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.first).chain(self.second)
    }

    pub fn is_hull(&self) -> bool {
        self.second.is_none()
    }

    pub fn is_constrained(&self) -> bool {
        self.constrained
    }

    /// The triangle across this edge from `t`.
    pub fn other(&self, t: usize) -> Option<usize> {
        if self.first == t {
            self.second
        } else if self.second == Some(t) {
            Some(self.first)
        } else {
            None
        }
    }
}

/// An indexed triangle mesh over a site set.
///
/// Triangles are counterclockwise vertex-index triples. They are stored in a
/// canonical form (each rotated so its smallest index comes first, the list
/// sorted), which makes equal triangulations compare and serialize equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriMesh {
    sites: SiteSet,
    triangles: Vec<[usize; 3]>,
    edges: BTreeMap<Edge, EdgeInfo>,
    vertex_triangles: Vec<Vec<usize>>,
}

impl TriMesh {
    /// Validates a triangulation given as CCW index triples.
    ///
    /// The triples must form a consistently oriented triangulated disk that
    /// uses every site and whose boundary is convex, i.e. a triangulation of
    /// the convex hull of the sites. It need not be Delaunay.
    pub fn from_parts(sites: SiteSet, triangles: Vec<[usize; 3]>, constrained: &[Edge]) -> Result<TriMesh, MeshError> {
        let n = sites.len();
        let invalid = |msg: String| Err(MeshError::InvalidMesh(msg));
        if triangles.is_empty() {
            return invalid("no triangles".into());
        }
        let pts = sites.points();
        let mut directed: HashSet<(usize, usize)> = HashSet::new();
        for (t, tri) in triangles.iter().enumerate() {
            for &v in tri {
                if v >= n {
                    return Err(MeshError::IndexOutOfRange { index: v, len: n });
                }
            }
            let [a, b, c] = *tri;
            if a == b || b == c || a == c {
                return invalid(format!("triangle {t} repeats a vertex"));
            }
            if orient_sign(&pts[a], &pts[b], &pts[c]) != Ordering::Greater {
                return invalid(format!("triangle {t} is not counterclockwise"));
            }
            for (u, v) in [(a, b), (b, c), (c, a)] {
                if !directed.insert((u, v)) {
                    return invalid(format!("directed edge {u}->{v} used twice"));
                }
            }
        }
        let mesh = TriMesh::assemble(sites.clone(), triangles, constrained)?;

        let mut used = vec![false; n];
        mesh.triangles.iter().flatten().for_each(|&v| used[v] = true);
        if let Some(v) = used.iter().position(|u| !u) {
            return invalid(format!("site {v} is not a vertex of any triangle"));
        }
        // boundary: directed edges whose reverse is absent, forming one convex cycle
        let mut next: HashMap<usize, usize> = HashMap::new();
        for &(u, v) in &directed {
            if !directed.contains(&(v, u)) && next.insert(u, v).is_some() {
                return invalid(format!("boundary pinches at site {u}"));
            }
        }
        let start = *next.keys().min().expect("a finite triangle list has a boundary");
        let mut cycle = vec![start];
        let mut cur = next[&start];
        while cur != start {
            if cycle.len() > next.len() {
                return invalid("boundary does not close".into());
            }
            cycle.push(cur);
            cur = *next
                .get(&cur)
                .ok_or_else(|| MeshError::InvalidMesh("open boundary".into()))?;
        }
        if cycle.len() != next.len() {
            return invalid("boundary has more than one cycle".into());
        }
        let h = cycle.len();
        for i in 0..h {
            let (a, b, c) = (cycle[i], cycle[(i + 1) % h], cycle[(i + 2) % h]);
            if orient_sign(&pts[a], &pts[b], &pts[c]) == Ordering::Less {
                return invalid(format!("boundary turns clockwise at site {b}"));
            }
        }
        let euler = n as i64 - mesh.edges.len() as i64 + mesh.triangles.len() as i64;
        if euler != 1 {
            return invalid(format!("Euler characteristic {euler}, expected 1"));
        }
        Ok(mesh)
    }

    /// Builds the canonical mesh and its tables without global validation.
    pub(crate) fn assemble(
        sites: SiteSet,
        triangles: Vec<[usize; 3]>,
        constrained: &[Edge],
    ) -> Result<TriMesh, MeshError> {
        let mut triangles: Vec<[usize; 3]> = triangles.into_iter().map(canonical_rotation).collect();
        triangles.sort_unstable();
        let mut edges: BTreeMap<Edge, EdgeInfo> = BTreeMap::new();
        let mut vertex_triangles = vec![Vec::new(); sites.len()];
        for (t, tri) in triangles.iter().enumerate() {
            for i in 0..3 {
                vertex_triangles[tri[i]].push(t);
                let e = Edge::new(tri[i], tri[(i + 1) % 3]);
                match edges.get_mut(&e) {
                    None => {
                        edges.insert(
                            e,
                            EdgeInfo {
                                first: t,
                                second: None,
                                constrained: false,
                            },
                        );
                    }
                    Some(info) if info.second.is_none() => info.second = Some(t),
                    Some(_) => return Err(MeshError::InvalidMesh(format!("edge {e} has more than two triangles"))),
                }
            }
        }
        for &e in constrained {
            match edges.get_mut(&e) {
                Some(info) => info.constrained = true,
                None => return Err(MeshError::UnknownEdge(e)),
            }
        }
        Ok(TriMesh {
            sites,
            triangles,
            edges,
            vertex_triangles,
        })
    }

    pub fn sites(&self) -> &SiteSet {
        &self.sites
    }

    pub fn points(&self) -> &[Point] {
        self.sites.points()
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangle(&self, t: usize) -> Result<[usize; 3], MeshError> {
        self.triangles.get(t).copied().ok_or(MeshError::IndexOutOfRange {
            index: t,
            len: self.triangles.len(),
        })
    }

    pub fn triangle_points(&self, t: usize) -> Result<[&Point; 3], MeshError> {
        let pts = self.points();
        Ok(self.triangle(t)?.map(|v| &pts[v]))
    }

    pub fn triangle_polygon(&self, t: usize) -> Result<Polygon, MeshError> {
        let [a, b, c] = self.triangle_points(t)?;
        Ok(Polygon::triangle(a.clone(), b.clone(), c.clone()).expect("mesh triangles are CCW"))
    }

    pub fn circumcircle(&self, t: usize) -> Result<CircumCircle, MeshError> {
        let [a, b, c] = self.triangle_points(t)?;
        Ok(circumcircle(a, b, c).expect("mesh triangles are not degenerate"))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Edge, &EdgeInfo)> + '_ {
        self.edges.iter().map(|(e, info)| (*e, info))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: Edge) -> Result<&EdgeInfo, MeshError> {
        self.edges.get(&e).ok_or(MeshError::UnknownEdge(e))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains_key(&Edge::new(a, b))
    }

    pub fn constrained_edges(&self) -> Vec<Edge> {
        self.edges().filter(|(_, i)| i.constrained).map(|(e, _)| e).collect()
    }

    /// Sites incident to a hull edge, including collinear ones along hull edges.
    pub fn hull_vertex_count(&self) -> usize {
        let mut on_hull: Vec<usize> = self
            .edges()
            .filter(|(_, info)| info.is_hull())
            .flat_map(|(e, _)| [e.lo(), e.hi()])
            .collect();
        on_hull.sort_unstable();
        on_hull.dedup();
        on_hull.len()
    }

    pub fn is_hull_vertex(&self, v: usize) -> bool {
        self.vertex_triangles(v).iter().any(|&t| {
            let tri = self.triangles[t];
            (0..3).any(|i| {
                let e = Edge::new(tri[i], tri[(i + 1) % 3]);
                e.contains(v) && self.edges[&e].is_hull()
            })
        })
    }

    /// Triangles sharing an edge with `t`, ascending.
    pub fn adjacency(&self, t: usize) -> Result<Vec<usize>, MeshError> {
        let tri = self.triangle(t)?;
        let mut out: Vec<usize> = (0..3)
            .filter_map(|i| self.edges[&Edge::new(tri[i], tri[(i + 1) % 3])].other(t))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Triangles incident to site `v`, ascending.
    pub fn vertex_triangles(&self, v: usize) -> &[usize] {
        self.vertex_triangles.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Vertices of the incident triangles opposite edge `e`, in triangle-id order.
    pub(crate) fn opposite_vertices(&self, e: Edge) -> Result<Vec<usize>, MeshError> {
        let info = self.edge(e)?;
        Ok(info
            .triangles()
            .map(|t| {
                *self.triangles[t]
                    .iter()
                    .find(|&&v| !e.contains(v))
                    .expect("triangle has a third vertex")
            })
            .collect())
    }

    /// Site indices of a triangle starting at `a`, keeping counterclockwise order.
    pub(crate) fn oriented_from(&self, t: usize, a: usize) -> [usize; 3] {
        let tri = self.triangles[t];
        let i = tri.iter().position(|&v| v == a).expect("vertex of triangle");
        [tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]]
    }
}

fn canonical_rotation(tri: [usize; 3]) -> [usize; 3] {
    let i = (0..3).min_by_key(|&i| tri[i]).unwrap();
    [tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_mesh() -> TriMesh {
        let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (4, 3), (0, 3)]).unwrap();
        TriMesh::from_parts(sites, vec![[0, 1, 2], [2, 3, 0]], &[]).unwrap()
    }

    #[test]
    fn canonical_form_and_tables() {
        let m = square_mesh();
        assert_eq!(m.triangles(), &[[0, 1, 2], [0, 2, 3]]);
        assert_eq!(m.edge_count(), 5);
        assert_eq!(m.hull_vertex_count(), 4);
        assert_eq!(m.adjacency(0).unwrap(), vec![1]);
        assert!(m.edge(Edge::new(0, 2)).unwrap().triangles().eq([0, 1]));
        assert!(m.edge(Edge::new(0, 1)).unwrap().is_hull());
        assert_eq!(m.adjacency(2), Err(MeshError::IndexOutOfRange { index: 2, len: 2 }));
    }

    #[test]
    fn rejects_broken_meshes() {
        let sites = || SiteSet::from_ints(&[(0, 0), (4, 0), (4, 3), (0, 3)]).unwrap();
        // clockwise triangle
        assert!(TriMesh::from_parts(sites(), vec![[0, 2, 1], [2, 3, 0]], &[]).is_err());
        // overlapping triangles
        assert!(TriMesh::from_parts(sites(), vec![[0, 1, 2], [0, 1, 3]], &[]).is_err());
        // unused site
        assert!(TriMesh::from_parts(sites(), vec![[0, 1, 2]], &[]).is_err());
        // unknown constrained edge
        assert_eq!(
            TriMesh::from_parts(sites(), vec![[0, 1, 2], [2, 3, 0]], &[Edge::new(1, 3)]),
            Err(MeshError::UnknownEdge(Edge::new(1, 3)))
        );
    }

    #[test]
    fn rejects_non_convex_boundary() {
        let sites = SiteSet::from_ints(&[(0, 0), (4, 0), (1, 1), (0, 4)]).unwrap();
        assert!(TriMesh::from_parts(sites, vec![[0, 1, 2], [0, 2, 3]], &[]).is_err());
    }
}

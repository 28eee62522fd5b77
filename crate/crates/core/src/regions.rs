//! Triangulation regions and Leader neighbourhoods.
//!
//! A region is a maximal set of triangles that are pairwise strongly near,
//! i.e. a maximal clique of the edge-adjacency graph of the mesh. That graph
//! has degree at most 3, so cliques are enumerated from each triangle's
//! neighbour subsets.

use std::collections::{BTreeSet, HashMap, HashSet};

use thiserror::Error;

use crate::delaunay::TriMesh;
use crate::geometry::{clip_by_polygon, is_convex_polygon, signed_area2, ConvexOverlap, Point, Polygon};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum RegionError {
    #[error("regions come from different meshes")]
    MixedMeshes,
    #[error("union of the region's triangles has a hole")]
    UnionHasHole,
    #[error("union of the region's triangles is not a simple polygon")]
    UnionNotSimple,
}

/// Triangle ids of one region, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region<'m> {
    mesh: &'m TriMesh,
    triangles: Vec<usize>,
}

impl<'m> Region<'m> {
    /// A region over arbitrary (deduplicated, sorted) triangle ids; ids must be valid.
    pub fn new(mesh: &'m TriMesh, mut triangles: Vec<usize>) -> Region<'m> {
        triangles.sort_unstable();
        triangles.dedup();
        assert!(
            triangles.iter().all(|&t| t < mesh.triangle_count()),
            "triangle id out of range"
        );
        Region { mesh, triangles }
    }

    pub fn mesh(&self) -> &'m TriMesh {
        self.mesh
    }

    pub fn triangles(&self) -> &[usize] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn contains(&self, t: usize) -> bool {
        self.triangles.binary_search(&t).is_ok()
    }

    /// Mesh vertices of the member triangles.
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.triangles.iter().flat_map(|&t| self.mesh.triangles()[t]).collect()
    }
}

/// All maximal cliques of pairwise strongly near triangles, ordered by their sorted id lists.
pub fn extract_regions(m: &TriMesh) -> Vec<Region<'_>> {
    let adj: Vec<Vec<usize>> = (0..m.triangle_count())
        .map(|t| m.adjacency(t).expect("valid id"))
        .collect();
    let adjacent = |a: usize, b: usize| adj[a].contains(&b);
    let mut out = Vec::new();
    for (t, nbrs) in adj.iter().enumerate() {
        for mask in 0u32..(1 << nbrs.len()) {
            let mut clique = vec![t];
            clique.extend((0..nbrs.len()).filter(|i| mask & (1 << i) != 0).map(|i| nbrs[i]));
            if clique[1..].iter().any(|&u| u < t) {
                continue;
            }
            let pairwise = clique
                .iter()
                .enumerate()
                .all(|(i, &a)| clique[i + 1..].iter().all(|&b| adjacent(a, b)));
            if !pairwise {
                continue;
            }
            // any extension must be adjacent to t, hence one of its neighbours
            let maximal = !nbrs
                .iter()
                .any(|&u| !clique.contains(&u) && clique.iter().all(|&c| adjacent(c, u)));
            if maximal {
                out.push(Region::new(m, clique));
            }
        }
    }
    out.sort_by(|a, b| a.triangles.cmp(&b.triangles));
    out
}

/// Connected components of the edge-adjacency graph. Kept apart from
/// [`extract_regions`] for comparison; components need not be cliques.
pub fn connected_regions(m: &TriMesh) -> Vec<Region<'_>> {
    let n = m.triangle_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut members = Vec::new();
        while let Some(t) = stack.pop() {
            members.push(t);
            for u in m.adjacency(t).expect("valid id") {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        out.push(Region::new(m, members));
    }
    out
}

/// Unordered index pairs `(i, j)`, `i < j`, of regions sharing a mesh vertex.
pub fn proximal_region_pairs(regions: &[Region<'_>]) -> Result<Vec<(usize, usize)>, RegionError> {
    if let Some(first) = regions.first() {
        if regions
            .iter()
            .any(|r| !std::ptr::eq(r.mesh, first.mesh) && r.mesh != first.mesh)
        {
            return Err(RegionError::MixedMeshes);
        }
    }
    let vertex_sets: Vec<BTreeSet<usize>> = regions.iter().map(Region::vertices).collect();
    let mut out = Vec::new();
    for i in 0..regions.len() {
        for j in i + 1..regions.len() {
            if !vertex_sets[i].is_disjoint(&vertex_sets[j]) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// Outer boundary of the union of the member triangles, normalized.
pub fn region_union_polygon(r: &Region<'_>) -> Result<Polygon, RegionError> {
    let tris = r.mesh.triangles();
    let mut directed: HashSet<(usize, usize)> = HashSet::new();
    for &t in &r.triangles {
        let [a, b, c] = tris[t];
        directed.extend([(a, b), (b, c), (c, a)]);
    }
    let mut next: HashMap<usize, usize> = HashMap::new();
    for &(u, v) in &directed {
        if !directed.contains(&(v, u)) && next.insert(u, v).is_some() {
            return Err(RegionError::UnionNotSimple);
        }
    }
    let pts = r.mesh.points();
    let mut starts: Vec<usize> = next.keys().copied().collect();
    starts.sort_unstable();
    let mut visited: HashSet<usize> = HashSet::new();
    let mut cycles: Vec<Vec<Point>> = Vec::new();
    for s in starts {
        if visited.contains(&s) {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = s;
        while visited.insert(v) {
            cycle.push(pts[v].clone());
            v = next[&v];
        }
        cycles.push(cycle);
    }
    match cycles.len() {
        1 => Polygon::new(cycles.pop().expect("one cycle")).map_err(|_| RegionError::UnionNotSimple),
        _ if cycles.iter().any(|c| signed_area2(c) < num_traits::Zero::zero()) => Err(RegionError::UnionHasHole),
        _ => Err(RegionError::UnionNotSimple),
    }
}

pub fn is_region_convex(r: &Region<'_>) -> Result<bool, RegionError> {
    Ok(is_convex_polygon(&region_union_polygon(r)?))
}

/// Common part of the closed member triangles (the intersection reading of a region).
pub fn region_intersection(r: &Region<'_>) -> ConvexOverlap {
    let mut members = r
        .triangles
        .iter()
        .map(|&t| r.mesh.triangle_polygon(t).expect("valid id"));
    let Some(first) = members.next() else {
        return ConvexOverlap::Empty;
    };
    let mut loop_ = first.vertices().to_vec();
    for poly in members {
        loop_ = clip_by_polygon(loop_, &poly);
    }
    ConvexOverlap::from_loop(loop_)
}

/// Number of regions whose union polygon is convex, and the number examined.
/// Regions whose union is not a simple polygon count as non-convex.
pub fn convex_region_count(regions: &[Region<'_>]) -> (usize, usize) {
    let convex = regions.iter().filter(|r| is_region_convex(r).unwrap_or(false)).count();
    (convex, regions.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeaderNeighborhood {
    pub anchor: usize,
    /// Triangles near the anchor, ascending; the anchor itself is excluded.
    pub neighbors: Vec<usize>,
}

/// For each anchor triangle, all other triangles sharing a vertex with it.
/// With a scope, both anchors and neighbours are restricted to its members.
pub fn leader_neighborhoods(m: &TriMesh, scope: Option<&Region<'_>>) -> Vec<LeaderNeighborhood> {
    let in_scope = |t: usize| scope.is_none_or(|r| r.contains(t));
    (0..m.triangle_count())
        .filter(|&t| in_scope(t))
        .map(|a| {
            let neighbors: BTreeSet<usize> = m.triangles()[a]
                .iter()
                .flat_map(|&v| m.vertex_triangles(v).iter().copied())
                .filter(|&b| b != a && in_scope(b))
                .collect();
            LeaderNeighborhood {
                anchor: a,
                neighbors: neighbors.into_iter().collect(),
            }
        })
        .collect()
}

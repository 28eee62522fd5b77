//! Incremental Bowyer–Watson construction.
//!
//! The convex hull is closed off with ghost triangles sharing a vertex at
//! infinity, so every insertion (inside or outside the current hull) is the
//! same cavity retriangulation. Cocircular ties are broken by the symbolic
//! lifting perturbation in [`incircle_perturbed`], which makes the result a
//! unique, index-determined Delaunay triangulation.

use std::cmp::Ordering;
use std::collections::HashMap;

use super::{MeshError, SiteSet, TriMesh};
use crate::geometry::{incircle_perturbed, orient_sign, Point};

const GHOST: usize = usize::MAX;
const NONE: usize = usize::MAX;

#[derive(Clone, Debug)]
struct Slot {
    /// Counterclockwise; a ghost keeps `GHOST` in position 2 and its outside
    /// lies to the left of `v[0] -> v[1]`.
    v: [usize; 3],
    /// `n[i]` is the triangle across the edge opposite `v[i]`.
    n: [usize; 3],
    alive: bool,
}

impl Slot {
    fn is_ghost(&self) -> bool {
        self.v[2] == GHOST
    }
}

pub(crate) struct Builder<'a> {
    pts: &'a [Point],
    slots: Vec<Slot>,
    last: usize,
}

/// Delaunay triangulation of `sites`, inserting sites in index order.
pub fn triangulate(sites: &SiteSet) -> Result<TriMesh, MeshError> {
    let triangles = delaunay_triangles(sites)?;
    TriMesh::assemble(sites.clone(), triangles, &[])
}

pub(crate) fn delaunay_triangles(sites: &SiteSet) -> Result<Vec<[usize; 3]>, MeshError> {
    let pts = sites.points();
    if pts.len() < 3 {
        return Err(MeshError::TooFewSites(pts.len()));
    }
    let third = (2..pts.len())
        .find(|&k| orient_sign(&pts[0], &pts[1], &pts[k]) != Ordering::Equal)
        .ok_or(MeshError::AllCollinear)?;
    let mut builder = Builder::new(pts, [0, 1, third]);
    for k in (2..pts.len()).filter(|&k| k != third) {
        builder.insert(k);
    }
    Ok(builder.real_triangles())
}

impl<'a> Builder<'a> {
    fn new(pts: &'a [Point], seed: [usize; 3]) -> Builder<'a> {
        let [a, mut b, mut c] = seed;
        if orient_sign(&pts[a], &pts[b], &pts[c]) == Ordering::Less {
            std::mem::swap(&mut b, &mut c);
        }
        // slot 0 real (a,b,c); ghosts on edges b->a, c->b, a->c
        let slots = vec![
            Slot {
                v: [a, b, c],
                n: [2, 3, 1],
                alive: true,
            },
            Slot {
                v: [b, a, GHOST],
                n: [3, 2, 0],
                alive: true,
            },
            Slot {
                v: [c, b, GHOST],
                n: [1, 3, 0],
                alive: true,
            },
            Slot {
                v: [a, c, GHOST],
                n: [2, 1, 0],
                alive: true,
            },
        ];
        Builder { pts, slots, last: 0 }
    }

    fn conflicts(&self, t: usize, p: usize) -> bool {
        let s = &self.slots[t];
        if s.is_ghost() {
            let (a, b) = (&self.pts[s.v[0]], &self.pts[s.v[1]]);
            match orient_sign(a, b, &self.pts[p]) {
                Ordering::Greater => true,
                Ordering::Less => false,
                // on the hull line: in conflict only strictly inside the edge
                Ordering::Equal => crate::geometry::Segment::new(a.clone(), b.clone())
                    .map(|seg| seg.contains_in_interior(&self.pts[p]))
                    .unwrap_or(false),
            }
        } else {
            incircle_perturbed(self.pts, [s.v[0], s.v[1], s.v[2], p])
        }
    }

    /// Visibility walk towards `p`; returns a triangle in conflict with `p`.
    fn locate(&self, p: usize) -> usize {
        let target = &self.pts[p];
        let mut t = self.last;
        if self.slots[t].is_ghost() {
            t = self.slots[t].n[2];
        }
        let budget = 4 * self.slots.len() + 16;
        'walk: for step in 0..budget {
            let s = &self.slots[t];
            for k in 0..3 {
                let i = (k + step) % 3;
                let (u, w) = (s.v[(i + 1) % 3], s.v[(i + 2) % 3]);
                if orient_sign(&self.pts[u], &self.pts[w], target) == Ordering::Less {
                    let next = s.n[i];
                    if self.slots[next].is_ghost() {
                        return next;
                    }
                    t = next;
                    continue 'walk;
                }
            }
            return t;
        }
        // not expected on a Delaunay mesh; a linear scan is always correct
        (0..self.slots.len())
            .find(|&t| self.slots[t].alive && self.conflicts(t, p))
            .expect("some triangle conflicts with a new site")
    }

    fn insert(&mut self, p: usize) {
        let start = self.locate(p);
        debug_assert!(self.conflicts(start, p));

        let mut cavity = vec![start];
        let mut in_cavity: HashMap<usize, bool> = HashMap::from([(start, true)]);
        let mut head = 0;
        while head < cavity.len() {
            let t = cavity[head];
            head += 1;
            for &nb in &self.slots[t].n {
                if let std::collections::hash_map::Entry::Vacant(slot) = in_cavity.entry(nb) {
                    let c = self.conflicts(nb, p);
                    slot.insert(c);
                    if c {
                        cavity.push(nb);
                    }
                }
            }
        }

        // cavity boundary edges (u, w) with the outside neighbour across them
        let mut boundary = Vec::new();
        for &t in &cavity {
            let s = &self.slots[t];
            for i in 0..3 {
                let nb = s.n[i];
                if !in_cavity[&nb] {
                    boundary.push((s.v[(i + 1) % 3], s.v[(i + 2) % 3], nb, t));
                }
            }
        }
        for &t in &cavity {
            self.slots[t].alive = false;
        }

        let mut by_start: HashMap<usize, usize> = HashMap::with_capacity(boundary.len());
        let mut by_end: HashMap<usize, usize> = HashMap::with_capacity(boundary.len());
        let mut created = Vec::with_capacity(boundary.len());
        for &(u, w, outside, old) in &boundary {
            // new triangle (u, w, p); ghosts are rotated to keep GHOST last
            let v = if u == GHOST {
                [w, p, GHOST]
            } else if w == GHOST {
                [p, u, GHOST]
            } else {
                [u, w, p]
            };
            let id = self.slots.len();
            self.slots.push(Slot {
                v,
                n: [NONE; 3],
                alive: true,
            });
            let back = self.slots[outside]
                .n
                .iter()
                .position(|&x| x == old)
                .expect("mutual adjacency");
            self.slots[outside].n[back] = id;
            by_start.insert(u, id);
            by_end.insert(w, id);
            created.push((id, u, w, outside));
        }
        for &(id, u, w, outside) in &created {
            // neighbours of (u, w, p): across (u,w) is `outside`, across (w,p)
            // the triangle starting at w, across (p,u) the one ending at u
            let across_wp = by_start[&w];
            let across_pu = by_end[&u];
            let v = self.slots[id].v;
            let mut n = [NONE; 3];
            for i in 0..3 {
                let (a, b) = (v[(i + 1) % 3], v[(i + 2) % 3]);
                n[i] = if (a, b) == (u, w) {
                    outside
                } else if (a, b) == (w, p) {
                    across_wp
                } else {
                    debug_assert_eq!((a, b), (p, u));
                    across_pu
                };
            }
            self.slots[id].n = n;
        }
        self.last = created
            .iter()
            .map(|c| c.0)
            .find(|&id| !self.slots[id].is_ghost())
            .unwrap_or(created[0].0);
    }

    fn real_triangles(&self) -> Vec<[usize; 3]> {
        self.slots
            .iter()
            .filter(|s| s.alive && !s.is_ghost())
            .map(|s| s.v)
            .collect()
    }
}

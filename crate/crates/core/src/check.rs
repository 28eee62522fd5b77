//! Executable property suites run by the `check` command.
//!
//! Each suite yields one [`Check`] per property. A property fails if any item
//! fails; items that hit a cocircular degeneracy are counted separately and
//! turn an otherwise passing property into `degenerate-skip`.

use std::fmt;
use std::str::FromStr;

use crate::delaunay::{is_delaunay_edge, is_locally_delaunay, triangulate, MeshError, SiteSet, TriMesh};
use crate::geometry::{in_circumcircle, is_convex_polygon, locate_point, CirclePosition, Scalar};
use crate::io::CheckRecord;
use crate::proximity::{near, strongly_near_triangles, Shape};
use crate::regions::{convex_region_count, extract_regions, leader_neighborhoods, region_union_polygon};
use crate::voronoi::{cells_strongly_near, common_vertex, Frame, VoronoiDiagram, VoronoiError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Delaunay,
    Dual,
    Lemma2,
    TheoremEquivalence,
    Regions,
    Leader,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Delaunay,
        Suite::Dual,
        Suite::Lemma2,
        Suite::TheoremEquivalence,
        Suite::Regions,
        Suite::Leader,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Delaunay => "delaunay",
            Suite::Dual => "dual",
            Suite::Lemma2 => "lemma2",
            Suite::TheoremEquivalence => "theorem-equivalence",
            Suite::Regions => "regions",
            Suite::Leader => "leader",
        }
    }

    /// Parses comma-separated suite names; `all` expands to every suite.
    pub fn parse_list(s: &str) -> Option<Vec<Suite>> {
        let mut out = Vec::new();
        for name in s.split(',').map(str::trim) {
            if name == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(name.parse().ok()?);
            }
        }
        let mut seen = Vec::new();
        out.retain(|x| {
            !seen.contains(x) && {
                seen.push(*x);
                true
            }
        });
        Some(out)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    DegenerateSkip,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::DegenerateSkip => "degenerate-skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub status: Status,
    pub passed: usize,
    pub total: usize,
    pub detail: Option<String>,
    /// First failing (or, failing none, first degenerate) item.
    pub counterexample: Option<String>,
}

impl Check {
    pub fn record(&self) -> CheckRecord {
        CheckRecord {
            suite: self.suite.name().to_string(),
            name: self.name.to_string(),
            status: self.status.name().to_string(),
            passed: self.passed,
            total: self.total,
            detail: self.detail.clone(),
            counterexample: self.counterexample.clone(),
        }
    }
}

enum Item {
    Pass,
    Fail(String),
    Degenerate(String),
}

struct Tally {
    suite: Suite,
    name: &'static str,
    passed: usize,
    total: usize,
    fail: Option<String>,
    degenerate: Option<String>,
    detail: Option<String>,
}

impl Tally {
    fn new(suite: Suite, name: &'static str) -> Tally {
        Tally {
            suite,
            name,
            passed: 0,
            total: 0,
            fail: None,
            degenerate: None,
            detail: None,
        }
    }

    fn add(&mut self, item: Item) {
        self.total += 1;
        match item {
            Item::Pass => self.passed += 1,
            Item::Fail(w) => {
                self.fail.get_or_insert(w);
            }
            Item::Degenerate(w) => {
                self.degenerate.get_or_insert(w);
            }
        }
    }

    fn pass_if(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.add(if ok { Item::Pass } else { Item::Fail(witness()) });
    }

    fn finish(self) -> Check {
        let (status, counterexample) = match (self.fail, self.degenerate) {
            (Some(w), _) => (Status::Fail, Some(w)),
            (None, Some(w)) => (Status::DegenerateSkip, Some(w)),
            (None, None) => (Status::Pass, None),
        };
        Check {
            suite: self.suite,
            name: self.name,
            status,
            passed: self.passed,
            total: self.total,
            detail: self.detail,
            counterexample,
        }
    }
}

/// Clauses of the Delaunay-triangle equivalence for a site triple, decided
/// from the Voronoi diagram only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Clauses {
    /// The circumcenter lies in all three closed cells.
    pub circumcenter_in_cells: bool,
    /// The three closed cells meet in exactly the circumcenter.
    pub common_vertex: bool,
    /// The three cells are pairwise strongly near. Necessary for a Delaunay
    /// triangle but not sufficient: a triple whose three sides are all
    /// Delaunay edges need not span a Delaunay triangle.
    pub pairwise_strongly_near: bool,
    /// The closed triangle is the union of convex pieces (its interior and edges).
    pub convex_pieces: bool,
}

impl Clauses {
    /// Whether the three cell clauses agree; `convex_pieces` holds for every
    /// triangle and is not part of the comparison.
    pub fn agree(&self) -> bool {
        let c = [
            self.circumcenter_in_cells,
            self.common_vertex,
            self.pairwise_strongly_near,
        ];
        c.iter().all(|&x| x == c[0])
    }
}

/// Evaluates [`Clauses`] for sites `a, b, c` (not collinear).
/// Fails with `DegenerateIntersection` when a fourth cell passes through the common point.
pub fn triangle_clauses(v: &VoronoiDiagram, [a, b, c]: [usize; 3]) -> Result<Clauses, VoronoiError> {
    let pts = v.sites().points();
    let tri = crate::geometry::Polygon::triangle(pts[a].clone(), pts[b].clone(), pts[c].clone())
        .map_err(|_| VoronoiError::Mesh(MeshError::InvalidMesh(format!("sites {a}, {b}, {c} are collinear"))))?;
    let center = crate::geometry::circumcircle(&pts[a], &pts[b], &pts[c])
        .expect("not collinear")
        .center;
    let common = common_vertex(v, a, b, c)?;
    let in_cells = [a, b, c]
        .iter()
        .all(|&i| locate_point(&center, &v.cells()[i].polygon).in_closure());
    let strongly = cells_strongly_near(v, a, b)? && cells_strongly_near(v, b, c)? && cells_strongly_near(v, a, c)?;
    Ok(Clauses {
        circumcenter_in_cells: in_cells,
        common_vertex: common.as_ref() == Some(&center),
        pairwise_strongly_near: strongly,
        convex_pieces: is_convex_polygon(&tri),
    })
}

/// Builds the Delaunay mesh and Voronoi diagram of `sites` and runs `suites`
/// (concurrently); results come back in suite order.
pub fn run_checks(sites: &SiteSet, suites: &[Suite], frame: Option<&Frame>) -> Result<Vec<Check>, VoronoiError> {
    let mesh = triangulate(sites)?;
    let voronoi = VoronoiDiagram::from_delaunay(&mesh, frame)?;
    let per_suite: Vec<Vec<Check>> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| {
                let (m, v) = (&mesh, &voronoi);
                scope.spawn(move || run_suite(suite, m, v))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    });
    Ok(per_suite.into_iter().flatten().collect())
}

pub fn run_suite(suite: Suite, m: &TriMesh, v: &VoronoiDiagram) -> Vec<Check> {
    match suite {
        Suite::Delaunay => delaunay_suite(m),
        Suite::Dual => dual_suite(m, v),
        Suite::Lemma2 => lemma2_suite(m, v),
        Suite::TheoremEquivalence => equivalence_suite(m, v),
        Suite::Regions => regions_suite(m),
        Suite::Leader => leader_suite(m),
    }
}

fn delaunay_suite(m: &TriMesh) -> Vec<Check> {
    let pts = m.points();
    let mut empty = Tally::new(Suite::Delaunay, "empty-circumdisk");
    for (t, tri) in m.triangles().iter().enumerate() {
        let inside = (0..pts.len()).find(|&d| {
            !tri.contains(&d)
                && in_circumcircle(&pts[tri[0]], &pts[tri[1]], &pts[tri[2]], &pts[d]).expect("ccw")
                    == CirclePosition::Inside
        });
        empty.pass_if(inside.is_none(), || {
            format!("site {} inside circumcircle of triangle {t}", inside.unwrap())
        });
    }
    let mut euler = Tally::new(Suite::Delaunay, "euler-counts");
    let (n, h) = (pts.len(), m.hull_vertex_count());
    euler.pass_if(
        m.triangle_count() == 2 * n - h - 2 && m.edge_count() == 3 * n - h - 3,
        || {
            format!(
                "n={n} h={h}: {} triangles, {} edges",
                m.triangle_count(),
                m.edge_count()
            )
        },
    );
    let mut local = Tally::new(Suite::Delaunay, "locally-delaunay");
    for (e, _) in m.edges() {
        local.pass_if(is_locally_delaunay(m, e).expect("mesh edge"), || format!("edge {e}"));
    }
    vec![empty.finish(), euler.finish(), local.finish()]
}

/// Whether interior edge `p-q` has cocircular apexes (a tie the mesh broke arbitrarily).
fn cocircular_edge(m: &TriMesh, p: usize, q: usize) -> bool {
    let e = crate::delaunay::Edge::new(p, q);
    let Ok(info) = m.edge(e) else { return false };
    if info.is_hull() {
        return false;
    }
    let t = info.triangles().next().expect("edge has a triangle");
    let tri = m.triangles()[t];
    let other = m.triangles()[info.other(t).expect("interior")];
    let apex = *other.iter().find(|v| !e.contains(**v)).expect("apex");
    let pts = m.points();
    in_circumcircle(&pts[tri[0]], &pts[tri[1]], &pts[tri[2]], &pts[apex]).expect("ccw") == CirclePosition::On
}

fn dual_suite(m: &TriMesh, v: &VoronoiDiagram) -> Vec<Check> {
    let mut tally = Tally::new(Suite::Dual, "edge-duality");
    let n = m.points().len();
    for p in 0..n {
        for q in p + 1..n {
            let in_mesh = m.has_edge(p, q);
            let dual = is_delaunay_edge(m, v, p, q).expect("valid pair");
            tally.add(if in_mesh == dual {
                Item::Pass
            } else if in_mesh && cocircular_edge(m, p, q) {
                Item::Degenerate(format!("edge {p}-{q} joins cocircular sites; cells meet in a point"))
            } else {
                Item::Fail(format!("pair {p}-{q}: mesh edge {in_mesh}, common cell segment {dual}"))
            });
        }
    }
    vec![tally.finish()]
}

fn lemma2_suite(m: &TriMesh, v: &VoronoiDiagram) -> Vec<Check> {
    let mut tally = Tally::new(Suite::Lemma2, "circumcenter-is-common-vertex");
    for (t, &[a, b, c]) in m.triangles().iter().enumerate() {
        let center = m.circumcircle(t).expect("valid id").center;
        tally.add(match common_vertex(v, a, b, c) {
            Ok(Some(u)) if u == center => Item::Pass,
            Ok(found) => Item::Fail(format!("triangle {t}: circumcenter {center}, common vertex {found:?}")),
            Err(VoronoiError::DegenerateIntersection(u)) => {
                Item::Degenerate(format!("triangle {t}: more than three cells meet at {u}"))
            }
            Err(e) => Item::Fail(format!("triangle {t}: {e}")),
        });
    }
    vec![tally.finish()]
}

fn equivalence_suite(m: &TriMesh, v: &VoronoiDiagram) -> Vec<Check> {
    let mut agree = Tally::new(Suite::TheoremEquivalence, "four-way-agreement");
    let mut holds = Tally::new(Suite::TheoremEquivalence, "mesh-triangles-satisfy-all");
    for (t, &tri) in m.triangles().iter().enumerate() {
        match triangle_clauses(v, tri) {
            Ok(c) => {
                agree.pass_if(c.agree(), || format!("triangle {t}: {c:?}"));
                holds.pass_if(
                    c.circumcenter_in_cells && c.common_vertex && c.pairwise_strongly_near && c.convex_pieces,
                    || format!("triangle {t}: {c:?}"),
                );
            }
            Err(VoronoiError::DegenerateIntersection(u)) => {
                let w = format!("triangle {t}: more than three cells meet at {u}");
                agree.add(Item::Degenerate(w.clone()));
                holds.add(Item::Degenerate(w));
            }
            Err(e) => {
                agree.add(Item::Fail(format!("triangle {t}: {e}")));
                holds.add(Item::Fail(format!("triangle {t}: {e}")));
            }
        }
    }
    vec![agree.finish(), holds.finish()]
}

fn regions_suite(m: &TriMesh) -> Vec<Check> {
    let regions = extract_regions(m);
    let n = m.triangle_count();
    let mut sound = Tally::new(Suite::Regions, "clique-soundness");
    let mut maximal = Tally::new(Suite::Regions, "clique-maximality");
    let mut area = Tally::new(Suite::Regions, "union-area-additivity");
    for (i, r) in regions.iter().enumerate() {
        let ts = r.triangles();
        let pairwise = ts.iter().enumerate().all(|(k, &a)| {
            ts[k + 1..]
                .iter()
                .all(|&b| strongly_near_triangles(m, a, b).expect("valid ids"))
        });
        sound.pass_if(pairwise, || format!("region {i} {ts:?}"));
        let extension = (0..n)
            .find(|&u| !r.contains(u) && ts.iter().all(|&a| strongly_near_triangles(m, a, u).expect("valid ids")));
        maximal.pass_if(extension.is_none(), || {
            format!("region {i} {ts:?} extends by {}", extension.unwrap())
        });
        let sum: Scalar = ts
            .iter()
            .map(|&t| m.triangle_polygon(t).expect("valid id").area())
            .sum();
        match region_union_polygon(r) {
            Ok(poly) => area.pass_if(poly.area() == sum, || format!("region {i} {ts:?}")),
            Err(e) => area.add(Item::Fail(format!("region {i} {ts:?}: {e}"))),
        }
    }
    let mut cover = Tally::new(Suite::Regions, "cover");
    let uncovered = (0..n).find(|&t| !regions.iter().any(|r| r.contains(t)));
    cover.pass_if(uncovered.is_none(), || {
        format!("triangle {} in no region", uncovered.unwrap())
    });

    // a measurement, not a claim: passes whatever the fraction
    let (convex, total) = convex_region_count(&regions);
    let mut fraction = Tally::new(Suite::Regions, "convex-region-fraction");
    fraction.passed = convex;
    fraction.total = total;
    fraction.detail = Some(format!("{:.4}", convex as f64 / total.max(1) as f64));
    vec![
        sound.finish(),
        maximal.finish(),
        cover.finish(),
        area.finish(),
        fraction.finish(),
    ]
}

fn leader_suite(m: &TriMesh) -> Vec<Check> {
    let hoods = leader_neighborhoods(m, None);
    let shapes: Vec<Shape> = (0..m.triangle_count())
        .map(|t| Shape::Polygon(m.triangle_polygon(t).expect("valid id")))
        .collect();
    let mut geometric = Tally::new(Suite::Leader, "geometric-agreement");
    for h in &hoods {
        let expected: Vec<usize> = (0..shapes.len())
            .filter(|&b| b != h.anchor && near(&shapes[h.anchor], &shapes[b]).is_near())
            .collect();
        geometric.pass_if(expected == h.neighbors, || {
            format!(
                "anchor {}: listed {:?}, geometric {:?}",
                h.anchor, h.neighbors, expected
            )
        });
    }
    let mut symmetric = Tally::new(Suite::Leader, "symmetry");
    for h in &hoods {
        for &b in &h.neighbors {
            symmetric.pass_if(hoods[b].neighbors.contains(&h.anchor), || {
                format!("{} lists {b} but not back", h.anchor)
            });
        }
    }
    let mut reflexive = Tally::new(Suite::Leader, "reflexivity");
    for (t, s) in shapes.iter().enumerate() {
        reflexive.pass_if(near(s, s).is_near(), || format!("triangle {t}"));
    }
    vec![geometric.finish(), symmetric.finish(), reflexive.finish()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn statuses(sites: &[(i64, i64)], suite: Suite) -> Vec<(&'static str, Status)> {
        let s = SiteSet::from_ints(sites).unwrap();
        run_checks(&s, &[suite], None)
            .unwrap()
            .iter()
            .map(|c| (c.name, c.status))
            .collect()
    }

    const FAN: [(i64, i64); 4] = [(0, 0), (4, 0), (0, 4), (1, 1)];
    const SQUARE: [(i64, i64); 4] = [(0, 0), (2, 0), (2, 2), (0, 2)];

    #[test]
    fn fan_passes_everything() {
        let s = SiteSet::from_ints(&FAN).unwrap();
        let checks = run_checks(&s, &Suite::ALL, None).unwrap();
        for c in &checks {
            assert_eq!(c.status, Status::Pass, "{c:?}");
        }
        let lemma2 = checks.iter().find(|c| c.suite == Suite::Lemma2).unwrap();
        assert_eq!((lemma2.passed, lemma2.total), (3, 3));
    }

    #[test]
    fn square_is_degenerate_not_failing() {
        assert_eq!(
            statuses(&SQUARE, Suite::Lemma2),
            vec![("circumcenter-is-common-vertex", Status::DegenerateSkip)]
        );
        assert_eq!(
            statuses(&SQUARE, Suite::Dual),
            vec![("edge-duality", Status::DegenerateSkip)]
        );
        assert!(statuses(&SQUARE, Suite::Delaunay).iter().all(|s| s.1 == Status::Pass));
    }

    #[test]
    fn pairwise_clause_is_weaker_off_the_mesh() {
        // the outer triple of the fan: every side is a Delaunay edge, the triangle is not Delaunay
        let s = SiteSet::from_ints(&FAN).unwrap();
        let v = crate::voronoi::voronoi_diagram(&s, None).unwrap();
        let c = triangle_clauses(&v, [0, 1, 2]).unwrap();
        assert!(!c.circumcenter_in_cells && !c.common_vertex && c.convex_pieces);
        assert!(c.pairwise_strongly_near);
        assert!(!c.agree());
    }

    #[test]
    fn convex_fraction_is_reported() {
        let s = SiteSet::from_ints(&[(0, 0), (2, 0), (4, 0), (1, 2), (3, 2), (5, 2)]).unwrap();
        let checks = run_checks(&s, &[Suite::Regions], None).unwrap();
        let f = checks.iter().find(|c| c.name == "convex-region-fraction").unwrap();
        assert_eq!(f.total, 3);
        assert_eq!(f.status, Status::Pass);
        assert!(f.detail.is_some());
    }
}

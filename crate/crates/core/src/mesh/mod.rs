//! Non-manifold triangle meshes with per-edge incidence counts.
//!
//! Triple edges (three incident faces) are first-class citizens here: the mesh
//! is a plain triangle soup plus derived incidence maps, with no halfedge
//! structure, so sheets meeting in threes along a curve need no special
//! casing. Vertex labels are assigned from the local star: incidence counts of
//! the incident edges plus the number of sheets (star components glued across
//! two-face edges).

mod classify;
mod io;
mod validate;

pub use classify::{classify_vertex, cone_residuals, ConeApprox, ConeType};
pub use io::{load_mesh_json, load_mesh_obj, save_mesh_json, save_mesh_obj};
pub use validate::Diagnostic;

use std::collections::BTreeMap;

use nalgebra::{Point3, Vector3};

use crate::{Error, Result};

/// Undirected edge key, endpoints sorted ascending.
pub type EdgeKey = (usize, usize);

pub fn edge_key(a: usize, b: usize) -> EdgeKey {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexLabel {
    Interior,
    Boundary,
    YCurve,
    TPoint,
    Unclassified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeLabel {
    /// One incident face.
    Boundary,
    /// Two incident faces.
    Manifold,
    /// Three incident faces: a triple curve segment.
    Triple,
    /// Four or more incident faces; forbidden on a Plateau mesh.
    Invalid,
}

impl EdgeLabel {
    pub fn from_incidence(count: usize) -> EdgeLabel {
        match count {
            1 => EdgeLabel::Boundary,
            2 => EdgeLabel::Manifold,
            3 => EdgeLabel::Triple,
            _ => EdgeLabel::Invalid,
        }
    }
}

/// Immutable non-manifold triangle mesh with incidence-derived labels.
#[derive(Debug, Clone)]
pub struct SingularMesh {
    vertices: Vec<Point3<f64>>,
    triangles: Vec<[usize; 3]>,
    edges: BTreeMap<EdgeKey, Vec<usize>>,
    vertex_labels: Vec<VertexLabel>,
    vertex_tris: Vec<Vec<usize>>,
    boundary_loops: Vec<Vec<usize>>,
    build_diagnostics: Vec<Diagnostic>,
}

/// Area threshold for degenerate triangles, relative to bbox diagonal squared.
pub const DEGENERATE_AREA_FACTOR: f64 = 1e-14;

/// Default weld tolerance as a fraction of the soup bounding-box diagonal.
pub const DEFAULT_WELD_FACTOR: f64 = 1e-9;

impl SingularMesh {
    /// Build a mesh from a triangle soup, welding vertices within `weld_tolerance`.
    ///
    /// Edges with four or more incident faces are allowed through with an
    /// `Invalid` label and a recorded diagnostic; degenerate triangles abort.
    pub fn build_from_soup(soup: &[[Point3<f64>; 3]], weld_tolerance: f64) -> Result<SingularMesh> {
        if soup.is_empty() {
            return Err(Error::EmptyInput("triangle soup"));
        }
        let mut welder = Welder::new(weld_tolerance.max(0.0));
        let mut triangles = Vec::with_capacity(soup.len());
        for tri in soup {
            let ids = [
                welder.insert(tri[0]),
                welder.insert(tri[1]),
                welder.insert(tri[2]),
            ];
            triangles.push(ids);
        }
        Self::from_parts(welder.points, triangles)
    }

    /// Assemble a mesh from indexed data; no welding, indices are authoritative.
    pub fn from_parts(vertices: Vec<Point3<f64>>, triangles: Vec<[usize; 3]>) -> Result<SingularMesh> {
        if triangles.is_empty() {
            return Err(Error::EmptyInput("triangle list"));
        }
        let n = vertices.len();
        for tri in &triangles {
            for &i in tri {
                if i >= n {
                    return Err(Error::InvalidVertex { index: i, len: n });
                }
            }
        }
        let scale = bbox_diagonal(&vertices).max(f64::MIN_POSITIVE);
        let area_floor = DEGENERATE_AREA_FACTOR * scale * scale;
        for (t, tri) in triangles.iter().enumerate() {
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                return Err(Error::DegenerateTriangle { index: t, area: 0.0 });
            }
            let area = triangle_area(&vertices, tri);
            if area < area_floor {
                return Err(Error::DegenerateTriangle { index: t, area });
            }
        }

        let mut edges: BTreeMap<EdgeKey, Vec<usize>> = BTreeMap::new();
        let mut vertex_tris: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (t, tri) in triangles.iter().enumerate() {
            for k in 0..3 {
                edges.entry(edge_key(tri[k], tri[(k + 1) % 3])).or_default().push(t);
            }
            for &i in tri {
                vertex_tris[i].push(t);
            }
        }

        let mut build_diagnostics = Vec::new();
        for (&e, tris) in &edges {
            if tris.len() >= 4 {
                build_diagnostics.push(Diagnostic::NonPlateauIncidence { edge: e, count: tris.len() });
            }
        }

        let vertex_labels = assign_vertex_labels(n, &triangles, &edges, &vertex_tris);
        let boundary_loops = trace_boundary_loops(&edges);

        Ok(SingularMesh {
            vertices,
            triangles,
            edges,
            vertex_labels,
            vertex_tris,
            boundary_loops,
            build_diagnostics,
        })
    }

    /// Same connectivity, new vertex positions. Labels and loops carry over
    /// unchanged since they are derived from incidence alone.
    pub fn with_vertex_positions(&self, positions: Vec<Point3<f64>>) -> SingularMesh {
        assert_eq!(positions.len(), self.vertices.len());
        SingularMesh {
            vertices: positions,
            ..self.clone()
        }
    }

    pub fn transformed(&self, f: impl Fn(&Point3<f64>) -> Point3<f64>) -> SingularMesh {
        self.with_vertex_positions(self.vertices.iter().map(f).collect())
    }

    pub fn vertices(&self) -> &[Point3<f64>] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &BTreeMap<EdgeKey, Vec<usize>> {
        &self.edges
    }

    pub fn edge_label(&self, e: EdgeKey) -> Option<EdgeLabel> {
        self.edges.get(&e).map(|t| EdgeLabel::from_incidence(t.len()))
    }

    pub fn vertex_label(&self, v: usize) -> VertexLabel {
        self.vertex_labels[v]
    }

    pub fn vertex_labels(&self) -> &[VertexLabel] {
        &self.vertex_labels
    }

    pub fn vertex_star(&self, v: usize) -> &[usize] {
        &self.vertex_tris[v]
    }

    pub fn boundary_loops(&self) -> &[Vec<usize>] {
        &self.boundary_loops
    }

    pub fn build_diagnostics(&self) -> &[Diagnostic] {
        &self.build_diagnostics
    }

    pub fn triple_edges(&self) -> impl Iterator<Item = EdgeKey> + '_ {
        self.edges
            .iter()
            .filter(|(_, t)| t.len() == 3)
            .map(|(&e, _)| e)
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        triangle_area(&self.vertices, &self.triangles[t])
    }

    pub fn total_area(&self) -> f64 {
        (0..self.triangles.len()).map(|t| self.triangle_area(t)).sum()
    }

    /// Unit normal of triangle `t`, following its vertex order.
    pub fn triangle_normal(&self, t: usize) -> Vector3<f64> {
        let [a, b, c] = self.triangles[t];
        let u = self.vertices[b] - self.vertices[a];
        let v = self.vertices[c] - self.vertices[a];
        let n = u.cross(&v);
        let len = n.norm();
        if len > 0.0 {
            n / len
        } else {
            Vector3::zeros()
        }
    }

    pub fn bbox(&self) -> (Point3<f64>, Point3<f64>) {
        bbox(&self.vertices)
    }

    /// Bounding-box diagonal; the characteristic length used for tolerances.
    pub fn scale(&self) -> f64 {
        bbox_diagonal(&self.vertices)
    }

    pub fn min_edge_length(&self) -> f64 {
        self.edges
            .keys()
            .map(|&(a, b)| (self.vertices[a] - self.vertices[b]).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Closed loops formed by the triple edges, traced like boundary loops.
    pub fn triple_loops(&self) -> Vec<Vec<usize>> {
        let triple: BTreeMap<EdgeKey, Vec<usize>> = self
            .edges
            .iter()
            .filter(|(_, t)| t.len() == 3)
            .map(|(&e, t)| (e, t.clone()))
            .collect();
        trace_loops_of(&triple)
    }

    /// Uniform one-to-four refinement; labels re-derive from the refined incidence.
    pub fn refine_uniform(&self) -> SingularMesh {
        let mut midpoints: BTreeMap<EdgeKey, usize> = BTreeMap::new();
        let mut vertices = self.vertices.clone();
        let mut mid = |a: usize, b: usize, vertices: &mut Vec<Point3<f64>>| -> usize {
            *midpoints.entry(edge_key(a, b)).or_insert_with(|| {
                vertices.push(Point3::from((vertices[a].coords + vertices[b].coords) * 0.5));
                vertices.len() - 1
            })
        };
        let mut triangles = Vec::with_capacity(self.triangles.len() * 4);
        for &[a, b, c] in &self.triangles {
            let ab = mid(a, b, &mut vertices);
            let bc = mid(b, c, &mut vertices);
            let ca = mid(c, a, &mut vertices);
            triangles.push([a, ab, ca]);
            triangles.push([ab, b, bc]);
            triangles.push([ca, bc, c]);
            triangles.push([ab, bc, ca]);
        }
        SingularMesh::from_parts(vertices, triangles).expect("refinement preserves validity")
    }

    /// Sub-mesh of the triangles selected by `keep`, with vertices re-indexed.
    pub fn submesh(&self, keep: impl Fn(usize) -> bool) -> Result<SingularMesh> {
        let mut map: BTreeMap<usize, usize> = BTreeMap::new();
        let mut vertices = Vec::new();
        let mut triangles = Vec::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            if !keep(t) {
                continue;
            }
            let mut new_tri = [0usize; 3];
            for (k, &i) in tri.iter().enumerate() {
                let id = *map.entry(i).or_insert_with(|| {
                    vertices.push(self.vertices[i]);
                    vertices.len() - 1
                });
                new_tri[k] = id;
            }
            triangles.push(new_tri);
        }
        SingularMesh::from_parts(vertices, triangles)
    }

    /// Triangle soup copy, used for rebuild round trips.
    pub fn to_soup(&self) -> Vec<[Point3<f64>; 3]> {
        self.triangles
            .iter()
            .map(|&[a, b, c]| [self.vertices[a], self.vertices[b], self.vertices[c]])
            .collect()
    }
}

fn assign_vertex_labels(
    n: usize,
    triangles: &[[usize; 3]],
    edges: &BTreeMap<EdgeKey, Vec<usize>>,
    vertex_tris: &[Vec<usize>],
) -> Vec<VertexLabel> {
    let mut labels = vec![VertexLabel::Unclassified; n];
    for v in 0..n {
        if vertex_tris[v].is_empty() {
            continue;
        }
        let mut triple = 0usize;
        let mut boundary = 0usize;
        let mut invalid = false;
        for (&(a, b), tris) in incident_edges(v, &vertex_tris[v], triangles) {
            let _ = (a, b);
            match EdgeLabel::from_incidence(edges[&(a, b)].len().max(tris)) {
                EdgeLabel::Boundary => boundary += 1,
                EdgeLabel::Triple => triple += 1,
                EdgeLabel::Invalid => invalid = true,
                EdgeLabel::Manifold => {}
            }
        }
        if invalid {
            labels[v] = VertexLabel::Unclassified;
            continue;
        }
        let sheets = sheet_count(v, &vertex_tris[v], triangles, edges);
        labels[v] = if triple >= 4 && sheets == 6 {
            VertexLabel::TPoint
        } else if triple >= 1 {
            VertexLabel::YCurve
        } else if boundary >= 1 {
            VertexLabel::Boundary
        } else {
            VertexLabel::Interior
        };
    }
    labels
}

/// Edges of the star of `v`, as (key, incidence-within-star) pairs.
fn incident_edges<'a>(
    v: usize,
    star: &'a [usize],
    triangles: &'a [[usize; 3]],
) -> impl Iterator<Item = (EdgeKey, usize)> + 'a {
    let mut counts: BTreeMap<EdgeKey, usize> = BTreeMap::new();
    for &t in star {
        let tri = triangles[t];
        for k in 0..3 {
            let (a, b) = (tri[k], tri[(k + 1) % 3]);
            if a == v || b == v {
                *counts.entry(edge_key(a, b)).or_default() += 1;
            }
        }
    }
    counts.into_iter()
}

/// Number of sheets at `v`: connected components of the star triangles glued
/// across two-face edges through `v`.
pub(crate) fn sheet_count(
    v: usize,
    star: &[usize],
    triangles: &[[usize; 3]],
    edges: &BTreeMap<EdgeKey, Vec<usize>>,
) -> usize {
    let idx: BTreeMap<usize, usize> = star.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut parent: Vec<usize> = (0..star.len()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, &t) in star.iter().enumerate() {
        let tri = triangles[t];
        for k in 0..3 {
            let (a, b) = (tri[k], tri[(k + 1) % 3]);
            if a != v && b != v {
                continue;
            }
            let incident = &edges[&edge_key(a, b)];
            if incident.len() != 2 {
                continue;
            }
            for &other in incident {
                if other == t {
                    continue;
                }
                if let Some(&j) = idx.get(&other) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri] = rj;
                    }
                }
            }
        }
    }
    let mut roots: Vec<usize> = (0..star.len()).map(|i| find(&mut parent, i)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

fn trace_boundary_loops(edges: &BTreeMap<EdgeKey, Vec<usize>>) -> Vec<Vec<usize>> {
    let boundary: BTreeMap<EdgeKey, Vec<usize>> = edges
        .iter()
        .filter(|(_, t)| t.len() == 1)
        .map(|(&e, t)| (e, t.clone()))
        .collect();
    trace_loops_of(&boundary)
}

/// Trace closed vertex cycles through the given edge set. Vertices with an
/// incidence other than two end the walk; such edges are left out (validate
/// reports them).
fn trace_loops_of(edge_set: &BTreeMap<EdgeKey, Vec<usize>>) -> Vec<Vec<usize>> {
    let mut adjacency: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in edge_set.keys() {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    let mut loops = Vec::new();
    let mut used: BTreeMap<EdgeKey, bool> = edge_set.keys().map(|&e| (e, false)).collect();
    let starts: Vec<usize> = adjacency.keys().copied().collect();
    for &start in &starts {
        if adjacency[&start].len() != 2 {
            continue;
        }
        // Deterministic walk: begin at the smallest unvisited vertex, step to
        // its smaller-index neighbor first.
        let mut nbrs = adjacency[&start].clone();
        nbrs.sort_unstable();
        let mut next = match nbrs.iter().find(|&&n| !used[&edge_key(start, n)]) {
            Some(&n) => n,
            None => continue,
        };
        let mut cycle = vec![start];
        let mut prev = start;
        used.insert(edge_key(start, next), true);
        let mut ok = true;
        while next != start {
            let nbrs = &adjacency[&next];
            if nbrs.len() != 2 {
                ok = false;
                break;
            }
            let following = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
            cycle.push(next);
            used.insert(edge_key(next, following), true);
            prev = next;
            next = following;
        }
        if ok && cycle.len() >= 3 {
            loops.push(cycle);
        }
    }
    loops
}

struct Welder {
    tol: f64,
    points: Vec<Point3<f64>>,
    grid: BTreeMap<(i64, i64, i64), Vec<usize>>,
}

impl Welder {
    fn new(tol: f64) -> Welder {
        Welder {
            tol,
            points: Vec::new(),
            grid: BTreeMap::new(),
        }
    }

    fn cell_of(&self, p: &Point3<f64>) -> (i64, i64, i64) {
        let s = if self.tol > 0.0 { self.tol } else { 1.0 };
        (
            (p.x / s).floor() as i64,
            (p.y / s).floor() as i64,
            (p.z / s).floor() as i64,
        )
    }

    fn insert(&mut self, p: Point3<f64>) -> usize {
        let (cx, cy, cz) = self.cell_of(&p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(ids) = self.grid.get(&(cx + dx, cy + dy, cz + dz)) {
                        for &id in ids {
                            if (self.points[id] - p).norm() <= self.tol {
                                return id;
                            }
                        }
                    }
                }
            }
        }
        self.points.push(p);
        let id = self.points.len() - 1;
        self.grid.entry((cx, cy, cz)).or_default().push(id);
        id
    }
}

pub(crate) fn triangle_area(vertices: &[Point3<f64>], tri: &[usize; 3]) -> f64 {
    let u = vertices[tri[1]] - vertices[tri[0]];
    let v = vertices[tri[2]] - vertices[tri[0]];
    0.5 * u.cross(&v).norm()
}

pub(crate) fn bbox(points: &[Point3<f64>]) -> (Point3<f64>, Point3<f64>) {
    let mut lo = Point3::new(f64::INFINITY, f64::INFINITY, f64::INFINITY);
    let mut hi = Point3::new(f64::NEG_INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        for k in 0..3 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    (lo, hi)
}

pub(crate) fn bbox_diagonal(points: &[Point3<f64>]) -> f64 {
    let (lo, hi) = bbox(points);
    (hi - lo).norm()
}

/// Default weld tolerance for a soup: `DEFAULT_WELD_FACTOR` times its bbox diagonal.
pub fn default_weld_tolerance(soup: &[[Point3<f64>; 3]]) -> f64 {
    let mut pts = Vec::with_capacity(soup.len() * 3);
    for tri in soup {
        pts.extend_from_slice(tri);
    }
    DEFAULT_WELD_FACTOR * bbox_diagonal(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64, z: f64) -> Point3<f64> {
        Point3::new(x, y, z)
    }

    fn two_triangles_sharing_edge() -> Vec<[Point3<f64>; 3]> {
        vec![
            [p(0.0, 0.0, 0.0), p(1.0, 0.0, 0.0), p(0.0, 1.0, 0.0)],
            [p(1.0, 0.0, 0.0), p(1.0, 1.0, 0.0), p(0.0, 1.0, 0.0)],
        ]
    }

    #[test]
    fn manifold_patch_edge_labels() {
        let mesh = SingularMesh::build_from_soup(&two_triangles_sharing_edge(), 1e-12).unwrap();
        let mut manifold = 0;
        let mut boundary = 0;
        for tris in mesh.edges().values() {
            match tris.len() {
                1 => boundary += 1,
                2 => manifold += 1,
                _ => panic!("unexpected incidence"),
            }
        }
        assert_eq!(manifold, 1);
        assert_eq!(boundary, 4);
    }

    #[test]
    fn three_triangles_make_triple_edge() {
        let spine_a = p(0.0, 0.0, 0.0);
        let spine_b = p(0.0, 1.0, 0.0);
        let soup = vec![
            [spine_a, spine_b, p(1.0, 0.5, 0.0)],
            [spine_a, spine_b, p(-0.5, 0.5, 0.8)],
            [spine_a, spine_b, p(-0.5, 0.5, -0.8)],
        ];
        let mesh = SingularMesh::build_from_soup(&soup, 1e-12).unwrap();
        let triple: Vec<_> = mesh.triple_edges().collect();
        assert_eq!(triple.len(), 1);
        assert_eq!(mesh.vertex_label(0), VertexLabel::YCurve);
        assert_eq!(mesh.vertex_label(1), VertexLabel::YCurve);
    }

    #[test]
    fn edge_incidence_sums_to_three_per_triangle() {
        let mesh = SingularMesh::build_from_soup(&two_triangles_sharing_edge(), 1e-12).unwrap();
        let total: usize = mesh.edges().values().map(|t| t.len()).sum();
        assert_eq!(total, 3 * mesh.triangles().len());
    }

    #[test]
    fn rebuild_from_soup_is_idempotent() {
        let mesh = SingularMesh::build_from_soup(&two_triangles_sharing_edge(), 1e-12).unwrap();
        let rebuilt = SingularMesh::build_from_soup(&mesh.to_soup(), 1e-12).unwrap();
        assert_eq!(mesh.vertex_labels(), rebuilt.vertex_labels());
        assert_eq!(mesh.triangles(), rebuilt.triangles());
        assert_eq!(mesh.boundary_loops(), rebuilt.boundary_loops());
    }

    #[test]
    fn empty_soup_is_rejected() {
        assert!(matches!(
            SingularMesh::build_from_soup(&[], 0.0),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn degenerate_triangle_is_rejected() {
        let soup = vec![[p(0.0, 0.0, 0.0), p(1.0, 0.0, 0.0), p(2.0, 0.0, 0.0)]];
        assert!(matches!(
            SingularMesh::build_from_soup(&soup, 1e-12),
            Err(Error::DegenerateTriangle { .. })
        ));
    }

    #[test]
    fn four_face_edge_reported_but_mesh_returned() {
        let spine_a = p(0.0, 0.0, 0.0);
        let spine_b = p(0.0, 1.0, 0.0);
        let soup = vec![
            [spine_a, spine_b, p(1.0, 0.5, 0.0)],
            [spine_a, spine_b, p(-1.0, 0.5, 0.0)],
            [spine_a, spine_b, p(0.0, 0.5, 1.0)],
            [spine_a, spine_b, p(0.0, 0.5, -1.0)],
        ];
        let mesh = SingularMesh::build_from_soup(&soup, 1e-12).unwrap();
        assert!(mesh
            .build_diagnostics()
            .iter()
            .any(|d| matches!(d, Diagnostic::NonPlateauIncidence { count: 4, .. })));
        assert_eq!(mesh.edge_label((0, 1)), Some(EdgeLabel::Invalid));
    }

    #[test]
    fn boundary_loop_partitions_boundary_edges() {
        let mesh = SingularMesh::build_from_soup(&two_triangles_sharing_edge(), 1e-12).unwrap();
        let loops = mesh.boundary_loops();
        assert_eq!(loops.len(), 1);
        assert_eq!(loops[0].len(), 4);
    }

    #[test]
    fn welding_merges_nearby_vertices() {
        let eps = 1e-12;
        let soup = vec![
            [p(0.0, 0.0, 0.0), p(1.0, 0.0, 0.0), p(0.0, 1.0, 0.0)],
            [p(1.0, eps, 0.0), p(1.0, 1.0, 0.0), p(eps, 1.0, 0.0)],
        ];
        let mesh = SingularMesh::build_from_soup(&soup, 1e-9).unwrap();
        assert_eq!(mesh.vertices().len(), 4);
    }

    #[test]
    fn refine_preserves_labels_on_triple_configuration() {
        let spine_a = p(0.0, 0.0, 0.0);
        let spine_b = p(0.0, 1.0, 0.0);
        let soup = vec![
            [spine_a, spine_b, p(1.0, 0.5, 0.0)],
            [spine_a, spine_b, p(-0.5, 0.5, 0.8)],
            [spine_a, spine_b, p(-0.5, 0.5, -0.8)],
        ];
        let mesh = SingularMesh::build_from_soup(&soup, 1e-12).unwrap();
        let fine = mesh.refine_uniform();
        assert_eq!(fine.triangles().len(), 12);
        // the spine midpoint is a new YCurve vertex
        let triple: Vec<_> = fine.triple_edges().collect();
        assert_eq!(triple.len(), 2);
        let y_count = fine
            .vertex_labels()
            .iter()
            .filter(|&&l| l == VertexLabel::YCurve)
            .count();
        assert_eq!(y_count, 3);
    }
}

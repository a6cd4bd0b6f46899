//! Triangulated convex polyhedron with per-edge facet adjacency.

mod fixtures;
mod generate;
mod hull;
mod io;

pub use fixtures::{cube, icosahedron, octahedron, unit_tetrahedron};
pub use generate::{fibonacci_sphere, generate_inscribed_polyhedron};
pub use hull::convex_hull;
pub use io::{load_mesh, parse_mesh, save_mesh, write_mesh};
pub(crate) use io::{content_lines, fields};

use crate::error::{Error, Result};
use crate::geometry::{Plane, Tolerance, Vec3, DEFAULT_EPS};

/// Triangular facet. `neighbor_ids[e]` is the facet across edge
/// `(vertex_ids[e], vertex_ids[(e + 1) % 3])`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Facet {
    pub vertex_ids: [usize; 3],
    /// Unit outward normal.
    pub normal: Vec3,
    /// Plane offset: the facet plane is `normal . x + offset = 0`.
    pub offset: f64,
    pub neighbor_ids: [usize; 3],
}

impl Facet {
    /// Signed distance of `x` from the facet plane, positive outside.
    #[inline]
    pub fn eval(&self, x: Vec3) -> f64 {
        self.normal.dot(x) + self.offset
    }

    pub fn plane(&self) -> Plane {
        Plane::new(self.normal.x, self.normal.y, self.normal.z, self.offset)
            .expect("validated facet has a unit normal")
    }

    /// Index of the edge shared with facet `other`, if any.
    pub fn edge_towards(&self, other: usize) -> Option<usize> {
        self.neighbor_ids.iter().position(|&n| n == other)
    }
}

/// Validated closed convex triangle mesh. Immutable once built.
#[derive(Debug, Clone)]
pub struct ConvexMesh {
    vertices: Vec<Vec3>,
    facets: Vec<Facet>,
    centroid: Vec3,
    scale: f64,
    tol: Tolerance,
    num_edges: usize,
    links: Vec<[EdgeLink; 3]>,
}

/// Where edge `e` of a facet leads: the neighbouring facet, the index of the
/// same edge within it, and its vertex opposite that edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeLink {
    pub facet: usize,
    pub edge: usize,
    pub apex: usize,
}

/// Builds and validates a mesh with the default tolerance.
pub fn build_mesh(vertices: Vec<Vec3>, facet_vertex_ids: Vec<[usize; 3]>) -> Result<ConvexMesh> {
    ConvexMesh::with_eps(vertices, facet_vertex_ids, DEFAULT_EPS)
}

impl ConvexMesh {
    pub fn new(vertices: Vec<Vec3>, facet_vertex_ids: Vec<[usize; 3]>) -> Result<Self> {
        build_mesh(vertices, facet_vertex_ids)
    }

    /// Builds the mesh: orients every facet outward (flipping its winding when
    /// the vertex centroid is on the positive side), derives adjacency from
    /// shared edges and checks closure, Euler's formula and convexity.
    pub fn with_eps(vertices: Vec<Vec3>, facet_vertex_ids: Vec<[usize; 3]>, eps: f64) -> Result<Self> {
        let nv = vertices.len();
        let nf = facet_vertex_ids.len();
        if nv < 4 || nf < 4 {
            return Err(Error::TooSmall {
                vertices: nv,
                facets: nf,
            });
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }

        let centroid = vertices.iter().fold(Vec3::ZERO, |acc, &v| acc + v) / nv as f64;
        let scale = vertices
            .iter()
            .map(|&v| (v - centroid).norm())
            .fold(0.0, f64::max);
        if scale <= 0.0 {
            return Err(Error::DegenerateFacet { facet: 0 });
        }
        let tol = Tolerance::new(eps, scale);

        let mut facets = Vec::with_capacity(nf);
        for (k, ids) in facet_vertex_ids.iter().enumerate() {
            let mut ids = *ids;
            if let Some(&bad) = ids.iter().find(|&&i| i >= nv) {
                return Err(Error::IndexOutOfRange { facet: k, index: bad });
            }
            if ids[0] == ids[1] || ids[1] == ids[2] || ids[0] == ids[2] {
                return Err(Error::DegenerateFacet { facet: k });
            }
            let [v0, v1, v2] = ids.map(|i| vertices[i]);
            let mut n = (v1 - v0).cross(v2 - v0);
            if 0.5 * n.norm() <= eps * scale * scale {
                return Err(Error::DegenerateFacet { facet: k });
            }
            if n.dot(centroid - v0) > 0.0 {
                ids.swap(1, 2);
                n = -n;
            }
            let normal = n.normalized().ok_or(Error::DegenerateFacet { facet: k })?;
            facets.push(Facet {
                vertex_ids: ids,
                normal,
                offset: -normal.dot(v0),
                neighbor_ids: [usize::MAX; 3],
            });
        }

        let num_edges = link_neighbors(&mut facets)?;
        if 2 * num_edges != 3 * nf || nv + nf != num_edges + 2 {
            return Err(Error::EulerViolation {
                vertices: nv,
                edges: num_edges,
                facets: nf,
            });
        }

        let links = facets
            .iter()
            .enumerate()
            .map(|(k, f)| {
                f.neighbor_ids.map(|g| {
                    let edge = facets[g].edge_towards(k).expect("adjacency is symmetric");
                    EdgeLink {
                        facet: g,
                        edge,
                        apex: facets[g].vertex_ids[(edge + 2) % 3],
                    }
                })
            })
            .collect();
        let mesh = ConvexMesh {
            vertices,
            facets,
            centroid,
            scale,
            tol,
            num_edges,
            links,
        };
        mesh.check_convexity()?;
        for (k, f) in mesh.facets.iter().enumerate() {
            if f.eval(centroid) >= 0.0 {
                return Err(Error::NotConvex {
                    facet: k,
                    vertex: usize::MAX,
                    excess: f.eval(centroid),
                });
            }
        }
        Ok(mesh)
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    #[inline]
    pub fn facet(&self, k: usize) -> &Facet {
        &self.facets[k]
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Vec3 {
        self.vertices[i]
    }

    #[inline]
    pub fn facet_vertices(&self, k: usize) -> [Vec3; 3] {
        self.facets[k].vertex_ids.map(|i| self.vertices[i])
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    /// Bounding-sphere radius about the vertex centroid.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn centroid(&self) -> Vec3 {
        self.centroid
    }

    #[inline]
    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    /// Arithmetic mean of the facet's three vertices.
    pub fn facet_centroid(&self, k: usize) -> Vec3 {
        let [a, b, c] = self.facet_vertices(k);
        (a + b + c) / 3.0
    }

    /// Where each edge of facet `k` leads.
    #[inline]
    pub fn edge_links(&self, k: usize) -> &[EdgeLink; 3] {
        &self.links[k]
    }

    /// The facet sharing edge `edge_index` of facet `k`.
    #[inline]
    pub fn opposite_facet(&self, k: usize, edge_index: usize) -> usize {
        self.facets[k].neighbor_ids[edge_index]
    }

    /// True when `x` is inside every facet half-space, within tolerance.
    pub fn contains(&self, x: Vec3) -> bool {
        let band = self.tol.abs();
        self.facets.iter().all(|f| f.eval(x) <= band)
    }

    /// Triangle index triples in facet order.
    pub fn facet_vertex_ids(&self) -> Vec<[usize; 3]> {
        self.facets.iter().map(|f| f.vertex_ids).collect()
    }

    /// Rebuilds the mesh with every vertex mapped through `f`.
    pub fn transformed(&self, f: impl Fn(Vec3) -> Vec3) -> Result<ConvexMesh> {
        ConvexMesh::with_eps(
            self.vertices.iter().map(|&v| f(v)).collect(),
            self.facet_vertex_ids(),
            self.tol.eps,
        )
    }

    /// Exhaustive convexity test: every vertex on the inner side of every
    /// facet plane, within `eps * scale`.
    pub fn check_convexity(&self) -> Result<()> {
        check_convexity_exhaustive(&self.vertices, &self.facets, self.tol.abs())
    }

    /// Edge-local convexity test: across every edge, the far vertex of the
    /// neighbouring facet lies on the inner side of this facet's plane.
    pub fn check_local_convexity(&self) -> Result<()> {
        check_convexity_local(&self.vertices, &self.facets, self.tol.abs())
    }
}

/// Fills `neighbor_ids` from shared edges; returns the edge count.
fn link_neighbors(facets: &mut [Facet]) -> Result<usize> {
    let nv = facets.iter().flat_map(|f| f.vertex_ids).max().map_or(0, |m| m + 1);
    // directed edges grouped by their start vertex: (end, facet, edge)
    let mut offsets = vec![0usize; nv + 1];
    for f in facets.iter() {
        for &u in &f.vertex_ids {
            offsets[u + 1] += 1;
        }
    }
    for i in 0..nv {
        offsets[i + 1] += offsets[i];
    }
    let mut fill = offsets.clone();
    let mut outgoing = vec![(0usize, 0usize, 0usize); 3 * facets.len()];
    for (k, f) in facets.iter().enumerate() {
        for e in 0..3 {
            let u = f.vertex_ids[e];
            outgoing[fill[u]] = (f.vertex_ids[(e + 1) % 3], k, e);
            fill[u] += 1;
        }
    }
    let edges_from = |u: usize| &outgoing[offsets[u]..offsets[u + 1]];

    let mut directed = 0;
    for k in 0..facets.len() {
        for e in 0..3 {
            let u = facets[k].vertex_ids[e];
            let v = facets[k].vertex_ids[(e + 1) % 3];
            let forward = edges_from(u).iter().filter(|o| o.0 == v).count();
            let count = forward + edges_from(v).iter().filter(|o| o.0 == u).count();
            let back = edges_from(v).iter().find(|o| o.0 == u);
            if count != 2 {
                return Err(Error::NotClosed {
                    u: u.min(v),
                    v: u.max(v),
                    count,
                });
            }
            match back {
                Some(&(_, other, _)) => facets[k].neighbor_ids[e] = other,
                None => {
                    let other = edges_from(u).iter().find(|o| o.0 == v && o.1 != k).map_or(k, |o| o.1);
                    return Err(Error::InconsistentOrientation { first: k, second: other });
                }
            }
            directed += 1;
        }
    }
    Ok(directed / 2)
}

fn check_convexity_exhaustive(vertices: &[Vec3], facets: &[Facet], band: f64) -> Result<()> {
    let clusters = VertexClusters::new(vertices);
    for (k, f) in facets.iter().enumerate() {
        if let Some((vertex, excess)) = clusters.first_above(f.normal, f.offset, band) {
            return Err(Error::NotConvex { facet: k, vertex, excess });
        }
    }
    Ok(())
}

/// Vertices grouped into small spatially coherent clusters, each with a
/// bounding sphere, so a plane test scans only the clusters whose sphere
/// reaches above the plane.
struct VertexClusters {
    order: Vec<usize>,
    xs: Vec<f64>,
    ys: Vec<f64>,
    zs: Vec<f64>,
    // cluster bounding spheres, structure-of-arrays
    cx: Vec<f64>,
    cy: Vec<f64>,
    cz: Vec<f64>,
    cr: Vec<f64>,
    starts: Vec<usize>,
}

impl VertexClusters {
    const LEAF: usize = 16;

    fn new(vertices: &[Vec3]) -> Self {
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        let mut starts = vec![0];
        split_clusters(vertices, &mut order, 0, &mut starts);
        let mut c = VertexClusters {
            xs: order.iter().map(|&i| vertices[i].x).collect(),
            ys: order.iter().map(|&i| vertices[i].y).collect(),
            zs: order.iter().map(|&i| vertices[i].z).collect(),
            order,
            cx: Vec::new(),
            cy: Vec::new(),
            cz: Vec::new(),
            cr: Vec::new(),
            starts,
        };
        for w in c.starts.windows(2) {
            let members = &c.order[w[0]..w[1]];
            let center = members.iter().fold(Vec3::ZERO, |a, &i| a + vertices[i]) / members.len() as f64;
            let radius = members.iter().map(|&i| (vertices[i] - center).norm()).fold(0.0, f64::max);
            c.cx.push(center.x);
            c.cy.push(center.y);
            c.cz.push(center.z);
            // padded so rounding in the bound never hides a vertex
            c.cr.push(radius * (1.0 + 1e-12) + center.max_abs() * 1e-15);
        }
        c
    }

    /// Some vertex with `n . v + offset > band`, if one exists.
    fn first_above(&self, n: Vec3, offset: f64, band: f64) -> Option<(usize, f64)> {
        let limit = band - offset;
        let n_len = n.norm();
        for c in 0..self.cr.len() {
            let bound = n.x * self.cx[c] + n.y * self.cy[c] + n.z * self.cz[c] + self.cr[c] * n_len;
            if bound <= limit {
                continue;
            }
            for j in self.starts[c]..self.starts[c + 1] {
                let h = n.x * self.xs[j] + n.y * self.ys[j] + n.z * self.zs[j];
                if h > limit {
                    return Some((self.order[j], h + offset));
                }
            }
        }
        None
    }
}

fn split_clusters(vertices: &[Vec3], order: &mut [usize], base: usize, starts: &mut Vec<usize>) {
    if order.len() <= VertexClusters::LEAF {
        starts.push(base + order.len());
        return;
    }
    let (lo, hi) = order.iter().fold(
        (
            Vec3::new(f64::INFINITY, f64::INFINITY, f64::INFINITY),
            Vec3::new(f64::NEG_INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY),
        ),
        |(lo, hi), &i| {
            let p = vertices[i];
            (
                Vec3::new(lo.x.min(p.x), lo.y.min(p.y), lo.z.min(p.z)),
                Vec3::new(hi.x.max(p.x), hi.y.max(p.y), hi.z.max(p.z)),
            )
        },
    );
    let ext = hi - lo;
    let key: fn(Vec3) -> f64 = if ext.x >= ext.y && ext.x >= ext.z {
        |p| p.x
    } else if ext.y >= ext.z {
        |p| p.y
    } else {
        |p| p.z
    };
    let mid = order.len() / 2;
    order.select_nth_unstable_by(mid, |&i, &j| key(vertices[i]).total_cmp(&key(vertices[j])));
    let (left, right) = order.split_at_mut(mid);
    split_clusters(vertices, left, base, starts);
    split_clusters(vertices, right, base + mid, starts);
}

fn check_convexity_local(vertices: &[Vec3], facets: &[Facet], band: f64) -> Result<()> {
    for (k, f) in facets.iter().enumerate() {
        for e in 0..3 {
            let g = &facets[f.neighbor_ids[e]];
            let far = g
                .vertex_ids
                .iter()
                .copied()
                .find(|i| !f.vertex_ids.contains(i))
                .expect("distinct neighbouring facets differ in a vertex");
            let excess = f.eval(vertices[far]);
            if excess > band {
                return Err(Error::NotConvex { facet: k, vertex: far, excess });
            }
        }
    }
    Ok(())
}

//! The A3 Coxeter complex: 24 spherical triangles tiling the unit 2-sphere,
//! one per element of `S_4`, and its stereographic picture.
//!
//! `R^3` is identified with the sum-zero hyperplane of `R^4`. The chamber of
//! an arrangement `σ` is `{x : x_σ(0) > x_σ(1) > x_σ(2) > x_σ(3)}`. Floating
//! point lives only here; every comparison uses an explicit tolerance.

use std::collections::{HashSet, VecDeque};
use std::f64::consts::PI;
use std::fmt::Write as _;

use nalgebra::{Vector3, Vector4};
use serde::Serialize;
use thiserror::Error;

use crate::coxeter::Permutation;

pub type Vec3 = Vector3<f64>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("point is within {tol} of the projection pole")]
    AtPole { tol: f64 },
    #[error("expected a unit vector, got norm {0}")]
    NotUnit(f64),
}

const UNIT_TOL: f64 = 1e-9;
const POLE_TOL: f64 = 1e-9;

/// Orthonormal basis of the sum-zero hyperplane in `R^4`.
fn hyperplane_basis() -> [Vector4<f64>; 3] {
    [
        Vector4::new(1.0, -1.0, 0.0, 0.0) / 2f64.sqrt(),
        Vector4::new(1.0, 1.0, -2.0, 0.0) / 6f64.sqrt(),
        Vector4::new(1.0, 1.0, 1.0, -3.0) / 12f64.sqrt(),
    ]
}

/// Coordinates of a sum-zero vector of `R^4` in `R^3`.
pub fn embed(x: Vector4<f64>) -> Vec3 {
    let [b1, b2, b3] = hyperplane_basis();
    Vec3::new(x.dot(&b1), x.dot(&b2), x.dot(&b3))
}

/// Inverse of [`embed`] on the hyperplane.
pub fn lift(v: Vec3) -> Vector4<f64> {
    let [b1, b2, b3] = hyperplane_basis();
    b1 * v.x + b2 * v.y + b3 * v.z
}

fn unit4(k: usize) -> Vector4<f64> {
    let mut v = Vector4::zeros();
    v[k] = 1.0;
    v
}

/// `e_i - e_j` for all `i != j`: 12 roots of length `sqrt 2`.
pub fn a3_roots() -> Vec<Vec3> {
    let mut out = Vec::with_capacity(12);
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                out.push(embed(unit4(i) - unit4(j)));
            }
        }
    }
    out
}

/// `e_k - e_{k+1}` for `k = 0, 1, 2`.
pub fn simple_roots() -> [Vec3; 3] {
    [0, 1, 2].map(|k| embed(unit4(k) - unit4(k + 1)))
}

/// Reflection through the hyperplane orthogonal to `root`.
pub fn reflect(v: &Vec3, root: &Vec3) -> Vec3 {
    v - root * (2.0 * v.dot(root) / root.dot(root))
}

/// One Weyl chamber cut down to a spherical triangle.
#[derive(Clone, Debug)]
pub struct Chamber {
    pub label: Permutation,
    /// Unit inward normals.
    pub walls: [Vec3; 3],
    /// Unit vertices; vertex `k` lies on every wall except wall `k`.
    pub vertices: [Vec3; 3],
}

impl Chamber {
    /// A point strictly inside the triangle.
    pub fn interior_point(&self) -> Vec3 {
        (self.vertices[0] + self.vertices[1] + self.vertices[2]).normalize()
    }

    /// Interior angles at the three vertices.
    pub fn angles(&self) -> [f64; 3] {
        let v = &self.vertices;
        [0, 1, 2].map(|k| vertex_angle(&v[k], &v[(k + 1) % 3], &v[(k + 2) % 3]))
    }

    /// Area by spherical excess.
    pub fn area(&self) -> f64 {
        self.angles().iter().sum::<f64>() - PI
    }
}

/// Angle at `a` between the great arcs `a→b` and `a→c`.
fn vertex_angle(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    let tb = (b - a * a.dot(b)).normalize();
    let tc = (c - a * a.dot(c)).normalize();
    tb.dot(&tc).clamp(-1.0, 1.0).acos()
}

fn fundamental_chamber() -> Chamber {
    let walls = simple_roots().map(|r| r.normalize());
    let weights = [
        Vector4::new(3.0, -1.0, -1.0, -1.0),
        Vector4::new(1.0, 1.0, -1.0, -1.0),
        Vector4::new(1.0, 1.0, 1.0, -3.0),
    ];
    Chamber {
        label: Permutation::identity(4),
        walls,
        vertices: weights.map(|w| embed(w).normalize()),
    }
}

/// The 24 chambers as the orbit of the fundamental chamber under the simple
/// reflections, in breadth-first order.
///
/// Reflecting in `e_k - e_{k+1}` exchanges the letters `k` and `k+1` of the
/// label.
pub fn chambers() -> Vec<Chamber> {
    let simple = simple_roots();
    let start = fundamental_chamber();
    let mut seen = HashSet::from([start.label.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    let mut out = vec![start];
    while let Some(ch) = queue.pop_front() {
        for (k, root) in simple.iter().enumerate() {
            let mut swap: Vec<usize> = (0..4).collect();
            swap.swap(k, k + 1);
            let letter_swap = Permutation::from_one_line(swap).expect("transposition");
            let label = letter_swap.compose(&ch.label);
            if !seen.insert(label.clone()) {
                continue;
            }
            let next = Chamber {
                label,
                walls: ch.walls.map(|w| reflect(&w, root)),
                vertices: ch.vertices.map(|v| reflect(&v, root)),
            };
            out.push(next.clone());
            queue.push_back(next);
        }
    }
    out
}

/// Vertices and edges of the triangulation, shared between chambers.
#[derive(Clone, Debug)]
pub struct Mesh {
    pub vertices: Vec<Vec3>,
    /// Number of triangles around each vertex.
    pub degree: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// Vertex ids of each chamber, in the order of [`chambers`].
    pub faces: Vec<[usize; 3]>,
}

impl Mesh {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Vertices where six triangles meet.
    pub fn tricky_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&k| self.degree[k] == 6)
            .collect()
    }

    /// Vertices where four triangles meet.
    pub fn easy_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&k| self.degree[k] == 4)
            .collect()
    }
}

pub fn mesh(chambers: &[Chamber]) -> Mesh {
    const TOL: f64 = 1e-9;
    let mut vertices: Vec<Vec3> = Vec::new();
    let mut faces = Vec::with_capacity(chambers.len());
    for ch in chambers {
        let ids = ch.vertices.map(
            |v| match vertices.iter().position(|u| (u - v).norm() < TOL) {
                Some(k) => k,
                None => {
                    vertices.push(v);
                    vertices.len() - 1
                }
            },
        );
        faces.push(ids);
    }
    let mut degree = vec![0; vertices.len()];
    let mut edges = HashSet::new();
    for f in &faces {
        for k in 0..3 {
            degree[f[k]] += 1;
            let (a, b) = (f[k], f[(k + 1) % 3]);
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort();
    Mesh {
        vertices,
        degree,
        edges,
        faces,
    }
}

/// An orthonormal pair spanning the plane orthogonal to `pole`.
fn equatorial_frame(pole: &Vec3) -> (Vec3, Vec3) {
    let axes = [Vec3::x(), Vec3::y(), Vec3::z()];
    let a = axes
        .iter()
        .min_by(|x, y| x.dot(pole).abs().total_cmp(&y.dot(pole).abs()))
        .expect("three axes");
    let u = (a - pole * a.dot(pole)).normalize();
    let v = pole.cross(&u);
    (u, v)
}

/// Stereographic projection from `pole` onto the plane through the origin
/// orthogonal to it. The antipode maps to the origin and the great circle
/// orthogonal to `pole` to the unit circle.
pub fn stereographic(p: &Vec3, pole: &Vec3) -> Result<(f64, f64), GeometryError> {
    for v in [p, pole] {
        if (v.norm() - 1.0).abs() > UNIT_TOL {
            return Err(GeometryError::NotUnit(v.norm()));
        }
    }
    if (p - pole).norm() < POLE_TOL {
        return Err(GeometryError::AtPole { tol: POLE_TOL });
    }
    let (u, v) = equatorial_frame(pole);
    let denom = 1.0 - p.dot(pole);
    Ok((p.dot(&u) / denom, p.dot(&v) / denom))
}

/// Points along the great arc from `a` to `b`, both ends included.
fn geodesic(a: &Vec3, b: &Vec3, segments: usize) -> Vec<Vec3> {
    let theta = a.dot(b).clamp(-1.0, 1.0).acos();
    let s = theta.sin();
    (0..=segments)
        .map(|k| {
            let t = k as f64 / segments as f64;
            if s < 1e-12 {
                *a
            } else {
                (a * ((1.0 - t) * theta).sin() + b * (t * theta).sin()) / s
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct RenderOptions {
    pub labels: bool,
    /// Width and height in pixels.
    pub size: u32,
    /// Samples per geodesic edge; at least 32.
    pub samples_per_arc: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            labels: false,
            size: 600,
            samples_per_arc: 32,
        }
    }
}

/// Deterministic SVG of the tessellation, projected from an easy vertex.
///
/// Each chamber is one closed `<path class="region">`; regions around the
/// vertex at infinity are cut off far outside the view box. Finite tricky
/// and easy vertices are marked with `<circle class="vertex tricky">` and
/// `<circle class="vertex easy">`.
pub fn render_svg(options: &RenderOptions) -> String {
    let chambers = chambers();
    let mesh = mesh(&chambers);
    let pole_id = mesh.easy_vertices()[0];
    let pole = mesh.vertices[pole_id];
    let segments = options.samples_per_arc.max(32);
    let size = options.size.max(64) as f64;

    let project = |p: &Vec3| stereographic(p, &pole).expect("finite point");
    let extent = mesh
        .vertices
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != pole_id)
        .map(|(_, v)| {
            let (x, y) = project(v);
            x.hypot(y)
        })
        .fold(0.0, f64::max);
    let scale = 0.42 * size / extent;
    // arcs into the pole are cut where their image leaves this radius
    let clip_radius = 8.0 * extent;
    let to_px = |(x, y): (f64, f64)| (0.5 * size + scale * x, 0.5 * size - scale * y);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = size
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{size}" height="{size}" fill="white"/>"#
    );
    let _ = writeln!(svg, r#"<g id="regions" stroke="black" stroke-width="1">"#);
    for (ch, face) in chambers.iter().zip(&mesh.faces) {
        let mut points: Vec<(f64, f64)> = Vec::new();
        for k in 0..3 {
            let (a, b) = (face[k], face[(k + 1) % 3]);
            let arc = geodesic(&mesh.vertices[a], &mesh.vertices[b], segments);
            for p in &arc[..segments] {
                if (p - pole).norm() < 1e-6 {
                    continue;
                }
                let q = project(p);
                if q.0.hypot(q.1) <= clip_radius {
                    points.push(q);
                }
            }
        }
        let fill = if ch.label.length() % 2 == 0 {
            "#eeeeee"
        } else {
            "#ffffff"
        };
        let mut d = String::new();
        for (n, q) in points.into_iter().enumerate() {
            let (x, y) = to_px(q);
            let _ = write!(d, "{}{:.3} {:.3} ", if n == 0 { "M" } else { "L" }, x, y);
        }
        d.push('Z');
        let _ = writeln!(
            svg,
            r#"<path class="region" data-label="{}" fill="{}" d="{}"/>"#,
            ch.label.arrangement(),
            fill,
            d
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g id="vertices" stroke="black" stroke-width="1">"#);
    for (k, v) in mesh.vertices.iter().enumerate() {
        if k == pole_id {
            continue;
        }
        let (x, y) = to_px(project(v));
        let (class, fill, r) = match mesh.degree[k] {
            6 => ("vertex tricky", "black", 5.0),
            _ => ("vertex easy", "white", 4.0),
        };
        let _ = writeln!(
            svg,
            r#"<circle class="{class}" cx="{x:.3}" cy="{y:.3}" r="{r}" fill="{fill}"/>"#
        );
    }
    let _ = writeln!(svg, "</g>");

    if options.labels {
        let font = (size / 40.0).round();
        let _ = writeln!(
            svg,
            r#"<g id="labels" font-family="serif" font-size="{font}" text-anchor="middle">"#
        );
        for (ch, face) in chambers.iter().zip(&mesh.faces) {
            // keep label anchors of unbounded regions away from infinity
            let anchor: Vec3 = face
                .iter()
                .map(|&k| mesh.vertices[k] * if k == pole_id { 0.15 } else { 1.0 })
                .sum::<Vec3>()
                .normalize();
            let (x, y) = to_px(project(&anchor));
            let _ = writeln!(
                svg,
                r#"<text x="{x:.3}" y="{:.3}">{}</text>"#,
                y + font / 3.0,
                ch.label.arrangement()
            );
        }
        let _ = writeln!(svg, "</g>");
    }
    let _ = writeln!(svg, "</svg>");
    svg
}

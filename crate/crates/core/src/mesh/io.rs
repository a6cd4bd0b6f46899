//! Plain-text mesh format.
//!
//! ```text
//! V F
//! x y z        (V lines)
//! i0 i1 i2     (F lines, 0-based)
//! ```
//!
//! Normals and adjacency are never stored; they are rebuilt on load.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::{build_mesh, ConvexMesh};
use crate::error::{Error, Result};
use crate::geometry::Vec3;

pub fn write_mesh(mesh: &ConvexMesh) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", mesh.num_vertices(), mesh.num_facets()).unwrap();
    for v in mesh.vertices() {
        writeln!(out, "{} {} {}", v.x, v.y, v.z).unwrap();
    }
    for f in mesh.facets() {
        let [a, b, c] = f.vertex_ids;
        writeln!(out, "{a} {b} {c}").unwrap();
    }
    out
}

pub fn save_mesh(mesh: &ConvexMesh, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_mesh(mesh))?;
    Ok(())
}

/// Parses the raw vertex and index lists without validating the geometry.
pub(crate) fn parse_raw(text: &str) -> Result<(Vec<Vec3>, Vec<[usize; 3]>)> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `V F` header".into(),
    })?;
    let [nv, nf] = fields::<usize, 2>(line, header)?;

    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (line, text) = lines.next().ok_or_else(|| eof(nv, "vertices"))?;
        let [x, y, z] = fields::<f64, 3>(line, text)?;
        vertices.push(Vec3::try_new(x, y, z).map_err(|_| Error::Parse {
            line,
            message: "non-finite coordinate".into(),
        })?);
    }
    let mut facets = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (line, text) = lines.next().ok_or_else(|| eof(nf, "facets"))?;
        facets.push(fields::<usize, 3>(line, text)?);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: "unexpected trailing data".into(),
        });
    }
    Ok((vertices, facets))
}

/// Parses and validates a mesh.
pub fn parse_mesh(text: &str) -> Result<ConvexMesh> {
    let (vertices, facets) = parse_raw(text)?;
    build_mesh(vertices, facets)
}

pub fn load_mesh(path: impl AsRef<Path>) -> Result<ConvexMesh> {
    parse_mesh(&std::fs::read_to_string(path)?)
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses exactly `N` whitespace-separated values.
pub(crate) fn fields<T: std::str::FromStr, const N: usize>(line: usize, text: &str) -> Result<[T; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != N {
        return Err(Error::Parse {
            line,
            message: format!("expected {N} fields, found {}", parts.len()),
        });
    }
    let mut out = Vec::with_capacity(N);
    for p in parts {
        out.push(p.parse::<T>().map_err(|_| Error::Parse {
            line,
            message: format!("cannot parse `{p}`"),
        })?);
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
}

fn eof(expected: usize, what: &str) -> Error {
    Error::Parse {
        line: 0,
        message: format!("unexpected end of input: expected {expected} {what}"),
    }
}

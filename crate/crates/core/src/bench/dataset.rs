//! Random segment datasets and their text format.
//!
//! ```text
//! count
//! ax ay az bx by bz    (count lines)
//! ```

use std::fmt;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clip::clip_oracle;
use crate::error::{Error, Result};
use crate::geometry::{Segment, Vec3};
use crate::mesh::{content_lines, fields, ConvexMesh};

const EXHAUSTION_ATTEMPTS: u64 = 1_000_000;
const MIN_ACCEPTANCE: f64 = 1e-3;

/// Which segments a dataset keeps: those that miss the mesh or those that hit it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HitMode {
    AllMiss,
    AllHit,
}

impl HitMode {
    pub fn accepts(self, hit: bool) -> bool {
        match self {
            HitMode::AllMiss => !hit,
            HitMode::AllHit => hit,
        }
    }
}

impl fmt::Display for HitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HitMode::AllMiss => "miss",
            HitMode::AllHit => "hit",
        })
    }
}

impl FromStr for HitMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "miss" | "0" => Ok(HitMode::AllMiss),
            "hit" | "100" => Ok(HitMode::AllHit),
            other => Err(Error::InvalidArgument(format!("unknown hit mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineDataset {
    pub segments: Vec<Segment>,
    pub hit_mode: HitMode,
    pub outer_radius: f64,
    pub seed: u64,
    /// Candidate pairs drawn to fill the dataset.
    pub attempts: u64,
}

impl LineDataset {
    pub fn acceptance_rate(&self) -> f64 {
        self.segments.len() as f64 / self.attempts.max(1) as f64
    }

    pub fn rejection_rate(&self) -> f64 {
        1.0 - self.acceptance_rate()
    }
}

/// Uniform point in the ball of `radius` about `center`, by rejection from
/// the enclosing cube.
pub fn sample_ball(rng: &mut impl Rng, center: Vec3, radius: f64) -> Vec3 {
    loop {
        let p = Vec3::new(
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        );
        if p.norm_squared() <= 1.0 {
            return center + p * radius;
        }
    }
}

/// Draws segments with both endpoints uniform in the ball of `outer_radius`
/// about the mesh centroid, keeping those whose oracle clip matches
/// `hit_mode` until `count` are collected.
pub fn generate_line_dataset(
    mesh: &ConvexMesh,
    count: usize,
    hit_mode: HitMode,
    outer_radius: f64,
    seed: u64,
) -> Result<LineDataset> {
    if count == 0 {
        return Err(Error::InvalidArgument("segment count must be at least 1".into()));
    }
    if !(outer_radius.is_finite() && outer_radius > mesh.scale()) {
        return Err(Error::InvalidRadius(format!(
            "outer radius {outer_radius} must exceed the mesh radius {}",
            mesh.scale()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let center = mesh.centroid();
    let mut segments = Vec::with_capacity(count);
    let mut attempts = 0u64;
    while segments.len() < count {
        attempts += 1;
        let a = sample_ball(&mut rng, center, outer_radius);
        let b = sample_ball(&mut rng, center, outer_radius);
        if let Ok(seg) = Segment::new(a, b) {
            if hit_mode.accepts(clip_oracle(mesh, &seg).is_hit()) {
                segments.push(seg);
            }
        }
        if attempts % EXHAUSTION_ATTEMPTS == 0 && (segments.len() as f64) < MIN_ACCEPTANCE * attempts as f64 {
            return Err(Error::GenerationExhausted {
                accepted: segments.len(),
                attempts,
            });
        }
    }
    Ok(LineDataset {
        segments,
        hit_mode,
        outer_radius,
        seed,
        attempts,
    })
}

pub fn write_lines(segments: &[Segment]) -> String {
    let mut out = String::new();
    writeln!(out, "{}", segments.len()).unwrap();
    for s in segments {
        writeln!(out, "{s}").unwrap();
    }
    out
}

pub fn save_lines(segments: &[Segment], path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_lines(segments))?;
    Ok(())
}

/// Parses a segment list. An empty list is an error.
pub fn parse_lines(text: &str) -> Result<Vec<Segment>> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing segment count".into(),
    })?;
    let [count] = fields::<usize, 1>(line, header)?;
    if count == 0 {
        return Err(Error::Parse {
            line,
            message: "segment count is zero".into(),
        });
    }
    let mut segments = Vec::with_capacity(count);
    for _ in 0..count {
        let (line, text) = lines.next().ok_or_else(|| Error::Parse {
            line: text.lines().count() + 1,
            message: format!("expected {count} segments, found {}", segments.len()),
        })?;
        let [ax, ay, az, bx, by, bz] = fields::<f64, 6>(line, text)?;
        let seg = Segment::new(Vec3::new(ax, ay, az), Vec3::new(bx, by, bz)).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        segments.push(seg);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: "unexpected trailing data".into(),
        });
    }
    Ok(segments)
}

pub fn load_lines(path: impl AsRef<Path>) -> Result<Vec<Segment>> {
    parse_lines(&std::fs::read_to_string(path)?)
}

//! Dataset catalog: one JSON object per line, one line per case variant.
//!
//! Mask paths are stored relative to the manifest file's directory, which
//! keeps dataset directories self-contained and byte-identical across
//! machines.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: malformed manifest row: {source}")]
    Parse {
        path: PathBuf,
        line: usize,
        source: serde_json::Error,
    },
    #[error("duplicate case id {0}")]
    DuplicateId(String),
    #[error("case {id}: {reason}")]
    Invalid { id: String, reason: String },
}

/// The three mutually exclusive classes: no occlusion, left, or right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    None,
    Left,
    Right,
}

impl Label {
    /// Label after sagittal mirroring: left and right swap, none is fixed.
    pub fn mirrored(self) -> Label {
        match self {
            Label::None => Label::None,
            Label::Left => Label::Right,
            Label::Right => Label::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::None => "none",
            Label::Left => "left",
            Label::Right => "right",
        }
    }

    pub const ALL: [Label; 3] = [Label::None, Label::Left, Label::Right];
}

impl std::str::FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Label::None),
            "left" => Ok(Label::Left),
            "right" => Ok(Label::Right),
            other => Err(format!("unknown label {other:?}")),
        }
    }
}

/// How a case variant was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    Original,
    Deformed,
    Mirrored,
    MirroredDeformed,
}

/// One manifest row binding a mask file to its label and provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: String,
    /// VMSK path relative to the manifest directory.
    pub path: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_path: Option<String>,
    pub label: Label,
    pub origin: Origin,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchors: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_disp: Option<f32>,
    pub mirrored: bool,
}

impl CaseRecord {
    pub fn is_original(&self) -> bool {
        self.origin == Origin::Original
    }
}

/// Parameters of the deform-and-mirror expansion.
///
/// Defaults produce the 40-variants-per-case scheme: 10 deformations for
/// each of 2 anchor counts, doubled by mirroring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AugmentationSpec {
    pub per_anchor_count: u32,
    pub anchor_counts: Vec<u32>,
    pub max_disp: f32,
    pub mirror: bool,
    pub master_seed: u64,
}

impl Default for AugmentationSpec {
    fn default() -> Self {
        Self {
            per_anchor_count: 10,
            anchor_counts: vec![4, 5],
            max_disp: 90.0,
            mirror: true,
            master_seed: 0,
        }
    }
}

impl AugmentationSpec {
    /// Number of variants emitted per original case.
    pub fn variants_per_case(&self) -> u32 {
        let base = self.per_anchor_count * self.anchor_counts.len() as u32;
        if self.mirror {
            base * 2
        } else {
            base
        }
    }
}

/// Read a JSONL manifest.
pub fn read_manifest<P: AsRef<Path>>(path: P) -> Result<Vec<CaseRecord>, ManifestError> {
    let path = path.as_ref();
    let file = fs::File::open(path).map_err(|source| ManifestError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut rows = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|source| ManifestError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let row: CaseRecord =
            serde_json::from_str(&line).map_err(|source| ManifestError::Parse {
                path: path.to_path_buf(),
                line: i + 1,
                source,
            })?;
        rows.push(row);
    }
    Ok(rows)
}

/// Write a JSONL manifest, one row per line, in the given order.
pub fn write_manifest<P: AsRef<Path>>(
    path: P,
    rows: &[CaseRecord],
) -> Result<(), ManifestError> {
    let path = path.as_ref();
    let to_io = |source| ManifestError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut out = Vec::new();
    for row in rows {
        serde_json::to_writer(&mut out, row).expect("manifest rows serialize infallibly");
        out.push(b'\n');
    }
    let mut file = fs::File::create(path).map_err(to_io)?;
    file.write_all(&out).map_err(to_io)?;
    Ok(())
}

/// Structural closure check over a manifest: unique ids, coherent
/// origin/parent links, correct label flips on mirrored variants, and all
/// referenced files present under `base_dir`.
pub fn validate_manifest(rows: &[CaseRecord], base_dir: &Path) -> Result<(), ManifestError> {
    let mut by_id: BTreeMap<&str, &CaseRecord> = BTreeMap::new();
    for row in rows {
        if by_id.insert(&row.id, row).is_some() {
            return Err(ManifestError::DuplicateId(row.id.clone()));
        }
    }
    let invalid = |id: &str, reason: String| ManifestError::Invalid {
        id: id.to_string(),
        reason,
    };
    for row in rows {
        match (&row.origin, &row.parent) {
            (Origin::Original, Some(_)) => {
                return Err(invalid(&row.id, "original row must not have a parent".into()))
            }
            (Origin::Original, None) => {}
            (_, None) => {
                return Err(invalid(&row.id, "derived row is missing its parent".into()))
            }
            (_, Some(parent)) => {
                let parent = by_id.get(parent.as_str()).ok_or_else(|| {
                    invalid(&row.id, format!("parent {parent} not in manifest"))
                })?;
                let expected = if row.mirrored {
                    parent.label.mirrored()
                } else {
                    parent.label
                };
                if row.label != expected {
                    return Err(invalid(
                        &row.id,
                        format!(
                            "label {:?} does not match parent label {:?} with mirrored={}",
                            row.label, parent.label, row.mirrored
                        ),
                    ));
                }
            }
        }
        let mirrored_origin =
            matches!(row.origin, Origin::Mirrored | Origin::MirroredDeformed);
        if mirrored_origin != row.mirrored {
            return Err(invalid(
                &row.id,
                format!("origin {:?} conflicts with mirrored={}", row.origin, row.mirrored),
            ));
        }
        if !base_dir.join(&row.path).is_file() {
            return Err(invalid(&row.id, format!("mask file {} missing", row.path)));
        }
        if let Some(gp) = &row.graph_path {
            if !base_dir.join(gp).is_file() {
                return Err(invalid(&row.id, format!("graph file {gp} missing")));
            }
        }
    }
    Ok(())
}

//! Batch toolkit for cerebrovascular vessel-tree segmentation masks.
//!
//! The crate turns small sets of binary vessel masks in atlas space into
//! large augmented training datasets and evaluates how much the augmentation
//! helps a small 3-class occlusion classifier. The pieces:
//!
//! - [`mask`]: the binary voxel grid, its run-length codec, and the VMSK
//!   file format, plus mirroring and connected-component statistics.
//! - [`elastic`]: random control-grid displacement fields interpolated with
//!   cubic B-splines, and mask warping by inverse resampling.
//! - [`tree`]: vessel centerline graphs, multi-source geodesic distances
//!   from a seed region, distance-based pruning, and mask carving.
//! - [`synth`]: synthetic labeled vessel trees, including simulated
//!   large-vessel occlusions that truncate one hemisphere's main branch.
//! - [`classeval`]: pooled-occupancy features, softmax regression, ROC AUC
//!   with bootstrap confidence intervals, and stratified cross-validation.
//! - [`manifest`] / [`pipeline`]: the JSONL dataset catalog and the batch
//!   commands (`synth`, `prune`, `augment`, `stats`, `train`, `eval`) that
//!   the `vesselforge` binary exposes.
//!
//! All operations are pure functions of their inputs and seeds. Per-task
//! seeds are derived with a stable hash so results are byte-identical
//! regardless of worker count. The `parallel` feature (default) runs the
//! voxel kernels on rayon; every kernel also has a `_seq` single-threaded
//! variant that produces bit-identical output.

pub mod classeval;
pub mod elastic;
pub mod manifest;
pub mod mask;
pub mod pipeline;
mod raster;
pub mod seed;
pub mod synth;
pub mod tree;

pub use manifest::{AugmentationSpec, CaseRecord, Label, Origin};
pub use mask::{Connectivity, MaskError, MaskStats, RlePayload, VoxelMask};

/// Atlas-space grid dimensions (x, y, z) in voxels.
pub const ATLAS_DIMS: [u32; 3] = [182, 205, 205];
/// Atlas-space voxel spacing in mm.
pub const ATLAS_SPACING: [f32; 3] = [1.0, 1.0, 1.0];

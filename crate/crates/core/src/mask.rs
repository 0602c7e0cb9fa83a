//! Binary voxel masks in atlas space: the unit of all processing.
//!
//! A [`VoxelMask`] is a dense 3D occupancy grid addressed in x-fastest
//! linear order (`x + dims_x * (y + dims_y * z)`). Masks are immutable
//! after construction; every operation returns a new value, so masks can
//! be shared freely between workers.
//!
//! Vessel masks are extremely sparse, so they compress well with a plain
//! run-length codec ([`RlePayload`]) and persist in the compact VMSK file
//! format (see [`save_vmsk`] / [`load_vmsk`]).

use std::io::{Read, Write};
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MaskError {
    #[error("dims components must all be at least 1, got {0:?}")]
    InvalidDims([u32; 3]),
    #[error("spacing components must be positive and finite, got {0:?}")]
    InvalidSpacing([f32; 3]),
    #[error("volume of {0} voxels exceeds the supported maximum of {}", u32::MAX)]
    TooLarge(u64),
    #[error("voxel buffer holds {actual} values but dims require {expected}")]
    BufferSize { expected: u64, actual: u64 },
    #[error("voxel value at linear index {0} is not 0 or 1")]
    NonBinaryVoxel(u64),
    #[error("run lengths sum to {actual} but dims require {expected}")]
    LengthMismatch { expected: u64, actual: u64 },
    #[error("zero-length run at position {0}; only the first run may be zero")]
    InvalidRuns(usize),
    #[error("bad magic bytes, not a VMSK file")]
    BadMagic,
    #[error("unsupported VMSK version {0}")]
    UnsupportedVersion(u16),
    #[error("payload ends before the declared content")]
    TruncatedPayload,
    #[error("{0} unexpected trailing bytes after the run payload")]
    TrailingBytes(usize),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Dense binary occupancy grid with physical voxel spacing in mm.
#[derive(Clone, PartialEq)]
pub struct VoxelMask {
    dims: [u32; 3],
    spacing: [f32; 3],
    voxels: Vec<u8>,
}

impl std::fmt::Debug for VoxelMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("VoxelMask")
            .field("dims", &self.dims)
            .field("spacing", &self.spacing)
            .field("foreground", &self.foreground_count())
            .finish()
    }
}

fn check_grid(dims: [u32; 3], spacing: [f32; 3]) -> Result<u64, MaskError> {
    if dims.iter().any(|&d| d == 0) {
        return Err(MaskError::InvalidDims(dims));
    }
    if spacing.iter().any(|&s| !(s.is_finite() && s > 0.0)) {
        return Err(MaskError::InvalidSpacing(spacing));
    }
    let total = dims.iter().map(|&d| u64::from(d)).product::<u64>();
    // Keeps every possible run length within u32 for the RLE codec.
    if total > u64::from(u32::MAX) {
        return Err(MaskError::TooLarge(total));
    }
    Ok(total)
}

impl VoxelMask {
    /// All-background mask on the given grid.
    pub fn empty(dims: [u32; 3], spacing: [f32; 3]) -> Result<Self, MaskError> {
        let total = check_grid(dims, spacing)?;
        Ok(Self {
            dims,
            spacing,
            voxels: vec![0; total as usize],
        })
    }

    /// Wrap an existing 0/1 buffer in x-fastest order.
    pub fn from_voxels(
        dims: [u32; 3],
        spacing: [f32; 3],
        voxels: Vec<u8>,
    ) -> Result<Self, MaskError> {
        let total = check_grid(dims, spacing)?;
        if voxels.len() as u64 != total {
            return Err(MaskError::BufferSize {
                expected: total,
                actual: voxels.len() as u64,
            });
        }
        if let Some(bad) = voxels.iter().position(|&v| v > 1) {
            return Err(MaskError::NonBinaryVoxel(bad as u64));
        }
        Ok(Self {
            dims,
            spacing,
            voxels,
        })
    }

    /// Import a raw dense u8 volume (0/1 values, x-fastest order).
    pub fn from_dense_bytes(
        dims: [u32; 3],
        spacing: [f32; 3],
        data: &[u8],
    ) -> Result<Self, MaskError> {
        Self::from_voxels(dims, spacing, data.to_vec())
    }

    pub fn dims(&self) -> [u32; 3] {
        self.dims
    }

    pub fn spacing(&self) -> [f32; 3] {
        self.spacing
    }

    /// Total voxel count (`dims_x * dims_y * dims_z`).
    pub fn len(&self) -> u64 {
        self.voxels.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.foreground_count() == 0
    }

    /// Raw 0/1 buffer in x-fastest order.
    pub fn voxels(&self) -> &[u8] {
        &self.voxels
    }

    pub fn linear_index(&self, x: u32, y: u32, z: u32) -> usize {
        (x as usize)
            + (self.dims[0] as usize) * ((y as usize) + (self.dims[1] as usize) * (z as usize))
    }

    pub fn get(&self, x: u32, y: u32, z: u32) -> u8 {
        self.voxels[self.linear_index(x, y, z)]
    }

    pub(crate) fn set(&mut self, x: u32, y: u32, z: u32, v: u8) {
        let i = self.linear_index(x, y, z);
        self.voxels[i] = v;
    }

    pub fn foreground_count(&self) -> u64 {
        self.voxels.iter().map(|&v| u64::from(v)).sum()
    }

    /// Fraction of the grid that is foreground.
    pub fn occupancy(&self) -> f64 {
        self.foreground_count() as f64 / self.len() as f64
    }

    /// Reflect across the mid-sagittal plane: output (x, y, z) reads input
    /// (dims_x - 1 - x, y, z). Dims and spacing are unchanged.
    pub fn mirror_sagittal(&self) -> VoxelMask {
        let mut out = self.voxels.clone();
        for row in out.chunks_mut(self.dims[0] as usize) {
            row.reverse();
        }
        VoxelMask {
            dims: self.dims,
            spacing: self.spacing,
            voxels: out,
        }
    }

    pub fn rle_encode(&self) -> RlePayload {
        rle_encode(self)
    }

    pub fn connected_components(&self, connectivity: Connectivity) -> MaskStats {
        connected_components(self, connectivity)
    }
}

/// Run-length encoding of one mask: alternating run lengths in linear scan
/// order, background first. Only the first run may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RlePayload {
    runs: Vec<u32>,
    total: u64,
}

impl RlePayload {
    /// Validate and wrap a run list.
    pub fn from_runs(runs: Vec<u32>) -> Result<Self, MaskError> {
        if let Some(bad) = runs.iter().skip(1).position(|&r| r == 0) {
            return Err(MaskError::InvalidRuns(bad + 1));
        }
        let total = runs.iter().map(|&r| u64::from(r)).sum();
        Ok(Self { runs, total })
    }

    pub fn runs(&self) -> &[u32] {
        &self.runs
    }

    /// Sum of all run lengths; equals the voxel count of the encoded mask.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Size of the VMSK serialization of this payload, in bytes.
    pub fn encoded_size_bytes(&self) -> u64 {
        VMSK_HEADER_LEN as u64 + 4 * self.runs.len() as u64
    }

    pub fn decode(&self, dims: [u32; 3], spacing: [f32; 3]) -> Result<VoxelMask, MaskError> {
        rle_decode(self, dims, spacing)
    }
}

/// Encode a mask as alternating background/foreground run lengths.
pub fn rle_encode(mask: &VoxelMask) -> RlePayload {
    let mut runs = Vec::new();
    let mut current: u8 = 0;
    let mut run: u64 = 0;
    for &v in &mask.voxels {
        if v == current {
            run += 1;
        } else {
            runs.push(run as u32);
            current = v;
            run = 1;
        }
    }
    runs.push(run as u32);
    RlePayload {
        runs,
        total: mask.len(),
    }
}

/// Expand a payload back into a dense mask on the given grid.
pub fn rle_decode(
    payload: &RlePayload,
    dims: [u32; 3],
    spacing: [f32; 3],
) -> Result<VoxelMask, MaskError> {
    let total = check_grid(dims, spacing)?;
    if payload.total != total {
        return Err(MaskError::LengthMismatch {
            expected: total,
            actual: payload.total,
        });
    }
    let mut voxels = Vec::with_capacity(total as usize);
    let mut value: u8 = 0;
    for &run in &payload.runs {
        voxels.resize(voxels.len() + run as usize, value);
        value ^= 1;
    }
    Ok(VoxelMask {
        dims,
        spacing,
        voxels,
    })
}

/// Neighborhood used for component labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    /// Face neighbors only; the stricter fragmentation detector.
    Six,
    /// Face, edge, and corner neighbors.
    TwentySix,
}

impl Connectivity {
    fn offsets(self) -> Vec<[i32; 3]> {
        match self {
            Connectivity::Six => vec![
                [-1, 0, 0],
                [1, 0, 0],
                [0, -1, 0],
                [0, 1, 0],
                [0, 0, -1],
                [0, 0, 1],
            ],
            Connectivity::TwentySix => {
                let mut out = Vec::with_capacity(26);
                for dz in -1..=1 {
                    for dy in -1..=1 {
                        for dx in -1..=1 {
                            if dx != 0 || dy != 0 || dz != 0 {
                                out.push([dx, dy, dz]);
                            }
                        }
                    }
                }
                out
            }
        }
    }
}

/// Inclusive voxel-index bounding box of the foreground.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundingBox {
    pub min: [u32; 3],
    pub max: [u32; 3],
}

/// QA summary of one mask.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaskStats {
    pub foreground_count: u64,
    /// `None` for an all-background mask.
    pub bounding_box: Option<BoundingBox>,
    pub component_count: usize,
    /// Component voxel counts, largest first.
    pub component_sizes: Vec<u64>,
}

/// Label connected foreground components under the chosen neighborhood.
pub fn connected_components(mask: &VoxelMask, connectivity: Connectivity) -> MaskStats {
    let [dx, dy, dz] = mask.dims.map(|d| d as i32);
    let offsets = connectivity.offsets();
    let mut visited = vec![false; mask.voxels.len()];
    let mut sizes: Vec<u64> = Vec::new();
    let mut bb_min = [u32::MAX; 3];
    let mut bb_max = [0u32; 3];
    let mut foreground = 0u64;
    let mut stack: Vec<[i32; 3]> = Vec::new();

    let idx = |x: i32, y: i32, z: i32| -> usize {
        x as usize + dx as usize * (y as usize + dy as usize * z as usize)
    };

    for z in 0..dz {
        for y in 0..dy {
            for x in 0..dx {
                let i = idx(x, y, z);
                if mask.voxels[i] == 0 || visited[i] {
                    continue;
                }
                let mut size = 0u64;
                visited[i] = true;
                stack.push([x, y, z]);
                while let Some([cx, cy, cz]) = stack.pop() {
                    size += 1;
                    bb_min = [
                        bb_min[0].min(cx as u32),
                        bb_min[1].min(cy as u32),
                        bb_min[2].min(cz as u32),
                    ];
                    bb_max = [
                        bb_max[0].max(cx as u32),
                        bb_max[1].max(cy as u32),
                        bb_max[2].max(cz as u32),
                    ];
                    for off in &offsets {
                        let (nx, ny, nz) = (cx + off[0], cy + off[1], cz + off[2]);
                        if nx < 0 || ny < 0 || nz < 0 || nx >= dx || ny >= dy || nz >= dz {
                            continue;
                        }
                        let ni = idx(nx, ny, nz);
                        if mask.voxels[ni] == 1 && !visited[ni] {
                            visited[ni] = true;
                            stack.push([nx, ny, nz]);
                        }
                    }
                }
                foreground += size;
                sizes.push(size);
            }
        }
    }

    sizes.sort_unstable_by(|a, b| b.cmp(a));
    MaskStats {
        foreground_count: foreground,
        bounding_box: (foreground > 0).then_some(BoundingBox {
            min: bb_min,
            max: bb_max,
        }),
        component_count: sizes.len(),
        component_sizes: sizes,
    }
}

// ---------------------------------------------------------------------------
// VMSK file format
//
// Little-endian layout:
//   bytes 0-3   magic "VMSK"
//   u16         version (1)
//   u16         reserved (0)
//   3 x u32     dims (x, y, z)
//   3 x f32     spacing mm
//   u64         run_count
//   run_count x u32   alternating run lengths, background first
// ---------------------------------------------------------------------------

pub const VMSK_MAGIC: [u8; 4] = *b"VMSK";
pub const VMSK_VERSION: u16 = 1;
const VMSK_HEADER_LEN: usize = 4 + 2 + 2 + 12 + 12 + 8;

/// Serialize a mask to VMSK bytes.
pub fn save_vmsk(mask: &VoxelMask) -> Vec<u8> {
    let payload = rle_encode(mask);
    let mut out = Vec::with_capacity(VMSK_HEADER_LEN + 4 * payload.runs.len());
    out.extend_from_slice(&VMSK_MAGIC);
    out.extend_from_slice(&VMSK_VERSION.to_le_bytes());
    out.extend_from_slice(&0u16.to_le_bytes());
    for d in mask.dims {
        out.extend_from_slice(&d.to_le_bytes());
    }
    for s in mask.spacing {
        out.extend_from_slice(&s.to_le_bytes());
    }
    out.extend_from_slice(&(payload.runs.len() as u64).to_le_bytes());
    for r in &payload.runs {
        out.extend_from_slice(&r.to_le_bytes());
    }
    out
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], MaskError> {
        if self.pos + n > self.bytes.len() {
            return Err(MaskError::TruncatedPayload);
        }
        let s = &self.bytes[self.pos..self.pos + n];
        self.pos += n;
        Ok(s)
    }

    fn u16(&mut self) -> Result<u16, MaskError> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32, MaskError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64, MaskError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn f32(&mut self) -> Result<f32, MaskError> {
        Ok(f32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
}

/// Parse VMSK bytes back into a mask.
pub fn load_vmsk(bytes: &[u8]) -> Result<VoxelMask, MaskError> {
    let mut cur = Cursor { bytes, pos: 0 };
    if cur.take(4)? != VMSK_MAGIC {
        return Err(MaskError::BadMagic);
    }
    let version = cur.u16()?;
    if version != VMSK_VERSION {
        return Err(MaskError::UnsupportedVersion(version));
    }
    let _reserved = cur.u16()?;
    let dims = [cur.u32()?, cur.u32()?, cur.u32()?];
    let spacing = [cur.f32()?, cur.f32()?, cur.f32()?];
    let run_count = cur.u64()?;
    if run_count > (bytes.len() as u64 - cur.pos as u64) / 4 {
        return Err(MaskError::TruncatedPayload);
    }
    let mut runs = Vec::with_capacity(run_count as usize);
    for _ in 0..run_count {
        runs.push(cur.u32()?);
    }
    if cur.pos != bytes.len() {
        return Err(MaskError::TrailingBytes(bytes.len() - cur.pos));
    }
    let payload = RlePayload::from_runs(runs)?;
    rle_decode(&payload, dims, spacing)
}

pub fn save_vmsk_file<P: AsRef<Path>>(mask: &VoxelMask, path: P) -> Result<(), MaskError> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(&save_vmsk(mask))?;
    Ok(())
}

pub fn load_vmsk_file<P: AsRef<Path>>(path: P) -> Result<VoxelMask, MaskError> {
    let mut bytes = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut bytes)?;
    load_vmsk(&bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn random_mask(seed: u64, dims: [u32; 3], fill: f64) -> VoxelMask {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let total = dims.iter().map(|&d| d as usize).product();
        let voxels = (0..total)
            .map(|_| u8::from(rng.gen_bool(fill)))
            .collect::<Vec<_>>();
        VoxelMask::from_voxels(dims, [1.0; 3], voxels).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            VoxelMask::empty([0, 2, 2], [1.0; 3]),
            Err(MaskError::InvalidDims(_))
        ));
        assert!(matches!(
            VoxelMask::empty([2, 2, 2], [1.0, 0.0, 1.0]),
            Err(MaskError::InvalidSpacing(_))
        ));
        assert!(matches!(
            VoxelMask::from_voxels([2, 2, 2], [1.0; 3], vec![0; 7]),
            Err(MaskError::BufferSize { .. })
        ));
        assert!(matches!(
            VoxelMask::from_voxels([2, 2, 2], [1.0; 3], vec![2; 8]),
            Err(MaskError::NonBinaryVoxel(0))
        ));
    }

    #[test]
    fn rle_all_background() {
        let m = VoxelMask::empty([2, 2, 2], [1.0; 3]).unwrap();
        assert_eq!(m.rle_encode().runs(), &[8]);
    }

    #[test]
    fn rle_all_foreground() {
        let m = VoxelMask::from_voxels([2, 2, 2], [1.0; 3], vec![1; 8]).unwrap();
        assert_eq!(m.rle_encode().runs(), &[0, 8]);
    }

    #[test]
    fn rle_interior_runs() {
        // Foreground at linear indices {2, 3} of 8.
        let mut v = vec![0u8; 8];
        v[2] = 1;
        v[3] = 1;
        let m = VoxelMask::from_voxels([2, 2, 2], [1.0; 3], v).unwrap();
        let payload = m.rle_encode();
        assert_eq!(payload.runs(), &[2, 2, 4]);
        // Scan-line reference encoder over the linear buffer.
        let reference = {
            let mut runs: Vec<u32> = Vec::new();
            let mut want = 0u8;
            let mut n = 0u32;
            for &b in m.voxels() {
                if b == want {
                    n += 1;
                } else {
                    runs.push(n);
                    want = b;
                    n = 1;
                }
            }
            runs.push(n);
            runs
        };
        assert_eq!(payload.runs(), reference.as_slice());
    }

    #[test]
    fn rle_decode_matches_examples() {
        let empty = RlePayload::from_runs(vec![8]).unwrap();
        assert!(empty.decode([2, 2, 2], [1.0; 3]).unwrap().is_empty());

        let two = RlePayload::from_runs(vec![2, 2, 4]).unwrap();
        let m = two.decode([2, 2, 2], [1.0; 3]).unwrap();
        let fg: Vec<usize> = m
            .voxels()
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(fg, vec![2, 3]);

        let short = RlePayload::from_runs(vec![7]).unwrap();
        assert!(matches!(
            short.decode([2, 2, 2], [1.0; 3]),
            Err(MaskError::LengthMismatch {
                expected: 8,
                actual: 7
            })
        ));
    }

    #[test]
    fn rle_rejects_interior_zero_run() {
        assert!(matches!(
            RlePayload::from_runs(vec![3, 0, 5]),
            Err(MaskError::InvalidRuns(1))
        ));
        assert!(RlePayload::from_runs(vec![0, 8]).is_ok());
    }

    #[test]
    fn linear_index_is_x_fastest() {
        // Naive triple-loop reference against the flat encoding order.
        let dims = [3, 4, 5];
        let m = random_mask(11, dims, 0.4);
        let mut flat = Vec::new();
        for z in 0..dims[2] {
            for y in 0..dims[1] {
                for x in 0..dims[0] {
                    flat.push(m.get(x, y, z));
                }
            }
        }
        assert_eq!(flat.as_slice(), m.voxels());
    }

    #[test]
    fn mirror_moves_single_voxel() {
        let mut m = VoxelMask::empty([182, 205, 205], [1.0; 3]).unwrap();
        m.set(0, 3, 4, 1);
        let flipped = m.mirror_sagittal();
        assert_eq!(flipped.get(181, 3, 4), 1);
        assert_eq!(flipped.foreground_count(), 1);
    }

    #[test]
    fn mirror_fixes_symmetric_mask() {
        let mut m = VoxelMask::empty([4, 3, 3], [1.0; 3]).unwrap();
        m.set(1, 1, 1, 1);
        m.set(2, 1, 1, 1);
        assert_eq!(m.mirror_sagittal(), m);
    }

    #[test]
    fn components_empty_mask() {
        let m = VoxelMask::empty([3, 3, 3], [1.0; 3]).unwrap();
        let stats = m.connected_components(Connectivity::Six);
        assert_eq!(stats.component_count, 0);
        assert_eq!(stats.foreground_count, 0);
        assert!(stats.bounding_box.is_none());
    }

    #[test]
    fn components_face_neighbors_join() {
        let mut m = VoxelMask::empty([3, 3, 3], [1.0; 3]).unwrap();
        m.set(0, 0, 0, 1);
        m.set(1, 0, 0, 1);
        assert_eq!(m.connected_components(Connectivity::Six).component_count, 1);
        assert_eq!(
            m.connected_components(Connectivity::TwentySix).component_count,
            1
        );
    }

    #[test]
    fn components_corner_neighbors_split_under_six() {
        let mut m = VoxelMask::empty([3, 3, 3], [1.0; 3]).unwrap();
        m.set(0, 0, 0, 1);
        m.set(1, 1, 1, 1);
        let six = m.connected_components(Connectivity::Six);
        assert_eq!(six.component_count, 2);
        assert_eq!(six.component_sizes, vec![1, 1]);
        let twentysix = m.connected_components(Connectivity::TwentySix);
        assert_eq!(twentysix.component_count, 1);
        assert_eq!(twentysix.component_sizes, vec![2]);
    }

    #[test]
    fn component_sizes_sum_to_foreground() {
        let m = random_mask(5, [10, 9, 8], 0.3);
        let stats = m.connected_components(Connectivity::Six);
        assert_eq!(
            stats.component_sizes.iter().sum::<u64>(),
            stats.foreground_count
        );
        assert_eq!(stats.foreground_count, m.foreground_count());
        let bb = stats.bounding_box.unwrap();
        for a in 0..3 {
            assert!(bb.min[a] <= bb.max[a]);
            assert!(bb.max[a] < m.dims()[a]);
        }
    }

    #[test]
    fn vmsk_roundtrip_empty() {
        let m = VoxelMask::empty([2, 2, 2], [1.0; 3]).unwrap();
        let bytes = save_vmsk(&m);
        assert_eq!(&bytes[..4], b"VMSK");
        assert_eq!(load_vmsk(&bytes).unwrap(), m);
    }

    #[test]
    fn vmsk_rejects_corruption() {
        let m = random_mask(3, [4, 4, 4], 0.2);
        let good = save_vmsk(&m);

        let mut bad_magic = good.clone();
        bad_magic[0] = b'X';
        assert!(matches!(load_vmsk(&bad_magic), Err(MaskError::BadMagic)));

        let mut bad_version = good.clone();
        bad_version[4] = 9;
        assert!(matches!(
            load_vmsk(&bad_version),
            Err(MaskError::UnsupportedVersion(9))
        ));

        let truncated = &good[..good.len() - 2];
        assert!(matches!(
            load_vmsk(truncated),
            Err(MaskError::TruncatedPayload)
        ));

        let mut trailing = good.clone();
        trailing.extend_from_slice(&[0, 0, 0]);
        assert!(matches!(
            load_vmsk(&trailing),
            Err(MaskError::TrailingBytes(3))
        ));
    }

    #[test]
    fn vmsk_file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.vmsk");
        let m = random_mask(9, [6, 5, 4], 0.25);
        save_vmsk_file(&m, &path).unwrap();
        assert_eq!(load_vmsk_file(&path).unwrap(), m);
    }

    #[test]
    fn dense_import_roundtrip() {
        let m = random_mask(13, [5, 4, 3], 0.5);
        let copy = VoxelMask::from_dense_bytes(m.dims(), m.spacing(), m.voxels()).unwrap();
        assert_eq!(copy, m);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn rle_roundtrip_identity(seed in 0u64..1000, dx in 1u32..8, dy in 1u32..8, dz in 1u32..8, fill in 0.0f64..1.0) {
            let m = random_mask(seed, [dx, dy, dz], fill);
            let back = m.rle_encode().decode(m.dims(), m.spacing()).unwrap();
            prop_assert_eq!(back, m);
        }

        #[test]
        fn vmsk_roundtrip_identity(seed in 0u64..1000, dx in 1u32..8, dy in 1u32..8, dz in 1u32..8) {
            let m = random_mask(seed, [dx, dy, dz], 0.3);
            prop_assert_eq!(load_vmsk(&save_vmsk(&m)).unwrap(), m);
        }

        #[test]
        fn mirror_is_involution(seed in 0u64..1000, dx in 1u32..9, dy in 1u32..6, dz in 1u32..6) {
            let m = random_mask(seed, [dx, dy, dz], 0.4);
            let mirrored = m.mirror_sagittal();
            prop_assert_eq!(mirrored.foreground_count(), m.foreground_count());
            prop_assert_eq!(
                mirrored.connected_components(Connectivity::Six).component_count,
                m.connected_components(Connectivity::Six).component_count
            );
            prop_assert_eq!(mirrored.mirror_sagittal(), m);
        }
    }
}

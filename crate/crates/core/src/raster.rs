//! Tube stamping: mark every voxel whose center lies within a radius of a
//! line segment. Shared by mask carving and tree rasterization so both use
//! the same point-to-segment distance definition.
//!
//! Voxel (i, j, k) owns the cell [i*s, (i+1)*s) per axis; its center sits at
//! (i + 0.5) * s. Tube geometry outside the grid is clipped silently.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Tube {
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub radius_mm: f64,
}

/// Squared distance from point `p` to segment `ab`, all in mm.
pub(crate) fn point_segment_dist2(p: [f64; 3], a: [f64; 3], b: [f64; 3]) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
    let ap = [p[0] - a[0], p[1] - a[1], p[2] - a[2]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1] + ab[2] * ab[2];
    let t = if len2 > 0.0 {
        ((ap[0] * ab[0] + ap[1] * ab[1] + ap[2] * ab[2]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let d = [
        ap[0] - t * ab[0],
        ap[1] - t * ab[1],
        ap[2] - t * ab[2],
    ];
    d[0] * d[0] + d[1] * d[1] + d[2] * d[2]
}

/// Voxel index range [lo, hi) covered by physical interval [min, max] on one
/// axis, clamped to the grid.
fn index_range(min: f64, max: f64, spacing: f64, dim: u32) -> (u32, u32) {
    let lo = (min / spacing - 0.5).floor().max(0.0) as u32;
    let hi = (((max / spacing - 0.5).ceil() as i64) + 1).clamp(0, i64::from(dim)) as u32;
    (lo.min(dim), hi)
}

fn stamp_tube_rows(
    out: &mut [u8],
    z_start: u32,
    z_count: u32,
    dims: [u32; 3],
    spacing: [f32; 3],
    tubes: &[Tube],
) {
    let s = spacing.map(f64::from);
    let (dx, dy) = (dims[0] as usize, dims[1] as usize);
    for tube in tubes {
        let r = tube.radius_mm;
        let (x0, x1) = index_range(
            tube.a[0].min(tube.b[0]) - r,
            tube.a[0].max(tube.b[0]) + r,
            s[0],
            dims[0],
        );
        let (y0, y1) = index_range(
            tube.a[1].min(tube.b[1]) - r,
            tube.a[1].max(tube.b[1]) + r,
            s[1],
            dims[1],
        );
        let (z0, z1) = index_range(
            tube.a[2].min(tube.b[2]) - r,
            tube.a[2].max(tube.b[2]) + r,
            s[2],
            dims[2],
        );
        let z0 = z0.max(z_start);
        let z1 = z1.min(z_start + z_count);
        let r2 = r * r;
        for z in z0..z1 {
            let cz = (f64::from(z) + 0.5) * s[2];
            let plane = (z - z_start) as usize * dx * dy;
            for y in y0..y1 {
                let cy = (f64::from(y) + 0.5) * s[1];
                let row = plane + y as usize * dx;
                for x in x0..x1 {
                    let cx = (f64::from(x) + 0.5) * s[0];
                    if point_segment_dist2([cx, cy, cz], tube.a, tube.b) <= r2 {
                        out[row + x as usize] = 1;
                    }
                }
            }
        }
    }
}

/// Single-threaded tube stamp over the whole grid.
pub(crate) fn stamp_tubes_seq(dims: [u32; 3], spacing: [f32; 3], tubes: &[Tube]) -> Vec<u8> {
    let total = dims.iter().map(|&d| d as usize).product();
    let mut out = vec![0u8; total];
    stamp_tube_rows(&mut out, 0, dims[2], dims, spacing, tubes);
    out
}

/// Tube stamp parallelized over z slabs. Each slab owns its output slice,
/// so the result is independent of scheduling.
#[cfg(feature = "parallel")]
pub(crate) fn stamp_tubes(dims: [u32; 3], spacing: [f32; 3], tubes: &[Tube]) -> Vec<u8> {
    let plane = (dims[0] as usize) * (dims[1] as usize);
    let total = plane * dims[2] as usize;
    let mut out = vec![0u8; total];
    let slab = 8usize;
    out.par_chunks_mut(plane * slab)
        .enumerate()
        .for_each(|(chunk, slice)| {
            let z_start = (chunk * slab) as u32;
            let z_count = (slice.len() / plane) as u32;
            stamp_tube_rows(slice, z_start, z_count, dims, spacing, tubes);
        });
    out
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn stamp_tubes(dims: [u32; 3], spacing: [f32; 3], tubes: &[Tube]) -> Vec<u8> {
    stamp_tubes_seq(dims, spacing, tubes)
}

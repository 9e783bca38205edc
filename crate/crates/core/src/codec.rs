//! JPEG-like blockwise compression: forward 2-D transform, zigzag retention of
//! the first `r` coefficients, inverse transform.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_dct::{build_exact_dct, dct_2d, idct_2d, ExactDct, Matrix8};
use crate::fast_transform::{self, apply_plan_2d, TransformPlan};
use crate::image_io::ImageGray8;
use crate::search::{ApproximationRecord, Classification, TransformRef};

pub type Block = Matrix8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetentionSpec {
    r: usize,
}

impl RetentionSpec {
    pub fn new(r: usize) -> Result<Self> {
        if (1..=64).contains(&r) {
            Ok(RetentionSpec { r })
        } else {
            Err(Error::Retention(r))
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `true` at grid positions that survive retention.
    pub fn mask(&self) -> [[bool; 8]; 8] {
        let mut m = [[false; 8]; 8];
        for &(i, j) in &zigzag_order()[..self.r] {
            m[i][j] = true;
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodecOptions {
    /// Subtract 128 before the forward transform and add it back afterwards.
    pub level_shift: bool,
    /// Multiply by `d_i·d_j` right after the integer transform, so retained
    /// coefficients live in the normalized domain. When off, coefficients stay
    /// integer and the whole scaling is applied on the inverse side.
    pub scale_before_retention: bool,
}

impl Default for CodecOptions {
    fn default() -> Self {
        CodecOptions {
            level_shift: true,
            scale_before_retention: true,
        }
    }
}

/// Standard JPEG zigzag scan as `(row, col)` pairs.
pub fn zigzag_order() -> [(usize, usize); 64] {
    let mut out = [(0, 0); 64];
    let mut p = 0;
    for s in 0..15usize {
        let lo = s.saturating_sub(7);
        let hi = s.min(7);
        if s % 2 == 0 {
            for row in (lo..=hi).rev() {
                out[p] = (row, s - row);
                p += 1;
            }
        } else {
            for row in lo..=hi {
                out[p] = (row, s - row);
                p += 1;
            }
        }
    }
    out
}

enum Kernel {
    Exact(ExactDct),
    Orthogonal {
        forward: TransformPlan,
        /// Evaluates `Tᵀ·x`.
        backward: TransformPlan,
        d: [f64; 8],
    },
    NearOrthogonal {
        forward: TransformPlan,
        /// Evaluates `E·x` where `T⁻¹ = E·diag(Δ)`.
        backward: TransformPlan,
        d: [f64; 8],
        delta: [f64; 8],
    },
}

pub struct BlockCodec {
    name: String,
    kernel: Kernel,
    options: CodecOptions,
}

fn plan_for(rec: &ApproximationRecord) -> TransformPlan {
    fast_transform::build_plan(rec).unwrap_or_else(|_| fast_transform::direct_plan(&rec.matrix))
}

impl BlockCodec {
    pub fn new(t: TransformRef<'_>, options: CodecOptions) -> Result<Self> {
        let kernel = match t {
            TransformRef::Exact => Kernel::Exact(build_exact_dct()),
            TransformRef::Approx(rec) => Self::approx_kernel(rec)?,
        };
        Ok(BlockCodec {
            name: t.name().to_owned(),
            kernel,
            options,
        })
    }

    fn approx_kernel(rec: &ApproximationRecord) -> Result<Kernel> {
        let unsupported = || Error::UnsupportedCodec(format!("{} is {}", rec.name, rec.classification));
        let d = rec.scaling.as_ref().ok_or_else(unsupported)?.values;
        match rec.classification {
            Classification::Orthogonal => Ok(Kernel::Orthogonal {
                forward: plan_for(rec),
                backward: fast_transform::direct_plan(&rec.matrix.transpose()),
                d,
            }),
            Classification::NearOrthogonal => {
                let inv = rec.inverse.as_ref().ok_or_else(unsupported)?;
                let delta = std::array::from_fn(|i| {
                    let q = &inv.diagonal[i];
                    num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
                });
                Ok(Kernel::NearOrthogonal {
                    forward: plan_for(rec),
                    backward: fast_transform::direct_plan(&inv.matrix),
                    d,
                    delta,
                })
            }
            _ => Err(unsupported()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn options(&self) -> CodecOptions {
        self.options
    }

    pub fn forward_block(&self, block: &Block) -> Block {
        match &self.kernel {
            Kernel::Exact(c) => dct_2d(c, block),
            Kernel::Orthogonal { forward, d, .. } | Kernel::NearOrthogonal { forward, d, .. } => {
                let mut y = apply_plan_2d(forward, block);
                if self.options.scale_before_retention {
                    for i in 0..8 {
                        for j in 0..8 {
                            y[i][j] *= d[i] * d[j];
                        }
                    }
                }
                y
            }
        }
    }

    pub fn inverse_block(&self, coeffs: &Block) -> Block {
        let pre = self.options.scale_before_retention;
        match &self.kernel {
            Kernel::Exact(c) => idct_2d(c, coeffs),
            Kernel::Orthogonal { backward, d, .. } => {
                // A = Tᵀ·S·Ĉ·S·T, with S² applied when nothing was scaled yet
                let w: Block = std::array::from_fn(|i| {
                    std::array::from_fn(|j| {
                        let s = d[i] * d[j];
                        coeffs[i][j] * if pre { s } else { s * s }
                    })
                });
                apply_plan_2d(backward, &w)
            }
            Kernel::NearOrthogonal {
                backward, d, delta, ..
            } => {
                // A = E·Δ·Ŝ⁻¹·C·Ŝ⁻¹·Δ·Eᵀ
                let w: Block = std::array::from_fn(|i| {
                    std::array::from_fn(|j| {
                        let c = coeffs[i][j] * delta[i] * delta[j];
                        if pre {
                            c / (d[i] * d[j])
                        } else {
                            c
                        }
                    })
                });
                apply_plan_2d(backward, &w)
            }
        }
    }

    fn level(&self) -> f64 {
        if self.options.level_shift {
            128.0
        } else {
            0.0
        }
    }

    /// Forward coefficients of every 8×8 tile, in raster order of tiles.
    pub fn coefficients(&self, img: &ImageGray8) -> Result<Vec<Block>> {
        img.check_blockable()?;
        let (bw, bh) = (img.width / 8, img.height / 8);
        let shift = self.level();
        Ok((0..bw * bh)
            .into_par_iter()
            .map(|b| {
                let (bx, by) = (b % bw, b / bw);
                let block: Block = std::array::from_fn(|i| {
                    std::array::from_fn(|j| img.get(bx * 8 + j, by * 8 + i) as f64 - shift)
                });
                self.forward_block(&block)
            })
            .collect())
    }

    /// Inverse of [`BlockCodec::coefficients`] after zeroing zigzag positions `≥ r`.
    pub fn reconstruct(
        &self,
        coeffs: &[Block],
        width: usize,
        height: usize,
        spec: RetentionSpec,
    ) -> Result<ImageGray8> {
        let bw = width / 8;
        if !width.is_multiple_of(8) || !height.is_multiple_of(8) || coeffs.len() != bw * (height / 8) {
            return Err(Error::Dimension {
                width,
                height,
                reason: "coefficient count does not match image size",
            });
        }
        let mask = spec.mask();
        let shift = self.level();
        let mut pixels = vec![0u8; width * height];
        pixels
            .par_chunks_mut(width * 8)
            .enumerate()
            .for_each(|(by, band)| {
                for bx in 0..bw {
                    let mut c = coeffs[by * bw + bx];
                    for i in 0..8 {
                        for j in 0..8 {
                            if !mask[i][j] {
                                c[i][j] = 0.0;
                            }
                        }
                    }
                    let a = self.inverse_block(&c);
                    for i in 0..8 {
                        for j in 0..8 {
                            band[i * width + bx * 8 + j] = to_pixel(a[i][j] + shift);
                        }
                    }
                }
            });
        ImageGray8::new(width, height, pixels)
    }

    pub fn compress(&self, img: &ImageGray8, spec: RetentionSpec) -> Result<ImageGray8> {
        let c = self.coefficients(img)?;
        self.reconstruct(&c, img.width, img.height, spec)
    }
}

/// Round half away from zero, then clamp to `[0, 255]`.
pub fn to_pixel(v: f64) -> u8 {
    v.round().clamp(0.0, 255.0) as u8
}

pub fn forward_block(t: TransformRef<'_>, block: &Block) -> Result<Block> {
    Ok(BlockCodec::new(t, CodecOptions::default())?.forward_block(block))
}

pub fn inverse_block(t: TransformRef<'_>, coeffs: &Block) -> Result<Block> {
    Ok(BlockCodec::new(t, CodecOptions::default())?.inverse_block(coeffs))
}

pub fn compress_image(
    t: TransformRef<'_>,
    img: &ImageGray8,
    spec: RetentionSpec,
    options: CodecOptions,
) -> Result<ImageGray8> {
    BlockCodec::new(t, options)?.compress(img, spec)
}

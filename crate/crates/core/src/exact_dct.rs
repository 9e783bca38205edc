//! The exact orthonormal 8-point DCT-II.

use std::f64::consts::PI;

pub type Matrix8 = [[f64; 8]; 8];

/// The seven distinct cosine magnitudes `γ_k = cos(2π(k+1)/32)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GammaConstants {
    pub gamma: [f64; 7],
}

impl GammaConstants {
    pub fn new() -> Self {
        let mut gamma = [0.0; 7];
        for (k, g) in gamma.iter_mut().enumerate() {
            *g = (2.0 * PI * (k as f64 + 1.0) / 32.0).cos();
        }
        GammaConstants { gamma }
    }

    pub fn get(&self, k: usize) -> f64 {
        self.gamma[k]
    }
}

impl Default for GammaConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// Every entry of `C` is `±γ_k / 2` for some `k`, or zero. This records which.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntrySymbol {
    pub negative: bool,
    pub gamma: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactDct {
    pub matrix: Matrix8,
    pub gammas: GammaConstants,
}

pub fn build_exact_dct() -> ExactDct {
    let mut matrix = [[0.0; 8]; 8];
    for (m, row) in matrix.iter_mut().enumerate() {
        let beta = if m == 0 { 1.0 } else { 2f64.sqrt() };
        for (n, c) in row.iter_mut().enumerate() {
            *c = beta / 8f64.sqrt() * (PI * m as f64 * (2 * n + 1) as f64 / 16.0).cos();
        }
    }
    ExactDct {
        matrix,
        gammas: GammaConstants::new(),
    }
}

impl ExactDct {
    /// Symbolic form of entry `(m, n)`: which `γ_k` it carries and its sign.
    ///
    /// The DCT kernel `cos(π m (2n+1)/16)` reduces to `±cos(2π(k+1)/32)` with
    /// `k+1 = (m(2n+1)) mod 32` folded into `[1, 7]`; row 0 carries `γ_3`.
    pub fn symbol(m: usize, n: usize) -> EntrySymbol {
        if m == 0 {
            return EntrySymbol {
                negative: false,
                gamma: 3,
            };
        }
        // angle = 2π·j/32 with j = m(2n+1) mod 32
        let j = (m * (2 * n + 1)) % 32;
        let (fold, negative) = match j {
            0..=7 => (j, false),
            8..=16 => (16 - j, true),
            17..=23 => (j - 16, true),
            _ => (32 - j, false),
        };
        EntrySymbol {
            negative,
            gamma: fold - 1,
        }
    }

    pub fn scaled(&self, alpha: f64) -> Matrix8 {
        let mut out = self.matrix;
        for row in out.iter_mut() {
            for v in row.iter_mut() {
                *v *= alpha;
            }
        }
        out
    }
}

pub fn transpose(a: &Matrix8) -> Matrix8 {
    let mut t = [[0.0; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            t[j][i] = a[i][j];
        }
    }
    t
}

pub fn matmul(a: &Matrix8, b: &Matrix8) -> Matrix8 {
    let mut out = [[0.0; 8]; 8];
    for i in 0..8 {
        for k in 0..8 {
            let aik = a[i][k];
            for j in 0..8 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// `C · block · Cᵀ`.
pub fn dct_2d(dct: &ExactDct, block: &Matrix8) -> Matrix8 {
    matmul(&matmul(&dct.matrix, block), &transpose(&dct.matrix))
}

/// `Cᵀ · coeffs · C`.
pub fn idct_2d(dct: &ExactDct, coeffs: &Matrix8) -> Matrix8 {
    matmul(&matmul(&transpose(&dct.matrix), coeffs), &dct.matrix)
}

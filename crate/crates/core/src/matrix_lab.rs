//! Exact algebra on 8×8 integer and rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

/// Entry set whose multiplications reduce to shifts and additions.
pub const LOW_COMPLEXITY_SET: [i64; 7] = [-3, -2, -1, 0, 1, 2, 3];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntMatrix8([[i64; 8]; 8]);

impl IntMatrix8 {
    pub const fn new(entries: [[i64; 8]; 8]) -> Self {
        IntMatrix8(entries)
    }

    pub fn identity() -> Self {
        Self::diagonal([1; 8])
    }

    pub fn diagonal(d: [i64; 8]) -> Self {
        let mut m = [[0; 8]; 8];
        for i in 0..8 {
            m[i][i] = d[i];
        }
        IntMatrix8(m)
    }

    pub fn zero() -> Self {
        IntMatrix8([[0; 8]; 8])
    }

    pub fn entries(&self) -> &[[i64; 8]; 8] {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn row(&self, i: usize) -> [i64; 8] {
        self.0[i]
    }

    pub fn transpose(&self) -> Self {
        let mut t = [[0; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                t[j][i] = self.0[i][j];
            }
        }
        IntMatrix8(t)
    }

    pub fn mul(&self, rhs: &IntMatrix8) -> IntMatrix8 {
        let mut out = [[0i64; 8]; 8];
        for i in 0..8 {
            for k in 0..8 {
                let a = self.0[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..8 {
                    out[i][j] += a * rhs.0[k][j];
                }
            }
        }
        IntMatrix8(out)
    }

    pub fn mul_vec(&self, x: &[i64; 8]) -> [i64; 8] {
        let mut y = [0i64; 8];
        for (yi, row) in y.iter_mut().zip(self.0.iter()) {
            *yi = row.iter().zip(x).map(|(a, b)| a * b).sum();
        }
        y
    }

    pub fn diag(&self) -> [i64; 8] {
        std::array::from_fn(|i| self.0[i][i])
    }

    pub fn is_diagonal(&self) -> bool {
        (0..8).all(|i| (0..8).all(|j| i == j || self.0[i][j] == 0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|&v| v == 0)
    }

    pub fn null_rows(&self) -> Vec<usize> {
        (0..8).filter(|&i| self.0[i].iter().all(|&v| v == 0)).collect()
    }

    pub fn has_null_row(&self) -> bool {
        !self.null_rows().is_empty()
    }

    pub fn to_f64(&self) -> [[f64; 8]; 8] {
        self.0.map(|r| r.map(|v| v as f64))
    }

    /// Stable 64-bit FNV-1a fingerprint of the entries.
    pub fn fingerprint(&self) -> u64 {
        let mut h = 0xcbf2_9ce4_8422_2325u64;
        for &v in self.0.iter().flatten() {
            for b in v.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        }
        h
    }
}

impl fmt::Debug for IntMatrix8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix8[")?;
        for r in &self.0 {
            writeln!(f, "  {r:?}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.0.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v:>3}")?;
            }
            if i < 7 {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl From<[[i64; 8]; 8]> for IntMatrix8 {
    fn from(m: [[i64; 8]; 8]) -> Self {
        IntMatrix8(m)
    }
}

/// Serializes a rational as `"p/q"`; accepts plain integers when parsing.
pub(crate) mod ratio_str {
    use super::*;

    pub fn format(r: &BigRational) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    pub fn parse(s: &str) -> Option<BigRational> {
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
            None => (s.trim().parse::<BigInt>().ok()?, BigInt::one()),
        };
        if q.is_zero() {
            return None;
        }
        Some(BigRational::new(p, q))
    }

    pub mod array8 {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[BigRational; 8], s: S) -> Result<S::Ok, S::Error> {
            let strs: Vec<String> = v.iter().map(format).collect();
            strs.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[BigRational; 8], D::Error> {
            let strs = Vec::<String>::deserialize(d)?;
            if strs.len() != 8 {
                return Err(de::Error::custom("expected 8 rationals"));
            }
            let mut out: [BigRational; 8] = std::array::from_fn(|_| BigRational::zero());
            for (o, s) in out.iter_mut().zip(&strs) {
                *o = parse(s).ok_or_else(|| de::Error::custom(format!("invalid rational `{s}`")))?;
            }
            Ok(out)
        }
    }
}

/// 8×8 matrix of exact rationals. `BigRational` keeps every entry reduced with
/// a positive denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix8([[BigRational; 8]; 8]);

impl RationalMatrix8 {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        RationalMatrix8(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn from_int(m: &IntMatrix8) -> Self {
        Self::from_fn(|i, j| BigRational::from_integer(m.get(i, j).into()))
    }

    pub fn identity() -> Self {
        Self::from_int(&IntMatrix8::identity())
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.0[i][j]
    }

    pub fn mul(&self, rhs: &RationalMatrix8) -> RationalMatrix8 {
        Self::from_fn(|i, j| {
            (0..8).fold(BigRational::zero(), |acc, k| acc + &self.0[i][k] * &rhs.0[k][j])
        })
    }

    pub fn mul_int(&self, rhs: &IntMatrix8) -> RationalMatrix8 {
        self.mul(&RationalMatrix8::from_int(rhs))
    }

    /// Scales column `j` by `d[j]`, i.e. computes `self · diag(d)`.
    pub fn scale_columns(&self, d: &[BigRational; 8]) -> RationalMatrix8 {
        Self::from_fn(|i, j| &self.0[i][j] * &d[j])
    }

    pub fn scale(&self, c: &BigRational) -> RationalMatrix8 {
        Self::from_fn(|i, j| &self.0[i][j] * c)
    }

    pub fn to_f64(&self) -> [[f64; 8]; 8] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].to_f64().unwrap_or(f64::NAN)))
    }
}

impl fmt::Debug for RationalMatrix8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix8[")?;
        for r in &self.0 {
            let row: Vec<String> = r.iter().map(ratio_str::format).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for RationalMatrix8 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|r| r.iter().map(ratio_str::format).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix8 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        if rows.len() != 8 || rows.iter().any(|r| r.len() != 8) {
            return Err(de::Error::custom("rational matrix must be 8×8"));
        }
        let mut err = None;
        let m = RationalMatrix8::from_fn(|i, j| {
            ratio_str::parse(&rows[i][j]).unwrap_or_else(|| {
                err = Some(rows[i][j].clone());
                BigRational::zero()
            })
        });
        match err {
            Some(s) => Err(de::Error::custom(format!("invalid rational `{s}`"))),
            None => Ok(m),
        }
    }
}

/// `T⁻¹ = E · diag(Δ)` with `E` integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseFactorization {
    pub matrix: IntMatrix8,
    #[serde(with = "ratio_str::array8")]
    pub diagonal: [BigRational; 8],
}

impl InverseFactorization {
    pub fn to_rational(&self) -> RationalMatrix8 {
        RationalMatrix8::from_int(&self.matrix).scale_columns(&self.diagonal)
    }
}

/// Diagonal `S = √(diag(T·Tᵀ)⁻¹)`. The squares are kept exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingDiagonal {
    #[serde(with = "ratio_str::array8")]
    pub squared: [BigRational; 8],
    pub values: [f64; 8],
}

impl ScalingDiagonal {
    pub fn from_gram_diagonal(diag: &[i64; 8]) -> Result<Self> {
        if let Some(row) = diag.iter().position(|&d| d <= 0) {
            return Err(Error::Degenerate { row });
        }
        let squared = std::array::from_fn(|i| BigRational::new(BigInt::one(), diag[i].into()));
        let values = std::array::from_fn(|i| 1.0 / (diag[i] as f64).sqrt());
        Ok(ScalingDiagonal { squared, values })
    }

    pub fn ones() -> Self {
        Self::from_gram_diagonal(&[1; 8]).expect("positive diagonal")
    }
}

pub fn gram(t: &IntMatrix8) -> IntMatrix8 {
    t.mul(&t.transpose())
}

pub fn is_orthogonal(t: &IntMatrix8) -> bool {
    gram(t).is_diagonal()
}

pub fn entries_in_c(t: &IntMatrix8) -> bool {
    t.entries().iter().flatten().all(|v| LOW_COMPLEXITY_SET.contains(v))
}

/// Squared Frobenius norms `(‖diag M‖², ‖M‖²)` in exact integers.
pub fn frobenius_parts(m: &IntMatrix8) -> (i128, i128) {
    let mut diag = 0i128;
    let mut all = 0i128;
    for i in 0..8 {
        for j in 0..8 {
            let v = m.get(i, j) as i128 * m.get(i, j) as i128;
            all += v;
            if i == j {
                diag += v;
            }
        }
    }
    (diag, all)
}

/// `δ(M) = 1 − ‖diag M‖_F / ‖M‖_F`.
pub fn deviation_from_diagonality(m: &IntMatrix8) -> Result<f64> {
    let (diag, all) = frobenius_parts(m);
    if all == 0 {
        return Err(Error::ZeroMatrix);
    }
    Ok(1.0 - ((diag as f64) / (all as f64)).sqrt())
}

/// Exact test of `δ(M) ≤ 1 − 2/√5`, i.e. `5·‖diag M‖² ≥ 4·‖M‖²`.
pub fn within_sdct_threshold(m: &IntMatrix8) -> bool {
    let (diag, all) = frobenius_parts(m);
    all != 0 && 5 * diag >= 4 * all
}

pub fn sdct_threshold() -> f64 {
    1.0 - 2.0 / 5f64.sqrt()
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant(t: &IntMatrix8) -> BigInt {
    let mut a: Vec<Vec<BigInt>> = t
        .entries()
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..8 {
        let Some(p) = (k..8).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..8 {
            for j in k + 1..8 {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * prev
}

/// Exact inverse by rational Gauss–Jordan elimination.
pub fn exact_inverse(t: &IntMatrix8) -> Result<RationalMatrix8> {
    let mut a: Vec<Vec<BigRational>> = (0..8)
        .map(|i| {
            (0..16)
                .map(|j| {
                    let v = if j < 8 {
                        t.get(i, j)
                    } else {
                        (j - 8 == i) as i64
                    };
                    BigRational::from_integer(v.into())
                })
                .collect()
        })
        .collect();
    for c in 0..8 {
        let p = (c..8).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
        a.swap(p, c);
        let pivot = a[c][c].clone();
        for v in a[c].iter_mut() {
            *v /= &pivot;
        }
        for r in 0..8 {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for j in 0..16 {
                let sub = &f * &a[c][j];
                a[r][j] -= sub;
            }
        }
    }
    Ok(RationalMatrix8::from_fn(|i, j| a[i][j + 8].clone()))
}

/// `adj(T) = det(T) · T⁻¹`, which is integral. Singular input yields an error.
pub fn adjugate(t: &IntMatrix8) -> Result<Vec<Vec<BigInt>>> {
    let inv = exact_inverse(t)?;
    let det = BigRational::from_integer(determinant(t));
    Ok((0..8)
        .map(|i| (0..8).map(|j| (inv.get(i, j) * &det).to_integer()).collect())
        .collect())
}

/// Splits `T⁻¹` into an integer matrix times a positive diagonal by pulling the
/// common rational factor out of every column. Returns `None` when the
/// integer factor has entries outside `{0, ±1, ±2, ±3}`.
pub fn factor_inverse_lowcomplexity(inv: &RationalMatrix8) -> Option<InverseFactorization> {
    let (factor, ok) = factor_columns(inv);
    ok.then_some(factor)
}

/// Column-primitive factorization without the entry-set test.
pub fn factor_columns(inv: &RationalMatrix8) -> (InverseFactorization, bool) {
    let mut e = [[0i64; 8]; 8];
    let mut diagonal: [BigRational; 8] = std::array::from_fn(|_| BigRational::one());
    let mut in_c = true;
    for j in 0..8 {
        let lcm = (0..8).fold(BigInt::one(), |l, i| l.lcm(inv.get(i, j).denom()));
        let nums: Vec<BigInt> = (0..8)
            .map(|i| (inv.get(i, j) * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = nums.iter().fold(BigInt::zero(), |g, n| g.gcd(n));
        if g.is_zero() {
            // zero column: singular input, nothing to factor
            in_c = false;
            continue;
        }
        for i in 0..8 {
            let v = &nums[i] / &g;
            match v.to_i64() {
                Some(x) => {
                    e[i][j] = x;
                    in_c &= LOW_COMPLEXITY_SET.contains(&x);
                }
                None => in_c = false,
            }
        }
        diagonal[j] = BigRational::new(g.abs(), lcm);
    }
    (
        InverseFactorization {
            matrix: IntMatrix8::new(e),
            diagonal,
        },
        in_c,
    )
}

pub fn orthonormalize(t: &IntMatrix8) -> Result<ScalingDiagonal> {
    ScalingDiagonal::from_gram_diagonal(&gram(t).diag())
}

/// `diag(d) · T` as floats.
pub fn normalized(t: &IntMatrix8, s: &ScalingDiagonal) -> [[f64; 8]; 8] {
    std::array::from_fn(|i| std::array::from_fn(|j| s.values[i] * t.get(i, j) as f64))
}

/// If every row of `a` is a positive multiple of the same row of `b`, returns
/// `(p_i, q_i)` with `q_i·a_i = p_i·b_i`.
pub fn row_scaling_between(a: &IntMatrix8, b: &IntMatrix8) -> Option<[(i64, i64); 8]> {
    let mut out = [(1, 1); 8];
    for i in 0..8 {
        let ra = a.row(i);
        let rb = b.row(i);
        let pivot = (0..8).find(|&j| ra[j] != 0 || rb[j] != 0)?;
        let (p, q) = (ra[pivot], rb[pivot]);
        if p == 0 || q == 0 || (p > 0) != (q > 0) {
            return None;
        }
        if (0..8).any(|j| ra[j] * q != rb[j] * p) {
            return None;
        }
        let g = p.abs().gcd(&q.abs());
        out[i] = (p.abs() / g, q.abs() / g);
    }
    Some(out)
}

pub fn rational(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;
    use proptest::prelude::*;

    /// Laplace expansion, used only to check the Bareiss determinant.
    fn laplace(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 1 {
            return m[0][0] as i128;
        }
        (0..n)
            .map(|j| {
                if m[0][j] == 0 {
                    return 0;
                }
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * laplace(&minor)
            })
            .sum()
    }

    fn as_rows(t: &IntMatrix8) -> Vec<Vec<i64>> {
        t.entries().iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn gram_of_catalog_members() {
        assert_eq!(gram(&known::T0).diag(), [8, 6, 4, 6, 8, 6, 4, 6]);
        assert!(gram(&known::T0).is_diagonal());
        assert_eq!(gram(&IntMatrix8::identity()), IntMatrix8::identity());
        assert!(!gram(&known::TT2).is_diagonal());
        assert!(is_orthogonal(&known::T4));
        assert!(!is_orthogonal(&known::TT2));
        assert!(is_orthogonal(&IntMatrix8::identity()));
    }

    #[test]
    fn deviation_values() {
        let d = |t: &IntMatrix8| deviation_from_diagonality(&gram(t)).unwrap();
        assert!((d(&known::TT2) - 0.1056).abs() < 5e-5);
        assert!((d(&known::TT3) - 0.0063).abs() < 5e-5);
        assert!((d(&known::TT0) - 0.4548).abs() < 5e-5);
        assert_eq!(d(&known::T3), 0.0);
        assert!(matches!(
            deviation_from_diagonality(&IntMatrix8::zero()),
            Err(Error::ZeroMatrix)
        ));
    }

    #[test]
    fn sdct_sits_on_threshold() {
        let g = gram(&known::TT2);
        let (diag, all) = frobenius_parts(&g);
        assert_eq!(5 * diag, 4 * all);
        assert!(within_sdct_threshold(&g));
        assert!(!within_sdct_threshold(&gram(&known::TT0)));
    }

    #[test]
    fn bareiss_matches_laplace() {
        for t in [known::T0, known::T3, known::T7, known::TT1, known::TT2, known::TT3] {
            let det = determinant(&t);
            assert_eq!(det, BigInt::from(laplace(&as_rows(&t))));
        }
        assert!(determinant(&known::TV4).is_zero());
    }

    #[test]
    fn inverse_identity() {
        assert_eq!(exact_inverse(&IntMatrix8::identity()).unwrap(), RationalMatrix8::identity());
        let inv = exact_inverse(&known::TT1).unwrap();
        assert_eq!(inv.mul_int(&known::TT1), RationalMatrix8::identity());
        assert_eq!(RationalMatrix8::from_int(&known::TT1).mul(&inv), RationalMatrix8::identity());
        assert!(matches!(exact_inverse(&known::TV7), Err(Error::Singular)));
    }

    #[test]
    fn adjugate_is_integral_inverse() {
        let adj = adjugate(&known::TT2).unwrap();
        let det = determinant(&known::TT2);
        for i in 0..8 {
            for j in 0..8 {
                let lhs: BigInt = (0..8).map(|k| &adj[i][k] * BigInt::from(known::TT2.get(k, j))).sum();
                assert_eq!(lhs, if i == j { det.clone() } else { BigInt::zero() });
            }
        }
    }

    #[test]
    fn tt3_inverse_factorization() {
        let inv = exact_inverse(&known::TT3).unwrap();
        let f = factor_inverse_lowcomplexity(&inv).expect("low complexity");
        let expected: [BigRational; 8] =
            [8, 28, 20, 28, 8, 28, 20, 28].map(|q| rational(1, q));
        assert_eq!(f.diagonal, expected);
        assert_eq!(f.to_rational(), inv);
    }

    #[test]
    fn identity_factorization() {
        let f = factor_inverse_lowcomplexity(&RationalMatrix8::identity()).unwrap();
        assert_eq!(f.matrix, IntMatrix8::identity());
        assert!(f.diagonal.iter().all(|d| d.is_one()));
    }

    #[test]
    fn high_complexity_inverse_fails() {
        // Entries in C, but the inverse needs a 5 after primitive scaling.
        let mut m = IntMatrix8::identity().entries().to_owned();
        m[0][1] = 3;
        m[1][2] = 3;
        let t = IntMatrix8::new(m);
        assert!(entries_in_c(&t));
        let inv = exact_inverse(&t).unwrap();
        assert!(factor_inverse_lowcomplexity(&inv).is_none());
        let (f, ok) = factor_columns(&inv);
        assert!(!ok);
        assert_eq!(f.to_rational(), inv);
    }

    #[test]
    fn scaling_diagonals() {
        let s = orthonormalize(&known::T0).unwrap();
        for (v, d) in s.values.iter().zip([8, 6, 4, 6, 8, 6, 4, 6]) {
            assert!((v - 1.0 / (d as f64).sqrt()).abs() < 1e-15);
        }
        assert_eq!(orthonormalize(&IntMatrix8::identity()).unwrap().values, [1.0; 8]);
        let s7 = orthonormalize(&known::T7).unwrap();
        assert_eq!(s7.squared, [32, 30, 20, 30, 32, 30, 20, 30].map(|q| rational(1, q)));
        assert!(matches!(orthonormalize(&known::TV7), Err(Error::Degenerate { row: 0 })));
    }

    #[test]
    fn orthonormal_after_scaling() {
        for t in known::ORTHOGONAL.iter().map(|(_, t)| t) {
            let s = orthonormalize(t).unwrap();
            let c = normalized(t, &s);
            for i in 0..8 {
                for j in 0..8 {
                    let dot: f64 = (0..8).map(|k| c[i][k] * c[j][k]).sum();
                    let e = if i == j { 1.0 } else { 0.0 };
                    assert!((dot - e).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn equivalent_normalizations() {
        let a = normalized(&known::TT3, &orthonormalize(&known::TT3).unwrap());
        let b = normalized(&known::TT4, &orthonormalize(&known::TT4).unwrap());
        for (x, y) in a.iter().flatten().zip(b.iter().flatten()) {
            assert!((x - y).abs() < 1e-12);
        }
        let k = row_scaling_between(&known::TT4, &known::TT3).unwrap();
        assert_eq!(k.map(|(p, q)| p * 10 / q), [20, 10, 10, 10, 20, 10, 10, 10]);
    }

    #[test]
    fn entry_set_membership() {
        assert!(entries_in_c(&known::T3));
        assert!(entries_in_c(&IntMatrix8::zero()));
        let mut m = [[0; 8]; 8];
        m[3][3] = 4;
        assert!(!entries_in_c(&IntMatrix8::new(m)));
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix8> {
        proptest::array::uniform8(proptest::array::uniform8(-3i64..=3)).prop_map(IntMatrix8::new)
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(t in small_matrix()) {
            match exact_inverse(&t) {
                Ok(inv) => {
                    prop_assert!(!determinant(&t).is_zero());
                    prop_assert_eq!(inv.mul_int(&t), RationalMatrix8::identity());
                    prop_assert_eq!(RationalMatrix8::from_int(&t).mul(&inv), RationalMatrix8::identity());
                }
                Err(_) => prop_assert!(determinant(&t).is_zero()),
            }
        }

        #[test]
        fn deviation_scale_invariant(t in small_matrix(), c in prop_oneof![-5i64..=-1, 1i64..=5]) {
            prop_assume!(!t.is_zero());
            let scaled = IntMatrix8::new(t.entries().map(|r| r.map(|v| v * c)));
            let a = deviation_from_diagonality(&t).unwrap();
            let b = deviation_from_diagonality(&scaled).unwrap();
            prop_assert!((a - b).abs() < 1e-12);
            prop_assert!((0.0..1.0).contains(&a));
        }
    }
}

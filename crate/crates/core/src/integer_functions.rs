//! The ten integer functions used to map `α·C` onto integer matrices.
//!
//! Evaluation is done in `f64`, but ties and integer crossings are detected
//! with an explicit tolerance ([`TIE_TOLERANCE`]) so that probing `α` exactly at
//! a breakpoint behaves as if the arithmetic were exact.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix_lab::IntMatrix8;

/// Distance below which `x` is considered to sit exactly on an integer or on a
/// half-integer.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntFuncKind {
    Floor,
    Ceil,
    Trunc,
    #[serde(rename = "round_afz")]
    RoundAFZ,
    #[serde(rename = "round_hu")]
    RoundHU,
    #[serde(rename = "round_hd")]
    RoundHD,
    #[serde(rename = "round_hafz")]
    RoundHAFZ,
    #[serde(rename = "round_htz")]
    RoundHTZ,
    #[serde(rename = "round_even")]
    RoundEVEN,
    #[serde(rename = "round_odd")]
    RoundODD,
}

impl IntFuncKind {
    pub const ALL: [IntFuncKind; 10] = [
        IntFuncKind::Floor,
        IntFuncKind::Ceil,
        IntFuncKind::Trunc,
        IntFuncKind::RoundAFZ,
        IntFuncKind::RoundHU,
        IntFuncKind::RoundHD,
        IntFuncKind::RoundHAFZ,
        IntFuncKind::RoundHTZ,
        IntFuncKind::RoundEVEN,
        IntFuncKind::RoundODD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IntFuncKind::Floor => "floor",
            IntFuncKind::Ceil => "ceil",
            IntFuncKind::Trunc => "trunc",
            IntFuncKind::RoundAFZ => "round_afz",
            IntFuncKind::RoundHU => "round_hu",
            IntFuncKind::RoundHD => "round_hd",
            IntFuncKind::RoundHAFZ => "round_hafz",
            IntFuncKind::RoundHTZ => "round_htz",
            IntFuncKind::RoundEVEN => "round_even",
            IntFuncKind::RoundODD => "round_odd",
        }
    }

    /// True for the six round-to-nearest variants, which only differ at ties.
    pub fn is_nearest(self) -> bool {
        !matches!(
            self,
            IntFuncKind::Floor | IntFuncKind::Ceil | IntFuncKind::Trunc | IntFuncKind::RoundAFZ
        )
    }

    pub fn apply(self, x: f64) -> Result<i64> {
        if !x.is_finite() {
            return Err(Error::NonFinite(x));
        }
        Ok(self.eval(x))
    }

    fn eval(self, x: f64) -> i64 {
        match self {
            IntFuncKind::Floor => floor(x),
            IntFuncKind::Ceil => ceil(x),
            IntFuncKind::Trunc => signum(x) * floor(x.abs()),
            IntFuncKind::RoundAFZ => signum(x) * ceil(x.abs()),
            _ => match half_tie(x) {
                Some(lo) => self.resolve_tie(lo),
                None => floor(x + 0.5),
            },
        }
    }

    /// Picks between `lo` and `lo + 1` when `x = lo + ½` exactly.
    fn resolve_tie(self, lo: i64) -> i64 {
        let hi = lo + 1;
        // x > 0 iff hi > 0, since x = lo + ½.
        let positive = hi > 0;
        match self {
            IntFuncKind::RoundHU => hi,
            IntFuncKind::RoundHD => lo,
            IntFuncKind::RoundHAFZ => {
                if positive {
                    hi
                } else {
                    lo
                }
            }
            IntFuncKind::RoundHTZ => {
                if positive {
                    lo
                } else {
                    hi
                }
            }
            // Tie at x = 2k + ½, i.e. (2x − 1)/4 ∈ ℤ, goes to lo = 2k; the
            // other tie form x = 2k + 3/2 goes to hi = 2k + 2.
            IntFuncKind::RoundEVEN => {
                if lo.rem_euclid(2) == 0 {
                    lo
                } else {
                    hi
                }
            }
            IntFuncKind::RoundODD => {
                if lo.rem_euclid(2) == 0 {
                    hi
                } else {
                    lo
                }
            }
            _ => unreachable!("tie resolution only applies to nearest-integer kinds"),
        }
    }

    pub fn apply_matrix(self, m: &[[f64; 8]; 8]) -> Result<IntMatrix8> {
        let mut out = [[0i64; 8]; 8];
        for (row, src) in out.iter_mut().zip(m.iter()) {
            for (o, &x) in row.iter_mut().zip(src.iter()) {
                *o = self.apply(x)?;
            }
        }
        Ok(IntMatrix8::new(out))
    }
}

fn signum(x: f64) -> i64 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

fn snapped(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() < TIE_TOLERANCE).then_some(r as i64)
}

fn floor(x: f64) -> i64 {
    snapped(x).unwrap_or_else(|| x.floor() as i64)
}

fn ceil(x: f64) -> i64 {
    snapped(x).unwrap_or_else(|| x.ceil() as i64)
}

/// If `x` is a half-integer `lo + ½` (within tolerance), returns `lo`.
fn half_tie(x: f64) -> Option<i64> {
    let lo = (x - 0.5).round();
    ((x - (lo + 0.5)).abs() < TIE_TOLERANCE).then_some(lo as i64)
}

impl fmt::Display for IntFuncKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IntFuncKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IntFuncKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown integer function `{s}`"))
    }
}

//! Named matrices of the approximation catalog.
//!
//! Search results are matched against this table to assign stable names.
//! `T{k}` are orthogonal, `T~{k}` non-orthogonal and `Tv{k}` degenerate.

use crate::matrix_lab::IntMatrix8;

pub const T0: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 0, 0, -1, -1, -1],
    [1, 0, 0, -1, -1, 0, 0, 1],
    [1, 0, -1, -1, 1, 1, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 0, 1, -1, 0, 1, -1],
    [0, -1, 1, 0, 0, 1, -1, 0],
    [0, -1, 1, -1, 1, -1, 1, 0],
]);

/// Rows 2 and 6 follow the cosine pattern of their rows; the widely printed
/// version has them exchanged (with a sign change), which no monotone
/// integer function can produce.
pub const T1: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 1, 1, 0, 0, -1, -1, -2],
    [1, 0, 0, -1, -1, 0, 0, 1],
    [1, 0, -2, -1, 1, 2, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -2, 0, 1, -1, 0, 2, -1],
    [0, -1, 1, 0, 0, 1, -1, 0],
    [0, -1, 1, -2, 2, -1, 1, 0],
]);

pub const T2: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 1, 1, 0, 0, -1, -1, -2],
    [2, 0, 0, -2, -2, 0, 0, 2],
    [1, 0, -2, -1, 1, 2, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -2, 0, 1, -1, 0, 2, -1],
    [0, -2, 2, 0, 0, 2, -2, 0],
    [0, -1, 1, -2, 2, -1, 1, 0],
]);

pub const T3: IntMatrix8 = IntMatrix8::new([
    [2, 2, 2, 2, 2, 2, 2, 2],
    [3, 2, 2, 0, 0, -2, -2, -3],
    [3, 1, -1, -3, -3, -1, 1, 3],
    [2, 0, -3, -2, 2, 3, 0, -2],
    [2, -2, -2, 2, 2, -2, -2, 2],
    [2, -3, 0, 2, -2, 0, 3, -2],
    [1, -3, 3, -1, -1, 3, -3, 1],
    [0, -2, 2, -3, 3, -2, 2, 0],
]);

/// Rounded DCT, `round(2·C)`.
pub const T4: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 0, 0, -1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, 0, -1, -1, 1, 1, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 0, 1, -1, 0, 1, -1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [0, -1, 1, -1, 1, -1, 1, 0],
]);

pub const T5: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 1, 1, 0, 0, -1, -1, -2],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, 0, -2, -1, 1, 2, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -2, 0, 1, -1, 0, 2, -1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [0, -1, 1, -2, 2, -1, 1, 0],
]);

/// Multiplier-free approximation used for RF imaging.
pub const T6: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 1, 1, 0, 0, -1, -1, -2],
    [2, 1, -1, -2, -2, -1, 1, 2],
    [1, 0, -2, -1, 1, 2, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -2, 0, 1, -1, 0, 2, -1],
    [1, -2, 2, -1, -1, 2, -2, 1],
    [0, -1, 1, -2, 2, -1, 1, 0],
]);

pub const T7: IntMatrix8 = IntMatrix8::new([
    [2, 2, 2, 2, 2, 2, 2, 2],
    [3, 2, 1, 1, -1, -1, -2, -3],
    [2, 1, -1, -2, -2, -1, 1, 2],
    [2, -1, -3, -1, 1, 3, 1, -2],
    [2, -2, -2, 2, 2, -2, -2, 2],
    [1, -3, 1, 2, -2, -1, 3, -1],
    [1, -2, 2, -1, -1, 2, -2, 1],
    [1, -1, 2, -3, 3, -2, 1, -1],
]);

/// Ceiling candidate; too far from orthogonal to be useful.
pub const TT0: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 1, 1],
    [1, 0, 0, 0, 1, 1, 1, 0],
    [1, 0, 0, 1, 1, 0, 0, 1],
    [1, 0, 1, 1, 0, 0, 1, 0],
    [1, 0, 1, 0, 0, 1, 0, 1],
    [1, 0, 1, 0, 1, 0, 1, 0],
]);

pub const TT1: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 0, 0, 0, 0, -1, -1],
    [1, 0, 0, -1, -1, 0, 0, 1],
    [1, 0, -1, 0, 0, 1, 0, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [0, -1, 0, 1, -1, 0, 1, 0],
    [0, -1, 1, 0, 0, 1, -1, 0],
    [0, 0, 1, -1, 1, -1, 0, 0],
]);

/// Signed DCT, `sign(C)`.
pub const TT2: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, -1, -1, -1, -1],
    [1, 1, -1, -1, -1, -1, 1, 1],
    [1, -1, -1, -1, 1, 1, 1, -1],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -1, 1, 1, -1, -1, 1, -1],
    [1, -1, 1, -1, -1, 1, -1, 1],
    [1, -1, 1, -1, 1, -1, 1, -1],
]);

pub const TT3: IntMatrix8 = IntMatrix8::new([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [2, 2, 1, 1, -1, -1, -2, -2],
    [2, 1, -1, -2, -2, -1, 1, 2],
    [2, -1, -2, -1, 1, 2, 1, -2],
    [1, -1, -1, 1, 1, -1, -1, 1],
    [1, -2, 1, 2, -2, -1, 2, -1],
    [1, -2, 2, -1, -1, 2, -2, 1],
    [1, -1, 2, -2, 2, -2, 1, -1],
]);

/// `diag(2,1,1,1,2,1,1,1) · T~3`.
pub const TT4: IntMatrix8 = IntMatrix8::new([
    [2, 2, 2, 2, 2, 2, 2, 2],
    [2, 2, 1, 1, -1, -1, -2, -2],
    [2, 1, -1, -2, -2, -1, 1, 2],
    [2, -1, -2, -1, 1, 2, 1, -2],
    [2, -2, -2, 2, 2, -2, -2, 2],
    [1, -2, 1, 2, -2, -1, 2, -1],
    [1, -2, 2, -1, -1, 2, -2, 1],
    [1, -1, 2, -2, 2, -2, 1, -1],
]);

pub const TV0: IntMatrix8 = IntMatrix8::new([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, -1, -1, -1],
    [0, 0, -1, -1, -1, -1, 0, 0],
    [0, -1, -1, -1, 0, 0, 0, -1],
    [0, -1, -1, 0, 0, -1, -1, 0],
    [0, -1, 0, 0, -1, -1, 0, -1],
    [0, -1, 0, -1, -1, 0, -1, 0],
    [0, -1, 0, -1, 0, -1, 0, -1],
]);

pub const TV1: IntMatrix8 = IntMatrix8::new([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, -1, -1, -1, -2],
    [0, 0, -1, -1, -1, -1, 0, 0],
    [0, -1, -2, -1, 0, 1, 0, -1],
    [0, -1, -1, 0, 0, -1, -1, 0],
    [0, -2, 0, 0, -1, -1, 1, -1],
    [0, -1, 0, -1, -1, 0, -1, 0],
    [0, -1, 0, -2, 1, -1, 0, -1],
]);

pub const TV2: IntMatrix8 = IntMatrix8::new([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, -1, -1, -1, -2],
    [1, 0, -1, -2, -2, -1, 0, 1],
    [0, -1, -2, -1, 0, 1, 0, -1],
    [0, -1, -1, 0, 0, -1, -1, 0],
    [0, -2, 0, 0, -1, -1, 1, -1],
    [0, -2, 1, -1, -1, 1, -2, 0],
    [0, -1, 0, -2, 1, -1, 0, -1],
]);

pub const TV4: IntMatrix8 = IntMatrix8::new([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 1, 0, 0, 0],
]);

pub const TV5: IntMatrix8 = IntMatrix8::new([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, -1],
    [1, 0, 0, -1, -1, 0, 0, 1],
    [0, 0, -1, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 1, 0],
    [0, -1, 1, 0, 0, 1, -1, 0],
    [0, 0, 0, -1, 1, 0, 0, 0],
]);

/// Truncation of `α·C` for `α ∈ (2/γ2, 2/γ3)`: the `γ3` rows vanish.
pub const TV6: IntMatrix8 = IntMatrix8::new([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, -1, -1],
    [1, 0, 0, -1, -1, 0, 0, 1],
    [1, 0, -1, 0, 0, 1, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 1, -1, 0, 1, 0],
    [0, -1, 1, 0, 0, 1, -1, 0],
    [0, 0, 1, -1, 1, -1, 0, 0],
]);

pub const TV7: IntMatrix8 = IntMatrix8::new([
    [0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
]);

pub const ORTHOGONAL: [(&str, IntMatrix8); 8] = [
    ("T0", T0),
    ("T1", T1),
    ("T2", T2),
    ("T3", T3),
    ("T4", T4),
    ("T5", T5),
    ("T6", T6),
    ("T7", T7),
];

pub const NON_ORTHOGONAL: [(&str, IntMatrix8); 5] = [
    ("T~0", TT0),
    ("T~1", TT1),
    ("T~2", TT2),
    ("T~3", TT3),
    ("T~4", TT4),
];

pub const DEGENERATE: [(&str, IntMatrix8); 7] = [
    ("Tv0", TV0),
    ("Tv1", TV1),
    ("Tv2", TV2),
    ("Tv4", TV4),
    ("Tv5", TV5),
    ("Tv6", TV6),
    ("Tv7", TV7),
];

/// Literature aliases.
pub const ALIASES: [(&str, &str); 3] = [("RDCT", "T4"), ("SDCT", "T~2"), ("T6-RF-imaging", "T6")];

pub fn lookup(t: &IntMatrix8) -> Option<&'static str> {
    ORTHOGONAL
        .iter()
        .chain(NON_ORTHOGONAL.iter())
        .chain(DEGENERATE.iter())
        .find(|(_, m)| m == t)
        .map(|(n, _)| *n)
}

pub fn alias_of(name: &str) -> Option<&'static str> {
    ALIASES.iter().find(|(_, n)| *n == name).map(|(a, _)| *a)
}

/// Resolves an alias (`SDCT`) to its catalog name (`T~2`); other names pass through.
pub fn canonical_name(name: &str) -> &str {
    ALIASES
        .iter()
        .find(|(a, _)| a.eq_ignore_ascii_case(name))
        .map(|(_, n)| *n)
        .unwrap_or(name)
}

//! Hand-checked transcription of the published tables.
//!
//! Values are copied as printed, defects included. The acceptance test
//! applies its documented corrections explicitly.

pub type M = [[i64; 8]; 8];

/// Every printed 8×8 approximation, by catalog name.
pub const MATRICES: [(&str, M); 21] = [
    (
        "T~0",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 0, 0, 0, 0],
            [1, 1, 0, 0, 0, 0, 1, 1],
            [1, 0, 0, 0, 1, 1, 1, 0],
            [1, 0, 0, 1, 1, 0, 0, 1],
            [1, 0, 1, 1, 0, 0, 1, 0],
            [1, 0, 1, 0, 0, 1, 0, 1],
            [1, 0, 1, 0, 1, 0, 1, 0],
        ],
    ),
    (
        "T0",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 0, 0, -1, -1, -1],
            [1, 0, 0, -1, -1, 0, 0, 1],
            [1, 0, -1, -1, 1, 1, 0, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [1, -1, 0, 1, -1, 0, 1, -1],
            [0, -1, 1, 0, 0, 1, -1, 0],
            [0, -1, 1, -1, 1, -1, 1, 0],
        ],
    ),
    (
        "T1",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [2, 1, 1, 0, 0, -1, -1, -2],
            [0, 1, -1, 0, 0, -1, 1, 0],
            [1, 0, -2, -1, 1, 2, 0, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [1, -2, 0, 1, -1, 0, 2, -1],
            [1, 0, 0, -1, -1, 0, 0, 1],
            [0, -1, 1, -2, 2, -1, 1, 0],
        ],
    ),
    (
        "T2",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [2, 1, 1, 0, 0, -1, -1, -2],
            [2, 0, 0, -2, -2, 0, 0, 2],
            [1, 0, -2, -1, 1, 2, 0, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [1, -2, 0, 1, -1, 0, 2, -1],
            [0, -2, 2, 0, 0, 2, -2, 0],
            [0, -1, 1, -2, 2, -1, 1, 0],
        ],
    ),
    (
        "T3",
        [
            [2, 2, 2, 2, 2, 2, 2, 2],
            [3, 2, 2, 0, 0, -2, -2, -3],
            [3, 1, -1, -3, -3, -1, 1, 3],
            [2, 0, -3, -2, 2, 3, 0, -2],
            [2, -2, -2, 2, 2, -2, -2, 2],
            [2, -3, 0, 2, -2, 0, 3, -2],
            [1, -3, 3, -1, -1, 3, -3, 1],
            [0, -2, 2, -3, 3, -2, 2, 0],
        ],
    ),
    (
        "T~1",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [1, 1, 0, 0, 0, 0, -1, -1],
            [1, 0, 0, -1, -1, 0, 0, 1],
            [1, 0, -1, 0, 0, 1, 0, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [0, -1, 0, 1, -1, 0, 1, 0],
            [0, -1, 1, 0, 0, 1, -1, 0],
            [0, 0, 1, -1, 1, -1, 0, 0],
        ],
    ),
    (
        "T4",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 0, 0, -1, -1, -1],
            [1, 1, -1, -1, -1, -1, 1, 1],
            [1, 0, -1, -1, 1, 1, 0, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [1, -1, 0, 1, -1, 0, 1, -1],
            [1, -1, 1, -1, -1, 1, -1, 1],
            [0, -1, 1, -1, 1, -1, 1, 0],
        ],
    ),
    (
        "T~2",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, -1, -1, -1, -1],
            [1, 1, -1, -1, -1, -1, 1, 1],
            [1, -1, -1, -1, 1, 1, 1, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [1, -1, 1, 1, -1, -1, 1, -1],
            [1, -1, 1, -1, -1, 1, -1, 1],
            [1, -1, 1, -1, 1, -1, 1, -1],
        ],
    ),
    (
        "T~3",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [2, 2, 1, 1, -1, -1, -2, -2],
            [2, 1, -1, -2, -2, -1, 1, 2],
            [2, -1, -2, -1, 1, 2, 1, -2],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [1, -2, 1, 2, -2, -1, 2, -1],
            [1, -2, 2, -1, -1, 2, -2, 1],
            [1, -1, 2, -2, 2, -2, 1, -1],
        ],
    ),
    (
        "T~4",
        [
            [2, 2, 2, 2, 2, 2, 2, 2],
            [2, 2, 1, 1, -1, -1, -2, -2],
            [2, 1, -1, -2, -2, -1, 1, 2],
            [2, -1, -2, -1, 1, 2, 1, -2],
            [2, -2, -2, 2, 2, -2, -2, 2],
            [1, -2, 1, 2, -2, -1, 2, -1],
            [1, -2, 2, -1, -1, 2, -2, 1],
            [1, -1, 2, -2, 2, -2, 1, -1],
        ],
    ),
    (
        "T5",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [2, 1, 1, 0, 0, -1, -1, -2],
            [1, 1, -1, -1, -1, -1, 1, 1],
            [1, 0, -2, -1, 1, 2, 0, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [1, -2, 0, 1, -1, 0, 2, -1],
            [1, -1, 1, -1, -1, 1, -1, 1],
            [0, -1, 1, -2, 2, -1, 1, 0],
        ],
    ),
    (
        "T6",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [2, 1, 1, 0, 0, -1, -1, -2],
            [2, 1, -1, -2, -2, -1, 1, 2],
            [1, 0, -2, -1, 1, 2, 0, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [1, -2, 0, 1, -1, 0, 2, -1],
            [1, -2, 2, -1, -1, 2, -2, 1],
            [0, -1, 1, -2, 2, -1, 1, 0],
        ],
    ),
    (
        "T7",
        [
            [2, 2, 2, 2, 2, 2, 2, 2],
            [3, 2, 1, 1, -1, -1, -2, -3],
            [2, 1, -1, -2, -2, -1, 1, 2],
            [2, -1, -3, -1, 1, 3, 1, -2],
            [2, -2, -2, 2, 2, -2, -2, 2],
            [1, -3, 1, 2, -2, -1, 3, -1],
            [1, -2, 2, -1, -1, 2, -2, 1],
            [1, -1, 2, -3, 3, -2, 1, -1],
        ],
    ),
    (
        "Tv0",
        [
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, -1, -1, -1, -1],
            [0, 0, -1, -1, -1, -1, 0, 0],
            [0, -1, -1, -1, 0, 0, 0, -1],
            [0, -1, -1, 0, 0, -1, -1, 0],
            [0, -1, 0, 0, -1, -1, 0, -1],
            [0, -1, 0, -1, -1, 0, -1, 0],
            [0, -1, 0, -1, 0, -1, 0, -1],
        ],
    ),
    (
        "Tv1",
        [
            [0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, -1, -1, -1, -2],
            [0, 0, -1, -1, -1, -1, 0, 0],
            [0, -1, -2, -1, 0, 1, 0, -1],
            [0, -1, -1, 0, 0, -1, -1, 0],
            [0, -2, 0, 0, -1, -1, 1, -1],
            [0, -1, 0, -1, -1, 0, -1, 0],
            [0, -1, 0, -2, 1, -1, 0, -1],
        ],
    ),
    (
        "Tv2",
        [
            [0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, -1, -1, -1, -2],
            [1, 0, -1, -2, -2, -1, 0, 1],
            [0, -1, -2, -1, 0, 1, 0, -1],
            [0, -1, -1, 0, 0, -1, -1, 0],
            [0, -2, 0, 0, -1, -1, 1, -1],
            [0, -2, 1, -1, -1, 1, -2, 0],
            [0, -1, 0, -2, 1, -1, 0, -1],
        ],
    ),
    (
        "Tv3",
        [
            [0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, -1],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, -1, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, -1, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, -1, 1, 0, 0, 0],
        ],
    ),
    (
        "Tv4",
        [
            [0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, -1],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, -1, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, -1, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, -1, 1, 0, 0, 0],
        ],
    ),
    (
        "Tv5",
        [
            [0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, -1],
            [1, 0, 0, -1, -1, 0, 0, 1],
            [0, 0, -1, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, -1, 0, 0, 0, 0, 1, 0],
            [0, -1, 1, 0, 0, 1, -1, 0],
            [0, 0, 0, -1, 1, 0, 0, 0],
        ],
    ),
    (
        "Tv6",
        [
            [1, 1, 1, 1, 1, 1, 1, 1],
            [1, 1, 0, 0, 0, 0, -1, -1],
            [1, 0, 0, -1, -1, 0, 0, 1],
            [1, 0, -1, 0, 0, 1, 0, -1],
            [1, -1, -1, 1, 1, -1, -1, 1],
            [0, -1, 0, 1, -1, 0, 1, 0],
            [0, -1, 1, 0, 0, 1, -1, 0],
            [0, 0, 1, -1, 1, -1, 0, 0],
        ],
    ),
    (
        "Tv7",
        [
            [0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0],
        ],
    ),
];

/// `T⁻¹ = E · diag(1/q)` as displayed.
pub const INVERSES: [(&str, M, [i64; 8]); 4] = [
    (
        "T~1",
        [
            [1, 1, 1, 1, 1, 1, 0, 1],
            [1, 1, 0, -1, -1, -1, -1, -1],
            [1, 1, 0, -1, -1, 1, 1, 1],
            [1, 1, -1, -1, 1, 1, 0, -1],
            [1, -1, -1, 1, 1, -1, 0, 1],
            [1, -1, 0, 1, -1, -1, 1, -1],
            [1, -1, 0, 1, -1, 1, -1, 1],
            [1, -1, 1, -1, 1, -1, 0, -1],
        ],
        [8, 4, 4, 4, 8, 4, 4, 4],
    ),
    (
        "T~2",
        [
            [1, 1, 1, 1, 1, 0, 1, 0],
            [1, 1, 1, 0, -1, -1, -1, 0],
            [1, 0, -1, -1, -1, 0, 1, 1],
            [1, 0, -1, 0, 1, 1, -1, -1],
            [1, 0, -1, 0, 1, -1, -1, 1],
            [1, 0, -1, 1, -1, 0, 1, -1],
            [1, -1, 1, 0, -1, 1, -1, 0],
            [1, -1, 1, -1, 1, 0, 1, 0],
        ],
        [8, 4, 8, 4, 8, 4, 8, 4],
    ),
    (
        "T~3",
        [
            [1, 3, 2, 3, 1, 1, 1, 1],
            [1, 3, 1, -1, -1, -3, -2, -1],
            [1, 1, -1, -3, -1, 1, 2, 3],
            [1, 1, -2, -1, 1, 3, -1, -3],
            [1, -1, -2, 1, 1, -3, -1, 3],
            [1, -1, -1, 3, -1, -1, 2, -3],
            [1, -3, 1, 1, -1, 3, -2, 1],
            [1, -3, 2, -3, 1, -1, 1, -1],
        ],
        [8, 28, 20, 28, 8, 28, 20, 28],
    ),
    (
        "T~4",
        [
            [1, 3, 2, 3, 1, 1, 1, 1],
            [1, 3, 1, -1, -1, -3, -2, -1],
            [1, 1, -1, -3, -1, 1, 2, 3],
            [1, 1, -2, -1, 1, 3, -1, -3],
            [1, -1, -2, 1, 1, -3, -1, 3],
            [1, -1, -1, 3, -1, -1, 2, -3],
            [1, -3, 1, 1, -1, 3, -2, 1],
            [1, -3, 2, -3, 1, -1, 1, -1],
        ],
        [16, 28, 20, 28, 16, 28, 20, 28],
    ),
];

/// Diagonal of `T·Tᵀ` for the orthogonal set.
pub const GRAM_DIAG: [(&str, [i64; 8]); 8] = [
    ("T0", [8, 6, 4, 6, 8, 6, 4, 6]),
    ("T1", [8, 12, 4, 12, 8, 12, 4, 12]),
    ("T2", [8, 12, 16, 12, 8, 12, 16, 12]),
    ("T3", [32, 34, 40, 34, 32, 34, 40, 34]),
    ("T4", [8, 6, 8, 6, 8, 6, 8, 6]),
    ("T5", [8, 12, 8, 12, 8, 12, 8, 12]),
    ("T6", [8, 12, 20, 12, 8, 12, 20, 12]),
    ("T7", [32, 30, 20, 30, 32, 30, 20, 30]),
];

pub const DELTAS: [(&str, f64); 5] = [
    ("T~0", 0.4548),
    ("T~1", 0.0646),
    ("T~2", 0.1056),
    ("T~3", 0.0063),
    ("T~4", 0.0036),
];

/// Multiplications, additions, bit-shifts.
pub const OP_COUNTS: [(&str, [u32; 3]); 12] = [
    ("T0", [0, 22, 0]),
    ("T1", [0, 22, 4]),
    ("T2", [0, 22, 6]),
    ("T3", [0, 30, 16]),
    ("T4", [0, 24, 0]),
    ("T5", [0, 24, 4]),
    ("T6", [0, 24, 6]),
    ("T7", [0, 32, 12]),
    ("T~1", [0, 18, 0]),
    ("T~2", [0, 28, 0]),
    ("T~3", [0, 28, 10]),
    ("T~4", [0, 28, 12]),
];

/// `m0..m6` as printed.
pub const CONSTANTS: [(&str, [i64; 7]); 12] = [
    ("T0", [1, 1, 1, 1, 1, 0, 0]),
    ("T1", [2, 0, 1, 1, 1, 1, 0]),
    ("T2", [2, 2, 1, 1, 1, 0, 0]),
    ("T3", [3, 3, 2, 2, 2, 1, 0]),
    ("T4", [1, 1, 1, 1, 1, 1, 0]),
    ("T5", [2, 1, 1, 1, 1, 1, 0]),
    ("T6", [2, 2, 1, 1, 1, 1, 0]),
    ("T7", [3, 2, 2, 2, 1, 1, 1]),
    ("T~1", [1, 1, 1, 1, 0, 0, 0]),
    ("T~2", [1, 1, 1, 1, 1, 1, 1]),
    ("T~3", [2, 2, 2, 1, 1, 1, 1]),
    ("T~4", [2, 2, 2, 2, 1, 1, 1]),
];

const NEAREST: [&str; 6] = [
    "round_hu",
    "round_hd",
    "round_hafz",
    "round_htz",
    "round_even",
    "round_odd",
];

/// `(name, function, lower symbol, upper symbol)` for every printed range
/// of a non-degenerate approximation. Brackets are not kept: only the
/// breakpoint symbols are compared.
pub fn sources() -> Vec<(&'static str, &'static str, &'static str, &'static str)> {
    let mut v = vec![
        ("T~0", "ceil", "0", "2/γ4"),
        ("T0", "trunc", "2/γ4", "4/γ0"),
        ("T1", "trunc", "4/γ0", "4/γ1"),
        ("T2", "trunc", "4/γ1", "4/γ2"),
        ("T3", "trunc", "4/γ4", "6/γ2"),
        ("T~1", "trunc", "2/γ3", "2/γ4"),
        ("T4", "round_afz", "1/γ0", "1/γ0"),
        ("T~2", "round_afz", "0", "2/γ0"),
        ("T~3", "round_afz", "2/γ2", "2/γ3"),
        ("T~4", "round_afz", "2/γ3", "2/γ4"),
    ];
    for f in NEAREST {
        v.extend([
            ("T0", f, "1/γ4", "1/γ5"),
            ("T4", f, "1/γ5", "3/γ0"),
            ("T5", f, "3/γ0", "3/γ1"),
            ("T6", f, "3/γ1", "3/γ2"),
            ("T7", f, "1/γ6", "3/γ4"),
            ("T~1", f, "1/γ3", "1/γ4"),
        ]);
    }
    v
}

/// `(image, r, transform, PSNR, SSIM)` from the compressed-image figures.
pub const CAPTIONS: [(&str, usize, &str, f64, f64); 12] = [
    ("boat", 10, "T0", 27.862, 0.955),
    ("boat", 10, "T4", 27.870, 0.968),
    ("boat", 10, "T~1", 25.805, 0.903),
    ("boat", 10, "T~2", 25.760, 0.915),
    ("boat", 10, "T~3", 28.416, 0.967),
    ("boat", 10, "DCT", 28.972, 0.970),
    ("lena", 25, "T0", 34.138, 0.989),
    ("lena", 25, "T4", 34.159, 0.996),
    ("lena", 25, "T~1", 31.602, 0.985),
    ("lena", 25, "T~2", 31.852, 0.989),
    ("lena", 25, "T~3", 35.157, 0.996),
    ("lena", 25, "DCT", 37.886, 0.997),
];

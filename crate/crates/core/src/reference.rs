//! Published reference values and the self-check suite behind `dctlab verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codec::{compress_image, CodecOptions, RetentionSpec};
use crate::exact_dct::build_exact_dct;
use crate::fast_transform::{self, apply_plan, OpCounts, FACTORIZATION_CONSTANTS};
use crate::image_io::ImageGray8;
use crate::known;
use crate::matrix_lab::{self, IntMatrix8};
use crate::search::{self, Catalog, Classification, TransformRef};

/// Diagonal of `T·Tᵀ` for the orthogonal transforms.
pub const DIAG_GRAM: [(&str, [i64; 8]); 8] = [
    ("T0", [8, 6, 4, 6, 8, 6, 4, 6]),
    ("T1", [8, 12, 4, 12, 8, 12, 4, 12]),
    ("T2", [8, 12, 16, 12, 8, 12, 16, 12]),
    ("T3", [32, 34, 40, 34, 32, 34, 40, 34]),
    ("T4", [8, 6, 8, 6, 8, 6, 8, 6]),
    ("T5", [8, 12, 8, 12, 8, 12, 8, 12]),
    ("T6", [8, 12, 20, 12, 8, 12, 20, 12]),
    ("T7", [32, 30, 20, 30, 32, 30, 20, 30]),
];

/// Deviation from diagonality of `T·Tᵀ`, four decimals.
pub const DELTAS: [(&str, f64); 5] = [
    ("T~0", 0.4548),
    ("T~1", 0.0646),
    ("T~2", 0.1056),
    ("T~3", 0.0063),
    ("T~4", 0.0036),
];

pub const DELTA_TOLERANCE: f64 = 5e-5;

const fn oc(additions: u32, shifts: u32) -> OpCounts {
    OpCounts {
        multiplications: 0,
        additions,
        shifts,
    }
}

/// Operation counts of the fast algorithm.
pub const OP_COUNTS: [(&str, OpCounts); 12] = [
    ("T0", oc(22, 0)),
    ("T1", oc(22, 4)),
    ("T2", oc(22, 6)),
    ("T3", oc(30, 16)),
    ("T4", oc(24, 0)),
    ("T5", oc(24, 4)),
    ("T6", oc(24, 6)),
    ("T7", oc(32, 12)),
    ("T~1", oc(18, 0)),
    ("T~2", oc(28, 0)),
    ("T~3", oc(28, 10)),
    ("T~4", oc(28, 12)),
];

pub fn expected_counts(name: &str) -> Option<OpCounts> {
    let name = known::canonical_name(name);
    OP_COUNTS.iter().find(|(n, _)| *n == name).map(|(_, c)| *c)
}

/// `T⁻¹ = E·diag(1/q)`: the integer factor and the denominators `q`.
pub const INVERSES: [(&str, IntMatrix8, [i64; 8]); 4] = [
    (
        "T~1",
        IntMatrix8::new([
            [1, 1, 1, 1, 1, 1, 0, 1],
            [1, 1, 0, -1, -1, -1, -1, -1],
            [1, 1, 0, -1, -1, 1, 1, 1],
            [1, 1, -1, -1, 1, 1, 0, -1],
            [1, -1, -1, 1, 1, -1, 0, 1],
            [1, -1, 0, 1, -1, -1, 1, -1],
            [1, -1, 0, 1, -1, 1, -1, 1],
            [1, -1, 1, -1, 1, -1, 0, -1],
        ]),
        [8, 4, 4, 4, 8, 4, 4, 4],
    ),
    (
        "T~2",
        IntMatrix8::new([
            [1, 1, 1, 1, 1, 0, 1, 0],
            [1, 1, 1, 0, -1, -1, -1, 0],
            [1, 0, -1, -1, -1, 0, 1, 1],
            [1, 0, -1, 0, 1, 1, -1, -1],
            [1, 0, -1, 0, 1, -1, -1, 1],
            [1, 0, -1, 1, -1, 0, 1, -1],
            [1, -1, 1, 0, -1, 1, -1, 0],
            [1, -1, 1, -1, 1, 0, 1, 0],
        ]),
        [8, 4, 8, 4, 8, 4, 8, 4],
    ),
    (
        "T~3",
        IntMatrix8::new([
            [1, 3, 2, 3, 1, 1, 1, 1],
            [1, 3, 1, -1, -1, -3, -2, -1],
            [1, 1, -1, -3, -1, 1, 2, 3],
            [1, 1, -2, -1, 1, 3, -1, -3],
            [1, -1, -2, 1, 1, -3, -1, 3],
            [1, -1, -1, 3, -1, -1, 2, -3],
            [1, -3, 1, 1, -1, 3, -2, 1],
            [1, -3, 2, -3, 1, -1, 1, -1],
        ]),
        [8, 28, 20, 28, 8, 28, 20, 28],
    ),
    (
        "T~4",
        IntMatrix8::new([
            [1, 3, 2, 3, 1, 1, 1, 1],
            [1, 3, 1, -1, -1, -3, -2, -1],
            [1, 1, -1, -3, -1, 1, 2, 3],
            [1, 1, -2, -1, 1, 3, -1, -3],
            [1, -1, -2, 1, 1, -3, -1, 3],
            [1, -1, -1, 3, -1, -1, 2, -3],
            [1, -3, 1, 1, -1, 3, -2, 1],
            [1, -3, 2, -3, 1, -1, 1, -1],
        ]),
        [16, 28, 20, 28, 16, 28, 20, 28],
    ),
];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(id: u32, name: &'static str, failures: Vec<String>, ok: &str) -> Check {
    Check {
        id,
        name,
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            ok.to_owned()
        } else {
            failures.join("; ")
        },
    }
}

fn named_matrix(name: &str) -> Option<IntMatrix8> {
    known::ORTHOGONAL
        .iter()
        .chain(known::NON_ORTHOGONAL.iter())
        .chain(known::DEGENERATE.iter())
        .find(|(n, _)| *n == name)
        .map(|(_, m)| *m)
}

pub fn check_catalog(cat: &Catalog) -> Check {
    let mut f = Vec::new();
    let count = |c| cat.with_class(c).count();
    if count(Classification::Orthogonal) != 8 {
        f.push(format!("{} orthogonal records", count(Classification::Orthogonal)));
    }
    if count(Classification::NearOrthogonal) != 4 {
        f.push(format!("{} near-orthogonal records", count(Classification::NearOrthogonal)));
    }
    let all = known::ORTHOGONAL
        .iter()
        .chain(known::NON_ORTHOGONAL.iter())
        .chain(known::DEGENERATE.iter());
    for (name, m) in all {
        match cat.get(name) {
            Some(r) if r.matrix == *m => {}
            Some(_) => f.push(format!("{name}: matrix differs")),
            None => f.push(format!("{name}: missing")),
        }
    }
    match cat.get("T~0") {
        Some(r) if r.classification == Classification::Rejected => {}
        _ => f.push("T~0 is not recorded as rejected".into()),
    }
    check(1, "catalog reproduction", f, "8 orthogonal, 4 near-orthogonal, T~0 rejected, degenerate set present")
}

pub fn check_gram() -> Check {
    let mut f = Vec::new();
    for (name, d) in DIAG_GRAM {
        let g = matrix_lab::gram(&named_matrix(name).unwrap());
        if g.diag() != d || !g.is_diagonal() {
            f.push(format!("{name}: {:?}", g.diag()));
        }
    }
    check(2, "gram diagonals", f, "all eight match")
}

pub fn check_deltas() -> Check {
    let mut f = Vec::new();
    for (name, want) in DELTAS {
        let g = matrix_lab::gram(&named_matrix(name).unwrap());
        let d = matrix_lab::deviation_from_diagonality(&g).unwrap_or(f64::NAN);
        if (d - want).abs() > DELTA_TOLERANCE {
            f.push(format!("{name}: {d:.6}"));
        }
        let inside = matrix_lab::within_sdct_threshold(&g);
        if inside != (name != "T~0") {
            f.push(format!("{name}: threshold test gave {inside}"));
        }
    }
    check(3, "deviation from diagonality", f, "five values within 5e-5; threshold test exact")
}

pub fn check_inverses() -> Check {
    let mut f = Vec::new();
    for (name, e, q) in &INVERSES {
        let t = named_matrix(name).unwrap();
        let Ok(inv) = matrix_lab::exact_inverse(&t) else {
            f.push(format!("{name}: singular"));
            continue;
        };
        match matrix_lab::factor_inverse_lowcomplexity(&inv) {
            Some(fac) => {
                let want: [num_rational::BigRational; 8] =
                    std::array::from_fn(|i| matrix_lab::rational(1, q[i]));
                if fac.matrix != *e || fac.diagonal != want {
                    f.push(format!("{name}: factorization differs"));
                }
            }
            None => f.push(format!("{name}: not low-complexity")),
        }
    }
    // T~4⁻¹ = T~3⁻¹ · diag(1/2,1,1,1,1/2,1,1,1)
    let i3 = matrix_lab::exact_inverse(&known::TT3);
    let i4 = matrix_lab::exact_inverse(&known::TT4);
    if let (Ok(i3), Ok(i4)) = (i3, i4) {
        let h = std::array::from_fn(|i| matrix_lab::rational(1, if i % 4 == 0 { 2 } else { 1 }));
        if i3.scale_columns(&h) != i4 {
            f.push("T~4⁻¹ is not T~3⁻¹·diag(1/2,1,1,1,1/2,1,1,1)".into());
        }
    }
    check(4, "exact inverses", f, "T~1..T~4 factors match; T~4/T~3 relation exact")
}

pub fn check_fast_exactness(vectors: usize) -> Check {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (name, m) in FACTORIZATION_CONSTANTS {
        let t = named_matrix(name).unwrap();
        let plan = fast_transform::build_plan_with_constants(&t, &m);
        if fast_transform::factorized_product(&m) != t {
            f.push(format!("{name}: factorization product differs, using direct route"));
        }
        for _ in 0..vectors {
            let x: [i64; 8] = std::array::from_fn(|_| rng.random_range(-256..=255));
            if apply_plan(&plan, &x) != t.mul_vec(&x) {
                f.push(format!("{name}: plan output differs for {x:?}"));
                break;
            }
        }
    }
    check(5, "fast algorithm exactness", f, "factorization exact for all 12; random vectors bit-exact")
}

pub fn check_counts() -> Check {
    let mut f = Vec::new();
    for (name, want) in OP_COUNTS {
        let m = fast_transform::constants_for(name).unwrap();
        let got = fast_transform::factorized_plan(&m).counts;
        if got != want {
            f.push(format!("{name}: {got}"));
        }
    }
    check(6, "complexity counts", f, "all 12 rows match")
}

pub fn check_equivalence(cat: &Catalog) -> Check {
    let mut f = Vec::new();
    let s3 = matrix_lab::orthonormalize(&known::TT3).unwrap();
    let s4 = matrix_lab::orthonormalize(&known::TT4).unwrap();
    let a = matrix_lab::normalized(&known::TT3, &s3);
    let b = matrix_lab::normalized(&known::TT4, &s4);
    let worst = a
        .iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    if worst > 1e-12 {
        f.push(format!("normalized difference {worst:e}"));
    }
    let linked = cat
        .get("T~4")
        .is_some_and(|r| r.equivalent_to.iter().any(|n| n == "T~3"));
    if !linked {
        f.push("catalog does not link T~4 to T~3".into());
    }
    check(7, "normalized equivalence", f, "T~3 and T~4 agree after scaling and are linked")
}

pub fn random_image(rng: &mut ChaCha8Rng, w: usize, h: usize) -> ImageGray8 {
    let pixels = (0..w * h).map(|_| rng.random::<u8>()).collect();
    ImageGray8::new(w, h, pixels).expect("sizes agree")
}

pub fn check_roundtrip(cat: &Catalog, images: usize, size: usize) -> Check {
    let mut f = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    let full = RetentionSpec::new(64).unwrap();
    let mut transforms = vec![TransformRef::Exact];
    transforms.extend(cat.with_class(Classification::Orthogonal).map(TransformRef::Approx));
    for k in 0..images {
        let img = random_image(&mut rng, size, size);
        for t in &transforms {
            match compress_image(*t, &img, full, CodecOptions::default()) {
                Ok(out) if out == img => {}
                Ok(_) => f.push(format!("{} on image {k}: not pixel-exact", t.name())),
                Err(e) => f.push(format!("{}: {e}", t.name())),
            }
        }
    }
    check(8, "codec full-retention round trip", f, "pixel-exact for DCT and T0..T7")
}

pub fn check_intervals(cat: &Catalog, samples: usize) -> Check {
    let mut f = Vec::new();
    let dct = build_exact_dct();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for r in &cat.records {
        for p in &r.provenance {
            let iv = &p.interval;
            for _ in 0..samples {
                let a = if iv.is_point() {
                    iv.lo
                } else {
                    let u: f64 = rng.random_range(0.001..0.999);
                    iv.lo + u * (iv.hi - iv.lo)
                };
                if search::candidate(&dct, p.function, a) != r.matrix {
                    f.push(format!("{} {} {iv} at α={a}", r.name, p.function));
                    break;
                }
            }
        }
    }
    for (name, m) in FACTORIZATION_CONSTANTS {
        let bits = fast_transform::factorized_plan(&m).max_intermediate_bits(9);
        if bits > 16 {
            f.push(format!("{name}: {bits}-bit intermediates"));
        }
    }
    check(10, "interval and width properties", f, "sampled α reproduce every record; plans fit 16 bits")
}

/// Runs every check. `quick` shrinks the random workloads.
pub fn run_checks(cat: &Catalog, quick: bool) -> Vec<Check> {
    let (vectors, images, size) = if quick { (100, 2, 64) } else { (1000, 10, 512) };
    vec![
        check_catalog(cat),
        check_gram(),
        check_deltas(),
        check_inverses(),
        check_fast_exactness(vectors),
        check_counts(),
        check_equivalence(cat),
        check_roundtrip(cat, images, size),
        check_intervals(cat, 5),
    ]
}

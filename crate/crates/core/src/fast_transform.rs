//! Multiplierless evaluation of `X = T·x` via `T = P·K(m)·B1·B2·B3`.
//!
//! A plan is straight-line three-address code over registers. Registers
//! `0..8` hold the input; every step writes one new register. Negations are
//! folded into the sign of the following add/sub whenever possible, so only
//! additions, subtractions and left shifts carry a cost.

use serde::{Deserialize, Serialize};
use std::fmt::{self, Write as _};
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::matrix_lab::IntMatrix8;
use crate::search::ApproximationRecord;

pub type Constants = [i64; 7];

/// Factorization constants `m0..m6` per catalog transform.
///
/// `T1` uses `m1 = 1, m5 = 0`; the commonly tabulated `m1 = 0, m5 = 1`
/// factors the row-exchanged variant of `T1` instead, at the same cost.
pub const FACTORIZATION_CONSTANTS: [(&str, Constants); 12] = [
    ("T0", [1, 1, 1, 1, 1, 0, 0]),
    ("T1", [2, 1, 1, 1, 1, 0, 0]),
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

pub fn constants_for(name: &str) -> Option<Constants> {
    let name = crate::known::canonical_name(name);
    FACTORIZATION_CONSTANTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, m)| *m)
}

pub const P: IntMatrix8 = IntMatrix8::new([
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
]);

pub const B1: IntMatrix8 = IntMatrix8::new([
    [1, 1, 0, 0, 0, 0, 0, 0],
    [1, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0],
]);

pub const B2: IntMatrix8 = IntMatrix8::new([
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 0, 0],
    [1, 0, 0, -1, 0, 0, 0, 0],
    [0, 1, -1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
]);

pub const B3: IntMatrix8 = IntMatrix8::new([
    [1, 0, 0, 0, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 1, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, -1],
    [0, 1, 0, 0, 0, 0, -1, 0],
    [0, 0, 1, 0, 0, -1, 0, 0],
    [0, 0, 0, 1, -1, 0, 0, 0],
]);

/// The fixed factors `(P, B1, B2, B3)`.
pub fn factorization_matrices() -> (IntMatrix8, IntMatrix8, IntMatrix8, IntMatrix8) {
    (P, B1, B2, B3)
}

/// The multiplicative factor for constants `m`.
#[allow(non_snake_case)]
pub fn K(m: &Constants) -> IntMatrix8 {
    let [m0, m1, m2, m3, m4, m5, m6] = *m;
    IntMatrix8::new([
        [m3, 0, 0, 0, 0, 0, 0, 0],
        [0, m3, 0, 0, 0, 0, 0, 0],
        [0, 0, m5, m1, 0, 0, 0, 0],
        [0, 0, -m1, m5, 0, 0, 0, 0],
        [0, 0, 0, 0, m4, -m6, m2, m0],
        [0, 0, 0, 0, -m0, m4, -m6, m2],
        [0, 0, 0, 0, -m2, -m0, m4, -m6],
        [0, 0, 0, 0, m6, -m2, -m0, m4],
    ])
}

/// `P·K(m)·B1·B2·B3`.
pub fn factorized_product(m: &Constants) -> IntMatrix8 {
    P.mul(&K(m)).mul(&B1).mul(&B2).mul(&B3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    Add { dst: usize, a: usize, b: usize },
    Sub { dst: usize, a: usize, b: usize },
    Shl { dst: usize, src: usize, bits: u32 },
    Neg { dst: usize, src: usize },
    Zero { dst: usize },
}

impl Step {
    pub fn dst(&self) -> usize {
        match *self {
            Step::Add { dst, .. }
            | Step::Sub { dst, .. }
            | Step::Shl { dst, .. }
            | Step::Neg { dst, .. }
            | Step::Zero { dst } => dst,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Step::Add { dst, a, b } => write!(f, "add r{dst} = r{a} + r{b}"),
            Step::Sub { dst, a, b } => write!(f, "sub r{dst} = r{a} - r{b}"),
            Step::Shl { dst, src, bits } => write!(f, "shl r{dst} = r{src} << {bits}"),
            Step::Neg { dst, src } => write!(f, "neg r{dst} = -r{src}"),
            Step::Zero { dst } => write!(f, "zero r{dst}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OpCounts {
    pub multiplications: u32,
    pub additions: u32,
    pub shifts: u32,
}

impl fmt::Display for OpCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} mult, {} add, {} shift",
            self.multiplications, self.additions, self.shifts
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Stages B3, B2, B1, K, P.
    Factorized,
    /// One stage straight from the rows of `T`; used when the factorization
    /// does not reproduce the requested matrix.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformPlan {
    pub m: Option<Constants>,
    pub route: Route,
    pub steps: Vec<Step>,
    /// Register holding output `k`.
    pub outputs: [usize; 8],
    pub counts: OpCounts,
}

pub fn count_ops(plan: &TransformPlan) -> OpCounts {
    let mut c = OpCounts::default();
    for s in &plan.steps {
        match s {
            Step::Add { .. } | Step::Sub { .. } => c.additions += 1,
            Step::Shl { .. } => c.shifts += 1,
            Step::Neg { .. } | Step::Zero { .. } => {}
        }
    }
    c
}

/// A register together with the sign it must be read with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Signed {
    reg: usize,
    negative: bool,
}

/// Value `Σ coef·x` with no multiplications other than shifts.
#[derive(Default)]
struct Builder {
    steps: Vec<Step>,
    next: usize,
}

impl Builder {
    fn new() -> Self {
        Builder {
            steps: Vec::new(),
            next: 8,
        }
    }

    fn emit(&mut self, f: impl FnOnce(usize) -> Step) -> usize {
        let dst = self.next;
        self.next += 1;
        self.steps.push(f(dst));
        dst
    }

    /// `|c|·r` by shifts and adds. Costed per use: nothing is shared between
    /// terms, so `3x` always costs one shift and one addition.
    fn magnitude(&mut self, reg: usize, c: u64) -> usize {
        if c == 1 {
            return reg;
        }
        if c.is_power_of_two() {
            let bits = c.trailing_zeros();
            return self.emit(|dst| Step::Shl { dst, src: reg, bits });
        }
        // c = 2^k + rest with rest < 2^k
        let k = 63 - c.leading_zeros();
        let hi = self.magnitude(reg, 1 << k);
        let lo = self.magnitude(reg, c - (1 << k));
        self.emit(|dst| Step::Add { dst, a: hi, b: lo })
    }

    /// One stage: each output row is a signed combination of `inputs`.
    fn stage(&mut self, m: &IntMatrix8, inputs: &[Signed; 8]) -> [Option<Signed>; 8] {
        let mut out = [None; 8];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for (j, input) in inputs.iter().enumerate() {
                let c = m.get(i, j);
                if c == 0 {
                    continue;
                }
                let r = self.magnitude(input.reg, c.unsigned_abs());
                if (c < 0) != input.negative {
                    neg.push(r);
                } else {
                    pos.push(r);
                }
            }
            *slot = self.combine(pos, neg);
        }
        out
    }

    fn combine(&mut self, pos: Vec<usize>, neg: Vec<usize>) -> Option<Signed> {
        let (first, rest_pos, subtract, negative) = match (pos.split_first(), neg.split_first()) {
            (Some((&f, rest)), _) => (f, rest.to_vec(), neg, false),
            (None, Some((&f, rest))) => (f, Vec::new(), rest.to_vec(), true),
            (None, None) => return None,
        };
        let mut acc = first;
        for r in rest_pos {
            acc = self.emit(|dst| Step::Add { dst, a: acc, b: r });
        }
        for r in subtract {
            acc = if negative {
                self.emit(|dst| Step::Add { dst, a: acc, b: r })
            } else {
                self.emit(|dst| Step::Sub { dst, a: acc, b: r })
            };
        }
        Some(Signed { reg: acc, negative })
    }

    fn finish(mut self, last: [Option<Signed>; 8], m: Option<Constants>, route: Route) -> TransformPlan {
        let mut outputs = [0; 8];
        for (k, o) in last.iter().enumerate() {
            outputs[k] = match o {
                None => self.emit(|dst| Step::Zero { dst }),
                Some(Signed { reg, negative: false }) => *reg,
                Some(Signed { reg, negative: true }) => {
                    let src = *reg;
                    self.emit(|dst| Step::Neg { dst, src })
                }
            };
        }
        let mut plan = TransformPlan {
            m,
            route,
            steps: self.steps,
            outputs,
            counts: OpCounts::default(),
        };
        plan.counts = count_ops(&plan);
        plan
    }
}

fn inputs() -> [Signed; 8] {
    std::array::from_fn(|reg| Signed {
        reg,
        negative: false,
    })
}

fn run_stages(stages: &[IntMatrix8], m: Option<Constants>, route: Route) -> TransformPlan {
    let mut b = Builder::new();
    let mut cur: [Option<Signed>; 8] = inputs().map(Some);
    for s in stages {
        let live: [Signed; 8] = std::array::from_fn(|i| match cur[i] {
            Some(v) => v,
            None => Signed {
                reg: usize::MAX,
                negative: false,
            },
        });
        // zero lanes must not be read: blank out their columns
        let mut masked = *s.entries();
        for (j, v) in cur.iter().enumerate() {
            if v.is_none() {
                for row in masked.iter_mut() {
                    row[j] = 0;
                }
            }
        }
        cur = b.stage(&IntMatrix8::new(masked), &live);
    }
    b.finish(cur, m, route)
}

/// Plan through the shared factorization with the given constants.
pub fn factorized_plan(m: &Constants) -> TransformPlan {
    run_stages(&[B3, B2, B1, K(m), P], Some(*m), Route::Factorized)
}

/// Plan computing each output directly from the rows of `t`.
pub fn direct_plan(t: &IntMatrix8) -> TransformPlan {
    run_stages(std::slice::from_ref(t), None, Route::Direct)
}

/// Factorized plan for `m` when it reproduces `t`, otherwise the direct plan.
pub fn build_plan_with_constants(t: &IntMatrix8, m: &Constants) -> TransformPlan {
    if factorized_product(m) == *t {
        factorized_plan(m)
    } else {
        direct_plan(t)
    }
}

pub fn build_plan(record: &ApproximationRecord) -> Result<TransformPlan> {
    let m = constants_for(&record.name)
        .ok_or_else(|| Error::UnsupportedTransform(record.name.clone()))?;
    Ok(build_plan_with_constants(&record.matrix, &m))
}

/// Arithmetic needed by [`apply_plan`].
pub trait Lane: Copy + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self> {
    fn zero() -> Self;
    fn shl(self, bits: u32) -> Self;
}

impl Lane for i64 {
    fn zero() -> Self {
        0
    }
    fn shl(self, bits: u32) -> Self {
        self << bits
    }
}

impl Lane for i32 {
    fn zero() -> Self {
        0
    }
    fn shl(self, bits: u32) -> Self {
        self << bits
    }
}

impl Lane for f64 {
    fn zero() -> Self {
        0.0
    }
    fn shl(self, bits: u32) -> Self {
        self * f64::from(1u32 << bits)
    }
}

impl TransformPlan {
    pub fn registers(&self) -> usize {
        8 + self.steps.len()
    }

    /// All register values after running the schedule on `x`.
    pub fn trace<T: Lane>(&self, x: &[T; 8]) -> Vec<T> {
        let mut r = Vec::with_capacity(self.registers());
        r.extend_from_slice(x);
        for s in &self.steps {
            let v = match *s {
                Step::Add { a, b, .. } => r[a] + r[b],
                Step::Sub { a, b, .. } => r[a] - r[b],
                Step::Shl { src, bits, .. } => r[src].shl(bits),
                Step::Neg { src, .. } => -r[src],
                Step::Zero { .. } => T::zero(),
            };
            debug_assert_eq!(s.dst(), r.len());
            r.push(v);
        }
        r
    }

    /// The matrix realized by the schedule, read off the unit-vector responses.
    pub fn matrix(&self) -> IntMatrix8 {
        let mut m = [[0i64; 8]; 8];
        for j in 0..8 {
            let mut e = [0i64; 8];
            e[j] = 1;
            let y = apply_plan(self, &e);
            for i in 0..8 {
                m[i][j] = y[i];
            }
        }
        IntMatrix8::new(m)
    }

    /// Bits (including sign) needed by the widest register for inputs in
    /// `[-2^(input_bits-1), 2^(input_bits-1))`.
    pub fn max_intermediate_bits(&self, input_bits: u32) -> u32 {
        let forms: Vec<Vec<i64>> = (0..8)
            .map(|j| {
                let mut e = [0i64; 8];
                e[j] = 1;
                self.trace(&e)
            })
            .collect();
        let peak = (0..self.registers())
            .map(|r| forms.iter().map(|f| f[r].unsigned_abs()).sum::<u64>())
            .max()
            .unwrap_or(0)
            << (input_bits - 1);
        // magnitude up to `peak` (inclusive) in two's complement
        64 - peak.leading_zeros() + 1
    }

    /// One primitive per line.
    pub fn listing(&self) -> String {
        let mut s = String::new();
        match self.m {
            Some(m) => {
                let _ = writeln!(s, "# factorized m = {m:?}");
            }
            None => {
                let _ = writeln!(s, "# direct");
            }
        }
        for step in &self.steps {
            let _ = writeln!(s, "{step}");
        }
        for (k, r) in self.outputs.iter().enumerate() {
            let _ = writeln!(s, "out X{k} = r{r}");
        }
        let _ = writeln!(s, "# {}", self.counts);
        s
    }
}

pub fn apply_plan<T: Lane>(plan: &TransformPlan, x: &[T; 8]) -> [T; 8] {
    let r = plan.trace(x);
    plan.outputs.map(|k| r[k])
}

/// `T·A·Tᵀ`: columns first, then rows.
pub fn apply_plan_2d<T: Lane>(plan: &TransformPlan, a: &[[T; 8]; 8]) -> [[T; 8]; 8] {
    let mut tmp = [[T::zero(); 8]; 8];
    for j in 0..8 {
        let col: [T; 8] = std::array::from_fn(|i| a[i][j]);
        let y = apply_plan(plan, &col);
        for i in 0..8 {
            tmp[i][j] = y[i];
        }
    }
    tmp.map(|row| apply_plan(plan, &row))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;
    use proptest::prelude::*;

    fn named(name: &str) -> IntMatrix8 {
        known::ORTHOGONAL
            .iter()
            .chain(known::NON_ORTHOGONAL.iter())
            .find(|(n, _)| *n == name)
            .unwrap()
            .1
    }

    #[test]
    fn factor_shapes() {
        for i in 0..4 {
            assert_eq!((B3.get(i, i), B3.get(i, 7 - i)), (1, 1));
            assert_eq!((B3.get(i + 4, i), B3.get(i + 4, 7 - i)), (1, -1));
        }
        assert_eq!(P.mul(&P.transpose()), IntMatrix8::identity());
    }

    #[test]
    fn factorization_reproduces_every_transform() {
        for (name, m) in FACTORIZATION_CONSTANTS {
            assert_eq!(factorized_product(&m), named(name), "{name}");
            assert_eq!(build_plan_with_constants(&named(name), &m).route, Route::Factorized);
        }
    }

    #[test]
    fn counts() {
        let c = |n| factorized_plan(&constants_for(n).unwrap()).counts;
        let oc = |a, s| OpCounts {
            multiplications: 0,
            additions: a,
            shifts: s,
        };
        assert_eq!(c("T0"), oc(22, 0));
        assert_eq!(c("T~1"), oc(18, 0));
        assert_eq!(c("T7"), oc(32, 12));
        assert_eq!(c("RDCT"), oc(24, 0));
    }

    #[test]
    fn small_examples() {
        let t4 = factorized_plan(&constants_for("T4").unwrap());
        assert_eq!(apply_plan(&t4, &[1i64; 8]), [8, 0, 0, 0, 0, 0, 0, 0]);
        let t0 = factorized_plan(&constants_for("T0").unwrap());
        assert_eq!(
            apply_plan(&t0, &[1i64, 0, 0, 0, 0, 0, 0, 0]),
            [1, 1, 1, 1, 1, 1, 0, 0]
        );
    }

    #[test]
    fn direct_route_for_unlisted_matrix() {
        let t = known::TT0;
        let p = build_plan_with_constants(&t, &[1; 7]);
        assert_eq!(p.route, Route::Direct);
        assert_eq!(p.matrix(), t);
        assert_eq!(p.counts.multiplications, 0);
    }

    #[test]
    fn widths_fit_sixteen_bits() {
        for (_, m) in FACTORIZATION_CONSTANTS {
            assert!(factorized_plan(&m).max_intermediate_bits(9) <= 16);
        }
    }

    #[test]
    fn plan_matrix_and_2d() {
        let m = constants_for("T6").unwrap();
        let p = factorized_plan(&m);
        assert_eq!(p.matrix(), known::T6);
        let a: [[i64; 8]; 8] = std::array::from_fn(|i| std::array::from_fn(|j| (i * 8 + j) as i64 - 30));
        let t = known::T6;
        let direct = t.mul(&IntMatrix8::new(a)).mul(&t.transpose());
        assert_eq!(apply_plan_2d(&p, &a), *direct.entries());
    }

    #[test]
    fn listing_lines() {
        let p = factorized_plan(&constants_for("T~2").unwrap());
        let l = p.listing();
        assert_eq!(l.lines().filter(|s| s.starts_with("add") || s.starts_with("sub")).count(), 28);
        assert!(l.contains("out X7"));
    }

    proptest! {
        #[test]
        fn exact_and_linear(x in prop::array::uniform8(-256i64..256), y in prop::array::uniform8(-256i64..256),
                            a in -4i64..5, b in -4i64..5, idx in 0usize..12) {
            let (name, m) = FACTORIZATION_CONSTANTS[idx];
            let p = factorized_plan(&m);
            let t = named(name);
            prop_assert_eq!(apply_plan(&p, &x), t.mul_vec(&x));
            let z: [i64; 8] = std::array::from_fn(|i| a * x[i] + b * y[i]);
            let (px, py) = (apply_plan(&p, &x), apply_plan(&p, &y));
            let lin: [i64; 8] = std::array::from_fn(|i| a * px[i] + b * py[i]);
            prop_assert_eq!(apply_plan(&p, &z), lin);
        }
    }
}

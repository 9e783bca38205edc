//! Expansion-factor sweep over `int(α·C)`.
//!
//! For a fixed integer function the map `α ↦ int(α·C)` is piecewise constant.
//! Its discontinuities sit where some entry `α·γ_k/2` crosses an integer or a
//! half-integer, i.e. at `α = l/γ_k`. The sweep evaluates every breakpoint and
//! every open gap between consecutive breakpoints, merges runs that produce
//! the same matrix, and classifies the result.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::exact_dct::{build_exact_dct, ExactDct, GammaConstants};
use crate::fast_transform::{self, OpCounts};
use crate::integer_functions::{IntFuncKind, TIE_TOLERANCE};
use crate::known;
use crate::matrix_lab::{self, IntMatrix8, InverseFactorization, ScalingDiagonal};

/// Largest numerator `l` considered when enumerating `l/γ_k`.
const MAX_NUMERATOR: i64 = 64;

/// `l/γ_k`, or the plain number `l` when `gamma` is `None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlphaSymbol {
    pub numer: i64,
    pub gamma: Option<usize>,
}

impl AlphaSymbol {
    pub fn over_gamma(numer: i64, k: usize) -> Self {
        AlphaSymbol {
            numer,
            gamma: Some(k),
        }
    }

    pub fn value(&self, g: &GammaConstants) -> f64 {
        match self.gamma {
            Some(k) => self.numer as f64 / g.get(k),
            None => self.numer as f64,
        }
    }
}

impl fmt::Display for AlphaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gamma {
            Some(k) => write!(f, "{}/γ{}", self.numer, k),
            None => write!(f, "{}", self.numer),
        }
    }
}

impl FromStr for AlphaSymbol {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("invalid α symbol `{s}`");
        match s.split_once('/') {
            Some((l, g)) => {
                let k = g
                    .strip_prefix("γ")
                    .or_else(|| g.strip_prefix('g'))
                    .ok_or_else(bad)?;
                Ok(AlphaSymbol {
                    numer: l.parse().map_err(|_| bad())?,
                    gamma: Some(k.parse().map_err(|_| bad())?),
                })
            }
            None => Ok(AlphaSymbol {
                numer: s.parse().map_err(|_| bad())?,
                gamma: None,
            }),
        }
    }
}

impl Serialize for AlphaSymbol {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlphaSymbol {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaInterval {
    pub lo_symbol: AlphaSymbol,
    pub hi_symbol: AlphaSymbol,
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl AlphaInterval {
    pub fn point(sym: AlphaSymbol, value: f64) -> Self {
        AlphaInterval {
            lo_symbol: sym,
            hi_symbol: sym,
            lo: value,
            hi: value,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, alpha: f64) -> bool {
        let above = if self.lo_closed {
            alpha >= self.lo - TIE_TOLERANCE
        } else {
            alpha > self.lo
        };
        let below = if self.hi_closed {
            alpha <= self.hi + TIE_TOLERANCE
        } else {
            alpha < self.hi
        };
        above && below
    }
}

impl fmt::Display for AlphaInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{}", self.lo_symbol);
        }
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo_symbol,
            self.hi_symbol,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// Admissible `α` such that `0 ≤ int(α·γ0/2) ≤ 3` and the largest entry is nonzero.
pub fn alpha_range(kind: IntFuncKind) -> AlphaInterval {
    let g = GammaConstants::new();
    let (lo, hi) = match kind {
        IntFuncKind::Ceil | IntFuncKind::RoundAFZ => (AlphaSymbol { numer: 0, gamma: None }, 6),
        IntFuncKind::Floor | IntFuncKind::Trunc => (AlphaSymbol::over_gamma(2, 0), 8),
        _ => (AlphaSymbol::over_gamma(1, 0), 7),
    };
    let hi = AlphaSymbol::over_gamma(hi, 0);
    AlphaInterval {
        lo_symbol: lo,
        hi_symbol: hi,
        lo: lo.value(&g),
        hi: hi.value(&g),
        lo_closed: true,
        hi_closed: true,
    }
}

/// The part of the α axis actually swept: `(0, hi]` with `hi` from [`alpha_range`].
///
/// The lower end is extended to zero so the degenerate matrices that appear
/// below `alpha_range(kind).lo` are still enumerated.
pub fn sweep_domain(kind: IntFuncKind) -> AlphaInterval {
    let r = alpha_range(kind);
    AlphaInterval {
        lo_symbol: AlphaSymbol { numer: 0, gamma: None },
        lo: 0.0,
        lo_closed: false,
        ..r
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Breakpoint {
    pub value: f64,
    pub symbols: Vec<AlphaSymbol>,
}

impl Breakpoint {
    pub fn symbol(&self) -> AlphaSymbol {
        self.symbols[0]
    }
}

fn breakpoints_within(lo: f64, lo_closed: bool, hi: f64) -> Vec<Breakpoint> {
    let g = GammaConstants::new();
    let mut all: Vec<(f64, AlphaSymbol)> = Vec::new();
    for k in 0..7 {
        for l in 1..=MAX_NUMERATOR {
            let s = AlphaSymbol::over_gamma(l, k);
            let v = s.value(&g);
            let above = if lo_closed {
                v >= lo - TIE_TOLERANCE
            } else {
                v > lo + TIE_TOLERANCE
            };
            if above && v <= hi + TIE_TOLERANCE {
                all.push((v, s));
            }
        }
    }
    all.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<Breakpoint> = Vec::new();
    for (v, s) in all {
        match out.last_mut() {
            Some(last) if (v - last.value).abs() < TIE_TOLERANCE => last.symbols.push(s),
            _ => out.push(Breakpoint {
                value: v,
                symbols: vec![s],
            }),
        }
    }
    out
}

/// Every `α = l/γ_k` inside [`alpha_range`]. Integer crossings (`l` even) and
/// half-integer crossings (`l` odd) are both listed for every kind.
pub fn breakpoints(kind: IntFuncKind) -> Vec<Breakpoint> {
    let r = alpha_range(kind);
    breakpoints_within(r.lo, r.lo_closed, r.hi)
}

/// One constant piece of the sweep: either a breakpoint or an open gap.
#[derive(Clone, Debug, PartialEq)]
pub struct Piece {
    pub interval: AlphaInterval,
    pub matrix: IntMatrix8,
}

pub fn candidate(dct: &ExactDct, kind: IntFuncKind, alpha: f64) -> IntMatrix8 {
    kind.apply_matrix(&dct.scaled(alpha))
        .expect("α·C is finite for finite α")
}

/// Raw pieces covering [`sweep_domain`] in increasing order.
pub fn sweep_pieces(kind: IntFuncKind) -> Vec<Piece> {
    let dct = build_exact_dct();
    let dom = sweep_domain(kind);
    let bps = breakpoints_within(dom.lo, false, dom.hi);
    let mut pieces = Vec::with_capacity(2 * bps.len());
    let mut prev = (dom.lo_symbol, dom.lo);
    for bp in &bps {
        let mid = 0.5 * (prev.1 + bp.value);
        pieces.push(Piece {
            interval: AlphaInterval {
                lo_symbol: prev.0,
                hi_symbol: bp.symbol(),
                lo: prev.1,
                hi: bp.value,
                lo_closed: false,
                hi_closed: false,
            },
            matrix: candidate(&dct, kind, mid),
        });
        pieces.push(Piece {
            interval: AlphaInterval::point(bp.symbol(), bp.value),
            matrix: candidate(&dct, kind, bp.value),
        });
        prev = (bp.symbol(), bp.value);
    }
    pieces
}

/// Maximal runs of consecutive pieces sharing one matrix.
///
/// Breakpoints always decide whether neighbouring endpoints are closed. For
/// the nearest-integer kinds a breakpoint whose matrix differs from both
/// neighbours becomes a point run of its own; for the directed kinds (floor,
/// ceil, trunc, round-AFZ) such a point is left out, so only open intervals
/// and their closures are reported.
pub fn sweep_runs(kind: IntFuncKind) -> Vec<Piece> {
    let pieces = sweep_pieces(kind);
    let mut runs: Vec<Piece> = Vec::new();
    let mut gap = false;
    for (idx, p) in pieces.iter().enumerate() {
        if p.interval.is_point() && !kind.is_nearest() {
            let prev = idx.checked_sub(1).map(|i| &pieces[i].matrix);
            let next = pieces.get(idx + 1).map(|n| &n.matrix);
            if prev != Some(&p.matrix) && next != Some(&p.matrix) {
                gap = true;
                continue;
            }
        }
        match runs.last_mut() {
            Some(last) if !gap && last.matrix == p.matrix => {
                last.interval.hi = p.interval.hi;
                last.interval.hi_symbol = p.interval.hi_symbol;
                last.interval.hi_closed = p.interval.hi_closed;
            }
            _ => runs.push(p.clone()),
        }
        gap = false;
    }
    runs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Orthogonal,
    NearOrthogonal,
    Degenerate,
    Rejected,
}

impl Classification {
    pub fn is_usable(self) -> bool {
        matches!(self, Classification::Orthogonal | Classification::NearOrthogonal)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Orthogonal => "orthogonal",
            Classification::NearOrthogonal => "near_orthogonal",
            Classification::Degenerate => "degenerate",
            Classification::Rejected => "rejected",
        })
    }
}

/// Everything derived from the matrix alone.
#[derive(Clone, Debug, PartialEq)]
pub struct Assessment {
    pub classification: Classification,
    pub delta: f64,
    pub diag_gram: [i64; 8],
    pub scaling: Option<ScalingDiagonal>,
    pub inverse: Option<InverseFactorization>,
}

/// Applies conditions (a)–(c): entries in `{0,±1,±2,±3}`, `T·Tᵀ` diagonal or
/// within the SDCT deviation bound, and a low-complexity inverse for the
/// non-orthogonal case. Returns `None` when (a) fails or the matrix is zero.
pub fn assess(t: &IntMatrix8) -> Option<Assessment> {
    if !matrix_lab::entries_in_c(t) || t.is_zero() {
        return None;
    }
    let g = matrix_lab::gram(t);
    let diag_gram = g.diag();
    let delta = matrix_lab::deviation_from_diagonality(&g).ok()?;
    if t.has_null_row() {
        return Some(Assessment {
            classification: Classification::Degenerate,
            delta,
            diag_gram,
            scaling: None,
            inverse: None,
        });
    }
    let scaling = ScalingDiagonal::from_gram_diagonal(&diag_gram).ok();
    if g.is_diagonal() {
        return Some(Assessment {
            classification: Classification::Orthogonal,
            delta,
            diag_gram,
            scaling,
            inverse: None,
        });
    }
    let inverse = if matrix_lab::within_sdct_threshold(&g) {
        matrix_lab::exact_inverse(t)
            .ok()
            .and_then(|inv| matrix_lab::factor_inverse_lowcomplexity(&inv))
    } else {
        None
    };
    let classification = if inverse.is_some() {
        Classification::NearOrthogonal
    } else {
        Classification::Rejected
    };
    Some(Assessment {
        classification,
        delta,
        diag_gram,
        scaling,
        inverse,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub function: IntFuncKind,
    pub interval: AlphaInterval,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproximationRecord {
    pub name: String,
    pub alias: Option<String>,
    /// First integer function (in [`IntFuncKind::ALL`] order) producing the matrix.
    pub function: IntFuncKind,
    pub interval: AlphaInterval,
    pub provenance: Vec<Provenance>,
    pub matrix: IntMatrix8,
    pub classification: Classification,
    pub delta: f64,
    pub diag_gram: [i64; 8],
    pub scaling: Option<ScalingDiagonal>,
    pub inverse: Option<InverseFactorization>,
    #[serde(default)]
    pub equivalent_to: Vec<String>,
    #[serde(default)]
    pub complexity: Option<OpCounts>,
}

impl ApproximationRecord {
    fn from_run(kind: IntFuncKind, run: Piece, a: Assessment) -> Self {
        let name = known::lookup(&run.matrix)
            .map(str::to_owned)
            .unwrap_or_else(|| unnamed(&run.matrix, a.classification));
        let alias = known::alias_of(&name).map(str::to_owned);
        ApproximationRecord {
            alias,
            function: kind,
            interval: run.interval.clone(),
            provenance: vec![Provenance {
                function: kind,
                interval: run.interval,
            }],
            matrix: run.matrix,
            classification: a.classification,
            delta: a.delta,
            diag_gram: a.diag_gram,
            scaling: a.scaling,
            inverse: a.inverse,
            equivalent_to: Vec::new(),
            complexity: None,
            name,
        }
    }

    pub fn is_usable(&self) -> bool {
        self.classification.is_usable()
    }

    pub fn provenance_for(&self, kind: IntFuncKind) -> impl Iterator<Item = &AlphaInterval> {
        self.provenance
            .iter()
            .filter(move |p| p.function == kind)
            .map(|p| &p.interval)
    }
}

fn unnamed(t: &IntMatrix8, c: Classification) -> String {
    let prefix = match c {
        Classification::Degenerate => "Tv",
        Classification::Orthogonal => "T",
        _ => "T~",
    };
    format!("{prefix}#{:08x}", t.fingerprint() as u32)
}

/// Classified records for one integer function. Rejected candidates are kept
/// only when they have a catalog name.
pub fn sweep(kind: IntFuncKind) -> Vec<ApproximationRecord> {
    let mut out: Vec<ApproximationRecord> = Vec::new();
    for run in sweep_runs(kind) {
        let Some(a) = assess(&run.matrix) else { continue };
        if a.classification == Classification::Rejected && known::lookup(&run.matrix).is_none() {
            continue;
        }
        match out.iter_mut().find(|r| r.matrix == run.matrix) {
            Some(r) => r.provenance.push(Provenance {
                function: kind,
                interval: run.interval,
            }),
            None => out.push(ApproximationRecord::from_run(kind, run, a)),
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Catalog {
    pub records: Vec<ApproximationRecord>,
}

/// A transform usable by the codec: the exact DCT or a catalog record.
#[derive(Clone, Copy, Debug)]
pub enum TransformRef<'a> {
    Exact,
    Approx(&'a ApproximationRecord),
}

impl TransformRef<'_> {
    pub fn name(&self) -> &str {
        match self {
            TransformRef::Exact => EXACT_DCT_NAME,
            TransformRef::Approx(r) => &r.name,
        }
    }
}

pub const EXACT_DCT_NAME: &str = "DCT";

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&ApproximationRecord> {
        let canon = known::canonical_name(name);
        self.records
            .iter()
            .find(|r| r.name == canon || r.name.eq_ignore_ascii_case(canon))
            .or_else(|| {
                self.records
                    .iter()
                    .find(|r| r.alias.as_deref().is_some_and(|a| a.eq_ignore_ascii_case(name)))
            })
    }

    /// Like [`Catalog::get`] but also knows the exact DCT baseline.
    pub fn resolve(&self, name: &str) -> Option<TransformRef<'_>> {
        if name.eq_ignore_ascii_case(EXACT_DCT_NAME) {
            return Some(TransformRef::Exact);
        }
        self.get(name).map(TransformRef::Approx)
    }

    pub fn with_class(&self, c: Classification) -> impl Iterator<Item = &ApproximationRecord> {
        self.records.iter().filter(move |r| r.classification == c)
    }

    pub fn usable(&self) -> impl Iterator<Item = &ApproximationRecord> {
        self.records.iter().filter(|r| r.is_usable())
    }
}

fn catalog_rank(r: &ApproximationRecord) -> (u8, usize) {
    let class = match r.classification {
        Classification::Orthogonal => 0,
        Classification::NearOrthogonal | Classification::Rejected => 1,
        Classification::Degenerate => 2,
    };
    let idx = known::ORTHOGONAL
        .iter()
        .chain(known::NON_ORTHOGONAL.iter())
        .chain(known::DEGENERATE.iter())
        .position(|(n, _)| *n == r.name)
        .unwrap_or(usize::MAX);
    (class, idx)
}

/// Merges the given per-kind sweeps into one catalog.
pub fn merge_sweeps(per_kind: Vec<Vec<ApproximationRecord>>) -> Catalog {
    let mut records: Vec<ApproximationRecord> = Vec::new();
    for rec in per_kind.into_iter().flatten() {
        match records.iter_mut().find(|r| r.matrix == rec.matrix) {
            Some(r) => r.provenance.extend(rec.provenance),
            None => records.push(rec),
        }
    }
    // stable: unnamed records keep their discovery order
    records.sort_by_key(catalog_rank);
    link_equivalences(&mut records);
    for r in records.iter_mut().filter(|r| r.is_usable()) {
        r.complexity = fast_transform::build_plan(r).ok().map(|p| p.counts);
    }
    Catalog { records }
}

/// Records that differ only by a positive per-row scaling normalize to the
/// same transform.
fn link_equivalences(records: &mut [ApproximationRecord]) {
    let n = records.len();
    for i in 0..n {
        for j in 0..n {
            if i == j || !records[i].is_usable() || !records[j].is_usable() {
                continue;
            }
            if matrix_lab::row_scaling_between(&records[i].matrix, &records[j].matrix).is_some() {
                let other = records[j].name.clone();
                records[i].equivalent_to.push(other);
            }
        }
    }
}

pub fn sweep_functions(kinds: &[IntFuncKind]) -> Catalog {
    let per_kind: Vec<Vec<ApproximationRecord>> = kinds.par_iter().map(|&k| sweep(k)).collect();
    merge_sweeps(per_kind)
}

pub fn full_catalog() -> Catalog {
    sweep_functions(&IntFuncKind::ALL)
}

//! PSNR, SSIM and absolute percentage error, plus corpus averaging.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::codec::{BlockCodec, CodecOptions, RetentionSpec};
use crate::error::{Error, Result};
use crate::image_io::ImageGray8;
use crate::search::{TransformRef, EXACT_DCT_NAME};

const PEAK: f64 = 255.0;
const WINDOW: usize = 11;
const SIGMA: f64 = 1.5;
const K1: f64 = 0.01;
const K2: f64 = 0.03;

fn same_dims(a: &ImageGray8, b: &ImageGray8) -> Result<()> {
    if a.dims() != b.dims() {
        return Err(Error::SizeMismatch(a.dims(), b.dims()));
    }
    Ok(())
}

/// `10·log10(255²/MSE)`; `f64::INFINITY` for identical images.
pub fn psnr(a: &ImageGray8, b: &ImageGray8) -> Result<f64> {
    same_dims(a, b)?;
    let sse: u64 = a
        .pixels
        .iter()
        .zip(&b.pixels)
        .map(|(&x, &y)| {
            let d = x as i64 - y as i64;
            (d * d) as u64
        })
        .sum();
    if sse == 0 {
        return Ok(f64::INFINITY);
    }
    let mse = sse as f64 / a.pixels.len() as f64;
    Ok(10.0 * (PEAK * PEAK / mse).log10())
}

fn gaussian_window() -> [f64; WINDOW] {
    let c = (WINDOW / 2) as f64;
    let mut w: [f64; WINDOW] = std::array::from_fn(|i| {
        let x = i as f64 - c;
        (-x * x / (2.0 * SIGMA * SIGMA)).exp()
    });
    let s: f64 = w.iter().sum();
    w.iter_mut().for_each(|v| *v /= s);
    w
}

/// Separable 'valid' filtering of a `w×h` plane.
fn filter_valid(src: &[f64], w: usize, h: usize, k: &[f64; WINDOW]) -> Vec<f64> {
    let (ow, oh) = (w + 1 - WINDOW, h + 1 - WINDOW);
    let mut tmp = vec![0.0; ow * h];
    for y in 0..h {
        let row = &src[y * w..(y + 1) * w];
        for x in 0..ow {
            tmp[y * ow + x] = k.iter().zip(&row[x..x + WINDOW]).map(|(a, b)| a * b).sum();
        }
    }
    let mut out = vec![0.0; ow * oh];
    for y in 0..oh {
        for x in 0..ow {
            out[y * ow + x] = (0..WINDOW).map(|i| k[i] * tmp[(y + i) * ow + x]).sum();
        }
    }
    out
}

/// Mean SSIM over all fully-covered 11×11 Gaussian windows.
pub fn ssim(a: &ImageGray8, b: &ImageGray8) -> Result<f64> {
    same_dims(a, b)?;
    let (w, h) = a.dims();
    if w < WINDOW || h < WINDOW {
        return Err(Error::Dimension {
            width: w,
            height: h,
            reason: "SSIM needs at least 11x11 pixels",
        });
    }
    let k = gaussian_window();
    let x: Vec<f64> = a.pixels.iter().map(|&v| v as f64).collect();
    let y: Vec<f64> = b.pixels.iter().map(|&v| v as f64).collect();
    let xx: Vec<f64> = x.iter().map(|v| v * v).collect();
    let yy: Vec<f64> = y.iter().map(|v| v * v).collect();
    let xy: Vec<f64> = x.iter().zip(&y).map(|(p, q)| p * q).collect();
    let planes: Vec<Vec<f64>> = [&x, &y, &xx, &yy, &xy]
        .par_iter()
        .map(|p| filter_valid(p, w, h, &k))
        .collect();
    let (mx, my, sxx, syy, sxy) = (&planes[0], &planes[1], &planes[2], &planes[3], &planes[4]);
    let c1 = (K1 * PEAK).powi(2);
    let c2 = (K2 * PEAK).powi(2);
    let n = mx.len();
    let total: f64 = (0..n)
        .map(|i| {
            let (ux, uy) = (mx[i], my[i]);
            let vx = sxx[i] - ux * ux;
            let vy = syy[i] - uy * uy;
            let cov = sxy[i] - ux * uy;
            ((2.0 * ux * uy + c1) * (2.0 * cov + c2)) / ((ux * ux + uy * uy + c1) * (vx + vy + c2))
        })
        .sum();
    Ok(total / n as f64)
}

/// `100·|value − baseline| / |baseline|`.
pub fn ape(value: f64, baseline: f64) -> Result<f64> {
    if baseline == 0.0 {
        return Err(Error::ZeroBaseline);
    }
    Ok(100.0 * (value - baseline).abs() / baseline.abs())
}

/// `f64` that writes non-finite values as the strings `"inf"`, `"-inf"`, `"nan"`.
mod lenient_f64 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.collect_str(&super::fmt_value(*v))
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Str(s) => match s.as_str() {
                "inf" => Ok(f64::INFINITY),
                "-inf" => Ok(f64::NEG_INFINITY),
                "nan" => Ok(f64::NAN),
                _ => Err(serde::de::Error::custom(format!("bad number `{s}`"))),
            },
        }
    }
}

pub(crate) fn fmt_value(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v == f64::INFINITY {
        "inf".into()
    } else if v == f64::NEG_INFINITY {
        "-inf".into()
    } else {
        format!("{v:.6}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImageQuality {
    pub transform: String,
    pub image: String,
    pub r: usize,
    #[serde(with = "lenient_f64")]
    pub psnr: f64,
    pub ssim: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub transform: String,
    pub r: usize,
    /// Mean over images with finite PSNR; `inf` when none is finite.
    #[serde(with = "lenient_f64")]
    pub psnr: f64,
    pub ssim: f64,
    #[serde(with = "lenient_f64")]
    pub ape_psnr: f64,
    #[serde(with = "lenient_f64")]
    pub ape_ssim: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct QualityReport {
    pub per_image: Vec<ImageQuality>,
    pub curves: Vec<CurvePoint>,
}

pub fn mean_finite(values: impl IntoIterator<Item = f64>) -> f64 {
    let (mut s, mut n) = (0.0, 0usize);
    for v in values.into_iter().filter(|v| v.is_finite()) {
        s += v;
        n += 1;
    }
    if n == 0 {
        f64::INFINITY
    } else {
        s / n as f64
    }
}

/// APE with the infinite-PSNR sentinel handled: equal values give 0,
/// an infinite baseline with a finite value gives `nan`.
fn ape_or_nan(value: f64, baseline: f64) -> f64 {
    if value == baseline {
        return 0.0;
    }
    if !baseline.is_finite() {
        return f64::NAN;
    }
    ape(value, baseline).unwrap_or(f64::NAN)
}

/// Per-image PSNR/SSIM for one transform over every `r`.
pub fn image_curve(
    codec: &BlockCodec,
    name: &str,
    img: &ImageGray8,
    rs: &[usize],
) -> Result<Vec<ImageQuality>> {
    let coeffs = codec.coefficients(img)?;
    rs.iter()
        .map(|&r| {
            let out = codec.reconstruct(&coeffs, img.width, img.height, RetentionSpec::new(r)?)?;
            Ok(ImageQuality {
                transform: codec.name().to_owned(),
                image: name.to_owned(),
                r,
                psnr: psnr(img, &out)?,
                ssim: ssim(img, &out)?,
            })
        })
        .collect()
}

/// Mean PSNR/SSIM per `(transform, r)` and APE against the exact DCT.
///
/// The exact DCT is always evaluated as the baseline; it appears in the
/// output only if it is among `transforms`.
pub fn corpus_curves(
    transforms: &[TransformRef<'_>],
    images: &[(String, ImageGray8)],
    rs: &[usize],
    options: CodecOptions,
) -> Result<QualityReport> {
    if images.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut order: Vec<TransformRef<'_>> = vec![TransformRef::Exact];
    order.extend(transforms.iter().filter(|t| t.name() != EXACT_DCT_NAME));
    let codecs: Vec<BlockCodec> = order
        .iter()
        .map(|&t| BlockCodec::new(t, options))
        .collect::<Result<_>>()?;
    let jobs: Vec<(usize, usize)> = (0..codecs.len())
        .flat_map(|t| (0..images.len()).map(move |i| (t, i)))
        .collect();
    let results: Vec<Vec<ImageQuality>> = jobs
        .par_iter()
        .map(|&(t, i)| image_curve(&codecs[t], &images[i].0, &images[i].1, rs))
        .collect::<Result<_>>()?;

    let mean = |t: usize, k: usize| {
        let rows = &results[t * images.len()..(t + 1) * images.len()];
        (
            mean_finite(rows.iter().map(|v| v[k].psnr)),
            rows.iter().map(|v| v[k].ssim).sum::<f64>() / images.len() as f64,
        )
    };
    let keep_dct = transforms.iter().any(|t| t.name() == EXACT_DCT_NAME);
    let mut report = QualityReport::default();
    for (t, codec) in codecs.iter().enumerate() {
        if t == 0 && !keep_dct {
            continue;
        }
        for (k, &r) in rs.iter().enumerate() {
            let (p, s) = mean(t, k);
            let (bp, bs) = mean(0, k);
            report.curves.push(CurvePoint {
                transform: codec.name().to_owned(),
                r,
                psnr: p,
                ssim: s,
                ape_psnr: ape_or_nan(p, bp),
                ape_ssim: ape_or_nan(s, bs),
            });
        }
        for rows in &results[t * images.len()..(t + 1) * images.len()] {
            report.per_image.extend(rows.iter().cloned());
        }
    }
    Ok(report)
}

impl QualityReport {
    pub fn curves_csv(&self) -> String {
        let mut s = String::from("transform,r,psnr,ssim,ape_psnr,ape_ssim\n");
        for c in &self.curves {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{}",
                c.transform,
                c.r,
                fmt_value(c.psnr),
                fmt_value(c.ssim),
                fmt_value(c.ape_psnr),
                fmt_value(c.ape_ssim)
            );
        }
        s
    }

    pub fn per_image_csv(&self) -> String {
        let mut s = String::from("transform,image,r,psnr,ssim\n");
        for q in &self.per_image {
            let _ = writeln!(
                s,
                "{},{},{},{},{}",
                q.transform,
                q.image,
                q.r,
                fmt_value(q.psnr),
                fmt_value(q.ssim)
            );
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn curve(&self, transform: &str) -> impl Iterator<Item = &CurvePoint> {
        let t = transform.to_owned();
        self.curves.iter().filter(move |c| c.transform == t)
    }
}

/// One qualitative ordering claim checked against corpus means.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trend {
    pub claim: String,
    /// `None` when a transform involved is missing from the report.
    pub holds: Option<bool>,
    /// `r` values where the claim fails.
    pub violations: Vec<usize>,
}

/// Mean PSNR of `leader` is at least that of each of `others` at every `r`.
pub fn dominance(report: &QualityReport, leader: &str, others: &[&str]) -> Trend {
    let claim = format!("{leader} mean PSNR >= {} for all r", others.join(", "));
    let lead: Vec<&CurvePoint> = report.curve(leader).collect();
    if lead.is_empty() || others.iter().any(|o| report.curve(o).next().is_none()) {
        return Trend {
            claim,
            holds: None,
            violations: Vec::new(),
        };
    }
    let mut violations = Vec::new();
    for p in &lead {
        let beaten = others.iter().any(|o| {
            report
                .curve(o)
                .find(|c| c.r == p.r)
                .is_some_and(|c| c.psnr > p.psnr)
        });
        if beaten {
            violations.push(p.r);
        }
    }
    Trend {
        claim,
        holds: Some(violations.is_empty()),
        violations,
    }
}

/// The expected orderings among the catalog transforms.
pub fn trend_report(report: &QualityReport) -> Vec<Trend> {
    let mut names: Vec<&str> = report
        .curves
        .iter()
        .map(|c| c.transform.as_str())
        .filter(|t| *t != EXACT_DCT_NAME)
        .collect();
    names.dedup();
    let without_t7: Vec<&str> = names.iter().copied().filter(|t| *t != "T7").collect();
    vec![
        dominance(report, "T7", &without_t7),
        dominance(report, "T0", &["T1", "T2"]),
        dominance(report, "T4", &["T5", "T6"]),
        dominance(report, EXACT_DCT_NAME, &names),
    ]
}

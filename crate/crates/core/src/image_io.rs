//! 8-bit grayscale images: binary PGM always, PNG behind the `png` feature.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageGray8 {
    pub width: usize,
    pub height: usize,
    /// Row-major.
    pub pixels: Vec<u8>,
}

impl ImageGray8 {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Dimension {
                width,
                height,
                reason: "image must be non-empty",
            });
        }
        if pixels.len() != width * height {
            return Err(Error::Format(format!(
                "{} pixels for a {width}x{height} image",
                pixels.len()
            )));
        }
        Ok(ImageGray8 {
            width,
            height,
            pixels,
        })
    }

    pub fn filled(width: usize, height: usize, v: u8) -> Self {
        ImageGray8 {
            width,
            height,
            pixels: vec![v; width * height],
        }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        ImageGray8 {
            width,
            height,
            pixels,
        }
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn check_blockable(&self) -> Result<()> {
        if !self.width.is_multiple_of(8) || !self.height.is_multiple_of(8) {
            return Err(Error::Dimension {
                width: self.width,
                height: self.height,
                reason: "width and height must be multiples of 8",
            });
        }
        Ok(())
    }
}

fn skip_ws_and_comments(data: &[u8], pos: &mut usize) {
    while *pos < data.len() {
        match data[*pos] {
            b'#' => {
                while *pos < data.len() && data[*pos] != b'\n' {
                    *pos += 1;
                }
            }
            c if c.is_ascii_whitespace() => *pos += 1,
            _ => break,
        }
    }
}

fn header_number(data: &[u8], pos: &mut usize) -> Result<usize> {
    skip_ws_and_comments(data, pos);
    let start = *pos;
    while *pos < data.len() && data[*pos].is_ascii_digit() {
        *pos += 1;
    }
    std::str::from_utf8(&data[start..*pos])
        .ok()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Format("malformed PGM header".into()))
}

pub fn decode_pgm(data: &[u8]) -> Result<ImageGray8> {
    if !data.starts_with(b"P5") {
        return Err(Error::Format("not a binary PGM (P5) file".into()));
    }
    let mut pos = 2;
    let width = header_number(data, &mut pos)?;
    let height = header_number(data, &mut pos)?;
    let maxval = header_number(data, &mut pos)?;
    if maxval == 0 || maxval > 255 {
        return Err(Error::Format(format!("unsupported PGM maxval {maxval}")));
    }
    // exactly one whitespace byte before the raster
    if pos >= data.len() || !data[pos].is_ascii_whitespace() {
        return Err(Error::Format("malformed PGM header".into()));
    }
    pos += 1;
    let n = width * height;
    let raster = data
        .get(pos..pos + n)
        .ok_or_else(|| Error::Format("truncated PGM raster".into()))?;
    let pixels = if maxval == 255 {
        raster.to_vec()
    } else {
        raster
            .iter()
            .map(|&v| ((v as usize * 255 + maxval / 2) / maxval).min(255) as u8)
            .collect()
    };
    ImageGray8::new(width, height, pixels)
}

pub fn encode_pgm(img: &ImageGray8) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width, img.height).into_bytes();
    out.extend_from_slice(&img.pixels);
    out
}

#[cfg(feature = "png")]
fn decode_png(data: &[u8]) -> Result<ImageGray8> {
    let img = image::load_from_memory_with_format(data, image::ImageFormat::Png)
        .map_err(|e| Error::Format(e.to_string()))?
        .into_luma8();
    let (w, h) = img.dimensions();
    ImageGray8::new(w as usize, h as usize, img.into_raw())
}

#[cfg(not(feature = "png"))]
fn decode_png(_: &[u8]) -> Result<ImageGray8> {
    Err(Error::Format("PNG support not compiled in".into()))
}

/// Reads a P5 PGM or a PNG file, chosen by magic bytes.
pub fn read_image(path: &Path) -> Result<ImageGray8> {
    let data = fs::read(path).map_err(|e| Error::io(path, e))?;
    if data.starts_with(b"\x89PNG") {
        decode_png(&data)
    } else {
        decode_pgm(&data)
    }
}

pub fn write_pgm(img: &ImageGray8, path: &Path) -> Result<()> {
    let mut f = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    f.write_all(&encode_pgm(img)).map_err(|e| Error::io(path, e))
}

/// Image files (`.pgm`, `.png`) in `dir`, sorted by file name.
pub fn list_images(dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let p = entry.map_err(|e| Error::io(dir, e))?.path();
        let ext = p
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase);
        if matches!(ext.as_deref(), Some("pgm" | "png")) {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

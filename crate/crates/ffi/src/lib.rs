//! C interface to `dctlab`.
//!
//! All objects are opaque handles created by a `*_new`/`*_build`/`*_load`
//! function and released by the matching `*_free`. Every fallible call
//! returns a [`DctlabStatus`]; on failure a message is available from
//! [`dctlab_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::ptr;

use dctlab::catalog_store;
use dctlab::codec::{BlockCodec, CodecOptions, RetentionSpec};
use dctlab::fast_transform::{self, TransformPlan};
use dctlab::image_io::ImageGray8;
use dctlab::search::{self, Catalog};
use dctlab::{metrics, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DctlabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    UnknownTransform = 3,
    Unsupported = 4,
    Io = 5,
    Format = 6,
    Verification = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

/// A catalog of approximation records.
pub struct DctlabCatalog {
    inner: Catalog,
}

/// A fast-algorithm schedule for one transform.
pub struct DctlabPlan {
    inner: TransformPlan,
}

/// A configured block codec.
pub struct DctlabCodec {
    inner: BlockCodec,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(e: &Error) -> DctlabStatus {
    match e {
        Error::Io { .. } => DctlabStatus::Io,
        Error::Format(_) | Error::Schema(_) => DctlabStatus::Format,
        Error::InvariantMismatch { .. } => DctlabStatus::Verification,
        Error::UnknownTransform(_) => DctlabStatus::UnknownTransform,
        Error::UnsupportedTransform(_) | Error::UnsupportedCodec(_) => DctlabStatus::Unsupported,
        _ => DctlabStatus::InvalidArgument,
    }
}

fn fail(status: DctlabStatus, msg: impl Into<String>) -> DctlabStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> DctlabStatus {
    let s = status_of(&e);
    fail(s, e.to_string())
}

fn guard(f: impl FnOnce() -> DctlabStatus) -> DctlabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == DctlabStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => fail(DctlabStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, DctlabStatus> {
    if p.is_null() {
        return Err(fail(DctlabStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(DctlabStatus::InvalidArgument, "string is not UTF-8"))
}

macro_rules! nonnull {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(DctlabStatus::NullPointer, concat!("`", stringify!($p), "` is null"));
        })+
    };
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Copies `s` plus a terminating NUL into `buf`. Returns the bytes required
/// including the NUL, whether or not they fit.
unsafe fn copy_out(s: &str, buf: *mut c_char, len: usize) -> usize {
    let need = s.len() + 1;
    if !buf.is_null() && len > 0 {
        let n = s.len().min(len - 1);
        ptr::copy_nonoverlapping(s.as_ptr().cast::<c_char>(), buf, n);
        *buf.add(n) = 0;
    }
    need
}

/// NUL-terminated library version. Static storage; do not free.
#[no_mangle]
pub extern "C" fn dctlab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Writes the calling thread's last error message into `buf` (truncated to
/// `len` bytes including the NUL) and returns the full length needed.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn dctlab_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| copy_out(&e.borrow(), buf, len))
}

/// Runs the full search over all integer functions.
///
/// # Safety
/// `out` must be valid for writing one pointer.
#[no_mangle]
pub unsafe extern "C" fn dctlab_catalog_build(out: *mut *mut DctlabCatalog) -> DctlabStatus {
    guard(|| {
        nonnull!(out);
        let c = Box::new(DctlabCatalog {
            inner: search::full_catalog(),
        });
        *out = Box::into_raw(c);
        DctlabStatus::Ok
    })
}

/// Loads and verifies a catalog JSON file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` valid for one pointer.
#[no_mangle]
pub unsafe extern "C" fn dctlab_catalog_load(path: *const c_char, out: *mut *mut DctlabCatalog) -> DctlabStatus {
    guard(|| {
        nonnull!(out);
        let p = tri!(str_arg(path));
        match catalog_store::load_catalog(&PathBuf::from(p)) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(DctlabCatalog { inner: f.catalog() }));
                DctlabStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Writes the catalog as JSON (atomically).
///
/// # Safety
/// `cat` must come from this library; `path` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn dctlab_catalog_save(cat: *const DctlabCatalog, path: *const c_char) -> DctlabStatus {
    guard(|| {
        nonnull!(cat);
        let p = tri!(str_arg(path));
        match catalog_store::save_catalog(&(&*cat).inner, &PathBuf::from(p)) {
            Ok(_) => DctlabStatus::Ok,
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `cat` must be null or come from this library, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dctlab_catalog_free(cat: *mut DctlabCatalog) {
    if !cat.is_null() {
        drop(Box::from_raw(cat));
    }
}

/// Number of records; 0 for a null handle.
///
/// # Safety
/// `cat` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn dctlab_catalog_len(cat: *const DctlabCatalog) -> usize {
    if cat.is_null() {
        0
    } else {
        (&*cat).inner.records.len()
    }
}

/// Copies the name of record `index` into `buf`; `*needed` receives the
/// length including the NUL.
///
/// # Safety
/// `cat` from this library; `buf` null or valid for `len` bytes; `needed` null or valid.
#[no_mangle]
pub unsafe extern "C" fn dctlab_catalog_record_name(
    cat: *const DctlabCatalog,
    index: usize,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> DctlabStatus {
    guard(|| {
        nonnull!(cat);
        let Some(r) = (&*cat).inner.records.get(index) else {
            return fail(DctlabStatus::InvalidArgument, format!("record index {index} out of range"));
        };
        let n = copy_out(&r.name, buf, len);
        if !needed.is_null() {
            *needed = n;
        }
        if n > len {
            return fail(DctlabStatus::BufferTooSmall, "name buffer too small");
        }
        DctlabStatus::Ok
    })
}

unsafe fn record<'a>(cat: *const DctlabCatalog, name: *const c_char) -> Result<&'a search::ApproximationRecord, DctlabStatus> {
    let n = str_arg(name)?;
    (*cat)
        .inner
        .get(n)
        .ok_or_else(|| fail(DctlabStatus::UnknownTransform, format!("unknown transform `{n}`")))
}

/// Writes the integer matrix of `name` (row-major, 64 values) and its
/// classification code (0 orthogonal, 1 near-orthogonal, 2 degenerate, 3 rejected).
///
/// # Safety
/// `cat` from this library; `name` NUL-terminated; `matrix` valid for 64
/// values; `classification` null or valid.
#[no_mangle]
pub unsafe extern "C" fn dctlab_catalog_matrix(
    cat: *const DctlabCatalog,
    name: *const c_char,
    matrix: *mut i64,
    classification: *mut i32,
) -> DctlabStatus {
    guard(|| {
        nonnull!(cat, matrix);
        let r = tri!(record(cat, name));
        for (k, v) in r.matrix.entries().iter().flatten().enumerate() {
            *matrix.add(k) = *v;
        }
        if !classification.is_null() {
            *classification = r.classification as i32;
        }
        DctlabStatus::Ok
    })
}

/// Deviation from diagonality of `T·Tᵀ` for `name`.
///
/// # Safety
/// `cat` from this library; `name` NUL-terminated; `delta` valid.
#[no_mangle]
pub unsafe extern "C" fn dctlab_catalog_delta(
    cat: *const DctlabCatalog,
    name: *const c_char,
    delta: *mut f64,
) -> DctlabStatus {
    guard(|| {
        nonnull!(cat, delta);
        *delta = tri!(record(cat, name)).delta;
        DctlabStatus::Ok
    })
}

/// Builds the multiplierless schedule for a catalog transform.
///
/// # Safety
/// `cat` from this library; `name` NUL-terminated; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn dctlab_plan_new(
    cat: *const DctlabCatalog,
    name: *const c_char,
    out: *mut *mut DctlabPlan,
) -> DctlabStatus {
    guard(|| {
        nonnull!(cat, out);
        let r = tri!(record(cat, name));
        match fast_transform::build_plan(r) {
            Ok(p) => {
                *out = Box::into_raw(Box::new(DctlabPlan { inner: p }));
                DctlabStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// `output = T·input` for 8 integers.
///
/// # Safety
/// `plan` from this library; `input` and `output` valid for 8 values.
#[no_mangle]
pub unsafe extern "C" fn dctlab_plan_apply(plan: *const DctlabPlan, input: *const i64, output: *mut i64) -> DctlabStatus {
    guard(|| {
        nonnull!(plan, input, output);
        let x: [i64; 8] = std::array::from_fn(|i| *input.add(i));
        let y = fast_transform::apply_plan(&(&*plan).inner, &x);
        ptr::copy_nonoverlapping(y.as_ptr(), output, 8);
        DctlabStatus::Ok
    })
}

/// # Safety
/// `plan` from this library; each output pointer null or valid.
#[no_mangle]
pub unsafe extern "C" fn dctlab_plan_counts(
    plan: *const DctlabPlan,
    multiplications: *mut u32,
    additions: *mut u32,
    shifts: *mut u32,
) -> DctlabStatus {
    guard(|| {
        nonnull!(plan);
        let c = (&*plan).inner.counts;
        for (p, v) in [(multiplications, c.multiplications), (additions, c.additions), (shifts, c.shifts)] {
            if !p.is_null() {
                *p = v;
            }
        }
        DctlabStatus::Ok
    })
}

/// # Safety
/// `plan` must be null or come from this library, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dctlab_plan_free(plan: *mut DctlabPlan) {
    if !plan.is_null() {
        drop(Box::from_raw(plan));
    }
}

/// Creates a codec for `name` (a catalog name, an alias or `DCT`).
///
/// # Safety
/// `cat` from this library; `name` NUL-terminated; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn dctlab_codec_new(
    cat: *const DctlabCatalog,
    name: *const c_char,
    scale_before_retention: bool,
    out: *mut *mut DctlabCodec,
) -> DctlabStatus {
    guard(|| {
        nonnull!(cat, out);
        let n = tri!(str_arg(name));
        let Some(t) = (&*cat).inner.resolve(n) else {
            return fail(DctlabStatus::UnknownTransform, format!("unknown transform `{n}`"));
        };
        let opts = CodecOptions {
            scale_before_retention,
            ..CodecOptions::default()
        };
        match BlockCodec::new(t, opts) {
            Ok(c) => {
                *out = Box::into_raw(Box::new(DctlabCodec { inner: c }));
                DctlabStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

unsafe fn image(width: usize, height: usize, px: *const u8) -> Result<ImageGray8, DctlabStatus> {
    let n = width.checked_mul(height).ok_or_else(|| fail(DctlabStatus::InvalidArgument, "image too large"))?;
    let data = std::slice::from_raw_parts(px, n).to_vec();
    ImageGray8::new(width, height, data).map_err(from_error)
}

/// Compresses a row-major 8-bit image keeping `r` zigzag coefficients per
/// block and writes the reconstruction to `output`.
///
/// # Safety
/// `codec` from this library; `input` and `output` valid for `width*height` bytes.
#[no_mangle]
pub unsafe extern "C" fn dctlab_codec_compress(
    codec: *const DctlabCodec,
    width: usize,
    height: usize,
    input: *const u8,
    r: usize,
    output: *mut u8,
) -> DctlabStatus {
    guard(|| {
        nonnull!(codec, input, output);
        let img = tri!(image(width, height, input));
        let spec = tri!(RetentionSpec::new(r).map_err(from_error));
        match (&*codec).inner.compress(&img, spec) {
            Ok(out) => {
                ptr::copy_nonoverlapping(out.pixels.as_ptr(), output, out.pixels.len());
                DctlabStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `codec` must be null or come from this library, and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dctlab_codec_free(codec: *mut DctlabCodec) {
    if !codec.is_null() {
        drop(Box::from_raw(codec));
    }
}

/// PSNR in dB of two equally sized images; `+inf` when identical.
///
/// # Safety
/// `a`, `b` valid for `width*height` bytes; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn dctlab_psnr(width: usize, height: usize, a: *const u8, b: *const u8, out: *mut f64) -> DctlabStatus {
    guard(|| {
        nonnull!(a, b, out);
        let (x, y) = (tri!(image(width, height, a)), tri!(image(width, height, b)));
        match metrics::psnr(&x, &y) {
            Ok(v) => {
                *out = v;
                DctlabStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Mean SSIM (11×11 Gaussian window, σ = 1.5).
///
/// # Safety
/// `a`, `b` valid for `width*height` bytes; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn dctlab_ssim(width: usize, height: usize, a: *const u8, b: *const u8, out: *mut f64) -> DctlabStatus {
    guard(|| {
        nonnull!(a, b, out);
        let (x, y) = (tri!(image(width, height, a)), tri!(image(width, height, b)));
        match metrics::ssim(&x, &y) {
            Ok(v) => {
                *out = v;
                DctlabStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

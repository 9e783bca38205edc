use std::ffi::{CStr, CString};
use std::path::Path;
use std::ptr;

use dctlab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let mut buf = vec![0 as std::ffi::c_char; 256];
    unsafe {
        dctlab_last_error_message(buf.as_mut_ptr(), buf.len());
        CStr::from_ptr(buf.as_ptr()).to_string_lossy().into_owned()
    }
}

struct Catalog(*mut DctlabCatalog);

impl Catalog {
    fn build() -> Self {
        let mut p = ptr::null_mut();
        assert_eq!(unsafe { dctlab_catalog_build(&mut p) }, DctlabStatus::Ok);
        assert!(!p.is_null());
        Catalog(p)
    }
}

impl Drop for Catalog {
    fn drop(&mut self) {
        unsafe { dctlab_catalog_free(self.0) }
    }
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(dctlab_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn catalog_queries() {
    let cat = Catalog::build();
    let n = unsafe { dctlab_catalog_len(cat.0) };
    assert_eq!(n, 27);

    let mut buf = [0 as std::ffi::c_char; 16];
    let mut needed = 0;
    let st = unsafe { dctlab_catalog_record_name(cat.0, 0, buf.as_mut_ptr(), buf.len(), &mut needed) };
    assert_eq!(st, DctlabStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(), "T0");
    assert_eq!(needed, 3);

    let mut tiny = [0 as std::ffi::c_char; 2];
    let st = unsafe { dctlab_catalog_record_name(cat.0, 0, tiny.as_mut_ptr(), tiny.len(), &mut needed) };
    assert_eq!(st, DctlabStatus::BufferTooSmall);
    assert_eq!(needed, 3);
    let st = unsafe { dctlab_catalog_record_name(cat.0, n, buf.as_mut_ptr(), buf.len(), ptr::null_mut()) };
    assert_eq!(st, DctlabStatus::InvalidArgument);

    let mut m = [0i64; 64];
    let mut class = -1;
    let st = unsafe { dctlab_catalog_matrix(cat.0, c("T4").as_ptr(), m.as_mut_ptr(), &mut class) };
    assert_eq!(st, DctlabStatus::Ok);
    assert_eq!(class, 0);
    assert_eq!(m[8..16], [1, 1, 1, 0, 0, -1, -1, -1]);

    let st = unsafe { dctlab_catalog_matrix(cat.0, c("SDCT").as_ptr(), m.as_mut_ptr(), &mut class) };
    assert_eq!(st, DctlabStatus::Ok);
    assert_eq!(class, 1);

    let mut delta = 0.0;
    let st = unsafe { dctlab_catalog_delta(cat.0, c("T~0").as_ptr(), &mut delta) };
    assert_eq!(st, DctlabStatus::Ok);
    assert!((delta - 0.4548).abs() < 5e-5);

    let st = unsafe { dctlab_catalog_delta(cat.0, c("nope").as_ptr(), &mut delta) };
    assert_eq!(st, DctlabStatus::UnknownTransform);
    assert!(last_error().contains("nope"));
}

#[test]
fn plans_match_published_counts() {
    let cat = Catalog::build();
    let mut plan = ptr::null_mut();
    assert_eq!(unsafe { dctlab_plan_new(cat.0, c("T7").as_ptr(), &mut plan) }, DctlabStatus::Ok);
    let (mut mul, mut add, mut shl) = (9, 0, 0);
    assert_eq!(unsafe { dctlab_plan_counts(plan, &mut mul, &mut add, &mut shl) }, DctlabStatus::Ok);
    assert_eq!((mul, add, shl), (0, 32, 12));

    let mut m = [0i64; 64];
    unsafe { dctlab_catalog_matrix(cat.0, c("T7").as_ptr(), m.as_mut_ptr(), ptr::null_mut()) };
    let x = [3i64, -1, 4, -1, 5, -9, 2, -6];
    let mut y = [0i64; 8];
    assert_eq!(unsafe { dctlab_plan_apply(plan, x.as_ptr(), y.as_mut_ptr()) }, DctlabStatus::Ok);
    for i in 0..8 {
        let want: i64 = (0..8).map(|j| m[i * 8 + j] * x[j]).sum();
        assert_eq!(y[i], want);
    }
    unsafe { dctlab_plan_free(plan) };

    // degenerate records have no factorization constants
    let mut plan = ptr::null_mut();
    let st = unsafe { dctlab_plan_new(cat.0, c("Tv0").as_ptr(), &mut plan) };
    assert_eq!(st, DctlabStatus::Unsupported);
    assert!(plan.is_null());
}

#[test]
fn codec_and_metrics() {
    let cat = Catalog::build();
    let (w, h) = (16usize, 16usize);
    let img: Vec<u8> = (0..w * h).map(|k| ((k * 37) % 251) as u8).collect();
    let mut out = vec![0u8; w * h];

    let mut codec = ptr::null_mut();
    assert_eq!(unsafe { dctlab_codec_new(cat.0, c("T0").as_ptr(), true, &mut codec) }, DctlabStatus::Ok);
    let st = unsafe { dctlab_codec_compress(codec, w, h, img.as_ptr(), 64, out.as_mut_ptr()) };
    assert_eq!(st, DctlabStatus::Ok);
    assert_eq!(out, img);

    let mut p = 0.0;
    assert_eq!(unsafe { dctlab_psnr(w, h, img.as_ptr(), out.as_ptr(), &mut p) }, DctlabStatus::Ok);
    assert_eq!(p, f64::INFINITY);

    let st = unsafe { dctlab_codec_compress(codec, w, h, img.as_ptr(), 6, out.as_mut_ptr()) };
    assert_eq!(st, DctlabStatus::Ok);
    let mut s = 0.0;
    assert_eq!(unsafe { dctlab_psnr(w, h, img.as_ptr(), out.as_ptr(), &mut p) }, DctlabStatus::Ok);
    assert_eq!(unsafe { dctlab_ssim(w, h, img.as_ptr(), out.as_ptr(), &mut s) }, DctlabStatus::Ok);
    assert!(p.is_finite() && p > 5.0);
    assert!(s < 1.0);

    assert_eq!(
        unsafe { dctlab_codec_compress(codec, w, h, img.as_ptr(), 0, out.as_mut_ptr()) },
        DctlabStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { dctlab_codec_compress(codec, 12, 16, img.as_ptr(), 4, out.as_mut_ptr()) },
        DctlabStatus::InvalidArgument
    );
    unsafe { dctlab_codec_free(codec) };

    let mut codec = ptr::null_mut();
    assert_eq!(unsafe { dctlab_codec_new(cat.0, c("DCT").as_ptr(), false, &mut codec) }, DctlabStatus::Ok);
    unsafe { dctlab_codec_free(codec) };
    let mut codec = ptr::null_mut();
    assert_eq!(unsafe { dctlab_codec_new(cat.0, c("T~0").as_ptr(), true, &mut codec) }, DctlabStatus::Unsupported);
}

#[test]
fn null_pointers_are_reported() {
    assert_eq!(unsafe { dctlab_catalog_build(ptr::null_mut()) }, DctlabStatus::NullPointer);
    assert_eq!(unsafe { dctlab_catalog_len(ptr::null()) }, 0);
    let mut d = 0.0;
    assert_eq!(unsafe { dctlab_catalog_delta(ptr::null(), c("T0").as_ptr(), &mut d) }, DctlabStatus::NullPointer);
    assert_eq!(
        unsafe { dctlab_psnr(8, 8, ptr::null(), ptr::null(), &mut d) },
        DctlabStatus::NullPointer
    );
    unsafe {
        dctlab_catalog_free(ptr::null_mut());
        dctlab_plan_free(ptr::null_mut());
        dctlab_codec_free(ptr::null_mut());
    }
    // message buffer may be null: only the length is returned
    assert!(unsafe { dctlab_last_error_message(ptr::null_mut(), 0) } > 0);
}

#[test]
fn save_and_load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = c(dir.path().join("cat.json").to_str().unwrap());
    let cat = Catalog::build();
    assert_eq!(unsafe { dctlab_catalog_save(cat.0, path.as_ptr()) }, DctlabStatus::Ok);

    let mut loaded = ptr::null_mut();
    assert_eq!(unsafe { dctlab_catalog_load(path.as_ptr(), &mut loaded) }, DctlabStatus::Ok);
    let loaded = Catalog(loaded);
    assert_eq!(unsafe { dctlab_catalog_len(loaded.0) }, 27);

    let missing = c(dir.path().join("none.json").to_str().unwrap());
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { dctlab_catalog_load(missing.as_ptr(), &mut p) }, DctlabStatus::Io);

    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "[]").unwrap();
    let junk = c(junk.to_str().unwrap());
    assert_eq!(unsafe { dctlab_catalog_load(junk.as_ptr(), &mut p) }, DctlabStatus::Format);
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/dctlab.h")).unwrap();
    for f in [
        "dctlab_version",
        "dctlab_last_error_message",
        "dctlab_catalog_build",
        "dctlab_catalog_load",
        "dctlab_catalog_save",
        "dctlab_catalog_free",
        "dctlab_catalog_len",
        "dctlab_catalog_record_name",
        "dctlab_catalog_matrix",
        "dctlab_catalog_delta",
        "dctlab_plan_new",
        "dctlab_plan_apply",
        "dctlab_plan_counts",
        "dctlab_plan_free",
        "dctlab_codec_new",
        "dctlab_codec_compress",
        "dctlab_codec_free",
        "dctlab_psnr",
        "dctlab_ssim",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(header.contains("typedef struct DctlabCatalog DctlabCatalog;"));
    assert!(header.contains("DCTLAB_STATUS_BUFFER_TOO_SMALL = 8"));
}

#[test]
fn header_compiles_as_c() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("probe.c");
    std::fs::write(
        &src,
        "#include \"dctlab.h\"\nint main(void) { DctlabCatalog *c = 0; return dctlab_catalog_build(&c) == DCTLAB_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&include)
        .arg(&src)
        .status();
    match status {
        Ok(s) => assert!(s.success(), "header does not compile"),
        Err(_) => eprintln!("no C compiler found; skipping"),
    }
}

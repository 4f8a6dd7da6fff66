use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use qchar_ffi::*;

fn parse(s: &str) -> *mut QcDrinfeld {
    let c = CString::new(s).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qc_drinfeld_parse(c.as_ptr(), &mut out) }, QcStatus::Ok);
    out
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { qc_string_free(p) };
    s
}

fn last_error() -> String {
    let p = qc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn worked_example_through_the_abi() {
    let (pi, pt) = (parse("0:1,1:3"), parse("1:2"));
    let mut m = QcMultiplicity { closed_applicable: false, closed: 0, oracle: 0, verdict: QcVerdict::Disagree };
    assert_eq!(unsafe { qc_multiplicity(pi, pt, &mut m) }, QcStatus::Ok);
    assert_eq!(m, QcMultiplicity { closed_applicable: true, closed: 1, oracle: 1, verdict: QcVerdict::Agree });
    assert!(qc_last_error_message().is_null());
    unsafe {
        qc_drinfeld_free(pi);
        qc_drinfeld_free(pt);
    }
}

#[test]
fn not_applicable_verdict() {
    let pi = parse("0:1,1:1");
    let mut m = QcMultiplicity { closed_applicable: true, closed: 9, oracle: 0, verdict: QcVerdict::Agree };
    assert_eq!(unsafe { qc_multiplicity(pi, pi, &mut m) }, QcStatus::Ok);
    assert!(!m.closed_applicable);
    assert_eq!((m.oracle, m.verdict), (1, QcVerdict::NotApplicable));
    unsafe { qc_drinfeld_free(pi) };
}

#[test]
fn characters_and_rendering() {
    let mut ch = ptr::null_mut();
    assert_eq!(unsafe { qc_kr_character(2, 0, &mut ch) }, QcStatus::Ok);
    assert_eq!(unsafe { qc_poly_num_terms(ch) }, 3);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { qc_poly_to_string(ch, &mut s) }, QcStatus::Ok);
    assert_eq!(take_string(s), "Y[0]*Y[1] + Y[0]*Y[2]^-1 + Y[1]^-1*Y[2]^-1");
    unsafe { qc_poly_free(ch) };

    let pi = parse("0:1,1:1");
    let mut simple = ptr::null_mut();
    assert_eq!(unsafe { qc_simple_character(pi, &mut simple) }, QcStatus::Ok);
    let mut dim = 0i64;
    assert_eq!(unsafe { qc_poly_dimension(simple, &mut dim) }, QcStatus::Ok);
    assert_eq!(dim, 3);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { qc_poly_to_json(simple, &mut json) }, QcStatus::Ok);
    let back: qchar::polyring::LaurentPoly = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(back.dimension(), 3);

    let mut row = ptr::null_mut();
    assert_eq!(unsafe { qc_decomposition_row_json(pi, &mut row) }, QcStatus::Ok);
    assert_eq!(
        take_string(row),
        r#"[{"simple":{"zeros":{}},"mult":1},{"simple":{"zeros":{"0":1,"1":1}},"mult":1}]"#
    );
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { qc_drinfeld_to_string(pi, &mut text) }, QcStatus::Ok);
    assert_eq!(take_string(text), "0:1,1:1");
    assert_eq!(unsafe { qc_drinfeld_total(pi) }, 2);
    unsafe {
        qc_poly_free(simple);
        qc_drinfeld_free(pi);
    }
}

#[test]
fn stalks_and_binomials() {
    let (w, r, k) = ([1u64, 2, 1], [1u64, 1], [1u64, 1]);
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { qc_ic_stalk(w.as_ptr(), 3, r.as_ptr(), k.as_ptr(), &mut p) }, QcStatus::Ok);
    let coeffs: Vec<i64> = (0..unsafe { qc_tpoly_len(p) }).map(|i| unsafe { qc_tpoly_coeff(p, i) }).collect();
    assert_eq!(coeffs, [1, 1]);
    unsafe { qc_tpoly_free(p) };

    let mut g = ptr::null_mut();
    assert_eq!(unsafe { qc_gauss_binom(4, 2, &mut g) }, QcStatus::Ok);
    let coeffs: Vec<i64> = (0..unsafe { qc_tpoly_len(g) }).map(|i| unsafe { qc_tpoly_coeff(g, i) }).collect();
    assert_eq!(coeffs, [1, 1, 2, 1, 1]);
    unsafe { qc_tpoly_free(g) };

    // single vertex: r and k are empty and may be null
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { qc_ic_stalk([2u64].as_ptr(), 1, ptr::null(), ptr::null(), &mut p) }, QcStatus::Ok);
    assert_eq!(unsafe { qc_tpoly_len(p) }, 1);
    unsafe { qc_tpoly_free(p) };
}

#[test]
fn error_codes() {
    let bad = CString::new("0:1,x").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { qc_drinfeld_parse(bad.as_ptr(), &mut out) }, QcStatus::Parse);
    assert!(out.is_null());
    assert!(last_error().contains("byte 4"), "{}", last_error());

    assert_eq!(unsafe { qc_drinfeld_parse(ptr::null(), &mut out) }, QcStatus::NullPointer);
    assert_eq!(unsafe { qc_kr_character(0, 0, ptr::null_mut()) }, QcStatus::NullPointer);

    let (w, r, k) = ([1u64, 1], [1u64], [2u64]);
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { qc_ic_stalk(w.as_ptr(), 2, r.as_ptr(), k.as_ptr(), &mut p) }, QcStatus::InvalidArgument);
    assert!(last_error().contains("exceeds"));

    // non-sparse stratum: w = (1, 1), r = (0) has Omega = {0, 1}
    let (r, k) = ([0u64], [0u64]);
    assert_eq!(unsafe { qc_ic_stalk(w.as_ptr(), 2, r.as_ptr(), k.as_ptr(), &mut p) }, QcStatus::NotSparse);

    let big = parse("0:11");
    let mut row = ptr::null_mut();
    assert_eq!(unsafe { qc_decomposition_row_json(big, &mut row) }, QcStatus::CapExceeded);
    unsafe { qc_drinfeld_free(big) };

    // null handles are tolerated by the infallible accessors
    assert_eq!(unsafe { qc_poly_num_terms(ptr::null()) }, 0);
    unsafe { qc_poly_free(ptr::null_mut()) };
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/qchar.h")).unwrap();
    for name in ["qc_drinfeld_parse", "qc_multiplicity", "qc_ic_stalk", "QC_STATUS_NOT_SPARSE", "typedef struct QcPoly QcPoly"] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compiles a C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    // target/<profile>/deps/capi-... -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libqchar_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let bin = std::env::temp_dir().join(format!("qchar_smoke_{}", std::process::id()));
    let status = Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&bin).env_remove("QCHAR_SWEEP_CAP").output().unwrap();
    let _ = std::fs::remove_file(&bin);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}

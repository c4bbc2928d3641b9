use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use qhl_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    qhl_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let e = qhl_last_error();
    assert!(!e.is_null());
    CStr::from_ptr(e).to_str().unwrap().to_owned()
}

#[test]
fn matrix_handles() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(qhl_matrix_new(3, c("S").as_ptr(), c("L").as_ptr(), &mut m), QhlStatus::Ok);
        assert!(qhl_last_error().is_null());
        let mut size = 0;
        assert_eq!(qhl_matrix_size(m, &mut size), QhlStatus::Ok);
        assert_eq!(size, 4);

        let mut label = ptr::null_mut();
        assert_eq!(qhl_matrix_label(m, 1, &mut label), QhlStatus::Ok);
        assert_eq!(take(label), "2.1");

        let mut p = ptr::null_mut();
        assert_eq!(qhl_matrix_entry(m, 1, 3, &mut p), QhlStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(qhl_poly_to_json(p, &mut s), QhlStatus::Ok);
        assert_eq!(take(s), r#"{"minexp":0,"coeffs":["2","1"]}"#);
        qhl_poly_free(p);

        assert_eq!(qhl_matrix_entry(m, 4, 0, &mut p), QhlStatus::OutOfRange);
        assert!(last_error().contains("(4, 0)"));

        let mut j = ptr::null_mut();
        assert_eq!(qhl_matrix_to_json(m, &mut j), QhlStatus::Ok);
        let text = take(j);
        assert!(text.starts_with('{') && text.contains("\"order\""));
        qhl_matrix_free(m);
        qhl_matrix_free(ptr::null_mut());
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(qhl_matrix_new(3, c("L").as_ptr(), c("S").as_ptr(), &mut m), QhlStatus::Unsupported);
        assert_eq!(qhl_matrix_new(3, c("X").as_ptr(), c("S").as_ptr(), &mut m), QhlStatus::InvalidInput);
        assert_eq!(qhl_matrix_new(40, c("S").as_ptr(), c("L").as_ptr(), &mut m), QhlStatus::OutOfRange);
        assert_eq!(qhl_matrix_new(3, ptr::null(), c("S").as_ptr(), &mut m), QhlStatus::NullPointer);
        assert_eq!(qhl_matrix_new(3, c("S").as_ptr(), c("L").as_ptr(), ptr::null_mut()), QhlStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(
            qhl_matrix_new(3, bad.as_ptr() as *const c_char, c("L").as_ptr(), &mut m),
            QhlStatus::InvalidUtf8
        );
        assert!(m.is_null());
        let mut size = 0;
        assert_eq!(qhl_matrix_size(ptr::null(), &mut size), QhlStatus::NullPointer);
    }
}

#[test]
fn polynomials() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(qhl_pt(b'B' as c_char, c("1.2.0").as_ptr(), &mut a), QhlStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(qhl_poly_to_string(a, &mut s), QhlStatus::Ok);
        assert_eq!(take(s), "6+10q+8q^2+4q^3+q^4");

        let mut b = ptr::null_mut();
        let text = c(r#"{"minexp":0,"coeffs":["6","10","8","4","1"]}"#);
        assert_eq!(qhl_poly_from_json(text.as_ptr(), &mut b), QhlStatus::Ok);
        let mut eq = -1;
        assert_eq!(qhl_poly_equal(a, b, &mut eq), QhlStatus::Ok);
        assert_eq!(eq, 1);
        assert_eq!(qhl_poly_eval_at_one(b, &mut s), QhlStatus::Ok);
        assert_eq!(take(s), "29");
        qhl_poly_free(a);
        qhl_poly_free(b);

        assert_eq!(qhl_pt(b'C' as c_char, c("1").as_ptr(), &mut a), QhlStatus::InvalidInput);
        assert_eq!(qhl_pt(b'A' as c_char, c("3.0.1").as_ptr(), &mut a), QhlStatus::InvalidInput);
        assert_eq!(qhl_poly_from_json(c("{").as_ptr(), &mut a), QhlStatus::InvalidInput);
    }
}

#[test]
fn reports() {
    unsafe {
        let mut s = ptr::null_mut();
        let st = qhl_pasep_report(2, c("1").as_ptr(), c("exact").as_ptr(), ptr::null(), 1, 0, &mut s);
        assert_eq!(st, QhlStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["exact_match"], true);
        assert_eq!(v["states"][1]["solver"], "1/2");

        let st = qhl_pasep_report(3, c("1").as_ptr(), c("formula").as_ptr(), c("110").as_ptr(), 1, 0, &mut s);
        assert_eq!(st, QhlStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["states"][0]["formula"], "7/24");

        let st = qhl_pasep_report(3, c("1").as_ptr(), c("formula").as_ptr(), c("11").as_ptr(), 1, 0, &mut s);
        assert_eq!(st, QhlStatus::InvalidInput);

        assert_eq!(qhl_conjecture_report(4, c("F").as_ptr(), &mut s), QhlStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["mismatches"], 0);
        assert_eq!(qhl_conjecture_report(4, c("G").as_ptr(), &mut s), QhlStatus::InvalidInput);
    }
}

#[test]
fn header_declares_every_export() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/qhl.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|l| l.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for f in exports {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
}

/// Compiles and runs a small C program against the header and the static
/// library. Skipped when no C compiler is on PATH.
#[test]
fn c_program_links() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // The test binary sits in target/<profile>/deps; the library one level up.
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().unwrap().parent().unwrap();
    let lib = lib_dir.join("libqhl_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let out = std::env::temp_dir().join(format!("qhl-smoke-{}", std::process::id()));
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

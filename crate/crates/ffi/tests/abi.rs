use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use dlacheck_ffi::*;

const MODEL: &str = "algebroid B { rank 3; bracket [1,2] = e3; bracket [1,3] = e1; }\n\
                     dvb D { dimH 2; dimV 1; dimK 2; sign -; }\n";

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(dlacheck_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn parse(text: &str) -> *mut DlacheckModel {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { dlacheck_model_parse(c(text).as_ptr(), &mut m) }, DLACHECK_OK);
    m
}

fn check(m: *const DlacheckModel, verb: &str, name: &str, seed: u64) -> (i32, *mut DlacheckReport) {
    let mut r = ptr::null_mut();
    let code = unsafe { dlacheck_check(m, c(verb).as_ptr(), c(name).as_ptr(), seed, 0, &mut r) };
    (code, r)
}

#[test]
fn failing_check_returns_report() {
    let m = parse(MODEL);
    let (code, r) = check(m, "algebroid", "B", 3);
    assert_eq!(code, DLACHECK_OK);
    unsafe {
        assert_eq!(dlacheck_report_passed(r), 0);
        assert!(dlacheck_report_witness_count(r) >= 1);
        let json = CStr::from_ptr(dlacheck_report_json(r)).to_str().unwrap();
        assert!(json.starts_with(
            r#"{"check":"algebroid","passed":false,"witnesses":[{"identity":"J(1,2,3)[l=3]","residual":"e3"}"#
        ));
        assert!(json.ends_with(r#""seed":3,"elapsed_ms":0}"#));
        let text = CStr::from_ptr(dlacheck_report_text(r)).to_str().unwrap();
        assert!(text.starts_with("FAIL algebroid"));
        dlacheck_report_free(r);
        dlacheck_model_free(m);
    }
}

#[test]
fn dvb_checks() {
    let m = parse(MODEL);
    for verb in ["dvb-pair", "dvb-zmaps", "dvb-vue"] {
        let (code, r) = check(m, verb, "D", 0);
        assert_eq!(code, DLACHECK_OK, "{verb}: {}", last_error());
        assert_eq!(unsafe { dlacheck_report_passed(r) }, 1);
        unsafe { dlacheck_report_free(r) };
    }
    unsafe { dlacheck_model_free(m) };
}

#[test]
fn error_codes() {
    let mut m = ptr::null_mut();
    let code = unsafe { dlacheck_model_parse(c("algebroid A { rank 2; bracket [1,2] = 1/0*e1; }").as_ptr(), &mut m) };
    assert_eq!(code, DLACHECK_ERR_PARSE);
    assert!(m.is_null());
    assert!(last_error().contains("zero denominator"));

    assert_eq!(unsafe { dlacheck_model_parse(ptr::null(), &mut m) }, DLACHECK_ERR_NULL);
    let bad = [0xffu8, 0];
    assert_eq!(
        unsafe { dlacheck_model_parse(bad.as_ptr().cast(), &mut m) },
        DLACHECK_ERR_UTF8
    );

    let m = parse(MODEL);
    assert_eq!(check(m, "nonsense", "B", 0).0, DLACHECK_ERR_UNKNOWN_CHECK);
    assert_eq!(check(m, "poisson", "B", 0).0, DLACHECK_ERR_MODEL);
    assert!(last_error().contains("expected poisson"));
    assert_eq!(check(m, "algebroid", "Missing", 0).0, DLACHECK_ERR_MODEL);
    assert_eq!(check(ptr::null(), "algebroid", "B", 0).0, DLACHECK_ERR_NULL);

    assert_eq!(
        unsafe { dlacheck_model_extend(m, c("algebroid B { rank 1; }").as_ptr()) },
        DLACHECK_ERR_PARSE
    );
    assert_eq!(
        unsafe { dlacheck_model_extend(m, c("algebroid C { rank 1; }").as_ptr()) },
        DLACHECK_OK
    );
    assert_eq!(unsafe { dlacheck_model_len(m) }, 3);
    assert_eq!(last_error(), "");
    unsafe {
        assert_eq!(dlacheck_model_len(ptr::null()), -1);
        assert_eq!(dlacheck_report_passed(ptr::null()), -1);
        assert!(dlacheck_report_json(ptr::null()).is_null());
        dlacheck_report_free(ptr::null_mut());
        dlacheck_model_free(m);
    }
}

#[test]
fn version() {
    let v = unsafe { CStr::from_ptr(dlacheck_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn c_program_links_against_header() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let lib_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = lib_dir.join("libdlacheck_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out_dir = tempfile::tempdir().unwrap();
    let exe = out_dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert_eq!(run.status.code(), Some(0));
    assert!(String::from_utf8(run.stdout).unwrap().contains(r#""passed":false"#));
}

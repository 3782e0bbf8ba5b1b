use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hopfrad_ffi::*;

fn fixture(name: &str) -> CString {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    CString::new(p.to_str().unwrap()).unwrap()
}

fn take(s: *mut c_char) -> serde_json::Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    unsafe { hopfrad_string_free(s) };
    v
}

fn last_error() -> String {
    let p = hopfrad_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn load(name: &str) -> *mut HopfradModule {
    let mut m = ptr::null_mut();
    let st = unsafe { hopfrad_module_from_file(fixture(name).as_ptr(), &mut m) };
    assert_eq!(st, HopfradStatus::Ok);
    m
}

#[test]
fn radical_of_sweedler_example() {
    let m = load("e5-f3.json");
    let (mut r, mut h) = (0, 0);
    assert_eq!(unsafe { hopfrad_module_dims(m, &mut r, &mut h) }, HopfradStatus::Ok);
    assert_eq!((r, h), (2, 4));

    let mut out = ptr::null_mut();
    let which = CString::new("baer").unwrap();
    assert_eq!(unsafe { hopfrad_module_radical(m, which.as_ptr(), ptr::null(), &mut out) }, HopfradStatus::Ok);
    let v = take(out);
    assert_eq!(v["result"]["dim"], 0);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hopfrad_module_validate(m, ptr::null(), &mut out) }, HopfradStatus::Ok);
    assert_eq!(take(out)["ok"], true);

    let opts = HopfradOptions { seed: hopfrad_default_seed(), cap: 10_000 };
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hopfrad_module_oracle(m, &opts, &mut out) }, HopfradStatus::Ok);
    assert_eq!(take(out)["diffs"], serde_json::json!([]));

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hopfrad_module_report(m, &opts, &mut out) }, HopfradStatus::Ok);
    assert!(take(out)["entries"]["r_Hb"].is_object());
    unsafe { hopfrad_module_free(m) };
}

#[test]
fn json_round_trip_matches_file() {
    let text = std::fs::read_to_string(fixture("e2-f5.json").to_str().unwrap()).unwrap();
    let json = CString::new(text).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { hopfrad_module_from_json(json.as_ptr(), &mut m) }, HopfradStatus::Ok);
    let which = CString::new("gt").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hopfrad_module_radical(m, which.as_ptr(), ptr::null(), &mut out) }, HopfradStatus::Ok);
    assert_eq!(take(out)["result"]["dim"], 1);
    unsafe { hopfrad_module_free(m) };
}

#[test]
fn error_codes() {
    let mut m = ptr::null_mut();
    let empty = CString::new("").unwrap();
    assert_eq!(unsafe { hopfrad_module_from_json(empty.as_ptr(), &mut m) }, HopfradStatus::ParseError);
    assert!(m.is_null());
    assert!(last_error().contains("empty"));

    assert_eq!(unsafe { hopfrad_module_from_json(ptr::null(), &mut m) }, HopfradStatus::NullArgument);

    let missing = CString::new("/nonexistent/x.json").unwrap();
    assert_eq!(unsafe { hopfrad_module_from_file(missing.as_ptr(), &mut m) }, HopfradStatus::ParseError);

    let m = load("e2.json");
    let bad = CString::new("nonsense").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hopfrad_module_radical(m, bad.as_ptr(), ptr::null(), &mut out) }, HopfradStatus::ParseError);
    assert!(out.is_null());
    assert!(last_error().contains("unknown radical"));

    let tiny = HopfradOptions { seed: 1, cap: 1 };
    let which = CString::new("baer").unwrap();
    // over Q nothing is enumerated, so the cap does not bite
    assert_eq!(unsafe { hopfrad_module_radical(m, which.as_ptr(), &tiny, &mut out) }, HopfradStatus::Ok);
    unsafe { hopfrad_string_free(out) };
    unsafe { hopfrad_module_free(m) };

    let m = load("e2-f3.json");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hopfrad_module_oracle(m, &tiny, &mut out) }, HopfradStatus::CapExceeded);
    let level = CString::new("bogus").unwrap();
    assert_eq!(unsafe { hopfrad_module_validate(m, level.as_ptr(), &mut out) }, HopfradStatus::ParseError);
    unsafe { hopfrad_module_free(m) };
    unsafe { hopfrad_module_free(ptr::null_mut()) };
}

#[test]
fn corrupted_antipode_fails_validation() {
    let path = fixture("e2-f3.json");
    let mut def: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path.to_str().unwrap()).unwrap()).unwrap();
    def["hopf"]["antipode"][0] = serde_json::json!([0, 0, 2]);
    let json = CString::new(def.to_string()).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { hopfrad_module_from_json(json.as_ptr(), &mut m) }, HopfradStatus::Ok);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hopfrad_module_validate(m, ptr::null(), &mut out) }, HopfradStatus::ValidationFailed);
    let v = take(out);
    assert_eq!(v["reports"]["hopf"]["ok"], false);
    unsafe { hopfrad_module_free(m) };
}

#[test]
fn header_compiles_as_c() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/hopfrad.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["hopfrad_module_from_json", "hopfrad_module_radical", "hopfrad_string_free", "HOPFRAD_STATUS_CAP_EXCEEDED"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
    else {
        eprintln!("no C compiler; skipping syntax check");
        return;
    };
    assert!(status.success());
}

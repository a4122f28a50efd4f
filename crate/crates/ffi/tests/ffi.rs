use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use cgc_ffi::*;

const F3: &str = r#"{"construction": "p1", "field": {"p": 3, "m": 1},
    "family": {"a": 1, "b": 2, "n": 2}, "r": 1, "s": 1}"#;

fn last_error() -> String {
    unsafe { CStr::from_ptr(cgc_last_error()) }.to_string_lossy().into_owned()
}

fn load(json: &str) -> Result<*mut CgcCode, (CgcStatus, String)> {
    let text = CString::new(json).unwrap();
    let mut code = ptr::null_mut();
    match unsafe { cgc_code_from_json(text.as_ptr(), &mut code) } {
        CgcStatus::Ok => Ok(code),
        s => {
            assert!(code.is_null());
            Err((s, last_error()))
        }
    }
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    cgc_string_free(s);
    out
}

#[test]
fn params_of_f3_code() {
    let code = load(F3).unwrap();
    let mut p = CgcParams::default();
    assert_eq!(unsafe { cgc_code_params(code, &mut p) }, CgcStatus::Ok);
    assert_eq!((p.n, p.k, p.delta, p.d_free, p.singleton_bound), (2, 1, 1, 4, 4));
    assert!(p.is_mds && !p.input_was_catastrophic);
    let mut passed = false;
    assert_eq!(unsafe { cgc_code_verify(code, &mut passed) }, CgcStatus::Ok);
    assert!(passed);
    let mut d = 0;
    assert_eq!(unsafe { cgc_code_free_distance_oracle(code, 3, &mut d) }, CgcStatus::Ok);
    assert_eq!(d, 4);
    unsafe { cgc_code_free(code) };
}

#[test]
fn report_json_matches_library() {
    let code = load(F3).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { cgc_code_report_json(code, &mut s) }, CgcStatus::Ok);
    let text = unsafe { take(s) };
    let spec = cgc::spec_file::CodeSpecFile::from_json(F3).unwrap();
    assert_eq!(text, cgc::report::Report::build(&spec, false).unwrap().to_json_string());
    unsafe { cgc_code_free(code) };
}

#[test]
fn error_codes() {
    let (s, msg) = load("{").unwrap_err();
    assert_eq!(s, CgcStatus::ParseError);
    assert!(msg.starts_with("parse error"), "{msg}");

    let (s, msg) = load(&F3.replace("\"r\"", "\"radius\"")).unwrap_err();
    assert_eq!(s, CgcStatus::ParseError);
    assert!(msg.contains("radius"), "{msg}");

    let dup = r#"{"construction": "p1", "field": {"p": 3, "m": 1}, "points": [[1, 1], [1, 1]], "r": 1, "s": 1}"#;
    let (s, msg) = load(dup).unwrap_err();
    assert_eq!(s, CgcStatus::ValidationError);
    assert!(msg.contains("coincide"), "{msg}");
}

#[test]
fn null_pointers_rejected() {
    let mut code = ptr::null_mut();
    assert_eq!(unsafe { cgc_code_from_json(ptr::null(), &mut code) }, CgcStatus::NullPointer);
    assert!(last_error().contains("json"));
    let mut p = CgcParams::default();
    assert_eq!(unsafe { cgc_code_params(ptr::null(), &mut p) }, CgcStatus::NullPointer);
    unsafe {
        cgc_code_free(ptr::null_mut());
        cgc_string_free(ptr::null_mut());
    }
}

#[test]
fn fixtures_roundtrip() {
    assert_eq!(cgc_fixture_count(), 7);
    for i in 0..cgc_fixture_count() {
        let (mut name, mut json) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(unsafe { cgc_fixture(i, &mut name, &mut json) }, CgcStatus::Ok);
        let (name, json) = unsafe { (take(name), take(json)) };
        assert_eq!(name, cgc::fixtures::NAMES[i]);
        let code = load(&json).unwrap();
        unsafe { cgc_code_free(code) };
    }
    assert_eq!(unsafe { cgc_fixture(7, ptr::null_mut(), ptr::null_mut()) }, CgcStatus::InvalidArgument);
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = std::env::var("CC").or_else(|_| which("cc").ok_or(())) else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use_header.c");
    std::fs::write(
        &src,
        "#include \"cgc.h\"\n\
         int main(void) { CgcParams p; CgcStatus s = CGC_STATUS_OK; (void)p; (void)s;\n\
         return (int)cgc_fixture_count(); }\n",
    )
    .unwrap();
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let out = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", include])
        .arg(&src)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

fn which(bin: &str) -> Option<String> {
    let path = std::env::var_os("PATH")?;
    std::env::split_paths(&path).map(|p| p.join(bin)).find(|p| p.is_file()).map(|p| p.display().to_string())
}

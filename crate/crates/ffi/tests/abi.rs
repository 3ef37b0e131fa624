use std::ffi::{c_char, CStr, CString};
use std::ptr;

use tilekit_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    tk_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(tk_last_error_message())
        .to_str()
        .unwrap()
        .to_owned()
}

const SQUARE: &str = r#"{"vertices": [["1","1"],["-1","1"],["-1","-1"],["1","-1"]]}"#;
const EVEN: &str = r#"{"basis": [["2","0"],["0","2"]]}"#;

#[test]
fn square_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            tk_polygon_from_json(c(SQUARE).as_ptr(), &mut p),
            TkStatus::Ok
        );
        assert_eq!(tk_polygon_vertex_count(p), 4);

        let mut l = ptr::null_mut();
        assert_eq!(tk_lattice_from_json(c(EVEN).as_ptr(), &mut l), TkStatus::Ok);
        let mut k = 0u64;
        let mut report = ptr::null_mut();
        assert_eq!(tk_check_bolle(p, l, &mut k, &mut report), TkStatus::Ok);
        assert_eq!(k, 1);
        let report = take_string(report);
        assert!(report.contains("\"pass\":true"));

        let mut x = ptr::null_mut();
        assert_eq!(tk_translates_from_lattice(l, &mut x), TkStatus::Ok);
        let mut pass = false;
        assert_eq!(
            tk_verify_k_fold(p, x, 1, &mut pass, ptr::null_mut()),
            TkStatus::Ok
        );
        assert!(pass);
        assert_eq!(
            tk_verify_k_fold(p, x, 2, &mut pass, ptr::null_mut()),
            TkStatus::Ok
        );
        assert!(!pass);

        let mut json = ptr::null_mut();
        assert_eq!(tk_polygon_to_json(p, &mut json), TkStatus::Ok);
        assert!(take_string(json).starts_with("{\"vertices\""));

        tk_translates_free(x);
        tk_lattice_free(l);
        tk_polygon_free(p);
    }
}

#[test]
fn generate_and_classify() {
    unsafe {
        let (mut p, mut l, mut k) = (ptr::null_mut(), ptr::null_mut(), 0u64);
        let status = tk_generate(
            c("octagon1").as_ptr(),
            c("1/2").as_ptr(),
            &mut p,
            &mut l,
            &mut k,
        );
        assert_eq!(status, TkStatus::Ok);
        assert_eq!(k, 5);
        assert_eq!(tk_polygon_vertex_count(p), 8);

        let mut out = ptr::null_mut();
        assert_eq!(tk_classify(p, &mut out), TkStatus::Ok);
        let json = take_string(out);
        assert!(json.contains("\"family\":\"octagon1\""), "{json}");
        assert!(json.contains("\"parameter\":\"1/2\""), "{json}");

        let mut bolle_k = 0;
        assert_eq!(
            tk_check_bolle(p, l, &mut bolle_k, ptr::null_mut()),
            TkStatus::Ok
        );
        assert_eq!(bolle_k, 5);

        tk_polygon_free(p);
        tk_lattice_free(l);
    }
}

#[test]
fn translate_set_json() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            tk_polygon_from_json(c(SQUARE).as_ptr(), &mut p),
            TkStatus::Ok
        );
        let json =
            r#"{"lattice": {"basis": [["2","0"],["0","2"]]}, "offsets": [["0","0"],["1","1"]]}"#;
        let mut x = ptr::null_mut();
        assert_eq!(
            tk_translates_from_json(c(json).as_ptr(), &mut x),
            TkStatus::Ok
        );
        let mut pass = false;
        let mut report = ptr::null_mut();
        assert_eq!(
            tk_verify_k_fold(p, x, 2, &mut pass, &mut report),
            TkStatus::Ok
        );
        assert!(pass);
        assert!(take_string(report).contains("\"min_count\":2"));
        tk_translates_free(x);
        tk_polygon_free(p);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(
            tk_polygon_from_json(ptr::null(), &mut p),
            TkStatus::NullPointer
        );
        assert_eq!(
            tk_polygon_from_json(c("{").as_ptr(), &mut p),
            TkStatus::ParseError
        );
        assert!(last_error().contains("JSON"));

        let bad = r#"{"basis": [["1","2"],["2","4"]]}"#;
        let mut l = ptr::null_mut();
        assert_eq!(
            tk_lattice_from_json(c(bad).as_ptr(), &mut l),
            TkStatus::ParseError
        );

        let (mut q, mut m, mut k) = (ptr::null_mut(), ptr::null_mut(), 0u64);
        let status = tk_generate(
            c("octagon1").as_ptr(),
            c("2/3").as_ptr(),
            &mut q,
            &mut m,
            &mut k,
        );
        assert_eq!(status, TkStatus::FamilyError);
        assert!(last_error().contains("2/3"));
        let status = tk_generate(c("heptagon").as_ptr(), ptr::null(), &mut q, &mut m, &mut k);
        assert_eq!(status, TkStatus::InvalidArgument);
        let status = tk_generate(c("decagon").as_ptr(), ptr::null(), &mut q, &mut m, &mut k);
        assert_eq!(status, TkStatus::InvalidArgument);

        assert_eq!(
            tk_classify(ptr::null(), &mut ptr::null_mut()),
            TkStatus::NullPointer
        );
        assert_eq!(tk_polygon_vertex_count(ptr::null()), 0);
        tk_polygon_free(ptr::null_mut());
        tk_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_entry_points() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/tilekit.h")).unwrap();
    for name in [
        "tk_polygon_from_json",
        "tk_check_bolle",
        "tk_verify_k_fold",
        "tk_classify",
        "tk_generate",
        "tk_string_free",
        "tk_last_error_message",
        "TK_STATUS_OK",
        "typedef struct TkPolygon TkPolygon",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

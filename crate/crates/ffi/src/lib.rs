//! C ABI for tilekit.
//!
//! Objects cross the boundary as opaque handles created from JSON and
//! released with the matching `*_free` function. Every fallible call returns
//! a [`TkStatus`]; on failure `tk_last_error_message` describes the error
//! for the calling thread. Strings returned through `char **` out-parameters
//! are owned by the caller and must be released with `tk_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use tilekit::error::Error;
use tilekit::families;
use tilekit::io::{lattice_from_value, parse_value, polygon_from_value, translates_from_value};
use tilekit::rational::parse_rational;
use tilekit::{check_bolle, classify, verify_k_fold, CSPolygon, Lattice, Point, TranslateSet};

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    GeometryError = 4,
    LatticeError = 5,
    FamilyError = 6,
    InvalidArgument = 7,
    Internal = 99,
}

pub struct TkPolygon(CSPolygon);
pub struct TkLattice(Lattice);
pub struct TkTranslateSet(TranslateSet);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

struct Failure(TkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) | Error::Io(_) => TkStatus::ParseError,
            Error::Geom(_) => TkStatus::GeometryError,
            Error::Lattice(_) => TkStatus::LatticeError,
            Error::Family(_) => TkStatus::FamilyError,
            Error::Arrangement(_) | Error::Local(_) | Error::Render(_) => TkStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<tilekit::error::FamilyError> for Failure {
    fn from(e: tilekit::error::FamilyError) -> Self {
        Failure(TkStatus::FamilyError, e.to_string())
    }
}

fn guarded(body: impl FnOnce() -> Result<(), Failure>) -> TkStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => TkStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TkStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(TkStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `p` is null or a valid NUL-terminated string.
unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(TkStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

/// # Safety
/// `p` is null or points to a live value of type `T`.
unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON contains no NUL").into_raw()
}

/// # Safety
/// `out` is null or valid for writes. Writes only when `out` is non-null.
unsafe fn put_json_opt(out: *mut *mut c_char, json: serde_json::Result<String>) {
    if !out.is_null() {
        out.write(to_c_string(json.expect("reports serialize")));
    }
}

/// Message of the last failed call on this thread. Valid until the next
/// call into this library from the same thread; never null.
#[no_mangle]
pub extern "C" fn tk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `{"vertices": [["x","y"], ...]}`.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tk_polygon_from_json(
    json: *const c_char,
    out: *mut *mut TkPolygon,
) -> TkStatus {
    guarded(|| {
        let p = polygon_from_value(&parse_value(text(json)?)?)?;
        put(out, Box::into_raw(Box::new(TkPolygon(p))))
    })
}

/// # Safety
/// `p` is null or a handle from `tk_polygon_from_json` / `tk_generate`.
#[no_mangle]
pub unsafe extern "C" fn tk_polygon_free(p: *mut TkPolygon) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `p` is null or a live polygon handle.
#[no_mangle]
pub unsafe extern "C" fn tk_polygon_vertex_count(p: *const TkPolygon) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Serializes the polygon to JSON.
///
/// # Safety
/// `p` is a live polygon handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tk_polygon_to_json(
    p: *const TkPolygon,
    out: *mut *mut c_char,
) -> TkStatus {
    guarded(|| {
        let p = borrow(p)?;
        put(
            out,
            to_c_string(serde_json::to_string(&p.0).expect("polygon serializes")),
        )
    })
}

/// Parses `{"basis": [[..],[..]]}` or an object with a `"lattice"` key.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tk_lattice_from_json(
    json: *const c_char,
    out: *mut *mut TkLattice,
) -> TkStatus {
    guarded(|| {
        let l = lattice_from_value(&parse_value(text(json)?)?)?;
        put(out, Box::into_raw(Box::new(TkLattice(l))))
    })
}

/// # Safety
/// `l` is null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn tk_lattice_free(l: *mut TkLattice) {
    if !l.is_null() {
        drop(Box::from_raw(l));
    }
}

/// Parses `{"lattice": ..., "offsets": [...]}` or a bare lattice.
///
/// # Safety
/// `json` is a NUL-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tk_translates_from_json(
    json: *const c_char,
    out: *mut *mut TkTranslateSet,
) -> TkStatus {
    guarded(|| {
        let x = translates_from_value(&parse_value(text(json)?)?)?;
        put(out, Box::into_raw(Box::new(TkTranslateSet(x))))
    })
}

/// Translate set consisting of the lattice itself.
///
/// # Safety
/// `l` is a live lattice handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tk_translates_from_lattice(
    l: *const TkLattice,
    out: *mut *mut TkTranslateSet,
) -> TkStatus {
    guarded(|| {
        let l = borrow(l)?;
        put(
            out,
            Box::into_raw(Box::new(TkTranslateSet(TranslateSet::lattice(l.0.clone())))),
        )
    })
}

/// # Safety
/// `x` is null or a handle from this library.
#[no_mangle]
pub unsafe extern "C" fn tk_translates_free(x: *mut TkTranslateSet) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// Runs the Bolle check. `*multiplicity` receives `k` on success and 0 when
/// the polygon is not a multiple lattice tile for this lattice.
/// `report_json` may be null; otherwise it receives the full report.
///
/// # Safety
/// Handles are live; `multiplicity` is valid for writes; `report_json` is
/// null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tk_check_bolle(
    p: *const TkPolygon,
    l: *const TkLattice,
    multiplicity: *mut u64,
    report_json: *mut *mut c_char,
) -> TkStatus {
    guarded(|| {
        let r = check_bolle(&borrow(p)?.0, &borrow(l)?.0);
        put(multiplicity, r.multiplicity.unwrap_or(0))?;
        put_json_opt(report_json, serde_json::to_string(&r));
        Ok(())
    })
}

/// Decides whether `P + X` is a `k`-fold tiling. `report_json` may be null.
///
/// # Safety
/// Handles are live; `pass` is valid for writes; `report_json` is null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tk_verify_k_fold(
    p: *const TkPolygon,
    x: *const TkTranslateSet,
    k: u64,
    pass: *mut bool,
    report_json: *mut *mut c_char,
) -> TkStatus {
    guarded(|| {
        let r = verify_k_fold(&borrow(p)?.0, &borrow(x)?.0, k);
        put(pass, r.pass)?;
        put_json_opt(report_json, serde_json::to_string(&r));
        Ok(())
    })
}

/// Classifies the polygon; writes the classification as JSON.
///
/// # Safety
/// `p` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tk_classify(p: *const TkPolygon, out: *mut *mut c_char) -> TkStatus {
    guarded(|| {
        let c = classify(&borrow(p)?.0);
        put(
            out,
            to_c_string(serde_json::to_string(&c).expect("classification serializes")),
        )
    })
}

/// Builds a family member. `family` is one of `parallelogram`, `hexagon`,
/// `octagon1`, `octagon2`, `decagon`. `parameter` is `alpha` or `beta` as
/// `p/q` for the octagons and the first vertex `x,y` for the decagon; it is
/// ignored (and may be null) for the other families, which use their
/// default shapes.
///
/// # Safety
/// Strings are NUL-terminated (`parameter` may be null); out-parameters are
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn tk_generate(
    family: *const c_char,
    parameter: *const c_char,
    polygon_out: *mut *mut TkPolygon,
    lattice_out: *mut *mut TkLattice,
    expected_k: *mut u64,
) -> TkStatus {
    guarded(|| {
        let family = text(family)?;
        let param = || -> Result<&str, Failure> {
            if parameter.is_null() {
                Err(Failure(
                    TkStatus::InvalidArgument,
                    format!("{family} needs a parameter"),
                ))
            } else {
                text(parameter)
            }
        };
        let rational = |s: &str| parse_rational(s).map_err(|e| Failure::from(Error::from(e)));
        let inst = match family {
            "parallelogram" => {
                families::parallelogram(&Point::from_ints(1, 0), &Point::from_ints(0, 1))?
            }
            "hexagon" => families::hexagon(
                &Point::from_ints(1, 0),
                &Point::from_ints(0, 1),
                &Point::from_ints(-1, 1),
            )?,
            "octagon1" => families::octagon_type1(&rational(param()?)?)?,
            "octagon2" => families::octagon_type2(&rational(param()?)?)?,
            "decagon" => {
                let v1 = Point::parse(param()?).map_err(|e| Failure::from(Error::from(e)))?;
                families::decagon_from_vertex(&v1)?
            }
            other => {
                return Err(Failure(
                    TkStatus::InvalidArgument,
                    format!("unknown family `{other}`"),
                ))
            }
        };
        if polygon_out.is_null() || lattice_out.is_null() || expected_k.is_null() {
            return Err(null());
        }
        put(expected_k, inst.expected_k)?;
        put(
            polygon_out,
            Box::into_raw(Box::new(TkPolygon(inst.polygon))),
        )?;
        put(
            lattice_out,
            Box::into_raw(Box::new(TkLattice(inst.lattice))),
        )
    })
}

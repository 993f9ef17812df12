//! C ABI for dlacheck.
//!
//! Models and reports are opaque handles owned by the caller and released with
//! the matching `_free` function. Every fallible function returns a status
//! code; on failure `dlacheck_last_error` describes the problem on the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dlacheck::frontend::{
    emit_report, parse_model, run_check, CheckRequest, CheckTarget, DvbVerb, Format, ModelFile, Verb,
};
use dlacheck::{CheckOptions, CheckReport, Error};

pub const DLACHECK_OK: i32 = 0;
/// A required pointer argument was null.
pub const DLACHECK_ERR_NULL: i32 = 1;
/// A string argument was not valid UTF-8.
pub const DLACHECK_ERR_UTF8: i32 = 2;
/// The model text did not parse.
pub const DLACHECK_ERR_PARSE: i32 = 3;
/// The named declaration is missing, has the wrong kind or is malformed.
pub const DLACHECK_ERR_MODEL: i32 = 4;
/// The check name is not one of the supported checks.
pub const DLACHECK_ERR_UNKNOWN_CHECK: i32 = 5;
/// An internal error; the library state is still usable.
pub const DLACHECK_ERR_PANIC: i32 = 6;

/// A parsed model file.
pub struct DlacheckModel {
    file: ModelFile,
}

/// The outcome of one check.
pub struct DlacheckReport {
    report: CheckReport,
    json: CString,
    text: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(code: i32, msg: &str) -> i32 {
    set_error(msg);
    code
}

fn guarded(f: impl FnOnce() -> i32) -> i32 {
    set_error("");
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "internal error".into());
        fail(DLACHECK_ERR_PANIC, &msg)
    })
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, i32> {
    if p.is_null() {
        return Err(fail(DLACHECK_ERR_NULL, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(DLACHECK_ERR_UTF8, "string argument is not UTF-8"))
}

fn verb(name: &str) -> Option<Verb> {
    Some(match name {
        "algebroid" => Verb::Check(CheckTarget::Algebroid),
        "rep" => Verb::Check(CheckTarget::Rep),
        "matched-pair" => Verb::Check(CheckTarget::MatchedPair),
        "bialgebroid" => Verb::Check(CheckTarget::Bialgebroid),
        "poisson" => Verb::Check(CheckTarget::Poisson),
        "manin" => Verb::Check(CheckTarget::Manin),
        "vacant" => Verb::Check(CheckTarget::Vacant),
        "dvb-pair" => Verb::Dvb(DvbVerb::Pair),
        "dvb-zmaps" => Verb::Dvb(DvbVerb::Zmaps),
        "dvb-vue" => Verb::Dvb(DvbVerb::Vue),
        _ => return None,
    })
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::DuplicateName(_) | Error::UnresolvedReference(_) => DLACHECK_ERR_PARSE,
        _ => DLACHECK_ERR_MODEL,
    }
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn dlacheck_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn dlacheck_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses model text into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_model_parse(text: *const c_char, out: *mut *mut DlacheckModel) -> i32 {
    guarded(|| {
        if out.is_null() {
            return fail(DLACHECK_ERR_NULL, "null output pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(text) {
            Ok(t) => t,
            Err(code) => return code,
        };
        match parse_model(text) {
            Ok(file) => {
                *out = Box::into_raw(Box::new(DlacheckModel { file }));
                DLACHECK_OK
            }
            Err(e) => fail(error_code(&e), &e.to_string()),
        }
    })
}

/// Appends the declarations of `text` to `model`. Names must stay unique.
///
/// # Safety
/// `model` must come from `dlacheck_model_parse`; `text` must be nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_model_extend(model: *mut DlacheckModel, text: *const c_char) -> i32 {
    guarded(|| {
        let Some(model) = model.as_mut() else {
            return fail(DLACHECK_ERR_NULL, "null model");
        };
        let text = match read_str(text) {
            Ok(t) => t,
            Err(code) => return code,
        };
        match parse_model(text).and_then(|part| model.file.extend(part)) {
            Ok(()) => DLACHECK_OK,
            Err(e) => fail(error_code(&e), &e.to_string()),
        }
    })
}

/// Number of declarations in the model, or -1 for a null handle.
///
/// # Safety
/// `model` must be null or come from `dlacheck_model_parse`.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_model_len(model: *const DlacheckModel) -> i64 {
    model.as_ref().map_or(-1, |m| m.file.decls.len() as i64)
}

/// # Safety
/// `model` must be null or come from `dlacheck_model_parse`, and is invalid
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_model_free(model: *mut DlacheckModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Runs the check `check` on the declaration `name`. `check` is one of
/// `algebroid`, `rep`, `matched-pair`, `bialgebroid`, `poisson`, `manin`,
/// `vacant`, `dvb-pair`, `dvb-zmaps`, `dvb-vue`. A zero `samples` uses the
/// default. A failing check is still `DLACHECK_OK`; see
/// `dlacheck_report_passed`.
///
/// # Safety
/// `model` must come from `dlacheck_model_parse`, the strings must be
/// nul-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_check(
    model: *const DlacheckModel,
    check: *const c_char,
    name: *const c_char,
    seed: u64,
    samples: u32,
    out: *mut *mut DlacheckReport,
) -> i32 {
    guarded(|| {
        if out.is_null() {
            return fail(DLACHECK_ERR_NULL, "null output pointer");
        }
        *out = ptr::null_mut();
        let Some(model) = model.as_ref() else {
            return fail(DLACHECK_ERR_NULL, "null model");
        };
        let (check, name) = match (read_str(check), read_str(name)) {
            (Ok(c), Ok(n)) => (c, n),
            (Err(code), _) | (_, Err(code)) => return code,
        };
        let Some(verb) = verb(check) else {
            return fail(DLACHECK_ERR_UNKNOWN_CHECK, &format!("unknown check `{check}`"));
        };
        let mut opts = CheckOptions {
            seed,
            ..CheckOptions::default()
        };
        if samples > 0 {
            opts.samples = samples as usize;
        }
        let req = CheckRequest {
            verb,
            name: name.to_string(),
            opts,
        };
        match run_check(&model.file, &req) {
            Ok(report) => {
                let json = emit_report(&report, Format::Json);
                let text = emit_report(&report, Format::Text);
                *out = Box::into_raw(Box::new(DlacheckReport {
                    report,
                    json: CString::new(json.trim_end()).expect("reports contain no nul"),
                    text: CString::new(text).expect("reports contain no nul"),
                }));
                DLACHECK_OK
            }
            Err(e) => fail(error_code(&e), &e.to_string()),
        }
    })
}

/// 1 if the check passed, 0 if it failed, -1 for a null handle.
///
/// # Safety
/// `report` must be null or come from `dlacheck_check`.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_report_passed(report: *const DlacheckReport) -> i32 {
    report.as_ref().map_or(-1, |r| r.report.passed as i32)
}

/// Number of witnesses, or -1 for a null handle.
///
/// # Safety
/// `report` must be null or come from `dlacheck_check`.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_report_witness_count(report: *const DlacheckReport) -> i64 {
    report.as_ref().map_or(-1, |r| r.report.witnesses.len() as i64)
}

/// The report as one line of JSON, owned by the report.
///
/// # Safety
/// `report` must be null or come from `dlacheck_check`.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_report_json(report: *const DlacheckReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.json.as_ptr())
}

/// The report in the CLI text format, owned by the report.
///
/// # Safety
/// `report` must be null or come from `dlacheck_check`.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_report_text(report: *const DlacheckReport) -> *const c_char {
    report.as_ref().map_or(ptr::null(), |r| r.text.as_ptr())
}

/// # Safety
/// `report` must be null or come from `dlacheck_check`, and is invalid
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn dlacheck_report_free(report: *mut DlacheckReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

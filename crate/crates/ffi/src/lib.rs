//! C ABI over the rigidity engine.
//!
//! Indices are parsed into opaque [`SrIndex`] handles. Every call returns an
//! [`SrStatus`]; on failure the message is available from [`sr_last_error`]
//! on the same thread. Strings handed out by the library must be released
//! with [`sr_string_free`], handles with [`sr_index_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use schubert_rigidity::cli::{error_json, verdict_json};
use schubert_rigidity::index::{dimension, parse_index};
use schubert_rigidity::restriction::{expand, parse_sequence};
use schubert_rigidity::rigidity::{rigid_class, RelationMode};
use schubert_rigidity::{Error, Schubert};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SrStatus {
    SrOk = 0,
    SrSyntax = 1,
    SrInvalid = 2,
    SrUnsupported = 3,
    SrNotEssential = 4,
    SrNullArgument = 5,
    SrBadUtf8 = 6,
    SrInternal = 7,
}

/// A parsed and validated Schubert index.
pub struct SrIndex {
    inner: Schubert,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: &Error) -> SrStatus {
    set_error(error_json(e).to_string());
    match e {
        Error::Syntax { .. } => SrStatus::SrSyntax,
        Error::Invalid(_) | Error::InvalidArgument(_) | Error::SpaceMismatch(_) => SrStatus::SrInvalid,
        Error::NotEssential(_) => SrStatus::SrNotEssential,
        Error::UnsupportedKind(_)
        | Error::UnsupportedDegeneration { .. }
        | Error::CapExceeded { .. }
        | Error::Overflow => SrStatus::SrUnsupported,
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, SrStatus> {
    if text.is_null() {
        set_error("null argument".into());
        return Err(SrStatus::SrNullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("input is not valid UTF-8".into());
        SrStatus::SrBadUtf8
    })
}

unsafe fn hand_out(s: String, out: *mut *mut c_char) -> SrStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            SrStatus::SrOk
        }
        Err(_) => {
            set_error("output contained a NUL byte".into());
            SrStatus::SrInternal
        }
    }
}

fn mode(paper_literal: bool) -> RelationMode {
    if paper_literal {
        RelationMode::PaperLiteral
    } else {
        RelationMode::Max
    }
}

/// Message of the last failed call on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses and validates an index literal such as `2^1,4^2 @ F(1,2;4)`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sr_index_parse(text: *const c_char, out: *mut *mut SrIndex) -> SrStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return SrStatus::SrNullArgument;
    }
    *out = ptr::null_mut();
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_index(text) {
        Ok(s) => {
            *out = Box::into_raw(Box::new(SrIndex { inner: s }));
            SrStatus::SrOk
        }
        Err(e) => fail(&e),
    }
}

/// Releases a handle from [`sr_index_parse`]. NULL is ignored.
///
/// # Safety
/// `index` must come from [`sr_index_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sr_index_free(index: *mut SrIndex) {
    if !index.is_null() {
        drop(Box::from_raw(index));
    }
}

/// Dimension of a type A Schubert variety.
///
/// # Safety
/// `index` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sr_index_dimension(index: *const SrIndex, out: *mut u64) -> SrStatus {
    if index.is_null() || out.is_null() {
        set_error("null argument".into());
        return SrStatus::SrNullArgument;
    }
    match dimension(&(*index).inner) {
        Ok(d) => {
            *out = d;
            SrStatus::SrOk
        }
        Err(e) => fail(&e),
    }
}

/// Class verdict: 1 rigid, 0 not rigid, -1 undecided.
///
/// # Safety
/// `index` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sr_class_rigid(
    index: *const SrIndex,
    paper_literal: bool,
    out: *mut i32,
) -> SrStatus {
    if index.is_null() || out.is_null() {
        set_error("null argument".into());
        return SrStatus::SrNullArgument;
    }
    *out = match rigid_class(&(*index).inner, mode(paper_literal)).class_rigid {
        Some(true) => 1,
        Some(false) => 0,
        None => -1,
    };
    SrStatus::SrOk
}

/// Full rigidity report as a JSON string; free it with [`sr_string_free`].
///
/// # Safety
/// `index` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sr_rigid_json(
    index: *const SrIndex,
    paper_literal: bool,
    out: *mut *mut c_char,
) -> SrStatus {
    if index.is_null() || out.is_null() {
        set_error("null argument".into());
        return SrStatus::SrNullArgument;
    }
    *out = ptr::null_mut();
    let s = &(*index).inner;
    let v = rigid_class(s, mode(paper_literal));
    hand_out(verdict_json(s, &v).to_string(), out)
}

/// Expands a restriction sequence literal such as `F:2 | Q:6^0 @ OG(2,7)`
/// and returns the class as text; free it with [`sr_string_free`].
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sr_expand(text: *const c_char, out: *mut *mut c_char) -> SrStatus {
    if out.is_null() {
        set_error("null output pointer".into());
        return SrStatus::SrNullArgument;
    }
    *out = ptr::null_mut();
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_sequence(text).and_then(|seq| expand(&seq)) {
        Ok(exp) => hand_out(exp.class.to_string(), out),
        Err(e) => fail(&e),
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

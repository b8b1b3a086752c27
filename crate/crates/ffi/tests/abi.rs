use std::ffi::{CStr, CString};
use std::ptr;

use schubert_rigidity_ffi::*;

fn parse(text: &str) -> (SrStatus, *mut SrIndex) {
    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    let st = unsafe { sr_index_parse(c.as_ptr(), &mut h) };
    (st, h)
}

#[test]
fn parse_classify_free() {
    let (st, h) = parse("2^1,4^2 @ F(1,2;4)");
    assert_eq!(st, SrStatus::SrOk);
    let mut verdict = 7;
    let mut dim = 0u64;
    unsafe {
        assert_eq!(sr_class_rigid(h, false, &mut verdict), SrStatus::SrOk);
        assert_eq!(sr_index_dimension(h, &mut dim), SrStatus::SrOk);
        sr_index_free(h);
    }
    assert_eq!(verdict, 1);
    assert_eq!(dim, 3);
}

#[test]
fn rigid_json_round_trips() {
    let (_, h) = parse("(3 | 0,1,3) @ OG(4,11)");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(sr_rigid_json(h, false, &mut s), SrStatus::SrOk);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        sr_string_free(s);
        sr_index_free(h);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["class_rigid"], serde_json::json!(true));
        assert_eq!(v["index"]["b"], serde_json::json!([0, 1, 3]));
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let (st, h) = parse("1,3 @ H(2,4)");
    assert_eq!(st, SrStatus::SrSyntax);
    assert!(h.is_null());
    let msg = unsafe { CStr::from_ptr(sr_last_error()) }.to_str().unwrap().to_owned();
    assert!(msg.contains("\"location\":6"), "{msg}");

    let (st, _) = parse("9,9 @ G(2,4)");
    assert_eq!(st, SrStatus::SrInvalid);

    let mut out = ptr::null_mut();
    let st = unsafe { sr_index_parse(ptr::null(), &mut out) };
    assert_eq!(st, SrStatus::SrNullArgument);
    unsafe { sr_index_free(ptr::null_mut()) };
}

#[test]
fn expansion_text() {
    let c = CString::new("F:2 | Q:6^0 @ OG(2,7)").unwrap();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(sr_expand(c.as_ptr(), &mut s), SrStatus::SrOk);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "1·(1|1) + 1·(2|2)");
        sr_string_free(s);
    }
    let bad = CString::new("(| 0,1) @ OG(2,7)").unwrap();
    let st = unsafe { sr_expand(bad.as_ptr(), &mut s) };
    assert_eq!(st, SrStatus::SrSyntax);
}

#[test]
fn header_lists_every_entry_point() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/schubert_rigidity.h"
    ))
    .unwrap();
    for name in [
        "sr_index_parse",
        "sr_index_free",
        "sr_index_dimension",
        "sr_class_rigid",
        "sr_rigid_json",
        "sr_expand",
        "sr_string_free",
        "sr_last_error",
        "SR_NOT_ESSENTIAL",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

use std::ffi::{CStr, CString};
use std::ptr;

use polybound_ffi::*;

fn parse(text: &str) -> *mut PbPolynomial {
    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { pb_polynomial_parse(c.as_ptr(), &mut h) }, PbStatus::Ok);
    assert!(!h.is_null());
    h
}

fn last_error() -> String {
    let p = pb_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn worked_example_through_the_abi() {
    let h = parse("90,-101,18");
    let mut v = 0.0;
    unsafe {
        let mut deg = 0usize;
        assert_eq!(pb_polynomial_degree(h, &mut deg), PbStatus::Ok);
        assert_eq!(deg, 2);
        assert_eq!(pb_thm1_asym(h, 1.0, &mut v), PbStatus::Ok);
        assert!((v - 90.9).abs() < 1e-9);
        let asym = v;
        assert_eq!(pb_lp_norm(h, 1.0, &mut v), PbStatus::Ok);
        assert!(v > asym);
        assert_eq!(pb_sup_norm(h, &mut v), PbStatus::Ok);
        assert!((v - 209.0).abs() < 1e-9);
        // roots 9/2 and 10/9
        assert_eq!(pb_mahler_measure(h, &mut v), PbStatus::Ok);
        assert!((v - 18.0 * 4.5 * 10.0 / 9.0).abs() < 1e-9);
        pb_polynomial_free(h);
    }
}

#[test]
fn constructor_takes_split_parts() {
    let re = [1.0, 0.0, 1.0];
    let im = [0.0, 2.0, 0.0];
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(pb_polynomial_new(re.as_ptr(), im.as_ptr(), 3, &mut h), PbStatus::Ok);
        let mut v = 0.0;
        assert_eq!(pb_lp_norm(h, 2.0, &mut v), PbStatus::Ok);
        assert!((v - 6f64.sqrt()).abs() < 1e-10);
        pb_polynomial_free(h);
        assert_eq!(pb_polynomial_new(re.as_ptr(), ptr::null(), 3, &mut h), PbStatus::Ok);
        assert_eq!(pb_lp_norm(h, 2.0, &mut v), PbStatus::Ok);
        assert!((v - 2f64.sqrt()).abs() < 1e-10);
        pb_polynomial_free(h);
    }
}

#[test]
fn scalar_functions() {
    let mut v = 0.0;
    unsafe {
        assert_eq!(pb_bp_constant(1.0, &mut v), PbStatus::Ok);
        assert!((v - 2.0 / std::f64::consts::PI).abs() < 1e-12);
        assert_eq!(pb_ip_value(1.0, 0.0, &mut v), PbStatus::Ok);
        assert!((v - 1.0).abs() < 1e-12);
    }
    assert!((pb_crossover_threshold() - 1.157_638).abs() < 1e-6);
    assert!((pb_optimal_p_constant() - 1.980_291).abs() < 1e-6);
}

#[test]
fn report_json_round_trips() {
    let h = parse("90,-101,18");
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(pb_bound_report_json(h, 1.0, &mut s), PbStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        pb_string_free(s);
        pb_polynomial_free(h);
        assert!(text.contains("\"thm1_asym\""));
        assert!(text.contains("\"best\""));
    }
}

#[test]
fn errors_map_to_status_codes() {
    let mut h = ptr::null_mut();
    let mut v = 0.0;
    unsafe {
        let bad = CString::new("1,,x").unwrap();
        assert_eq!(pb_polynomial_parse(bad.as_ptr(), &mut h), PbStatus::Parse);
        assert!(!last_error().is_empty());
        assert_eq!(pb_polynomial_parse(ptr::null(), &mut h), PbStatus::NullPointer);
        assert!(last_error().contains("null"));
        assert_eq!(pb_sup_norm(ptr::null(), &mut v), PbStatus::NullPointer);
        let zeros = [0.0, 0.0];
        assert_eq!(pb_polynomial_new(zeros.as_ptr(), ptr::null(), 2, &mut h), PbStatus::InvalidInput);
        assert_eq!(pb_bp_constant(-1.0, &mut v), PbStatus::Range);

        let f = parse("1,0,1");
        assert_eq!(pb_thm1_sym(f, 3.0, &mut v), PbStatus::Range);
        assert_eq!(pb_lp_norm(f, 1.0, ptr::null_mut()), PbStatus::NullPointer);
        pb_polynomial_free(f);
        pb_polynomial_free(ptr::null_mut());
        pb_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_abi() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/polybound.h")).unwrap();
    assert!(header.contains("#ifndef POLYBOUND_H"));
    assert!(header.contains("typedef struct PbPolynomial PbPolynomial;"));
    for v in ["OK", "NULL_POINTER", "INVALID_INPUT", "PARSE", "RANGE", "NUMERICAL_FAILURE", "PANIC"] {
        assert!(header.contains(&format!("PB_STATUS_{v}")), "{v}");
    }
    for f in [
        "pb_polynomial_parse", "pb_polynomial_new", "pb_polynomial_free", "pb_polynomial_degree",
        "pb_lp_norm", "pb_sup_norm", "pb_mahler_measure", "pb_bp_constant", "pb_ip_value",
        "pb_thm1_sym", "pb_thm1_asym", "pb_bound_report_json", "pb_string_free", "pb_last_error",
        "pb_crossover_threshold", "pb_optimal_p_constant",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f}");
    }
}

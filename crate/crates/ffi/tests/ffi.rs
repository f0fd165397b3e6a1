use std::ffi::{CStr, CString};
use std::ptr;

use supercong_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    sc_string_free(s);
    out
}

#[test]
fn single_check() {
    let mut v = ScVerdict::Fail;
    let id = c("thm1.1/eq1.1");
    unsafe {
        assert_eq!(sc_check(id.as_ptr(), 5, 1, 2, &mut v), ScStatus::Ok);
        assert_eq!(v, ScVerdict::Pass);
        assert_eq!(
            sc_check(id.as_ptr(), 9, 1, 2, &mut v),
            ScStatus::NotOddPrime
        );
        assert!(CStr::from_ptr(sc_last_error())
            .to_str()
            .unwrap()
            .contains("9"));
        assert_eq!(
            sc_check(c("nope").as_ptr(), 5, 1, 2, &mut v),
            ScStatus::UnknownId
        );
        assert_eq!(
            sc_check(ptr::null(), 5, 1, 2, &mut v),
            ScStatus::NullPointer
        );
        assert_eq!(
            sc_check(id.as_ptr(), 5, 1, 2, ptr::null_mut()),
            ScStatus::NullPointer
        );
    }
}

#[test]
fn report_handle_round_trip() {
    let mut h: *mut ScReport = ptr::null_mut();
    unsafe {
        assert_eq!(
            sc_run_range(c("thm1.2/*").as_ptr(), 5, 40, 1, 2, &mut h),
            ScStatus::Ok
        );
        let (mut rows, mut fails) = (0usize, 0usize);
        assert_eq!(sc_report_counts(h, &mut rows, &mut fails), ScStatus::Ok);
        assert!(rows > 0);
        assert_eq!(fails, 0);
        let mut v = ScVerdict::Fail;
        assert_eq!(sc_report_verdict(h, 0, &mut v), ScStatus::Ok);
        assert_eq!(
            sc_report_verdict(h, rows, &mut v),
            ScStatus::InvalidArgument
        );
        let mut s = ptr::null_mut();
        assert_eq!(sc_report_render(h, ScFormat::Json, &mut s), ScStatus::Ok);
        let json = take(s);
        assert_eq!(json.lines().count(), rows);
        sc_report_free(h);
        sc_report_free(ptr::null_mut());
        assert_eq!(
            sc_report_counts(ptr::null(), &mut rows, &mut fails),
            ScStatus::NullPointer
        );
        assert_eq!(
            sc_run_range(c("*").as_ptr(), 50, 5, 1, 2, &mut h),
            ScStatus::InvalidArgument
        );
    }
}

#[test]
fn exceptional_primes_buffer() {
    let mut buf = [0u64; 4];
    let mut len = 0usize;
    unsafe {
        assert_eq!(
            sc_search_exceptional(1000, buf.as_mut_ptr(), buf.len(), &mut len),
            ScStatus::Ok
        );
        assert_eq!(&buf[..len], &[149, 241]);
        assert_eq!(
            sc_search_exceptional(1000, buf.as_mut_ptr(), 1, &mut len),
            ScStatus::BufferTooSmall
        );
        assert_eq!(len, 2);
    }
}

#[test]
fn constants_and_series() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            sc_reference_constant(c("K").as_ptr(), 30, &mut s),
            ScStatus::Ok
        );
        assert_eq!(take(s), "0.781302412896486296867187429624");
        assert_eq!(
            sc_reference_constant(c("e").as_ptr(), 30, &mut s),
            ScStatus::UnknownId
        );
        let mut v = ScVerdict::Fail;
        let mut j = ptr::null_mut();
        assert_eq!(
            sc_eval_series(c("zeilberger-pi2over6").as_ptr(), 30, 60, &mut v, &mut j),
            ScStatus::Ok
        );
        assert_eq!(v, ScVerdict::Pass);
        let j: serde_json::Value = serde_json::from_str(&take(j)).unwrap();
        assert_eq!(j["verdict"], "pass");
        assert_eq!(
            sc_eval_series(
                c("remark1.1/second").as_ptr(),
                10,
                50,
                &mut v,
                ptr::null_mut()
            ),
            ScStatus::SlowConvergence
        );
        assert!(!CStr::from_ptr(sc_version()).to_bytes().is_empty());
    }
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/supercong.h"))
        .unwrap();
    for f in [
        "sc_check",
        "sc_run_range",
        "sc_report_counts",
        "sc_report_verdict",
        "sc_report_render",
        "sc_report_free",
        "sc_search_exceptional",
        "sc_reference_constant",
        "sc_eval_series",
        "sc_string_free",
        "sc_last_error",
        "typedef struct ScReport ScReport",
    ] {
        assert!(h.contains(f), "{f}");
    }
}

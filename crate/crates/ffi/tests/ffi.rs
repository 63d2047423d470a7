use std::ffi::{CStr, CString};
use std::ptr;

use hlvertex_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    hlv_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = hlv_last_error_message();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

#[test]
fn kostka_round_trip() {
    unsafe {
        let mut p = ptr::null_mut();
        let st = hlv_kostka(
            c("2,1,1,0").as_ptr(),
            c("1,1,1,1").as_ptr(),
            c("2,2").as_ptr(),
            HlvMethod::Both,
            &mut p,
        );
        assert_eq!(st, HlvStatus::Ok);
        assert!(hlv_last_error_message().is_null());
        let mut s = ptr::null_mut();
        assert_eq!(hlv_poly_to_string(p, &mut s), HlvStatus::Ok);
        let text = take(s);
        let mut deg = 0;
        assert_eq!(hlv_poly_degree(p, &mut deg), HlvStatus::Ok);
        let mut lead = 0;
        assert_eq!(hlv_poly_coeff(p, deg, &mut lead), HlvStatus::Ok);
        assert_ne!(lead, 0, "{text}");
        let mut j = ptr::null_mut();
        assert_eq!(hlv_poly_to_json(p, &mut j), HlvStatus::Ok);
        assert!(take(j).starts_with('{'));
        hlv_poly_free(p);
    }
}

#[test]
fn blocked_and_flat_gamma_agree() {
    unsafe {
        let run = |gamma: &str| {
            let mut p = ptr::null_mut();
            let st = hlv_kostka(
                c("3,1,0,0").as_ptr(),
                c(gamma).as_ptr(),
                c("2,2").as_ptr(),
                HlvMethod::Vertex,
                &mut p,
            );
            assert_eq!(st, HlvStatus::Ok);
            let mut s = ptr::null_mut();
            hlv_poly_to_string(p, &mut s);
            hlv_poly_free(p);
            take(s)
        };
        assert_eq!(run("2,0,1,1"), run("2,0;1,1"));
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut p = ptr::null_mut();
        let st = hlv_kostka(
            c("1,x").as_ptr(),
            c("1").as_ptr(),
            c("1").as_ptr(),
            HlvMethod::Both,
            &mut p,
        );
        assert_eq!(st, HlvStatus::Parse);
        assert!(p.is_null());
        assert!(last_error().contains("parse"));

        let st = hlv_kostka(
            c("1,2").as_ptr(),
            c("1,2").as_ptr(),
            c("2").as_ptr(),
            HlvMethod::Both,
            &mut p,
        );
        assert_eq!(st, HlvStatus::Invalid);

        let st = hlv_kostka(
            ptr::null(),
            c("1").as_ptr(),
            c("1").as_ptr(),
            HlvMethod::Both,
            &mut p,
        );
        assert_eq!(st, HlvStatus::Null);

        let bad = [0xffu8, 0];
        let st = hlv_kostka(
            bad.as_ptr().cast(),
            c("1").as_ptr(),
            c("1").as_ptr(),
            HlvMethod::Both,
            &mut p,
        );
        assert_eq!(st, HlvStatus::Utf8);

        let mut len = 0;
        assert_eq!(hlv_opsum_len(ptr::null(), &mut len), HlvStatus::Null);
    }
}

#[test]
fn straighten_sign_and_weight() {
    unsafe {
        let mut sign = 7;
        let mut w = ptr::null_mut();
        assert_eq!(
            hlv_straighten(c("1,2").as_ptr(), &mut sign, &mut w),
            HlvStatus::Ok
        );
        assert_eq!(sign, 0);
        assert!(w.is_null());
        assert_eq!(
            hlv_straighten(c("0,2").as_ptr(), &mut sign, &mut w),
            HlvStatus::Ok
        );
        assert_eq!(sign, -1);
        assert_eq!(take(w), "1,1");
    }
}

#[test]
fn rewrite_swap_shift() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            hlv_rewrite(c("H[2,2]H[4,1]").as_ptr(), &mut s),
            HlvStatus::Ok
        );
        let mut len = 0;
        assert_eq!(hlv_opsum_len(s, &mut len), HlvStatus::Ok);
        assert_eq!(len, 5);
        let mut t = ptr::null_mut();
        assert_eq!(hlv_opsum_to_string(s, &mut t), HlvStatus::Ok);
        assert!(take(t).contains("(q^4-q^3) * H[4,4]H[1,0]"));
        let mut j = ptr::null_mut();
        assert_eq!(hlv_opsum_to_json(s, &mut j), HlvStatus::Ok);
        assert!(!take(j).is_empty());
        hlv_opsum_free(s);

        let mut s = ptr::null_mut();
        assert_eq!(hlv_swap(c("H[1,0]H[2]").as_ptr(), &mut s), HlvStatus::Ok);
        hlv_opsum_free(s);
        let mut s = ptr::null_mut();
        assert_eq!(
            hlv_shift(c("H[1,0]H[2]").as_ptr(), HlvDirection::LeftToRight, &mut s),
            HlvStatus::Ok
        );
        hlv_opsum_free(s);
        let mut s = ptr::null_mut();
        assert_eq!(hlv_rewrite(c("H[1").as_ptr(), &mut s), HlvStatus::Parse);
    }
}

#[test]
fn eval_on_schur() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(
            hlv_eval(c("H[1]").as_ptr(), c("").as_ptr(), &mut f),
            HlvStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(hlv_symfunc_to_string(f, &mut s), HlvStatus::Ok);
        assert_eq!(take(s), "s[1]");
        let mut j = ptr::null_mut();
        assert_eq!(hlv_symfunc_to_json(f, &mut j), HlvStatus::Ok);
        assert!(!take(j).is_empty());
        hlv_symfunc_free(f);
    }
}

#[test]
fn free_functions_accept_null() {
    unsafe {
        hlv_poly_free(ptr::null_mut());
        hlv_opsum_free(ptr::null_mut());
        hlv_symfunc_free(ptr::null_mut());
        hlv_string_free(ptr::null_mut());
    }
}

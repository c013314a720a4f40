use latdim_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn lattice(json: &str) -> *mut LatdimLattice {
    let json = CString::new(json).unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { latdim_lattice_from_json(json.as_ptr(), &mut t) }, LatdimStatus::Ok);
    assert!(!t.is_null());
    t
}

fn last_error() -> String {
    let p = latdim_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn chain_three_has_dimension_one() {
    let t = lattice(r#"{"generators": ["m"]}"#);
    unsafe {
        let mut n = 0usize;
        assert_eq!(latdim_lattice_element_count(t, &mut n), LatdimStatus::Ok);
        assert_eq!(n, 3);
        let mut k = 0i64;
        assert_eq!(latdim_lattice_kdim(t, &mut k), LatdimStatus::Ok);
        assert_eq!(k, 1);
        let mut o = LatdimOutcome::Unknown;
        assert_eq!(latdim_lattice_dim_leq(t, LatdimKind::Kdim, 0, &mut o), LatdimStatus::Ok);
        assert_eq!(o, LatdimOutcome::Fails);
        assert_eq!(latdim_lattice_dim_leq(t, LatdimKind::Kdim, 1, &mut o), LatdimStatus::Ok);
        assert_eq!(o, LatdimOutcome::Holds);
        assert_eq!(latdim_lattice_dim_leq(t, LatdimKind::Hdim, 0, &mut o), LatdimStatus::Ok);
        assert_eq!(o, LatdimOutcome::Holds);
        latdim_lattice_free(t);
    }
}

#[test]
fn spectrum_is_json() {
    let t = lattice(r#"{"generators": ["m"]}"#);
    let what = CString::new("spec").unwrap();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(latdim_lattice_spectrum_json(t, what.as_ptr(), &mut s), LatdimStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(v["points"].as_array().unwrap().len(), 2);
        assert_eq!(v["order"].as_array().unwrap().len(), 1);
        latdim_string_free(s);
        let bad = CString::new("nope").unwrap();
        assert_ne!(latdim_lattice_spectrum_json(t, bad.as_ptr(), &mut s), LatdimStatus::Ok);
        latdim_lattice_free(t);
    }
}

#[test]
fn errors_set_status_and_message() {
    let json = CString::new("{not json").unwrap();
    let mut t = ptr::null_mut();
    unsafe {
        assert_eq!(latdim_lattice_from_json(json.as_ptr(), &mut t), LatdimStatus::Parse);
        assert!(t.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(latdim_lattice_from_json(ptr::null(), &mut t), LatdimStatus::NullPointer);
        assert!(last_error().contains("NULL"));
        let mut n = 0usize;
        assert_eq!(latdim_lattice_element_count(ptr::null(), &mut n), LatdimStatus::NullPointer);
        let bytes = [0xffu8, 0];
        let mut r = ptr::null_mut();
        assert_eq!(latdim_ring_parse(bytes.as_ptr().cast(), &mut r), LatdimStatus::InvalidUtf8);
        latdim_lattice_free(ptr::null_mut());
        latdim_ring_free(ptr::null_mut());
        latdim_string_free(ptr::null_mut());
    }
}

#[test]
fn rings() {
    let mut o = LatdimOutcome::Unknown;
    for (desc, kind, leq, want) in [
        ("zmod:12", LatdimKind::Kdim, 0, LatdimOutcome::Holds),
        ("int", LatdimKind::Kdim, 0, LatdimOutcome::Fails),
        ("int", LatdimKind::Jdim, 0, LatdimOutcome::Unknown),
        ("poly:gf:5", LatdimKind::Kdim, 0, LatdimOutcome::Fails),
        ("gf:5", LatdimKind::Hdim, 0, LatdimOutcome::Holds),
        ("zmod:30", LatdimKind::Jdim, 0, LatdimOutcome::Holds),
    ] {
        let d = CString::new(desc).unwrap();
        let mut r = ptr::null_mut();
        unsafe {
            assert_eq!(latdim_ring_parse(d.as_ptr(), &mut r), LatdimStatus::Ok, "{desc}");
            assert_eq!(latdim_ring_dim_leq(r, kind, leq, 7, &mut o), LatdimStatus::Ok, "{desc}");
            latdim_ring_free(r);
        }
        assert_eq!(o, want, "{desc} {kind:?} <= {leq}");
    }
    let d = CString::new("zmod:0x").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { latdim_ring_parse(d.as_ptr(), &mut r) }, LatdimStatus::Invalid);
}

#[test]
fn check_and_version() {
    let mut passed = 0;
    let s = CString::new("duality").unwrap();
    assert_eq!(unsafe { latdim_check(s.as_ptr(), 1, &mut passed) }, LatdimStatus::Ok);
    assert_eq!(passed, 1);
    let v = unsafe { CStr::from_ptr(latdim_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

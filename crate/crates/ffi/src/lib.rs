//! C ABI for latdim. Objects cross the boundary as opaque handles owned by
//! the caller and released with the matching `_free` function. Every call
//! returns a `LatdimStatus`; on failure `latdim_last_error` describes it.

use latdim::check::{run_suite, CheckOptions, Suite};
use latdim::commands::{ring_verdict, spectrum_points, DimKind, RingDimArgs, SpecWhat};
use latdim::dimension::{hdim_leq, jdim_leq, kdim_leq, DimOptions, Outcome};
use latdim::ring::{AnyRing, RingBudget, RingOracle, RingStrategy};
use latdim::spectra::{kdim_oracle, spectrum_json};
use latdim::{Error, Lattice};
use libc::c_char;
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// A finitely presented distributive lattice.
pub struct LatdimLattice(Lattice);

/// A ring parsed from a descriptor.
pub struct LatdimRing(AnyRing);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatdimStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Invalid = 4,
    CeilingExceeded = 5,
    Ring = 6,
    Undecided = 7,
    Io = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatdimKind {
    Kdim = 0,
    Jdim = 1,
    Hdim = 2,
}

/// Values match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatdimOutcome {
    Holds = 0,
    Fails = 1,
    Unknown = 3,
}

impl From<Outcome> for LatdimOutcome {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Holds => LatdimOutcome::Holds,
            Outcome::Fails => LatdimOutcome::Fails,
            Outcome::Unknown => LatdimOutcome::Unknown,
        }
    }
}

impl From<LatdimKind> for DimKind {
    fn from(k: LatdimKind) -> Self {
        match k {
            LatdimKind::Kdim => DimKind::Kdim,
            LatdimKind::Jdim => DimKind::Jdim,
            LatdimKind::Hdim => DimKind::Hdim,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LatdimStatus {
    match e {
        Error::Parse(_) | Error::DuplicateLabel(_) | Error::UnknownSymbol(_) => LatdimStatus::Parse,
        Error::CeilingExceeded(_) | Error::TooManyGenerators { .. } => LatdimStatus::CeilingExceeded,
        Error::Ring(_) => LatdimStatus::Ring,
        Error::Unknown(_) => LatdimStatus::Undecided,
        Error::Io(_) => LatdimStatus::Io,
        _ => LatdimStatus::Invalid,
    }
}

/// Runs `body`, turning errors and panics into a status and a message.
fn guard(body: impl FnOnce() -> Result<(), (LatdimStatus, String)>) -> LatdimStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            LatdimStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            LatdimStatus::Panic
        }
    }
}

fn lib<T>(r: latdim::Result<T>) -> Result<T, (LatdimStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (LatdimStatus, String)> {
    if p.is_null() {
        return Err((LatdimStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (LatdimStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, (LatdimStatus, String)> {
    p.as_ref().ok_or_else(|| (LatdimStatus::NullPointer, format!("{what} is NULL")))
}

fn out_arg<T>(p: *mut T, what: &str) -> Result<(), (LatdimStatus, String)> {
    if p.is_null() {
        Err((LatdimStatus::NullPointer, format!("{what} is NULL")))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn latdim_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn latdim_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn latdim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a presentation in the JSON format read by the CLI.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_from_json(json: *const c_char, out: *mut *mut LatdimLattice) -> LatdimStatus {
    guard(|| {
        out_arg(out, "out")?;
        let t = lib(Lattice::from_json(str_arg(json, "json")?))?;
        *out = Box::into_raw(Box::new(LatdimLattice(t)));
        Ok(())
    })
}

/// # Safety
/// `t` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_free(t: *mut LatdimLattice) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of distinct elements.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_element_count(t: *const LatdimLattice, out: *mut usize) -> LatdimStatus {
    guard(|| {
        let t = ref_arg(t, "lattice")?;
        out_arg(out, "out")?;
        *out = lib(t.0.enumerate_elements())?.len();
        Ok(())
    })
}

/// Decides `dim ≤ leq` for the given kind.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_dim_leq(t: *const LatdimLattice, kind: LatdimKind, leq: i64, out: *mut LatdimOutcome) -> LatdimStatus {
    guard(|| {
        let t = ref_arg(t, "lattice")?;
        out_arg(out, "out")?;
        let opts = DimOptions::default();
        let v = lib(match kind {
            LatdimKind::Kdim => kdim_leq(&t.0, leq, &opts),
            LatdimKind::Jdim => jdim_leq(&t.0, leq, &opts),
            LatdimKind::Hdim => hdim_leq(&t.0, leq, &opts),
        })?;
        *out = v.outcome.into();
        Ok(())
    })
}

/// Krull dimension from the prime spectrum; -1 for the trivial lattice.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_kdim(t: *const LatdimLattice, out: *mut i64) -> LatdimStatus {
    guard(|| {
        let t = ref_arg(t, "lattice")?;
        out_arg(out, "out")?;
        *out = lib(kdim_oracle(&t.0))?;
        Ok(())
    })
}

/// Spectrum as JSON `{"points": [...], "order": [[i, j], ...]}`. `what` is
/// one of spec, max, min, jspec, Jspec. Free the result with
/// `latdim_string_free`.
///
/// # Safety
/// `t` must be a live handle, `what` a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_lattice_spectrum_json(t: *const LatdimLattice, what: *const c_char, out: *mut *mut c_char) -> LatdimStatus {
    guard(|| {
        let t = ref_arg(t, "lattice")?;
        out_arg(out, "out")?;
        let what: SpecWhat = lib(str_arg(what, "what")?.parse())?;
        let (host, pts) = lib(spectrum_points(&t.0, what))?;
        let json = serde_json::to_string(&lib(spectrum_json(&host, &pts))?).map_err(|e| (LatdimStatus::Invalid, e.to_string()))?;
        *out = into_c_string(json);
        Ok(())
    })
}

/// Parses `int`, `zmod:<n>`, `gf:<p>`, `poly:gf:<p>` or `table:<file>`.
///
/// # Safety
/// `desc` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_ring_parse(desc: *const c_char, out: *mut *mut LatdimRing) -> LatdimStatus {
    guard(|| {
        out_arg(out, "out")?;
        let r = lib(AnyRing::parse(str_arg(desc, "desc")?))?;
        *out = Box::into_raw(Box::new(LatdimRing(r)));
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn latdim_ring_free(r: *mut LatdimRing) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

fn ring_outcome<R: RingOracle>(r: &R, kind: LatdimKind, leq: i64, budget: RingBudget) -> latdim::Result<LatdimOutcome> {
    let args = RingDimArgs { ring: r.describe(), kind: kind.into(), leq, strategy: RingStrategy::Witness, budget };
    Ok(match ring_verdict(r, &args)?.outcome.as_str() {
        "holds" => LatdimOutcome::Holds,
        "fails" => LatdimOutcome::Fails,
        _ => LatdimOutcome::Unknown,
    })
}

/// Decides `dim ≤ leq` for a ring. Searches over infinite rings use the
/// default budget with the given seed and may answer `Unknown`.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_ring_dim_leq(r: *const LatdimRing, kind: LatdimKind, leq: i64, seed: u64, out: *mut LatdimOutcome) -> LatdimStatus {
    guard(|| {
        let r = ref_arg(r, "ring")?;
        out_arg(out, "out")?;
        let budget = RingBudget { seed, ..RingBudget::default() };
        *out = lib(match &r.0 {
            AnyRing::Int(x) => ring_outcome(x, kind, leq, budget),
            AnyRing::Poly(x) => ring_outcome(x, kind, leq, budget),
            AnyRing::Table(x) => ring_outcome(x, kind, leq, budget),
        })?;
        Ok(())
    })
}

/// Runs one check suite (oracle, boundary, duality, ring-transport) with
/// default sizes. `passed` receives 1 when every property holds.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn latdim_check(suite: *const c_char, seed: u64, passed: *mut i32) -> LatdimStatus {
    guard(|| {
        out_arg(passed, "passed")?;
        let suite: Suite = lib(str_arg(suite, "suite")?.parse())?;
        let o = run_suite(suite, &CheckOptions { seed, ..CheckOptions::default() });
        *passed = o.ok() as i32;
        Ok(())
    })
}

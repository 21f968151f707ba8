//! C interface to `ordtop`.
//!
//! Structures are opaque handles created from structure-file JSON. Every
//! fallible call returns an [`OrdtopStatus`]; on failure a message is
//! available from [`ordtop_last_error`] on the same thread. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`ordtop_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ordtop::io::{self, StructureFile};
use ordtop::search::{self, canonical_form, EnumSpec};
use ordtop::{Error, Kind, PredicateExpr, Structure};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdtopStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON or predicate expression.
    Parse = 3,
    /// Well-formed input that violates an axiom.
    InvalidStructure = 4,
    UnknownPredicate = 5,
    NotApplicable = 6,
    CapacityExceeded = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdtopTruth {
    False = 0,
    True = 1,
    Unevaluated = 2,
}

/// Opaque handle to a validated structure.
pub struct OrdtopStructure {
    structure: Structure,
    discrete_default: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> OrdtopStatus {
    match e {
        Error::Parse { .. } => OrdtopStatus::Parse,
        Error::UnknownPredicate { .. } => OrdtopStatus::UnknownPredicate,
        Error::NotApplicable { .. } => OrdtopStatus::NotApplicable,
        e if e.is_resource_cap() => OrdtopStatus::CapacityExceeded,
        _ => OrdtopStatus::InvalidStructure,
    }
}

struct Fail(OrdtopStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> OrdtopStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrdtopStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            OrdtopStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(OrdtopStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(OrdtopStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn handle<'a>(p: *const OrdtopStructure) -> Result<&'a OrdtopStructure, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(OrdtopStatus::NullArgument, "structure is null".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(
            OrdtopStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).expect("no interior nul");
    if out.is_null() {
        return Err(Fail(
            OrdtopStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    out.write(c.into_raw());
    Ok(())
}

/// Parses and validates a structure file.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ordtop_structure_from_json(
    json: *const c_char,
    out: *mut *mut OrdtopStructure,
) -> OrdtopStatus {
    guard(|| {
        let loaded = io::load(text(json, "json")?)?;
        let boxed = Box::new(OrdtopStructure {
            structure: loaded.structure,
            discrete_default: loaded.discrete_default,
        });
        put(out, Box::into_raw(boxed))
    })
}

/// # Safety
/// `s` must be null or a handle from [`ordtop_structure_from_json`] that
/// has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ordtop_structure_free(s: *mut OrdtopStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of points, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ordtop_structure_size(s: *const OrdtopStructure) -> usize {
    s.as_ref().map_or(0, |s| s.structure.n())
}

/// True if the file had no `opens` and the discrete topology was used.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ordtop_structure_discrete_default(s: *const OrdtopStructure) -> bool {
    s.as_ref().is_some_and(|s| s.discrete_default)
}

/// Evaluates a predicate expression.
///
/// # Safety
/// `s` must be a live handle, `expr` a nul-terminated string and `out` a
/// writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ordtop_evaluate(
    s: *const OrdtopStructure,
    expr: *const c_char,
    out: *mut OrdtopTruth,
) -> OrdtopStatus {
    guard(|| {
        let s = handle(s)?;
        let expr = PredicateExpr::parse(text(expr, "expr")?)?;
        let subject = s.structure.subject().ok_or_else(|| {
            Fail(
                OrdtopStatus::NotApplicable,
                "structure has no topology".into(),
            )
        })?;
        let truth = match expr.evaluate(subject)? {
            Some(true) => OrdtopTruth::True,
            Some(false) => OrdtopTruth::False,
            None => OrdtopTruth::Unevaluated,
        };
        put(out, truth)
    })
}

/// Canonical structure-file JSON.
///
/// # Safety
/// `s` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ordtop_structure_to_json(
    s: *const OrdtopStructure,
    out: *mut *mut c_char,
) -> OrdtopStatus {
    guard(|| {
        let s = handle(s)?;
        put_string(out, StructureFile::from_structure(&s.structure)?.to_json())
    })
}

/// Isomorphism-invariant form as lowercase hex.
///
/// # Safety
/// `s` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ordtop_canonical_form(
    s: *const OrdtopStructure,
    out: *mut *mut c_char,
) -> OrdtopStatus {
    guard(|| {
        let s = handle(s)?;
        put_string(out, canonical_form(&s.structure)?.to_hex())
    })
}

/// DOT digraph of the order, or of the specialization preorder.
///
/// # Safety
/// `s` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ordtop_structure_to_dot(
    s: *const OrdtopStructure,
    specialization: bool,
    out: *mut *mut c_char,
) -> OrdtopStatus {
    guard(|| {
        let s = handle(s)?;
        put_string(out, io::to_dot(&s.structure, specialization)?)
    })
}

/// Counts structures of a kind (`topology`, `poset`, `semilattice`,
/// `topo_poset`, `topo_semilattice`, `hom_pair`, `multimorphism_pair`) on
/// `n` points; pairs use `n` for both carriers.
///
/// # Safety
/// `kind` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ordtop_enumerate_count(
    kind: *const c_char,
    n: usize,
    modulo_iso: bool,
    out: *mut u64,
) -> OrdtopStatus {
    guard(|| {
        let kind: Kind = text(kind, "kind")?.parse()?;
        let spec = EnumSpec::new(kind, n).modulo_iso(modulo_iso);
        put(out, search::count(&spec, 1)?)
    })
}

/// # Safety
/// `p` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ordtop_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ordtop_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

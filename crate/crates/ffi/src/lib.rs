//! C interface. Handles are opaque and owned by the caller; every handle
//! returned through an out-pointer must be released with its `_free`
//! function. Fallible calls return a [`MagmaStatus`]; on failure the message
//! is available from [`magma_last_error`] on the same thread.
//!
//! No call unwinds across the boundary: a panic becomes
//! `MAGMA_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use magma_core::eval::{self, EvalErrorKind, Session, Value};
use magma_core::kernel;
use magma_core::{DomainKind, Magma, MagmaError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MagmaStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    UnknownDomain = 3,
    ParseError = 4,
    EvalError = 5,
    TypeError = 6,
    KindMismatch = 7,
    DomainMismatch = 8,
    SeedsUnavailable = 9,
    NotAPair = 10,
    Panic = 11,
}

/// An evaluation session: a domain, its seed atoms and its bindings.
pub struct MagmaSession {
    inner: Session,
}

/// An immutable canonical magma.
pub struct MagmaMagma {
    inner: Magma,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl std::fmt::Display) {
    let text = CString::new(msg.to_string().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

type Fallible<T> = Result<T, (MagmaStatus, String)>;

fn fail<T>(status: MagmaStatus, msg: impl std::fmt::Display) -> Fallible<T> {
    Err((status, msg.to_string()))
}

fn from_magma_error(e: &MagmaError) -> MagmaStatus {
    match e {
        MagmaError::KindMismatch => MagmaStatus::KindMismatch,
        MagmaError::DomainMismatch(..) => MagmaStatus::DomainMismatch,
        MagmaError::SeedsUnavailable(_) => MagmaStatus::SeedsUnavailable,
        MagmaError::NotAPair(_) => MagmaStatus::NotAPair,
        _ => MagmaStatus::EvalError,
    }
}

fn lift<T>(r: Result<T, MagmaError>) -> Fallible<T> {
    r.map_err(|e| (from_magma_error(&e), e.to_string()))
}

/// Runs `body`, records any failure, and writes the result through `out`.
fn guard<T>(out: *mut T, body: impl FnOnce() -> Fallible<T>) -> MagmaStatus {
    if out.is_null() {
        set_error("null out-pointer");
        return MagmaStatus::NullArgument;
    }
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(v)) => {
            // SAFETY: checked non-null; the caller provides writable storage.
            unsafe { out.write(v) };
            MagmaStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MagmaStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Fallible<&'a str> {
    if p.is_null() {
        return fail(MagmaStatus::NullArgument, "null string");
    }
    CStr::from_ptr(p).to_str().or_else(|_| fail(MagmaStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn borrow<'a, T>(p: *const T) -> Fallible<&'a T> {
    p.as_ref().ok_or((MagmaStatus::NullArgument, "null handle".to_string()))
}

fn boxed(m: Magma) -> *mut MagmaMagma {
    Box::into_raw(Box::new(MagmaMagma { inner: m }))
}

fn c_string(s: String) -> Fallible<*mut c_char> {
    CString::new(s).map(CString::into_raw).or_else(|_| fail(MagmaStatus::EvalError, "output contains a nul byte"))
}

fn from_eval_error(e: &eval::Error) -> MagmaStatus {
    match e {
        eval::Error::Parse(_) => MagmaStatus::ParseError,
        eval::Error::Eval(e) => match &e.kind {
            EvalErrorKind::Magma(m) => from_magma_error(m),
            EvalErrorKind::Type { .. } => MagmaStatus::TypeError,
            _ => MagmaStatus::EvalError,
        },
    }
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn magma_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// `domain` is `tag`, `plane` or `qdup`.
///
/// # Safety
/// `domain` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn magma_session_new(domain: *const c_char, out: *mut *mut MagmaSession) -> MagmaStatus {
    guard(out, || {
        let name = text(domain)?;
        let kind = DomainKind::from_name(name)
            .ok_or_else(|| (MagmaStatus::UnknownDomain, format!("unknown domain {name:?}")))?;
        Ok(Box::into_raw(Box::new(MagmaSession { inner: Session::new(kind) })))
    })
}

/// # Safety
/// `session` must come from [`magma_session_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn magma_session_free(session: *mut MagmaSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Evaluates every expression in `source`; `(let ...)` bindings persist in
/// the session. The printed values, one per line, go to `out`; release it
/// with [`magma_string_free`].
///
/// # Safety
/// `session` must be a live session handle, `source` a nul-terminated
/// string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn magma_eval(
    session: *mut MagmaSession,
    source: *const c_char,
    out: *mut *mut c_char,
) -> MagmaStatus {
    guard(out, || {
        let s = session.as_mut().ok_or((MagmaStatus::NullArgument, "null handle".to_string()))?;
        let values = s.inner.eval_str(text(source)?).map_err(|e| (from_eval_error(&e), e.to_string()))?;
        let lines: Vec<String> = values.iter().map(Value::to_string).collect();
        c_string(lines.join("\n"))
    })
}

/// Evaluates one expression that must produce a magma.
///
/// # Safety
/// As for [`magma_eval`].
#[no_mangle]
pub unsafe extern "C" fn magma_parse(
    session: *mut MagmaSession,
    source: *const c_char,
    out: *mut *mut MagmaMagma,
) -> MagmaStatus {
    guard(out, || {
        let s = session.as_mut().ok_or((MagmaStatus::NullArgument, "null handle".to_string()))?;
        let mut values = s.inner.eval_str(text(source)?).map_err(|e| (from_eval_error(&e), e.to_string()))?;
        match (values.pop(), values.is_empty()) {
            (Some(Value::Magma(m)), true) => Ok(boxed(m)),
            (Some(v), true) => fail(MagmaStatus::TypeError, format!("expected a magma, got {v}")),
            _ => fail(MagmaStatus::ParseError, "expected exactly one expression"),
        }
    })
}

/// # Safety
/// `m` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn magma_free(m: *mut MagmaMagma) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle; `out` writable. Release the string with
/// [`magma_string_free`].
#[no_mangle]
pub unsafe extern "C" fn magma_to_string(m: *const MagmaMagma, out: *mut *mut c_char) -> MagmaStatus {
    guard(out, || c_string(borrow(m)?.inner.to_string()))
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn magma_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `x ⊆ y`.
///
/// # Safety
/// Both handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn magma_subset(x: *const MagmaMagma, y: *const MagmaMagma, out: *mut bool) -> MagmaStatus {
    guard(out, || Ok(kernel::subset(&borrow(x)?.inner, &borrow(y)?.inner)))
}

/// # Safety
/// Both handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn magma_equal(x: *const MagmaMagma, y: *const MagmaMagma, out: *mut bool) -> MagmaStatus {
    guard(out, || Ok(kernel::equal(&borrow(x)?.inner, &borrow(y)?.inner)))
}

/// `x` is an element of `y`.
///
/// # Safety
/// Both handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn magma_member(x: *const MagmaMagma, y: *const MagmaMagma, out: *mut bool) -> MagmaStatus {
    guard(out, || Ok(kernel::member_magma(&borrow(x)?.inner, &borrow(y)?.inner)))
}

/// # Safety
/// `x` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn magma_pr(x: *const MagmaMagma, out: *mut *mut MagmaMagma) -> MagmaStatus {
    guard(out, || Ok(boxed(kernel::pr(&borrow(x)?.inner))))
}

/// Fails with `MAGMA_STATUS_KIND_MISMATCH` when one side is an atom-ideal
/// and the other a magma-ideal.
///
/// # Safety
/// Both handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn magma_union(
    x: *const MagmaMagma,
    y: *const MagmaMagma,
    out: *mut *mut MagmaMagma,
) -> MagmaStatus {
    guard(out, || lift(kernel::union(&borrow(x)?.inner, &borrow(y)?.inner)).map(boxed))
}

/// Writes null when the intersection is empty.
///
/// # Safety
/// Both handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn magma_intersect(
    x: *const MagmaMagma,
    y: *const MagmaMagma,
    out: *mut *mut MagmaMagma,
) -> MagmaStatus {
    guard(out, || Ok(kernel::intersect(&borrow(x)?.inner, &borrow(y)?.inner).map_or(ptr::null_mut(), boxed)))
}

/// Level `omega * omega_coeff + finite`.
///
/// # Safety
/// `x` must be live; both out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn magma_level(x: *const MagmaMagma, omega_coeff: *mut u64, finite: *mut u64) -> MagmaStatus {
    if finite.is_null() {
        set_error("null out-pointer");
        return MagmaStatus::NullArgument;
    }
    guard(omega_coeff, || {
        let level = kernel::level(&borrow(x)?.inner);
        finite.write(level.r);
        Ok(level.q)
    })
}

unsafe fn seeds<'a>(session: *const MagmaSession) -> Fallible<&'a magma_core::Seeds> {
    let s = borrow(session)?;
    s.inner
        .seeds()
        .ok_or_else(|| (MagmaStatus::SeedsUnavailable, MagmaError::SeedsUnavailable(s.inner.domain()).to_string()))
}

/// The pair of `x` and `y` over the session's seed atoms.
///
/// # Safety
/// All handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn magma_pair(
    session: *const MagmaSession,
    x: *const MagmaMagma,
    y: *const MagmaMagma,
    out: *mut *mut MagmaMagma,
) -> MagmaStatus {
    guard(out, || {
        let s = seeds(session)?;
        lift(s.pair(&borrow(x)?.inner, &borrow(y)?.inner)).map(|p| boxed(p.whole))
    })
}

/// # Safety
/// Both handles must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn magma_is_pair(
    session: *const MagmaSession,
    m: *const MagmaMagma,
    out: *mut bool,
) -> MagmaStatus {
    guard(out, || Ok(seeds(session)?.is_pair(&borrow(m)?.inner)))
}

/// Both components of a pair; fails with `MAGMA_STATUS_NOT_A_PAIR`
/// otherwise. On failure neither out-pointer is written.
///
/// # Safety
/// Both handles must be live; both out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn magma_unpair(
    session: *const MagmaSession,
    p: *const MagmaMagma,
    first: *mut *mut MagmaMagma,
    second: *mut *mut MagmaMagma,
) -> MagmaStatus {
    if second.is_null() {
        set_error("null out-pointer");
        return MagmaStatus::NullArgument;
    }
    guard(first, || {
        let (x, y) = lift(seeds(session)?.extract_pair(&borrow(p)?.inner))?;
        second.write(boxed(y));
        Ok(boxed(x))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_statuses() {
        assert_eq!(from_magma_error(&MagmaError::KindMismatch), MagmaStatus::KindMismatch);
        assert_eq!(from_magma_error(&MagmaError::NotAPair("x".into())), MagmaStatus::NotAPair);
        assert_eq!(from_magma_error(&MagmaError::EmptyGenerators), MagmaStatus::EvalError);
    }

    #[test]
    fn last_error_is_per_thread() {
        set_error("here");
        std::thread::spawn(|| {
            let msg = unsafe { CStr::from_ptr(magma_last_error()) };
            assert!(msg.to_bytes().is_empty());
        })
        .join()
        .unwrap();
        assert_eq!(unsafe { CStr::from_ptr(magma_last_error()) }.to_str(), Ok("here"));
    }

    #[test]
    fn panics_become_a_status() {
        let mut out = 0u8;
        let status = guard(&mut out, || -> Fallible<u8> { panic!("boom") });
        assert_eq!(status, MagmaStatus::Panic);
        assert_eq!(out, 0);
    }
}

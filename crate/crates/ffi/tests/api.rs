use std::ffi::{CStr, CString};
use std::ptr;

use magma_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(magma_last_error()) }.to_str().unwrap().to_string()
}

struct Session(*mut MagmaSession);

impl Session {
    fn new(domain: &str) -> Session {
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { magma_session_new(c(domain).as_ptr(), &mut s) }, MagmaStatus::Ok);
        Session(s)
    }

    fn parse(&self, text: &str) -> Result<Handle, MagmaStatus> {
        let mut m = ptr::null_mut();
        match unsafe { magma_parse(self.0, c(text).as_ptr(), &mut m) } {
            MagmaStatus::Ok => Ok(Handle(m)),
            status => Err(status),
        }
    }

    fn eval(&self, text: &str) -> Result<String, MagmaStatus> {
        let mut out = ptr::null_mut();
        match unsafe { magma_eval(self.0, c(text).as_ptr(), &mut out) } {
            MagmaStatus::Ok => Ok(take_string(out)),
            status => Err(status),
        }
    }
}

impl Drop for Session {
    fn drop(&mut self) {
        unsafe { magma_session_free(self.0) }
    }
}

#[derive(Debug)]
struct Handle(*mut MagmaMagma);

impl Handle {
    fn text(&self) -> String {
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { magma_to_string(self.0, &mut out) }, MagmaStatus::Ok);
        take_string(out)
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { magma_free(self.0) }
    }
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { magma_string_free(p) };
    s
}

fn predicate(
    f: unsafe extern "C" fn(*const MagmaMagma, *const MagmaMagma, *mut bool) -> MagmaStatus,
    x: &Handle,
    y: &Handle,
) -> bool {
    let mut out = false;
    assert_eq!(unsafe { f(x.0, y.0, &mut out) }, MagmaStatus::Ok);
    out
}

#[test]
fn kernel_operations() {
    let s = Session::new("tag");
    let x = s.parse("(ai (at tag 0 3) (at tag 1 2))").unwrap();
    let small = s.parse("(ai (at tag 0 1))").unwrap();
    assert!(predicate(magma_subset, &small, &x));
    assert!(!predicate(magma_subset, &x, &small));
    assert!(!predicate(magma_equal, &x, &small));

    let mut p = ptr::null_mut();
    assert_eq!(unsafe { magma_pr(x.0, &mut p) }, MagmaStatus::Ok);
    let p = Handle(p);
    assert_eq!(p.text(), "(mi (ai (at tag 0 3) (at tag 1 2)))");
    assert!(predicate(magma_member, &small, &p));

    let (mut q, mut r) = (0u64, 0u64);
    assert_eq!(unsafe { magma_level(p.0, &mut q, &mut r) }, MagmaStatus::Ok);
    assert_eq!((q, r), (0, 2));

    let mut u = ptr::null_mut();
    assert_eq!(unsafe { magma_union(x.0, p.0, &mut u) }, MagmaStatus::KindMismatch);
    assert!(u.is_null());
    assert!(last_error().contains("kind mismatch"));

    let other = s.parse("(ai (at tag 5 0))").unwrap();
    let mut i = ptr::null_mut::<MagmaMagma>();
    assert_eq!(unsafe { magma_intersect(x.0, other.0, &mut i) }, MagmaStatus::Ok);
    assert!(i.is_null());
    assert_eq!(unsafe { magma_intersect(x.0, small.0, &mut i) }, MagmaStatus::Ok);
    assert_eq!(Handle(i).text(), "(ai (at tag 0 1))");
}

#[test]
fn pairs_round_trip() {
    let s = Session::new("plane");
    let x = s.parse("(ai (at plane 2 1))").unwrap();
    let y = s.parse("(ai (at plane 3 3))").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { magma_pair(s.0, x.0, y.0, &mut p) }, MagmaStatus::Ok);
    let p = Handle(p);
    let mut is = false;
    assert_eq!(unsafe { magma_is_pair(s.0, p.0, &mut is) }, MagmaStatus::Ok);
    assert!(is);
    let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { magma_unpair(s.0, p.0, &mut a, &mut b) }, MagmaStatus::Ok);
    let (a, b) = (Handle(a), Handle(b));
    assert!(predicate(magma_equal, &a, &x) && predicate(magma_equal, &b, &y));

    let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { magma_unpair(s.0, x.0, &mut a, &mut b) }, MagmaStatus::NotAPair);
    assert!(a.is_null() && b.is_null());
}

#[test]
fn sessions_keep_bindings_and_report_errors() {
    let s = Session::new("tag");
    assert_eq!(s.eval("(let x (ai (at tag 0 3)))\n(subset? (pr x) (pr (pr x)))").unwrap(), "(ai (at tag 0 3))\nfalse");
    assert_eq!(s.parse("x").unwrap().text(), "(ai (at tag 0 3))");
    assert_eq!(s.eval("(pr").unwrap_err(), MagmaStatus::ParseError);
    assert_eq!(s.eval("(bogus 1)").unwrap_err(), MagmaStatus::EvalError);
    assert!(last_error().contains("bogus"));
    assert_eq!(s.parse("(subset? x x)").unwrap_err(), MagmaStatus::TypeError);
    assert_eq!(s.parse("(ai (at plane 0 0))").unwrap_err(), MagmaStatus::DomainMismatch);

    let q = Session::new("qdup");
    let x = q.parse("(ai (at qdup 1/2 0))").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { magma_pair(q.0, x.0, x.0, &mut p) }, MagmaStatus::SeedsUnavailable);
}

#[test]
fn null_and_bad_arguments() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { magma_session_new(c("reals").as_ptr(), &mut s) }, MagmaStatus::UnknownDomain);
    assert_eq!(unsafe { magma_session_new(ptr::null(), &mut s) }, MagmaStatus::NullArgument);
    assert_eq!(unsafe { magma_session_new(c("tag").as_ptr(), ptr::null_mut()) }, MagmaStatus::NullArgument);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { magma_session_new(bad.as_ptr().cast(), &mut s) }, MagmaStatus::InvalidUtf8);
    let mut out = false;
    assert_eq!(unsafe { magma_subset(ptr::null(), ptr::null(), &mut out) }, MagmaStatus::NullArgument);
    unsafe {
        magma_free(ptr::null_mut());
        magma_session_free(ptr::null_mut());
        magma_string_free(ptr::null_mut());
    }
}

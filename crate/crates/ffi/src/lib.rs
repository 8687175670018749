//! C ABI for `classtower`.
//!
//! Every fallible function returns a [`CtStatus`] and writes its result
//! through an out-pointer. Strings returned to C are owned by the caller and
//! must be released with [`ct_string_free`]; group handles with
//! [`ct_group_free`]. No panic crosses the boundary.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use classtower::pgroup::gamma::lemma5_kernel;
use classtower::pgroup::{abelian_type_of, abelianization, derived_subgroup, trivial, whole, GroupElement, GroupParams, PGroup};
use classtower::tower::{self, FieldKind};
use classtower::Error;

/// Status codes. `CT_OK` is zero; everything else is an error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtStatus {
    CtOk = 0,
    CtNullPointer = 1,
    CtInvalidArgument = 2,
    CtNotFundamental = 3,
    CtNotImaginary = 4,
    CtUnsupportedKind = 5,
    CtBoundExceeded = 6,
    CtStructureMismatch = 7,
    CtBufferTooSmall = 8,
    CtInternal = 9,
    CtPanic = 10,
}

impl From<&Error> for CtStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::NotFundamental(_) | Error::SquareDiscriminant(_) => CtStatus::CtNotFundamental,
            Error::NotImaginary(_) => CtStatus::CtNotImaginary,
            Error::UnsupportedKind(_) => CtStatus::CtUnsupportedKind,
            Error::BoundExceeded { .. } => CtStatus::CtBoundExceeded,
            Error::StructureMismatch { .. } => CtStatus::CtStructureMismatch,
            Error::InvalidParams(_) | Error::PreconditionViolated(_) => CtStatus::CtInvalidArgument,
            _ => CtStatus::CtInternal,
        }
    }
}

/// Field kinds as returned by [`ct_classify`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CtFieldKind {
    CtType4p = 0,
    CtType4r = 1,
    CtTypePs1 = 2,
    CtOther = 3,
}

impl From<FieldKind> for CtFieldKind {
    fn from(k: FieldKind) -> Self {
        match k {
            FieldKind::Type4p => CtFieldKind::CtType4p,
            FieldKind::Type4r => CtFieldKind::CtType4r,
            FieldKind::TypePS1 => CtFieldKind::CtTypePs1,
            FieldKind::Other => CtFieldKind::CtOther,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CtInvariants {
    pub n: u32,
    pub m: u32,
    pub h2_k: u64,
    pub h2_minus4p: u64,
}

/// Opaque handle to a group `Γ_{n,m,ε}`.
pub struct CtGroup {
    inner: PGroup,
}

fn guard(f: impl FnOnce() -> CtStatus) -> CtStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(CtStatus::CtPanic)
}

fn to_c_string(s: String, out: *mut *mut c_char) -> CtStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: checked non-null by every caller.
            unsafe { *out = c.into_raw() };
            CtStatus::CtOk
        }
        Err(_) => CtStatus::CtInternal,
    }
}

/// Static description of a status code; unknown codes get a generic text.
/// Never free the result.
#[no_mangle]
pub extern "C" fn ct_status_message(status: i32) -> *const c_char {
    let s: &'static [u8] = match status {
        0 => b"ok\0",
        1 => b"null pointer argument\0",
        2 => b"invalid argument\0",
        3 => b"not a fundamental discriminant\0",
        4 => b"not an imaginary quadratic discriminant\0",
        5 => b"discriminant is not of Type 4p or 4r\0",
        6 => b"enumeration bound exceeded\0",
        7 => b"2-class group does not have type (2,2,2^n)\0",
        8 => b"output buffer too small\0",
        9 => b"internal error\0",
        10 => b"panic inside the library\0",
        _ => b"unknown status\0",
    };
    s.as_ptr().cast()
}

/// Classifies `d`. `primes` receives up to `cap` prime data (`p, q, q'` for
/// Types 4p/4r); `*len` is set to the full count even when it exceeds `cap`.
///
/// # Safety
/// `kind` and `len` must be valid for writes; `primes` must be valid for
/// `cap` writes or be null with `cap == 0`.
#[no_mangle]
pub unsafe extern "C" fn ct_classify(d: i64, kind: *mut CtFieldKind, primes: *mut i64, cap: usize, len: *mut usize) -> CtStatus {
    guard(|| {
        if kind.is_null() || len.is_null() || (primes.is_null() && cap > 0) {
            return CtStatus::CtNullPointer;
        }
        let c = match tower::classify(d) {
            Ok(c) => c,
            Err(e) => return (&e).into(),
        };
        unsafe {
            *kind = c.kind.into();
            *len = c.primes.len();
        }
        if c.primes.len() > cap {
            return CtStatus::CtBufferTooSmall;
        }
        unsafe { ptr::copy_nonoverlapping(c.primes.as_ptr(), primes, c.primes.len()) };
        CtStatus::CtOk
    })
}

/// `(n, m)` and the 2-class numbers of a Type 4p or 4r field. `bound == 0`
/// uses the library default.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_invariants(d: i64, bound: u64, out: *mut CtInvariants) -> CtStatus {
    guard(|| {
        if out.is_null() {
            return CtStatus::CtNullPointer;
        }
        let r = if bound == 0 { tower::invariants(d) } else { tower::invariants_with_bound(d, bound) };
        match r {
            Ok(inv) => {
                unsafe {
                    *out = CtInvariants {
                        n: inv.n,
                        m: inv.m,
                        h2_k: inv.h2_k,
                        h2_minus4p: inv.h2_minus4p,
                    }
                };
                CtStatus::CtOk
            }
            Err(e) => (&e).into(),
        }
    })
}

/// The tower report of `predict` (`crosscheck == false`) or `crosscheck` as
/// JSON. `*all_pass` is 1 when every check line passed. Free `*json` with
/// [`ct_string_free`].
///
/// # Safety
/// `json` and `all_pass` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_tower_report_json(d: i64, crosscheck: bool, json: *mut *mut c_char, all_pass: *mut i32) -> CtStatus {
    guard(|| {
        if json.is_null() || all_pass.is_null() {
            return CtStatus::CtNullPointer;
        }
        let r = if crosscheck { tower::crosscheck(d) } else { tower::predict(d) };
        match r {
            Ok(r) => {
                unsafe { *all_pass = r.all_pass() as i32 };
                match serde_json::to_string(&r) {
                    Ok(s) => to_c_string(s, json),
                    Err(_) => CtStatus::CtInternal,
                }
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ct_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Builds `Γ_{n,m,ε}`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_new(n: u32, m: u32, eps: u8, out: *mut *mut CtGroup) -> CtStatus {
    guard(|| {
        if out.is_null() {
            return CtStatus::CtNullPointer;
        }
        match GroupParams::gamma(n, m, eps).and_then(PGroup::new) {
            Ok(g) => {
                unsafe { *out = Box::into_raw(Box::new(CtGroup { inner: g })) };
                CtStatus::CtOk
            }
            Err(e) => (&e).into(),
        }
    })
}

/// Releases a group handle. Null is ignored.
///
/// # Safety
/// `g` must come from [`ct_group_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ct_group_free(g: *mut CtGroup) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Group order, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ct_group_order(g: *const CtGroup) -> u64 {
    match unsafe { g.as_ref() } {
        Some(g) => 1u64 << g.inner.params().log_order(),
        None => 0,
    }
}

/// Product of two normal-form exponent vectors `[e1, e2, e3, f1, f2]`.
///
/// # Safety
/// `g` must be a live handle; `x`, `y` and `out` must each point to 5 `u32`.
#[no_mangle]
pub unsafe extern "C" fn ct_group_mul(g: *const CtGroup, x: *const u32, y: *const u32, out: *mut u32) -> CtStatus {
    guard(|| {
        let Some(g) = (unsafe { g.as_ref() }) else {
            return CtStatus::CtNullPointer;
        };
        if x.is_null() || y.is_null() || out.is_null() {
            return CtStatus::CtNullPointer;
        }
        let read = |p: *const u32| -> GroupElement {
            let mut v = [0u32; 5];
            unsafe { ptr::copy_nonoverlapping(p, v.as_mut_ptr(), 5) };
            v.into()
        };
        match g.inner.mul_elem(&read(x), &read(y)) {
            Ok(z) => {
                let v: [u32; 5] = z.into();
                unsafe { ptr::copy_nonoverlapping(v.as_ptr(), out, 5) };
                CtStatus::CtOk
            }
            Err(e) => (&e).into(),
        }
    })
}

fn write_type(parts: &[u64], out: *mut u64, cap: usize, len: *mut usize) -> CtStatus {
    unsafe { *len = parts.len() };
    if parts.len() > cap {
        return CtStatus::CtBufferTooSmall;
    }
    unsafe { ptr::copy_nonoverlapping(parts.as_ptr(), out, parts.len()) };
    CtStatus::CtOk
}

/// Invariant factors of `G/G'` (`derived == false`) or of `G'`, nonincreasing.
///
/// # Safety
/// `g` must be a live handle, `len` valid for writes and `out` valid for
/// `cap` writes (or null with `cap == 0`).
#[no_mangle]
pub unsafe extern "C" fn ct_group_abelian_type(g: *const CtGroup, derived: bool, out: *mut u64, cap: usize, len: *mut usize) -> CtStatus {
    guard(|| {
        let Some(g) = (unsafe { g.as_ref() }) else {
            return CtStatus::CtNullPointer;
        };
        if len.is_null() || (out.is_null() && cap > 0) {
            return CtStatus::CtNullPointer;
        }
        let g = &g.inner;
        let all = whole(g);
        let t = if derived {
            match abelian_type_of(g, &derived_subgroup(g, &all), &trivial(g)) {
                Ok(t) => t,
                Err(e) => return (&e).into(),
            }
        } else {
            abelianization(g, &all)
        };
        write_type(t.parts(), out, cap, len)
    })
}

/// Order of the kernel of the transfer from `H_2` to `H_1 ∩ H_2`.
///
/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ct_group_lemma5_kernel_order(g: *const CtGroup, out: *mut u64) -> CtStatus {
    guard(|| {
        let Some(g) = (unsafe { g.as_ref() }) else {
            return CtStatus::CtNullPointer;
        };
        if out.is_null() {
            return CtStatus::CtNullPointer;
        }
        match lemma5_kernel(&g.inner) {
            Ok(k) => {
                unsafe { *out = k.order as u64 };
                CtStatus::CtOk
            }
            Err(e) => (&e).into(),
        }
    })
}

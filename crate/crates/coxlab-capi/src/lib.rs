//! C ABI over the coxlab core: opaque context handles, integer status codes,
//! and decimal strings for big values. The header is generated by cbindgen
//! into include/coxlab.h at build time.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use coxlab::identities::{self, Ctx};
use coxlab::laplacian;
use coxlab::nc::nc_of_group;
use coxlab::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoxlabStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    BadType = 3,
    GroupTooLarge = 4,
    NoMatrixModel = 5,
    CheckFailed = 6,
    Internal = 7,
}

/// Opaque handle over a fully built group context.
pub struct CoxlabCtx {
    inner: Ctx,
}

fn status_of(e: &Error) -> CoxlabStatus {
    match e {
        Error::BadType(_) => CoxlabStatus::BadType,
        Error::GroupTooLarge(_) => CoxlabStatus::GroupTooLarge,
        Error::NoMatrixModel(_) => CoxlabStatus::NoMatrixModel,
        _ => CoxlabStatus::Internal,
    }
}

unsafe fn take_str<'a>(p: *const c_char) -> Result<&'a str, CoxlabStatus> {
    if p.is_null() {
        return Err(CoxlabStatus::NullArgument);
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| CoxlabStatus::InvalidUtf8)
}

fn emit_string(s: String, out: *mut *mut c_char) -> CoxlabStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CoxlabStatus::Ok
        }
        Err(_) => CoxlabStatus::Internal,
    }
}

/// Build a context for a Coxeter type string like "A3", "B4", "I2(7)" or
/// "A2xB3". On success the handle must be released with coxlab_ctx_free.
///
/// # Safety
/// `type_name` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn coxlab_ctx_new(
    type_name: *const c_char,
    out: *mut *mut CoxlabCtx,
) -> CoxlabStatus {
    if out.is_null() {
        return CoxlabStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let name = match take_str(type_name) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match Ctx::new(name) {
        Ok(ctx) => {
            *out = Box::into_raw(Box::new(CoxlabCtx { inner: ctx }));
            CoxlabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Release a context handle. A null pointer is a no-op.
///
/// # Safety
/// `ctx` must have come from coxlab_ctx_new and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn coxlab_ctx_free(ctx: *mut CoxlabCtx) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Release a string returned by any coxlab function.
///
/// # Safety
/// `s` must have come from a coxlab function and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn coxlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Group order.
///
/// # Safety
/// `ctx` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn coxlab_ctx_order(ctx: *const CoxlabCtx, out: *mut u64) -> CoxlabStatus {
    if ctx.is_null() || out.is_null() {
        return CoxlabStatus::NullArgument;
    }
    *out = (*ctx).inner.gt.order as u64;
    CoxlabStatus::Ok
}

/// Rank of the reflection representation.
///
/// # Safety
/// `ctx` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn coxlab_ctx_rank(ctx: *const CoxlabCtx, out: *mut u32) -> CoxlabStatus {
    if ctx.is_null() || out.is_null() {
        return CoxlabStatus::NullArgument;
    }
    *out = (*ctx).inner.rs.rank as u32;
    CoxlabStatus::Ok
}

/// Number of reflections (= positive roots).
///
/// # Safety
/// `ctx` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn coxlab_ctx_reflections(
    ctx: *const CoxlabCtx,
    out: *mut u64,
) -> CoxlabStatus {
    if ctx.is_null() || out.is_null() {
        return CoxlabStatus::NullArgument;
    }
    *out = (*ctx).inner.rs.num_positive_roots() as u64;
    CoxlabStatus::Ok
}

/// Number of maximal chains of NC(W), as a decimal string.
///
/// # Safety
/// `ctx` and `out` must be valid pointers; free the string with
/// coxlab_string_free.
#[no_mangle]
pub unsafe extern "C" fn coxlab_ctx_max_chains(
    ctx: *const CoxlabCtx,
    out: *mut *mut c_char,
) -> CoxlabStatus {
    if ctx.is_null() || out.is_null() {
        return CoxlabStatus::NullArgument;
    }
    let inner = &(*ctx).inner;
    match nc_of_group(&inner.rs, &inner.gt) {
        Ok(nc) => emit_string(nc.max_chains().to_string(), out),
        Err(e) => status_of(&e),
    }
}

/// Number of multichains w_1 <= ... <= w_k of NC(W), as a decimal string.
///
/// # Safety
/// `ctx` and `out` must be valid pointers; free the string with
/// coxlab_string_free.
#[no_mangle]
pub unsafe extern "C" fn coxlab_ctx_zeta(
    ctx: *const CoxlabCtx,
    k: u32,
    out: *mut *mut c_char,
) -> CoxlabStatus {
    if ctx.is_null() || out.is_null() {
        return CoxlabStatus::NullArgument;
    }
    if k == 0 {
        return CoxlabStatus::BadType;
    }
    let inner = &(*ctx).inner;
    match nc_of_group(&inner.rs, &inner.gt) {
        Ok(nc) => emit_string(nc.zeta(k as usize).to_string(), out),
        Err(e) => status_of(&e),
    }
}

/// det(tI + L_W) rendered like "t^3 + 12 t^2 + 48 t + 64".
///
/// # Safety
/// `ctx` and `out` must be valid pointers; free the string with
/// coxlab_string_free.
#[no_mangle]
pub unsafe extern "C" fn coxlab_ctx_laplacian_charpoly(
    ctx: *const CoxlabCtx,
    out: *mut *mut c_char,
) -> CoxlabStatus {
    if ctx.is_null() || out.is_null() {
        return CoxlabStatus::NullArgument;
    }
    let inner = &(*ctx).inner;
    match laplacian::char_poly(&inner.rs, &inner.rs.all_root_indices()) {
        Ok(p) => emit_string(p.to_string(), out),
        Err(e) => status_of(&e),
    }
}

/// Run one identity check by name (e.g. "chain-number"); writes the JSON
/// report and returns CheckFailed when the identity does not hold.
///
/// # Safety
/// All pointers must be valid; free the report with coxlab_string_free.
#[no_mangle]
pub unsafe extern "C" fn coxlab_ctx_verify(
    ctx: *const CoxlabCtx,
    identity: *const c_char,
    report_out: *mut *mut c_char,
) -> CoxlabStatus {
    if ctx.is_null() || report_out.is_null() {
        return CoxlabStatus::NullArgument;
    }
    let name = match take_str(identity) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let inner = &(*ctx).inner;
    match identities::check(name, inner, None) {
        Ok(r) => {
            let pass = r.pass;
            let json = serde_json_string(&r);
            let st = emit_string(json, report_out);
            if st != CoxlabStatus::Ok {
                st
            } else if pass {
                CoxlabStatus::Ok
            } else {
                CoxlabStatus::CheckFailed
            }
        }
        Err(e) => status_of(&e),
    }
}

fn serde_json_string(r: &identities::IdentityReport) -> String {
    serde_json::to_string(r).unwrap_or_else(|_| "{}".to_string())
}

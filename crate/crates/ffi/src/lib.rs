//! C ABI over the gradings library. Handles are opaque pointers owned by
//! Rust; every constructor has a matching destructor, and strings
//! returned by `xg_*_json` / `xg_*_string` functions must be released
//! with [`xg_string_free`].
//!
//! All functions returning [`XgStatus`] leave output parameters untouched
//! unless they return `Ok`.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use gradings::catalog::{self, build, verify_registry, Context, Scope};
use gradings::error::Error;
use gradings::field::{Field, FieldSpec};
use gradings::grading::{grading_type, universal_group};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum XgStatus {
    /// success
    Ok = 0,
    /// a mathematical check failed (registry mismatch, non-grading, ...)
    MathFail = 1,
    /// bad arguments: unknown name, unparsable field, null pointer
    Usage = 2,
    /// the entry cannot be built over the requested field
    Unavailable = 3,
}

/// Opaque build context: a coefficient field plus caches for the algebras
/// and derivation spaces constructed over it.
pub struct XgContext {
    inner: Context,
}

/// Opaque built catalog entry: a graded algebra with a verified grading.
pub struct XgBuilt {
    inner: catalog::Built,
}

fn parse_field(name: &str) -> Option<Field> {
    match name {
        "q" => Some(Field::rationals()),
        "q-i" => Field::new(FieldSpec::adjoin_sqrt_minus_one(FieldSpec::Rationals)).ok(),
        "q-omega" => Field::new(FieldSpec::adjoin_cube_root(FieldSpec::Rationals)).ok(),
        other => other
            .strip_prefix("gf")
            .and_then(|p| p.parse::<u64>().ok())
            .and_then(|p| Field::gf(p).ok()),
    }
}

unsafe fn cstr<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    CStr::from_ptr(p).to_str().ok()
}

fn export_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// Create a context over the named field: "gf<p>", "q", "q-i", "q-omega".
/// Returns null when the field name cannot be parsed.
///
/// # Safety
/// `field_name` must be a valid NUL-terminated string or null.
#[no_mangle]
pub unsafe extern "C" fn xg_context_new(field_name: *const c_char) -> *mut XgContext {
    let Some(name) = cstr(field_name) else { return ptr::null_mut() };
    let Some(field) = parse_field(name) else { return ptr::null_mut() };
    let mut ctx = Context::new(field);
    ctx.use_golden_homs = true;
    ctx.goldens = catalog::builtin_goldens();
    Box::into_raw(Box::new(XgContext { inner: ctx }))
}

/// # Safety
/// `ctx` must be a pointer from [`xg_context_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn xg_context_free(ctx: *mut XgContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Build a catalog entry (e.g. "albert/cartan") over the context's field.
///
/// # Safety
/// `ctx` must be a live context, `name` a valid string, `out` a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn xg_build(
    ctx: *mut XgContext,
    name: *const c_char,
    out: *mut *mut XgBuilt,
) -> XgStatus {
    if ctx.is_null() || out.is_null() {
        return XgStatus::Usage;
    }
    let Some(name) = cstr(name) else { return XgStatus::Usage };
    let ctx = &mut (*ctx).inner;
    match build(name, ctx) {
        Ok(b) => {
            *out = Box::into_raw(Box::new(XgBuilt { inner: b }));
            XgStatus::Ok
        }
        Err(Error::UnknownEntry(_)) => XgStatus::Usage,
        Err(Error::EntryUnavailable { .. }) => XgStatus::Unavailable,
        Err(_) => XgStatus::MathFail,
    }
}

/// # Safety
/// `built` must be a pointer from [`xg_build`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn xg_built_free(built: *mut XgBuilt) {
    if !built.is_null() {
        drop(Box::from_raw(built));
    }
}

/// Dimension of the underlying algebra, or 0 on null input.
///
/// # Safety
/// `built` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn xg_built_dim(built: *const XgBuilt) -> usize {
    if built.is_null() {
        return 0;
    }
    (*built).inner.algebra.dim
}

/// Type vector of the grading, e.g. "(24,0,1)".
///
/// # Safety
/// `built` must be a live handle; free the result with [`xg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn xg_built_type_string(built: *const XgBuilt) -> *mut c_char {
    if built.is_null() {
        return ptr::null_mut();
    }
    let b = &(*built).inner;
    match grading_type(&b.grading) {
        Ok(t) => export_string(t.display()),
        Err(_) => ptr::null_mut(),
    }
}

/// Universal group of the grading, e.g. "Z^4" or "Z_2^5".
///
/// # Safety
/// `built` must be a live handle; free the result with [`xg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn xg_built_universal_group_string(built: *const XgBuilt) -> *mut c_char {
    if built.is_null() {
        return ptr::null_mut();
    }
    let b = &(*built).inner;
    match universal_group(&b.algebra, &b.grading) {
        Ok((g, _, _)) => export_string(g.display()),
        Err(_) => ptr::null_mut(),
    }
}

/// Canonical algebra JSON (same schema as the CLI export).
///
/// # Safety
/// `built` must be a live handle; free the result with [`xg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn xg_built_algebra_json(built: *const XgBuilt) -> *mut c_char {
    if built.is_null() {
        return ptr::null_mut();
    }
    let b = &(*built).inner;
    let j = b.algebra.to_json(&b.name);
    export_string(serde_json::to_string_pretty(&j).expect("algebra json"))
}

/// Canonical grading JSON (same schema as the CLI export).
///
/// # Safety
/// `built` must be a live handle; free the result with [`xg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn xg_built_grading_json(built: *const XgBuilt) -> *mut c_char {
    if built.is_null() {
        return ptr::null_mut();
    }
    let b = &(*built).inner;
    export_string(serde_json::to_string_pretty(&b.grading.to_json()).expect("grading json"))
}

/// Run the registry over one scope ("cayley", "g2", "albert", "f4") and
/// return the JSON report through `out_report`. The status is MathFail
/// when any entry fails.
///
/// # Safety
/// `ctx` must be a live context, `scope` a valid string, `out_report`
/// either null (report discarded) or valid; free the report string with
/// [`xg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn xg_verify_scope(
    ctx: *mut XgContext,
    scope: *const c_char,
    out_report: *mut *mut c_char,
) -> XgStatus {
    if ctx.is_null() {
        return XgStatus::Usage;
    }
    let Some(scope_name) = cstr(scope) else { return XgStatus::Usage };
    let Some(scope) = Scope::parse(scope_name) else { return XgStatus::Usage };
    let ctx = &mut (*ctx).inner;
    let report = verify_registry(scope, ctx);
    let ok = report.all_passed();
    if !out_report.is_null() {
        *out_report = export_string(report.to_canonical_json());
    }
    if ok {
        XgStatus::Ok
    } else {
        XgStatus::MathFail
    }
}

/// Newline-separated list of all catalog entry names.
///
/// # Safety
/// Free the result with [`xg_string_free`].
#[no_mangle]
pub unsafe extern "C" fn xg_entry_names() -> *mut c_char {
    export_string(catalog::entry_names(None).join("\n"))
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by one of the `xg_*`
/// string-returning functions, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn xg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    #[test]
    fn build_and_inspect_through_the_c_surface() {
        unsafe {
            let field = CString::new("gf13").unwrap();
            let ctx = xg_context_new(field.as_ptr());
            assert!(!ctx.is_null());

            let name = CString::new("albert/cartan").unwrap();
            let mut built: *mut XgBuilt = ptr::null_mut();
            assert!(xg_build(ctx, name.as_ptr(), &mut built) == XgStatus::Ok);
            assert_eq!(xg_built_dim(built), 27);

            let ty = xg_built_type_string(built);
            assert_eq!(CStr::from_ptr(ty).to_str().unwrap(), "(24,0,1)");
            xg_string_free(ty);

            let ug = xg_built_universal_group_string(built);
            assert_eq!(CStr::from_ptr(ug).to_str().unwrap(), "Z^4");
            xg_string_free(ug);

            let aj = xg_built_algebra_json(built);
            assert!(CStr::from_ptr(aj).to_str().unwrap().contains("\"dim\": 27"));
            xg_string_free(aj);

            xg_built_free(built);

            // unknown entry and unavailable entry report proper codes
            let bad = CString::new("nosuch/entry").unwrap();
            let mut out: *mut XgBuilt = ptr::null_mut();
            assert!(xg_build(ctx, bad.as_ptr(), &mut out) == XgStatus::Usage);
            xg_context_free(ctx);

            let q = CString::new("q").unwrap();
            let ctx = xg_context_new(q.as_ptr());
            let tits = CString::new("albert/z3^3").unwrap();
            let mut out: *mut XgBuilt = ptr::null_mut();
            assert!(xg_build(ctx, tits.as_ptr(), &mut out) == XgStatus::Unavailable);
            xg_context_free(ctx);
        }
    }

    #[test]
    fn verify_scope_through_the_c_surface() {
        unsafe {
            let field = CString::new("gf13").unwrap();
            let ctx = xg_context_new(field.as_ptr());
            let scope = CString::new("cayley").unwrap();
            let mut report: *mut c_char = ptr::null_mut();
            let status = xg_verify_scope(ctx, scope.as_ptr(), &mut report);
            assert!(status == XgStatus::Ok);
            let json = CStr::from_ptr(report).to_str().unwrap();
            assert!(json.contains("cayley/cartan"));
            xg_string_free(report);
            xg_context_free(ctx);
        }
    }
}

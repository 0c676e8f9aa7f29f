//! C ABI over the bentcat library. Handles are opaque pointers owned by
//! the caller and released with the matching `_free` function; fallible
//! calls return a [`BcStatus`] and leave a human-readable message
//! retrievable with [`bc_last_error_message`] on the calling thread.
//!
//! The generated header lives at `include/bentcat.h`.

// C entry points take raw pointers by contract; every function
// null-checks before dereferencing, which is the property this lint
// cannot see.
#![allow(clippy::not_unsafe_ptr_arg_deref)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use bentcat::boolfn::TruthTable;
use bentcat::construct;
use bentcat::gf2m::FieldContext;
use bentcat::perm::{self, PointMap};
use bentcat::subspace::{self, MmVerdict, SharingVerdict};
use bentcat::{textio, Error};

/// Status code of a fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    ParseError = 3,
    NotBent = 4,
    OddVariables = 5,
    NotPermutation = 6,
    FieldError = 7,
    HypothesisFailed = 8,
    IoError = 9,
    Internal = 10,
}

/// Completed-class membership verdict.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BcMmVerdict {
    Inside = 0,
    Outside = 1,
    Inconclusive = 2,
}

/// Verdict of the four-function sharing certificate.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BcSharingVerdict {
    OutsideCertified = 0,
    Inconclusive = 1,
    HypothesisFailed = 2,
}

/// Opaque truth table handle.
pub struct BcTruthTable(TruthTable);
/// Opaque field context handle.
pub struct BcFieldContext(FieldContext);
/// Opaque point map handle.
pub struct BcPointMap(PointMap);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(e: &Error) -> BcStatus {
    match e {
        Error::Parse { .. } => BcStatus::ParseError,
        Error::NotBent { .. } => BcStatus::NotBent,
        Error::OddVariableCount { .. } => BcStatus::OddVariables,
        Error::NotPermutation { .. } => BcStatus::NotPermutation,
        Error::InvalidFieldDegree { .. }
        | Error::BadModulusDegree { .. }
        | Error::ModulusReducible { .. }
        | Error::ModulusNotPrimitive { .. }
        | Error::NotInField { .. }
        | Error::ZeroInverse
        | Error::ExponentNotCoprime { .. } => BcStatus::FieldError,
        Error::Hypothesis { .. } => BcStatus::HypothesisFailed,
        Error::Io(_) | Error::Json(_) => BcStatus::IoError,
        _ => BcStatus::InvalidArgument,
    }
}

fn run(body: impl FnOnce() -> Result<(), (BcStatus, String)>) -> BcStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BcStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (BcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err() -> (BcStatus, String) {
    (BcStatus::NullArgument, "null argument".to_string())
}

macro_rules! deref {
    ($ptr:expr) => {
        match unsafe { $ptr.as_ref() } {
            Some(r) => &r.0,
            None => return Err(null_err()),
        }
    };
}

macro_rules! out_ptr {
    ($ptr:expr) => {
        match unsafe { $ptr.as_mut() } {
            Some(r) => r,
            None => return Err(null_err()),
        }
    };
}

fn parse_c_str<'a>(s: *const c_char) -> Result<&'a str, (BcStatus, String)> {
    if s.is_null() {
        return Err(null_err());
    }
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| (BcStatus::ParseError, "invalid UTF-8".to_string()))
}

/// Message describing the most recent error on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Frees a string returned by this library.
#[no_mangle]
pub extern "C" fn bc_string_free(s: *mut c_char) {
    if !s.is_null() {
        unsafe { drop(CString::from_raw(s)) };
    }
}

fn export_string(s: String, out: *mut *mut c_char) -> Result<(), (BcStatus, String)> {
    if out.is_null() {
        return Err(null_err());
    }
    let c = CString::new(s).map_err(|_| (BcStatus::Internal, "string with NUL".to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

// ---------------------------------------------------------------------
// truth tables

/// Parses truth-table text (`n=<k>` header plus a 0/1 row) or an ANF
/// expression like `x1*x2 + x3 + 1`.
#[no_mangle]
pub extern "C" fn bc_tt_parse(text: *const c_char, out: *mut *mut BcTruthTable) -> BcStatus {
    run(|| {
        let text = parse_c_str(text)?;
        if out.is_null() {
            return Err(null_err());
        }
        let t = textio::parse_function(text).map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcTruthTable(t))) };
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn bc_tt_free(t: *mut BcTruthTable) {
    if !t.is_null() {
        unsafe { drop(Box::from_raw(t)) };
    }
}

/// Variable count, or 0 for a null handle.
#[no_mangle]
pub extern "C" fn bc_tt_variables(t: *const BcTruthTable) -> u32 {
    unsafe { t.as_ref() }.map_or(0, |t| t.0.n())
}

/// Value at point x (0 or 1); -1 for a null handle or out-of-range x.
#[no_mangle]
pub extern "C" fn bc_tt_value(t: *const BcTruthTable, x: u32) -> i32 {
    match unsafe { t.as_ref() } {
        Some(t) if (x as usize) < t.0.len() => t.0.get(x) as i32,
        _ => -1,
    }
}

/// Truth-table text form; free with `bc_string_free`.
#[no_mangle]
pub extern "C" fn bc_tt_format(t: *const BcTruthTable, out: *mut *mut c_char) -> BcStatus {
    run(|| {
        let t = deref!(t);
        export_string(textio::format_truth_table(t), out)
    })
}

/// Canonical ANF text; free with `bc_string_free`.
#[no_mangle]
pub extern "C" fn bc_tt_anf(t: *const BcTruthTable, out: *mut *mut c_char) -> BcStatus {
    run(|| {
        let t = deref!(t);
        export_string(textio::format_anf(&t.anf()), out)
    })
}

/// Writes 1 into `out` iff the function is bent. Fails on odd variable
/// counts.
#[no_mangle]
pub extern "C" fn bc_tt_is_bent(t: *const BcTruthTable, out: *mut i32) -> BcStatus {
    run(|| {
        let t = deref!(t);
        let out = out_ptr!(out);
        *out = t.is_bent().map_err(lib_err)? as i32;
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn bc_tt_degree(t: *const BcTruthTable) -> u32 {
    unsafe { t.as_ref() }.map_or(0, |t| t.0.degree())
}

/// 1 iff every ANF monomial has the same degree.
#[no_mangle]
pub extern "C" fn bc_tt_is_homogeneous(t: *const BcTruthTable) -> i32 {
    unsafe { t.as_ref() }.map_or(-1, |t| t.0.anf().is_homogeneous() as i32)
}

/// Dual of a bent function.
#[no_mangle]
pub extern "C" fn bc_tt_dual(t: *const BcTruthTable, out: *mut *mut BcTruthTable) -> BcStatus {
    run(|| {
        let t = deref!(t);
        if out.is_null() {
            return Err(null_err());
        }
        let d = t.dual().map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcTruthTable(d))) };
        Ok(())
    })
}

/// Pointwise sum of two functions with equal variable counts.
#[no_mangle]
pub extern "C" fn bc_tt_xor(
    a: *const BcTruthTable,
    b: *const BcTruthTable,
    out: *mut *mut BcTruthTable,
) -> BcStatus {
    run(|| {
        let a = deref!(a);
        let b = deref!(b);
        if out.is_null() {
            return Err(null_err());
        }
        if a.n() != b.n() {
            return Err((
                BcStatus::InvalidArgument,
                format!("variable counts differ: {} vs {}", a.n(), b.n()),
            ));
        }
        unsafe { *out = Box::into_raw(Box::new(BcTruthTable(a ^ b))) };
        Ok(())
    })
}

/// Completed Maiorana-McFarland membership of a bent function.
/// `budget_seconds <= 0` means unbounded.
#[no_mangle]
pub extern "C" fn bc_tt_mm_sharp(
    t: *const BcTruthTable,
    budget_seconds: f64,
    out: *mut BcMmVerdict,
) -> BcStatus {
    run(|| {
        let t = deref!(t);
        let out = out_ptr!(out);
        let budget = (budget_seconds > 0.0).then(|| Duration::from_secs_f64(budget_seconds));
        let report = subspace::mm_sharp_report(t, budget).map_err(lib_err)?;
        *out = match report.verdict {
            MmVerdict::Inside => BcMmVerdict::Inside,
            MmVerdict::Outside => BcMmVerdict::Outside,
            MmVerdict::Inconclusive => BcMmVerdict::Inconclusive,
        };
        Ok(())
    })
}

// ---------------------------------------------------------------------
// field contexts

/// Builds GF(2^m); `modulus = 0` selects the default primitive
/// polynomial for the degree.
#[no_mangle]
pub extern "C" fn bc_field_new(m: u32, modulus: u32, out: *mut *mut BcFieldContext) -> BcStatus {
    run(|| {
        if out.is_null() {
            return Err(null_err());
        }
        let ctx =
            FieldContext::new(m, (modulus != 0).then_some(modulus)).map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcFieldContext(ctx))) };
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn bc_field_free(ctx: *mut BcFieldContext) {
    if !ctx.is_null() {
        unsafe { drop(Box::from_raw(ctx)) };
    }
}

/// Product of two elements; 0 for a null handle or out-of-range input.
#[no_mangle]
pub extern "C" fn bc_field_mul(ctx: *const BcFieldContext, x: u32, y: u32) -> u32 {
    match unsafe { ctx.as_ref() } {
        Some(c) if x < c.0.size() && y < c.0.size() => c.0.mul(x, y),
        _ => 0,
    }
}

#[no_mangle]
pub extern "C" fn bc_field_inv(ctx: *const BcFieldContext, x: u32, out: *mut u32) -> BcStatus {
    run(|| {
        let ctx = deref!(ctx);
        let out = out_ptr!(out);
        *out = ctx.inv(x).map_err(lib_err)?;
        Ok(())
    })
}

/// Absolute trace bit; -1 for a null handle or out-of-range input.
#[no_mangle]
pub extern "C" fn bc_field_trace(ctx: *const BcFieldContext, x: u32) -> i32 {
    match unsafe { ctx.as_ref() } {
        Some(c) if x < c.0.size() => c.0.trace(x) as i32,
        _ => -1,
    }
}

/// a^e for the field generator a; e may be negative.
#[no_mangle]
pub extern "C" fn bc_field_generator_pow(ctx: *const BcFieldContext, e: i64) -> u32 {
    unsafe { ctx.as_ref() }.map_or(0, |c| c.0.generator_pow(e))
}

// ---------------------------------------------------------------------
// point maps

/// Parses permutation-file text (`m=<k>` header plus image indices).
#[no_mangle]
pub extern "C" fn bc_pointmap_parse(text: *const c_char, out: *mut *mut BcPointMap) -> BcStatus {
    run(|| {
        let text = parse_c_str(text)?;
        if out.is_null() {
            return Err(null_err());
        }
        let p = textio::parse_point_map(text).map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcPointMap(p))) };
        Ok(())
    })
}

/// The monomial map y -> alpha y^d over the given field.
#[no_mangle]
pub extern "C" fn bc_pointmap_monomial(
    ctx: *const BcFieldContext,
    alpha: u32,
    d: u64,
    out: *mut *mut BcPointMap,
) -> BcStatus {
    run(|| {
        let ctx = deref!(ctx);
        if out.is_null() {
            return Err(null_err());
        }
        let p = PointMap::monomial(ctx, alpha, d).map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcPointMap(p))) };
        Ok(())
    })
}

#[no_mangle]
pub extern "C" fn bc_pointmap_free(p: *mut BcPointMap) {
    if !p.is_null() {
        unsafe { drop(Box::from_raw(p)) };
    }
}

#[no_mangle]
pub extern "C" fn bc_pointmap_is_permutation(p: *const BcPointMap) -> i32 {
    unsafe { p.as_ref() }.map_or(-1, |p| p.0.is_permutation() as i32)
}

#[no_mangle]
pub extern "C" fn bc_pointmap_inverse(
    p: *const BcPointMap,
    out: *mut *mut BcPointMap,
) -> BcStatus {
    run(|| {
        let p = deref!(p);
        if out.is_null() {
            return Err(null_err());
        }
        let inv = p.inverse().map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcPointMap(inv))) };
        Ok(())
    })
}

/// Writes 1 into `out` iff the triple's sum is a permutation whose
/// inverse equals the sum of the inverses.
#[no_mangle]
pub extern "C" fn bc_check_am(
    p1: *const BcPointMap,
    p2: *const BcPointMap,
    p3: *const BcPointMap,
    out: *mut i32,
) -> BcStatus {
    run(|| {
        let p1 = deref!(p1);
        let p2 = deref!(p2);
        let p3 = deref!(p3);
        let out = out_ptr!(out);
        *out = perm::check_am(p1, p2, p3).map_err(lib_err)?.holds() as i32;
        Ok(())
    })
}

/// 1 iff no second derivative of the map vanishes anywhere.
#[no_mangle]
pub extern "C" fn bc_check_p1(p: *const BcPointMap) -> i32 {
    unsafe { p.as_ref() }.map_or(-1, |p| perm::check_p1(&p.0) as i32)
}

/// 1 iff the map is almost perfect nonlinear.
#[no_mangle]
pub extern "C" fn bc_is_apn(p: *const BcPointMap) -> i32 {
    unsafe { p.as_ref() }.map_or(-1, |p| perm::is_apn(&p.0) as i32)
}

/// Maiorana-McFarland bent function x . pi(y) + h(y).
#[no_mangle]
pub extern "C" fn bc_mm_bent_dot(
    pi: *const BcPointMap,
    h: *const BcTruthTable,
    out: *mut *mut BcTruthTable,
) -> BcStatus {
    run(|| {
        let pi = deref!(pi);
        let h = deref!(h);
        if out.is_null() {
            return Err(null_err());
        }
        let f = perm::mm_bent_dot(pi, h).map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcTruthTable(f))) };
        Ok(())
    })
}

/// Trace-form Maiorana-McFarland bent function Tr(x pi(y)) + h(y).
#[no_mangle]
pub extern "C" fn bc_mm_bent_trace(
    ctx: *const BcFieldContext,
    pi: *const BcPointMap,
    h: *const BcTruthTable,
    out: *mut *mut BcTruthTable,
) -> BcStatus {
    run(|| {
        let ctx = deref!(ctx);
        let pi = deref!(pi);
        let h = deref!(h);
        if out.is_null() {
            return Err(null_err());
        }
        let f = perm::mm_bent_trace(ctx, pi, h).map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcTruthTable(f))) };
        Ok(())
    })
}

// ---------------------------------------------------------------------
// constructions

fn gather4(
    parts: [*const BcTruthTable; 4],
) -> Result<[TruthTable; 4], (BcStatus, String)> {
    let mut out = Vec::with_capacity(4);
    for p in parts {
        let t = match unsafe { p.as_ref() } {
            Some(r) => r.0.clone(),
            None => return Err(null_err()),
        };
        out.push(t);
    }
    Ok(out.try_into().expect("four parts"))
}

/// Concatenation of four n-variable functions into n+2 variables.
#[no_mangle]
pub extern "C" fn bc_concat4(
    f1: *const BcTruthTable,
    f2: *const BcTruthTable,
    f3: *const BcTruthTable,
    f4: *const BcTruthTable,
    out: *mut *mut BcTruthTable,
) -> BcStatus {
    run(|| {
        let parts = gather4([f1, f2, f3, f4])?;
        if out.is_null() {
            return Err(null_err());
        }
        let cat = construct::concat4(&parts).map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcTruthTable(cat))) };
        Ok(())
    })
}

/// Writes 1 into `out` iff the duals of the four bent inputs sum to the
/// constant one.
#[no_mangle]
pub extern "C" fn bc_dual_bent_condition(
    f1: *const BcTruthTable,
    f2: *const BcTruthTable,
    f3: *const BcTruthTable,
    f4: *const BcTruthTable,
    out: *mut i32,
) -> BcStatus {
    run(|| {
        let parts = gather4([f1, f2, f3, f4])?;
        let out = out_ptr!(out);
        *out = construct::dual_bent_condition(&parts).map_err(lib_err)? as i32;
        Ok(())
    })
}

/// Runs the sharing certificate on four bent pieces.
#[no_mangle]
pub extern "C" fn bc_sharing_verdict(
    f1: *const BcTruthTable,
    f2: *const BcTruthTable,
    f3: *const BcTruthTable,
    f4: *const BcTruthTable,
    out: *mut BcSharingVerdict,
) -> BcStatus {
    run(|| {
        let parts = gather4([f1, f2, f3, f4])?;
        let out = out_ptr!(out);
        let report = subspace::check_sharing_theorem(&parts).map_err(lib_err)?;
        *out = match report.verdict {
            SharingVerdict::OutsideCertified => BcSharingVerdict::OutsideCertified,
            SharingVerdict::Inconclusive => BcSharingVerdict::Inconclusive,
            SharingVerdict::HypothesisFailed => BcSharingVerdict::HypothesisFailed,
        };
        Ok(())
    })
}

/// Bent concatenation of the monomial family alpha_i y^d with
/// h_i = Tr(beta_i y^k); `sigma` holds a permutation of 0..4.
#[no_mangle]
pub extern "C" fn bc_monomial_concat(
    ctx: *const BcFieldContext,
    d: u64,
    k: u64,
    alphas: *const u32,
    sigma: *const usize,
    out: *mut *mut BcTruthTable,
) -> BcStatus {
    run(|| {
        let ctx = deref!(ctx);
        if alphas.is_null() || sigma.is_null() || out.is_null() {
            return Err(null_err());
        }
        let alphas = unsafe { std::slice::from_raw_parts(alphas, 3) };
        let sigma = unsafe { std::slice::from_raw_parts(sigma, 4) };
        let quad = construct::monomial_quadruple(
            ctx,
            d,
            k,
            [alphas[0], alphas[1], alphas[2]],
            [sigma[0], sigma[1], sigma[2], sigma[3]],
        )
        .map_err(lib_err)?;
        let cat = quad.concat().map_err(lib_err)?;
        unsafe { *out = Box::into_raw(Box::new(BcTruthTable(cat))) };
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn parse(text: &str) -> *mut BcTruthTable {
        let c = CString::new(text).unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(bc_tt_parse(c.as_ptr(), &mut out), BcStatus::Ok);
        out
    }

    #[test]
    fn parse_analyze_free() {
        let t = parse("x1*x2");
        assert_eq!(bc_tt_variables(t), 2);
        let mut bent = 0;
        assert_eq!(bc_tt_is_bent(t, &mut bent), BcStatus::Ok);
        assert_eq!(bent, 1);
        assert_eq!(bc_tt_degree(t), 2);
        let mut anf = ptr::null_mut();
        assert_eq!(bc_tt_anf(t, &mut anf), BcStatus::Ok);
        let s = unsafe { CStr::from_ptr(anf) }.to_str().unwrap().to_string();
        assert_eq!(s, "x1*x2");
        bc_string_free(anf);
        bc_tt_free(t);
    }

    #[test]
    fn null_and_parse_errors() {
        let mut out = ptr::null_mut();
        assert_eq!(bc_tt_parse(ptr::null(), &mut out), BcStatus::NullArgument);
        let bad = CString::new("x1 ** ,").unwrap();
        assert_eq!(bc_tt_parse(bad.as_ptr(), &mut out), BcStatus::ParseError);
        let msg = unsafe { CStr::from_ptr(bc_last_error_message()) }
            .to_str()
            .unwrap();
        assert!(msg.contains("parse error"), "{msg}");
        // odd variable count
        let t = parse("x1*x2*x3");
        let mut bent = 0;
        assert_eq!(bc_tt_is_bent(t, &mut bent), BcStatus::OddVariables);
        bc_tt_free(t);
    }

    #[test]
    fn field_and_monomial_pipeline() {
        let mut ctx = ptr::null_mut();
        assert_eq!(bc_field_new(3, 0, &mut ctx), BcStatus::Ok);
        assert_eq!(bc_field_mul(ctx, 0b010, 0b010), 0b100);
        assert_eq!(bc_field_trace(ctx, 1), 1);
        let alphas = [
            bc_field_generator_pow(ctx, 1),
            bc_field_generator_pow(ctx, 4),
            bc_field_generator_pow(ctx, 6),
        ];
        let sigma = [0usize, 1, 2, 3];
        let mut cat = ptr::null_mut();
        assert_eq!(
            bc_monomial_concat(ctx, 6, 3, alphas.as_ptr(), sigma.as_ptr(), &mut cat),
            BcStatus::Ok
        );
        assert_eq!(bc_tt_variables(cat), 8);
        let mut bent = 0;
        assert_eq!(bc_tt_is_bent(cat, &mut bent), BcStatus::Ok);
        assert_eq!(bent, 1);
        let mut verdict = BcMmVerdict::Inside;
        assert_eq!(bc_tt_mm_sharp(cat, 0.0, &mut verdict), BcStatus::Ok);
        assert_eq!(verdict, BcMmVerdict::Outside);
        bc_tt_free(cat);

        // rejected parameters surface as HypothesisFailed
        let dup = [alphas[0], alphas[0], alphas[2]];
        let mut out = ptr::null_mut();
        assert_eq!(
            bc_monomial_concat(ctx, 6, 3, dup.as_ptr(), sigma.as_ptr(), &mut out),
            BcStatus::HypothesisFailed
        );
        bc_field_free(ctx);
    }

    #[test]
    fn am_check_via_handles() {
        let mut ctx = ptr::null_mut();
        assert_eq!(bc_field_new(3, 0xB, &mut ctx), BcStatus::Ok);
        let mut maps = Vec::new();
        for e in [1i64, 4, 6] {
            let mut p = ptr::null_mut();
            let alpha = bc_field_generator_pow(ctx, e);
            assert_eq!(bc_pointmap_monomial(ctx, alpha, 6, &mut p), BcStatus::Ok);
            assert_eq!(bc_pointmap_is_permutation(p), 1);
            maps.push(p);
        }
        let mut holds = 0;
        assert_eq!(
            bc_check_am(maps[0], maps[1], maps[2], &mut holds),
            BcStatus::Ok
        );
        assert_eq!(holds, 1);
        assert_eq!(bc_check_p1(maps[0]), 1);
        assert_eq!(bc_is_apn(maps[0]), 1);
        for p in maps {
            bc_pointmap_free(p);
        }
        bc_field_free(ctx);
    }
}

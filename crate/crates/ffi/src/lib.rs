//! C ABI for `sejoin`.
//!
//! Conventions:
//! * Every fallible function returns a [`SejoinStatus`] and writes its result
//!   through an out-pointer. On failure a message is available from
//!   [`sejoin_last_error_message`] on the same thread.
//! * Handles ([`SejoinJoin`], [`SejoinFamily`]) are opaque and released with
//!   their `_free` function. Strings returned by the library are released
//!   with [`sejoin_string_free`].
//! * Integers wider than 64 bits are reported as `SEJOIN_STATUS_OVERFLOW`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sejoin::classify::{
    classify_family, homotopy_equivalent, search_equivalent_pairs, CaseTag, FamilyClassification,
    Verdict,
};
use sejoin::join::{
    cohomology_ring, se_admissible_join, Admissibility, BaseManifold, JoinSpec, WeightVector,
};
use sejoin::numeric::signed_cube_class;
use sejoin::report::to_canonical_json;
use sejoin::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SejoinStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Unsupported = 3,
    Overflow = 4,
    Invariant = 5,
    OutOfRange = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SejoinVerdict {
    Equivalent = 0,
    Inequivalent = 1,
    Undetermined = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SejoinAdmissibility {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SejoinCaseTag {
    P0 = 0,
    P1 = 1,
}

/// One member of a classified family.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SejoinFamilyMember {
    pub w1: u64,
    pub w2: u64,
    pub case_tag: SejoinCaseTag,
    pub l1: u64,
    pub l2: u64,
    pub h4_order: u64,
    /// Sign-normalized representative of `l2^3` modulo `h4_order`.
    pub invariant: u64,
    /// Homotopy class id, or -1 when the family is undetermined.
    pub class_id: i64,
}

/// Opaque join handle.
pub struct SejoinJoin(JoinSpec);

/// Opaque classified-family handle.
pub struct SejoinFamily(FamilyClassification);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

fn status_of(e: &Error) -> SejoinStatus {
    match e {
        Error::Overflow(_) => SejoinStatus::Overflow,
        Error::Invariant(_) => SejoinStatus::Invariant,
        Error::Unsupported(_) => SejoinStatus::Unsupported,
        _ => SejoinStatus::InvalidArgument,
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (SejoinStatus, String)>) -> SejoinStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SejoinStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SejoinStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (SejoinStatus, String) {
    (status_of(&e), e.to_string())
}

fn null_err(name: &str) -> (SejoinStatus, String) {
    (SejoinStatus::NullPointer, format!("{name} is null"))
}

fn narrow(v: u128, what: &str) -> Result<u64, (SejoinStatus, String)> {
    u64::try_from(v).map_err(|_| {
        (
            SejoinStatus::Overflow,
            format!("{what} = {v} exceeds 64 bits"),
        )
    })
}

unsafe fn write<T>(out: *mut T, value: T, name: &str) -> Result<(), (SejoinStatus, String)> {
    if out.is_null() {
        return Err(null_err(name));
    }
    // SAFETY: non-null, and the caller guarantees it is valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("JSON contains no nul bytes")
        .into_raw()
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sejoin_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sejoin_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sejoin_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Builds the join of `base` (e.g. `"CP2"`, `"dP:3"`, `"S7"`) with `w` at its
/// relative Fano indices.
///
/// # Safety
/// `base` must be a valid NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sejoin_join_new(
    base: *const c_char,
    w1: u64,
    w2: u64,
    out: *mut *mut SejoinJoin,
) -> SejoinStatus {
    guard(|| {
        if base.is_null() {
            return Err(null_err("base"));
        }
        // SAFETY: caller guarantees a valid C string.
        let base = unsafe { CStr::from_ptr(base) }.to_str().map_err(|_| {
            (
                SejoinStatus::InvalidArgument,
                "base is not UTF-8".to_string(),
            )
        })?;
        let base: BaseManifold = base.parse().map_err(lib_err)?;
        let w = WeightVector::new(w1, w2).map_err(lib_err)?;
        let handle = Box::into_raw(Box::new(SejoinJoin(JoinSpec::new(base, w))));
        // SAFETY: forwarded caller contract.
        unsafe { write(out, handle, "out") }.inspect_err(|_| {
            // SAFETY: just allocated above and not shared.
            drop(unsafe { Box::from_raw(handle) });
        })
    })
}

/// # Safety
/// `join` must be null or a handle from [`sejoin_join_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sejoin_join_free(join: *mut SejoinJoin) {
    if !join.is_null() {
        // SAFETY: produced by Box::into_raw in sejoin_join_new.
        drop(unsafe { Box::from_raw(join) });
    }
}

unsafe fn join_ref<'a>(join: *const SejoinJoin) -> Result<&'a JoinSpec, (SejoinStatus, String)> {
    // SAFETY: caller guarantees a live handle when non-null.
    unsafe { join.as_ref() }
        .map(|j| &j.0)
        .ok_or_else(|| null_err("join"))
}

/// # Safety
/// `join` must be a live handle; `l1` and `l2` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sejoin_join_indices(
    join: *const SejoinJoin,
    l1: *mut u64,
    l2: *mut u64,
) -> SejoinStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let spec = unsafe { join_ref(join) }?;
        let (a, b) = (narrow(spec.l1, "l1")?, narrow(spec.l2, "l2")?);
        // SAFETY: forwarded caller contract.
        unsafe {
            write(l1, a, "l1")?;
            write(l2, b, "l2")
        }
    })
}

/// Cohomology report as canonical JSON; free with [`sejoin_string_free`].
///
/// # Safety
/// `join` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sejoin_join_cohomology_json(
    join: *const SejoinJoin,
    out: *mut *mut c_char,
) -> SejoinStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let spec = unsafe { join_ref(join) }?;
        let report = cohomology_ring(spec).map_err(lib_err)?;
        let json = to_canonical_json(&report).map_err(lib_err)?;
        let s = into_c_string(json);
        // SAFETY: forwarded caller contract.
        unsafe { write(out, s, "out") }.inspect_err(|_| {
            // SAFETY: allocated just above.
            unsafe { sejoin_string_free(s) }
        })
    })
}

/// # Safety
/// `join` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sejoin_join_admissibility(
    join: *const SejoinJoin,
    out: *mut SejoinAdmissibility,
) -> SejoinStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let spec = unsafe { join_ref(join) }?;
        let v = match se_admissible_join(spec).verdict {
            Admissibility::Yes => SejoinAdmissibility::Yes,
            Admissibility::No => SejoinAdmissibility::No,
            Admissibility::Unknown => SejoinAdmissibility::Unknown,
        };
        // SAFETY: forwarded caller contract.
        unsafe { write(out, v, "out") }
    })
}

/// Representative of the class of `a^3` in `(Z/m)^* / {±1}`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sejoin_signed_cube_class(a: u64, m: u64, out: *mut u64) -> SejoinStatus {
    guard(|| {
        let c = signed_cube_class(a as u128, m as u128).map_err(lib_err)?;
        let r = narrow(c.representative(), "representative")?;
        // SAFETY: forwarded caller contract.
        unsafe { write(out, r, "out") }
    })
}

/// Homotopy verdict for the `S^5` joins with weights `a` and `b`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sejoin_homotopy_equivalent(
    a1: u64,
    a2: u64,
    b1: u64,
    b2: u64,
    out: *mut SejoinVerdict,
) -> SejoinStatus {
    guard(|| {
        let a = WeightVector::new(a1, a2).map_err(lib_err)?;
        let b = WeightVector::new(b1, b2).map_err(lib_err)?;
        let v = match homotopy_equivalent(a, b).map_err(lib_err)?.verdict {
            Verdict::Equivalent => SejoinVerdict::Equivalent,
            Verdict::Inequivalent => SejoinVerdict::Inequivalent,
            Verdict::Undetermined => SejoinVerdict::Undetermined,
        };
        // SAFETY: forwarded caller contract.
        unsafe { write(out, v, "out") }
    })
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sejoin_family_classify(
    product: u64,
    out: *mut *mut SejoinFamily,
) -> SejoinStatus {
    guard(|| {
        let f = classify_family(product).map_err(lib_err)?;
        let handle = Box::into_raw(Box::new(SejoinFamily(f)));
        // SAFETY: forwarded caller contract.
        unsafe { write(out, handle, "out") }.inspect_err(|_| {
            // SAFETY: just allocated above and not shared.
            drop(unsafe { Box::from_raw(handle) });
        })
    })
}

/// Number of members, or 0 for a null handle.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sejoin_family_len(family: *const SejoinFamily) -> usize {
    // SAFETY: caller guarantees a live handle when non-null.
    unsafe { family.as_ref() }.map_or(0, |f| f.0.members.len())
}

/// # Safety
/// `family` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sejoin_family_member(
    family: *const SejoinFamily,
    index: usize,
    out: *mut SejoinFamilyMember,
) -> SejoinStatus {
    guard(|| {
        // SAFETY: caller guarantees a live handle when non-null.
        let f = unsafe { family.as_ref() }.ok_or_else(|| null_err("family"))?;
        let m = f.0.members.get(index).ok_or_else(|| {
            (
                SejoinStatus::OutOfRange,
                format!(
                    "index {index} out of range for {} members",
                    f.0.members.len()
                ),
            )
        })?;
        let member = SejoinFamilyMember {
            w1: m.member.w.w1(),
            w2: m.member.w.w2(),
            case_tag: match m.member.case_tag {
                CaseTag::P0 => SejoinCaseTag::P0,
                CaseTag::P1 => SejoinCaseTag::P1,
            },
            l1: narrow(m.member.l1, "l1")?,
            l2: narrow(m.member.l2, "l2")?,
            h4_order: narrow(m.member.h4_order, "h4_order")?,
            invariant: narrow(m.invariant.representative(), "invariant")?,
            class_id: m.class_id.map_or(-1, |c| c as i64),
        };
        // SAFETY: forwarded caller contract.
        unsafe { write(out, member, "out") }
    })
}

/// # Safety
/// `family` must be null or a handle from [`sejoin_family_classify`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sejoin_family_free(family: *mut SejoinFamily) {
    if !family.is_null() {
        // SAFETY: produced by Box::into_raw in sejoin_family_classify.
        drop(unsafe { Box::from_raw(family) });
    }
}

/// Full search report for `W <= max_w` as canonical JSON; free with
/// [`sejoin_string_free`]. The result does not depend on `shards`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sejoin_search_json(
    max_w: u64,
    shards: usize,
    out: *mut *mut c_char,
) -> SejoinStatus {
    guard(|| {
        let report = search_equivalent_pairs(max_w, shards).map_err(lib_err)?;
        let json = to_canonical_json(&report).map_err(lib_err)?;
        let s = into_c_string(json);
        // SAFETY: forwarded caller contract.
        unsafe { write(out, s, "out") }.inspect_err(|_| {
            // SAFETY: allocated just above.
            unsafe { sejoin_string_free(s) }
        })
    })
}

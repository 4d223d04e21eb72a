use std::ffi::{CStr, CString};
use std::ptr;

use sejoin_ffi::*;

fn last_error() -> String {
    let p = sejoin_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { sejoin_string_free(p) };
    s
}

fn new_join(base: &str, w1: u64, w2: u64) -> Result<*mut SejoinJoin, SejoinStatus> {
    let base = CString::new(base).unwrap();
    let mut h = ptr::null_mut();
    match unsafe { sejoin_join_new(base.as_ptr(), w1, w2, &mut h) } {
        SejoinStatus::Ok => Ok(h),
        s => Err(s),
    }
}

#[test]
fn join_lifecycle() {
    let j = new_join("CP2", 2, 1).unwrap();
    let (mut l1, mut l2) = (0, 0);
    assert_eq!(
        unsafe { sejoin_join_indices(j, &mut l1, &mut l2) },
        SejoinStatus::Ok
    );
    assert_eq!((l1, l2), (1, 1));

    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { sejoin_join_cohomology_json(j, &mut json) },
        SejoinStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["family"], "sphere-join");

    let mut adm = SejoinAdmissibility::Unknown;
    assert_eq!(
        unsafe { sejoin_join_admissibility(j, &mut adm) },
        SejoinStatus::Ok
    );
    assert_eq!(adm, SejoinAdmissibility::Yes);
    unsafe { sejoin_join_free(j) };
}

#[test]
fn join_errors() {
    assert_eq!(new_join("CP2", 2, 2), Err(SejoinStatus::InvalidArgument));
    assert!(last_error().contains("coprime"));
    assert_eq!(new_join("K3", 2, 1), Err(SejoinStatus::InvalidArgument));
    let j = new_join("G2+", 2, 1).unwrap();
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { sejoin_join_cohomology_json(j, &mut json) },
        SejoinStatus::Unsupported
    );
    assert!(json.is_null());
    unsafe { sejoin_join_free(j) };

    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { sejoin_join_new(ptr::null(), 2, 1, &mut h) },
        SejoinStatus::NullPointer
    );
    let base = CString::new("CP2").unwrap();
    assert_eq!(
        unsafe { sejoin_join_new(base.as_ptr(), 2, 1, ptr::null_mut()) },
        SejoinStatus::NullPointer
    );
    let (mut a, mut b) = (0, 0);
    assert_eq!(
        unsafe { sejoin_join_indices(ptr::null(), &mut a, &mut b) },
        SejoinStatus::NullPointer
    );
    unsafe {
        sejoin_join_free(ptr::null_mut());
        sejoin_string_free(ptr::null_mut());
        sejoin_family_free(ptr::null_mut());
    }
}

#[test]
fn arithmetic_entry_points() {
    let mut r = 0;
    assert_eq!(
        unsafe { sejoin_signed_cube_class(16, 135, &mut r) },
        SejoinStatus::Ok
    );
    assert_eq!(r, 46);
    assert_eq!(
        unsafe { sejoin_signed_cube_class(15, 135, &mut r) },
        SejoinStatus::InvalidArgument
    );

    let mut v = SejoinVerdict::Undetermined;
    assert_eq!(
        unsafe { sejoin_homotopy_equivalent(15, 1, 5, 3, &mut v) },
        SejoinStatus::Ok
    );
    assert_eq!(v, SejoinVerdict::Inequivalent);
    assert_eq!(
        unsafe { sejoin_homotopy_equivalent(155, 1, 31, 5, &mut v) },
        SejoinStatus::Ok
    );
    assert_eq!(v, SejoinVerdict::Equivalent);
    assert_eq!(
        unsafe { sejoin_homotopy_equivalent(10, 1, 5, 2, &mut v) },
        SejoinStatus::Ok
    );
    assert_eq!(v, SejoinVerdict::Undetermined);
}

#[test]
fn family_handles() {
    let mut f = ptr::null_mut();
    assert_eq!(
        unsafe { sejoin_family_classify(6545, &mut f) },
        SejoinStatus::Ok
    );
    assert_eq!(unsafe { sejoin_family_len(f) }, 8);
    let mut ids = Vec::new();
    for i in 0..8 {
        let mut m = std::mem::MaybeUninit::<SejoinFamilyMember>::uninit();
        assert_eq!(
            unsafe { sejoin_family_member(f, i, m.as_mut_ptr()) },
            SejoinStatus::Ok
        );
        let m = unsafe { m.assume_init() };
        assert_eq!((m.case_tag, m.l1, m.h4_order), (SejoinCaseTag::P0, 1, 6545));
        assert_eq!(m.w1 * m.w2, 6545);
        ids.push(m.class_id);
    }
    assert_eq!(ids, (0..8).collect::<Vec<i64>>());
    let mut m = std::mem::MaybeUninit::<SejoinFamilyMember>::uninit();
    assert_eq!(
        unsafe { sejoin_family_member(f, 8, m.as_mut_ptr()) },
        SejoinStatus::OutOfRange
    );
    unsafe { sejoin_family_free(f) };

    assert_eq!(
        unsafe { sejoin_family_classify(10, &mut f) },
        SejoinStatus::Ok
    );
    let mut m = std::mem::MaybeUninit::<SejoinFamilyMember>::uninit();
    assert_eq!(
        unsafe { sejoin_family_member(f, 0, m.as_mut_ptr()) },
        SejoinStatus::Ok
    );
    assert_eq!(unsafe { m.assume_init() }.class_id, -1);
    unsafe { sejoin_family_free(f) };

    assert_eq!(
        unsafe { sejoin_family_classify(0, &mut f) },
        SejoinStatus::InvalidArgument
    );
}

#[test]
fn search_json_is_shard_independent() {
    let run = |shards| {
        let mut s = ptr::null_mut();
        assert_eq!(
            unsafe { sejoin_search_json(2000, shards, &mut s) },
            SejoinStatus::Ok
        );
        take_string(s)
    };
    let one = run(1);
    assert_eq!(one, run(4));
    let v: serde_json::Value = serde_json::from_str(&one).unwrap();
    assert_eq!(v["pairs"][0]["W"], 155);
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { sejoin_search_json(10, 0, &mut s) },
        SejoinStatus::InvalidArgument
    );
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(sejoin_version()) }
        .to_str()
        .unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/sejoin.h")).unwrap();
    for name in [
        "sejoin_last_error_message",
        "sejoin_version",
        "sejoin_string_free",
        "sejoin_join_new",
        "sejoin_join_free",
        "sejoin_join_indices",
        "sejoin_join_cohomology_json",
        "sejoin_join_admissibility",
        "sejoin_signed_cube_class",
        "sejoin_homotopy_equivalent",
        "sejoin_family_classify",
        "sejoin_family_len",
        "sejoin_family_member",
        "sejoin_family_free",
        "sejoin_search_json",
        "typedef struct SejoinJoin SejoinJoin",
        "SEJOIN_STATUS_OK",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

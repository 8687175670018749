use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use classtower::pgroup::{GroupParams, PGroup};
use classtower_ffi::*;

#[test]
fn classify_and_invariants() {
    let mut kind = CtFieldKind::CtOther;
    let mut primes = [0i64; 4];
    let mut len = 0usize;
    let s = unsafe { ct_classify(-2244, &mut kind, primes.as_mut_ptr(), primes.len(), &mut len) };
    assert_eq!(s, CtStatus::CtOk);
    assert_eq!((kind, &primes[..len]), (CtFieldKind::CtType4p, &[17, 3, 11][..]));

    let s = unsafe { ct_classify(-2244, &mut kind, primes.as_mut_ptr(), 2, &mut len) };
    assert_eq!((s, len), (CtStatus::CtBufferTooSmall, 3));
    assert_eq!(unsafe { ct_classify(-12, &mut kind, ptr::null_mut(), 0, &mut len) }, CtStatus::CtNotFundamental);
    assert_eq!(unsafe { ct_classify(5, &mut kind, ptr::null_mut(), 0, &mut len) }, CtStatus::CtNotImaginary);
    assert_eq!(unsafe { ct_classify(-3, ptr::null_mut(), ptr::null_mut(), 0, &mut len) }, CtStatus::CtNullPointer);

    let mut inv = CtInvariants::default();
    assert_eq!(unsafe { ct_invariants(-5412, 0, &mut inv) }, CtStatus::CtOk);
    assert_eq!(inv, CtInvariants { n: 2, m: 3, h2_k: 16, h2_minus4p: 8 });
    assert_eq!(unsafe { ct_invariants(-84, 0, &mut inv) }, CtStatus::CtUnsupportedKind);
    assert_eq!(unsafe { ct_invariants(-2244, 100, &mut inv) }, CtStatus::CtBoundExceeded);
}

#[test]
fn tower_report_json() {
    let mut json = ptr::null_mut();
    let mut pass = 0;
    assert_eq!(unsafe { ct_tower_report_json(-2244, true, &mut json, &mut pass) }, CtStatus::CtOk);
    assert_eq!(pass, 1);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
    unsafe { ct_string_free(json) };
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["predicted_group"]["n"], 2);
    assert_eq!(v["predicted_group"]["m"], 2);
    unsafe { ct_string_free(ptr::null_mut()) };
}

#[test]
fn group_handle() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { ct_group_new(2, 2, 0, &mut g) }, CtStatus::CtOk);
    assert_eq!(unsafe { ct_group_order(g) }, 128);

    let mut k = 0;
    assert_eq!(unsafe { ct_group_lemma5_kernel_order(g, &mut k) }, CtStatus::CtOk);
    assert_eq!(k, 8);

    let mut parts = [0u64; 4];
    let mut len = 0;
    assert_eq!(unsafe { ct_group_abelian_type(g, false, parts.as_mut_ptr(), 4, &mut len) }, CtStatus::CtOk);
    assert_eq!(&parts[..len], &[4, 2, 2]);
    assert_eq!(unsafe { ct_group_abelian_type(g, true, parts.as_mut_ptr(), 4, &mut len) }, CtStatus::CtOk);
    assert_eq!(&parts[..len], &[4, 2]);

    let core = PGroup::new(GroupParams::gamma(2, 2, 0).unwrap()).unwrap();
    let (x, y, mut z) = ([1u32, 1, 3, 0, 1], [1u32, 0, 1, 1, 3], [9u32; 5]);
    assert_eq!(unsafe { ct_group_mul(g, x.as_ptr(), y.as_ptr(), z.as_mut_ptr()) }, CtStatus::CtOk);
    let want: [u32; 5] = core.mul_elem(&x.into(), &y.into()).unwrap().into();
    assert_eq!(z, want);
    let bad = [0u32, 0, 7, 0, 0];
    assert_ne!(unsafe { ct_group_mul(g, bad.as_ptr(), y.as_ptr(), z.as_mut_ptr()) }, CtStatus::CtOk);
    unsafe { ct_group_free(g) };

    let mut h = ptr::null_mut();
    assert_eq!(unsafe { ct_group_new(0, 2, 0, &mut h) }, CtStatus::CtInvalidArgument);
    assert!(h.is_null());
    assert_eq!(unsafe { ct_group_order(ptr::null()) }, 0);
    unsafe { ct_group_free(ptr::null_mut()) };
}

#[test]
fn status_messages() {
    for code in 0..=11 {
        let s = unsafe { CStr::from_ptr(ct_status_message(code)) };
        assert!(!s.to_bytes().is_empty());
    }
    let s = unsafe { CStr::from_ptr(ct_status_message(CtStatus::CtBufferTooSmall as i32)) };
    assert_eq!(s.to_str().unwrap(), "output buffer too small");
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/classtower.h")).unwrap();
    for f in [
        "ct_status_message",
        "ct_classify",
        "ct_invariants",
        "ct_tower_report_json",
        "ct_string_free",
        "ct_group_new",
        "ct_group_free",
        "ct_group_order",
        "ct_group_mul",
        "ct_group_abelian_type",
        "ct_group_lemma5_kernel_order",
        "typedef struct CtGroup CtGroup",
    ] {
        assert!(header.contains(f), "{f}");
    }
}

/// Compiles a C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    // target/<profile>/deps/capi-<hash> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libclasstower_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include "classtower.h"
int main(void) {
    CtGroup *g = NULL;
    if (ct_group_new(1, 1, 1, &g) != CT_OK) return 10;
    unsigned long long order = ct_group_order(g);
    uint64_t k = 0;
    CtStatus s = ct_group_lemma5_kernel_order(g, &k);
    ct_group_free(g);
    CtFieldKind kind;
    int64_t primes[4];
    size_t len = 0;
    if (ct_classify(-2244, &kind, primes, 4, &len) != CT_OK) return 11;
    char *json = NULL;
    int32_t pass = 0;
    if (ct_tower_report_json(-2244, false, &json, &pass) != CT_OK) return 12;
    ct_string_free(json);
    printf("%llu %d %d %lld %lld %lld %d %s\n", order, (int)s, (int)kind,
           (long long)primes[0], (long long)primes[1], (long long)primes[2], pass,
           ct_status_message(CT_UNSUPPORTED_KIND));
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.path().join("smoke");
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("cc available");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("32 "), "{text}");
    assert!(text.trim_end().ends_with("0 17 3 11 1 discriminant is not of Type 4p or 4r"), "{text}");
}

use std::path::{Path, PathBuf};
use std::process::Command;

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/bvq.h")
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(header()).expect("build script writes include/bvq.h");
    for decl in [
        "typedef struct BvqTransform BvqTransform;",
        "typedef struct BvqSampler BvqSampler;",
        "BVQ_STATUS_NOT_CANONICAL = 2",
        "enum BvqStatus bvq_validate(",
        "enum BvqStatus bvq_transform_new(",
        "void bvq_transform_free(struct BvqTransform *t);",
        "enum BvqStatus bvq_transform_compose(",
        "enum BvqStatus bvq_transform_rotation_matrix(const struct BvqTransform *t, double *out);",
        "enum BvqStatus bvq_diagonalize(",
        "struct BvqSampler *bvq_sampler_new(uint64_t seed);",
        "const char *bvq_status_message(enum BvqStatus status);",
    ] {
        assert!(h.contains(decl), "missing `{decl}`");
    }
}

const PROGRAM: &str = r#"
#include <math.h>
#include <stdio.h>
#include "bvq.h"

int main(void) {
    BvqCoefficients half = {{0.0, 0.5}, {0.5, 0.0}, {0.5, 0.0}, {0.0, -1.0}};
    BvqTransform *t = NULL, *inv = NULL, *id = NULL;
    if (bvq_transform_new(&half, bvq_default_tolerance(), &t) != BVQ_STATUS_OK) return 1;
    if (bvq_transform_invert(t, &inv) != BVQ_STATUS_OK) return 2;
    if (bvq_transform_compose(inv, t, &id) != BVQ_STATUS_OK) return 3;
    BvqCoefficients c;
    bvq_transform_coefficients(id, &c);
    if (fabs(c.l01.re - 1.0) > 1e-12 || fabs(c.l10.re) > 1e-12) return 4;

    double m[9];
    bvq_transform_rotation_matrix(t, m);
    double e;
    if (bvq_diagonalize(3.0, (BvqComplex){2.0, 0.0}, &e, &c, NULL) != BVQ_STATUS_OK || fabs(e - 5.0) > 1e-14) return 5;

    BvqCoefficients swap = {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    BvqTransform *bad = NULL;
    BvqStatus s = bvq_transform_new(&swap, 1e-12, &bad);
    if (s != BVQ_STATUS_NOT_CANONICAL || bad != NULL) return 6;
    printf("%s\n", bvq_status_message(s));

    bvq_transform_free(t);
    bvq_transform_free(inv);
    bvq_transform_free(id);
    return 0;
}
"#;

fn compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok().filter(|o| o.status.success()).map(|_| cc)
}

#[test]
fn c_program_links_against_the_static_library() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-c");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("main.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let include = header().parent().unwrap().to_path_buf();

    let ok = Command::new(&cc).args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"]).arg(&include).arg(&src).status().unwrap();
    assert!(ok.success(), "header does not compile as C99");
    let ok = Command::new(&cc).args(["-x", "c++", "-fsyntax-only", "-I"]).arg(&include).arg(&src).status().unwrap();
    assert!(ok.success(), "header does not compile as C++");

    // the test binary sits in <profile>/deps next to the library artifacts
    let profile = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile.join("libbvq_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let exe = dir.join("main");
    let ok = Command::new(&cc)
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(ok.success(), "linking against {} failed", lib.display());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "C program failed: {out:?}");
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "coefficients are not canonical");
}

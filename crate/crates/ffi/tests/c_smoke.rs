//! Compiles and runs a small C program against the generated header and
//! the static library, exercising the handle lifecycle and a full
//! construct-and-certify pipeline from C.

use std::path::PathBuf;
use std::process::Command;

const C_PROGRAM: &str = r#"
#include <assert.h>
#include <stdio.h>
#include "bentcat.h"

int main(void) {
    BcFieldContext *ctx = NULL;
    assert(bc_field_new(3, 0, &ctx) == BC_STATUS_OK);

    uint32_t alphas[3] = {
        bc_field_generator_pow(ctx, 1),
        bc_field_generator_pow(ctx, 4),
        bc_field_generator_pow(ctx, 6),
    };
    size_t sigma[4] = {0, 1, 2, 3};

    BcTruthTable *cat = NULL;
    assert(bc_monomial_concat(ctx, 6, 3, alphas, sigma, &cat) == BC_STATUS_OK);
    assert(bc_tt_variables(cat) == 8);

    int bent = 0;
    assert(bc_tt_is_bent(cat, &bent) == BC_STATUS_OK);
    assert(bent == 1);

    BcMmVerdict verdict;
    assert(bc_tt_mm_sharp(cat, 0.0, &verdict) == BC_STATUS_OK);
    assert(verdict == BC_MM_VERDICT_OUTSIDE);

    BcTruthTable *dual = NULL;
    assert(bc_tt_dual(cat, &dual) == BC_STATUS_OK);
    char *anf = NULL;
    assert(bc_tt_anf(dual, &anf) == BC_STATUS_OK);
    bc_string_free(anf);
    bc_tt_free(dual);
    bc_tt_free(cat);

    BcTruthTable *odd = NULL;
    assert(bc_tt_parse("x1*x2*x3", &odd) == BC_STATUS_OK);
    assert(bc_tt_is_bent(odd, &bent) == BC_STATUS_ODD_VARIABLES);
    printf("error message: %s\n", bc_last_error_message());
    bc_tt_free(odd);

    bc_field_free(ctx);
    printf("c smoke test passed\n");
    return 0;
}
"#;

fn workspace_target_dir() -> PathBuf {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    manifest.join("../../target").canonicalize().unwrap()
}

#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler available");
        return;
    }
    let profile_dir = workspace_target_dir().join(if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    });
    let staticlib = profile_dir.join("libbentcat_ffi.a");
    assert!(
        staticlib.exists(),
        "static library missing at {}",
        staticlib.display()
    );
    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");

    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let exe = dir.path().join("smoke");
    let compile = Command::new(&cc)
        .arg(&src)
        .arg(&staticlib)
        .arg(format!("-I{}", include_dir.display()))
        .args(["-o"])
        .arg(&exe)
        .args(["-lpthread", "-ldl", "-lm"])
        .output()
        .unwrap();
    assert!(
        compile.status.success(),
        "compile failed: {}",
        String::from_utf8_lossy(&compile.stderr)
    );
    let run = Command::new(&exe).output().unwrap();
    let out = String::from_utf8_lossy(&run.stdout);
    assert!(run.status.success(), "{out}");
    assert!(out.contains("c smoke test passed"), "{out}");
    assert!(out.contains("requires an even variable count"), "{out}");
}

use std::path::{Path, PathBuf};
use std::process::Command;

const EXPORTED: &[&str] = &[
    "nconc_version",
    "nconc_last_error_message",
    "nconc_hcrit",
    "nconc_ground_energy",
    "nconc_log_partition",
    "nconc_thermal_concurrence",
    "nconc_threshold_temperature",
    "nconc_chain_new",
    "nconc_chain_free",
    "nconc_chain_ground",
    "nconc_chain_thermal",
    "nconc_density_matrix_new",
    "nconc_density_matrix_free",
    "nconc_density_matrix_dim",
    "nconc_mixed_concurrence",
    "nconc_pure_concurrence",
];

const PROGRAM: &str = r#"
#include <math.h>
#include <stdio.h>
#include "nconc.h"

int main(void) {
    double h = 0.0;
    if (nconc_hcrit(4, 1.0, NCONC_BOUNDARY_PERIODIC, &h) != NCONC_STATUS_OK) return 1;
    if (fabs(h - 0.82842712474619) > 1e-12) return 2;

    NconcChain *chain = NULL;
    if (nconc_chain_new(4, 1.0, 1.0, 0.0, 0.0, NCONC_BOUNDARY_PERIODIC, &chain) != NCONC_STATUS_OK) return 3;
    double e, c;
    int deg;
    if (nconc_chain_ground(chain, &e, &c, &deg) != NCONC_STATUS_OK) return 4;
    nconc_chain_free(chain);
    if (fabs(c - 1.0) > 1e-10 || deg != 0) return 5;

    if (nconc_hcrit(4, 1.0, 9, &h) != NCONC_STATUS_INVALID_ARGUMENT) return 6;
    char msg[128];
    if (nconc_last_error_message(msg, sizeof msg) == 0) return 7;
    printf("%s %.15f\n", nconc_version(), e);
    return 0;
}
"#;

fn include_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(include_dir().join("nconc.h")).unwrap();
    assert!(header.contains("#ifndef NCONC_H"));
    assert!(header.contains("typedef struct NconcChain NconcChain;"));
    assert!(header.contains("NCONC_STATUS_SIZE_CAP = 3"));
    for f in EXPORTED {
        assert!(header.contains(&format!("{f}(")), "{f} missing from header");
    }
}

fn c_compiler() -> Option<String> {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    Command::new(&cc).arg("--version").output().ok().filter(|o| o.status.success()).map(|_| cc)
}

/// Builds the static library with the running cargo and profile. `cargo test`
/// only produces the rlib, so the archive next to `deps/` may be stale.
fn staticlib() -> Option<PathBuf> {
    let cargo = std::env::var("CARGO").ok()?;
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let target_dir = profile_dir.parent()?;
    let mut cmd = Command::new(cargo);
    cmd.args(["build", "--quiet", "-p", "nconc-ffi", "--lib", "--target-dir"])
        .arg(target_dir)
        .current_dir(env!("CARGO_MANIFEST_DIR"));
    if profile_dir.file_name()? == "release" {
        cmd.arg("--release");
    }
    if !cmd.status().ok()?.success() {
        return None;
    }
    let lib = profile_dir.join("libnconc_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn header_compiles_and_links_from_c() {
    let Some(cc) = c_compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    std::fs::write(&src, PROGRAM).unwrap();

    let syntax = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(include_dir())
        .arg(&src)
        .output()
        .unwrap();
    assert!(syntax.status.success(), "{}", String::from_utf8_lossy(&syntax.stderr));

    let Some(lib) = staticlib() else {
        eprintln!("static library not built; skipping link step");
        return;
    };
    let exe = dir.path().join("smoke");
    let link = Command::new(&cc)
        .args(["-std=c99", "-I"])
        .arg(include_dir())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .unwrap();
    assert!(link.status.success(), "{}", String::from_utf8_lossy(&link.stderr));
    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert!(String::from_utf8_lossy(&run.stdout).starts_with(env!("CARGO_PKG_VERSION")));
}

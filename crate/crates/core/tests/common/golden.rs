//! The documented CLI invocations and their recorded JSON outputs.

use std::path::PathBuf;
use std::process::Command;

pub struct GoldenCase {
    pub file: &'static str,
    pub args: &'static [&'static str],
    pub exit_code: i32,
}

pub const CASES: &[GoldenCase] = &[
    GoldenCase {
        file: "antipode_shuffle_ab_all.json",
        args: &["antipode", "shuffle", "ab", "--algorithm", "all"],
        exit_code: 0,
    },
    GoldenCase { file: "antipode_poly_x2.json", args: &["antipode", "poly", "x^2"], exit_code: 0 },
    GoldenCase { file: "antipode_ck_ladder2.json", args: &["antipode", "ck", "T[T[]]"], exit_code: 0 },
    GoldenCase {
        file: "antipode_ck_product.json",
        args: &["antipode", "ck", "T[T[]] * T[]", "--algorithm", "all"],
        exit_code: 0,
    },
    GoldenCase {
        file: "verify_shuffle_all_5.json",
        args: &["verify", "shuffle", "--all", "--max-degree", "5"],
        exit_code: 0,
    },
    GoldenCase {
        file: "verify_broken_all_3.json",
        args: &["verify", "broken", "--all", "--max-degree", "3"],
        exit_code: 1,
    },
    GoldenCase {
        file: "verify_quasishuffle_all_4.json",
        args: &["verify", "quasishuffle", "--all", "--max-degree", "4"],
        exit_code: 0,
    },
    GoldenCase {
        file: "coproduct_shuffle_abc_reduced_2.json",
        args: &["coproduct", "shuffle", "abc", "--reduced", "--iterate", "2"],
        exit_code: 0,
    },
    GoldenCase { file: "coproduct_poly_x_reduced.json", args: &["coproduct", "poly", "x", "--reduced"], exit_code: 0 },
    GoldenCase { file: "coproduct_ck_ladder2.json", args: &["coproduct", "ck", "T[T[]]"], exit_code: 0 },
    GoldenCase { file: "filtration_shuffle_abc.json", args: &["filtration", "shuffle", "abc"], exit_code: 0 },
    GoldenCase { file: "filtration_poly_1.json", args: &["filtration", "poly", "1"], exit_code: 0 },
    GoldenCase { file: "filtration_shuffle_a_plus_ab.json", args: &["filtration", "shuffle", "a + ab"], exit_code: 0 },
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run_cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcalc"))
        .args(args)
        .env_remove("HOPFCALC_MAX_DEGREE")
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

pub fn run_json(case: &GoldenCase) -> Run {
    let mut args = case.args.to_vec();
    args.extend(["--format", "json"]);
    run_cli(&args)
}

/// Compares one case against its recorded file; `HOPFCALC_BLESS=1` rewrites
/// the file instead.
pub fn check_case(case: &GoldenCase) -> Result<(), String> {
    let run = run_json(case);
    if run.code != case.exit_code {
        return Err(format!("{}: exit code {} (expected {}): {}", case.file, run.code, case.exit_code, run.stderr));
    }
    let path = golden_dir().join(case.file);
    if std::env::var_os("HOPFCALC_BLESS").is_some() {
        std::fs::write(&path, &run.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != run.stdout {
        return Err(format!("{}: output differs from the recorded file", case.file));
    }
    Ok(())
}

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn hgl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgl")).args(args).output().expect("spawn hgl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn list_names_every_builtin() {
    let o = hgl(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["veronese-ext2", "veronese-duality", "kodiyalam-tor", "placekeeper-tor", "cm-degree", "artin-rees-probe", "top-soc"] {
        assert!(text.contains(name), "{}", name);
    }
}

#[test]
fn json_is_byte_identical_across_runs_and_execution_modes() {
    let a = hgl(&["scenario", "kodiyalam-tor", "--format", "json"]);
    let b = hgl(&["scenario", "kodiyalam-tor", "--format", "json"]);
    let c = hgl(&["scenario", "kodiyalam-tor", "--format", "json", "--sequential"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["sequence"][0]["length"], 2);
    assert_eq!(v["fit"]["classes"][0]["polynomial"], "n + 1");
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn timing_is_opt_in() {
    let o = hgl(&["scenario", "kodiyalam-tor", "--format", "json", "--timing"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.get("timing_ms").is_some());
}

#[test]
fn csv_rows_and_trailer() {
    let o = hgl(&["scenario", "veronese-ext2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,length"));
    let rows: Vec<&str> = lines.clone().take(11).collect();
    assert_eq!(rows, ["2,1", "3,2", "4,4", "5,6", "6,9", "7,12", "8,16", "9,20", "10,25", "11,30", "12,36"]);
    assert!(text.contains("# fitted: period 2"));
    assert!(text.contains("# oracle: match"));
}

#[test]
fn fit_reads_the_csv_the_runner_writes() {
    let o = hgl(&["scenario", "veronese-ext2"]);
    let path = scratch("veronese.csv", &stdout(&o));
    let fit = hgl(&["fit", path.to_str().unwrap(), "--format", "json"]);
    assert!(fit.status.success(), "{}", stderr(&fit));
    let v: serde_json::Value = serde_json::from_slice(&fit.stdout).unwrap();
    assert_eq!(v["period"], 2);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["normalized_leading_coefficient"], "1/2");
}

#[test]
fn fit_from_stdin_and_no_fit_exits_zero() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hgl"))
        .args(["fit", "-", "--max-period", "1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let body: String = std::iter::once("n,length\n".to_string())
        .chain((1..=12).map(|n: u64| format!("{},{}\n", n, 1u64 << n)))
        .collect();
    child.stdin.take().unwrap().write_all(body.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("NO_FIT"));
}

#[test]
fn infinite_length_is_an_error_naming_n() {
    let path = scratch(
        "infinite.hgl",
        "ring R vars x y\nideal X = x\nfunctor tor i=0 first=quotient(X^n) second=R\nrange 2 9\n",
    );
    let o = hgl(&["run", path.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("infinite at n = 2"), "{}", stderr(&o));
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let path = scratch("bad.hgl", "ring R vars x y\nideal m = x, y\nfunctor tor i=1 first=quotient(J^n) second=R\n");
    let o = hgl(&["run", path.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("3:32: unknown name `J`"), "{}", stderr(&o));
}

#[test]
fn oracle_outside_its_scope_is_refused() {
    let path = scratch(
        "oracle.hgl",
        "ring R vars x y\nideal m = x, y\nfunctor tor i=1 first=quotient(m^n) second=R\nrange 1 8\noracle on\n",
    );
    let o = hgl(&["run", path.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("oracle on"));
}

#[test]
fn unknown_builtin() {
    let o = hgl(&["scenario", "nope"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("hgl list"));
}

#[test]
fn gb_dump_reports_criterion() {
    let src = hgl_cli::scenarios::builtin("artin-rees-probe").unwrap().source;
    let path = scratch("probe.hgl", src);
    let o = hgl(&["gb", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("ring R = k[U, V, W] / (V^2 - U*W)"));
    assert!(text.contains("criterion ok"));
    assert!(!text.contains("FAILED"));
}

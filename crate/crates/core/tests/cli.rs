use std::process::{Command, Output};

fn hlvertex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlvertex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim_end().to_string()
}

#[test]
fn kostka_small_value() {
    let o = hlvertex(&[
        "kostka", "--lambda", "2,0", "--gamma", "1;1", "--eta", "1,1",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "q");
}

#[test]
fn kostka_methods_agree_on_output() {
    let args = ["--lambda", "2,1,1,0", "--gamma", "1,1,1,1", "--eta", "2,2"];
    let run = |m: &str| {
        let mut a = vec!["kostka"];
        a.extend(args);
        a.extend(["--method", m]);
        stdout(&hlvertex(&a))
    };
    let both = run("both");
    assert_eq!(both, run("kostant"));
    assert_eq!(both, run("vertex"));
}

#[test]
fn kostka_json_shape() {
    let o = hlvertex(&[
        "--json", "kostka", "--lambda", "2,0", "--gamma", "1;1", "--eta", "1,1",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["method"], "both");
    assert_eq!(v["value"]["1"], 1);
}

#[test]
fn straighten_outputs() {
    assert_eq!(stdout(&hlvertex(&["straighten", "--weight", "1,2"])), "0");
    assert_eq!(
        stdout(&hlvertex(&["straighten", "--weight", "2,1"])),
        "H[2,1]"
    );
    let o = hlvertex(&["straighten", "--weight", "0,2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-H[1,1]");
}

#[test]
fn rewrite_dominance_example() {
    let o = hlvertex(&["rewrite", "--word", "H[2,2]H[4,1]"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(
        stdout(&o),
        "(q^2-q) * H[3,3]H[3,0] + q^2 * H[4,2]H[2,1] - q^3 * H[4,3]H[1,1] \
         + (-q^3+q^2) * H[4,3]H[2,0] + (q^4-q^3) * H[4,4]H[1,0]"
    );
}

#[test]
fn eval_on_one() {
    let o = hlvertex(&["eval", "--word", "H[1]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "s[1]");
}

#[test]
fn parse_errors_exit_two() {
    let o = hlvertex(&["straighten", "--weight", "1,x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let o = hlvertex(&["kostka", "--lambda", "1,2", "--gamma", "1,2", "--eta", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hlvertex(&["no-such-command"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hlvertex(&["check", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_is_deterministic() {
    let args = ["table", "--eta", "2,1", "--max-degree", "4"];
    let a = hlvertex(&args);
    let b = hlvertex(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("lambda"));
}

#[test]
fn check_all_passes_at_default_degree() {
    let o = hlvertex(&["check", "--suite", "all", "--max-degree", "5"]);
    assert!(
        o.status.success(),
        "{}\n{}",
        stdout(&o),
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(!stdout(&o).contains("FAILED"));
}

#[test]
fn check_json_reports_ok() {
    let o = hlvertex(&["--json", "check", "--suite", "colskew", "--max-degree", "4"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ok"], true);
}

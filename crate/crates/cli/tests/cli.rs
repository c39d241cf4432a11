use std::process::{Command, Output};

fn beatty(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beatty"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn kernel_commands() {
    assert_eq!(stdout(&beatty(&["f", "10"])), "16\n");
    assert_eq!(stdout(&beatty(&["f", "-3"])), "-5\n");
    assert_eq!(stdout(&beatty(&["fbar", "10"])), "26\n");
    assert_eq!(stdout(&beatty(&["finv", "16"])), "10\n");
    assert_eq!(stdout(&beatty(&["cmp", "--frac", "2", "1"])), "less\n");
    assert_eq!(stdout(&beatty(&["cmp", "2", "1"])), "greater\n");
    assert_eq!(
        stdout(&beatty(&["f", "1_000_000_000_000_000_000_000"])),
        "1618033988749894848204\n"
    );
}

#[test]
fn missing_inverse_exits_one() {
    let o = beatty(&["finv", "7"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "none\n");
}

#[test]
fn fibonacci_commands() {
    assert_eq!(stdout(&beatty(&["fibfloor", "12"])), "5\n");
    assert_eq!(stdout(&beatty(&["g", "12"])), "8\n");
    assert_eq!(stdout(&beatty(&["zeckendorf", "100"])), "89 8 3\n");
    let o = beatty(&["fibfloor", "0"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn witnesses() {
    assert_eq!(stdout(&beatty(&["witness", "13", "5"])), "-8\n");
    assert_eq!(stdout(&beatty(&["refine", "13", "5", "3"])), "-8\n-42\n-131\n");
}

#[test]
fn extrema_commands() {
    assert_eq!(stdout(&beatty(&["extrema", "--min", "4", "12"])), "5\n");
    assert_eq!(stdout(&beatty(&["extrema", "--max", "-13", "-4"])), "-5\n");
    assert_eq!(stdout(&beatty(&["extrema", "--min", "4", "12", "--above", "2"])), "7\n");
    assert_eq!(
        stdout(&beatty(&["extrema", "--max", "4", "12", "--below", "3"])),
        "11\n"
    );
    let empty = beatty(&["extrema", "--min", "4", "12", "--above", "8"]);
    assert_eq!((code(&empty), stdout(&empty)), (1, "none\n".to_owned()));
    assert_eq!(code(&beatty(&["extrema", "--min", "4", "5"])), 2);
    assert_eq!(code(&beatty(&["extrema", "4", "12"])), 2);
}

#[test]
fn decide_and_eval_set_the_exit_status() {
    let yes = beatty(&[
        "decide",
        "exists x (4 < x && x < 12 && frac(2) < frac(x) && frac(x) < frac(1))",
    ]);
    assert_eq!((code(&yes), stdout(&yes)), (0, "true\n".to_owned()));
    let no = beatty(&["decide", "exists x (4 < x && x < 12 && frac(8) < frac(x))"]);
    assert_eq!((code(&no), stdout(&no)), (1, "false\n".to_owned()));
    assert_eq!(code(&beatty(&["eval", "x <* y", "--bind", "x=2", "--bind", "y=1"])), 0);
    assert_eq!(code(&beatty(&["eval", "x <* y", "--bind", "x=1"])), 2);
}

#[test]
fn syntax_errors_carry_a_position() {
    let o = beatty(&["decide", "f("]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 2"));
}

#[test]
fn json_and_csv_output() {
    let o = beatty(&["--output", "json", "f", "100000000000000000000000000000"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["f"].to_string(), "161803398874989484820458683436");
    let o = beatty(&["--output", "csv", "zeckendorf", "100"]);
    assert_eq!(stdout(&o), "n,indices,values\n100,10 5 3,89 8 3\n");
    let o = beatty(&["--output", "json", "refine", "13", "5", "2"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn plot_formats() {
    let csv = stdout(&beatty(&[
        "plot", "--from", "-1", "--to", "1", "--digits", "4", "--format", "csv",
    ]));
    assert_eq!(csv, "n,f_n,frac_phi_n\n-1,-2,0.3819\n0,0,0.0000\n1,1,0.6180\n");
    let svg = stdout(&beatty(&["plot", "--from", "0", "--to", "3", "--format", "svg-points"]));
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 4);
    assert_eq!(
        code(&beatty(&["plot", "--from", "3", "--to", "0", "--format", "csv"])),
        2
    );
}

#[test]
fn check_reports() {
    let o = beatty(&[
        "--output", "json", "check", "--bound", "20", "--random", "10", "--suite", "extrema",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["name"], "extrema");
    assert_eq!(v["pass"], true);
    let o = beatty(&["check", "--bound", "20", "--random", "10", "--paper-literal"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 6);
    assert!(stdout(&o).contains("literal:"));
    assert_eq!(code(&beatty(&["check", "--suite", "nonesuch"])), 2);
}

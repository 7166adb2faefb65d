use std::process::{Command, Output};

fn modlang(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modlang"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const EXP: &str = "(nil[0] := 1) ! (0 + 1)";

#[test]
fn check_prints_type_and_derivation() {
    let o = modlang(&["check", EXP]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "TOption\n(lift-wt-array (ok-lookup (lift-wt-array (ok-ins (lift-wt-array ok-nil) (lift-wt-nat 1) (lift-wt-nat 0))) (lift-wt-sum (ok-sum (lift-wt-nat 0) (lift-wt-nat 1)))))\n"
    );
}

#[test]
fn check_reports_ill_typed_terms() {
    let o = modlang(&["check", "nil + 1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "ill-typed\n");
}

#[test]
fn syntax_errors_are_user_errors() {
    let o = modlang(&["check", "some("]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 5"));
}

#[test]
fn preserve_prints_the_three_derivations() {
    let o = modlang(&["preserve", EXP]);
    assert!(o.status.success());
    let expected = [
        "(lift-wt-array (ok-lookup (lift-wt-array (ok-ins (lift-wt-array ok-nil) (lift-wt-nat 1) (lift-wt-nat 0))) (lift-wt-sum (ok-sum (lift-wt-nat 0) (lift-wt-nat 1)))))",
        "(step[] (stepi (step⁺ stepv)))",
        "(lift-wt-array (ok-lookup (lift-wt-array (ok-ins (lift-wt-array ok-nil) (lift-wt-nat 1) (lift-wt-nat 0))) (lift-wt-nat 1)))",
    ];
    assert_eq!(stdout(&o), expected.join("\n") + "\n");
}

#[test]
fn preserve_needs_a_step() {
    let o = modlang(&["preserve", "6"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn eval_reaches_normal_form() {
    let o = modlang(&["eval", EXP]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "none\n");

    let o = modlang(&["eval", "--trace", "1 + 2 + 3"]);
    assert_eq!(
        stdout(&o),
        "⟶ 3 + 3\n  (step⁺ (stepl (step⁺ stepv)))\n⟶ 6\n  (step⁺ stepv)\n6\n"
    );
}

#[test]
fn eval_respects_fuel() {
    let o = modlang(&["eval", "--fuel", "1", "1 + 2 + 3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "3 + 3\n");
}

#[test]
fn sweeps_report_success() {
    for cmd in ["oracle-diff", "selftest"] {
        let o = modlang(&[cmd, "--depth", "1"]);
        assert!(o.status.success(), "{cmd}");
        let out = stdout(&o);
        assert!(out.contains("terms visited:   185"), "{out}");
        assert!(out.contains("failures:        0"), "{out}");
    }
}

#[test]
fn oversized_sweeps_are_refused() {
    let o = modlang(&["selftest", "--depth", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let o = modlang(&["oracle-diff", "--depth", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

use std::process::{Command as Process, Output};

use affine_elasticity::cli::{execute, run, Command, Query, Solver};
use affine_elasticity::monoid::validate_minimal_generation;
use affine_elasticity::{Canonical, CanonicalMonoid3, ExtRat};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_affine-elasticity"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = bin(args);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

#[test]
fn example_non_member_exits_one() {
    let (code, v) = json(&["--json", "check", "0,1;11,10;10,3", "199,119"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["verdict"], "not_member");
    assert_eq!(v["solver_used"], "dim3-general");
    assert_eq!(v["monoid"]["star"], false);
}

#[test]
fn example_member_reports_factorization() {
    let (code, v) = json(&["--json", "check", "0,1;11,10;10,3", "199,120"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"], "member");
    assert_eq!(
        v["result"]["factorization"]["mults"],
        serde_json::json!([0, 9, 10])
    );
    assert_eq!(v["result"]["factorization"]["length"], 19);
}

#[test]
fn elasticity_round_trips_exactly() {
    let (code, v) = json(&["--json", "elasticity", "0,1;1,2;3,5", "6,13"]);
    assert_eq!(code, 0);
    assert_eq!(v["solver_used"], "dim3-star-theorem");
    assert_eq!(v["monoid"]["star"], true);
    let rho: ExtRat = v["result"]["elasticity"].as_str().unwrap().parse().unwrap();
    assert_eq!(rho, ExtRat::new(7, 5).unwrap());
    assert!(v["result"].get("elasticity_approx").is_none());
}

#[test]
fn approx_prints_both() {
    let (_, v) = json(&["--json", "--approx", "limit", "0,1;1,2;3,5", "6,13"]);
    assert_eq!(v["result"]["limit"], "7/5");
    assert!((v["result"]["limit_approx"].as_f64().unwrap() - 1.4).abs() < 1e-12);

    let text = String::from_utf8(bin(&["limit", "0,1;1,2;3,5", "6,13"]).stdout).unwrap();
    assert!(text.contains("limit: 7/5\n"), "{text}");
    assert!(!text.contains("1.4"));
}

#[test]
fn big_integers_stay_exact_in_json() {
    let x = "123456789012345678901234567890";
    let (code, v) = json(&["--json", "check", "0,1;1,0", &format!("{x},7")]);
    assert_eq!(code, 0);
    assert_eq!(v["input"][0].to_string(), x);
    assert_eq!(v["result"]["factorization"]["mults"][1].to_string(), x);
}

#[test]
fn scan_emits_one_row_per_multiple() {
    let out = bin(&["--csv", "scan", "0,1;1,2;3,5", "6,13", "--k-max", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,rho_exact,rho_limit,gap"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 100);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row[0], (i + 1).to_string());
        // every multiple of (6,13) sits exactly on the limit
        assert_eq!(row[1..], ["7/5", "7/5", "0"]);
    }
}

#[test]
fn scan_gaps_shrink_off_the_lattice_of_periods() {
    let out = bin(&["--csv", "scan", "0,1;1,2;3,5", "1,3", "--k-max", "100"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let gaps: Vec<ExtRat> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(gaps.len(), 100);
    assert!(gaps[99] < gaps[0]);
}

#[test]
fn error_codes_in_json() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["--json", "check", "0,0;1,1", "1,1"], 2, "ZeroGenerator"),
        (&["--json", "check", "0,1;1,x", "1,1"], 2, "SyntaxError"),
        (&["--json", "check", "0,1;2,4", "1,1"], 2, "NotPhiMinimal"),
        (
            &["--json", "check", "0,1;1,2;2,4", "1,1"],
            2,
            "NotPhiMinimal",
        ),
        (
            &["--json", "check", "0,1;1,1;2,1;3,1", "1,1"],
            2,
            "EmbeddingDimension",
        ),
        (
            &["--json", "check", "0,1;1,1;2,3", "1,1"],
            2,
            "NotMinimallyGenerated",
        ),
        (
            &["--json", "limit", "0,1;11,10;10,3", "199,120"],
            2,
            "StarRequired",
        ),
        (
            &["--json", "scan", "0,1;3,2", "3,2", "--k-max", "5"],
            2,
            "StarRequired",
        ),
        (
            &["--json", "elasticity", "0,1;1,2;3,5", "0,0"],
            2,
            "ZeroElement",
        ),
        (
            &["--json", "elasticity", "0,1;1,2;3,5", "6,9"],
            1,
            "NotMember",
        ),
    ];
    for (args, code, expected) in cases {
        let (got, v) = json(args);
        assert_eq!(got, *code, "{args:?}: {v}");
        assert_eq!(v["error"]["code"], *expected, "{args:?}: {v}");
    }
}

#[test]
fn minimality_check_can_be_skipped() {
    let (code, v) = json(&[
        "--json",
        "--no-minimality-check",
        "check",
        "0,1;1,1;2,3",
        "2,3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"], "member");
}

#[test]
fn text_errors_go_to_stderr() {
    let out = bin(&["check", "0,1;1", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .starts_with("error [SyntaxError]"));
}

#[test]
fn answers_are_reported_in_input_coordinates() {
    // generators out of slope order; mults follow the input order
    let (code, v) = json(&["--json", "factorize", "3,1;0,1;1,2", "7,5"]);
    assert_eq!(code, 0);
    let facts = v["result"]["factorizations"].as_array().unwrap();
    assert!(!facts.is_empty());
    for f in facts {
        let m: Vec<u64> = f["mults"]
            .as_array()
            .unwrap()
            .iter()
            .map(|k| k.as_u64().unwrap())
            .collect();
        assert_eq!((3 * m[0] + m[2], m[0] + m[1] + 2 * m[2]), (7, 5));
    }
}

#[test]
fn every_subcommand_is_wired() {
    for sub in [
        "check",
        "factorize",
        "elasticity",
        "limit",
        "scan",
        "oracle",
    ] {
        let inv = execute(["affine-elasticity", sub, "--help"]);
        assert_eq!(inv.code, 0, "{sub}");
        assert!(!inv.stdout.is_empty());
    }
    let inv = execute([
        "affine-elasticity",
        "factorize",
        "--extremes",
        "0,1;1,2;3,5",
        "6,13",
    ]);
    assert_eq!(inv.code, 0);
    assert!(
        inv.stdout.contains("shortest: (3,0,2) length 5"),
        "{}",
        inv.stdout
    );
    assert!(
        inv.stdout.contains("longest: (1,6,0) length 7"),
        "{}",
        inv.stdout
    );
}

#[test]
fn routed_answers_match_the_oracle_command() {
    let mut compared = 0;
    for (a, b, c, d) in [
        (1, 2, 3, 5),
        (1, 1, 2, 1),
        (2, 1, 3, 1),
        (3, 2, 5, 3),
        (1, 1, 4, 3),
    ] {
        let m = CanonicalMonoid3::new(a, b, c, d).unwrap();
        assert!(m.star());
        assert!(validate_minimal_generation(&Canonical::Dim3(m.clone())));
        let text = format!("0,1;{a},{b};{c},{d}");
        for x in 0..=20u32 {
            for y in 0..=20u32 {
                let v = format!("{x},{y}");
                let oracle = run(&Query::new(Command::Oracle, &text, &v)).unwrap();
                let check = run(&Query::new(Command::Check, &text, &v)).unwrap();
                assert_eq!(check.solver_used, Solver::Dim3StarTheorem);
                assert_eq!(check.is_member(), oracle.is_member(), "{text} {v}");
                if oracle.is_member() == Some(true) && (x, y) != (0, 0) {
                    let rho = run(&Query::new(Command::Elasticity, &text, &v)).unwrap();
                    assert_eq!(rho.elasticity(), oracle.elasticity(), "{text} {v}");
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 500);
}

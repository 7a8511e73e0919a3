use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sympair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympair")).args(args).output().unwrap()
}

fn sympair_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sympair"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> &str {
    std::str::from_utf8(&o.stderr).unwrap()
}

#[test]
fn pair_examples() {
    let o = sympair(&["pair", "f", "3", "2"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "6\n"));
    assert_eq!(stdout(&sympair(&["pair", "g", "9", "9"])), "99\n");
    assert_eq!(stdout(&sympair(&["pair", "cantor", "5", "9"])), "114\n");
}

#[test]
fn unpair_examples() {
    let o = sympair(&["unpair", "f", "7"]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "5 1\n"));
    assert_eq!(stdout(&sympair(&["unpair", "g", "5"])), "2 1\n");
    assert_eq!(stdout(&sympair(&["unpair", "cantor", "7"])), "2 1\n");
}

#[test]
fn big_values_round_trip() {
    let m = "123456789012345678901234567890123456789012345678901234567890";
    let n = "98765432109876543210";
    let code = sympair(&["pair", "f", n, m]);
    assert!(code.status.success());
    let back = sympair(&["unpair", "f", stdout(&code).trim()]);
    assert_eq!(stdout(&back), format!("{m} {n}\n"));
}

#[test]
fn exit_codes() {
    let o = sympair(&["pair", "f", "0", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("domain"));
    assert_eq!(sympair(&["unpair", "f", "0"]).status.code(), Some(2));
    assert_eq!(sympair(&["bogus"]).status.code(), Some(1));
    assert_eq!(sympair(&["pair", "f", "1"]).status.code(), Some(1));
    assert_eq!(sympair(&["pair", "x", "1", "1"]).status.code(), Some(1));
    assert_eq!(sympair(&["edges", "f", "/nonexistent/edges.txt"]).status.code(), Some(1));
    assert_eq!(sympair(&["--version"]).status.code(), Some(0));
}

#[test]
fn table_default_is_ten_by_ten() {
    let o = sympair(&["table", "g"]);
    assert!(o.status.success());
    let lines: Vec<&str> = stdout(&o).lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[0].split_whitespace().skip(1).collect::<Vec<_>>(), ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"]);
    assert_eq!(lines[10].split_whitespace().last(), Some("99"));
}

#[test]
fn csv_and_aligned_agree() {
    for scheme in ["cantor", "f", "g"] {
        let aligned = sympair(&["table", scheme, "--rows", "7", "--cols", "13"]);
        let csv = sympair(&["table", scheme, "--rows", "7", "--cols", "13", "--csv"]);
        let a: Vec<Vec<String>> = stdout(&aligned)
            .lines()
            .map(|l| l.split_whitespace().map(str::to_owned).collect())
            .collect();
        let c: Vec<Vec<String>> = stdout(&csv)
            .lines()
            .map(|l| l.split(',').map(str::to_owned).collect())
            .collect();
        assert_eq!(a, c, "{scheme}");
        assert_eq!(c.len(), 8);
        assert!(c.iter().all(|r| r.len() == 14));
    }
}

#[test]
fn table_cells_match_pair_command() {
    let csv = sympair(&["table", "f", "--rows", "4", "--cols", "4", "--row-start", "20", "--col-start", "5", "--csv"]);
    for line in stdout(&csv).lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        for (j, cell) in fields[1..].iter().enumerate() {
            let col = (5 + j).to_string();
            assert_eq!(stdout(&sympair(&["pair", "f", fields[0], &col])).trim(), *cell);
        }
    }
}

#[test]
fn table_origin_mismatch_is_usage_error() {
    assert_eq!(sympair(&["table", "f", "--col-start", "0"]).status.code(), Some(1));
    assert_eq!(sympair(&["table", "g", "--cols", "0"]).status.code(), Some(1));
}

#[test]
fn edges_from_file_and_stdin() {
    let dir = std::env::temp_dir().join(format!("sympair-edges-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("edges.txt");
    std::fs::write(&path, "# undirected\r\n1 2\r\n2 1\r\n\r\n10 10\r\n").unwrap();

    let from_file = sympair(&["edges", "f", path.to_str().unwrap()]);
    assert_eq!((from_file.status.code(), stdout(&from_file)), (Some(0), "2\n2\n100\n"));
    let again = sympair(&["edges", "f", path.to_str().unwrap()]);
    assert_eq!(from_file.stdout, again.stdout);

    let from_stdin = sympair_stdin(&["edges", "g", "-"], "3 0\n0 3\n");
    assert_eq!(stdout(&from_stdin), "4\n4\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn edges_errors_name_the_line() {
    let o = sympair_stdin(&["edges", "f", "-"], "0 3\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));

    let o = sympair_stdin(&["edges", "g", "-"], "1 2\n# ok\nthree 4\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "5\n");
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn check_passes() {
    let o = sympair(&["check", "--limit", "1000"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("14 of 14 checks passed (limit 1000)"));
}

#[test]
fn check_rejects_tiny_limit() {
    assert_eq!(sympair(&["check", "--limit", "1"]).status.code(), Some(2));
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sqcolor(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sqcolor"))
        .args(args)
        .env_remove("CHROMA_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gadget_square_has_chromatic_number_nine() {
    let g = sqcolor(&["gen", "gadget", "--k", "3", "--t", "3"], "");
    assert_eq!(g.status.code(), Some(0));
    let c = sqcolor(&["chromatic", "--square"], &stdout(&g));
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).lines().any(|l| l == "chi\t9"));
}

#[test]
fn alon_tarsi_guard_exits_with_three() {
    let g = stdout(&sqcolor(&["gen", "cycle", "--n", "13"], ""));
    let at = sqcolor(&["at"], &g);
    assert_eq!(at.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&at.stderr).contains("size guard"));
}

#[test]
fn force_lifts_the_soft_guard() {
    let g = stdout(&sqcolor(&["gen", "cycle", "--n", "13"], ""));
    let at = sqcolor(&["--force", "at"], &g);
    assert_eq!(at.status.code(), Some(0));
    assert!(stdout(&at).lines().any(|l| l == "at\t3"));
}

#[test]
fn corpus_degeneracy_prints_one_pass_line_per_seed() {
    let o = sqcolor(&["corpus", "--n", "100", "--seeds", "50", "--check", "degeneracy"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let seeds: Vec<&str> = out.lines().filter(|l| l.starts_with("seed.")).collect();
    assert_eq!(seeds.len(), 50);
    assert!(seeds.iter().all(|l| l.contains("\tPASS ")));
}

#[test]
fn corpus_output_is_deterministic() {
    let args = ["--no-timing", "corpus", "--n", "60", "--seeds", "8", "--check", "discharge"];
    let a = sqcolor(&args, "");
    let b = sqcolor(&args, "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_report_round_trips() {
    let g = stdout(&sqcolor(&["gen", "random", "--n", "60", "--seed", "2", "--format", "plane"], ""));
    let o = sqcolor(&["--json", "discharge"], &g);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "discharge");
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["results"]["total.R6"], "-8");
    let again = serde_json::to_string(&v).unwrap();
    let back: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(back, v);
}

#[test]
fn format_errors_exit_with_two_and_a_location() {
    let o = sqcolor(&["chromatic"], "3 2\n0 1\n1 5\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3, column 3"));
}

#[test]
fn infeasible_lists_exit_with_one() {
    let dir = std::env::temp_dir().join(format!("sqcolor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let lists = dir.join("k3.lists");
    std::fs::write(&lists, "lists 3\n0 : 1 2\n1 : 1 2\n2 : 1 2\n").unwrap();
    let k3 = stdout(&sqcolor(&["gen", "complete", "--n", "3"], ""));
    let o = sqcolor(&["list-color", "--assignment", lists.to_str().unwrap()], &k3);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("colorable\tfalse"));
    std::fs::write(&lists, "lists 3\n0 : 1 2\n1 : 2 3\n2 : 1 3\n").unwrap();
    let o = sqcolor(&["list-color", "--assignment", lists.to_str().unwrap()], &k3);
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn kernel_check_finds_the_odd_cycle() {
    let o = sqcolor(&["kernel", "check"], "3 3\n0 1\n1 2\n2 0\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("kernel_perfect\tfalse"));
}

#[test]
fn two_clique_orientation_passes() {
    let o = sqcolor(&["kernel", "two-cliques", "--seed", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("kernel_perfect\ttrue"));
}

#[test]
fn plane_format_needs_an_embedding() {
    let o = sqcolor(&["gen", "petersen", "--format", "plane"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn seed_comes_from_the_environment() {
    let run = |seed: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_sqcolor"));
        cmd.args(["gen", "random", "--n", "30"]);
        match seed {
            Some(s) => cmd.env("CHROMA_SEED", s),
            None => cmd.env_remove("CHROMA_SEED"),
        };
        cmd.output().unwrap().stdout
    };
    assert_eq!(run(None), run(Some("0")));
    assert_ne!(run(Some("0")), run(Some("9")));
}

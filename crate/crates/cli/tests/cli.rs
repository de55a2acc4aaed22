use std::io::Write;
use std::process::{Command, Output, Stdio};

fn circix(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_circix"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn circix");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn shim() -> String {
    env!("CARGO_BIN_EXE_circix-sat").to_string()
}

#[test]
fn chi_of_k5() {
    let o = circix(&["chi", "--g6", "D~{"], None);
    assert_eq!(stdout(&o), "5/1\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn decide_k5_below_its_value() {
    let o = circix(&["decide", "--g6", "D~{", "--p", "9", "--q", "2"], None);
    assert_eq!(stdout(&o), "UNSAT\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn glued_circulant_verifies_through_a_pipe() {
    let built = circix(&["construct", "circulant92", "--m", "17"], None);
    assert_eq!(built.status.code(), Some(0));
    let o = circix(&["verify", "--stdin"], Some(&stdout(&built)));
    assert_eq!(stdout(&o), "VALID\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tampered_witness_is_invalid() {
    let built = stdout(&circix(&["construct", "circulant92", "--m", "13"], None));
    // Colour 2 on the first edge clashes with its neighbour coloured 0 or 2.
    let tampered = built.replacen("\n0 ", "\n0 1\n# was ", 1);
    let o = circix(&["verify", "--stdin"], Some(&tampered));
    assert_eq!(stdout(&o), "INVALID\n");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn witness_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.col");
    let path = path.to_str().unwrap();
    let o = circix(&["decide", "--g6", "IheA@GUAo", "--p", "11", "--q", "3", "--witness", path], None);
    assert_eq!(stdout(&o), "SAT\n");
    let o = circix(&["verify", "--g6", "IheA@GUAo", "--witness", path], None);
    assert_eq!(stdout(&o), "VALID\n");
}

#[test]
fn external_solver_agrees() {
    let solver = shim();
    let o = circix(&["chi", "--g6", "IheA@GUAo", "--solver", &solver], None);
    assert_eq!(stdout(&o), "11/3\n");
    let o = circix(&["decide", "--g6", "D~{", "--p", "9", "--q", "2", "--solver", &solver], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn budget_exhaustion_prints_an_interval() {
    let o = circix(&["chi", "--g6", "ICrUux}vO", "--budget-nodes", "10"], None);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("interval ("), "{}", stdout(&o));
    let o = circix(&["decide", "--g6", "IheA@GUAo", "--p", "3", "--q", "1", "--budget-secs", "0"], None);
    assert_eq!(stdout(&o), "UNKNOWN\n");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(circix(&["chi", "--g6", "D~{", "--bogus"], None).status.code(), Some(2));
    assert_eq!(circix(&["chi", "--g6", "a!"], None).status.code(), Some(2));
    assert_eq!(circix(&["chi"], None).status.code(), Some(2));
    assert_eq!(circix(&["chi", "--g6", "D~{", "--s6", ":Bc"], None).status.code(), Some(2));
    assert_eq!(circix(&["chi", "--stdin"], Some("\n\n")).status.code(), Some(2));
}

#[test]
fn encode_outputs() {
    let o = circix(&["encode", "--g6", "D~{", "--dimacs", "--p", "9", "--q", "2"], None);
    let text = stdout(&o);
    assert!(text.starts_with("p cnf 90 "), "{text}");
    let o = circix(&["encode", "--g6", "D~{", "--canonical"], None);
    assert_eq!(o.status.code(), Some(0));
    // Relabelling does not change the canonical code.
    let a = stdout(&circix(&["encode", "--g6", "IheA@GUAo", "--canonical"], None));
    let relabelled = stdout(&circix(&["construct", "circulant", "--m", "5"], None));
    let b = stdout(&circix(&["encode", "--stdin", "--canonical"], Some(&relabelled)));
    let k5 = stdout(&circix(&["encode", "--g6", "D~{", "--canonical"], None));
    assert_eq!(b, k5);
    assert_ne!(a, b);
}

#[test]
fn survey_table_and_stream() {
    let o = circix(&["survey", "--family", "multigraph", "--delta", "4", "--orders", "3", "--jobs", "2"], None);
    assert_eq!(stdout(&o), "order,count,class2,values\n3,5,3,5/1 6/1\n");
    let again = circix(&["survey", "--family", "multigraph", "--delta", "4", "--orders", "3", "--jobs", "1"], None);
    assert_eq!(stdout(&o), stdout(&again));

    let stream = "D~{\nnot a code\nIheA@GUAo\n";
    let o = circix(&["survey", "--family", "simple", "--delta", "4", "--stdin"], Some(stream));
    assert_eq!(stdout(&o), "order,count,class2,values\n5,1,1,5/1\n");
    let o = circix(&["survey", "--family", "simple", "--delta", "4", "--stdin", "--strict"], Some(stream));
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(circix(&["survey", "--family", "simple", "--delta", "4"], None).status.code(), Some(2));
}

#[test]
fn survey_cache_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.tsv");
    let cache = cache.to_str().unwrap();
    let args = ["survey", "--family", "simple", "--delta", "4", "--orders", "5", "--cache", cache, "--records"];
    let first = stdout(&circix(&args, None));
    let second = stdout(&circix(&args, None));
    assert!(first.starts_with("order,count,class2,values\n5,11,2,"), "{first}");
    assert_eq!(first.lines().next(), second.lines().next());
    assert!(second.lines().skip(2).all(|l| l.ends_with("Cached")), "{second}");
}

#[test]
fn constructions() {
    let k7e = stdout(&circix(&["construct", "complete-minus-edge", "--d", "6"], None));
    assert_eq!(k7e, "F^~~w\n");
    let k5e = stdout(&circix(&["construct", "complete-minus-edge", "--d", "4"], None));
    let h = stdout(&circix(&["construct", "pendants", "--stdin", "--at", "0,1"], Some(&k5e)));
    let reg = circix(&["construct", "regularize", "--stdin", "--k", "3", "--delta", "4"], Some(&h));
    assert_eq!(reg.status.code(), Some(0), "{}", String::from_utf8_lossy(&reg.stderr));

    let one = stdout(&circix(&["construct", "pendants", "--stdin", "--at", "0"], Some(&k5e)));
    let cyc = circix(&["construct", "cycle-attach", "--stdin", "--hook", "5", "--k", "5", "--p", "5", "--q", "1"], Some(&one));
    let o = circix(&["verify", "--stdin"], Some(&stdout(&cyc)));
    assert_eq!(stdout(&o), "VALID\n");

    let mirror = circix(&["construct", "mirror", "--s6", ":Hg?COoAI?QDeOhn", "--k", "4", "--p", "14", "--q", "3"], None);
    let o = circix(&["verify", "--stdin"], Some(&stdout(&mirror)));
    assert_eq!(stdout(&o), "VALID\n");

    let bad = circix(&["construct", "ring", "--g6", "D~{", "--k", "3"], None);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn catalogs() {
    let seeds = stdout(&circix(&["catalog"], None));
    assert!(seeds.contains("ICrUux}vO\t20/3\t{1:1, 5:1, 6:8}"), "{seeds}");
    let forcing = stdout(&circix(&["catalog", "--forcing"], None));
    assert!(forcing.lines().any(|l| l.starts_with("D~{\t4\t5/1")), "{forcing}");
}

#[test]
fn outputs_are_byte_stable() {
    let args = ["chi", "--g6", "HEhbtjK", "--trace"];
    assert_eq!(stdout(&circix(&args, None)), stdout(&circix(&args, None)));
}

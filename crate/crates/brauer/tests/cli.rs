use brauer::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("brauer").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn invariants_of_a_bundled_star() {
    let (code, out, _) = run(&["invariants", "star_2_222"]);
    assert_eq!(code, 0);
    for line in ["vertices 4", "edges 3", "faces 1", "bipartite true", "non_polynomial"] {
        assert!(out.contains(line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate", "star_2_223"]).0, 0);
    let (code, out, _) = run(&["validate", "bad_pairing"]);
    assert_eq!(code, 1);
    assert!(out.contains("pairing has fixed point h"));
    let (code, _, err) = run(&["invariants", "bad_pairing"]);
    assert_eq!(code, 2);
    assert!(err.contains("pairing has fixed point h"));
    assert_eq!(run(&["invariants", "/no/such/file.graph"]).0, 2);
}

#[test]
fn udr_of_a_simple() {
    let (code, out, _) = run(&["udr", "star_2_223", "--string", "e0"]);
    assert_eq!(code, 0);
    assert!(out.contains("k[[x]]/(x^3)"), "{out}");
    let (code, out, _) = run(&["udr", "star_2_222", "--string", "-d0 a0 -d1 a1"]);
    assert_eq!(code, 0);
    assert!(out.contains("k[[x]]"));
    assert_eq!(run(&["udr", "star_2_222", "--string", "d0 a0"]).0, 2);
}

#[test]
fn udr_on_a_tree() {
    let (code, out, _) = run(&["udr-tree", "tree_2221", "--tube", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("k[[x]]"));
    assert_eq!(run(&["udr-tree", "tree_2221"]).0, 2);
}

#[test]
fn derived_equivalence() {
    let (code, out, _) = run(&["derived-eq", "tree_2221", "star_2_222"]);
    assert_eq!(code, 0);
    assert!(out.contains("equivalent: true"), "{out}");
    assert_eq!(run(&["derived-eq", "star_2_222", "star_2_223"]).0, 1);
}

#[test]
fn structured_and_dot_output() {
    let (code, out, _) = run(&["--format", "json-like", "invariants", "star_2_222"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.is_object());
    let (code, out, _) = run(&["--format", "dot", "component", "star_2_222", "--string", "e2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(run(&["--format", "dot", "invariants", "star_2_222"]).0, 2);
}

#[test]
fn module_and_present() {
    let (code, out, _) = run(&["module", "star_2_222", "--string", "-d0 a0 -d1 a1"]);
    assert_eq!(code, 0);
    for line in ["dim 5", "periodic, period 6", "d = 2", "stable End dim 1", "Ext^1 dim 1"] {
        assert!(out.contains(line), "missing {line:?} in\n{out}");
    }
    let (_, out, _) = run(&["module", "star_2_222", "--string", "e2"]);
    assert!(out.contains("d = 0") && out.contains("Ext^1 dim 0"));
    let (_, out, _) = run(&["module", "star_2_223", "--string", "e0"]);
    assert!(out.contains("non-periodic") && out.contains("Omega-stable") && out.contains("Ext^1 dim 1"));
    let (code, out, _) = run(&["present", "star_2_222"]);
    assert_eq!(code, 0);
    assert!(out.contains("a0") && out.contains("d1"));
}

#[test]
fn verify_suites() {
    let (code, out, _) = run(&["verify", "walks"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| !l.contains("[FAIL]")));
    assert_eq!(run(&["verify", "no-such-suite"]).0, 2);
}

#[test]
fn bad_arguments() {
    assert_eq!(run(&["--format", "yaml", "invariants", "star_2_222"]).0, 2);
    assert_eq!(run(&["--max-len", "0", "verify", "walks"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let (code, out, _) = run(&["graphs"]);
    assert_eq!(code, 0);
    assert!(out.contains("star_2_222") && out.contains("tree_2221"));
}

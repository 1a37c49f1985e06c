use serde_json::Value;
use weylwords_cli::{run, Outcome, EXIT_FALSE, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};

fn cli(args: &str) -> Outcome {
    let argv = std::iter::once("weylwords").chain(args.split_whitespace());
    run(argv)
}

fn json(args: &str) -> Value {
    let out = cli(&format!("--format=json {args}"));
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid JSON")
}

#[test]
fn check_verdicts_and_exit_codes() {
    let out = cli("check DUUD UDDU");
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "EQUIVALENT\n"));
    let out = cli("check U D");
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_FALSE, "DIFFERENT\n"));
    let v = json("check DUUD UDDU");
    assert_eq!(v["equivalent"], Value::Bool(true));
}

#[test]
fn usage_errors() {
    let out = cli("check U");
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("Usage"));
    assert_eq!(cli("frobnicate").code, EXIT_USAGE);
    assert_eq!(cli("check U D --bogus").code, EXIT_USAGE);
    assert_eq!(cli("--format=xml check U D").code, EXIT_USAGE);
    let out = cli("check UXD U");
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("position 1"));
    assert_eq!(cli("count 3 5").code, EXIT_USAGE);
    assert_eq!(cli("downup DU --params=1,2").code, EXIT_USAGE);
    assert_eq!(cli("count 4 --c=1/2").code, EXIT_USAGE);
    assert_eq!(cli("tensor DU").code, EXIT_USAGE);
}

#[test]
fn help_goes_to_stdout() {
    let out = cli("--help");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("rookcheck"));
}

#[test]
fn resource_errors() {
    assert_eq!(cli("class DUUDDUUD --cap=3").code, EXIT_RESOURCE);
    assert_eq!(cli("count 21 --brute").code, EXIT_RESOURCE);
    assert_eq!(cli("perc --order=15").code, EXIT_RESOURCE);
}

#[test]
fn counts() {
    assert_eq!(cli("count 10").stdout, "466\n");
    assert_eq!(cli("count 4 2").stdout, "5\n");
    assert_eq!(
        cli("count 10 --row").stdout,
        "1 10 38 72 80 64 80 72 38 10 1\n"
    );
    assert_eq!(cli("count 10 --brute").stdout, "466\n");
    assert_eq!(cli("count 9 4 --c=1").stdout, "16\n");
    assert_eq!(cli("count 10 --c=1").stdout, "128\n");
    assert_eq!(cli("count 10 3 --c=2").stdout, "20\n");
    assert_eq!(
        cli("count 10 --c=2 --brute --row").stdout,
        "1 8 21 20 0 0 0 0 0 0 0\n"
    );
    assert_eq!(cli("count 4 2 --c=1/2 --brute").stdout, "3\n");
    let v = json("count 6");
    assert_eq!(v["value"], "50");
    assert_eq!(v["row"].as_array().unwrap().len(), 7);
}

#[test]
fn table() {
    let out = cli("table 4");
    assert_eq!(
        out.stdout,
        "  0: 1 | 1\n  1: 1 1 | 2\n  2: 1 2 1 | 4\n  3: 1 3 3 1 | 8\n  4: 1 4 5 4 1 | 15\n"
    );
    let v = json("table 10 --c=2");
    assert_eq!(v["rows"][10]["sum"], "50");
}

#[test]
fn expand_prints_descending_terms() {
    assert_eq!(
        cli("expand DDUU").stdout,
        "U^2 D^2 : 1\nU^1 D^1 : 4\nU^0 D^0 : 2\n"
    );
    let v = json("expand DU");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms[0]["u"], 1);
    assert_eq!(terms[1]["coeff"], "1");
}

#[test]
fn words_and_classes() {
    assert_eq!(cli("canon UUDDUU").stdout, "UDUUDU\n");
    assert_eq!(cli("class DUUD").stdout, "DUUD\nUDDU\n");
    assert_eq!(cli("size DUUD").stdout, "2\n");
    let v = json("class UUDDUU --moves=irreducible");
    assert_eq!(v["size"], 2);
    assert_eq!(v["representative"], "UDUUDU");
    assert_eq!(cli("class DUUDDU --moves=flip").code, EXIT_OK);
}

#[test]
fn rooks_and_tensors() {
    assert_eq!(
        cli("rook UDDUDUUDUD").stdout.lines().next(),
        Some("board: 2 3 3 4")
    );
    let out = cli("rookcheck DUUDU DDUU");
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_OK, "true\n"));
    assert_eq!(cli("tensor DUUD,UDDU;UD,UD").code, EXIT_OK);
    let out = cli("tensor U,U;U,D");
    assert_eq!((out.code, out.stdout.as_str()), (EXIT_FALSE, "false\n"));
}

#[test]
fn percolation() {
    assert_eq!(cli("perc --order=2").stdout, "1 2 4\n");
    assert_eq!(cli("perc --order=2 --wall").stdout, "1 1 2\n");
    assert_eq!(cli("perc-site 2 0 --order=4").stdout, "0 0 2 0 -1\n");
    assert_eq!(cli("perc-site 2 0 --order=2 --wall").stdout, "0 0 1\n");
    assert_eq!(cli("perc-site 1 -1 --order=2 --wall").stdout, "0 0 0\n");
    let v = json("perc --order=3");
    assert_eq!(v["coeffs"], serde_json::json!(["1", "2", "4", "8"]));
}

#[test]
fn downup() {
    assert_eq!(cli("downup DUU --params=0,1,0").stdout, "UUD : 1\n");
    assert_eq!(
        cli("downup DDU --params=1/2,1/2,3/2").stdout,
        "D : 3/2\nDUD : 1/2\nUDD : 1/2\n"
    );
    assert_eq!(
        cli("downup-check DUUUUD UUDDUU --params=0,2,0").code,
        EXIT_OK
    );
    assert_eq!(cli("downup-check DUUD UDDU --params=1,0,1").code, EXIT_OK);
    assert_eq!(cli("downup-check DUU UUD --params=1,0,1").code, EXIT_FALSE);
    let v = json("downup DDU --params=2,3,5");
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn output_is_deterministic() {
    for args in [
        "class UDUDUDUD",
        "expand DDDUUU",
        "table 8",
        "perc --order=6",
    ] {
        assert_eq!(cli(args), cli(args));
    }
}

use std::fs;
use std::path::PathBuf;

use f5_cli::{run, EXIT_COMPUTE, EXIT_OK, EXIT_PARSE, EXIT_USAGE};
use f5_core::bench::StatsRecord;

const EXAMPLE: &str = "\
# example ideal
ring: x,y,z,t
char: 32003
order: grevlex
polys:
y*z^3 - x^2*t^2
x*z^2 - y^2*t
x^2*y - z^2*t
";

const REDUCED: &str = "\
x*z^2 - y^2*t
x^2*y - z^2*t
y*z^3 - x^2*t^2
y^3*z*t - x^3*t^2
x*y^3*t - z^4*t
z^5*t - x^4*t^2
y^5*t^2 - x^4*z*t^2
x^5*t^2 - z^2*t^5
";

const RAW: &str = "\
y*z^3 - x^2*t^2
x^2*y - z^2*t
x*z^2 - y^2*t
x*y^3*t - z^4*t
z^6*t - y^5*t^2
y^3*z*t - x^3*t^2
z^5*t - x^4*t^2
y^5*t^2 - x^4*z*t^2
x^5*t^2 - y^2*z^3*t^2
y^6*t^2 - x*y^2*z*t^4
";

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("f5-cli-tests-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("f5").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn reduced_basis_output() {
    let input = scratch("reduced.ideal", EXAMPLE);
    let input = input.to_str().unwrap();
    for algorithm in ["f5c", "f5r", "buchberger"] {
        let (code, out, err) = invoke(&["run", "--input", input, "--algorithm", algorithm, "--char", "32003"]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert_eq!(out, REDUCED, "{algorithm}");
        assert!(err.is_empty());
    }
    let (_, out, _) = invoke(&["run", "--input", input, "--algorithm", "f5c", "--skip-rule-rebuild"]);
    assert_eq!(out, REDUCED);
}

#[test]
fn verbose_trace_on_stderr() {
    let input = scratch("trace.ideal", EXAMPLE);
    let (code, out, err) = invoke(&["run", "-i", input.to_str().unwrap(), "-a", "f5", "--verbose"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, RAW);
    let expected = "\
Iteration 2
Processing 1 critical pairs of degree 5
Processing 1 critical pairs of degree 7
4 polynomials in basis
Iteration 3
Processing 1 critical pairs of degree 5
Processing 1 critical pairs of degree 6
Processing 4 critical pairs of degree 7
Processing 1 critical pairs of degree 8
10 polynomials in basis

number of zero reductions: 0
number of elements in g: 10
";
    assert_eq!(err, expected);
}

#[test]
fn output_is_deterministic() {
    let input = scratch("determinism.ideal", EXAMPLE);
    let args = ["run", "-i", input.to_str().unwrap(), "-a", "f5", "-v"];
    assert_eq!(invoke(&args), invoke(&args));
}

#[test]
fn run_stats_json() {
    let input = scratch("stats.ideal", EXAMPLE);
    let json = input.with_extension("json");
    let (code, _, _) = invoke(&[
        "run",
        "-i",
        input.to_str().unwrap(),
        "-a",
        "f5c",
        "--certified",
        "--stats-json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let record: StatsRecord = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(record.algorithm, "f5c");
    assert_eq!(record.char, 32003);
    assert_eq!(record.order, "grevlex");
    assert_eq!(record.basis_size_final, 8);
    assert_eq!(record.reduced_basis_agrees_with_oracle, Some(true));
    assert_eq!(record.iterations.len(), 2);
    assert_eq!(record.certification.unwrap().violations(), 0);
    let value: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    for key in ["i", "basis_size", "pairs_by_degree", "spolys", "reduction_steps", "zero_reductions"] {
        assert!(value["iterations"][0].get(key).is_some(), "{key}");
    }
}

#[test]
fn bench_writes_three_agreeing_records() {
    let json = scratch("bench.json", "");
    let (code, out, err) = invoke(&[
        "bench",
        "--system",
        "katsura",
        "--n",
        "5",
        "--algorithm",
        "all",
        "--stats-json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert_eq!(out.lines().count(), 3);
    let records: Vec<StatsRecord> = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    let names: Vec<_> = records.iter().map(|r| r.algorithm.as_str()).collect();
    assert_eq!(names, ["f5", "f5r", "f5c"]);
    assert!(records.iter().all(|r| r.reduced_basis_agrees_with_oracle == Some(true)));
    assert!(records.iter().all(|r| r.totals.zero_reductions == 0));
}

#[test]
fn bench_single_variants() {
    let (code, out, _) = invoke(&["bench", "--system", "cyclic", "--n", "4", "-a", "f5c", "--skip-rule-rebuild"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("f5c "));
    let (code, out, _) = invoke(&["bench", "--system", "cyclic", "--n", "3", "-a", "buchberger"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("buchberger basis="));
}

#[test]
fn homogenize_flag() {
    let input = scratch("affine.ideal", "ring: x,y\nchar: 7\norder: grevlex\npolys:\ny^2 - 1\nx*y + x\n");
    let input = input.to_str().unwrap();
    let (code, _, err) = invoke(&["run", "-i", input, "-a", "f5"]);
    assert_eq!(code, EXIT_COMPUTE);
    assert!(err.contains("not homogeneous"));
    let (code, out, _) = invoke(&["run", "-i", input, "-a", "f5c", "--homogenize"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains('h'));
    let (code, out, _) = invoke(&["run", "-i", input, "-a", "buchberger"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "y^2 - 1\nx*y + x\n");
}

#[test]
fn exit_codes() {
    assert_eq!(invoke(&[]).0, EXIT_USAGE);
    assert_eq!(invoke(&["run"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["run", "-i", "/nonexistent/file.ideal"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["bench", "--system", "katsura", "--n", "0"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["bench", "--system", "katsura", "--n", "2", "--char", "4"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);

    let input = scratch("exits.ideal", EXAMPLE);
    let input = input.to_str().unwrap();
    assert_eq!(invoke(&["run", "-i", input, "-a", "f5", "--skip-rule-rebuild"]).0, EXIT_USAGE);
    let (code, _, err) = invoke(&["run", "-i", input, "--store-cap", "3"]);
    assert_eq!(code, EXIT_COMPUTE);
    assert!(err.contains("cap"));
    assert_eq!(invoke(&["run", "-i", input, "--char", "10"]).0, EXIT_PARSE);

    let bad = scratch("bad.ideal", "ring: x,y\nchar: 7\norder: grevlex\npolys:\nx^\n");
    let (code, _, err) = invoke(&["run", "-i", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("line 5, column 3"), "{err}");
}

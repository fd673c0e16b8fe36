use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use splitcut_cli::{run, EXIT_ERROR, EXIT_NO, EXIT_OK};
use splitcut_core::io::{parse_instance, write_instance};
use splitcut_core::{cut_size, fixtures, recognize_split, Cut, Graph, VertexSet};
use tempfile::TempDir;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn splitcut(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("splitcut").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write_graph(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, write_instance(g, &[])).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn solve_split_instance() {
    let dir = TempDir::new().unwrap();
    let fig = write_graph(&dir, "fig3.col", &fixtures::clique5_split());
    let o = splitcut(&["solve", s(&fig)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(field(&o.stdout, "instance"), "fig3");
    assert_eq!(field(&o.stdout, "k"), "14");
    assert_eq!(field(&o.stdout, "algorithm"), "alg1");
    assert_eq!(field(&o.stdout, "subsets"), "32");
}

#[test]
fn solve_report_reproduces_k() {
    let dir = TempDir::new().unwrap();
    let g = fixtures::clique5_split();
    let fig = write_graph(&dir, "fig3.col", &g);
    let o = splitcut(&["solve", s(&fig)]);
    let side1: Vec<usize> = field(&o.stdout, "side1")
        .split_whitespace()
        .map(|t| t.parse::<usize>().unwrap() - 1)
        .collect();
    let cut = Cut::from_side1(VertexSet::from_iter_in(g.n(), side1));
    assert_eq!(cut_size(&g, &cut).unwrap(), 14);
}

#[test]
fn solve_json_has_fixed_fields() {
    let dir = TempDir::new().unwrap();
    let fig = write_graph(&dir, "fig3.col", &fixtures::clique5_split());
    let o = splitcut(&["solve", s(&fig), "--json", "--threads", "2"]);
    assert_eq!(o.code, EXIT_OK);
    let line = o.stdout.trim();
    assert!(
        line.starts_with(
            "{\"instance\":\"fig3\",\"n\":10,\"m\":19,\"algorithm\":\"alg1\",\"k\":14,\"side1\":["
        ),
        "{line}"
    );
    assert!(line.contains("\"subsets\":32,\"wall_ms\":"));
}

#[test]
fn solve_non_split_goes_through_reduction() {
    let dir = TempDir::new().unwrap();
    let fig = write_graph(&dir, "fig1.col", &fixtures::chorded_pentagon());
    let o = splitcut(&["solve", s(&fig)]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(field(&o.stdout, "k"), "5");
    assert_eq!(field(&o.stdout, "algorithm"), "reduction");
    assert_eq!(field(&o.stdout, "n"), "5");

    let split = write_graph(&dir, "fig3.col", &fixtures::clique5_split());
    let o = splitcut(&["solve", s(&split), "--force-reduction"]);
    assert_eq!(field(&o.stdout, "k"), "14");
    assert_eq!(field(&o.stdout, "algorithm"), "reduction");
}

#[test]
fn decide_exit_codes() {
    let dir = TempDir::new().unwrap();
    let fig = write_graph(&dir, "fig3.col", &fixtures::clique5_split());
    let yes = splitcut(&["decide", s(&fig), "14"]);
    assert_eq!((yes.code, yes.stdout.as_str()), (EXIT_OK, "yes\n"));
    let no = splitcut(&["decide", s(&fig), "15"]);
    assert_eq!((no.code, no.stdout.as_str()), (EXIT_NO, "no\n"));

    let c4 = write_graph(&dir, "c4.col", &fixtures::cycle(4));
    let err = splitcut(&["decide", s(&c4), "1"]);
    assert_eq!(err.code, EXIT_ERROR);
    assert!(err.stderr.contains("not a split graph"));
}

#[test]
fn recognize_output() {
    let dir = TempDir::new().unwrap();
    let fig = write_graph(&dir, "fig3.col", &fixtures::clique5_split());
    let o = splitcut(&["recognize", s(&fig)]);
    assert_eq!(
        o.stdout,
        "split\nclique: 1 2 3 4 5\nindependent: 6 7 8 9 10\n"
    );
    let c4 = write_graph(&dir, "c4.col", &fixtures::cycle(4));
    let o = splitcut(&["recognize", s(&c4)]);
    assert_eq!((o.code, o.stdout.as_str()), (EXIT_OK, "not split\n"));
}

#[test]
fn reduce_then_solve_gives_shifted_cut() {
    let dir = TempDir::new().unwrap();
    let fig = write_graph(&dir, "fig1.col", &fixtures::chorded_pentagon());
    let image = dir.path().join("fig1-image.col");
    let o = splitcut(&["reduce", s(&fig), "-o", s(&image)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);

    let g = parse_instance(&fs::read_to_string(&image).unwrap()).unwrap();
    assert_eq!((g.n(), g.m()), (9, 18));
    assert!(recognize_split(&g).is_some());
    let sidecar = fs::read_to_string(dir.path().join("fig1-image.col.map")).unwrap();
    let aux: Vec<&str> = sidecar.lines().filter(|l| l.starts_with("a ")).collect();
    assert_eq!(aux, vec!["a 6 1 3", "a 7 1 4", "a 8 2 4", "a 9 3 5"]);

    let o = splitcut(&["solve", s(&image)]);
    assert_eq!(field(&o.stdout, "k"), "13");
}

#[test]
fn reduce_custom_map_path() {
    let dir = TempDir::new().unwrap();
    let fig = write_graph(&dir, "c4.col", &fixtures::cycle(4));
    let image = dir.path().join("img.col");
    let map = dir.path().join("aux.txt");
    let o = splitcut(&["reduce", s(&fig), "-o", s(&image), "--map", s(&map)]);
    assert_eq!(o.code, EXIT_OK);
    assert!(fs::read_to_string(map)
        .unwrap()
        .contains("a 5 1 3\na 6 2 4\n"));
}

#[test]
fn oracle_subcommand_and_cap() {
    let dir = TempDir::new().unwrap();
    let fig = write_graph(&dir, "fig1.col", &fixtures::chorded_pentagon());
    let o = splitcut(&["oracle", s(&fig)]);
    assert_eq!(field(&o.stdout, "k"), "5");
    assert_eq!(field(&o.stdout, "algorithm"), "oracle");
    let o = splitcut(&["oracle", s(&fig), "--cap", "4"]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("too large"));
}

#[test]
fn generate_matches_golden_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("gen.col");
    let o = splitcut(&[
        "generate",
        "--clique",
        "5",
        "--is",
        "5",
        "--prob",
        "0.4",
        "--seed",
        "1",
        "-o",
        s(&out),
    ]);
    assert_eq!(o.code, EXIT_OK);
    let golden = include_str!("../../core/tests/fixtures/split_c5_i5_p04_seed1.col");
    assert_eq!(fs::read_to_string(out).unwrap(), golden);

    let stdout = splitcut(&[
        "generate", "--clique", "5", "--is", "5", "--prob", "0.4", "--seed", "1",
    ]);
    assert_eq!(stdout.stdout, golden);
}

#[test]
fn generate_rejects_bad_probability() {
    let o = splitcut(&[
        "generate", "--clique", "2", "--is", "2", "--prob", "1.5", "--seed", "1",
    ]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("probability"));
}

#[test]
fn bench_csv() {
    let o = splitcut(&[
        "bench", "--min-t", "3", "--max-t", "8", "--prob", "0.5", "--seed", "2",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let mut lines = o.stdout.lines();
    assert_eq!(lines.next(), Some("t,n,subsets,size,millis"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    for row in rows {
        let t: u32 = row[0].parse().unwrap();
        assert_eq!(row[1].parse::<u32>().unwrap(), 2 * t);
        assert_eq!(row[2].parse::<u64>().unwrap(), 1u64 << t);
    }
    let bad = splitcut(&["bench", "--min-t", "5", "--max-t", "4"]);
    assert_eq!(bad.code, EXIT_ERROR);
}

#[test]
fn usage_errors() {
    assert_eq!(splitcut(&["solve"]).code, EXIT_ERROR);
    assert_eq!(splitcut(&["frobnicate"]).code, EXIT_ERROR);
    assert_eq!(splitcut(&["solve", "x.col", "--bogus"]).code, EXIT_ERROR);
    let missing = splitcut(&["solve", "/nonexistent/x.col"]);
    assert_eq!(missing.code, EXIT_ERROR);
    assert!(missing.stderr.contains("/nonexistent/x.col"));
    let help = splitcut(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("decide"));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("loop.col");
    fs::write(&path, "p edge 2 1\ne 1 1\n").unwrap();
    let o = splitcut(&["solve", s(&path)]);
    assert_eq!(o.code, EXIT_ERROR);
    assert!(o.stderr.contains("line 2: self-loop"), "{}", o.stderr);
}

#[test]
fn binary_exit_status() {
    let dir = TempDir::new().unwrap();
    let fig = write_graph(&dir, "fig3.col", &fixtures::clique5_split());
    let status = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_splitcut"))
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status(&["decide", s(&fig), "14"]), Some(0));
    assert_eq!(status(&["decide", s(&fig), "15"]), Some(1));
    assert_eq!(status(&["decide", s(&fig)]), Some(2));
}

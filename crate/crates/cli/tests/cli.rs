use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use wellcov::gadgets::{graph_from_roles, mis_equality_padded, parse_roles, RoleContext};
use wellcov::generate::{chordal_mix, random_graph};
use wellcov::mis::independence_number;
use wellcov::{CnfFormula, Graph, Verdict};

fn wellcov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wellcov")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

struct Fixtures {
    dir: tempfile::TempDir,
}

impl Fixtures {
    fn new() -> Fixtures {
        Fixtures { dir: tempfile::tempdir().unwrap() }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn graph(&self, name: &str, g: &Graph) -> String {
        let p = self.path(name);
        std::fs::write(&p, g.to_edge_list()).unwrap();
        p.display().to_string()
    }

    fn text(&self, name: &str, text: &str) -> String {
        let p = self.path(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    }
}

fn read_graph(path: &Path) -> Graph {
    Graph::parse_edge_list(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn check_examples() {
    let fx = Fixtures::new();
    let c4 = fx.graph("c4.el", &Graph::cycle(4));
    let star = fx.graph("star.el", &Graph::star(3));
    assert_eq!(code(&wellcov(&["check", "--property", "well-covered", "--algo", "brute", "--graph", &c4])), 0);
    let out = wellcov(&["--machine", "check", "--property", "es:1", "--algo", "sat", "--graph", &star]);
    assert_eq!(code(&out), 1);
    let r = report(&out);
    assert!(r["check"]["oracle"]["calls"].as_u64().unwrap() >= 1);
    assert_eq!(r["check"]["oracle"]["backend"], "builtin-dpll");
    assert_eq!(code(&wellcov(&["check", "--property", "wk:2", "--algo", "chordal", "--graph", &c4])), 4);
}

#[test]
fn gadget_examples() {
    let fx = Fixtures::new();
    let one = fx.text("one_clause.cnf", "p cnf 1 1\n1 1 1 0\n");
    let out = wellcov(&["gadget", "--name", "w2", "--cnf", &one]);
    assert_eq!(code(&out), 0);
    assert_eq!(read_graph_text(&stdout(&out)).n(), 6);
    let out = wellcov(&["gadget", "--name", "es:1", "--cnf", &one]);
    assert_eq!(code(&out), 5);
    assert!(String::from_utf8_lossy(&out.stderr).contains("known negative"));

    let g = fx.graph("g.el", &Graph::cycle(5));
    let h = fx.graph("h.el", &Graph::path(3));
    let out_path = fx.path("pi.el");
    let out = wellcov(&["gadget", "--name", "pi", "--graph", &g, "--graph2", &h, "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(read_graph(&out_path).n(), 2 * (5 + 3));
    assert!(fx.path("pi.el.roles").exists());
}

fn read_graph_text(text: &str) -> Graph {
    Graph::parse_edge_list(text).unwrap()
}

#[test]
fn verify_examples() {
    for args in [
        ["verify", "--suite", "pi-alpha", "--size", "6", "--seed", "7"].as_slice(),
        &["verify", "--suite", "chordal-agree", "--size", "14", "--seed", "1"],
        &["verify", "--suite", "gadget-w2", "--size", "2"],
    ] {
        let out = wellcov(args);
        assert_eq!(code(&out), 0, "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).contains("result: pass"));
    }
    assert_eq!(code(&wellcov(&["verify", "--suite", "nonsense"])), 2);
}

#[test]
fn alpha_examples() {
    let fx = Fixtures::new();
    let c5 = fx.graph("c5.el", &Graph::cycle(5));
    let k1 = fx.graph("k1.el", &Graph::empty(1));
    let e8 = fx.graph("e8.el", &Graph::empty(8));
    for algo in ["brute", "sat"] {
        let r = report(&wellcov(&["--machine", "alpha", "--graph", &c5, "--algo", algo]));
        assert_eq!(r["alpha"]["value"], 2);
        let r = report(&wellcov(&["--machine", "alpha", "--graph", &k1, "--algo", algo]));
        assert_eq!(r["alpha"]["value"], 1);
    }
    let r = report(&wellcov(&["--machine", "alpha", "--graph", &e8, "--algo", "sat"]));
    assert_eq!(r["alpha"]["value"], 8);
    assert!(r["alpha"]["oracle"]["calls"].as_u64().unwrap() <= 5);
    assert!(stdout(&wellcov(&["alpha", "--graph", &e8, "--algo", "sat"])).contains("oracle: "));
}

#[test]
fn exit_codes_for_bad_input() {
    let fx = Fixtures::new();
    let c4 = fx.graph("c4.el", &Graph::cycle(4));
    let bad = fx.text("bad.el", "2 1\n0 0\n");
    let missing = fx.path("missing.el").display().to_string();
    let cases: [(&[&str], i32); 8] = [
        (&["check", "--property", "cograph", "--graph", &c4], 2),
        (&["check", "--property", "wk:0", "--graph", &c4], 2),
        (&["check", "--property", "shedding:1", "--algo", "sat", "--graph", &c4], 2),
        (&["check", "--property", "es:2", "--algo", "chordal", "--graph", &c4], 2),
        (&["check", "--property", "shedding:9", "--graph", &c4], 2),
        (&["check", "--property", "b-graph", "--graph", &bad], 3),
        (&["check", "--property", "b-graph", "--graph", &missing], 3),
        (&["frobnicate"], 2),
    ];
    for (args, expected) in cases {
        let out = wellcov(args);
        assert_eq!(code(&out), expected, "{args:?}");
    }
    let cnf = fx.text("two.cnf", "p cnf 2 1\n1 2 0\n");
    assert_eq!(code(&wellcov(&["gadget", "--name", "w2", "--cnf", &cnf])), 4);
    assert_eq!(code(&wellcov(&["gadget", "--name", "w2"])), 2);
    assert_eq!(code(&wellcov(&["gadget", "--name", "wk:1", "--cnf", &cnf])), 2);
    let star = fx.graph("star.el", &Graph::star(3));
    assert_eq!(code(&wellcov(&["gadget", "--name", "domset", "--graph", &star])), 4);
}

#[test]
fn brute_force_size_cap() {
    let fx = Fixtures::new();
    let big = fx.graph("big.el", &Graph::empty(27));
    let out = wellcov(&["check", "--property", "well-covered", "--graph", &big]);
    assert_eq!(code(&out), 2);
    let out = wellcov(&["check", "--property", "well-covered", "--graph", &big, "--force"]);
    assert_eq!(code(&out), 0);
    let out = wellcov(&["check", "--property", "well-covered", "--algo", "chordal", "--graph", &big]);
    assert_eq!(code(&out), 0);
}

const PROPERTIES: [&str; 8] = ["well-covered", "wk:1", "wk:2", "extendable:1", "extendable:2", "es:1", "es:2", "b-graph"];

#[test]
fn algorithms_agree_and_reports_reverify() {
    let fx = Fixtures::new();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..16 {
        let g = if i % 2 == 0 { chordal_mix(&mut rng, 9) } else { random_graph(&mut rng, 7, 0.4) };
        let path = fx.graph(&format!("g{i}.el"), &g);
        for property in PROPERTIES {
            let mut codes = Vec::new();
            for algo in ["brute", "sat", "chordal"] {
                let out = wellcov(&["--machine", "check", "--property", property, "--algo", algo, "--graph", &path]);
                let c = code(&out);
                if c == 2 || c == 4 {
                    continue;
                }
                let r = report(&out);
                let input = r["inputs"][0]["path"].as_str().unwrap();
                let verdict: Verdict = serde_json::from_value(r["check"].clone()).unwrap();
                verdict.verify(&read_graph(Path::new(input))).unwrap();
                codes.push((algo, c));
            }
            assert!(!codes.is_empty());
            assert!(codes.iter().all(|&(_, c)| c == codes[0].1), "{property} on {g:?}: {codes:?}");
        }
    }
}

fn without_wall_time(out: &Output) -> Value {
    let mut r = report(out);
    r.as_object_mut().unwrap().remove("wall_time_ms");
    r
}

#[test]
fn reports_are_deterministic() {
    let fx = Fixtures::new();
    let g = fx.graph("g.el", &Graph::path(5));
    let runs: [&[&str]; 3] = [
        &["--machine", "check", "--property", "es:2", "--algo", "sat", "--graph", &g],
        &["--machine", "verify", "--suite", "hierarchy", "--size", "6", "--seed", "3", "--count", "40"],
        &["--machine", "gadget", "--name", "gplus", "--graph", &g],
    ];
    for args in runs {
        let a = wellcov(args);
        let b = wellcov(args);
        assert_eq!(without_wall_time(&a), without_wall_time(&b), "{args:?}");
        let text = |o: &Output| {
            stdout(o).lines().filter(|l| !l.contains("wall_time_ms")).collect::<Vec<_>>().join("\n")
        };
        assert_eq!(text(&a), text(&b));
    }
}

#[test]
fn gadget_sidecars_rebuild() {
    let fx = Fixtures::new();
    let f = CnfFormula::new(3, vec![vec![1, -2, 3], vec![-1, 2, 2], vec![-3, -2, 1]]);
    let cnf = fx.text("f.cnf", &f.to_dimacs());
    let g = Graph::path(4);
    let h = Graph::cycle(3);
    let gp = fx.graph("g.el", &g);
    let hp = fx.graph("h.el", &h);
    let (pg, ph) = mis_equality_padded(&g, &h);
    let cases: [(&str, Vec<&str>, RoleContext<'_>); 6] = [
        ("w2", vec!["--cnf", &cnf], RoleContext { formula: Some(&f), ..Default::default() }),
        ("wk:3", vec!["--cnf", &cnf], RoleContext { formula: Some(&f), ..Default::default() }),
        ("pi", vec!["--graph", &gp, "--graph2", &hp], RoleContext { g: Some(&g), h: Some(&h), formula: None }),
        ("gplus", vec!["--graph", &gp], RoleContext { g: Some(&g), h: Some(&g), formula: None }),
        ("mis-eq", vec!["--graph", &gp, "--graph2", &hp], RoleContext { g: Some(&pg), h: Some(&ph), formula: None }),
        ("domset", vec!["--graph", &gp], RoleContext { g: Some(&g), ..Default::default() }),
    ];
    for (name, inputs, ctx) in cases {
        let out_path = fx.path(&format!("{name}.out"));
        let mut args = vec!["gadget", "--name", name, "--out", out_path.to_str().unwrap()];
        args.extend(inputs);
        let out = wellcov(&args);
        assert_eq!(code(&out), 0, "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let written = read_graph(&out_path);
        let roles_text = std::fs::read_to_string(format!("{}.roles", out_path.display())).unwrap();
        let (roles, distinguished) = parse_roles(&roles_text).unwrap();
        assert_eq!(graph_from_roles(&roles, &ctx), written, "{name}");
        assert_eq!(distinguished.is_some(), name == "w2");
    }
}

#[test]
fn human_and_machine_agree_on_alpha() {
    let fx = Fixtures::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..10 {
        let g = random_graph(&mut rng, 10, 0.3);
        let p = fx.graph(&format!("a{i}.el"), &g);
        let text = stdout(&wellcov(&["alpha", "--graph", &p, "--algo", "sat"]));
        assert!(text.starts_with(&format!("alpha: {}\n", independence_number(&g))));
    }
}

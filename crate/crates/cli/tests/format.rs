use std::path::PathBuf;

use stablecx::{corpus, FPModule};
use stablecx_cli::{build, load, parse};

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn read(name: &str) -> String {
    std::fs::read_to_string(corpus_dir().join(format!("{name}.inst"))).unwrap()
}

const DUAL: &str = "\
algebra a p=2 dim=2
mult 0 0 = 1 0
mult 0 1 = 0 1
mult 1 0 = 0 1
mult 1 1 = 0 0
unit = 1 0
";

#[test]
fn corpus_files_round_trip_exactly() {
    for e in corpus() {
        let text = read(e.name);
        let file = parse(&text).unwrap();
        assert_eq!(file.to_string(), text, "{}", e.name);
    }
}

fn same_module(a: &FPModule, b: &FPModule) -> bool {
    a.dim() == b.dim() && a.actions() == b.actions()
}

#[test]
fn corpus_files_describe_the_built_in_corpus() {
    for e in corpus() {
        let inst = load(&read(e.name)).unwrap().unwrap();
        assert_eq!(inst.file.algebra.name, e.name);
        assert_eq!(inst.ring.base(), e.ring.base(), "{}", e.name);
        assert_eq!(inst.ring.flags(), e.ring.flags());
        let names: Vec<&str> = inst.modules.iter().map(|m| m.0.as_str()).collect();
        assert_eq!(names, e.modules.iter().map(|m| m.0).collect::<Vec<_>>());
        for ((_, a), (_, b)) in inst.modules.iter().zip(&e.modules) {
            assert!(same_module(a, b), "{}", e.name);
        }
        let names: Vec<&str> = inst.complexes.iter().map(|m| m.0.as_str()).collect();
        assert_eq!(names, e.complexes.iter().map(|m| m.0).collect::<Vec<_>>());
        for ((_, a), (_, b)) in inst.complexes.iter().zip(&e.complexes) {
            assert_eq!(a, b, "{}", e.name);
        }
    }
}

#[test]
fn printing_normalizes_comments_and_zero_entries() {
    let text = format!("# a comment\n{DUAL}flag self_injective   # declared\n\nmodule m rows=2 cols=1\nentry 1 0 = 0 1\nentry 0 0 = 0 0\n");
    let printed = parse(&text).unwrap().to_string();
    assert_eq!(printed, format!("{DUAL}flag self_injective\n\nmodule m rows=2 cols=1\nentry 1 0 = 0 1\n"));
    assert_eq!(parse(&printed).unwrap().to_string(), printed);
}

#[test]
fn failing_square_names_the_degree() {
    let text = format!("{DUAL}\ncomplex bad lo=-1 hi=1 ranks=1,1,1\ndiff -1\nentry 0 0 = 1 0\ndiff 0\nentry 0 0 = 0 1\n");
    let err = load(&text).unwrap().unwrap_err();
    assert_eq!(err.line, 8);
    assert!(err.message.contains("degree -1"), "{}", err.message);

    let fine = format!("{DUAL}\ncomplex ok lo=-1 hi=1 ranks=1,1,1\ndiff -1\nentry 0 0 = 0 1\ndiff 0\nentry 0 0 = 0 1\n");
    assert!(load(&fine).unwrap().is_ok());
}

#[test]
fn non_associative_products_name_a_triple() {
    // Basis 1, a, b with a a = b, a b = 0, b a = a: (a a) a = a but a (a a) = 0.
    let text = "\
algebra bad p=2 dim=3
mult 0 0 = 1 0 0
mult 0 1 = 0 1 0
mult 0 2 = 0 0 1
mult 1 0 = 0 1 0
mult 1 1 = 0 0 1
mult 1 2 = 0 0 0
mult 2 0 = 0 0 1
mult 2 1 = 0 1 0
mult 2 2 = 0 0 0
unit = 1 0 0
";
    let err = build(&parse(text).unwrap()).unwrap_err();
    assert_eq!(err.line, 1);
    assert!(err.message.contains("not associative"), "{}", err.message);
    assert!(err.message.contains("(1,1,1)"), "{}", err.message);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let cases: Vec<(String, usize, &str)> = vec![
        ("algebra a p=4 dim=1\nunit = 1\n".into(), 1, "not a prime"),
        (format!("{DUAL}mult 0 0 = 1 1\n"), 7, "duplicate product"),
        (format!("{DUAL}module m rows=1 cols=1\nentry 0 0 = 0 2\n"), 8, "not reduced"),
        (format!("{DUAL}module m rows=1 cols=1\nentry 0 0 = 0\n"), 8, "expected 2 coefficients"),
        (format!("{DUAL}complex c lo=0 hi=2 ranks=1,1\n"), 7, "one rank per degree"),
        (format!("{DUAL}complex c lo=0 hi=1 ranks=1,1\nentry 0 0 = 0 1\n"), 8, "before any `diff`"),
        (format!("{DUAL}complex c lo=0 hi=1 ranks=1,1\ndiff 1\n"), 8, "no differential"),
        (format!("{DUAL}module c rows=1 cols=0\ncomplex c lo=0 hi=0 ranks=1\n"), 8, "duplicate object"),
        (format!("{DUAL}frobnicate\n"), 7, "unknown keyword"),
        ("module m rows=1 cols=1\n".into(), 1, "before the algebra"),
        ("algebra a p=2 dim=1\nmult 0 0 = 1\n".into(), 1, "no `unit`"),
    ];
    for (text, line, needle) in cases {
        let err = parse(&text).unwrap_err();
        assert_eq!(err.line, line, "{needle}: {err}");
        assert!(err.message.contains(needle), "{needle}: {err}");
    }
}

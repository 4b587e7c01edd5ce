use std::path::{Path, PathBuf};
use std::process::Command;

use gamesym::cli::run;
use gamesym::io::{read_game, write_game};
use gamesym::render::{payoff_table, Cells};
use gamesym_core::stp::int;
use gamesym_core::{FiniteGame, GameSpec};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn gamesym(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gamesym").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn dims_first_line() {
    let (code, out, _) = gamesym(&["dims", "--n", "3", "--kappa", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("ℓ=1 β=2 p=3 α=6 dimE=16"));
    assert_eq!(out.lines().nth(1), Some("q_i: 1 2 1"));
    let (_, out, _) = gamesym(&["dims", "--n", "3", "--kappa", "3"]);
    assert!(out.starts_with("ℓ=3 β=9 "));
}

#[test]
fn verify_zero_game() {
    let zero = data("zero.game.json");
    let (code, out, _) = gamesym(&["verify", zero.to_str().unwrap()]);
    assert_eq!(code, 0);
    for line in [
        "symmetric: yes",
        "skew: yes",
        "asymmetric: yes",
        "zero-sum: yes",
    ] {
        assert!(out.contains(line), "{out}");
    }
}

#[test]
fn verify_reports_witnesses() {
    let file = data("numerical_example.game.json");
    let (code, out, _) = gamesym(&["verify", file.to_str().unwrap(), "--witness"]);
    assert_eq!(code, 0);
    assert!(out.contains("symmetric: no") && out.contains("skew: no"));
    assert!(
        out.contains("witness (symmetric): sigma=[1 3 2] player=1 profile=112"),
        "{out}"
    );
}

/// Parse the numeric cells of a rendered table (rows c1..cn).
fn table_values(table: &str) -> Vec<Vec<f64>> {
    table
        .lines()
        .filter(|l| l.starts_with('c') && !l.starts_with("c\\a"))
        .map(|l| {
            l.split_whitespace()
                .skip(1)
                .map(|x| x.parse().unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn decompose_matches_printed_tables_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = data("numerical_example.game.json");
    let (code, out, err) = gamesym(&[
        "decompose",
        file.to_str().unwrap(),
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("X1 = [-1/6 0]"));
    assert!(out.contains("X2 = [0 0 1/6 0 2/3 0]"));

    let printed = [
        [
            [0.0, 0.1667, 0.1667, 0.6667, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.1667, 0.0, 0.0, 0.1667, 0.6667, 0.0, 0.0],
            [0.0, 0.0, 0.1667, 0.0, 0.1667, 0.0, 0.6667, 0.0],
        ],
        [
            [0.0, -0.1667, 0.1667, 0.0, 0.0, 0.0, 0.0, 0.0],
            [0.0, 0.1667, 0.0, 0.0, -0.1667, 0.0, 0.0, 0.0],
            [0.0, 0.0, -0.1667, 0.0, 0.1667, 0.0, 0.0, 0.0],
        ],
        [
            [0.0, 0.0, 0.6666, -0.6667, 0.0, 0.0, 0.0, 0.0],
            [0.0, -0.3334, 0.0, 0.0, 0.0, 0.3333, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, -0.3334, 0.0, 0.3333, 0.0],
        ],
    ];
    let tables: Vec<&str> = out.split("component ->").skip(1).collect();
    assert_eq!(tables.len(), 3);
    for (table, expected) in tables.iter().zip(printed) {
        let got = table_values(table);
        assert_eq!(got.len(), 3);
        for (row, exp) in got.iter().zip(expected) {
            for (g, e) in row.iter().zip(exp) {
                assert!((g - e).abs() <= 1e-4, "{g} vs {e}");
            }
        }
    }

    let one = int(1);
    let parts: Vec<FiniteGame> = ["symmetric", "skew", "asymmetric"]
        .iter()
        .map(|p| read_game(&dir.path().join(format!("numerical_example.{p}.game.json"))).unwrap())
        .collect();
    let sum = parts[0]
        .linear_combination(&one, &parts[1], &one)
        .unwrap()
        .linear_combination(&one, &parts[2], &one)
        .unwrap();
    let input = read_game(&file).unwrap();
    assert_eq!(sum.structure_vector(), input.structure_vector());
    assert_eq!(
        payoff_table(&sum, Cells::Exact),
        payoff_table(&input, Cells::Exact)
    );
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.game.json");
    let spec = GameSpec::new(3, 3).unwrap();
    let v = (0..spec.dimension() as i64)
        .map(|i| int((i * 13) % 7 - 3))
        .collect();
    write_game(&file, &FiniteGame::from_structure_vector(spec, v).unwrap()).unwrap();
    let f = file.to_str().unwrap();
    for args in [
        vec!["decompose", f, "--precision", "6"],
        vec!["verify", f, "--witness"],
        vec!["render", f, "--exact"],
        vec!["basis", "--n", "3", "--kappa", "3"],
    ] {
        let first = gamesym(&args);
        let second = gamesym(&args);
        assert_eq!(first, second);
        assert_eq!(first.0, 0, "{}", first.2);
    }
    let a = std::fs::read(dir.path().join("g.skew.game.json")).unwrap();
    gamesym(&["decompose", f]);
    assert_eq!(
        a,
        std::fs::read(dir.path().join("g.skew.game.json")).unwrap()
    );
}

#[test]
fn basis_dump_is_exact_json() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("basis.json");
    let (code, out, _) = gamesym(&[
        "basis",
        "--n",
        "3",
        "--kappa",
        "2",
        "--dump",
        dump.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("DDᵀ: diagonal [6 6]"));
    assert!(out.contains("EEᵀ: diagonal [3 3 6 6 3 3]"));
    assert!(out.contains("DEᵀ: zero"));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&dump).unwrap()).unwrap();
    assert_eq!(doc["D"].as_array().unwrap().len(), 2);
    assert_eq!(doc["E"].as_array().unwrap().len(), 6);
    assert_eq!(doc["D"][0][2], "-1");
}

#[test]
fn render_precision() {
    let file = data("numerical_example.game.json");
    let (code, out, _) = gamesym(&["render", file.to_str().unwrap(), "--precision", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("c1   0.0  0.0  1.0"), "{out}");
}

#[test]
fn exit_codes_from_the_binary() {
    let bin = env!("CARGO_BIN_EXE_gamesym");
    let dir = tempfile::tempdir().unwrap();
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let ok = status(&["dims", "--n", "2", "--kappa", "2"]);
    assert_eq!(ok.status.code(), Some(0));

    let small = status(&["dims", "--n", "1", "--kappa", "2"]);
    assert_eq!(small.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&small.stderr).contains("player count n must be at least 2"));

    let guard = status(&["basis", "--n", "21", "--kappa", "2"]);
    assert_eq!(guard.status.code(), Some(2));

    let decimal = dir.path().join("d.game.json");
    std::fs::write(
        &decimal,
        r#"{"n": 2, "kappa": 2, "payoffs": [[0.5, 0, 0, 0], [0, 0, 0, 0]]}"#,
    )
    .unwrap();
    let bad = status(&["render", decimal.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("not exact"));

    let one_player = dir.path().join("p.game.json");
    std::fs::write(&one_player, r#"{"n": 1, "kappa": 2, "payoffs": [[0, 0]]}"#).unwrap();
    assert_eq!(
        status(&["verify", one_player.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    assert_eq!(
        status(&["render", "/definitely/missing.game.json"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(status(&["nonsense"]).status.code(), Some(1));
    assert_eq!(
        status(&["render", "x", "--precision", "0"]).status.code(),
        Some(1)
    );
}

//! The `.game.json` file format.
//!
//! ```json
//! { "n": 3, "kappa": 2, "name": "example", "payoffs": [[0, "1/2", ...], ...] }
//! ```
//!
//! `payoffs` holds one row per player with one entry per profile in canonical order. Entries
//! are integers or exact strings such as `"-2/3"`; decimal numbers are rejected so that no
//! value is silently rounded. On output integers are written as JSON numbers and everything
//! else as `"p/q"` strings.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use gamesym_core::{FiniteGame, GameSpec, Rational};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed game file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("payoff of player {player} at profile {profile}: {reason}")]
    Entry {
        player: usize,
        profile: usize,
        reason: String,
    },
    #[error("payoffs: expected {expected} rows, got {got}")]
    RowCount { expected: usize, got: usize },
    #[error("payoffs: row {player} has {got} entries, expected kappa^n = {expected}")]
    RowLength {
        player: usize,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Game(#[from] gamesym_core::Error),
}

impl FileError {
    /// Errors caused by a shape the library refuses (n < 2, κ < 2, size guards) rather than by
    /// a malformed document.
    pub fn is_constraint_violation(&self) -> bool {
        matches!(self, FileError::Game(e) if e.is_constraint_violation())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GameDoc {
    n: usize,
    kappa: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    payoffs: Vec<Vec<Value>>,
}

fn parse_entry(value: &Value) -> Result<Rational, String> {
    match value {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = num.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(format!(
                    "decimal number {num} is not exact; write a fraction such as \"2/3\""
                ))
            }
        }
        Value::String(s) => {
            let s = s.trim();
            if s.contains(['.', 'e', 'E']) {
                return Err(format!(
                    "decimal \"{s}\" is not exact; write a fraction such as \"2/3\""
                ));
            }
            Rational::from_str(s).map_err(|_| format!("\"{s}\" is not an integer or p/q fraction"))
        }
        other => Err(format!(
            "expected an integer or a \"p/q\" string, got {other}"
        )),
    }
}

fn entry_value(r: &Rational) -> Value {
    if r.is_integer() {
        if let Some(i) = r.numer().to_i64() {
            return Value::from(i);
        }
    }
    Value::String(r.to_string())
}

/// Parse a game document.
pub fn parse_game(text: &str) -> Result<FiniteGame, FileError> {
    let doc: GameDoc = serde_json::from_str(text)?;
    let spec = GameSpec::new(doc.n, doc.kappa)?;
    if doc.payoffs.len() != spec.n() {
        return Err(FileError::RowCount {
            expected: spec.n(),
            got: doc.payoffs.len(),
        });
    }
    let mut tables = Vec::with_capacity(spec.n());
    for (player, row) in doc.payoffs.iter().enumerate() {
        if row.len() != spec.profile_count() {
            return Err(FileError::RowLength {
                player: player + 1,
                expected: spec.profile_count(),
                got: row.len(),
            });
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(profile, v)| {
                parse_entry(v).map_err(|reason| FileError::Entry {
                    player: player + 1,
                    profile: profile + 1,
                    reason,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        tables.push(parsed);
    }
    let game = FiniteGame::from_payoff_tables(spec, tables)?;
    Ok(match doc.name {
        Some(name) => game.with_name(name),
        None => game,
    })
}

/// Serialize a game, pretty-printed with one payoff row per line and a trailing newline.
pub fn game_to_json(g: &FiniteGame) -> String {
    let rows: Vec<String> = g
        .to_payoff_tables()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|r| entry_value(r).to_string()).collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"n\": {},\n", g.spec().n()));
    out.push_str(&format!("  \"kappa\": {},\n", g.spec().kappa()));
    if let Some(name) = g.name() {
        out.push_str(&format!("  \"name\": {},\n", Value::from(name)));
    }
    out.push_str("  \"payoffs\": [\n");
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]\n}\n");
    out
}

pub fn read_game(path: &Path) -> Result<FiniteGame, FileError> {
    let text = fs::read_to_string(path).map_err(|source| FileError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_game(&text)
}

pub fn write_game(path: &Path, g: &FiniteGame) -> Result<(), FileError> {
    fs::write(path, game_to_json(g)).map_err(|source| FileError::Write {
        path: path.to_path_buf(),
        source,
    })
}

/// `dir/x.game.json` → `x`; other names lose their last extension.
pub fn file_stem(path: &Path) -> String {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "game".to_string());
    if let Some(stem) = name.strip_suffix(".game.json") {
        return stem.to_string();
    }
    match name.rsplit_once('.') {
        Some((stem, _)) if !stem.is_empty() => stem.to_string(),
        _ => name,
    }
}

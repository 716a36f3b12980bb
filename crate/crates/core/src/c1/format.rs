//! Line-oriented tiling files:
//!
//! ```text
//! # comment
//! board 3 3
//! tile 0 1 0 3
//! tile 1 3 0 3
//! ```
//!
//! `#` starts a comment anywhere on a line. Numbers are plain decimal
//! naturals. Serialization writes tiles in lexicographic order.

use std::fmt::Write as _;

use super::rect::Rect;
use super::tiling::Tiling;
use crate::error::{Error, Result};

fn natural(tok: &str, line: usize) -> Result<u32> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            line,
            msg: format!("expected a decimal natural, found {tok:?}"),
        });
    }
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("number {tok} is out of range"),
    })
}

fn fields<const N: usize>(toks: &[&str], line: usize, what: &str) -> Result<[u32; N]> {
    if toks.len() != N {
        return Err(Error::Parse {
            line,
            msg: format!("{what} takes {N} numbers, found {}", toks.len()),
        });
    }
    let mut out = [0; N];
    for (slot, tok) in out.iter_mut().zip(toks) {
        *slot = natural(tok, line)?;
    }
    Ok(out)
}

pub fn parse_tiling(text: &str) -> Result<Tiling> {
    let mut board: Option<(u32, u32)> = None;
    let mut tiles = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, rest)) = toks.split_first() else {
            continue;
        };
        match (keyword, board) {
            ("board", None) => {
                let [a, b] = fields::<2>(rest, line, "board")?;
                board = Some((a, b));
            }
            ("board", Some(_)) => {
                return Err(Error::Parse {
                    line,
                    msg: "duplicate board line".into(),
                })
            }
            ("tile", Some(_)) => {
                let [x1, x2, y1, y2] = fields::<4>(rest, line, "tile")?;
                tiles.push(Rect::new(x1, x2, y1, y2));
            }
            ("tile", None) => {
                return Err(Error::Parse {
                    line,
                    msg: "tile before board line".into(),
                })
            }
            (other, _) => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown keyword {other:?}"),
                })
            }
        }
    }
    let (a, b) = board.ok_or(Error::Parse {
        line: last_line.max(1),
        msg: "missing board line".into(),
    })?;
    Ok(Tiling::new(a, b, tiles))
}

pub fn serialize_tiling(t: &Tiling) -> String {
    let mut out = format!("board {} {}\n", t.width(), t.height());
    for r in t.tiles() {
        let _ = writeln!(out, "tile {} {} {} {}", r.x1, r.x2, r.y1, r.y2);
    }
    out
}

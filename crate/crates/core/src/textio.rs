//! Text formats, JSON-lines records and renderers.
//!
//! Words: canonical `m=<m>:<l1>,<l2>,...` (`m=2:` is the empty word), or
//! the compact digit string `779329919900` when `m` is supplied separately
//! and `m + 1 <= 9`.
//!
//! Tilings: space-separated `R` (red square) and `B<len>` (blue strip)
//! tokens, e.g. `R B1 B2 R`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tilings::{Color, Tile, TilingError, TwoTonedTiling};
use crate::words::{MnWord, WordError};

/// SVG fill for red squares.
pub const RED_FILL: &str = "#f2b8b8";
/// SVG fill for blue strips.
pub const BLUE_FILL: &str = "#b8c4f2";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TextError {
    /// `column` is a 1-based character offset into the input.
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("compact word needs m from elsewhere")]
    MissingM,
    #[error("compact words need m + 1 <= 9, got m = {m}")]
    CompactUnsupported { m: usize },
    #[error("record says m = {found} but m = {expected} was requested")]
    MismatchedM { expected: usize, found: usize },
    #[error("invalid JSON record: {0}")]
    Json(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

fn syntax(column: usize, message: impl Into<String>) -> TextError {
    TextError::Syntax {
        column,
        message: message.into(),
    }
}

/// Parses a word in canonical form, or in compact form when `m` is given.
///
/// If both the text and `m` name a parameter they must agree.
pub fn parse_word(text: &str, m: Option<usize>) -> Result<MnWord, TextError> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if let Some(rest) = body.strip_prefix("m=") {
        let colon = rest
            .find(':')
            .ok_or_else(|| syntax(lead + 3 + rest.len(), "expected ':' after m"))?;
        let m_text = &rest[..colon];
        let found: usize = m_text
            .parse()
            .map_err(|_| syntax(lead + 3, format!("invalid m {m_text:?}")))?;
        if let Some(expected) = m {
            if expected != found {
                return Err(TextError::MismatchedM { expected, found });
            }
        }
        let letters_start = lead + 2 + colon + 1;
        let list = &rest[colon + 1..];
        let mut letters = Vec::new();
        if !list.is_empty() {
            let mut offset = 0;
            for piece in list.split(',') {
                let letter = piece.trim().parse().map_err(|_| {
                    syntax(
                        letters_start + offset + 1,
                        format!("invalid letter {piece:?}"),
                    )
                })?;
                letters.push(letter);
                offset += piece.len() + 1;
            }
        }
        return Ok(MnWord::new(found, letters)?);
    }
    let m = m.ok_or(TextError::MissingM)?;
    if m + 1 > 9 {
        return Err(TextError::CompactUnsupported { m });
    }
    let letters = body
        .chars()
        .enumerate()
        .map(|(i, c)| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| syntax(lead + i + 1, format!("expected a digit, found {c:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MnWord::new(m, letters)?)
}

/// Canonical text of a word.
pub fn format_word(word: &MnWord) -> String {
    word.to_string()
}

/// Compact digit string, available when `m + 1 <= 9`.
pub fn format_word_compact(word: &MnWord) -> Result<String, TextError> {
    if word.top() > 9 {
        return Err(TextError::CompactUnsupported { m: word.m() });
    }
    Ok(word.letters().iter().map(|d| d.to_string()).collect())
}

/// Parses a tile sequence without checking the red count.
pub fn parse_tiles(text: &str) -> Result<Vec<Tile>, TextError> {
    let mut tiles = Vec::new();
    let mut column = 1;
    let mut rest = text;
    while !rest.is_empty() {
        let trimmed = rest.trim_start();
        column += rest[..rest.len() - trimmed.len()].chars().count();
        if trimmed.is_empty() {
            break;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let token = &trimmed[..end];
        tiles.push(parse_tile(token, column)?);
        column += token.chars().count();
        rest = &trimmed[end..];
    }
    Ok(tiles)
}

fn parse_tile(token: &str, column: usize) -> Result<Tile, TextError> {
    let mut chars = token.chars();
    let color = match chars.next() {
        Some('R') => Color::Red,
        Some('B') => Color::Blue,
        _ => {
            return Err(syntax(
                column,
                format!("expected R or B<len>, found {token:?}"),
            ))
        }
    };
    let digits = chars.as_str();
    let len = match (color, digits) {
        (Color::Red, "") => 1,
        (Color::Blue, "") => return Err(syntax(column, "blue strip needs a length")),
        _ => digits
            .parse()
            .map_err(|_| syntax(column + 1, format!("invalid length {digits:?}")))?,
    };
    Ok(Tile { color, len })
}

/// Parses and validates a tiling with `m` red squares.
pub fn parse_tiling(text: &str, m: usize) -> Result<TwoTonedTiling, TextError> {
    Ok(TwoTonedTiling::new(m, parse_tiles(text)?)?)
}

/// Like [`parse_tiling`], taking `m` as the number of red squares in the text.
pub fn parse_tiling_infer_m(text: &str) -> Result<TwoTonedTiling, TextError> {
    let tiles = parse_tiles(text)?;
    let m = tiles.iter().filter(|t| t.is_red()).count();
    Ok(TwoTonedTiling::new(m, tiles)?)
}

pub fn format_tiling(tiling: &TwoTonedTiling) -> String {
    tiling.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WordRecord {
    m: usize,
    letters: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TilingRecord {
    m: usize,
    tiles: Vec<(String, usize)>,
}

/// `{"m":2,"letters":[2,3,1]}`
pub fn word_to_json(word: &MnWord) -> String {
    let record = WordRecord {
        m: word.m(),
        letters: word.letters().to_vec(),
    };
    serde_json::to_string(&record).expect("plain record serializes")
}

pub fn word_from_json(line: &str) -> Result<MnWord, TextError> {
    let record: WordRecord =
        serde_json::from_str(line).map_err(|e| TextError::Json(e.to_string()))?;
    Ok(MnWord::new(record.m, record.letters)?)
}

/// `{"m":2,"tiles":[["B",1],["R",1],["B",2],["R",1]]}`
pub fn tiling_to_json(tiling: &TwoTonedTiling) -> String {
    let tiles = tiling
        .tiles()
        .iter()
        .map(|t| {
            let color = match t.color {
                Color::Red => "R",
                Color::Blue => "B",
            };
            (color.to_string(), t.len)
        })
        .collect();
    let record = TilingRecord {
        m: tiling.m(),
        tiles,
    };
    serde_json::to_string(&record).expect("plain record serializes")
}

pub fn tiling_from_json(line: &str) -> Result<TwoTonedTiling, TextError> {
    let record: TilingRecord =
        serde_json::from_str(line).map_err(|e| TextError::Json(e.to_string()))?;
    let tiles = record
        .tiles
        .into_iter()
        .map(|(color, len)| match color.as_str() {
            "R" => Ok(Tile {
                color: Color::Red,
                len,
            }),
            "B" => Ok(Tile::blue(len)),
            other => Err(TextError::Json(format!("unknown tile color {other:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TwoTonedTiling::new(record.m, tiles)?)
}

/// One-line cell view: `[r]` per red square, `[bbb]` for a blue strip of length 3.
pub fn render_ascii(tiling: &TwoTonedTiling) -> String {
    let mut out = String::with_capacity(3 * tiling.len() + tiling.tiles().len());
    for tile in tiling.tiles() {
        out.push('[');
        let cell = if tile.is_red() { 'r' } else { 'b' };
        out.extend(std::iter::repeat_n(cell, tile.len));
        out.push(']');
    }
    out
}

/// SVG document with one outlined `rect` per tile, laid out left to right
/// on a grid of `unit` pixels. The viewBox leaves a one-pixel margin so the
/// outer strokes are not clipped.
pub fn render_svg(tiling: &TwoTonedTiling, unit: u32) -> String {
    let unit = unit as usize;
    let width = tiling.len() * unit;
    let height = unit;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"-1 -1 {} {}\">",
        width + 2,
        height + 2,
        width + 2,
        height + 2
    );
    let mut x = 0;
    for tile in tiling.tiles() {
        let fill = if tile.is_red() { RED_FILL } else { BLUE_FILL };
        let w = tile.len * unit;
        let _ = writeln!(
            out,
            "  <rect x=\"{x}\" y=\"0\" width=\"{w}\" height=\"{height}\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"1\"/>"
        );
        x += w;
    }
    out.push_str("</svg>\n");
    out
}

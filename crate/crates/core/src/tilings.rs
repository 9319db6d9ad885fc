//! Two-toned tilings of a strip.
//!
//! A two-toned tiling of length `m + n` covers a `1 x (m+n)` strip with
//! exactly `m` red squares and any number of blue strips whose lengths add
//! up to `n`. Tiles are kept in left-to-right order; red runs are stored as
//! individual squares so two tilings are equal iff their tile sequences are.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("expected {expected} red squares, found {actual}")]
    RedCountMismatch { expected: usize, actual: usize },
    #[error("red tile at position {position} has length {len}, red tiles must be squares")]
    RedNotSquare { position: usize, len: usize },
    #[error("blue strip at position {position} has length 0")]
    EmptyBlueStrip { position: usize },
}

/// Ordered so that red sorts before blue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

/// A tile; ordering is by color (red first), then by length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    pub color: Color,
    pub len: usize,
}

impl Tile {
    pub const RED: Tile = Tile {
        color: Color::Red,
        len: 1,
    };

    pub fn blue(len: usize) -> Self {
        Tile {
            color: Color::Blue,
            len,
        }
    }

    pub fn is_red(&self) -> bool {
        self.color == Color::Red
    }

    pub fn is_blue(&self) -> bool {
        self.color == Color::Blue
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.color, self.len) {
            (Color::Red, 1) => f.write_str("R"),
            (Color::Red, len) => write!(f, "R{len}"),
            (Color::Blue, len) => write!(f, "B{len}"),
        }
    }
}

/// A validated element of T(m,n).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoTonedTiling {
    m: usize,
    tiles: Vec<Tile>,
}

impl TwoTonedTiling {
    pub fn new(m: usize, tiles: Vec<Tile>) -> Result<Self, TilingError> {
        check_tiles(m, &tiles)?;
        Ok(Self { m, tiles })
    }

    /// The tiling made of `m` red squares and nothing else.
    pub fn all_red(m: usize) -> Self {
        Self {
            m,
            tiles: vec![Tile::RED; m],
        }
    }

    pub(crate) fn new_unchecked(m: usize, tiles: Vec<Tile>) -> Self {
        debug_assert_eq!(check_tiles(m, &tiles), Ok(()));
        Self { m, tiles }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Total length of the blue strips.
    pub fn n(&self) -> usize {
        self.tiles
            .iter()
            .filter(|t| t.is_blue())
            .map(|t| t.len)
            .sum()
    }

    /// Length of the covered strip, `m + n`.
    pub fn len(&self) -> usize {
        self.tiles.iter().map(|t| t.len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn into_tiles(self) -> Vec<Tile> {
        self.tiles
    }

    pub fn blue_count(&self) -> usize {
        self.tiles.iter().filter(|t| t.is_blue()).count()
    }

    /// Blue strip lengths in order, with the red squares counted before,
    /// between and after them.
    pub fn blue_profile(&self) -> BlueProfile {
        let mut blues = Vec::new();
        let mut red_gaps = vec![0];
        for tile in &self.tiles {
            match tile.color {
                Color::Red => *red_gaps.last_mut().unwrap() += 1,
                Color::Blue => {
                    blues.push(tile.len);
                    red_gaps.push(0);
                }
            }
        }
        BlueProfile { blues, red_gaps }
    }
}

impl fmt::Display for TwoTonedTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, tile) in self.tiles.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{tile}")?;
        }
        Ok(())
    }
}

/// `blues[i]` is the length of the (i+1)-th blue strip; `red_gaps` has one
/// more entry, `red_gaps[0]` reds before the first strip and the last entry
/// counting the reds after the last one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlueProfile {
    pub blues: Vec<usize>,
    pub red_gaps: Vec<usize>,
}

pub fn blue_profile(t: &TwoTonedTiling) -> BlueProfile {
    t.blue_profile()
}

pub fn validate_tiling(m: usize, tiles: &[Tile]) -> Result<TwoTonedTiling, TilingError> {
    TwoTonedTiling::new(m, tiles.to_vec())
}

fn check_tiles(m: usize, tiles: &[Tile]) -> Result<(), TilingError> {
    let mut reds = 0;
    for (i, tile) in tiles.iter().enumerate() {
        let position = i + 1;
        match tile.color {
            Color::Red if tile.len != 1 => {
                return Err(TilingError::RedNotSquare {
                    position,
                    len: tile.len,
                })
            }
            Color::Red => reds += 1,
            Color::Blue if tile.len == 0 => return Err(TilingError::EmptyBlueStrip { position }),
            Color::Blue => {}
        }
    }
    if reds != m {
        return Err(TilingError::RedCountMismatch {
            expected: m,
            actual: reds,
        });
    }
    Ok(())
}

/// Lazily yields T(m,n) in increasing tile-sequence order, where
/// `R < B1 < B2 < ...`.
///
/// The first tiling is `R^m B1^n`. Each step pops tiles from the right until
/// one can be bumped to the next larger tile that still fits, then refills
/// the tail with the smallest completion (reds first, then unit blues).
#[derive(Clone, Debug)]
pub struct Tilings {
    m: usize,
    n: usize,
    current: Option<Vec<Tile>>,
    started: bool,
}

impl Tilings {
    pub fn new(m: usize, n: usize) -> Self {
        let mut first = Vec::with_capacity(m + n);
        fill_smallest(&mut first, m, n);
        Self {
            m,
            n,
            current: Some(first),
            started: false,
        }
    }

    fn advance(&mut self) {
        let Some(tiles) = self.current.as_mut() else {
            return;
        };
        // Reds and blue cells still available after the retained prefix.
        let mut reds = 0;
        let mut cells = 0;
        while let Some(tile) = tiles.pop() {
            match tile.color {
                Color::Red => reds += 1,
                Color::Blue => cells += tile.len,
            }
            let bumped = match tile.color {
                Color::Red if cells >= 1 => Some(Tile::blue(1)),
                Color::Blue if cells > tile.len => Some(Tile::blue(tile.len + 1)),
                _ => None,
            };
            if let Some(next) = bumped {
                tiles.push(next);
                fill_smallest(tiles, reds, cells - next.len);
                return;
            }
        }
        debug_assert_eq!((reds, cells), (self.m, self.n));
        self.current = None;
    }
}

fn fill_smallest(tiles: &mut Vec<Tile>, reds: usize, cells: usize) {
    tiles.extend(std::iter::repeat_n(Tile::RED, reds));
    tiles.extend(std::iter::repeat_n(Tile::blue(1), cells));
}

impl Iterator for Tilings {
    type Item = TwoTonedTiling;

    fn next(&mut self) -> Option<TwoTonedTiling> {
        if self.started {
            self.advance();
        }
        self.started = true;
        self.current
            .as_ref()
            .map(|tiles| TwoTonedTiling::new_unchecked(self.m, tiles.clone()))
    }
}

pub fn enumerate_tilings(m: usize, n: usize) -> Tilings {
    Tilings::new(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    const R: Tile = Tile::RED;
    fn b(len: usize) -> Tile {
        Tile::blue(len)
    }

    /// All compositions of `n`, recursively.
    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    /// Naive T(m,n): each composition of m+n into parts, each part of length
    /// 1 colored either way and longer parts blue, keeping those with m reds.
    fn naive_tilings(m: usize, n: usize) -> Vec<Vec<Tile>> {
        let mut out = Vec::new();
        for parts in compositions(m + n) {
            let ones: Vec<usize> = (0..parts.len()).filter(|&i| parts[i] == 1).collect();
            for mask in 0u32..(1 << ones.len()) {
                let tiles: Vec<Tile> = parts
                    .iter()
                    .enumerate()
                    .map(|(i, &len)| match ones.iter().position(|&j| j == i) {
                        Some(bit) if mask & (1 << bit) != 0 => R,
                        _ => b(len),
                    })
                    .collect();
                if tiles.iter().filter(|t| t.is_red()).count() == m {
                    out.push(tiles);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn validate_examples() {
        let t = validate_tiling(2, &[R, R, b(3)]).unwrap();
        assert_eq!((t.m(), t.n(), t.len()), (2, 3, 5));
        assert_eq!(
            validate_tiling(2, &[R, b(0), R]),
            Err(TilingError::EmptyBlueStrip { position: 2 })
        );
        assert_eq!(
            validate_tiling(3, &[R, R, b(2)]),
            Err(TilingError::RedCountMismatch {
                expected: 3,
                actual: 2
            })
        );
        let red2 = Tile {
            color: Color::Red,
            len: 2,
        };
        assert_eq!(
            validate_tiling(2, &[red2]),
            Err(TilingError::RedNotSquare {
                position: 1,
                len: 2
            })
        );
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate_tilings(2, 3).count(), 25);
        let all_red: Vec<_> = enumerate_tilings(3, 0).collect();
        assert_eq!(all_red, vec![TwoTonedTiling::all_red(3)]);
        let blues: Vec<Vec<Tile>> = enumerate_tilings(0, 3).map(|t| t.into_tiles()).collect();
        assert_eq!(
            blues,
            vec![
                vec![b(1), b(1), b(1)],
                vec![b(1), b(2)],
                vec![b(2), b(1)],
                vec![b(3)]
            ]
        );
        assert_eq!(enumerate_tilings(0, 0).count(), 1);
    }

    #[test]
    fn enumeration_matches_naive_colorings() {
        for m in 0..=3 {
            for n in 0..=5 {
                let got: Vec<Vec<Tile>> = enumerate_tilings(m, n).map(|t| t.into_tiles()).collect();
                assert_eq!(got, naive_tilings(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_strictly_increases() {
        for m in 0..=4 {
            for n in 0..=5 {
                let all: Vec<_> = enumerate_tilings(m, n).collect();
                assert!(all.windows(2).all(|p| p[0] < p[1]), "m={m} n={n}");
                assert!(all.iter().all(|t| t.m() == m && t.n() == n));
            }
        }
    }

    #[test]
    fn compositions_count() {
        for n in 1..=8 {
            assert_eq!(enumerate_tilings(0, n).count(), 1 << (n - 1));
        }
    }

    #[test]
    fn blue_profile_examples() {
        let t = validate_tiling(6, &[R, b(2), b(2), R, R, b(1), R, b(3), R, b(3), R]).unwrap();
        let p = t.blue_profile();
        assert_eq!(p.blues, vec![2, 2, 1, 3, 3]);
        assert_eq!(p.red_gaps, vec![1, 0, 2, 1, 1, 1]);

        let p = TwoTonedTiling::all_red(4).blue_profile();
        assert!(p.blues.is_empty());
        assert_eq!(p.red_gaps, vec![4]);

        let p = blue_profile(&validate_tiling(2, &[b(1), R, b(2), R]).unwrap());
        assert_eq!(p.blues, vec![1, 2]);
        assert_eq!(p.red_gaps, vec![0, 1, 1]);
    }

    #[test]
    fn blue_profile_sums() {
        for m in 0..=4 {
            for n in 0..=5 {
                for t in enumerate_tilings(m, n) {
                    let p = t.blue_profile();
                    assert_eq!(p.red_gaps.iter().sum::<usize>(), m);
                    assert_eq!(p.blues.iter().sum::<usize>(), n);
                    assert_eq!(p.red_gaps.len(), p.blues.len() + 1);
                }
            }
        }
    }

    #[test]
    fn display() {
        let t = validate_tiling(2, &[R, R, b(3)]).unwrap();
        assert_eq!(t.to_string(), "R R B3");
    }
}

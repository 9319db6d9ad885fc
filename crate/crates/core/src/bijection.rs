//! The bijection between (m,n)-words and two-toned tilings of length m+n.
//!
//! [`xi`] reads a word through its decomposition `w_1 a1 ... w_k ak`: each
//! topless letter `w_i` opens a blue strip of length `|a_i| + 1`, and the
//! drops `m - w_1`, `w_i - w_{i+1}` (with `w_{k+1} = 0`) become runs of red
//! squares before, between and after the strips. [`xi_inverse`] reads the
//! red gaps back as partial sums.

use crate::tilings::{Tile, TwoTonedTiling};
use crate::words::MnWord;

/// Maps an (m,n)-word to its two-toned tiling in T(m,n).
pub fn xi(word: &MnWord) -> TwoTonedTiling {
    let m = word.m();
    let d = word.decompose();
    if d.topless.is_empty() {
        return TwoTonedTiling::all_red(m);
    }
    let mut tiles = Vec::with_capacity(m + word.n());
    let mut level = m;
    for (&w, &gap) in d.topless.iter().zip(&d.gaps) {
        tiles.extend(std::iter::repeat_n(Tile::RED, level - w));
        tiles.push(Tile::blue(gap + 1));
        level = w;
    }
    tiles.extend(std::iter::repeat_n(Tile::RED, level));
    TwoTonedTiling::new_unchecked(m, tiles)
}

/// Maps a two-toned tiling back to its (m,n)-word.
pub fn xi_inverse(tiling: &TwoTonedTiling) -> MnWord {
    let m = tiling.m();
    let top = m + 1;
    let mut letters = Vec::with_capacity(tiling.n());
    // Red squares seen so far; the letter opened by a blue strip is m minus that.
    let mut reds = 0;
    for tile in tiling.tiles() {
        if tile.is_red() {
            reds += 1;
        } else {
            letters.push(m - reds);
            letters.extend(std::iter::repeat_n(top, tile.len - 1));
        }
    }
    MnWord::new_unchecked(m, letters)
}

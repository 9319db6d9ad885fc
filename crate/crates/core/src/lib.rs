//! (m,n)-words, two-toned tilings of a strip of length m+n, and an explicit
//! bijection between them.
//!
//! An (m,n)-word is a word of length `n` over `{0, ..., m+1}` that never
//! starts with `m+1` and in which each letter `1 <= s <= m` is preceded only
//! by letters `>= s`. A two-toned tiling of length `m+n` covers a strip with
//! `m` red squares and blue strips of total length `n`. Both families are
//! counted by `sum_{k=1}^{n} C(m+k, k) C(n-1, k-1)`, which is also the
//! coefficient of `x^n` in `((1-x)/(1-2x))^(m+1)`.
//!
//! ```
//! use twotone::{textio, xi, xi_inverse};
//!
//! let w = textio::parse_word("779329919900", Some(8)).unwrap();
//! let t = xi(&w);
//! assert_eq!(t.to_string(), "R B1 B2 R R R R B1 R B3 R B3 R B1 B1");
//! assert_eq!(xi_inverse(&t), w);
//! ```

pub mod bijection;
pub mod counting;
pub mod textio;
pub mod tilings;
pub mod verify;
pub mod words;

pub use bijection::{xi, xi_inverse};
pub use counting::{
    binomial, closed_form_count, gf_coefficient, series_geometric, series_mul, series_pow,
    BigCount, IntSeries, SeriesError,
};
pub use tilings::{
    blue_profile, enumerate_tilings, validate_tiling, BlueProfile, Color, Tile, TilingError,
    Tilings, TwoTonedTiling,
};
pub use verify::{verify_cell, verify_grid, VerificationReport, VerificationRow};
pub use words::{enumerate_words, validate_word, MnWord, WordDecomposition, WordError, Words};

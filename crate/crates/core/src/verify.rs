//! Exhaustive cross-check of the counts and the bijection on a grid of
//! small parameters.

use std::collections::HashSet;
use std::fmt;

use crate::bijection::{xi, xi_inverse};
use crate::counting::{closed_form_count, gf_coefficient, BigCount};
use crate::tilings::enumerate_tilings;
use crate::words::enumerate_words;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRow {
    pub m: usize,
    pub n: usize,
    pub enum_word_count: BigCount,
    pub enum_tiling_count: BigCount,
    pub closed_form: BigCount,
    pub gf_coeff: BigCount,
    pub roundtrip_ok: bool,
    /// First failure found in this cell, in canonical text.
    pub counterexample: Option<String>,
}

impl VerificationRow {
    pub fn counts_agree(&self) -> bool {
        self.enum_word_count == self.enum_tiling_count
            && self.enum_word_count == self.closed_form
            && self.enum_word_count == self.gf_coeff
    }

    pub fn ok(&self) -> bool {
        self.counts_agree() && self.roundtrip_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn first_failure(&self) -> Option<&VerificationRow> {
        self.rows.iter().find(|r| !r.ok())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3} {:>3} {:>10} {:>10} {:>10} {:>10}  roundtrip",
            "m", "n", "words", "tilings", "formula", "gf"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>3} {:>3} {:>10} {:>10} {:>10} {:>10}  {}",
                r.m,
                r.n,
                r.enum_word_count,
                r.enum_tiling_count,
                r.closed_form,
                r.gf_coeff,
                if r.roundtrip_ok { "ok" } else { "FAIL" }
            )?;
        }
        write!(f, "overall: {}", if self.overall { "ok" } else { "FAIL" })
    }
}

/// Checks one `(m, n)` cell: all four counts, injectivity of `xi` onto the
/// enumerated tilings, and both round trips.
pub fn verify_cell(m: usize, n: usize) -> VerificationRow {
    let mut counterexample = None;
    let mut note = |msg: String| {
        counterexample.get_or_insert(msg);
    };

    let mut word_count = 0u64;
    let mut images = HashSet::new();
    for w in enumerate_words(m, n) {
        word_count += 1;
        let t = xi(&w);
        if t.m() != m || t.n() != n {
            note(format!("{w} maps outside T({m},{n}): {t}"));
        }
        let back = xi_inverse(&t);
        if back != w {
            note(format!("{w} -> {t} -> {back}"));
        }
        if !images.insert(t.clone()) {
            note(format!("{w} collides on {t}"));
        }
    }

    let mut tiling_count = 0u64;
    let mut covered = 0u64;
    for t in enumerate_tilings(m, n) {
        tiling_count += 1;
        if images.contains(&t) {
            covered += 1;
        } else {
            note(format!("{t} is not hit by any word"));
        }
        let w = xi_inverse(&t);
        let again = xi(&w);
        if again != t {
            note(format!("{t} -> {w} -> {again}"));
        }
    }
    if covered as usize != images.len() {
        note(format!(
            "xi hits {} tilings outside the enumeration",
            images.len() - covered as usize
        ));
    }

    VerificationRow {
        m,
        n,
        enum_word_count: word_count.into(),
        enum_tiling_count: tiling_count.into(),
        closed_form: closed_form_count(m, n),
        gf_coeff: gf_coefficient(m, n),
        roundtrip_ok: counterexample.is_none(),
        counterexample,
    }
}

/// Runs [`verify_cell`] for every `0 <= m <= max_m`, `0 <= n <= max_n`,
/// ordered by `(m, n)`.
pub fn verify_grid(max_m: usize, max_n: usize) -> VerificationReport {
    let rows: Vec<_> = (0..=max_m)
        .flat_map(|m| (0..=max_n).map(move |n| (m, n)))
        .map(|(m, n)| verify_cell(m, n))
        .collect();
    let overall = rows.iter().all(VerificationRow::ok);
    VerificationReport { rows, overall }
}

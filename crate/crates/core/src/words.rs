//! (m,n)-words and their block decomposition.
//!
//! An (m,n)-word is a word of length `n` over `{0, ..., m+1}` whose first
//! letter is not `m+1` and in which every letter `s` with `1 <= s <= m` is
//! preceded only by letters `>= s`. Dropping every `m+1` ("top" letter)
//! leaves a weakly decreasing word over `{0, ..., m}`; a word without top
//! letters is called topless.

use std::fmt;

use thiserror::Error;

/// Errors raised while validating words or decompositions.
///
/// Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} at position {position} exceeds m+1 = {top}")]
    LetterOutOfRange {
        position: usize,
        letter: usize,
        top: usize,
    },
    #[error("first letter must not be m+1 = {top}")]
    ViolatesMn1 { top: usize },
    #[error("letter {letter} at position {position} is preceded by a smaller letter")]
    ViolatesMn2 { position: usize, letter: usize },
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
}

/// A validated (m,n)-word. `n` is the number of letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MnWord {
    m: usize,
    letters: Vec<usize>,
}

impl MnWord {
    pub fn new(m: usize, letters: Vec<usize>) -> Result<Self, WordError> {
        check_letters(m, &letters)?;
        Ok(Self { m, letters })
    }

    /// The empty word, the only element of W(m,0).
    pub fn empty(m: usize) -> Self {
        Self {
            m,
            letters: Vec::new(),
        }
    }

    pub(crate) fn new_unchecked(m: usize, letters: Vec<usize>) -> Self {
        debug_assert_eq!(check_letters(m, &letters), Ok(()));
        Self { m, letters }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    /// The top letter `m+1`.
    pub fn top(&self) -> usize {
        self.m + 1
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_topless(&self) -> bool {
        !self.letters.contains(&self.top())
    }

    /// Splits the word into its topless letters and the lengths of the runs
    /// of top letters that follow each of them.
    pub fn decompose(&self) -> WordDecomposition {
        let top = self.top();
        let mut topless = Vec::new();
        let mut gaps: Vec<usize> = Vec::new();
        for &letter in &self.letters {
            if letter == top {
                // MN1 guarantees a topless letter has already been seen.
                *gaps.last_mut().expect("word starts with a top letter") += 1;
            } else {
                topless.push(letter);
                gaps.push(0);
            }
        }
        WordDecomposition {
            m: self.m,
            topless,
            gaps,
        }
    }
}

impl fmt::Display for MnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={}:", self.m)?;
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Validates `letters` as an (m,n)-word with `n = letters.len()`.
pub fn validate_word(m: usize, letters: &[usize]) -> Result<MnWord, WordError> {
    MnWord::new(m, letters.to_vec())
}

fn check_letters(m: usize, letters: &[usize]) -> Result<(), WordError> {
    let top = m + 1;
    // Minimum over the prefix read so far; MN2 asks that it is >= any
    // later letter in 1..=m.
    let mut prefix_min = usize::MAX;
    for (i, &letter) in letters.iter().enumerate() {
        let position = i + 1;
        if letter > top {
            return Err(WordError::LetterOutOfRange {
                position,
                letter,
                top,
            });
        }
        if i == 0 && letter == top {
            return Err(WordError::ViolatesMn1 { top });
        }
        if (1..=m).contains(&letter) && prefix_min < letter {
            return Err(WordError::ViolatesMn2 { position, letter });
        }
        prefix_min = prefix_min.min(letter);
    }
    Ok(())
}

/// The unique split `w_1 a1 w_2 a2 ... w_k ak` of an (m,n)-word, where the
/// `w_i` form a topless (m,k)-word and each `a_i` is a run of `gaps[i]` top
/// letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordDecomposition {
    pub m: usize,
    pub topless: Vec<usize>,
    pub gaps: Vec<usize>,
}

impl WordDecomposition {
    /// Number of topless letters.
    pub fn k(&self) -> usize {
        self.topless.len()
    }

    /// Length of the recomposed word.
    pub fn word_len(&self) -> usize {
        self.topless.len() + self.gaps.iter().sum::<usize>()
    }

    pub fn validate(&self) -> Result<(), WordError> {
        if self.topless.len() != self.gaps.len() {
            return Err(WordError::InvalidDecomposition(format!(
                "{} topless letters but {} gaps",
                self.topless.len(),
                self.gaps.len()
            )));
        }
        if let Some(pos) = self.topless.iter().position(|&w| w > self.m) {
            return Err(WordError::InvalidDecomposition(format!(
                "topless letter {} at index {} exceeds m = {}",
                self.topless[pos],
                pos + 1,
                self.m
            )));
        }
        if let Some(pos) = self.topless.windows(2).position(|w| w[0] < w[1]) {
            return Err(WordError::InvalidDecomposition(format!(
                "topless letters increase at index {}",
                pos + 2
            )));
        }
        Ok(())
    }

    /// Reassembles the word: `w_1`, then `gaps[0]` copies of `m+1`, then `w_2`, ...
    pub fn recompose(&self) -> Result<MnWord, WordError> {
        self.validate()?;
        let top = self.m + 1;
        let mut letters = Vec::with_capacity(self.word_len());
        for (&w, &gap) in self.topless.iter().zip(&self.gaps) {
            letters.push(w);
            letters.extend(std::iter::repeat_n(top, gap));
        }
        Ok(MnWord::new_unchecked(self.m, letters))
    }
}

/// Lazily yields W(m,n) in lexicographic order.
///
/// The iterator walks successors directly: a letter at position `i > 0` may
/// be anything in `0..=min(prefix)` or the top letter, and the first letter
/// ranges over `0..=m`. Nothing is generated and then filtered.
#[derive(Clone, Debug)]
pub struct Words {
    m: usize,
    current: Option<Vec<usize>>,
    started: bool,
}

impl Words {
    pub fn new(m: usize, n: usize) -> Self {
        Self {
            m,
            current: Some(vec![0; n]),
            started: false,
        }
    }

    fn advance(&mut self) {
        let Some(letters) = self.current.as_mut() else {
            return;
        };
        let top = self.m + 1;
        // prefix_min[i] = min(letters[..i]); entry 0 caps the first letter at m.
        let mut prefix_min = Vec::with_capacity(letters.len());
        let mut running = self.m;
        for &letter in letters.iter() {
            prefix_min.push(running);
            running = running.min(letter);
        }
        for i in (0..letters.len()).rev() {
            let cap = prefix_min[i];
            let letter = letters[i];
            let next = if letter < cap {
                Some(letter + 1)
            } else if i > 0 && letter < top {
                Some(top)
            } else {
                None
            };
            if let Some(next) = next {
                letters[i] = next;
                letters[i + 1..].fill(0);
                return;
            }
        }
        self.current = None;
    }
}

impl Iterator for Words {
    type Item = MnWord;

    fn next(&mut self) -> Option<MnWord> {
        if self.started {
            self.advance();
        }
        self.started = true;
        self.current
            .as_ref()
            .map(|letters| MnWord::new_unchecked(self.m, letters.clone()))
    }
}

/// All (m,n)-words in lexicographic order.
pub fn enumerate_words(m: usize, n: usize) -> Words {
    Words::new(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(m: usize, letters: &[usize]) -> MnWord {
        validate_word(m, letters).unwrap()
    }

    /// Every string over {0..=m+1} of length n, in lexicographic order.
    fn all_strings(m: usize, n: usize) -> Vec<Vec<usize>> {
        let base = m + 2;
        let total = base.pow(n as u32);
        (0..total)
            .map(|mut code| {
                let mut s = vec![0; n];
                for slot in s.iter_mut().rev() {
                    *slot = code % base;
                    code /= base;
                }
                s
            })
            .collect()
    }

    /// Direct reading of MN1/MN2, quadratic on purpose.
    fn naive_is_word(m: usize, s: &[usize]) -> bool {
        if s.iter().any(|&x| x > m + 1) {
            return false;
        }
        if s.first() == Some(&(m + 1)) {
            return false;
        }
        (0..s.len()).all(|i| !(1..=m).contains(&s[i]) || (0..i).all(|j| s[j] >= s[i]))
    }

    #[test]
    fn validate_examples() {
        assert!(validate_word(2, &[2, 3, 1]).is_ok());
        assert_eq!(
            validate_word(2, &[3, 0, 0]),
            Err(WordError::ViolatesMn1 { top: 3 })
        );
        assert_eq!(
            validate_word(2, &[0, 3, 1]),
            Err(WordError::ViolatesMn2 {
                position: 3,
                letter: 1
            })
        );
        assert_eq!(validate_word(2, &[]).unwrap().n(), 0);
        assert_eq!(
            validate_word(2, &[1, 4]),
            Err(WordError::LetterOutOfRange {
                position: 2,
                letter: 4,
                top: 3
            })
        );
    }

    #[test]
    fn zero_is_unconstrained_but_blocks_later_positive_letters() {
        assert!(validate_word(3, &[2, 0, 4, 0]).is_ok());
        assert!(validate_word(3, &[2, 0, 1]).is_err());
        // m = 0: only MN1 matters.
        assert!(validate_word(0, &[0, 1, 1, 0]).is_ok());
        assert!(validate_word(0, &[1]).is_err());
    }

    #[test]
    fn listed_words_for_2_3() {
        let listed = [
            "000", "003", "030", "033", "100", "103", "110", "111", "113", "130", "131", "133",
            "200", "203", "210", "211", "213", "220", "221", "222", "223", "230", "231", "232",
            "233",
        ];
        let got: Vec<String> = enumerate_words(2, 3)
            .map(|w| w.letters().iter().map(|d| d.to_string()).collect())
            .collect();
        assert_eq!(got, listed);
    }

    #[test]
    fn enumerate_small_cases() {
        let ws: Vec<_> = enumerate_words(4, 1).map(|w| w.into_letters()).collect();
        assert_eq!(ws, vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);

        // Frozen from the brute-force filter of {0,1}^4.
        let expected: Vec<Vec<usize>> = all_strings(0, 4)
            .into_iter()
            .filter(|s| naive_is_word(0, s))
            .collect();
        assert_eq!(expected.len(), 8);
        let got: Vec<_> = enumerate_words(0, 4).map(|w| w.into_letters()).collect();
        assert_eq!(got, expected);

        let empty: Vec<_> = enumerate_words(3, 0).collect();
        assert_eq!(empty, vec![MnWord::empty(3)]);
    }

    #[test]
    fn enumeration_matches_naive_filter() {
        for m in 0..=3 {
            for n in 0..=5 {
                let expected: Vec<Vec<usize>> = all_strings(m, n)
                    .into_iter()
                    .filter(|s| naive_is_word(m, s))
                    .collect();
                let got: Vec<_> = enumerate_words(m, n).map(|w| w.into_letters()).collect();
                assert_eq!(got, expected, "m={m} n={n}");
                for s in all_strings(m, n) {
                    assert_eq!(validate_word(m, &s).is_ok(), naive_is_word(m, &s));
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let w = word(8, &[7, 7, 9, 3, 2, 9, 9, 1, 9, 9, 0, 0]);
        let d = w.decompose();
        assert_eq!(d.topless, vec![7, 7, 3, 2, 1, 0, 0]);
        assert_eq!(d.gaps, vec![0, 1, 0, 2, 2, 0, 0]);
        assert_eq!(d.recompose().unwrap(), w);

        let d = word(2, &[2, 3, 1]).decompose();
        assert_eq!(
            (d.topless.clone(), d.gaps.clone()),
            (vec![2, 1], vec![1, 0])
        );
        assert_eq!(d.recompose().unwrap().letters(), &[2, 3, 1]);

        let d = word(5, &[4, 4, 2, 0]).decompose();
        assert!(d.gaps.iter().all(|&g| g == 0));
    }

    #[test]
    fn recompose_examples_and_errors() {
        let d = WordDecomposition {
            m: 5,
            topless: vec![],
            gaps: vec![],
        };
        assert!(d.recompose().unwrap().is_empty());

        let bad = [
            WordDecomposition {
                m: 2,
                topless: vec![2],
                gaps: vec![],
            },
            WordDecomposition {
                m: 2,
                topless: vec![3],
                gaps: vec![0],
            },
            WordDecomposition {
                m: 2,
                topless: vec![1, 2],
                gaps: vec![0, 0],
            },
        ];
        for d in bad {
            assert!(matches!(
                d.recompose(),
                Err(WordError::InvalidDecomposition(_))
            ));
        }
    }

    #[test]
    fn decomposition_round_trips_exhaustively() {
        for m in 0..=4 {
            for n in 0..=6 {
                for w in enumerate_words(m, n) {
                    let d = w.decompose();
                    assert!(d.topless.windows(2).all(|p| p[0] >= p[1]));
                    assert_eq!(d.gaps.iter().sum::<usize>(), n - d.k());
                    assert_eq!(d.recompose().unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(word(2, &[2, 3, 1]).to_string(), "m=2:2,3,1");
        assert_eq!(MnWord::empty(2).to_string(), "m=2:");
    }
}

use proptest::prelude::*;
use twotone::textio::{format_tiling, format_word, parse_tiling, parse_word};
use twotone::{validate_word, xi, xi_inverse, MnWord, Tile, TwoTonedTiling, WordDecomposition};

/// A valid word with `m < 16`, built from a random decomposition.
fn arb_word() -> impl Strategy<Value = MnWord> {
    (
        0usize..16,
        proptest::collection::vec((0usize..100, 0usize..4), 0..20),
    )
        .prop_map(|(m, raw)| {
            let mut topless: Vec<usize> = raw.iter().map(|&(x, _)| x % (m + 1)).collect();
            topless.sort_unstable_by(|a, b| b.cmp(a));
            let gaps = raw.iter().map(|&(_, g)| g).collect();
            WordDecomposition { m, topless, gaps }.recompose().unwrap()
        })
}

fn arb_tiling() -> impl Strategy<Value = TwoTonedTiling> {
    proptest::collection::vec(prop_oneof![Just(0usize), 1usize..6], 0..25).prop_map(|lens| {
        let tiles: Vec<Tile> = lens
            .iter()
            .map(|&len| if len == 0 { Tile::RED } else { Tile::blue(len) })
            .collect();
        let m = tiles.iter().filter(|t| t.is_red()).count();
        TwoTonedTiling::new(m, tiles).unwrap()
    })
}

/// MN1 and MN2 read off literally.
fn naive_is_word(m: usize, s: &[usize]) -> bool {
    s.iter().all(|&x| x <= m + 1)
        && s.first() != Some(&(m + 1))
        && (0..s.len()).all(|i| !(1..=m).contains(&s[i]) || s[..i].iter().all(|&p| p >= s[i]))
}

proptest! {
    #[test]
    fn word_round_trips_through_tiling(w in arb_word()) {
        let t = xi(&w);
        prop_assert_eq!(t.m(), w.m());
        prop_assert_eq!(t.n(), w.n());
        prop_assert_eq!(t.blue_count(), w.decompose().k());
        prop_assert_eq!(xi_inverse(&t), w);
    }

    #[test]
    fn tiling_round_trips_through_word(t in arb_tiling()) {
        let w = xi_inverse(&t);
        prop_assert!(validate_word(w.m(), w.letters()).is_ok());
        let d = w.decompose();
        prop_assert!(d.topless.windows(2).all(|p| p[0] >= p[1]));
        prop_assert_eq!(xi(&w), t);
    }

    #[test]
    fn validation_matches_definition(m in 0usize..5, s in proptest::collection::vec(0usize..8, 0..10)) {
        prop_assert_eq!(validate_word(m, &s).is_ok(), naive_is_word(m, &s));
    }

    #[test]
    fn text_round_trips(w in arb_word(), t in arb_tiling()) {
        prop_assert_eq!(parse_word(&format_word(&w), None).unwrap(), w);
        prop_assert_eq!(parse_tiling(&format_tiling(&t), t.m()).unwrap(), t);
    }
}

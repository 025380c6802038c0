use std::collections::BTreeSet;

use t44::arith::q;
use t44::words::*;
use t44::Error;

fn all_marks() -> Vec<Marks> {
    let mut v = vec![Marks::None];
    v.extend(Marks::all(1));
    v.extend(Marks::all(2));
    v
}

/// Admissibility written directly from the word list.
fn admissible(kind: WordKind, n: Option<u32>, transposed: bool, marks: Marks) -> bool {
    let size_ok = match (kind, n) {
        (WordKind::W10, None) => true,
        (WordKind::W10, Some(_)) | (_, None) => false,
        (WordKind::W0 | WordKind::W1 | WordKind::W6 | WordKind::W9, Some(n)) => n >= 1,
        (_, Some(_)) => true,
    };
    let arity = match kind {
        WordKind::W1 => 2,
        WordKind::W2 | WordKind::W3 | WordKind::W4 | WordKind::W5 => 1,
        _ => 0,
    };
    let self_transpose = matches!(
        kind,
        WordKind::W0 | WordKind::W1 | WordKind::W6 | WordKind::W9 | WordKind::W10
    );
    size_ok && marks.arity() == arity && !(transposed && self_transpose)
}

#[test]
fn validation_matches_the_word_list() {
    for kind in WordKind::ALL {
        for n in std::iter::once(None).chain((0..=10).map(Some)) {
            for transposed in [false, true] {
                for marks in all_marks() {
                    let mu = (kind == WordKind::W0).then(|| q(3));
                    let got = word_new(kind, n, transposed, marks, mu).is_ok();
                    assert_eq!(
                        got,
                        admissible(kind, n, transposed, marks),
                        "{kind} n={n:?} transposed={transposed} marks={marks}"
                    );
                }
            }
        }
    }
}

#[test]
fn errors_name_the_violated_rule() {
    assert!(matches!(
        word_new(WordKind::W9, Some(0), false, Marks::None, None),
        Err(Error::InvalidSize(_))
    ));
    assert!(matches!(
        word_new(WordKind::W10, Some(1), false, Marks::None, None),
        Err(Error::InvalidSize(_))
    ));
    assert!(matches!(
        word_new(WordKind::W3, Some(1), false, Marks::Two(Sign::Plus, Sign::Plus), None),
        Err(Error::InvalidMarks(_))
    ));
    assert!(matches!(
        word_new(WordKind::W1, Some(1), true, Marks::Two(Sign::Plus, Sign::Plus), None),
        Err(Error::InvalidTranspose(_))
    ));
    assert!(matches!(
        word_new(WordKind::W0, Some(1), false, Marks::None, Some(q(0))),
        Err(Error::InvalidEigenvalue(_))
    ));
    assert!(matches!(
        word_new(WordKind::W4, Some(1), false, Marks::One(Sign::Plus), Some(q(3))),
        Err(Error::InvalidEigenvalue(_))
    ));
}

#[test]
fn enumeration_is_the_brute_force_set_in_order() {
    for max_n in [0, 1, 2, 4] {
        let mut brute = Vec::new();
        for kind in WordKind::ALL {
            let sizes: Vec<Option<u32>> = if kind == WordKind::W10 {
                vec![None]
            } else {
                (0..=max_n).map(Some).collect()
            };
            for n in sizes {
                for transposed in [false, true] {
                    for marks in all_marks() {
                        if let Ok(w) = word_new(kind, n, transposed, marks, None) {
                            brute.push(w);
                        }
                    }
                }
            }
        }
        let got = enumerate_words(max_n);
        let set: BTreeSet<String> = got.iter().map(WordSpec::label).collect();
        assert_eq!(set.len(), got.len(), "duplicates at max_n={max_n}");
        let brute_set: BTreeSet<String> = brute.iter().map(WordSpec::label).collect();
        assert_eq!(set, brute_set);
        // (kind, n, transposed, marks) order.
        let keys: Vec<_> = got
            .iter()
            .map(|w| (w.kind().index(), w.n(), w.transposed(), w.marks().to_string().replace('+', "!")))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
    assert_eq!(enumerate_words(2).len(), 75);
}

#[test]
fn word_strings() {
    let c = "e1 ~ e1 - f1 ~ f1";
    let w = |k, n, m: &str| WordSpec::plain(k, n, m.parse().unwrap()).unwrap();
    assert_eq!(word_string(&w(WordKind::W2, 2, "+")), format!("({c})^2 - e1"));
    assert_eq!(word_string(&w(WordKind::W3, 1, "-")), format!("f2 - ({c}) - e1"));
    assert_eq!(word_string(&w(WordKind::W4, 0, "+")), "e1 ~ e1 - f1");
    assert_eq!(word_string(&w(WordKind::W5, 3, "+")), format!("f2 - ({c})^3 - e1 ~ e1 - f1"));
    assert_eq!(word_string(&w(WordKind::W6, 1, "")), c);
    assert_eq!(word_string(&w(WordKind::W7, 0, "")), "e2");
    assert_eq!(word_string(&w(WordKind::W8, 1, "")), format!("({c}) - e1 ~ e1 - f2"));
    assert_eq!(word_string(&w(WordKind::W9, 2, "")), format!("f2 - ({c})^2 - e2"));
    assert_eq!(word_string(&w(WordKind::W1, 3, "+-")), "e1 - f1");
    let t = word_transpose(&w(WordKind::W2, 1, "+")).unwrap();
    assert_eq!(word_string(&t), "(f1 ~ f1 - e1 ~ e1) - f1");
}

#[test]
fn special_ends_follow_transposition() {
    let w = WordSpec::plain(WordKind::W2, 1, Marks::One(Sign::Minus)).unwrap();
    assert_eq!(special_ends(&w), vec![Letter::E1]);
    assert_eq!(special_ends(&word_transpose(&w).unwrap()), vec![Letter::F1]);
    let w = WordSpec::plain(WordKind::W5, 0, Marks::One(Sign::Plus)).unwrap();
    assert_eq!(special_ends(&w), vec![Letter::F1]);
    let w = WordSpec::plain(WordKind::W1, 1, Marks::Two(Sign::Plus, Sign::Minus)).unwrap();
    assert_eq!(special_ends(&w), vec![Letter::E1, Letter::F1]);
    assert!(special_ends(&WordSpec::plain(WordKind::W8, 1, Marks::None).unwrap()).is_empty());
}

#[test]
fn transposition_is_an_involution_off_self_transpose_kinds() {
    for w in enumerate_words(3) {
        match word_transpose(&w) {
            Ok(t) => {
                assert!(!w.kind().is_self_transpose());
                assert_ne!(t, w);
                assert_eq!(word_transpose(&t).unwrap(), w);
            }
            Err(Error::SelfTranspose(_)) => assert!(w.kind().is_self_transpose()),
            Err(e) => panic!("{w}: {e}"),
        }
    }
}

#[test]
fn labels_and_parsing() {
    assert_eq!("w2".parse::<WordKind>().unwrap(), WordKind::W2);
    assert_eq!("W10".parse::<WordKind>().unwrap(), WordKind::W10);
    assert_eq!("7".parse::<WordKind>().unwrap(), WordKind::W7);
    assert!("w11".parse::<WordKind>().is_err());
    assert_eq!("+-".parse::<Marks>().unwrap(), Marks::Two(Sign::Plus, Sign::Minus));
    assert!("*".parse::<Marks>().is_err());
    let w = word_new(WordKind::W4, Some(1), true, Marks::One(Sign::Minus), None).unwrap();
    assert_eq!(w.label(), "W4^T(1)-");
    let c = word_new(WordKind::W0, Some(1), false, Marks::None, Some(q(3))).unwrap();
    assert_eq!(c.label(), "W0(1;mu=3)");
}

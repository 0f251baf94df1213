use proptest::prelude::*;
use wlogkit_core::word::{Alphabet, Letter, Symbol, Word};

const NAMES: [&str; 5] = ["x1", "x2", "x3", "x4", "x5"];

fn alphabet() -> Alphabet {
    Alphabet::new(NAMES).unwrap()
}

fn raw_letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..NAMES.len(), any::<bool>()), 0..max).prop_map(|v| {
        v.into_iter().map(|(i, pos)| Letter::new(Symbol::new(NAMES[i]), if pos { 1 } else { -1 })).collect()
    })
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    raw_letters(max).prop_map(Word::from_letters)
}

/// A product of random commutators, hence in the commutator subgroup.
fn zero_sum_word() -> impl Strategy<Value = Word> {
    prop::collection::vec((word(6), word(6)), 1..4)
        .prop_map(|pairs| pairs.iter().fold(Word::empty(), |acc, (u, v)| acc.concat(&Word::commutator(u, v))))
}

/// Direct count: for each pair i < j, sum over p < q of exp_p exp_q with
/// (i at p, j at q), minus the same with (j at p, i at q), halved.
fn brute_exterior(a: &Alphabet, w: &Word) -> Vec<i64> {
    let n = a.len();
    let ls = w.letters();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut total = 0i64;
            for p in 0..ls.len() {
                for q in p + 1..ls.len() {
                    let (sp, sq) = (a.index_of(&ls[p].symbol).unwrap(), a.index_of(&ls[q].symbol).unwrap());
                    let e = ls[p].exp as i64 * ls[q].exp as i64;
                    if sp == i && sq == j {
                        total += e;
                    } else if sp == j && sq == i {
                        total -= e;
                    }
                }
            }
            assert_eq!(total % 2, 0);
            out.push(total / 2);
        }
    }
    out
}

proptest! {
    #[test]
    fn reduction_is_idempotent(ls in raw_letters(30)) {
        let w = Word::from_letters(ls);
        prop_assert_eq!(Word::from_letters(w.letters().to_vec()), w.clone());
        for pair in w.letters().windows(2) {
            prop_assert!(!(pair[0].symbol == pair[1].symbol && pair[0].exp == -pair[1].exp));
        }
    }

    #[test]
    fn inverse_cancels(u in word(20)) {
        prop_assert!(u.concat(&u.inverse()).is_empty());
    }

    #[test]
    fn inverse_of_product(u in word(15), v in word(15)) {
        prop_assert_eq!(u.concat(&v).inverse(), v.inverse().concat(&u.inverse()));
    }

    #[test]
    fn abelianization_is_additive(u in word(15), v in word(15)) {
        let a = alphabet();
        let sum = a.abelianize(&u).unwrap() + a.abelianize(&v).unwrap();
        prop_assert_eq!(a.abelianize(&u.concat(&v)).unwrap(), sum);
        prop_assert_eq!(a.abelianize(&u.inverse()).unwrap(), -a.abelianize(&u).unwrap());
    }

    #[test]
    fn exterior_matches_direct_count(w in zero_sum_word()) {
        let a = alphabet();
        prop_assert_eq!(a.exterior_image(&w).unwrap().coords().to_vec(), brute_exterior(&a, &w));
    }

    #[test]
    fn exterior_is_additive(u in zero_sum_word(), v in zero_sum_word()) {
        let a = alphabet();
        let sum = a.exterior_image(&u).unwrap() + a.exterior_image(&v).unwrap();
        prop_assert_eq!(a.exterior_image(&u.concat(&v)).unwrap(), sum);
    }

    #[test]
    fn exterior_is_conjugation_invariant(w in zero_sum_word(), g in word(10)) {
        let a = alphabet();
        prop_assert_eq!(a.exterior_image(&w.conjugate_by(&g)).unwrap(), a.exterior_image(&w).unwrap());
    }

    #[test]
    fn exterior_vanishes_on_weight_three(u in word(6), v in word(6), x in word(6)) {
        let a = alphabet();
        let c = Word::commutator(&Word::commutator(&u, &v), &x);
        prop_assert!(a.exterior_image(&c).unwrap().is_zero());
    }

    #[test]
    fn text_round_trip(w in word(20)) {
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }
}

#[test]
fn commutator_of_generators_is_unit() {
    let a = alphabet();
    for i in 0..5 {
        for j in i + 1..5 {
            let img = a.exterior_image(&Word::commutator(&a.generator(i), &a.generator(j))).unwrap();
            assert_eq!(img.get(i, j), 1);
            assert_eq!(img.coords().iter().map(|c| c.abs()).sum::<i64>(), 1);
        }
    }
}

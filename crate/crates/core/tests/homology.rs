mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use wlogkit_core::bb::{flag_gate, GateStatus};
use wlogkit_core::graph::flag_two_skeleton;
use wlogkit_core::homology::{
    exterior_rank, flag_h1, pi1_trivial_certificate, presentation_complex_homology, smith_normal_form, IntMatrix,
    Pi1Status,
};
use wlogkit_core::wlog::{WlogEdge, WlogGraph, WlogVertex};
use wlogkit_core::word::{Alphabet, Letter, Symbol, Word};

fn matrices() -> impl Strategy<Value = IntMatrix> {
    (0usize..9, 0usize..9).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-9i64..=9, c), r)
            .prop_map(move |rows| IntMatrix::from_rows(c, &rows))
    })
}

fn words(k: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..k, any::<bool>()), 1..max).prop_map(|v| {
        Word::from_letters(
            v.into_iter().map(|(i, p)| Letter::new(Symbol::from(format!("x{i}")), if p { 1 } else { -1 })),
        )
    })
}

fn wlogs() -> impl Strategy<Value = WlogGraph> {
    (1usize..6).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n, words(n, 6)), 0..8).prop_map(move |es| {
            let vertices = (0..n).map(|i| WlogVertex { name: Symbol::from(format!("x{i}")), word: None }).collect();
            let edges = es
                .into_iter()
                .filter(|(_, _, l)| !l.is_empty())
                .map(|(o, t, label)| WlogEdge { origin: o, terminus: t, label })
                .collect();
            WlogGraph::new(vertices, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn smith_form_is_correct(a in matrices()) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        for w in s.factors.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        for f in &s.factors {
            prop_assert!(f.is_positive());
        }
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j || i >= s.rank() {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn exterior_rank_bounds_and_invariance(
        rels in prop::collection::vec((words(4, 5), words(4, 5)), 1..6),
        g in words(4, 5),
        pick in 0usize..6,
    ) {
        let a = Alphabet::new((0..4).map(|i| format!("x{i}"))).unwrap();
        let rs: Vec<Word> = rels.iter().map(|(u, v)| Word::commutator(u, v)).collect();
        let r = exterior_rank(&a, &rs).unwrap();
        prop_assert!(r <= rs.len());
        let mut conj = rs.clone();
        let i = pick % rs.len();
        conj[i] = rs[i].conjugate_by(&g);
        prop_assert_eq!(exterior_rank(&a, &conj).unwrap(), r);
        conj[i] = rs[i].inverse();
        prop_assert_eq!(exterior_rank(&a, &conj).unwrap(), r);
    }

    #[test]
    fn wlog_complexes_are_torsion_free(w in wlogs()) {
        let h = presentation_complex_homology(&w.presentation().unwrap()).unwrap();
        prop_assert!(h.h1.is_torsion_free());
        prop_assert_eq!(h.h1.free_rank, w.component_count());
    }

    #[test]
    fn certified_means_acyclic(g in common::graphs(1, 8)) {
        let c = pi1_trivial_certificate(&g, 10_000);
        if c.status == Pi1Status::Certified {
            prop_assert!(flag_h1(&flag_two_skeleton(&g)).is_trivial());
        }
        if flag_gate(&g, false, 10_000).status == GateStatus::Certified {
            prop_assert!(g.is_connected());
        }
    }
}

#[test]
fn large_entries_stay_exact() {
    let big = BigInt::from(10).pow(30);
    let mut a = IntMatrix::zeros(2, 2);
    a.set(0, 0, big.clone());
    a.set(1, 1, &big * 3 + 1);
    let s = smith_normal_form(&a);
    assert_eq!(s.factors[0], BigInt::one());
    assert_eq!(s.factors[1], &big * (&big * 3 + 1));
}

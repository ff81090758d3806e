use std::collections::BTreeSet;

use hopfring::chains::{
    chain_symmetry, internal_hom, random_complex, tensor_chains, ChainComplex,
};
use hopfring::diffhopf::{check_differential_carrier, GradedCarrier, Summand};
use hopfring::grading::{
    coaction_from_projections, comodule_to_graded_projections, graded_to_comodule, laurent_hopf,
    Bicharacter, Component, GradedModule,
};
use hopfring::linalg::{Label, Vector};
use hopfring::pareigis::{chain_to_comodule, comodule_to_chain, normalize_word, pm, Letter, Word};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn label() -> impl Strategy<Value = Label> {
    let atom = (prop::sample::select(vec!["x", "e", "b"]), prop::collection::vec(-9i64..10, 0..3))
        .prop_map(|(f, i)| Label::atom(f, &i));
    atom.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(Label::left),
            inner.clone().prop_map(Label::right),
            (inner.clone(), inner).prop_map(|(a, b)| Label::pair(&a, &b)),
        ]
    })
}

fn vector() -> impl Strategy<Value = Vector> {
    prop::collection::vec((label(), -5i64..6), 0..6)
        .prop_map(|terms| terms.into_iter().map(|(l, c)| (l, BigInt::from(c))).collect())
}

fn complex(seed: u64, lo: i64, len: usize, rank: usize) -> ChainComplex {
    random_complex(&mut ChaCha8Rng::seed_from_u64(seed), -1, lo, len, rank, 0)
}

// Independent count: each ψ picks up a sign per ξ-letter to its left.
fn counted(word: &Word) -> Vector {
    let (mut sign, mut seen, mut psis, mut k) = (1i64, 0usize, 0u8, 0i64);
    for l in &word.0 {
        match l {
            Letter::Psi => {
                psis += 1;
                if seen % 2 == 1 {
                    sign = -sign;
                }
            }
            Letter::Xi => {
                seen += 1;
                k += 1;
            }
            Letter::XiInv => {
                seen += 1;
                k -= 1;
            }
        }
    }
    if psis > 1 {
        Vector::zero()
    } else {
        Vector::term(sign, pm(psis, k))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn labels_round_trip_through_text(l in label()) {
        prop_assert_eq!(Label::decode(&l.encode()).unwrap(), l);
    }

    #[test]
    fn tensor_of_labels_is_associative(a in label(), b in label(), c in label()) {
        prop_assert_eq!(
            Label::pair(&Label::pair(&a, &b), &c),
            Label::pair(&a, &Label::pair(&b, &c))
        );
        prop_assert_eq!(Label::pair(&Label::Unit, &a), a);
    }

    #[test]
    fn vector_addition_is_an_abelian_group(u in vector(), v in vector()) {
        prop_assert_eq!(u.clone() + v.clone(), v.clone() + u.clone());
        prop_assert!((u.clone() - u.clone()).is_zero());
        prop_assert!(u.iter().all(|(_, c)| c != &BigInt::from(0)));
    }

    #[test]
    fn normal_form_matches_counting(
        letters in prop::collection::vec(prop::sample::select(vec![Letter::Xi, Letter::XiInv, Letter::Psi]), 0..14)
    ) {
        let w = Word(letters);
        prop_assert_eq!(normalize_word(&w), counted(&w));
    }

    #[test]
    fn graded_projections_rebuild_the_coaction(
        comps in prop::collection::vec((prop::collection::vec(-3i64..4, 2), 0usize..3), 0..5)
    ) {
        let m = GradedModule::new(
            2,
            comps.into_iter().map(|(degree, rank)| Component { degree, rank }).collect(),
        ).unwrap();
        let x = graded_to_comodule(&m);
        let p = comodule_to_graded_projections(&x).unwrap();
        let degrees: BTreeSet<Vec<i64>> = m.components().iter().map(|c| c.degree.clone()).collect();
        prop_assert_eq!(p.keys().cloned().collect::<BTreeSet<_>>(), degrees);
        let y = coaction_from_projections(&laurent_hopf(2), x.carrier(), &p).unwrap();
        for l in x.carrier().basis().unwrap() {
            prop_assert_eq!(x.coact(&l), y.coact(&l));
        }
    }

    #[test]
    fn carrier_check_matches_pairwise_rule(
        summands in prop::collection::vec((prop::collection::vec(-3i64..4, 2), prop::sample::select(vec![0u64, 2, 3, 4, 5, 6])), 0..4),
        k1 in prop::sample::select(vec![-1i8, 1]),
        k2 in prop::sample::select(vec![-1i8, 1]),
    ) {
        let s: Vec<Summand> = summands.into_iter().map(|(degree, order)| Summand { degree, order }).collect();
        let b = Bicharacter::new(vec![k1, k2]).unwrap();
        let d = GradedCarrier::new(2, s).unwrap();
        let ours = check_differential_carrier(&d, &b).unwrap().accepted;
        let gcd = |mut a: u64, mut c: u64| { while c != 0 { (a, c) = (c, a % c); } a };
        let sign = |g: &[i64]| {
            let mut e = 1i64;
            if k1 == -1 && (g[0] * g[0]) % 2 != 0 { e = -e; }
            if k2 == -1 && (g[1] * g[1]) % 2 != 0 { e = -e; }
            e
        };
        let ss = d.summands();
        let mut want = true;
        for (i, x) in ss.iter().enumerate() {
            let n = x.order;
            let self_ok = if n == 0 { sign(&x.degree) == -1 } else { (1 + sign(&x.degree)).rem_euclid(n as i64) == 0 };
            want &= self_ok;
            for y in &ss[i + 1..] {
                want &= gcd(x.order, y.order) == 1;
            }
        }
        prop_assert_eq!(ours, want);
    }

    #[test]
    fn symmetry_is_an_involutive_chain_map(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (complex(a, -2, 5, 3), complex(b, -1, 4, 3));
        let s = chain_symmetry(&x, &y).unwrap();
        prop_assert!(s.is_chain_map());
        let back = chain_symmetry(&y, &x).unwrap();
        prop_assert!(s.then(&back).unwrap().same_as(&tensor_chains(&x, &y).unwrap().identity()));
    }

    #[test]
    fn tensor_is_associative_after_flattening(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (x, y, z) = (complex(a, -1, 3, 2), complex(b, 0, 3, 2), complex(c, -1, 2, 2));
        let left = tensor_chains(&tensor_chains(&x, &y).unwrap(), &z).unwrap();
        let right = tensor_chains(&x, &tensor_chains(&y, &z).unwrap()).unwrap();
        prop_assert!(left.check_d_squared());
        prop_assert_eq!(left.degrees(), right.degrees());
        for n in left.degrees() {
            let l: BTreeSet<&Label> = left.basis(n).iter().collect();
            let r: BTreeSet<&Label> = right.basis(n).iter().collect();
            prop_assert_eq!(l, r);
        }
        for l in left.labels() {
            prop_assert_eq!(left.differential(l), right.differential(l));
        }
    }

    #[test]
    fn internal_hom_is_a_complex(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (complex(a, -1, 3, 2), complex(b, -1, 4, 2));
        let h = internal_hom(&x, &y).unwrap();
        prop_assert!(h.check_d_squared());
        for n in h.degrees() {
            let want: usize = x.degrees().iter().map(|&j| x.rank(j) * y.rank(j + n)).sum();
            prop_assert_eq!(h.rank(n), want);
        }
    }

    #[test]
    fn chains_and_comodules_round_trip(seed in any::<u64>(), s in prop::sample::select(vec![-1i64, 1])) {
        let x = random_complex(&mut ChaCha8Rng::seed_from_u64(seed), -s, -3, 7, 4, 0);
        let b = chain_to_comodule(&x, s).unwrap();
        prop_assert_eq!(comodule_to_chain(&b).unwrap(), x);
    }
}

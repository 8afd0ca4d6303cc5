mod common;

use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;

use common::{brute_gram, choose, is_relative_design, krawtchouk_by_expansion, masks_of_weight, near_design_corpus, positive_rational, random_set, shell_pairs};
use reldesign::constructions::catalog;
use reldesign::design::{complement, load, save, WeightedDesign};
use reldesign::gram::{gram_closed_form, gram_matrix, gram_schmidt_closed_form, gram_schmidt_generic};
use reldesign::hamming::{krawtchouk, shell_intersection, KrawtchoukTable};
use reldesign::scalar::{format_rational, parse_rational};
use reldesign::verify::{balanced_check, frame_check, moments_check};
use reldesign::word::BinaryWord;
use reldesign::{Rational, SmallRational};

#[test]
fn krawtchouk_matches_generating_function() {
    for n in 0..=14 {
        let table = KrawtchoukTable::new(n);
        for k in 0..=n {
            for u in 0..=n {
                let expected = BigInt::from(krawtchouk_by_expansion(n, k, u));
                assert_eq!(*table.get(k, u), expected, "n={n} k={k} u={u}");
                assert_eq!(krawtchouk(n, k, u).unwrap(), expected);
            }
        }
    }
    assert!(krawtchouk(5, 6, 0).is_err());
}

#[test]
fn krawtchouk_orthogonality_and_reciprocity() {
    for n in 0..=14usize {
        let q = |k: usize, u: usize| krawtchouk_by_expansion(n, k, u);
        for k in 0..=n {
            for l in 0..=n {
                let s: i128 = (0..=n).map(|u| choose(n as u64, u as u64) as i128 * q(k, u) * q(l, u)).sum();
                let expected = if k == l { (1i128 << n) * choose(n as u64, k as u64) as i128 } else { 0 };
                assert_eq!(s, expected, "n={n} k={k} l={l}");
                assert_eq!(
                    choose(n as u64, l as u64) as i128 * q(k, l),
                    choose(n as u64, k as u64) as i128 * q(l, k)
                );
            }
        }
    }
}

#[test]
fn shell_intersections_count_words() {
    for n in 1..=10usize {
        for j in 0..=n {
            let u = (1u64 << j) - 1;
            for r in 0..=n {
                let words = masks_of_weight(n, r);
                for nu in 0..=n {
                    let count = words.iter().filter(|&&x| (x ^ u).count_ones() as usize == nu).count();
                    assert_eq!(shell_intersection(n, j, r, nu), BigInt::from(count), "n={n} j={j} r={r} nu={nu}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn closed_form_gram_matches_direct_sum(w1 in positive_rational(), w2 in positive_rational()) {
        for (n, r1, r2) in shell_pairs() {
            let g = gram_closed_form(n, r1, r2, w1.clone(), w2.clone()).unwrap();
            let brute = brute_gram(n, &[(r1, w1.clone()), (r2, w2.clone())]);
            let m = gram_matrix(&g);
            for a in 0..=n {
                for b in 0..=n {
                    prop_assert_eq!(m.get(a, b), &brute[a][b], "n={} r=({},{}) entry ({},{})", n, r1, r2, a, b);
                }
            }
        }
    }

    #[test]
    fn gram_schmidt_forms_agree(w1 in positive_rational(), w2 in positive_rational()) {
        for (n, r1, r2) in shell_pairs() {
            let g = gram_closed_form(n, r1, r2, w1.clone(), w2.clone()).unwrap();
            match (gram_schmidt_closed_form(&g), gram_schmidt_generic(&gram_matrix(&g))) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "n={} r=({},{}): {:?} vs {:?}", n, r1, r2, a.is_ok(), b.is_ok()),
            }
        }
    }

    #[test]
    fn small_rationals_agree_with_big(p1 in 1i64..30, q1 in 1i64..30, p2 in 1i64..30, q2 in 1i64..30) {
        for (n, r1, r2) in shell_pairs() {
            let big = gram_closed_form(n, r1, r2, Rational::new(p1.into(), q1.into()), Rational::new(p2.into(), q2.into())).unwrap();
            let small = gram_closed_form(n, r1, r2, SmallRational::new(p1.into(), q1.into()), SmallRational::new(p2.into(), q2.into())).unwrap();
            let lift = |x: &SmallRational| Rational::new((*x.numer()).into(), (*x.denom()).into());
            prop_assert_eq!(lift(&small.d0), big.d0);
            prop_assert_eq!(lift(&small.c0), big.c0);
            prop_assert_eq!(lift(&small.c2), big.c2);
        }
    }
}

#[test]
fn criteria_agree_on_designs_and_near_designs() {
    let corpus = near_design_corpus();
    assert!(corpus.len() >= 60);
    let mut passing = 0;
    for d in corpus {
        for t in 0..=2 {
            let oracle = is_relative_design(d, t);
            assert_eq!(moments_check(d, t).ok, oracle, "moments, n = {}, t = {t}", d.n());
            assert_eq!(balanced_check(d, t).ok, oracle, "balanced, n = {}, t = {t}", d.n());
            passing += (t == 2 && oracle) as usize;
        }
    }
    assert!(passing >= corpus.len() / 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn criteria_agree_on_random_sets(d in random_set()) {
        for t in 0..=2 {
            let oracle = is_relative_design(&d, t);
            prop_assert_eq!(moments_check(&d, t).ok, oracle);
            prop_assert_eq!(balanced_check(&d, t).ok, oracle);
        }
    }
}

#[test]
fn frame_identities_separate_designs_from_perturbations() {
    for n in [6, 10, 12, 14, 15, 18, 20, 22] {
        for e in catalog(n) {
            assert!(frame_check(&e.design).unwrap().ok(), "{}", e.name);
            let len = e.design.len();
            for i in [0, len / 2, len - 1] {
                let mut weights = e.design.weights().to_vec();
                weights[i] = &weights[i] * Rational::new(2.into(), 1.into());
                let d = WeightedDesign::new(n, e.design.points().to_vec(), weights).unwrap();
                assert!(!frame_check(&d).unwrap().ok(), "{} with weight {i} doubled", e.name);
            }
            let mut pts = e.design.points().to_vec();
            let last = pts.len() - 1;
            pts[last] = pts[last].complement();
            if let Ok(d) = WeightedDesign::new(n, pts, e.design.weights().to_vec()) {
                if let Ok(report) = frame_check(&d) {
                    assert!(!report.ok(), "{} with a point complemented", e.name);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn design_complement_is_an_involution(d in random_set()) {
        let c = complement(&d);
        prop_assert_eq!(c.weights(), d.weights());
        prop_assert!(c.points().iter().zip(d.points()).all(|(a, b)| a.weight() + b.weight() == d.n()));
        prop_assert_eq!(complement(&c), d);
    }

    #[test]
    fn complement_preserves_design_property(i in 0usize..40) {
        let entries: Vec<_> = [6, 10, 12, 14].iter().flat_map(|&n| catalog(n)).collect();
        let d = &entries[i % entries.len()].design;
        prop_assert!(is_relative_design(&complement(d), 2));
    }

    #[test]
    fn design_files_round_trip(d in random_set()) {
        prop_assert_eq!(load(&save(&d)).unwrap(), d);
    }

    #[test]
    fn words_round_trip(n in 1usize..=64, bits in any::<u64>()) {
        let masked = if n == 64 { bits } else { bits & ((1u64 << n) - 1) };
        let w = BinaryWord::from_bits(n, masked);
        let text = w.to_string();
        prop_assert_eq!(text.len(), n);
        prop_assert_eq!(text.parse::<BinaryWord>().unwrap(), w);
        prop_assert_eq!(w.complement().weight(), n - w.weight());
    }

    #[test]
    fn rationals_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = Rational::new(p.into(), q.into());
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn distance_is_a_metric(n in 1usize..=64, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let [x, y, z] = [a, b, c].map(|v| BinaryWord::from_bits(n, v & mask));
        prop_assert_eq!(x.distance(&y), y.distance(&x));
        prop_assert!(x.distance(&z) <= x.distance(&y) + y.distance(&z));
        prop_assert_eq!(x.distance(&x), 0);
    }
}

#[test]
fn small_rational_type_is_exact() {
    let x: SmallRational = Ratio::new(1, 3);
    assert_eq!(x + x + x, Ratio::from_integer(1));
}

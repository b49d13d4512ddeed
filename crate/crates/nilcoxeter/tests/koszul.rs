use std::collections::BTreeMap;

use nilcoxeter::extengine::presentation_table;
use nilcoxeter::koszul::{
    nilcactus_relations, perpendicular, quotient_ranks, relations_independent, reversed_basis_counts,
    x_graded_ranks, x_normal_form, x_normal_words, z_relation_space, KoszulError, Orientation, Pairing, QuadraticPresentation,
};
use nilcoxeter::linalg::Scalars;
use nilcoxeter::zring::{binomial, enumerate_canonical, ZGen, ZRing};
use proptest::prelude::*;

const SCALARS: [Scalars; 4] = [Scalars::Rational, Scalars::Prime(2), Scalars::Prime(3), Scalars::Prime(5)];

fn g(i: usize, j: usize) -> ZGen {
    ZGen::new(i, j)
}

fn vector(p: &QuadraticPresentation, terms: &[(i64, ZGen, ZGen)]) -> Vec<i64> {
    let mut v = vec![0; p.pair_count()];
    for &(c, a, b) in terms {
        v[p.pair_index(a, b)] += c;
    }
    v
}

#[test]
fn z_relation_dimensions() {
    assert_eq!(z_relation_space(2).unwrap().dim(), 0);
    let z3 = z_relation_space(3).unwrap();
    assert_eq!((z3.dim(), z3.pair_count()), (4, 9));
    let (x, y, z) = (g(1, 2), g(2, 3), g(1, 3));
    let listed = [
        vector(&z3, &[(1, x, y)]),
        vector(&z3, &[(1, y, x)]),
        vector(&z3, &[(1, x, z), (1, z, y)]),
        vector(&z3, &[(1, y, z), (1, z, x)]),
    ];
    let mut both = z3.relations().to_vec();
    both.extend(listed.iter().cloned());
    assert_eq!(Scalars::Rational.rank(&both), 4);
    let a3 = presentation_table("A3").unwrap();
    assert_eq!(z_relation_space(4).unwrap().dim(), a3.relations.len());
    assert!(matches!(z_relation_space(1), Err(KoszulError::BadN(1))));
}

#[test]
fn z_relations_hold_in_the_signed_ring() {
    for n in 2..=6 {
        let p = z_relation_space(n).unwrap();
        let ring = ZRing::signed(n).unwrap();
        for r in p.relations() {
            let mut sum = ring.zero();
            for (k, &c) in r.iter().enumerate().filter(|(_, &c)| c != 0) {
                let (a, b) = p.pair(k);
                let prod = ring.word(&[(a.lo(), a.hi()), (b.lo(), b.hi())]).unwrap();
                sum = sum.add(&prod.scale(c).unwrap()).unwrap();
            }
            assert!(sum.is_zero(), "n={n}");
        }
        let quadratic: usize = (2..=2 * (n - 1))
            .map(|d| enumerate_canonical(n, d).iter().filter(|m| m.len() == 2).count())
            .sum();
        assert_eq!(p.dim(), p.pair_count() - quadratic, "n={n}");
        assert!(relations_independent(&p, Scalars::Rational));
        assert!(p.is_homogeneous());
    }
}

#[test]
fn nilcactus_relation_lists() {
    let x2 = nilcactus_relations(2, Orientation::Shifted).unwrap();
    assert_eq!(x2.dim(), 1);
    assert_eq!(x2.relation_text(0), "X[1,2]X[1,2]");
    let x3 = nilcactus_relations(3, Orientation::Shifted).unwrap();
    assert_eq!(x3.dim(), 5);
    let (x, y, z) = (g(1, 2), g(2, 3), g(1, 3));
    let listed = [
        vector(&x3, &[(1, x, x)]),
        vector(&x3, &[(1, y, y)]),
        vector(&x3, &[(1, z, z)]),
        vector(&x3, &[(1, z, x), (-1, y, z)]),
        vector(&x3, &[(1, z, y), (-1, x, z)]),
    ];
    let mut both = x3.relations().to_vec();
    both.extend(listed.iter().cloned());
    assert_eq!(Scalars::Rational.rank(&both), 5);
    for orientation in [Orientation::Shifted, Orientation::Dual] {
        for n in 2..=6 {
            let p = nilcactus_relations(n, orientation).unwrap();
            assert!(p.is_homogeneous());
            assert!(relations_independent(&p, Scalars::Prime(2)));
            assert_eq!(p.dim() + z_relation_space(n).unwrap().dim(), p.pair_count());
        }
    }
    // Containment of [2,3] in [1,4] has exponent 2 * 0.
    let find = |p: &QuadraticPresentation| {
        let k = p.pair_index(g(1, 4), g(2, 3));
        let r = p.relations().iter().position(|r| r[k] != 0).unwrap();
        p.relation_text(r)
    };
    assert_eq!(find(&nilcactus_relations(4, Orientation::Shifted).unwrap()), "X[1,4]X[2,3] - X[2,3]X[1,4]");
    assert_eq!(find(&nilcactus_relations(4, Orientation::Dual).unwrap()), "X[1,4]X[2,3] + X[2,3]X[1,4]");
}

#[test]
fn perpendicular_dimensions_and_involution() {
    for s in SCALARS {
        let z2 = perpendicular(&z_relation_space(2).unwrap(), Pairing::Graded, s);
        assert_eq!(z2.dim(), 1);
        assert_eq!(z2.relation_text(0), "X[1,2]X[1,2]");
        for n in 3..=5 {
            let z = z_relation_space(n).unwrap();
            for pairing in [Pairing::Plain, Pairing::Graded] {
                let perp = perpendicular(&z, pairing, s);
                assert_eq!(perp.dim() + z.dim(), z.pair_count());
                assert!(perpendicular(&perp, pairing, s).same_span(&z, s));
            }
        }
    }
    assert_eq!(perpendicular(&z_relation_space(3).unwrap(), Pairing::Graded, Scalars::Rational).dim(), 5);
}

#[test]
fn perpendicular_of_z_is_the_signed_nilcactus_space() {
    for n in 2..=5 {
        let z = z_relation_space(n).unwrap();
        let x = nilcactus_relations(n, Orientation::Dual).unwrap();
        for s in SCALARS {
            assert!(perpendicular(&z, Pairing::Graded, s).same_span(&x, s), "n={n} over {s}");
        }
    }
}

#[test]
fn shifted_orientation_is_dual_only_on_three_letters() {
    for n in 2..=3 {
        let z = z_relation_space(n).unwrap();
        let x = nilcactus_relations(n, Orientation::Shifted).unwrap();
        assert!(perpendicular(&z, Pairing::Plain, Scalars::Rational).same_span(&x, Scalars::Rational));
    }
    for n in 4..=5 {
        let z = z_relation_space(n).unwrap();
        let x = nilcactus_relations(n, Orientation::Shifted).unwrap();
        for pairing in [Pairing::Plain, Pairing::Graded] {
            assert!(!perpendicular(&z, pairing, Scalars::Rational).same_span(&x, Scalars::Rational));
        }
    }
    // Over F_2 every sign convention coincides.
    for n in 2..=5 {
        let z = z_relation_space(n).unwrap();
        let x = nilcactus_relations(n, Orientation::Shifted).unwrap();
        assert!(perpendicular(&z, Pairing::Plain, Scalars::Prime(2)).same_span(&x, Scalars::Prime(2)));
    }
}

#[test]
fn x_ranks_two_ways() {
    let r = x_graded_ranks(2, 4, Orientation::Dual, 3).unwrap();
    assert_eq!(r.by_normal_form, vec![1, 1, 0, 0, 0]);
    assert!(r.agree());
    for n in 3..=4 {
        for orientation in [Orientation::Dual, Orientation::Shifted] {
            for p in [2, 3, 5, 1_000_003] {
                let r = x_graded_ranks(n, 4, orientation, p).unwrap();
                assert!(r.agree(), "n={n} {orientation:?} p={p}: {r:?}");
            }
        }
    }
    let r = x_graded_ranks(3, 4, Orientation::Dual, 3).unwrap();
    assert_eq!(&r.by_linear_algebra[..3], &[1, 3, 4]);
    assert!(matches!(x_graded_ranks(5, 6, Orientation::Dual, 3), Err(KoszulError::TooLarge { .. })));
}

#[test]
fn normal_forms_respect_each_relation() {
    for orientation in [Orientation::Dual, Orientation::Shifted] {
        for n in 2..=5 {
            let x = nilcactus_relations(n, orientation).unwrap();
            for r in x.relations() {
                let terms: Vec<(i64, Vec<ZGen>)> = r
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| {
                        let (a, b) = x.pair(k);
                        (c, vec![a, b])
                    })
                    .collect();
                match &terms[..] {
                    [(_, w)] => assert_eq!(x_normal_form(w, orientation, false), None),
                    [(c1, w1), (c2, w2)] => {
                        let (s1, v1) = x_normal_form(w1, orientation, false).unwrap();
                        let (s2, v2) = x_normal_form(w2, orientation, false).unwrap();
                        assert_eq!(v1, v2);
                        assert_eq!(c1 * s1 + c2 * s2, 0, "{w1:?} {w2:?}");
                    }
                    _ => panic!("unexpected relation shape"),
                }
            }
        }
    }
    let w = [g(1, 2), g(3, 4), g(1, 2)];
    assert_eq!(x_normal_form(&w, Orientation::Dual, false), None);
    let (s, v) = x_normal_form(&[g(3, 4), g(1, 2)], Orientation::Dual, false).unwrap();
    assert_eq!((s, v), (1, vec![g(1, 2), g(3, 4)]));
}

#[test]
fn five_letter_ranks_in_low_degree() {
    let x = nilcactus_relations(5, Orientation::Dual).unwrap();
    let by_words: Vec<u64> = (0..=3).map(|w| x_normal_words(5, w, Orientation::Dual, false).len() as u64).collect();
    assert_eq!(quotient_ranks(&x, 3, 7), by_words);
}

/// Counts of Z monomials and X normal words by (number of factors, sum of j-i).
fn bigraded(words: impl Iterator<Item = Vec<ZGen>>) -> BTreeMap<(usize, usize), i64> {
    let mut out = BTreeMap::new();
    for w in words {
        let d = w.iter().map(|g| g.degree()).sum();
        *out.entry((w.len(), d)).or_insert(0) += 1;
    }
    out
}

#[test]
fn hilbert_series_are_koszul_inverse() {
    for n in 2..=5 {
        let cap = 5;
        let z = bigraded((0..=cap).flat_map(|d| enumerate_canonical(n, d)));
        let x = bigraded((0..=cap).flat_map(|w| x_normal_words(n, w, Orientation::Dual, false)));
        for w in 0..=cap {
            for d in w..=cap {
                let mut sum = 0;
                for (&(w1, d1), &a) in &z {
                    if w1 <= w && d1 <= d {
                        let b = x.get(&(w - w1, d - d1)).copied().unwrap_or(0);
                        sum += if (w - w1) % 2 == 1 { -a * b } else { a * b };
                    }
                }
                assert_eq!(sum, i64::from(w == 0 && d == 0), "n={n} w={w} d={d}");
            }
        }
    }
}

#[test]
fn reversed_forms_count_the_basis() {
    for n in 2..=6 {
        let counts = reversed_basis_counts(n, 6).unwrap();
        for (d, &c) in counts.iter().enumerate() {
            assert_eq!(c, binomial((d + n - 2) as u64, (n - 2) as u64), "n={n} d={d}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perpendicular_is_an_involution(
        picks in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 9), 0..6),
        graded in any::<bool>(),
        prime in prop_oneof![Just(0u64), Just(2), Just(3), Just(5)],
    ) {
        let s = if prime == 0 { Scalars::Rational } else { Scalars::Prime(prime) };
        let pairing = if graded { Pairing::Graded } else { Pairing::Plain };
        let base = z_relation_space(3).unwrap();
        let mut rows = picks.clone();
        rows.retain(|r| r.iter().any(|&c| c != 0));
        let p = base.with_relations(rows);
        let perp = perpendicular(&p, pairing, s);
        prop_assert_eq!(perp.dim() + p.rank(s), 9);
        prop_assert!(perpendicular(&perp, pairing, s).same_span(&p, s));
    }
}

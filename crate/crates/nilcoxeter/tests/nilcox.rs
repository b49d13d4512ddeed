use std::sync::Arc;

use nilcoxeter::coxeter::{CoxeterDiagram, CoxeterGroup};
use nilcoxeter::nilcox::{
    canonical_compose, canonical_decompose, canonical_word, interval_power, interval_power_word,
    interval_word, loewy_dims, rewrite, NilCoxElement, NilCoxError,
};
use proptest::prelude::*;

fn sym(n: usize) -> Arc<CoxeterGroup> {
    Arc::new(CoxeterGroup::symmetric(n).unwrap())
}

/// Y of the concatenation of the given words.
fn y(g: &Arc<CoxeterGroup>, parts: &[Vec<usize>]) -> NilCoxElement {
    let word: Vec<usize> = parts.concat();
    NilCoxElement::from_word(g, &word).unwrap()
}

fn int(i: usize, j: usize) -> Vec<usize> {
    interval_word(i, j)
}

fn pw(i: usize, j: usize, k: usize) -> Vec<usize> {
    interval_power_word(i, j, k)
}

#[test]
fn basic_products() {
    let g = sym(3);
    let y1 = NilCoxElement::generator(&g, 1).unwrap();
    let y2 = NilCoxElement::generator(&g, 2).unwrap();
    assert!(y1.mul(&y1).unwrap().is_zero());
    let one = NilCoxElement::one(&g);
    assert_eq!(one.mul(&y1).unwrap(), y1);
    let a = y1.mul(&y2).unwrap().mul(&y1).unwrap();
    let b = y2.mul(&y1).unwrap().mul(&y2).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.trace(), 1);
    assert_eq!(y1.trace(), 0);
    assert_eq!(one.trace(), 0);
    let h = Arc::new(CoxeterGroup::symmetric(4).unwrap());
    assert!(matches!(
        y1.mul(&NilCoxElement::generator(&h, 1).unwrap()),
        Err(NilCoxError::DiagramMismatch)
    ));
}

#[test]
fn interval_power_examples() {
    assert_eq!(pw(2, 7, 1), vec![6, 5, 4, 3, 2]);
    assert_eq!(pw(2, 7, 2), vec![5, 4, 3, 2, 6, 5, 4, 3]);
    assert_eq!(pw(2, 7, 3), vec![4, 3, 2, 5, 4, 3, 6, 5, 4]);
    assert_eq!(pw(2, 7, 4), vec![3, 2, 4, 3, 5, 4, 6, 5]);
    assert_eq!(pw(2, 7, 5), vec![2, 3, 4, 5, 6]);
    assert!(int(3, 3).is_empty());
    let g = sym(7);
    assert_eq!(
        interval_power(&g, 2, 7, 3).unwrap(),
        y(&g, &[vec![4, 3, 2], vec![5, 4, 3], vec![6, 5, 4]])
    );
    assert!(interval_power(&g, 3, 2, 0).is_err());
    assert!(interval_power(&g, 2, 4, 3).is_err());
}

/// One-line notation of (j j-1 ... i)^k, computed directly from the cycle.
fn cycle_power(n: usize, i: usize, j: usize, k: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    let len = j - i + 1;
    for x in i..=j {
        let off = x - i;
        p[x - 1] = i + (off + len - k % len) % len;
    }
    p
}

#[test]
fn interval_powers_are_cycle_powers() {
    for n in 2..=7 {
        let g = sym(n);
        for i in 1..=n {
            for j in i..=n {
                for k in 0..=j - i {
                    let e = interval_power(&g, i, j, k).unwrap();
                    let (w, c) = e.terms().next().expect("nonzero");
                    assert_eq!(c, 1);
                    assert_eq!(g.length(w) as usize, k * (j - i + 1 - k));
                    assert_eq!(g.permutation(w).unwrap(), cycle_power(n, i, j, k));
                }
            }
        }
    }
}

#[test]
fn canonical_forms() {
    let g = sym(5);
    assert_eq!(canonical_decompose(&g, g.identity()).unwrap(), vec![1, 2, 3, 4]);
    assert_eq!(canonical_decompose(&g, g.longest_element()).unwrap(), vec![5, 5, 5, 5]);
    let w = g.from_word(&[2, 1, 4, 3, 2]).unwrap();
    assert_eq!(canonical_word(&g, w).unwrap(), vec![2, 1, 4, 3, 2]);
    assert_eq!(g.permutation(g.longest_element()).unwrap(), vec![5, 4, 3, 2, 1]);
    for n in 2..=6 {
        let g = sym(n);
        for w in g.elements() {
            let m = canonical_decompose(&g, w).unwrap();
            assert!(m.iter().enumerate().all(|(i, &mi)| i + 1 <= mi && mi <= n));
            assert_eq!(canonical_compose(&g, &m).unwrap(), w);
            assert_eq!(canonical_word(&g, w).unwrap().len(), g.length(w) as usize);
        }
    }
}

#[test]
fn canonical_words_count_each_element_once() {
    for n in 2..=6 {
        let g = sym(n);
        let mut seen = std::collections::HashSet::new();
        let mut tuples = vec![vec![]];
        for i in 1..n {
            tuples = tuples
                .into_iter()
                .flat_map(|t: Vec<usize>| {
                    (i..=n).map(move |m| {
                        let mut t = t.clone();
                        t.push(m);
                        t
                    })
                })
                .collect();
        }
        for t in tuples {
            assert!(seen.insert(canonical_compose(&g, &t).unwrap()));
        }
        assert_eq!(seen.len(), g.order());
    }
}

#[test]
fn loewy_rows() {
    assert_eq!(loewy_dims(1), vec![1]);
    assert_eq!(loewy_dims(2), vec![1, 1]);
    assert_eq!(loewy_dims(3), vec![1, 2, 2, 1]);
    assert_eq!(loewy_dims(4), vec![1, 3, 5, 6, 5, 3, 1]);
    assert_eq!(loewy_dims(5), vec![1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1]);
    assert_eq!(
        loewy_dims(6),
        vec![1, 5, 14, 29, 49, 71, 90, 101, 101, 90, 71, 49, 29, 14, 5, 1]
    );
    assert_eq!(
        loewy_dims(7)[..16],
        [1, 6, 20, 49, 98, 169, 259, 359, 455, 531, 573, 573, 531, 455, 359, 259]
    );
    assert_eq!(
        loewy_dims(8)[..16],
        [1, 7, 27, 76, 174, 343, 602, 961, 1415, 1940, 2493, 3017, 3450, 3736, 3836, 3736]
    );
    for n in 2..=7 {
        assert_eq!(loewy_dims(n), sym(n).length_counts());
    }
}

fn small_groups() -> Vec<Arc<CoxeterGroup>> {
    ["A:1", "A:2", "A:3", "A:4", "B:2", "B:3", "D:4", "I2:5", "I2:6", "I2:8", "H:3"]
        .iter()
        .map(|s| Arc::new(CoxeterGroup::new(CoxeterDiagram::parse(s).unwrap()).unwrap()))
        .collect()
}

#[test]
fn trace_is_twisted_symmetric() {
    for g in small_groups() {
        assert!(g.order() <= 250);
        let basis: Vec<NilCoxElement> =
            g.elements().map(|w| NilCoxElement::basis(&g, w)).collect();
        for a in &basis {
            for b in &basis {
                let t = a.mul(b).unwrap().trace();
                assert_eq!(t, b.mul(&a.psi()).unwrap().trace());
                assert_eq!(t, b.psi().mul(a).unwrap().trace());
            }
        }
    }
}

#[test]
fn psi_is_an_automorphism() {
    for g in small_groups() {
        for u in g.elements() {
            assert_eq!(g.psi(g.psi(u)), u);
            for v in g.elements() {
                assert_eq!(g.psi(g.mul(u, v)), g.mul(g.psi(u), g.psi(v)));
            }
        }
        let mut gens = g.psi_on_generators();
        gens.sort_unstable();
        assert_eq!(gens, (1..=g.rank()).collect::<Vec<_>>());
    }
}

#[test]
fn interval_product_cases() {
    for n in 2..=7 {
        let g = sym(n);
        for i in 1..=n {
            for j in i + 1..=n {
                for ip in i..=n {
                    for jp in ip + 1..=n {
                        let lhs = y(&g, &[int(ip, jp), int(i, j)]);
                        let rhs = if j == ip {
                            y(&g, &[int(i, jp)])
                        } else if j < ip {
                            y(&g, &[int(i, j), int(ip, jp)])
                        } else if j > jp {
                            y(&g, &[int(i, j), int(ip + 1, jp + 1)])
                        } else {
                            NilCoxElement::zero(&g)
                        };
                        assert_eq!(lhs, rhs, "n={n} [{ip},{jp}][{i},{j}]");
                    }
                }
            }
        }
    }
}

#[test]
fn interval_times_power_cases() {
    for n in 2..=6 {
        let g = sym(n);
        for i in 1..=n {
            for j in i + 1..=n {
                for k in 1..=j - i {
                    for ip in i..=n {
                        for jp in ip + 1..=n {
                            let lhs = y(&g, &[int(ip, jp), pw(i, j, k)]);
                            let rhs = if j >= ip && ip + k >= j + 1 {
                                y(
                                    &g,
                                    &[
                                        pw(i, ip - 1, ip + k - j - 1),
                                        int(ip + k + i - j - 1, jp),
                                        pw(ip + k + i - j, j, j - ip),
                                    ],
                                )
                            } else if j < ip {
                                y(&g, &[pw(i, j, k), int(ip, jp)])
                            } else if j + 1 - k > jp {
                                y(&g, &[pw(i, j, k), int(ip + k, jp + k)])
                            } else {
                                assert!(jp + k >= j + 1 && j + 1 - k > ip);
                                NilCoxElement::zero(&g)
                            };
                            assert_eq!(lhs, rhs, "n={n} [{ip},{jp}][{i},{j}];{k}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn interval_power_commutations() {
    for n in 2..=7 {
        let g = sym(n);
        for i in 1..=n {
            for j in i + 1..=n {
                for k in 0..=j - i {
                    for ip in i..=n {
                        for jp in ip + 1..=n {
                            if j < jp + k || jp + k > n {
                                continue;
                            }
                            for kp in 0..=jp - ip {
                                assert_eq!(
                                    y(&g, &[pw(ip, jp, kp), pw(i, j, k)]),
                                    y(&g, &[pw(i, j, k), pw(ip + k, jp + k, kp)])
                                );
                            }
                        }
                    }
                    for kp in 1..k {
                        assert_eq!(
                            y(&g, &[pw(i, j, k), pw(i, i + k - 1, kp)]),
                            y(&g, &[pw(i, j, kp), pw(i + kp, j, k - kp)])
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn rewriting_reaches_canonical_form_exhaustively() {
    for n in 2..=4 {
        let g = sym(n);
        let mut words = vec![vec![]];
        for _ in 0..7 {
            words = words
                .into_iter()
                .flat_map(|w: Vec<usize>| {
                    (1..n).map(move |a| {
                        let mut w = w.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
            for w in &words {
                check_rewrite(&g, w);
            }
        }
    }
}

fn check_rewrite(g: &Arc<CoxeterGroup>, word: &[usize]) {
    let e = NilCoxElement::from_word(g, word).unwrap();
    match rewrite(word) {
        None => assert!(e.is_zero(), "{word:?}"),
        Some(r) => {
            let (w, _) = e.terms().next().expect("rewrite gave nonzero for a zero product");
            assert_eq!(r, canonical_word(g, w).unwrap(), "{word:?}");
        }
    }
}

#[test]
fn json_round_trip() {
    let g = sym(4);
    let e = y(&g, &[vec![2, 1, 3]])
        .scale(3)
        .unwrap()
        .sub(&y(&g, &[vec![1]]))
        .unwrap();
    let s = e.to_json();
    assert_eq!(
        s,
        r#"{"diagram":"A:3","terms":[{"word":[1],"coeff":-1},{"word":[2,1,3],"coeff":3}]}"#
    );
    assert_eq!(NilCoxElement::from_json(&s).unwrap(), e);
    let reduced = NilCoxElement::from_json_in(
        &g,
        r#"{"diagram":"A:3","terms":[{"word":[1,1],"coeff":5},{"word":[2,3,1],"coeff":3},{"word":[1],"coeff":-1}]}"#,
    )
    .unwrap();
    assert_eq!(reduced, e);
    assert!(NilCoxElement::from_json_in(&g, r#"{"diagram":"A:2","terms":[]}"#).is_err());
    assert_eq!(e.to_string(), "-Y[1] + 3*Y[2,1,3]");
}

fn word_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (3usize..=6).prop_flat_map(|n| (Just(n), prop::collection::vec(1..n, 0..18)))
}

proptest! {
    #[test]
    fn rewriting_agrees_with_multiplication((n, word) in word_strategy()) {
        let g = sym(n);
        check_rewrite(&g, &word);
    }

    #[test]
    fn long_products_vanish(word in prop::collection::vec(1usize..5, 11..=14)) {
        let g = sym(5);
        prop_assert_eq!(g.length(g.longest_element()), 10);
        prop_assert!(NilCoxElement::from_word(&g, &word).unwrap().is_zero());
    }

    #[test]
    fn products_are_graded(a in prop::collection::vec(1usize..5, 0..6), b in prop::collection::vec(1usize..5, 0..6)) {
        let g = sym(5);
        let x = NilCoxElement::from_word(&g, &a).unwrap();
        let z = NilCoxElement::from_word(&g, &b).unwrap();
        let p = x.mul(&z).unwrap();
        for (w, _) in p.terms() {
            prop_assert_eq!(g.length(w) as usize, a.len() + b.len());
        }
    }
}

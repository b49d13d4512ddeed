use nilcoxeter::zring::{
    binomial, enumerate_canonical, f_decode, f_encode, multidegree, nonzero_mul_criterion, rank,
    reversal_steps, reversed_form, ZElement, ZGen, ZMonomial, ZRing,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn text(word: &[ZGen]) -> String {
    ZMonomial { sign: 1, factors: word.to_vec() }.to_string()
}

#[test]
fn worked_example_encoding_and_reversal() {
    let m = f_encode(&[2, 3, 3, 1, 5, 4, 2, 1]).unwrap();
    assert_eq!(m.to_string(), "[5,6][2,4][5,7]^2[1,4][5,8][1,9]");
    let ring = ZRing::signless(9).unwrap();
    let steps: Vec<String> = reversal_steps(&ring, &m.factors).iter().map(|r| r.text()).collect();
    assert_eq!(
        steps,
        [
            "[1,9][5,4][8,6][5,3]^2[9,6][5,2]",
            "[1,9][5,2][2,3][8,6][2,4]^2[9,6]",
            "[1,9][5,2][9,6][2,3][7,9][2,4]^2",
            "[1,9][5,2][9,6][2,4][4,3][7,9][2,4]",
            "[1,9][5,2][9,6][2,4]^2[2,3][7,9]",
            "[1,9][5,2][9,6][2,4]^2[7,9][2,3]",
        ]
    );
    let parsed = ring.parse("[5,6][2,4][5,7]^2[1,4][5,8][1,9]").unwrap();
    assert_eq!(parsed.to_string(), "[5,6][2,4][5,7]^2[1,4][5,8][1,9]");
    assert_eq!(f_decode(&m, 9), vec![2, 3, 3, 1, 5, 4, 2, 1]);
}

#[test]
fn encoding_intermediate_steps() {
    assert_eq!(f_encode(&[1, 2, 2, 0, 4, 3, 1, 0]).unwrap().to_string(), "[5,6][2,4][5,7]^2[1,4][5,8]");
    assert_eq!(f_encode(&[0, 0, 0, 0, 2, 1, 0, 0]).unwrap().to_string(), "[5,6][5,7]");
    assert_eq!(f_encode(&[0, 0, 0, 0, 0, 0, 0, 0]).unwrap().to_string(), "1");
    assert_eq!(f_encode(&[1, 1]).unwrap().to_string(), "[1,3]");
    assert_eq!(f_encode(&[0, 0, 2, 2, 0, 1]).unwrap().to_string(), "[6,7][3,5]^2");
}

#[test]
fn normalization_examples() {
    let z = ZRing::signed(4).unwrap();
    assert!(z.word(&[(2, 4), (1, 3)]).unwrap().is_zero());
    assert!(z.word(&[(1, 2), (2, 3)]).unwrap().is_zero());
    assert!(z.word(&[(2, 3), (1, 2)]).unwrap().is_zero());
    assert_eq!(z.word(&[(2, 3)]).unwrap().to_string(), "[2,3]");
    assert_eq!(z.word(&[(3, 2)]).unwrap().to_string(), "-[2,3]");
    assert_eq!(z.word(&[(4, 2)]).unwrap().to_string(), "[2,4]");
    // x z + z y = 0 with x = z_12, y = z_23, z = z_13.
    let xz = z.word(&[(1, 2), (1, 3)]).unwrap();
    let zy = z.word(&[(1, 3), (2, 3)]).unwrap();
    assert!(xz.add(&zy).unwrap().is_zero());
    assert_eq!(xz.to_string(), "[1,2][1,3]");
    let s = ZRing::signless(3).unwrap();
    assert_eq!(s.word(&[(1, 3), (2, 3)]).unwrap().to_string(), "[1,2][1,3]");
    assert!(z.normalize_pairs(&[(0, 2)]).is_err());
    assert!(z.normalize_pairs(&[(1, 5)]).is_err());
    assert!(z.normalize_pairs(&[(2, 2)]).is_err());
}

#[test]
fn squares_never_vanish() {
    for n in 2..=6 {
        let z = ZRing::signed(n).unwrap();
        for g in z.generators() {
            let sq = z.normalize(&[g, g]).unwrap().unwrap();
            assert_eq!(sq.sign, 1);
            assert_eq!(sq.factors, vec![g, g]);
        }
    }
}

#[test]
fn ranks_are_binomial() {
    assert_eq!(rank(3, 2), 3);
    assert_eq!(rank(4, 3), 10);
    for n in 2..=6 {
        assert_eq!(rank(n, 0), 1);
        for d in 0..=8 {
            assert_eq!(rank(n, d), binomial((d + n - 2) as u64, (n - 2) as u64), "n={n} d={d}");
        }
    }
}

fn tuples(len: usize, total: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in tuples(len - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn encoding_is_a_bijection() {
    for n in 2..=6 {
        let signed = ZRing::signed(n).unwrap();
        let signless = ZRing::signless(n).unwrap();
        for d in 0..=8u32 {
            let mut images: Vec<Vec<ZGen>> = tuples(n - 1, d)
                .into_iter()
                .map(|t| {
                    let m = f_encode(&t).unwrap();
                    assert_eq!(f_decode(&m, n), t);
                    assert_eq!(m.degree(), d as usize);
                    m.factors
                })
                .collect();
            images.sort();
            let canon = enumerate_canonical(n, d as usize);
            assert_eq!(images, canon, "n={n} d={d}");
            for m in &canon {
                for ring in [signed, signless] {
                    let fixed = ring.normalize(m).unwrap().unwrap();
                    assert_eq!(fixed.sign, 1);
                    assert_eq!(&fixed.factors, m);
                }
            }
        }
    }
}

#[test]
fn reversed_form_is_the_same_element() {
    for n in 2..=6 {
        for ring in [ZRing::signed(n).unwrap(), ZRing::signless(n).unwrap()] {
            for d in 0..=6 {
                for m in enumerate_canonical(n, d) {
                    let r = reversed_form(&ring, &m);
                    let back = ring.normalize(&r.factors).unwrap().unwrap();
                    assert_eq!(back.factors, m);
                    assert_eq!(back.sign * r.sign, 1, "{}", text(&m));
                    for step in reversal_steps(&ring, &m) {
                        let b = ring.normalize(&step.factors).unwrap().unwrap();
                        assert_eq!((b.factors.clone(), b.sign * step.sign), (m.clone(), 1));
                    }
                }
            }
        }
    }
}

/// Independent normalizer: inserts generators at the left end and moves them right.
fn normalize_from_left(ring: &ZRing, word: &[ZGen]) -> Option<ZMonomial> {
    let signed = ring.is_signed();
    let sg = |odd: bool| if signed && odd { -1 } else { 1 };
    let mut factors: Vec<ZGen> = Vec::new();
    let mut sign = 1;
    for &raw in word.iter().rev() {
        let g = raw.normalized();
        if !raw.oriented() {
            sign *= sg(g.degree() % 2 == 1);
        }
        let mut p = 0;
        while p < factors.len() {
            let a = factors[p];
            if a.overlaps(g) {
                return None;
            }
            let (da, dg) = (a.degree(), g.degree());
            if dg > da {
                sign *= sg(da * dg % 2 == 1);
                if g.contains(a) {
                    // z_g z_a = +- z_{refl a} z_g with the reflection reoriented.
                    sign *= sg(da % 2 == 1);
                    factors[p] = ZGen::new(g.lo() + g.hi() - a.hi(), g.lo() + g.hi() - a.lo());
                }
                p += 1;
            } else if dg == da && a.hi() < g.lo() {
                sign *= sg(da * dg % 2 == 1);
                p += 1;
            } else {
                break;
            }
        }
        if factors[p..].iter().any(|b| b.overlaps(g)) {
            return None;
        }
        // Reflections can put the passed factors out of order; renormalize them.
        let head = normalize_from_left(ring, &factors[..p])?;
        sign *= head.sign;
        let mut next = head.factors;
        next.push(g);
        next.extend_from_slice(&factors[p..]);
        factors = next;
    }
    Some(ZMonomial { sign, factors })
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_deg: usize) -> Vec<ZGen> {
    let mut w = Vec::new();
    let mut deg = 0;
    loop {
        let i = rng.gen_range(1..=n);
        let mut j = rng.gen_range(1..=n);
        while j == i {
            j = rng.gen_range(1..=n);
        }
        let g = ZGen::new(i, j);
        if deg + g.degree() > max_deg {
            return w;
        }
        deg += g.degree();
        w.push(g);
    }
}

#[test]
fn normalization_is_confluent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut nonzero = 0;
    for _ in 0..20000 {
        let n = rng.gen_range(2..=6);
        let ring = ZRing::new(n, rng.gen_bool(0.7)).unwrap();
        let w = random_word(&mut rng, n, 8);
        let a = ring.normalize(&w).unwrap();
        let b = normalize_from_left(&ring, &w);
        assert_eq!(a, b, "{w:?}");
        // Random association order: normalize a random split and multiply.
        let cut = rng.gen_range(0..=w.len());
        let left = ring.normalize(&w[..cut]).unwrap();
        let right = ring.normalize(&w[cut..]).unwrap();
        let c = match (left, right) {
            (Some(l), Some(r)) => ring.mul_monomials(&l, &r),
            _ => None,
        };
        assert_eq!(a, c);
        nonzero += a.is_some() as usize;
    }
    assert!(nonzero > 2000);
}

fn canonical_elems(ring: &ZRing, max_d: usize) -> Vec<ZElement> {
    (0..=max_d)
        .flat_map(|d| enumerate_canonical(ring.n(), d))
        .map(|f| ring.from_monomial(&ZMonomial { sign: 1, factors: f }))
        .collect()
}

#[test]
fn associativity_on_basis_triples() {
    for n in 2..=4 {
        let ring = ZRing::signed(n).unwrap();
        let basis = canonical_elems(&ring, 3);
        for a in &basis {
            for b in &basis {
                let ab = a.mul(b).unwrap();
                for c in &basis {
                    assert_eq!(ab.mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
                }
            }
        }
    }
}

/// No level-set interval of t crosses an end of [i, j-1] or sits right next to it.
fn level_sets_clear(t: &[u32], i: usize, j: usize) -> bool {
    let (lo, hi) = (i, j - 1);
    for h in 1..=t.iter().copied().max().unwrap_or(0) {
        let mut k = 1;
        while k <= t.len() {
            if t[k - 1] < h {
                k += 1;
                continue;
            }
            let a = k;
            while k <= t.len() && t[k - 1] >= h {
                k += 1;
            }
            let b = k - 1;
            let inside = lo <= a && b <= hi;
            let covers = a <= lo && hi <= b;
            let apart = b + 1 < lo || hi + 1 < a;
            if !(inside || covers || apart) {
                return false;
            }
        }
    }
    true
}

#[test]
fn product_criterion_matches_brute_force() {
    for n in 2..=6 {
        let ring = ZRing::signless(n).unwrap();
        for d in 0..=6u32 {
            for t in tuples(n - 1, d) {
                let m = f_encode(&t).unwrap();
                for i in 1..n {
                    for j in i + 1..=n {
                        let g = ZMonomial { sign: 1, factors: vec![ZGen::new(i, j)] };
                        let prod = ring.mul_monomials(&g, &m);
                        let mut bumped = t.clone();
                        for k in i..j {
                            bumped[k - 1] += 1;
                        }
                        let target = f_encode(&bumped).unwrap();
                        let additive = target.internal_degree()
                            == m.internal_degree() + ZGen::new(i, j).internal_degree();
                        // Negated internal degrees: the bumped encoding is at least the sum.
                        assert!(target.internal_degree() >= m.internal_degree() + ZGen::new(i, j).internal_degree(), "t={t:?} {i},{j}");
                        let crit = nonzero_mul_criterion(&t, i, j);
                        assert_eq!(crit, prod.is_some(), "t={t:?} z_{i},{j}");
                        assert_eq!(crit, additive, "t={t:?} z_{i},{j}");
                        assert_eq!(crit, level_sets_clear(&t, i, j), "t={t:?} z_{i},{j}");
                        if let Some(p) = prod {
                            // The product is f of t reversed on i..j-1, then bumped.
                            let mut turned = t.clone();
                            turned[i - 1..j - 1].reverse();
                            for k in i..j {
                                turned[k - 1] += 1;
                            }
                            assert_eq!(p.factors, f_encode(&turned).unwrap().factors);
                        }
                    }
                }
            }
        }
    }
    assert!(nonzero_mul_criterion(&[1, 0], 1, 2));
    assert!(!nonzero_mul_criterion(&[1, 0], 2, 3));
    assert!(nonzero_mul_criterion(&[0, 0, 0], 1, 4));
    assert!(nonzero_mul_criterion(&[0, 1], 1, 3));
    assert!(!nonzero_mul_criterion(&[0, 1, 1], 1, 3));
}

#[test]
fn involutions() {
    for n in 2..=5 {
        let ring = ZRing::signed(n).unwrap();
        let basis = canonical_elems(&ring, 4);
        let top = ring.gen(1, n).unwrap();
        assert_eq!(top.dagger(), top);
        for a in &basis {
            assert_eq!(a.star().star(), *a);
            assert_eq!(a.dagger().dagger(), *a);
            assert_eq!(top.mul(a).unwrap(), a.dagger().mul(&top).unwrap());
        }
        for a in basis.iter().take(40) {
            for b in basis.iter().take(40) {
                let ab = a.mul(b).unwrap();
                assert_eq!(ab.star(), b.star().mul(&a.star()).unwrap());
                assert_eq!(ab.dagger(), a.dagger().mul(&b.dagger()).unwrap());
            }
        }
    }
    let r4 = ZRing::signed(4).unwrap();
    // (-1)^{3*(1-2)} z_{4,3} = -z_{4,3} = -(-1) z_{3,4}.
    assert_eq!(r4.gen(1, 2).unwrap().dagger().to_string(), "[3,4]");
    assert_eq!(r4.gen(1, 3).unwrap().dagger().to_string(), "[2,4]");
    let r3 = ZRing::signed(3).unwrap();
    assert_eq!(r3.gen(1, 2).unwrap().dagger().to_string(), "-[2,3]");
    assert_eq!(
        r4.word(&[(1, 2), (1, 3)]).unwrap().star(),
        r4.word(&[(1, 3), (1, 2)]).unwrap()
    );
    assert_eq!(r4.gen(2, 3).unwrap().star(), r4.gen(2, 3).unwrap());
}

#[test]
fn semiprime_and_non_prime_witnesses() {
    for n in 2..=5 {
        let ring = ZRing::signed(n).unwrap();
        for a in canonical_elems(&ring, 5) {
            let m = a.terms().next().unwrap();
            let trip = a.mul(&a.star()).unwrap().mul(&a).unwrap();
            let tripled: Vec<ZGen> = m.factors.iter().flat_map(|&g| [g, g, g]).collect();
            assert_eq!(trip.len(), 1);
            assert_eq!(trip.terms().next().unwrap().factors, tripled);
            let double = a.mul(&a.star()).unwrap();
            let doubled: Vec<ZGen> = m.factors.iter().flat_map(|&g| [g, g]).collect();
            assert_eq!(double.terms().next().unwrap().factors, doubled);
        }
        if n >= 4 {
            let left = ring.word(&[(1, 2), (n - 1, n)]).unwrap();
            let right = ring.gen(2, n - 1).unwrap();
            assert!(!left.is_zero() && !right.is_zero());
            for m in canonical_elems(&ring, 5) {
                assert!(left.mul(&m).unwrap().mul(&right).unwrap().is_zero());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let ring = ZRing::signed(n).unwrap();
        let d = rng.gen_range(0..=4);
        let basis = enumerate_canonical(n, d);
        let mut a = ring.zero();
        for _ in 0..rng.gen_range(1..=4) {
            let f = basis[rng.gen_range(0..basis.len())].clone();
            let c = rng.gen_range(-3i64..=3);
            a = a.add(&ring.from_monomial(&ZMonomial { sign: c, factors: f })).unwrap();
        }
        if !a.is_zero() {
            assert!(!a.mul(&a.star()).unwrap().mul(&a).unwrap().is_zero());
        }
    }
}

#[test]
fn squares_commute() {
    for n in 2..=5 {
        let ring = ZRing::signed(n).unwrap();
        let gens = ring.generators();
        for &a in &gens {
            for &b in &gens {
                let aa = ring.normalize(&[a, a]).unwrap().unwrap();
                let bb = ring.normalize(&[b, b]).unwrap().unwrap();
                assert_eq!(ring.mul_monomials(&aa, &bb), ring.mul_monomials(&bb, &aa));
            }
        }
    }
}

#[test]
fn quotients() {
    let ring = ZRing::signed(4).unwrap();
    assert!(ring.gen(1, 2).unwrap().quotient_interval(2, 4).is_zero());
    assert_eq!(ring.gen(2, 3).unwrap().quotient_interval(2, 4), ring.gen(2, 3).unwrap());
    assert!(ring.word(&[(1, 2), (3, 4)]).unwrap().quotient_interval(1, 3).is_zero());
}

#[test]
fn multidegree_counts_coverage() {
    let m = f_encode(&[2, 3, 3, 1, 5, 4, 2, 1]).unwrap();
    assert_eq!(multidegree(&m.factors, 9), vec![2, 3, 3, 1, 5, 4, 2, 1]);
    assert!(f_encode(&[1]).is_ok());
}

#[test]
fn text_and_json_round_trip() {
    let ring = ZRing::signed(5).unwrap();
    let e = ring
        .parse("-[1,3][2,3]")
        .unwrap()
        .add(&ring.parse("[4,5]^2").unwrap().scale(3).unwrap())
        .unwrap();
    assert_eq!(e.to_string(), "[1,2][1,3] + 3*[4,5]^2");
    assert_eq!(ZElement::from_json(&e.to_json()).unwrap(), e);
    assert!(ring.parse("0").unwrap().is_zero());
    assert_eq!(ring.parse("1").unwrap(), ring.one());
    assert!(ring.parse("[1,2").is_err());
    assert!(ring.parse("[1,2]^").is_err());
    assert_eq!(ring.zero().to_string(), "0");
}

proptest! {
    #[test]
    fn random_associativity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=5);
        let ring = ZRing::new(n, rng.gen_bool(0.5)).unwrap();
        let w: Vec<Vec<ZGen>> = (0..3).map(|_| random_word(&mut rng, n, 2)).collect();
        let el = |w: &Vec<ZGen>| match ring.normalize(w).unwrap() {
            Some(m) => ring.from_monomial(&m),
            None => ring.zero(),
        };
        let (a, b, c) = (el(&w[0]), el(&w[1]), el(&w[2]));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }
}

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use nilcoxeter::coxeter::CoxeterDiagram;
use nilcoxeter::extengine::{
    ext_ranks, minimal_resolution, presentation_table, FiniteDimAlgebra, MinimalResolution,
    Presentation, PresentationGenerator,
};
use nilcoxeter::relations::QuadRelation;
use nilcoxeter::resolution::Resolution;
use nilcoxeter::zring::{ZGen, ZRing};
use proptest::prelude::*;

fn nilcox(tag: &str, p: u64) -> Arc<FiniteDimAlgebra> {
    Arc::new(FiniteDimAlgebra::nilcoxeter(CoxeterDiagram::parse(tag).unwrap(), p, 10_000).unwrap())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn expected_ranks(rank: u64, steps: u64) -> Vec<usize> {
    (0..=steps).map(|d| binomial(d + rank - 1, rank - 1) as usize).collect()
}

/// Signed permutations reachable from the identity under the B3 generators.
fn signed_permutation_orbit() -> usize {
    let gens: Vec<Box<dyn Fn(&[i8; 3]) -> [i8; 3]>> = vec![
        Box::new(|x| [x[1], x[0], x[2]]),
        Box::new(|x| [x[0], x[2], x[1]]),
        Box::new(|x| [x[0], x[1], -x[2]]),
    ];
    let mut seen = HashSet::from([[1i8, 2, 3]]);
    let mut frontier = vec![[1i8, 2, 3]];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = g(&x);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

#[test]
fn algebra_dimensions() {
    assert_eq!(nilcox("A:2", 2).dim(), 6);
    assert_eq!(nilcox("B:3", 3).dim(), signed_permutation_orbit());
    assert_eq!(nilcox("I2:6", 5).dim(), 12);
    assert_eq!(nilcox("H:3", 3).dim(), 120);
    assert_eq!(nilcox("D:4", 2).dim(), 192);
    let b3 = nilcox("B:3", 3);
    assert_eq!(b3.hilbert_series(), vec![1, 3, 5, 7, 8, 8, 7, 5, 3, 1]);
    assert_eq!(b3.top_degree_within(0b011), 3);
    assert_eq!(b3.top_degree_within(0b110), 4);
    let too_big = FiniteDimAlgebra::nilcoxeter(CoxeterDiagram::parse("A:5").unwrap(), 2, 100);
    assert!(too_big.is_err());
}

#[test]
fn algebra_is_associative_with_unit() {
    assert!(nilcox("A:2", 3).check_associativity(None));
    assert!(nilcox("B:2", 2).check_associativity(None));
    assert!(nilcox("B:3", 5).check_associativity(Some((20_000, 1))));
    assert!(nilcox("D:4", 3).check_associativity(Some((20_000, 2))));
    let a = nilcox("A:3", 5);
    let u = a.unit();
    assert_eq!(a.label(u), "1");
    for i in 0..a.dim() {
        assert_eq!(a.product(u, i), &[(i, 1)]);
    }
}

#[test]
fn small_resolutions() {
    assert_eq!(ext_ranks(nilcox("A:1", 2), 6), vec![1; 7]);
    assert_eq!(ext_ranks(nilcox("A:1", 7), 6), vec![1; 7]);
    assert_eq!(ext_ranks(nilcox("A:2", 2), 5), expected_ranks(2, 5));
    assert_eq!(ext_ranks(nilcox("A:3", 3), 4), expected_ranks(3, 4));
}

#[test]
fn ranks_from_the_poincare_series() {
    for p in [2, 3, 5, 7] {
        assert_eq!(ext_ranks(nilcox("B:2", p), 5), vec![1, 2, 3, 4, 5, 6]);
    }
    assert_eq!(ext_ranks(nilcox("H:3", 3), 4), vec![1, 3, 6, 10, 15]);
    assert_eq!(ext_ranks(nilcox("D:4", 2), 3), vec![1, 4, 10, 20]);
}

#[test]
fn ranks_are_binomial_for_every_example_type() {
    let types = [("B:2", 2), ("I2:6", 2), ("I2:5", 2), ("I2:7", 2), ("B:3", 3), ("H:3", 3), ("D:4", 4)];
    for (tag, rank) in types {
        for p in [2, 3, 5] {
            let steps = if rank == 2 { 6 } else { 4 };
            let res = minimal_resolution(nilcox(tag, p), steps);
            assert_eq!(res.ranks(), expected_ranks(rank, steps as u64), "{tag} p={p}");
            assert!(res.check_composites().passed(), "{tag} p={p}");
            assert!(res.check_minimality().passed(), "{tag} p={p}");
        }
    }
}

#[test]
fn boundary_matrices_compose_to_zero() {
    let res = minimal_resolution(nilcox("A:2", 3), 3);
    let dim = res.algebra().dim();
    let p = 3;
    for s in 1..=3 {
        let upper = res.boundary_matrix(s);
        let lower = res.boundary_matrix(s - 1);
        assert_eq!(upper.len(), res.step(s).rank() * dim);
        for row in &upper {
            for c in 0..lower[0].len() {
                let v: u64 = row.iter().zip(&lower).map(|(a, r)| a * r[c]).sum();
                assert_eq!(v % p, 0);
            }
        }
    }
}

/// Cell counts of the explicit complex by (homological, internal) degree.
fn cell_bidegrees(n: usize, d: u32) -> BTreeMap<usize, usize> {
    let res = Resolution::new(n).unwrap();
    let mut out = BTreeMap::new();
    for t in res.cells(d) {
        *out.entry(res.cell_internal_degree(&t)).or_insert(0) += 1;
    }
    out
}

#[test]
fn agrees_with_the_explicit_complex_on_ranks() {
    for n in 2..=5 {
        for p in [2, 3] {
            let res = minimal_resolution(nilcox(&format!("A:{}", n - 1), p), 6);
            let bigraded = res.bigraded_ranks();
            for d in 0..=6u32 {
                let counts: BTreeMap<u32, usize> =
                    cell_bidegrees(n, d).into_iter().map(|(k, v)| (k as u32, v)).collect();
                assert_eq!(bigraded[d as usize], counts, "n={n} p={p} d={d}");
            }
        }
    }
}

/// All quadratic relations of the signed Z ring, read off from products.
fn z_relations(n: usize) -> Vec<(i64, ZGen, ZGen, Option<(i64, ZGen, ZGen)>)> {
    let ring = ZRing::signed(n).unwrap();
    let gens = ring.generators();
    let mut by_monomial: BTreeMap<Vec<ZGen>, Vec<(i64, ZGen, ZGen)>> = BTreeMap::new();
    let mut out = Vec::new();
    for &a in &gens {
        for &b in &gens {
            match ring.normalize(&[a, b]).unwrap() {
                None => out.push((1, a, b, None)),
                Some(m) => by_monomial.entry(m.factors).or_default().push((m.sign, a, b)),
            }
        }
    }
    for pairs in by_monomial.values() {
        let (s0, a0, b0) = pairs[0];
        for &(s, a, b) in &pairs[1..] {
            out.push((s, a0, b0, Some((-s0, a, b))));
        }
    }
    out
}

/// The interval generators z_{i,j} as a presentation with letters i..j-1.
fn interval_presentation(n: usize) -> (Presentation, HashMap<ZGen, char>) {
    let gens = ZRing::signless(n).unwrap().generators();
    let names: HashMap<ZGen, char> = gens.iter().zip('a'..).map(|(&g, c)| (g, c)).collect();
    let generators = gens
        .iter()
        .map(|g| PresentationGenerator { name: names[g], letters: (g.lo()..g.hi()).collect() })
        .collect();
    (Presentation { tag: format!("A{}", n - 1), generators, relations: vec![] }, names)
}

#[test]
fn agrees_with_the_explicit_complex_on_products() {
    for n in 3..=5 {
        let cap = if n == 5 { 3 } else { 2 * (n - 1) };
        for p in [3, 5] {
            let res = minimal_resolution(nilcox(&format!("A:{}", n - 1), p), cap);
            let (pres, names) = interval_presentation(n);
            let table = pres.product_table(&res, cap).unwrap();
            let rels: Vec<QuadRelation<char>> = z_relations(n)
                .into_iter()
                .map(|(c, a, b, other)| {
                    let mut r = vec![(c, names[&a], names[&b])];
                    r.extend(other.map(|(c, a, b)| (c, names[&a], names[&b])));
                    r
                })
                .filter(|r| r.iter().all(|(_, a, b)| table.get(a, b).is_some()))
                .collect();
            let report = table.check(&rels, p);
            assert!(report.complete(), "n={n} p={p} {report:?}");
        }
    }
}

fn products_commute(res: &MinimalResolution, cap: usize) -> (usize, usize) {
    let all = res.products(cap).unwrap();
    let by_pair: HashMap<_, _> = all.iter().map(|x| ((x.left, x.right), &x.product)).collect();
    let mut checked = 0;
    let mut differing = 0;
    for x in &all {
        checked += 1;
        if by_pair[&(x.right, x.left)] != &x.product {
            differing += 1;
        }
    }
    (checked, differing)
}

#[test]
fn commutativity_depends_on_type_and_characteristic() {
    let (checked, differing) = products_commute(&minimal_resolution(nilcox("B:2", 2), 3), 3);
    assert!(checked > 20);
    assert_eq!(differing, 0);
    let (_, differing) = products_commute(&minimal_resolution(nilcox("B:2", 3), 3), 3);
    assert!(differing > 0);
    for p in [2, 3, 5, 7] {
        let (_, differing) = products_commute(&minimal_resolution(nilcox("A:2", p), 3), 3);
        assert!(differing > 0, "p={p}");
    }
}

#[test]
fn presentation_tables() {
    let a2 = presentation_table("A2").unwrap();
    assert_eq!(a2.generators.iter().map(|g| g.degree()).collect::<Vec<_>>(), vec![-1, -1, -2]);
    assert_eq!(a2.relations.len(), 4);
    let h3 = presentation_table("H3").unwrap();
    assert_eq!(h3.generators.len(), 6);
    for r in ["uz-zu", "vz-zv", "wz-zw"] {
        assert!(h3.relations.iter().any(|x| x == r));
    }
    assert_eq!(presentation_table("I2:5").unwrap().relations, a2.relations);
    assert_eq!(presentation_table("I2-odd").unwrap().relations, a2.relations);
    assert_eq!(presentation_table("G2").unwrap().relations, presentation_table("B2").unwrap().relations);
    assert_eq!(presentation_table("I2:8").unwrap().relations, presentation_table("I2-even").unwrap().relations);
    let d4 = presentation_table("D:4").unwrap();
    assert_eq!(d4.generators.len(), 11);
    assert_eq!(d4.generators[0].letters, vec![2]);
    assert!(presentation_table("E8").is_err());
    assert!(presentation_table("I2:2").is_err());
}

#[test]
fn rank_two_generators_satisfy_their_relations() {
    let check = |tag: &str, pres: &str, p| {
        let res = minimal_resolution(nilcox(tag, p), 4);
        presentation_table(pres).unwrap().check(&res, 4).unwrap()
    };
    let a2 = check("A:2", "A2", 3);
    assert!(a2.complete(), "{a2:?}");
    let b2 = check("B:2", "B2", 3);
    assert!(b2.complete(), "{b2:?}");
    for p in [2, 3, 5] {
        assert!(check("I2:5", "A2", p).complete());
        assert!(check("I2:7", "A2", p).complete());
        assert!(check("I2:6", "B2", p).complete());
        assert!(check("I2:8", "B2", p).complete());
        assert!(check("A:2", "B2", p).rescaling.is_none());
        assert!(check("B:2", "A2", p).rescaling.is_none());
    }
}

#[test]
fn rank_three_generators_satisfy_their_relations() {
    for (tag, pres) in [("A:3", "A3"), ("B:3", "B3"), ("H:3", "H3")] {
        for p in [2, 3, 5] {
            let res = minimal_resolution(nilcox(tag, p), 6);
            let report = presentation_table(pres).unwrap().check(&res, 6).unwrap();
            assert!(report.complete(), "{tag} p={p} {report:?}");
            assert_eq!(report.kernel_dim, 20);
        }
    }
    // The two sign readings of the last H3 relation differ away from 2.
    let res = minimal_resolution(nilcox("H:3", 5), 6);
    let mut pres = presentation_table("H3").unwrap();
    *pres.relations.last_mut().unwrap() = "yz-zy".into();
    assert!(pres.check(&res, 6).unwrap().rescaling.is_none());
    // B3 and A3 are told apart.
    let res = minimal_resolution(nilcox("B:3", 3), 6);
    assert!(presentation_table("A3").unwrap().check(&res, 6).unwrap().rescaling.is_none());
}

#[test]
fn d4_generators_satisfy_their_relations() {
    let res = minimal_resolution(nilcox("D:4", 3), 8);
    let report = presentation_table("D4").unwrap().check(&res, 8).unwrap();
    assert!(report.complete(), "{report:?}");
    let res = minimal_resolution(nilcox("D:4", 2), 5);
    let report = presentation_table("D4").unwrap().check(&res, 5).unwrap();
    assert!(report.complete(), "{report:?}");
}

/// The exterior algebra on r generators, whose Ext ring is polynomial.
fn exterior(r: usize, p: u64) -> FiniteDimAlgebra {
    let subsets: Vec<u32> = {
        let mut s: Vec<u32> = (0..1u32 << r).collect();
        s.sort_by_key(|m| (m.count_ones(), *m));
        s
    };
    let index: HashMap<u32, usize> = subsets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let labels = subsets.iter().map(|m| format!("e{m:b}")).collect();
    let degrees = subsets.iter().map(|m| m.count_ones()).collect();
    FiniteDimAlgebra::from_structure_constants(p, labels, degrees, subsets.clone(), r, |a, b| {
        let (x, y) = (subsets[a], subsets[b]);
        if x & y != 0 {
            return vec![];
        }
        // Sign of moving each letter of y past the larger letters of x.
        let swaps: u32 = (0..r).filter(|&i| y >> i & 1 == 1).map(|i| (x >> (i + 1)).count_ones()).sum();
        vec![(index[&(x | y)], if swaps % 2 == 0 { 1 } else { -1 })]
    })
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exterior_algebras_have_polynomial_ext(r in 1usize..4, pi in 0usize..4) {
        let p = [2, 3, 5, 7][pi];
        let alg = exterior(r, p);
        prop_assert!(alg.check_associativity(None));
        let res = minimal_resolution(Arc::new(alg), 4);
        prop_assert_eq!(res.ranks(), expected_ranks(r as u64, 4));
        prop_assert!(res.check_composites().passed());
        prop_assert!(res.check_minimality().passed());
        let (_, differing) = products_commute(&res, 2);
        prop_assert_eq!(differing, 0);
    }

    #[test]
    fn dihedral_ext_has_binomial_ranks(m in 3u32..12, pi in 0usize..3) {
        let p = [2, 3, 5][pi];
        let res = minimal_resolution(nilcox(&format!("I2:{m}"), p), 5);
        prop_assert_eq!(res.ranks(), vec![1, 2, 3, 4, 5, 6]);
        prop_assert!(res.check_composites().passed());
    }
}

//! The acceptance criteria, each a list of checks with a time budget.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use nilcoxeter::coxeter::{CoxeterDiagram, CoxeterGroup};
use nilcoxeter::extengine::{minimal_resolution, FiniteDimAlgebra, MinimalResolution};
use nilcoxeter::koszul::{nilcactus_relations, perpendicular, x_graded_ranks, z_relation_space, Orientation, Pairing};
use nilcoxeter::linalg::Scalars;
use nilcoxeter::nilcox::{interval_power_word, interval_word, NilCoxElement};
use nilcoxeter::pirep::{image_dimension, rep_recursive, verify_homomorphism, windows_detect};
use nilcoxeter::resolution::{
    check_cubes, check_exactness, check_internal_degree, check_minimality, check_relations, check_squares,
    yoneda_structure_constants, CheckResult, Relation, Resolution,
};
use nilcoxeter::zring::{enumerate_canonical, ZElement, ZGen, ZRing};

use crate::report::Verdict;

/// Stands in for characteristic zero where ranks are computed modulo a prime.
pub const LARGE_PRIME: u64 = 1_000_003;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest number of letters any check may use.
    pub max_n: usize,
    /// Replaces every sweep over primes.
    pub prime: Option<u64>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { max_n: usize::MAX, prime: None, seed: 1 }
    }
}

impl SuiteConfig {
    fn primes(&self, default: &[u64]) -> Vec<u64> {
        self.prime.map_or_else(|| default.to_vec(), |p| vec![p])
    }

    fn upto(&self, n: usize) -> usize {
        n.min(self.max_n)
    }
}

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    pub budget: Duration,
    run: fn(&SuiteConfig) -> Vec<Verdict>,
}

pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub checks: Vec<Verdict>,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CriterionOutcome {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn passed(&self) -> bool {
        self.within_budget() && !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn checked(&self) -> usize {
        self.checks.iter().map(|c| c.checked).sum()
    }

    pub fn failure(&self) -> Option<String> {
        if let Some(c) = self.checks.iter().find(|c| !c.passed) {
            return Some(match &c.detail {
                Some(d) => format!("{}: {d}", c.name),
                None => c.name.clone(),
            });
        }
        if self.checks.is_empty() {
            return Some("no checks ran".into());
        }
        (!self.within_budget()).then(|| {
            format!("took {:.1} s, over the {} s budget", self.elapsed.as_secs_f64(), self.budget.as_secs_f64())
        })
    }

    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed(),
            "budget_seconds": self.budget.as_secs_f64(),
            "checks": self.checks,
        });
        if timings {
            v["elapsed_seconds"] = json!(self.elapsed.as_secs_f64());
        }
        v
    }
}

pub fn run_criterion(c: &Criterion, cfg: &SuiteConfig) -> CriterionOutcome {
    let start = Instant::now();
    let checks = (c.run)(cfg);
    CriterionOutcome { id: c.id, name: c.name, checks, elapsed: start.elapsed(), budget: c.budget }
}

pub fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion { id: 1, name: "Loewy layers are the Mahonian numbers", budget: secs(1), run: loewy_layers },
        Criterion { id: 2, name: "worked canonical form example", budget: secs(1), run: worked_example },
        Criterion { id: 3, name: "Poincare series of the Ext ring", budget: secs(120), run: poincare_series },
        Criterion { id: 4, name: "explicit complex squares and anticommutation", budget: secs(120), run: complex_validity },
        Criterion { id: 5, name: "explicit complex exactness and minimality", budget: secs(120), run: exactness },
        Criterion { id: 6, name: "type A Ext relations from Yoneda products", budget: secs(180), run: ring_structure },
        Criterion { id: 7, name: "Ext ranks and products for other types", budget: secs(300), run: other_types },
        Criterion { id: 8, name: "matrix representations and PI degree", budget: secs(60), run: pi_degree },
        Criterion { id: 9, name: "quadratic duality with the signed nilcactus algebra", budget: secs(120), run: koszul_duality },
        Criterion { id: 10, name: "trace, interval and witness properties", budget: secs(120), run: properties },
    ]
}

fn verdict(c: CheckResult) -> Verdict {
    let passed = c.passed() && c.checked > 0;
    let detail = match (&c.first_failure, c.checked) {
        (Some(f), _) => Some(format!("{} failures, first: {f}", c.failures)),
        (None, 0) => Some("nothing checked".into()),
        _ => None,
    };
    Verdict::new(c.name, passed, c.checked, detail)
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = crate::run(std::iter::once("nilcox").chain(args.iter().copied()));
    (out.code, out.stdout)
}

/// Binomial coefficients from Pascal's triangle.
fn pascal(a: usize, b: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..a {
        let mut next = vec![1u64; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row.get(b).copied().unwrap_or(0)
}

/// Permutations of 0..k counted by number of inversions.
fn mahonian_by_enumeration(k: usize) -> Vec<u64> {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut counts = vec![0u64; k * k.saturating_sub(1) / 2 + 1];
    loop {
        let inv = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        counts[inv] += 1;
        let Some(i) = (1..k).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| perm[j] > perm[i - 1]).expect("successor exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    counts
}

fn loewy_layers(cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut rows = CheckResult::new("loewy output equals inversion counts of S_k, k = 2..8");
    for k in 2..=cfg.upto(8) {
        let expected: Vec<String> = mahonian_by_enumeration(k).iter().map(|c| c.to_string()).collect();
        let (code, out) = cli(&["loewy", "--n", &k.to_string()]);
        rows.record(code == 0 && out == format!("{}\n", expected.join(" ")), || format!("k={k}: {out:?}"));
    }
    let mut known = CheckResult::new("loewy rows 4 and 6 match the known Mahonian rows");
    let (_, row4) = cli(&["loewy", "--n", "4"]);
    known.record(row4 == "1 3 5 6 5 3 1\n", || format!("row 4: {row4:?}"));
    if cfg.max_n >= 6 {
        let (_, row6) = cli(&["loewy", "--n", "6"]);
        known.record(row6.starts_with("1 5 14 29 49 71 90 101 "), || format!("row 6: {row6:?}"));
    }
    vec![verdict(rows), verdict(known)]
}

const WORKED_CANONICAL: &str = "[5,6][2,4][5,7]^2[1,4][5,8][1,9]";

const WORKED_STEPS: [&str; 6] = [
    "[1,9][5,4][8,6][5,3]^2[9,6][5,2]",
    "[1,9][5,2][2,3][8,6][2,4]^2[9,6]",
    "[1,9][5,2][9,6][2,3][7,9][2,4]^2",
    "[1,9][5,2][9,6][2,4][4,3][7,9][2,4]",
    "[1,9][5,2][9,6][2,4]^2[2,3][7,9]",
    "[1,9][5,2][9,6][2,4]^2[7,9][2,3]",
];

fn worked_example(_: &SuiteConfig) -> Vec<Verdict> {
    let mut reversal = CheckResult::new("reversal steps of the nine-letter example, byte exact");
    let (code, out) = cli(&["zring", "normalize", WORKED_CANONICAL, "--n", "9", "--signless"]);
    let mut expected = format!("canonical {WORKED_CANONICAL}\n");
    for (k, s) in WORKED_STEPS.iter().enumerate() {
        expected.push_str(&format!("step {} {s}\n", k + 1));
    }
    expected.push_str(&format!("reversed {}\n", WORKED_STEPS[5]));
    reversal.record(code == 0 && out == expected, || format!("got {out:?}"));
    let mut encode = CheckResult::new("f(-2,-3,-3,-1,-5,-4,-2,-1) gives [5,6][2,4][5,7]^2[1,4][5,8][1,9]");
    let (code, out) = cli(&["zring", "encode", "-2,-3,-3,-1,-5,-4,-2,-1"]);
    encode.record(code == 0 && out == format!("{WORKED_CANONICAL}\n"), || format!("got {out:?}"));
    vec![verdict(reversal), verdict(encode)]
}

fn nilcox_algebra(diagram: CoxeterDiagram, p: u64) -> Arc<FiniteDimAlgebra> {
    Arc::new(FiniteDimAlgebra::nilcoxeter(diagram, p, 10_000).expect("finite type"))
}

fn poincare_series(cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut ranks = CheckResult::new("canonical monomials and cells number binomial(d+n-2, n-2), n <= 6, d <= 8");
    for n in 2..=cfg.upto(6) {
        let res = Resolution::new(n).expect("n in range");
        for d in 0..=8 {
            let b = pascal(d + n - 2, n - 2);
            ranks.record(enumerate_canonical(n, d).len() as u64 == b, || format!("monomials n={n} d={d}"));
            ranks.record(res.cells(d as u32).len() as u64 == b, || format!("cells n={n} d={d}"));
        }
    }
    let mut ext = CheckResult::new("generic engine bigraded Ext ranks equal the explicit complex, n <= 5, d <= 6");
    for n in 2..=cfg.upto(5) {
        let res = Resolution::new(n).expect("n in range");
        for p in cfg.primes(&[2, 3]) {
            let diagram = CoxeterDiagram::a(n - 1).expect("rank in range");
            let generic = minimal_resolution(nilcox_algebra(diagram, p), 6);
            let bigraded = generic.bigraded_ranks();
            for d in 0..=6u32 {
                let mut cells: BTreeMap<u32, usize> = BTreeMap::new();
                for t in res.cells(d) {
                    *cells.entry(res.cell_internal_degree(&t) as u32).or_insert(0) += 1;
                }
                ext.record(bigraded[d as usize] == cells, || format!("n={n} p={p} d={d}"));
            }
        }
    }
    vec![verdict(ranks), verdict(ext)]
}

fn complex_validity(cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut out = Vec::new();
    for n in 2..=cfg.upto(5) {
        let res = Resolution::new(n).expect("n in range");
        for mut c in [check_squares(&res, 6), check_cubes(&res, 6, None)] {
            c.name = format!("{} (n={n}, degree <= 6, exhaustive)", c.name);
            out.push(verdict(c));
        }
    }
    out
}

fn exactness(cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut out = Vec::new();
    for n in 2..=cfg.upto(5) {
        let res = Resolution::new(n).expect("n in range");
        let (mut exact, how) = if n <= 4 {
            (check_exactness(&res, 6, None), "exhaustive")
        } else {
            (check_exactness(&res, 6, Some((1000, cfg.seed))), "1000 samples")
        };
        exact.name = format!("{} (n={n}, degree <= 6, {how})", exact.name);
        out.push(verdict(exact));
        for mut c in [check_minimality(&res, 6), check_internal_degree(&res, 6)] {
            c.name = format!("{} (n={n}, degree <= 6, exhaustive)", c.name);
            out.push(verdict(c));
        }
    }
    out
}

/// Names the generators in order of degree, then of first letter.
fn named(names: &str, n: usize) -> BTreeMap<char, (usize, usize)> {
    let mut gens = ZRing::signless(n).expect("n in range").generators();
    gens.sort_by_key(|g| (g.degree(), g.lo()));
    names.chars().zip(gens.iter().map(|g| (g.lo(), g.hi()))).collect()
}

/// Reads `xz+zy`, `uz-zw` or `uv` as a relation on named generators.
fn relations(names: &BTreeMap<char, (usize, usize)>, list: &[&str]) -> Vec<Relation> {
    list.iter()
        .map(|r| {
            let chars: Vec<char> = r.chars().collect();
            let mut terms = Vec::new();
            let mut sign = 1;
            let mut i = 0;
            while i < chars.len() {
                match chars[i] {
                    '+' => sign = 1,
                    '-' => sign = -1,
                    a => {
                        terms.push((sign, names[&a], names[&chars[i + 1]]));
                        i += 1;
                    }
                }
                i += 1;
            }
            Relation::new(&terms)
        })
        .collect()
}

const THREE_LETTER_RELATIONS: &[&str] = &["xy", "yx", "xz+zy", "yz+zx"];

const FOUR_LETTER_RELATIONS: &[&str] = &[
    "uv", "vu", "vw", "wv", "uw+wu", "ux+xv", "vx+xu", "vy+yw", "wy+yv", "uy", "yu", "wx", "xw", "uz-zw", "vz-zv",
    "wz-zu", "xy", "yx", "xz-zy", "yz-zx",
];

fn ring_structure(cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut out = Vec::new();
    let cases = [(3, "xyz", THREE_LETTER_RELATIONS), (4, "uvwxyz", FOUR_LETTER_RELATIONS)];
    for (n, names, list) in cases {
        if n > cfg.max_n {
            continue;
        }
        let res = Resolution::new(n).expect("n in range");
        let consts = yoneda_structure_constants(&res, 2 * (n - 1)).expect("lifts exist");
        let rels = relations(&named(names, n), list);
        let mut c = CheckResult::new(&format!("{n}-letter relation list is complete up to rescaling"));
        for p in cfg.primes(&[3, 5]) {
            let report = check_relations(&consts, &rels, p);
            c.record(report.complete() && report.kernel_dim == list.len(), || {
                format!("p={p}: kernel {} relations {}", report.kernel_dim, report.relations_rank)
            });
        }
        out.push(verdict(c));
    }
    out
}

fn products_commute(res: &MinimalResolution, cap: usize) -> (usize, usize) {
    let all = res.products(cap).expect("products lift");
    let by_pair: HashMap<_, _> = all.iter().map(|x| ((x.left, x.right), &x.product)).collect();
    let differing = all.iter().filter(|x| by_pair[&(x.right, x.left)] != &x.product).count();
    (all.len(), differing)
}

fn other_types(cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut ranks = CheckResult::new("Ext ranks are binomial(d+r-1, r-1) for B2 G2 I2(5) I2(7) B3 H3 D4");
    let types = ["B:2", "I2:6", "I2:5", "I2:7", "B:3", "H:3", "D:4"];
    for tag in types {
        let diagram = CoxeterDiagram::parse(tag).expect("valid tag");
        let r = diagram.rank();
        if r + 1 > cfg.max_n {
            continue;
        }
        let steps = if r == 2 { 6 } else { 4 };
        for p in cfg.primes(&[2, 3]) {
            let res = minimal_resolution(nilcox_algebra(diagram.clone(), p), steps);
            let expected: Vec<usize> = (0..=steps).map(|d| pascal(d + r - 1, r - 1) as usize).collect();
            ranks.record(res.ranks() == expected, || format!("{tag} p={p}: {:?}", res.ranks()));
            ranks.record(res.check_minimality().passed(), || format!("{tag} p={p} not minimal"));
        }
    }
    // Generators sit in homological degrees 1 and 2, so their products reach 3.
    let mut b2 = CheckResult::new("B2 products of classes with degrees summing to <= 3 commute at p = 2");
    let res = minimal_resolution(nilcox_algebra(CoxeterDiagram::b(2).expect("B2"), 2), 3);
    let (checked, differing) = products_commute(&res, 3);
    b2.record(checked > 0 && differing == 0, || format!("{differing} of {checked} products differ"));
    let mut a2 = CheckResult::new("A2 has a noncommuting pair with degrees summing to <= 3");
    for p in cfg.primes(&[2, 3, 5, 7]) {
        let res = minimal_resolution(nilcox_algebra(CoxeterDiagram::a(2).expect("A2"), p), 3);
        let (_, differing) = products_commute(&res, 3);
        a2.record(differing > 0, || format!("p={p}: all products commute"));
    }
    vec![verdict(ranks), verdict(b2), verdict(a2)]
}

fn pi_degree(cfg: &SuiteConfig) -> Vec<Verdict> {
    let primes = [2, 3, 5, 7, 11];
    let mut dims = CheckResult::new("image dimensions are 4, 16, 64 for n = 3, 4, 5");
    let mut hom = CheckResult::new("defining relations hold at distinct prime parameters");
    for n in 3..=cfg.upto(5) {
        let size = 1usize << (n - 2);
        let ones = rep_recursive(n, &vec![1; n - 1]).expect("parameters fit");
        for p in cfg.primes(&[2, 3, 5]) {
            let d = image_dimension(&ones, p);
            dims.record(d == size * size, || format!("n={n} p={p}: {d}"));
        }
        let rep = rep_recursive(n, &primes[..n - 1]).expect("parameters fit");
        let report = verify_homomorphism(&rep);
        hom.record(report.passed(), || format!("n={n}: {}", report.failures[0]));
    }
    let mut windows = CheckResult::new("window quotients detect Z without the top generator, degree >= -5");
    for n in 2..=cfg.upto(5) {
        for d in 0..=5 {
            windows.record(windows_detect(n, d).unwrap_or(false), || format!("n={n} d={d}"));
        }
    }
    vec![verdict(dims), verdict(hom), verdict(windows)]
}

fn koszul_duality(cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut scalars = vec![Scalars::Rational];
    scalars.extend(cfg.primes(&[2, 3, 5]).into_iter().map(Scalars::Prime));
    let mut dual = CheckResult::new("perpendicular of Z relations is the signed nilcactus relation space (dual orientation)");
    for n in 2..=cfg.upto(5) {
        let z = z_relation_space(n).expect("n in range");
        let x = nilcactus_relations(n, Orientation::Dual).expect("n in range");
        for &s in &scalars {
            dual.record(perpendicular(&z, Pairing::Graded, s).same_span(&x, s), || format!("n={n} over {s}"));
        }
    }
    let mut ranks = CheckResult::new("X ranks agree between normal words and linear algebra, n <= 4, length <= 4");
    let mut primes = cfg.primes(&[2, 3]);
    if cfg.prime.is_none() {
        primes.push(LARGE_PRIME);
    }
    for n in 2..=cfg.upto(4) {
        for &p in &primes {
            match x_graded_ranks(n, 4, Orientation::Dual, p) {
                Ok(r) => ranks.record(r.agree(), || format!("n={n} p={p}: {r:?}")),
                Err(e) => ranks.record(false, || format!("n={n} p={p}: {e}")),
            }
        }
    }
    vec![verdict(dual), verdict(ranks)]
}

/// Tr(ab) = Tr(b psi(a)) = Tr(psi(b) a) on every pair of basis elements.
pub fn trace_symmetry(basis: &[NilCoxElement], label: &str, c: &mut CheckResult) {
    for (i, a) in basis.iter().enumerate() {
        let pa = a.psi();
        for (j, b) in basis.iter().enumerate() {
            let t = a.mul(b).expect("same group").trace();
            let ok = t == b.mul(&pa).expect("same group").trace() && t == b.psi().mul(a).expect("same group").trace();
            c.record(ok, || format!("{label} basis pair {i}, {j}"));
        }
    }
}

fn sym(n: usize) -> Arc<CoxeterGroup> {
    Arc::new(CoxeterGroup::symmetric(n).expect("n in range"))
}

fn y(g: &Arc<CoxeterGroup>, parts: &[Vec<usize>]) -> NilCoxElement {
    NilCoxElement::from_word(g, &parts.concat()).expect("letters in range")
}

fn interval_products(n: usize, c: &mut CheckResult) {
    let g = sym(n);
    let int = interval_word;
    for i in 1..=n {
        for j in i + 1..=n {
            for ip in i..=n {
                for jp in ip + 1..=n {
                    let rhs = if j == ip {
                        y(&g, &[int(i, jp)])
                    } else if j < ip {
                        y(&g, &[int(i, j), int(ip, jp)])
                    } else if j > jp {
                        y(&g, &[int(i, j), int(ip + 1, jp + 1)])
                    } else {
                        NilCoxElement::zero(&g)
                    };
                    c.record(y(&g, &[int(ip, jp), int(i, j)]) == rhs, || format!("n={n} [{ip},{jp}][{i},{j}]"));
                }
            }
        }
    }
}

fn interval_times_powers(n: usize, c: &mut CheckResult) {
    let g = sym(n);
    let (int, pw) = (interval_word, interval_power_word);
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=j - i {
                for ip in i..=n {
                    for jp in ip + 1..=n {
                        let rhs = if j >= ip && ip + k > j {
                            y(&g, &[pw(i, ip - 1, ip + k - j - 1), int(ip + k + i - j - 1, jp), pw(ip + k + i - j, j, j - ip)])
                        } else if j < ip {
                            y(&g, &[pw(i, j, k), int(ip, jp)])
                        } else if j + 1 - k > jp {
                            y(&g, &[pw(i, j, k), int(ip + k, jp + k)])
                        } else {
                            NilCoxElement::zero(&g)
                        };
                        let lhs = y(&g, &[int(ip, jp), pw(i, j, k)]);
                        c.record(lhs == rhs, || format!("n={n} [{ip},{jp}][{i},{j}];{k}"));
                    }
                }
            }
        }
    }
}

fn power_commutations(n: usize, c: &mut CheckResult) {
    let g = sym(n);
    let pw = interval_power_word;
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 0..=j - i {
                for ip in i..=n {
                    for jp in ip + 1..=n {
                        if j < jp + k || jp + k > n {
                            continue;
                        }
                        for kp in 0..=jp - ip {
                            let lhs = y(&g, &[pw(ip, jp, kp), pw(i, j, k)]);
                            let rhs = y(&g, &[pw(i, j, k), pw(ip + k, jp + k, kp)]);
                            c.record(lhs == rhs, || format!("n={n} [{ip},{jp}];{kp} past [{i},{j}];{k}"));
                        }
                    }
                }
                for kp in 1..k {
                    let lhs = y(&g, &[pw(i, j, k), pw(i, i + k - 1, kp)]);
                    let rhs = y(&g, &[pw(i, j, kp), pw(i + kp, j, k - kp)]);
                    c.record(lhs == rhs, || format!("n={n} [{i},{j}];{k} split at {kp}"));
                }
            }
        }
    }
}

fn canonical_elements(ring: &ZRing, max_degree: usize) -> Vec<ZElement> {
    (0..=max_degree)
        .flat_map(|d| enumerate_canonical(ring.n(), d))
        .map(|f| ring.from_monomial(&ring.normalize(&f).expect("letters in range").expect("canonical words are nonzero")))
        .collect()
}

fn properties(cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut trace = CheckResult::new("trace symmetry Tr(ab) = Tr(b psi(a)) for |W| <= 250");
    for tag in ["A:1", "A:2", "A:3", "A:4", "B:2", "B:3", "D:4", "I2:5", "I2:6", "I2:8", "H:3"] {
        let g = Arc::new(CoxeterGroup::new(CoxeterDiagram::parse(tag).expect("valid tag")).expect("finite"));
        if g.rank() + 1 > cfg.max_n || g.order() > 250 {
            continue;
        }
        let basis: Vec<NilCoxElement> = g.elements().map(|w| NilCoxElement::basis(&g, w)).collect();
        trace_symmetry(&basis, tag, &mut trace);
    }
    let mut intervals = CheckResult::new("interval products, interval times power, power commutations, n <= 6");
    for n in 2..=cfg.upto(6) {
        interval_products(n, &mut intervals);
        interval_times_powers(n, &mut intervals);
        power_commutations(n, &mut intervals);
    }
    let mut semiprime = CheckResult::new("m star(m) m is nonzero for canonical m, n <= 5, degree >= -5");
    let mut nonprime = CheckResult::new("z[1,2]z[n-1,n] m z[2,n-1] = 0 for canonical m, 4 <= n <= 5, degree >= -5");
    for n in 2..=cfg.upto(5) {
        let ring = ZRing::signed(n).expect("n in range");
        let elements = canonical_elements(&ring, 5);
        for a in &elements {
            let m = a.terms().next().expect("one term");
            let trip = a.mul(&a.star()).and_then(|x| x.mul(a)).expect("same ring");
            let tripled: Vec<ZGen> = m.factors.iter().flat_map(|&g| [g, g, g]).collect();
            let ok = trip.len() == 1 && trip.terms().next().is_some_and(|t| t.factors == tripled);
            semiprime.record(ok, || format!("n={n} m={m}"));
        }
        if n >= 4 {
            let left = ring.word(&[(1, 2), (n - 1, n)]).expect("letters in range");
            let right = ring.gen(2, n - 1).expect("letters in range");
            nonprime.record(!left.is_zero() && !right.is_zero(), || format!("n={n}: a factor vanishes"));
            for m in &elements {
                let p = left.mul(m).and_then(|x| x.mul(&right)).expect("same ring");
                nonprime.record(p.is_zero(), || format!("n={n} m={m}"));
            }
        }
    }
    let mut out = vec![verdict(trace), verdict(intervals), verdict(semiprime)];
    if cfg.max_n >= 4 {
        out.push(verdict(nonprime));
    }
    out
}

//! Exhaustive and sampled verification of the complex.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Cell, ChainElement, Resolution};
use crate::coxeter::CoxeterElement;

/// Outcome of one verification pass.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn new(name: &str) -> Self {
        Self { name: name.to_string(), checked: 0, failures: 0, first_failure: None }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn cells_up_to(res: &Resolution, max_degree: u32) -> Vec<Cell> {
    (0..=max_degree).flat_map(|d| res.cells(d)).collect()
}

fn monomials(res: &Resolution, max_degree: u32) -> Vec<(Cell, CoxeterElement)> {
    let mut out = Vec::new();
    for t in cells_up_to(res, max_degree) {
        for w in res.group().elements() {
            out.push((t.clone(), w));
        }
    }
    out
}

fn sample(
    all: Vec<(Cell, CoxeterElement)>,
    samples: Option<(usize, u64)>,
) -> Vec<(Cell, CoxeterElement)> {
    match samples {
        Some((count, seed)) if count < all.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| all[rng.gen_range(0..all.len())].clone()).collect()
        }
        _ => all,
    }
}

/// d_k d_k = 0, d_k d_k' + d_k' d_k = 0 and the unsigned maps commute, on every
/// monomial of total degree at most `max_degree`.
pub fn check_squares(res: &Resolution, max_degree: u32) -> CheckResult {
    let mut r = CheckResult::new("squares");
    let n = res.n();
    for (t, w) in monomials(res, max_degree) {
        let e = ChainElement::monomial(t.clone(), w, 1);
        let dk: Vec<ChainElement> = (1..n).map(|k| res.d(k, &e)).collect();
        let tk: Vec<ChainElement> = (1..n).map(|k| res.tilde_d(k, &e)).collect();
        for k in 1..n {
            for k2 in k..n {
                if k == k2 {
                    let sq = res.d(k, &dk[k - 1]);
                    r.record(sq.is_zero(), || format!("d_{k}^2 on {t:?}, w={}", w.id()));
                } else {
                    let anti = res.d(k, &dk[k2 - 1]).add(&res.d(k2, &dk[k - 1]));
                    r.record(anti.is_zero(), || format!("d_{k} d_{k2} on {t:?}, w={}", w.id()));
                    let comm = res.tilde_d(k, &tk[k2 - 1]).sub(&res.tilde_d(k2, &tk[k - 1]));
                    r.record(comm.is_zero(), || format!("commute {k},{k2} on {t:?}, w={}", w.id()));
                }
            }
        }
    }
    r
}

/// Every coefficient of every d_k has positive length.
pub fn check_minimality(res: &Resolution, max_degree: u32) -> CheckResult {
    let mut r = CheckResult::new("minimality");
    for t in cells_up_to(res, max_degree + 1) {
        for k in 1..res.n() {
            if let Some(s) = res.step(&t, k) {
                let len = res.group().length(s.coefficient);
                r.record(len > 0, || format!("unit entry in d_{k} on {t:?}"));
            }
        }
    }
    r
}

/// ℓ(coefficient) equals the drop in cell internal degree.
pub fn check_internal_degree(res: &Resolution, max_degree: u32) -> CheckResult {
    let mut r = CheckResult::new("internal degree");
    for t in cells_up_to(res, max_degree) {
        for k in 1..res.n() {
            if let Some(s) = res.step(&t, k) {
                let len = res.group().length(s.coefficient) as usize;
                let drop = res.cell_internal_degree(&t) as isize
                    - res.cell_internal_degree(&s.target) as isize;
                r.record(len as isize == drop, || format!("d_{k} on {t:?}: {len} vs {drop}"));
            }
        }
    }
    r
}

/// dh + hd = 1 and hh = 0 away from the augmentation generator.
///
/// With `samples = Some((count, seed))` only that many monomials are tested.
pub fn check_exactness(
    res: &Resolution,
    max_degree: u32,
    samples: Option<(usize, u64)>,
) -> CheckResult {
    let mut r = CheckResult::new("exactness");
    let id = res.group().identity();
    let zero_cell = vec![0; res.n() - 1];
    let all: Vec<_> = monomials(res, max_degree)
        .into_iter()
        .filter(|(t, w)| !(*w == id && *t == zero_cell))
        .collect();
    for (t, w) in sample(all, samples) {
        let e = ChainElement::monomial(t.clone(), w, 1);
        let h = res.homotopy(&e);
        let dh = res.total_d(&h);
        let hd = res.homotopy(&res.total_d(&e));
        r.record(dh.add(&hd) == e, || format!("dh+hd on {t:?}, w={}", w.id()));
        r.record(res.homotopy(&h).is_zero(), || format!("hh on {t:?}, w={}", w.id()));
    }
    r
}

/// The cube structure of the unsigned maps: every monomial other than the
/// augmentation generator is a source or a target, two nonzero maps compose
/// to a nonzero map, and two preimages share a common preimage.
pub fn check_cubes(res: &Resolution, max_degree: u32, samples: Option<(usize, u64)>) -> CheckResult {
    let mut r = CheckResult::new("cubes");
    let g = res.group();
    let id = g.identity();
    let n = res.n();
    let zero_cell = vec![0; n - 1];
    let all: Vec<_> = monomials(res, max_degree)
        .into_iter()
        .filter(|(t, w)| !(*w == id && *t == zero_cell))
        .collect();
    let unsigned_pre = |t: &[u32], w: CoxeterElement, m: usize| {
        res.preimage(t, w, m).map(|(c, w1, _)| ChainElement::monomial(c, w1, 1))
    };
    for (t, w) in sample(all, samples) {
        let e = ChainElement::monomial(t.clone(), w, 1);
        r.record(!res.active_indices(&t, w).is_empty(), || format!("isolated {t:?}, w={}", w.id()));
        for i in 1..n {
            for j in i + 1..n {
                let (di, dj) = (res.tilde_d(i, &e), res.tilde_d(j, &e));
                if !di.is_zero() && !dj.is_zero() {
                    r.record(!res.tilde_d(j, &di).is_zero(), || {
                        format!("d_{i} d_{j} vanishes on {t:?}, w={}", w.id())
                    });
                }
                if let (Some(pi), Some(pj)) = (unsigned_pre(&t, w, i), unsigned_pre(&t, w, j)) {
                    let (ci, wi, _) = pi.terms().next().map(|(c, w, v)| (c.clone(), w, v)).expect("monomial");
                    let joint = unsigned_pre(&ci, wi, j);
                    let ok = joint.is_some_and(|q| res.tilde_d(i, &q) == pj);
                    r.record(ok, || format!("no joint preimage {i},{j} of {t:?}, w={}", w.id()));
                }
            }
        }
    }
    r
}

//! Minimal free resolutions of the trivial module, built one internal degree
//! at a time, and Yoneda products by lifting cocycles to chain maps.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::{collect_sparse, ExtError, FiniteDimAlgebra};
use crate::linalg::{kernel, row_reduce, Echelon};
use crate::resolution::CheckResult;

/// One free module F_s = A^{rank} with the images of its generators in F_{s-1}.
///
/// Vectors of F_s are indexed by `generator * dim + basis element`.
#[derive(Clone, Debug, Serialize)]
pub struct ResolutionStep {
    /// Internal degree of each generator.
    pub degrees: Vec<u32>,
    /// Bitmask of algebra generators each generator's boundary involves.
    pub supports: Vec<u32>,
    /// Sparse image of each generator in F_{s-1}; empty for F_0.
    pub boundary: Vec<Vec<(usize, u64)>>,
}

impl ResolutionStep {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
}

/// A minimal resolution F_steps -> ... -> F_0 -> k.
#[derive(Clone, Debug)]
pub struct MinimalResolution {
    algebra: Arc<FiniteDimAlgebra>,
    steps: Vec<ResolutionStep>,
}

/// Slice of a free module in one internal degree, as global indices.
fn slice(alg: &FiniteDimAlgebra, step: &ResolutionStep, m: u32) -> Vec<usize> {
    let dim = alg.dim();
    let mut out = Vec::new();
    for (j, &g) in step.degrees.iter().enumerate() {
        if m >= g {
            out.extend(alg.basis_in_degree(m - g).iter().map(|&b| j * dim + b));
        }
    }
    out
}

/// Computes F_0, ..., F_steps.
pub fn minimal_resolution(alg: Arc<FiniteDimAlgebra>, steps: usize) -> MinimalResolution {
    let mut res = MinimalResolution {
        steps: vec![ResolutionStep { degrees: vec![0], supports: vec![0], boundary: vec![vec![]] }],
        algebra: alg,
    };
    for _ in 0..steps {
        res.extend();
    }
    res
}

/// Ranks of F_0, ..., F_steps, which are the dimensions of Ext^s(k, k).
pub fn ext_ranks(alg: Arc<FiniteDimAlgebra>, steps: usize) -> Vec<usize> {
    minimal_resolution(alg, steps).ranks()
}

impl MinimalResolution {
    pub fn algebra(&self) -> &FiniteDimAlgebra {
        &self.algebra
    }

    /// Number of computed steps beyond F_0.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn step(&self, s: usize) -> &ResolutionStep {
        &self.steps[s]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.steps.iter().map(ResolutionStep::rank).collect()
    }

    /// Generator counts by internal degree for each homological degree.
    pub fn bigraded_ranks(&self) -> Vec<BTreeMap<u32, usize>> {
        self.steps
            .iter()
            .map(|st| {
                let mut m = BTreeMap::new();
                for &d in &st.degrees {
                    *m.entry(d).or_insert(0) += 1;
                }
                m
            })
            .collect()
    }

    /// d_s on the basis vector `idx` of F_s. For s = 0 this is the
    /// augmentation, landing in the one-dimensional module k.
    fn d_basis(&self, s: usize, idx: usize) -> Vec<(usize, u64)> {
        let alg = &self.algebra;
        let dim = alg.dim();
        let (j, b) = (idx / dim, idx % dim);
        if s == 0 {
            return if b == alg.unit() { vec![(0, 1)] } else { vec![] };
        }
        alg.left_mul_sparse(b, &self.steps[s].boundary[j])
    }

    /// d_s on a sparse vector of F_s.
    pub fn apply_d(&self, s: usize, v: &[(usize, u64)]) -> Vec<(usize, u64)> {
        let p = self.algebra.p();
        let mut out = Vec::new();
        for &(idx, c) in v {
            out.extend(self.d_basis(s, idx).into_iter().map(|(i, u)| (i, u * c % p)));
        }
        collect_sparse(out, p)
    }

    fn target_slice(&self, s: usize, m: u32) -> Vec<usize> {
        if s == 0 {
            if m == 0 {
                vec![0]
            } else {
                vec![]
            }
        } else {
            slice(&self.algebra, &self.steps[s - 1], m)
        }
    }

    /// Matrix of d_s from slice m of F_s (columns) to slice m of F_{s-1} (rows).
    fn slice_matrix(&self, s: usize, m: u32, cols: &[usize]) -> (Vec<usize>, Vec<Vec<u64>>) {
        let rows = self.target_slice(s, m);
        let index: HashMap<usize, usize> = rows.iter().enumerate().map(|(r, &i)| (i, r)).collect();
        let mut mat = vec![vec![0u64; cols.len()]; rows.len()];
        for (c, &idx) in cols.iter().enumerate() {
            for (i, v) in self.d_basis(s, idx) {
                mat[index[&i]][c] = v;
            }
        }
        (rows, mat)
    }

    fn extend(&mut self) {
        let s = self.steps.len() - 1;
        let alg = self.algebra.clone();
        let p = alg.p();
        let field = *alg.field();
        let dim = alg.dim();
        let step = &self.steps[s];
        let lo = *step.degrees.iter().min().expect("nonempty step");
        let hi = step.degrees.iter().max().expect("nonempty step") + alg.top_degree();
        let multipliers = alg.radical_multipliers();
        let letters = alg.letters();
        let mut masks: Vec<u32> = (0..1u32 << letters).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));

        let mut new = ResolutionStep { degrees: vec![], supports: vec![], boundary: vec![] };
        // Kernel bases as sparse global vectors, by internal degree.
        let mut kernels: HashMap<u32, Vec<Vec<(usize, u64)>>> = HashMap::new();
        for m in lo..=hi {
            let cols = slice(&alg, step, m);
            if cols.is_empty() {
                continue;
            }
            let col_of: HashMap<usize, usize> = cols.iter().enumerate().map(|(c, &i)| (i, c)).collect();
            let (_, mat) = self.slice_matrix(s, m, &cols);

            // Radical times the lower kernels, in slice coordinates.
            let mut echelon = Echelon::new(p);
            for &a in &multipliers {
                let da = alg.degree(a);
                let Some(lower) = m.checked_sub(da).and_then(|k| kernels.get(&k)) else {
                    continue;
                };
                for x in lower {
                    let mut row = vec![0u64; cols.len()];
                    for (i, v) in alg.left_mul_sparse(a, x) {
                        row[col_of[&i]] = v;
                    }
                    echelon.insert(row);
                }
            }

            let support_of = |idx: usize| step.supports[idx / dim] | alg.support(idx % dim);
            let full = kernel(&field, &mat, cols.len());
            if full.len() > echelon.len() {
                let candidates: Vec<(u32, Vec<Vec<u64>>)> = masks
                    .iter()
                    .map(|&mask| {
                        let within: Vec<usize> =
                            (0..cols.len()).filter(|&c| support_of(cols[c]) & !mask == 0).collect();
                        let sub: Vec<Vec<u64>> =
                            mat.iter().map(|r| within.iter().map(|&c| r[c]).collect()).collect();
                        let vecs = kernel(&field, &sub, within.len())
                            .into_iter()
                            .map(|k| {
                                let mut v = vec![0u64; cols.len()];
                                for (&c, x) in within.iter().zip(k) {
                                    v[c] = x;
                                }
                                v
                            })
                            .collect();
                        (mask, vecs)
                    })
                    .collect();
                for (mask, vecs) in candidates {
                    for v in vecs {
                        if echelon.insert(v.clone()) {
                            let sparse: Vec<(usize, u64)> =
                                v.iter().enumerate().filter(|e| *e.1 != 0).map(|(c, &x)| (cols[c], x)).collect();
                            let support = sparse.iter().fold(0, |acc, &(i, _)| acc | support_of(i));
                            debug_assert_eq!(support & !mask, 0);
                            new.degrees.push(m);
                            new.supports.push(support);
                            new.boundary.push(sparse);
                        }
                    }
                }
            }
            let sparse_kernel = full
                .into_iter()
                .map(|k| k.iter().enumerate().filter(|e| *e.1 != 0).map(|(c, &x)| (cols[c], x)).collect())
                .collect();
            kernels.insert(m, sparse_kernel);
        }
        self.steps.push(new);
    }

    /// d_{s-1} d_s = 0 on every generator of every computed step.
    pub fn check_composites(&self) -> CheckResult {
        let mut r = CheckResult::new("composites");
        for s in 1..self.steps.len() {
            for (j, b) in self.steps[s].boundary.iter().enumerate() {
                let ok = self.apply_d(s - 1, b).is_empty();
                r.record(ok, || format!("d d on generator {j} of F_{s}"));
            }
        }
        r
    }

    /// Every boundary entry has positive degree, so the resolution is minimal.
    pub fn check_minimality(&self) -> CheckResult {
        let alg = &self.algebra;
        let mut r = CheckResult::new("minimality");
        for s in 1..self.steps.len() {
            for (j, b) in self.steps[s].boundary.iter().enumerate() {
                let ok = !b.is_empty() && b.iter().all(|&(i, _)| alg.degree(i % alg.dim()) > 0);
                r.record(ok, || format!("unit entry in the boundary of generator {j} of F_{s}"));
            }
        }
        r
    }

    /// The dense matrix of d_s over F_p, rows indexed by F_s and columns by
    /// F_{s-1}, with entry (j·dim + b, i·dim + c) the coefficient of e_c ε_i in
    /// Y_b · d(ε_j).
    pub fn boundary_matrix(&self, s: usize) -> Vec<Vec<u64>> {
        let dim = self.algebra.dim();
        let target = if s == 0 { 1 } else { self.steps[s - 1].rank() * dim };
        (0..self.steps[s].rank() * dim)
            .map(|idx| {
                let mut row = vec![0u64; target];
                for (i, v) in self.d_basis(s, idx) {
                    row[i] = v;
                }
                row
            })
            .collect()
    }

    /// Yoneda product of the classes dual to generator `i` of F_a and
    /// generator `j` of F_b, as coefficients on the generators of F_{a+b}.
    pub fn yoneda_product(
        &self,
        (a, i): (usize, usize),
        (b, j): (usize, usize),
    ) -> Result<Vec<(usize, u64)>, ExtError> {
        if a + b > self.len() {
            return Err(ExtError::TooFewSteps { needed: a + b, have: self.len() });
        }
        let mut lift = ChainLift::new(b, j);
        self.evaluate(&mut lift, a, i)
    }

    fn evaluate(&self, lift: &mut ChainLift, a: usize, i: usize) -> Result<Vec<(usize, u64)>, ExtError> {
        let unit = self.algebra.unit();
        let dim = self.algebra.dim();
        let want = self.steps[a].degrees[i] + self.steps[lift.from].degrees[lift.generator];
        let mut out = Vec::new();
        for (k, &deg) in self.steps[a + lift.from].degrees.iter().enumerate() {
            if deg != want {
                continue;
            }
            let image = lift.image(self, a, k)?;
            if let Some(&(_, c)) = image.iter().find(|e| e.0 == i * dim + unit) {
                out.push((k, c));
            }
        }
        Ok(out)
    }

    /// Products of all pairs of Ext basis classes with homological degrees
    /// summing to at most `cap`.
    pub fn products(&self, cap: usize) -> Result<Vec<ExtProduct>, ExtError> {
        let cap = cap.min(self.len());
        let mut out = Vec::new();
        for b in 0..=cap {
            for j in 0..self.steps[b].rank() {
                let mut lift = ChainLift::new(b, j);
                for a in 0..=cap - b {
                    for i in 0..self.steps[a].rank() {
                        let product = self.evaluate(&mut lift, a, i)?;
                        out.push(ExtProduct { left: (a, i), right: (b, j), product });
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The product of two Ext basis classes, each given as (homological degree,
/// generator index), expanded on the generators of the sum degree.
#[derive(Clone, Debug, Serialize)]
pub struct ExtProduct {
    pub left: (usize, usize),
    pub right: (usize, usize),
    pub product: Vec<(usize, u64)>,
}

/// Solver for d_s x = y within one internal degree slice.
struct SliceSolver {
    cols: Vec<usize>,
    rows: HashMap<usize, usize>,
    pivots: Vec<usize>,
    transform: Vec<Vec<u64>>,
}

/// Chain maps F_{from+t} -> F_t lifting the class dual to one generator.
struct ChainLift {
    from: usize,
    generator: usize,
    memo: HashMap<(usize, usize), Vec<(usize, u64)>>,
    solvers: HashMap<(usize, u32), SliceSolver>,
}

impl ChainLift {
    fn new(from: usize, generator: usize) -> Self {
        Self { from, generator, memo: HashMap::new(), solvers: HashMap::new() }
    }

    /// The image of generator k of F_{from+t} in F_t.
    fn image(&mut self, res: &MinimalResolution, t: usize, k: usize) -> Result<Vec<(usize, u64)>, ExtError> {
        if let Some(v) = self.memo.get(&(t, k)) {
            return Ok(v.clone());
        }
        let alg = res.algebra.clone();
        let (p, dim) = (alg.p(), alg.dim());
        let out = if t == 0 {
            if k == self.generator {
                vec![(alg.unit(), 1)]
            } else {
                vec![]
            }
        } else {
            let src = self.from + t;
            let mut target = Vec::new();
            for &(idx, c) in &res.steps[src].boundary[k] {
                let lower = self.image(res, t - 1, idx / dim)?;
                target.extend(alg.left_mul_sparse(idx % dim, &lower).into_iter().map(|(i, v)| (i, v * c % p)));
            }
            let target = collect_sparse(target, p);
            let shift = res.steps[self.from].degrees[self.generator];
            let y = match res.steps[src].degrees[k].checked_sub(shift) {
                Some(m) => self.solve(res, t, m, &target),
                None => vec![],
            };
            if res.apply_d(t, &y) != target {
                return Err(ExtError::Lift(format!("generator {k} of F_{src}, t = {t}")));
            }
            y
        };
        self.memo.insert((t, k), out.clone());
        Ok(out)
    }

    fn solve(&mut self, res: &MinimalResolution, s: usize, m: u32, y: &[(usize, u64)]) -> Vec<(usize, u64)> {
        let field = *res.algebra.field();
        let p = field.p();
        let solver = self.solvers.entry((s, m)).or_insert_with(|| {
            let cols = slice(&res.algebra, &res.steps[s], m);
            let (rows, mat) = res.slice_matrix(s, m, &cols);
            let (nr, nc) = (rows.len(), cols.len());
            let mut aug: Vec<Vec<u64>> = mat
                .into_iter()
                .enumerate()
                .map(|(r, mut row)| {
                    row.extend((0..nr).map(|i| u64::from(i == r)));
                    row
                })
                .collect();
            let pivots: Vec<usize> = row_reduce(&field, &mut aug).into_iter().take_while(|&c| c < nc).collect();
            let transform = aug.iter().take(pivots.len()).map(|r| r[nc..].to_vec()).collect();
            let rows = rows.into_iter().enumerate().map(|(r, i)| (i, r)).collect();
            SliceSolver { cols, rows, pivots, transform }
        });
        let mut out = Vec::new();
        for (t, &pc) in solver.transform.iter().zip(&solver.pivots) {
            let mut x = 0u64;
            for &(i, v) in y {
                if let Some(&r) = solver.rows.get(&i) {
                    x = (x + t[r] * v) % p;
                }
            }
            if x != 0 {
                out.push((solver.cols[pc], x));
            }
        }
        collect_sparse(out, p)
    }
}

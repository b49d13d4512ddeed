//! Minimal resolutions and Ext rings of finite-dimensional local graded
//! algebras over F_p, computed by linear algebra one internal degree at a time.

mod presentation;
mod resolve;

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxeter::{CoxeterDiagram, CoxeterError, CoxeterGroup};
use crate::linalg::PrimeField;

pub use presentation::{presentation_table, Presentation, PresentationGenerator};
pub use resolve::{ext_ranks, minimal_resolution, ExtProduct, MinimalResolution, ResolutionStep};

#[derive(Debug, thiserror::Error)]
pub enum ExtError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("bad algebra: {0}")]
    BadAlgebra(String),
    #[error("unknown presentation tag {0:?}")]
    UnknownTag(String),
    #[error("need {needed} resolution steps, have {have}")]
    TooFewSteps { needed: usize, have: usize },
    #[error("chain map lifting failed at {0}")]
    Lift(String),
    #[error("no unique class for generator {0}")]
    Match(char),
}

/// A finite-dimensional graded algebra over F_p with a one-dimensional
/// degree-zero part spanned by the unit.
///
/// Basis elements carry a support: a bitmask of the algebra generators they
/// involve. It is only used to label resolution generators.
#[derive(Clone, Debug)]
pub struct FiniteDimAlgebra {
    field: PrimeField,
    labels: Vec<String>,
    degrees: Vec<u32>,
    supports: Vec<u32>,
    letters: usize,
    unit: usize,
    table: Vec<Vec<(usize, u64)>>,
    by_degree: Vec<Vec<usize>>,
    generated_in_degree_one: bool,
}

impl FiniteDimAlgebra {
    /// Builds an algebra from structure constants: `product(a, b)` lists the
    /// coefficients of the basis expansion of e_a e_b.
    pub fn from_structure_constants(
        p: u64,
        labels: Vec<String>,
        degrees: Vec<u32>,
        supports: Vec<u32>,
        letters: usize,
        product: impl Fn(usize, usize) -> Vec<(usize, i64)>,
    ) -> Result<Self, ExtError> {
        let dim = labels.len();
        if degrees.len() != dim || supports.len() != dim || dim == 0 {
            return Err(ExtError::BadAlgebra("basis data lengths differ".into()));
        }
        let field = PrimeField::new(p);
        let zero_degree: Vec<usize> = (0..dim).filter(|&i| degrees[i] == 0).collect();
        let [unit] = zero_degree[..] else {
            return Err(ExtError::BadAlgebra("degree zero part is not one-dimensional".into()));
        };
        let mut table = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let mut terms: Vec<(usize, u64)> = Vec::new();
                for (c, v) in product(a, b) {
                    if c >= dim {
                        return Err(ExtError::BadAlgebra(format!("product index {c} out of range")));
                    }
                    if degrees[c] != degrees[a] + degrees[b] {
                        return Err(ExtError::BadAlgebra(format!("e{a} e{b} is not homogeneous")));
                    }
                    let v = field.reduce(v);
                    if v != 0 {
                        terms.push((c, v));
                    }
                }
                table.push(terms);
            }
        }
        let top = *degrees.iter().max().unwrap_or(&0) as usize;
        let mut by_degree = vec![Vec::new(); top + 1];
        for (i, &d) in degrees.iter().enumerate() {
            by_degree[d as usize].push(i);
        }
        let mut alg = Self {
            field,
            labels,
            degrees,
            supports,
            letters,
            unit,
            table,
            by_degree,
            generated_in_degree_one: false,
        };
        if !alg.unit_acts_as_identity() {
            return Err(ExtError::BadAlgebra("degree zero element is not the unit".into()));
        }
        alg.generated_in_degree_one = alg.check_generated_in_degree_one();
        Ok(alg)
    }

    /// The nilCoxeter algebra of a finite Coxeter group: basis Y_w, product
    /// Y_u Y_v = Y_uv when lengths add and 0 otherwise.
    pub fn nilcoxeter(diagram: CoxeterDiagram, p: u64, cap: usize) -> Result<Self, ExtError> {
        let group = CoxeterGroup::with_cap(diagram, cap)?;
        Self::from_group(&group, p)
    }

    pub fn from_group(group: &CoxeterGroup, p: u64) -> Result<Self, ExtError> {
        let elements: Vec<_> = group.elements().collect();
        let labels = elements
            .iter()
            .map(|&w| {
                let word = group.reduced_word(w);
                if word.is_empty() {
                    "1".to_string()
                } else {
                    format!("Y{}", word.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("."))
                }
            })
            .collect();
        let degrees = elements.iter().map(|&w| group.length(w)).collect();
        let supports = elements
            .iter()
            .map(|&w| group.reduced_word(w).iter().fold(0u32, |m, &g| m | 1 << (g - 1)))
            .collect();
        Self::from_structure_constants(p, labels, degrees, supports, group.rank(), |a, b| {
            group
                .length_additive_mul(elements[a], elements[b])
                .map(|c| vec![(c.id(), 1)])
                .unwrap_or_default()
        })
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn support(&self, i: usize) -> u32 {
        self.supports[i]
    }

    /// Number of support letters.
    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn top_degree(&self) -> u32 {
        (self.by_degree.len() - 1) as u32
    }

    /// Basis elements of degree `d`.
    pub fn basis_in_degree(&self, d: u32) -> &[usize] {
        self.by_degree.get(d as usize).map_or(&[], |v| v)
    }

    /// Dimensions of the graded pieces.
    pub fn hilbert_series(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    pub fn product(&self, a: usize, b: usize) -> &[(usize, u64)] {
        &self.table[a * self.dim() + b]
    }

    /// Highest degree of a basis element whose support lies in `mask`.
    pub fn top_degree_within(&self, mask: u32) -> u32 {
        (0..self.dim())
            .filter(|&i| self.supports[i] & !mask == 0)
            .map(|i| self.degrees[i])
            .max()
            .unwrap_or(0)
    }

    /// Positive-degree elements whose left multiples generate the radical
    /// times any submodule.
    pub(crate) fn radical_multipliers(&self) -> Vec<usize> {
        if self.generated_in_degree_one {
            self.basis_in_degree(1).to_vec()
        } else {
            (0..self.dim()).filter(|&i| self.degrees[i] > 0).collect()
        }
    }

    fn unit_acts_as_identity(&self) -> bool {
        (0..self.dim()).all(|a| {
            let one = [(a, 1u64)];
            self.product(self.unit, a) == one && self.product(a, self.unit) == one
        })
    }

    fn check_generated_in_degree_one(&self) -> bool {
        let mut reached: HashSet<usize> = self.basis_in_degree(1).iter().copied().collect();
        reached.insert(self.unit);
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for d in 2..=self.top_degree() {
            rows.clear();
            let index: Vec<usize> = self.basis_in_degree(d).to_vec();
            for &g in self.basis_in_degree(1) {
                for &x in self.basis_in_degree(d - 1) {
                    let mut row = vec![0u64; index.len()];
                    for &(c, v) in self.product(g, x) {
                        let i = index.iter().position(|&k| k == c).expect("homogeneous");
                        row[i] = v;
                    }
                    rows.push(row);
                }
            }
            let rank = crate::linalg::row_reduce(&self.field, &mut rows).len();
            if rank != index.len() {
                return false;
            }
        }
        true
    }

    /// Tests (ab)c = a(bc) on `samples` random basis triples, or on all
    /// triples when `samples` is `None`.
    pub fn check_associativity(&self, samples: Option<(usize, u64)>) -> bool {
        let dim = self.dim();
        let triple_ok = |a: usize, b: usize, c: usize| {
            let mut left = vec![0u64; dim];
            for &(ab, v) in self.product(a, b) {
                for &(x, u) in self.product(ab, c) {
                    left[x] = (left[x] + v * u) % self.p();
                }
            }
            let mut right = vec![0u64; dim];
            for &(bc, v) in self.product(b, c) {
                for &(x, u) in self.product(a, bc) {
                    right[x] = (right[x] + v * u) % self.p();
                }
            }
            left == right
        };
        match samples {
            Some((count, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count).all(|_| {
                    triple_ok(rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim))
                })
            }
            None => (0..dim).all(|a| (0..dim).all(|b| (0..dim).all(|c| triple_ok(a, b, c)))),
        }
    }

    /// Left multiplication of a vector of a free module A^r, stored as r
    /// consecutive blocks of length dim, by the basis element `a`.
    pub(crate) fn left_mul_sparse(&self, a: usize, v: &[(usize, u64)]) -> Vec<(usize, u64)> {
        let dim = self.dim();
        let p = self.p();
        let mut out: Vec<(usize, u64)> = Vec::new();
        for &(idx, c) in v {
            let (block, b) = (idx / dim, idx % dim);
            for &(x, u) in self.product(a, b) {
                out.push((block * dim + x, c * u % p));
            }
        }
        collect_sparse(out, p)
    }
}

/// Sorts, merges and drops zero entries of a sparse vector mod p.
pub(crate) fn collect_sparse(mut v: Vec<(usize, u64)>, p: u64) -> Vec<(usize, u64)> {
    v.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(usize, u64)> = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = (last.1 + c) % p,
            _ => out.push((i, c % p)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilcoxeter_dimensions() {
        let dim = |s: &str, p| FiniteDimAlgebra::nilcoxeter(CoxeterDiagram::parse(s).unwrap(), p, 1000).unwrap().dim();
        assert_eq!(dim("A:2", 2), 6);
        assert_eq!(dim("B:3", 3), 48);
        assert_eq!(dim("I2:6", 5), 12);
    }

    #[test]
    fn rejects_non_local_data() {
        let r = FiniteDimAlgebra::from_structure_constants(
            3,
            vec!["1".into(), "e".into()],
            vec![0, 0],
            vec![0, 0],
            0,
            |_, _| vec![],
        );
        assert!(r.is_err());
    }

    #[test]
    fn sparse_merge() {
        assert_eq!(collect_sparse(vec![(3, 2), (1, 1), (3, 1)], 3), vec![(1, 1)]);
    }
}

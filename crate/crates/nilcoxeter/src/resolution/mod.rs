//! The multiple complex C resolving the trivial module of the nilCoxeter
//! algebra of S_n.
//!
//! C is N ⊗ Ž with one free cell per (n-1)-tuple t. The cell t carries the
//! dual of the canonical monomial f(t). The maps d̃_k lower t_k by one and are
//! right multiplications by elements Y_[i,j];k; d_k adds the sign
//! (-1)^(t_1+...+t_{k-1}).

mod checks;
mod yoneda;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::coxeter::{CoxeterElement, CoxeterError, CoxeterGroup};
use crate::nilcox::interval_power_word;
use crate::zring::f_encode;

pub use checks::{
    check_cubes, check_exactness, check_internal_degree, check_minimality, check_squares,
    CheckResult,
};
pub use crate::relations::RelationReport;
pub use yoneda::{
    check_relations, generator_cell, yoneda_product, yoneda_structure_constants, Relation,
    StructureConstant,
};

/// A cell of the complex: the multidegree (t_1, ..., t_{n-1}).
pub type Cell = Vec<u32>;

#[derive(Debug, thiserror::Error)]
pub enum ResolutionError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("need 2 <= n <= 8, got {0}")]
    BadSize(usize),
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("chain map lifting failed at {0}")]
    Lift(String),
}

/// The action of d̃_k on a cell: right multiplication by `coefficient`,
/// landing in `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub coefficient: CoxeterElement,
    pub target: Cell,
}

/// A finite integer combination of monomials Y_w ž_t.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainElement {
    terms: BTreeMap<(Cell, CoxeterElement), i64>,
}

impl ChainElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(cell: Cell, w: CoxeterElement, c: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(cell, w, c);
        e
    }

    pub fn add_term(&mut self, cell: Cell, w: CoxeterElement, c: i64) {
        if c == 0 {
            return;
        }
        let key = (cell, w);
        let v = self.terms.entry(key.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms ordered by cell, then group element.
    pub fn terms(&self) -> impl Iterator<Item = (&Cell, CoxeterElement, i64)> {
        self.terms.iter().map(|((t, w), &c)| (t, *w, c))
    }

    pub fn coefficient(&self, cell: &[u32], w: CoxeterElement) -> i64 {
        self.terms.get(&(cell.to_vec(), w)).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, w, c) in other.terms() {
            out.add_term(t.clone(), w, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out = Self::zero();
        for (t, w, c) in self.terms() {
            out.add_term(t.clone(), w, c * s);
        }
        out
    }

    /// Left multiplication by Y_u.
    pub fn left_mul(&self, group: &CoxeterGroup, u: CoxeterElement) -> Self {
        let mut out = Self::zero();
        for (t, w, c) in self.terms() {
            if let Some(uw) = group.length_additive_mul(u, w) {
                out.add_term(t.clone(), uw, c);
            }
        }
        out
    }

    /// Coefficients reduced mod p, dropping zeros.
    pub fn reduce_mod(&self, p: i64) -> Self {
        let mut out = Self::zero();
        for (t, w, c) in self.terms() {
            let r = c.rem_euclid(p);
            out.add_term(t.clone(), w, if r > p / 2 { r - p } else { r });
        }
        out
    }

    /// Text like `Y[2,1]·[1,2][1,3] - [2,3]` using the canonical monomial of each cell.
    pub fn display<'a>(&'a self, group: &'a CoxeterGroup) -> impl fmt::Display + 'a {
        DisplayChain { e: self, group }
    }
}

struct DisplayChain<'a> {
    e: &'a ChainElement,
    group: &'a CoxeterGroup,
}

impl fmt::Display for DisplayChain<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_zero() {
            return write!(f, "0");
        }
        for (idx, (t, w, c)) in self.e.terms().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            match (idx, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            let word = self.group.reduced_word(w);
            if !word.is_empty() {
                let s: Vec<String> = word.iter().map(|a| a.to_string()).collect();
                write!(f, "Y[{}]·", s.join(","))?;
            }
            let m = f_encode(t).expect("cell tuple");
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// The complex C for S_n.
pub struct Resolution {
    n: usize,
    group: Arc<CoxeterGroup>,
    steps: RwLock<HashMap<(Cell, usize), Option<Step>>>,
}

impl Resolution {
    pub fn new(n: usize) -> Result<Self, ResolutionError> {
        if !(2..=8).contains(&n) {
            return Err(ResolutionError::BadSize(n));
        }
        Ok(Self {
            n,
            group: Arc::new(CoxeterGroup::symmetric(n)?),
            steps: RwLock::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    /// All cells of total degree `d`, in lexicographic order of tuples.
    pub fn cells(&self, d: u32) -> Vec<Cell> {
        fn rec(len: usize, total: u32, prefix: &mut Cell, out: &mut Vec<Cell>) {
            if len == 1 {
                prefix.push(total);
                out.push(prefix.clone());
                prefix.pop();
                return;
            }
            for first in 0..=total {
                prefix.push(first);
                rec(len - 1, total - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(self.n - 1, d, &mut Vec::new(), &mut out);
        out
    }

    /// Negated internal degree of a cell.
    pub fn cell_internal_degree(&self, t: &[u32]) -> usize {
        f_encode(t).expect("cell tuple").internal_degree()
    }

    fn check_cell(&self, t: &[u32]) -> Result<(), ResolutionError> {
        if t.len() != self.n - 1 {
            return Err(ResolutionError::BadIndex(format!(
                "cell has {} entries, expected {}",
                t.len(),
                self.n - 1
            )));
        }
        Ok(())
    }

    fn power(&self, i: usize, j: usize, k: usize) -> CoxeterElement {
        let word = interval_power_word(i, j, k);
        let w = self.group.from_word(&word).expect("letters in range");
        debug_assert_eq!(self.group.length(w) as usize, word.len());
        w
    }

    /// d̃_k(Y_w ž_{i,j}) = Y_w Y_[i,j];1+k-i ž_{i,k} ž_{1+k,j}, zero unless i <= k < j.
    pub fn tilde_d_on_generator(
        &self,
        w: CoxeterElement,
        i: usize,
        j: usize,
        k: usize,
    ) -> Result<ChainElement, ResolutionError> {
        if !(1 <= i && i < j && j <= self.n && 1 <= k && k < self.n) {
            return Err(ResolutionError::BadIndex(format!("z[{i},{j}] with k={k}")));
        }
        if k < i || k >= j {
            return Ok(ChainElement::zero());
        }
        let mut target = vec![0; self.n - 1];
        for (m, v) in target.iter_mut().enumerate() {
            let m = m + 1;
            if (i..j).contains(&m) && m != k {
                *v = 1;
            }
        }
        let coef = self.power(i, j, 1 + k - i);
        Ok(match self.group.length_additive_mul(w, coef) {
            Some(wc) => ChainElement::monomial(target, wc, 1),
            None => ChainElement::zero(),
        })
    }

    /// The action of d̃_k on the cell t, or `None` when t_k = 0.
    pub fn step(&self, t: &[u32], k: usize) -> Option<Step> {
        assert!(1 <= k && k < self.n && t.len() == self.n - 1, "bad cell or index");
        if t[k - 1] == 0 {
            return None;
        }
        let key = (t.to_vec(), k);
        if let Some(s) = self.steps.read().expect("lock").get(&key) {
            return s.clone();
        }
        let s = Some(self.compute_step(t, k));
        self.steps.write().expect("lock").insert(key, s.clone());
        s
    }

    fn compute_step(&self, t: &[u32], k: usize) -> Step {
        let (a, b, power) = step_interval(t, k).expect("t_k > 0");
        let mut target = t.to_vec();
        target[k - 1] -= 1;
        Step { coefficient: self.power(a, b, power), target }
    }

    /// Sign of d_k on the cell t.
    pub fn sign(&self, t: &[u32], k: usize) -> i64 {
        if t[..k - 1].iter().sum::<u32>() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn apply(&self, k: usize, e: &ChainElement, signed: bool) -> ChainElement {
        let mut out = ChainElement::zero();
        for (t, w, c) in e.terms() {
            if let Some(s) = self.step(t, k) {
                if let Some(wc) = self.group.length_additive_mul(w, s.coefficient) {
                    let sg = if signed { self.sign(t, k) } else { 1 };
                    out.add_term(s.target, wc, c * sg);
                }
            }
        }
        out
    }

    /// The unsigned map d̃_k.
    pub fn tilde_d(&self, k: usize, e: &ChainElement) -> ChainElement {
        self.apply(k, e, false)
    }

    /// The signed map d_k.
    pub fn d(&self, k: usize, e: &ChainElement) -> ChainElement {
        self.apply(k, e, true)
    }

    /// The total differential d_1 + ... + d_{n-1}.
    pub fn total_d(&self, e: &ChainElement) -> ChainElement {
        let mut out = ChainElement::zero();
        for k in 1..self.n {
            out = out.add(&self.d(k, e));
        }
        out
    }

    /// d on a cell with coefficient 1.
    pub fn boundary(&self, t: &[u32]) -> Result<ChainElement, ResolutionError> {
        self.check_cell(t)?;
        Ok(self.total_d(&ChainElement::monomial(t.to_vec(), self.group.identity(), 1)))
    }

    /// The signed source of d_m hitting Y_w ž_t, if there is one.
    fn preimage(&self, t: &[u32], w: CoxeterElement, m: usize) -> Option<(Cell, CoxeterElement, i64)> {
        let mut up = t.to_vec();
        up[m - 1] += 1;
        let s = self.step(&up, m).expect("t_m + 1 > 0");
        let g = &self.group;
        let c = s.coefficient;
        let w1 = g.mul(w, g.inverse(c));
        (g.length(w1) + g.length(c) == g.length(w)).then(|| {
            let sign = self.sign(&up, m);
            (up, w1, sign)
        })
    }

    /// The indices i with d_i(Y_w ž_t) nonzero or Y_w ž_t in the image of d_i.
    pub fn active_indices(&self, t: &[u32], w: CoxeterElement) -> Vec<usize> {
        (1..self.n)
            .filter(|&i| {
                self.step(t, i)
                    .is_some_and(|s| self.group.length_additive_mul(w, s.coefficient).is_some())
                    || self.preimage(t, w, i).is_some()
            })
            .collect()
    }

    /// The contracting homotopy on one monomial: the signed d_m-preimage for the
    /// least active index m, or zero.
    pub fn homotopy_monomial(&self, t: &[u32], w: CoxeterElement) -> Option<(Cell, CoxeterElement, i64)> {
        if w == self.group.identity() && t.iter().all(|&x| x == 0) {
            return None;
        }
        for m in 1..self.n {
            let pre = self.preimage(t, w, m);
            if pre.is_some() {
                return pre;
            }
            let out = self
                .step(t, m)
                .is_some_and(|s| self.group.length_additive_mul(w, s.coefficient).is_some());
            if out {
                return None;
            }
        }
        None
    }

    /// The contracting homotopy h, extended linearly.
    pub fn homotopy(&self, e: &ChainElement) -> ChainElement {
        let mut out = ChainElement::zero();
        for (t, w, c) in e.terms() {
            if let Some((t1, w1, s)) = self.homotopy_monomial(t, w) {
                out.add_term(t1, w1, c * s);
            }
        }
        out
    }
}

/// The coefficient of d̃_k on the cell t as (a, b, m), meaning Y_[a,b];m, or
/// `None` when t_k = 0.
pub fn step_interval(t: &[u32], k: usize) -> Option<(usize, usize, usize)> {
    if k == 0 || k > t.len() || t[k - 1] == 0 {
        return None;
    }
    let mut w = f_encode(t).ok()?.factors;
    let mut pos = w.iter().position(|g| g.lo() <= k && k < g.hi())?;
    let mut kk = k;
    // Move factors to the front as in the reversed canonical form,
    // following the tracked factor and its index. A crossing interval
    // reflects the index when it contains the tracked factor, equal
    // intervals included.
    for s in 0..w.len().saturating_sub(1) {
        let x = w.pop().expect("nonempty");
        let moving = pos == w.len();
        for (q, c) in w.iter_mut().enumerate().skip(s) {
            let tracked = !moving && q == pos;
            if x.same_interval(*c) {
                if tracked {
                    kk = x.lo() + x.hi() - kk - 1;
                }
            } else if x.contains(*c) {
                *c = x.reflect(*c);
                if tracked {
                    kk = x.lo() + x.hi() - kk - 1;
                }
            }
        }
        if moving {
            pos = s;
        } else if pos >= s {
            pos += 1;
        }
        w.insert(s, x);
    }
    let (a, b) = (w[pos].lo(), w[pos].hi());
    debug_assert!(a <= kk && kk < b);
    Some((a, b, 1 + kk - a))
}

//! The graded ring Z generated by z_{i,j}, and its signless variant.
//!
//! Relations, for intervals [i,j] and [i',j']:
//! z_{j,i} = (-1)^{j-i} z_{i,j};
//! if [i',j'] lies inside [i,j] then z_{i,j} z_{i',j'} = (-1)^{|ij||i'j'|} z_{i+j-i',i+j-j'} z_{i,j};
//! disjoint intervals commute up to (-1)^{|ij||i'j'|};
//! overlapping intervals, neither containing the other, multiply to zero.

mod reverse;
mod text;
mod tuple;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use reverse::{reversal_steps, reversed_form, ReversedForm};
pub use tuple::{
    binomial, enumerate_canonical, f_decode, f_encode, multidegree, nonzero_mul_criterion, rank,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ZError {
    #[error("generator index out of range: z_{{{i},{j}}} with n={n}")]
    BadGenerator { i: usize, j: usize, n: usize },
    #[error("elements belong to rings with different parameters")]
    RingMismatch,
    #[error("tuple has length {got}, expected {expected}")]
    BadTuple { got: usize, expected: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integer coefficient overflow")]
    Overflow,
    #[error("n must be at least 2 and at most {max}")]
    BadSize { max: usize },
}

/// Largest supported number of letters.
pub const MAX_N: usize = 64;

/// A generator z_{i,j}, stored with either orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZGen {
    pub i: u8,
    pub j: u8,
}

impl ZGen {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i: i as u8, j: j as u8 }
    }

    pub fn lo(self) -> usize {
        self.i.min(self.j) as usize
    }

    pub fn hi(self) -> usize {
        self.i.max(self.j) as usize
    }

    /// |j - i|, minus the homological degree.
    pub fn degree(self) -> usize {
        self.hi() - self.lo()
    }

    /// Minus the internal degree: |j-i|(|j-i|+1)/2.
    pub fn internal_degree(self) -> usize {
        let d = self.degree();
        d * (d + 1) / 2
    }

    pub fn oriented(self) -> bool {
        self.i < self.j
    }

    /// The same generator with i < j.
    pub fn normalized(self) -> Self {
        Self::new(self.lo(), self.hi())
    }

    pub fn same_interval(self, other: Self) -> bool {
        self.lo() == other.lo() && self.hi() == other.hi()
    }

    /// `other` lies inside `self` as a set of integers.
    pub fn contains(self, other: Self) -> bool {
        self.lo() <= other.lo() && other.hi() <= self.hi()
    }

    pub fn disjoint(self, other: Self) -> bool {
        self.hi() < other.lo() || other.hi() < self.lo()
    }

    /// Neither disjoint nor nested.
    pub fn overlaps(self, other: Self) -> bool {
        !self.disjoint(other) && !self.contains(other) && !other.contains(self)
    }

    /// Reflection of `other` in this interval, keeping its orientation reversed:
    /// (a,b) maps to (i+j-a, i+j-b).
    pub fn reflect(self, other: Self) -> Self {
        let s = self.lo() + self.hi();
        Self::new(s - other.i as usize, s - other.j as usize)
    }
}

impl fmt::Display for ZGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

/// A nonzero monomial in canonical form with a sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZMonomial {
    pub sign: i64,
    pub factors: Vec<ZGen>,
}

impl ZMonomial {
    pub fn one() -> Self {
        Self { sign: 1, factors: Vec::new() }
    }

    /// Minus the homological degree.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|g| g.degree()).sum()
    }

    /// Minus the internal degree.
    pub fn internal_degree(&self) -> usize {
        self.factors.iter().map(|g| g.internal_degree()).sum()
    }
}

/// Z (signed) or its signless variant on the letters 1..=n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZRing {
    n: usize,
    signed: bool,
}

fn parity_sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

impl ZRing {
    pub fn new(n: usize, signed: bool) -> Result<Self, ZError> {
        if !(2..=MAX_N).contains(&n) {
            return Err(ZError::BadSize { max: MAX_N });
        }
        Ok(Self { n, signed })
    }

    pub fn signed(n: usize) -> Result<Self, ZError> {
        Self::new(n, true)
    }

    pub fn signless(n: usize) -> Result<Self, ZError> {
        Self::new(n, false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_signed(&self) -> bool {
        self.signed
    }

    fn sign(&self, odd: bool) -> i64 {
        if self.signed {
            parity_sign(odd)
        } else {
            1
        }
    }

    /// All generators z_{i,j} with i < j, ordered by degree then i.
    pub fn generators(&self) -> Vec<ZGen> {
        let mut out = Vec::new();
        for d in 1..self.n {
            for i in 1..=self.n - d {
                out.push(ZGen::new(i, i + d));
            }
        }
        out
    }

    fn check(&self, g: ZGen) -> Result<(), ZError> {
        let (i, j) = (g.i as usize, g.j as usize);
        if i == 0 || j == 0 || i > self.n || j > self.n || i == j {
            Err(ZError::BadGenerator { i, j, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Sign relating z_{i,j} to its normalized form.
    pub fn orientation_sign(&self, g: ZGen) -> i64 {
        if g.oriented() {
            1
        } else {
            self.sign(g.degree() % 2 == 1)
        }
    }

    /// (-1)^{|a||b|}, or 1 in the signless ring.
    pub(crate) fn cross_sign(&self, outer: ZGen, inner: ZGen) -> i64 {
        self.sign((outer.degree() * inner.degree()) % 2 == 1)
    }

    /// Multiplies the canonical word `factors` on the right by the oriented
    /// generator `g`, in place. Returns the sign picked up, or `None` for zero.
    pub(crate) fn insert_right(&self, factors: &mut Vec<ZGen>, g: ZGen) -> Option<i64> {
        debug_assert!(g.oriented());
        let mut g = g;
        let mut sign = 1;
        let mut p = factors.len();
        while p > 0 {
            let a = factors[p - 1];
            if a.overlaps(g) {
                return None;
            }
            let (da, dg) = (a.degree(), g.degree());
            if da > dg {
                if a.contains(g) {
                    // a g = (-1)^{|a||g|+|g|} g' a with g' the reflection, reoriented.
                    sign *= self.cross_sign(a, g) * self.sign(dg % 2 == 1);
                    g = a.reflect(g).normalized();
                } else {
                    sign *= self.cross_sign(a, g);
                }
                p -= 1;
            } else if da == dg && g.hi() < a.lo() {
                sign *= self.cross_sign(a, g);
                p -= 1;
            } else {
                break;
            }
        }
        if factors[..p].iter().any(|b| b.overlaps(g)) {
            return None;
        }
        factors.insert(p, g);
        Some(sign)
    }

    /// Canonical form of a product of generators, with either orientation.
    pub fn normalize(&self, word: &[ZGen]) -> Result<Option<ZMonomial>, ZError> {
        let mut factors = Vec::with_capacity(word.len());
        let mut sign = 1;
        for &g in word {
            self.check(g)?;
            sign *= self.orientation_sign(g);
            match self.insert_right(&mut factors, g.normalized()) {
                Some(s) => sign *= s,
                None => return Ok(None),
            }
        }
        Ok(Some(ZMonomial { sign, factors }))
    }

    /// Convenience wrapper of [`Self::normalize`] on (i, j) pairs.
    pub fn normalize_pairs(&self, word: &[(usize, usize)]) -> Result<Option<ZMonomial>, ZError> {
        let w: Vec<ZGen> = word.iter().map(|&(i, j)| ZGen::new(i, j)).collect();
        self.normalize(&w)
    }

    /// Product of two canonical monomials.
    pub fn mul_monomials(&self, a: &ZMonomial, b: &ZMonomial) -> Option<ZMonomial> {
        let mut factors = a.factors.clone();
        let mut sign = a.sign * b.sign;
        for &g in &b.factors {
            sign *= self.insert_right(&mut factors, g)?;
        }
        Some(ZMonomial { sign, factors })
    }

    pub fn zero(&self) -> ZElement {
        ZElement { ring: *self, terms: BTreeMap::new() }
    }

    pub fn one(&self) -> ZElement {
        self.from_monomial(&ZMonomial::one())
    }

    pub fn from_monomial(&self, m: &ZMonomial) -> ZElement {
        let mut e = self.zero();
        e.terms.insert(m.factors.clone(), m.sign);
        e
    }

    /// The generator z_{i,j}, either orientation.
    pub fn gen(&self, i: usize, j: usize) -> Result<ZElement, ZError> {
        self.word(&[(i, j)])
    }

    /// The product of the given generators.
    pub fn word(&self, word: &[(usize, usize)]) -> Result<ZElement, ZError> {
        Ok(match self.normalize_pairs(word)? {
            Some(m) => self.from_monomial(&m),
            None => self.zero(),
        })
    }

    /// z_{i,j} maps to (-1)^{(n-1)(i-j)} z_{n+1-i,n+1-j}.
    pub fn dagger_gen(&self, g: ZGen) -> (i64, ZGen) {
        let n = self.n;
        let s = self.sign(((n - 1) * g.degree()) % 2 == 1);
        (s, ZGen::new(n + 1 - g.i as usize, n + 1 - g.j as usize))
    }
}

/// An integer combination of canonical monomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZElement {
    ring: ZRing,
    terms: BTreeMap<Vec<ZGen>, i64>,
}

impl ZElement {
    pub fn ring(&self) -> ZRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ZMonomial> + '_ {
        self.terms
            .iter()
            .map(|(f, &c)| ZMonomial { sign: c, factors: f.clone() })
    }

    pub fn coefficient(&self, factors: &[ZGen]) -> i64 {
        self.terms.get(factors).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, factors: Vec<ZGen>, c: i64) -> Result<(), ZError> {
        if c == 0 {
            return Ok(());
        }
        let e = self.terms.entry(factors.clone()).or_insert(0);
        *e = e.checked_add(c).ok_or(ZError::Overflow)?;
        if *e == 0 {
            self.terms.remove(&factors);
        }
        Ok(())
    }

    fn same_ring(&self, other: &Self) -> Result<(), ZError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(ZError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ZError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (f, &c) in &other.terms {
            out.add_term(f.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, s: i64) -> Result<Self, ZError> {
        let mut out = self.ring.zero();
        for (f, &c) in &self.terms {
            out.add_term(f.clone(), c.checked_mul(s).ok_or(ZError::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ZError> {
        self.add(&other.scale(-1)?)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ZError> {
        self.same_ring(other)?;
        let mut out = self.ring.zero();
        for (fa, &ca) in &self.terms {
            for (fb, &cb) in &other.terms {
                let a = ZMonomial { sign: 1, factors: fa.clone() };
                let b = ZMonomial { sign: 1, factors: fb.clone() };
                if let Some(m) = self.ring.mul_monomials(&a, &b) {
                    let c = ca.checked_mul(cb).ok_or(ZError::Overflow)?;
                    out.add_term(m.factors, c * m.sign)?;
                }
            }
        }
        Ok(out)
    }

    /// The anti-automorphism fixing each z_{i,j} and reversing products.
    pub fn star(&self) -> Self {
        let mut out = self.ring.zero();
        for (f, &c) in &self.terms {
            let rev: Vec<ZGen> = f.iter().rev().copied().collect();
            if let Some(m) = self.ring.normalize(&rev).expect("valid generators") {
                out.add_term(m.factors, c * m.sign).expect("no overflow");
            }
        }
        out
    }

    /// The automorphism z_{i,j} -> (-1)^{(n-1)(i-j)} z_{n+1-i,n+1-j}.
    pub fn dagger(&self) -> Self {
        let mut out = self.ring.zero();
        for (f, &c) in &self.terms {
            let mut sign = c;
            let word: Vec<ZGen> = f
                .iter()
                .map(|&g| {
                    let (s, h) = self.ring.dagger_gen(g);
                    sign *= s;
                    h
                })
                .collect();
            if let Some(m) = self.ring.normalize(&word).expect("valid generators") {
                out.add_term(m.factors, sign * m.sign).expect("no overflow");
            }
        }
        out
    }

    /// Image in Z[n1,n2]: generators with an index outside the window are killed.
    pub fn quotient_interval(&self, n1: usize, n2: usize) -> Self {
        let mut out = self.ring.zero();
        for (f, &c) in &self.terms {
            if f.iter().all(|g| n1 <= g.lo() && g.hi() <= n2) {
                out.terms.insert(f.clone(), c);
            }
        }
        out
    }

    /// Image in the quotient killing every generator not inside one of the
    /// windows. With windows [1,i] and [i+1,n] this is Z[1,i] ⊗ Z[i+1,n].
    pub fn quotient_windows(&self, windows: &[(usize, usize)]) -> Self {
        let mut out = self.ring.zero();
        for (f, &c) in &self.terms {
            let inside = |g: &ZGen| windows.iter().any(|&(a, b)| a <= g.lo() && g.hi() <= b);
            if f.iter().all(inside) {
                out.terms.insert(f.clone(), c);
            }
        }
        out
    }

    /// Terms whose degree (minus the homological degree) is `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        let mut out = self.ring.zero();
        for (f, &c) in &self.terms {
            if f.iter().map(|g| g.degree()).sum::<usize>() == d {
                out.terms.insert(f.clone(), c);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = JsonZElement {
            n: self.ring.n,
            signed: self.ring.signed,
            terms: self
                .terms()
                .map(|m| JsonZTerm {
                    factors: m.factors.iter().map(|g| [g.i as usize, g.j as usize]).collect(),
                    coeff: m.sign,
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, ZError> {
        let doc: JsonZElement =
            serde_json::from_str(s).map_err(|e| ZError::Parse(e.to_string()))?;
        let ring = ZRing::new(doc.n, doc.signed)?;
        let mut out = ring.zero();
        for t in doc.terms {
            let pairs: Vec<(usize, usize)> = t.factors.iter().map(|p| (p[0], p[1])).collect();
            out = out.add(&ring.word(&pairs)?.scale(t.coeff)?)?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonZElement {
    n: usize,
    signed: bool,
    terms: Vec<JsonZTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonZTerm {
    factors: Vec<[usize; 2]>,
    coeff: i64,
}

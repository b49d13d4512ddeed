//! Dense exact linear algebra over prime fields and the rationals.

use num::{BigInt, BigRational, One, Signed, Zero};

/// Field arithmetic with the field given as a context value.
pub trait Field {
    type E: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_i64(&self, v: i64) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
}

/// The field F_p, elements stored as residues in 0..p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField(u64);

impl PrimeField {
    /// Panics unless `p` is a prime below 2^31.
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p) && p < (1 << 31), "{p} is not a supported prime");
        Self(p)
    }

    pub fn p(&self) -> u64 {
        self.0
    }

    pub fn reduce(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    /// The representative in (-p/2, p/2].
    pub fn lift(&self, v: u64) -> i64 {
        let p = self.0 as i64;
        let v = v as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Field for PrimeField {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce(v)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        let (mut e, mut base, mut acc) = (self.0 - 2, *a, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            e >>= 1;
        }
        acc
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

/// Either F_p or Q, chosen at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scalars {
    Prime(u64),
    Rational,
}

impl Scalars {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "0" | "Q" | "q" => Some(Scalars::Rational),
            _ => s.parse().ok().filter(|&p| is_prime(p)).map(Scalars::Prime),
        }
    }

    /// Rank of an integer matrix over these scalars.
    pub fn rank(&self, rows: &[Vec<i64>]) -> usize {
        match *self {
            Scalars::Prime(p) => rank_of(&PrimeField::new(p), rows),
            Scalars::Rational => rank_of(&Rationals, rows),
        }
    }
}

impl std::fmt::Display for Scalars {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalars::Prime(p) => write!(f, "F{p}"),
            Scalars::Rational => write!(f, "Q"),
        }
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn row_reduce<F: Field>(field: &F, rows: &mut Vec<Vec<F::E>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]);
        for v in rows[r].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                *v = field.sub(v, &field.mul(&f, pv));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank_of<F: Field>(field: &F, rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<F::E>> =
        rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
    row_reduce(field, &mut m).len()
}

/// A basis of {x : M x = 0} for the matrix with the given rows and `cols` columns.
pub fn kernel<F: Field>(field: &F, rows: &[Vec<F::E>], cols: usize) -> Vec<Vec<F::E>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(field, &mut m);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = field.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

/// Incremental echelon basis over F_p: each stored row has a unit pivot and
/// zeros at the pivots of earlier rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u64) -> Self {
        Self { field: PrimeField::new(p), rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The stored rows, in insertion order.
    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Reduces `v` against the stored rows in place.
    pub fn reduce(&self, v: &mut [u64]) {
        let p = self.field.p();
        for (pc, row) in &self.rows {
            let f = v[*pc];
            if f != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + (p - f) * r) % p;
                }
            }
        }
    }

    /// Adds `v` if it is independent of the stored rows.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(&v[pc]);
        let p = self.field.p();
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
        self.rows.push((pc, v));
        true
    }
}

/// Row space bases are compared by rank: true if the spans agree.
pub fn same_span<F: Field>(field: &F, a: &[Vec<F::E>], b: &[Vec<F::E>]) -> bool {
    let ra = row_reduce(field, &mut a.to_vec()).len();
    let rb = row_reduce(field, &mut b.to_vec()).len();
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    let rab = row_reduce(field, &mut both).len();
    ra == rab && rb == rab
}

/// Scales a rational vector to a primitive integer vector with positive leading entry.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = num::integer::lcm(lcm, x.denom().clone());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| num::integer::gcd(g, x.clone()));
    if !g.is_zero() {
        for x in &mut ints {
            *x /= &g;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut ints {
            *x = -x.clone();
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(7);
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.lift(6), -1);
    }

    #[test]
    fn kernel_and_rank() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank_of(&PrimeField::new(5), &rows), 2);
        assert_eq!(rank_of(&Rationals, &rows), 2);
        assert_eq!(rank_of(&PrimeField::new(2), &[vec![1, 1], vec![1, -1]]), 1);
        let q = Rationals;
        let m: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&v| q.from_i64(v)).collect()).collect();
        let k = kernel(&q, &m, 3);
        assert_eq!(k.len(), 1);
        let ints = primitive_integer(&k[0]);
        assert_eq!(ints, vec![BigInt::from(1), BigInt::from(1), BigInt::from(-1)]);
    }
}

//! Quadratic duality between Z and the signed nilcactus algebra X.
//!
//! Both algebras are generated by one symbol per interval [i,j], i < j. A
//! quadratic relation is a vector in the span of ordered generator pairs,
//! indexed by `a * G + b` for generators a, b out of G.

mod words;

use serde::Serialize;

use crate::linalg::{kernel, primitive_integer, Echelon, Field, PrimeField, Rationals, Scalars};
use crate::zring::{reversed_form, ZGen, ZRing, MAX_N};

pub use words::{x_normal_form, x_normal_words};

#[derive(Debug, thiserror::Error)]
pub enum KoszulError {
    #[error("n must be at least 2 and at most {MAX_N}, got {0}")]
    BadN(usize),
    #[error("degree {cap} on {n} letters needs {words} words, above the limit {limit}")]
    TooLarge { n: usize, cap: usize, words: u64, limit: u64 },
}

/// Which algebra a presentation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Z,
    X,
}

impl Side {
    fn dual(self) -> Self {
        match self {
            Side::Z => Side::X,
            Side::X => Side::Z,
        }
    }
}

/// Sign rule for reversing an X generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    /// X_{j,i} = (-1)^{j-i} X_{i,j}, the same rule as in Z.
    Dual,
    /// X_{j,i} = (-1)^{j-i-1} X_{i,j}.
    Shifted,
}

impl Orientation {
    /// Sign of X_{j,i} relative to X_{i,j} for j - i = d.
    pub fn sign(self, d: usize) -> i64 {
        let e = match self {
            Orientation::Dual => d,
            Orientation::Shifted => d + 1,
        };
        if e % 2 == 1 {
            -1
        } else {
            1
        }
    }
}

/// Sign of the pairing between X_a X_b and z_a z_b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Pairing {
    /// Always +1.
    Plain,
    /// (-1)^{|z_a| |X_b|}, with |z_a| = j-i and |X_b| = j'-i'-1.
    Graded,
}

impl Pairing {
    fn sign(self, a: ZGen, b: ZGen) -> i64 {
        match self {
            Pairing::Plain => 1,
            Pairing::Graded => parity(a.degree() * (b.degree() - 1)),
        }
    }
}

fn parity(e: usize) -> i64 {
    if e % 2 == 1 {
        -1
    } else {
        1
    }
}

/// Generators z_{i,j} or X_{i,j} with i < j and a space of quadratic relations.
#[derive(Clone, Debug, Serialize)]
pub struct QuadraticPresentation {
    n: usize,
    side: Side,
    generators: Vec<ZGen>,
    relations: Vec<Vec<i64>>,
}

fn interval_generators(n: usize) -> Result<Vec<ZGen>, KoszulError> {
    if !(2..=MAX_N).contains(&n) {
        return Err(KoszulError::BadN(n));
    }
    Ok((1..n).flat_map(|i| (i + 1..=n).map(move |j| ZGen::new(i, j))).collect())
}

impl QuadraticPresentation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn generators(&self) -> &[ZGen] {
        &self.generators
    }

    pub fn relations(&self) -> &[Vec<i64>] {
        &self.relations
    }

    /// The same generators with other relation vectors. Panics on a vector
    /// of the wrong length.
    pub fn with_relations(&self, relations: Vec<Vec<i64>>) -> Self {
        assert!(relations.iter().all(|r| r.len() == self.pair_count()), "wrong vector length");
        Self { relations, ..self.clone() }
    }

    pub fn dim(&self) -> usize {
        self.relations.len()
    }

    pub fn pair_count(&self) -> usize {
        self.generators.len().pow(2)
    }

    fn index(&self, g: ZGen) -> usize {
        let (i, j) = (g.lo(), g.hi());
        // Generators are listed by i, then j.
        (1..i).map(|k| self.n - k).sum::<usize>() + (j - i - 1)
    }

    pub fn pair_index(&self, a: ZGen, b: ZGen) -> usize {
        self.index(a) * self.generators.len() + self.index(b)
    }

    pub fn pair(&self, k: usize) -> (ZGen, ZGen) {
        let g = self.generators.len();
        (self.generators[k / g], self.generators[k % g])
    }

    /// Degrees of a generator: (homological, internal) for z_{i,j} and
    /// (-1, j-i, internal) for X_{i,j}.
    pub fn degree(&self, g: ZGen) -> Vec<i64> {
        let (d, t) = (g.degree() as i64, g.internal_degree() as i64);
        match self.side {
            Side::Z => vec![d, t],
            Side::X => vec![-1, d, t],
        }
    }

    /// Every relation is supported on pairs of a single multidegree.
    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(|r| {
            let mut degrees = r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, _)| {
                let (a, b) = self.pair(k);
                self.degree(a).iter().zip(self.degree(b)).map(|(x, y)| x + y).collect::<Vec<_>>()
            });
            let first = degrees.next();
            degrees.all(|d| Some(d) == first)
        })
    }

    /// Rank of the relation vectors over the given scalars.
    pub fn rank(&self, scalars: Scalars) -> usize {
        scalars.rank(&self.relations)
    }

    /// True if the two relation spaces agree over the given scalars.
    pub fn same_span(&self, other: &Self, scalars: Scalars) -> bool {
        let (ra, rb) = (self.rank(scalars), other.rank(scalars));
        let mut both = self.relations.clone();
        both.extend(other.relations.iter().cloned());
        ra == rb && scalars.rank(&both) == ra
    }

    /// A relation written out, e.g. `X[1,3]X[1,2] - X[2,3]X[1,3]`.
    pub fn relation_text(&self, k: usize) -> String {
        let letter = match self.side {
            Side::Z => "z",
            Side::X => "X",
        };
        let mut out = String::new();
        for (idx, &c) in self.relations[k].iter().enumerate().filter(|(_, &c)| c != 0) {
            let (a, b) = self.pair(idx);
            let term = format!("{letter}[{},{}]{letter}[{},{}]", a.i, a.j, b.i, b.j);
            let sign = if c < 0 { "-" } else { "+" };
            let coeff = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            if out.is_empty() {
                out = format!("{}{coeff}{term}", if c < 0 { "-" } else { "" });
            } else {
                out.push_str(&format!(" {sign} {coeff}{term}"));
            }
        }
        out
    }

    fn unit(&self, a: ZGen, b: ZGen, c: i64) -> Vec<(usize, i64)> {
        vec![(self.pair_index(a, b), c)]
    }

    fn push(&mut self, terms: Vec<(usize, i64)>) {
        let mut v = vec![0; self.pair_count()];
        for (k, c) in terms {
            v[k] += c;
        }
        if v.iter().any(|&c| c != 0) {
            self.relations.push(v);
        }
    }
}

/// The quadratic relations of Z: overlapping products, reflection across a
/// containing interval, and graded commutation of disjoint intervals.
pub fn z_relation_space(n: usize) -> Result<QuadraticPresentation, KoszulError> {
    let generators = interval_generators(n)?;
    let mut p = QuadraticPresentation { n, side: Side::Z, generators: generators.clone(), relations: Vec::new() };
    for &a in &generators {
        for &b in &generators {
            if a == b {
                continue;
            }
            if a.contains(b) {
                let r = a.reflect(b);
                let s = parity(a.degree() * b.degree()) * Orientation::Dual.sign(b.degree());
                let mut t = p.unit(a, b, 1);
                t.extend(p.unit(r.normalized(), a, -s));
                p.push(t);
            } else if a.disjoint(b) {
                if a < b {
                    let mut t = p.unit(a, b, 1);
                    t.extend(p.unit(b, a, -parity(a.degree() * b.degree())));
                    p.push(t);
                }
            } else if a.overlaps(b) {
                p.push(p.unit(a, b, 1));
            }
        }
    }
    Ok(p)
}

/// The quadratic relations of the signed nilcactus algebra: squares,
/// reflection across a containing interval and graded commutation of
/// disjoint intervals, all with exponent (j-i-1)(j'-i'-1).
pub fn nilcactus_relations(n: usize, orientation: Orientation) -> Result<QuadraticPresentation, KoszulError> {
    let generators = interval_generators(n)?;
    let mut p = QuadraticPresentation { n, side: Side::X, generators: generators.clone(), relations: Vec::new() };
    for &a in &generators {
        p.push(p.unit(a, a, 1));
        for &b in &generators {
            if a == b {
                continue;
            }
            let e = parity((a.degree() - 1) * (b.degree() - 1));
            if a.contains(b) {
                let r = a.reflect(b);
                let s = e * orientation.sign(b.degree());
                let mut t = p.unit(a, b, 1);
                t.extend(p.unit(r.normalized(), a, -s));
                p.push(t);
            } else if a.disjoint(b) && a < b {
                let mut t = p.unit(a, b, 1);
                t.extend(p.unit(b, a, -e));
                p.push(t);
            }
        }
    }
    Ok(p)
}

/// The annihilator of the relation space in the dual pair space, under the
/// given pairing and computed over the given scalars. Over F_p the entries
/// are symmetric residues.
pub fn perpendicular(p: &QuadraticPresentation, pairing: Pairing, scalars: Scalars) -> QuadraticPresentation {
    let cols = p.pair_count();
    let signs: Vec<i64> = (0..cols).map(|k| {
        let (a, b) = p.pair(k);
        pairing.sign(a, b)
    }).collect();
    let weighted: Vec<Vec<i64>> =
        p.relations.iter().map(|r| r.iter().zip(&signs).map(|(x, s)| x * s).collect()).collect();
    let relations = match scalars {
        Scalars::Rational => {
            let f = Rationals;
            let rows: Vec<Vec<_>> = weighted.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect();
            kernel(&f, &rows, cols)
                .iter()
                .map(|v| primitive_integer(v).iter().map(|x| i64::try_from(x).expect("small entries")).collect())
                .collect()
        }
        Scalars::Prime(q) => {
            let f = PrimeField::new(q);
            let rows: Vec<Vec<_>> = weighted.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect();
            kernel(&f, &rows, cols).iter().map(|v| v.iter().map(|&x| f.lift(x)).collect()).collect()
        }
    };
    QuadraticPresentation { n: p.n, side: p.side.dual(), generators: p.generators.clone(), relations }
}

/// Graded ranks of X in word lengths 0..=cap, two ways.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XRanks {
    pub by_normal_form: Vec<u64>,
    pub by_linear_algebra: Vec<u64>,
}

impl XRanks {
    pub fn agree(&self) -> bool {
        self.by_normal_form == self.by_linear_algebra
    }
}

/// Upper bound on the number of words in the top degree for `x_graded_ranks`.
pub const WORD_LIMIT: u64 = 50_000;

/// Ranks of X by counting normal words and by linear algebra over F_p on the
/// free algebra modulo the ideal of the relations, truncated at `cap`.
pub fn x_graded_ranks(n: usize, cap: usize, orientation: Orientation, p: u64) -> Result<XRanks, KoszulError> {
    let rels = nilcactus_relations(n, orientation)?;
    let g = rels.generators.len() as u64;
    let words = g.checked_pow(cap as u32).unwrap_or(u64::MAX);
    if words > WORD_LIMIT {
        return Err(KoszulError::TooLarge { n, cap, words, limit: WORD_LIMIT });
    }
    let by_normal_form = (0..=cap).map(|w| x_normal_words(n, w, orientation, p == 2).len() as u64).collect();
    Ok(XRanks { by_normal_form, by_linear_algebra: quotient_ranks(&rels, cap, p) })
}

/// Dimensions of T(V)/(R) in word lengths 0..=cap. The ideal in length w is
/// V·I_{w-1} + I_{w-1}·V, built from an echelon basis of I_{w-1}.
pub fn quotient_ranks(rels: &QuadraticPresentation, cap: usize, p: u64) -> Vec<u64> {
    let f = PrimeField::new(p);
    let g = rels.generators.len();
    let mut out = vec![1];
    if cap >= 1 {
        out.push(g as u64);
    }
    let mut ideal: Vec<Vec<u64>> = Vec::new();
    for w in 2..=cap {
        let len = g.pow(w as u32);
        let mut basis = Echelon::new(p);
        if w == 2 {
            for r in &rels.relations {
                basis.insert(r.iter().map(|&v| f.reduce(v)).collect());
            }
        } else {
            let prev = g.pow(w as u32 - 1);
            for v in &ideal {
                for x in 0..g {
                    // x ⊗ v and v ⊗ x
                    let mut left = vec![0; len];
                    left[x * prev..(x + 1) * prev].copy_from_slice(v);
                    basis.insert(left);
                    let mut right = vec![0; len];
                    for (k, &c) in v.iter().enumerate() {
                        right[k * g + x] = c;
                    }
                    basis.insert(right);
                }
            }
        }
        out.push((len - basis.len()) as u64);
        ideal = basis.rows().map(|r| r.to_vec()).collect();
    }
    out
}

/// Counts of reversed canonical monomials of Z in degrees 0..=d, checking
/// that distinct canonical monomials have distinct reversed forms.
pub fn reversed_basis_counts(n: usize, d: usize) -> Result<Vec<u64>, KoszulError> {
    let ring = ZRing::signed(n).map_err(|_| KoszulError::BadN(n))?;
    Ok((0..=d)
        .map(|k| {
            let mut forms: Vec<Vec<ZGen>> = crate::zring::enumerate_canonical(n, k)
                .iter()
                .map(|m| reversed_form(&ring, m).factors)
                .collect();
            forms.sort();
            forms.dedup();
            forms.len() as u64
        })
        .collect())
}

/// The relation vectors are linearly independent over the given scalars.
pub fn relations_independent(p: &QuadraticPresentation, scalars: Scalars) -> bool {
    p.rank(scalars) == p.dim()
}

//! Matrix representations of Z realizing its PI degree 2^{n-2}.
//!
//! Representations are built by doubling: a representation ρ of Z[1,n-1]
//! gives ρ̂(z) = diag(ρτ(z), ρτ(z†)) on z ≠ z_{1,n}, with τ the restriction
//! to Z[1,n-1], and ρ̂(z_{1,n}) = t_{n-1} [[0, I], [I, 0]].

mod matrix;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::linalg::{rank_of, Echelon, Rationals};
use crate::zring::{enumerate_canonical, ZElement, ZError, ZGen, ZRing};

pub use matrix::Matrix;

#[derive(Debug, thiserror::Error)]
pub enum PiRepError {
    #[error(transparent)]
    Z(#[from] ZError),
    #[error("expected {expected} parameters, got {got}")]
    Parameters { expected: usize, got: usize },
    #[error("matrix for z[{0},{1}] has the wrong size")]
    Size(usize, usize),
    #[error("base representation is not a homomorphism: {0}")]
    NotHomomorphism(String),
}

/// Integer matrices assigned to the generators z_{i,j}, i < j, of the signed
/// ring Z on n letters. Other orientations follow z_{j,i} = (-1)^{j-i} z_{i,j}.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixRep {
    n: usize,
    size: usize,
    params: Vec<i64>,
    images: BTreeMap<(usize, usize), Matrix>,
}

impl MatrixRep {
    /// Generators missing from `images` map to zero.
    pub fn new(
        n: usize,
        size: usize,
        params: Vec<i64>,
        images: BTreeMap<(usize, usize), Matrix>,
    ) -> Result<Self, PiRepError> {
        let ring = ZRing::signed(n)?;
        let mut full = BTreeMap::new();
        for g in ring.generators() {
            let key = (g.lo(), g.hi());
            let m = images.get(&key).cloned().unwrap_or_else(|| Matrix::zero(size));
            if m.size() != size {
                return Err(PiRepError::Size(key.0, key.1));
            }
            full.insert(key, m);
        }
        Ok(Self { n, size, params, images: full })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn params(&self) -> &[i64] {
        &self.params
    }

    /// Images of the generators z_{i,j} with i < j.
    pub fn images(&self) -> &BTreeMap<(usize, usize), Matrix> {
        &self.images
    }

    /// The image of z_{i,j} for either orientation.
    pub fn image(&self, i: usize, j: usize) -> Matrix {
        let (lo, hi) = (i.min(j), i.max(j));
        let m = &self.images[&(lo, hi)];
        if i > j && (hi - lo) % 2 == 1 {
            m.scale(-1)
        } else {
            m.clone()
        }
    }

    /// The image of an element of Z.
    pub fn apply(&self, e: &ZElement) -> Matrix {
        let mut out = Matrix::zero(self.size);
        for m in e.terms() {
            let prod = m
                .factors
                .iter()
                .fold(Matrix::identity(self.size), |acc, g| acc.mul(&self.image(g.lo(), g.hi())));
            out = out.add(&prod.scale(m.sign));
        }
        out
    }

    /// Flips the sign of the listed generators.
    pub fn rescaled(&self, negate: &[(usize, usize)]) -> Self {
        let mut out = self.clone();
        for key in negate {
            if let Some(m) = out.images.get_mut(key) {
                *m = m.scale(-1);
            }
        }
        out
    }
}

/// z_{1,2} -> (t1) on two letters.
pub fn rep_trivial(t1: i64) -> MatrixRep {
    let images = BTreeMap::from([((1, 2), Matrix::from_rows(&[vec![t1]]))]);
    MatrixRep::new(2, 1, vec![t1], images).expect("valid size")
}

/// The absolutely irreducible 2-dimensional representation on three letters:
/// x -> diag(t1, 0), y -> diag(0, -t1), z -> t2 [[0, 1], [1, 0]].
pub fn rep_a2(t1: i64, t2: i64) -> MatrixRep {
    let images = BTreeMap::from([
        ((1, 2), Matrix::from_rows(&[vec![t1, 0], vec![0, 0]])),
        ((2, 3), Matrix::from_rows(&[vec![0, 0], vec![0, -t1]])),
        ((1, 3), Matrix::from_rows(&[vec![0, t2], vec![t2, 0]])),
    ]);
    MatrixRep::new(3, 2, vec![t1, t2], images).expect("valid size")
}

/// The 4-dimensional representation of Z/(v, x, y) on four letters, with
/// u = z_{1,2}, w = z_{3,4}, z = z_{1,4}. It satisfies uw + wu = 0,
/// uz + zw = 0 and wz + zu = 0.
pub fn rep_a3_quotient(t1: i64, t2: i64, t3: i64) -> MatrixRep {
    let u = Matrix::from_rows(&[
        vec![t1, 0, 0, 0],
        vec![0, -t1, 0, 0],
        vec![0, 0, 0, -t2],
        vec![0, 0, -t2, 0],
    ]);
    let w = Matrix::from_rows(&[
        vec![0, t2, 0, 0],
        vec![t2, 0, 0, 0],
        vec![0, 0, -t1, 0],
        vec![0, 0, 0, t1],
    ]);
    let z = Matrix::from_rows(&[
        vec![0, 0, t3, 0],
        vec![0, 0, 0, t3],
        vec![t3, 0, 0, 0],
        vec![0, t3, 0, 0],
    ]);
    let images = BTreeMap::from([((1, 2), u), ((3, 4), w), ((1, 4), z)]);
    MatrixRep::new(4, 4, vec![t1, t2, t3], images).expect("valid size")
}

/// Doubles a representation of Z on n-1 letters to one on n letters.
pub fn rep_doubling(base: &MatrixRep, t_new: i64) -> Result<MatrixRep, PiRepError> {
    let report = verify_homomorphism(base);
    if let Some(f) = report.failures.first() {
        return Err(PiRepError::NotHomomorphism(f.clone()));
    }
    let n = base.n + 1;
    let ring = ZRing::signed(n)?;
    let m = base.size;
    let zero = Matrix::zero(m);
    let restrict = |g: ZGen| -> Matrix {
        if g.hi() < n {
            base.image(g.i as usize, g.j as usize)
        } else {
            zero.clone()
        }
    };
    let mut images = BTreeMap::new();
    for g in ring.generators() {
        let key = (g.lo(), g.hi());
        let image = if key == (1, n) {
            let t = Matrix::identity(m).scale(t_new);
            Matrix::blocks(&zero, &t, &t, &zero)
        } else {
            let (s, h) = ring.dagger_gen(g);
            Matrix::blocks(&restrict(g), &zero, &zero, &restrict(h).scale(s))
        };
        images.insert(key, image);
    }
    let mut params = base.params.clone();
    params.push(t_new);
    MatrixRep::new(n, 2 * m, params, images)
}

/// Doubles from the one-dimensional representation on two letters up to n
/// letters, using parameters t_1, ..., t_{n-1}.
pub fn rep_recursive(n: usize, params: &[i64]) -> Result<MatrixRep, PiRepError> {
    if n < 2 || params.len() != n - 1 {
        return Err(PiRepError::Parameters { expected: n.saturating_sub(1).max(1), got: params.len() });
    }
    let mut rep = rep_trivial(params[0]);
    for &t in &params[1..] {
        rep = rep_doubling(&rep, t)?;
    }
    Ok(rep)
}

/// Outcome of checking the defining relations of Z on a representation.
#[derive(Clone, Debug, Serialize)]
pub struct HomomorphismReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for every ordered pair of generators z_{i,j}, z_{i',j'} in either
/// orientation, whichever defining relation applies: reflection when
/// [i',j'] ⊆ [i,j], graded commutation when disjoint, zero when the spans
/// overlap without nesting.
pub fn verify_homomorphism(rep: &MatrixRep) -> HomomorphismReport {
    let n = rep.n;
    let mut checked = 0;
    let mut failures = Vec::new();
    let oriented: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let span = |(i, j): (usize, usize)| (i.min(j), i.max(j));
    for &(i, j) in &oriented {
        for &(k, l) in &oriented {
            let (a, b) = span((i, j));
            let (c, d) = span((k, l));
            let lhs = rep.image(i, j).mul(&rep.image(k, l));
            let sign = if (b - a) * (d - c) % 2 == 1 { -1 } else { 1 };
            let (rhs, name) = if a <= c && d <= b {
                let r = rep.image(i + j - k, i + j - l).mul(&rep.image(i, j)).scale(sign);
                (r, "reflection")
            } else if b < c || d < a {
                (rep.image(k, l).mul(&rep.image(i, j)).scale(sign), "commutation")
            } else if c <= a && b <= d {
                continue;
            } else {
                (Matrix::zero(rep.size), "overlap")
            };
            checked += 1;
            if lhs != rhs {
                failures.push(format!("{name}: z[{i},{j}] z[{k},{l}]"));
            }
        }
    }
    HomomorphismReport { checked, failures }
}

/// Dimension over F_p of the unital subalgebra generated by the images.
pub fn image_dimension(rep: &MatrixRep, p: u64) -> usize {
    let gens: Vec<Matrix> = rep.images.values().map(|m| m.reduce_mod(p)).collect();
    let flat = |m: &Matrix| m.entries().iter().map(|&v| v as u64).collect::<Vec<u64>>();
    let mut basis = Echelon::new(p);
    let one = Matrix::identity(rep.size);
    basis.insert(flat(&one));
    let mut queue = vec![one];
    while let Some(m) = queue.pop() {
        for g in &gens {
            let prod = m.mul(g).reduce_mod(p);
            if basis.insert(flat(&prod)) {
                queue.push(prod);
            }
        }
    }
    basis.len()
}

/// The embedding of a graded tensor product of polynomial rings into 2x2
/// matrices: t_j of even degree goes to u_j I, odd t_j with j < split to
/// diag(u_j, -u_j) and odd t_j with j >= split to [[0, u_j], [u_j, 0]].
pub fn graded_tensor_embedding(degrees: &[u32], split: usize, u: &[i64]) -> Vec<Matrix> {
    degrees
        .iter()
        .zip(u)
        .enumerate()
        .map(|(j, (&d, &uj))| {
            let rows = if d % 2 == 0 {
                vec![vec![uj, 0], vec![0, uj]]
            } else if j < split {
                vec![vec![uj, 0], vec![0, -uj]]
            } else {
                vec![vec![0, uj], vec![uj, 0]]
            };
            Matrix::from_rows(&rows)
        })
        .collect()
}

/// Canonical monomials of degree -d in Z' (no factor z_{1,n}).
pub fn z_prime_monomials(n: usize, d: usize) -> Vec<Vec<ZGen>> {
    enumerate_canonical(n, d).into_iter().filter(|m| m.iter().all(|g| g.degree() < n - 1)).collect()
}

/// Images of `e` in Z[1,i] ⊗ Z[i+1,n] for 1 <= i < n.
pub fn window_images(e: &ZElement) -> Vec<ZElement> {
    let n = e.ring().n();
    (1..n).map(|i| e.quotient_windows(&[(1, i), (i + 1, n)])).collect()
}

/// Whether Z' -> ⊕ Z[1,i] ⊗ Z[i+1,n] is injective in degree -d: the images of
/// the canonical monomials are linearly independent.
pub fn windows_detect(n: usize, d: usize) -> Result<bool, PiRepError> {
    let ring = ZRing::signed(n)?;
    let monomials = z_prime_monomials(n, d);
    let mut columns: BTreeMap<(usize, Vec<ZGen>), usize> = BTreeMap::new();
    let mut entries = Vec::new();
    for m in &monomials {
        let e = ring.normalize(m)?.map(|x| ring.from_monomial(&x)).unwrap_or_else(|| ring.zero());
        let mut row = Vec::new();
        for (i, img) in window_images(&e).into_iter().enumerate() {
            for t in img.terms() {
                let next = columns.len();
                let c = *columns.entry((i, t.factors)).or_insert(next);
                row.push((c, t.sign));
            }
        }
        entries.push(row);
    }
    let rows: Vec<Vec<i64>> = entries
        .iter()
        .map(|row| {
            let mut r = vec![0; columns.len()];
            for &(c, v) in row {
                r[c] += v;
            }
            r
        })
        .collect();
    Ok(rows.is_empty() || rank_of(&Rationals, &rows) == monomials.len())
}

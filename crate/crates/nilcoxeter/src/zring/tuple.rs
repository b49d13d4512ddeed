//! The bijection between canonical monomials and tuples of nonnegative integers.

use super::{ZError, ZGen, ZMonomial, ZRing, MAX_N};

/// t_k = number of factors [i,j] with i <= k < j, for k = 1..n-1.
pub fn multidegree(factors: &[ZGen], n: usize) -> Vec<u32> {
    let mut t = vec![0u32; n - 1];
    for g in factors {
        for tk in &mut t[g.lo() - 1..g.hi() - 1] {
            *tk += 1;
        }
    }
    t
}

/// Inverse of [`f_encode`].
pub fn f_decode(m: &ZMonomial, n: usize) -> Vec<u32> {
    multidegree(&m.factors, n)
}

/// The canonical monomial attached to an (n-1)-tuple.
///
/// f(0,...,0) = 1 and f(t) = f(t') z_{i_1,j_1+1} ... z_{i_r,j_r+1} put in
/// canonical form, where [i_s,j_s] are the maximal runs of {k : t_k > 0} and
/// t' = max(t - 1, 0).
pub fn f_encode(t: &[u32]) -> Result<ZMonomial, ZError> {
    let n = t.len() + 1;
    let ring = ZRing::signless(n)?;
    if t.iter().all(|&x| x == 0) {
        return Ok(ZMonomial::one());
    }
    let reduced: Vec<u32> = t.iter().map(|&x| x.saturating_sub(1)).collect();
    let mut m = f_encode(&reduced)?;
    for g in runs(t) {
        ring.insert_right(&mut m.factors, g)
            .expect("the appended run generators never overlap earlier factors");
    }
    Ok(m)
}

/// Generators z_{i,j+1} for the maximal runs [i,j] of the support of `t`.
fn runs(t: &[u32]) -> Vec<ZGen> {
    let mut out = Vec::new();
    let mut k = 0;
    while k < t.len() {
        if t[k] == 0 {
            k += 1;
            continue;
        }
        let start = k;
        while k < t.len() && t[k] > 0 {
            k += 1;
        }
        out.push(ZGen::new(start + 1, k + 1));
    }
    out
}

/// All canonical monomials of degree -d, built directly from the definition
/// of canonical form, in lexicographic order of their factor lists.
pub fn enumerate_canonical(n: usize, d: usize) -> Vec<Vec<ZGen>> {
    assert!((2..=MAX_N).contains(&n));
    let mut gens = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            gens.push(ZGen::new(i, j));
        }
    }
    gens.sort();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend_canonical(&gens, d, &mut cur, &mut out);
    out
}

fn extend_canonical(gens: &[ZGen], left: usize, cur: &mut Vec<ZGen>, out: &mut Vec<Vec<ZGen>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for &g in gens {
        if g.degree() > left {
            continue;
        }
        if let Some(&a) = cur.last() {
            if g.degree() < a.degree() {
                continue;
            }
            if g.degree() == a.degree() && !(a.i == g.i || a.j < g.i) {
                continue;
            }
        }
        if cur.iter().any(|&b| !(g.contains(b) || g.disjoint(b))) {
            continue;
        }
        cur.push(g);
        extend_canonical(gens, left - g.degree(), cur, out);
        cur.pop();
    }
}

/// Rank of the degree -d part of Z on n letters, by enumeration.
pub fn rank(n: usize, d: usize) -> u64 {
    enumerate_canonical(n, d).len() as u64
}

pub fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u64, |acc, k| acc * (a - k) / (k + 1))
}

/// Whether z_{i,j} f(t) is nonzero: t_{i-1} <= t_i, t_{j-1} >= t_j and
/// t_{i-1} <= t_k >= t_j for all i <= k < j, reading t_0 = t_n = 0.
///
/// Equivalently, no level-set interval of t crosses an end of [i, j-1] or
/// abuts it.
pub fn nonzero_mul_criterion(t: &[u32], i: usize, j: usize) -> bool {
    let n = t.len() + 1;
    assert!(1 <= i && i < j && j <= n, "need 1 <= i < j <= n");
    let at = |k: usize| if k == 0 || k >= n { 0 } else { t[k - 1] };
    if at(i - 1) > at(i) || at(j - 1) < at(j) {
        return false;
    }
    (i..j).all(|k| at(i - 1) <= at(k) && at(k) >= at(j))
}

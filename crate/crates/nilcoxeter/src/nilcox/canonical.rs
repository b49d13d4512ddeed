//! Type A canonical forms built from the descending runs Y_[i,j].

use std::sync::Arc;

use super::{NilCoxElement, NilCoxError};
use crate::coxeter::{CoxeterElement, CoxeterGroup};

fn letters(group: &CoxeterGroup) -> Result<usize, NilCoxError> {
    if group.diagram().is_type_a() {
        Ok(group.rank() + 1)
    } else {
        Err(NilCoxError::NotTypeA)
    }
}

/// The word (j-1, j-2, ..., i) of Y_[i,j].
pub fn interval_word(i: usize, j: usize) -> Vec<usize> {
    (i..j).rev().collect()
}

/// The word of Y_[i,j];k = Y_[i,j+1-k] Y_[i+1,j+2-k] ... Y_[i+k-1,j].
pub fn interval_power_word(i: usize, j: usize, k: usize) -> Vec<usize> {
    (0..k).flat_map(|t| interval_word(i + t, j + 1 - k + t)).collect()
}

fn check_interval(n: usize, i: usize, j: usize, k: usize) -> Result<(), NilCoxError> {
    if i == 0 || i > j || j > n || k > j - i {
        return Err(NilCoxError::OutOfRange(format!("[{i},{j}];{k} with n={n}")));
    }
    Ok(())
}

pub fn interval_element(
    group: &Arc<CoxeterGroup>,
    i: usize,
    j: usize,
) -> Result<NilCoxElement, NilCoxError> {
    check_interval(letters(group)?, i, j, 0)?;
    NilCoxElement::from_word(group, &interval_word(i, j))
}

/// Y_w for w the k-th power of the cycle (j j-1 ... i).
pub fn interval_power(
    group: &Arc<CoxeterGroup>,
    i: usize,
    j: usize,
    k: usize,
) -> Result<NilCoxElement, NilCoxError> {
    check_interval(letters(group)?, i, j, k)?;
    NilCoxElement::from_word(group, &interval_power_word(i, j, k))
}

/// The tuple (m_1, ..., m_{n-1}) with Y_w = Y_[1,m_1] Y_[2,m_2] ... Y_[n-1,m_{n-1}].
pub fn canonical_decompose(
    group: &CoxeterGroup,
    w: CoxeterElement,
) -> Result<Vec<usize>, NilCoxError> {
    let n = letters(group)?;
    let mut p = group.permutation(w).ok_or(NilCoxError::NotTypeA)?;
    let mut m = Vec::with_capacity(n - 1);
    for i in 1..n {
        let mi = p[i - 1];
        m.push(mi);
        // Strip the cycle i -> m_i: left multiply by its inverse.
        for v in p.iter_mut() {
            if *v == mi {
                *v = i;
            } else if *v >= i && *v < mi {
                *v += 1;
            }
        }
    }
    Ok(m)
}

pub fn canonical_compose(group: &CoxeterGroup, m: &[usize]) -> Result<CoxeterElement, NilCoxError> {
    let n = letters(group)?;
    if m.len() != n - 1 {
        return Err(NilCoxError::OutOfRange(format!("expected {} entries", n - 1)));
    }
    let mut word = Vec::new();
    for (idx, &mi) in m.iter().enumerate() {
        check_interval(n, idx + 1, mi, 0)?;
        word.extend(interval_word(idx + 1, mi));
    }
    Ok(group.from_word(&word)?)
}

/// The canonical reduced word of `w`.
pub fn canonical_word(group: &CoxeterGroup, w: CoxeterElement) -> Result<Vec<usize>, NilCoxError> {
    let m = canonical_decompose(group, w)?;
    Ok(m.iter()
        .enumerate()
        .flat_map(|(idx, &mi)| interval_word(idx + 1, mi))
        .collect())
}

/// Applies Y_iY_i -> 0, Y_jY_i -> Y_iY_j (j-i >= 2) and
/// Y_i Y_[i,j] -> Y_[i,j] Y_{i+1} (j-i >= 2), leftmost match first.
///
/// Returns `None` when the word reduces to zero.
pub fn rewrite(word: &[usize]) -> Option<Vec<usize>> {
    let mut w = word.to_vec();
    'outer: loop {
        for p in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[p], w[p + 1]);
            if a == b {
                return None;
            }
            if a >= b + 2 {
                w.swap(p, p + 1);
                continue 'outer;
            }
            // Y_i followed by the run j-1, j-2, ..., i with j-1 = b >= i+1.
            if b > a {
                let run = b - a + 1;
                if p + run < w.len() && (0..run).all(|t| w[p + 1 + t] == b - t) {
                    w[p..p + run].copy_from_slice(&interval_word(a, b + 1));
                    w[p + run] = a + 1;
                    continue 'outer;
                }
            }
        }
        return Some(w);
    }
}

/// Dimensions of the Loewy layers of the nilCoxeter algebra of S_n.
pub fn loewy_dims(n: usize) -> Vec<u64> {
    let mut poly = vec![1u64];
    for i in 1..n {
        let mut next = vec![0u64; poly.len() + i];
        for (d, &c) in poly.iter().enumerate() {
            for e in 0..=i {
                next[d + e] += c;
            }
        }
        poly = next;
    }
    poly
}

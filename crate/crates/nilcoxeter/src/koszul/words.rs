//! Normal forms for words in X.
//!
//! Every relation of X is a square or a signed binomial, so a word equals
//! ±1 times each word reachable from it by the binomial moves. A class of
//! such words is zero in X when it contains an adjacent square or, away from
//! characteristic 2, when it reaches one of its words with both signs.
//! Otherwise the least word of the class is its normal form.

use std::collections::{BTreeMap, HashSet};

use super::Orientation;
use crate::zring::ZGen;

fn parity(e: usize) -> i64 {
    if e % 2 == 1 {
        -1
    } else {
        1
    }
}

/// Words `v` with `word = s * v` that differ from `word` by one relation.
fn moves(word: &[ZGen], orientation: Orientation) -> Vec<(Vec<ZGen>, i64)> {
    let mut out = Vec::new();
    for p in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[p], word[p + 1]);
        if a == b {
            continue;
        }
        let e = parity((a.degree() - 1) * (b.degree() - 1));
        let mut swap = |x: ZGen, y: ZGen, s: i64| {
            let mut w = word.to_vec();
            w[p] = x;
            w[p + 1] = y;
            out.push((w, s));
        };
        if a.contains(b) {
            // X_a X_b = e X_{r(b)} X_a
            swap(a.reflect(b).normalized(), a, e * orientation.sign(b.degree()));
        } else if b.contains(a) {
            // X_b X_{r(a)} = e X_a X_b
            swap(b, b.reflect(a).normalized(), e * orientation.sign(a.degree()));
        } else if a.disjoint(b) {
            swap(b, a, e);
        }
    }
    out
}

/// The class of `word`: each reachable word with the sign s in `word = s * v`,
/// and whether the class vanishes.
fn class(word: &[ZGen], orientation: Orientation, char_two: bool) -> (BTreeMap<Vec<ZGen>, i64>, bool) {
    let mut signs = BTreeMap::from([(word.to_vec(), 1)]);
    let mut stack = vec![word.to_vec()];
    let mut zero = false;
    while let Some(x) = stack.pop() {
        zero |= x.windows(2).any(|p| p[0] == p[1]);
        let sx = signs[&x];
        for (y, s) in moves(&x, orientation) {
            match signs.get(&y) {
                Some(&sy) => zero |= !char_two && sy != sx * s,
                None => {
                    signs.insert(y.clone(), sx * s);
                    stack.push(y);
                }
            }
        }
    }
    (signs, zero)
}

/// `Some((s, v))` with `word = s * v` and `v` the normal form, or `None` if
/// the word is zero in X. Generators must have i < j.
pub fn x_normal_form(word: &[ZGen], orientation: Orientation, char_two: bool) -> Option<(i64, Vec<ZGen>)> {
    let (signs, zero) = class(word, orientation, char_two);
    if zero {
        return None;
    }
    signs.into_iter().next().map(|(v, s)| (s, v))
}

/// The normal words of length `w` on n letters, in increasing order.
pub fn x_normal_words(n: usize, w: usize, orientation: Orientation, char_two: bool) -> Vec<Vec<ZGen>> {
    let gens: Vec<ZGen> = (1..n).flat_map(|i| (i + 1..=n).map(move |j| ZGen::new(i, j))).collect();
    let mut seen: HashSet<Vec<ZGen>> = HashSet::new();
    let mut out = Vec::new();
    let mut idx = vec![0; w];
    loop {
        let word: Vec<ZGen> = idx.iter().map(|&k| gens[k]).collect();
        if !seen.contains(&word) {
            let (signs, zero) = class(&word, orientation, char_two);
            if !zero {
                out.push(word);
            }
            seen.extend(signs.into_keys());
        }
        // Next word in lexicographic order.
        let Some(pos) = (0..w).rev().find(|&k| idx[k] + 1 < gens.len()) else {
            break;
        };
        idx[pos] += 1;
        idx[pos + 1..].iter_mut().for_each(|k| *k = 0);
    }
    out
}

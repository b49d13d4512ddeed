//! Concrete models of the classical groups used to build multiplication tables.

use std::hash::Hash;

/// A faithful model of a Coxeter group with a combinatorial length function.
pub(crate) trait Realization {
    type Elem: Clone + Eq + Hash;
    fn identity(&self) -> Self::Elem;
    /// Right multiplication by generator `g` (0-based).
    fn mul_gen(&self, x: &Self::Elem, g: usize) -> Self::Elem;
    fn length(&self, x: &Self::Elem) -> u32;
}

/// Permutations of `n` letters in one-line notation.
pub(crate) struct Permutations {
    pub n: usize,
}

impl Realization for Permutations {
    type Elem = Vec<u8>;

    fn identity(&self) -> Vec<u8> {
        (1..=self.n as u8).collect()
    }

    fn mul_gen(&self, x: &Vec<u8>, g: usize) -> Vec<u8> {
        let mut y = x.clone();
        y.swap(g, g + 1);
        y
    }

    fn length(&self, x: &Vec<u8>) -> u32 {
        inversions(x)
    }
}

/// Signed permutations; generator r-1 (0-based) negates the last letter.
pub(crate) struct SignedPermutations {
    pub n: usize,
}

impl Realization for SignedPermutations {
    type Elem = Vec<i8>;

    fn identity(&self) -> Vec<i8> {
        (1..=self.n as i8).collect()
    }

    fn mul_gen(&self, x: &Vec<i8>, g: usize) -> Vec<i8> {
        let mut y = x.clone();
        if g + 1 < self.n {
            y.swap(g, g + 1);
        } else {
            y[self.n - 1] = -y[self.n - 1];
        }
        y
    }

    fn length(&self, x: &Vec<i8>) -> u32 {
        type_b_length(x)
    }
}

/// Even-signed permutations; generator r-1 (0-based) swaps and negates the last two letters.
pub(crate) struct EvenSignedPermutations {
    pub n: usize,
}

impl Realization for EvenSignedPermutations {
    type Elem = Vec<i8>;

    fn identity(&self) -> Vec<i8> {
        (1..=self.n as i8).collect()
    }

    fn mul_gen(&self, x: &Vec<i8>, g: usize) -> Vec<i8> {
        let mut y = x.clone();
        if g + 1 < self.n {
            y.swap(g, g + 1);
        } else {
            let (a, b) = (y[self.n - 2], y[self.n - 1]);
            y[self.n - 2] = -b;
            y[self.n - 1] = -a;
        }
        y
    }

    fn length(&self, x: &Vec<i8>) -> u32 {
        type_d_length(x)
    }
}

/// Dihedral group of order 2m: (k, false) is (s1 s2)^k, (k, true) is (s1 s2)^k s1.
pub(crate) struct Dihedral {
    pub m: u32,
}

impl Realization for Dihedral {
    type Elem = (u32, bool);

    fn identity(&self) -> (u32, bool) {
        (0, false)
    }

    fn mul_gen(&self, x: &(u32, bool), g: usize) -> (u32, bool) {
        let m = self.m;
        match (g, x.1) {
            (0, f) => (x.0, !f),
            (_, false) => ((x.0 + m - 1) % m, true),
            (_, true) => ((x.0 + 1) % m, false),
        }
    }

    fn length(&self, x: &(u32, bool)) -> u32 {
        let (k, m) = (x.0, self.m);
        if x.1 {
            (2 * k + 1).min(2 * (m - k) - 1)
        } else {
            (2 * k).min(2 * (m - k))
        }
    }
}

/// Number of inversions of a permutation in one-line notation.
pub fn inversions(x: &[u8]) -> u32 {
    let mut inv = 0;
    for a in 0..x.len() {
        for b in a + 1..x.len() {
            if x[a] > x[b] {
                inv += 1;
            }
        }
    }
    inv
}

/// Conjugate by the order-reversing permutation, moving the special generator to the front.
fn reflect_front(x: &[i8]) -> Vec<i8> {
    let n = x.len() as i8;
    x.iter()
        .rev()
        .map(|&v| if v > 0 { n + 1 - v } else { -(n + 1 + v) })
        .collect()
}

fn negative_sum_pairs(v: &[i8]) -> u32 {
    let mut c = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a] + v[b] < 0 {
                c += 1;
            }
        }
    }
    c
}

/// Length in B(n) when the sign-changing generator acts on the last letter:
/// inv + neg + nsp after moving that generator to the front.
pub fn type_b_length(x: &[i8]) -> u32 {
    let v = reflect_front(x);
    let inv = signed_inversions(&v);
    let neg = v.iter().filter(|&&a| a < 0).count() as u32;
    inv + neg + negative_sum_pairs(&v)
}

/// Length in D(n) when the special generator swaps and negates the last two letters:
/// inv + nsp after moving that generator to the front.
pub fn type_d_length(x: &[i8]) -> u32 {
    let v = reflect_front(x);
    signed_inversions(&v) + negative_sum_pairs(&v)
}

fn signed_inversions(v: &[i8]) -> u32 {
    let mut inv = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if v[a] > v[b] {
                inv += 1;
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn check_depths<R: Realization>(r: &R, rank: usize, expected_order: usize) {
        let mut depth = HashMap::from([(r.identity(), 0u32)]);
        let mut queue = VecDeque::from([r.identity()]);
        while let Some(x) = queue.pop_front() {
            let d = depth[&x];
            assert_eq!(r.length(&x), d);
            for g in 0..rank {
                let y = r.mul_gen(&x, g);
                if !depth.contains_key(&y) {
                    depth.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        assert_eq!(depth.len(), expected_order);
    }

    #[test]
    fn lengths_match_bfs_depth() {
        check_depths(&Permutations { n: 5 }, 4, 120);
        check_depths(&SignedPermutations { n: 2 }, 2, 8);
        check_depths(&SignedPermutations { n: 4 }, 4, 384);
        check_depths(&EvenSignedPermutations { n: 4 }, 4, 192);
        check_depths(&EvenSignedPermutations { n: 5 }, 5, 1920);
        for m in 2..9 {
            check_depths(&Dihedral { m }, 2, 2 * m as usize);
        }
    }
}

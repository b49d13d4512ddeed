use std::collections::{HashMap, HashSet};

use super::diagram::{CoxeterDiagram, CoxeterType};
use super::realize::{
    Dihedral, EvenSignedPermutations, Permutations, Realization, SignedPermutations,
};
use super::CoxeterError;

/// Largest group built by default.
pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

/// Most reduced words held in memory at once by the braid-move enumeration.
const WORD_CAP: usize = 4_000_000;

/// Handle to an element of a [`CoxeterGroup`].
///
/// Ids are assigned in ShortLex order of reduced words, so sorting by id sorts
/// by length first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterElement(pub u32);

impl CoxeterElement {
    pub fn id(self) -> usize {
        self.0 as usize
    }
}

/// A finite Coxeter group with precomputed multiplication-by-generator tables.
#[derive(Debug)]
pub struct CoxeterGroup {
    diagram: CoxeterDiagram,
    rank: usize,
    lengths: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    words: Vec<Vec<u8>>,
    level_start: Vec<usize>,
    psi_gen: Vec<usize>,
    psi: Vec<u32>,
    inverse: Vec<u32>,
}

struct Tables {
    lengths: Vec<u32>,
    right: Vec<u32>,
    words: Vec<Vec<u8>>,
}

impl CoxeterGroup {
    pub fn new(diagram: CoxeterDiagram) -> Result<Self, CoxeterError> {
        Self::with_cap(diagram, DEFAULT_ELEMENT_CAP)
    }

    /// Builds the group, failing if it has more than `cap` elements.
    pub fn with_cap(diagram: CoxeterDiagram, cap: usize) -> Result<Self, CoxeterError> {
        let rank = diagram.rank();
        let tables = match diagram.label() {
            CoxeterType::A(r) => from_realization(&Permutations { n: r + 1 }, rank, cap)?,
            CoxeterType::B(r) => from_realization(&SignedPermutations { n: *r }, rank, cap)?,
            CoxeterType::D(r) => from_realization(&EvenSignedPermutations { n: *r }, rank, cap)?,
            CoxeterType::I2(m) => from_realization(&Dihedral { m: *m }, rank, cap)?,
            CoxeterType::H3 | CoxeterType::Matrix => {
                if !is_finite(diagram.bond_matrix()) {
                    return Err(CoxeterError::Infinite);
                }
                from_braid_moves(&diagram, cap)?
            }
        };
        Ok(Self::finish(diagram, tables))
    }

    /// Shorthand for the symmetric group on `n` letters.
    pub fn symmetric(n: usize) -> Result<Self, CoxeterError> {
        Self::new(CoxeterDiagram::symmetric(n)?)
    }

    fn finish(diagram: CoxeterDiagram, t: Tables) -> Self {
        let rank = diagram.rank();
        let size = t.lengths.len();
        let max_len = *t.lengths.last().unwrap_or(&0) as usize;
        let mut level_start = vec![0; max_len + 2];
        for &l in &t.lengths {
            level_start[l as usize + 1] += 1;
        }
        for l in 0..=max_len {
            level_start[l + 1] += level_start[l];
        }
        let mut g = Self {
            diagram,
            rank,
            lengths: t.lengths,
            right: t.right,
            left: vec![0; size * rank],
            words: t.words,
            level_start,
            psi_gen: Vec::new(),
            psi: Vec::new(),
            inverse: vec![0; size],
        };
        for x in 0..size {
            let w = g.words[x].clone();
            for s in 0..rank {
                let mut y = g.right[s];
                for &a in &w {
                    y = g.right[y as usize * rank + a as usize - 1];
                }
                g.left[x * rank + s] = y;
            }
            let mut y = 0u32;
            for &a in w.iter().rev() {
                y = g.right[y as usize * rank + a as usize - 1];
            }
            g.inverse[x] = y;
        }
        let w0 = g.longest_element();
        g.psi_gen = (1..=rank)
            .map(|s| {
                let c = g.mul(g.mul(w0, g.generator(s)), w0);
                g.words[c.id()][0] as usize
            })
            .collect();
        g.psi = (0..size)
            .map(|x| {
                let mut y = 0u32;
                for &a in &g.words[x] {
                    y = g.right[y as usize * rank + g.psi_gen[a as usize - 1] - 1];
                }
                y
            })
            .collect();
        g
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn identity(&self) -> CoxeterElement {
        CoxeterElement(0)
    }

    /// The Coxeter generator s_i (1-based).
    pub fn generator(&self, i: usize) -> CoxeterElement {
        CoxeterElement(self.right[i - 1])
    }

    pub fn length(&self, w: CoxeterElement) -> u32 {
        self.lengths[w.id()]
    }

    pub fn max_length(&self) -> u32 {
        *self.lengths.last().unwrap_or(&0)
    }

    pub fn element(&self, id: usize) -> CoxeterElement {
        assert!(id < self.order(), "element id out of range");
        CoxeterElement(id as u32)
    }

    fn check_gen(&self, i: usize) -> Result<(), CoxeterError> {
        if i == 0 || i > self.rank {
            Err(CoxeterError::BadGenerator { index: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    /// Returns w·s_i and +1 if the length went up, -1 if it went down.
    pub fn right_mul_gen(
        &self,
        w: CoxeterElement,
        i: usize,
    ) -> Result<(CoxeterElement, i8), CoxeterError> {
        self.check_gen(i)?;
        let y = CoxeterElement(self.right[w.id() * self.rank + i - 1]);
        let sign = if self.length(y) > self.length(w) { 1 } else { -1 };
        Ok((y, sign))
    }

    /// Returns s_i·w and the direction of the length change.
    pub fn left_mul_gen(
        &self,
        w: CoxeterElement,
        i: usize,
    ) -> Result<(CoxeterElement, i8), CoxeterError> {
        self.check_gen(i)?;
        let y = CoxeterElement(self.left[w.id() * self.rank + i - 1]);
        let sign = if self.length(y) > self.length(w) { 1 } else { -1 };
        Ok((y, sign))
    }

    #[inline]
    pub(crate) fn right_gen_unchecked(&self, w: CoxeterElement, i: usize) -> CoxeterElement {
        CoxeterElement(self.right[w.id() * self.rank + i - 1])
    }

    /// The ShortLex-least reduced word (1-based letters).
    pub fn reduced_word(&self, w: CoxeterElement) -> Vec<usize> {
        self.words[w.id()].iter().map(|&a| a as usize).collect()
    }

    /// Every reduced word of `w`, sorted lexicographically.
    pub fn reduced_words(&self, w: CoxeterElement) -> Vec<Vec<usize>> {
        braid_closure(&self.words[w.id()], self.diagram.bond_matrix())
            .into_iter()
            .map(|v| v.into_iter().map(usize::from).collect())
            .collect()
    }

    /// Group product of an arbitrary word in the generators.
    pub fn from_word(&self, word: &[usize]) -> Result<CoxeterElement, CoxeterError> {
        let mut y = self.identity();
        for &a in word {
            self.check_gen(a)?;
            y = self.right_gen_unchecked(y, a);
        }
        Ok(y)
    }

    /// Group product u·v.
    pub fn mul(&self, u: CoxeterElement, v: CoxeterElement) -> CoxeterElement {
        let mut y = u;
        for &a in &self.words[v.id()] {
            y = self.right_gen_unchecked(y, a as usize);
        }
        y
    }

    /// u·v when the lengths add, the nilCoxeter product rule; `None` otherwise.
    pub fn length_additive_mul(&self, u: CoxeterElement, v: CoxeterElement) -> Option<CoxeterElement> {
        let mut y = u;
        for &a in &self.words[v.id()] {
            let z = self.right_gen_unchecked(y, a as usize);
            if self.lengths[z.id()] < self.lengths[y.id()] {
                return None;
            }
            y = z;
        }
        Some(y)
    }

    pub fn inverse(&self, w: CoxeterElement) -> CoxeterElement {
        CoxeterElement(self.inverse[w.id()])
    }

    /// Elements grouped by length, each group in id order.
    pub fn enumerate(&self) -> Vec<Vec<CoxeterElement>> {
        (0..self.level_start.len() - 1)
            .map(|l| {
                (self.level_start[l]..self.level_start[l + 1])
                    .map(|x| CoxeterElement(x as u32))
                    .collect()
            })
            .collect()
    }

    /// All elements in id order.
    pub fn elements(&self) -> impl Iterator<Item = CoxeterElement> + '_ {
        (0..self.order()).map(|x| CoxeterElement(x as u32))
    }

    /// Number of elements of each length.
    pub fn length_counts(&self) -> Vec<u64> {
        self.level_start.windows(2).map(|w| (w[1] - w[0]) as u64).collect()
    }

    pub fn longest_element(&self) -> CoxeterElement {
        CoxeterElement(self.order() as u32 - 1)
    }

    /// Conjugation by the longest element.
    pub fn psi(&self, w: CoxeterElement) -> CoxeterElement {
        CoxeterElement(self.psi[w.id()])
    }

    /// The permutation of generator indices induced by `psi`.
    pub fn psi_on_generators(&self) -> Vec<usize> {
        self.psi_gen.clone()
    }

    /// Right descent set {i : l(w s_i) < l(w)}.
    pub fn right_descents(&self, w: CoxeterElement) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&i| self.length(self.right_gen_unchecked(w, i)) < self.length(w))
            .collect()
    }

    /// One-line notation of a type A element as a permutation of 1..=n.
    pub fn permutation(&self, w: CoxeterElement) -> Option<Vec<usize>> {
        if !self.diagram.is_type_a() {
            return None;
        }
        let mut p: Vec<usize> = (1..=self.rank + 1).collect();
        for &a in &self.words[w.id()] {
            p.swap(a as usize - 1, a as usize);
        }
        Some(p)
    }

    /// The type A element with the given one-line notation.
    pub fn from_permutation(&self, perm: &[usize]) -> Result<CoxeterElement, CoxeterError> {
        let n = self.rank + 1;
        if !self.diagram.is_type_a() || perm.len() != n {
            return Err(CoxeterError::BadPermutation(format!("{perm:?}")));
        }
        let mut seen = vec![false; n + 1];
        for &v in perm {
            if v == 0 || v > n || seen[v] {
                return Err(CoxeterError::BadPermutation(format!("{perm:?}")));
            }
            seen[v] = true;
        }
        // Bubble sort the one-line word down to the identity, recording swaps.
        let mut p = perm.to_vec();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..n - 1).find(|&i| p[i] > p[i + 1]) else { break };
            p.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        self.from_word(&word)
    }
}

fn from_realization<R: Realization>(
    real: &R,
    rank: usize,
    cap: usize,
) -> Result<Tables, CoxeterError> {
    let mut ids: HashMap<R::Elem, u32> = HashMap::new();
    let mut elems: Vec<R::Elem> = vec![real.identity()];
    let mut lengths = vec![0u32];
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    ids.insert(real.identity(), 0);
    let mut level = 0..1usize;
    while !level.is_empty() {
        let next_start = elems.len();
        for x in level.clone() {
            for g in 0..rank {
                let y = real.mul_gen(&elems[x], g);
                if !ids.contains_key(&y) {
                    if elems.len() >= cap {
                        return Err(CoxeterError::TooLarge(cap));
                    }
                    let l = lengths[x] + 1;
                    debug_assert_eq!(real.length(&y), l, "combinatorial length disagrees with BFS depth");
                    ids.insert(y.clone(), elems.len() as u32);
                    let mut w = words[x].clone();
                    w.push(g as u8 + 1);
                    words.push(w);
                    lengths.push(l);
                    elems.push(y);
                }
            }
        }
        level = next_start..elems.len();
    }
    let mut right = vec![0u32; elems.len() * rank];
    for (x, e) in elems.iter().enumerate() {
        for g in 0..rank {
            right[x * rank + g] = ids[&real.mul_gen(e, g)];
        }
    }
    Ok(Tables { lengths, right, words })
}

/// A Coxeter group is finite iff its cosine Gram matrix is positive definite.
pub(crate) fn is_finite(bond: &[Vec<u32>]) -> bool {
    let n = bond.len();
    let mut a: Vec<Vec<f64>> = bond
        .iter()
        .map(|row| {
            row.iter()
                .map(|&m| -(std::f64::consts::PI / m as f64).cos())
                .collect()
        })
        .collect();
    for k in 0..n {
        if a[k][k] <= 1e-9 {
            return false;
        }
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    true
}

/// Builds the tables from the bond matrix alone, deciding equality of
/// elements by closing reduced words under braid moves.
fn from_braid_moves(diagram: &CoxeterDiagram, cap: usize) -> Result<Tables, CoxeterError> {
    let rank = diagram.rank();
    let bond = diagram.bond_matrix();
    let mut lengths = vec![0u32];
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut right: Vec<u32> = Vec::new();
    let mut prev_ids: HashMap<Vec<u8>, u32> = HashMap::new();
    let mut cur_ids: HashMap<Vec<u8>, u32> = HashMap::from([(Vec::new(), 0)]);
    let mut cur_classes: Vec<Vec<Vec<u8>>> = vec![vec![Vec::new()]];
    let mut cur_start = 0usize;
    while !cur_classes.is_empty() {
        let mut stored = 0usize;
        let mut next_ids: HashMap<Vec<u8>, u32> = HashMap::new();
        let mut next_classes: Vec<Vec<Vec<u8>>> = Vec::new();
        for (off, class) in cur_classes.iter().enumerate() {
            let x = cur_start + off;
            for g in 0..rank {
                let letter = g as u8 + 1;
                let target = if let Some(w) = class.iter().find(|w| w.last() == Some(&letter)) {
                    prev_ids[&w[..w.len() - 1]]
                } else {
                    let mut cand = words[x].clone();
                    cand.push(letter);
                    if let Some(&id) = next_ids.get(&cand) {
                        id
                    } else {
                        if lengths.len() >= cap {
                            return Err(CoxeterError::TooLarge(cap));
                        }
                        let id = lengths.len() as u32;
                        let closure = braid_closure(&cand, bond);
                        stored += closure.len();
                        if stored > WORD_CAP {
                            return Err(CoxeterError::TooLarge(cap));
                        }
                        for w in &closure {
                            next_ids.insert(w.clone(), id);
                        }
                        lengths.push(lengths[x] + 1);
                        words.push(cand);
                        next_classes.push(closure);
                        id
                    }
                };
                right.push(target);
            }
        }
        cur_start += cur_classes.len();
        prev_ids = std::mem::replace(&mut cur_ids, next_ids);
        cur_classes = next_classes;
    }
    Ok(Tables { lengths, right, words })
}

/// All words obtained from `word` by braid moves.
fn braid_closure(word: &[u8], bond: &[Vec<u32>]) -> Vec<Vec<u8>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::from([word.to_vec()]);
    let mut stack = vec![word.to_vec()];
    while let Some(w) = stack.pop() {
        for p in 0..w.len() {
            let s = w[p];
            if p + 1 >= w.len() {
                break;
            }
            let t = w[p + 1];
            if s == t {
                continue;
            }
            let m = bond[s as usize - 1][t as usize - 1] as usize;
            if p + m > w.len() {
                continue;
            }
            let alternates = (0..m).all(|q| w[p + q] == if q % 2 == 0 { s } else { t });
            if !alternates {
                continue;
            }
            let mut v = w.clone();
            for q in 0..m {
                v[p + q] = if q % 2 == 0 { t } else { s };
            }
            if seen.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    let mut out: Vec<Vec<u8>> = seen.into_iter().collect();
    out.sort();
    out
}

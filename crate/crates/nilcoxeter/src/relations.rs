//! Checking quadratic relation lists against computed products.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use serde::Serialize;

use crate::linalg::{row_reduce, PrimeField};

/// A relation Σ c · a b among generators.
pub type QuadRelation<K> = Vec<(i64, K, K)>;

/// Products of generator pairs as sparse integer vectors in a basis of the
/// target degree. Basis indices are global across degrees.
pub struct ProductTable<K> {
    products: HashMap<(K, K), Vec<(usize, i64)>>,
}

impl<K: Clone + Eq + Hash + Ord> ProductTable<K> {
    pub fn new() -> Self {
        Self { products: HashMap::new() }
    }

    pub fn insert(&mut self, a: K, b: K, product: Vec<(usize, i64)>) {
        self.products.insert((a, b), product);
    }

    pub fn get(&self, a: &K, b: &K) -> Option<&Vec<(usize, i64)>> {
        self.products.get(&(a.clone(), b.clone()))
    }

    fn generators(&self) -> Vec<K> {
        let mut g: Vec<K> = self.products.keys().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        g.sort();
        g.dedup();
        g
    }

    fn holds(&self, rel: &QuadRelation<K>, eps: &HashMap<K, i64>, field: &PrimeField) -> bool {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (c, a, b) in rel {
            let s = eps.get(a).copied().unwrap_or(1) * eps.get(b).copied().unwrap_or(1);
            for &(i, v) in self.get(a, b).into_iter().flatten() {
                *acc.entry(i).or_insert(0) += c * s * v;
            }
        }
        acc.values().all(|&v| field.reduce(v) == 0)
    }

    /// Signs on the generators, the first fixed to +1, under which every
    /// relation holds mod p.
    pub fn find_rescaling(&self, relations: &[QuadRelation<K>], p: u64) -> Option<Vec<(K, i64)>> {
        let field = PrimeField::new(p);
        let gens = self.generators();
        let free = gens.len().saturating_sub(1);
        assert!(free < 24, "too many generators for a sign search");
        for mask in 0u64..(1 << free) {
            let eps: HashMap<K, i64> = gens
                .iter()
                .enumerate()
                .map(|(i, g)| (g.clone(), if i > 0 && mask >> (i - 1) & 1 == 1 { -1 } else { 1 }))
                .collect();
            if relations.iter().all(|r| self.holds(r, &eps, &field)) {
                return Some(gens.iter().map(|g| (g.clone(), eps[g])).collect());
            }
        }
        None
    }

    /// Dimension of the space of linear relations among the products mod p.
    pub fn kernel_dim(&self, p: u64) -> usize {
        let field = PrimeField::new(p);
        let pairs: Vec<&(K, K)> = self.products.keys().collect();
        let mut targets: Vec<usize> = self.products.values().flatten().map(|&(i, _)| i).collect();
        targets.sort_unstable();
        targets.dedup();
        let index: HashMap<usize, usize> = targets.iter().enumerate().map(|(r, &i)| (i, r)).collect();
        let mut rows = vec![vec![0u64; pairs.len()]; targets.len()];
        for (c, pair) in pairs.iter().enumerate() {
            for &(i, v) in &self.products[*pair] {
                let r = index[&i];
                rows[r][c] = (rows[r][c] + field.reduce(v)) % p;
            }
        }
        let rank = if pairs.is_empty() { 0 } else { row_reduce(&field, &mut rows).len() };
        pairs.len() - rank
    }

    /// Rank of the relations as vectors in the span of generator pairs,
    /// after applying the signs `eps`.
    pub fn relations_rank(&self, relations: &[QuadRelation<K>], eps: &[(K, i64)], p: u64) -> usize {
        let field = PrimeField::new(p);
        let eps: HashMap<&K, i64> = eps.iter().map(|(k, s)| (k, *s)).collect();
        let mut pairs: Vec<(K, K)> = self.products.keys().cloned().collect();
        pairs.sort();
        let col: HashMap<&(K, K), usize> = pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows: Vec<Vec<u64>> = relations
            .iter()
            .map(|r| {
                let mut row = vec![0u64; pairs.len()];
                for (c, a, b) in r {
                    let s = eps.get(a).copied().unwrap_or(1) * eps.get(b).copied().unwrap_or(1);
                    if let Some(&i) = col.get(&(a.clone(), b.clone())) {
                        row[i] = (row[i] + field.reduce(c * s)) % p;
                    }
                }
                row
            })
            .collect();
        if pairs.is_empty() {
            0
        } else {
            row_reduce(&field, &mut rows).len()
        }
    }

    /// Rescaling search plus a completeness comparison.
    pub fn check(&self, relations: &[QuadRelation<K>], p: u64) -> RelationReport<K> {
        let rescaling = self.find_rescaling(relations, p);
        let eps = rescaling.clone().unwrap_or_default();
        RelationReport {
            kernel_dim: self.kernel_dim(p),
            relations_rank: self.relations_rank(relations, &eps, p),
            rescaling,
        }
    }
}

impl<K: Clone + Eq + Hash + Ord> Default for ProductTable<K> {
    fn default() -> Self {
        Self::new()
    }
}

/// How a relation list compares with computed products mod p.
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport<K> {
    /// Signs on the generators making every relation hold, if any exist.
    pub rescaling: Option<Vec<(K, i64)>>,
    /// Dimension of the space of relations among the computed products.
    pub kernel_dim: usize,
    /// Rank of the given relations after rescaling.
    pub relations_rank: usize,
}

impl<K> RelationReport<K> {
    /// The relations hold after rescaling and span all relations.
    pub fn complete(&self) -> bool {
        self.rescaling.is_some() && self.kernel_dim == self.relations_rank
    }
}

/// Parses `ux+xv`, `uz-zw` or `uv` (meaning uv = 0) into a relation over
/// single-letter generator names.
pub fn parse_relation(s: &str) -> Option<QuadRelation<char>> {
    let mut out = Vec::new();
    let mut sign = 1;
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            '+' => sign = 1,
            '-' => sign = -1,
            a if a.is_alphabetic() => {
                let b = *chars.get(i + 1).filter(|b| b.is_alphabetic())?;
                out.push((sign, a, b));
                i += 1;
            }
            _ => return None,
        }
        i += 1;
    }
    (!out.is_empty()).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_relations() {
        assert_eq!(parse_relation("ux+xv"), Some(vec![(1, 'u', 'x'), (1, 'x', 'v')]));
        assert_eq!(parse_relation("uz-zw"), Some(vec![(1, 'u', 'z'), (-1, 'z', 'w')]));
        assert_eq!(parse_relation("uv"), Some(vec![(1, 'u', 'v')]));
        assert_eq!(parse_relation("u"), None);
        assert_eq!(parse_relation("u*v"), None);
    }

    #[test]
    fn rescaling_search() {
        // a b = c a after flipping the sign of b or of c.
        let mut t = ProductTable::new();
        t.insert('a', 'b', vec![(0, 1)]);
        t.insert('c', 'a', vec![(0, -1)]);
        t.insert('a', 'a', vec![(1, 1)]);
        let rels = vec![vec![(1, 'a', 'b'), (-1, 'c', 'a')]];
        let r = t.check(&rels, 5);
        assert!(r.complete(), "{r:?}");
        let eps = r.rescaling.unwrap();
        assert_eq!(eps[0], ('a', 1));
        assert_eq!(eps[1].1 * eps[2].1, -1);
        assert!(t.check(&[vec![(1, 'a', 'a')]], 5).rescaling.is_none());
    }
}

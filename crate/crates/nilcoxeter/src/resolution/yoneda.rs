//! Yoneda products computed by lifting cocycles through the complex.
//!
//! The class dual to a cell u of degree b lifts to chain maps
//! β_s: C_{b+s} -> C_s with β_s(ž_v) = h(β_{s-1}(d ž_v)). The product α·β
//! evaluates α on β_a.

use std::collections::HashMap;

use serde::Serialize;

use super::{Cell, ChainElement, Resolution, ResolutionError};
use crate::relations::{ProductTable, QuadRelation, RelationReport};
use crate::zring::{ZGen, ZMonomial, ZRing};
use crate::zring::{f_encode, ZElement};

struct Lift<'a> {
    res: &'a Resolution,
    beta: Cell,
    degree: u32,
    memo: HashMap<Cell, ChainElement>,
}

impl<'a> Lift<'a> {
    fn new(res: &'a Resolution, beta: &[u32]) -> Self {
        Self { res, beta: beta.to_vec(), degree: beta.iter().sum(), memo: HashMap::new() }
    }

    fn image(&mut self, v: &[u32]) -> Result<ChainElement, ResolutionError> {
        if let Some(e) = self.memo.get(v) {
            return Ok(e.clone());
        }
        let total: u32 = v.iter().sum();
        let g = self.res.group().clone();
        let out = if total == self.degree {
            if v == self.beta.as_slice() {
                ChainElement::monomial(vec![0; v.len()], g.identity(), 1)
            } else {
                ChainElement::zero()
            }
        } else {
            let mut lower = ChainElement::zero();
            for (u, w, c) in self.res.boundary(v)?.terms() {
                lower = lower.add(&self.image(u)?.left_mul(&g, w).scale(c));
            }
            let up = self.res.homotopy(&lower);
            if self.res.total_d(&up) != lower {
                return Err(ResolutionError::Lift(format!("cell {v:?} over {:?}", self.beta)));
            }
            up
        };
        self.memo.insert(v.to_vec(), out.clone());
        Ok(out)
    }
}

/// The product of the classes dual to the cells `alpha` and `beta`, as
/// integer coefficients on the cells of the sum of their degrees.
pub fn yoneda_product(
    res: &Resolution,
    alpha: &[u32],
    beta: &[u32],
) -> Result<Vec<(Cell, i64)>, ResolutionError> {
    let a: u32 = alpha.iter().sum();
    let b: u32 = beta.iter().sum();
    let id = res.group().identity();
    let mut lift = Lift::new(res, beta);
    let mut out = Vec::new();
    for v in res.cells(a + b) {
        let c = lift.image(&v)?.coefficient(alpha, id);
        if c != 0 {
            out.push((v, c));
        }
    }
    Ok(out)
}

/// The cell dual to the generator z_{i,j}.
pub fn generator_cell(n: usize, g: ZGen) -> Cell {
    (1..n).map(|m| u32::from(g.lo() <= m && m < g.hi())).collect()
}

/// The Yoneda product of two generators.
#[derive(Clone, Debug, Serialize)]
pub struct StructureConstant {
    pub left: ZGen,
    pub right: ZGen,
    pub product: Vec<(Cell, i64)>,
}

impl StructureConstant {
    /// The product written in the monomial basis of Z, one monomial per cell.
    pub fn as_element(&self, ring: &ZRing) -> ZElement {
        let mut out = ring.zero();
        for (cell, c) in &self.product {
            let m = f_encode(cell).expect("cell tuple");
            let term = ring.from_monomial(&ZMonomial { sign: *c, factors: m.factors });
            out = out.add(&term).expect("same ring");
        }
        out
    }
}

/// Products z·z' of all generator pairs with total degree at most `degree_cap`.
pub fn yoneda_structure_constants(
    res: &Resolution,
    degree_cap: usize,
) -> Result<Vec<StructureConstant>, ResolutionError> {
    let n = res.n();
    let gens = ZRing::signless(n).expect("n in range").generators();
    let mut out = Vec::new();
    for &right in &gens {
        let beta = generator_cell(n, right);
        let mut lift = Lift::new(res, &beta);
        for &left in &gens {
            let total = left.degree() + right.degree();
            if total > degree_cap {
                continue;
            }
            let alpha = generator_cell(n, left);
            let id = res.group().identity();
            let mut product = Vec::new();
            for v in res.cells(total as u32) {
                let c = lift.image(&v)?.coefficient(&alpha, id);
                if c != 0 {
                    product.push((v, c));
                }
            }
            out.push(StructureConstant { left, right, product });
        }
    }
    Ok(out)
}

/// A quadratic relation Σ c · a b among generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub terms: Vec<(i64, ZGen, ZGen)>,
}

impl Relation {
    pub fn new(terms: &[(i64, (usize, usize), (usize, usize))]) -> Self {
        Self {
            terms: terms
                .iter()
                .map(|&(c, (a, b), (x, y))| (c, ZGen::new(a, b), ZGen::new(x, y)))
                .collect(),
        }
    }
}

/// Searches the ±1 rescalings of the generators for one satisfying every
/// relation mod p, and compares the relation count with the kernel of the
/// product map on the generator pairs involved.
pub fn check_relations(
    constants: &[StructureConstant],
    relations: &[Relation],
    p: u64,
) -> RelationReport<ZGen> {
    let mut cells: Vec<&Cell> = constants.iter().flat_map(|s| s.product.iter().map(|(c, _)| c)).collect();
    cells.sort();
    cells.dedup();
    let index: HashMap<&Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut table = ProductTable::new();
    for s in constants {
        table.insert(s.left, s.right, s.product.iter().map(|(c, v)| (index[c], *v)).collect());
    }
    let rels: Vec<QuadRelation<ZGen>> = relations.iter().map(|r| r.terms.clone()).collect();
    table.check(&rels, p)
}

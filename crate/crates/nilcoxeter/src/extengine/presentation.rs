//! Quadratic presentations of Ext rings of small nilCoxeter algebras, and
//! their comparison with computed Yoneda products.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{ExtError, MinimalResolution};
use crate::relations::{parse_relation, ProductTable, QuadRelation, RelationReport};

/// A generator attached to a connected subdiagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationGenerator {
    pub name: char,
    /// Coxeter generators of the subdiagram, numbered from 1.
    pub letters: Vec<usize>,
}

impl PresentationGenerator {
    /// Degree in the ring, negative of the subdiagram size.
    pub fn degree(&self) -> i32 {
        -(self.letters.len() as i32)
    }

    pub fn mask(&self) -> u32 {
        self.letters.iter().fold(0, |m, &l| m | 1 << (l - 1))
    }
}

/// Generators and quadratic relations of an Ext ring.
#[derive(Clone, Debug, Serialize)]
pub struct Presentation {
    pub tag: String,
    pub generators: Vec<PresentationGenerator>,
    /// Relations like `ux+xv` (sum is zero), `uz-zw` or `uv` (product is zero).
    pub relations: Vec<String>,
}

fn gens(list: &[(char, &[usize])]) -> Vec<PresentationGenerator> {
    list.iter().map(|&(name, letters)| PresentationGenerator { name, letters: letters.to_vec() }).collect()
}

const RANK_TWO_ODD: &[&str] = &["xy", "yx", "xz+zy", "yz+zx"];
const RANK_TWO_EVEN: &[&str] = &["xy", "yx", "xz+zx", "yz+zy"];

const A3: &[&str] = &[
    "uv", "vu", "vw", "wv", "uw+wu", "ux+xv", "vx+xu", "vy+yw", "wy+yv", "uy", "yu", "wx", "xw",
    "uz-zw", "vz-zv", "wz-zu", "xy", "yx", "xz-zy", "yz-zx",
];

const B3: &[&str] = &[
    "uv", "vu", "vw", "wv", "uw+wu", "ux+xv", "vx+xu", "vy+yv", "wy+yw", "uy", "yu", "wx", "xw",
    "uz-zu", "vz-zv", "wz-zw", "xy", "yx", "xz+zx", "yz-zy",
];

const H3: &[&str] = &[
    "uv", "vu", "vw", "wv", "uw+wu", "ux+xv", "vx+xu", "vy+yw", "wy+yv", "uy", "yu", "wx", "xw",
    "uz-zu", "vz-zv", "wz-zw", "xy", "yx", "xz+zx", "yz+zy",
];

const D4: &[&str] = &[
    "pq", "qp", "pr", "rp", "ps", "sp", "qr+rq", "qs+sq", "rs+sr",
    "pt+tq", "qt+tp", "pu+ur", "ru+up", "pv+vs", "sv+vp",
    "qu", "uq", "qv", "vq", "rt", "tr", "rv", "vr", "st", "ts", "su", "us",
    "pw-wp", "px-xp", "py-yp", "qw-wr", "rw-wq", "qx-xs", "sx-xq", "ry-ys", "sy-yr",
    "qy", "yq", "rx", "xr", "sw", "ws", "tu", "ut", "tv", "vt", "uv", "vu",
    "pz+zp", "qz+zq", "rz+zr", "sz+zs",
    "tw+wu", "uw+wt", "tx+xv", "vx+xt", "uy+yv", "vy+yu",
    "ty", "yt", "ux", "xu", "vw", "wv", "tz+zt", "uz+zu", "vz+zv",
    "wx", "xw", "wy", "yw", "xy", "yx", "wz-zw", "xz-zx", "yz-zy",
];

/// The presentation for a tag: `A2`, `A3`, `B2`, `G2`, `I2-odd`, `I2-even`,
/// `I2:m`, `B3`, `H3` or `D4`. Colons are optional, so `B:3` also works.
///
/// D4 uses p for the central node 2 and q, r, s for the nodes 1, 3, 4.
pub fn presentation_table(tag: &str) -> Result<Presentation, ExtError> {
    let key: String = tag.chars().filter(|c| *c != ':').collect::<String>().to_ascii_uppercase();
    let rank_two = [('x', &[1][..]), ('y', &[2][..]), ('z', &[1, 2][..])];
    let rank_three = [
        ('u', &[1][..]),
        ('v', &[2][..]),
        ('w', &[3][..]),
        ('x', &[1, 2][..]),
        ('y', &[2, 3][..]),
        ('z', &[1, 2, 3][..]),
    ];
    let (generators, relations) = match key.as_str() {
        "A2" | "I2-ODD" => (gens(&rank_two), RANK_TWO_ODD),
        "B2" | "G2" | "I2-EVEN" => (gens(&rank_two), RANK_TWO_EVEN),
        "A3" => (gens(&rank_three), A3),
        "B3" => (gens(&rank_three), B3),
        "H3" => (gens(&rank_three), H3),
        "D4" => (
            gens(&[
                ('p', &[2]),
                ('q', &[1]),
                ('r', &[3]),
                ('s', &[4]),
                ('t', &[1, 2]),
                ('u', &[2, 3]),
                ('v', &[2, 4]),
                ('w', &[1, 2, 3]),
                ('x', &[1, 2, 4]),
                ('y', &[2, 3, 4]),
                ('z', &[1, 2, 3, 4]),
            ]),
            D4,
        ),
        k if k.starts_with("I2") => match k[2..].parse::<u32>() {
            Ok(m) if m >= 3 && m % 2 == 1 => (gens(&rank_two), RANK_TWO_ODD),
            Ok(m) if m >= 4 => (gens(&rank_two), RANK_TWO_EVEN),
            _ => return Err(ExtError::UnknownTag(tag.to_string())),
        },
        _ => return Err(ExtError::UnknownTag(tag.to_string())),
    };
    Ok(Presentation {
        tag: tag.to_string(),
        generators,
        relations: relations.iter().map(|s| s.to_string()).collect(),
    })
}

impl Presentation {
    pub fn parsed_relations(&self) -> Vec<QuadRelation<char>> {
        self.relations.iter().map(|r| parse_relation(r).expect("well-formed relation")).collect()
    }

    /// Assigns each generator the resolution generator in homological degree
    /// |J| whose boundary is supported on exactly J and whose internal degree
    /// is the length of the longest element of the parabolic subgroup on J.
    pub fn match_generators(&self, res: &MinimalResolution) -> Result<BTreeMap<char, (usize, usize)>, ExtError> {
        self.match_up_to(res, usize::MAX)
    }

    fn match_up_to(&self, res: &MinimalResolution, cap: usize) -> Result<BTreeMap<char, (usize, usize)>, ExtError> {
        let alg = res.algebra();
        let mut out = BTreeMap::new();
        for g in self.generators.iter().filter(|g| g.letters.len() <= cap) {
            let s = g.letters.len();
            if s > res.len() {
                return Err(ExtError::TooFewSteps { needed: s, have: res.len() });
            }
            let step = res.step(s);
            let degree = alg.top_degree_within(g.mask());
            let found: Vec<usize> = (0..step.rank())
                .filter(|&k| step.supports[k] == g.mask() && step.degrees[k] == degree)
                .collect();
            let [k] = found[..] else {
                return Err(ExtError::Match(g.name));
            };
            out.insert(g.name, (s, k));
        }
        Ok(out)
    }

    /// Yoneda products of all generator pairs with homological degrees
    /// summing to at most `cap`, keyed by name. Product coefficients are on
    /// the generators of F_{a+b}, encoded as `(a+b) << 24 | index`.
    pub fn product_table(&self, res: &MinimalResolution, cap: usize) -> Result<ProductTable<char>, ExtError> {
        let matched = self.match_up_to(res, cap)?;
        let field = *res.algebra().field();
        let mut table = ProductTable::new();
        for (&b_name, &(b, j)) in &matched {
            for (&a_name, &(a, i)) in &matched {
                if a + b > cap {
                    continue;
                }
                let prod = res.yoneda_product((a, i), (b, j))?;
                let coeffs = prod
                    .into_iter()
                    .map(|(k, c)| {
                        debug_assert!(k < 1 << 24);
                        ((a + b) << 24 | k, field.lift(c))
                    })
                    .collect();
                table.insert(a_name, b_name, coeffs);
            }
        }
        Ok(table)
    }

    /// Compares the relations with products of generators in total degree at
    /// most `cap`; relations outside the cap are skipped.
    pub fn check(&self, res: &MinimalResolution, cap: usize) -> Result<RelationReport<char>, ExtError> {
        let table = self.product_table(res, cap)?;
        let rels: Vec<QuadRelation<char>> = self
            .parsed_relations()
            .into_iter()
            .filter(|r| r.iter().all(|(_, a, b)| table.get(a, b).is_some()))
            .collect();
        Ok(table.check(&rels, res.algebra().p()))
    }
}

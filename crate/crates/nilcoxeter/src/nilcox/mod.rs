//! The nilCoxeter algebra of a finite Coxeter group over the integers.
//!
//! The basis is {Y_w : w in W} with Y_u Y_v = Y_{uv} when the lengths add
//! and zero otherwise.

mod canonical;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterDiagram, CoxeterElement, CoxeterError, CoxeterGroup};

pub use canonical::{
    canonical_compose, canonical_decompose, canonical_word, interval_element,
    interval_power, interval_power_word, interval_word, loewy_dims, rewrite,
};

#[derive(Debug, thiserror::Error)]
pub enum NilCoxError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("elements belong to different diagrams")]
    DiagramMismatch,
    #[error("operation needs a type A diagram")]
    NotTypeA,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("integer coefficient overflow")]
    Overflow,
    #[error("bad JSON: {0}")]
    Json(String),
}

/// An integer combination of basis elements Y_w.
#[derive(Clone)]
pub struct NilCoxElement {
    group: Arc<CoxeterGroup>,
    terms: BTreeMap<CoxeterElement, i64>,
}

impl NilCoxElement {
    pub fn zero(group: &Arc<CoxeterGroup>) -> Self {
        Self { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn one(group: &Arc<CoxeterGroup>) -> Self {
        Self::basis(group, group.identity())
    }

    /// The basis element Y_w.
    pub fn basis(group: &Arc<CoxeterGroup>, w: CoxeterElement) -> Self {
        Self { group: group.clone(), terms: BTreeMap::from([(w, 1)]) }
    }

    /// The generator Y_i.
    pub fn generator(group: &Arc<CoxeterGroup>, i: usize) -> Result<Self, NilCoxError> {
        Ok(Self::basis(group, group.from_word(&[i])?))
    }

    /// The product Y_{a_1} ... Y_{a_m}; zero unless the word is reduced.
    pub fn from_word(group: &Arc<CoxeterGroup>, word: &[usize]) -> Result<Self, NilCoxError> {
        let w = group.from_word(word)?;
        if group.length(w) as usize == word.len() {
            Ok(Self::basis(group, w))
        } else {
            Ok(Self::zero(group))
        }
    }

    pub fn from_terms(
        group: &Arc<CoxeterGroup>,
        terms: impl IntoIterator<Item = (CoxeterElement, i64)>,
    ) -> Result<Self, NilCoxError> {
        let mut out = Self::zero(group);
        for (w, c) in terms {
            out.add_term(w, c)?;
        }
        Ok(out)
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in (length, ShortLex) order.
    pub fn terms(&self) -> impl Iterator<Item = (CoxeterElement, i64)> + '_ {
        self.terms.iter().map(|(&w, &c)| (w, c))
    }

    pub fn coefficient(&self, w: CoxeterElement) -> i64 {
        self.terms.get(&w).copied().unwrap_or(0)
    }

    fn add_term(&mut self, w: CoxeterElement, c: i64) -> Result<(), NilCoxError> {
        if c == 0 {
            return Ok(());
        }
        let e = self.terms.entry(w).or_insert(0);
        *e = e.checked_add(c).ok_or(NilCoxError::Overflow)?;
        if *e == 0 {
            self.terms.remove(&w);
        }
        Ok(())
    }

    fn same_group(&self, other: &Self) -> Result<(), NilCoxError> {
        if Arc::ptr_eq(&self.group, &other.group)
            || self.group.diagram() == other.group.diagram()
        {
            Ok(())
        } else {
            Err(NilCoxError::DiagramMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, NilCoxError> {
        self.same_group(other)?;
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, NilCoxError> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, s: i64) -> Result<Self, NilCoxError> {
        let mut out = Self::zero(&self.group);
        for (w, c) in self.terms() {
            out.add_term(w, c.checked_mul(s).ok_or(NilCoxError::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, NilCoxError> {
        self.same_group(other)?;
        let mut out = Self::zero(&self.group);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                if let Some(uv) = self.group.length_additive_mul(u, v) {
                    out.add_term(uv, a.checked_mul(b).ok_or(NilCoxError::Overflow)?)?;
                }
            }
        }
        Ok(out)
    }

    /// The part of degree `d`, the span of Y_w with l(w) = d.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            group: self.group.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| self.group.length(**w) == d)
                .map(|(&w, &c)| (w, c))
                .collect(),
        }
    }

    /// True if every term has length at least one.
    pub fn in_augmentation_ideal(&self) -> bool {
        !self.terms.contains_key(&self.group.identity())
    }

    /// Coefficient of Y_{w_0}.
    pub fn trace(&self) -> i64 {
        self.coefficient(self.group.longest_element())
    }

    /// Y_w maps to Y_{w_0 w w_0}.
    pub fn psi(&self) -> Self {
        Self {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(&w, &c)| (self.group.psi(w), c)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = JsonElement {
            diagram: self.group.diagram().to_string(),
            terms: self
                .terms()
                .map(|(w, c)| JsonTerm { word: self.group.reduced_word(w), coeff: c })
                .collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    /// Reads the JSON element format, building the group from its diagram.
    pub fn from_json(s: &str) -> Result<Self, NilCoxError> {
        let doc: JsonElement =
            serde_json::from_str(s).map_err(|e| NilCoxError::Json(e.to_string()))?;
        let group = Arc::new(CoxeterGroup::new(CoxeterDiagram::parse(&doc.diagram)?)?);
        Self::from_json_doc(&group, doc)
    }

    /// Reads the JSON element format into an existing group.
    pub fn from_json_in(group: &Arc<CoxeterGroup>, s: &str) -> Result<Self, NilCoxError> {
        let doc: JsonElement =
            serde_json::from_str(s).map_err(|e| NilCoxError::Json(e.to_string()))?;
        if CoxeterDiagram::parse(&doc.diagram)? != *group.diagram() {
            return Err(NilCoxError::DiagramMismatch);
        }
        Self::from_json_doc(group, doc)
    }

    fn from_json_doc(group: &Arc<CoxeterGroup>, doc: JsonElement) -> Result<Self, NilCoxError> {
        let mut out = Self::zero(group);
        for t in doc.terms {
            let y = Self::from_word(group, &t.word)?;
            out = out.add(&y.scale(t.coeff)?)?;
        }
        Ok(out)
    }
}

impl PartialEq for NilCoxElement {
    fn eq(&self, other: &Self) -> bool {
        self.group.diagram() == other.group.diagram() && self.terms == other.terms
    }
}

impl Eq for NilCoxElement {}

impl fmt::Debug for NilCoxElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sums like `Y[2,1] - 2*Y[3]`, with `1` for the identity and `0` for zero.
impl fmt::Display for NilCoxElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.terms().enumerate() {
            let word = self.group.reduced_word(w);
            let sym = if word.is_empty() {
                "1".to_string()
            } else {
                let s: Vec<String> = word.iter().map(|a| a.to_string()).collect();
                format!("Y[{}]", s.join(","))
            };
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            match (n, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonElement {
    diagram: String,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    word: Vec<usize>,
    coeff: i64,
}

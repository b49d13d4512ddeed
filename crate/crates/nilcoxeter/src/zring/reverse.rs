//! Passing from canonical form to reversed canonical form.

use super::{text::format_word, ZGen, ZRing};

/// A monomial in reversed canonical form, with orientations as produced by
/// the reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversedForm {
    pub sign: i64,
    pub factors: Vec<ZGen>,
}

impl ReversedForm {
    pub fn text(&self) -> String {
        let w = format_word(&self.factors);
        if self.sign < 0 {
            format!("-{w}")
        } else {
            w
        }
    }
}

/// Each intermediate word when the factors of a canonical monomial are moved
/// to the front one at a time, starting with the last.
///
/// At step s the last factor moves to position s. Factors it crosses that lie
/// strictly inside it are reflected in it; equal and disjoint ones are kept.
pub fn reversal_steps(ring: &ZRing, canonical: &[ZGen]) -> Vec<ReversedForm> {
    let mut w = canonical.to_vec();
    let mut sign = 1;
    let mut out = Vec::new();
    for s in 0..w.len().saturating_sub(1) {
        let x = w.pop().expect("nonempty");
        for c in &mut w[s..] {
            if x.same_interval(*c) {
                continue;
            }
            sign *= ring.cross_sign(x, *c);
            if x.contains(*c) {
                *c = x.reflect(*c);
            }
        }
        w.insert(s, x);
        out.push(ReversedForm { sign, factors: w.clone() });
    }
    out
}

/// The reversed canonical form of a canonical monomial.
pub fn reversed_form(ring: &ZRing, canonical: &[ZGen]) -> ReversedForm {
    reversal_steps(ring, canonical)
        .pop()
        .unwrap_or(ReversedForm { sign: 1, factors: canonical.to_vec() })
}

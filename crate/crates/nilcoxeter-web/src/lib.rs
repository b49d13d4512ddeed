//! Browser bindings. Each export wraps a plain function returning text, so
//! the same code runs in native tests.

use wasm_bindgen::prelude::*;

use nilcoxeter::nilcox::loewy_dims;
use nilcoxeter::pirep::{image_dimension, rep_recursive, verify_homomorphism};
use nilcoxeter::zring::{reversal_steps, ZRing};

pub const MAX_LOEWY_N: usize = 20;
pub const MAX_PIREP_N: usize = 7;

/// Loewy layer dimensions of the nilCoxeter algebra of S_n.
pub fn loewy_text(n: usize) -> Result<String, String> {
    if !(1..=MAX_LOEWY_N).contains(&n) {
        return Err(format!("n must be between 1 and {MAX_LOEWY_N}"));
    }
    let dims: Vec<String> = loewy_dims(n).iter().map(|d| d.to_string()).collect();
    Ok(dims.join(" "))
}

/// Canonical form, reversal steps and reversed canonical form of a monomial.
pub fn normalize_text(word: &str, n: usize, signless: bool) -> Result<String, String> {
    let ring = if signless { ZRing::signless(n) } else { ZRing::signed(n) }.map_err(|e| e.to_string())?;
    let e = ring.parse(word).map_err(|e| e.to_string())?;
    let Some(m) = e.terms().next() else {
        return Ok("canonical 0".into());
    };
    let flip = |t: String| match (m.sign < 0, t.strip_prefix('-')) {
        (false, _) => t,
        (true, Some(rest)) => rest.to_string(),
        (true, None) => format!("-{t}"),
    };
    let mut lines = vec![format!("canonical {m}")];
    let mut last = m.to_string();
    for (k, s) in reversal_steps(&ring, &m.factors).into_iter().enumerate() {
        last = flip(s.text());
        lines.push(format!("step {} {last}", k + 1));
    }
    lines.push(format!("reversed {last}"));
    Ok(lines.join("\n"))
}

/// Matrices of the doubled representation with all parameters 1, its image
/// dimension over F_p and the relation check.
pub fn pirep_text(n: usize, p: u64) -> Result<String, String> {
    if !(2..=MAX_PIREP_N).contains(&n) {
        return Err(format!("n must be between 2 and {MAX_PIREP_N}"));
    }
    if !nilcoxeter::linalg::is_prime(p) {
        return Err(format!("{p} is not a prime"));
    }
    let rep = rep_recursive(n, &vec![1; n - 1]).map_err(|e| e.to_string())?;
    let size = rep.size();
    let dim = image_dimension(&rep, p);
    let hom = verify_homomorphism(&rep);
    let mut out = vec![
        format!("size {size}, image dimension {dim} of {} over F{p}", size * size),
        format!("relations of Z: {} checked, {} failed", hom.checked, hom.failures.len()),
    ];
    if size <= 8 {
        for (&(i, j), m) in rep.images() {
            out.push(format!("z[{i},{j}] ="));
            for row in m.rows() {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
                out.push(format!("  {}", cells.join(" ")));
            }
        }
    }
    Ok(out.join("\n"))
}

#[wasm_bindgen]
pub fn loewy(n: usize) -> Result<String, JsError> {
    loewy_text(n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn normalize(word: &str, n: usize, signless: bool) -> Result<String, JsError> {
    normalize_text(word, n, signless).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn pirep(n: usize, p: u32) -> Result<String, JsError> {
    pirep_text(n, u64::from(p)).map_err(|e| JsError::new(&e))
}

//! Text format: `[5,6][2,4][5,7]^2[1,4]`, an optional leading `-`,
//! `1` for the empty monomial and `0` for zero.

use std::fmt;

use super::{ZElement, ZError, ZGen, ZMonomial, ZRing};

/// Writes a word of generators, collapsing runs of equal factors into powers.
pub fn format_word(word: &[ZGen]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut p = 0;
    while p < word.len() {
        let mut q = p + 1;
        while q < word.len() && word[q] == word[p] {
            q += 1;
        }
        out.push_str(&word[p].to_string());
        if q - p > 1 {
            out.push_str(&format!("^{}", q - p));
        }
        p = q;
    }
    out
}

/// Parses a signed word. `Ok(None)` means the literal `0`.
pub fn parse_word(s: &str) -> Result<Option<(i64, Vec<ZGen>)>, ZError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s.strip_prefix('+').unwrap_or(&s)),
    };
    match body {
        "0" => return Ok(None),
        "1" => return Ok(Some((sign, Vec::new()))),
        "" => return Err(ZError::Parse("empty monomial".into())),
        _ => {}
    }
    let bad = || ZError::Parse(format!("cannot parse {s:?}"));
    let mut word = Vec::new();
    let mut rest = body;
    while !rest.is_empty() {
        let inner = rest.strip_prefix('[').ok_or_else(bad)?;
        let close = inner.find(']').ok_or_else(bad)?;
        let (a, b) = inner[..close].split_once(',').ok_or_else(bad)?;
        let i: usize = a.parse().map_err(|_| bad())?;
        let j: usize = b.parse().map_err(|_| bad())?;
        rest = &inner[close + 1..];
        let mut power = 1;
        if let Some(r) = rest.strip_prefix('^') {
            let digits = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            power = r[..digits].parse().map_err(|_| bad())?;
            rest = &r[digits..];
        }
        if i > u8::MAX as usize || j > u8::MAX as usize {
            return Err(bad());
        }
        word.extend(std::iter::repeat_n(ZGen::new(i, j), power));
    }
    Ok(Some((sign, word)))
}

impl ZRing {
    /// Parses and normalizes a monomial in the text format.
    pub fn parse(&self, s: &str) -> Result<ZElement, ZError> {
        match parse_word(s)? {
            None => Ok(self.zero()),
            Some((sign, word)) => Ok(match self.normalize(&word)? {
                Some(m) => self.from_monomial(&ZMonomial { sign: sign * m.sign, factors: m.factors }),
                None => self.zero(),
            }),
        }
    }
}

impl fmt::Display for ZMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            1 => {}
            -1 => write!(f, "-")?,
            c => write!(f, "{c}*")?,
        }
        write!(f, "{}", format_word(&self.factors))
    }
}

impl fmt::Display for ZElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, m) in self.terms().enumerate() {
            let (neg, mag) = (m.sign < 0, m.sign.abs());
            match (n, neg) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", format_word(&m.factors))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

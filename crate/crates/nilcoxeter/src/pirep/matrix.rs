use std::fmt;

use serde::Serialize;

/// A dense square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matrix {
    size: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zero(size: usize) -> Self {
        Self { size, data: vec![0; size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.set(i, i, 1);
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "matrix must be square");
        Self { size, data: rows.concat() }
    }

    /// The 2x2 block matrix [[a, b], [c, d]].
    pub fn blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let m = a.size;
        let mut out = Self::zero(2 * m);
        for i in 0..m {
            for j in 0..m {
                out.set(i, j, a.get(i, j));
                out.set(i, j + m, b.get(i, j));
                out.set(i + m, j, c.get(i, j));
                out.set(i + m, j + m, d.get(i, j));
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.size + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.size.max(1)).map(<[i64]>::to_vec).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[i64] {
        &self.data
    }

    /// The diagonal block of half the size, `which` = 0 for the top left.
    pub fn diagonal_block(&self, which: usize) -> Self {
        let m = self.size / 2;
        let o = which * m;
        let mut out = Self::zero(m);
        for i in 0..m {
            for j in 0..m {
                out.set(i, j, self.get(i + o, j + o));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        Self { size: self.size, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, s: i64) -> Self {
        Self { size: self.size, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn reduce_mod(&self, p: u64) -> Self {
        let p = p as i64;
        Self { size: self.size, data: self.data.iter().map(|a| a.rem_euclid(p)).collect() }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

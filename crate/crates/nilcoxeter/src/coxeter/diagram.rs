use std::fmt;

use super::CoxeterError;

/// Type tag of a Coxeter diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    /// A(r): the symmetric group on r+1 letters.
    A(usize),
    /// B(r): signed permutations of r letters.
    B(usize),
    /// D(r): signed permutations of r letters with an even number of sign changes.
    D(usize),
    /// I2(m): the dihedral group of order 2m.
    I2(u32),
    H3,
    /// An explicit bond matrix.
    Matrix,
}

/// A Coxeter diagram given by its symmetric bond matrix.
///
/// Generators are numbered from 1 in every public API.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterDiagram {
    label: CoxeterType,
    bond: Vec<Vec<u32>>,
}

impl CoxeterDiagram {
    pub fn a(rank: usize) -> Result<Self, CoxeterError> {
        if rank == 0 {
            return Err(CoxeterError::BadDiagram("A needs rank at least 1".into()));
        }
        let mut bond = commuting(rank);
        for i in 0..rank - 1 {
            set(&mut bond, i, i + 1, 3);
        }
        Ok(Self { label: CoxeterType::A(rank), bond })
    }

    /// The diagram whose group is the symmetric group on `n` letters.
    pub fn symmetric(n: usize) -> Result<Self, CoxeterError> {
        if n < 2 {
            return Err(CoxeterError::BadDiagram("symmetric group needs n >= 2".into()));
        }
        Self::a(n - 1)
    }

    /// Generators 1..r-1 swap adjacent letters, generator r negates the last letter.
    pub fn b(rank: usize) -> Result<Self, CoxeterError> {
        if rank < 2 {
            return Err(CoxeterError::BadDiagram("B needs rank at least 2".into()));
        }
        let mut bond = commuting(rank);
        for i in 0..rank - 1 {
            set(&mut bond, i, i + 1, 3);
        }
        set(&mut bond, rank - 2, rank - 1, 4);
        Ok(Self { label: CoxeterType::B(rank), bond })
    }

    /// Generators 1..r-1 swap adjacent letters, generator r swaps and negates the last two.
    pub fn d(rank: usize) -> Result<Self, CoxeterError> {
        if rank < 4 {
            return Err(CoxeterError::BadDiagram("D needs rank at least 4".into()));
        }
        let mut bond = commuting(rank);
        for i in 0..rank - 2 {
            set(&mut bond, i, i + 1, 3);
        }
        set(&mut bond, rank - 3, rank - 1, 3);
        Ok(Self { label: CoxeterType::D(rank), bond })
    }

    pub fn i2(m: u32) -> Result<Self, CoxeterError> {
        if m < 2 {
            return Err(CoxeterError::BadDiagram("I2(m) needs m >= 2".into()));
        }
        let mut bond = commuting(2);
        set(&mut bond, 0, 1, m);
        Ok(Self { label: CoxeterType::I2(m), bond })
    }

    /// Bonds 3 between generators 1,2 and 5 between generators 2,3.
    pub fn h3() -> Self {
        let mut bond = commuting(3);
        set(&mut bond, 0, 1, 3);
        set(&mut bond, 1, 2, 5);
        Self { label: CoxeterType::H3, bond }
    }

    /// An explicit bond matrix. Finiteness is checked when the group is built.
    pub fn from_matrix(bond: Vec<Vec<u32>>) -> Result<Self, CoxeterError> {
        let r = bond.len();
        if r == 0 {
            return Err(CoxeterError::BadDiagram("empty bond matrix".into()));
        }
        for (i, row) in bond.iter().enumerate() {
            if row.len() != r {
                return Err(CoxeterError::BadDiagram("bond matrix is not square".into()));
            }
            for (j, &m) in row.iter().enumerate() {
                if m != bond[j][i] {
                    return Err(CoxeterError::BadDiagram("bond matrix is not symmetric".into()));
                }
                if i == j && m != 1 {
                    return Err(CoxeterError::BadDiagram("diagonal entries must be 1".into()));
                }
                if i != j && m < 2 {
                    return Err(CoxeterError::BadDiagram("off-diagonal entries must be >= 2".into()));
                }
            }
        }
        Ok(Self { label: CoxeterType::Matrix, bond })
    }

    /// Parses `A:4`, `B:3`, `D:4`, `I2:7`, `H:3` or `matrix:[[1,3],[3,1]]`.
    pub fn parse(s: &str) -> Result<Self, CoxeterError> {
        let s = s.trim();
        let (tag, arg) = s
            .split_once(':')
            .ok_or_else(|| CoxeterError::Parse(format!("expected TYPE:ARG, got {s:?}")))?;
        let num = |a: &str| -> Result<usize, CoxeterError> {
            a.trim()
                .parse::<usize>()
                .map_err(|_| CoxeterError::Parse(format!("bad rank {a:?}")))
        };
        match tag.trim().to_ascii_uppercase().as_str() {
            "A" => Self::a(num(arg)?),
            "B" => Self::b(num(arg)?),
            "D" => Self::d(num(arg)?),
            "I2" => Self::i2(num(arg)? as u32),
            "H" => match num(arg)? {
                3 => Ok(Self::h3()),
                r => Err(CoxeterError::Unsupported(format!("H{r}"))),
            },
            "MATRIX" => {
                let bond: Vec<Vec<u32>> = serde_json::from_str(arg.trim())
                    .map_err(|e| CoxeterError::Parse(format!("bad matrix: {e}")))?;
                Self::from_matrix(bond)
            }
            other => Err(CoxeterError::Parse(format!("unknown diagram type {other:?}"))),
        }
    }

    pub fn rank(&self) -> usize {
        self.bond.len()
    }

    pub fn label(&self) -> &CoxeterType {
        &self.label
    }

    /// Bond m_{ij} between generators `i` and `j` (1-based).
    pub fn bond(&self, i: usize, j: usize) -> u32 {
        self.bond[i - 1][j - 1]
    }

    pub fn bond_matrix(&self) -> &[Vec<u32>] {
        &self.bond
    }

    /// True when the diagram is the type A diagram with generators in path order.
    pub fn is_type_a(&self) -> bool {
        matches!(self.label, CoxeterType::A(_))
    }

    /// Connected components of the diagram on the given vertex subset (1-based).
    pub fn components(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; vertices.len()];
        let mut out = Vec::new();
        for start in 0..vertices.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![vertices[start]];
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                for b in 0..vertices.len() {
                    if !seen[b] && self.bond(vertices[a], vertices[b]) > 2 {
                        seen[b] = true;
                        comp.push(vertices[b]);
                        stack.push(b);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort();
        out
    }
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            CoxeterType::A(r) => write!(f, "A:{r}"),
            CoxeterType::B(r) => write!(f, "B:{r}"),
            CoxeterType::D(r) => write!(f, "D:{r}"),
            CoxeterType::I2(m) => write!(f, "I2:{m}"),
            CoxeterType::H3 => write!(f, "H:3"),
            CoxeterType::Matrix => {
                let rows: Vec<String> = self
                    .bond
                    .iter()
                    .map(|r| {
                        let cells: Vec<String> = r.iter().map(|m| m.to_string()).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                write!(f, "matrix:[{}]", rows.join(","))
            }
        }
    }
}

fn commuting(rank: usize) -> Vec<Vec<u32>> {
    (0..rank)
        .map(|i| (0..rank).map(|j| if i == j { 1 } else { 2 }).collect())
        .collect()
}

fn set(bond: &mut [Vec<u32>], i: usize, j: usize, m: u32) {
    bond[i][j] = m;
    bond[j][i] = m;
}

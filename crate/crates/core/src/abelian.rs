//! Smith normal form over `Z` and finitely generated abelian groups given by
//! generators and relations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    #[serde(with = "crate::serde_big::list")]
    entries: Vec<BigInt>,
}

#[derive(Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    #[serde(with = "crate::serde_big::list")]
    entries: Vec<BigInt>,
}

impl TryFrom<RawMatrix> for IntMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        IntMatrix::new(raw.rows, raw.cols, raw.entries)
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from rows of machine integers; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let delta = factor * self.get(source, j);
            self.entries[target * self.cols + j] += delta;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let delta = factor * self.get(i, source);
            self.entries[i * self.cols + target] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.entries[idx] = -&self.entries[idx];
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// `U·M·V = S` with `U`, `V` unimodular and `S` diagonal with `d₁ | d₂ | …`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        self.s.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let n = m.rows.min(m.cols);

    for t in 0..n {
        loop {
            // Smallest nonzero |entry| in the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..s.rows {
                for j in t..s.cols {
                    let x = s.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if s.get(bi, bj).abs() <= x.abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { u, s, v };
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = s.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..s.rows {
                let q = s.get(i, t).div_floor(&pivot);
                if !q.is_zero() {
                    let neg = -q;
                    s.add_row(i, t, &neg);
                    u.add_row(i, t, &neg);
                }
                if !s.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..s.cols {
                let q = s.get(t, j).div_floor(&pivot);
                if !q.is_zero() {
                    let neg = -q;
                    s.add_col(j, t, &neg);
                    v.add_col(j, t, &neg);
                }
                if !s.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            // Row and column are cleared; enforce divisibility of the rest.
            let offending = (t + 1..s.rows)
                .find(|&i| (t + 1..s.cols).any(|j| !s.get(i, j).is_multiple_of(&pivot)));
            if let Some(i) = offending {
                let one = BigInt::one();
                s.add_row(t, i, &one);
                u.add_row(t, i, &one);
                continue;
            }
            if pivot.is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
            break;
        }
    }
    SmithForm { u, s, v }
}

/// A finitely generated abelian group `Zʳ ⊕ Z/d₁ ⊕ … ⊕ Z/dₖ` with
/// `dᵢ ≥ 2` and `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    #[serde(rename = "rank")]
    free_rank: usize,
    #[serde(rename = "torsion", with = "crate::serde_big::list")]
    invariant_factors: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        FgAbelianGroup {
            free_rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Result<Self> {
        for w in invariant_factors.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(Error::DimensionMismatch(format!(
                    "invariant factors {} and {} do not divide",
                    w[0], w[1]
                )));
            }
        }
        if let Some(bad) = invariant_factors.iter().find(|d| *d < &BigInt::from(2)) {
            return Err(Error::DimensionMismatch(format!(
                "invariant factor {bad} < 2"
            )));
        }
        Ok(FgAbelianGroup {
            free_rank,
            invariant_factors,
        })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `Zⁿ` modulo the row span of `relations`.
pub fn group_from_presentation(
    num_generators: usize,
    relations: &IntMatrix,
) -> Result<FgAbelianGroup> {
    if relations.cols() != num_generators {
        return Err(Error::DimensionMismatch(format!(
            "relations have {} columns for {num_generators} generators",
            relations.cols()
        )));
    }
    let snf = smith_normal_form(relations);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let invariant_factors = diag.into_iter().filter(|d| d > &BigInt::one()).collect();
    Ok(FgAbelianGroup {
        free_rank: num_generators - rank,
        invariant_factors,
    })
}

//! Smith normal form over the integers and abelian invariants of finitely
//! presented groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("matrix data has {got} entries, expected {rows}x{cols}")]
    Shape {
        rows: usize,
        cols: usize,
        got: usize,
    },
    #[error("relator {relator} uses generator {index}, but only {count} generators exist")]
    MalformedRelator {
        relator: usize,
        index: usize,
        count: usize,
    },
    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),
    #[error("line {line}: unknown generator {token:?}")]
    UnknownGenerator { line: usize, token: String },
    #[error("line {line}: bad token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("presentation has no generator line")]
    MissingGenerators,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, AbelianError> {
        if data.len() != rows * cols {
            return Err(AbelianError::Shape {
                rows,
                cols,
                got: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    /// Build from rows of machine integers. Rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, AbelianError> {
        let cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(AbelianError::Shape {
                    rows: rows.len(),
                    cols,
                    got: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix::new(rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = q * &self[(src, j)];
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = q * &self[(i, src)];
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `S = U M V` with `U`, `V` unimodular and `S` diagonal, `d_1 | d_2 | ⋯`, `d_i ≥ 0`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.s.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.s.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smallest nonzero |entry| in the lower-right block from `t`, first by position on ties.
fn find_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.rows {
        for j in t..s.cols {
            let v = &s[(i, j)];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < s[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let steps = m.rows.min(m.cols);

    for t in 0..steps {
        let Some((pi, pj)) = find_pivot(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..s.rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row(i, t, &q);
                u.add_row(i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..s.cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&s[(t, t)]);
                s.add_col(j, t, &q);
                v.add_col(j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                // A remainder smaller than the pivot appeared; move it into place.
                let (pi, pj) = find_pivot(&s, t).expect("nonzero remainder exists");
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // Divisibility: fold a row holding a non-multiple into the pivot row.
            let bad = (t + 1..s.rows)
                .find(|&i| (t + 1..s.cols).any(|j| !s[(i, j)].is_multiple_of(&s[(t, t)])));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { s, u, v }
}

/// A group presentation: generator names and relators, each relator a list of
/// `(generator index, exponent)` with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Vec<(usize, i64)>>,
}

impl Presentation {
    pub fn new(
        generators: Vec<String>,
        relators: Vec<Vec<(usize, i64)>>,
    ) -> Result<Self, AbelianError> {
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(AbelianError::DuplicateGenerator(g.clone()));
            }
        }
        for (r, rel) in relators.iter().enumerate() {
            if let Some(&(index, _)) = rel.iter().find(|(g, _)| *g >= generators.len()) {
                return Err(AbelianError::MalformedRelator {
                    relator: r,
                    index,
                    count: generators.len(),
                });
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Parse the text format: the first non-blank line lists generator names,
    /// each further line is one relator of whitespace-separated tokens `name`,
    /// `name'` (inverse) or `name^k`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, AbelianError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, header) = lines.next().ok_or(AbelianError::MissingGenerators)?;
        let generators: Vec<String> = header.split_whitespace().map(str::to_owned).collect();
        let mut relators = Vec::new();
        for (line, l) in lines {
            let mut rel = Vec::new();
            for tok in l.split_whitespace() {
                let bad = || AbelianError::BadToken {
                    line,
                    token: tok.to_owned(),
                };
                let (name, exp) = if let Some(name) = tok.strip_suffix('\'') {
                    (name, -1)
                } else if let Some((name, e)) = tok.split_once('^') {
                    (name, e.parse::<i64>().map_err(|_| bad())?)
                } else {
                    (tok, 1)
                };
                if name.is_empty() {
                    return Err(bad());
                }
                let g = generators.iter().position(|g| g == name).ok_or_else(|| {
                    AbelianError::UnknownGenerator {
                        line,
                        token: name.to_owned(),
                    }
                })?;
                rel.push((g, exp));
            }
            relators.push(rel);
        }
        Presentation::new(generators, relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<(usize, i64)>] {
        &self.relators
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relators.len(), self.generators.len());
        for (r, rel) in self.relators.iter().enumerate() {
            for &(g, e) in rel {
                m[(r, g)] += e;
            }
        }
        m
    }
}

/// `Z^betti ⊕ Z/d_1 ⊕ ⋯ ⊕ Z/d_k` with `d_1 | ⋯ | d_k`, every `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn new(betti: usize, torsion: Vec<i64>) -> Self {
        AbelianInvariants {
            betti,
            torsion: torsion.into_iter().map(BigInt::from).collect(),
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".into()),
            b => parts.push(format!("Z^{}", b)),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{}", d)));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    let snf = smith_normal_form(&p.relation_matrix());
    let factors = snf.invariant_factors();
    let rank = factors.iter().filter(|d| !d.is_zero()).count();
    AbelianInvariants {
        betti: p.generators.len() - rank,
        torsion: factors.into_iter().filter(|d| *d > BigInt::one()).collect(),
    }
}

/// Minimal number of generators of the abelian group, which bounds from
/// below the number of generators of any group with this abelianization.
pub fn min_generators_lower_bound(inv: &AbelianInvariants) -> usize {
    inv.betti + inv.torsion.len()
}

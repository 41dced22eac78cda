//! Exact linear algebra over the rationals.
//!
//! Vectors are rows; a matrix is a vector of rows. Elimination always
//! pivots on the first nonzero entry.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;
pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vector>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or an integer `p`. The result is in lowest terms with a
/// positive denominator.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::malformed(format!("invalid rational {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn zeros(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn zero_matrix(rows: usize, cols: usize) -> Matrix {
    vec![zeros(cols); rows]
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// Row vector times matrix.
pub fn vec_mat(v: &[Rational], m: &[Vector]) -> Vector {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = zeros(cols);
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            *o += x * y;
        }
    }
    out
}

/// Matrix times column vector.
pub fn mat_vec(m: &[Vector], v: &[Rational]) -> Vector {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul(a: &[Vector], b: &[Vector]) -> Matrix {
    a.iter().map(|row| vec_mat(row, b)).collect()
}

pub fn transpose(m: &[Vector], cols: usize) -> Matrix {
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Rank by Gaussian elimination.
pub fn rank(rows: &[Vector]) -> usize {
    let mut basis = Basis::new(rows.first().map_or(0, Vec::len));
    rows.iter().filter(|r| basis.insert(r).is_some()).count()
}

/// An incrementally built basis of a subspace of `K^n`, able to express
/// vectors of the subspace in terms of the basis vectors in insertion
/// order.
#[derive(Debug, Clone)]
pub struct Basis {
    n: usize,
    vectors: Vec<Vector>,
    /// Echelon rows: pivot column, reduced row, and its coefficients
    /// over `vectors`.
    echelon: Vec<(usize, Vector, Vector)>,
}

impl Basis {
    pub fn new(n: usize) -> Self {
        Basis {
            n,
            vectors: Vec::new(),
            echelon: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Reduces `v` against the echelon rows, returning the residual and
    /// the coefficients of the part that was removed.
    fn reduce(&self, v: &[Rational]) -> (Vector, Vector) {
        let mut residual = v.to_vec();
        let mut coeffs = zeros(self.vectors.len());
        for (pivot, row, combo) in &self.echelon {
            if residual[*pivot].is_zero() {
                continue;
            }
            let f = &residual[*pivot] / &row[*pivot];
            for (r, x) in residual.iter_mut().zip(row) {
                *r -= &f * x;
            }
            for (c, x) in coeffs.iter_mut().zip(combo) {
                *c += &f * x;
            }
        }
        (residual, coeffs)
    }

    /// Adds `v` if it is independent of the current basis; returns its
    /// index among the basis vectors.
    pub fn insert(&mut self, v: &[Rational]) -> Option<usize> {
        debug_assert_eq!(v.len(), self.n);
        let (residual, coeffs) = self.reduce(v);
        let pivot = residual.iter().position(|x| !x.is_zero())?;
        let k = self.vectors.len();
        let mut combo: Vector = coeffs.into_iter().map(|c| -c).collect();
        combo.push(Rational::one());
        for (_, _, c) in &mut self.echelon {
            c.push(Rational::zero());
        }
        self.echelon.push((pivot, residual, combo));
        self.vectors.push(v.to_vec());
        Some(k)
    }

    /// Coordinates of `v` over the basis vectors, if `v` lies in their span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        let (residual, coeffs) = self.reduce(v);
        is_zero(&residual).then_some(coeffs)
    }
}

/// Some solution `x` of `a · x = b` (columns of `a` are unknowns), or
/// `None` when the system is inconsistent. Free variables are set to zero.
pub fn solve(a: &[Vector], b: &[Rational], unknowns: usize) -> Option<Vector> {
    let mut rows: Vec<Vector> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..unknowns {
        let Some(p) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let inv = rows[next][col].recip();
        for x in rows[next].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    if rows[next..].iter().any(|r| !r[unknowns].is_zero()) {
        return None;
    }
    let mut x = zeros(unknowns);
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][unknowns].clone();
    }
    Some(x)
}

//! Weighted automata over the rationals.
//!
//! Conventions: state vectors are rows, so the weight of `a1…an` is
//! `init · M_a1 · … · M_an · final`. [`Wfa::forward_reduce`] restricts to
//! the span of the vectors `init · M_u`, [`Wfa::backward_reduce`] is the
//! same thing on the transpose, and [`Wfa::minimize`] composes them in the
//! weighted-Brzozowski order (backward first).

use num_traits::Zero;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::linalg::{self, Basis, Matrix, Rational, Vector};
use crate::pipeline::{Minimizable, Morphism, MorphismKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wfa {
    alphabet: Alphabet,
    init: Vector,
    /// One `dim × dim` matrix per symbol.
    trans: Vec<Matrix>,
    fin: Vector,
}

impl Wfa {
    pub fn new(alphabet: Alphabet, init: Vector, trans: Vec<Matrix>, fin: Vector) -> Result<Self> {
        let dim = init.len();
        if fin.len() != dim {
            return Err(Error::malformed(format!(
                "final vector has length {}, expected {dim}",
                fin.len()
            )));
        }
        if trans.len() != alphabet.len() {
            return Err(Error::malformed(format!(
                "{} transition matrices for {} symbols",
                trans.len(),
                alphabet.len()
            )));
        }
        for (a, m) in trans.iter().enumerate() {
            if m.len() != dim || m.iter().any(|row| row.len() != dim) {
                return Err(Error::malformed(format!(
                    "matrix for {:?} is not {dim}x{dim}",
                    alphabet.symbol(a)
                )));
            }
        }
        Ok(Wfa {
            alphabet,
            init,
            trans,
            fin,
        })
    }

    /// Convenience constructor from integer entries.
    pub fn from_integers(alphabet: Alphabet, init: &[i64], trans: &[Vec<Vec<i64>>], fin: &[i64]) -> Result<Self> {
        let vecs = |xs: &[i64]| xs.iter().map(|&x| linalg::rat(x)).collect::<Vector>();
        Wfa::new(
            alphabet,
            vecs(init),
            trans.iter().map(|m| m.iter().map(|r| vecs(r)).collect()).collect(),
            vecs(fin),
        )
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.init.len()
    }

    pub fn init(&self) -> &[Rational] {
        &self.init
    }

    pub fn final_vector(&self) -> &[Rational] {
        &self.fin
    }

    pub fn matrix(&self, a: usize) -> &Matrix {
        &self.trans[a]
    }

    /// `init · M_u`.
    pub fn forward_vector(&self, word: &[usize]) -> Vector {
        word.iter()
            .fold(self.init.clone(), |v, &a| linalg::vec_mat(&v, &self.trans[a]))
    }

    pub fn weight_of(&self, word: &[usize]) -> Rational {
        linalg::dot(&self.forward_vector(word), &self.fin)
    }

    pub fn weight(&self, word: &str) -> Result<Rational> {
        Ok(self.weight_of(&self.alphabet.parse_word(word)?))
    }

    /// Swaps initial and final vectors and transposes every matrix; the
    /// weight of `u` becomes the weight of its mirror image.
    pub fn transpose(&self) -> Wfa {
        let dim = self.dim();
        Wfa {
            alphabet: self.alphabet.clone(),
            init: self.fin.clone(),
            trans: self.trans.iter().map(|m| linalg::transpose(m, dim)).collect(),
            fin: self.init.clone(),
        }
    }

    /// Conjugates onto a basis of `span{init · M_u}`. Basis vectors are
    /// collected in BFS order over words.
    pub fn forward_reduce(&self) -> Wfa {
        let mut basis = Basis::new(self.dim());
        if !linalg::is_zero(&self.init) {
            basis.insert(&self.init);
        }
        let mut head = 0;
        while head < basis.len() {
            let v = basis.vectors()[head].clone();
            for m in &self.trans {
                basis.insert(&linalg::vec_mat(&v, m));
            }
            head += 1;
        }
        let coords = |v: &[Rational]| basis.coordinates(v).expect("closed under transitions");
        let trans = self
            .trans
            .iter()
            .map(|m| {
                basis
                    .vectors()
                    .iter()
                    .map(|b| coords(&linalg::vec_mat(b, m)))
                    .collect()
            })
            .collect();
        Wfa {
            alphabet: self.alphabet.clone(),
            init: coords(&self.init),
            trans,
            fin: basis.vectors().iter().map(|b| linalg::dot(b, &self.fin)).collect(),
        }
    }

    /// `transpose(forward_reduce(transpose(self)))`.
    pub fn backward_reduce(&self) -> Wfa {
        self.transpose().forward_reduce().transpose()
    }

    /// `forward_reduce(backward_reduce(self))`: a minimal-dimension
    /// automaton with the same weights.
    pub fn minimize(&self) -> Wfa {
        self.backward_reduce().forward_reduce()
    }

    /// Direct sum of `self` and `other` with the second final vector
    /// negated; its weights are the pointwise differences.
    pub fn difference(&self, other: &Wfa) -> Result<Wfa> {
        self.alphabet.ensure_same(&other.alphabet)?;
        let (n, m) = (self.dim(), other.dim());
        let mut init = self.init.clone();
        init.extend(other.init.iter().cloned());
        let mut fin = self.fin.clone();
        fin.extend(other.fin.iter().map(|x| -x));
        let trans = self
            .trans
            .iter()
            .zip(&other.trans)
            .map(|(a, b)| {
                let mut block = linalg::zero_matrix(n + m, n + m);
                for i in 0..n {
                    block[i][..n].clone_from_slice(&a[i]);
                }
                for i in 0..m {
                    block[n + i][n..].clone_from_slice(&b[i]);
                }
                block
            })
            .collect();
        Ok(Wfa {
            alphabet: self.alphabet.clone(),
            init,
            trans,
            fin,
        })
    }

    /// Whether both automata assign the same weight to every word.
    pub fn equivalent(&self, other: &Wfa) -> Result<bool> {
        Ok(self.difference(other)?.minimize().dim() == 0)
    }

    /// The block `{weight(uv)}` for `|u|, |v| ≤ max_len`, rows indexed by
    /// `u` and columns by `v` in shortlex order.
    pub fn hankel_block(&self, max_len: usize) -> Matrix {
        let words = self.alphabet.words_up_to(max_len);
        words
            .iter()
            .map(|u| {
                let fwd = self.forward_vector(u);
                words
                    .iter()
                    .map(|v| {
                        let back = v.iter().rev().fold(self.fin.clone(), |x, &a| {
                            linalg::mat_vec(&self.trans[a], &x)
                        });
                        linalg::dot(&fwd, &back)
                    })
                    .collect()
            })
            .collect()
    }

    /// A linear map `h` (a `dim × target.dim` matrix acting on row
    /// vectors) with `init·h = init'`, `M_a·h = h·M'_a` and
    /// `h·final' = final`. The solution is unique when `self` is forward
    /// reduced; otherwise some solution is returned.
    pub fn find_morphism(&self, target: &Wfa) -> Result<Option<LinearMap>> {
        self.alphabet.ensure_same(&target.alphabet)?;
        let (n, m) = (self.dim(), target.dim());
        let unknowns = n * m;
        let var = |i: usize, j: usize| i * m + j;
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vector = Vec::new();
        for j in 0..m {
            let mut row = linalg::zeros(unknowns);
            for i in 0..n {
                row[var(i, j)] = self.init[i].clone();
            }
            rows.push(row);
            rhs.push(target.init[j].clone());
        }
        for i in 0..n {
            let mut row = linalg::zeros(unknowns);
            for j in 0..m {
                row[var(i, j)] = target.fin[j].clone();
            }
            rows.push(row);
            rhs.push(self.fin[i].clone());
        }
        for (ma, mb) in self.trans.iter().zip(&target.trans) {
            for i in 0..n {
                for j in 0..m {
                    let mut row = linalg::zeros(unknowns);
                    for k in 0..n {
                        row[var(k, j)] += &ma[i][k];
                    }
                    for k in 0..m {
                        row[var(i, k)] -= &mb[k][j];
                    }
                    rows.push(row);
                    rhs.push(Rational::zero());
                }
            }
        }
        let Some(x) = linalg::solve(&rows, &rhs, unknowns) else {
            return Ok(None);
        };
        let matrix = (0..n).map(|i| x[i * m..(i + 1) * m].to_vec()).collect();
        Ok(Some(LinearMap {
            matrix,
            source_dim: n,
            target_dim: m,
        }))
    }

    pub fn is_isomorphic(&self, other: &Wfa) -> bool {
        self.dim() == other.dim()
            && matches!(self.find_morphism(other), Ok(Some(h)) if h.kind() == MorphismKind::Iso)
    }

    /// The automaton of dimension 1 with a single scalar per symbol.
    pub fn scalar(alphabet: Alphabet, init: Rational, per_symbol: Vec<Rational>, fin: Rational) -> Result<Self> {
        let trans = per_symbol.into_iter().map(|x| vec![vec![x]]).collect();
        Wfa::new(alphabet, vec![init], trans, vec![fin])
    }

    /// The dimension-0 automaton (every weight is zero).
    pub fn zero(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Wfa {
            alphabet,
            init: Vec::new(),
            trans: vec![Vec::new(); k],
            fin: Vec::new(),
        }
    }
}

/// A morphism of weighted automata: a matrix acting on row vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub matrix: Matrix,
    pub source_dim: usize,
    pub target_dim: usize,
}

impl Morphism for LinearMap {
    fn kind(&self) -> MorphismKind {
        let r = linalg::rank(&self.matrix);
        MorphismKind::from_flags(r == self.target_dim, r == self.source_dim)
    }
}

impl Minimizable for Wfa {
    type Morphism = LinearMap;

    fn reach(&self) -> Self {
        self.forward_reduce()
    }

    fn obs(&self) -> Self {
        self.backward_reduce()
    }

    fn find_morphism(&self, target: &Self) -> Result<Option<LinearMap>> {
        Wfa::find_morphism(self, target)
    }

    fn is_isomorphic(&self, other: &Self) -> bool {
        Wfa::is_isomorphic(self, other)
    }

    fn minimize(&self) -> Self {
        Wfa::minimize(self)
    }
}

//! Exact square matrices over a number field: determinants, characteristic
//! and minimal polynomials, monomial structure, and the special cycle-shaped
//! matrices used by the regular representation of a crossed product.
//!
//! Characteristic polynomials are computed by an exact similarity reduction
//! to upper Hessenberg form followed by the leading-principal-minor
//! recurrence; minimal polynomials by an incremental linear-dependence
//! search over powers. Neither path factors polynomials.

use std::fmt;
use std::sync::Arc;

use crate::numberfield::{FieldError, NFElement, NumberField};
use crate::permcycle::Permutation;
use crate::rational::Rational;
use crate::unipoly::UniPoly;

/// Error raised by matrix constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// Cycle matrices require every entry to be nonzero.
    ZeroCycleEntry(usize),
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::ZeroCycleEntry(i) => {
                write!(f, "cycle matrix entry {i} is zero; all entries must be nonzero")
            }
        }
    }
}

impl std::error::Error for MatrixError {}

/// A square matrix over a number field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixNF {
    field: Arc<NumberField>,
    n: usize,
    entries: Vec<NFElement>,
}

impl MatrixNF {
    /// Builds an `n x n` matrix from `n^2` row-major entries.
    pub fn new(field: Arc<NumberField>, n: usize, entries: Vec<NFElement>) -> Self {
        assert!(n >= 1, "matrices have positive dimension");
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        for e in &entries {
            assert!(**e.field() == *field, "entry from a different field");
        }
        MatrixNF { field, n, entries }
    }

    pub fn from_rows(field: Arc<NumberField>, rows: Vec<Vec<NFElement>>) -> Self {
        let n = rows.len();
        let entries: Vec<NFElement> = rows
            .into_iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n, "matrix must be square");
                r
            })
            .collect();
        Self::new(field, n, entries)
    }

    /// Builds from a function of `(row, column)`.
    pub fn from_fn(
        field: Arc<NumberField>,
        n: usize,
        mut f: impl FnMut(usize, usize) -> NFElement,
    ) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self::new(field, n, entries)
    }

    pub fn identity(field: Arc<NumberField>, n: usize) -> Self {
        let one = field.one();
        let zero = field.zero();
        Self::from_fn(field, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn zero(field: Arc<NumberField>, n: usize) -> Self {
        let zero = field.zero();
        Self::from_fn(field, n, |_, _| zero.clone())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &NFElement {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: NFElement) {
        assert!(**v.field() == *self.field);
        self.entries[i * self.n + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        MatrixNF {
            field: Arc::clone(&self.field),
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        MatrixNF {
            field: Arc::clone(&self.field),
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &NFElement) -> Self {
        MatrixNF {
            field: Arc::clone(&self.field),
            n: self.n,
            entries: self.entries.iter().map(|e| e.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        Self::from_fn(Arc::clone(&self.field), n, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..n {
                let p = self.get(i, k).mul(other.get(k, j));
                acc = acc.add(&p);
            }
            acc
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::identity(Arc::clone(&self.field), self.n);
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NFElement::is_zero)
    }

    pub fn trace(&self) -> NFElement {
        let mut acc = self.field.zero();
        for i in 0..self.n {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    fn rows(&self) -> Vec<Vec<NFElement>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Determinant by Gaussian elimination with exact division.
    pub fn det(&self) -> Result<NFElement, FieldError> {
        let n = self.n;
        let mut m = self.rows();
        let mut det = self.field.one();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(self.field.zero());
            };
            if pivot_row != col {
                m.swap(pivot_row, col);
                det = det.neg();
            }
            let pivot = m[col][col].clone();
            det = det.mul(&pivot);
            let pivot_inv = pivot.inv()?;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].mul(&pivot_inv);
                for c in col..n {
                    let t = f.mul(&m[col][c]);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        Ok(det)
    }

    /// Solves `self * x = rhs` for a single column. `None` when singular.
    pub fn solve(&self, rhs: &[NFElement]) -> Result<Option<Vec<NFElement>>, FieldError> {
        let n = self.n;
        assert_eq!(rhs.len(), n, "right-hand side length mismatch");
        let mut m = self.rows();
        let mut b: Vec<NFElement> = rhs.to_vec();
        for col in 0..n {
            let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(None);
            };
            m.swap(pivot_row, col);
            b.swap(pivot_row, col);
            let pivot_inv = m[col][col].inv()?;
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].mul(&pivot_inv);
                for c in col..n {
                    let t = f.mul(&m[col][c]);
                    m[r][c] = m[r][c].sub(&t);
                }
                let t = f.mul(&b[col]);
                b[r] = b[r].sub(&t);
            }
        }
        let mut x = Vec::with_capacity(n);
        for i in 0..n {
            x.push(b[i].mul(&m[i][i].inv()?));
        }
        Ok(Some(x))
    }

    /// Characteristic polynomial `det(tI - M)`, monic of degree `n`.
    ///
    /// The matrix is first reduced to upper Hessenberg form by exact
    /// similarity transformations; the polynomial then follows from the
    /// recurrence on leading principal minors of `tI - H`.
    pub fn char_poly(&self) -> Result<PolyNF, FieldError> {
        let n = self.n;
        let mut h = self.rows();
        // Similarity reduction to upper Hessenberg form.
        for j in 0..n.saturating_sub(2) {
            let Some(pivot) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else {
                continue;
            };
            if pivot != j + 1 {
                // Swap rows and the matching columns (a similarity).
                h.swap(pivot, j + 1);
                for row in h.iter_mut() {
                    row.swap(pivot, j + 1);
                }
            }
            let pivot_inv = h[j + 1][j].inv()?;
            for i in j + 2..n {
                if h[i][j].is_zero() {
                    continue;
                }
                let f = h[i][j].mul(&pivot_inv);
                // Row operation: row_i -= f * row_{j+1} ...
                for c in j..n {
                    let t = f.mul(&h[j + 1][c]);
                    h[i][c] = h[i][c].sub(&t);
                }
                // ... and the inverse column operation: col_{j+1} += f * col_i.
                for r in 0..n {
                    let t = f.mul(&h[r][i]);
                    h[r][j + 1] = h[r][j + 1].add(&t);
                }
            }
        }
        // p_0 = 1; p_k = (t - H[k-1][k-1]) p_{k-1}
        //              - sum_m H[k-1-m][k-1] (prod of m subdiagonals) p_{k-1-m}.
        let field = &self.field;
        let mut p: Vec<PolyNF> = vec![PolyNF::one(Arc::clone(field))];
        for k in 1..=n {
            let lin = PolyNF::new(
                Arc::clone(field),
                vec![h[k - 1][k - 1].neg(), field.one()],
            );
            let mut next = lin.mul(&p[k - 1]);
            let mut subdiag_prod = field.one();
            for m in 1..k {
                subdiag_prod = subdiag_prod.mul(&h[k - m][k - m - 1]);
                if subdiag_prod.is_zero() {
                    break;
                }
                let coeff = h[k - 1 - m][k - 1].mul(&subdiag_prod);
                if coeff.is_zero() {
                    continue;
                }
                next = next.sub(&p[k - 1 - m].scale(&coeff));
            }
            p.push(next);
        }
        Ok(p.pop().unwrap())
    }

    /// Minimal polynomial: the monic generator of the ideal of polynomials
    /// vanishing on the matrix, found by the first linear dependence among
    /// `I, M, M^2, ...` (coordinates in `K^(n^2)`).
    pub fn min_poly(&self) -> Result<PolyNF, FieldError> {
        let n2 = self.n * self.n;
        // Reduced basis rows: (vector, combination over original powers).
        let mut basis: Vec<(Vec<NFElement>, Vec<NFElement>)> = Vec::new();
        let mut power = Self::identity(Arc::clone(&self.field), self.n);
        for k in 0..=self.n {
            let mut vec: Vec<NFElement> = power.entries.clone();
            let mut combo = vec![self.field.zero(); self.n + 1];
            combo[k] = self.field.one();
            // Reduce against the existing pivots.
            for (bvec, bcombo) in &basis {
                let pivot_pos = bvec.iter().position(|e| !e.is_zero()).unwrap();
                if vec[pivot_pos].is_zero() {
                    continue;
                }
                let f = vec[pivot_pos].clone(); // basis pivots are normalized to 1
                for idx in 0..n2 {
                    let t = f.mul(&bvec[idx]);
                    vec[idx] = vec[idx].sub(&t);
                }
                for idx in 0..=self.n {
                    let t = f.mul(&bcombo[idx]);
                    combo[idx] = combo[idx].sub(&t);
                }
            }
            if vec.iter().all(NFElement::is_zero) {
                // M^k = -sum combo[i] M^i (i < k): monic minimal polynomial.
                let mut coeffs: Vec<NFElement> = combo.into_iter().take(k + 1).collect();
                // combo currently encodes sum coeffs[i] M^i = 0 with
                // coeffs[k] = 1 already monic.
                coeffs.truncate(k + 1);
                return Ok(PolyNF::new(Arc::clone(&self.field), coeffs));
            }
            // Normalize the new row so its pivot is 1, clear that position
            // from every stored row (keeping the basis fully reduced), then
            // store it.
            let pivot_pos = vec.iter().position(|e| !e.is_zero()).unwrap();
            let inv = vec[pivot_pos].inv()?;
            let vec: Vec<NFElement> = vec.iter().map(|e| e.mul(&inv)).collect();
            let combo: Vec<NFElement> = combo.iter().map(|e| e.mul(&inv)).collect();
            for (bvec, bcombo) in &mut basis {
                if bvec[pivot_pos].is_zero() {
                    continue;
                }
                let f = bvec[pivot_pos].clone();
                for idx in 0..n2 {
                    let t = f.mul(&vec[idx]);
                    bvec[idx] = bvec[idx].sub(&t);
                }
                for idx in 0..=self.n {
                    let t = f.mul(&combo[idx]);
                    bcombo[idx] = bcombo[idx].sub(&t);
                }
            }
            basis.push((vec, combo));
            power = power.mul(self);
        }
        unreachable!("a dependence must appear by degree n (Cayley-Hamilton)");
    }

    /// Decomposes a monomial matrix (exactly one nonzero entry in every row
    /// and column) as `diag(scalars) * P`, where `P` maps basis column `j`
    /// to row `perm(j)`. Returns `None` when the matrix is not monomial.
    pub fn monomial_structure(&self) -> Option<MonomialData> {
        let n = self.n;
        let mut images = vec![usize::MAX; n];
        let mut scalars = vec![self.field.zero(); n];
        for j in 0..n {
            let mut nonzero_row = None;
            for i in 0..n {
                if !self.get(i, j).is_zero() {
                    if nonzero_row.is_some() {
                        return None; // two nonzero entries in one column
                    }
                    nonzero_row = Some(i);
                }
            }
            let i = nonzero_row?; // empty column: not monomial
            images[j] = i;
            scalars[i] = self.get(i, j).clone();
        }
        let perm = Permutation::from_images(images).ok()?;
        Some(MonomialData { perm, scalars })
    }
}

impl fmt::Display for MatrixNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Monomial decomposition `M = diag(scalars) * P`: column `j` carries its
/// single nonzero entry in row `perm(j)`, and `scalars[i]` is the nonzero
/// entry of row `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialData {
    pub perm: Permutation,
    pub scalars: Vec<NFElement>,
}

impl MonomialData {
    /// Rebuilds the monomial matrix this data describes.
    pub fn rebuild(&self, field: &Arc<NumberField>) -> MatrixNF {
        let n = self.perm.degree();
        let mut m = MatrixNF::zero(Arc::clone(field), n);
        for j in 0..n {
            let i = self.perm.image(j);
            m.set(i, j, self.scalars[i].clone());
        }
        m
    }
}

/// The `k x k` cycle-shaped matrix with `entries[0..k-1]` on the
/// superdiagonal and `entries[k-1]` in the bottom-left corner:
///
/// ```text
/// [ 0   a_1  0  ...  0  ]
/// [ 0   0   a_2 ...  0  ]
/// [ ...              ...]
/// [ 0   0    0  ... a_{k-1}]
/// [ a_k 0    0  ...  0  ]
/// ```
///
/// Its characteristic (and minimal) polynomial is `t^k - a_1 ... a_k`.
/// Every entry must be nonzero.
pub fn cycle_matrix(field: &Arc<NumberField>, entries: &[NFElement]) -> Result<MatrixNF, MatrixError> {
    let k = entries.len();
    assert!(k >= 1, "cycle matrices have positive dimension");
    for (i, e) in entries.iter().enumerate() {
        if e.is_zero() {
            return Err(MatrixError::ZeroCycleEntry(i));
        }
    }
    let mut m = MatrixNF::zero(Arc::clone(field), k);
    if k == 1 {
        m.set(0, 0, entries[0].clone());
        return Ok(m);
    }
    for i in 0..k - 1 {
        m.set(i, i + 1, entries[i].clone());
    }
    m.set(k - 1, 0, entries[k - 1].clone());
    Ok(m)
}

/// Block-diagonal assembly of square blocks over one field.
pub fn block_diag(field: &Arc<NumberField>, blocks: &[MatrixNF]) -> MatrixNF {
    assert!(!blocks.is_empty(), "need at least one block");
    let n: usize = blocks.iter().map(MatrixNF::size).sum();
    let mut m = MatrixNF::zero(Arc::clone(field), n);
    let mut offset = 0;
    for b in blocks {
        for i in 0..b.size() {
            for j in 0..b.size() {
                m.set(offset + i, offset + j, b.get(i, j).clone());
            }
        }
        offset += b.size();
    }
    m
}

/// A polynomial with coefficients in a number field, ascending order,
/// trimmed. The variable renders as `X` to avoid clashing with the field
/// generator `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyNF {
    field: Arc<NumberField>,
    coeffs: Vec<NFElement>,
}

impl PolyNF {
    pub fn new(field: Arc<NumberField>, mut coeffs: Vec<NFElement>) -> Self {
        while coeffs.last().is_some_and(NFElement::is_zero) {
            coeffs.pop();
        }
        PolyNF { field, coeffs }
    }

    pub fn zero(field: Arc<NumberField>) -> Self {
        PolyNF { field, coeffs: Vec::new() }
    }

    pub fn one(field: Arc<NumberField>) -> Self {
        let one = field.one();
        PolyNF { field, coeffs: vec![one] }
    }

    pub fn constant(field: Arc<NumberField>, c: NFElement) -> Self {
        Self::new(field, vec![c])
    }

    /// Builds `t^k - c` style monomials: `coefficient * X^k`.
    pub fn monomial(field: Arc<NumberField>, c: NFElement, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> NFElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c == &self.field.one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            Arc::clone(&self.field),
            (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            Arc::clone(&self.field),
            (0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect(),
        )
    }

    pub fn scale(&self, c: &NFElement) -> Self {
        Self::new(Arc::clone(&self.field), self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(Arc::clone(&self.field));
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(Arc::clone(&self.field), out)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn divmod_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Self::zero(Arc::clone(&self.field)), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - ddeg];
        while rem.len() > ddeg {
            let c = rem.last().unwrap().clone();
            let k = rem.len() - 1 - ddeg;
            if !c.is_zero() {
                quot[k] = c.clone();
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let t = dc.mul(&c);
                    rem[k + i] = rem[k + i].sub(&t);
                }
            }
            rem.pop();
            while rem.last().is_some_and(NFElement::is_zero) {
                rem.pop();
            }
        }
        (
            Self::new(Arc::clone(&self.field), quot),
            Self::new(Arc::clone(&self.field), rem),
        )
    }

    /// True when `divisor` (monic) divides this polynomial exactly.
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        self.divmod_monic(divisor).1.is_zero()
    }

    /// Evaluates the polynomial at a matrix argument (Horner).
    pub fn eval_matrix(&self, m: &MatrixNF) -> MatrixNF {
        let n = m.size();
        let mut acc = MatrixNF::zero(Arc::clone(&self.field), n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                let v = acc.get(i, i).add(c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Converts to a rational-coefficient polynomial; fails if any
    /// coefficient is irrational.
    pub fn to_unipoly(&self) -> Result<UniPoly, FieldError> {
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.as_rational().ok_or_else(|| FieldError::NotRational(c.to_string()))?);
        }
        Ok(UniPoly::new(out))
    }

    /// Lifts a rational-coefficient polynomial into the field.
    pub fn from_unipoly(field: &Arc<NumberField>, p: &UniPoly) -> Self {
        Self::new(
            Arc::clone(field),
            p.coeffs().iter().map(|c| field.rational(c.clone())).collect(),
        )
    }
}

impl fmt::Display for PolyNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_one = c == &self.field.one();
            if !is_one || k == 0 {
                write!(f, "({c})")?;
            }
            if k > 0 {
                if !is_one {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "X")?;
                } else {
                    write!(f, "X^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::NumberField;
    use crate::rational::{rat, rat_int};
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gaussian() -> Arc<NumberField> {
        NumberField::quadratic(BigInt::from(-1)).unwrap()
    }

    fn random_matrix(field: &Arc<NumberField>, n: usize, rng: &mut ChaCha8Rng) -> MatrixNF {
        MatrixNF::from_fn(Arc::clone(field), n, |_, _| {
            let coeffs = (0..field.degree())
                .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=2)))
                .collect();
            field.element(coeffs)
        })
    }

    /// Independent characteristic polynomial oracle: cofactor expansion of
    /// `det(tI - M)` over the polynomial ring, exponential but exact.
    fn char_poly_oracle(m: &MatrixNF) -> PolyNF {
        let field = m.field();
        let n = m.size();
        // Polynomial-entried matrix as nested Vec<PolyNF>.
        let rows: Vec<Vec<PolyNF>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mij = PolyNF::constant(Arc::clone(field), m.get(i, j).neg());
                        if i == j {
                            mij.add(&PolyNF::monomial(Arc::clone(field), field.one(), 1))
                        } else {
                            mij
                        }
                    })
                    .collect()
            })
            .collect();
        fn det_rec(rows: &[Vec<PolyNF>], cols: &[usize], field: &Arc<NumberField>) -> PolyNF {
            if cols.len() == 1 {
                return rows[rows.len() - cols.len()][cols[0]].clone();
            }
            let row = rows.len() - cols.len();
            let mut acc = PolyNF::zero(Arc::clone(field));
            for (pos, &c) in cols.iter().enumerate() {
                let minor_cols: Vec<usize> =
                    cols.iter().copied().filter(|&x| x != c).collect();
                let term = rows[row][c].mul(&det_rec(rows, &minor_cols, field));
                acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        let cols: Vec<usize> = (0..n).collect();
        det_rec(&rows, &cols, field)
    }

    #[test]
    fn determinant_known_values() {
        let k = gaussian();
        // [[0, a], [1, 0]] has determinant -a; here a = -1.
        let a = k.rational(rat_int(-1));
        let m = MatrixNF::from_rows(
            Arc::clone(&k),
            vec![vec![k.zero(), a.clone()], vec![k.one(), k.zero()]],
        );
        assert_eq!(m.det().unwrap(), k.rational(rat_int(1)));
        assert_eq!(MatrixNF::identity(Arc::clone(&k), 4).det().unwrap(), k.one());
        // Singular matrix.
        let s = MatrixNF::from_rows(
            Arc::clone(&k),
            vec![vec![k.one(), k.one()], vec![k.one(), k.one()]],
        );
        assert!(s.det().unwrap().is_zero());
    }

    #[test]
    fn determinant_is_multiplicative() {
        let k = gaussian();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..15 {
            let a = random_matrix(&k, 3, &mut rng);
            let b = random_matrix(&k, 3, &mut rng);
            assert_eq!(
                a.mul(&b).det().unwrap(),
                a.det().unwrap().mul(&b.det().unwrap())
            );
        }
    }

    #[test]
    fn char_poly_matches_oracle_and_known_forms() {
        let k = gaussian();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in [2usize, 3, 4] {
            for _ in 0..6 {
                let m = random_matrix(&k, n, &mut rng);
                let fast = m.char_poly().unwrap();
                let slow = char_poly_oracle(&m);
                assert_eq!(fast, slow, "n = {n}");
                assert!(fast.is_monic());
                // Cayley-Hamilton: the matrix satisfies its own polynomial.
                assert!(fast.eval_matrix(&m).is_zero());
                // Constant term = (-1)^n det, next-to-leading = -trace.
                let det = m.det().unwrap();
                let sign = if n % 2 == 0 { det.clone() } else { det.neg() };
                assert_eq!(fast.coeff(0), sign);
                assert_eq!(fast.coeff(n - 1), m.trace().neg());
            }
        }
        // Diagonal matrix: product of linear factors.
        let d = MatrixNF::from_rows(
            Arc::clone(&k),
            vec![
                vec![k.rational(rat_int(2)), k.zero()],
                vec![k.zero(), k.rational(rat(1, 2))],
            ],
        );
        let cp = d.char_poly().unwrap().to_unipoly().unwrap();
        assert_eq!(cp, UniPoly::new(vec![rat_int(1), rat(-5, 2), rat_int(1)]));
    }

    #[test]
    fn cycle_matrix_char_and_min_poly() {
        let k = gaussian();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for len in 1..=6usize {
            let entries: Vec<_> = (0..len)
                .map(|_| {
                    // Nonzero random elements.
                    loop {
                        let e = k.element(vec![
                            rat(rng.gen_range(-3..=3), 1),
                            rat(rng.gen_range(-3..=3), 1),
                        ]);
                        if !e.is_zero() {
                            break e;
                        }
                    }
                })
                .collect();
            let m = cycle_matrix(&k, &entries).unwrap();
            let mut prod = k.one();
            for e in &entries {
                prod = prod.mul(e);
            }
            // Expected: t^len - prod, both as char and min poly.
            let expected = PolyNF::monomial(Arc::clone(&k), k.one(), len)
                .sub(&PolyNF::constant(Arc::clone(&k), prod));
            assert_eq!(m.char_poly().unwrap(), expected, "len = {len}");
            assert_eq!(m.min_poly().unwrap(), expected, "len = {len}");
        }
        // Zero entries are rejected with the offending index.
        let bad = cycle_matrix(&k, &[k.one(), k.zero(), k.one()]);
        assert_eq!(bad.unwrap_err(), MatrixError::ZeroCycleEntry(1));
    }

    #[test]
    fn min_poly_divides_char_poly() {
        let k = gaussian();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..10 {
            let m = random_matrix(&k, 3, &mut rng);
            let mp = m.min_poly().unwrap();
            let cp = m.char_poly().unwrap();
            assert!(cp.divisible_by(&mp));
            assert!(mp.eval_matrix(&m).is_zero());
        }
        // Scalar matrix: minimal polynomial has degree 1.
        let s = MatrixNF::identity(Arc::clone(&k), 3).scale(&k.rational(rat_int(5)));
        let mp = s.min_poly().unwrap();
        assert_eq!(mp.degree(), Some(1));
        assert_eq!(mp.coeff(0), k.rational(rat_int(-5)));
    }

    #[test]
    fn block_diag_multiplies_polynomials() {
        let k = gaussian();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let a = random_matrix(&k, 2, &mut rng);
        let b = random_matrix(&k, 3, &mut rng);
        let m = block_diag(&k, &[a.clone(), b.clone()]);
        assert_eq!(m.size(), 5);
        assert_eq!(
            m.char_poly().unwrap(),
            a.char_poly().unwrap().mul(&b.char_poly().unwrap())
        );
        assert_eq!(m.det().unwrap(), a.det().unwrap().mul(&b.det().unwrap()));
    }

    #[test]
    fn monomial_structure_examples() {
        let k = gaussian();
        let a = k.rational(rat_int(-1));
        // [[0, a], [1, 0]]: perm = (1 2), scalars = (a, 1) by row.
        let m = MatrixNF::from_rows(
            Arc::clone(&k),
            vec![vec![k.zero(), a.clone()], vec![k.one(), k.zero()]],
        );
        let md = m.monomial_structure().unwrap();
        assert_eq!(md.perm.images(), &[1, 0]);
        assert_eq!(md.scalars, vec![a.clone(), k.one()]);
        assert_eq!(md.rebuild(&k), m);

        // Diagonal matrices decompose with the identity permutation.
        let d = MatrixNF::from_rows(
            Arc::clone(&k),
            vec![
                vec![k.rational(rat_int(3)), k.zero()],
                vec![k.zero(), k.generator()],
            ],
        );
        let md = d.monomial_structure().unwrap();
        assert!(md.perm.is_identity());
        assert_eq!(md.scalars, vec![k.rational(rat_int(3)), k.generator()]);

        // Non-monomial cases: a zero column, and a doubled column.
        let z = MatrixNF::zero(Arc::clone(&k), 2);
        assert!(z.monomial_structure().is_none());
        let dbl = MatrixNF::from_rows(
            Arc::clone(&k),
            vec![vec![k.one(), k.zero()], vec![k.one(), k.one()]],
        );
        assert!(dbl.monomial_structure().is_none());
    }

    #[test]
    fn monomial_round_trip_random() {
        let k = gaussian();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in [2usize, 3, 5] {
            for _ in 0..10 {
                // Random permutation via sorting random keys.
                let mut idx: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    let j = rng.gen_range(0..=i);
                    idx.swap(i, j);
                }
                let perm = Permutation::from_images(idx).unwrap();
                let scalars: Vec<NFElement> = (0..n)
                    .map(|_| k.element(vec![rat_int(rng.gen_range(1..=5)), rat_int(rng.gen_range(0..=2))]))
                    .collect();
                let md = MonomialData { perm, scalars };
                let m = md.rebuild(&k);
                assert_eq!(m.monomial_structure().unwrap(), md);
            }
        }
    }

    #[test]
    fn solve_linear_systems() {
        let k = gaussian();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..10 {
            let m = random_matrix(&k, 3, &mut rng);
            if m.det().unwrap().is_zero() {
                continue;
            }
            let x: Vec<NFElement> =
                (0..3).map(|_| k.element(vec![rat_int(rng.gen_range(-3..=3)), rat_int(1)])).collect();
            // Build rhs = M x.
            let rhs: Vec<NFElement> = (0..3)
                .map(|i| {
                    let mut acc = k.zero();
                    for j in 0..3 {
                        acc = acc.add(&m.get(i, j).mul(&x[j]));
                    }
                    acc
                })
                .collect();
            assert_eq!(m.solve(&rhs).unwrap().unwrap(), x);
        }
        // Singular system returns None.
        let s = MatrixNF::from_rows(
            Arc::clone(&k),
            vec![vec![k.one(), k.one()], vec![k.one(), k.one()]],
        );
        assert_eq!(s.solve(&[k.one(), k.zero()]).unwrap(), None);
    }

    #[test]
    fn poly_display() {
        let k = gaussian();
        let p = PolyNF::monomial(Arc::clone(&k), k.one(), 2)
            .sub(&PolyNF::constant(Arc::clone(&k), k.generator()));
        assert_eq!(p.to_string(), "X^2 + (-t)");
        assert_eq!(PolyNF::zero(Arc::clone(&k)).to_string(), "0");
    }
}

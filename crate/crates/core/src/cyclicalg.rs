//! Crossed-product algebras `D = (K/Q, sigma, a)` for a cyclic extension
//! `K/Q` of degree `d` with Galois generator `sigma` and a nonzero rational
//! parameter `a`.
//!
//! `D` has a `K`-basis `x^0, ..., x^(d-1)` with relations `x^d = a` and
//! `b * x = x * sigma(b)` for `b` in `K`; elements are stored as coordinate
//! vectors `z = sum_i x^i b_i` with the field coefficients written to the
//! right of the powers of `x`. The regular representation (left
//! multiplication on `D` as a right `K`-vector space) gives exact matrices
//! over `K`, from which the reduced norm, trace, and characteristic
//! polynomial are computed.

use std::fmt;
use std::sync::Arc;

use crate::matrixnf::MatrixNF;
use crate::numberfield::{is_galois_norm, FieldError, NFElement, NormTest, NumberField};
use crate::rational::Rational;
use crate::unipoly::UniPoly;
use num_traits::{One, Zero};

/// Errors from algebra construction and arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraError {
    /// The structure parameter `a` must be a nonzero rational.
    ZeroParameter,
    /// The element has no two-sided inverse (its regular representation is
    /// singular); the payload displays the element.
    NotInvertible(String),
    /// A quantity that must be rational (reduced norm, trace, or a reduced
    /// characteristic polynomial coefficient) failed to be; indicates an
    /// inconsistent field description.
    NotRational(String),
    /// An underlying field operation failed.
    Field(FieldError),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::ZeroParameter => write!(f, "the algebra parameter a must be nonzero"),
            AlgebraError::NotInvertible(z) => write!(f, "element {z} is not invertible"),
            AlgebraError::NotRational(what) => {
                write!(f, "expected a rational value but found {what}")
            }
            AlgebraError::Field(e) => write!(f, "field error: {e}"),
        }
    }
}

impl std::error::Error for AlgebraError {}

impl From<FieldError> for AlgebraError {
    fn from(e: FieldError) -> Self {
        AlgebraError::Field(e)
    }
}

/// The crossed-product algebra `(K/Q, sigma, a)`.
#[derive(Debug, PartialEq)]
pub struct CyclicAlgebra {
    field: Arc<NumberField>,
    a: Rational,
}

impl CyclicAlgebra {
    pub fn new(field: Arc<NumberField>, a: Rational) -> Result<Arc<Self>, AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::ZeroParameter);
        }
        Ok(Arc::new(CyclicAlgebra { field, a }))
    }

    /// The degree `d` of the extension; `D` has dimension `d^2` over `Q`.
    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn parameter(&self) -> &Rational {
        &self.a
    }

    pub fn describe(&self) -> String {
        format!("crossed product ({}; a = {})", self.field.describe(), self.a)
    }

    pub fn zero(self: &Arc<Self>) -> AlgElement {
        let coords = vec![self.field.zero(); self.degree()];
        AlgElement { algebra: Arc::clone(self), coords }
    }

    pub fn one(self: &Arc<Self>) -> AlgElement {
        self.from_field(self.field.one())
    }

    /// The distinguished generator `x` (with `x^d = a`).
    pub fn x(self: &Arc<Self>) -> AlgElement {
        if self.degree() == 1 {
            // x^1 = a already in the base field.
            return self.scalar(self.a.clone());
        }
        self.single_term(1, self.field.one())
    }

    pub fn scalar(self: &Arc<Self>, c: Rational) -> AlgElement {
        self.from_field(self.field.rational(c))
    }

    /// Embeds the field `K` as the coefficient of `x^0`.
    pub fn from_field(self: &Arc<Self>, b: NFElement) -> AlgElement {
        self.single_term(0, b)
    }

    /// The element `x^i * b`.
    pub fn single_term(self: &Arc<Self>, i: usize, b: NFElement) -> AlgElement {
        assert!(i < self.degree(), "term index must be below the degree");
        assert!(**b.field() == *self.field, "coefficient from a different field");
        let mut z = self.zero();
        z.coords[i] = b;
        z
    }

    /// Builds an element from its full coordinate vector.
    pub fn element(self: &Arc<Self>, coords: Vec<NFElement>) -> AlgElement {
        assert_eq!(coords.len(), self.degree(), "need exactly d coordinates");
        for b in &coords {
            assert!(**b.field() == *self.field, "coefficient from a different field");
        }
        AlgElement { algebra: Arc::clone(self), coords }
    }
}

/// An element `z = sum_i x^i b_i` of a crossed-product algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgElement {
    algebra: Arc<CyclicAlgebra>,
    coords: Vec<NFElement>,
}

impl AlgElement {
    pub fn algebra(&self) -> &Arc<CyclicAlgebra> {
        &self.algebra
    }

    pub fn coords(&self) -> &[NFElement] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(NFElement::is_zero)
    }

    /// When the element is `x^i * b` with a single nonzero coefficient,
    /// returns `(i, b)`.
    pub fn as_single_term(&self) -> Option<(usize, &NFElement)> {
        let mut found = None;
        for (i, b) in self.coords.iter().enumerate() {
            if !b.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((i, b));
            }
        }
        found
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.algebra == other.algebra, "elements of different algebras");
        AlgElement {
            algebra: Arc::clone(&self.algebra),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgElement {
            algebra: Arc::clone(&self.algebra),
            coords: self.coords.iter().map(NFElement::neg).collect(),
        }
    }

    /// Product via the defining relations:
    /// `(x^i b)(x^j c) = x^((i+j) mod d) * a^[i+j >= d] * sigma^j(b) * c`.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.algebra == other.algebra, "elements of different algebras");
        let d = self.algebra.degree();
        let field = &self.algebra.field;
        let a_elem = field.rational(self.algebra.a.clone());
        let mut out = vec![field.zero(); d];
        for (i, b) in self.coords.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (j, c) in other.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let k = (i + j) % d;
                let mut term = b.galois(j).mul(c);
                if i + j >= d {
                    term = term.mul(&a_elem);
                }
                out[k] = out[k].add(&term);
            }
        }
        AlgElement { algebra: Arc::clone(&self.algebra), coords: out }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = self.algebra.one();
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

    /// The regular representation: the matrix of left multiplication by this
    /// element on `D` viewed as a right `K`-vector space with basis
    /// `x^0, ..., x^(d-1)`. Closed form:
    /// `M[r][j] = (a if r < j else 1) * sigma^j(b_((r - j) mod d))`.
    pub fn regular_rep(&self) -> MatrixNF {
        let d = self.algebra.degree();
        let field = &self.algebra.field;
        let a_elem = field.rational(self.algebra.a.clone());
        MatrixNF::from_fn(Arc::clone(field), d, |r, j| {
            let idx = (r + d - j % d) % d;
            let base = self.coords[idx].galois(j);
            if r < j {
                base.mul(&a_elem)
            } else {
                base
            }
        })
    }

    /// Reduced characteristic polynomial: `det(tI - rep(z))`, which has
    /// rational coefficients.
    pub fn reduced_char_poly(&self) -> Result<UniPoly, AlgebraError> {
        let cp = self.regular_rep().char_poly()?;
        Ok(cp.to_unipoly()?)
    }

    /// Reduced norm: `det(rep(z))`, a rational number.
    pub fn reduced_norm(&self) -> Result<Rational, AlgebraError> {
        let det = self.regular_rep().det()?;
        det.as_rational()
            .ok_or_else(|| AlgebraError::NotRational(det.to_string()))
    }

    /// Reduced trace: `trace(rep(z))`, a rational number.
    pub fn reduced_trace(&self) -> Result<Rational, AlgebraError> {
        let tr = self.regular_rep().trace();
        tr.as_rational()
            .ok_or_else(|| AlgebraError::NotRational(tr.to_string()))
    }

    /// Two-sided inverse, obtained by solving `rep(z) * w = e_0`.
    pub fn inv(&self) -> Result<AlgElement, AlgebraError> {
        let d = self.algebra.degree();
        let field = &self.algebra.field;
        let mut rhs = vec![field.zero(); d];
        rhs[0] = field.one();
        match self.regular_rep().solve(&rhs)? {
            Some(coords) => Ok(AlgElement { algebra: Arc::clone(&self.algebra), coords }),
            None => Err(AlgebraError::NotInvertible(self.to_string())),
        }
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, b) in self.coords.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({b})")?,
                1 => write!(f, "x*({b})")?,
                _ => write!(f, "x^{i}*({b})")?,
            }
        }
        Ok(())
    }
}

/// Outcome of the division-algebra decision.
#[derive(Debug, Clone, PartialEq)]
pub enum Division {
    /// Certified division algebra.
    Yes,
    /// Certified not division: `witness` has field norm equal to `a^power`
    /// (with `1 <= power < d`), so the algebra has zero divisors or is
    /// otherwise not of full index.
    No { witness: NFElement, power: usize },
    /// The bounded searches were inconclusive.
    Unknown,
}

impl Division {
    pub fn is_yes(&self) -> bool {
        matches!(self, Division::Yes)
    }
}

impl fmt::Display for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Division::Yes => write!(f, "division algebra: yes"),
            Division::No { witness, power } => write!(
                f,
                "division algebra: no (norm of {witness} equals a^{power})"
            ),
            Division::Unknown => write!(f, "division algebra: undetermined by bounded search"),
        }
    }
}

/// Decides (where possible) whether the algebra is a division algebra.
///
/// The algebra fails to be division exactly when some power `a^i` with
/// `1 <= i < d` lies in the norm group `N(K^x)`: a norm witness for `a^i`
/// certifies that the algebra's class has order below `d` in the Brauer
/// group, and over the rationals the index of the class equals its order,
/// so full index `d` (division) is equivalent to no such `i` existing.
///
/// * `d = 1`: trivially division (the algebra is `Q`).
/// * `d = 2`: the norm test for `a` itself is a complete decision (local
///   conditions at finitely many places), so both answers are certified.
/// * `d >= 3`: each norm test can certify a witness but not its absence,
///   so the answer is `No` (with witness and power) or `Unknown` - never
///   an uncertified `Yes`.
pub fn is_division(alg: &Arc<CyclicAlgebra>, height_bound: u32) -> Result<Division, AlgebraError> {
    let d = alg.degree();
    if d == 1 {
        return Ok(Division::Yes);
    }
    let field = alg.field();
    if d == 2 {
        return Ok(match is_galois_norm(field, &alg.a, height_bound)? {
            NormTest::Yes(w) => Division::No { witness: w, power: 1 },
            NormTest::No => Division::Yes,
            NormTest::Unknown => Division::Unknown,
        });
    }
    let powers: Vec<Rational> = {
        let mut acc = Rational::one();
        (1..d)
            .map(|_| {
                acc *= &alg.a;
                acc.clone()
            })
            .collect()
    };
    // First pass: rational witnesses (a^i a perfect d-th power) are free.
    for (idx, p) in powers.iter().enumerate() {
        if let Some(r) = crate::rational::rational_nth_root(p, d as u32) {
            return Ok(Division::No { witness: field.rational(r), power: idx + 1 });
        }
    }
    // Second pass: bounded witness searches in the field.
    for (idx, p) in powers.iter().enumerate() {
        if let NormTest::Yes(w) = is_galois_norm(field, p, height_bound)? {
            return Ok(Division::No { witness: w, power: idx + 1 });
        }
    }
    Ok(Division::Unknown)
}

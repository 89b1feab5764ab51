//! Dense univariate polynomials with rational coefficients.
//!
//! Coefficients are stored in ascending order with no trailing zeros, so the
//! zero polynomial is the empty vector and derived equality is structural
//! equality. The variable is rendered as `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{exact_string, Rational};

/// A polynomial in one variable over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    fn trimmed(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients `c0 + c1 t + ...`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self::trimmed(coeffs)
    }

    /// Builds a polynomial from ascending integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::trimmed(coeffs.iter().map(|&c| crate::rational::rat_int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::trimmed(vec![c])
    }

    /// The polynomial `t`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// The polynomial `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
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

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    /// Panics if `divisor` is zero.
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor.leading().expect("division by the zero polynomial");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        while rem.len() > ddeg {
            let c = rem.last().unwrap() / dlead;
            let k = rem.len() - 1 - ddeg;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let t = dc * &c;
                    rem[k + i] -= t;
                }
            }
            quot[k] = c;
            // The leading term cancels exactly; drop it and any new zeros.
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::trimmed(quot), UniPoly { coeffs: rem })
    }

    /// Remainder of division by `modulus`.
    pub fn rem_by(&self, modulus: &Self) -> Self {
        self.divmod(modulus).1
    }

    /// Greatest common divisor, normalized monic (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem_by(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns monic `g` and `(u, v)` with `u*self + v*other = g`.
    pub fn egcd(&self, other: &Self) -> (Self, Self, Self) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let (mut u0, mut u1) = (Self::one(), Self::zero());
        let (mut v0, mut v1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let nu = &u0 - &(&q * &u1);
            u0 = std::mem::replace(&mut u1, nu);
            let nv = &v0 - &(&q * &v1);
            v0 = std::mem::replace(&mut v1, nv);
        }
        match r0.leading() {
            None => (Self::zero(), Self::zero(), Self::zero()),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::trimmed(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    /// True when the polynomial has no repeated roots (gcd with the
    /// derivative is constant). Constants count as squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Evaluates at a rational point by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `g` for the variable.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// Substitutes `g` for the variable, reducing modulo `modulus` at each
    /// step. Equivalent to `self.compose(g).rem_by(modulus)` but keeps
    /// intermediate degrees below `deg modulus`.
    pub fn compose_mod(&self, g: &Self, modulus: &Self) -> Self {
        let g = g.rem_by(modulus);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = (&(&acc * &g) + &Self::constant(c.clone())).rem_by(modulus);
        }
        acc
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::trimmed(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::trimmed(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UniPoly::trimmed(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                write!(f, "{}", exact_string(&mag))?;
            }
            if k > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}

//! Places of the rationals, Hilbert symbols, invariant vectors of
//! quaternion classes, and the root-of-unity obstruction used to rule out
//! elements of large multiplicative order in crossed products of 2-power
//! degree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{
    euler_phi, is_prime, legendre, ord_mod, p_part, prime_support, primes_up_to, unit_mod8,
    ArithError,
};
use crate::cyclicalg::CyclicAlgebra;
use crate::rational::Rational;

/// A place of the rationals: a finite prime or the archimedean place.
/// Ordering puts primes first (ascending), then infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "infinity"),
        }
    }
}

/// Error from parsing a place name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePlaceError(pub String);

impl fmt::Display for ParsePlaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid place '{}': expected a prime number or 'infinity'",
            self.0
        )
    }
}

impl std::error::Error for ParsePlaceError {}

impl FromStr for Place {
    type Err = ParsePlaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("infinity")
            || t.eq_ignore_ascii_case("inf")
            || t.eq_ignore_ascii_case("oo")
        {
            return Ok(Place::Infinity);
        }
        match t.parse::<u64>() {
            Ok(p) if is_prime(p) => Ok(Place::Prime(p)),
            _ => Err(ParsePlaceError(s.to_string())),
        }
    }
}

/// Errors specific to Brauer-class computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrauerError {
    /// Invariant vectors are computed here only for degree-2 algebras.
    DegreeNotTwo(usize),
    /// The root-of-unity obstruction concerns degrees 3 and above.
    DegreeTooSmall(usize),
    /// Multiplicative order requires coprime arguments.
    NotCoprime(u64, u64),
    Arith(ArithError),
}

impl fmt::Display for BrauerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrauerError::DegreeNotTwo(d) => {
                write!(f, "invariant vectors are implemented for degree 2 only (got {d})")
            }
            BrauerError::DegreeTooSmall(d) => {
                write!(f, "the root-of-unity obstruction applies to degree 3 and above (got {d})")
            }
            BrauerError::NotCoprime(a, n) => {
                write!(f, "{a} and {n} are not coprime, so no multiplicative order exists")
            }
            BrauerError::Arith(e) => write!(f, "arithmetic error: {e}"),
        }
    }
}

impl std::error::Error for BrauerError {}

impl From<ArithError> for BrauerError {
    fn from(e: ArithError) -> Self {
        BrauerError::Arith(e)
    }
}

fn legendre_of_unit(u: &Rational, p: u64) -> i32 {
    legendre(u.numer(), p) * legendre(u.denom(), p)
}

/// The Hilbert symbol `(a, b)_v` in `{1, -1}`: `1` exactly when
/// `z^2 = a x^2 + b y^2` has a nonzero solution over the completion at `v`.
///
/// Computed by the classical closed forms: at infinity `-1` iff both
/// arguments are negative; at an odd prime `p`, writing `a = p^alpha u`,
/// `b = p^beta w` with `u, w` `p`-units,
/// `(a,b)_p = (-1)^(alpha beta (p-1)/2) (u|p)^beta (w|p)^alpha`
/// with Legendre symbols; at `p = 2`,
/// `(a,b)_2 = (-1)^(eps(u) eps(w) + alpha omega(w) + beta omega(u))`
/// where `eps` is `(unit - 1)/2 mod 2` (from the residue mod 4) and
/// `omega` is `(unit^2 - 1)/8 mod 2` (from the residue mod 8).
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: &Place) -> Result<i32, ArithError> {
    if a.is_zero() || b.is_zero() {
        return Err(ArithError::ZeroValue);
    }
    match *v {
        Place::Infinity => Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 }),
        Place::Prime(p) => {
            if !is_prime(p) {
                return Err(ArithError::NotPrime(p));
            }
            let (alpha, u) = p_part(a, p);
            let (beta, w) = p_part(b, p);
            if p == 2 {
                let eps = |x: &Rational| -> i64 {
                    if unit_mod8(x) % 4 == 3 {
                        1
                    } else {
                        0
                    }
                };
                let omega = |x: &Rational| -> i64 {
                    match unit_mod8(x) {
                        3 | 5 => 1,
                        _ => 0,
                    }
                };
                let expo = eps(&u) * eps(&w) + alpha * omega(&w) + beta * omega(&u);
                Ok(if expo.rem_euclid(2) == 0 { 1 } else { -1 })
            } else {
                let sign_expo =
                    (alpha as i128) * (beta as i128) * (((p - 1) / 2) as i128);
                let mut result = if sign_expo.rem_euclid(2) == 0 { 1 } else { -1 };
                if beta.rem_euclid(2) == 1 {
                    result *= legendre_of_unit(&u, p);
                }
                if alpha.rem_euclid(2) == 1 {
                    result *= legendre_of_unit(&w, p);
                }
                Ok(result)
            }
        }
    }
}

/// The finite set of places where `(a, b)_v` can be nontrivial: infinity,
/// 2, and the primes dividing the numerator or denominator of either
/// argument. At every other place both arguments are units at an odd prime,
/// so the symbol is `1`.
pub fn relevant_places(a: &Rational, b: &Rational) -> Result<BTreeSet<Place>, ArithError> {
    let mut out = BTreeSet::new();
    out.insert(Place::Infinity);
    out.insert(Place::Prime(2));
    for p in prime_support(a)? {
        out.insert(Place::Prime(p));
    }
    for p in prime_support(b)? {
        out.insert(Place::Prime(p));
    }
    Ok(out)
}

/// A vector of local invariants, one rational in `[0, 1)` per place, with
/// zero entries omitted. For a quaternion class every stored entry is `1/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantVector {
    entries: BTreeMap<Place, Rational>,
}

impl InvariantVector {
    /// Normalizes all entries into `[0, 1)` (mod 1) and drops zeros.
    pub fn new(raw: BTreeMap<Place, Rational>) -> Self {
        let mut entries = BTreeMap::new();
        for (place, value) in raw {
            let reduced = value.fract();
            let reduced = if reduced.is_negative() {
                reduced + Rational::one()
            } else {
                reduced
            };
            if !reduced.is_zero() {
                entries.insert(place, reduced);
            }
        }
        InvariantVector { entries }
    }

    pub fn entries(&self) -> &BTreeMap<Place, Rational> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> Rational {
        self.entries.values().fold(Rational::zero(), |acc, v| acc + v)
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "trivial (zero at every place)");
        }
        write!(f, "{{")?;
        for (i, (place, value)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{place}: {value}")?;
        }
        write!(f, "}}")
    }
}

/// Structural checks on an invariant vector: the entries must sum to an
/// integer (reciprocity), and the class's order is the least common
/// denominator, which for a division algebra equals its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantChecks {
    pub sum_is_integral: bool,
    pub order: u64,
}

pub fn invariant_checks(v: &InvariantVector) -> InvariantChecks {
    let mut order: u64 = 1;
    for value in v.entries().values() {
        let den = value
            .denom()
            .to_u64()
            .expect("invariant denominators are small");
        order = order.lcm(&den);
    }
    InvariantChecks {
        sum_is_integral: v.sum().is_integer(),
        order,
    }
}

/// Local invariants of a degree-2 crossed product `(K/Q, sigma, a)`:
/// entry `1/2` at exactly the places where `(a, disc K)_v = -1`.
/// The vector is empty iff the algebra splits (is a matrix algebra).
pub fn quaternion_invariants(alg: &Arc<CyclicAlgebra>) -> Result<InvariantVector, BrauerError> {
    if alg.degree() != 2 {
        return Err(BrauerError::DegreeNotTwo(alg.degree()));
    }
    let f = alg.field().defining_poly();
    let p = f.coeff(1);
    let q = f.coeff(0);
    let disc = &p * &p - Rational::from_integer(4.into()) * q;
    let a = alg.parameter();
    let half = Rational::new(1.into(), 2.into());
    let mut raw = BTreeMap::new();
    for v in relevant_places(a, &disc)? {
        if hilbert_symbol(a, &disc, &v)? == -1 {
            raw.insert(v, half.clone());
        }
    }
    Ok(InvariantVector::new(raw))
}

/// Multiplicative order of `a` modulo `n` (requires `gcd(a, n) = 1`).
pub fn multiplicative_order(a: u64, n: u64) -> Result<u64, BrauerError> {
    if n == 0 || a.gcd(&n) != 1 {
        return Err(BrauerError::NotCoprime(a, n));
    }
    Ok(ord_mod(a % n.max(1), n))
}

/// Which mechanism rules out a primitive root of unity of maximal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionBranch {
    /// `phi(r)` does not divide `d`, so the cyclotomic field of the root
    /// does not embed in any degree-`d` crossed product over the rationals.
    DegreeObstruction,
    /// `d` is a power of 2 and `r = 2d`: the multiplicative group modulo
    /// `2d` has exponent `d/2 < d`, so at every odd prime the local order
    /// of the residue is too small for a degree-`d` division algebra to
    /// contain the root. The bound was confirmed for all odd primes up to
    /// the requested limit.
    LocalOrderObstruction {
        modulus: u64,
        exponent_bound: u64,
        max_order_seen: u64,
        primes_checked: usize,
    },
}

/// Report on why no element of multiplicative order `r` (with `r = d` for
/// odd `d`, else `r = 2d`) exists in a degree-`d` division crossed product
/// over the rationals, for `d >= 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootOfUnityReport {
    pub d: u64,
    pub r: u64,
    pub phi_r: u64,
    pub branch: ObstructionBranch,
}

impl fmt::Display for RootOfUnityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "degree d = {}: a {}-cycle witness would be a root of unity of order r = {} \
             (phi(r) = {})",
            self.d, self.d, self.r, self.phi_r
        )?;
        match &self.branch {
            ObstructionBranch::DegreeObstruction => write!(
                f,
                "excluded: phi({}) = {} does not divide d = {}, so the order-{} cyclotomic \
                 field cannot embed in the algebra",
                self.r, self.phi_r, self.d, self.r
            ),
            ObstructionBranch::LocalOrderObstruction {
                modulus,
                exponent_bound,
                max_order_seen,
                primes_checked,
            } => write!(
                f,
                "excluded: d is a power of 2; every odd prime has multiplicative order at \
                 most {exponent_bound} modulo {modulus} (maximum seen {max_order_seen} over \
                 {primes_checked} primes), below d = {}, so no local division algebra of \
                 degree d contains the root",
                self.d
            ),
        }
    }
}

/// Builds the root-of-unity obstruction report for degree `d >= 3`,
/// verifying the local order bound over all odd primes up to
/// `odd_prime_bound` when `d` is a power of 2.
pub fn root_of_unity_report(d: u64, odd_prime_bound: u64) -> Result<RootOfUnityReport, BrauerError> {
    if d < 3 {
        return Err(BrauerError::DegreeTooSmall(d as usize));
    }
    let r = if d % 2 == 1 { d } else { 2 * d };
    let phi_r = euler_phi(r);
    if d % phi_r != 0 {
        return Ok(RootOfUnityReport {
            d,
            r,
            phi_r,
            branch: ObstructionBranch::DegreeObstruction,
        });
    }
    // phi(r) divides d only when d is a power of 2 (then r = 2d and
    // phi(2d) = d). Cross-check rather than assume.
    assert!(d.is_power_of_two() && r == 2 * d && phi_r == d,
        "unexpected arithmetic: phi({r}) divides d = {d} but d is not a power of 2");
    let modulus = 2 * d; // = 2^(e+1) for d = 2^e
    let exponent_bound = d / 2; // exponent of the units modulo 2^(e+1)
    let mut max_order_seen = 0;
    let mut primes_checked = 0;
    for p in primes_up_to(odd_prime_bound) {
        if p == 2 {
            continue;
        }
        let ord = multiplicative_order(p, modulus)?;
        assert!(
            ord <= exponent_bound,
            "order of {p} mod {modulus} exceeded the exponent bound"
        );
        max_order_seen = max_order_seen.max(ord);
        primes_checked += 1;
    }
    Ok(RootOfUnityReport {
        d,
        r,
        phi_r,
        branch: ObstructionBranch::LocalOrderObstruction {
            modulus,
            exponent_bound,
            max_order_seen,
            primes_checked,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::NumberField;
    use crate::rational::{rat, rat_int};
    use num_bigint::BigInt;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sym(a: i64, b: i64, v: Place) -> i32 {
        hilbert_symbol(&rat_int(a), &rat_int(b), &v).unwrap()
    }

    #[test]
    fn known_symbol_values() {
        assert_eq!(sym(-1, -1, Place::Infinity), -1);
        assert_eq!(sym(-1, -1, Place::Prime(2)), -1);
        assert_eq!(sym(-1, -1, Place::Prime(3)), 1);
        assert_eq!(sym(2, 3, Place::Prime(3)), -1);
        assert_eq!(sym(2, -1, Place::Prime(2)), 1);
        assert_eq!(sym(3, -1, Place::Prime(3)), -1);
        // (-3, -4): ramified at 3 and infinity, split at 2.
        assert_eq!(sym(-3, -4, Place::Prime(2)), 1);
        assert_eq!(sym(-3, -4, Place::Prime(3)), -1);
        assert_eq!(sym(-3, -4, Place::Infinity), -1);
        // Odd-prime units always give 1.
        assert_eq!(sym(3, 5, Place::Prime(7)), 1);
        // Square classes: 1/2 and 2 agree in every completion.
        for v in [Place::Prime(2), Place::Prime(3), Place::Prime(5), Place::Infinity] {
            assert_eq!(
                hilbert_symbol(&rat(1, 2), &rat_int(-3), &v).unwrap(),
                hilbert_symbol(&rat_int(2), &rat_int(-3), &v).unwrap()
            );
        }
    }

    #[test]
    fn symbol_input_validation() {
        assert_eq!(
            hilbert_symbol(&rat_int(0), &rat_int(1), &Place::Prime(2)),
            Err(ArithError::ZeroValue)
        );
        assert_eq!(
            hilbert_symbol(&rat_int(1), &rat_int(1), &Place::Prime(4)),
            Err(ArithError::NotPrime(4))
        );
    }

    fn random_smooth(rng: &mut ChaCha8Rng) -> Rational {
        // sign * 2^e1 * 3^e2 * 5^e3 * 7^e4 with exponents in -2..=2.
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut v = rat_int(sign);
        for p in [2i64, 3, 5, 7] {
            let e: i32 = rng.gen_range(-2..=2);
            for _ in 0..e.abs() {
                if e > 0 {
                    v *= rat_int(p);
                } else {
                    v *= rat(1, p);
                }
            }
        }
        v
    }

    #[test]
    fn symbol_properties_and_product_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let places = [
            Place::Prime(2),
            Place::Prime(3),
            Place::Prime(5),
            Place::Prime(7),
            Place::Prime(11),
            Place::Infinity,
        ];
        for _ in 0..40 {
            let a = random_smooth(&mut rng);
            let b = random_smooth(&mut rng);
            let c = random_smooth(&mut rng);
            for v in &places {
                // Symmetry.
                assert_eq!(
                    hilbert_symbol(&a, &b, v).unwrap(),
                    hilbert_symbol(&b, &a, v).unwrap()
                );
                // Bimultiplicativity.
                let ab_c = hilbert_symbol(&(&a * &b), &c, v).unwrap();
                assert_eq!(
                    ab_c,
                    hilbert_symbol(&a, &c, v).unwrap() * hilbert_symbol(&b, &c, v).unwrap()
                );
                // (a, -a) = 1 always.
                assert_eq!(hilbert_symbol(&a, &(-&a), v).unwrap(), 1);
                // Values lie in {1, -1}.
                assert!(matches!(hilbert_symbol(&a, &b, v).unwrap(), 1 | -1));
            }
            // Product over all relevant places is 1 (symbols are 1
            // elsewhere because both arguments are odd-prime units there).
            let mut prod = 1;
            for v in relevant_places(&a, &b).unwrap() {
                prod *= hilbert_symbol(&a, &b, &v).unwrap();
            }
            assert_eq!(prod, 1, "product formula failed for a = {a}, b = {b}");
        }
    }

    #[test]
    fn relevant_places_shape() {
        let set = relevant_places(&rat(5, 3), &rat_int(-14)).unwrap();
        let expected: BTreeSet<Place> = [
            Place::Prime(2),
            Place::Prime(3),
            Place::Prime(5),
            Place::Prime(7),
            Place::Infinity,
        ]
        .into_iter()
        .collect();
        assert_eq!(set, expected);
        // Ordering: primes ascending, then infinity.
        let listed: Vec<Place> = set.into_iter().collect();
        assert_eq!(listed.last(), Some(&Place::Infinity));
    }

    #[test]
    fn place_parsing_and_display() {
        assert_eq!("2".parse::<Place>().unwrap(), Place::Prime(2));
        assert_eq!("97".parse::<Place>().unwrap(), Place::Prime(97));
        assert_eq!("infinity".parse::<Place>().unwrap(), Place::Infinity);
        assert_eq!("inf".parse::<Place>().unwrap(), Place::Infinity);
        assert!("4".parse::<Place>().is_err());
        assert!("-3".parse::<Place>().is_err());
        assert!("xyz".parse::<Place>().is_err());
        assert_eq!(Place::Prime(2).to_string(), "2");
        assert_eq!(Place::Infinity.to_string(), "infinity");
    }

    #[test]
    fn invariant_vector_normalization() {
        let mut raw = BTreeMap::new();
        raw.insert(Place::Prime(2), rat(3, 2)); // -> 1/2
        raw.insert(Place::Prime(3), rat_int(1)); // -> dropped
        raw.insert(Place::Prime(5), rat(-1, 4)); // -> 3/4
        let v = InvariantVector::new(raw);
        assert_eq!(v.entries().len(), 2);
        assert_eq!(v.entries()[&Place::Prime(2)], rat(1, 2));
        assert_eq!(v.entries()[&Place::Prime(5)], rat(3, 4));
    }

    #[test]
    fn quaternion_invariant_vectors() {
        // Hamilton quaternions (-1, -1): ramified exactly at 2 and infinity.
        let k = NumberField::quadratic(BigInt::from(-1)).unwrap();
        let hamilton = CyclicAlgebra::new(Arc::clone(&k), rat_int(-1)).unwrap();
        let v = quaternion_invariants(&hamilton).unwrap();
        let half = rat(1, 2);
        assert_eq!(v.entries().len(), 2);
        assert_eq!(v.entries()[&Place::Prime(2)], half);
        assert_eq!(v.entries()[&Place::Infinity], half);
        let checks = invariant_checks(&v);
        assert!(checks.sum_is_integral);
        assert_eq!(checks.order, 2);

        // (Q(i)/Q, -3): ramified at 3 and infinity.
        let a3 = CyclicAlgebra::new(Arc::clone(&k), rat_int(-3)).unwrap();
        let v3 = quaternion_invariants(&a3).unwrap();
        assert_eq!(v3.entries().len(), 2);
        assert_eq!(v3.entries()[&Place::Prime(3)], half);
        assert_eq!(v3.entries()[&Place::Infinity], half);

        // (Q(i)/Q, 2) splits: trivial vector, order 1.
        let a2 = CyclicAlgebra::new(Arc::clone(&k), rat_int(2)).unwrap();
        let v2 = quaternion_invariants(&a2).unwrap();
        assert!(v2.is_zero());
        assert_eq!(invariant_checks(&v2).order, 1);

        // Degree != 2 is rejected.
        let c5 = NumberField::cyclotomic_prime(5).unwrap();
        let big = CyclicAlgebra::new(c5, rat_int(3)).unwrap();
        assert_eq!(
            quaternion_invariants(&big).unwrap_err(),
            BrauerError::DegreeNotTwo(4)
        );
    }

    #[test]
    fn invariant_sums_over_random_quaternions() {
        // Reciprocity: the number of ramified places is always even.
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..20 {
            let m = loop {
                let m = rng.gen_range(-15i64..=15);
                if m != 0
                    && m != 1
                    && crate::arith::is_squarefree_int(&BigInt::from(m)).unwrap()
                {
                    break m;
                }
            };
            let a = loop {
                let a = random_smooth(&mut rng);
                if !a.is_zero() {
                    break a;
                }
            };
            let k = NumberField::quadratic(BigInt::from(m)).unwrap();
            let alg = CyclicAlgebra::new(k, a).unwrap();
            let v = quaternion_invariants(&alg).unwrap();
            assert!(v.entries().len() % 2 == 0, "m = {m}");
            assert!(invariant_checks(&v).sum_is_integral);
        }
    }

    #[test]
    fn multiplicative_order_basics() {
        assert_eq!(multiplicative_order(3, 8).unwrap(), 2);
        assert_eq!(multiplicative_order(2, 5).unwrap(), 4);
        assert_eq!(multiplicative_order(7, 16).unwrap(), 2);
        assert_eq!(
            multiplicative_order(6, 8).unwrap_err(),
            BrauerError::NotCoprime(6, 8)
        );
    }

    #[test]
    fn root_of_unity_branches() {
        // Small degrees: the power-of-2 degrees take the local branch,
        // everything else the degree branch.
        for d in 3u64..=12 {
            let report = root_of_unity_report(d, 1000).unwrap();
            let expect_local = d.is_power_of_two();
            match report.branch {
                ObstructionBranch::DegreeObstruction => {
                    assert!(!expect_local, "d = {d}");
                    assert_ne!(d % report.phi_r, 0);
                }
                ObstructionBranch::LocalOrderObstruction {
                    modulus,
                    exponent_bound,
                    max_order_seen,
                    primes_checked,
                } => {
                    assert!(expect_local, "d = {d}");
                    assert_eq!(modulus, 2 * d);
                    assert_eq!(exponent_bound, d / 2);
                    assert!(max_order_seen <= exponent_bound);
                    assert!(primes_checked > 0);
                }
            }
            // r and phi(r) are as documented.
            let r = if d % 2 == 1 { d } else { 2 * d };
            assert_eq!(report.r, r);
            assert_eq!(report.phi_r, euler_phi(r));
        }
        assert_eq!(
            root_of_unity_report(2, 100).unwrap_err(),
            BrauerError::DegreeTooSmall(2)
        );
    }

    #[test]
    fn local_orders_mod_eight() {
        // For d = 4: every odd prime has order 1 or 2 modulo 8.
        for p in primes_up_to(100) {
            if p == 2 {
                continue;
            }
            let ord = multiplicative_order(p, 8).unwrap();
            assert!(ord == 1 || ord == 2, "p = {p}");
        }
    }
}

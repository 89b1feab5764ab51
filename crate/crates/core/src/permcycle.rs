//! Permutations of `{1, ..., d}`, cycle types, exclusion predicates, and
//! exact censuses of the symmetric group.
//!
//! Three predicates on cycle types matter downstream; each one bars a
//! conjugacy class of monomial matrices from containing the image of a unit
//! of a degree-`d` division algebra:
//!
//! - **unique smallest**: the shortest cycle length occurs exactly once (the
//!   single `d`-cycle itself does not count);
//! - **big**: some cycle length `k` satisfies `d/2 < k < d`;
//! - **lonely**: some length `k` such that (1) no nonempty sub-multiset of
//!   the remaining lengths sums exactly to `k`, and (2) if `k` is the
//!   maximal length then `k` does not divide `d`.
//!
//! Big and unique-smallest cycles are always lonely, so "lonely" is the
//! strongest of the three. A `d`-cycle is never lonely (condition 2).
//!
//! Censuses count permutations by exact multinomial formulas; brute-force
//! enumeration oracles live in the test and verification code.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::Rational;

/// Largest degree accepted by [`census`]. Partition counts grow rapidly;
/// this cap keeps every census exact and fast.
pub const MAX_CENSUS_DEGREE: usize = 60;

/// Error raised by permutation and census routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// The image vector is not a bijection on `{0, ..., d-1}`.
    NotAPermutation,
    /// Census degree outside `1..=MAX_CENSUS_DEGREE`.
    DegreeOutOfRange(usize),
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotAPermutation => write!(f, "images do not form a permutation"),
            PermError::DegreeOutOfRange(d) => {
                write!(f, "degree {d} outside the supported census range 1..={MAX_CENSUS_DEGREE}")
            }
        }
    }
}

impl std::error::Error for PermError {}

/// A permutation of `{0, ..., d-1}` (rendered 1-based in cycle notation).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `d` points.
    pub fn identity(d: usize) -> Self {
        Permutation { images: (0..d).collect() }
    }

    /// Builds a permutation from its image vector (`i -> images[i]`,
    /// 0-based).
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &j in &images {
            if j >= d || seen[j] {
                return Err(PermError::NotAPermutation);
            }
            seen[j] = true;
        }
        Ok(Permutation { images })
    }

    /// Number of points moved or fixed (the `d` in `S_d`).
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the point `i` (0-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// The 0-based image vector.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composition `self AFTER other`: `(self.compose(&other))(i) =
    /// self(other(i))`. Both factors must have the same degree.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles, each rotated to start at its smallest point and
    /// listed by increasing smallest point. Fixed points are included as
    /// singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            out.push(cycle);
        }
        out
    }

    /// The multiset of cycle lengths.
    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            write!(f, "(")?;
            for (pos, p) in cycle.iter().enumerate() {
                if pos > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A cycle type: a multiset of positive cycle lengths, stored in
/// non-increasing order. The degree `d` is the sum of the parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Builds a cycle type from parts in any order. Panics on an empty list
    /// or a zero part.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(!parts.is_empty(), "a cycle type needs at least one part");
        assert!(parts.iter().all(|&k| k >= 1), "cycle lengths are positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec())
    }

    /// Parts in non-increasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The degree `d = sum of parts`.
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True for the single long cycle `{d}`.
    pub fn is_d_cycle(&self) -> bool {
        self.parts.len() == 1
    }

    /// Length -> multiplicity, ascending by length.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &k in &self.parts {
            *out.entry(k).or_insert(0) += 1;
        }
        out
    }

    /// Number of permutations in `S_d` with this cycle type:
    /// `d! / prod_k (k^(m_k) * m_k!)` over lengths `k` of multiplicity `m_k`.
    pub fn count_permutations(&self) -> BigUint {
        let mut denom = BigUint::one();
        for (k, m) in self.multiplicities() {
            denom *= BigUint::from(k).pow(m as u32);
            denom *= factorial(m);
        }
        factorial(self.degree()) / denom
    }

    /// Evaluates the three exclusion predicates on this type.
    pub fn classify(&self) -> TypeFlags {
        let d = self.degree();
        let mult = self.multiplicities();
        let min_len = *mult.keys().next().unwrap();
        let max_len = *mult.keys().next_back().unwrap();
        let unique_smallest = !self.is_d_cycle() && mult[&min_len] == 1;
        let big = self.parts.iter().any(|&k| 2 * k > d && k < d);
        let mut lonely = Vec::new();
        for &k in mult.keys() {
            // Condition 1: no nonempty sub-multiset of the other lengths
            // sums exactly to k. Subset sums are tracked in a bitset.
            debug_assert!(d < 128);
            let mut sums: u128 = 1; // bit s set <=> s is a reachable sum
            for &j in &self.parts {
                if j == k {
                    continue; // skipped copy handled below
                }
                if j <= k {
                    sums |= sums << j;
                }
            }
            // The remaining copies of k itself (multiplicity - 1 of them):
            // a single extra copy already sums to k.
            let other_copy_hits = mult[&k] > 1;
            let condition1 = !other_copy_hits && (sums >> k) & 1 == 0;
            // Condition 2: a maximal length must not divide d.
            let condition2 = k != max_len || d % k != 0;
            if condition1 && condition2 {
                lonely.push(k);
            }
        }
        TypeFlags { unique_smallest, big, lonely, d_cycle: self.is_d_cycle() }
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, k) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

/// Outcome of [`CycleType::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeFlags {
    /// The smallest length occurs once (and the type is not the `d`-cycle).
    pub unique_smallest: bool,
    /// Some length `k` has `d/2 < k < d`.
    pub big: bool,
    /// The distinct lonely lengths, ascending. Empty when none are lonely.
    pub lonely: Vec<usize>,
    /// The type is the single `d`-cycle.
    pub d_cycle: bool,
}

impl TypeFlags {
    /// True when any exclusion predicate applies.
    pub fn excluded(&self) -> bool {
        self.unique_smallest || self.big || !self.lonely.is_empty()
    }
}

/// A census predicate selectable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Lonely,
    Big,
    UniqueSmallest,
    /// Any of the three exclusion predicates.
    AnyExclusion,
}

impl Predicate {
    pub fn matches(&self, flags: &TypeFlags) -> bool {
        match self {
            Predicate::Lonely => !flags.lonely.is_empty(),
            Predicate::Big => flags.big,
            Predicate::UniqueSmallest => flags.unique_smallest,
            Predicate::AnyExclusion => flags.excluded(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Predicate::Lonely => "lonely",
            Predicate::Big => "big",
            Predicate::UniqueSmallest => "unique-smallest",
            Predicate::AnyExclusion => "any",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "lonely" => Some(Predicate::Lonely),
            "big" => Some(Predicate::Big),
            "unique-smallest" | "unique_smallest" => Some(Predicate::UniqueSmallest),
            "any" | "any-exclusion" => Some(Predicate::AnyExclusion),
            _ => None,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exact census of one predicate over `S_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusResult {
    pub d: usize,
    pub predicate: Predicate,
    /// Number of permutations whose type satisfies the predicate.
    pub count: BigUint,
    /// `d!`.
    pub total: BigUint,
    /// `count / total`, reduced.
    pub fraction: Rational,
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for k in 2..=n {
        out *= BigUint::from(k);
    }
    out
}

/// Calls `f` with every partition of `d` (parts non-increasing), in
/// descending lexicographic order: `[d]`, `[d-1, 1]`, ..., `[1, ..., 1]`.
pub fn for_each_partition(d: usize, mut f: impl FnMut(&[usize])) {
    fn rec(remaining: usize, max_part: usize, stack: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if remaining == 0 {
            f(stack);
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            stack.push(part);
            rec(remaining - part, part, stack, f);
            stack.pop();
        }
    }
    let mut stack = Vec::new();
    rec(d, d, &mut stack, &mut f);
}

/// Exact count and fraction of permutations of `S_d` matching a predicate,
/// summed over cycle types with the multinomial formula. `d` must lie in
/// `1..=MAX_CENSUS_DEGREE`.
pub fn census(d: usize, predicate: Predicate) -> Result<CensusResult, PermError> {
    if d == 0 || d > MAX_CENSUS_DEGREE {
        return Err(PermError::DegreeOutOfRange(d));
    }
    let mut count = BigUint::zero();
    for_each_partition(d, |parts| {
        let ct = CycleType::from_parts(parts);
        if predicate.matches(&ct.classify()) {
            count += ct.count_permutations();
        }
    });
    let total = factorial(d);
    let fraction = Rational::new(count.clone().into(), total.clone().into());
    Ok(CensusResult { d, predicate, count, total, fraction })
}

/// The cycle types matching a predicate, with their permutation counts, in
/// the partition enumeration order. Intended for report output at small `d`.
pub fn census_breakdown(d: usize, predicate: Predicate) -> Result<Vec<(CycleType, BigUint)>, PermError> {
    if d == 0 || d > MAX_CENSUS_DEGREE {
        return Err(PermError::DegreeOutOfRange(d));
    }
    let mut out = Vec::new();
    for_each_partition(d, |parts| {
        let ct = CycleType::from_parts(parts);
        if predicate.matches(&ct.classify()) {
            let n = ct.count_permutations();
            out.push((ct, n));
        }
    });
    Ok(out)
}

/// Exact value of the big-cycle fraction: permutations with a cycle of
/// length `k`, `d/2 < k < d`, are disjoint events of size `d!/k`, so the
/// fraction is the harmonic slice `sum 1/k`. Cost grows with `d`; intended
/// for `d` up to around 10^4.
pub fn big_cycle_fraction_exact(d: usize) -> Rational {
    fn harmonic_slice(lo: usize, hi: usize) -> Rational {
        // Balanced summation keeps intermediate denominators small.
        if lo > hi {
            return Rational::zero();
        }
        if lo == hi {
            return Rational::new(1.into(), (lo as u64).into());
        }
        let mid = lo + (hi - lo) / 2;
        harmonic_slice(lo, mid) + harmonic_slice(mid + 1, hi)
    }
    if d < 3 {
        return Rational::zero();
    }
    harmonic_slice(d / 2 + 1, d - 1)
}

/// Floating-point evaluation of the big-cycle fraction, usable for very
/// large `d`. Display/estimation only — never used on a decision path.
pub fn big_cycle_fraction_f64(d: usize) -> f64 {
    if d < 3 {
        return 0.0;
    }
    let mut sum = 0.0;
    for k in (d / 2 + 1)..d {
        sum += 1.0 / k as f64;
    }
    sum
}

/// Calls `f` with every permutation of `{0, ..., d-1}` exactly once, in
/// lexicographic order of image vectors. Brute-force oracle; cost is `d!`.
pub fn for_each_permutation(d: usize, mut f: impl FnMut(&Permutation)) {
    let mut images: Vec<usize> = (0..d).collect();
    loop {
        f(&Permutation { images: images.clone() });
        // Advance to the next permutation in lexicographic order.
        let Some(i) = (0..d.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            return;
        };
        let j = (i + 1..d).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
}

impl CensusResult {
    /// Fraction as an `f64`, for display.
    pub fn fraction_f64(&self) -> f64 {
        self.fraction.to_f64().unwrap_or(f64::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use std::collections::BTreeMap;

    fn ct(parts: &[usize]) -> CycleType {
        CycleType::from_parts(parts)
    }

    #[test]
    fn permutation_basics() {
        let p = Permutation::from_images(vec![1, 2, 0, 4, 3, 6, 5]).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)(6 7)");
        assert_eq!(p.cycle_type(), ct(&[3, 2, 2]));
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(7));
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
        // compose applies the right factor first.
        let a = Permutation::from_images(vec![1, 0, 2]).unwrap(); // (1 2)
        let b = Permutation::from_images(vec![0, 2, 1]).unwrap(); // (2 3)
        assert_eq!(a.compose(&b).images(), &[1, 2, 0]); // a(b(x)): (1 2 3)
    }

    #[test]
    fn cycle_type_normalization_and_count() {
        assert_eq!(ct(&[2, 3, 2]).parts(), &[3, 2, 2]);
        assert_eq!(ct(&[3, 2, 2]).degree(), 7);
        assert_eq!(ct(&[3, 2, 2]).to_string(), "{3,2,2}");
        // 7!/(3 * 2^2 * 2!) = 5040/24 = 210 permutations of type {3,2,2}.
        assert_eq!(ct(&[3, 2, 2]).count_permutations(), BigUint::from(210u32));
        // Identity type and d-cycle type.
        assert_eq!(ct(&[1, 1, 1, 1]).count_permutations(), BigUint::from(1u32));
        assert_eq!(ct(&[4]).count_permutations(), BigUint::from(6u32));
        // Counts over all types of a degree sum to d!.
        for d in 1..=9 {
            let mut sum = BigUint::zero();
            for_each_partition(d, |parts| sum += ct(parts).count_permutations());
            assert_eq!(sum, factorial(d), "d = {d}");
        }
    }

    #[test]
    fn classify_matches_worked_examples() {
        // {3,2,2}: the 3-cycle is lonely (3 is not a sum of 2s and does not
        // divide 7); the 2-cycles are not (2 = 2 uses the other copy).
        let f = ct(&[3, 2, 2]).classify();
        assert_eq!(f.lonely, vec![3]);
        assert!(!f.unique_smallest);
        assert!(!f.big);
        assert!(f.excluded());

        // {2,1} in degree 3: smallest part unique, 2 > 3/2 is big, and both
        // lengths are lonely.
        let f = ct(&[2, 1]).classify();
        assert!(f.unique_smallest);
        assert!(f.big);
        assert_eq!(f.lonely, vec![1, 2]);

        // The d-cycle is never flagged by any predicate.
        for d in 2..=12 {
            let f = ct(&[d]).classify();
            assert!(!f.unique_smallest && !f.big && f.lonely.is_empty());
            assert!(f.d_cycle);
            assert!(!f.excluded());
        }

        // Homogeneous types (all parts equal) are never excluded: condition 1
        // fails via a duplicate copy, or condition 2 fails for the lone part.
        for (parts, d) in [(vec![3, 3], 6), (vec![2, 2, 2], 6), (vec![1, 1, 1], 3)] {
            let f = ct(&parts).classify();
            assert!(!f.excluded(), "type of degree {d} wrongly excluded");
        }

        // {4,2} in degree 6: unique smallest, big, and both lengths lonely.
        let f = ct(&[4, 2]).classify();
        assert!(f.unique_smallest && f.big);
        assert_eq!(f.lonely, vec![2, 4]);

        // {2,2,1} in degree 5: only the fixed point is lonely.
        let f = ct(&[2, 2, 1]).classify();
        assert!(f.unique_smallest);
        assert!(!f.big);
        assert_eq!(f.lonely, vec![1]);
    }

    #[test]
    fn big_and_unique_smallest_imply_lonely() {
        for d in 1..=15 {
            for_each_partition(d, |parts| {
                let f = ct(parts).classify();
                if f.unique_smallest || f.big {
                    assert!(
                        !f.lonely.is_empty(),
                        "type {} of degree {d} breaks the implication",
                        ct(parts)
                    );
                }
            });
        }
    }

    #[test]
    fn partition_enumeration_order_and_counts() {
        let mut seen = Vec::new();
        for_each_partition(4, |p| seen.push(p.to_vec()));
        assert_eq!(
            seen,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        let p_counts = [1usize, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (i, &expected) in p_counts.iter().enumerate() {
            let mut n = 0;
            for_each_partition(i + 1, |_| n += 1);
            assert_eq!(n, expected, "p({})", i + 1);
        }
    }

    #[test]
    fn census_small_degrees_match_enumeration() {
        // Independent oracle: walk all d! permutations and classify each one.
        for d in 1..=6 {
            let mut by_pred: BTreeMap<&str, u64> = BTreeMap::new();
            for_each_permutation(d, |p| {
                let flags = p.cycle_type().classify();
                for pred in [
                    Predicate::Lonely,
                    Predicate::Big,
                    Predicate::UniqueSmallest,
                    Predicate::AnyExclusion,
                ] {
                    if pred.matches(&flags) {
                        *by_pred.entry(pred.name()).or_insert(0) += 1;
                    }
                }
            });
            for pred in [
                Predicate::Lonely,
                Predicate::Big,
                Predicate::UniqueSmallest,
                Predicate::AnyExclusion,
            ] {
                let counted = census(d, pred).unwrap().count;
                let enumerated = by_pred.get(pred.name()).copied().unwrap_or(0);
                assert_eq!(counted, BigUint::from(enumerated), "d = {d}, {}", pred.name());
            }
        }
    }

    #[test]
    fn census_known_values() {
        // Degree 4, big cycles: only {3,1} qualifies, 4!/3 = 8 permutations.
        let c = census(4, Predicate::Big).unwrap();
        assert_eq!(c.count, BigUint::from(8u32));
        assert_eq!(c.fraction, rat(1, 3));
        // Degree 10 big-cycle fraction: 1/6 + 1/7 + 1/8 + 1/9 = 275/504.
        let c = census(10, Predicate::Big).unwrap();
        assert_eq!(c.fraction, rat(275, 504));
        assert_eq!(crate::rational::decimal_string(&c.fraction), "0.5456349206");
        // Bounds check.
        assert!(census(0, Predicate::Big).is_err());
        assert!(census(61, Predicate::Big).is_err());
        assert!(census(60, Predicate::Big).is_ok());
    }

    #[test]
    fn big_census_matches_harmonic_closed_form() {
        // # permutations with a k-cycle for d/2 < k < d is exactly d!/k and
        // the events are disjoint, so the census must equal the closed form.
        for d in 2..=12 {
            let c = census(d, Predicate::Big).unwrap();
            assert_eq!(c.fraction, big_cycle_fraction_exact(d), "d = {d}");
            let mut closed = BigUint::zero();
            for k in (d / 2 + 1)..d {
                closed += factorial(d) / BigUint::from(k);
            }
            assert_eq!(c.count, closed, "d = {d}");
        }
    }

    #[test]
    fn fraction_f64_tracks_exact() {
        for d in [10usize, 25, 60, 100, 1000] {
            let exact = big_cycle_fraction_exact(d);
            let approx = big_cycle_fraction_f64(d);
            assert!((exact.to_f64().unwrap() - approx).abs() < 1e-9, "d = {d}");
        }
        // The fraction approaches ln 2 from below and never reaches 0.70.
        let million = big_cycle_fraction_f64(1_000_000);
        assert!((million - std::f64::consts::LN_2).abs() < 1e-2);
        assert!(million < 0.70);
    }

    #[test]
    fn breakdown_lists_matching_types() {
        let rows = census_breakdown(7, Predicate::Lonely).unwrap();
        assert!(rows.iter().any(|(t, n)| t == &ct(&[3, 2, 2]) && *n == BigUint::from(210u32)));
        let total: BigUint = rows.iter().map(|(_, n)| n.clone()).sum();
        assert_eq!(total, census(7, Predicate::Lonely).unwrap().count);
    }
}

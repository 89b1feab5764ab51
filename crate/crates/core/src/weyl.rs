//! Which rotation cosets (and hence which cycle types) are realized on the
//! fundamental apartment by the unit group of a crossed product and by its
//! norm-one subgroup, together with the per-cycle-type exclusion report and
//! a brute-force monomial stabilizer search.
//!
//! Conventions: `phi(d, i)` is the rotation `j -> (j + i) mod d` of the
//! apartment coordinates; the unit `x^i b` acts as `phi(d, i)`. An element
//! of the norm-one subgroup can realize `phi(d, i)` exactly when
//! `(-1)^(i(d-1)) a^i` is a norm from the field.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::One;

use crate::cyclicalg::{is_division, AlgElement, AlgebraError, CyclicAlgebra, Division};
use crate::numberfield::{is_galois_norm, FieldError, NormTest};
use crate::permcycle::{for_each_partition, CycleType, Permutation};
use crate::rational::{rationals_up_to_height, Rational};

/// Largest degree for which the full cycle-type report is generated
/// (partition counts grow quickly beyond this).
pub const MAX_REPORT_DEGREE: usize = 30;

/// Hard cap on the number of candidate vectors a stabilizer search may
/// enumerate.
pub const MAX_SEARCH_CANDIDATES: u128 = 100_000_000;

/// Errors from the Weyl-coset computations.
#[derive(Debug, Clone, PartialEq)]
pub enum WeylError {
    /// Cycle-type reports cover degrees 2 through `MAX_REPORT_DEGREE`.
    DegreeOutOfRange(usize),
    /// The report degree does not match the attached algebra's degree.
    DegreeMismatch { requested: usize, algebra: usize },
    /// Exhaustive stabilizer searches are limited to degree 3.
    SearchDegreeTooLarge(usize),
    /// The requested height bound would enumerate too many candidates.
    SearchSpaceTooLarge(u128),
    Algebra(AlgebraError),
    Field(FieldError),
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::DegreeOutOfRange(d) => write!(
                f,
                "cycle-type reports cover degrees 2 through {MAX_REPORT_DEGREE} (got {d}); \
                 use the census commands for larger degrees"
            ),
            WeylError::DegreeMismatch { requested, algebra } => write!(
                f,
                "requested degree {requested} but the algebra has degree {algebra}"
            ),
            WeylError::SearchDegreeTooLarge(d) => write!(
                f,
                "exhaustive stabilizer searches are limited to degree 3 (got {d})"
            ),
            WeylError::SearchSpaceTooLarge(n) => write!(
                f,
                "the search would enumerate {n} candidate vectors \
                 (limit {MAX_SEARCH_CANDIDATES}); lower the height bound"
            ),
            WeylError::Algebra(e) => write!(f, "algebra error: {e}"),
            WeylError::Field(e) => write!(f, "field error: {e}"),
        }
    }
}

impl std::error::Error for WeylError {}

impl From<AlgebraError> for WeylError {
    fn from(e: AlgebraError) -> Self {
        WeylError::Algebra(e)
    }
}

impl From<FieldError> for WeylError {
    fn from(e: FieldError) -> Self {
        WeylError::Field(e)
    }
}

/// The rotation `j -> (j + i) mod d` on `{0, ..., d-1}`.
pub fn phi(d: usize, i: usize) -> Permutation {
    assert!(d >= 1);
    let images = (0..d).map(|j| (j + i) % d).collect();
    Permutation::from_images(images).expect("rotations are bijections")
}

/// A subgroup of the rotation group, recorded by the exponents `i` of its
/// elements `phi(sigma^i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylSubgroup {
    d: usize,
    powers: Vec<usize>,
}

impl WeylSubgroup {
    pub fn from_powers(d: usize, mut powers: Vec<usize>) -> Self {
        powers.sort_unstable();
        powers.dedup();
        assert!(powers.first() == Some(&0), "subgroups contain the identity");
        assert!(powers.iter().all(|&i| i < d));
        WeylSubgroup { d, powers }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.powers.len()
    }

    pub fn powers(&self) -> &[usize] {
        &self.powers
    }

    pub fn elements(&self) -> Vec<Permutation> {
        self.powers.iter().map(|&i| phi(self.d, i)).collect()
    }

    pub fn contains_power(&self, i: usize) -> bool {
        self.powers.binary_search(&(i % self.d)).is_ok()
    }

    /// The set of cycle types of the elements, with the smallest witnessing
    /// exponent for each.
    pub fn cycle_types(&self) -> BTreeMap<CycleType, usize> {
        let mut out = BTreeMap::new();
        for &i in &self.powers {
            out.entry(phi(self.d, i).cycle_type()).or_insert(i);
        }
        out
    }

    /// Closure check (used by the test suites): the exponent set must be
    /// closed under addition mod `d` and negation mod `d`.
    pub fn is_closed(&self) -> bool {
        for &i in &self.powers {
            if !self.contains_power((self.d - i % self.d) % self.d) {
                return false;
            }
            for &j in &self.powers {
                if !self.contains_power((i + j) % self.d) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for WeylSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, &i) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "phi(sigma^{i})")?;
        }
        write!(f, "}} (order {})", self.order())
    }
}

/// Which group of the algebra is under consideration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// The full unit group.
    UnitGroup,
    /// The kernel of the reduced norm.
    NormOne,
}

impl GroupKind {
    pub fn parse(s: &str) -> Option<GroupKind> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dx" | "units" | "unit-group" => Some(GroupKind::UnitGroup),
            "sl1" | "norm-one" | "normone" => Some(GroupKind::NormOne),
            _ => None,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::UnitGroup => write!(f, "unit group"),
            GroupKind::NormOne => write!(f, "norm-one subgroup"),
        }
    }
}

/// Outcome of testing whether the norm-one subgroup realizes the rotation
/// coset `phi(sigma^i)`: it does exactly when `target = (-1)^(i(d-1)) a^i`
/// is a field norm, and then `z = x^i b^(-1)` (with `N(b) = target`) is an
/// explicit norm-one witness.
#[derive(Debug, Clone, PartialEq)]
pub struct SlCosetTest {
    pub i: usize,
    pub target: Rational,
    pub result: NormTest,
    /// Norm-one element realizing the coset, when `result` is `Yes`.
    pub witness: Option<AlgElement>,
}

impl fmt::Display for SlCosetTest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coset phi(sigma^{}) needs norm target {}: ",
            self.i, self.target
        )?;
        match (&self.result, &self.witness) {
            (NormTest::Yes(b), Some(z)) => {
                write!(f, "realized; N({b}) = target gives the norm-one element {z}")
            }
            (NormTest::Yes(b), None) => write!(f, "realized with norm witness {b}"),
            (NormTest::No, _) => write!(
                f,
                "not a norm (exact local decision), so no norm-one element \
                 of the monomial normalizer realizes this coset"
            ),
            (NormTest::Unknown, _) => {
                write!(f, "undecided by the bounded witness search")
            }
        }
    }
}

/// Tests whether `phi(sigma^i)` is realized by a norm-one element. A `Yes`
/// is unconditional (it carries a verified witness); a `No` is exact for
/// degree-2 fields and means the coset is unrealizable whenever the algebra
/// is division.
pub fn representable_in_sl1(
    alg: &Arc<CyclicAlgebra>,
    i: usize,
    height_bound: u32,
) -> Result<SlCosetTest, WeylError> {
    let d = alg.degree();
    let i = i % d;
    let field = alg.field();
    if i == 0 {
        return Ok(SlCosetTest {
            i,
            target: Rational::one(),
            result: NormTest::Yes(field.one()),
            witness: Some(alg.one()),
        });
    }
    // Nrd(x^i b) = (-1)^(i(d-1)) a^i N(b): the coset is realized by a
    // norm-one monomial element iff that sign times a^i is a norm.
    let mut target = Rational::one();
    for _ in 0..i {
        target *= alg.parameter();
    }
    if (i * (d - 1)) % 2 == 1 {
        target = -target;
    }
    let result = is_galois_norm(field, &target, height_bound)?;
    let witness = match &result {
        NormTest::Yes(b) => {
            let z = alg.single_term(i, b.inv()?);
            let nrd = z.reduced_norm()?;
            assert!(nrd.is_one(), "internal error: constructed witness has norm {nrd}");
            Some(z)
        }
        _ => None,
    };
    Ok(SlCosetTest { i, target, result, witness })
}

/// A computed realized-coset subgroup together with its provenance: the
/// division status used for completeness, whether the listed set is exact,
/// and human-readable notes.
#[derive(Debug, Clone, PartialEq)]
pub struct WeylComputation {
    pub group: GroupKind,
    pub algebra: String,
    pub subgroup: WeylSubgroup,
    pub division: Division,
    /// True when the listed cosets are provably all of them.
    pub exact: bool,
    /// For the norm-one subgroup in degrees `2 mod 4`: the half-turn test.
    pub norm_condition: Option<SlCosetTest>,
    pub notes: Vec<String>,
}

impl fmt::Display for WeylComputation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "realized rotation cosets for the {} of {}", self.group, self.algebra)?;
        writeln!(f, "  subgroup: {}", self.subgroup)?;
        writeln!(f, "  {}", self.division)?;
        writeln!(
            f,
            "  completeness: {}",
            if self.exact {
                "exact (no further cosets are realized)"
            } else {
                "lower bound only (completeness not certified)"
            }
        )?;
        if let Some(nc) = &self.norm_condition {
            writeln!(f, "  {nc}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Rotation cosets realized by the unit group: every `phi(sigma^i)` is
/// realized by the unit `x^i`, unconditionally. The set is complete exactly
/// when the algebra is division.
pub fn weyl_subgroup_dx(
    alg: &Arc<CyclicAlgebra>,
    height_bound: u32,
) -> Result<WeylComputation, WeylError> {
    let d = alg.degree();
    let division = is_division(alg, height_bound)?;
    let exact = division.is_yes();
    let mut notes = vec![
        "each coset phi(sigma^i) is realized by the unit x^i; membership needs no search"
            .to_string(),
    ];
    match &division {
        Division::Yes => notes.push(
            "the algebra is division, so the monomial normalizer accounts for every \
             realized coset"
                .to_string(),
        ),
        Division::No { .. } => notes.push(
            "the algebra is not division: additional cosets may be realized beyond the \
             ones listed"
                .to_string(),
        ),
        Division::Unknown => notes.push(format!(
            "division status undetermined at height bound {height_bound}: the listed \
             cosets are realized, completeness unverified"
        )),
    }
    Ok(WeylComputation {
        group: GroupKind::UnitGroup,
        algebra: alg.describe(),
        subgroup: WeylSubgroup::from_powers(d, (0..d).collect()),
        division,
        exact,
        norm_condition: None,
        notes,
    })
}

/// Rotation cosets realized by the norm-one subgroup: always the identity;
/// additionally the half-turn `phi(sigma^(d/2))` when `d = 2 mod 4` and
/// `-a^(d/2)` is a field norm. For a division algebra this list is exact.
pub fn weyl_subgroup_sl1(
    alg: &Arc<CyclicAlgebra>,
    height_bound: u32,
) -> Result<WeylComputation, WeylError> {
    let d = alg.degree();
    let division = is_division(alg, height_bound)?;
    let mut powers = vec![0usize];
    let mut notes = Vec::new();
    let mut norm_condition = None;
    let mut condition_decided = true;
    if d % 4 == 2 {
        let test = representable_in_sl1(alg, d / 2, height_bound)?;
        match test.result {
            NormTest::Yes(_) => {
                powers.push(d / 2);
                notes.push(format!(
                    "the half-turn coset phi(sigma^{}) is realized by a verified \
                     norm-one element",
                    d / 2
                ));
            }
            NormTest::No => notes.push(format!(
                "the half-turn target -a^{} is certifiably not a norm, so for a \
                 division algebra only the identity coset remains",
                d / 2
            )),
            NormTest::Unknown => {
                condition_decided = false;
                notes.push(format!(
                    "the half-turn norm condition is undecided at height bound \
                     {height_bound}; the coset phi(sigma^{}) may or may not be realized",
                    d / 2
                ));
            }
        }
        norm_condition = Some(test);
    } else if d > 1 {
        notes.push(
            "no half-turn candidate exists in this degree (d is odd or divisible by 4): \
             a norm-one monomial element can only realize the identity coset"
                .to_string(),
        );
    }
    match &division {
        Division::Yes => {}
        Division::No { .. } => notes.push(
            "the algebra is not division: additional cosets may be realized beyond the \
             ones listed"
                .to_string(),
        ),
        Division::Unknown => notes.push(format!(
            "division status undetermined at height bound {height_bound}: the listed \
             cosets are realized, completeness unverified"
        )),
    }
    let exact = division.is_yes() && condition_decided;
    Ok(WeylComputation {
        group: GroupKind::NormOne,
        algebra: alg.describe(),
        subgroup: WeylSubgroup::from_powers(d, powers),
        division,
        exact,
        norm_condition,
        notes,
    })
}

/// Why a cycle type cannot be represented (in a division algebra of this
/// degree), or how it is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tag {
    /// The type's smallest cycle length occurs exactly once (and the type
    /// is not the full `d`-cycle).
    UniqueSmallest,
    /// Some cycle is longer than `d/2` but shorter than `d`.
    Big,
    /// Some cycle length is "lonely": no sub-multiset of the other lengths
    /// sums to it, and it is not a maximal length dividing `d`.
    Lonely,
    /// Full-cycle obstruction: a norm-one witness would satisfy
    /// `z^d = c` with `c = +-1`, forcing the reducible minimal polynomial
    /// `t^d -+ 1` (reducible because `d` is not a power of 2) on an element
    /// of degree `d` — impossible in a division algebra.
    ReducibleMinPoly,
    /// Full-cycle obstruction over the rationals: a witness would be a root
    /// of unity of order `d` (odd `d`) or `2d`, which no degree-`d`
    /// division algebra over the rationals contains.
    RootOfUnity,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::UniqueSmallest => "unique-smallest",
            Tag::Big => "big",
            Tag::Lonely => "lonely",
            Tag::ReducibleMinPoly => "reducible-min-poly",
            Tag::RootOfUnity => "root-of-unity",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Verdict for one cycle type in the report.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    /// Unrepresentable in the given group for every division algebra of
    /// this degree, for each listed reason.
    Excluded(Vec<Tag>),
    /// Realized on the fundamental apartment by a concrete element.
    Representable { label: String },
    /// Neither excluded by the implemented criteria nor realized by the
    /// computed witnesses.
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Excluded(tags) => {
                write!(f, "excluded by [")?;
                for (i, t) in tags.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, "]")
            }
            Verdict::Representable { label } => write!(f, "representable via {label}"),
            Verdict::Unknown => write!(f, "unknown"),
        }
    }
}

/// The full per-cycle-type report for one group.
#[derive(Debug, Clone, PartialEq)]
pub struct CosetReport {
    pub d: usize,
    pub group: GroupKind,
    pub algebra: Option<String>,
    pub division: Option<Division>,
    pub notes: Vec<String>,
    /// One row per partition of `d`, in descending lexicographic order.
    pub rows: Vec<(CycleType, Verdict)>,
}

impl CosetReport {
    pub fn verdict_for(&self, ct: &CycleType) -> Option<&Verdict> {
        self.rows.iter().find(|(t, _)| t == ct).map(|(_, v)| v)
    }
}

impl fmt::Display for CosetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "cycle-type report for degree d = {}, group: {}",
            self.d, self.group
        )?;
        match &self.algebra {
            Some(a) => writeln!(f, "algebra: {a}")?,
            None => writeln!(
                f,
                "algebra: none attached (exclusions hold for every division algebra of \
                 this degree; no representability witnesses computed)"
            )?,
        }
        if let Some(div) = &self.division {
            writeln!(f, "{div}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        writeln!(f, "types:")?;
        for (ct, v) in &self.rows {
            writeln!(f, "  {ct}: {v}")?;
        }
        Ok(())
    }
}

/// Builds the cycle-type report for degree `d` and the chosen group.
///
/// Exclusion tags come from the conjugation-invariant cycle-type criteria
/// (applied to both groups) plus, for the norm-one subgroup, the two
/// full-cycle obstructions in degree `> 2`: `root-of-unity` always over the
/// rationals, and `reducible-min-poly` when `d` is not a power of 2. With
/// an algebra attached, types realized by the computed rotation subgroups
/// are marked representable; everything else is reported unknown.
pub fn coset_report(
    d: usize,
    group: GroupKind,
    alg: Option<&Arc<CyclicAlgebra>>,
    height_bound: u32,
) -> Result<CosetReport, WeylError> {
    if !(2..=MAX_REPORT_DEGREE).contains(&d) {
        return Err(WeylError::DegreeOutOfRange(d));
    }
    if let Some(a) = alg {
        if a.degree() != d {
            return Err(WeylError::DegreeMismatch { requested: d, algebra: a.degree() });
        }
    }
    let mut notes = Vec::new();
    let mut division = None;
    let mut realized: BTreeMap<CycleType, String> = BTreeMap::new();
    if let Some(a) = alg {
        let comp = match group {
            GroupKind::UnitGroup => weyl_subgroup_dx(a, height_bound)?,
            GroupKind::NormOne => weyl_subgroup_sl1(a, height_bound)?,
        };
        for (ct, i) in comp.subgroup.cycle_types() {
            let label = if i == 0 {
                "the identity coset (z = 1)".to_string()
            } else {
                format!("phi(sigma^{i}), image of a unit x^{i} * b")
            };
            realized.insert(ct, label);
        }
        if !comp.exact {
            notes.push(
                "realized cosets are a verified lower bound; completeness was not \
                 certified (see division status / norm condition)"
                    .to_string(),
            );
        }
        if let Some(nc) = &comp.norm_condition {
            notes.push(nc.to_string());
        }
        match &comp.division {
            Division::No { .. } => notes.push(
                "exclusion rows assume a division algebra; this algebra is certified \
                 not division, so they do not constrain it"
                    .to_string(),
            ),
            Division::Unknown => notes.push(
                "exclusion rows assume a division algebra; this algebra's division \
                 status is undetermined"
                    .to_string(),
            ),
            Division::Yes => {}
        }
        division = Some(comp.division);
    }
    let mut rows = Vec::new();
    for_each_partition(d, |parts| {
        let ct = CycleType::from_parts(parts);
        let flags = ct.classify();
        let mut tags = Vec::new();
        if flags.unique_smallest {
            tags.push(Tag::UniqueSmallest);
        }
        if flags.big {
            tags.push(Tag::Big);
        }
        if !flags.lonely.is_empty() {
            tags.push(Tag::Lonely);
        }
        if group == GroupKind::NormOne && flags.d_cycle && d > 2 {
            if !d.is_power_of_two() {
                tags.push(Tag::ReducibleMinPoly);
            }
            tags.push(Tag::RootOfUnity);
        }
        let verdict = if !tags.is_empty() {
            // A realized type must never be excluded: the rotation images
            // are unions of equal-length cycles, which no criterion flags.
            debug_assert!(
                !realized.contains_key(&ct),
                "internal inconsistency: {ct} both excluded and realized"
            );
            Verdict::Excluded(tags)
        } else if let Some(label) = realized.get(&ct) {
            Verdict::Representable { label: label.clone() }
        } else {
            Verdict::Unknown
        };
        rows.push((ct, verdict));
    });
    Ok(CosetReport { d, group, algebra: alg.map(|a| a.describe()), division, notes, rows })
}

/// One element found by the brute-force stabilizer search.
#[derive(Debug, Clone, PartialEq)]
pub struct StabilizerHit {
    pub element: AlgElement,
    /// The permutation part of its monomial regular representation.
    pub perm: Permutation,
    /// `Some(i)` when the element is a single term `x^i * b`.
    pub term_index: Option<usize>,
    /// Whether `perm` equals `phi(sigma^term_index)`.
    pub perm_matches_power: bool,
}

/// Result of exhaustively searching for elements whose regular
/// representation is monomial (the stabilizer of the fundamental apartment
/// inside the unit group, up to the coordinate height bound).
#[derive(Debug, Clone, PartialEq)]
pub struct StabilizerSearch {
    pub d: usize,
    pub height_bound: u32,
    pub candidates_scanned: u128,
    pub hits: Vec<StabilizerHit>,
}

impl StabilizerSearch {
    /// True when every hit is a single term `x^i * b` whose permutation
    /// part is the matching rotation — the structural expectation for the
    /// apartment stabilizer.
    pub fn all_hits_are_single_terms(&self) -> bool {
        self.hits
            .iter()
            .all(|h| h.term_index.is_some() && h.perm_matches_power)
    }
}

impl fmt::Display for StabilizerSearch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "stabilizer search in degree {} at height bound {}: {} candidates, {} monomial hits",
            self.d,
            self.height_bound,
            self.candidates_scanned,
            self.hits.len()
        )?;
        writeln!(
            f,
            "every hit is a single term x^i * b with rotation part phi(sigma^i): {}",
            self.all_hits_are_single_terms()
        )?;
        for h in &self.hits {
            writeln!(
                f,
                "  {} -> perm {}{}",
                h.element,
                h.perm,
                match h.term_index {
                    Some(i) => format!(" (single term, i = {i})"),
                    None => " (NOT a single term)".to_string(),
                }
            )?;
        }
        Ok(())
    }
}

/// Enumerates every element with all `d^2` rational coordinates of height
/// at most `height_bound` and records those whose regular representation is
/// monomial. Limited to degree 3 and `MAX_SEARCH_CANDIDATES` candidates.
pub fn stabilizer_search(
    alg: &Arc<CyclicAlgebra>,
    height_bound: u32,
) -> Result<StabilizerSearch, WeylError> {
    let d = alg.degree();
    if d > 3 {
        return Err(WeylError::SearchDegreeTooLarge(d));
    }
    let field = alg.field();
    let values = rationals_up_to_height(height_bound.max(1));
    let slots = d * d;
    let count = (values.len() as u128)
        .checked_pow(slots as u32)
        .unwrap_or(u128::MAX);
    if count > MAX_SEARCH_CANDIDATES {
        return Err(WeylError::SearchSpaceTooLarge(count));
    }
    let mut idx = vec![0usize; slots];
    let mut hits = Vec::new();
    let mut scanned: u128 = 0;
    loop {
        scanned += 1;
        if idx.iter().any(|&k| k != 0) {
            let coords: Vec<_> = (0..d)
                .map(|ci| {
                    field.element(
                        (0..d).map(|cj| values[idx[ci * d + cj]].clone()).collect(),
                    )
                })
                .collect();
            let z = alg.element(coords);
            if let Some(md) = z.regular_rep().monomial_structure() {
                let term_index = z.as_single_term().map(|(i, _)| i);
                let perm_matches_power =
                    term_index.map(|i| phi(d, i) == md.perm).unwrap_or(false);
                hits.push(StabilizerHit {
                    element: z,
                    perm: md.perm,
                    term_index,
                    perm_matches_power,
                });
            }
        }
        // Advance the odometer, first slot fastest.
        let mut s = 0;
        loop {
            if s == slots {
                return Ok(StabilizerSearch {
                    d,
                    height_bound: height_bound.max(1),
                    candidates_scanned: scanned,
                    hits,
                });
            }
            idx[s] += 1;
            if idx[s] < values.len() {
                break;
            }
            idx[s] = 0;
            s += 1;
        }
    }
}

/// Human-readable summary of how the two groups act on the fundamental
/// apartment: translations always, composed with the computed rotation
/// parts.
pub fn affine_summary(
    alg: &Arc<CyclicAlgebra>,
    height_bound: u32,
) -> Result<String, WeylError> {
    let dx = weyl_subgroup_dx(alg, height_bound)?;
    let sl1 = weyl_subgroup_sl1(alg, height_bound)?;
    let mut out = String::new();
    let _ = writeln!(out, "affine action summary for {}", alg.describe());
    let _ = writeln!(out, "- {}", dx.division);
    let caveat = |c: &WeylComputation| {
        if c.exact {
            ""
        } else {
            " (lower bound: completeness not certified)"
        }
    };
    let _ = writeln!(
        out,
        "- unit group: moves the fundamental apartment by all translations combined \
         with the full rotation group of order {}; realized rotation cosets: {}{}",
        dx.subgroup.order(),
        dx.subgroup,
        caveat(&dx)
    );
    if sl1.subgroup.order() == 1 {
        let _ = writeln!(
            out,
            "- norm-one subgroup: moves the fundamental apartment by translations only \
             (trivial rotation part){}",
            caveat(&sl1)
        );
    } else {
        let _ = writeln!(
            out,
            "- norm-one subgroup: moves the fundamental apartment by translations \
             combined with the half-turn; realized rotation cosets: {}{}",
            sl1.subgroup,
            caveat(&sl1)
        );
    }
    if let Some(nc) = &sl1.norm_condition {
        let _ = writeln!(out, "- {nc}");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::NumberField;
    use crate::rational::{rat_int, Rational};
    use crate::unipoly::UniPoly;
    use num_bigint::BigInt;

    fn hamilton() -> Arc<CyclicAlgebra> {
        let k = NumberField::quadratic(BigInt::from(-1)).unwrap();
        CyclicAlgebra::new(k, rat_int(-1)).unwrap()
    }

    fn gaussian_with(a: i64) -> Arc<CyclicAlgebra> {
        let k = NumberField::quadratic(BigInt::from(-1)).unwrap();
        CyclicAlgebra::new(k, rat_int(a)).unwrap()
    }

    fn cubic_algebra(a: i64) -> Arc<CyclicAlgebra> {
        let f = UniPoly::from_integers(&[-1, -2, 1, 1]);
        let s = UniPoly::from_integers(&[-2, 0, 1]);
        let k = NumberField::custom(f, s).unwrap();
        CyclicAlgebra::new(k, rat_int(a)).unwrap()
    }

    #[test]
    fn rotation_structure() {
        assert!(phi(5, 0).is_identity());
        // Cycle types of rotations: d/gcd cycles of length d/gcd(d,i)...
        // i.e. gcd(d,i) cycles, each of length d/gcd(d,i).
        let expect: [(usize, &[usize]); 6] = [
            (0, &[1, 1, 1, 1, 1, 1]),
            (1, &[6]),
            (2, &[3, 3]),
            (3, &[2, 2, 2]),
            (4, &[3, 3]),
            (5, &[6]),
        ];
        for (i, parts) in expect {
            assert_eq!(phi(6, i).cycle_type(), CycleType::from_parts(parts), "i = {i}");
        }
        // phi is a homomorphism of the cyclic group.
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(phi(6, i).compose(&phi(6, j)), phi(6, (i + j) % 6));
            }
        }
        assert!(WeylSubgroup::from_powers(6, vec![0, 3]).is_closed());
        assert!(WeylSubgroup::from_powers(6, (0..6).collect()).is_closed());
        assert!(!WeylSubgroup::from_powers(6, vec![0, 2]).contains_power(3));
    }

    #[test]
    fn unit_group_subgroup_hamilton() {
        let comp = weyl_subgroup_dx(&hamilton(), 4).unwrap();
        assert_eq!(comp.subgroup.order(), 2);
        assert!(comp.exact);
        assert!(comp.division.is_yes());
        let types = comp.subgroup.cycle_types();
        assert!(types.contains_key(&CycleType::from_parts(&[1, 1])));
        assert!(types.contains_key(&CycleType::from_parts(&[2])));
    }

    #[test]
    fn norm_one_subgroup_quaternions() {
        // Hamilton: -a^(d/2) = 1 = N(1), so the half-turn is realized.
        let comp = weyl_subgroup_sl1(&hamilton(), 4).unwrap();
        assert_eq!(comp.subgroup.powers(), &[0, 1]);
        assert!(comp.exact);
        let nc = comp.norm_condition.as_ref().unwrap();
        assert_eq!(nc.target, rat_int(1));
        assert!(matches!(nc.result, NormTest::Yes(_)));
        let w = nc.witness.as_ref().unwrap();
        assert_eq!(w.reduced_norm().unwrap(), rat_int(1));

        // (Q(i)/Q, -3): the target 3 is not a norm from Q(i); the subgroup
        // is trivial and (division algebra) exact.
        let comp3 = weyl_subgroup_sl1(&gaussian_with(-3), 4).unwrap();
        assert_eq!(comp3.subgroup.powers(), &[0]);
        assert!(comp3.exact);
        assert_eq!(comp3.norm_condition.as_ref().unwrap().result, NormTest::No);
        assert!(comp3.division.is_yes());
    }

    #[test]
    fn norm_one_subgroup_other_degrees() {
        // Degree 4 (0 mod 4): no half-turn candidate; division unknown so
        // the trivial answer is a lower bound.
        let c5 = NumberField::cyclotomic_prime(5).unwrap();
        let alg4 = CyclicAlgebra::new(c5, rat_int(3)).unwrap();
        let comp = weyl_subgroup_sl1(&alg4, 1).unwrap();
        assert_eq!(comp.subgroup.powers(), &[0]);
        assert!(comp.norm_condition.is_none());
        assert_eq!(comp.division, Division::Unknown);
        assert!(!comp.exact);

        // Degree 6 (2 mod 4) with a = -1: a^2 = 1 certifies non-division,
        // and the half-turn target -a^3 = 1 is trivially a norm: the
        // half-turn coset is realized (membership is unconditional).
        let c7 = NumberField::cyclotomic_prime(7).unwrap();
        let alg6 = CyclicAlgebra::new(c7, rat_int(-1)).unwrap();
        let comp6 = weyl_subgroup_sl1(&alg6, 1).unwrap();
        assert_eq!(comp6.subgroup.powers(), &[0, 3]);
        assert!(matches!(comp6.division, Division::No { power: 2, .. }));
        assert!(!comp6.exact);
        let w = comp6.norm_condition.as_ref().unwrap().witness.as_ref().unwrap();
        assert_eq!(w.reduced_norm().unwrap(), rat_int(1));
    }

    #[test]
    fn sl1_coset_tests() {
        // Hamilton, i = 1: target -(-1) = 1.
        let t = representable_in_sl1(&hamilton(), 1, 4).unwrap();
        assert_eq!(t.target, rat_int(1));
        assert!(matches!(t.result, NormTest::Yes(_)));
        assert_eq!(
            t.witness.unwrap().reduced_norm().unwrap(),
            Rational::from_integer(1.into())
        );
        // i = 0 is always realized by 1.
        let t0 = representable_in_sl1(&hamilton(), 0, 1).unwrap();
        assert!(matches!(t0.result, NormTest::Yes(_)));
        // Cubic algebra with a = 2, i = 1: target is 2 (the sign is
        // trivial for odd degree); undecided at height 2.
        let t1 = representable_in_sl1(&cubic_algebra(2), 1, 2).unwrap();
        assert_eq!(t1.target, rat_int(2));
        assert_eq!(t1.result, NormTest::Unknown);
        assert!(t1.witness.is_none());
    }

    #[test]
    fn coset_report_degree_3_norm_one() {
        // The structural example: three rows with the expected verdicts.
        let alg = cubic_algebra(2);
        let report = coset_report(3, GroupKind::NormOne, Some(&alg), 2).unwrap();
        assert_eq!(report.rows.len(), 3);

        // {3}: both full-cycle obstructions (3 is not a power of 2).
        let (ct, v) = &report.rows[0];
        assert_eq!(ct, &CycleType::from_parts(&[3]));
        assert_eq!(
            v,
            &Verdict::Excluded(vec![Tag::ReducibleMinPoly, Tag::RootOfUnity])
        );

        // {2,1}: every applicable conjugation-invariant tag.
        let (ct, v) = &report.rows[1];
        assert_eq!(ct, &CycleType::from_parts(&[2, 1]));
        assert_eq!(
            v,
            &Verdict::Excluded(vec![Tag::UniqueSmallest, Tag::Big, Tag::Lonely])
        );

        // {1,1,1}: the identity coset is realized by z = 1.
        let (ct, v) = &report.rows[2];
        assert_eq!(ct, &CycleType::from_parts(&[1, 1, 1]));
        assert!(matches!(v, Verdict::Representable { .. }));
    }

    #[test]
    fn coset_report_degree_3_unit_group() {
        let alg = cubic_algebra(2);
        let report = coset_report(3, GroupKind::UnitGroup, Some(&alg), 2).unwrap();
        // {3} is realized by x (no full-cycle tags for the unit group).
        assert!(matches!(
            report.verdict_for(&CycleType::from_parts(&[3])).unwrap(),
            Verdict::Representable { .. }
        ));
        assert!(matches!(
            report.verdict_for(&CycleType::from_parts(&[2, 1])).unwrap(),
            Verdict::Excluded(_)
        ));
        assert!(matches!(
            report.verdict_for(&CycleType::from_parts(&[1, 1, 1])).unwrap(),
            Verdict::Representable { .. }
        ));
    }

    #[test]
    fn coset_report_without_algebra() {
        // Degree 4, norm-one: the 4-cycle is excluded by root-of-unity
        // only (4 is a power of 2, so no reducible-min-poly tag).
        let report = coset_report(4, GroupKind::NormOne, None, 1).unwrap();
        assert_eq!(
            report.verdict_for(&CycleType::from_parts(&[4])).unwrap(),
            &Verdict::Excluded(vec![Tag::RootOfUnity])
        );
        // {3,1} carries all three conjugation-invariant tags.
        assert_eq!(
            report.verdict_for(&CycleType::from_parts(&[3, 1])).unwrap(),
            &Verdict::Excluded(vec![Tag::UniqueSmallest, Tag::Big, Tag::Lonely])
        );
        // {2,2} is homogeneous: no tags, and with no algebra attached no
        // witness either.
        assert_eq!(
            report.verdict_for(&CycleType::from_parts(&[2, 2])).unwrap(),
            &Verdict::Unknown
        );
        // Without an algebra the identity row is unknown too (nothing to
        // witness it).
        assert_eq!(
            report.verdict_for(&CycleType::from_parts(&[1, 1, 1, 1])).unwrap(),
            &Verdict::Unknown
        );
        assert!(report.division.is_none());
    }

    #[test]
    fn coset_report_degree_2() {
        // Hamilton: both cosets realized, no full-cycle tags in degree 2.
        let report = coset_report(2, GroupKind::NormOne, Some(&hamilton()), 4).unwrap();
        assert!(matches!(
            report.verdict_for(&CycleType::from_parts(&[2])).unwrap(),
            Verdict::Representable { .. }
        ));
        assert!(matches!(
            report.verdict_for(&CycleType::from_parts(&[1, 1])).unwrap(),
            Verdict::Representable { .. }
        ));

        // (Q(i)/Q, -3): the transposition row is unrealized; it stays
        // "unknown" in the table with the exact negative recorded in the
        // notes.
        let r3 = coset_report(2, GroupKind::NormOne, Some(&gaussian_with(-3)), 4).unwrap();
        assert_eq!(
            r3.verdict_for(&CycleType::from_parts(&[2])).unwrap(),
            &Verdict::Unknown
        );
        assert!(r3.notes.iter().any(|n| n.contains("not a norm")));
    }

    #[test]
    fn coset_report_validation() {
        assert!(matches!(
            coset_report(1, GroupKind::UnitGroup, None, 1),
            Err(WeylError::DegreeOutOfRange(1))
        ));
        assert!(matches!(
            coset_report(31, GroupKind::UnitGroup, None, 1),
            Err(WeylError::DegreeOutOfRange(31))
        ));
        let alg = hamilton();
        assert!(matches!(
            coset_report(3, GroupKind::UnitGroup, Some(&alg), 1),
            Err(WeylError::DegreeMismatch { requested: 3, algebra: 2 })
        ));
    }

    #[test]
    fn stabilizer_search_hamilton() {
        // Height 1: coordinates in {0, 1, -1}. The monomial elements are
        // exactly the single terms x^i * b with b one of the 8 nonzero
        // field elements: 16 hits.
        let search = stabilizer_search(&hamilton(), 1).unwrap();
        assert_eq!(search.candidates_scanned, 81);
        assert_eq!(search.hits.len(), 16);
        assert!(search.all_hits_are_single_terms());
        for h in &search.hits {
            let i = h.term_index.unwrap();
            assert_eq!(h.perm, phi(2, i));
        }
        // Both rotation cosets appear.
        assert!(search.hits.iter().any(|h| h.term_index == Some(0)));
        assert!(search.hits.iter().any(|h| h.term_index == Some(1)));
    }

    #[test]
    fn stabilizer_search_guards() {
        let c5 = NumberField::cyclotomic_prime(5).unwrap();
        let alg4 = CyclicAlgebra::new(c5, rat_int(3)).unwrap();
        assert!(matches!(
            stabilizer_search(&alg4, 1),
            Err(WeylError::SearchDegreeTooLarge(4))
        ));
        assert!(matches!(
            stabilizer_search(&cubic_algebra(2), 50),
            Err(WeylError::SearchSpaceTooLarge(_))
        ));
    }

    #[test]
    fn affine_summaries() {
        // Trivial norm-one part: translations only.
        let s = affine_summary(&gaussian_with(-3), 4).unwrap();
        assert!(s.contains("translations only"));
        // Hamilton: half-turn realized.
        let h = affine_summary(&hamilton(), 4).unwrap();
        assert!(h.contains("half-turn"));
        assert!(h.contains("order 2"));
    }

    #[test]
    fn group_kind_parsing() {
        assert_eq!(GroupKind::parse("dx"), Some(GroupKind::UnitGroup));
        assert_eq!(GroupKind::parse("SL1"), Some(GroupKind::NormOne));
        assert_eq!(GroupKind::parse("norm-one"), Some(GroupKind::NormOne));
        assert_eq!(GroupKind::parse("nope"), None);
    }
}

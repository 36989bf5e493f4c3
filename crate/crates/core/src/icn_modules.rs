//! The `IC_n`-module `V` with basis `v_S` indexed by subsets of `{1..n}`.
//!
//! `f · v_S = v_{f(S)}` when `S ⊆ D(f)` and `0` otherwise. Submodules are
//! determined by their reduced support, and their dimensions are computed
//! by lattice path counting.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{
    binomial, binomial_signed, catalan, det_exact, format_rational, parse_rational, sign_of,
    Rational,
};
use crate::lattice_paths::{
    count_below_decreasing_iterative, increasing_count_matrix, HeightSequence,
};
use crate::rook_monoid::PartialInjection;

/// Largest `|S|` accepted by [`dim_principal_incl_excl`].
pub const INCL_EXCL_MAX_CARDINALITY: usize = 20;
/// Largest ambient size accepted by [`dim_submodule_oracle`].
pub const ORACLE_MAX_N: usize = 16;
/// Largest number of same-size generators [`dim_submodule`] will expand.
pub const MAX_GENERATORS_PER_GRADE: usize = 20;

/// A subset of `{1..n}`, elements strictly increasing.
///
/// Ordered by cardinality first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    elems: Vec<usize>,
}

impl Subset {
    /// Accepts elements in any order; duplicates and out-of-range values are
    /// rejected.
    pub fn new(n: usize, mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        if let Some(w) = elems.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!("repeated element {}", w[0])));
        }
        if let Some(&e) = elems.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidSubset(format!("element {e} outside 1..={n}")));
        }
        Ok(Subset { n, elems })
    }

    pub fn empty(n: usize) -> Self {
        Subset {
            n,
            elems: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elems
            .len()
            .cmp(&other.elems.len())
            .then_with(|| self.elems.cmp(&other.elems))
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elems.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn same_ambient(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::AmbientMismatch { left: a, right: b });
    }
    Ok(())
}

/// `T <= S` iff `|T| = |S|` and `t_i <= s_i` for every `i`.
pub fn subset_leq(t: &Subset, s: &Subset) -> Result<bool> {
    same_ambient(t.n, s.n)?;
    Ok(leq(t, s))
}

fn leq(t: &Subset, s: &Subset) -> bool {
    t.len() == s.len() && t.elems.iter().zip(&s.elems).all(|(a, b)| a <= b)
}

/// Greatest lower bound of two equal-size subsets: the componentwise minimum.
pub fn subset_meet(s: &Subset, t: &Subset) -> Result<Subset> {
    same_ambient(s.n, t.n)?;
    if s.len() != t.len() {
        return Err(Error::CardinalityMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    Ok(meet(s, t))
}

fn meet(s: &Subset, t: &Subset) -> Subset {
    Subset {
        n: s.n,
        elems: s
            .elems
            .iter()
            .zip(&t.elems)
            .map(|(a, b)| *a.min(b))
            .collect(),
    }
}

/// All `T <= S`, in lexicographic order. Its length is `dim <v_S>`.
pub fn downset(s: &Subset) -> Vec<Subset> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(s.len());
    fn walk(s: &Subset, prefix: &mut Vec<usize>, out: &mut Vec<Subset>) {
        let i = prefix.len();
        if i == s.len() {
            out.push(Subset {
                n: s.n,
                elems: prefix.clone(),
            });
            return;
        }
        let lo = prefix.last().map_or(1, |p| p + 1);
        for e in lo..=s.elems[i] {
            prefix.push(e);
            walk(s, prefix, out);
            prefix.pop();
        }
    }
    walk(s, &mut prefix, &mut out);
    out
}

/// A finite rational combination of basis vectors `v_S`. Only nonzero
/// coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleVector {
    n: usize,
    terms: BTreeMap<Subset, Rational>,
}

impl ModuleVector {
    pub fn zero(n: usize) -> Self {
        ModuleVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(s: Subset) -> Self {
        let n = s.n;
        let mut terms = BTreeMap::new();
        terms.insert(s, Rational::one());
        ModuleVector { n, terms }
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Rational, Subset)>,
    ) -> Result<Self> {
        let mut v = ModuleVector::zero(n);
        for (coef, s) in terms {
            v.add_term(coef, s)?;
        }
        Ok(v)
    }

    /// Adds `coef · v_S`, dropping the term if it cancels.
    pub fn add_term(&mut self, coef: Rational, s: Subset) -> Result<()> {
        same_ambient(self.n, s.n)?;
        if coef.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(s).or_insert_with(Rational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        same_ambient(self.n, other.n)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(c.clone(), s.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero(self.n);
        }
        ModuleVector {
            n: self.n,
            terms: self.terms.iter().map(|(s, x)| (s.clone(), x * c)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &Subset) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    /// Parses `"coef:{e1,e2};coef:{}"`. Repeated subsets are summed.
    /// `""` and `"0"` denote the zero vector.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let mut v = ModuleVector::zero(n);
        if text.is_empty() || text == "0" {
            return Ok(v);
        }
        for term in text.split(';') {
            let term = term.trim();
            let (coef, set) = term
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("term '{term}' lacks ':'")))?;
            let coef = parse_rational(coef)?;
            let set = set.trim();
            let inner = set
                .strip_prefix('{')
                .and_then(|s| s.strip_suffix('}'))
                .ok_or_else(|| Error::Parse(format!("subset '{set}' must be written {{...}}")))?;
            let elems = parse_elements(inner)?;
            v.add_term(coef, Subset::new(n, elems)?)?;
        }
        Ok(v)
    }
}

/// Comma-separated positive integers; empty text gives no elements.
pub fn parse_elements(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid subset element '{tok}'")))
        })
        .collect()
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| format!("{}:{}", format_rational(c), s))
            .collect();
        f.write_str(&parts.join(";"))
    }
}

/// `f · v`, extended linearly. `f` must belong to `IC_n`.
pub fn act(f: &PartialInjection, v: &ModuleVector) -> Result<ModuleVector> {
    same_ambient(f.n(), v.n)?;
    if !f.is_icn() {
        return Err(Error::NotInIcn(f.to_string()));
    }
    let mut out = ModuleVector::zero(v.n);
    for (s, c) in &v.terms {
        let image: Option<Vec<usize>> = s.elems.iter().map(|&x| f.apply(x)).collect();
        if let Some(elems) = image {
            // order preserving, so the image is already increasing
            out.add_term(c.clone(), Subset { n: v.n, elems })?;
        }
    }
    Ok(out)
}

/// Canonical description of a submodule: its reduced support, an antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleDescriptor {
    n: usize,
    reduced_support: BTreeSet<Subset>,
}

impl SubmoduleDescriptor {
    pub fn new(n: usize, reduced_support: BTreeSet<Subset>) -> Result<Self> {
        for s in &reduced_support {
            same_ambient(n, s.n)?;
        }
        for a in &reduced_support {
            if let Some(b) = reduced_support.iter().find(|b| *b != a && leq(a, b)) {
                return Err(Error::InvalidArgument(format!(
                    "{a} <= {b}, reduced support must be an antichain"
                )));
            }
        }
        Ok(SubmoduleDescriptor { n, reduced_support })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reduced_support(&self) -> &BTreeSet<Subset> {
        &self.reduced_support
    }

    /// The reduced generator `sum_{S in Red} v_S`.
    pub fn generator(&self) -> ModuleVector {
        ModuleVector {
            n: self.n,
            terms: self
                .reduced_support
                .iter()
                .map(|s| (s.clone(), Rational::one()))
                .collect(),
        }
    }
}

pub fn support(v: &ModuleVector) -> BTreeSet<Subset> {
    v.terms.keys().cloned().collect()
}

/// The maximal elements of the support.
pub fn reduced_support(v: &ModuleVector) -> SubmoduleDescriptor {
    let supp: Vec<&Subset> = v.terms.keys().collect();
    let reduced_support = supp
        .iter()
        .filter(|&&s| !supp.iter().any(|&t| t != s && leq(s, t)))
        .map(|&s| s.clone())
        .collect();
    SubmoduleDescriptor {
        n: v.n,
        reduced_support,
    }
}

pub fn reduced_form(v: &ModuleVector) -> ModuleVector {
    reduced_support(v).generator()
}

/// `<v> = <w>` iff the reduced supports coincide.
pub fn submodule_equal(v: &ModuleVector, w: &ModuleVector) -> Result<bool> {
    same_ambient(v.n, w.n)?;
    Ok(reduced_support(v) == reduced_support(w))
}

/// The decreasing height sequence `l_i = s_{k-i+1} - (k-i+1)` attached to a
/// nonempty subset.
pub fn subset_heights(s: &Subset) -> HeightSequence {
    let k = s.len();
    let heights = (1..=k)
        .map(|i| (s.elems[k - i] - (k - i + 1)) as u64)
        .collect();
    HeightSequence::decreasing(heights).expect("subset heights are decreasing")
}

/// `dim <v_S>` through the iterative lattice path count. `dim <v_∅> = 1`.
pub fn dim_principal_iterative(s: &Subset) -> BigInt {
    match s.len() {
        0 => BigInt::one(),
        1 => BigInt::from(s.elems[0]),
        _ => count_below_decreasing_iterative(&subset_heights(s))
            .expect("decreasing heights are accepted"),
    }
}

/// `dim <v_S>` as the signed sum over `T ⊆ S` of `det C(t_i + 1, j - i + 1)`.
pub fn dim_principal_incl_excl(s: &Subset) -> Result<BigInt> {
    let k = s.len();
    if k > INCL_EXCL_MAX_CARDINALITY {
        return Err(Error::OutOfBounds {
            what: "|S|",
            value: k,
            bound: INCL_EXCL_MAX_CARDINALITY,
        });
    }
    let mut total = BigInt::zero();
    let mut heights = Vec::with_capacity(k);
    for mask in 0u32..(1u32 << k) {
        heights.clear();
        heights.extend(
            (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| s.elems[i] as u64),
        );
        let det = det_exact(&increasing_count_matrix(&heights))?;
        total += sign_of(k - heights.len()) * det;
    }
    Ok(total)
}

/// Subsets with a known closed-form dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialSubset {
    /// `{2, 4, ..., 2k}`
    Catalan { k: usize },
    /// `{m+1, ..., m+k}`
    Interval { m: usize, k: usize },
    /// `{2, 4, ..., 2m, 2m+1, ..., m+k}`, `k >= m`
    Mixed { k: usize, m: usize },
}

impl SpecialSubset {
    fn validate(self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidArgument(msg.to_string()));
        match self {
            SpecialSubset::Catalan { k } if k < 1 => bad("catalan subset needs k >= 1"),
            SpecialSubset::Interval { k, .. } if k < 1 => bad("interval subset needs k >= 1"),
            SpecialSubset::Mixed { k, m } if m < 2 || k < m => {
                bad("mixed closed form needs k >= m >= 2")
            }
            _ => Ok(()),
        }
    }

    /// Largest element, i.e. the smallest admissible ambient size.
    pub fn max_element(self) -> usize {
        match self {
            SpecialSubset::Catalan { k } => 2 * k,
            SpecialSubset::Interval { m, k } => m + k,
            SpecialSubset::Mixed { k, m } => m + k,
        }
    }

    /// The subset itself inside `{1..n}`.
    pub fn subset(self, n: usize) -> Result<Subset> {
        self.validate()?;
        let elems: Vec<usize> = match self {
            SpecialSubset::Catalan { k } => (1..=k).map(|i| 2 * i).collect(),
            SpecialSubset::Interval { m, k } => (m + 1..=m + k).collect(),
            SpecialSubset::Mixed { k, m } => {
                (1..=m).map(|i| 2 * i).chain(2 * m + 1..=m + k).collect()
            }
        };
        Subset::new(n, elems)
    }
}

/// Closed-form dimension of a special principal submodule.
pub fn dim_special(kind: SpecialSubset) -> Result<BigInt> {
    kind.validate()?;
    match kind {
        SpecialSubset::Catalan { k } => catalan(k as u64 + 1),
        SpecialSubset::Interval { m, k } => Ok(binomial((m + k) as u64, k as i64)),
        SpecialSubset::Mixed { k, m } => mixed_dimension(k, m),
    }
}

fn mixed_dimension(k: usize, m: usize) -> Result<BigInt> {
    let c = |top: i64, bottom: i64| binomial_signed(top, bottom);
    let (ki, mi) = (k as i64, m as i64);
    let start = k - m + 3;
    // gamma_1 = 1, gamma_2..gamma_{start-1} = 0, gamma_start = -1
    let mut gamma = vec![BigInt::zero(); k + 2];
    gamma[start] = -BigInt::one();
    for i in start + 1..=k {
        let ii = i as i64;
        let mut acc = c(mi - ki + 2 * ii - 4, ii - 1)?;
        for j in start..=i - 2 {
            let d = (i - j) as i64;
            acc += c(2 * (d - 1), d)? * &gamma[j];
        }
        gamma[i] = -acc;
    }
    let mut total = c(mi + ki, ki)? - c(mi + ki - 2, ki)? - c(mi + ki - 4, ki - 1)? * 2;
    for i in start..k {
        let d = (k - i) as i64;
        total += (c(2 * (d + 1), d + 1)? - c(2 * d, d + 1)?) * &gamma[i];
    }
    for i in start..k.saturating_sub(1) {
        let d = (k - i) as i64;
        total -= c(2 * (d - 1), d)? * 2 * &gamma[i];
    }
    Ok(total)
}

/// `dim <v>` by inclusion-exclusion over the reduced support, each
/// intersection being the principal module of a meet. Sets `J` mixing
/// cardinalities contribute nothing, so the sum splits by cardinality.
pub fn dim_submodule(v: &ModuleVector) -> Result<BigInt> {
    dim_submodule_by(v, |s| Ok(dim_principal_iterative(s)))
}

/// [`dim_submodule`] with a caller-chosen principal dimension.
pub fn dim_submodule_by(
    v: &ModuleVector,
    principal: impl Fn(&Subset) -> Result<BigInt>,
) -> Result<BigInt> {
    let red = reduced_support(v);
    let mut grades: BTreeMap<usize, Vec<&Subset>> = BTreeMap::new();
    for s in &red.reduced_support {
        grades.entry(s.len()).or_default().push(s);
    }
    let mut total = BigInt::zero();
    for gens in grades.values() {
        let m = gens.len();
        if m > MAX_GENERATORS_PER_GRADE {
            return Err(Error::OutOfBounds {
                what: "generators of one cardinality",
                value: m,
                bound: MAX_GENERATORS_PER_GRADE,
            });
        }
        for mask in 1u32..(1u32 << m) {
            let mut picked = (0..m).filter(|i| mask & (1 << i) != 0).map(|i| gens[i]);
            let first = picked.next().expect("mask is nonzero").clone();
            let glb = picked.fold(first, |acc, s| meet(&acc, s));
            total += sign_of(mask.count_ones() as usize - 1) * principal(&glb)?;
        }
    }
    Ok(total)
}

/// `dim <v>` as the size of the union of the downsets of the reduced
/// support, by explicit enumeration.
pub fn dim_submodule_oracle(v: &ModuleVector) -> Result<BigInt> {
    if v.n > ORACLE_MAX_N {
        return Err(Error::OutOfBounds {
            what: "n",
            value: v.n,
            bound: ORACLE_MAX_N,
        });
    }
    let mut union: BTreeSet<Subset> = BTreeSet::new();
    for s in reduced_support(v).reduced_support {
        union.extend(downset(&s));
    }
    Ok(BigInt::from(union.len()))
}

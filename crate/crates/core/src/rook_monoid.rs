//! Injective partial maps of `{1..n}` and the planar upper triangular rook
//! monoid `IC_n` of order-preserving, order-decreasing ones.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_math::IntMatrix;

/// Largest `n` accepted by [`enumerate_icn`]; `|IC_10| = 58786`.
pub const DEFAULT_ENUMERATION_BOUND: usize = 10;

/// An injective partial map of `{1..n}`, stored as `(source, image)` pairs
/// sorted by source.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialInjection {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl PartialInjection {
    /// Builds a map from pairs in any order. Sources and images must lie in
    /// `1..=n` and be pairwise distinct.
    pub fn new(n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMap("ambient size must be positive".into()));
        }
        for &(s, i) in &pairs {
            if !(1..=n).contains(&s) || !(1..=n).contains(&i) {
                return Err(Error::InvalidMap(format!("pair {s}->{i} outside 1..={n}")));
            }
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidMap(format!("repeated source {}", w[0].0)));
        }
        let mut images: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        images.sort_unstable();
        if let Some(w) = images.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidMap(format!("repeated image {}", w[0])));
        }
        Ok(PartialInjection { n, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `D(f)`, increasing.
    pub fn domain(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    /// `R(f)`, increasing.
    pub fn range(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.pairs.iter().map(|p| p.1).collect();
        r.sort_unstable();
        r
    }

    /// Images listed in the order of the sorted sources.
    pub fn images(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&x, |p| p.0)
            .ok()
            .map(|idx| self.pairs[idx].1)
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_icn(&self) -> bool {
        is_order_preserving(self) && is_order_decreasing(self)
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_two_line(self))
    }
}

pub fn identity_map(n: usize) -> Result<PartialInjection> {
    PartialInjection::new(n, (1..=n).map(|x| (x, x)).collect())
}

pub fn zero_map(n: usize) -> Result<PartialInjection> {
    PartialInjection::new(n, Vec::new())
}

/// `f ∘ g`: apply `g` first, then `f`.
pub fn compose(f: &PartialInjection, g: &PartialInjection) -> Result<PartialInjection> {
    if f.n != g.n {
        return Err(Error::AmbientMismatch {
            left: f.n,
            right: g.n,
        });
    }
    let pairs = g
        .pairs
        .iter()
        .filter_map(|&(x, y)| f.apply(y).map(|z| (x, z)))
        .collect();
    Ok(PartialInjection { n: f.n, pairs })
}

/// `a < b` in the domain implies `f(a) < f(b)`.
pub fn is_order_preserving(f: &PartialInjection) -> bool {
    f.pairs.windows(2).all(|w| w[0].1 < w[1].1)
}

/// `f(a) <= a` for every `a` in the domain.
pub fn is_order_decreasing(f: &PartialInjection) -> bool {
    f.pairs.iter().all(|&(s, i)| i <= s)
}

/// The `n x n` rook matrix with a 1 in row `i`, column `j` iff `f(j) = i`.
pub fn to_rook_matrix(f: &PartialInjection) -> IntMatrix {
    let mut m = IntMatrix::zeros(f.n, f.n);
    for &(s, i) in &f.pairs {
        m.set(i - 1, s - 1, BigInt::one());
    }
    m
}

/// Parses `"s1 s2 ... / i1 i2 ..."`. An image written as `x` leaves its
/// source undefined, so both `"1 3 4 / 1 2 3"` and `"1 2 3 4 / 1 x 2 3"`
/// describe the same map. `"/"` is the zero map.
pub fn parse_two_line(text: &str, n: usize) -> Result<PartialInjection> {
    let (top, bottom) = text
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("missing '/' in '{text}'")))?;
    if bottom.contains('/') {
        return Err(Error::Parse(format!("more than one '/' in '{text}'")));
    }
    let sources: Vec<&str> = top.split_whitespace().collect();
    let images: Vec<&str> = bottom.split_whitespace().collect();
    if sources.len() != images.len() {
        return Err(Error::Parse(format!(
            "{} sources but {} images",
            sources.len(),
            images.len()
        )));
    }
    let number = |tok: &str| {
        tok.parse::<usize>()
            .map_err(|_| Error::Parse(format!("invalid entry '{tok}'")))
    };
    let mut pairs = Vec::with_capacity(sources.len());
    let mut seen_sources = Vec::with_capacity(sources.len());
    for (s, i) in sources.iter().zip(&images) {
        let s = number(s)?;
        if seen_sources.contains(&s) {
            return Err(Error::InvalidMap(format!("repeated source {s}")));
        }
        seen_sources.push(s);
        if *i == "x" {
            if !(1..=n).contains(&s) {
                return Err(Error::InvalidMap(format!("source {s} outside 1..={n}")));
            }
            continue;
        }
        pairs.push((s, number(i)?));
    }
    PartialInjection::new(n, pairs)
}

/// Compact two-line form listing only the domain, e.g. `"1 3 4 / 1 2 3"`.
pub fn format_two_line(f: &PartialInjection) -> String {
    let top: Vec<String> = f.pairs.iter().map(|p| p.0.to_string()).collect();
    let bottom: Vec<String> = f.pairs.iter().map(|p| p.1.to_string()).collect();
    match (top.is_empty(), bottom.is_empty()) {
        (true, true) => "/".to_string(),
        _ => format!("{} / {}", top.join(" "), bottom.join(" ")),
    }
}

/// Full two-line form over `1..=n` with `x` at undefined points, e.g.
/// `"1 2 3 4 / 1 x 2 3"`.
pub fn format_two_line_full(f: &PartialInjection) -> String {
    let top: Vec<String> = (1..=f.n).map(|s| s.to_string()).collect();
    let bottom: Vec<String> = (1..=f.n)
        .map(|s| {
            f.apply(s)
                .map_or_else(|| "x".to_string(), |i| i.to_string())
        })
        .collect();
    format!("{} / {}", top.join(" "), bottom.join(" "))
}

/// All elements of `IC_n`, sorted by domain and then by images
/// (lexicographically). Requires `1 <= n <= DEFAULT_ENUMERATION_BOUND`.
pub fn enumerate_icn(n: usize) -> Result<Vec<PartialInjection>> {
    enumerate_icn_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_icn_bounded(n: usize, bound: usize) -> Result<Vec<PartialInjection>> {
    if n == 0 || n > bound {
        return Err(Error::OutOfBounds {
            what: "n",
            value: n,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut pairs = Vec::new();
    // An element is a chain of pairs increasing in both coordinates with
    // image <= source.
    fn extend(n: usize, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<PartialInjection>) {
        out.push(PartialInjection {
            n,
            pairs: pairs.clone(),
        });
        let (s0, i0) = pairs.last().copied().unwrap_or((0, 0));
        for s in s0 + 1..=n {
            for i in i0 + 1..=s {
                pairs.push((s, i));
                extend(n, pairs, out);
                pairs.pop();
            }
        }
    }
    extend(n, &mut pairs, &mut out);
    out.sort_by_key(|f| (f.domain(), f.images()));
    Ok(out)
}

/// Every injective partial map of `{1..n}` (the full rook monoid `R_n`).
/// Intended for small `n`; `|R_4| = 209`.
pub fn enumerate_partial_injections(n: usize) -> Result<Vec<PartialInjection>> {
    if n == 0 || n > 7 {
        return Err(Error::OutOfBounds {
            what: "n",
            value: n,
            bound: 7,
        });
    }
    let mut out = Vec::new();
    let mut pairs = Vec::new();
    let mut used = vec![false; n + 1];
    fn go(
        n: usize,
        next: usize,
        pairs: &mut Vec<(usize, usize)>,
        used: &mut [bool],
        out: &mut Vec<PartialInjection>,
    ) {
        if next > n {
            out.push(PartialInjection {
                n,
                pairs: pairs.clone(),
            });
            return;
        }
        go(n, next + 1, pairs, used, out);
        for img in 1..=n {
            if !used[img] {
                used[img] = true;
                pairs.push((next, img));
                go(n, next + 1, pairs, used, out);
                pairs.pop();
                used[img] = false;
            }
        }
    }
    go(n, 1, &mut pairs, &mut used, &mut out);
    Ok(out)
}

//! Monotone lattice paths in the closed first quadrant and the number of
//! paths lying below a given one.
//!
//! A path is identified with its height sequence. Three independent counts
//! are provided: a closed iterative formula for decreasing paths, a binomial
//! determinant for increasing paths, and a dynamic-programming oracle that
//! works for either direction.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{binomial, binomial_signed, catalan, det_exact, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Decreasing,
    Increasing,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Decreasing => "decreasing",
            Direction::Increasing => "increasing",
        }
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::Decreasing => Direction::Increasing,
            Direction::Increasing => Direction::Decreasing,
        }
    }
}

/// Heights of the horizontal steps of a monotone path.
///
/// Nonempty and weakly monotone in `direction`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeightSequence {
    direction: Direction,
    heights: Vec<u64>,
}

impl HeightSequence {
    pub fn new(direction: Direction, heights: Vec<u64>) -> Result<Self> {
        if heights.is_empty() {
            return Err(Error::InvalidArgument(
                "height sequence must be nonempty".into(),
            ));
        }
        let ok = match direction {
            Direction::Decreasing => heights.windows(2).all(|w| w[0] >= w[1]),
            Direction::Increasing => heights.windows(2).all(|w| w[0] <= w[1]),
        };
        if !ok {
            return Err(Error::NotMonotone(direction.name()));
        }
        Ok(HeightSequence { direction, heights })
    }

    pub fn decreasing(heights: Vec<u64>) -> Result<Self> {
        Self::new(Direction::Decreasing, heights)
    }

    pub fn increasing(heights: Vec<u64>) -> Result<Self> {
        Self::new(Direction::Increasing, heights)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn heights(&self) -> &[u64] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// The mirror image: heights reversed, direction flipped.
    pub fn reversed(&self) -> HeightSequence {
        let mut heights = self.heights.clone();
        heights.reverse();
        HeightSequence {
            direction: self.direction.opposite(),
            heights,
        }
    }

    fn require(&self, direction: Direction) -> Result<()> {
        if self.direction != direction {
            return Err(Error::DirectionMismatch {
                left: self.direction.name(),
                right: direction.name(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for HeightSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.heights.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// (1, 0)
    East,
    /// (0, -1)
    South,
    /// (0, 1)
    North,
}

/// A monotone path given by its start point and unit steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    direction: Direction,
    start: (u64, u64),
    steps: Vec<Step>,
}

impl LatticePath {
    /// Validates that the path starts on the nonnegative y-axis, uses only the
    /// steps allowed for `direction`, and never leaves the first quadrant.
    pub fn new(direction: Direction, start: (u64, u64), steps: Vec<Step>) -> Result<Self> {
        if start.0 != 0 {
            return Err(Error::InvalidPath(format!(
                "start ({}, {}) is not on the y-axis",
                start.0, start.1
            )));
        }
        let forbidden = match direction {
            Direction::Decreasing => Step::North,
            Direction::Increasing => Step::South,
        };
        if steps.contains(&forbidden) {
            return Err(Error::InvalidPath(format!(
                "{forbidden:?} step in a {} path",
                direction.name()
            )));
        }
        let mut y = start.1;
        for step in &steps {
            if *step == Step::South {
                y = y
                    .checked_sub(1)
                    .ok_or_else(|| Error::InvalidPath("path leaves the first quadrant".into()))?;
            }
        }
        Ok(LatticePath {
            direction,
            start,
            steps,
        })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn start(&self) -> (u64, u64) {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn end(&self) -> (u64, u64) {
        self.steps.iter().fold(self.start, |(x, y), s| match s {
            Step::East => (x + 1, y),
            Step::South => (x, y - 1),
            Step::North => (x, y + 1),
        })
    }
}

/// The unique canonical path with the given height sequence: from
/// `(0, h_1)` to `(k, 0)` when decreasing, from `(0, 0)` to `(k, a_k)` when
/// increasing.
pub fn path_from_heights(h: &HeightSequence) -> LatticePath {
    let (start_y, vertical) = match h.direction {
        Direction::Decreasing => (h.heights[0], Step::South),
        Direction::Increasing => (0, Step::North),
    };
    let mut steps = Vec::new();
    let mut y = start_y;
    for &height in &h.heights {
        let gap = y.abs_diff(height);
        steps.extend(std::iter::repeat_n(vertical, gap as usize));
        steps.push(Step::East);
        y = height;
    }
    if h.direction == Direction::Decreasing {
        steps.extend(std::iter::repeat_n(Step::South, y as usize));
    }
    LatticePath {
        direction: h.direction,
        start: (0, start_y),
        steps,
    }
}

/// Reads off the heights of the horizontal steps.
pub fn heights_from_path(p: &LatticePath) -> Result<HeightSequence> {
    let mut y = p.start.1;
    let mut heights = Vec::new();
    for step in &p.steps {
        match step {
            Step::East => heights.push(y),
            Step::South => y -= 1,
            Step::North => y += 1,
        }
    }
    if heights.is_empty() {
        return Err(Error::InvalidPath("path has no horizontal step".into()));
    }
    HeightSequence::new(p.direction, heights)
}

/// Whether `u` lies below `v`: same length and `u_i <= v_i` everywhere.
pub fn is_below(u: &HeightSequence, v: &HeightSequence) -> Result<bool> {
    u.require(v.direction)?;
    Ok(u.len() == v.len() && u.heights.iter().zip(&v.heights).all(|(a, b)| a <= b))
}

/// Auxiliary coefficients `gamma_1..gamma_k` of the iterative count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    values: Vec<BigInt>,
}

impl GammaVector {
    /// `gamma_j` with 1-based `j`.
    pub fn get(&self, j: usize) -> &BigInt {
        &self.values[j - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

// 1-based view of the heights as signed integers.
fn lam(h: &HeightSequence, i: usize) -> i64 {
    h.heights[i - 1] as i64
}

/// `gamma_1 = 1`, and for `j >= 2`
/// `gamma_j = -sum_{i=1}^{j-2} C(l_i - l_{j-1} + j - i - 1, j - i) gamma_i`.
pub fn compute_gammas(lambda: &HeightSequence) -> Result<GammaVector> {
    lambda.require(Direction::Decreasing)?;
    let k = lambda.len();
    let mut values: Vec<BigInt> = Vec::with_capacity(k);
    values.push(BigInt::one());
    for j in 2..=k {
        let mut acc = BigInt::zero();
        for i in 1..=j.saturating_sub(2) {
            let top = lam(lambda, i) - lam(lambda, j - 1) + (j - i - 1) as i64;
            acc += binomial_signed(top, (j - i) as i64)? * &values[i - 1];
        }
        values.push(-acc);
    }
    Ok(GammaVector { values })
}

/// Number of decreasing paths below `lambda` by the closed iterative formula.
pub fn count_below_decreasing_iterative(lambda: &HeightSequence) -> Result<BigInt> {
    lambda.require(Direction::Decreasing)?;
    let k = lambda.len();
    if k == 1 {
        return Ok(BigInt::from(lambda.heights[0]) + 1);
    }
    let gamma = compute_gammas(lambda)?;
    let lk = lam(lambda, k);
    let lk1 = lam(lambda, k - 1);
    let mut total = BigInt::zero();
    for i in 1..k {
        let li = lam(lambda, i);
        let ki = (k - i) as i64;
        let term = binomial_signed(li + ki + 1, ki + 1)? - binomial_signed(li - lk + ki, ki + 1)?;
        total += term * gamma.get(i);
    }
    for i in 1..=k - 2 {
        let li = lam(lambda, i);
        let ki = (k - i) as i64;
        total -= binomial_signed(li - lk1 + ki - 1, ki)? * (lk + 1) * gamma.get(i);
    }
    Ok(total)
}

/// The `k x k` matrix `C(a_i + 1, j - i + 1)` whose determinant counts
/// increasing paths below `a`.
pub fn increasing_count_matrix(heights: &[u64]) -> IntMatrix {
    let k = heights.len();
    IntMatrix::from_fn(k, k, |i, j| {
        binomial(heights[i] + 1, j as i64 - i as i64 + 1)
    })
}

/// Number of increasing paths below `a` as a binomial determinant.
pub fn count_below_increasing_determinant(a: &HeightSequence) -> Result<BigInt> {
    a.require(Direction::Increasing)?;
    det_exact(&increasing_count_matrix(&a.heights))
}

/// Counts monotone sequences `mu` with `0 <= mu_i <= h_i` by dynamic
/// programming over the last value. Independent of both closed forms.
pub fn count_below_oracle(h: &HeightSequence) -> BigInt {
    // ways[m] = number of admissible prefixes ending in value m
    let mut ways: Vec<BigInt> = vec![BigInt::one(); h.heights[0] as usize + 1];
    for &bound in &h.heights[1..] {
        let bound = bound as usize;
        let mut next = vec![BigInt::zero(); bound + 1];
        match h.direction {
            Direction::Decreasing => {
                // previous value m' >= m
                let mut suffix = BigInt::zero();
                for m in (0..ways.len()).rev() {
                    suffix += &ways[m];
                    if m <= bound {
                        next[m] = suffix.clone();
                    }
                }
            }
            Direction::Increasing => {
                // previous value m' <= m
                let mut prefix = BigInt::zero();
                for (m, slot) in next.iter_mut().enumerate() {
                    if let Some(w) = ways.get(m) {
                        prefix += w;
                    }
                    *slot = prefix.clone();
                }
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// Sequences below some bound, in lexicographic order, possibly truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BelowListing {
    pub items: Vec<HeightSequence>,
    pub truncated: bool,
}

/// Lists every sequence below `h` in lexicographic order, stopping after
/// `cap` items. `truncated` is set when more sequences exist.
pub fn enumerate_below(h: &HeightSequence, cap: usize) -> Result<BelowListing> {
    if cap == 0 {
        return Err(Error::InvalidArgument("cap must be positive".into()));
    }
    let mut items = Vec::new();
    let mut truncated = false;
    let mut prefix = Vec::with_capacity(h.len());
    walk_below(h, &mut prefix, cap, &mut items, &mut truncated);
    Ok(BelowListing { items, truncated })
}

fn walk_below(
    h: &HeightSequence,
    prefix: &mut Vec<u64>,
    cap: usize,
    out: &mut Vec<HeightSequence>,
    truncated: &mut bool,
) {
    if *truncated {
        return;
    }
    let i = prefix.len();
    if i == h.len() {
        if out.len() == cap {
            *truncated = true;
        } else {
            out.push(HeightSequence {
                direction: h.direction,
                heights: prefix.clone(),
            });
        }
        return;
    }
    let (lo, hi) = match (h.direction, prefix.last()) {
        (_, None) => (0, h.heights[0]),
        (Direction::Decreasing, Some(&prev)) => (0, prev.min(h.heights[i])),
        (Direction::Increasing, Some(&prev)) => (prev, h.heights[i]),
    };
    for value in lo..=hi {
        prefix.push(value);
        walk_below(h, prefix, cap, out, truncated);
        prefix.pop();
        if *truncated {
            return;
        }
    }
}

/// Outcome of evaluating both sides of a combinatorial identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub equal: bool,
}

impl IdentityCheck {
    pub fn new(lhs: BigInt, rhs: BigInt) -> Self {
        let equal = lhs == rhs;
        IdentityCheck { lhs, rhs, equal }
    }
}

/// `det C(l_i + 1, i - j + 1)` against the iterative count for a decreasing
/// sequence of length at least 2.
pub fn verify_identity_cor34(lambda: &HeightSequence) -> Result<IdentityCheck> {
    lambda.require(Direction::Decreasing)?;
    let k = lambda.len();
    if k < 2 {
        return Err(Error::InvalidArgument(
            "identity requires a sequence of length at least 2".into(),
        ));
    }
    let h = &lambda.heights;
    let m = IntMatrix::from_fn(k, k, |i, j| binomial(h[i] + 1, i as i64 - j as i64 + 1));
    let lhs = det_exact(&m)?;
    let rhs = count_below_decreasing_iterative(lambda)?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `c_{k+1}` against the staircase specialisation of the iterative formula,
/// evaluated with its own gamma recursion.
pub fn verify_identity_cor35(k: u64) -> Result<IdentityCheck> {
    if k < 2 {
        return Err(Error::InvalidArgument("identity requires k >= 2".into()));
    }
    let k = k as usize;
    let c = |top: usize, bottom: usize| binomial(top as u64, bottom as i64);
    let mut gamma = vec![BigInt::zero(); k + 1];
    gamma[1] = BigInt::one();
    for i in 2..=k {
        let mut acc = BigInt::zero();
        for j in 1..=i.saturating_sub(2) {
            acc += c(2 * (i - j - 1), i - j) * &gamma[j];
        }
        gamma[i] = -acc;
    }
    let mut rhs = BigInt::zero();
    for i in 1..k {
        rhs += (c(2 * (k - i + 1), k + 1 - i) - c(2 * (k - i), k + 1 - i)) * &gamma[i];
    }
    for i in 1..=k - 2 {
        rhs -= c(2 * (k - i - 1), k - i) * 2 * &gamma[i];
    }
    let lhs = catalan(k as u64 + 1)?;
    Ok(IdentityCheck::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(h: &[u64]) -> HeightSequence {
        HeightSequence::decreasing(h.to_vec()).unwrap()
    }

    fn inc(h: &[u64]) -> HeightSequence {
        HeightSequence::increasing(h.to_vec()).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn construction_rejects_bad_sequences() {
        assert!(HeightSequence::decreasing(vec![]).is_err());
        assert_eq!(
            HeightSequence::decreasing(vec![1, 2]).unwrap_err(),
            Error::NotMonotone("decreasing")
        );
        assert!(HeightSequence::increasing(vec![3, 1]).is_err());
    }

    #[test]
    fn figure_paths() {
        use Step::*;
        let p = path_from_heights(&dec(&[4, 3, 3, 1, 1]));
        assert_eq!(p.start(), (0, 4));
        assert_eq!(p.end(), (5, 0));
        assert_eq!(
            p.steps(),
            &[East, South, East, East, South, South, East, East, South]
        );
        let q = path_from_heights(&inc(&[1, 3, 3, 4, 4]));
        assert_eq!(q.start(), (0, 0));
        assert_eq!(q.end(), (5, 4));
        let flat = path_from_heights(&dec(&[0]));
        assert_eq!(flat.steps(), &[East]);
        assert_eq!(flat.end(), (1, 0));
    }

    #[test]
    fn heights_round_trip() {
        for h in [dec(&[4, 3, 3, 1, 1]), inc(&[0, 0]), inc(&[1, 3, 3, 4, 4])] {
            assert_eq!(heights_from_path(&path_from_heights(&h)).unwrap(), h);
        }
        let p = LatticePath::new(
            Direction::Increasing,
            (0, 0),
            vec![Step::North, Step::North, Step::East, Step::East],
        )
        .unwrap();
        assert_eq!(heights_from_path(&p).unwrap(), inc(&[2, 2]));
    }

    #[test]
    fn invalid_paths_rejected() {
        assert!(LatticePath::new(Direction::Decreasing, (1, 2), vec![Step::East]).is_err());
        assert!(LatticePath::new(Direction::Decreasing, (0, 2), vec![Step::North]).is_err());
        assert!(LatticePath::new(Direction::Decreasing, (0, 0), vec![Step::South]).is_err());
        let vertical = LatticePath::new(Direction::Increasing, (0, 0), vec![Step::North]).unwrap();
        assert!(heights_from_path(&vertical).is_err());
    }

    #[test]
    fn below_relation() {
        assert!(is_below(&dec(&[3, 2, 0]), &dec(&[4, 3, 3])).unwrap());
        assert!(!is_below(&dec(&[4, 4]), &dec(&[4, 3])).unwrap());
        assert!(is_below(&dec(&[2, 1]), &dec(&[2, 1])).unwrap());
        assert!(!is_below(&dec(&[1]), &dec(&[2, 1])).unwrap());
        assert!(is_below(&inc(&[0]), &dec(&[0])).is_err());
    }

    #[test]
    fn gamma_examples() {
        let g = compute_gammas(&dec(&[3, 2, 1])).unwrap();
        assert_eq!(g.values(), &[big(1), big(0), big(-1)]);
        let g = compute_gammas(&dec(&[7])).unwrap();
        assert_eq!(g.values(), &[big(1)]);
        assert!(compute_gammas(&inc(&[1, 2])).is_err());
    }

    #[test]
    fn iterative_examples() {
        assert_eq!(
            count_below_decreasing_iterative(&dec(&[4, 2])).unwrap(),
            big(12)
        );
        assert_eq!(
            count_below_decreasing_iterative(&dec(&[4])).unwrap(),
            big(5)
        );
        assert_eq!(
            count_below_decreasing_iterative(&dec(&[3, 2, 1])).unwrap(),
            big(14)
        );
        assert_eq!(
            count_below_decreasing_iterative(&dec(&[0, 0])).unwrap(),
            big(1)
        );
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            count_below_increasing_determinant(&inc(&[1, 2])).unwrap(),
            big(5)
        );
        assert_eq!(
            count_below_increasing_determinant(&inc(&[2, 2])).unwrap(),
            big(6)
        );
        assert_eq!(
            count_below_increasing_determinant(&inc(&[0, 0])).unwrap(),
            big(1)
        );
        assert!(count_below_increasing_determinant(&dec(&[2])).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(count_below_oracle(&dec(&[4, 2])), big(12));
        assert_eq!(count_below_oracle(&dec(&[2, 1])), big(5));
        assert_eq!(count_below_oracle(&inc(&[1, 2])), big(5));
        assert_eq!(count_below_oracle(&inc(&[0])), big(1));
    }

    #[test]
    fn listing_examples() {
        let l = enumerate_below(&dec(&[2, 1]), 10).unwrap();
        let got: Vec<Vec<u64>> = l.items.iter().map(|h| h.heights().to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]]
        );
        assert!(!l.truncated);

        let l = enumerate_below(&dec(&[0]), 10).unwrap();
        assert_eq!(l.items, vec![dec(&[0])]);

        let l = enumerate_below(&dec(&[1]), 1).unwrap();
        assert_eq!(l.items, vec![dec(&[0])]);
        assert!(l.truncated);

        // exactly cap items: not truncated
        let l = enumerate_below(&dec(&[1]), 2).unwrap();
        assert_eq!(l.items.len(), 2);
        assert!(!l.truncated);

        assert!(enumerate_below(&dec(&[1]), 0).is_err());
    }

    #[test]
    fn increasing_listing() {
        let l = enumerate_below(&inc(&[1, 2]), 100).unwrap();
        let got: Vec<Vec<u64>> = l.items.iter().map(|h| h.heights().to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn identity_examples() {
        let c = verify_identity_cor34(&dec(&[4, 2])).unwrap();
        assert_eq!((c.lhs, c.rhs, c.equal), (big(12), big(12), true));
        let c = verify_identity_cor34(&dec(&[3, 2, 1])).unwrap();
        assert_eq!((c.lhs, c.rhs, c.equal), (big(14), big(14), true));
        let c = verify_identity_cor34(&dec(&[3, 3])).unwrap();
        assert_eq!((c.lhs, c.rhs, c.equal), (big(10), big(10), true));
        assert!(verify_identity_cor34(&dec(&[3])).is_err());

        for (k, expect) in [(2, 5), (3, 14), (5, 132)] {
            let c = verify_identity_cor35(k).unwrap();
            assert_eq!((c.lhs, c.rhs, c.equal), (big(expect), big(expect), true));
        }
        assert!(verify_identity_cor35(1).is_err());
    }

    #[test]
    fn trailing_zero_is_stable() {
        let base = dec(&[5, 3, 3, 1]);
        let mut extended = base.heights().to_vec();
        extended.push(0);
        assert_eq!(
            count_below_decreasing_iterative(&base).unwrap(),
            count_below_decreasing_iterative(&dec(&extended)).unwrap()
        );
    }
}

#![allow(dead_code)]

use lattice_rook::exact_math::{IntMatrix, Rational};
use lattice_rook::icn_modules::{ModuleVector, Subset};
use lattice_rook::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Every weakly decreasing sequence of length `k` with entries in `0..=max`.
pub fn decreasing_sequences(k: usize, max: u64) -> Vec<Vec<u64>> {
    fn go(k: usize, cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for x in 0..=cap {
            prefix.push(x);
            go(k, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, max, &mut Vec::new(), &mut out);
    out
}

/// Counts monotone sequences below `bound` by trying every tuple in the box.
pub fn brute_force_below(bound: &[u64], decreasing: bool) -> u64 {
    fn go(bound: &[u64], decreasing: bool, prev: Option<u64>, i: usize) -> u64 {
        if i == bound.len() {
            return 1;
        }
        (0..=bound[i])
            .filter(|&x| match prev {
                None => true,
                Some(p) if decreasing => x <= p,
                Some(p) => x >= p,
            })
            .map(|x| go(bound, decreasing, Some(x), i + 1))
            .sum()
    }
    go(bound, decreasing, None, 0)
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn matrix_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.to_rows()
}

/// All subsets of `{1..n}`, including the empty one.
pub fn all_subsets(n: usize) -> Vec<Subset> {
    (0u32..(1 << n))
        .map(|mask| {
            let elems = (1..=n).filter(|e| mask & (1 << (e - 1)) != 0).collect();
            Subset::new(n, elems).unwrap()
        })
        .collect()
}

/// A vector with between 0 and `max_terms` terms and small nonzero rational
/// coefficients.
pub fn random_vector(rng: &mut impl Rng, n: usize, max_terms: usize) -> ModuleVector {
    let terms = rng.gen_range(0..=max_terms);
    let mut v = ModuleVector::zero(n);
    for _ in 0..terms {
        let mask: u32 = rng.gen_range(0..(1u32 << n));
        let elems = (1..=n).filter(|e| mask & (1 << (e - 1)) != 0).collect();
        let mut num: i64 = rng.gen_range(-5..=5);
        if num == 0 {
            num = 1;
        }
        let den: i64 = rng.gen_range(1..=3);
        let coef = Rational::new(BigInt::from(num), BigInt::from(den));
        v.add_term(coef, Subset::new(n, elems).unwrap()).unwrap();
    }
    v
}

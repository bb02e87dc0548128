//! Integer polynomials in one variable, stored as ascending coefficient
//! vectors with no trailing zeros (the zero polynomial is empty).

use alloc::vec;
use alloc::vec::Vec;

pub type Poly = Vec<i64>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn add(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

pub fn scale(a: &[i64], c: i64) -> Poly {
    trim(a.iter().map(|x| x * c).collect())
}

pub fn mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn pow(a: &[i64], k: usize) -> Poly {
    (0..k).fold(vec![1], |acc, _| mul(&acc, a))
}

/// `1 + t + ... + t^(d-1)`, i.e. `(t^d - 1)/(t - 1)`.
pub fn q_integer(d: usize) -> Poly {
    vec![1; d]
}

/// Product of `q_integer(d)` over the given degrees.
pub fn degree_product(degrees: &[usize]) -> Poly {
    degrees.iter().fold(vec![1], |acc, &d| mul(&acc, &q_integer(d)))
}

/// Generating polynomial `sum_x t^x` of a multiset of exponents.
pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Poly {
    let mut out: Poly = Vec::new();
    for e in exponents {
        if out.len() <= e {
            out.resize(e + 1, 0);
        }
        out[e] += 1;
    }
    out
}

pub fn eval(a: &[i64], t: i64) -> i64 {
    a.iter().rev().fold(0, |acc, &c| acc * t + c)
}

pub fn is_palindromic(a: &[i64]) -> bool {
    a.iter().eq(a.iter().rev())
}

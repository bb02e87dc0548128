//! Reduced crystallographic root systems and their Weyl groups.
//!
//! Roots live in simple-root coordinates. The Cartan matrix uses the
//! convention `a[i][j] = <alpha_i^vee, alpha_j>`, so the simple reflection
//! `s_i` sends `beta` to `beta - (sum_j beta_j a[i][j]) alpha_i`. Simple
//! roots are numbered as in Bourbaki's tables.
//!
//! Cocharacters are written in fundamental-coweight coordinates, so the
//! pairing of a root with a cocharacter is the plain dot product of the two
//! coordinate vectors.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::linalg::{dot, IntMatrix};
use crate::poly::{self, Poly};

/// Enumeration cap used when the caller does not pick one.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// Upper bound on the number of roots accepted from a custom Cartan matrix.
const MAX_ROOTS: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSystemError {
    #[error("no root system of type {family}{rank}")]
    InvalidSpec { family: Family, rank: usize },
    #[error("Weyl group has {order} elements, above the enumeration cap {cap}")]
    CapExceeded { cap: usize, order: u128 },
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

impl RootSystemError {
    pub fn kind(&self) -> &'static str {
        match self {
            RootSystemError::InvalidSpec { .. } => "InvalidSpec",
            RootSystemError::CapExceeded { .. } => "CapExceeded",
            RootSystemError::InvalidCartan(_) => "InvalidCartan",
            RootSystemError::IndexOutOfRange { .. } => "IndexOutOfRange",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(format!("unknown root system family {other:?}")),
        }
    }
}

/// A validated (family, rank) pair from the Cartan–Killing classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemSpec { family, rank })
        } else {
            Err(RootSystemError::InvalidSpec { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Fundamental degrees of the Weyl group.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.rank;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        }
    }

    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.rank;
        let mut a = IntMatrix::identity(n);
        for i in 0..n {
            a[(i, i)] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[(i, j)] = aij;
            a[(j, i)] = aji;
        };
        match self.family {
            Family::A => (1..n).for_each(|i| link(i - 1, i, -1, -1)),
            Family::B => {
                (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            Family::C => {
                (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            Family::D => {
                (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                // Bourbaki: 1-3-4-5-..., with 2 attached to 4.
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (3..n).for_each(|i| link(i - 1, i, -1, -1));
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -3, -1),
        }
        a
    }
}

/// Roots, Cartan data and simple reflections of a root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    name: String,
    rank: usize,
    cartan: IntMatrix,
    /// `d_i` with `d_i a[i][j]` symmetric; proportional to `(alpha_i, alpha_i)`.
    symmetrizer: Vec<i64>,
    /// Sorted by height, then lexicographically.
    positive_roots: Vec<Vec<i64>>,
    root_set: BTreeSet<Vec<i64>>,
    simple_reflections: Vec<IntMatrix>,
    degrees: Option<Vec<usize>>,
}

pub fn build_root_system(spec: RootSystemSpec) -> RootSystem {
    let name = format!("{}{}", spec.family, spec.rank);
    let mut rs = RootSystem::from_cartan_matrix(&name, spec.cartan_matrix())
        .expect("classified Cartan matrices are of finite type");
    rs.degrees = Some(spec.degrees());
    rs
}

impl RootSystem {
    /// Builds a root system from any symmetrizable Cartan matrix of finite
    /// type, reducible ones included. Roots are obtained as the orbit of the
    /// simple roots under the simple reflections.
    pub fn from_cartan_matrix(name: &str, cartan: IntMatrix) -> Result<Self, RootSystemError> {
        let bad = |m: &str| Err(RootSystemError::InvalidCartan(m.into()));
        if !cartan.is_square() || cartan.rows() == 0 {
            return bad("must be square with positive rank");
        }
        let n = cartan.rows();
        for i in 0..n {
            if cartan[(i, i)] != 2 {
                return bad("diagonal entries must be 2");
            }
            for j in 0..n {
                if i != j {
                    if cartan[(i, j)] > 0 {
                        return bad("off-diagonal entries must be nonpositive");
                    }
                    if (cartan[(i, j)] == 0) != (cartan[(j, i)] == 0) {
                        return bad("zero pattern must be symmetric");
                    }
                }
            }
        }
        let symmetrizer = symmetrize(&cartan)?;

        let simple_reflections: Vec<IntMatrix> = (0..n)
            .map(|i| {
                let mut s = IntMatrix::identity(n);
                for j in 0..n {
                    s[(i, j)] -= cartan[(i, j)];
                }
                s
            })
            .collect();

        let mut root_set = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        root_set.extend(frontier.iter().cloned());
        while let Some(beta) = frontier.pop() {
            for s in &simple_reflections {
                let image = s.mul_vec(&beta);
                if root_set.insert(image.clone()) {
                    if root_set.len() > MAX_ROOTS {
                        return bad("not of finite type");
                    }
                    frontier.push(image);
                }
            }
        }
        let mut positive_roots = Vec::new();
        for r in &root_set {
            if r.iter().all(|&c| c >= 0) {
                positive_roots.push(r.clone());
            } else if !r.iter().all(|&c| c <= 0) {
                return bad("root with mixed signs");
            }
        }
        positive_roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));

        Ok(RootSystem {
            name: name.into(),
            rank: n,
            cartan,
            symmetrizer,
            positive_roots,
            root_set,
            simple_reflections,
            degrees: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| unit(self.rank, i)).collect()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn negative_roots(&self) -> Vec<Vec<i64>> {
        self.positive_roots.iter().map(|r| neg(r)).collect()
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut all = self.positive_roots.clone();
        all.extend(self.negative_roots());
        all
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_set.contains(v)
    }

    /// Fundamental degrees, known for classified types only.
    pub fn degrees(&self) -> Option<&[usize]> {
        self.degrees.as_deref()
    }

    /// `|W|` as the product of the degrees, when known.
    pub fn weyl_order(&self) -> Option<u128> {
        self.degrees().map(|d| d.iter().map(|&x| x as u128).product())
    }

    /// `sum_{w in W} t^{l(w)}` from the degrees, when known.
    pub fn weyl_poincare_from_degrees(&self) -> Option<Poly> {
        self.degrees().map(poly::degree_product)
    }

    pub fn simple_reflection(&self, i: usize) -> &IntMatrix {
        &self.simple_reflections[i]
    }

    /// The invariant form `(a, b)`, scaled so short simple roots have
    /// `(alpha, alpha) = 2 min d_i`.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        a.iter()
            .zip(&self.symmetrizer)
            .enumerate()
            .filter(|(_, (&x, _))| x != 0)
            .map(|(i, (&x, &d))| x * d * dot(self.cartan.row(i), b))
            .sum()
    }

    /// `<gamma, beta^vee>` for a root `beta`.
    pub fn coroot_pairing(&self, gamma: &[i64], beta: &[i64]) -> i64 {
        let num = 2 * self.form(gamma, beta);
        let den = self.form(beta, beta);
        debug_assert_eq!(num % den, 0, "non-integral coroot pairing");
        num / den
    }

    /// Matrix of the reflection `s_beta` on root coordinates.
    pub fn reflection_matrix(&self, beta: &[i64]) -> IntMatrix {
        let mut m = IntMatrix::identity(self.rank);
        for j in 0..self.rank {
            let c = self.coroot_pairing(&unit(self.rank, j), beta);
            for i in 0..self.rank {
                m[(i, j)] -= c * beta[i];
            }
        }
        m
    }

    fn check_index(&self, index: usize) -> Result<(), RootSystemError> {
        if index < self.rank {
            Ok(())
        } else {
            Err(RootSystemError::IndexOutOfRange { index, rank: self.rank })
        }
    }
}

fn symmetrize(a: &IntMatrix) -> Result<Vec<i64>, RootSystemError> {
    let n = a.rows();
    let mut d = vec![0i64; n];
    for start in 0..n {
        if d[start] != 0 {
            continue;
        }
        d[start] = 1;
        let mut component = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || a[(i, j)] == 0 {
                    continue;
                }
                // need d_j a_ji = d_i a_ij
                let num = d[i] * a[(i, j)];
                let den = a[(j, i)];
                if d[j] == 0 {
                    if num % den != 0 {
                        let f = den / crate::linalg::gcd(num, den);
                        for &k in &component {
                            d[k] *= f.abs();
                        }
                    }
                    d[j] = d[i] * a[(i, j)] / den;
                    component.push(j);
                    stack.push(j);
                } else if d[j] * den != d[i] * a[(i, j)] {
                    return Err(RootSystemError::InvalidCartan("not symmetrizable".into()));
                }
            }
        }
    }
    Ok(d)
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// An element of the Weyl group: its lexicographically smallest reduced
/// word (0-based simple indices) and its matrix on root coordinates, whose
/// `j`-th column is `w(alpha_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<u8>,
    action: IntMatrix,
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement { word: Vec::new(), action: IntMatrix::identity(rs.rank) }
    }

    /// The element represented by an arbitrary (not necessarily reduced)
    /// word of 0-based simple indices.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self, RootSystemError> {
        let mut m = IntMatrix::identity(rs.rank);
        for &i in word {
            rs.check_index(i)?;
            m = &m * rs.simple_reflection(i);
        }
        Ok(Self::from_action(rs, m))
    }

    /// Recovers the lexicographically smallest reduced word of a group
    /// element given by its action matrix.
    pub fn from_action(rs: &RootSystem, action: IntMatrix) -> Self {
        // Greedy left descents: s_i w < w iff w^{-1}(alpha_i) < 0.
        let mut word = Vec::new();
        let mut rest = action.clone();
        loop {
            let inv = rest.inverse_unimodular().expect("Weyl group matrices are unimodular");
            let Some(i) = (0..rs.rank).find(|&i| inv.column(i).iter().all(|&c| c <= 0)) else {
                break;
            };
            word.push(i as u8);
            rest = rs.simple_reflection(i) * &rest;
        }
        debug_assert_eq!(rest, IntMatrix::identity(rs.rank));
        WeylElement { word, action }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, root: &[i64]) -> Vec<i64> {
        self.action.mul_vec(root)
    }

    /// `#{alpha > 0 : w(alpha) < 0}`.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        rs.positive_roots
            .iter()
            .filter(|r| self.apply(r).iter().all(|&c| c <= 0))
            .count()
    }

    /// Product `self * other` (apply `other` first), re-reduced.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        Self::from_action(rs, &self.action * &other.action)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let m = self.action.inverse_unimodular().expect("unimodular");
        Self::from_action(rs, m)
    }

    /// `"e"` for the identity, otherwise `s1s2...` with 1-based indices.
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        let mut s = String::with_capacity(2 * self.word.len());
        for &i in &self.word {
            s.push('s');
            s.push_str(&format!("{}", i + 1));
        }
        s
    }
}

/// All elements of `W`, grouped by length and ordered lexicographically by
/// reduced word inside each length.
pub fn enumerate_weyl(rs: &RootSystem, cap: usize) -> Result<Vec<WeylElement>, RootSystemError> {
    let all: Vec<usize> = (0..rs.rank).collect();
    enumerate_subgroup(rs, &all, cap)
}

/// Elements of the standard parabolic subgroup generated by the given
/// simple reflections, in the same order as [`enumerate_weyl`].
pub fn enumerate_subgroup(
    rs: &RootSystem,
    generators: &[usize],
    cap: usize,
) -> Result<Vec<WeylElement>, RootSystemError> {
    let mut gens: Vec<usize> = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    for &g in &gens {
        rs.check_index(g)?;
    }
    if gens.len() == rs.rank {
        if let Some(order) = rs.weyl_order() {
            if order > cap as u128 {
                return Err(RootSystemError::CapExceeded { cap, order });
            }
        }
    }

    let mut out = vec![WeylElement::identity(rs)];
    let mut level_start = 0;
    loop {
        // Children w s_i with w(alpha_i) > 0 are exactly the length l+1
        // elements; visiting parents in word order and i ascending yields
        // each child first through its lexicographically smallest word.
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for w in &out[level_start..] {
            for &i in &gens {
                if w.action.column(i).iter().any(|&c| c < 0) {
                    continue;
                }
                let action = &w.action * rs.simple_reflection(i);
                if seen.insert(action.clone()) {
                    let mut word = w.word.clone();
                    word.push(i as u8);
                    next.push(WeylElement { word, action });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        if out.len() + next.len() > cap {
            return Err(RootSystemError::CapExceeded {
                cap,
                order: (out.len() + next.len()) as u128,
            });
        }
        level_start = out.len();
        out.extend(next);
    }
    Ok(out)
}

/// The longest element, found by right-multiplying with ascents until none
/// is left. Needs no enumeration.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut m = IntMatrix::identity(rs.rank);
    while let Some(i) = (0..rs.rank).find(|&i| m.column(i).iter().all(|&c| c >= 0)) {
        m = &m * rs.simple_reflection(i);
    }
    WeylElement::from_action(rs, m)
}

/// A cocharacter in fundamental-coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Cocharacter(pub Vec<i64>);

impl Cocharacter {
    /// `<root, lambda>`.
    pub fn pair(&self, root: &[i64]) -> i64 {
        dot(root, &self.0)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

/// The sum of the fundamental coweights: pairs to 1 with every simple root.
pub fn dominant_regular_cocharacter(rs: &RootSystem) -> Cocharacter {
    Cocharacter(vec![1; rs.rank])
}

/// True iff `<alpha, lambda> != 0` for every root.
pub fn is_regular(rs: &RootSystem, lambda: &Cocharacter) -> bool {
    lambda.0.len() == rs.rank && rs.positive_roots.iter().all(|r| lambda.pair(r) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        build_root_system(RootSystemSpec::new(f, n).unwrap())
    }

    #[test]
    fn invalid_specs_rejected() {
        for (f, n) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::D, 2),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 3),
        ] {
            assert_eq!(RootSystemSpec::new(f, n), Err(RootSystemError::InvalidSpec { family: f, rank: n }));
        }
    }

    #[test]
    fn root_counts() {
        assert_eq!(rs(Family::A, 1).roots().len(), 2);
        assert_eq!(rs(Family::A, 1).positive_roots().len(), 1);
        assert_eq!(rs(Family::A, 2).roots().len(), 6);
        assert_eq!(rs(Family::G, 2).roots().len(), 12);
        assert_eq!(rs(Family::B, 3).roots().len(), 18);
        assert_eq!(rs(Family::F, 4).roots().len(), 48);
        assert_eq!(rs(Family::E, 6).roots().len(), 72);
        assert_eq!(rs(Family::E, 8).roots().len(), 240);
    }

    #[test]
    fn highest_root_of_g2() {
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.positive_roots().last().unwrap(), &vec![3, 2]);
    }

    #[test]
    fn small_weyl_groups() {
        let a1 = rs(Family::A, 1);
        let w = enumerate_weyl(&a1, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(w.iter().map(|x| x.length()).collect::<Vec<_>>(), vec![0, 1]);

        let a2 = rs(Family::A, 2);
        let w = enumerate_weyl(&a2, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(w.iter().map(|x| x.length()).collect::<Vec<_>>(), vec![0, 1, 1, 2, 2, 3]);
        let labels: Vec<_> = w.iter().map(|x| x.label()).collect();
        assert_eq!(labels, ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]);

        let b2 = rs(Family::B, 2);
        let w = enumerate_weyl(&b2, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(w.last().unwrap().length(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let e7 = rs(Family::E, 7);
        assert!(matches!(
            enumerate_weyl(&e7, DEFAULT_WEYL_CAP),
            Err(RootSystemError::CapExceeded { order: 2903040, .. })
        ));
        let a3 = rs(Family::A, 3);
        assert!(matches!(enumerate_weyl(&a3, 10), Err(RootSystemError::CapExceeded { .. })));
        // custom matrices have no degrees, so the cap trips during the walk
        let custom = RootSystem::from_cartan_matrix("A3", rs(Family::A, 3).cartan_matrix().clone()).unwrap();
        assert!(matches!(enumerate_weyl(&custom, 10), Err(RootSystemError::CapExceeded { .. })));
    }

    #[test]
    fn longest_elements() {
        let a2 = rs(Family::A, 2);
        let w0 = longest_element(&a2);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.inversions(&a2), 3);
        let b2 = rs(Family::B, 2);
        assert_eq!(longest_element(&b2).length(), 4);
        assert!(WeylElement::identity(&b2).is_identity());
        assert_eq!(WeylElement::identity(&b2).length(), 0);
    }

    #[test]
    fn word_reduction() {
        let a2 = rs(Family::A, 2);
        let w = WeylElement::from_word(&a2, &[0, 0]).unwrap();
        assert!(w.is_identity());
        let w = WeylElement::from_word(&a2, &[1, 0, 1]).unwrap();
        assert_eq!(w.label(), "s1s2s1");
        assert!(WeylElement::from_word(&a2, &[2]).is_err());
    }

    #[test]
    fn cocharacters() {
        let a1 = rs(Family::A, 1);
        let l = dominant_regular_cocharacter(&a1);
        assert!(l.pair(&a1.positive_roots()[0]) > 0);
        assert!(is_regular(&a1, &l));

        let a2 = rs(Family::A, 2);
        let l = dominant_regular_cocharacter(&a2);
        let pairings: Vec<i64> = a2.positive_roots().iter().map(|r| l.pair(r)).collect();
        assert_eq!(pairings, vec![1, 1, 2]);
        assert!(is_regular(&a2, &l));
        assert!(!is_regular(&a2, &Cocharacter(vec![0, 0])));
        assert!(!is_regular(&a2, &Cocharacter(vec![1, 0])));

        let b2 = rs(Family::B, 2);
        let l = dominant_regular_cocharacter(&b2);
        assert!(b2.positive_roots().iter().all(|r| l.pair(r) > 0));
        assert_eq!(b2.positive_roots().len(), 4);
    }

    #[test]
    fn reflections_permute_roots() {
        for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::G, 2), (Family::F, 4)] {
            let r = rs(f, n);
            for beta in r.positive_roots() {
                let s = r.reflection_matrix(beta);
                assert_eq!(s.mul_vec(beta), neg(beta));
                for gamma in r.roots() {
                    assert!(r.is_root(&s.mul_vec(&gamma)));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_cartan() {
        let affine = IntMatrix::from_rows(&[[2, -2], [-2, 2]]);
        assert!(RootSystem::from_cartan_matrix("A1~", affine).is_err());
        let bad = IntMatrix::from_rows(&[[2, 1], [1, 2]]);
        assert!(RootSystem::from_cartan_matrix("x", bad).is_err());
        let reducible = IntMatrix::from_rows(&[[2, 0], [0, 2]]);
        let a1a1 = RootSystem::from_cartan_matrix("A1xA1", reducible).unwrap();
        assert_eq!(a1a1.positive_roots().len(), 2);
    }
}

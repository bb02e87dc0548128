//! Smooth complete fans and their toric varieties.
//!
//! A fan is given by primitive rays and its maximal cones. Validation
//! checks primitivity, smoothness of every maximal cone (generators form a
//! lattice basis), and a wall condition: every facet of a maximal cone lies
//! in exactly one other maximal cone, on the opposite side. Completeness is
//! then backed by palindromicity of the h-vector.
//!
//! The torus-fixed points are the maximal cones. At the cone spanned by
//! `v_1..v_n` the tangent weights are the dual basis `m_1..m_n`
//! (`<m_i, v_j> = delta_ij`), i.e. the rows of the inverse of the matrix
//! with columns `v_j`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bbengine::{FixedPoint, TorusModel};
use crate::linalg::{gcd_all, IntMatrix};
use crate::poly::{self, Poly};

pub const MAX_LATTICE_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FanError {
    #[error("malformed fan: {0}")]
    Malformed(String),
    #[error("ray {index} = {ray:?} is not primitive")]
    NonPrimitiveRay { index: usize, ray: Vec<i64> },
    #[error("cone {cone:?} is not smooth (determinant {determinant})")]
    NonSmoothCone { cone: Vec<usize>, determinant: i128 },
    #[error("wall condition fails at face {face:?}: {detail}")]
    WallConditionFailed { face: Vec<usize>, detail: String },
    #[error("h-vector {h:?} is not palindromic, fan is not complete")]
    NonPalindromicH { h: Vec<i64> },
}

impl FanError {
    pub fn kind(&self) -> &'static str {
        match self {
            FanError::Malformed(_) => "ParseError",
            FanError::NonPrimitiveRay { .. } => "NonPrimitiveRay",
            FanError::NonSmoothCone { .. } => "NonSmoothCone",
            FanError::WallConditionFailed { .. } => "WallConditionFailed",
            FanError::NonPalindromicH { .. } => "NonPalindromicH",
        }
    }
}

/// A validated smooth complete fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    name: String,
    lattice_rank: usize,
    rays: Vec<Vec<i64>>,
    /// Each cone as sorted ray indices, in input order.
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn new(
        name: impl Into<String>,
        lattice_rank: usize,
        rays: Vec<Vec<i64>>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Self, FanError> {
        let n = lattice_rank;
        let malformed = |m: String| Err(FanError::Malformed(m));
        if n == 0 || n > MAX_LATTICE_RANK {
            return malformed(format!("lattice rank {n} outside 1..={MAX_LATTICE_RANK}"));
        }
        if let Some((i, r)) = rays.iter().enumerate().find(|(_, r)| r.len() != n) {
            return malformed(format!("ray {i} has {} coordinates, expected {n}", r.len()));
        }
        if rays.iter().collect::<BTreeSet<_>>().len() != rays.len() {
            return malformed("duplicate rays".into());
        }
        if max_cones.is_empty() {
            return malformed("no maximal cones".into());
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for cone in max_cones {
            let mut c = cone.clone();
            c.sort_unstable();
            c.dedup();
            if c.len() != cone.len() {
                return malformed(format!("cone {cone:?} repeats a ray"));
            }
            if c.len() != n {
                return malformed(format!("cone {cone:?} has {} rays, expected {n}", c.len()));
            }
            if let Some(&i) = c.iter().find(|&&i| i >= rays.len()) {
                return malformed(format!("cone {cone:?} refers to missing ray {i}"));
            }
            cones.push(c);
        }
        if cones.iter().collect::<BTreeSet<_>>().len() != cones.len() {
            return malformed("duplicate maximal cones".into());
        }

        for (index, ray) in rays.iter().enumerate() {
            if gcd_all(ray) != 1 {
                return Err(FanError::NonPrimitiveRay { index, ray: ray.clone() });
            }
        }
        let fan = Fan { name: name.into(), lattice_rank: n, rays, max_cones: cones };
        for cone in &fan.max_cones {
            let determinant = fan.generator_matrix(cone).determinant();
            if determinant.abs() != 1 {
                return Err(FanError::NonSmoothCone { cone: cone.clone(), determinant });
            }
        }
        fan.check_walls()?;
        let h = h_vector(&fan);
        if !poly::is_palindromic(&h) {
            return Err(FanError::NonPalindromicH { h });
        }
        Ok(fan)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    /// Columns are the ray generators of `cone`, in the given order.
    fn generator_matrix(&self, cone: &[usize]) -> IntMatrix {
        let cols: Vec<&[i64]> = cone.iter().map(|&i| self.rays[i].as_slice()).collect();
        IntMatrix::from_columns(&cols)
    }

    fn check_walls(&self) -> Result<(), FanError> {
        let n = self.lattice_rank;
        for cone in &self.max_cones {
            for skip in 0..n {
                let face: Vec<usize> =
                    cone.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &r)| r).collect();
                let others: Vec<&Vec<usize>> = self
                    .max_cones
                    .iter()
                    .filter(|c| *c != cone && face.iter().all(|r| c.contains(r)))
                    .collect();
                let [other] = others.as_slice() else {
                    return Err(FanError::WallConditionFailed {
                        face,
                        detail: format!("shared by {} other maximal cones, expected 1", others.len()),
                    });
                };
                let apex = |c: &[usize]| *c.iter().find(|r| !face.contains(r)).expect("n rays");
                let side = |r: usize| {
                    let mut cols = face.clone();
                    cols.push(r);
                    self.generator_matrix(&cols).determinant().signum()
                };
                if side(apex(cone)) == side(apex(other)) {
                    return Err(FanError::WallConditionFailed {
                        face,
                        detail: "both cones lie on the same side of the wall".into(),
                    });
                }
            }
        }
        Ok(())
    }

    /// All cones, as sorted ray-index tuples, grouped by dimension.
    pub fn cones_by_dimension(&self) -> Vec<BTreeSet<Vec<usize>>> {
        let n = self.lattice_rank;
        let mut out = vec![BTreeSet::new(); n + 1];
        for cone in &self.max_cones {
            for mask in 0u32..(1 << n) {
                let face: Vec<usize> =
                    (0..n).filter(|&k| mask >> k & 1 == 1).map(|k| cone[k]).collect();
                out[face.len()].insert(face);
            }
        }
        out
    }
}

/// Label of a maximal cone as a fixed point, e.g. `(0,2)`.
pub fn cone_label(cone: &[usize]) -> String {
    let parts: Vec<String> = cone.iter().map(|i| format!("{i}")).collect();
    format!("({})", parts.join(","))
}

/// `h(t) = sum_j f_j (t - 1)^(n - j)` with `f_j` the number of
/// `j`-dimensional cones.
pub fn h_vector(fan: &Fan) -> Poly {
    let n = fan.lattice_rank;
    let f: Vec<i64> = fan.cones_by_dimension().iter().map(|s| s.len() as i64).collect();
    let mut h = Vec::new();
    for (j, &fj) in f.iter().enumerate() {
        h = poly::add(&h, &poly::scale(&poly::pow(&[-1, 1], n - j), fj));
    }
    h
}

/// The torus model of the toric variety: one fixed point per maximal cone.
pub fn toric_torus_model(fan: &Fan) -> TorusModel {
    let fixed_points = fan
        .max_cones
        .iter()
        .map(|cone| {
            let inv = fan
                .generator_matrix(cone)
                .inverse_unimodular()
                .expect("validated cones are unimodular");
            FixedPoint {
                label: cone_label(cone),
                weights: (0..fan.lattice_rank).map(|i| inv.row(i).to_vec()).collect(),
            }
        })
        .collect();
    TorusModel::new(fan.name.clone(), fan.lattice_rank, fixed_points)
        .expect("fan models are well formed")
}

/// `P^n`: rays `e_1..e_n, -(e_1+...+e_n)`, all `n`-subsets as cones.
pub fn projective_space(n: usize) -> Fan {
    let mut rays: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    rays.push(vec![-1; n]);
    let cones = (0..=n).rev().map(|skip| (0..=n).filter(|&k| k != skip).collect()).collect();
    Fan::new(format!("P{n}"), n, rays, cones).expect("P^n fan is smooth and complete")
}

/// Product fan: rays `(v, 0)` and `(0, w)`, cones `sigma x tau`.
pub fn product(a: &Fan, b: &Fan) -> Fan {
    let (n, m) = (a.lattice_rank, b.lattice_rank);
    let mut rays: Vec<Vec<i64>> = a
        .rays
        .iter()
        .map(|v| v.iter().copied().chain(core::iter::repeat_n(0, m)).collect())
        .collect();
    rays.extend(
        b.rays.iter().map(|w| core::iter::repeat_n(0, n).chain(w.iter().copied()).collect()),
    );
    let offset = a.rays.len();
    let mut cones = Vec::new();
    for s in &a.max_cones {
        for t in &b.max_cones {
            cones.push(s.iter().copied().chain(t.iter().map(|i| i + offset)).collect());
        }
    }
    Fan::new(format!("{}x{}", a.name, b.name), n + m, rays, cones)
        .expect("products of smooth complete fans are smooth and complete")
}

/// Hirzebruch surface `F_a`: rays `(1,0), (0,1), (-1,a), (0,-1)`.
pub fn hirzebruch(a: i64) -> Fan {
    let rays = vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]];
    let cones = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]];
    Fan::new(format!("F{a}"), 2, rays, cones).expect("Hirzebruch fans are smooth and complete")
}

//! Parabolic quotients `W^P`, Bruhat covers and Schubert cells of `G/P`.
//!
//! A [`ParabolicSubset`] lists the simple roots of the Levi factor of `P`
//! (1-based Bourbaki node numbers), so the empty set is the Borel subgroup
//! and the full set is `G`. Cosets are left cosets `w W_P`, represented by
//! the unique `w` with `w(alpha_i) > 0` for every `i` in the subset; the
//! Schubert cell `BwP/P` then has dimension `l(w)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bbengine::{order_filtration, Cell, CellDecomposition, FixedPoint, TorusModel, WeightSign};
use crate::linalg::IntMatrix;
use crate::rootsys::{
    dominant_regular_cocharacter, enumerate_subgroup, enumerate_weyl, RootSystem, RootSystemError,
    WeylElement,
};

/// Simple roots of the Levi factor, as sorted 1-based node numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ParabolicSubset {
    nodes: Vec<usize>,
}

impl ParabolicSubset {
    pub fn new(nodes: &[usize]) -> Self {
        let mut nodes = nodes.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        ParabolicSubset { nodes }
    }

    /// `P = B`.
    pub fn borel() -> Self {
        Self::default()
    }

    /// `P = G`.
    pub fn full(rank: usize) -> Self {
        ParabolicSubset { nodes: (1..=rank).collect() }
    }

    /// The maximal parabolic obtained by deleting one node of the diagram.
    pub fn maximal(rank: usize, node: usize) -> Self {
        ParabolicSubset { nodes: (1..=rank).filter(|&i| i != node).collect() }
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn zero_based(&self) -> Vec<usize> {
        self.nodes.iter().map(|i| i - 1).collect()
    }

    pub fn validate(&self, rs: &RootSystem) -> Result<(), RootSystemError> {
        match self.nodes.iter().find(|&&i| i == 0 || i > rs.rank()) {
            Some(&index) => Err(RootSystemError::IndexOutOfRange { index, rank: rs.rank() }),
            None => Ok(()),
        }
    }

    /// Display name of `G/P`, e.g. `A3/P{1,3}`.
    pub fn quotient_name(&self, rs: &RootSystem) -> String {
        if self.nodes.is_empty() {
            return format!("{}/B", rs.name());
        }
        let list: Vec<String> = self.nodes.iter().map(|i| format!("{i}")).collect();
        format!("{}/P{{{}}}", rs.name(), list.join(","))
    }

    fn contains_root(&self, root: &[i64]) -> bool {
        root.iter().enumerate().all(|(i, &c)| c == 0 || self.nodes.contains(&(i + 1)))
    }
}

/// Positive roots of the Levi factor.
pub fn levi_positive_roots(rs: &RootSystem, p: &ParabolicSubset) -> Vec<Vec<i64>> {
    rs.positive_roots().iter().filter(|r| p.contains_root(r)).cloned().collect()
}

/// Elements of `W_P`.
pub fn parabolic_subgroup(
    rs: &RootSystem,
    p: &ParabolicSubset,
    cap: usize,
) -> Result<Vec<WeylElement>, RootSystemError> {
    p.validate(rs)?;
    enumerate_subgroup(rs, &p.zero_based(), cap)
}

/// `W^P`: the minimal length representatives, sorted by length and then
/// lexicographically by reduced word.
pub fn minimal_coset_reps(
    rs: &RootSystem,
    p: &ParabolicSubset,
    cap: usize,
) -> Result<Vec<WeylElement>, RootSystemError> {
    p.validate(rs)?;
    let levi = p.zero_based();
    let w = enumerate_weyl(rs, cap)?;
    Ok(w.into_iter()
        .filter(|w| levi.iter().all(|&i| w.action().column(i).iter().all(|&c| c >= 0)))
        .collect())
}

/// Covering relations of the Bruhat order restricted to `reps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<WeylElement>,
    /// `(u, w)` index pairs with `u` covered by `w`.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// The unique minimal node, if there is exactly one.
    pub fn bottom(&self) -> Option<usize> {
        self.unique_outside(|&(_, w)| w)
    }

    /// The unique maximal node, if there is exactly one.
    pub fn top(&self) -> Option<usize> {
        self.unique_outside(|&(u, _)| u)
    }

    fn unique_outside(&self, pick: impl Fn(&(usize, usize)) -> usize) -> Option<usize> {
        let mut hit = alloc::vec![false; self.nodes.len()];
        for e in &self.edges {
            hit[pick(e)] = true;
        }
        let mut free = (0..self.nodes.len()).filter(|&i| !hit[i]);
        match (free.next(), free.next()) {
            (Some(i), None) => Some(i),
            _ => None,
        }
    }

    /// Indices of the nodes covering `u`.
    pub fn up(&self, u: usize) -> Vec<usize> {
        self.edges.iter().filter(|e| e.0 == u).map(|e| e.1).collect()
    }
}

/// Edge `(u, w)` iff `l(w) = l(u) + 1` and `u = w t` for a reflection `t`.
/// Products leaving `reps` are dropped: their minimal representative is
/// shorter than `l(w) - 1`, so they never give a cover in the quotient.
pub fn bruhat_hasse(rs: &RootSystem, reps: &[WeylElement]) -> HasseDiagram {
    let index: BTreeMap<&IntMatrix, usize> =
        reps.iter().enumerate().map(|(i, w)| (w.action(), i)).collect();
    let reflections: Vec<(&Vec<i64>, IntMatrix)> =
        rs.positive_roots().iter().map(|b| (b, rs.reflection_matrix(b))).collect();
    let mut edges = Vec::new();
    for (j, w) in reps.iter().enumerate() {
        if w.is_identity() {
            continue;
        }
        for (beta, t) in &reflections {
            // l(w t_beta) < l(w) iff w(beta) < 0
            if w.apply(beta).iter().any(|&c| c > 0) {
                continue;
            }
            let u = w.action() * t;
            if let Some(&i) = index.get(&u) {
                if reps[i].length() + 1 == w.length() {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    HasseDiagram { nodes: reps.to_vec(), edges }
}

/// `G/P` as a torus model: fixed points `wP` for `w` in `W^P`, tangent
/// weights `w(Phi^- \ Phi^-_P)` in simple-root coordinates.
pub fn flag_torus_model(
    rs: &RootSystem,
    p: &ParabolicSubset,
    cap: usize,
) -> Result<TorusModel, RootSystemError> {
    let reps = minimal_coset_reps(rs, p, cap)?;
    Ok(flag_model_from_reps(rs, p, &reps))
}

fn flag_model_from_reps(rs: &RootSystem, p: &ParabolicSubset, reps: &[WeylElement]) -> TorusModel {
    let tangent: Vec<Vec<i64>> = rs
        .negative_roots()
        .into_iter()
        .filter(|r| !p.contains_root(r))
        .collect();
    let fixed_points = reps
        .iter()
        .map(|w| FixedPoint {
            label: w.label(),
            weights: tangent.iter().map(|b| w.apply(b)).collect(),
        })
        .collect();
    TorusModel::new(p.quotient_name(rs), rs.rank(), fixed_points)
        .expect("flag models are well formed")
}

/// Schubert cells `BwP/P`, one per `w` in `W^P`, of dimension `l(w)`. The
/// weight signs are those of the tangent weights at `wP` against the
/// dominant regular cocharacter.
pub fn schubert_cells(
    rs: &RootSystem,
    p: &ParabolicSubset,
    cap: usize,
) -> Result<CellDecomposition, RootSystemError> {
    let reps = minimal_coset_reps(rs, p, cap)?;
    let model = flag_model_from_reps(rs, p, &reps);
    let lambda = dominant_regular_cocharacter(rs);
    let cells = reps
        .iter()
        .zip(model.fixed_points())
        .enumerate()
        .map(|(index, (w, fp))| Cell {
            index,
            fixed_point: fp.label.clone(),
            dimension: w.length(),
            weight_signs: fp
                .weights
                .iter()
                .map(|u| if lambda.pair(u) > 0 { WeightSign::Plus } else { WeightSign::Minus })
                .collect(),
        })
        .collect();
    let decomposition = CellDecomposition {
        space_name: model.name().into(),
        ambient_dimension: model.dimension(),
        cells,
        cocharacter_used: lambda.0,
    };
    Ok(order_filtration(decomposition).0)
}

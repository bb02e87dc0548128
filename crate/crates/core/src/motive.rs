//! Tate motives, weight checks and homology reports derived from cells.
//!
//! A cell decomposition with isolated fixed points splits the motive into
//! Tate summands `Z(d)[2d]`, one per cell of dimension `d`. The splitting
//! rests on a weight argument: the attaching map at each step has the form
//! `Z(m)[2m-1] -> Z(n)[2n]` with `m >= n`, which vanishes.
//! [`verify_weight_monotone`] checks that inequality for a given filtration.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bbengine::{CellDecomposition, CofiberLedger, SphereSymbol, ThomSymbol};
use crate::poly::{self, Poly};
use crate::rootsys::{enumerate_weyl, RootSystem, RootSystemError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MotiveError {
    #[error("ledger step {step} has an unresolved Thom space {symbol}; read the ledger instead")]
    UnresolvedThomSpace { step: usize, symbol: String },
}

impl MotiveError {
    pub fn kind(&self) -> &'static str {
        match self {
            MotiveError::UnresolvedThomSpace { .. } => "UnresolvedThomSpace",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TateSummand {
    pub twist: usize,
    pub shift: usize,
    pub multiplicity: usize,
}

/// `M(X) = ⊕ Z(n)[2n]^{⊕ m}`, sorted by twist.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct MotivicDecomposition {
    pub summands: Vec<TateSummand>,
}

impl MotivicDecomposition {
    fn from_twists<I: IntoIterator<Item = usize>>(twists: I) -> Self {
        let mut counts = BTreeMap::new();
        for t in twists {
            *counts.entry(t).or_insert(0) += 1;
        }
        MotivicDecomposition {
            summands: counts
                .into_iter()
                .map(|(twist, multiplicity)| TateSummand { twist, shift: 2 * twist, multiplicity })
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    /// Twists with multiplicity, ascending.
    pub fn twists(&self) -> Vec<usize> {
        self.summands
            .iter()
            .flat_map(|s| core::iter::repeat_n(s.twist, s.multiplicity))
            .collect()
    }
}

impl fmt::Display for MotivicDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.summands.iter().enumerate() {
            if k > 0 {
                f.write_str(" ⊕ ")?;
            }
            if s.twist == 0 {
                f.write_str("Z")?;
            } else {
                write!(f, "Z({})[{}]", s.twist, s.shift)?;
            }
            if s.multiplicity > 1 {
                write!(f, "^{{⊕{}}}", s.multiplicity)?;
            }
        }
        Ok(())
    }
}

/// One summand `Z(d)[2d]` per cell of dimension `d`.
pub fn motivic_decomposition(cells: &CellDecomposition) -> MotivicDecomposition {
    MotivicDecomposition::from_twists(cells.cells.iter().map(|c| c.dimension))
}

/// The Tate decomposition read off a ledger, whose spheres `S^{2q,q}` give
/// summands `Z(q)[2q]`. Refuses ledgers with symbolic Thom spaces.
pub fn motivic_decomposition_from_ledger(
    ledger: &CofiberLedger,
) -> Result<MotivicDecomposition, MotiveError> {
    let mut twists = Vec::new();
    for e in &ledger.entries {
        match &e.thom_symbol {
            ThomSymbol::Wedge { spheres } => twists.extend(spheres.iter().map(|s| s.q as usize)),
            symbol @ ThomSymbol::Unresolved { .. } => {
                return Err(MotiveError::UnresolvedThomSpace {
                    step: e.step,
                    symbol: format!("{symbol}"),
                })
            }
        }
    }
    Ok(MotivicDecomposition::from_twists(twists))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Verdict {
    TrivialByWeight,
    Obstructed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WeightStep {
    pub step: usize,
    /// Weight `m` of the attaching sphere `S^{2m-1,m}`.
    pub source_weight: usize,
    /// Largest weight among the summands already built.
    pub target_max_weight: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WeightCheckReport {
    pub steps: Vec<WeightStep>,
}

impl WeightCheckReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.verdict == Verdict::TrivialByWeight)
    }

    pub fn failures(&self) -> impl Iterator<Item = &WeightStep> {
        self.steps.iter().filter(|s| s.verdict == Verdict::Obstructed)
    }
}

/// Walks the filtration in the order given, from the open cell down. At
/// step `i` the attaching sphere has weight `dim X - d_i`, and the part
/// already built, `X \ X_i`, has summands of weight `dim X - d_j`, `j > i`.
pub fn verify_weight_monotone(cells: &CellDecomposition) -> WeightCheckReport {
    let dim = cells.ambient_dimension;
    let mut steps = Vec::new();
    let mut min_above: Option<usize> = None;
    for (i, cell) in cells.cells.iter().enumerate().rev() {
        if let Some(min_dim) = min_above {
            let source_weight = dim.saturating_sub(cell.dimension);
            let target_max_weight = dim.saturating_sub(min_dim);
            steps.push(WeightStep {
                step: i,
                source_weight,
                target_max_weight,
                verdict: if source_weight >= target_max_weight {
                    Verdict::TrivialByWeight
                } else {
                    Verdict::Obstructed
                },
            });
        }
        min_above = Some(min_above.map_or(cell.dimension, |m| m.min(cell.dimension)));
    }
    WeightCheckReport { steps }
}

/// Coefficient of `t^d` is the number of cells of dimension `d`.
pub fn poincare_polynomial(cells: &CellDecomposition) -> Poly {
    poly::from_exponents(cells.cells.iter().map(|c| c.dimension))
}

/// Stated, never checked: the Hom-vanishing hypothesis of the rational
/// plus-part splitting.
pub const QPLUS_ASSUMPTION: &str =
    "assumes Hom_{SH(k)⊗Q+}(S^{2i-1,i}, S^{2j,j}) = 0 for all i > j+1 (not verified here)";

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct QPlusReport {
    pub assumption: &'static str,
    /// `(sphere, multiplicity)`, ascending.
    pub spheres: Vec<(SphereSymbol, usize)>,
    pub expression: String,
}

/// The formal wedge `∨ S^{2n,n}` over the cells, valid after
/// `Q+`-localization under [`QPLUS_ASSUMPTION`].
pub fn qplus_report(cells: &CellDecomposition) -> QPlusReport {
    let mut counts: BTreeMap<SphereSymbol, usize> = BTreeMap::new();
    for c in &cells.cells {
        *counts.entry(SphereSymbol::tate(c.dimension)).or_insert(0) += 1;
    }
    let mut parts = Vec::new();
    for c in &cells.cells {
        parts.push(format!("{}", SphereSymbol::tate(c.dimension)));
    }
    QPlusReport {
        assumption: QPLUS_ASSUMPTION,
        spheres: counts.into_iter().collect(),
        expression: format!("X ≃_Q+ {}", parts.join(" ∨ ")),
    }
}

pub const SA1_CAVEAT: &str = "free-module shape only: the attaching maps in stable A1-homology \
carry information that the comparison with H_*(X(C)) ⊗ H^{sA1}_*(k) loses, so that comparison \
is not an isomorphism statement";

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Sa1HomologyReport {
    pub caveat: &'static str,
    /// `(shift n_j, multiplicity)`: one copy of `H^{sA1}_{*+n_j}(k)` each.
    pub shifts: Vec<(usize, usize)>,
}

impl Sa1HomologyReport {
    pub fn shift_multiset(&self) -> Vec<usize> {
        self.shifts.iter().flat_map(|&(s, m)| core::iter::repeat_n(s, m)).collect()
    }
}

/// `P^1`-stable A1-homology of `X` as a free module over that of the base
/// field, one generator per cell.
pub fn sa1_homology_report(cells: &CellDecomposition) -> Sa1HomologyReport {
    let mut counts = BTreeMap::new();
    for c in &cells.cells {
        *counts.entry(c.dimension).or_insert(0) += 1;
    }
    Sa1HomologyReport { caveat: SA1_CAVEAT, shifts: counts.into_iter().collect() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GroupStratum {
    pub weyl_element: String,
    pub affine_dimension: usize,
}

/// Strata `A^{l(w)} x B` of `G`, pulled back from the Schubert cells of
/// `G/B`. Cellularity only; no splitting of `G` is claimed.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GroupStrata {
    pub group: String,
    pub dim_b: usize,
    pub dim_g: usize,
    pub strata: Vec<GroupStratum>,
}

pub fn group_strata(rs: &RootSystem, cap: usize) -> Result<GroupStrata, RootSystemError> {
    let positive = rs.positive_roots().len();
    let strata = enumerate_weyl(rs, cap)?
        .iter()
        .map(|w| GroupStratum { weyl_element: w.label(), affine_dimension: w.length() })
        .collect();
    Ok(GroupStrata {
        group: rs.name().into(),
        dim_b: positive + rs.rank(),
        dim_g: 2 * positive + rs.rank(),
        strata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bbengine::{cofiber_ledger, Cell};
    use crate::quadric::{quadric_fixed_locus_ledger, quadric_paper_ledger, QuadricSpec};
    use crate::rootsys::{build_root_system, Family, RootSystemSpec, DEFAULT_WEYL_CAP};
    use alloc::string::ToString;
    use alloc::vec;

    fn cells(dims: &[usize], ambient: usize) -> CellDecomposition {
        CellDecomposition {
            space_name: "X".into(),
            ambient_dimension: ambient,
            cells: dims
                .iter()
                .enumerate()
                .map(|(i, &d)| Cell { index: i, fixed_point: i.to_string(), dimension: d, weight_signs: vec![] })
                .collect(),
            cocharacter_used: vec![],
        }
    }

    #[test]
    fn decompositions() {
        assert_eq!(motivic_decomposition(&cells(&[0], 0)).to_string(), "Z");
        assert_eq!(motivic_decomposition(&cells(&[0, 1, 2], 2)).to_string(), "Z ⊕ Z(1)[2] ⊕ Z(2)[4]");
        let q4 = motivic_decomposition(&cells(&[0, 1, 2, 2, 3, 4], 4));
        assert_eq!(q4.to_string(), "Z ⊕ Z(1)[2] ⊕ Z(2)[4]^{⊕2} ⊕ Z(3)[6] ⊕ Z(4)[8]");
        assert_eq!(q4.rank(), 6);
        assert!(q4.summands.iter().all(|s| s.shift == 2 * s.twist));
    }

    #[test]
    fn ledger_route_refuses_symbolic_entries() {
        let q = QuadricSpec::new(2).unwrap();
        let m = motivic_decomposition_from_ledger(&quadric_paper_ledger(q)).unwrap();
        assert_eq!(m.twists(), vec![0, 1, 2, 2, 3, 4]);
        let e = motivic_decomposition_from_ledger(&quadric_fixed_locus_ledger(q)).unwrap_err();
        assert_eq!(e.kind(), "UnresolvedThomSpace");
        let c = cells(&[0, 1, 2], 2);
        assert_eq!(motivic_decomposition_from_ledger(&cofiber_ledger(&c)).unwrap(), motivic_decomposition(&c));
    }

    #[test]
    fn weight_checks() {
        let r = verify_weight_monotone(&cells(&[0], 0));
        assert!(r.steps.is_empty());
        assert!(r.passed());

        let r = verify_weight_monotone(&cells(&[0, 1, 2, 3], 3));
        assert_eq!(r.steps.len(), 3);
        assert!(r.passed());

        let r = verify_weight_monotone(&cells(&[3, 2, 1, 0], 3));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 3);

        // equal dimensions are fine (m = n)
        assert!(verify_weight_monotone(&cells(&[0, 1, 2, 2, 3, 4], 4)).passed());
    }

    #[test]
    fn poincare() {
        assert_eq!(poincare_polynomial(&cells(&[0], 0)), vec![1]);
        assert_eq!(poincare_polynomial(&cells(&[0, 1, 2, 2, 3, 4], 4)), vec![1, 1, 2, 1, 1]);
    }

    #[test]
    fn reports() {
        let r = qplus_report(&cells(&[0], 0));
        assert_eq!(r.expression, "X ≃_Q+ S^{0,0}");
        assert!(r.assumption.contains("not verified"));
        let r = qplus_report(&cells(&[0, 1], 1));
        assert_eq!(r.expression, "X ≃_Q+ S^{0,0} ∨ S^{2,1}");

        let h = sa1_homology_report(&cells(&[0, 1, 2], 2));
        assert_eq!(h.shift_multiset(), vec![0, 1, 2]);
        assert!(!h.caveat.is_empty());
    }

    #[test]
    fn strata() {
        let a1 = build_root_system(RootSystemSpec::new(Family::A, 1).unwrap());
        let g = group_strata(&a1, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!((g.strata.len(), g.dim_b, g.dim_g), (2, 2, 3));
        let a2 = build_root_system(RootSystemSpec::new(Family::A, 2).unwrap());
        let g = group_strata(&a2, DEFAULT_WEYL_CAP).unwrap();
        let dims: Vec<usize> = g.strata.iter().map(|s| s.affine_dimension).collect();
        assert_eq!(dims, vec![0, 1, 1, 2, 2, 3]);
        assert_eq!(g.dim_b, 5);
    }
}

//! The Białynicki-Birula engine.
//!
//! Input is a [`TorusModel`]: a finite list of torus-fixed points, each
//! with the integer weights of the torus on its tangent space. A generic
//! cocharacter `lambda` picks a one-parameter subgroup with the same fixed
//! points; the cell flowing into a fixed point as `t -> 0` has dimension
//! equal to the number of tangent weights `u` with `<u, lambda> > 0`.
//!
//! Cells are numbered by ascending dimension (ties by label), which gives
//! the closed filtration `X_0 ⊂ X_1 ⊂ ... ⊂ X_{n-1} = X` with `X_i` the
//! union of cells `0..=i`. The cofiber ledger reads it through open
//! complements: removing cell `i` from `X \ X_{i-1}` leaves `X \ X_i`, and
//! the cofiber is the Thom space of a trivial bundle over a point, i.e. the
//! sphere `S^{2c,c}` with `c` the codimension of the cell.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::dot;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BbError {
    #[error("invalid torus model: {0}")]
    InvalidModel(String),
    #[error("no generic cocharacter with coordinates up to {bound}")]
    NoGenericFound { bound: i64 },
    #[error("cocharacter pairs to zero with tangent weight {weight:?} at fixed point {fixed_point}")]
    NonGenericCocharacter { fixed_point: String, weight: Vec<i64> },
    #[error("cocharacter has {got} coordinates, torus has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
}

impl BbError {
    pub fn kind(&self) -> &'static str {
        match self {
            BbError::InvalidModel(_) => "InvalidModel",
            BbError::NoGenericFound { .. } => "NoGenericFound",
            BbError::NonGenericCocharacter { .. } => "NonGenericCocharacter",
            BbError::RankMismatch { .. } => "RankMismatch",
        }
    }
}

/// A torus-fixed point and its tangent weights (with multiplicity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    pub label: String,
    pub weights: Vec<Vec<i64>>,
}

/// Fixed points and tangent weights of a torus acting on a smooth
/// projective variety with isolated fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusModel {
    name: String,
    torus_rank: usize,
    dimension: usize,
    fixed_points: Vec<FixedPoint>,
}

impl TorusModel {
    pub fn new(
        name: impl Into<String>,
        torus_rank: usize,
        fixed_points: Vec<FixedPoint>,
    ) -> Result<Self, BbError> {
        let bad = |m: String| Err(BbError::InvalidModel(m));
        let Some(first) = fixed_points.first() else {
            return bad("no fixed points".into());
        };
        let dimension = first.weights.len();
        let mut labels: Vec<&str> = Vec::with_capacity(fixed_points.len());
        for p in &fixed_points {
            if p.weights.len() != dimension {
                return bad(format!(
                    "fixed point {} has {} tangent weights, expected {dimension}",
                    p.label,
                    p.weights.len()
                ));
            }
            if let Some(w) = p.weights.iter().find(|w| w.len() != torus_rank) {
                return bad(format!("weight {w:?} at {} is not of length {torus_rank}", p.label));
            }
            labels.push(&p.label);
        }
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return bad("duplicate fixed-point labels".into());
        }
        Ok(TorusModel { name: name.into(), torus_rank, dimension, fixed_points })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    /// Dimension of the variety, i.e. the number of tangent weights per point.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn fixed_points(&self) -> &[FixedPoint] {
        &self.fixed_points
    }

    pub fn tangent_weights(&self, label: &str) -> Option<&[Vec<i64>]> {
        self.fixed_points.iter().find(|p| p.label == label).map(|p| p.weights.as_slice())
    }

    /// The first tangent weight pairing to zero with `lambda`, if any.
    pub fn find_zero_pairing(&self, lambda: &[i64]) -> Option<(&FixedPoint, &[i64])> {
        self.fixed_points.iter().find_map(|p| {
            p.weights.iter().find(|w| dot(w, lambda) == 0).map(|w| (p, w.as_slice()))
        })
    }

    pub fn is_generic(&self, lambda: &[i64]) -> bool {
        lambda.len() == self.torus_rank && self.find_zero_pairing(lambda).is_none()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightSign {
    Plus,
    Minus,
}

impl WeightSign {
    pub fn as_char(self) -> char {
        match self {
            WeightSign::Plus => '+',
            WeightSign::Minus => '-',
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for WeightSign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_char(self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Cell {
    pub index: usize,
    pub fixed_point: String,
    pub dimension: usize,
    pub weight_signs: Vec<WeightSign>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CellDecomposition {
    pub space_name: String,
    pub ambient_dimension: usize,
    pub cells: Vec<Cell>,
    pub cocharacter_used: Vec<i64>,
}

impl CellDecomposition {
    pub fn dimensions(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.dimension).collect()
    }

    /// Cell dimensions in ascending order.
    pub fn dimension_multiset(&self) -> Vec<usize> {
        let mut d = self.dimensions();
        d.sort_unstable();
        d
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_ordered(&self) -> bool {
        self.cells.iter().enumerate().all(|(i, c)| c.index == i)
            && self
                .cells
                .windows(2)
                .all(|w| (w[0].dimension, &w[0].fixed_point) <= (w[1].dimension, &w[1].fixed_point))
    }
}

/// Deterministic search for a cocharacter pairing nonzero with every
/// tangent weight. Tries the moment-curve points `(1, B, B^2, ...)` for
/// `B = 2, 3, ...`, then their sign variants, keeping every coordinate at
/// most `bound` in absolute value.
pub fn generic_cocharacter(model: &TorusModel, bound: i64) -> Result<Vec<i64>, BbError> {
    let r = model.torus_rank;
    // a zero weight pairs to zero with everything
    if model.fixed_points.iter().any(|p| p.weights.iter().any(|w| w.iter().all(|&c| c == 0))) {
        return Err(BbError::NoGenericFound { bound });
    }
    if r == 0 {
        return if model.dimension == 0 { Ok(Vec::new()) } else { Err(BbError::NoGenericFound { bound }) };
    }
    let curve = |b: i64| -> Option<Vec<i64>> {
        let mut v = Vec::with_capacity(r);
        let mut x: i64 = 1;
        for k in 0..r {
            if k > 0 {
                x = x.checked_mul(b)?;
            }
            if x > bound {
                return None;
            }
            v.push(x);
        }
        Some(v)
    };
    let bases = || (2..).map_while(&curve);
    if r == 1 {
        // every nonzero lambda is generic
        return if 1 <= bound { Ok(vec![1]) } else { Err(BbError::NoGenericFound { bound }) };
    }
    if let Some(l) = bases().find(|l| model.is_generic(l)) {
        return Ok(l);
    }
    for l in bases() {
        for mask in 1u32..(1 << r.min(31)) {
            let v: Vec<i64> =
                l.iter().enumerate().map(|(k, &x)| if mask >> k & 1 == 1 { -x } else { x }).collect();
            if model.is_generic(&v) {
                return Ok(v);
            }
        }
    }
    Err(BbError::NoGenericFound { bound })
}

/// One cell per fixed point, of dimension `#{u : <u, lambda> > 0}`, ordered
/// by [`order_filtration`].
pub fn bb_cells(model: &TorusModel, lambda: &[i64]) -> Result<CellDecomposition, BbError> {
    if lambda.len() != model.torus_rank {
        return Err(BbError::RankMismatch { expected: model.torus_rank, got: lambda.len() });
    }
    let mut cells = Vec::with_capacity(model.fixed_points.len());
    for (index, p) in model.fixed_points.iter().enumerate() {
        let mut weight_signs = Vec::with_capacity(p.weights.len());
        for w in &p.weights {
            let s = dot(w, lambda);
            if s == 0 {
                return Err(BbError::NonGenericCocharacter {
                    fixed_point: p.label.clone(),
                    weight: w.clone(),
                });
            }
            weight_signs.push(if s > 0 { WeightSign::Plus } else { WeightSign::Minus });
        }
        let dimension = weight_signs.iter().filter(|s| **s == WeightSign::Plus).count();
        cells.push(Cell { index, fixed_point: p.label.clone(), dimension, weight_signs });
    }
    let raw = CellDecomposition {
        space_name: model.name.clone(),
        ambient_dimension: model.dimension,
        cells,
        cocharacter_used: lambda.to_vec(),
    };
    Ok(order_filtration(raw).0)
}

/// Sorts cells by `(dimension, label)` and renumbers them `0..n`. The second
/// component maps each new index to the index the cell had on input.
pub fn order_filtration(mut cells: CellDecomposition) -> (CellDecomposition, Vec<usize>) {
    cells
        .cells
        .sort_by(|a, b| (a.dimension, &a.fixed_point, a.index).cmp(&(b.dimension, &b.fixed_point, b.index)));
    let remap = cells.cells.iter().map(|c| c.index).collect();
    for (i, c) in cells.cells.iter_mut().enumerate() {
        c.index = i;
    }
    (cells, remap)
}

/// The motivic sphere `S^{p,q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SphereSymbol {
    pub p: i64,
    pub q: i64,
}

impl SphereSymbol {
    /// `S^{2d,d}`, the Thom space of a rank `d` trivial bundle over a point.
    pub fn tate(d: usize) -> Self {
        SphereSymbol { p: 2 * d as i64, q: d as i64 }
    }

    /// The weight `q` of a sphere `S^{2q,q}`.
    pub fn weight(&self) -> i64 {
        self.q
    }
}

impl fmt::Display for SphereSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{{{},{}}}", self.p, self.q)
    }
}

/// Cofiber of one filtration step.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum ThomSymbol {
    /// A wedge of spheres (normal bundle trivial over each cell).
    Wedge { spheres: Vec<SphereSymbol> },
    /// `Th(N over Z)` for a positive-dimensional fixed component `Z`.
    Unresolved { normal_rank: usize, base: String },
}

impl fmt::Display for ThomSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThomSymbol::Wedge { spheres } => {
                for (k, s) in spheres.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ∨ ")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            ThomSymbol::Unresolved { normal_rank, base } => {
                write!(f, "Th(N over {base}, rank {normal_rank})")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum EntryKind {
    /// The open stratum itself, contractible onto its fixed component.
    Base,
    /// A homotopy cofiber sequence `before -> after -> thom`.
    Cofiber,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LedgerEntry {
    pub step: usize,
    pub kind: EntryKind,
    pub open_complement_before: String,
    pub open_complement_after: String,
    pub thom_symbol: ThomSymbol,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub note: Option<String>,
}

impl fmt::Display for LedgerEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            EntryKind::Base => write!(
                f,
                "base    {:>2}: {} ≃ {}",
                self.step, self.open_complement_after, self.thom_symbol
            )?,
            EntryKind::Cofiber => write!(
                f,
                "cofiber {:>2}: {} → {} → {}",
                self.step, self.open_complement_before, self.open_complement_after, self.thom_symbol
            )?,
        }
        if let Some(n) = &self.note {
            write!(f, "   [{n}]")?;
        }
        Ok(())
    }
}

/// Stable cell structure: entries in attachment order, starting from the
/// open stratum.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CofiberLedger {
    pub space_name: String,
    pub ambient_dimension: usize,
    pub entries: Vec<LedgerEntry>,
}

impl CofiberLedger {
    pub fn is_resolved(&self) -> bool {
        self.entries.iter().all(|e| matches!(e.thom_symbol, ThomSymbol::Wedge { .. }))
    }

    /// All spheres in the ledger, sorted; `None` if some entry is unresolved.
    pub fn sphere_multiset(&self) -> Option<Vec<SphereSymbol>> {
        let mut out = Vec::new();
        for e in &self.entries {
            match &e.thom_symbol {
                ThomSymbol::Wedge { spheres } => out.extend_from_slice(spheres),
                ThomSymbol::Unresolved { .. } => return None,
            }
        }
        out.sort_unstable();
        Some(out)
    }

    pub fn cofiber_count(&self) -> usize {
        self.entries.iter().filter(|e| e.kind == EntryKind::Cofiber).count()
    }
}

/// The ledger of an ordered cell decomposition. Entry for cell `i`:
/// `X \ X_i -> X \ X_{i-1} -> S^{2c,c}` with `c = dim X - dim(cell i)`;
/// the top cell is the base `X \ X_{n-2} ≃ A^{dim X}`.
pub fn cofiber_ledger(cells: &CellDecomposition) -> CofiberLedger {
    let n = cells.cells.len();
    let dim = cells.ambient_dimension;
    let complement = |i: isize| -> String {
        if i < 0 {
            "X".into()
        } else if i as usize + 1 >= n {
            "∅".into()
        } else {
            format!("X \\ X_{i}")
        }
    };
    let mut entries = Vec::with_capacity(n);
    for (step, cell) in cells.cells.iter().enumerate().rev() {
        let codim = dim.saturating_sub(cell.dimension);
        let kind = if step + 1 == n { EntryKind::Base } else { EntryKind::Cofiber };
        entries.push(LedgerEntry {
            step,
            kind,
            open_complement_before: complement(step as isize),
            open_complement_after: complement(step as isize - 1),
            thom_symbol: ThomSymbol::Wedge { spheres: vec![SphereSymbol::tate(codim)] },
            note: Some(format!("cell A^{} at {}", cell.dimension, cell.fixed_point)),
        });
    }
    CofiberLedger { space_name: cells.space_name.clone(), ambient_dimension: dim, entries }
}

//! The split quadric `Q_2n = V(x_0 y_0 + ... + x_n y_n)` in `P^{2n+1}`.
//!
//! The diagonal torus `T = G_m^{n+1}` acts by `t.x_i = t_i x_i` and
//! `t.y_i = t_i^{-1} y_i`, preserving the form. Its fixed points are the
//! `2n + 2` coordinate points `X_i`, `Y_i`. At a coordinate point with
//! nonzero coordinate `z`, the chart `z = 1` has local coordinates `u/z`
//! for every coordinate `u` except `z` and its partner (solved for from the
//! form), with weight `wt(u) - wt(z)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bbengine::{
    CofiberLedger, EntryKind, FixedPoint, LedgerEntry, SphereSymbol, ThomSymbol, TorusModel,
};
use crate::linalg::IntMatrix;
use crate::parabolic::ParabolicSubset;
use crate::poly::Poly;
use crate::rootsys::{build_root_system, Family, RootSystem, RootSystemSpec};

/// `n >= 1`; the quadric has dimension `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadricSpec {
    n: usize,
}

impl QuadricSpec {
    pub fn new(n: usize) -> Option<Self> {
        (n >= 1).then_some(QuadricSpec { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        2 * self.n
    }

    pub fn name(&self) -> String {
        format!("Q{}", 2 * self.n)
    }
}

#[derive(Clone, Copy)]
enum Coord {
    X(usize),
    Y(usize),
}

impl Coord {
    fn weight(self, rank: usize) -> Vec<i64> {
        let mut w = vec![0; rank];
        match self {
            Coord::X(i) => w[i] = 1,
            Coord::Y(i) => w[i] = -1,
        }
        w
    }

    fn partner(self) -> Coord {
        match self {
            Coord::X(i) => Coord::Y(i),
            Coord::Y(i) => Coord::X(i),
        }
    }

    fn same(self, other: Coord) -> bool {
        matches!((self, other), (Coord::X(a), Coord::X(b)) | (Coord::Y(a), Coord::Y(b)) if a == b)
    }

    fn label(self) -> String {
        match self {
            Coord::X(i) => format!("X{i}"),
            Coord::Y(i) => format!("Y{i}"),
        }
    }
}

pub fn quadric_torus_model(spec: QuadricSpec) -> TorusModel {
    let rank = spec.n + 1;
    let coords: Vec<Coord> =
        (0..rank).map(Coord::X).chain((0..rank).map(Coord::Y)).collect();
    let fixed_points = coords
        .iter()
        .map(|&z| {
            let wz = z.weight(rank);
            let weights = coords
                .iter()
                .filter(|&&u| !u.same(z) && !u.same(z.partner()))
                .map(|u| u.weight(rank).iter().zip(&wz).map(|(a, b)| a - b).collect())
                .collect();
            FixedPoint { label: z.label(), weights }
        })
        .collect();
    TorusModel::new(spec.name(), rank, fixed_points).expect("quadric model is well formed")
}

/// The one-parameter action scaling all `x_i` by `t`, as a cocharacter of
/// the diagonal torus (up to the square root, it is `(1, ..., 1)`). It is
/// not generic: its fixed loci are the two `P^n`'s `Z_x = {x = 0}` and
/// `Z_y = {y = 0}`.
pub fn scaling_cocharacter(spec: QuadricSpec) -> Vec<i64> {
    vec![1; spec.n + 1]
}

/// Two-stage ledger: `Q_2n \ Z_x` is a rank `n` bundle over `Z_y ≅ P^n`, so
/// it carries the cells of `P^n`; the filtration `P^0 ⊂ ... ⊂ P^n = Z_x`
/// then attaches one cell `S^{2(2n-k),2n-k}` per `k = n, ..., 0` through
/// the charts `V_k = {x_k != 0} ≅ A^{2n}`.
pub fn quadric_paper_ledger(spec: QuadricSpec) -> CofiberLedger {
    let n = spec.n;
    let q = spec.name();
    let mut entries = Vec::with_capacity(2 * n + 2);
    let proj = |k: isize| -> String {
        match k {
            -1 => "∅".into(),
            0 => "pt".into(),
            _ => format!("P^{k}"),
        }
    };
    let minus = |space: &str, k: isize| -> String {
        if k < 0 {
            space.into()
        } else {
            format!("{space} \\ {}", proj(k))
        }
    };
    let pn = format!("P^{n}");

    entries.push(LedgerEntry {
        step: 0,
        kind: EntryKind::Base,
        open_complement_before: "∅".into(),
        open_complement_after: minus(&pn, n as isize - 1),
        thom_symbol: ThomSymbol::Wedge { spheres: vec![SphereSymbol::tate(0)] },
        note: Some(format!("{q} \\ Z_x → Z_y ≅ P^{n} is a rank {n} vector bundle")),
    });
    for k in (0..n as isize).rev() {
        entries.push(LedgerEntry {
            step: entries.len(),
            kind: EntryKind::Cofiber,
            open_complement_before: minus(&pn, k),
            open_complement_after: minus(&pn, k - 1),
            thom_symbol: ThomSymbol::Wedge { spheres: vec![SphereSymbol::tate(n - k as usize)] },
            note: Some(format!("usual cell of P^{n}")),
        });
    }
    for k in (0..=n as isize).rev() {
        let codim = 2 * n - k as usize;
        let before = if k == n as isize { format!("{q} \\ Z_x") } else { minus(&q, k) };
        entries.push(LedgerEntry {
            step: entries.len(),
            kind: EntryKind::Cofiber,
            open_complement_before: before,
            open_complement_after: minus(&q, k - 1),
            thom_symbol: ThomSymbol::Wedge { spheres: vec![SphereSymbol::tate(codim)] },
            note: Some(format!("fiber A^{codim} \\ {{0}} ≃ A^{} \\ A^{k} in V_{k}", 2 * n)),
        });
    }
    CofiberLedger { space_name: q, ambient_dimension: 2 * n, entries }
}

/// Ledger of the scaling action itself, whose fixed loci are not isolated:
/// the open stratum retracts onto `Z_y ≅ P^n` and `Z_x` enters through the
/// Thom space of its rank `n` normal bundle, which is left symbolic.
pub fn quadric_fixed_locus_ledger(spec: QuadricSpec) -> CofiberLedger {
    let n = spec.n;
    let q = spec.name();
    let entries = vec![
        LedgerEntry {
            step: 0,
            kind: EntryKind::Base,
            open_complement_before: "∅".into(),
            open_complement_after: format!("{q} \\ Z_x"),
            thom_symbol: ThomSymbol::Unresolved { normal_rank: 0, base: format!("Z_y ≅ P^{n}") },
            note: Some(format!("rank {n} vector bundle over Z_y")),
        },
        LedgerEntry {
            step: 1,
            kind: EntryKind::Cofiber,
            open_complement_before: format!("{q} \\ Z_x"),
            open_complement_after: q.clone(),
            thom_symbol: ThomSymbol::Unresolved { normal_rank: n, base: format!("Z_x ≅ P^{n}") },
            note: None,
        },
    ];
    CofiberLedger { space_name: q, ambient_dimension: 2 * n, entries }
}

/// `1 + t + ... + t^(n-1) + 2 t^n + t^(n+1) + ... + t^(2n)`.
pub fn quadric_poincare(spec: QuadricSpec) -> Poly {
    let mut p = vec![1; 2 * spec.n + 1];
    p[spec.n] = 2;
    p
}

/// `(root system, Levi nodes)` with `G/P ≅ Q_2n`: type `D_{n+1}` with the
/// node at the end of the long arm removed (Bourbaki node 1; for `n = 2`
/// this is the middle node of `D_3 = A_3`, giving `Gr(2,4)`). For `n = 1`
/// the group is `D_2 = A_1 x A_1`, built from its Cartan matrix, and
/// `P = B` since both simple roots involve the first coordinate.
pub fn quadric_flag_data(spec: QuadricSpec) -> (RootSystem, ParabolicSubset) {
    let n = spec.n;
    if n == 1 {
        let cartan = IntMatrix::from_rows(&[[2, 0], [0, 2]]);
        let rs = RootSystem::from_cartan_matrix("D2", cartan).expect("A1xA1 is of finite type");
        (rs, ParabolicSubset::borel())
    } else {
        let rs = build_root_system(RootSystemSpec::new(Family::D, n + 1).expect("n + 1 >= 3"));
        (rs, ParabolicSubset::maximal(n + 1, 1))
    }
}

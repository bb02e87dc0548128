//! Cell structures of smooth projective varieties with torus actions.
//!
//! The crate computes Białynicki-Birula cell decompositions from integer
//! tangent-weight data and turns them into stable cofiber ledgers, Tate
//! motive decompositions and Poincaré polynomials. Three families of
//! varieties come with built-in torus models:
//!
//! * partial flag varieties `G/P` for split groups of types A–G
//!   ([`rootsys`], [`parabolic`]),
//! * smooth complete toric varieties given by a fan ([`toric`]),
//! * split even-dimensional quadrics `Q_2n` ([`quadric`]).
//!
//! Everything is exact integer arithmetic. The crate is `no_std` and only
//! needs `alloc`; IO, file formats and the command line live in the
//! companion `motcell` crate.

#![no_std]

extern crate alloc;

pub mod bbengine;
pub mod linalg;
pub mod motive;
pub mod parabolic;
pub mod poly;
pub mod quadric;
pub mod rootsys;
pub mod toric;

pub use bbengine::{
    bb_cells, cofiber_ledger, generic_cocharacter, order_filtration, BbError, Cell,
    CellDecomposition, CofiberLedger, FixedPoint, LedgerEntry, SphereSymbol, ThomSymbol,
    TorusModel, WeightSign,
};
pub use motive::{
    group_strata, motivic_decomposition, poincare_polynomial, qplus_report, sa1_homology_report,
    verify_weight_monotone, MotivicDecomposition, WeightCheckReport,
};
pub use parabolic::{bruhat_hasse, minimal_coset_reps, schubert_cells, HasseDiagram, ParabolicSubset};
pub use quadric::{quadric_paper_ledger, quadric_torus_model, QuadricSpec};
pub use rootsys::{
    build_root_system, enumerate_weyl, Cocharacter, Family, RootSystem, RootSystemError,
    RootSystemSpec, WeylElement, DEFAULT_WEYL_CAP,
};
pub use toric::{h_vector, toric_torus_model, Fan, FanError};

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Bb(#[from] BbError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Motive(#[from] motive::MotiveError),
}

impl Error {
    /// Short machine-readable kind, stable across releases.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RootSystem(e) => e.kind(),
            Error::Bb(e) => e.kind(),
            Error::Fan(e) => e.kind(),
            Error::Motive(e) => e.kind(),
        }
    }
}

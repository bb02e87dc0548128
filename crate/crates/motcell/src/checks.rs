//! Cross-oracle suites run by `motcell check`.

use std::fmt;
use std::str::FromStr;

use motcell_core::parabolic::flag_torus_model;
use motcell_core::quadric::{quadric_flag_data, quadric_poincare};
use motcell_core::toric::{hirzebruch, product, projective_space};
use motcell_core::{
    bb_cells, build_root_system, enumerate_weyl, generic_cocharacter, h_vector, order_filtration, poincare_polynomial, quadric_paper_ledger, quadric_torus_model,
    schubert_cells, toric_torus_model, verify_weight_monotone, CellDecomposition, Family,
    ParabolicSubset, QuadricSpec, RootSystemSpec, TorusModel,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const SEEDS_PER_MODEL: u64 = 20;
const GENERIC_BOUND: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    WeylProduct,
    ToricH,
    QuadricTriple,
    LambdaIndependence,
    WeightMonotone,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] =
        ["weyl-product", "toric-h", "quadric-triple", "lambda-independence", "weight-monotone", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::WeylProduct => "weyl-product",
            Suite::ToricH => "toric-h",
            Suite::QuadricTriple => "quadric-triple",
            Suite::LambdaIndependence => "lambda-independence",
            Suite::WeightMonotone => "weight-monotone",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "weyl-product" => Suite::WeylProduct,
            "toric-h" => Suite::ToricH,
            "quadric-triple" => Suite::QuadricTriple,
            "lambda-independence" => Suite::LambdaIndependence,
            "weight-monotone" => Suite::WeightMonotone,
            "all" => Suite::All,
            _ => return Err(s.to_string()),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub suite: &'static str,
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            out.push_str(&format!(
                "{} {:<20} {:<22} {}\n",
                if c.passed { "PASS" } else { "FAIL" },
                c.suite,
                c.case,
                c.detail
            ));
        }
        let failed = self.cases.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{}: {} cases, {} failed\n",
            self.suite,
            self.cases.len(),
            failed
        ));
        out
    }
}

pub fn run_suite(suite: Suite, cap: usize) -> SuiteReport {
    let cases = match suite {
        Suite::WeylProduct => weyl_product(cap),
        Suite::ToricH => toric_h(),
        Suite::QuadricTriple => quadric_triple(cap),
        Suite::LambdaIndependence => lambda_independence(cap),
        Suite::WeightMonotone => weight_monotone(cap),
        Suite::All => {
            let mut all = weyl_product(cap);
            all.extend(toric_h());
            all.extend(quadric_triple(cap));
            all.extend(lambda_independence(cap));
            all.extend(weight_monotone(cap));
            all
        }
    };
    SuiteReport { suite: suite.name().into(), passed: cases.iter().all(|c| c.passed), cases }
}

fn case(suite: &'static str, case: impl Into<String>, passed: bool, detail: String) -> CaseResult {
    CaseResult { suite, case: case.into(), passed, detail }
}

pub const WEYL_CORPUS: &[(Family, usize)] = &[
    (Family::A, 1),
    (Family::A, 2),
    (Family::A, 3),
    (Family::A, 4),
    (Family::B, 2),
    (Family::B, 3),
    (Family::B, 4),
    (Family::C, 3),
    (Family::D, 3),
    (Family::D, 4),
    (Family::G, 2),
    (Family::F, 4),
    (Family::E, 6),
];

fn weyl_product(cap: usize) -> Vec<CaseResult> {
    WEYL_CORPUS
        .iter()
        .map(|&(f, n)| {
            let rs = build_root_system(RootSystemSpec::new(f, n).expect("corpus specs are valid"));
            let expected = rs.weyl_poincare_from_degrees().expect("classified types have degrees");
            match enumerate_weyl(&rs, cap) {
                Ok(w) => {
                    let got = motcell_core::poly::from_exponents(w.iter().map(|x| x.length()));
                    case(
                        "weyl-product",
                        rs.name(),
                        got == expected,
                        format!("|W| = {}, {:?}", w.len(), got),
                    )
                }
                Err(e) => case("weyl-product", rs.name(), false, e.to_string()),
            }
        })
        .collect()
}

/// `P^1..P^6`, `P^1 x P^1`, `P^2 x P^1`, `F_0..F_3`.
pub fn toric_corpus() -> Vec<motcell_core::Fan> {
    let mut fans: Vec<_> = (1..=6).map(projective_space).collect();
    fans.push(product(&projective_space(1), &projective_space(1)));
    fans.push(product(&projective_space(2), &projective_space(1)));
    fans.extend((0..=3).map(hirzebruch));
    fans
}

fn toric_h() -> Vec<CaseResult> {
    let mut out = Vec::new();
    for fan in toric_corpus() {
        let h = h_vector(&fan);
        let model = toric_torus_model(&fan);
        let mut ok = true;
        let mut detail = format!("h = {h:?}");
        for seed in 0..SEEDS_PER_MODEL {
            let lambda = random_generic_cocharacter(&model, seed);
            match bb_cells(&model, &lambda) {
                Ok(c) if poincare_polynomial(&c) == h && c.len() == fan.max_cones().len() => {}
                Ok(c) => {
                    ok = false;
                    detail = format!("seed {seed}: cells {:?} vs h {h:?}", poincare_polynomial(&c));
                    break;
                }
                Err(e) => {
                    ok = false;
                    detail = format!("seed {seed}: {e}");
                    break;
                }
            }
        }
        out.push(case("toric-h", fan.name(), ok, detail));
    }
    out
}

fn quadric_triple(cap: usize) -> Vec<CaseResult> {
    (1..=5)
        .map(|n| {
            let spec = QuadricSpec::new(n).expect("n >= 1");
            let model = quadric_torus_model(spec);
            let coordinate = generic_cocharacter(&model, GENERIC_BOUND)
                .and_then(|l| bb_cells(&model, &l))
                .map(|c| c.dimension_multiset());
            let ledger: Option<Vec<usize>> = quadric_paper_ledger(spec)
                .sphere_multiset()
                .map(|s| s.iter().map(|x| x.q as usize).collect());
            let (rs, p) = quadric_flag_data(spec);
            let flag = schubert_cells(&rs, &p, cap).map(|c| c.dimension_multiset());
            match (coordinate, ledger, flag) {
                (Ok(a), Some(b), Ok(c)) => {
                    let closed = motcell_core::poly::from_exponents(a.iter().copied());
                    let ok = a == b && b == c && a.len() == 2 * n + 2 && closed == quadric_poincare(spec);
                    case("quadric-triple", spec.name(), ok, format!("{a:?} / {b:?} / {c:?}"))
                }
                (a, b, c) => case(
                    "quadric-triple",
                    spec.name(),
                    false,
                    format!("{:?} / {:?} / {:?}", a.err(), b, c.err()),
                ),
            }
        })
        .collect()
}

/// Flag varieties, toric varieties and quadrics used by the randomized suites.
pub fn model_corpus(cap: usize) -> Vec<TorusModel> {
    let mut models = Vec::new();
    let flags: &[(Family, usize, &[usize])] = &[
        (Family::A, 2, &[]),
        (Family::A, 3, &[]),
        (Family::A, 3, &[1, 3]),
        (Family::B, 2, &[]),
        (Family::B, 3, &[2, 3]),
        (Family::C, 3, &[1]),
        (Family::D, 4, &[2, 3, 4]),
        (Family::G, 2, &[]),
    ];
    for &(f, n, levi) in flags {
        let rs = build_root_system(RootSystemSpec::new(f, n).expect("corpus specs are valid"));
        if let Ok(m) = flag_torus_model(&rs, &ParabolicSubset::new(levi), cap) {
            models.push(m);
        }
    }
    for fan in [
        projective_space(2),
        product(&projective_space(1), &projective_space(1)),
        product(&projective_space(2), &projective_space(1)),
        hirzebruch(1),
        hirzebruch(3),
    ] {
        models.push(toric_torus_model(&fan));
    }
    for n in 1..=3 {
        models.push(quadric_torus_model(QuadricSpec::new(n).expect("n >= 1")));
    }
    models
}

/// A generic cocharacter with coordinates in `[-1000, 1000]`, drawn from a
/// ChaCha stream seeded by `seed`.
pub fn random_generic_cocharacter(model: &TorusModel, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let lambda: Vec<i64> = (0..model.torus_rank()).map(|_| rng.gen_range(-1000..=1000)).collect();
        if model.is_generic(&lambda) {
            return lambda;
        }
    }
}

fn lambda_independence(cap: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for model in model_corpus(cap) {
        let dim = model.dimension();
        let mut reference: Option<Vec<usize>> = None;
        let mut failure = None;
        for seed in 0..SEEDS_PER_MODEL {
            let lambda = random_generic_cocharacter(&model, seed);
            let neg: Vec<i64> = lambda.iter().map(|x| -x).collect();
            let (Ok(c), Ok(d)) = (bb_cells(&model, &lambda), bb_cells(&model, &neg)) else {
                failure = Some(format!("seed {seed}: bb_cells failed"));
                break;
            };
            let dims = c.dimension_multiset();
            let mut dual: Vec<usize> = d.dimension_multiset().iter().map(|x| dim - x).collect();
            dual.sort_unstable();
            if dual != dims {
                failure = Some(format!("seed {seed}: {dims:?} not dual to {:?}", d.dimension_multiset()));
                break;
            }
            match &reference {
                None => reference = Some(dims),
                Some(r) if *r != dims => {
                    failure = Some(format!("seed {seed}: {dims:?} differs from {r:?}"));
                    break;
                }
                Some(_) => {}
            }
        }
        let ok = failure.is_none();
        let detail = failure.unwrap_or_else(|| format!("{:?}", reference.unwrap_or_default()));
        out.push(case("lambda-independence", model.name(), ok, detail));
    }
    out
}

fn reversed(mut c: CellDecomposition) -> CellDecomposition {
    c.cells.reverse();
    for (i, cell) in c.cells.iter_mut().enumerate() {
        cell.index = i;
    }
    c
}

fn weight_monotone(cap: usize) -> Vec<CaseResult> {
    let mut out = Vec::new();
    let mut decompositions: Vec<CellDecomposition> = Vec::new();
    for model in model_corpus(cap) {
        let lambda = random_generic_cocharacter(&model, 0);
        if let Ok(c) = bb_cells(&model, &lambda) {
            decompositions.push(order_filtration(c).0);
        }
    }
    for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::D, 4)] {
        let rs = build_root_system(RootSystemSpec::new(f, n).expect("corpus specs are valid"));
        if let Ok(c) = schubert_cells(&rs, &ParabolicSubset::borel(), cap) {
            decompositions.push(c);
        }
    }
    for c in &decompositions {
        let r = verify_weight_monotone(c);
        out.push(case(
            "weight-monotone",
            c.space_name.clone(),
            r.passed(),
            format!("{} steps", r.steps.len()),
        ));
    }
    // the checker must reject a filtration attached in the wrong order
    for c in decompositions.into_iter().filter(|c| {
        c.cells.first().map(|x| x.dimension) != c.cells.last().map(|x| x.dimension)
    }) {
        let name = format!("{} reversed", c.space_name);
        let r = verify_weight_monotone(&reversed(c));
        let obstructed = r.failures().count();
        out.push(case("weight-monotone", name, !r.passed(), format!("{obstructed} obstructed steps")));
    }
    out
}

//! Acceptance criteria. Runs without the libtest harness so that each
//! criterion prints exactly one PASS/FAIL line; exits nonzero on any FAIL.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use motcell_core::parabolic::{flag_torus_model, parabolic_subgroup};
use motcell_core::quadric::quadric_flag_data;
use motcell_core::toric::{hirzebruch, product, projective_space};
use motcell_core::{
    bb_cells, build_root_system, enumerate_weyl, generic_cocharacter, h_vector,
    minimal_coset_reps, order_filtration, poincare_polynomial, quadric_paper_ledger,
    quadric_torus_model, schubert_cells, toric_torus_model, verify_weight_monotone,
    CellDecomposition, Fan, Family, ParabolicSubset, QuadricSpec, RootSystem, RootSystemSpec,
    TorusModel, DEFAULT_WEYL_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rs(f: Family, n: usize) -> RootSystem {
    build_root_system(RootSystemSpec::new(f, n).expect("valid type"))
}

fn mult(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Degrees of the basic invariants, written out per type.
fn degrees(f: Family, n: usize) -> Vec<usize> {
    match (f, n) {
        (Family::A, _) => (2..=n + 1).collect(),
        (Family::B | Family::C, _) => (1..=n).map(|i| 2 * i).collect(),
        (Family::D, _) => (1..n).map(|i| 2 * i).chain([n]).collect(),
        (Family::G, 2) => vec![2, 6],
        (Family::F, 4) => vec![2, 6, 8, 12],
        (Family::E, 6) => vec![2, 5, 6, 8, 9, 12],
        _ => unreachable!(),
    }
}

/// `prod (1 + t + ... + t^(d-1))`.
fn degree_product(ds: &[usize]) -> Vec<i64> {
    ds.iter().fold(vec![1i64], |p, &d| {
        let mut q = vec![0i64; p.len() + d - 1];
        for (i, &c) in p.iter().enumerate() {
            for k in 0..d {
                q[i + k] += c;
            }
        }
        q
    })
}

fn random_generic(model: &TorusModel, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + seed);
    loop {
        let l: Vec<i64> = (0..model.torus_rank()).map(|_| rng.gen_range(-997..=997)).collect();
        if model.is_generic(&l) {
            return l;
        }
    }
}

const FLAG_CORPUS: &[(Family, usize)] = &[
    (Family::A, 2),
    (Family::A, 3),
    (Family::B, 2),
    (Family::B, 3),
    (Family::D, 3),
    (Family::D, 4),
];

/// `P = B`, then for each node both the minimal parabolic `{i}` and the
/// maximal parabolic with node `i` removed.
fn parabolics(n: usize) -> Vec<ParabolicSubset> {
    let mut out = vec![ParabolicSubset::borel()];
    for i in 1..=n {
        out.push(ParabolicSubset::new(&[i]));
        out.push(ParabolicSubset::maximal(n, i));
    }
    out
}

fn fans() -> Vec<(Fan, Vec<i64>)> {
    let mut out: Vec<(Fan, Vec<i64>)> = (1..=6).map(|n| (projective_space(n), vec![1; n + 1])).collect();
    out.push((product(&projective_space(1), &projective_space(1)), vec![1, 2, 1]));
    out.push((product(&projective_space(2), &projective_space(1)), vec![1, 2, 2, 1]));
    for a in 0..=3 {
        out.push((hirzebruch(a), vec![1, 2, 1]));
    }
    out
}

fn criterion_1() -> Outcome {
    let list = [
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
    let start = Instant::now();
    for (f, n) in list {
        let w = enumerate_weyl(&rs(f, n), DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?;
        let got = motcell_core::poly::from_exponents(w.iter().map(|x| x.length()));
        let want = degree_product(&degrees(f, n));
        ensure(got == want, || format!("{f}{n}: {got:?} != {want:?}"))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("{} types", list.len()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for &(f, n) in FLAG_CORPUS {
        let r = rs(f, n);
        let lambda: Vec<i64> = vec![1; n];
        for p in parabolics(n) {
            let reps = minimal_coset_reps(&r, &p, DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?;
            let model = flag_torus_model(&r, &p, DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?;
            let cells = bb_cells(&model, &lambda).map_err(|e| e.to_string())?;
            ensure(cells.len() == reps.len(), || format!("{}: cell count", model.name()))?;
            for w in &reps {
                let c = cells
                    .cells
                    .iter()
                    .find(|c| c.fixed_point == w.label())
                    .ok_or_else(|| format!("{}: no cell at {}", model.name(), w.label()))?;
                ensure(c.dimension == w.length(), || {
                    format!("{} at {}: BB {} vs l(w) {}", model.name(), w.label(), c.dimension, w.length())
                })?;
            }
            pairs += 1;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(10), || format!("took {t:?}"))?;
    Ok(format!("{pairs} (G, P) pairs"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let all = fans();
    for (fan, want) in &all {
        let h = h_vector(fan);
        ensure(&h == want, || format!("{}: h = {h:?}, expected {want:?}", fan.name()))?;
        let model = toric_torus_model(fan);
        for seed in 0..20 {
            let l = random_generic(&model, seed);
            let cells = bb_cells(&model, &l).map_err(|e| e.to_string())?;
            let p = poincare_polynomial(&cells);
            ensure(p == h, || format!("{} seed {seed}: {p:?} != {h:?}", fan.name()))?;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(5), || format!("took {t:?}"))?;
    Ok(format!("{} fans x 20 cocharacters", all.len()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    for n in 1..=5 {
        let spec = QuadricSpec::new(n).unwrap();
        let model = quadric_torus_model(spec);
        let l = generic_cocharacter(&model, 1_000_000).map_err(|e| e.to_string())?;
        let coordinate = bb_cells(&model, &l).map_err(|e| e.to_string())?.dimension_multiset();
        let ledger: Vec<usize> = quadric_paper_ledger(spec)
            .sphere_multiset()
            .ok_or("two-stage ledger unresolved")?
            .iter()
            .map(|s| s.q as usize)
            .collect();
        let (r, p) = quadric_flag_data(spec);
        let flag = schubert_cells(&r, &p, DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?.dimension_multiset();
        ensure(coordinate == mult(&ledger) && coordinate == flag, || {
            format!("Q{}: {coordinate:?} / {ledger:?} / {flag:?}", 2 * n)
        })?;
        // 0..2n with the middle dimension doubled
        let mut expected: Vec<usize> = (0..=2 * n).collect();
        expected.push(n);
        ensure(coordinate == mult(&expected), || format!("Q{}: {coordinate:?}", 2 * n))?;
        if n == 2 {
            ensure(coordinate == [0, 1, 2, 2, 3, 4], || format!("Q4: {coordinate:?}"))?;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(5), || format!("took {t:?}"))?;
    Ok("n = 1..5".into())
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for &(f, n) in FLAG_CORPUS {
        let r = rs(f, n);
        let order = enumerate_weyl(&r, DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?.len();
        for p in parabolics(n) {
            let sub = parabolic_subgroup(&r, &p, DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?.len();
            let cells = schubert_cells(&r, &p, DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?;
            ensure(cells.len() * sub == order, || {
                format!("{f}{n} {:?}: {} cells, |W| = {order}, |W_P| = {sub}", p.nodes(), cells.len())
            })?;
            checked += 1;
        }
    }
    for (fan, _) in fans() {
        let model = toric_torus_model(&fan);
        let l = generic_cocharacter(&model, 1_000_000).map_err(|e| e.to_string())?;
        let cells = bb_cells(&model, &l).map_err(|e| e.to_string())?;
        ensure(cells.len() == fan.max_cones().len(), || fan.name().to_string())?;
        checked += 1;
    }
    for n in 1..=5 {
        let model = quadric_torus_model(QuadricSpec::new(n).unwrap());
        let l = generic_cocharacter(&model, 1_000_000).map_err(|e| e.to_string())?;
        let cells = bb_cells(&model, &l).map_err(|e| e.to_string())?;
        ensure(cells.len() == 2 * n + 2, || format!("Q{}", 2 * n))?;
        checked += 1;
    }
    Ok(format!("{checked} spaces"))
}

fn corpus_decompositions() -> Result<Vec<CellDecomposition>, String> {
    let mut out = Vec::new();
    for &(f, n) in FLAG_CORPUS {
        let r = rs(f, n);
        for p in parabolics(n) {
            out.push(schubert_cells(&r, &p, DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?);
        }
    }
    for m in model_corpus() {
        let l = random_generic(&m, 0);
        out.push(order_filtration(bb_cells(&m, &l).map_err(|e| e.to_string())?).0);
    }
    Ok(out)
}

fn criterion_6() -> Outcome {
    let corpus = corpus_decompositions()?;
    for c in &corpus {
        ensure(c.is_ordered(), || format!("{} is not ordered", c.space_name))?;
        let r = verify_weight_monotone(c);
        ensure(r.passed(), || format!("{}: {:?}", c.space_name, r.failures().next()))?;
    }
    let mut rejected = 0;
    for c in corpus.iter().filter(|c| c.ambient_dimension > 0) {
        let mut rev = c.clone();
        rev.cells.reverse();
        let r = verify_weight_monotone(&rev);
        ensure(!r.passed(), || format!("{}: reversed filtration accepted", c.space_name))?;
        rejected += 1;
    }
    Ok(format!("{} filtrations pass, {rejected} reversed rejected", corpus.len()))
}

fn model_corpus() -> Vec<TorusModel> {
    let mut out = Vec::new();
    for &(f, n) in FLAG_CORPUS {
        let r = rs(f, n);
        for p in parabolics(n) {
            out.push(flag_torus_model(&r, &p, DEFAULT_WEYL_CAP).expect("corpus flags"));
        }
    }
    out.extend(fans().iter().map(|(f, _)| toric_torus_model(f)));
    out.extend((1..=5).map(|n| quadric_torus_model(QuadricSpec::new(n).unwrap())));
    out
}

fn criterion_7() -> Outcome {
    let models = model_corpus();
    for m in &models {
        let dim = m.dimension();
        let mut reference: Option<Vec<usize>> = None;
        for seed in 0..20 {
            let l = random_generic(m, seed);
            let dims = bb_cells(m, &l).map_err(|e| e.to_string())?.dimension_multiset();
            let neg: Vec<i64> = l.iter().map(|x| -x).collect();
            let dual = bb_cells(m, &neg).map_err(|e| e.to_string())?.dimension_multiset();
            let flipped = mult(&dual.iter().map(|d| dim - d).collect::<Vec<_>>());
            ensure(flipped == dims, || format!("{} seed {seed}: duality {dims:?} vs {dual:?}", m.name()))?;
            match &reference {
                None => reference = Some(dims),
                Some(r) => ensure(*r == dims, || format!("{} seed {seed}: {dims:?} vs {r:?}", m.name()))?,
            }
        }
    }
    Ok(format!("{} models x 20 cocharacters", models.len()))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let r = rs(Family::E, 6);
    let cells = schubert_cells(&r, &ParabolicSubset::maximal(6, 1), DEFAULT_WEYL_CAP)
        .map_err(|e| e.to_string())?;
    let top = cells.cells.iter().map(|c| c.dimension).max().unwrap_or(0);
    ensure(cells.len() == 27 && top == 16, || format!("{} cells, top {top}", cells.len()))?;
    let model = flag_torus_model(&r, &ParabolicSubset::maximal(6, 1), DEFAULT_WEYL_CAP)
        .map_err(|e| e.to_string())?;
    let bb = bb_cells(&model, &[1; 6]).map_err(|e| e.to_string())?;
    ensure(bb.dimension_multiset() == cells.dimension_multiset(), || "BB disagrees".into())?;
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("27 cells, top dimension {top}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Weyl-Poincare product formula", criterion_1),
        ("Schubert = BB at cosets", criterion_2),
        ("toric h-vector", criterion_3),
        ("quadric triple agreement", criterion_4),
        ("Euler characteristics", criterion_5),
        ("weight-monotone filtrations", criterion_6),
        ("lambda-independence and duality", criterion_7),
        ("E6 minuscule", criterion_8),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance gate: nine end-to-end criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines are always printed. Every
//! expected value is computed here from closed forms or by a second code
//! path, never copied from the library's own output.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ddisc::classify::{clock_condition, is_derived_discrete, lambda_normal_form, Verdict};
use ddisc::field::Field;
use ddisc::homology::*;
use ddisc::quiver::*;
use ddisc::series::*;
use ddisc::{Gf32003, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_ROUNDS: usize = 6;

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn desc(r: usize, s: usize, t: usize) -> LambdaDescriptor {
    LambdaDescriptor::new(r, s, t).unwrap()
}

/// Λ(s,s,t) for s ∈ {1,2,3}, t ∈ {0,1,2}.
fn cycle_grid() -> Vec<LambdaDescriptor> {
    (1..=3).flat_map(|s| (0..=2).map(move |t| desc(s, s, t))).collect()
}

/// One Hom table of criterion 1, kept for criteria 8 and 9.
struct DiagonalTable {
    d: LambdaDescriptor,
    x: StringObject,
    table: HomTable,
}

// ---------------------------------------------------------------- 1, 8, 9

fn diagonal_tables<F: Field>() -> Result<Vec<DiagonalTable>, String> {
    let mut out = Vec::new();
    for d in cycle_grid() {
        for x in string_objects(d) {
            let table = lambda_hom_table::<F>(d, x, x, 3 * d.s, MAX_ROUNDS).map_err(|e| format!("{d} {x}: {e}"))?;
            out.push(DiagonalTable { d, x, table });
        }
    }
    Ok(out)
}

fn criterion_1(tables: &[DiagonalTable], elapsed: Duration) -> Outcome {
    for t in tables {
        let expected: Vec<usize> = (0..=3 * t.d.s).map(|h| usize::from(h % t.d.s == 0)).collect();
        check(t.table.dims == expected, || {
            format!("{} {}: got {:?}, expected {:?}", t.d, t.x, t.table.dims, expected)
        })?;
    }
    check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} tables exact, {:.1?}", tables.len(), elapsed))
}

fn criterion_8(tables: &[DiagonalTable]) -> Outcome {
    for t in tables {
        let p = build_lambda(t.d).unwrap();
        let alg = FiniteAlgebra::new(&p).unwrap();
        let m = build_string_object::<Rational>(&alg, t.d, t.x).unwrap();
        let policy = MarginPolicy {
            start: t.table.margin + t.d.s,
            step: t.d.s,
            max_rounds: MAX_ROUNDS,
        };
        let pushed = hom_table(&alg, &m, &m, 3 * t.d.s, policy).map_err(|e| e.to_string())?;
        check(pushed.dims == t.table.dims, || {
            format!("{} {}: margin {} gives {:?}, margin {} gives {:?}", t.d, t.x, t.table.margin, t.table.dims, policy.start, pushed.dims)
        })?;
    }
    Ok(format!("{} tables unchanged at margin + s", tables.len()))
}

// ---------------------------------------------------------------- 2

fn criterion_2() -> Outcome {
    let mut pairs = 0;
    let mut violations = Vec::new();
    for d in cycle_grid() {
        let hmax = 3 * d.s + d.t + 2;
        for x in string_objects(d) {
            for y in string_objects(d) {
                let table = lambda_hom_table::<Rational>(d, x, y, hmax, MAX_ROUNDS).map_err(|e| format!("{d} ({x},{y}): {e}"))?;
                pairs += 1;
                if table.dims.iter().all(|&n| n == 0) {
                    violations.push(format!("{d} ({x},{y})"));
                }
            }
        }
    }
    check(violations.is_empty(), || format!("orthogonal pairs: {}", violations.join(", ")))?;
    Ok(format!("{pairs} ordered pairs, 0 violations"))
}

// ---------------------------------------------------------------- 3, 4, 5

#[derive(Debug, Clone, Copy)]
enum Piece {
    Lambda(LambdaDescriptor),
    Dynkin(DynkinType),
}

impl Piece {
    fn build(self) -> BoundQuiverPresentation {
        match self {
            Piece::Lambda(d) => build_lambda(d).unwrap(),
            Piece::Dynkin(ty) => build_dynkin(ty).unwrap(),
        }
    }

    fn simples(self) -> usize {
        match self {
            Piece::Lambda(d) => d.s + d.t,
            Piece::Dynkin(DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n)) => n,
        }
    }

    fn cycle(self) -> Option<usize> {
        match self {
            Piece::Lambda(d) if d.r == d.s => Some(d.s),
            _ => None,
        }
    }
}

struct BatteryInput {
    name: String,
    pieces: Vec<Piece>,
    presentation: BoundQuiverPresentation,
}

fn battery() -> Vec<BatteryInput> {
    let mut singles: Vec<Piece> = Vec::new();
    for s in 1..=3 {
        for r in 1..=s {
            for t in 0..=2 {
                singles.push(Piece::Lambda(desc(r, s, t)));
            }
        }
    }
    singles.extend([desc(4, 4, 0), desc(5, 5, 0), desc(3, 4, 1)].map(Piece::Lambda));
    singles.extend((1..=5).map(|n| Piece::Dynkin(DynkinType::A(n))));
    singles.push(Piece::Dynkin(DynkinType::D(4)));

    let l = |r, s, t| Piece::Lambda(desc(r, s, t));
    let a = |n| Piece::Dynkin(DynkinType::A(n));
    let sums = vec![
        vec![l(2, 2, 1), a(3)],
        vec![l(1, 1, 0), l(1, 1, 0)],
        vec![l(3, 3, 2), l(1, 2, 1), Piece::Dynkin(DynkinType::D(4))],
        vec![l(2, 2, 0), l(3, 3, 0)],
        vec![a(1), a(2), l(1, 3, 0)],
        vec![l(1, 1, 2), l(2, 2, 2)],
    ];
    singles
        .into_iter()
        .map(|p| vec![p])
        .chain(sums)
        .map(|pieces| {
            let name = pieces
                .iter()
                .map(|p| match p {
                    Piece::Lambda(d) => d.to_string(),
                    Piece::Dynkin(ty) => ty.to_string(),
                })
                .collect::<Vec<_>>()
                .join(" + ");
            let presentation = direct_sum(&pieces.iter().map(|p| p.build()).collect::<Vec<_>>());
            BatteryInput { name, pieces, presentation }
        })
        .collect()
}

/// `{TwoTruncatedCycle(s_p)} ∪ {K: rank − Σ s_p}`.
fn closed_form(pieces: &[Piece]) -> FactorMultiset {
    let cycles: Vec<usize> = pieces.iter().filter_map(|p| p.cycle()).collect();
    let rank: usize = pieces.iter().map(|p| p.simples()).sum();
    let mut out = FactorMultiset::default();
    for &s in &cycles {
        out.add(FactorClass::TwoTruncatedCycle(s), 1);
    }
    out.add(FactorClass::K, rank - cycles.iter().sum::<usize>());
    out
}

fn criterion_3(battery: &[BatteryInput]) -> Outcome {
    for b in battery {
        let got = composition_factors(&lambda_normal_form(&b.presentation)).map_err(|e| format!("{}: {e}", b.name))?;
        let want = closed_form(&b.pieces);
        check(got == want, || format!("{}: got {got}, expected {want}", b.name))?;
    }
    Ok(format!("{} inputs match the closed form", battery.len()))
}

fn criterion_4(battery: &[BatteryInput]) -> Outcome {
    let mut simple_names = Vec::new();
    for b in battery {
        let expected = match b.pieces.as_slice() {
            [Piece::Dynkin(DynkinType::A(1))] => true,
            [Piece::Lambda(d)] => d.r == d.s && d.t == 0 && d.s <= 5,
            _ => false,
        };
        let cls = lambda_normal_form(&b.presentation);
        for n in 1..=4 {
            let v = is_n_derived_simple(&cls, n).map_err(|e| format!("{}: {e}", b.name))?;
            check(v.simple == expected, || format!("{} n={n}: simple={}, expected {expected}", b.name, v.simple))?;
        }
        if expected {
            simple_names.push(b.name.clone());
        }
    }
    let wanted = ["A1", "Λ(1,1,0)", "Λ(2,2,0)", "Λ(3,3,0)", "Λ(4,4,0)", "Λ(5,5,0)"];
    for w in wanted {
        check(simple_names.iter().any(|n| n == w), || format!("battery lacks {w}"))?;
    }
    Ok(format!("simple exactly on {{{}}} for n = 1..4", simple_names.join(", ")))
}

fn criterion_5(battery: &[BatteryInput]) -> Outcome {
    for b in battery {
        let p = &b.presentation;
        let trace = strip_series(p).map_err(|e| format!("{}: {e}", b.name))?;
        let emitted: FactorMultiset = trace.factors.iter().copied().collect();
        let closed = composition_factors(&lambda_normal_form(p)).unwrap();
        check(emitted == closed, || format!("{}: trace {emitted}, closed form {closed}", b.name))?;
        verify_trace(p, &trace).map_err(|e| format!("{}: {e}", b.name))?;
        let rank = grothendieck_rank(p);
        check(trace.length <= rank, || format!("{}: length {} > rank {rank}", b.name, trace.length))?;
        let cycles: Vec<usize> = b.pieces.iter().filter_map(|x| x.cycle()).collect();
        let equality_expected = cycles.is_empty() || cycles.iter().all(|&s| s == 1);
        check((trace.length == rank) == equality_expected, || {
            format!("{}: length {}, rank {rank}, cycles {cycles:?}", b.name, trace.length)
        })?;
    }
    Ok(format!("{} traces verified", battery.len()))
}

// ---------------------------------------------------------------- 6

fn criterion_6() -> Outcome {
    let mut n = 0;
    for s in 1..=3 {
        for r in 1..=s {
            for t in 0..=2 {
                let d = desc(r, s, t);
                let c = clock_condition(&build_lambda(d).unwrap()).map_err(|e| format!("{d}: {e}"))?;
                check((c.m_with, c.m_against, c.satisfied) == (r, 0, false), || {
                    format!("{d}: counts {{{}, {}}}, satisfied {}", c.m_with, c.m_against, c.satisfied)
                })?;
                n += 1;
            }
        }
    }
    let k = kronecker();
    let c = clock_condition(&k).map_err(|e| format!("Kronecker: {e}"))?;
    check((c.m_with, c.m_against, c.satisfied) == (0, 0, true), || {
        format!("Kronecker: counts {{{}, {}}}, satisfied {}", c.m_with, c.m_against, c.satisfied)
    })?;
    let verdict = is_derived_discrete(&k).verdict;
    check(verdict == Verdict::No, || format!("Kronecker classified {verdict}"))?;
    Ok(format!("{n} Λ(r,s,t) report {{r,0}}; Kronecker {{0,0}}, not discrete"))
}

// ---------------------------------------------------------------- 7, 9

fn gentle_algebras() -> Vec<(String, BoundQuiverPresentation)> {
    let mut out: Vec<(String, BoundQuiverPresentation)> = Vec::new();
    for s in 1..=3 {
        for r in 1..=s {
            for t in 0..=2 {
                let d = desc(r, s, t);
                out.push((d.to_string(), build_lambda(d).unwrap()));
            }
        }
    }
    out.push((
        "A4 with ab = 0".into(),
        BoundQuiverPresentation::from_parts(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")], &[&["a", "b"]]).unwrap(),
    ));
    out.push((
        "D4-shaped gentle".into(),
        BoundQuiverPresentation::from_parts(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "4", "2")], &[&["a", "b"]]).unwrap(),
    ));
    out.push(("A3".into(), build_dynkin(DynkinType::A(3)).unwrap()));
    out
}

type Zoo<F> = Vec<(String, RepModule<F>)>;

/// Simples, projectives, their radicals, the tops of those radicals and
/// the next syzygies; zero modules are skipped.
fn module_zoo<F: Field>(alg: &FiniteAlgebra) -> Zoo<F> {
    let mut out = Vec::new();
    let q = alg.presentation().quiver();
    for v in 0..alg.vertex_count() {
        let id = q.vertex_id(v);
        let s = simple_module::<F>(alg, v).unwrap();
        let cover = projective_cover(alg, &s).unwrap();
        let (rad, _) = cover.realized.module.kernel(&cover.epimorphism);
        out.push((format!("S{id}"), s));
        out.push((format!("P{id}"), indec_projective::<F>(alg, v).unwrap()));
        if rad.dim() > 0 {
            let top = rad.quotient(&rad.radical()).unwrap().0;
            let c = projective_cover(alg, &rad).unwrap();
            let (omega, _) = c.realized.module.kernel(&c.epimorphism);
            out.push((format!("radP{id}"), rad));
            out.push((format!("top radP{id}"), top));
            if omega.dim() > 0 {
                out.push((format!("Ω radP{id}"), omega));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Instance {
    algebra: usize,
    m: usize,
    n: usize,
    h: usize,
}

fn instances() -> Vec<Instance> {
    let algebras = gentle_algebras();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    (0..200)
        .map(|_| {
            let algebra = rng.gen_range(0..algebras.len());
            let alg = FiniteAlgebra::new(&algebras[algebra].1).unwrap();
            let zoo = module_zoo::<Rational>(&alg).len();
            let idx: Vec<usize> = (0..zoo).collect();
            Instance {
                algebra,
                m: *idx.choose(&mut rng).unwrap(),
                n: *idx.choose(&mut rng).unwrap(),
                h: rng.gen_range(0..=5),
            }
        })
        .collect()
}

/// `(ext_dim, hom_shift_dim)` per instance.
fn oracle_pairs<F: Field>(instances: &[Instance]) -> Result<Vec<(usize, usize)>, String> {
    let algebras = gentle_algebras();
    let mut by_algebra: BTreeMap<usize, (FiniteAlgebra, Zoo<F>)> = BTreeMap::new();
    let mut out = Vec::new();
    for inst in instances {
        let (alg, zoo) = by_algebra.entry(inst.algebra).or_insert_with(|| {
            let alg = FiniteAlgebra::new(&algebras[inst.algebra].1).unwrap();
            let zoo = module_zoo::<F>(&alg);
            (alg, zoo)
        });
        let (m, n) = (&zoo[inst.m].1, &zoo[inst.n].1);
        let label = || format!("{}: Ext^{}({}, {})", algebras[inst.algebra].0, inst.h, zoo[inst.m].0, zoo[inst.n].0);
        let ext = ext_dim(alg, m, n, inst.h).map_err(|e| format!("{}: {e}", label()))?;
        let resolution = resolve(alg, m, inst.h + 1).map_err(|e| format!("{}: {e}", label()))?;
        let hom = hom_shift_dim(alg, &resolution, &ModComplex::module(n.clone(), 0), inst.h as i64)
            .map_err(|e| format!("{}: {e}", label()))?;
        out.push((ext, hom));
    }
    Ok(out)
}

fn criterion_7(pairs: &[(usize, usize)], instances: &[Instance]) -> Outcome {
    let disagreements: Vec<String> = pairs
        .iter()
        .zip(instances)
        .filter(|((e, h), _)| e != h)
        .map(|((e, h), i)| format!("{i:?}: ext {e}, hom {h}"))
        .collect();
    check(disagreements.is_empty(), || disagreements.join("; "))?;
    let nonzero = pairs.iter().filter(|(e, _)| *e > 0).count();
    let algebras: std::collections::BTreeSet<usize> = instances.iter().map(|i| i.algebra).collect();
    Ok(format!("{} instances on {} algebras agree ({nonzero} nonzero)", pairs.len(), algebras.len()))
}

fn criterion_9(rational_tables: &[DiagonalTable], rational_pairs: &[(usize, usize)], instances: &[Instance]) -> Outcome {
    let gf_tables = diagonal_tables::<Gf32003>()?;
    for (q, p) in rational_tables.iter().zip(&gf_tables) {
        check(q.table.dims == p.table.dims, || {
            format!("{} {}: Q {:?}, GF(32003) {:?}", q.d, q.x, q.table.dims, p.table.dims)
        })?;
    }
    let gf_pairs = oracle_pairs::<Gf32003>(instances)?;
    for ((q, p), i) in rational_pairs.iter().zip(&gf_pairs).zip(instances) {
        check(q == p, || format!("{i:?}: Q {q:?}, GF(32003) {p:?}"))?;
    }
    Ok(format!("{} tables and {} oracle instances identical over GF(32003)", gf_tables.len(), gf_pairs.len()))
}

// ---------------------------------------------------------------- driver

fn guarded<T>(f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    })
}

fn main() {
    let start = Instant::now();
    let tables = guarded(diagonal_tables::<Rational>);
    let elapsed = start.elapsed();
    let battery = battery();
    let insts = instances();
    let pairs = guarded(|| oracle_pairs::<Rational>(&insts));

    let results: Vec<(&str, Outcome)> = vec![
        ("Hom(X, X[h]) is 1 exactly when s | h", guarded(|| criterion_1(tables.as_ref()?, elapsed))),
        ("no two string objects are orthogonal", guarded(criterion_2)),
        ("composition factors match the closed form", guarded(|| criterion_3(&battery))),
        ("derived simple exactly on k and Λ(s,s,0)", guarded(|| criterion_4(&battery))),
        ("strip series agrees with the factors", guarded(|| criterion_5(&battery))),
        ("clock condition calibration", guarded(criterion_6)),
        ("ext_dim and hom_shift_dim agree", guarded(|| criterion_7(pairs.as_ref()?, &insts))),
        ("margin stability", guarded(|| criterion_8(tables.as_ref()?))),
        ("field independence", guarded(|| criterion_9(tables.as_ref()?, pairs.as_ref()?, &insts))),
    ];

    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed in {:.1?}", results.len() - failed, results.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every comparison is an exact equality.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use liecoh::catalog::{self, standard_entries};
use liecoh::cechain::{
    ce_chain_complex, ce_cochain_complex, ce_cohomology, invariant_subcomplex, levi_splitting, ChainComplex,
};
use liecoh::io::{algebra_to_json, parse_algebra};
use liecoh::leibniz::{
    leibniz_chain_complex, leibniz_cochain_complex, leibniz_cohomology, LeibnizComplexSpec, DEFAULT_RESOURCE_CAP,
};
use liecoh::verify::{self, random, CheckOptions, HuntConfig, Verdict};
use liecoh::{LieAlgebra, Representation};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn ce_betti(g: &LieAlgebra, m: &Representation) -> Vec<usize> {
    ce_cohomology(g, m, false).unwrap().betti
}

fn hl_betti(g: &LieAlgebra, m: &Representation, max_degree: usize) -> Vec<usize> {
    let spec = LeibnizComplexSpec::new(g, m).with_max_degree(max_degree);
    leibniz_cohomology(&spec).unwrap().betti
}

fn c1_sl2() -> Outcome {
    let start = Instant::now();
    let g = catalog::sl2();
    let triv = ce_betti(&g, &Representation::trivial(&g, 1));
    ensure(triv == [1, 0, 0, 1], || format!("trivial {triv:?}"))?;
    let adj = ce_betti(&g, &Representation::adjoint(&g));
    ensure(adj == [0, 0, 0, 0], || format!("adjoint {adj:?}"))?;
    let p = verify::pirashvili_conditions(&g).unwrap();
    ensure(p.verdict == Verdict::Pass, || "Pirashvili conditions fail".into())?;
    within(start, Duration::from_secs(1))
}

fn c2_affine() -> Outcome {
    for n in [1, 2] {
        let start = Instant::now();
        let g = catalog::affine(n);
        let adj = ce_betti(&g, &Representation::adjoint(&g));
        ensure(adj.len() == g.dim() + 1 && adj.iter().all(|&b| b == 0), || format!("aff({n}) {adj:?}"))?;
        let report = g.structure_report();
        ensure(report.complete && !report.perfect, || format!("aff({n}) report {report:?}"))?;
        if n == 2 {
            within(start, Duration::from_secs(10))?;
        }
    }
    Ok(())
}

fn c3_heisenberg() -> Outcome {
    let g = catalog::heisenberg(3);
    let triv = Representation::trivial(&g, 1);
    let b = ce_betti(&g, &triv);
    ensure(b == [1, 2, 2, 1], || format!("betti {b:?}"))?;
    let pd = verify::check_poincare_duality(&g, &triv).unwrap();
    ensure(pd.verdict == Verdict::Pass && pd.flags["unimodular"], || format!("{pd:?}"))?;
    let hl = hl_betti(&g, &triv, 3);
    ensure(hl[1] == 2 && b[1] == 2, || format!("HL^1 {} H^1 {}", hl[1], b[1]))
}

fn c4_abelian() -> Outcome {
    for n in 1..=3usize {
        let g = LieAlgebra::abelian(n);
        let hl = hl_betti(&g, &Representation::trivial(&g, 1), 5);
        let expect: Vec<usize> = (0..=4).map(|p| n.pow(p as u32)).collect();
        ensure(hl[..5] == expect[..], || format!("abelian({n}) {hl:?}"))?;
    }
    Ok(())
}

fn c5_direct_duality() -> Outcome {
    let mut checked = 0;
    for e in standard_entries().into_iter().filter(|e| e.algebra.dim() <= 4) {
        let g = &e.algebra;
        for m in [Representation::trivial(g, 1), Representation::adjoint(g)] {
            let r = verify::check_direct_duality(g, &m, 4, DEFAULT_RESOURCE_CAP).map_err(|err| format!("{}: {err}", e.name))?;
            ensure(r.verdict == Verdict::Pass && r.lhs_dims.len() == 4, || format!("{}: {r:?}", e.name))?;
            checked += 1;
        }
    }
    ensure(checked >= 16, || format!("only {checked} pairs checked"))
}

fn c6_semidirect_v1() -> Outcome {
    let g = catalog::sl2_semidirect_irrep(1);
    let adj = ce_betti(&g, &Representation::adjoint(&g));
    ensure(adj[1] == 1, || format!("H^1(g,g) = {}", adj[1]))?;
    let r = verify::check_hs_factorization_3_4(&g).unwrap();
    let expect = vec![0, 1, 0, 0, 1, 0];
    ensure(r.verdict == Verdict::Pass && r.lhs_dims == expect && r.rhs_dims == expect, || format!("{r:?}"))
}

fn c7_lemma_2_4() -> Outcome {
    for e in standard_entries() {
        let r = verify::check_lemma_2_4(&e.algebra).unwrap();
        ensure(r.verdict == Verdict::Pass, || format!("{}: {r:?}", e.name))?;
    }
    Ok(())
}

fn complex_ok(label: &str, c: &ChainComplex) -> Outcome {
    let bad = c.square_zero_failures();
    ensure(bad.is_empty(), || format!("{label}: d∘d != 0 at {bad:?}"))?;
    let betti = c.betti();
    let chi: i64 = betti.iter().enumerate().map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    ensure(chi == c.euler_characteristic(), || format!("{label}: Euler {chi} vs {}", c.euler_characteristic()))
}

fn invariants_of(g: &LieAlgebra) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    (
        ce_betti(g, &Representation::trivial(g, 1)),
        ce_betti(g, &Representation::adjoint(g)),
        hl_betti(g, &Representation::trivial(g, 1), 3),
    )
}

fn c8_property_suite() -> Outcome {
    let start = Instant::now();
    for i in 0..100u64 {
        let g = random::generate("random-small", 2024, i).map_err(|e| e.to_string())?;
        ensure(g.dim() <= 5, || format!("instance {i} has dim {}", g.dim()))?;
        for (mlabel, m) in [("trivial", Representation::trivial(&g, 1)), ("adjoint", Representation::adjoint(&g))] {
            let label = |k: &str| format!("#{i} {k} {mlabel}");
            complex_ok(&label("CE cochain"), &ce_cochain_complex(&g, &m).unwrap())?;
            complex_ok(&label("CE chain"), &ce_chain_complex(&g, &m).unwrap())?;
            let spec = LeibnizComplexSpec::new(&g, &m).with_max_degree(3);
            complex_ok(&label("Leibniz cochain"), &leibniz_cochain_complex(&spec).unwrap())?;
            complex_ok(&label("Leibniz chain"), &leibniz_chain_complex(&spec).unwrap())?;
            let split = levi_splitting(&g, &m).unwrap();
            let inv = invariant_subcomplex(
                &split.radical,
                &split.module_on_radical,
                &split.levi_on_radical,
                &split.levi_on_module,
            )
            .unwrap();
            complex_ok(&label("invariant"), &inv)?;
        }
        let reference = invariants_of(&g);
        let mut rng = random::rng_for(99, i);
        for k in 0..20 {
            let p = random::random_basis_change(&mut rng, g.dim());
            let h = g.change_of_basis(&p).unwrap();
            let got = invariants_of(&h);
            ensure(got == reference, || format!("#{i} basis change {k}: {got:?} vs {reference:?}"))?;
        }
    }
    within(start, Duration::from_secs(180))
}

fn c9_prop_3_1() -> Outcome {
    let check = |name: &str, g: &LieAlgebra| -> Outcome {
        let pmax = verify::feasible_pmax(g, 3, DEFAULT_RESOURCE_CAP);
        let r = verify::check_prop_3_1(g, pmax, DEFAULT_RESOURCE_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.flags.get("degree1_equal") == Some(&true), || format!("{name}: {r:?}"))?;
        ensure(r.lhs_dims.len() == pmax - 1 && r.rhs_dims.len() == pmax - 1, || format!("{name}: table {r:?}"))?;
        ensure(r.verdict != Verdict::Fail, || format!("{name}: {r:?}"))
    };
    for e in standard_entries() {
        check(&e.name, &e.algebra)?;
    }
    for i in 0..100u64 {
        let g = random::generate("random-small", 31, i).map_err(|e| e.to_string())?;
        check(g.name(), &g)?;
    }
    Ok(())
}

fn c10_hunt() -> Outcome {
    let start = Instant::now();
    for family in ["random-solvable", "random-semidirect"] {
        let config = HuntConfig {
            family: family.into(),
            count: 100,
            seed: 7,
            checks: vec!["prop2.5".into(), "thm4.1".into()],
            options: CheckOptions::default(),
        };
        let report = verify::hunt(&config).map_err(|e| e.to_string())?;
        for f in &report.failures {
            let g = f.algebra.to_algebra().map_err(|e| e.to_string())?;
            let rerun = verify::run_check(&f.result.check_id, &g, &config.options).map_err(|e| e.to_string())?;
            ensure(rerun.contains(&f.result), || format!("{family} #{}: not reproducible", f.index))?;
        }
        ensure(report.failures.is_empty(), || {
            format!("{family}: {} violations, first {}", report.failures.len(), serde_json::to_string(&report.failures[0]).unwrap())
        })?;
        ensure(report.passes + report.informational == 200, || format!("{family}: {report:?}"))?;
        let again = verify::hunt(&config).map_err(|e| e.to_string())?;
        ensure(again == report, || format!("{family}: hunt is not deterministic"))?;
        for index in [0u64, 50, 99] {
            let g = random::generate(family, 7, index).unwrap();
            let back = parse_algebra(&algebra_to_json(&g)).unwrap();
            for id in &config.checks {
                let a = verify::run_check(id, &g, &config.options).unwrap();
                let b = verify::run_check(id, &back, &config.options).unwrap();
                ensure(a == b, || format!("{family} #{index} {id}: serialized rerun differs"))?;
            }
        }
    }
    within(start, Duration::from_secs(300))
}

fn c11_lemma_3_6() -> Outcome {
    let mut checked = 0;
    for e in standard_entries() {
        let g = &e.algebra;
        let rad = g.radical();
        if rad.is_zero() || !g.subalgebra(&rad).unwrap().is_abelian() {
            continue;
        }
        let r = verify::check_lemma_3_6(g).map_err(|err| format!("{}: {err}", e.name))?;
        let d = &r.witness.as_ref().unwrap()[0];
        ensure(g.is_derivation(d), || format!("{}: D is not a derivation", e.name))?;
        ensure(d.trace() == liecoh::Rational::from_integer(rad.dim() as i64), || format!("{}: tr D = {}", e.name, d.trace()))?;
        if g.is_perfect() {
            ensure(g.inner_preimage(d).is_none(), || format!("{}: D is inner", e.name))?;
        }
        ensure(r.verdict == Verdict::Pass, || format!("{}: {r:?}", e.name))?;
        checked += 1;
    }
    ensure(checked > 0, || "no catalog entry with a nonzero abelian radical".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("sl2 trivial and adjoint cohomology, Pirashvili conditions", c1_sl2),
        ("affine(1), affine(2): vanishing adjoint cohomology, complete, not perfect", c2_affine),
        ("heisenberg(3): Betti (1,2,2,1), Poincaré duality, HL^1 = H^1 = 2", c3_heisenberg),
        ("abelian(n <= 3): dim HL^p = n^p for p <= 4", c4_abelian),
        ("Leibniz direct duality on catalog algebras of dim <= 4", c5_direct_duality),
        ("sl2 ⋉ V1: H^1(g,g) = 1 and H^p(g,r) two ways", c6_semidirect_v1),
        ("degree 0 and 1 identifications on the catalog", c7_lemma_2_4),
        ("property suite over 100 random algebras", c8_property_suite),
        ("HL^p(g) vs HL^(p-1)(g, r*): degree 1 on catalog and random", c9_prop_3_1),
        ("hunt over random-solvable and random-semidirect", c10_hunt),
        ("Levi-zero, radical-identity derivation on abelian radicals", c11_lemma_3_6),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {label} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {label} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Acceptance gate: one line per criterion, `cargo test --test acceptance -- --nocapture`.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use common::{assignment_strategy, matrix3_strategy, nonzero_poly_strategy, poly_strategy};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use symplane::combinat::*;
use symplane::exactalg::{determinant, PolyMatrix};
use symplane::identity::*;
use symplane::schur::*;
use symplane::{LaurentPoly, Monomial, Var};

struct Outcome {
    id: &'static str,
    pass: bool,
    elapsed: Duration,
    detail: String,
}

fn criterion(
    id: &'static str,
    limit: Option<Duration>,
    f: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (mut pass, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            pass = false;
            detail = format!("{detail}; exceeded {limit:?}");
        }
    }
    Outcome {
        id,
        pass,
        elapsed,
        detail,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn swap_adjacent(p: &LaurentPoly, i: usize) -> LaurentPoly {
    let map: HashMap<Var, Monomial> = [
        (Var::x(i), Monomial::var(Var::x(i + 1))),
        (Var::x(i + 1), Monomial::var(Var::x(i))),
    ]
    .into();
    p.substitute(&map)
}

fn ac1_theorem() -> Result<String, String> {
    for m in 1..=4 {
        for n in 1..=4 {
            let p = BoxParams::new(m, n);
            let lhs = schur_box_sum(p, SchurBackend::Tableaux).map_err(|e| e.to_string())?;
            let rhs = box_det_ratio(p).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || {
                format!("box sum differs from determinant ratio at m={m} n={n}")
            })?;
        }
    }
    Ok("16 grid points equal".into())
}

fn ac2_macmahon() -> Result<String, String> {
    for m in 1..=3u32 {
        for n in 1..=3usize {
            let p = BoxParams::new(m, n);
            let brute = symmetric_pp_generating_function(n, m);
            let sum = schur_box_sum(p, SchurBackend::Tableaux).map_err(|e| e.to_string())?;
            let specialized = principal_specialization(&sum, &odd_exponents(n));
            let product = macmahon_product(p).map_err(|e| e.to_string())?;
            ensure(brute == specialized, || {
                format!("enumeration vs specialization at m={m} n={n}")
            })?;
            ensure(specialized == product, || {
                format!("specialization vs product at m={m} n={n}")
            })?;
        }
    }
    let count = symmetric_plane_partitions(3, 3).len();
    ensure(count == 112, || format!("enumeration count {count}"))?;
    let at_one = macmahon_product(BoxParams::new(3, 3))
        .unwrap()
        .eval_at_one();
    ensure(at_one == 112.into(), || {
        format!("product at q=1 is {at_one}")
    })?;
    Ok("9 grid points equal; (3,3) count 112".into())
}

fn ac3_weyl() -> Result<String, String> {
    for n in 1..=5 {
        let det = weyl_denominator(n, WeylForm::Determinant).map_err(|e| e.to_string())?;
        let prod = weyl_denominator(n, WeylForm::Product).map_err(|e| e.to_string())?;
        ensure(det == prod, || format!("forms differ at n={n}"))?;
    }
    for n in 1..=4 {
        let r = dn_checks(n).map_err(|e| e.to_string())?;
        ensure(r.pass(), || format!("D_{n} checks failed: {:?}", r.checks))?;
    }
    Ok("forms agree n<=5; D_n roots and leading term n<=4".into())
}

fn ac4_lemma() -> Result<String, String> {
    for n in 1..=6 {
        let (l, r) = lemma_sides(n);
        ensure(l == r, || format!("lemma sides differ at n={n}"))?;
    }
    Ok("sides agree n<=6".into())
}

fn ac4_f_and_antisymmetry() -> Result<String, String> {
    for n in 1..=5 {
        let f = f_function(n).map_err(|e| e.to_string())?;
        let all = LaurentPoly::monomial(Monomial::from_pairs((1..=n).map(|i| (Var::x(i), 1))));
        ensure(f == &LaurentPoly::one() - &all, || format!("F_{n} = {f}"))?;
        let b = f_boundary(n).map_err(|e| e.to_string())?;
        ensure(b.pass(), || format!("F boundary values fail at n={n}"))?;
    }
    for n in 2..=4 {
        let (l, _) = lemma_sides(n);
        for i in 1..n {
            ensure(swap_adjacent(&l, i) == -&l, || {
                format!("not antisymmetric at n={n}, swap {i}")
            })?;
        }
    }
    Ok("F = 1 - x1..xn for n<=5; antisymmetric n<=4".into())
}

fn ac5_expansions() -> Result<String, String> {
    let err = |e: symplane::Error| e.to_string();
    for m in 1..=3u32 {
        for n in 1..=3usize {
            let p = BoxParams::new(m, n);
            let (l4, r4) = eq4_sides(p).map_err(err)?;
            let (l5, r5) = eq5_sides(p).map_err(err)?;
            ensure(l4 == r4, || format!("eq4 at m={m} n={n}"))?;
            ensure(l5 == r5, || format!("eq5 at m={m} n={n}"))?;
            ensure(l4 == l5 && r4 == r5, || {
                format!("eq4/eq5 cross-link at m={m} n={n}")
            })?;
            let num = box_numerator_det(p).map_err(err)?;
            ensure(l4 == num, || {
                format!("eq4 left vs theorem numerator at m={m} n={n}")
            })?;
            let (l6, r6) = eq6_specialized(p).map_err(err)?;
            ensure(l6 == l5 && r6 == r5, || {
                format!("eq6 with t substituted vs eq5 at m={m} n={n}")
            })?;
        }
    }
    for n in 1..=3 {
        let (l, r) = eq6_sides(n).map_err(err)?;
        ensure(l == r, || format!("eq6 at n={n}"))?;
    }
    for n in 1..=5 {
        let v = vanishing_det(n).map_err(err)?;
        ensure(v.is_zero(), || format!("vanishing det at n={n}: {v}"))?;
    }
    Ok("eq4/eq5 m,n<=3; eq6 n<=3 and its t-specialization; vanishing n<=5".into())
}

fn ac6_gordon() -> Result<String, String> {
    for m in 1..=4u32 {
        for n in 1..=4usize {
            let p = BoxParams::new(m, n);
            let sum = schur_box_sum(p, SchurBackend::Tableaux).map_err(|e| e.to_string())?;
            let lhs = principal_specialization(&sum, &descending_exponents(n));
            let rhs = gordon_product(p).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("Gordon at m={m} n={n}"))?;
        }
    }
    Ok("16 grid points equal".into())
}

fn ac7_bijection() -> Result<String, String> {
    let mut objects = 0;
    for n in 0..=3usize {
        for m in 0..=3u32 {
            let sym = symmetric_plane_partitions(n, m);
            let cols = column_strict_odd_pps(n, m as usize);
            let mut sw: Vec<u64> = sym.iter().map(|s| s.weight()).collect();
            let mut cw: Vec<u64> = cols.iter().map(|c| c.weight()).collect();
            sw.sort();
            cw.sort();
            ensure(sw == cw, || {
                format!("weight multisets differ at n={n} m={m}")
            })?;
            for sp in &sym {
                let cs = fold(sp, m).map_err(|e| e.to_string())?;
                ensure(cs.weight() == sp.weight(), || {
                    format!("fold weight at {:?}", sp.heights)
                })?;
                ensure(unfold(&cs).as_ref() == Ok(sp), || {
                    format!("unfold(fold) at {:?}", sp.heights)
                })?;
            }
            for cs in &cols {
                let sp = unfold(cs).map_err(|e| e.to_string())?;
                ensure(sp.is_symmetric() && sp.is_bounded(m), || {
                    format!("unfold class at {:?}", cs.heights)
                })?;
                ensure(fold(&sp, m).as_ref() == Ok(cs), || {
                    format!("fold(unfold) at {:?}", cs.heights)
                })?;
            }
            objects += sym.len();
        }
    }
    Ok(format!("{objects} objects round-trip"))
}

fn ac8_backends() -> Result<String, String> {
    let shapes = partitions_in_box(4, 4);
    for lambda in &shapes {
        let a = schur_via_tableaux(lambda, 4);
        let b = schur_via_bialternant(lambda, 4).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("backends differ at {lambda}"))?;
    }
    Ok(format!("{} shapes agree", shapes.len()))
}

fn run_cases<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|e| format!("{name}: {e}"))
}

fn ac9_infrastructure() -> Result<String, String> {
    run_cases(
        "exact_div round trip",
        (poly_strategy(), nonzero_poly_strategy()),
        |(a, b)| {
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
            Ok(())
        },
    )?;
    run_cases(
        "determinant alternation",
        (matrix3_strategy(), 1usize..=3, 1usize..=2),
        |(rows, a, step)| {
            let b = (a + step - 1) % 3 + 1;
            let mut m = PolyMatrix::from_rows(rows).unwrap();
            let d = determinant(&m).unwrap();
            m.swap_rows(a, b);
            prop_assert_eq!(determinant(&m).unwrap(), -d);
            Ok(())
        },
    )?;
    run_cases(
        "substitution homomorphism",
        (poly_strategy(), poly_strategy(), assignment_strategy()),
        |(a, b, asg)| {
            let map: HashMap<Var, Monomial> = asg.into_iter().collect();
            prop_assert_eq!(
                (&a * &b).substitute(&map),
                &a.substitute(&map) * &b.substitute(&map)
            );
            Ok(())
        },
    )?;
    Ok("3 x 200 randomized instances".into())
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let outcomes = vec![
        criterion(
            "AC1 theorem: box sum = determinant ratio, m,n<=4",
            Some(secs(60)),
            ac1_theorem,
        ),
        criterion("AC2 MacMahon chain, m,n<=3", Some(secs(30)), ac2_macmahon),
        criterion("AC3 Weyl denominator and D_n", None, ac3_weyl),
        criterion("AC4 lemma sides, n<=6", Some(secs(10)), ac4_lemma),
        criterion(
            "AC4 F function and antisymmetry",
            None,
            ac4_f_and_antisymmetry,
        ),
        criterion(
            "AC5 eq4/eq5/eq6 and vanishing determinant",
            None,
            ac5_expansions,
        ),
        criterion("AC6 Gordon identity, m,n<=4", None, ac6_gordon),
        criterion("AC7 fold/unfold bijection, m,n<=3", None, ac7_bijection),
        criterion(
            "AC8 tableau = bialternant, lambda in 4^4",
            None,
            ac8_backends,
        ),
        criterion("AC9 infrastructure properties", None, ac9_infrastructure),
    ];
    println!();
    for o in &outcomes {
        println!(
            "[{}] {:<50} {:>9.3}s  {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.id,
            o.elapsed.as_secs_f64(),
            o.detail
        );
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

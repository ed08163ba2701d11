//! One pass/fail line per acceptance criterion. Built without the libtest
//! harness so the lines show in plain `cargo test` output.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use rootspin_core::classify::{coxeter_order, identify, signature};
use rootspin_core::clifford::{reflect, rotate, rotor_from_vectors, vec4_to_spinor, Multivector};
use rootspin_core::io::{from_json, to_json, to_off};
use rootspin_core::presets::{self, Preset};
use rootspin_core::roots::{normalize_roots, verify_root_axioms, DEFAULT_ROOT_CAP};
use rootspin_core::spinor::{check_self_dual, generate_rotor_group, induce_2d, induce_4d_with_group, DEFAULT_ROTOR_CAP};
use rootspin_core::survey::survey;
use rootspin_core::{Field, Rational, RootSystem, Scalar, VecE};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sys(name: &str) -> RootSystem {
    Preset::by_name(name).unwrap().root_system(DEFAULT_ROOT_CAP).unwrap()
}

fn signed_units(dim: usize) -> Vec<VecE> {
    let mut out = Vec::new();
    for i in 0..dim {
        let e = VecE::unit(i, dim, Field::RATIONAL).unwrap();
        out.push(e.neg().unwrap());
        out.push(e);
    }
    out.sort();
    out
}

fn criterion_1() -> Outcome {
    let phi = sys("A1xA1xA1");
    ensure!(phi.roots() == signed_units(3).as_slice(), "closure is {:?}", phi.roots());
    let induced = induce_4d_with_group(&phi, DEFAULT_ROTOR_CAP).map_err(|e| e.to_string())?;
    ensure!(induced.group.order() == 8, "rotor group order {}", induced.group.order());
    ensure!(induced.system.roots() == signed_units(4).as_slice(), "induced set differs from ±e_i");
    let name = identify(&signature(&induced.system).unwrap()).unwrap();
    ensure!(name == "A1×A1×A1×A1", "identified as {name}");
    ensure!(induced.report.passes(), "axioms fail");
    Ok("6 roots, 8 rotors, 16-cell, A1×A1×A1×A1".into())
}

fn criterion_2() -> Outcome {
    let mut seen = Vec::new();
    for (input, roots, induced_count, target) in [("A3", 12, 24, "D4"), ("B3", 18, 48, "F4"), ("H3", 30, 120, "H4")] {
        let phi = sys(input);
        ensure!(phi.len() == roots, "{input}: {} roots", phi.len());
        let induced = induce_4d_with_group(&phi, DEFAULT_ROTOR_CAP).map_err(|e| e.to_string())?.system;
        ensure!(induced.len() == induced_count, "{input}: {} induced", induced.len());
        let name = identify(&signature(&induced).unwrap()).unwrap();
        ensure!(name == target, "{input} induced {name}");
        seen.push(format!("{input}({roots})→{target}({induced_count})"));
    }
    Ok(seen.join(", "))
}

fn criterion_3() -> Outcome {
    let catalog = presets::rank3_catalog().unwrap();
    for p in &catalog {
        let phi = p.root_system(DEFAULT_ROOT_CAP).unwrap();
        let induced = induce_4d_with_group(&phi, DEFAULT_ROTOR_CAP).map_err(|e| format!("{}: {e}", p.name()))?;
        ensure!(verify_root_axioms(&induced.system).unwrap().passes(), "{}: induced axioms fail", p.name());
        ensure!(induced.group.order() % 2 == 0, "{}: odd order {}", p.name(), induced.group.order());
    }
    Ok(format!("{} inputs, all induced sets are root systems of even order", catalog.len()))
}

fn criterion_4() -> Outcome {
    let mut pairs = Vec::new();
    for p in presets::rank3_catalog().unwrap() {
        let phi = p.root_system(DEFAULT_ROOT_CAP).unwrap();
        let induced = induce_4d_with_group(&phi, DEFAULT_ROTOR_CAP).unwrap().system;
        let w = coxeter_order(&phi, DEFAULT_ROTOR_CAP).map_err(|e| e.to_string())?;
        ensure!(induced.len() == w, "{}: |induced| {} vs |W| {w}", p.name(), induced.len());
        pairs.push(format!("{w}={w}"));
    }
    let expected = ["8=8", "24=24", "48=48", "120=120"];
    ensure!(
        [0usize, 5, 6, 7].iter().zip(expected).all(|(&i, e)| pairs[i] == e),
        "preset orders {pairs:?}"
    );
    Ok(pairs.join(" "))
}

fn criterion_5() -> Outcome {
    for n in 2..=8u32 {
        let phi = presets::dihedral(n).unwrap().root_system(DEFAULT_ROOT_CAP).unwrap();
        let report = check_self_dual(&phi).map_err(|e| e.to_string())?;
        ensure!(report.self_dual, "{report}");
        let w = coxeter_order(&phi, DEFAULT_ROTOR_CAP).unwrap();
        ensure!(w == 2 * n as usize && phi.len() == w, "I2({n}): |W| {w}, {} roots", phi.len());
    }
    Ok("I2(2..8) self-dual, |W| = 2n = |Φ| (A2 6=6, B2 8=8, G2 12=12)".into())
}

fn criterion_6() -> Outcome {
    let table = survey().map_err(|e| e.to_string())?;
    ensure!(
        identify(&table.counterexample).unwrap() == "I2(4)×A1×A1",
        "counterexample signature not recognized"
    );
    ensure!(table.rows.len() == 8, "{} survey rows", table.rows.len());
    ensure!(table.counterexample_absent(), "found for {:?}", table.counterexample_hits);
    Ok(format!("I2(4)×A1×A1 absent from {} induced signatures", table.rows.len()))
}

const CLIFFORD_CASES: u32 = 1_000;

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-30i64..=30, 1i64..=9, -30i64..=30, 1i64..=9).prop_map(|(a, b, c, d)| {
        Scalar::quadratic(Rational::new(a, b).unwrap(), Rational::new(c, d).unwrap(), 5).unwrap()
    })
}

fn criterion_7() -> Outcome {
    let h3 = sys("H3");
    let pool = normalize_roots(&h3).unwrap();
    let mut runner = TestRunner::new(Config {
        cases: CLIFFORD_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    let mv = || prop::collection::vec(small_scalar(), 8).prop_map(|c| Multivector::from_coeffs(3, c).unwrap());
    let vec3 = || prop::collection::vec(small_scalar(), 3).prop_map(|c| Multivector::vector(&VecE::new(c).unwrap()).unwrap());
    let unit = {
        let pool = pool.clone();
        move || (0..pool.len()).prop_map({
            let pool = pool.clone();
            move |i| Multivector::vector(&pool[i]).unwrap()
        })
    };

    runner
        .run(&(mv(), mv(), mv()), |(a, b, c)| {
            let l = a.geometric_product(&b).unwrap().geometric_product(&c).unwrap();
            let r = a.geometric_product(&b.geometric_product(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
            Ok(())
        })
        .map_err(|e| format!("associativity: {e}"))?;
    runner
        .run(&(vec3(), unit()), |(a, n)| {
            prop_assert_eq!(reflect(&reflect(&a, &n).unwrap(), &n).unwrap(), a);
            Ok(())
        })
        .map_err(|e| format!("reflection involution: {e}"))?;
    runner
        .run(&(vec3(), unit(), unit()), |(a, m, n)| {
            let r = rotor_from_vectors(&m, &n).unwrap();
            prop_assert_eq!(rotate(&a, &r).unwrap(), reflect(&reflect(&a, &n).unwrap(), &m).unwrap());
            Ok(())
        })
        .map_err(|e| format!("rotation as two reflections: {e}"))?;
    runner
        .run(&prop::collection::vec(small_scalar(), 4), |c| {
            let v = VecE::new(c).unwrap();
            let psi = vec4_to_spinor(&v).unwrap();
            let n = psi.geometric_product(&psi.reverse().unwrap()).unwrap();
            prop_assert!(n.is_scalar());
            prop_assert_eq!(n.coeff(0), &v.norm_sq().unwrap());
            Ok(())
        })
        .map_err(|e| format!("spinor norm: {e}"))?;

    // every generated rotor of the H3 group is unit
    let group = generate_rotor_group(&pool, DEFAULT_ROTOR_CAP).unwrap();
    for r in group.elements() {
        let n = r.as_multivector().geometric_product(&r.reverse().unwrap().into_multivector()).unwrap();
        ensure!(n.is_scalar() && n.coeff(0).is_one(), "R R~ != 1 for {}", r.as_multivector());
    }
    Ok(format!("{CLIFFORD_CASES} cases per property, {} generated rotors unit", group.order()))
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for (input, target, order) in [("A1xA1xA1", "A1×A1×A1×A1", 16), ("A3", "D4", 192), ("B3", "F4", 1152), ("H3", "H4", 14400)] {
        let induced = induce_4d_with_group(&sys(input), DEFAULT_ROTOR_CAP).unwrap().system;
        let start = Instant::now();
        let w = coxeter_order(&induced, DEFAULT_ROTOR_CAP).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        ensure!(w == order, "{target}: |W| = {w}, expected {order}");
        if target == "H4" {
            ensure!(took < Duration::from_secs(30), "H4 closure took {took:?}");
        }
        parts.push(format!("{target} {w} ({:.2}s)", took.as_secs_f64()));
    }
    Ok(parts.join(", "))
}

fn criterion_9() -> Outcome {
    let mut systems = Vec::new();
    for p in presets::rank3_catalog().unwrap() {
        let phi = p.root_system(DEFAULT_ROOT_CAP).unwrap();
        systems.push(induce_4d_with_group(&phi, DEFAULT_ROTOR_CAP).unwrap().system);
        systems.push(phi);
    }
    for n in 2..=8 {
        let phi = presets::dihedral(n).unwrap().root_system(DEFAULT_ROOT_CAP).unwrap();
        systems.push(induce_2d(&phi).unwrap());
        systems.push(phi);
    }
    for name in ["D4", "F4", "H4"] {
        systems.push(sys(name));
    }
    for phi in &systems {
        let text = to_json(phi).map_err(|e| e.to_string())?;
        let back = from_json(&text, "mem").map_err(|e| format!("{}: {e}", phi.name()))?;
        ensure!(&back == phi, "{}: reloaded system differs", phi.name());
        ensure!(to_json(&back).unwrap() == text, "{}: JSON not bit-identical", phi.name());
        let off = to_off(phi);
        let v: usize = off.lines().nth(1).and_then(|l| l.split(' ').next()).unwrap().parse().unwrap();
        ensure!(v == phi.len() && off.lines().count() == 2 + v, "{}: OFF has {v} vertices", phi.name());
    }
    Ok(format!("{} systems round-trip bit-identically, OFF V = root count", systems.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("A1³ worked example", criterion_1),
        ("induction table A3→D4, B3→F4, H3→H4", criterion_2),
        ("induced sets are root systems, even spinor orders", criterion_3),
        ("double cover |induced| = |W|", criterion_4),
        ("rank-2 self-duality", criterion_5),
        ("non-existence of I2(4)×A1×A1", criterion_6),
        ("Clifford kernel properties", criterion_7),
        ("induced Coxeter orders", criterion_8),
        ("persistence", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (title, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS  {title}: {detail}"),
            Err(why) => {
                println!("criterion {n}: FAIL  {title}: {why}");
                failed.push(n);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}

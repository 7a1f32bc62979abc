//! Acceptance criteria.  Every criterion prints one PASS/FAIL line with its
//! runtime and budget; the test fails if any criterion fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use toric_poset::arith::rat;
use toric_poset::poset::{boolean_algebra, cube_lattice};
use toric_poset::simplicial::{self, PhiCheckTable};
use toric_poset::toric::{self, t_coordinates};
use toric_poset::verify::{self, Check, Suite};
use toric_poset::{LaurentPoly, Rational};

struct Outcome {
    ok: bool,
    detail: String,
}

fn failing(checks: &[Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| !c.holds())
        .map(|c| format!("{} ({} of {} cases failed: {:?})", c.id, c.failed, c.cases, c.failures.first()))
        .collect()
}

fn suite_outcome(suite: Suite, ids: &[&str]) -> Outcome {
    let report = verify::run(suite, None).expect("suite runs at its default size");
    let checks = &report.suites[0].checks;
    let missing: Vec<&&str> = ids.iter().filter(|id| !checks.iter().any(|c| c.id == **id)).collect();
    let bad = failing(checks);
    let cases: usize = checks.iter().map(|c| c.cases).sum();
    Outcome {
        ok: bad.is_empty() && missing.is_empty(),
        detail: if bad.is_empty() && missing.is_empty() {
            format!("{cases} cases")
        } else {
            format!("failing {bad:?}, missing {missing:?}")
        },
    }
}

fn merge(a: Outcome, b: Outcome) -> Outcome {
    Outcome {
        ok: a.ok && b.ok,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

fn fact(ok: bool, what: &str) -> Outcome {
    Outcome {
        ok,
        detail: if ok { what.to_string() } else { format!("{what} FAILED") },
    }
}

fn criterion(results: &mut Vec<bool>, id: u32, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let ok = out.ok && took <= budget;
    println!(
        "{} criterion {id}: {title} [{:.2}s / budget {}s] {}",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        budget.as_secs(),
        out.detail
    );
    results.push(ok);
}

/// `t_{n,i}` for `n <= 5` in `t`-coordinates, transcribed from the published table.
const TABLE: [&[&[i64]]; 5] = [
    &[&[1]],
    &[&[1, -1], &[0, 1]],
    &[&[1, -2], &[0, 1], &[0, 1]],
    &[&[1, -3, 0], &[0, 1, -1], &[0, 1, 1], &[0, 1, 0]],
    &[&[1, -4, 0], &[0, 1, -3], &[0, 1, 1], &[0, 1, 2], &[0, 1, 0]],
];

fn table1() -> Outcome {
    let mut rec = PhiCheckTable::new();
    let mut bad = Vec::new();
    for (n, row) in TABLE.iter().enumerate() {
        let n = n as u32 + 1;
        for (i, want) in row.iter().enumerate() {
            let want: Vec<Rational> = want.iter().map(|&c| rat(c)).collect();
            let by_enum = simplicial::phi_check_enum(n, i as u32).unwrap();
            let by_rec = rec.phi_check(n, i as u32).unwrap();
            for phi in [&by_enum, &by_rec] {
                if t_coordinates(&simplicial::t_ni(phi).unwrap()) != want {
                    bad.push(format!("n={n} i={i}"));
                }
            }
        }
    }
    let suite = suite_outcome(Suite::Table1, &["phi-check-routes", "t-ni-table", "t-ni-closed-form"]);
    merge(fact(bad.is_empty(), &format!("15 table entries by 2 routes, mismatches {bad:?}")), suite)
}

fn gessel() -> Outcome {
    let x = |c: &[i64]| LaurentPoly::from_int_coeffs(c);
    let direct = fact(
        simplicial::gessel_cube_g(3) == x(&[1, 4]) && simplicial::gessel_cube_g(2) == x(&[1, 1]),
        "g(L_3) = 1 + 4x, g(L_2) = 1 + x",
    );
    let lattice = fact(
        toric::stanley_f_g(&cube_lattice(6).unwrap()).unwrap().g == simplicial::gessel_cube_g_binomial(6),
        "face lattice of the 6-cube",
    );
    merge(merge(direct, lattice), suite_outcome(Suite::Gessel, &["gessel-vs-face-lattice", "gessel-forms"]))
}

fn appendix() -> Outcome {
    let report = verify::run(Suite::Appendix, None).unwrap();
    let checks = &report.suites[0].checks;
    let bad = failing(checks);
    let closed = checks.iter().find(|c| c.id == "st-h-closed").unwrap();
    let notes = closed.notes.as_ref().unwrap();
    let literal = &notes["literal_catalan_indices"];
    // Both readings of the weighting are evaluated in the report; the
    // displayed exponent is the one that reproduces st.
    println!(
        "      appendix: literal Catalan indices disagree with enumeration on {} of {} sets",
        literal["disagreements"], literal["compared"]
    );
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() { format!("{} sets, prose reading is the x -> 1/x image", closed.cases) } else { format!("{bad:?}") },
    }
}

fn dual_simplicial() -> Outcome {
    let h: Vec<BigInt> = [1, 3, 3, 1].iter().map(|&v| BigInt::from(v)).collect();
    let cube = fact(
        simplicial::st_dual_simplicial(&h, 3).unwrap().poly == LaurentPoly::from_int_coeffs(&[0, 5, 0, 1])
            && simplicial::g_dual_monotone(&h, 3).unwrap() == LaurentPoly::from_int_coeffs(&[1, 4]),
        "3-cube st = x^3 + 5x, g = 1 + 4x",
    );
    let boolean = fact(
        (2..=7).all(|r| {
            let b = boolean_algebra(r).unwrap();
            let h = simplicial::dual_h_from_f(&b).unwrap();
            simplicial::st_dual_simplicial(&h, r - 1).unwrap().poly == toric::t_poly(r as i64 - 1)
        }),
        "Boolean algebras give t_n",
    );
    merge(
        merge(cube, boolean),
        suite_outcome(Suite::DualSimplicial, &["dual-forms-vs-direct", "telescoping", "sigma", "narayana"]),
    )
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    criterion(&mut results, 1, "t_{n,i} table for n <= 5 by both Φ̌ routes", Duration::from_secs(10), table1);
    criterion(&mut results, 2, "four short toric routes on families and duals", Duration::from_secs(120), || {
        suite_outcome(Suite::FourRoutes, &["st-fine", "st-additive-variant", "st-cd-operators"])
    });
    criterion(&mut results, 3, "Gessel's cube formula, both forms", Duration::from_secs(120), gessel);
    criterion(&mut results, 4, "reflection principle and cd-word path model", Duration::from_secs(300), || {
        suite_outcome(Suite::Reflection, &["ce-reflection", "cd-word-paths", "ce-sum", "cd-sum"])
    });
    criterion(&mut results, 5, "st_h closed form and st = sum h_S st_h", Duration::from_secs(300), appendix);
    criterion(&mut results, 6, "dual simplicial formulas end to end", Duration::from_secs(60), dual_simplicial);
    criterion(&mut results, 7, "structural invariants", Duration::from_secs(60), || {
        suite_outcome(
            Suite::Structural,
            &["l-vanishes-off-even-sets", "cd-integrality", "cd-duality-reversal", "f-mult-symmetry", "st-add-symmetry", "st-closed-interval"],
        )
    });
    criterion(&mut results, 8, "x <-> Q, x <-> t, Morgan-Voyce and operator actions", Duration::from_secs(10), || {
        suite_outcome(Suite::Bases, &["x-to-q", "x-to-t", "morgan-voyce", "operators-on-q", "operators-on-t"])
    });
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria pass", results.len());
    assert_eq!(passed, results.len());
}

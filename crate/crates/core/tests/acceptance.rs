//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hlvertex::coeffs::{QPoly, QRat};
use hlvertex::kostka::KostkaKey;
use hlvertex::rewrite::{
    evaluation_equal, normalize, parse_word, rewrite_dominant, shift_support, OpSum, ShiftDirection,
};
use hlvertex::suites::{
    col_skew_random, column_commutation, dominance_example, engine_grid, engine_random,
    foulkes_suite, grid_keys, identity_suite, independence_suite, jing_suite, random_keys,
    relation_sample, relation_suite, shift_example, specialization_q_one_for,
    specialization_q_zero, SuiteReport,
};
use hlvertex::symfunc::{expand_in_variables, plethysm_constant, PowerSumSubst, SymFunc};

const SEED: u64 = 20_240_601;
const TEN_MINUTES: Duration = Duration::from_secs(600);

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    summary: String,
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let passed = reports.iter().all(SuiteReport::ok);
    let mut parts: Vec<String> = reports
        .iter()
        .map(|r| format!("{} {}/{}", r.name, r.passed(), r.cases.len()))
        .collect();
    for r in reports {
        for c in r.failures().take(3) {
            parts.push(format!(
                "failed: {} {}",
                c.label,
                c.detail.clone().unwrap_or_default()
            ));
        }
    }
    Outcome {
        passed,
        summary: parts.join("; "),
    }
}

fn poly(terms: &[(i64, i64)]) -> QPoly {
    QPoly::from_terms(terms.iter().copied())
}

fn plethysm_examples() -> Outcome {
    let start = Instant::now();
    let two = expand_in_variables(&SymFunc::e(2), 2);
    let two_ok = two.len() == 1 && two.get(&vec![1, 1]).is_some_and(QRat::is_one);
    let one_minus_q = poly(&[(0, 1), (1, -1)]);
    let subst = PowerSumSubst::alphabet(QRat::new(QPoly::one(), one_minus_q.clone()).unwrap());
    let got = plethysm_constant(&SymFunc::e(2), &subst);
    let want = QRat::new(QPoly::q(), &one_minus_q * &poly(&[(0, 1), (2, -1)])).unwrap();
    let elapsed = start.elapsed();
    Outcome {
        passed: two_ok && got == want && elapsed < Duration::from_secs(1),
        summary: format!("e2[x1+x2] ok={two_ok}; e2[1/(1-q)] = {got}; {elapsed:.2?}"),
    }
}

fn engine_equivalence() -> Outcome {
    let grid = engine_grid(4, 3, 6);
    let random = engine_random(5, 200, 3, 6, SEED);
    from_reports(&[grid, random])
}

fn worked_examples() -> Outcome {
    let mut notes = Vec::new();
    let mut passed = true;

    let (input, want) = dominance_example();
    let literal = "(q^2-q) * H[3,3]H[3,0] + q^2 * H[4,2]H[2,1] - q^3 * H[4,3]H[1,1] \
                   + (-q^3+q^2) * H[4,3]H[2,0] + (q^4-q^3) * H[4,4]H[1,0]";
    match rewrite_dominant(&input) {
        Ok(got) => {
            let ok = got == want
                && got.to_string() == literal
                && evaluation_equal(&OpSum::word(input.clone()), &got, 5);
            passed &= ok;
            notes.push(format!(
                "dominance {}",
                if ok { "reproduced" } else { "MISMATCH" }
            ));
        }
        Err(e) => {
            passed = false;
            notes.push(format!("dominance error {e}"));
        }
    }

    let (input, want) = shift_example();
    match shift_support(&input, ShiftDirection::LeftToRight) {
        Ok(got) => {
            let ok = got == want && evaluation_equal(&OpSum::word(input.clone()), &got, 5);
            passed &= ok;
            notes.push(format!(
                "shift {}",
                if ok { "reproduced" } else { "MISMATCH" }
            ));
            // a variant ending in H[6]H[2,1] is one degree short and must be rejected
            let mut typo: Vec<_> = want
                .terms()
                .iter()
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect();
            for (w, _) in typo.iter_mut() {
                if w.to_string() == "H[6]H[2,2]" {
                    *w = parse_word("H[6]H[2,1]").unwrap();
                }
            }
            let typo = normalize(typo);
            let typo_rejected = typo != got && !evaluation_equal(&OpSum::word(input), &typo, 3);
            passed &= typo_rejected;
            notes.push(format!("H[6]H[2,1] variant rejected={typo_rejected}"));
        }
        Err(e) => {
            passed = false;
            notes.push(format!("shift error {e}"));
        }
    }
    Outcome {
        passed,
        summary: notes.join("; "),
    }
}

fn identity_certificates() -> Outcome {
    let identities = identity_suite(6);
    let relations = relation_suite(&relation_sample(SEED, 50, 14), 6);
    from_reports(&[identities, relations])
}

fn specializations() -> Outcome {
    let mut gammas: Vec<_> = grid_keys(4, 3, 6)
        .into_iter()
        .map(|k: KostkaKey| k.gamma)
        .collect();
    gammas.extend(random_keys(5, 200, 3, 6, SEED).into_iter().map(|k| k.gamma));
    let q_one = specialization_q_one_for(gammas);
    let q_zero = specialization_q_zero(4, 3, 6);
    from_reports(&[q_one, q_zero])
}

fn columns() -> Outcome {
    from_reports(&[column_commutation(5), col_skew_random(4, 100, SEED)])
}

fn independence() -> Outcome {
    from_reports(&[independence_suite(3, 2)])
}

fn conjugate_operators() -> Outcome {
    from_reports(&[jing_suite(3, 3, 6)])
}

fn foulkes() -> Outcome {
    from_reports(&[foulkes_suite(5)])
}

fn performance(earlier: &[(usize, Duration)]) -> Outcome {
    let start = Instant::now();
    let run = Command::new(env!("CARGO_BIN_EXE_hlvertex"))
        .args([
            "table",
            "--eta",
            "2,2",
            "--max-degree",
            "6",
            "--method",
            "both",
        ])
        .output();
    let elapsed = start.elapsed();
    let table_ok = matches!(&run, Ok(o) if o.status.success() && !o.stdout.is_empty());
    let slow: Vec<String> = earlier
        .iter()
        .filter(|(_, d)| *d > TEN_MINUTES)
        .map(|(i, d)| format!("criterion {i} took {d:.0?}"))
        .collect();
    let rows = run
        .map(|o| {
            String::from_utf8_lossy(&o.stdout)
                .lines()
                .count()
                .saturating_sub(1)
        })
        .unwrap_or(0);
    Outcome {
        passed: table_ok && elapsed < Duration::from_secs(60) && slow.is_empty(),
        summary: format!(
            "table --eta 2,2 --max-degree 6 --method both: {rows} rows in {elapsed:.2?}; {}",
            if slow.is_empty() {
                "every criterion under 10 minutes".to_string()
            } else {
                slow.join(", ")
            }
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("plethysm examples", plethysm_examples),
        ("engine equivalence", engine_equivalence),
        ("worked rewriting examples", worked_examples),
        ("identity and relation certificates", identity_certificates),
        ("q=1 and q=0 specializations", specializations),
        ("column commutation and column skew", columns),
        ("independence test vectors", independence),
        ("conjugate operator words", conjugate_operators),
        ("Kostka-Foulkes sanity", foulkes),
    ];
    let mut all = true;
    let mut times = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        times.push((i + 1, elapsed));
        all &= outcome.passed;
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "{tag} {:>2} {name} [{elapsed:.2?}]: {}",
            i + 1,
            outcome.summary
        );
    }
    let outcome = performance(&times);
    all &= outcome.passed;
    let tag = if outcome.passed { "PASS" } else { "FAIL" };
    println!("{tag} 10 performance sanity: {}", outcome.summary);
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

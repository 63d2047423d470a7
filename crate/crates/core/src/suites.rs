//! Self-check suites shared by `hlvertex check` and the acceptance target.
//!
//! Every case is exact: polynomial and symmetric-function equality, never a
//! floating tolerance. Random cases come from a seeded generator, so a run is
//! reproducible from `(suite, max_degree, seed)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeffs::{QPoly, QRat};
use crate::error::{Error, Result};
use crate::kostka::{
    check_col_skew, keys_of_degree, kostka_both, kostka_kostant, schur_block_product, KostkaKey,
};
use crate::rewrite::{
    evaluation_equal, first_nonzero_witness, normalize, one_more_identity, parse_word,
    quad_identity, relation_instance, rewrite_dominant, same_width_identity, shift_support,
    swap_factors, OpSum, OpWord, Relation, ShiftDirection,
};
use crate::symfunc::{
    dual_basis_pair_check, elementary_perp, expand_in_variables, multiply, plethysm_constant,
    schur_plethysm, Basis, PowerSumSubst, SymFunc,
};
use crate::vertexop::{apply_b_word, apply_f, apply_h, apply_h_word};
use crate::weights::{
    alpha_beta, straighten, vertical_strip_shrink, BlockedWeight, DominantWeight, Partition, Shape,
    Straightened, Weight,
};

/// One checked statement.
#[derive(Clone, Debug)]
pub struct Case {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

impl Case {
    fn new(label: impl Into<String>, passed: bool) -> Self {
        Case {
            label: label.into(),
            passed,
            detail: None,
        }
    }

    fn failing(label: impl Into<String>, detail: impl Into<String>) -> Self {
        Case {
            label: label.into(),
            passed: false,
            detail: Some(detail.into()),
        }
    }

    fn from_result(label: impl Into<String>, r: Result<bool>) -> Self {
        match r {
            Ok(b) => Case::new(label, b),
            Err(e) => Case::failing(label, e.to_string()),
        }
    }

    fn equal<T: PartialEq + fmt::Display>(label: impl Into<String>, got: &T, want: &T) -> Self {
        if got == want {
            Case::new(label, true)
        } else {
            Case::failing(label, format!("got {got}, want {want}"))
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    fn new(name: impl Into<String>, cases: Vec<Case>) -> Self {
        SuiteReport {
            name: name.into(),
            cases,
        }
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0 && !self.cases.is_empty()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed)
    }

    /// Concatenates several reports under one name.
    pub fn merge(name: impl Into<String>, parts: Vec<SuiteReport>) -> Self {
        SuiteReport::new(name, parts.into_iter().flat_map(|r| r.cases).collect())
    }

    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures()
            .map(|c| json!({ "label": c.label, "detail": c.detail }))
            .collect();
        json!({
            "suite": self.name,
            "passed": self.passed(),
            "failed": self.failed(),
            "failures": failures,
        })
    }
}

/// Named suites for `check --suite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Plethysm,
    Engines,
    Specialization,
    Identities,
    Rewrite,
    Colskew,
    Independence,
    Jing,
    Foulkes,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Plethysm,
        Suite::Engines,
        Suite::Specialization,
        Suite::Identities,
        Suite::Rewrite,
        Suite::Colskew,
        Suite::Independence,
        Suite::Jing,
        Suite::Foulkes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Plethysm => "plethysm",
            Suite::Engines => "engines",
            Suite::Specialization => "specialization",
            Suite::Identities => "identities",
            Suite::Rewrite => "rewrite",
            Suite::Colskew => "colskew",
            Suite::Independence => "independence",
            Suite::Jing => "jing",
            Suite::Foulkes => "foulkes",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// Knobs shared by all suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    /// Degree bound for evaluation certificates and grid sizes.
    pub max_degree: u32,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_degree: 5,
            seed: 1,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> SuiteReport {
    let d = opts.max_degree;
    let report = match suite {
        Suite::Plethysm => plethysm_suite(d),
        Suite::Engines => SuiteReport::merge(
            "engines",
            vec![
                engine_grid(4, 3, d),
                engine_random(5, 40, 3, d.max(1), opts.seed),
            ],
        ),
        Suite::Specialization => SuiteReport::merge(
            "specialization",
            vec![
                specialization_q_one(3, 3, d),
                specialization_q_zero(4, 3, d),
            ],
        ),
        Suite::Identities => SuiteReport::merge(
            "identities",
            vec![
                identity_suite(d),
                relation_suite(&relation_sample(opts.seed, 4, 9), d),
            ],
        ),
        Suite::Rewrite => rewrite_suite(d, opts.seed),
        Suite::Colskew => SuiteReport::merge(
            "colskew",
            vec![column_commutation(d), col_skew_random(4, 100, opts.seed)],
        ),
        Suite::Independence => independence_suite(3, 2),
        Suite::Jing => jing_suite(3, 3, d),
        Suite::Foulkes => foulkes_suite(d),
    };
    SuiteReport::new(suite.name(), report.cases)
}

fn q_rat(terms: &[(i64, i64)]) -> QRat {
    QRat::from(QPoly::from_terms(terms.iter().copied()))
}

fn partition(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partition")
}

// ---------------------------------------------------------------- plethysm

/// Small plethysm identities plus dual-basis and round-trip checks up to
/// degree `d`.
pub fn plethysm_suite(d: u32) -> SuiteReport {
    let mut cases = Vec::new();
    let e2 = SymFunc::e(2);
    let two_vars = expand_in_variables(&e2, 2);
    let want: Vec<(Vec<u32>, QRat)> = vec![(vec![1, 1], QRat::one())];
    let got: Vec<(Vec<u32>, QRat)> = two_vars.into_iter().collect();
    cases.push(Case::new("e2[x1+x2] = x1 x2", got == want));

    let geometric = PowerSumSubst::alphabet(
        QRat::new(QPoly::one(), QPoly::from_terms([(0, 1), (1, -1)])).expect("nonzero"),
    );
    let got = plethysm_constant(&e2, &geometric);
    let want = QRat::new(
        QPoly::q(),
        &QPoly::from_terms([(0, 1), (1, -1)]) * &QPoly::from_terms([(0, 1), (2, -1)]),
    )
    .expect("nonzero");
    cases.push(Case::equal("e2[1/(1-q)] = q/((1-q)(1-q^2))", &got, &want));

    for (name, s) in [
        ("X(1-q)", PowerSumSubst::x_times_one_minus_q()),
        ("X(q-1)", PowerSumSubst::x_times_q_minus_one()),
    ] {
        cases.push(Case::from_result(
            format!("dual bases under {name} up to degree {d}"),
            dual_basis_pair_check(&s, d),
        ));
    }
    for lambda in Partition::up_to(d, usize::MAX) {
        let f = SymFunc::schur(lambda.clone());
        let back = apply_f(&apply_f(&f, true), false);
        cases.push(Case::new(
            format!("F F^-1 s[{lambda}] = s[{lambda}]"),
            back == f,
        ));
    }
    SuiteReport::new("plethysm", cases)
}

// ---------------------------------------------------------------- engines

/// Keys on every shape of total `n <= max_n` with all entries in
/// `[0, max_entry]` and `|λ| = |γ| <= max_size`.
pub fn grid_keys(max_n: usize, max_entry: i64, max_size: u32) -> Vec<KostkaKey> {
    let mut keys = Vec::new();
    for n in 1..=max_n {
        for eta in Shape::compositions(n) {
            for d in 0..=max_size {
                keys.extend(keys_of_degree(&eta, d).into_iter().filter(|k| {
                    k.lambda.entries().iter().all(|&x| x <= max_entry)
                        && k.gamma.flatten().entries().iter().all(|&x| x <= max_entry)
                }));
            }
        }
    }
    keys
}

fn engines_agree(key: &KostkaKey) -> Case {
    match kostka_both(key) {
        Ok(_) => Case::new(key.to_string(), true),
        Err(e) => Case::failing(key.to_string(), e.to_string()),
    }
}

/// Kostant and vertex engines agree on the exhaustive grid.
pub fn engine_grid(max_n: usize, max_entry: i64, max_size: u32) -> SuiteReport {
    let keys = grid_keys(max_n, max_entry, max_size);
    SuiteReport::new("engine grid", keys.par_iter().map(engines_agree).collect())
}

fn random_dominant(rng: &mut ChaCha8Rng, len: usize, max_entry: i64) -> DominantWeight {
    let mut v: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=max_entry)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    DominantWeight::new(v).expect("sorted")
}

fn random_composition(rng: &mut ChaCha8Rng, n: usize) -> Shape {
    let shapes = Shape::compositions(n);
    shapes.choose(rng).expect("n >= 1").clone()
}

/// `count` random keys on shapes of total `n`: blocks and `λ` have entries in
/// `[0, max_entry]`, and `|γ| <= max_size`.
pub fn random_keys(
    n: usize,
    count: usize,
    max_entry: i64,
    max_size: u32,
    seed: u64,
) -> Vec<KostkaKey> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut keys = Vec::with_capacity(count);
    while keys.len() < count {
        let eta = random_composition(&mut rng, n);
        let blocks: Vec<DominantWeight> = eta
            .blocks()
            .iter()
            .map(|&len| random_dominant(&mut rng, len, max_entry))
            .collect();
        let gamma = BlockedWeight::new(blocks).expect("nonempty blocks");
        let size = gamma.size();
        if size > i64::from(max_size) {
            continue;
        }
        let lambdas = Partition::bounded(size as u32, n, max_entry as u32);
        let Some(lambda) = lambdas.choose(&mut rng) else {
            continue;
        };
        let lambda = lambda.to_dominant(n).expect("at most n parts");
        keys.push(KostkaKey::new(lambda, gamma).expect("lengths match"));
    }
    keys
}

/// Engine agreement on seeded random keys.
pub fn engine_random(
    n: usize,
    count: usize,
    max_entry: i64,
    max_size: u32,
    seed: u64,
) -> SuiteReport {
    let keys = random_keys(n, count, max_entry, max_size, seed);
    SuiteReport::new(
        "engine random",
        keys.par_iter().map(engines_agree).collect(),
    )
}

// ---------------------------------------------------------------- specialization

/// At `q = 1` the vertex word is a product of Schur functions, so
/// `Σ_λ K(1) s_λ = s_{γ(1)} ⋯ s_{γ(t)}`. Checked through the Kostant engine.
pub fn specialization_q_one(max_n: usize, max_entry: i64, max_size: u32) -> SuiteReport {
    let gammas: Vec<BlockedWeight> = grid_keys(max_n, max_entry, max_size)
        .into_iter()
        .map(|k| k.gamma)
        .collect();
    specialization_q_one_for(gammas)
}

/// [`specialization_q_one`] for the given blocked weights (partition blocks).
pub fn specialization_q_one_for(mut gammas: Vec<BlockedWeight>) -> SuiteReport {
    let one = BigRational::from_integer(1.into());
    gammas.sort();
    gammas.dedup();
    let cases = gammas
        .par_iter()
        .map(|gamma| {
            let label = format!("gamma={gamma} at q=1");
            let n = gamma.shape().total();
            let size = gamma.size() as u32;
            let mut lhs = SymFunc::zero(Basis::Schur);
            for lambda in Partition::with_max_len(size, n) {
                let key = KostkaKey::new(lambda.to_dominant(n).expect("fits"), gamma.clone())
                    .expect("lengths match");
                let k = kostka_kostant(&key);
                let v = match k.eval(&one) {
                    Ok(v) => v,
                    Err(e) => return Case::failing(label, e.to_string()),
                };
                lhs.add_term(lambda, &QRat::from(v.to_integer()));
            }
            let rhs = schur_block_product(gamma).expect("partition blocks");
            Case::equal(label, &lhs, &rhs)
        })
        .collect();
    SuiteReport::new("q = 1", cases)
}

/// At `q = 0` with singleton blocks, `K(0)` is the sign with which `s_γ`
/// straightens onto `s_λ` (so `δ_{λγ}` for dominant `γ`).
pub fn specialization_q_zero(max_n: usize, max_entry: i64, max_size: u32) -> SuiteReport {
    let zero = BigRational::from_integer(0.into());
    let keys: Vec<KostkaKey> = grid_keys(max_n, max_entry, max_size)
        .into_iter()
        .filter(|k| k.eta().blocks().iter().all(|&b| b == 1))
        .collect();
    let cases = keys
        .par_iter()
        .map(|key| {
            let label = format!("{key} at q=0");
            let got = match kostka_kostant(key).eval(&zero) {
                Ok(v) => v.to_integer(),
                Err(e) => return Case::failing(label, e.to_string()),
            };
            let want: i64 = match straighten(&key.gamma.flatten()) {
                Straightened::Signed { sign, weight } if weight == key.lambda => i64::from(sign),
                _ => 0,
            };
            Case::equal(label, &got, &BigInt::from(want))
        })
        .collect();
    SuiteReport::new("q = 0", cases)
}

// ---------------------------------------------------------------- identities

fn certify(label: String, sum: &OpSum, max_degree: u32) -> Case {
    match first_nonzero_witness(sum, max_degree) {
        None => Case::new(label, true),
        Some(tau) => Case::failing(label, format!("nonzero on s[{tau}]")),
    }
}

/// The rectangle identities, each certified on `|τ| <= max_degree`.
pub fn identity_suite(max_degree: u32) -> SuiteReport {
    let mut jobs: Vec<(String, OpSum)> = Vec::new();
    for a in 0..=2 {
        for k in 1..=3 {
            for n in 1..=3 {
                jobs.push((
                    format!("same width a={a} k={k} n={n}"),
                    same_width_identity(a, k, n),
                ));
            }
        }
    }
    for a in 0..=1 {
        for k in 1..=3 {
            jobs.push((format!("one more a={a} k={k}"), one_more_identity(a, k)));
        }
    }
    for a in 1..=2 {
        for k in 1..=3 {
            jobs.push((format!("quad a={a} k={k}"), quad_identity(a, k)));
        }
    }
    let cases = jobs
        .into_iter()
        .map(|(label, sum)| certify(label, &sum, max_degree))
        .collect();
    SuiteReport::new("rectangle identities", cases)
}

fn random_entries(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(lo..=hi)).collect()
}

fn random_dominant_in(rng: &mut ChaCha8Rng, len: usize, lo: i64, hi: i64) -> DominantWeight {
    let mut v = random_entries(rng, len, lo, hi);
    v.sort_unstable_by(|a, b| b.cmp(a));
    DominantWeight::new(v).expect("sorted")
}

fn relation_weight(rel: &Relation) -> i64 {
    let abs = |v: &[i64]| v.iter().map(|x| x.abs()).sum::<i64>();
    match rel {
        Relation::Com1 { mu, a, b, nu } => {
            abs(mu.entries()) + a.abs() + b.abs() + abs(nu.entries())
        }
        Relation::Com2 { mu, a, nu } | Relation::Move { mu, a, nu } => {
            abs(mu.entries()) + a.abs() + abs(nu.entries())
        }
        Relation::BigMove { alpha, beta, gamma } => {
            abs(alpha.entries()) + abs(beta.entries()) + abs(gamma.entries())
        }
    }
}

/// A seeded sample of `per_kind` instances of each relation, with factor
/// lengths at most 3, entries in `[-1, 4]`, and absolute entry sum at most
/// `weight_cap`.
pub fn relation_sample(seed: u64, per_kind: usize, weight_cap: i64) -> Vec<Relation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for kind in 0..4 {
        let mut taken = 0;
        while taken < per_kind {
            let rel = match kind {
                0 => Relation::Com1 {
                    mu: {
                        let len = rng.gen_range(0..=2);
                        random_dominant_in(&mut rng, len, -1, 4)
                    },
                    a: rng.gen_range(-1..=4),
                    b: rng.gen_range(-1..=4),
                    nu: {
                        let len = rng.gen_range(0..=2);
                        random_dominant_in(&mut rng, len, -1, 4)
                    },
                },
                1 => Relation::Com2 {
                    mu: {
                        let len = rng.gen_range(0..=2);
                        random_dominant_in(&mut rng, len, -1, 4)
                    },
                    a: rng.gen_range(-1..=4),
                    nu: {
                        let len = rng.gen_range(0..=2);
                        random_dominant_in(&mut rng, len, -1, 4)
                    },
                },
                2 => Relation::Move {
                    mu: {
                        let len = rng.gen_range(0..=2);
                        random_dominant_in(&mut rng, len, -1, 4)
                    },
                    a: rng.gen_range(-1..=4),
                    nu: {
                        let len = rng.gen_range(1..=3);
                        random_dominant_in(&mut rng, len, -1, 4)
                    },
                },
                _ => {
                    let (k, l) = [(1, 1), (1, 2), (2, 1)][rng.gen_range(0..3)];
                    Relation::BigMove {
                        alpha: Weight::new(random_entries(&mut rng, k, -1, 4)),
                        beta: Weight::new(random_entries(&mut rng, l, -1, 4)),
                        gamma: Weight::new(random_entries(&mut rng, k, -1, 4)),
                    }
                }
            };
            if relation_weight(&rel) > weight_cap {
                continue;
            }
            // trivial instances certify nothing
            if relation_instance(&rel)
                .map(|s| s.is_zero())
                .unwrap_or(false)
            {
                continue;
            }
            out.push(rel);
            taken += 1;
        }
    }
    out
}

fn relation_label(rel: &Relation) -> String {
    match rel {
        Relation::Com1 { mu, a, b, nu } => format!("com1 mu=({mu}) a={a} b={b} nu=({nu})"),
        Relation::Com2 { mu, a, nu } => format!("com2 mu=({mu}) a={a} nu=({nu})"),
        Relation::Move { mu, a, nu } => format!("move mu=({mu}) a={a} nu=({nu})"),
        Relation::BigMove { alpha, beta, gamma } => {
            format!("bigmove alpha=({alpha}) beta=({beta}) gamma=({gamma})")
        }
    }
}

/// Each relation instance vanishes on `|τ| <= max_degree`.
pub fn relation_suite(relations: &[Relation], max_degree: u32) -> SuiteReport {
    let cases = relations
        .iter()
        .map(|rel| {
            let label = relation_label(rel);
            match relation_instance(rel) {
                Ok(sum) => certify(label, &sum, max_degree),
                Err(e) => Case::failing(label, e.to_string()),
            }
        })
        .collect();
    SuiteReport::new("relations", cases)
}

// ---------------------------------------------------------------- rewriting

fn word(s: &str) -> OpWord {
    parse_word(s).expect("literal word")
}

fn op_sum(terms: &[(&str, &[(i64, i64)])]) -> OpSum {
    normalize(terms.iter().map(|(w, c)| (word(w), q_rat(c))))
}

/// The dominance worked example: input word and expected expansion.
pub fn dominance_example() -> (OpWord, OpSum) {
    let want = op_sum(&[
        ("H[3,3]H[3,0]", &[(2, 1), (1, -1)]),
        ("H[4,2]H[2,1]", &[(2, 1)]),
        ("H[4,3]H[1,1]", &[(3, -1)]),
        ("H[4,3]H[2,0]", &[(2, 1), (3, -1)]),
        ("H[4,4]H[1,0]", &[(4, 1), (3, -1)]),
    ]);
    (word("H[2,2]H[4,1]"), want)
}

/// The support-shift worked example. The last term is `-q H[6]H[2,2]`; a
/// transcription with `H[6]H[2,1]` has the wrong degree.
pub fn shift_example() -> (OpWord, OpSum) {
    let want = op_sum(&[
        ("H[5]H[5,0]", &[(2, 1)]),
        ("H[6]H[4,0]", &[(3, -1)]),
        ("H[5]H[4,1]", &[(1, 1)]),
        ("H[6]H[3,1]", &[(2, -1)]),
        ("H[5]H[3,2]", &[(0, 1)]),
        ("H[6]H[2,2]", &[(1, -1)]),
    ]);
    (word("H[5,3]H[2]"), want)
}

fn rewrite_case(
    label: String,
    input: &OpWord,
    output: Result<OpSum>,
    shape_ok: impl Fn(&OpWord) -> bool,
    max_degree: u32,
) -> Case {
    let out = match output {
        Ok(o) => o,
        Err(e) => return Case::failing(label, e.to_string()),
    };
    if !out.is_integral() {
        return Case::failing(label, format!("non-integral output {out}"));
    }
    if let Some(bad) = out.terms().keys().find(|w| !shape_ok(w)) {
        return Case::failing(label, format!("term {bad} has the wrong shape"));
    }
    if !evaluation_equal(&OpSum::word(input.clone()), &out, max_degree) {
        return Case::failing(label, "output is not operator-equal to the input");
    }
    Case::new(label, true)
}

fn random_pair(rng: &mut ChaCha8Rng, k: usize, n: usize, lo: i64, hi: i64) -> OpWord {
    let l = random_dominant_in(rng, k, lo, hi);
    let r = random_dominant_in(rng, n, lo, hi);
    OpWord::pair(l.weight().clone(), r.weight().clone())
}

/// Worked examples and certified rewriting of seeded random words.
pub fn rewrite_suite(max_degree: u32, seed: u64) -> SuiteReport {
    let mut cases = Vec::new();
    let (w, want) = dominance_example();
    cases.push(match rewrite_dominant(&w) {
        Ok(got) => Case::equal("dominance example", &got, &want),
        Err(e) => Case::failing("dominance example", e.to_string()),
    });
    let (w, want) = shift_example();
    cases.push(match shift_support(&w, ShiftDirection::LeftToRight) {
        Ok(got) => Case::equal("support example", &got, &want),
        Err(e) => Case::failing("support example", e.to_string()),
    });

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..4 {
        let (k, n) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let w = random_pair(&mut rng, k, n, 0, 3);
        cases.push(rewrite_case(
            format!("dominance {w}"),
            &w,
            rewrite_dominant(&w),
            OpWord::is_dominant,
            max_degree,
        ));
    }
    for _ in 0..3 {
        let w = random_pair(&mut rng, 2, 1, 0, 3);
        let lens = |x: &OpWord| x.lengths() == [1, 2];
        cases.push(rewrite_case(
            format!("shift {w}"),
            &w,
            shift_support(&w, ShiftDirection::LeftToRight),
            lens,
            max_degree,
        ));
        let m = OpWord::pair(w.factors()[1].clone(), w.factors()[0].clone());
        let lens = |x: &OpWord| x.lengths() == [2, 1];
        cases.push(rewrite_case(
            format!("shift back {m}"),
            &m,
            shift_support(&m, ShiftDirection::RightToLeft),
            lens,
            max_degree,
        ));
    }
    for _ in 0..3 {
        let w = random_pair(&mut rng, 2, 1, 0, 3);
        let lens = |x: &OpWord| x.lengths() == [1, 2];
        cases.push(rewrite_case(
            format!("swap {w}"),
            &w,
            swap_factors(&w),
            lens,
            max_degree,
        ));
        // swapping back yields the original operator again
        let back = swap_factors(&w).and_then(|once| {
            let mut total = OpSum::zero();
            for (x, c) in once.terms() {
                total.add_scaled(&swap_factors(x)?, c);
            }
            Ok(total)
        });
        cases.push(rewrite_case(
            format!("swap round trip {w}"),
            &w,
            back,
            |x| x.lengths() == [2, 1],
            max_degree,
        ));
    }
    SuiteReport::new("rewrite", cases)
}

// ---------------------------------------------------------------- columns

/// `e_k^⊥ H_λ = Σ_{λ/β vertical} H_β e_{k-|λ/β|}^⊥` on `|τ| <= max_degree`, for
/// dominant `λ` of length at most 3 with entries in `[-1, 2]`.
pub fn column_commutation(max_degree: u32) -> SuiteReport {
    let mut lambdas = Vec::new();
    for len in 1..=3usize {
        let mut v = vec![-1i64; len];
        loop {
            if v.windows(2).all(|w| w[0] >= w[1]) {
                lambdas.push(DominantWeight::new(v.clone()).expect("checked"));
            }
            let mut i = 0;
            while i < len && v[i] == 2 {
                v[i] = -1;
                i += 1;
            }
            if i == len {
                break;
            }
            v[i] += 1;
        }
    }
    let cases = lambdas
        .par_iter()
        .map(|lambda| {
            let label = format!("e-perp past H[{lambda}]");
            for tau in Partition::up_to(max_degree, usize::MAX) {
                let f = SymFunc::schur(tau.clone());
                let image = apply_h(lambda, &f);
                for k in 0..=3u32 {
                    let left = elementary_perp(k, &image);
                    let mut right = SymFunc::zero(Basis::Schur);
                    for beta in vertical_strip_shrink(lambda) {
                        let j = i64::from(k) - lambda.size() + beta.size();
                        if j >= 0 {
                            right.add_scaled(
                                &apply_h(&beta, &elementary_perp(j as u32, &f)),
                                &QRat::one(),
                            );
                        }
                    }
                    if left != right {
                        return Case::failing(label, format!("differs on s[{tau}] with k={k}"));
                    }
                }
            }
            Case::new(label, true)
        })
        .collect();
    SuiteReport::new("column commutation", cases)
}

/// Seeded column-skew instances with `n <= max_n`.
pub fn col_skew_random(max_n: usize, count: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = Vec::with_capacity(count);
    while instances.len() < count {
        let n = rng.gen_range(1..=max_n);
        let eta = random_composition(&mut rng, n);
        let blocks: Vec<DominantWeight> = eta
            .blocks()
            .iter()
            .map(|&len| random_dominant_in(&mut rng, len, -1, 3))
            .collect();
        let gamma = BlockedWeight::new(blocks).expect("nonempty blocks");
        let k = rng.gen_range(1..=n as u32);
        let alpha = random_dominant_in(&mut rng, n, -1, 3);
        if gamma.size() - alpha.size() != i64::from(k) {
            continue;
        }
        instances.push((alpha, gamma, k));
    }
    let cases = instances
        .par_iter()
        .map(|(alpha, gamma, k)| {
            Case::from_result(
                format!("column skew alpha=({alpha}) gamma={gamma} k={k}"),
                check_col_skew(alpha, gamma, *k),
            )
        })
        .collect();
    SuiteReport::new("column skew", cases)
}

// ---------------------------------------------------------------- independence

/// `H_γ(s_{β(γ)}[X/(q-1)]) = s_{α(γ)}` and `H_γ(s_τ[X/(q-1)]) = 0` for the other
/// `|τ| <= |β(γ)|`, over all dominant `γ` of length `<= max_len` with entries in
/// `[-bound, bound]`.
pub fn independence_suite(max_len: usize, bound: i64) -> SuiteReport {
    let mut gammas = Vec::new();
    for len in 1..=max_len {
        let mut v = vec![-bound; len];
        loop {
            if v.windows(2).all(|w| w[0] >= w[1]) {
                gammas.push(DominantWeight::new(v.clone()).expect("checked"));
            }
            let mut i = 0;
            while i < len && v[i] == bound {
                v[i] = -bound;
                i += 1;
            }
            if i == len {
                break;
            }
            v[i] += 1;
        }
    }
    let subst = PowerSumSubst::x_over_q_minus_one();
    let cases = gammas
        .par_iter()
        .map(|gamma| {
            let label = format!("independence gamma=({gamma})");
            let ab = alpha_beta(gamma);
            let image = apply_h(gamma, &schur_plethysm(&ab.beta, &subst));
            if image != SymFunc::schur(ab.alpha.clone()) {
                return Case::failing(label, format!("image of s[{}] is {image}", ab.beta));
            }
            for tau in Partition::up_to(ab.beta.size(), usize::MAX) {
                if tau == ab.beta {
                    continue;
                }
                let image = apply_h(gamma, &schur_plethysm(&tau, &subst));
                if !image.is_zero() {
                    return Case::failing(label, format!("s[{tau}] maps to {image}"));
                }
            }
            Case::new(label, true)
        })
        .collect();
    SuiteReport::new("independence", cases)
}

// ---------------------------------------------------------------- conjugate operators

/// The conjugate word on 1, pulled back through `F⁻¹`, carries the same
/// coefficients as the vertex word; directly, it equals `Σ_λ K s_λ[X(1-q)]`.
pub fn jing_suite(max_n: usize, max_entry: i64, max_size: u32) -> SuiteReport {
    let mut gammas: Vec<BlockedWeight> = grid_keys(max_n, max_entry, max_size)
        .into_iter()
        .map(|k| k.gamma)
        .collect();
    gammas.sort();
    gammas.dedup();
    let subst = PowerSumSubst::x_times_one_minus_q();
    let cases = gammas
        .par_iter()
        .map(|gamma| {
            let label = format!("conjugate word gamma={gamma}");
            let b = apply_b_word(gamma, &SymFunc::one());
            let pulled = apply_f(&b, true);
            let h = apply_h_word(gamma, &SymFunc::one());
            if pulled != h {
                return Case::failing(label, format!("F^-1 B = {pulled}, H = {h}"));
            }
            let n = gamma.shape().total();
            let mut expected = SymFunc::zero(Basis::Schur);
            for lambda in Partition::with_max_len(gamma.size() as u32, n) {
                let key = KostkaKey::new(lambda.to_dominant(n).expect("fits"), gamma.clone())
                    .expect("lengths match");
                let k = kostka_kostant(&key);
                if !k.is_zero() {
                    expected.add_scaled(&schur_plethysm(&lambda, &subst), &QRat::from(k));
                }
            }
            if !b.same_element(&expected) {
                return Case::failing(label, "B word differs from the K expansion");
            }
            Case::new(label, true)
        })
        .collect();
    SuiteReport::new("conjugate operators", cases)
}

// ---------------------------------------------------------------- Kostka–Foulkes

fn foulkes_key(lambda: &Partition, mu: &Partition, n: usize) -> KostkaKey {
    let l = lambda.to_dominant(n).expect("fits");
    let m = mu.to_dominant(n).expect("fits");
    let gamma = BlockedWeight::split(&Shape::singletons(n), m.weight()).expect("lengths match");
    KostkaKey::new(l, gamma).expect("lengths match")
}

fn dominates(lambda: &Partition, mu: &Partition) -> bool {
    let (mut a, mut b) = (0u32, 0u32);
    for i in 0..lambda.len().max(mu.len()) {
        a += lambda.part(i);
        b += mu.part(i);
        if a < b {
            return false;
        }
    }
    true
}

/// `n(λ) = Σ (i-1) λ_i`.
fn n_statistic(lambda: &Partition) -> i64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as i64 * i64::from(p))
        .sum()
}

/// Named values plus full tables for `|λ| <= max_size`: engines agree,
/// support is the dominance order, the top degree is `n(μ) - n(λ)`, and
/// `K(1)` is the Kostka number read off `h_μ`.
pub fn foulkes_suite(max_size: u32) -> SuiteReport {
    let mut cases = Vec::new();
    let kf = |l: &[u32], m: &[u32]| {
        let (l, m) = (partition(l), partition(m));
        let n = l.len().max(m.len()).max(1);
        kostka_both(&foulkes_key(&l, &m, n))
    };
    for (l, m, want) in [
        (&[2][..], &[1, 1][..], QPoly::q()),
        (&[1, 1][..], &[2][..], QPoly::zero()),
        (
            &[2, 1][..],
            &[1, 1, 1][..],
            QPoly::from_terms([(1, 1), (2, 1)]),
        ),
    ] {
        let label = format!("K[{l:?},{m:?}]");
        match kf(l, m) {
            Ok(got) => cases.push(Case::equal(label, &got, &want)),
            Err(e) => cases.push(Case::failing(label, e.to_string())),
        }
    }
    let one = BigRational::from_integer(1.into());
    for size in 1..=max_size {
        let parts = Partition::all(size);
        let n = size as usize;
        let rows: Vec<Case> = parts
            .par_iter()
            .map(|mu| {
                let label = format!("Kostka-Foulkes column mu={mu}");
                let h_mu = mu
                    .parts()
                    .iter()
                    .fold(SymFunc::one(), |acc, &p| multiply(&acc, &SymFunc::h(p)));
                for lambda in &parts {
                    let key = foulkes_key(lambda, mu, n);
                    let k = match kostka_both(&key) {
                        Ok(k) => k,
                        Err(e) => return Case::failing(label, e.to_string()),
                    };
                    if lambda == mu && !k.is_one() {
                        return Case::failing(label, format!("diagonal entry {k}"));
                    }
                    if k.is_zero() != !dominates(lambda, mu) {
                        return Case::failing(label, format!("support wrong at lambda={lambda}"));
                    }
                    if !k.is_zero() && k.degree() != Some(n_statistic(mu) - n_statistic(lambda)) {
                        return Case::failing(label, format!("degree of {k} at lambda={lambda}"));
                    }
                    let at_one = k.eval(&one).map(|v| v.to_integer());
                    let want = h_mu.coeff(lambda);
                    match at_one {
                        Ok(v) if QRat::from(v.clone()) == want => {}
                        _ => {
                            return Case::failing(
                                label,
                                format!("K(1) at lambda={lambda} is not {want}"),
                            )
                        }
                    }
                }
                Case::new(label, true)
            })
            .collect();
        cases.extend(rows);
    }
    SuiteReport::new("Kostka-Foulkes", cases)
}

/// Runs the named suites in order.
pub fn run_suites(suites: &[Suite], opts: &SuiteOptions) -> Vec<SuiteReport> {
    suites.iter().map(|&s| run_suite(s, opts)).collect()
}

/// Suites parsed from a `check --suite` value: one name or `all`.
pub fn parse_suite_list(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    Suite::from_name(s).map(|x| vec![x]).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        Error::parse(
            0,
            format!(
                "unknown suite {s:?}; expected one of {} or all",
                names.join(", ")
            ),
        )
    })
}

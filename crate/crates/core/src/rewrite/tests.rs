use super::*;
use crate::coeffs::QPoly;

fn w(s: &str) -> OpWord {
    parse_word(s).unwrap()
}

fn dw(v: &[i64]) -> DominantWeight {
    DominantWeight::new(v.to_vec()).unwrap()
}

fn qp(terms: &[(i64, i64)]) -> QRat {
    QRat::from(QPoly::from_terms(terms.iter().copied()))
}

fn sum(terms: &[(&str, &[(i64, i64)])]) -> OpSum {
    normalize(terms.iter().map(|(s, c)| (w(s), qp(c))))
}

fn dominance_example() -> OpSum {
    sum(&[
        ("H[3,3]H[3,0]", &[(2, 1), (1, -1)]),
        ("H[4,2]H[2,1]", &[(2, 1)]),
        ("H[4,3]H[1,1]", &[(3, -1)]),
        ("H[4,3]H[2,0]", &[(2, 1), (3, -1)]),
        ("H[4,4]H[1,0]", &[(4, 1), (3, -1)]),
    ])
}

fn shift_example() -> OpSum {
    sum(&[
        ("H[5]H[5,0]", &[(2, 1)]),
        ("H[6]H[4,0]", &[(3, -1)]),
        ("H[5]H[4,1]", &[(1, 1)]),
        ("H[6]H[3,1]", &[(2, -1)]),
        ("H[5]H[3,2]", &[(0, 1)]),
        ("H[6]H[2,2]", &[(1, -1)]),
    ])
}

#[test]
fn word_syntax() {
    let x = w("H[2,2]H[4,1]");
    assert_eq!(x.to_string(), "H[2,2]H[4,1]");
    assert_eq!(x.lengths(), vec![2, 2]);
    assert_eq!(w(" H[] H[-1,3] ").to_string(), "H[]H[-1,3]");
    for (bad, pos) in [("X[1]", 0), ("H(1)", 1), ("H[1", 3), ("H[1,x]", 4), ("", 0)] {
        match parse_word(bad) {
            Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{bad}"),
            other => panic!("{bad}: {other:?}"),
        }
    }
}

#[test]
fn normalization() {
    assert!(OpSum::word(w("H[1,2]H[0]")).is_zero());
    let got = OpSum::word(w("H[0,2]H[1]"));
    assert_eq!(got.coeff(&w("H[1,1]H[1]")), QRat::from(-1i64));
    assert_eq!(got.len(), 1);
    let normal = sum(&[("H[2,1]H[1]", &[(1, 1)])]);
    assert_eq!(normalize(normal.terms().clone()), normal);
}

#[test]
fn rendering() {
    assert_eq!(OpSum::zero().to_string(), "0");
    assert_eq!(
        dominance_example().to_string(),
        "(q^2-q) * H[3,3]H[3,0] + q^2 * H[4,2]H[2,1] - q^3 * H[4,3]H[1,1] \
         + (-q^3+q^2) * H[4,3]H[2,0] + (q^4-q^3) * H[4,4]H[1,0]"
    );
    assert_eq!(sum(&[("H[1]H[1]", &[(0, 1)])]).to_string(), "H[1]H[1]");
    let j = sum(&[("H[1]H[0]", &[(4, 1), (3, -1)])]).to_json();
    assert_eq!(
        j,
        serde_json::json!({"terms": [{"word": [[1], [0]], "coeff": {"4": 1, "3": -1}}]})
    );
}

#[test]
fn dominance_worked_example() {
    let got = rewrite_dominant(&w("H[2,2]H[4,1]")).unwrap();
    assert_eq!(got, dominance_example());
    assert!(got.terms().keys().all(OpWord::is_dominant));
    assert!(got.is_integral());
}

#[test]
fn dominance_intermediate_relation() {
    // the b = a + 1 relation used on H[3,2]H[3,1]
    let rel = relation_instance(&Relation::Com2 {
        mu: dw(&[3]),
        a: 2,
        nu: dw(&[1]),
    })
    .unwrap();
    let want = sum(&[
        ("H[3,2]H[3,1]", &[(0, 1)]),
        ("H[3,3]H[3,0]", &[(1, -1)]),
        ("H[4,2]H[2,1]", &[(1, -1)]),
        ("H[4,3]H[2,0]", &[(2, 1)]),
        ("H[3,3]H[2,1]", &[(1, -1)]),
        ("H[4,3]H[1,1]", &[(2, 1)]),
        ("H[4,4]H[1,0]", &[(3, -1)]),
    ]);
    assert_eq!(rel, want);
}

#[test]
fn dominant_input_is_unchanged() {
    let x = w("H[3,2]H[2,1]");
    assert_eq!(rewrite_dominant(&x).unwrap(), OpSum::word(x));
    assert!(rewrite_dominant(&w("H[1,2]H[0]")).is_err());
}

#[test]
fn shift_worked_example() {
    let got = shift_support(&w("H[5,3]H[2]"), ShiftDirection::LeftToRight).unwrap();
    assert_eq!(got, shift_example());
    assert!(got.terms().keys().all(|x| x.lengths() == vec![1, 2]));
}

#[test]
fn shift_edges_and_mirror() {
    let got = shift_support(&w("H[3]H[]"), ShiftDirection::LeftToRight).unwrap();
    assert_eq!(got, OpSum::word(w("H[]H[3]")));
    assert!(shift_support(&w("H[3]H[2]"), ShiftDirection::LeftToRight).is_err());
    let x = w("H[2]H[3,1]");
    let got = shift_support(&x, ShiftDirection::RightToLeft).unwrap();
    assert!(got.terms().keys().all(|y| y.lengths() == vec![2, 1]));
    assert!(evaluation_equal(&got, &OpSum::word(x), 3));
}

#[test]
fn swap_examples() {
    for a in 0..=2 {
        let x = OpWord::pair(Weight::new(vec![a]), Weight::new(vec![a, a]));
        let y = OpWord::pair(Weight::new(vec![a, a]), Weight::new(vec![a]));
        assert_eq!(swap_factors(&x).unwrap(), OpSum::word(y.clone()));
        assert_eq!(swap_factors(&y).unwrap(), OpSum::word(x));
    }
    let x = w("H[2,1]H[1,1]");
    assert_eq!(swap_factors(&x).unwrap(), OpSum::word(x));
}

#[test]
fn swap_certified() {
    for s in ["H[2,1]H[1]", "H[1]H[2,0]", "H[3,1,0]H[1]"] {
        let x = w(s);
        let got = swap_factors(&x).unwrap();
        let want_len: Vec<usize> = x.lengths().into_iter().rev().collect();
        assert!(got.terms().keys().all(|y| y.lengths() == want_len), "{s}");
        assert!(evaluation_equal(&got, &OpSum::word(x.clone()), 3), "{s}");
        // and back again
        let mut back = OpSum::zero();
        for (y, c) in got.terms() {
            back.add_scaled(&swap_factors(y).unwrap(), c);
        }
        assert!(evaluation_equal(&back, &OpSum::word(x), 3), "{s}");
    }
}

#[test]
fn move_reproduces_identities() {
    for a in 0..=2 {
        for k in 1..=3usize {
            let one_more = relation_instance(&Relation::Move {
                mu: DominantWeight::rectangle(a, k - 1),
                a,
                nu: DominantWeight::rectangle(a + 1, k),
            })
            .unwrap();
            assert_eq!(one_more, one_more_identity(a, k), "a={a} k={k}");
            let quad = relation_instance(&Relation::Move {
                mu: DominantWeight::rectangle(a, k),
                a,
                nu: DominantWeight::rectangle(a, k - 1),
            })
            .unwrap();
            assert_eq!(
                quad,
                quad_identity(a, k).scale(&QRat::from(-1i64)),
                "a={a} k={k}"
            );
        }
    }
}

#[test]
fn relations_vanish() {
    let rels = [
        Relation::Com1 {
            mu: dw(&[1]),
            a: 0,
            b: 2,
            nu: dw(&[1]),
        },
        Relation::Com2 {
            mu: dw(&[2]),
            a: 3,
            nu: dw(&[1]),
        },
        Relation::Move {
            mu: dw(&[2]),
            a: 1,
            nu: dw(&[1, 0]),
        },
        Relation::BigMove {
            alpha: Weight::new(vec![2]),
            beta: Weight::new(vec![1]),
            gamma: Weight::new(vec![1]),
        },
    ];
    for r in &rels {
        let s = relation_instance(r).unwrap();
        assert!(!s.is_zero() || matches!(r, Relation::BigMove { .. }));
        assert!(is_zero_operator(&s, 3), "{r:?}");
    }
}

#[test]
fn identities_vanish() {
    assert!(is_zero_operator(&same_width_identity(1, 1, 2), 3));
    assert!(is_zero_operator(&one_more_identity(1, 2), 3));
    assert!(is_zero_operator(&quad_identity(1, 2), 3));
    // a false identity is caught
    let wrong = normalize([
        (w("H[1]H[2]"), QRat::one()),
        (w("H[2]H[1]"), QRat::from(-1i64)),
    ]);
    assert!(!is_zero_operator(&wrong, 2));
}

#[test]
fn evaluation_basics() {
    let f = SymFunc::schur(Partition::new(vec![1]).unwrap());
    assert!(evaluate(&OpSum::zero(), &f).is_zero());
    let x = w("H[1]H[1]");
    assert_eq!(
        evaluate(&OpSum::word(x.clone()), &SymFunc::one()),
        apply_h_factors(x.factors(), &SymFunc::one())
    );
}

#[test]
fn dominance_result_is_certified() {
    assert!(evaluation_equal(
        &dominance_example(),
        &OpSum::word(w("H[2,2]H[4,1]")),
        3
    ));
}

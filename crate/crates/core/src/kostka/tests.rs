use super::*;
use crate::weights::parse_blocked;
use num_rational::BigRational;

fn dw(v: &[i64]) -> DominantWeight {
    DominantWeight::new(v.to_vec()).unwrap()
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn shape(v: &[usize]) -> Shape {
    Shape::new(v.to_vec()).unwrap()
}

fn qp(terms: &[(i64, i64)]) -> QPoly {
    QPoly::from_terms(terms.iter().copied())
}

fn key(lambda: &[i64], gamma: &str) -> KostkaKey {
    KostkaKey::new(dw(lambda), parse_blocked(gamma).unwrap()).unwrap()
}

/// Every `m` with each value at most `bound`, tallied by `|m|`.
fn brute_series(eta: &Shape, d: &[i64]) -> QPoly {
    let roots = roots_set(eta);
    let n = eta.total();
    let bound = d
        .iter()
        .scan(0, |acc, x| {
            *acc += x;
            Some(*acc)
        })
        .max()
        .unwrap_or(0)
        .max(0);
    let mut m = vec![0i64; roots.len()];
    let mut out = QPoly::zero();
    loop {
        let mut wt = vec![0i64; n];
        for (&(i, j), &c) in roots.roots().iter().zip(&m) {
            wt[i - 1] += c;
            wt[j - 1] -= c;
        }
        if wt == d {
            out = &out + &QPoly::monomial(1, m.iter().sum());
        }
        let mut pos = 0;
        loop {
            if pos == m.len() {
                return out;
            }
            m[pos] += 1;
            if m[pos] <= bound {
                break;
            }
            m[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn roots() {
    assert_eq!(roots_set(&shape(&[1, 1])).roots(), &[(1, 2)]);
    assert!(roots_set(&shape(&[2])).is_empty());
    assert_eq!(
        roots_set(&shape(&[1, 1, 1])).roots(),
        &[(1, 2), (1, 3), (2, 3)]
    );
    assert_eq!(roots_set(&shape(&[2, 1])).roots(), &[(1, 3), (2, 3)]);
}

#[test]
fn series_examples() {
    let w = |v: &[i64]| Weight::new(v.to_vec());
    assert_eq!(
        kostant_series(&shape(&[1, 1]), &w(&[0, 0])).unwrap(),
        QPoly::one()
    );
    assert_eq!(
        kostant_series(&shape(&[1, 1]), &w(&[1, -1])).unwrap(),
        QPoly::q()
    );
    assert_eq!(
        kostant_series(&shape(&[1, 1, 1]), &w(&[1, 0, -1])).unwrap(),
        qp(&[(1, 1), (2, 1)])
    );
    assert!(kostant_series(&shape(&[1, 1]), &w(&[-1, 1]))
        .unwrap()
        .is_zero());
    assert!(kostant_series(&shape(&[2]), &w(&[1, -1]))
        .unwrap()
        .is_zero());
    assert!(kostant_series(&shape(&[1]), &w(&[0, 0])).is_err());
}

#[test]
fn series_matches_brute_force() {
    let vectors: Vec<Vec<i64>> = {
        let mut out = Vec::new();
        for n in 2..=4usize {
            let mut v = vec![-2i64; n];
            loop {
                if v.iter().sum::<i64>() == 0 {
                    out.push(v.clone());
                }
                let mut pos = 0;
                while pos < n {
                    v[pos] += 1;
                    if v[pos] <= 2 {
                        break;
                    }
                    v[pos] = -2;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        }
        out
    };
    for d in vectors {
        for eta in Shape::compositions(d.len()) {
            let got = kostant_series(&eta, &Weight::new(d.clone())).unwrap();
            assert_eq!(got, brute_series(&eta, &d), "eta={eta} d={d:?}");
        }
    }
}

#[test]
fn small_values() {
    assert_eq!(kostka_kostant(&key(&[2, 0], "1;1")), QPoly::q());
    assert_eq!(kostka_kostant(&key(&[1, 1], "1;1")), QPoly::one());
    assert_eq!(kostka_kostant(&key(&[1, 1], "1,1")), QPoly::one());
    assert_eq!(kostka_kostant(&key(&[1, 0], "0;1")), QPoly::q());
    assert_eq!(kostka_kostant(&key(&[2, 0], "0;2")), qp(&[(2, 1)]));
    // γ not dominant as a whole: a negative coefficient is legitimate
    assert_eq!(kostka_kostant(&key(&[1, 1], "0;2")), qp(&[(1, 1), (0, -1)]));
    assert_eq!(kostka_vertex(&key(&[2, 0], "1;1")).unwrap(), QPoly::q());
    assert!(kostka_vertex(&key(&[2, 0], "1;0")).unwrap().is_zero());
    assert!(kostka_both(&key(&[1, 1], "0;2")).is_ok());
}

#[test]
fn single_block_is_identity() {
    for lambda in Partition::up_to(4, 3) {
        for gamma in Partition::up_to(4, 3) {
            let k = KostkaKey::new(
                lambda.to_dominant(3).unwrap(),
                BlockedWeight::new(vec![gamma.to_dominant(3).unwrap()]).unwrap(),
            )
            .unwrap();
            let want = if lambda == gamma {
                QPoly::one()
            } else {
                QPoly::zero()
            };
            assert_eq!(kostka_both(&k).unwrap(), want);
        }
    }
}

#[test]
fn foulkes() {
    assert_eq!(kostka_foulkes(&p(&[2]), &p(&[1, 1])).unwrap(), QPoly::q());
    assert!(kostka_foulkes(&p(&[1, 1]), &p(&[2])).unwrap().is_zero());
    assert_eq!(
        kostka_foulkes(&p(&[3]), &p(&[1, 1, 1])).unwrap(),
        qp(&[(3, 1)])
    );
    assert_eq!(
        kostka_foulkes(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
        qp(&[(1, 1), (2, 1)])
    );
    for n in 0..=4 {
        for l in Partition::all(n) {
            assert_eq!(kostka_foulkes(&l, &l).unwrap(), QPoly::one());
        }
    }
    assert!(kostka_foulkes(&p(&[2]), &p(&[1])).is_err());
}

#[test]
fn two_singleton_table() {
    let t = kostka_table(&shape(&[1, 1]), 2, Method::Both).unwrap();
    assert_eq!(t.nonzero().count(), 8);
    let top: Vec<_> = t.nonzero().filter(|e| e.key.lambda.size() == 2).collect();
    assert_eq!(top.len(), 5);
    assert!(top
        .iter()
        .any(|e| e.key == key(&[2, 0], "1;1") && e.value == QPoly::q()));
    assert_eq!(t.warnings.len(), 1);
}

#[test]
fn one_block_table_is_diagonal() {
    let t = kostka_table(&shape(&[3]), 4, Method::Both).unwrap();
    for e in &t.entries {
        let diag = e.key.lambda == e.key.gamma.blocks()[0];
        assert_eq!(e.value, if diag { QPoly::one() } else { QPoly::zero() });
    }
}

#[test]
fn q_one_gives_schur_products() {
    let one = BigRational::from_integer(1.into());
    for eta in [shape(&[1, 1]), shape(&[2, 1]), shape(&[1, 2])] {
        for d in 0..=4 {
            for gamma in partition_blocks(&eta, d) {
                let prod = schur_block_product(&gamma).unwrap();
                for lambda in Partition::with_max_len(d, eta.total()) {
                    let k = KostkaKey::new(lambda.to_dominant(eta.total()).unwrap(), gamma.clone())
                        .unwrap();
                    let v = kostka_kostant(&k).eval(&one).unwrap();
                    assert_eq!(v, prod.coeff(&lambda).specialize(&one).unwrap());
                }
            }
        }
    }
}

#[test]
fn shift_invariance() {
    for k in [
        key(&[2, 1, 0], "1;1,1"),
        key(&[3, 0, 0], "2;1;0"),
        key(&[1, 1, -1], "1;0;0"),
    ] {
        let base = kostka_both(&k).unwrap();
        for a in -2..=2 {
            assert_eq!(kostka_both(&k.shifted(a)).unwrap(), base, "{k} by {a}");
        }
    }
}

#[test]
fn column_skew() {
    assert!(check_col_skew(&dw(&[1, 0]), &parse_blocked("1;1").unwrap(), 1).unwrap());
    let (l, r) = col_skew_sides(&dw(&[1, 0]), &parse_blocked("1;1").unwrap(), 1).unwrap();
    assert_eq!(l, qp(&[(1, 1), (0, 1)]));
    assert_eq!(l, r);
    assert!(check_col_skew(&dw(&[2, 1]), &parse_blocked("2;1").unwrap(), 0).unwrap());
    assert!(check_col_skew(&dw(&[2, 1, 0]), &parse_blocked("2,1;1").unwrap(), 1).unwrap());
    assert!(check_col_skew(&dw(&[1, 0]), &parse_blocked("1;1").unwrap(), 2).is_err());
}

#[test]
fn key_rendering() {
    let k = key(&[2, 0], "1;1");
    assert_eq!(k.to_string(), "lambda=2,0 gamma=1;1 eta=1,1");
    assert_eq!(
        k.to_json(),
        serde_json::json!({"lambda": [2, 0], "gamma": [[1], [1]], "eta": [1, 1]})
    );
    assert!(KostkaKey::new(dw(&[1]), parse_blocked("1;1").unwrap()).is_err());
}

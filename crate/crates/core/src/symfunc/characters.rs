//! Symmetric-group characters by the Murnaghan–Nakayama rule, and the
//! Schur / power-sum transition tables built from them.

use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::coeffs::QRat;
use crate::memo::Memo;
use crate::weights::Partition;

static CHARACTERS: LazyLock<Memo<(Partition, Partition), i64>> = LazyLock::new(Memo::new);
static SCHUR_TO_POWER: LazyLock<Memo<Partition, Vec<(Partition, QRat)>>> = LazyLock::new(Memo::new);
static POWER_TO_SCHUR: LazyLock<Memo<Partition, Vec<(Partition, QRat)>>> = LazyLock::new(Memo::new);

/// `z_λ = ∏_i i^{m_i} m_i!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let p = parts[i];
        let mut m = 0u32;
        while i < parts.len() && parts[i] == p {
            m += 1;
            i += 1;
            z *= BigInt::from(p) * BigInt::from(m);
        }
    }
    z
}

/// `χ^λ(ρ)`, the irreducible character of `S_n` indexed by `lambda` at the
/// class of cycle type `rho`. Zero when the sizes differ.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    if lambda.size() != rho.size() {
        return 0;
    }
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), rho.clone());
    *CHARACTERS.get_or_insert_with(&key, || mn_step(lambda, rho))
}

/// Removes every rim hook of length `rho_1` and recurses on the rest of `rho`.
fn mn_step(lambda: &Partition, rho: &Partition) -> i64 {
    let r = rho.parts()[0];
    let rest = Partition::from_sorted(rho.parts()[1..].to_vec());
    let len = lambda.len();
    // beta numbers: lambda_i + (len - 1 - i), strictly decreasing
    let beta: Vec<i64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i64::from(p) + (len - 1 - i) as i64)
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - i64::from(r);
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (len - 1 - i) as i64) as u32)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * character(&Partition::from_sorted(parts), &rest);
    }
    total
}

/// `s_λ = Σ_ρ χ^λ(ρ) / z_ρ · p_ρ`.
pub(crate) fn schur_to_power(lambda: &Partition) -> Arc<Vec<(Partition, QRat)>> {
    SCHUR_TO_POWER.get_or_insert_with(lambda, || {
        Partition::all(lambda.size())
            .into_iter()
            .filter_map(|rho| {
                let chi = character(lambda, &rho);
                (chi != 0).then(|| {
                    let c = QRat::ratio(chi, z_lambda(&rho)).expect("z is positive");
                    (rho, c)
                })
            })
            .collect()
    })
}

/// `p_ρ = Σ_λ χ^λ(ρ) · s_λ`.
pub(crate) fn power_to_schur(rho: &Partition) -> Arc<Vec<(Partition, QRat)>> {
    POWER_TO_SCHUR.get_or_insert_with(rho, || {
        Partition::all(rho.size())
            .into_iter()
            .filter_map(|lambda| {
                let chi = character(&lambda, rho);
                (chi != 0).then(|| (lambda, QRat::from(chi)))
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn z_values() {
        assert_eq!(z_lambda(&p(&[2])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[1, 1])), BigInt::from(2));
        assert_eq!(z_lambda(&p(&[2, 2, 1])), BigInt::from(8));
        assert_eq!(z_lambda(&p(&[])), BigInt::from(1));
    }

    #[test]
    fn s3_character_table() {
        // rows (3), (2,1), (1,1,1); columns (1,1,1), (2,1), (3)
        let cols = [p(&[1, 1, 1]), p(&[2, 1]), p(&[3])];
        let table = [
            (p(&[3]), [1, 1, 1]),
            (p(&[2, 1]), [2, 0, -1]),
            (p(&[1, 1, 1]), [1, -1, 1]),
        ];
        for (lambda, row) in table {
            for (rho, want) in cols.iter().zip(row) {
                assert_eq!(character(&lambda, rho), want, "{lambda} at {rho}");
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 0..=7 {
            let parts = Partition::all(n);
            for a in &parts {
                for b in &parts {
                    let s: i64 = parts
                        .iter()
                        .map(|l| character(l, a) * character(l, b))
                        .sum();
                    let want = if a == b {
                        i64::try_from(z_lambda(a)).unwrap()
                    } else {
                        0
                    };
                    assert_eq!(s, want);
                }
            }
        }
    }
}

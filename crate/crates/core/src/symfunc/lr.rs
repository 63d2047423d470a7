//! Littlewood–Richardson enumeration.
//!
//! Two independent enumerations are kept: products grow `mu` by one
//! horizontal strip per letter of `nu`, and skew expansions fill a fixed
//! shape `lambda / mu` cell by cell in reading order. Both enforce the
//! lattice-word condition and are cross-checked in tests.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use crate::memo::Memo;
use crate::weights::Partition;

type Expansion = Vec<(Partition, u64)>;

static PRODUCTS: LazyLock<Memo<(Partition, Partition, usize), Expansion>> =
    LazyLock::new(Memo::new);
static SKEWS: LazyLock<Memo<(Partition, Partition), Expansion>> = LazyLock::new(Memo::new);

/// `s_mu · s_nu = Σ c^λ_{mu nu} s_λ`, keeping only `λ` with at most
/// `max_rows` parts.
pub fn lr_product(mu: &Partition, nu: &Partition, max_rows: usize) -> Arc<Expansion> {
    // letters come from the smaller factor
    let (a, b) = if (nu.size(), nu.len()) <= (mu.size(), mu.len()) {
        (mu, nu)
    } else {
        (nu, mu)
    };
    let rows = max_rows.min(a.len() + b.len());
    let key = (a.clone(), b.clone(), rows);
    PRODUCTS.get_or_insert_with(&key, || product_by_strips(a, b, rows))
}

fn product_by_strips(mu: &Partition, nu: &Partition, rows: usize) -> Expansion {
    if mu.len() > rows || nu.len() > rows {
        return Vec::new();
    }
    let mut shape = mu.padded(rows).expect("fits");
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut prev = vec![0u32; rows];
    place_letter(nu.parts(), 0, &mut shape, &mut prev, &mut out);
    out.into_iter().collect()
}

/// Adds the strip of letter `letter + 1` (`nu[letter]` boxes).
fn place_letter(
    nu: &[u32],
    letter: usize,
    shape: &mut Vec<u32>,
    prev_counts: &mut Vec<u32>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if letter == nu.len() {
        *out.entry(Partition::from_sorted(shape.clone()))
            .or_default() += 1;
        return;
    }
    let old = shape.clone();
    let mut counts = vec![0u32; shape.len()];
    choose_row(
        nu,
        letter,
        0,
        nu[letter],
        0,
        0,
        &old,
        shape,
        prev_counts,
        &mut counts,
        out,
    );
}

#[allow(clippy::too_many_arguments)]
fn choose_row(
    nu: &[u32],
    letter: usize,
    row: usize,
    remaining: u32,
    placed_so_far: u32,
    prev_above: u32,
    old: &[u32],
    shape: &mut Vec<u32>,
    prev_counts: &mut Vec<u32>,
    counts: &mut Vec<u32>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        let mut saved = std::mem::replace(prev_counts, counts.clone());
        place_letter(nu, letter + 1, shape, prev_counts, out);
        std::mem::swap(prev_counts, &mut saved);
        return;
    }
    if row == shape.len() {
        return;
    }
    let strip_cap = if row == 0 {
        remaining
    } else {
        old[row - 1] - old[row]
    };
    let lattice_cap = if letter == 0 {
        remaining
    } else {
        // boxes of this letter in rows <= row cannot exceed boxes of the
        // previous letter in rows < row
        prev_above.saturating_sub(placed_so_far)
    };
    let cap = strip_cap.min(lattice_cap).min(remaining);
    for x in (0..=cap).rev() {
        shape[row] = old[row] + x;
        counts[row] = x;
        choose_row(
            nu,
            letter,
            row + 1,
            remaining - x,
            placed_so_far + x,
            prev_above + prev_counts[row],
            old,
            shape,
            prev_counts,
            counts,
            out,
        );
    }
    shape[row] = old[row];
    counts[row] = 0;
}

/// `s_{λ/μ} = Σ_κ c^λ_{μκ} s_κ`.
pub fn skew_expansion(lambda: &Partition, mu: &Partition) -> Arc<Expansion> {
    let key = (lambda.clone(), mu.clone());
    SKEWS.get_or_insert_with(&key, || {
        if !lambda.contains(mu) {
            return Vec::new();
        }
        let cells: Vec<(usize, u32)> = (0..lambda.len())
            .flat_map(|r| (mu.part(r)..lambda.part(r)).rev().map(move |c| (r, c)))
            .collect();
        let mut grid: Vec<Vec<u32>> = lambda
            .parts()
            .iter()
            .map(|&l| vec![0; l as usize])
            .collect();
        let mut counts = vec![0u32; cells.len() + 2];
        let mut out = BTreeMap::new();
        fill(lambda, mu, &cells, 0, &mut grid, &mut counts, &mut out);
        out.into_iter().collect()
    })
}

fn fill(
    lambda: &Partition,
    mu: &Partition,
    cells: &[(usize, u32)],
    idx: usize,
    grid: &mut [Vec<u32>],
    counts: &mut [u32],
    out: &mut BTreeMap<Partition, u64>,
) {
    if idx == cells.len() {
        let content: Vec<u32> = counts[1..].iter().copied().take_while(|&c| c > 0).collect();
        *out.entry(Partition::from_sorted(content)).or_default() += 1;
        return;
    }
    let (r, c) = cells[idx];
    let cu = c as usize;
    // weakly increasing along the row: bounded by the cell to the right
    let mut hi = if c + 1 < lambda.part(r) {
        grid[r][cu + 1]
    } else {
        u32::MAX
    };
    // strictly increasing down the column
    let lo = if r > 0 && c >= mu.part(r - 1) {
        grid[r - 1][cu] + 1
    } else {
        1
    };
    // lattice: a new letter v needs count[v-1] > count[v]
    let max_used = counts.iter().rposition(|&x| x > 0).unwrap_or(0) as u32;
    hi = hi.min(max_used + 1);
    for v in lo..=hi {
        let vu = v as usize;
        if v > 1 && counts[vu - 1] <= counts[vu] {
            continue;
        }
        grid[r][cu] = v;
        counts[vu] += 1;
        fill(lambda, mu, cells, idx + 1, grid, counts, out);
        counts[vu] -= 1;
    }
    grid[r][cu] = 0;
}

/// `c^λ_{μν}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    skew_expansion(lambda, mu)
        .iter()
        .find(|(k, _)| k == nu)
        .map_or(0, |(_, c)| *c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pieri_products() {
        let got: Vec<_> = lr_product(&p(&[1]), &p(&[1]), usize::MAX).to_vec();
        assert_eq!(got, vec![(p(&[1, 1]), 1), (p(&[2]), 1)]);
        let got: Vec<_> = lr_product(&p(&[2]), &p(&[1]), usize::MAX).to_vec();
        assert_eq!(got, vec![(p(&[2, 1]), 1), (p(&[3]), 1)]);
        let got: Vec<_> = lr_product(&p(&[1]), &p(&[1]), 1).to_vec();
        assert_eq!(got, vec![(p(&[2]), 1)]);
    }

    #[test]
    fn classic_coefficients() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1]), &p(&[1])), 0);
        assert_eq!(lr_coefficient(&p(&[4, 2]), &p(&[2, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    }

    #[test]
    fn strip_and_fill_enumerations_agree() {
        for n in 0..=7 {
            for lambda in Partition::all(n) {
                for m in 0..=n {
                    for mu in Partition::all(m) {
                        let skew = skew_expansion(&lambda, &mu);
                        for nu in Partition::all(n - m) {
                            let from_fill = skew.iter().find(|(k, _)| *k == nu).map_or(0, |e| e.1);
                            let from_strip = lr_product(&mu, &nu, usize::MAX)
                                .iter()
                                .find(|(k, _)| *k == lambda)
                                .map_or(0, |e| e.1);
                            assert_eq!(from_fill, from_strip, "c^{lambda}_{mu},{nu}");
                        }
                    }
                }
            }
        }
    }
}

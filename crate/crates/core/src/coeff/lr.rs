//! Littlewood-Richardson coefficients by LR skew tableau enumeration.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::cache::{Cache, CoeffKey};
use crate::partition::{partitions_of, Partition};

/// c^λ_{μν}: the number of LR skew tableaux of shape λ/μ and content ν, i.e.
/// semistandard fillings whose reverse reading word is a lattice word.
/// Returns 0 unless |λ| = |μ| + |ν| and μ ⊆ λ.
pub fn lr_coeff(cache: &Cache, lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return BigInt::zero();
    }
    if nu.is_empty() {
        return if lambda == mu { BigInt::one() } else { BigInt::zero() };
    }
    if mu.is_empty() {
        // c^λ_{(0),ν} = δ_{λν}
        return if lambda == nu { BigInt::one() } else { BigInt::zero() };
    }
    let key = CoeffKey::lr(lambda, mu, nu);
    cache.memo(key, || count_lr_fillings(lambda, mu, nu))
}

fn count_lr_fillings(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    let rows = lambda.length();
    let width = lambda.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    // lattice-word counts per value; filling proceeds in reverse reading order:
    // rows top to bottom, each row right to left
    let mut counts = vec![0i64; nu.length() + 1];
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| {
            let lo = mu.part(r) as usize;
            let hi = lambda.part(r) as usize;
            (lo..hi).rev().map(move |c| (r, c))
        })
        .collect();
    let mut total = BigInt::zero();
    fill(&cells, 0, lambda, mu, nu, &mut grid, &mut counts, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<i64>,
    total: &mut BigInt,
) {
    if idx == cells.len() {
        *total += BigInt::one();
        return;
    }
    let (r, c) = cells[idx];
    for v in 1..=nu.length() as u32 {
        if counts[v as usize] as u64 >= nu.part(v as usize - 1) as u64 {
            continue; // content bound
        }
        // lattice: after placing v, #v must stay <= #(v-1)
        if v > 1 && counts[v as usize] + 1 > counts[v as usize - 1] {
            continue;
        }
        // row weakly increasing left to right: cell to the right was filled before
        if c + 1 < lambda.part(r) as usize && grid[r][c + 1] < v {
            continue;
        }
        // column strictly increasing: cell above (if in the skew shape) was filled before
        if r > 0 && c >= mu.part(r - 1) as usize && c < lambda.part(r - 1) as usize {
            if grid[r - 1][c] >= v {
                continue;
            }
        }
        grid[r][c] = v;
        counts[v as usize] += 1;
        fill(cells, idx + 1, lambda, mu, nu, grid, counts, total);
        counts[v as usize] -= 1;
        grid[r][c] = 0;
    }
}

/// Multi-LR coefficient c^λ_{μ¹,…,μᵈ} by left fold over intermediate shapes:
/// Σ_ν c^ν_{μ¹,…,μᵈ⁻¹} · c^λ_{ν,μᵈ}. Factors equal to (0) are dropped first.
pub fn multi_lr_coeff(cache: &Cache, lambda: &Partition, factors: &[Partition]) -> BigInt {
    let factors: Vec<&Partition> = factors.iter().filter(|f| !f.is_empty()).collect();
    if factors.is_empty() {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    }
    if factors.len() == 1 {
        return if lambda == factors[0] { BigInt::one() } else { BigInt::zero() };
    }
    let total: usize = factors.iter().map(|f| f.size()).sum();
    if lambda.size() != total {
        return BigInt::zero();
    }
    let owned: Vec<Partition> = factors.into_iter().cloned().collect();
    let key = CoeffKey::multi_lr(lambda, &owned);
    cache.memo(key, || {
        if owned.len() == 2 {
            return lr_coeff(cache, lambda, &owned[0], &owned[1]);
        }
        let (last, head) = owned.split_last().unwrap();
        let head_size: usize = head.iter().map(|f| f.size()).sum();
        let mut sum = BigInt::zero();
        for nu in partitions_of(head_size, lambda.length(), Some(lambda.part(0))) {
            if !lambda.contains(&nu) {
                continue;
            }
            let outer = lr_coeff(cache, lambda, &nu, last);
            if outer.is_zero() {
                continue;
            }
            let inner = multi_lr_coeff(cache, &nu, head);
            if inner.is_zero() {
                continue;
            }
            sum += inner * outer;
        }
        sum
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::dim_gl;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_factor_identity() {
        let cache = Cache::new();
        assert_eq!(lr_coeff(&cache, &p("3,1"), &p("3,1"), &Partition::empty()), BigInt::one());
        assert_eq!(lr_coeff(&cache, &p("4"), &p("3,1"), &Partition::empty()), BigInt::zero());
        assert_eq!(multi_lr_coeff(&cache, &p("3,1"), &[p("3,1")]), BigInt::one());
    }

    #[test]
    fn basic_pieri_case() {
        let cache = Cache::new();
        assert_eq!(lr_coeff(&cache, &p("2,1"), &p("2"), &p("1")), BigInt::one());
        assert_eq!(lr_coeff(&cache, &p("2,1"), &p("1"), &p("1,1")), BigInt::one());
        assert_eq!(lr_coeff(&cache, &p("2,2"), &p("2"), &p("1,1")), BigInt::zero());
    }

    #[test]
    fn multi_lr_three_boxes() {
        let cache = Cache::new();
        assert_eq!(
            multi_lr_coeff(&cache, &p("2,1"), &[p("1"), p("1"), p("1")]),
            BigInt::from(2)
        );
        // dropping (0) factors changes nothing
        assert_eq!(
            multi_lr_coeff(
                &cache,
                &p("2,1"),
                &[p("1"), Partition::empty(), p("1"), p("1")]
            ),
            BigInt::from(2)
        );
    }

    #[test]
    fn symmetry_up_to_eight() {
        let cache = Cache::new();
        for n in 2..=8usize {
            for lam in partitions_of(n, 4, None) {
                for k in 1..n {
                    for mu in partitions_of(k, 4, None) {
                        for nu in partitions_of(n - k, 4, None) {
                            assert_eq!(
                                lr_coeff(&cache, &lam, &mu, &nu),
                                lr_coeff(&cache, &lam, &nu, &mu),
                                "c^{lam}_{{{mu},{nu}}}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_identity_n4() {
        // Σ_λ c^λ_{μν} dim_N(λ) = dim_N(μ) dim_N(ν) with the Weyl dimension
        // formula as the independent oracle
        let cache = Cache::new();
        let n = 4u32;
        for total in 2..=8usize {
            for k in 1..total {
                for mu in partitions_of(k, n as usize, None) {
                    for nu in partitions_of(total - k, n as usize, None) {
                        let mut lhs = BigInt::zero();
                        for lam in partitions_of(total, n as usize, None) {
                            lhs += lr_coeff(&cache, &lam, &mu, &nu) * dim_gl(&lam, n);
                        }
                        assert_eq!(
                            lhs,
                            dim_gl(&mu, n) * dim_gl(&nu, n),
                            "tensor dimension for mu={mu}, nu={nu}"
                        );
                    }
                }
            }
        }
    }
}

//! Orbit multiplicities of the power-sum polynomial and the obstruction
//! certifier.
//!
//! The central quantity is
//!   b(λ,ρ,D,d) = Σ_{μ¹..μᵈ, μⁱ ⊢ D·i·ρ̂_i} c^λ_{μ¹..μᵈ} · Π_i a_{μⁱ}(ρ̂_i, iD),
//! summing which over all ρ ⊢_m d gives the multiplicity of λ* in the
//! coordinate ring of the power-sum orbit. Lifting by e_Ξ rectangles turns
//! these into lower bounds for the orbit closure, and comparing against the
//! plethysm/Kostka upper bound of the product orbit certifies a separation.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coeff::{kostka, multi_lr_coeff, plethysm, Cache};
use crate::error::{Error, Result};
use crate::latin::alon_tarsi_difference;
use crate::partition::{partitions_of, Content, Partition};

/// The binomial feasibility condition for odd degrees:
/// binomial(2(D−1), D−1) ≥ 2(m−1).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OddCondition {
    pub degree: u32,
    pub m: usize,
    #[serde(serialize_with = "ser_bigint")]
    pub binomial: BigInt,
    pub holds: bool,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl OddCondition {
    pub fn check(degree: u32, m: usize) -> Self {
        let b = binomial(BigInt::from(2 * (degree as i64 - 1)), BigInt::from(degree as i64 - 1));
        let holds = b >= BigInt::from(2 * (m as i64 - 1));
        OddCondition { degree, m, binomial: b, holds }
    }

    pub fn require(degree: u32, m: usize) -> Result<Self> {
        let c = Self::check(degree, m);
        if c.holds {
            Ok(c)
        } else {
            Err(Error::ConditionFailed(c))
        }
    }
}

/// b(λ,ρ,D,d), exact. Factors with ρ̂_i = 0 contribute μⁱ = (0) with
/// plethysm factor 1; every μⁱ longer than λ is pruned since its multi-LR
/// coefficient vanishes.
pub fn b_coeff(
    cache: &Cache,
    lambda: &Partition,
    rho: &Partition,
    degree: u32,
    d: usize,
) -> Result<BigInt> {
    if lambda.size() != d * degree as usize {
        return Err(Error::SizeMismatch {
            expected: d * degree as usize,
            found: lambda.size(),
            what: "b coefficient needs |lambda| = d*D",
        });
    }
    let freq = rho.frequency_notation(d)?;
    let mut total = BigInt::zero();
    let mut factors: Vec<Partition> = vec![Partition::empty(); d];
    sweep_mu_tuples(cache, lambda, &freq, degree, 0, &BigInt::one(), &mut factors, &mut total)?;
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn sweep_mu_tuples(
    cache: &Cache,
    lambda: &Partition,
    freq: &Content,
    degree: u32,
    i: usize,
    coeff: &BigInt,
    factors: &mut Vec<Partition>,
    total: &mut BigInt,
) -> Result<()> {
    let d = freq.len();
    if i == d {
        let c = multi_lr_coeff(cache, lambda, factors);
        if !c.is_zero() {
            *total += coeff * c;
        }
        return Ok(());
    }
    let fi = freq.count(i) as usize;
    if fi == 0 {
        factors[i] = Partition::empty();
        return sweep_mu_tuples(cache, lambda, freq, degree, i + 1, coeff, factors, total);
    }
    let boxes = degree as usize * (i + 1) * fi;
    for mu in partitions_of(boxes, lambda.length(), Some(lambda.part(0))) {
        if !lambda.contains(&mu) {
            continue;
        }
        let a = plethysm(cache, &mu, fi, ((i + 1) * degree as usize) as u32)?;
        if a.is_zero() {
            continue;
        }
        factors[i] = mu;
        let next = coeff * &a;
        sweep_mu_tuples(cache, lambda, freq, degree, i + 1, &next, factors, total)?;
    }
    factors[i] = Partition::empty();
    Ok(())
}

/// mult_{λ*} of the coordinate ring of the power-sum orbit:
/// Σ over ρ ⊢ d with at most m parts of b(λ,ρ,D,d).
pub fn mult_orbit_powersum(
    cache: &Cache,
    lambda: &Partition,
    m: usize,
    degree: u32,
    d: usize,
) -> Result<BigInt> {
    if lambda.size() != d * degree as usize {
        return Err(Error::SizeMismatch {
            expected: d * degree as usize,
            found: lambda.size(),
            what: "orbit multiplicity needs |lambda| = d*D",
        });
    }
    if lambda.length() > m {
        return Err(Error::SizeMismatch {
            expected: m,
            found: lambda.length(),
            what: "orbit multiplicity needs length(lambda) <= m",
        });
    }
    let mut total = BigInt::zero();
    for rho in partitions_of(d, m, None) {
        total += b_coeff(cache, lambda, &rho, degree, d)?;
    }
    Ok(total)
}

/// The rectangle budget of a single ρ:
/// Σ ⌈ρ_i/(D−2)⌉ for even D, Σ 2⌈ρ_i/(2(D−2))⌉ for odd D.
pub fn e_rho(rho: &Partition, m: usize, degree: u32) -> Result<u32> {
    if degree < 3 {
        return Err(Error::DegenerateInput(format!("e_rho needs D >= 3, got {degree}")));
    }
    if rho.length() > m {
        return Err(Error::SizeMismatch {
            expected: m,
            found: rho.length(),
            what: "e_rho needs length(rho) <= m",
        });
    }
    let dm2 = degree - 2;
    let e = if degree % 2 == 0 {
        rho.parts().iter().map(|&p| p.div_ceil(dm2)).sum()
    } else {
        rho.parts().iter().map(|&p| 2 * p.div_ceil(2 * dm2)).sum()
    };
    Ok(e)
}

/// The closed form for max{e_ρ : ρ ⊢_m d}:
/// even D: d if d ≤ m, else m + ⌊(d−m)/(D−2)⌋;
/// odd D: twice that with the doubled divisor, under the binomial condition.
pub fn e_star(d: usize, m: usize, degree: u32) -> Result<u32> {
    if degree < 3 {
        return Err(Error::DegenerateInput(format!("e_star needs D >= 3, got {degree}")));
    }
    let dm2 = (degree - 2) as usize;
    if degree % 2 == 0 {
        Ok(if d <= m { d as u32 } else { (m + (d - m) / dm2) as u32 })
    } else {
        OddCondition::require(degree, m)?;
        Ok(if d <= m {
            2 * d as u32
        } else {
            2 * (m as u32) + 2 * ((d - m) / (2 * dm2)) as u32
        })
    }
}

/// Lower bound for the orbit-closure multiplicity at the lifted type:
/// returns (λ + (m × e_Ξ·D), Σ_{ρ∈Ξ} b(λ,ρ,D,d)).
pub fn closure_lower_bound(
    cache: &Cache,
    lambda: &Partition,
    xi: &[Partition],
    m: usize,
    degree: u32,
    d: usize,
) -> Result<(Partition, BigInt)> {
    for rho in xi {
        if rho.size() != d || rho.length() > m {
            return Err(Error::SizeMismatch {
                expected: d,
                found: rho.size(),
                what: "every rho in Xi must be a partition of d with length <= m",
            });
        }
    }
    if degree % 2 == 1 {
        OddCondition::require(degree, m)?;
    }
    let mut e_xi = 0u32;
    let mut bound = BigInt::zero();
    for rho in xi {
        e_xi = e_xi.max(e_rho(rho, m, degree)?);
        bound += b_coeff(cache, lambda, rho, degree, d)?;
    }
    let lifted = lambda.add_rowwise(&Partition::rect(m, e_xi * degree));
    Ok((lifted, bound))
}

/// mult_{ν*} of the coordinate ring of the product orbit, which equals the
/// plethysm coefficient with the slot order the caller supplies. The paper's
/// identity uses both a_λ(D,d) and a_ν(m,2m+2) faces, so the slots stay raw.
pub fn mult_orbit_product(cache: &Cache, nu: &Partition, d: usize, degree: u32) -> Result<BigInt> {
    plethysm(cache, nu, d, degree)
}

/// Everything the m-th separation instance certifies, serializable as JSON.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionCertificate {
    pub m: usize,
    #[serde(rename = "D")]
    pub degree: u32,
    pub d: usize,
    pub lambda: String,
    pub nu: String,
    pub xi: Vec<String>,
    pub e_xi: u32,
    /// b(λ,ρ,D,d) per ρ ∈ Ξ, keys in Ξ order.
    pub b_values: Vec<(String, String)>,
    pub lower_bound_p: String,
    pub upper_bound_q: String,
    pub kostka_witness: String,
    /// Alon-Tarsi difference for m, when the enumeration budget allows it.
    pub alon_tarsi_checked: Option<String>,
    pub separation: bool,
    /// a_ν(2(m+1), m) with the "not a vanishing-ideal occurrence obstruction"
    /// threshold 2; advisory, only computed at desk scale.
    pub plethysm_advisory: Option<String>,
    pub engine_version: String,
}

/// Builds the Theorem-2 style certificate for even m ≥ 4: λ = (2m),
/// Ξ = {(2),(1,1)}, ν = (2m) + (m × 2m); lower bound 2 against the
/// min(plethysm, Kostka) upper bound of the product orbit.
pub fn certify_obstruction(cache: &Cache, m: usize) -> Result<ObstructionCertificate> {
    if m < 4 || m % 2 != 0 {
        return Err(Error::DegenerateInput(format!(
            "the certified family needs even m >= 4, got {m}"
        )));
    }
    let degree = m as u32;
    let d = 2usize;
    let lambda = Partition::new(vec![2 * m as u32]);
    let xi = vec![Partition::new(vec![2]), Partition::new(vec![1, 1])];

    let mut b_values = Vec::new();
    for rho in &xi {
        let b = b_coeff(cache, &lambda, rho, degree, d)?;
        b_values.push((rho.to_string(), b.to_string()));
    }
    let (nu, lower) = closure_lower_bound(cache, &lambda, &xi, m, degree, d)?;
    let e_xi = xi
        .iter()
        .map(|rho| e_rho(rho, m, degree))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap();
    debug_assert_eq!(nu, lambda.add_rowwise(&Partition::rect(m, e_xi * degree)));

    // upper bound for the product orbit: a_ν(m, 2m+2) capped by the Kostka witness
    let content = Content::new(vec![2 * m as u32 + 2; m]);
    let kostka_witness = kostka(cache, &nu, &content)?;
    let pleth = mult_orbit_product(cache, &nu, m, 2 * m as u32 + 2)?;
    let upper = pleth.min(kostka_witness.clone());

    let separation = lower > upper;

    // advisory: Alon-Tarsi condition for m (occurence-obstruction annotation)
    let alon_tarsi_checked = if m <= 6 {
        Some(alon_tarsi_difference(m, m >= 6)?.to_string())
    } else {
        None
    };
    // advisory: a_ν(2(m+1), m) > 2 rules out vanishing-ideal occurrence
    // obstructions; only computed where the solve is desk-scale
    let plethysm_advisory = if m <= 4 {
        Some(plethysm(cache, &nu, 2 * (m + 1), degree)?.to_string())
    } else {
        None
    };

    Ok(ObstructionCertificate {
        m,
        degree,
        d,
        lambda: lambda.to_string(),
        nu: nu.to_string(),
        xi: xi.iter().map(|r| r.to_string()).collect(),
        e_xi,
        b_values,
        lower_bound_p: lower.to_string(),
        upper_bound_q: upper.to_string(),
        kostka_witness: kostka_witness.to_string(),
        alon_tarsi_checked,
        separation,
        plethysm_advisory,
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}

/// Positivity instance of the odd-degree corollary: for odd D and
/// e = 2⌈d/(2(D−2))⌉ the type (dD) + (m × eD) has a_≥1 in degree d+me.
/// Returns (type, plethysm value, value ≥ 1).
pub fn plethysm_positivity_instance(
    cache: &Cache,
    degree: u32,
    m: usize,
    d: usize,
) -> Result<(Partition, BigInt, bool)> {
    if degree % 2 == 0 || degree < 3 {
        return Err(Error::ConditionFailed(OddCondition::check(degree, m)));
    }
    OddCondition::require(degree, m)?;
    let e = 2 * (d as u32).div_ceil(2 * (degree - 2));
    let ty = Partition::new(vec![d as u32 * degree]).add_rowwise(&Partition::rect(m, e * degree));
    let value = plethysm(cache, &ty, d + m * e as usize, degree)?;
    let positive = value >= BigInt::one();
    Ok((ty, value, positive))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn b_values_of_the_theorem() {
        let cache = Cache::new();
        assert_eq!(b_coeff(&cache, &p("8"), &p("2"), 4, 2).unwrap(), BigInt::one());
        assert_eq!(b_coeff(&cache, &p("8"), &p("1,1"), 4, 2).unwrap(), BigInt::one());
        assert!(matches!(
            b_coeff(&cache, &p("7"), &p("2"), 4, 2),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn powersum_orbit_multiplicity() {
        let cache = Cache::new();
        assert_eq!(
            mult_orbit_powersum(&cache, &p("8"), 4, 4, 2).unwrap(),
            BigInt::from(2)
        );
        // single rho when m = 1
        assert_eq!(
            mult_orbit_powersum(&cache, &p("8"), 1, 4, 2).unwrap(),
            b_coeff(&cache, &p("8"), &p("2"), 4, 2).unwrap()
        );
    }

    #[test]
    fn e_rho_values() {
        assert_eq!(e_rho(&p("2"), 4, 4).unwrap(), 1);
        assert_eq!(e_rho(&p("1,1"), 4, 4).unwrap(), 2);
        assert_eq!(e_rho(&p("1"), 2, 3).unwrap(), 2);
        assert_eq!(e_rho(&Partition::empty(), 3, 5).unwrap(), 0);
        assert!(e_rho(&p("1"), 1, 2).is_err());
    }

    #[test]
    fn e_star_matches_formula_and_max() {
        assert_eq!(e_star(5, 2, 4).unwrap(), 2 + 1);
        assert_eq!(e_star(3, 2, 3).unwrap(), 4);
        for degree in [3u32, 4, 5, 6] {
            for m in 1..=4usize {
                if degree % 2 == 1 && !OddCondition::check(degree, m).holds {
                    continue;
                }
                for d in 1..=8usize {
                    let star = e_star(d, m, degree).unwrap();
                    let max = partitions_of(d, m, None)
                        .map(|rho| e_rho(&rho, m, degree).unwrap())
                        .max();
                    assert_eq!(Some(star), max, "e_star at d={d}, m={m}, D={degree}");
                }
            }
        }
    }

    #[test]
    fn closure_bound_theorem_instance() {
        let cache = Cache::new();
        let (nu, bound) =
            closure_lower_bound(&cache, &p("8"), &[p("2"), p("1,1")], 4, 4, 2).unwrap();
        assert_eq!(nu, p("16,8,8,8"));
        assert_eq!(bound, BigInt::from(2));

        // single-rho corollary instance: b((dD),(d),D,d) = 1
        let (_, bound) = closure_lower_bound(&cache, &p("12"), &[p("3")], 2, 4, 3).unwrap();
        assert_eq!(bound, BigInt::one());

        // empty Xi
        let (nu, bound) = closure_lower_bound(&cache, &p("8"), &[], 4, 4, 2).unwrap();
        assert_eq!(nu, p("8"));
        assert_eq!(bound, BigInt::zero());
    }

    #[test]
    fn certificate_m4() {
        let cache = Cache::new();
        let cert = certify_obstruction(&cache, 4).unwrap();
        assert_eq!(cert.nu, "16,8,8,8");
        assert_eq!(cert.lower_bound_p, "2");
        assert_eq!(cert.upper_bound_q, "1");
        assert_eq!(cert.kostka_witness, "1");
        assert!(cert.separation);
        assert!(certify_obstruction(&cache, 3).is_err());
        assert!(certify_obstruction(&cache, 5).is_err());
    }

    #[test]
    fn odd_condition_values() {
        let c = OddCondition::check(3, 2);
        assert!(c.holds);
        assert_eq!(c.binomial, BigInt::from(6));
        let c = OddCondition::check(3, 5);
        assert!(!c.holds); // 6 < 8
    }

    #[test]
    fn positivity_instance_d3() {
        let cache = Cache::new();
        let (ty, value, positive) = plethysm_positivity_instance(&cache, 3, 2, 1).unwrap();
        assert_eq!(ty, p("9,6"));
        assert!(positive, "a_(9,6)(5,3) = {value} should be >= 1");
        assert!(plethysm_positivity_instance(&cache, 4, 2, 1).is_err());
    }
}

//! Verification sweeps: each suite checks one family of identities over a
//! configurable grid and reports a clean pass or the first counterexample
//! in grid order. Sweeps are pure; with `jobs > 1` the cells are checked in
//! parallel and the leftmost failure is still the one reported, so output
//! is byte-identical regardless of the worker count.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::am::{
    a_number, exp_geometric, m_log_base, m_number, m_series, scaled_bernoulli_frac,
    scaled_bernoulli_frac_baseline, sign_class, vandiver_decompose, AmQuery,
};
use crate::arith::{
    binomial, int_pow, integer, is_p_integral, neg_one_pow, p_adic_valuation, prime_factors,
    rational, Rational,
};
use crate::bernoulli::{
    bernoulli_number, bernoulli_numbers, euler_at_zero, euler_poly, stirling2,
    von_staudt_clausen,
};
use crate::egf::{EgfSeries, HurwitzCheck};
use crate::fox::{fox_number, fox_series_even, fox_series_odd, FoxQuery};
use crate::gy::{gam_condition, gy_series, nec_witness, GyQuery};
use crate::poly::{m_minus_hn_divisible, m_polynomial, BivarPoly};

/// The verification suites exposed by the sweep driver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Integrality of M_n(h,k) over the full signed grid.
    AmIntegrality,
    /// The sum, quotient, and logarithmic routes to M_n(h,k) agree.
    RouteEquivalence,
    /// k^n B_n(h/k) decomposes as integer minus prime reciprocals, with an
    /// h-independent fractional part; Bernoulli denominators are the
    /// products of their von Staudt-Clausen primes.
    Vandiver,
    /// Homogeneity, reflection, shift, and the k = 1 power-sum identity.
    AmSymmetry,
    /// The five divisibility facts for M_n(h,k) as a polynomial, plus
    /// symbolic/numeric evaluation consistency.
    PolyDivisibility,
    /// The alternating-sign predictions and the table corollary.
    AmSigns,
    /// Integer coefficients whenever every prime divisor of j divides h or k.
    GyIntegrality,
    /// A non-p-integral coefficient at n = j+p-1 for every violating prime.
    GyNecessity,
    /// Integrality and route equivalence for scaled Euler values.
    Fox,
    /// Randomized closure checks for integer-coefficient series.
    HurwitzClosure,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::AmIntegrality,
        Suite::RouteEquivalence,
        Suite::Vandiver,
        Suite::AmSymmetry,
        Suite::PolyDivisibility,
        Suite::AmSigns,
        Suite::GyIntegrality,
        Suite::GyNecessity,
        Suite::Fox,
        Suite::HurwitzClosure,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::AmIntegrality => "am-integrality",
            Suite::RouteEquivalence => "route-equivalence",
            Suite::Vandiver => "vandiver",
            Suite::AmSymmetry => "am-symmetry",
            Suite::PolyDivisibility => "poly-divisibility",
            Suite::AmSigns => "am-signs",
            Suite::GyIntegrality => "gy-integrality",
            Suite::GyNecessity => "gy-necessity",
            Suite::Fox => "fox",
            Suite::HurwitzClosure => "hurwitz-closure",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Grid bounds; `None` falls back to each suite's default, which matches
/// the documented verification ranges.
#[derive(Clone, Copy, Debug, Default)]
pub struct SweepConfig {
    pub max_n: Option<usize>,
    pub max_h: Option<i64>,
    pub max_k: Option<i64>,
    pub max_j: Option<usize>,
    pub order: Option<usize>,
    pub jobs: usize,
}

impl SweepConfig {
    fn jobs(&self) -> usize {
        self.jobs.max(1)
    }
}

/// A failed cell: the query, what the identity predicted, what came out.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Witness {
    pub query: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Counterexample(Witness),
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub suite: Suite,
    pub grid: String,
    pub cells: usize,
    pub outcome: Outcome,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }
}

/// Check every cell, first counterexample (in cell order) wins.
fn run_cells<T, F>(jobs: usize, cells: &[T], check: F) -> Option<Witness>
where
    T: Sync,
    F: Fn(&T) -> Option<Witness> + Sync + Send,
{
    if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool");
        pool.install(|| cells.par_iter().find_map_first(&check))
    } else {
        cells.iter().find_map(check)
    }
}

type Phase<'a> = (usize, Box<dyn FnOnce() -> Option<Witness> + 'a>);

/// Run phases in order, stopping at the first counterexample.
fn phased(suite: Suite, grid: String, phases: Vec<Phase<'_>>) -> SweepReport {
    let mut cells = 0;
    for (count, phase) in phases {
        cells += count;
        if let Some(w) = phase() {
            return SweepReport {
                suite,
                grid,
                cells,
                outcome: Outcome::Counterexample(w),
            };
        }
    }
    SweepReport {
        suite,
        grid,
        cells,
        outcome: Outcome::Pass,
    }
}

fn signed_range(bound: i64) -> impl Iterator<Item = i64> {
    -bound..=bound
}

fn nonzero_signed_range(bound: i64) -> impl Iterator<Item = i64> {
    (-bound..=bound).filter(|&k| k != 0)
}

pub fn run_suite(suite: Suite, cfg: &SweepConfig) -> SweepReport {
    match suite {
        Suite::AmIntegrality => am_integrality(cfg),
        Suite::RouteEquivalence => route_equivalence(cfg),
        Suite::Vandiver => vandiver(cfg),
        Suite::AmSymmetry => am_symmetry(cfg),
        Suite::PolyDivisibility => poly_divisibility(cfg),
        Suite::AmSigns => am_signs(cfg),
        Suite::GyIntegrality => gy_integrality(cfg),
        Suite::GyNecessity => gy_necessity(cfg),
        Suite::Fox => fox(cfg),
        Suite::HurwitzClosure => hurwitz_closure(cfg),
    }
}

fn am_integrality(cfg: &SweepConfig) -> SweepReport {
    let max_n = cfg.max_n.unwrap_or(40);
    let max_h = cfg.max_h.unwrap_or(12);
    let max_k = cfg.max_k.unwrap_or(12);
    bernoulli_numbers(max_n);
    let cells: Vec<(usize, i64, i64)> = (0..=max_n)
        .flat_map(|n| {
            signed_range(max_h).flat_map(move |h| nonzero_signed_range(max_k).map(move |k| (n, h, k)))
        })
        .collect();
    let check = |&(n, h, k): &(usize, i64, i64)| match m_number(&AmQuery::new(n, h, k)) {
        Ok(_) => None,
        Err(e) => Some(Witness {
            query: format!("M_{n}({h},{k})"),
            expected: "an integer".into(),
            actual: e.to_string(),
        }),
    };
    let count = cells.len();
    let jobs = cfg.jobs();
    phased(
        Suite::AmIntegrality,
        format!("n <= {max_n}, |h| <= {max_h}, 1 <= |k| <= {max_k}"),
        vec![(count, Box::new(move || run_cells(jobs, &cells, check)))],
    )
}

fn route_equivalence(cfg: &SweepConfig) -> SweepReport {
    let max_n = cfg.max_n.unwrap_or(30);
    let max_h = cfg.max_h.unwrap_or(10);
    let max_k = cfg.max_k.unwrap_or(10);
    bernoulli_numbers(max_n);
    // The log-route base depends only on k and dominates the cost, so the
    // grid is chunked by k; the h-factors are shared across all cells.
    let h_factors: Vec<(i64, EgfSeries)> = signed_range(max_h)
        .map(|h| (h, exp_geometric(h, max_n)))
        .collect();
    let ks: Vec<i64> = nonzero_signed_range(max_k).collect();
    let check = {
        let h_factors = &h_factors;
        move |&k: &i64| {
            let base = m_log_base(k, max_n);
            for (h, h_factor) in h_factors {
                let h = *h;
                let quotient_route = m_series(h, k, max_n);
                let log_route = base.mul(h_factor);
                for n in 0..=max_n {
                    let sum_route = match m_number(&AmQuery::new(n, h, k)) {
                        Ok(v) => Rational::from_integer(v),
                        Err(e) => {
                            return Some(Witness {
                                query: format!("M_{n}({h},{k})"),
                                expected: "an integer".into(),
                                actual: e.to_string(),
                            })
                        }
                    };
                    for (route, series) in [("quotient", &quotient_route), ("log", &log_route)] {
                        if series.coeff(n) != &sum_route {
                            return Some(Witness {
                                query: format!("M_{n}({h},{k}) via the {route} route"),
                                expected: sum_route.to_string(),
                                actual: series.coeff(n).to_string(),
                            });
                        }
                    }
                }
            }
            None
        }
    };
    let cells = ks.len() * h_factors.len();
    let jobs = cfg.jobs();
    let witness = run_cells(jobs, &ks, check);
    SweepReport {
        suite: Suite::RouteEquivalence,
        grid: format!("n <= {max_n}, |h| <= {max_h}, 1 <= |k| <= {max_k}"),
        cells,
        outcome: match witness {
            None => Outcome::Pass,
            Some(w) => Outcome::Counterexample(w),
        },
    }
}

fn vandiver(cfg: &SweepConfig) -> SweepReport {
    let max_n = cfg.max_n.unwrap_or(30);
    let max_h = cfg.max_h.unwrap_or(10);
    let max_k = cfg.max_k.unwrap_or(10);
    let vsc_top = 2 * max_n;
    bernoulli_numbers(vsc_top.max(max_n));

    let cells: Vec<(usize, i64, i64)> = (1..=max_n)
        .flat_map(|n| {
            signed_range(max_h).flat_map(move |h| (1..=max_k).map(move |k| (n, h, k)))
        })
        .collect();
    let decomposition_check = move |&(n, h, k): &(usize, i64, i64)| {
        let q = AmQuery::new(n, h, k);
        let d = match vandiver_decompose(&q) {
            Ok(d) => d,
            Err(e) => {
                return Some(Witness {
                    query: format!("decomposition of {k}^{n} B_{n}({h}/{k})"),
                    expected: "integer part plus prime reciprocals".into(),
                    actual: e.to_string(),
                })
            }
        };
        let direct = crate::bernoulli::bernoulli_poly(n, &rational(h, k))
            * Rational::from_integer(int_pow(&BigInt::from(k), n as u32));
        if d.reconstruct() != direct {
            return Some(Witness {
                query: format!("reconstruction of {k}^{n} B_{n}({h}/{k})"),
                expected: direct.to_string(),
                actual: d.reconstruct().to_string(),
            });
        }
        let frac = scaled_bernoulli_frac(n, h, k);
        let baseline = scaled_bernoulli_frac_baseline(n, k);
        if frac != baseline {
            return Some(Witness {
                query: format!("frac({k}^{n} B_{n}({h}/{k}))"),
                expected: baseline.to_string(),
                actual: frac.to_string(),
            });
        }
        None
    };

    let vsc_cells: Vec<usize> = (1..=vsc_top / 2).map(|m| 2 * m).collect();
    let vsc_check = |&n: &usize| {
        let d = match von_staudt_clausen(n) {
            Ok(d) => d,
            Err(e) => {
                return Some(Witness {
                    query: format!("von Staudt-Clausen decomposition of B_{n}"),
                    expected: "integer part plus prime reciprocals".into(),
                    actual: e.to_string(),
                })
            }
        };
        let product: BigInt = d.primes.iter().map(|&p| BigInt::from(p)).product();
        let denom = bernoulli_number(n).denom().clone();
        if denom != product {
            return Some(Witness {
                query: format!("denominator of B_{n}"),
                expected: product.to_string(),
                actual: denom.to_string(),
            });
        }
        None
    };

    let jobs = cfg.jobs();
    let count_a = cells.len();
    let count_b = vsc_cells.len();
    phased(
        Suite::Vandiver,
        format!("n <= {max_n}, |h| <= {max_h}, 1 <= k <= {max_k}; denominators to {vsc_top}"),
        vec![
            (count_a, Box::new(move || run_cells(jobs, &cells, decomposition_check))),
            (count_b, Box::new(move || run_cells(jobs, &vsc_cells, vsc_check))),
        ],
    )
}

fn am_symmetry(cfg: &SweepConfig) -> SweepReport {
    let max_n = cfg.max_n.unwrap_or(20);
    let max_h = cfg.max_h.unwrap_or(10);
    let max_k = cfg.max_k.unwrap_or(10);
    bernoulli_numbers(max_n);

    let symbolic_cells: Vec<usize> = (0..=max_n).collect();
    let symbolic_check = |&n: &usize| {
        let p = m_polynomial(n);
        if !p.is_homogeneous(n as u32) {
            return Some(Witness {
                query: format!("degrees of M_{n}(h,k)"),
                expected: format!("homogeneous of degree {n}"),
                actual: p.render(),
            });
        }
        let h = BivarPoly::var_h();
        let k = BivarPoly::var_k();
        if n != 1 {
            let reflected = p.substitute_h(&k.sub(&h));
            let expected = if n % 2 == 0 { p.clone() } else { p.neg() };
            if reflected != expected {
                return Some(Witness {
                    query: format!("M_{n}(k-h,k)"),
                    expected: expected.render(),
                    actual: reflected.render(),
                });
            }
        }
        let shifted = p.substitute_h(&h.add(&k));
        let delta = if n == 0 {
            BivarPoly::zero()
        } else {
            BivarPoly::monomial((n - 1) as u32, 1, integer(n as i64))
        };
        let expected = p.add(&delta);
        if shifted != expected {
            return Some(Witness {
                query: format!("M_{n}(h+k,k)"),
                expected: expected.render(),
                actual: shifted.render(),
            });
        }
        None
    };

    let numeric_cells: Vec<(usize, i64, i64)> = (0..=max_n)
        .flat_map(|n| {
            signed_range(max_h).flat_map(move |h| (1..=max_k).map(move |k| (n, h, k)))
        })
        .collect();
    let numeric_check = move |&(n, h, k): &(usize, i64, i64)| {
        let value = |n: usize, h: i64| -> Result<BigInt, Witness> {
            m_number(&AmQuery::new(n, h, k)).map_err(|e| Witness {
                query: format!("M_{n}({h},{k})"),
                expected: "an integer".into(),
                actual: e.to_string(),
            })
        };
        let base = match value(n, h) {
            Ok(v) => v,
            Err(w) => return Some(w),
        };
        if n != 1 {
            let reflected = match value(n, k - h) {
                Ok(v) => v,
                Err(w) => return Some(w),
            };
            let expected = if n % 2 == 0 { base.clone() } else { -base.clone() };
            if reflected != expected {
                return Some(Witness {
                    query: format!("M_{n}({},{k})", k - h),
                    expected: expected.to_string(),
                    actual: reflected.to_string(),
                });
            }
        }
        let shifted = match value(n, h + k) {
            Ok(v) => v,
            Err(w) => return Some(w),
        };
        let delta = if n == 0 {
            BigInt::zero()
        } else {
            BigInt::from(n as i64 * k) * int_pow(&BigInt::from(h), (n - 1) as u32)
        };
        let expected = &base + delta;
        if shifted != expected {
            return Some(Witness {
                query: format!("M_{n}({},{k})", h + k),
                expected: expected.to_string(),
                actual: shifted.to_string(),
            });
        }
        if k == 1 && h >= 1 && n >= 1 {
            let mut power_sum = BigInt::zero();
            for m in 0..h {
                power_sum += int_pow(&BigInt::from(m), (n - 1) as u32);
            }
            let expected = power_sum * BigInt::from(n as u64);
            if base != expected {
                return Some(Witness {
                    query: format!("M_{n}({h},1) as a power sum"),
                    expected: expected.to_string(),
                    actual: base.to_string(),
                });
            }
        }
        None
    };

    let jobs = cfg.jobs();
    let count_a = symbolic_cells.len();
    let count_b = numeric_cells.len();
    phased(
        Suite::AmSymmetry,
        format!("symbolic n <= {max_n}; numeric |h| <= {max_h}, 1 <= k <= {max_k}"),
        vec![
            (count_a, Box::new(move || run_cells(jobs, &symbolic_cells, symbolic_check))),
            (count_b, Box::new(move || run_cells(jobs, &numeric_cells, numeric_check))),
        ],
    )
}

fn poly_divisibility(cfg: &SweepConfig) -> SweepReport {
    let max_n = cfg.max_n.unwrap_or(20);
    let grid_h = cfg.max_h.unwrap_or(6);
    let grid_k = cfg.max_k.unwrap_or(6);
    bernoulli_numbers(max_n);

    let var_h = BivarPoly::var_h();
    let var_k = BivarPoly::var_k();

    let symbolic_cells: Vec<usize> = (1..=max_n).collect();
    let h2 = var_h.clone();
    let k2 = var_k.clone();
    let symbolic_check = move |&n: &usize| {
        let p = m_polynomial(n);
        let fail = |factor: &str| {
            Some(Witness {
                query: format!("M_{n}(h,k) mod ({factor})"),
                expected: "0".into(),
                actual: "nonzero remainder".into(),
            })
        };
        if p.divides_into(&h2).is_none() {
            return fail("h");
        }
        if !m_minus_hn_divisible(n) {
            return Some(Witness {
                query: format!("(M_{n}(h,k) - h^{n}) mod (h k)"),
                expected: "0".into(),
                actual: "nonzero remainder".into(),
            });
        }
        let kmh = k2.sub(&h2);
        if n > 1 && p.divides_into(&kmh).is_none() {
            return fail("k - h");
        }
        if n > 1 && n % 2 == 1 {
            let km2h = k2.sub(&h2.scale(&integer(2)));
            if p.divides_into(&km2h).is_none() {
                return fail("k - 2h");
            }
        }
        if n > 2 && n % 2 == 0 {
            let hh = h2.mul(&h2);
            let kmh2 = kmh.mul(&kmh);
            let inner = p.divides_into(&hh);
            if inner.as_ref().and_then(|q| q.divides_into(&kmh2)).is_none() {
                return fail("h^2 (k-h)^2");
            }
        }
        None
    };

    let eval_cells: Vec<(usize, i64, i64)> = (0..=max_n)
        .flat_map(|n| {
            signed_range(grid_h).flat_map(move |h| (1..=grid_k).map(move |k| (n, h, k)))
        })
        .collect();
    let eval_check = |&(n, h, k): &(usize, i64, i64)| {
        let symbolic = m_polynomial(n).eval(&integer(h), &integer(k));
        let direct = match m_number(&AmQuery::new(n, h, k)) {
            Ok(v) => Rational::from_integer(v),
            Err(e) => {
                return Some(Witness {
                    query: format!("M_{n}({h},{k})"),
                    expected: "an integer".into(),
                    actual: e.to_string(),
                })
            }
        };
        (symbolic != direct).then(|| Witness {
            query: format!("M_{n}({h},{k}) symbolically"),
            expected: direct.to_string(),
            actual: symbolic.to_string(),
        })
    };

    let jobs = cfg.jobs();
    let count_a = symbolic_cells.len();
    let count_b = eval_cells.len();
    phased(
        Suite::PolyDivisibility,
        format!("symbolic n <= {max_n}; evaluation |h| <= {grid_h}, 1 <= k <= {grid_k}"),
        vec![
            (count_a, Box::new(move || run_cells(jobs, &symbolic_cells, symbolic_check))),
            (count_b, Box::new(move || run_cells(jobs, &eval_cells, eval_check))),
        ],
    )
}

fn am_signs(cfg: &SweepConfig) -> SweepReport {
    let max_n = cfg.max_n.unwrap_or(40);
    let max_h = cfg.max_h.unwrap_or(12);
    let max_k = cfg.max_k.unwrap_or(12);
    bernoulli_numbers(max_n);

    let cells: Vec<(usize, i64, i64)> = (2..=max_n)
        .flat_map(|n| {
            signed_range(max_h).flat_map(move |h| (1..=max_k).map(move |k| (n, h, k)))
        })
        .collect();
    let claim_check = |&(n, h, k): &(usize, i64, i64)| {
        match sign_class(n, h, k) {
            Ok(c) if c.satisfied => None,
            Ok(c) => Some(Witness {
                query: format!("sign of M_{n}({h},{k})"),
                expected: format!("{:?}", c.claims),
                actual: c.value.to_string(),
            }),
            Err(e) => Some(Witness {
                query: format!("M_{n}({h},{k})"),
                expected: "an integer".into(),
                actual: e.to_string(),
            }),
        }
    };

    // Table corollary: (-1)^{ceil(n/2)} A_n(k) > 0 wherever the claims
    // apply to h = 1 (even n with k >= 2, odd n with k >= 3); the k = 2
    // column vanishes at odd n > 1 (odd-index Genocchi numbers).
    let corollary_cells: Vec<(usize, i64)> = (2..=max_n)
        .flat_map(|n| (2..=max_k).map(move |k| (n, k)))
        .collect();
    let corollary_check = |&(n, k): &(usize, i64)| {
        let a = match a_number(n, k) {
            Ok(v) => v,
            Err(e) => {
                return Some(Witness {
                    query: format!("A_{n}({k})"),
                    expected: "an integer".into(),
                    actual: e.to_string(),
                })
            }
        };
        if n % 2 == 0 || k >= 3 {
            let signed = if n.div_ceil(2) % 2 == 1 { -a.clone() } else { a.clone() };
            (!signed.is_positive()).then(|| Witness {
                query: format!("(-1)^ceil({n}/2) A_{n}({k})"),
                expected: "positive".into(),
                actual: signed.to_string(),
            })
        } else {
            (!a.is_zero()).then(|| Witness {
                query: format!("A_{n}(2) at odd n"),
                expected: "0".into(),
                actual: a.to_string(),
            })
        }
    };

    let jobs = cfg.jobs();
    let count_a = cells.len();
    let count_b = corollary_cells.len();
    phased(
        Suite::AmSigns,
        format!("2 <= n <= {max_n}, |h| <= {max_h}, 1 <= k <= {max_k}"),
        vec![
            (count_a, Box::new(move || run_cells(jobs, &cells, claim_check))),
            (count_b, Box::new(move || run_cells(jobs, &corollary_cells, corollary_check))),
        ],
    )
}

fn gy_integrality(cfg: &SweepConfig) -> SweepReport {
    let max_j = cfg.max_j.unwrap_or(8);
    let max_h = cfg.max_h.unwrap_or(8);
    let max_k = cfg.max_k.unwrap_or(8);
    let order = cfg.order.unwrap_or(30);
    bernoulli_numbers(order + 1);

    let cells: Vec<GyQuery> = (1..=max_j)
        .flat_map(|j| {
            signed_range(max_h).flat_map(move |h| {
                nonzero_signed_range(max_k).map(move |k| GyQuery::new(j, h, k))
            })
        })
        .filter(gam_condition)
        .collect();
    let check = move |q: &GyQuery| match gy_series(q, order).hurwitz_check() {
        HurwitzCheck::AllInteger => None,
        HurwitzCheck::NonInteger { index, value } => Some(Witness {
            query: format!(
                "coefficient {index} of the (j={}, h={}, k={}) series",
                q.j, q.h, q.k
            ),
            expected: "an integer".into(),
            actual: value.to_string(),
        }),
    };
    let count = cells.len();
    let jobs = cfg.jobs();
    phased(
        Suite::GyIntegrality,
        format!("j <= {max_j}, |h| <= {max_h}, 1 <= |k| <= {max_k}, order {order}, prime condition"),
        vec![(count, Box::new(move || run_cells(jobs, &cells, check)))],
    )
}

fn gy_necessity(cfg: &SweepConfig) -> SweepReport {
    let max_j = cfg.max_j.unwrap_or(8);
    let max_h = cfg.max_h.unwrap_or(8);
    let max_k = cfg.max_k.unwrap_or(8);
    bernoulli_numbers(max_j + 8);

    let cells: Vec<(usize, i64, i64, u64)> = (1..=max_j)
        .flat_map(|j| {
            prime_factors(j as u64).into_iter().flat_map(move |p| {
                signed_range(max_h)
                    .filter(move |h| h.unsigned_abs() % p != 0)
                    .flat_map(move |h| {
                        (1..=max_k)
                            .filter(move |k| k.unsigned_abs() % p != 0)
                            .map(move |k| (j, h, k, p))
                    })
            })
        })
        .collect();
    let check = |&(j, h, k, p): &(usize, i64, i64, u64)| {
        let w = match nec_witness(j, h, k, p) {
            Ok(w) => w,
            Err(e) => {
                return Some(Witness {
                    query: format!("witness for (j={j}, h={h}, k={k}, p={p})"),
                    expected: format!("negative {p}-adic valuation at n = {}", j + p as usize - 1),
                    actual: e.to_string(),
                })
            }
        };
        if w.lucas_residue == 0 {
            return Some(Witness {
                query: format!("C({}, {j}) mod {p}", w.n_star),
                expected: "nonzero".into(),
                actual: "0".into(),
            });
        }
        // proof split: terms below i = p-1 are p-integral, the i = p-1
        // term carries the negative valuation
        for i in 0..=(w.n_star - j) {
            let term = bernoulli_number(i)
                * (binomial(w.n_star as u64, i as i64)
                    * int_pow(&BigInt::from(h), (w.n_star - i) as u32)
                    * stirling2(w.n_star - i, j)
                    * int_pow(&BigInt::from(k), i as u32));
            let ok = if i < p as usize - 1 {
                is_p_integral(&term, p).unwrap_or(false)
            } else {
                !term.is_zero() && p_adic_valuation(&term, p).map(|v| v < 0).unwrap_or(false)
            };
            if !ok {
                return Some(Witness {
                    query: format!("term i={i} at n={} for (j={j}, h={h}, k={k}, p={p})", w.n_star),
                    expected: if i < p as usize - 1 {
                        "p-integral".into()
                    } else {
                        "negative valuation".into()
                    },
                    actual: term.to_string(),
                });
            }
        }
        None
    };
    let count = cells.len();
    let jobs = cfg.jobs();
    phased(
        Suite::GyNecessity,
        format!("j <= {max_j}, p | j prime, |h| <= {max_h}, 1 <= k <= {max_k}, p dividing neither"),
        vec![(count, Box::new(move || run_cells(jobs, &cells, check)))],
    )
}

fn fox(cfg: &SweepConfig) -> SweepReport {
    let max_n = cfg.max_n.unwrap_or(30);
    let max_r = cfg.max_h.unwrap_or(10);
    let max_s = cfg.max_k.unwrap_or(9);
    let series_top = max_n.min(25);
    bernoulli_numbers(max_n + 1);

    let pairs: Vec<(i64, i64)> = signed_range(max_r)
        .flat_map(|r| nonzero_signed_range(max_s).map(move |s| (r, s)))
        .collect();
    let check = move |&(r, s): &(i64, i64)| {
        let series = if s % 2 == 0 {
            fox_series_even(r, s, series_top)
        } else {
            fox_series_odd(r, s, series_top)
        }
        .expect("parity matches by construction");
        for n in 0..=max_n {
            let q = FoxQuery::new(n, r, s);
            let direct = match fox_number(&q) {
                Ok(v) => v,
                Err(e) => {
                    return Some(Witness {
                        query: format!("scaled Euler value at (n={n}, r={r}, s={s})"),
                        expected: "an integer".into(),
                        actual: e.to_string(),
                    })
                }
            };
            if n <= series_top && series.coeff(n) != &Rational::from_integer(direct.clone()) {
                return Some(Witness {
                    query: format!("coefficient {n} of the (r={r}, s={s}) series"),
                    expected: direct.to_string(),
                    actual: series.coeff(n).to_string(),
                });
            }
            // the unhalved historical form stays integral too
            let sign = integer(neg_one_pow(r * s));
            let original = (euler_poly(n, &rational(r, s)) - euler_at_zero(n) * sign)
                * Rational::from_integer(int_pow(&BigInt::from(s), n as u32));
            if !original.is_integer() {
                return Some(Witness {
                    query: format!("s^n (E_n(r/s) - (-1)^(rs) E_n(0)) at (n={n}, r={r}, s={s})"),
                    expected: "an integer".into(),
                    actual: original.to_string(),
                });
            }
            // flipping both signs multiplies coefficient n by (-1)^n
            let flipped = match fox_number(&FoxQuery::new(n, -r, -s)) {
                Ok(v) => v,
                Err(e) => {
                    return Some(Witness {
                        query: format!("scaled Euler value at (n={n}, r={}, s={})", -r, -s),
                        expected: "an integer".into(),
                        actual: e.to_string(),
                    })
                }
            };
            let expected = if n % 2 == 0 { direct.clone() } else { -direct.clone() };
            if flipped != expected {
                return Some(Witness {
                    query: format!("(r,s) -> (-r,-s) symmetry at (n={n}, r={r}, s={s})"),
                    expected: expected.to_string(),
                    actual: flipped.to_string(),
                });
            }
        }
        None
    };
    let count = pairs.len();
    let jobs = cfg.jobs();
    phased(
        Suite::Fox,
        format!("n <= {max_n}, |r| <= {max_r}, 1 <= |s| <= {max_s}"),
        vec![(count, Box::new(move || run_cells(jobs, &pairs, check)))],
    )
}

const CLOSURE_TRIALS: usize = 200;
const CLOSURE_SEED: u64 = 0x616d_6e75_6d00;

struct ClosureTrial {
    index: usize,
    f: EgfSeries,
    g: EgfSeries,
    j: usize,
}

fn hurwitz_closure(cfg: &SweepConfig) -> SweepReport {
    let order = cfg.order.unwrap_or(20);
    let mut rng = StdRng::seed_from_u64(CLOSURE_SEED);
    let random_series = |rng: &mut StdRng| {
        let coeffs = (0..=order)
            .map(|_| integer(rng.gen_range(-9..=9)))
            .collect();
        EgfSeries::from_coeffs(coeffs)
    };
    let cells: Vec<ClosureTrial> = (0..CLOSURE_TRIALS)
        .map(|index| ClosureTrial {
            index,
            f: random_series(&mut rng),
            g: random_series(&mut rng),
            j: rng.gen_range(1..=6),
        })
        .collect();

    let check = |t: &ClosureTrial| {
        let report = |op: &str, c: HurwitzCheck| match c {
            HurwitzCheck::AllInteger => None,
            HurwitzCheck::NonInteger { index, value } => Some(Witness {
                query: format!("trial {}: coefficient {index} after {op}", t.index),
                expected: "an integer".into(),
                actual: value.to_string(),
            }),
        };
        report("add", t.f.add(&t.g).hurwitz_check())
            .or_else(|| report("sub", t.f.sub(&t.g).hurwitz_check()))
            .or_else(|| report("mul", t.f.mul(&t.g).hurwitz_check()))
            .or_else(|| {
                let mut coeffs = t.f.coeffs().to_vec();
                coeffs[0] = Rational::zero();
                let dp = EgfSeries::from_coeffs(coeffs)
                    .divided_power(t.j)
                    .expect("constant term cleared");
                report(&format!("divided_power(j={})", t.j), dp.hurwitz_check())
            })
            .or_else(|| {
                let mut coeffs = t.g.coeffs().to_vec();
                coeffs[0] = integer(1);
                let rec = EgfSeries::from_coeffs(coeffs)
                    .reciprocal()
                    .expect("unit constant term");
                report("reciprocal", rec.hurwitz_check())
            })
    };
    let count = cells.len();
    let jobs = cfg.jobs();
    phased(
        Suite::HurwitzClosure,
        format!("{CLOSURE_TRIALS} random integer series, order {order}"),
        vec![(count, Box::new(move || run_cells(jobs, &cells, check)))],
    )
}

//! Schur polynomials, the e/h calculus and Littlewood–Richardson coefficients,
//! plus the ring axioms of the polynomial layer underneath.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use sl2calc::nilhecke::thick::{delta_poly, longest_dd};
use sl2calc::partitions::{enumerate_box, partitions_of, partitions_up_to};
use sl2calc::symfun::{
    apply_da_to_exponents, eh_alternating_sum, elementary_coproduct_defect, lr_coeff, lr_coeff_in, lr_iterated,
    lr_tableau_count, schur_bialternant, schur_dual_giambelli, schur_jacobi_trudy, schur_on, schur_product,
    skew_schur_det, skew_schur_lr, two_alphabet_expand, DaOutcome,
};
use sl2calc::{BigInt, Partition, Poly};

use super::{random, rng_for};
use crate::check::{Check, Outcome};
use crate::config::SuiteConfig;
use crate::params;

pub fn checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    schur_routes(&mut out);
    eh_calculus(cfg, &mut out);
    littlewood_richardson(&mut out);
    ring_axioms(cfg, &mut out);
    out
}

fn schur_routes(out: &mut Vec<Check>) {
    for a in 2..=4usize {
        out.push(Check::new(
            "symfun.schur_three_routes",
            "bialternant = det(h_{α_i+j-i}) = det(ε_{ᾱ_i+j-i}) for α ∈ P(4,4)",
            params!("a" => a, "box" => "4x4"),
            move || {
                Outcome::all(enumerate_box(4, 4).into_iter().map(|alpha| {
                    let jt = schur_jacobi_trudy(&alpha, a);
                    let dual = schur_dual_giambelli(&alpha, a);
                    match schur_bialternant(&alpha, a) {
                        Ok(bi) => Outcome::require(bi == jt && jt == dual, || {
                            format!("α = {alpha}: bialternant {bi}; Jacobi–Trudy {jt}; dual {dual}")
                        }),
                        Err(e) => Outcome::Fail(format!("α = {alpha}: {e}")),
                    }
                }))
            },
        ));
    }
    for a in 1..=4usize {
        out.push(Check::new(
            "symfun.schur_from_longest_dd",
            "D_a(x^{α+δ_a}) = π_α(x_1..x_a)",
            params!("a" => a, "box" => format!("{a}x4")),
            move || {
                let d = longest_dd(a);
                Outcome::all(enumerate_box(a, 4).into_iter().map(|alpha| {
                    let staircase = delta_poly(a);
                    let shifted = staircase.mul_monomial(&alpha.padded(a));
                    Outcome::from_result(d.apply(&shifted).map_err(|e| e.to_string()).and_then(|lhs| {
                        let rhs = schur_bialternant(&alpha, a).map_err(|e| e.to_string())?;
                        Ok(Outcome::require(lhs == rhs, || format!("α = {alpha}: D_a gives {lhs}; bialternant {rhs}")))
                    }))
                }))
            },
        ));
    }
    for a in 1..=3usize {
        out.push(Check::new(
            "symfun.longest_dd_on_monomials",
            "D_a(x^b) = ±π_{sort(b)-δ_a}, or 0 on repeated exponents",
            params!("a" => a, "max_exponent" => 4),
            move || {
                let d = longest_dd(a);
                let mut exps_all = vec![vec![]];
                for _ in 0..a {
                    exps_all = exps_all
                        .into_iter()
                        .flat_map(|v: Vec<u32>| {
                            (0..=4).map(move |e| {
                                let mut w = v.clone();
                                w.push(e);
                                w
                            })
                        })
                        .collect();
                }
                Outcome::all(exps_all.into_iter().map(|exps| {
                    let mono = Poly::monomial(exps.clone(), BigInt::one());
                    let expected = match apply_da_to_exponents(&exps) {
                        DaOutcome::Zero => Poly::zero(a),
                        DaOutcome::Schur { sign, partition } => schur_jacobi_trudy(&partition, a).scale(&BigInt::from(sign)),
                    };
                    match d.apply(&mono) {
                        Ok(got) => Outcome::require(got == expected, || format!("x^{exps:?}: D_a gives {got}; rule gives {expected}")),
                        Err(e) => Outcome::Fail(e.to_string()),
                    }
                }))
            },
        ));
    }
}

fn eh_calculus(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let m_max = cfg.weight_cutoff as i64;
    for a in 1..=4usize {
        out.push(Check::new(
            "symfun.eh_alternating_sum",
            "Σ_{r=0}^m (-1)^r ε_r h_{m-r} = 0 for m ≥ 1",
            params!("a" => a, "m_max" => m_max),
            move || {
                Outcome::all((1..=m_max).map(|m| {
                    let s = eh_alternating_sum(m, a);
                    Outcome::require(s.is_zero(), || format!("m = {m}: {s}"))
                }))
            },
        ));
    }
    for a in 0..=3usize {
        for b in 0..=3usize {
            out.push(Check::new(
                "symfun.elementary_coproduct",
                "ε_s(x,y) = Σ_l ε_{s-l}(x) ε_l(y)",
                params!("a" => a, "b" => b),
                move || {
                    Outcome::all((0..=(a + b + 1) as i64).map(|s| {
                        let d = elementary_coproduct_defect(s, a, b);
                        Outcome::require(d.is_zero(), || format!("s = {s}: defect {d}"))
                    }))
                },
            ));
        }
    }
    for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)] {
        out.push(Check::new(
            "symfun.two_alphabet_expansion",
            "π_γ(x,y) = Σ c_{α,β}^γ π_α(x) π_β(y)",
            params!("a" => a, "b" => b, "max_weight" => 4),
            move || {
                let n = a + b;
                Outcome::all(partitions_up_to(4, None).into_iter().map(|gamma| {
                    let rebuilt = two_alphabet_expand(&gamma, a, b).iter().fold(Poly::zero(n), |acc, ((al, be), c)| {
                        &acc + &(&schur_on(al, n, 0, a) * &schur_on(be, n, a, b)).scale(c)
                    });
                    let direct = schur_on(&gamma, n, 0, n);
                    Outcome::require(rebuilt == direct, || format!("γ = {gamma}: expansion {rebuilt}; direct {direct}"))
                }))
            },
        ));
    }
}

fn describe(map: &BTreeMap<Partition, BigInt>) -> String {
    let terms: Vec<String> = map.iter().map(|(p, c)| format!("{c}·π{p}")).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn littlewood_richardson(out: &mut Vec<Check>) {
    for i in 0..=4u32 {
        for j in 0..=4u32 {
            out.push(Check::new(
                "symfun.lr_positive_and_graded",
                "c_{α,β}^γ ≥ 0, nonzero only for |γ| = |α|+|β|, and c_{α,β}^γ = c_{β,α}^γ",
                params!("weight_alpha" => i, "weight_beta" => j),
                move || lr_positive_and_graded(i, j),
            ));
            out.push(Check::new(
                "symfun.lr_tableau_rule",
                "c_{α,β}^γ equals the number of LR tableaux of shape γ/α and content β",
                params!("weight_alpha" => i, "weight_beta" => j),
                move || {
                    let gammas = partitions_of(i + j, None);
                    Outcome::all(partitions_of(i, None).into_iter().flat_map(|alpha| {
                        let gammas = gammas.clone();
                        partitions_of(j, None).into_iter().flat_map(move |beta| {
                            let alpha = alpha.clone();
                            gammas.clone().into_iter().map(move |gamma| {
                                let c = lr_coeff(&alpha, &beta, &gamma);
                                let t = lr_tableau_count(&alpha, &beta, &gamma);
                                Outcome::require(c == t, || format!("({alpha},{beta};{gamma}): solve {c}, tableaux {t}"))
                            })
                        })
                    }))
                },
            ));
        }
    }
    for i in 1..=3u32 {
        for j in 1..=3u32 {
            out.push(Check::new(
                "symfun.lr_stability",
                "c_{α,β}^γ does not depend on the number of variables once it is ≥ ℓ(α)+ℓ(β)",
                params!("weight_alpha" => i, "weight_beta" => j),
                move || {
                    let gammas = partitions_of(i + j, None);
                    Outcome::all(partitions_of(i, None).into_iter().flat_map(|alpha| {
                        let gammas = gammas.clone();
                        partitions_of(j, None).into_iter().flat_map(move |beta| {
                            let alpha = alpha.clone();
                            gammas.clone().into_iter().map(move |gamma| {
                                let n = alpha.len() + beta.len();
                                let small = lr_coeff_in(&alpha, &beta, &gamma, Some(n));
                                let large = lr_coeff_in(&alpha, &beta, &gamma, Some(n + 2));
                                let full = lr_coeff_in(&alpha, &beta, &gamma, None);
                                Outcome::require(small == large && large == full, || {
                                    format!("({alpha},{beta};{gamma}): {small} / {large} / {full}")
                                })
                            })
                        })
                    }))
                },
            ));
        }
    }
    for a in 1..=3usize {
        for b in 1..=3u32 {
            out.push(Check::new(
                "symfun.lr_rectangle_pairs",
                "c_{α,β}^{(b^a)} = δ_{α,β^c} on P(a,b)",
                params!("a" => a, "b" => b),
                move || {
                    let rect = Partition::rectangle(a, b);
                    let boxes = enumerate_box(a, b);
                    Outcome::all(boxes.iter().flat_map(|alpha| {
                        let rect = rect.clone();
                        boxes.iter().map(move |beta| {
                            let c = lr_coeff(alpha, beta, &rect);
                            let expected = match beta.complement(a, b) {
                                Ok(bc) if &bc == alpha => BigInt::one(),
                                _ => BigInt::zero(),
                            };
                            Outcome::require(c == expected, || format!("α = {alpha}, β = {beta}: {c}"))
                        })
                    }))
                },
            ));
            out.push(Check::new(
                "symfun.lr_rectangle_triples",
                "c_{α,β,γ}^{(b^a)} = c_{α,β}^{γ^c} on P(a,b) (triples of total weight ab)",
                params!("a" => a, "b" => b),
                move || rectangle_triples(a, b),
            ));
        }
    }
    for w in 0..=6u32 {
        out.push(Check::new(
            "symfun.skew_schur_determinant",
            "det(h_{β_s-μ_t+t-s}) = Σ_χ c_{μ,χ}^β π_χ for ℓ(μ) ≤ 3",
            params!("weight_beta" => w),
            move || {
                let mut outcomes = Vec::new();
                for beta in partitions_of(w, None) {
                    for mu in partitions_up_to(w, Some(3)).into_iter().filter(|mu| beta.contains(mu)) {
                        let det = skew_schur_det(&beta, &mu);
                        let lr = skew_schur_lr(&beta, &mu);
                        outcomes.push(Outcome::require(det == lr, || {
                            format!("β = {beta}, μ = {mu}: determinant {}; LR {}", describe(&det), describe(&lr))
                        }));
                    }
                }
                Outcome::all(outcomes)
            },
        ));
    }
}

fn lr_positive_and_graded(i: u32, j: u32) -> Outcome {
    Outcome::all(partitions_of(i, None).into_iter().flat_map(|alpha| {
        partitions_of(j, None).into_iter().map(move |beta| {
            let ab = schur_product(&alpha, &beta, None);
            let ba = schur_product(&beta, &alpha, None);
            let ok = ab.iter().all(|(g, c)| c > &BigInt::zero() && g.weight() == i + j);
            Outcome::require(ok && ab == ba, || format!("π{alpha}·π{beta} = {}; π{beta}·π{alpha} = {}", describe(&ab), describe(&ba)))
        })
    }))
}

fn rectangle_triples(a: usize, b: u32) -> Outcome {
    let rect = Partition::rectangle(a, b);
    let total = a as u32 * b;
    let boxes = enumerate_box(a, b);
    let mut outcomes = Vec::new();
    for alpha in &boxes {
        for beta in &boxes {
            for gamma in &boxes {
                if alpha.weight() + beta.weight() + gamma.weight() != total {
                    continue;
                }
                let lhs = lr_iterated(&[alpha.clone(), beta.clone(), gamma.clone()], &rect);
                let rhs = match gamma.complement(a, b) {
                    Ok(gc) => lr_coeff(alpha, beta, &gc),
                    Err(e) => return Outcome::Fail(e.to_string()),
                };
                outcomes.push(Outcome::require(lhs == rhs, || format!("({alpha},{beta},{gamma}): {lhs} vs {rhs}")));
            }
        }
    }
    Outcome::all(outcomes)
}

fn ring_axioms(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let (seed, samples) = (cfg.seed, cfg.samples);
    for nv in 1..=3usize {
        out.push(Check::new(
            "symfun.poly_ring_axioms",
            "random p, q, r: (pq)r = p(qr), p(q+r) = pq+pr, pq = qp",
            params!("vars" => nv, "samples" => samples),
            move || {
                let mut rng = rng_for(seed, 100 + nv as u64);
                Outcome::all((0..samples).map(|_| {
                    let p = random::poly(&mut rng, nv, 4, 4);
                    let q = random::poly(&mut rng, nv, 4, 4);
                    let r = random::poly(&mut rng, nv, 4, 4);
                    let assoc = &(&p * &q) * &r == &p * &(&q * &r);
                    let dist = &p * &(&q + &r) == &(&p * &q) + &(&p * &r);
                    let comm = &p * &q == &q * &p;
                    Outcome::require(assoc && dist && comm, || format!("p = {p}; q = {q}; r = {r}"))
                }))
            },
        ));
        out.push(Check::new(
            "symfun.poly_exact_division",
            "random p, d ≠ 0: (p·d) / d = p",
            params!("vars" => nv, "samples" => samples),
            move || {
                let mut rng = rng_for(seed, 200 + nv as u64);
                Outcome::all((0..samples).map(|_| {
                    let p = random::poly(&mut rng, nv, 4, 4);
                    let d = random::nonzero_poly(&mut rng, nv, 3, 3);
                    match (&p * &d).div_exact(&d) {
                        Ok(back) => Outcome::require(back == p, || format!("p = {p}; d = {d}; quotient {back}")),
                        Err(e) => Outcome::Fail(format!("p = {p}; d = {d}: {e}")),
                    }
                }))
            },
        ));
    }
    for nv in 2..=4usize {
        out.push(Check::new(
            "symfun.poly_swap_homomorphism",
            "s_i is an involution and a ring homomorphism",
            params!("vars" => nv, "samples" => samples),
            move || {
                let mut rng = rng_for(seed, 300 + nv as u64);
                Outcome::all((0..samples).map(|k| {
                    let i = 1 + k % (nv - 1);
                    let p = random::poly(&mut rng, nv, 4, 4);
                    let q = random::poly(&mut rng, nv, 4, 4);
                    let s = |f: &Poly| f.swap_vars(i);
                    let result = (|| -> Result<bool, sl2calc::ArithError> {
                        let inv = s(&s(&p)?)? == p;
                        let mul = s(&(&p * &q))? == &s(&p)? * &s(&q)?;
                        let add = s(&(&p + &q))? == &s(&p)? + &s(&q)?;
                        Ok(inv && mul && add)
                    })();
                    match result {
                        Ok(ok) => Outcome::require(ok, || format!("i = {i}; p = {p}; q = {q}")),
                        Err(e) => Outcome::Fail(e.to_string()),
                    }
                }))
            },
        ));
    }
}

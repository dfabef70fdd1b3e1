//! The idempotented quantum sl(2): divided-power relations, the canonical
//! basis, decomposition shadows and graded hom ranks.

use std::collections::BTreeMap;

use sl2calc::partitions::q_cardinality;
use sl2calc::udot::{
    canonical_tags, decomposition_multiplicities_ee, decomposition_multiplicities_ef, decomposition_multiplicities_fe,
    generating_functions, hom_rank_enumerated, hom_rank_formula, qbin, qbin_pascal, qfact, structure_constants,
    triple_not_both_canonical,
};
use sl2calc::{Laurent, Tag, UdotElement};

use super::{random, rng_for};
use crate::check::{Check, Outcome};
use crate::config::SuiteConfig;
use crate::params;

/// Largest highest weight used by the representation oracle.
const ACTION_MAX: u32 = 12;
/// Degree up to which the two graded-rank routes are compared.
const HOM_CUTOFF: i64 = 20;

/// Equality as rewritten `EF` normal forms and as operators on `V(N)` for
/// `N ≤ ACTION_MAX`.
fn same_element(lhs: &UdotElement, rhs: &UdotElement) -> Outcome {
    let normal = lhs.to_ef() == rhs.to_ef();
    let action = lhs.same_action(rhs, ACTION_MAX);
    Outcome::require(normal && action, || {
        format!("lhs = {}; rhs = {} (normal forms agree: {normal}, actions agree: {action})", lhs.to_ef(), rhs.to_ef())
    })
}

fn sum_terms(source: i64, target: i64, terms: impl IntoIterator<Item = (Tag, Laurent)>) -> UdotElement {
    terms.into_iter().fold(UdotElement::zero(source, target), |acc, (tag, c)| &acc + &UdotElement::basis(tag, source).scale(&c))
}

pub fn checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    q_numbers(&mut out);
    relations(cfg, &mut out);
    canonical_basis(cfg, &mut out);
    decompositions(cfg, &mut out);
    hom_ranks(cfg, &mut out);
    laurent_axioms(cfg, &mut out);
    out
}

fn q_numbers(out: &mut Vec<Check>) {
    out.push(Check::new(
        "udot.qbin_routes",
        "[m choose j] by product/reflection = q-Pascal recursion, and is bar-invariant",
        params!("m_range" => "-8..8", "j_max" => 6),
        || {
            Outcome::all((-8i64..=8).flat_map(|m| {
                (0..=6u32).map(move |j| {
                    let direct = qbin(m, j);
                    let pascal = qbin_pascal(m, j);
                    Outcome::require(direct == pascal && direct.is_bar_invariant(), || format!("m={m} j={j}: {direct} vs {pascal}"))
                })
            }))
        },
    ));
    for a in 0..=6usize {
        for b in 0..=6u32 {
            out.push(Check::new(
                "udot.q_cardinality",
                "Σ_{α∈P(a,b)} q^{2|α|-ab} = [a+b choose a]",
                params!("a" => a, "b" => b),
                move || Outcome::expect_eq(&q_cardinality(a, b), &qbin(a as i64 + b as i64, a as u32)),
            ));
        }
    }
}

fn relations(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let (p, n_max) = (cfg.power_max, cfg.n_max);
    out.push(Check::new(
        "udot.idempotents",
        "1_n 1_m = δ_{n,m} 1_n and 1_{n+2a} E^{(a)} 1_n = E^{(a)} 1_n, 1_{n-2b} F^{(b)} 1_n = F^{(b)} 1_n",
        params!("n_max" => n_max, "power_max" => p),
        move || {
            let mut outcomes = Vec::new();
            for n in -n_max..=n_max {
                for m in -n_max..=n_max {
                    let prod = &UdotElement::idempotent(n) * &UdotElement::idempotent(m);
                    let expected = if n == m { UdotElement::idempotent(n) } else { UdotElement::zero(m, n) };
                    outcomes.push(Outcome::require(prod == expected, || format!("1_{n}·1_{m} = {prod}")));
                }
                for a in 0..=p {
                    let e = UdotElement::e(a, n);
                    let f = UdotElement::f(a, n);
                    let ok = &(&UdotElement::idempotent(e.target()) * &e) * &UdotElement::idempotent(n) == e
                        && &(&UdotElement::idempotent(f.target()) * &f) * &UdotElement::idempotent(n) == f;
                    outcomes.push(Outcome::require(ok, || format!("weight idempotents do not absorb at n={n}, a={a}")));
                }
            }
            Outcome::all(outcomes)
        },
    ));
    for n in -n_max..=n_max {
        out.push(Check::new(
            "udot.divided_powers",
            "E^{(a)}E^{(b)}1_n = [a+b choose a] E^{(a+b)}1_n, likewise for F, and E^a 1_n = [a]! E^{(a)} 1_n",
            params!("n" => n, "power_max" => p),
            move || {
                let mut outcomes = Vec::new();
                for a in 0..=p {
                    for b in 0..=p {
                        let c = qbin((a + b) as i64, a);
                        let ee = &UdotElement::e(a, n + 2 * b as i64) * &UdotElement::e(b, n);
                        outcomes.push(same_element(&ee, &UdotElement::e(a + b, n).scale(&c)));
                        let ff = &UdotElement::f(a, n - 2 * b as i64) * &UdotElement::f(b, n);
                        outcomes.push(same_element(&ff, &UdotElement::f(a + b, n).scale(&c)));
                    }
                    let power = (0..a).fold(UdotElement::idempotent(n), |acc, _| &UdotElement::e(1, acc.target()) * &acc);
                    outcomes.push(same_element(&power, &UdotElement::e(a, n).scale(&qfact(a))));
                    let power = (0..a).fold(UdotElement::idempotent(n), |acc, _| &UdotElement::f(1, acc.target()) * &acc);
                    outcomes.push(same_element(&power, &UdotElement::f(a, n).scale(&qfact(a))));
                }
                Outcome::all(outcomes)
            },
        ));
        out.push(Check::new(
            "udot.commutation_ef",
            "E^{(a)}F^{(b)}1_n = Σ_j [a-b+n choose j] F^{(b-j)}E^{(a-j)}1_n",
            params!("n" => n, "power_max" => p),
            move || {
                Outcome::all((0..=p).flat_map(|a| {
                    (0..=p).map(move |b| {
                        let lhs = &UdotElement::e(a, n - 2 * b as i64) * &UdotElement::f(b, n);
                        let m = a as i64 - b as i64 + n;
                        let rhs = sum_terms(n, lhs.target(), (0..=a.min(b)).map(|j| (Tag::FE { b: b - j, a: a - j }, qbin(m, j))));
                        same_element(&lhs, &rhs).with_context(|| format!("a={a} b={b}"))
                    })
                }))
            },
        ));
        out.push(Check::new(
            "udot.commutation_fe",
            "F^{(b)}E^{(a)}1_n = Σ_j [b-a-n choose j] E^{(a-j)}F^{(b-j)}1_n",
            params!("n" => n, "power_max" => p),
            move || {
                Outcome::all((0..=p).flat_map(|a| {
                    (0..=p).map(move |b| {
                        let lhs = &UdotElement::f(b, n + 2 * a as i64) * &UdotElement::e(a, n);
                        let m = b as i64 - a as i64 - n;
                        let rhs = sum_terms(n, lhs.target(), (0..=a.min(b)).map(|j| (Tag::EF { a: a - j, b: b - j }, qbin(m, j))));
                        same_element(&lhs, &rhs).with_context(|| format!("a={a} b={b}"))
                    })
                }))
            },
        ));
    }
}

fn canonical_basis(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let (p, n_max) = (cfg.power_max, cfg.n_max);
    for n in -n_max..=n_max {
        out.push(Check::new(
            "udot.canonical_positivity",
            "products of canonical basis elements expand canonically with coefficients in N[q,q^-1]",
            params!("n" => n, "power_max" => p),
            move || {
                let mut outcomes = Vec::new();
                for y in canonical_tags(n, p) {
                    let m = y.target(n);
                    for x in canonical_tags(m, p) {
                        let consts = structure_constants(x, y, n);
                        let ok = consts.iter().all(|(t, c)| c.is_nonnegative() && t.is_preferred_canonical(n));
                        outcomes.push(Outcome::require(ok, || format!("{x}·{y}1_{n} = {consts:?}")));
                    }
                }
                Outcome::all(outcomes)
            },
        ));
        out.push(Check::new(
            "udot.canonical_round_trip",
            "every spanning product has a canonical expansion with the same normal form and action",
            params!("n" => n, "power_max" => p),
            move || {
                Outcome::all((0..=p).flat_map(|a| {
                    (0..=p).flat_map(move |b| {
                        [Tag::EF { a, b }, Tag::FE { b, a }].into_iter().map(move |tag| {
                            let x = UdotElement::basis(tag, n);
                            let c = x.to_canonical();
                            Outcome::all([
                                Outcome::require(c.is_canonical_form(), || format!("{tag}1_{n} ↦ {c} is not canonical")),
                                same_element(&x, &c),
                                Outcome::require(c.to_canonical() == c, || format!("{tag}1_{n}: canonical form not stable")),
                            ])
                        })
                    })
                }))
            },
        ));
    }
    let tn = n_max + 2;
    out.push(Check::new(
        "udot.triple_never_canonical",
        "E^{(a)}F^{(b)}1_{n+2c} and F^{(b)}E^{(c)}1_n are never both canonical (nor the mirrored pair)",
        params!("abc_max" => 3, "n_max" => tn),
        move || {
            let mut outcomes = Vec::new();
            for a in 1..=3 {
                for b in 1..=3 {
                    for c in 1..=3 {
                        for n in -tn..=tn {
                            outcomes.push(match triple_not_both_canonical(a, b, c, n) {
                                Ok(ok) => Outcome::require(ok, || format!("a={a} b={b} c={c} n={n}")),
                                Err(e) => Outcome::Fail(e.to_string()),
                            });
                        }
                    }
                }
            }
            outcomes.push(Outcome::require(triple_not_both_canonical(0, 1, 1, 0).is_err(), || "a = 0 accepted".into()));
            Outcome::all(outcomes)
        },
    ));
}

fn gf_expected(m: i64, max_j: u32) -> BTreeMap<u32, Laurent> {
    (0..=max_j).map(|j| (j, qbin(m, j))).filter(|(_, c)| !c.is_zero()).collect()
}

fn decompositions(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let p = cfg.power_max;
    for a in 0..=p {
        for b in 0..=p {
            out.push(Check::new(
                "udot.decomposition_ee",
                "graded multiplicity of E^{(a+b)} in E^{(a)}E^{(b)} is [a+b choose a]",
                params!("a" => a, "b" => b),
                move || Outcome::expect_eq(&decomposition_multiplicities_ee(a, b), &qbin((a + b) as i64, a)),
            ));
            let lo = b as i64 - a as i64;
            out.push(Check::new(
                "udot.decomposition_ef",
                "for n ≥ b-a the summands of E^{(a)}F^{(b)}1_n give Σ_j [a-b+n choose j] F^{(b-j)}E^{(a-j)}1_n",
                params!("a" => a, "b" => b),
                move || {
                    Outcome::all((lo..=lo + 6).map(|n| match decomposition_multiplicities_ef(a, b, n) {
                        Ok(mult) => {
                            let gf = generating_functions(&mult);
                            let expected = gf_expected(a as i64 - b as i64 + n, a.min(b));
                            let lhs = UdotElement::basis(Tag::EF { a, b }, n);
                            let shadow = sum_terms(n, lhs.target(), gf.iter().map(|(&j, c)| (Tag::FE { b: b - j, a: a - j }, c.clone())));
                            Outcome::all([
                                Outcome::require(gf == expected, || format!("n={n}: {gf:?} vs {expected:?}")),
                                same_element(&lhs, &shadow).with_context(|| format!("n={n}")),
                            ])
                        }
                        Err(e) => Outcome::Fail(format!("n={n}: {e}")),
                    }))
                },
            ));
            out.push(Check::new(
                "udot.decomposition_fe",
                "for n ≤ b-a the summands of F^{(b)}E^{(a)}1_n give Σ_j [b-a-n choose j] E^{(a-j)}F^{(b-j)}1_n",
                params!("a" => a, "b" => b),
                move || {
                    Outcome::all((lo - 6..=lo).map(|n| match decomposition_multiplicities_fe(a, b, n) {
                        Ok(mult) => {
                            let gf = generating_functions(&mult);
                            let expected = gf_expected(b as i64 - a as i64 - n, a.min(b));
                            let lhs = UdotElement::basis(Tag::FE { b, a }, n);
                            let shadow = sum_terms(n, lhs.target(), gf.iter().map(|(&j, c)| (Tag::EF { a: a - j, b: b - j }, c.clone())));
                            Outcome::all([
                                Outcome::require(gf == expected, || format!("n={n}: {gf:?} vs {expected:?}")),
                                same_element(&lhs, &shadow).with_context(|| format!("n={n}")),
                            ])
                        }
                        Err(e) => Outcome::Fail(format!("n={n}: {e}")),
                    }))
                },
            ));
            out.push(Check::new(
                "udot.decomposition_wrong_side",
                "the decompositions are refused on the wrong side of n = b-a",
                params!("a" => a, "b" => b),
                move || {
                    let ef = decomposition_multiplicities_ef(a, b, lo - 1).is_err();
                    let fe = decomposition_multiplicities_fe(a, b, lo + 1).is_err();
                    Outcome::require(ef && fe, || format!("EF refused: {ef}; FE refused: {fe}"))
                },
            ));
        }
    }
}

fn hom_ranks(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let n_max = cfg.n_max.min(4);
    for a in 0..=3u32 {
        for b in 0..=3u32 {
            for delta in 0..=3u32 {
                out.push(Check::new(
                    "udot.hom_rank",
                    "Σ_j q^{e_j} g(a-j)g(b-j)g(δ+j)g(j) equals the count of basis diagrams, up to the degree cutoff",
                    params!("a" => a, "b" => b, "delta" => delta, "n_max" => n_max, "cutoff" => HOM_CUTOFF),
                    move || {
                        Outcome::all((-n_max..=n_max).map(|n| {
                            let formula = hom_rank_formula(a, b, delta, n, HOM_CUTOFF);
                            let counted = hom_rank_enumerated(a, b, delta, n, HOM_CUTOFF);
                            Outcome::require(formula == counted, || format!("n={n}: formula {formula}; enumeration {counted}"))
                        }))
                    },
                ));
            }
        }
    }
}

fn laurent_axioms(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let (seed, samples) = (cfg.seed, cfg.samples);
    out.push(Check::new(
        "udot.laurent_ring_axioms",
        "random f, g, h in Z[q,q^-1]: (fg)h = f(gh), f(g+h) = fg+fh, fg = gf, (fg)/g = f",
        params!("samples" => samples),
        move || {
            let mut rng = rng_for(seed, 500);
            Outcome::all((0..samples).map(|_| {
                let f = random::laurent(&mut rng, 5, 6);
                let g = random::nonzero_laurent(&mut rng, 4, 6);
                let h = random::laurent(&mut rng, 5, 6);
                let ring = &(&f * &g) * &h == &f * &(&g * &h) && &f * &(&g + &h) == &(&f * &g) + &(&f * &h) && &f * &g == &g * &f;
                let bar = (&f * &g).bar() == &f.bar() * &g.bar();
                let div = (&f * &g).div_exact(&g).map(|x| x == f).unwrap_or(false);
                Outcome::require(ring && bar && div, || format!("f = {f}; g = {g}; h = {h}"))
            }))
        },
    ));
}

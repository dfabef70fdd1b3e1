//! The nilHecke algebra, its thick calculus and the idempotent decompositions.

use sl2calc::nilhecke::relations::{self as rel, Relation, Side};
use sl2calc::nilhecke::thick::{e_alpha, e_l, idempotent, lambda_alpha, sigma_alpha, sq_sequences};
use sl2calc::nilhecke::staircase_basis;
use sl2calc::partitions::{enumerate_box, partitions_up_to};
use sl2calc::symfun::elementary;
use sl2calc::{NhElement, NhError, Partition};

use super::{random, rng_for};
use crate::check::{Check, Outcome, Params};
use crate::config::SuiteConfig;
use crate::params;

/// The pairs `(a, b)` on which the two-line decomposition is checked.
const TWO_LINE_PAIRS: [(usize, usize); 6] = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (2, 3)];

fn relations(
    out: &mut Vec<Check>,
    name: &str,
    anchor: &'static str,
    params: Params,
    build: impl Fn() -> Result<Vec<Relation>, NhError> + Send + Sync + 'static,
) {
    out.push(Check::new(format!("nilhecke.{name}"), anchor, params, move || Outcome::relations(build())));
}

fn pairs(total_max: usize) -> Vec<(usize, usize)> {
    (1..total_max).flat_map(|a| (1..=total_max - a).map(move |b| (a, b))).collect()
}

fn triples(total_max: usize) -> Vec<(usize, usize, usize)> {
    pairs(total_max)
        .into_iter()
        .flat_map(|(a, b)| (1..=total_max.saturating_sub(a + b)).map(move |c| (a, b, c)))
        .collect()
}

pub fn checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let r = cfg.rank_max;
    generators(cfg, &mut out);
    thin_calculus(r, &mut out);
    thick_calculus(r, &mut out);
    schur_boxes(r, &mut out);
    decompositions(r, &mut out);
    out
}

fn generators(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    for a in 1..=cfg.rank_max {
        out.push(Check::new(
            "nilhecke.defining_relations",
            "∂_i² = 0, braid and far commutation, ∂_i x_i - x_{i+1} ∂_i = 1 = x_i ∂_i - ∂_i x_{i+1}",
            params!("a" => a),
            move || Outcome::from_result(defining_relations(a)),
        ));
        out.push(Check::new(
            "nilhecke.staircase_normalisation",
            "D_a(δ_a) = 1 and e_a = δ_a D_a",
            params!("a" => a),
            move || match rel::staircase_normalisation(a) {
                Ok(ok) => Outcome::require(ok, || format!("normalisation fails at a = {a}")),
                Err(e) => Outcome::Fail(e.to_string()),
            },
        ));
    }
    let (seed, samples) = (cfg.seed, cfg.samples);
    for a in 1..=cfg.rank_max.min(3) {
        out.push(Check::new(
            "nilhecke.product_matches_composition",
            "(uv)(p) = u(v(p)) for random u, v and staircase monomials p",
            params!("a" => a, "samples" => samples),
            move || {
                let mut rng = rng_for(seed, 400 + a as u64);
                let basis = staircase_basis(a);
                Outcome::all((0..samples).map(|_| {
                    let u = random::nh_element(&mut rng, a, 4, 4);
                    let v = random::nh_element(&mut rng, a, 4, 4);
                    let uv = &u * &v;
                    Outcome::all(basis.iter().map(|p| {
                        let composed = v.apply(p).and_then(|vp| u.apply(&vp));
                        match (uv.apply(p), composed) {
                            (Ok(x), Ok(y)) => Outcome::require(x == y, || format!("u = {u}; v = {v}; p = {p}: {x} vs {y}")),
                            (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
                        }
                    }))
                }))
            },
        ));
    }
}

fn defining_relations(a: usize) -> Result<Outcome, NhError> {
    let d = |i| NhElement::dd(i, a);
    let x = |i| NhElement::x(i, a);
    let one = NhElement::one(a);
    let zero = NhElement::zero(a);
    let mut rels = Vec::new();
    for i in 1..a {
        rels.push(Relation::new(&d(i)? * &d(i)?, zero.clone()));
        rels.push(Relation::new(&(&d(i)? * &x(i)?) - &(&x(i + 1)? * &d(i)?), one.clone()));
        rels.push(Relation::new(&(&x(i)? * &d(i)?) - &(&d(i)? * &x(i + 1)?), one.clone()));
        if i + 1 < a {
            rels.push(Relation::new(&(&d(i)? * &d(i + 1)?) * &d(i)?, &(&d(i + 1)? * &d(i)?) * &d(i + 1)?));
        }
        for j in 1..a {
            if j + 1 < i || j > i + 1 {
                rels.push(Relation::new(&d(i)? * &d(j)?, &d(j)? * &d(i)?));
            }
        }
        for j in 1..=a {
            if j != i && j != i + 1 {
                rels.push(Relation::new(&d(i)? * &x(j)?, &x(j)? * &d(i)?));
            }
        }
    }
    for i in 1..=a {
        for j in 1..=a {
            rels.push(Relation::new(&x(i)? * &x(j)?, &x(j)? * &x(i)?));
        }
    }
    Ok(Outcome::relations(Ok(rels)))
}

fn thin_calculus(r: usize, out: &mut Vec<Check>) {
    for a in 1..=r {
        if a >= 2 {
            relations(out, "dd_kills_longest", "∂_i D_a = 0 = D_a ∂_i", params!("a" => a), move || {
                let mut all = Vec::new();
                for i in 1..a {
                    all.extend(rel::dd_annihilates_longest(a, i)?);
                }
                Ok(all)
            });
        }
        relations(out, "longest_absorbs_idempotent", "D_a e_a = D_a and e_a² = e_a", params!("a" => a), move || {
            Ok(rel::longest_absorbs_idempotent(a))
        });
        relations(out, "longest_sandwich", "D_a f D_a = D_a(f) D_a on staircase monomials f", params!("a" => a.min(4)), move || {
            staircase_basis(a.min(4)).iter().map(|f| rel::longest_sandwich(a.min(4), f)).collect()
        });
        for k in 0..=a {
            for side in Side::BOTH {
                relations(
                    out,
                    "absorb_from_below",
                    "e_a (e_{a-k} ⊗ 1_k) = e_a = e_a (1_k ⊗ e_{a-k})",
                    params!("a" => a, "k" => k, "side" => side.name()),
                    move || Ok(vec![rel::absorb_from_below(a, k, side)]),
                );
            }
        }
        for side in Side::BOTH {
            relations(
                out,
                "absorb_from_above",
                "(e_{a-1} ⊗ 1) e_a = e_a = (1 ⊗ e_{a-1}) e_a",
                params!("a" => a, "side" => side.name()),
                move || Ok(vec![rel::absorb_from_above(a, side)]),
            );
            for b in 0..a as u32 {
                relations(
                    out,
                    "undercrossing_into_thick",
                    "a dotted strand under e_{a-1} into e_a gives δ_{b,a-1} (±1)^{a-1} e_a",
                    params!("a" => a, "dots" => b, "side" => side.name()),
                    move || Ok(vec![rel::undercrossing_into_thick(a, b, side)?]),
                );
            }
        }
    }
    for a in 1..=r.min(4) {
        for b in 0..=(a as u32 + 3) {
            relations(
                out,
                "dotted_strand_over_longest",
                "∂_1⋯∂_{a-1} x_a^b D_a = (-1)^{a-1} h_{b+1-a} D_a",
                params!("a" => a, "dots" => b),
                move || Ok(vec![rel::dotted_strand_over_longest(a, b)?]),
            );
        }
    }
}

fn thick_calculus(r: usize, out: &mut Vec<Check>) {
    for (a, b) in pairs(r) {
        relations(out, "longest_factorizes", "(D_a ⊗ D_b) X_{b,a} = D_{a+b}", params!("a" => a, "b" => b), move || {
            Ok(vec![rel::longest_factorizes(a, b)])
        });
        relations(
            out,
            "splitter_presentations",
            "(δ_a⊗δ_b)D_{a+b} = (e_a⊗e_b)(δ_a⊗δ_b)D_{a+b} = (e_a⊗e_b)X_{b,a}",
            params!("a" => a, "b" => b),
            move || Ok(rel::splitter_presentations(a, b)),
        );
        relations(
            out,
            "thick_crossing_presentations",
            "split(b,a)merge(a,b) = (e_b⊗e_a)X_{a,b}(e_a⊗e_b) = (e_b⊗e_a)X_{a,b}",
            params!("a" => a, "b" => b),
            move || Ok(rel::thick_crossing_presentations(a, b)),
        );
        for side in Side::BOTH {
            relations(
                out,
                "idempotent_through_crossing",
                "(1_b⊗e_a)X(e_a⊗1_b) = (1_b⊗e_a)X and its mirror",
                params!("a" => a, "b" => b, "side" => side.name()),
                move || Ok(vec![rel::idempotent_through_crossing(a, b, side)]),
            );
        }
    }
    for (a, b, c) in triples(r) {
        relations(out, "splitter_associativity", "splits and merges of three lines are associative", params!("a" => a, "b" => b, "c" => c), move || {
            Ok(rel::splitter_associativity(a, b, c))
        });
        relations(
            out,
            "thick_braid",
            "thick crossings of three lines satisfy the braid relation",
            params!("a" => a, "b" => b, "c" => c),
            move || Ok(vec![rel::thick_braid(a, b, c)]),
        );
        for side in Side::BOTH {
            relations(
                out,
                "split_crossing_merge",
                "split, cross and merge equals split(a,b+c)merge(c,a+b) and its mirror",
                params!("a" => a, "b" => b, "c" => c, "side" => side.name()),
                move || Ok(vec![rel::split_crossing_merge(a, b, c, side)]),
            );
        }
    }
}

fn schur_boxes(r: usize, out: &mut Vec<Check>) {
    for a in 1..=r.min(4) {
        for alpha in enumerate_box(a, 2) {
            let al = alpha.clone();
            relations(out, "schur_explosion", "π_α e_a = e_a x^α δ_a D_a", params!("a" => a, "alpha" => alpha.to_string()), move || {
                Ok(vec![rel::schur_explosion(&al, a)])
            });
            let al = alpha.clone();
            relations(
                out,
                "schur_through_explosion",
                "D_a(π_α e_a) = π_α D_a and (π_α e_a)e_a = e_a π_α",
                params!("a" => a, "alpha" => alpha.to_string()),
                move || Ok(rel::schur_through_explosion(&al, a)),
            );
        }
    }
    for a in 1..=r.min(3) {
        let boxes = enumerate_box(a, 2);
        for alpha in &boxes {
            for beta in &boxes {
                let (al, be) = (alpha.clone(), beta.clone());
                relations(
                    out,
                    "schur_boxes_multiply",
                    "(π_α e_a)(π_β e_a) = Σ_γ c_{α,β}^γ π_γ e_a",
                    params!("a" => a, "alpha" => alpha.to_string(), "beta" => beta.to_string()),
                    move || Ok(vec![rel::schur_boxes_multiply(&al, &be, a)]),
                );
            }
        }
    }
    for (a, b) in pairs(r.min(4)) {
        for gamma in partitions_up_to(3, None) {
            let g = gamma.clone();
            relations(
                out,
                "schur_through_splitter",
                "split(a,b)π_γ = Σ c_{α,β}^γ (π_α⊗π_β)split(a,b), and dually for merges",
                params!("a" => a, "b" => b, "gamma" => gamma.to_string()),
                move || Ok(rel::schur_through_splitter(&g, a, b)),
            );
        }
    }
    for (a, b) in pairs(r.min(3)) {
        for alpha in enumerate_box(a, 2) {
            for beta in enumerate_box(b, 2) {
                let (al, be) = (alpha.clone(), beta.clone());
                relations(
                    out,
                    "bubble_between_splitters",
                    "merge(a,b)(π_α⊗π_β)split(a,b) = ±π_γ e_{a+b} (γ, sign from sorting dot counts)",
                    params!("a" => a, "b" => b, "alpha" => alpha.to_string(), "beta" => beta.to_string()),
                    move || Ok(vec![rel::bubble_between_splitters(a, b, &al, &be)]),
                );
                let (al, be) = (alpha.clone(), beta.clone());
                relations(
                    out,
                    "boxes_between_thick_crossings",
                    "T_{b,a}(π_β⊗π_α)T_{a,b} = ±split(a,b)π_γ merge(a,b)",
                    params!("a" => a, "b" => b, "alpha" => alpha.to_string(), "beta" => beta.to_string()),
                    move || Ok(vec![rel::boxes_between_thick_crossings(a, b, &al, &be)]),
                );
            }
        }
    }
}

fn decompositions(r: usize, out: &mut Vec<Check>) {
    for a in 1..r.min(5) {
        relations(
            out,
            "thick_and_thin_decomposition",
            "e_a⊗1 = Σ_s (-1)^s (ε_{a-s}⊗1) split(a,1) merge(a,1) x_{a+1}^s",
            params!("a" => a),
            move || Ok(vec![rel::thick_and_thin_decomposition(a)]),
        );
    }
    for (a, b) in TWO_LINE_PAIRS.into_iter().filter(|&(a, b)| a + b <= r) {
        relations(out, "two_line_decomposition", "e_a ⊗ e_b = Σ_{α∈P(a,b)} σ_α λ_α", params!("a" => a, "b" => b), move || {
            Ok(vec![rel::two_line_decomposition(a, b)?])
        });
        out.push(Check::new(
            "nilhecke.sigma_lambda_orthogonality",
            "λ_β σ_α = δ_{α,β} e_{a+b} on P(a,b)",
            params!("a" => a, "b" => b),
            move || orthogonality(a, b),
        ));
        out.push(Check::new(
            "nilhecke.degrees",
            "deg σ_α = 2|α|-2ab, deg λ_α = 2ab-2|α|, deg e_α = 0, deg split = -2ab, deg D_n = -n(n-1)",
            params!("a" => a, "b" => b),
            move || match rel::graded_elements(a, b) {
                Ok(list) => Outcome::all(list.into_iter().map(|(name, x, d)| {
                    let got = x.degree();
                    Outcome::require(got == Some(d), || format!("{name}: degree {got:?}, expected {d}"))
                })),
                Err(e) => Outcome::Fail(e.to_string()),
            },
        ));
    }
    for a in 1..=r.min(4) {
        relations(out, "unit_decomposition", "Σ_{ℓ∈Sq(a)} e_ℓ = 1", params!("a" => a), move || Ok(vec![rel::unit_decomposition(a)?]));
        relations(out, "sequence_orthogonality", "λ_{ℓ'} σ_ℓ = δ_{ℓ,ℓ'} e_a on Sq(a)", params!("a" => a), move || {
            let seqs = sq_sequences(a);
            let mut all = Vec::new();
            for l in &seqs {
                for m in &seqs {
                    all.push(rel::sequence_orthogonality(a, l, m)?);
                }
            }
            Ok(all)
        });
        out.push(Check::new(
            "nilhecke.sequence_idempotents",
            "e_ℓ e_{ℓ'} = δ_{ℓ,ℓ'} e_ℓ on Sq(a)",
            params!("a" => a),
            move || {
                let seqs = sq_sequences(a);
                let es: Result<Vec<NhElement>, NhError> = seqs.iter().map(|l| e_l(a, l)).collect();
                Outcome::relations(es.map(|es| {
                    let mut all = Vec::new();
                    for (i, x) in es.iter().enumerate() {
                        for (j, y) in es.iter().enumerate() {
                            let rhs = if i == j { x.clone() } else { NhElement::zero(a) };
                            all.push(Relation::new(x * y, rhs));
                        }
                    }
                    all
                }))
            },
        ));
    }
    for a in 1..=r.min(3) {
        relations(
            out,
            "matrix_units",
            "(σ_ℓ y λ_m)(σ_{m'} z λ_{ℓ'}) = δ_{m,m'} σ_ℓ yz λ_{ℓ'} for y = ε_1, z = ε_{a}",
            params!("a" => a),
            move || {
                let seqs = sq_sequences(a);
                let y = elementary(1, a);
                let z = elementary(a as i64, a);
                let mut all = Vec::new();
                for l in &seqs {
                    for m in &seqs {
                        for mp in &seqs {
                            for le in &seqs {
                                all.push(rel::matrix_unit_product(a, (l, m), (mp, le), &y, &z)?);
                            }
                        }
                    }
                }
                Ok(all)
            },
        );
    }
    for a in 1..=r.min(4) {
        relations(out, "single_line_decomposition", "e_a = σ_∅ λ_∅ for b = 0", params!("a" => a), move || {
            Ok(vec![Relation::new(e_alpha(a, 0, &Partition::empty())?, idempotent(a))])
        });
    }
}

fn orthogonality(a: usize, b: usize) -> Outcome {
    let boxes = enumerate_box(a, b as u32);
    let sig: Result<Vec<_>, _> = boxes.iter().map(|al| sigma_alpha(a, b, al)).collect();
    let lam: Result<Vec<_>, _> = boxes.iter().map(|al| lambda_alpha(a, b, al)).collect();
    let (sig, lam) = match (sig, lam) {
        (Ok(s), Ok(l)) => (s, l),
        (Err(e), _) | (_, Err(e)) => return Outcome::Fail(e.to_string()),
    };
    let e = idempotent(a + b);
    let zero = NhElement::zero(a + b);
    let mut rels = Vec::new();
    for (i, s) in sig.iter().enumerate() {
        for (j, l) in lam.iter().enumerate() {
            rels.push(Relation::new(l * s, if i == j { e.clone() } else { zero.clone() }));
        }
    }
    Outcome::relations(Ok(rels))
}

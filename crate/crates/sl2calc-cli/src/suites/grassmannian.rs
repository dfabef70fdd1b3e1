//! The ring Λ of bubbles: the infinite Grassmannian relation, thick bubbles
//! and the Hopf structure.

use num_traits::{One, Zero};
use sl2calc::grassmannian::{
    central_element_coeffs, fake_bubble_series, grassmannian_product, hgr_direct, hgr_hopf, phi_n, phi_n_inverse,
    thick_bubble, thick_bubble_closed_form, BubbleLabel, Orientation, Tensor,
};
use sl2calc::partitions::{enumerate_box, partitions_of, partitions_up_to};
use sl2calc::symfun::{bubble_slide_sides, complete, sign_pow, two_row_slide_sides};
use sl2calc::{BigInt, LambdaElement, Partition};

use crate::check::{Check, Outcome};
use crate::config::SuiteConfig;
use crate::params;

const ORIENTATIONS: [(Orientation, &str); 2] = [(Orientation::Clockwise, "cw"), (Orientation::CounterClockwise, "ccw")];

pub fn checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    bubble_series(cfg, &mut out);
    thick_bubbles(&mut out);
    hopf_structure(cfg, &mut out);
    slides(cfg, &mut out);
    out
}

fn bubble_series(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let d = cfg.weight_cutoff;
    out.push(Check::new(
        "grassmannian.infinite_grassmannian",
        "(Σ_r cw_r t^r)(Σ_r ccw_r t^r) = 1 up to weight D",
        params!("weight_cutoff" => d),
        move || {
            let ccw: Vec<LambdaElement> = fake_bubble_series(0, d).into_iter().map(|(_, v)| v).collect();
            let product = grassmannian_product(&ccw, d);
            Outcome::all(product.iter().enumerate().map(|(m, c)| {
                let ok = if m == 0 { c.is_one() } else { c.is_zero() } && !c.is_truncated();
                Outcome::require(ok, || format!("coefficient of t^{m}: {c}"))
            }))
        },
    ));
    out.push(Check::new(
        "grassmannian.ccw_bubbles_are_signed_elementary",
        "the inverse series has ccw_r = (-1)^r ε_r",
        params!("weight_cutoff" => d),
        move || {
            Outcome::all(fake_bubble_series(0, d).into_iter().map(|(label, v)| {
                let r = label.offset;
                let expected = LambdaElement::elementary(r, d).scale(&sign_pow(r));
                Outcome::require(v == expected && v == label.value(d), || format!("r = {r}: {v} vs {expected}"))
            }))
        },
    ));
    let n_max = cfg.n_max;
    for n in -n_max..=n_max {
        out.push(Check::new(
            "grassmannian.bubble_labels",
            "bubble ♠+r in region n: ♠ = n-1 (cw) or -n-1 (ccw), fake iff ♠+r < 0, degree 2r = q-degree of its value",
            params!("n" => n),
            move || {
                Outcome::all(ORIENTATIONS.iter().flat_map(|&(o, name)| {
                    (0..=6i64).map(move |r| {
                        let label = BubbleLabel::new(o, n, r);
                        let spade = if o == Orientation::Clockwise { n - 1 } else { -n - 1 };
                        let value = label.value(6);
                        let degree_ok = value.q_degree() == Some(label.degree()) && label.degree() == 2 * r;
                        let ok = label.spade() == spade && label.is_fake() == (spade + r < 0) && degree_ok;
                        Outcome::require(ok, || format!("{name} offset {r}: label {label}, value {value}"))
                    })
                }))
            },
        ));
    }
    let w = d.min(6);
    for (o, name) in ORIENTATIONS {
        out.push(Check::new(
            "grassmannian.phi_round_trip",
            "(φⁿ)⁻¹ φⁿ(π_α) = π_α",
            params!("orientation" => name, "max_weight" => w),
            move || {
                Outcome::all(partitions_up_to(w, None).into_iter().map(|alpha| {
                    let f = LambdaElement::schur(&alpha, w);
                    let back = phi_n_inverse(&phi_n(&f, 0, o), w);
                    Outcome::require(back == f && !back.is_truncated(), || format!("α = {alpha}: {back}"))
                }))
            },
        ));
    }
}

fn thick_bubbles(out: &mut Vec<Check>) {
    for a in 1..=3usize {
        for (o, name) in ORIENTATIONS {
            out.push(Check::new(
                "grassmannian.thick_bubble_closed_form",
                "det of thin bubbles = (-1)^{a(a-1)/2} π_α (cw), (-1)^{a(a-1)/2+|α|} π_ᾱ (ccw); degree 2|α|",
                params!("a" => a, "orientation" => name, "box" => format!("{a}x4")),
                move || {
                    Outcome::all(enumerate_box(a, 4).into_iter().map(|alpha| {
                        match (thick_bubble(&alpha, a, o), thick_bubble_closed_form(&alpha, a, o)) {
                            (Ok(det), Ok(closed)) => {
                                let deg = det.q_degree() == Some(2 * alpha.weight() as i64);
                                Outcome::require(det == closed && deg, || format!("α = {alpha}: determinant {det}; closed form {closed}"))
                            }
                            (Err(e), _) | (_, Err(e)) => Outcome::Fail(format!("α = {alpha}: {e}")),
                        }
                    }))
                },
            ));
        }
    }
}

fn show_tensor(t: &Tensor) -> String {
    let terms: Vec<String> = t.iter().map(|((b, g), c)| format!("{c}·π{b}⊗π{g}")).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn hopf_structure(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let d = cfg.weight_cutoff.min(8);
    out.push(Check::new(
        "grassmannian.antipode",
        "S(π_α) = (-1)^{|α|} π_ᾱ, S² = id, S(h_r) = (-1)^r ε_r, ε(π_α) = δ_{α,∅}",
        params!("max_weight" => d),
        move || {
            let per_alpha = partitions_up_to(d, None).into_iter().map(|alpha| {
                let x = LambdaElement::schur(&alpha, d);
                let s = x.antipode();
                let expected = LambdaElement::schur(&alpha.conjugate(), d).scale(&sign_pow(alpha.weight() as i64));
                let counit = if alpha.is_empty() { BigInt::one() } else { BigInt::zero() };
                Outcome::require(s == expected && s.antipode() == x && x.counit() == counit, || format!("α = {alpha}: S = {s}"))
            });
            let per_r = (0..=d as i64).map(|r| {
                let s = LambdaElement::complete(r, d).antipode();
                let expected = LambdaElement::elementary(r, d).scale(&sign_pow(r));
                Outcome::require(s == expected, || format!("S(h_{r}) = {s}"))
            });
            Outcome::all(per_alpha.chain(per_r))
        },
    ));
    for w in 0..=5u32 {
        out.push(Check::new(
            "grassmannian.coproduct_routes",
            "Σ c_{β,γ}^α π_β⊗π_γ = Δ applied to det(h_{α_i+j-i}) with Δh_r = Σ h_i⊗h_{r-i}",
            params!("weight" => w),
            move || {
                Outcome::all(partitions_of(w, None).into_iter().map(|alpha| {
                    let x = LambdaElement::schur(&alpha, w);
                    let lr = x.coproduct();
                    let det = x.coproduct_by_determinant();
                    Outcome::require(lr == det, || format!("α = {alpha}: LR {}; determinant {}", show_tensor(&lr), show_tensor(&det)))
                }))
            },
        ));
        out.push(Check::new(
            "grassmannian.higher_grassmannian",
            "Σ_{β,γ} (-1)^{|β|} c_{β,γ}^α π_β̄ π_γ = M(S⊗I)Δ(π_α) = δ_{α,∅}",
            params!("weight" => w),
            move || {
                Outcome::all(partitions_of(w, None).into_iter().map(|alpha| {
                    let expected = if alpha.is_empty() { LambdaElement::one(w) } else { LambdaElement::zero(w) };
                    let direct = hgr_direct(&alpha);
                    let hopf = hgr_hopf(&alpha);
                    let ok = direct == expected && hopf == expected && !direct.is_truncated() && !hopf.is_truncated();
                    Outcome::require(ok, || format!("α = {alpha}: direct {direct}; Hopf {hopf}"))
                }))
            },
        ));
    }
    for n in 0..=6i64 {
        out.push(Check::new(
            "grassmannian.elementary_coproduct",
            "Δ(ε_n) = Σ_l ε_{n-l} ⊗ ε_l",
            params!("n" => n),
            move || {
                let got = LambdaElement::elementary(n, n as u32).coproduct();
                let expected: Tensor =
                    (0..=n).map(|l| ((Partition::column((n - l) as usize), Partition::column(l as usize)), BigInt::one())).collect();
                Outcome::require(got == expected, || show_tensor(&got).to_string())
            },
        ));
    }
}

fn slides(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    for a in 1..=4usize {
        out.push(Check::new(
            "grassmannian.bubble_slide",
            "Σ_{a≥p≥q≥0} (-1)^{p+q}(p-q+1) π_{(p,q)ᵀ} = Σ_{x,y≤a} (-1)^{x+y} ε_x ε_y",
            params!("a" => a),
            move || {
                let (lhs, rhs) = bubble_slide_sides(a);
                Outcome::require(lhs == rhs, || format!("{lhs} vs {rhs}"))
            },
        ));
        let m_max = cfg.weight_cutoff.min(8);
        out.push(Check::new(
            "grassmannian.two_row_slide",
            "Σ_{p+q=m, p≥q} (p-q+1) π_{(p,q)} = Σ_{x+y=m} h_x h_y",
            params!("a" => a, "m_max" => m_max),
            move || {
                Outcome::all((0..=m_max).map(|m| {
                    let (lhs, rhs) = two_row_slide_sides(m, a);
                    Outcome::require(lhs == rhs, || format!("m = {m}: {lhs} vs {rhs}"))
                }))
            },
        ));
    }
    for i in 0..=4u32 {
        out.push(Check::new(
            "grassmannian.central_element",
            "h_i(x,y,z) = Σ_r h_r(z)·(Σ_{s+t=i-r} h_s(x)h_t(y)); x_a = y_b = 0 drops one variable from each alphabet",
            params!("i" => i),
            move || {
                let mut outcomes = Vec::new();
                for a in 1..=2usize {
                    for b in 1..=2usize {
                        let exp = central_element_coeffs(i, a, b);
                        for c in 0..=2usize {
                            let spec = exp.specialize(c);
                            let direct = complete(i as i64, a + b + c);
                            outcomes.push(Outcome::require(spec == direct, || format!("a={a} b={b} c={c}: {spec} vs {direct}")));
                        }
                        outcomes.push(match exp.drop_last_variables() {
                            Ok(dropped) => {
                                let smaller = central_element_coeffs(i, a - 1, b - 1);
                                Outcome::require(dropped == smaller, || format!("a={a} b={b}: dropping variables gives {:?}", dropped.coeffs))
                            }
                            Err(e) => Outcome::Fail(e.to_string()),
                        });
                    }
                }
                Outcome::all(outcomes)
            },
        ));
    }
}

//! Acceptance criteria: one PASS/FAIL line per criterion. Every criterion is
//! an exact identity check; the run fails if any line reports FAIL.

use std::process::Command;
use std::time::{Duration, Instant};

use sl2calc_cli::{run_suite, CheckReport, Status, Suite, SuiteConfig, SuiteReport};

struct Criterion {
    number: usize,
    title: &'static str,
    suite: Suite,
    names: &'static [&'static str],
    /// Parameter sets that must be present among the selected checks.
    required: &'static [(&'static str, &'static str)],
}

const NH_RELATIONS: &[&str] = &[
    "nilhecke.defining_relations",
    "nilhecke.product_matches_composition",
    "nilhecke.dd_kills_longest",
    "nilhecke.longest_absorbs_idempotent",
    "nilhecke.longest_sandwich",
    "nilhecke.absorb_from_below",
    "nilhecke.absorb_from_above",
    "nilhecke.undercrossing_into_thick",
    "nilhecke.idempotent_through_crossing",
    "nilhecke.dotted_strand_over_longest",
    "nilhecke.longest_factorizes",
    "nilhecke.splitter_presentations",
    "nilhecke.splitter_associativity",
    "nilhecke.thick_crossing_presentations",
    "nilhecke.split_crossing_merge",
    "nilhecke.thick_braid",
    "nilhecke.schur_explosion",
    "nilhecke.schur_through_explosion",
    "nilhecke.schur_through_splitter",
    "nilhecke.schur_boxes_multiply",
    "nilhecke.bubble_between_splitters",
    "nilhecke.boxes_between_thick_crossings",
    "nilhecke.thick_and_thin_decomposition",
    "nilhecke.degrees",
];

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        title: "nilHecke and thick calculus relations hold exactly up to rank 4",
        suite: Suite::Nilhecke,
        names: NH_RELATIONS,
        required: &[("nilhecke.thick_braid", r#"{"a":2,"b":1,"c":1}"#), ("nilhecke.absorb_from_below", r#"{"a":4,"k":4,"side":"right"}"#)],
    },
    Criterion {
        number: 2,
        title: "e_a⊗e_b = Σ σ_α λ_α and λ_β σ_α = δ e_{a+b} on the listed pairs",
        suite: Suite::Nilhecke,
        names: &["nilhecke.two_line_decomposition", "nilhecke.sigma_lambda_orthogonality"],
        required: &[
            ("nilhecke.two_line_decomposition", r#"{"a":1,"b":1}"#),
            ("nilhecke.two_line_decomposition", r#"{"a":2,"b":1}"#),
            ("nilhecke.two_line_decomposition", r#"{"a":1,"b":2}"#),
            ("nilhecke.two_line_decomposition", r#"{"a":2,"b":2}"#),
            ("nilhecke.two_line_decomposition", r#"{"a":3,"b":1}"#),
            ("nilhecke.two_line_decomposition", r#"{"a":2,"b":3}"#),
            ("nilhecke.sigma_lambda_orthogonality", r#"{"a":2,"b":3}"#),
        ],
    },
    Criterion {
        number: 3,
        title: "Σ_ℓ e_ℓ = 1, λ_ℓ' σ_ℓ = δ e_a for a ≤ 4 and matrix units for a ≤ 3",
        suite: Suite::Nilhecke,
        names: &[
            "nilhecke.unit_decomposition",
            "nilhecke.sequence_orthogonality",
            "nilhecke.sequence_idempotents",
            "nilhecke.matrix_units",
        ],
        required: &[
            ("nilhecke.unit_decomposition", r#"{"a":4}"#),
            ("nilhecke.sequence_orthogonality", r#"{"a":4}"#),
            ("nilhecke.matrix_units", r#"{"a":3}"#),
        ],
    },
    Criterion {
        number: 4,
        title: "three Schur routes agree, D_a reproduces the bialternant, e/h relation",
        suite: Suite::Symfun,
        names: &[
            "symfun.schur_three_routes",
            "symfun.schur_from_longest_dd",
            "symfun.longest_dd_on_monomials",
            "symfun.eh_alternating_sum",
        ],
        required: &[("symfun.schur_three_routes", r#"{"a":4,"box":"4x4"}"#), ("symfun.eh_alternating_sum", r#"{"a":4,"m_max":8}"#)],
    },
    Criterion {
        number: 5,
        title: "Littlewood–Richardson positivity, rectangle rules and skew determinants",
        suite: Suite::Symfun,
        names: &[
            "symfun.lr_positive_and_graded",
            "symfun.lr_tableau_rule",
            "symfun.lr_stability",
            "symfun.lr_rectangle_pairs",
            "symfun.lr_rectangle_triples",
            "symfun.skew_schur_determinant",
        ],
        required: &[("symfun.lr_rectangle_triples", r#"{"a":3,"b":3}"#), ("symfun.skew_schur_determinant", r#"{"weight_beta":6}"#)],
    },
    Criterion {
        number: 6,
        title: "infinite Grassmannian, thick bubbles, higher Grassmannian and bubble slides",
        suite: Suite::Grassmannian,
        names: &[
            "grassmannian.infinite_grassmannian",
            "grassmannian.thick_bubble_closed_form",
            "grassmannian.higher_grassmannian",
            "grassmannian.coproduct_routes",
            "grassmannian.bubble_slide",
        ],
        required: &[
            ("grassmannian.infinite_grassmannian", r#"{"weight_cutoff":8}"#),
            ("grassmannian.higher_grassmannian", r#"{"weight":5}"#),
            ("grassmannian.bubble_slide", r#"{"a":4}"#),
        ],
    },
    Criterion {
        number: 7,
        title: "quantum group relations, canonical positivity, q-cardinalities, triple lemma",
        suite: Suite::Udot,
        names: &[
            "udot.idempotents",
            "udot.divided_powers",
            "udot.commutation_ef",
            "udot.commutation_fe",
            "udot.canonical_positivity",
            "udot.canonical_round_trip",
            "udot.q_cardinality",
            "udot.triple_never_canonical",
        ],
        required: &[
            ("udot.commutation_ef", r#"{"n":-6,"power_max":3}"#),
            ("udot.canonical_positivity", r#"{"n":6,"power_max":3}"#),
            ("udot.q_cardinality", r#"{"a":6,"b":6}"#),
            ("udot.triple_never_canonical", r#"{"abc_max":3,"n_max":8}"#),
        ],
    },
    Criterion {
        number: 8,
        title: "decomposition multiplicities reproduce the q-binomial coefficients",
        suite: Suite::Udot,
        names: &["udot.decomposition_ee", "udot.decomposition_ef", "udot.decomposition_fe", "udot.decomposition_wrong_side"],
        required: &[("udot.decomposition_ef", r#"{"a":3,"b":3}"#)],
    },
    Criterion {
        number: 9,
        title: "graded hom ranks: formula and diagram count agree to degree 20",
        suite: Suite::Udot,
        names: &["udot.hom_rank"],
        required: &[("udot.hom_rank", r#"{"a":3,"b":3,"cutoff":20,"delta":3,"n_max":4}"#)],
    },
];

fn params_key(c: &CheckReport) -> String {
    serde_json::to_string(&c.params).unwrap()
}

fn evaluate(criterion: &Criterion, report: &SuiteReport) -> Result<usize, String> {
    let selected: Vec<&CheckReport> = report.checks.iter().filter(|c| criterion.names.contains(&c.name.as_str())).collect();
    for name in criterion.names {
        if !selected.iter().any(|c| c.name == *name) {
            return Err(format!("no checks named {name}"));
        }
    }
    for (name, params) in criterion.required {
        if !selected.iter().any(|c| c.name == *name && params_key(c) == *params) {
            return Err(format!("missing {name} {params}"));
        }
    }
    if let Some(bad) = selected.iter().find(|c| c.status != Status::Pass) {
        return Err(format!("{} {}: {:?} {}", bad.name, params_key(bad), bad.status, bad.witness.as_deref().unwrap_or("")));
    }
    Ok(selected.len())
}

fn full_run_criterion() -> Result<usize, String> {
    let bin = env!("CARGO_BIN_EXE_sl2calc");
    let run = || {
        let start = Instant::now();
        let out = Command::new(bin)
            .args(["verify", "--suite", "all", "--format", "json", "--seed", "7"])
            .env_remove("SL2CALC_CONFIG")
            .output()
            .map_err(|e| e.to_string())?;
        Ok::<_, String>((out, start.elapsed()))
    };
    let (first, elapsed) = run()?;
    let (second, _) = run()?;
    if !first.status.success() {
        return Err(format!("exit status {:?}", first.status.code()));
    }
    if first.stdout != second.stdout {
        return Err("reports differ between runs".into());
    }
    if elapsed > Duration::from_secs(300) {
        return Err(format!("took {elapsed:?}"));
    }
    let report = SuiteReport::from_json(&String::from_utf8_lossy(&first.stdout)).map_err(|e| e.to_string())?;
    if report.suite != "all" || report.seed != 7 || report.has_failures() {
        return Err("unexpected report header or failures".into());
    }
    for suite in Suite::INDIVIDUAL {
        let prefix = format!("{}.", suite.name());
        if !report.checks.iter().any(|c| c.name.starts_with(&prefix)) {
            return Err(format!("suite {suite} missing from the full report"));
        }
    }
    Ok(report.checks.len())
}

#[test]
fn acceptance() {
    let mut reports = std::collections::BTreeMap::new();
    for suite in [Suite::Nilhecke, Suite::Symfun, Suite::Grassmannian, Suite::Udot] {
        reports.insert(suite, run_suite(&SuiteConfig::new(suite)).expect("default configuration is valid"));
    }
    let mut failures = 0;
    for criterion in CRITERIA {
        match evaluate(criterion, &reports[&criterion.suite]) {
            Ok(n) => println!("criterion {}: PASS ({n} checks) {}", criterion.number, criterion.title),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL {} -- {why}", criterion.number, criterion.title);
            }
        }
    }
    match full_run_criterion() {
        Ok(n) => println!("criterion 10: PASS ({n} checks) full verification is deterministic and within budget"),
        Err(why) => {
            failures += 1;
            println!("criterion 10: FAIL full verification -- {why}");
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}

//! Table generators behind the `lr`, `canon mult`, `hom-rank` and `schur`
//! subcommands. Each renders either as aligned text or as JSON.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use sl2calc::symfun::{lr_tableau_count, schur_bialternant, schur_dual_giambelli, schur_jacobi_trudy, schur_product};
use sl2calc::udot::{hom_rank_enumerated, hom_rank_formula};
use sl2calc::{BigInt, Laurent, Partition, Poly, Tag, UdotElement};

use crate::config::Format;
use crate::CliError;

/// Rendered output and whether every internal cross-check agreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub body: String,
    pub consistent: bool,
}

fn int_json(c: &BigInt) -> Value {
    c.to_i64().map(Value::from).unwrap_or_else(|| Value::String(c.to_string()))
}

fn laurent_json(l: &Laurent) -> Value {
    json!({
        "text": l.to_string(),
        "terms": l.terms().map(|(d, c)| json!([d, int_json(c)])).collect::<Vec<_>>(),
    })
}

fn finish(format: Format, text: String, value: Value, consistent: bool) -> Result<Table, CliError> {
    let body = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value)? + "\n",
    };
    Ok(Table { body, consistent })
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.parse().map_err(|e: sl2calc::PartitionError| CliError::InvalidArgument(e.to_string()))
}

/// Schur expansion of `π_α π_β`, each coefficient cross-checked against the
/// tableau count.
pub fn lr_table(alpha: &Partition, beta: &Partition, vars: Option<usize>, format: Format) -> Result<Table, CliError> {
    let product = schur_product(alpha, beta, vars);
    let mut consistent = true;
    let mut rows = Vec::new();
    let mut text = String::new();
    let _ = writeln!(text, "π{alpha} · π{beta}{}", vars.map(|n| format!(" in {n} variables")).unwrap_or_default());
    let _ = writeln!(text, "{:<16} {:>8}", "GAMMA", "COEFF");
    for (gamma, c) in &product {
        if vars.is_none() && lr_tableau_count(alpha, beta, gamma) != *c {
            consistent = false;
        }
        let _ = writeln!(text, "{:<16} {:>8}", gamma.to_string(), c);
        rows.push(json!({"gamma": gamma.to_string(), "coeff": int_json(c)}));
    }
    let value = json!({"alpha": alpha.to_string(), "beta": beta.to_string(), "vars": vars, "coefficients": rows});
    finish(format, text, value, consistent)
}

/// Parses `E2F1`, `F1E2`, `E2`, `F3`, `1` (and the printed form
/// `E^(2)F^(1)`) into a tag.
pub fn parse_tag(s: &str) -> Result<Tag, CliError> {
    let bad = || CliError::InvalidArgument(format!("cannot parse `{s}` as E<a>F<b>, F<b>E<a>, E<a>, F<b> or 1"));
    let cleaned: String = s.chars().filter(|c| !matches!(c, '^' | '(' | ')' | ' ')).collect();
    if cleaned == "1" {
        return Ok(Tag::EF { a: 0, b: 0 });
    }
    let mut factors = Vec::new();
    let mut chars = cleaned.chars().peekable();
    while let Some(letter) = chars.next() {
        if letter != 'E' && letter != 'F' {
            return Err(bad());
        }
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let power = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| bad())? };
        factors.push((letter, power));
    }
    match factors.as_slice() {
        [('E', a)] => Ok(Tag::EF { a: *a, b: 0 }),
        [('F', b)] => Ok(Tag::EF { a: 0, b: *b }),
        [('E', a), ('F', b)] => Ok(Tag::EF { a: *a, b: *b }),
        [('F', b), ('E', a)] => Ok(Tag::FE { b: *b, a: *a }),
        _ => Err(bad()),
    }
}

/// Canonical expansion of `x · y 1_n`, where `x` acts on the target of `y 1_n`.
pub fn canon_mult(x: Tag, y: Tag, n: i64, format: Format) -> Result<Table, CliError> {
    let right = UdotElement::basis(y, n);
    let left = UdotElement::basis(x, right.target());
    let product = (&left * &right).to_canonical();
    let canonical_in = x.is_preferred_canonical(right.target()) && y.is_preferred_canonical(n);
    let positive = product.terms().values().all(Laurent::is_nonnegative);
    let mut text = String::new();
    let _ = writeln!(text, "({x}1_{}) · ({y}1_{n}) in the canonical basis", right.target());
    let _ = writeln!(text, "{:<16} COEFF", "TAG");
    let mut rows = Vec::new();
    for (tag, c) in product.terms() {
        let _ = writeln!(text, "{:<16} {c}", tag.to_string());
        rows.push(json!({"tag": tag.to_string(), "coeff": laurent_json(c)}));
    }
    let value = json!({
        "x": x.to_string(),
        "y": y.to_string(),
        "n": n,
        "target": product.target(),
        "inputs_canonical": canonical_in,
        "terms": rows,
    });
    // Positivity is only promised when both factors are canonical.
    finish(format, text, value, !canonical_in || positive)
}

/// Graded rank by the product formula and by enumeration, side by side.
pub fn hom_rank(a: u32, b: u32, delta: u32, n: i64, cutoff: i64, format: Format) -> Result<Table, CliError> {
    let formula = hom_rank_formula(a, b, delta, n, cutoff);
    let counted = hom_rank_enumerated(a, b, delta, n, cutoff);
    let agree = formula == counted;
    let lo = formula.min_degree().into_iter().chain(counted.min_degree()).min().unwrap_or(0);
    let mut text = String::new();
    let _ = writeln!(text, "graded rank for a={a} b={b} δ={delta} n={n}, degrees ≤ {cutoff}");
    let _ = writeln!(text, "{:>6} {:>10} {:>10}", "DEGREE", "FORMULA", "DIAGRAMS");
    let mut rows = Vec::new();
    for d in lo..=cutoff {
        let (f, c) = (formula.coeff(d), counted.coeff(d));
        if f == BigInt::default() && c == BigInt::default() {
            continue;
        }
        let _ = writeln!(text, "{d:>6} {f:>10} {c:>10}");
        rows.push(json!({"degree": d, "formula": int_json(&f), "diagrams": int_json(&c)}));
    }
    let _ = writeln!(text, "routes agree: {agree}");
    let value = json!({"a": a, "b": b, "delta": delta, "n": n, "cutoff": cutoff, "agree": agree, "degrees": rows});
    finish(format, text, value, agree)
}

/// How to compute a Schur polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SchurMethod {
    Bialternant,
    JacobiTrudy,
    Dual,
    All,
}

/// `π_α(x_1, ..., x_vars)` by one route, or by all three with a comparison.
pub fn schur(alpha: &Partition, vars: usize, method: SchurMethod, format: Format) -> Result<Table, CliError> {
    let bi = || schur_bialternant(alpha, vars).map_err(|e| CliError::InvalidArgument(e.to_string()));
    let routes: Vec<(&str, Poly)> = match method {
        SchurMethod::Bialternant => vec![("bialternant", bi()?)],
        SchurMethod::JacobiTrudy => vec![("jacobi-trudy", schur_jacobi_trudy(alpha, vars))],
        SchurMethod::Dual => vec![("dual", schur_dual_giambelli(alpha, vars))],
        SchurMethod::All => vec![
            ("bialternant", bi()?),
            ("jacobi-trudy", schur_jacobi_trudy(alpha, vars)),
            ("dual", schur_dual_giambelli(alpha, vars)),
        ],
    };
    let agree = routes.windows(2).all(|w| w[0].1 == w[1].1);
    let mut text = String::new();
    let _ = writeln!(text, "π{alpha} in {vars} variables");
    for (name, p) in &routes {
        let _ = writeln!(text, "{name:<13} {p}");
    }
    if routes.len() > 1 {
        let _ = writeln!(text, "routes agree: {agree}");
    }
    let value = json!({
        "alpha": alpha.to_string(),
        "vars": vars,
        "routes": routes.iter().map(|(name, p)| json!({"method": name, "polynomial": p.to_string(), "terms": p.num_terms()})).collect::<Vec<_>>(),
        "agree": agree,
    });
    finish(format, text, value, agree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tag_syntax() {
        assert_eq!(parse_tag("E2F1").unwrap(), Tag::EF { a: 2, b: 1 });
        assert_eq!(parse_tag("F1E2").unwrap(), Tag::FE { b: 1, a: 2 });
        assert_eq!(parse_tag("E2").unwrap(), Tag::EF { a: 2, b: 0 });
        assert_eq!(parse_tag("F3").unwrap(), Tag::EF { a: 0, b: 3 });
        assert_eq!(parse_tag("1").unwrap(), Tag::EF { a: 0, b: 0 });
        assert_eq!(parse_tag("E^(2)F^(1)").unwrap(), Tag::EF { a: 2, b: 1 });
        assert!(parse_tag("EFE").is_err());
        assert!(parse_tag("X2").is_err());
    }

    #[test]
    fn lr_and_schur_tables() {
        let t = lr_table(&parse_partition("1").unwrap(), &parse_partition("1").unwrap(), None, Format::Json).unwrap();
        let v: Value = serde_json::from_str(&t.body).unwrap();
        assert_eq!(v["coefficients"].as_array().unwrap().len(), 2);
        assert!(t.consistent);
        let s = schur(&parse_partition("2,1").unwrap(), 3, SchurMethod::All, Format::Text).unwrap();
        assert!(s.consistent && s.body.contains("routes agree: true"));
    }

    #[test]
    fn canonical_product_of_e_and_f() {
        // E·F1_1 = F·E1_1 + [1]·1_1.
        let t = canon_mult(parse_tag("E1").unwrap(), parse_tag("F1").unwrap(), 1, Format::Json).unwrap();
        let v: Value = serde_json::from_str(&t.body).unwrap();
        let tags: Vec<&str> = v["terms"].as_array().unwrap().iter().map(|t| t["tag"].as_str().unwrap()).collect();
        assert_eq!(tags, vec!["E^(0)F^(0)", "F^(1)E^(1)"]);
        assert!(t.consistent);
    }

    #[test]
    fn hom_rank_routes_agree() {
        let t = hom_rank(1, 1, 0, 0, 8, Format::Text).unwrap();
        assert!(t.consistent, "{}", t.body);
    }
}

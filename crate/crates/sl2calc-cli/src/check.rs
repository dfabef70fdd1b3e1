//! A single executable identity: a name, an anchor describing the identity,
//! its parameters and a closure deciding pass or fail.

use std::collections::BTreeMap;
use std::fmt::{Debug, Display};

use serde_json::Value;
use sl2calc::nilhecke::relations::Relation;
use sl2calc::NhError;

/// Check parameters, kept sorted by key so that serialisation is canonical.
pub type Params = BTreeMap<String, Value>;

/// Builds a parameter map from `key => value` pairs.
#[macro_export]
macro_rules! params {
    () => { $crate::check::Params::new() };
    ($($key:literal => $value:expr),+ $(,)?) => {{
        let mut p = $crate::check::Params::new();
        $( p.insert($key.to_string(), serde_json::json!($value)); )+
        p
    }};
}

/// Result of running a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Failure with a witness, typically the two unequal canonical forms.
    Fail(String),
    /// Not applicable for these parameters; the reason is reported.
    Skipped(String),
}

impl Outcome {
    /// Pass iff `cond`; otherwise fail with the lazily built witness.
    pub fn require(cond: bool, witness: impl FnOnce() -> String) -> Self {
        if cond {
            Outcome::Pass
        } else {
            Outcome::Fail(witness())
        }
    }

    /// Pass iff `actual == expected`, witnessing both sides on failure.
    pub fn expect_eq<T: PartialEq + Display>(actual: &T, expected: &T) -> Self {
        Self::require(actual == expected, || format!("got {actual}; expected {expected}"))
    }

    /// Same as [`Outcome::expect_eq`] for types without `Display`.
    pub fn expect_eq_debug<T: PartialEq + Debug>(actual: &T, expected: &T) -> Self {
        Self::require(actual == expected, || format!("got {actual:?}; expected {expected:?}"))
    }

    /// Runs the double equality oracle on a nilHecke relation.
    pub fn relation(rel: Result<Relation, NhError>) -> Self {
        match rel.and_then(|r| r.holds().map(|ok| (ok, r))) {
            Ok((true, _)) => Outcome::Pass,
            Ok((false, r)) => Outcome::Fail(r.witness()),
            Err(e) => Outcome::Fail(format!("error: {e}")),
        }
    }

    /// All relations must hold; the first failure is reported.
    pub fn relations(rels: Result<Vec<Relation>, NhError>) -> Self {
        match rels {
            Err(e) => Outcome::Fail(format!("error: {e}")),
            Ok(rels) => Self::all(rels.into_iter().enumerate().map(|(i, r)| {
                Self::relation(Ok(r)).with_context(|| format!("part {}", i + 1))
            })),
        }
    }

    /// Pass iff every outcome passes; the first failure is returned.
    pub fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Self {
        for o in outcomes {
            if let Outcome::Fail(_) = o {
                return o;
            }
        }
        Outcome::Pass
    }

    /// Prefixes a failure witness with some context.
    pub fn with_context(self, ctx: impl FnOnce() -> String) -> Self {
        match self {
            Outcome::Fail(w) => Outcome::Fail(format!("{}: {w}", ctx())),
            other => other,
        }
    }

    /// Converts an error into a failure with the error as witness.
    pub fn from_result<E: Display>(r: Result<Outcome, E>) -> Self {
        r.unwrap_or_else(|e| Outcome::Fail(format!("error: {e}")))
    }
}

type Runner = Box<dyn Fn() -> Outcome + Send + Sync>;

/// A registered check.
pub struct Check {
    pub name: String,
    pub anchor: &'static str,
    pub params: Params,
    run: Runner,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        anchor: &'static str,
        params: Params,
        run: impl Fn() -> Outcome + Send + Sync + 'static,
    ) -> Self {
        Check { name: name.into(), anchor, params, run: Box::new(run) }
    }

    pub fn run(&self) -> Outcome {
        (self.run)()
    }
}

impl Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check").field("name", &self.name).field("params", &self.params).finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_combinators() {
        assert_eq!(Outcome::expect_eq(&1, &1), Outcome::Pass);
        assert_eq!(Outcome::expect_eq(&1, &2), Outcome::Fail("got 1; expected 2".into()));
        let all = Outcome::all([Outcome::Pass, Outcome::Fail("x".into()), Outcome::Fail("y".into())]);
        assert_eq!(all.with_context(|| "ctx".into()), Outcome::Fail("ctx: x".into()));
        assert_eq!(Outcome::from_result::<String>(Err("boom".into())), Outcome::Fail("error: boom".into()));
    }

    #[test]
    fn params_macro_sorts_keys() {
        let p = params!("b" => 2, "a" => "x");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"a":"x","b":2}"#);
    }
}

//! Named closed-form constants, stored as evaluation recipes.
//!
//! Every value here is built from radicals, `cos(rπ)`, Γ and B at rationals,
//! and tabulated class invariants. Nothing in this module sums a q-series;
//! those are the oracles the recipes get checked against.

pub mod expr;
mod identities;
mod registry;

use sha2::{Digest, Sha256};

pub use identities::{family_pa_ma_ra, proof_identity_check, vanishing_at_root, FamilyTriple, PROOF_IDENTITIES};
pub use registry::REGISTRY;

use crate::error::{Error, Result};
use crate::invariants;
use crate::precision::{Context, Ratio, Real};
use expr::{Env, Evaluator, Value};

/// Nested `@id` references deeper than this are treated as a cycle.
const MAX_DEPTH: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormEntry {
    pub id: &'static str,
    pub description: &'static str,
    /// Where the value comes from, in words.
    pub anchor: &'static str,
    pub recipe: &'static str,
    /// Named parameters and their default values, as expressions.
    pub params: &'static [(&'static str, &'static str)],
}

impl ClosedFormEntry {
    /// SHA-256 of the recipe and its parameter defaults, hex encoded.
    pub fn checksum(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.recipe.as_bytes());
        for (name, default) in self.params {
            h.update(b"\0");
            h.update(name.as_bytes());
            h.update(b"=");
            h.update(default.as_bytes());
        }
        hex::encode(h.finalize())
    }
}

pub fn lookup(id: &str) -> Result<&'static ClosedFormEntry> {
    REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Registry(id.to_string()))
}

pub fn ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|e| e.id)
}

pub fn evaluate_closed_form(id: &str, ctx: &Context) -> Result<Real> {
    evaluate(id, &[], ctx, 0)
}

/// Evaluates a parameterised entry, e.g. `ratio-3pisqrtn` at `n = 3`.
/// Arguments are expressions in the recipe language.
pub fn evaluate_with(id: &str, args: &[(&str, &str)], ctx: &Context) -> Result<Real> {
    let env = RecipeEnv { ctx, depth: 0 };
    let values = args
        .iter()
        .map(|(name, src)| {
            let program = expr::parse(src)?;
            Ok((name.to_string(), Evaluator::new(&env, id, &[]).run(&program)?))
        })
        .collect::<Result<Vec<_>>>()?;
    evaluate(id, &values, ctx, 0)
}

fn evaluate(id: &str, args: &[(String, Value)], ctx: &Context, depth: usize) -> Result<Real> {
    if depth > MAX_DEPTH {
        return Err(Error::Construction {
            id: id.to_string(),
            reason: "reference chain too deep".into(),
        });
    }
    let entry = lookup(id)?;
    let env = RecipeEnv { ctx, depth };
    let mut scope = Vec::with_capacity(entry.params.len());
    for (name, default) in entry.params {
        let value = match args.iter().find(|(n, _)| n == name) {
            Some((_, v)) => v.clone(),
            None => Evaluator::new(&env, id, &[]).run(&expr::parse(default)?)?,
        };
        scope.push((name.to_string(), value));
    }
    if let Some((extra, _)) = args.iter().find(|(n, _)| !entry.params.iter().any(|(p, _)| p == n)) {
        return Err(Error::Construction {
            id: id.to_string(),
            reason: format!("no parameter named `{extra}`"),
        });
    }
    let program = expr::parse(entry.recipe)?;
    let value = Evaluator::new(&env, id, &scope).run(&program)?;
    Ok(value.to_real(ctx))
}

struct RecipeEnv<'a> {
    ctx: &'a Context,
    depth: usize,
}

impl Env for RecipeEnv<'_> {
    fn context(&self) -> &Context {
        self.ctx
    }

    fn reference(&self, id: &str, args: &[(String, Value)]) -> Result<Real> {
        evaluate(id, args, self.ctx, self.depth + 1)
    }

    fn class_invariant(&self, n: Ratio) -> Result<Real> {
        let id = invariants::closed_form_id(n).ok_or_else(|| Error::UnknownInvariant(n.to_string()))?;
        evaluate(id, &[], self.ctx, self.depth + 1)
    }
}

/// Watson's radical construction of `G₃₄₃`, with real seventh roots.
pub fn watson_g343_explicit(ctx: &Context) -> Result<Real> {
    evaluate_closed_form("g343-watson", ctx)
}

/// Evaluates an ad hoc recipe-language expression, which may reference
/// registered entries with `@id`.
pub fn evaluate_expression(src: &str, ctx: &Context) -> Result<Real> {
    let env = RecipeEnv { ctx, depth: 0 };
    Ok(Evaluator::new(&env, "expression", &[])
        .run(&expr::parse(src)?)?
        .to_real(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::agree_digits;
    use std::collections::HashSet;

    fn ctx() -> Context {
        Context::new(40).unwrap()
    }

    #[test]
    fn ids_are_unique_and_recipes_parse() {
        let mut seen = HashSet::new();
        for e in REGISTRY {
            assert!(seen.insert(e.id), "duplicate id {}", e.id);
            assert!(!e.anchor.is_empty() && !e.description.is_empty());
            expr::parse(e.recipe).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            assert_eq!(e.checksum().len(), 64);
        }
        assert!(
            REGISTRY.windows(2).all(|w| w[0].id < w[1].id),
            "registry must stay sorted"
        );
    }

    #[test]
    fn every_entry_evaluates() {
        let c = ctx();
        for e in REGISTRY {
            let v = evaluate_closed_form(e.id, &c).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            assert!(v.is_finite() && v > 0, "{} = {v}", e.id);
        }
    }

    #[test]
    fn trig_41_is_41() {
        let c = ctx();
        let v = evaluate_closed_form("trig-41", &c).unwrap();
        assert!(agree_digits(&v, &c.real(41)) >= 40);
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(
            evaluate_closed_form("nonexistent", &ctx()),
            Err(Error::Registry(_))
        ));
    }

    #[test]
    fn parameters() {
        let c = ctx();
        let m = evaluate_with("m-of-p", &[("p", "1")], &c).unwrap();
        assert!(agree_digits(&m, &c.real(7).sqrt()) >= 40);
        assert!(matches!(
            evaluate_with("m-of-p", &[("q", "1")], &c),
            Err(Error::Construction { .. })
        ));
    }

    #[test]
    fn watson_is_above_one_and_solves_the_septic() {
        let c = ctx();
        let g = watson_g343_explicit(&c).unwrap();
        assert!(g > 1);
        assert!(invariants::g343_septic_residual(&g, &c).abs() < c.tolerance(8));
    }

    #[test]
    fn watson_needs_cyclic_tau3() {
        // τ₃ has to be σ₂ − σ₁; with σ₃ − σ₁ the construction lands far from G₃₄₃.
        let literal = lookup("g343-watson")
            .unwrap()
            .recipe
            .replace("let t3 = s2 - s1;", "let t3 = s3 - s1;");
        assert_ne!(literal, lookup("g343-watson").unwrap().recipe);
        let c = ctx();
        let env = RecipeEnv { ctx: &c, depth: 0 };
        let v = Evaluator::new(&env, "literal", &[])
            .run(&expr::parse(&literal).unwrap())
            .unwrap()
            .to_real(&c);
        let g = evaluate_closed_form("g343-thm2", &c).unwrap();
        assert!(agree_digits(&v, &g) < 2);
    }
}

//! Named verification checks, reports, and the constant cache.

mod cache;
mod checks;
mod report;

use std::time::Duration;

use rayon::prelude::*;

pub use cache::{default_cache_path, ConstantCache, ConstantCacheEntry, CACHE_ENV};
pub use checks::check_ids;
pub use report::{emit_report, ReportFormat, ReportOptions, REPORT_VERSION};

use crate::error::Result;
use crate::precision::{agree_digits, to_decimal, Context, Real};

/// Agreement margin used when a check does not ask for a tighter one.
pub const DEFAULT_MARGIN: u32 = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationResult {
    pub check_id: String,
    pub lhs: String,
    pub rhs: String,
    pub digits_agreed: i64,
    pub required_digits: i64,
    pub pass: bool,
    pub elapsed: Duration,
}

impl VerificationResult {
    fn new(check_id: &str, lhs: String, rhs: String, digits_agreed: i64, required: i64, elapsed: Duration) -> Self {
        VerificationResult {
            check_id: check_id.to_string(),
            lhs,
            rhs,
            digits_agreed,
            required_digits: required,
            pass: digits_agreed >= required,
            elapsed,
        }
    }

    /// Two independently computed values; passes when they share at least
    /// `digits − margin` leading digits. Agreement is reported up to the
    /// requested digits, never beyond.
    pub fn agreement(check_id: &str, lhs: &Real, rhs: &Real, margin: u32, ctx: &Context, elapsed: Duration) -> Self {
        VerificationResult::new(
            check_id,
            to_decimal(lhs, ctx.digits()),
            to_decimal(rhs, ctx.digits()),
            agree_digits(lhs, rhs).min(i64::from(ctx.digits())),
            required(margin, ctx),
            elapsed,
        )
    }

    /// A quantity that should vanish; passes when `|value| < 10^{-(digits − margin)}`.
    pub fn residual(check_id: &str, value: &Real, margin: u32, ctx: &Context, elapsed: Duration) -> Self {
        let zero = Real::new(value.prec());
        VerificationResult::new(
            check_id,
            scientific(value),
            "0".into(),
            agree_digits(value, &zero).min(i64::from(ctx.digits())),
            required(margin, ctx),
            elapsed,
        )
    }

    /// A yes/no property such as an ordering. Success is recorded as
    /// `digits` agreed digits, failure as zero.
    pub fn predicate(check_id: &str, holds: bool, lhs: String, rhs: String, ctx: &Context, elapsed: Duration) -> Self {
        let digits = i64::from(ctx.digits());
        VerificationResult::new(check_id, lhs, rhs, if holds { digits } else { 0 }, digits, elapsed)
    }

    /// Merges several sub-comparisons into one result: the weakest agreement wins.
    pub fn combine(check_id: &str, parts: Vec<VerificationResult>, elapsed: Duration) -> Self {
        let worst = parts
            .iter()
            .min_by_key(|r| r.digits_agreed - r.required_digits)
            .cloned()
            .expect("at least one part");
        VerificationResult {
            check_id: check_id.to_string(),
            elapsed,
            ..worst
        }
    }

    /// Forces a failure when an extra side condition does not hold.
    pub fn also_requires(mut self, holds: bool) -> Self {
        if !holds {
            self.digits_agreed = 0;
            self.pass = self.required_digits <= 0;
        }
        self
    }
}

fn required(margin: u32, ctx: &Context) -> i64 {
    i64::from(ctx.digits()) - i64::from(margin)
}

/// Short scientific rendering for residuals, e.g. `-3.1416e-72`.
pub(crate) fn scientific(x: &Real) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let (neg, mantissa, exp) = x.to_sign_string_exp(10, Some(5));
    let exp = exp.unwrap_or(0) - 1;
    let (head, tail) = mantissa.split_at(1);
    format!("{}{}.{}e{}", if neg { "-" } else { "" }, head, tail, exp)
}

/// Runs one registered check at `digits`.
pub fn run_check(check_id: &str, digits: u32) -> Result<VerificationResult> {
    let ctx = Context::new(digits)?;
    checks::run(check_id, &ctx)
}

/// Runs every registered check. Failures of individual checks, including
/// numerical errors, are folded into failing results rather than aborting.
pub fn run_all(digits: u32, parallel: bool) -> Result<Vec<VerificationResult>> {
    run_selected(&check_ids(), digits, parallel)
}

pub fn run_selected(ids: &[String], digits: u32, parallel: bool) -> Result<Vec<VerificationResult>> {
    let ctx = Context::new(digits)?;
    for id in ids {
        checks::ensure_known(id)?;
    }
    let one = |id: &String| checks::run(id, &ctx).unwrap_or_else(|e| errored(id, &e.to_string(), &ctx));
    let mut results: Vec<_> = if parallel {
        ids.par_iter().map(one).collect()
    } else {
        ids.iter().map(one).collect()
    };
    results.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(results)
}

fn errored(id: &str, message: &str, ctx: &Context) -> VerificationResult {
    VerificationResult::predicate(
        id,
        false,
        format!("error: {message}"),
        String::new(),
        ctx,
        Duration::ZERO,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Context {
        Context::new(20).unwrap()
    }

    #[test]
    fn pass_iff_enough_digits() {
        let c = ctx();
        let a = c.real(1);
        let b = c.real(1) + c.real(1e-15);
        let r = VerificationResult::agreement("x", &a, &b, 10, &c, Duration::ZERO);
        assert_eq!(r.required_digits, 10);
        assert!(r.pass && r.digits_agreed >= 14);
        let same = VerificationResult::agreement("x", &a, &a, 10, &c, Duration::ZERO);
        assert_eq!(same.digits_agreed, 20);
        let r = VerificationResult::agreement("x", &a, &b, 2, &c, Duration::ZERO);
        assert!(!r.pass);
    }

    #[test]
    fn residual_rendering() {
        let c = ctx();
        let r = VerificationResult::residual("x", &c.real(-3.25e-30), 5, &c, Duration::ZERO);
        assert_eq!(r.lhs, "-3.2500e-30");
        assert!(r.pass);
        let r = VerificationResult::residual("x", &c.real(0), 5, &c, Duration::ZERO);
        assert_eq!(r.lhs, "0");
        assert!(r.pass);
        let r = VerificationResult::residual("x", &c.real(1e-3), 5, &c, Duration::ZERO);
        assert!(!r.pass);
    }

    #[test]
    fn predicates_and_combination() {
        let c = ctx();
        let yes = VerificationResult::predicate("p", true, "a".into(), "b".into(), &c, Duration::ZERO);
        let no = VerificationResult::predicate("p", false, "a".into(), "b".into(), &c, Duration::ZERO);
        assert!(yes.pass && !no.pass);
        let both = VerificationResult::combine("both", vec![yes.clone(), no], Duration::ZERO);
        assert!(!both.pass);
        assert_eq!(both.check_id, "both");
        assert!(!yes.also_requires(false).pass);
    }

    #[test]
    fn unknown_check_is_a_registry_error() {
        assert!(matches!(
            run_check("nonexistent", 30),
            Err(crate::error::Error::Registry(_))
        ));
        assert!(run_selected(&["nonexistent".to_string()], 30, false).is_err());
    }
}

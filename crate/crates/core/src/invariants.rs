//! Class invariants `G_n = 2^{-1/4} q^{-1/24} χ(q)` at `q = e^{-π√n}`.
//!
//! Numeric values come straight from the χ product. Closed forms are
//! registry recipes, looked up for `n` or `1/n` since `G_n = G_{1/n}`.

use rug::ops::Pow;
use rug::Float;

use crate::closed_forms;
use crate::error::{Error, Result};
use crate::precision::{Context, Ratio, Real};
use crate::theta::{chi, phi, Nome};

/// Tabulated `n` and the registry entry holding `G_n`.
pub const CLOSED_FORM_TABLE: [(u64, &str); 10] = [
    (1, "g1"),
    (3, "g3"),
    (7, "g7"),
    (9, "g9"),
    (25, "g25"),
    (49, "g49"),
    (147, "g147"),
    (343, "g343-thm2"),
    (441, "g441"),
    (1225, "g1225"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantSource {
    Numeric,
    ClosedForm,
}

#[derive(Debug, Clone)]
pub struct ClassInvariantRecord {
    pub n: Ratio,
    pub value: Real,
    pub source: InvariantSource,
    pub closed_form_id: Option<&'static str>,
}

/// `2^{-1/4} e^{π√n/24} χ(e^{-π√n})`.
pub fn class_invariant_numeric(n: Ratio, ctx: &Context) -> Result<Real> {
    let prec = ctx.prec();
    let x = ctx.pi() * n.sqrt(ctx);
    let q = Nome::exp_neg(&x)?;
    let scale = Float::with_val(prec, &x / 24u32).exp() / ctx.real(2).root(4);
    Ok(scale * chi(&q, ctx)?)
}

/// Registry id for `G_n`, if `n` or `1/n` is tabulated.
pub fn closed_form_id(n: Ratio) -> Option<&'static str> {
    let lookup = |r: Ratio| {
        if r.den() != 1 {
            return None;
        }
        CLOSED_FORM_TABLE.iter().find(|(k, _)| *k == r.num()).map(|(_, id)| *id)
    };
    lookup(n).or_else(|| lookup(n.recip()))
}

pub fn class_invariant_closed(n: Ratio, ctx: &Context) -> Result<Real> {
    let id = closed_form_id(n).ok_or_else(|| Error::UnknownInvariant(n.to_string()))?;
    closed_forms::evaluate_closed_form(id, ctx)
}

/// Closed form when tabulated, otherwise the χ product if `fallback` is set.
pub fn class_invariant(n: Ratio, fallback: bool, ctx: &Context) -> Result<ClassInvariantRecord> {
    match class_invariant_closed(n, ctx) {
        Ok(value) => Ok(ClassInvariantRecord {
            n,
            value,
            source: InvariantSource::ClosedForm,
            closed_form_id: closed_form_id(n),
        }),
        Err(Error::UnknownInvariant(_)) if fallback => Ok(ClassInvariantRecord {
            n,
            value: class_invariant_numeric(n, ctx)?,
            source: InvariantSource::Numeric,
            closed_form_id: None,
        }),
        Err(e) => Err(e),
    }
}

/// `p = 2√2 G_n / G_{49n}⁷` for `q = e^{-π√n}`, falling back to numeric
/// invariants outside the table.
pub fn p_from_invariants(n: Ratio, ctx: &Context) -> Result<Real> {
    p_from_invariants_with(n, true, ctx)
}

pub fn p_from_invariants_with(n: Ratio, fallback: bool, ctx: &Context) -> Result<Real> {
    let g_n = class_invariant(n, fallback, ctx)?.value;
    let g_49n = class_invariant(n.scale(49), fallback, ctx)?.value;
    Ok(ctx.real(8).sqrt() * g_n / g_49n.pow(7u32))
}

/// Multiplier of degree `d`: `φ²(e^{-π√n}) / φ²(e^{-dπ√n})`.
pub fn multiplier_numeric(n: Ratio, d: u32, ctx: &Context) -> Result<Real> {
    if d == 0 {
        return Err(Error::domain("multiplier degree must be at least 1"));
    }
    let q = Nome::exp_neg_pi_sqrt(n, ctx);
    let top = phi(&q, ctx)?;
    let bottom = phi(&q.pow(d), ctx)?;
    Ok((top / bottom).square())
}

/// `x⁷ − 7x⁶ − 7x⁵ − 7x⁴ − 1` at `x = 2^{-1/4} g`; vanishes for `g = G₃₄₃`.
pub fn g343_septic_residual(g: &Real, ctx: &Context) -> Real {
    let x = Float::with_val(ctx.prec(), g / ctx.real(2).root(4));
    let mut acc = ctx.real(1);
    for c in [-7, -7, -7, 0, 0, 0, -1] {
        acc *= &x;
        acc += c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::agree_digits;

    fn ctx() -> Context {
        Context::new(40).unwrap()
    }

    fn ratio(s: &str) -> Ratio {
        s.parse().unwrap()
    }

    #[test]
    fn numeric_examples() {
        let c = ctx();
        let g1 = class_invariant_numeric(Ratio::integer(1), &c).unwrap();
        assert!(agree_digits(&g1, &c.real(1)) >= 38);
        let g7 = class_invariant_numeric(Ratio::integer(7), &c).unwrap();
        assert!(agree_digits(&g7, &c.real(2).root(4)) >= 38);
        let g17 = class_invariant_numeric(ratio("1/7"), &c).unwrap();
        assert!(agree_digits(&g7, &g17) >= 38);
    }

    #[test]
    fn table_lookup_is_reciprocal_aware() {
        assert_eq!(closed_form_id(ratio("49")), Some("g49"));
        assert_eq!(closed_form_id(ratio("1/49")), Some("g49"));
        assert_eq!(closed_form_id(ratio("343")), Some("g343-thm2"));
        assert_eq!(closed_form_id(ratio("11")), None);
        assert_eq!(closed_form_id(ratio("3/7")), None);
        let c = ctx();
        assert!(matches!(
            class_invariant_closed(ratio("11"), &c),
            Err(Error::UnknownInvariant(_))
        ));
    }

    #[test]
    fn closed_g49_matches_radicals() {
        let c = ctx();
        let expect = (c.real(7).root(4) + (c.real(4) + c.real(7).sqrt()).sqrt()) / 2u32;
        for n in ["49", "1/49"] {
            let g = class_invariant_closed(ratio(n), &c).unwrap();
            assert!(agree_digits(&g, &expect) >= 40);
        }
    }

    #[test]
    fn p_examples() {
        let c = ctx();
        let p = p_from_invariants(ratio("1/7"), &c).unwrap();
        assert!(agree_digits(&p, &c.real(1)) >= 39);
        let p = p_from_invariants(ratio("1/49"), &c).unwrap();
        let expect = c.real(7).sqrt() + c.real(2).sqrt() * c.real(7).root(4) + 1u32;
        assert!(agree_digits(&p, &expect) >= 39);
        // G_{11·49} is not tabulated.
        assert!(p_from_invariants_with(ratio("11"), false, &c).is_err());
        let fallback = p_from_invariants(ratio("11"), &c).unwrap();
        assert!(fallback > 0 && fallback < 8);
    }

    #[test]
    fn multiplier_examples() {
        let c = ctx();
        assert_eq!(multiplier_numeric(ratio("5"), 1, &c).unwrap(), 1);
        // m with n = 1/49, d = 7 is √M for the quartic ratio M = ½(a³+4a²+10a+14), a = 28^{1/4}.
        let m = multiplier_numeric(ratio("1/49"), 7, &c).unwrap();
        let a = c.real(28).root(4);
        let big_m = (a.clone().pow(3u32) + a.clone().square() * 4u32 + a * 10u32 + 14u32) / 2u32;
        assert!(agree_digits(&m, &big_m.sqrt()) >= 37);
        assert!(multiplier_numeric(ratio("1"), 0, &c).is_err());
    }

    #[test]
    fn septic_residual_of_numeric_g343() {
        let c = ctx();
        let g = class_invariant_numeric(Ratio::integer(343), &c).unwrap();
        assert!(g343_septic_residual(&g, &c).abs() < c.tolerance(8));
    }
}

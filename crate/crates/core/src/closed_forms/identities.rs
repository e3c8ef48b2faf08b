//! Polynomial identities used to turn `m(p)` into radicals, checked numerically.

use crate::precision::PowRef;
use rug::ops::Pow;
use std::time::Instant;

use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{Context, Real};
use crate::septic::{build_r, CubicPoly};
use crate::verify::VerificationResult;

pub const PROOF_IDENTITIES: [&str; 3] = ["proof-id-e7-i", "proof-id-e7-ii", "proof-id-e7sqrt3"];

/// `(p_a, m_a, r_a)` for the one-parameter family behind the `e^{-7π}` and
/// `e^{-49π}` evaluations.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyTriple {
    /// `p_a = a²/2 + a + 1`.
    pub p: Real,
    /// `m_a = (½(a³ + 4a² + 10a + 14))^{1/2}`.
    pub m: Real,
    /// `r` built from `p_a` and `m_a²`.
    pub r: CubicPoly,
    /// The expanded form of `r_a`, kept separately as a cross-check.
    pub r_expanded: CubicPoly,
}

pub fn family_pa_ma_ra(a: &Real, ctx: &Context) -> FamilyTriple {
    let prec = ctx.prec();
    let a = Float::with_val(prec, a);
    let a2 = Float::with_val(prec, a.square_ref());
    let a3 = Float::with_val(prec, &a2 * &a);
    let p = Float::with_val(prec, &a2 / 2u32) + &a + 1u32;
    let m_sq = (Float::with_val(prec, &a2 * 4u32) + &a3 + Float::with_val(prec, &a * 10u32) + 14u32) / 2u32;
    let r = build_r(&p, &m_sq);

    let quad = Float::with_val(prec, &a * 2u32) + &a2 + 2u32;
    let c2 = -(Float::with_val(prec, &a3 + &a2) + Float::with_val(prec, &a * 4u32) + 6u32);
    let c1 = Float::with_val(prec, quad.square_ref()) * (Float::with_val(prec, &quad) + 8u32) / 8u32;
    let c0 = -Float::with_val(prec, quad.pow_ref(4u32)) / 16u32;
    FamilyTriple {
        p,
        m: m_sq.sqrt(),
        r,
        r_expanded: CubicPoly::new(c2, c1, c0),
    }
}

fn sample_points(ctx: &Context) -> Vec<Real> {
    vec![ctx.real(0.5), ctx.real(1), ctx.real(28).root(4), ctx.real(756).root(6)]
}

fn relative_gap(lhs: &Real, rhs: &Real, ctx: &Context) -> Real {
    let prec = ctx.prec();
    let scale = Float::with_val(prec, lhs.abs_ref()).max(&Float::with_val(prec, 1));
    Float::with_val(prec, lhs - rhs).abs() / scale
}

/// `(2+5p_a)² − 4(1−p_a)³ = ¼(2a³+3a²+10a+14)² − (a²/2)(a⁴−28)`, `p_a = a²/2 + a + 1`.
fn e7_part_i(a: &Real, ctx: &Context) -> Sides {
    let prec = ctx.prec();
    let a2 = Float::with_val(prec, a.square_ref());
    let p = Float::with_val(prec, &a2 / 2u32) + a + 1u32;
    let lhs = quartic_radicand(&p, ctx);
    let cubic = Float::with_val(prec, a2.clone() * a * 2u32)
        + Float::with_val(prec, &a2 * 3u32)
        + Float::with_val(prec, a * 10u32)
        + 14u32;
    let vanishing = Float::with_val(prec, &a2 / 2u32) * (Float::with_val(prec, a2.square_ref()) - 28u32);
    Sides {
        lhs,
        reduced: cubic.square() / 4u32,
        vanishing: -vanishing,
    }
}

/// `(√(13 + a²/2) + √(7 + 3a²/2))² = 2a² + √((8a + 28/a)² + (3a²+28)(a⁴−28)/a²) + 20`, `a ≠ 0`.
fn e7_part_ii(a: &Real, ctx: &Context) -> Sides {
    let prec = ctx.prec();
    let a2 = Float::with_val(prec, a.square_ref());
    let s1 = (Float::with_val(prec, &a2 / 2u32) + 13u32).sqrt();
    let s2 = (Float::with_val(prec, &a2 * 3u32) / 2u32 + 7u32).sqrt();
    let lhs = (s1 + s2).square();
    let lin = Float::with_val(prec, a * 8u32) + Float::with_val(prec, 28u32 / a);
    let vanishing =
        (Float::with_val(prec, &a2 * 3u32) + 28u32) * (Float::with_val(prec, a2.square_ref()) - 28u32) / &a2;
    let base = Float::with_val(prec, &a2 * 2u32) + 20u32;
    let reduced = Float::with_val(prec, &base + lin.clone().abs());
    let full = base + (lin.square() + &vanishing).sqrt();
    Sides {
        lhs,
        vanishing: full - &reduced,
        reduced,
    }
}

/// `(2+5p_a)² − 4(1−p_a)³ = 4(m_a² − 1 − 5p_a/2)² − (a⁶ − 756)P/306110016` with
/// `p_a = (a⁴+3a³+12a²+18a+90)/54` and `m_a = ((a/18)(a²+6)² + a(a+6) + 6)/(6√3)`.
fn e7sqrt3_part_i(a: &Real, ctx: &Context) -> Sides {
    let prec = ctx.prec();
    let horner = |coeffs: &[i64]| {
        let mut acc = Float::with_val(prec, 0);
        for &c in coeffs {
            acc *= a;
            acc += c;
        }
        acc
    };
    let p = horner(&[1, 3, 12, 18, 90]) / 54u32;
    let a2_6 = Float::with_val(prec, a.square_ref()) + 6u32;
    let m = (Float::with_val(prec, a * a2_6.square()) / 18u32
        + Float::with_val(prec, a * (Float::with_val(prec, a + 6u32)))
        + 6u32)
        / (ctx.real(3).sqrt() * 6u32);
    let big_p = horner(&[
        1, 0, 48, 72, 1440, 3024, 27108, 68040, 375840, 843696, 3005424, 5762016, 13576896, 15536448, 5878656,
    ]);
    let lhs = quartic_radicand(&p, ctx);
    let inner = m.square() - 1u32 - Float::with_val(prec, &p * 5u32) / 2u32;
    let vanishing = (Float::with_val(prec, a.pow_ref(6u32)) - 756u32) * big_p / 306_110_016u32;
    Sides {
        lhs,
        reduced: inner.square() * 4u32,
        vanishing: -vanishing,
    }
}

/// Both sides of an identity, the right one split as `reduced + vanishing`
/// where `vanishing` is the term carrying the `a⁴ − 28` or `a⁶ − 756` factor.
struct Sides {
    lhs: Real,
    reduced: Real,
    vanishing: Real,
}

impl Sides {
    fn rhs(&self) -> Real {
        Float::with_val(self.reduced.prec(), &self.reduced + &self.vanishing)
    }
}

fn sides_for(id: &str) -> Result<fn(&Real, &Context) -> Sides> {
    Ok(match id {
        "proof-id-e7-i" => e7_part_i,
        "proof-id-e7-ii" => e7_part_ii,
        "proof-id-e7sqrt3" => e7sqrt3_part_i,
        _ => return Err(Error::Registry(id.to_string())),
    })
}

/// The root of the vanishing factor for each identity: `28^{1/4}` or `756^{1/6}`.
fn special_point(id: &str, ctx: &Context) -> Real {
    if id == "proof-id-e7sqrt3" {
        ctx.real(756).root(6)
    } else {
        ctx.real(28).root(4)
    }
}

/// At the root of the identity's vanishing factor, returns the vanishing term
/// and `lhs − reduced`. Both should be zero to working precision.
pub fn vanishing_at_root(id: &str, ctx: &Context) -> Result<(Real, Real)> {
    let s = sides_for(id)?(&special_point(id, ctx), ctx);
    let gap = Float::with_val(ctx.prec(), &s.lhs - &s.reduced);
    Ok((s.vanishing, gap))
}

fn quartic_radicand(p: &Real, ctx: &Context) -> Real {
    let prec = ctx.prec();
    let two_5p = Float::with_val(prec, p * 5u32) + 2u32;
    let one_minus = Float::with_val(prec, 1u32 - p);
    two_5p.square() - one_minus.pow(3u32) * 4u32
}

/// Evaluates both sides of a proof identity at `a ∈ {1/2, 1, 28^{1/4}, 756^{1/6}}`
/// and reports the largest relative discrepancy as a residual.
pub fn proof_identity_check(id: &str, ctx: &Context) -> Result<VerificationResult> {
    let start = Instant::now();
    let sides = sides_for(id)?;
    let mut worst = ctx.real(0);
    for a in sample_points(ctx) {
        let s = sides(&a, ctx);
        let gap = relative_gap(&s.lhs, &s.rhs(), ctx);
        if gap > worst {
            worst = gap;
        }
    }
    Ok(VerificationResult::residual(id, &worst, 5, ctx, start.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::agree_digits;

    fn ctx() -> Context {
        Context::new(40).unwrap()
    }

    #[test]
    fn all_identities_pass() {
        let c = ctx();
        for id in PROOF_IDENTITIES {
            let r = proof_identity_check(id, &c).unwrap();
            assert!(r.pass, "{id}: {r:?}");
        }
        assert!(proof_identity_check("proof-id-x", &c).is_err());
    }

    #[test]
    fn e7_part_i_at_one_by_hand() {
        // p = 5/2: (29/2)² + 4(3/2)³ = 223.75 on the left;
        // 29²/4 − (1/2)(−27) = 223.75 on the right.
        let c = ctx();
        let s = e7_part_i(&c.real(1), &c);
        assert_eq!(s.lhs, 223.75);
        assert_eq!(s.rhs(), 223.75);
    }

    #[test]
    fn e7_part_i_with_plus_sign_fails() {
        // The sign in front of (a²/2)(a⁴ − 28) has to be minus; with plus the
        // two sides differ by a²(a⁴ − 28), which is −27 at a = 1.
        let c = ctx();
        let s = e7_part_i(&c.real(1), &c);
        let plus = s.rhs() + c.real(0.5) * (c.real(1) - 28u32) * 2u32;
        assert_eq!(s.lhs - plus, 27);
    }

    #[test]
    fn vanishing_terms() {
        let c = ctx();
        let a = c.real(28).root(4);
        let l = e7_part_i(&a, &c).lhs;
        let cubic = c.real(2) * a.clone().pow(3u32) + c.real(3) * a.clone().square() + c.real(10) * &a + 14u32;
        assert!(agree_digits(&l, &(cubic.square() / 4u32)) >= 40);
        for id in PROOF_IDENTITIES {
            let (term, gap) = vanishing_at_root(id, &c).unwrap();
            assert!(term.abs() < c.tolerance(0), "{id}");
            assert!(gap.abs() < c.tolerance(0), "{id}");
        }
        // away from the root the term is not small
        let (term, _) = {
            let s = e7sqrt3_part_i(&c.real(1), &c);
            (s.vanishing, s.lhs)
        };
        assert!(term.abs() > 1);
    }

    #[test]
    fn family_at_zero_is_the_heptagon_cubic() {
        let c = ctx();
        let f = family_pa_ma_ra(&c.real(0), &c);
        assert_eq!(f.p, 1);
        assert!(agree_digits(&f.m, &c.real(7).sqrt()) >= 40);
        assert_eq!(f.r, CubicPoly::new(c.real(-6), c.real(5), c.real(-1)));
        assert_eq!(f.r_expanded, f.r);
    }

    #[test]
    fn family_expansion_matches_at_28_quarter() {
        let c = ctx();
        let a = c.real(28).root(4);
        let f = family_pa_ma_ra(&a, &c);
        let expect = c.real(7).sqrt() + c.real(2).sqrt() * c.real(7).root(4) + 1u32;
        assert!(agree_digits(&f.p, &expect) >= 40);
        for (x, y) in f.r.coefficients().iter().zip(f.r_expanded.coefficients().iter()) {
            assert!(agree_digits(x, y) >= 38);
        }
    }
}

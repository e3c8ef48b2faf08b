//! The degree-7 identity run as an algorithm.
//!
//! Given a nome `q`, compute `p`, the quartic ratio `M = φ⁴(q)/φ⁴(q⁷)`, the
//! cubic `r(ξ)` whose roots are `α, β, γ`, pick the one orientation of those
//! roots that reproduces the seventh-power sum, and rebuild
//! `u, v, w` and `φ(q^{1/7})/φ(q⁷) = 1 + u + v + w` from them.

use crate::precision::PowRef;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::invariants;
use crate::precision::{agree_digits, pow_ratio, Context, Ratio, Real};
use crate::theta::{chi, Nome};
use crate::verify::VerificationResult;

/// Monic cubic `ξ³ + c₂ξ² + c₁ξ + c₀`.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicPoly {
    pub c2: Real,
    pub c1: Real,
    pub c0: Real,
}

impl CubicPoly {
    pub fn new(c2: Real, c1: Real, c0: Real) -> Self {
        CubicPoly { c2, c1, c0 }
    }

    /// Coefficients `(c₃, c₂, c₁, c₀)` with `c₃ = 1`.
    pub fn coefficients(&self) -> [Real; 4] {
        let one = Float::with_val(self.c2.prec(), 1);
        [one, self.c2.clone(), self.c1.clone(), self.c0.clone()]
    }

    pub fn eval(&self, x: &Real) -> Real {
        let prec = self.c2.prec().max(x.prec());
        let mut acc = Float::with_val(prec, x + &self.c2);
        acc *= x;
        acc += &self.c1;
        acc *= x;
        acc += &self.c0;
        acc
    }

    fn derivative(&self, x: &Real) -> Real {
        let prec = self.c2.prec().max(x.prec());
        let mut acc = Float::with_val(prec, x * 3u32);
        acc += Float::with_val(prec, &self.c2 * 2u32);
        acc *= x;
        acc += &self.c1;
        acc
    }

    /// `18c₂c₁c₀ − 4c₂³c₀ + c₂²c₁² − 4c₁³ − 27c₀²`.
    pub fn discriminant(&self) -> Real {
        let prec = self.c2.prec();
        let (b, c, d) = (&self.c2, &self.c1, &self.c0);
        let mut disc = Float::with_val(prec, b * c) * d * 18u32;
        disc -= Float::with_val(prec, b.pow_ref(3u32)) * d * 4u32;
        disc += Float::with_val(prec, b * c).square();
        disc -= Float::with_val(prec, c.pow_ref(3u32)) * 4u32;
        disc -= Float::with_val(prec, d.square_ref()) * 27u32;
        disc
    }
}

/// Complete record of one pipeline run.
#[derive(Debug, Clone)]
pub struct SepticSolution {
    pub q: Nome,
    pub p: Real,
    /// `φ⁴(q)/φ⁴(q⁷)`.
    pub quartic_ratio: Real,
    pub cubic: CubicPoly,
    /// `(α, β, γ)` in the orientation that rebuilds `(u, v, w)`.
    pub roots: (Real, Real, Real),
    pub uvw: (Real, Real, Real),
    /// Discriminant of `r` on the branch selected for `0 < q < 1`.
    pub discriminant: Real,
    /// `1 + u + v + w = φ(q^{1/7})/φ(q⁷)`.
    pub ratio: Real,
    pub orientation: OrientationReport,
    /// Context the solution was finally computed under (may be escalated).
    pub context: Context,
}

/// How decisively the seventh-power test separated the two root orientations.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientationReport {
    pub matched_digits: i64,
    pub rival_digits: i64,
    /// `|S_rival − T| / max(|T|, 1)`.
    pub rival_relative_gap: Real,
}

/// Where `p` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PSource {
    /// `8q²χ(q)/χ⁷(q⁷)` summed directly.
    #[default]
    Product,
    /// `2√2 G_n / G_{49n}⁷` for `q = e^{−π√n}`, using the invariant table.
    Invariants(Ratio),
}

/// `p = 8q²(−q;q²)_∞ / (−q⁷;q¹⁴)⁷_∞ = 8q²χ(q)/χ⁷(q⁷)`.
pub fn p_product(q: &Nome, ctx: &Context) -> Result<Real> {
    let qv = q.require_positive()?;
    let num = Float::with_val(ctx.prec(), qv.square_ref()) * 8u32 * chi(q, ctx)?;
    let den = Float::with_val(ctx.prec(), chi(&q.pow(7), ctx)?.pow_ref(7u32));
    Ok(num / den)
}

fn require_p_range(p: &Real) -> Result<()> {
    if !(*p > 0 && *p < 8) {
        return Err(Error::domain(format!("p must lie in (0, 8), got {}", p.to_f64())));
    }
    Ok(())
}

/// The root of `M² − (2+5p)M + (1−p)³ = 0` valid for `0 < q < 1`:
/// `M = 1 + 5p/2 + ½√((2+5p)² − 4(1−p)³)`.
pub fn phi4_ratio_from_p(p: &Real, ctx: &Context) -> Result<Real> {
    require_p_range(p)?;
    let prec = ctx.prec();
    let two_5p = Float::with_val(prec, p * 5u32) + 2u32;
    let one_minus = Float::with_val(prec, 1 - p);
    let disc = Float::with_val(prec, two_5p.square_ref()) - one_minus.pow(3u32) * 4u32;
    if disc < 0 {
        return Err(Error::domain("negative radicand in quartic-ratio formula"));
    }
    Ok(1 + Float::with_val(prec, p * 5u32) / 2u32 + disc.sqrt() / 2u32)
}

/// `r(ξ) = ξ³ + 2ξ²(1 + 3p − M) + ξp²(p + 4) − p⁴`.
pub fn build_r(p: &Real, m: &Real) -> CubicPoly {
    let prec = p.prec().max(m.prec());
    let c2 = (Float::with_val(prec, p * 3u32) + 1u32 - m) * 2u32;
    let c1 = Float::with_val(prec, p.square_ref()) * Float::with_val(prec, p + 4u32);
    let c0 = -Float::with_val(prec, p.pow_ref(4u32));
    CubicPoly::new(c2, c1, c0)
}

/// `(Δ₊, Δ₋) = p⁵(p³ + 104p² + 608p + 512 ± (8p^{3/2} + 160√p)√(4p² + 13p + 32))`.
pub fn discriminants(p: &Real, ctx: &Context) -> Result<(Real, Real)> {
    if *p <= 0 {
        return Err(Error::domain("discriminants need p > 0"));
    }
    let prec = ctx.prec();
    let p = Float::with_val(prec, p);
    let sqrt_p = p.clone().sqrt();
    let base = Float::with_val(prec, p.pow_ref(3u32))
        + Float::with_val(prec, p.square_ref()) * 104u32
        + Float::with_val(prec, &p * 608u32)
        + 512u32;
    let lead = Float::with_val(prec, &sqrt_p * &p) * 8u32 + Float::with_val(prec, &sqrt_p * 160u32);
    let inner = (Float::with_val(prec, p.square_ref()) * 4u32 + Float::with_val(prec, &p * 13u32) + 32u32).sqrt();
    let spread = lead * inner;
    let p5 = Float::with_val(prec, p.pow_ref(5u32));
    let plus = Float::with_val(prec, &base + &spread) * &p5;
    let minus = (base - spread) * p5;
    Ok((plus, minus))
}

/// Three real roots of a cubic with positive discriminant, ascending.
///
/// Trigonometric solution of the depressed cubic, then Newton polishing at
/// full precision.
pub fn solve_cubic_real(r: &CubicPoly, ctx: &Context) -> Result<(Real, Real, Real)> {
    let disc = r.discriminant();
    if disc <= 0 {
        return Err(Error::UnexpectedDiscriminant(format!("{:.6e}", disc.to_f64())));
    }
    Ok(trig_roots(r, ctx))
}

/// The trigonometric solve itself, for callers that have already established
/// a positive discriminant by other means.
fn trig_roots(r: &CubicPoly, ctx: &Context) -> (Real, Real, Real) {
    let prec = ctx.prec();
    // ξ = t − c₂/3 gives t³ + Pt + Q = 0
    let shift = Float::with_val(prec, &r.c2 / 3u32);
    let big_p = Float::with_val(prec, &r.c1 - Float::with_val(prec, r.c2.square_ref()) / 3u32);
    let big_q =
        Float::with_val(prec, r.c2.pow_ref(3u32)) * 2u32 / 27u32 - Float::with_val(prec, &r.c2 * &r.c1) / 3u32 + &r.c0;
    let neg_p_third = Float::with_val(prec, -&big_p) / 3u32;
    let amplitude = neg_p_third.clone().sqrt() * 2u32;
    // cos(3θ) = (3Q / 2P) √(−3/P)
    let mut cos3 = Float::with_val(prec, &big_q * 3u32) / Float::with_val(prec, &big_p * 2u32)
        * Float::with_val(prec, 1 / &neg_p_third).sqrt();
    cos3.clamp_mut(&-1i32, &1i32);
    let theta = cos3.acos() / 3u32;
    let two_pi_3 = ctx.pi() * 2u32 / 3u32;
    let mut roots: Vec<Real> = (0..3u32)
        .map(|k| {
            let angle = Float::with_val(prec, &theta - Float::with_val(prec, &two_pi_3 * k));
            Float::with_val(prec, &amplitude * angle.cos()) - &shift
        })
        .collect();

    // Polish until the Newton step is below working precision relative to
    // the root, so widely separated roots all come out with full relative accuracy.
    let eps = ctx.epsilon();
    for root in roots.iter_mut() {
        for _ in 0..64 {
            let slope = r.derivative(root);
            if slope.is_zero() {
                break;
            }
            let step = r.eval(root) / slope;
            *root -= &step;
            if step.abs() <= Float::with_val(prec, root.abs_ref()) * &eps {
                break;
            }
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).expect("finite roots"));
    let mut it = roots.into_iter();
    (it.next().unwrap(), it.next().unwrap(), it.next().unwrap())
}

/// `α²p/β + β²p/γ + γ²p/α`.
fn seventh_power_sum(roots: [&Real; 3], p: &Real) -> Real {
    let [a, b, c] = roots;
    let prec = p.prec();
    let term = |x: &Real, y: &Real| Float::with_val(prec, x.square_ref()) * p / y;
    term(a, b) + term(b, c) + term(c, a)
}

/// `M² − 7(p − 2)M + 7p² − 49p − 15`, the value `u⁷ + v⁷ + w⁷` must take.
pub fn seventh_power_target(p: &Real, m: &Real) -> Real {
    let prec = p.prec().max(m.prec());
    Float::with_val(prec, m.square_ref()) - Float::with_val(prec, p - 2u32) * m * 7u32
        + Float::with_val(prec, p.square_ref()) * 7u32
        - Float::with_val(prec, p * 49u32)
        - 15u32
}

/// Choose the orientation of the roots that rebuilds `(u, v, w)`.
///
/// Of the cyclic class `(α, β, γ)` and its reversal, exactly one has seventh-power
/// sum equal to the target; the match must hold to `digits/2` while the rival
/// misses by at least ten digits more. The winner is then rotated so that
/// `α²/β > β²/γ > γ²/α`.
pub fn order_roots(
    roots: (Real, Real, Real),
    p: &Real,
    m: &Real,
    ctx: &Context,
) -> Result<((Real, Real, Real), OrientationReport)> {
    require_p_range(p)?;
    let (x, y, z) = roots;
    if !(x > 0 && y > 0 && z > 0) || x == y || y == z || x == z {
        return Err(Error::domain("ordering needs three distinct positive roots"));
    }
    let target = seventh_power_target(p, m);
    let forward = seventh_power_sum([&x, &y, &z], p);
    let reverse = seventh_power_sum([&z, &y, &x], p);
    let fwd_digits = agree_digits(&forward, &target);
    let rev_digits = agree_digits(&reverse, &target);

    let (winner, best, rival, rival_sum) = if fwd_digits >= rev_digits {
        ([x, y, z], fwd_digits, rev_digits, reverse)
    } else {
        ([z, y, x], rev_digits, fwd_digits, forward)
    };
    let needed = i64::from(ctx.digits() / 2);
    if best < needed || best < rival + 10 {
        return Err(Error::AmbiguousOrientation {
            digits: ctx.digits(),
            best,
            rival,
        });
    }
    let prec = ctx.prec();
    let scale = Float::with_val(prec, target.abs_ref()).max(&Float::with_val(prec, 1));
    let rival_relative_gap = (rival_sum - &target).abs() / scale;

    let [a, b, c] = winner;
    let rotations = [
        [a.clone(), b.clone(), c.clone()],
        [b.clone(), c.clone(), a.clone()],
        [c, a, b],
    ];
    let ratios = |t: &[Real; 3]| {
        let q = |x: &Real, y: &Real| Float::with_val(prec, x.square_ref()) / y;
        (q(&t[0], &t[1]), q(&t[1], &t[2]), q(&t[2], &t[0]))
    };
    let ordered = rotations
        .into_iter()
        .find(|t| {
            let (r1, r2, r3) = ratios(t);
            r1 > r2 && r2 > r3
        })
        .ok_or_else(|| Error::domain("no rotation of the roots gives a decreasing α²/β, β²/γ, γ²/α"))?;
    let [a, b, c] = ordered;
    Ok((
        (a, b, c),
        OrientationReport {
            matched_digits: best,
            rival_digits: rival,
            rival_relative_gap,
        },
    ))
}

/// `(u, v, w) = ((α²p/β)^{1/7}, (β²p/γ)^{1/7}, (γ²p/α)^{1/7})`.
pub fn uvw_from_roots(ordered: &(Real, Real, Real), p: &Real, ctx: &Context) -> Result<(Real, Real, Real)> {
    let (a, b, c) = ordered;
    let prec = ctx.prec();
    let part = |x: &Real, y: &Real| -> Result<Real> {
        let radicand = Float::with_val(prec, x.square_ref()) * p / y;
        pow_ratio(&radicand, 1, 7, ctx)
    };
    Ok((part(a, b)?, part(b, c)?, part(c, a)?))
}

/// Entry point: `q ↦ SepticSolution`, with `p` from the χ product.
pub fn run_pipeline(q: &Nome, ctx: &Context) -> Result<SepticSolution> {
    run_pipeline_with(q, PSource::Product, ctx)
}

/// Same as [`run_pipeline`] with a chosen source for `p`. On an ambiguous root
/// orientation the whole run is repeated once at doubled precision.
pub fn run_pipeline_with(q: &Nome, source: PSource, ctx: &Context) -> Result<SepticSolution> {
    let ctx = conditioned(&p_from_source(q, source, ctx)?, ctx)?;
    match solve_once(q, source, &ctx) {
        Err(Error::AmbiguousOrientation { .. }) => solve_once(q, source, &ctx.escalated()),
        other => other,
    }
}

fn p_from_source(q: &Nome, source: PSource, ctx: &Context) -> Result<Real> {
    match source {
        PSource::Product => p_product(&Nome::new(ctx.real(q.value()))?, ctx),
        PSource::Invariants(n) => invariants::p_from_invariants(n, ctx),
    }
}

/// Extra guard digits for the cubic solve at this `p`.
///
/// As `q → 1`, `p → 8` and the three roots of `r` merge at a rate set by
/// `8 − p`; the depressed-cubic coefficients then lose about three times
/// `log₁₀ 1/(8 − p)` digits. As `q → 0`, `r`'s ξ² coefficient is of size
/// `√p` and comes from cancelling terms of size one.
fn conditioned(p: &Real, ctx: &Context) -> Result<Context> {
    require_p_range(p)?;
    let loss = |x: Real| (-x.log10().to_f64()).max(0.0);
    let gap = Float::with_val(ctx.prec(), 8u32 - p);
    let extra = 3.0 * loss(gap) + loss(p.clone()) / 2.0;
    if extra < 1.0 {
        return Ok(*ctx);
    }
    ctx.with_guard_digits(ctx.guard_digits() + extra.ceil() as u32 + 5)
}

fn solve_once(q: &Nome, source: PSource, ctx: &Context) -> Result<SepticSolution> {
    let q = Nome::new(ctx.real(q.value()))?;
    q.require_positive()?;
    let p = p_from_source(&q, source, ctx)?;
    let m = phi4_ratio_from_p(&p, ctx)?;
    let cubic = build_r(&p, &m);
    // Δ₋ is the discriminant of r in factored form; expanding it from the
    // coefficients cancels badly once p is small.
    let (_, discriminant) = discriminants(&p, ctx)?;
    if discriminant <= 0 {
        return Err(Error::UnexpectedDiscriminant(format!("{:.6e}", discriminant.to_f64())));
    }
    let roots = trig_roots(&cubic, ctx);
    let (ordered, orientation) = order_roots(roots, &p, &m, ctx)?;
    let uvw = uvw_from_roots(&ordered, &p, ctx)?;
    let ratio = Float::with_val(ctx.prec(), 1 + &uvw.0) + &uvw.1 + &uvw.2;
    Ok(SepticSolution {
        q,
        p,
        quartic_ratio: m,
        cubic,
        roots: ordered,
        uvw,
        discriminant,
        ratio,
        orientation,
        context: *ctx,
    })
}

/// Chebyshev polynomial of the second kind by the three-term recurrence.
pub fn chebyshev_u(n: u32, x: &Real, ctx: &Context) -> Real {
    let prec = ctx.prec();
    let mut prev = Float::with_val(prec, 1);
    if n == 0 {
        return prev;
    }
    let two_x = Float::with_val(prec, x * 2u32);
    let mut cur = two_x.clone();
    for _ in 1..n {
        let next = Float::with_val(prec, &two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `−(2ξ)⁶ r(1/(2ξ)²) = U₆(ξ)` for the `p = 1, M = 7` cubic, plus `r(0) = U₆(0) = −1`.
pub fn r_u6_transform_check(ctx: &Context) -> VerificationResult {
    let start = std::time::Instant::now();
    let prec = ctx.prec();
    let r = build_r(&ctx.real(1), &ctx.real(7));
    let samples = ["0.1", "-0.1", "0.4", "-0.4", "0.9", "-0.9", "0.25", "0.5"];
    let mut worst = ctx.real(0);
    for s in samples {
        let xi = ctx.real(Float::parse(s).expect("literal"));
        let two_xi = Float::with_val(prec, &xi * 2u32);
        let arg = Float::with_val(prec, 1 / Float::with_val(prec, two_xi.square_ref()));
        let lhs = -Float::with_val(prec, two_xi.pow_ref(6u32)) * r.eval(&arg);
        let diff = (lhs - chebyshev_u(6, &xi, ctx)).abs();
        if diff > worst {
            worst = diff;
        }
    }
    let at_zero = (r.eval(&ctx.real(0)) + 1u32).abs() + (chebyshev_u(6, &ctx.real(0), ctx) + 1u32).abs();
    if at_zero > worst {
        worst = at_zero;
    }
    VerificationResult::residual("r-u6-transform", &worst, 3, ctx, start.elapsed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::cos_rational_pi;

    fn ctx(d: u32) -> Context {
        Context::new(d).unwrap()
    }

    fn poly(c: &Context, c2: i32, c1: i32, c0: i32) -> CubicPoly {
        CubicPoly::new(c.real(c2), c.real(c1), c.real(c0))
    }

    #[test]
    fn build_r_examples() {
        let c = ctx(30);
        assert_eq!(build_r(&c.real(1), &c.real(7)), poly(&c, -6, 5, -1));
        assert_eq!(build_r(&c.real(0), &c.real(1)), poly(&c, 0, 0, 0));
    }

    #[test]
    fn quartic_ratio_examples() {
        let c = ctx(40);
        assert_eq!(phi4_ratio_from_p(&c.real(1), &c).unwrap(), 7);
        let tiny = c.real(Float::parse("1e-20").unwrap());
        let m = phi4_ratio_from_p(&tiny, &c).unwrap();
        assert!(Float::with_val(c.prec(), &m - 1u32) >= Float::with_val(c.prec(), &tiny * 3u32));
        assert!(m < 1.0001);
        for bad in [0.0, -1.0, 8.0, 9.5] {
            assert!(phi4_ratio_from_p(&c.real(bad), &c).is_err());
        }
    }

    #[test]
    fn discriminant_products() {
        let c = ctx(40);
        let (plus, minus) = discriminants(&c.real(1), &c).unwrap();
        assert!(agree_digits(&(plus * &minus), &c.real(117_649)) >= 38);
        let (plus, minus) = discriminants(&c.real(4), &c).unwrap();
        assert!(agree_digits(&(plus * &minus), &c.real(4_294_967_296u64)) >= 38);
        assert!(discriminants(&c.real(0), &c).is_err());
    }

    #[test]
    fn minus_branch_is_the_cubic_discriminant() {
        // brute-force discriminant of ξ³ − 6ξ² + 5ξ − 1
        let c = ctx(40);
        let (b, cc, d) = (-6i64, 5i64, -1i64);
        let brute = 18 * b * cc * d - 4 * b.pow(3) * d + b * b * cc * cc - 4 * cc.pow(3) - 27 * d * d;
        assert_eq!(brute, 49);
        let (_, minus) = discriminants(&c.real(1), &c).unwrap();
        assert!(agree_digits(&minus, &c.real(brute)) >= 38);
        assert_eq!(poly(&c, -6, 5, -1).discriminant(), 49);
    }

    #[test]
    fn cubic_solver_examples() {
        let c = ctx(50);
        let (a, b, d) = solve_cubic_real(&poly(&c, -6, 11, -6), &c).unwrap();
        for (got, want) in [(a, 1), (b, 2), (d, 3)] {
            assert!(agree_digits(&got, &c.real(want)) >= 50);
        }
        let (a, b, d) = solve_cubic_real(&poly(&c, -6, 5, -1), &c).unwrap();
        let expect = |k: i64| {
            let cos = cos_rational_pi(k, 7, &c).unwrap();
            1 / Float::with_val(c.prec(), cos * 2u32).square()
        };
        // ascending: k = 1, 2, 3
        assert!(agree_digits(&a, &expect(1)) >= 50);
        assert!(agree_digits(&b, &expect(2)) >= 50);
        assert!(agree_digits(&d, &expect(3)) >= 50);
        let err = solve_cubic_real(&poly(&c, 0, 1, 0), &c).unwrap_err();
        assert!(matches!(err, Error::UnexpectedDiscriminant(_)));
    }

    #[test]
    fn ordering_reproduces_missing_terms() {
        let c = ctx(50);
        let roots = solve_cubic_real(&poly(&c, -6, 5, -1), &c).unwrap();
        let ((a, b, g), report) = order_roots(roots, &c.real(1), &c.real(7), &c).unwrap();
        let inv = |k: i64| 1 / Float::with_val(c.prec(), cos_rational_pi(k, 7, &c).unwrap() * 2u32).square();
        assert!(agree_digits(&a, &inv(3)) >= 50);
        assert!(agree_digits(&b, &inv(2)) >= 50);
        assert!(agree_digits(&g, &inv(1)) >= 50);
        assert!(report.matched_digits >= report.rival_digits + 10);
    }

    #[test]
    fn ordering_rejects_repeated_roots() {
        let c = ctx(30);
        let roots = (c.real(1), c.real(1), c.real(2));
        assert!(order_roots(roots, &c.real(1), &c.real(7), &c).is_err());
    }

    #[test]
    fn chebyshev_examples() {
        let c = ctx(40);
        assert_eq!(chebyshev_u(0, &c.real(0.3), &c), 1);
        assert!(
            agree_digits(
                &chebyshev_u(1, &c.real(Float::parse("0.3").unwrap()), &c),
                &c.real(Float::parse("0.6").unwrap())
            ) >= 40
        );
        assert_eq!(chebyshev_u(6, &c.real(0.5), &c), 1);
        let root = cos_rational_pi(1, 7, &c).unwrap();
        let v = chebyshev_u(6, &root, &c);
        assert!(v.abs() < c.tolerance(2));
    }

    #[test]
    fn transform_check_passes() {
        let c = ctx(40);
        let res = r_u6_transform_check(&c);
        assert!(res.pass, "{res:?}");
    }

    #[test]
    fn pipeline_rejects_non_positive_nome() {
        let c = ctx(30);
        let q = Nome::new(c.real(-0.2)).unwrap();
        assert!(run_pipeline(&q, &c).is_err());
    }
}

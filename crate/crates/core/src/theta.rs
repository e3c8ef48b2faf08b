//! Direct evaluation of Ramanujan's theta functions by series and product.
//!
//! Everything here is computed from the defining sums and products only, so
//! these routines serve as the independent oracle for the closed forms and
//! for the septic pipeline.

use crate::precision::PowRef;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::precision::{ensure_finite, Context, Ratio, Real};

/// Series variable `q` with `|q| < 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Nome(Real);

impl Nome {
    pub fn new(q: Real) -> Result<Self> {
        if !q.is_finite() || Float::with_val(q.prec(), q.abs_ref()) >= 1 {
            return Err(Error::domain(format!("nome must satisfy |q| < 1, got {}", q.to_f64())));
        }
        Ok(Nome(q))
    }

    /// `e^{-x}` for `x > 0`.
    pub fn exp_neg(x: &Real) -> Result<Self> {
        if *x <= 0 {
            return Err(Error::domain("e^{-x} is a nome only for x > 0"));
        }
        Nome::new(Float::with_val(x.prec(), -x).exp())
    }

    /// `e^{-π√n}`, the nome attached to the class invariant `G_n`.
    pub fn exp_neg_pi_sqrt(n: Ratio, ctx: &Context) -> Self {
        Nome::exp_neg(&(ctx.pi() * n.sqrt(ctx))).expect("π√n > 0")
    }

    pub fn value(&self) -> &Real {
        &self.0
    }

    pub fn into_value(self) -> Real {
        self.0
    }

    /// `q^k` for a positive integer `k`.
    pub fn pow(&self, k: u32) -> Nome {
        Nome(Float::with_val(self.0.prec(), self.0.pow_ref(k)))
    }

    /// `q^{num/den}` on the positive real branch; requires `0 < q < 1`.
    pub fn pow_ratio(&self, num: u64, den: u64) -> Result<Nome> {
        let q = self.require_positive()?;
        let prec = q.prec();
        let e = Float::with_val(prec, num) / Float::with_val(prec, den);
        Nome::new((e * q.clone().ln()).exp())
    }

    pub(crate) fn require_positive(&self) -> Result<&Real> {
        if self.0 <= 0 {
            return Err(Error::domain("this operation needs a real nome 0 < q < 1"));
        }
        Ok(&self.0)
    }
}

/// `(a; q)_∞ = ∏_{k≥0} (1 - a q^k)`.
///
/// Stops once `|a q^k|` has been below `10^-(digits+guard)` for two factors in a row.
pub fn qpochhammer(a: &Real, q: &Nome, ctx: &Context) -> Result<Real> {
    let prec = ctx.prec();
    let eps = ctx.epsilon();
    let mut prod = Float::with_val(prec, 1);
    if a.is_zero() {
        return Ok(prod);
    }
    let mut aq = Float::with_val(prec, a);
    let mut small_run = 0;
    for _ in 0..ctx.max_terms() {
        prod *= Float::with_val(prec, 1 - &aq);
        if Float::with_val(prec, aq.abs_ref()) < eps {
            small_run += 1;
            if small_run == 2 {
                return ensure_finite(prod, "q-Pochhammer product");
            }
        } else {
            small_run = 0;
        }
        aq *= q.value();
    }
    Err(Error::NonConvergence {
        what: "q-Pochhammer product".into(),
        max_terms: ctx.max_terms(),
    })
}

/// One side of the bilateral sum, `Σ_{n≥1} a^{n(n+1)/2} b^{n(n-1)/2}`, given `a` and `ab`.
fn half_theta(a: &Real, ab: &Real, ctx: &Context) -> Result<Real> {
    let prec = ctx.prec();
    let eps = ctx.epsilon();
    let mut sum = Float::with_val(prec, 0);
    let mut term = Float::with_val(prec, 1);
    // term_{n+1} / term_n = a^{n+1} b^n
    let mut step = Float::with_val(prec, a);
    let mut small_run = 0;
    for _ in 0..ctx.max_terms() {
        term *= &step;
        sum += &term;
        let decaying = Float::with_val(prec, step.abs_ref()) < 1;
        if decaying && Float::with_val(prec, term.abs_ref()) < eps {
            small_run += 1;
            if small_run == 2 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
        step *= ab;
    }
    Err(Error::NonConvergence {
        what: "theta series f(a, b)".into(),
        max_terms: ctx.max_terms(),
    })
}

fn check_ab(a: &Real, b: &Real, ctx: &Context) -> Result<Real> {
    let ab = Float::with_val(ctx.prec(), a * b);
    if !ab.is_finite() || Float::with_val(ctx.prec(), ab.abs_ref()) >= 1 {
        return Err(Error::domain("f(a, b) needs |ab| < 1"));
    }
    Ok(ab)
}

/// Ramanujan's general theta function `f(a, b)` summed directly.
pub fn f_series(a: &Real, b: &Real, ctx: &Context) -> Result<Real> {
    let ab = check_ab(a, b, ctx)?;
    let right = half_theta(a, &ab, ctx)?;
    let left = half_theta(b, &ab, ctx)?;
    ensure_finite(1 + right + left, "f(a, b)")
}

/// `f(a, b)` through the Jacobi triple product `(-a;ab)(-b;ab)(ab;ab)`.
pub fn f_product(a: &Real, b: &Real, ctx: &Context) -> Result<Real> {
    let ab = check_ab(a, b, ctx)?;
    let q = Nome::new(ab.clone())?;
    let neg_a = Float::with_val(ctx.prec(), -a);
    let neg_b = Float::with_val(ctx.prec(), -b);
    Ok(qpochhammer(&neg_a, &q, ctx)? * qpochhammer(&neg_b, &q, ctx)? * qpochhammer(&ab, &q, ctx)?)
}

/// `φ(q) = Σ q^{n²}`.
pub fn phi(q: &Nome, ctx: &Context) -> Result<Real> {
    let prec = ctx.prec();
    let eps = ctx.epsilon();
    let q = q.value();
    let q_sq = Float::with_val(prec, q * q);
    let mut tail = Float::with_val(prec, 0);
    let mut term = Float::with_val(prec, 1);
    // q^{(n+1)²} = q^{n²} · q^{2n+1}
    let mut step = Float::with_val(prec, q);
    let mut small_run = 0;
    for _ in 0..ctx.max_terms() {
        term *= &step;
        tail += &term;
        if Float::with_val(prec, term.abs_ref()) < eps {
            small_run += 1;
            if small_run == 2 {
                return Ok(1 + tail * 2u32);
            }
        } else {
            small_run = 0;
        }
        step *= &q_sq;
    }
    Err(Error::NonConvergence {
        what: "theta series φ(q)".into(),
        max_terms: ctx.max_terms(),
    })
}

/// `χ(q) = (-q; q²)_∞`.
pub fn chi(q: &Nome, ctx: &Context) -> Result<Real> {
    let neg_q = Float::with_val(ctx.prec(), -q.value());
    qpochhammer(&neg_q, &q.pow(2), ctx)
}

/// `u_k = q^{k²/n} f(q^{n-2k}, q^{n+2k})` for odd `n ≥ 3`, `0 ≤ k < n`, `0 < q < 1`.
pub fn u_component(q: &Nome, n: u32, k: u32, ctx: &Context) -> Result<Real> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::domain(format!("u_k needs an odd n ≥ 3, got {n}")));
    }
    if k >= n {
        return Err(Error::domain(format!("u_k needs 0 ≤ k < n, got k = {k}, n = {n}")));
    }
    let qv = q.require_positive()?;
    let prec = ctx.prec();
    let a = Float::with_val(prec, Pow::pow(qv, n as i32 - 2 * k as i32));
    let b = Float::with_val(prec, qv.pow_ref(n + 2 * k));
    let lead = if k == 0 {
        Float::with_val(prec, 1)
    } else {
        q.pow_ratio(u64::from(k * k), u64::from(n))?.into_value()
    };
    Ok(lead * f_series(&a, &b, ctx)?)
}

/// `(u, v, w) = (2u₁/u₀, 2u₂/u₀, 2u₃/u₀)` at degree 7, straight from the series.
///
/// `q = 0` gives `(0, 0, 0)`.
pub fn uvw_series(q: &Nome, ctx: &Context) -> Result<(Real, Real, Real)> {
    if q.value().is_zero() {
        let z = ctx.real(0);
        return Ok((z.clone(), z.clone(), z));
    }
    let u0 = u_component(q, 7, 0, ctx)?;
    let scaled = |k| -> Result<Real> { Ok(u_component(q, 7, k, ctx)? * 2u32 / &u0) };
    Ok((scaled(1)?, scaled(2)?, scaled(3)?))
}

/// `φ(q)/φ(q^d)`; square it for the multiplier of degree `d`.
pub fn phi_ratio(q: &Nome, d: u32, ctx: &Context) -> Result<Real> {
    if d == 0 {
        return Err(Error::domain("degree must be positive"));
    }
    q.require_positive()?;
    if d == 1 {
        return Ok(ctx.real(1));
    }
    Ok(phi(q, ctx)? / phi(&q.pow(d), ctx)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::{agree_digits, pow_ratio};

    fn ctx(d: u32) -> Context {
        Context::new(d).unwrap()
    }

    fn nome(c: &Context, q: f64) -> Nome {
        Nome::new(c.real(Float::parse(q.to_string()).unwrap())).unwrap()
    }

    fn dec(c: &Context, s: &str) -> Real {
        c.real(Float::parse(s).unwrap())
    }

    #[test]
    fn pochhammer_examples() {
        let c = ctx(40);
        let q = nome(&c, 0.01);
        assert_eq!(qpochhammer(&c.real(0), &q, &c).unwrap(), 1);
        // (1.1)(1.001)(1.00001)(1.0000001)… = 1.10111112…
        let got = qpochhammer(&dec(&c, "-0.1"), &q, &c).unwrap();
        assert!(crate::precision::to_decimal(&got, 9).starts_with("1.10111112"));
        // sixty-factor partial product at higher precision
        let hi = ctx(80);
        let half = dec(&hi, "0.5");
        let mut brute = hi.real(1);
        let mut aq = half.clone();
        for _ in 0..300 {
            brute *= Float::with_val(hi.prec(), 1 - &aq);
            aq *= &half;
        }
        let got = qpochhammer(&dec(&c, "0.5"), &nome(&c, 0.5), &c).unwrap();
        assert!(agree_digits(&got, &brute) >= 40);
    }

    #[test]
    fn pochhammer_rejects_and_caps() {
        let c = ctx(20);
        assert!(Nome::new(c.real(1)).is_err());
        assert!(Nome::new(c.real(-1.5)).is_err());
        let tight = c.with_max_terms(5).unwrap();
        let err = qpochhammer(&c.real(0.5), &nome(&c, 0.9), &tight).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn theta_series_examples() {
        let c = ctx(30);
        assert_eq!(f_series(&c.real(0), &c.real(0), &c).unwrap(), 1);
        let q = dec(&c, "0.1");
        let f = f_series(&q, &q, &c).unwrap();
        // 1 + 2q + 2q⁴ + 2q⁹ + 2q^16 + …
        assert!(crate::precision::to_decimal(&f, 11).starts_with("1.2002000020"));
        let (a, b) = (dec(&c, "0.2"), dec(&c, "0.3"));
        assert!(agree_digits(&f_series(&a, &b, &c).unwrap(), &f_series(&b, &a, &c).unwrap()) >= 30);
        assert!(f_series(&c.real(2), &c.real(0.6), &c).is_err());
    }

    #[test]
    fn triple_product_examples() {
        let c = ctx(40);
        assert_eq!(f_product(&c.real(0), &c.real(0), &c).unwrap(), 1);
        let (a, b) = (dec(&c, "0.2"), dec(&c, "0.3"));
        let s = f_series(&a, &b, &c).unwrap();
        let p = f_product(&a, &b, &c).unwrap();
        assert!(agree_digits(&s, &p) >= 38);
        let q = dec(&c, "0.1");
        let p = f_product(&q, &q, &c).unwrap();
        assert!(agree_digits(&p, &phi(&nome(&c, 0.1), &c).unwrap()) >= 38);
        // f(a, 0) = 1 + a
        let p = f_product(&c.real(0.25), &c.real(0), &c).unwrap();
        assert_eq!(p, 1.25);
    }

    #[test]
    fn phi_examples() {
        let c = ctx(60);
        assert_eq!(phi(&Nome::new(c.real(0)).unwrap(), &c).unwrap(), 1);
        let p = phi(&nome(&c, 0.1), &c).unwrap();
        assert!(crate::precision::to_decimal(&p, 11).starts_with("1.2002000020"));
        // φ(e^{-π}) = π^{1/4}/Γ(3/4)
        let q = Nome::exp_neg(&c.pi()).unwrap();
        let closed = pow_ratio(&c.pi(), 1, 4, &c).unwrap() / crate::precision::gamma_rational(3, 4, &c).unwrap();
        assert!(agree_digits(&phi(&q, &c).unwrap(), &closed) >= 58);
        // negative nome is fine for the plain series: φ(-q) = 1 - 2q + 2q⁴ - 2q⁹ + …
        let neg = phi(&Nome::new(dec(&c, "-0.1")).unwrap(), &c).unwrap();
        assert!(crate::precision::to_decimal(&neg, 10).starts_with("0.8001999980"));
    }

    #[test]
    fn chi_examples() {
        let c = ctx(40);
        assert_eq!(chi(&Nome::new(c.real(0)).unwrap(), &c).unwrap(), 1);
        let x = chi(&nome(&c, 0.1), &c).unwrap();
        assert!(crate::precision::to_decimal(&x, 9).starts_with("1.10111112"));
        // φ(q) = χ(q)² (q²; q²)_∞
        let q = nome(&c, 0.3);
        let q2 = q.pow(2);
        let prod = chi(&q, &c).unwrap().square() * qpochhammer(q2.value(), &q2, &c).unwrap();
        assert!(agree_digits(&prod, &phi(&q, &c).unwrap()) >= 38);
    }

    #[test]
    fn u_component_examples() {
        let c = ctx(50);
        let q = nome(&c, 0.3);
        let u0 = u_component(&q, 7, 0, &c).unwrap();
        assert!(agree_digits(&u0, &phi(&q.pow(7), &c).unwrap()) >= 48);
        let total = (0..7).fold(c.real(0), |acc, k| acc + u_component(&q, 7, k, &c).unwrap());
        let phi_root = phi(&q.pow_ratio(1, 7).unwrap(), &c).unwrap();
        assert!(agree_digits(&total, &phi_root) >= 48);
        let u2 = u_component(&q, 7, 2, &c).unwrap();
        let u5 = u_component(&q, 7, 5, &c).unwrap();
        assert!(agree_digits(&u2, &u5) >= 48);
        assert!(u_component(&q, 6, 1, &c).is_err());
        assert!(u_component(&q, 7, 7, &c).is_err());
        assert!(u_component(&Nome::new(c.real(-0.3)).unwrap(), 7, 1, &c).is_err());
    }

    #[test]
    fn uvw_examples() {
        let c = ctx(50);
        let (u, v, w) = uvw_series(&Nome::new(c.real(0)).unwrap(), &c).unwrap();
        assert!(u.is_zero() && v.is_zero() && w.is_zero());
        let (u, v, w) = uvw_series(&nome(&c, 0.3), &c).unwrap();
        assert!(u < 2 && u > v && v > w && w > 0);
    }

    #[test]
    fn phi_ratio_examples() {
        let c = ctx(50);
        assert_eq!(phi_ratio(&nome(&c, 0.4), 1, &c).unwrap(), 1);
        let q = Nome::exp_neg(&(c.pi() / c.real(7).sqrt())).unwrap();
        let r = phi_ratio(&q, 7, &c).unwrap();
        assert!(agree_digits(&r.clone().square().square(), &c.real(7)) >= 48);
        assert!(phi_ratio(&q, 0, &c).is_err());
    }
}

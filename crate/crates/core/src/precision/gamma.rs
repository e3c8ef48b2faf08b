//! Γ at positive rational arguments.
//!
//! The argument is shifted upward by an integer `N` until Stirling's series
//! for `ln Γ` converges to working precision, then brought back down with
//! `Γ(x) = Γ(x + N) / (x (x+1) ⋯ (x+N-1))`.

use std::sync::Mutex;

use rug::{Float, Rational};

use super::{ensure_finite, Context, Real};
use crate::error::{Error, Result};

/// Even-index Bernoulli numbers `B_0, B_2, B_4, …`, grown on demand.
static EVEN_BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

fn even_bernoulli(count: usize) -> Vec<Rational> {
    let mut cache = EVEN_BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if cache.len() < count {
        // Akiyama–Tanigawa: row m starts at 1/(m+1); folding it gives B_m.
        let top = 2 * count;
        let mut row: Vec<Rational> = Vec::with_capacity(top + 1);
        let mut all = Vec::with_capacity(top + 1);
        for m in 0..=top {
            row.push(Rational::from((1, m as u64 + 1)));
            for j in (1..=m).rev() {
                let d = Rational::from(&row[j - 1] - &row[j]);
                row[j - 1] = d * j as u64;
            }
            all.push(row[0].clone());
        }
        *cache = all.into_iter().step_by(2).take(count).collect();
    }
    cache[..count].to_vec()
}

/// Stirling's series for `ln Γ(z)`, valid for large positive `z`.
fn ln_gamma_stirling(z: &Float, ctx: &Context) -> Result<Float> {
    let prec = ctx.prec();
    let eps = ctx.epsilon();
    let half = Float::with_val(prec, 0.5);
    let two_pi = ctx.pi() * 2u32;
    let mut sum = Float::with_val(prec, z - &half) * z.clone().ln() - z + two_pi.ln() / 2u32;

    let z_sq = Float::with_val(prec, z * z);
    let mut z_pow = z.clone();
    let mut batch = 32;
    let mut k = 1;
    loop {
        let bern = even_bernoulli(batch + 1);
        while k <= batch {
            let coeff = Float::with_val(prec, &bern[k]) / ((2 * k) as u64 * (2 * k - 1) as u64);
            let term = coeff / &z_pow;
            let small = Float::with_val(prec, term.abs_ref()) < eps;
            sum += term;
            if small {
                return Ok(sum);
            }
            z_pow *= &z_sq;
            k += 1;
        }
        if batch >= 4096 {
            return Err(Error::NonConvergence {
                what: "Stirling series for ln Γ".into(),
                max_terms: batch,
            });
        }
        batch *= 2;
    }
}

fn gamma_of(x: &Rational, ctx: &Context) -> Result<Real> {
    if *x <= 0 {
        return Err(Error::domain(format!("Γ({x}) requested; argument must be positive")));
    }
    let prec = ctx.prec();
    // Minimum Stirling term is about e^{-2πz}; this keeps it well below 10^-working.
    let z_min = (0.4 * f64::from(ctx.working_digits())).ceil() as u64 + 10;
    let floor = x.to_f64().floor() as u64;
    let shift = z_min.saturating_sub(floor);
    let x_real = Float::with_val(prec, x);
    let z = Float::with_val(prec, &x_real + shift);
    let ln_g = ln_gamma_stirling(&z, ctx)?;
    let mut denom = Float::with_val(prec, 1);
    for j in 0..shift {
        denom *= Float::with_val(prec, &x_real + j);
    }
    ensure_finite(ln_g.exp() / denom, "Γ")
}

/// `Γ(num/den)` for a positive rational argument.
pub fn gamma_rational(num: i64, den: u64, ctx: &Context) -> Result<Real> {
    if den == 0 {
        return Err(Error::domain("Γ argument has zero denominator"));
    }
    gamma_of(&Rational::from((num, den)), ctx)
}

/// `B(x, y) = Γ(x)Γ(y)/Γ(x+y)` with `x + y` formed exactly.
pub fn beta_rational(x: &Rational, y: &Rational, ctx: &Context) -> Result<Real> {
    let sum = Rational::from(x + y);
    Ok(gamma_of(x, ctx)? * gamma_of(y, ctx)? / gamma_of(&sum, ctx)?)
}

/// `Γ(x)` for an exact rational `x`, used by the expression evaluator.
pub fn gamma_ratio(x: &Rational, ctx: &Context) -> Result<Real> {
    gamma_of(x, ctx)
}

//! Working-precision contract shared by every numerical routine.
//!
//! Values are plain [`rug::Float`]s. A [`Context`] says how many decimal
//! digits the caller wants; every routine computes at `digits + guard_digits`
//! and the caller judges results against `digits`.

mod gamma;
mod ratio;

pub use gamma::{beta_rational, gamma_ratio, gamma_rational};
pub use ratio::Ratio;

use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::{Assign, Float};

use crate::error::{Error, Result};

/// Arbitrary-precision real. Its binary precision is fixed by the context
/// it was created under.
pub type Real = Float;

/// `x^k` at the precision of `x`, leaving `x` untouched.
pub trait PowRef {
    fn pow_ref(&self, k: u32) -> Float;
}

impl PowRef for Float {
    fn pow_ref(&self, k: u32) -> Float {
        Float::with_val(self.prec(), Pow::pow(self, k))
    }
}

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Context {
    digits: u32,
    guard_digits: u32,
    max_terms: usize,
}

impl Context {
    pub const MIN_DIGITS: u32 = 10;
    pub const MIN_GUARD_DIGITS: u32 = 5;
    pub const DEFAULT_GUARD_DIGITS: u32 = 10;
    pub const DEFAULT_MAX_TERMS: usize = 100_000;

    pub fn new(digits: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::InvalidPrecision(format!(
                "{digits} digits requested, at least {} required",
                Self::MIN_DIGITS
            )));
        }
        Ok(Context {
            digits,
            guard_digits: Self::DEFAULT_GUARD_DIGITS,
            max_terms: Self::DEFAULT_MAX_TERMS,
        })
    }

    pub fn with_guard_digits(mut self, guard_digits: u32) -> Result<Self> {
        if guard_digits < Self::MIN_GUARD_DIGITS {
            return Err(Error::InvalidPrecision(format!(
                "{guard_digits} guard digits requested, at least {} required",
                Self::MIN_GUARD_DIGITS
            )));
        }
        self.guard_digits = guard_digits;
        Ok(self)
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::InvalidPrecision("max_terms must be positive".into()));
        }
        self.max_terms = max_terms;
        Ok(self)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// Decimal digits actually carried internally.
    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard_digits
    }

    /// Binary precision of every `Float` created under this context.
    pub fn prec(&self) -> u32 {
        (f64::from(self.working_digits()) * LOG2_10).ceil() as u32 + 16
    }

    /// Same context with the requested digits doubled.
    pub fn escalated(&self) -> Context {
        Context {
            digits: self.digits * 2,
            ..*self
        }
    }

    pub fn real<T>(&self, value: T) -> Float
    where
        Float: Assign<T>,
    {
        Float::with_val(self.prec(), value)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.prec(), Constant::Pi)
    }

    /// `10^-(digits + guard)`: the truncation threshold for series and products.
    pub fn epsilon(&self) -> Float {
        self.pow10(-(self.working_digits() as i32))
    }

    /// `10^-(digits - margin)`: the bar a result must clear to be "accurate
    /// to digits - margin".
    pub fn tolerance(&self, margin: u32) -> Float {
        self.pow10(-(self.digits as i32 - margin as i32))
    }

    fn pow10(&self, exp: i32) -> Float {
        self.real(10).pow(exp)
    }
}

/// Builds a context with default guard digits and term cap.
pub fn make_context(digits: u32) -> Result<Context> {
    Context::new(digits)
}

pub fn const_pi(ctx: &Context) -> Real {
    ctx.pi()
}

/// `cos(kπ/m)`. Angles whose cosine is 0, ±1/2 or ±1 come back exact.
pub fn cos_rational_pi(k: i64, m: u64, ctx: &Context) -> Result<Real> {
    if m == 0 {
        return Err(Error::domain("cos(kπ/m) needs m ≥ 1"));
    }
    let period = 2 * m as i128;
    let r = (k as i128).rem_euclid(period);
    let m = m as i128;
    let exact = match () {
        _ if r == 0 => Some(1.0),
        _ if r == m => Some(-1.0),
        _ if 2 * r == m || 2 * r == 3 * m => Some(0.0),
        _ if 3 * r == m || 3 * r == 5 * m => Some(0.5),
        _ if 3 * r == 2 * m || 3 * r == 4 * m => Some(-0.5),
        _ => None,
    };
    if let Some(v) = exact {
        return Ok(ctx.real(v));
    }
    let angle = ctx.pi() * Float::with_val(ctx.prec(), r) / Float::with_val(ctx.prec(), m);
    Ok(angle.cos())
}

/// Leading decimal digits on which `a` and `b` agree, measured relative to
/// `max(|a|, 1)`. Exact equality returns the number of digits the operands'
/// precision can represent.
pub fn agree_digits(a: &Real, b: &Real) -> i64 {
    let prec = a.prec().max(b.prec());
    let exact = (f64::from(prec) / LOG2_10).floor() as i64;
    let diff = Float::with_val(prec, a - b).abs();
    if diff.is_zero() {
        return exact;
    }
    let scale = Float::with_val(prec, a.abs_ref()).max(&Float::with_val(prec, 1));
    let rel = diff / scale;
    // The small slack absorbs representation error of decimal inputs such as 1e-7.
    let digits = (-rel.log10().to_f64() + 1e-9).floor();
    if digits.is_nan() {
        return 0;
    }
    (digits as i64).clamp(0, exact)
}

/// `x` as a positional decimal string with `digits` significant digits.
///
/// The value is first rounded to nearest at `digits + 5` digits and then
/// truncated, so the output is stable under small working-precision noise
/// (an exact 41 computed as 40.999…9 still prints as 41.000…).
pub fn to_decimal(x: &Real, digits: u32) -> String {
    let digits = digits.max(1) as usize;
    if x.is_zero() {
        return format!("0.{}", "0".repeat(digits.saturating_sub(1)));
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let (negative, mantissa, exp) = x.to_sign_string_exp_round(10, Some(digits + 5), Round::Nearest);
    let exp = exp.unwrap_or(0) as i64;
    let kept: String = mantissa.chars().take(digits).collect();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp <= 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-exp) as usize));
        out.push_str(&kept);
    } else if exp as usize >= kept.len() {
        out.push_str(&kept);
        out.push_str(&"0".repeat(exp as usize - kept.len()));
    } else {
        out.push_str(&kept[..exp as usize]);
        out.push('.');
        out.push_str(&kept[exp as usize..]);
    }
    out
}

pub(crate) fn ensure_finite(x: Real, what: &str) -> Result<Real> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::domain(format!("{what} is not finite")))
    }
}

/// `x^(num/den)` on the positive real branch.
pub(crate) fn pow_ratio(x: &Real, num: i64, den: u64, ctx: &Context) -> Result<Real> {
    if x.is_sign_negative() && !x.is_zero() {
        return Err(Error::domain("fractional power of a negative number"));
    }
    let exponent = Float::with_val(ctx.prec(), num) / Float::with_val(ctx.prec(), den);
    ensure_finite(Float::with_val(ctx.prec(), x.pow(&exponent)), "fractional power")
}

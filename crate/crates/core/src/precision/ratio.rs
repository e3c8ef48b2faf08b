use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rug::{Float, Rational};

use super::Context;
use crate::error::{Error, Result};

/// Exact positive rational, kept in lowest terms.
///
/// Used for the `n` in `q = e^{-π√n}` so that `√n` is only ever rounded once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::domain(format!("{num}/{den} is not a positive rational")));
        }
        let g = num.gcd(&den);
        Ok(Ratio {
            num: num / g,
            den: den / g,
        })
    }

    pub const fn integer(n: u64) -> Self {
        assert!(n > 0);
        Ratio { num: n, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn recip(&self) -> Self {
        Ratio {
            num: self.den,
            den: self.num,
        }
    }

    pub fn scale(&self, k: u64) -> Self {
        Ratio::new(self.num * k, self.den).expect("positive times positive")
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from((self.num, self.den))
    }

    pub fn to_real(&self, ctx: &Context) -> Float {
        ctx.real(&self.to_rational())
    }

    /// `√(num·den)/den`, so a perfect-square numerator and denominator stay exact.
    pub fn sqrt(&self, ctx: &Context) -> Float {
        let nd = ctx.real(self.num) * ctx.real(self.den);
        nd.sqrt() / ctx.real(self.den)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("`{s}` is not a positive rational"));
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num = num.parse().map_err(|_| bad())?;
        let den = den.parse().map_err(|_| bad())?;
        Ratio::new(num, den)
    }
}

impl TryFrom<&Rational> for Ratio {
    type Error = Error;

    fn try_from(r: &Rational) -> Result<Self> {
        let bad = || Error::domain(format!("{r} is not a positive rational of machine size"));
        let num = r.numer().to_u64().ok_or_else(bad)?;
        let den = r.denom().to_u64().ok_or_else(bad)?;
        Ratio::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_parses() {
        let r: Ratio = "14/98".parse().unwrap();
        assert_eq!(r, Ratio::new(1, 7).unwrap());
        assert_eq!(r.to_string(), "1/7");
        assert_eq!(r.recip().to_string(), "7");
        assert_eq!(Ratio::integer(7).scale(49), Ratio::integer(343));
        assert!("0".parse::<Ratio>().is_err());
        assert!("x/3".parse::<Ratio>().is_err());
    }

    #[test]
    fn sqrt_of_square_is_exact() {
        let ctx = Context::new(30).unwrap();
        assert_eq!(Ratio::integer(49).sqrt(&ctx), 7);
        assert_eq!(Ratio::new(1, 49).unwrap().sqrt(&ctx), ctx.real(1) / 7);
    }
}

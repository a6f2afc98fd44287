//! Exact rational scalars and their text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision rational number; every quantity in this crate that is
/// not a plain count is one of these.
pub type Ratio = num_rational::BigRational;

/// Builds a rational from a signed numerator/denominator pair.
///
/// Panics when `q == 0`; intended for literals in code and tests.
pub fn rat(p: i64, q: i64) -> Ratio {
    Ratio::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from an integer.
pub fn int(p: i64) -> Ratio {
    Ratio::from_integer(BigInt::from(p))
}

/// Rational from an unsigned count.
pub fn from_usize(p: usize) -> Ratio {
    Ratio::from_integer(BigInt::from(p))
}

/// Renders a rational in lowest terms as `p/q`, or just `p` when the
/// denominator is 1.
pub fn format_ratio(r: &Ratio) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q` or a plain decimal like `-0.9392` into an exact
/// rational.
pub fn parse_ratio(text: &str) -> Result<Ratio, Error> {
    let s = text.trim();
    let bad = || Error::BadRational(s.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let numer: BigInt = p.trim().parse().map_err(|_| bad())?;
        let denom: BigInt = q.trim().parse().map_err(|_| bad())?;
        if denom.is_zero() {
            return Err(bad());
        }
        return Ok(Ratio::new(numer, denom));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().map_err(|_| bad())?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u8).pow(frac.len() as u32);
        let magnitude = Ratio::from_integer(whole.abs()) + Ratio::new(digits, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let numer: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Ratio::from_integer(numer))
}

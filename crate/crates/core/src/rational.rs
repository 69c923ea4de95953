//! Exact rational helpers on top of `malachite_q::Rational`.

use malachite_base::num::arithmetic::traits::Sign;
pub use malachite_q::Rational;
use std::cmp::Ordering;
use std::str::FromStr;

use crate::error::{Error, Result};

#[inline]
pub fn q(num: i64, den: i64) -> Rational {
    Rational::from_signeds(num, den)
}

#[inline]
pub fn qi(num: i64) -> Rational {
    Rational::from(num)
}

pub fn half() -> Rational {
    q(1, 2)
}

/// Parses `"p/q"` or an integer string. Leading `+`/`-` accepted on the numerator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::parse(0, "expected a rational"));
    }
    let t = t.strip_prefix('+').unwrap_or(t);
    let t = t.replace('\u{2212}', "-");
    if let Some((n, d)) = t.split_once('/') {
        if d.trim().starts_with('-') {
            return Err(Error::parse(0, format!("bad rational {s:?}")));
        }
        let n = Rational::from_str(n.trim()).map_err(|_| Error::parse(0, format!("bad rational {s:?}")))?;
        let d = Rational::from_str(d.trim()).map_err(|_| Error::parse(0, format!("bad rational {s:?}")))?;
        if d == 0u32 {
            return Err(Error::parse(0, "zero denominator"));
        }
        Ok(n / d)
    } else {
        Rational::from_str(&t).map_err(|_| Error::parse(0, format!("bad rational {s:?}")))
    }
}

/// `Some(k)` when `x` is an integer that fits in `i64`.
pub fn to_i64(x: &Rational) -> Option<i64> {
    i64::try_from(x).ok()
}

/// `Some(k)` when `x` is a nonnegative integer that fits in `u64`.
pub fn to_u64(x: &Rational) -> Option<u64> {
    u64::try_from(x).ok()
}

pub fn is_negative(x: &Rational) -> bool {
    x.sign() == Ordering::Less
}

pub fn is_positive(x: &Rational) -> bool {
    x.sign() == Ordering::Greater
}

pub fn is_integer(x: &Rational) -> bool {
    *x.denominator_ref() == 1u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-2").unwrap(), qi(-2));
        assert_eq!(parse_rational("6/8").unwrap(), q(3, 4));
        assert_eq!(parse_rational(" +1/2 ").unwrap(), half());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn display_is_p_over_q() {
        assert_eq!(q(-3, 6).to_string(), "-1/2");
        assert_eq!(qi(5).to_string(), "5");
    }
}

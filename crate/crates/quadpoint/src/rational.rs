//! Exact rational coefficients.
//!
//! Every coefficient in this crate is an arbitrary-precision rational kept in
//! lowest terms with a positive denominator. `num::BigRational` already
//! maintains both invariants, so `Rat` is an alias plus a few constructors
//! and the `"num/den"` string form used by the JSON schema.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Rat = BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `num/den`, reduced. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rat {
    assert!(den != 0, "ratio: zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn is_nonneg_integer(r: &Rat) -> bool {
    is_integer(r) && !r.is_negative()
}

/// Exact fraction string, always with an explicit denominator: `"-3/2"`, `"5/1"`.
pub fn format_frac(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer string.
pub fn parse_frac(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.trim().parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_strings_round_trip() {
        let r = ratio(-21, 14);
        assert_eq!(format_frac(&r), "-3/2");
        assert_eq!(parse_frac("-3/2").unwrap(), r);
        assert_eq!(parse_frac("7").unwrap(), rat(7));
        assert!(parse_frac("1/0").is_none());
    }

    #[test]
    fn catalan_numbers() {
        let want = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(catalan(n as u64), BigInt::from(*w));
        }
    }

    #[test]
    fn binomial_edge_cases() {
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(9, 3), BigInt::from(84));
    }
}
